//! Profunctor optics.
//!
//! A profunctor optic is a transformation `p a b -> p s t` that works for every
//! profunctor able to lift through the shapes of its functor family. Rank-2
//! polymorphism is realized by dictionary passing: the optic receives a
//! [`Capability`] record and an opaque [`ProfValue`] carrier, and may only
//! touch the carrier through the record.

mod capabilities;

pub use capabilities::{
    enhance_structural, enhance_via_right, enhance_via_second, FunctionArrow, Getting, GettingCap,
    IsoCapability, Matching, MatchingCap, OpticCapability, Reviewing, ReviewingCap,
};

use std::any::Any;
use std::fmt;
use std::sync::Arc;

use crate::error::{OpticError, Result};
use crate::families::OpticFamily;
use crate::functors::monoid::{FunctorMonoid, IsProduct, IsSum, Subfamily};
use crate::functors::{FamilyMarker, FunctorFamily, Residual, Shape};
use crate::iso::{enhance_to_arrow, Enhanceable, IsoOptic};
use crate::value::{func, identity, match_fn, Either, Func, MatchFn, Value};

/// An opaque profunctor value `p a b`.
#[derive(Clone)]
pub struct ProfValue(Arc<dyn Any + Send + Sync>);

impl ProfValue {
    pub fn new<T: Any + Send + Sync>(carrier: T) -> Self {
        ProfValue(Arc::new(carrier))
    }

    /// Recovers the carrier; for use by the capability that created it.
    pub fn downcast<T: Any>(&self, cap: &(impl Capability + ?Sized)) -> Result<&T> {
        self.0.downcast_ref::<T>().ok_or_else(|| OpticError::TypeMismatch {
            expected: "carrier of the supplied capability",
            found: format!("a value foreign to `{}`", cap.name()),
        })
    }
}

impl fmt::Debug for ProfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ProfValue(..)")
    }
}

/// A profunctor with `dimap` and per-shape `enhance`.
///
/// Laws: `dimap(id, id) = id`;
/// `dimap(f' ∘ f, g ∘ g') = dimap(f, g) ∘ dimap(f', g')`;
/// `enhance(Id) = dimap(unId, Id)`;
/// `enhance(Compose(f, g)) = dimap(unCompose, Compose) ∘ enhance(f) ∘ enhance(g)`;
/// the wedge condition `dimap(id, α) ∘ enhance(f) = dimap(α, id) ∘ enhance(g)`;
/// `enhance(f) ∘ dimap(k, l) = dimap(fmap k, fmap l) ∘ enhance(f)`.
pub trait Capability: Send + Sync {
    fn name(&self) -> String;

    /// Whether `enhance` is defined for every member of `family`.
    fn covers(&self, family: FunctorFamily) -> bool;

    /// `dimap f g p` with `f: s' -> s`, `g: t -> t'`.
    fn dimap(&self, f: &Func, g: &Func, p: &ProfValue) -> Result<ProfValue>;

    /// `p a b -> p (F a) (F b)`.
    fn enhance(&self, shape: &Shape, p: &ProfValue) -> Result<ProfValue>;
}

/// `second: p a b -> p (c, a) (c, b)`.
pub trait Cartesian: Capability {
    fn second(&self, residual: &Residual, p: &ProfValue) -> Result<ProfValue>;
}

/// `right: p a b -> p (c + a) (c + b)`.
pub trait Cocartesian: Capability {
    fn right(&self, residual: &Residual, p: &ProfValue) -> Result<ProfValue>;
}

type Transform = Arc<dyn Fn(&dyn Capability, &ProfValue) -> Result<ProfValue> + Send + Sync>;

/// A profunctor optic over the functor family `M`.
pub struct ProfOptic<M> {
    run: Transform,
    family: FamilyMarker<M>,
}

impl<M> Clone for ProfOptic<M> {
    fn clone(&self) -> Self {
        ProfOptic {
            run: self.run.clone(),
            family: FamilyMarker::default(),
        }
    }
}

impl<M: FunctorMonoid> ProfOptic<M> {
    /// Wraps a transformation. It must only use `dimap` and `enhance` at
    /// members of `M`.
    pub fn from_transform<F>(run: F) -> Self
    where
        F: Fn(&dyn Capability, &ProfValue) -> Result<ProfValue> + Send + Sync + 'static,
    {
        ProfOptic {
            run: Arc::new(run),
            family: FamilyMarker::default(),
        }
    }

    pub fn family() -> FunctorFamily {
        M::FAMILY
    }

    /// Runs the optic; fails when `cap` does not cover `M`.
    pub fn apply(&self, cap: &dyn Capability, p: &ProfValue) -> Result<ProfValue> {
        if !cap.covers(M::FAMILY) {
            return Err(OpticError::UnsupportedCapability {
                capability: cap.name(),
                family: M::FAMILY.to_string(),
            });
        }
        (self.run)(cap, p)
    }

    /// `λcap, p. cap.enhance(shape, p)`.
    pub fn enhance(shape: &Shape) -> Result<Self> {
        M::FAMILY.require(shape)?;
        let shape = shape.clone();
        Ok(Self::from_transform(move |cap, p| cap.enhance(&shape, p)))
    }

    /// Reinterprets the optic in a larger functor family.
    pub fn widen<N: FunctorMonoid>(&self) -> ProfOptic<N>
    where
        M: Subfamily<N>,
    {
        ProfOptic {
            run: self.run.clone(),
            family: FamilyMarker::default(),
        }
    }
}

impl<M: FunctorMonoid> OpticFamily for ProfOptic<M> {
    type Value = Value;

    fn inj(fwd: Func, bwd: Func) -> Self {
        Self::from_transform(move |cap, p| cap.dimap(&fwd, &bwd, p))
    }

    fn compose(&self, inner: &Self) -> Self {
        let (outer, inner) = (self.run.clone(), inner.run.clone());
        Self::from_transform(move |cap, p| outer(cap, &inner(cap, p)?))
    }

    fn map_optic(&self, h: Func) -> Func {
        let lifted = self
            .apply(&FunctionArrow, &ProfValue::new(h))
            .and_then(|p| p.downcast::<Func>(&FunctionArrow).cloned());
        match lifted {
            Ok(f) => f,
            Err(e) => func(move |_: &Value| Err(e.clone())),
        }
    }
}

impl<M: FunctorMonoid> Enhanceable<M> for ProfOptic<M> {
    fn enhance_op(shape: &Shape) -> Result<Self> {
        ProfOptic::enhance(shape)
    }
}

impl<M: FunctorMonoid> fmt::Debug for ProfOptic<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProfOptic<{}>", M::FAMILY)
    }
}

/// `get l = unGetting (l idGetting)`.
pub fn get_operator<M: FunctorMonoid>(l: &ProfOptic<M>) -> Result<Func> {
    require_operator::<M>(&GettingCap, "get")?;
    let out = l.apply(&GettingCap, &ProfValue::new(Getting(identity())))?;
    Ok(out.downcast::<Getting>(&GettingCap)?.0.clone())
}

/// `match l = unMatching (l idMatching)` with `idMatching = Matching Right`.
pub fn match_operator<M: FunctorMonoid>(l: &ProfOptic<M>) -> Result<MatchFn> {
    require_operator::<M>(&MatchingCap, "match")?;
    let id = Matching(match_fn(|a: &Value| Ok(Either::Right(a.clone()))));
    let out = l.apply(&MatchingCap, &ProfValue::new(id))?;
    Ok(out.downcast::<Matching>(&MatchingCap)?.0.clone())
}

/// `build l = unReviewing (l (Reviewing id))`.
pub fn build_operator<M: FunctorMonoid>(l: &ProfOptic<M>) -> Result<Func> {
    require_operator::<M>(&ReviewingCap, "build")?;
    let out = l.apply(&ReviewingCap, &ProfValue::new(Reviewing(identity())))?;
    Ok(out.downcast::<Reviewing>(&ReviewingCap)?.0.clone())
}

fn require_operator<M: FunctorMonoid>(cap: &dyn Capability, operator: &'static str) -> Result<()> {
    if cap.covers(M::FAMILY) {
        Ok(())
    } else {
        Err(OpticError::UnsupportedOperator {
            operator,
            family: M::FAMILY.to_string(),
        })
    }
}

fn swap() -> Func {
    func(|p: &Value| {
        let (a, b) = p.as_pair()?;
        Ok(Value::pair(b.clone(), a.clone()))
    })
}

/// `second = enhance @(c, -)`.
pub fn prof_second() -> ProfOptic<IsProduct> {
    ProfOptic::enhance(&Shape::pair(Residual::named("C"))).expect("pairs have products")
}

/// `first = dimap swap swap ∘ second`.
pub fn prof_first() -> ProfOptic<IsProduct> {
    ProfOptic::inj(swap(), swap()).compose(&prof_second())
}

/// `right = enhance @(c + -)`.
pub fn prof_right() -> ProfOptic<IsSum> {
    ProfOptic::enhance(&Shape::sum(Residual::named("C"))).expect("sums have sums")
}

/// `just = dimap maybeToSum sumToMaybe ∘ right`.
pub fn prof_just() -> ProfOptic<IsSum> {
    let maybe_to_sum = func(|m: &Value| {
        Ok(match m.as_maybe()? {
            Some(a) => Value::right(a.clone()),
            None => Value::left(Value::Unit),
        })
    });
    let sum_to_maybe = func(|e: &Value| {
        Ok(match e.as_sum()? {
            Either::Left(_) => Value::Nothing,
            Either::Right(b) => Value::just(b.clone()),
        })
    });
    ProfOptic::inj(maybe_to_sum, sum_to_maybe).compose(&prof_right())
}

/// `λcap, p. cap.dimap(forward, backward, cap.enhance(shape, p))`.
pub fn iso_to_prof<M: FunctorMonoid>(iso: &IsoOptic<M>) -> ProfOptic<M> {
    enhance_to_arrow(iso).expect("isomorphism optic shapes belong to their family")
}

/// Runs `l` at the isomorphism-optic capability on the identity optic.
pub fn prof_to_iso<M: FunctorMonoid>(l: &ProfOptic<M>) -> Result<IsoOptic<M>> {
    prof_to_optic(l)
}

/// Runs `l` at the capability of any enhanceable family on its identity optic.
pub fn prof_to_optic<M: FunctorMonoid, O: Enhanceable<M>>(l: &ProfOptic<M>) -> Result<O> {
    let cap = OpticCapability::<O, M>::new();
    let out = l.apply(&cap, &ProfValue::new(O::identity()))?;
    Ok(out.downcast::<O>(&cap)?.clone())
}
