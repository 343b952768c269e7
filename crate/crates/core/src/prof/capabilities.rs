//! Concrete profunctors and their capability records.

use std::marker::PhantomData;

use super::{Capability, Cartesian, Cocartesian, ProfValue};
use crate::error::{OpticError, Result};
use crate::families::dimap_optic;
use crate::functors::monoid::FunctorMonoid;
use crate::functors::{
    affine, from_product_fn, from_sum_fn, to_product_fn, to_sum_fn, un_compose_fn, un_id_fn,
    wrap_compose_fn, wrap_id_fn, FunctorFamily, Residual, Shape,
};
use crate::iso::{Enhanceable, IsoOptic};
use crate::value::{compose_fn, func, match_fn, Either, Func, MatchFn, Value};

fn unsupported(cap: &dyn Capability, shape: &Shape) -> OpticError {
    OpticError::UnsupportedShape {
        capability: cap.name(),
        shape: shape.to_string(),
    }
}

/// Lifts through a product-capable shape: `dimap toProduct fromProduct ∘ second`.
pub fn enhance_via_second<C: Cartesian + ?Sized>(cap: &C, shape: &Shape, p: &ProfValue) -> Result<ProfValue> {
    let lifted = cap.second(&Residual::named("F ()"), p)?;
    cap.dimap(&to_product_fn(shape), &from_product_fn(shape), &lifted)
}

/// Lifts through a sum-capable shape: `dimap toSum fromSum ∘ right`.
pub fn enhance_via_right<C: Cocartesian + ?Sized>(cap: &C, shape: &Shape, p: &ProfValue) -> Result<ProfValue> {
    let lifted = cap.right(&Residual::named("F 0"), p)?;
    cap.dimap(&to_sum_fn(shape), &from_sum_fn(shape), &lifted)
}

/// `Id` and `Compose` by the Enhancing laws, leaves by `leaf`.
pub fn enhance_structural(
    cap: &dyn Capability,
    shape: &Shape,
    p: &ProfValue,
    leaf: &dyn Fn(&Shape, &ProfValue) -> Result<ProfValue>,
) -> Result<ProfValue> {
    match shape {
        Shape::Id => cap.dimap(&un_id_fn(), &wrap_id_fn(), p),
        Shape::Compose(f, g) => {
            let inner = cap.enhance(g, p)?;
            cap.dimap(&un_compose_fn(), &wrap_compose_fn(), &cap.enhance(f, &inner)?)
        }
        _ => leaf(shape, p),
    }
}

/// The function arrow `a -> b`; enhancing is `fmap`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FunctionArrow;

impl Capability for FunctionArrow {
    fn name(&self) -> String {
        "function_arrow".into()
    }

    fn covers(&self, _: FunctorFamily) -> bool {
        true
    }

    fn dimap(&self, f: &Func, g: &Func, p: &ProfValue) -> Result<ProfValue> {
        let h = p.downcast::<Func>(self)?;
        Ok(ProfValue::new(compose_fn(g, &compose_fn(h, f))))
    }

    fn enhance(&self, shape: &Shape, p: &ProfValue) -> Result<ProfValue> {
        Ok(ProfValue::new(shape.map(p.downcast::<Func>(self)?)))
    }
}

impl Cartesian for FunctionArrow {
    fn second(&self, _: &Residual, p: &ProfValue) -> Result<ProfValue> {
        let h = p.downcast::<Func>(self)?.clone();
        Ok(ProfValue::new(func(move |ca: &Value| {
            let (c, a) = ca.as_pair()?;
            Ok(Value::pair(c.clone(), h(a)?))
        })))
    }
}

impl Cocartesian for FunctionArrow {
    fn right(&self, _: &Residual, p: &ProfValue) -> Result<ProfValue> {
        let h = p.downcast::<Func>(self)?.clone();
        Ok(ProfValue::new(func(move |e: &Value| {
            Ok(match e.as_sum()? {
                Either::Left(c) => Value::left(c.clone()),
                Either::Right(a) => Value::right(h(a)?),
            })
        })))
    }
}

/// `Getting s a`: a read-only accessor, phantom in `b` and `t`.
#[derive(Clone)]
pub struct Getting(pub Func);

/// Capability record for [`Getting`].
#[derive(Clone, Copy, Debug, Default)]
pub struct GettingCap;

impl Capability for GettingCap {
    fn name(&self) -> String {
        "getting".into()
    }

    fn covers(&self, family: FunctorFamily) -> bool {
        family.le(FunctorFamily::IsProduct)
    }

    fn dimap(&self, f: &Func, _: &Func, p: &ProfValue) -> Result<ProfValue> {
        let Getting(h) = p.downcast::<Getting>(self)?;
        Ok(ProfValue::new(Getting(compose_fn(h, f))))
    }

    fn enhance(&self, shape: &Shape, p: &ProfValue) -> Result<ProfValue> {
        if shape.has_product() {
            enhance_via_second(self, shape, p)
        } else {
            Err(unsupported(self, shape))
        }
    }
}

impl Cartesian for GettingCap {
    fn second(&self, _: &Residual, p: &ProfValue) -> Result<ProfValue> {
        let Getting(h) = p.downcast::<Getting>(self)?;
        let h = h.clone();
        Ok(ProfValue::new(Getting(func(move |ca: &Value| h(ca.as_pair()?.1)))))
    }
}

/// `Matching a b s t`: `s -> t + a`.
#[derive(Clone)]
pub struct Matching(pub MatchFn);

/// Capability record for [`Matching`]; lifts through products, sums and
/// their composites.
#[derive(Clone, Copy, Debug, Default)]
pub struct MatchingCap;

impl Capability for MatchingCap {
    fn name(&self) -> String {
        "matching".into()
    }

    fn covers(&self, family: FunctorFamily) -> bool {
        family.le(FunctorFamily::Affine)
    }

    fn dimap(&self, f: &Func, g: &Func, p: &ProfValue) -> Result<ProfValue> {
        let Matching(h) = p.downcast::<Matching>(self)?;
        let (f, g, h) = (f.clone(), g.clone(), h.clone());
        Ok(ProfValue::new(Matching(match_fn(move |s: &Value| {
            Ok(match h(&f(s)?)? {
                Either::Left(t) => Either::Left(g(&t)?),
                Either::Right(a) => Either::Right(a),
            })
        }))))
    }

    fn enhance(&self, shape: &Shape, p: &ProfValue) -> Result<ProfValue> {
        if shape.has_product() {
            enhance_via_second(self, shape, p)
        } else if shape.has_sum() {
            enhance_via_right(self, shape, p)
        } else if affine().member(shape) {
            enhance_structural(self, shape, p, &|s, _| Err(unsupported(self, s)))
        } else {
            Err(unsupported(self, shape))
        }
    }
}

impl Cartesian for MatchingCap {
    fn second(&self, _: &Residual, p: &ProfValue) -> Result<ProfValue> {
        let Matching(h) = p.downcast::<Matching>(self)?;
        let h = h.clone();
        Ok(ProfValue::new(Matching(match_fn(move |ca: &Value| {
            let (c, a) = ca.as_pair()?;
            Ok(match h(a)? {
                Either::Left(t) => Either::Left(Value::pair(c.clone(), t)),
                Either::Right(x) => Either::Right(x),
            })
        }))))
    }
}

impl Cocartesian for MatchingCap {
    fn right(&self, _: &Residual, p: &ProfValue) -> Result<ProfValue> {
        let Matching(h) = p.downcast::<Matching>(self)?;
        let h = h.clone();
        Ok(ProfValue::new(Matching(match_fn(move |e: &Value| {
            Ok(match e.as_sum()? {
                Either::Left(c) => Either::Left(Value::left(c.clone())),
                Either::Right(a) => match h(a)? {
                    Either::Left(t) => Either::Left(Value::right(t)),
                    Either::Right(x) => Either::Right(x),
                },
            })
        }))))
    }
}

/// `Reviewing b t`: a constructor `b -> t`, phantom in `a` and `s`.
#[derive(Clone)]
pub struct Reviewing(pub Func);

/// Capability record for [`Reviewing`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ReviewingCap;

impl Capability for ReviewingCap {
    fn name(&self) -> String {
        "reviewing".into()
    }

    fn covers(&self, family: FunctorFamily) -> bool {
        family.le(FunctorFamily::IsSum)
    }

    fn dimap(&self, _: &Func, g: &Func, p: &ProfValue) -> Result<ProfValue> {
        let Reviewing(h) = p.downcast::<Reviewing>(self)?;
        Ok(ProfValue::new(Reviewing(compose_fn(g, h))))
    }

    fn enhance(&self, shape: &Shape, p: &ProfValue) -> Result<ProfValue> {
        if shape.has_sum() {
            enhance_via_right(self, shape, p)
        } else {
            Err(unsupported(self, shape))
        }
    }
}

impl Cocartesian for ReviewingCap {
    fn right(&self, _: &Residual, p: &ProfValue) -> Result<ProfValue> {
        let Reviewing(h) = p.downcast::<Reviewing>(self)?;
        let h = h.clone();
        Ok(ProfValue::new(Reviewing(func(move |b: &Value| Ok(Value::right(h(b)?))))))
    }
}

/// Any enhanceable optic family `O` is itself a profunctor in `(s, t)`:
/// `dimap = dimap_optic` and `enhance(f, o) = enhance_op(f) ∘ o`.
pub struct OpticCapability<O, M> {
    marker: PhantomData<fn() -> (O, M)>,
}

impl<O, M> OpticCapability<O, M> {
    pub fn new() -> Self {
        OpticCapability { marker: PhantomData }
    }
}

impl<O, M> Default for OpticCapability<O, M> {
    fn default() -> Self {
        Self::new()
    }
}

/// The capability whose carriers are isomorphism optics.
pub type IsoCapability<M> = OpticCapability<IsoOptic<M>, M>;

impl<M: FunctorMonoid, O: Enhanceable<M>> Capability for OpticCapability<O, M> {
    fn name(&self) -> String {
        format!("optic<{}>", M::FAMILY)
    }

    fn covers(&self, family: FunctorFamily) -> bool {
        family.le(M::FAMILY)
    }

    fn dimap(&self, f: &Func, g: &Func, p: &ProfValue) -> Result<ProfValue> {
        let o = p.downcast::<O>(self)?;
        Ok(ProfValue::new(dimap_optic(f.clone(), g.clone(), o)))
    }

    fn enhance(&self, shape: &Shape, p: &ProfValue) -> Result<ProfValue> {
        let o = p.downcast::<O>(self)?;
        Ok(ProfValue::new(O::enhance_op(shape)?.compose(o)))
    }
}

impl<M: FunctorMonoid, O: Enhanceable<M>> Cartesian for OpticCapability<O, M> {
    fn second(&self, residual: &Residual, p: &ProfValue) -> Result<ProfValue> {
        self.enhance(&Shape::pair(residual.clone()), p)
    }
}

impl<M: FunctorMonoid, O: Enhanceable<M>> Cocartesian for OpticCapability<O, M> {
    fn right(&self, residual: &Residual, p: &ProfValue) -> Result<ProfValue> {
        self.enhance(&Shape::sum(residual.clone()), p)
    }
}
