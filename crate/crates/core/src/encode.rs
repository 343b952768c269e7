//! Functorizations of the concrete families and the conversions between
//! concrete, isomorphism and profunctor optics.
//!
//! Each concrete family `op` lifts through the shapes of one functor family
//! (`enhance_fop`). From that lift come `unfunctorize = enhance_to_arrow` and
//! the profunctor encoding `encode = iso_to_prof ∘ concrete_to_iso`,
//! `decode = unfunctorize ∘ prof_to_iso`.
//!
//! | family    | functor family       | shape of `concrete_to_iso`        |
//! |-----------|----------------------|-----------------------------------|
//! | Adapter   | `id_only`            | `Id`                              |
//! | Lens      | `is_product`         | `Pair(S)`                         |
//! | Prism     | `is_sum`             | `Sum(T)`                          |
//! | Setter    | `any_functor`        | `Cps(T, B)`                       |
//! | AchLens   | `is_pointed_product` | `MaybePair(S)`                    |
//! | Optional  | `affine`             | `Compose(Sum(T), Pair(S))`        |
//!
//! The Optional row is an extension: its shapes are composites of product
//! and sum leaves, and its lift is assembled from the lens and prism ones.

use std::marker::PhantomData;

use crate::error::{OpticError, Result};
use crate::families::{AchLens, Adapter, AnyOptic, FamilyTag, Lens, OpticFamily, Optional, Prism, Setter};
use crate::functors::monoid::{Affine, AnyFunctor, FunctorMonoid, IdOnly, IsPointedProduct, IsProduct, IsSum, Subfamily};
use crate::functors::{un_compose_fn, un_id_fn, wrap_compose_fn, wrap_id_fn, FunctorFamily, Residual, Shape};
use crate::iso::{Enhanceable, IsoOptic};
use crate::prof::{iso_to_prof, prof_to_iso, ProfOptic};
use crate::value::{constant, func, Either, Func, Value};

/// A concrete family together with its canonical functor family.
pub trait Functorize: OpticFamily<Value = Value> {
    type Monoid: FunctorMonoid;
    const TAG: FamilyTag;

    /// The family's lift `op a b (F a) (F b)` for `F` in [`Self::Monoid`].
    fn enhance_fop(shape: &Shape) -> Result<Self>;

    fn concrete_to_iso(&self) -> IsoOptic<Self::Monoid>;
}

/// `inj(forward, backward) ∘ enhance_fop(shape)`.
pub fn unfunctorize<O: Functorize>(iso: &IsoOptic<O::Monoid>) -> Result<O> {
    Ok(O::inj(iso.forward().clone(), iso.backward().clone()).compose(&O::enhance_fop(iso.shape())?))
}

/// Runtime view of a functorization, keyed by [`FamilyTag`].
#[derive(Clone, Copy)]
pub struct Functorization {
    pub tag: FamilyTag,
    pub functor_family: FunctorFamily,
    enhance: fn(&Shape) -> Result<AnyOptic>,
}

impl Functorization {
    pub fn enhance_op(&self, shape: &Shape) -> Result<AnyOptic> {
        self.functor_family.require(shape)?;
        (self.enhance)(shape)
    }
}

impl std::fmt::Debug for Functorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Functorization({} over {})", self.tag, self.functor_family)
    }
}

/// The functorization registered for `tag`. Every tag has one.
pub fn functorize(tag: FamilyTag) -> Functorization {
    let (functor_family, enhance): (FunctorFamily, fn(&Shape) -> Result<AnyOptic>) = match tag {
        FamilyTag::Adapter => (FunctorFamily::IdOnly, |s| Adapter::enhance_fop(s).map(AnyOptic::Adapter)),
        FamilyTag::Lens => (FunctorFamily::IsProduct, |s| Lens::enhance_fop(s).map(AnyOptic::Lens)),
        FamilyTag::Prism => (FunctorFamily::IsSum, |s| Prism::enhance_fop(s).map(AnyOptic::Prism)),
        FamilyTag::Optional => (FunctorFamily::Affine, |s| Optional::enhance_fop(s).map(AnyOptic::Optional)),
        FamilyTag::AchLens => (FunctorFamily::IsPointedProduct, |s| AchLens::enhance_fop(s).map(AnyOptic::AchLens)),
        FamilyTag::Setter => (FunctorFamily::AnyFunctor, |s| Setter::enhance_fop(s).map(AnyOptic::Setter)),
    };
    Functorization {
        tag,
        functor_family,
        enhance,
    }
}

/// `encode = iso_to_prof ∘ concrete_to_iso`, `decode = unfunctorize ∘ prof_to_iso`.
pub struct ProfEncoding<O> {
    marker: PhantomData<fn() -> O>,
}

impl<O: Functorize> ProfEncoding<O> {
    pub fn encode(&self, o: &O) -> ProfOptic<O::Monoid> {
        iso_to_prof(&o.concrete_to_iso())
    }

    pub fn decode(&self, l: &ProfOptic<O::Monoid>) -> Result<O> {
        unfunctorize(&prof_to_iso(l)?)
    }
}

pub fn prof_encoding<O: Functorize>() -> ProfEncoding<O> {
    ProfEncoding { marker: PhantomData }
}

fn leaf_error(tag: FamilyTag, shape: &Shape) -> OpticError {
    OpticError::UnsupportedShape {
        capability: format!("{tag} functorization"),
        shape: shape.to_string(),
    }
}

/// `Id` and `Compose` by the Enhanceable laws, leaves by `leaf`.
fn structural<O: OpticFamily<Value = Value>>(shape: &Shape, leaf: &dyn Fn(&Shape) -> Result<O>) -> Result<O> {
    match shape {
        Shape::Id => Ok(O::inj(un_id_fn(), wrap_id_fn())),
        Shape::Compose(f, g) => Ok(O::inj(un_compose_fn(), wrap_compose_fn())
            .compose(&structural(f, leaf)?)
            .compose(&structural(g, leaf)?)),
        _ => leaf(shape),
    }
}

fn snd() -> Func {
    func(|p: &Value| Ok(p.as_pair()?.1.clone()))
}

/// `Lens snd (fmap ∘ const)` at a pair-like leaf.
fn pair_leaf_lens(shape: &Shape) -> Lens {
    let shape = shape.clone();
    Lens::from_fns(snd(), crate::value::put_fn(move |b: &Value, fa: &Value| shape.fmap(&constant(b.clone()), fa)))
}

/// `Prism (either (Left ∘ Left) Right) Right` at a sum leaf.
fn sum_leaf_prism() -> Prism {
    Prism::new(
        |fa: &Value| {
            Ok(match fa.as_sum()? {
                Either::Left(c) => Either::Left(Value::left(c.clone())),
                Either::Right(a) => Either::Right(a.clone()),
            })
        },
        |b: &Value| Ok(Value::right(b.clone())),
    )
}

/// The lens lift read off the product capability:
/// `get = snd ∘ toProduct`, `put b = fromProduct ∘ (fst, const b) ∘ toProduct`.
pub fn lens_via_product(shape: &Shape) -> Result<Lens> {
    FunctorFamily::IsProduct.require(shape)?;
    let (s1, s2) = (shape.clone(), shape.clone());
    Ok(Lens::new(
        move |fa: &Value| Ok(s1.to_product(fa)?.1),
        move |b: &Value, fa: &Value| s2.from_product(&s2.to_product(fa)?.0, b),
    ))
}

/// The achromatic lift read off the product and point capabilities.
pub fn achlens_via_product(shape: &Shape) -> Result<AchLens> {
    FunctorFamily::IsPointedProduct.require(shape)?;
    let lens = lens_via_product(shape)?;
    let (unit, s) = (shape.point()?, shape.clone());
    Ok(AchLens::from_fns(
        lens.get_fn().clone(),
        lens.put_fn().clone(),
        func(move |b: &Value| s.from_product(&unit, b)),
    ))
}

impl Functorize for Adapter {
    type Monoid = IdOnly;
    const TAG: FamilyTag = FamilyTag::Adapter;

    fn enhance_fop(shape: &Shape) -> Result<Self> {
        structural(shape, &|s| Err(leaf_error(Self::TAG, s)))
    }

    fn concrete_to_iso(&self) -> IsoOptic<IdOnly> {
        IsoOptic::inj(self.fwd_fn().clone(), self.bwd_fn().clone())
    }
}

impl Functorize for Lens {
    type Monoid = IsProduct;
    const TAG: FamilyTag = FamilyTag::Lens;

    fn enhance_fop(shape: &Shape) -> Result<Self> {
        structural(shape, &|s| match s {
            Shape::Pair(_) | Shape::MaybePair(_) => Ok(pair_leaf_lens(s)),
            _ => Err(leaf_error(Self::TAG, s)),
        })
    }

    /// `forward s = (s, get s)`, `backward (s, b) = put b s`.
    fn concrete_to_iso(&self) -> IsoOptic<IsProduct> {
        let (get, put) = (self.get_fn().clone(), self.put_fn().clone());
        IsoOptic::new(
            Shape::pair(Residual::named("S")),
            func(move |s: &Value| Ok(Value::pair(s.clone(), get(s)?))),
            func(move |p: &Value| {
                let (s, b) = p.as_pair()?;
                put(b, s)
            }),
        )
        .expect("pairs have products")
    }
}

impl Functorize for Prism {
    type Monoid = IsSum;
    const TAG: FamilyTag = FamilyTag::Prism;

    fn enhance_fop(shape: &Shape) -> Result<Self> {
        structural(shape, &|s| match s {
            Shape::Sum(_) => Ok(sum_leaf_prism()),
            _ => Err(leaf_error(Self::TAG, s)),
        })
    }

    /// `IsoOptic match (either id build)`.
    fn concrete_to_iso(&self) -> IsoOptic<IsSum> {
        let (matcher, build) = (self.match_fn().clone(), self.build_fn().clone());
        IsoOptic::new(
            Shape::sum(Residual::named("T")),
            func(move |s: &Value| Ok(matcher(s)?.into_value())),
            func(move |e: &Value| match e.as_sum()? {
                Either::Left(t) => Ok(t.clone()),
                Either::Right(b) => build(b),
            }),
        )
        .expect("sums have sums")
    }
}

impl Functorize for Setter {
    type Monoid = AnyFunctor;
    const TAG: FamilyTag = FamilyTag::Setter;

    /// `Setter fmap`.
    fn enhance_fop(shape: &Shape) -> Result<Self> {
        let shape = shape.clone();
        Ok(Setter::new(move |h| shape.map(&h)))
    }

    /// `forward s = CPS (λk. over k s)`, `backward c = unCPS c id`.
    fn concrete_to_iso(&self) -> IsoOptic<AnyFunctor> {
        let this = self.clone();
        let forward = func(move |s: &Value| {
            let (this, s) = (this.clone(), s.clone());
            Ok(Value::fun(func(move |k: &Value| this.over(k.as_fun()?.clone())(&s))))
        });
        let backward = func(|c: &Value| c.as_fun()?(&Value::fun(crate::value::identity())));
        IsoOptic::new(Shape::cps(Residual::named("T"), Residual::named("B")), forward, backward)
            .expect("every shape is a functor")
    }
}

impl Functorize for AchLens {
    type Monoid = IsPointedProduct;
    const TAG: FamilyTag = FamilyTag::AchLens;

    /// At `MaybePair`: `AchLens snd (fmap ∘ const) ((,) Nothing)`.
    fn enhance_fop(shape: &Shape) -> Result<Self> {
        structural(shape, &|s| match s {
            Shape::MaybePair(_) => {
                let lens = pair_leaf_lens(s);
                Ok(AchLens::from_fns(
                    lens.get_fn().clone(),
                    lens.put_fn().clone(),
                    func(|b: &Value| Ok(Value::pair(Value::Nothing, b.clone()))),
                ))
            }
            _ => Err(leaf_error(Self::TAG, s)),
        })
    }

    /// `forward s = (Just s, get s)`; `backward` puts into `Just s` and
    /// creates from `Nothing`.
    fn concrete_to_iso(&self) -> IsoOptic<IsPointedProduct> {
        let this = self.clone();
        let get = this.clone();
        IsoOptic::new(
            Shape::maybe_pair(Residual::named("S")),
            func(move |s: &Value| Ok(Value::pair(Value::just(s.clone()), get.get(s)?))),
            func(move |p: &Value| {
                let (m, b) = p.as_pair()?;
                match m.as_maybe()? {
                    Some(s) => this.put(b, s),
                    None => this.create(b),
                }
            }),
        )
        .expect("maybe-pairs are pointed products")
    }
}

impl Functorize for Optional {
    type Monoid = Affine;
    const TAG: FamilyTag = FamilyTag::Optional;

    fn enhance_fop(shape: &Shape) -> Result<Self> {
        structural(shape, &|s| match s {
            Shape::Pair(_) | Shape::MaybePair(_) => Ok(Optional::from_lens(&pair_leaf_lens(s))),
            Shape::Sum(_) => Ok(Optional::from_prism(&sum_leaf_prism())),
            _ => Err(leaf_error(Self::TAG, s)),
        })
    }

    /// `forward s = Compose (Left t)` on a miss, `Compose (Right (s, a))` on
    /// a hit; `backward` returns `t` or `put b s`.
    fn concrete_to_iso(&self) -> IsoOptic<Affine> {
        let this = self.clone();
        let m = self.clone();
        IsoOptic::new(
            Shape::compose(Shape::sum(Residual::named("T")), Shape::pair(Residual::named("S"))),
            func(move |s: &Value| {
                Ok(Value::wrap_compose(match m.matching(s)? {
                    Either::Left(t) => Value::left(t),
                    Either::Right(a) => Value::right(Value::pair(s.clone(), a)),
                }))
            }),
            func(move |c: &Value| match c.un_compose()?.as_sum()? {
                Either::Left(t) => Ok(t.clone()),
                Either::Right(p) => {
                    let (s, b) = p.as_pair()?;
                    this.put(b, s)
                }
            }),
        )
        .expect("sum of pairs is affine")
    }
}

macro_rules! enhanceable_via_functorize {
    ($ty:ty, $monoid:ty) => {
        impl<M: Subfamily<$monoid>> Enhanceable<M> for $ty {
            fn enhance_op(shape: &Shape) -> Result<Self> {
                M::FAMILY.require(shape)?;
                <$ty as Functorize>::enhance_fop(shape)
            }
        }
    };
}

enhanceable_via_functorize!(Adapter, IdOnly);
enhanceable_via_functorize!(Lens, IsProduct);
enhanceable_via_functorize!(Prism, IsSum);
enhanceable_via_functorize!(Setter, AnyFunctor);
enhanceable_via_functorize!(AchLens, IsPointedProduct);
enhanceable_via_functorize!(Optional, Affine);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::first;

    #[test]
    fn lens_lift_at_pair_replaces_focus() {
        let shape = Shape::pair(Residual::named("C"));
        let l = Lens::enhance_fop(&shape).unwrap();
        let fa: Value = ("c", 1).into();
        assert_eq!(l.get(&fa).unwrap(), Value::int(1));
        assert_eq!(l.put(&Value::int(9), &fa).unwrap(), ("c", 9).into());
    }

    #[test]
    fn achlens_lift_creates_with_nothing() {
        let l = AchLens::enhance_fop(&Shape::maybe_pair(Residual::named("C"))).unwrap();
        assert_eq!(l.create(&Value::int(7)).unwrap(), Value::pair(Value::Nothing, Value::int(7)));
    }

    #[test]
    fn first_converts_to_pair_shape() {
        let iso = first().concrete_to_iso();
        assert_eq!(iso.shape(), &Shape::pair(Residual::named("S")));
        let s: Value = (4, "c").into();
        assert_eq!(iso.forward()(&s).unwrap(), Value::pair(s.clone(), Value::int(4)));
    }

    #[test]
    fn functorize_registers_every_tag() {
        for tag in FamilyTag::ALL {
            let fz = functorize(tag);
            assert_eq!(fz.tag, tag);
            assert_eq!(fz.enhance_op(&Shape::id()).unwrap().tag(), tag);
        }
        assert!(functorize(FamilyTag::Lens).enhance_op(&Shape::sum(Residual::named("C"))).is_err());
    }
}
