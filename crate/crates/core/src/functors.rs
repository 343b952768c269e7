//! Container shapes, functor families and natural transformations.
//!
//! A [`Shape`] is a runtime witness for a one-parameter container `F`. Values
//! of type `F A` are ordinary [`Value`]s in the layout the shape expects:
//!
//! | shape            | payload                          |
//! |------------------|----------------------------------|
//! | `Id`             | `Id a`                           |
//! | `Compose(f, g)`  | `Compose x` with `x : f (g a)`   |
//! | `Pair(C)`        | `(c, a)`                         |
//! | `MaybePair(C)`   | `(Nothing or Just c, a)`         |
//! | `Sum(C)`         | `Left c` or `Right a`            |
//! | `Cps(T, B)`      | `Fun k` with `k : (a -> b) -> t` |
//!
//! Capabilities are decided structurally: a shape has the product (sum, point)
//! capability when it is a leaf providing it or a composite of two shapes that
//! both provide it.

use std::fmt;
use std::marker::PhantomData;
use std::sync::Arc;

use crate::error::{OpticError, Result};
use crate::finite::FiniteDomain;
use crate::value::{func, Either, Func, Value};

/// The residual parameter `C` of a leaf shape, optionally with a finite domain
/// so carriers can be enumerated.
#[derive(Clone, PartialEq)]
pub struct Residual {
    name: Arc<str>,
    domain: Option<FiniteDomain>,
}

impl Residual {
    pub fn named(name: &str) -> Self {
        Residual {
            name: Arc::from(name),
            domain: None,
        }
    }

    pub fn finite(domain: FiniteDomain) -> Self {
        Residual {
            name: Arc::from(domain.name()),
            domain: Some(domain),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Option<&FiniteDomain> {
        self.domain.as_ref()
    }

    fn require_domain(&self) -> Result<&FiniteDomain> {
        self.domain
            .as_ref()
            .ok_or_else(|| OpticError::Domain(format!("residual `{}` has no finite domain", self.name)))
    }
}

impl fmt::Debug for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Which optional capabilities a shape carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capabilities {
    pub product: bool,
    pub sum: bool,
    pub point: bool,
}

/// A container shape.
#[derive(Clone, PartialEq)]
pub enum Shape {
    Id,
    Compose(Arc<Shape>, Arc<Shape>),
    Pair(Residual),
    MaybePair(Residual),
    Sum(Residual),
    Cps { result: Residual, arg: Residual },
}

impl Shape {
    pub fn id() -> Shape {
        Shape::Id
    }

    pub fn compose(f: Shape, g: Shape) -> Shape {
        Shape::Compose(Arc::new(f), Arc::new(g))
    }

    pub fn pair(residual: Residual) -> Shape {
        Shape::Pair(residual)
    }

    pub fn maybe_pair(residual: Residual) -> Shape {
        Shape::MaybePair(residual)
    }

    pub fn sum(residual: Residual) -> Shape {
        Shape::Sum(residual)
    }

    pub fn cps(result: Residual, arg: Residual) -> Shape {
        Shape::Cps { result, arg }
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    fn unsupported(&self, capability: &str) -> OpticError {
        OpticError::UnsupportedShape {
            capability: capability.to_string(),
            shape: self.to_string(),
        }
    }

    /// `fmap h` on one payload.
    pub fn fmap(&self, h: &Func, fa: &Value) -> Result<Value> {
        match self {
            Shape::Id => Ok(Value::wrap_id(h(fa.un_id()?)?)),
            Shape::Compose(f, g) => Ok(Value::wrap_compose(f.fmap(&g.map(h), fa.un_compose()?)?)),
            Shape::Pair(_) | Shape::MaybePair(_) => {
                let (c, a) = fa.as_pair()?;
                Ok(Value::pair(c.clone(), h(a)?))
            }
            Shape::Sum(_) => match fa.as_sum()? {
                Either::Left(c) => Ok(Value::left(c.clone())),
                Either::Right(a) => Ok(Value::right(h(a)?)),
            },
            Shape::Cps { .. } => {
                let k = fa.as_fun()?.clone();
                let h = h.clone();
                Ok(Value::fun(func(move |g: &Value| {
                    let g = g.as_fun()?.clone();
                    let h = h.clone();
                    k(&Value::fun(func(move |a: &Value| g(&h(a)?))))
                })))
            }
        }
    }

    /// `fmap h` as a function value.
    pub fn map(&self, h: &Func) -> Func {
        let (shape, h) = (self.clone(), h.clone());
        func(move |fa: &Value| shape.fmap(&h, fa))
    }

    pub fn capabilities(&self) -> Capabilities {
        match self {
            Shape::Id => Capabilities {
                product: true,
                sum: true,
                point: true,
            },
            Shape::Compose(f, g) => {
                let (cf, cg) = (f.capabilities(), g.capabilities());
                Capabilities {
                    product: cf.product && cg.product,
                    sum: cf.sum && cg.sum,
                    point: cf.point && cg.point,
                }
            }
            Shape::Pair(_) => Capabilities {
                product: true,
                sum: false,
                point: false,
            },
            Shape::MaybePair(_) => Capabilities {
                product: true,
                sum: false,
                point: true,
            },
            Shape::Sum(_) => Capabilities {
                product: false,
                sum: true,
                point: false,
            },
            Shape::Cps { .. } => Capabilities {
                product: false,
                sum: false,
                point: false,
            },
        }
    }

    pub fn has_product(&self) -> bool {
        self.capabilities().product
    }

    pub fn has_sum(&self) -> bool {
        self.capabilities().sum
    }

    pub fn has_point(&self) -> bool {
        self.capabilities().point
    }

    /// `F a -> (F (), a)`.
    pub fn to_product(&self, fa: &Value) -> Result<(Value, Value)> {
        match self {
            Shape::Id => Ok((Value::wrap_id(Value::Unit), fa.un_id()?.clone())),
            Shape::Pair(_) | Shape::MaybePair(_) => {
                let (c, a) = fa.as_pair()?;
                Ok((Value::pair(c.clone(), Value::Unit), a.clone()))
            }
            Shape::Compose(f, g) if self.has_product() => {
                let (f1, gx) = f.to_product(fa.un_compose()?)?;
                let (g1, x) = g.to_product(&gx)?;
                Ok((Value::wrap_compose(f.from_product(&f1, &g1)?), x))
            }
            _ => Err(self.unsupported("product")),
        }
    }

    /// `(F (), a) -> F a`.
    pub fn from_product(&self, unit: &Value, a: &Value) -> Result<Value> {
        match self {
            Shape::Id => {
                unit.un_id()?;
                Ok(Value::wrap_id(a.clone()))
            }
            Shape::Pair(_) | Shape::MaybePair(_) => {
                let (c, _) = unit.as_pair()?;
                Ok(Value::pair(c.clone(), a.clone()))
            }
            Shape::Compose(f, g) if self.has_product() => {
                let (f1, g1) = f.to_product(unit.un_compose()?)?;
                Ok(Value::wrap_compose(f.from_product(&f1, &g.from_product(&g1, a)?)?))
            }
            _ => Err(self.unsupported("product")),
        }
    }

    /// The distinguished `F ()`.
    pub fn point(&self) -> Result<Value> {
        match self {
            Shape::Id => Ok(Value::wrap_id(Value::Unit)),
            Shape::MaybePair(_) => Ok(Value::pair(Value::Nothing, Value::Unit)),
            Shape::Compose(f, g) if self.has_point() => {
                Ok(Value::wrap_compose(f.from_product(&f.point()?, &g.point()?)?))
            }
            _ => Err(self.unsupported("point")),
        }
    }

    /// Splits a payload into a focus-free residual (`Left`) or its focus.
    ///
    /// A residual holds no focus, so [`Shape::from_sum`] can return it at any
    /// focus type unchanged.
    pub fn to_sum(&self, fa: &Value) -> Result<Either<Value, Value>> {
        match self {
            Shape::Id => Ok(Either::Right(fa.un_id()?.clone())),
            Shape::Sum(_) => Ok(match fa.as_sum()? {
                Either::Left(_) => Either::Left(fa.clone()),
                Either::Right(a) => Either::Right(a.clone()),
            }),
            Shape::Compose(f, g) if self.has_sum() => match f.to_sum(fa.un_compose()?)? {
                Either::Left(r) => Ok(Either::Left(Value::wrap_compose(r))),
                Either::Right(ga) => match g.to_sum(&ga)? {
                    Either::Left(r) => Ok(Either::Left(Value::wrap_compose(f.from_sum(Either::Right(r))?))),
                    Either::Right(a) => Ok(Either::Right(a)),
                },
            },
            _ => Err(self.unsupported("sum")),
        }
    }

    /// Inverse of [`Shape::to_sum`].
    pub fn from_sum(&self, e: Either<Value, Value>) -> Result<Value> {
        match (self, e) {
            (Shape::Id, Either::Right(b)) => Ok(Value::wrap_id(b)),
            (Shape::Id, Either::Left(r)) => Err(OpticError::mismatch("no residual for Id", r)),
            (Shape::Sum(_), Either::Right(b)) => Ok(Value::right(b)),
            (Shape::Sum(_), Either::Left(r)) => match r.as_sum()? {
                Either::Left(_) => Ok(r),
                Either::Right(_) => Err(OpticError::mismatch("Left residual", r)),
            },
            (Shape::Compose(_, _), Either::Left(r)) if self.has_sum() => {
                r.un_compose()?;
                Ok(r)
            }
            (Shape::Compose(f, g), Either::Right(b)) if self.has_sum() => {
                let gb = g.from_sum(Either::Right(b))?;
                Ok(Value::wrap_compose(f.from_sum(Either::Right(gb))?))
            }
            _ => Err(self.unsupported("sum")),
        }
    }

    /// Every payload `F a` with `a` drawn from `focus`.
    pub fn carrier(&self, focus: &FiniteDomain) -> Result<FiniteDomain> {
        let name = format!("{self} {}", focus.name());
        Ok(match self {
            Shape::Id => focus.mapped(&name, |a| Value::wrap_id(a.clone())),
            Shape::Compose(f, g) => f
                .carrier(&g.carrier(focus)?)?
                .mapped(&name, |x| Value::wrap_compose(x.clone())),
            Shape::Pair(r) => FiniteDomain::product(r.require_domain()?, focus).mapped(&name, Value::clone),
            Shape::MaybePair(r) => {
                FiniteDomain::product(&FiniteDomain::maybe(r.require_domain()?), focus).mapped(&name, Value::clone)
            }
            Shape::Sum(r) => FiniteDomain::sum(r.require_domain()?, focus).mapped(&name, Value::clone),
            Shape::Cps { .. } => {
                return Err(OpticError::Domain(format!("carrier of `{self}` holds functions")));
            }
        })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Id => f.write_str("Id"),
            Shape::Compose(a, b) => write!(f, "Compose({a}, {b})"),
            Shape::Pair(r) => write!(f, "Pair({})", r.name()),
            Shape::MaybePair(r) => write!(f, "MaybePair({})", r.name()),
            Shape::Sum(r) => write!(f, "Sum({})", r.name()),
            Shape::Cps { result, arg } => write!(f, "Cps({}, {})", result.name(), arg.name()),
        }
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `fa ↦ (F (), a)` as a pair-valued function.
pub fn to_product_fn(shape: &Shape) -> Func {
    let shape = shape.clone();
    func(move |fa: &Value| {
        let (u, a) = shape.to_product(fa)?;
        Ok(Value::pair(u, a))
    })
}

/// `(F (), b) ↦ F b`.
pub fn from_product_fn(shape: &Shape) -> Func {
    let shape = shape.clone();
    func(move |p: &Value| {
        let (u, b) = p.as_pair()?;
        shape.from_product(u, b)
    })
}

/// `fa ↦ Left residual | Right a` as a sum-valued function.
pub fn to_sum_fn(shape: &Shape) -> Func {
    let shape = shape.clone();
    func(move |fa: &Value| Ok(shape.to_sum(fa)?.into_value()))
}

/// Inverse of [`to_sum_fn`].
pub fn from_sum_fn(shape: &Shape) -> Func {
    let shape = shape.clone();
    func(move |e: &Value| {
        shape.from_sum(match e.as_sum()? {
            Either::Left(r) => Either::Left(r.clone()),
            Either::Right(b) => Either::Right(b.clone()),
        })
    })
}

pub fn wrap_id_fn() -> Func {
    func(|v: &Value| Ok(Value::wrap_id(v.clone())))
}

pub fn un_id_fn() -> Func {
    func(|v: &Value| Ok(v.un_id()?.clone()))
}

pub fn wrap_compose_fn() -> Func {
    func(|v: &Value| Ok(Value::wrap_compose(v.clone())))
}

pub fn un_compose_fn() -> Func {
    func(|v: &Value| Ok(v.un_compose()?.clone()))
}

/// A functor monoid: a class of shapes containing `Id` and closed under
/// `Compose`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctorFamily {
    /// Every shape.
    AnyFunctor,
    /// Shapes with the product capability.
    IsProduct,
    /// Shapes with the sum capability.
    IsSum,
    /// Shapes with product and point capabilities.
    IsPointedProduct,
    /// Shapes isomorphic to `Id`.
    IdOnly,
    /// Composites of product or sum leaves (`r + c × a` containers).
    Affine,
}

impl FunctorFamily {
    pub const ALL: [FunctorFamily; 6] = [
        FunctorFamily::AnyFunctor,
        FunctorFamily::IsProduct,
        FunctorFamily::IsSum,
        FunctorFamily::IsPointedProduct,
        FunctorFamily::IdOnly,
        FunctorFamily::Affine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctorFamily::AnyFunctor => "any_functor",
            FunctorFamily::IsProduct => "is_product",
            FunctorFamily::IsSum => "is_sum",
            FunctorFamily::IsPointedProduct => "is_pointed_product",
            FunctorFamily::IdOnly => "id_only",
            FunctorFamily::Affine => "affine",
        }
    }

    pub fn member(self, shape: &Shape) -> bool {
        let caps = shape.capabilities();
        match self {
            FunctorFamily::AnyFunctor => true,
            FunctorFamily::IsProduct => caps.product,
            FunctorFamily::IsSum => caps.sum,
            FunctorFamily::IsPointedProduct => caps.product && caps.point,
            FunctorFamily::IdOnly => match shape {
                Shape::Id => true,
                Shape::Compose(f, g) => self.member(f) && self.member(g),
                _ => false,
            },
            FunctorFamily::Affine => match shape {
                Shape::Id | Shape::Pair(_) | Shape::MaybePair(_) | Shape::Sum(_) => true,
                Shape::Compose(f, g) => self.member(f) && self.member(g),
                Shape::Cps { .. } => false,
            },
        }
    }

    /// Checks membership, naming both sides on failure.
    pub fn require(self, shape: &Shape) -> Result<()> {
        if self.member(shape) {
            Ok(())
        } else {
            Err(OpticError::NotMember {
                shape: shape.to_string(),
                family: self.name().to_string(),
            })
        }
    }

    /// Inclusion of families: every member of `self` is a member of `other`.
    pub fn le(self, other: FunctorFamily) -> bool {
        use FunctorFamily::*;
        match (self, other) {
            (a, b) if a == b => true,
            (_, AnyFunctor) | (IdOnly, _) => true,
            (IsPointedProduct, IsProduct | Affine) => true,
            (IsProduct | IsSum, Affine) => true,
            _ => false,
        }
    }
}

impl fmt::Display for FunctorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn any_functor() -> FunctorFamily {
    FunctorFamily::AnyFunctor
}

pub fn is_product() -> FunctorFamily {
    FunctorFamily::IsProduct
}

pub fn is_sum() -> FunctorFamily {
    FunctorFamily::IsSum
}

pub fn is_pointed_product() -> FunctorFamily {
    FunctorFamily::IsPointedProduct
}

pub fn id_only() -> FunctorFamily {
    FunctorFamily::IdOnly
}

pub fn affine() -> FunctorFamily {
    FunctorFamily::Affine
}

/// Type-level names for functor families, used to index isomorphism and
/// profunctor optics.
pub mod monoid {
    use super::FunctorFamily;

    /// A functor family known at compile time.
    pub trait FunctorMonoid: Send + Sync + 'static {
        const FAMILY: FunctorFamily;
    }

    /// `Self ⊑ N`: every member of `Self` is a member of `N`.
    pub trait Subfamily<N: FunctorMonoid>: FunctorMonoid {}

    macro_rules! monoids {
        ($($name:ident),*) => {$(
            #[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
            pub struct $name;
            impl FunctorMonoid for $name {
                const FAMILY: FunctorFamily = FunctorFamily::$name;
            }
        )*};
    }

    monoids!(AnyFunctor, IsProduct, IsSum, IsPointedProduct, IdOnly, Affine);

    macro_rules! sub {
        ($a:ident => $($b:ident),*) => {$( impl Subfamily<$b> for $a {} )*};
    }

    sub!(IdOnly => IdOnly, IsProduct, IsSum, IsPointedProduct, Affine, AnyFunctor);
    sub!(IsPointedProduct => IsPointedProduct, IsProduct, Affine, AnyFunctor);
    sub!(IsProduct => IsProduct, Affine, AnyFunctor);
    sub!(IsSum => IsSum, Affine, AnyFunctor);
    sub!(Affine => Affine, AnyFunctor);
    sub!(AnyFunctor => AnyFunctor);
}

/// A natural transformation `φ: F -> G`, given by its action on payloads.
#[derive(Clone)]
pub struct Natural {
    pub name: &'static str,
    pub source: Shape,
    pub target: Shape,
    run: Func,
}

impl Natural {
    pub fn new(name: &'static str, source: Shape, target: Shape, run: Func) -> Self {
        Natural {
            name,
            source,
            target,
            run,
        }
    }

    pub fn apply(&self, fa: &Value) -> Result<Value> {
        (self.run)(fa)
    }

    pub fn as_fn(&self) -> Func {
        self.run.clone()
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.source, self.target)
    }
}

/// The residual domain shared by registry shapes.
pub fn registry_residual() -> FiniteDomain {
    FiniteDomain::labels("R", "r", 2)
}

/// Shapes with finite residuals used by exhaustive law checks.
pub fn shape_registry() -> Vec<Shape> {
    let r = Residual::finite(registry_residual());
    let pair = Shape::pair(r.clone());
    let mpair = Shape::maybe_pair(r.clone());
    let sum = Shape::sum(r);
    vec![
        Shape::id(),
        pair.clone(),
        mpair.clone(),
        sum.clone(),
        Shape::compose(Shape::id(), Shape::id()),
        Shape::compose(Shape::id(), pair.clone()),
        Shape::compose(pair.clone(), Shape::id()),
        Shape::compose(pair.clone(), pair.clone()),
        Shape::compose(mpair.clone(), mpair.clone()),
        Shape::compose(pair.clone(), mpair.clone()),
        Shape::compose(sum.clone(), sum.clone()),
        Shape::compose(sum.clone(), Shape::id()),
        Shape::compose(sum.clone(), pair.clone()),
        Shape::compose(pair, sum),
    ]
}

/// Registry shapes belonging to `family`.
pub fn shapes_in(family: FunctorFamily) -> Vec<Shape> {
    shape_registry().into_iter().filter(|s| family.member(s)).collect()
}

fn flip_residual(r: &Value) -> Result<Value> {
    let domain = registry_residual();
    let i = domain
        .index_of(r)
        .ok_or_else(|| OpticError::mismatch("registry residual", r))?;
    Ok(domain.elements()[(i + 1) % domain.len()].clone())
}

/// Registered natural transformations between registry shapes.
pub fn natural_registry() -> Vec<Natural> {
    let r = Residual::finite(registry_residual());
    let r0 = registry_residual().elements()[0].clone();
    let pair = Shape::pair(r.clone());
    let mpair = Shape::maybe_pair(r.clone());
    let sum = Shape::sum(r);
    let id = Shape::id();
    let r0b = r0.clone();
    vec![
        Natural::new(
            "pair_to_id",
            pair.clone(),
            id.clone(),
            func(|fa: &Value| Ok(Value::wrap_id(fa.as_pair()?.1.clone()))),
        ),
        Natural::new(
            "id_to_pair",
            id.clone(),
            pair.clone(),
            func(move |fa: &Value| Ok(Value::pair(r0.clone(), fa.un_id()?.clone()))),
        ),
        Natural::new(
            "pair_flip_residual",
            pair.clone(),
            pair.clone(),
            func(|fa: &Value| {
                let (c, a) = fa.as_pair()?;
                Ok(Value::pair(flip_residual(c)?, a.clone()))
            }),
        ),
        Natural::new(
            "pair_to_maybe_pair",
            pair.clone(),
            mpair.clone(),
            func(|fa: &Value| {
                let (c, a) = fa.as_pair()?;
                Ok(Value::pair(Value::just(c.clone()), a.clone()))
            }),
        ),
        Natural::new(
            "maybe_pair_to_pair",
            mpair.clone(),
            pair.clone(),
            func(move |fa: &Value| {
                let (m, a) = fa.as_pair()?;
                let c = m.as_maybe()?.cloned().unwrap_or_else(|| r0b.clone());
                Ok(Value::pair(c, a.clone()))
            }),
        ),
        Natural::new(
            "maybe_pair_forget",
            mpair.clone(),
            mpair.clone(),
            func(|fa: &Value| Ok(Value::pair(Value::Nothing, fa.as_pair()?.1.clone()))),
        ),
        Natural::new(
            "maybe_pair_to_id",
            mpair.clone(),
            id.clone(),
            func(|fa: &Value| Ok(Value::wrap_id(fa.as_pair()?.1.clone()))),
        ),
        Natural::new(
            "id_to_maybe_pair",
            id.clone(),
            mpair,
            func(|fa: &Value| Ok(Value::pair(Value::Nothing, fa.un_id()?.clone()))),
        ),
        Natural::new(
            "id_to_sum",
            id.clone(),
            sum.clone(),
            func(|fa: &Value| Ok(Value::right(fa.un_id()?.clone()))),
        ),
        Natural::new(
            "sum_flip_residual",
            sum.clone(),
            sum,
            func(|fa: &Value| {
                Ok(match fa.as_sum()? {
                    Either::Left(c) => Value::left(flip_residual(c)?),
                    Either::Right(a) => Value::right(a.clone()),
                })
            }),
        ),
        Natural::new(
            "compose_id_collapse",
            Shape::compose(id.clone(), pair.clone()),
            pair,
            func(|fa: &Value| Ok(fa.un_compose()?.un_id()?.clone())),
        ),
        Natural::new(
            "id_id_collapse",
            Shape::compose(id.clone(), id.clone()),
            id,
            func(|fa: &Value| Ok(fa.un_compose()?.un_id()?.clone())),
        ),
    ]
}

/// Registered naturals whose source and target both belong to `family`.
pub fn naturals_in(family: FunctorFamily) -> Vec<Natural> {
    natural_registry()
        .into_iter()
        .filter(|n| family.member(&n.source) && family.member(&n.target))
        .collect()
}

/// Marker for values indexed by a compile-time functor family.
pub(crate) type FamilyMarker<M> = PhantomData<fn() -> M>;

#[cfg(test)]
mod tests {
    use super::*;

    fn focus() -> FiniteDomain {
        FiniteDomain::ints("A", 3)
    }

    #[test]
    fn compose_pair_pair_product_round_trips() {
        let r1 = Residual::finite(FiniteDomain::labels("R1", "x", 2));
        let r2 = Residual::finite(FiniteDomain::labels("R2", "y", 2));
        let shape = Shape::compose(Shape::pair(r1), Shape::pair(r2));
        let carrier = shape.carrier(&focus()).unwrap();
        assert_eq!(carrier.len(), 12);
        for fa in carrier.iter() {
            let (u, a) = shape.to_product(fa).unwrap();
            let (x, inner) = fa.un_compose().unwrap().as_pair().unwrap();
            assert_eq!(&a, inner.as_pair().unwrap().1);
            let expected_unit = Value::wrap_compose(Value::pair(
                x.clone(),
                Value::pair(inner.as_pair().unwrap().0.clone(), Value::Unit),
            ));
            assert_eq!(u, expected_unit);
            assert_eq!(&shape.from_product(&u, &a).unwrap(), fa);
        }
    }

    #[test]
    fn sum_round_trips_on_every_sum_shape() {
        for shape in shapes_in(FunctorFamily::IsSum) {
            for fa in shape.carrier(&focus()).unwrap().iter() {
                let e = shape.to_sum(fa).unwrap();
                assert_eq!(&shape.from_sum(e).unwrap(), fa, "{shape}");
            }
        }
    }

    #[test]
    fn point_is_a_unit_payload() {
        for shape in shapes_in(FunctorFamily::IsPointedProduct) {
            let unit = shape.carrier(&FiniteDomain::unit()).unwrap();
            assert!(unit.contains(&shape.point().unwrap()), "{shape}");
        }
    }

    #[test]
    fn membership_examples() {
        let c = Residual::named("C");
        assert!(is_product().member(&Shape::pair(c.clone())));
        assert!(!is_product().member(&Shape::sum(c.clone())));
        assert!(is_pointed_product().member(&Shape::maybe_pair(c.clone())));
        assert!(!is_pointed_product().member(&Shape::pair(c.clone())));
        assert!(!affine().member(&Shape::cps(c.clone(), c)));
    }

    #[test]
    fn family_order_matches_type_level_subfamilies() {
        for a in FunctorFamily::ALL {
            for b in FunctorFamily::ALL {
                if a.le(b) {
                    for s in shape_registry() {
                        assert!(!a.member(&s) || b.member(&s), "{a} <= {b} at {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn naturals_connect_registered_shapes() {
        let a = focus();
        for n in natural_registry() {
            for fa in n.source.carrier(&a).unwrap().iter() {
                let gb = n.apply(fa).unwrap();
                assert!(n.target.carrier(&a).unwrap().contains(&gb), "{n:?}");
            }
        }
    }
}
