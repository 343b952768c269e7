//! Isomorphism optics: a shape `F` with `forward: s -> F a` and
//! `backward: F b -> t`.
//!
//! Two isomorphism optics are the same optic when they differ by a natural
//! transformation moved across the shape (`IsoOptic(φ ∘ α, β)` and
//! `IsoOptic(α, β ∘ φ)`). That relation is not decidable, so equality is judged
//! observationally through `map_optic` on probe functions.

use std::fmt;

use crate::error::Result;
use crate::families::OpticFamily;
use crate::finite::{probe_tables, FiniteDomain, FnTable};
use crate::functors::monoid::{FunctorMonoid, Subfamily};
use crate::functors::{
    un_compose_fn, un_id_fn, wrap_compose_fn, wrap_id_fn, FamilyMarker, FunctorFamily, Shape,
};
use crate::value::{compose_fn, identity, Func, Value};

/// An isomorphism optic over the functor family `M`.
pub struct IsoOptic<M> {
    shape: Shape,
    forward: Func,
    backward: Func,
    family: FamilyMarker<M>,
}

impl<M> Clone for IsoOptic<M> {
    fn clone(&self) -> Self {
        IsoOptic {
            shape: self.shape.clone(),
            forward: self.forward.clone(),
            backward: self.backward.clone(),
            family: FamilyMarker::default(),
        }
    }
}

impl<M: FunctorMonoid> IsoOptic<M> {
    /// Fails unless `shape` belongs to `M`.
    pub fn new(shape: Shape, forward: Func, backward: Func) -> Result<Self> {
        M::FAMILY.require(&shape)?;
        Ok(IsoOptic {
            shape,
            forward,
            backward,
            family: FamilyMarker::default(),
        })
    }

    pub fn family() -> FunctorFamily {
        M::FAMILY
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn forward(&self) -> &Func {
        &self.forward
    }

    pub fn backward(&self) -> &Func {
        &self.backward
    }

    /// `IsoOptic(id, id)` at `shape`.
    pub fn enhance(shape: &Shape) -> Result<Self> {
        Self::new(shape.clone(), identity(), identity())
    }

    /// `inj(forward, backward) ∘ enhance(shape)`, observationally equal to `self`.
    pub fn normal_form(&self) -> Self {
        Self::inj(self.forward.clone(), self.backward.clone())
            .compose(&Self::enhance(&self.shape).expect("shape was checked on construction"))
    }

    /// Reinterprets the optic in a larger functor family.
    pub fn widen<N: FunctorMonoid>(&self) -> IsoOptic<N>
    where
        M: Subfamily<N>,
    {
        IsoOptic {
            shape: self.shape.clone(),
            forward: self.forward.clone(),
            backward: self.backward.clone(),
            family: FamilyMarker::default(),
        }
    }
}

impl<M: FunctorMonoid> OpticFamily for IsoOptic<M> {
    type Value = Value;

    fn inj(fwd: Func, bwd: Func) -> Self {
        IsoOptic {
            shape: Shape::Id,
            forward: compose_fn(&wrap_id_fn(), &fwd),
            backward: compose_fn(&bwd, &un_id_fn()),
            family: FamilyMarker::default(),
        }
    }

    fn compose(&self, inner: &Self) -> Self {
        let f = &self.shape;
        IsoOptic {
            shape: Shape::compose(f.clone(), inner.shape.clone()),
            forward: compose_fn(&wrap_compose_fn(), &compose_fn(&f.map(&inner.forward), &self.forward)),
            backward: compose_fn(&self.backward, &compose_fn(&f.map(&inner.backward), &un_compose_fn())),
            family: FamilyMarker::default(),
        }
    }

    fn map_optic(&self, h: Func) -> Func {
        compose_fn(&self.backward, &compose_fn(&self.shape.map(&h), &self.forward))
    }
}

impl<M: FunctorMonoid> fmt::Debug for IsoOptic<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IsoOptic<{}> {{ shape: {} }}", M::FAMILY, self.shape)
    }
}

/// An optic family that can lift through every shape of `M`.
///
/// Laws: `enhance_op(Id) = inj(unId, Id)`;
/// `enhance_op(Compose(f, g)) = inj(unCompose, Compose) ∘ enhance_op(f) ∘ enhance_op(g)`;
/// the wedge condition for naturals `α: f -> g`;
/// `enhance_op(f) ∘ inj(k, l) = inj(fmap k, fmap l) ∘ enhance_op(f)`;
/// `map_optic(enhance_op(f)) = fmap`.
pub trait Enhanceable<M: FunctorMonoid>: OpticFamily<Value = Value> {
    /// Errors when `shape` is outside `M` or outside the instance's registry.
    fn enhance_op(shape: &Shape) -> Result<Self>;
}

impl<M: FunctorMonoid> Enhanceable<M> for IsoOptic<M> {
    fn enhance_op(shape: &Shape) -> Result<Self> {
        IsoOptic::enhance(shape)
    }
}

/// `inj(forward, backward) ∘ enhance_op(shape)` in the target family.
pub fn enhance_to_arrow<M: FunctorMonoid, O: Enhanceable<M>>(iso: &IsoOptic<M>) -> Result<O> {
    Ok(O::inj(iso.forward.clone(), iso.backward.clone()).compose(&O::enhance_op(&iso.shape)?))
}

/// What an observation ranges over: whole inputs and the focus domains of the
/// probe functions `A -> B`.
#[derive(Clone, Debug)]
pub struct Probe {
    pub inputs: FiniteDomain,
    pub focus_in: FiniteDomain,
    pub focus_out: FiniteDomain,
    pub seed: u64,
}

impl Probe {
    pub fn new(inputs: &FiniteDomain, focus_in: &FiniteDomain, focus_out: &FiniteDomain) -> Self {
        Probe {
            inputs: inputs.clone(),
            focus_in: focus_in.clone(),
            focus_out: focus_out.clone(),
            seed: 0x0b5e_7a7e,
        }
    }

    /// Simple optics: `A = B`.
    pub fn simple(inputs: &FiniteDomain, focus: &FiniteDomain) -> Self {
        Self::new(inputs, focus, focus)
    }

    pub fn tables(&self) -> Vec<FnTable> {
        probe_tables(&self.focus_in, &self.focus_out, self.inputs.len(), self.seed)
    }
}

/// A probe on which two optics disagree.
#[derive(Clone, Debug)]
pub struct Distinction {
    pub probe: FnTable,
    pub input: Value,
    pub left: Result<Value>,
    pub right: Result<Value>,
}

/// The first probe, in enumeration order, on which `map_optic` differs.
pub fn distinguish<O: OpticFamily<Value = Value>>(o1: &O, o2: &O, probe: &Probe) -> Option<Distinction> {
    for table in probe.tables() {
        let h = table.to_func();
        let (m1, m2) = (o1.map_optic(h.clone()), o2.map_optic(h));
        for s in probe.inputs.iter() {
            let (left, right) = (m1(s), m2(s));
            if left != right {
                return Some(Distinction {
                    probe: table,
                    input: s.clone(),
                    left,
                    right,
                });
            }
        }
    }
    None
}

/// Observational equality: `map_optic` agrees on every probe.
pub fn observational_eq<O: OpticFamily<Value = Value>>(o1: &O, o2: &O, probe: &Probe) -> bool {
    distinguish(o1, o2, probe).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::monoid::IsProduct;
    use crate::functors::Residual;
    use crate::value::func;

    fn incr() -> Func {
        func(|v: &Value| Ok(Value::int(v.as_int()? + 1)))
    }

    #[test]
    fn inj_maps_through_id() {
        let l = IsoOptic::<IsProduct>::inj(incr(), incr());
        assert_eq!(l.shape(), &Shape::Id);
        let m = l.map_optic(incr());
        assert_eq!(m(&Value::int(0)).unwrap(), Value::int(3));
    }

    #[test]
    fn rejects_non_member_shapes() {
        let sum = Shape::sum(Residual::named("C"));
        assert!(IsoOptic::<IsProduct>::enhance(&sum).is_err());
    }
}
