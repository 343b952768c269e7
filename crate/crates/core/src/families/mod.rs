//! Concrete optic families and the [`OpticFamily`] interface.
//!
//! An optic family is a four-parameter constructor `op a b s t` with
//! composition, identity, an injection of plain function pairs and an action
//! `map_optic` on focus functions. All concrete families here are generic over
//! the value universe so that the same records serve both the in-memory
//! [`Value`](crate::value::Value) model and document models such as JSON.

mod achlens;
mod adapter;
mod any;
mod canonical;
mod lens;
mod optional;
mod prism;
mod setter;
mod tag;

pub use achlens::AchLens;
pub use adapter::Adapter;
pub use any::AnyOptic;
pub use canonical::{each, first, just, right, second};
pub use lens::Lens;
pub use optional::Optional;
pub use prism::Prism;
pub use setter::Setter;
pub use tag::FamilyTag;

use crate::value::{identity, Func, Val};

/// The optic-family interface.
///
/// Laws, checked by [`crate::laws`]:
/// `compose` is associative with unit [`OpticFamily::identity`];
/// `inj(id, id) = identity`;
/// `inj(f' ∘ f, g ∘ g') = inj(f, g) ∘ inj(f', g')`;
/// `map_optic(inj(f, g), h) = g ∘ h ∘ f`;
/// `map_optic(o1 ∘ o2) = map_optic(o1) ∘ map_optic(o2)`.
pub trait OpticFamily: Clone + Send + Sync + 'static {
    type Value: Val;

    /// Injects a pair of plain functions `fwd: s -> a`, `bwd: b -> t`.
    fn inj(fwd: Func<Self::Value>, bwd: Func<Self::Value>) -> Self;

    /// `self ∘ inner`: `self` focuses on `a` inside `s`, `inner` on `x` inside `a`.
    fn compose(&self, inner: &Self) -> Self;

    /// Lifts a focus function `a -> b` to a whole function `s -> t`.
    fn map_optic(&self, h: Func<Self::Value>) -> Func<Self::Value>;

    fn identity() -> Self {
        Self::inj(identity(), identity())
    }
}

/// `inj(fs, ft) ∘ o ∘ inj(fa, fb)`.
pub fn multi_map_optic<O: OpticFamily>(
    fa: Func<O::Value>,
    fb: Func<O::Value>,
    fs: Func<O::Value>,
    ft: Func<O::Value>,
    o: &O,
) -> O {
    O::inj(fs, ft).compose(o).compose(&O::inj(fa, fb))
}

/// `inj(f, g) ∘ o`.
pub fn dimap_optic<O: OpticFamily>(f: Func<O::Value>, g: Func<O::Value>, o: &O) -> O {
    O::inj(f, g).compose(o)
}
