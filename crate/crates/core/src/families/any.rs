use super::{AchLens, Adapter, FamilyTag, Lens, OpticFamily, Optional, Prism, Setter};
use crate::error::{OpticError, Result};
use crate::value::{Either, Func, Val, Value};

/// An optic of any concrete family, tagged at runtime.
///
/// Composition of two tagged optics embeds both into the join of their tags
/// first, so a lens composed with a prism is an optional.
#[derive(Clone, Debug)]
pub enum AnyOptic<V = Value> {
    Adapter(Adapter<V>),
    Lens(Lens<V>),
    Prism(Prism<V>),
    Optional(Optional<V>),
    AchLens(AchLens<V>),
    Setter(Setter<V>),
}

impl<V: Val> AnyOptic<V> {
    pub fn tag(&self) -> FamilyTag {
        match self {
            AnyOptic::Adapter(_) => FamilyTag::Adapter,
            AnyOptic::Lens(_) => FamilyTag::Lens,
            AnyOptic::Prism(_) => FamilyTag::Prism,
            AnyOptic::Optional(_) => FamilyTag::Optional,
            AnyOptic::AchLens(_) => FamilyTag::AchLens,
            AnyOptic::Setter(_) => FamilyTag::Setter,
        }
    }

    /// Embeds into a larger family. Fails when `target` is not above `self`.
    pub fn promote(&self, target: FamilyTag) -> Result<AnyOptic<V>> {
        let tag = self.tag();
        if tag == target {
            return Ok(self.clone());
        }
        if !tag.le(target) {
            return Err(OpticError::UnsupportedOperator {
                operator: "promote",
                family: format!("{tag} (to {target})"),
            });
        }
        if target == FamilyTag::Setter {
            let this = self.clone();
            return Ok(AnyOptic::Setter(Setter::new(move |h| this.map_optic(h))));
        }
        Ok(match (self, target) {
            (AnyOptic::Adapter(a), FamilyTag::Lens) => {
                AnyOptic::Lens(Lens::inj(a.fwd_fn().clone(), a.bwd_fn().clone()))
            }
            (AnyOptic::Adapter(a), FamilyTag::Prism) => {
                AnyOptic::Prism(Prism::inj(a.fwd_fn().clone(), a.bwd_fn().clone()))
            }
            (AnyOptic::Adapter(a), FamilyTag::AchLens) => {
                AnyOptic::AchLens(AchLens::inj(a.fwd_fn().clone(), a.bwd_fn().clone()))
            }
            (AnyOptic::Adapter(a), FamilyTag::Optional) => {
                AnyOptic::Optional(Optional::inj(a.fwd_fn().clone(), a.bwd_fn().clone()))
            }
            (AnyOptic::AchLens(l), _) => AnyOptic::Lens(l.to_lens()).promote(target)?,
            (AnyOptic::Lens(l), FamilyTag::Optional) => AnyOptic::Optional(Optional::from_lens(l)),
            (AnyOptic::Prism(p), FamilyTag::Optional) => AnyOptic::Optional(Optional::from_prism(p)),
            _ => unreachable!("every order edge below SETTER is handled above"),
        })
    }

    /// `self ∘ inner` in the join of both families.
    pub fn compose(&self, inner: &AnyOptic<V>) -> AnyOptic<V> {
        let tag = self.tag().join(inner.tag());
        let outer = self.promote(tag).expect("join is an upper bound");
        let inner = inner.promote(tag).expect("join is an upper bound");
        match (outer, inner) {
            (AnyOptic::Adapter(a), AnyOptic::Adapter(b)) => AnyOptic::Adapter(a.compose(&b)),
            (AnyOptic::Lens(a), AnyOptic::Lens(b)) => AnyOptic::Lens(a.compose(&b)),
            (AnyOptic::Prism(a), AnyOptic::Prism(b)) => AnyOptic::Prism(a.compose(&b)),
            (AnyOptic::Optional(a), AnyOptic::Optional(b)) => AnyOptic::Optional(a.compose(&b)),
            (AnyOptic::AchLens(a), AnyOptic::AchLens(b)) => AnyOptic::AchLens(a.compose(&b)),
            (AnyOptic::Setter(a), AnyOptic::Setter(b)) => AnyOptic::Setter(a.compose(&b)),
            _ => unreachable!("both sides were promoted to the same family"),
        }
    }

    pub fn map_optic(&self, h: Func<V>) -> Func<V> {
        match self {
            AnyOptic::Adapter(o) => o.map_optic(h),
            AnyOptic::Lens(o) => o.map_optic(h),
            AnyOptic::Prism(o) => o.map_optic(h),
            AnyOptic::Optional(o) => o.map_optic(h),
            AnyOptic::AchLens(o) => o.map_optic(h),
            AnyOptic::Setter(o) => o.map_optic(h),
        }
    }

    fn unsupported(&self, operator: &'static str) -> OpticError {
        OpticError::UnsupportedOperator {
            operator,
            family: self.tag().to_string(),
        }
    }

    /// Total read; only for families at or below LENS.
    pub fn get(&self, s: &V) -> Result<V> {
        match self {
            AnyOptic::Adapter(a) => a.fwd(s),
            AnyOptic::Lens(l) => l.get(s),
            AnyOptic::AchLens(l) => l.get(s),
            _ => Err(self.unsupported("get")),
        }
    }

    /// Partial read; for families at or below OPTIONAL.
    pub fn matching(&self, s: &V) -> Result<Either<V, V>> {
        match self.promote(FamilyTag::Optional) {
            Ok(AnyOptic::Optional(o)) => o.matching(s),
            _ => Err(self.unsupported("match")),
        }
    }

    /// Construction from a focus; for families at or below PRISM.
    pub fn build(&self, b: &V) -> Result<V> {
        match self {
            AnyOptic::Adapter(a) => a.bwd(b),
            AnyOptic::Prism(p) => p.build(b),
            _ => Err(self.unsupported("build")),
        }
    }
}
