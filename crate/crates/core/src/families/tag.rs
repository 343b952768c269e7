use std::fmt;

/// Names an optic family and orders families by embedding.
///
/// `ADAPTER ⊑ ACHLENS ⊑ LENS ⊑ OPTIONAL ⊑ SETTER` and
/// `ADAPTER ⊑ PRISM ⊑ OPTIONAL`. An achromatic lens embeds into the lenses by
/// forgetting `create`, so it joins like a lens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Adapter,
    Lens,
    Prism,
    Optional,
    AchLens,
    Setter,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::Adapter,
        FamilyTag::Lens,
        FamilyTag::Prism,
        FamilyTag::Optional,
        FamilyTag::AchLens,
        FamilyTag::Setter,
    ];

    /// Direct embeddings; `le` is their reflexive-transitive closure.
    fn covers(self) -> &'static [FamilyTag] {
        use FamilyTag::*;
        match self {
            Adapter => &[Lens, Prism, AchLens],
            AchLens => &[Lens],
            Lens => &[Optional],
            Prism => &[Optional],
            Optional => &[Setter],
            Setter => &[],
        }
    }

    /// `self ⊑ other`.
    pub fn le(self, other: FamilyTag) -> bool {
        self == other || self.covers().iter().any(|&c| c.le(other))
    }

    /// Least upper bound.
    pub fn join(self, other: FamilyTag) -> FamilyTag {
        let bounds: Vec<FamilyTag> = FamilyTag::ALL
            .into_iter()
            .filter(|u| self.le(*u) && other.le(*u))
            .collect();
        *bounds
            .iter()
            .find(|&&u| bounds.iter().all(|&v| u.le(v)))
            .expect("family order is a lattice with top SETTER")
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Adapter => "ADAPTER",
            FamilyTag::Lens => "LENS",
            FamilyTag::Prism => "PRISM",
            FamilyTag::Optional => "OPTIONAL",
            FamilyTag::AchLens => "ACHLENS",
            FamilyTag::Setter => "SETTER",
        }
    }

    /// Whether the family offers a total `get`.
    pub fn supports_get(self) -> bool {
        self.le(FamilyTag::Lens)
    }

    /// Whether the family offers `match`.
    pub fn supports_match(self) -> bool {
        self.le(FamilyTag::Optional)
    }

    /// Whether the family offers `build`.
    pub fn supports_build(self) -> bool {
        self.le(FamilyTag::Prism)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
