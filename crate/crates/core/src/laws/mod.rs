//! Law checkers over finite domains.
//!
//! Every checker evaluates both sides of an equation on enumerated inputs and
//! records the outcome in a [`Tally`]. Failures are data: a checker never
//! panics on a broken law, it returns a [`LawReport`] naming the first
//! counterexample in enumeration order.

mod concrete;
mod encode;
mod enhancing;
mod family;
mod functor;
mod gen;
mod observe;
mod suite;

pub use concrete::{
    check_achlens_laws, check_adapter_laws, check_lens_laws, check_optional_laws, check_prism_laws,
    check_setter_laws, unlawful_lens,
};
pub use encode::{
    check_derivation, check_encoding, check_enhanceable_laws, check_functorization_laws, check_iso_structure,
    check_morphism, check_representation, check_rigidity, MorphismSamples,
};
pub use enhancing::{
    check_enhancing_laws, BrokenCompose, CapabilityUnderTest, FunctionArrowTest, GettingTest, IsoCapTest,
    MatchingTest,
};
pub use family::{check_optic_family_laws, check_optic_family_laws_for_tag, Tower};
pub use functor::{check_functor_laws, check_monoid_closure};
pub use gen::{
    gen_lawful_achlens, gen_lawful_adapter, gen_lawful_lens, gen_lawful_optional, gen_lawful_prism, gen_setter,
    lens_from_bijection, rng, Bijection, SampleOptic,
};
pub use observe::{compare_optics, Observable};
pub use suite::{law_registry, merge_reports, standard_suite, to_jsonl};

pub use crate::finite::FiniteDomain;

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::finite::EXHAUSTIVE_CAP;
use crate::value::Value;

/// Every law with a checker. The coverage guard in [`standard_suite`] fails
/// when one of these produces no report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Law {
    // Lens, achromatic lens.
    GetPut,
    PutGet,
    PutPut,
    GetCreate,
    // Prism.
    MatchBuild,
    BuildMatch,
    MissIdentity,
    // Optional.
    OptionalMatchPut,
    OptionalPutMatch,
    OptionalMissPut,
    // Adapter.
    AdapterFwdBwd,
    AdapterBwdFwd,
    // Setter.
    SetterIdentity,
    SetterComposition,
    // Optic family axioms.
    ComposeAssociative,
    ComposeLeftIdentity,
    ComposeRightIdentity,
    InjIdentity,
    InjComposition,
    MapInj,
    MapCompose,
    // Functors and functor families.
    FmapIdentity,
    FmapComposition,
    ProductRoundTrip,
    SumRoundTrip,
    MonoidClosure,
    // Profunctors and enhancing capabilities.
    DimapIdentity,
    DimapComposition,
    EnhanceId,
    EnhanceCompose,
    EnhanceWedge,
    EnhanceNaturality,
    // Enhanceable optic families, functorizations included.
    EnhanceableId,
    EnhanceableCompose,
    EnhanceableWedge,
    EnhanceableNaturality,
    EnhanceableMap,
    // Isomorphism optics.
    IsoNormalForm,
    IsoRetraction,
    EndomorphismRigidity,
    // Conversions.
    MorphismInj,
    MorphismCompose,
    MorphismMap,
    RepresentationIsoRoundTrip,
    RepresentationProfRoundTrip,
    DerivationConcrete,
    DerivationIso,
    EncodingConcrete,
    EncodingProf,
}

impl Law {
    pub const ALL: [Law; 49] = [
        Law::GetPut,
        Law::PutGet,
        Law::PutPut,
        Law::GetCreate,
        Law::MatchBuild,
        Law::BuildMatch,
        Law::MissIdentity,
        Law::OptionalMatchPut,
        Law::OptionalPutMatch,
        Law::OptionalMissPut,
        Law::AdapterFwdBwd,
        Law::AdapterBwdFwd,
        Law::SetterIdentity,
        Law::SetterComposition,
        Law::ComposeAssociative,
        Law::ComposeLeftIdentity,
        Law::ComposeRightIdentity,
        Law::InjIdentity,
        Law::InjComposition,
        Law::MapInj,
        Law::MapCompose,
        Law::FmapIdentity,
        Law::FmapComposition,
        Law::ProductRoundTrip,
        Law::SumRoundTrip,
        Law::MonoidClosure,
        Law::DimapIdentity,
        Law::DimapComposition,
        Law::EnhanceId,
        Law::EnhanceCompose,
        Law::EnhanceWedge,
        Law::EnhanceNaturality,
        Law::EnhanceableId,
        Law::EnhanceableCompose,
        Law::EnhanceableWedge,
        Law::EnhanceableNaturality,
        Law::EnhanceableMap,
        Law::IsoNormalForm,
        Law::IsoRetraction,
        Law::EndomorphismRigidity,
        Law::MorphismInj,
        Law::MorphismCompose,
        Law::MorphismMap,
        Law::RepresentationIsoRoundTrip,
        Law::RepresentationProfRoundTrip,
        Law::DerivationConcrete,
        Law::DerivationIso,
        Law::EncodingConcrete,
        Law::EncodingProf,
    ];

    /// The equation being checked, in the crate's notation.
    pub fn statement(self) -> &'static str {
        match self {
            Law::GetPut => "get (put b s) = b",
            Law::PutGet => "put (get s) s = s",
            Law::PutPut => "put b' (put b s) = put b' s",
            Law::GetCreate => "get (create b) = b",
            Law::MatchBuild => "match (build b) = Right b",
            Law::BuildMatch => "match s = Right a => build a = s",
            Law::MissIdentity => "match s = Left t => t = s",
            Law::OptionalMatchPut => "match s = Right a => put a s = s",
            Law::OptionalPutMatch => "match s = Right _ => match (put b s) = Right b",
            Law::OptionalMissPut => "match s = Left t => put b s = t",
            Law::AdapterFwdBwd => "fwd (bwd a) = a",
            Law::AdapterBwdFwd => "bwd (fwd s) = s",
            Law::SetterIdentity => "over id = id",
            Law::SetterComposition => "over (f . g) = over f . over g",
            Law::ComposeAssociative => "(o1 . o2) . o3 = o1 . (o2 . o3)",
            Law::ComposeLeftIdentity => "id . o = o",
            Law::ComposeRightIdentity => "o . id = o",
            Law::InjIdentity => "mapOptic (injOptic id id) h = h",
            Law::InjComposition => "injOptic (f' . f) (g . g') = injOptic f g . injOptic f' g'",
            Law::MapInj => "mapOptic (injOptic f g) h = g . h . f",
            Law::MapCompose => "mapOptic (o1 . o2) = mapOptic o1 . mapOptic o2",
            Law::FmapIdentity => "fmap id = id",
            Law::FmapComposition => "fmap (h . k) = fmap h . fmap k",
            Law::ProductRoundTrip => "fromProduct . toProduct = id and toProduct . fromProduct = id",
            Law::SumRoundTrip => "fromSum . toSum = id",
            Law::MonoidClosure => "Id is a member and members compose",
            Law::DimapIdentity => "dimap id id = id",
            Law::DimapComposition => "dimap (f' . f) (g . g') = dimap f g . dimap f' g'",
            Law::EnhanceId => "enhance @Id = dimap unId Id",
            Law::EnhanceCompose => "enhance @(Compose f g) = dimap unCompose Compose . enhance @f . enhance @g",
            Law::EnhanceWedge => "dimap id alpha . enhance @f = dimap alpha id . enhance @g",
            Law::EnhanceNaturality => "enhance @f . dimap k l = dimap (fmap k) (fmap l) . enhance @f",
            Law::EnhanceableId => "enhanceOp @Id = injOptic unId Id",
            Law::EnhanceableCompose => {
                "enhanceOp @(Compose f g) = injOptic unCompose Compose . enhanceOp @f . enhanceOp @g"
            }
            Law::EnhanceableWedge => "injOptic id alpha . enhanceOp @f = injOptic alpha id . enhanceOp @g",
            Law::EnhanceableNaturality => {
                "enhanceOp @f . injOptic k l = injOptic (fmap k) (fmap l) . enhanceOp @f"
            }
            Law::EnhanceableMap => "mapOptic (enhanceOp @f) = fmap",
            Law::IsoNormalForm => "IsoOptic a b = injOptic a b . enhanceIso",
            Law::IsoRetraction => "IsoOptic a b = enhanceIso <=> b . a = id",
            Law::EndomorphismRigidity => "a conversion chain IsoOptic -> IsoOptic is the identity",
            Law::MorphismInj => "theta (injOptic f g) = injOptic f g",
            Law::MorphismCompose => "theta (o1 . o2) = theta o1 . theta o2",
            Law::MorphismMap => "mapOptic (theta o) = mapOptic o",
            Law::RepresentationIsoRoundTrip => "profToIso (isoToProf i) = i",
            Law::RepresentationProfRoundTrip => "isoToProf (profToIso l) = l",
            Law::DerivationConcrete => "unfunctorize (concreteToIso o) = o",
            Law::DerivationIso => "concreteToIso (unfunctorize i) = i",
            Law::EncodingConcrete => "decode (encode o) = o",
            Law::EncodingProf => "encode (decode l) = l",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    /// The evaluation cap was reached in exhaustive mode.
    Inconclusive,
}

/// Whether hitting the evaluation cap invalidates a check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Exhaustive,
    Budgeted,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one law on one subject. `failures == 0` exactly when no
/// counterexample is recorded.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub subject: String,
    pub status: Status,
    pub cases: u64,
    pub failures: u64,
    pub counterexample: Option<Counterexample>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {} [{}]: {} cases", self.status, self.law, self.subject, self.cases)?;
        if let Some(c) = &self.counterexample {
            write!(
                f,
                ", {} failures; first at {} expected {} got {}",
                self.failures,
                c.inputs.join(", "),
                c.expected,
                c.actual
            )?;
        }
        Ok(())
    }
}

pub(crate) fn show(r: &Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Accumulates cases for one law.
#[derive(Clone, Debug)]
pub struct Tally {
    law: Law,
    subject: String,
    mode: Mode,
    cases: u64,
    failures: u64,
    capped: bool,
    counterexample: Option<Counterexample>,
}

impl Tally {
    pub fn new(law: Law, subject: impl Into<String>, mode: Mode) -> Self {
        Tally {
            law,
            subject: subject.into(),
            mode,
            cases: 0,
            failures: 0,
            capped: false,
            counterexample: None,
        }
    }

    /// False once the evaluation cap is reached.
    pub fn open(&self) -> bool {
        !self.capped
    }

    /// One evaluation of `expected = actual`. An error on either side is a
    /// failure.
    pub fn record(&mut self, inputs: impl FnOnce() -> Vec<String>, expected: &Result<Value>, actual: &Result<Value>) {
        let holds = expected.is_ok() && expected == actual;
        self.record_with(inputs, holds, || (show(expected), show(actual)));
    }

    /// One evaluation of a property that is not an equation of values.
    pub fn record_with(
        &mut self,
        inputs: impl FnOnce() -> Vec<String>,
        holds: bool,
        sides: impl FnOnce() -> (String, String),
    ) {
        if self.cases as u128 >= EXHAUSTIVE_CAP {
            self.capped = true;
            return;
        }
        self.cases += 1;
        if !holds {
            self.failures += 1;
            if self.counterexample.is_none() {
                let (expected, actual) = sides();
                self.counterexample = Some(Counterexample {
                    inputs: inputs(),
                    expected,
                    actual,
                });
            }
        }
    }

    /// Records a setup step that failed before any equation could be evaluated.
    pub fn record_error(&mut self, context: impl Into<String>, error: &crate::error::OpticError) {
        let context = context.into();
        self.record_with(|| vec![context], false, || ("a value".into(), format!("error: {error}")));
    }

    pub fn finish(self) -> LawReport {
        let status = if self.failures > 0 {
            Status::Fail
        } else if self.capped && self.mode == Mode::Exhaustive {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        LawReport {
            law: self.law,
            subject: self.subject,
            status,
            cases: self.cases,
            failures: self.failures,
            counterexample: self.counterexample,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_kept() {
        let mut t = Tally::new(Law::GetPut, "t", Mode::Exhaustive);
        t.record(|| vec!["a".into()], &Ok(Value::int(1)), &Ok(Value::int(1)));
        t.record(|| vec!["b".into()], &Ok(Value::int(1)), &Ok(Value::int(2)));
        t.record(|| vec!["c".into()], &Ok(Value::int(1)), &Ok(Value::int(3)));
        let r = t.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!((r.cases, r.failures), (3, 2));
        assert_eq!(r.counterexample.unwrap().inputs, vec!["b".to_string()]);
    }

    #[test]
    fn errors_never_pass() {
        let mut t = Tally::new(Law::GetPut, "t", Mode::Exhaustive);
        let e = Err(crate::error::OpticError::Domain("x".into()));
        t.record(Vec::new, &e, &e);
        assert_eq!(t.finish().status, Status::Fail);
    }

    #[test]
    fn cap_makes_exhaustive_checks_inconclusive() {
        for (mode, status) in [(Mode::Exhaustive, Status::Inconclusive), (Mode::Budgeted, Status::Pass)] {
            let mut t = Tally::new(Law::PutPut, "t", mode);
            let v = Ok(Value::Unit);
            while t.open() {
                t.record(Vec::new, &v, &v);
            }
            let r = t.finish();
            assert_eq!(r.status, status);
            assert_eq!(r.cases as u128, EXHAUSTIVE_CAP);
        }
    }

    #[test]
    fn law_list_is_duplicate_free() {
        let mut laws = Law::ALL.to_vec();
        laws.sort();
        laws.dedup();
        assert_eq!(laws.len(), Law::ALL.len());
    }
}
