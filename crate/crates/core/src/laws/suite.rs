//! The standard suite: one default instance of every law, run concurrently and
//! merged into a deterministic report list.

use std::collections::BTreeMap;
use std::thread;

use super::{
    check_achlens_laws, check_adapter_laws, check_derivation, check_encoding,
    check_enhancing_laws, check_functor_laws, check_functorization_laws, check_iso_structure, check_lens_laws,
    check_monoid_closure, check_morphism, check_optic_family_laws, check_optic_family_laws_for_tag,
    check_optional_laws, check_prism_laws, check_representation, check_rigidity, check_setter_laws,
    gen_lawful_achlens, gen_lawful_adapter, gen_lawful_lens, gen_lawful_optional, gen_lawful_prism, gen_setter,
    FunctionArrowTest, GettingTest, IsoCapTest, Law, LawReport, MatchingTest, Mode, MorphismSamples, Status, Tower,
};
use crate::encode::{prof_encoding, unfunctorize, Functorize};
use crate::families::{FamilyTag, Lens};
use crate::finite::FiniteDomain;
use crate::functors::monoid::{Affine, AnyFunctor, FunctorMonoid, IdOnly, IsPointedProduct, IsProduct, IsSum};
use crate::functors::{registry_residual, shape_registry, FunctorFamily, Shape};
use crate::iso::IsoOptic;
use crate::prof::{iso_to_prof, prof_to_iso, ProfOptic};

/// Which checker covers each law. Every law appears exactly once.
pub fn law_registry() -> Vec<(Law, &'static str)> {
    use Law::*;
    let groups: [(&'static str, &[Law]); 16] = [
        ("check_lens_laws", &[GetPut, PutGet, PutPut]),
        ("check_achlens_laws", &[GetCreate]),
        ("check_prism_laws", &[MatchBuild, BuildMatch, MissIdentity]),
        ("check_optional_laws", &[OptionalMatchPut, OptionalPutMatch, OptionalMissPut]),
        ("check_adapter_laws", &[AdapterFwdBwd, AdapterBwdFwd]),
        ("check_setter_laws", &[SetterIdentity, SetterComposition]),
        (
            "check_optic_family_laws",
            &[ComposeAssociative, ComposeLeftIdentity, ComposeRightIdentity, InjIdentity, InjComposition, MapInj, MapCompose],
        ),
        (
            "check_functor_laws",
            &[FmapIdentity, FmapComposition, ProductRoundTrip, SumRoundTrip, MonoidClosure],
        ),
        (
            "check_enhancing_laws",
            &[DimapIdentity, DimapComposition, EnhanceId, EnhanceCompose, EnhanceWedge, EnhanceNaturality],
        ),
        (
            "check_enhanceable_laws",
            &[EnhanceableId, EnhanceableCompose, EnhanceableWedge, EnhanceableNaturality, EnhanceableMap],
        ),
        ("check_iso_structure", &[IsoNormalForm, IsoRetraction]),
        ("check_rigidity", &[EndomorphismRigidity]),
        ("check_morphism", &[MorphismInj, MorphismCompose, MorphismMap]),
        ("check_representation", &[RepresentationIsoRoundTrip, RepresentationProfRoundTrip]),
        ("check_derivation", &[DerivationConcrete, DerivationIso]),
        ("check_encoding", &[EncodingConcrete, EncodingProf]),
    ];
    groups
        .iter()
        .flat_map(|(checker, laws)| laws.iter().map(move |&l| (l, *checker)))
        .collect()
}

/// Folds reports with the same law and subject into one, sorted by law and
/// then subject. The first counterexample in input order is kept.
pub fn merge_reports(reports: impl IntoIterator<Item = LawReport>) -> Vec<LawReport> {
    let mut merged: BTreeMap<(Law, String), LawReport> = BTreeMap::new();
    for r in reports {
        match merged.get_mut(&(r.law, r.subject.clone())) {
            None => {
                merged.insert((r.law, r.subject.clone()), r);
            }
            Some(m) => {
                m.cases += r.cases;
                m.failures += r.failures;
                if m.counterexample.is_none() {
                    m.counterexample = r.counterexample;
                }
                m.status = match (m.status, r.status) {
                    (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
                    (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
                    _ => Status::Pass,
                };
            }
        }
    }
    merged.into_values().collect()
}

/// One JSON object per line.
pub fn to_jsonl(reports: &[LawReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
        .collect()
}

type Job = Box<dyn FnOnce() -> Vec<LawReport> + Send>;

fn job(f: impl FnOnce() -> Vec<LawReport> + Send + 'static) -> Job {
    Box::new(f)
}

fn iso_jobs<M: FunctorMonoid>(seed: u64, jobs: &mut Vec<Job>) {
    let subject = format!("IsoOptic<{}>", M::FAMILY.name());
    let s = subject.clone();
    jobs.push(job(move || check_optic_family_laws::<IsoOptic<M>>(seed, 6, &Tower::default(), &s, Mode::Exhaustive)));
    let s = subject.clone();
    jobs.push(job(move || check_iso_structure::<M>(seed, 16, &s, Mode::Exhaustive)));
    let s = subject.clone();
    jobs.push(job(move || check_representation::<M>(seed, 16, &s, Mode::Exhaustive)));
    jobs.push(job(move || {
        let cut = IsoCapTest::<M>::default();
        check_enhancing_laws(&cut, seed, 4, &format!("IsoCapability<{}>", M::FAMILY.name()), Mode::Exhaustive)
    }));
}

fn conversion_jobs<O>(seed: u64, lawful: Vec<O>, whole: FiniteDomain, focus: FiniteDomain, jobs: &mut Vec<Job>)
where
    O: Functorize + super::SampleOptic + Send + Sync + 'static,
{
    let name = O::TAG.name();
    jobs.push(job(move || {
        let mut out = check_derivation(&lawful, &whole, &focus, seed, 16, Mode::Exhaustive);
        out.extend(check_encoding(&lawful, &whole, &focus, seed, 16, Mode::Exhaustive));
        out
    }));
    jobs.push(job(move || vec![check_rigidity::<O>(seed, 16, Mode::Exhaustive)]));
    jobs.push(job(move || {
        let concrete = MorphismSamples::<O>::generate(seed, 8);
        let isos = MorphismSamples::<IsoOptic<O::Monoid>>::generate(seed, 8);
        let profs = MorphismSamples::<ProfOptic<O::Monoid>>::generate(seed, 8);
        let enc = prof_encoding::<O>();
        let m = Mode::Exhaustive;
        let mut out = check_morphism(&|o: &O| Ok(o.concrete_to_iso()), &concrete, &format!("concrete_to_iso[{name}]"), m);
        out.extend(check_morphism(&unfunctorize::<O>, &isos, &format!("unfunctorize[{name}]"), m));
        out.extend(check_morphism(&|i: &IsoOptic<O::Monoid>| Ok(iso_to_prof(i)), &isos, &format!("iso_to_prof[{name}]"), m));
        out.extend(check_morphism(&prof_to_iso, &profs, &format!("prof_to_iso[{name}]"), m));
        out.extend(check_morphism(&|o: &O| Ok(enc.encode(o)), &concrete, &format!("encode[{name}]"), m));
        out.extend(check_morphism(&|l: &ProfOptic<O::Monoid>| enc.decode(l), &profs, &format!("decode[{name}]"), m));
        out
    }));
}

fn domains() -> (FiniteDomain, FiniteDomain, FiniteDomain) {
    (FiniteDomain::ints("S", 4), registry_residual(), FiniteDomain::labels("A", "a", 2))
}

/// Lawful optics of every family over [`domains`], seeded from `seed`.
fn concrete_jobs(seed: u64, jobs: &mut Vec<Job>) {
    let (s, r, a) = domains();
    let lens = |i: u64| gen_lawful_lens(seed + i, &s, &r, &a).expect("sizes match");
    let lenses: Vec<Lens> = (0..8).map(lens).collect();
    let prism_s = FiniteDomain::ints("S", r.len() + a.len());
    let prisms: Vec<_> = (0..8).map(|i| gen_lawful_prism(seed + i, &prism_s, &r, &a).expect("sizes match")).collect();
    let achlenses: Vec<_> = (0..8).map(|i| gen_lawful_achlens(seed + i, &s, &r, &a).expect("sizes match")).collect();
    let miss = FiniteDomain::labels("M", "m", 1);
    let opt_s = FiniteDomain::ints("S", miss.len() + r.len() * a.len());
    let optionals: Vec<_> =
        (0..8).map(|i| gen_lawful_optional(seed + i, &opt_s, &miss, &r, &a).expect("sizes match")).collect();
    let ad_s = FiniteDomain::ints("S", a.len());
    let adapters: Vec<_> = (0..8).map(|i| gen_lawful_adapter(seed + i, &ad_s, &a).expect("sizes match")).collect();
    let pair = Shape::pair(crate::functors::Residual::finite(r.clone()));
    let setters: Vec<_> = (0..8).map(|i| gen_setter(seed + i, &s, &pair, &a).expect("sizes match")).collect();

    let m = Mode::Exhaustive;
    {
        let (lenses, s, a) = (lenses.clone(), s.clone(), a.clone());
        jobs.push(job(move || lenses.iter().flat_map(|l| check_lens_laws(l, &s, &a, "Lens", m)).collect()));
    }
    {
        let (achlenses, s, a) = (achlenses.clone(), s.clone(), a.clone());
        jobs.push(job(move || achlenses.iter().flat_map(|l| check_achlens_laws(l, &s, &a, "AchLens", m)).collect()));
    }
    {
        let (prisms, ps, a) = (prisms.clone(), prism_s.clone(), a.clone());
        jobs.push(job(move || prisms.iter().flat_map(|p| check_prism_laws(p, &ps, &a, "Prism", m)).collect()));
    }
    {
        let (optionals, os, a) = (optionals.clone(), opt_s.clone(), a.clone());
        jobs.push(job(move || optionals.iter().flat_map(|o| check_optional_laws(o, &os, &a, "Optional", m)).collect()));
    }
    {
        let (adapters, ads, a) = (adapters.clone(), ad_s.clone(), a.clone());
        jobs.push(job(move || adapters.iter().flat_map(|o| check_adapter_laws(o, &ads, &a, "Adapter", m)).collect()));
    }
    {
        let (setters, s, a) = (setters.clone(), s.clone(), a.clone());
        jobs.push(job(move || setters.iter().flat_map(|o| check_setter_laws(o, &s, &a, "Setter", m)).collect()));
    }

    conversion_jobs(seed, lenses, s.clone(), a.clone(), jobs);
    conversion_jobs(seed, achlenses, s.clone(), a.clone(), jobs);
    conversion_jobs(seed, prisms, prism_s, a.clone(), jobs);
    conversion_jobs(seed, optionals, opt_s, a.clone(), jobs);
    conversion_jobs(seed, adapters, ad_s, a.clone(), jobs);
    conversion_jobs(seed, setters, s, a, jobs);
}

/// Runs every law once with default domains and sample counts.
pub fn standard_suite(seed: u64) -> Vec<LawReport> {
    let mut jobs: Vec<Job> = Vec::new();
    concrete_jobs(seed, &mut jobs);
    for tag in FamilyTag::ALL {
        jobs.push(job(move || check_optic_family_laws_for_tag(tag, seed, 6, Mode::Exhaustive)));
        jobs.push(job(move || check_functorization_laws(tag, seed, Mode::Exhaustive)));
    }
    iso_jobs::<AnyFunctor>(seed, &mut jobs);
    iso_jobs::<IsProduct>(seed, &mut jobs);
    iso_jobs::<IsSum>(seed, &mut jobs);
    iso_jobs::<IsPointedProduct>(seed, &mut jobs);
    iso_jobs::<IdOnly>(seed, &mut jobs);
    iso_jobs::<Affine>(seed, &mut jobs);
    jobs.push(job(move || check_enhancing_laws(&FunctionArrowTest, seed, 4, "FunctionArrow", Mode::Exhaustive)));
    jobs.push(job(move || check_enhancing_laws(&GettingTest::default(), seed, 4, "Getting", Mode::Exhaustive)));
    jobs.push(job(move || check_enhancing_laws(&MatchingTest::default(), seed, 4, "Matching", Mode::Exhaustive)));
    jobs.push(job(|| {
        let focus = FiniteDomain::ints("A", 2);
        let mut out: Vec<LawReport> = shape_registry()
            .iter()
            .flat_map(|shape| check_functor_laws(shape, &focus, Mode::Exhaustive))
            .collect();
        out.extend(FunctorFamily::ALL.iter().map(|&f| check_monoid_closure(f, Mode::Exhaustive)));
        out
    }));
    merge_reports(run_jobs(jobs))
}

/// Runs jobs on a bounded pool of scoped threads. The output order follows the
/// job order, whatever the scheduling.
fn run_jobs(jobs: Vec<Job>) -> Vec<LawReport> {
    let workers = thread::available_parallelism().map_or(4, |n| n.get()).min(jobs.len().max(1));
    let mut buckets: Vec<Vec<(usize, Job)>> = (0..workers).map(|_| Vec::new()).collect();
    for (i, j) in jobs.into_iter().enumerate() {
        buckets[i % workers].push((i, j));
    }
    let mut results: Vec<(usize, Vec<LawReport>)> = thread::scope(|scope| {
        let handles: Vec<_> = buckets
            .into_iter()
            .map(|bucket| scope.spawn(move || bucket.into_iter().map(|(i, j)| (i, j())).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("law checkers do not panic"))
            .collect()
    });
    results.sort_by_key(|(i, _)| *i);
    results.into_iter().flat_map(|(_, r)| r).collect()
}
