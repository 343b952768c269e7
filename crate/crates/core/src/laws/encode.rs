//! Laws of the encodings: enhanceable families, the structure of isomorphism
//! optics, and the conversions between concrete, isomorphism and profunctor
//! optics.

use super::{compare_optics, LawReport, Law, Mode, Observable, SampleOptic, Tally};
use crate::encode::{prof_encoding, unfunctorize, Functorize};
use crate::error::Result;
use crate::families::{AchLens, Adapter, FamilyTag, Lens, Optional, Prism, Setter};
use crate::finite::{FiniteDomain, FnTable};
use crate::functors::monoid::FunctorMonoid;
use crate::functors::{natural_registry, naturals_in, shapes_in, un_compose_fn, un_id_fn, wrap_compose_fn, wrap_id_fn, Shape};
use crate::iso::{observational_eq, Enhanceable, IsoOptic, Probe};
use crate::prof::{iso_to_prof, prof_to_iso, ProfOptic};
use crate::value::{identity, Func};

fn whole() -> FiniteDomain {
    FiniteDomain::ints("S", 3)
}

fn focus() -> FiniteDomain {
    FiniteDomain::labels("A", "a", 2)
}

fn compare_result<O: Observable>(t: &mut Tally, context: &str, expected: &O, actual: Result<O>, probe: &Probe) {
    match actual {
        Ok(actual) => compare_optics(t, expected, &actual, probe),
        Err(e) => t.record_error(context, &e),
    }
}

fn carrier(shape: &Shape, focus: &FiniteDomain) -> FiniteDomain {
    shape.carrier(focus).expect("registry shapes have finite residuals")
}

/// The enhanceable laws of `O` at every registry shape of `M` and every
/// registered natural transformation between them.
pub fn check_enhanceable_laws<M: FunctorMonoid, O: Enhanceable<M> + Observable>(
    seed: u64,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let mut rng = super::rng(seed);
    let (a, x) = (focus(), FiniteDomain::ints("X", 2));
    let mut id_law = Tally::new(Law::EnhanceableId, subject, mode);
    let mut compose_law = Tally::new(Law::EnhanceableCompose, subject, mode);
    let mut wedge = Tally::new(Law::EnhanceableWedge, subject, mode);
    let mut natural = Tally::new(Law::EnhanceableNaturality, subject, mode);
    let mut map_law = Tally::new(Law::EnhanceableMap, subject, mode);

    let id_probe = Probe::simple(&carrier(&Shape::Id, &a), &a);
    compare_result(&mut id_law, "Id", &O::inj(un_id_fn(), wrap_id_fn()), O::enhance_op(&Shape::Id), &id_probe);

    for shape in shapes_in(M::FAMILY) {
        let fa = carrier(&shape, &a);
        let probe = Probe::simple(&fa, &a);
        let op = match O::enhance_op(&shape) {
            Ok(op) => op,
            Err(e) => {
                map_law.record_error(shape.to_string(), &e);
                continue;
            }
        };

        if let Shape::Compose(f, g) = &shape {
            let staged = O::enhance_op(f)
                .and_then(|ef| Ok(O::inj(un_compose_fn(), wrap_compose_fn()).compose(&ef).compose(&O::enhance_op(g)?)));
            compare_result(&mut compose_law, &shape.to_string(), &op, staged, &probe);
        }

        for table in Probe::simple(&fa, &a).tables() {
            let h = table.to_func();
            let (mapped, fmap) = (op.map_optic(h.clone()), shape.map(&h));
            for v in fa.iter() {
                map_law.record(
                    || vec![format!("F = {shape}"), format!("h = {table}"), format!("fa = {v}")],
                    &fmap(v),
                    &mapped(v),
                );
            }
        }

        // k: a -> x, l: x -> a; both sides are optics x x (F a) (F a).
        for _ in 0..4 {
            let (k, l) = (FnTable::random(&mut rng, &a, &x), FnTable::random(&mut rng, &x, &a));
            let (kf, lf) = (k.to_func(), l.to_func());
            let lhs = op.compose(&O::inj(kf.clone(), lf.clone()));
            let rhs = O::enhance_op(&shape).map(|e| O::inj(shape.map(&kf), shape.map(&lf)).compose(&e));
            compare_result(&mut natural, &format!("F = {shape}, k = {k}, l = {l}"), &lhs, rhs, &Probe::simple(&fa, &x));
        }
    }

    for n in naturals_in(M::FAMILY) {
        let probe = Probe::simple(&carrier(&n.source, &a), &a);
        let lhs = O::enhance_op(&n.source).map(|e| O::inj(identity(), n.as_fn()).compose(&e));
        let rhs = O::enhance_op(&n.target).map(|e| O::inj(n.as_fn(), identity()).compose(&e));
        match lhs {
            Ok(lhs) => compare_result(&mut wedge, n.name, &lhs, rhs, &probe),
            Err(e) => wedge.record_error(n.name, &e),
        }
    }

    vec![
        id_law.finish(),
        compose_law.finish(),
        wedge.finish(),
        natural.finish(),
        map_law.finish(),
    ]
}

/// The enhanceable laws of the concrete family named by `tag`, at its
/// canonical functor family.
pub fn check_functorization_laws(tag: FamilyTag, seed: u64, mode: Mode) -> Vec<LawReport> {
    fn run<O: Functorize + Observable + Enhanceable<O::Monoid>>(seed: u64, mode: Mode) -> Vec<LawReport> {
        check_enhanceable_laws::<O::Monoid, O>(seed, O::TAG.name(), mode)
    }
    match tag {
        FamilyTag::Adapter => run::<Adapter>(seed, mode),
        FamilyTag::Lens => run::<Lens>(seed, mode),
        FamilyTag::Prism => run::<Prism>(seed, mode),
        FamilyTag::Optional => run::<Optional>(seed, mode),
        FamilyTag::AchLens => run::<AchLens>(seed, mode),
        FamilyTag::Setter => run::<Setter>(seed, mode),
    }
}

/// Normal form on sampled optics, and the retraction property at every
/// registry shape: `IsoOptic f α β` equals `enhanceIso f` exactly when
/// `β ∘ α = id`.
pub fn check_iso_structure<M: FunctorMonoid>(seed: u64, samples: usize, subject: &str, mode: Mode) -> Vec<LawReport> {
    let mut rng = super::rng(seed);
    let (s, a) = (whole(), focus());
    let mut normal = Tally::new(Law::IsoNormalForm, subject, mode);
    for _ in 0..samples {
        let iso = IsoOptic::<M>::sample(&mut rng, &s, &a);
        compare_optics(&mut normal, &iso, &iso.normal_form(), &Probe::simple(&s, &a));
    }

    // Equality up to a natural transformation forces `beta` to be natural,
    // so `beta` ranges over the identity and the registered endo-naturals.
    let mut retraction = Tally::new(Law::IsoRetraction, subject, mode);
    let naturals = natural_registry();
    for shape in shapes_in(M::FAMILY) {
        let fa = carrier(&shape, &a);
        let probe = Probe::simple(&fa, &a);
        let enhanced = IsoOptic::<M>::enhance(&shape).expect("registry member");
        let mut betas: Vec<(String, Func)> = vec![("id".into(), identity())];
        betas.extend(
            naturals
                .iter()
                .filter(|n| n.source == shape && n.target == shape)
                .map(|n| (n.name.to_string(), n.as_fn())),
        );
        for (name, beta) in &betas {
            let table = FnTable::tabulate(&fa, beta);
            let mut alphas: Vec<(String, Func)> = Vec::new();
            if let Some(inv) = table.as_ref().ok().and_then(|t| t.inverse()) {
                alphas.push(("inverse".into(), inv.to_func()));
            }
            for trial in 0..samples {
                alphas.push((format!("random {trial}"), FnTable::random(&mut rng, &fa, &fa).to_func()));
            }
            for (alpha_name, alpha) in alphas {
                let retracts = fa.iter().all(|v| alpha(v).and_then(|w| beta(&w)).as_ref() == Ok(v));
                let iso = IsoOptic::<M>::new(shape.clone(), alpha, beta.clone()).expect("registry member");
                let equal = observational_eq(&iso, &enhanced, &probe);
                retraction.record_with(
                    || vec![format!("F = {shape}"), format!("beta = {name}"), format!("alpha = {alpha_name}")],
                    equal == retracts,
                    || (format!("equal = {retracts}"), format!("equal = {equal}")),
                );
            }
        }
    }
    vec![normal.finish(), retraction.finish()]
}

/// Both round trips of the representation theorem on sampled optics.
pub fn check_representation<M: FunctorMonoid>(
    seed: u64,
    samples: usize,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let mut rng = super::rng(seed);
    let (s, a) = (whole(), focus());
    let probe = Probe::simple(&s, &a);
    let mut iso_trip = Tally::new(Law::RepresentationIsoRoundTrip, subject, mode);
    let mut prof_trip = Tally::new(Law::RepresentationProfRoundTrip, subject, mode);
    for i in 0..samples {
        let iso = IsoOptic::<M>::sample(&mut rng, &s, &a);
        compare_result(&mut iso_trip, &format!("sample {i}"), &iso, prof_to_iso(&iso_to_prof(&iso)), &probe);
        let l = ProfOptic::<M>::sample(&mut rng, &s, &a);
        let back = prof_to_iso(&l).map(|i| iso_to_prof(&i));
        compare_result(&mut prof_trip, &format!("sample {i}"), &l, back, &probe);
    }
    vec![iso_trip.finish(), prof_trip.finish()]
}

/// `iso -> prof -> iso -> O -> iso` is the identity on sampled isomorphism
/// optics of `O`'s functor family.
pub fn check_rigidity<O: Functorize>(seed: u64, samples: usize, mode: Mode) -> LawReport {
    let mut rng = super::rng(seed);
    let (s, a) = (whole(), focus());
    let probe = Probe::simple(&s, &a);
    let mut t = Tally::new(Law::EndomorphismRigidity, O::TAG.name(), mode);
    for i in 0..samples {
        let iso = IsoOptic::<O::Monoid>::sample(&mut rng, &s, &a);
        let chain = prof_to_iso(&iso_to_prof(&iso))
            .and_then(|i| unfunctorize::<O>(&i))
            .map(|o| o.concrete_to_iso());
        compare_result(&mut t, &format!("sample {i}"), &iso, chain, &probe);
    }
    t.finish()
}

/// `unfunctorize ∘ concrete_to_iso = id` on the given optics, and the converse
/// on `samples` sampled isomorphism optics.
pub fn check_derivation<O: Functorize + Observable>(
    optics: &[O],
    whole: &FiniteDomain,
    focus: &FiniteDomain,
    seed: u64,
    samples: usize,
    mode: Mode,
) -> Vec<LawReport> {
    let probe = Probe::simple(whole, focus);
    let subject = O::TAG.name();
    let mut concrete = Tally::new(Law::DerivationConcrete, subject, mode);
    for (i, o) in optics.iter().enumerate() {
        compare_result(&mut concrete, &format!("optic {i}"), o, unfunctorize(&o.concrete_to_iso()), &probe);
    }
    let mut rng = super::rng(seed);
    let mut iso_side = Tally::new(Law::DerivationIso, subject, mode);
    for i in 0..samples {
        let iso = IsoOptic::<O::Monoid>::sample(&mut rng, whole, focus);
        let back = unfunctorize::<O>(&iso).map(|o| o.concrete_to_iso());
        compare_result(&mut iso_side, &format!("sample {i}"), &iso, back, &probe);
    }
    vec![concrete.finish(), iso_side.finish()]
}

/// `decode ∘ encode = id` on the given optics, and `encode ∘ decode = id` on
/// `samples` sampled profunctor optics.
pub fn check_encoding<O: Functorize + Observable>(
    optics: &[O],
    whole: &FiniteDomain,
    focus: &FiniteDomain,
    seed: u64,
    samples: usize,
    mode: Mode,
) -> Vec<LawReport> {
    let enc = prof_encoding::<O>();
    let probe = Probe::simple(whole, focus);
    let subject = O::TAG.name();
    let mut concrete = Tally::new(Law::EncodingConcrete, subject, mode);
    for (i, o) in optics.iter().enumerate() {
        compare_result(&mut concrete, &format!("optic {i}"), o, enc.decode(&enc.encode(o)), &probe);
    }
    let mut rng = super::rng(seed);
    let mut prof_side = Tally::new(Law::EncodingProf, subject, mode);
    for i in 0..samples {
        let l = ProfOptic::<O::Monoid>::sample(&mut rng, whole, focus);
        let back = enc.decode(&l).map(|o| enc.encode(&o));
        compare_result(&mut prof_side, &format!("sample {i}"), &l, back, &probe);
    }
    vec![concrete.finish(), prof_side.finish()]
}

/// Composable pairs and injected function pairs over `d0 <- d1 <- d2`.
pub struct MorphismSamples<A> {
    pub d0: FiniteDomain,
    pub d1: FiniteDomain,
    pub d2: FiniteDomain,
    /// `o1: d1 in d0`, `o2: d2 in d1`.
    pub pairs: Vec<(A, A)>,
    /// `f: d0 -> d1`, `g: d1 -> d0`.
    pub injections: Vec<(FnTable, FnTable)>,
}

impl<A: SampleOptic> MorphismSamples<A> {
    pub fn generate(seed: u64, count: usize) -> Self {
        let mut rng = super::rng(seed);
        let (d0, d1, d2) = (whole(), focus(), FiniteDomain::labels("X", "x", 2));
        let pairs = (0..count)
            .map(|_| (A::sample(&mut rng, &d0, &d1), A::sample(&mut rng, &d1, &d2)))
            .collect();
        let injections = (0..count)
            .map(|_| (FnTable::random(&mut rng, &d0, &d1), FnTable::random(&mut rng, &d1, &d0)))
            .collect();
        MorphismSamples {
            d0,
            d1,
            d2,
            pairs,
            injections,
        }
    }
}

/// `theta` preserves injection, composition and `map_optic`.
pub fn check_morphism<A: Observable, B: Observable>(
    theta: &dyn Fn(&A) -> Result<B>,
    samples: &MorphismSamples<A>,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let MorphismSamples { d0, d1, d2, pairs, injections } = samples;
    let mut inj = Tally::new(Law::MorphismInj, subject, mode);
    let mut comp = Tally::new(Law::MorphismCompose, subject, mode);
    let mut map = Tally::new(Law::MorphismMap, subject, mode);
    let p01 = Probe::simple(d0, d1);
    for (f, g) in injections {
        let (ff, gf): (Func, Func) = (f.to_func(), g.to_func());
        let expected = B::inj(ff.clone(), gf.clone());
        compare_result(&mut inj, &format!("f = {f}, g = {g}"), &expected, theta(&A::inj(ff, gf)), &p01);
    }
    for (i, (o1, o2)) in pairs.iter().enumerate() {
        let ctx = format!("pair {i}");
        let staged = theta(o1).and_then(|t1| Ok(t1.compose(&theta(o2)?)));
        match staged {
            Ok(staged) => compare_result(&mut comp, &ctx, &staged, theta(&o1.compose(o2)), &Probe::simple(d0, d2)),
            Err(e) => comp.record_error(&ctx, &e),
        }
        match theta(o1) {
            Ok(t1) => {
                for table in p01.tables() {
                    let h = table.to_func();
                    let (expected, actual) = (o1.map_optic(h.clone()), t1.map_optic(h));
                    for s in d0.iter() {
                        map.record(|| vec![ctx.clone(), format!("h = {table}"), format!("s = {s}")], &expected(s), &actual(s));
                    }
                }
            }
            Err(e) => map.record_error(&ctx, &e),
        }
    }
    vec![inj.finish(), comp.finish(), map.finish()]
}
