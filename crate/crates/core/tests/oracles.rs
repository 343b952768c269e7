//! Enumeration oracles: each test compares library behaviour against a
//! brute-force count or a direct table computation.

use std::collections::BTreeSet;

use opticat_core::encode::Functorize;
use opticat_core::families::{just, multi_map_optic, Adapter, AchLens, Lens, OpticFamily, Optional, Prism};
use opticat_core::finite::{FiniteDomain, FnTable};
use opticat_core::functors::monoid::{Affine, AnyFunctor};
use opticat_core::functors::{natural_registry, shapes_in, FunctorFamily, Shape};
use opticat_core::iso::{observational_eq, IsoOptic, Probe};
use opticat_core::laws::{
    check_lens_laws, gen_lawful_achlens, gen_lawful_lens, lens_from_bijection, rng, Bijection, Mode, SampleOptic,
};
use opticat_core::prof::{
    build_operator, get_operator, iso_to_prof, match_operator, prof_first, prof_just, prof_right, prof_second,
    prof_to_iso, ProfOptic,
};
use opticat_core::value::{compose_fn, constant, func, Either, Value};

/// Every permutation of `0..n`, by brute force over all `n^n` tables.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let d = FiniteDomain::ints("N", n);
    FnTable::all(&d, &d)
        .map(|t| t.image().iter().map(|v| v.as_int().unwrap() as usize).collect::<Vec<_>>())
        .filter(|p| p.iter().collect::<BTreeSet<_>>().len() == n)
        .collect()
}

/// A lens's full behaviour as tables.
fn lens_tables(l: &Lens, s: &FiniteDomain, a: &FiniteDomain) -> (Vec<Value>, Vec<Value>) {
    let gets = s.iter().map(|x| l.get(x).unwrap()).collect();
    let puts = s.iter().flat_map(|x| a.iter().map(move |b| l.put(b, x).unwrap())).collect();
    (gets, puts)
}

/// `S ≅ R × A` with `|S| = 6`, `|R| = 2`, `|A| = 3`: all 720 bijections give
/// lawful lenses, and relabelling `R` identifies them in pairs, so exactly
/// 6!/2! = 360 lenses are distinct.
#[test]
fn bijections_give_exactly_360_lawful_lenses() {
    let (s, r, a) = (FiniteDomain::ints("S", 6), FiniteDomain::labels("R", "r", 2), FiniteDomain::labels("A", "a", 3));
    let ra = FiniteDomain::product(&r, &a);
    let perms = permutations(6);
    assert_eq!(perms.len(), 720);
    let mut distinct = BTreeSet::new();
    for p in perms {
        let lens = lens_from_bijection(&Bijection::new(&s, &ra, p).unwrap());
        for report in check_lens_laws(&lens, &s, &a, "bijection", Mode::Exhaustive) {
            assert!(report.passed(), "{report}");
        }
        let (g, p) = lens_tables(&lens, &s, &a);
        distinct.insert(format!("{g:?}{p:?}"));
    }
    assert_eq!(distinct.len(), 360);
}

/// Observational equality of lawful lenses coincides with equality of their
/// get and put tables.
#[test]
fn distinct_lawful_lenses_are_distinguishable() {
    let (s, r, a) = (FiniteDomain::ints("S", 4), FiniteDomain::labels("R", "r", 2), FiniteDomain::labels("A", "a", 2));
    let ra = FiniteDomain::product(&r, &a);
    let lenses: Vec<Lens> = permutations(4)
        .into_iter()
        .map(|p| lens_from_bijection(&Bijection::new(&s, &ra, p).unwrap()))
        .collect();
    let probe = Probe::simple(&s, &a);
    for l1 in &lenses {
        for l2 in &lenses {
            let same = lens_tables(l1, &s, &a) == lens_tables(l2, &s, &a);
            assert_eq!(observational_eq(l1, l2, &probe), same);
        }
    }
}

/// `inj(f, g)` in the prism family always matches and builds with `g`, so
/// `map_optic(h) = g . h . f`; checked over every `f`, `g` and `h` on a
/// 5-element whole.
#[test]
fn injected_prisms_against_tables() {
    let (s, a) = (FiniteDomain::ints("S", 5), FiniteDomain::labels("A", "a", 2));
    let hs: Vec<FnTable> = FnTable::all(&a, &a).collect();
    for f in FnTable::all(&s, &a) {
        for g in FnTable::all(&a, &s) {
            let p = Prism::inj(f.to_func(), g.to_func());
            for x in s.iter() {
                assert_eq!(p.matching(x).unwrap(), Either::Right(f.apply(x).unwrap()));
            }
            for b in a.iter() {
                assert_eq!(p.build(b).unwrap(), g.apply(b).unwrap());
            }
            for h in &hs {
                let mapped = p.map_optic(h.to_func());
                for x in s.iter() {
                    let expected = g.apply(&h.apply(&f.apply(x).unwrap()).unwrap()).unwrap();
                    assert_eq!(mapped(x).unwrap(), expected);
                }
            }
        }
    }
}

#[test]
fn just_maps_the_payload() {
    let plus_one = func(|v: &Value| Ok(Value::int(v.as_int()? + 1)));
    let mapped = just().map_optic(plus_one);
    assert_eq!(mapped(&Value::Nothing).unwrap(), Value::Nothing);
    for n in -3..4 {
        assert_eq!(mapped(&Value::just(Value::int(n))).unwrap(), Value::just(Value::int(n + 1)));
    }
}

/// `multi_map_optic` is functorial: the identity maps fix an optic, and two
/// applications fuse into one with composed maps.
#[test]
fn multi_map_is_functorial() {
    let (s, a) = (FiniteDomain::ints("S", 3), FiniteDomain::labels("A", "a", 2));
    let probe = Probe::simple(&s, &a);
    let mut rng = rng(11);
    let id = opticat_core::value::identity();
    for _ in 0..50 {
        let o = Lens::sample(&mut rng, &s, &a);
        let same = multi_map_optic(id.clone(), id.clone(), id.clone(), id.clone(), &o);
        assert!(observational_eq(&o, &same, &probe));

        let t = |rng: &mut _, d: &FiniteDomain| FnTable::random(rng, d, d).to_func();
        let (fa1, fb1, fs1, ft1) = (t(&mut rng, &a), t(&mut rng, &a), t(&mut rng, &s), t(&mut rng, &s));
        let (fa2, fb2, fs2, ft2) = (t(&mut rng, &a), t(&mut rng, &a), t(&mut rng, &s), t(&mut rng, &s));
        let twice = multi_map_optic(
            fa1.clone(),
            fb1.clone(),
            fs1.clone(),
            ft1.clone(),
            &multi_map_optic(fa2.clone(), fb2.clone(), fs2.clone(), ft2.clone(), &o),
        );
        let fused = multi_map_optic(
            compose_fn(&fa1, &fa2),
            compose_fn(&fb2, &fb1),
            compose_fn(&fs2, &fs1),
            compose_fn(&ft1, &ft2),
            &o,
        );
        assert!(observational_eq(&twice, &fused, &probe));
    }
}

/// Iso optics are equal up to a natural transformation: for every registered
/// `phi: F -> G`, `(F, alpha, beta . phi)` and `(G, phi . alpha, beta)` agree.
#[test]
fn registry_naturals_slide_across_iso_optics() {
    let (s, a) = (FiniteDomain::ints("S", 3), FiniteDomain::labels("A", "a", 2));
    let probe = Probe::simple(&s, &a);
    let mut rng = rng(5);
    for n in natural_registry() {
        let (fa, ga) = (n.source.carrier(&a).unwrap(), n.target.carrier(&a).unwrap());
        for _ in 0..20 {
            let alpha = FnTable::random(&mut rng, &s, &fa).to_func();
            let beta = FnTable::random(&mut rng, &ga, &s).to_func();
            let phi = n.as_fn();
            let left =
                IsoOptic::<AnyFunctor>::new(n.source.clone(), alpha.clone(), compose_fn(&beta, &phi)).unwrap();
            let right = IsoOptic::<AnyFunctor>::new(n.target.clone(), compose_fn(&phi, &alpha), beta).unwrap();
            assert!(observational_eq(&left, &right, &probe), "{}", n.name);
        }
    }
}

/// `second ∘ just` needs both capabilities, so it lives in the affine
/// family; at Matching it behaves exactly like the hand-written optional.
#[test]
fn second_then_just_is_the_optional() {
    let c = FiniteDomain::labels("C", "c", 2);
    let a = FiniteDomain::ints("A", 3);
    let s = FiniteDomain::product(&c, &FiniteDomain::maybe(&a));
    let l: ProfOptic<Affine> = prof_second().widen::<Affine>().compose(&prof_just().widen::<Affine>());
    let m = match_operator(&l).unwrap();
    for x in s.iter() {
        let (cx, mx) = x.as_pair().unwrap();
        let expected = match mx.as_maybe().unwrap() {
            Some(v) => Either::Right(v.clone()),
            None => Either::Left(x.clone()),
        };
        assert_eq!(m(x).unwrap(), expected);
        for b in a.iter() {
            let put = match mx.as_maybe().unwrap() {
                Some(_) => Value::pair(cx.clone(), Value::just(b.clone())),
                None => x.clone(),
            };
            assert_eq!(l.map_optic(constant(b.clone()))(x).unwrap(), put);
        }
    }
    assert!(get_operator(&l).is_err());
    assert!(build_operator(&l).is_err());
    let o = Optional::from_lens(&opticat_core::families::second()).compose(&Optional::from_prism(&just()));
    for x in s.iter() {
        assert_eq!(o.matching(x).unwrap(), m(x).unwrap());
    }
}

/// Every prebuilt profunctor optic survives the trip through iso optics.
#[test]
fn prebuilt_profunctor_optics_round_trip() {
    let (c, a) = (FiniteDomain::labels("C", "c", 2), FiniteDomain::ints("A", 2));
    let pairs_r = FiniteDomain::product(&c, &a);
    let pairs_l = FiniteDomain::product(&a, &c);
    let sums = FiniteDomain::sum(&c, &a);
    let maybes = FiniteDomain::maybe(&a);
    fn check<M: opticat_core::functors::monoid::FunctorMonoid>(l: &ProfOptic<M>, s: &FiniteDomain, a: &FiniteDomain) {
        let back = iso_to_prof(&prof_to_iso(l).unwrap());
        assert!(observational_eq(l, &back, &Probe::simple(s, a)));
    }
    check(&prof_second(), &pairs_r, &a);
    check(&prof_first(), &pairs_l, &a);
    check(&prof_right(), &sums, &a);
    check(&prof_just(), &maybes, &a);
}

/// Shapes of `IdOnly` are nested identities, so the adapter lift at each of
/// them is a pair of mutually inverse functions.
#[test]
fn adapter_lifts_are_inverse_pairs() {
    let a = FiniteDomain::ints("A", 3);
    let shapes = shapes_in(FunctorFamily::IdOnly);
    assert!(shapes.len() >= 2);
    for shape in shapes {
        let ad = Adapter::enhance_fop(&shape).unwrap();
        let carrier = shape.carrier(&a).unwrap();
        for x in carrier.iter() {
            assert_eq!(&ad.bwd(&ad.fwd(x).unwrap()).unwrap(), x, "{shape}");
        }
        for y in a.iter() {
            assert_eq!(&ad.fwd(&ad.bwd(y).unwrap()).unwrap(), y, "{shape}");
        }
    }
}

#[test]
fn lens_isos_carry_a_residual_pair() {
    let (s, r, a) = (FiniteDomain::ints("S", 4), FiniteDomain::labels("R", "r", 2), FiniteDomain::labels("A", "a", 2));
    for seed in 0..10 {
        let lens = gen_lawful_lens(seed, &s, &r, &a).unwrap();
        assert!(matches!(lens.concrete_to_iso().shape(), Shape::Pair(_)));
        let ach: AchLens = gen_lawful_achlens(seed, &s, &r, &a).unwrap();
        assert!(matches!(ach.concrete_to_iso().shape(), Shape::MaybePair(_)));
    }
}
