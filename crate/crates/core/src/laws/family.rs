//! The optic-family axioms, for any family that can be sampled.

use super::{compare_optics, LawReport, Law, Mode, SampleOptic, Tally};
use crate::families::{AchLens, Adapter, FamilyTag, Lens, Optional, Prism, Setter};
use crate::finite::{FiniteDomain, FnTable};
use crate::iso::Probe;
use crate::value::compose_fn;

/// Domains for a chain of three optics: `d0` is the outermost whole and each
/// later domain is the focus of an optic into the previous one.
#[derive(Clone, Debug)]
pub struct Tower {
    pub d0: FiniteDomain,
    pub d1: FiniteDomain,
    pub d2: FiniteDomain,
    pub d3: FiniteDomain,
}

impl Default for Tower {
    /// Sizes 3, 2, 2, 2 with disjoint elements at each level.
    fn default() -> Self {
        Tower {
            d0: FiniteDomain::ints("S", 3),
            d1: FiniteDomain::labels("A", "a", 2),
            d2: FiniteDomain::labels("X", "x", 2),
            d3: FiniteDomain::labels("Y", "y", 2),
        }
    }
}

/// Associativity, both identities, injection functoriality and the two
/// `map_optic` laws. Composition and map laws are checked on `samples`
/// random triples; injection laws range over every function table.
pub fn check_optic_family_laws<O: SampleOptic>(
    seed: u64,
    samples: usize,
    tower: &Tower,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let Tower { d0, d1, d2, d3 } = tower;
    let mut rng = super::rng(seed);
    let mut assoc = Tally::new(Law::ComposeAssociative, subject, mode);
    let mut left = Tally::new(Law::ComposeLeftIdentity, subject, mode);
    let mut right = Tally::new(Law::ComposeRightIdentity, subject, mode);
    let mut map_compose = Tally::new(Law::MapCompose, subject, mode);
    for _ in 0..samples {
        let o1 = O::sample(&mut rng, d0, d1);
        let o2 = O::sample(&mut rng, d1, d2);
        let o3 = O::sample(&mut rng, d2, d3);
        let p01 = Probe::simple(d0, d1);
        compare_optics(
            &mut assoc,
            &o1.compose(&o2).compose(&o3),
            &o1.compose(&o2.compose(&o3)),
            &Probe::simple(d0, d3),
        );
        compare_optics(&mut left, &o1, &O::identity().compose(&o1), &p01);
        compare_optics(&mut right, &o1, &o1.compose(&O::identity()), &p01);
        let composite = o1.compose(&o2);
        for table in Probe::simple(d0, d2).tables() {
            let h = table.to_func();
            let (lhs, rhs) = (composite.map_optic(h.clone()), o1.map_optic(o2.map_optic(h)));
            for s in d0.iter() {
                map_compose.record(|| vec![format!("h = {table}"), format!("s = {s}")], &lhs(s), &rhs(s));
            }
        }
    }

    let mut inj_identity = Tally::new(Law::InjIdentity, subject, mode);
    let id = O::identity();
    for table in Probe::simple(d0, d0).tables() {
        let h = table.to_func();
        let mapped = id.map_optic(h.clone());
        for s in d0.iter() {
            inj_identity.record(|| vec![format!("h = {table}"), format!("s = {s}")], &h(s), &mapped(s));
        }
    }

    // f: d0 -> d1, g: d1 -> d0, f': d1 -> d2, g': d2 -> d1.
    let mut inj_comp = Tally::new(Law::InjComposition, subject, mode);
    let probe = Probe::simple(d0, d2);
    'inj: for f in FnTable::all(d0, d1) {
        for g in FnTable::all(d1, d0) {
            for f2 in FnTable::all(d1, d2) {
                for g2 in FnTable::all(d2, d1) {
                    if !inj_comp.open() {
                        break 'inj;
                    }
                    let (ff, gf, f2f, g2f) = (f.to_func(), g.to_func(), f2.to_func(), g2.to_func());
                    let lhs = O::inj(compose_fn(&f2f, &ff), compose_fn(&gf, &g2f));
                    let rhs = O::inj(ff, gf).compose(&O::inj(f2f, g2f));
                    compare_optics(&mut inj_comp, &lhs, &rhs, &probe);
                }
            }
        }
    }

    let mut map_inj = Tally::new(Law::MapInj, subject, mode);
    'map: for f in FnTable::all(d0, d1) {
        for g in FnTable::all(d1, d0) {
            let o = O::inj(f.to_func(), g.to_func());
            for table in Probe::simple(d1, d1).tables() {
                let h = table.to_func();
                let expected = compose_fn(&g.to_func(), &compose_fn(&h, &f.to_func()));
                let mapped = o.map_optic(h);
                for s in d0.iter() {
                    if !map_inj.open() {
                        break 'map;
                    }
                    map_inj.record(
                        || vec![format!("f = {f}"), format!("g = {g}"), format!("h = {table}"), format!("s = {s}")],
                        &expected(s),
                        &mapped(s),
                    );
                }
            }
        }
    }

    vec![
        assoc.finish(),
        left.finish(),
        right.finish(),
        inj_identity.finish(),
        inj_comp.finish(),
        map_inj.finish(),
        map_compose.finish(),
    ]
}

/// [`check_optic_family_laws`] for the concrete family named by `tag`.
pub fn check_optic_family_laws_for_tag(tag: FamilyTag, seed: u64, samples: usize, mode: Mode) -> Vec<LawReport> {
    let tower = Tower::default();
    let subject = tag.name();
    match tag {
        FamilyTag::Adapter => check_optic_family_laws::<Adapter>(seed, samples, &tower, subject, mode),
        FamilyTag::Lens => check_optic_family_laws::<Lens>(seed, samples, &tower, subject, mode),
        FamilyTag::Prism => check_optic_family_laws::<Prism>(seed, samples, &tower, subject, mode),
        FamilyTag::Optional => check_optic_family_laws::<Optional>(seed, samples, &tower, subject, mode),
        FamilyTag::AchLens => check_optic_family_laws::<AchLens>(seed, samples, &tower, subject, mode),
        FamilyTag::Setter => check_optic_family_laws::<Setter>(seed, samples, &tower, subject, mode),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::Status;

    #[test]
    fn lens_family_axioms_hold() {
        for r in check_optic_family_laws_for_tag(FamilyTag::Lens, 1, 4, Mode::Exhaustive) {
            assert_eq!(r.status, Status::Pass, "{r}");
        }
    }

    /// A "family" whose composition forgets the inner optic is caught.
    #[test]
    fn broken_composition_is_detected() {
        #[derive(Clone)]
        struct Forgetful(Lens);
        impl crate::families::OpticFamily for Forgetful {
            type Value = crate::value::Value;
            fn inj(f: crate::Func, g: crate::Func) -> Self {
                Forgetful(Lens::inj(f, g))
            }
            fn compose(&self, _: &Self) -> Self {
                self.clone()
            }
            fn map_optic(&self, h: crate::Func) -> crate::Func {
                self.0.map_optic(h)
            }
        }
        impl crate::laws::Observable for Forgetful {}
        impl SampleOptic for Forgetful {
            fn sample(rng: &mut rand_chacha::ChaCha8Rng, w: &FiniteDomain, f: &FiniteDomain) -> Self {
                Forgetful(Lens::sample(rng, w, f))
            }
        }
        let reports = check_optic_family_laws::<Forgetful>(3, 4, &Tower::default(), "forgetful", Mode::Exhaustive);
        let failed: Vec<Law> = reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.law).collect();
        assert!(failed.contains(&Law::InjComposition));
        assert!(failed.contains(&Law::MapCompose));
    }
}
