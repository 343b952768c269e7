//! Functor laws of shapes, their product and sum round trips, and closure of
//! functor families.

use super::{LawReport, Law, Mode, Tally};
use crate::finite::{probe_tables, FiniteDomain};
use crate::functors::{shape_registry, FunctorFamily, Shape};
use crate::value::{compose_fn, identity, Either, Value};

/// Functor laws on every payload over `focus`, plus the product and sum
/// round trips when the shape carries those capabilities.
pub fn check_functor_laws(shape: &Shape, focus: &FiniteDomain, mode: Mode) -> Vec<LawReport> {
    let subject = shape.name();
    let carrier = match shape.carrier(focus) {
        Ok(c) => c,
        Err(e) => {
            let mut t = Tally::new(Law::FmapIdentity, &subject, mode);
            t.record_error("carrier", &e);
            return vec![t.finish()];
        }
    };
    let mut ident = Tally::new(Law::FmapIdentity, &subject, mode);
    let mut comp = Tally::new(Law::FmapComposition, &subject, mode);
    let fmap_id = shape.map(&identity());
    for fa in carrier.iter() {
        ident.record(|| vec![format!("fa = {fa}")], &Ok(fa.clone()), &fmap_id(fa));
    }
    let tables = probe_tables(focus, focus, carrier.len(), 0xf0f0);
    'comp: for h in &tables {
        for k in &tables {
            let (hf, kf) = (h.to_func(), k.to_func());
            let lhs = shape.map(&compose_fn(&hf, &kf));
            let rhs = compose_fn(&shape.map(&hf), &shape.map(&kf));
            for fa in carrier.iter() {
                if !comp.open() {
                    break 'comp;
                }
                comp.record(|| vec![format!("h = {h}"), format!("k = {k}"), format!("fa = {fa}")], &lhs(fa), &rhs(fa));
            }
        }
    }
    let mut reports = vec![ident.finish(), comp.finish()];

    if shape.has_product() {
        let mut t = Tally::new(Law::ProductRoundTrip, &subject, mode);
        for fa in carrier.iter() {
            let back = shape.to_product(fa).and_then(|(u, a)| shape.from_product(&u, &a));
            t.record(|| vec![format!("fa = {fa}")], &Ok(fa.clone()), &back);
        }
        match shape.carrier(&FiniteDomain::unit()) {
            Ok(units) => {
                for u in units.iter() {
                    for a in focus.iter() {
                        let back = shape
                            .from_product(u, a)
                            .and_then(|fa| shape.to_product(&fa))
                            .map(|(u, a)| Value::pair(u, a));
                        t.record(
                            || vec![format!("u = {u}"), format!("a = {a}")],
                            &Ok(Value::pair(u.clone(), a.clone())),
                            &back,
                        );
                    }
                }
            }
            Err(e) => t.record_error("unit carrier", &e),
        }
        reports.push(t.finish());
    }

    if shape.has_sum() {
        let mut t = Tally::new(Law::SumRoundTrip, &subject, mode);
        for fa in carrier.iter() {
            let back = shape.to_sum(fa).and_then(|e| shape.from_sum(e));
            t.record(|| vec![format!("fa = {fa}")], &Ok(fa.clone()), &back);
        }
        for a in focus.iter() {
            let back = shape
                .from_sum(Either::Right(a.clone()))
                .and_then(|fa| shape.to_sum(&fa))
                .map(Either::into_value);
            t.record(|| vec![format!("a = {a}")], &Ok(Value::right(a.clone())), &back);
        }
        reports.push(t.finish());
    }
    reports
}

/// `Id` belongs to `family` and so does the composite of any two registered
/// members.
pub fn check_monoid_closure(family: FunctorFamily, mode: Mode) -> LawReport {
    let mut t = Tally::new(Law::MonoidClosure, family.name(), mode);
    let id_member = family.member(&Shape::id());
    t.record_with(|| vec!["Id".into()], id_member, || verdict(id_member));
    let members: Vec<Shape> = shape_registry().into_iter().filter(|s| family.member(s)).collect();
    for f in &members {
        for g in &members {
            let c = Shape::compose(f.clone(), g.clone());
            let holds = family.member(&c);
            t.record_with(|| vec![format!("f = {f}"), format!("g = {g}")], holds, || verdict(holds));
        }
    }
    t.finish()
}

fn verdict(member: bool) -> (String, String) {
    let actual = if member { "member" } else { "not a member" };
    ("member".to_string(), actual.to_string())
}
