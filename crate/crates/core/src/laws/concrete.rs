//! Per-family well-behavedness laws, checked exhaustively over whole and
//! focus domains.

use super::{LawReport, Law, Mode, Tally};
use crate::families::{AchLens, Adapter, Lens, Optional, Prism, Setter};
use crate::finite::{probe_tables, FiniteDomain};
use crate::value::{compose_fn, identity, Either, Value};

fn sv(s: &Value) -> String {
    format!("s = {s}")
}

fn bv(name: &str, b: &Value) -> String {
    format!("{name} = {b}")
}

/// GetPut, PutGet and PutPut.
pub fn check_lens_laws(l: &Lens, s: &FiniteDomain, a: &FiniteDomain, subject: &str, mode: Mode) -> Vec<LawReport> {
    let mut get_put = Tally::new(Law::GetPut, subject, mode);
    let mut put_get = Tally::new(Law::PutGet, subject, mode);
    let mut put_put = Tally::new(Law::PutPut, subject, mode);
    for x in s.iter() {
        put_get.record(|| vec![sv(x)], &Ok(x.clone()), &l.get(x).and_then(|g| l.put(&g, x)));
        for b in a.iter() {
            let put = l.put(b, x);
            get_put.record(|| vec![bv("b", b), sv(x)], &Ok(b.clone()), &put.clone().and_then(|t| l.get(&t)));
            for b2 in a.iter() {
                put_put.record(
                    || vec![bv("b", b), bv("b'", b2), sv(x)],
                    &l.put(b2, x),
                    &put.clone().and_then(|t| l.put(b2, &t)),
                );
            }
        }
    }
    vec![get_put.finish(), put_get.finish(), put_put.finish()]
}

/// Lens laws plus GetCreate.
pub fn check_achlens_laws(
    l: &AchLens,
    s: &FiniteDomain,
    a: &FiniteDomain,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let mut reports = check_lens_laws(&l.to_lens(), s, a, subject, mode);
    let mut get_create = Tally::new(Law::GetCreate, subject, mode);
    for b in a.iter() {
        get_create.record(|| vec![bv("b", b)], &Ok(b.clone()), &l.create(b).and_then(|t| l.get(&t)));
    }
    reports.push(get_create.finish());
    reports
}

/// MatchBuild, BuildMatch and MissIdentity for simple prisms.
pub fn check_prism_laws(p: &Prism, s: &FiniteDomain, a: &FiniteDomain, subject: &str, mode: Mode) -> Vec<LawReport> {
    let mut match_build = Tally::new(Law::MatchBuild, subject, mode);
    let mut build_match = Tally::new(Law::BuildMatch, subject, mode);
    let mut miss = Tally::new(Law::MissIdentity, subject, mode);
    for b in a.iter() {
        let matched = p.build(b).and_then(|t| p.matching(&t)).map(Either::into_value);
        match_build.record(|| vec![bv("b", b)], &Ok(Value::right(b.clone())), &matched);
    }
    for x in s.iter() {
        match p.matching(x) {
            Ok(Either::Right(y)) => build_match.record(|| vec![sv(x)], &Ok(x.clone()), &p.build(&y)),
            Ok(Either::Left(t)) => miss.record(|| vec![sv(x)], &Ok(x.clone()), &Ok(t)),
            Err(e) => build_match.record_error(sv(x), &e),
        }
    }
    vec![match_build.finish(), build_match.finish(), miss.finish()]
}

/// The three optional laws for simple optionals.
pub fn check_optional_laws(
    o: &Optional,
    s: &FiniteDomain,
    a: &FiniteDomain,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let mut match_put = Tally::new(Law::OptionalMatchPut, subject, mode);
    let mut put_match = Tally::new(Law::OptionalPutMatch, subject, mode);
    let mut miss_put = Tally::new(Law::OptionalMissPut, subject, mode);
    for x in s.iter() {
        match o.matching(x) {
            Ok(Either::Right(y)) => {
                match_put.record(|| vec![sv(x)], &Ok(x.clone()), &o.put(&y, x));
                for b in a.iter() {
                    let rematch = o.put(b, x).and_then(|t| o.matching(&t)).map(Either::into_value);
                    put_match.record(|| vec![bv("b", b), sv(x)], &Ok(Value::right(b.clone())), &rematch);
                }
            }
            Ok(Either::Left(t)) => {
                for b in a.iter() {
                    miss_put.record(|| vec![bv("b", b), sv(x)], &Ok(t.clone()), &o.put(b, x));
                }
            }
            Err(e) => match_put.record_error(sv(x), &e),
        }
    }
    vec![match_put.finish(), put_match.finish(), miss_put.finish()]
}

/// `fwd` and `bwd` are mutually inverse.
pub fn check_adapter_laws(
    ad: &Adapter,
    s: &FiniteDomain,
    a: &FiniteDomain,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let mut fwd_bwd = Tally::new(Law::AdapterFwdBwd, subject, mode);
    let mut bwd_fwd = Tally::new(Law::AdapterBwdFwd, subject, mode);
    for b in a.iter() {
        fwd_bwd.record(|| vec![bv("a", b)], &Ok(b.clone()), &ad.bwd(b).and_then(|t| ad.fwd(&t)));
    }
    for x in s.iter() {
        bwd_fwd.record(|| vec![sv(x)], &Ok(x.clone()), &ad.fwd(x).and_then(|y| ad.bwd(&y)));
    }
    vec![fwd_bwd.finish(), bwd_fwd.finish()]
}

/// `over id = id` and `over (f . g) = over f . over g` on every pair of
/// probe functions `A -> A`.
pub fn check_setter_laws(
    st: &Setter,
    s: &FiniteDomain,
    a: &FiniteDomain,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let mut ident = Tally::new(Law::SetterIdentity, subject, mode);
    let mut comp = Tally::new(Law::SetterComposition, subject, mode);
    let over_id = st.over(identity());
    for x in s.iter() {
        ident.record(|| vec![sv(x)], &Ok(x.clone()), &over_id(x));
    }
    let tables = probe_tables(a, a, s.len() * s.len(), 0x5e77e7);
    'outer: for f in &tables {
        for g in &tables {
            let (ff, gg) = (f.to_func(), g.to_func());
            let lhs = st.over(compose_fn(&ff, &gg));
            let rhs = compose_fn(&st.over(ff), &st.over(gg));
            for x in s.iter() {
                if !comp.open() {
                    break 'outer;
                }
                comp.record(|| vec![format!("f = {f}"), format!("g = {g}"), sv(x)], &lhs(x), &rhs(x));
            }
        }
    }
    vec![ident.finish(), comp.finish()]
}

/// A lens on pairs whose `put` ignores the new focus.
pub fn unlawful_lens() -> Lens {
    Lens::new(|s: &Value| Ok(s.as_pair()?.0.clone()), |_: &Value, s: &Value| Ok(s.clone()))
}
