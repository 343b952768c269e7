//! Observational comparison of optics: `map_optic` on probe functions plus
//! whatever operators the family exposes.

use super::Tally;
use crate::families::{AchLens, Adapter, Lens, OpticFamily, Optional, Prism, Setter};
use crate::functors::monoid::FunctorMonoid;
use crate::iso::{IsoOptic, Probe};
use crate::prof::{
    build_operator, get_operator, match_operator, Capability, GettingCap, MatchingCap, ProfOptic, ReviewingCap,
};
use crate::value::Value;
use crate::Result;

/// An optic family whose members can be compared by observation.
pub trait Observable: OpticFamily<Value = Value> {
    /// The family's operators at whole `s` and focus `b`, labelled.
    fn operators(&self, _s: &Value, _b: &Value) -> Vec<(&'static str, Result<Value>)> {
        Vec::new()
    }
}

impl Observable for Lens {
    fn operators(&self, s: &Value, b: &Value) -> Vec<(&'static str, Result<Value>)> {
        vec![("get", self.get(s)), ("put", self.put(b, s))]
    }
}

impl Observable for Prism {
    fn operators(&self, s: &Value, b: &Value) -> Vec<(&'static str, Result<Value>)> {
        vec![
            ("match", self.matching(s).map(|e| e.into_value())),
            ("build", self.build(b)),
        ]
    }
}

impl Observable for Adapter {
    fn operators(&self, s: &Value, b: &Value) -> Vec<(&'static str, Result<Value>)> {
        vec![("fwd", self.fwd(s)), ("bwd", self.bwd(b))]
    }
}

impl Observable for AchLens {
    fn operators(&self, s: &Value, b: &Value) -> Vec<(&'static str, Result<Value>)> {
        vec![("get", self.get(s)), ("put", self.put(b, s)), ("create", self.create(b))]
    }
}

impl Observable for Optional {
    fn operators(&self, s: &Value, b: &Value) -> Vec<(&'static str, Result<Value>)> {
        vec![
            ("match", self.matching(s).map(|e| e.into_value())),
            ("put", self.put(b, s)),
        ]
    }
}

impl Observable for Setter {}

impl<M: FunctorMonoid> Observable for IsoOptic<M> {}

impl<M: FunctorMonoid> Observable for ProfOptic<M> {
    /// The operators whose capability covers `M`.
    fn operators(&self, s: &Value, b: &Value) -> Vec<(&'static str, Result<Value>)> {
        let mut ops = Vec::new();
        if GettingCap.covers(M::FAMILY) {
            ops.push(("get", get_operator(self).and_then(|g| g(s))));
        }
        if MatchingCap.covers(M::FAMILY) {
            ops.push(("match", match_operator(self).and_then(|m| m(s)).map(|e| e.into_value())));
        }
        if ReviewingCap.covers(M::FAMILY) {
            ops.push(("build", build_operator(self).and_then(|r| r(b))));
        }
        ops
    }
}

/// Records one case per probe function and input, then one per operator,
/// input and focus value. `o1` is taken as the expected side.
pub fn compare_optics<O: Observable>(tally: &mut Tally, o1: &O, o2: &O, probe: &Probe) {
    for table in probe.tables() {
        let h = table.to_func();
        let (m1, m2) = (o1.map_optic(h.clone()), o2.map_optic(h));
        for s in probe.inputs.iter() {
            if !tally.open() {
                return;
            }
            tally.record(|| vec![format!("h = {table}"), format!("s = {s}")], &m1(s), &m2(s));
        }
    }
    for s in probe.inputs.iter() {
        for b in probe.focus_out.iter() {
            let (ops1, ops2) = (o1.operators(s, b), o2.operators(s, b));
            for ((name, r1), (_, r2)) in ops1.iter().zip(&ops2) {
                if !tally.open() {
                    return;
                }
                tally.record(|| vec![format!("operator {name}"), format!("s = {s}"), format!("b = {b}")], r1, r2);
            }
        }
    }
}
