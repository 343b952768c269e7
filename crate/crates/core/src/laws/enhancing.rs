//! Profunctor and enhancing laws for capability records.

use std::marker::PhantomData;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{LawReport, Law, Mode, SampleOptic, Tally};
use crate::error::Result;
use crate::families::OpticFamily;
use crate::finite::{FiniteDomain, FnTable};
use crate::functors::monoid::FunctorMonoid;
use crate::functors::{naturals_in, shapes_in, un_compose_fn, un_id_fn, wrap_compose_fn, wrap_id_fn, FunctorFamily, Shape};
use crate::iso::{IsoOptic, Probe};
use crate::prof::{
    Capability, FunctionArrow, Getting, GettingCap, IsoCapability, Matching, MatchingCap, ProfValue,
};
use crate::value::{identity, match_fn, Either, Func, Value};

/// A capability with a sampler and an observation of its carriers.
pub trait CapabilityUnderTest: Send + Sync {
    fn capability(&self) -> &dyn Capability;

    /// The functor family whose registry shapes are used.
    fn family(&self) -> FunctorFamily;

    /// An arbitrary carrier `p a b`.
    fn sample(&self, rng: &mut ChaCha8Rng, a: &FiniteDomain, b: &FiniteDomain) -> ProfValue;

    /// Everything observable about `p` on the given inputs, labelled.
    fn observe(&self, p: &ProfValue, inputs: &FiniteDomain) -> Vec<(String, Result<Value>)>;
}

fn table(rng: &mut ChaCha8Rng, from: &FiniteDomain, to: &FiniteDomain) -> Func {
    FnTable::random(rng, from, to).to_func()
}

fn observe_fn(f: Result<&Func>, inputs: &FiniteDomain) -> Vec<(String, Result<Value>)> {
    inputs
        .iter()
        .map(|s| (format!("s = {s}"), f.clone().and_then(|f| f(s))))
        .collect()
}

#[derive(Clone, Copy, Debug, Default)]
pub struct FunctionArrowTest;

impl CapabilityUnderTest for FunctionArrowTest {
    fn capability(&self) -> &dyn Capability {
        &FunctionArrow
    }

    fn family(&self) -> FunctorFamily {
        FunctorFamily::AnyFunctor
    }

    fn sample(&self, rng: &mut ChaCha8Rng, a: &FiniteDomain, b: &FiniteDomain) -> ProfValue {
        ProfValue::new(table(rng, a, b))
    }

    fn observe(&self, p: &ProfValue, inputs: &FiniteDomain) -> Vec<(String, Result<Value>)> {
        observe_fn(p.downcast::<Func>(&FunctionArrow), inputs)
    }
}

/// `Getting r` for a fixed result domain `r`.
#[derive(Clone, Debug)]
pub struct GettingTest {
    pub result: FiniteDomain,
}

impl Default for GettingTest {
    fn default() -> Self {
        GettingTest {
            result: FiniteDomain::labels("R", "g", 3),
        }
    }
}

impl CapabilityUnderTest for GettingTest {
    fn capability(&self) -> &dyn Capability {
        &GettingCap
    }

    fn family(&self) -> FunctorFamily {
        FunctorFamily::IsProduct
    }

    fn sample(&self, rng: &mut ChaCha8Rng, a: &FiniteDomain, _: &FiniteDomain) -> ProfValue {
        ProfValue::new(Getting(table(rng, a, &self.result)))
    }

    fn observe(&self, p: &ProfValue, inputs: &FiniteDomain) -> Vec<(String, Result<Value>)> {
        observe_fn(p.downcast::<Getting>(&GettingCap).map(|g| &g.0), inputs)
    }
}

/// `Matching x` for a fixed focus domain `x`.
#[derive(Clone, Debug)]
pub struct MatchingTest {
    pub focus: FiniteDomain,
}

impl Default for MatchingTest {
    fn default() -> Self {
        MatchingTest {
            focus: FiniteDomain::labels("X", "m", 2),
        }
    }
}

impl CapabilityUnderTest for MatchingTest {
    fn capability(&self) -> &dyn Capability {
        &MatchingCap
    }

    fn family(&self) -> FunctorFamily {
        FunctorFamily::Affine
    }

    fn sample(&self, rng: &mut ChaCha8Rng, a: &FiniteDomain, b: &FiniteDomain) -> ProfValue {
        let t = table(rng, a, &FiniteDomain::sum(b, &self.focus));
        ProfValue::new(Matching(match_fn(move |s: &Value| {
            Ok(match t(s)?.as_sum()? {
                Either::Left(x) => Either::Left(x.clone()),
                Either::Right(y) => Either::Right(y.clone()),
            })
        })))
    }

    fn observe(&self, p: &ProfValue, inputs: &FiniteDomain) -> Vec<(String, Result<Value>)> {
        let m = p.downcast::<Matching>(&MatchingCap).map(|m| m.0.clone());
        inputs
            .iter()
            .map(|s| {
                let r = m.clone().and_then(|m| m(s)).map(Either::into_value);
                (format!("s = {s}"), r)
            })
            .collect()
    }
}

/// The capability of isomorphism optics `IsoOptic<M> x x`, observed through
/// `map_optic` on every probe `x -> x`.
pub struct IsoCapTest<M> {
    pub focus: FiniteDomain,
    cap: IsoCapability<M>,
    marker: PhantomData<fn() -> M>,
}

impl<M> Default for IsoCapTest<M> {
    fn default() -> Self {
        IsoCapTest {
            focus: FiniteDomain::labels("X", "i", 2),
            cap: IsoCapability::new(),
            marker: PhantomData,
        }
    }
}

impl<M: FunctorMonoid> CapabilityUnderTest for IsoCapTest<M> {
    fn capability(&self) -> &dyn Capability {
        &self.cap
    }

    fn family(&self) -> FunctorFamily {
        M::FAMILY
    }

    /// `a` and `b` play the whole types of the carried optic.
    fn sample(&self, rng: &mut ChaCha8Rng, a: &FiniteDomain, b: &FiniteDomain) -> ProfValue {
        let iso = IsoOptic::<M>::sample(rng, a, &self.focus);
        if a == b {
            return ProfValue::new(iso);
        }
        let back = table(rng, a, b);
        ProfValue::new(crate::families::dimap_optic(identity(), back, &iso))
    }

    fn observe(&self, p: &ProfValue, inputs: &FiniteDomain) -> Vec<(String, Result<Value>)> {
        let iso = match p.downcast::<IsoOptic<M>>(&self.cap) {
            Ok(iso) => iso.clone(),
            Err(e) => return vec![("carrier".into(), Err(e))],
        };
        let mut out = Vec::new();
        for t in Probe::simple(inputs, &self.focus).tables() {
            let mapped = iso.map_optic(t.to_func());
            for s in inputs.iter() {
                out.push((format!("h = {t}, s = {s}"), mapped(s)));
            }
        }
        out
    }
}

/// The function arrow with a `Compose` lift that drops the transformation:
/// a negative control for the `EnhanceCompose` law.
#[derive(Clone, Copy, Debug, Default)]
pub struct BrokenCompose;

impl Capability for BrokenCompose {
    fn name(&self) -> String {
        "broken_compose".into()
    }

    fn covers(&self, _: FunctorFamily) -> bool {
        true
    }

    fn dimap(&self, f: &Func, g: &Func, p: &ProfValue) -> Result<ProfValue> {
        FunctionArrow.dimap(f, g, p)
    }

    fn enhance(&self, shape: &Shape, p: &ProfValue) -> Result<ProfValue> {
        match shape {
            Shape::Compose(_, _) => Ok(ProfValue::new(identity::<Value>())),
            _ => FunctionArrow.enhance(shape, p),
        }
    }
}

impl CapabilityUnderTest for BrokenCompose {
    fn capability(&self) -> &dyn Capability {
        self
    }

    fn family(&self) -> FunctorFamily {
        FunctorFamily::AnyFunctor
    }

    fn sample(&self, rng: &mut ChaCha8Rng, a: &FiniteDomain, b: &FiniteDomain) -> ProfValue {
        FunctionArrowTest.sample(rng, a, b)
    }

    fn observe(&self, p: &ProfValue, inputs: &FiniteDomain) -> Vec<(String, Result<Value>)> {
        observe_fn(p.downcast::<Func>(self), inputs)
    }
}

fn compare(
    t: &mut Tally,
    cut: &dyn CapabilityUnderTest,
    context: &str,
    lhs: Result<ProfValue>,
    rhs: Result<ProfValue>,
    inputs: &FiniteDomain,
) {
    let (lhs, rhs) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return t.record_error(context, &e),
    };
    for ((label, l), (_, r)) in cut.observe(&lhs, inputs).iter().zip(cut.observe(&rhs, inputs).iter()) {
        if !t.open() {
            return;
        }
        t.record(|| vec![context.to_string(), label.clone()], l, r);
    }
}

/// Profunctor laws and the enhancing laws at every registry shape and
/// registered natural transformation within the capability's family.
pub fn check_enhancing_laws(
    cut: &dyn CapabilityUnderTest,
    seed: u64,
    samples: usize,
    subject: &str,
    mode: Mode,
) -> Vec<LawReport> {
    let cap = cut.capability();
    let mut rng = super::rng(seed);
    let a = FiniteDomain::ints("A", 2);
    let s1 = FiniteDomain::labels("S", "s", 3);
    let s2 = FiniteDomain::labels("U", "u", 2);
    let shapes = shapes_in(cut.family());
    let naturals = naturals_in(cut.family());

    let mut dimap_id = Tally::new(Law::DimapIdentity, subject, mode);
    let mut dimap_comp = Tally::new(Law::DimapComposition, subject, mode);
    let mut enh_id = Tally::new(Law::EnhanceId, subject, mode);
    let mut enh_comp = Tally::new(Law::EnhanceCompose, subject, mode);
    let mut wedge = Tally::new(Law::EnhanceWedge, subject, mode);
    let mut natural = Tally::new(Law::EnhanceNaturality, subject, mode);

    for i in 0..samples {
        let p = cut.sample(&mut rng, &a, &a);
        let ctx = format!("sample {i}");
        compare(&mut dimap_id, cut, &ctx, Ok(p.clone()), cap.dimap(&identity(), &identity(), &p), &a);

        // f1: s1 -> a, g1: a -> s1, f2: s2 -> s1, g2: s1 -> s2.
        let (f1, g1) = (table(&mut rng, &s1, &a), table(&mut rng, &a, &s1));
        let (f2, g2) = (table(&mut rng, &s2, &s1), table(&mut rng, &s1, &s2));
        let fused = cap.dimap(
            &crate::value::compose_fn(&f1, &f2),
            &crate::value::compose_fn(&g2, &g1),
            &p,
        );
        let staged = cap.dimap(&f1, &g1, &p).and_then(|q| cap.dimap(&f2, &g2, &q));
        compare(&mut dimap_comp, cut, &ctx, fused, staged, &s2);

        let id_carrier = Shape::Id.carrier(&a).expect("Id carrier");
        compare(
            &mut enh_id,
            cut,
            &ctx,
            cap.enhance(&Shape::Id, &p),
            cap.dimap(&un_id_fn(), &wrap_id_fn(), &p),
            &id_carrier,
        );

        for shape in &shapes {
            let Shape::Compose(f, g) = shape else { continue };
            let carrier = shape.carrier(&a).expect("registry carrier");
            let staged = cap
                .enhance(g, &p)
                .and_then(|q| cap.enhance(f, &q))
                .and_then(|q| cap.dimap(&un_compose_fn(), &wrap_compose_fn(), &q));
            compare(&mut enh_comp, cut, &format!("{ctx}, {shape}"), cap.enhance(shape, &p), staged, &carrier);
        }

        for n in &naturals {
            let carrier = n.source.carrier(&a).expect("registry carrier");
            let lhs = cap.enhance(&n.source, &p).and_then(|q| cap.dimap(&identity(), &n.as_fn(), &q));
            let rhs = cap.enhance(&n.target, &p).and_then(|q| cap.dimap(&n.as_fn(), &identity(), &q));
            compare(&mut wedge, cut, &format!("{ctx}, {}", n.name), lhs, rhs, &carrier);
        }

        // k: u -> a, l: a -> u, both sides `p (F u) (F u)`.
        let (k, l) = (table(&mut rng, &s2, &a), table(&mut rng, &a, &s2));
        let shape = &shapes[rng.gen_range(0..shapes.len())];
        let carrier = shape.carrier(&s2).expect("registry carrier");
        let lhs = cap.dimap(&k, &l, &p).and_then(|q| cap.enhance(shape, &q));
        let rhs = cap.enhance(shape, &p).and_then(|q| cap.dimap(&shape.map(&k), &shape.map(&l), &q));
        compare(&mut natural, cut, &format!("{ctx}, {shape}"), lhs, rhs, &carrier);
    }

    vec![
        dimap_id.finish(),
        dimap_comp.finish(),
        enh_id.finish(),
        enh_comp.finish(),
        wedge.finish(),
        natural.finish(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::Status;

    #[test]
    fn function_arrow_is_enhancing() {
        for r in check_enhancing_laws(&FunctionArrowTest, 5, 4, "function_arrow", Mode::Exhaustive) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn broken_compose_is_detected() {
        let reports = check_enhancing_laws(&BrokenCompose, 5, 4, "broken", Mode::Exhaustive);
        let status = |law| reports.iter().find(|r| r.law == law).unwrap().status;
        assert_eq!(status(Law::EnhanceCompose), Status::Fail);
        assert_eq!(status(Law::EnhanceId), Status::Pass);
        assert_eq!(status(Law::DimapComposition), Status::Pass);
    }
}
