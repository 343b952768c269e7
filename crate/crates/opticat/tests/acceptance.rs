//! Acceptance suite: one pass/fail line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the lines always show.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use opticat::{parse_path, print_path};
use opticat_core::encode::Functorize;
use opticat_core::families::{first, just, AchLens, Adapter, FamilyTag, Lens, OpticFamily, Optional, Prism, Setter};
use opticat_core::finite::FiniteDomain;
use opticat_core::functors::monoid::{Affine, AnyFunctor, FunctorMonoid, IdOnly, IsPointedProduct, IsProduct, IsSum};
use opticat_core::functors::{naturals_in, registry_residual, Residual, Shape};
use opticat_core::iso::IsoOptic;
use opticat_core::laws::{
    check_derivation, check_encoding, check_enhancing_laws, check_lens_laws, check_morphism,
    check_optic_family_laws, check_optic_family_laws_for_tag, check_representation, gen_lawful_achlens,
    gen_lawful_adapter, gen_lawful_lens, gen_lawful_optional, gen_lawful_prism, gen_setter, unlawful_lens,
    BrokenCompose, CapabilityUnderTest, FunctionArrowTest, GettingTest, IsoCapTest, Law, LawReport, MatchingTest,
    Mode, MorphismSamples, Observable, SampleOptic, Status, Tower,
};
use opticat_core::prof::{
    build_operator, get_operator, iso_to_prof, match_operator, prof_first, prof_just,
    prof_to_iso, ProfOptic,
};
use opticat_core::value::{constant, Either, Value};
use proptest::test_runner::{Config, TestRunner};

const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome);

type Named = Vec<(String, Box<dyn CapabilityUnderTest>)>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Every report passed (an inconclusive report does not count), with the
/// total case count.
fn all_pass(reports: &[LawReport]) -> Result<u64, String> {
    let bad: Vec<String> = reports.iter().filter(|r| r.status != Status::Pass).map(|r| r.to_string()).collect();
    ensure!(bad.is_empty(), "{}", bad.join("; "));
    Ok(reports.iter().map(|r| r.cases).sum())
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure!(t < limit, "took {t:.2?}, limit {limit:?}");
    Ok(format!("{t:.2?}"))
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let hello: Value = (4, "hello").into();
    let nested: Value = (((1, 2), "hi"), 4).into();
    let jn = Value::just(Value::Nothing);
    let jj42 = Value::just(Value::just(Value::int(42)));
    let j42 = Value::just(Value::int(42));
    let (i4, i12, i42) = (Value::int(4), Value::int(12), Value::int(42));
    let put_first: Value = (12, "hello").into();
    let put_first4: Value = (((42, 2), "hi"), 4).into();

    let first4 = first().compose(&first()).compose(&first());
    let justjust = just().compose(&just());
    let concrete = [
        ("get first", first().get(&hello).ok() == Some(i4.clone())),
        ("put first", first().put(&i12, &hello).ok() == Some(put_first.clone())),
        ("put firstOf4", first4.put(&i42, &nested).ok() == Some(put_first4.clone())),
        ("match just hit", just().matching(&j42).ok() == Some(Either::Right(i42.clone()))),
        ("match just miss", just().matching(&Value::Nothing).ok() == Some(Either::Left(Value::Nothing))),
        ("match justjust miss", justjust.matching(&jn).ok() == Some(Either::Left(jn.clone()))),
        ("match justjust hit", justjust.matching(&jj42).ok() == Some(Either::Right(i42.clone()))),
        ("build justjust", justjust.build(&i42).ok() == Some(jj42.clone())),
    ];

    let pf4 = prof_first().compose(&prof_first()).compose(&prof_first());
    let pjj = prof_just().compose(&prof_just());
    let get = get_operator(&prof_first()).map_err(|e| e.to_string())?;
    let m = match_operator(&prof_just()).map_err(|e| e.to_string())?;
    let mm = match_operator(&pjj).map_err(|e| e.to_string())?;
    let bb = build_operator(&pjj).map_err(|e| e.to_string())?;
    let profunctor = [
        ("get first", get(&hello).ok() == Some(i4)),
        ("put first", prof_first().map_optic(constant(i12))(&hello).ok() == Some(put_first)),
        ("put firstOf4", pf4.map_optic(constant(i42.clone()))(&nested).ok() == Some(put_first4)),
        ("match just hit", m(&j42).ok() == Some(Either::Right(i42.clone()))),
        ("match just miss", m(&Value::Nothing).ok() == Some(Either::Left(Value::Nothing))),
        ("match justjust miss", mm(&jn).ok() == Some(Either::Left(jn.clone()))),
        ("match justjust hit", mm(&jj42).ok() == Some(Either::Right(i42.clone()))),
        ("build justjust", bb(&i42).ok() == Some(jj42)),
    ];
    for (form, checks) in [("concrete", &concrete), ("profunctor", &profunctor)] {
        for (name, ok) in checks {
            ensure!(*ok, "{form} {name} differs");
        }
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("8 examples x 2 forms in {t}"))
}

fn family_laws() -> Outcome {
    fn iso<M: FunctorMonoid>() -> Vec<LawReport> {
        let subject = format!("IsoOptic<{}>", M::FAMILY);
        check_optic_family_laws::<IsoOptic<M>>(SEED, 16, &Tower::default(), &subject, Mode::Exhaustive)
    }
    let start = Instant::now();
    let tower = Tower::default();
    let widest = [&tower.d0, &tower.d1, &tower.d2, &tower.d3].iter().map(|d| d.len()).max().unwrap_or(0);
    ensure!(widest <= 4, "domain of size {widest}");
    let mut reports: Vec<LawReport> = FamilyTag::ALL
        .into_iter()
        .flat_map(|tag| check_optic_family_laws_for_tag(tag, SEED, 16, Mode::Exhaustive))
        .collect();
    for r in [iso::<AnyFunctor>(), iso::<IsProduct>(), iso::<IsSum>(), iso::<IsPointedProduct>(), iso::<IdOnly>(), iso::<Affine>()] {
        reports.extend(r);
    }
    let cases = all_pass(&reports)?;
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("6 concrete + 6 iso families, {} reports, {cases} cases in {t}", reports.len()))
}

fn enhancing_laws() -> Outcome {
    let start = Instant::now();
    let mut cuts: Named = vec![
        ("FunctionArrow".into(), Box::new(FunctionArrowTest)),
        ("Getting".into(), Box::new(GettingTest::default())),
        ("Matching".into(), Box::new(MatchingTest::default())),
        ("IsoCapability<AnyFunctor>".into(), Box::new(IsoCapTest::<AnyFunctor>::default())),
        ("IsoCapability<IsProduct>".into(), Box::new(IsoCapTest::<IsProduct>::default())),
        ("IsoCapability<Affine>".into(), Box::new(IsoCapTest::<Affine>::default())),
    ];
    // Families too small for five naturals still run; they are not counted
    // toward the wedge threshold.
    let extra: Named = vec![
        ("IsoCapability<IsSum>".into(), Box::new(IsoCapTest::<IsSum>::default())),
        ("IsoCapability<IsPointedProduct>".into(), Box::new(IsoCapTest::<IsPointedProduct>::default())),
        ("IsoCapability<IdOnly>".into(), Box::new(IsoCapTest::<IdOnly>::default())),
    ];
    let mut wedge_counts = Vec::new();
    for (name, cut) in &cuts {
        let n = naturals_in(cut.family()).len();
        ensure!(n >= 5, "{name}: wedge over only {n} naturals");
        wedge_counts.push(n);
    }
    cuts.extend(extra);
    let mut cases = 0;
    for (name, cut) in &cuts {
        let reports = check_enhancing_laws(cut.as_ref(), SEED, 8, name, Mode::Exhaustive);
        let wedge = reports.iter().find(|r| r.law == Law::EnhanceWedge).ok_or("no wedge report")?;
        ensure!(wedge.cases > 0 || naturals_in(cut.family()).is_empty(), "{name}: wedge never evaluated");
        cases += all_pass(&reports)?;
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{} capabilities, wedge over {:?} naturals, {cases} cases in {t}",
        cuts.len(),
        wedge_counts
    ))
}

fn representation() -> Outcome {
    const PER_FAMILY: usize = 84;
    fn run<M: FunctorMonoid>() -> Vec<LawReport> {
        check_representation::<M>(SEED, PER_FAMILY, &format!("{}", M::FAMILY), Mode::Exhaustive)
    }
    let start = Instant::now();
    let reports: Vec<LawReport> = [run::<AnyFunctor>(), run::<IsProduct>(), run::<IsSum>(), run::<IsPointedProduct>(), run::<IdOnly>(), run::<Affine>()]
        .concat();
    let cases = all_pass(&reports)?;
    let isos = PER_FAMILY * 6;
    ensure!(isos >= 500, "only {isos} isos");
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{isos} isos and {isos} profunctor optics, {cases} cases in {t}"))
}

fn derivation_for<O: Functorize + Observable>(optics: Vec<O>, whole: &FiniteDomain, focus: &FiniteDomain) -> Result<u64, String> {
    ensure!(optics.len() >= 200, "only {} optics", optics.len());
    let mut reports = check_derivation(&optics, whole, focus, SEED, 200, Mode::Exhaustive);
    reports.extend(check_encoding(&optics, whole, focus, SEED, 200, Mode::Exhaustive));
    all_pass(&reports)
}

fn derivation() -> Outcome {
    const N: u64 = 200;
    let start = Instant::now();
    let (r, a) = (registry_residual(), FiniteDomain::labels("A", "a", 2));
    let s_prod = FiniteDomain::ints("S", r.len() * a.len());
    let s_sum = FiniteDomain::ints("S", r.len() + a.len());
    let s_ad = FiniteDomain::ints("S", a.len());
    let miss = FiniteDomain::labels("M", "m", 1);
    let s_opt = FiniteDomain::ints("S", miss.len() + r.len() * a.len());
    let pair = Shape::pair(Residual::finite(r.clone()));
    let ok = |e: opticat_core::OpticError| e.to_string();

    let lenses = (0..N).map(|i| gen_lawful_lens(SEED + i, &s_prod, &r, &a)).collect::<Result<Vec<_>, _>>().map_err(ok)?;
    let prisms = (0..N).map(|i| gen_lawful_prism(SEED + i, &s_sum, &r, &a)).collect::<Result<Vec<_>, _>>().map_err(ok)?;
    let achs = (0..N).map(|i| gen_lawful_achlens(SEED + i, &s_prod, &r, &a)).collect::<Result<Vec<_>, _>>().map_err(ok)?;
    let setters = (0..N).map(|i| gen_setter(SEED + i, &s_prod, &pair, &a)).collect::<Result<Vec<_>, _>>().map_err(ok)?;
    let adapters = (0..N).map(|i| gen_lawful_adapter(SEED + i, &s_ad, &a)).collect::<Result<Vec<_>, _>>().map_err(ok)?;
    let optionals =
        (0..N).map(|i| gen_lawful_optional(SEED + i, &s_opt, &miss, &r, &a)).collect::<Result<Vec<_>, _>>().map_err(ok)?;

    let mut cases = 0;
    cases += derivation_for::<Lens>(lenses, &s_prod, &a)?;
    cases += derivation_for::<Prism>(prisms, &s_sum, &a)?;
    cases += derivation_for::<AchLens>(achs, &s_prod, &a)?;
    cases += derivation_for::<Setter>(setters, &s_prod, &a)?;
    cases += derivation_for::<Adapter>(adapters, &s_ad, &a)?;
    cases += derivation_for::<Optional>(optionals, &s_opt, &a)?;
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("6 families x {N} lawful optics, encode/decode included, {cases} cases in {t}"))
}

fn morphisms_for<O>() -> Result<u64, String>
where
    O: Functorize + SampleOptic,
{
    const PAIRS: usize = 100;
    let name = O::TAG.name();
    let concrete = MorphismSamples::<O>::generate(SEED, PAIRS);
    let isos = MorphismSamples::<IsoOptic<O::Monoid>>::generate(SEED, PAIRS);
    let profs = MorphismSamples::<ProfOptic<O::Monoid>>::generate(SEED, PAIRS);
    let enc = opticat_core::encode::prof_encoding::<O>();
    let m = Mode::Exhaustive;
    let mut reports = check_morphism(&|o: &O| Ok(o.concrete_to_iso()), &concrete, &format!("concrete_to_iso[{name}]"), m);
    reports.extend(check_morphism(&opticat_core::encode::unfunctorize::<O>, &isos, &format!("unfunctorize[{name}]"), m));
    reports.extend(check_morphism(&|i: &IsoOptic<O::Monoid>| Ok(iso_to_prof(i)), &isos, &format!("iso_to_prof[{name}]"), m));
    reports.extend(check_morphism(&prof_to_iso, &profs, &format!("prof_to_iso[{name}]"), m));
    reports.extend(check_morphism(&|o: &O| Ok(enc.encode(o)), &concrete, &format!("encode[{name}]"), m));
    reports.extend(check_morphism(&|l: &ProfOptic<O::Monoid>| enc.decode(l), &profs, &format!("decode[{name}]"), m));
    ensure!(reports.len() == 18, "expected 3 laws x 6 conversions, got {}", reports.len());
    all_pass(&reports)
}

fn morphisms() -> Outcome {
    let start = Instant::now();
    let cases = morphisms_for::<Lens>()?
        + morphisms_for::<Prism>()?
        + morphisms_for::<AchLens>()?
        + morphisms_for::<Setter>()?
        + morphisms_for::<Adapter>()?
        + morphisms_for::<Optional>()?;
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("6 conversions x 6 families x 100 pairs, {cases} cases in {t}"))
}

fn negative_controls() -> Outcome {
    let a = FiniteDomain::ints("A", 3);
    let s = FiniteDomain::product(&a, &FiniteDomain::labels("C", "c", 2));
    let reports = check_lens_laws(&unlawful_lens(), &s, &a, "unlawful", Mode::Exhaustive);
    let get_put = reports.iter().find(|r| r.law == Law::GetPut).ok_or("no GetPut report")?;
    ensure!(get_put.status == Status::Fail, "unlawful lens passed GetPut");
    let cx = get_put.counterexample.as_ref().ok_or("no counterexample")?;
    let broken = check_enhancing_laws(&BrokenCompose, SEED, 4, "broken", Mode::Exhaustive);
    let compose = broken.iter().find(|r| r.law == Law::EnhanceCompose).ok_or("no EnhanceCompose report")?;
    ensure!(compose.status == Status::Fail, "broken Compose lift passed");
    Ok(format!(
        "GetPut counterexample [{}] expected {} got {}; broken Compose caught after {} cases",
        cx.inputs.join(", "),
        cx.expected,
        cx.actual,
        compose.cases
    ))
}

fn cli() -> Outcome {
    let goldens = common::goldens();
    ensure!(goldens.len() >= 20, "only {} golden cases", goldens.len());
    ensure!(goldens.iter().any(|g| g.args.contains(&"snd.some")), "no snd.some case");
    let failures: Vec<String> = goldens.iter().filter_map(|g| common::check_golden(g).err()).collect();
    ensure!(failures.is_empty(), "{}", failures.join("; "));
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&common::path_strategy(), |p| {
            let back = parse_path(&print_path(&p)).map_err(|e| proptest::test_runner::TestCaseError::fail(e.to_string()))?;
            proptest::prop_assert_eq!(back, p);
            Ok(())
        })
        .map_err(|e| format!("round trip: {e}"))?;
    Ok(format!("{} golden invocations byte-exact, 1000 paths round-trip", goldens.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("worked examples", worked_examples),
        ("optic family laws", family_laws),
        ("enhancing laws", enhancing_laws),
        ("representation theorem", representation),
        ("derivation theorem", derivation),
        ("morphism preservation", morphisms),
        ("negative controls", negative_controls),
        ("cli golden tests", cli),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
