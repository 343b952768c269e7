//! Seeded generators: lawful optics built from bijections, and arbitrary
//! (usually unlawful) optics built from random tables.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Observable;
use crate::error::{OpticError, Result};
use crate::families::{AchLens, Adapter, Lens, OpticFamily, Optional, Prism, Setter};
use crate::finite::{FiniteDomain, FnTable};
use crate::functors::monoid::FunctorMonoid;
use crate::functors::{shapes_in, Shape};
use crate::iso::IsoOptic;
use crate::prof::{iso_to_prof, ProfOptic};
use crate::value::{func, put_fn, Either, Func, Value};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A bijection `from -> to`, sending `from[i]` to `to[perm[i]]`.
#[derive(Clone, Debug)]
pub struct Bijection {
    from: FiniteDomain,
    to: FiniteDomain,
    perm: Vec<usize>,
}

impl Bijection {
    pub fn new(from: &FiniteDomain, to: &FiniteDomain, perm: Vec<usize>) -> Result<Self> {
        if from.len() != to.len() {
            return Err(OpticError::Domain(format!(
                "cardinality mismatch: |{}| = {} but |{}| = {}",
                from.name(),
                from.len(),
                to.name(),
                to.len()
            )));
        }
        let mut seen = vec![false; to.len()];
        for &p in &perm {
            if p >= to.len() || std::mem::replace(&mut seen[p], true) {
                return Err(OpticError::Domain(format!("{perm:?} is not a permutation")));
            }
        }
        if perm.len() != from.len() {
            return Err(OpticError::Domain(format!("{perm:?} is not a permutation")));
        }
        Ok(Bijection {
            from: from.clone(),
            to: to.clone(),
            perm,
        })
    }

    pub fn random(rng: &mut impl Rng, from: &FiniteDomain, to: &FiniteDomain) -> Result<Self> {
        let mut perm: Vec<usize> = (0..to.len()).collect();
        perm.shuffle(rng);
        Self::new(from, to, perm)
    }

    pub fn forward(&self) -> Func {
        let this = self.clone();
        func(move |x: &Value| {
            let i = index(&this.from, x)?;
            Ok(this.to.elements()[this.perm[i]].clone())
        })
    }

    pub fn backward(&self) -> Func {
        let mut inverse = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inverse[p] = i;
        }
        let (from, to) = (self.from.clone(), self.to.clone());
        func(move |y: &Value| Ok(from.elements()[inverse[index(&to, y)?]].clone()))
    }
}

fn index(domain: &FiniteDomain, v: &Value) -> Result<usize> {
    domain.index_of(v).ok_or_else(|| OpticError::OutOfDomain {
        value: v.to_string(),
        domain: domain.name().to_string(),
    })
}

/// `get = snd . phi`, `put b s = phi^-1 (fst (phi s), b)` for `phi: S ≅ R × A`.
pub fn lens_from_bijection(phi: &Bijection) -> Lens {
    let (fwd, fwd2, bwd) = (phi.forward(), phi.forward(), phi.backward());
    Lens::new(
        move |s: &Value| Ok(fwd(s)?.as_pair()?.1.clone()),
        move |b: &Value, s: &Value| {
            let rs = fwd2(s)?;
            bwd(&Value::pair(rs.as_pair()?.0.clone(), b.clone()))
        },
    )
}

/// A lawful lens from a random bijection `S ≅ R × A`.
pub fn gen_lawful_lens(seed: u64, s: &FiniteDomain, r: &FiniteDomain, a: &FiniteDomain) -> Result<Lens> {
    let phi = Bijection::random(&mut rng(seed), s, &FiniteDomain::product(r, a))?;
    Ok(lens_from_bijection(&phi))
}

/// A lawful prism from a random bijection `S ≅ R + A`.
pub fn gen_lawful_prism(seed: u64, s: &FiniteDomain, r: &FiniteDomain, a: &FiniteDomain) -> Result<Prism> {
    let phi = Bijection::random(&mut rng(seed), s, &FiniteDomain::sum(r, a))?;
    let (fwd, bwd) = (phi.forward(), phi.backward());
    Ok(Prism::new(
        move |s: &Value| {
            Ok(match fwd(s)?.as_sum()? {
                Either::Left(_) => Either::Left(s.clone()),
                Either::Right(a) => Either::Right(a.clone()),
            })
        },
        move |b: &Value| bwd(&Value::right(b.clone())),
    ))
}

/// A lawful achromatic lens from `S ≅ R × A`; `create` uses the first
/// element of `R` as the distinguished residual.
pub fn gen_lawful_achlens(seed: u64, s: &FiniteDomain, r: &FiniteDomain, a: &FiniteDomain) -> Result<AchLens> {
    let phi = Bijection::random(&mut rng(seed), s, &FiniteDomain::product(r, a))?;
    let lens = lens_from_bijection(&phi);
    let (point, bwd) = (r.elements()[0].clone(), phi.backward());
    Ok(AchLens::from_fns(
        lens.get_fn().clone(),
        lens.put_fn().clone(),
        func(move |b: &Value| bwd(&Value::pair(point.clone(), b.clone()))),
    ))
}

/// A lawful optional from `S ≅ M + R × A`: `M` is the miss residual and `R`
/// the residual beside a hit.
pub fn gen_lawful_optional(
    seed: u64,
    s: &FiniteDomain,
    miss: &FiniteDomain,
    r: &FiniteDomain,
    a: &FiniteDomain,
) -> Result<Optional> {
    let to = FiniteDomain::sum(miss, &FiniteDomain::product(r, a));
    let phi = Bijection::random(&mut rng(seed), s, &to)?;
    let (fwd, fwd2, bwd) = (phi.forward(), phi.forward(), phi.backward());
    Ok(Optional::new(
        move |s: &Value| {
            Ok(match fwd(s)?.as_sum()? {
                Either::Left(_) => Either::Left(s.clone()),
                Either::Right(ra) => Either::Right(ra.as_pair()?.1.clone()),
            })
        },
        move |b: &Value, s: &Value| match fwd2(s)?.as_sum()? {
            Either::Left(_) => Ok(s.clone()),
            Either::Right(ra) => bwd(&Value::right(Value::pair(ra.as_pair()?.0.clone(), b.clone()))),
        },
    ))
}

/// `over h = phi^-1 . fmap h . phi` for a random bijection `S ≅ F A`.
pub fn gen_setter(seed: u64, s: &FiniteDomain, shape: &Shape, a: &FiniteDomain) -> Result<Setter> {
    let phi = Bijection::random(&mut rng(seed), s, &shape.carrier(a)?)?;
    let (fwd, bwd, shape) = (phi.forward(), phi.backward(), shape.clone());
    Ok(Setter::new(move |h| {
        let (fwd, bwd, lifted) = (fwd.clone(), bwd.clone(), shape.map(&h));
        func(move |s: &Value| bwd(&lifted(&fwd(s)?)?))
    }))
}

/// A lawful adapter from a random bijection `S ≅ A`.
pub fn gen_lawful_adapter(seed: u64, s: &FiniteDomain, a: &FiniteDomain) -> Result<Adapter> {
    let phi = Bijection::random(&mut rng(seed), s, a)?;
    Ok(Adapter::from_fns(phi.forward(), phi.backward()))
}

/// Arbitrary members of a family with the given whole and focus domains.
pub trait SampleOptic: Observable {
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self;
}

fn table(rng: &mut ChaCha8Rng, from: &FiniteDomain, to: &FiniteDomain) -> Func {
    FnTable::random(rng, from, to).to_func()
}

fn random_put(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> crate::value::PutFn {
    let t = table(rng, &FiniteDomain::product(focus, whole), whole);
    put_fn(move |b: &Value, s: &Value| t(&Value::pair(b.clone(), s.clone())))
}

fn random_match(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> crate::value::MatchFn {
    let t = table(rng, whole, &FiniteDomain::sum(whole, focus));
    crate::value::match_fn(move |s: &Value| {
        Ok(match t(s)?.as_sum()? {
            Either::Left(x) => Either::Left(x.clone()),
            Either::Right(a) => Either::Right(a.clone()),
        })
    })
}

impl SampleOptic for Lens {
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self {
        Lens::from_fns(table(rng, whole, focus), random_put(rng, whole, focus))
    }
}

impl SampleOptic for Prism {
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self {
        Prism::from_fns(random_match(rng, whole, focus), table(rng, focus, whole))
    }
}

impl SampleOptic for Adapter {
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self {
        Adapter::from_fns(table(rng, whole, focus), table(rng, focus, whole))
    }
}

impl SampleOptic for AchLens {
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self {
        AchLens::from_fns(
            table(rng, whole, focus),
            random_put(rng, whole, focus),
            table(rng, focus, whole),
        )
    }
}

impl SampleOptic for Optional {
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self {
        Optional::from_fns(random_match(rng, whole, focus), random_put(rng, whole, focus))
    }
}

impl SampleOptic for Setter {
    /// The setter of a random lens, post-composed with a random endofunction
    /// of the whole so `over` is not always of lens form.
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self {
        let lens = Lens::sample(rng, whole, focus);
        let post = table(rng, whole, whole);
        let lens_over = Setter::new(move |h| lens.map_optic(h));
        if rng.gen_bool(0.5) {
            lens_over
        } else {
            Setter::inj(crate::value::identity(), post).compose(&lens_over)
        }
    }
}

impl<M: FunctorMonoid> SampleOptic for IsoOptic<M> {
    /// A random registry shape of `M` with random forward and backward tables.
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self {
        let shapes = shapes_in(M::FAMILY);
        let shape = shapes[rng.gen_range(0..shapes.len())].clone();
        let carrier = shape.carrier(focus).expect("registry shapes have finite residuals");
        let (fwd, bwd) = (table(rng, whole, &carrier), table(rng, &carrier, whole));
        IsoOptic::new(shape, fwd, bwd).expect("shape drawn from the family")
    }
}

impl<M: FunctorMonoid> SampleOptic for ProfOptic<M> {
    fn sample(rng: &mut ChaCha8Rng, whole: &FiniteDomain, focus: &FiniteDomain) -> Self {
        iso_to_prof(&IsoOptic::<M>::sample(rng, whole, focus))
    }
}
