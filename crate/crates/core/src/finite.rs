//! Finite domains and lookup-table functions over them.
//!
//! Every exhaustive check in the crate enumerates [`FnTable`]s: a function
//! `A -> B` over finite domains is just the list of images of `A`'s elements.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{OpticError, Result};
use crate::value::{func, Func, Value};

/// Largest `|B|^|A| * |S|` for which probing is exhaustive.
pub const EXHAUSTIVE_CAP: u128 = 100_000;

/// Number of random probe functions used above [`EXHAUSTIVE_CAP`].
pub const RANDOM_PROBES: usize = 64;

/// A named, non-empty list of distinct values.
#[derive(Clone, PartialEq)]
pub struct FiniteDomain {
    name: Arc<str>,
    elements: Arc<[Value]>,
}

impl FiniteDomain {
    pub fn new(name: &str, elements: Vec<Value>) -> Result<Self> {
        if elements.is_empty() {
            return Err(OpticError::Domain(format!("domain `{name}` is empty")));
        }
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(OpticError::Domain(format!("domain `{name}` repeats {e}")));
            }
        }
        Ok(FiniteDomain {
            name: Arc::from(name),
            elements: elements.into(),
        })
    }

    /// `{0, 1, .., n-1}`.
    pub fn ints(name: &str, n: usize) -> Self {
        assert!(n > 0, "domain `{name}` must be non-empty");
        FiniteDomain {
            name: Arc::from(name),
            elements: (0..n as i64).map(Value::Int).collect(),
        }
    }

    /// `{"p0", "p1", ..}` for prefix `p`.
    pub fn labels(name: &str, prefix: &str, n: usize) -> Self {
        assert!(n > 0, "domain `{name}` must be non-empty");
        FiniteDomain {
            name: Arc::from(name),
            elements: (0..n).map(|i| Value::str(&format!("{prefix}{i}"))).collect(),
        }
    }

    pub fn unit() -> Self {
        FiniteDomain {
            name: Arc::from("()"),
            elements: Arc::from(vec![Value::Unit]),
        }
    }

    /// All pairs `(a, b)`, first component varying slowest.
    pub fn product(a: &FiniteDomain, b: &FiniteDomain) -> Self {
        let elements = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| Value::pair(x.clone(), y.clone())))
            .collect();
        FiniteDomain {
            name: Arc::from(format!("({}, {})", a.name, b.name)),
            elements,
        }
    }

    /// `Left a` for every `a`, then `Right b` for every `b`.
    pub fn sum(a: &FiniteDomain, b: &FiniteDomain) -> Self {
        let elements = a
            .iter()
            .map(|x| Value::left(x.clone()))
            .chain(b.iter().map(|y| Value::right(y.clone())))
            .collect();
        FiniteDomain {
            name: Arc::from(format!("{} + {}", a.name, b.name)),
            elements,
        }
    }

    /// `Nothing` followed by `Just a` for every `a`.
    pub fn maybe(a: &FiniteDomain) -> Self {
        let elements = std::iter::once(Value::Nothing)
            .chain(a.iter().map(|x| Value::just(x.clone())))
            .collect();
        FiniteDomain {
            name: Arc::from(format!("Maybe {}", a.name)),
            elements,
        }
    }

    /// Applies a constructor to every element.
    pub fn mapped(&self, name: &str, f: impl Fn(&Value) -> Value) -> Self {
        FiniteDomain {
            name: Arc::from(name),
            elements: self.iter().map(f).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[Value] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Value> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &Value) -> bool {
        self.elements.contains(v)
    }

    pub fn index_of(&self, v: &Value) -> Option<usize> {
        self.elements.iter().position(|e| e == v)
    }

    /// `|codomain|^|self|`, saturating.
    pub fn function_count(&self, codomain: &FiniteDomain) -> u128 {
        (codomain.len() as u128)
            .checked_pow(self.len() as u32)
            .unwrap_or(u128::MAX)
    }
}

impl fmt::Debug for FiniteDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {:?}", self.name, self.elements)
    }
}

/// A function given by its table of images.
#[derive(Clone, PartialEq)]
pub struct FnTable {
    domain: FiniteDomain,
    image: Vec<Value>,
}

impl FnTable {
    pub fn new(domain: FiniteDomain, image: Vec<Value>) -> Result<Self> {
        if image.len() != domain.len() {
            return Err(OpticError::Domain(format!(
                "table over `{}` needs {} images, got {}",
                domain.name(),
                domain.len(),
                image.len()
            )));
        }
        Ok(FnTable { domain, image })
    }

    /// Evaluates `f` on every element of `domain`.
    pub fn tabulate(domain: &FiniteDomain, f: &Func) -> Result<Self> {
        let image = domain.iter().map(|x| f(x)).collect::<Result<_>>()?;
        Ok(FnTable {
            domain: domain.clone(),
            image,
        })
    }

    /// A uniformly random table.
    pub fn random(rng: &mut impl Rng, domain: &FiniteDomain, codomain: &FiniteDomain) -> Self {
        let image = (0..domain.len())
            .map(|_| codomain.elements()[rng.gen_range(0..codomain.len())].clone())
            .collect();
        FnTable {
            domain: domain.clone(),
            image,
        }
    }

    /// Every function `domain -> codomain`, in odometer order with the first
    /// element's image varying slowest.
    pub fn all(domain: &FiniteDomain, codomain: &FiniteDomain) -> AllTables {
        AllTables {
            domain: domain.clone(),
            codomain: codomain.clone(),
            digits: Some(vec![0; domain.len()]),
        }
    }

    pub fn domain(&self) -> &FiniteDomain {
        &self.domain
    }

    pub fn image(&self) -> &[Value] {
        &self.image
    }

    pub fn apply(&self, v: &Value) -> Result<Value> {
        match self.domain.index_of(v) {
            Some(i) => Ok(self.image[i].clone()),
            None => Err(OpticError::OutOfDomain {
                value: v.to_string(),
                domain: self.domain.name().to_string(),
            }),
        }
    }

    /// The inverse of a bijective endo-table, `None` otherwise.
    pub fn inverse(&self) -> Option<FnTable> {
        let mut image = vec![None; self.domain.len()];
        for (x, y) in self.domain.iter().zip(&self.image) {
            let slot = image.get_mut(self.domain.index_of(y)?)?;
            if slot.replace(x.clone()).is_some() {
                return None;
            }
        }
        let image = image.into_iter().collect::<Option<Vec<_>>>()?;
        Some(FnTable {
            domain: self.domain.clone(),
            image,
        })
    }

    pub fn to_func(&self) -> Func {
        let table = self.clone();
        func(move |v: &Value| table.apply(v))
    }
}

impl fmt::Display for FnTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (x, y)) in self.domain.iter().zip(&self.image).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}->{y}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FnTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator behind [`FnTable::all`].
pub struct AllTables {
    domain: FiniteDomain,
    codomain: FiniteDomain,
    digits: Option<Vec<usize>>,
}

impl Iterator for AllTables {
    type Item = FnTable;

    fn next(&mut self) -> Option<FnTable> {
        let digits = self.digits.as_mut()?;
        let table = FnTable {
            domain: self.domain.clone(),
            image: digits.iter().map(|&d| self.codomain.elements()[d].clone()).collect(),
        };
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.digits = None;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < self.codomain.len() {
                break;
            }
            digits[pos] = 0;
        }
        Some(table)
    }
}

/// Probe functions `A -> B` for an observation over `inputs` whole values:
/// every table when `|B|^|A| * inputs` fits under [`EXHAUSTIVE_CAP`], otherwise
/// [`RANDOM_PROBES`] tables drawn from `seed`.
pub fn probe_tables(a: &FiniteDomain, b: &FiniteDomain, inputs: usize, seed: u64) -> Vec<FnTable> {
    let total = a.function_count(b).saturating_mul(inputs.max(1) as u128);
    if total <= EXHAUSTIVE_CAP {
        FnTable::all(a, b).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..RANDOM_PROBES).map(|_| FnTable::random(&mut rng, a, b)).collect()
    }
}

/// Whether [`probe_tables`] enumerates every function.
pub fn probes_exhaustive(a: &FiniteDomain, b: &FiniteDomain, inputs: usize) -> bool {
    a.function_count(b).saturating_mul(inputs.max(1) as u128) <= EXHAUSTIVE_CAP
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_counts_match_power() {
        let a = FiniteDomain::ints("A", 3);
        let b = FiniteDomain::ints("B", 2);
        let tables: Vec<_> = FnTable::all(&a, &b).collect();
        assert_eq!(tables.len(), 8);
        for (i, t) in tables.iter().enumerate() {
            assert!(!tables[..i].contains(t));
        }
    }

    #[test]
    fn rejects_empty_and_duplicate_domains() {
        assert!(FiniteDomain::new("E", vec![]).is_err());
        assert!(FiniteDomain::new("D", vec![Value::int(1), Value::int(1)]).is_err());
    }

    #[test]
    fn table_lookup_outside_domain_fails() {
        let t = FnTable::new(FiniteDomain::ints("A", 2), vec![Value::int(5), Value::int(6)]).unwrap();
        assert_eq!(t.apply(&Value::int(1)).unwrap(), Value::int(6));
        assert!(matches!(t.apply(&Value::int(9)), Err(OpticError::OutOfDomain { .. })));
    }

    #[test]
    fn probes_fall_back_to_random_sample() {
        let a = FiniteDomain::ints("A", 6);
        let b = FiniteDomain::ints("B", 6);
        assert_eq!(probe_tables(&a, &b, 10, 7).len(), RANDOM_PROBES);
        assert_eq!(probe_tables(&a, &b, 10, 7), probe_tables(&a, &b, 10, 7));
        let small = FiniteDomain::ints("S", 2);
        assert_eq!(probe_tables(&small, &small, 3, 7).len(), 4);
    }
}
