//! The dynamic value universe and first-class functions over it.
//!
//! Optics in this crate are built from function values rather than type-level
//! machinery. Container payloads (`F A`) are ordinary [`Value`]s tagged with the
//! constructors their shape expects, so `Id`, `Compose`, pairs and sums all live
//! in one enum.

use std::fmt;
use std::sync::Arc;

use crate::error::{OpticError, Result};

/// Bound shared by every value type an optic family can range over.
pub trait Val: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {}

impl<T: Clone + PartialEq + fmt::Debug + Send + Sync + 'static> Val for T {}

/// A total-or-failing function `V -> V`.
pub type Func<V = Value> = Arc<dyn Fn(&V) -> Result<V> + Send + Sync>;

/// `put`: takes the new focus `b` and the old whole `s`.
pub type PutFn<V = Value> = Arc<dyn Fn(&V, &V) -> Result<V> + Send + Sync>;

/// `match`: `Right` carries the focus, `Left` the residual whole.
pub type MatchFn<V = Value> = Arc<dyn Fn(&V) -> Result<Either<V, V>> + Send + Sync>;

/// `over`: lifts a focus function to a whole function.
pub type OverFn<V = Value> = Arc<dyn Fn(Func<V>) -> Func<V> + Send + Sync>;

/// Binary sum. `Right` is the focus side everywhere in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Either<L, R> {
    Left(L),
    Right(R),
}

impl<L, R> Either<L, R> {
    pub fn map_right<R2>(self, f: impl FnOnce(R) -> R2) -> Either<L, R2> {
        match self {
            Either::Left(l) => Either::Left(l),
            Either::Right(r) => Either::Right(f(r)),
        }
    }

    pub fn is_right(&self) -> bool {
        matches!(self, Either::Right(_))
    }
}

impl Either<Value, Value> {
    /// Encodes the sum as a `Left`/`Right` value.
    pub fn into_value(self) -> Value {
        match self {
            Either::Left(l) => Value::left(l),
            Either::Right(r) => Value::right(r),
        }
    }
}

/// Wraps a closure as a [`Func`].
pub fn func<V, F>(f: F) -> Func<V>
where
    F: Fn(&V) -> Result<V> + Send + Sync + 'static,
{
    Arc::new(f)
}

/// Wraps a closure as a [`PutFn`].
pub fn put_fn<V, F>(f: F) -> PutFn<V>
where
    F: Fn(&V, &V) -> Result<V> + Send + Sync + 'static,
{
    Arc::new(f)
}

/// Wraps a closure as a [`MatchFn`].
pub fn match_fn<V, F>(f: F) -> MatchFn<V>
where
    F: Fn(&V) -> Result<Either<V, V>> + Send + Sync + 'static,
{
    Arc::new(f)
}

/// Wraps a closure as an [`OverFn`].
pub fn over_fn<V, F>(f: F) -> OverFn<V>
where
    F: Fn(Func<V>) -> Func<V> + Send + Sync + 'static,
{
    Arc::new(f)
}

pub fn identity<V: Val>() -> Func<V> {
    func(|v: &V| Ok(v.clone()))
}

pub fn constant<V: Val>(c: V) -> Func<V> {
    func(move |_: &V| Ok(c.clone()))
}

/// `outer ∘ inner`.
pub fn compose_fn<V: Val>(outer: &Func<V>, inner: &Func<V>) -> Func<V> {
    let (outer, inner) = (outer.clone(), inner.clone());
    func(move |v: &V| outer(&inner(v)?))
}

/// A dynamically typed value.
///
/// `Fun` holds a first-class function (used by continuation payloads); two
/// `Fun`s are equal only when they share the same allocation.
#[derive(Clone)]
pub enum Value {
    Unit,
    Int(i64),
    Str(Arc<str>),
    Pair(Arc<Value>, Arc<Value>),
    Left(Arc<Value>),
    Right(Arc<Value>),
    Nothing,
    Just(Arc<Value>),
    List(Arc<[Value]>),
    Id(Arc<Value>),
    Compose(Arc<Value>),
    Fun(Func),
}

impl Value {
    pub fn int(n: i64) -> Value {
        Value::Int(n)
    }

    pub fn str(s: &str) -> Value {
        Value::Str(Arc::from(s))
    }

    pub fn pair(a: Value, b: Value) -> Value {
        Value::Pair(Arc::new(a), Arc::new(b))
    }

    pub fn left(v: Value) -> Value {
        Value::Left(Arc::new(v))
    }

    pub fn right(v: Value) -> Value {
        Value::Right(Arc::new(v))
    }

    pub fn just(v: Value) -> Value {
        Value::Just(Arc::new(v))
    }

    pub fn maybe(v: Option<Value>) -> Value {
        v.map_or(Value::Nothing, Value::just)
    }

    pub fn list(items: impl IntoIterator<Item = Value>) -> Value {
        Value::List(items.into_iter().collect())
    }

    pub fn wrap_id(v: Value) -> Value {
        Value::Id(Arc::new(v))
    }

    pub fn wrap_compose(v: Value) -> Value {
        Value::Compose(Arc::new(v))
    }

    pub fn fun(f: Func) -> Value {
        Value::Fun(f)
    }

    pub fn as_int(&self) -> Result<i64> {
        match self {
            Value::Int(n) => Ok(*n),
            other => Err(OpticError::mismatch("integer", other)),
        }
    }

    pub fn as_pair(&self) -> Result<(&Value, &Value)> {
        match self {
            Value::Pair(a, b) => Ok((a, b)),
            other => Err(OpticError::mismatch("pair", other)),
        }
    }

    pub fn as_sum(&self) -> Result<Either<&Value, &Value>> {
        match self {
            Value::Left(l) => Ok(Either::Left(l)),
            Value::Right(r) => Ok(Either::Right(r)),
            other => Err(OpticError::mismatch("sum", other)),
        }
    }

    pub fn as_maybe(&self) -> Result<Option<&Value>> {
        match self {
            Value::Nothing => Ok(None),
            Value::Just(v) => Ok(Some(v)),
            other => Err(OpticError::mismatch("maybe", other)),
        }
    }

    pub fn as_list(&self) -> Result<&[Value]> {
        match self {
            Value::List(items) => Ok(items),
            other => Err(OpticError::mismatch("list", other)),
        }
    }

    pub fn un_id(&self) -> Result<&Value> {
        match self {
            Value::Id(v) => Ok(v),
            other => Err(OpticError::mismatch("Id payload", other)),
        }
    }

    pub fn un_compose(&self) -> Result<&Value> {
        match self {
            Value::Compose(v) => Ok(v),
            other => Err(OpticError::mismatch("Compose payload", other)),
        }
    }

    pub fn as_fun(&self) -> Result<&Func> {
        match self {
            Value::Fun(f) => Ok(f),
            other => Err(OpticError::mismatch("function", other)),
        }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        use Value::*;
        match (self, other) {
            (Unit, Unit) | (Nothing, Nothing) => true,
            (Int(a), Int(b)) => a == b,
            (Str(a), Str(b)) => a == b,
            (Pair(a1, b1), Pair(a2, b2)) => a1 == a2 && b1 == b2,
            (Left(a), Left(b)) | (Right(a), Right(b)) | (Just(a), Just(b)) => a == b,
            (Id(a), Id(b)) | (Compose(a), Compose(b)) => a == b,
            (List(a), List(b)) => a == b,
            (Fun(a), Fun(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Unit => f.write_str("()"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Str(s) => write!(f, "{s:?}"),
            Value::Pair(a, b) => write!(f, "({a},{b})"),
            Value::Left(v) => write!(f, "Left {}", Paren(v)),
            Value::Right(v) => write!(f, "Right {}", Paren(v)),
            Value::Nothing => f.write_str("Nothing"),
            Value::Just(v) => write!(f, "Just {}", Paren(v)),
            Value::List(items) => {
                f.write_str("[")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str("]")
            }
            Value::Id(v) => write!(f, "Id {}", Paren(v)),
            Value::Compose(v) => write!(f, "Compose {}", Paren(v)),
            Value::Fun(_) => f.write_str("<fn>"),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parenthesizes constructor applications when printed as an argument.
struct Paren<'a>(&'a Value);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Value::Left(_) | Value::Right(_) | Value::Just(_) | Value::Id(_) | Value::Compose(_) => {
                write!(f, "({})", self.0)
            }
            Value::Int(n) if *n < 0 => write!(f, "({n})"),
            v => write!(f, "{v}"),
        }
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::str(s)
    }
}

impl From<()> for Value {
    fn from(_: ()) -> Self {
        Value::Unit
    }
}

impl<A: Into<Value>, B: Into<Value>> From<(A, B)> for Value {
    fn from((a, b): (A, B)) -> Self {
        Value::pair(a.into(), b.into())
    }
}
