//! Canonical optics over [`Value`].

use super::{Lens, Prism, Setter};
use crate::value::{func, Either, Value};

/// Focus on the first component of a pair.
pub fn first() -> Lens {
    Lens::new(
        |s: &Value| Ok(s.as_pair()?.0.clone()),
        |b: &Value, s: &Value| Ok(Value::pair(b.clone(), s.as_pair()?.1.clone())),
    )
}

/// Focus on the second component of a pair.
pub fn second() -> Lens {
    Lens::new(
        |s: &Value| Ok(s.as_pair()?.1.clone()),
        |b: &Value, s: &Value| Ok(Value::pair(s.as_pair()?.0.clone(), b.clone())),
    )
}

/// Focus on the payload of a `Just`; `Nothing` is the miss.
pub fn just() -> Prism {
    Prism::new(
        |s: &Value| {
            Ok(match s.as_maybe()? {
                Some(a) => Either::Right(a.clone()),
                None => Either::Left(Value::Nothing),
            })
        },
        |b: &Value| Ok(Value::just(b.clone())),
    )
}

/// Focus on the `Right` side of a sum; a `Left c` misses as `Left c`.
pub fn right() -> Prism {
    Prism::new(
        |s: &Value| {
            Ok(match s.as_sum()? {
                Either::Left(c) => Either::Left(Value::left(c.clone())),
                Either::Right(a) => Either::Right(a.clone()),
            })
        },
        |b: &Value| Ok(Value::right(b.clone())),
    )
}

/// Every element of a list.
pub fn each() -> Setter {
    Setter::new(|h| {
        func(move |s: &Value| {
            let items = s.as_list()?;
            Ok(Value::list(items.iter().map(|x| h(x)).collect::<Result<Vec<_>, _>>()?))
        })
    })
}
