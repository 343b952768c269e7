use std::fmt;

use super::OpticFamily;
use crate::error::Result;
use crate::value::{func, match_fn, Either, Func, MatchFn, Val, Value};

/// Sum-like access: `match: s -> t + a` (`Right` = hit), `build: b -> t`.
#[derive(Clone)]
pub struct Prism<V = Value> {
    matcher: MatchFn<V>,
    build: Func<V>,
}

impl<V: Val> Prism<V> {
    pub fn new<M, B>(matcher: M, build: B) -> Self
    where
        M: Fn(&V) -> Result<Either<V, V>> + Send + Sync + 'static,
        B: Fn(&V) -> Result<V> + Send + Sync + 'static,
    {
        Prism {
            matcher: match_fn(matcher),
            build: func(build),
        }
    }

    pub fn from_fns(matcher: MatchFn<V>, build: Func<V>) -> Self {
        Prism { matcher, build }
    }

    /// `Right a` on a hit, `Left t` with the unchanged residual on a miss.
    pub fn matching(&self, s: &V) -> Result<Either<V, V>> {
        (self.matcher)(s)
    }

    pub fn build(&self, b: &V) -> Result<V> {
        (self.build)(b)
    }

    pub fn match_fn(&self) -> &MatchFn<V> {
        &self.matcher
    }

    pub fn build_fn(&self) -> &Func<V> {
        &self.build
    }
}

impl<V: Val> OpticFamily for Prism<V> {
    type Value = V;

    fn inj(fwd: Func<V>, bwd: Func<V>) -> Self {
        Prism {
            matcher: match_fn(move |s: &V| Ok(Either::Right(fwd(s)?))),
            build: bwd,
        }
    }

    fn compose(&self, inner: &Self) -> Self {
        let (m1, b1) = (self.matcher.clone(), self.build.clone());
        let (m2, b2) = (inner.matcher.clone(), inner.build.clone());
        let build = {
            let b1 = b1.clone();
            func(move |y: &V| b1(&b2(y)?))
        };
        let matcher = match_fn(move |s: &V| match m1(s)? {
            Either::Left(t) => Ok(Either::Left(t)),
            Either::Right(a) => match m2(&a)? {
                Either::Left(b) => Ok(Either::Left(b1(&b)?)),
                Either::Right(x) => Ok(Either::Right(x)),
            },
        });
        Prism { matcher, build }
    }

    fn map_optic(&self, h: Func<V>) -> Func<V> {
        let (matcher, build) = (self.matcher.clone(), self.build.clone());
        func(move |s: &V| match matcher(s)? {
            Either::Left(t) => Ok(t),
            Either::Right(a) => build(&h(&a)?),
        })
    }
}

impl<V> fmt::Debug for Prism<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Prism { .. }")
    }
}
