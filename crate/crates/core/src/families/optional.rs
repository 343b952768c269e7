use std::fmt;

use super::{Lens, OpticFamily, Prism};
use crate::error::Result;
use crate::value::{func, match_fn, put_fn, Either, Func, MatchFn, PutFn, Val, Value};

/// Affine access: a focus that may be absent (`match`) and can be replaced
/// when present (`put`). A miss leaves the whole untouched.
#[derive(Clone)]
pub struct Optional<V = Value> {
    matcher: MatchFn<V>,
    put: PutFn<V>,
}

impl<V: Val> Optional<V> {
    pub fn new<M, P>(matcher: M, put: P) -> Self
    where
        M: Fn(&V) -> Result<Either<V, V>> + Send + Sync + 'static,
        P: Fn(&V, &V) -> Result<V> + Send + Sync + 'static,
    {
        Optional::from_fns(match_fn(matcher), put_fn(put))
    }

    /// `put` is only consulted on a hit; a miss returns `match`'s residual.
    pub fn from_fns(matcher: MatchFn<V>, put: PutFn<V>) -> Self {
        let m = matcher.clone();
        let put = put_fn(move |b: &V, s: &V| match m(s)? {
            Either::Left(t) => Ok(t),
            Either::Right(_) => put(b, s),
        });
        Optional { matcher, put }
    }

    pub fn matching(&self, s: &V) -> Result<Either<V, V>> {
        (self.matcher)(s)
    }

    pub fn put(&self, b: &V, s: &V) -> Result<V> {
        (self.put)(b, s)
    }

    pub fn match_fn(&self) -> &MatchFn<V> {
        &self.matcher
    }

    /// A lens always hits.
    pub fn from_lens(lens: &Lens<V>) -> Self {
        let get = lens.get_fn().clone();
        Optional {
            matcher: match_fn(move |s: &V| Ok(Either::Right(get(s)?))),
            put: lens.put_fn().clone(),
        }
    }

    /// A prism's put rebuilds on a hit and returns the residual on a miss.
    pub fn from_prism(prism: &Prism<V>) -> Self {
        let (matcher, build) = (prism.match_fn().clone(), prism.build_fn().clone());
        let m = matcher.clone();
        Optional {
            matcher,
            put: put_fn(move |b: &V, s: &V| match m(s)? {
                Either::Left(t) => Ok(t),
                Either::Right(_) => build(b),
            }),
        }
    }
}

impl<V: Val> OpticFamily for Optional<V> {
    type Value = V;

    fn inj(fwd: Func<V>, bwd: Func<V>) -> Self {
        Optional {
            matcher: match_fn(move |s: &V| Ok(Either::Right(fwd(s)?))),
            put: put_fn(move |b: &V, _: &V| bwd(b)),
        }
    }

    fn compose(&self, inner: &Self) -> Self {
        let (m1, p1) = (self.matcher.clone(), self.put.clone());
        let (m2, p2) = (inner.matcher.clone(), inner.put.clone());
        let matcher = {
            let (m1, p1, m2) = (m1.clone(), p1.clone(), m2.clone());
            match_fn(move |s: &V| match m1(s)? {
                Either::Left(t) => Ok(Either::Left(t)),
                Either::Right(a) => match m2(&a)? {
                    Either::Left(b) => Ok(Either::Left(p1(&b, s)?)),
                    Either::Right(x) => Ok(Either::Right(x)),
                },
            })
        };
        let put = put_fn(move |y: &V, s: &V| match m1(s)? {
            Either::Left(t) => Ok(t),
            Either::Right(a) => p1(&p2(y, &a)?, s),
        });
        Optional { matcher, put }
    }

    fn map_optic(&self, h: Func<V>) -> Func<V> {
        let (matcher, put) = (self.matcher.clone(), self.put.clone());
        func(move |s: &V| match matcher(s)? {
            Either::Left(t) => Ok(t),
            Either::Right(a) => put(&h(&a)?, s),
        })
    }
}

impl<V> fmt::Debug for Optional<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Optional { .. }")
    }
}
