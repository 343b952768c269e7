use std::fmt;

use super::OpticFamily;
use crate::error::Result;
use crate::value::{func, put_fn, Func, PutFn, Val, Value};

/// Product-like access: `get: s -> a`, `put: b -> s -> t`.
#[derive(Clone)]
pub struct Lens<V = Value> {
    get: Func<V>,
    put: PutFn<V>,
}

impl<V: Val> Lens<V> {
    pub fn new<G, P>(get: G, put: P) -> Self
    where
        G: Fn(&V) -> Result<V> + Send + Sync + 'static,
        P: Fn(&V, &V) -> Result<V> + Send + Sync + 'static,
    {
        Lens {
            get: func(get),
            put: put_fn(put),
        }
    }

    pub fn from_fns(get: Func<V>, put: PutFn<V>) -> Self {
        Lens { get, put }
    }

    pub fn get(&self, s: &V) -> Result<V> {
        (self.get)(s)
    }

    /// Replaces the focus of `s` with `b`.
    pub fn put(&self, b: &V, s: &V) -> Result<V> {
        (self.put)(b, s)
    }

    pub fn get_fn(&self) -> &Func<V> {
        &self.get
    }

    pub fn put_fn(&self) -> &PutFn<V> {
        &self.put
    }
}

impl<V: Val> OpticFamily for Lens<V> {
    type Value = V;

    /// The injected lens discards the old whole: `put b _ = g b`.
    fn inj(fwd: Func<V>, bwd: Func<V>) -> Self {
        Lens {
            get: fwd,
            put: put_fn(move |b: &V, _: &V| bwd(b)),
        }
    }

    fn compose(&self, inner: &Self) -> Self {
        let (g1, p1) = (self.get.clone(), self.put.clone());
        let (g2, p2) = (inner.get.clone(), inner.put.clone());
        let get = {
            let g1 = g1.clone();
            func(move |s: &V| g2(&g1(s)?))
        };
        let put = put_fn(move |y: &V, s: &V| p1(&p2(y, &g1(s)?)?, s));
        Lens { get, put }
    }

    fn map_optic(&self, h: Func<V>) -> Func<V> {
        let (get, put) = (self.get.clone(), self.put.clone());
        func(move |s: &V| put(&h(&get(s)?)?, s))
    }
}

impl<V> fmt::Debug for Lens<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Lens { .. }")
    }
}
