use std::fmt;

use super::{Lens, OpticFamily};
use crate::error::Result;
use crate::value::{compose_fn, func, put_fn, Func, PutFn, Val, Value};

/// Achromatic lens: a lens that can also `create` a whole from a focus alone.
///
/// `map_optic` is the lens one, `put (h (get s)) s`. An alternative action that
/// routes through `create` would change the family's structure and is not
/// provided.
#[derive(Clone)]
pub struct AchLens<V = Value> {
    get: Func<V>,
    put: PutFn<V>,
    create: Func<V>,
}

impl<V: Val> AchLens<V> {
    pub fn new<G, P, C>(get: G, put: P, create: C) -> Self
    where
        G: Fn(&V) -> Result<V> + Send + Sync + 'static,
        P: Fn(&V, &V) -> Result<V> + Send + Sync + 'static,
        C: Fn(&V) -> Result<V> + Send + Sync + 'static,
    {
        AchLens {
            get: func(get),
            put: put_fn(put),
            create: func(create),
        }
    }

    pub fn from_fns(get: Func<V>, put: PutFn<V>, create: Func<V>) -> Self {
        AchLens { get, put, create }
    }

    pub fn get(&self, s: &V) -> Result<V> {
        (self.get)(s)
    }

    pub fn put(&self, b: &V, s: &V) -> Result<V> {
        (self.put)(b, s)
    }

    pub fn create(&self, b: &V) -> Result<V> {
        (self.create)(b)
    }

    pub fn create_fn(&self) -> &Func<V> {
        &self.create
    }

    /// Forgets `create`.
    pub fn to_lens(&self) -> Lens<V> {
        Lens::from_fns(self.get.clone(), self.put.clone())
    }
}

impl<V: Val> OpticFamily for AchLens<V> {
    type Value = V;

    fn inj(fwd: Func<V>, bwd: Func<V>) -> Self {
        let lens = Lens::inj(fwd, bwd.clone());
        AchLens {
            get: lens.get_fn().clone(),
            put: lens.put_fn().clone(),
            create: bwd,
        }
    }

    fn compose(&self, inner: &Self) -> Self {
        let lens = self.to_lens().compose(&inner.to_lens());
        AchLens {
            get: lens.get_fn().clone(),
            put: lens.put_fn().clone(),
            create: compose_fn(&self.create, &inner.create),
        }
    }

    fn map_optic(&self, h: Func<V>) -> Func<V> {
        self.to_lens().map_optic(h)
    }
}

impl<V> fmt::Debug for AchLens<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("AchLens { .. }")
    }
}
