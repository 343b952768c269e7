use std::fmt;

use super::OpticFamily;
use crate::value::{compose_fn, over_fn, Func, OverFn, Val, Value};

/// Map-only access: `over: (a -> b) -> (s -> t)`.
#[derive(Clone)]
pub struct Setter<V = Value> {
    over: OverFn<V>,
}

impl<V: Val> Setter<V> {
    pub fn new<F>(over: F) -> Self
    where
        F: Fn(Func<V>) -> Func<V> + Send + Sync + 'static,
    {
        Setter { over: over_fn(over) }
    }

    pub fn from_fn(over: OverFn<V>) -> Self {
        Setter { over }
    }

    pub fn over(&self, h: Func<V>) -> Func<V> {
        (self.over)(h)
    }
}

impl<V: Val> OpticFamily for Setter<V> {
    type Value = V;

    fn inj(fwd: Func<V>, bwd: Func<V>) -> Self {
        Setter::new(move |h| compose_fn(&bwd, &compose_fn(&h, &fwd)))
    }

    fn compose(&self, inner: &Self) -> Self {
        let (o1, o2) = (self.over.clone(), inner.over.clone());
        Setter::new(move |h| o1(o2(h)))
    }

    fn map_optic(&self, h: Func<V>) -> Func<V> {
        (self.over)(h)
    }
}

impl<V> fmt::Debug for Setter<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Setter { .. }")
    }
}
