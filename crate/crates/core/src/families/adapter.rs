use std::fmt;

use super::OpticFamily;
use crate::error::Result;
use crate::value::{compose_fn, func, Func, Val, Value};

/// A pure conversion pair `fwd: s -> a`, `bwd: b -> t`.
#[derive(Clone)]
pub struct Adapter<V = Value> {
    fwd: Func<V>,
    bwd: Func<V>,
}

impl<V: Val> Adapter<V> {
    pub fn new<F, B>(fwd: F, bwd: B) -> Self
    where
        F: Fn(&V) -> Result<V> + Send + Sync + 'static,
        B: Fn(&V) -> Result<V> + Send + Sync + 'static,
    {
        Adapter {
            fwd: func(fwd),
            bwd: func(bwd),
        }
    }

    pub fn from_fns(fwd: Func<V>, bwd: Func<V>) -> Self {
        Adapter { fwd, bwd }
    }

    pub fn fwd(&self, s: &V) -> Result<V> {
        (self.fwd)(s)
    }

    pub fn bwd(&self, b: &V) -> Result<V> {
        (self.bwd)(b)
    }

    pub fn fwd_fn(&self) -> &Func<V> {
        &self.fwd
    }

    pub fn bwd_fn(&self) -> &Func<V> {
        &self.bwd
    }
}

impl<V: Val> OpticFamily for Adapter<V> {
    type Value = V;

    fn inj(fwd: Func<V>, bwd: Func<V>) -> Self {
        Adapter { fwd, bwd }
    }

    fn compose(&self, inner: &Self) -> Self {
        Adapter {
            fwd: compose_fn(&inner.fwd, &self.fwd),
            bwd: compose_fn(&self.bwd, &inner.bwd),
        }
    }

    fn map_optic(&self, h: Func<V>) -> Func<V> {
        compose_fn(&self.bwd, &compose_fn(&h, &self.fwd))
    }
}

impl<V> fmt::Debug for Adapter<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Adapter { .. }")
    }
}
