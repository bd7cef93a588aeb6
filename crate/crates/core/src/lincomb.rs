//! Finite formal sums over an ordered basis with cyclotomic coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::sync::Arc;

use crate::scalars::{Cyc, CycField};

/// A finite linear combination `Σ c_k · k`; zero coefficients are never stored.
#[derive(Clone)]
pub struct LinComb<K: Ord> {
    field: Arc<CycField>,
    terms: BTreeMap<K, Cyc>,
}

impl<K: Ord> PartialEq for LinComb<K> {
    fn eq(&self, other: &Self) -> bool {
        self.field.p() == other.field.p() && self.terms == other.terms
    }
}

impl<K: Ord> Eq for LinComb<K> {}

impl<K: Ord + std::fmt::Debug> std::fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero(field: &Arc<CycField>) -> Self {
        LinComb { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn single(field: &Arc<CycField>, key: K, coeff: Cyc) -> Self {
        let mut out = Self::zero(field);
        out.add_term(key, &coeff);
        out
    }

    pub fn basis(field: &Arc<CycField>, key: K) -> Self {
        Self::single(field, key, Cyc::one(field))
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Cyc {
        self.terms.get(key).cloned().unwrap_or_else(|| Cyc::zero(&self.field))
    }

    pub fn add_term(&mut self, key: K, coeff: &Cyc) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, scale: &Cyc) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), &(c * scale));
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), &-c);
        }
    }

    pub fn scaled(&self, scale: &Cyc) -> Self {
        let mut out = Self::zero(&self.field);
        out.add_scaled(self, scale);
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&Cyc::from_int(&self.field, -1))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Cyc)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone, F>(&self, mut f: F) -> LinComb<L>
    where
        F: FnMut(&K) -> LinComb<L>,
    {
        let mut out = LinComb::zero(&self.field);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }
}
