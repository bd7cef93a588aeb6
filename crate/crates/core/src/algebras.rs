//! The finite-dimensional algebras: A = k[x]/(x^p), kG with G = ⟨g | g^p⟩,
//! and the Taft algebra T_p = A ⋊ kG, plus tensor powers of them.
//!
//! Monomials are kept in the normal form x^i g^k.  In T_p the commutation
//! rule is g x = ω x g, so (x^a g^b)(x^c g^d) = ω^{bc} x^{a+c} g^{b+d}.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::{Lazy, OnceCell};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalars::{Cyc, CycField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    TruncPoly,
    GroupAlg,
    Taft,
}

/// A basis monomial x^x g^g.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub x: usize,
    pub g: usize,
}

impl Mono {
    pub const ONE: Mono = Mono { x: 0, g: 0 };

    pub fn new(x: usize, g: usize) -> Mono {
        Mono { x, g }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.g) {
            (0, 0) => write!(f, "1"),
            (x, 0) => write!(f, "x^{x}"),
            (0, g) => write!(f, "g^{g}"),
            (x, g) => write!(f, "x^{x}g^{g}"),
        }
    }
}

#[derive(Debug)]
struct AlgebraData {
    kind: AlgebraKind,
    p: usize,
    field: Arc<CycField>,
    omega: Vec<Cyc>,
    hopf: OnceCell<HopfTables>,
}

/// Handle to one of the algebras; cheap to clone.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(p={})", self.0.kind, self.0.p)
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.0.kind == other.0.kind && self.0.p == other.0.p
    }
}

impl Eq for Algebra {}

static ALGEBRAS: Lazy<Mutex<HashMap<(AlgebraKind, usize), Algebra>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl Algebra {
    pub fn new(kind: AlgebraKind, p: usize) -> Result<Algebra> {
        if p <= 2 {
            return Err(Error::Domain(format!("p must exceed 2, got {p}")));
        }
        let mut cache = ALGEBRAS.lock().expect("algebra cache poisoned");
        if let Some(a) = cache.get(&(kind, p)) {
            return Ok(a.clone());
        }
        let field = CycField::get(p as u32)?;
        let omega = (0..p as i64).map(|e| Cyc::omega_power(&field, e)).collect();
        let alg = Algebra(Arc::new(AlgebraData { kind, p, field, omega, hopf: OnceCell::new() }));
        cache.insert((kind, p), alg.clone());
        Ok(alg)
    }

    pub fn truncated(p: usize) -> Result<Algebra> {
        Algebra::new(AlgebraKind::TruncPoly, p)
    }

    pub fn group(p: usize) -> Result<Algebra> {
        Algebra::new(AlgebraKind::GroupAlg, p)
    }

    pub fn taft(p: usize) -> Result<Algebra> {
        Algebra::new(AlgebraKind::Taft, p)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.0.kind
    }

    pub fn p(&self) -> usize {
        self.0.p
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.0.field
    }

    pub fn is_taft(&self) -> bool {
        self.0.kind == AlgebraKind::Taft
    }

    /// ω^e for any integer exponent.
    pub fn omega(&self, e: i64) -> &Cyc {
        &self.0.omega[e.rem_euclid(self.0.p as i64) as usize]
    }

    pub fn zero_scalar(&self) -> Cyc {
        Cyc::zero(self.field())
    }

    pub fn scalar(&self, n: i64) -> Cyc {
        Cyc::from_int(self.field(), n)
    }

    pub fn dim(&self) -> usize {
        match self.0.kind {
            AlgebraKind::Taft => self.0.p * self.0.p,
            _ => self.0.p,
        }
    }

    pub fn monomials(&self) -> Vec<Mono> {
        let p = self.0.p;
        match self.0.kind {
            AlgebraKind::TruncPoly => (0..p).map(|i| Mono::new(i, 0)).collect(),
            AlgebraKind::GroupAlg => (0..p).map(|k| Mono::new(0, k)).collect(),
            AlgebraKind::Taft => {
                (0..p).flat_map(|i| (0..p).map(move |k| Mono::new(i, k))).collect()
            }
        }
    }

    pub fn index(&self, m: Mono) -> usize {
        match self.0.kind {
            AlgebraKind::TruncPoly => m.x,
            AlgebraKind::GroupAlg => m.g,
            AlgebraKind::Taft => m.x * self.0.p + m.g,
        }
    }

    pub fn contains(&self, m: Mono) -> bool {
        let p = self.0.p;
        match self.0.kind {
            AlgebraKind::TruncPoly => m.x < p && m.g == 0,
            AlgebraKind::GroupAlg => m.x == 0 && m.g < p,
            AlgebraKind::Taft => m.x < p && m.g < p,
        }
    }

    /// Product of two monomials: `None` when it vanishes, otherwise the
    /// monomial and the exponent e of the scalar ω^e.
    #[inline]
    pub fn mono_mul(&self, a: Mono, b: Mono) -> Option<(Mono, usize)> {
        let p = self.0.p;
        let x = a.x + b.x;
        if x >= p {
            return None;
        }
        let g = (a.g + b.g) % p;
        Some((Mono::new(x, g), (a.g * b.x) % p))
    }

    pub fn hopf(&self) -> Result<&HopfTables> {
        if !self.is_taft() {
            return Err(Error::Domain(format!("{self:?} is not a Taft algebra")));
        }
        Ok(self.0.hopf.get_or_init(|| HopfTables::build(self)))
    }
}

/// An element of one of the algebras.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem {
    alg: Algebra,
    terms: LinComb<Mono>,
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("({c})·{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl AlgElem {
    pub fn zero(alg: &Algebra) -> AlgElem {
        AlgElem { alg: alg.clone(), terms: LinComb::zero(alg.field()) }
    }

    pub fn one(alg: &Algebra) -> AlgElem {
        AlgElem::mono(alg, Mono::ONE)
    }

    pub fn mono(alg: &Algebra, m: Mono) -> AlgElem {
        AlgElem::term(alg, m, Cyc::one(alg.field()))
    }

    pub fn term(alg: &Algebra, m: Mono, c: Cyc) -> AlgElem {
        debug_assert!(alg.contains(m), "monomial {m} outside {alg:?}");
        AlgElem { alg: alg.clone(), terms: LinComb::single(alg.field(), m, c) }
    }

    pub fn scalar(alg: &Algebra, c: Cyc) -> AlgElem {
        AlgElem::term(alg, Mono::ONE, c)
    }

    pub fn from_terms(alg: &Algebra, terms: LinComb<Mono>) -> AlgElem {
        AlgElem { alg: alg.clone(), terms }
    }

    /// Shorthand for x^i g^k in T_p (or x^i in A, g^k in kG).
    pub fn xg(alg: &Algebra, i: usize, k: usize) -> AlgElem {
        let m = Mono::new(i, k);
        if m.x >= alg.p() {
            return AlgElem::zero(alg);
        }
        AlgElem::mono(alg, Mono::new(i, k % alg.p()))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn terms(&self) -> &LinComb<Mono> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, m: Mono) -> Cyc {
        self.terms.coeff(&m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &Cyc)> {
        self.terms.iter()
    }

    fn check(&self, other: &AlgElem) -> Result<()> {
        if self.alg != other.alg {
            return Err(Error::Domain(format!(
                "algebra mismatch: {:?} vs {:?}",
                self.alg, other.alg
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    pub fn try_add(&self, other: &AlgElem) -> Result<AlgElem> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        let mut t = self.terms.clone();
        t.add_assign(&other.terms);
        AlgElem { alg: self.alg.clone(), terms: t }
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        let mut t = self.terms.clone();
        t.sub_assign(&other.terms);
        AlgElem { alg: self.alg.clone(), terms: t }
    }

    pub fn add_assign(&mut self, other: &AlgElem) {
        self.terms.add_assign(&other.terms);
    }

    pub fn add_scaled(&mut self, other: &AlgElem, c: &Cyc) {
        self.terms.add_scaled(&other.terms, c);
    }

    pub fn scale(&self, c: &Cyc) -> AlgElem {
        AlgElem { alg: self.alg.clone(), terms: self.terms.scaled(c) }
    }

    pub fn neg(&self) -> AlgElem {
        AlgElem { alg: self.alg.clone(), terms: self.terms.neg() }
    }

    /// Product in the algebra; panics on mismatched algebras (see `try_mul`).
    pub fn mul(&self, other: &AlgElem) -> AlgElem {
        assert!(self.alg == other.alg, "algebra mismatch");
        let mut out = LinComb::zero(self.alg.field());
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                if let Some((m, e)) = self.alg.mono_mul(*a, *b) {
                    let c = ca * cb;
                    out.add_term(m, &if e == 0 { c } else { &c * self.alg.omega(e as i64) });
                }
            }
        }
        AlgElem { alg: self.alg.clone(), terms: out }
    }

    pub fn mul_mono_left(&self, m: Mono) -> AlgElem {
        let mut out = LinComb::zero(self.alg.field());
        for (b, cb) in self.terms.iter() {
            if let Some((r, e)) = self.alg.mono_mul(m, *b) {
                out.add_term(r, &(cb * self.alg.omega(e as i64)));
            }
        }
        AlgElem { alg: self.alg.clone(), terms: out }
    }

    pub fn mul_mono_right(&self, m: Mono) -> AlgElem {
        let mut out = LinComb::zero(self.alg.field());
        for (a, ca) in self.terms.iter() {
            if let Some((r, e)) = self.alg.mono_mul(*a, m) {
                out.add_term(r, &(ca * self.alg.omega(e as i64)));
            }
        }
        AlgElem { alg: self.alg.clone(), terms: out }
    }

    pub fn pow(&self, e: usize) -> AlgElem {
        let mut acc = AlgElem::one(&self.alg);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// ε, extended linearly: ε(x^i g^k) = δ_{i,0}.
    pub fn counit(&self) -> Result<Cyc> {
        let hopf = self.alg.hopf()?;
        let mut s = self.alg.zero_scalar();
        for (m, c) in self.terms.iter() {
            if hopf.counit(*m) {
                s += c;
            }
        }
        Ok(s)
    }

    pub fn comultiply(&self) -> Result<TensorElem> {
        let hopf = self.alg.hopf()?;
        let mut out = TensorElem::zero(&self.alg, 2, false);
        for (m, c) in self.terms.iter() {
            for (k, d) in &hopf.delta[self.alg.index(*m)] {
                out.terms.add_term(k.clone(), &(c * d));
            }
        }
        Ok(out)
    }

    pub fn antipode(&self) -> Result<AlgElem> {
        let hopf = self.alg.hopf()?;
        let mut out = AlgElem::zero(&self.alg);
        for (m, c) in self.terms.iter() {
            out.add_scaled(&hopf.antipode[self.alg.index(*m)], c);
        }
        Ok(out)
    }
}

/// An element of an n-fold tensor power of one algebra.  With `enveloping`
/// set (arity 2 only) the second factor multiplies in the opposite algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElem {
    alg: Algebra,
    arity: usize,
    enveloping: bool,
    terms: LinComb<Vec<Mono>>,
}

impl TensorElem {
    pub fn zero(alg: &Algebra, arity: usize, enveloping: bool) -> TensorElem {
        TensorElem { alg: alg.clone(), arity, enveloping, terms: LinComb::zero(alg.field()) }
    }

    pub fn pure(alg: &Algebra, monos: Vec<Mono>, enveloping: bool) -> TensorElem {
        let arity = monos.len();
        TensorElem {
            alg: alg.clone(),
            arity,
            enveloping,
            terms: LinComb::basis(alg.field(), monos),
        }
    }

    /// a ⊗ b from two algebra elements.
    pub fn from_pair(a: &AlgElem, b: &AlgElem, enveloping: bool) -> TensorElem {
        let mut out = TensorElem::zero(&a.alg, 2, enveloping);
        for (ma, ca) in a.iter() {
            for (mb, cb) in b.iter() {
                out.terms.add_term(vec![*ma, *mb], &(ca * cb));
            }
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &LinComb<Vec<Mono>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add_term(&mut self, key: Vec<Mono>, c: &Cyc) {
        debug_assert_eq!(key.len(), self.arity);
        self.terms.add_term(key, c);
    }

    pub fn try_mul(&self, other: &TensorElem) -> Result<TensorElem> {
        if self.alg != other.alg || self.arity != other.arity || self.enveloping != other.enveloping
        {
            return Err(Error::Domain("tensor algebra mismatch".into()));
        }
        Ok(self.mul(other))
    }

    /// Componentwise product (opposite order in slot 2 for the enveloping algebra).
    pub fn mul(&self, other: &TensorElem) -> TensorElem {
        let mut out = TensorElem::zero(&self.alg, self.arity, self.enveloping);
        for (ka, ca) in self.terms.iter() {
            'pairs: for (kb, cb) in other.terms.iter() {
                let mut key = Vec::with_capacity(self.arity);
                let mut e = 0usize;
                for slot in 0..self.arity {
                    let (l, r) = if self.enveloping && slot == 1 {
                        (kb[slot], ka[slot])
                    } else {
                        (ka[slot], kb[slot])
                    };
                    match self.alg.mono_mul(l, r) {
                        Some((m, w)) => {
                            key.push(m);
                            e += w;
                        }
                        None => continue 'pairs,
                    }
                }
                out.terms.add_term(key, &(&(ca * cb) * self.alg.omega(e as i64)));
            }
        }
        out
    }

    /// Applies a linear map to slot `slot`, splicing the image tensor in place.
    pub fn apply_at<F>(&self, slot: usize, f: F) -> TensorElem
    where
        F: Fn(Mono) -> TensorElem,
    {
        let mut out: Option<TensorElem> = None;
        for (k, c) in self.terms.iter() {
            let img = f(k[slot]);
            let target = out.get_or_insert_with(|| {
                TensorElem::zero(&self.alg, self.arity - 1 + img.arity, false)
            });
            for (ik, ic) in img.terms.iter() {
                let mut key = k[..slot].to_vec();
                key.extend_from_slice(ik);
                key.extend_from_slice(&k[slot + 1..]);
                target.terms.add_term(key, &(c * ic));
            }
        }
        out.unwrap_or_else(|| TensorElem::zero(&self.alg, self.arity, false))
    }

    /// Multiplies all slots together (the iterated multiplication map).
    pub fn multiply_out(&self) -> AlgElem {
        let mut out = AlgElem::zero(&self.alg);
        for (k, c) in self.terms.iter() {
            let mut acc = AlgElem::scalar(&self.alg, c.clone());
            for m in k {
                acc = acc.mul_mono_right(*m);
            }
            out.add_assign(&acc);
        }
        out
    }
}

/// Precomputed Hopf structure of T_p on the monomial basis.
#[derive(Debug)]
pub struct HopfTables {
    /// Δ(m) as a list of (m₁ ⊗ m₂) keys with coefficients.
    pub delta: Vec<Vec<(Vec<Mono>, Cyc)>>,
    /// (id ⊗ Δ)Δ(m).
    pub delta2: Vec<Vec<(Vec<Mono>, Cyc)>>,
    pub antipode: Vec<AlgElem>,
}

impl HopfTables {
    fn build(alg: &Algebra) -> HopfTables {
        let one = AlgElem::one(alg);
        let x = AlgElem::xg(alg, 1, 0);
        let g = AlgElem::xg(alg, 0, 1);
        let dx = {
            let mut t = TensorElem::from_pair(&one, &x, false);
            t.terms.add_assign(&TensorElem::from_pair(&x, &g, false).terms);
            t
        };
        let dg = TensorElem::from_pair(&g, &g, false);
        let sx = x.mul(&AlgElem::xg(alg, 0, alg.p() - 1)).neg();
        let sg = AlgElem::xg(alg, 0, alg.p() - 1);
        let mut delta = Vec::new();
        let mut antipode = Vec::new();
        for m in alg.monomials() {
            let mut t = TensorElem::pure(alg, vec![Mono::ONE, Mono::ONE], false);
            for _ in 0..m.x {
                t = t.mul(&dx);
            }
            for _ in 0..m.g {
                t = t.mul(&dg);
            }
            delta.push(t.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>());
            // S is an anti-homomorphism: S(x^i g^k) = S(g)^k S(x)^i
            antipode.push(sg.pow(m.g).mul(&sx.pow(m.x)));
        }
        let mut delta2 = Vec::new();
        for m in alg.monomials() {
            let mut t = TensorElem::zero(alg, 3, false);
            for (k, c) in &delta[alg.index(m)] {
                for (k2, c2) in &delta[alg.index(k[1])] {
                    t.terms.add_term(vec![k[0], k2[0], k2[1]], &(c * c2));
                }
            }
            delta2.push(t.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>());
        }
        HopfTables { delta, delta2, antipode }
    }

    pub fn counit(&self, m: Mono) -> bool {
        m.x == 0
    }
}

/// Which Hopf axioms hold on every basis monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HopfAxioms {
    /// (ε ⊗ id)Δ = id = (id ⊗ ε)Δ.
    pub counit: bool,
    /// (Δ ⊗ id)Δ = (id ⊗ Δ)Δ, and the cached Δ^{(2)} agrees.
    pub coassociativity: bool,
    /// Σ S(a₁)a₂ = ε(a)1 = Σ a₁S(a₂).
    pub antipode: bool,
}

pub fn hopf_axioms(alg: &Algebra) -> Result<HopfAxioms> {
    let hopf = alg.hopf()?;
    let tensor = |table: &[(Vec<Mono>, Cyc)], arity: usize| {
        let mut t = TensorElem::zero(alg, arity, false);
        for (k, c) in table {
            t.add_term(k.clone(), c);
        }
        t
    };
    let mut out = HopfAxioms { counit: true, coassociativity: true, antipode: true };
    for m in alg.monomials() {
        let a = AlgElem::mono(alg, m);
        let d = tensor(&hopf.delta[alg.index(m)], 2);
        let mut left = AlgElem::zero(alg);
        let mut right = AlgElem::zero(alg);
        for (k, c) in d.terms().iter() {
            if hopf.counit(k[0]) {
                left.add_assign(&AlgElem::term(alg, k[1], c.clone()));
            }
            if hopf.counit(k[1]) {
                right.add_assign(&AlgElem::term(alg, k[0], c.clone()));
            }
        }
        out.counit &= left == a && right == a;
        let ld = d.apply_at(0, |x| tensor(&hopf.delta[alg.index(x)], 2));
        let rd = d.apply_at(1, |x| tensor(&hopf.delta[alg.index(x)], 2));
        out.coassociativity &= ld == rd && rd == tensor(&hopf.delta2[alg.index(m)], 3);
        let eps = AlgElem::scalar(alg, a.counit()?);
        let mut s1 = AlgElem::zero(alg);
        let mut s2 = AlgElem::zero(alg);
        for (k, c) in d.terms().iter() {
            let a1 = AlgElem::mono(alg, k[0]);
            let a2 = AlgElem::mono(alg, k[1]);
            s1.add_scaled(&a1.antipode()?.mul(&a2), c);
            s2.add_scaled(&a1.mul(&a2.antipode()?), c);
        }
        out.antipode &= s1 == eps && s2 == eps;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taft_product_rule() {
        let t = Algebra::taft(3).unwrap();
        let g = AlgElem::xg(&t, 0, 1);
        let x = AlgElem::xg(&t, 1, 0);
        assert_eq!(g.mul(&x), AlgElem::term(&t, Mono::new(1, 1), t.omega(1).clone()));
        let a = AlgElem::xg(&t, 1, 2);
        let b = AlgElem::xg(&t, 1, 1);
        assert_eq!(a.mul(&b), AlgElem::term(&t, Mono::new(2, 0), t.omega(2).clone()));
        let a3 = Algebra::truncated(3).unwrap();
        let x2 = AlgElem::xg(&a3, 2, 0);
        assert!(x2.mul(&x2).is_zero());
    }

    #[test]
    fn taft_relations() {
        for p in [3, 5, 7] {
            let t = Algebra::taft(p).unwrap();
            let g = AlgElem::xg(&t, 0, 1);
            let x = AlgElem::xg(&t, 1, 0);
            assert_eq!(g.pow(p), AlgElem::one(&t));
            assert!(x.pow(p).is_zero());
            assert_eq!(g.mul(&x), x.mul(&g).scale(t.omega(1)));
        }
    }

    #[test]
    fn algebra_mismatch_is_domain_error() {
        let a = AlgElem::one(&Algebra::taft(3).unwrap());
        let b = AlgElem::one(&Algebra::truncated(3).unwrap());
        assert!(matches!(a.try_mul(&b), Err(Error::Domain(_))));
        assert!(AlgElem::one(&Algebra::truncated(3).unwrap()).counit().is_err());
    }

    #[test]
    fn counit_values() {
        let t = Algebra::taft(3).unwrap();
        assert!(AlgElem::xg(&t, 0, 2).counit().unwrap().is_one());
        assert!(AlgElem::xg(&t, 1, 1).counit().unwrap().is_zero());
        let e = AlgElem::scalar(&t, t.scalar(3)).add(&AlgElem::xg(&t, 1, 0).scale(&t.scalar(2)));
        assert_eq!(e.counit().unwrap(), t.scalar(3));
    }

    #[test]
    fn comultiply_examples() {
        let t = Algebra::taft(3).unwrap();
        let dx = AlgElem::xg(&t, 1, 0).comultiply().unwrap();
        let mut want = TensorElem::zero(&t, 2, false);
        want.add_term(vec![Mono::ONE, Mono::new(1, 0)], &t.scalar(1));
        want.add_term(vec![Mono::new(1, 0), Mono::new(0, 1)], &t.scalar(1));
        assert_eq!(dx, want);

        let dg2 = AlgElem::xg(&t, 0, 2).comultiply().unwrap();
        assert_eq!(dg2, TensorElem::pure(&t, vec![Mono::new(0, 2), Mono::new(0, 2)], false));

        // (1⊗x + x⊗g)^2 = 1⊗x^2 + (1+ω) x⊗xg + x^2⊗g^2
        let dx2 = AlgElem::xg(&t, 2, 0).comultiply().unwrap();
        let mut want = TensorElem::zero(&t, 2, false);
        want.add_term(vec![Mono::ONE, Mono::new(2, 0)], &t.scalar(1));
        want.add_term(vec![Mono::new(1, 0), Mono::new(1, 1)], &(&t.scalar(1) + t.omega(1)));
        want.add_term(vec![Mono::new(2, 0), Mono::new(0, 2)], &t.scalar(1));
        assert_eq!(dx2, want);
    }

    #[test]
    fn antipode_examples() {
        let t = Algebra::taft(3).unwrap();
        assert_eq!(AlgElem::xg(&t, 0, 1).antipode().unwrap(), AlgElem::xg(&t, 0, 2));
        assert_eq!(AlgElem::xg(&t, 1, 0).antipode().unwrap(), AlgElem::xg(&t, 1, 2).neg());
        assert_eq!(AlgElem::one(&t).antipode().unwrap(), AlgElem::one(&t));
    }

    #[test]
    fn enveloping_product_reverses_second_slot() {
        let t = Algebra::taft(3).unwrap();
        let a = TensorElem::pure(&t, vec![Mono::ONE, Mono::new(0, 1)], true);
        let b = TensorElem::pure(&t, vec![Mono::ONE, Mono::new(1, 0)], true);
        // second slot: x · g = x g (opposite of g · x = ω x g)
        let want = TensorElem::pure(&t, vec![Mono::ONE, Mono::new(1, 1)], true);
        assert_eq!(a.mul(&b), want);
    }

    #[test]
    fn hopf_axioms_p3_p5() {
        for p in [3, 5] {
            let h = hopf_axioms(&Algebra::taft(p).unwrap()).unwrap();
            assert!(h.counit && h.coassociativity && h.antipode, "p = {p}: {h:?}");
        }
    }
}
