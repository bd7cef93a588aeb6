//! Hopf cohomology H^*(T_p, k) and its bracket.
//!
//! P_• is the bar resolution of k over T_p, with P_n = T_p^{⊗(n+1)}, and
//! X_• = T_p^e ⊗_{T_p} P_•.  The maps θ : X → B(T_p) and ψ : B(T_p) → X are
//! mutually inverse.  Cochains in Hom_{T_p}(P_n, M) are stored by their
//! values on 1 ⊗ c^1 ⊗ … ⊗ c^n, and so are the T_p^e-linear cochains on X_n
//! (values on (1 ⊗ 1) ⊗ (1 ⊗ c^1 ⊗ … ⊗ c^n)).

use std::collections::BTreeMap;

use crate::algebras::{AlgElem, Algebra, Mono};
use crate::error::{Error, Result};
use crate::linalg::{in_column_span, sparse_rank, Matrix, SparseRow};
use crate::lincomb::LinComb;
use crate::oracle::{bar_differential, circle_bar, decode, encode, tuple_count, BarChain, BarCochain};
use crate::scalars::{Cyc, Rational};

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn counit(m: Mono) -> bool {
    m.x == 0
}

fn product(alg: &Algebra, monos: &[Mono]) -> AlgElem {
    monos.iter().fold(AlgElem::one(alg), |acc, m| acc.mul_mono_right(*m))
}

/// Expands Δ (legs = 2) or Δ^{(2)} = (id ⊗ Δ)Δ (legs = 3) on every slot of a
/// tuple: each term is (parts, coefficient) with parts[leg][slot].
fn sweedler(alg: &Algebra, tuple: &[Mono], legs: usize) -> Result<Vec<(Vec<Vec<Mono>>, Cyc)>> {
    let hopf = alg.hopf()?;
    let table = if legs == 2 { &hopf.delta } else { &hopf.delta2 };
    let mut acc = vec![(vec![Vec::with_capacity(tuple.len()); legs], alg.scalar(1))];
    for m in tuple {
        let entries = &table[alg.index(*m)];
        let mut next = Vec::with_capacity(acc.len() * entries.len());
        for (parts, c) in &acc {
            for (k, d) in entries {
                let mut q = parts.clone();
                for (leg, part) in q.iter_mut().enumerate() {
                    part.push(k[leg]);
                }
                next.push((q, c * d));
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Left adjoint action c · v = Σ c_1 v S(c_2).
pub fn adjoint_action(c: Mono, v: &AlgElem) -> Result<AlgElem> {
    let alg = v.algebra();
    let hopf = alg.hopf()?;
    let mut out = AlgElem::zero(alg);
    for (k, d) in &hopf.delta[alg.index(c)] {
        let t = v.mul_mono_left(k[0]).mul(&hopf.antipode[alg.index(k[1])]);
        out.add_scaled(&t, d);
    }
    Ok(out)
}

// ---- cochains ---------------------------------------------------------------

/// A cochain on P_n (or X_n) stored on basis tuples c^1 ⊗ … ⊗ c^n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PCochain<V> {
    alg: Algebra,
    deg: usize,
    table: Vec<V>,
}

/// f ∈ Hom_{T_p}(P_n, k).
pub type TrivialCochain = PCochain<Cyc>;
/// f̃ ∈ Hom_{T_p}(P_n, T_p^{ad}).
pub type AdjointCochain = PCochain<AlgElem>;

/// F ∈ Hom_{T_p^e}(X_n, T_p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XCochain(PCochain<AlgElem>);

impl<V: Clone> PCochain<V> {
    pub fn from_fn<F>(alg: &Algebra, deg: usize, mut f: F) -> PCochain<V>
    where
        F: FnMut(&[Mono]) -> V,
    {
        let monos = alg.monomials();
        let table = (0..tuple_count(alg, deg)).map(|i| f(&decode(alg, &monos, i, deg))).collect();
        PCochain { alg: alg.clone(), deg, table }
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn get(&self, t: &[Mono]) -> &V {
        &self.table[encode(&self.alg, t)]
    }

    pub fn set(&mut self, t: &[Mono], v: V) {
        let i = encode(&self.alg, t);
        self.table[i] = v;
    }
}

impl TrivialCochain {
    pub fn zero(alg: &Algebra, deg: usize) -> TrivialCochain {
        PCochain::from_fn(alg, deg, |_| alg.zero_scalar())
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Cyc::is_zero)
    }

    fn sparse(&self) -> SparseRow<Cyc> {
        self.table.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
    }

    /// (δf)(c^1,…,c^{n+1}) = ε(c^1) f(c^2,…) + Σ (−1)^i f(…, c^i c^{i+1}, …) + (−1)^{n+1} f(c^1,…,c^n) ε(c^{n+1}).
    pub fn coboundary(&self) -> TrivialCochain {
        let alg = &self.alg;
        let n = self.deg;
        PCochain::from_fn(alg, n + 1, |c| {
            let mut out = alg.zero_scalar();
            if counit(c[0]) {
                out += self.get(&c[1..]);
            }
            for i in 0..n {
                if let Some((m, e)) = alg.mono_mul(c[i], c[i + 1]) {
                    let mut key = c[..i].to_vec();
                    key.push(m);
                    key.extend_from_slice(&c[i + 2..]);
                    out += &(self.get(&key) * &alg.omega(e as i64).scale_int(sign(i + 1)));
                }
            }
            if counit(c[n]) {
                out += &self.get(&c[..n]).scale_int(sign(n + 1));
            }
            out
        })
    }

    pub fn is_cocycle(&self) -> bool {
        self.coboundary().is_zero()
    }

    /// (f ⌣ g)(c^1,…,c^{m+n}) = f(c^1,…,c^m) g(c^{m+1},…).
    pub fn cup(&self, other: &TrivialCochain) -> TrivialCochain {
        let m = self.deg;
        PCochain::from_fn(&self.alg, m + other.deg, |c| self.get(&c[..m]) * other.get(&c[m..]))
    }

    /// η_*: scalars become multiples of 1 ∈ T_p.
    pub fn eta(&self) -> AdjointCochain {
        let alg = self.alg.clone();
        let table = self.table.iter().map(|c| AlgElem::scalar(&alg, c.clone())).collect();
        PCochain { alg, deg: self.deg, table }
    }

    pub fn is_coboundary(&self) -> bool {
        if self.deg == 0 {
            return self.is_zero();
        }
        let cols = coboundary_columns(&self.alg, self.deg - 1, false);
        in_column_span(&cols, &self.sparse())
    }
}

impl AdjointCochain {
    pub fn zero(alg: &Algebra, deg: usize) -> AdjointCochain {
        PCochain::from_fn(alg, deg, |_| AlgElem::zero(alg))
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(AlgElem::is_zero)
    }

    fn sparse(&self) -> SparseRow<Cyc> {
        let d = self.alg.dim();
        let mut out = Vec::new();
        for (i, v) in self.table.iter().enumerate() {
            let mut row: Vec<(usize, Cyc)> =
                v.iter().map(|(m, c)| (i * d + self.alg.index(*m), c.clone())).collect();
            row.sort_by_key(|e| e.0);
            out.extend(row);
        }
        out
    }

    pub fn sub(&self, other: &AdjointCochain) -> AdjointCochain {
        let table = self.table.iter().zip(&other.table).map(|(a, b)| a.sub(b)).collect();
        PCochain { alg: self.alg.clone(), deg: self.deg, table }
    }

    pub fn scale(&self, c: &Cyc) -> AdjointCochain {
        let table = self.table.iter().map(|a| a.scale(c)).collect();
        PCochain { alg: self.alg.clone(), deg: self.deg, table }
    }

    /// The differential of Hom_{T_p}(P_•, T_p^{ad}): the first face acts by
    /// the adjoint action, the last one through ε.
    pub fn coboundary(&self) -> Result<AdjointCochain> {
        let alg = &self.alg;
        let n = self.deg;
        alg.hopf()?;
        Ok(PCochain::from_fn(alg, n + 1, |c| {
            let mut out = adjoint_action(c[0], self.get(&c[1..])).expect("Taft algebra");
            for i in 0..n {
                if let Some((m, e)) = alg.mono_mul(c[i], c[i + 1]) {
                    let mut key = c[..i].to_vec();
                    key.push(m);
                    key.extend_from_slice(&c[i + 2..]);
                    out.add_scaled(self.get(&key), &alg.omega(e as i64).scale_int(sign(i + 1)));
                }
            }
            if counit(c[n]) {
                out.add_scaled(self.get(&c[..n]), &alg.scalar(sign(n + 1)));
            }
            out
        }))
    }

    pub fn is_cocycle(&self) -> Result<bool> {
        Ok(self.coboundary()?.is_zero())
    }

    /// ε_*: apply the counit to every value.
    pub fn epsilon(&self) -> TrivialCochain {
        let alg = &self.alg;
        let table = self
            .table
            .iter()
            .map(|v| {
                let mut s = alg.zero_scalar();
                for (m, c) in v.iter() {
                    if counit(*m) {
                        s += c;
                    }
                }
                s
            })
            .collect();
        PCochain { alg: alg.clone(), deg: self.deg, table }
    }

    pub fn is_coboundary(&self) -> bool {
        if self.deg == 0 {
            return self.is_zero();
        }
        let cols = coboundary_columns(&self.alg, self.deg - 1, true);
        in_column_span(&cols, &self.sparse())
    }
}

impl XCochain {
    pub fn deg(&self) -> usize {
        self.0.deg
    }

    pub fn get(&self, t: &[Mono]) -> &AlgElem {
        self.0.get(t)
    }

    /// F on an element of X_n: (a ⊗ b) ⊗ (1 ⊗ c̄) ↦ a F(c̄) b.
    pub fn evaluate(&self, e: &XChain) -> AlgElem {
        let alg = &self.0.alg;
        let mut out = AlgElem::zero(alg);
        for (key, v) in e.terms.iter() {
            let val = self.0.get(&key[2..]).mul_mono_left(key[0]).mul_mono_right(key[1]);
            out.add_scaled(&val, v);
        }
        out
    }
}

/// Eckmann–Shapiro σ: σ(f̃)((a ⊗ b) ⊗ p) = (a ⊗ b) · f̃(p).
pub fn sigma(f: &AdjointCochain) -> XCochain {
    XCochain(f.clone())
}

/// Eckmann–Shapiro τ: τ(F)(p) = F((1 ⊗ 1) ⊗ p).
pub fn tau(f: &XCochain) -> AdjointCochain {
    let alg = f.0.alg.clone();
    PCochain::from_fn(&alg, f.deg(), |c| {
        let mut key = vec![Mono::ONE, Mono::ONE];
        key.extend_from_slice(c);
        f.evaluate(&XChain { deg: c.len(), terms: LinComb::basis(alg.field(), key) })
    })
}

/// Sparse coboundaries of all basis cochains of degree q, in coordinates of
/// degree q + 1 (tuple index, or tuple index · dim + value index when adjoint).
fn coboundary_columns(alg: &Algebra, q: usize, adjoint: bool) -> Vec<SparseRow<Cyc>> {
    let monos = alg.monomials();
    let d = alg.dim();
    let mut factor: Vec<Vec<(Mono, Mono, usize)>> = vec![Vec::new(); d];
    for &u in &monos {
        for &w in &monos {
            if let Some((m, e)) = alg.mono_mul(u, w) {
                factor[alg.index(m)].push((u, w, e));
            }
        }
    }
    let values: Vec<Option<Mono>> = if adjoint { monos.iter().map(|m| Some(*m)).collect() } else { vec![None] };
    let mut cols = Vec::new();
    for ti in 0..tuple_count(alg, q) {
        let t = decode(alg, &monos, ti, q);
        for v in &values {
            let mut acc: BTreeMap<usize, Cyc> = BTreeMap::new();
            let mut push = |tuple: &[Mono], val: Option<AlgElem>, s: &Cyc| {
                let base = encode(alg, tuple);
                match val {
                    Some(val) => {
                        for (m, c) in val.iter() {
                            *acc.entry(base * d + alg.index(*m)).or_insert_with(|| alg.zero_scalar()) +=
                                &(c * s);
                        }
                    }
                    None => *acc.entry(base).or_insert_with(|| alg.zero_scalar()) += s,
                }
            };
            let vv = v.map(|m| AlgElem::mono(alg, m));
            let one = alg.scalar(1);
            for &u in &monos {
                let mut key = vec![u];
                key.extend_from_slice(&t);
                match &vv {
                    Some(val) => push(&key, Some(adjoint_action(u, val).expect("Taft algebra")), &one),
                    None if counit(u) => push(&key, None, &one),
                    None => {}
                }
            }
            for i in 0..q {
                for &(u, w, e) in &factor[alg.index(t[i])] {
                    let mut key = t[..i].to_vec();
                    key.push(u);
                    key.push(w);
                    key.extend_from_slice(&t[i + 1..]);
                    push(&key, vv.clone(), &alg.omega(e as i64).scale_int(sign(i + 1)));
                }
            }
            let last = alg.scalar(sign(q + 1));
            for &u in &monos {
                if counit(u) {
                    let mut key = t.clone();
                    key.push(u);
                    push(&key, vv.clone(), &last);
                }
            }
            cols.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
    }
    cols
}

// ---- θ and ψ ------------------------------------------------------------------

/// An element of X_n = T_p^e ⊗_{T_p} P_n, keyed by [a, b, c^1, …, c^n] for
/// (a ⊗ b) ⊗ (1 ⊗ c^1 ⊗ … ⊗ c^n).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XChain {
    pub deg: usize,
    pub terms: LinComb<Vec<Mono>>,
}

impl XChain {
    pub fn generator(alg: &Algebra, c: &[Mono]) -> XChain {
        let mut key = vec![Mono::ONE, Mono::ONE];
        key.extend_from_slice(c);
        XChain { deg: c.len(), terms: LinComb::basis(alg.field(), key) }
    }
}

/// θ_n((a ⊗ b) ⊗ (1 ⊗ c̄)) = Σ a ⊗ c^1_1 ⊗ … ⊗ c^n_1 ⊗ S(c^1_2 ⋯ c^n_2) b.
pub fn theta(alg: &Algebra, e: &XChain) -> Result<BarChain> {
    let hopf = alg.hopf()?;
    let n = e.deg;
    let mut out = BarChain { deg: n, terms: LinComb::zero(alg.field()) };
    for (key, v) in e.terms.iter() {
        for (parts, c) in sweedler(alg, &key[2..], 2)? {
            let tail = product(alg, &parts[1]);
            let mut s = AlgElem::zero(alg);
            for (m, cm) in tail.iter() {
                s.add_scaled(&hopf.antipode[alg.index(*m)], cm);
            }
            let s = s.mul_mono_right(key[1]);
            for (m, cm) in s.iter() {
                let mut k = vec![key[0]];
                k.extend_from_slice(&parts[0]);
                k.push(*m);
                out.terms.add_term(k, &(&(v * &c) * cm));
            }
        }
    }
    Ok(out)
}

/// ψ_n(a ⊗ c̄ ⊗ b) = Σ (a ⊗ c^1_2 ⋯ c^n_2 b) ⊗ (1 ⊗ c^1_1 ⊗ … ⊗ c^n_1).
pub fn psi(alg: &Algebra, e: &BarChain) -> Result<XChain> {
    let n = e.deg;
    let mut out = XChain { deg: n, terms: LinComb::zero(alg.field()) };
    for (key, v) in e.terms.iter() {
        for (parts, c) in sweedler(alg, &key[1..=n], 2)? {
            let right = product(alg, &parts[1]).mul_mono_right(key[n + 1]);
            for (m, cm) in right.iter() {
                let mut k = vec![key[0], *m];
                k.extend_from_slice(&parts[0]);
                out.terms.add_term(k, &(&(v * &c) * cm));
            }
        }
    }
    Ok(out)
}

/// id ⊗ d on X_n, n ≥ 1, using (a ⊗ b) h = Σ a h_1 ⊗ S(h_2) b to absorb the first face.
pub fn x_differential(alg: &Algebra, e: &XChain) -> Result<XChain> {
    let hopf = alg.hopf()?;
    let n = e.deg;
    if n == 0 {
        return Err(Error::Domain("differential on X_0".into()));
    }
    let mut out = XChain { deg: n - 1, terms: LinComb::zero(alg.field()) };
    for (key, v) in e.terms.iter() {
        let (a, b, c) = (key[0], key[1], &key[2..]);
        for (k, d) in &hopf.delta[alg.index(c[0])] {
            let Some((l, e1)) = alg.mono_mul(a, k[0]) else { continue };
            let r = hopf.antipode[alg.index(k[1])].mul_mono_right(b);
            for (m, cm) in r.iter() {
                let mut key2 = vec![l, *m];
                key2.extend_from_slice(&c[1..]);
                out.terms.add_term(key2, &(&(v * d) * &(cm * alg.omega(e1 as i64))));
            }
        }
        for i in 0..n - 1 {
            if let Some((m, e1)) = alg.mono_mul(c[i], c[i + 1]) {
                let mut key2 = vec![a, b];
                key2.extend_from_slice(&c[..i]);
                key2.push(m);
                key2.extend_from_slice(&c[i + 2..]);
                out.terms.add_term(key2, &(v * &alg.omega(e1 as i64).scale_int(sign(i + 1))));
            }
        }
        if counit(c[n - 1]) {
            let mut key2 = vec![a, b];
            key2.extend_from_slice(&c[..n - 1]);
            out.terms.add_term(key2, &v.scale_int(sign(n)));
        }
    }
    Ok(out)
}

/// d θ = θ d on every generator of X_n.
pub fn theta_chain_map(alg: &Algebra, n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let monos = alg.monomials();
    for ti in 0..tuple_count(alg, n) {
        let e = XChain::generator(alg, &decode(alg, &monos, ti, n));
        if bar_differential(alg, &theta(alg, &e)?) != theta(alg, &x_differential(alg, &e)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ψ θ = id on generators of X_n and θ ψ = id on generators 1 ⊗ c̄ ⊗ 1 of B_n.
pub fn theta_psi_inverse(alg: &Algebra, n: usize) -> Result<bool> {
    let monos = alg.monomials();
    for ti in 0..tuple_count(alg, n) {
        let c = decode(alg, &monos, ti, n);
        let e = XChain::generator(alg, &c);
        if psi(alg, &theta(alg, &e)?)? != e {
            return Ok(false);
        }
        let mut key = vec![Mono::ONE];
        key.extend_from_slice(&c);
        key.push(Mono::ONE);
        let b = BarChain { deg: n, terms: LinComb::basis(alg.field(), key) };
        if theta(alg, &psi(alg, &b)?)? != b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ψ^* F: c̄ ↦ F(ψ(1 ⊗ c̄ ⊗ 1)) = Σ F(c̄_1) c^1_2 ⋯ c^n_2.
pub fn psi_star(f: &XCochain) -> Result<BarCochain> {
    let alg = f.0.alg.clone();
    let exp = |c: &[Mono]| -> Result<AlgElem> {
        let mut out = AlgElem::zero(&alg);
        for (parts, k) in sweedler(&alg, c, 2)? {
            out.add_scaled(&f.get(&parts[0]).mul(&product(&alg, &parts[1])), &k);
        }
        Ok(out)
    };
    let mut err = None;
    let out = BarCochain::from_fn(&alg, f.deg(), |c| {
        exp(c).unwrap_or_else(|e| {
            err = Some(e);
            AlgElem::zero(&alg)
        })
    });
    err.map_or(Ok(out), Err)
}

/// θ^* H: c̄ ↦ H(θ((1 ⊗ 1) ⊗ c̄)) = Σ H(c̄_1) S(c^1_2 ⋯ c^n_2).
pub fn theta_star(h: &BarCochain) -> Result<XCochain> {
    let alg = h.algebra().clone();
    let hopf = alg.hopf()?;
    let table = PCochain::from_fn(&alg, h.deg(), |c| {
        let mut out = AlgElem::zero(&alg);
        for (parts, k) in sweedler(&alg, c, 2).expect("Taft algebra") {
            let tail = product(&alg, &parts[1]);
            let mut s = AlgElem::zero(&alg);
            for (m, cm) in tail.iter() {
                s.add_scaled(&hopf.antipode[alg.index(*m)], cm);
            }
            out.add_scaled(&h.get(&parts[0]).mul(&s), &k);
        }
        out
    });
    Ok(XCochain(table))
}

/// f̃ ∘_P g̃ = τ((ψ^*σ f̃ ∘ ψ^*σ g̃) θ).
pub fn circle_p_composite(f: &AdjointCochain, g: &AdjointCochain) -> Result<AdjointCochain> {
    let bar = circle_bar(&psi_star(&sigma(f))?, &psi_star(&sigma(g))?)?;
    Ok(tau(&theta_star(&bar)?))
}

/// f̃ ∘_P g̃ by the closed Sweedler formula:
/// Σ_i (−1)^{(n−1)(i−1)} f̃(c^1_1, …, c^*_1, …) c^1_2 ⋯ c^*_2 ⋯ S(c^1_3 ⋯ c^{m+n−1}_3)
/// with c^* = g̃(c^i_1, …, c^{i+n−1}_1) c^i_2 ⋯ c^{i+n−1}_2.
pub fn circle_p(f: &AdjointCochain, g: &AdjointCochain) -> Result<AdjointCochain> {
    let alg = f.alg.clone();
    if g.alg != alg {
        return Err(Error::Domain("cochains over different algebras".into()));
    }
    let hopf = alg.hopf()?;
    let (m, n) = (f.deg, g.deg);
    if m + n == 0 {
        return Err(Error::Domain("circle product needs |f| + |g| ≥ 1".into()));
    }
    let top = m + n - 1;
    if m == 0 {
        return Ok(AdjointCochain::zero(&alg, top));
    }
    Ok(PCochain::from_fn(&alg, top, |c| {
        let mut out = AlgElem::zero(&alg);
        for (parts, k) in sweedler(&alg, c, 3).expect("Taft algebra") {
            let tail = product(&alg, &parts[2]);
            let mut s = AlgElem::zero(&alg);
            for (mm, cm) in tail.iter() {
                s.add_scaled(&hopf.antipode[alg.index(*mm)], cm);
            }
            for i in 0..m {
                let star = g.get(&parts[0][i..i + n]).mul(&product(&alg, &parts[1][i..i + n]));
                if star.is_zero() {
                    continue;
                }
                let pre = product(&alg, &parts[1][..i]);
                let post = product(&alg, &parts[1][i + n..]).mul(&s);
                let split = star.comultiply().expect("Taft algebra");
                let mut key = parts[0][..i].to_vec();
                key.push(Mono::ONE);
                key.extend_from_slice(&parts[0][i + n..]);
                for (sk, sc) in split.terms().iter() {
                    key[i] = sk[0];
                    let val = f.get(&key).mul(&pre.mul_mono_right(sk[1])).mul(&post);
                    out.add_scaled(&val, &(&k * &sc.scale_int(sign((n + 1) * i))));
                }
            }
        }
        out
    }))
}

/// [f̃, g̃]_P = f̃ ∘_P g̃ − (−1)^{(m−1)(n−1)} g̃ ∘_P f̃.
pub fn bracket_p(f: &AdjointCochain, g: &AdjointCochain) -> Result<AdjointCochain> {
    let fg = circle_p(f, g)?;
    let gf = circle_p(g, f)?;
    Ok(fg.sub(&gf.scale(&f.alg.scalar(sign((f.deg + 1) * (g.deg + 1))))))
}

/// [f, g] = ε_*[η_* f, η_* g]_P on Hom_{T_p}(P_•, k).
pub fn hopf_bracket(f: &TrivialCochain, g: &TrivialCochain) -> Result<TrivialCochain> {
    for h in [f, g] {
        if !h.is_cocycle() {
            return Err(Error::Domain(format!("degree-{} cochain on P is not a cocycle", h.deg)));
        }
    }
    Ok(bracket_p(&f.eta(), &g.eta())?.epsilon())
}

/// The Hochschild cocycle ψ^* σ η_* f on the bar resolution of T_p.
pub fn embed_in_hochschild(f: &TrivialCochain) -> Result<BarCochain> {
    psi_star(&sigma(&f.eta()))
}

// ---- cohomology -------------------------------------------------------------

/// Representatives u_0 = 1, u_2 and u_4 = u_2 ⌣ u_2 of H^0, H^2, H^4.
pub fn generators(alg: &Algebra) -> Result<Vec<TrivialCochain>> {
    alg.hopf()?;
    let p = alg.p();
    let u0 = PCochain::from_fn(alg, 0, |_| alg.scalar(1));
    // H^2 sits on pairs whose x-degrees add up to p
    let monos = alg.monomials();
    let support: Vec<usize> = (0..tuple_count(alg, 2))
        .filter(|&i| decode(alg, &monos, i, 2).iter().map(|m| m.x).sum::<usize>() == p)
        .collect();
    let all = coboundary_columns(alg, 2, false);
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    for &j in &support {
        for (c, _) in &all[j] {
            let next = rows.len();
            rows.entry(*c).or_insert(next);
        }
    }
    let zero = alg.zero_scalar();
    let mut mat = Matrix::zeros(&zero, rows.len().max(1), support.len());
    for (k, &j) in support.iter().enumerate() {
        for (c, v) in &all[j] {
            mat.set(rows[c], k, v.clone());
        }
    }
    let lower = coboundary_columns(alg, 1, false);
    let mut u2 = None;
    for v in mat.kernel_basis() {
        let mut f = TrivialCochain::zero(alg, 2);
        for (k, &j) in support.iter().enumerate() {
            f.table[j] = v[k].clone();
        }
        if !in_column_span(&lower, &f.sparse()) {
            u2 = Some(f);
            break;
        }
    }
    let mut u2 = u2.ok_or_else(|| Error::Invariant("no degree-2 class found".into()))?;
    let pivot = u2.get(&[Mono::new(1, 0), Mono::new(p - 1, 0)]).clone();
    if !pivot.is_zero() {
        let inv = pivot.inv()?;
        u2.table.iter_mut().for_each(|c| *c = &*c * &inv);
    }
    let u4 = u2.cup(&u2);
    Ok(vec![u0, u2, u4])
}

/// dim H^n(T_p, k) for n ≤ max_deg, from the normalized bar complex on the
/// augmentation ideal in the basis x^i e_χ, where e_χ = (1/p) Σ ω^{−χk} g^k.
/// There x^i e_χ · x^j e_ψ = δ_{χ, ψ+j} x^{i+j} e_ψ, so all coefficients are ±1.
pub fn hopf_cohomology_dims(p: usize, max_deg: usize) -> Result<Vec<usize>> {
    if p <= 2 {
        return Err(Error::Domain(format!("p = {p} must exceed 2")));
    }
    let basis: Vec<(usize, usize)> =
        (0..p).flat_map(|i| (0..p).map(move |c| (i, c))).filter(|&b| b != (0, 0)).collect();
    let d = basis.len();
    let index = |b: (usize, usize)| basis.iter().position(|&e| e == b).expect("basis element");
    // factor[k]: pairs (u, w) with u w = basis[k]
    let mut factor: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d];
    for (k, &(i, psi)) in basis.iter().enumerate() {
        for b in 0..=i {
            let u = (i - b, (psi + b) % p);
            let w = (b, psi);
            if u != (0, 0) && w != (0, 0) {
                factor[k].push((index(u), index(w)));
            }
        }
    }
    let pow = |n: usize| d.pow(n as u32);
    let rank = |q: usize| -> usize {
        let mut cols: Vec<SparseRow<Rational>> = Vec::with_capacity(pow(q));
        for ti in 0..pow(q) {
            let mut t = vec![0; q];
            let mut r = ti;
            for slot in t.iter_mut().rev() {
                *slot = r % d;
                r /= d;
            }
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for i in 0..q {
                for &(u, w) in &factor[t[i]] {
                    let mut key = t[..i].to_vec();
                    key.push(u);
                    key.push(w);
                    key.extend_from_slice(&t[i + 1..]);
                    let idx = key.iter().fold(0, |a, &k| a * d + k);
                    *acc.entry(idx).or_insert(0) += sign(i + 1);
                }
            }
            cols.push(
                acc.into_iter().filter(|(_, c)| *c != 0).map(|(k, c)| (k, Rational::from_integer(c.into()))).collect(),
            );
        }
        sparse_rank(pow(q + 1), cols)
    };
    let mut dims = Vec::new();
    let mut prev = 0;
    for n in 0..=max_deg {
        let r = if n == 0 { 0 } else { rank(n) };
        dims.push(pow(n) - r - prev);
        prev = r;
    }
    Ok(dims)
}
