//! The bar resolution as ground truth.  Multilinear cochains, the Hochschild
//! differential, and the circle product, bracket and cup product taken
//! directly from their defining sums.  Comparison maps ι : K → B(B) and
//! π : B(B) → K move cochains between the two resolutions, and class
//! equality is decided by exact solving.

use std::collections::BTreeMap;

use crate::algebras::{AlgElem, Algebra, Mono};
use crate::bracket::{Engine, SmallCochain};
use crate::error::{Error, Result};
use crate::linalg::{sparse_rank, Matrix, SparseRow};
use crate::lincomb::LinComb;
use crate::resolution::{Chain, Resolution};
use crate::scalars::{Cyc, Rational};

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A k-multilinear map A^{⊗n} → A, stored on tuples of basis monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarCochain {
    alg: Algebra,
    deg: usize,
    table: Vec<AlgElem>,
}

pub(crate) fn tuple_count(alg: &Algebra, n: usize) -> usize {
    alg.dim().pow(n as u32)
}

pub(crate) fn decode(alg: &Algebra, monos: &[Mono], mut idx: usize, n: usize) -> Vec<Mono> {
    let d = alg.dim();
    let mut out = vec![Mono::ONE; n];
    for slot in out.iter_mut().rev() {
        *slot = monos[idx % d];
        idx /= d;
    }
    out
}

pub(crate) fn encode(alg: &Algebra, t: &[Mono]) -> usize {
    t.iter().fold(0, |acc, m| acc * alg.dim() + alg.index(*m))
}

impl BarCochain {
    pub fn zero(alg: &Algebra, deg: usize) -> BarCochain {
        BarCochain { alg: alg.clone(), deg, table: vec![AlgElem::zero(alg); tuple_count(alg, deg)] }
    }

    /// The cochain whose value on a basis tuple is `f(tuple)`.
    pub fn from_fn<F>(alg: &Algebra, deg: usize, mut f: F) -> BarCochain
    where
        F: FnMut(&[Mono]) -> AlgElem,
    {
        let monos = alg.monomials();
        let table = (0..tuple_count(alg, deg)).map(|i| f(&decode(alg, &monos, i, deg))).collect();
        BarCochain { alg: alg.clone(), deg, table }
    }

    pub fn deg(&self) -> usize {
        self.deg
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn get(&self, t: &[Mono]) -> &AlgElem {
        &self.table[encode(&self.alg, t)]
    }

    pub fn set(&mut self, t: &[Mono], v: AlgElem) {
        let i = encode(&self.alg, t);
        self.table[i] = v;
    }

    /// (tuple, value) pairs with nonzero value.
    pub fn entries(&self) -> Vec<(Vec<Mono>, &AlgElem)> {
        let monos = self.alg.monomials();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (decode(&self.alg, &monos, i, self.deg), v))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(AlgElem::is_zero)
    }

    fn check(&self, other: &BarCochain) -> Result<()> {
        if self.alg != other.alg || self.deg != other.deg {
            return Err(Error::Domain(format!(
                "cochains of degree {} and {} over different data",
                self.deg, other.deg
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &BarCochain) -> Result<BarCochain> {
        self.check(other)?;
        let table = self.table.iter().zip(&other.table).map(|(a, b)| a.add(b)).collect();
        Ok(BarCochain { alg: self.alg.clone(), deg: self.deg, table })
    }

    pub fn sub(&self, other: &BarCochain) -> Result<BarCochain> {
        self.check(other)?;
        let table = self.table.iter().zip(&other.table).map(|(a, b)| a.sub(b)).collect();
        Ok(BarCochain { alg: self.alg.clone(), deg: self.deg, table })
    }

    pub fn scale(&self, c: &Cyc) -> BarCochain {
        let table = self.table.iter().map(|a| a.scale(c)).collect();
        BarCochain { alg: self.alg.clone(), deg: self.deg, table }
    }

    /// f(prefix, mid, suffix) with `mid` expanded linearly.
    fn eval_inserted(&self, prefix: &[Mono], mid: &AlgElem, suffix: &[Mono]) -> AlgElem {
        let mut out = AlgElem::zero(&self.alg);
        let mut key: Vec<Mono> = Vec::with_capacity(self.deg);
        for (m, c) in mid.iter() {
            key.clear();
            key.extend_from_slice(prefix);
            key.push(*m);
            key.extend_from_slice(suffix);
            out.add_scaled(self.get(&key), c);
        }
        out
    }
}

/// (df)(a_1,…,a_{n+1}) = a_1 f(a_2,…) + Σ (−1)^i f(…, a_i a_{i+1}, …) + (−1)^{n+1} f(…, a_n) a_{n+1}.
pub fn hochschild_differential(f: &BarCochain) -> BarCochain {
    let alg = f.alg.clone();
    let n = f.deg;
    BarCochain::from_fn(&alg, n + 1, |a| {
        let mut out = f.get(&a[1..]).mul_mono_left(a[0]);
        for i in 0..n {
            if let Some((m, e)) = alg.mono_mul(a[i], a[i + 1]) {
                let mut key = a[..i].to_vec();
                key.push(m);
                key.extend_from_slice(&a[i + 2..]);
                let c = alg.omega(e as i64).scale_int(sign(i + 1));
                out.add_scaled(f.get(&key), &c);
            }
        }
        let last = f.get(&a[..n]).mul_mono_right(a[n]);
        out.add_scaled(&last, &alg.scalar(sign(n + 1)));
        out
    })
}

pub fn is_bar_cocycle(f: &BarCochain) -> bool {
    hochschild_differential(f).is_zero()
}

/// (f ∘ g)(a_1,…) = Σ_{i=1}^m (−1)^{(n−1)(i−1)} f(a_1,…, g(a_i,…,a_{i+n−1}), …).
pub fn circle_bar(f: &BarCochain, g: &BarCochain) -> Result<BarCochain> {
    if f.alg != g.alg {
        return Err(Error::Domain("circle product of cochains over different algebras".into()));
    }
    let (m, n) = (f.deg, g.deg);
    if m + n == 0 {
        return Err(Error::Domain("circle product needs |f| + |g| ≥ 1".into()));
    }
    let top = m + n - 1;
    if m == 0 {
        return Ok(BarCochain::zero(&f.alg, top));
    }
    let alg = f.alg.clone();
    Ok(BarCochain::from_fn(&alg, top, |a| {
        let mut out = AlgElem::zero(&alg);
        for i in 0..m {
            let inner = g.get(&a[i..i + n]);
            if inner.is_zero() {
                continue;
            }
            let v = f.eval_inserted(&a[..i], inner, &a[i + n..]);
            out.add_scaled(&v, &alg.scalar(sign((n + 1) * i)));
        }
        out
    }))
}

/// [f, g] = f ∘ g − (−1)^{(m−1)(n−1)} g ∘ f.
pub fn bracket_bar(f: &BarCochain, g: &BarCochain) -> Result<BarCochain> {
    let fg = circle_bar(f, g)?;
    let gf = circle_bar(g, f)?;
    fg.sub(&gf.scale(&f.alg.scalar(sign((f.deg + 1) * (g.deg + 1)))))
}

/// (f ⌣ g)(a_1,…,a_{m+n}) = (−1)^{mn} f(a_1,…,a_m) g(a_{m+1},…).
pub fn cup_bar(f: &BarCochain, g: &BarCochain) -> Result<BarCochain> {
    if f.alg != g.alg {
        return Err(Error::Domain("cup product of cochains over different algebras".into()));
    }
    let (m, n) = (f.deg, g.deg);
    let s = f.alg.scalar(sign(m * n));
    Ok(BarCochain::from_fn(&f.alg, m + n, |a| f.get(&a[..m]).mul(g.get(&a[m..])).scale(&s)))
}

// ---- coboundaries by weight -------------------------------------------------

/// Coordinates of C^n are (tuple index, value index).  The differential
/// preserves the weight (x-degree of value − x-degree of tuple, same for g).
type Weight = (i64, usize);

fn weight(alg: &Algebra, t: &[Mono], v: Mono) -> Weight {
    let xs: usize = t.iter().map(|m| m.x).sum();
    let gs: usize = t.iter().map(|m| m.g).sum();
    let q = if alg.is_taft() { alg.p() } else { 1 };
    (v.x as i64 - xs as i64, (v.g + q - gs % q) % q)
}

/// d(e_{t,v}) for the basis cochain sending t to v, as sparse coordinates in C^{q+1}.
fn coboundary_of_basis(alg: &Algebra, monos: &[Mono], t: &[Mono], v: Mono) -> SparseRow<Cyc> {
    let q = t.len();
    let d = alg.dim();
    let mut acc: BTreeMap<usize, Cyc> = BTreeMap::new();
    let mut push = |tuple: &[Mono], val: AlgElem, s: &Cyc| {
        let base = encode(alg, tuple) * d;
        for (m, c) in val.iter() {
            let e = acc.entry(base + alg.index(*m)).or_insert_with(|| alg.zero_scalar());
            *e += &(c * s);
        }
    };
    let vv = AlgElem::mono(alg, v);
    let one = alg.scalar(1);
    for &u in monos {
        let mut key = vec![u];
        key.extend_from_slice(t);
        push(&key, vv.mul_mono_left(u), &one);
    }
    for i in 0..q {
        for &u in monos {
            for &w in monos {
                if let Some((m, e)) = alg.mono_mul(u, w) {
                    if m != t[i] {
                        continue;
                    }
                    let mut key = t[..i].to_vec();
                    key.push(u);
                    key.push(w);
                    key.extend_from_slice(&t[i + 1..]);
                    // u w = ω^e t_i
                    let s = alg.omega(e as i64).scale_int(sign(i + 1));
                    push(&key, vv.clone(), &s);
                }
            }
        }
    }
    let last = alg.scalar(sign(q + 1));
    for &u in monos {
        let mut key = t.to_vec();
        key.push(u);
        push(&key, vv.mul_mono_right(u), &last);
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Whether a degree-n cochain lies in the image of the Hochschild differential.
pub fn is_bar_coboundary(f: &BarCochain) -> bool {
    if f.deg == 0 {
        return f.is_zero();
    }
    let alg = &f.alg;
    let monos = alg.monomials();
    let dim = alg.dim();
    let mut targets: BTreeMap<Weight, BTreeMap<usize, Cyc>> = BTreeMap::new();
    for (i, val) in f.table.iter().enumerate() {
        let t = decode(alg, &monos, i, f.deg);
        for (m, c) in val.iter() {
            targets.entry(weight(alg, &t, *m)).or_default().insert(i * dim + alg.index(*m), c.clone());
        }
    }
    let q = f.deg - 1;
    let zero = alg.zero_scalar();
    for (w, target) in targets {
        let mut cols: Vec<SparseRow<Cyc>> = Vec::new();
        for ti in 0..tuple_count(alg, q) {
            let t = decode(alg, &monos, ti, q);
            for &v in &monos {
                if weight(alg, &t, v) == w {
                    cols.push(coboundary_of_basis(alg, &monos, &t, v));
                }
            }
        }
        let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
        for coord in cols.iter().flatten().map(|e| e.0).chain(target.keys().copied()) {
            let next = rows.len();
            rows.entry(coord).or_insert(next);
        }
        let mut mat = Matrix::zeros(&zero, rows.len(), cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (coord, c) in col {
                mat.set(rows[coord], j, c.clone());
            }
        }
        let mut rhs = vec![zero.clone(); rows.len()];
        for (coord, c) in &target {
            rhs[rows[coord]] = c.clone();
        }
        if mat.solve(&rhs).is_none() {
            return false;
        }
    }
    true
}

/// Whether two cocycles define the same class in HH^n.
pub fn class_equal(f: &BarCochain, g: &BarCochain) -> Result<bool> {
    f.check(g)?;
    for h in [f, g] {
        if !is_bar_cocycle(h) {
            return Err(Error::Domain(format!("degree-{} bar cochain is not a cocycle", h.deg)));
        }
    }
    Ok(is_bar_coboundary(&f.sub(g)?))
}

/// dim HH^n computed on the bar complex: dim C^n − rank d_n − rank d_{n−1}.
pub fn bar_hh_dim(alg: &Algebra, n: usize) -> usize {
    let monos = alg.monomials();
    let dim = alg.dim();
    let rank = |q: usize| {
        let mut cols = Vec::new();
        for ti in 0..tuple_count(alg, q) {
            let t = decode(alg, &monos, ti, q);
            for &v in &monos {
                cols.push(coboundary_of_basis(alg, &monos, &t, v));
            }
        }
        sparse_rank(tuple_count(alg, q + 1) * dim, cols)
    };
    let size = tuple_count(alg, n) * dim;
    size - rank(n) - if n == 0 { 0 } else { rank(n - 1) }
}

// ---- comparison maps --------------------------------------------------------

/// An element of B_n = B ⊗ B^{⊗n} ⊗ B, keyed by (a_0, …, a_{n+1}).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarChain {
    pub deg: usize,
    pub terms: LinComb<Vec<Mono>>,
}

/// d(a_0 ⊗ … ⊗ a_{n+1}) = Σ_{i=0}^{n} (−1)^i a_0 ⊗ … ⊗ a_i a_{i+1} ⊗ … (n ≥ 1).
pub fn bar_differential(alg: &Algebra, ch: &BarChain) -> BarChain {
    let mut out = BarChain { deg: ch.deg - 1, terms: LinComb::zero(alg.field()) };
    for (key, v) in ch.terms.iter() {
        for i in 0..=ch.deg {
            if let Some((m, e)) = alg.mono_mul(key[i], key[i + 1]) {
                let mut k = key[..i].to_vec();
                k.push(m);
                k.extend_from_slice(&key[i + 2..]);
                out.terms.add_term(k, &(v * &alg.omega(e as i64).scale_int(sign(i))));
            }
        }
    }
    out
}

fn bar_augment(alg: &Algebra, ch: &BarChain) -> AlgElem {
    let mut out = AlgElem::zero(alg);
    for (key, v) in ch.terms.iter() {
        out.add_scaled(&AlgElem::mono(alg, key[0]).mul_mono_right(key[1]), v);
    }
    out
}

/// a · ch · b for monomials a, b.
fn bar_act(alg: &Algebra, a: Mono, ch: &BarChain, b: Mono) -> BarChain {
    let mut out = BarChain { deg: ch.deg, terms: LinComb::zero(alg.field()) };
    let last = ch.deg + 1;
    for (key, v) in ch.terms.iter() {
        let Some((l, e1)) = alg.mono_mul(a, key[0]) else { continue };
        let Some((r, e2)) = alg.mono_mul(key[last], b) else { continue };
        let mut k = key.clone();
        k[0] = l;
        k[last] = r;
        out.terms.add_term(k, &(v * alg.omega((e1 + e2) as i64)));
    }
    out
}

/// Which level of agreement π ∘ ι reached in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PiIota {
    /// π ι (ξ_n) = ξ_n.
    Identity,
    /// π ι differs from the identity but induces it on cohomology.
    OnCohomology,
    Neither,
}

/// Chain maps ι : K → B(B) and π : B(B) → K lifting the identity of B.
#[derive(Clone, Debug)]
pub struct ComparisonMaps {
    res: Resolution,
    max_deg: usize,
    /// ι_n(ξ_n).
    iota: Vec<BarChain>,
    /// π_n(1 ⊗ a_1 ⊗ … ⊗ a_n ⊗ 1), indexed by the encoded tuple.
    pi: Vec<Vec<Chain>>,
}

impl ComparisonMaps {
    /// ι_0(ξ_0) = P(1 ⊗ 1) and ι_n(ξ_n) = P s ι_{n−1}(d ξ_n) with s the extra degeneracy
    /// a_0 ⊗ … ↦ 1 ⊗ a_0 ⊗ …, and P the projection onto the character of ξ_n
    /// under conjugation by g.  π_n(1 ⊗ ā ⊗ 1) = h π_{n−1} d (1 ⊗ ā ⊗ 1).
    pub fn build(res: &Resolution, max_deg: usize) -> Result<ComparisonMaps> {
        let alg = res.alg().clone();
        let field = alg.field().clone();
        let mut maps = ComparisonMaps { res: res.clone(), max_deg, iota: Vec::new(), pi: Vec::new() };

        let unit = BarChain { deg: 0, terms: LinComb::basis(&field, vec![Mono::ONE, Mono::ONE]) };
        let unit = maps.project(&unit, 0);
        maps.iota.push(unit);
        if bar_augment(&alg, &maps.iota[0]) != AlgElem::one(&alg) {
            return Err(Error::Invariant("ι fails to lift the identity in degree 0".into()));
        }
        for n in 1..=max_deg {
            let lower = maps.iota_apply(&res.differential(&res.generator(n))?)?;
            let mut lifted = BarChain { deg: n, terms: LinComb::zero(&field) };
            for (key, v) in lower.terms.iter() {
                let mut k = vec![Mono::ONE];
                k.extend_from_slice(key);
                lifted.terms.add_term(k, v);
            }
            let lifted = maps.project(&lifted, res.twist(n));
            if bar_differential(&alg, &lifted) != lower {
                return Err(Error::Invariant(format!("ι is not a chain map in degree {n}")));
            }
            maps.iota.push(lifted);
        }

        let monos = alg.monomials();
        maps.pi.push(vec![res.generator(0)]);
        for n in 1..=max_deg {
            let mut level = Vec::with_capacity(tuple_count(&alg, n));
            for ti in 0..tuple_count(&alg, n) {
                let t = decode(&alg, &monos, ti, n);
                let mut key = vec![Mono::ONE];
                key.extend_from_slice(&t);
                key.push(Mono::ONE);
                let gen = BarChain { deg: n, terms: LinComb::basis(&field, key) };
                let lower = maps.pi_apply(&bar_differential(&alg, &gen))?;
                let value = res.h(&lower);
                if res.differential(&value)? != lower {
                    return Err(Error::Invariant(format!("π is not a chain map in degree {n}")));
                }
                level.push(value);
            }
            maps.pi.push(level);
        }
        Ok(maps)
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    pub fn resolution(&self) -> &Resolution {
        &self.res
    }

    fn check_deg(&self, n: usize) -> Result<()> {
        if n > self.max_deg {
            return Err(Error::Config(format!(
                "comparison maps built to degree {}, asked for {n}",
                self.max_deg
            )));
        }
        Ok(())
    }

    /// (1/p) Σ_k ω^{−εk} g^k y g^{−k}; the identity for A.
    fn project(&self, y: &BarChain, eps: usize) -> BarChain {
        let alg = self.res.alg();
        if !alg.is_taft() {
            return y.clone();
        }
        let p = alg.p();
        let mut out = BarChain { deg: y.deg, terms: LinComb::zero(alg.field()) };
        for k in 0..p {
            let conj = bar_act(alg, Mono::new(0, k), y, Mono::new(0, (p - k) % p));
            let e = (p - (eps * k) % p) % p;
            out.terms.add_scaled(&conj.terms, alg.omega(e as i64));
        }
        let inv = Cyc::from_rational(alg.field(), Rational::new(1.into(), (p as i64).into()));
        out.terms = out.terms.scaled(&inv);
        out
    }

    /// ι_n(ξ_n).
    pub fn iota_generator(&self, n: usize) -> Result<&BarChain> {
        self.check_deg(n)?;
        Ok(&self.iota[n])
    }

    /// ι on a chain of K_n: x^l ξ x^r g^k ↦ x^l ι(ξ_n) x^r g^k.
    pub fn iota_apply(&self, ch: &Chain) -> Result<BarChain> {
        self.check_deg(ch.deg)?;
        let alg = self.res.alg();
        let mut out = BarChain { deg: ch.deg, terms: LinComb::zero(alg.field()) };
        for (c, v) in ch.terms.iter() {
            let moved = bar_act(alg, Mono::new(c.l, 0), &self.iota[ch.deg], Mono::new(c.r, c.k));
            out.terms.add_scaled(&moved.terms, v);
        }
        Ok(out)
    }

    /// π on a bar chain: a_0 ⊗ ā ⊗ a_{n+1} ↦ a_0 π(1 ⊗ ā ⊗ 1) a_{n+1}.
    pub fn pi_apply(&self, ch: &BarChain) -> Result<Chain> {
        self.check_deg(ch.deg)?;
        let alg = self.res.alg();
        let n = ch.deg;
        let mut out = self.res.zero(n);
        for (key, v) in ch.terms.iter() {
            let base = &self.pi[n][encode(alg, &key[1..=n])];
            for (c, cv) in base.terms.iter() {
                let Some((lc, e1)) = self.res.left_mono(key[0], n, *c) else { continue };
                let Some((rc, e2)) = self.res.right_mono(lc, key[n + 1]) else { continue };
                out.terms.add_term(rc, &(&(v * cv) * alg.omega((e1 + e2) as i64)));
            }
        }
        Ok(out)
    }

    /// π^* f: the bar cochain ā ↦ f(π(1 ⊗ ā ⊗ 1)).
    pub fn pullback(&self, f: &SmallCochain) -> Result<BarCochain> {
        self.check_deg(f.deg)?;
        let alg = self.res.alg();
        let level = &self.pi[f.deg];
        let mut i = 0;
        Ok(BarCochain::from_fn(alg, f.deg, |_| {
            let v = self.res.evaluate(&f.value, &level[i]);
            i += 1;
            v
        }))
    }

    /// ι^* F: the value F(ι(ξ_n)) on the generator of K_n.
    pub fn pushforward(&self, f: &BarCochain) -> Result<SmallCochain> {
        self.check_deg(f.deg)?;
        let alg = self.res.alg();
        let n = f.deg;
        let mut value = AlgElem::zero(alg);
        for (key, v) in self.iota[n].terms.iter() {
            let inner = f.get(&key[1..=n]).mul_mono_left(key[0]).mul_mono_right(key[n + 1]);
            value.add_scaled(&inner, v);
        }
        Ok(SmallCochain { deg: n, value })
    }

    /// Compares π ι with the identity of K_n.
    pub fn pi_iota(&self, engine: &Engine, n: usize) -> Result<PiIota> {
        let back = self.pi_apply(self.iota_generator(n)?)?;
        if back == self.res.generator(n) {
            return Ok(PiIota::Identity);
        }
        for m in engine.admissible(n) {
            let f = engine.basis_cochain(n, m)?;
            if !engine.is_cocycle(&f) {
                continue;
            }
            let g = SmallCochain { deg: n, value: self.res.evaluate(&f.value, &back) };
            if engine.to_class(&g)? != engine.to_class(&f)? {
                return Ok(PiIota::Neither);
            }
        }
        Ok(PiIota::OnCohomology)
    }

    /// The evaluation of a bar generator tuple under π.
    pub fn pi_generator(&self, t: &[Mono]) -> Result<&Chain> {
        self.check_deg(t.len())?;
        Ok(&self.pi[t.len()][encode(self.res.alg(), t)])
    }
}

/// Outcome of comparing the two brackets on one pair of cocycles.
#[derive(Clone, Debug)]
pub struct Agreement {
    /// Class of the φ-bracket in the small complex.
    pub small: crate::bracket::CohomClass,
    /// Class of ι^*[π^* f, π^* g] in the small complex.
    pub transported: crate::bracket::CohomClass,
    /// [π^* f, π^* g] and π^*[f, g]_φ are cohomologous in the bar complex.
    pub bar_equal: bool,
}

impl Agreement {
    pub fn holds(&self) -> bool {
        self.bar_equal && self.small == self.transported
    }
}

/// Compares the φ-bracket of two small cocycles with the bar bracket of their pullbacks.
pub fn compare_brackets(
    engine: &Engine,
    maps: &ComparisonMaps,
    f: &SmallCochain,
    g: &SmallCochain,
) -> Result<Agreement> {
    let small = engine.bracket(f, g)?;
    let bar = bracket_bar(&maps.pullback(f)?, &maps.pullback(g)?)?;
    let back = maps.pushforward(&bar)?;
    let back = engine.cochain(back.deg, back.value)?;
    Ok(Agreement {
        small: engine.to_class(&small)?,
        transported: engine.to_class(&back)?,
        bar_equal: class_equal(&bar, &maps.pullback(&small)?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rand_cochain(alg: &Algebra, deg: usize, seed: u64) -> BarCochain {
        let mut s = seed;
        let monos = alg.monomials();
        BarCochain::from_fn(alg, deg, |_| {
            let mut v = AlgElem::zero(alg);
            for &m in &monos {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let c = ((s >> 33) % 5) as i64 - 2;
                v.add_assign(&AlgElem::term(alg, m, alg.scalar(c)));
            }
            v
        })
    }

    #[test]
    fn differential_examples() {
        let t = Algebra::taft(3).unwrap();
        let f = BarCochain::from_fn(&t, 0, |_| AlgElem::xg(&t, 1, 0));
        let df = hochschild_differential(&f);
        let want = AlgElem::xg(&t, 1, 1).scale(&(t.omega(1) - &t.scalar(1)));
        assert_eq!(df.get(&[Mono::new(0, 1)]), &want);
        let a = Algebra::truncated(3).unwrap();
        let f = BarCochain::from_fn(&a, 0, |_| AlgElem::xg(&a, 2, 0));
        assert!(hochschild_differential(&f).is_zero());
        for (alg, deg) in [(&a, 2), (&t, 1)] {
            let f = rand_cochain(alg, deg, 7);
            assert!(hochschild_differential(&hochschild_differential(&f)).is_zero());
        }
    }

    #[test]
    fn coboundary_columns_match_differential() {
        let t = Algebra::taft(3).unwrap();
        let monos = t.monomials();
        for (t1, v) in [(vec![Mono::new(1, 2)], Mono::new(0, 1)), (vec![], Mono::new(1, 1))] {
            let mut e = BarCochain::zero(&t, t1.len());
            e.set(&t1, AlgElem::mono(&t, v));
            let d = hochschild_differential(&e);
            let col = coboundary_of_basis(&t, &monos, &t1, v);
            let mut from_col = BarCochain::zero(&t, t1.len() + 1);
            for (coord, c) in col {
                let tuple = decode(&t, &monos, coord / t.dim(), t1.len() + 1);
                let mut val = from_col.get(&tuple).clone();
                val.add_assign(&AlgElem::term(&t, monos[coord % t.dim()], c));
                from_col.set(&tuple, val);
            }
            assert_eq!(d, from_col);
        }
    }

    #[test]
    fn circle_degree_one_is_composition() {
        let a = Algebra::truncated(3).unwrap();
        let f = rand_cochain(&a, 1, 1);
        let g = rand_cochain(&a, 1, 2);
        let c = circle_bar(&f, &g).unwrap();
        for m in a.monomials() {
            let mut want = AlgElem::zero(&a);
            for (k, v) in g.get(&[m]).iter() {
                want.add_scaled(f.get(&[*k]), v);
            }
            assert_eq!(c.get(&[m]), &want);
        }
        assert!(bracket_bar(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn class_equality() {
        let a = Algebra::truncated(3).unwrap();
        let res = Resolution::new(&a).unwrap();
        let e = Engine::new(&a, 3).unwrap();
        let maps = ComparisonMaps::build(&res, 3).unwrap();
        let fx = maps.pullback(&e.basis_cochain(1, Mono::new(1, 0)).unwrap()).unwrap();
        let fx2 = maps.pullback(&e.basis_cochain(1, Mono::new(2, 0)).unwrap()).unwrap();
        assert!(class_equal(&fx, &fx).unwrap());
        assert!(!class_equal(&fx, &fx2).unwrap());
        let shifted = fx.add(&hochschild_differential(&rand_cochain(&a, 0, 3))).unwrap();
        assert!(class_equal(&fx, &shifted).unwrap());
        let not_cocycle = rand_cochain(&a, 1, 4);
        assert!(matches!(class_equal(&fx, &not_cocycle), Err(Error::Domain(_))));
    }

    #[test]
    fn comparison_low_degree() {
        let a = Algebra::truncated(3).unwrap();
        let res = Resolution::new(&a).unwrap();
        let maps = ComparisonMaps::build(&res, 2).unwrap();
        let want = LinComb::basis(a.field(), vec![Mono::ONE, Mono::ONE]);
        assert_eq!(maps.iota_generator(0).unwrap().terms, want);
        assert_eq!(maps.pi_generator(&[]).unwrap(), &res.generator(0));
        assert_eq!(maps.pi_generator(&[Mono::new(1, 0)]).unwrap(), &res.generator(1));
    }

    #[test]
    fn bar_dims_truncated() {
        let a = Algebra::truncated(3).unwrap();
        let dims: Vec<usize> = (0..=3).map(|n| bar_hh_dim(&a, n)).collect();
        assert_eq!(dims, vec![3, 2, 2, 2]);
    }
}
