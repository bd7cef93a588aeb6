//! The 2-periodic bimodule resolution K → B of B = A or T_p, and its tensor
//! square K ⊗_B K.
//!
//! K_n is spanned by x^l ξ_n x^r g^k.  The differential is
//! d ξ_n = x ξ_{n-1} − ξ_{n-1} x for n odd and Σ_{a+b=p-1} x^a ξ_{n-1} x^b
//! for n even.  In T_p the generator ξ_n carries the character ω^{n mod 2}:
//! g ξ_n = ω^{n mod 2} ξ_n g, which is what makes the differentials
//! T_p-bilinear.

use std::fmt;

use crate::algebras::{AlgElem, Algebra, AlgebraKind, Mono};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalars::Cyc;

/// The basis element x^l ξ_n x^r g^k of K_n (the degree is carried by the chain).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub l: usize,
    pub r: usize,
    pub k: usize,
}

impl Cell {
    pub const GEN: Cell = Cell { l: 0, r: 0, k: 0 };

    pub fn new(l: usize, r: usize, k: usize) -> Cell {
        Cell { l, r, k }
    }
}

/// A homogeneous element of K_n.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    pub deg: usize,
    pub terms: LinComb<Cell>,
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, v)| format!("({v})·x^{}ξ{}x^{}g^{}", c.l, self.deg, c.r, c.k))
            .collect();
        write!(f, "[{}]", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

impl Chain {
    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

/// x^l ξ_a ⊗ x^j ξ_b x^r g^k, the normal form of a basis element of K_a ⊗_B K_b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairCell {
    pub a: usize,
    pub b: usize,
    pub l: usize,
    pub j: usize,
    pub r: usize,
    pub k: usize,
}

/// A homogeneous element of (K ⊗_B K)_n, n = a + b.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairChain {
    pub deg: usize,
    pub terms: LinComb<PairCell>,
}

impl PairChain {
    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

/// x^l ξ_a ⊗ x^j ξ_b ⊗ x^m ξ_c x^r g^k in K ⊗_B K ⊗_B K.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleCell {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub l: usize,
    pub j: usize,
    pub m: usize,
    pub r: usize,
    pub k: usize,
}

/// One term of a raw (not yet normalized) pair
/// (x^{l1} ξ_a x^{r1} g^{k1}) ⊗ (x^{l2} ξ_b x^{r2} g^{k2}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawPair {
    pub a: usize,
    pub left: Cell,
    pub b: usize,
    pub right: Cell,
}

/// The small resolution of A or T_p.
#[derive(Clone, Debug)]
pub struct Resolution {
    alg: Algebra,
}

impl Resolution {
    pub fn new(alg: &Algebra) -> Result<Resolution> {
        match alg.kind() {
            AlgebraKind::TruncPoly | AlgebraKind::Taft => Ok(Resolution { alg: alg.clone() }),
            AlgebraKind::GroupAlg => {
                Err(Error::Domain("the small resolution is built for A and T_p".into()))
            }
        }
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn p(&self) -> usize {
        self.alg.p()
    }

    fn one(&self) -> Cyc {
        Cyc::one(self.alg.field())
    }

    /// The exponent of the character of ξ_n: 1 for odd n in T_p, else 0.
    pub fn twist(&self, n: usize) -> usize {
        if self.alg.is_taft() {
            n % 2
        } else {
            0
        }
    }

    /// Number of g-powers (1 for A, p for T_p).
    pub fn g_order(&self) -> usize {
        if self.alg.is_taft() {
            self.p()
        } else {
            1
        }
    }

    pub fn zero(&self, deg: usize) -> Chain {
        Chain { deg, terms: LinComb::zero(self.alg.field()) }
    }

    pub fn cell(&self, deg: usize, c: Cell) -> Chain {
        Chain { deg, terms: LinComb::basis(self.alg.field(), c) }
    }

    pub fn generator(&self, deg: usize) -> Chain {
        self.cell(deg, Cell::GEN)
    }

    pub fn basis(&self, _deg: usize) -> Vec<Cell> {
        let p = self.p();
        let mut out = Vec::new();
        for l in 0..p {
            for r in 0..p {
                for k in 0..self.g_order() {
                    out.push(Cell::new(l, r, k));
                }
            }
        }
        out
    }

    /// x^a g^b · (x^i ξ_n x^j g^k) = ω^{b(i+j+ε(n))} x^{a+i} ξ_n x^j g^{k+b}.
    #[inline]
    pub fn left_mono(&self, m: Mono, deg: usize, c: Cell) -> Option<(Cell, usize)> {
        let p = self.p();
        if m.x + c.l >= p {
            return None;
        }
        let e = (m.g * (c.l + c.r + self.twist(deg))) % p;
        Some((Cell::new(m.x + c.l, c.r, (c.k + m.g) % p), e))
    }

    /// (x^i ξ_n x^j g^k) · x^a g^b = ω^{ka} x^i ξ_n x^{j+a} g^{k+b}.
    #[inline]
    pub fn right_mono(&self, c: Cell, m: Mono) -> Option<(Cell, usize)> {
        let p = self.p();
        if c.r + m.x >= p {
            return None;
        }
        Some((Cell::new(c.l, c.r + m.x, (c.k + m.g) % p), (c.k * m.x) % p))
    }

    pub fn left_mul(&self, a: &AlgElem, ch: &Chain) -> Chain {
        let mut out = self.zero(ch.deg);
        for (m, cm) in a.iter() {
            for (c, cc) in ch.terms.iter() {
                if let Some((n, e)) = self.left_mono(*m, ch.deg, *c) {
                    out.terms.add_term(n, &(&(cm * cc) * self.alg.omega(e as i64)));
                }
            }
        }
        out
    }

    pub fn right_mul(&self, ch: &Chain, a: &AlgElem) -> Chain {
        let mut out = self.zero(ch.deg);
        for (c, cc) in ch.terms.iter() {
            for (m, cm) in a.iter() {
                if let Some((n, e)) = self.right_mono(*c, *m) {
                    out.terms.add_term(n, &(&(cm * cc) * self.alg.omega(e as i64)));
                }
            }
        }
        out
    }

    /// d ξ_n as a list of (l, r, coefficient sign) with d ξ_n = Σ ± x^l ξ_{n-1} x^r.
    fn d_generator(&self, n: usize) -> Vec<(usize, usize, i64)> {
        let p = self.p();
        if n % 2 == 1 {
            vec![(1, 0, 1), (0, 1, -1)]
        } else {
            (0..p).map(|a| (a, p - 1 - a, 1)).collect()
        }
    }

    /// d : K_n → K_{n-1}, n ≥ 1.
    pub fn differential(&self, ch: &Chain) -> Result<Chain> {
        if ch.deg == 0 {
            return Err(Error::Domain("differential on K_0; use augment".into()));
        }
        let p = self.p();
        let gen = self.d_generator(ch.deg);
        let mut out = self.zero(ch.deg - 1);
        for (c, v) in ch.terms.iter() {
            for &(dl, dr, s) in &gen {
                let (l, r) = (c.l + dl, c.r + dr);
                if l < p && r < p {
                    out.terms.add_term(Cell::new(l, r, c.k), &v.scale_int(s));
                }
            }
        }
        Ok(out)
    }

    /// μ : K_0 → B, x^l ξ_0 x^r g^k ↦ x^{l+r} g^k.
    pub fn augment(&self, ch: &Chain) -> Result<AlgElem> {
        if ch.deg != 0 {
            return Err(Error::Domain(format!("augmentation on K_{}", ch.deg)));
        }
        let mut out = AlgElem::zero(&self.alg);
        for (c, v) in ch.terms.iter() {
            if c.l + c.r < self.p() {
                out.add_assign(&AlgElem::term(&self.alg, Mono::new(c.l + c.r, c.k), v.clone()));
            }
        }
        Ok(out)
    }

    /// The B-bimodule map ξ_n ↦ value, applied to a chain: x^l ξ x^r g^k ↦ x^l v x^r g^k.
    pub fn evaluate(&self, value: &AlgElem, ch: &Chain) -> AlgElem {
        let mut out = AlgElem::zero(&self.alg);
        for (c, v) in ch.terms.iter() {
            let t = value.mul_mono_left(Mono::new(c.l, 0)).mul_mono_right(Mono::new(c.r, c.k));
            out.add_scaled(&t, v);
        }
        out
    }

    // ---- contracting homotopy -------------------------------------------------

    /// h_{-1} : B → K_0, x^i g^k ↦ ξ_0 x^i g^k.
    pub fn h_minus1(&self, a: &AlgElem) -> Chain {
        let mut out = self.zero(0);
        for (m, v) in a.iter() {
            out.terms.add_term(Cell::new(0, m.x, m.g), v);
        }
        out
    }

    /// The k-linear contracting homotopy h_n : K_n → K_{n+1}.
    pub fn h(&self, ch: &Chain) -> Chain {
        let p = self.p();
        let n = ch.deg;
        let mut out = self.zero(n + 1);
        for (c, v) in ch.terms.iter() {
            let (i, j, k) = (c.l, c.r, c.k);
            match n {
                0 => {
                    for l in 0..i {
                        if i + j - 1 - l < p {
                            out.terms.add_term(Cell::new(l, i + j - 1 - l, k), v);
                        }
                    }
                }
                1 => {
                    if i == p - 1 {
                        out.terms.add_term(Cell::new(j, 0, k), v);
                    }
                }
                _ if n.is_multiple_of(2) => {
                    let neg = -v;
                    for l in 0..j {
                        if i + j - 1 - l < p {
                            out.terms.add_term(Cell::new(i + j - 1 - l, l, k), &neg);
                        }
                    }
                }
                _ => {
                    if j == p - 1 {
                        out.terms.add_term(Cell::new(i, 0, k), v);
                    }
                }
            }
        }
        out
    }

    // ---- tensor square ------------------------------------------------------

    pub fn pair_zero(&self, deg: usize) -> PairChain {
        PairChain { deg, terms: LinComb::zero(self.alg.field()) }
    }

    pub fn pair_basis(&self, deg: usize) -> Vec<PairCell> {
        let p = self.p();
        let mut out = Vec::new();
        for a in 0..=deg {
            let b = deg - a;
            for l in 0..p {
                for j in 0..p {
                    for r in 0..p {
                        for k in 0..self.g_order() {
                            out.push(PairCell { a, b, l, j, r, k });
                        }
                    }
                }
            }
        }
        out
    }

    /// Normal form of a raw pair:
    /// x^{l1} ξ_a x^{r1} g^{k1} ⊗ x^{l2} ξ_b x^{r2} g^{k2}
    ///   = ω^{k1(l2+ε(b)+r2)} x^{l1} ξ_a ⊗ x^{r1+l2} ξ_b x^{r2} g^{k1+k2}.
    pub fn normalize(&self, raw: RawPair) -> Option<(PairCell, usize)> {
        let m = Mono::new(raw.left.r, raw.left.k);
        let (c, e) = self.left_mono(m, raw.b, raw.right)?;
        Some((PairCell { a: raw.a, b: raw.b, l: raw.left.l, j: c.l, r: c.r, k: c.k }, e))
    }

    /// The map normalizing raw pairs the way the displayed isomorphism does,
    /// with factor ω^{k1(l2+r2)}: it ignores the character of ξ_b.
    pub fn normalize_untwisted(&self, raw: RawPair) -> Option<(PairCell, usize)> {
        let p = self.p();
        let (l1, r1, k1) = (raw.left.l, raw.left.r, raw.left.k);
        let (l2, r2, k2) = (raw.right.l, raw.right.r, raw.right.k);
        if r1 + l2 >= p {
            return None;
        }
        let e = (k1 * (l2 + r2)) % p;
        Some((PairCell { a: raw.a, b: raw.b, l: l1, j: r1 + l2, r: r2, k: (k1 + k2) % p }, e))
    }

    fn add_raw(&self, out: &mut PairChain, raw: RawPair, v: &Cyc) {
        if let Some((pc, e)) = self.normalize(raw) {
            out.terms.add_term(pc, &(v * self.alg.omega(e as i64)));
        }
    }

    /// d(L ⊗ R) = dL ⊗ R + (−1)^a L ⊗ dR on K ⊗_B K.
    pub fn pair_differential(&self, pc: &PairChain) -> Result<PairChain> {
        if pc.deg == 0 {
            return Err(Error::Domain("differential on (K ⊗ K)_0".into()));
        }
        let p = self.p();
        let mut out = self.pair_zero(pc.deg - 1);
        for (c, v) in pc.terms.iter() {
            if c.a >= 1 {
                for (dl, dr, s) in self.d_generator(c.a) {
                    if c.l + dl >= p {
                        continue;
                    }
                    let raw = RawPair {
                        a: c.a - 1,
                        left: Cell::new(c.l + dl, dr, 0),
                        b: c.b,
                        right: Cell::new(c.j, c.r, c.k),
                    };
                    self.add_raw(&mut out, raw, &v.scale_int(s));
                }
            }
            if c.b >= 1 {
                let sign = if c.a % 2 == 0 { 1 } else { -1 };
                for (dl, dr, s) in self.d_generator(c.b) {
                    let (j, r) = (c.j + dl, c.r + dr);
                    if j < p && r < p {
                        let pcell = PairCell { a: c.a, b: c.b - 1, l: c.l, j, r, k: c.k };
                        out.terms.add_term(pcell, &v.scale_int(sign * s));
                    }
                }
            }
        }
        Ok(out)
    }

    /// F = μ ⊗ id − id ⊗ μ : (K ⊗_B K)_n → K_n.
    pub fn f_map(&self, pc: &PairChain) -> Chain {
        let p = self.p();
        let mut out = self.zero(pc.deg);
        for (c, v) in pc.terms.iter() {
            if c.a == 0 && c.l + c.j < p {
                out.terms.add_term(Cell::new(c.l + c.j, c.r, c.k), v);
            }
            if c.b == 0 && c.j + c.r < p {
                out.terms.add_term(Cell::new(c.l, c.j + c.r, c.k), &-v);
            }
        }
        out
    }

    /// F evaluated on a raw pair through the module structure directly.
    pub fn f_map_raw(&self, raw: RawPair) -> Chain {
        let mut out = self.zero(raw.a + raw.b);
        if raw.a == 0 {
            let m = Mono::new(raw.left.l + raw.left.r, raw.left.k);
            if m.x < self.p() {
                if let Some((c, e)) = self.left_mono(m, raw.b, raw.right) {
                    out.terms.add_term(c, self.alg.omega(e as i64));
                }
            }
        }
        if raw.b == 0 {
            let m = Mono::new(raw.right.l + raw.right.r, raw.right.k);
            if m.x < self.p() {
                if let Some((c, e)) = self.right_mono(raw.left, m) {
                    out.terms.add_term(c, &-self.alg.omega(e as i64));
                }
            }
        }
        out
    }

    /// Right factor of a pair cell as a chain in K_b.
    pub fn pair_right(&self, c: &PairCell) -> Chain {
        self.cell(c.b, Cell::new(c.j, c.r, c.k))
    }

    pub fn pair_cell(&self, c: PairCell) -> PairChain {
        PairChain { deg: c.a + c.b, terms: LinComb::basis(self.alg.field(), c) }
    }

    /// Left B-action on a pair chain: x^c g^e · (x^l ξ_a ⊗ R) = ω^{e(l+ε(a))} x^{c+l} ξ_a ⊗ g^e R.
    pub fn pair_left_mono(&self, m: Mono, c: &PairCell) -> Option<(PairCell, usize)> {
        let p = self.p();
        if m.x + c.l >= p {
            return None;
        }
        let e1 = (m.g * (c.l + self.twist(c.a))) % p;
        let (rc, e2) = self.left_mono(Mono::new(0, m.g), c.b, Cell::new(c.j, c.r, c.k))?;
        Some((PairCell { a: c.a, b: c.b, l: m.x + c.l, j: rc.l, r: rc.r, k: rc.k }, (e1 + e2) % p))
    }

    pub fn pair_right_mono(&self, c: &PairCell, m: Mono) -> Option<(PairCell, usize)> {
        let (rc, e) = self.right_mono(Cell::new(c.j, c.r, c.k), m)?;
        Some((PairCell { j: rc.l, r: rc.r, k: rc.k, ..*c }, e))
    }

    pub fn one_scalar(&self) -> Cyc {
        self.one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(kind: AlgebraKind, p: usize) -> Resolution {
        Resolution::new(&Algebra::new(kind, p).unwrap()).unwrap()
    }

    #[test]
    fn d_squared_vanishes_on_generators() {
        for p in [3, 5] {
            let r = res(AlgebraKind::Taft, p);
            for n in 2..=6 {
                let d1 = r.differential(&r.generator(n)).unwrap();
                assert!(r.differential(&d1).unwrap().is_zero());
            }
            let d1 = r.differential(&r.generator(1)).unwrap();
            assert!(r.augment(&d1).unwrap().is_zero());
        }
    }

    #[test]
    fn twist_makes_differential_bilinear() {
        let r = res(AlgebraKind::Taft, 5);
        let g = AlgElem::xg(r.alg(), 0, 1);
        for n in 1..=4 {
            for c in r.basis(n) {
                let ch = r.cell(n, c);
                let lhs = r.differential(&r.left_mul(&g, &ch)).unwrap();
                let rhs = r.left_mul(&g, &r.differential(&ch).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn homotopy_low_degrees() {
        let r = res(AlgebraKind::TruncPoly, 3);
        // h_0(x^2 ξ_0) = ξ_1 x + x ξ_1
        let h = r.h(&r.cell(0, Cell::new(2, 0, 0)));
        let mut want = r.zero(1);
        want.terms.add_term(Cell::new(0, 1, 0), &r.one());
        want.terms.add_term(Cell::new(1, 0, 0), &r.one());
        assert_eq!(h, want);
        assert_eq!(r.h(&r.cell(1, Cell::new(2, 1, 0))), r.cell(2, Cell::new(1, 0, 0)));
        assert!(r.h(&r.cell(1, Cell::new(1, 1, 0))).is_zero());
    }

    #[test]
    fn normalization_carries_twist() {
        let r = res(AlgebraKind::Taft, 3);
        let raw = RawPair { a: 0, left: Cell::new(0, 0, 1), b: 1, right: Cell::new(0, 0, 0) };
        let (pc, e) = r.normalize(raw).unwrap();
        assert_eq!(e, 1);
        assert_eq!(pc, PairCell { a: 0, b: 1, l: 0, j: 0, r: 0, k: 1 });
        assert_eq!(r.normalize_untwisted(raw).unwrap().1, 0);
    }

    #[test]
    fn group_algebra_rejected() {
        assert!(Resolution::new(&Algebra::group(3).unwrap()).is_err());
    }
}
