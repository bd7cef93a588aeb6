//! The contracting homotopy φ for F = μ ⊗ id − id ⊗ μ on K ⊗_B K, built
//! degree by degree from h:  φ_n = h_n (F_n − φ_{n-1} d)  with φ_{-1} = 0.
//!
//! φ is determined by its values on the generators ξ_a ⊗ x^j ξ_b and is
//! extended B-bilinearly.  Those values never involve g, so one table serves
//! both A and T_p.

use std::collections::BTreeMap;

use crate::algebras::{AlgElem, Mono};
use crate::error::{Error, Result};
use crate::resolution::{Cell, Chain, PairCell, PairChain, Resolution};

#[derive(Clone, Debug)]
pub struct Phi {
    res: Resolution,
    max_deg: usize,
    /// φ(ξ_a ⊗ x^j ξ_b), keyed by (a, b, j).
    table: BTreeMap<(usize, usize, usize), Chain>,
}

impl Phi {
    /// Builds φ on (K ⊗ K)_n for all n ≤ `max_deg`.
    pub fn build(res: &Resolution, max_deg: usize) -> Result<Phi> {
        let mut phi = Phi { res: res.clone(), max_deg: 0, table: BTreeMap::new() };
        let p = res.p();
        for n in 0..=max_deg {
            phi.max_deg = n;
            for a in 0..=n {
                let b = n - a;
                for j in 0..p {
                    let gen = PairCell { a, b, l: 0, j, r: 0, k: 0 };
                    let pc = res.pair_cell(gen);
                    let mut target = res.f_map(&pc);
                    if n > 0 {
                        let lower = phi.apply(&res.pair_differential(&pc)?)?;
                        target.terms.sub_assign(&lower.terms);
                    }
                    let value = res.h(&target);
                    phi.table.insert((a, b, j), value);
                }
            }
        }
        phi.check_closed_forms()?;
        Ok(phi)
    }

    pub fn resolution(&self) -> &Resolution {
        &self.res
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    pub fn on_generator(&self, a: usize, b: usize, j: usize) -> Result<&Chain> {
        self.table.get(&(a, b, j)).ok_or_else(|| {
            Error::Config(format!("φ built to degree {}, asked for ({a},{b})", self.max_deg))
        })
    }

    /// φ(x^l ξ_a ⊗ x^j ξ_b x^r g^k) = x^l φ(ξ_a ⊗ x^j ξ_b) x^r g^k.
    pub fn apply(&self, pc: &PairChain) -> Result<Chain> {
        let mut out = self.res.zero(pc.deg + 1);
        for (c, v) in pc.terms.iter() {
            let base = self.on_generator(c.a, c.b, c.j)?;
            for (bc, bv) in base.terms.iter() {
                let Some((lc, e1)) = self.res.left_mono(Mono::new(c.l, 0), pc.deg + 1, *bc) else {
                    continue;
                };
                let Some((rc, e2)) = self.res.right_mono(lc, Mono::new(c.r, c.k)) else {
                    continue;
                };
                let coeff = &(v * bv) * self.res.alg().omega((e1 + e2) as i64);
                out.terms.add_term(rc, &coeff);
            }
        }
        Ok(out)
    }

    /// φ_0 and φ_1 on generators agree with their closed forms:
    /// φ_0(ξ_0 ⊗ x^i ξ_0) = Σ_{l<i} x^l ξ_1 x^{i-1-l},
    /// φ_1(ξ_1 ⊗ x^i ξ_0) = −δ_{i,p-1} ξ_2,  φ_1(ξ_0 ⊗ x^i ξ_1) = δ_{i,p-1} ξ_2.
    fn check_closed_forms(&self) -> Result<()> {
        let res = &self.res;
        let p = res.p();
        for i in 0..p {
            if let Some(v) = self.table.get(&(0, 0, i)) {
                let mut want = res.zero(1);
                for l in 0..i {
                    want.terms.add_term(Cell::new(l, i - 1 - l, 0), &res.one_scalar());
                }
                if *v != want {
                    return Err(Error::Invariant(format!("φ_0 closed form fails at i = {i}")));
                }
            }
            let delta = if i == p - 1 { res.generator(2) } else { res.zero(2) };
            if let Some(v) = self.table.get(&(1, 0, i)) {
                if v.terms != delta.terms.neg() {
                    return Err(Error::Invariant(format!("φ_1(ξ_1⊗x^{i}ξ_0) closed form fails")));
                }
            }
            if let Some(v) = self.table.get(&(0, 1, i)) {
                if v.terms != delta.terms {
                    return Err(Error::Invariant(format!("φ_1(ξ_0⊗x^{i}ξ_1) closed form fails")));
                }
            }
        }
        Ok(())
    }
}

/// Checks μ h_{-1} = id (n = −1), h_{-1} μ + d h_0 = id (n = 0) or
/// h_{n-1} d + d h_n = id (n ≥ 1) on every basis element.
pub fn contracting_identity(res: &Resolution, n: i64) -> Result<bool> {
    if n < -1 {
        return Err(Error::Domain(format!("degree {n} below −1")));
    }
    if n == -1 {
        for m in res.alg().monomials() {
            let a = AlgElem::mono(res.alg(), m);
            if res.augment(&res.h_minus1(&a))? != a {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    let n = n as usize;
    for c in res.basis(n) {
        let ch = res.cell(n, c);
        let mut total = res.differential(&res.h(&ch))?;
        let lower = if n == 0 {
            res.h_minus1(&res.augment(&ch)?)
        } else {
            res.h(&res.differential(&ch)?)
        };
        total.terms.add_assign(&lower.terms);
        if total != ch {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks d φ + φ d = F on every basis element of (K ⊗ K)_n.
pub fn phi_identity(phi: &Phi, n: usize) -> Result<bool> {
    let res = phi.resolution();
    for c in res.pair_basis(n) {
        let pc = res.pair_cell(c);
        let mut lhs = res.differential(&phi.apply(&pc)?)?;
        if n > 0 {
            let rest = phi.apply(&res.pair_differential(&pc)?)?;
            lhs.terms.add_assign(&rest.terms);
        }
        if lhs != res.f_map(&pc) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks d ∘ d = 0 on K_n (n ≥ 2) and μ ∘ d = 0 (n = 1).
pub fn d_squared_zero(res: &Resolution, n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    for c in res.basis(n) {
        let d1 = res.differential(&res.cell(n, c))?;
        let zero = if n == 1 { res.augment(&d1)?.is_zero() } else { res.differential(&d1)?.is_zero() };
        if !zero {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{Algebra, AlgebraKind};

    #[test]
    fn homotopy_contracts_p3() {
        for kind in [AlgebraKind::TruncPoly, AlgebraKind::Taft] {
            let res = Resolution::new(&Algebra::new(kind, 3).unwrap()).unwrap();
            for n in -1..=5 {
                assert!(contracting_identity(&res, n).unwrap(), "{kind:?} n = {n}");
            }
        }
    }

    #[test]
    fn phi_is_a_homotopy_p3() {
        for kind in [AlgebraKind::TruncPoly, AlgebraKind::Taft] {
            let res = Resolution::new(&Algebra::new(kind, 3).unwrap()).unwrap();
            let phi = Phi::build(&res, 4).unwrap();
            for n in 0..=4 {
                assert!(phi_identity(&phi, n).unwrap(), "{kind:?} n = {n}");
            }
        }
    }

    #[test]
    fn phi_beyond_table_is_config_error() {
        let res = Resolution::new(&Algebra::truncated(3).unwrap()).unwrap();
        let phi = Phi::build(&res, 1).unwrap();
        let pc = res.pair_cell(PairCell { a: 2, b: 0, l: 0, j: 0, r: 0, k: 0 });
        assert!(matches!(phi.apply(&pc), Err(Error::Config(_))));
    }
}
