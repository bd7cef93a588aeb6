//! Cochains on the small resolution, the φ-circle product and bracket, the
//! cup product through Δ, and reduction of cocycles to cohomology classes.
//!
//! Each K_n is generated by ξ_n, so a cochain is its value on ξ_n.  In T_p
//! the value must transform like ξ_n under conjugation by g, which leaves
//! the span of x^{n mod 2} g^j.

use std::fmt;

use crate::algebras::{AlgElem, Algebra, Mono};
use crate::diagonal::{diagonal, diagonal2};
use crate::error::{Error, Result};
use crate::homotopy::Phi;
use crate::linalg::Matrix;
use crate::resolution::{Cell, PairCell, Resolution};
use crate::scalars::Cyc;

/// A cochain Hom_{B^e}(K_n, B), stored as the image of ξ_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmallCochain {
    pub deg: usize,
    pub value: AlgElem,
}

/// Coordinates of a cohomology class in the fixed basis of HH^n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CohomClass {
    pub deg: usize,
    pub coords: Vec<Cyc>,
    pub labels: Vec<String>,
}

impl CohomClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Cyc::is_zero)
    }
}

impl fmt::Display for CohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| format!("({c})·{l}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The φ-method engine for one algebra, with φ built to a fixed degree.
#[derive(Clone, Debug)]
pub struct Engine {
    res: Resolution,
    phi: Phi,
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Engine {
    /// Builds the engine with φ on (K ⊗ K)_n for n ≤ `phi_deg`.
    pub fn new(alg: &Algebra, phi_deg: usize) -> Result<Engine> {
        let res = Resolution::new(alg)?;
        let phi = Phi::build(&res, phi_deg)?;
        Ok(Engine { res, phi })
    }

    pub fn resolution(&self) -> &Resolution {
        &self.res
    }

    pub fn alg(&self) -> &Algebra {
        self.res.alg()
    }

    pub fn phi(&self) -> &Phi {
        &self.phi
    }

    /// Monomials allowed as values of degree-n cochains.
    pub fn admissible(&self, deg: usize) -> Vec<Mono> {
        let p = self.res.p();
        if self.alg().is_taft() {
            (0..p).map(|j| Mono::new(deg % 2, j)).collect()
        } else {
            (0..p).map(|i| Mono::new(i, 0)).collect()
        }
    }

    pub fn cochain(&self, deg: usize, value: AlgElem) -> Result<SmallCochain> {
        if value.algebra() != self.alg() {
            return Err(Error::Domain("cochain value in the wrong algebra".into()));
        }
        let allowed = self.admissible(deg);
        if let Some((m, _)) = value.iter().find(|(m, _)| !allowed.contains(m)) {
            return Err(Error::Domain(format!(
                "value term {m} does not define a bimodule map on K_{deg}"
            )));
        }
        Ok(SmallCochain { deg, value })
    }

    /// The cochain ξ_n ↦ m.
    pub fn basis_cochain(&self, deg: usize, m: Mono) -> Result<SmallCochain> {
        self.cochain(deg, AlgElem::mono(self.alg(), m))
    }

    pub fn zero_cochain(&self, deg: usize) -> SmallCochain {
        SmallCochain { deg, value: AlgElem::zero(self.alg()) }
    }

    /// δf = f ∘ d_{n+1}, as a cochain of degree n + 1.
    pub fn coboundary(&self, f: &SmallCochain) -> SmallCochain {
        let d = self.res.differential(&self.res.generator(f.deg + 1)).expect("degree ≥ 1");
        SmallCochain { deg: f.deg + 1, value: self.res.evaluate(&f.value, &d) }
    }

    pub fn is_cocycle(&self, f: &SmallCochain) -> bool {
        self.coboundary(f).value.is_zero()
    }

    /// f ∘_φ g = f φ (id ⊗ g ⊗ id) Δ^{(2)}, evaluated on ξ_{m+n-1}.
    pub fn circle(&self, f: &SmallCochain, g: &SmallCochain) -> Result<SmallCochain> {
        let (m, n) = (f.deg, g.deg);
        if m + n == 0 {
            return Err(Error::Domain("circle product needs |f| + |g| ≥ 1".into()));
        }
        let top = m + n - 1;
        if m == 0 {
            return Ok(self.zero_cochain(top));
        }
        if m - 1 > self.phi.max_deg() {
            return Err(Error::Config(format!(
                "φ built to degree {}, circle product needs {}",
                self.phi.max_deg(),
                m - 1
            )));
        }
        let res = &self.res;
        let mut pair = res.pair_zero(m - 1);
        for (t, v) in diagonal2(res, &res.generator(top)).iter() {
            if t.b != n {
                continue;
            }
            let coeff = v.scale_int(sign(n * t.a));
            let middle = g.value.mul_mono_left(Mono::new(t.j, 0));
            let right = res.left_mul(&middle, &res.cell(t.c, Cell::new(t.m, t.r, t.k)));
            for (rc, rv) in right.terms.iter() {
                let pc = PairCell { a: t.a, b: t.c, l: t.l, j: rc.l, r: rc.r, k: rc.k };
                pair.terms.add_term(pc, &(&coeff * rv));
            }
        }
        let image = self.phi.apply(&pair)?;
        Ok(SmallCochain { deg: top, value: res.evaluate(&f.value, &image) })
    }

    /// [f, g]_φ = f ∘ g − (−1)^{(m-1)(n-1)} g ∘ f.
    pub fn bracket(&self, f: &SmallCochain, g: &SmallCochain) -> Result<SmallCochain> {
        let fg = self.circle(f, g)?;
        let gf = self.circle(g, f)?;
        let s = sign((f.deg + 1) * (g.deg + 1));
        let value = fg.value.sub(&gf.value.scale(&Cyc::from_int(self.alg().field(), s)));
        Ok(SmallCochain { deg: fg.deg, value })
    }

    /// (f ⌣ g)(ξ_{m+n}) = (−1)^{mn} Σ f(x^l ξ_m) · g(x^j ξ_n x^r g^k) over the
    /// (m, n)-component of Δ(ξ_{m+n}).
    pub fn cup(&self, f: &SmallCochain, g: &SmallCochain) -> SmallCochain {
        let (m, n) = (f.deg, g.deg);
        let res = &self.res;
        let mut value = AlgElem::zero(self.alg());
        for (pc, v) in diagonal(res, &res.generator(m + n)).terms.iter() {
            if pc.a != m {
                continue;
            }
            let left = f.value.mul_mono_left(Mono::new(pc.l, 0));
            let right = res.evaluate(&g.value, &res.pair_right(pc));
            value.add_scaled(&left.mul(&right), v);
        }
        let s = Cyc::from_int(self.alg().field(), sign(m * n));
        SmallCochain { deg: m + n, value: value.scale(&s) }
    }

    fn coords(&self, a: &AlgElem) -> Vec<Cyc> {
        let alg = self.alg();
        let mut v = vec![alg.zero_scalar(); alg.dim()];
        for (m, c) in a.iter() {
            v[alg.index(*m)] = c.clone();
        }
        v
    }

    /// Values spanning the coboundaries B^n.
    pub fn coboundary_span(&self, deg: usize) -> Vec<AlgElem> {
        if deg == 0 {
            return Vec::new();
        }
        self.admissible(deg - 1)
            .into_iter()
            .map(|m| self.coboundary(&SmallCochain { deg: deg - 1, value: AlgElem::mono(self.alg(), m) }).value)
            .filter(|v| !v.is_zero())
            .collect()
    }

    /// Representatives of a basis of HH^n, with display labels.
    pub fn class_basis(&self, deg: usize) -> Vec<(AlgElem, String)> {
        let alg = self.alg();
        let p = alg.p();
        if alg.is_taft() {
            let m = Mono::new(deg % 2, 0);
            let label = if deg % 2 == 1 { "f̃_{xg^0}".to_string() } else { "f̃_{g^0}".to_string() };
            return vec![(AlgElem::mono(alg, m), label)];
        }
        let range: Vec<usize> = if deg == 0 {
            (0..p).collect()
        } else if deg % 2 == 1 {
            (1..p).collect()
        } else {
            (0..p - 1).collect()
        };
        range
            .into_iter()
            .map(|i| (AlgElem::xg(alg, i, 0), format!("x^{i} ξ{deg}*")))
            .collect()
    }

    /// The class of a cocycle in the basis `class_basis(deg)`.
    pub fn to_class(&self, f: &SmallCochain) -> Result<CohomClass> {
        if !self.is_cocycle(f) {
            return Err(Error::Domain(format!("degree-{} cochain {} is not a cocycle", f.deg, f.value)));
        }
        let reps = self.class_basis(f.deg);
        let bounds = self.coboundary_span(f.deg);
        let zero = self.alg().zero_scalar();
        let mut cols: Vec<Vec<Cyc>> = reps.iter().map(|(r, _)| self.coords(r)).collect();
        cols.extend(bounds.iter().map(|b| self.coords(b)));
        let mat = Matrix::from_columns(&zero, self.alg().dim(), &cols);
        let sol = mat.solve(&self.coords(&f.value)).ok_or_else(|| {
            Error::Invariant(format!("cocycle {} outside the predicted cohomology", f.value))
        })?;
        Ok(CohomClass {
            deg: f.deg,
            coords: sol[..reps.len()].to_vec(),
            labels: reps.into_iter().map(|(_, l)| l).collect(),
        })
    }

    /// Checks that the representatives together with B^n form a basis of Z^n.
    pub fn check_class_basis(&self, deg: usize) -> Result<()> {
        let reps = self.class_basis(deg);
        for (r, _) in &reps {
            if !self.is_cocycle(&SmallCochain { deg, value: r.clone() }) {
                return Err(Error::Invariant(format!("representative {r} is not a cocycle")));
            }
        }
        let zero = self.alg().zero_scalar();
        let bounds = self.coboundary_span(deg);
        let mut cols: Vec<Vec<Cyc>> = reps.iter().map(|(r, _)| self.coords(r)).collect();
        cols.extend(bounds.iter().map(|b| self.coords(b)));
        let rank_all = Matrix::from_columns(&zero, self.alg().dim(), &cols).rank();
        let b_cols: Vec<Vec<Cyc>> = bounds.iter().map(|b| self.coords(b)).collect();
        let rank_b = Matrix::from_columns(&zero, self.alg().dim(), &b_cols).rank();
        if rank_all != rank_b + reps.len() || reps.len() != self.hh_dim(deg) {
            return Err(Error::Invariant(format!("class basis in degree {deg} is not a basis")));
        }
        Ok(())
    }

    /// dim HH^n = dim Z^n − dim B^n from the Hom complex.
    pub fn hh_dim(&self, deg: usize) -> usize {
        let zero = self.alg().zero_scalar();
        let adm = self.admissible(deg);
        let images: Vec<Vec<Cyc>> = adm
            .iter()
            .map(|m| self.coords(&self.coboundary(&SmallCochain { deg, value: AlgElem::mono(self.alg(), *m) }).value))
            .collect();
        let rank_d = Matrix::from_columns(&zero, self.alg().dim(), &images).rank();
        let bounds: Vec<Vec<Cyc>> = self.coboundary_span(deg).iter().map(|b| self.coords(b)).collect();
        let rank_b = if bounds.is_empty() {
            0
        } else {
            Matrix::from_columns(&zero, self.alg().dim(), &bounds).rank()
        };
        adm.len() - rank_d - rank_b
    }

    /// [f⌣g, h] = [f, h]⌣g + (−1)^{|f|(|h|−1)} f⌣[g, h] on cohomology.
    pub fn derivation_identity(
        &self,
        f: &SmallCochain,
        g: &SmallCochain,
        h: &SmallCochain,
    ) -> Result<bool> {
        let lhs = self.bracket(&self.cup(f, g), h)?;
        let t1 = self.cup(&self.bracket(f, h)?, g);
        let t2 = self.cup(f, &self.bracket(g, h)?);
        let s = Cyc::from_int(self.alg().field(), sign(f.deg * (h.deg + 1)));
        let rhs = SmallCochain { deg: lhs.deg, value: t1.value.add(&t2.value.scale(&s)) };
        Ok(self.to_class(&lhs)? == self.to_class(&rhs)?)
    }

    /// A human-readable name for a basis cochain.
    pub fn label(&self, deg: usize, m: Mono) -> String {
        if self.alg().is_taft() {
            if m.x == 1 {
                format!("f̃_{{xg^{}}}", m.g)
            } else {
                format!("f̃_{{g^{}}}", m.g)
            }
        } else {
            format!("x^{} ξ{}*", m.x, deg)
        }
    }
}
