//! Exact arithmetic in the rationals and in the cyclotomic field ℚ(ω).
//!
//! An element of ℚ(ω) is stored as a residue of ℚ[t] modulo the cyclotomic
//! polynomial Φ_p, in the basis 1, t, …, t^{deg Φ_p − 1}.  Since Φ_p is the
//! minimal polynomial of ω, equality is coefficient equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Polynomial over ℤ, lowest coefficient first.
pub type IntPoly = Vec<BigInt>;

fn trim_int(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Exact division of `num` by the monic polynomial `den`.
fn div_monic(num: &IntPoly, den: &IntPoly) -> Result<IntPoly> {
    let mut rem = num.clone();
    let dd = den.len() - 1;
    if num.len() < den.len() {
        return Err(Error::Invariant("division of polynomial by larger degree".into()));
    }
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::Invariant("inexact cyclotomic division".into()));
    }
    Ok(trim_int(quot))
}

/// The n-th cyclotomic polynomial, computed as (t^n − 1) / ∏_{d | n, d < n} Φ_d.
pub fn cyclotomic_polynomial(n: u32) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::Domain(format!("cyclotomic polynomial of order {n}")));
    }
    let mut poly: IntPoly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = div_monic(&poly, &cyclotomic_polynomial(d)?)?;
        }
    }
    Ok(poly)
}

/// Φ_p for p ≥ 2, as the public entry point (the order-1 case is internal).
pub fn cyclotomic_polynomial_checked(p: u32) -> Result<IntPoly> {
    if p < 2 {
        return Err(Error::Domain(format!("cyclotomic polynomial needs p ≥ 2, got {p}")));
    }
    cyclotomic_polynomial(p)
}

/// Shared data for ℚ(ω_p): the modulus and the reductions of t^e.
#[derive(Debug)]
pub struct CycField {
    p: u32,
    phi: IntPoly,
    degree: usize,
    /// `powers[e]` = t^e mod Φ_p, for 0 ≤ e < max(2·degree, p).
    powers: Vec<Vec<BigInt>>,
}

static FIELDS: Lazy<Mutex<HashMap<u32, Arc<CycField>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

impl CycField {
    /// The cached field ℚ(ω_p).
    pub fn get(p: u32) -> Result<Arc<CycField>> {
        if p < 2 {
            return Err(Error::Domain(format!("root-of-unity order must be ≥ 2, got {p}")));
        }
        let mut cache = FIELDS.lock().expect("field cache poisoned");
        if let Some(f) = cache.get(&p) {
            return Ok(f.clone());
        }
        let phi = cyclotomic_polynomial(p)?;
        let degree = phi.len() - 1;
        let count = (2 * degree).max(p as usize + 1);
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(count);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by t and reduce with the monic Φ_p
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &phi[i];
                }
            }
        }
        let field = Arc::new(CycField { p, phi, degree, powers });
        cache.insert(p, field.clone());
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }
}

/// An element of ℚ(ω), ω a primitive p-th root of unity.
#[derive(Clone)]
pub struct Cyc {
    field: Arc<CycField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.field.p == other.field.p && self.coeffs == other.coeffs
    }
}

impl Eq for Cyc {}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = e == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "ω")?,
                _ => write!(f, "ω^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn rat_poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Division with remainder in ℚ[t]; `b` must be nonzero.
fn rat_poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = rat_poly_trim(b.to_vec());
    let mut rem = rat_poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap().clone() / &lead;
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &c * bi;
        }
        quot[shift] = c;
        rem = rat_poly_trim(rem);
    }
    (quot, rem)
}

fn rat_poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn rat_poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    rat_poly_trim(out)
}

impl Cyc {
    pub fn zero(field: &Arc<CycField>) -> Cyc {
        Cyc { field: field.clone(), coeffs: vec![Rational::zero(); field.degree] }
    }

    pub fn one(field: &Arc<CycField>) -> Cyc {
        Cyc::from_rational(field, Rational::one())
    }

    pub fn from_int(field: &Arc<CycField>, n: i64) -> Cyc {
        Cyc::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(field: &Arc<CycField>, r: Rational) -> Cyc {
        let mut c = Cyc::zero(field);
        c.coeffs[0] = r;
        c
    }

    /// Builds an element from an arbitrary polynomial in t, reducing modulo Φ_p.
    pub fn from_poly(field: &Arc<CycField>, poly: &[Rational]) -> Cyc {
        let mut c = Cyc::zero(field);
        for (e, a) in poly.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            c.add_scaled_power(e, a);
        }
        c
    }

    fn add_scaled_power(&mut self, e: usize, a: &Rational) {
        if e < self.field.degree {
            self.coeffs[e] += a;
            return;
        }
        let field = self.field.clone();
        let reduced: Vec<BigInt> = if e < field.powers.len() {
            field.powers[e].clone()
        } else {
            // t^e = t^(e mod p) since Φ_p divides t^p − 1
            field.powers[e % field.p as usize].clone()
        };
        for (i, r) in reduced.iter().enumerate() {
            if !r.is_zero() {
                self.coeffs[i] += a * Rational::from_integer(r.clone());
            }
        }
    }

    /// ω^e for any integer exponent.
    pub fn omega_power(field: &Arc<CycField>, e: i64) -> Cyc {
        let p = field.p as i64;
        let e = e.rem_euclid(p) as usize;
        let mut c = Cyc::zero(field);
        for (i, r) in field.powers[e].iter().enumerate() {
            c.coeffs[i] = Rational::from_integer(r.clone());
        }
        c
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-reduces the coefficient vector; the identity on canonical elements.
    pub fn normalized(&self) -> Cyc {
        Cyc::from_poly(&self.field, &self.coeffs)
    }

    fn check(&self, other: &Cyc) -> Result<()> {
        if self.field.p != other.field.p {
            return Err(Error::Domain(format!(
                "cyclotomic fields differ: p = {} vs p = {}",
                self.field.p, other.field.p
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Cyc) -> Result<Cyc> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Cyc) -> Result<Cyc> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, r: &Rational) -> Cyc {
        Cyc { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Cyc {
        self.scale(&Rational::from_integer(BigInt::from(n)))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in ℚ[t].
    pub fn inv(&self) -> Result<Cyc> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Cyc::from_rational(&self.field, r.recip()));
        }
        let modulus: Vec<Rational> =
            self.field.phi.iter().map(|c| Rational::from_integer(c.clone())).collect();
        // invariant: s_i · a ≡ r_i (mod Φ)
        let mut r0 = modulus;
        let mut r1 = rat_poly_trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while r1.len() > 1 {
            let (q, r) = rat_poly_divrem(&r0, &r1);
            let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r1 is a nonzero constant since Φ_p is irreducible
        let c = r1[0].recip();
        let inv: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(Cyc::from_poly(&self.field, &inv))
    }

    pub fn pow(&self, mut e: u64) -> Cyc {
        let mut base = self.clone();
        let mut acc = Cyc::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Coefficients as reduced (numerator, denominator) pairs.
    pub fn to_pairs(&self) -> Vec<(BigInt, BigInt)> {
        self.coeffs.iter().map(|c| (c.numer().clone(), c.denom().clone())).collect()
    }
}

impl<'a> Add<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        assert_eq!(self.field.p, rhs.field.p, "cyclotomic fields differ");
        Cyc {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        assert_eq!(self.field.p, rhs.field.p, "cyclotomic fields differ");
        Cyc {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        assert_eq!(self.field.p, rhs.field.p, "cyclotomic fields differ");
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        let prod = rat_poly_mul(&self.coeffs, &rhs.coeffs);
        Cyc::from_poly(&self.field, &prod)
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, rhs: &Cyc) {
        assert_eq!(self.field.p, rhs.field.p, "cyclotomic fields differ");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyc> for Cyc {
    fn sub_assign(&mut self, rhs: &Cyc) {
        assert_eq!(self.field.p, rhs.field.p, "cyclotomic fields differ");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}
