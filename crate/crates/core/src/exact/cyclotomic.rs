//! Elements of the cyclotomic field `Q(ς_m)`, stored as residues modulo the
//! m-th cyclotomic polynomial `Φ_m`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, Poly};
use super::registry::{VarKind, VariableRegistry};
use crate::error::{Error, Result};

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of `Φ_m` (constant term first).
///
/// Computed by dividing `z^m - 1` by `Φ_d` for every proper divisor `d`.
pub fn phi_coefficients(m: u32) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(c) = phi_cache().lock().unwrap().get(&m) {
        return c.clone();
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m % d == 0) {
        let den = phi_coefficients(d);
        num = int_div_exact_monic(&num, &den);
    }
    let out = Arc::new(num);
    phi_cache().lock().unwrap().entry(m).or_insert_with(|| out.clone());
    out
}

fn int_div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    quot
}

/// Euler's totient, equal to `deg Φ_m`.
pub fn euler_phi(m: u32) -> usize {
    phi_coefficients(m).len() - 1
}

/// `Φ_m` as a polynomial in the registry's `z`.
pub fn cyclotomic_phi(m: u32, registry: &Arc<VariableRegistry>) -> Result<Poly> {
    if m == 0 {
        return Err(Error::Domain("cyclotomic order must be positive".into()));
    }
    let z = registry.require_kind(VarKind::Z)?;
    let mut out = Poly::zero(registry);
    for (e, c) in phi_coefficients(m).iter().enumerate() {
        if !c.is_zero() {
            let mut exps = vec![0; registry.len()];
            exps[z] = e as i32;
            out.add_term(Monomial::new(exps), BigRational::from_integer(c.clone()));
        }
    }
    Ok(out)
}

/// Reduce a dense rational coefficient list modulo `Φ_m`.
pub(crate) fn reduce_mod_phi(mut coeffs: Vec<BigRational>, m: u32) -> Vec<BigRational> {
    let phi = phi_coefficients(m);
    let d = phi.len() - 1;
    for i in (d..coeffs.len()).rev() {
        let c = std::mem::replace(&mut coeffs[i], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        for (j, pj) in phi.iter().enumerate().take(d) {
            if !pj.is_zero() {
                coeffs[i - d + j] -= &c * BigRational::from_integer(pj.clone());
            }
        }
    }
    coeffs.resize(d, BigRational::zero());
    coeffs
}

/// An element of `Q(ς_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    /// From coefficients of `1, ς, ς², …` of any length; reduces modulo `Φ_m`.
    pub fn from_coefficients(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order >= 1);
        CyclotomicNumber { order, coeffs: reduce_mod_phi(coeffs, order) }
    }

    pub fn zero(order: u32) -> Self {
        Self::from_rational(order, BigRational::zero())
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, value: BigRational) -> Self {
        Self::from_coefficients(order, vec![value])
    }

    pub fn from_integer(order: u32, value: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(value.into()))
    }

    /// `ς^power` for any integer power.
    pub fn root(order: u32, power: i64) -> Self {
        let e = power.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Self::from_coefficients(order, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients over the power basis `1, ς, …, ς^{φ(m)-1}`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one(self.order)
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Complex conjugation, `ς ↦ ς^{m-1}`.
    pub fn conj(&self) -> Self {
        let m = self.order as usize;
        let mut out = vec![BigRational::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[(m - j) % m] += c;
        }
        Self::from_coefficients(self.order, out)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.order);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm modulo `Φ_m`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("zero has no inverse in Q(ς)".into()));
        }
        let phi: Vec<BigRational> =
            phi_coefficients(self.order).iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let (g, s) = uni_ext_gcd(trim(self.coeffs.clone()), phi);
        // g is a nonzero constant since Φ_m is irreducible
        if g.len() != 1 {
            return Err(Error::Consistency("cyclotomic polynomial gcd is not a unit".into()));
        }
        let inv_g = g[0].recip();
        Ok(Self::from_coefficients(self.order, s.into_iter().map(|c| c * &inv_g).collect()))
    }

    /// Express as a polynomial in the registry's `z`.
    pub fn to_poly(&self, registry: &Arc<VariableRegistry>) -> Result<Poly> {
        let z = registry.require_kind(VarKind::Z)?;
        let mut out = Poly::zero(registry);
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0; registry.len()];
                exps[z] = e as i32;
                out.add_term(Monomial::new(exps), c.clone());
            }
        }
        Ok(out)
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic numbers of different orders");
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn uni_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn uni_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn uni_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = b.last().expect("division by zero polynomial").clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Returns `(g, s)` with `s·a ≡ g (mod b)`.
fn uni_ext_gcd(a: Vec<BigRational>, b: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (a, trim(b));
    let (mut s0, mut s1) = (vec![BigRational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = uni_divmod(&r0, &r1);
        let s2 = uni_sub(&s0, &uni_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicNumber { order: self.order, coeffs }
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicNumber { order: self.order, coeffs }
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_order(rhs);
        let prod = uni_mul(&self.coeffs, &rhs.coeffs);
        CyclotomicNumber::from_coefficients(self.order, prod)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Add for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> Self {
        -&self
    }
}

impl fmt::Display for CyclotomicNumber {
    /// Power-basis form in `z = ς`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
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
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if e == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{e}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*phi_coefficients(1), ints(&[-1, 1]));
        assert_eq!(*phi_coefficients(2), ints(&[1, 1]));
        assert_eq!(*phi_coefficients(4), ints(&[1, 0, 1]));
        assert_eq!(*phi_coefficients(6), ints(&[1, -1, 1]));
        assert_eq!(*phi_coefficients(12), ints(&[1, 0, -1, 0, 1]));
    }

    /// Floating-point root product: Φ_m(z) = Π_{gcd(j,m)=1} (z - e^{2πij/m}).
    fn phi_by_roots(m: u32) -> Vec<f64> {
        let mut re = vec![1.0f64];
        let mut im = vec![0.0f64];
        for j in 1..=m {
            if num_integer::gcd(j, m) != 1 {
                continue;
            }
            let ang = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
            let (cr, ci) = (ang.cos(), ang.sin());
            let mut nre = vec![0.0; re.len() + 1];
            let mut nim = vec![0.0; im.len() + 1];
            for k in 0..re.len() {
                nre[k + 1] += re[k];
                nim[k + 1] += im[k];
                nre[k] -= re[k] * cr - im[k] * ci;
                nim[k] -= re[k] * ci + im[k] * cr;
            }
            re = nre;
            im = nim;
        }
        assert!(im.iter().all(|x| x.abs() < 1e-6));
        re
    }

    #[test]
    fn recursion_matches_root_products() {
        for m in 1..=24 {
            let exact = phi_coefficients(m);
            let approx = phi_by_roots(m);
            assert_eq!(exact.len(), approx.len(), "m={m}");
            for (e, a) in exact.iter().zip(&approx) {
                let ev: f64 = e.to_string().parse().unwrap();
                assert!((ev - a).abs() < 1e-6, "m={m}");
            }
        }
    }

    #[test]
    fn product_over_divisors_is_z_m_minus_one() {
        for m in 1..=24u32 {
            let mut prod = vec![BigRational::one()];
            for d in (1..=m).filter(|d| m % d == 0) {
                let p: Vec<BigRational> =
                    phi_coefficients(d).iter().map(|c| BigRational::from_integer(c.clone())).collect();
                prod = uni_mul(&prod, &p);
            }
            let mut target = vec![BigRational::zero(); m as usize + 1];
            target[0] = -BigRational::one();
            target[m as usize] = BigRational::one();
            assert_eq!(prod, target, "m={m}");
        }
    }

    #[test]
    fn root_arithmetic() {
        let i = CyclotomicNumber::root(4, 1);
        assert_eq!(&i * &i, CyclotomicNumber::from_integer(4, -1));
        assert_eq!(CyclotomicNumber::root(2, 1), CyclotomicNumber::from_integer(2, -1));
        let w = CyclotomicNumber::root(3, 1);
        let sum = &(&CyclotomicNumber::one(3) + &w) + &CyclotomicNumber::root(3, 2);
        assert!(sum.is_zero());
        assert_eq!(w.conj(), CyclotomicNumber::root(3, 2));
        assert_eq!(CyclotomicNumber::root(5, -1), CyclotomicNumber::root(5, 4));
    }

    #[test]
    fn inverses() {
        for m in [3u32, 5, 6, 8] {
            let x = &CyclotomicNumber::root(m, 1) + &CyclotomicNumber::from_integer(m, 2);
            let inv = x.inverse().unwrap();
            assert!((&x * &inv).is_one());
            assert_eq!(CyclotomicNumber::root(m, 1).inverse().unwrap(), CyclotomicNumber::root(m, -1));
        }
        assert!(CyclotomicNumber::zero(3).inverse().is_err());
    }

    #[test]
    fn display() {
        let x = &CyclotomicNumber::root(6, 1) - &CyclotomicNumber::from_integer(6, 2);
        assert_eq!(x.to_string(), "z - 2");
        assert_eq!(CyclotomicNumber::zero(3).to_string(), "0");
    }
}
