//! Sparse multivariate Laurent polynomials with big-rational coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{phi_coefficients, CyclotomicNumber};
use super::registry::{VarKind, VariableRegistry};
use crate::error::{Error, Result};

/// Dense exponent vector indexed by registry position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[i32]>);

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len].into_boxed_slice())
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }
}

/// Graded lexicographic: total degree first, then exponents in registry order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Value a variable may be specialized to.
#[derive(Debug, Clone)]
pub enum Value {
    /// A polynomial over the same registry.
    Poly(Poly),
    /// `ς_order^power`.
    Root { order: u32, power: i64 },
    /// An arbitrary element of `Q(ς_m)`.
    Cyclotomic(CyclotomicNumber),
}

impl Value {
    pub fn rational(reg: &Arc<VariableRegistry>, value: BigRational) -> Self {
        Value::Poly(Poly::constant(reg, value))
    }

    pub fn integer(reg: &Arc<VariableRegistry>, value: i64) -> Self {
        Value::Poly(Poly::from_int(reg, value))
    }

    fn order(&self) -> Option<u32> {
        match self {
            Value::Poly(_) => None,
            Value::Root { order, .. } => Some(*order),
            Value::Cyclotomic(c) => Some(c.order()),
        }
    }
}

/// A partial map from variables to values.
#[derive(Debug, Clone, Default)]
pub struct Assignment {
    entries: Vec<(String, Value)>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, var: impl Into<String>, value: Value) -> Self {
        self.entries.push((var.into(), value));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Exact Laurent polynomial over a shared [`VariableRegistry`].
///
/// Negative exponents appear only at invertible positions and zero
/// coefficients are never stored.
#[derive(Debug, Clone)]
pub struct Poly {
    reg: Arc<VariableRegistry>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.same_registry(other) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(reg: &Arc<VariableRegistry>) -> Self {
        Poly { reg: reg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(reg: &Arc<VariableRegistry>) -> Self {
        Self::constant(reg, BigRational::one())
    }

    pub fn constant(reg: &Arc<VariableRegistry>, c: BigRational) -> Self {
        let mut p = Self::zero(reg);
        p.add_term(Monomial::one(reg.len()), c);
        p
    }

    pub fn from_int(reg: &Arc<VariableRegistry>, c: i64) -> Self {
        Self::constant(reg, BigRational::from_integer(c.into()))
    }

    /// The variable at registry position `index`.
    pub fn var(reg: &Arc<VariableRegistry>, index: usize) -> Self {
        Self::var_pow(reg, index, 1).expect("positive power is always valid")
    }

    pub fn var_pow(reg: &Arc<VariableRegistry>, index: usize, e: i32) -> Result<Self> {
        if index >= reg.len() {
            return Err(Error::IndexOutOfRange(format!("variable position {index}")));
        }
        if e < 0 && !reg.is_invertible(index) {
            return Err(Error::NotInvertible(reg.variable(index).name.clone()));
        }
        let mut exps = vec![0; reg.len()];
        exps[index] = e;
        let mut p = Self::zero(reg);
        p.add_term(Monomial::new(exps), BigRational::one());
        Ok(p)
    }

    pub fn named(reg: &Arc<VariableRegistry>, name: &str) -> Result<Self> {
        Ok(Self::var(reg, reg.require(name)?))
    }

    pub fn kind(reg: &Arc<VariableRegistry>, kind: VarKind) -> Result<Self> {
        Ok(Self::var(reg, reg.require_kind(kind)?))
    }

    /// Build from `(exponent map by name, coefficient)` pairs.
    pub fn from_named_terms<'a, I>(reg: &Arc<VariableRegistry>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<(&'a str, i32)>, BigRational)>,
    {
        let mut p = Self::zero(reg);
        for (exps, c) in terms {
            let mut dense = vec![0; reg.len()];
            for (name, e) in exps {
                let i = reg.require(name)?;
                if e < 0 && !reg.is_invertible(i) {
                    return Err(Error::NotInvertible(name.to_string()));
                }
                dense[i] += e;
            }
            p.add_term(Monomial::new(dense), c);
        }
        Ok(p)
    }

    pub fn registry(&self) -> &Arc<VariableRegistry> {
        &self.reg
    }

    pub fn same_registry(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.reg, &other.reg) || *self.reg == *other.reg
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.same_registry(other) {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(mono.0.len(), self.reg.len());
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &BigRational, other: &Poly) {
        assert!(self.same_registry(other), "registry mismatch in add_scaled");
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut acc: HashMap<Monomial, BigRational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Poly { reg: self.reg.clone(), terms })
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.reg);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        Poly { reg: self.reg.clone(), terms }
    }

    pub fn scale_int(&self, c: i64) -> Poly {
        self.scale(&BigRational::from_integer(c.into()))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.reg);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a unit monomial `c·m` whose variables are all invertible.
    pub fn monomial_inverse(&self) -> Result<Poly> {
        if self.terms.len() != 1 {
            return Err(Error::Domain("only monomials can be inverted".into()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        for (i, &e) in m.0.iter().enumerate() {
            if e != 0 && !self.reg.is_invertible(i) {
                return Err(Error::NotInvertible(self.reg.variable(i).name.clone()));
            }
        }
        let inv = Monomial(m.0.iter().map(|e| -e).collect());
        let mut out = Poly::zero(&self.reg);
        out.add_term(inv, c.recip());
        Ok(out)
    }

    /// Signed integer power; negative powers require a unit monomial.
    pub fn pow_signed(&self, e: i32) -> Result<Poly> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.monomial_inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Smallest and largest exponent of `var` across terms.
    pub fn degree_range(&self, var: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.0[var]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Whether `var` occurs with a nonzero exponent.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] != 0)
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(&self.reg);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e != 0 {
                let mut exps = m.0.to_vec();
                exps[var] -= 1;
                out.add_term(Monomial::new(exps), c * BigRational::from_integer(e.into()));
            }
        }
        out
    }

    /// Exchange two variables (used for symmetry checks).
    pub fn swap_variables(&self, a: usize, b: usize) -> Poly {
        let mut out = Poly::zero(&self.reg);
        for (m, c) in &self.terms {
            let mut exps = m.0.to_vec();
            exps.swap(a, b);
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Group terms by their exponents at `vars`: returns, for each occurring
    /// sub-monomial (as exponents at `vars`), the coefficient polynomial in the
    /// remaining variables.
    pub fn split_by(&self, vars: &[usize]) -> BTreeMap<Vec<i32>, Poly> {
        let mut out: BTreeMap<Vec<i32>, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<i32> = vars.iter().map(|&v| m.0[v]).collect();
            let mut rest = m.0.to_vec();
            for &v in vars {
                rest[v] = 0;
            }
            out.entry(key).or_insert_with(|| Poly::zero(&self.reg)).add_term(Monomial::new(rest), c.clone());
        }
        out
    }

    /// Move to another registry, matching variables by name.
    pub fn rebase(&self, target: &Arc<VariableRegistry>) -> Result<Poly> {
        if Arc::ptr_eq(&self.reg, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self.reg.variables().iter().map(|v| target.index_of(&v.name)).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.reg.variable(i).name.clone()))?;
                if e < 0 && !target.is_invertible(j) {
                    return Err(Error::NotInvertible(target.variable(j).name.clone()));
                }
                exps[j] = e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Exact division by a univariate Laurent polynomial in `var` whose
    /// coefficients are rational. A nonzero remainder is an error.
    pub fn div_exact_univariate(&self, var: usize, divisor: &Poly) -> Result<Poly> {
        self.check(divisor)?;
        let (dlo, dhi) = divisor.degree_range(var).ok_or_else(|| Error::Domain("division by zero".into()))?;
        let mut dcoef = vec![BigRational::zero(); (dhi - dlo) as usize + 1];
        for (m, c) in &divisor.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e != 0) {
                return Err(Error::Domain("divisor must involve a single variable".into()));
            }
            dcoef[(m.0[var] - dlo) as usize] = c.clone();
        }
        let Some((flo, fhi)) = self.degree_range(var) else {
            return Ok(Poly::zero(&self.reg));
        };
        if (flo < 0 || dlo != 0) && !self.reg.is_invertible(var) {
            return Err(Error::NotInvertible(self.reg.variable(var).name.clone()));
        }
        // coefficient polynomials of var^(flo + i), with var stripped
        let mut rem: Vec<Poly> = vec![Poly::zero(&self.reg); (fhi - flo) as usize + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.to_vec();
            let e = exps[var];
            exps[var] = 0;
            rem[(e - flo) as usize].add_term(Monomial::new(exps), c.clone());
        }
        let dn = dcoef.len() - 1;
        let lead_inv = dcoef[dn].recip();
        let mut quot = Poly::zero(&self.reg);
        if rem.len() > dn {
            for i in (0..rem.len() - dn).rev() {
                let c = std::mem::replace(&mut rem[i + dn], Poly::zero(&self.reg)).scale(&lead_inv);
                if c.is_zero() {
                    continue;
                }
                for (j, dj) in dcoef.iter().enumerate().take(dn) {
                    if !dj.is_zero() {
                        let neg = -dj;
                        rem[i + j].add_scaled(&neg, &c);
                    }
                }
                let shift = Poly::var_pow(&self.reg, var, flo + i as i32 - dlo)?;
                quot = &quot + &(&c * &shift);
            }
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return Err(Error::InexactDivision(format!(
                "remainder after dividing by {divisor} in `{}`",
                self.reg.variable(var).name
            )));
        }
        Ok(quot)
    }

    /// Apply the ring homomorphism defined by `assignment` term by term.
    ///
    /// Roots of unity are written in the registry's `z`, and the result is
    /// reduced modulo `Φ_m` whenever any cyclotomic value is present.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Poly> {
        let mut order: Option<u32> = None;
        let mut slots: Vec<Option<Poly>> = vec![None; self.reg.len()];
        for (name, value) in &assignment.entries {
            let idx = self.reg.require(name)?;
            if let Some(o) = value.order() {
                if order.is_some_and(|prev| prev != o) {
                    return Err(Error::Domain("cyclotomic values of different orders".into()));
                }
                order = Some(o);
            }
            let as_poly = match value {
                Value::Poly(p) => {
                    self.check(p)?;
                    p.clone()
                }
                Value::Root { order, power } => {
                    CyclotomicNumber::root(*order, *power).to_poly(&self.reg)?
                }
                Value::Cyclotomic(c) => c.to_poly(&self.reg)?,
            };
            if self.reg.is_invertible(idx) && as_poly.is_zero() {
                return Err(Error::Domain(format!("invertible variable `{name}` cannot be set to zero")));
            }
            slots[idx] = Some(as_poly);
        }

        let mut inverses: Vec<Option<Poly>> = vec![None; self.reg.len()];
        let mut power_cache: HashMap<(usize, i32), Poly> = HashMap::new();
        let mut out = Poly::zero(&self.reg);
        for (m, c) in &self.terms {
            let mut rest = m.0.to_vec();
            let mut factor = Poly::constant(&self.reg, c.clone());
            for (i, slot) in slots.iter().enumerate() {
                let e = m.0[i];
                let Some(value) = slot else { continue };
                rest[i] = 0;
                if e == 0 {
                    continue;
                }
                let pw = match power_cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = if e > 0 {
                            value.pow(e as u32)
                        } else {
                            if inverses[i].is_none() {
                                let inv = match (value.monomial_inverse(), order) {
                                    (Ok(inv), _) => inv,
                                    (Err(_), Some(o)) if value.is_constant_in_z_only() => {
                                        value.to_cyclotomic(o)?.inverse()?.to_poly(&self.reg)?
                                    }
                                    (Err(_), _) => {
                                        return Err(Error::Domain(format!(
                                            "cannot invert the value of `{}`",
                                            self.reg.variable(i).name
                                        )));
                                    }
                                };
                                inverses[i] = Some(inv);
                            }
                            inverses[i].as_ref().unwrap().pow(e.unsigned_abs())
                        };
                        let p = match order {
                            Some(o) => p.reduce_cyclotomic(o)?,
                            None => p,
                        };
                        power_cache.insert((i, e), p.clone());
                        p
                    }
                };
                factor = &factor * &pw;
            }
            let mut rest_poly = Poly::zero(&self.reg);
            rest_poly.add_term(Monomial::new(rest), BigRational::one());
            out = &out + &(&factor * &rest_poly);
        }
        match order {
            Some(o) => out.reduce_cyclotomic(o),
            None => Ok(out),
        }
    }

    fn is_constant_in_z_only(&self) -> bool {
        match self.reg.find(&VarKind::Z) {
            Some(z) => self.terms.keys().all(|m| m.0.iter().enumerate().all(|(i, &e)| i == z || e == 0)),
            None => self.as_constant().is_some(),
        }
    }

    /// Reduce every power of `z` modulo `Φ_m`, realizing `z = ς_m`.
    pub fn reduce_cyclotomic(&self, m: u32) -> Result<Poly> {
        let z = self.reg.require_kind(VarKind::Z)?;
        let phi = phi_coefficients(m);
        let d = (phi.len() - 1) as i32;
        if self.degree_range(z).is_none_or(|(_, hi)| hi < d) {
            return Ok(self.clone());
        }
        let mut out = Poly::zero(&self.reg);
        for (key, coeff) in self.split_by(&[z]) {
            let e = key[0] as usize;
            let mut dense = vec![BigRational::zero(); e + 1];
            dense[e] = BigRational::one();
            let reduced = super::cyclotomic::reduce_mod_phi(dense, m);
            for (j, r) in reduced.iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                for (mono, c) in &coeff.terms {
                    let mut exps = mono.0.to_vec();
                    exps[z] = j as i32;
                    out.add_term(Monomial::new(exps), c * r);
                }
            }
        }
        Ok(out)
    }

    /// Interpret a polynomial in `z` alone as an element of `Q(ς_m)`.
    pub fn to_cyclotomic(&self, m: u32) -> Result<CyclotomicNumber> {
        let z = self.reg.find(&VarKind::Z);
        let mut coeffs = Vec::new();
        for (mono, c) in &self.terms {
            let mut e = 0;
            for (i, &x) in mono.0.iter().enumerate() {
                if Some(i) == z {
                    e = x as usize;
                } else if x != 0 {
                    return Err(Error::Domain(format!(
                        "`{}` survives; not a cyclotomic number",
                        self.reg.variable(i).name
                    )));
                }
            }
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigRational::zero());
            }
            coeffs[e] += c;
        }
        Ok(CyclotomicNumber::from_coefficients(m, coeffs))
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = &self.reg.variable(i).name;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    /// Canonical form: descending graded-lex terms, e.g. `x1_1^2 - 2*q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                self.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("registry mismatch in polynomial addition")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("registry mismatch in polynomial subtraction")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("registry mismatch in polynomial multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Poly { reg: self.reg.clone(), terms }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert!(self.same_registry(rhs), "registry mismatch in polynomial addition");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        assert!(self.same_registry(rhs), "registry mismatch in polynomial subtraction");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}
