//! Dense univariate polynomials over a base field `F_q`.
//!
//! Coefficients are stored constant term first and kept normalized: the last
//! stored coefficient is nonzero, and the zero polynomial has no coefficients.
//! Its degree is `None`, which orders below every `Some(d)` and so plays the
//! role of `-inf` in degree comparisons.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{ExtElem, ExtField, FieldSpec, FqElem};
use crate::nt;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FqElem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over {})", self.field)
    }
}

/// Canonical text form, highest degree first: `x^4+x+1`, `2*x^2+x+2`,
/// `[1,1]*x^3+x+[0,1]`. The zero polynomial prints as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let one = self.field.one();
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let monomial = match deg {
                0 => String::new(),
                1 => "x".to_string(),
                d => format!("x^{d}"),
            };
            if deg == 0 {
                f.write_str(&self.field.format_elem(c))?;
            } else if c == one {
                f.write_str(&monomial)?;
            } else {
                write!(f, "{}*{monomial}", self.field.format_elem(c))?;
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Polynomial from coefficients, constant term first. Trailing zeros are dropped.
    pub fn new(field: &FieldSpec, coeffs: Vec<FqElem>) -> Self {
        let mut poly = Self {
            field: field.clone(),
            coeffs,
        };
        poly.normalize();
        poly
    }

    /// Coefficients given as integers, each mapped into the prime subfield.
    pub fn from_u64s(field: &FieldSpec, coeffs: &[u64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_u64(c)).collect())
    }

    /// Coefficients given as packed element indices.
    pub fn from_indices(field: &FieldSpec, coeffs: &[u64]) -> Result<Self> {
        let coeffs = coeffs
            .iter()
            .map(|&c| field.from_index(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(field, coeffs))
    }

    pub fn zero(field: &FieldSpec) -> Self {
        Self {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &FieldSpec, c: FqElem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: &FieldSpec) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &FieldSpec, c: FqElem, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero(field);
        }
        let mut coeffs = vec![FqElem::ZERO; n + 1];
        coeffs[n] = c;
        Self {
            field: field.clone(),
            coeffs,
        }
    }

    /// Monic polynomial of degree `k` number `index` in lexicographic order:
    /// the low coefficients are the base-`q` digits of `index`, constant term
    /// least significant.
    pub fn monic_from_index(field: &FieldSpec, k: usize, mut index: u64) -> Result<Self> {
        let q = field.q();
        let count = q.checked_pow(k as u32);
        if count.is_some_and(|c| index >= c) {
            return Err(Error::OutOfRange(index));
        }
        let mut coeffs = Vec::with_capacity(k + 1);
        for _ in 0..k {
            coeffs.push(field.from_index(index % q)?);
            index /= q;
        }
        coeffs.push(field.one());
        Ok(Self {
            field: field.clone(),
            coeffs,
        })
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FqElem {
        self.coeffs.get(i).copied().unwrap_or(FqElem::ZERO)
    }

    pub fn leading(&self) -> Option<FqElem> {
        self.coeffs.last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.field.one())
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: FqElem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![FqElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    /// Long division: `self = divisor * quotient + remainder`, `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        let f = &self.field;
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[d])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![FqElem::ZERO; rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = f.mul(rem[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[top - d] = c;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                let slot = &mut rem[top - d + i];
                *slot = f.sub(*slot, f.mul(c, dc));
            }
        }
        rem.truncate(d);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Scales to leading coefficient 1.
    pub fn to_monic(&self) -> Result<Poly> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(self.field.inv(lead)?))
    }

    /// Horner evaluation at a base-field point.
    pub fn eval(&self, point: FqElem) -> FqElem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, point), c))
    }

    /// Horner evaluation at a point of an extension of the coefficient field.
    pub fn eval_ext(&self, point: &ExtElem, ext: &ExtField) -> Result<ExtElem> {
        if ext.base() != &self.field {
            return Err(Error::SpecMismatch);
        }
        let mut acc = ext.zero();
        for &c in self.coeffs.iter().rev() {
            acc = ext.add(&ext.mul(&acc, point), &ext.from_base(c));
        }
        Ok(acc)
    }

    /// Formal derivative; `i * a_i` is reduced in the characteristic.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.scale_int(c, i as u64))
            .collect();
        Poly::new(f, coeffs)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.to_monic()
    }

    /// `(g, s, t)` with `s * self + t * other = g` and `g` the monic gcd.
    pub fn extended_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&quot.mul(&s1)?)?;
            let t2 = t0.sub(&quot.mul(&t1)?)?;
            (r0, r1) = (r1, rem);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        let lead_inv = f.inv(r0.leading().expect("nonzero gcd"))?;
        Ok((r0.scale(lead_inv), s0.scale(lead_inv), t0.scale(lead_inv)))
    }

    /// `self^n mod modulus` by square-and-multiply, reducing at every step.
    pub fn powmod(&self, mut n: u64, modulus: &Poly) -> Result<Poly> {
        self.check_field(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?.rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// `q(x) = p(0)^-1 x^k p(1/x)`: the coefficient sequence reversed and made
    /// monic. Its roots are the inverses of the roots of `p`.
    pub fn monic_reciprocal(&self) -> Result<Poly> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = self.field.inv(c0)?;
        let f = &self.field;
        Ok(Poly::new(
            f,
            self.coeffs.iter().rev().map(|&c| f.mul(c, inv)).collect(),
        ))
    }

    /// Rabin's test: `x^(q^k) = x (mod a)` and `gcd(x^(q^(k/r)) - x, a) = 1`
    /// for every prime `r | k`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let k = match self.degree() {
            Some(k) if k >= 1 => k,
            _ => {
                return Err(Error::InvalidArgument(
                    "irreducibility needs degree at least 1".into(),
                ))
            }
        };
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let q = self.field.q();
        let x = Poly::x(&self.field).rem(self)?;
        // frob[i] = x^(q^i) mod self
        let mut frob = Vec::with_capacity(k + 1);
        frob.push(x.clone());
        for i in 0..k {
            let next = frob[i].powmod(q, self)?;
            frob.push(next);
        }
        if frob[k] != x {
            return Ok(false);
        }
        for r in nt::factorize(k as u64)?.primes() {
            let h = frob[k / r as usize].sub(&x)?;
            if h.is_zero() || h.gcd(self)?.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
