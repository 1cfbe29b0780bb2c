//! The quotient ring `F_q[x]/(f)` for a monic `f` of degree `k`; a field
//! `F_{q^k}` whenever `f` is irreducible.

use std::sync::Arc;

use super::{FieldSpec, FqElem};
use crate::error::{Error, Result};
use crate::nt::{self, Factorization};
use crate::poly::Poly;

/// A residue of degree below `k`, constant coordinate first. Always has
/// exactly `k` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtElem(Vec<FqElem>);

impl ExtElem {
    pub fn coeffs(&self) -> &[FqElem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

struct ExtInner {
    base: FieldSpec,
    modulus: Poly,
    // Low `k` coefficients of the monic modulus.
    low: Vec<FqElem>,
}

/// Handle on `F_q[x]/(modulus)`.
#[derive(Clone)]
pub struct ExtField(Arc<ExtInner>);

impl std::fmt::Debug for ExtField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ExtField({} / ({}))", self.0.base, self.0.modulus)
    }
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}

impl Eq for ExtField {}

impl ExtField {
    /// Quotient by a monic polynomial of degree at least 1. Irreducibility is
    /// not checked here; [`ExtField::trace`] and [`ExtField::inv`] report a
    /// reducible modulus when they run into one.
    pub fn new(modulus: Poly) -> Result<Self> {
        let k = match modulus.degree() {
            Some(k) if k >= 1 => k,
            _ => {
                return Err(Error::InvalidArgument(
                    "extension modulus must have degree at least 1".into(),
                ))
            }
        };
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        let low = modulus.coeffs()[..k].to_vec();
        Ok(Self(Arc::new(ExtInner {
            base: modulus.field().clone(),
            modulus,
            low,
        })))
    }

    pub fn base(&self) -> &FieldSpec {
        &self.0.base
    }

    pub fn modulus(&self) -> &Poly {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.low.len()
    }

    /// `q^k - 1`, the order of the multiplicative group when the modulus is irreducible.
    pub fn group_order(&self) -> Result<u64> {
        nt::checked_order(self.0.base.q(), self.degree() as u64)
    }

    pub fn zero(&self) -> ExtElem {
        ExtElem(vec![FqElem::ZERO; self.degree()])
    }

    pub fn one(&self) -> ExtElem {
        self.from_base(self.0.base.one())
    }

    pub fn from_base(&self, c: FqElem) -> ExtElem {
        let mut v = vec![FqElem::ZERO; self.degree()];
        v[0] = c;
        ExtElem(v)
    }

    /// The class of `x`.
    pub fn generator(&self) -> ExtElem {
        self.mul_by_generator(&self.one())
    }

    /// Element with the given low coordinates; missing coordinates are zero.
    pub fn from_coeffs(&self, coeffs: &[FqElem]) -> Result<ExtElem> {
        let k = self.degree();
        if coeffs.len() > k {
            return Err(Error::InvalidArgument(format!(
                "{} coordinates given for a degree-{k} extension",
                coeffs.len()
            )));
        }
        let q = self.0.base.q();
        if let Some(bad) = coeffs.iter().find(|c| c.index() >= q) {
            return Err(Error::CoefficientOutOfField(format!(
                "index {}",
                bad.index()
            )));
        }
        let mut v = coeffs.to_vec();
        v.resize(k, FqElem::ZERO);
        Ok(ExtElem(v))
    }

    /// Reduction of a polynomial modulo the defining polynomial.
    pub fn from_poly(&self, a: &Poly) -> Result<ExtElem> {
        let rem = a.rem(&self.0.modulus)?;
        self.from_coeffs(rem.coeffs())
    }

    pub fn to_poly(&self, a: &ExtElem) -> Poly {
        Poly::new(&self.0.base, a.0.clone())
    }

    /// Element number `index` when elements are listed with coordinate 0 least significant.
    pub fn from_index(&self, mut index: u64) -> ExtElem {
        let q = self.0.base.q();
        ExtElem(
            (0..self.degree())
                .map(|_| {
                    let c = FqElem(index % q);
                    index /= q;
                    c
                })
                .collect(),
        )
    }

    /// All `q^k` elements in index order.
    pub fn elements(&self) -> Result<impl Iterator<Item = ExtElem> + '_> {
        let total = self.group_order()? + 1;
        Ok((0..total).map(move |i| self.from_index(i)))
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = &self.0.base;
        ExtElem(a.0.iter().zip(&b.0).map(|(&x, &y)| f.add(x, y)).collect())
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = &self.0.base;
        ExtElem(a.0.iter().zip(&b.0).map(|(&x, &y)| f.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        let f = &self.0.base;
        ExtElem(a.0.iter().map(|&x| f.neg(x)).collect())
    }

    pub fn scale(&self, a: &ExtElem, c: FqElem) -> ExtElem {
        let f = &self.0.base;
        ExtElem(a.0.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = &self.0.base;
        let k = self.degree();
        let mut prod = vec![FqElem::ZERO; 2 * k - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        for deg in (k..prod.len()).rev() {
            let c = prod[deg];
            if c.is_zero() {
                continue;
            }
            for (i, &m) in self.0.low.iter().enumerate() {
                let slot = &mut prod[deg - k + i];
                *slot = f.sub(*slot, f.mul(c, m));
            }
        }
        prod.truncate(k);
        ExtElem(prod)
    }

    /// `a * x`: one shift and one reduction step.
    pub fn mul_by_generator(&self, a: &ExtElem) -> ExtElem {
        let mut out = a.clone();
        self.mul_by_generator_in_place(&mut out);
        out
    }

    pub fn mul_by_generator_in_place(&self, a: &mut ExtElem) {
        let f = &self.0.base;
        let k = self.degree();
        let top = a.0[k - 1];
        for i in (1..k).rev() {
            a.0[i] = f.sub(a.0[i - 1], f.mul(top, self.0.low[i]));
        }
        a.0[0] = f.neg(f.mul(top, self.0.low[0]));
    }

    pub fn square(&self, a: &ExtElem) -> ExtElem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &ExtElem, mut n: u64) -> ExtElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm against the modulus.
    pub fn inv(&self, a: &ExtElem) -> Result<ExtElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.to_poly(a).extended_gcd(&self.0.modulus)?;
        if g.degree() != Some(0) {
            return Err(Error::ReducibleModulus(self.0.modulus.to_string()));
        }
        let s = s.scale(self.0.base.inv(g.coeff(0))?);
        self.from_coeffs(s.coeffs())
    }

    pub fn div(&self, a: &ExtElem, b: &ExtElem) -> Result<ExtElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// The `q`-th power map.
    pub fn frobenius(&self, a: &ExtElem) -> ExtElem {
        self.pow(a, self.0.base.q())
    }

    /// `Tr(a) = a + a^q + .. + a^(q^(k-1))`, computed by iterating the Frobenius map.
    pub fn trace(&self, a: &ExtElem) -> Result<FqElem> {
        let mut conj = a.clone();
        let mut sum = a.clone();
        for _ in 1..self.degree() {
            conj = self.frobenius(&conj);
            sum = self.add(&sum, &conj);
        }
        if sum.0[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::ReducibleModulus(format!(
                "trace left the base field modulo {}",
                self.0.modulus
            )));
        }
        Ok(sum.0[0])
    }

    /// The traces `Tr(x^j)` for `j < k`. Since the trace is `F_q`-linear these
    /// determine it: see [`TraceForm`].
    pub fn trace_form(&self) -> Result<TraceForm> {
        let mut basis = Vec::with_capacity(self.degree());
        let mut power = self.one();
        for _ in 0..self.degree() {
            basis.push(self.trace(&power)?);
            self.mul_by_generator_in_place(&mut power);
        }
        Ok(TraceForm {
            base: self.0.base.clone(),
            basis,
        })
    }

    /// Exact multiplicative order of `a`, given the factorization of `q^k - 1`.
    pub fn mult_order(&self, a: &ExtElem, group_order: &Factorization) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = self.group_order()?;
        if group_order.n() != n {
            return Err(Error::InvalidArgument(format!(
                "factorization of {} given, group order is {n}",
                group_order.n()
            )));
        }
        let one = self.one();
        if self.pow(a, n) != one {
            return Err(Error::ReducibleModulus(format!(
                "element does not satisfy a^{n} = 1 modulo {}",
                self.0.modulus
            )));
        }
        let mut order = n;
        for &(prime, mult) in group_order.pairs() {
            for _ in 0..mult {
                if self.pow(a, order / prime) == one {
                    order /= prime;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }
}

/// The trace as a linear form: `Tr(sum c_j x^j) = sum c_j Tr(x^j)`.
#[derive(Debug, Clone)]
pub struct TraceForm {
    base: FieldSpec,
    basis: Vec<FqElem>,
}

impl TraceForm {
    pub fn basis(&self) -> &[FqElem] {
        &self.basis
    }

    pub fn apply(&self, a: &ExtElem) -> FqElem {
        let f = &self.base;
        a.0.iter()
            .zip(&self.basis)
            .fold(f.zero(), |acc, (&c, &t)| f.add(acc, f.mul(c, t)))
    }
}
