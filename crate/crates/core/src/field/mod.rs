//! Exact arithmetic in `F_p`, `F_q = F_{p^e}` and degree-`k` extensions of `F_q`.
//!
//! [`FieldSpec`] is a cheaply clonable handle describing a base field. Its
//! elements are [`FqElem`] values, plain `Copy` indices that only mean
//! something together with the field that produced them; arithmetic goes
//! through the field:
//!
//! ```
//! use fitzgerald::FieldSpec;
//!
//! let f5 = FieldSpec::prime(5).unwrap();
//! let prod = f5.mul(f5.from_u64(3), f5.from_u64(4));
//! assert_eq!(prod, f5.from_u64(2));
//!
//! let f4 = FieldSpec::extension(2, 2).unwrap();
//! let t = f4.generator();
//! assert_eq!(f4.mul(t, t), f4.add(t, f4.one()));
//! ```
//!
//! An element of `F_{p^e}` with residues `c_0, .., c_{e-1}` (little-endian in
//! the generator `t`) is stored as the integer `c_0 + c_1 p + .. + c_{e-1} p^{e-1}`.
//! The zero element is index 0 and the prime subfield occupies indices `0..p`.

mod ext;

pub use ext::{ExtElem, ExtField, TraceForm};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::nt::{self, INT_BOUND};
use crate::poly::Poly;

/// Fields with at most this many elements get precomputed operation tables.
const TABLE_LIMIT: u64 = 256;

/// An element of a base field `F_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FqElem(u64);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);

    /// Packed index of the element, `sum c_i p^i`.
    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

struct FieldInner {
    p: u64,
    e: u32,
    q: u64,
    // Low `e` coefficients of the monic modulus, constant term first.
    modulus_low: Vec<u64>,
    modulus: Option<Poly>,
    prime_subfield: Option<FieldSpec>,
    tables: Option<Tables>,
}

/// Description of a finite field `F_q` with `q = p^e`.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.e == other.0.e
                && self.0.modulus_low == other.0.modulus_low)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({self})")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "GF({})", self.0.p),
            Some(m) => write!(f, "GF({}^{}) mod {}", self.0.p, self.0.e, m),
        }
    }
}

impl FieldSpec {
    /// The prime field `F_p`. The characteristic is verified by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= INT_BOUND {
            return Err(Error::Overflow(format!("{p} does not fit below 2^63")));
        }
        if !nt::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self(Arc::new(FieldInner {
            p,
            e: 1,
            q: p,
            modulus_low: Vec::new(),
            modulus: None,
            prime_subfield: None,
            tables: None,
        })))
    }

    /// `F_{p^e}` for `e >= 2`, modelled as `F_p[t]/(f)` where `f` is the first
    /// monic irreducible of degree `e` when coefficient vectors are read as
    /// base-`p` integers with the constant term least significant.
    pub fn extension(p: u64, e: u32) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidArgument(format!(
                "extension degree must be at least 2, got {e} (use FieldSpec::prime)"
            )));
        }
        let prime = Self::prime(p)?;
        if p.checked_pow(e).is_none_or(|q| q >= INT_BOUND) {
            return Err(Error::Overflow(format!("{p}^{e} exceeds 2^63")));
        }
        let modulus = first_irreducible(&prime, e as usize)?;
        Self::with_modulus(modulus)
    }

    /// `F_p[t]/(modulus)` for a monic irreducible `modulus` over a prime field.
    pub fn with_modulus(modulus: Poly) -> Result<Self> {
        let prime = modulus.field().clone();
        if prime.e() != 1 {
            return Err(Error::InvalidArgument(
                "modulus must have prime-field coefficients".into(),
            ));
        }
        let e = match modulus.degree() {
            Some(d) if d >= 2 => d as u32,
            _ => {
                return Err(Error::InvalidArgument(
                    "modulus degree must be at least 2".into(),
                ))
            }
        };
        if !modulus.is_irreducible()? {
            return Err(Error::ReducibleModulus(modulus.to_string()));
        }
        let p = prime.p();
        let q = p
            .checked_pow(e)
            .filter(|&q| q < INT_BOUND)
            .ok_or_else(|| Error::Overflow(format!("{p}^{e} exceeds 2^63")))?;
        let modulus_low = modulus.coeffs()[..e as usize]
            .iter()
            .map(|c| c.index())
            .collect();
        let mut spec = FieldSpec(Arc::new(FieldInner {
            p,
            e,
            q,
            modulus_low,
            modulus: Some(modulus),
            prime_subfield: Some(prime),
            tables: None,
        }));
        if q <= TABLE_LIMIT {
            let tables = spec.build_tables()?;
            Arc::get_mut(&mut spec.0)
                .expect("freshly built field has a single owner")
                .tables = Some(tables);
        }
        Ok(spec)
    }

    fn build_tables(&self) -> Result<Tables> {
        let q = self.q() as usize;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            let ea = FqElem(a as u64);
            neg[a] = self.neg_slow(ea).0 as u8;
            if a != 0 {
                inv[a] = self.inv_slow(ea)?.0 as u8;
            }
            for b in 0..q {
                let eb = FqElem(b as u64);
                add[a * q + b] = self.add_slow(ea, eb).0 as u8;
                mul[a * q + b] = self.mul_slow(ea, eb).0 as u8;
            }
        }
        Ok(Tables { add, mul, neg, inv })
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.e == 1
    }

    /// Defining polynomial over `F_p` when `e > 1`.
    pub fn modulus(&self) -> Option<&Poly> {
        self.0.modulus.as_ref()
    }

    /// The prime subfield `F_p`; the field itself when `e = 1`.
    pub fn prime_subfield(&self) -> FieldSpec {
        self.0
            .prime_subfield
            .clone()
            .unwrap_or_else(|| self.clone())
    }

    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }

    pub fn one(&self) -> FqElem {
        FqElem(1)
    }

    /// The class of `t` in `F_p[t]/(f)`; for prime fields this is 1.
    pub fn generator(&self) -> FqElem {
        if self.is_prime_field() {
            self.one()
        } else {
            FqElem(self.0.p)
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_u64(&self, v: u64) -> FqElem {
        FqElem(v % self.0.p)
    }

    pub fn from_i64(&self, v: i64) -> FqElem {
        let p = self.0.p as i128;
        FqElem((v as i128).rem_euclid(p) as u64)
    }

    pub fn from_index(&self, index: u64) -> Result<FqElem> {
        if index < self.0.q {
            Ok(FqElem(index))
        } else {
            Err(Error::CoefficientOutOfField(format!(
                "index {index} not below q = {}",
                self.0.q
            )))
        }
    }

    /// Element from residues `c_0, c_1, ..` (little-endian in the generator).
    /// Missing high residues are zero.
    pub fn from_residues(&self, residues: &[u64]) -> Result<FqElem> {
        let (p, e) = (self.0.p, self.0.e as usize);
        if residues.len() > e {
            return Err(Error::CoefficientOutOfField(format!(
                "{} residues given, field has degree {e}",
                residues.len()
            )));
        }
        let mut idx = 0u64;
        for &c in residues.iter().rev() {
            if c >= p {
                return Err(Error::CoefficientOutOfField(format!(
                    "residue {c} not below p = {p}"
                )));
            }
            idx = idx * p + c;
        }
        Ok(FqElem(idx))
    }

    /// The `e` residues of an element, constant coordinate first.
    pub fn residues(&self, a: FqElem) -> Vec<u64> {
        let p = self.0.p;
        let mut rest = a.0;
        (0..self.0.e)
            .map(|_| {
                let d = rest % p;
                rest /= p;
                d
            })
            .collect()
    }

    pub fn in_prime_subfield(&self, a: FqElem) -> bool {
        a.0 < self.0.p
    }

    /// Every element in index order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.0.q).map(FqElem)
    }

    /// Canonical text form: an integer for prime-subfield elements,
    /// otherwise the bracketed residue vector `[c0,c1,..]`.
    pub fn format_elem(&self, a: FqElem) -> String {
        if self.in_prime_subfield(a) {
            a.0.to_string()
        } else {
            let parts: Vec<String> = self.residues(a).iter().map(u64::to_string).collect();
            format!("[{}]", parts.join(","))
        }
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let inner = &*self.0;
        if inner.e == 1 {
            let s = a.0 + b.0;
            FqElem(if s >= inner.p { s - inner.p } else { s })
        } else if let Some(t) = &inner.tables {
            FqElem(t.add[(a.0 * inner.q + b.0) as usize] as u64)
        } else {
            self.add_slow(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: FqElem) -> FqElem {
        let inner = &*self.0;
        if inner.e == 1 {
            FqElem(if a.0 == 0 { 0 } else { inner.p - a.0 })
        } else if let Some(t) = &inner.tables {
            FqElem(t.neg[a.0 as usize] as u64)
        } else {
            self.neg_slow(a)
        }
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        if self.0.e == 1 {
            let p = self.0.p;
            FqElem(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + p - b.0 })
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        let inner = &*self.0;
        if inner.e == 1 {
            FqElem(mul_mod(a.0, b.0, inner.p))
        } else if let Some(t) = &inner.tables {
            FqElem(t.mul[(a.0 * inner.q + b.0) as usize] as u64)
        } else {
            self.mul_slow(a, b)
        }
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        if inner.e == 1 {
            Ok(FqElem(inv_mod(a.0, inner.p)))
        } else if let Some(t) = &inner.tables {
            Ok(FqElem(t.inv[a.0 as usize] as u64))
        } else {
            self.inv_slow(a)
        }
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n` by binary exponentiation, with `0^0 = 1`.
    pub fn pow(&self, a: FqElem, mut n: u64) -> FqElem {
        let mut base = a;
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// `n * a` for an integer multiplier, reduced in the characteristic.
    pub fn scale_int(&self, a: FqElem, n: u64) -> FqElem {
        self.mul(a, self.from_u64(n))
    }

    fn add_slow(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.0.p;
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u64, 1u64);
        for i in 0..self.0.e {
            let d = (x % p + y % p) % p;
            out += d * place;
            x /= p;
            y /= p;
            if i + 1 < self.0.e {
                place *= p;
            }
        }
        FqElem(out)
    }

    fn neg_slow(&self, a: FqElem) -> FqElem {
        let p = self.0.p;
        let (mut x, mut out, mut place) = (a.0, 0u64, 1u64);
        for i in 0..self.0.e {
            let d = x % p;
            out += if d == 0 { 0 } else { (p - d) * place };
            x /= p;
            if i + 1 < self.0.e {
                place *= p;
            }
        }
        FqElem(out)
    }

    fn mul_slow(&self, a: FqElem, b: FqElem) -> FqElem {
        let (p, e) = (self.0.p, self.0.e as usize);
        let ra = self.residues(a);
        let rb = self.residues(b);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in ra.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in rb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        let low = &self.0.modulus_low;
        for deg in (e..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (i, &m) in low.iter().enumerate() {
                let slot = &mut prod[deg - e + i];
                *slot = (*slot + p - mul_mod(c, m, p)) % p;
            }
            prod[deg] = 0;
        }
        let mut idx = 0u64;
        for &c in prod[..e].iter().rev() {
            idx = idx * p + c;
        }
        FqElem(idx)
    }

    fn inv_slow(&self, a: FqElem) -> Result<FqElem> {
        let prime = self.prime_subfield();
        let modulus = self.modulus().expect("extension field has a modulus");
        let residues: Vec<FqElem> = self.residues(a).into_iter().map(FqElem).collect();
        let ap = Poly::new(&prime, residues);
        let (g, s, _) = ap.extended_gcd(modulus)?;
        if g.degree() != Some(0) {
            return Err(Error::ReducibleModulus(modulus.to_string()));
        }
        let s = s.scale(prime.inv(g.coeff(0))?);
        let res: Vec<u64> = s.coeffs().iter().map(|c| c.index()).collect();
        self.from_residues(&res)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    t0.rem_euclid(p as i128) as u64
}

/// First monic irreducible of degree `k` over `field` in index order.
pub fn first_irreducible(field: &FieldSpec, k: usize) -> Result<Poly> {
    let count = field.q().saturating_pow(k as u32);
    for n in 0..count {
        let poly = Poly::monic_from_index(field, k, n)?;
        if poly.is_irreducible()? {
            return Ok(poly);
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}
