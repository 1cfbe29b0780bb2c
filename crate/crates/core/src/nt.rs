//! Integer number theory by trial division: primality, factorization,
//! Euler's totient and the Möbius function.
//!
//! Everything here is exact and bounded by `2^63`, which is the cap used
//! throughout the crate for field and group orders.

use crate::error::{Error, Result};

/// Exclusive upper bound for integers handled by this module.
pub const INT_BOUND: u64 = 1 << 63;

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d <= n / d {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization `n = prod prime^multiplicity`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from explicit pairs, checking the invariants.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        let mut n = 1u64;
        let mut last = 1u64;
        for &(prime, mult) in &pairs {
            if prime <= last || !is_prime(prime) || mult == 0 {
                return Err(Error::InvalidArgument(format!(
                    "invalid factor {prime}^{mult}"
                )));
            }
            last = prime;
            let pow = prime
                .checked_pow(mult)
                .ok_or_else(|| Error::Overflow(format!("{prime}^{mult}")))?;
            n = n
                .checked_mul(pow)
                .filter(|&v| v < INT_BOUND)
                .ok_or_else(|| Error::Overflow("factorization product".into()))?;
        }
        Ok(Self { n, pairs })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, m)| m == 1)
    }

    /// All positive divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(prime, mult) in &self.pairs {
            let len = divs.len();
            let mut pw = 1u64;
            for _ in 0..mult {
                pw *= prime;
                for i in 0..len {
                    divs.push(divs[i] * pw);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Trial-division factorization of `1 <= n < 2^63`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 || n >= INT_BOUND {
        return Err(Error::OutOfRange(n));
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d <= rest / d {
        if rest.is_multiple_of(d) {
            let mut mult = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                mult += 1;
            }
            pairs.push((d, mult));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { n, pairs })
}

pub fn euler_phi(f: &Factorization) -> u64 {
    f.pairs
        .iter()
        .map(|&(p, m)| (p - 1) * p.pow(m - 1))
        .product()
}

pub fn moebius(f: &Factorization) -> i64 {
    if !f.is_squarefree() {
        0
    } else if f.pairs.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Number of monic irreducible polynomials of degree `k` over a field of
/// size `q`: `(1/k) sum_{d | k} mu(d) q^(k/d)`.
pub fn irreducible_count(q: u64, k: u64) -> Result<u64> {
    let fk = factorize(k)?;
    let mut total: i128 = 0;
    for d in fk.divisors() {
        let mu = moebius(&factorize(d)?);
        if mu == 0 {
            continue;
        }
        let exp = u32::try_from(k / d).map_err(|_| Error::Overflow("exponent".into()))?;
        let term = q
            .checked_pow(exp)
            .ok_or_else(|| Error::Overflow(format!("{q}^{exp}")))?;
        total += mu as i128 * term as i128;
    }
    Ok((total / k as i128) as u64)
}

/// Number of primitive polynomials of degree `k` over a field of size `q`:
/// `phi(q^k - 1) / k`.
pub fn primitive_count(q: u64, k: u64) -> Result<u64> {
    let m = checked_order(q, k)?;
    Ok(euler_phi(&factorize(m)?) / k)
}

/// `q^k - 1`, rejected when `q^k >= 2^63`.
pub fn checked_order(q: u64, k: u64) -> Result<u64> {
    let exp = u32::try_from(k).map_err(|_| Error::Overflow(format!("{q}^{k}")))?;
    q.checked_pow(exp)
        .filter(|&v| v < INT_BOUND)
        .map(|v| v - 1)
        .ok_or_else(|| Error::Overflow(format!("{q}^{k} exceeds 2^63")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(15).unwrap().pairs(), &[(3, 1), (5, 1)]);
        assert!(factorize(1).unwrap().pairs().is_empty());
        assert_eq!(
            factorize(65535).unwrap().pairs(),
            &[(3, 1), (5, 1), (17, 1), (257, 1)]
        );
        assert_eq!(factorize(0), Err(Error::OutOfRange(0)));
        assert_eq!(factorize(1 << 63), Err(Error::OutOfRange(1 << 63)));
    }

    #[test]
    fn phi_and_moebius_examples() {
        let f15 = factorize(15).unwrap();
        assert_eq!(euler_phi(&f15), 8);
        assert_eq!(moebius(&f15), 1);
        let f1 = factorize(1).unwrap();
        assert_eq!(euler_phi(&f1), 1);
        assert_eq!(moebius(&f1), 1);
        assert_eq!(moebius(&factorize(12).unwrap()), 0);
        assert_eq!(moebius(&factorize(30).unwrap()), -1);
    }

    #[test]
    fn phi_matches_gcd_count() {
        for n in 1..500 {
            assert_eq!(euler_phi(&factorize(n).unwrap()), brute_phi(n), "n = {n}");
        }
    }

    #[test]
    fn factorization_products_reassemble() {
        for n in 1..2000u64 {
            let f = factorize(n).unwrap();
            let prod: u64 = f.pairs().iter().map(|&(p, m)| p.pow(m)).product();
            assert_eq!(prod, n);
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn primality_matches_sieve() {
        let limit = 5000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &prime) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), prime, "n = {n}");
        }
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(4_294_967_297));
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(irreducible_count(2, 4).unwrap(), 3);
        assert_eq!(irreducible_count(3, 2).unwrap(), 3);
        assert_eq!(irreducible_count(2, 12).unwrap(), 335);
        assert_eq!(primitive_count(2, 4).unwrap(), 2);
        assert_eq!(primitive_count(3, 2).unwrap(), 2);
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(factorize(12).unwrap().divisors(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(factorize(1).unwrap().divisors(), vec![1]);
    }

    #[test]
    fn from_pairs_validates() {
        assert_eq!(
            Factorization::from_pairs(vec![(3, 1), (5, 1)]).unwrap().n(),
            15
        );
        assert!(Factorization::from_pairs(vec![(5, 1), (3, 1)]).is_err());
        assert!(Factorization::from_pairs(vec![(4, 1)]).is_err());
    }
}
