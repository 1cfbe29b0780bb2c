//! The nonzero-count primitivity criterion and its cross-checks.
//!
//! For monic irreducible `p` of degree `k` over `F_q`, write `m = q^k - 1` and
//! `g(x) = (x^m - 1) / ((x - 1) p(x))`. Then `p` is primitive iff `g` has
//! exactly `(q - 1) q^(k-1) - 1 = m - q^(k-1)` nonzero coefficients.
//!
//! Three routes to the same coefficients live here:
//!
//! * [`GDivision`] divides the virtual dividend `x^m - 1` by `(x - 1) p(x)`
//!   keeping only a window of `k + 1` remainder coefficients.
//! * [`TraceCoefficients`] produces coefficient `t` directly as
//!   `p(0)^-1 (Tr(b) - Tr(b a^(t+1)))` in `F_{q^k} = F_q[x]/(r)`, where `r`
//!   is the monic reciprocal of `p`, `a` is the class of `x` and
//!   `b = a^(k-1) / (r'(a) (1 - a))`.
//! * [`order_primitivity_test`] decides primitivity from the multiplicative
//!   order of `x` modulo `p`.

use std::time::Instant;

use crate::error::{Error, NotApplicableReason, Result};
use crate::field::{ExtElem, ExtField, FieldSpec, FqElem, TraceForm};
use crate::nt::{self, Factorization};
use crate::poly::Poly;

/// Default cap on the number of stored coefficients for dense outputs.
pub const DEFAULT_DENSE_CAP: u64 = 1 << 24;

/// Degree of a polynomial that must be monic of degree at least 1.
fn monic_degree(p: &Poly) -> Result<usize> {
    match p.degree() {
        Some(k) if k >= 1 => {
            if p.is_monic() {
                Ok(k)
            } else {
                Err(Error::NotMonic)
            }
        }
        _ => Err(Error::InvalidArgument(format!(
            "expected a polynomial of degree at least 1, got {p}"
        ))),
    }
}

/// Rejects `p(0) = 0` and `p(1) = 0`.
pub fn check_applicable(p: &Poly) -> Result<()> {
    let f = p.field();
    if p.coeff(0).is_zero() {
        return Err(Error::NotApplicable(NotApplicableReason::ZeroConstantTerm));
    }
    if p.eval(f.one()).is_zero() {
        return Err(Error::NotApplicable(NotApplicableReason::VanishesAtOne));
    }
    Ok(())
}

pub fn require_irreducible(p: &Poly) -> Result<()> {
    if p.is_irreducible()? {
        Ok(())
    } else {
        Err(Error::NotIrreducible)
    }
}

/// Synthetic division of `x^m - 1` by the monic `(x - 1) p(x)` of degree
/// `d = k + 1`.
///
/// The dividend is never stored. State is the window of the `d` running
/// remainder coefficients; each step shifts in one dividend coefficient and
/// emits one quotient coefficient, highest degree first.
#[derive(Debug, Clone)]
pub struct GDivision {
    field: FieldSpec,
    m: u64,
    // Low `d` coefficients of the monic divisor.
    divisor_low: Vec<FqElem>,
}

impl GDivision {
    pub fn new(p: &Poly) -> Result<Self> {
        let k = monic_degree(p)?;
        check_applicable(p)?;
        let field = p.field().clone();
        let m = nt::checked_order(field.q(), k as u64)?;
        if m < k as u64 + 1 {
            return Err(Error::InvalidArgument(format!(
                "m = {m} is below the divisor degree {}",
                k + 1
            )));
        }
        let x_minus_1 = Poly::new(&field, vec![field.neg(field.one()), field.one()]);
        let divisor = x_minus_1.mul(p)?;
        let d = k + 1;
        Ok(Self {
            field,
            m,
            divisor_low: divisor.coeffs()[..d].to_vec(),
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of remainder coefficients held while streaming: `k + 1`.
    pub fn window_len(&self) -> usize {
        self.divisor_low.len()
    }

    /// `deg g = m - k - 1`.
    pub fn quotient_degree(&self) -> u64 {
        self.m - self.window_len() as u64
    }

    /// Streams `(degree, coefficient)` for every quotient coefficient from
    /// `deg g` down to 0, then checks that the remainder vanishes.
    pub fn run(&self, mut emit: impl FnMut(u64, FqElem)) -> Result<()> {
        let f = &self.field;
        let d = self.window_len();
        let low = &self.divisor_low;
        let minus_one = f.neg(f.one());
        let top_quotient = self.quotient_degree();
        let mut window = vec![FqElem::ZERO; d];
        for n in (0..=self.m).rev() {
            let incoming = if n == self.m {
                f.one()
            } else if n == 0 {
                minus_one
            } else {
                FqElem::ZERO
            };
            let c = window[d - 1];
            if c.is_zero() {
                window.copy_within(0..d - 1, 1);
                window[0] = incoming;
            } else {
                for i in (1..d).rev() {
                    window[i] = f.sub(window[i - 1], f.mul(c, low[i]));
                }
                window[0] = f.sub(incoming, f.mul(c, low[0]));
            }
            if n <= top_quotient {
                emit(n, c);
            }
        }
        if window.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder);
        }
        Ok(())
    }

    /// Number of nonzero quotient coefficients, in `O(k)` memory.
    pub fn count_nonzero(&self) -> Result<u64> {
        let mut count = 0u64;
        self.run(|_, c| count += u64::from(!c.is_zero()))?;
        Ok(count)
    }

    /// The dense quotient, refusing to store more than `cap` coefficients.
    pub fn quotient(&self, cap: u64) -> Result<Poly> {
        let len = self.quotient_degree() + 1;
        if len > cap {
            return Err(Error::CapExceeded {
                what: "dense g",
                needed: len,
                cap,
            });
        }
        let mut coeffs = vec![FqElem::ZERO; len as usize];
        self.run(|n, c| coeffs[n as usize] = c)?;
        Ok(Poly::new(&self.field, coeffs))
    }
}

/// `g(x) = (x^m - 1) / ((x - 1) p(x))` with the default dense cap.
pub fn compute_g(p: &Poly) -> Result<Poly> {
    compute_g_with_cap(p, DEFAULT_DENSE_CAP)
}

pub fn compute_g_with_cap(p: &Poly, cap: u64) -> Result<Poly> {
    GDivision::new(p)?.quotient(cap)
}

/// Nonzero-term count of `g` without materializing it.
pub fn count_g_nonzero(p: &Poly) -> Result<u64> {
    GDivision::new(p)?.count_nonzero()
}

/// Outcome of the criterion for one polynomial. The cross-check fields are
/// `None` when the tester runs in count-only mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitzgeraldReport {
    pub k: usize,
    pub m: u64,
    pub expected_count: u64,
    pub actual_count: u64,
    pub fitzgerald_primitive: bool,
    pub order_e: Option<u64>,
    pub order_primitive: Option<bool>,
    pub agree: Option<bool>,
    pub trace_of_beta: Option<FqElem>,
    pub lagrange_ok: Option<bool>,
}

/// Runs the criterion for many polynomials of one degree over one field,
/// sharing `m`, the expected count and the factorization of `m`.
#[derive(Debug, Clone)]
pub struct FitzgeraldTester {
    field: FieldSpec,
    k: usize,
    m: u64,
    expected_count: u64,
    factored_m: Option<Factorization>,
}

impl FitzgeraldTester {
    pub fn new(field: &FieldSpec, k: usize) -> Result<Self> {
        let mut tester = Self::count_only(field, k)?;
        tester.factored_m = Some(nt::factorize(tester.m)?);
        Ok(tester)
    }

    /// A tester that skips the order and trace cross-checks.
    pub fn count_only(field: &FieldSpec, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        let m = nt::checked_order(field.q(), k as u64)?;
        let q_pow = field.q().pow(k as u32 - 1);
        Ok(Self {
            field: field.clone(),
            k,
            m,
            expected_count: m - q_pow,
            factored_m: None,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// `(q - 1) q^(k-1) - 1`.
    pub fn expected_count(&self) -> u64 {
        self.expected_count
    }

    /// `q^(k-1)`.
    pub fn q_pow_k_minus_1(&self) -> u64 {
        self.m - self.expected_count
    }

    pub fn factored_m(&self) -> Option<&Factorization> {
        self.factored_m.as_ref()
    }

    fn check_input(&self, p: &Poly) -> Result<()> {
        if p.field() != &self.field {
            return Err(Error::SpecMismatch);
        }
        let k = monic_degree(p)?;
        if k != self.k {
            return Err(Error::InvalidArgument(format!(
                "tester is for degree {}, got degree {k}",
                self.k
            )));
        }
        Ok(())
    }

    pub fn test(&self, p: &Poly) -> Result<FitzgeraldReport> {
        self.check_input(p)?;
        check_applicable(p)?;
        require_irreducible(p)?;
        self.test_unchecked(p)
    }

    /// [`FitzgeraldTester::test`] for input already known to be monic,
    /// applicable and irreducible of the right degree.
    pub(crate) fn test_unchecked(&self, p: &Poly) -> Result<FitzgeraldReport> {
        let actual_count = GDivision::new(p)?.count_nonzero()?;
        let fitzgerald_primitive = actual_count == self.expected_count;
        let mut report = FitzgeraldReport {
            k: self.k,
            m: self.m,
            expected_count: self.expected_count,
            actual_count,
            fitzgerald_primitive,
            order_e: None,
            order_primitive: None,
            agree: None,
            trace_of_beta: None,
            lagrange_ok: None,
        };
        if let Some(fact) = &self.factored_m {
            let (e, primitive) = order_of_x(p, fact)?;
            let (trace, ok) = lagrange_identity_unchecked(p)?;
            report.order_e = Some(e);
            report.order_primitive = Some(primitive);
            report.agree = Some(primitive == fitzgerald_primitive);
            report.trace_of_beta = Some(trace);
            report.lagrange_ok = Some(ok);
        }
        Ok(report)
    }

    /// Order of the class of `x` modulo an irreducible `p` with `p(0) != 0`.
    pub fn order_test(&self, p: &Poly) -> Result<(u64, bool)> {
        let fact = match &self.factored_m {
            Some(f) => f,
            None => return order_primitivity_test(p, &nt::factorize(self.m)?),
        };
        order_primitivity_test(p, fact)
    }
}

/// Runs the criterion with every cross-check.
pub fn fitzgerald_test(p: &Poly) -> Result<FitzgeraldReport> {
    let k = monic_degree(p)?;
    FitzgeraldTester::new(p.field(), k)?.test(p)
}

fn order_of_x(p: &Poly, factored_m: &Factorization) -> Result<(u64, bool)> {
    let ext = ExtField::new(p.clone())?;
    let e = ext.mult_order(&ext.generator(), factored_m)?;
    Ok((e, e == factored_m.n()))
}

/// Multiplicative order `e` of the class of `x` in `F_q[x]/(p)` and whether
/// `e = q^k - 1`. Inversion preserves order, so this equals the order of a
/// root of the monic reciprocal.
pub fn order_primitivity_test(p: &Poly, factored_m: &Factorization) -> Result<(u64, bool)> {
    monic_degree(p)?;
    if p.coeff(0).is_zero() {
        return Err(Error::NotApplicable(NotApplicableReason::ZeroConstantTerm));
    }
    require_irreducible(p)?;
    order_of_x(p, factored_m)
}

/// `F_{q^k} = F_q[x]/(r)` with `r` the monic reciprocal of `p`, the class `a`
/// of `x`, and `b = a^(k-1) / (r'(a) (1 - a))`.
#[derive(Debug, Clone)]
pub struct Beta {
    pub ext: ExtField,
    pub reciprocal: Poly,
    pub alpha: ExtElem,
    pub beta: ExtElem,
}

fn beta_unchecked(p: &Poly) -> Result<Beta> {
    let k = monic_degree(p)?;
    let reciprocal = p.monic_reciprocal()?;
    let ext = ExtField::new(reciprocal.clone())?;
    let alpha = ext.generator();
    let deriv_at_alpha = reciprocal.derivative().eval_ext(&alpha, &ext)?;
    let one_minus_alpha = ext.sub(&ext.one(), &alpha);
    let denom = ext.mul(&deriv_at_alpha, &one_minus_alpha);
    let beta = ext.div(&ext.pow(&alpha, k as u64 - 1), &denom)?;
    Ok(Beta {
        ext,
        reciprocal,
        alpha,
        beta,
    })
}

pub fn compute_beta(p: &Poly) -> Result<Beta> {
    monic_degree(p)?;
    check_applicable(p)?;
    require_irreducible(p)?;
    beta_unchecked(p)
}

fn lagrange_identity_unchecked(p: &Poly) -> Result<(FqElem, bool)> {
    let b = beta_unchecked(p)?;
    let f = p.field();
    let trace = b.ext.trace(&b.beta)?;
    let r_at_one = b.reciprocal.eval(f.one());
    let ok = !r_at_one.is_zero() && !trace.is_zero() && trace == f.inv(r_at_one)?;
    Ok((trace, ok))
}

/// `(Tr(b), Tr(b) == 1 / r(1) != 0)` for the `b` of [`compute_beta`].
pub fn lagrange_identity_check(p: &Poly) -> Result<(FqElem, bool)> {
    monic_degree(p)?;
    check_applicable(p)?;
    require_irreducible(p)?;
    lagrange_identity_unchecked(p)
}

/// Where the values of a [`CoefficientStream`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamSource {
    Division,
    Trace,
}

/// Coefficients of `g`, constant term first. The division source stores
/// `deg g + 1` values, the trace source all `m` values for `t < m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientStream {
    pub values: Vec<FqElem>,
    pub source: StreamSource,
}

impl CoefficientStream {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn nonzero_count(&self) -> u64 {
        self.values.iter().filter(|c| !c.is_zero()).count() as u64
    }

    /// Elementwise equality after padding the shorter stream with zeros.
    pub fn eq_padded(&self, other: &CoefficientStream) -> bool {
        let n = self.len().max(other.len());
        (0..n).all(|i| {
            self.values.get(i).copied().unwrap_or(FqElem::ZERO)
                == other.values.get(i).copied().unwrap_or(FqElem::ZERO)
        })
    }
}

/// Coefficients of `g` from the division route.
pub fn division_coefficient_stream(p: &Poly, cap: u64) -> Result<CoefficientStream> {
    let g = compute_g_with_cap(p, cap)?;
    let len = GDivision::new(p)?.quotient_degree() as usize + 1;
    let mut values = g.coeffs().to_vec();
    values.resize(len, FqElem::ZERO);
    Ok(CoefficientStream {
        values,
        source: StreamSource::Division,
    })
}

/// Iterator over `p(0)^-1 (Tr(b) - Tr(b a^(t+1)))` for `t = 0..m`.
///
/// The running product `b a^(t+1)` advances by one multiplication by `a`
/// per step. Traces go through the linear form built from `Tr(a^j)`,
/// `j < k`, each of which is a sum of Frobenius powers.
#[derive(Debug, Clone)]
pub struct TraceCoefficients {
    ext: ExtField,
    form: TraceForm,
    scale: FqElem,
    trace_beta: FqElem,
    running: ExtElem,
    next_t: u64,
    m: u64,
}

impl TraceCoefficients {
    pub fn new(p: &Poly) -> Result<Self> {
        let b = compute_beta(p)?;
        let f = p.field();
        let m = b.ext.group_order()?;
        let form = b.ext.trace_form()?;
        let trace_beta = b.ext.trace(&b.beta)?;
        let running = b.ext.mul(&b.beta, &b.alpha);
        Ok(Self {
            scale: f.inv(p.coeff(0))?,
            ext: b.ext,
            form,
            trace_beta,
            running,
            next_t: 0,
            m,
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }
}

impl Iterator for TraceCoefficients {
    type Item = FqElem;

    fn next(&mut self) -> Option<FqElem> {
        if self.next_t >= self.m {
            return None;
        }
        let f = self.ext.base();
        let diff = f.sub(self.trace_beta, self.form.apply(&self.running));
        self.ext.mul_by_generator_in_place(&mut self.running);
        self.next_t += 1;
        Some(f.mul(self.scale, diff))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.m - self.next_t) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for TraceCoefficients {}

/// All `m` trace-route coefficients, refusing to store more than `cap`.
pub fn trace_coefficient_stream(p: &Poly, cap: u64) -> Result<CoefficientStream> {
    let iter = TraceCoefficients::new(p)?;
    if iter.m() > cap {
        return Err(Error::CapExceeded {
            what: "trace coefficient stream",
            needed: iter.m(),
            cap,
        });
    }
    Ok(CoefficientStream {
        values: iter.collect(),
        source: StreamSource::Trace,
    })
}

/// Nonzero count of the trace route, without storage.
pub fn trace_count_nonzero(p: &Poly) -> Result<u64> {
    Ok(TraceCoefficients::new(p)?.filter(|c| !c.is_zero()).count() as u64)
}

/// First `n` coefficients of the power series `1 / p(x)`, from the
/// recurrence `p(x) * sum c_j x^j = 1`.
pub fn inverse_series_coefficients(p: &Poly, n: usize) -> Result<Vec<FqElem>> {
    let f = p.field();
    let c0 = p.coeff(0);
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv = f.inv(c0)?;
    let mut out: Vec<FqElem> = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = if j == 0 { f.one() } else { f.zero() };
        for i in 1..=j.min(p.coeffs().len().saturating_sub(1)) {
            acc = f.sub(acc, f.mul(p.coeff(i), out[j - i]));
        }
        out.push(f.mul(acc, inv));
    }
    Ok(out)
}

/// Checks `c_j = p(0)^-1 Tr(a^(k-1+j) / r'(a))` for the first `n` coefficients
/// of `1 / p(x)`, where `a` is a root of the monic reciprocal `r`.
pub fn inverse_series_trace_check(p: &Poly, n: usize) -> Result<bool> {
    let k = monic_degree(p)?;
    if p.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    require_irreducible(p)?;
    let f = p.field();
    let series = inverse_series_coefficients(p, n)?;
    let reciprocal = p.monic_reciprocal()?;
    let ext = ExtField::new(reciprocal.clone())?;
    let alpha = ext.generator();
    let residue = ext.div(
        &ext.pow(&alpha, k as u64 - 1),
        &reciprocal.derivative().eval_ext(&alpha, &ext)?,
    )?;
    let form = ext.trace_form()?;
    let scale = f.inv(p.coeff(0))?;
    let mut term = residue;
    for &c in &series {
        if f.mul(scale, form.apply(&term)) != c {
            return Ok(false);
        }
        ext.mul_by_generator_in_place(&mut term);
    }
    Ok(true)
}

/// With `e` the order of `x` and `N = m - #nonzero(g)`: `N` is a multiple of
/// `m / e`, and `N = q^(k-1)` exactly when `e = m`.
pub fn order_divisibility_check(p: &Poly) -> Result<bool> {
    let k = monic_degree(p)?;
    let tester = FitzgeraldTester::new(p.field(), k)?;
    let report = tester.test(p)?;
    Ok(divisibility_holds(&report, tester.q_pow_k_minus_1()))
}

pub(crate) fn divisibility_holds(report: &FitzgeraldReport, q_pow_k_minus_1: u64) -> bool {
    let Some(e) = report.order_e else {
        return false;
    };
    let zeros = report.m - report.actual_count;
    let cofactor = report.m / e;
    zeros.is_multiple_of(cofactor) && ((e == report.m) == (zeros == q_pow_k_minus_1))
}

/// Sizes of the fibers `Tr^-1(c)`, indexed by the base-field element index.
pub fn trace_fiber_census(ext: &ExtField) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; ext.base().q() as usize];
    for x in ext.elements()? {
        counts[ext.trace(&x)?.index() as usize] += 1;
    }
    Ok(counts)
}

/// Wall-clock comparison of the two coefficient routes for one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct StreamTiming {
    pub division_count: u64,
    pub trace_count: u64,
    pub division_secs: f64,
    pub trace_secs: f64,
}

pub fn time_streams(p: &Poly) -> Result<StreamTiming> {
    let start = Instant::now();
    let division_count = count_g_nonzero(p)?;
    let division_secs = start.elapsed().as_secs_f64();
    let start = Instant::now();
    let trace_count = trace_count_nonzero(p)?;
    let trace_secs = start.elapsed().as_secs_f64();
    Ok(StreamTiming {
        division_count,
        trace_count,
        division_secs,
        trace_secs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn p(field: &FieldSpec, coeffs: &[u64]) -> Poly {
        Poly::from_u64s(field, coeffs)
    }

    /// Oracle for g: materialize x^m - 1 and long-divide by (x - 1) p(x).
    fn g_by_long_division(a: &Poly) -> Poly {
        let f = a.field();
        let k = a.degree().unwrap();
        let m = f.q().pow(k as u32) - 1;
        let mut dividend = vec![FqElem::ZERO; m as usize + 1];
        dividend[0] = f.neg(f.one());
        dividend[m as usize] = f.one();
        let dividend = Poly::new(f, dividend);
        let divisor = Poly::new(f, vec![f.neg(f.one()), f.one()]).mul(a).unwrap();
        let (quot, rem) = dividend.div_rem(&divisor).unwrap();
        assert!(rem.is_zero());
        quot
    }

    #[test]
    fn g_examples() {
        assert_eq!(compute_g(&p(&f2(), &[1, 1, 1])).unwrap(), Poly::one(&f2()));
        let g = compute_g(&p(&f2(), &[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(g.to_string(), "x^10+x^5+1");
        assert_eq!(compute_g(&p(&f3(), &[1, 1])).unwrap(), Poly::one(&f3()));
    }

    #[test]
    fn g_matches_long_division() {
        for (field, k) in [
            (f2(), 5usize),
            (f2(), 6),
            (f3(), 3),
            (FieldSpec::extension(2, 2).unwrap(), 2),
        ] {
            for idx in 0..field.q().pow(k as u32) {
                let a = Poly::monic_from_index(&field, k, idx).unwrap();
                if check_applicable(&a).is_err() || !a.is_irreducible().unwrap() {
                    continue;
                }
                let g = compute_g(&a).unwrap();
                assert_eq!(g, g_by_long_division(&a), "{a}");
                assert_eq!(g.degree(), Some(field.q().pow(k as u32) as usize - k - 2));
            }
        }
    }

    #[test]
    fn g_gates_and_errors() {
        assert_eq!(
            compute_g(&p(&f2(), &[1, 1])),
            Err(Error::NotApplicable(NotApplicableReason::VanishesAtOne))
        );
        assert_eq!(
            compute_g(&p(&f2(), &[0, 1, 1, 1])),
            Err(Error::NotApplicable(NotApplicableReason::ZeroConstantTerm))
        );
        // (x^2 + x + 1)^2 is reducible and the division is not exact.
        assert_eq!(
            compute_g(&p(&f2(), &[1, 0, 1, 0, 1])),
            Err(Error::NonzeroRemainder)
        );
        assert!(matches!(
            compute_g_with_cap(&p(&f2(), &[1, 1, 0, 0, 1]), 10),
            Err(Error::CapExceeded {
                needed: 11,
                cap: 10,
                ..
            })
        ));
        assert_eq!(compute_g(&p(&f3(), &[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn report_examples() {
        let r = fitzgerald_test(&p(&f2(), &[1, 1, 0, 0, 1])).unwrap();
        assert_eq!((r.expected_count, r.actual_count), (7, 7));
        assert!(r.fitzgerald_primitive);
        assert_eq!(r.order_e, Some(15));
        assert_eq!(r.agree, Some(true));

        let r = fitzgerald_test(&p(&f2(), &[1, 1, 1, 1, 1])).unwrap();
        assert_eq!((r.expected_count, r.actual_count), (7, 3));
        assert!(!r.fitzgerald_primitive);
        assert_eq!(r.order_e, Some(5));
        assert_eq!(r.agree, Some(true));

        assert_eq!(
            fitzgerald_test(&p(&f2(), &[1, 1])),
            Err(Error::NotApplicable(NotApplicableReason::VanishesAtOne))
        );
        assert_eq!(
            fitzgerald_test(&p(&f2(), &[1, 0, 1, 0, 1])),
            Err(Error::NotIrreducible)
        );
    }

    #[test]
    fn count_only_tester_skips_cross_checks() {
        let t = FitzgeraldTester::count_only(&f2(), 4).unwrap();
        let r = t.test(&p(&f2(), &[1, 1, 0, 0, 1])).unwrap();
        assert_eq!(r.actual_count, 7);
        assert_eq!(r.order_e, None);
        assert_eq!(r.agree, None);
        assert!(t
            .test(&p(&f2(), &[1, 1, 1]))
            .unwrap_err()
            .to_string()
            .contains("degree"));
    }

    #[test]
    fn order_test_examples() {
        let f15 = nt::factorize(15).unwrap();
        assert_eq!(
            order_primitivity_test(&p(&f2(), &[1, 1, 0, 0, 1]), &f15).unwrap(),
            (15, true)
        );
        assert_eq!(
            order_primitivity_test(&p(&f2(), &[1, 1, 1, 1, 1]), &f15).unwrap(),
            (5, false)
        );
        assert_eq!(
            order_primitivity_test(&p(&f3(), &[1, 1]), &nt::factorize(2).unwrap()).unwrap(),
            (2, true)
        );
        assert_eq!(
            order_primitivity_test(&p(&f2(), &[1, 0, 1, 1, 1]), &f15),
            Err(Error::NotIrreducible)
        );
    }

    #[test]
    fn beta_examples() {
        let f = f3();
        let b = compute_beta(&p(&f, &[1, 1])).unwrap();
        assert_eq!(b.alpha.coeffs(), &[f.from_u64(2)]);
        assert_eq!(b.beta.coeffs(), &[f.from_u64(2)]);

        let b = compute_beta(&p(&f2(), &[1, 1, 1])).unwrap();
        assert!(!b.beta.is_zero());
        // beta = a / (1 + a) in F_4 with a^2 = a + 1: 1 + a = a^2, so beta = a^-1 = a + 1.
        let expected = b.ext.add(&b.alpha, &b.ext.one());
        assert_eq!(b.beta, expected);
    }

    #[test]
    fn lagrange_examples() {
        let (t, ok) = lagrange_identity_check(&p(&f2(), &[1, 1, 0, 0, 1])).unwrap();
        assert_eq!(t, f2().one());
        assert!(ok);
        let (t, ok) = lagrange_identity_check(&p(&f3(), &[1, 1])).unwrap();
        assert_eq!(t, f3().from_u64(2));
        assert!(ok);
        // x^2 + 1 over F_3: reciprocal is itself, r(1) = 2, so Tr(b) must be 2.
        let (t, ok) = lagrange_identity_check(&p(&f3(), &[1, 0, 1])).unwrap();
        assert_eq!(t, f3().from_u64(2));
        assert!(ok);
    }

    #[test]
    fn trace_stream_examples() {
        let a = p(&f2(), &[1, 1, 1]);
        let s = trace_coefficient_stream(&a, DEFAULT_DENSE_CAP).unwrap();
        let one = f2().one();
        assert_eq!(s.values, vec![one, FqElem::ZERO, FqElem::ZERO]);
        assert!(s.eq_padded(&division_coefficient_stream(&a, DEFAULT_DENSE_CAP).unwrap()));

        let a = p(&f2(), &[1, 1, 1, 1, 1]);
        let s = trace_coefficient_stream(&a, DEFAULT_DENSE_CAP).unwrap();
        let support: Vec<usize> = (0..s.len()).filter(|&i| !s.values[i].is_zero()).collect();
        assert_eq!(support, vec![0, 5, 10]);

        assert!(matches!(
            trace_coefficient_stream(&a, 14),
            Err(Error::CapExceeded { needed: 15, .. })
        ));
    }

    #[test]
    fn streams_agree_on_small_sweeps() {
        for (field, k) in [
            (f2(), 6usize),
            (f3(), 3),
            (FieldSpec::prime(5).unwrap(), 2),
            (FieldSpec::extension(3, 2).unwrap(), 2),
        ] {
            for idx in 0..field.q().pow(k as u32) {
                let a = Poly::monic_from_index(&field, k, idx).unwrap();
                if check_applicable(&a).is_err() || !a.is_irreducible().unwrap() {
                    continue;
                }
                let div = division_coefficient_stream(&a, DEFAULT_DENSE_CAP).unwrap();
                let tr = trace_coefficient_stream(&a, DEFAULT_DENSE_CAP).unwrap();
                assert_eq!(tr.len() as u64, field.q().pow(k as u32) - 1);
                assert_eq!(div.len(), tr.len() - k);
                assert!(div.eq_padded(&tr), "{a} over {field}");
            }
        }
    }

    #[test]
    fn inverse_series_examples() {
        let one = f2().one();
        let s = inverse_series_coefficients(&Poly::one(&f2()), 4).unwrap();
        assert_eq!(s, vec![one, FqElem::ZERO, FqElem::ZERO, FqElem::ZERO]);
        let s = inverse_series_coefficients(&p(&f2(), &[1, 1]), 6).unwrap();
        assert!(s.iter().all(|&c| c == one));
        let s = inverse_series_coefficients(&p(&f2(), &[1, 1, 1]), 6).unwrap();
        let z = FqElem::ZERO;
        assert_eq!(s, vec![one, one, z, one, one, z]);
        assert_eq!(
            inverse_series_coefficients(&p(&f2(), &[0, 1]), 3),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn inverse_series_truncation_and_traces() {
        for (field, k) in [
            (f2(), 5usize),
            (f3(), 3),
            (FieldSpec::extension(2, 2).unwrap(), 2),
        ] {
            for idx in 0..field.q().pow(k as u32) {
                let a = Poly::monic_from_index(&field, k, idx).unwrap();
                if a.coeff(0).is_zero() {
                    continue;
                }
                let n = 20;
                let series = Poly::new(&field, inverse_series_coefficients(&a, n).unwrap());
                let prod = a.mul(&series).unwrap();
                for i in 0..n {
                    let expected = if i == 0 { field.one() } else { FqElem::ZERO };
                    assert_eq!(prod.coeff(i), expected);
                }
                if a.is_irreducible().unwrap() {
                    assert!(inverse_series_trace_check(&a, n).unwrap(), "{a}");
                }
            }
        }
    }

    #[test]
    fn divisibility_examples() {
        assert!(order_divisibility_check(&p(&f2(), &[1, 1, 0, 0, 1])).unwrap());
        assert!(order_divisibility_check(&p(&f2(), &[1, 1, 1, 1, 1])).unwrap());
        assert!(order_divisibility_check(&p(&f3(), &[1, 1])).unwrap());
        let r = fitzgerald_test(&p(&f2(), &[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(r.m - r.actual_count, 12);
    }

    #[test]
    fn fiber_census_small() {
        let ext = ExtField::new(p(&f2(), &[1, 1, 0, 0, 1])).unwrap();
        assert_eq!(trace_fiber_census(&ext).unwrap(), vec![8, 8]);
        let ext = ExtField::new(p(&f3(), &[1, 0, 1])).unwrap();
        assert_eq!(trace_fiber_census(&ext).unwrap(), vec![3, 3, 3]);
    }

    #[test]
    fn streaming_window_is_k_plus_one() {
        let a = p(
            &f2(),
            &[
                1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
            ],
        );
        let div = GDivision::new(&a).unwrap();
        assert_eq!(div.window_len(), 21);
        assert_eq!(div.m(), (1 << 20) - 1);
    }
}
