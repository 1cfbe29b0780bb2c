//! Primitive-polynomial testing over finite fields by counting nonzero terms.
//!
//! For a monic irreducible `p(x)` of degree `k` over `F_q` with `p(1) != 0`,
//! let `m = q^k - 1` and `g(x) = (x^m - 1) / ((x - 1) p(x))`. Then `p` is
//! primitive exactly when `g` has `(q - 1) q^(k-1) - 1` nonzero coefficients.
//!
//! The crate computes `g` by streaming division and checks the count against
//! two independent routes: the multiplicative order of `x` modulo `p`, and a
//! closed form for every coefficient of `g` as a difference of traces in
//! `F_{q^k}`.
//!
//! ```
//! use fitzgerald::{fitzgerald_test, parse_poly, FieldSpec};
//!
//! let f2 = FieldSpec::prime(2).unwrap();
//! let report = fitzgerald_test(&parse_poly("x^4+x+1", &f2).unwrap()).unwrap();
//! assert_eq!((report.actual_count, report.expected_count), (7, 7));
//! assert!(report.fitzgerald_primitive);
//! assert_eq!(report.order_e, Some(15));
//! ```
//!
//! Modules:
//! - [`field`]: `F_p`, `F_{p^e}`, quotient rings `F_q[x]/(f)`, trace and order.
//! - [`poly`]: dense polynomials, division, gcd, reciprocal, Rabin's test.
//! - [`criterion`]: the quotient `g`, the count verdict and its cross-checks.
//! - [`enumeration`]: exhaustive classification sweeps and count identities.
//! - [`verify`]: the invariant suite run over a whole sweep.
//! - [`cli`]: expression parsing and the `fitzgerald` command line.

pub mod cli;
pub mod criterion;
pub mod enumeration;
pub mod error;
pub mod field;
pub mod nt;
pub mod poly;
pub mod verify;

pub use cli::parse::{parse_coeff_list, parse_poly};
pub use criterion::{
    compute_beta, compute_g, count_g_nonzero, fitzgerald_test, inverse_series_coefficients,
    lagrange_identity_check, order_divisibility_check, order_primitivity_test,
    trace_coefficient_stream, trace_fiber_census, CoefficientStream, FitzgeraldReport,
    FitzgeraldTester, StreamSource,
};
pub use enumeration::{classify_all, enumerate_monic, ClassificationRow, Summary};
pub use error::{Error, NotApplicableReason, Result};
pub use field::{ExtElem, ExtField, FieldSpec, FqElem};
pub use nt::{euler_phi, factorize, moebius, Factorization};
pub use poly::Poly;
