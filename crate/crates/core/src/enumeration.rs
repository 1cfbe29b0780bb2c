//! Exhaustive sweeps over all monic polynomials of one degree.
//!
//! Rows are produced in lexicographic index order (see
//! [`Poly::monic_from_index`]). Classification of distinct rows is
//! independent, so sweeps can run on a thread pool without changing the
//! output order.

use std::fmt;
use std::ops::Range;

use rayon::prelude::*;

use crate::criterion::{check_applicable, FitzgeraldReport, FitzgeraldTester};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::nt;
use crate::poly::Poly;

pub use crate::nt::{euler_phi, factorize, moebius, Factorization};

/// Default cap on the number of candidates in one sweep.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// Iterator over monic polynomials of a fixed degree, by index.
#[derive(Debug, Clone)]
pub struct MonicIter {
    field: FieldSpec,
    k: usize,
    range: Range<u64>,
}

impl Iterator for MonicIter {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        let idx = self.range.next()?;
        Some(Poly::monic_from_index(&self.field, self.k, idx).expect("index in range"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.range.size_hint()
    }
}

impl ExactSizeIterator for MonicIter {}

fn candidate_count(field: &FieldSpec, k: usize, cap: u64) -> Result<u64> {
    let count = field.q().checked_pow(k as u32).unwrap_or(u64::MAX);
    if count > cap {
        return Err(Error::CapExceeded {
            what: "monic enumeration",
            needed: count,
            cap,
        });
    }
    Ok(count)
}

/// All `q^k` monic polynomials of degree `k`, in lexicographic order.
pub fn enumerate_monic(field: &FieldSpec, k: usize) -> Result<MonicIter> {
    enumerate_monic_with_cap(field, k, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_monic_with_cap(field: &FieldSpec, k: usize, cap: u64) -> Result<MonicIter> {
    let count = candidate_count(field, k, cap)?;
    Ok(MonicIter {
        field: field.clone(),
        k,
        range: 0..count,
    })
}

/// The candidates with index in `range`, for chunked sweeps.
pub fn enumerate_monic_range(field: &FieldSpec, k: usize, range: Range<u64>) -> Result<MonicIter> {
    let count = field.q().checked_pow(k as u32).unwrap_or(u64::MAX);
    if range.end > count {
        return Err(Error::OutOfRange(range.end));
    }
    Ok(MonicIter {
        field: field.clone(),
        k,
        range,
    })
}

/// One candidate of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRow {
    pub index: u64,
    pub poly: Poly,
    pub irreducible: bool,
    /// `p(0) != 0` and `p(1) != 0`.
    pub applicable: bool,
    /// Order of `x` modulo `p`, for irreducible `p` with `p(0) != 0`.
    pub order_e: Option<u64>,
    /// `Some(false)` also for the irreducible `p = x`, which cannot be primitive.
    pub order_primitive: Option<bool>,
    /// Present for applicable irreducibles when classifying.
    pub report: Option<FitzgeraldReport>,
}

/// Totals of a sweep next to the closed-form counts they must match. The
/// closed forms are the standard Möbius and totient counts for irreducible
/// and primitive polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub q: u64,
    pub k: usize,
    pub rows: u64,
    pub irreducible: u64,
    pub classified: u64,
    pub fitzgerald_primitive: u64,
    pub order_primitive: u64,
    pub disagreements: u64,
    pub expected_irreducible: u64,
    pub expected_primitive: u64,
}

impl Summary {
    fn empty(q: u64, k: usize) -> Result<Self> {
        Ok(Self {
            q,
            k,
            rows: 0,
            irreducible: 0,
            classified: 0,
            fitzgerald_primitive: 0,
            order_primitive: 0,
            disagreements: 0,
            expected_irreducible: nt::irreducible_count(q, k as u64)?,
            expected_primitive: nt::primitive_count(q, k as u64)?,
        })
    }

    fn add_row(&mut self, row: &ClassificationRow) {
        self.rows += 1;
        self.irreducible += u64::from(row.irreducible);
        self.order_primitive += u64::from(row.order_primitive == Some(true));
        if let Some(r) = &row.report {
            self.classified += 1;
            self.fitzgerald_primitive += u64::from(r.fitzgerald_primitive);
            self.disagreements += u64::from(r.agree == Some(false));
        }
    }

    /// Combines summaries of disjoint chunks of the same sweep.
    pub fn merge(mut self, other: &Summary) -> Summary {
        self.rows += other.rows;
        self.irreducible += other.irreducible;
        self.classified += other.classified;
        self.fitzgerald_primitive += other.fitzgerald_primitive;
        self.order_primitive += other.order_primitive;
        self.disagreements += other.disagreements;
        self
    }

    pub fn from_rows<'a>(
        q: u64,
        k: usize,
        rows: impl IntoIterator<Item = &'a ClassificationRow>,
    ) -> Result<Self> {
        let mut s = Self::empty(q, k)?;
        for row in rows {
            s.add_row(row);
        }
        Ok(s)
    }

    pub fn irreducible_count_ok(&self) -> bool {
        self.irreducible == self.expected_irreducible
    }

    pub fn primitive_count_ok(&self) -> bool {
        self.order_primitive == self.expected_primitive
    }

    pub fn all_agree(&self) -> bool {
        self.disagreements == 0
    }

    pub fn ok(&self) -> bool {
        self.irreducible_count_ok() && self.primitive_count_ok() && self.all_agree()
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} k={} rows={} irreducible={} expected_irreducible={} classified={} \
             fitzgerald_primitive={} primitive={} expected={} disagreements={}",
            self.q,
            self.k,
            self.rows,
            self.irreducible,
            self.expected_irreducible,
            self.classified,
            self.fitzgerald_primitive,
            self.order_primitive,
            self.expected_primitive,
            self.disagreements
        )
    }
}

/// Irreducibility and applicability of one candidate; with `tester`, also the
/// criterion report and the order test.
pub fn classify_row(
    index: u64,
    poly: Poly,
    tester: Option<&FitzgeraldTester>,
) -> Result<ClassificationRow> {
    let irreducible = poly.is_irreducible()?;
    let applicable = check_applicable(&poly).is_ok();
    let mut row = ClassificationRow {
        index,
        poly,
        irreducible,
        applicable,
        order_e: None,
        order_primitive: None,
        report: None,
    };
    let Some(tester) = tester else {
        return Ok(row);
    };
    if !irreducible {
        return Ok(row);
    }
    if applicable {
        let report = tester.test_unchecked(&row.poly)?;
        row.order_e = report.order_e;
        row.order_primitive = report.order_primitive;
        row.report = Some(report);
    } else if row.poly.coeff(0).is_zero() {
        row.order_primitive = Some(false);
    } else {
        let (e, primitive) = tester.order_test(&row.poly)?;
        row.order_e = Some(e);
        row.order_primitive = Some(primitive);
    }
    Ok(row)
}

/// Options for [`classify_all_with`].
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    /// Run the criterion and the order test on irreducible candidates.
    pub classify: bool,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    pub cap: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            classify: true,
            jobs: 1,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

/// Classifies every monic polynomial of degree `k` and summarizes the sweep.
pub fn classify_all(field: &FieldSpec, k: usize) -> Result<(Vec<ClassificationRow>, Summary)> {
    classify_all_with(field, k, SweepOptions::default())
}

pub fn classify_all_with(
    field: &FieldSpec,
    k: usize,
    opts: SweepOptions,
) -> Result<(Vec<ClassificationRow>, Summary)> {
    let count = candidate_count(field, k, opts.cap)?;
    let tester = if opts.classify {
        Some(FitzgeraldTester::new(field, k)?)
    } else {
        None
    };
    let classify = |idx: u64| {
        let poly = Poly::monic_from_index(field, k, idx)?;
        classify_row(idx, poly, tester.as_ref())
    };
    let rows: Vec<ClassificationRow> = if opts.jobs <= 1 {
        (0..count).map(classify).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..count)
                .into_par_iter()
                .map(classify)
                .collect::<Result<_>>()
        })?
    };
    let summary = Summary::from_rows(field.q(), k, &rows)?;
    Ok((rows, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let polys: Vec<String> = enumerate_monic(&f2, 1)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(polys, vec!["x", "x+1"]);
        let quads: Vec<Poly> = enumerate_monic(&f2, 2).unwrap().collect();
        assert_eq!(quads.len(), 4);
        let irr: Vec<String> = quads
            .iter()
            .filter(|p| p.is_irreducible().unwrap())
            .map(|p| p.to_string())
            .collect();
        assert_eq!(irr, vec!["x^2+x+1"]);

        let f3 = FieldSpec::prime(3).unwrap();
        let quads: Vec<Poly> = enumerate_monic(&f3, 2).unwrap().collect();
        assert_eq!(quads.len(), 9);
        assert_eq!(
            quads.iter().filter(|p| p.is_irreducible().unwrap()).count(),
            3
        );

        assert!(matches!(
            enumerate_monic_with_cap(&f2, 10, 1000),
            Err(Error::CapExceeded { needed: 1024, .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let (rows, s) = classify_all(&f2, 4).unwrap();
        assert_eq!(rows.len(), 16);
        assert_eq!((s.irreducible, s.classified, s.order_primitive), (3, 3, 2));
        assert_eq!(s.expected_primitive, 2);
        assert!(s.ok());
        let primitive: Vec<String> = rows
            .iter()
            .filter(|r| r.order_primitive == Some(true))
            .map(|r| r.poly.to_string())
            .collect();
        assert_eq!(primitive, vec!["x^4+x+1", "x^4+x^3+1"]);

        let (_, s) = classify_all(&f2, 2).unwrap();
        assert_eq!((s.irreducible, s.order_primitive), (1, 1));

        let f3 = FieldSpec::prime(3).unwrap();
        let (_, s) = classify_all(&f3, 2).unwrap();
        assert_eq!(
            (s.irreducible, s.order_primitive, s.expected_primitive),
            (3, 2, 2)
        );
        assert!(s.ok());
    }

    #[test]
    fn degree_one_sweeps() {
        // x + 1 over F_2 is primitive but excluded from the criterion.
        let f2 = FieldSpec::prime(2).unwrap();
        let (rows, s) = classify_all(&f2, 1).unwrap();
        assert_eq!(s.classified, 0);
        assert_eq!(s.order_primitive, 1);
        assert!(s.ok());
        assert!(!rows[1].applicable && rows[1].irreducible);

        let f5 = FieldSpec::prime(5).unwrap();
        let (_, s) = classify_all(&f5, 1).unwrap();
        assert_eq!(s.classified, 3);
        assert!(s.ok(), "{s}");
    }

    #[test]
    fn parallel_matches_sequential() {
        let f3 = FieldSpec::prime(3).unwrap();
        let seq = classify_all(&f3, 4).unwrap();
        let par = classify_all_with(
            &f3,
            4,
            SweepOptions {
                jobs: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn chunked_summaries_merge() {
        let f2 = FieldSpec::prime(2).unwrap();
        let tester = FitzgeraldTester::new(&f2, 6).unwrap();
        let (_, whole) = classify_all(&f2, 6).unwrap();
        let mut merged: Option<Summary> = None;
        for start in (0..64).step_by(16) {
            let rows: Vec<ClassificationRow> = enumerate_monic_range(&f2, 6, start..start + 16)
                .unwrap()
                .zip(start..)
                .map(|(p, i)| classify_row(i, p, Some(&tester)).unwrap())
                .collect();
            let s = Summary::from_rows(2, 6, &rows).unwrap();
            merged = Some(match merged {
                None => s,
                Some(m) => m.merge(&s),
            });
        }
        assert_eq!(merged.unwrap(), whole);
    }

    #[test]
    fn no_irreducible_vanishes_at_one_over_f2() {
        let f2 = FieldSpec::prime(2).unwrap();
        for k in 2..=8 {
            let (rows, _) = classify_all_with(
                &f2,
                k,
                SweepOptions {
                    classify: false,
                    ..Default::default()
                },
            )
            .unwrap();
            assert!(rows.iter().filter(|r| r.irreducible).all(|r| r.applicable));
        }
    }
}
