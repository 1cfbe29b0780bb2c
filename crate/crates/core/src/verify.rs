//! The full invariant suite for one `(q, k)` sweep.

use std::fmt;

use rayon::prelude::*;

use crate::criterion::{
    divisibility_holds, division_coefficient_stream, inverse_series_trace_check,
    trace_coefficient_stream, trace_fiber_census, DEFAULT_DENSE_CAP,
};
use crate::enumeration::{classify_all_with, ClassificationRow, Summary, SweepOptions};
use crate::error::{Error, Result};
use crate::field::{first_irreducible, ExtField, FieldSpec};

/// Fiber census runs only for extensions with at most this many elements.
pub const CENSUS_LIMIT: u64 = 4096;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub jobs: usize,
    /// Streams longer than this are not materialized; stream equality is skipped.
    pub dense_cap: u64,
    /// Terms of `1 / p(x)` compared against their trace form.
    pub series_terms: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            dense_cap: DEFAULT_DENSE_CAP,
            series_terms: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: u64,
    pub failures: Vec<String>,
    pub skipped: Option<String>,
}

impl PropertyResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: Vec::new(),
            skipped: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(why) = &self.skipped {
            return write!(f, "SKIP {} ({why})", self.name);
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} (checked {})", self.name, self.checked)?;
        if let Some(first) = self.failures.first() {
            write!(f, " first failure: {first}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub summary: Summary,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

struct PolyChecks {
    streams: Option<(bool, bool)>,
    series: bool,
}

fn check_poly(
    row: &ClassificationRow,
    m: u64,
    k: usize,
    opts: &VerifyOptions,
) -> Result<PolyChecks> {
    let p = &row.poly;
    let streams = if m <= opts.dense_cap {
        let div = division_coefficient_stream(p, opts.dense_cap)?;
        let tr = trace_coefficient_stream(p, opts.dense_cap)?;
        Some((div.eq_padded(&tr), div.len() as u64 == m - k as u64))
    } else {
        None
    };
    let series = inverse_series_trace_check(p, opts.series_terms.min(m as usize))?;
    Ok(PolyChecks { streams, series })
}

pub fn verify_sweep(field: &FieldSpec, k: usize, opts: VerifyOptions) -> Result<VerifyReport> {
    let sweep = SweepOptions {
        classify: true,
        jobs: opts.jobs,
        ..Default::default()
    };
    let (rows, summary) = classify_all_with(field, k, sweep)?;
    let applicable: Vec<&ClassificationRow> = rows.iter().filter(|r| r.report.is_some()).collect();
    let m = crate::nt::checked_order(field.q(), k as u64)?;
    let q_pow = m + 1 - (m + 1) / field.q() * (field.q() - 1);

    let run = || -> Result<Vec<PolyChecks>> {
        applicable
            .par_iter()
            .map(|row| check_poly(row, m, k, &opts))
            .collect()
    };
    let checks = if opts.jobs <= 1 {
        applicable
            .iter()
            .map(|row| check_poly(row, m, k, &opts))
            .collect::<Result<Vec<_>>>()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run)?
    };

    let mut equivalence = PropertyResult::new("criterion_equivalence");
    let mut irreducible_count = PropertyResult::new("irreducible_count");
    let mut primitive_count = PropertyResult::new("primitive_count");
    let mut stream_equality = PropertyResult::new("stream_equality");
    let mut degree = PropertyResult::new("g_degree");
    let mut lagrange = PropertyResult::new("lagrange_identity");
    let mut divisibility = PropertyResult::new("divisibility");
    let mut series = PropertyResult::new("inverse_series_traces");
    let mut census = PropertyResult::new("trace_fibers");

    irreducible_count.record(summary.irreducible_count_ok(), || {
        format!(
            "{} irreducible, expected {}",
            summary.irreducible, summary.expected_irreducible
        )
    });
    primitive_count.record(summary.primitive_count_ok(), || {
        format!(
            "{} primitive, expected {}",
            summary.order_primitive, summary.expected_primitive
        )
    });

    for (row, chk) in applicable.iter().zip(&checks) {
        let report = row.report.as_ref().expect("applicable rows carry a report");
        let name = || row.poly.to_string();
        equivalence.record(report.agree == Some(true), name);
        lagrange.record(report.lagrange_ok == Some(true), name);
        divisibility.record(divisibility_holds(report, q_pow), name);
        series.record(chk.series, name);
        if let Some((eq, deg)) = chk.streams {
            stream_equality.record(eq, name);
            degree.record(deg, name);
        }
    }
    if m > opts.dense_cap {
        let why = format!("m = {m} above dense cap {}", opts.dense_cap);
        stream_equality.skipped = Some(why.clone());
        degree.skipped = Some(why);
    }

    if m < CENSUS_LIMIT {
        let ext = ExtField::new(first_irreducible(field, k)?)?;
        let fibers = trace_fiber_census(&ext)?;
        let want = (m + 1) / field.q();
        for (c, &n) in fibers.iter().enumerate() {
            census.record(n == want, || {
                format!("fiber over {c} has {n}, expected {want}")
            });
        }
    } else {
        census.skipped = Some(format!("q^k = {} above {CENSUS_LIMIT}", m + 1));
    }

    Ok(VerifyReport {
        summary,
        properties: vec![
            equivalence,
            irreducible_count,
            primitive_count,
            stream_equality,
            degree,
            lagrange,
            divisibility,
            series,
            census,
        ],
    })
}
