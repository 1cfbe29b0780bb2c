//! Classify every monic polynomial of degree k over F_q and compare the
//! totals with the Möbius and totient counts.
//!
//! cargo run --release --example classify_sweep -- 3 4

use fitzgerald::enumeration::{classify_all_with, SweepOptions};
use fitzgerald::FieldSpec;

fn main() -> fitzgerald::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let q = args.next().unwrap_or(2);
    let k = args.next().unwrap_or(6) as usize;

    let field = match (2..=q).find(|p| q % p == 0) {
        Some(p) if p == q => FieldSpec::prime(q)?,
        Some(p) => FieldSpec::extension(p, q.ilog(p))?,
        None => panic!("q must be at least 2"),
    };
    let opts = SweepOptions {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..Default::default()
    };
    let (rows, summary) = classify_all_with(&field, k, opts)?;
    for row in rows.iter().filter(|r| r.report.is_some()).take(10) {
        let r = row.report.as_ref().unwrap();
        println!(
            "{:<24} count {:>5} order {:>6}",
            row.poly.to_string(),
            r.actual_count,
            r.order_e.unwrap()
        );
    }
    println!("{summary}");
    println!("counts match closed forms: {}", summary.ok());
    Ok(())
}
