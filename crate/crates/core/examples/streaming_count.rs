//! Count the nonzero terms of g for a degree-20 trinomial without storing g.
//! The division keeps a window of 21 remainder coefficients regardless of m.
//!
//! cargo run --release --example streaming_count

use std::time::Instant;

use fitzgerald::criterion::GDivision;
use fitzgerald::{parse_poly, FieldSpec, FitzgeraldTester};

fn main() -> fitzgerald::Result<()> {
    let f2 = FieldSpec::prime(2)?;
    let p = parse_poly("x^20+x^3+1", &f2)?;
    let division = GDivision::new(&p)?;
    let start = Instant::now();
    let count = division.count_nonzero()?;
    let expected = FitzgeraldTester::count_only(&f2, 20)?.expected_count();
    println!("p = {p}");
    println!(
        "m = {}, window = {} coefficients",
        division.m(),
        division.window_len()
    );
    println!("nonzero terms {count}, primitive needs {expected}");
    println!("took {:.2?}", start.elapsed());
    Ok(())
}
