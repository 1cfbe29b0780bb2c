//! Decide primitivity of every irreducible quartic over F_2 by counting the
//! nonzero terms of g(x) = (x^15 - 1) / ((x - 1) p(x)).
//!
//! cargo run --example fitzgerald_criterion

use fitzgerald::{compute_g, fitzgerald_test, parse_poly, Error, FieldSpec};

fn main() -> fitzgerald::Result<()> {
    let f2 = FieldSpec::prime(2)?;
    for text in ["x^4+x+1", "x^4+x^3+1", "x^4+x^3+x^2+x+1"] {
        let p = parse_poly(text, &f2)?;
        let report = fitzgerald_test(&p)?;
        println!(
            "{:<18} g = {:<40} count {:>2}/{} order {:>2} primitive {}",
            p.to_string(),
            compute_g(&p)?.to_string(),
            report.actual_count,
            report.expected_count,
            report.order_e.unwrap_or(0),
            report.fitzgerald_primitive,
        );
    }

    // Inputs outside the hypotheses are reported, not silently classified.
    for text in ["x+1", "x^3+x"] {
        let p = parse_poly(text, &f2)?;
        match fitzgerald_test(&p) {
            Err(Error::NotApplicable(why)) => println!("{:<18} {why}", p.to_string()),
            other => println!("{:<18} unexpected: {other:?}", p.to_string()),
        }
    }
    Ok(())
}
