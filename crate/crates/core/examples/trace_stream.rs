//! Coefficients of g from two directions: long division and the trace
//! closed form over the extension defined by the reciprocal polynomial.
//!
//! cargo run --example trace_stream

use fitzgerald::criterion::division_coefficient_stream;
use fitzgerald::{
    compute_beta, inverse_series_coefficients, lagrange_identity_check, parse_poly,
    trace_coefficient_stream, FieldSpec,
};

fn main() -> fitzgerald::Result<()> {
    let f3 = FieldSpec::prime(3)?;
    let p = parse_poly("x^3+2*x+1", &f3)?;
    let cap = 1 << 10;

    let div = division_coefficient_stream(&p, cap)?;
    let tr = trace_coefficient_stream(&p, cap)?;
    let fmt =
        |v: &[fitzgerald::FqElem]| v.iter().map(|c| c.index().to_string()).collect::<String>();
    println!("p = {p} over {f3}");
    println!("division: {}", fmt(&div.values));
    println!("trace:    {}", fmt(&tr.values));
    println!("identical: {}", div.eq_padded(&tr));

    let beta = compute_beta(&p)?;
    let (tb, ok) = lagrange_identity_check(&p)?;
    println!(
        "reciprocal r = {}, Tr(beta) = {} (matches 1/r(1): {ok})",
        beta.reciprocal,
        tb.index()
    );

    let series = inverse_series_coefficients(&p, 12)?;
    println!("1/p(x) = {} ...", fmt(&series));
    Ok(())
}
