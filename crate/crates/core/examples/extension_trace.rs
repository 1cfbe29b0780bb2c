//! The trace F_16 -> F_2 and the balance of its fibers.
//!
//! cargo run --example extension_trace

use fitzgerald::{factorize, parse_poly, trace_fiber_census, ExtField, FieldSpec};

fn main() -> fitzgerald::Result<()> {
    let f2 = FieldSpec::prime(2)?;
    let ext = ExtField::new(parse_poly("x^4+x+1", &f2)?)?;

    let alpha = ext.generator();
    let n = ext.group_order()?;
    let order = ext.mult_order(&alpha, &factorize(n)?)?;
    println!("F_2[x]/(x^4+x+1): |F^*| = {n}, order of x = {order}");

    let mut a = ext.one();
    for i in 0..n {
        let tr = ext.trace(&a)?;
        println!("  Tr(x^{i:<2}) = {}", tr.index());
        a = ext.mul_by_generator(&a);
    }

    let census = trace_fiber_census(&ext)?;
    println!("fiber sizes: {census:?}");
    Ok(())
}
