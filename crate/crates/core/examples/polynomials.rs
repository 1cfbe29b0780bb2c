//! Polynomial arithmetic over F_2: division, gcd, irreducibility.
//!
//! cargo run --example polynomials

use fitzgerald::{parse_poly, FieldSpec};

fn main() -> fitzgerald::Result<()> {
    let f2 = FieldSpec::prime(2)?;
    let a = parse_poly("x^6+x^5+x^4+x^2+1", &f2)?;
    let b = parse_poly("x^3+x+1", &f2)?;

    let (q, r) = a.div_rem(&b)?;
    println!("({a}) = ({b}) * ({q}) + ({r})");
    println!("gcd = {}", a.gcd(&b)?);

    let (g, s, t) = a.extended_gcd(&b)?;
    println!("({s})*a + ({t})*b = {g}");

    for text in ["x^4+x+1", "x^4+x^2+1", "x^4+x^3+x^2+x+1", "x^5+x^2+1"] {
        let p = parse_poly(text, &f2)?;
        println!("{p:<18} irreducible: {}", p.is_irreducible()?);
    }

    let p = parse_poly("x^4+x+1", &f2)?;
    println!("reciprocal of {p} is {}", p.monic_reciprocal()?);
    Ok(())
}
