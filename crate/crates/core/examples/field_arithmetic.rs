//! Arithmetic in F_7 and F_9.
//!
//! cargo run --example field_arithmetic

use fitzgerald::FieldSpec;

fn main() -> fitzgerald::Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let a = f7.from_u64(3);
    let b = f7.from_u64(5);
    println!("{f7}: 3 + 5 = {}", f7.format_elem(f7.add(a, b)));
    println!("{f7}: 3 * 5 = {}", f7.format_elem(f7.mul(a, b)));
    println!("{f7}: 1 / 3 = {}", f7.format_elem(f7.inv(a)?));

    let f9 = FieldSpec::extension(3, 2)?;
    println!("\n{f9}");
    let g = f9.generator();
    // Powers of the class of x run through a cyclic subgroup of F_9^*.
    let mut x = f9.one();
    for i in 0..8 {
        println!("  x^{i} = {}", f9.format_elem(x));
        x = f9.mul(x, g);
    }
    let c = f9.from_residues(&[1, 2])?;
    let ci = f9.inv(c)?;
    println!(
        "  {} * {} = {}",
        f9.format_elem(c),
        f9.format_elem(ci),
        f9.format_elem(f9.mul(c, ci))
    );
    Ok(())
}
