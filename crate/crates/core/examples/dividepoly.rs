//! Radical divisibility of integer polynomials, exactly and modulo primes.
//!
//! cargo run --example dividepoly

use frobrad::polyalg::{poly_radical, rad_divides_exact, rad_divides_mod_ell, separable_power_structure, IntPoly};

fn main() -> frobrad::Result<()> {
    let f = IntPoly::from_i64s(&[1, 0, 1]); // x^2 + 1
    let g = &f.pow(3) * &IntPoly::linear(2);
    println!("rad({g}) = {}", poly_radical(&g)?);
    println!("rad({f}) | rad({g}): {}", rad_divides_exact(&f, &g)?);

    let h = IntPoly::from_i64s(&[-2, 0, 1]); // x^2 - 2
    println!("rad({h}) | rad({g}): {}", rad_divides_exact(&h, &g)?);
    // x^2 - 2 = x^2 + 1 mod 3, so the modular test alone is fooled there
    for ell in [3u64, 7, 17, 23] {
        println!("  mod {ell}: {}", rad_divides_mod_ell(&h, &g, ell)?);
    }

    let ps = separable_power_structure(&f.pow(3))?;
    println!("{} = ({})^{}, separable base: {}", f.pow(3), ps.base, ps.exponent, ps.separable);
    Ok(())
}
