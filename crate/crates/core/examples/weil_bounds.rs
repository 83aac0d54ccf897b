//! Brute-force counts of small affine varieties against the uniform Weil
//! bounds.
//!
//! cargo run --release --example weil_bounds

use frobrad::weilcheck::{brute_count, dz2_check, AffineVarietySpec};

fn main() -> frobrad::Result<()> {
    let specs = [
        ("circle x^2 + y^2 = 1", "101 2 1 2 1 1\n1:2,0 1:0,2 -1:0,0\n"),
        ("three planes xyz = 0", "31 3 1 3 2 3\n1:1,1,1\n"),
        ("line x = y = z", "47 3 2 1 1 1\n1:1,0,0 -1:0,1,0\n1:0,1,0 -1:0,0,1\n"),
        ("circle with a wrong dim hint", "1009 2 1 2 0 1\n1:2,0 1:0,2 -1:0,0\n"),
    ];
    for (name, text) in specs {
        let v: AffineVarietySpec = text.parse()?;
        let count = brute_count(&v)?;
        println!(
            "{name:32} l={:5} |V| = {count:7}  dz1 bound {:12.1}  dz2 holds: {}",
            v.ell(),
            v.dz1_bound(),
            dz2_check(&v)?
        );
    }
    Ok(())
}
