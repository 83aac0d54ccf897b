//! Frobenius polynomials of products, group orders and the Weil check.
//!
//! cargo run --example frobenius_polys

use std::collections::HashMap;

use frobrad::curves::{count_record, DEFAULT_GENUS2_CAP};
use frobrad::frobenius::{frobpoly_from_record, frobpoly_product, group_order, AbelianVarietySpec};

fn main() -> frobrad::Result<()> {
    let a: AbelianVarietySpec = "E:-1,0^2 * H:1,1,0,0,0,1,0".parse()?;
    println!("A = {a} (dimension {})", a.dimension());
    for p in [5u64, 11, 13] {
        let polys: HashMap<String, _> = a
            .curves()
            .into_iter()
            .map(|c| {
                let r = count_record(c, p, DEFAULT_GENUS2_CAP)?;
                Ok((c.id().to_string(), frobpoly_from_record(&r)?))
            })
            .collect::<frobrad::Result<_>>()?;
        let pa = frobpoly_product(&a, p, &polys)?;
        println!("p = {p}: P = {pa}");
        println!("        |A(F_p)| = {}, roots on |z| = sqrt p: {}", group_order(&pa)?, pa.satisfies_weil());
    }
    Ok(())
}
