//! The L-polynomial of y^2 = x^5 + x + 1 from counts over F_p and F_{p^2},
//! and the counts it predicts over larger extensions.
//!
//! cargo run --example genus2_zeta

use frobrad::curves::{count_genus2_raw, good_reduction, CurveSpec};
use frobrad::frobenius::{curve_count_from_frobpoly, frobpoly_genus2};

fn main() -> frobrad::Result<()> {
    let c: CurveSpec = "H:1,1,0,0,0,1,0".parse()?;
    let f = [1, 1, 0, 0, 0, 1, 0];
    for p in [5u64, 7, 11, 13, 101] {
        let (n1, n2) = count_genus2_raw(&f, p);
        let l = frobpoly_genus2(n1, n2, p)?;
        let predicted: Vec<i128> = (1..=4).map(|k| curve_count_from_frobpoly(&l, k)).collect::<Result<_, _>>()?;
        let note = if good_reduction(&c, p) { "" } else { "  (bad reduction)" };
        println!("p = {p:3}: L = {l}{note}");
        println!("         N_1..N_4 = {predicted:?}");
    }
    Ok(())
}
