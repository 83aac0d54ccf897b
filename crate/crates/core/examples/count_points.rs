//! Traces of Frobenius and point counts, small and large primes.
//!
//! cargo run --example count_points

use frobrad::curves::{ap_bsgs, ap_naive, count_record, good_reduction, CurveSpec, DEFAULT_GENUS2_CAP};

fn main() -> frobrad::Result<()> {
    let e: CurveSpec = "E:1,1".parse()?;
    println!("{e}, discriminant {}", e.elliptic_discriminant().unwrap());
    for p in [5u64, 7, 31, 101] {
        if good_reduction(&e, p) {
            println!("  a_{p} = {}", ap_naive(&e, p)?);
        } else {
            println!("  p = {p}: bad reduction");
        }
    }

    // above 2^14 the trace comes from baby-step giant-step on the group
    let p = 1_000_003;
    println!("  a_{p} = {} (BSGS)", ap_bsgs(&e, p)?);

    let h: CurveSpec = "H:1,1,0,0,0,1,0".parse()?;
    println!("{h}");
    for p in [5u64, 11, 13] {
        println!("  {:?}", count_record(&h, p, DEFAULT_GENUS2_CAP)?);
    }
    Ok(())
}
