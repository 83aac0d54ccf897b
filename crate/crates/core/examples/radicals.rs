//! Radicals of integers restricted to a set of primes.
//!
//! cargo run --example radicals

use frobrad::intarith::factorize;
use frobrad::radicals::{rad_divides, rad_lambda, PrimeFilter};

fn main() -> frobrad::Result<()> {
    let n = 720u64;
    println!("{n} = {}", factorize(n));
    for spec in ["all", "mod:4:1", "split:-1", "excl:2,3", "mod:4:1,3&excl:3"] {
        let filter: PrimeFilter = spec.parse()?;
        println!("  rad[{filter}]({n}) = {}", rad_lambda(n as u128, &filter));
    }

    let all = PrimeFilter::All;
    let (a, b) = (rad_lambda(12, &all), rad_lambda(90, &all));
    println!("rad 12 = {a} divides rad 90 = {b}: {}", rad_divides(&a, &b)?);
    Ok(())
}
