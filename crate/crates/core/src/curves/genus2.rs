//! Point counts of genus-2 curves over `F_p` and `F_{p^2}`.

use super::{require_good, CurveKind, CurveSpec};
use crate::error::{Error, Result};
use crate::intarith::{first_non_residue, reduce_signed, CharacterTable};

/// `(N1, N2)` for `y^2 = f(x)` without any reduction checks.
///
/// Points at infinity follow the degree of `f mod p`: one when it is odd,
/// `1 + chi(lc)` when it is even (always two over `F_{p^2}`). Requires an odd
/// prime `p < 2^32`.
pub fn count_genus2_raw(f: &[i64; 7], p: u64) -> (u64, u64) {
    assert!(p % 2 == 1 && p < 1 << 32, "odd prime below 2^32 required");
    let fr: Vec<u64> = f.iter().map(|&c| reduce_signed(c as i128, p)).collect();
    let deg = fr.iter().rposition(|&c| c != 0).unwrap_or(0);
    let table = CharacterTable::new(p);

    let mut n1: i64 = 0;
    for x in 0..p {
        let v = fr.iter().rev().fold(0, |acc, &c| (acc * x + c) % p);
        n1 += 1 + table.chi(v);
    }
    n1 += if deg % 2 == 1 { 1 } else { 1 + table.chi(fr[deg]) };

    // F_{p^2} = F_p[t]/(t^2 - d); chi(z) = (N(z) | p)
    let d = first_non_residue(p);
    let mut n2: i64 = 0;
    for a in 0..p {
        for b in 0..p {
            let (mut u, mut w) = (0u64, 0u64);
            for &c in fr.iter().rev() {
                let nu = (u * a % p + d * (w * b % p)) % p;
                let nw = (u * b % p + w * a % p) % p;
                u = (nu + c) % p;
                w = nw;
            }
            let norm = (u * u % p + p - d * (w * w % p) % p) % p;
            n2 += 1 + table.chi(norm);
        }
    }
    n2 += if deg % 2 == 1 { 1 } else { 2 };
    (n1 as u64, n2 as u64)
}

/// `(|C(F_p)|, |C(F_{p^2})|)` at a good prime no larger than `cap`.
pub fn genus2_counts(c: &CurveSpec, p: u64, cap: u64) -> Result<(u64, u64)> {
    let CurveKind::Genus2 { f } = *c.kind() else {
        return Err(Error::InvalidCurve(format!("{c} is not a genus-2 curve")));
    };
    require_good(c, p)?;
    if p > cap {
        return Err(Error::Genus2CapExceeded { p, cap });
    }
    Ok(count_genus2_raw(&f, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::good_reduction;
    use crate::intarith::{primes_in, Fp2};

    const QUINTIC: [i64; 7] = [1, 1, 0, 0, 0, 1, 0];

    /// Full enumeration of `(x, y)` pairs over `F_{p^2}`.
    fn brute_n2(f: &[i64; 7], p: u64) -> u64 {
        let d = first_non_residue(p);
        let elems: Vec<Fp2> = (0..p)
            .flat_map(|a| (0..p).map(move |b| Fp2::with_non_residue(a, b, p, d)))
            .collect();
        let mut squares = std::collections::HashMap::new();
        for &y in &elems {
            *squares.entry(y * y).or_insert(0u64) += 1;
        }
        let mut n = 0;
        for &x in &elems {
            let v = f.iter().rev().fold(Fp2::zero(p, d), |acc, &c| {
                acc * x + Fp2::with_non_residue(reduce_signed(c as i128, p), 0, p, d)
            });
            n += squares.get(&v).copied().unwrap_or(0);
        }
        let deg = f.iter().rposition(|&c| reduce_signed(c as i128, p) != 0).unwrap();
        n + if deg % 2 == 1 { 1 } else { 2 }
    }

    #[test]
    fn quintic_at_three() {
        assert_eq!(count_genus2_raw(&QUINTIC, 3).0, 4);
    }

    #[test]
    fn n2_matches_enumeration() {
        for p in [5, 7, 11, 13] {
            let (n1, n2) = count_genus2_raw(&QUINTIC, p);
            assert_eq!(n2, brute_n2(&QUINTIC, p), "p = {p}");
            assert_eq!(n2 % 2, n1 % 2, "p = {p}");
        }
        let sextic = [2, -1, 0, 3, 0, 1, 1];
        for p in [5, 7, 11] {
            assert_eq!(count_genus2_raw(&sextic, p).1, brute_n2(&sextic, p), "p = {p}");
        }
    }

    #[test]
    fn counts_lie_in_weil_interval() {
        let c: CurveSpec = "H:1,1,0,0,0,1,0".parse().unwrap();
        for p in primes_in(5, 300) {
            if !good_reduction(&c, p) {
                assert!(genus2_counts(&c, p, 3000).is_err());
                continue;
            }
            let (n1, _) = genus2_counts(&c, p, 3000).unwrap();
            let s1 = (p + 1) as f64 - n1 as f64;
            assert!(s1.abs() <= 4.0 * (p as f64).sqrt(), "p = {p}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let c: CurveSpec = "H:1,1,0,0,0,1,0".parse().unwrap();
        assert!(matches!(genus2_counts(&c, 101, 100), Err(Error::Genus2CapExceeded { .. })));
    }
}
