//! Traces of Frobenius for short Weierstrass curves.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{require_good, CurveKind, CurveSpec};
use crate::error::{Error, Result};
use crate::intarith::{
    add_mod, factorize, first_non_residue, gcd_u128, isqrt, legendre_residue, mod_inv, mul_mod,
    reduce_signed, sqrt_mod, sub_mod, CharacterTable,
};

// Above this the character table would be too large; use Euler's criterion.
const TABLE_LIMIT: u64 = 1 << 26;
const BSGS_ROUNDS: usize = 48;

fn coefficients(c: &CurveSpec) -> Result<(i64, i64)> {
    match *c.kind() {
        CurveKind::Elliptic { a, b } => Ok((a, b)),
        CurveKind::Genus2 { .. } => Err(Error::InvalidCurve(format!("{c} is not elliptic"))),
    }
}

/// `-sum_x ((x^3 + a x + b) | p)` with no reduction checks. `p` must be an
/// odd prime.
pub fn character_sum_trace(a: i64, b: i64, p: u64) -> i64 {
    let ar = reduce_signed(a as i128, p);
    let br = reduce_signed(b as i128, p);
    let rhs = |x: u64| add_mod(mul_mod(add_mod(mul_mod(x, x, p), ar, p), x, p), br, p);
    if p < TABLE_LIMIT {
        let table = CharacterTable::new(p);
        -(0..p).map(|x| table.chi(rhs(x))).sum::<i64>()
    } else {
        -(0..p).map(|x| legendre_residue(rhs(x), p) as i64).sum::<i64>()
    }
}

/// `|E(F_p)|` by enumerating every `(x, y)` pair plus the point at infinity.
/// Quadratic in `p`; intended as a test oracle.
pub fn count_points_naive(a: i64, b: i64, p: u64) -> u64 {
    let ar = reduce_signed(a as i128, p);
    let br = reduce_signed(b as i128, p);
    let mut n = 1;
    for x in 0..p {
        let rhs = add_mod(mul_mod(add_mod(mul_mod(x, x, p), ar, p), x, p), br, p);
        n += (0..p).filter(|&y| mul_mod(y, y, p) == rhs).count() as u64;
    }
    n
}

/// Trace of Frobenius by the quadratic-character sum.
pub fn ap_naive(c: &CurveSpec, p: u64) -> Result<i64> {
    let (a, b) = coefficients(c)?;
    require_good(c, p)?;
    Ok(character_sum_trace(a, b, p))
}

type Point = Option<(u64, u64)>;

#[derive(Clone, Copy, Debug)]
struct Curve {
    a: u64,
    b: u64,
    p: u64,
}

impl Curve {
    fn rhs(&self, x: u64) -> u64 {
        let p = self.p;
        add_mod(mul_mod(add_mod(mul_mod(x, x, p), self.a, p), x, p), self.b, p)
    }

    fn neg(&self, pt: Point) -> Point {
        pt.map(|(x, y)| (x, sub_mod(0, y, self.p)))
    }

    fn add(&self, s: Point, t: Point) -> Point {
        let p = self.p;
        let (Some((x1, y1)), Some((x2, y2))) = (s, t) else {
            return s.or(t);
        };
        let lambda = if x1 == x2 {
            if add_mod(y1, y2, p) == 0 {
                return None;
            }
            // tangent: (3x^2 + a) / 2y
            let num = add_mod(mul_mod(3, mul_mod(x1, x1, p), p), self.a, p);
            mul_mod(num, mod_inv(add_mod(y1, y1, p), p)?, p)
        } else {
            mul_mod(sub_mod(y2, y1, p), mod_inv(sub_mod(x2, x1, p), p)?, p)
        };
        let x3 = sub_mod(sub_mod(mul_mod(lambda, lambda, p), x1, p), x2, p);
        let y3 = sub_mod(mul_mod(lambda, sub_mod(x1, x3, p), p), y1, p);
        Some((x3, y3))
    }

    fn mul(&self, pt: Point, mut k: u64) -> Point {
        let mut acc = None;
        let mut base = pt;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    fn random_point(&self, rng: &mut ChaCha8Rng) -> (u64, u64) {
        loop {
            let x = rng.gen_range(0..self.p);
            if let Some(y) = sqrt_mod(self.rhs(x), self.p) {
                return (x, y);
            }
        }
    }

    /// Some `M` in `[lo, hi]` with `[M] pt = O`, by baby-step giant-step.
    fn multiple_in_interval(&self, pt: Point, lo: u64, hi: u64) -> Option<u64> {
        let width = hi - lo;
        let m = isqrt(width) + 1;
        let mut baby: HashMap<(u64, u64), u64> = HashMap::with_capacity(m as usize);
        let mut cur = pt;
        for j in 1..=m {
            if let Some(xy) = cur {
                baby.entry(xy).or_insert(j);
            }
            cur = self.add(cur, pt);
        }
        let giant = self.mul(pt, m);
        let mut r = self.mul(pt, lo);
        for i in 0..=width / m + 1 {
            let base = lo + i * m;
            let j = match self.neg(r) {
                None => Some(0),
                Some(xy) => baby.get(&xy).copied(),
            };
            if let Some(j) = j {
                if base + j <= hi {
                    return Some(base + j);
                }
            }
            r = self.add(r, giant);
        }
        None
    }

    fn order_from_multiple(&self, pt: Point, multiple: u64) -> u64 {
        let mut ord = multiple;
        for &(q, _) in factorize(multiple).factors() {
            let q = q as u64;
            while ord % q == 0 && self.mul(pt, ord / q).is_none() {
                ord /= q;
            }
        }
        ord
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    (a as u128 / gcd_u128(a as u128, b as u128) * b as u128) as u64
}

/// Trace of Frobenius from point orders in the Hasse interval.
///
/// Orders of random points on the curve and on its quadratic twist are
/// combined (the two group orders sum to `2p + 2`) until a single group
/// order in the interval is consistent with both. If that never happens
/// the character sum decides.
pub fn ap_bsgs(c: &CurveSpec, p: u64) -> Result<i64> {
    let (a, b) = coefficients(c)?;
    require_good(c, p)?;
    let curve = Curve { a: reduce_signed(a as i128, p), b: reduce_signed(b as i128, p), p };
    let d = first_non_residue(p);
    let twist = Curve {
        a: mul_mod(curve.a, mul_mod(d, d, p), p),
        b: mul_mod(curve.b, mul_mod(d, mul_mod(d, d, p), p), p),
        p,
    };
    let w = isqrt(4 * p);
    let (lo, hi) = (p + 1 - w, p + 1 + w);
    let mut rng = ChaCha8Rng::seed_from_u64(p ^ 0x9e37_79b9_7f4a_7c15);
    let (mut l_curve, mut l_twist) = (1u64, 1u64);

    for round in 0..BSGS_ROUNDS {
        let (target, l) = if round % 2 == 0 {
            (&curve, &mut l_curve)
        } else {
            (&twist, &mut l_twist)
        };
        let pt = Some(target.random_point(&mut rng));
        let Some(multiple) = target.multiple_in_interval(pt, lo, hi) else {
            continue;
        };
        *l = lcm(*l, target.order_from_multiple(pt, multiple));

        let mut candidates = (lo.div_ceil(l_curve) * l_curve..=hi)
            .step_by(l_curve as usize)
            .filter(|n| (2 * p + 2 - n) % l_twist == 0);
        match (candidates.next(), candidates.next()) {
            (Some(n), None) => return Ok(p as i64 + 1 - n as i64),
            (None, _) => break,
            _ => {}
        }
    }
    Ok(character_sum_trace(a, b, p))
}
