//! Word-sized integer and finite-field arithmetic.
//!
//! Moduli are `u64` with `u128` intermediates. Group orders of products can
//! exceed 64 bits, so factorization and primality also have `u128` entry
//! points; those use a slower shift-and-add multiplication once the modulus
//! no longer fits in a word.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Trial division stops at this bound; larger cofactors go to rho.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

/// Reduces a signed integer into `[0, m)`.
#[inline]
pub fn reduce_signed(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

/// `base^exp mod p`. Returns 0 when `p == 1`.
pub fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    assert!(p >= 1, "modulus must be positive");
    if p == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % p;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, p);
        }
        b = mul_mod(b, b, p);
        exp >>= 1;
    }
    result
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    isqrt_u128(n as u128) as u64
}

pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

/// Whether `a^2 <= 4p`, i.e. `|a| <= 2 sqrt(p)`, decided exactly.
pub fn within_hasse(a: i128, p: u64) -> bool {
    a.unsigned_abs()
        .checked_mul(a.unsigned_abs())
        .is_some_and(|sq| sq <= 4 * p as u128)
}

fn add_mod_u128(a: u128, b: u128, m: u128) -> u128 {
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

pub fn mul_mod_u128(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return mul_mod((a % m) as u64, (b % m) as u64, m as u64) as u128;
    }
    let (mut a, mut b) = (a % m, b % m);
    let mut r = 0;
    while b > 0 {
        if b & 1 == 1 {
            r = add_mod_u128(r, a, m);
        }
        a = add_mod_u128(a, a, m);
        b >>= 1;
    }
    r
}

pub fn pow_mod_u128(base: u128, mut exp: u128, m: u128) -> u128 {
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod_u128(result, b, m);
        }
        b = mul_mod_u128(b, b, m);
        exp >>= 1;
    }
    result
}

// First twelve primes: deterministic for n < 3.18e23, which covers u64.
const MR_BASES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const MR_BASES_U128: [u128; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

fn strong_probable_prime(n: u128, base: u128) -> bool {
    let a = base % n;
    if a == 0 {
        return true;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mut x = pow_mod_u128(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod_u128(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MR_BASES_U64 {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    MR_BASES_U64
        .iter()
        .all(|&b| strong_probable_prime(n as u128, b as u128))
}

/// Primality for `u128`. Deterministic below 3.3e24; a strong probable-prime
/// test with twenty bases above that.
pub fn is_prime_u128(n: u128) -> bool {
    if n <= u64::MAX as u128 {
        return is_prime(n as u64);
    }
    if n % 2 == 0 {
        return false;
    }
    MR_BASES_U128.iter().all(|&b| strong_probable_prime(n, b))
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_in(2, TRIAL_DIVISION_BOUND))
}

/// All primes in `[lo, hi]`, by a segmented sieve.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let lo = lo.max(2);
    let root = isqrt(hi);
    let mut base = vec![true; root as usize + 1];
    let mut base_primes = Vec::new();
    for i in 2..=root as usize {
        if base[i] {
            base_primes.push(i as u64);
            let mut j = i * i;
            while j <= root as usize {
                base[j] = false;
                j += i;
            }
        }
    }
    let mut out = Vec::new();
    const SEGMENT: u64 = 1 << 18;
    let mut start = lo;
    loop {
        let end = hi.min(start.saturating_add(SEGMENT - 1));
        let mut seg = vec![true; (end - start + 1) as usize];
        for &q in &base_primes {
            let first = (q * q).max(start.div_ceil(q) * q);
            let mut m = first;
            while m <= end {
                seg[(m - start) as usize] = false;
                m += q;
            }
        }
        out.extend(
            seg.iter()
                .enumerate()
                .filter(|(_, &keep)| keep)
                .map(|(i, _)| start + i as u64),
        );
        if end == hi {
            break;
        }
        start = end + 1;
    }
    out
}

/// Prime factorization of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: u128,
    factors: Vec<(u128, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u128 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u128, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    /// Product of the listed prime powers.
    pub fn product(&self) -> Option<u128> {
        self.factors.iter().try_fold(1u128, |acc, &(q, e)| {
            (0..e).try_fold(acc, |acc, _| acc.checked_mul(q))
        })
    }

    fn from_primes(n: u128, mut primes: Vec<u128>) -> Self {
        primes.sort_unstable();
        let mut factors: Vec<(u128, u32)> = Vec::new();
        for q in primes {
            match factors.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => factors.push((q, 1)),
            }
        }
        Factorization { n, factors }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(q, e)| if e == 1 { q.to_string() } else { format!("{q}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

/// Factors `n >= 1`: trial division up to [`TRIAL_DIVISION_BOUND`], then
/// Brent's rho with deterministic increments on what remains.
pub fn factorize(n: u64) -> Factorization {
    factorize_u128(n as u128)
}

pub fn factorize_u128(n: u128) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut primes = Vec::new();
    let mut rest = n;
    for (i, &q) in small_primes().iter().enumerate() {
        let q = q as u128;
        if q * q > rest {
            break;
        }
        while rest % q == 0 {
            primes.push(q);
            rest /= q;
        }
        // stop early once the cofactor is prime
        if i % 64 == 63 && is_prime_u128(rest) {
            break;
        }
    }
    split_cofactor(rest, &mut primes);
    Factorization::from_primes(n, primes)
}

fn split_cofactor(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if is_prime_u128(n) {
        out.push(n);
        return;
    }
    if let Some(r) = exact_square_root(n) {
        split_cofactor(r, out);
        split_cofactor(r, out);
        return;
    }
    let d = (1..)
        .find_map(|c| brent_rho(n, c))
        .expect("rho eventually splits a composite");
    split_cofactor(d, out);
    split_cofactor(n / d, out);
}

fn exact_square_root(n: u128) -> Option<u128> {
    let r = isqrt_u128(n);
    (r * r == n).then_some(r)
}

fn brent_rho(n: u128, c: u128) -> Option<u128> {
    if n % 2 == 0 {
        return Some(2);
    }
    let step = |x: u128| add_mod_u128(mul_mod_u128(x, x, n), c % n, n);
    let batch = 128u64;
    let (mut y, mut r, mut q, mut g) = (2u128, 1u64, 1u128, 1u128);
    let (mut x, mut ys) = (0u128, 0u128);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..batch.min(r - k) {
                y = step(y);
                q = mul_mod_u128(q, x.abs_diff(y), n);
            }
            g = gcd_u128(q, n);
            k += batch;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = step(ys);
            g = gcd_u128(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Legendre symbol `(a | p)` for an odd prime `p`.
pub fn legendre(a: i64, p: u64) -> i8 {
    let r = reduce_signed(a as i128, p);
    legendre_residue(r, p)
}

/// Legendre symbol for a residue already in `[0, p)`.
pub fn legendre_residue(r: u64, p: u64) -> i8 {
    debug_assert!(p % 2 == 1);
    if r == 0 {
        return 0;
    }
    if mod_pow(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Smallest quadratic non-residue mod an odd prime, searching up from 2.
pub fn first_non_residue(p: u64) -> u64 {
    (2..p)
        .find(|&d| legendre_residue(d, p) == -1)
        .expect("odd primes have non-residues")
}

/// Square root modulo an odd prime by Tonelli-Shanks.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if legendre_residue(a, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = first_non_residue(p);
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Table of the quadratic character mod a small odd prime.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    p: u64,
    squares: Vec<bool>,
}

impl CharacterTable {
    pub fn new(p: u64) -> Self {
        let mut squares = vec![false; p as usize];
        for x in 1..=p / 2 {
            squares[mul_mod(x, x, p) as usize] = true;
        }
        CharacterTable { p, squares }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn chi(&self, r: u64) -> i64 {
        if r == 0 {
            0
        } else if self.squares[r as usize] {
            1
        } else {
            -1
        }
    }
}

/// An element of the prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        Fp { value: reduce_signed(value as i128, p), p }
    }

    pub fn from_residue(value: u64, p: u64) -> Self {
        Fp { value: value % p, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        Fp { value: mod_pow(self.value, exp, self.p), p: self.p }
    }

    pub fn inv(self) -> Option<Self> {
        mod_inv(self.value, self.p).map(|value| Fp { value, p: self.p })
    }

    pub fn sqrt(self) -> Option<Self> {
        sqrt_mod(self.value, self.p).map(|value| Fp { value, p: self.p })
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp { value: add_mod(self.value, rhs.value, self.p), p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp { value: sub_mod(self.value, rhs.value, self.p), p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp { value: mul_mod(self.value, rhs.value, self.p), p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { value: sub_mod(0, self.value, self.p), p: self.p }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `a + b t` in `F_{p^2} = F_p[t]/(t^2 - d)`, `d` the least non-residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2 {
    a: u64,
    b: u64,
    p: u64,
    d: u64,
}

impl Fp2 {
    /// Builds an element, finding the non-residue `d` for `p`.
    pub fn new(a: u64, b: u64, p: u64) -> Self {
        Self::with_non_residue(a, b, p, first_non_residue(p))
    }

    /// Builds an element with a precomputed non-residue.
    pub fn with_non_residue(a: u64, b: u64, p: u64, d: u64) -> Self {
        debug_assert_eq!(legendre_residue(d % p, p), -1);
        Fp2 { a: a % p, b: b % p, p, d }
    }

    pub fn zero(p: u64, d: u64) -> Self {
        Self::with_non_residue(0, 0, p, d)
    }

    pub fn one(p: u64, d: u64) -> Self {
        Self::with_non_residue(1, 0, p, d)
    }

    pub fn coords(self) -> (u64, u64) {
        (self.a, self.b)
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn non_residue(self) -> u64 {
        self.d
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn conj(self) -> Self {
        Fp2 { b: sub_mod(0, self.b, self.p), ..self }
    }

    /// `a^2 - d b^2`, the norm down to `F_p`.
    pub fn norm(self) -> u64 {
        let p = self.p;
        sub_mod(mul_mod(self.a, self.a, p), mul_mod(self.d, mul_mod(self.b, self.b, p), p), p)
    }

    /// Quadratic character of `F_{p^2}`; equals the Legendre symbol of the norm.
    pub fn chi(self) -> i8 {
        legendre_residue(self.norm(), self.p)
    }

    pub fn scale(self, k: u64) -> Self {
        Fp2 { a: mul_mod(self.a, k, self.p), b: mul_mod(self.b, k, self.p), ..self }
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut result = Self::one(self.p, self.d);
        let mut base = self;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base;
            }
            base = base * base;
            exp >>= 1;
        }
        result
    }

    pub fn inv(self) -> Option<Self> {
        let n_inv = mod_inv(self.norm(), self.p)?;
        Some(self.conj().scale(n_inv))
    }
}

impl Add for Fp2 {
    type Output = Fp2;
    fn add(self, rhs: Fp2) -> Fp2 {
        Fp2 { a: add_mod(self.a, rhs.a, self.p), b: add_mod(self.b, rhs.b, self.p), ..self }
    }
}

impl Sub for Fp2 {
    type Output = Fp2;
    fn sub(self, rhs: Fp2) -> Fp2 {
        Fp2 { a: sub_mod(self.a, rhs.a, self.p), b: sub_mod(self.b, rhs.b, self.p), ..self }
    }
}

impl Mul for Fp2 {
    type Output = Fp2;
    fn mul(self, rhs: Fp2) -> Fp2 {
        let p = self.p;
        let ac = mul_mod(self.a, rhs.a, p);
        let bd = mul_mod(self.b, rhs.b, p);
        let a = add_mod(ac, mul_mod(self.d, bd, p), p);
        let b = add_mod(mul_mod(self.a, rhs.b, p), mul_mod(self.b, rhs.a, p), p);
        Fp2 { a, b, ..self }
    }
}

impl Neg for Fp2 {
    type Output = Fp2;
    fn neg(self) -> Fp2 {
        Fp2 { a: sub_mod(0, self.a, self.p), b: sub_mod(0, self.b, self.p), ..self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn trial_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(2, 10, 1_000_003), 1024);
        assert_eq!(mod_pow(12345, 0, 97), 1);
        assert_eq!(mod_pow(3, 6, 7), 1);
    }

    #[test]
    fn is_prime_examples() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(trial_is_prime(1_000_003));
        assert!(is_prime(1_000_003));
        assert!(!trial_is_prime(3_215_031_751));
        assert!(!is_prime(3_215_031_751));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn is_prime_matches_trial_division_below_20000() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(720).factors(), &[(2, 4), (3, 2), (5, 1)]);
        assert!(factorize(1).factors().is_empty());
        assert_eq!(factorize(10403).factors(), &[(101, 1), (103, 1)]);
    }

    #[test]
    fn factorize_large_semiprimes() {
        let f = factorize(1_470_626_929_934_143_021);
        assert_eq!(f.factors(), &[(1_206_429_347, 1), (1_218_991_343, 1)]);
        // two primes above the trial-division bound, squared
        let q = 1_000_003u128;
        let f = factorize_u128(q * q * 1_000_033);
        assert_eq!(f.factors(), &[(q, 2), (1_000_033, 1)]);
        let big = 18_446_744_073_709_551_557u128 * 1_000_000_007;
        let f = factorize_u128(big);
        assert_eq!(f.factors(), &[(1_000_000_007, 1), (18_446_744_073_709_551_557, 1)]);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(0, 7), 0);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(-1, 13), 1);
        assert_eq!(legendre(-1, 7), -1);
    }

    #[test]
    fn sqrt_mod_examples() {
        let r = sqrt_mod(4, 11).unwrap();
        assert!(r == 2 || r == 9);
        assert_eq!(sqrt_mod(3, 7), None);
        assert_eq!(sqrt_mod(0, 101), Some(0));
    }

    #[test]
    fn primes_in_matches_trial_division() {
        let sieved = primes_in(1, 5000);
        let brute: Vec<u64> = (1..=5000).filter(|&n| trial_is_prime(n)).collect();
        assert_eq!(sieved, brute);
        let window = primes_in(1_000_000, 1_001_000);
        assert!(window.iter().all(|&p| is_prime(p)));
        assert_eq!(window.len(), (1_000_000..=1_001_000).filter(|&n| is_prime(n)).count());
    }

    #[test]
    fn character_table_agrees_with_euler() {
        for p in [3u64, 5, 7, 11, 101, 1009] {
            let t = CharacterTable::new(p);
            for r in 0..p {
                assert_eq!(t.chi(r), legendre_residue(r, p) as i64);
            }
        }
    }

    #[test]
    fn fp_field_ops() {
        let p = 101;
        let a = Fp::new(-3, p);
        assert_eq!(a.value(), 98);
        assert_eq!((a * a.inv().unwrap()).value(), 1);
        assert_eq!((a + -a).value(), 0);
        assert_eq!(a.pow(p - 1).value(), 1);
    }

    #[test]
    fn fp2_inverse() {
        let p = 1009;
        let x = Fp2::new(17, 400, p);
        let y = x.inv().unwrap();
        assert_eq!(x * y, Fp2::one(p, x.non_residue()));
    }

    fn odd_prime() -> impl Strategy<Value = u64> {
        proptest::sample::select(primes_in(3, 1_000_000))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn sqrt_mod_consistent_with_legendre(p in odd_prime(), a in any::<u64>()) {
            let a = a % p;
            match sqrt_mod(a, p) {
                Some(y) => {
                    prop_assert!(legendre_residue(a, p) >= 0);
                    prop_assert_eq!(mul_mod(y, y, p), a);
                }
                None => prop_assert_eq!(legendre_residue(a, p), -1),
            }
        }

        #[test]
        fn factorize_reconstructs(n in 1u64..(1u64 << 60)) {
            let f = factorize(n);
            prop_assert_eq!(f.product(), Some(n as u128));
            let primes: Vec<u128> = f.primes().collect();
            prop_assert!(primes.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(primes.iter().all(|&q| is_prime_u128(q)));
        }
    }

    proptest! {
        #[test]
        fn fp2_ring_laws_and_frobenius(
            p in odd_prime(),
            c in proptest::collection::vec(any::<u64>(), 6),
        ) {
            let d = first_non_residue(p);
            let x = Fp2::with_non_residue(c[0], c[1], p, d);
            let y = Fp2::with_non_residue(c[2], c[3], p, d);
            let z = Fp2::with_non_residue(c[4], c[5], p, d);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x.pow(p), x.conj());
        }
    }
}
