//! Univariate polynomials over `Z` and over `F_l`.
//!
//! Integer polynomials use arbitrary-precision coefficients; all gcds are
//! primitive pseudo-remainder sequences, so nothing here touches floating
//! point. The radical of a monic polynomial is represented by its monic
//! integer generator `f / gcd(f, f')`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intarith::{add_mod, is_prime, mod_inv, mul_mod, reduce_signed, sub_mod};

/// Polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_i128s(coeffs: &[i128]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64s(&[-root, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg f - deg d + 1) f mod d`, computed over `Z`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> Self {
        self.pseudo_div_rem(d).1
    }

    /// Pseudo-division `lc(d)^k f = q d + r` with `k = deg f - deg d + 1`.
    pub fn pseudo_div_rem(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let Some(df) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if df < dd {
            return (Self::zero(), self.clone());
        }
        let steps = df - dd + 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); steps];
        for k in (0..steps).rev() {
            let top = r[k + dd].clone();
            for c in q.iter_mut() {
                *c *= &lc;
            }
            q[k] += &top;
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &top * dc;
            }
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Quotient over `Q` when `d` divides `self`, returned as a primitive
    /// polynomial with positive leading coefficient.
    pub fn exact_quotient_pp(&self, d: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.pseudo_div_rem(d);
        r.is_zero().then(|| q.primitive_part())
    }

    /// Reduction modulo a prime.
    pub fn to_fp(&self, p: u64) -> FpPoly {
        let m = BigInt::from(p);
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .map(|c| c.mod_floor(&m).to_u64().unwrap())
                .collect(),
        )
    }

    /// Largest absolute value of a coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            match (show_mag, i) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}*x")?,
                (false, 1) => write!(f, "x")?,
                (true, _) => write!(f, "{mag}*x^{i}")?,
                (false, _) => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Gcd over `Q`, as a primitive integer polynomial with positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (f.primitive_part(), g.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part()
}

/// Whether `d` divides `f` in `Q[x]`.
pub fn divides_over_q(d: &IntPoly, f: &IntPoly) -> bool {
    !d.is_zero() && f.pseudo_rem(d).is_zero()
}

fn require_monic(f: &IntPoly) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if !f.is_monic() {
        Err(Error::NotMonic)
    } else {
        Ok(())
    }
}

/// Product of the distinct monic irreducible factors of a monic `f`.
pub fn poly_radical(f: &IntPoly) -> Result<IntPoly> {
    require_monic(f)?;
    let g = poly_gcd(f, &f.derivative());
    if g.is_constant() {
        return Ok(f.clone());
    }
    Ok(f.exact_quotient_pp(&g).expect("gcd divides its argument"))
}

/// Whether `rad f` divides `rad g` over `Q`; equivalently `rad f | g`.
pub fn rad_divides_exact(f: &IntPoly, g: &IntPoly) -> Result<bool> {
    require_monic(g)?;
    Ok(divides_over_q(&poly_radical(f)?, g))
}

/// Whether every root of `f` in an algebraic closure of `F_l` is a root of
/// `g`, decided as `rad(f mod l) | (g mod l)`.
pub fn rad_divides_mod_ell(f: &IntPoly, g: &IntPoly, ell: u64) -> Result<bool> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    for h in [f, g] {
        require_monic(h)?;
    }
    let fl = f.to_fp(ell);
    let gl = g.to_fp(ell);
    for (orig, red) in [(f, &fl), (g, &gl)] {
        if red.degree() != orig.degree() {
            return Err(Error::LeadingCoefficientVanishes(ell));
        }
    }
    Ok(fl.radical().divides(&gl))
}

/// Whether `f` and `g` share a factor of positive degree over `Q`.
pub fn gcd_nontrivial(f: &IntPoly, g: &IntPoly) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly_gcd(f, g).degree().unwrap_or(0) >= 1)
}

/// `f = base^exponent` with the exponent as large as possible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerStructure {
    pub exponent: u32,
    pub base: IntPoly,
    /// Whether `base` has nonzero discriminant.
    pub separable: bool,
}

pub fn separable_power_structure(f: &IntPoly) -> Result<PowerStructure> {
    require_monic(f)?;
    let n = f.degree().unwrap();
    let (exponent, base) = (1..=n.max(1))
        .rev()
        .filter(|e| n % e == 0)
        .find_map(|e| monic_root(f, e as u32).map(|h| (e as u32, h)))
        .unwrap_or((1, f.clone()));
    let separable = poly_gcd(&base, &base.derivative()).is_constant();
    Ok(PowerStructure { exponent, base, separable })
}

/// The monic `h` with `h^e = f`, if one exists over `Z`.
fn monic_root(f: &IntPoly, e: u32) -> Option<IntPoly> {
    let n = f.degree()?;
    if e == 1 {
        return Some(f.clone());
    }
    let m = n / e as usize;
    // reversed coefficients: f(x) = x^n F(1/x), solve S^e = F mod y^(m+1)
    let rev: Vec<BigInt> = (0..=m).map(|k| f.coeff(n - k)).collect();
    let mut s = vec![BigInt::zero(); m + 1];
    s[0] = BigInt::one();
    let ebig = BigInt::from(e);
    for k in 1..=m {
        let t = truncated_pow_coeff(&s, e, k);
        let (q, r) = (&rev[k] - t).div_rem(&ebig);
        if !r.is_zero() {
            return None;
        }
        s[k] = q;
    }
    let h = IntPoly::new(s.into_iter().rev().collect());
    (h.pow(e) == *f).then_some(h)
}

fn truncated_pow_coeff(s: &[BigInt], e: u32, k: usize) -> BigInt {
    let mut acc = vec![BigInt::zero(); k + 1];
    acc[0] = BigInt::one();
    for _ in 0..e {
        let mut next = vec![BigInt::zero(); k + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in s.iter().enumerate().take(k + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc.swap_remove(k)
}

/// Polynomial over `F_p`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_i64s(p: u64, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| reduce_signed(c as i128, p)).collect())
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        let Some(&lc) = self.coeffs.last() else {
            return self.clone();
        };
        let inv = mod_inv(lc, self.p).expect("nonzero leading coefficient");
        Self::new(self.p, self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    pub fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = mod_inv(*d.coeffs.last().unwrap(), p).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::new(p, Vec::new()), self.clone());
        }
        let mut q = vec![0; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul_mod(r[k + dd], inv, p);
            q[k] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                r[k + i] = sub_mod(r[k + i], mul_mod(c, dc, p), p);
            }
        }
        r.truncate(dd);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn divides(&self, f: &FpPoly) -> bool {
        !self.is_zero() && f.div_rem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> FpPoly {
        if self.is_constant() {
            return Self::one(self.p);
        }
        let f = self.monic();
        let df = f.derivative();
        if df.is_zero() {
            // f(x) = h(x^p) = h(x)^p over a prime field
            return f.pth_root().radical();
        }
        let g = f.gcd(&df);
        if g.is_constant() {
            return f;
        }
        // f/g carries every factor of multiplicity prime to p; the rest live in g
        let c = f.div_rem(&g).0;
        let rg = g.radical();
        let shared = c.gcd(&rg);
        (&c * &rg).div_rem(&shared).0.monic()
    }

    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        Self::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }
}

impl Mul for &FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: &FpPoly) -> FpPoly {
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::new(p, Vec::new());
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        FpPoly::new(p, out)
    }
}
