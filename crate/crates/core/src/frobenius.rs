//! Frobenius polynomials of curves and of products of their Jacobians.
//!
//! A [`FrobPoly`] is the characteristic polynomial of Frobenius at `p`:
//! monic of degree `2g` with integer coefficients, constant term `p^g`, and
//! all complex roots of absolute value `sqrt p`. Evaluating it at 1 gives the
//! number of `F_p`-points of the abelian variety.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::curves::{CountRecord, CurveSpec};
use crate::error::{Error, Result};
use crate::intarith::{factorize_u128, within_hasse, Factorization};
use crate::polyalg::{gcd_nontrivial, poly_radical, rad_divides_exact, IntPoly};
use crate::radicals::{rad_divides, rad_lambda_of, PrimeFilter};

/// Relative tolerance for the numerical root-modulus check.
pub const WEIL_TOLERANCE: f64 = 1e-6;

/// A formal product of curve Jacobians with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianVarietySpec {
    factors: Vec<(CurveSpec, u32)>,
}

impl AbelianVarietySpec {
    pub fn new(factors: Vec<(CurveSpec, u32)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parse("abelian variety needs at least one factor".into()));
        }
        if factors.iter().any(|&(_, e)| e == 0) {
            return Err(Error::Parse("multiplicities must be at least 1".into()));
        }
        Ok(AbelianVarietySpec { factors })
    }

    pub fn curve(c: CurveSpec) -> Self {
        AbelianVarietySpec { factors: vec![(c, 1)] }
    }

    pub fn power(c: CurveSpec, e: u32) -> Result<Self> {
        Self::new(vec![(c, e)])
    }

    pub fn factors(&self) -> &[(CurveSpec, u32)] {
        &self.factors
    }

    /// Distinct curves, in order of first appearance.
    pub fn curves(&self) -> Vec<&CurveSpec> {
        let mut out: Vec<&CurveSpec> = Vec::new();
        for (c, _) in &self.factors {
            if !out.iter().any(|o| o.id() == c.id()) {
                out.push(c);
            }
        }
        out
    }

    pub fn dimension(&self) -> u32 {
        self.factors.iter().map(|(c, e)| c.genus() * e).sum()
    }

    /// All multiplicities one and no curve repeated.
    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1) && self.curves().len() == self.factors.len()
    }

    /// The same factors with every multiplicity set to one.
    pub fn reduced(&self) -> Self {
        AbelianVarietySpec {
            factors: self.curves().into_iter().map(|c| (c.clone(), 1)).collect(),
        }
    }

    /// Parses `factor * factor * ...` where each factor is `curve` or
    /// `curve^e`; `resolve` maps names that are not curve literals.
    pub fn parse_with(s: &str, resolve: impl Fn(&str) -> Option<CurveSpec>) -> Result<Self> {
        let mut factors = Vec::new();
        for token in s.split('*').map(str::trim) {
            if token.is_empty() {
                return Err(Error::Parse(format!("abelian variety `{s}`: empty factor")));
            }
            let (body, e) = match token.rsplit_once('^') {
                Some((body, e)) => {
                    let e = e.trim().parse::<u32>().map_err(|_| {
                        Error::Parse(format!("abelian variety `{s}`: bad exponent `{e}`"))
                    })?;
                    (body.trim(), e)
                }
                None => (token, 1),
            };
            let body = body.trim_matches('"');
            let curve = if body.contains(':') {
                body.parse::<CurveSpec>()?
            } else {
                resolve(body)
                    .ok_or_else(|| Error::Parse(format!("unknown curve name `{body}`")))?
            };
            factors.push((curve, e));
        }
        Self::new(factors)
    }
}

impl FromStr for AbelianVarietySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with(s, |_| None)
    }
}

impl fmt::Display for AbelianVarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(c, e)| if *e == 1 { c.to_string() } else { format!("{c}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Characteristic polynomial of Frobenius at `p`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobPoly {
    p: u64,
    coeffs: Vec<i128>,
}

impl FrobPoly {
    /// Checks monicity, even degree, constant term `p^g` and the functional
    /// equation `c_i = p^(g-i) c_(2g-i)`.
    pub fn new(p: u64, coeffs: Vec<i128>) -> Result<Self> {
        let n = coeffs.len().saturating_sub(1);
        if coeffs.last() != Some(&1) || n % 2 != 0 || n == 0 {
            return Err(Error::InvalidRecord(format!(
                "Frobenius polynomial must be monic of positive even degree: {coeffs:?}"
            )));
        }
        let g = n / 2;
        for i in 0..g {
            let scale = (p as i128)
                .checked_pow((g - i) as u32)
                .ok_or(Error::Overflow("Frobenius polynomial"))?;
            let expect = coeffs[n - i]
                .checked_mul(scale)
                .ok_or(Error::Overflow("Frobenius polynomial"))?;
            if coeffs[i] != expect {
                return Err(Error::InvalidRecord(format!(
                    "coefficients {coeffs:?} violate the functional equation at p = {p}"
                )));
            }
        }
        Ok(FrobPoly { p, coeffs })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Dimension of the abelian variety: half the degree.
    pub fn dimension(&self) -> usize {
        (self.coeffs.len() - 1) / 2
    }

    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::from_i128s(&self.coeffs)
    }

    pub fn eval(&self, x: i128) -> Option<i128> {
        self.coeffs
            .iter()
            .rev()
            .try_fold(0i128, |acc, &c| acc.checked_mul(x)?.checked_add(c))
    }

    pub fn mul(&self, other: &FrobPoly) -> Result<FrobPoly> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = a
                    .checked_mul(b)
                    .and_then(|t| out[i + j].checked_add(t))
                    .ok_or(Error::Overflow("Frobenius polynomial product"))?;
            }
        }
        Ok(FrobPoly { p: self.p, coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Result<FrobPoly> {
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Largest `| |z| / sqrt(p) - 1 |` over the complex roots. Roots are
    /// computed numerically from the (exact) radical so repeated factors do
    /// not degrade the estimate.
    pub fn weil_deviation(&self) -> f64 {
        let rad = poly_radical(&self.to_int_poly()).expect("Frobenius polynomials are monic");
        let coeffs: Vec<f64> = rad
            .coeffs()
            .iter()
            .map(|c| c.to_string().parse::<f64>().unwrap())
            .collect();
        let d = coeffs.len() - 1;
        let sp = (self.p as f64).sqrt();
        // z = x / sqrt(p): scaled coefficient c_i p^((i - d)/2)
        let scaled: Vec<f64> = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * sp.powi(i as i32 - d as i32))
            .collect();
        polynomial_roots(&scaled)
            .iter()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn satisfies_weil(&self) -> bool {
        self.weil_deviation() <= WEIL_TOLERANCE
    }
}

impl fmt::Display for FrobPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_int_poly())
    }
}

/// Complex roots of a monic real polynomial (lowest degree first), by the
/// Aberth-Ehrlich iteration followed by Newton polishing.
pub fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let eval = |z: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
        }
        (v, dv)
    };
    let radius = coeffs[..n]
        .iter()
        .map(|c| c.abs())
        .fold(0.0, f64::max)
        .powf(1.0 / n as f64)
        .max(0.5);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (v, dv) = eval(z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for root in z.iter_mut() {
        for _ in 0..3 {
            let (v, dv) = eval(*root);
            let step = v / dv;
            if step.is_finite() {
                *root -= step;
            }
        }
    }
    z
}

/// `x^2 - a_p x + p`.
pub fn frobpoly_elliptic(a_p: i64, p: u64) -> Result<FrobPoly> {
    if !within_hasse(a_p as i128, p) {
        return Err(Error::HasseViolation { a_p, p });
    }
    FrobPoly::new(p, vec![p as i128, -(a_p as i128), 1])
}

/// L-polynomial reversal of a genus-2 curve from `N1 = |C(F_p)|` and
/// `N2 = |C(F_{p^2})|`.
pub fn frobpoly_genus2(n1: u64, n2: u64, p: u64) -> Result<FrobPoly> {
    let pi = p as i128;
    let s1 = pi + 1 - n1 as i128;
    let twice_s2 = n2 as i128 - pi * pi - 1 + s1 * s1;
    if twice_s2 % 2 != 0 {
        return Err(Error::ParityFailure { p, n1, n2 });
    }
    let s2 = twice_s2 / 2;
    FrobPoly::new(p, vec![pi * pi, -pi * s1, s2, -s1, 1])
}

pub fn frobpoly_from_record(record: &CountRecord) -> Result<FrobPoly> {
    match *record {
        CountRecord::Elliptic { p, a_p, .. } => frobpoly_elliptic(a_p, p),
        CountRecord::Genus2 { p, n1, n2, .. } => frobpoly_genus2(n1, n2, p),
    }
}

/// `prod_i P_i^(e_i)` over the factors of `av`, looking up each curve's
/// polynomial by id.
pub fn frobpoly_product(
    av: &AbelianVarietySpec,
    p: u64,
    per_curve: &HashMap<String, FrobPoly>,
) -> Result<FrobPoly> {
    let mut acc: Option<FrobPoly> = None;
    for (curve, e) in av.factors() {
        let factor = per_curve.get(curve.id()).ok_or_else(|| Error::MissingRecord {
            curve: curve.to_string(),
            p,
        })?;
        if factor.p() != p {
            return Err(Error::PrimeMismatch(factor.p(), p));
        }
        let term = factor.pow(*e)?;
        acc = Some(match acc {
            None => term,
            Some(a) => a.mul(&term)?,
        });
    }
    Ok(acc.expect("abelian varieties have at least one factor"))
}

/// `P(1) = |A(F_p)|`.
pub fn group_order(poly: &FrobPoly) -> Result<u128> {
    let v = poly.eval(1).ok_or(Error::Overflow("group order"))?;
    u128::try_from(v)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::InvalidRecord(format!("P(1) = {v} is not a group order")))
}

/// Factorization of `P(1)`.
pub fn group_order_factorization(poly: &FrobPoly) -> Result<Factorization> {
    Ok(factorize_u128(group_order(poly)?))
}

/// Predicates comparing two Frobenius polynomials at the same prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompareMode {
    Equal,
    /// `rad P = rad Q`.
    RadPolyEqual,
    /// `rad P` divides `rad Q`.
    RadPolyDivides,
    /// No common factor of positive degree.
    Coprime,
    /// `rad_filter P(1) = rad_filter Q(1)`.
    RadOrderEqual,
    /// `rad_filter P(1)` divides `rad_filter Q(1)`.
    RadOrderDivides,
}

impl CompareMode {
    pub fn needs_filter(self) -> bool {
        matches!(self, CompareMode::RadOrderEqual | CompareMode::RadOrderDivides)
    }
}

impl FromStr for CompareMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "equal" => CompareMode::Equal,
            "rad_poly_equal" => CompareMode::RadPolyEqual,
            "rad_poly_divides" => CompareMode::RadPolyDivides,
            "coprime" => CompareMode::Coprime,
            "rad_order_equal" => CompareMode::RadOrderEqual,
            "rad_order_divides" => CompareMode::RadOrderDivides,
            other => return Err(Error::Parse(format!("unknown comparison mode `{other}`"))),
        })
    }
}

pub fn compare(
    lhs: &FrobPoly,
    rhs: &FrobPoly,
    mode: CompareMode,
    filter: Option<&PrimeFilter>,
) -> Result<bool> {
    if lhs.p != rhs.p {
        return Err(Error::PrimeMismatch(lhs.p, rhs.p));
    }
    let (f, g) = (lhs.to_int_poly(), rhs.to_int_poly());
    match mode {
        CompareMode::Equal => Ok(lhs == rhs),
        CompareMode::RadPolyEqual => Ok(poly_radical(&f)? == poly_radical(&g)?),
        CompareMode::RadPolyDivides => rad_divides_exact(&f, &g),
        CompareMode::Coprime => Ok(!gcd_nontrivial(&f, &g)?),
        CompareMode::RadOrderEqual | CompareMode::RadOrderDivides => {
            let filter = filter.ok_or(Error::FilterRequired)?;
            let a = rad_lambda_of(&group_order_factorization(lhs)?, filter);
            let b = rad_lambda_of(&group_order_factorization(rhs)?, filter);
            if mode == CompareMode::RadOrderEqual {
                Ok(a == b)
            } else {
                rad_divides(&a, &b)
            }
        }
    }
}

/// Power sums `s_1..=s_k` of the roots, by Newton's identities.
pub fn power_sums(poly: &FrobPoly, k: usize) -> Result<Vec<i128>> {
    let c = poly.coeffs();
    let n = c.len() - 1;
    // elementary symmetric functions: e_i = (-1)^i c_(n-i)
    let e = |i: usize| -> i128 {
        if i > n {
            0
        } else if i % 2 == 0 {
            c[n - i]
        } else {
            -c[n - i]
        }
    };
    let overflow = || Error::Overflow("power sums");
    let mut s: Vec<i128> = Vec::with_capacity(k);
    for m in 1..=k {
        let mut acc = if m <= n {
            let t = (m as i128).checked_mul(e(m)).ok_or_else(overflow)?;
            if m % 2 == 1 { t } else { -t }
        } else {
            0
        };
        for i in 1..m.min(n + 1) {
            let t = e(i).checked_mul(s[m - i - 1]).ok_or_else(overflow)?;
            acc = if i % 2 == 1 { acc.checked_add(t) } else { acc.checked_sub(t) }
                .ok_or_else(overflow)?;
        }
        s.push(acc);
    }
    Ok(s)
}

/// `|C(F_(p^k))| = p^k + 1 - s_k` for a curve whose Frobenius polynomial is
/// `poly`.
pub fn curve_count_from_frobpoly(poly: &FrobPoly, k: usize) -> Result<i128> {
    let sk = *power_sums(poly, k)?.last().unwrap();
    let pk = (poly.p as i128)
        .checked_pow(k as u32)
        .ok_or(Error::Overflow("curve count"))?;
    Ok(pk + 1 - sk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{ap_naive, count_genus2_raw, count_points_naive, good_reduction};
    use crate::intarith::primes_in;

    fn e(a: i64, b: i64) -> CurveSpec {
        CurveSpec::elliptic(a, b).unwrap()
    }

    #[test]
    fn elliptic_examples() {
        assert_eq!(frobpoly_elliptic(-2, 5).unwrap().coeffs(), &[5, 2, 1]);
        assert_eq!(frobpoly_elliptic(0, 7).unwrap().coeffs(), &[7, 0, 1]);
        assert!(matches!(frobpoly_elliptic(6, 5), Err(Error::HasseViolation { .. })));
        assert!(frobpoly_elliptic(4, 5).is_ok());
    }

    #[test]
    fn genus2_examples() {
        let p = 13;
        let f = frobpoly_genus2(p + 1, p * p + 1, p).unwrap();
        assert_eq!(f.coeffs(), &[169, 0, 0, 0, 1]);
        // y^2 = x^5 + x + 1 has N1 = 4 over F_3, so s1 = 0
        let (n1, _) = count_genus2_raw(&[1, 1, 0, 0, 0, 1, 0], 3);
        assert_eq!(3 + 1 - n1 as i64, 0);
        assert!(matches!(frobpoly_genus2(8, 133, 11), Err(Error::ParityFailure { .. })));
    }

    #[test]
    fn genus2_jacobian_orders_positive() {
        let f = [1, 1, 0, 0, 0, 1, 0];
        for p in [11u64, 13, 17, 19, 29, 31] {
            let (n1, n2) = count_genus2_raw(&f, p);
            let poly = frobpoly_genus2(n1, n2, p).unwrap();
            assert!(group_order(&poly).unwrap() >= 1);
            assert!(poly.satisfies_weil(), "p = {p}");
        }
    }

    #[test]
    fn product_examples() {
        let c = e(-1, 0);
        let mut polys = HashMap::new();
        polys.insert(c.id().to_string(), frobpoly_elliptic(-2, 5).unwrap());
        let one = frobpoly_product(&AbelianVarietySpec::curve(c.clone()), 5, &polys).unwrap();
        assert_eq!(one.coeffs(), &[5, 2, 1]);
        let sq = AbelianVarietySpec::power(c.clone(), 2).unwrap();
        let two = frobpoly_product(&sq, 5, &polys).unwrap();
        assert_eq!(two.coeffs(), &[25, 20, 14, 4, 1]);
        assert_eq!(two.coeffs().len() - 1, 2 * sq.dimension() as usize);
        let missing = AbelianVarietySpec::curve(e(1, 1));
        assert!(matches!(
            frobpoly_product(&missing, 5, &polys),
            Err(Error::MissingRecord { .. })
        ));
    }

    #[test]
    fn group_order_examples() {
        let a = frobpoly_elliptic(-2, 5).unwrap();
        assert_eq!(group_order(&a).unwrap(), 8);
        assert_eq!(count_points_naive(-1, 0, 5), 8);
        let b = frobpoly_elliptic(0, 7).unwrap();
        assert_eq!(count_points_naive(-1, 0, 7), 8);
        assert_eq!(group_order(&b).unwrap(), 8);
        assert_eq!(group_order(&a.pow(2).unwrap()).unwrap(), 64);
    }

    #[test]
    fn compare_examples() {
        let s = frobpoly_elliptic(0, 7).unwrap();
        assert!(compare(&s, &s, CompareMode::Equal, None).unwrap());
        let a = frobpoly_elliptic(-2, 5).unwrap();
        let b = frobpoly_elliptic(0, 5).unwrap();
        assert!(compare(&a, &b, CompareMode::Coprime, None).unwrap());
        let a2 = a.pow(2).unwrap();
        assert!(compare(&a2, &a, CompareMode::RadPolyEqual, None).unwrap());
        assert!(compare(&a, &a2, CompareMode::RadPolyDivides, None).unwrap());
        assert!(matches!(
            compare(&a, &a2, CompareMode::RadOrderEqual, None),
            Err(Error::FilterRequired)
        ));
        assert!(compare(&a, &a2, CompareMode::RadOrderEqual, Some(&PrimeFilter::All)).unwrap());
        // |A(F_5)| = 8, |B(F_5)| = 6
        let all = Some(&PrimeFilter::All);
        assert!(compare(&a, &b, CompareMode::RadOrderDivides, all).unwrap());
        assert!(!compare(&b, &a, CompareMode::RadOrderDivides, all).unwrap());
        let no3: PrimeFilter = "excl:3".parse().unwrap();
        assert!(compare(&b, &a, CompareMode::RadOrderDivides, Some(&no3)).unwrap());
        assert!(matches!(
            compare(&a, &s, CompareMode::Equal, None),
            Err(Error::PrimeMismatch(5, 7))
        ));
    }

    #[test]
    fn orders_match_enumeration() {
        for (a, b) in [(-1, 0), (0, 1), (1, 1), (-1, 1), (4, 0)] {
            let c = e(a, b);
            for p in primes_in(5, 500) {
                if !good_reduction(&c, p) {
                    continue;
                }
                let poly = frobpoly_elliptic(ap_naive(&c, p).unwrap(), p).unwrap();
                assert_eq!(group_order(&poly).unwrap(), count_points_naive(a, b, p) as u128);
            }
        }
    }

    #[test]
    fn multiplicity_does_not_change_radical_of_order() {
        let c1 = e(1, 1);
        let c2 = e(-1, 1);
        let av = AbelianVarietySpec::new(vec![(c1.clone(), 3), (c2.clone(), 2)]).unwrap();
        assert!(!av.is_square_free());
        let red = av.reduced();
        assert!(red.is_square_free());
        for p in primes_in(5, 10_000) {
            if !(good_reduction(&c1, p) && good_reduction(&c2, p)) {
                continue;
            }
            let mut polys = HashMap::new();
            for c in [&c1, &c2] {
                polys.insert(c.id().to_string(), frobpoly_elliptic(ap_naive(c, p).unwrap(), p).unwrap());
            }
            let full = frobpoly_product(&av, p, &polys).unwrap();
            let base = frobpoly_product(&red, p, &polys).unwrap();
            assert!(compare(&full, &base, CompareMode::RadOrderEqual, Some(&PrimeFilter::All)).unwrap());
        }
    }

    #[test]
    fn power_sums_of_elliptic() {
        // roots of x^2 + 2x + 5 are -1 +- 2i: s1 = -2, s2 = -6, s3 = 22
        let f = frobpoly_elliptic(-2, 5).unwrap();
        assert_eq!(power_sums(&f, 3).unwrap(), vec![-2, -6, 22]);
        // |E(F_25)| for y^2 = x^3 - x: 25 + 1 + 6 = 32
        assert_eq!(curve_count_from_frobpoly(&f, 2).unwrap(), 32);
    }

    #[test]
    fn weil_check_on_products_with_repeated_roots() {
        let a = frobpoly_elliptic(3, 101).unwrap();
        let b = frobpoly_elliptic(-7, 101).unwrap();
        let prod = a.pow(3).unwrap().mul(&b).unwrap();
        assert!(prod.weil_deviation() < 1e-9);
        // x^2 - 21x + 101 has two real roots, neither of modulus sqrt(101)
        let bogus = FrobPoly { p: 101, coeffs: vec![101, -21, 1] };
        assert!(!bogus.satisfies_weil());
    }

    #[test]
    fn functional_equation_is_enforced() {
        assert!(FrobPoly::new(5, vec![5, 2, 1]).is_ok());
        assert!(FrobPoly::new(5, vec![4, 2, 1]).is_err());
        assert!(FrobPoly::new(5, vec![25, 10, 3, 2, 1]).is_ok());
        assert!(FrobPoly::new(5, vec![25, 10, 3, 3, 1]).is_err());
        assert!(FrobPoly::new(5, vec![5, 2, 2]).is_err());
    }

    #[test]
    fn variety_parsing() {
        let av: AbelianVarietySpec = "E:-1,0^2 * E:1,1".parse().unwrap();
        assert_eq!(av.dimension(), 3);
        assert_eq!(av.to_string(), "E:-1,0^2 * E:1,1");
        let av: AbelianVarietySpec = "\"E:-1,0\"^1".parse().unwrap();
        assert_eq!(av, AbelianVarietySpec::curve(e(-1, 0)));
        let h: AbelianVarietySpec = "H:1,1,0,0,0,1,0 * E:0,1".parse().unwrap();
        assert_eq!(h.dimension(), 3);
        assert!("E:-1,0^0".parse::<AbelianVarietySpec>().is_err());
        assert!("E1".parse::<AbelianVarietySpec>().is_err());
        let named = AbelianVarietySpec::parse_with("E1^2", |n| (n == "E1").then(|| e(1, 1))).unwrap();
        assert_eq!(named.factors()[0].1, 2);
    }
}
