//! Curves over `Q` and exact point counts at good primes.
//!
//! Two kinds of curve are supported: elliptic curves in short Weierstrass
//! form `y^2 = x^3 + a x + b`, and genus-2 curves `y^2 = f(x)` with
//! `deg f` in `{5, 6}`. Their textual forms are `E:a,b` and
//! `H:f0,f1,f2,f3,f4,f5,f6`.

mod elliptic;
mod genus2;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::intarith::{is_prime, reduce_signed, within_hasse};
use crate::polyalg::{poly_gcd, FpPoly, IntPoly};

pub use elliptic::{ap_bsgs, ap_naive, character_sum_trace, count_points_naive};
pub use genus2::{count_genus2_raw, genus2_counts};

/// Elliptic traces use the character sum below this prime and BSGS above.
pub const NAIVE_THRESHOLD: u64 = 1 << 14;

/// Largest prime at which genus-2 counts are attempted by default.
pub const DEFAULT_GENUS2_CAP: u64 = 3000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    /// `y^2 = x^3 + a x + b`.
    Elliptic { a: i64, b: i64 },
    /// `y^2 = f0 + f1 x + ... + f6 x^6`.
    Genus2 { f: [i64; 7] },
}

/// A curve over `Q` with a stable identifier derived from its coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveSpec {
    kind: CurveKind,
    id: String,
}

impl CurveSpec {
    pub fn elliptic(a: i64, b: i64) -> Result<Self> {
        let disc = 4 * (a as i128).pow(3) + 27 * (b as i128).pow(2);
        if disc == 0 {
            return Err(Error::InvalidCurve(format!("E:{a},{b} is singular")));
        }
        Ok(Self::from_kind(CurveKind::Elliptic { a, b }))
    }

    pub fn genus2(f: [i64; 7]) -> Result<Self> {
        if f[6] == 0 && f[5] == 0 {
            return Err(Error::InvalidCurve("genus-2 model needs deg f in {5, 6}".into()));
        }
        let poly = IntPoly::from_i64s(&f);
        if !poly_gcd(&poly, &poly.derivative()).is_constant() {
            return Err(Error::InvalidCurve(format!("f = {poly} is not squarefree")));
        }
        Ok(Self::from_kind(CurveKind::Genus2 { f }))
    }

    fn from_kind(kind: CurveKind) -> Self {
        let text = text_form(&kind);
        CurveSpec { id: text.replace(',', ";"), kind }
    }

    pub fn kind(&self) -> &CurveKind {
        &self.kind
    }

    /// Stable identifier: the textual form with `;` separators, safe in CSV.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn genus(&self) -> u32 {
        match self.kind {
            CurveKind::Elliptic { .. } => 1,
            CurveKind::Genus2 { .. } => 2,
        }
    }

    pub fn is_elliptic(&self) -> bool {
        matches!(self.kind, CurveKind::Elliptic { .. })
    }

    /// `-16 (4a^3 + 27b^2)` for elliptic curves.
    pub fn elliptic_discriminant(&self) -> Option<i128> {
        match self.kind {
            CurveKind::Elliptic { a, b } => {
                Some(-16 * (4 * (a as i128).pow(3) + 27 * (b as i128).pow(2)))
            }
            CurveKind::Genus2 { .. } => None,
        }
    }
}

fn text_form(kind: &CurveKind) -> String {
    match kind {
        CurveKind::Elliptic { a, b } => format!("E:{a},{b}"),
        CurveKind::Genus2 { f } => {
            let cs: Vec<String> = f.iter().map(i64::to_string).collect();
            format!("H:{}", cs.join(","))
        }
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text_form(&self.kind))
    }
}

impl FromStr for CurveSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_matches('"');
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("curve `{s}`: expected E:a,b or H:f0,..,f6")))?;
        let nums = body
            .split([',', ';'])
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("curve `{s}`: bad coefficient `{t}`")))
            })
            .collect::<Result<Vec<i64>>>()?;
        match (tag.trim(), nums.as_slice()) {
            ("E", &[a, b]) => Self::elliptic(a, b),
            ("H", f) if f.len() == 7 => Self::genus2(f.try_into().unwrap()),
            _ => Err(Error::Parse(format!(
                "curve `{s}`: expected E:a,b (2 coefficients) or H:f0,..,f6 (7 coefficients)"
            ))),
        }
    }
}

/// Whether `p` is a prime of good reduction for the model. Primes up to 3
/// (elliptic) or 4 (genus 2) are always treated as bad.
pub fn good_reduction(c: &CurveSpec, p: u64) -> bool {
    if !is_prime(p) {
        return false;
    }
    match c.kind {
        CurveKind::Elliptic { a, b } => {
            let disc = 4 * (a as i128).pow(3) + 27 * (b as i128).pow(2);
            p > 3 && disc.rem_euclid(p as i128) != 0
        }
        CurveKind::Genus2 { f } => {
            if p <= 2 * c.genus() as u64 {
                return false;
            }
            let fp = FpPoly::from_i64s(p, &f);
            let lead = if f[6] != 0 { f[6] } else { f[5] };
            reduce_signed(lead as i128, p) != 0 && fp.gcd(&fp.derivative()).is_constant()
        }
    }
}

pub(crate) fn require_good(c: &CurveSpec, p: u64) -> Result<()> {
    if good_reduction(c, p) {
        Ok(())
    } else {
        Err(Error::BadReduction { curve: c.to_string(), p })
    }
}

/// Exact trace of Frobenius, choosing the counting method by size of `p`.
pub fn trace_of_frobenius(c: &CurveSpec, p: u64) -> Result<i64> {
    if p < NAIVE_THRESHOLD {
        ap_naive(c, p)
    } else {
        ap_bsgs(c, p)
    }
}

/// Point-count data for one curve at one good prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CountRecord {
    Elliptic { curve_id: String, p: u64, a_p: i64 },
    Genus2 { curve_id: String, p: u64, n1: u64, n2: u64 },
}

impl CountRecord {
    pub fn curve_id(&self) -> &str {
        match self {
            CountRecord::Elliptic { curve_id, .. } | CountRecord::Genus2 { curve_id, .. } => {
                curve_id
            }
        }
    }

    pub fn p(&self) -> u64 {
        match self {
            CountRecord::Elliptic { p, .. } | CountRecord::Genus2 { p, .. } => *p,
        }
    }

    /// Checks the Hasse interval for elliptic traces and the Weil intervals
    /// `|N_k - (p^k + 1)| <= 4 p^(k/2)` for genus-2 counts.
    pub fn validate(&self) -> Result<()> {
        let p = self.p();
        if !is_prime(p) {
            return Err(Error::InvalidRecord(format!("p = {p} is not prime")));
        }
        if self.curve_id().contains([',', '\n', '\r']) {
            return Err(Error::InvalidRecord(format!("bad curve id `{}`", self.curve_id())));
        }
        match *self {
            CountRecord::Elliptic { a_p, .. } => {
                if !within_hasse(a_p as i128, p) {
                    return Err(Error::HasseViolation { a_p, p });
                }
            }
            CountRecord::Genus2 { n1, n2, .. } => {
                // |s1| <= 4 sqrt(p)  <=>  s1^2 <= 16 p
                let s1 = (p + 1) as i128 - n1 as i128;
                if s1 * s1 > 16 * p as i128 {
                    return Err(Error::InvalidRecord(format!("N1 = {n1} outside Weil interval at p = {p}")));
                }
                let dev = n2 as i128 - (p as i128 * p as i128 + 1);
                if dev.abs() > 4 * p as i128 {
                    return Err(Error::InvalidRecord(format!("N2 = {n2} outside Weil interval at p = {p}")));
                }
            }
        }
        Ok(())
    }
}

/// Counts points of `c` at the good prime `p`.
pub fn count_record(c: &CurveSpec, p: u64, genus2_cap: u64) -> Result<CountRecord> {
    let curve_id = c.id().to_string();
    match c.kind {
        CurveKind::Elliptic { .. } => Ok(CountRecord::Elliptic {
            curve_id,
            p,
            a_p: trace_of_frobenius(c, p)?,
        }),
        CurveKind::Genus2 { .. } => {
            let (n1, n2) = genus2_counts(c, p, genus2_cap)?;
            Ok(CountRecord::Genus2 { curve_id, p, n1, n2 })
        }
    }
}

/// Short Weierstrass model isomorphic (away from 2 and 3) to
/// `y^2 = x^3 + a2 x^2 + a4 x + a6`.
pub fn short_weierstrass_from_cubic(a2: i64, a4: i64, a6: i64) -> Result<CurveSpec> {
    let (a2, a4, a6) = (a2 as i128, a4 as i128, a6 as i128);
    let (a, b) = if a2 % 3 == 0 {
        let s = a2 / 3;
        (a4 - 3 * s * s, 2 * s * s * s - a4 * s + a6)
    } else {
        (81 * a4 - 27 * a2 * a2, 54 * a2.pow(3) - 243 * a2 * a4 + 729 * a6)
    };
    let narrow = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow("short Weierstrass conversion"));
    CurveSpec::elliptic(narrow(a)?, narrow(b)?)
}

fn two_torsion_check(a: i64, b: i64) -> Result<()> {
    let (a, b) = (a as i128, b as i128);
    if b * (a * a - 4 * b) == 0 {
        return Err(Error::Degenerate(format!(
            "y^2 = x(x^2 + {a}x + {b}) needs b(a^2 - 4b) != 0"
        )));
    }
    Ok(())
}

/// `y^2 = x(x^2 + a x + b)` as a short Weierstrass curve.
pub fn rational_two_torsion_curve(a: i64, b: i64) -> Result<CurveSpec> {
    two_torsion_check(a, b)?;
    short_weierstrass_from_cubic(a, b, 0)
}

/// The curve `y^2 = x(x^2 - 2a x + (a^2 - 4b))`, 2-isogenous to
/// `y^2 = x(x^2 + a x + b)` through the kernel `{O, (0, 0)}`.
pub fn two_isogenous_curve(a: i64, b: i64) -> Result<CurveSpec> {
    two_torsion_check(a, b)?;
    let a2 = -2 * a as i128;
    let a4 = (a as i128).pow(2) - 4 * b as i128;
    let narrow = |v: i128| i64::try_from(v).map_err(|_| Error::Overflow("two-isogeny"));
    short_weierstrass_from_cubic(narrow(a2)?, narrow(a4)?, 0)
}
