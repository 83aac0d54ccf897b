//! Prime filters and the radical of an integer restricted to a filter.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::intarith::{
    factorize_u128, gcd_u128, is_prime_u128, legendre, pow_mod_u128, Factorization,
};

/// A set of rational primes.
///
/// Textual form: `all`, `mod:4:1,3`, `split:-1`, `excl:2,3`, joined with `&`
/// for intersections. Densities are not checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrimeFilter {
    All,
    /// Primes congruent to one of `residues` modulo `modulus`.
    Congruence { modulus: u64, residues: BTreeSet<u64> },
    /// Primes that split in `Q(sqrt d)`.
    SplitInQuadratic(i64),
    Exclude(BTreeSet<u64>),
    Intersection(Vec<PrimeFilter>),
}

fn is_squarefree(d: i64) -> bool {
    d != 0
        && factorize_u128(d.unsigned_abs() as u128)
            .factors()
            .iter()
            .all(|&(_, e)| e == 1)
}

impl PrimeFilter {
    pub fn congruence(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidFilter("modulus must be positive".into()));
        }
        let residues: BTreeSet<u64> = residues.into_iter().map(|r| r % modulus).collect();
        if let Some(r) = residues.iter().find(|&&r| gcd_u128(r as u128, modulus as u128) != 1) {
            return Err(Error::InvalidFilter(format!(
                "residue {r} is not coprime to {modulus}"
            )));
        }
        Ok(PrimeFilter::Congruence { modulus, residues })
    }

    pub fn split_in_quadratic(d: i64) -> Result<Self> {
        if d == 1 || !is_squarefree(d) {
            return Err(Error::InvalidFilter(format!(
                "split:{d} needs a squarefree d other than 0 and 1"
            )));
        }
        Ok(PrimeFilter::SplitInQuadratic(d))
    }

    pub fn exclude(primes: impl IntoIterator<Item = u64>) -> Self {
        PrimeFilter::Exclude(primes.into_iter().collect())
    }

    /// Membership of a prime `ell`.
    pub fn contains(&self, ell: u128) -> bool {
        match self {
            PrimeFilter::All => true,
            PrimeFilter::Congruence { modulus, residues } => {
                ell % *modulus as u128 != 0 && residues.contains(&((ell % *modulus as u128) as u64))
            }
            PrimeFilter::SplitInQuadratic(d) => {
                if ell == 2 {
                    // 2 splits in Q(sqrt d) exactly when d = 1 mod 8
                    d.rem_euclid(8) == 1
                } else if ell > u64::MAX as u128 {
                    legendre_u128(*d, ell) == 1
                } else {
                    legendre(*d, ell as u64) == 1
                }
            }
            PrimeFilter::Exclude(list) => u64::try_from(ell).map_or(true, |l| !list.contains(&l)),
            PrimeFilter::Intersection(parts) => parts.iter().all(|f| f.contains(ell)),
        }
    }
}

fn legendre_u128(d: i64, ell: u128) -> i8 {
    let r = (d as i128).rem_euclid(ell as i128) as u128;
    match pow_mod_u128(r, (ell - 1) / 2, ell) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// `filter_contains` for a prime; `false` for non-primes.
pub fn filter_contains(filter: &PrimeFilter, ell: u64) -> bool {
    is_prime_u128(ell as u128) && filter.contains(ell as u128)
}

impl fmt::Display for PrimeFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            PrimeFilter::All => write!(f, "all"),
            PrimeFilter::Congruence { modulus, residues } => {
                write!(f, "mod:{modulus}:{}", join(residues))
            }
            PrimeFilter::SplitInQuadratic(d) => write!(f, "split:{d}"),
            PrimeFilter::Exclude(list) => write!(f, "excl:{}", join(list)),
            PrimeFilter::Intersection(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("&"))
            }
        }
    }
}

fn parse_list(s: &str, what: &str) -> Result<Vec<u64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("{what}: bad number `{t}`")))
        })
        .collect()
}

impl FromStr for PrimeFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('&').map(str::trim).collect();
        if parts.len() > 1 {
            return Ok(PrimeFilter::Intersection(
                parts.iter().map(|p| p.parse()).collect::<Result<_>>()?,
            ));
        }
        let s = parts[0];
        if s == "all" {
            return Ok(PrimeFilter::All);
        }
        let bad = || Error::Parse(format!("prime filter `{s}`: expected all, mod:m:r,..., split:d or excl:p,..."));
        let (tag, rest) = s.split_once(':').ok_or_else(bad)?;
        match tag {
            "mod" => {
                let (m, rs) = rest.split_once(':').ok_or_else(bad)?;
                let m = m.trim().parse::<u64>().map_err(|_| bad())?;
                PrimeFilter::congruence(m, parse_list(rs, "mod")?)
            }
            "split" => PrimeFilter::split_in_quadratic(rest.trim().parse().map_err(|_| bad())?),
            "excl" => Ok(PrimeFilter::exclude(parse_list(rest, "excl")?)),
            _ => Err(bad()),
        }
    }
}

/// `rad_filter(n)`: the product of distinct primes dividing `n` that lie in
/// the filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalValue {
    value: u128,
    filter: PrimeFilter,
}

impl RadicalValue {
    pub fn value(&self) -> u128 {
        self.value
    }

    pub fn filter(&self) -> &PrimeFilter {
        &self.filter
    }
}

impl fmt::Display for RadicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn rad_lambda(n: u128, filter: &PrimeFilter) -> RadicalValue {
    rad_lambda_of(&factorize_u128(n.max(1)), filter)
}

/// Radical from an existing factorization.
pub fn rad_lambda_of(fact: &Factorization, filter: &PrimeFilter) -> RadicalValue {
    let value = fact.primes().filter(|&q| filter.contains(q)).product();
    RadicalValue { value, filter: filter.clone() }
}

/// Radical of a product given the factorizations of its factors.
pub fn rad_lambda_of_product<'a>(
    facts: impl IntoIterator<Item = &'a Factorization>,
    filter: &PrimeFilter,
) -> RadicalValue {
    let primes: BTreeSet<u128> = facts
        .into_iter()
        .flat_map(|f| f.primes())
        .filter(|&q| filter.contains(q))
        .collect();
    RadicalValue { value: primes.into_iter().product(), filter: filter.clone() }
}

/// Whether `a` divides `b`; both must come from the same filter.
pub fn rad_divides(a: &RadicalValue, b: &RadicalValue) -> Result<bool> {
    if a.filter != b.filter {
        return Err(Error::FilterMismatch);
    }
    Ok(b.value % a.value == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intarith::factorize;
    use proptest::prelude::*;

    fn f(s: &str) -> PrimeFilter {
        s.parse().unwrap()
    }

    #[test]
    fn filter_examples() {
        assert!(filter_contains(&PrimeFilter::All, 7));
        let m = f("mod:4:1");
        assert!(filter_contains(&m, 13));
        assert!(!filter_contains(&m, 7));
        assert!(filter_contains(&f("split:-1"), 13));
        assert!(!filter_contains(&f("split:-1"), 7));
        assert!(!filter_contains(&f("split:-1"), 2));
        assert!(filter_contains(&f("split:-7"), 2));
        assert!(!filter_contains(&f("excl:2,3"), 3));
        assert!(filter_contains(&f("excl:2,3"), 5));
        let both = f("mod:4:1 & excl:5");
        assert!(!filter_contains(&both, 5));
        assert!(filter_contains(&both, 13));
    }

    #[test]
    fn filter_text_round_trip() {
        for s in ["all", "mod:4:1,3", "split:-1", "excl:2,3", "mod:3:1&excl:7"] {
            assert_eq!(f(s).to_string(), s);
            assert_eq!(f(&f(s).to_string()), f(s));
        }
    }

    #[test]
    fn filter_validation() {
        assert!("mod:4:2".parse::<PrimeFilter>().is_err());
        assert!("split:4".parse::<PrimeFilter>().is_err());
        assert!("split:1".parse::<PrimeFilter>().is_err());
        assert!("split:0".parse::<PrimeFilter>().is_err());
        assert!("bogus".parse::<PrimeFilter>().is_err());
        assert!("mod:0:1".parse::<PrimeFilter>().is_err());
    }

    #[test]
    fn rad_examples() {
        assert_eq!(rad_lambda(720, &PrimeFilter::All).value(), 30);
        assert_eq!(rad_lambda(720, &f("mod:4:1")).value(), 5);
        assert_eq!(rad_lambda(1, &f("split:-1")).value(), 1);
        assert_eq!(rad_lambda(720, &f("excl:2,3")).value(), 5);
    }

    #[test]
    fn rad_divides_examples() {
        let all = PrimeFilter::All;
        let r = |n| rad_lambda(n, &all);
        assert!(rad_divides(&r(6), &r(30)).unwrap());
        assert!(!rad_divides(&r(30), &r(6)).unwrap());
        assert!(rad_divides(&r(1), &r(77)).unwrap());
        assert!(matches!(
            rad_divides(&r(6), &rad_lambda(30, &f("mod:4:1"))),
            Err(Error::FilterMismatch)
        ));
    }

    fn any_filter() -> impl Strategy<Value = PrimeFilter> {
        prop_oneof![
            Just(PrimeFilter::All),
            Just(f("mod:4:1")),
            Just(f("mod:3:2")),
            Just(f("split:-1")),
            Just(f("split:5")),
            Just(f("excl:2,3,5")),
            Just(f("mod:4:1,3&excl:3")),
        ]
    }

    fn lcm(a: u128, b: u128) -> u128 {
        a / gcd_u128(a, b) * b
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn radical_of_product_is_lcm(n in 1u64..1 << 30, m in 1u64..1 << 30, filter in any_filter()) {
            let lhs = rad_lambda(n as u128 * m as u128, &filter).value();
            let rhs = lcm(rad_lambda(n as u128, &filter).value(), rad_lambda(m as u128, &filter).value());
            prop_assert_eq!(lhs, rhs);
        }
    }

    proptest! {
        #[test]
        fn radical_ignores_multiplicity(n in 1u64..1 << 20, k in 1u32..=5, filter in any_filter()) {
            let nk = (n as u128).pow(k);
            prop_assert_eq!(rad_lambda(nk, &filter), rad_lambda(n as u128, &filter));
        }

        #[test]
        fn radical_is_squarefree_and_filtered(n in 1u64.., filter in any_filter()) {
            let r = rad_lambda(n as u128, &filter);
            let fact = factorize(r.value() as u64);
            prop_assert!(fact.factors().iter().all(|&(q, e)| e == 1 && filter.contains(q)));
        }
    }
}
