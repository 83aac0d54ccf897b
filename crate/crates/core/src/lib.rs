//! Frobenius polynomials, point counts and Λ-radicals of group orders for
//! products of elliptic curves and genus-2 Jacobians over `Q`.
//!
//! The crate is organised bottom-up:
//!
//! - [`intarith`]: word-sized modular arithmetic, primality, factorization,
//!   `F_p` and `F_{p^2}`.
//! - [`polyalg`]: integer and `F_l` polynomials, radicals and divisibility
//!   of radicals.
//! - [`curves`]: curve models, good reduction and exact point counting.
//! - [`frobenius`]: Frobenius polynomials and the predicates comparing them.
//! - [`radicals`]: prime filters and restricted radicals of integers.
//! - [`weilcheck`]: brute-force counts on small affine varieties against
//!   explicit Weil-type bounds.
//! - [`store`]: the append-only count cache.
//! - [`experiments`]: prime-range experiments and their reports.
//! - [`cli`]: the `frobrad` command line.
//!
//! ```
//! use frobrad::curves::{trace_of_frobenius, CurveSpec};
//! use frobrad::frobenius::{frobpoly_elliptic, group_order};
//!
//! let e: CurveSpec = "E:-1,0".parse().unwrap();
//! let a5 = trace_of_frobenius(&e, 5).unwrap();
//! let poly = frobpoly_elliptic(a5, 5).unwrap();
//! assert_eq!(poly.to_string(), "x^2 + 2*x + 5");
//! assert_eq!(group_order(&poly).unwrap(), 8);
//! ```

pub mod cli;
pub mod curves;
pub mod error;
pub mod experiments;
pub mod frobenius;
pub mod intarith;
pub mod polyalg;
pub mod radicals;
pub mod store;
pub mod weilcheck;

pub use error::{Error, Result};
