//! Rigged configurations and fermionic formulas for parabolic Kostka
//! polynomials, with brute-force oracles for every computed quantity.
//!
//! ```
//! use rigged::{kostka_foulkes, Partition};
//!
//! let lambda: Partition = "2,1".parse().unwrap();
//! let mu: Partition = "1,1,1".parse().unwrap();
//! let k = kostka_foulkes(&lambda, &mu).unwrap();
//! assert_eq!(k.polynomial.to_string(), "q + q^2");
//! ```

pub mod catalan;
pub mod config;
mod display_serde;
pub mod error;
pub mod gt;
pub mod internal;
pub mod kostka;
pub mod partitions;
pub mod qpoly;
pub mod stretched;
pub mod tableaux;
pub mod verify;

pub use error::{enumeration_cap, set_enumeration_cap, Error, Result};
pub use kostka::{kostka_foulkes, parabolic_kostka, KostkaResult};
pub use partitions::{Partition, Rect, RectangleSequence};
pub use qpoly::{gauss_binomial, generalized_gaussian, QPolynomial, RationalGF};
