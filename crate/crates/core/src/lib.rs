//! Exact enumeration of `k`-noncrossing partial matchings and RNA
//! structures with pseudoknots.
//!
//! Matchings whose largest family of mutually crossing arcs has fewer than
//! `k` members are in bijection with lattice walks that stay inside the
//! chamber `x_1 > ... > x_(k-1) > 0` of `Z^(k-1)` ([`bijection`]). Those
//! walks are counted three ways ([`walks`]), and alternating sums over
//! short-arc selections turn the walk counts into structure counts
//! ([`transforms`]). [`closedforms`] and [`oracle`] provide independent
//! checks.
//!
//! ```
//! use pseudoknot::transforms;
//!
//! let counts: Vec<String> = (1..=8)
//!     .map(|n| transforms::s_total(3, n).unwrap().to_string())
//!     .collect();
//! assert_eq!(counts, ["1", "1", "2", "5", "13", "36", "105", "321"]);
//! ```

pub mod bijection;
pub mod cli;
pub mod closedforms;
pub mod diagram;
pub mod error;
pub mod numbers;
pub mod oracle;
pub mod series;
pub mod tableau;
pub mod transforms;
pub mod walk;
pub mod walks;

pub use diagram::Diagram;
pub use error::{Error, Result};
pub use numbers::{binomial, catalan, Count, Rational};
pub use oracle::{Variant, VariantSpec};
pub use series::{series_determinant, Series};
pub use tableau::{Shape, Tableau};
pub use walk::{ChamberPoint, Step, Walk};
