//! Explicit normalized cocycles on finite abelian groups.
//!
//! A finite abelian group `G = Z_{m_1} x ... x Z_{m_n}` (with `m_i | m_{i+1}`)
//! has a small Koszul-type resolution built from the periodic resolutions of
//! its cyclic factors. A chain map from the normalized bar resolution to it
//! pulls the obvious Koszul cocycles back to closed formulas on `G^k`. This
//! crate implements both resolutions, both chain maps, the resulting cocycle
//! formulas and three applications: cohomology orders, braidings on `Vec_G^ω`
//! and Dijkgraaf-Witten invariants of tori. Every closed formula has a brute
//! force counterpart to check it against.
//!
//! Roots of unity are never floated: a value `ζ` is carried as an exact
//! element of `Q/Z` ([`Phase`]).

pub mod algebra;
pub mod braiding;
pub mod budget;
pub mod cocycle;
pub mod dw;
pub mod error;
pub mod resolution;

pub use algebra::{CyclotomicSum, FiniteAbelianGroup, GroupElement, IntegerMatrix, Phase};
pub use budget::Budget;
pub use error::{Error, Result};
