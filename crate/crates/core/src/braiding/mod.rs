//! Braidings on `Vec_G^ω`: the degree-3 cocycle formula, the hexagon
//! identities and the classification of quasi-bicharacters.

pub mod hexagon;
pub mod params;
pub mod search;

pub use hexagon::{hexagon_residuals, HexagonViolation};
pub use params::{eval_three_cocycle, ThreeCocycleParams};
pub use search::{
    braiding_exists, bruteforce_braidings, enumerate_braidings, Braiding, BraidingExistence, QuasiBicharacter,
};
