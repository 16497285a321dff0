//! The normalized bar resolution, the Koszul-type resolution and the chain
//! maps between them.

pub mod bar;
pub mod chain_map;
pub mod group_ring;
pub mod koszul;
pub mod verify;

pub use bar::{bar_diff, bar_diff_chain, normalized_symbols, BarChain, BarSymbol};
pub use chain_map::{
    chain_map_f, chain_map_f_chain, chain_map_g, chain_map_g_chain, chain_map_g_raw_count, eta, xi,
};
pub use group_ring::GroupRingElement;
pub use koszul::{koszul_diff, koszul_diff_chain, Block, KoszulChain, KoszulIndex};
pub use verify::{verify_chain_map_f, verify_chain_map_g, ChainMapReport, Direction};
