//! Exploitability measurement for two-player zero-sum extensive-form games.
//!
//! The crate provides:
//!
//! - five built-in games ([`game`]): Kuhn poker, Leduc poker, Liar's Dice,
//!   Tic-Tac-Toe, and Connect Four;
//! - policy representations and a canonical text file format ([`policy`]);
//! - an exact oracle for expected values, best responses, NashConv and
//!   exploitability by full tree traversal ([`exact`]);
//! - exact Bayesian posteriors over hidden histories ([`beliefs`]);
//! - approximate best response search: IS-MCTS over the searcher's
//!   information states, determinized from the exact posterior and guided by
//!   a trained evaluator ([`search`]);
//! - tabular and feed-forward evaluators, their training loop, and
//!   approximate NashConv reports ([`evaluator`]);
//! - a CFR+ solver producing near-Nash baselines ([`cfr`]).

pub mod beliefs;
pub mod cfr;
pub mod error;
pub mod evaluator;
pub mod exact;
pub mod game;
pub mod policy;
pub mod search;

pub use error::{Error, Result};
pub use game::{
    new_game, ActionId, FeatureVector, GameId, GameSpec, History, InfoStateKey, Player, ToMove,
};

/// Deterministic 64-bit FNV-1a hash, used wherever a stable seed must be
/// derived from a string across runs and platforms.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Derives an independent stream seed from a master seed and a salt.
pub fn derive_seed(master: u64, salt: u64) -> u64 {
    // SplitMix64 step over master xor salt.
    let mut z = master ^ salt.wrapping_mul(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
