//! Braided injections and the rectification of braided strict monoidal
//! categories, with finite-range checks for B-spaces, bar constructions and
//! the symmetric side.
//!
//! Conventions: strand positions are 1-based. Braid words are read left to
//! right in time ("a then b"); category-level composition is written `g∘f`
//! with `f` applied first.

pub mod binj;
pub mod braid;
pub mod bspace;
pub mod error;
pub mod fincat;
pub mod rectify;
pub mod report;
pub mod symspec;
pub mod verify;

pub use error::{Error, Result};

/// Seeded generator used by every randomized suite.
pub type Rng = rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
