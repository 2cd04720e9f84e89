//! Seeded samplers for braids and morphisms of ℳ, ℐ and 𝔅.

use rand::seq::SliceRandom;
use rand::Rng as _;

use super::{BraidedInjection, Injection, OrderInj};
use crate::braid::{BraidWord, GarsideNF, Letter, Permutation};
use crate::Rng;

/// A word of length ≤ max_len (uniform length, uniform letters).
pub fn braid_word(rng: &mut Rng, n: usize, max_len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| Letter { index: rng.gen_range(1..n), positive: rng.gen_bool(0.5) }).collect();
    BraidWord { n, letters }
}

pub fn braid(rng: &mut Rng, n: usize, max_len: usize) -> GarsideNF {
    GarsideNF::from_word(&braid_word(rng, n, max_len))
}

pub fn order_inj(rng: &mut Rng, m: usize, n: usize) -> OrderInj {
    let mut all: Vec<usize> = (1..=n).collect();
    all.shuffle(rng);
    let mut image = all[..m].to_vec();
    image.sort_unstable();
    OrderInj::new(n, image).expect("sorted distinct sample")
}

pub fn permutation(rng: &mut Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::from_one_line(&v).expect("shuffle of 1..n")
}

pub fn injection(rng: &mut Rng, m: usize, n: usize) -> Injection {
    let mut all: Vec<usize> = (1..=n).collect();
    all.shuffle(rng);
    Injection { n, images: all[..m].to_vec() }
}

pub fn braided_injection(rng: &mut Rng, m: usize, n: usize, max_len: usize) -> BraidedInjection {
    BraidedInjection { mu: order_inj(rng, m, n), zeta: braid(rng, m, max_len) }
}
