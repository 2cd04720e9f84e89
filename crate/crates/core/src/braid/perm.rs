use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of {1..n}. Stored 0-based internally; the public API is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From one-line notation with values in 1..=n.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Invalid(format!("not a permutation: {one_line:?}")));
            }
            seen[v - 1] = true;
            images.push(v - 1);
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    /// The transposition (i, i+1), 1-based `i`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The order-reversing permutation i ↦ n+1−i.
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (0..n).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub(crate) fn at(&self, i: usize) -> usize {
        self.images[i]
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Block sum: `self` on the first block, `other` shifted on the second.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let m = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|v| v + m));
        Permutation { images }
    }

    /// Block permutation a(j_1..j_k): block i (width `widths[i]`, blocks in
    /// input order) is moved to block position a(i).
    pub fn block_permutation(&self, widths: &[usize]) -> Permutation {
        let k = self.degree();
        assert_eq!(widths.len(), k);
        let inv = self.inverse();
        // width at each target position
        let mut offset_at_pos = vec![0; k + 1];
        for p in 0..k {
            offset_at_pos[p + 1] = offset_at_pos[p] + widths[inv.images[p]];
        }
        let mut images = Vec::with_capacity(offset_at_pos[k]);
        for (i, &w) in widths.iter().enumerate() {
            let base = offset_at_pos[self.images[i]];
            images.extend(base..base + w);
        }
        Permutation { images }
    }

    /// Number of inversions (length of a reduced word).
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    c += 1;
                }
            }
        }
        c
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert!(a.after(&a.inverse()).is_identity());
        assert_eq!(a.after(&a).one_line(), vec![3, 1, 2]);
    }

    #[test]
    fn block_permutation_of_swap() {
        let t = Permutation::transposition(2, 1);
        // block of width 2 moves after the block of width 1
        assert_eq!(t.block_permutation(&[2, 1]).one_line(), vec![2, 3, 1]);
        assert_eq!(t.block_permutation(&[1, 2]).one_line(), vec![3, 1, 2]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0]).is_err());
    }
}
