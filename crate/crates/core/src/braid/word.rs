use std::fmt;

use super::perm::Permutation;
use crate::error::{dim_err, Error, Result};

/// ζ^index (positive) or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, positive: true }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, positive: false }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, positive: !self.positive }
    }

    pub fn sign(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

/// A word in the Artin generators of 𝓑_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index >= n {
                return dim_err(format!("generator z{} not in B_{}", l.index, n));
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Parses `"z1 z2 z1^-1"`; the empty string is the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let body = tok
                .strip_prefix('z')
                .ok_or_else(|| Error::Parse(format!("bad letter '{tok}'")))?;
            let (idx, positive) = match body.split_once('^') {
                None => (body, true),
                Some((i, "-1")) => (i, false),
                Some((i, "1")) => (i, true),
                Some(_) => return Err(Error::Parse(format!("bad exponent in '{tok}'"))),
            };
            let index: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index in '{tok}'")))?;
            letters.push(Letter { index, positive });
        }
        Self::new(n, letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// "self then other".
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return dim_err(format!("compose B_{} with B_{}", self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Position map: the strand starting at p ends at π(p).
    pub fn underlying_permutation(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.n).collect(); // position -> strand
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut images = vec![0; self.n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation::from_zero_based(images)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// `self` on the first n strands, `other` on the following ones.
    pub fn block_sum(&self, other: &BraidWord) -> BraidWord {
        let m = self.n;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|l| Letter { index: l.index + m, positive: l.positive }));
        BraidWord { n: m + other.n, letters }
    }

    /// Shifts into a larger strand count with `offset` strands on the left.
    pub fn embed(&self, offset: usize, total: usize) -> BraidWord {
        assert!(offset + self.n <= total);
        BraidWord {
            n: total,
            letters: self.letters.iter().map(|l| Letter { index: l.index + offset, positive: l.positive }).collect(),
        }
    }

    /// Removes the strands starting at the given 1-based positions.
    pub fn delete_strands(&self, removed: &[usize]) -> Result<BraidWord> {
        let mut keep = vec![true; self.n];
        for &r in removed {
            if r == 0 || r > self.n {
                return dim_err(format!("strand {r} not in B_{}", self.n));
            }
            keep[r - 1] = false;
        }
        let mut at: Vec<usize> = (0..self.n).collect();
        let mut letters = Vec::new();
        for l in &self.letters {
            let (s, t) = (at[l.index - 1], at[l.index]);
            if keep[s] && keep[t] {
                let rank = at[..l.index].iter().filter(|&&x| keep[x]).count();
                letters.push(Letter { index: rank, positive: l.positive });
            }
            at.swap(l.index - 1, l.index);
        }
        let n = keep.iter().filter(|&&k| k).count();
        Ok(BraidWord { n, letters })
    }

    /// Replaces strand i by `widths[i]` parallel strands.
    pub fn cable(&self, widths: &[usize]) -> Result<BraidWord> {
        if widths.len() != self.n {
            return dim_err(format!("{} widths for B_{}", widths.len(), self.n));
        }
        let total: usize = widths.iter().sum();
        let mut cur = widths.to_vec();
        let mut letters = Vec::new();
        for l in &self.letters {
            let i = l.index - 1;
            let offset: usize = cur[..i].iter().sum();
            let (p, q) = (cur[i], cur[i + 1]);
            let block = if l.positive { chi(p, q) } else { chi(q, p).inverse() };
            letters.extend(block.embed(offset, total).letters);
            cur.swap(i, i + 1);
        }
        Ok(BraidWord { n: total, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.positive { format!("z{}", l.index) } else { format!("z{}^-1", l.index) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The block crossing moving the first m strands over the last n: for
/// j = 1..n, strand m+j passes under strands m..1.
pub fn chi(m: usize, n: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(m * n);
    for j in 1..=n {
        for i in (j..m + j).rev() {
            letters.push(Letter::pos(i));
        }
    }
    BraidWord { n: m + n, letters }
}

/// Positive half twist Δ_n.
pub fn delta(n: usize) -> BraidWord {
    let mut letters = Vec::new();
    for top in (1..n).rev() {
        for i in 1..=top {
            letters.push(Letter::pos(i));
        }
    }
    BraidWord { n, letters }
}

/// The positive permutation braid of `p` (each pair crosses at most once).
pub fn permutation_braid(p: &Permutation) -> BraidWord {
    let n = p.degree();
    // bubble sort of the target positions, emitting adjacent swaps in time order
    let mut target: Vec<usize> = p.zero_based().to_vec(); // target[position] for the strand there
    let mut letters = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if target[i] > target[i + 1] {
                target.swap(i, i + 1);
                letters.push(Letter::pos(i + 1));
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    BraidWord { n, letters }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let w = BraidWord::parse(3, "z1 z2 z1^-1").unwrap();
        assert_eq!(w.to_string(), "z1 z2 z1^-1");
        assert!(BraidWord::parse(3, "z3").is_err());
        assert!(BraidWord::parse(3, "y1").is_err());
        assert!(BraidWord::parse(3, "z1^2").is_err());
        assert!(BraidWord::parse(3, "").unwrap().is_empty());
    }

    #[test]
    fn permutation_of_braid_relation_word() {
        let w = BraidWord::parse(3, "z1 z2 z1").unwrap();
        assert_eq!(w.underlying_permutation().one_line(), vec![3, 2, 1]);
        assert_eq!(BraidWord::parse(2, "z1").unwrap().underlying_permutation().one_line(), vec![2, 1]);
        assert!(BraidWord::identity(4).underlying_permutation().is_identity());
    }

    #[test]
    fn chi_words() {
        assert_eq!(chi(1, 1).to_string(), "z1");
        assert!(chi(0, 3).is_empty() && chi(3, 0).is_empty());
        assert_eq!(chi(2, 1).underlying_permutation().one_line(), vec![2, 3, 1]);
        for m in 0..4 {
            for n in 0..4 {
                let p = chi(m, n).underlying_permutation();
                for i in 1..=m + n {
                    let expect = if i <= m { i + n } else { i - m };
                    assert_eq!(p.apply(i), expect);
                }
            }
        }
    }

    #[test]
    fn block_sum_shifts() {
        let z = BraidWord::parse(2, "z1").unwrap();
        assert_eq!(z.block_sum(&z).to_string(), "z1 z3");
        assert_eq!(BraidWord::identity(2).block_sum(&BraidWord::identity(3)).n, 5);
    }

    #[test]
    fn deletion_examples() {
        let w = BraidWord::parse(3, "z1").unwrap();
        let d = w.delete_strands(&[2]).unwrap();
        assert_eq!((d.n, d.len()), (2, 0));
        let w = BraidWord::parse(3, "z1 z2").unwrap();
        let d = w.delete_strands(&[1]).unwrap();
        assert_eq!((d.n, d.len()), (2, 0));
        let w = BraidWord::parse(4, "z2 z1 z3^-1").unwrap();
        assert_eq!(w.delete_strands(&[]).unwrap(), w);
    }

    #[test]
    fn cable_of_generator_is_chi() {
        let z = BraidWord::parse(2, "z1").unwrap();
        assert_eq!(z.cable(&[2, 1]).unwrap(), chi(2, 1));
        let w = BraidWord::parse(3, "z1 z2^-1").unwrap();
        assert_eq!(w.cable(&[1, 1, 1]).unwrap(), w);
    }

    #[test]
    fn permutation_braid_realizes_permutation() {
        let p = Permutation::from_one_line(&[3, 1, 4, 2]).unwrap();
        let w = permutation_braid(&p);
        assert_eq!(w.underlying_permutation(), p);
        assert_eq!(w.len(), p.inversions());
        assert_eq!(delta(4).underlying_permutation(), Permutation::reversal(4));
    }
}
