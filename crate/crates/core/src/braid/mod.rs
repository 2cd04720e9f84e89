//! Braid groups 𝓑_n: words in the generators ζ^i (strand i passes over strand
//! i+1), the left Garside normal form, and strand-level operations.

mod garside;
mod perm;
mod word;

pub use garside::GarsideNF;
pub use perm::Permutation;
pub use word::{chi, delta, permutation_braid, BraidWord, Letter};

use crate::error::{dim_err, Result};

/// "a then b".
pub fn compose(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
    a.compose(b)
}

pub fn normal_form(w: &BraidWord) -> GarsideNF {
    GarsideNF::from_word(w)
}

pub fn equals(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.n != b.n {
        return dim_err(format!("compare B_{} with B_{}", a.n, b.n));
    }
    Ok(normal_form(a) == normal_form(b))
}

pub fn underlying_permutation(w: &BraidWord) -> Permutation {
    w.underlying_permutation()
}

pub fn block_sum(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.block_sum(b)
}

pub fn delete_strands(w: &BraidWord, removed: &[usize]) -> Result<BraidWord> {
    w.delete_strands(removed)
}

pub fn cable(w: &BraidWord, widths: &[usize]) -> Result<BraidWord> {
    w.cable(widths)
}

/// Decides membership of `w` in 𝓑_m × 𝓑_n and returns the factors.
pub fn parabolic_factor(w: &BraidWord, m: usize, n: usize) -> Result<Option<(BraidWord, BraidWord)>> {
    if w.n != m + n {
        return dim_err(format!("split ({m},{n}) of B_{}", w.n));
    }
    let p = w.underlying_permutation();
    if (1..=m).any(|i| p.apply(i) > m) {
        return Ok(None);
    }
    let a = w.delete_strands(&(m + 1..=m + n).collect::<Vec<_>>())?;
    let b = w.delete_strands(&(1..=m).collect::<Vec<_>>())?;
    if equals(&a.block_sum(&b), w)? {
        Ok(Some((a, b)))
    } else {
        Ok(None)
    }
}

/// Factors `w` along consecutive blocks of the given widths.
pub fn parabolic_factor_blocks(w: &BraidWord, widths: &[usize]) -> Result<Option<Vec<BraidWord>>> {
    let total: usize = widths.iter().sum();
    if w.n != total {
        return dim_err(format!("blocks {widths:?} of B_{}", w.n));
    }
    let mut out = Vec::with_capacity(widths.len());
    let mut rest = w.clone();
    for (i, &m) in widths.iter().enumerate() {
        if i + 1 == widths.len() {
            out.push(rest.clone());
            break;
        }
        match parabolic_factor(&rest, m, rest.n - m)? {
            None => return Ok(None),
            Some((a, b)) => {
                out.push(a);
                rest = b;
            }
        }
    }
    Ok(Some(out))
}

/// Sum of crossing signs between a strand of the first block and one of the
/// second, halved. Nonzero means `w` is not in 𝓑_m × 𝓑_n.
pub fn block_linking_number(w: &BraidWord, m: usize) -> i64 {
    let mut at: Vec<usize> = (0..w.n).collect();
    let mut total = 0;
    for l in &w.letters {
        let (s, t) = (at[l.index - 1], at[l.index]);
        if (s < m) != (t < m) {
            total += l.sign();
        }
        at.swap(l.index - 1, l.index);
    }
    total / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn compose_examples() {
        let z = w(2, "z1");
        assert!(equals(&compose(&BraidWord::identity(2), &z).unwrap(), &z).unwrap());
        assert!(normal_form(&compose(&z, &z.inverse()).unwrap()).is_identity());
        let c = compose(&w(3, "z1 z2"), &w(3, "z1")).unwrap();
        assert_eq!(c.to_string(), "z1 z2 z1");
        assert!(equals(&c, &w(3, "z2 z1 z2")).unwrap());
        assert!(compose(&w(2, ""), &w(3, "")).is_err());
    }

    #[test]
    fn equals_examples() {
        let a = w(4, "z1 z2^-1 z3");
        assert!(equals(&a, &a).unwrap());
        assert!(equals(&w(4, "z1 z3"), &w(4, "z3 z1")).unwrap());
        assert!(!equals(&w(2, "z1"), &w(2, "z1^-1")).unwrap());
    }

    #[test]
    fn chi_equals_cable() {
        let c = cable(&w(2, "z1"), &[2, 1]).unwrap();
        assert!(equals(&c, &chi(2, 1)).unwrap());
        assert!(equals(&cable(&BraidWord::identity(3), &[2, 0, 3]).unwrap(), &BraidWord::identity(5)).unwrap());
    }

    #[test]
    fn parabolic_examples() {
        let z = w(2, "z1");
        let (a, b) = parabolic_factor(&z.block_sum(&z), 2, 2).unwrap().unwrap();
        assert!(equals(&a, &z).unwrap() && equals(&b, &z).unwrap());
        assert!(parabolic_factor(&w(4, "z2"), 2, 2).unwrap().is_none());
        let sq = w(4, "z2 z2");
        assert!(parabolic_factor(&sq, 2, 2).unwrap().is_none());
        assert_eq!(block_linking_number(&sq, 2), 1);
    }

    #[test]
    fn blocks_factorization() {
        let a = w(2, "z1");
        let b = w(3, "z2^-1 z1");
        let c = w(1, "");
        let x = a.block_sum(&b).block_sum(&c);
        let parts = parabolic_factor_blocks(&x, &[2, 3, 1]).unwrap().unwrap();
        assert!(equals(&parts[0], &a).unwrap());
        assert!(equals(&parts[1], &b).unwrap());
        assert_eq!(parts[2].n, 1);
    }
}
