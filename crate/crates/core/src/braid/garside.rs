use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::word::{delta, permutation_braid, BraidWord};
use crate::error::{dim_err, Error, Result};

/// Left normal form Δ^p · A_1 ⋯ A_k with simple factors stored as
/// permutations (position maps of permutation braids).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GarsideNF {
    pub n: usize,
    pub delta_power: i64,
    pub factors: Vec<Permutation>,
}

/// Positions j (1-based, j < n) where strands at j and j+1 cross first.
fn starts_with(a: &Permutation, j: usize) -> bool {
    a.at(j - 1) > a.at(j)
}

/// Whether the strands ending at j, j+1 have crossed in `a`.
fn ends_with(a_inv: &Permutation, j: usize) -> bool {
    a_inv.at(j - 1) > a_inv.at(j)
}

fn conj_delta(a: &Permutation) -> Permutation {
    let n = a.degree();
    let d = Permutation::reversal(n);
    d.after(a).after(&d)
}

/// Makes (a, b) left-weighted in place; returns whether anything moved.
fn fix_pair(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.degree();
    let mut changed = false;
    loop {
        let a_inv = a.inverse();
        let mv = (1..n).find(|&j| starts_with(b, j) && !ends_with(&a_inv, j));
        match mv {
            None => return changed,
            Some(j) => {
                let t = Permutation::transposition(n, j);
                *a = t.after(a);
                *b = b.after(&t);
                changed = true;
            }
        }
    }
}

/// Incremental left-normalization: items are pushed in time order.
pub(crate) struct NfBuilder {
    n: usize,
    delta: i64,
    factors: Vec<Permutation>,
}

impl NfBuilder {
    pub(crate) fn new(n: usize) -> Self {
        NfBuilder { n, delta: 0, factors: Vec::new() }
    }

    pub(crate) fn from_nf(nf: &GarsideNF) -> Self {
        NfBuilder { n: nf.n, delta: nf.delta_power, factors: nf.factors.clone() }
    }

    pub(crate) fn push_delta(&mut self, e: i64) {
        if self.n <= 1 || e == 0 {
            return;
        }
        if e.rem_euclid(2) == 1 {
            for f in &mut self.factors {
                *f = conj_delta(f);
            }
        }
        self.delta += e;
    }

    pub(crate) fn push_simple(&mut self, p: Permutation) {
        debug_assert_eq!(p.degree(), self.n);
        if p.is_identity() {
            return;
        }
        self.factors.push(p);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let (left, right) = self.factors.split_at_mut(i);
            if !fix_pair(&mut left[i - 1], &mut right[0]) {
                break;
            }
            i -= 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        let full = Permutation::reversal(self.n);
        let lead = self.factors.iter().take_while(|f| **f == full).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.delta += lead as i64;
        }
    }

    pub(crate) fn push_letter(&mut self, index: usize, positive: bool) {
        let t = Permutation::transposition(self.n, index);
        if positive {
            self.push_simple(t);
        } else {
            // σ⁻¹ = Δ⁻¹ · (Δσ⁻¹)
            self.push_delta(-1);
            self.push_simple(t.after(&Permutation::reversal(self.n)));
        }
    }

    pub(crate) fn finish(self) -> GarsideNF {
        GarsideNF { n: self.n, delta_power: self.delta, factors: self.factors }
    }
}

impl GarsideNF {
    pub fn identity(n: usize) -> Self {
        GarsideNF { n, delta_power: 0, factors: Vec::new() }
    }

    pub fn from_word(w: &BraidWord) -> Self {
        let mut b = NfBuilder::new(w.n);
        for l in &w.letters {
            b.push_letter(l.index, l.positive);
        }
        b.finish()
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Ok(Self::from_word(&BraidWord::parse(n, text)?))
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Canonical word: Δ^p followed by the permutation braids of the factors.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        if self.n > 1 {
            let d = if self.delta_power >= 0 { delta(self.n) } else { delta(self.n).inverse() };
            for _ in 0..self.delta_power.unsigned_abs() {
                letters.extend_from_slice(&d.letters);
            }
        }
        for f in &self.factors {
            letters.extend(permutation_braid(f).letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// "self then other".
    pub fn then(&self, other: &GarsideNF) -> Result<GarsideNF> {
        if self.n != other.n {
            return dim_err(format!("compose B_{} with B_{}", self.n, other.n));
        }
        let mut b = NfBuilder::from_nf(self);
        b.push_delta(other.delta_power);
        for f in &other.factors {
            b.push_simple(f.clone());
        }
        Ok(b.finish())
    }

    pub fn inverse(&self) -> GarsideNF {
        let mut b = NfBuilder::new(self.n);
        let full = Permutation::reversal(self.n);
        for f in self.factors.iter().rev() {
            // A⁻¹ = (A⁻¹Δ) · Δ⁻¹
            b.push_simple(full.after(&f.inverse()));
            b.push_delta(-1);
        }
        b.push_delta(-self.delta_power);
        b.finish()
    }

    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        if self.delta_power.rem_euclid(2) == 1 {
            p = Permutation::reversal(self.n);
        }
        for f in &self.factors {
            p = f.after(&p);
        }
        p
    }

    pub fn block_sum(&self, other: &GarsideNF) -> GarsideNF {
        Self::from_word(&self.to_word().block_sum(&other.to_word()))
    }

    /// Checks the stored-form invariants.
    pub fn is_normal(&self) -> bool {
        if self.n <= 1 {
            return self.delta_power == 0 && self.factors.is_empty();
        }
        let full = Permutation::reversal(self.n);
        if self.factors.iter().any(|f| f.degree() != self.n || f.is_identity() || *f == full) {
            return false;
        }
        self.factors.windows(2).all(|w| {
            let (mut a, mut b) = (w[0].clone(), w[1].clone());
            !fix_pair(&mut a, &mut b)
        })
    }
}

#[derive(Deserialize)]
struct RawNf {
    n: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl<'de> Deserialize<'de> for GarsideNF {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawNf::deserialize(d)?;
        let nf = GarsideNF { n: raw.n, delta_power: raw.delta_power, factors: raw.factors };
        if !nf.is_normal() {
            return Err(serde::de::Error::custom(Error::Invalid("factors not in left normal form".into())));
        }
        Ok(nf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, s: &str) -> GarsideNF {
        GarsideNF::parse(n, s).unwrap()
    }

    #[test]
    fn empty_word_is_trivial() {
        let e = nf(3, "");
        assert_eq!(e.delta_power, 0);
        assert!(e.factors.is_empty());
    }

    #[test]
    fn braid_relation_same_form() {
        assert_eq!(nf(3, "z1 z2 z1"), nf(3, "z2 z1 z2"));
        assert_eq!(nf(3, "z1 z2 z1").delta_power, 1);
        assert_eq!(nf(4, "z1 z3"), nf(4, "z3 z1"));
        assert_ne!(nf(2, "z1"), nf(2, "z1^-1"));
        assert!(nf(2, "z1 z1^-1").is_identity());
        assert!(nf(5, "z2^-1 z4 z4^-1 z2").is_identity());
    }

    #[test]
    fn inverse_and_product() {
        let a = nf(4, "z1 z2^-1 z3 z3 z1^-1 z2");
        assert!(a.then(&a.inverse()).unwrap().is_identity());
        assert!(a.inverse().then(&a).unwrap().is_identity());
        assert_eq!(a.inverse(), GarsideNF::from_word(&a.to_word().inverse()));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let a = nf(4, "z3^-1 z1 z2 z2 z3^-1 z1^-1 z2");
        assert!(a.is_normal());
        assert_eq!(GarsideNF::from_word(&a.to_word()), a);
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let a = nf(3, "z1 z2^-1");
        let s = serde_json::to_string(&a).unwrap();
        let b: GarsideNF = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        let bad = r#"{"n":3,"delta_power":0,"factors":[[3,2,1]]}"#;
        assert!(serde_json::from_str::<GarsideNF>(bad).is_err());
    }

    #[test]
    fn trivial_groups() {
        assert!(nf(1, "").is_normal());
        assert!(GarsideNF::identity(0).inverse().is_identity());
    }
}
