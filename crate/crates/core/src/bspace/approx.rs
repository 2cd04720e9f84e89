//! A finite stand-in for X_{h𝔅}: the Bousfield–Kan formula over 𝔅-morphisms
//! between levels ≤ N whose braid has a word of length ≤ L. Always flagged
//! approximate; nothing is claimed about convergence in (N, L).

use std::collections::BTreeSet;

use serde::Serialize;

use super::space::TBSpace;
use super::sset::TSSet;
use crate::binj::{compose, BraidedInjection, OrderInj};
use crate::braid::{BraidWord, GarsideNF, Letter};
use crate::error::{Error, Result};

pub const APPROXIMATE_CAVEAT: &str =
    "APPROXIMATE: truncated Bousfield-Kan formula over a finite set of B-morphisms; the true homotopy colimit is over an infinite category and no convergence is claimed";

#[derive(Debug, Clone)]
pub struct ApproxHocolim {
    pub set: TSSet,
    pub n_max: usize,
    pub word_len: usize,
    pub approximate: bool,
}

#[derive(Serialize)]
struct ApproxJson {
    approximate: bool,
    caveat: &'static str,
    n_max: usize,
    word_len: usize,
    counts: Vec<usize>,
}

impl ApproxHocolim {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(ApproxJson {
            approximate: self.approximate,
            caveat: APPROXIMATE_CAVEAT,
            n_max: self.n_max,
            word_len: self.word_len,
            counts: (0..=self.set.dim).map(|k| self.set.count(k)).collect(),
        })
        .expect("serializable");
        v["simplicial_set"] = self.set.to_json();
        v
    }
}

/// Braids in 𝓑_m with a word of length ≤ L.
fn short_braids(m: usize, len: usize) -> BTreeSet<GarsideNF> {
    let mut words = vec![BraidWord::identity(m)];
    let mut out: BTreeSet<GarsideNF> = BTreeSet::new();
    out.insert(GarsideNF::identity(m));
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &words {
            for i in 1..m {
                for positive in [true, false] {
                    let mut v = w.clone();
                    v.letters.push(Letter { index: i, positive });
                    if out.insert(GarsideNF::from_word(&v)) {
                        next.push(v);
                    }
                }
            }
        }
        words = next;
    }
    out
}

fn order_injs(m: usize, n: usize) -> Vec<OrderInj> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, m, &mut Vec::new(), &mut out);
    out.into_iter().map(|im| OrderInj::new(n, im).expect("increasing")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Simplex {
    /// chain[j] : m_{j+1} → m_j
    chain: Vec<BraidedInjection>,
    level: usize,
    x: usize,
}

/// Simplices: chains m_0 ← … ← m_k in the morphism set whose composites of
/// consecutive runs all lie in the set, decorated by x ∈ X(m_k)_k.
pub fn hocolim_b_approx(x: &TBSpace, n_max: usize, word_len: usize) -> Result<ApproxHocolim> {
    let n_max = n_max.min(x.n_max);
    let dim = x.dim();
    let mut mors: Vec<BraidedInjection> = Vec::new();
    for m in 0..=n_max {
        let braids = short_braids(m, word_len);
        for n in m..=n_max {
            for mu in order_injs(m, n) {
                for z in &braids {
                    mors.push(BraidedInjection { mu: mu.clone(), zeta: z.clone() });
                }
            }
        }
    }
    let set: std::collections::HashSet<BraidedInjection> = mors.iter().cloned().collect();
    let valid = |ch: &[BraidedInjection]| -> bool {
        // every composite chain[i]∘…∘chain[j] must be in the set
        for i in 0..ch.len() {
            let mut acc = ch[i].clone();
            for f in &ch[i + 1..] {
                match compose(&acc, f) {
                    Ok(c) if set.contains(&c) => acc = c,
                    _ => return false,
                }
            }
        }
        true
    };
    let mut chains: Vec<Vec<Vec<BraidedInjection>>> = vec![vec![vec![]]];
    for k in 1..=dim {
        let mut next = Vec::new();
        for ch in &chains[k - 1] {
            for f in &mors {
                if let Some(last) = ch.last() {
                    if f.target() != last.source() {
                        continue;
                    }
                }
                let mut c = ch.clone();
                c.push(f.clone());
                if valid(&c) {
                    next.push(c);
                }
            }
        }
        chains.push(next);
    }
    let mut simplices: Vec<Vec<Simplex>> = Vec::new();
    for (k, cs) in chains.iter().enumerate() {
        let mut v = Vec::new();
        for ch in cs {
            let levels: Vec<usize> = if k == 0 { (0..=n_max).collect() } else { vec![ch[k - 1].source()] };
            for level in levels {
                for s in 0..x.levels[level].count(k) {
                    v.push(Simplex { chain: ch.clone(), level, x: s });
                }
            }
        }
        simplices.push(v);
    }
    let act = |f: &BraidedInjection, k: usize, s: usize| x.act(f, k, s).expect("levels within N");
    let face = |k: usize, s: &Simplex, i: usize| -> Simplex {
        let dx = x.levels[s.level].face(k, s.x, i);
        let ch = &s.chain;
        if i == k {
            let g = &ch[k - 1];
            Simplex { chain: ch[..k - 1].to_vec(), level: g.target(), x: act(g, k - 1, dx) }
        } else if i == 0 {
            Simplex { chain: ch[1..].to_vec(), level: s.level, x: dx }
        } else {
            let mut v = ch[..i - 1].to_vec();
            v.push(compose(&ch[i - 1], &ch[i]).expect("composable"));
            v.extend_from_slice(&ch[i + 1..]);
            Simplex { chain: v, level: s.level, x: dx }
        }
    };
    let degen = |k: usize, s: &Simplex, i: usize| -> Simplex {
        let sx = x.levels[s.level].degen(k, s.x, i);
        let ch = &s.chain;
        let obj = if k == 0 { s.level } else if i == 0 { ch[0].target() } else { ch[i - 1].source() };
        let mut v = ch.clone();
        v.insert(i, BraidedInjection::identity(obj));
        Simplex { chain: v, level: s.level, x: sx }
    };
    let (set, _) = TSSet::from_keys(dim, simplices, face, degen).map_err(|e| Error::Invalid(format!("approximation not closed: {e}")))?;
    Ok(ApproxHocolim { set, n_max, word_len, approximate: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bspace::fixtures::ConstantModel;
    use crate::bspace::homology::{homology, HomologyGroup};
    use crate::bspace::space::materialize;
    use crate::bspace::sset::check_simplicial;

    #[test]
    fn constant_point_is_connected() {
        let (u, _) = materialize(&ConstantModel::terminal(2, 2)).unwrap();
        for (n, l) in [(1, 1), (2, 1), (2, 2)] {
            let h = hocolim_b_approx(&u, n, l).unwrap();
            assert!(h.approximate);
            assert!(check_simplicial(&h.set).passed());
            assert_eq!(homology(&h.set, 1).unwrap()[0], HomologyGroup::free(1));
        }
    }

    #[test]
    fn constant_s0_has_two_components_and_grows_with_l() {
        let (k, _) = materialize(&ConstantModel { x: TSSet::discrete(1, &["a", "b"]), n_max: 2 }).unwrap();
        let h1 = hocolim_b_approx(&k, 2, 1).unwrap();
        let h2 = hocolim_b_approx(&k, 2, 2).unwrap();
        assert_eq!(homology(&h1.set, 0).unwrap()[0], HomologyGroup::free(2));
        for d in 0..=1 {
            assert!((0..h1.set.count(d)).all(|s| h2.set.lookup(d, h1.set.label(d, s)).is_some()));
        }
        assert!(h2.set.count(1) > h1.set.count(1));
        assert_eq!(h1.to_json()["approximate"], serde_json::json!(true));
    }
}
