//! Brute-force word-problem oracle: the equivalence closure of free
//! reduction/insertion and the braid relations, restricted to words of
//! bounded length and computed with union-find.

use std::collections::HashMap;

use crate::braid::{BraidWord, GarsideNF, Letter};
use crate::report::CheckReport;

type Code = u64;

const BITS: u32 = 4;

fn letter_code(l: Letter) -> u8 {
    (2 * (l.index - 1) + usize::from(!l.positive) + 1) as u8
}

fn code_letter(c: u8) -> Letter {
    let c = (c - 1) as usize;
    Letter { index: c / 2 + 1, positive: c % 2 == 0 }
}

fn inv(c: u8) -> u8 {
    let z = c - 1;
    (z ^ 1) + 1
}

fn encode(w: &[u8]) -> Code {
    let mut code: Code = 0;
    for &c in w {
        code = (code << BITS) | c as Code;
    }
    (code << 5) | w.len() as Code
}

fn decode(code: Code) -> Vec<u8> {
    let len = (code & 31) as usize;
    let mut body = code >> 5;
    let mut w = vec![0u8; len];
    for i in (0..len).rev() {
        w[i] = (body & ((1 << BITS) - 1)) as u8;
        body >>= BITS;
    }
    w
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Defining relators of 𝓑_n together with trivial relators x·x⁻¹, closed
/// under cyclic rotation and inversion.
fn relators(n: usize) -> Vec<Vec<u8>> {
    let g = |i: usize| letter_code(Letter::pos(i));
    let mut base: Vec<Vec<u8>> = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i == j {
                continue;
            }
            if i.abs_diff(j) >= 2 {
                base.push(vec![g(i), g(j), inv(g(i)), inv(g(j))]);
            } else {
                base.push(vec![g(i), g(j), g(i), inv(g(j)), inv(g(i)), inv(g(j))]);
            }
        }
        base.push(vec![g(i), inv(g(i))]);
        base.push(vec![inv(g(i)), g(i)]);
    }
    let mut all = Vec::new();
    for r in base {
        let ri: Vec<u8> = r.iter().rev().map(|&c| inv(c)).collect();
        for w in [r, ri] {
            for k in 0..w.len() {
                let mut rot = w[k..].to_vec();
                rot.extend_from_slice(&w[..k]);
                all.push(rot);
            }
        }
    }
    all.sort();
    all.dedup();
    all
}

pub struct RewriteOracle {
    n: usize,
    max_len: usize,
    index: HashMap<Code, u32>,
    uf: UnionFind,
}

impl RewriteOracle {
    /// Connects every pair of words of length ≤ `max_len` related by one
    /// rewrite u → v where u·v⁻¹ is a relator.
    pub fn build(n: usize, max_len: usize) -> Self {
        assert!(n >= 2 && 2 * (n - 1) < (1 << BITS) && max_len * BITS as usize + 5 <= 64);
        let alphabet: Vec<u8> = (1..=(2 * (n - 1)) as u8).collect();
        let mut words: Vec<Code> = vec![encode(&[])];
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * alphabet.len());
            for w in &layer {
                for &c in &alphabet {
                    let mut x = w.clone();
                    x.push(c);
                    words.push(encode(&x));
                    next.push(x);
                }
            }
            layer = next;
        }
        let index: HashMap<Code, u32> = words.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
        let mut rules: HashMap<Vec<u8>, Vec<Vec<u8>>> = HashMap::new();
        for r in relators(n) {
            for k in 0..=r.len() {
                let u = r[..k].to_vec();
                let v: Vec<u8> = r[k..].iter().rev().map(|&c| inv(c)).collect();
                rules.entry(u).or_default().push(v);
            }
        }
        let max_u = rules.keys().map(|u| u.len()).max().unwrap_or(0);
        let mut uf = UnionFind { parent: (0..words.len() as u32).collect() };
        for (id, &code) in words.iter().enumerate() {
            let w = decode(code);
            for p in 0..=w.len() {
                for l in 0..=max_u.min(w.len() - p) {
                    let Some(vs) = rules.get(&w[p..p + l]) else { continue };
                    for v in vs {
                        let new_len = w.len() - l + v.len();
                        if new_len > max_len {
                            continue;
                        }
                        let mut x = Vec::with_capacity(new_len);
                        x.extend_from_slice(&w[..p]);
                        x.extend_from_slice(v);
                        x.extend_from_slice(&w[p + l..]);
                        uf.union(id as u32, index[&encode(&x)]);
                    }
                }
            }
        }
        RewriteOracle { n, max_len, index, uf }
    }

    /// Class representative of a word of length ≤ max_len.
    pub fn class(&mut self, w: &BraidWord) -> Option<u32> {
        if w.n != self.n || w.len() > self.max_len {
            return None;
        }
        let codes: Vec<u8> = w.letters.iter().map(|&l| letter_code(l)).collect();
        let id = *self.index.get(&encode(&codes))?;
        Some(self.uf.find(id))
    }
}

/// All words of length ≤ len in 𝓑_n.
pub fn all_words(n: usize, len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<u8> = (1..=(2 * (n - 1)) as u8).collect();
    let mut out = vec![BraidWord::identity(n)];
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &c in &alphabet {
                let mut x = w.clone();
                x.push(c);
                out.push(BraidWord { n, letters: x.iter().map(|&c| code_letter(c)).collect() });
                next.push(x);
            }
        }
        layer = next;
    }
    out
}

/// Compares the partition of words of length ≤ `word_len` induced by the
/// normal form with the rewriting closure inside length `closure_len`.
pub fn compare_with_normal_form(n: usize, word_len: usize, closure_len: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("word-problem B_{n} len<={word_len}"));
    let mut oracle = RewriteOracle::build(n, closure_len);
    let mut by_nf: HashMap<GarsideNF, u32> = HashMap::new();
    let mut by_class: HashMap<u32, GarsideNF> = HashMap::new();
    for w in all_words(n, word_len) {
        let nf = GarsideNF::from_word(&w);
        let class = oracle.class(&w).expect("word within closure bound");
        let a = *by_nf.entry(nf.clone()).or_insert(class);
        let b = by_class.entry(class).or_insert_with(|| nf.clone()).clone();
        let ok = a == class && b == nf;
        report.record(ok, || format!("B_{n} {w}"), || "normal form and rewriting closure disagree".into());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_roundtrip() {
        let w = vec![1, 4, 3, 2, 6];
        assert_eq!(decode(encode(&w)), w);
        assert_eq!(decode(encode(&[])), Vec::<u8>::new());
    }

    #[test]
    fn closure_knows_the_braid_relation() {
        let mut o = RewriteOracle::build(3, 4);
        let a = BraidWord::parse(3, "z1 z2 z1").unwrap();
        let b = BraidWord::parse(3, "z2 z1 z2").unwrap();
        let c = BraidWord::parse(3, "z1 z1 z2").unwrap();
        assert_eq!(o.class(&a), o.class(&b));
        assert_ne!(o.class(&a), o.class(&c));
    }
}
