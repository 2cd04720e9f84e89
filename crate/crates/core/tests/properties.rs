use std::collections::BTreeMap;

use braidinj::binj::{chi_morphism, compose, from_word, pi, tensor, upsilon, BraidedInjection, Gen, OrderInj};
use braidinj::braid::{self, BraidWord, GarsideNF, Letter};
use braidinj::fincat::{BCategory, BraidGroupoid, TableCat};
use braidinj::rectify::Phi;
use proptest::prelude::*;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len)
        .prop_map(move |v| BraidWord { n, letters: v.into_iter().map(|(index, positive)| Letter { index, positive }).collect() })
}

/// Inserts a relator (free pair, commutation or braid relator) at a position.
fn with_relator(w: &BraidWord, kind: usize, i: usize, j: usize, at: usize) -> BraidWord {
    let n = w.n;
    let i = 1 + i % (n - 1);
    let (p, q) = (Letter::pos, Letter::neg);
    let rel: Vec<Letter> = match kind % 3 {
        0 => vec![p(i), q(i)],
        1 if n >= 4 => {
            let j = 1 + j % (n - 1);
            if i.abs_diff(j) >= 2 {
                vec![p(i), p(j), q(i), q(j)]
            } else {
                vec![q(i), p(i)]
            }
        }
        _ if i + 1 < n => vec![p(i), p(i + 1), p(i), q(i + 1), q(i), q(i + 1)],
        _ => vec![q(i), p(i)],
    };
    let at = at % (w.letters.len() + 1);
    let mut letters = w.letters[..at].to_vec();
    letters.extend(rel);
    letters.extend_from_slice(&w.letters[at..]);
    BraidWord { n, letters }
}

type Laurent = BTreeMap<i32, i64>;

fn lmul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn ladd(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn mono(e: i32, c: i64) -> Laurent {
    if c == 0 {
        Laurent::new()
    } else {
        Laurent::from([(e, c)])
    }
}

/// Unreduced Burau matrix over ℤ[t, t⁻¹]; faithful on 𝓑₃.
fn burau(w: &BraidWord) -> Vec<Vec<Laurent>> {
    let n = w.n;
    let mut m: Vec<Vec<Laurent>> = (0..n).map(|r| (0..n).map(|c| mono(0, i64::from(r == c))).collect()).collect();
    for l in &w.letters {
        let i = l.index - 1;
        let mut g: Vec<Vec<Laurent>> = (0..n).map(|r| (0..n).map(|c| mono(0, i64::from(r == c))).collect()).collect();
        let block = if l.positive {
            [[ladd(&mono(0, 1), &mono(1, -1)), mono(1, 1)], [mono(0, 1), Laurent::new()]]
        } else {
            [[Laurent::new(), mono(0, 1)], [mono(-1, 1), ladd(&mono(0, 1), &mono(-1, -1))]]
        };
        for r in 0..2 {
            for c in 0..2 {
                g[i + r][i + c] = block[r][c].clone();
            }
        }
        m = (0..n)
            .map(|r| (0..n).map(|c| (0..n).fold(Laurent::new(), |acc, k| ladd(&acc, &lmul(&m[r][k], &g[k][c])))).collect())
            .collect();
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn normal_form_is_idempotent(w in word(5, 12)) {
        let nf = GarsideNF::from_word(&w);
        prop_assert!(nf.is_normal());
        prop_assert_eq!(GarsideNF::from_word(&nf.to_word()), nf);
    }

    #[test]
    fn equality_is_a_congruence(a in word(6, 12), c in word(6, 12), kind in 0..3usize, i in 0..5usize, j in 0..5usize, at in 0..13usize) {
        let b = with_relator(&a, kind, i, j, at);
        prop_assert!(braid::equals(&a, &b).unwrap());
        prop_assert!(braid::equals(&braid::compose(&a, &c).unwrap(), &braid::compose(&b, &c).unwrap()).unwrap());
        prop_assert!(braid::equals(&braid::compose(&c, &a).unwrap(), &braid::compose(&c, &b).unwrap()).unwrap());
    }

    #[test]
    fn permutation_is_a_homomorphism(a in word(6, 10), b in word(6, 10)) {
        let ab = braid::compose(&a, &b).unwrap();
        prop_assert_eq!(braid::underlying_permutation(&ab), braid::underlying_permutation(&b).after(&braid::underlying_permutation(&a)));
    }

    #[test]
    fn deleting_the_second_block_recovers_the_first(a in word(3, 8), b in word(3, 8)) {
        let s = braid::block_sum(&a, &b);
        let d = braid::delete_strands(&s, &[4, 5, 6]).unwrap();
        prop_assert!(braid::equals(&d, &a).unwrap());
    }

    #[test]
    fn cabling_respects_composition(a in word(4, 6), b in word(4, 6), w in prop::collection::vec(0..3usize, 4)) {
        let pa = braid::underlying_permutation(&a);
        let mut moved = vec![0; 4];
        for (i, &wi) in w.iter().enumerate() {
            moved[pa.apply(i + 1) - 1] = wi;
        }
        let whole = braid::cable(&braid::compose(&a, &b).unwrap(), &w).unwrap();
        let parts = braid::compose(&braid::cable(&a, &w).unwrap(), &braid::cable(&b, &moved).unwrap()).unwrap();
        prop_assert!(braid::equals(&whole, &parts).unwrap());
    }

    #[test]
    fn garside_agrees_with_burau_on_b3(a in word(3, 10), b in word(3, 10), kind in 0..3usize, i in 0..2usize, at in 0..11usize, related in any::<bool>()) {
        let b = if related { with_relator(&a, kind, i, 0, at) } else { b };
        let garside = braid::equals(&a, &b).unwrap();
        prop_assert_eq!(garside, burau(&a) == burau(&b));
    }

    #[test]
    fn pi_is_strict_monoidal(m1 in 0..4usize, e1 in 0..3usize, m2 in 0..4usize, e2 in 0..3usize, seed in any::<u64>()) {
        let mut g = braidinj::rng(seed);
        let f = braidinj::binj::random::braided_injection(&mut g, m1, m1 + e1, 6);
        let h = braidinj::binj::random::braided_injection(&mut g, m2, m2 + e2, 6);
        prop_assert_eq!(pi(&tensor(&f, &h)), pi(&f).tensor(&pi(&h)));
    }

    #[test]
    fn partial_words_from_zero_agree(picks in prop::collection::vec(0..6usize, 0..=5)) {
        // 𝔅(0, n) has exactly one element
        let word: Vec<Gen> = picks.iter().enumerate().map(|(k, &p)| Gen::Partial { i: 1 + p % (k + 1), n: k }).collect();
        let n = word.len();
        prop_assert_eq!(from_word(0, &word).unwrap(), upsilon(&OrderInj::new(n, vec![]).unwrap()));
    }

    #[test]
    fn braid_actions_on_phi_are_invertible(w in word(3, 8), objs in prop::collection::vec(0..3usize, 3)) {
        let phi = Phi::new(BraidGroupoid::new(3, 4), 3);
        let a = BraidedInjection::from_braid(GarsideNF::from_word(&w));
        let there = phi.act_obj(&a, &objs).unwrap();
        let back = phi.act_obj(&a.inverse().unwrap(), &there).unwrap();
        prop_assert_eq!(back, objs.clone());
        let z2 = Phi::new(TableCat::z2(), 3);
        let t: Vec<usize> = objs.iter().map(|o| o % 2).collect();
        let id = z2.identity(&t);
        let moved = z2.act_mor(&a, &id).unwrap();
        prop_assert_eq!(z2.act_mor(&a.inverse().unwrap(), &moved).unwrap(), id);
    }
}

#[test]
fn chi_inverse_is_the_inverse_braiding() {
    for m in 0..=3 {
        for n in 0..=3 {
            let c = chi_morphism(m, n);
            let inv = BraidedInjection::from_braid(GarsideNF::from_word(&braid::chi(m, n).inverse()));
            assert_eq!(c.inverse().unwrap(), inv);
            assert_eq!(compose(&inv, &c).unwrap(), BraidedInjection::identity(m + n));
        }
    }
}

#[test]
fn burau_separates_small_examples() {
    let w = |s: &str| BraidWord::parse(3, s).unwrap();
    assert_eq!(burau(&w("z1 z2 z1")), burau(&w("z2 z1 z2")));
    assert_ne!(burau(&w("z1 z2")), burau(&w("z2 z1")));
    assert_ne!(burau(&w("z1")), burau(&w("z1^-1")));
}
