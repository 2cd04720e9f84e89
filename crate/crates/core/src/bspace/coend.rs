//! Symbolic elements of iterated convolution products X₁⊠⋯⊠X_k(n):
//! a witness φ: m₁⊔⋯⊔m_k → n and one simplex per factor, modulo
//! (φ∘(α₁⊔⋯⊔α_k), x) ~ (φ, X(α₁)x₁, …).

use rand::Rng as _;
use serde::Serialize;

use super::space::{TBSpace, TBSpaceMonoid};
use crate::binj::{compose, partial_gen, random, tensor, BraidedInjection};
use crate::braid::{parabolic_factor_blocks, GarsideNF};
use crate::error::{dim_err, Result};
use crate::Rng;

/// Witness plus factors, all in simplicial degree `dim`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoendElement {
    pub splits: Vec<usize>,
    #[serde(serialize_with = "ser_binj")]
    pub phi: BraidedInjection,
    pub xs: Vec<usize>,
    pub dim: usize,
}

fn ser_binj<S: serde::Serializer>(b: &BraidedInjection, s: S) -> std::result::Result<S::Ok, S::Error> {
    b.to_json().serialize(s)
}

/// A two-factor element of (X⊠Y)(n).
pub type BoxElement = CoendElement;

/// Default bound on destabilizing moves per element.
pub const SATURATION_STEPS: usize = 64;

/// Block sum of identities with `f` in slot `slot`.
fn block_with(splits: &[usize], slot: usize, f: &BraidedInjection) -> BraidedInjection {
    splits.iter().enumerate().fold(BraidedInjection::identity(0), |acc, (i, &m)| {
        tensor(&acc, &if i == slot { f.clone() } else { BraidedInjection::identity(m) })
    })
}

impl CoendElement {
    pub fn new(splits: Vec<usize>, phi: BraidedInjection, xs: Vec<usize>, dim: usize) -> Result<Self> {
        if splits.len() != xs.len() || splits.iter().sum::<usize>() != phi.source() {
            return dim_err(format!("splits {splits:?} do not match a witness from {}", phi.source()));
        }
        Ok(CoendElement { splits, phi, xs, dim })
    }

    pub fn pair(m1: usize, m2: usize, phi: BraidedInjection, x: usize, y: usize, dim: usize) -> Result<Self> {
        Self::new(vec![m1, m2], phi, vec![x, y], dim)
    }

    pub fn level(&self) -> usize {
        self.phi.target()
    }

    pub fn arity(&self) -> usize {
        self.xs.len()
    }

    /// (φ∘(α₁⊔⋯⊔α_k), x) from (φ, ·) and the α's, with x given at the
    /// sources; the partner (φ, X(α)x) is returned second.
    pub fn relation_pair(
        phi: &BraidedInjection,
        alphas: &[BraidedInjection],
        xs: &[usize],
        dim: usize,
        spaces: &[&TBSpace],
    ) -> Result<(CoendElement, CoendElement)> {
        let sum = alphas.iter().fold(BraidedInjection::identity(0), |acc, a| tensor(&acc, a));
        let left = CoendElement::new(alphas.iter().map(|a| a.source()).collect(), compose(phi, &sum)?, xs.to_vec(), dim)?;
        let ys = alphas.iter().enumerate().map(|(i, a)| space(spaces, i).act(a, dim, xs[i])).collect::<Result<Vec<_>>>()?;
        let right = CoendElement::new(alphas.iter().map(|a| a.target()).collect(), phi.clone(), ys, dim)?;
        Ok((left, right))
    }
}

pub(crate) fn space<'a>(spaces: &[&'a TBSpace], i: usize) -> &'a TBSpace {
    spaces[if spaces.len() == 1 { 0 } else { i }]
}

/// Pulls factors back along ∂'s while possible: the result is the same
/// class with every factor outside the image of every ∂.
pub fn minimal_form(e: &CoendElement, spaces: &[&TBSpace], steps: usize) -> Result<CoendElement> {
    let mut cur = e.clone();
    for _ in 0..steps {
        let mut moved = false;
        'factors: for slot in 0..cur.arity() {
            let m = cur.splits[slot];
            if m == 0 {
                continue;
            }
            for j in 1..=m {
                if let Some(p) = space(spaces, slot).partial_preimage(j, m - 1, cur.dim, cur.xs[slot]) {
                    let d = partial_gen(j, m - 1)?;
                    cur.phi = compose(&cur.phi, &block_with(&cur.splits, slot, &d))?;
                    cur.splits[slot] = m - 1;
                    cur.xs[slot] = p;
                    moved = true;
                    break 'factors;
                }
            }
        }
        if !moved {
            break;
        }
    }
    Ok(cur)
}

/// Greedy right-division of ζ by block generators: moves a block braid b
/// from ζ = b·ζ' into the factors whenever that shortens ζ's normal form.
pub fn canonicalize(e: &CoendElement, spaces: &[&TBSpace]) -> Result<CoendElement> {
    let mut cur = minimal_form(e, spaces, SATURATION_STEPS)?;
    let size = |z: &GarsideNF| z.to_word().len();
    for _ in 0..SATURATION_STEPS {
        let mut best: Option<(usize, CoendElement)> = None;
        for (slot, &m) in cur.splits.iter().enumerate() {
            for i in 1..m {
                for positive in [true, false] {
                    let g = crate::binj::zeta_gen(i, m, positive)?;
                    let b = block_with(&cur.splits, slot, &g);
                    let zeta2 = b.zeta.inverse().then(&cur.phi.zeta)?;
                    let s = size(&zeta2);
                    if s < best.as_ref().map_or(size(&cur.phi.zeta), |(t, _)| *t) {
                        let mut next = cur.clone();
                        next.phi = BraidedInjection { mu: cur.phi.mu.clone(), zeta: zeta2 };
                        next.xs[slot] = space(spaces, slot).act(&g, cur.dim, cur.xs[slot])?;
                        best = Some((s, next));
                    }
                }
            }
        }
        match best {
            Some((_, next)) => cur = next,
            None => break,
        }
    }
    Ok(cur)
}

/// Equality of coend classes: both sides are destabilized, then the μ's
/// must agree and ζ₁ζ₂⁻¹ must factor through the block subgroup with the
/// blocks matching the factors.
pub fn box_equal(e1: &CoendElement, e2: &CoendElement, spaces: &[&TBSpace], steps: usize) -> Result<bool> {
    if e1.level() != e2.level() || e1.arity() != e2.arity() || e1.dim != e2.dim {
        return Ok(false);
    }
    let a = minimal_form(e1, spaces, steps)?;
    let b = minimal_form(e2, spaces, steps)?;
    if a.splits != b.splits || a.phi.mu != b.phi.mu {
        return Ok(false);
    }
    let w = a.phi.zeta.then(&b.phi.zeta.inverse())?.to_word();
    let Some(blocks) = parabolic_factor_blocks(&w, &a.splits)? else { return Ok(false) };
    for (slot, beta) in blocks.iter().enumerate() {
        let beta = BraidedInjection::from_braid(GarsideNF::from_word(beta));
        if space(spaces, slot).act(&beta, a.dim, a.xs[slot])? != b.xs[slot] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A(φ)(x₁⋯x_k) in A(n).
pub fn monoid_eval(a: &TBSpaceMonoid, e: &CoendElement) -> Result<usize> {
    let mut acc = a.unit_simplex(e.dim);
    let mut level = 0;
    for (&m, &x) in e.splits.iter().zip(&e.xs) {
        acc = a.mult(level, m, e.dim, acc, x)?;
        level += m;
    }
    a.space.act(&e.phi, e.dim, acc)
}

/// A random element with `arity` factors at target level `n`.
pub fn random_element(a: &TBSpace, arity: usize, n: usize, dim: usize, word_len: usize, rng: &mut Rng) -> CoendElement {
    let total = rng.gen_range(0..=n);
    let mut splits = vec![0; arity];
    if arity > 0 {
        for _ in 0..total {
            splits[rng.gen_range(0..arity)] += 1;
        }
    }
    let total: usize = splits.iter().sum();
    let phi = random::braided_injection(rng, total, n, word_len);
    let xs = splits.iter().map(|&m| rng.gen_range(0..a.levels[m].count(dim))).collect();
    CoendElement { splits, phi, xs, dim }
}

/// A random instance of the defining relation at level ≤ n_max.
pub fn random_relation(a: &TBSpace, arity: usize, dim: usize, word_len: usize, rng: &mut Rng) -> Result<(CoendElement, CoendElement)> {
    let n = rng.gen_range(0..=a.n_max);
    let target = random_element(a, arity, n, dim, word_len, rng);
    let mut alphas = Vec::with_capacity(arity);
    let mut xs = Vec::with_capacity(arity);
    for &m2 in &target.splits {
        let m1 = rng.gen_range(0..=m2);
        alphas.push(random::braided_injection(rng, m1, m2, word_len));
        xs.push(rng.gen_range(0..a.levels[m1].count(dim)));
    }
    CoendElement::relation_pair(&target.phi, &alphas, &xs, dim, &[a])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binj::zeta_gen;
    use crate::bspace::fixtures::{FreeOneModel, PhiNerveModel, XBulletModel};
    use crate::bspace::space::{materialize, materialize_monoid};
    use crate::fincat::TableCat;
    use crate::rng;

    #[test]
    fn free_square_is_infinite() {
        let (f1, _) = materialize(&FreeOneModel { n_max: 2, dim: 0 }).unwrap();
        let sq = zeta_gen(1, 2, true).unwrap();
        let sq = compose(&sq, &sq).unwrap();
        let e1 = CoendElement::pair(1, 1, BraidedInjection::identity(2), 0, 0, 0).unwrap();
        let e2 = CoendElement::pair(1, 1, sq, 0, 0, 0).unwrap();
        assert!(box_equal(&e1, &e1, &[&f1], 8).unwrap());
        assert!(!box_equal(&e1, &e2, &[&f1], 8).unwrap());
    }

    #[test]
    fn relation_instances_are_equal_and_evaluate_equally() {
        let a = materialize_monoid(&XBulletModel::s0(3, 1)).unwrap();
        let mut g = rng(11);
        for _ in 0..300 {
            let arity = g.gen_range(1..=3);
            let (l, r) = random_relation(&a.space, arity, g.gen_range(0..=1), 4, &mut g).unwrap();
            assert!(box_equal(&l, &r, &[&a.space], SATURATION_STEPS).unwrap(), "{l:?} vs {r:?}");
            assert!(box_equal(&r, &l, &[&a.space], SATURATION_STEPS).unwrap());
            assert_eq!(monoid_eval(&a, &l).unwrap(), monoid_eval(&a, &r).unwrap());
            let c = canonicalize(&l, &[&a.space]).unwrap();
            assert!(box_equal(&c, &r, &[&a.space], SATURATION_STEPS).unwrap());
            assert_eq!(monoid_eval(&a, &c).unwrap(), monoid_eval(&a, &l).unwrap());
        }
    }

    #[test]
    fn phi_nerve_eval_is_concatenate_then_reindex() {
        let model = PhiNerveModel::new(TableCat::z2(), 3, 1);
        let (space, keys) = materialize(&model).unwrap();
        let a = materialize_monoid(&model).unwrap();
        let label = |n: usize, s: usize| -> crate::bspace::NChain<usize, usize> {
            keys[n][0].iter().find(|(_, &i)| i == s).map(|(k, _)| k.clone()).unwrap()
        };
        let mut g = rng(2);
        for _ in 0..100 {
            let e = random_element(&space, 2, 3, 0, 4, &mut g);
            let got = label(e.level(), monoid_eval(&a, &e).unwrap());
            let (crate::bspace::NChain::Vertex(x), crate::bspace::NChain::Vertex(y)) = (label(e.splits[0], e.xs[0]), label(e.splits[1], e.xs[1]))
            else {
                unreachable!()
            };
            let u = crate::fincat::BraidedMonCat::unit(&model.phi.cat);
            let bar = crate::binj::pi(&e.phi);
            let mut want = vec![u; e.level()];
            for (i, o) in x.iter().chain(&y).enumerate() {
                want[bar.apply(i + 1) - 1] = *o;
            }
            assert_eq!(got, crate::bspace::NChain::Vertex(want));
        }
    }
}
