//! The bar construction B_k = A^{⊠k} on a monoid A with unit U on both
//! sides, and its product for commutative A.

use rand::Rng as _;

use super::coend::{box_equal, random_element, CoendElement, SATURATION_STEPS};
use super::space::{check_commutative_monoid, TBSpaceMonoid};
use crate::binj::{chi_morphism, compose, tensor, upsilon, BraidedInjection, OrderInj};
use crate::error::{dim_err, Error, Result};
use crate::report::CheckReport;
use crate::Rng;

/// d_i: B_k → B_{k-1}. Outer faces send the end factor to U, i.e. restrict
/// the witness to the remaining blocks; inner faces multiply neighbours.
pub fn bar_face(a: &TBSpaceMonoid, e: &CoendElement, i: usize) -> Result<CoendElement> {
    let k = e.arity();
    if k == 0 || i > k {
        return dim_err(format!("face d{i} of a {k}-fold element"));
    }
    let total = e.phi.source();
    let mut out = e.clone();
    if i == 0 || i == k {
        let slot = if i == 0 { 0 } else { k - 1 };
        let m = e.splits[slot];
        let offset = if i == 0 { m } else { 0 };
        let incl = upsilon(&OrderInj::block(total - m, offset, total)?);
        out.phi = compose(&e.phi, &incl)?;
        out.splits.remove(slot);
        out.xs.remove(slot);
    } else {
        let (m, n) = (e.splits[i - 1], e.splits[i]);
        let p = a.mult(m, n, e.dim, e.xs[i - 1], e.xs[i])?;
        out.splits.splice(i - 1..=i, [m + n]);
        out.xs.splice(i - 1..=i, [p]);
    }
    Ok(out)
}

/// s_i: B_k → B_{k+1}, inserting the unit at position i.
pub fn bar_degeneracy(a: &TBSpaceMonoid, e: &CoendElement, i: usize) -> Result<CoendElement> {
    if i > e.arity() {
        return dim_err(format!("degeneracy s{i} of a {}-fold element", e.arity()));
    }
    let mut out = e.clone();
    out.splits.insert(i, 0);
    out.xs.insert(i, a.unit_simplex(e.dim));
    Ok(out)
}

/// Swaps factors i and i+1 with the braiding (θ, x, y) ↦ (θ∘χ⁻¹, y, x).
fn swap_adjacent(e: &CoendElement, i: usize) -> Result<CoendElement> {
    let (m, n) = (e.splits[i], e.splits[i + 1]);
    let pre: usize = e.splits[..i].iter().sum();
    let post: usize = e.splits[i + 2..].iter().sum();
    let chi_inv = chi_morphism(m, n).inverse()?;
    let mid = tensor(&tensor(&BraidedInjection::identity(pre), &chi_inv), &BraidedInjection::identity(post));
    let mut out = e.clone();
    out.phi = compose(&e.phi, &mid)?;
    out.splits.swap(i, i + 1);
    out.xs.swap(i, i + 1);
    Ok(out)
}

/// (x₁…x_k)·(y₁…y_k) = (x₁y₁, …, x_ky_k) after shuffling with the braiding.
/// Rejects A unless it passes the commutativity check.
pub fn bar_multiply(a: &TBSpaceMonoid, e: &CoendElement, f: &CoendElement) -> Result<CoendElement> {
    if !check_commutative_monoid(a).passed() {
        return Err(Error::Rejected(format!("{} is not a commutative monoid", a.space.name)));
    }
    bar_multiply_unchecked(a, e, f)
}

pub(crate) fn bar_multiply_unchecked(a: &TBSpaceMonoid, e: &CoendElement, f: &CoendElement) -> Result<CoendElement> {
    let k = e.arity();
    if f.arity() != k || e.dim != f.dim {
        return dim_err(format!("bar elements of degrees {k} and {} (dims {}, {})", f.arity(), e.dim, f.dim));
    }
    let mut cur = CoendElement::new(
        e.splits.iter().chain(&f.splits).copied().collect(),
        tensor(&e.phi, &f.phi),
        e.xs.iter().chain(&f.xs).copied().collect(),
        e.dim,
    )?;
    // move y_j from position k+j-1 down to 2j-1 (0-based)
    for j in 0..k {
        let mut pos = k + j;
        while pos > 2 * j + 1 {
            cur = swap_adjacent(&cur, pos - 1)?;
            pos -= 1;
        }
    }
    for j in 0..k {
        cur = bar_face(a, &cur, j + 1)?;
    }
    Ok(cur)
}

fn same(a: &TBSpaceMonoid, x: &Result<CoendElement>, y: &Result<CoendElement>) -> bool {
    match (x, y) {
        (Ok(x), Ok(y)) => box_equal(x, y, &[&a.space], SATURATION_STEPS).unwrap_or(false),
        _ => false,
    }
}

/// The five families of simplicial identities on `samples` random elements
/// of B_k for 1 ≤ k ≤ k_max at levels ≤ A's truncation.
pub fn check_bar_simplicial(a: &TBSpaceMonoid, k_max: usize, samples: usize, word_len: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("bar simplicial identities {}", a.space.name));
    let d = a.space.dim();
    for s in 0..samples {
        let k = rng.gen_range(1..=k_max);
        let n = rng.gen_range(0..=a.n_max());
        let e = random_element(&a.space, k, n, rng.gen_range(0..=d), word_len, rng);
        if k >= 2 {
            for j in 1..=k {
                for i in 0..j {
                    let l = bar_face(a, &e, j).and_then(|x| bar_face(a, &x, i));
                    let rr = bar_face(a, &e, i).and_then(|x| bar_face(a, &x, j - 1));
                    r.record(same(a, &l, &rr), || format!("#{s} d{i}d{j} on {e:?}"), || format!("{l:?} vs {rr:?}"));
                }
            }
        }
        for j in 0..=k {
            let t = bar_degeneracy(a, &e, j);
            for i in 0..=k + 1 {
                let l = t.as_ref().map_err(Clone::clone).and_then(|t| bar_face(a, t, i));
                let rr = if i == j || i == j + 1 {
                    Ok(e.clone())
                } else if i < j {
                    bar_face(a, &e, i).and_then(|x| bar_degeneracy(a, &x, j - 1))
                } else {
                    bar_face(a, &e, i - 1).and_then(|x| bar_degeneracy(a, &x, j))
                };
                r.record(same(a, &l, &rr), || format!("#{s} d{i}s{j} on {e:?}"), || format!("{l:?} vs {rr:?}"));
            }
            for i in 0..=j {
                let l = t.as_ref().map_err(Clone::clone).and_then(|t| bar_degeneracy(a, t, i));
                let rr = bar_degeneracy(a, &e, i).and_then(|x| bar_degeneracy(a, &x, j + 1));
                r.record(same(a, &l, &rr), || format!("#{s} s{i}s{j} on {e:?}"), || format!("{l:?} vs {rr:?}"));
            }
        }
    }
    r
}

/// Random relation applications: both representatives must be box-equal
/// and evaluate to the same simplex.
pub fn check_eval_independent(a: &TBSpaceMonoid, samples: usize, word_len: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("monoid_eval representative independence {}", a.space.name));
    for s in 0..samples {
        let arity = rng.gen_range(1..=3);
        let dim = rng.gen_range(0..=a.space.dim());
        let (l, rr) = match super::coend::random_relation(&a.space, arity, dim, word_len, rng) {
            Ok(p) => p,
            Err(e) => {
                r.fail(format!("#{s}"), e.to_string());
                continue;
            }
        };
        let eq = box_equal(&l, &rr, &[&a.space], SATURATION_STEPS).unwrap_or(false);
        let vl = super::coend::monoid_eval(a, &l);
        let vr = super::coend::monoid_eval(a, &rr);
        r.record(eq && vl.is_ok() && vl.ok() == vr.ok(), || format!("#{s} {l:?} ~ {rr:?}"), || format!("equal={eq}"));
    }
    r
}

/// d_i(ef) = d_i(e)d_i(f), s_i(ef) = s_i(e)s_i(f) and associativity on
/// random pairs and triples with total level ≤ N.
pub fn check_bar_multiply(a: &TBSpaceMonoid, k_max: usize, samples: usize, word_len: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("bar multiplication {}", a.space.name));
    if !check_commutative_monoid(a).passed() {
        r.fail("commutativity", format!("{} is not commutative", a.space.name));
        return r;
    }
    let nm = a.n_max();
    let d = a.space.dim();
    for s in 0..samples {
        let k = rng.gen_range(0..=k_max);
        let dim = rng.gen_range(0..=d);
        let n1 = rng.gen_range(0..=nm);
        let n2 = rng.gen_range(0..=nm - n1);
        let e = random_element(&a.space, k, n1, dim, word_len, rng);
        let f = random_element(&a.space, k, n2, dim, word_len, rng);
        let ef = bar_multiply_unchecked(a, &e, &f);
        if k >= 1 {
            for i in 0..=k {
                let l = ef.as_ref().map_err(Clone::clone).and_then(|x| bar_face(a, x, i));
                let rr = bar_face(a, &e, i).and_then(|x| bar_face(a, &f, i).and_then(|y| bar_multiply_unchecked(a, &x, &y)));
                r.record(same(a, &l, &rr), || format!("#{s} d{i} on {e:?} * {f:?}"), || format!("{l:?} vs {rr:?}"));
            }
        }
        for i in 0..=k {
            let l = ef.as_ref().map_err(Clone::clone).and_then(|x| bar_degeneracy(a, x, i));
            let rr = bar_degeneracy(a, &e, i).and_then(|x| bar_degeneracy(a, &f, i).and_then(|y| bar_multiply_unchecked(a, &x, &y)));
            r.record(same(a, &l, &rr), || format!("#{s} s{i} on {e:?} * {f:?}"), || format!("{l:?} vs {rr:?}"));
        }
        let n3 = rng.gen_range(0..=nm - n1 - n2);
        let g = random_element(&a.space, k, n3, dim, word_len, rng);
        let l = ef.and_then(|x| bar_multiply_unchecked(a, &x, &g));
        let rr = bar_multiply_unchecked(a, &f, &g).and_then(|y| bar_multiply_unchecked(a, &e, &y));
        r.record(same(a, &l, &rr), || format!("#{s} associativity on {e:?} {f:?} {g:?}"), || format!("{l:?} vs {rr:?}"));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bspace::fixtures::XBulletModel;
    use crate::bspace::space::materialize_monoid;
    use crate::rng;

    fn ok(r: CheckReport) {
        assert!(r.passed(), "{}: {} failures, first {:?}", r.name, r.failures.len(), r.failures.first());
    }

    #[test]
    fn bar_on_xbullet() {
        let a = materialize_monoid(&XBulletModel::s0(3, 1)).unwrap();
        let mut g = rng(5);
        ok(check_bar_simplicial(&a, 3, 100, 4, &mut g));
        ok(check_eval_independent(&a, 200, 4, &mut g));
        ok(check_bar_multiply(&a, 3, 100, 4, &mut g));
    }

    #[test]
    fn equality_is_not_vacuous() {
        let a = materialize_monoid(&XBulletModel::s0(3, 1)).unwrap();
        let mut g = rng(9);
        let distinct = (0..50).any(|_| {
            let e = random_element(&a.space, 2, 3, 0, 3, &mut g);
            !same(&a, &bar_face(&a, &e, 0), &bar_face(&a, &e, 2))
        });
        assert!(distinct);
    }

    #[test]
    fn degree_one_faces_project_to_unit_data() {
        let a = materialize_monoid(&XBulletModel::s0(3, 1)).unwrap();
        let mut g = rng(1);
        let e = random_element(&a.space, 1, 2, 0, 3, &mut g);
        let d0 = bar_face(&a, &e, 0).unwrap();
        let d1 = bar_face(&a, &e, 1).unwrap();
        assert_eq!(d0.arity(), 0);
        assert!(box_equal(&d0, &d1, &[&a.space], 8).unwrap());
        let s = bar_degeneracy(&a, &e, 0).unwrap();
        assert_eq!(bar_face(&a, &s, 0).unwrap(), e);
    }

    #[test]
    fn degree_zero_product_is_the_witness_sum() {
        let a = materialize_monoid(&XBulletModel::s0(3, 1)).unwrap();
        let e = CoendElement::new(vec![], BraidedInjection::new(OrderInj::new(1, vec![]).unwrap(), crate::braid::GarsideNF::identity(0)).unwrap(), vec![], 0).unwrap();
        let p = bar_multiply(&a, &e, &e).unwrap();
        assert_eq!(p.level(), 2);
        assert_eq!(p.arity(), 0);
    }

    #[test]
    fn non_commutative_monoid_rejected() {
        let a = materialize_monoid(&NonCommutative).unwrap();
        assert!(bar_multiply(&a, &random_element(&a.space, 1, 1, 0, 2, &mut rng(0)), &random_element(&a.space, 1, 1, 0, 2, &mut rng(1))).is_err());
    }

    /// Words in {a, b} with trivial action; concatenation is not
    /// commutative up to the (trivial) χ-action.
    struct NonCommutative;

    impl crate::bspace::BSpaceModel for NonCommutative {
        type K = Vec<u8>;
        fn name(&self) -> String {
            "words".into()
        }
        fn n_max(&self) -> usize {
            2
        }
        fn dim(&self) -> usize {
            0
        }
        fn simplices(&self, level: usize, _: usize) -> crate::error::Result<Vec<Vec<u8>>> {
            Ok(match level {
                0 => vec![vec![]],
                1 => vec![vec![0], vec![1]],
                _ => vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]],
            })
        }
        fn face(&self, _: usize, _: usize, x: &Vec<u8>, _: usize) -> Vec<u8> {
            x.clone()
        }
        fn degen(&self, _: usize, _: usize, x: &Vec<u8>, _: usize) -> Vec<u8> {
            x.clone()
        }
        fn act(&self, g: crate::binj::Gen, _: usize, x: &Vec<u8>) -> Vec<u8> {
            match g {
                crate::binj::Gen::Partial { i, .. } => {
                    let mut v = x.clone();
                    v.insert(i - 1, 0);
                    v
                }
                _ => x.clone(),
            }
        }
        fn unit(&self) -> Option<Vec<u8>> {
            Some(vec![])
        }
        fn mult(&self, _: usize, x: &Vec<u8>, y: &Vec<u8>) -> Option<Vec<u8>> {
            Some([x.clone(), y.clone()].concat())
        }
    }
}
