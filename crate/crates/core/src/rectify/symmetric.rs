//! Φ over ℐ for permutative categories: the same formulas with injections
//! in place of braided injections and the symmetry in place of the braid
//! action.

use rand::seq::SliceRandom;
use rand::Rng as _;

use super::{Phi, PhiMor};
use crate::binj::{decompose_injection, pi, random, relation_instances, Gen, Injection};
use crate::braid::{chi, Permutation};
use crate::error::{dim_err, Error, Result};
use crate::fincat::{perm_action, BCategory, BraidedMonCat};
use crate::report::CheckReport;
use crate::Rng;

/// Φ(𝒜) as an ℐ-category monoid; only built for symmetric 𝒜.
#[derive(Debug, Clone)]
pub struct PhiSym<A> {
    pub inner: Phi<A>,
}

/// Rejects 𝒜 unless c_{b,a}∘c_{a,b} = id on all enumerated objects.
pub fn phi_symmetric<A: BraidedMonCat>(cat: A, max_level: usize) -> Result<PhiSym<A>> {
    if !crate::fincat::fixtures::is_symmetric(&cat) {
        return Err(Error::Rejected(format!("{} is not symmetric", cat.name())));
    }
    Ok(PhiSym { inner: Phi::new(cat, max_level) })
}

fn sigma_gen(i: usize, n: usize) -> Injection {
    Injection::from_permutation(&Permutation::transposition(n, i))
}

impl<A: BraidedMonCat> PhiSym<A> {
    pub fn cat(&self) -> &A {
        &self.inner.cat
    }

    pub fn act_obj(&self, f: &Injection, a: &[A::Obj]) -> Result<Vec<A::Obj>> {
        if f.source() != a.len() {
            return dim_err(format!("{}-tuple acted on by an injection from {}", a.len(), f.source()));
        }
        let mut out = vec![self.cat().unit(); f.n];
        for (i, x) in a.iter().enumerate() {
            out[f.apply(i + 1) - 1] = x.clone();
        }
        Ok(out)
    }

    /// σ_*∘g∘σ_*⁻¹ for f = μ∘σ.
    pub fn act_mor(&self, f: &Injection, g: &PhiMor<A::Obj, A::Mor>) -> Result<PhiMor<A::Obj, A::Mor>> {
        let (_, sigma) = decompose_injection(f);
        let cat = self.cat();
        let sa = perm_action(cat, &g.src, &sigma)?;
        let sb = perm_action(cat, &g.tgt, &sigma)?;
        let sa_inv = cat.inverse(&sa).ok_or_else(|| Error::Invalid("symmetry not invertible".into()))?;
        let h = cat.compose(&sb, &cat.compose(&g.f, &sa_inv)?)?;
        Ok(PhiMor { src: self.act_obj(f, &g.src)?, tgt: self.act_obj(f, &g.tgt)?, f: h })
    }

    fn word_obj(&self, w: &[Injection], a: &[A::Obj]) -> Result<Vec<A::Obj>> {
        w.iter().try_fold(a.to_vec(), |acc, f| self.act_obj(f, &acc))
    }

    fn word_mor(&self, w: &[Injection], g: &PhiMor<A::Obj, A::Mor>) -> Result<PhiMor<A::Obj, A::Mor>> {
        w.iter().try_fold(g.clone(), |acc, f| self.act_mor(f, &acc))
    }

    /// The presentation of ℐ: the 𝔅 relations pushed along Π together with
    /// σ^iσ^i = id, on all tuples and `mor_samples` morphisms per instance.
    pub fn check_relations(&self, n_max: usize, mor_samples: usize, rng: &mut Rng) -> CheckReport {
        let mut r = CheckReport::new(format!("I-relations {} n<={n_max}", self.cat().name()));
        let to_inj = |w: &[Gen]| -> Vec<Injection> { w.iter().map(|g| pi(&g.morphism().expect("valid generator"))).collect() };
        let mut instances: Vec<(String, usize, Vec<Injection>, Vec<Injection>)> = relation_instances(n_max)
            .into_iter()
            .map(|i| (i.key(), i.source(), to_inj(&i.lhs), to_inj(&i.rhs)))
            .collect();
        for n in 2..=n_max {
            for i in 1..n {
                instances.push((format!("square: s{i}@{n} s{i}@{n} = id"), n, vec![sigma_gen(i, n), sigma_gen(i, n)], vec![]));
            }
        }
        for (key, n, lhs, rhs) in instances {
            let tuples = self.inner.tuples(n);
            for a in &tuples {
                let l = self.word_obj(&lhs, a);
                let rr = self.word_obj(&rhs, a);
                r.record(l.is_ok() && l.as_ref().ok() == rr.as_ref().ok(), || format!("{key} on {a:?}"), || format!("{l:?} vs {rr:?}"));
            }
            for _ in 0..mor_samples {
                let Some(a) = tuples.choose(rng) else { break };
                let g = self.inner.random_mor_from(a, rng);
                let l = self.word_mor(&lhs, &g);
                let rr = self.word_mor(&rhs, &g);
                r.record(l.is_ok() && l.as_ref().ok() == rr.as_ref().ok(), || format!("{key} on {g:?}"), || format!("{l:?} vs {rr:?}"));
            }
        }
        r
    }

    /// Φ(χ_{m,n})(p⊗q) = q⊗p with χ the block transposition in Σ_{m+n}.
    pub fn check_commutative(&self, bound: usize, mor_samples: usize, rng: &mut Rng) -> CheckReport {
        let mut r = CheckReport::new(format!("I-commutativity {}", self.cat().name()));
        for m in 0..=bound {
            for n in 0..=bound {
                let chi_i = Injection::from_permutation(&chi(m, n).underlying_permutation());
                let ps = self.inner.tuples(m);
                let qs = self.inner.tuples(n);
                for p in &ps {
                    for q in &qs {
                        let pq: Vec<A::Obj> = p.iter().chain(q).cloned().collect();
                        let qp: Vec<A::Obj> = q.iter().chain(p).cloned().collect();
                        let l = self.act_obj(&chi_i, &pq);
                        r.record(l.as_ref().ok() == Some(&qp), || format!("objects chi({m},{n}) {p:?} {q:?}"), || format!("{l:?}"));
                    }
                }
                for _ in 0..mor_samples {
                    let (Some(p), Some(q)) = (ps.choose(rng), qs.choose(rng)) else { continue };
                    let f = self.inner.random_mor_from(p, rng);
                    let g = self.inner.random_mor_from(q, rng);
                    let l = crate::fincat::BCategoryMonoid::tensor_mor(&self.inner, &f, &g).and_then(|fg| self.act_mor(&chi_i, &fg));
                    let rr = crate::fincat::BCategoryMonoid::tensor_mor(&self.inner, &g, &f);
                    r.record(
                        l.is_ok() && l.as_ref().ok() == rr.as_ref().ok(),
                        || format!("morphisms chi({m},{n}) {f:?} {g:?}"),
                        || format!("{l:?} vs {rr:?}"),
                    );
                }
            }
        }
        r
    }

    /// Pulling back along Π: Φ_ℐ(Π α) = Φ_𝔅(α) on random α, objects and
    /// morphisms.
    pub fn check_pullback_agrees(&self, word_len: usize, samples: usize, rng: &mut Rng) -> CheckReport {
        let mut r = CheckReport::new(format!("pullback along Pi {}", self.cat().name()));
        let max = self.inner.max_level;
        for s in 0..samples {
            let m = rng.gen_range(0..=max);
            let n = rng.gen_range(m..=max);
            let alpha = random::braided_injection(rng, m, n, word_len);
            let a = self.inner.random_tuple(m, rng);
            let g = self.inner.random_mor_from(&a, rng);
            let bar = pi(&alpha);
            let lo = self.act_obj(&bar, &a);
            let ro = self.inner.act_obj(&alpha, &a);
            r.record(lo.is_ok() && lo.as_ref().ok() == ro.as_ref().ok(), || format!("object #{s} {alpha} {a:?}"), || format!("{lo:?} vs {ro:?}"));
            let lm = self.act_mor(&bar, &g);
            let rm = self.inner.act_mor(&alpha, &g);
            r.record(lm.is_ok() && lm.as_ref().ok() == rm.as_ref().ok(), || format!("morphism #{s} {alpha} {g:?}"), || format!("{lm:?} vs {rm:?}"));
        }
        r
    }

    /// Functoriality in ℐ on random composable injections.
    pub fn check_functorial(&self, samples: usize, rng: &mut Rng) -> CheckReport {
        let mut r = CheckReport::new(format!("I-functoriality {}", self.cat().name()));
        let max = self.inner.max_level;
        for s in 0..samples {
            let m = rng.gen_range(0..=max);
            let n = rng.gen_range(m..=max);
            let p = rng.gen_range(n..=max);
            let f = random::injection(rng, m, n);
            let g = random::injection(rng, n, p);
            let gf = g.after(&f).expect("composable");
            let a = self.inner.random_tuple(m, rng);
            let h = self.inner.random_mor_from(&a, rng);
            let l = self.act_mor(&gf, &h);
            let rr = self.act_mor(&f, &h).and_then(|x| self.act_mor(&g, &x));
            r.record(l.is_ok() && l.as_ref().ok() == rr.as_ref().ok(), || format!("#{s} {f:?} {g:?} {h:?}"), || format!("{l:?} vs {rr:?}"));
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{BraidGroupoid, FinSetBij, TableCat};
    use crate::rng;

    #[test]
    fn rejects_non_symmetric() {
        assert!(phi_symmetric(BraidGroupoid::new(2, 3), 2).is_err());
        assert!(phi_symmetric(TableCat::z2(), 2).is_ok());
    }

    #[test]
    fn symmetric_checks_pass() {
        let mut g = rng(6);
        for ps in [phi_symmetric(TableCat::z2(), 3).unwrap()] {
            for rep in [ps.check_relations(3, 3, &mut g), ps.check_commutative(3, 5, &mut g), ps.check_pullback_agrees(5, 100, &mut g)] {
                assert!(rep.passed(), "{}: {:?}", rep.name, &rep.failures[..rep.failures.len().min(3)]);
            }
        }
        let fs = phi_symmetric(FinSetBij::new(2), 3).unwrap();
        for rep in [
            fs.check_relations(3, 3, &mut g),
            fs.check_commutative(2, 5, &mut g),
            fs.check_pullback_agrees(5, 100, &mut g),
            fs.check_functorial(100, &mut g),
        ] {
            assert!(rep.passed(), "{}: {:?}", rep.name, &rep.failures[..rep.failures.len().min(3)]);
        }
    }
}
