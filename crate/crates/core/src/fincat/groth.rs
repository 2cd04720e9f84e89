//! 𝔅-categories given by oracles and their Grothendieck construction 𝔅∫X
//! with the induced braided strict monoidal structure.

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng as _;

use super::monoidal::BraidedMonCat;
use crate::binj::{self, chi_morphism, random, BraidedInjection};
use crate::error::{dim_err, Error, Result};
use crate::Rng;

/// A functor 𝔅 → Cat. Objects know their level.
pub trait BCategory {
    type Obj: Clone + Eq + Hash + Debug;
    type Mor: Clone + Eq + Hash + Debug;

    fn name(&self) -> String;
    fn level(&self, x: &Self::Obj) -> usize;
    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// g∘f inside one level.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;
    fn act_obj(&self, alpha: &BraidedInjection, x: &Self::Obj) -> Result<Self::Obj>;
    fn act_mor(&self, alpha: &BraidedInjection, f: &Self::Mor) -> Result<Self::Mor>;
    /// The (truncated) objects of level n.
    fn objects(&self, n: usize) -> Vec<Self::Obj>;
    fn hom_sample(&self, x: &Self::Obj, y: &Self::Obj, rng: &mut Rng, count: usize) -> Vec<Self::Mor>;
}

/// A 𝔅-category monoid with a braiding Θ_{m,n}: a⊗b → X(χ_{m,n}⁻¹)(b⊗a).
pub trait BCategoryMonoid: BCategory {
    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn theta(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrothObject<O> {
    pub n: usize,
    pub x: O,
}

/// (α, s): (m, x) → (n, y) with s: X(α)(x) → y.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrothMorphism<O, M> {
    pub source: GrothObject<O>,
    pub target: GrothObject<O>,
    pub alpha: BraidedInjection,
    pub s: M,
}

/// 𝔅∫X, truncated to levels ≤ `max_level` for enumeration; sampled 𝔅-parts
/// have braid words of length ≤ `word_len`.
#[derive(Debug, Clone)]
pub struct Groth<X> {
    pub x: X,
    pub max_level: usize,
    pub word_len: usize,
}

impl<X: BCategory> Groth<X> {
    pub fn new(x: X, max_level: usize, word_len: usize) -> Self {
        Groth { x, max_level, word_len }
    }

    pub fn object(&self, x: X::Obj) -> GrothObject<X::Obj> {
        GrothObject { n: self.x.level(&x), x }
    }

    /// Builds (α, s) after checking that s: X(α)(x) → y.
    pub fn morphism(&self, source: GrothObject<X::Obj>, alpha: BraidedInjection, s: X::Mor) -> Result<GrothMorphism<X::Obj, X::Mor>> {
        if alpha.source() != source.n {
            return dim_err(format!("alpha has source {} but object has level {}", alpha.source(), source.n));
        }
        let pushed = self.x.act_obj(&alpha, &source.x)?;
        if self.x.source(&s) != pushed {
            return Err(Error::Invalid(format!("s starts at {:?}, expected X(alpha)(x) = {pushed:?}", self.x.source(&s))));
        }
        let target = self.object(self.x.target(&s));
        Ok(GrothMorphism { source, target, alpha, s })
    }

    /// (β,t)∘(α,s) = (β∘α, t∘X(β)(s)).
    pub fn compose(&self, g: &GrothMorphism<X::Obj, X::Mor>, f: &GrothMorphism<X::Obj, X::Mor>) -> Result<GrothMorphism<X::Obj, X::Mor>> {
        if f.target != g.source {
            return Err(Error::Invalid(format!("target {:?} differs from source {:?}", f.target, g.source)));
        }
        let alpha = binj::compose(&g.alpha, &f.alpha)?;
        let s = self.x.compose(&g.s, &self.x.act_mor(&g.alpha, &f.s)?)?;
        Ok(GrothMorphism { source: f.source.clone(), target: g.target.clone(), alpha, s })
    }
}

impl<X: BCategoryMonoid> BraidedMonCat for Groth<X> {
    type Obj = GrothObject<X::Obj>;
    type Mor = GrothMorphism<X::Obj, X::Mor>;

    fn name(&self) -> String {
        format!("B-groth({})", self.x.name())
    }
    fn unit(&self) -> Self::Obj {
        GrothObject { n: 0, x: self.x.unit() }
    }
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        GrothObject { n: a.n + b.n, x: self.x.tensor_obj(&a.x, &b.x) }
    }
    fn source(&self, f: &Self::Mor) -> Self::Obj {
        f.source.clone()
    }
    fn target(&self, f: &Self::Mor) -> Self::Obj {
        f.target.clone()
    }
    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        GrothMorphism { source: a.clone(), target: a.clone(), alpha: BraidedInjection::identity(a.n), s: self.x.identity(&a.x) }
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        Groth::compose(self, g, f)
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok(GrothMorphism {
            source: self.tensor_obj(&f.source, &g.source),
            target: self.tensor_obj(&f.target, &g.target),
            alpha: binj::tensor(&f.alpha, &g.alpha),
            s: self.x.tensor_mor(&f.s, &g.s)?,
        })
    }
    /// (χ_{m,n}, X(χ_{m,n})(Θ_{m,n})).
    fn braiding(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        let chi = chi_morphism(a.n, b.n);
        let theta = self.x.theta(&a.x, &b.x);
        let s = self.x.act_mor(&chi, &theta).expect("X(chi) applies to Theta");
        GrothMorphism { source: self.tensor_obj(a, b), target: self.tensor_obj(b, a), alpha: chi, s }
    }
    /// (α⁻¹, X(α⁻¹)(s)⁻¹) when α is a braid and s is invertible.
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        let ai = f.alpha.inverse().ok()?;
        let s = self.x.inverse(&self.x.act_mor(&ai, &f.s).ok()?)?;
        Some(GrothMorphism { source: f.target.clone(), target: f.source.clone(), alpha: ai, s })
    }
    fn objects(&self) -> Vec<Self::Obj> {
        (0..=self.max_level).flat_map(|n| self.x.objects(n).into_iter().map(move |x| GrothObject { n, x })).collect()
    }
    fn hom_sample(&self, a: &Self::Obj, b: &Self::Obj, rng: &mut Rng, count: usize) -> Vec<Self::Mor> {
        if a.n > b.n {
            return Vec::new();
        }
        let mut out = Vec::new();
        for _ in 0..count * 4 {
            if out.len() == count {
                break;
            }
            let alpha = random::braided_injection(rng, a.n, b.n, self.word_len);
            let Ok(pushed) = self.x.act_obj(&alpha, &a.x) else { continue };
            let ss = self.x.hom_sample(&pushed, &b.x, rng, 1);
            if let Some(s) = ss.into_iter().next() {
                out.push(GrothMorphism { source: a.clone(), target: b.clone(), alpha, s });
            }
        }
        out
    }
}

/// The constant 𝔅-category on a braided strict monoidal category, with
/// Θ = c. Its Grothendieck construction is 𝔅 × 𝒜.
#[derive(Debug, Clone)]
pub struct ConstantB<A> {
    pub cat: A,
    pub max_level: usize,
}

impl<A: BraidedMonCat> BCategory for ConstantB<A> {
    type Obj = (usize, A::Obj);
    type Mor = (usize, A::Mor);

    fn name(&self) -> String {
        format!("const({})", self.cat.name())
    }
    fn level(&self, x: &Self::Obj) -> usize {
        x.0
    }
    fn source(&self, f: &Self::Mor) -> Self::Obj {
        (f.0, self.cat.source(&f.1))
    }
    fn target(&self, f: &Self::Mor) -> Self::Obj {
        (f.0, self.cat.target(&f.1))
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        (x.0, self.cat.identity(&x.1))
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        if g.0 != f.0 {
            return dim_err("levels differ");
        }
        Ok((f.0, self.cat.compose(&g.1, &f.1)?))
    }
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        Some((f.0, self.cat.inverse(&f.1)?))
    }
    fn act_obj(&self, alpha: &BraidedInjection, x: &Self::Obj) -> Result<Self::Obj> {
        if alpha.source() != x.0 {
            return dim_err("level mismatch");
        }
        Ok((alpha.target(), x.1.clone()))
    }
    fn act_mor(&self, alpha: &BraidedInjection, f: &Self::Mor) -> Result<Self::Mor> {
        if alpha.source() != f.0 {
            return dim_err("level mismatch");
        }
        Ok((alpha.target(), f.1.clone()))
    }
    fn objects(&self, n: usize) -> Vec<Self::Obj> {
        self.cat.objects().into_iter().map(|a| (n, a)).collect()
    }
    fn hom_sample(&self, x: &Self::Obj, y: &Self::Obj, rng: &mut Rng, count: usize) -> Vec<Self::Mor> {
        if x.0 != y.0 {
            return Vec::new();
        }
        self.cat.hom_sample(&x.1, &y.1, rng, count).into_iter().map(|f| (x.0, f)).collect()
    }
}

impl<A: BraidedMonCat> BCategoryMonoid for ConstantB<A> {
    fn unit(&self) -> Self::Obj {
        (0, self.cat.unit())
    }
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        (a.0 + b.0, self.cat.tensor_obj(&a.1, &b.1))
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok((f.0 + g.0, self.cat.tensor_mor(&f.1, &g.1)?))
    }
    fn theta(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        (a.0 + b.0, self.cat.braiding(&a.1, &b.1))
    }
}

/// A random composable chain through `Groth`, used by samplers downstream.
pub fn random_object<X: BCategory>(g: &Groth<X>, rng: &mut Rng) -> Option<GrothObject<X::Obj>> {
    let n = rng.gen_range(0..=g.max_level);
    let objs = g.x.objects(n);
    if objs.is_empty() {
        return None;
    }
    Some(GrothObject { n, x: objs[rng.gen_range(0..objs.len())].clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::monoidal::check_braided_monoidal;
    use crate::fincat::{BraidGroupoid, TableCat};
    use crate::rng;

    #[test]
    fn constant_groth_is_product() {
        let g = Groth::new(ConstantB { cat: TableCat::z2(), max_level: 2 }, 2, 3);
        let mut r = rng(2);
        let rep = check_braided_monoidal(&g, 100, &mut r);
        assert!(rep.passed(), "{:?}", rep.failures);
        // composition is componentwise
        let a = g.object((1, 1));
        let f = g.hom_sample(&a, &g.object((2, 1)), &mut r, 1).pop().unwrap();
        let h = g.hom_sample(&f.target, &g.object((2, 1)), &mut r, 1).pop().unwrap();
        let c = g.compose(&h, &f).unwrap();
        assert_eq!(c.alpha, binj::compose(&h.alpha, &f.alpha).unwrap());
        assert_eq!(c.s.1, 1);
    }

    #[test]
    fn constant_braid_groupoid_groth() {
        let g = Groth::new(ConstantB { cat: BraidGroupoid::new(2, 3), max_level: 2 }, 2, 3);
        let rep = check_braided_monoidal(&g, 60, &mut rng(5));
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn morphism_checks_typing() {
        let g = Groth::new(ConstantB { cat: TableCat::z2(), max_level: 2 }, 2, 3);
        let src = g.object((1, 0));
        let alpha = binj::partial_gen(1, 1).unwrap();
        assert!(g.morphism(src.clone(), alpha.clone(), (2, 0)).is_ok());
        assert!(g.morphism(src, alpha, (2, 1)).is_err());
    }
}
