//! Example 𝔅-spaces as models: constant, free on a point, X^•, the
//! level-wise nerve of Φ(𝒜), and a non-flat fixture.

use super::space::BSpaceModel;
use super::sset::TSSet;
use crate::binj::{compose, pi, BraidedInjection, Gen, OrderInj};
use crate::braid::GarsideNF;
use crate::error::{Error, Result};
use crate::fincat::{BCategory, BCategoryMonoid, BraidedMonCat};
use crate::rectify::{Phi, PhiMor};
use crate::Rng;

/// Δ(K): every level K, every morphism the identity. A point is the
/// terminal 𝔅-space and a monoid.
#[derive(Debug, Clone)]
pub struct ConstantModel {
    pub x: TSSet,
    pub n_max: usize,
}

impl ConstantModel {
    pub fn terminal(n_max: usize, dim: usize) -> Self {
        ConstantModel { x: TSSet::point(dim), n_max }
    }

    fn is_point(&self) -> bool {
        (0..=self.x.dim).all(|k| self.x.count(k) == 1)
    }
}

impl BSpaceModel for ConstantModel {
    type K = usize;
    fn name(&self) -> String {
        if self.is_point() {
            "U".into()
        } else {
            "constant".into()
        }
    }
    fn n_max(&self) -> usize {
        self.n_max
    }
    fn dim(&self) -> usize {
        self.x.dim
    }
    fn simplices(&self, _: usize, k: usize) -> Result<Vec<usize>> {
        Ok((0..self.x.count(k)).collect())
    }
    fn face(&self, _: usize, k: usize, x: &usize, i: usize) -> usize {
        self.x.face(k, *x, i)
    }
    fn degen(&self, _: usize, k: usize, x: &usize, i: usize) -> usize {
        self.x.degen(k, *x, i)
    }
    fn act(&self, _: Gen, _: usize, x: &usize) -> usize {
        *x
    }
    fn restrict(&self, _: usize, _: &[usize], _: usize, x: &usize) -> Option<usize> {
        Some(*x)
    }
    fn unit(&self) -> Option<usize> {
        self.is_point().then_some(0)
    }
    fn mult(&self, _: usize, _: &usize, _: &usize) -> Option<usize> {
        self.is_point().then_some(0)
    }
}

/// F₁(*) = 𝔅(1, −), acting by post-composition; discrete levels.
#[derive(Debug, Clone)]
pub struct FreeOneModel {
    pub n_max: usize,
    pub dim: usize,
}

impl BSpaceModel for FreeOneModel {
    type K = BraidedInjection;
    fn name(&self) -> String {
        "F1(*)".into()
    }
    fn n_max(&self) -> usize {
        self.n_max
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn simplices(&self, level: usize, _: usize) -> Result<Vec<BraidedInjection>> {
        (1..=level).map(|p| BraidedInjection::new(OrderInj::new(level, vec![p])?, GarsideNF::identity(1))).collect()
    }
    fn face(&self, _: usize, _: usize, x: &BraidedInjection, _: usize) -> BraidedInjection {
        x.clone()
    }
    fn degen(&self, _: usize, _: usize, x: &BraidedInjection, _: usize) -> BraidedInjection {
        x.clone()
    }
    fn act(&self, g: Gen, _: usize, x: &BraidedInjection) -> BraidedInjection {
        compose(&g.morphism().expect("valid generator"), x).expect("composable")
    }
}

/// X^•: level n is Xⁿ, α acting by x_{ᾱ⁻¹(j)} with the basepoint off the
/// image; concatenation makes it a commutative monoid.
#[derive(Debug, Clone)]
pub struct XBulletModel {
    pub x: TSSet,
    pub n_max: usize,
}

impl XBulletModel {
    pub fn new(x: TSSet, n_max: usize) -> Result<Self> {
        if x.base.is_none() {
            return Err(Error::Invalid("X^• needs a based simplicial set".into()));
        }
        Ok(XBulletModel { x, n_max })
    }

    /// S⁰ = {*, 1} with basepoint *.
    pub fn s0(n_max: usize, dim: usize) -> Self {
        XBulletModel { x: TSSet::discrete(dim, &["*", "1"]).with_base(0), n_max }
    }

    fn base(&self, k: usize) -> usize {
        self.x.base_simplex(k).expect("based")
    }
}

impl BSpaceModel for XBulletModel {
    type K = Vec<usize>;
    fn name(&self) -> String {
        "X-bullet".into()
    }
    fn n_max(&self) -> usize {
        self.n_max
    }
    fn dim(&self) -> usize {
        self.x.dim
    }
    fn simplices(&self, level: usize, k: usize) -> Result<Vec<Vec<usize>>> {
        let c = self.x.count(k);
        let mut out = vec![Vec::new()];
        for _ in 0..level {
            out = out.into_iter().flat_map(|v: Vec<usize>| (0..c).map(move |s| [v.clone(), vec![s]].concat())).collect();
        }
        Ok(out)
    }
    fn face(&self, _: usize, k: usize, x: &Vec<usize>, i: usize) -> Vec<usize> {
        x.iter().map(|&s| self.x.face(k, s, i)).collect()
    }
    fn degen(&self, _: usize, k: usize, x: &Vec<usize>, i: usize) -> Vec<usize> {
        x.iter().map(|&s| self.x.degen(k, s, i)).collect()
    }
    fn act(&self, g: Gen, k: usize, x: &Vec<usize>) -> Vec<usize> {
        let f = pi(&g.morphism().expect("valid generator"));
        let mut out = vec![self.base(k); g.target()];
        for (i, &s) in x.iter().enumerate() {
            out[f.apply(i + 1) - 1] = s;
        }
        out
    }
    fn restrict(&self, level: usize, keep: &[usize], k: usize, x: &Vec<usize>) -> Option<Vec<usize>> {
        let b = self.base(k);
        (1..=level).filter(|p| !keep.contains(p)).all(|p| x[p - 1] == b).then(|| keep.iter().map(|&p| x[p - 1]).collect())
    }
    fn unit(&self) -> Option<Vec<usize>> {
        Some(Vec::new())
    }
    fn mult(&self, _: usize, x: &Vec<usize>, y: &Vec<usize>) -> Option<Vec<usize>> {
        Some([x.clone(), y.clone()].concat())
    }
}

/// X(0) = {0}, X(n ≥ 1) = {0, 1}; ∂ out of level 0 hits 0, everything
/// else is the identity. Injective but the images of X(1) in X(2) along
/// both ends meet outside the image of X(0).
#[derive(Debug, Clone)]
pub struct NonFlatModel {
    pub n_max: usize,
    pub dim: usize,
}

impl BSpaceModel for NonFlatModel {
    type K = usize;
    fn name(&self) -> String {
        "non-flat".into()
    }
    fn n_max(&self) -> usize {
        self.n_max
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn simplices(&self, level: usize, _: usize) -> Result<Vec<usize>> {
        Ok(if level == 0 { vec![0] } else { vec![0, 1] })
    }
    fn face(&self, _: usize, _: usize, x: &usize, _: usize) -> usize {
        *x
    }
    fn degen(&self, _: usize, _: usize, x: &usize, _: usize) -> usize {
        *x
    }
    fn act(&self, _: Gen, _: usize, x: &usize) -> usize {
        *x
    }
}

/// A simplex of the nerve of one level of Φ(𝒜).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NChain<O, M> {
    Vertex(Vec<O>),
    Chain(Vec<PhiMor<O, M>>),
}

/// n ↦ N(Φ(𝒜)(n)), truncated at simplicial dimension `dim`. Levels are
/// enumerated only when 𝒜 has known finite hom-sets and the count stays
/// under `cap`.
#[derive(Debug, Clone)]
pub struct PhiNerveModel<A> {
    pub phi: Phi<A>,
    pub dim: usize,
    pub cap: usize,
}

type PChain<A> = NChain<<A as BraidedMonCat>::Obj, <A as BraidedMonCat>::Mor>;

impl<A: BraidedMonCat> PhiNerveModel<A> {
    pub fn new(cat: A, n_max: usize, dim: usize) -> Self {
        PhiNerveModel { phi: Phi::new(cat, n_max), dim, cap: 200_000 }
    }

    fn restrict_tuple(&self, level: usize, keep: &[usize], a: &[A::Obj]) -> Option<Vec<A::Obj>> {
        let u = self.phi.cat.unit();
        (1..=level).filter(|p| !keep.contains(p)).all(|p| a[p - 1] == u).then(|| keep.iter().map(|&p| a[p - 1].clone()).collect())
    }
}

impl<A: BraidedMonCat> BSpaceModel for PhiNerveModel<A> {
    type K = PChain<A>;
    fn name(&self) -> String {
        format!("N{}", self.phi.name())
    }
    fn n_max(&self) -> usize {
        self.phi.max_level
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn simplices(&self, level: usize, k: usize) -> Result<Vec<PChain<A>>> {
        let tuples = self.phi.tuples(level);
        if k == 0 {
            return Ok(tuples.into_iter().map(NChain::Vertex).collect());
        }
        let cat = &self.phi.cat;
        let mut edges: Vec<Vec<PhiMor<A::Obj, A::Mor>>> = Vec::with_capacity(tuples.len());
        for a in &tuples {
            let mut out = Vec::new();
            for b in &tuples {
                let hom = cat
                    .hom_all(&self.phi.tensor(a), &self.phi.tensor(b))
                    .ok_or_else(|| Error::Truncation(format!("{} has no finite hom-sets", cat.name())))?;
                out.extend(hom.into_iter().map(|f| PhiMor { src: a.clone(), tgt: b.clone(), f }));
            }
            edges.push(out);
        }
        let index: std::collections::HashMap<&Vec<A::Obj>, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut chains: Vec<Vec<PhiMor<A::Obj, A::Mor>>> = edges.iter().flatten().map(|e| vec![e.clone()]).collect();
        for _ in 1..k {
            let mut next = Vec::new();
            for ch in chains {
                let last = &ch.last().expect("nonempty").tgt;
                for e in &edges[index[last]] {
                    let mut c = ch.clone();
                    c.push(e.clone());
                    next.push(c);
                }
                if next.len() > self.cap {
                    return Err(Error::Truncation(format!("more than {} simplices at level {level}", self.cap)));
                }
            }
            chains = next;
        }
        if chains.len() > self.cap {
            return Err(Error::Truncation(format!("more than {} simplices at level {level}", self.cap)));
        }
        Ok(chains.into_iter().map(NChain::Chain).collect())
    }
    fn face(&self, _: usize, k: usize, x: &PChain<A>, i: usize) -> PChain<A> {
        let NChain::Chain(ch) = x else { unreachable!("faces of vertices") };
        if k == 1 {
            return NChain::Vertex(if i == 0 { ch[0].tgt.clone() } else { ch[0].src.clone() });
        }
        if i == 0 {
            NChain::Chain(ch[1..].to_vec())
        } else if i == k {
            NChain::Chain(ch[..k - 1].to_vec())
        } else {
            let mut v = ch[..i - 1].to_vec();
            v.push(BCategory::compose(&self.phi, &ch[i], &ch[i - 1]).expect("composable chain"));
            v.extend_from_slice(&ch[i + 1..]);
            NChain::Chain(v)
        }
    }
    fn degen(&self, _: usize, _: usize, x: &PChain<A>, i: usize) -> PChain<A> {
        match x {
            NChain::Vertex(a) => NChain::Chain(vec![BCategory::identity(&self.phi, a)]),
            NChain::Chain(ch) => {
                let obj = if i == 0 { &ch[0].src } else { &ch[i - 1].tgt };
                let mut v = ch.clone();
                v.insert(i, BCategory::identity(&self.phi, obj));
                NChain::Chain(v)
            }
        }
    }
    fn act(&self, g: Gen, _: usize, x: &PChain<A>) -> PChain<A> {
        let alpha = g.morphism().expect("valid generator");
        match x {
            NChain::Vertex(a) => NChain::Vertex(self.phi.act_obj(&alpha, a).expect("level matches")),
            NChain::Chain(ch) => NChain::Chain(ch.iter().map(|f| self.phi.act_mor(&alpha, f).expect("level matches")).collect()),
        }
    }
    fn sample(&self, level: usize, k: usize, rng: &mut Rng) -> PChain<A> {
        let a = self.phi.random_tuple(level, rng);
        if k == 0 {
            return NChain::Vertex(a);
        }
        let mut ch = Vec::with_capacity(k);
        let mut cur = a;
        for _ in 0..k {
            let f = self.phi.random_mor_from(&cur, rng);
            cur = f.tgt.clone();
            ch.push(f);
        }
        NChain::Chain(ch)
    }
    fn restrict(&self, level: usize, keep: &[usize], _: usize, x: &PChain<A>) -> Option<PChain<A>> {
        match x {
            NChain::Vertex(a) => self.restrict_tuple(level, keep, a).map(NChain::Vertex),
            NChain::Chain(ch) => ch
                .iter()
                .map(|f| {
                    Some(PhiMor { src: self.restrict_tuple(level, keep, &f.src)?, tgt: self.restrict_tuple(level, keep, &f.tgt)?, f: f.f.clone() })
                })
                .collect::<Option<Vec<_>>>()
                .map(NChain::Chain),
        }
    }
    fn unit(&self) -> Option<PChain<A>> {
        Some(NChain::Vertex(Vec::new()))
    }
    fn mult(&self, _: usize, x: &PChain<A>, y: &PChain<A>) -> Option<PChain<A>> {
        match (x, y) {
            (NChain::Vertex(a), NChain::Vertex(b)) => Some(NChain::Vertex(self.phi.tensor_obj(a, b))),
            (NChain::Chain(f), NChain::Chain(g)) if f.len() == g.len() => {
                f.iter().zip(g).map(|(p, q)| self.phi.tensor_mor(p, q).ok()).collect::<Option<Vec<_>>>().map(NChain::Chain)
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bspace::space::{
        check_bspace, check_commutative_monoid, check_commutative_sampled, check_flat, check_flat_sampled, check_model_sampled, materialize,
        materialize_monoid,
    };
    use crate::fincat::{BraidGroupoid, FinSetBij, TableCat};
    use crate::rng;

    fn ok(r: crate::report::CheckReport) {
        assert!(r.passed(), "{}: {:?}", r.name, &r.failures[..r.failures.len().min(3)]);
    }

    #[test]
    fn constant_and_free_spaces() {
        let (u, _) = materialize(&ConstantModel::terminal(4, 2)).unwrap();
        ok(check_bspace(&u));
        ok(check_flat(&u));
        let (k, _) = materialize(&ConstantModel { x: TSSet::circle(2), n_max: 3 }).unwrap();
        ok(check_bspace(&k));
        let (f1, _) = materialize(&FreeOneModel { n_max: 4, dim: 1 }).unwrap();
        assert_eq!((0..=4).map(|n| f1.levels[n].count(0)).collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
        ok(check_bspace(&f1));
        ok(check_flat(&f1));
    }

    #[test]
    fn xbullet_s0() {
        let m = XBulletModel::s0(4, 1);
        let a = materialize_monoid(&m).unwrap();
        assert_eq!(a.space.levels[3].count(0), 8);
        ok(check_bspace(&a.space));
        ok(check_flat(&a.space));
        ok(check_commutative_monoid(&a));
        // ∂¹ on level 1 sends x to (*, x)
        let one = a.space.levels[1].lookup(0, "[1]").unwrap();
        let img = a.space.act_gen(Gen::Partial { i: 1, n: 1 }, 0, one).unwrap();
        assert_eq!(a.space.levels[2].label(0, img), "[0, 1]");
        let (pt, _) = materialize(&XBulletModel::new(TSSet::point(1), 3).unwrap()).unwrap();
        assert!((0..=3).all(|n| pt.levels[n].count(0) == 1));
    }

    #[test]
    fn non_flat_fixture_fails_only_the_intersection() {
        let (x, _) = materialize(&NonFlatModel { n_max: 3, dim: 1 }).unwrap();
        ok(check_bspace(&x));
        let r = check_flat(&x);
        assert!(!r.passed());
        assert!(r.failures.iter().all(|f| f.key.starts_with("intersection")));
    }

    #[test]
    fn phi_nerves() {
        let z2 = PhiNerveModel::new(TableCat::z2(), 4, 2);
        let a = materialize_monoid(&z2).unwrap();
        ok(check_bspace(&a.space));
        ok(check_flat(&a.space));
        ok(check_commutative_monoid(&a));
        let t = materialize_monoid(&PhiNerveModel::new(TableCat::terminal(), 4, 2)).unwrap();
        ok(check_flat(&t.space));
        let mut g = rng(3);
        let bg = PhiNerveModel::new(BraidGroupoid::new(4, 6), 4, 2);
        assert!(materialize(&bg).is_err());
        ok(check_model_sampled(&bg, 5, &mut g));
        ok(check_flat_sampled(&bg, 20, &mut g));
        ok(check_commutative_sampled(&bg, 20, &mut g));
        let fs = PhiNerveModel::new(FinSetBij::new(4), 4, 2);
        ok(check_flat_sampled(&fs, 20, &mut g));
        ok(check_commutative_sampled(&fs, 20, &mut g));
    }
}
