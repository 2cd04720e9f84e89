//! The rectification Φ(𝒜) of a braided strict monoidal category, its
//! commutative monoid structure, the comparison functor P: 𝔅∫Φ(𝒜) → 𝒜 and
//! the symmetric variant over ℐ.

mod symmetric;

pub use symmetric::{phi_symmetric, PhiSym};

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::binj::{self, chi_morphism, pi, random, relation_instances, BraidedInjection, Gen};
use crate::error::{dim_err, Error, Result};
use crate::fincat::{braid_action, tensor_all, BCategory, BCategoryMonoid, BraidedMonCat, Groth, GrothMorphism, GrothObject};
use crate::report::CheckReport;
use crate::Rng;

/// A morphism of Φ(𝒜)(n): f ∈ 𝒜(⊗src, ⊗tgt).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiMor<O, M> {
    pub src: Vec<O>,
    pub tgt: Vec<O>,
    pub f: M,
}

/// Φ(𝒜) as a 𝔅-category monoid. Hom-sets are views onto 𝒜; `max_level`
/// bounds enumeration only.
#[derive(Debug, Clone)]
pub struct Phi<A> {
    pub cat: A,
    pub max_level: usize,
}

impl<A: BraidedMonCat> Phi<A> {
    pub fn new(cat: A, max_level: usize) -> Self {
        Phi { cat, max_level }
    }

    pub fn tensor(&self, objs: &[A::Obj]) -> A::Obj {
        tensor_all(&self.cat, objs)
    }

    /// Checks that f: ⊗src → ⊗tgt before wrapping it.
    pub fn morphism(&self, src: Vec<A::Obj>, tgt: Vec<A::Obj>, f: A::Mor) -> Result<PhiMor<A::Obj, A::Mor>> {
        if src.len() != tgt.len() {
            return dim_err(format!("tuples of lengths {} and {}", src.len(), tgt.len()));
        }
        if self.cat.source(&f) != self.tensor(&src) || self.cat.target(&f) != self.tensor(&tgt) {
            return Err(Error::Invalid(format!("{f:?} is not a morphism {src:?} -> {tgt:?}")));
        }
        Ok(PhiMor { src, tgt, f })
    }

    fn xi_action(&self, xi: &crate::braid::GarsideNF, objs: &[A::Obj]) -> Result<A::Mor> {
        braid_action(&self.cat, objs, xi)
    }

    /// Every n-tuple of objects of 𝒜.
    pub fn tuples(&self, n: usize) -> Vec<Vec<A::Obj>> {
        let objs = self.cat.objects();
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t| {
                    objs.iter().map(move |o| {
                        let mut t2 = t.clone();
                        t2.push(o.clone());
                        t2
                    })
                })
                .collect();
        }
        out
    }

    pub fn random_tuple(&self, n: usize, rng: &mut Rng) -> Vec<A::Obj> {
        let objs = self.cat.objects();
        (0..n).map(|_| objs.choose(rng).expect("objects").clone()).collect()
    }

    /// A random morphism out of the tuple `a`, preferring targets that are
    /// different tuples with a reachable tensor.
    pub fn random_mor_from(&self, a: &[A::Obj], rng: &mut Rng) -> PhiMor<A::Obj, A::Mor> {
        let ta = self.tensor(a);
        for _ in 0..8 {
            let b = self.random_tuple(a.len(), rng);
            if let Some(f) = self.cat.hom_sample(&ta, &self.tensor(&b), rng, 1).pop() {
                return PhiMor { src: a.to_vec(), tgt: b, f };
            }
        }
        match self.cat.hom_sample(&ta, &ta, rng, 1).pop() {
            Some(f) => PhiMor { src: a.to_vec(), tgt: a.to_vec(), f },
            None => self.identity(&a.to_vec()),
        }
    }
}

impl<A: BraidedMonCat> BCategory for Phi<A> {
    type Obj = Vec<A::Obj>;
    type Mor = PhiMor<A::Obj, A::Mor>;

    fn name(&self) -> String {
        format!("Phi({})", self.cat.name())
    }
    fn level(&self, x: &Self::Obj) -> usize {
        x.len()
    }
    fn source(&self, f: &Self::Mor) -> Self::Obj {
        f.src.clone()
    }
    fn target(&self, f: &Self::Mor) -> Self::Obj {
        f.tgt.clone()
    }
    fn identity(&self, x: &Self::Obj) -> Self::Mor {
        PhiMor { src: x.clone(), tgt: x.clone(), f: self.cat.identity(&self.tensor(x)) }
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        if f.tgt != g.src {
            return Err(Error::Invalid(format!("{:?} is not {:?}", f.tgt, g.src)));
        }
        Ok(PhiMor { src: f.src.clone(), tgt: g.tgt.clone(), f: self.cat.compose(&g.f, &f.f)? })
    }
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        Some(PhiMor { src: f.tgt.clone(), tgt: f.src.clone(), f: self.cat.inverse(&f.f)? })
    }
    /// (a_{ᾱ⁻¹(1)}, …, a_{ᾱ⁻¹(n)}) with u off the image.
    fn act_obj(&self, alpha: &BraidedInjection, x: &Self::Obj) -> Result<Self::Obj> {
        if alpha.source() != x.len() {
            return dim_err(format!("{}-tuple acted on by a morphism from {}", x.len(), alpha.source()));
        }
        let bar = pi(alpha);
        let mut out = vec![self.cat.unit(); alpha.target()];
        for (i, a) in x.iter().enumerate() {
            out[bar.apply(i + 1) - 1] = a.clone();
        }
        Ok(out)
    }
    /// ξ_*∘f∘ξ_*⁻¹ for α = Υ(ν)∘ξ.
    fn act_mor(&self, alpha: &BraidedInjection, f: &Self::Mor) -> Result<Self::Mor> {
        let src = self.act_obj(alpha, &f.src)?;
        let tgt = self.act_obj(alpha, &f.tgt)?;
        let xa = self.xi_action(&alpha.zeta, &f.src)?;
        let xb = self.xi_action(&alpha.zeta, &f.tgt)?;
        let xa_inv = self.cat.inverse(&xa).ok_or_else(|| Error::Invalid("braid action not invertible".into()))?;
        let g = self.cat.compose(&xb, &self.cat.compose(&f.f, &xa_inv)?)?;
        Ok(PhiMor { src, tgt, f: g })
    }
    fn objects(&self, n: usize) -> Vec<Self::Obj> {
        self.tuples(n)
    }
    fn hom_sample(&self, x: &Self::Obj, y: &Self::Obj, rng: &mut Rng, count: usize) -> Vec<Self::Mor> {
        if x.len() != y.len() {
            return Vec::new();
        }
        self.cat
            .hom_sample(&self.tensor(x), &self.tensor(y), rng, count)
            .into_iter()
            .map(|f| PhiMor { src: x.clone(), tgt: y.clone(), f })
            .collect()
    }
}

impl<A: BraidedMonCat> BCategoryMonoid for Phi<A> {
    fn unit(&self) -> Self::Obj {
        Vec::new()
    }
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        a.iter().chain(b).cloned().collect()
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok(PhiMor { src: self.tensor_obj(&f.src, &g.src), tgt: self.tensor_obj(&f.tgt, &g.tgt), f: self.cat.tensor_mor(&f.f, &g.f)? })
    }
    /// Φ(𝒜) is commutative, so Θ is the identity of a⊗b.
    fn theta(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        self.identity(&self.tensor_obj(a, b))
    }
}

/// Φ(𝒜)(α) on a tuple and optionally on a morphism out of it.
pub fn phi_action<A: BraidedMonCat>(
    phi: &Phi<A>,
    alpha: &BraidedInjection,
    tuple: &[A::Obj],
    f: Option<&PhiMor<A::Obj, A::Mor>>,
) -> Result<(Vec<A::Obj>, Option<PhiMor<A::Obj, A::Mor>>)> {
    let objs = phi.act_obj(alpha, &tuple.to_vec())?;
    let mor = match f {
        Some(f) if f.src.as_slice() != tuple => return Err(Error::Invalid("morphism does not start at the tuple".into())),
        Some(f) => Some(phi.act_mor(alpha, f)?),
        None => None,
    };
    Ok((objs, mor))
}

/// Applies generators one at a time.
fn act_word_obj<X: BCategory>(x: &X, word: &[Gen], o: &X::Obj) -> Result<X::Obj> {
    word.iter().try_fold(o.clone(), |acc, g| x.act_obj(&g.morphism()?, &acc))
}

fn act_word_mor<X: BCategory>(x: &X, word: &[Gen], f: &X::Mor) -> Result<X::Mor> {
    word.iter().try_fold(f.clone(), |acc, g| x.act_mor(&g.morphism()?, &acc))
}

/// Both sides of every relation instance with subscript ≤ n_max, acted on
/// generator by generator: on every object tuple and on `mor_samples`
/// random morphisms per instance.
pub fn phi_check_relations<X: BCategory>(x: &X, n_max: usize, mor_samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("relations {} n<={n_max}", x.name()));
    for inst in relation_instances(n_max) {
        let objs = x.objects(inst.source());
        for o in &objs {
            let l = act_word_obj(x, &inst.lhs, o);
            let rr = act_word_obj(x, &inst.rhs, o);
            r.record(
                matches!((&l, &rr), (Ok(a), Ok(b)) if a == b),
                || format!("{} on {o:?}", inst.key()),
                || format!("{l:?} vs {rr:?}"),
            );
        }
        for _ in 0..mor_samples {
            let Some(o) = objs.choose(rng) else { break };
            let Some(f) = sample_mor(x, o, rng) else { continue };
            let l = act_word_mor(x, &inst.lhs, &f);
            let rr = act_word_mor(x, &inst.rhs, &f);
            r.record(
                matches!((&l, &rr), (Ok(a), Ok(b)) if a == b),
                || format!("{} on {f:?}", inst.key()),
                || format!("{l:?} vs {rr:?}"),
            );
        }
    }
    r
}

/// A random morphism out of o in its level.
pub(crate) fn sample_mor<X: BCategory>(x: &X, o: &X::Obj, rng: &mut Rng) -> Option<X::Mor> {
    let mut objs = x.objects(x.level(o));
    objs.shuffle(rng);
    objs.iter().take(8).find_map(|y| x.hom_sample(o, y, rng, 1).pop()).or_else(|| Some(x.identity(o)))
}

/// X(β∘α) = X(β)∘X(α) on random composable pairs, objects and morphisms.
pub fn phi_check_functorial<X: BCategory>(x: &X, max_level: usize, word_len: usize, samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("functoriality {}", x.name()));
    for s in 0..samples {
        let m = rng.gen_range(0..=max_level);
        let n = rng.gen_range(m..=max_level);
        let p = rng.gen_range(n..=max_level);
        let a = random::braided_injection(rng, m, n, word_len);
        let b = random::braided_injection(rng, n, p, word_len);
        let ba = binj::compose(&b, &a).expect("composable");
        let Some(o) = x.objects(m).choose(rng).cloned() else { continue };
        let Some(f) = sample_mor(x, &o, rng) else { continue };
        let l = x.act_obj(&ba, &o);
        let rr = x.act_obj(&a, &o).and_then(|y| x.act_obj(&b, &y));
        r.record(l.is_ok() && l.as_ref().ok() == rr.as_ref().ok(), || format!("object #{s} {a} {b} {o:?}"), || format!("{l:?} vs {rr:?}"));
        let l = x.act_mor(&ba, &f);
        let rr = x.act_mor(&a, &f).and_then(|y| x.act_mor(&b, &y));
        r.record(l.is_ok() && l.as_ref().ok() == rr.as_ref().ok(), || format!("morphism #{s} {a} {b} {f:?}"), || format!("{l:?} vs {rr:?}"));
        let id = x.act_mor(&a, &x.identity(&o));
        let expect = x.act_obj(&a, &o).map(|y| x.identity(&y));
        r.record(id.is_ok() && id.as_ref().ok() == expect.as_ref().ok(), || format!("identity #{s} {a} {o:?}"), || format!("{id:?}"));
    }
    r
}

/// ⊗ is a map of (𝔅×𝔅)-categories: X(α⊔β)(p⊗q) = X(α)p ⊗ X(β)q for all
/// generator pairs on levels ≤ bound, objects exhaustively and morphisms on
/// `mor_samples` draws per pair.
pub fn phi_check_tensor_natural<X: BCategoryMonoid>(x: &X, bound: usize, mor_samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("tensor naturality {}", x.name()));
    let gens = |m: usize| -> Vec<BraidedInjection> {
        let mut v = vec![BraidedInjection::identity(m)];
        for i in 1..m {
            v.push(binj::zeta_gen(i, m, true).expect("in range"));
        }
        for i in 1..=m + 1 {
            v.push(binj::partial_gen(i, m).expect("in range"));
        }
        v
    };
    for m in 0..=bound {
        for n in 0..=bound - m {
            for a in gens(m) {
                for b in gens(n) {
                    let ab = binj::tensor(&a, &b);
                    for p in x.objects(m) {
                        for q in x.objects(n).iter().take(16) {
                            let l = x.act_obj(&ab, &x.tensor_obj(&p, q));
                            let rr = x.act_obj(&a, &p).and_then(|pp| Ok(x.tensor_obj(&pp, &x.act_obj(&b, q)?)));
                            r.record(
                                l.is_ok() && l.as_ref().ok() == rr.as_ref().ok(),
                                || format!("objects {a} {b} {p:?} {q:?}"),
                                || format!("{l:?} vs {rr:?}"),
                            );
                        }
                    }
                    for _ in 0..mor_samples {
                        let (Some(p), Some(q)) = (x.objects(m).choose(rng).cloned(), x.objects(n).choose(rng).cloned()) else { continue };
                        let (Some(f), Some(g)) = (sample_mor(x, &p, rng), sample_mor(x, &q, rng)) else { continue };
                        let l = x.tensor_mor(&f, &g).and_then(|fg| x.act_mor(&ab, &fg));
                        let rr = x.act_mor(&a, &f).and_then(|ff| x.tensor_mor(&ff, &x.act_mor(&b, &g)?));
                        r.record(
                            l.is_ok() && l.as_ref().ok() == rr.as_ref().ok(),
                            || format!("morphisms {a} {b} {f:?} {g:?}"),
                            || format!("{l:?} vs {rr:?}"),
                        );
                    }
                }
            }
        }
    }
    r
}

/// X(χ_{m,n})(p⊗q) = q⊗p for m,n ≤ bound: objects exhaustively (pairs
/// capped at `pair_cap` per (m,n)), morphisms on `mor_samples` draws.
pub fn phi_check_commutative<X: BCategoryMonoid>(x: &X, bound: usize, mor_samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("commutativity {}", x.name()));
    let u = x.unit();
    for m in 0..=bound {
        let ps = x.objects(m);
        for p in &ps {
            let l = x.tensor_obj(&u, p);
            let rr = x.tensor_obj(p, &u);
            r.record(l == *p && rr == *p, || format!("unit {p:?}"), || format!("{l:?} / {rr:?}"));
        }
        for n in 0..=bound {
            let chi = chi_morphism(m, n);
            let qs = x.objects(n);
            for p in &ps {
                for q in &qs {
                    let l = x.act_obj(&chi, &x.tensor_obj(p, q));
                    let rr = x.tensor_obj(q, p);
                    r.record(l.as_ref().ok() == Some(&rr), || format!("objects chi({m},{n}) {p:?} {q:?}"), || format!("{l:?} vs {rr:?}"));
                }
            }
            for _ in 0..mor_samples {
                let (Some(p), Some(q)) = (ps.choose(rng), qs.choose(rng)) else { continue };
                let (Some(f), Some(g)) = (sample_mor(x, p, rng), sample_mor(x, q, rng)) else { continue };
                let l = x.tensor_mor(&f, &g).and_then(|fg| x.act_mor(&chi, &fg));
                let rr = x.tensor_mor(&g, &f);
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

pub type PhiGroth<A> = Groth<Phi<A>>;
type GObj<A> = GrothObject<Vec<<A as BraidedMonCat>::Obj>>;
type GMor<A> = GrothMorphism<Vec<<A as BraidedMonCat>::Obj>, PhiMor<<A as BraidedMonCat>::Obj, <A as BraidedMonCat>::Mor>>;

/// P(m, a⃗) = a_1⊗…⊗a_m.
pub fn p_object<A: BraidedMonCat>(phi: &Phi<A>, o: &GObj<A>) -> A::Obj {
    phi.tensor(&o.x)
}

/// P(α, f) = f∘ξ_* for α = Υ(ν)∘ξ.
pub fn p_morphism<A: BraidedMonCat>(phi: &Phi<A>, m: &GMor<A>) -> Result<A::Mor> {
    let xi = phi.xi_action(&m.alpha.zeta, &m.source.x)?;
    phi.cat.compose(&m.s.f, &xi)
}

/// A random morphism of 𝔅∫Φ(𝒜) out of `a` landing at level ≤ max_level.
pub fn random_groth_from<A: BraidedMonCat>(g: &PhiGroth<A>, a: &GObj<A>, rng: &mut Rng) -> GMor<A> {
    let n = rng.gen_range(a.n..=g.max_level.max(a.n));
    let alpha = random::braided_injection(rng, a.n, n, g.word_len);
    let pushed = g.x.act_obj(&alpha, &a.x).expect("levels match");
    let s = g.x.random_mor_from(&pushed, rng);
    GrothMorphism { source: a.clone(), target: GrothObject { n, x: s.tgt.clone() }, alpha, s }
}

fn random_groth_object<A: BraidedMonCat>(g: &PhiGroth<A>, rng: &mut Rng) -> GObj<A> {
    let n = rng.gen_range(0..=g.max_level);
    GrothObject { n, x: g.x.random_tuple(n, rng) }
}

/// P is a functor, strict monoidal and braiding preserving: `samples`
/// random instances of each law.
pub fn check_p_functor<A: BraidedMonCat + Clone>(phi: &Phi<A>, word_len: usize, samples: usize, rng: &mut Rng) -> CheckReport {
    let g = Groth::new(phi.clone(), phi.max_level, word_len);
    let cat = &phi.cat;
    let mut r = CheckReport::new(format!("P functor {}", cat.name()));
    let eq = |x: Result<A::Mor>, y: Result<A::Mor>| matches!((&x, &y), (Ok(a), Ok(b)) if a == b);
    for s in 0..samples {
        let a = random_groth_object(&g, rng);
        let f = random_groth_from(&g, &a, rng);
        let h = random_groth_from(&g, &f.target, rng);
        let hf = g.compose(&h, &f);
        let l = hf.and_then(|x| p_morphism(phi, &x));
        let rr = p_morphism(phi, &f).and_then(|pf| cat.compose(&p_morphism(phi, &h)?, &pf));
        r.record(eq(l, rr), || format!("composition #{s} {f:?} {h:?}"), || "P(h∘f) != P(h)∘P(f)".into());
        let id = p_morphism(phi, &g.identity(&a));
        r.record(eq(id, Ok(cat.identity(&p_object(phi, &a)))), || format!("identity #{s} {a:?}"), || "P(id) != id".into());
        let typed = p_morphism(phi, &f)
            .map(|pf| cat.source(&pf) == p_object(phi, &f.source) && cat.target(&pf) == p_object(phi, &f.target))
            .unwrap_or(false);
        r.record(typed, || format!("typing #{s} {f:?}"), || "P(f) has wrong endpoints".into());

        let b = random_groth_object(&g, rng);
        let k = random_groth_from(&g, &b, rng);
        let l = g.tensor_mor(&f, &k).and_then(|fk| p_morphism(phi, &fk));
        let rr = p_morphism(phi, &f).and_then(|pf| cat.tensor_mor(&pf, &p_morphism(phi, &k)?));
        r.record(eq(l, rr), || format!("monoidal #{s} {f:?} {k:?}"), || "P(f⊗k) != P(f)⊗P(k)".into());
        let ob = p_object(phi, &g.tensor_obj(&a, &b)) == cat.tensor_obj(&p_object(phi, &a), &p_object(phi, &b));
        r.record(ob, || format!("monoidal-object #{s} {a:?} {b:?}"), || "P(a⊗b) != P(a)⊗P(b)".into());
        let l = p_morphism(phi, &g.braiding(&a, &b));
        let rr = Ok(cat.braiding(&p_object(phi, &a), &p_object(phi, &b)));
        r.record(eq(l, rr), || format!("braiding #{s} {a:?} {b:?}"), || "P(c) != c".into());
    }
    r.record(p_object(phi, &g.unit()) == cat.unit(), || "unit".into(), || "P(0, ()) != u".into());
    r
}

/// The collapse p: Φ(𝒜)(m) → Φ(𝒜)(1) against j: 1 → m, with p∘j = id and
/// the natural isomorphism j∘p ≅ id whose components are identities of 𝒜.
#[derive(Debug, Clone)]
pub struct LevelEquivalence<'a, A> {
    pub phi: &'a Phi<A>,
    pub j: BraidedInjection,
}

pub fn phi_level_equivalence_data<A: BraidedMonCat>(phi: &Phi<A>, j: BraidedInjection) -> Result<LevelEquivalence<'_, A>> {
    if j.source() != 1 {
        return dim_err(format!("j must start at level 1, got {}", j.source()));
    }
    if j.target() == 0 {
        return Err(Error::Rejected("level 0 is excluded".into()));
    }
    Ok(LevelEquivalence { phi, j })
}

impl<A: BraidedMonCat> LevelEquivalence<'_, A> {
    pub fn m(&self) -> usize {
        self.j.target()
    }

    pub fn p_obj(&self, a: &[A::Obj]) -> Vec<A::Obj> {
        vec![self.phi.tensor(a)]
    }

    pub fn p_mor(&self, f: &PhiMor<A::Obj, A::Mor>) -> PhiMor<A::Obj, A::Mor> {
        PhiMor { src: self.p_obj(&f.src), tgt: self.p_obj(&f.tgt), f: f.f.clone() }
    }

    /// The component (j∘p)(a) → a.
    pub fn witness(&self, a: &[A::Obj]) -> Result<PhiMor<A::Obj, A::Mor>> {
        let jp = self.phi.act_obj(&self.j, &self.p_obj(a))?;
        self.phi.morphism(jp, a.to_vec(), self.phi.cat.identity(&self.phi.tensor(a)))
    }

    /// p∘j = id, the witnesses are isomorphisms, and they are natural.
    pub fn check(&self, samples: usize, rng: &mut Rng) -> CheckReport {
        let phi = self.phi;
        let mut r = CheckReport::new(format!("level equivalence m={}", self.m()));
        for s in 0..samples {
            let a1 = phi.random_tuple(1, rng);
            let f1 = phi.random_mor_from(&a1, rng);
            let pj = phi.act_mor(&self.j, &f1).map(|x| self.p_mor(&x));
            r.record(pj.as_ref().ok() == Some(&f1), || format!("p∘j #{s} {f1:?}"), || format!("{pj:?}"));
            let a = phi.random_tuple(self.m(), rng);
            let f = phi.random_mor_from(&a, rng);
            let nat = (|| -> Result<bool> {
                let wa = self.witness(&f.src)?;
                let wb = self.witness(&f.tgt)?;
                let inv_ok = phi.inverse(&wa).is_some();
                let jpf = phi.act_mor(&self.j, &self.p_mor(&f))?;
                Ok(inv_ok && phi.compose(&f, &wa)? == phi.compose(&wb, &jpf)?)
            })();
            r.record(matches!(nat, Ok(true)), || format!("naturality #{s} {f:?}"), || format!("{nat:?}"));
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binj::OrderInj;
    use crate::braid::GarsideNF;
    use crate::fincat::{check_braided_monoidal, BraidGroupoid, FinSetBij, TableCat};
    use crate::rng;

    #[test]
    fn object_formula() {
        let phi = Phi::new(TableCat::z2(), 3);
        let d = binj::partial_gen(1, 1).unwrap();
        assert_eq!(phi.act_obj(&d, &vec![1]).unwrap(), vec![0, 1]);
        let z = binj::zeta_gen(1, 2, true).unwrap();
        assert_eq!(phi.act_obj(&z, &vec![0, 1]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn zeta_conjugates_by_braiding() {
        let bg = BraidGroupoid::new(3, 4);
        let phi = Phi::new(bg.clone(), 3);
        let f = phi.morphism(vec![1, 2], vec![2, 1], GarsideNF::parse(3, "z1 z2").unwrap()).unwrap();
        let z = binj::zeta_gen(1, 2, true).unwrap();
        let g = phi.act_mor(&z, &f).unwrap();
        let expect = bg.braiding(&1, &2).inverse().then(&f.f).unwrap().then(&bg.braiding(&2, &1)).unwrap();
        assert_eq!(g.f, expect);
        assert_eq!((g.src, g.tgt), (vec![2, 1], vec![1, 2]));
    }

    #[test]
    fn relations_and_commutativity() {
        let mut g = rng(3);
        for rep in [
            phi_check_relations(&Phi::new(TableCat::terminal(), 3), 3, 2, &mut g),
            phi_check_relations(&Phi::new(TableCat::z2(), 3), 3, 4, &mut g),
            phi_check_relations(&Phi::new(BraidGroupoid::new(2, 3), 3), 3, 3, &mut g),
            phi_check_commutative(&Phi::new(BraidGroupoid::new(2, 3), 2), 2, 5, &mut g),
            phi_check_commutative(&Phi::new(FinSetBij::new(2), 2), 2, 5, &mut g),
            phi_check_tensor_natural(&Phi::new(TableCat::z2(), 3), 3, 2, &mut g),
            phi_check_functorial(&Phi::new(BraidGroupoid::new(2, 3), 3), 3, 4, 100, &mut g),
        ] {
            assert!(rep.passed(), "{}: {:?}", rep.name, &rep.failures[..rep.failures.len().min(3)]);
        }
    }

    #[test]
    fn p_is_braided_monoidal() {
        let mut g = rng(8);
        for rep in [
            check_p_functor(&Phi::new(TableCat::z2(), 3), 4, 100, &mut g),
            check_p_functor(&Phi::new(BraidGroupoid::new(2, 3), 3), 4, 100, &mut g),
        ] {
            assert!(rep.passed(), "{}: {:?}", rep.name, &rep.failures[..rep.failures.len().min(3)]);
        }
        let phi = Phi::new(BraidGroupoid::new(2, 3), 2);
        let gr = Groth::new(phi.clone(), 2, 3);
        let (a, b) = (GrothObject { n: 1, x: vec![1] }, GrothObject { n: 1, x: vec![2] });
        assert_eq!(p_morphism(&phi, &gr.braiding(&a, &b)).unwrap(), phi.cat.braiding(&1, &2));
    }

    #[test]
    fn groth_of_phi_is_braided_monoidal() {
        let g = Groth::new(Phi::new(TableCat::z2(), 2), 2, 3);
        let rep = check_braided_monoidal(&g, 100, &mut rng(1));
        assert!(rep.passed(), "{:?}", &rep.failures[..rep.failures.len().min(3)]);
        // the braiding on ((1,(g)),(1,(h))) is (χ_{1,1}, id)
        let c = g.braiding(&GrothObject { n: 1, x: vec![1] }, &GrothObject { n: 1, x: vec![0] });
        assert_eq!(c.alpha, chi_morphism(1, 1));
        assert_eq!(c.s, g.x.identity(&vec![0, 1]));
    }

    #[test]
    fn level_equivalence() {
        let phi = Phi::new(TableCat::z2(), 3);
        let j = upsilon_j(2);
        let le = phi_level_equivalence_data(&phi, j).unwrap();
        assert_eq!(le.witness(&[1, 1]).unwrap().src, vec![0, 0]);
        assert!(le.check(50, &mut rng(0)).passed());
        assert!(phi_level_equivalence_data(&phi, BraidedInjection::identity(1)).unwrap().check(20, &mut rng(0)).passed());
        assert!(phi_level_equivalence_data(&phi, BraidedInjection::identity(0)).is_err());
        let bg = Phi::new(BraidGroupoid::new(2, 3), 3);
        let le = phi_level_equivalence_data(&bg, upsilon_j(3)).unwrap();
        assert!(le.check(50, &mut rng(1)).passed());
    }

    fn upsilon_j(m: usize) -> BraidedInjection {
        binj::upsilon(&OrderInj::new(m, vec![1]).unwrap())
    }
}
