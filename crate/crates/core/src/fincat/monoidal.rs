use std::fmt::Debug;
use std::hash::Hash;

use rand::seq::SliceRandom;

use crate::braid::{permutation_braid, GarsideNF, Permutation};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::Rng;

/// A braided strict monoidal category presented by oracles. `objects`
/// returns the truncated object set used for checks.
pub trait BraidedMonCat {
    type Obj: Clone + Eq + Hash + Debug;
    type Mor: Clone + Eq + Hash + Debug;

    fn name(&self) -> String;
    fn unit(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;
    /// g∘f.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    /// c_{a,b}: a⊗b → b⊗a.
    fn braiding(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor>;
    fn objects(&self) -> Vec<Self::Obj>;
    /// Up to `count` morphisms a → b (all of them when the hom-set is small).
    fn hom_sample(&self, a: &Self::Obj, b: &Self::Obj, rng: &mut Rng, count: usize) -> Vec<Self::Mor>;
    /// The full hom-set when it is finite and known.
    fn hom_all(&self, _a: &Self::Obj, _b: &Self::Obj) -> Option<Vec<Self::Mor>> {
        None
    }
}

pub fn tensor_all<A: BraidedMonCat>(cat: &A, objs: &[A::Obj]) -> A::Obj {
    objs.iter().fold(cat.unit(), |acc, o| cat.tensor_obj(&acc, o))
}

fn compose_chk<A: BraidedMonCat>(cat: &A, g: &A::Mor, f: &A::Mor) -> Result<A::Mor> {
    if cat.target(f) != cat.source(g) {
        return Err(Error::Dimension(format!("compose {g:?} after {f:?}")));
    }
    cat.compose(g, f)
}

/// Action of ξ ∈ 𝓑_m on a_1⊗⋯⊗a_m: ζ^i acts as id⊗c_{a_i,a_{i+1}}⊗id.
pub fn braid_action<A: BraidedMonCat>(cat: &A, objs: &[A::Obj], xi: &GarsideNF) -> Result<A::Mor> {
    if xi.n != objs.len() {
        return Err(Error::Dimension(format!("braid on {} strands acting on {} objects", xi.n, objs.len())));
    }
    let mut cur = objs.to_vec();
    let mut acc = cat.identity(&tensor_all(cat, &cur));
    for l in xi.to_word().letters {
        let i = l.index - 1;
        let left = tensor_all(cat, &cur[..i]);
        let right = tensor_all(cat, &cur[i + 2..]);
        let c = if l.positive {
            cat.braiding(&cur[i], &cur[i + 1])
        } else {
            let fwd = cat.braiding(&cur[i + 1], &cur[i]);
            cat.inverse(&fwd).ok_or_else(|| Error::Invalid(format!("braiding {fwd:?} not invertible")))?
        };
        let step = cat.tensor_mor(&cat.tensor_mor(&cat.identity(&left), &c)?, &cat.identity(&right))?;
        acc = compose_chk(cat, &step, &acc)?;
        cur.swap(i, i + 1);
    }
    Ok(acc)
}

/// Permutation action through the positive permutation braid; meaningful
/// when the braiding is a symmetry.
pub fn perm_action<A: BraidedMonCat>(cat: &A, objs: &[A::Obj], sigma: &Permutation) -> Result<A::Mor> {
    braid_action(cat, objs, &GarsideNF::from_word(&permutation_braid(sigma)))
}

/// A random morphism out of `a`, trying targets in random order.
pub(crate) fn arrow_from<A: BraidedMonCat>(cat: &A, a: &A::Obj, rng: &mut Rng) -> Option<A::Mor> {
    let mut objs = cat.objects();
    objs.shuffle(rng);
    objs.iter().find_map(|b| cat.hom_sample(a, b, rng, 1).into_iter().next())
}

fn pick<'a, T>(v: &'a [T], rng: &mut Rng) -> &'a T {
    v.choose(rng).expect("non-empty")
}

/// Strictness, unit laws, interchange, naturality of c, both hexagons and
/// invertibility of c. Object-level laws run over all objects (tuples up to
/// triples); morphism-level laws run on `samples` random instances.
pub fn check_braided_monoidal<A: BraidedMonCat>(cat: &A, samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("braided-monoidal {}", cat.name()));
    let objs = cat.objects();
    let u = cat.unit();
    let t = |a: &A::Obj, b: &A::Obj| cat.tensor_obj(a, b);
    let eq = |x: Result<A::Mor>, y: Result<A::Mor>| matches!((&x, &y), (Ok(a), Ok(b)) if a == b);

    for a in &objs {
        r.record(t(&u, a) == *a && t(a, &u) == *a, || format!("unit-object {a:?}"), || "u⊗a or a⊗u differs from a".into());
        let id_u = cat.identity(&u);
        let c_au = cat.braiding(a, &u);
        let c_ua = cat.braiding(&u, a);
        let id_a = cat.identity(a);
        r.record(c_au == id_a && c_ua == id_a, || format!("braiding-unit {a:?}"), || format!("c(a,u)={c_au:?} c(u,a)={c_ua:?}"));
        r.record(
            cat.tensor_mor(&id_u, &id_a).ok() == Some(id_a.clone()),
            || format!("unit-morphism {a:?}"),
            || "id_u⊗id_a is not id_a".into(),
        );
        for b in &objs {
            let ab = t(a, b);
            r.record(
                cat.tensor_mor(&cat.identity(a), &cat.identity(b)).ok() == Some(cat.identity(&ab)),
                || format!("tensor-identities {a:?} {b:?}"),
                || "id_a⊗id_b is not id_(a⊗b)".into(),
            );
            let c = cat.braiding(a, b);
            let typed = cat.source(&c) == ab && cat.target(&c) == t(b, a);
            r.record(typed, || format!("braiding-type {a:?} {b:?}"), || format!("{c:?}"));
            let inv_ok = match cat.inverse(&c) {
                Some(ci) => {
                    eq(compose_chk(cat, &ci, &c), Ok(cat.identity(&ab)))
                        && eq(compose_chk(cat, &c, &ci), Ok(cat.identity(&t(b, a))))
                }
                None => false,
            };
            r.record(inv_ok, || format!("braiding-invertible {a:?} {b:?}"), || "no two-sided inverse".into());
            for c3 in &objs {
                r.record(
                    t(&t(a, b), c3) == t(a, &t(b, c3)),
                    || format!("assoc-object {a:?} {b:?} {c3:?}"),
                    || "tensor not strictly associative".into(),
                );
                // c_{a,b⊗c} = (id_b⊗c_{a,c})∘(c_{a,b}⊗id_c)
                let lhs = Ok(cat.braiding(a, &t(b, c3)));
                let rhs = cat.tensor_mor(&cat.braiding(a, b), &cat.identity(c3)).and_then(|x| {
                    let y = cat.tensor_mor(&cat.identity(b), &cat.braiding(a, c3))?;
                    compose_chk(cat, &y, &x)
                });
                r.record(eq(lhs, rhs), || format!("hexagon-1 {a:?} {b:?} {c3:?}"), || "c(a,b⊗c) mismatch".into());
                // c_{a⊗b,c} = (c_{a,c}⊗id_b)∘(id_a⊗c_{b,c})
                let lhs = Ok(cat.braiding(&t(a, b), c3));
                let rhs = cat.tensor_mor(&cat.identity(a), &cat.braiding(b, c3)).and_then(|x| {
                    let y = cat.tensor_mor(&cat.braiding(a, c3), &cat.identity(b))?;
                    compose_chk(cat, &y, &x)
                });
                r.record(eq(lhs, rhs), || format!("hexagon-2 {a:?} {b:?} {c3:?}"), || "c(a⊗b,c) mismatch".into());
            }
        }
    }

    for k in 0..samples {
        let a = pick(&objs, rng).clone();
        let b = pick(&objs, rng).clone();
        let (Some(f), Some(g)) = (arrow_from(cat, &a, rng), arrow_from(cat, &b, rng)) else { continue };
        let (a2, b2) = (cat.target(&f), cat.target(&g));
        // identity laws and associativity
        r.record(
            eq(compose_chk(cat, &f, &cat.identity(&a)), Ok(f.clone()))
                && eq(compose_chk(cat, &cat.identity(&a2), &f), Ok(f.clone())),
            || format!("identity-law #{k} {f:?}"),
            || "identity law".into(),
        );
        if let (Some(f2), Some(g2)) = (arrow_from(cat, &a2, rng), arrow_from(cat, &b2, rng)) {
            if let Some(f3) = arrow_from(cat, &cat.target(&f2), rng) {
                let l = compose_chk(cat, &f2, &f).and_then(|x| compose_chk(cat, &f3, &x));
                let rr = compose_chk(cat, &f3, &f2).and_then(|x| compose_chk(cat, &x, &f));
                r.record(eq(l, rr), || format!("assoc-morphism #{k} {f:?} {f2:?} {f3:?}"), || "associativity".into());
            }
            // (f2⊗g2)∘(f⊗g) = (f2∘f)⊗(g2∘g)
            let l = cat.tensor_mor(&f, &g).and_then(|x| compose_chk(cat, &cat.tensor_mor(&f2, &g2)?, &x));
            let rr = compose_chk(cat, &f2, &f).and_then(|x| cat.tensor_mor(&x, &compose_chk(cat, &g2, &g)?));
            r.record(eq(l, rr), || format!("interchange #{k} {f:?} {g:?} {f2:?} {g2:?}"), || "interchange".into());
        }
        // c_{a2,b2}∘(f⊗g) = (g⊗f)∘c_{a,b}
        let l = cat.tensor_mor(&f, &g).and_then(|x| compose_chk(cat, &cat.braiding(&a2, &b2), &x));
        let rr = cat.tensor_mor(&g, &f).and_then(|x| compose_chk(cat, &x, &cat.braiding(&a, &b)));
        r.record(eq(l, rr), || format!("naturality #{k} {f:?} {g:?}"), || "braiding not natural".into());
        if let Some(h) = arrow_from(cat, pick(&objs, rng), rng) {
            let l = cat.tensor_mor(&f, &g).and_then(|x| cat.tensor_mor(&x, &h));
            let rr = cat.tensor_mor(&g, &h).and_then(|x| cat.tensor_mor(&f, &x));
            r.record(eq(l, rr), || format!("assoc-tensor #{k} {f:?} {g:?} {h:?}"), || "⊗ on morphisms".into());
        }
        let id_u = cat.identity(&u);
        r.record(
            eq(cat.tensor_mor(&id_u, &f), Ok(f.clone())) && eq(cat.tensor_mor(&f, &id_u), Ok(f.clone())),
            || format!("unit-tensor #{k} {f:?}"),
            || "id_u⊗f".into(),
        );
    }
    r
}
