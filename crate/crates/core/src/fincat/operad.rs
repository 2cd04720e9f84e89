//! The Cat-operads 𝖡𝗋 and 𝖲𝗒𝗆 and their action on braided (resp.
//! symmetric) strict monoidal categories.

use rand::Rng as _;

use super::monoidal::{braid_action, perm_action, tensor_all, BraidedMonCat};
use crate::binj::random;
use crate::braid::{GarsideNF, Permutation};
use crate::error::{dim_err, Error, Result};
use crate::report::CheckReport;
use crate::Rng;

/// Whether objects of the level are permutations or braids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Symmetric,
    Braided,
}

/// A morphism α: a → b of 𝖡𝗋(k); the target is π(α)∘a.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BrMorphism {
    pub source: Permutation,
    pub alpha: GarsideNF,
}

impl BrMorphism {
    pub fn new(source: Permutation, alpha: GarsideNF) -> Result<Self> {
        if source.degree() != alpha.n {
            return dim_err(format!("object of Br({}) with braid on {} strands", source.degree(), alpha.n));
        }
        Ok(BrMorphism { source, alpha })
    }

    pub fn identity(a: Permutation) -> Self {
        let n = a.degree();
        BrMorphism { source: a, alpha: GarsideNF::identity(n) }
    }

    pub fn arity(&self) -> usize {
        self.source.degree()
    }

    pub fn target(&self) -> Permutation {
        self.alpha.permutation().after(&self.source)
    }
}

/// Level k of 𝖡𝗋 (objects in Σ_k) or of its braided variant (objects in
/// 𝓑_k). Hom-sets are never materialized: a morphism a → b is a braid α
/// with α·a = b, so each hom-set is a torsor.
#[derive(Debug, Clone, Copy)]
pub struct BrOperadLevel {
    pub k: usize,
    pub flavor: Flavor,
}

impl BrOperadLevel {
    pub fn new(k: usize, flavor: Flavor) -> Self {
        BrOperadLevel { k, flavor }
    }

    /// Whether α is a morphism a → b for permutation objects.
    pub fn is_morphism(&self, a: &Permutation, b: &Permutation, alpha: &GarsideNF) -> bool {
        self.flavor == Flavor::Symmetric
            && a.degree() == self.k
            && alpha.n == self.k
            && alpha.permutation().after(a) == *b
    }

    /// Whether α is a morphism a → b for braid objects.
    pub fn is_braided_morphism(&self, a: &GarsideNF, b: &GarsideNF, alpha: &GarsideNF) -> bool {
        self.flavor == Flavor::Braided && a.n == self.k && alpha.n == self.k && a.then(alpha).ok().as_ref() == Some(b)
    }

    /// The unique morphism a → b in the braided variant.
    pub fn braided_hom(&self, a: &GarsideNF, b: &GarsideNF) -> Result<GarsideNF> {
        if a.n != self.k || b.n != self.k {
            return dim_err(format!("objects of B_{} expected", self.k));
        }
        a.inverse().then(b)
    }
}

/// g∘f in 𝖡𝗋(k): multiplication of witnesses, f first.
pub fn compose(g: &BrMorphism, f: &BrMorphism) -> Result<BrMorphism> {
    if f.target() != g.source {
        return Err(Error::Invalid(format!("{:?} is not the source of the next morphism", f.target())));
    }
    Ok(BrMorphism { source: f.source.clone(), alpha: f.alpha.then(&g.alpha)? })
}

/// The right Σ_k action (α: a → b) ↦ (α: ag → bg).
pub fn right_action(f: &BrMorphism, g: &Permutation) -> Result<BrMorphism> {
    if g.degree() != f.arity() {
        return dim_err("permutation degree differs from arity");
    }
    Ok(BrMorphism { source: f.source.after(g), alpha: f.alpha.clone() })
}

/// γ(a; b_1..b_k) = a(j_1..j_k)∘(b_1⊔…⊔b_k).
pub fn gamma_object(a: &Permutation, bs: &[Permutation]) -> Result<Permutation> {
    if a.degree() != bs.len() {
        return dim_err(format!("gamma of arity {} with {} inputs", a.degree(), bs.len()));
    }
    let widths: Vec<usize> = bs.iter().map(|b| b.degree()).collect();
    let sum = bs.iter().fold(Permutation::identity(0), |acc, b| acc.block_sum(b));
    Ok(a.block_permutation(&widths).after(&sum))
}

/// γ on morphisms: the inner braids act inside their blocks (placed where a
/// puts them), then α moves the blocks as a cabled braid.
pub fn gamma_morphism(alpha: &BrMorphism, betas: &[BrMorphism]) -> Result<BrMorphism> {
    let k = alpha.arity();
    if betas.len() != k {
        return dim_err(format!("gamma of arity {k} with {} inputs", betas.len()));
    }
    let a = &alpha.source;
    let a_inv = a.inverse();
    let widths: Vec<usize> = betas.iter().map(|b| b.arity()).collect();
    let source = gamma_object(a, &betas.iter().map(|b| b.source.clone()).collect::<Vec<_>>())?;
    let positional = (1..=k).fold(GarsideNF::identity(0), |acc, p| acc.block_sum(&betas[a_inv.apply(p) - 1].alpha));
    let pos_widths: Vec<usize> = (1..=k).map(|p| widths[a_inv.apply(p) - 1]).collect();
    let cabled = GarsideNF::from_word(&alpha.alpha.to_word().cable(&pos_widths)?);
    Ok(BrMorphism { source, alpha: positional.then(&cabled)? })
}

fn reorder<T: Clone>(items: &[T], a: &Permutation) -> Vec<T> {
    let inv = a.inverse();
    (1..=items.len()).map(|p| items[inv.apply(p) - 1].clone()).collect()
}

/// Both routes around the square defining θ_k(α; f_1..f_k): (α_* on the
/// targets)∘(f's in a-order) and (f's in b-order)∘(α_* on the sources).
pub fn theta_routes<A: BraidedMonCat>(cat: &A, m: &BrMorphism, fs: &[A::Mor]) -> Result<(A::Mor, A::Mor)> {
    let k = m.arity();
    if fs.len() != k {
        return dim_err(format!("theta_{k} with {} morphisms", fs.len()));
    }
    let b = m.target();
    let xs: Vec<A::Obj> = fs.iter().map(|f| cat.source(f)).collect();
    let ys: Vec<A::Obj> = fs.iter().map(|f| cat.target(f)).collect();
    let tensor = |v: Vec<A::Mor>| -> Result<A::Mor> {
        v.iter().try_fold(cat.identity(&cat.unit()), |acc, f| cat.tensor_mor(&acc, f))
    };
    let f_a = tensor(reorder(fs, &m.source))?;
    let f_b = tensor(reorder(fs, &b))?;
    let alpha_x = braid_action(cat, &reorder(&xs, &m.source), &m.alpha)?;
    let alpha_y = braid_action(cat, &reorder(&ys, &m.source), &m.alpha)?;
    Ok((cat.compose(&alpha_y, &f_a)?, cat.compose(&f_b, &alpha_x)?))
}

/// θ_k(α; f_1..f_k); errors if the defining square fails to commute.
pub fn theta_k<A: BraidedMonCat>(cat: &A, m: &BrMorphism, fs: &[A::Mor]) -> Result<A::Mor> {
    let (l, r) = theta_routes(cat, m, fs)?;
    if l != r {
        return Err(Error::Invalid(format!("theta square does not commute: {l:?} vs {r:?}")));
    }
    Ok(l)
}

/// θ_k for 𝖲𝗒𝗆: the morphism a → b is b∘a⁻¹ acting through the symmetry.
pub fn theta_sym<A: BraidedMonCat>(cat: &A, a: &Permutation, b: &Permutation, fs: &[A::Mor]) -> Result<A::Mor> {
    if !super::fixtures::is_symmetric(cat) {
        return Err(Error::Rejected(format!("{} is not symmetric", cat.name())));
    }
    if a.degree() != fs.len() || b.degree() != fs.len() {
        return dim_err("arity mismatch");
    }
    let sigma = b.after(&a.inverse());
    let ys: Vec<A::Obj> = fs.iter().map(|f| cat.target(f)).collect();
    let f_a = reorder(fs, a).iter().try_fold(cat.identity(&cat.unit()), |acc, f| cat.tensor_mor(&acc, f))?;
    cat.compose(&perm_action(cat, &reorder(&ys, a), &sigma)?, &f_a)
}

fn random_mor<A: BraidedMonCat>(cat: &A, rng: &mut Rng) -> A::Mor {
    let objs = cat.objects();
    loop {
        let a = &objs[rng.gen_range(0..objs.len())];
        if let Some(f) = super::monoidal::arrow_from(cat, a, rng) {
            return f;
        }
    }
}

fn random_br(rng: &mut Rng, k: usize, len: usize) -> BrMorphism {
    BrMorphism { source: random::permutation(rng, k), alpha: random::braid(rng, k, len) }
}

/// Operad-algebra laws of θ on random instances: the defining square, the
/// unit, functoriality in 𝖡𝗋(k) and compatibility with γ.
pub fn check_operad_algebra<A: BraidedMonCat>(cat: &A, samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("br-algebra {}", cat.name()));
    for s in 0..samples {
        let f = random_mor(cat, rng);
        let unit = theta_k(cat, &BrMorphism::identity(Permutation::identity(1)), std::slice::from_ref(&f));
        r.record(unit.as_ref().ok() == Some(&f), || format!("unit #{s} {f:?}"), || format!("{unit:?}"));

        let k = rng.gen_range(0..=3);
        let fs: Vec<A::Mor> = (0..k).map(|_| random_mor(cat, rng)).collect();
        let m = random_br(rng, k, 4);
        let sq = theta_routes(cat, &m, &fs);
        r.record(
            matches!(&sq, Ok((x, y)) if x == y),
            || format!("square #{s} {m:?} {fs:?}"),
            || format!("{sq:?}"),
        );

        // θ(β∘α; g∘f) = θ(β; g)∘θ(α; f)
        let gs: Vec<A::Mor> = fs.iter().map(|f| random_mor_from(cat, &cat.target(f), rng)).collect();
        let m2 = BrMorphism { source: m.target(), alpha: random::braid(rng, k, 4) };
        let lhs = compose(&m2, &m).and_then(|mm| {
            let gf: Vec<A::Mor> = gs.iter().zip(&fs).map(|(g, f)| cat.compose(g, f)).collect::<Result<_>>()?;
            theta_k(cat, &mm, &gf)
        });
        let rhs = theta_k(cat, &m, &fs).and_then(|x| cat.compose(&theta_k(cat, &m2, &gs)?, &x));
        r.record(
            matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y),
            || format!("functorial #{s} {m:?} {m2:?}"),
            || format!("{lhs:?} vs {rhs:?}"),
        );

        // θ(γ(α; β⃗); f⃗) = θ(α; θ(β_1; ..), ..)
        let betas: Vec<BrMorphism> = (0..k)
            .map(|_| {
                let j = rng.gen_range(0..=2);
                random_br(rng, j, 3)
            })
            .collect();
        let mut inner = Vec::new();
        let mut flat = Vec::new();
        for b in &betas {
            let fs_b: Vec<A::Mor> = (0..b.arity()).map(|_| random_mor(cat, rng)).collect();
            inner.push(theta_k(cat, b, &fs_b));
            flat.extend(fs_b);
        }
        let lhs = gamma_morphism(&m, &betas).and_then(|g| theta_k(cat, &g, &flat));
        let rhs = inner.into_iter().collect::<Result<Vec<_>>>().and_then(|xs| theta_k(cat, &m, &xs));
        r.record(
            matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y),
            || format!("gamma #{s} {m:?} {betas:?}"),
            || format!("{lhs:?} vs {rhs:?}"),
        );
    }
    r
}

fn random_mor_from<A: BraidedMonCat>(cat: &A, a: &A::Obj, rng: &mut Rng) -> A::Mor {
    super::monoidal::arrow_from(cat, a, rng).unwrap_or_else(|| cat.identity(a))
}

/// ⊗ and c as recovered from θ: x⊗y = θ_2(1; id, id) and c = θ_2(ζ; id, id).
pub fn recovered_structure<A: BraidedMonCat>(cat: &A, x: &A::Obj, y: &A::Obj) -> Result<(A::Mor, A::Mor)> {
    let ids = [cat.identity(x), cat.identity(y)];
    let one = Permutation::identity(2);
    let tensor = theta_k(cat, &BrMorphism::identity(one.clone()), &ids)?;
    let c = theta_k(cat, &BrMorphism::new(one, GarsideNF::parse(2, "z1")?)?, &ids)?;
    debug_assert_eq!(cat.source(&tensor), tensor_all(cat, &[x.clone(), y.clone()]));
    Ok((tensor, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{BraidGroupoid, FinSetBij, TableCat};
    use crate::rng;

    #[test]
    fn gamma_on_objects() {
        let t = Permutation::transposition(2, 1);
        let id2 = Permutation::identity(2);
        let g = gamma_object(&t, &[id2.clone(), Permutation::identity(1)]).unwrap();
        assert_eq!(g.one_line(), vec![2, 3, 1]);
        let g = gamma_object(&id2, &[t.clone(), Permutation::identity(1)]).unwrap();
        assert_eq!(g.one_line(), vec![2, 1, 3]);
    }

    #[test]
    fn gamma_morphism_is_typed() {
        let mut g = rng(4);
        for _ in 0..200 {
            let k = g.gen_range(0..4);
            let m = random_br(&mut g, k, 5);
            let bs: Vec<BrMorphism> = (0..k)
                .map(|_| {
                    let j = g.gen_range(0..3);
                    random_br(&mut g, j, 4)
                })
                .collect();
            let gm = gamma_morphism(&m, &bs).unwrap();
            let tgts: Vec<Permutation> = bs.iter().map(|b| b.target()).collect();
            assert_eq!(gm.target(), gamma_object(&m.target(), &tgts).unwrap());
        }
    }

    #[test]
    fn hom_sets_are_torsors() {
        let lvl = BrOperadLevel::new(3, Flavor::Symmetric);
        let a = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let alpha = GarsideNF::parse(3, "z1 z2^-1 z1").unwrap();
        let b = alpha.permutation().after(&a);
        assert!(lvl.is_morphism(&a, &b, &alpha));
        assert!(!lvl.is_morphism(&a, &a, &alpha));
        let br = BrOperadLevel::new(3, Flavor::Braided);
        let a = GarsideNF::parse(3, "z2 z2").unwrap();
        let b = GarsideNF::parse(3, "z1").unwrap();
        let w = br.braided_hom(&a, &b).unwrap();
        assert!(br.is_braided_morphism(&a, &b, &w));
    }

    #[test]
    fn theta_recovers_braiding() {
        let bg = BraidGroupoid::new(4, 6);
        let (t, c) = recovered_structure(&bg, &2, &1).unwrap();
        assert!(t.is_identity() && t.n == 3);
        assert_eq!(c, bg.braiding(&2, &1));
    }

    #[test]
    fn algebra_laws_hold() {
        let mut g = rng(9);
        for r in [
            check_operad_algebra(&TableCat::z2(), 100, &mut g),
            check_operad_algebra(&BraidGroupoid::new(3, 4), 100, &mut g),
            check_operad_algebra(&FinSetBij::new(3), 100, &mut g),
        ] {
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn sym_flavor_needs_symmetry() {
        let fs = FinSetBij::new(3);
        let a = Permutation::identity(2);
        let b = Permutation::transposition(2, 1);
        let ids = [fs.identity(&1), fs.identity(&2)];
        assert_eq!(theta_sym(&fs, &a, &b, &ids).unwrap(), fs.braiding(&1, &2));
        assert!(theta_sym(&BraidGroupoid::new(3, 3), &a, &b, &[GarsideNF::identity(1), GarsideNF::identity(1)]).is_err());
    }
}
