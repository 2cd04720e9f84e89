//! The categories ℳ (order-preserving injections), ℐ (injections) and 𝔅
//! (braided injections). A braided injection m → n is stored in its unique
//! decomposition α = Υ(μ)∘ζ with μ ∈ ℳ(m,n) and ζ ∈ 𝓑_m.

mod presentation;
pub mod random;

pub use presentation::{from_word, parse_gen_word, relation_instances, verify_presentation, Gen, RelationInstance};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{chi, GarsideNF, Permutation};
use crate::error::{dim_err, Error, Result};

/// Order-preserving injection m → n, given by its strictly increasing image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderInj {
    n: usize,
    image: Vec<usize>,
}

impl OrderInj {
    pub fn new(n: usize, image: Vec<usize>) -> Result<Self> {
        if image.windows(2).any(|w| w[0] >= w[1]) || image.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::Invalid(format!("{image:?} is not an order-preserving injection into {n}")));
        }
        Ok(OrderInj { n, image })
    }

    pub fn identity(n: usize) -> Self {
        OrderInj { n, image: (1..=n).collect() }
    }

    /// ∂^i_n : n → n+1, the injection missing i.
    pub fn partial(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i > n + 1 {
            return dim_err(format!("d{i}@{n} needs 1 <= i <= {}", n + 1));
        }
        Ok(OrderInj { n: n + 1, image: (1..=n + 1).filter(|&k| k != i).collect() })
    }

    /// Inclusion of m as the block {offset+1..offset+m} of n.
    pub fn block(m: usize, offset: usize, n: usize) -> Result<Self> {
        Self::new(n, (offset + 1..=offset + m).collect())
    }

    pub fn source(&self) -> usize {
        self.image.len()
    }

    pub fn target(&self) -> usize {
        self.n
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// Positions of the target not hit, increasing.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n).filter(|k| self.image.binary_search(k).is_err()).collect()
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &OrderInj) -> Result<OrderInj> {
        if other.n != self.source() {
            return dim_err(format!("compose {}→{} after {}→{}", self.source(), self.n, other.source(), other.n));
        }
        Ok(OrderInj { n: self.n, image: other.image.iter().map(|&i| self.apply(i)).collect() })
    }

    pub fn tensor(&self, other: &OrderInj) -> OrderInj {
        let mut image = self.image.clone();
        image.extend(other.image.iter().map(|v| v + self.n));
        OrderInj { n: self.n + other.n, image }
    }

    pub fn as_injection(&self) -> Injection {
        Injection { n: self.n, images: self.image.clone() }
    }

    /// The missing positions inserted one at a time, in increasing order:
    /// self = ∂^{j_r}∘⋯∘∂^{j_1}.
    pub fn partial_factors(&self) -> Vec<(usize, usize)> {
        let m = self.source();
        self.complement().into_iter().enumerate().map(|(k, j)| (j, m + k)).collect()
    }
}

/// Injection m → n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Injection {
    pub n: usize,
    pub images: Vec<usize>,
}

impl Injection {
    pub fn new(n: usize, images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Invalid(format!("{images:?} is not an injection into {n}")));
            }
            seen[v] = true;
        }
        Ok(Injection { n, images })
    }

    pub fn identity(n: usize) -> Self {
        Injection { n, images: (1..=n).collect() }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        Injection { n: p.degree(), images: p.one_line() }
    }

    pub fn source(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Injection) -> Result<Injection> {
        if other.n != self.source() {
            return dim_err("injection composition");
        }
        Ok(Injection { n: self.n, images: other.images.iter().map(|&i| self.apply(i)).collect() })
    }

    pub fn tensor(&self, other: &Injection) -> Injection {
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|v| v + self.n));
        Injection { n: self.n + other.n, images }
    }
}

/// f = μ∘σ with μ order-preserving on the same image and σ a permutation.
pub fn decompose_injection(f: &Injection) -> (OrderInj, Permutation) {
    let mut image = f.images.clone();
    image.sort_unstable();
    let sigma: Vec<usize> = f.images.iter().map(|v| image.binary_search(v).unwrap() + 1).collect();
    (OrderInj { n: f.n, image }, Permutation::from_one_line(&sigma).expect("ranks form a permutation"))
}

/// The order-preserving injection whose image is π(ξ)(image μ).
pub fn pushforward(xi: &GarsideNF, mu: &OrderInj) -> Result<OrderInj> {
    if xi.n != mu.n {
        return dim_err(format!("push B_{} along {}→{}", xi.n, mu.source(), mu.n));
    }
    let p = xi.permutation();
    let mut image: Vec<usize> = mu.image.iter().map(|&i| p.apply(i)).collect();
    image.sort_unstable();
    Ok(OrderInj { n: mu.n, image })
}

/// ξ with the strands outside image μ deleted.
pub fn pullback(mu: &OrderInj, xi: &GarsideNF) -> Result<GarsideNF> {
    if xi.n != mu.n {
        return dim_err(format!("pull B_{} back along {}→{}", xi.n, mu.source(), mu.n));
    }
    Ok(GarsideNF::from_word(&xi.to_word().delete_strands(&mu.complement())?))
}

/// A morphism of 𝔅.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidedInjection {
    pub mu: OrderInj,
    pub zeta: GarsideNF,
}

impl BraidedInjection {
    pub fn new(mu: OrderInj, zeta: GarsideNF) -> Result<Self> {
        if zeta.n != mu.source() {
            return dim_err(format!("braid on {} strands with source {}", zeta.n, mu.source()));
        }
        Ok(BraidedInjection { mu, zeta })
    }

    pub fn identity(n: usize) -> Self {
        BraidedInjection { mu: OrderInj::identity(n), zeta: GarsideNF::identity(n) }
    }

    pub fn from_braid(zeta: GarsideNF) -> Self {
        BraidedInjection { mu: OrderInj::identity(zeta.n), zeta }
    }

    pub fn source(&self) -> usize {
        self.mu.source()
    }

    pub fn target(&self) -> usize {
        self.mu.target()
    }

    pub fn is_braid(&self) -> bool {
        self.source() == self.target()
    }

    /// Inverse of a morphism whose source equals its target.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_braid() {
            return Err(Error::Invalid("only automorphisms are invertible in 𝔅".into()));
        }
        Ok(Self::from_braid(self.zeta.inverse()))
    }

    /// Parses `{"m":2,"n":3,"image":[1,3],"braid":"z1"}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: RawMorphism =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("braided injection: {e}")))?;
        let mu = OrderInj::new(raw.n, raw.image)?;
        if mu.source() != raw.m {
            return dim_err(format!("image has {} entries but m = {}", mu.source(), raw.m));
        }
        let zeta = GarsideNF::parse(raw.m, &raw.braid)?;
        Ok(BraidedInjection { mu, zeta })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.source(),
            "n": self.target(),
            "image": self.mu.image,
            "braid": self.zeta.to_word().to_string(),
        })
    }
}

#[derive(Deserialize)]
struct RawMorphism {
    m: usize,
    n: usize,
    image: Vec<usize>,
    #[serde(default)]
    braid: String,
}

impl fmt::Display for BraidedInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// g∘f = (ν∘ξ_*(μ), μ^*(ξ)∘ζ) for f = (μ,ζ), g = (ν,ξ).
pub fn compose(g: &BraidedInjection, f: &BraidedInjection) -> Result<BraidedInjection> {
    if f.target() != g.source() {
        return dim_err(format!("compose {}→{} after {}→{}", g.source(), g.target(), f.source(), f.target()));
    }
    let mu = g.mu.after(&pushforward(&g.zeta, &f.mu)?)?;
    let zeta = f.zeta.then(&pullback(&f.mu, &g.zeta)?)?;
    Ok(BraidedInjection { mu, zeta })
}

pub fn upsilon(mu: &OrderInj) -> BraidedInjection {
    BraidedInjection { mu: mu.clone(), zeta: GarsideNF::identity(mu.source()) }
}

/// Underlying injection ᾱ(i) = μ(π(ζ)(i)).
pub fn pi(f: &BraidedInjection) -> Injection {
    let p = f.zeta.permutation();
    Injection { n: f.target(), images: (1..=f.source()).map(|i| f.mu.apply(p.apply(i))).collect() }
}

pub fn tensor(f: &BraidedInjection, g: &BraidedInjection) -> BraidedInjection {
    BraidedInjection { mu: f.mu.tensor(&g.mu), zeta: f.zeta.block_sum(&g.zeta) }
}

pub fn chi_morphism(m: usize, n: usize) -> BraidedInjection {
    BraidedInjection::from_braid(GarsideNF::from_word(&chi(m, n)))
}

/// ζ^i_n or its inverse as a morphism n → n.
pub fn zeta_gen(i: usize, n: usize, positive: bool) -> Result<BraidedInjection> {
    if i == 0 || i >= n {
        return dim_err(format!("z{i}@{n} needs 1 <= i < {n}"));
    }
    let w = crate::braid::BraidWord::new(n, vec![crate::braid::Letter { index: i, positive }])?;
    Ok(BraidedInjection::from_braid(GarsideNF::from_word(&w)))
}

/// ∂^i_n = Υ of the ℳ-generator.
pub fn partial_gen(i: usize, n: usize) -> Result<BraidedInjection> {
    Ok(upsilon(&OrderInj::partial(i, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, s: &str) -> GarsideNF {
        GarsideNF::parse(n, s).unwrap()
    }

    #[test]
    fn identities_are_units() {
        let f = BraidedInjection::new(OrderInj::new(4, vec![1, 3, 4]).unwrap(), nf(3, "z1 z2^-1")).unwrap();
        assert_eq!(compose(&BraidedInjection::identity(4), &f).unwrap(), f);
        assert_eq!(compose(&f, &BraidedInjection::identity(3)).unwrap(), f);
    }

    #[test]
    fn figure_equality() {
        let d = partial_gen(2, 3).unwrap();
        let id2 = BraidedInjection::identity(2);
        let lhs = compose(&tensor(&d, &id2), &chi_morphism(2, 3)).unwrap();
        let rhs = compose(&chi_morphism(2, 4), &tensor(&id2, &d)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!((lhs.source(), lhs.target()), (5, 6));
    }

    #[test]
    fn pushforward_and_pullback_examples() {
        let z = nf(2, "z1");
        let inc = OrderInj::new(2, vec![1]).unwrap();
        assert_eq!(pushforward(&z, &inc).unwrap().image(), &[2]);
        assert_eq!(pushforward(&GarsideNF::identity(2), &inc).unwrap(), inc);
        assert!(pullback(&inc, &z).unwrap().is_identity());
        let x = nf(3, "z2 z1^-1");
        assert_eq!(pullback(&OrderInj::identity(3), &x).unwrap(), x);
    }

    #[test]
    fn upsilon_and_pi() {
        let d = upsilon(&OrderInj::partial(1, 1).unwrap());
        assert_eq!(pi(&d).images, vec![2]);
        assert_eq!(upsilon(&OrderInj::identity(3)), BraidedInjection::identity(3));
        assert_eq!(pi(&chi_morphism(1, 1)).images, vec![2, 1]);
        let mu = OrderInj::new(5, vec![2, 4]).unwrap();
        assert_eq!(pi(&upsilon(&mu)), mu.as_injection());
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor(&BraidedInjection::identity(2), &BraidedInjection::identity(3)), BraidedInjection::identity(5));
        let f = chi_morphism(1, 1);
        let e = BraidedInjection::identity(0);
        assert_eq!(tensor(&e, &f), f);
        assert_eq!(tensor(&f, &e), f);
        assert_eq!(chi_morphism(3, 0), BraidedInjection::identity(3));
    }

    #[test]
    fn decompose_examples() {
        let (mu, s) = decompose_injection(&Injection::new(3, vec![1, 3]).unwrap());
        assert_eq!(mu.image(), &[1, 3]);
        assert!(s.is_identity());
        let (mu, s) = decompose_injection(&Injection::new(2, vec![2, 1]).unwrap());
        assert_eq!(mu, OrderInj::identity(2));
        assert_eq!(s.one_line(), vec![2, 1]);
    }

    #[test]
    fn json_roundtrip() {
        let v = serde_json::json!({"m":2,"n":3,"image":[1,3],"braid":"z1"});
        let f = BraidedInjection::from_json(&v).unwrap();
        assert_eq!(BraidedInjection::from_json(&f.to_json()).unwrap(), f);
        let bad = serde_json::json!({"m":3,"n":3,"image":[1,3],"braid":""});
        assert!(BraidedInjection::from_json(&bad).is_err());
    }

    #[test]
    fn partial_factorization_rebuilds() {
        let mu = OrderInj::new(6, vec![2, 3, 5]).unwrap();
        let mut acc = OrderInj::identity(3);
        for (j, k) in mu.partial_factors() {
            acc = OrderInj::partial(j, k).unwrap().after(&acc).unwrap();
        }
        assert_eq!(acc, mu);
    }
}
