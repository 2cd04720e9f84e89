//! Built-in braided strict monoidal categories: finite tables (groups,
//! JSON files), the braid groupoid and finite sets with bijections.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::monoidal::BraidedMonCat;
use crate::binj::random;
use crate::braid::{chi, GarsideNF, Permutation};
use crate::error::{dim_err, Error, Result};
use crate::Rng;

/// A finite braided strict monoidal category given by tables.
#[derive(Debug, Clone)]
pub struct TableCat {
    pub name: String,
    pub objects: Vec<String>,
    pub unit: usize,
    tensor_obj: Vec<Vec<usize>>,
    pub morphisms: Vec<(String, usize, usize)>,
    identities: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    tensor_mor: HashMap<(usize, usize), usize>,
    braiding: Vec<Vec<usize>>,
    homs: HashMap<(usize, usize), Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawMor {
    name: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
struct RawTableCat {
    name: String,
    objects: Vec<String>,
    unit: String,
    tensor: Vec<[String; 3]>,
    morphisms: Vec<RawMor>,
    identities: HashMap<String, String>,
    compose: Vec<[String; 3]>,
    tensor_morphisms: Vec<[String; 3]>,
    braiding: Vec<[String; 3]>,
}

impl TableCat {
    #[allow(clippy::too_many_arguments)]
    fn build(
        name: String,
        objects: Vec<String>,
        unit: usize,
        tensor_obj: Vec<Vec<usize>>,
        morphisms: Vec<(String, usize, usize)>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
        tensor_mor: HashMap<(usize, usize), usize>,
        braiding: Vec<Vec<usize>>,
    ) -> Self {
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, (_, s, t)) in morphisms.iter().enumerate() {
            homs.entry((*s, *t)).or_default().push(i);
        }
        TableCat { name, objects, unit, tensor_obj, morphisms, identities, compose, tensor_mor, braiding, homs }
    }

    /// An abelian group as a discrete category: objects are elements, only
    /// identities, tensor is the group law, trivial braiding.
    pub fn discrete_group(name: &str, table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("group table must be square".into()));
        }
        let objects: Vec<String> = (0..n).map(|g| g.to_string()).collect();
        let morphisms = (0..n).map(|g| (format!("id{g}"), g, g)).collect();
        let compose = (0..n).map(|g| ((g, g), g)).collect();
        let tensor_mor = (0..n).flat_map(|g| (0..n).map(move |h| ((g, h), table[g][h]))).collect();
        let braiding = (0..n).map(|g| (0..n).map(|h| table[g][h]).collect()).collect();
        Ok(Self::build(name.into(), objects, 0, table.to_vec(), morphisms, (0..n).collect(), compose, tensor_mor, braiding))
    }

    /// An abelian group as a one-object category with tensor = composition
    /// and braiding the given element.
    pub fn one_object_group(name: &str, table: &[Vec<usize>], braiding_element: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 || braiding_element >= n {
            return Err(Error::Invalid("bad group data".into()));
        }
        let morphisms = (0..n).map(|g| (format!("g{g}"), 0, 0)).collect();
        let compose: HashMap<_, _> = (0..n).flat_map(|g| (0..n).map(move |h| ((g, h), table[g][h]))).collect();
        Ok(Self::build(
            name.into(),
            vec!["u".into()],
            0,
            vec![vec![0]],
            morphisms,
            vec![0],
            compose.clone(),
            compose,
            vec![vec![braiding_element]],
        ))
    }

    pub fn terminal() -> Self {
        Self::discrete_group("terminal", &[vec![0]]).expect("trivial group")
    }

    pub fn z2() -> Self {
        Self::discrete_group("z2", &[vec![0, 1], vec![1, 0]]).expect("Z/2")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: RawTableCat =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("braided category: {e}")))?;
        let obj = |s: &str| raw.objects.iter().position(|o| o == s).ok_or_else(|| Error::Parse(format!("unknown object '{s}'")));
        let no = raw.objects.len();
        let mut morphisms = Vec::new();
        for m in &raw.morphisms {
            morphisms.push((m.name.clone(), obj(&m.source)?, obj(&m.target)?));
        }
        let mor = |s: &str| morphisms.iter().position(|m| m.0 == s).ok_or_else(|| Error::Parse(format!("unknown morphism '{s}'")));
        let mut tensor_obj = vec![vec![usize::MAX; no]; no];
        for [a, b, c] in &raw.tensor {
            tensor_obj[obj(a)?][obj(b)?] = obj(c)?;
        }
        if tensor_obj.iter().flatten().any(|&v| v == usize::MAX) {
            return Err(Error::Parse("object tensor table incomplete".into()));
        }
        let mut identities = Vec::new();
        for o in &raw.objects {
            identities.push(mor(raw.identities.get(o).ok_or_else(|| Error::Parse(format!("no identity for '{o}'")))?)?);
        }
        let mut compose = HashMap::new();
        for [g, f, h] in &raw.compose {
            compose.insert((mor(g)?, mor(f)?), mor(h)?);
        }
        let mut tensor_mor = HashMap::new();
        for [f, g, h] in &raw.tensor_morphisms {
            tensor_mor.insert((mor(f)?, mor(g)?), mor(h)?);
        }
        let mut braiding = vec![vec![usize::MAX; no]; no];
        for [a, b, c] in &raw.braiding {
            braiding[obj(a)?][obj(b)?] = mor(c)?;
        }
        if braiding.iter().flatten().any(|&v| v == usize::MAX) {
            return Err(Error::Parse("braiding table incomplete".into()));
        }
        let unit = obj(&raw.unit)?;
        // strictness of the object monoid is a precondition, not a check
        for a in 0..no {
            for b in 0..no {
                for c in 0..no {
                    if tensor_obj[tensor_obj[a][b]][c] != tensor_obj[a][tensor_obj[b][c]] {
                        return Err(Error::Rejected("object tensor table is not associative".into()));
                    }
                }
            }
            if tensor_obj[unit][a] != a || tensor_obj[a][unit] != a {
                return Err(Error::Rejected("unit object is not a two-sided unit".into()));
            }
        }
        Ok(Self::build(raw.name, raw.objects, unit, tensor_obj, morphisms, identities, compose, tensor_mor, braiding))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let o = |i: usize| self.objects[i].clone();
        let m = |i: usize| self.morphisms[i].0.clone();
        let no = self.objects.len();
        let mut tensor = Vec::new();
        let mut braiding = Vec::new();
        for a in 0..no {
            for b in 0..no {
                tensor.push([o(a), o(b), o(self.tensor_obj[a][b])]);
                braiding.push([o(a), o(b), m(self.braiding[a][b])]);
            }
        }
        let mut compose: Vec<[String; 3]> = self.compose.iter().map(|(&(g, f), &h)| [m(g), m(f), m(h)]).collect();
        compose.sort();
        let mut tensor_morphisms: Vec<[String; 3]> = self.tensor_mor.iter().map(|(&(f, g), &h)| [m(f), m(g), m(h)]).collect();
        tensor_morphisms.sort();
        let raw = RawTableCat {
            name: self.name.clone(),
            objects: self.objects.clone(),
            unit: o(self.unit),
            tensor,
            morphisms: self.morphisms.iter().map(|(n, s, t)| RawMor { name: n.clone(), source: o(*s), target: o(*t) }).collect(),
            identities: (0..no).map(|i| (o(i), m(self.identities[i]))).collect(),
            compose,
            tensor_morphisms,
            braiding,
        };
        serde_json::to_value(raw).expect("serializable")
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects.iter().position(|o| o == name).ok_or_else(|| Error::Parse(format!("unknown object '{name}'")))
    }

    pub fn morphism_index(&self, name: &str) -> Result<usize> {
        self.morphisms.iter().position(|m| m.0 == name).ok_or_else(|| Error::Parse(format!("unknown morphism '{name}'")))
    }

    /// Whether c_{b,a}∘c_{a,b} = id for all objects.
    pub fn is_symmetric(&self) -> bool {
        is_symmetric(self)
    }
}

pub(crate) fn is_symmetric<A: BraidedMonCat>(cat: &A) -> bool {
    let objs = cat.objects();
    objs.iter().all(|a| {
        objs.iter().all(|b| {
            let c1 = cat.braiding(a, b);
            let c2 = cat.braiding(b, a);
            cat.compose(&c2, &c1).ok() == Some(cat.identity(&cat.tensor_obj(a, b)))
        })
    })
}

impl BraidedMonCat for TableCat {
    type Obj = usize;
    type Mor = usize;

    fn name(&self) -> String {
        self.name.clone()
    }
    fn unit(&self) -> usize {
        self.unit
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        self.tensor_obj[*a][*b]
    }
    fn source(&self, f: &usize) -> usize {
        self.morphisms[*f].1
    }
    fn target(&self, f: &usize) -> usize {
        self.morphisms[*f].2
    }
    fn identity(&self, a: &usize) -> usize {
        self.identities[*a]
    }
    fn compose(&self, g: &usize, f: &usize) -> Result<usize> {
        self.compose.get(&(*g, *f)).copied().ok_or_else(|| Error::Invalid(format!("no composite {g}∘{f} in {}", self.name)))
    }
    fn tensor_mor(&self, f: &usize, g: &usize) -> Result<usize> {
        self.tensor_mor.get(&(*f, *g)).copied().ok_or_else(|| Error::Invalid(format!("no tensor {f}⊗{g} in {}", self.name)))
    }
    fn braiding(&self, a: &usize, b: &usize) -> usize {
        self.braiding[*a][*b]
    }
    fn inverse(&self, f: &usize) -> Option<usize> {
        let (s, t) = (self.source(f), self.target(f));
        self.homs.get(&(t, s))?.iter().copied().find(|g| {
            self.compose(g, f).ok() == Some(self.identities[s]) && self.compose(f, g).ok() == Some(self.identities[t])
        })
    }
    fn objects(&self) -> Vec<usize> {
        (0..self.objects.len()).collect()
    }
    fn hom_sample(&self, a: &usize, b: &usize, rng: &mut Rng, count: usize) -> Vec<usize> {
        let all = self.homs.get(&(*a, *b)).cloned().unwrap_or_default();
        if all.len() <= count {
            return all;
        }
        all.choose_multiple(rng, count).copied().collect()
    }
    fn hom_all(&self, a: &usize, b: &usize) -> Option<Vec<usize>> {
        Some(self.homs.get(&(*a, *b)).cloned().unwrap_or_default())
    }
}

/// The braid groupoid: objects n (strand counts), morphisms 𝓑_n, tensor by
/// block sum, braiding χ. Objects are truncated at `max_obj` and sampled
/// morphisms are words of length ≤ `word_len`.
#[derive(Debug, Clone)]
pub struct BraidGroupoid {
    pub max_obj: usize,
    pub word_len: usize,
}

impl BraidGroupoid {
    pub fn new(max_obj: usize, word_len: usize) -> Self {
        BraidGroupoid { max_obj, word_len }
    }
}

impl BraidedMonCat for BraidGroupoid {
    type Obj = usize;
    type Mor = GarsideNF;

    fn name(&self) -> String {
        format!("braid-groupoid(n<={},len<={})", self.max_obj, self.word_len)
    }
    fn unit(&self) -> usize {
        0
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a + b
    }
    fn source(&self, f: &GarsideNF) -> usize {
        f.n
    }
    fn target(&self, f: &GarsideNF) -> usize {
        f.n
    }
    fn identity(&self, a: &usize) -> GarsideNF {
        GarsideNF::identity(*a)
    }
    fn compose(&self, g: &GarsideNF, f: &GarsideNF) -> Result<GarsideNF> {
        f.then(g)
    }
    fn tensor_mor(&self, f: &GarsideNF, g: &GarsideNF) -> Result<GarsideNF> {
        Ok(f.block_sum(g))
    }
    fn braiding(&self, a: &usize, b: &usize) -> GarsideNF {
        GarsideNF::from_word(&chi(*a, *b))
    }
    fn inverse(&self, f: &GarsideNF) -> Option<GarsideNF> {
        Some(f.inverse())
    }
    fn objects(&self) -> Vec<usize> {
        (0..=self.max_obj).collect()
    }
    fn hom_sample(&self, a: &usize, b: &usize, rng: &mut Rng, count: usize) -> Vec<GarsideNF> {
        if a != b {
            return Vec::new();
        }
        (0..count).map(|_| random::braid(rng, *a, self.word_len)).collect()
    }
}

/// Finite sets and bijections (objects n, morphisms Σ_n), truncated at `max`.
#[derive(Debug, Clone)]
pub struct FinSetBij {
    pub max: usize,
}

impl FinSetBij {
    pub fn new(max: usize) -> Self {
        FinSetBij { max }
    }
}

fn all_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (1..=n).collect();
    fn rec(k: usize, v: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if k == v.len() {
            out.push(Permutation::from_one_line(v).expect("permutation"));
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            rec(k + 1, v, out);
            v.swap(k, i);
        }
    }
    rec(0, &mut v, &mut out);
    out
}

impl BraidedMonCat for FinSetBij {
    type Obj = usize;
    type Mor = Permutation;

    fn name(&self) -> String {
        format!("finite-sets(n<={})", self.max)
    }
    fn unit(&self) -> usize {
        0
    }
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a + b
    }
    fn source(&self, f: &Permutation) -> usize {
        f.degree()
    }
    fn target(&self, f: &Permutation) -> usize {
        f.degree()
    }
    fn identity(&self, a: &usize) -> Permutation {
        Permutation::identity(*a)
    }
    fn compose(&self, g: &Permutation, f: &Permutation) -> Result<Permutation> {
        if g.degree() != f.degree() {
            return dim_err("bijections of different sets");
        }
        Ok(g.after(f))
    }
    fn tensor_mor(&self, f: &Permutation, g: &Permutation) -> Result<Permutation> {
        Ok(f.block_sum(g))
    }
    fn braiding(&self, a: &usize, b: &usize) -> Permutation {
        chi(*a, *b).underlying_permutation()
    }
    fn inverse(&self, f: &Permutation) -> Option<Permutation> {
        Some(f.inverse())
    }
    fn objects(&self) -> Vec<usize> {
        (0..=self.max).collect()
    }
    fn hom_sample(&self, a: &usize, b: &usize, rng: &mut Rng, count: usize) -> Vec<Permutation> {
        if a != b {
            return Vec::new();
        }
        if *a <= 4 {
            let all = all_perms(*a);
            if all.len() <= count {
                return all;
            }
            return all.choose_multiple(rng, count).cloned().collect();
        }
        (0..count).map(|_| random::permutation(rng, *a)).collect()
    }
    fn hom_all(&self, a: &usize, b: &usize) -> Option<Vec<Permutation>> {
        if a != b {
            return Some(Vec::new());
        }
        (*a <= 6).then(|| all_perms(*a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::monoidal::{braid_action, check_braided_monoidal};
    use crate::rng;

    #[test]
    fn fixtures_are_braided_monoidal() {
        let mut g = rng(1);
        let r = check_braided_monoidal(&TableCat::terminal(), 20, &mut g);
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_braided_monoidal(&TableCat::z2(), 50, &mut g);
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_braided_monoidal(&BraidGroupoid::new(4, 6), 100, &mut g);
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_braided_monoidal(&FinSetBij::new(4), 100, &mut g);
        assert!(r.passed(), "{:?}", r.failures);
        let z2 = [vec![0, 1], vec![1, 0]];
        let r = check_braided_monoidal(&TableCat::one_object_group("z2-one", &z2, 0).unwrap(), 20, &mut g);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn corrupted_braiding_fails() {
        let z2 = [vec![0, 1], vec![1, 0]];
        let bad = TableCat::one_object_group("z2-bad", &z2, 1).unwrap();
        let r = check_braided_monoidal(&bad, 20, &mut rng(0));
        assert!(!r.passed());
        assert!(r.failures.iter().any(|f| f.key.starts_with("hexagon")));
        assert!(r.failures.iter().any(|f| f.key.starts_with("braiding-unit")));
        assert!(!r.failures.iter().any(|f| f.key.starts_with("naturality")));
    }

    #[test]
    fn json_roundtrip() {
        let z = TableCat::z2();
        let back = TableCat::from_json(&z.to_json()).unwrap();
        assert_eq!(back.to_json(), z.to_json());
    }

    #[test]
    fn braid_action_basics() {
        let bg = BraidGroupoid::new(4, 6);
        let id = braid_action(&bg, &[1, 2], &GarsideNF::identity(2)).unwrap();
        assert!(id.is_identity() && id.n == 3);
        let z = GarsideNF::parse(2, "z1").unwrap();
        assert_eq!(braid_action(&bg, &[2, 1], &z).unwrap(), bg.braiding(&2, &1));
        // the braid relation acts equally (Yang-Baxter)
        for objs in [[1, 2, 1], [0, 2, 3], [2, 2, 1]] {
            let a = braid_action(&bg, &objs, &GarsideNF::parse(3, "z1 z2 z1").unwrap()).unwrap();
            let w = crate::braid::BraidWord::parse(3, "z2 z1 z2").unwrap();
            let mut cur = objs.to_vec();
            let mut acc = GarsideNF::identity(objs.iter().sum());
            for l in w.letters {
                let single = GarsideNF::from_word(&crate::braid::BraidWord::new(3, vec![l]).unwrap());
                let step = braid_action(&bg, &cur, &single).unwrap();
                acc = acc.then(&step).unwrap();
                cur.swap(l.index - 1, l.index);
            }
            assert_eq!(a, acc);
        }
    }
}
