//! Finite categories, braided strict monoidal categories given by oracles,
//! the operads 𝖡𝗋 and 𝖲𝗒𝗆 acting on them, and the Grothendieck construction
//! of a 𝔅-category.

pub mod fixtures;
pub mod groth;
pub mod monoidal;
pub mod operad;

pub use fixtures::{BraidGroupoid, FinSetBij, TableCat};
pub use groth::{BCategory, BCategoryMonoid, ConstantB, Groth, GrothMorphism, GrothObject};
pub use monoidal::{braid_action, check_braided_monoidal, perm_action, tensor_all, BraidedMonCat};

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDecl {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite category with an explicit composition table.
#[derive(Debug, Clone)]
pub struct FinCat {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDecl>,
    pub identities: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
}

#[derive(Serialize, Deserialize)]
struct RawHom {
    name: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
struct RawFinCat {
    objects: Vec<String>,
    homs: Vec<RawHom>,
    identities: HashMap<String, String>,
    compose: Vec<[String; 3]>,
}

impl FinCat {
    /// `compose` lists triples (g, f, g∘f).
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorphismDecl>,
        identities: Vec<usize>,
        compose: impl IntoIterator<Item = ((usize, usize), usize)>,
    ) -> Result<Self> {
        if identities.len() != objects.len() {
            return Err(Error::Invalid("one identity per object required".into()));
        }
        for m in &morphisms {
            if m.source >= objects.len() || m.target >= objects.len() {
                return Err(Error::Invalid(format!("morphism {} has unknown endpoint", m.name)));
            }
        }
        Ok(FinCat { objects, morphisms, identities, compose: compose.into_iter().collect() })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: RawFinCat = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("category: {e}")))?;
        let obj = |s: &str| {
            raw.objects.iter().position(|o| o == s).ok_or_else(|| Error::Parse(format!("unknown object '{s}'")))
        };
        let mut morphisms = Vec::new();
        for h in &raw.homs {
            morphisms.push(MorphismDecl { name: h.name.clone(), source: obj(&h.source)?, target: obj(&h.target)? });
        }
        let mor = |s: &str| {
            morphisms.iter().position(|m| m.name == s).ok_or_else(|| Error::Parse(format!("unknown morphism '{s}'")))
        };
        let mut identities = Vec::new();
        for o in &raw.objects {
            let name = raw.identities.get(o).ok_or_else(|| Error::Parse(format!("no identity for '{o}'")))?;
            identities.push(mor(name)?);
        }
        let mut table = Vec::new();
        for [g, f, gf] in &raw.compose {
            table.push(((mor(g)?, mor(f)?), mor(gf)?));
        }
        FinCat::new(raw.objects.clone(), morphisms, identities, table)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut compose: Vec<[String; 3]> = self
            .compose
            .iter()
            .map(|(&(g, f), &h)| [self.name(g).into(), self.name(f).into(), self.name(h).into()])
            .collect();
        compose.sort();
        let raw = RawFinCat {
            objects: self.objects.clone(),
            homs: self
                .morphisms
                .iter()
                .map(|m| RawHom {
                    name: m.name.clone(),
                    source: self.objects[m.source].clone(),
                    target: self.objects[m.target].clone(),
                })
                .collect(),
            identities: self
                .objects
                .iter()
                .zip(&self.identities)
                .map(|(o, &i)| (o.clone(), self.name(i).to_string()))
                .collect(),
            compose,
        };
        serde_json::to_value(raw).expect("serializable")
    }

    pub fn name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    pub fn source(&self, f: usize) -> usize {
        self.morphisms[f].source
    }

    pub fn target(&self, f: usize) -> usize {
        self.morphisms[f].target
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// g∘f when defined in the table.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.morphisms.len()).filter(|&f| self.source(f) == a && self.target(f) == b).collect()
    }

    pub fn terminal() -> Self {
        FinCat::new(
            vec!["*".into()],
            vec![MorphismDecl { name: "id".into(), source: 0, target: 0 }],
            vec![0],
            [((0, 0), 0)],
        )
        .expect("terminal category")
    }

    /// A finite group as a one-object category; `table[g][h]` = g·h, 0 the unit.
    pub fn group(table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Invalid("group table must be square".into()));
        }
        let morphisms = (0..n).map(|g| MorphismDecl { name: format!("g{g}"), source: 0, target: 0 }).collect();
        let compose = (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).map(|(g, h)| ((g, h), table[g][h]));
        FinCat::new(vec!["*".into()], morphisms, vec![0], compose.collect::<Vec<_>>())
    }

    pub fn cyclic_group(n: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::group(&table).expect("cyclic group table")
    }

    /// The poset generated by pairs (i, j) meaning i ≤ j.
    pub fn poset(names: &[&str], relations: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            le[i][i] = true;
        }
        for &(a, b) in relations {
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        let mut morphisms = Vec::new();
        let mut id_of = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                if le[i][j] {
                    if i != j && le[j][i] {
                        return Err(Error::Invalid("relation is not antisymmetric".into()));
                    }
                    id_of.insert((i, j), morphisms.len());
                    let name = if i == j { format!("id_{}", names[i]) } else { format!("{}<{}", names[i], names[j]) };
                    morphisms.push(MorphismDecl { name, source: i, target: j });
                }
            }
        }
        let identities = (0..n).map(|i| id_of[&(i, i)]).collect();
        let mut compose = Vec::new();
        for (&(i, j), &f) in &id_of {
            for k in 0..n {
                if let Some(&g) = id_of.get(&(j, k)) {
                    compose.push(((g, f), id_of[&(i, k)]));
                }
            }
        }
        FinCat::new(names.iter().map(|s| s.to_string()).collect(), morphisms, identities, compose)
    }

    /// The span l ← b → r.
    pub fn pushout_shape() -> Self {
        Self::poset(&["b", "l", "r"], &[(0, 1), (0, 2)]).expect("span poset")
    }

    pub fn product(c: &FinCat, d: &FinCat) -> FinCat {
        let nd = d.objects.len();
        let md = d.morphisms.len();
        let objects = c.objects.iter().flat_map(|a| d.objects.iter().map(move |b| format!("({a},{b})"))).collect();
        let morphisms = c
            .morphisms
            .iter()
            .flat_map(|f| {
                d.morphisms.iter().map(move |g| MorphismDecl {
                    name: format!("({},{})", f.name, g.name),
                    source: f.source * nd + g.source,
                    target: f.target * nd + g.target,
                })
            })
            .collect();
        let identities =
            (0..c.objects.len()).flat_map(|a| (0..nd).map(move |b| (a, b))).map(|(a, b)| c.identities[a] * md + d.identities[b]).collect();
        let mut compose = Vec::new();
        for (&(g1, f1), &h1) in &c.compose {
            for (&(g2, f2), &h2) in &d.compose {
                compose.push(((g1 * md + g2, f1 * md + f2), h1 * md + h2));
            }
        }
        FinCat::new(objects, morphisms, identities, compose).expect("product category")
    }
}

/// Exhaustive identity and associativity laws; missing composites fail.
pub fn check_category(c: &FinCat) -> CheckReport {
    let mut report = CheckReport::new("category");
    let nm = c.morphisms.len();
    for f in 0..nm {
        let (a, b) = (c.source(f), c.target(f));
        for (side, id) in [("left", c.identity(b)), ("right", c.identity(a))] {
            let got = if side == "left" { c.compose(id, f) } else { c.compose(f, id) };
            report.record(got == Some(f), || format!("identity-{side} {}", c.name(f)), || format!("got {got:?}"));
        }
    }
    for f in 0..nm {
        for g in 0..nm {
            if c.source(g) != c.target(f) {
                continue;
            }
            let Some(gf) = c.compose(g, f) else {
                report.fail(format!("{}∘{}", c.name(g), c.name(f)), "composite missing");
                continue;
            };
            let typed = c.source(gf) == c.source(f) && c.target(gf) == c.target(g);
            report.record(typed, || format!("{}∘{}", c.name(g), c.name(f)), || "composite has wrong endpoints".into());
            for h in 0..nm {
                if c.source(h) != c.target(g) {
                    continue;
                }
                let lhs = c.compose(h, g).and_then(|hg| c.compose(hg, f));
                let rhs = c.compose(h, gf);
                report.record(
                    lhs.is_some() && lhs == rhs,
                    || format!("({}∘{})∘{}", c.name(h), c.name(g), c.name(f)),
                    || format!("{:?} vs {:?}", lhs.map(|x| c.name(x).to_string()), rhs.map(|x| c.name(x).to_string())),
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_categories_pass() {
        assert!(check_category(&FinCat::terminal()).passed());
        assert!(check_category(&FinCat::cyclic_group(2)).passed());
        assert!(check_category(&FinCat::pushout_shape()).passed());
        let p = FinCat::product(&FinCat::cyclic_group(2), &FinCat::pushout_shape());
        assert!(check_category(&p).passed());
        assert_eq!(p.objects.len(), 3);
    }

    #[test]
    fn corrupted_table_fails_with_triple() {
        let mut c = FinCat::cyclic_group(3);
        // g1∘g1 should be g2
        c.compose.insert((1, 1), 0);
        let r = check_category(&c);
        assert!(!r.passed());
        assert!(r.failures.iter().any(|f| f.key.contains("g1")));
    }

    #[test]
    fn json_roundtrip() {
        let c = FinCat::cyclic_group(2);
        let d = FinCat::from_json(&c.to_json()).unwrap();
        assert_eq!(d.morphisms, c.morphisms);
        assert!(check_category(&d).passed());
    }
}
