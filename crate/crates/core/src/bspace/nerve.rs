//! Nerves of finite categories and Bousfield–Kan homotopy colimits over
//! them.

use super::sset::{SMap, TSSet};
use crate::error::{Error, Result};
use crate::fincat::FinCat;

/// k-chains of composable morphisms; a 0-chain is `[object]`.
fn chains(c: &FinCat, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return (0..c.objects.len()).map(|x| vec![x]).collect();
    }
    let mut out: Vec<Vec<usize>> = (0..c.morphisms.len()).map(|f| vec![f]).collect();
    for _ in 1..k {
        out = out
            .into_iter()
            .flat_map(|ch| {
                let t = c.target(*ch.last().expect("nonempty"));
                (0..c.morphisms.len()).filter(move |&g| c.source(g) == t).map(move |g| {
                    let mut v = ch.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

/// Face d_i of a chain f_1,…,f_k (f_j: x_{j-1} → x_j).
fn chain_face(c: &FinCat, k: usize, ch: &[usize], i: usize) -> Vec<usize> {
    if k == 1 {
        return vec![if i == 0 { c.target(ch[0]) } else { c.source(ch[0]) }];
    }
    if i == 0 {
        ch[1..].to_vec()
    } else if i == k {
        ch[..k - 1].to_vec()
    } else {
        let mut v = ch[..i - 1].to_vec();
        v.push(c.compose(ch[i], ch[i - 1]).expect("composable chain"));
        v.extend_from_slice(&ch[i + 1..]);
        v
    }
}

fn chain_degen(c: &FinCat, k: usize, ch: &[usize], i: usize) -> Vec<usize> {
    if k == 0 {
        return vec![c.identity(ch[0])];
    }
    // the object x_i sits between f_i and f_{i+1}
    let x = if i == 0 { c.source(ch[0]) } else { c.target(ch[i - 1]) };
    let mut v = ch.to_vec();
    v.insert(i, c.identity(x));
    v
}

/// The nerve truncated at dimension `dim`.
pub fn nerve(c: &FinCat, dim: usize) -> TSSet {
    let simplices = (0..=dim).map(|k| chains(c, k)).collect();
    TSSet::from_keys(dim, simplices, |k, ch, i| chain_face(c, k, ch, i), |k, ch, i| chain_degen(c, k, ch, i)).expect("nerve is closed").0
}

/// A diagram of simplicial sets over a finite category: one value per
/// object and one map per morphism.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub shape: FinCat,
    pub values: Vec<TSSet>,
    pub maps: Vec<SMap>,
}

impl Diagram {
    /// Checks typing, simpliciality and functoriality.
    pub fn new(shape: FinCat, values: Vec<TSSet>, maps: Vec<SMap>) -> Result<Self> {
        if values.len() != shape.objects.len() || maps.len() != shape.morphisms.len() {
            return Err(Error::Invalid("diagram needs one value per object and one map per morphism".into()));
        }
        let dim = values.first().map(|v| v.dim).unwrap_or(0);
        if values.iter().any(|v| v.dim != dim) {
            return Err(Error::Invalid("diagram values must share a truncation".into()));
        }
        for (f, m) in maps.iter().enumerate() {
            if !m.is_simplicial(&values[shape.source(f)], &values[shape.target(f)]) {
                return Err(Error::Invalid(format!("map for {} is not simplicial", shape.name(f))));
            }
        }
        for x in 0..shape.objects.len() {
            if maps[shape.identity(x)] != SMap::identity(&values[x]) {
                return Err(Error::Rejected(format!("identity of {} not sent to the identity", shape.objects[x])));
            }
        }
        for g in 0..shape.morphisms.len() {
            for f in 0..shape.morphisms.len() {
                if shape.source(g) != shape.target(f) {
                    continue;
                }
                let gf = shape.compose(g, f).ok_or_else(|| Error::Invalid("shape category missing a composite".into()))?;
                if maps[gf] != maps[g].after(&maps[f]) {
                    return Err(Error::Rejected(format!("F({}∘{}) != F({})∘F({})", shape.name(g), shape.name(f), shape.name(g), shape.name(f))));
                }
            }
        }
        Ok(Diagram { shape, values, maps })
    }

    /// The constant diagram with value `x`.
    pub fn constant(shape: FinCat, x: &TSSet) -> Self {
        let values = vec![x.clone(); shape.objects.len()];
        let maps = vec![SMap::identity(x); shape.morphisms.len()];
        Diagram { shape, values, maps }
    }

    pub fn dim(&self) -> usize {
        self.values.first().map(|v| v.dim).unwrap_or(0)
    }
}

/// A k-simplex of the homotopy colimit: a chain m_0 ← m_1 ← … ← m_k given
/// by g_j: m_j → m_{j-1}, decorated by a k-simplex of F(m_k). For k = 0 the
/// chain is `[object]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct HoSimplex {
    chain: Vec<usize>,
    x: usize,
}

/// Backward chains are forward chains of the opposite category; we store
/// them as g_1,…,g_k with g_j: m_j → m_{j-1}.
fn back_chains(c: &FinCat, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return (0..c.objects.len()).map(|x| vec![x]).collect();
    }
    let mut out: Vec<Vec<usize>> = (0..c.morphisms.len()).map(|f| vec![f]).collect();
    for _ in 1..k {
        out = out
            .into_iter()
            .flat_map(|ch| {
                let s = c.source(*ch.last().expect("nonempty"));
                (0..c.morphisms.len()).filter(move |&g| c.target(g) == s).map(move |g| {
                    let mut v = ch.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

fn last_object(c: &FinCat, k: usize, ch: &[usize]) -> usize {
    if k == 0 {
        ch[0]
    } else {
        c.source(ch[k - 1])
    }
}

/// Bousfield–Kan: k-simplices ∐_{m_0←…←m_k} F(m_k)_k.
pub fn hocolim_finite(d: &Diagram) -> Result<TSSet> {
    let c = &d.shape;
    let dim = d.dim();
    let simplices: Vec<Vec<HoSimplex>> = (0..=dim)
        .map(|k| {
            back_chains(c, k)
                .into_iter()
                .flat_map(|ch| {
                    let m = last_object(c, k, &ch);
                    (0..d.values[m].count(k)).map(move |x| HoSimplex { chain: ch.clone(), x })
                })
                .collect()
        })
        .collect();
    let face = |k: usize, s: &HoSimplex, i: usize| -> HoSimplex {
        let m = last_object(c, k, &s.chain);
        let dx = d.values[m].face(k, s.x, i);
        if k == 1 {
            return if i == 0 {
                HoSimplex { chain: vec![m], x: dx }
            } else {
                let g = s.chain[0];
                HoSimplex { chain: vec![c.target(g)], x: d.maps[g].apply(0, dx) }
            };
        }
        if i == 0 {
            HoSimplex { chain: s.chain[1..].to_vec(), x: dx }
        } else if i == k {
            let g = s.chain[k - 1];
            HoSimplex { chain: s.chain[..k - 1].to_vec(), x: d.maps[g].apply(k - 1, dx) }
        } else {
            let mut v = s.chain[..i - 1].to_vec();
            v.push(c.compose(s.chain[i - 1], s.chain[i]).expect("composable"));
            v.extend_from_slice(&s.chain[i + 1..]);
            HoSimplex { chain: v, x: dx }
        }
    };
    let degen = |k: usize, s: &HoSimplex, i: usize| -> HoSimplex {
        let m = last_object(c, k, &s.chain);
        let sx = d.values[m].degen(k, s.x, i);
        if k == 0 {
            return HoSimplex { chain: vec![c.identity(m)], x: sx };
        }
        let obj = if i == 0 { c.target(s.chain[0]) } else { c.source(s.chain[i - 1]) };
        let mut v = s.chain.clone();
        v.insert(i, c.identity(obj));
        HoSimplex { chain: v, x: sx }
    };
    Ok(TSSet::from_keys(dim, simplices, face, degen)?.0)
}

/// Level-wise comparison map nerve(C × D) → nerve(C) × nerve(D) is a
/// bijection on every stored dimension.
pub fn nerve_product_matches(c: &FinCat, d: &FinCat, dim: usize) -> bool {
    let l = nerve(&FinCat::product(c, d), dim);
    let a = nerve(c, dim);
    let b = nerve(d, dim);
    let p = super::sset::product(&a, &b);
    (0..=dim).all(|k| l.count(k) == p.count(k))
        && (0..=dim).all(|k| l.nondegenerate(k).len() == p.nondegenerate(k).len())
        && chains_product_map_bijective(c, d, dim)
}

fn chains_product_map_bijective(c: &FinCat, d: &FinCat, dim: usize) -> bool {
    let cd = FinCat::product(c, d);
    let md = d.morphisms.len();
    (1..=dim).all(|k| {
        let mut seen: Vec<(Vec<usize>, Vec<usize>)> =
            chains(&cd, k).into_iter().map(|ch| (ch.iter().map(|f| f / md).collect(), ch.iter().map(|f| f % md).collect())).collect();
        let total = seen.len();
        seen.sort();
        seen.dedup();
        seen.len() == total && total == chains(c, k).len() * chains(d, k).len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bspace::homology::{homology, HomologyGroup};
    use crate::bspace::sset::check_simplicial;

    fn z(n: usize) -> HomologyGroup {
        HomologyGroup::free(n)
    }

    #[test]
    fn nerve_basics() {
        let t = nerve(&FinCat::terminal(), 3);
        assert!((0..=3).all(|k| t.count(k) == 1));
        assert_eq!(t.nondegenerate(2).len(), 0);
        let z2 = nerve(&FinCat::cyclic_group(2), 3);
        assert!(check_simplicial(&z2).passed());
        assert_eq!((0..=3).map(|k| z2.nondegenerate(k).len()).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
        let h = homology(&z2, 2).unwrap();
        assert_eq!(h, vec![z(1), HomologyGroup { rank: 0, torsion: vec![2] }, z(0)]);
    }

    #[test]
    fn pushout_of_points_is_a_circle() {
        let shape = FinCat::pushout_shape();
        let s0 = TSSet::discrete(2, &["a", "b"]);
        let pt = TSSet::point(2);
        let to_pt = SMap { dims: vec![vec![0, 0]; 3] };
        let mut maps = Vec::new();
        for f in 0..shape.morphisms.len() {
            let (s, t) = (shape.source(f), shape.target(f));
            maps.push(if s == t { SMap::identity(if s == 0 { &s0 } else { &pt }) } else { to_pt.clone() });
        }
        let d = Diagram::new(shape, vec![s0, pt.clone(), pt], maps).unwrap();
        let h = hocolim_finite(&d).unwrap();
        assert!(check_simplicial(&h).passed());
        assert_eq!(homology(&h, 1).unwrap(), vec![z(1), z(1)]);
    }

    #[test]
    fn hocolim_of_point_is_the_nerve() {
        for c in [FinCat::terminal(), FinCat::cyclic_group(2), FinCat::pushout_shape(), FinCat::cyclic_group(3)] {
            let d = Diagram::constant(c.clone(), &TSSet::point(3));
            let h = hocolim_finite(&d).unwrap();
            assert_eq!(homology(&h, 2).unwrap(), homology(&nerve(&c, 3), 2).unwrap());
        }
    }

    #[test]
    fn non_functorial_diagram_is_rejected() {
        let c = FinCat::cyclic_group(2);
        let x = TSSet::discrete(1, &["a", "b"]);
        // the generator acts trivially but its square is sent to the swap
        let swap = SMap { dims: vec![vec![1, 0]; 2] };
        assert!(Diagram::new(c.clone(), vec![x.clone()], vec![swap.clone(), swap.clone()]).is_err());
        assert!(Diagram::new(c, vec![x.clone()], vec![SMap::identity(&x), swap]).is_ok());
    }

    #[test]
    fn nerve_of_product() {
        assert!(nerve_product_matches(&FinCat::cyclic_group(2), &FinCat::pushout_shape(), 3));
    }
}
