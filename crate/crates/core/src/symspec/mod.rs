//! ℐ-spaces as 𝔅-spaces whose ζ-tables are involutions σ^i, and the levels
//! X(n)₊ ∧ (S¹)^{∧n} of the associated symmetric spectrum.

use std::collections::HashMap;

use serde::Serialize;

use crate::binj::{decompose_injection, Gen, Injection};
use crate::braid::{chi, permutation_braid};
use crate::bspace::sset::{SMap, TSSet};
use crate::bspace::{check_bspace, check_monoid, materialize, BSpaceModel, TBSpace, TBSpaceMonoid};
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// A truncated ℐ-space: the ζ^i tables of `space` are read as σ^i.
#[derive(Debug, Clone)]
pub struct TISpace {
    pub space: TBSpace,
}

impl TISpace {
    pub fn new(space: TBSpace) -> Self {
        TISpace { space }
    }

    pub fn from_model<M: BSpaceModel>(model: &M) -> Result<Self> {
        Ok(TISpace { space: materialize(model)?.0 })
    }

    pub fn n_max(&self) -> usize {
        self.space.n_max
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// X(f) for an injection f = μ∘σ, σ through its positive permutation
    /// braid, i.e. as a product of σ^i's.
    pub fn act_injection(&self, f: &Injection, k: usize, s: usize) -> Result<usize> {
        let (mu, sigma) = decompose_injection(f);
        let m = f.source();
        let mut w: Vec<Gen> = permutation_braid(&sigma).letters.iter().map(|l| Gen::Zeta { i: l.index, n: m, positive: true }).collect();
        w.extend(mu.partial_factors().into_iter().map(|(i, n)| Gen::Partial { i, n }));
        w.into_iter().try_fold(s, |acc, g| self.space.act_gen(g, k, acc))
    }
}

/// Z as a 𝔅-space along Π: the same tables, ζ acting through Σ.
pub fn pullback_pi(z: &TISpace) -> TBSpace {
    z.space.clone()
}

/// The ℐ presentation: the 𝔅 relations read through Π plus σ^iσ^i = id.
pub fn check_ispace(x: &TISpace) -> CheckReport {
    let mut r = CheckReport::new(format!("I-space {}", x.space.name));
    r.absorb(check_bspace(&x.space));
    for n in 2..=x.n_max() {
        for i in 1..n {
            let g = Gen::Zeta { i, n, positive: true };
            for k in 0..=x.dim() {
                for s in 0..x.space.levels[n].count(k) {
                    let t = x.space.act_gen(g, k, s).and_then(|t| x.space.act_gen(g, k, t));
                    r.record(t.as_ref().ok() == Some(&s), || format!("s{i}@{n} squared on dim {k} simplex {}", x.space.levels[n].label(k, s)), || format!("{t:?}"));
                }
            }
        }
    }
    r
}

/// Monoid laws, σ² = id, and X(χ̄_{m,n})∘μ = μ∘twist with χ̄ the block
/// transposition as an injection.
pub fn check_commutative_imonoid(a: &TBSpaceMonoid) -> CheckReport {
    let x = TISpace::new(a.space.clone());
    let mut r = CheckReport::new(format!("commutative I-monoid {}", a.space.name));
    r.absorb(check_ispace(&x));
    r.absorb(check_monoid(a));
    for m in 0..=x.n_max() {
        for n in 0..=x.n_max() - m {
            let block = Injection::from_permutation(&chi(m, n).underlying_permutation());
            for k in 0..=x.dim() {
                for s in 0..a.space.levels[m].count(k) {
                    for t in 0..a.space.levels[n].count(k) {
                        let l = a.mult(m, n, k, s, t).and_then(|st| x.act_injection(&block, k, st));
                        let rr = a.mult(n, m, k, t, s);
                        r.record(l.is_ok() && l.ok() == rr.ok(), || format!("block transposition ({m},{n}) dim {k} ({s},{t})"), String::new);
                    }
                }
            }
        }
    }
    r
}

/// X(n)₊ ∧ (S¹)^{∧n} together with the Σ_n action by σ^i on X(n) and the
/// swap of smash coordinates i, i+1.
#[derive(Debug, Clone)]
pub struct SpectrumLevel {
    pub n: usize,
    pub space: TSSet,
    pub sigma_action: Vec<SMap>,
}

#[derive(Serialize)]
struct LevelJson {
    n: usize,
    basepoint: usize,
    sigma_action: HashMap<String, SMap>,
}

impl SpectrumLevel {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.space.to_json();
        let extra = LevelJson {
            n: self.n,
            basepoint: self.space.base.expect("based"),
            sigma_action: self.sigma_action.iter().enumerate().map(|(i, m)| (format!("s{}", i + 1), m.clone())).collect(),
        };
        for (k, val) in serde_json::to_value(extra).expect("serializable").as_object().expect("object") {
            v[k] = val.clone();
        }
        v
    }
}

/// Non-base simplices are (x, t_1, …, t_p) with x ∈ X(level) and each t_j a
/// non-base simplex of S¹; None is the collapsed basepoint.
type SmashKey = Option<(usize, Vec<usize>)>;

fn smash_with_circles(xl: &TSSet, p: usize, circle: &TSSet) -> Result<(TSSet, Vec<HashMap<SmashKey, usize>>)> {
    let dim = xl.dim;
    let base = |k: usize| circle.base_simplex(k).expect("based circle");
    let simplices: Vec<Vec<SmashKey>> = (0..=dim)
        .map(|k| {
            let nonbase: Vec<usize> = (0..circle.count(k)).filter(|&t| t != base(k)).collect();
            let mut ts: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..p {
                ts = ts.into_iter().flat_map(|v| nonbase.iter().map(move |&t| [v.clone(), vec![t]].concat())).collect();
            }
            std::iter::once(None).chain((0..xl.count(k)).flat_map(|x| ts.iter().map(move |t| Some((x, t.clone()))))).collect()
        })
        .collect();
    let face = |k: usize, s: &SmashKey, i: usize| -> SmashKey {
        let (x, t) = s.as_ref()?;
        let ft: Vec<usize> = t.iter().map(|&c| circle.face(k, c, i)).collect();
        if ft.iter().any(|&c| c == base(k - 1)) {
            return None;
        }
        Some((xl.face(k, *x, i), ft))
    };
    let degen = |k: usize, s: &SmashKey, i: usize| -> SmashKey {
        let (x, t) = s.as_ref()?;
        Some((xl.degen(k, *x, i), t.iter().map(|&c| circle.degen(k, c, i)).collect()))
    };
    let (set, keys) = TSSet::from_keys(dim, simplices, face, degen)?;
    Ok((set.with_base(0), keys))
}

fn smash_map(
    src: &[HashMap<SmashKey, usize>],
    tgt: &[HashMap<SmashKey, usize>],
    f: impl Fn(usize, &SmashKey) -> Result<SmashKey>,
) -> Result<SMap> {
    let mut dims = Vec::new();
    for (k, keys) in src.iter().enumerate() {
        let mut row = vec![0; keys.len()];
        for (key, &s) in keys {
            let img = f(k, key)?;
            row[s] = *tgt[k].get(&img).ok_or_else(|| Error::Invalid(format!("{img:?} is not a simplex")))?;
        }
        dims.push(row);
    }
    Ok(SMap { dims })
}

fn swap_coords(t: &[usize], i: usize) -> Vec<usize> {
    let mut v = t.to_vec();
    v.swap(i - 1, i);
    v
}

/// The n-th space with its Σ_n action.
pub fn spectrum_level(x: &TISpace, n: usize) -> Result<SpectrumLevel> {
    if n > x.n_max() {
        return Err(Error::Truncation(format!("level {n} above N = {}", x.n_max())));
    }
    let circle = TSSet::circle(x.dim());
    let (space, keys) = smash_with_circles(&x.space.levels[n], n, &circle)?;
    let sigma_action = (1..n)
        .map(|i| {
            smash_map(&keys, &keys, |k, s| {
                Ok(match s {
                    None => None,
                    Some((y, t)) => Some((x.space.act_gen(Gen::Zeta { i, n, positive: true }, k, *y)?, swap_coords(t, i))),
                })
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumLevel { n, space, sigma_action })
}

/// X(n)₊ ∧ Sⁿ ∧ S¹ → X(n+1)₊ ∧ S^{n+1}, x ↦ X(∂^{n+1}_n)x on the first
/// coordinate, the new circle as the last smash coordinate.
#[derive(Debug, Clone)]
pub struct StructureMap {
    pub n: usize,
    pub domain: TSSet,
    pub codomain: TSSet,
    pub map: SMap,
    domain_keys: Vec<HashMap<SmashKey, usize>>,
    codomain_keys: Vec<HashMap<SmashKey, usize>>,
}

fn apply_partials(x: &TISpace, gens: &[Gen], k: usize, s: &SmashKey) -> Result<SmashKey> {
    Ok(match s {
        None => None,
        Some((y, t)) => Some((gens.iter().try_fold(*y, |acc, &g| x.space.act_gen(g, k, acc))?, t.clone())),
    })
}

pub fn structure_map(x: &TISpace, n: usize) -> Result<StructureMap> {
    if n + 1 > x.n_max() {
        return Err(Error::Truncation(format!("structure map at level {n} needs N >= {}", n + 1)));
    }
    let circle = TSSet::circle(x.dim());
    let (domain, dk) = smash_with_circles(&x.space.levels[n], n + 1, &circle)?;
    let (codomain, ck) = smash_with_circles(&x.space.levels[n + 1], n + 1, &circle)?;
    let map = smash_map(&dk, &ck, |k, s| apply_partials(x, &[Gen::Partial { i: n + 1, n }], k, s))?;
    Ok(StructureMap { n, domain, codomain, map, domain_keys: dk, codomain_keys: ck })
}

/// Simpliciality, Σ_n ⊂ Σ_{n+1} equivariance, the ∂∂ route for the double
/// structure map and its Σ_2-equivariance in the last two coordinates.
pub fn check_structure_map(x: &TISpace, n: usize) -> CheckReport {
    let mut r = CheckReport::new(format!("structure map {} level {n}", x.space.name));
    let s = match structure_map(x, n) {
        Ok(s) => s,
        Err(e) => {
            r.fail("construct", e.to_string());
            return r;
        }
    };
    r.record(s.map.is_simplicial(&s.domain, &s.codomain), || "simplicial".into(), String::new);
    for i in 1..n {
        let sig = |lvl: usize| {
            move |k: usize, key: &SmashKey| -> Result<SmashKey> {
                Ok(match key {
                    None => None,
                    Some((y, t)) => Some((x.space.act_gen(Gen::Zeta { i, n: lvl, positive: true }, k, *y)?, swap_coords(t, i))),
                })
            }
        };
        let on_dom = smash_map(&s.domain_keys, &s.domain_keys, sig(n));
        let on_cod = smash_map(&s.codomain_keys, &s.codomain_keys, sig(n + 1));
        let ok = matches!((&on_dom, &on_cod), (Ok(d), Ok(c)) if s.map.after(d) == c.after(&s.map));
        r.record(ok, || format!("equivariance s{i}"), String::new);
    }
    if n + 2 <= x.n_max() {
        let circle = TSSet::circle(x.dim());
        let built = smash_with_circles(&x.space.levels[n], n + 2, &circle)
            .and_then(|(dd, dk)| smash_with_circles(&x.space.levels[n + 2], n + 2, &circle).map(|(cc, ck)| (dd, dk, cc, ck)));
        match built {
            Err(e) => r.fail("double structure map", e.to_string()),
            Ok((_, dk, _, ck)) => {
                let via_steps = smash_map(&dk, &ck, |k, s| apply_partials(x, &[Gen::Partial { i: n + 1, n }, Gen::Partial { i: n + 2, n: n + 1 }], k, s));
                let via_rel = smash_map(&dk, &ck, |k, s| apply_partials(x, &[Gen::Partial { i: n + 1, n }, Gen::Partial { i: n + 1, n: n + 1 }], k, s));
                r.record(via_steps.is_ok() && via_steps == via_rel, || "double structure map = d-d relation route".into(), String::new);
                // σ^{n+1} on the target against swapping the two new circles
                let sig_top = smash_map(&ck, &ck, |k, key| {
                    Ok(match key {
                        None => None,
                        Some((y, t)) => Some((x.space.act_gen(Gen::Zeta { i: n + 1, n: n + 2, positive: true }, k, *y)?, swap_coords(t, n + 1))),
                    })
                });
                let swap_new = smash_map(&dk, &dk, |_, key| Ok(key.as_ref().map(|(y, t)| (*y, swap_coords(t, n + 1)))));
                let ok = match (&via_steps, &sig_top, &swap_new) {
                    (Ok(d), Ok(sg), Ok(sw)) => sg.after(d) == d.after(sw),
                    _ => false,
                };
                r.record(ok, || "Sigma_2 on the two new coordinates".into(), String::new);
            }
        }
    }
    r
}

/// Naturality of the structure map at level n for level-wise maps
/// f: X → Y commuting with the generators.
pub fn check_structure_natural(x: &TISpace, y: &TISpace, f: &[SMap], n: usize) -> CheckReport {
    let mut r = CheckReport::new(format!("structure map naturality {} -> {} level {n}", x.space.name, y.space.name));
    let (sx, sy) = match (structure_map(x, n), structure_map(y, n)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => {
            r.fail("construct", "structure maps unavailable");
            return r;
        }
    };
    let lift = |lvl: usize, src: &[HashMap<SmashKey, usize>], tgt: &[HashMap<SmashKey, usize>]| {
        smash_map(src, tgt, |k, key| Ok(key.as_ref().map(|(a, t)| (f[lvl].apply(k, *a), t.clone()))))
    };
    let fd = lift(n, &sx.domain_keys, &sy.domain_keys);
    let fc = lift(n + 1, &sx.codomain_keys, &sy.codomain_keys);
    let ok = matches!((&fd, &fc), (Ok(fd), Ok(fc)) if fc.after(&sx.map) == sy.map.after(fd));
    r.record(ok, || "square commutes".into(), String::new);
    r
}

/// X(0) = X(1) = {a}, X(2) = {a, b, c, d} with σ¹ fixing a and cycling
/// b → c → d: a valid 𝔅-space on which σ² ≠ id.
#[derive(Debug, Clone)]
pub struct BrokenSigmaModel;

impl BSpaceModel for BrokenSigmaModel {
    type K = char;
    fn name(&self) -> String {
        "broken-sigma".into()
    }
    fn n_max(&self) -> usize {
        2
    }
    fn dim(&self) -> usize {
        1
    }
    fn simplices(&self, level: usize, _: usize) -> Result<Vec<char>> {
        Ok(if level < 2 { vec!['a'] } else { vec!['a', 'b', 'c', 'd'] })
    }
    fn face(&self, _: usize, _: usize, x: &char, _: usize) -> char {
        *x
    }
    fn degen(&self, _: usize, _: usize, x: &char, _: usize) -> char {
        *x
    }
    fn act(&self, g: Gen, _: usize, x: &char) -> char {
        match (g, *x) {
            (Gen::Partial { .. }, _) => 'a',
            (Gen::Zeta { positive: true, .. }, 'b') => 'c',
            (Gen::Zeta { positive: true, .. }, 'c') => 'd',
            (Gen::Zeta { positive: true, .. }, 'd') => 'b',
            (Gen::Zeta { positive: false, .. }, 'b') => 'd',
            (Gen::Zeta { positive: false, .. }, 'c') => 'b',
            (Gen::Zeta { positive: false, .. }, 'd') => 'c',
            (_, c) => c,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bspace::{homology, materialize_monoid, ConstantModel, HomologyGroup, PhiNerveModel, XBulletModel};
    use crate::fincat::TableCat;

    fn sphere(n: usize) -> Vec<HomologyGroup> {
        (0..=n).map(|k| HomologyGroup::free(usize::from(k == 0 || k == n))).collect()
    }

    #[test]
    fn terminal_levels_are_spheres() {
        for n in 0..=3 {
            let u = TISpace::from_model(&ConstantModel::terminal(4, n + 1)).unwrap();
            let l = spectrum_level(&u, n).unwrap();
            let h = homology(&l.space, n).unwrap();
            let want = if n == 0 { vec![HomologyGroup::free(2)] } else { sphere(n) };
            assert_eq!(h, want, "level {n}");
        }
    }

    #[test]
    fn structure_maps_on_terminal_and_xbullet() {
        let u = TISpace::from_model(&ConstantModel::terminal(4, 2)).unwrap();
        for n in 0..3 {
            let r = check_structure_map(&u, n);
            assert!(r.passed(), "{:?}", r.failures);
        }
        let xb = TISpace::from_model(&XBulletModel::s0(3, 1)).unwrap();
        for n in 0..2 {
            let r = check_structure_map(&xb, n);
            assert!(r.passed(), "{:?}", r.failures);
        }
        // the map to the terminal space is natural
        let u3 = TISpace::from_model(&ConstantModel::terminal(3, 1)).unwrap();
        let f: Vec<SMap> = xb.space.levels.iter().map(|l| SMap { dims: (0..=1).map(|k| vec![0; l.count(k)]).collect() }).collect();
        assert!(check_structure_natural(&xb, &u3, &f, 1).passed());
    }

    #[test]
    fn ispace_checks() {
        let xb = materialize_monoid(&XBulletModel::s0(3, 1)).unwrap();
        assert!(check_commutative_imonoid(&xb).passed());
        let z2 = materialize_monoid(&PhiNerveModel::new(TableCat::z2(), 3, 1)).unwrap();
        assert!(check_commutative_imonoid(&z2).passed());
        let l0 = spectrum_level(&TISpace::new(z2.space.clone()), 0).unwrap();
        assert_eq!(l0.space.count(0), 2);
        let broken = TISpace::from_model(&BrokenSigmaModel).unwrap();
        assert!(check_bspace(&pullback_pi(&broken)).passed());
        let r = check_ispace(&broken);
        assert!(!r.passed());
        assert!(r.failures.iter().all(|f| f.key.contains("squared")));
    }

    #[test]
    fn sigma_action_fixes_basepoint_and_json() {
        let u = TISpace::from_model(&ConstantModel::terminal(3, 2)).unwrap();
        let l = spectrum_level(&u, 2).unwrap();
        assert_eq!(l.sigma_action.len(), 1);
        assert_eq!(l.sigma_action[0].apply(0, l.space.base.unwrap()), l.space.base.unwrap());
        let v = l.to_json();
        assert!(v.get("sigma_action").is_some() && v.get("basepoint").is_some());
        assert!(spectrum_level(&u, 4).is_err());
    }
}
