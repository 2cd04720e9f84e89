//! Truncated 𝔅-spaces: level-wise simplicial sets with generator actions,
//! their monoid structure and the flatness criterion.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng as _;

use super::sset::{check_simplicial, SMap, TSSet};
use crate::binj::{chi_morphism, relation_instances, tensor, upsilon, BraidedInjection, Gen, OrderInj};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::Rng;

/// A 𝔅-space described by keyed simplices and generator oracles. `act`
/// must handle inverse ζ's as well.
pub trait BSpaceModel {
    type K: Clone + Eq + Hash + Debug;

    fn name(&self) -> String;
    fn n_max(&self) -> usize;
    fn dim(&self) -> usize;
    /// All k-simplices of X(level); errors when infinite or too large.
    fn simplices(&self, level: usize, k: usize) -> Result<Vec<Self::K>>;
    fn face(&self, level: usize, k: usize, x: &Self::K, i: usize) -> Self::K;
    fn degen(&self, level: usize, k: usize, x: &Self::K, i: usize) -> Self::K;
    fn act(&self, g: Gen, k: usize, x: &Self::K) -> Self::K;

    /// A random k-simplex of X(level).
    fn sample(&self, level: usize, k: usize, rng: &mut Rng) -> Self::K {
        let all = self.simplices(level, k).expect("finite model");
        all[rng.gen_range(0..all.len())].clone()
    }
    /// The preimage under the order-preserving inclusion with image `keep`,
    /// when one exists and the model can compute it.
    fn restrict(&self, _level: usize, _keep: &[usize], _k: usize, _x: &Self::K) -> Option<Self::K> {
        None
    }
    fn unit(&self) -> Option<Self::K> {
        None
    }
    fn mult(&self, _k: usize, _x: &Self::K, _y: &Self::K) -> Option<Self::K> {
        None
    }
}

/// Positive generators with source `n`: ζ^i_n and, below the top, ∂^i_n.
pub fn generators_from(n: usize, n_max: usize) -> Vec<Gen> {
    let mut out: Vec<Gen> = (1..n).map(|i| Gen::Zeta { i, n, positive: true }).collect();
    if n < n_max {
        out.extend((1..=n + 1).map(|i| Gen::Partial { i, n }));
    }
    out
}

/// The generator word for α = Υ(μ)∘ζ, in application order.
pub fn generator_word(alpha: &BraidedInjection) -> Vec<Gen> {
    let m = alpha.source();
    let mut w: Vec<Gen> = alpha.zeta.to_word().letters.iter().map(|l| Gen::Zeta { i: l.index, n: m, positive: l.positive }).collect();
    w.extend(alpha.mu.partial_factors().into_iter().map(|(i, n)| Gen::Partial { i, n }));
    w
}

pub fn model_act<M: BSpaceModel>(model: &M, alpha: &BraidedInjection, k: usize, x: &M::K) -> Result<M::K> {
    if alpha.target() > model.n_max() {
        return Err(Error::Truncation(format!("level {} above N = {}", alpha.target(), model.n_max())));
    }
    Ok(generator_word(alpha).into_iter().fold(x.clone(), |acc, g| model.act(g, k, &acc)))
}

/// Levels X(0..=N) with tables for every positive generator; inverse ζ
/// tables are derived when the ζ's are bijective.
#[derive(Debug, Clone)]
pub struct TBSpace {
    pub name: String,
    pub n_max: usize,
    pub levels: Vec<TSSet>,
    actions: HashMap<Gen, SMap>,
    inverses: HashMap<Gen, SMap>,
}

fn invert(m: &SMap, counts: &[usize]) -> Option<SMap> {
    let mut dims = Vec::new();
    for (k, v) in m.dims.iter().enumerate() {
        let mut inv = vec![usize::MAX; counts[k]];
        for (s, &t) in v.iter().enumerate() {
            if inv[t] != usize::MAX {
                return None;
            }
            inv[t] = s;
        }
        if inv.contains(&usize::MAX) {
            return None;
        }
        dims.push(inv);
    }
    Some(SMap { dims })
}

impl TBSpace {
    pub fn new(name: impl Into<String>, levels: Vec<TSSet>, actions: HashMap<Gen, SMap>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Invalid("a B-space needs level 0".into()));
        }
        let n_max = levels.len() - 1;
        let dim = levels[0].dim;
        if levels.iter().any(|l| l.dim != dim) {
            return Err(Error::Invalid("levels must share a truncation dimension".into()));
        }
        for n in 0..=n_max {
            for g in generators_from(n, n_max) {
                let m = actions.get(&g).ok_or_else(|| Error::Invalid(format!("action of {g} missing")))?;
                let (src, tgt) = (&levels[g.source()], &levels[g.target()]);
                let ok = m.dims.len() == dim + 1
                    && (0..=dim).all(|k| m.dims[k].len() == src.count(k) && m.dims[k].iter().all(|&t| t < tgt.count(k)));
                if !ok {
                    return Err(Error::Invalid(format!("action of {g} has the wrong shape")));
                }
            }
        }
        if let Some(g) = actions.keys().find(|g| g.target() > n_max || g.morphism().is_err() || matches!(g, Gen::Zeta { positive: false, .. })) {
            return Err(Error::Invalid(format!("unexpected action {g}")));
        }
        let mut inverses = HashMap::new();
        for (g, m) in &actions {
            if let Gen::Zeta { i, n, positive: true } = *g {
                let counts: Vec<usize> = (0..=dim).map(|k| levels[n].count(k)).collect();
                if let Some(inv) = invert(m, &counts) {
                    inverses.insert(Gen::Zeta { i, n, positive: false }, inv);
                }
            }
        }
        Ok(TBSpace { name: name.into(), n_max, levels, actions, inverses })
    }

    pub fn dim(&self) -> usize {
        self.levels[0].dim
    }

    pub fn gen_map(&self, g: Gen) -> Option<&SMap> {
        match g {
            Gen::Zeta { positive: false, .. } => self.inverses.get(&g),
            _ => self.actions.get(&g),
        }
    }

    pub fn act_gen(&self, g: Gen, k: usize, s: usize) -> Result<usize> {
        self.gen_map(g).map(|m| m.apply(k, s)).ok_or_else(|| Error::Truncation(format!("no action for {g}")))
    }

    pub fn act(&self, alpha: &BraidedInjection, k: usize, s: usize) -> Result<usize> {
        if alpha.target() > self.n_max {
            return Err(Error::Truncation(format!("level {} above N = {}", alpha.target(), self.n_max)));
        }
        generator_word(alpha).into_iter().try_fold(s, |acc, g| self.act_gen(g, k, acc))
    }

    /// The composite map of a generator word starting at `level`.
    fn word_map(&self, level: usize, w: &[Gen]) -> Option<SMap> {
        let mut acc = SMap::identity(&self.levels[level]);
        for &g in w {
            acc = self.gen_map(g)?.after(&acc);
        }
        Some(acc)
    }

    /// Order-preserving inclusion X(μ) as a map.
    pub fn inclusion(&self, mu: &OrderInj) -> Option<SMap> {
        let w: Vec<Gen> = mu.partial_factors().into_iter().map(|(i, n)| Gen::Partial { i, n }).collect();
        self.word_map(mu.source(), &w)
    }

    /// Preimage of `s` under ∂^j into level `level`.
    pub(crate) fn partial_preimage(&self, j: usize, level: usize, k: usize, s: usize) -> Option<usize> {
        let m = self.actions.get(&Gen::Partial { i: j, n: level })?;
        m.dims[k].iter().position(|&t| t == s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let actions: BTreeMap<String, &SMap> = self.actions.iter().map(|(g, m)| (g.to_string(), m)).collect();
        serde_json::json!({
            "name": self.name,
            "N": self.n_max,
            "D": self.dim(),
            "levels": self.levels.iter().map(|l| l.to_json()).collect::<Vec<_>>(),
            "actions": actions,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let levels = v
            .get("levels")
            .and_then(|l| l.as_array())
            .ok_or_else(|| Error::Parse("B-space needs a 'levels' array".into()))?
            .iter()
            .map(TSSet::from_json)
            .collect::<Result<Vec<_>>>()?;
        let raw = v.get("actions").and_then(|a| a.as_object()).ok_or_else(|| Error::Parse("B-space needs an 'actions' object".into()))?;
        let mut actions = HashMap::new();
        for (name, m) in raw {
            let g = Gen::parse(name)?;
            if matches!(g, Gen::Zeta { positive: false, .. }) {
                return Err(Error::Parse(format!("store positive generators only, got {name}")));
            }
            let m: SMap = serde_json::from_value(m.clone()).map_err(|e| Error::Parse(format!("action {name}: {e}")))?;
            actions.insert(g, m);
        }
        let name = v.get("name").and_then(|n| n.as_str()).unwrap_or("B-space").to_string();
        TBSpace::new(name, levels, actions)
    }
}

/// Materializes a finite model level by level.
pub fn materialize<M: BSpaceModel>(model: &M) -> Result<(TBSpace, Vec<Vec<HashMap<M::K, usize>>>)> {
    let n_max = model.n_max();
    let dim = model.dim();
    let mut levels = Vec::new();
    let mut keys = Vec::new();
    for n in 0..=n_max {
        let simplices = (0..=dim).map(|k| model.simplices(n, k)).collect::<Result<Vec<_>>>()?;
        let (set, maps) = TSSet::from_keys(dim, simplices, |k, x, i| model.face(n, k, x, i), |k, x, i| model.degen(n, k, x, i))?;
        levels.push(set);
        keys.push(maps);
    }
    let mut actions = HashMap::new();
    for n in 0..=n_max {
        for g in generators_from(n, n_max) {
            let t = g.target();
            let mut dims = Vec::new();
            for k in 0..=dim {
                let mut row = vec![0; levels[n].count(k)];
                for (x, &s) in &keys[n][k] {
                    let y = model.act(g, k, x);
                    row[s] = *keys[t][k].get(&y).ok_or_else(|| Error::Truncation(format!("{g} sends {x:?} outside the stored level {t}")))?;
                }
                dims.push(row);
            }
            actions.insert(g, SMap { dims });
        }
    }
    Ok((TBSpace::new(model.name(), levels, actions)?, keys))
}

/// Level-wise simplicial identities, simpliciality and invertibility of the
/// actions, and every relation instance as an equality of composite maps.
pub fn check_bspace(x: &TBSpace) -> CheckReport {
    let mut r = CheckReport::new(format!("B-space {}", x.name));
    for (n, l) in x.levels.iter().enumerate() {
        let mut s = check_simplicial(l);
        s.name = format!("level {n}");
        r.absorb(s);
    }
    for n in 0..=x.n_max {
        for g in generators_from(n, x.n_max) {
            let m = &x.actions[&g];
            r.record(m.is_simplicial(&x.levels[g.source()], &x.levels[g.target()]), || format!("{g} simplicial"), String::new);
            if matches!(g, Gen::Zeta { .. }) {
                let inv = Gen::Zeta { i: match g { Gen::Zeta { i, .. } => i, _ => 0 }, n, positive: false };
                r.record(x.inverses.contains_key(&inv), || format!("{g} invertible"), String::new);
            }
        }
    }
    for inst in relation_instances(x.n_max) {
        if inst.target() > x.n_max {
            continue;
        }
        let l = x.word_map(inst.source(), &inst.lhs);
        let rr = x.word_map(inst.source(), &inst.rhs);
        r.record(l.is_some() && l == rr, || inst.key(), || "composite maps differ".into());
    }
    r
}

/// Flatness: generator actions injective, and for l+m+n ≤ N the images of
/// X(l⊔m) and X(m⊔n) in X(l⊔m⊔n) meet exactly in the image of X(m).
pub fn check_flat(x: &TBSpace) -> CheckReport {
    let mut r = CheckReport::new(format!("flatness {}", x.name));
    for n in 0..=x.n_max {
        for g in generators_from(n, x.n_max) {
            r.record(x.actions[&g].is_injective(), || format!("{g} injective"), String::new);
        }
    }
    let image = |mu: &OrderInj, k: usize| -> Vec<bool> {
        let t = mu.target();
        let mut v = vec![false; x.levels[t].count(k)];
        if let Some(map) = x.inclusion(mu) {
            for &s in &map.dims[k] {
                v[s] = true;
            }
        }
        v
    };
    for total in 0..=x.n_max {
        for l in 0..=total {
            for m in 0..=total - l {
                let n = total - l - m;
                let lm = OrderInj::block(l + m, 0, total).expect("block");
                let mn = OrderInj::block(m + n, l, total).expect("block");
                let mid = OrderInj::block(m, l, total).expect("block");
                for k in 0..=x.dim() {
                    let (a, b, c) = (image(&lm, k), image(&mn, k), image(&mid, k));
                    let bad: Vec<usize> = (0..a.len()).filter(|&s| (a[s] && b[s]) != c[s]).collect();
                    r.record(
                        bad.is_empty(),
                        || format!("intersection l={l} m={m} n={n} dim {k}"),
                        || format!("simplices {:?} of level {total}", bad.iter().map(|&s| x.levels[total].label(k, s)).collect::<Vec<_>>()),
                    );
                }
            }
        }
    }
    r
}

/// A monoid in truncated 𝔅-spaces: unit vertex of X(0) and products
/// X(m)_k × X(n)_k → X(m+n)_k for m+n ≤ N.
#[derive(Debug, Clone)]
pub struct TBSpaceMonoid {
    pub space: TBSpace,
    pub unit: usize,
    mult: HashMap<(usize, usize), Vec<Vec<usize>>>,
}

impl TBSpaceMonoid {
    pub fn mult(&self, m: usize, n: usize, k: usize, x: usize, y: usize) -> Result<usize> {
        let t = self.mult.get(&(m, n)).ok_or_else(|| Error::Truncation(format!("product of levels {m} and {n} above N = {}", self.space.n_max)))?;
        Ok(t[k][x * self.space.levels[n].count(k) + y])
    }

    /// The unit as a k-simplex, s_0^k(u).
    pub fn unit_simplex(&self, k: usize) -> usize {
        let l = &self.space.levels[0];
        (0..k).fold(self.unit, |u, j| l.degen(j, u, 0))
    }

    pub fn n_max(&self) -> usize {
        self.space.n_max
    }
}

pub fn materialize_monoid<M: BSpaceModel>(model: &M) -> Result<TBSpaceMonoid> {
    let (space, keys) = materialize(model)?;
    let u = model.unit().ok_or_else(|| Error::Invalid(format!("{} has no unit", model.name())))?;
    let unit = *keys[0][0].get(&u).ok_or_else(|| Error::Invalid("unit is not a vertex of level 0".into()))?;
    let n_max = space.n_max;
    let mut mult = HashMap::new();
    for m in 0..=n_max {
        for n in 0..=n_max - m {
            let mut dims = Vec::new();
            for k in 0..=space.dim() {
                let cn = space.levels[n].count(k);
                let mut t = vec![0; space.levels[m].count(k) * cn];
                for (x, &i) in &keys[m][k] {
                    for (y, &j) in &keys[n][k] {
                        let p = model.mult(k, x, y).ok_or_else(|| Error::Invalid(format!("{} has no product", model.name())))?;
                        t[i * cn + j] =
                            *keys[m + n][k].get(&p).ok_or_else(|| Error::Truncation(format!("product {p:?} not in level {}", m + n)))?;
                    }
                }
                dims.push(t);
            }
            mult.insert((m, n), dims);
        }
    }
    Ok(TBSpaceMonoid { space, unit, mult })
}

/// Unit, associativity, simpliciality and naturality of the product
/// against every generator, exhaustively on the stored range.
pub fn check_monoid(a: &TBSpaceMonoid) -> CheckReport {
    let x = &a.space;
    let mut r = CheckReport::new(format!("monoid {}", x.name));
    let nm = x.n_max;
    let d = x.dim();
    let cnt = |n: usize, k: usize| x.levels[n].count(k);
    for m in 0..=nm {
        for k in 0..=d {
            let u = a.unit_simplex(k);
            for s in 0..cnt(m, k) {
                let ok = a.mult(0, m, k, u, s).ok() == Some(s) && a.mult(m, 0, k, s, u).ok() == Some(s);
                r.record(ok, || format!("unit level {m} dim {k} simplex {}", x.levels[m].label(k, s)), String::new);
            }
        }
    }
    for m in 0..=nm {
        for n in 0..=nm - m {
            for p in 0..=nm - m - n {
                for k in 0..=d {
                    for s in 0..cnt(m, k) {
                        for t in 0..cnt(n, k) {
                            for v in 0..cnt(p, k) {
                                let l = a.mult(m + n, p, k, a.mult(m, n, k, s, t).expect("in range"), v);
                                let rr = a.mult(m, n + p, k, s, a.mult(n, p, k, t, v).expect("in range"));
                                r.record(l.is_ok() && l.ok() == rr.ok(), || format!("assoc ({m},{n},{p}) dim {k} ({s},{t},{v})"), String::new);
                            }
                        }
                    }
                }
            }
        }
    }
    for m in 0..=nm {
        for n in 0..=nm - m {
            for k in 0..=d {
                for s in 0..cnt(m, k) {
                    for t in 0..cnt(n, k) {
                        let st = a.mult(m, n, k, s, t).expect("in range");
                        for i in 0..=k {
                            if k > 0 {
                                let f = a.mult(m, n, k - 1, x.levels[m].face(k, s, i), x.levels[n].face(k, t, i)).ok();
                                r.record(f == Some(x.levels[m + n].face(k, st, i)), || format!("d{i} of product ({m},{n}) dim {k}"), String::new);
                            }
                            if k < d {
                                let g = a.mult(m, n, k + 1, x.levels[m].degen(k, s, i), x.levels[n].degen(k, t, i)).ok();
                                r.record(g == Some(x.levels[m + n].degen(k, st, i)), || format!("s{i} of product ({m},{n}) dim {k}"), String::new);
                            }
                        }
                        for g in generators_from(m, nm).into_iter().filter(|g| g.target() + n <= nm) {
                            let alpha = g.morphism().expect("valid generator");
                            let lhs = x.act_gen(g, k, s).and_then(|gs| a.mult(g.target(), n, k, gs, t));
                            let rhs = x.act(&tensor(&alpha, &BraidedInjection::identity(n)), k, st);
                            r.record(lhs.is_ok() && lhs.ok() == rhs.ok(), || format!("natural left {g} with level {n} dim {k}"), String::new);
                        }
                        for g in generators_from(n, nm).into_iter().filter(|g| g.target() + m <= nm) {
                            let alpha = g.morphism().expect("valid generator");
                            let lhs = x.act_gen(g, k, t).and_then(|gt| a.mult(m, g.target(), k, s, gt));
                            let rhs = x.act(&tensor(&BraidedInjection::identity(m), &alpha), k, st);
                            r.record(lhs.is_ok() && lhs.ok() == rhs.ok(), || format!("natural right {g} with level {m} dim {k}"), String::new);
                        }
                    }
                }
            }
        }
    }
    r
}

/// Monoid laws plus A(χ_{m,n})∘μ = μ∘twist on the stored range.
pub fn check_commutative_monoid(a: &TBSpaceMonoid) -> CheckReport {
    let x = &a.space;
    let mut r = CheckReport::new(format!("commutative monoid {}", x.name));
    r.absorb(check_monoid(a));
    for m in 0..=x.n_max {
        for n in 0..=x.n_max - m {
            let chi = chi_morphism(m, n);
            for k in 0..=x.dim() {
                for s in 0..x.levels[m].count(k) {
                    for t in 0..x.levels[n].count(k) {
                        let l = a.mult(m, n, k, s, t).and_then(|st| x.act(&chi, k, st));
                        let rr = a.mult(n, m, k, t, s);
                        r.record(l.is_ok() && l.ok() == rr.ok(), || format!("chi({m},{n}) dim {k} ({s},{t})"), String::new);
                    }
                }
            }
        }
    }
    r
}

/// Sampled relation, simpliciality and (when present) commutativity checks
/// for models too large to materialize.
pub fn check_model_sampled<M: BSpaceModel>(model: &M, samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("sampled B-space {}", model.name()));
    let n_max = model.n_max();
    let d = model.dim();
    for inst in relation_instances(n_max) {
        if inst.target() > n_max {
            continue;
        }
        for _ in 0..samples {
            let k = rng.gen_range(0..=d);
            let x = model.sample(inst.source(), k, rng);
            let l = inst.lhs.iter().fold(x.clone(), |acc, &g| model.act(g, k, &acc));
            let rr = inst.rhs.iter().fold(x.clone(), |acc, &g| model.act(g, k, &acc));
            r.record(l == rr, || format!("{} on {x:?}", inst.key()), || format!("{l:?} vs {rr:?}"));
        }
    }
    for n in 0..=n_max {
        for g in generators_from(n, n_max) {
            for _ in 0..samples {
                let k = rng.gen_range(0..=d);
                let x = model.sample(n, k, rng);
                let gx = model.act(g, k, &x);
                for i in 0..=k {
                    if k > 0 {
                        let ok = model.act(g, k - 1, &model.face(n, k, &x, i)) == model.face(g.target(), k, &gx, i);
                        r.record(ok, || format!("{g} commutes with d{i} on {x:?}"), String::new);
                    }
                    if k < d {
                        let ok = model.act(g, k + 1, &model.degen(n, k, &x, i)) == model.degen(g.target(), k, &gx, i);
                        r.record(ok, || format!("{g} commutes with s{i} on {x:?}"), String::new);
                    }
                }
                if let Gen::Zeta { i, n, .. } = g {
                    let back = model.act(Gen::Zeta { i, n, positive: false }, k, &gx);
                    r.record(back == x, || format!("{g} inverse on {x:?}"), String::new);
                }
            }
        }
    }
    r
}

/// Sampled flatness via `restrict`: ∂^i has the deletion as left inverse on
/// samples, and elements of both images restrict to the middle block.
pub fn check_flat_sampled<M: BSpaceModel>(model: &M, samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("sampled flatness {}", model.name()));
    let n_max = model.n_max();
    let d = model.dim();
    for n in 0..n_max {
        for i in 1..=n + 1 {
            let keep: Vec<usize> = (1..=n + 1).filter(|&p| p != i).collect();
            for _ in 0..samples {
                let k = rng.gen_range(0..=d);
                let x = model.sample(n, k, rng);
                let y = model.act(Gen::Partial { i, n }, k, &x);
                let back = model.restrict(n + 1, &keep, k, &y);
                r.record(back.as_ref() == Some(&x), || format!("d{i}@{n} left inverse on {x:?}"), || format!("{back:?}"));
            }
        }
    }
    let member = |mu: &OrderInj, k: usize, z: &M::K| -> Option<M::K> {
        let y = model.restrict(mu.target(), mu.image(), k, z)?;
        (model_act(model, &upsilon(mu), k, &y).ok().as_ref() == Some(z)).then_some(y)
    };
    for total in 0..=n_max {
        for l in 0..=total {
            for m in 0..=total - l {
                let n = total - l - m;
                let lm = OrderInj::block(l + m, 0, total).expect("block");
                let mn = OrderInj::block(m + n, l, total).expect("block");
                let mid = OrderInj::block(m, l, total).expect("block");
                for _ in 0..samples {
                    let k = rng.gen_range(0..=d);
                    // elements of the first image, half of them pushed from the middle
                    let z = if rng.gen_bool(0.5) {
                        let y = model.sample(m, k, rng);
                        model_act(model, &upsilon(&mid), k, &y).expect("in range")
                    } else {
                        let y = model.sample(l + m, k, rng);
                        model_act(model, &upsilon(&lm), k, &y).expect("in range")
                    };
                    let in_both = member(&lm, k, &z).is_some() && member(&mn, k, &z).is_some();
                    let in_mid = member(&mid, k, &z).is_some();
                    r.record(in_both == in_mid, || format!("intersection l={l} m={m} n={n} on {z:?}"), || format!("both={in_both} middle={in_mid}"));
                }
            }
        }
    }
    r
}

/// Sampled A(χ_{m,n})(xy) = yx.
pub fn check_commutative_sampled<M: BSpaceModel>(model: &M, samples: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new(format!("sampled commutativity {}", model.name()));
    let n_max = model.n_max();
    let d = model.dim();
    for m in 0..=n_max {
        for n in 0..=n_max - m {
            for _ in 0..samples {
                let k = rng.gen_range(0..=d);
                let x = model.sample(m, k, rng);
                let y = model.sample(n, k, rng);
                let l = model.mult(k, &x, &y).and_then(|xy| model_act(model, &chi_morphism(m, n), k, &xy).ok());
                let rr = model.mult(k, &y, &x);
                r.record(l.is_some() && l == rr, || format!("chi({m},{n}) on {x:?} {y:?}"), || format!("{l:?} vs {rr:?}"));
                if let Some(u) = model.unit() {
                    let uk = (0..k).fold(u, |acc, j| model.degen(0, j, &acc, 0));
                    r.record(model.mult(k, &uk, &x).as_ref() == Some(&x), || format!("unit on {x:?}"), String::new);
                }
            }
        }
    }
    r
}
