//! Truncated simplicial sets with explicit face and degeneracy tables.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::CheckReport;

/// Simplices of dimension 0..=dim. `faces[k][s][i]` = d_i of simplex s of
/// dimension k (k ≥ 1); `degens[k][s][i]` = s_i (k < dim).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSSet {
    pub dim: usize,
    labels: Vec<Vec<String>>,
    index: Vec<HashMap<String, usize>>,
    faces: Vec<Vec<Vec<usize>>>,
    degens: Vec<Vec<Vec<usize>>>,
    /// Basepoint vertex, if based.
    pub base: Option<usize>,
}

/// A simplicial map given dimension-wise by index tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SMap {
    pub dims: Vec<Vec<usize>>,
}

impl SMap {
    pub fn identity(x: &TSSet) -> Self {
        SMap { dims: (0..=x.dim).map(|k| (0..x.count(k)).collect()).collect() }
    }

    pub fn apply(&self, k: usize, s: usize) -> usize {
        self.dims[k][s]
    }

    /// self∘other.
    pub fn after(&self, other: &SMap) -> SMap {
        SMap { dims: other.dims.iter().enumerate().map(|(k, v)| v.iter().map(|&s| self.dims[k][s]).collect()).collect() }
    }

    pub fn is_injective(&self) -> bool {
        self.dims.iter().all(|v| {
            let mut seen = v.clone();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Whether the map commutes with all faces and degeneracies.
    pub fn is_simplicial(&self, src: &TSSet, tgt: &TSSet) -> bool {
        if src.dim != tgt.dim || self.dims.len() != src.dim + 1 {
            return false;
        }
        for k in 0..=src.dim {
            if self.dims[k].len() != src.count(k) || self.dims[k].iter().any(|&t| t >= tgt.count(k)) {
                return false;
            }
        }
        for k in 0..=src.dim {
            for s in 0..src.count(k) {
                let fs = self.dims[k][s];
                if k > 0 && (0..=k).any(|i| self.dims[k - 1][src.face(k, s, i)] != tgt.face(k, fs, i)) {
                    return false;
                }
                if k < src.dim && (0..=k).any(|i| self.dims[k + 1][src.degen(k, s, i)] != tgt.degen(k, fs, i)) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Serialize, Deserialize)]
struct RawTSSet {
    #[serde(rename = "D")]
    d: usize,
    simplices: Vec<Vec<String>>,
    faces: BTreeMap<String, Vec<Vec<usize>>>,
    degeneracies: BTreeMap<String, Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basepoint: Option<usize>,
}

impl TSSet {
    /// Builds from keyed simplices; face and degeneracy results must be
    /// among the listed keys. Returns the key → index maps too.
    pub fn from_keys<K, F, G>(dim: usize, simplices: Vec<Vec<K>>, face: F, degen: G) -> Result<(TSSet, Vec<HashMap<K, usize>>)>
    where
        K: Clone + Eq + Hash + Debug,
        F: Fn(usize, &K, usize) -> K,
        G: Fn(usize, &K, usize) -> K,
    {
        if simplices.len() != dim + 1 {
            return Err(Error::Invalid(format!("need simplices for dimensions 0..={dim}")));
        }
        let maps: Vec<HashMap<K, usize>> =
            simplices.iter().map(|v| v.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect()).collect();
        for (k, m) in maps.iter().enumerate() {
            if m.len() != simplices[k].len() {
                return Err(Error::Invalid(format!("duplicate simplices in dimension {k}")));
            }
        }
        let look = |k: usize, key: &K| -> Result<usize> {
            maps[k].get(key).copied().ok_or_else(|| Error::Truncation(format!("simplex {key:?} of dimension {k} not listed")))
        };
        let mut faces = vec![Vec::new()];
        let mut degens = Vec::new();
        for k in 0..=dim {
            if k > 0 {
                let mut fk = Vec::with_capacity(simplices[k].len());
                for s in &simplices[k] {
                    fk.push((0..=k).map(|i| look(k - 1, &face(k, s, i))).collect::<Result<Vec<_>>>()?);
                }
                faces.push(fk);
            }
            if k < dim {
                let mut dk = Vec::with_capacity(simplices[k].len());
                for s in &simplices[k] {
                    dk.push((0..=k).map(|i| look(k + 1, &degen(k, s, i))).collect::<Result<Vec<_>>>()?);
                }
                degens.push(dk);
            }
        }
        let labels: Vec<Vec<String>> = simplices.iter().map(|v| v.iter().map(|k| format!("{k:?}")).collect()).collect();
        let index = labels.iter().map(|v| v.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect()).collect();
        Ok((TSSet { dim, labels, index, faces, degens, base: None }, maps))
    }

    pub fn with_base(mut self, base: usize) -> Self {
        self.base = Some(base);
        self
    }

    pub fn count(&self, k: usize) -> usize {
        self.labels[k].len()
    }

    pub fn face(&self, k: usize, s: usize, i: usize) -> usize {
        self.faces[k][s][i]
    }

    pub fn degen(&self, k: usize, s: usize, i: usize) -> usize {
        self.degens[k][s][i]
    }

    pub fn label(&self, k: usize, s: usize) -> &str {
        &self.labels[k][s]
    }

    pub fn lookup(&self, k: usize, label: &str) -> Option<usize> {
        self.index[k].get(label).copied()
    }

    /// The basepoint as a k-simplex, s_0^k(base).
    pub fn base_simplex(&self, k: usize) -> Option<usize> {
        let mut b = self.base?;
        for j in 0..k {
            b = self.degen(j, b, 0);
        }
        Some(b)
    }

    pub fn is_degenerate(&self, k: usize, s: usize) -> bool {
        k > 0 && (0..k).any(|i| self.degen(k - 1, self.face(k, s, i), i) == s)
    }

    pub fn nondegenerate(&self, k: usize) -> Vec<usize> {
        (0..self.count(k)).filter(|&s| !self.is_degenerate(k, s)).collect()
    }

    /// A constant simplicial set on the given points.
    pub fn discrete(dim: usize, points: &[&str]) -> TSSet {
        let keys: Vec<String> = points.iter().map(|s| s.to_string()).collect();
        TSSet::from_keys(dim, vec![keys; dim + 1], |_, s, _| s.clone(), |_, s, _| s.clone()).expect("discrete").0
    }

    pub fn point(dim: usize) -> TSSet {
        TSSet::discrete(dim, &["*"]).with_base(0)
    }

    /// Δ^n truncated at `dim`; simplices are monotone sequences in 0..=n.
    pub fn simplex(n: usize, dim: usize) -> TSSet {
        Self::simplex_filtered(n, dim, |_| true)
    }

    /// ∂Δ^n: the non-surjective sequences.
    pub fn boundary_simplex(n: usize, dim: usize) -> TSSet {
        Self::simplex_filtered(n, dim, |s| (0..=n).any(|v| !s.contains(&v)))
    }

    fn simplex_filtered(n: usize, dim: usize, keep: impl Fn(&[usize]) -> bool) -> TSSet {
        let simplices: Vec<Vec<Vec<usize>>> =
            (0..=dim).map(|k| monotone_sequences(k + 1, n).into_iter().filter(|s| keep(s)).collect()).collect();
        TSSet::from_keys(dim, simplices, |_, s, i| delete_at(s, i), |_, s, i| repeat_at(s, i)).expect("simplicial subcomplex").0
    }

    /// S¹ = Δ¹/∂Δ¹, with k nonbase k-simplices.
    pub fn circle(dim: usize) -> TSSet {
        let d1 = TSSet::simplex(1, dim);
        collapse(&d1, |k, s| {
            let l = d1.label(k, s);
            !(l.contains('0') && l.contains('1'))
        })
    }

    /// Validates and reads `{"D":..,"simplices":..,"faces":..,"degeneracies":..}`.
    pub fn from_json(v: &serde_json::Value) -> Result<TSSet> {
        let raw: RawTSSet = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("simplicial set: {e}")))?;
        if raw.simplices.len() != raw.d + 1 {
            return Err(Error::Parse("simplices must list dimensions 0..=D".into()));
        }
        let mut faces = vec![Vec::new()];
        let mut degens = Vec::new();
        for k in 0..=raw.d {
            let n = raw.simplices[k].len();
            if k > 0 {
                let f = raw.faces.get(&k.to_string()).cloned().ok_or_else(|| Error::Parse(format!("faces for dimension {k} missing")))?;
                if f.len() != n || f.iter().any(|r| r.len() != k + 1 || r.iter().any(|&t| t >= raw.simplices[k - 1].len())) {
                    return Err(Error::Parse(format!("bad face table in dimension {k}")));
                }
                faces.push(f);
            }
            if k < raw.d {
                let d = raw
                    .degeneracies
                    .get(&k.to_string())
                    .cloned()
                    .ok_or_else(|| Error::Parse(format!("degeneracies for dimension {k} missing")))?;
                if d.len() != n || d.iter().any(|r| r.len() != k + 1 || r.iter().any(|&t| t >= raw.simplices[k + 1].len())) {
                    return Err(Error::Parse(format!("bad degeneracy table in dimension {k}")));
                }
                degens.push(d);
            }
        }
        let index = raw.simplices.iter().map(|v| v.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect()).collect();
        Ok(TSSet { dim: raw.d, labels: raw.simplices, index, faces, degens, base: raw.basepoint })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let raw = RawTSSet {
            d: self.dim,
            simplices: self.labels.clone(),
            faces: (1..=self.dim).map(|k| (k.to_string(), self.faces[k].clone())).collect(),
            degeneracies: (0..self.dim).map(|k| (k.to_string(), self.degens[k].clone())).collect(),
            basepoint: self.base,
        };
        serde_json::to_value(raw).expect("serializable")
    }
}

pub(crate) fn monotone_sequences(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                let lo = s.last().copied().unwrap_or(0);
                (lo..=max).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

pub(crate) fn delete_at<T: Clone>(s: &[T], i: usize) -> Vec<T> {
    let mut t = s.to_vec();
    t.remove(i);
    t
}

pub(crate) fn repeat_at<T: Clone>(s: &[T], i: usize) -> Vec<T> {
    let mut t = s.to_vec();
    t.insert(i, s[i].clone());
    t
}

/// All simplicial identities on the stored range.
pub fn check_simplicial(x: &TSSet) -> CheckReport {
    let mut r = CheckReport::new("simplicial identities");
    let d = x.dim;
    for k in 0..=d {
        for s in 0..x.count(k) {
            if k >= 2 {
                for j in 1..=k {
                    for i in 0..j {
                        let l = x.face(k - 1, x.face(k, s, j), i);
                        let rr = x.face(k - 1, x.face(k, s, i), j - 1);
                        r.record(l == rr, || format!("d{i}d{j} on {}", x.label(k, s)), || format!("{l} vs {rr}"));
                    }
                }
            }
            if k < d {
                for j in 0..=k {
                    let t = x.degen(k, s, j);
                    let ok = x.face(k + 1, t, j) == s && x.face(k + 1, t, j + 1) == s;
                    r.record(ok, || format!("d{j}s{j}=d{}s{j}=id on {}", j + 1, x.label(k, s)), String::new);
                    for i in 0..=k + 1 {
                        if i < j {
                            let l = x.face(k + 1, t, i);
                            let rr = x.degen(k - 1, x.face(k, s, i), j - 1);
                            r.record(l == rr, || format!("d{i}s{j} on {}", x.label(k, s)), || format!("{l} vs {rr}"));
                        } else if i > j + 1 {
                            let l = x.face(k + 1, t, i);
                            let rr = x.degen(k - 1, x.face(k, s, i - 1), j);
                            r.record(l == rr, || format!("d{i}s{j} on {}", x.label(k, s)), || format!("{l} vs {rr}"));
                        }
                    }
                    if k + 1 < d {
                        for i in 0..=j {
                            let l = x.degen(k + 1, t, i);
                            let rr = x.degen(k + 1, x.degen(k, s, i), j + 1);
                            r.record(l == rr, || format!("s{i}s{j} on {}", x.label(k, s)), || format!("{l} vs {rr}"));
                        }
                    }
                }
            }
        }
    }
    r
}

/// X × Y.
pub fn product(x: &TSSet, y: &TSSet) -> TSSet {
    let d = x.dim.min(y.dim);
    let simplices: Vec<Vec<(usize, usize)>> =
        (0..=d).map(|k| (0..x.count(k)).flat_map(|a| (0..y.count(k)).map(move |b| (a, b))).collect()).collect();
    let (mut p, _) = TSSet::from_keys(
        d,
        simplices,
        |k, &(a, b), i| (x.face(k, a, i), y.face(k, b, i)),
        |k, &(a, b), i| (x.degen(k, a, i), y.degen(k, b, i)),
    )
    .expect("product is closed");
    relabel(&mut p, |k, s, _| format!("({},{})", x.label(k, s / y.count(k)), y.label(k, s % y.count(k))));
    if let (Some(bx), Some(by)) = (x.base, y.base) {
        p.base = Some(bx * y.count(0) + by);
    }
    p
}

fn relabel(x: &mut TSSet, f: impl Fn(usize, usize, &str) -> String) {
    for k in 0..=x.dim {
        for s in 0..x.count(k) {
            let l = f(k, s, &x.labels[k][s]);
            x.labels[k][s] = l;
        }
        x.index[k] = x.labels[k].iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    }
}

/// X/A for a subcomplex A (given by membership); the collapsed point is the
/// basepoint.
pub fn collapse(x: &TSSet, in_sub: impl Fn(usize, usize) -> bool) -> TSSet {
    let simplices: Vec<Vec<Option<usize>>> = (0..=x.dim)
        .map(|k| std::iter::once(None).chain((0..x.count(k)).filter(|&s| !in_sub(k, s)).map(Some)).collect())
        .collect();
    let (mut q, _) = TSSet::from_keys(
        x.dim,
        simplices,
        |k, s, i| s.map(|s| x.face(k, s, i)).filter(|&t| !in_sub(k - 1, t)),
        |k, s, i| s.map(|s| x.degen(k, s, i)),
    )
    .expect("quotient by a subcomplex is closed");
    relabel(&mut q, |k, s, _| if s == 0 { "*".to_string() } else { x.label(k, nth_kept(x, &in_sub, k, s - 1)).to_string() });
    q.base = Some(0);
    q
}

fn nth_kept(x: &TSSet, in_sub: &impl Fn(usize, usize) -> bool, k: usize, n: usize) -> usize {
    (0..x.count(k)).filter(|&s| !in_sub(k, s)).nth(n).expect("index in range")
}

/// X ∧ Y for based X, Y.
pub fn smash(x: &TSSet, y: &TSSet) -> Result<TSSet> {
    if x.base.is_none() || y.base.is_none() {
        return Err(Error::Invalid("smash needs based simplicial sets".into()));
    }
    let p = product(x, y);
    let yc: Vec<usize> = (0..=p.dim).map(|k| y.count(k)).collect();
    Ok(collapse(&p, |k, s| Some(s / yc[k]) == x.base_simplex(k) || Some(s % yc[k]) == y.base_simplex(k)))
}

/// X₊: X with a disjoint basepoint.
pub fn plus(x: &TSSet) -> TSSet {
    let simplices: Vec<Vec<Option<usize>>> = (0..=x.dim).map(|k| std::iter::once(None).chain((0..x.count(k)).map(Some)).collect()).collect();
    let (mut p, _) =
        TSSet::from_keys(x.dim, simplices, |k, s, i| s.map(|s| x.face(k, s, i)), |k, s, i| s.map(|s| x.degen(k, s, i))).expect("closed");
    relabel(&mut p, |k, s, _| if s == 0 { "+".to_string() } else { x.label(k, s - 1).to_string() });
    p.base = Some(0);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplices_are_simplicial() {
        for x in [TSSet::simplex(2, 3), TSSet::boundary_simplex(2, 3), TSSet::circle(3), TSSet::point(3)] {
            assert!(check_simplicial(&x).passed());
        }
        let s1 = TSSet::circle(3);
        // k nonbase k-simplices plus the base
        assert_eq!((0..=3).map(|k| s1.count(k)).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(s1.nondegenerate(1).len(), 1);
    }

    #[test]
    fn products_and_smash() {
        let s1 = TSSet::circle(3);
        let p = product(&s1, &s1);
        assert!(check_simplicial(&p).passed());
        let sm = smash(&s1, &s1).unwrap();
        assert!(check_simplicial(&sm).passed());
        assert_eq!(sm.count(0), 1);
        let pl = plus(&TSSet::point(2));
        assert_eq!(pl.count(0), 2);
        assert!(check_simplicial(&pl).passed());
    }

    #[test]
    fn json_roundtrip_and_maps() {
        let x = TSSet::circle(2);
        let y = TSSet::from_json(&x.to_json()).unwrap();
        assert_eq!(x, y);
        let id = SMap::identity(&x);
        assert!(id.is_simplicial(&x, &x) && id.is_injective());
        let mut bad = x.to_json();
        bad["faces"]["1"][0][0] = serde_json::json!(7);
        assert!(TSSet::from_json(&bad).is_err());
    }

    #[test]
    fn corrupted_face_table_is_caught() {
        let mut x = TSSet::simplex(2, 2);
        let s = x.lookup(2, "[0, 1, 2]").unwrap();
        x.faces[2][s][0] = x.faces[2][s][2];
        assert!(!check_simplicial(&x).passed());
    }
}
