//! Integral homology of truncated simplicial sets on normalized chains.

use std::fmt;

use serde::Serialize;

use super::sset::TSSet;
use crate::error::{Error, Result};

/// H_k ≅ ℤ^rank ⊕ ⊕ ℤ/t.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<i128>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Boundary matrix of normalized chains C_k → C_{k-1}, rows indexed by
/// nondegenerate (k-1)-simplices.
fn boundary(x: &TSSet, k: usize, rows: &[usize], cols: &[usize]) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; cols.len()]; rows.len()];
    let pos: std::collections::HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    for (c, &s) in cols.iter().enumerate() {
        for i in 0..=k {
            if let Some(&r) = pos.get(&x.face(k, s, i)) {
                m[r][c] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    m
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
pub fn smith_invariants(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero magnitude in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if !dirty {
                // ensure p divides the rest of the block
                let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                        continue;
                    }
                }
            }
            // move a smaller remainder into the pivot position
            let mut best = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// H_0..=H_max_deg; needs max_deg + 1 ≤ D.
pub fn homology(x: &TSSet, max_deg: usize) -> Result<Vec<HomologyGroup>> {
    if max_deg + 1 > x.dim {
        return Err(Error::Truncation(format!("homology up to degree {max_deg} needs D >= {}, have {}", max_deg + 1, x.dim)));
    }
    let nd: Vec<Vec<usize>> = (0..=max_deg + 1).map(|k| x.nondegenerate(k)).collect();
    // invariants of ∂_k for k = 1..=max_deg+1
    let inv: Vec<Vec<i128>> = (0..=max_deg + 1)
        .map(|k| if k == 0 { vec![] } else { smith_invariants(boundary(x, k, &nd[k - 1], &nd[k])) })
        .collect();
    Ok((0..=max_deg)
        .map(|k| {
            let rank_out = inv[k].len();
            let rank_in = inv[k + 1].len();
            HomologyGroup { rank: nd[k].len() - rank_out - rank_in, torsion: inv[k + 1].iter().copied().filter(|&t| t > 1).collect() }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bspace::sset::{smash, TSSet};

    #[test]
    fn point_and_circles() {
        let h = homology(&TSSet::point(3), 2).unwrap();
        assert_eq!(h, vec![HomologyGroup::free(1), HomologyGroup::free(0), HomologyGroup::free(0)]);
        let b = homology(&TSSet::boundary_simplex(2, 3), 2).unwrap();
        assert_eq!(b, vec![HomologyGroup::free(1), HomologyGroup::free(1), HomologyGroup::free(0)]);
        let c = homology(&TSSet::circle(2), 1).unwrap();
        assert_eq!(c, vec![HomologyGroup::free(1), HomologyGroup::free(1)]);
        assert!(homology(&TSSet::point(1), 1).is_err());
    }

    #[test]
    fn two_sphere_from_smash() {
        let s1 = TSSet::circle(3);
        let s2 = smash(&s1, &s1).unwrap();
        let h = homology(&s2, 2).unwrap();
        assert_eq!(h, vec![HomologyGroup::free(1), HomologyGroup::free(0), HomologyGroup::free(1)]);
    }

    #[test]
    fn smith_form_small_cases() {
        assert_eq!(smith_invariants(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_invariants(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(vec![vec![0, 0]]), Vec::<i128>::new());
    }
}
