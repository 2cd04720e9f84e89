use std::fmt;

use super::{compose, partial_gen, zeta_gen, BraidedInjection};
use crate::error::{dim_err, Error, Result};
use crate::report::CheckReport;

/// A generator of 𝔅: ζ^i_n, (ζ^i_n)⁻¹ or ∂^i_n, with n the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Zeta { i: usize, n: usize, positive: bool },
    Partial { i: usize, n: usize },
}

impl Gen {
    pub fn source(self) -> usize {
        match self {
            Gen::Zeta { n, .. } | Gen::Partial { n, .. } => n,
        }
    }

    pub fn target(self) -> usize {
        match self {
            Gen::Zeta { n, .. } => n,
            Gen::Partial { n, .. } => n + 1,
        }
    }

    pub fn morphism(self) -> Result<BraidedInjection> {
        match self {
            Gen::Zeta { i, n, positive } => zeta_gen(i, n, positive),
            Gen::Partial { i, n } => partial_gen(i, n),
        }
    }

    pub fn parse(tok: &str) -> Result<Gen> {
        let bad = || Error::Parse(format!("bad generator '{tok}'"));
        let (body, n) = tok.split_once('@').ok_or_else(bad)?;
        let n: usize = n.parse().map_err(|_| bad())?;
        if let Some(rest) = body.strip_prefix('z') {
            let (i, positive) = match rest.strip_suffix("^-1") {
                Some(i) => (i, false),
                None => (rest, true),
            };
            Ok(Gen::Zeta { i: i.parse().map_err(|_| bad())?, n, positive })
        } else if let Some(i) = body.strip_prefix('d') {
            Ok(Gen::Partial { i: i.parse().map_err(|_| bad())?, n })
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::Zeta { i, n, positive: true } => write!(f, "z{i}@{n}"),
            Gen::Zeta { i, n, positive: false } => write!(f, "z{i}^-1@{n}"),
            Gen::Partial { i, n } => write!(f, "d{i}@{n}"),
        }
    }
}

pub fn parse_gen_word(tokens: &[String]) -> Result<Vec<Gen>> {
    tokens.iter().map(|t| Gen::parse(t)).collect()
}

/// Left-to-right composite of generators; the empty word needs `start`.
pub fn from_word(start: usize, word: &[Gen]) -> Result<BraidedInjection> {
    let mut acc = BraidedInjection::identity(start);
    for (k, g) in word.iter().enumerate() {
        if g.source() != acc.target() {
            return dim_err(format!("letter {k} ({g}) has source {} but previous target is {}", g.source(), acc.target()));
        }
        acc = compose(&g.morphism()?, &acc)?;
    }
    Ok(acc)
}

/// One relation of the presentation, both sides in application order.
#[derive(Debug, Clone)]
pub struct RelationInstance {
    pub family: &'static str,
    pub lhs: Vec<Gen>,
    pub rhs: Vec<Gen>,
}

impl RelationInstance {
    pub fn source(&self) -> usize {
        self.lhs[0].source()
    }

    pub fn target(&self) -> usize {
        self.lhs.last().unwrap().target()
    }

    pub fn key(&self) -> String {
        let side = |w: &[Gen]| w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
        format!("{}: [{}] = [{}]", self.family, side(&self.lhs), side(&self.rhs))
    }
}

fn z(i: usize, n: usize) -> Gen {
    Gen::Zeta { i, n, positive: true }
}

fn d(i: usize, n: usize) -> Gen {
    Gen::Partial { i, n }
}

/// Every instance of the four relation families with subscript n ≤ n_max.
pub fn relation_instances(n_max: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for i in 1..n {
            for j in i + 2..n {
                out.push(RelationInstance { family: "commute", lhs: vec![z(j, n), z(i, n)], rhs: vec![z(i, n), z(j, n)] });
            }
            if i + 1 < n {
                out.push(RelationInstance {
                    family: "braid",
                    lhs: vec![z(i, n), z(i + 1, n), z(i, n)],
                    rhs: vec![z(i + 1, n), z(i, n), z(i + 1, n)],
                });
            }
        }
        // ∂^i_{n+1} ∂^j_n = ∂^{j+1}_{n+1} ∂^i_n, i ≤ j
        for j in 1..=n + 1 {
            for i in 1..=j {
                out.push(RelationInstance {
                    family: "partial-partial",
                    lhs: vec![d(j, n), d(i, n + 1)],
                    rhs: vec![d(i, n), d(j + 1, n + 1)],
                });
            }
        }
        // ζ^i_{n+1} ∂^j_n
        for i in 1..=n {
            for j in 1..=n + 1 {
                let rhs = if j < i {
                    vec![z(i - 1, n), d(j, n)]
                } else if j == i {
                    vec![d(j + 1, n)]
                } else if j == i + 1 {
                    vec![d(j - 1, n)]
                } else {
                    vec![z(i, n), d(j, n)]
                };
                out.push(RelationInstance { family: "zeta-partial", lhs: vec![d(j, n), z(i, n + 1)], rhs });
            }
        }
    }
    out
}

pub fn verify_presentation(n_max: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("presentation n<={n_max}"));
    for inst in relation_instances(n_max) {
        let lhs = from_word(inst.source(), &inst.lhs);
        let rhs = from_word(inst.source(), &inst.rhs);
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => report.record(a == b, || inst.key(), || format!("{a} != {b}")),
            (a, b) => report.fail(inst.key(), format!("evaluation error: {a:?} / {b:?}")),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binj::OrderInj;

    #[test]
    fn word_evaluation() {
        let w = parse_gen_word(&["z1@2".into(), "d3@2".into()]).unwrap();
        let f = from_word(2, &w).unwrap();
        assert_eq!(f.mu, OrderInj::new(3, vec![1, 2]).unwrap());
        assert_eq!(f.zeta, crate::braid::GarsideNF::parse(2, "z1").unwrap());
        assert_eq!(from_word(3, &[]).unwrap(), BraidedInjection::identity(3));
        assert!(from_word(2, &parse_gen_word(&["d1@3".into()]).unwrap()).is_err());
        assert!(Gen::parse("q1@2").is_err());
        assert_eq!(Gen::parse("z2^-1@4").unwrap().to_string(), "z2^-1@4");
    }

    #[test]
    fn small_presentation_passes() {
        let r = verify_presentation(2);
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.instances > 0);
    }

    #[test]
    fn mixed_case_j_equals_i() {
        for n in 1..5 {
            for i in 1..=n {
                let lhs = from_word(n, &[d(i, n), z(i, n + 1)]).unwrap();
                assert_eq!(lhs, from_word(n, &[d(i + 1, n)]).unwrap());
            }
        }
    }

    #[test]
    fn morphisms_out_of_zero_are_unique() {
        for n in 0..=5 {
            let mut words: Vec<Vec<Gen>> = vec![vec![]];
            for k in 0..n {
                words = words
                    .into_iter()
                    .flat_map(|w| {
                        (1..=k + 1).map(move |i| {
                            let mut x = w.clone();
                            x.push(d(i, k));
                            x
                        })
                    })
                    .collect();
            }
            let first = from_word(0, &words[0]).unwrap();
            assert!(words.iter().all(|w| from_word(0, w).unwrap() == first));
        }
    }
}
