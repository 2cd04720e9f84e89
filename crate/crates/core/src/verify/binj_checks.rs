//! Randomized oracles for composition in 𝔅: associativity, the ξ_*/μ* square,
//! functoriality of Π and Υ, interchange, and the braiding laws.

use rand::Rng as _;

use crate::binj::random::{braid, braided_injection, order_inj};
use crate::binj::{chi_morphism, compose, partial_gen, pi, pullback, pushforward, tensor, upsilon, BraidedInjection};
use crate::report::CheckReport;
use crate::Rng;

fn sizes(rng: &mut Rng, count: usize, max: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..count).map(|_| rng.gen_range(0..=max)).collect();
    v.sort_unstable();
    v
}

/// h∘(g∘f) = (h∘g)∘f for random m ≤ n ≤ p ≤ q ≤ `max_obj`.
pub fn check_associativity(samples: usize, max_obj: usize, word_len: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new("associativity");
    for _ in 0..samples {
        let s = sizes(rng, 4, max_obj);
        let f = braided_injection(rng, s[0], s[1], word_len);
        let g = braided_injection(rng, s[1], s[2], word_len);
        let h = braided_injection(rng, s[2], s[3], word_len);
        let left = compose(&g, &f).and_then(|gf| compose(&h, &gf));
        let right = compose(&h, &g).and_then(|hg| compose(&hg, &f));
        r.record(left.is_ok() && left == right, || format!("f={f} g={g} h={h}"), || format!("{left:?} vs {right:?}"));
    }
    r
}

/// Υ(ξ_*(μ))∘μ*(ξ) = ξ∘Υ(μ).
pub fn check_pullback_square(samples: usize, max_obj: usize, word_len: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new("pushforward-pullback square");
    for _ in 0..samples {
        let s = sizes(rng, 2, max_obj);
        let mu = order_inj(rng, s[0], s[1]);
        let xi = braid(rng, s[1], word_len);
        let left = pushforward(&xi, &mu)
            .and_then(|p| pullback(&mu, &xi).and_then(|q| compose(&upsilon(&p), &BraidedInjection::from_braid(q))));
        let right = compose(&BraidedInjection::from_braid(xi.clone()), &upsilon(&mu));
        r.record(left.is_ok() && left == right, || format!("mu={:?} xi={}", mu.image(), xi.to_word()), || format!("{left:?} vs {right:?}"));
    }
    r
}

/// Π(g∘f) = Π(g)∘Π(f), Υ(ν∘μ) = Υ(ν)∘Υ(μ), Π(f⊔g) = Π(f)⊔Π(g) and
/// (g1⊔g2)∘(f1⊔f2) = (g1∘f1)⊔(g2∘f2).
pub fn check_functors(samples: usize, max_obj: usize, word_len: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new("functoriality");
    for _ in 0..samples {
        let s = sizes(rng, 3, max_obj);
        let f = braided_injection(rng, s[0], s[1], word_len);
        let g = braided_injection(rng, s[1], s[2], word_len);
        let gf = compose(&g, &f);
        let ok = matches!((&gf, pi(&g).after(&pi(&f))), (Ok(c), Ok(p)) if pi(c) == p);
        r.record(ok, || format!("pi f={f} g={g}"), String::new);
        let (mu, nu) = (order_inj(rng, s[0], s[1]), order_inj(rng, s[1], s[2]));
        let ok = matches!((nu.after(&mu), compose(&upsilon(&nu), &upsilon(&mu))), (Ok(a), Ok(b)) if upsilon(&a) == b);
        r.record(ok, || format!("upsilon mu={:?} nu={:?}", mu.image(), nu.image()), String::new);
        r.record(pi(&tensor(&f, &g)) == pi(&f).tensor(&pi(&g)), || format!("pi monoidal f={f} g={g}"), String::new);
        let t = sizes(rng, 3, max_obj);
        let f2 = braided_injection(rng, t[0], t[1], word_len);
        let g2 = braided_injection(rng, t[1], t[2], word_len);
        let left = compose(&tensor(&g, &g2), &tensor(&f, &f2));
        let right = compose(&g2, &f2).and_then(|b| compose(&g, &f).map(|a| tensor(&a, &b)));
        r.record(left.is_ok() && left == right, || format!("interchange f={f} g={g} f2={f2} g2={g2}"), String::new);
    }
    r
}

/// The ∂/χ figure equality, naturality (g⊔f)∘χ_{m,n} = χ_{m',n'}∘(f⊔g) on
/// random pairs, both hexagons for l, m, n ≤ 3 and χ invertibility.
pub fn check_braiding(samples: usize, max_obj: usize, word_len: usize, rng: &mut Rng) -> CheckReport {
    let mut r = CheckReport::new("braiding");
    let d = partial_gen(2, 3).expect("valid generator");
    let id2 = BraidedInjection::identity(2);
    let lhs = compose(&tensor(&d, &id2), &chi_morphism(2, 3));
    let rhs = compose(&chi_morphism(2, 4), &tensor(&id2, &d));
    r.record(lhs.is_ok() && lhs == rhs, || "figure (d2@3 + id2) chi(2,3)".into(), || format!("{lhs:?} vs {rhs:?}"));
    let half = max_obj / 2;
    for _ in 0..samples {
        let a = sizes(rng, 2, half);
        let b = sizes(rng, 2, half);
        let f = braided_injection(rng, a[0], a[1], word_len);
        let g = braided_injection(rng, b[0], b[1], word_len);
        let left = compose(&tensor(&g, &f), &chi_morphism(a[0], b[0]));
        let right = compose(&chi_morphism(a[1], b[1]), &tensor(&f, &g));
        r.record(left.is_ok() && left == right, || format!("naturality f={f} g={g}"), || format!("{left:?} vs {right:?}"));
    }
    for l in 0..=3 {
        for m in 0..=3 {
            r.record(chi_morphism(l, m).inverse().and_then(|i| compose(&i, &chi_morphism(l, m))) == Ok(BraidedInjection::identity(l + m)), || format!("invertible ({l},{m})"), String::new);
            for n in 0..=3 {
                let id = BraidedInjection::identity;
                let one = compose(&tensor(&chi_morphism(l, n), &id(m)), &tensor(&id(l), &chi_morphism(m, n)));
                r.record(one == Ok(chi_morphism(l + m, n)), || format!("hexagon-left ({l},{m},{n})"), String::new);
                let two = compose(&tensor(&id(m), &chi_morphism(l, n)), &tensor(&chi_morphism(l, m), &id(n)));
                r.record(two == Ok(chi_morphism(l, m + n)), || format!("hexagon-right ({l},{m},{n})"), String::new);
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    #[test]
    fn oracles_pass_on_small_runs() {
        let mut g = rng(0);
        for rep in [
            check_associativity(100, 5, 8, &mut g),
            check_pullback_square(100, 5, 8, &mut g),
            check_functors(100, 5, 8, &mut g),
            check_braiding(100, 5, 8, &mut g),
        ] {
            assert!(rep.passed(), "{}: {:?}", rep.name, &rep.failures[..rep.failures.len().min(3)]);
            assert!(rep.instances >= 100);
        }
    }
}
