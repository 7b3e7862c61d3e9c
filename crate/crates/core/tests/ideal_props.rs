//! Algebraic laws of the monomial-ideal layer, against brute-force oracles.

use monostab::{Monomial, MonomialIdeal, PrimeSupport};
use proptest::prelude::*;

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::new(&e))
}

fn gens_and_ideal(max_n: usize) -> impl Strategy<Value = (usize, Vec<Monomial>)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), prop::collection::vec(monomial(n, 3), 1..6)))
}

fn ideal(max_n: usize) -> impl Strategy<Value = MonomialIdeal> {
    gens_and_ideal(max_n).prop_map(|(n, g)| MonomialIdeal::minimalize(g, n).unwrap())
}

/// Divisibility-only membership test.
fn member(gens: &[Monomial], u: &Monomial) -> bool {
    gens.iter()
        .any(|g| (0..u.num_vars()).all(|k| g.exponent(k) <= u.exponent(k)))
}

/// Every exponent vector in `0..=bound` per coordinate.
fn grid(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                (0..=bound).map(move |x| {
                    let mut e = e.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    out.iter().map(|e| Monomial::new(e)).collect()
}

fn mul(a: &Monomial, b: &Monomial) -> Monomial {
    a.checked_mul(b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimal_generators_ignore_input_order((n, gens) in gens_and_ideal(4), seed in any::<u64>()) {
        let mut shuffled = gens.clone();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        shuffled.reverse();
        let a = MonomialIdeal::minimalize(gens.clone(), n).unwrap();
        let b = MonomialIdeal::minimalize(shuffled, n).unwrap();
        prop_assert_eq!(&a, &b);
        // Minimal: no generator divides another, and the ideal is unchanged.
        for (i, g) in a.generators().iter().enumerate() {
            for (j, h) in a.generators().iter().enumerate() {
                prop_assert!(i == j || !g.divides(h));
            }
        }
        for g in &gens {
            prop_assert!(member(a.generators(), g));
        }
    }

    #[test]
    fn colon_is_adjoint_to_multiplication(i in ideal(3), exps in prop::collection::vec(0u32..=2, 3)) {
        let n = i.num_vars();
        let u = Monomial::new(&exps[..n]);
        let colon = i.colon(&u).unwrap();
        for w in grid(n, 3) {
            prop_assert_eq!(
                member(colon.generators(), &w),
                member(i.generators(), &mul(&u, &w)),
                "w = {:?}", w.exponents()
            );
        }
    }

    #[test]
    fn powers_add(i in ideal(3), a in 1u32..=3, b in 1u32..=2) {
        let lhs = i.power(a).unwrap().multiply(&i.power(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, i.power(a + b).unwrap());
    }

    #[test]
    fn intersection_is_common_membership(i in ideal(3), j in ideal(3)) {
        prop_assume!(i.num_vars() == j.num_vars());
        let both = i.intersect(&j).unwrap();
        for w in grid(i.num_vars(), 4) {
            prop_assert_eq!(
                member(both.generators(), &w),
                member(i.generators(), &w) && member(j.generators(), &w)
            );
        }
    }

    #[test]
    fn localization_commutes_with_powers(i in ideal(4), mask in any::<u8>(), k in 1u32..=3) {
        let n = i.num_vars();
        let p = PrimeSupport::new(n, (0..n).filter(|v| mask >> v & 1 == 1)).unwrap();
        let lhs = i.power(k).unwrap().localize(&p).unwrap().ideal;
        let rhs = i.localize(&p).unwrap().ideal.power(k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_localization_is_a_colon(i in ideal(4), mask in any::<u8>()) {
        let n = i.num_vars();
        let sq = MonomialIdeal::minimalize(
            i.generators().iter().map(|g| Monomial::from_support(n, &g.support())),
            n,
        ).unwrap();
        let kept: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let outside: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        let p = PrimeSupport::new(n, kept.iter().copied()).unwrap();
        let loc = sq.localize(&p).unwrap();
        let colon = sq.colon(&Monomial::from_support(n, &outside)).unwrap();
        // The colon's generators avoid the inverted variables, so embedding
        // the localization back recovers it exactly.
        prop_assert_eq!(loc.ideal.embed(n, &loc.vars).unwrap(), colon);
    }

    #[test]
    fn socle_detection_matches_brute_force(i in ideal(4)) {
        prop_assume!(!i.is_unit());
        let n = i.num_vars();
        let top = i.generators().iter().flat_map(|g| g.exponents().to_vec()).max().unwrap_or(0);
        let in_i = |u: &Monomial| member(i.generators(), u);
        // Any socle element has every exponent below the largest generator exponent.
        let brute: Vec<Monomial> = grid(n, top.saturating_sub(1))
            .into_iter()
            .filter(|u| !in_i(u) && (0..n).all(|k| in_i(&mul(u, &Monomial::var(k, n)))))
            .collect();
        prop_assert_eq!(i.m_associated(), !brute.is_empty());
        prop_assert_eq!(i.saturation_excess().is_empty(), brute.is_empty());
        prop_assert_eq!(i.socle_generators().is_empty(), brute.is_empty());
        if let Some(u) = i.socle_element() {
            prop_assert!(brute.contains(&u));
        }
        for u in i.socle_generators() {
            prop_assert!(brute.contains(&u));
        }
    }
}
