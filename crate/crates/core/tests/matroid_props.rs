//! Invariants of the polymatroidal constructors and depth.

use monostab::matroid::uniform;
use monostab::{
    cover_profile, exact_depth, graphic_ideal, is_matroidal, is_polymatroidal, random_instance,
    veronese_type, EngineConfig, Graph, Monomial, RandomFamily, RandomSpec,
};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = RandomFamily> {
    prop_oneof![
        Just(RandomFamily::Graphic),
        Just(RandomFamily::Transversal),
        Just(RandomFamily::Veronese),
    ]
}

/// A small instance, so that powers stay cheap in debug builds.
fn small(fam: RandomFamily, seed: u64) -> monostab::MonomialIdeal {
    let mut spec = RandomSpec::new(fam, seed);
    spec.vars = Some(3 + (seed % 3) as usize);
    spec.vertices = Some(3 + (seed % 2) as usize);
    random_instance(&spec).unwrap().ideal
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        p.swap(i, (s >> 33) as usize % (i + 1));
    }
    p
}

/// Spanning-tree count: any cofactor of the Laplacian, by Bareiss elimination.
fn spanning_trees(v: usize, edges: &[(usize, usize)]) -> i128 {
    let mut lap = vec![vec![0i128; v]; v];
    for &(a, b) in edges {
        lap[a][a] += 1;
        lap[b][b] += 1;
        lap[a][b] -= 1;
        lap[b][a] -= 1;
    }
    let mut m: Vec<Vec<i128>> = lap[1..].iter().map(|r| r[1..].to_vec()).collect();
    let k = m.len();
    let (mut prev, mut sign) = (1i128, 1i128);
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[c][c] * m[r][j] - m[r][c] * m[c][j]) / prev;
            }
        }
        prev = m[c][c];
    }
    sign * if k == 0 { 1 } else { m[k - 1][k - 1] }
}

fn simple_graph(v: usize, mask: u16) -> Vec<(usize, usize)> {
    let pairs = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b)));
    pairs
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exchange_survives_renaming(fam in family(), seed in 0u64..500, perm_seed in any::<u64>()) {
        let i = random_instance(&RandomSpec::new(fam, seed)).unwrap().ideal;
        prop_assert!(is_matroidal(&i));
        let p = i.permute(&permutation(i.num_vars(), perm_seed)).unwrap();
        prop_assert!(is_matroidal(&p));
        prop_assert!(is_polymatroidal(&p).holds());
    }

    #[test]
    fn powers_and_colons_stay_polymatroidal(fam in family(), seed in 0u64..500, k in 2u32..=3, var in 0usize..10) {
        let i = small(fam, seed);
        let n = i.num_vars();
        let power = i.power(k).unwrap();
        prop_assert!(is_polymatroidal(&power).holds());
        let colon = power.colon(&Monomial::var(var % n, n)).unwrap();
        prop_assert!(is_polymatroidal(&colon).holds());
    }

    #[test]
    fn every_variable_is_covered_d_times(fam in family(), seed in 0u64..500) {
        let i = random_instance(&RandomSpec::new(fam, seed)).unwrap().ideal;
        let d = i.degree().unwrap() as usize;
        prop_assert!(cover_profile(&i).min().unwrap() >= d);
    }

    #[test]
    fn graphic_generators_count_spanning_trees(v in 2usize..=5, mask in any::<u16>()) {
        let edges = simple_graph(v, mask);
        let g = Graph::new(v, edges.clone()).unwrap();
        prop_assume!(g.is_connected());
        let i = graphic_ideal(&g).unwrap();
        prop_assert_eq!(i.len() as i128, spanning_trees(v, &edges));
        prop_assert!(is_matroidal(&i));
    }

    #[test]
    fn depth_survives_renaming(fam in family(), seed in 0u64..200, perm_seed in any::<u64>()) {
        let cfg = EngineConfig::default();
        let i = small(fam, seed);
        let p = i.permute(&permutation(i.num_vars(), perm_seed)).unwrap();
        let (a, b) = (exact_depth(&i, &cfg).unwrap(), exact_depth(&p, &cfg).unwrap());
        prop_assert_eq!(a.depth, b.depth);
        prop_assert_eq!(a.pd, b.pd);
    }
}

#[test]
fn veronese_type_counts_bounded_compositions() {
    // Monomials of degree 3 in 4 variables with every exponent at most 2.
    let i = veronese_type(4, 3, &[2, 2, 2, 2]).unwrap();
    let brute = (0..81u32)
        .filter(|c| {
            let e = [c % 3, c / 3 % 3, c / 9 % 3, c / 27];
            e.iter().sum::<u32>() == 3
        })
        .count();
    assert_eq!(i.len(), brute);
    assert!(is_polymatroidal(&i).holds());
    assert_eq!(uniform(5, 2).unwrap().len(), 10);
}
