//! Multigraded Betti numbers from upper Koszul simplicial complexes.
//!
//! For a multidegree `a`, the complex `K^a(J)` has faces the square-free
//! `F ⊆ supp(a)` with `x^{a-F} ∈ J`, and `β_{i,a}(J) = dim H̃_{i-1}(K^a(J))`.
//! Only multidegrees in the lcm lattice of `G(J)` can carry Betti numbers.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::config::{EngineConfig, FieldChoice};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{Membership, MonomialIdeal};
use crate::linalg::rank;
use crate::monomial::Monomial;

/// Nonzero `β_{i,a}(J)` of the ideal `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, a: &Monomial) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, a), &b)| (*i, a, b))
    }

    /// Total Betti number `β_i(J)`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// Totals `β_0(J), β_1(J), ...` up to the last nonzero one.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().map(|(i, _)| *i).max();
        match top {
            None => Vec::new(),
            Some(t) => (0..=t).map(|i| self.total(i)).collect(),
        }
    }

    /// `pd(R/J) = 1 + pd(J)`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i + 1).max().unwrap_or(0)
    }

    /// `depth R/J = n - pd(R/J)`.
    pub fn depth(&self) -> usize {
        self.n - self.projective_dimension()
    }
}

/// All least common multiples of nonempty subsets of `G(J)`.
pub fn lcm_lattice(j: &MonomialIdeal, cap: usize) -> Result<Vec<Monomial>> {
    let mut lattice: HashSet<Monomial> = HashSet::new();
    for g in j.generators() {
        let joins: Vec<Monomial> = lattice.iter().map(|x| x.lcm(g)).collect();
        lattice.insert(g.clone());
        lattice.extend(joins);
        if lattice.len() > cap {
            return Err(Error::Resource(format!(
                "lcm lattice exceeds {cap} elements"
            )));
        }
    }
    let mut out: Vec<Monomial> = lattice.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Reduced homology dimensions of `K^a(J)`, indexed by face size: entry `i`
/// is `dim H̃_{i-1}`, which is `β_{i,a}(J)`.
fn koszul_homology<F: Field>(a: &Monomial, member: &Membership<'_>) -> Vec<usize> {
    let vars = a.support();
    let s = vars.len();
    // Faces by size, as bitmasks over positions in `vars`.
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1u32 << s) {
        let mut e = a.exponents().to_vec();
        for (k, &v) in vars.iter().enumerate() {
            if mask >> k & 1 == 1 {
                e[v] -= 1;
            }
        }
        if member.contains(&Monomial::new(&e)) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    if faces[0].is_empty() {
        return vec![0; s + 1];
    }
    // rank of ∂_k : C_k → C_{k-1}, faces of size k to size k-1; ∂_0 = 0.
    let mut ranks = vec![0usize; s + 2];
    for k in 1..=s {
        if faces[k].is_empty() {
            continue;
        }
        let index: HashMap<u32, usize> = faces[k - 1]
            .iter()
            .enumerate()
            .map(|(r, &m)| (m, r))
            .collect();
        let mut rows = vec![vec![F::zero(); faces[k - 1].len()]; faces[k].len()];
        for (c, &face) in faces[k].iter().enumerate() {
            let mut sign = F::one();
            for bit in 0..s {
                if face >> bit & 1 == 1 {
                    let r = index[&(face & !(1 << bit))];
                    rows[c][r] = sign.clone();
                    sign = -sign;
                }
            }
        }
        ranks[k] = rank(rows);
    }
    (0..=s)
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

fn check_scope(j: &MonomialIdeal, cfg: &EngineConfig) -> Result<()> {
    if j.is_zero() || j.is_unit() {
        return Err(Error::Invalid(
            "exact depth needs a proper nonzero ideal".into(),
        ));
    }
    if j.len() > cfg.max_generators {
        return Err(Error::Resource(format!(
            "{} generators exceed the exact-depth cap of {}",
            j.len(),
            cfg.max_generators
        )));
    }
    if j.num_vars() > 31 {
        return Err(Error::Resource(
            "exact depth limited to 31 variables".into(),
        ));
    }
    Ok(())
}

/// Multigraded Betti numbers of `J` over the field `F`.
pub fn betti_table<F: Field>(j: &MonomialIdeal, cfg: &EngineConfig) -> Result<BettiTable> {
    check_scope(j, cfg)?;
    let lattice = lcm_lattice(j, cfg.max_lattice)?;
    let member = Membership::new(j);
    let per_degree: Vec<(Monomial, Vec<usize>)> = lattice
        .into_par_iter()
        .map(|a| {
            let h = koszul_homology::<F>(&a, &member);
            (a, h)
        })
        .collect();
    let mut entries = BTreeMap::new();
    for (a, h) in per_degree {
        for (i, b) in h.into_iter().enumerate() {
            if b > 0 {
                entries.insert((i, a.clone()), b);
            }
        }
    }
    Ok(BettiTable {
        n: j.num_vars(),
        entries,
    })
}

/// Betti table over a field chosen at runtime.
pub fn betti_table_over(
    j: &MonomialIdeal,
    field: FieldChoice,
    cfg: &EngineConfig,
) -> Result<BettiTable> {
    match field {
        FieldChoice::Rational => betti_table::<crate::Rational>(j, cfg),
        FieldChoice::F2 => betti_table::<crate::F2>(j, cfg),
        FieldChoice::F3 => betti_table::<crate::F3>(j, cfg),
        FieldChoice::F32003 => betti_table::<crate::F32003>(j, cfg),
        FieldChoice::Mersenne31 => betti_table::<crate::Fp>(j, cfg),
    }
}

/// Depth and projective dimension of `R/J` from its Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactDepth {
    pub depth: usize,
    pub pd: usize,
    pub betti: BettiTable,
    pub field: FieldChoice,
    /// Set when a check field was configured: whether its Betti table differed.
    pub field_discrepancy: Option<bool>,
}

pub fn exact_depth(j: &MonomialIdeal, cfg: &EngineConfig) -> Result<ExactDepth> {
    let betti = betti_table_over(j, cfg.field, cfg)?;
    let field_discrepancy = match cfg.check_field {
        Some(other) if other != cfg.field => Some(betti_table_over(j, other, cfg)? != betti),
        _ => None,
    };
    Ok(ExactDepth {
        depth: betti.depth(),
        pd: betti.projective_dimension(),
        betti,
        field: cfg.field,
        field_discrepancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::new(g)), n).unwrap()
    }

    #[test]
    fn koszul_resolution_of_maximal_ideal() {
        let cfg = EngineConfig::default();
        for n in 1..=4 {
            let e = exact_depth(&MonomialIdeal::maximal(n), &cfg).unwrap();
            assert_eq!((e.depth, e.pd), (0, n));
            // β_i(m) = C(n, i+1)
            let binom = |k: usize| (0..k).fold(1usize, |acc, t| acc * (n - t) / (t + 1));
            let expected: Vec<usize> = (0..n).map(|i| binom(i + 1)).collect();
            assert_eq!(e.betti.totals(), expected);
        }
    }

    #[test]
    fn k3_betti_numbers() {
        let cfg = EngineConfig::default();
        let k3 = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let e = exact_depth(&k3, &cfg).unwrap();
        assert_eq!(e.betti.totals(), vec![3, 2]);
        assert_eq!((e.depth, e.pd), (1, 2));
        let sq = exact_depth(&k3.power(2).unwrap(), &cfg).unwrap();
        assert_eq!(sq.depth, 0);
    }

    #[test]
    fn generators_are_degree_zero_betti() {
        let cfg = EngineConfig::default();
        let j = ideal(3, &[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let t = betti_table_over(&j, FieldChoice::Rational, &cfg).unwrap();
        for g in j.generators() {
            assert_eq!(t.get(0, g), 1);
        }
        assert_eq!(t.total(0), 3);
    }

    #[test]
    fn fields_agree_on_small_example() {
        let cfg = EngineConfig {
            check_field: Some(FieldChoice::F2),
            ..EngineConfig::default()
        };
        let j = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let e = exact_depth(&j, &cfg).unwrap();
        assert_eq!(e.field_discrepancy, Some(false));
    }

    #[test]
    fn lattice_cap() {
        let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(lcm_lattice(&j, 100).unwrap().len(), 4);
        assert!(matches!(lcm_lattice(&j, 3), Err(Error::Resource(_))));
    }
}
