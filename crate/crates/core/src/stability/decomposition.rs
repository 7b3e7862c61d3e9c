//! Irreducible decomposition by recursive splitting. Slow, and kept as an
//! independent check on the localization sweep.

use std::collections::HashSet;

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, PrimeSupport};
use crate::stability::ass::AssSet;

/// Irredundant irreducible components of `J`, each generated by pure powers.
///
/// A generator `u = x_i^a * w` with `w ≠ 1` splits `J` into
/// `(J + (x_i^a)) ∩ (J + (w))`; leaves are pure-power ideals.
pub fn irreducible_decomposition(
    j: &MonomialIdeal,
    cfg: &EngineConfig,
) -> Result<Vec<MonomialIdeal>> {
    if j.is_zero() || j.is_unit() {
        return Err(Error::Invalid(
            "decomposition needs a proper nonzero ideal".into(),
        ));
    }
    let n = j.num_vars();
    let mut leaves: Vec<MonomialIdeal> = Vec::new();
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    let mut stack = vec![j.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        if seen.len() > cfg.max_components {
            return Err(Error::Resource(format!(
                "decomposition explored more than {} ideals",
                cfg.max_components
            )));
        }
        let mixed = cur
            .generators()
            .iter()
            .find(|g| g.exponents().iter().filter(|&&e| e > 0).count() > 1);
        let Some(u) = mixed else {
            leaves.push(cur);
            continue;
        };
        let i = u.support()[0];
        let mut exps = vec![0; n];
        exps[i] = u.exponent(i);
        let pure = Monomial::new(&exps);
        let rest = u.saturating_div(&pure);
        for part in [pure, rest] {
            let single = MonomialIdeal::minimalize([part], n)?;
            stack.push(cur.sum(&single)?);
        }
    }

    let mut irredundant: Vec<MonomialIdeal> = leaves
        .iter()
        .filter(|q| {
            !leaves
                .iter()
                .any(|other| other != *q && q.contains_ideal(other).expect("same ring"))
        })
        .cloned()
        .collect();
    irredundant.sort_by_key(|q| {
        q.generators()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect::<Vec<_>>()
    });
    irredundant.dedup();
    Ok(irredundant)
}

/// The radical of a pure-power ideal, as the prime on its variables.
pub fn radical(q: &MonomialIdeal) -> PrimeSupport {
    PrimeSupport::new(q.num_vars(), q.support()).expect("support lies in the ring")
}

/// `Ass(R/J)` read off an irreducible decomposition.
pub fn ass_from_decomposition(components: &[MonomialIdeal]) -> AssSet {
    components.iter().map(radical).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::new(g)), n).unwrap()
    }

    #[test]
    fn maximal_ideal_is_irreducible() {
        let cfg = EngineConfig::default();
        let m = MonomialIdeal::maximal(3);
        assert_eq!(irreducible_decomposition(&m, &cfg).unwrap(), vec![m]);
    }

    #[test]
    fn principal_product_splits() {
        let cfg = EngineConfig::default();
        let d = irreducible_decomposition(&ideal(2, &[&[1, 1]]), &cfg).unwrap();
        assert_eq!(d, vec![ideal(2, &[&[0, 1]]), ideal(2, &[&[1, 0]])]);
    }

    #[test]
    fn k3_decomposes_into_pairs() {
        let cfg = EngineConfig::default();
        let k3 = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let d = irreducible_decomposition(&k3, &cfg).unwrap();
        assert_eq!(d.len(), 3);
        let meet = d
            .iter()
            .skip(1)
            .fold(d[0].clone(), |acc, q| acc.intersect(q).unwrap());
        assert_eq!(meet, k3);
        for q in &d {
            assert_eq!(q.len(), 2);
        }
    }

    #[test]
    fn embedded_component_of_k3_square() {
        let cfg = EngineConfig::default();
        let k3 = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let sq = k3.power(2).unwrap();
        let d = irreducible_decomposition(&sq, &cfg).unwrap();
        let meet = d
            .iter()
            .skip(1)
            .fold(d[0].clone(), |acc, q| acc.intersect(q).unwrap());
        assert_eq!(meet, sq);
        assert!(ass_from_decomposition(&d).contains_maximal());
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = EngineConfig {
            max_components: 2,
            ..EngineConfig::default()
        };
        let k3 = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(matches!(
            irreducible_decomposition(&k3, &cfg),
            Err(Error::Resource(_))
        ));
    }
}
