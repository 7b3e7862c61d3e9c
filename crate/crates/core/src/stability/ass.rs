//! Associated primes via monomial localization and the socle test.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, PrimeSupport};

/// A set of monomial primes in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AssSet(BTreeSet<PrimeSupport>);

impl AssSet {
    pub fn new() -> Self {
        AssSet(BTreeSet::new())
    }

    pub fn iter(&self) -> impl Iterator<Item = &PrimeSupport> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: &PrimeSupport) -> bool {
        self.0.contains(p)
    }

    pub fn contains_maximal(&self) -> bool {
        self.0.iter().any(PrimeSupport::is_maximal)
    }

    pub fn is_subset(&self, other: &AssSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn insert(&mut self, p: PrimeSupport) -> bool {
        self.0.insert(p)
    }
}

impl FromIterator<PrimeSupport> for AssSet {
    fn from_iter<T: IntoIterator<Item = PrimeSupport>>(iter: T) -> Self {
        AssSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a AssSet {
    type Item = &'a PrimeSupport;
    type IntoIter = std::collections::btree_set::Iter<'a, PrimeSupport>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

fn check_proper(j: &MonomialIdeal) -> Result<()> {
    if j.is_unit() {
        return Err(Error::Invalid(
            "the unit ideal has no associated primes".into(),
        ));
    }
    if j.is_zero() {
        return Err(Error::Invalid("expected a nonzero ideal".into()));
    }
    Ok(())
}

/// Whether `m ∈ Ass(R/J)`, i.e. `(J : m) ≠ J`, i.e. `depth R/J = 0`.
///
/// Decided through the saturation `(J : m^∞) ≠ J`, which is equivalent and
/// much cheaper on large powers than the full socle colon; a verified
/// low-degree socle element short-circuits it.
pub fn max_ideal_associated(j: &MonomialIdeal) -> Result<bool> {
    check_proper(j)?;
    Ok(j.m_associated())
}

/// The least monomial (canonical order) `u ∉ J` with `(J : u) = m`, if any.
pub fn socle_witness(j: &MonomialIdeal) -> Result<Option<Monomial>> {
    check_proper(j)?;
    Ok(j.socle_generators().into_iter().next())
}

fn sweep_guard(n: usize, cfg: &EngineConfig) -> Result<()> {
    if n > cfg.max_ass_vars || n > 63 {
        return Err(Error::Resource(format!(
            "prime sweep over 2^{n} supports exceeds the {}-variable cap",
            cfg.max_ass_vars
        )));
    }
    Ok(())
}

/// Localization of `I` at `p`, or `None` when no power of `I` can have `p`
/// as an associated prime (unit localization, or a variable of `p` unused).
fn relevant_localization(i: &MonomialIdeal, p: &PrimeSupport) -> Option<MonomialIdeal> {
    let local = i
        .localize(p)
        .expect("prime lives in the ambient ring")
        .ideal;
    if local.is_unit() || local.support().len() != p.len() {
        return None;
    }
    Some(local)
}

/// `Ass(R/J)`: `p` is associated iff the maximal ideal of the subring on `p`
/// is associated to the localization `J(p)`.
pub fn ass_primes(j: &MonomialIdeal, cfg: &EngineConfig) -> Result<AssSet> {
    check_proper(j)?;
    let n = j.num_vars();
    sweep_guard(n, cfg)?;
    let found: Vec<Option<PrimeSupport>> = (1u64..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            let p = PrimeSupport::from_mask(n, mask);
            let hit = relevant_localization(j, &p)
                .map(|local| local.m_associated())
                .unwrap_or(false);
            hit.then_some(p)
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// `Ass(R/I^k)` for `k = 1..=kmax`, using `I^k(p) = I(p)^k` so that each
/// prime only ever sees powers of its own (smaller) localization.
pub fn ass_chain(i: &MonomialIdeal, kmax: u32, cfg: &EngineConfig) -> Result<Vec<AssSet>> {
    check_proper(i)?;
    let n = i.num_vars();
    sweep_guard(n, cfg)?;
    let per_prime: Vec<Option<(PrimeSupport, Vec<bool>)>> = (1u64..1u64 << n)
        .into_par_iter()
        .map(|mask| -> Result<_> {
            let p = PrimeSupport::from_mask(n, mask);
            let Some(local) = relevant_localization(i, &p) else {
                return Ok(None);
            };
            let mut flags = Vec::with_capacity(kmax as usize);
            let mut power = local.clone();
            for k in 1..=kmax {
                if k > 1 {
                    power = power.multiply(&local)?;
                }
                flags.push(power.m_associated());
            }
            Ok(Some((p, flags)))
        })
        .collect::<Result<_>>()?;

    let mut chain = vec![AssSet::new(); kmax as usize];
    for (p, flags) in per_prime.into_iter().flatten() {
        for (k, hit) in flags.into_iter().enumerate() {
            if hit {
                chain[k].insert(p.clone());
            }
        }
    }
    Ok(chain)
}
