//! Exchange-property recognition and constructors for (poly)matroidal ideals.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, UnionFind};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exponent, Monomial, PrimeSupport};

/// Largest edge count accepted by [`graphic_ideal`].
pub const MAX_GRAPHIC_EDGES: usize = 16;

/// Outcome of the exchange-property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExchangeVerdict {
    Polymatroidal,
    ZeroIdeal,
    NotEquigenerated,
    /// `deg_{x_var}(u) > deg_{x_var}(v)`, yet no admissible `j` puts
    /// `x_j (u / x_var)` back into `G(I)`.
    Violation {
        u: Monomial,
        v: Monomial,
        var: usize,
    },
}

impl ExchangeVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ExchangeVerdict::Polymatroidal)
    }
}

/// Direct check of the exchange property over all ordered generator pairs.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> ExchangeVerdict {
    if ideal.is_zero() {
        return ExchangeVerdict::ZeroIdeal;
    }
    if !ideal.is_equigenerated() {
        return ExchangeVerdict::NotEquigenerated;
    }
    let gens = ideal.generators();
    let lookup: HashSet<&Monomial> = gens.iter().collect();
    let n = ideal.num_vars();
    for u in gens {
        for v in gens {
            for i in 0..n {
                if u.exponent(i) <= v.exponent(i) {
                    continue;
                }
                let reduced = u.div_var(i).expect("x_i divides u");
                let exchanged = (0..n).any(|j| {
                    v.exponent(j) > u.exponent(j)
                        && reduced
                            .mul_var(j)
                            .map(|w| lookup.contains(&w))
                            .unwrap_or(false)
                });
                if !exchanged {
                    return ExchangeVerdict::Violation {
                        u: u.clone(),
                        v: v.clone(),
                        var: i,
                    };
                }
            }
        }
    }
    ExchangeVerdict::Polymatroidal
}

/// Square-free and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> bool {
    ideal.is_squarefree() && is_polymatroidal(ideal).holds()
}

/// Veronese type ideal: all degree-`d` monomials with `t_j <= caps[j]`.
///
/// Caps need not be sorted. If they sum to less than `d` the result is the
/// zero ideal.
pub fn veronese_type(n: usize, degree: u32, caps: &[Exponent]) -> Result<MonomialIdeal> {
    if caps.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: caps.len(),
        });
    }
    if let Some(c) = caps.iter().find(|&&c| c < 1 || c > degree) {
        return Err(Error::Invalid(format!(
            "Veronese cap {c} outside [1, {degree}]"
        )));
    }
    if caps.iter().map(|&c| c as u64).sum::<u64>() < degree as u64 {
        log::warn!("Veronese caps sum below degree {degree}; returning the zero ideal");
        return Ok(MonomialIdeal::zero(n));
    }
    let mut out = Vec::new();
    let mut exps = vec![0 as Exponent; n];
    compositions(caps, degree, 0, &mut exps, &mut out);
    MonomialIdeal::minimalize(out, n)
}

fn compositions(
    caps: &[Exponent],
    remaining: u32,
    pos: usize,
    exps: &mut Vec<Exponent>,
    out: &mut Vec<Monomial>,
) {
    if pos == caps.len() {
        if remaining == 0 {
            out.push(Monomial::new(exps));
        }
        return;
    }
    let rest: u32 = caps[pos + 1..].iter().sum();
    let lo = remaining.saturating_sub(rest);
    let hi = caps[pos].min(remaining);
    for e in lo..=hi {
        exps[pos] = e;
        compositions(caps, remaining - e, pos + 1, exps, out);
    }
    exps[pos] = 0;
}

/// The square-free Veronese ideal of all `d`-subsets of `n` variables.
pub fn uniform(n: usize, degree: u32) -> Result<MonomialIdeal> {
    if degree == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    veronese_type(n, degree, &vec![1; n])
}

/// Bases of the graphic matroid: one generator `prod_{e in F} x_e` per
/// maximal spanning forest `F`. Variable `k` is edge `k`.
pub fn graphic_ideal(graph: &Graph) -> Result<MonomialIdeal> {
    let m = graph.num_edges();
    if m > MAX_GRAPHIC_EDGES {
        return Err(Error::Resource(format!(
            "graphic ideal enumeration limited to {MAX_GRAPHIC_EDGES} edges, got {m}"
        )));
    }
    let rank = (graph.num_vertices() - graph.num_components()) as u32;
    let edges = graph.edges();
    let mut gens = Vec::new();
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() != rank {
            continue;
        }
        let mut uf = UnionFind::new(graph.num_vertices());
        let acyclic = (0..m)
            .filter(|&k| mask >> k & 1 == 1)
            .all(|k| uf.union(edges[k].0, edges[k].1));
        if acyclic {
            let vars: Vec<usize> = (0..m).filter(|&k| mask >> k & 1 == 1).collect();
            gens.push(Monomial::from_support(m, &vars));
        }
    }
    MonomialIdeal::minimalize(gens, m)
}

/// Product of the monomial primes generated by each set.
pub fn transversal_ideal(n: usize, sets: &[PrimeSupport]) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(n);
    for s in sets {
        if s.is_empty() {
            return Err(Error::Invalid("transversal set must be nonempty".into()));
        }
        if s.ambient() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: s.ambient(),
            });
        }
        acc = acc.multiply(&MonomialIdeal::prime(s))?;
    }
    Ok(acc)
}

/// A deterministic constructor for one of the supported families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidSpec {
    Explicit(MonomialIdeal),
    Uniform { n: usize, degree: u32 },
    Veronese { degree: u32, caps: Vec<Exponent> },
    Graphic(Graph),
    Transversal { n: usize, sets: Vec<PrimeSupport> },
}

impl MatroidSpec {
    pub fn family(&self) -> &'static str {
        match self {
            MatroidSpec::Explicit(_) => "explicit",
            MatroidSpec::Uniform { .. } => "uniform",
            MatroidSpec::Veronese { .. } => "veronese",
            MatroidSpec::Graphic(_) => "graphic",
            MatroidSpec::Transversal { .. } => "transversal",
        }
    }

    pub fn build(&self) -> Result<MonomialIdeal> {
        match self {
            MatroidSpec::Explicit(i) => Ok(i.clone()),
            MatroidSpec::Uniform { n, degree } => uniform(*n, *degree),
            MatroidSpec::Veronese { degree, caps } => veronese_type(caps.len(), *degree, caps),
            MatroidSpec::Graphic(g) => graphic_ideal(g),
            MatroidSpec::Transversal { n, sets } => transversal_ideal(*n, sets),
        }
    }
}

/// Families available to [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RandomFamily {
    Graphic,
    Transversal,
    Veronese,
}

impl RandomFamily {
    pub fn name(self) -> &'static str {
        match self {
            RandomFamily::Graphic => "graphic",
            RandomFamily::Transversal => "transversal",
            RandomFamily::Veronese => "veronese",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "graphic" => Some(RandomFamily::Graphic),
            "transversal" => Some(RandomFamily::Transversal),
            "veronese" => Some(RandomFamily::Veronese),
            _ => None,
        }
    }
}

/// Parameters for a seeded random matroidal instance. Unset sizes are drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSpec {
    pub family: RandomFamily,
    pub seed: u64,
    /// Graphic: vertex count (default drawn from 3..=5).
    pub vertices: Option<usize>,
    /// Graphic: edge count (default drawn between a tree and the complete graph).
    pub edges: Option<usize>,
    /// Transversal/Veronese: variable count (default drawn from 3..=6).
    pub vars: Option<usize>,
}

impl RandomSpec {
    pub fn new(family: RandomFamily, seed: u64) -> Self {
        RandomSpec {
            family,
            seed,
            vertices: None,
            edges: None,
            vars: None,
        }
    }
}

/// Redraws allowed before a degenerate family is reported.
const MAX_RETRIES: usize = 64;
const MAX_RANDOM_VARS: usize = 10;
const MAX_RANDOM_GENERATORS: usize = 200;

/// A drawn instance together with its construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomInstance {
    pub spec: MatroidSpec,
    /// Normalized: `gcd = 1`, every variable used.
    pub ideal: MonomialIdeal,
}

/// Draw a matroidal ideal in standard position, deterministically from `spec.seed`.
pub fn random_instance(spec: &RandomSpec) -> Result<RandomInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..MAX_RETRIES {
        let drawn = match spec.family {
            RandomFamily::Graphic => draw_graphic(&mut rng, spec)?,
            RandomFamily::Transversal => draw_transversal(&mut rng, spec)?,
            RandomFamily::Veronese => draw_veronese(&mut rng, spec)?,
        };
        let raw = drawn.build()?;
        let ideal = raw.normalized().ideal;
        if ideal.is_zero()
            || ideal.is_unit()
            || ideal.num_vars() > MAX_RANDOM_VARS
            || ideal.len() > MAX_RANDOM_GENERATORS
        {
            continue;
        }
        debug_assert!(is_matroidal(&ideal));
        return Ok(RandomInstance { spec: drawn, ideal });
    }
    Err(Error::Invalid(format!(
        "no nondegenerate {} instance after {MAX_RETRIES} draws",
        spec.family.name()
    )))
}

fn draw_graphic(rng: &mut ChaCha8Rng, spec: &RandomSpec) -> Result<MatroidSpec> {
    let v = spec.vertices.unwrap_or_else(|| rng.gen_range(3..=5));
    if v < 2 {
        return Err(Error::Invalid(
            "random graphic instance needs 2+ vertices".into(),
        ));
    }
    let max_edges = (v * (v - 1) / 2).min(MAX_GRAPHIC_EDGES);
    let e = spec
        .edges
        .unwrap_or_else(|| rng.gen_range(v..=max_edges.max(v)).min(max_edges));
    if e < v - 1 || e > max_edges {
        return Err(Error::Invalid(format!(
            "a connected graph on {v} vertices needs between {} and {max_edges} edges",
            v - 1
        )));
    }
    // Random spanning tree first, then extra edges, so the graph is connected.
    let mut order: Vec<usize> = (0..v).collect();
    order.shuffle(rng);
    let mut edges = Vec::with_capacity(e);
    let mut present = HashSet::new();
    for k in 1..v {
        let a = order[k];
        let b = order[rng.gen_range(0..k)];
        edges.push((a.min(b), a.max(b)));
        present.insert((a.min(b), a.max(b)));
    }
    let mut rest: Vec<(usize, usize)> = (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .filter(|p| !present.contains(p))
        .collect();
    rest.shuffle(rng);
    edges.extend(rest.into_iter().take(e - (v - 1)));
    edges.sort_unstable();
    Ok(MatroidSpec::Graphic(Graph::new(v, edges)?))
}

fn draw_transversal(rng: &mut ChaCha8Rng, spec: &RandomSpec) -> Result<MatroidSpec> {
    let n = spec.vars.unwrap_or_else(|| rng.gen_range(3..=6));
    if n < 2 {
        return Err(Error::Invalid(
            "random transversal instance needs 2+ variables".into(),
        ));
    }
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    // Blocks of size at least two: a singleton block is a common factor and
    // would vanish on normalization.
    let blocks = rng.gen_range(1..=(n / 2).max(1));
    let mut sizes = vec![2usize.min(n); blocks];
    for _ in 0..n - sizes.iter().sum::<usize>() {
        sizes[rng.gen_range(0..blocks)] += 1;
    }
    let mut sets = Vec::new();
    let mut start = 0;
    for len in sizes {
        let mut block = vars[start..start + len].to_vec();
        block.sort_unstable();
        sets.push(PrimeSupport::new(n, block)?);
        start += len;
    }
    sets.sort();
    Ok(MatroidSpec::Transversal { n, sets })
}

fn draw_veronese(rng: &mut ChaCha8Rng, spec: &RandomSpec) -> Result<MatroidSpec> {
    let n = spec.vars.unwrap_or_else(|| rng.gen_range(3..=6));
    if n < 2 {
        return Err(Error::Invalid(
            "random Veronese instance needs 2+ variables".into(),
        ));
    }
    // Degree 1 would just give the maximal ideal.
    let degree = rng.gen_range(2.min(n - 1)..n) as u32;
    Ok(MatroidSpec::Veronese {
        degree,
        caps: vec![1; n],
    })
}

/// `|A_i|`: the number of generators with exponent exactly one in `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProfile {
    pub counts: Vec<usize>,
}

impl CoverProfile {
    pub fn min(&self) -> Option<usize> {
        self.counts.iter().copied().min()
    }
}

pub fn cover_profile(ideal: &MonomialIdeal) -> CoverProfile {
    CoverProfile {
        counts: (0..ideal.num_vars())
            .map(|i| {
                ideal
                    .generators()
                    .iter()
                    .filter(|g| g.exponent(i) == 1)
                    .count()
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::KnownCase;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| Monomial::new(g)), n).unwrap()
    }

    fn k3() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn exchange_examples() {
        assert!(is_polymatroidal(&k3()).holds());
        let verdict = is_polymatroidal(&ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]));
        assert_eq!(
            verdict,
            ExchangeVerdict::Violation {
                u: Monomial::new(&[1, 1, 0, 0]),
                v: Monomial::new(&[0, 0, 1, 1]),
                var: 0,
            }
        );
        assert!(is_polymatroidal(&KnownCase::Km4.ideal()).holds());
        assert_eq!(
            is_polymatroidal(&ideal(2, &[&[1, 0], &[0, 2]])),
            ExchangeVerdict::NotEquigenerated
        );
        assert_eq!(
            is_polymatroidal(&MonomialIdeal::zero(2)),
            ExchangeVerdict::ZeroIdeal
        );
    }

    #[test]
    fn matroidal_examples() {
        assert!(is_matroidal(&KnownCase::Ex8.ideal()));
        assert!(is_matroidal(&KnownCase::Ex6.ideal()));
        assert!(!is_matroidal(&KnownCase::Km4.ideal()));
        assert!(is_matroidal(&ideal(1, &[&[1]])));
    }

    #[test]
    fn veronese_examples() {
        assert_eq!(veronese_type(3, 2, &[1, 1, 1]).unwrap(), k3());
        let full = veronese_type(3, 2, &[2, 2, 2]).unwrap();
        assert_eq!(full.len(), 6);
        assert!(is_polymatroidal(&full).holds());
        let unsorted = veronese_type(3, 3, &[2, 1, 2]).unwrap();
        assert!(unsorted.generators().iter().all(|g| g.exponent(1) <= 1));
        assert!(is_polymatroidal(&unsorted).holds());
        assert!(veronese_type(3, 3, &[1, 1, 0]).is_err());
        assert!(veronese_type(2, 3, &[1, 1]).unwrap().is_zero());
    }

    #[test]
    fn graphic_examples() {
        let c3 = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(graphic_ideal(&c3).unwrap(), k3());
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(graphic_ideal(&path).unwrap(), ideal(2, &[&[1, 1]]));
        let big: Vec<(usize, usize)> = (0..7)
            .flat_map(|a| (a + 1..7).map(move |b| (a, b)))
            .collect();
        let k7 = Graph::new(7, big).unwrap();
        assert!(matches!(graphic_ideal(&k7), Err(Error::Resource(_))));
    }

    #[test]
    fn transversal_examples() {
        let s = |v: &[usize]| PrimeSupport::new(4, v.iter().copied()).unwrap();
        let t = transversal_ideal(4, &[s(&[0, 1]), s(&[2, 3])]).unwrap();
        assert_eq!(
            t,
            ideal(
                4,
                &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]
            )
        );
        assert!(is_matroidal(&t));
        let single = transversal_ideal(4, &[s(&[0, 1])]).unwrap();
        assert_eq!(single, ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        let five = |v: &[usize]| PrimeSupport::new(5, v.iter().copied()).unwrap();
        let t = transversal_ideal(5, &[five(&[0, 1]), five(&[2, 3, 4])]).unwrap();
        assert_eq!((t.len(), t.degree()), (6, Some(2)));
    }

    #[test]
    fn random_graphic_four_vertices_five_edges() {
        let mut spec = RandomSpec::new(RandomFamily::Graphic, 11);
        spec.vertices = Some(4);
        spec.edges = Some(5);
        let inst = random_instance(&spec).unwrap();
        assert_eq!(inst.ideal.num_vars(), 5);
        assert_eq!(inst.ideal.degree(), Some(3));
        // K4 minus an edge has 8 spanning trees.
        assert_eq!(inst.ideal.len(), 8);
        assert!(is_matroidal(&inst.ideal));
    }

    #[test]
    fn random_instances_are_deterministic_and_standard() {
        for family in [
            RandomFamily::Graphic,
            RandomFamily::Transversal,
            RandomFamily::Veronese,
        ] {
            for seed in 0..20 {
                let spec = RandomSpec::new(family, seed);
                let a = random_instance(&spec).unwrap();
                let b = random_instance(&spec).unwrap();
                assert_eq!(a, b);
                assert!(is_matroidal(&a.ideal), "{family:?} {seed}");
                assert!(a.ideal.has_standard_position(), "{family:?} {seed}");
            }
        }
    }

    #[test]
    fn cover_profiles() {
        assert_eq!(cover_profile(&k3()).counts, vec![2, 2, 2]);
        assert_eq!(cover_profile(&KnownCase::Ex6.ideal()).counts[0], 4);
        assert!(cover_profile(&KnownCase::Ex8.ideal()).min().unwrap() >= 4);
    }
}
