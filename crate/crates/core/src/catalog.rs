//! Published instances, transcribed generator by generator.

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Built-in reference instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnownCase {
    /// Matroidal ideal in 6 variables with 12 quadratic generators.
    Ex6,
    /// Matroidal ideal in 8 variables with 44 quartic generators whose
    /// astab and dstab differ.
    Ex8,
    /// Non-squarefree polymatroidal ideal in 4 variables with 10 cubic generators.
    Km4,
}

const EX6: &[&[usize]] = &[
    &[1, 3],
    &[1, 4],
    &[1, 5],
    &[1, 6],
    &[2, 3],
    &[2, 4],
    &[2, 5],
    &[2, 6],
    &[3, 5],
    &[3, 6],
    &[4, 5],
    &[4, 6],
];

const EX8: &[&[usize]] = &[
    &[1, 2, 3, 4],
    &[1, 2, 3, 5],
    &[1, 2, 3, 6],
    &[1, 2, 3, 8],
    &[1, 2, 4, 7],
    &[1, 2, 5, 7],
    &[1, 2, 6, 7],
    &[1, 2, 7, 8],
    &[1, 3, 4, 7],
    &[1, 3, 4, 8],
    &[1, 3, 5, 7],
    &[1, 3, 5, 8],
    &[1, 3, 6, 7],
    &[1, 3, 6, 8],
    &[1, 3, 7, 8],
    &[1, 4, 7, 8],
    &[1, 5, 7, 8],
    &[1, 6, 7, 8],
    &[2, 3, 4, 5],
    &[2, 3, 4, 6],
    &[2, 3, 4, 7],
    &[2, 3, 5, 6],
    &[2, 3, 5, 7],
    &[2, 3, 5, 8],
    &[2, 3, 6, 7],
    &[2, 3, 6, 8],
    &[2, 3, 7, 8],
    &[2, 4, 5, 7],
    &[2, 4, 6, 7],
    &[2, 5, 6, 7],
    &[2, 5, 7, 8],
    &[2, 6, 7, 8],
    &[3, 4, 5, 7],
    &[3, 4, 5, 8],
    &[3, 4, 6, 7],
    &[3, 4, 6, 8],
    &[3, 4, 7, 8],
    &[3, 5, 6, 7],
    &[3, 5, 6, 8],
    &[3, 5, 7, 8],
    &[3, 6, 7, 8],
    &[4, 5, 7, 8],
    &[4, 6, 7, 8],
    &[5, 6, 7, 8],
];

const KM4: &[[u32; 4]] = &[
    [1, 1, 1, 0],
    [0, 2, 1, 0],
    [0, 1, 2, 0],
    [1, 1, 0, 1],
    [0, 2, 0, 1],
    [0, 1, 0, 2],
    [1, 0, 1, 1],
    [0, 0, 2, 1],
    [0, 0, 1, 2],
    [0, 1, 1, 1],
];

fn squarefree(n: usize, gens: &[&[usize]]) -> Vec<Monomial> {
    gens.iter()
        .map(|g| {
            let vars: Vec<usize> = g.iter().map(|v| v - 1).collect();
            Monomial::from_support(n, &vars)
        })
        .collect()
}

impl KnownCase {
    pub const ALL: [KnownCase; 3] = [KnownCase::Ex6, KnownCase::Ex8, KnownCase::Km4];

    pub fn name(self) -> &'static str {
        match self {
            KnownCase::Ex6 => "ex6",
            KnownCase::Ex8 => "ex8",
            KnownCase::Km4 => "km4",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn num_vars(self) -> usize {
        match self {
            KnownCase::Ex6 => 6,
            KnownCase::Ex8 => 8,
            KnownCase::Km4 => 4,
        }
    }

    /// Generators exactly as listed, before minimalization.
    pub fn raw_generators(self) -> Vec<Monomial> {
        match self {
            KnownCase::Ex6 => squarefree(6, EX6),
            KnownCase::Ex8 => squarefree(8, EX8),
            KnownCase::Km4 => KM4.iter().map(|g| Monomial::new(g)).collect(),
        }
    }

    pub fn ideal(self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.raw_generators(), self.num_vars())
            .expect("catalog generators have the declared length")
    }

    /// A monomial `u` and power `k` with `(I^k : u) = m`, where one is recorded.
    pub fn socle_witness(self) -> Option<(u32, Monomial)> {
        match self {
            KnownCase::Ex6 => Some((2, Monomial::from_support(6, &[0, 2, 4]))),
            KnownCase::Ex8 => Some((2, Monomial::from_support(8, &[0, 1, 2, 4, 5, 6, 7]))),
            KnownCase::Km4 => None,
        }
    }

    /// Recorded `(astab, dstab)`.
    pub fn expected_indices(self) -> Option<(u32, u32)> {
        match self {
            KnownCase::Ex6 => None,
            KnownCase::Ex8 => Some((3, 2)),
            KnownCase::Km4 => Some((2, 1)),
        }
    }
}
