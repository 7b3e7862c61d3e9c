//! The linear relation graph of an equigenerated monomial ideal and the
//! factorization of a matroidal ideal along its connected components.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::UnionFind;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `{i, j}` is an edge when `x_i u_k = x_j u_l` for generators `u_k, u_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationGraph {
    n: usize,
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    components: Vec<Vec<usize>>,
}

impl RelationGraph {
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Endpoints of edges, sorted.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    /// Every pair of vertices is joined. Vacuously true on at most one vertex.
    pub fn is_complete(&self) -> bool {
        let v = self.vertices.len();
        self.edges.len() == v * v.saturating_sub(1) / 2
    }

    /// Complete on the full variable set `{1..n}`, which is how the
    /// completeness criterion for graphic ideals reads.
    pub fn is_complete_on_all_variables(&self) -> bool {
        (self.vertices.len() == self.n || self.n <= 1) && self.is_complete()
    }

    /// One-based `i-j` pairs separated by spaces.
    pub fn edge_list_text(&self) -> String {
        self.edges
            .iter()
            .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Build `Γ_I` by bucketing generators on their quotients `u / x_j`.
pub fn build_gamma(ideal: &MonomialIdeal) -> Result<RelationGraph> {
    if !ideal.is_equigenerated() {
        return Err(Error::Mode(
            "the linear relation graph needs an equigenerated ideal".into(),
        ));
    }
    let n = ideal.num_vars();
    let mut buckets: HashMap<Monomial, Vec<usize>> = HashMap::new();
    for g in ideal.generators() {
        for j in 0..n {
            if let Some(w) = g.div_var(j) {
                buckets.entry(w).or_default().push(j);
            }
        }
    }
    let mut adjacent = vec![vec![false; n]; n];
    for vars in buckets.values() {
        for (a, &i) in vars.iter().enumerate() {
            for &j in &vars[a + 1..] {
                adjacent[i][j] = true;
                adjacent[j][i] = true;
            }
        }
    }
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if adjacent[i][j] {
                edges.push((i, j));
                uf.union(i, j);
            }
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&i| adjacent[i].iter().any(|&b| b)).collect();
    let components = uf
        .groups()
        .into_iter()
        .filter(|g| g.iter().any(|v| vertices.binary_search(v).is_ok()))
        .collect();
    Ok(RelationGraph {
        n,
        vertices,
        edges,
        components,
    })
}

/// One factor `J_j`: the image of `G(I)` on one component's variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    /// Zero-based variables of the component.
    pub block: Vec<usize>,
    /// The factor in the subring on `block`.
    pub local: MonomialIdeal,
    /// The factor embedded back into the ambient ring.
    pub ambient: MonomialIdeal,
}

impl Factor {
    pub fn degree(&self) -> Option<u64> {
        self.local.degree()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Factor>,
    /// Whether the product of the factors reproduces `I` exactly.
    pub verified: bool,
    /// A generator of exactly one of `I` and the product, when not verified.
    pub witness: Option<Monomial>,
}

/// Split `I` along the components of `Γ_I` and certify `I = ∏ J_j`.
///
/// Requires an equigenerated ideal with full support and `gcd(I) = 1`.
/// A failed certificate is reported, not raised.
pub fn component_factorization(ideal: &MonomialIdeal) -> Result<Factorization> {
    if !ideal.has_standard_position() {
        return Err(Error::Mode(
            "factorization needs gcd(I) = 1 and every variable in supp(I)".into(),
        ));
    }
    let gamma = build_gamma(ideal)?;
    let n = ideal.num_vars();
    let mut blocks: Vec<Vec<usize>> = gamma.components().to_vec();
    // Variables outside V(Γ) become their own blocks so the blocks partition {1..n}.
    for v in 0..n {
        if !blocks.iter().any(|b| b.contains(&v)) {
            blocks.push(vec![v]);
        }
    }
    blocks.sort();

    let mut factors = Vec::with_capacity(blocks.len());
    let mut product = MonomialIdeal::unit(n);
    for block in blocks {
        let local = MonomialIdeal::minimalize(
            ideal.generators().iter().map(|g| g.project(&block)),
            block.len(),
        )?;
        let ambient = local.embed(n, &block)?;
        product = product.multiply(&ambient)?;
        factors.push(Factor {
            block,
            local,
            ambient,
        });
    }
    let witness = symmetric_difference_witness(ideal, &product);
    Ok(Factorization {
        factors,
        verified: witness.is_none(),
        witness,
    })
}

fn symmetric_difference_witness(a: &MonomialIdeal, b: &MonomialIdeal) -> Option<Monomial> {
    let only_a = a.generators().iter().find(|g| !b.generators().contains(g));
    let only_b = b.generators().iter().find(|g| !a.generators().contains(g));
    match (only_a, only_b) {
        (Some(x), Some(y)) => Some(if x.canonical_cmp(y).is_le() { x } else { y }.clone()),
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}
