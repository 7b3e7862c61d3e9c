//! Simple undirected graphs: union-find, components, cutpoints and blocks.

use crate::error::{Error, Result};

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merge the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn num_sets(&self) -> usize {
        self.sets
    }

    /// The partition as sorted blocks, ordered by smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        let mut groups: Vec<Vec<usize>> = by_root.into_iter().filter(|g| !g.is_empty()).collect();
        groups.sort();
        groups
    }
}

/// A simple undirected graph on vertices `0..vertices`. Edge `k` is the
/// `k`-th entry of the edge list, which matters for graphic matroids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Rejects loops, out-of-range endpoints and repeated undirected edges.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &edges {
            if a >= vertices || b >= vertices {
                return Err(Error::Invalid(format!(
                    "edge {}-{} outside {vertices} vertices",
                    a + 1,
                    b + 1
                )));
            }
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {}", a + 1)));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::Invalid(format!(
                    "duplicate edge {}-{}",
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        adj
    }

    pub fn num_components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.num_sets()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// The graph with vertex `v` and its incident edges deleted (`G ∖ v`),
    /// re-indexing the remaining vertices.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let shift = |x: usize| if x > v { x - 1 } else { x };
        Graph {
            vertices: self.vertices - 1,
            edges: self
                .edges
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (shift(a), shift(b)))
                .collect(),
        }
    }
}

/// Cutpoints and biconnected components of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphAnalysis {
    pub components: usize,
    pub cutpoints: Vec<usize>,
    /// Vertex sets of the maximal biconnected subgraphs, sorted. An isolated
    /// vertex forms its own block.
    pub blocks: Vec<Vec<usize>>,
}

impl GraphAnalysis {
    pub fn is_biconnected(&self) -> bool {
        self.components == 1 && self.cutpoints.is_empty()
    }
}

/// Depth-first low-link analysis.
pub fn graph_analysis(g: &Graph) -> GraphAnalysis {
    struct State<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<Option<usize>>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        is_cut: Vec<bool>,
        blocks: Vec<Vec<usize>>,
    }

    fn visit(st: &mut State<'_>, u: usize, parent: Option<usize>) {
        st.disc[u] = Some(st.time);
        st.low[u] = st.time;
        st.time += 1;
        let mut children = 0;
        for &w in st.adj[u].iter() {
            if Some(w) == parent {
                continue;
            }
            match st.disc[w] {
                Some(dw) => {
                    if dw < st.disc[u].unwrap() {
                        st.stack.push((u, w));
                        st.low[u] = st.low[u].min(dw);
                    }
                }
                None => {
                    children += 1;
                    st.stack.push((u, w));
                    visit(st, w, Some(u));
                    st.low[u] = st.low[u].min(st.low[w]);
                    if st.low[w] >= st.disc[u].unwrap() {
                        if parent.is_some() {
                            st.is_cut[u] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = st.stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        st.blocks.push(block);
                    }
                }
            }
        }
        if parent.is_none() && children > 1 {
            st.is_cut[u] = true;
        }
    }

    let adj = g.adjacency();
    let n = g.num_vertices();
    let mut st = State {
        adj: &adj,
        disc: vec![None; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        is_cut: vec![false; n],
        blocks: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v].is_none() {
            if adj[v].is_empty() {
                st.disc[v] = Some(st.time);
                st.time += 1;
                st.blocks.push(vec![v]);
            } else {
                visit(&mut st, v, None);
            }
        }
    }
    let mut blocks = st.blocks;
    blocks.sort();
    GraphAnalysis {
        components: g.num_components(),
        cutpoints: (0..n).filter(|&v| st.is_cut[v]).collect(),
        blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(v: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(v, edges.to_vec()).unwrap()
    }

    #[test]
    fn triangle_is_biconnected() {
        let a = graph_analysis(&graph(3, &[(0, 1), (0, 2), (1, 2)]));
        assert!(a.cutpoints.is_empty());
        assert_eq!(a.blocks, vec![vec![0, 1, 2]]);
        assert!(a.is_biconnected());
    }

    #[test]
    fn path_has_middle_cutpoint() {
        let a = graph_analysis(&graph(3, &[(0, 1), (1, 2)]));
        assert_eq!(a.cutpoints, vec![1]);
        assert_eq!(a.blocks, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn bowtie_shares_one_cutpoint() {
        let a = graph_analysis(&graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]));
        assert_eq!(a.cutpoints, vec![2]);
        assert_eq!(a.blocks.len(), 2);
    }

    #[test]
    fn cutpoints_match_component_count_definition() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let a = graph_analysis(&g);
        let c = g.num_components();
        let brute: Vec<usize> = (0..6)
            .filter(|&v| g.remove_vertex(v).num_components() > c)
            .collect();
        assert_eq!(a.cutpoints, brute);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
    }

    #[test]
    fn union_find_groups() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 3));
        assert!(!uf.union(3, 0));
        uf.union(1, 4);
        assert_eq!(uf.num_sets(), 3);
        assert_eq!(uf.groups(), vec![vec![0, 3], vec![1, 4], vec![2]]);
    }
}
