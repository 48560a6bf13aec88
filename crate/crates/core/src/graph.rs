//! Simple undirected graphs with dense 0-based vertex ids, plus the
//! deterministic generators used throughout the crate.
//!
//! Adjacency is stored as one sorted neighbor list per vertex so that clique
//! enumeration can intersect candidate sets in linear time. Graphs are
//! immutable once constructed and safe to share across threads.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Undirected simple graph: no self-loops, no multi-edges, vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    name: Option<String>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            name: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Declarative description of a graph to generate. Generation is a pure
/// function of the spec: equal specs yield identical edge sets.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Complete { n: usize },
    Cycle { n: usize },
    Path { n: usize },
    Turan { n: usize, r: usize },
    MultipartiteRegular { omega: usize, s: usize },
    UnicyclicGirth3 { n: usize },
    ErdosRenyi { n: usize, p: f64, seed: u64 },
    Petersen,
}

pub fn generate(spec: &GraphSpec) -> Result<Graph, GraphError> {
    match *spec {
        GraphSpec::Complete { n } => Ok(complete(n)),
        GraphSpec::Cycle { n } => cycle(n),
        GraphSpec::Path { n } => Ok(path(n)),
        GraphSpec::Turan { n, r } => turan(n, r),
        GraphSpec::MultipartiteRegular { omega, s } => multipartite_regular(omega, s),
        GraphSpec::UnicyclicGirth3 { n } => unicyclic_girth3(n),
        GraphSpec::ErdosRenyi { n, p, seed } => erdos_renyi(n, p, seed),
        GraphSpec::Petersen => Ok(petersen()),
    }
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
        .expect("complete graph edges are valid")
        .with_name(format!("K_{n}"))
}

/// Cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParam(format!(
            "cycle requires n >= 3, got n = {n}"
        )));
    }
    let edges = (0..n).map(|u| (u, (u + 1) % n));
    Ok(Graph::from_edges(n, edges)?.with_name(format!("C_{n}")))
}

/// Path P_n on n vertices (n - 1 edges); n = 0 and n = 1 are allowed.
pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|v| (v - 1, v));
    Graph::from_edges(n, edges)
        .expect("path edges are valid")
        .with_name(format!("P_{n}"))
}

/// Part index of vertex `v` in the canonical Turán labeling: `v mod r`.
/// Larger parts get the lower part indices.
fn turan_part(v: usize, r: usize) -> usize {
    v % r
}

/// Turán graph T_r(n): complete r-partite with part sizes as equal as
/// possible. Vertex `v` belongs to part `v mod r`.
pub fn turan(n: usize, r: usize) -> Result<Graph, GraphError> {
    if r < 1 {
        return Err(GraphError::InvalidParam(format!(
            "turan requires r >= 1, got r = {r}"
        )));
    }
    if n < r {
        return Err(GraphError::InvalidParam(format!(
            "turan requires n >= r, got n = {n}, r = {r}"
        )));
    }
    let edges = (0..n).flat_map(move |u| {
        (u + 1..n).filter_map(move |v| (turan_part(u, r) != turan_part(v, r)).then_some((u, v)))
    });
    Ok(Graph::from_edges(n, edges)?.with_name(format!("T_{r}({n})")))
}

/// Complete regular multipartite graph: `omega` parts of exactly `s`
/// vertices each, all cross-part edges present. Identical to the balanced
/// Turán graph `T_omega(omega * s)`.
pub fn multipartite_regular(omega: usize, s: usize) -> Result<Graph, GraphError> {
    if omega < 1 || s < 1 {
        return Err(GraphError::InvalidParam(format!(
            "multipartite_regular requires omega >= 1 and s >= 1, got omega = {omega}, s = {s}"
        )));
    }
    let g = turan(omega * s, omega)?;
    Ok(g.with_name(format!("K_{omega}x{s}")))
}

/// Triangle {0,1,2} with a path of `n - 3` extra vertices attached to
/// vertex 0: the unicyclic graph of girth 3 on `n` vertices.
pub fn unicyclic_girth3(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParam(format!(
            "unicyclic_girth3 requires n >= 3, got n = {n}"
        )));
    }
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n {
        edges.push(if v == 3 { (0, 3) } else { (v - 1, v) });
    }
    Ok(Graph::from_edges(n, edges)?.with_name(format!("U3_{n}")))
}

/// Uniform f64 in [0, 1) from the top 53 bits of a ChaCha8 draw.
fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// G(n, p) with a fixed, portable PRNG: ChaCha8 seeded with `seed`, one
/// draw per vertex pair in lexicographic order. Fully reproducible across
/// platforms for a given `(n, p, seed)`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidParam(format!(
            "erdos_renyi requires 0 <= p <= 1, got p = {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if unit_f64(&mut rng) < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?.with_name(format!("G({n},{p};seed={seed})")))
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges)
        .expect("petersen edges are valid")
        .with_name("petersen")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_self_loop() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(GraphError::SelfLoop(0))
        ));
    }

    #[test]
    fn from_edges_rejects_out_of_range() {
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn multipartite_2_2_2_has_6_vertices_12_edges() {
        let g = multipartite_regular(3, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn turan_5_2_is_k23() {
        let g = turan(5, 2).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 6);
        // parts {0,2,4} and {1,3}: sizes differ by one
        let part_sizes = [
            (0..5).filter(|v| v % 2 == 0).count(),
            (0..5).filter(|v| v % 2 == 1).count(),
        ];
        assert_eq!(part_sizes, [3, 2]);
    }

    #[test]
    fn turan_part_sizes_differ_by_at_most_one() {
        for n in 1..=20 {
            for r in 1..=n {
                let mut sizes = vec![0usize; r];
                for v in 0..n {
                    sizes[turan_part(v, r)] += 1;
                }
                let lo = *sizes.iter().min().unwrap();
                let hi = *sizes.iter().max().unwrap();
                assert!(hi - lo <= 1, "n={n} r={r} sizes={sizes:?}");
                // larger parts sit at the lower indices
                assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn multipartite_equals_balanced_turan() {
        for omega in 1..=4 {
            for s in 1..=3 {
                let a = multipartite_regular(omega, s).unwrap();
                let b = turan(omega * s, omega).unwrap();
                assert_eq!(a.edges(), b.edges());
            }
        }
    }

    #[test]
    fn unicyclic_girth3_small() {
        let g = unicyclic_girth3(5).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        let g3 = unicyclic_girth3(3).unwrap();
        assert_eq!(g3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn erdos_renyi_is_reproducible() {
        let a = erdos_renyi(20, 0.4, 7).unwrap();
        let b = erdos_renyi(20, 0.4, 7).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = erdos_renyi(20, 0.4, 8).unwrap();
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn erdos_renyi_extreme_probabilities() {
        assert_eq!(erdos_renyi(10, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(erdos_renyi(10, 1.0, 1).unwrap().edge_count(), 45);
        assert!(erdos_renyi(5, 1.5, 0).is_err());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn generator_param_errors_name_the_constraint() {
        let err = turan(2, 3).unwrap_err().to_string();
        assert!(err.contains("n >= r"), "{err}");
        let err = cycle(2).unwrap_err().to_string();
        assert!(err.contains("n >= 3"), "{err}");
        let err = multipartite_regular(0, 2).unwrap_err().to_string();
        assert!(err.contains("omega >= 1"), "{err}");
    }

    #[test]
    fn generate_dispatch_is_deterministic() {
        let spec = GraphSpec::ErdosRenyi {
            n: 12,
            p: 0.5,
            seed: 3,
        };
        assert_eq!(
            generate(&spec).unwrap().edges(),
            generate(&spec).unwrap().edges()
        );
    }
}
