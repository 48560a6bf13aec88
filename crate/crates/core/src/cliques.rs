//! Clique enumeration and exact maximum-clique search.
//!
//! `enumerate_cliques` grows cliques by ordered vertex extension: a clique
//! is only ever extended by vertices larger than its current maximum, with
//! candidate sets maintained as sorted intersections of neighbor lists.
//! Output is therefore duplicate-free and lexicographically ordered without
//! any hashing. The maximum-clique search is a branch-and-bound with greedy
//! coloring upper bounds and an explicit node budget so pathological inputs
//! fail loudly instead of hanging.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum CliqueError {
    #[error("clique order t must be >= 1, got {0}")]
    InvalidT(usize),
    #[error("clique search exceeded its work budget of {budget} node expansions")]
    BudgetExceeded { budget: u64 },
}

/// Default node-expansion budget for the exact maximum-clique search.
pub const DEFAULT_CLIQUE_BUDGET: u64 = 100_000_000;

/// The family C_t(G): all t-cliques of a graph, stored flat in
/// lexicographic order, plus per-vertex membership counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSet {
    t: usize,
    n: usize,
    verts: Vec<usize>,
    per_vertex_count: Vec<usize>,
}

impl CliqueSet {
    pub fn t(&self) -> usize {
        self.t
    }

    /// Vertex count of the source graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of t-cliques.
    pub fn count(&self) -> usize {
        self.verts.len() / self.t
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Iterates over cliques as strictly increasing vertex slices, in
    /// lexicographic order.
    pub fn cliques(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.verts.chunks_exact(self.t)
    }

    /// Number of t-cliques containing each vertex.
    pub fn per_vertex_count(&self) -> &[usize] {
        &self.per_vertex_count
    }

    /// JSON view; `include_cliques = false` omits the (possibly large)
    /// clique list and keeps only the summary fields.
    pub fn to_json(&self, include_cliques: bool) -> CliqueSetJson {
        CliqueSetJson {
            t: self.t,
            count: self.count(),
            per_vertex: self.per_vertex_count.clone(),
            cliques: include_cliques.then(|| self.cliques().map(|c| c.to_vec()).collect()),
        }
    }
}

/// Serialization shape: `{"t", "count", "per_vertex", "cliques"?}`.
#[derive(Debug, Serialize)]
pub struct CliqueSetJson {
    pub t: usize,
    pub count: usize,
    pub per_vertex: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cliques: Option<Vec<Vec<usize>>>,
}

/// Enumerates all t-cliques of `g`. `t > n` is legal and yields the empty
/// family; `t = 1` yields the vertex set.
pub fn enumerate_cliques(g: &Graph, t: usize) -> Result<CliqueSet, CliqueError> {
    if t == 0 {
        return Err(CliqueError::InvalidT(0));
    }
    let n = g.n();
    let mut verts = Vec::new();
    if t == 1 {
        verts.extend(0..n);
    } else {
        let mut prefix = Vec::with_capacity(t);
        for v in 0..n {
            let nbrs = g.neighbors(v);
            let from = nbrs.partition_point(|&u| u <= v);
            prefix.push(v);
            extend(g, t, &mut prefix, &nbrs[from..], &mut verts);
            prefix.pop();
        }
    }
    let mut per_vertex_count = vec![0usize; n];
    for &v in &verts {
        per_vertex_count[v] += 1;
    }
    Ok(CliqueSet {
        t,
        n,
        verts,
        per_vertex_count,
    })
}

/// Candidates in `cand` are sorted, exceed every vertex of `prefix`, and
/// are adjacent to all of them.
fn extend(g: &Graph, t: usize, prefix: &mut Vec<usize>, cand: &[usize], out: &mut Vec<usize>) {
    let need = t - prefix.len();
    if cand.len() < need {
        return;
    }
    for (idx, &u) in cand.iter().enumerate() {
        if cand.len() - idx < need {
            break;
        }
        prefix.push(u);
        if prefix.len() == t {
            out.extend_from_slice(prefix);
        } else {
            let next = intersect_sorted(&cand[idx + 1..], g.neighbors(u));
            extend(g, t, prefix, &next, out);
        }
        prefix.pop();
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Exact clique number with the default work budget.
pub fn clique_number(g: &Graph) -> Result<usize, CliqueError> {
    clique_number_with_budget(g, DEFAULT_CLIQUE_BUDGET)
}

pub fn clique_number_with_budget(g: &Graph, budget: u64) -> Result<usize, CliqueError> {
    Ok(max_clique_with_budget(g, budget)?.len())
}

/// A maximum clique of `g` (vertices in increasing order), found by
/// branch-and-bound with greedy-coloring bounds. Empty for n = 0; one
/// vertex for edgeless graphs.
pub fn max_clique(g: &Graph) -> Result<Vec<usize>, CliqueError> {
    max_clique_with_budget(g, DEFAULT_CLIQUE_BUDGET)
}

pub fn max_clique_with_budget(g: &Graph, budget: u64) -> Result<Vec<usize>, CliqueError> {
    let mut search = MaxCliqueSearch {
        g,
        best: Vec::new(),
        current: Vec::new(),
        remaining: budget,
        budget,
        stop_at: usize::MAX,
    };
    let all: Vec<usize> = (0..g.n()).collect();
    search.expand(&all)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// Whether `g` contains no complete subgraph on `r + 1` vertices.
pub fn is_kr1_free(g: &Graph, r: usize) -> Result<bool, CliqueError> {
    if r == 0 {
        return Err(CliqueError::InvalidT(0));
    }
    let mut search = MaxCliqueSearch {
        g,
        best: Vec::new(),
        current: Vec::new(),
        remaining: DEFAULT_CLIQUE_BUDGET,
        budget: DEFAULT_CLIQUE_BUDGET,
        stop_at: r + 1,
    };
    let all: Vec<usize> = (0..g.n()).collect();
    search.expand(&all)?;
    Ok(search.best.len() <= r)
}

struct MaxCliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    remaining: u64,
    budget: u64,
    /// Early exit once a clique of this size is found (for freeness tests).
    stop_at: usize,
}

impl MaxCliqueSearch<'_> {
    fn expand(&mut self, cand: &[usize]) -> Result<(), CliqueError> {
        if self.best.len() >= self.stop_at {
            return Ok(());
        }
        if self.remaining == 0 {
            return Err(CliqueError::BudgetExceeded {
                budget: self.budget,
            });
        }
        self.remaining -= 1;
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        }
        let (order, colors) = greedy_color_sort(self.g, cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            self.current.push(v);
            let next: Vec<usize> = order[..i]
                .iter()
                .copied()
                .filter(|&u| self.g.has_edge(u, v))
                .collect();
            self.expand(&next)?;
            self.current.pop();
            if self.best.len() >= self.stop_at {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Greedy coloring of the induced subgraph on `cand`; returns vertices
/// grouped by color class with their 1-based color numbers ascending.
/// `colors[i]` bounds the clique size reachable from `order[..=i]`.
fn greedy_color_sort(g: &Graph, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cand {
        let mut placed = false;
        for class in classes.iter_mut() {
            if class.iter().all(|&u| !g.has_edge(u, v)) {
                class.push(v);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![v]);
        }
    }
    let mut order = Vec::with_capacity(cand.len());
    let mut colors = Vec::with_capacity(cand.len());
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            order.push(v);
            colors.push(c + 1);
        }
    }
    (order, colors)
}
