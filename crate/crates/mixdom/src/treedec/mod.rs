//! Tree decompositions: validation, a min-fill construction heuristic and the
//! conversion into very nice decompositions consumed by the table programs.

mod elimination;
mod nice;

use std::collections::VecDeque;
use std::fmt;

use crate::graph::Graph;

pub use elimination::{min_fill_decompose, min_fill_decompose_seeded, min_fill_order};
pub use nice::{make_very_nice, postorder_traversal, BagKind, NiceBag, NiceTreeDecomposition};

/// A tree decomposition with a designated root bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    vertex_count: usize,
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    root: usize,
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated; no validity check is made here (see
    /// [`validate_td`]).
    pub fn new(vertex_count: usize, mut bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>, root: usize) -> Self {
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        TreeDecomposition { vertex_count, bags, edges, root }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Largest bag size minus one (0 for a decomposition without bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub(crate) fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(i, j) in &self.edges {
            if i < self.bags.len() && j < self.bags.len() {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// A reason a decomposition fails to be a tree decomposition of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexCountMismatch {
        graph: usize,
        decomposition: usize,
    },
    VertexOutOfRange {
        bag: usize,
        vertex: usize,
    },
    NotATree(String),
    /// No bag contains the vertex.
    VertexUncovered {
        vertex: usize,
    },
    /// No bag contains both endpoints of the edge.
    EdgeUncovered {
        u: usize,
        v: usize,
    },
    /// The bags containing `vertex` do not form a connected subtree; `bags`
    /// are two of them in different components.
    Disconnected {
        vertex: usize,
        bags: (usize, usize),
    },
}

impl fmt::Display for Violation {
    /// Ids are printed 1-based, as in the file formats.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexCountMismatch { graph, decomposition } => {
                write!(f, "decomposition is for {decomposition} vertices, graph has {graph}")
            }
            Violation::VertexOutOfRange { bag, vertex } => {
                write!(f, "bag {} holds vertex {} which is out of range", bag + 1, vertex + 1)
            }
            Violation::NotATree(why) => write!(f, "bag graph is not a tree: {why}"),
            Violation::VertexUncovered { vertex } => write!(f, "vertex {} is in no bag", vertex + 1),
            Violation::EdgeUncovered { u, v } => write!(f, "edge {} {} is in no bag", u + 1, v + 1),
            Violation::Disconnected { vertex, bags } => write!(
                f,
                "bags holding vertex {} are disconnected (e.g. bags {} and {})",
                vertex + 1,
                bags.0 + 1,
                bags.1 + 1
            ),
        }
    }
}

/// Checks that `td` is a tree decomposition of `g`: the bag graph is a tree,
/// every vertex and edge is covered, and every vertex occupies a connected
/// set of bags. Returns all violations found (empty means valid).
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = g.vertex_count();
    if td.vertex_count != n {
        out.push(Violation::VertexCountMismatch { graph: n, decomposition: td.vertex_count });
    }
    for (b, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                out.push(Violation::VertexOutOfRange { bag: b, vertex: v });
            }
        }
    }

    let k = td.bags.len();
    let mut is_tree = true;
    if let Some(&(i, j)) = td.edges.iter().find(|&&(i, j)| i >= k || j >= k) {
        out.push(Violation::NotATree(format!("edge {} {} references a missing bag", i + 1, j + 1)));
        is_tree = false;
    } else if let Some(&(i, _)) = td.edges.iter().find(|&&(i, j)| i == j) {
        out.push(Violation::NotATree(format!("loop on bag {}", i + 1)));
        is_tree = false;
    } else if k > 0 && td.edges.len() != k - 1 {
        out.push(Violation::NotATree(format!("{} bags but {} tree edges", k, td.edges.len())));
        is_tree = false;
    } else if k > 0 {
        let adj = td.tree_adjacency();
        let reached = reachable(&adj, 0, |_| true);
        if let Some(b) = reached.iter().position(|r| !r) {
            out.push(Violation::NotATree(format!("bag {} is not connected to bag 1", b + 1)));
            is_tree = false;
        }
    }
    if k > 0 && td.root >= k {
        out.push(Violation::NotATree(format!("root bag {} does not exist", td.root + 1)));
    }

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, bag) in td.bags.iter().enumerate() {
        for &v in bag.iter().filter(|&&v| v < n) {
            holders[v].push(b);
        }
    }
    for (v, hs) in holders.iter().enumerate() {
        if hs.is_empty() {
            out.push(Violation::VertexUncovered { vertex: v });
        }
    }
    for &(u, v) in g.edges() {
        let covered = holders[u].iter().any(|&b| td.bags[b].binary_search(&v).is_ok());
        if !covered {
            out.push(Violation::EdgeUncovered { u, v });
        }
    }
    if is_tree {
        let adj = td.tree_adjacency();
        for (v, hs) in holders.iter().enumerate() {
            if hs.len() < 2 {
                continue;
            }
            let holds = |b: usize| td.bags[b].binary_search(&v).is_ok();
            let reached = reachable(&adj, hs[0], holds);
            if let Some(&other) = hs.iter().find(|&&b| !reached[b]) {
                out.push(Violation::Disconnected { vertex: v, bags: (hs[0], other) });
            }
        }
    }
    out
}

/// Bags reachable from `start` through bags satisfying `keep`.
fn reachable(adj: &[Vec<usize>], start: usize, keep: impl Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for &c in &adj[b] {
            if !seen[c] && keep(c) {
                seen[c] = true;
                queue.push_back(c);
            }
        }
    }
    seen
}
