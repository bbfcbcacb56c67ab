//! Simple undirected graphs and the mixed-domination vocabulary built on them.
//!
//! Vertices are `0..vertex_count`. Edges are stored once, as `(u, v)` with
//! `u < v`, sorted lexicographically; an edge id is the index into that
//! sorted list. Mixed sets are bitstrings over `V ∪ E` in the fixed order
//! "vertices by id, then edges by id".

use std::collections::BTreeSet;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    edge_index: FxHashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds a graph from an edge list given in any order and orientation.
    /// Rejects self-loops, duplicates and out-of-range endpoints.
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: x, count: vertex_count });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        let mut edge_index = FxHashMap::default();
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incident[u].push(id);
            incident[v].push(id);
            edge_index.insert((u, v), id);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { vertex_count, edges, adjacency, incident, edge_index })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of elements of `V ∪ E`.
    pub fn element_count(&self) -> usize {
        self.vertex_count + self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<(usize, usize)> {
        self.edges.get(id).copied().ok_or(Error::EdgeOutOfRange { edge: id, count: self.edges.len() })
    }

    /// Id of the edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Open neighbourhood `N(v)`, sorted.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    /// Ids of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.incident[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count })
        }
    }

    fn check_element(&self, r: MixedElement) -> Result<()> {
        match r {
            MixedElement::Vertex(v) => self.check_vertex(v),
            MixedElement::Edge(e) => self.edge(e).map(|_| ()),
        }
    }

    /// Position of `r` in the element order used by [`MixedSet`].
    pub fn element_index(&self, r: MixedElement) -> usize {
        match r {
            MixedElement::Vertex(v) => v,
            MixedElement::Edge(e) => self.vertex_count + e,
        }
    }

    pub fn element_at(&self, index: usize) -> MixedElement {
        if index < self.vertex_count {
            MixedElement::Vertex(index)
        } else {
            MixedElement::Edge(index - self.vertex_count)
        }
    }

    /// Closed mixed neighbourhood `N^md[r]`: a vertex sees its neighbours and
    /// incident edges; an edge sees its endpoints and every edge sharing
    /// exactly one endpoint with it. `r` itself is included.
    pub fn mixed_closed_neighborhood(&self, r: MixedElement) -> Result<BTreeSet<MixedElement>> {
        self.check_element(r)?;
        let mut out = BTreeSet::new();
        out.insert(r);
        match r {
            MixedElement::Vertex(v) => {
                out.extend(self.adjacency[v].iter().map(|&u| MixedElement::Vertex(u)));
                out.extend(self.incident[v].iter().map(|&e| MixedElement::Edge(e)));
            }
            MixedElement::Edge(e) => {
                let (u, v) = self.edges[e];
                out.insert(MixedElement::Vertex(u));
                out.insert(MixedElement::Vertex(v));
                for &f in self.incident[u].iter().chain(&self.incident[v]) {
                    out.insert(MixedElement::Edge(f));
                }
            }
        }
        Ok(out)
    }

    /// True iff every vertex and edge has a member of `s` in its closed mixed
    /// neighbourhood.
    pub fn is_mixed_dominating_set(&self, s: &MixedSet) -> bool {
        if s.len() != self.element_count() {
            return false;
        }
        let edge_power: Vec<bool> = (0..self.vertex_count)
            .map(|v| s.contains(v) || self.incident[v].iter().any(|&e| s.contains(self.vertex_count + e)))
            .collect();
        let vertices_ok =
            (0..self.vertex_count).all(|v| edge_power[v] || self.adjacency[v].iter().any(|&u| s.contains(u)));
        // An edge is dominated by itself, an endpoint in s, or an edge at one of
        // its endpoints; all three make an endpoint carry power.
        let edges_ok = self.edges.iter().all(|&(u, v)| edge_power[u] || edge_power[v]);
        vertices_ok && edges_ok
    }

    /// Convenience constructor for a mixed set of this graph.
    pub fn mixed_set<I>(&self, elements: I) -> Result<MixedSet>
    where
        I: IntoIterator<Item = MixedElement>,
    {
        let mut s = MixedSet::empty(self.element_count());
        for r in elements {
            self.check_element(r)?;
            s.insert(self.element_index(r));
        }
        Ok(s)
    }

    pub fn full_set(&self) -> MixedSet {
        let mut s = MixedSet::empty(self.element_count());
        for i in 0..self.element_count() {
            s.insert(i);
        }
        s
    }

    /// Splits a mixed set into sorted vertex ids and edge ids.
    pub fn split(&self, s: &MixedSet) -> (Vec<usize>, Vec<usize>) {
        let mut vs = Vec::new();
        let mut es = Vec::new();
        for i in s.iter() {
            match self.element_at(i) {
                MixedElement::Vertex(v) => vs.push(v),
                MixedElement::Edge(e) => es.push(e),
            }
        }
        (vs, es)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MixedElement {
    Vertex(usize),
    Edge(usize),
}

/// Bitstring over the elements of `V ∪ E`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedSet {
    len: usize,
    words: Vec<u64>,
}

impl MixedSet {
    pub fn empty(len: usize) -> Self {
        MixedSet { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.count() == 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "element {i} outside set of length {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &MixedSet) -> MixedSet {
        debug_assert_eq!(self.len, other.len);
        MixedSet { len: self.len, words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    pub fn is_subset(&self, other: &MixedSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    /// The bitstring, element 0 first.
    pub fn to_bit_string(&self) -> String {
        (0..self.len).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for MixedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedSet({})", self.to_bit_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use MixedElement::{Edge, Vertex};

    /// Five-vertex sample graph with 0-based ids.
    fn sample_graph() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn neighbors_of_sample_vertex_one() {
        assert_eq!(sample_graph().neighbors(0).unwrap(), &[1, 2, 3]);
    }

    #[test]
    fn neighbors_trivial_cases() {
        let single = Graph::new(1, &[]).unwrap();
        assert!(single.neighbors(0).unwrap().is_empty());
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.neighbors(1).unwrap(), &[0, 2]);
        assert!(matches!(p4.neighbors(4), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn edge_ids_follow_input_order() {
        let g = sample_graph();
        // Edges get ids in input order.
        assert_eq!(g.edge_id(3, 4), Some(5));
        assert_eq!(g.edge_id(1, 2), Some(3));
        assert_eq!(g.edge_id(2, 1), Some(3));
        assert_eq!(g.edge_id(1, 4), None);
    }

    #[test]
    fn closed_neighborhood_of_edge_six() {
        let g = sample_graph();
        let got = g.mixed_closed_neighborhood(Edge(5)).unwrap();
        let want: BTreeSet<_> = [Vertex(3), Vertex(4), Edge(2), Edge(4), Edge(5)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn closed_neighborhood_trivial_cases() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.mixed_closed_neighborhood(Vertex(2)).unwrap(), [Vertex(2)].into_iter().collect());
        assert_eq!(
            g.mixed_closed_neighborhood(Edge(0)).unwrap(),
            [Vertex(0), Vertex(1), Edge(0)].into_iter().collect()
        );
        assert!(g.mixed_closed_neighborhood(Edge(1)).is_err());
    }

    #[test]
    fn sample_minimum_sets() {
        let g = sample_graph();
        // Vertex 4 with edge {1,2} or edge {2,3} (1-based) dominates the graph.
        assert!(g.is_mixed_dominating_set(&g.mixed_set([Vertex(3), Edge(0)]).unwrap()));
        assert!(g.is_mixed_dominating_set(&g.mixed_set([Vertex(3), Edge(3)]).unwrap()));
        // Vertices 1 and 4 leave edge {2,3} undominated.
        assert!(!g.is_mixed_dominating_set(&g.mixed_set([Vertex(0), Vertex(3)]).unwrap()));
        assert!(!g.is_mixed_dominating_set(&MixedSet::empty(g.element_count())));
        assert!(g.is_mixed_dominating_set(&g.full_set()));
    }

    #[test]
    fn single_edge_dominates_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(g.is_mixed_dominating_set(&g.mixed_set([Edge(0)]).unwrap()));
    }

    #[test]
    fn isolated_vertex_needs_itself() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(!g.is_mixed_dominating_set(&g.mixed_set([Edge(0)]).unwrap()));
        assert!(g.is_mixed_dominating_set(&g.mixed_set([Edge(0), Vertex(2)]).unwrap()));
    }

    #[test]
    fn rejects_bad_edge_lists() {
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::new(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, .. })));
    }
}
