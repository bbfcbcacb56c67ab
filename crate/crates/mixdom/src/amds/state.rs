use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, MixedSet};

/// Index of the slot pair `(i, j)`, `i < j`, among the `k(k-1)/2` pairs of a
/// `k`-slot bag in lexicographic order.
pub fn pair_index(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < k);
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

/// Slot assignment of a bag: vertex slots hold the bag's vertices in
/// ascending order; edge slots are the slot pairs in lexicographic order,
/// holding the graph edge between the two vertices if there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    vertices: Vec<usize>,
    edges: Vec<Option<usize>>,
}

impl Layout {
    pub fn new(g: &Graph, vertices: &[usize]) -> Self {
        let mut vertices = vertices.to_vec();
        vertices.sort_unstable();
        let k = vertices.len();
        let mut edges = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                edges.push(g.edge_id(vertices[i], vertices[j]));
            }
        }
        Layout { vertices, edges }
    }

    pub(crate) fn from_parts(vertices: Vec<usize>, edges: Vec<Option<usize>>) -> Self {
        debug_assert_eq!(edges.len(), vertices.len() * vertices.len().saturating_sub(1) / 2);
        Layout { vertices, edges }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Graph edge id per slot pair (`None` where the vertices are not adjacent).
    pub fn edges(&self) -> &[Option<usize>] {
        &self.edges
    }

    pub fn width(&self) -> usize {
        self.vertices.len()
    }

    pub fn slot_of(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn key_len(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn edge_slot(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        pair_index(self.vertices.len(), i, j)
    }
}

/// One row of a table, in slot order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StateRow {
    pub vertex_states: Vec<u8>,
    pub edge_states: Vec<u8>,
    pub cost: u32,
    /// Partial solutions reaching this state at `cost`; empty unless the table
    /// collects witnesses.
    pub witnesses: Vec<MixedSet>,
}

#[derive(Debug, Clone)]
pub(crate) struct Entry {
    pub cost: u32,
    pub witnesses: BTreeSet<MixedSet>,
}

/// Rows of one bag keyed by their exact state tuple. Only the cheapest cost
/// per tuple is kept; equally cheap witnesses are pooled.
#[derive(Debug, Clone)]
pub struct StateTable {
    layout: Layout,
    collect: bool,
    bound: Option<u32>,
    pub(crate) rows: FxHashMap<Box<[u8]>, Entry>,
}

impl StateTable {
    /// Empty table. With `collect` set, witnesses are kept; rows costing more
    /// than `bound` are discarded on insertion.
    pub fn new(layout: Layout, collect: bool, bound: Option<u32>) -> Self {
        StateTable { layout, collect, bound, rows: FxHashMap::default() }
    }

    /// Builds a table from explicit `(vertex states, edge states, cost)` rows,
    /// without witnesses. Duplicate tuples keep the lowest cost.
    pub fn from_rows<I>(layout: Layout, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u8>, Vec<u8>, u32)>,
    {
        let mut t = StateTable::new(layout, false, None);
        for (vs, es, cost) in rows {
            if vs.len() != t.layout.vertices.len() || es.len() != t.layout.edges.len() {
                return Err(Error::Mismatch(format!("row {vs:?}|{es:?} does not fit the bag layout")));
            }
            let key: Box<[u8]> = vs.into_iter().chain(es).collect();
            t.insert(key, cost, BTreeSet::new);
        }
        Ok(t)
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn collects_witnesses(&self) -> bool {
        self.collect
    }

    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Inserts a row. A cheaper row replaces the stored one, an equally cheap
    /// one adds its witnesses, a dearer one is ignored. `witnesses` is only
    /// evaluated when the row is kept and witnesses are collected. Returns
    /// whether the table changed.
    pub fn insert(&mut self, key: Box<[u8]>, cost: u32, witnesses: impl FnOnce() -> BTreeSet<MixedSet>) -> bool {
        if self.bound.is_some_and(|b| cost > b) {
            return false;
        }
        let collect = self.collect;
        match self.rows.get_mut(&key) {
            Some(e) if cost > e.cost => false,
            Some(e) if cost == e.cost => {
                if collect {
                    let before = e.witnesses.len();
                    e.witnesses.extend(witnesses());
                    e.witnesses.len() != before
                } else {
                    false
                }
            }
            Some(e) => {
                e.cost = cost;
                e.witnesses = if collect { witnesses() } else { BTreeSet::new() };
                true
            }
            None => {
                let w = if collect { witnesses() } else { BTreeSet::new() };
                self.rows.insert(key, Entry { cost, witnesses: w });
                true
            }
        }
    }

    /// Cost stored for a state tuple.
    pub fn cost_of(&self, vertex_states: &[u8], edge_states: &[u8]) -> Option<u32> {
        let key: Vec<u8> = vertex_states.iter().chain(edge_states).copied().collect();
        self.rows.get(key.as_slice()).map(|e| e.cost)
    }

    pub fn witnesses_of(&self, vertex_states: &[u8], edge_states: &[u8]) -> Option<&BTreeSet<MixedSet>> {
        let key: Vec<u8> = vertex_states.iter().chain(edge_states).copied().collect();
        self.rows.get(key.as_slice()).map(|e| &e.witnesses)
    }

    /// All rows, sorted by state tuple.
    pub fn rows(&self) -> Vec<StateRow> {
        let k = self.layout.vertices.len();
        let mut out: Vec<StateRow> = self
            .rows
            .iter()
            .map(|(key, e)| StateRow {
                vertex_states: key[..k].to_vec(),
                edge_states: key[k..].to_vec(),
                cost: e.cost,
                witnesses: e.witnesses.iter().cloned().collect(),
            })
            .collect();
        out.sort();
        out
    }

    /// `(vertex states, edge states, cost)` triples, sorted.
    pub fn summary(&self) -> Vec<(Vec<u8>, Vec<u8>, u32)> {
        self.rows().into_iter().map(|r| (r.vertex_states, r.edge_states, r.cost)).collect()
    }
}
