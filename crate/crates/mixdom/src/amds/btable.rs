use std::collections::BTreeSet;

use super::state::{Layout, StateTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, MixedElement, MixedSet};

/// States of every bag slot when exactly the selected bag elements are in the
/// dominating set. Vertex states: 1 in set with an incident selected edge,
/// 2 in set otherwise, 3 not in set with an incident selected edge; else 4–7
/// for (dominated, all incident bag edges dominated) = (yes, yes), (no, yes),
/// (yes, no), (no, no). Edge states: 1 selected, 2 dominated, 3 undominated.
fn derive_states(layout: &Layout, in_v: &[bool], in_e: &[bool]) -> Vec<u8> {
    let k = layout.width();
    let edges = layout.edges();
    let slot_edge = |i: usize, j: usize| layout.edge_slot(i, j);
    let has_edge_in = |i: usize| (0..k).any(|j| j != i && edges[slot_edge(i, j)].is_some() && in_e[slot_edge(i, j)]);
    let power: Vec<u8> = (0..k)
        .map(|i| {
            if in_v[i] {
                2
            } else if has_edge_in(i) {
                1
            } else {
                0
            }
        })
        .collect();

    let mut key = Vec::with_capacity(layout.key_len());
    for i in 0..k {
        let nbrs = || (0..k).filter(move |&j| j != i && edges[slot_edge(i, j)].is_some());
        let state = if in_v[i] {
            if has_edge_in(i) {
                1
            } else {
                2
            }
        } else if has_edge_in(i) {
            3
        } else {
            let dominated = nbrs().any(|j| in_v[j]);
            let edges_ok = nbrs().all(|j| power[j] > 0);
            match (dominated, edges_ok) {
                (true, true) => 4,
                (false, true) => 5,
                (true, false) => 6,
                (false, false) => 7,
            }
        };
        key.push(state);
    }
    for i in 0..k {
        for j in i + 1..k {
            let s = slot_edge(i, j);
            key.push(match edges[s] {
                None => 0,
                Some(_) if in_e[s] => 1,
                Some(_) if power[i] > 0 || power[j] > 0 => 2,
                Some(_) => 3,
            });
        }
    }
    key
}

/// Bag table over all subsets of the given selectable vertex and edge slots;
/// the other bag elements are never selected.
pub(crate) fn btable_over(
    g: &Graph,
    layout: &Layout,
    vertex_slots: &[usize],
    edge_slots: &[usize],
    collect: bool,
) -> StateTable {
    let mut table = StateTable::new(layout.clone(), collect, None);
    let k = layout.width();
    let choices = vertex_slots.len() + edge_slots.len();
    assert!(choices < 32, "bag table over {choices} elements is too large to enumerate");
    for mask in 0u32..(1 << choices) {
        let mut in_v = vec![false; k];
        let mut in_e = vec![false; layout.edges().len()];
        let mut cost = 0;
        for (b, &s) in vertex_slots.iter().enumerate() {
            if mask >> b & 1 == 1 {
                in_v[s] = true;
                cost += 1;
            }
        }
        for (b, &s) in edge_slots.iter().enumerate() {
            if mask >> (vertex_slots.len() + b) & 1 == 1 {
                in_e[s] = true;
                cost += 1;
            }
        }
        let key = derive_states(layout, &in_v, &in_e);
        table.insert(key.into(), cost, || {
            let mut w = MixedSet::empty(g.element_count());
            for (s, _) in in_v.iter().enumerate().filter(|(_, &x)| x) {
                w.insert(g.element_index(MixedElement::Vertex(layout.vertices()[s])));
            }
            for (s, _) in in_e.iter().enumerate().filter(|(_, &x)| x) {
                w.insert(g.element_index(MixedElement::Edge(layout.edges()[s].unwrap())));
            }
            BTreeSet::from([w])
        });
    }
    table
}

/// Bag table of `bag`: every subset of its vertices and induced edges,
/// mapped to slot states, deduplicated at minimum cost.
pub fn enumerate_btable(g: &Graph, bag: &[usize], collect: bool) -> StateTable {
    let layout = Layout::new(g, bag);
    let vertex_slots: Vec<usize> = (0..layout.width()).collect();
    let edge_slots: Vec<usize> = (0..layout.edges().len()).filter(|&s| layout.edges()[s].is_some()).collect();
    btable_over(g, &layout, &vertex_slots, &edge_slots, collect)
}

/// Bag table restricted to the elements an introduce bag adds: the new
/// vertex and its edges into the bag.
pub fn enumerate_btable_new(g: &Graph, bag: &[usize], new_vertex: usize, collect: bool) -> Result<StateTable> {
    let layout = Layout::new(g, bag);
    let slot = layout
        .slot_of(new_vertex)
        .ok_or_else(|| Error::Mismatch(format!("vertex {new_vertex} is not in the introduce bag")))?;
    let edge_slots: Vec<usize> = (0..layout.width())
        .filter(|&j| j != slot)
        .map(|j| layout.edge_slot(slot, j))
        .filter(|&s| layout.edges()[s].is_some())
        .collect();
    Ok(btable_over(g, &layout, &[slot], &edge_slots, collect))
}

/// Table of a leaf bag `{v}`: state 2 at cost 1 (`v` selected) and state 5
/// at cost 0.
pub fn leaf_table(g: &Graph, bag: &[usize], collect: bool) -> Result<StateTable> {
    if bag.len() != 1 {
        return Err(Error::LeafNotSingleton(bag.len()));
    }
    if bag[0] >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: bag[0], count: g.vertex_count() });
    }
    Ok(enumerate_btable(g, bag, collect))
}
