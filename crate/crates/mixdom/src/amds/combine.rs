use std::collections::BTreeSet;

use super::state::{Layout, StateTable};
use super::tables::{ast_int, ast_join, star_int, star_join};
use crate::error::{Error, Result};
use crate::graph::MixedSet;

/// Slot pairs `(i, j)` in edge-slot order.
fn slot_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

/// Vertex slots in the same bag as `i` and joined to it by a graph edge,
/// with the edge slot between them.
fn adjacent_slots(layout: &Layout, i: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..layout.width())
        .filter(move |&j| j != i)
        .map(move |j| (j, layout.edge_slot(i, j)))
        .filter(move |&(_, s)| layout.edges()[s].is_some())
}

/// Fills in vertex slots whose table cell offered several states. Edge slots
/// must already be final. `{4,5}` depends on a selected bag neighbour, `{4,6}`
/// and `{5,7}` on an undominated incident bag edge, `{4,5,6,7}` on both.
fn resolve_vertices(layout: &Layout, key: &mut [u8], cands: &[&'static [u8]]) {
    let k = layout.width();
    for i in 0..k {
        if cands[i].len() < 2 {
            continue;
        }
        let has_open_edge = adjacent_slots(layout, i).any(|(_, s)| key[k + s] == 3);
        let dominated = adjacent_slots(layout, i).any(|(j, _)| cands[j].len() == 1 && matches!(key[j], 1 | 2));
        key[i] = match cands[i] {
            [4, 5] => {
                if dominated {
                    4
                } else {
                    5
                }
            }
            [4, 6] => {
                if has_open_edge {
                    6
                } else {
                    4
                }
            }
            [5, 7] => {
                if has_open_edge {
                    7
                } else {
                    5
                }
            }
            [4, 5, 6, 7] => 4 + u8::from(!dominated) + 2 * u8::from(has_open_edge),
            other => unreachable!("unexpected multi-valued cell {other:?}"),
        };
    }
}

fn unions(a: &BTreeSet<MixedSet>, b: &BTreeSet<MixedSet>) -> BTreeSet<MixedSet> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.union(y))).collect()
}

/// Combines a row pair of an introduce bag. `status` is the child row lifted
/// into the bag layout (zeros for the new vertex and its edges). Returns the
/// state tuple and the number of doubly counted selections.
pub(crate) fn combine_introduce_rows(
    layout: &Layout,
    pairs: &[(usize, usize)],
    new_slot: usize,
    status: &[u8],
    bag: &[u8],
) -> Result<(Box<[u8]>, u32)> {
    let k = layout.width();
    let mut key = vec![0u8; layout.key_len()];
    let mut cands: Vec<&'static [u8]> = vec![&[]; k];
    let mut overlap = 0;
    for j in 0..k {
        let (s, b) = (status[j], bag[j]);
        if matches!(s, 1 | 2) && matches!(b, 1 | 2) {
            overlap += 1;
        }
        let c = star_int(b, s)?;
        if c.len() == 1 {
            key[j] = c[0];
        }
        cands[j] = c;
    }
    for (p, &(i, j)) in pairs.iter().enumerate() {
        let (s, b) = (status[k + p], bag[k + p]);
        if s == 1 && b == 1 {
            overlap += 1;
        }
        let c = ast_int(b, s)?;
        key[k + p] = if c.len() == 1 {
            c[0]
        } else {
            // A new undominated edge is rescued by an old endpoint with power.
            let old = if i == new_slot { j } else { i };
            if matches!(status[old], 1..=3) {
                2
            } else {
                3
            }
        };
    }
    resolve_vertices(layout, &mut key, &cands);
    Ok((key.into(), overlap))
}

/// Combines a row pair of a join bag.
pub(crate) fn combine_join_rows(layout: &Layout, a: &[u8], b: &[u8]) -> Result<(Box<[u8]>, u32)> {
    let k = layout.width();
    let mut key = vec![0u8; layout.key_len()];
    let mut cands: Vec<&'static [u8]> = vec![&[]; k];
    let mut overlap = 0;
    for j in 0..k {
        if matches!(a[j], 1 | 2) && matches!(b[j], 1 | 2) {
            overlap += 1;
        }
        let c = star_join(a[j], b[j])?;
        if c.len() == 1 {
            key[j] = c[0];
        }
        cands[j] = c;
    }
    for p in k..layout.key_len() {
        if a[p] == 1 && b[p] == 1 {
            overlap += 1;
        }
        key[p] = ast_join(a[p], b[p])?[0];
    }
    resolve_vertices(layout, &mut key, &cands);
    Ok((key.into(), overlap))
}

/// Status table of an introduce bag: every child row combined with every
/// bag-table row through the introduce tables. Witnesses are unions of the
/// two sides' witnesses.
pub fn introduce_combine(child: &StateTable, btable: &StateTable) -> Result<StateTable> {
    let lp = btable.layout();
    let lc = child.layout();
    if lp.width() != lc.width() + 1 {
        return Err(Error::Mismatch("introduce bag must extend its child by one vertex".into()));
    }
    let vmap = lc
        .vertices()
        .iter()
        .map(|&v| lp.slot_of(v).ok_or_else(|| Error::Mismatch(format!("vertex {v} vanished at an introduce bag"))))
        .collect::<Result<Vec<_>>>()?;
    let new_slot = (0..lp.width()).find(|s| !vmap.contains(s)).expect("one slot is new");
    let (kp, kc) = (lp.width(), lc.width());
    let emap: Vec<usize> = slot_pairs(kc).into_iter().map(|(a, b)| lp.edge_slot(vmap[a], vmap[b])).collect();
    let pairs = slot_pairs(kp);

    let collect = child.collects_witnesses() && btable.collects_witnesses();
    let mut out = StateTable::new(lp.clone(), collect, child.bound());
    let mut lifted = vec![0u8; lp.key_len()];
    for (ck, ce) in &child.rows {
        lifted.fill(0);
        for (a, &pa) in vmap.iter().enumerate() {
            lifted[pa] = ck[a];
        }
        for (p, &pp) in emap.iter().enumerate() {
            lifted[kp + pp] = ck[kc + p];
        }
        for (bk, be) in &btable.rows {
            let (key, overlap) = combine_introduce_rows(lp, &pairs, new_slot, &lifted, bk)?;
            let cost = ce.cost + be.cost - overlap;
            out.insert(key, cost, || unions(&ce.witnesses, &be.witnesses));
        }
    }
    Ok(out)
}

/// Status table of a join bag. Both children must share the bag.
pub fn join_combine(a: &StateTable, b: &StateTable) -> Result<StateTable> {
    if a.layout() != b.layout() {
        return Err(Error::Mismatch("join children hold different bags".into()));
    }
    let layout = a.layout();
    let collect = a.collects_witnesses() && b.collects_witnesses();
    let bound = match (a.bound(), b.bound()) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    let mut out = StateTable::new(layout.clone(), collect, bound);
    for (ak, ae) in &a.rows {
        for (bk, be) in &b.rows {
            let (key, overlap) = combine_join_rows(layout, ak, bk)?;
            let cost = ae.cost + be.cost - overlap;
            out.insert(key, cost, || unions(&ae.witnesses, &be.witnesses));
        }
    }
    Ok(out)
}

/// Status table of a forget bag. Rows where the forgotten vertex is still
/// undominated (5, 7, 9) or has an undominated edge to an already forgotten
/// vertex (8) are dropped: nothing introduced later can repair them. A
/// forgotten vertex in state 6 hands its undominated bag edges over to the
/// other endpoints, which move 4/6 → 8 and 5/7 → 9.
pub fn forget_reduce(child: &StateTable, vertex: usize) -> Result<StateTable> {
    let lc = child.layout();
    let x = lc
        .slot_of(vertex)
        .ok_or_else(|| Error::Mismatch(format!("forgotten vertex {vertex} is not in the child bag")))?;
    let kc = lc.width();
    let remaining: Vec<usize> = lc.vertices().iter().copied().filter(|&v| v != vertex).collect();
    // The forget layout is the child layout minus one vertex; edge ids carry over.
    let keep_slots: Vec<usize> = (0..kc).filter(|&s| s != x).collect();
    let keep_pairs: Vec<usize> =
        slot_pairs(kc).into_iter().enumerate().filter(|(_, (i, j))| *i != x && *j != x).map(|(p, _)| p).collect();
    let layout = child_layout_without(lc, &remaining, &keep_pairs);

    let mut out = StateTable::new(layout, child.collects_witnesses(), child.bound());
    for (ck, ce) in &child.rows {
        let sx = ck[x];
        if matches!(sx, 5 | 7 | 8 | 9) {
            continue;
        }
        let mut row = ck.to_vec();
        if sx == 6 {
            for (j, s) in adjacent_slots(lc, x) {
                if row[kc + s] == 3 {
                    row[j] = match row[j] {
                        4 | 6 => 8,
                        5 | 7 => 9,
                        other => other,
                    };
                }
            }
        }
        let key: Box<[u8]> =
            keep_slots.iter().map(|&s| row[s]).chain(keep_pairs.iter().map(|&p| row[kc + p])).collect();
        out.insert(key, ce.cost, || ce.witnesses.clone());
    }
    Ok(out)
}

fn child_layout_without(lc: &Layout, remaining: &[usize], keep_pairs: &[usize]) -> Layout {
    let edges = keep_pairs.iter().map(|&p| lc.edges()[p]).collect();
    Layout::from_parts(remaining.to_vec(), edges)
}
