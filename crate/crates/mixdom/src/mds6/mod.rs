//! Six-state variant of the table program, computing `γ_md` only.
//!
//! Rows hold one state per bag vertex and no edge slots:
//!
//! | state | meaning |
//! |---|---|
//! | 1 | selected |
//! | 3 | not selected, some incident edge selected |
//! | 4 | no power, dominated, nothing pending |
//! | 5 | no power, undominated, nothing pending |
//! | 6 | no power, dominated, an undominated edge to a forgotten neighbour |
//! | 7 | no power, undominated, an undominated edge to a forgotten neighbour |
//!
//! Vertex membership is decided at introduce bags. Edges are decided at the
//! forget bag of whichever endpoint leaves first: the forgotten vertex picks
//! any subset of its edges into the bag, is checked for domination, and
//! leaves an undominated edge behind as a pending mark (4→6, 5→7) on the
//! other endpoint. A pending vertex must gain power before it is forgotten.
//! Join bags combine rows through [`join6`], a zeta/Möbius transform over
//! the merged states.

pub mod ledger;

use rustc_hash::FxHashMap;

pub use ledger::{moebius6, zeta6, LedgerTable, STATES6};

use crate::amds::{bound_for, check_inputs, CostBound};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treedec::{BagKind, NiceTreeDecomposition};

/// Joins over more slots than this use the direct pairwise join.
pub const TRANSFORM_MAX_SLOTS: usize = 8;

/// Table of the six-state program: cheapest cost per state tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table6 {
    vertices: Vec<usize>,
    bound: Option<u32>,
    rows: FxHashMap<Box<[u8]>, u32>,
}

impl Table6 {
    pub fn new(vertices: Vec<usize>, bound: Option<u32>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Table6 { vertices, bound, rows: FxHashMap::default() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Keeps the cheaper of the stored and the offered cost.
    pub fn insert(&mut self, key: Box<[u8]>, cost: u32) {
        if self.bound.is_some_and(|b| cost > b) {
            return;
        }
        self.rows.entry(key).and_modify(|c| *c = (*c).min(cost)).or_insert(cost);
    }

    pub fn cost_of(&self, states: &[u8]) -> Option<u32> {
        self.rows.get(states).copied()
    }

    /// `(states, cost)` pairs sorted by states.
    pub fn rows(&self) -> Vec<(Vec<u8>, u32)> {
        let mut out: Vec<_> = self.rows.iter().map(|(k, &c)| (k.to_vec(), c)).collect();
        out.sort();
        out
    }

    fn slot_of(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

/// Bag slots adjacent in `g` to the vertex at slot `x`.
fn adjacent_slots(g: &Graph, vertices: &[usize], x: usize) -> Vec<usize> {
    (0..vertices.len()).filter(|&j| j != x && g.has_edge(vertices[x], vertices[j])).collect()
}

/// Table of the leaf bag `{v}`.
pub fn leaf6(v: usize, bound: Option<u32>) -> Table6 {
    let mut t = Table6::new(vec![v], bound);
    t.insert(vec![1].into(), 1);
    t.insert(vec![5].into(), 0);
    t
}

/// Adds vertex `v`, either selected (cost 1, dominating its bag neighbours)
/// or not (dominated iff a bag neighbour is selected).
pub fn introduce6(g: &Graph, child: &Table6, v: usize) -> Result<Table6> {
    if child.slot_of(v).is_some() {
        return Err(Error::Mismatch(format!("vertex {v} introduced twice")));
    }
    let mut vertices = child.vertices.clone();
    let at = vertices.binary_search(&v).unwrap_err();
    vertices.insert(at, v);
    let nbrs = adjacent_slots(g, &vertices, at);
    let mut out = Table6::new(vertices, child.bound);
    for (key, &cost) in &child.rows {
        let mut row = key.to_vec();
        row.insert(at, 1);
        for &j in &nbrs {
            row[j] = match row[j] {
                5 => 4,
                7 => 6,
                s => s,
            };
        }
        out.insert(row.into(), cost + 1);

        let mut row = key.to_vec();
        let dominated = nbrs.iter().any(|&j| row[if j < at { j } else { j - 1 }] == 1);
        row.insert(at, if dominated { 4 } else { 5 });
        out.insert(row.into(), cost);
    }
    Ok(out)
}

/// Removes vertex `u`, choosing which of its edges into the bag join the
/// solution. Rows leaving `u` undominated, or pending without power, are
/// dropped.
pub fn forget6(g: &Graph, child: &Table6, u: usize) -> Result<Table6> {
    let x = child.slot_of(u).ok_or_else(|| Error::Mismatch(format!("forgotten vertex {u} is not in the child bag")))?;
    let nbrs = adjacent_slots(g, &child.vertices, x);
    let mut vertices = child.vertices.clone();
    vertices.remove(x);
    let mut out = Table6::new(vertices, child.bound);
    for (key, &cost) in &child.rows {
        let su = key[x];
        for mask in 0u32..(1 << nbrs.len()) {
            let picked = mask.count_ones();
            let power = match su {
                1 => 2,
                3 => 1,
                _ if picked > 0 => 1,
                _ => 0,
            };
            let dominated = matches!(su, 1 | 3 | 4 | 6) || picked > 0 || nbrs.iter().any(|&j| key[j] == 1);
            if !dominated || (matches!(su, 6 | 7) && power == 0) {
                continue;
            }
            let mut row = key.to_vec();
            for (b, &j) in nbrs.iter().enumerate() {
                let sw = row[j];
                row[j] = if mask >> b & 1 == 1 {
                    if sw == 1 {
                        1
                    } else {
                        3
                    }
                } else if su == 1 {
                    match sw {
                        5 => 4,
                        7 => 6,
                        s => s,
                    }
                } else if power == 0 {
                    match sw {
                        4 => 6,
                        5 => 7,
                        s => s,
                    }
                } else {
                    sw
                };
            }
            row.remove(x);
            out.insert(row.into(), cost + picked);
        }
    }
    Ok(out)
}

/// Join of two non-selected states: power wins, otherwise dominated and
/// pending flags are or-ed.
fn join_state(a: u8, b: u8) -> u8 {
    if a == 3 || b == 3 {
        return 3;
    }
    let dominated = matches!(a, 4 | 6) || matches!(b, 4 | 6);
    let pending = matches!(a, 6 | 7) || matches!(b, 6 | 7);
    match (dominated, pending) {
        (true, false) => 4,
        (false, false) => 5,
        (true, true) => 6,
        (false, true) => 7,
    }
}

/// Direct join: every compatible row pair (same selected slots), cost
/// corrected for vertices selected on both sides.
pub fn join_direct(a: &Table6, b: &Table6) -> Result<Table6> {
    if a.vertices != b.vertices {
        return Err(Error::Mismatch("join children hold different bags".into()));
    }
    let mut out = Table6::new(a.vertices.clone(), min_bound(a.bound, b.bound));
    for (ka, &ca) in &a.rows {
        'pairs: for (kb, &cb) in &b.rows {
            let mut row = Vec::with_capacity(ka.len());
            let mut shared = 0;
            for (&x, &y) in ka.iter().zip(kb.iter()) {
                match (x == 1, y == 1) {
                    (true, true) => {
                        shared += 1;
                        row.push(1);
                    }
                    (false, false) => row.push(join_state(x, y)),
                    _ => continue 'pairs,
                }
            }
            out.insert(row.into(), ca + cb - shared);
        }
    }
    Ok(out)
}

fn min_bound(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Dense ledger of a table: one count per (tuple, cost − offset).
fn to_ledger(t: &Table6, offset: u32, costs: usize) -> LedgerTable {
    let mut l = LedgerTable::new(t.vertices.len(), costs);
    for (key, &c) in &t.rows {
        l.add(key, (c - offset) as usize, 1);
    }
    l
}

/// Join through the transform: both tables become per-cost count ledgers,
/// are zeta-transformed, multiplied pointwise (convolving costs), and
/// Möbius-transformed back. The cheapest cost with a nonzero count, minus
/// the number of selected slots, is the joined cost of each tuple.
/// `transform_tuples` is increased by the number of transform-domain tuples.
pub fn join6(a: &Table6, b: &Table6, transform_tuples: &mut usize) -> Result<Table6> {
    if a.vertices != b.vertices {
        return Err(Error::Mismatch("join children hold different bags".into()));
    }
    let bound = min_bound(a.bound, b.bound);
    let mut out = Table6::new(a.vertices.clone(), bound);
    if a.is_empty() || b.is_empty() {
        return Ok(out);
    }
    let k = a.vertices.len();
    let range = |t: &Table6| {
        let lo = *t.rows.values().min().unwrap();
        let hi = *t.rows.values().max().unwrap();
        (lo, (hi - lo) as usize + 1)
    };
    let (oa, la) = range(a);
    let (ob, lb) = range(b);
    let mut za = to_ledger(a, oa, la);
    let mut zb = to_ledger(b, ob, lb);
    zeta6(&mut za);
    zeta6(&mut zb);
    *transform_tuples += za.tuple_count();

    let costs = la + lb - 1;
    let mut prod = LedgerTable::new(k, costs);
    for i in 0..za.tuple_count() {
        let (x, y) = (za.ledger(i), zb.ledger(i));
        if x.iter().all(|&c| c == 0) || y.iter().all(|&c| c == 0) {
            continue;
        }
        let p = prod.ledger_mut(i);
        for (ci, &cx) in x.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (cj, &cy) in y.iter().enumerate() {
                p[ci + cj] += cx * cy;
            }
        }
    }
    moebius6(&mut prod)?;

    for i in 0..prod.tuple_count() {
        if let Some(c) = prod.ledger(i).iter().position(|&n| n > 0) {
            let states = prod.states_of(i);
            let shared = states.iter().filter(|&&s| s == 1).count() as u32;
            out.insert(states.into(), c as u32 + oa + ob - shared);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SixOptions {
    pub bound: CostBound,
    /// Recompute every join directly and fail on any difference.
    pub verify_joins: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SixOutcome {
    pub gamma: u32,
    pub peak_rows: usize,
    pub bag_count: usize,
    /// Join bags handled through the transform.
    pub transform_joins: usize,
    /// Join bags checked against the direct join (with `verify_joins`).
    pub verified_joins: usize,
    /// Largest number of transform-domain tuples at one join.
    pub max_transform_tuples: usize,
}

/// Runs the six-state program along `order`, reporting each table to `trace`.
pub fn run6_traced(
    g: &Graph,
    ntd: &NiceTreeDecomposition,
    order: &[usize],
    opts: &SixOptions,
    trace: &mut dyn FnMut(usize, &Table6),
) -> Result<SixOutcome> {
    check_inputs(g, ntd, order)?;
    let bound = bound_for(g, opts.bound);
    let mut tables: Vec<Option<Table6>> = vec![None; ntd.len()];
    let mut outcome = SixOutcome {
        gamma: 0,
        peak_rows: 0,
        bag_count: ntd.len(),
        transform_joins: 0,
        verified_joins: 0,
        max_transform_tuples: 0,
    };
    for &id in order {
        let bag = ntd.bag(id);
        let mut take = |c: usize| tables[c].take().ok_or_else(|| Error::Internal(format!("table of bag {c} missing")));
        let table = match bag.kind {
            BagKind::Leaf => leaf6(bag.vertices[0], bound),
            BagKind::Introduce(v) => introduce6(g, &take(bag.children[0])?, v)?,
            BagKind::Forget(v) => forget6(g, &take(bag.children[0])?, v)?,
            BagKind::Join => {
                let a = take(bag.children[0])?;
                let b = take(bag.children[1])?;
                let joined = if bag.vertices.len() <= TRANSFORM_MAX_SLOTS {
                    let mut tuples = 0;
                    let t = join6(&a, &b, &mut tuples)?;
                    outcome.transform_joins += 1;
                    outcome.max_transform_tuples = outcome.max_transform_tuples.max(tuples);
                    t
                } else {
                    join_direct(&a, &b)?
                };
                if opts.verify_joins {
                    if join_direct(&a, &b)? != joined {
                        return Err(Error::Internal(format!("transform join differs at bag {}", id + 1)));
                    }
                    outcome.verified_joins += 1;
                }
                joined
            }
        };
        outcome.peak_rows = outcome.peak_rows.max(table.len());
        trace(id, &table);
        tables[id] = Some(table);
    }

    let mut root = tables[ntd.root()].take().ok_or_else(|| Error::Internal("root table missing".into()))?;
    while let Some(&v) = root.vertices.first() {
        root = forget6(g, &root, v)?;
    }
    outcome.gamma = root.cost_of(&[]).ok_or(Error::Infeasible)?;
    Ok(outcome)
}

/// Computes `γ_md(g)` with the six-state program.
pub fn run6(g: &Graph, ntd: &NiceTreeDecomposition, order: &[usize]) -> Result<u32> {
    run6_traced(g, ntd, order, &SixOptions::default(), &mut |_, _| {}).map(|o| o.gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedec::{make_very_nice, min_fill_decompose, postorder_traversal};

    fn solve(g: &Graph) -> u32 {
        let ntd = make_very_nice(&min_fill_decompose(g)).unwrap();
        let opts = SixOptions { verify_joins: true, ..Default::default() };
        run6_traced(g, &ntd, &postorder_traversal(&ntd), &opts, &mut |_, _| {}).unwrap().gamma
    }

    #[test]
    fn small_graphs() {
        assert_eq!(solve(&Graph::new(2, &[(0, 1)]).unwrap()), 1);
        assert_eq!(solve(&Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()), 2);
        assert_eq!(solve(&Graph::new(3, &[]).unwrap()), 3);
        let star: Vec<_> = (1..6).map(|v| (0, v)).collect();
        assert_eq!(solve(&Graph::new(6, &star).unwrap()), 1);
    }

    #[test]
    fn join_with_neutral_table_is_identity() {
        let mut a = Table6::new(vec![0, 1], None);
        a.insert(vec![1, 4].into(), 2);
        a.insert(vec![5, 7].into(), 0);
        a.insert(vec![3, 6].into(), 1);
        let mut neutral = Table6::new(vec![0, 1], None);
        neutral.insert(vec![5, 5].into(), 0);
        neutral.insert(vec![1, 5].into(), 1);
        neutral.insert(vec![5, 1].into(), 1);
        neutral.insert(vec![1, 1].into(), 2);
        let mut tuples = 0;
        assert_eq!(join6(&a, &neutral, &mut tuples).unwrap(), a);
        assert_eq!(join_direct(&a, &neutral).unwrap(), a);
        assert_eq!(tuples, 36);
    }

    #[test]
    fn join_state_is_a_lattice_join() {
        for a in [3, 4, 5, 6, 7] {
            assert_eq!(join_state(a, a), a);
            assert_eq!(join_state(a, 5), a);
            for b in [3, 4, 5, 6, 7] {
                assert_eq!(join_state(a, b), join_state(b, a));
            }
        }
        assert_eq!(join_state(4, 7), 6);
    }
}
