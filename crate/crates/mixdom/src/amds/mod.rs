//! Nine-state table dynamic program over a very nice tree decomposition.
//!
//! Every bag carries a table of rows. A row assigns each bag vertex a state
//! 1–9 and each bag edge a state 1–3 (0 marks an unused slot) together with
//! the cheapest number of selected elements realising it in the processed
//! subgraph:
//!
//! | vertex | meaning |
//! |---|---|
//! | 1 | selected, with a selected incident edge |
//! | 2 | selected, no selected incident edge |
//! | 3 | not selected, some incident edge selected |
//! | 4 | no power, dominated, incident bag edges dominated |
//! | 5 | no power, undominated, incident bag edges dominated |
//! | 6 | no power, dominated, some incident bag edge undominated |
//! | 7 | no power, undominated, some incident bag edge undominated |
//! | 8 | dominated, an edge to a forgotten vertex undominated |
//! | 9 | undominated, an edge to a forgotten vertex undominated |
//!
//! Edge states: 1 selected, 2 dominated, 3 undominated.
//!
//! Leaves start from the two-row table of a single vertex, introduce bags
//! combine the child table with a freshly enumerated bag table, forget bags
//! drop unrepairable rows and join bags combine their children pairwise.

mod btable;
mod combine;
mod state;
pub mod tables;
mod trace;

use std::collections::BTreeSet;

pub use btable::{enumerate_btable, enumerate_btable_new, leaf_table};
pub use combine::{forget_reduce, introduce_combine, join_combine};
pub use state::{pair_index, Layout, StateRow, StateTable};
pub use trace::{format_rows, format_table, section_header, TraceRow};

use crate::error::{Error, Result};
use crate::graph::{Graph, MixedSet};
use crate::heuristic::greedy_mixed_dominating_set;
use crate::treedec::{validate_td, BagKind, NiceTreeDecomposition};

/// Which elements an introduce bag enumerates in its bag table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BtableMode {
    /// Only the introduced vertex and its bag edges; everything else in the
    /// bag was already decided below.
    #[default]
    NewElementsOnly,
    /// Every vertex and edge of the bag.
    Full,
}

/// Upper bound on the cost of rows worth keeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CostBound {
    /// Size of a greedy mixed dominating set.
    #[default]
    Greedy,
    Fixed(u32),
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DpOptions {
    /// Collect all minimum mixed dominating sets.
    pub enumerate: bool,
    pub btable: BtableMode,
    pub bound: CostBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpOutcome {
    pub gamma: u32,
    /// All minimum mixed dominating sets, sorted; present when enumerating.
    pub min_sets: Option<Vec<MixedSet>>,
    /// Largest table built along the way.
    pub peak_rows: usize,
    pub bag_count: usize,
}

/// Resolves a [`CostBound`] for `g`.
pub(crate) fn bound_for(g: &Graph, bound: CostBound) -> Option<u32> {
    match bound {
        CostBound::Greedy => Some(greedy_mixed_dominating_set(g).count() as u32),
        CostBound::Fixed(b) => Some(b),
        CostBound::None => None,
    }
}

/// Checks that `ntd` is a very nice decomposition of `g` and that `order`
/// visits every bag once with children first.
pub(crate) fn check_inputs(g: &Graph, ntd: &NiceTreeDecomposition, order: &[usize]) -> Result<()> {
    if ntd.vertex_count() != g.vertex_count() {
        return Err(Error::Mismatch(format!(
            "decomposition covers {} vertices, graph has {}",
            ntd.vertex_count(),
            g.vertex_count()
        )));
    }
    if let Some(v) = validate_td(g, &ntd.to_tree_decomposition()).first() {
        return Err(Error::Mismatch(v.to_string()));
    }
    if let Some(msg) = ntd.check_invariants().first() {
        return Err(Error::InvalidDecomposition(msg.clone()));
    }
    let mut seen = vec![false; ntd.len()];
    for &b in order {
        if b >= ntd.len() || seen[b] || ntd.bag(b).children.iter().any(|&c| !seen[c]) {
            return Err(Error::InvalidDecomposition(format!("bag order is not a postorder at bag {}", b + 1)));
        }
        seen[b] = true;
    }
    if seen.iter().any(|s| !s) || order.last() != Some(&ntd.root()) {
        return Err(Error::InvalidDecomposition("bag order must visit every bag and end at the root".into()));
    }
    Ok(())
}

/// Builds the table of one bag from its children's tables.
fn bag_table(
    g: &Graph,
    ntd: &NiceTreeDecomposition,
    id: usize,
    tables: &mut [Option<StateTable>],
    opts: &DpOptions,
    bound: Option<u32>,
) -> Result<StateTable> {
    let bag = ntd.bag(id);
    let mut take = |c: usize| tables[c].take().ok_or_else(|| Error::Internal(format!("table of bag {c} missing")));
    Ok(match bag.kind {
        BagKind::Leaf => {
            let t = leaf_table(g, &bag.vertices, opts.enumerate)?;
            let mut bounded = StateTable::new(t.layout().clone(), opts.enumerate, bound);
            for (k, e) in t.rows {
                bounded.insert(k, e.cost, || e.witnesses);
            }
            bounded
        }
        BagKind::Introduce(v) => {
            let child = take(bag.children[0])?;
            let btable = match opts.btable {
                BtableMode::NewElementsOnly => enumerate_btable_new(g, &bag.vertices, v, opts.enumerate)?,
                BtableMode::Full => enumerate_btable(g, &bag.vertices, opts.enumerate),
            };
            introduce_combine(&child, &btable)?
        }
        BagKind::Forget(v) => forget_reduce(&take(bag.children[0])?, v)?,
        BagKind::Join => {
            let a = take(bag.children[0])?;
            let b = take(bag.children[1])?;
            join_combine(&a, &b)?
        }
    })
}

/// Root rows whose vertices are all dominated with no open edge (states
/// 1–4) and whose edges are all dominated (1–2).
pub fn is_root_feasible(row: &StateRow) -> bool {
    row.vertex_states.iter().all(|s| (1..=4).contains(s)) && row.edge_states.iter().all(|s| matches!(s, 0..=2))
}

/// Runs the table program along `order` (a postorder of `ntd`), reporting
/// every finished table to `trace`.
pub fn run_dp_traced(
    g: &Graph,
    ntd: &NiceTreeDecomposition,
    order: &[usize],
    opts: &DpOptions,
    trace: &mut dyn FnMut(usize, &StateTable),
) -> Result<DpOutcome> {
    check_inputs(g, ntd, order)?;
    let bound = bound_for(g, opts.bound);
    let mut tables: Vec<Option<StateTable>> = vec![None; ntd.len()];
    let mut peak_rows = 0;
    for &id in order {
        let table = bag_table(g, ntd, id, &mut tables, opts, bound)?;
        peak_rows = peak_rows.max(table.len());
        trace(id, &table);
        tables[id] = Some(table);
    }
    let root = tables[ntd.root()].take().ok_or_else(|| Error::Internal("root table missing".into()))?;

    let feasible: Vec<StateRow> = root.rows().into_iter().filter(is_root_feasible).collect();
    let gamma = feasible.iter().map(|r| r.cost).min().ok_or(Error::Infeasible)?;
    let min_sets = if opts.enumerate {
        let sets: BTreeSet<MixedSet> =
            feasible.into_iter().filter(|r| r.cost == gamma).flat_map(|r| r.witnesses).collect();
        for s in &sets {
            if s.count() as u32 != gamma || !g.is_mixed_dominating_set(s) {
                return Err(Error::Internal(format!("root witness {} is not a minimum solution", s.to_bit_string())));
            }
        }
        Some(sets.into_iter().collect())
    } else {
        None
    };
    Ok(DpOutcome { gamma, min_sets, peak_rows, bag_count: ntd.len() })
}

/// Computes `γ_md(g)` (and, with `opts.enumerate`, every minimum mixed
/// dominating set) along the bag order `order`.
pub fn run_dp(g: &Graph, ntd: &NiceTreeDecomposition, order: &[usize], opts: &DpOptions) -> Result<DpOutcome> {
    run_dp_traced(g, ntd, order, opts, &mut |_, _| {})
}
