//! Greedy upper bound for the mixed domination number.

use crate::graph::{Graph, MixedSet};

/// Repeatedly selects the element whose closed mixed neighbourhood covers the
/// most still undominated elements (lowest element index on ties). The
/// result is always a mixed dominating set.
pub fn greedy_mixed_dominating_set(g: &Graph) -> MixedSet {
    let n = g.element_count();
    let closed: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            g.mixed_closed_neighborhood(g.element_at(i))
                .expect("element index in range")
                .into_iter()
                .map(|r| g.element_index(r))
                .collect()
        })
        .collect();
    let mut dominated = vec![false; n];
    let mut remaining = n;
    let mut chosen = MixedSet::empty(n);
    while remaining > 0 {
        let gain = |i: usize| closed[i].iter().filter(|&&j| !dominated[j]).count();
        let best = (0..n).max_by_key(|&i| (gain(i), std::cmp::Reverse(i))).expect("elements remain");
        chosen.insert(best);
        for &j in &closed[best] {
            if !dominated[j] {
                dominated[j] = true;
                remaining -= 1;
            }
        }
    }
    chosen
}
