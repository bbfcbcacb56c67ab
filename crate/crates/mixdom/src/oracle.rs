//! Brute-force mixed domination for small graphs.

use crate::error::{Error, Result};
use crate::graph::{Graph, MixedSet};

/// Largest `|V| + |E|` the brute force accepts.
pub const ORACLE_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub gamma: u32,
    /// Every minimum mixed dominating set when enumerating, otherwise the
    /// first one found. Sorted.
    pub min_sets: Vec<MixedSet>,
}

/// Next integer with the same number of set bits (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Tries subsets of `V ∪ E` by increasing size; the first size admitting a
/// mixed dominating set is `γ_md`.
pub fn brute_force(g: &Graph, enumerate: bool) -> Result<OracleResult> {
    let n = g.element_count();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge { got: n, limit: ORACLE_LIMIT });
    }
    let closed: Vec<u64> = (0..n)
        .map(|i| {
            g.mixed_closed_neighborhood(g.element_at(i))
                .expect("element index in range")
                .into_iter()
                .fold(0u64, |m, r| m | 1 << g.element_index(r))
        })
        .collect();
    let dominates = |s: u64| closed.iter().all(|&m| m & s != 0);
    let to_set = |s: u64| {
        let mut set = MixedSet::empty(n);
        (0..n).filter(|&i| s >> i & 1 == 1).for_each(|i| set.insert(i));
        set
    };

    for size in 0..=n {
        let mut found = Vec::new();
        if size == 0 {
            if dominates(0) {
                found.push(to_set(0));
            }
        } else {
            let end = 1u64 << n;
            let mut s = (1u64 << size) - 1;
            while s < end {
                if dominates(s) {
                    found.push(to_set(s));
                    if !enumerate {
                        break;
                    }
                }
                s = next_combination(s);
            }
        }
        if !found.is_empty() {
            found.sort();
            return Ok(OracleResult { gamma: size as u32, min_sets: found });
        }
    }
    unreachable!("the full element set always dominates")
}
