//! Dense per-cost count tables and the state-merging transform used by the
//! six-state join.
//!
//! Apart from state 1, which only combines with itself, the six-state join
//! is the join of the order `5 ≤ 4 ≤ 6 ≤ 3`, `5 ≤ 7 ≤ 6`. The zeta transform
//! replaces each coordinate value by the sum over everything below it; at
//! state 7 that is the merged "5 or 7" entry, at 4, 6 and 3 the sums of the
//! lower states. In the transformed domain the join becomes a pointwise
//! product (a convolution over costs), and the Möbius transform undoes the
//! merge.

use crate::error::{Error, Result};

/// Vertex states of the six-state program in digit order.
pub const STATES6: [u8; 6] = [1, 3, 4, 5, 6, 7];

pub(crate) fn digit_of(state: u8) -> usize {
    match state {
        1 => 0,
        3 => 1,
        4 => 2,
        5 => 3,
        6 => 4,
        7 => 5,
        other => panic!("state {other} is not a six-state code"),
    }
}

/// Counts indexed by (state tuple, cost). A tuple over `slots` slots is
/// addressed in base 6, slot 0 most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerTable {
    slots: usize,
    costs: usize,
    data: Vec<i64>,
}

impl LedgerTable {
    /// All-zero table over `slots` slots and costs `0..costs`.
    pub fn new(slots: usize, costs: usize) -> Self {
        let tuples = 6usize.pow(slots as u32);
        LedgerTable { slots, costs, data: vec![0; tuples * costs] }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn costs(&self) -> usize {
        self.costs
    }

    pub fn tuple_count(&self) -> usize {
        self.data.len() / self.costs.max(1)
    }

    pub fn index_of(states: &[u8]) -> usize {
        states.iter().fold(0, |acc, &s| acc * 6 + digit_of(s))
    }

    pub fn states_of(&self, mut index: usize) -> Vec<u8> {
        let mut out = vec![0; self.slots];
        for slot in (0..self.slots).rev() {
            out[slot] = STATES6[index % 6];
            index /= 6;
        }
        out
    }

    pub fn get(&self, states: &[u8], cost: usize) -> i64 {
        self.data[Self::index_of(states) * self.costs + cost]
    }

    pub fn add(&mut self, states: &[u8], cost: usize, count: i64) {
        let i = Self::index_of(states) * self.costs + cost;
        self.data[i] += count;
    }

    /// Counts of one tuple, by cost.
    pub fn ledger(&self, index: usize) -> &[i64] {
        &self.data[index * self.costs..(index + 1) * self.costs]
    }

    pub(crate) fn ledger_mut(&mut self, index: usize) -> &mut [i64] {
        &mut self.data[index * self.costs..(index + 1) * self.costs]
    }

    /// Applies `f` to the six ledgers of every line along one slot.
    fn along_slot(&mut self, slot: usize, mut f: impl FnMut(&mut [Vec<i64>; 6])) {
        let stride = 6usize.pow((self.slots - 1 - slot) as u32);
        let tuples = self.tuple_count();
        let costs = self.costs;
        let mut line: [Vec<i64>; 6] = Default::default();
        for base in (0..tuples).filter(|i| (i / stride).is_multiple_of(6)) {
            for (d, l) in line.iter_mut().enumerate() {
                let at = (base + d * stride) * costs;
                l.clear();
                l.extend_from_slice(&self.data[at..at + costs]);
            }
            f(&mut line);
            for (d, l) in line.iter().enumerate() {
                let at = (base + d * stride) * costs;
                self.data[at..at + costs].copy_from_slice(l);
            }
        }
    }
}

fn add_into(dst: &mut [i64], src: &[i64]) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d += s);
}

fn sub_from(dst: &mut [i64], src: &[i64]) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d -= s);
}

/// Zeta transform in place: afterwards the state-7 coordinate holds the
/// merged `5 + 7` ledger.
pub fn zeta6(t: &mut LedgerTable) {
    for slot in 0..t.slots {
        t.along_slot(slot, |l| {
            let [_, ref mut f3, ref mut f4, ref f5, ref mut f6, ref mut f7] = *l;
            // New values, highest first so that the lower inputs are still raw.
            add_into(f3, f6);
            add_into(f3, f4);
            add_into(f3, f7);
            add_into(f3, f5);
            add_into(f6, f4);
            add_into(f6, f7);
            add_into(f6, f5);
            add_into(f4, f5);
            add_into(f7, f5);
        });
    }
}

/// Inverse of [`zeta6`]. Fails if a count turns negative, which means the
/// input was not the transform of a count table.
pub fn moebius6(t: &mut LedgerTable) -> Result<()> {
    for slot in 0..t.slots {
        t.along_slot(slot, |l| {
            let [_, ref mut z3, ref mut z4, ref z5, ref mut z6, ref mut z7] = *l;
            sub_from(z3, z6);
            sub_from(z6, z4);
            sub_from(z6, z7);
            add_into(z6, z5);
            sub_from(z4, z5);
            sub_from(z7, z5);
        });
    }
    if t.data.iter().any(|&c| c < 0) {
        return Err(Error::NegativeCount);
    }
    Ok(())
}
