//! Multiplication tables combining per-slot states.
//!
//! Introduce tables are indexed `[bag-table state][status-table state]`; the
//! bag-table side only ever carries vertex states 0–7. Join tables are
//! symmetric. An empty cell is unreachable for consistent slot layouts and is
//! reported as [`Error::PoisonCell`] when consulted. Cells with several
//! entries are resolved by the caller from the neighbouring slots.

use crate::error::{Error, Result};

type Cell = &'static [u8];

const X: Cell = &[];

/// Vertices in an introduce bag: rows 0–7 (bag table), columns 0–9 (status table).
pub const STAR_INT: [[Cell; 10]; 8] = [
    [&[0], X, X, X, X, X, X, X, X, X],
    [&[1], &[1], &[1], &[1], &[1], &[1], &[1], &[1], &[1], &[1]],
    [&[2], &[1], &[2], &[1], &[2], &[2], &[2], &[2], &[2], &[2]],
    [&[3], &[1], &[1], &[3], &[3], &[3], &[3], &[3], &[3], &[3]],
    [&[4], &[1], &[2], &[3], &[4], &[4], &[4], &[4], &[8], &[8]],
    [&[4, 5], &[1], &[2], &[3], &[4], &[5], &[4], &[5], &[8], &[9]],
    [&[4, 6], &[1], &[2], &[3], &[4, 6], &[4, 6], &[4, 6], &[4, 6], &[8], &[8]],
    [&[4, 5, 6, 7], &[1], &[2], &[3], &[4, 6], &[5, 7], &[4, 6], &[5, 7], &[8], &[9]],
];

/// Edges in an introduce bag: rows bag table, columns status table.
pub const AST_INT: [[Cell; 4]; 4] =
    [[&[0], X, X, X], [&[1], &[1], &[1], &[1]], [&[2], &[1], &[2], &[2]], [&[2, 3], &[1], &[2], &[3]]];

/// Vertices in a join bag.
pub const STAR_JOIN: [[Cell; 10]; 10] = [
    [&[0], X, X, X, X, X, X, X, X, X],
    [X, &[1], &[1], &[1], &[1], &[1], &[1], &[1], &[1], &[1]],
    [X, &[1], &[2], &[1], &[2], &[2], &[2], &[2], &[2], &[2]],
    [X, &[1], &[1], &[3], &[3], &[3], &[3], &[3], &[3], &[3]],
    [X, &[1], &[2], &[3], &[4], &[4], &[4], &[4], &[8], &[8]],
    [X, &[1], &[2], &[3], &[4], &[5], &[4], &[5], &[8], &[9]],
    [X, &[1], &[2], &[3], &[4], &[4], &[4, 6], &[4, 6], &[8], &[8]],
    [X, &[1], &[2], &[3], &[4], &[5], &[4, 6], &[5, 7], &[8], &[9]],
    [X, &[1], &[2], &[3], &[8], &[8], &[8], &[8], &[8], &[8]],
    [X, &[1], &[2], &[3], &[8], &[9], &[8], &[9], &[8], &[9]],
];

/// Edges in a join bag.
pub const AST_JOIN: [[Cell; 4]; 4] =
    [[&[0], X, X, X], [X, &[1], &[1], &[1]], [X, &[1], &[2], &[2]], [X, &[1], &[2], &[3]]];

fn lookup<const R: usize, const C: usize>(
    table: &[[Cell; C]; R],
    name: &'static str,
    row: u8,
    col: u8,
) -> Result<Cell> {
    let cell = table.get(row as usize).and_then(|r| r.get(col as usize)).copied().unwrap_or(X);
    if cell.is_empty() {
        Err(Error::PoisonCell { table: name, row, col })
    } else {
        Ok(cell)
    }
}

pub fn star_int(btable_state: u8, stable_state: u8) -> Result<&'static [u8]> {
    lookup(&STAR_INT, "star_int", btable_state, stable_state)
}

pub fn ast_int(btable_state: u8, stable_state: u8) -> Result<&'static [u8]> {
    lookup(&AST_INT, "ast_int", btable_state, stable_state)
}

pub fn star_join(a: u8, b: u8) -> Result<&'static [u8]> {
    lookup(&STAR_JOIN, "star_join", a, b)
}

pub fn ast_join(a: u8, b: u8) -> Result<&'static [u8]> {
    lookup(&AST_JOIN, "ast_join", a, b)
}
