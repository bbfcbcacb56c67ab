//! PACE-style text formats.
//!
//! `.gr`: optional `c` comment lines, a header `p tw <n> <m>`, then `m` lines
//! `u v` with 1-based vertex ids.
//!
//! `.td`: optional `c` comment lines, a header `s td <bags> <max bag size> <n>`,
//! one line `b <id> <v...>` per bag, then tree edges `i j` between bag ids.
//! All ids in files are 1-based; in memory they are 0-based.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treedec::TreeDecomposition;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn number(line: usize, field: &str) -> Result<usize> {
    field.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, got {field:?}")))
}

/// Converts a 1-based id to 0-based, checking `1..=count`.
fn one_based(line: usize, field: &str, count: usize, what: &str) -> Result<usize> {
    let x = number(line, field)?;
    if x == 0 || x > count {
        return Err(parse_err(line, format!("{what} {x} out of range 1..={count}")));
    }
    Ok(x - 1)
}

pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing \"p tw\" header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return Err(parse_err(hline, "malformed header, expected \"p tw <n> <m>\""));
    }
    let n = number(hline, header[2])?;
    let m = number(hline, header[3])?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, fields) in lines {
        if fields.len() != 2 {
            return Err(parse_err(line, "edge line must hold exactly two vertex ids"));
        }
        let u = one_based(line, fields[0], n, "vertex")?;
        let v = one_based(line, fields[1], n, "vertex")?;
        if u == v {
            return Err(parse_err(line, format!("self-loop on vertex {}", u + 1)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses a `.td` file. The last bag becomes the designated root.
pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing \"s td\" header"))?;
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return Err(parse_err(hline, "malformed header, expected \"s td <bags> <max bag size> <n>\""));
    }
    let bag_count = number(hline, header[2])?;
    let max_bag = number(hline, header[3])?;
    let n = number(hline, header[4])?;

    let mut bags: Vec<Option<Vec<usize>>> = vec![None; bag_count];
    let mut edges = Vec::new();
    for (line, fields) in lines {
        if fields[0] == "b" {
            if fields.len() < 2 {
                return Err(parse_err(line, "bag line without bag id"));
            }
            let id = one_based(line, fields[1], bag_count, "bag")?;
            if bags[id].is_some() {
                return Err(parse_err(line, format!("bag {} listed twice", id + 1)));
            }
            let mut bag = fields[2..].iter().map(|f| one_based(line, f, n, "vertex")).collect::<Result<Vec<_>>>()?;
            bag.sort_unstable();
            bag.dedup();
            bags[id] = Some(bag);
        } else {
            if fields.len() != 2 {
                return Err(parse_err(line, "tree edge line must hold exactly two bag ids"));
            }
            let i = one_based(line, fields[0], bag_count, "bag")?;
            let j = one_based(line, fields[1], bag_count, "bag")?;
            edges.push((i, j));
        }
    }

    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(hline, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let largest = bags.iter().map(Vec::len).max().unwrap_or(0);
    if largest != max_bag {
        return Err(parse_err(hline, format!("header declares bag size {max_bag}, largest bag has {largest}")));
    }
    let root = bag_count.saturating_sub(1);
    Ok(TreeDecomposition::new(n, bags, edges, root))
}

pub fn write_td(td: &TreeDecomposition) -> String {
    let largest = td.bags().iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bags().len(), largest, td.vertex_count());
    for (i, bag) in td.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(i, j) in td.tree_edges() {
        let _ = writeln!(out, "{} {}", i + 1, j + 1);
    }
    out
}
