use std::fmt::Write as _;

use super::state::{pair_index, StateTable};
use crate::treedec::{BagKind, NiceBag};

/// Header line of a trace section, with 1-based ids.
pub fn section_header(id: usize, bag: &NiceBag) -> String {
    let kind = match bag.kind {
        BagKind::Leaf => "leaf".to_string(),
        BagKind::Introduce(v) => format!("introduce {}", v + 1),
        BagKind::Forget(v) => format!("forget {}", v + 1),
        BagKind::Join => "join".to_string(),
    };
    let vertices: Vec<String> = bag.vertices.iter().map(|v| (v + 1).to_string()).collect();
    format!("bag {} {} [{}]", id + 1, kind, vertices.join(" "))
}

/// Vertex states, optional edge states, cost.
pub type TraceRow = (Vec<u8>, Option<Vec<u8>>, u32);

/// Renders rows as `v-states | e-states | cost`, padding vertex columns to
/// `width + 1` slots and edge columns to all slot pairs of such a bag. With
/// `edges` unset the edge block is left out (`v-states | cost`).
pub fn format_rows(width: usize, rows: &[TraceRow]) -> String {
    let slots = width + 1;
    let mut out = String::new();
    for (vs, es, cost) in rows {
        let mut vcols = vec![0u8; slots.max(vs.len())];
        vcols[..vs.len()].copy_from_slice(vs);
        let _ = write!(out, "{}", join(&vcols));
        if let Some(es) = es {
            let k = vs.len();
            let full = slots.max(k);
            let mut ecols = vec![0u8; full * (full - 1) / 2];
            let mut p = 0;
            for i in 0..k {
                for j in i + 1..k {
                    ecols[pair_index(full, i, j)] = es[p];
                    p += 1;
                }
            }
            let _ = write!(out, " | {}", join(&ecols));
        }
        let _ = writeln!(out, " | {cost}");
    }
    out
}

fn join(xs: &[u8]) -> String {
    xs.iter().map(u8::to_string).collect::<Vec<_>>().join(" ")
}

/// One trace section for a table of the nine-state program.
pub fn format_table(id: usize, bag: &NiceBag, table: &StateTable, width: usize) -> String {
    let rows: Vec<_> = table.summary().into_iter().map(|(v, e, c)| (v, Some(e), c)).collect();
    format!("{}\n{}", section_header(id, bag), format_rows(width, &rows))
}
