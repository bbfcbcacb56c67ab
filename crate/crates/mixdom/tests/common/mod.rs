#![allow(dead_code)]

use mixdom::format::{parse_gr, parse_td};
use mixdom::treedec::{
    make_very_nice, min_fill_decompose, postorder_traversal, NiceTreeDecomposition, TreeDecomposition,
};
use mixdom::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const SAMPLE_GR: &str = include_str!("../fixtures/sample.gr");
pub const SAMPLE_TD: &str = include_str!("../fixtures/sample.td");

/// The five-vertex sample graph and its twelve-bag very nice decomposition.
pub fn sample() -> (Graph, NiceTreeDecomposition) {
    let g = parse_gr(SAMPLE_GR).unwrap();
    let td = parse_td(SAMPLE_TD).unwrap();
    (g, make_very_nice(&td).unwrap())
}

pub fn sample_graph() -> Graph {
    parse_gr(SAMPLE_GR).unwrap()
}

/// Very nice min-fill decomposition and its postorder.
pub fn nice(g: &Graph) -> (NiceTreeDecomposition, Vec<usize>) {
    let ntd = make_very_nice(&min_fill_decompose(g)).unwrap();
    let order = postorder_traversal(&ntd);
    (ntd, order)
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Uniformly random recursive tree: vertex `i` hangs below a random earlier one.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// Random partial k-tree on `n > k` vertices together with the width-k
/// decomposition its construction implies. Each k-tree edge survives with
/// probability `keep`.
pub fn random_partial_ktree(rng: &mut ChaCha8Rng, n: usize, k: usize, keep: f64) -> (Graph, TreeDecomposition) {
    assert!(n > k);
    let mut edges = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    let mut bags = vec![(0..=k).collect::<Vec<_>>()];
    let mut tree_edges = Vec::new();
    // (k-clique, a bag containing it)
    let mut cliques: Vec<(Vec<usize>, usize)> = Vec::new();
    for skip in 0..=k {
        cliques.push(((0..=k).filter(|&x| x != skip).collect(), 0));
    }
    for v in k + 1..n {
        let (clique, host) = cliques.choose(rng).unwrap().clone();
        for &u in &clique {
            edges.push((u, v));
        }
        let id = bags.len();
        let mut bag = clique.clone();
        bag.push(v);
        bags.push(bag);
        tree_edges.push((host, id));
        for skip in 0..k {
            let mut c: Vec<usize> = clique.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
            c.push(v);
            cliques.push((c, id));
        }
    }
    let kept: Vec<_> = edges.into_iter().filter(|_| rng.gen_bool(keep)).collect();
    let g = Graph::new(n, &kept).unwrap();
    (g, TreeDecomposition::new(n, bags, tree_edges, 0))
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect::<Vec<_>>())
        .filter(|edges| connected(n, edges))
        .map(|edges| Graph::new(n, &edges).unwrap())
        .collect()
}
