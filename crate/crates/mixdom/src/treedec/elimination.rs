use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use super::TreeDecomposition;
use crate::graph::Graph;

/// Number of missing edges among `nbrs`, counting stops once it exceeds `cap`.
fn fill_in(adj: &[FxHashSet<usize>], nbrs: &[usize], cap: usize) -> usize {
    let mut fill = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !adj[a].contains(&b) {
                fill += 1;
                if fill > cap {
                    return fill;
                }
            }
        }
    }
    fill
}

/// Min-fill elimination ordering with min-degree as the first tie-breaker.
/// Remaining ties go to the lowest vertex id, or to a seeded random choice.
pub fn min_fill_order(g: &Graph, seed: Option<u64>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut adj: Vec<FxHashSet<usize>> = (0..n).map(|v| g.neighbors(v).unwrap().iter().copied().collect()).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut order = Vec::with_capacity(n);

    while !alive.is_empty() {
        // Scanning low-degree vertices first keeps the fill cap tight.
        alive.sort_unstable_by_key(|&v| (adj[v].len(), v));
        let mut best = (usize::MAX, usize::MAX);
        let mut ties = Vec::new();
        for &v in &alive {
            let nbrs: Vec<usize> = adj[v].iter().copied().collect();
            let fill = fill_in(&adj, &nbrs, best.0);
            let key = (fill, nbrs.len());
            if key < best {
                best = key;
                ties.clear();
            }
            if key == best {
                ties.push(v);
            }
        }
        let v = match rng.as_mut() {
            Some(r) => *ties.choose(r).expect("at least one candidate"),
            None => *ties.iter().min().expect("at least one candidate"),
        };

        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();
        alive.retain(|&x| x != v);
        order.push(v);
    }
    order
}

/// Tree decomposition from the min-fill ordering (ties by lowest id).
pub fn min_fill_decompose(g: &Graph) -> TreeDecomposition {
    decompose_along(g, &min_fill_order(g, None))
}

/// As [`min_fill_decompose`] but with ties broken by a seeded random choice.
pub fn min_fill_decompose_seeded(g: &Graph, seed: u64) -> TreeDecomposition {
    decompose_along(g, &min_fill_order(g, Some(seed)))
}

/// Builds the decomposition induced by an elimination ordering: vertex `v`
/// gets the bag `{v} ∪ N⁺(v)` and hangs below the bag of its earliest
/// eliminated higher neighbour. Bags contained in a tree neighbour are merged
/// away. The root is the last bag.
pub(crate) fn decompose_along(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.vertex_count();
    if n == 0 {
        return TreeDecomposition::new(0, Vec::new(), Vec::new(), 0);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    let mut adj: Vec<FxHashSet<usize>> = (0..n).map(|v| g.neighbors(v).unwrap().iter().copied().collect()).collect();
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut parent: Vec<Option<usize>> = Vec::with_capacity(n);
    for &v in order {
        let higher: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in higher.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &higher[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        parent.push(higher.iter().map(|&u| pos[u]).min());
        let mut bag = higher;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    // Chain the components: every component root hangs below the last bag.
    let last = n - 1;
    for (i, p) in parent.iter_mut().enumerate() {
        if p.is_none() && i != last {
            *p = Some(last);
        }
    }

    // Merge bags into tree neighbours that contain them. Children come before
    // parents in elimination order, so one pass suffices.
    let mut removed = vec![false; n];
    for i in 0..last {
        let p = parent[i].expect("non-root bag has a parent");
        let contained_in_parent = is_subset(&bags[i], &bags[p]);
        if !contained_in_parent && !is_subset(&bags[p], &bags[i]) {
            continue;
        }
        if !contained_in_parent {
            bags[p] = std::mem::take(&mut bags[i]);
        }
        removed[i] = true;
        for q in parent.iter_mut().take(i) {
            if *q == Some(i) {
                *q = Some(p);
            }
        }
    }

    let mut index = vec![usize::MAX; n];
    let mut kept = Vec::new();
    for i in 0..n {
        if !removed[i] {
            index[i] = kept.len();
            kept.push(std::mem::take(&mut bags[i]));
        }
    }
    let edges = (0..last).filter(|&i| !removed[i]).map(|i| (index[i], index[parent[i].unwrap()])).collect();
    let root = kept.len() - 1;
    TreeDecomposition::new(n, kept, edges, root)
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedec::validate_td;

    #[test]
    fn tree_has_width_one() {
        let g = Graph::new(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let td = min_fill_decompose(&g);
        assert!(validate_td(&g, &td).is_empty());
        assert_eq!(td.width(), 1);
        assert_eq!(td.bags().len(), 6);
    }

    #[test]
    fn clique_has_width_three() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let td = min_fill_decompose(&g);
        assert!(validate_td(&g, &td).is_empty());
        assert_eq!(td.width(), 3);
        assert_eq!(td.bags().len(), 1);
    }

    #[test]
    fn star_eliminates_leaves_first() {
        let edges: Vec<_> = (1..50).map(|v| (0, v)).collect();
        let g = Graph::new(50, &edges).unwrap();
        let order = min_fill_order(&g, None);
        assert_eq!(order[0], 1);
        assert!(order[..48].iter().all(|&v| v != 0));
    }

    #[test]
    fn disconnected_graph_is_chained() {
        let g = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        let td = min_fill_decompose(&g);
        assert!(validate_td(&g, &td).is_empty());
        assert_eq!(td.width(), 1);
    }

    #[test]
    fn seeded_orders_are_valid_and_reproducible() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let a = min_fill_decompose_seeded(&g, 7);
        assert_eq!(a, min_fill_decompose_seeded(&g, 7));
        assert!(validate_td(&g, &a).is_empty());
        assert_eq!(a.width(), 2);
    }
}
