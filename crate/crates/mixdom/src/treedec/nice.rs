use super::TreeDecomposition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BagKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceBag {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub kind: BagKind,
    pub children: Vec<usize>,
    pub parent: Option<usize>,
}

/// A very nice tree decomposition. Bags are stored in postorder (children
/// before parents, left subtree first) with the root last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    vertex_count: usize,
    bags: Vec<NiceBag>,
}

impl NiceTreeDecomposition {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn bags(&self) -> &[NiceBag] {
        &self.bags
    }

    pub fn bag(&self, id: usize) -> &NiceBag {
        &self.bags[id]
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn root(&self) -> usize {
        self.bags.len() - 1
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.vertices.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn join_count(&self) -> usize {
        self.bags.iter().filter(|b| b.kind == BagKind::Join).count()
    }

    /// The underlying plain tree decomposition (same bag ids, same root).
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.bags.iter().map(|b| b.vertices.clone()).collect();
        let edges = self.bags.iter().enumerate().filter_map(|(i, b)| b.parent.map(|p| (i, p))).collect();
        TreeDecomposition::new(self.vertex_count, bags, edges, self.root())
    }

    /// Checks the structural rules of a very nice decomposition: leaves are
    /// singletons, introduce/forget bags differ from their only child by one
    /// vertex, joins have two children with equal bags, links are mutual and
    /// children precede parents. Returns a description of every breach.
    pub fn check_invariants(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.bags.is_empty() {
            out.push("no bags".to_string());
            return out;
        }
        for (i, b) in self.bags.iter().enumerate() {
            let nb = i + 1;
            if !b.vertices.windows(2).all(|w| w[0] < w[1]) {
                out.push(format!("bag {nb}: vertices not strictly sorted"));
            }
            for &c in &b.children {
                if c >= i {
                    out.push(format!("bag {nb}: child {} does not precede it", c + 1));
                } else if self.bags[c].parent != Some(i) {
                    out.push(format!("bag {nb}: child {} does not point back", c + 1));
                }
            }
            match b.parent {
                None if i != self.root() => out.push(format!("bag {nb}: no parent but not the root")),
                Some(_) if i == self.root() => out.push(format!("bag {nb}: root has a parent")),
                Some(p) if p >= self.bags.len() || !self.bags[p].children.contains(&i) => {
                    out.push(format!("bag {nb}: parent link not mirrored"))
                }
                _ => {}
            }
            let child = |k: usize| &self.bags[b.children[k]].vertices;
            match b.kind {
                BagKind::Leaf => {
                    if !b.children.is_empty() || b.vertices.len() != 1 {
                        out.push(format!("bag {nb}: leaf must be a childless singleton"));
                    }
                }
                BagKind::Introduce(v) | BagKind::Forget(v) => {
                    if b.children.len() != 1 {
                        out.push(format!("bag {nb}: needs exactly one child"));
                        continue;
                    }
                    let (big, small) = match b.kind {
                        BagKind::Introduce(_) => (&b.vertices, child(0)),
                        _ => (child(0), &b.vertices),
                    };
                    let mut expected = small.clone();
                    expected.push(v);
                    expected.sort_unstable();
                    if small.contains(&v) || &expected != big {
                        out.push(format!("bag {nb}: {:?} of vertex {} does not match its child", b.kind, v + 1));
                    }
                }
                BagKind::Join => {
                    if b.children.len() != 2 || child(0) != &b.vertices || child(1) != &b.vertices {
                        out.push(format!("bag {nb}: join needs two children with identical bags"));
                    }
                }
            }
        }
        out
    }
}

struct Node {
    vertices: Vec<usize>,
    kind: BagKind,
    children: Vec<usize>,
}

struct Builder {
    nodes: Vec<Node>,
}

impl Builder {
    fn push(&mut self, vertices: Vec<usize>, kind: BagKind, children: Vec<usize>) -> usize {
        self.nodes.push(Node { vertices, kind, children });
        self.nodes.len() - 1
    }

    /// Leaf holding the smallest vertex, then introduces in ascending order.
    fn leaf_chain(&mut self, target: &[usize]) -> usize {
        let mut top = self.push(vec![target[0]], BagKind::Leaf, Vec::new());
        for k in 1..target.len() {
            top = self.push(target[..=k].to_vec(), BagKind::Introduce(target[k]), vec![top]);
        }
        top
    }

    /// Forgets (ascending) then introduces (ascending) from `top` up to `target`.
    fn chain(&mut self, mut top: usize, target: &[usize]) -> usize {
        let start = self.nodes[top].vertices.clone();
        let mut current = start.clone();
        for &v in start.iter().filter(|v| target.binary_search(v).is_err()) {
            current.retain(|&x| x != v);
            top = self.push(current.clone(), BagKind::Forget(v), vec![top]);
        }
        for &v in target.iter().filter(|v| start.binary_search(v).is_err()) {
            let at = current.binary_search(&v).unwrap_err();
            current.insert(at, v);
            top = self.push(current.clone(), BagKind::Introduce(v), vec![top]);
        }
        top
    }
}

/// Converts a tree decomposition into a very nice one of the same width.
///
/// The input's root bag stays on top; children are visited in ascending bag
/// order, several children are combined by left-deep joins, and a final run
/// of forgets leaves a root holding only its smallest vertex. Bags that only
/// arise between disconnected components may be empty.
pub fn make_very_nice(td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    if td.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let k = td.bags().len();
    if td.root() >= k {
        return Err(Error::InvalidDecomposition("root bag does not exist".into()));
    }
    if td.tree_edges().len() + 1 != k {
        return Err(Error::InvalidDecomposition("bag graph is not a tree".into()));
    }
    let adj = td.tree_adjacency();

    // Iterative DFS from the root giving a parent-before-children order.
    let mut order = Vec::with_capacity(k);
    let mut tree_parent = vec![usize::MAX; k];
    let mut visited = vec![false; k];
    let mut stack = vec![td.root()];
    visited[td.root()] = true;
    while let Some(t) = stack.pop() {
        order.push(t);
        for &c in &adj[t] {
            if !visited[c] {
                visited[c] = true;
                tree_parent[c] = t;
                stack.push(c);
            }
        }
    }
    if order.len() != k {
        return Err(Error::InvalidDecomposition("bag graph is not connected".into()));
    }

    let mut b = Builder { nodes: Vec::new() };
    let mut top: Vec<Option<usize>> = vec![None; k];
    for &t in order.iter().rev() {
        let target = &td.bags()[t];
        let child_tops: Vec<usize> = adj[t].iter().filter(|&&c| tree_parent[c] == t).filter_map(|&c| top[c]).collect();
        top[t] = match child_tops.len() {
            0 if target.is_empty() => None,
            0 => Some(b.leaf_chain(target)),
            _ => {
                let mut chains = child_tops.into_iter().map(|c| b.chain(c, target)).collect::<Vec<_>>().into_iter();
                let first = chains.next().unwrap();
                Some(chains.fold(first, |acc, c| b.push(target.clone(), BagKind::Join, vec![acc, c])))
            }
        };
    }

    let mut root = top[td.root()].ok_or_else(|| Error::InvalidDecomposition("all bags are empty".into()))?;
    while b.nodes[root].vertices.is_empty() && matches!(b.nodes[root].kind, BagKind::Forget(_)) {
        root = b.nodes[root].children[0];
    }
    let mut current = b.nodes[root].vertices.clone();
    while current.len() > 1 {
        let v = current.remove(1);
        root = b.push(current.clone(), BagKind::Forget(v), vec![root]);
    }

    // Renumber in postorder, left child first.
    let mut post = Vec::with_capacity(b.nodes.len());
    let mut stack = vec![(root, false)];
    while let Some((x, expanded)) = stack.pop() {
        if expanded {
            post.push(x);
        } else {
            stack.push((x, true));
            for &c in b.nodes[x].children.iter().rev() {
                stack.push((c, false));
            }
        }
    }
    let mut new_id = vec![usize::MAX; b.nodes.len()];
    for (i, &x) in post.iter().enumerate() {
        new_id[x] = i;
    }
    let mut bags: Vec<NiceBag> = post
        .iter()
        .map(|&x| {
            let n = &b.nodes[x];
            NiceBag {
                vertices: n.vertices.clone(),
                kind: n.kind,
                children: n.children.iter().map(|&c| new_id[c]).collect(),
                parent: None,
            }
        })
        .collect();
    for i in 0..bags.len() {
        for c in bags[i].children.clone() {
            bags[c].parent = Some(i);
        }
    }
    Ok(NiceTreeDecomposition { vertex_count: td.vertex_count(), bags })
}

/// Bag ids in postorder (descendants before ancestors, leftmost leaf first,
/// root last).
pub fn postorder_traversal(ntd: &NiceTreeDecomposition) -> Vec<usize> {
    let mut out = Vec::with_capacity(ntd.len());
    if ntd.is_empty() {
        return out;
    }
    let mut stack = vec![(ntd.root(), false)];
    while let Some((x, expanded)) = stack.pop() {
        if expanded {
            out.push(x);
        } else {
            stack.push((x, true));
            for &c in ntd.bag(x).children.iter().rev() {
                stack.push((c, false));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::treedec::{min_fill_decompose, validate_td};

    fn check(g: &Graph, td: &TreeDecomposition) -> NiceTreeDecomposition {
        let ntd = make_very_nice(td).unwrap();
        assert!(ntd.check_invariants().is_empty(), "{:?}", ntd.check_invariants());
        assert!(validate_td(g, &ntd.to_tree_decomposition()).is_empty());
        assert_eq!(ntd.width(), td.width());
        assert_eq!(ntd.bag(ntd.root()).vertices.len(), 1);
        ntd
    }

    #[test]
    fn single_vertex_is_one_leaf() {
        let g = Graph::new(1, &[]).unwrap();
        let ntd = check(&g, &min_fill_decompose(&g));
        assert_eq!(ntd.len(), 1);
        assert_eq!(ntd.bag(0).kind, BagKind::Leaf);
        assert_eq!(postorder_traversal(&ntd), vec![0]);
    }

    #[test]
    fn path_on_three_vertices() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let ntd = check(&g, &min_fill_decompose(&g));
        let leaves = ntd.bags().iter().filter(|b| b.kind == BagKind::Leaf).count();
        assert!(leaves <= 2);
        assert_eq!(ntd.join_count() > 0, leaves == 2);
    }

    #[test]
    fn empty_graph_is_rejected() {
        let td = TreeDecomposition::new(0, vec![], vec![], 0);
        assert_eq!(make_very_nice(&td), Err(Error::EmptyGraph));
    }

    #[test]
    fn isolated_vertices_pass_through_empty_bags() {
        let g = Graph::new(3, &[]).unwrap();
        let ntd = check(&g, &min_fill_decompose(&g));
        assert_eq!(ntd.width(), 0);
    }

    #[test]
    fn star_needs_joins() {
        let edges: Vec<_> = (1..6).map(|v| (0, v)).collect();
        let g = Graph::new(6, &edges).unwrap();
        let ntd = check(&g, &min_fill_decompose(&g));
        assert_eq!(ntd.join_count(), 3);
        let order = postorder_traversal(&ntd);
        assert_eq!(order, (0..ntd.len()).collect::<Vec<_>>());
    }
}
