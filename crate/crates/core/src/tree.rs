//! Host trees and the tree-side primitives: paths, rooted subtrees,
//! separators, leaf-balanced paths, mmf, and the Helly intersection point.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A tree on dense 0-based node ids (connected, acyclic, at least one node).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostTree {
    adj: Vec<BTreeSet<usize>>,
}

impl HostTree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("no nodes".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!("{} nodes need {} edges, got {}", n, n - 1, edges.len())));
        }
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NotATree(format!("node {} out of range", u.max(v))));
            }
            if u == v || !adj[u].insert(v) {
                return Err(Error::NotATree("self-loop or repeated edge".into()));
            }
            adj[v].insert(u);
        }
        let tree = HostTree { adj };
        if !tree.connected() {
            return Err(Error::NotATree("disconnected".into()));
        }
        Ok(tree)
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Nodes of degree 1.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.adj.len()).filter(|&v| self.adj[v].len() == 1).collect()
    }

    fn connected(&self) -> bool {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// The unique a-b path.
    pub fn path_between(&self, a: usize, b: usize) -> TreePath {
        let mut parent = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::from([a]);
        parent[a] = a;
        while let Some(u) = queue.pop_front() {
            if u == b {
                break;
            }
            for &v in &self.adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut nodes = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            nodes.push(cur);
        }
        nodes.reverse();
        TreePath { nodes }
    }

    /// True when the node set induces a connected subtree.
    pub fn is_subtree(&self, nodes: &BTreeSet<usize>) -> bool {
        let Some(&start) = nodes.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if nodes.contains(&v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.len() == nodes.len()
    }
}

/// A path of host nodes: consecutive nodes adjacent, all distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreePath {
    nodes: Vec<usize>,
}

impl TreePath {
    pub fn new(host: &HostTree, nodes: Vec<usize>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::NotATree("empty tree path".into()));
        }
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        if set.len() != nodes.len() {
            return Err(Error::NotATree("repeated node in tree path".into()));
        }
        for w in nodes.windows(2) {
            if !host.neighbors(w[0]).contains(&w[1]) {
                return Err(Error::NotATree(format!("nodes {} and {} not adjacent", w[0], w[1])));
            }
        }
        Ok(TreePath { nodes })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.nodes.contains(&v)
    }

    pub(crate) fn from_nodes_unchecked(nodes: Vec<usize>) -> Self {
        TreePath { nodes }
    }
}

/// Preorder of the subtree of `nodes` rooted at `root`, with parents.
/// Children are visited in ascending id order.
pub(crate) fn rooted_order(
    host: &HostTree,
    nodes: &BTreeSet<usize>,
    root: usize,
) -> (Vec<usize>, BTreeMap<usize, usize>) {
    debug_assert!(nodes.contains(&root));
    let mut order = Vec::with_capacity(nodes.len());
    let mut parent = BTreeMap::new();
    let mut stack = vec![root];
    parent.insert(root, root);
    while let Some(u) = stack.pop() {
        order.push(u);
        // push in reverse so smaller ids pop first
        for &v in host.neighbors(u).iter().rev() {
            if nodes.contains(&v) && !parent.contains_key(&v) {
                parent.insert(v, u);
                stack.push(v);
            }
        }
    }
    debug_assert_eq!(order.len(), nodes.len(), "nodes must induce a subtree containing root");
    (order, parent)
}

/// Descendant subtree of `c` within the subtree of `nodes` rooted so that
/// `avoid` is c's parent side: every node reachable from `c` without `avoid`.
pub(crate) fn hanging_subtree(host: &HostTree, nodes: &BTreeSet<usize>, c: usize, avoid: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([c]);
    let mut queue = VecDeque::from([c]);
    while let Some(u) = queue.pop_front() {
        for &v in host.neighbors(u) {
            if v != avoid && nodes.contains(&v) && seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// A component hanging off a cut path: rooted at `root`, attached to the
/// path node `anchor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub root: usize,
    pub anchor: usize,
    pub nodes: BTreeSet<usize>,
}

/// Components of (subtree, rooted at q[0]) minus the nodes of the subpath
/// q[lo..hi]. One branch per neighbor of a subpath node that is neither on
/// the full path q nor separated from it by a path edge.
pub(crate) fn branches_off(
    host: &HostTree,
    nodes: &BTreeSet<usize>,
    q: &[usize],
    lo: usize,
    hi: usize,
) -> Vec<Branch> {
    let on_q: BTreeSet<usize> = q.iter().copied().collect();
    let mut out = Vec::new();
    for &y in &q[lo..hi] {
        for &c in host.neighbors(y) {
            if nodes.contains(&c) && !on_q.contains(&c) {
                let sub = hanging_subtree(host, nodes, c, y);
                debug_assert!(sub.iter().all(|v| !on_q.contains(v)));
                out.push(Branch { root: c, anchor: y, nodes: sub });
            }
        }
    }
    out
}

/// Map from node to the index (position in q) of its component of
/// X - E(Q), where X is the subtree `nodes` and Q the path `q`.
pub(crate) fn path_edge_components(host: &HostTree, nodes: &BTreeSet<usize>, q: &[usize]) -> BTreeMap<usize, usize> {
    let mut comp = BTreeMap::new();
    for (p, &y) in q.iter().enumerate() {
        comp.insert(y, p);
    }
    for (p, &y) in q.iter().enumerate() {
        // flood from y without crossing path edges
        let mut queue = VecDeque::from([y]);
        while let Some(u) = queue.pop_front() {
            for &v in host.neighbors(u) {
                if !nodes.contains(&v) || comp.contains_key(&v) {
                    continue;
                }
                let crosses = (u == y) && q.iter().any(|&w| w == v);
                if crosses {
                    continue;
                }
                comp.insert(v, p);
                queue.push_back(v);
            }
        }
    }
    comp
}

/// A node whose removal leaves components of size at most |V|/2.
/// Ties broken by smallest node id.
pub fn jordan_separator(host: &HostTree, nodes: &BTreeSet<usize>) -> usize {
    let n = nodes.len();
    assert!(n > 0, "separator of an empty tree");
    let root = *nodes.iter().next().unwrap();
    let (order, parent) = rooted_order(host, nodes, root);
    let mut size: BTreeMap<usize, usize> = nodes.iter().map(|&v| (v, 1)).collect();
    for &v in order.iter().rev() {
        if v != root {
            *size.get_mut(&parent[&v]).unwrap() += size[&v];
        }
    }
    let mut best = usize::MAX;
    for &v in nodes {
        let mut largest = n - size[&v];
        for &c in host.neighbors(v) {
            if nodes.contains(&c) && parent.get(&c) == Some(&v) {
                largest = largest.max(size[&c]);
            }
        }
        if 2 * largest <= n {
            best = best.min(v);
        }
    }
    debug_assert_ne!(best, usize::MAX, "every tree has a centroid");
    best
}

/// The root-anchored path of nodes whose subtree holds more than half of the
/// childless nodes. Components of the remainder each keep at most half.
pub fn leaf_balanced_path(host: &HostTree, nodes: &BTreeSet<usize>, root: usize) -> TreePath {
    let (order, parent) = rooted_order(host, nodes, root);
    let mut childless: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in order.iter().rev() {
        let kids: Vec<usize> = host
            .neighbors(v)
            .iter()
            .copied()
            .filter(|c| nodes.contains(c) && parent.get(c) == Some(&v) && *c != v)
            .collect();
        let count = if kids.is_empty() { 1 } else { kids.iter().map(|c| childless[c]).sum() };
        childless.insert(v, count);
    }
    let k = childless[&root];
    let mut path = vec![root];
    let mut cur = root;
    loop {
        let next = host
            .neighbors(cur)
            .iter()
            .copied()
            .find(|c| nodes.contains(c) && parent.get(c) == Some(&cur) && 2 * childless[c] > k);
        match next {
            Some(c) => {
                path.push(c);
                cur = c;
            }
            None => break,
        }
    }
    TreePath::from_nodes_unchecked(path)
}

/// Maximum over edges e of the smaller per-side count of leaves of the tree
/// in the two components of T - e. Undefined on single-node trees.
pub fn mmf(host: &HostTree) -> Result<usize> {
    let n = host.node_count();
    if n < 2 {
        return Err(Error::TooSmall("mmf needs at least two nodes".into()));
    }
    let leaves: BTreeSet<usize> = host.leaves().into_iter().collect();
    let all: BTreeSet<usize> = (0..n).collect();
    let mut best = 0;
    for (u, v) in host.edges() {
        let side_u = hanging_subtree(host, &all, u, v);
        let leaves_u = side_u.intersection(&leaves).count();
        let leaves_v = leaves.len() - leaves_u;
        best = best.max(leaves_u.min(leaves_v));
    }
    Ok(best)
}

/// A node common to every subtree in a pairwise-intersecting family.
/// Returns the smallest such node id.
pub fn helly_point(host: &HostTree, subtrees: &[BTreeSet<usize>]) -> Result<usize> {
    debug_assert!(subtrees.iter().all(|s| host.is_subtree(s)));
    let mut common: BTreeSet<usize> = (0..host.node_count()).collect();
    for s in subtrees {
        common = common.intersection(s).copied().collect();
        if common.is_empty() {
            break;
        }
    }
    if let Some(&x) = common.iter().next() {
        return Ok(x);
    }
    for i in 0..subtrees.len() {
        for j in i + 1..subtrees.len() {
            if subtrees[i].is_disjoint(&subtrees[j]) {
                return Err(Error::NotPairwiseIntersecting(i, j));
            }
        }
    }
    unreachable!("pairwise intersecting subtrees of a tree share a node");
}

/// True when the tree is a path.
pub fn is_path(host: &HostTree) -> bool {
    (0..host.node_count()).all(|v| host.degree(v) <= 2)
}

/// True when some path of the tree contains every node of degree >= 3,
/// i.e. the tree is a subdivision of a caterpillar.
pub fn is_subdivided_caterpillar(host: &HostTree) -> bool {
    let branch: BTreeSet<usize> = (0..host.node_count()).filter(|&v| host.degree(v) >= 3).collect();
    if branch.len() <= 1 {
        return true;
    }
    // minimal subtree spanning the branch nodes: prune leaves outside it
    let mut kept: BTreeSet<usize> = (0..host.node_count()).collect();
    let mut deg: Vec<usize> = (0..host.node_count()).map(|v| host.degree(v)).collect();
    let mut queue: VecDeque<usize> =
        (0..host.node_count()).filter(|&v| deg[v] == 1 && !branch.contains(&v)).collect();
    while let Some(v) = queue.pop_front() {
        kept.remove(&v);
        for &u in host.neighbors(v) {
            if kept.contains(&u) {
                deg[u] -= 1;
                if deg[u] == 1 && !branch.contains(&u) {
                    queue.push_back(u);
                }
            }
        }
    }
    kept.iter().all(|&v| {
        host.neighbors(v).iter().filter(|u| kept.contains(u)).count() <= 2
    })
}

// deterministic tree families used by the corpus and the generators

pub fn path_tree(n: usize) -> HostTree {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    HostTree::from_edges(n, &edges).unwrap()
}

pub fn star_tree(legs: usize) -> HostTree {
    let edges: Vec<_> = (1..=legs).map(|v| (0, v)).collect();
    HostTree::from_edges(legs + 1, &edges).unwrap()
}

/// Star with `legs` legs, each subdivided into `len` edges.
pub fn spider_tree(legs: usize, len: usize) -> HostTree {
    assert!(legs >= 1 && len >= 1);
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    HostTree::from_edges(next, &edges).unwrap()
}

/// Spine path of `spine` nodes with `leg_len`-edge legs hanging off each
/// spine node. `leg_len = 1` is a caterpillar; larger values subdivide legs.
pub fn caterpillar_tree(spine: usize, legs_per_node: usize, leg_len: usize) -> HostTree {
    assert!(spine >= 1);
    let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
    let mut next = spine;
    for s in 0..spine {
        for _ in 0..legs_per_node {
            let mut prev = s;
            for _ in 0..leg_len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    HostTree::from_edges(next, &edges).unwrap()
}

/// Complete binary tree of the given height (height 0 is a single node).
pub fn balanced_binary_tree(height: u32) -> HostTree {
    let n = (1usize << (height + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    HostTree::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_trees() {
        assert!(HostTree::from_edges(0, &[]).is_err());
        assert!(HostTree::from_edges(3, &[(0, 1)]).is_err());
        assert!(HostTree::from_edges(3, &[(0, 1), (0, 1)]).is_err());
        assert!(HostTree::from_edges(4, &[(0, 1), (2, 3), (0, 1)]).is_err());
        assert!(HostTree::from_edges(3, &[(0, 1), (1, 2)]).is_ok());
    }

    #[test]
    fn separator_of_five_path_is_middle() {
        let t = path_tree(5);
        let all: BTreeSet<usize> = (0..5).collect();
        assert_eq!(jordan_separator(&t, &all), 2);
    }

    #[test]
    fn separator_of_single_node() {
        let t = path_tree(1);
        let all: BTreeSet<usize> = [0].into();
        assert_eq!(jordan_separator(&t, &all), 0);
    }

    #[test]
    fn separator_of_balanced_binary_is_root() {
        let t = balanced_binary_tree(2);
        let all: BTreeSet<usize> = (0..7).collect();
        // scanning all candidates: only the root splits 7 nodes into 3+3
        for v in 1..7 {
            let comps_ok = {
                let mut largest = 0;
                for &c in t.neighbors(v) {
                    let side = hanging_subtree(&t, &all, c, v);
                    largest = largest.max(side.len());
                }
                2 * largest <= 7
            };
            assert!(!comps_ok, "node {v} should not be a separator");
        }
        assert_eq!(jordan_separator(&t, &all), 0);
    }

    #[test]
    fn separator_bound_holds_everywhere() {
        for t in [path_tree(9), star_tree(6), balanced_binary_tree(3), spider_tree(3, 4)] {
            let all: BTreeSet<usize> = (0..t.node_count()).collect();
            let z = jordan_separator(&t, &all);
            for &c in t.neighbors(z) {
                let side = hanging_subtree(&t, &all, c, z);
                assert!(2 * side.len() <= t.node_count());
            }
        }
    }

    #[test]
    fn leaf_balanced_path_on_rooted_path() {
        let t = path_tree(4);
        let all: BTreeSet<usize> = (0..4).collect();
        let p = leaf_balanced_path(&t, &all, 0);
        assert_eq!(p.nodes(), &[0, 1, 2, 3]);
    }

    #[test]
    fn leaf_balanced_path_on_star_is_center() {
        let t = star_tree(4);
        let all: BTreeSet<usize> = (0..5).collect();
        let p = leaf_balanced_path(&t, &all, 0);
        assert_eq!(p.nodes(), &[0]);
    }

    #[test]
    fn leaf_balanced_path_on_binary_tree() {
        // k = 4 childless; children hold exactly 2 = k/2 each, so only the
        // root qualifies, and each remaining component keeps 2 <= k/2
        let t = balanced_binary_tree(2);
        let all: BTreeSet<usize> = (0..7).collect();
        let p = leaf_balanced_path(&t, &all, 0);
        assert_eq!(p.nodes(), &[0]);
        for &c in t.neighbors(0) {
            let side = hanging_subtree(&t, &all, c, 0);
            let childless = side.iter().filter(|&&v| t.degree(v) == 1).count();
            assert!(2 * childless <= 4);
        }
    }

    #[test]
    fn mmf_of_paths_and_stars_is_one() {
        assert_eq!(mmf(&path_tree(2)).unwrap(), 1);
        assert_eq!(mmf(&path_tree(7)).unwrap(), 1);
        assert_eq!(mmf(&star_tree(5)).unwrap(), 1);
        assert!(mmf(&path_tree(1)).is_err());
    }

    #[test]
    fn mmf_of_balanced_binary_tree() {
        // root edges split the 4 leaves 2/2, lower edges 1/3
        assert_eq!(mmf(&balanced_binary_tree(2)).unwrap(), 2);
    }

    #[test]
    fn mmf_never_exceeds_leaf_count() {
        for t in [path_tree(6), star_tree(4), balanced_binary_tree(3), caterpillar_tree(4, 2, 1)] {
            assert!(mmf(&t).unwrap() <= t.leaves().len());
        }
    }

    #[test]
    fn helly_point_basics() {
        let t = star_tree(3);
        let whole: BTreeSet<usize> = (0..4).collect();
        assert_eq!(helly_point(&t, &[whole.clone(), whole.clone()]).unwrap(), 0);

        let a: BTreeSet<usize> = [0, 1].into();
        let b: BTreeSet<usize> = [0, 2].into();
        let c: BTreeSet<usize> = [0, 3].into();
        assert_eq!(helly_point(&t, &[a.clone(), b.clone(), c]).unwrap(), 0);

        let d: BTreeSet<usize> = [2].into();
        assert_eq!(helly_point(&t, &[a, d]), Err(Error::NotPairwiseIntersecting(0, 1)));
    }

    #[test]
    fn descendants_structure() {
        let t = balanced_binary_tree(2);
        let all: BTreeSet<usize> = (0..7).collect();
        // path from root to leftmost leaf
        let q = t.path_between(0, 3);
        assert_eq!(q.nodes(), &[0, 1, 3]);
        let comp = path_edge_components(&t, &all, q.nodes());
        // root keeps the whole right subtree
        let root_side: BTreeSet<usize> = comp.iter().filter(|(_, &p)| p == 0).map(|(&v, _)| v).collect();
        assert_eq!(root_side, [0, 2, 5, 6].into());
        let mid_side: BTreeSet<usize> = comp.iter().filter(|(_, &p)| p == 1).map(|(&v, _)| v).collect();
        assert_eq!(mid_side, [1, 4].into());
    }

    #[test]
    fn caterpillar_recognition() {
        assert!(is_path(&path_tree(6)));
        assert!(!is_path(&star_tree(3)));
        assert!(is_subdivided_caterpillar(&path_tree(6)));
        assert!(is_subdivided_caterpillar(&star_tree(5)));
        assert!(is_subdivided_caterpillar(&spider_tree(4, 3)));
        assert!(is_subdivided_caterpillar(&caterpillar_tree(5, 2, 2)));
        assert!(is_subdivided_caterpillar(&balanced_binary_tree(2)));
        assert!(!is_subdivided_caterpillar(&balanced_binary_tree(3)));
    }
}
