//! Simple undirected graphs with dense 0-based vertex ids, plus the
//! connectivity and disjoint-path utilities the rest of the library builds on.
//!
//! Graphs are immutable after construction and store adjacency as sorted
//! sets, so every iteration order is reproducible.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow;

/// Simple undirected graph. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    /// Duplicate edges are merged; self-loops and out-of-range ids are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, in sorted order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn is_clique(&self, verts: &BTreeSet<usize>) -> bool {
        let vs: Vec<usize> = verts.iter().copied().collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !self.has_edge(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices reachable from `start`, skipping vertices in `removed`.
    pub fn reachable_without(&self, start: usize, removed: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        if removed.contains(&start) {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !removed.contains(&v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        let mut out = Vec::new();
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let comp = self.reachable_without(s, &BTreeSet::new());
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Single-vertex and empty graphs count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reachable_without(0, &BTreeSet::new()).len() == self.n
    }

    fn is_connected_without(&self, removed: &BTreeSet<usize>) -> bool {
        let remaining = self.n - removed.len();
        if remaining <= 1 {
            return true;
        }
        let start = (0..self.n).find(|v| !removed.contains(v)).unwrap();
        self.reachable_without(start, removed).len() == remaining
    }

    /// Induced subgraph on `verts`; returns the subgraph and the map from new
    /// ids back to the original vertex ids.
    pub fn induced(&self, verts: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let back: Vec<usize> = verts.iter().copied().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in back.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &back {
            for &w in &self.adj[v] {
                if v < w && verts.contains(&w) {
                    edges.push((index[v], index[w]));
                }
            }
        }
        (Graph::from_edges(back.len(), &edges).unwrap(), back)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Cycle 0-1-...-(n-1)-0; requires n >= 3.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Star with center 0 and leaves 1..=k.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Graph::from_edges(k + 1, &edges).unwrap()
    }
}

/// A path in a graph: ordered, distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPath {
    vertices: Vec<usize>,
}

impl VertexPath {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty".into()));
        }
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(Error::InvalidPath("repeated vertex".into()));
        }
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange(v));
            }
        }
        for w in vertices.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidPath(format!("{} and {} not adjacent", w[0], w[1])));
            }
        }
        Ok(VertexPath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }
}

/// A cycle in a graph: ordered, distinct vertices read cyclically, length >= 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCycle {
    vertices: Vec<usize>,
}

impl VertexCycle {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle("needs at least 3 vertices".into()));
        }
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        for i in 0..vertices.len() {
            let u = vertices[i];
            let v = vertices[(i + 1) % vertices.len()];
            if !g.has_edge(u, v) {
                return Err(Error::InvalidCycle(format!("{u} and {v} not adjacent")));
            }
        }
        Ok(VertexCycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Vertex connectivity of `g`, with the complete-graph convention
/// `kappa(K_n) = n - 1`. Disconnected and trivial graphs return 0.
///
/// Computed by unit-capacity max-flow over the split-vertex digraph,
/// minimized over all non-adjacent vertex pairs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 || n == 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1; // complete graph convention
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let k = flow::local_connectivity(g, u, v);
                best = best.min(k);
            }
        }
    }
    best
}

/// Brute-force vertex connectivity by the definition: maximum k such that
/// |V| > k and removal of any set smaller than k leaves the graph connected.
/// Intended as a test oracle for small graphs only.
pub fn vertex_connectivity_bruteforce(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    let verts: Vec<usize> = (0..n).collect();
    // find the smallest separating set size; if none, graph is complete
    for size in 0..n.saturating_sub(1) {
        let mut found_cut = false;
        for subset in subsets_of_size(&verts, size) {
            let removed: BTreeSet<usize> = subset.into_iter().collect();
            if !g.is_connected_without(&removed) {
                found_cut = true;
                break;
            }
        }
        if found_cut {
            return size;
        }
    }
    n - 1
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut cur, &mut out);
    out
}

/// `k` pairwise internally disjoint x-y paths, or `InsufficientConnectivity`
/// if fewer exist. Paths are recovered from a unit-capacity flow.
pub fn internally_disjoint_paths(g: &Graph, x: usize, y: usize, k: usize) -> Result<Vec<VertexPath>> {
    assert_ne!(x, y, "endpoints must differ");
    let raw = flow::disjoint_xy_paths(g, x, y, k);
    if raw.len() < k {
        return Err(Error::InsufficientConnectivity { want: k, found: raw.len() });
    }
    raw.into_iter().take(k).map(|p| VertexPath::new(g, p)).collect()
}

/// A maximum family of fully disjoint (S,T)-paths whose interiors avoid
/// S and T. The family has at least min(|S|, |T|, kappa(G)) members.
pub fn disjoint_set_paths(g: &Graph, s: &BTreeSet<usize>, t: &BTreeSet<usize>) -> Vec<VertexPath> {
    assert!(!s.is_empty() && !t.is_empty(), "S and T must be nonempty");
    let raw = flow::disjoint_set_paths(g, s, t);
    raw.into_iter()
        .map(|p| VertexPath::new(g, p).expect("flow decomposition yields valid paths"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_complete_graph() {
        assert_eq!(vertex_connectivity(&Graph::complete(4)), 3);
        assert_eq!(vertex_connectivity(&Graph::complete(1)), 0);
        assert_eq!(vertex_connectivity(&Graph::complete(2)), 1);
    }

    #[test]
    fn connectivity_path_has_cut_vertex() {
        assert_eq!(vertex_connectivity(&Graph::path(3)), 1);
    }

    #[test]
    fn connectivity_four_cycle() {
        // frozen via the brute-force oracle: all single deletions stay connected
        let c4 = Graph::cycle(4);
        assert_eq!(vertex_connectivity_bruteforce(&c4), 2);
        assert_eq!(vertex_connectivity(&c4), 2);
    }

    #[test]
    fn connectivity_empty_and_disconnected() {
        assert_eq!(vertex_connectivity(&Graph::from_edges(0, &[]).unwrap()), 0);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&two), 0);
    }

    #[test]
    fn connectivity_matches_bruteforce_on_small_graphs() {
        let graphs = vec![
            Graph::path(5),
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::star(4),
            Graph::complete(5),
            Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(vertex_connectivity(g), vertex_connectivity_bruteforce(g));
        }
    }

    #[test]
    fn menger_paths_on_cycle_opposite_corners() {
        let c4 = Graph::cycle(4);
        let paths = internally_disjoint_paths(&c4, 0, 2, 2).unwrap();
        assert_eq!(paths.len(), 2);
        for p in &paths {
            assert_eq!(p.len(), 3);
            assert_eq!(p.endpoints(), (0, 2));
        }
        check_internally_disjoint(&paths, 0, 2);
    }

    #[test]
    fn menger_paths_complete_graph() {
        let k4 = Graph::complete(4);
        let paths = internally_disjoint_paths(&k4, 0, 3, 3).unwrap();
        assert_eq!(paths.len(), 3);
        check_internally_disjoint(&paths, 0, 3);
        let mut lens: Vec<usize> = paths.iter().map(|p| p.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![2, 3, 3]);
    }

    #[test]
    fn menger_paths_insufficient() {
        let p3 = Graph::path(3);
        let err = internally_disjoint_paths(&p3, 0, 2, 2).unwrap_err();
        assert_eq!(err, Error::InsufficientConnectivity { want: 2, found: 1 });
    }

    fn check_internally_disjoint(paths: &[VertexPath], x: usize, y: usize) {
        for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                let a: BTreeSet<usize> = paths[i].vertices().iter().copied().collect();
                let b: BTreeSet<usize> = paths[j].vertices().iter().copied().collect();
                let common: Vec<usize> = a.intersection(&b).copied().collect();
                assert_eq!(common, vec![x, y].into_iter().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn set_paths_adjacent_singletons() {
        let k4 = Graph::complete(4);
        let s: BTreeSet<usize> = [0].into();
        let t: BTreeSet<usize> = [1].into();
        let paths = disjoint_set_paths(&k4, &s, &t);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].vertices(), &[0, 1]);
    }

    #[test]
    fn set_paths_opposite_edges_of_hexagon() {
        let c6 = Graph::cycle(6);
        let s: BTreeSet<usize> = [0, 1].into();
        let t: BTreeSet<usize> = [3, 4].into();
        let paths = disjoint_set_paths(&c6, &s, &t);
        assert_eq!(paths.len(), 2);
        let mut used = BTreeSet::new();
        for p in &paths {
            let (a, b) = p.endpoints();
            assert!(s.contains(&a) && t.contains(&b) || s.contains(&b) && t.contains(&a));
            for &v in p.interior() {
                assert!(!s.contains(&v) && !t.contains(&v));
            }
            for &v in p.vertices() {
                assert!(used.insert(v), "paths share vertex {v}");
            }
        }
    }

    #[test]
    fn set_paths_disconnected_components() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s: BTreeSet<usize> = [0, 2].into();
        let t: BTreeSet<usize> = [1, 3].into();
        let paths = disjoint_set_paths(&g, &s, &t);
        // one path inside each component; matches the flow value even though
        // kappa(G) = 0
        assert_eq!(paths.len(), 2);
    }

    #[test]
    fn path_type_rejects_bad_input() {
        let g = Graph::path(4);
        assert!(VertexPath::new(&g, vec![0, 2]).is_err());
        assert!(VertexPath::new(&g, vec![0, 1, 0]).is_err());
        assert!(VertexPath::new(&g, vec![]).is_err());
        assert!(VertexPath::new(&g, vec![0, 1, 2, 3]).is_ok());
    }

    #[test]
    fn cycle_type_rejects_bad_input() {
        let g = Graph::cycle(4);
        assert!(VertexCycle::new(&g, vec![0, 1, 2, 3]).is_ok());
        assert!(VertexCycle::new(&g, vec![0, 1, 2]).is_err()); // 2-0 chord missing
        assert!(VertexCycle::new(&g, vec![0, 1]).is_err());
    }
}
