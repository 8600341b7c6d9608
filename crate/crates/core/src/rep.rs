//! Chordality recognition and minimal tree representations (clique trees),
//! together with the tree-side machinery the transversal builders consume:
//! cores, core capture, descendants, minimal capture subpaths, and spanning
//! vertices.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexCycle};
use crate::tree::{self, HostTree, TreePath};

/// An ordering of the vertices in which every vertex's later neighbors form
/// a clique. Produced by maximum cardinality search (the search visits the
/// reverse of this order) and verified before being returned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectEliminationOrder {
    pub order: Vec<usize>,
}

/// Outcome of chordality recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    Chordal(PerfectEliminationOrder),
    /// A chordless cycle on at least four vertices.
    Witness(VertexCycle),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Maximum cardinality search plus verification; on failure returns a
/// chordless cycle of length at least four.
pub fn recognize_chordal(g: &Graph) -> Chordality {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut picked = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !picked[v])
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .unwrap();
        picked[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            if !picked[u] {
                weight[u] += 1;
            }
        }
    }
    let order: Vec<usize> = visit.into_iter().rev().collect();
    if verify_peo(g, &order) {
        Chordality::Chordal(PerfectEliminationOrder { order })
    } else {
        let cycle = find_chordless_cycle(g).expect("non-chordal graph holds a chordless cycle");
        Chordality::Witness(VertexCycle::new(g, cycle).expect("witness is a cycle"))
    }
}

fn verify_peo(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > i).collect();
        for a in 0..later.len() {
            for b in a + 1..later.len() {
                if !g.has_edge(later[a], later[b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Scans triples (v; a, b) of a vertex with two non-adjacent neighbors and
/// looks for an a-b path avoiding the rest of N[v]; the shortest such path
/// closes into a chordless cycle through v.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let (a, b) = (nbrs[i], nbrs[j]);
                if g.has_edge(a, b) {
                    continue;
                }
                let mut removed: BTreeSet<usize> = g.neighbors(v).iter().copied().collect();
                removed.insert(v);
                removed.remove(&a);
                removed.remove(&b);
                if let Some(path) = shortest_path_avoiding(g, a, b, &removed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path_avoiding(g: &Graph, a: usize, b: usize, removed: &BTreeSet<usize>) -> Option<Vec<usize>> {
    use std::collections::VecDeque;
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([a]);
    parent[a] = a;
    while let Some(u) = queue.pop_front() {
        if u == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if !removed.contains(&w) && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Maximal cliques of a chordal graph, read off a perfect elimination order.
/// Returned in lexicographic order of their sorted vertex lists.
fn maximal_cliques_from_peo(g: &Graph, peo: &PerfectEliminationOrder) -> Vec<BTreeSet<usize>> {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<BTreeSet<usize>> = Vec::new();
    for (i, &v) in peo.order.iter().enumerate() {
        let mut c: BTreeSet<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > i).collect();
        c.insert(v);
        candidates.push(c);
    }
    let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            maximal.push(c.clone());
        }
    }
    maximal.sort_by(|a, b| {
        let av: Vec<usize> = a.iter().copied().collect();
        let bv: Vec<usize> = b.iter().copied().collect();
        av.cmp(&bv)
    });
    maximal
}

/// Bron-Kerbosch with pivoting. Kept as an independent oracle for checking
/// that the bags of a minimal representation are exactly the maximal cliques.
pub fn maximal_cliques_bruteforce(g: &Graph) -> Vec<BTreeSet<usize>> {
    fn extend(
        g: &Graph,
        r: &mut BTreeSet<usize>,
        mut p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p.union(&x).max_by_key(|&&u| g.neighbors(u).len()).copied().unwrap();
        let branch: Vec<usize> = p.iter().copied().filter(|v| !g.neighbors(pivot).contains(v)).collect();
        for v in branch {
            r.insert(v);
            let p2: BTreeSet<usize> = p.intersection(g.neighbors(v)).copied().collect();
            let x2: BTreeSet<usize> = x.intersection(g.neighbors(v)).copied().collect();
            extend(g, r, p2, x2, out);
            r.remove(&v);
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if g.vertex_count() == 0 {
        return out;
    }
    let p: BTreeSet<usize> = (0..g.vertex_count()).collect();
    extend(g, &mut BTreeSet::new(), p, BTreeSet::new(), &mut out);
    out.sort_by(|a, b| {
        let av: Vec<usize> = a.iter().copied().collect();
        let bv: Vec<usize> = b.iter().copied().collect();
        av.cmp(&bv)
    });
    out
}

/// Host tree plus the per-vertex subtrees and per-node bags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRep {
    host: HostTree,
    bags: Vec<BTreeSet<usize>>,
    subtrees: Vec<BTreeSet<usize>>,
    minimal: bool,
}

impl TreeRep {
    pub fn host(&self) -> &HostTree {
        &self.host
    }

    pub fn node_count(&self) -> usize {
        self.host.node_count()
    }

    pub fn bag(&self, x: usize) -> &BTreeSet<usize> {
        &self.bags[x]
    }

    pub fn bags(&self) -> &[BTreeSet<usize>] {
        &self.bags
    }

    pub fn subtree(&self, v: usize) -> &BTreeSet<usize> {
        &self.subtrees[v]
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Union of the subtrees of a connected set of graph vertices.
    pub fn span_of(&self, verts: &[usize]) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &v in verts {
            out.extend(self.subtree(v).iter().copied());
        }
        out
    }

    /// Wraps an explicitly given representation, checking consistency with the
    /// graph: subtrees connected, adjacency iff subtree intersection.
    pub fn from_parts(g: &Graph, host: HostTree, subtrees: Vec<BTreeSet<usize>>, minimal: bool) -> Result<Self> {
        let n = g.vertex_count();
        if subtrees.len() != n {
            return Err(Error::PreconditionViolated("one subtree per vertex required".into()));
        }
        for (v, s) in subtrees.iter().enumerate() {
            if s.is_empty() || !host.is_subtree(s) {
                return Err(Error::PreconditionViolated(format!("subtree of vertex {v} not connected")));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let meet = !subtrees[u].is_disjoint(&subtrees[v]);
                if meet != g.has_edge(u, v) {
                    return Err(Error::PreconditionViolated(format!(
                        "adjacency of {u},{v} disagrees with subtree intersection"
                    )));
                }
            }
        }
        let mut bags = vec![BTreeSet::new(); host.node_count()];
        for (v, s) in subtrees.iter().enumerate() {
            for &x in s {
                bags[x].insert(v);
            }
        }
        Ok(TreeRep { host, bags, subtrees, minimal })
    }

    /// Contracts host edges whose bags are nested until all bags are pairwise
    /// incomparable; the result is a minimal representation.
    pub fn minimalize(self, g: &Graph) -> Result<TreeRep> {
        let mut host = self.host;
        let mut bags = self.bags;
        loop {
            let mut merge: Option<(usize, usize)> = None;
            'outer: for x in 0..host.node_count() {
                for &y in host.neighbors(x) {
                    if bags[x].is_subset(&bags[y]) {
                        merge = Some((x, y));
                        break 'outer;
                    }
                }
            }
            let Some((x, y)) = merge else { break };
            // contract x into y, relabel densely
            let old_n = host.node_count();
            let mut remap = vec![usize::MAX; old_n];
            let mut next = 0;
            for v in 0..old_n {
                if v != x {
                    remap[v] = next;
                    next += 1;
                }
            }
            let mut edges = BTreeSet::new();
            for (a, b) in host.edges() {
                let (a2, b2) = (if a == x { y } else { a }, if b == x { y } else { b });
                if a2 != b2 {
                    let (lo, hi) = (a2.min(b2), a2.max(b2));
                    edges.insert((remap[lo], remap[hi]));
                }
            }
            let edge_vec: Vec<(usize, usize)> = edges.into_iter().collect();
            host = HostTree::from_edges(old_n - 1, &edge_vec)?;
            let mut new_bags = vec![BTreeSet::new(); old_n - 1];
            for v in 0..old_n {
                if v != x {
                    new_bags[remap[v]] = std::mem::take(&mut bags[v]);
                }
            }
            bags = new_bags;
        }
        let mut subtrees = vec![BTreeSet::new(); g.vertex_count()];
        for (x, bag) in bags.iter().enumerate() {
            for &v in bag {
                subtrees[v].insert(x);
            }
        }
        let rep = TreeRep { host, bags, subtrees, minimal: true };
        rep.validate(g)?;
        Ok(rep)
    }

    /// Checks every representation invariant against the graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        for v in 0..n {
            if self.subtrees[v].is_empty() || !self.host.is_subtree(&self.subtrees[v]) {
                return Err(Error::PreconditionViolated(format!("subtree of {v} not a subtree")));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                let meet = !self.subtrees[u].is_disjoint(&self.subtrees[v]);
                if meet != g.has_edge(u, v) {
                    return Err(Error::PreconditionViolated(format!("edge {u},{v} vs subtrees")));
                }
            }
        }
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if !self.subtrees[v].contains(&x) {
                    return Err(Error::PreconditionViolated("bag/subtree mismatch".into()));
                }
            }
            if !g.is_clique(bag) {
                return Err(Error::PreconditionViolated(format!("bag {x} is not a clique")));
            }
        }
        if self.minimal {
            for x in 0..self.bags.len() {
                for y in 0..self.bags.len() {
                    if x != y && self.bags[x].is_subset(&self.bags[y]) {
                        return Err(Error::PreconditionViolated(format!("bags {x} and {y} nested")));
                    }
                }
            }
            if self.node_count() > n.max(1) {
                return Err(Error::PreconditionViolated("more bags than vertices".into()));
            }
            if n >= 2 && g.is_connected() && self.bags.iter().any(|b| b.len() < 2) {
                return Err(Error::PreconditionViolated("singleton bag in minimal representation".into()));
            }
        }
        Ok(())
    }
}

/// Builds a minimal tree representation of a connected chordal graph:
/// maximal cliques become the bags and a maximum-weight spanning tree of the
/// clique-intersection graph becomes the host.
pub fn minimal_tree_representation(g: &Graph) -> Result<TreeRep> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let peo = match recognize_chordal(g) {
        Chordality::Chordal(p) => p,
        Chordality::Witness(_) => return Err(Error::NotChordal),
    };
    let bags = maximal_cliques_from_peo(g, &peo);
    let k = bags.len();
    let mut weighted: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let w = bags[i].intersection(&bags[j]).count();
            if w > 0 {
                weighted.push((w, i, j));
            }
        }
    }
    weighted.sort_by(|a, b| (b.0, a.1, a.2).cmp(&(a.0, b.1, b.2)));
    let mut dsu: Vec<usize> = (0..k).collect();
    fn find(dsu: &mut Vec<usize>, v: usize) -> usize {
        if dsu[v] != v {
            let r = find(dsu, dsu[v]);
            dsu[v] = r;
        }
        dsu[v]
    }
    let mut edges = Vec::new();
    for (_, i, j) in weighted {
        let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
        if ri != rj {
            dsu[ri] = rj;
            edges.push((i, j));
        }
    }
    if edges.len() != k - 1 {
        return Err(Error::PreconditionViolated("clique graph disconnected".into()));
    }
    let host = HostTree::from_edges(k, &edges)?;
    let mut subtrees = vec![BTreeSet::new(); n];
    for (x, bag) in bags.iter().enumerate() {
        for &v in bag {
            subtrees[v].insert(x);
        }
    }
    let rep = TreeRep { host, bags, subtrees, minimal: true };
    debug_assert!(rep.validate(g).is_ok());
    Ok(rep)
}

/// A rooted subtree of the host, the "X rooted at x" state the game and the
/// transversal rounds walk through.
#[derive(Debug, Clone)]
pub struct RootedView<'a> {
    rep: &'a TreeRep,
    root: usize,
    nodes: BTreeSet<usize>,
}

impl<'a> RootedView<'a> {
    pub fn new(rep: &'a TreeRep, root: usize, nodes: BTreeSet<usize>) -> Result<Self> {
        if !nodes.contains(&root) || !rep.host().is_subtree(&nodes) {
            return Err(Error::PreconditionViolated("view must be a subtree containing its root".into()));
        }
        Ok(RootedView { rep, root, nodes })
    }

    /// The whole host rooted at `root`.
    pub fn whole(rep: &'a TreeRep, root: usize) -> Self {
        let nodes = (0..rep.node_count()).collect();
        RootedView { rep, root, nodes }
    }

    pub fn rep(&self) -> &'a TreeRep {
        self.rep
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn nodes(&self) -> &BTreeSet<usize> {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The root-to-z path inside the view.
    pub fn cut_path(&self, z: usize) -> TreePath {
        debug_assert!(self.nodes.contains(&z));
        let p = self.rep.host().path_between(self.root, z);
        debug_assert!(p.nodes().iter().all(|v| self.nodes.contains(v)));
        p
    }
}

/// Core of a subgraph given by its edges: all host nodes where the subtrees
/// of some edge's endpoints meet.
pub fn core(rep: &TreeRep, edges: &[(usize, usize)]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &(u, v) in edges {
        out.extend(rep.subtree(u).intersection(rep.subtree(v)).copied());
    }
    out
}

/// True when every member of the family has a core intersecting `w`.
pub fn core_capture(rep: &TreeRep, w: &BTreeSet<usize>, family: &[Vec<(usize, usize)>]) -> bool {
    family.iter().all(|edges| !core(rep, edges).is_disjoint(w))
}

/// Descendants of the subpath `q0` of `q` inside the view: the union of the
/// components of X - E(Q) that contain a node of q0.
pub fn descendants(view: &RootedView, q: &TreePath, q0: &TreePath) -> BTreeSet<usize> {
    let offset = subpath_offset(q, q0).expect("q0 must be a subpath of q");
    let comp = tree::path_edge_components(view.rep().host(), view.nodes(), q.nodes());
    let lo = offset;
    let hi = offset + q0.len();
    comp.iter().filter(|(_, &p)| p >= lo && p < hi).map(|(&v, _)| v).collect()
}

fn subpath_offset(q: &TreePath, q0: &TreePath) -> Option<usize> {
    if q0.is_empty() || q0.len() > q.len() {
        return None;
    }
    (0..=q.len() - q0.len()).find(|&i| &q.nodes()[i..i + q0.len()] == q0.nodes())
}

/// Positions along `q` (indices of components of X - E(Q)) where each
/// member's core meets the view. Errors if some member's core misses X.
pub(crate) fn capture_positions(
    view: &RootedView,
    q: &TreePath,
    cores: &[BTreeSet<usize>],
) -> Result<Vec<BTreeSet<usize>>> {
    let comp = tree::path_edge_components(view.rep().host(), view.nodes(), q.nodes());
    let mut out = Vec::with_capacity(cores.len());
    for (i, core) in cores.iter().enumerate() {
        let positions: BTreeSet<usize> = core.iter().filter_map(|v| comp.get(v).copied()).collect();
        if positions.is_empty() {
            return Err(Error::CaptureViolation(format!("member {i} has no core vertex in the view")));
        }
        out.push(positions);
    }
    Ok(out)
}

/// Shrinks `[lo, hi)` to an inclusion-minimal interval that still hits every
/// member's position set; far end first, then the near end.
pub(crate) fn minimal_capture_interval(
    positions: &[BTreeSet<usize>],
    lo0: usize,
    hi0: usize,
) -> (usize, usize) {
    let hits = |lo: usize, hi: usize| {
        positions.iter().all(|p| p.range(lo..hi).next().is_some())
    };
    debug_assert!(hits(lo0, hi0));
    let (mut lo, mut hi) = (lo0, hi0);
    while hi - lo > 1 && hits(lo, hi - 1) {
        hi -= 1;
    }
    while hi - lo > 1 && hits(lo + 1, hi) {
        lo += 1;
    }
    (lo, hi)
}

/// Inclusion-minimal subpath Q0 of `q` such that the descendants of Q0 keep
/// the core capture property for the family.
pub fn minimal_capture_subpath(
    view: &RootedView,
    q: &TreePath,
    family: &[Vec<(usize, usize)>],
) -> Result<TreePath> {
    let cores: Vec<BTreeSet<usize>> = family.iter().map(|e| core(view.rep(), e)).collect();
    let positions = capture_positions(view, q, &cores).map_err(|_| {
        Error::PreconditionViolated("q itself lacks the core capture property".into())
    })?;
    let (lo, hi) = minimal_capture_interval(&positions, 0, q.len());
    Ok(TreePath::from_nodes_unchecked(q.nodes()[lo..hi].to_vec()))
}

/// The `k` smallest vertices outside `forbidden` whose subtrees contain all
/// of `q0` (the intersection of the bags along q0).
pub fn spanning_vertices(
    rep: &TreeRep,
    q0: &TreePath,
    k: usize,
    forbidden: &BTreeSet<usize>,
) -> Result<Vec<usize>> {
    let mut common: BTreeSet<usize> = rep.bag(q0.nodes()[0]).clone();
    for &y in &q0.nodes()[1..] {
        common = common.intersection(rep.bag(y)).copied().collect();
    }
    let chosen: Vec<usize> = common.iter().copied().filter(|v| !forbidden.contains(v)).take(k).collect();
    if chosen.len() < k {
        return Err(Error::SpanDeficit { want: k, found: chosen.len() });
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn complete_graph_is_chordal() {
        assert!(recognize_chordal(&Graph::complete(4)).is_chordal());
    }

    #[test]
    fn four_cycle_yields_witness() {
        match recognize_chordal(&Graph::cycle(4)) {
            Chordality::Witness(c) => {
                let mut vs: Vec<usize> = c.vertices().to_vec();
                vs.sort();
                assert_eq!(vs, vec![0, 1, 2, 3]);
            }
            Chordality::Chordal(_) => panic!("C4 is not chordal"),
        }
    }

    #[test]
    fn longer_holes_detected() {
        for n in 4..9 {
            match recognize_chordal(&Graph::cycle(n)) {
                Chordality::Witness(c) => assert!(c.len() >= 4),
                Chordality::Chordal(_) => panic!("C{n} is not chordal"),
            }
        }
    }

    #[test]
    fn peo_property_verified_on_chordal_samples() {
        let samples = vec![
            Graph::path(6),
            Graph::star(4),
            Graph::complete(5),
            // two triangles sharing an edge plus a pendant
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap(),
        ];
        for g in &samples {
            match recognize_chordal(g) {
                Chordality::Chordal(peo) => assert!(verify_peo(g, &peo.order)),
                Chordality::Witness(_) => panic!("sample is chordal"),
            }
        }
    }

    #[test]
    fn rep_of_complete_graph_is_single_bag() {
        let g = Graph::complete(4);
        let rep = minimal_tree_representation(&g).unwrap();
        assert_eq!(rep.node_count(), 1);
        assert_eq!(rep.bag(0), &(0..4).collect());
    }

    #[test]
    fn rep_of_path_has_edge_bags() {
        let g = Graph::path(4);
        let rep = minimal_tree_representation(&g).unwrap();
        assert_eq!(rep.node_count(), 3);
        let bags: Vec<BTreeSet<usize>> = rep.bags().to_vec();
        assert_eq!(bags, vec![[0, 1].into(), [1, 2].into(), [2, 3].into()]);
        rep.validate(&g).unwrap();
    }

    #[test]
    fn rep_of_star_shares_center_everywhere() {
        let g = Graph::star(3);
        let rep = minimal_tree_representation(&g).unwrap();
        assert_eq!(rep.node_count(), 3);
        for x in 0..3 {
            assert!(rep.bag(x).contains(&0), "center must be in every bag");
            assert_eq!(rep.bag(x).len(), 2);
        }
        // center's subtree covers the whole host and is connected on it
        assert_eq!(rep.subtree(0).len(), 3);
        rep.validate(&g).unwrap();
    }

    #[test]
    fn rep_rejects_bad_inputs() {
        assert_eq!(minimal_tree_representation(&Graph::cycle(4)).unwrap_err(), Error::NotChordal);
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(minimal_tree_representation(&disconnected).unwrap_err(), Error::NotConnected);
    }

    #[test]
    fn bags_match_bruteforce_cliques() {
        let samples = vec![
            Graph::path(5),
            Graph::star(4),
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap(),
        ];
        for g in &samples {
            let rep = minimal_tree_representation(g).unwrap();
            let mut bags: Vec<BTreeSet<usize>> = rep.bags().to_vec();
            bags.sort_by(|a, b| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>()));
            assert_eq!(bags, maximal_cliques_bruteforce(g));
        }
    }

    #[test]
    fn core_of_single_edge_and_empty() {
        let g = Graph::path(4);
        let rep = minimal_tree_representation(&g).unwrap();
        // the one host node whose bag holds both endpoints
        assert_eq!(core(&rep, &[(1, 2)]), [1].into());
        assert_eq!(core(&rep, &[]), BTreeSet::new());
    }

    #[test]
    fn core_of_longest_path_in_star() {
        let g = Graph::star(3);
        let rep = minimal_tree_representation(&g).unwrap();
        // path 1-0-2 uses the bags {0,1} and {0,2}
        let c = core(&rep, &[(1, 0), (0, 2)]);
        let expect: BTreeSet<usize> = (0..3)
            .filter(|&x| rep.bag(x).contains(&1) || rep.bag(x).contains(&2))
            .collect();
        assert_eq!(c, expect);
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn capture_basics() {
        let g = Graph::star(3);
        let rep = minimal_tree_representation(&g).unwrap();
        let all: BTreeSet<usize> = (0..rep.node_count()).collect();
        let paths: Vec<Vec<(usize, usize)>> =
            vec![vec![(1, 0), (0, 2)], vec![(1, 0), (0, 3)], vec![(2, 0), (0, 3)]];
        assert!(core_capture(&rep, &all, &paths));
        assert!(!core_capture(&rep, &BTreeSet::new(), &paths));
    }

    #[test]
    fn descendants_of_whole_path_is_whole_view() {
        let g = Graph::path(4);
        let rep = minimal_tree_representation(&g).unwrap();
        let view = RootedView::whole(&rep, 0);
        let q = view.cut_path(2);
        let d = descendants(&view, &q, &q);
        assert_eq!(d, (0..3).collect());
    }

    #[test]
    fn minimal_capture_trims_both_ends() {
        let g = Graph::path(4);
        let rep = minimal_tree_representation(&g).unwrap();
        let view = RootedView::whole(&rep, 0);
        let q = view.cut_path(2);
        // a member whose core is only the far endpoint's component
        let far_only = vec![vec![(2, 3)]];
        let q0 = minimal_capture_subpath(&view, &q, &far_only).unwrap();
        assert_eq!(q0.nodes(), &[2]);
        // members pinning both ends force the whole path
        let both = vec![vec![(0, 1)], vec![(2, 3)]];
        let q0 = minimal_capture_subpath(&view, &q, &both).unwrap();
        assert_eq!(q0.nodes(), q.nodes());
        // minimality: dropping either endpoint breaks capture
        let cores: Vec<BTreeSet<usize>> = both.iter().map(|e| core(&rep, e)).collect();
        let positions = capture_positions(&view, &q, &cores).unwrap();
        assert!(positions.iter().any(|p| p.range(0..2).next().is_none()));
        assert!(positions.iter().any(|p| p.range(1..3).next().is_none()));
    }

    #[test]
    fn spanning_vertices_reads_bags() {
        let g = Graph::path(4);
        let rep = minimal_tree_representation(&g).unwrap();
        let view = RootedView::whole(&rep, 0);
        let q0 = TreePath::new(rep.host(), vec![1]).unwrap();
        let _ = view;
        let vs = spanning_vertices(&rep, &q0, 1, &BTreeSet::new()).unwrap();
        assert_eq!(vs, vec![1]); // bag {1,2}, smallest first
        let vs = spanning_vertices(&rep, &q0, 2, &BTreeSet::new()).unwrap();
        assert_eq!(vs, vec![1, 2]);
        let err = spanning_vertices(&rep, &q0, 3, &BTreeSet::new()).unwrap_err();
        assert_eq!(err, Error::SpanDeficit { want: 3, found: 2 });
    }

    #[test]
    fn minimalize_contracts_nested_bags() {
        // path graph represented on a 5-node host with a redundant node
        let g = Graph::path(3);
        let host = HostTree::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let subtrees: Vec<BTreeSet<usize>> = vec![[0].into(), [0, 1, 2].into(), [2].into()];
        let rep = TreeRep::from_parts(&g, host, subtrees, false).unwrap();
        let min = rep.minimalize(&g).unwrap();
        assert_eq!(min.node_count(), 2);
        min.validate(&g).unwrap();
    }
}
