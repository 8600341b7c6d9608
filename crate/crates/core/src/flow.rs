//! Unit-capacity max-flow on the split-vertex digraph, used for the
//! Menger-style disjoint path routines. Internal to the crate.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::graph::Graph;

struct FlowNet {
    // forward/backward arc pairs; arc i has reverse i^1
    head: Vec<usize>,
    cap: Vec<i32>,
    out: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(n: usize) -> Self {
        FlowNet { head: Vec::new(), cap: Vec::new(), out: vec![Vec::new(); n] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i32) {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(cap);
        self.out[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.out[to].push(id + 1);
    }

    /// Edmonds-Karp; fine at these sizes.
    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            let mut pred: Vec<Option<usize>> = vec![None; self.out.len()];
            let mut queue = VecDeque::from([s]);
            let mut seen = vec![false; self.out.len()];
            seen[s] = true;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.out[u] {
                    let v = self.head[a];
                    if self.cap[a] > 0 && !seen[v] {
                        seen[v] = true;
                        pred[v] = Some(a);
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut v = t;
            while v != s {
                let a = pred[v].unwrap();
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.head[a ^ 1];
            }
            total += 1;
        }
    }

    /// Arcs carrying flow out of `u`, in insertion order.
    fn flowing_arcs(&self, u: usize) -> Vec<usize> {
        self.out[u]
            .iter()
            .copied()
            .filter(|&a| a % 2 == 0 && self.cap[a ^ 1] > 0)
            .collect()
    }

    fn consume_arc(&mut self, a: usize) {
        self.cap[a ^ 1] -= 1;
        self.cap[a] += 1;
    }
}

// split-vertex ids
fn vin(v: usize) -> usize {
    2 * v
}
fn vout(v: usize) -> usize {
    2 * v + 1
}

fn build_split_net(g: &Graph, extra: usize) -> FlowNet {
    let n = g.vertex_count();
    let mut net = FlowNet::new(2 * n + extra);
    for v in 0..n {
        net.add_arc(vin(v), vout(v), 1);
    }
    for (u, v) in g.edges() {
        net.add_arc(vout(u), vin(v), 1);
        net.add_arc(vout(v), vin(u), 1);
    }
    net
}

/// Maximum number of internally disjoint u-v paths for non-adjacent u, v.
pub(crate) fn local_connectivity(g: &Graph, u: usize, v: usize) -> usize {
    let mut net = build_split_net(g, 0);
    net.max_flow(vout(u), vin(v))
}

/// As many pairwise internally disjoint x-y paths as the graph admits,
/// stopping early once `want` have been established by the flow.
pub(crate) fn disjoint_xy_paths(g: &Graph, x: usize, y: usize, _want: usize) -> Vec<Vec<usize>> {
    let mut net = build_split_net(g, 0);
    let flow = net.max_flow(vout(x), vin(y));
    let mut paths = Vec::new();
    for _ in 0..flow {
        let mut verts = vec![x];
        let mut node = vout(x);
        loop {
            let arcs = net.flowing_arcs(node);
            let a = *arcs.first().expect("flow conservation");
            net.consume_arc(a);
            node = net.head[a];
            if node == vin(y) {
                verts.push(y);
                break;
            }
            // arrived at some v_in; pass through the internal arc
            let v = node / 2;
            verts.push(v);
            let internal = net.flowing_arcs(node);
            let ia = *internal.first().expect("internal arc carries flow");
            net.consume_arc(ia);
            node = net.head[ia];
        }
        paths.push(verts);
    }
    paths
}

/// Maximum family of fully disjoint (S,T)-paths with interiors outside S and T.
pub(crate) fn disjoint_set_paths(g: &Graph, s: &BTreeSet<usize>, t: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let source = 2 * n;
    let sink = 2 * n + 1;
    let mut net = build_split_net(g, 2);
    for &w in s {
        net.add_arc(source, vin(w), 1);
    }
    for &w in t {
        net.add_arc(vout(w), sink, 1);
    }
    let flow = net.max_flow(source, sink);
    let mut paths = Vec::new();
    for _ in 0..flow {
        let mut verts: Vec<usize> = Vec::new();
        let start = net.flowing_arcs(source)[0];
        net.consume_arc(start);
        let mut node = net.head[start];
        loop {
            let v = node / 2;
            verts.push(v);
            let internal = net.flowing_arcs(node);
            let ia = *internal.first().expect("internal arc carries flow");
            net.consume_arc(ia);
            node = net.head[ia];
            let next = net.flowing_arcs(node);
            let a = *next.first().expect("flow conservation");
            net.consume_arc(a);
            if net.head[a] == sink {
                break;
            }
            node = net.head[a];
        }
        paths.push(shorten_set_path(verts, s, t));
    }
    paths
}

/// Trims a raw source-to-sink walk so the interior avoids S and T:
/// keep the segment from the last S vertex to the first T vertex after it.
fn shorten_set_path(verts: Vec<usize>, s: &BTreeSet<usize>, t: &BTreeSet<usize>) -> Vec<usize> {
    let i = verts.iter().rposition(|v| s.contains(v)).expect("path starts in S");
    let j = (i..verts.len())
        .find(|&k| t.contains(&verts[k]))
        .expect("path ends in T");
    verts[i..=j].to_vec()
}
