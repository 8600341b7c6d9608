//! Exhaustive desk-scale ground truth: all longest paths, all longest
//! cycles, exact minimum transversals, and Gallai-vertex detection.
//!
//! Enumeration is DFS with an optimistic reachability bound; the bitmask
//! dynamic programs are kept as an independent route to the same lengths.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for path enumeration.
pub const DEFAULT_PATH_CAP: usize = 14;
/// Default vertex cap for cycle enumeration.
pub const DEFAULT_CYCLE_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    Path,
    Cycle,
}

/// Every longest path or cycle of a graph, canonicalized and deduplicated.
///
/// Paths are stored in the lexicographically smaller of their two
/// orientations; cycles start at their smallest vertex with the smaller of
/// the two directions. Members are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongestFamily {
    pub kind: FamilyKind,
    /// Vertex count of each member; 0 only for an empty cycle family.
    pub length: usize,
    pub members: Vec<Vec<usize>>,
}

impl LongestFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Edges of member `i`, including the closing edge for cycles.
    pub fn member_edges(&self, i: usize) -> Vec<(usize, usize)> {
        let verts = &self.members[i];
        let mut edges: Vec<(usize, usize)> = verts.windows(2).map(|w| (w[0], w[1])).collect();
        if self.kind == FamilyKind::Cycle && verts.len() >= 3 {
            edges.push((*verts.last().unwrap(), verts[0]));
        }
        edges
    }

    pub fn member_contains(&self, i: usize, v: usize) -> bool {
        self.members[i].contains(&v)
    }

    /// True when the vertex set hits every member.
    pub fn is_transversal(&self, set: &BTreeSet<usize>) -> bool {
        self.members.iter().all(|m| m.iter().any(|v| set.contains(v)))
    }

    /// Intersection of all members' vertex sets.
    pub fn common_vertices(&self) -> BTreeSet<usize> {
        let mut iter = self.members.iter();
        let Some(first) = iter.next() else {
            return BTreeSet::new();
        };
        let mut common: BTreeSet<usize> = first.iter().copied().collect();
        for m in iter {
            common = common.iter().copied().filter(|v| m.contains(v)).collect();
            if common.is_empty() {
                break;
            }
        }
        common
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n <= 60, "bitmask routines require at most 60 vertices");
    (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect()
}

/// Unvisited vertices reachable from `from` through unvisited vertices.
fn reach_count(adj: &[u64], visited: u64, from: usize) -> usize {
    let mut reach = adj[from] & !visited;
    let mut frontier = reach;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= !visited & !reach;
        reach |= next;
        frontier = next;
    }
    reach.count_ones() as usize
}

/// All longest simple paths, canonicalized, with the default cap.
pub fn longest_paths(g: &Graph) -> Result<LongestFamily> {
    longest_paths_capped(g, DEFAULT_PATH_CAP)
}

pub fn longest_paths_capped(g: &Graph, cap: usize) -> Result<LongestFamily> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::TooLarge(format!("{n} vertices exceeds the path oracle cap {cap}")));
    }
    if n == 0 {
        return Ok(LongestFamily { kind: FamilyKind::Path, length: 0, members: vec![] });
    }
    let adj = adjacency_masks(g);
    let mut best = 0usize;
    let mut stack = Vec::with_capacity(n);
    for s in 0..n {
        stack.push(s);
        max_path_dfs(&adj, s, 1 << s, &mut stack, &mut best);
        stack.pop();
    }
    let mut members = Vec::new();
    for s in 0..n {
        stack.push(s);
        collect_path_dfs(&adj, s, 1 << s, &mut stack, best, &mut members);
        stack.pop();
    }
    members.sort();
    Ok(LongestFamily { kind: FamilyKind::Path, length: best, members })
}

fn max_path_dfs(adj: &[u64], v: usize, visited: u64, stack: &mut Vec<usize>, best: &mut usize) {
    *best = (*best).max(stack.len());
    let mut avail = adj[v] & !visited;
    while avail != 0 {
        let u = avail.trailing_zeros() as usize;
        avail &= avail - 1;
        let vis2 = visited | (1 << u);
        if stack.len() + 1 + reach_count(adj, vis2, u) <= *best {
            continue;
        }
        stack.push(u);
        max_path_dfs(adj, u, vis2, stack, best);
        stack.pop();
    }
}

fn collect_path_dfs(
    adj: &[u64],
    v: usize,
    visited: u64,
    stack: &mut Vec<usize>,
    target: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == target {
        if is_canonical_path(stack) {
            out.push(stack.clone());
        }
        return;
    }
    let mut avail = adj[v] & !visited;
    while avail != 0 {
        let u = avail.trailing_zeros() as usize;
        avail &= avail - 1;
        let vis2 = visited | (1 << u);
        if stack.len() + 1 + reach_count(adj, vis2, u) < target {
            continue;
        }
        stack.push(u);
        collect_path_dfs(adj, u, vis2, stack, target, out);
        stack.pop();
    }
}

fn is_canonical_path(p: &[usize]) -> bool {
    let m = p.len();
    for i in 0..m {
        match p[i].cmp(&p[m - 1 - i]) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    true
}

/// All longest cycles, canonicalized, with the default cap. Acyclic graphs
/// yield an empty family of length 0.
pub fn longest_cycles(g: &Graph) -> Result<LongestFamily> {
    longest_cycles_capped(g, DEFAULT_CYCLE_CAP)
}

pub fn longest_cycles_capped(g: &Graph, cap: usize) -> Result<LongestFamily> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::TooLarge(format!("{n} vertices exceeds the cycle oracle cap {cap}")));
    }
    if n < 3 {
        return Ok(LongestFamily { kind: FamilyKind::Cycle, length: 0, members: vec![] });
    }
    let adj = adjacency_masks(g);
    let mut best = 0usize;
    let mut stack = Vec::with_capacity(n);
    for s in 0..n {
        // anchor each cycle at its smallest vertex
        let banned: u64 = (1 << s) - 1;
        stack.push(s);
        max_cycle_dfs(&adj, s, s, (1 << s) | banned, &mut stack, &mut best);
        stack.pop();
    }
    let mut members = Vec::new();
    if best >= 3 {
        for s in 0..n {
            let banned: u64 = (1 << s) - 1;
            stack.push(s);
            collect_cycle_dfs(&adj, s, s, (1 << s) | banned, &mut stack, best, &mut members);
            stack.pop();
        }
    }
    members.sort();
    Ok(LongestFamily { kind: FamilyKind::Cycle, length: best, members })
}

fn max_cycle_dfs(adj: &[u64], anchor: usize, v: usize, visited: u64, stack: &mut Vec<usize>, best: &mut usize) {
    if stack.len() >= 3 && adj[v] & (1 << anchor) != 0 {
        *best = (*best).max(stack.len());
    }
    let mut avail = adj[v] & !visited;
    while avail != 0 {
        let u = avail.trailing_zeros() as usize;
        avail &= avail - 1;
        let vis2 = visited | (1 << u);
        if stack.len() + 1 + reach_count(adj, vis2, u) <= *best {
            continue;
        }
        stack.push(u);
        max_cycle_dfs(adj, anchor, u, vis2, stack, best);
        stack.pop();
    }
}

fn collect_cycle_dfs(
    adj: &[u64],
    anchor: usize,
    v: usize,
    visited: u64,
    stack: &mut Vec<usize>,
    target: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == target {
        // close the cycle; keep one direction per cycle
        if adj[v] & (1 << anchor) != 0 && stack[1] < stack[target - 1] {
            out.push(stack.clone());
        }
        return;
    }
    let mut avail = adj[v] & !visited;
    while avail != 0 {
        let u = avail.trailing_zeros() as usize;
        avail &= avail - 1;
        let vis2 = visited | (1 << u);
        if stack.len() + 1 + reach_count(adj, vis2, u) < target {
            continue;
        }
        stack.push(u);
        collect_cycle_dfs(adj, anchor, u, vis2, stack, target, out);
        stack.pop();
    }
}

/// Longest path length (vertex count) by subset dynamic programming over the
/// vertices in `allowed`. Independent of the DFS enumeration.
pub fn longest_path_len_dp(g: &Graph, allowed: u64) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let adj = adjacency_masks(g);
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let allowed = allowed & full;
    let mut dp = vec![0u64; 1 << n];
    let mut best = 0usize;
    for v in 0..n {
        if allowed & (1 << v) != 0 {
            dp[1 << v] = 1 << v;
        }
    }
    for mask in 1u64..(1 << n) {
        let ends = dp[mask as usize];
        if ends == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut ext = adj[v] & allowed & !mask;
            while ext != 0 {
                let u = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[(mask | (1 << u)) as usize] |= 1 << u;
            }
        }
    }
    best
}

/// Longest cycle length by subset dynamic programming; 0 when acyclic.
pub fn longest_cycle_len_dp(g: &Graph, allowed: u64) -> usize {
    let n = g.vertex_count();
    if n < 3 {
        return 0;
    }
    let adj = adjacency_masks(g);
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let allowed = allowed & full;
    let mut dp = vec![0u64; 1 << n];
    for v in 0..n {
        if allowed & (1 << v) != 0 {
            dp[1 << v] = 1 << v;
        }
    }
    let mut best = 0usize;
    for mask in 1u64..(1 << n) {
        let ends = dp[mask as usize];
        if ends == 0 {
            continue;
        }
        let anchor = mask.trailing_zeros() as usize;
        if mask.count_ones() >= 3 && ends & adj[anchor] != 0 {
            best = best.max(mask.count_ones() as usize);
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            // extensions keep the anchor as the smallest vertex
            let mut ext = adj[v] & allowed & !mask & !((1 << anchor) | ((1 << anchor) - 1));
            while ext != 0 {
                let u = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[(mask | (1 << u)) as usize] |= 1 << u;
            }
        }
    }
    best
}

pub fn all_vertices_mask(g: &Graph) -> u64 {
    let n = g.vertex_count();
    if n == 64 {
        !0
    } else {
        (1 << n) - 1
    }
}

/// Exact minimum hitting set of the family, by deepening branch and bound
/// over sizes 1, 2, 3, ...
pub fn min_transversal(g: &Graph, family: &LongestFamily) -> BTreeSet<usize> {
    assert!(!family.is_empty(), "family must be nonempty");
    let _ = g;
    let mut masks: Vec<u64> = family
        .members
        .iter()
        .map(|m| m.iter().fold(0u64, |acc, &v| acc | (1 << v)))
        .collect();
    masks.sort();
    masks.dedup();
    for k in 1.. {
        let mut chosen = Vec::new();
        if hit_search(&masks, k, &mut chosen) {
            return chosen.into_iter().collect();
        }
    }
    unreachable!()
}

fn hit_search(masks: &[u64], budget: usize, chosen: &mut Vec<usize>) -> bool {
    let hit: u64 = chosen.iter().fold(0u64, |acc, &v| acc | (1 << v));
    let unhit = masks.iter().filter(|&&m| m & hit == 0).min_by_key(|&&m| m.count_ones());
    let Some(&pick) = unhit else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let mut bits = pick;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        chosen.push(v);
        if hit_search(masks, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A vertex on every longest path, if one exists. Decided by deletion: v is
/// on every longest path exactly when removing v shortens the longest path.
pub fn gallai_vertex(g: &Graph) -> Result<Option<usize>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    let full = all_vertices_mask(g);
    let len = longest_path_len_dp(g, full);
    for v in 0..n {
        if longest_path_len_dp(g, full & !(1 << v)) < len {
            return Ok(Some(v));
        }
    }
    Ok(None)
}
