//! Enumeration of the copies of a pattern `H` in `K_n`.
//!
//! Every injective map `V(H) -> V(K_n)` is an embedding because the host is
//! complete, so enumerating copies is a matter of picking exactly one
//! embedding per edge-image set. Maps are generated depth-first in
//! lexicographic order of their images (in plan position order). Symmetry is
//! broken by:
//!
//! * ordering constraints `φ(a) < φ(b)` for the built-in families
//!   (path endpoints, star leaves, matching edges, clique vertices), pruned
//!   as soon as both positions are assigned;
//! * for explicit patterns, a leaf filter keeping the lexicographically
//!   least map in its orbit under `Aut(H)`. Isolated pattern vertices are
//!   placed last and pinned to the lowest free host vertices.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{index_unchecked, ordered, Edge, PatternGraph, PatternKind};

/// One copy of `H` in `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubgraphCopy {
    /// `vertex_map[x]` is the host vertex of pattern vertex `x`.
    pub vertex_map: Vec<usize>,
    /// Images of the pattern edges, in pattern edge order, each `(min, max)`.
    pub edge_images: Vec<Edge>,
}

impl SubgraphCopy {
    pub fn from_vertex_map(pattern: &PatternGraph, vertex_map: Vec<usize>) -> Self {
        let edge_images = pattern
            .edges()
            .iter()
            .map(|&(a, b)| ordered(vertex_map[a], vertex_map[b]))
            .collect();
        Self {
            vertex_map,
            edge_images,
        }
    }

    pub fn edge_indices(&self, n: usize) -> Vec<usize> {
        self.edge_images
            .iter()
            .map(|&(a, b)| index_unchecked(a, b, n))
            .collect()
    }
}

/// Precomputed symmetry-breaking data for one pattern.
#[derive(Clone, Debug)]
pub struct CopyPlan {
    vertex_count: usize,
    /// Plan position -> pattern vertex.
    order: Vec<usize>,
    /// Pattern edges in position space, pattern edge order.
    position_edges: Vec<Edge>,
    /// At position `d` the image must exceed the images of these positions.
    greater_than: Vec<Vec<usize>>,
    /// Positions of isolated vertices: take the lowest free host vertex.
    pinned_lowest: Vec<bool>,
    /// Non-identity automorphisms as permutations of positions.
    automorphisms: Vec<Vec<usize>>,
}

impl CopyPlan {
    pub fn new(pattern: &PatternGraph) -> Self {
        let v = pattern.vertex_count();
        let mut greater_than = vec![Vec::new(); v];
        let mut pinned_lowest = vec![false; v];
        let mut automorphisms = Vec::new();
        let order: Vec<usize>;

        match pattern.kind() {
            PatternKind::Path(_) => {
                order = (0..v).collect();
                greater_than[v - 1].push(0);
            }
            PatternKind::Star(t) => {
                order = (0..v).collect();
                if t == 1 {
                    greater_than[1].push(0);
                } else {
                    for (d, g) in greater_than.iter_mut().enumerate().skip(2) {
                        g.push(d - 1);
                    }
                }
            }
            PatternKind::Matching(t) => {
                order = (0..v).collect();
                for i in 0..t {
                    greater_than[2 * i + 1].push(2 * i);
                    if i > 0 {
                        greater_than[2 * i].push(2 * i - 2);
                    }
                }
            }
            PatternKind::Clique(_) => {
                order = (0..v).collect();
                for (d, g) in greater_than.iter_mut().enumerate().skip(1) {
                    g.push(d - 1);
                }
            }
            PatternKind::Explicit => {
                let (mut active, isolated): (Vec<usize>, Vec<usize>) =
                    (0..v).partition(|&x| !pattern.is_isolated(x));
                let active_len = active.len();
                active.extend(isolated);
                order = active;
                for p in pinned_lowest.iter_mut().skip(active_len) {
                    *p = true;
                }
                let position_of = inverse(&order);
                let mut adjacency = vec![vec![false; active_len]; active_len];
                for &(a, b) in pattern.edges() {
                    let (pa, pb) = (position_of[a], position_of[b]);
                    adjacency[pa][pb] = true;
                    adjacency[pb][pa] = true;
                }
                automorphisms = automorphisms_of(&adjacency);
            }
        }

        let position_of = inverse(&order);
        let position_edges = pattern
            .edges()
            .iter()
            .map(|&(a, b)| (position_of[a], position_of[b]))
            .collect();
        Self {
            vertex_count: v,
            order,
            position_edges,
            greater_than,
            pinned_lowest,
            automorphisms,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.position_edges.len()
    }

    fn accepts(&self, map: &[usize]) -> bool {
        self.automorphisms.iter().all(|sigma| {
            for (i, &s) in sigma.iter().enumerate() {
                match map[s].cmp(&map[i]) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => return true,
                    std::cmp::Ordering::Equal => {}
                }
            }
            true
        })
    }
}

fn inverse(order: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; order.len()];
    for (pos, &x) in order.iter().enumerate() {
        inv[x] = pos;
    }
    inv
}

/// All non-identity automorphisms of a small graph, by backtracking.
fn automorphisms_of(adjacency: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let m = adjacency.len();
    let degree: Vec<usize> = adjacency.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let mut out = Vec::new();
    let mut sigma = Vec::with_capacity(m);
    let mut used = vec![false; m];

    fn go(
        adjacency: &[Vec<bool>],
        degree: &[usize],
        sigma: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let d = sigma.len();
        let m = adjacency.len();
        if d == m {
            if sigma.iter().enumerate().any(|(i, &s)| i != s) {
                out.push(sigma.clone());
            }
            return;
        }
        for t in 0..m {
            if used[t] || degree[t] != degree[d] {
                continue;
            }
            if (0..d).any(|p| adjacency[p][d] != adjacency[sigma[p]][t]) {
                continue;
            }
            used[t] = true;
            sigma.push(t);
            go(adjacency, degree, sigma, used, out);
            sigma.pop();
            used[t] = false;
        }
    }

    go(adjacency, &degree, &mut sigma, &mut used, &mut out);
    out
}

/// Streaming enumerator over the copies of a pattern in `K_n`.
///
/// Implements [`Iterator`] yielding owned [`SubgraphCopy`] values; hot loops
/// can call [`CopyEnumerator::advance`] and read the current copy through
/// [`CopyEnumerator::edge_indices_into`] without allocating.
#[derive(Clone, Debug)]
pub struct CopyEnumerator {
    plan: Arc<CopyPlan>,
    n: usize,
    leading: Option<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    cursor: Vec<usize>,
    finished: bool,
}

impl CopyEnumerator {
    pub fn new(plan: Arc<CopyPlan>, n: usize) -> Self {
        Self::build(plan, n, None)
    }

    /// Only the copies whose first plan position maps to `leading`. The
    /// partitions for `leading = 0..n` are consecutive blocks of the full
    /// enumeration order.
    pub fn with_leading(plan: Arc<CopyPlan>, n: usize, leading: usize) -> Self {
        Self::build(plan, n, Some(leading))
    }

    fn build(plan: Arc<CopyPlan>, n: usize, leading: Option<usize>) -> Self {
        let v = plan.vertex_count;
        let finished = n < v || v == 0 || leading.is_some_and(|l| l >= n);
        let mut cursor = vec![0; v.max(1)];
        cursor[0] = leading.unwrap_or(0);
        Self {
            plan,
            n,
            leading,
            map: Vec::with_capacity(v),
            used: vec![false; n],
            cursor,
            finished,
        }
    }

    pub fn plan(&self) -> &CopyPlan {
        &self.plan
    }

    fn push(&mut self, c: usize) {
        self.used[c] = true;
        self.map.push(c);
    }

    fn pop(&mut self) {
        if let Some(c) = self.map.pop() {
            self.used[c] = false;
        }
    }

    fn lower_bound(&self, d: usize) -> usize {
        self.plan.greater_than[d]
            .iter()
            .map(|&p| self.map[p] + 1)
            .max()
            .unwrap_or(0)
    }

    fn next_candidate(&mut self, d: usize) -> Option<usize> {
        if d == 0 {
            if let Some(l) = self.leading {
                return (self.cursor[0] <= l).then_some(l);
            }
        }
        if self.plan.pinned_lowest[d] {
            if self.cursor[d] >= self.n {
                return None;
            }
            self.cursor[d] = self.n;
            return (0..self.n).find(|&c| !self.used[c]);
        }
        (self.cursor[d]..self.n).find(|&c| !self.used[c])
    }

    /// Moves to the next copy. Returns `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.finished {
            return false;
        }
        let v = self.plan.vertex_count;
        if self.map.len() == v {
            self.pop();
        }
        loop {
            let d = self.map.len();
            if d == v {
                if self.plan.accepts(&self.map) {
                    return true;
                }
                self.pop();
                continue;
            }
            match self.next_candidate(d) {
                Some(c) => {
                    if !self.plan.pinned_lowest[d] {
                        self.cursor[d] = c + 1;
                    }
                    self.push(c);
                    if d + 1 < v {
                        self.cursor[d + 1] = self.lower_bound(d + 1);
                    }
                }
                None => {
                    if d == 0 {
                        self.finished = true;
                        return false;
                    }
                    self.pop();
                }
            }
        }
    }

    /// Host vertex of every pattern vertex for the current copy.
    pub fn vertex_map(&self) -> Vec<usize> {
        let mut out = vec![0; self.plan.vertex_count];
        for (pos, &x) in self.plan.order.iter().enumerate() {
            out[x] = self.map[pos];
        }
        out
    }

    /// Writes the edge indices of the current copy (pattern edge order).
    pub fn edge_indices_into(&self, buf: &mut Vec<usize>) {
        buf.clear();
        buf.extend(
            self.plan
                .position_edges
                .iter()
                .map(|&(a, b)| index_unchecked(self.map[a], self.map[b], self.n)),
        );
    }

    pub fn current(&self) -> SubgraphCopy {
        let edge_images = self
            .plan
            .position_edges
            .iter()
            .map(|&(a, b)| ordered(self.map[a], self.map[b]))
            .collect();
        SubgraphCopy {
            vertex_map: self.vertex_map(),
            edge_images,
        }
    }
}

impl Iterator for CopyEnumerator {
    type Item = SubgraphCopy;

    fn next(&mut self) -> Option<SubgraphCopy> {
        self.advance().then(|| self.current())
    }
}

/// Every copy of `H` in `K_n`, once each, in a fixed order. Empty when
/// `n < v(H)`.
pub fn enumerate_copies(pattern: &PatternGraph, n: usize) -> CopyEnumerator {
    CopyEnumerator::new(Arc::new(CopyPlan::new(pattern)), n)
}

/// All copies as edge-index lists, in enumeration order.
pub fn copy_edge_indices(pattern: &PatternGraph, n: usize) -> Vec<Vec<usize>> {
    let mut it = enumerate_copies(pattern, n);
    let mut out = Vec::new();
    let mut buf = Vec::new();
    while it.advance() {
        it.edge_indices_into(&mut buf);
        out.push(buf.clone());
    }
    out
}
