//! Matchings in small general graphs given as edge lists.

use std::collections::VecDeque;

use crate::graph::Edge;

const NONE: usize = usize::MAX;

/// Greedy maximal matching scanning edges in ascending `(u, w)` order.
pub fn greedy_maximal_matching(edges: &[Edge]) -> Vec<Edge> {
    let mut sorted: Vec<Edge> = edges.iter().map(|&(a, b)| normalize(a, b)).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let mut taken: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for (a, b) in sorted {
        if a == b || taken.contains(&a) || taken.contains(&b) {
            continue;
        }
        taken.push(a);
        taken.push(b);
        out.push((a, b));
    }
    out
}

/// Maximum matching in a general graph (Edmonds' blossom algorithm).
///
/// Vertices are compressed to those that appear in `edges`, so the cost is
/// cubic in the number of touched vertices, not in the host size.
pub fn maximum_matching(edges: &[Edge]) -> Vec<Edge> {
    let mut verts: Vec<usize> = edges
        .iter()
        .filter(|(a, b)| a != b)
        .flat_map(|&(a, b)| [a, b])
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let m = verts.len();
    let id = |x: usize| verts.binary_search(&x).expect("vertex present");

    let mut adj = vec![Vec::new(); m];
    for &(a, b) in edges {
        if a == b {
            continue;
        }
        let (ia, ib) = (id(a), id(b));
        if !adj[ia].contains(&ib) {
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
    }

    let mut blossom = Blossom::new(adj);
    // Greedy warm start, then augment from every exposed vertex.
    for v in 0..m {
        if blossom.mate[v] == NONE {
            if let Some(&w) = blossom.adj[v].iter().find(|&&w| blossom.mate[w] == NONE) {
                blossom.mate[v] = w;
                blossom.mate[w] = v;
            }
        }
    }
    for root in 0..m {
        if blossom.mate[root] != NONE {
            continue;
        }
        let mut v = blossom.find_augmenting_path(root);
        while v != NONE {
            let pv = blossom.parent[v];
            let ppv = blossom.mate[pv];
            blossom.mate[v] = pv;
            blossom.mate[pv] = v;
            v = ppv;
        }
    }

    let mut out: Vec<Edge> = (0..m)
        .filter(|&v| blossom.mate[v] != NONE && v < blossom.mate[v])
        .map(|v| (verts[v], verts[blossom.mate[v]]))
        .collect();
    out.sort_unstable();
    out
}

/// True when the edges are pairwise vertex-disjoint and loop-free.
pub fn is_matching(edges: &[Edge]) -> bool {
    let mut seen: Vec<usize> = Vec::with_capacity(edges.len() * 2);
    for &(a, b) in edges {
        if a == b || seen.contains(&a) || seen.contains(&b) {
            return false;
        }
        seen.push(a);
        seen.push(b);
    }
    true
}

/// Endpoints of a matching, sorted. For a maximal matching this is a vertex
/// cover of the underlying edge set.
pub fn matched_vertices(matching: &[Edge]) -> Vec<usize> {
    let mut vs: Vec<usize> = matching.iter().flat_map(|&(a, b)| [a, b]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

fn normalize(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

struct Blossom {
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let m = adj.len();
        Self {
            adj,
            mate: vec![NONE; m],
            parent: vec![NONE; m],
            base: (0..m).collect(),
            used: vec![false; m],
            in_blossom: vec![false; m],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating trees rooted at `root`; returns the exposed
    /// endpoint of an augmenting path or `NONE`.
    fn find_augmenting_path(&mut self, root: usize) -> usize {
        let m = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for k in 0..self.adj[v].len() {
                let to = self.adj[v][k];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..m {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        NONE
    }
}
