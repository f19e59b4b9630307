//! The auxiliary bipartite graph between host vertices and (vertex, color)
//! pairs, and its low-degree peeling.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{ColorId, EdgeColoring};

/// Left side: the vertices `0..left_count` of `K_n`. Right side: pairs
/// `(u, c)`. Edge `x ~ (u, c)` iff the host edge `ux` has color `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuxiliaryBipartite {
    left_count: usize,
    right: Vec<(usize, ColorId)>,
    left_adj: Vec<Vec<usize>>,
    right_adj: Vec<Vec<usize>>,
}

impl AuxiliaryBipartite {
    /// `edges` holds `(x, j)` with `j` indexing `right`; duplicates are
    /// dropped.
    pub fn new(left_count: usize, right: Vec<(usize, ColorId)>, edges: &[(usize, usize)]) -> Self {
        let mut left_adj = vec![Vec::new(); left_count];
        let mut right_adj = vec![Vec::new(); right.len()];
        for &(x, j) in edges {
            assert!(x < left_count && j < right.len(), "bipartite edge out of range");
            left_adj[x].push(j);
            right_adj[j].push(x);
        }
        for list in left_adj.iter_mut().chain(right_adj.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Self {
            left_count,
            right,
            left_adj,
            right_adj,
        }
    }

    /// Right side: every `(u, c)` with `c` in `colors` and `d_c(u) >=
    /// min_degree`, in order of `u` then `c`.
    pub fn from_coloring(coloring: &EdgeColoring, colors: &[ColorId], min_degree: usize) -> Self {
        let n = coloring.n();
        let mut wanted = vec![false; coloring.palette_size()];
        for &c in colors {
            wanted[c as usize] = true;
        }
        let mut degree = vec![vec![0usize; coloring.palette_size()]; n];
        for ((a, b), c) in coloring.edges() {
            degree[a][c as usize] += 1;
            degree[b][c as usize] += 1;
        }
        let mut right = Vec::new();
        let mut edges = Vec::new();
        for (u, deg) in degree.iter().enumerate() {
            for c in 0..coloring.palette_size() {
                if !wanted[c] || deg[c] < min_degree.max(1) {
                    continue;
                }
                let j = right.len();
                right.push((u, c as ColorId));
                for x in (0..n).filter(|&x| x != u && coloring.color(u, x) == c as ColorId) {
                    edges.push((x, j));
                }
            }
        }
        Self::new(n, right, &edges)
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_nodes(&self) -> &[(usize, ColorId)] {
        &self.right
    }

    pub fn left_neighbors(&self, x: usize) -> &[usize] {
        &self.left_adj[x]
    }

    pub fn right_neighbors(&self, j: usize) -> &[usize] {
        &self.right_adj[j]
    }

    pub fn edge_count(&self) -> usize {
        self.left_adj.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_count() == 0
    }

    /// Minimum degree over vertices with at least one edge.
    pub fn min_degree(&self) -> Option<usize> {
        self.left_adj
            .iter()
            .chain(self.right_adj.iter())
            .map(Vec::len)
            .filter(|&d| d > 0)
            .min()
    }
}

/// Repeatedly deletes every vertex (either side) of degree at most `v`.
/// Each deletion removes at most `v` edges, so at least `e(G) - v·|V(G)|`
/// edges survive and every surviving vertex has degree above `v`.
pub fn peel_bipartite(graph: &AuxiliaryBipartite, v: usize) -> AuxiliaryBipartite {
    let left = graph.left_count;
    let right = graph.right.len();
    // Vertices 0..left are the left side, left.. the right side.
    let mut degree: Vec<usize> = graph
        .left_adj
        .iter()
        .chain(graph.right_adj.iter())
        .map(Vec::len)
        .collect();
    let mut alive = vec![true; left + right];
    let mut queue: VecDeque<usize> = (0..left + right).filter(|&i| degree[i] <= v).collect();
    while let Some(i) = queue.pop_front() {
        if !alive[i] {
            continue;
        }
        alive[i] = false;
        let neighbors: Vec<usize> = if i < left {
            graph.left_adj[i].iter().map(|&j| left + j).collect()
        } else {
            graph.right_adj[i - left].to_vec()
        };
        for k in neighbors {
            if alive[k] {
                degree[k] -= 1;
                if degree[k] == v {
                    queue.push_back(k);
                }
            }
        }
    }
    let edges: Vec<(usize, usize)> = (0..left)
        .filter(|&x| alive[x])
        .flat_map(|x| {
            graph.left_adj[x]
                .iter()
                .filter(|&&j| alive[left + j])
                .map(move |&j| (x, j))
        })
        .collect();
    AuxiliaryBipartite::new(left, graph.right.clone(), &edges)
}
