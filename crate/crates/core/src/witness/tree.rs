//! Embedding trees into host graphs, and completing forests to trees.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ordered, Edge, PatternGraph};

/// Search nodes allowed for the fallback backtracking embedder.
const SEARCH_BUDGET: u64 = 1_000_000;

fn adjacency(host: &[Edge], n: usize) -> Result<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in host {
        if a >= n || b >= n || a == b {
            return Err(Error::invalid(format!("host edge ({a}, {b}) invalid for n = {n}")));
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    Ok(adj)
}

/// Tree vertices in BFS order from 0, with each vertex's parent.
fn bfs_order(tree: &PatternGraph) -> (Vec<usize>, Vec<usize>) {
    let v = tree.vertex_count();
    let mut parent = vec![usize::MAX; v];
    let mut seen = vec![false; v];
    let mut order = Vec::with_capacity(v);
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(t) = queue.pop_front() {
        order.push(t);
        for u in tree.neighbors(t) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = t;
                queue.push_back(u);
            }
        }
    }
    (order, parent)
}

/// Finds a copy of the tree `T` in the host graph on `0..n`. Returns the
/// host vertex of each tree vertex.
///
/// First peels the host to its subgraph of minimum degree at least
/// `v(T) - 1`; if that is non-empty the tree embeds greedily there. Otherwise
/// a bounded backtracking search runs on the whole host, and `None` means
/// no embedding was found within the budget.
pub fn embed_tree(host: &[Edge], n: usize, tree: &PatternGraph) -> Result<Option<Vec<usize>>> {
    if !tree.is_tree() {
        return Err(Error::invalid("pattern is not a tree"));
    }
    let adj = adjacency(host, n)?;
    let v = tree.vertex_count();
    if v > n {
        return Ok(None);
    }
    let (order, parent) = bfs_order(tree);

    let core = min_degree_core(&adj, v - 1);
    if let Some(root) = core.iter().position(|&alive| alive) {
        let mut map = vec![usize::MAX; v];
        let mut used = vec![false; n];
        map[order[0]] = root;
        used[root] = true;
        for &t in &order[1..] {
            let anchor = map[parent[t]];
            let next = adj[anchor]
                .iter()
                .copied()
                .find(|&w| core[w] && !used[w])
                .expect("core degree leaves a free neighbor");
            map[t] = next;
            used[next] = true;
        }
        return Ok(Some(map));
    }

    let mut search = Search {
        adj: &adj,
        order: &order,
        parent: &parent,
        tree,
        map: vec![usize::MAX; v],
        used: vec![false; n],
        nodes: 0,
    };
    Ok(search.run().then_some(search.map))
}

/// Marks the vertices surviving repeated deletion of degree `< k` vertices.
fn min_degree_core(adj: &[Vec<usize>], k: usize) -> Vec<bool> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| degree[u] < k).collect();
    while let Some(u) = stack.pop() {
        if !alive[u] {
            continue;
        }
        alive[u] = false;
        for &w in &adj[u] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] + 1 == k {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    order: &'a [usize],
    parent: &'a [usize],
    tree: &'a PatternGraph,
    map: Vec<usize>,
    used: Vec<bool>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let root = self.order[0];
        let need = self.tree.degree(root);
        for r in 0..self.adj.len() {
            if self.adj[r].len() < need {
                continue;
            }
            self.place(root, r);
            if self.extend(1) {
                return true;
            }
            self.unplace(root, r);
            if self.nodes >= SEARCH_BUDGET {
                return false;
            }
        }
        false
    }

    fn place(&mut self, t: usize, w: usize) {
        self.map[t] = w;
        self.used[w] = true;
        self.nodes += 1;
    }

    fn unplace(&mut self, t: usize, w: usize) {
        self.map[t] = usize::MAX;
        self.used[w] = false;
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        if self.nodes >= SEARCH_BUDGET {
            return false;
        }
        let t = self.order[depth];
        let anchor = self.map[self.parent[t]];
        let need = self.tree.degree(t);
        for i in 0..self.adj[anchor].len() {
            let w = self.adj[anchor][i];
            if self.used[w] || self.adj[w].len() < need {
                continue;
            }
            self.place(t, w);
            if self.extend(depth + 1) {
                return true;
            }
            self.unplace(t, w);
        }
        false
    }
}

/// A spanning forest of a pattern and the tree obtained by linking its
/// components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestCompletion {
    /// Spanning forest `F ⊆ H`: pattern edges kept by union-find, in order.
    pub forest: Vec<Edge>,
    /// Edges added between consecutive component representatives.
    pub connectors: Vec<Edge>,
    /// `F` plus the connectors: a tree on `V(H)` with `e(F) + c - 1` edges.
    pub tree: PatternGraph,
}

/// Spanning forest of `H` (union-find over its edges in order), turned into
/// a spanning tree by chaining the smallest vertex of each component.
pub fn forest_completion(pattern: &PatternGraph) -> Result<ForestCompletion> {
    let v = pattern.vertex_count();
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut forest = Vec::new();
    for &(a, b) in pattern.edges() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
            forest.push((a, b));
        }
    }
    // Roots are the smallest vertex of each component because unions keep
    // the smaller root.
    let reps: Vec<usize> = (0..v).filter(|&x| find(&mut parent, x) == x).collect();
    let connectors: Vec<Edge> = reps.windows(2).map(|w| ordered(w[0], w[1])).collect();
    let mut edges = forest.clone();
    edges.extend_from_slice(&connectors);
    let tree = PatternGraph::explicit(v, &edges)?;
    Ok(ForestCompletion {
        forest,
        connectors,
        tree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_embedding(host: &[Edge], tree: &PatternGraph, map: &[usize]) -> bool {
        let mut sorted = map.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == map.len()
            && tree
                .edges()
                .iter()
                .all(|&(a, b)| host.contains(&ordered(map[a], map[b])))
    }

    fn clique_edges(n: usize) -> Vec<Edge> {
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
    }

    #[test]
    fn path_in_dense_host_uses_core() {
        let host = clique_edges(6);
        let p5 = PatternGraph::path(5).unwrap();
        let map = embed_tree(&host, 6, &p5).unwrap().unwrap();
        assert!(is_embedding(&host, &p5, &map));
    }

    #[test]
    fn path_in_sparse_host_uses_search() {
        // A bare path on 6 vertices has no 4-core; search must find P6.
        let host: Vec<Edge> = (0..5).map(|i| (i, i + 1)).collect();
        let p6 = PatternGraph::path(6).unwrap();
        let map = embed_tree(&host, 6, &p6).unwrap().unwrap();
        assert!(is_embedding(&host, &p6, &map));
        let p7 = PatternGraph::path(7).unwrap();
        assert_eq!(embed_tree(&host, 8, &p7).unwrap(), None);
    }

    #[test]
    fn star_needs_a_high_degree_vertex() {
        let host = vec![(0, 1), (0, 2), (0, 3), (4, 5)];
        let s3 = PatternGraph::star(3).unwrap();
        let map = embed_tree(&host, 6, &s3).unwrap().unwrap();
        assert_eq!(map[0], 0);
        assert_eq!(embed_tree(&host, 6, &PatternGraph::star(4).unwrap()).unwrap(), None);
    }

    #[test]
    fn rejects_non_trees() {
        let k3 = PatternGraph::clique(3).unwrap();
        assert!(embed_tree(&clique_edges(5), 5, &k3).is_err());
        assert!(embed_tree(&[(0, 0)], 3, &PatternGraph::path(2).unwrap()).is_err());
    }

    #[test]
    fn completion_of_matching() {
        let m3 = PatternGraph::matching(3).unwrap();
        let done = forest_completion(&m3).unwrap();
        assert_eq!(done.forest, m3.edges());
        assert_eq!(done.connectors, vec![(0, 2), (2, 4)]);
        assert!(done.tree.is_tree());
        assert_eq!(done.tree.edge_count(), 5);
    }

    #[test]
    fn completion_of_cyclic_pattern() {
        // Triangle plus a disjoint edge: forest drops one triangle edge.
        let h = PatternGraph::explicit(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let done = forest_completion(&h).unwrap();
        assert_eq!(done.forest, vec![(0, 1), (1, 2), (3, 4)]);
        assert_eq!(done.connectors, vec![(0, 3)]);
        assert!(done.tree.is_tree());
    }
}
