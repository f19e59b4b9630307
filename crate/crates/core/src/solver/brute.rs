//! Exhaustive oracle: every set partition of the edge set of `K_n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{num_edges, PatternGraph};

const MAX_EDGES: usize = 10;

/// Edge-index sets of all copies, from every injective vertex map.
fn naive_copies(pattern: &PatternGraph, n: usize) -> Vec<Vec<usize>> {
    let v = pattern.vertex_count();
    let mut seen = BTreeSet::new();
    let mut map = Vec::with_capacity(v);
    fn extend(
        pattern: &PatternGraph,
        n: usize,
        map: &mut Vec<usize>,
        seen: &mut BTreeSet<Vec<usize>>,
    ) {
        if map.len() == pattern.vertex_count() {
            let mut idx: Vec<usize> = pattern
                .edges()
                .iter()
                .map(|&(a, b)| {
                    let (i, j) = (map[a].min(map[b]), map[a].max(map[b]));
                    // Position of (i, j) in row-major order, counted directly.
                    (0..i).map(|r| n - r - 1).sum::<usize>() + (j - i - 1)
                })
                .collect();
            idx.sort_unstable();
            seen.insert(idx);
            return;
        }
        for x in 0..n {
            if !map.contains(&x) {
                map.push(x);
                extend(pattern, n, map, seen);
                map.pop();
            }
        }
    }
    if v <= n {
        extend(pattern, n, &mut map, &mut seen);
    }
    seen.into_iter().collect()
}

/// `f(K_n, H, q)` by enumerating all restricted-growth strings over the
/// `C(n, 2)` edges. Refuses hosts with more than 10 edges.
pub fn brute_force_f(n: usize, pattern: &PatternGraph, q: usize) -> Result<usize> {
    let e = num_edges(n);
    if n < 2 {
        return Err(Error::invalid("need n >= 2"));
    }
    if e > MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "brute force handles at most {MAX_EDGES} edges, K_{n} has {e}"
        )));
    }
    if q < 1 || q > pattern.edge_count() {
        return Err(Error::invalid("need 1 <= q <= e(H)"));
    }
    let copies = naive_copies(pattern, n);
    let mut rgs = vec![0usize; e];
    let mut best = usize::MAX;
    loop {
        let ok = copies.iter().all(|copy| {
            let mut colors: Vec<usize> = copy.iter().map(|&i| rgs[i]).collect();
            colors.sort_unstable();
            colors.dedup();
            colors.len() >= q
        });
        if ok {
            best = best.min(rgs.iter().max().map_or(0, |m| m + 1));
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    Ok(best)
}

/// Advances to the next restricted-growth string in lexicographic order.
fn next_rgs(rgs: &mut [usize]) -> bool {
    for i in (1..rgs.len()).rev() {
        let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
        if rgs[i] <= prefix_max {
            rgs[i] += 1;
            for x in &mut rgs[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        for (len, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (6, 203)] {
            let mut rgs = vec![0; len];
            let mut count = 1;
            while next_rgs(&mut rgs) {
                count += 1;
            }
            assert_eq!(count, bell);
        }
    }

    #[test]
    fn copy_counts() {
        assert_eq!(naive_copies(&PatternGraph::path(3).unwrap(), 4).len(), 12);
        assert_eq!(naive_copies(&PatternGraph::matching(2).unwrap(), 4).len(), 3);
        assert_eq!(naive_copies(&PatternGraph::clique(3).unwrap(), 5).len(), 10);
    }

    #[test]
    fn examples() {
        assert_eq!(brute_force_f(4, &PatternGraph::path(3).unwrap(), 2).unwrap(), 3);
        assert_eq!(brute_force_f(4, &PatternGraph::matching(2).unwrap(), 2).unwrap(), 2);
        assert_eq!(brute_force_f(3, &PatternGraph::clique(3).unwrap(), 3).unwrap(), 3);
        assert!(matches!(
            brute_force_f(6, &PatternGraph::path(3).unwrap(), 2),
            Err(Error::TooLarge(_))
        ));
    }
}
