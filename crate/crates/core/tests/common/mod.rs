//! Independent reference implementations used as test oracles. Nothing here
//! calls the library's enumeration, verification or search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use egcolor::rng::SplitMix64;
use egcolor::{EdgeColoring, PatternGraph};

/// Row-major pair index, counted by walking the rows.
pub fn pair_index(a: usize, b: usize, n: usize) -> usize {
    let (i, j) = (a.min(b), a.max(b));
    (0..i).map(|r| n - r - 1).sum::<usize>() + (j - i - 1)
}

/// Every copy of `H` in `K_n` as a sorted set of edge indices, from all
/// injective vertex maps.
pub fn naive_copies(h: &PatternGraph, n: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut map = Vec::new();
    fn go(h: &PatternGraph, n: usize, map: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if map.len() == h.vertex_count() {
            let mut idx: Vec<usize> = h
                .edges()
                .iter()
                .map(|&(a, b)| pair_index(map[a], map[b], n))
                .collect();
            idx.sort_unstable();
            out.insert(idx);
            return;
        }
        for x in 0..n {
            if !map.contains(&x) {
                map.push(x);
                go(h, n, map, out);
                map.pop();
            }
        }
    }
    if h.vertex_count() <= n {
        go(h, n, &mut map, &mut out);
    }
    out
}

/// Fewest colors on any copy, or `None` if there is no copy.
pub fn naive_min_colors(c: &EdgeColoring, h: &PatternGraph) -> Option<usize> {
    naive_copies(h, c.n())
        .iter()
        .map(|copy| {
            let mut cols: Vec<u32> = copy.iter().map(|&i| c.colors()[i]).collect();
            cols.sort_unstable();
            cols.dedup();
            cols.len()
        })
        .min()
}

pub fn random_coloring(n: usize, palette: usize, seed: u64) -> EdgeColoring {
    let mut rng = SplitMix64::new(seed);
    EdgeColoring::from_fn(n, |_, _| rng.below(palette as u64)).unwrap()
}

pub fn falling(n: usize, k: usize) -> usize {
    (0..k).map(|i| n - i).product()
}

pub fn pattern(name: &str) -> PatternGraph {
    name.parse().unwrap()
}

/// Growth classes of `f(K_n, P_v, q)` for `q = 2, ..., v-1`, one letter per
/// `q`: `L` linear, `I` strictly between, `Q` quadratic.
pub const PATH_TABLE: [(usize, &str); 10] = [
    (3, "L"),
    (4, "LQ"),
    (5, "LLQ"),
    (6, "LLQQ"),
    (7, "LLIQQ"),
    (8, "LLLQQQ"),
    (9, "LLLIQQQ"),
    (10, "LLLLQQQQ"),
    (11, "LLLLIQQQQ"),
    (12, "LLLLLQQQQQ"),
];

/// Intermediate cells: `(v, lower exponent, lower log power, upper exponent)`
/// as `(numerator, denominator)` pairs.
pub type Frac = (i64, i64);

pub const PATH_GAPS: [(usize, Frac, Frac, Frac); 3] = [
    (7, (4, 3), (-2, 3), (5, 3)),
    (9, (3, 2), (-1, 1), (7, 4)),
    (11, (3, 2), (-1, 1), (9, 5)),
];

/// A random forest on `2..=12` vertices with at least one edge.
pub fn random_forest(seed: u64) -> PatternGraph {
    let mut rng = SplitMix64::new(seed);
    let v = 2 + rng.below_usize(11);
    let mut edges = vec![(0, 1)];
    for x in 2..v {
        if rng.below(3) != 0 {
            edges.push((rng.below_usize(x), x));
        }
    }
    PatternGraph::explicit(v, &edges).unwrap()
}
