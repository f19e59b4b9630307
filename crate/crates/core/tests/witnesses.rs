mod common;

use common::random_coloring;
use egcolor::constructions::{constant_coloring, one_factorization_coloring, ConstantKind};
use egcolor::matching::greedy_maximal_matching;
use egcolor::rng::SplitMix64;
use egcolor::witness::{
    cherries_to_path, embed_tree, erdos_pair, find_p7_structure, forest_completion, p7_witness,
    string_matching_to_path, trichotomy, CherryConstants, P7Structure, PathBranch,
    TrichotomyConstants, TrichotomyOutcome,
};
use egcolor::{ColorId, Edge, EdgeColoring, PatternGraph};
use proptest::prelude::*;

const TRIALS: u64 = 200;

/// Random coloring with colors `1..=palette`, then the edges `(2i, 2i+1)`
/// for `i < pairs` recolored `0`.
fn planted(n: usize, pairs: usize, palette: usize, rng: &mut SplitMix64) -> (EdgeColoring, Vec<Edge>) {
    let m: Vec<Edge> = (0..pairs).map(|i| (2 * i, 2 * i + 1)).collect();
    let c = EdgeColoring::from_fn(n, |i, j| {
        if m.contains(&(i, j)) {
            0
        } else {
            1 + rng.below(palette as u64)
        }
    })
    .unwrap();
    (c, m)
}

#[test]
fn string_matching_trials() {
    let mut rng = SplitMix64::new(7);
    for _ in 0..TRIALS {
        let n = 4 + rng.below_usize(20);
        let pairs = 1 + rng.below_usize(n / 2);
        let v = 2 + rng.below_usize((2 * pairs + 1).min(n) - 1);
        let (c, m) = planted(n, pairs, 1 + rng.below_usize(30), &mut rng);
        let w = string_matching_to_path(&m, &c, v).unwrap();
        assert!(w.recheck(&c));
        assert_eq!(w.vertices.len(), v);
        assert!(w.repeats + 1 >= (v - 1).div_ceil(2));
    }
}

#[test]
fn cherry_trials() {
    let mut rng = SplitMix64::new(11);
    let mut found = 0;
    for _ in 0..TRIALS {
        let n = 2 * (4 + rng.below_usize(13));
        let c = one_factorization_coloring(n).unwrap();
        let ci = rng.below_usize(n - 1) as ColorId;
        let cj = ((ci as usize + 1 + rng.below_usize(n - 2)) % (n - 1)) as ColorId;
        let (mi, mj) = (c.class_edges(ci), c.class_edges(cj));
        // Largest v whose relaxed overlap requirement n >= 5⌈v/3⌉ holds.
        let vmax = 3 * (n / 5);
        let v = 3 + rng.below_usize(vmax - 2);
        let w = cherries_to_path(&mi, &mj, v, &c, CherryConstants::relaxed(v))
            .unwrap()
            .expect("perfect matchings overlap everywhere");
        found += 1;
        assert!(w.recheck(&c));
        assert_eq!(w.vertices.len(), v);
        assert!(w.repeats + 2 >= 2 * v / 3);
    }
    assert_eq!(found, TRIALS);
}

#[test]
fn p7_trials() {
    let mut rng = SplitMix64::new(13);
    let mut built = 0;
    for _ in 0..TRIALS {
        let n = 8 + rng.below_usize(8);
        let pairs = 4 + rng.below_usize(n / 2 - 3);
        let (c, m) = planted(n, pairs, 1 + rng.below_usize(4), &mut rng);
        let Some(structure) = find_p7_structure(&c, 0, &m).unwrap() else {
            continue;
        };
        if let P7Structure::FiveEdges { edges, .. } = &structure {
            assert!(edges.len() >= 5);
        }
        let w = p7_witness(&c, 0, &m, &structure)
            .unwrap()
            .expect("|M| >= 4 always fits a template");
        assert!(w.witness.recheck(&c));
        assert_eq!(w.witness.vertices.len(), 7);
        assert!(w.witness.repeats >= 3);
        built += 1;
    }
    assert!(built > TRIALS / 2);
}

#[test]
fn p7_every_five_edge_subset_fits() {
    // Exhaustive over 5-edge sets of one second color inside V(M), |M| = 4.
    let m: Vec<Edge> = (0..4).map(|i| (2 * i, 2 * i + 1)).collect();
    let pairs: Vec<Edge> = (0..8)
        .flat_map(|i| ((i + 1)..8).map(move |j| (i, j)))
        .filter(|e| !m.contains(e))
        .collect();
    let total = pairs.len();
    let mut checked = 0;
    let mut pick = vec![0usize, 1, 2, 3, 4];
    loop {
        let chosen: Vec<Edge> = pick.iter().map(|&k| pairs[k]).collect();
        let c = EdgeColoring::from_fn(8, |i, j| {
            if m.contains(&(i, j)) {
                0
            } else if chosen.contains(&(i, j)) {
                1
            } else {
                2 + i * 8 + j
            }
        })
        .unwrap();
        let s = P7Structure::FiveEdges { color: 1, edges: chosen };
        let w = p7_witness(&c, 0, &m, &s).unwrap();
        assert!(w.is_some_and(|w| w.witness.repeats >= 3), "{pick:?}");
        checked += 1;
        // Next 5-combination of 0..total.
        let mut i = 5;
        while i > 0 && pick[i - 1] == total - 5 + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        pick[i - 1] += 1;
        for k in i..5 {
            pick[k] = pick[k - 1] + 1;
        }
    }
    assert_eq!(checked, 42504); // C(24, 5)
}

#[test]
fn trichotomy_trials() {
    let relaxed = TrichotomyConstants::relaxed();
    let mut rng = SplitMix64::new(17);
    for trial in 0..TRIALS {
        let v = 3 + rng.below_usize(6);
        let n = v + 1 + rng.below_usize(64 - v);
        let (c, kind) = match trial % 3 {
            0 => (constant_coloring(n, ConstantKind::Monochromatic).unwrap(), "mono"),
            1 => (constant_coloring(n, ConstantKind::Rainbow).unwrap(), "rainbow"),
            _ => (one_factorization_coloring(n).unwrap(), "factorization"),
        };
        let out = trichotomy(&c, v, &relaxed).unwrap();
        match (kind, &out) {
            ("mono", TrichotomyOutcome::RepeatPath { branch, witness }) => {
                assert_eq!(*branch, PathBranch::BigClass);
                assert!(witness.repeats >= (v - 1) / 2);
            }
            ("rainbow", TrichotomyOutcome::ManyColors { implied_lower_bound, .. }) => {
                assert!(*implied_lower_bound <= c.palette_size());
            }
            ("factorization", TrichotomyOutcome::Inconclusive { .. }) => {
                panic!("factorization n={n} v={v} inconclusive")
            }
            ("factorization", _) => {}
            _ => panic!("{kind} n={n} v={v}: {out:?}"),
        }
        assert!(out.recheck(&c, v, &relaxed), "{kind} n={n} v={v}");
    }
}

#[test]
fn trichotomy_random_colorings_recheck() {
    let relaxed = TrichotomyConstants::relaxed();
    let strict = TrichotomyConstants::strict();
    for seed in 0..40u64 {
        let n = 8 + (seed as usize * 7) % 40;
        let c = random_coloring(n, 1 + (seed as usize % 5), seed);
        for k in [&relaxed, &strict] {
            let out = trichotomy(&c, 4, k).unwrap();
            if !matches!(out, TrichotomyOutcome::Inconclusive { .. }) {
                assert!(out.recheck(&c, 4, k), "seed {seed}");
            }
        }
    }
}

#[test]
fn erdos_pairs_on_factorization_matchings() {
    // Vertex sets of class matchings of a 1-factorization restricted to a
    // window: any two overlap heavily.
    let c = one_factorization_coloring(32).unwrap();
    let sets: Vec<Vec<usize>> = (0..31)
        .map(|col| {
            greedy_maximal_matching(&c.class_edges(col))
                .into_iter()
                .flat_map(|(a, b)| [a, b])
                .collect()
        })
        .collect();
    let pair = erdos_pair(&sets, 32, 2.0).unwrap().unwrap();
    assert!(pair.meets_bound);
    assert_eq!((pair.i, pair.j), (0, 1));
    assert_eq!(pair.intersection.len(), 32);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn erdos_guarantee(n in 4usize..40, seed: u64, d in 1.0f64..3.0) {
        // Sets of exactly ⌈d√n⌉ elements, ⌈(8/d)√n⌉ of them.
        let size = (d * (n as f64).sqrt()).ceil() as usize;
        prop_assume!(size <= n);
        let count = (8.0 / d * (n as f64).sqrt()).ceil() as usize;
        let mut rng = SplitMix64::new(seed);
        let sets: Vec<Vec<usize>> = (0..count)
            .map(|_| {
                let mut all: Vec<usize> = (0..n).collect();
                for i in 0..size {
                    let j = i + rng.below_usize(n - i);
                    all.swap(i, j);
                }
                all.truncate(size);
                all
            })
            .collect();
        let pair = erdos_pair(&sets, n, d).unwrap().unwrap();
        prop_assert!(pair.preconditions_met);
        prop_assert!(pair.meets_bound);
        prop_assert!(pair.intersection.len() as f64 >= d * d / 2.0);
    }

    #[test]
    fn forest_completion_spans(v in 2usize..10, seed: u64) {
        let mut rng = SplitMix64::new(seed);
        let mut edges = Vec::new();
        for a in 0..v {
            for b in (a + 1)..v {
                if rng.below(3) == 0 {
                    edges.push((a, b));
                }
            }
        }
        prop_assume!(!edges.is_empty());
        let h = PatternGraph::explicit(v, &edges).unwrap();
        let done = forest_completion(&h).unwrap();
        prop_assert!(done.tree.is_tree());
        prop_assert_eq!(done.forest.len() + h.components(), v);
        prop_assert_eq!(done.connectors.len(), h.components() - 1);
        prop_assert!(done.forest.iter().all(|e| h.edges().contains(e)));
    }

    #[test]
    fn dense_hosts_contain_every_small_tree(n in 6usize..16, v in 2usize..6, seed: u64) {
        // Random tree on v vertices; host with more than (v-2)·n edges.
        let mut rng = SplitMix64::new(seed);
        let tree_edges: Vec<Edge> = (1..v).map(|x| (rng.below_usize(x), x)).collect();
        let tree = PatternGraph::explicit(v, &tree_edges).unwrap();
        let mut host: Vec<Edge> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        let keep = (v - 2) * n + 1;
        prop_assume!(keep <= host.len());
        for i in 0..host.len() {
            let j = i + rng.below_usize(host.len() - i);
            host.swap(i, j);
        }
        host.truncate(keep);
        let map = embed_tree(&host, n, &tree).unwrap();
        prop_assert!(map.is_some());
        let map = map.unwrap();
        for &(a, b) in tree.edges() {
            let e = (map[a].min(map[b]), map[a].max(map[b]));
            prop_assert!(host.contains(&e));
        }
    }
}
