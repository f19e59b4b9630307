//! The three-way case analysis for paths: a colored `P_v` with many repeats,
//! many colors in total, or many color classes carrying large matchings.

use serde::Serialize;

use super::bipartite::{peel_bipartite, AuxiliaryBipartite};
use super::tree::embed_tree;
use super::RepeatPathWitness;
use crate::error::{Error, Result};
use crate::graph::{num_edges, ColorId, Edge, EdgeColoring, PatternGraph};
use crate::matching::{greedy_maximal_matching, is_matching};

/// Thresholds of the case analysis. `strict()` carries the constants under
/// which every branch is guaranteed to succeed for large `n`; `relaxed()`
/// lowers them so that small instances exercise every branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrichotomyConstants {
    /// Classes with at least `⌈num/den · v·n⌉` edges are searched for a
    /// monochromatic `P_v` first.
    pub big_class_num: usize,
    pub big_class_den: usize,
    /// Scanned `k` start at `k_min_factor · v²`.
    pub k_min_factor: usize,
    /// `k` qualifies when `|C_k| >= n² / (class_count_divisor · k · log2 n)`.
    pub class_count_divisor: usize,
    /// A class is matching-rich when its greedy maximal matching has at
    /// least `k / (matching_divisor · v)` edges.
    pub matching_divisor: usize,
    /// Auxiliary right side: pairs `(u, c)` with `d_c(u) >= degree_factor · v`.
    pub degree_factor: usize,
}

impl TrichotomyConstants {
    pub fn strict() -> Self {
        Self {
            big_class_num: 1,
            big_class_den: 1,
            k_min_factor: 16,
            class_count_divisor: 8,
            matching_divisor: 16,
            degree_factor: 4,
        }
    }

    /// `matching_divisor >= 4 · degree_factor` keeps the half-cover count of
    /// the auxiliary graph intact. A class of `⌈vn/2⌉` edges has average
    /// degree `v`, hence contains every tree on `v` vertices.
    pub fn relaxed() -> Self {
        Self {
            big_class_num: 1,
            big_class_den: 2,
            k_min_factor: 4,
            class_count_divisor: 8,
            matching_divisor: 8,
            degree_factor: 2,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.big_class_den == 0
            || self.k_min_factor == 0
            || self.class_count_divisor == 0
            || self.matching_divisor == 0
            || self.degree_factor == 0
        {
            return Err(Error::invalid("trichotomy constants must be positive"));
        }
        Ok(())
    }

    fn big_class(&self, v: usize, n: usize) -> usize {
        (self.big_class_num * v * n).div_ceil(self.big_class_den)
    }

    fn k_min(&self, v: usize) -> usize {
        self.k_min_factor * v * v
    }

    fn count_threshold(&self, n: usize, k: usize) -> f64 {
        (n * n) as f64 / (self.class_count_divisor as f64 * k as f64 * (n as f64).log2())
    }

    fn matching_rich(&self, size: usize, k: usize, v: usize) -> bool {
        size * self.matching_divisor * v >= k
    }
}

impl Default for TrichotomyConstants {
    fn default() -> Self {
        Self::strict()
    }
}

/// One scanned `k`: how many classes have at least `k` edges, against the
/// threshold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KScan {
    pub k: usize,
    pub classes_at_least_k: usize,
    pub threshold: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingClass {
    pub color: ColorId,
    pub matching: Vec<Edge>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathBranch {
    /// Monochromatic `P_v` inside one big class.
    BigClass,
    /// Path alternating between host vertices and `(vertex, color)` pairs
    /// of the peeled auxiliary graph.
    Auxiliary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum TrichotomyOutcome {
    /// A `P_v` with at least `⌊(v-1)/2⌋` repeats.
    RepeatPath {
        branch: PathBranch,
        witness: RepeatPathWitness,
    },
    /// No scanned `k` has enough classes of size `>= k`. The counts bound
    /// the palette from below by `implied_lower_bound`.
    ManyColors {
        color_count: usize,
        scanned: Vec<KScan>,
        implied_lower_bound: usize,
    },
    /// At least half the classes of size `>= k` have a matching of at least
    /// `required_matching` edges.
    ManyMatchingClasses {
        k: usize,
        classes_at_least_k: usize,
        required_matching: usize,
        classes: Vec<MatchingClass>,
    },
    /// The auxiliary graph emptied under peeling or the greedy path got
    /// stuck. Only possible when `n` is too small for the constants.
    Inconclusive { k: usize, reason: String },
}

impl TrichotomyOutcome {
    /// Re-derives the claim from the coloring. `Inconclusive` certifies
    /// nothing and never rechecks.
    pub fn recheck(&self, coloring: &EdgeColoring, v: usize, constants: &TrichotomyConstants) -> bool {
        let n = coloring.n();
        match self {
            TrichotomyOutcome::RepeatPath { branch, witness } => {
                let floor = match branch {
                    PathBranch::BigClass => v - 2,
                    PathBranch::Auxiliary => (v - 1) / 2,
                };
                witness.vertices.len() == v && witness.repeats >= floor && witness.recheck(coloring)
            }
            TrichotomyOutcome::ManyColors {
                color_count,
                scanned,
                implied_lower_bound,
            } => {
                let fresh = scan_sizes(coloring, v, constants);
                *color_count == coloring.palette_size()
                    && fresh.len() == scanned.len()
                    && fresh.iter().zip(scanned).all(|(a, b)| {
                        a.k == b.k
                            && a.classes_at_least_k == b.classes_at_least_k
                            && (a.classes_at_least_k as f64) < a.threshold
                    })
                    && *implied_lower_bound == palette_floor(n, v, constants, scanned.len())
                    && implied_lower_bound <= color_count
            }
            TrichotomyOutcome::ManyMatchingClasses {
                k,
                classes_at_least_k,
                required_matching,
                classes,
            } => {
                let sizes = class_sizes(coloring);
                let count = sizes.iter().filter(|&&s| s >= *k).count();
                let mut colors: Vec<ColorId> = classes.iter().map(|c| c.color).collect();
                colors.sort_unstable();
                colors.dedup();
                count == *classes_at_least_k
                    && count as f64 >= constants.count_threshold(n, *k)
                    && colors.len() == classes.len()
                    && 2 * classes.len() >= count
                    && *required_matching == matching_floor(*k, v, constants)
                    && classes.iter().all(|class| {
                        (class.color as usize) < sizes.len()
                            && sizes[class.color as usize] >= *k
                            && class.matching.len() >= *required_matching
                            && is_matching(&class.matching)
                            && class
                                .matching
                                .iter()
                                .all(|&(a, b)| a < n && b < n && a != b && coloring.color(a, b) == class.color)
                    })
            }
            TrichotomyOutcome::Inconclusive { .. } => false,
        }
    }
}

fn class_sizes(coloring: &EdgeColoring) -> Vec<usize> {
    let mut sizes = vec![0; coloring.palette_size()];
    for &c in coloring.colors() {
        sizes[c as usize] += 1;
    }
    sizes
}

fn first_k(v: usize, constants: &TrichotomyConstants) -> usize {
    constants.k_min(v).next_power_of_two()
}

/// `k = k0, 2k0, 4k0, ...` up to the largest class size.
fn scan_sizes(coloring: &EdgeColoring, v: usize, constants: &TrichotomyConstants) -> Vec<KScan> {
    let sizes = class_sizes(coloring);
    let largest = sizes.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    let mut k = first_k(v, constants);
    while k <= largest {
        out.push(KScan {
            k,
            classes_at_least_k: sizes.iter().filter(|&&s| s >= k).count(),
            threshold: constants.count_threshold(coloring.n(), k),
        });
        k *= 2;
    }
    out
}

/// Classes of size in `[k, 2k)` hold fewer than `2k · |C_k| <
/// 2n² / (divisor · log2 n)` edges per scanned range; every other class is
/// smaller than `k0`, so the palette is at least the rest over `k0`.
fn palette_floor(n: usize, v: usize, constants: &TrichotomyConstants, ranges: usize) -> usize {
    let k0 = first_k(v, constants) as f64;
    let per_range = 2.0 * (n * n) as f64 / (constants.class_count_divisor as f64 * (n as f64).log2());
    let rest = num_edges(n) as f64 - ranges as f64 * per_range;
    if rest <= 0.0 {
        0
    } else {
        (rest / k0).floor() as usize
    }
}

fn matching_floor(k: usize, v: usize, constants: &TrichotomyConstants) -> usize {
    k.div_ceil(constants.matching_divisor * v)
}

/// Runs the case analysis for `P_v` on `coloring`.
pub fn trichotomy(
    coloring: &EdgeColoring,
    v: usize,
    constants: &TrichotomyConstants,
) -> Result<TrichotomyOutcome> {
    constants.validate()?;
    let n = coloring.n();
    if v < 3 {
        return Err(Error::invalid("need v >= 3"));
    }
    if n < v {
        return Err(Error::invalid(format!("need n >= v, got n = {n}, v = {v}")));
    }
    let classes = coloring.classes();

    let big = constants.big_class(v, n);
    let path = PatternGraph::path(v)?;
    for class in classes.iter().filter(|c| c.size() >= big) {
        if let Some(map) = embed_tree(&class.edges, n, &path)? {
            let witness = RepeatPathWitness::from_path(coloring, map)?;
            return Ok(TrichotomyOutcome::RepeatPath {
                branch: PathBranch::BigClass,
                witness,
            });
        }
    }

    let scanned = scan_sizes(coloring, v, constants);
    let chosen = scanned
        .iter()
        .find(|s| s.classes_at_least_k as f64 >= s.threshold)
        .map(|s| s.k);
    let Some(k) = chosen else {
        let implied = palette_floor(n, v, constants, scanned.len());
        return Ok(TrichotomyOutcome::ManyColors {
            color_count: coloring.palette_size(),
            scanned,
            implied_lower_bound: implied,
        });
    };

    let c_k: Vec<_> = classes.iter().filter(|c| c.size() >= k).collect();
    let required = matching_floor(k, v, constants);
    let mut rich = Vec::new();
    let mut poor = Vec::new();
    for class in &c_k {
        let matching = greedy_maximal_matching(&class.edges);
        if constants.matching_rich(matching.len(), k, v) {
            rich.push(MatchingClass {
                color: class.color,
                matching,
            });
        } else {
            poor.push(class.color);
        }
    }
    if 2 * rich.len() >= c_k.len() {
        return Ok(TrichotomyOutcome::ManyMatchingClasses {
            k,
            classes_at_least_k: c_k.len(),
            required_matching: required,
            classes: rich,
        });
    }

    let aux = AuxiliaryBipartite::from_coloring(coloring, &poor, constants.degree_factor * v);
    let peeled = peel_bipartite(&aux, v);
    if peeled.is_empty() {
        return Ok(TrichotomyOutcome::Inconclusive {
            k,
            reason: "auxiliary graph is empty after peeling".into(),
        });
    }
    match auxiliary_path(&peeled, v) {
        Some(vertices) => Ok(TrichotomyOutcome::RepeatPath {
            branch: PathBranch::Auxiliary,
            witness: RepeatPathWitness::from_path(coloring, vertices)?,
        }),
        None => Ok(TrichotomyOutcome::Inconclusive {
            k,
            reason: "greedy auxiliary path got stuck".into(),
        }),
    }
}

/// Greedy walk `x1 (u1,c1) x2 (u2,c2) ...` in the peeled graph, keeping the
/// host vertices `x_i`, `u_i` distinct, read off as `x1 u1 x2 u2 ...`.
/// Consecutive host edges `x_i u_i` and `u_i x_{i+1}` share color `c_i`.
fn auxiliary_path(graph: &AuxiliaryBipartite, v: usize) -> Option<Vec<usize>> {
    let start = (0..graph.left_count()).find(|&x| !graph.left_neighbors(x).is_empty())?;
    let mut path = vec![start];
    let mut x = start;
    while path.len() < v {
        let j = graph
            .left_neighbors(x)
            .iter()
            .copied()
            .find(|&j| !path.contains(&graph.right_nodes()[j].0))?;
        let u = graph.right_nodes()[j].0;
        path.push(u);
        if path.len() == v {
            break;
        }
        x = graph
            .right_neighbors(j)
            .iter()
            .copied()
            .find(|w| !path.contains(w))?;
        path.push(x);
    }
    Some(path)
}
