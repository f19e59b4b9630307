//! Constructive lower-bound procedures.
//!
//! Each procedure returns a witness that can be re-checked against the
//! coloring it came from: a path of `K_n` whose repeat count is recomputed
//! from the actual edge colors, a family of monochromatic matchings, or the
//! audited counts behind a "many colors" conclusion.

mod bipartite;
mod cherries;
mod erdos;
mod p7;
mod tree;
mod trichotomy;

pub use bipartite::{peel_bipartite, AuxiliaryBipartite};
pub use cherries::{cherries_to_path, CherryConstants};
pub use erdos::{erdos_pair, ErdosPair};
pub use p7::{find_p7_structure, p7_witness, P7Structure, P7Template, P7Witness};
pub use tree::{embed_tree, forest_completion, ForestCompletion};
pub use trichotomy::{
    trichotomy, KScan, MatchingClass, PathBranch, TrichotomyConstants, TrichotomyOutcome,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColorId, Edge, EdgeColoring};
use crate::matching::is_matching;

/// A path in `K_n` with the colors along it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepeatPathWitness {
    pub vertices: Vec<usize>,
    pub color_pattern: Vec<ColorId>,
    pub repeats: usize,
}

impl RepeatPathWitness {
    /// Reads the colors along `vertices` from the coloring.
    pub fn from_path(coloring: &EdgeColoring, vertices: Vec<usize>) -> Result<Self> {
        let n = coloring.n();
        if vertices.iter().any(|&x| x >= n) {
            return Err(Error::invalid("path vertex out of range"));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return Err(Error::invalid("path repeats a vertex"));
        }
        let color_pattern: Vec<ColorId> = vertices
            .windows(2)
            .map(|w| coloring.color(w[0], w[1]))
            .collect();
        let repeats = repeats_of(&color_pattern);
        Ok(Self {
            vertices,
            color_pattern,
            repeats,
        })
    }

    /// Re-derives the colors and repeat count from `coloring` and compares.
    pub fn recheck(&self, coloring: &EdgeColoring) -> bool {
        match Self::from_path(coloring, self.vertices.clone()) {
            Ok(fresh) => fresh == *self,
            Err(_) => false,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.color_pattern.len()
    }
}

/// `e - (distinct colors)`.
pub(crate) fn repeats_of(colors: &[ColorId]) -> usize {
    let mut distinct = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    colors.len() - distinct.len()
}

/// Checks that `edges` form a matching of one color; returns that color.
pub(crate) fn monochromatic_matching(coloring: &EdgeColoring, edges: &[Edge]) -> Result<ColorId> {
    let n = coloring.n();
    if edges.iter().any(|&(a, b)| a >= n || b >= n || a == b) {
        return Err(Error::invalid("matching edge out of range"));
    }
    if !is_matching(edges) {
        return Err(Error::invalid("edges do not form a matching"));
    }
    let first = edges.first().ok_or_else(|| Error::invalid("empty matching"))?;
    let color = coloring.color(first.0, first.1);
    if edges.iter().any(|&(a, b)| coloring.color(a, b) != color) {
        return Err(Error::invalid("matching is not monochromatic"));
    }
    Ok(color)
}

/// Strings the first `⌊v/2⌋` edges of a monochromatic matching into a
/// `P_v`, joined by connector edges of arbitrary colors; odd `v` gets the
/// lowest unused vertex appended. At least `⌈(v-1)/2⌉ - 1` repeats.
pub fn string_matching_to_path(
    matching: &[Edge],
    coloring: &EdgeColoring,
    v: usize,
) -> Result<RepeatPathWitness> {
    if v < 2 {
        return Err(Error::invalid("need v >= 2"));
    }
    if coloring.n() < v {
        return Err(Error::invalid(format!("need n >= v, got n = {}", coloring.n())));
    }
    let half = v / 2;
    if matching.len() < half {
        return Err(Error::invalid(format!(
            "need a matching of size {half}, got {}",
            matching.len()
        )));
    }
    let used = &matching[..half];
    monochromatic_matching(coloring, used)?;
    let mut vertices: Vec<usize> = used
        .iter()
        .flat_map(|&(a, b)| [a.min(b), a.max(b)])
        .collect();
    if v % 2 == 1 {
        let extra = (0..coloring.n())
            .find(|x| !vertices.contains(x))
            .expect("n >= v leaves a free vertex");
        vertices.push(extra);
    }
    RepeatPathWitness::from_path(coloring, vertices)
}
