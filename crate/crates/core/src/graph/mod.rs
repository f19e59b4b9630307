//! Complete host graphs, pattern graphs, colorings and copy enumeration.

mod coloring;
mod copies;
pub mod io;
mod pattern;

pub use coloring::{ColorClassView, CopyColorStats, EdgeColoring};
pub use copies::{copy_edge_indices, enumerate_copies, CopyEnumerator, CopyPlan, SubgraphCopy};
pub use pattern::{PatternGraph, PatternKind};

use crate::error::{Error, Result};

/// A vertex pair `(u, w)` with `u < w`.
pub type Edge = (usize, usize);

/// Normalized color label, always in `0..palette_size`.
pub type ColorId = u32;

/// Number of edges of `K_n`.
pub const fn num_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Row-major index of the unordered pair `{u, w}` among the `C(n, 2)` pairs
/// `i < j` of `K_n`: `i * (2n - i - 1) / 2 + (j - i - 1)`.
pub fn edge_index(u: usize, w: usize, n: usize) -> Result<usize> {
    if u == w {
        return Err(Error::invalid(format!("self-loop at vertex {u}")));
    }
    if u >= n || w >= n {
        return Err(Error::invalid(format!("pair ({u}, {w}) out of range for n = {n}")));
    }
    Ok(index_unchecked(u, w, n))
}

#[inline]
pub(crate) fn index_unchecked(u: usize, w: usize, n: usize) -> usize {
    let (i, j) = if u < w { (u, w) } else { (w, u) };
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`edge_index`].
pub fn edge_pair(index: usize, n: usize) -> Result<Edge> {
    if index >= num_edges(n) {
        return Err(Error::invalid(format!(
            "edge index {index} out of range for n = {n}"
        )));
    }
    let mut rest = index;
    let mut i = 0;
    loop {
        let row = n - i - 1;
        if rest < row {
            return Ok((i, i + 1 + rest));
        }
        rest -= row;
        i += 1;
    }
}

/// Distinct colors and repeats of one copy under a coloring.
pub fn copy_stats(coloring: &EdgeColoring, copy: &SubgraphCopy) -> CopyColorStats {
    coloring.copy_stats(copy)
}

/// Normalizes a pair to `(min, max)`.
#[inline]
pub fn ordered(u: usize, w: usize) -> Edge {
    if u < w {
        (u, w)
    } else {
        (w, u)
    }
}
