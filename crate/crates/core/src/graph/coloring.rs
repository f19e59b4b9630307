use serde::{Deserialize, Serialize};

use super::copies::SubgraphCopy;
use super::{index_unchecked, num_edges, ColorId, Edge};
use crate::error::{Error, Result};

/// A full edge coloring of `K_n`, stored densely by [`super::edge_index`].
///
/// Color labels are normalized on construction: the distinct raw labels are
/// replaced by their rank, so the palette is exactly `0..palette_size` and
/// the relative order of raw labels is preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    colors: Vec<ColorId>,
    palette_size: usize,
}

impl EdgeColoring {
    /// Builds a coloring from raw labels in edge-index order.
    pub fn from_raw<T>(n: usize, raw: &[T]) -> Result<Self>
    where
        T: Copy + Ord,
    {
        if n < 1 {
            return Err(Error::invalid("n must be positive"));
        }
        if raw.len() != num_edges(n) {
            return Err(Error::invalid(format!(
                "expected {} edge colors for n = {n}, got {}",
                num_edges(n),
                raw.len()
            )));
        }
        let mut distinct: Vec<T> = raw.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = raw
            .iter()
            .map(|c| distinct.binary_search(c).expect("label present") as ColorId)
            .collect();
        Ok(Self {
            n,
            colors,
            palette_size: distinct.len(),
        })
    }

    /// Builds a coloring by evaluating `color(i, j)` for every `i < j`.
    pub fn from_fn<T, F>(n: usize, mut color: F) -> Result<Self>
    where
        T: Copy + Ord,
        F: FnMut(usize, usize) -> T,
    {
        let mut raw = Vec::with_capacity(num_edges(n));
        for i in 0..n {
            for j in (i + 1)..n {
                raw.push(color(i, j));
            }
        }
        Self::from_raw(n, &raw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn num_edges(&self) -> usize {
        self.colors.len()
    }

    /// Colors in edge-index order.
    pub fn colors(&self) -> &[ColorId] {
        &self.colors
    }

    /// Color of `{u, w}`. Panics on a loop or out-of-range vertex.
    #[inline]
    pub fn color(&self, u: usize, w: usize) -> ColorId {
        assert!(u != w && u < self.n && w < self.n, "bad pair ({u}, {w})");
        self.colors[index_unchecked(u, w, self.n)]
    }

    #[inline]
    pub fn color_at(&self, index: usize) -> ColorId {
        self.colors[index]
    }

    /// `((i, j), color)` for every edge, in edge-index order.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, ColorId)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
            .zip(self.colors.iter().copied())
    }

    /// `E_c`, ascending.
    pub fn class_edges(&self, color: ColorId) -> Vec<Edge> {
        self.edges()
            .filter(|&(_, c)| c == color)
            .map(|(e, _)| e)
            .collect()
    }

    /// One view per color, indexed by color.
    pub fn classes(&self) -> Vec<ColorClassView> {
        let mut views: Vec<ColorClassView> = (0..self.palette_size)
            .map(|c| ColorClassView {
                color: c as ColorId,
                edges: Vec::new(),
                degrees: vec![0; self.n],
            })
            .collect();
        for ((i, j), c) in self.edges() {
            let view = &mut views[c as usize];
            view.edges.push((i, j));
            view.degrees[i] += 1;
            view.degrees[j] += 1;
        }
        views
    }

    /// Number of distinct colors among the given edge indices.
    pub fn distinct_among(&self, edge_indices: &[usize]) -> usize {
        let mut seen: Vec<ColorId> = Vec::with_capacity(edge_indices.len());
        for &e in edge_indices {
            let c = self.colors[e];
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        seen.len()
    }

    /// `(q, r)` of a copy: distinct colors on its edge images and the
    /// resulting number of repeats.
    pub fn copy_stats(&self, copy: &SubgraphCopy) -> CopyColorStats {
        let mut seen: Vec<ColorId> = Vec::with_capacity(copy.edge_images.len());
        for &(a, b) in &copy.edge_images {
            let c = self.color(a, b);
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        CopyColorStats::new(copy.edge_images.len(), seen.len())
    }

    /// Same coloring with the color of one edge replaced (then renormalized).
    pub fn with_edge_color(&self, u: usize, w: usize, color: usize) -> Result<Self> {
        let idx = super::edge_index(u, w, self.n)?;
        let mut raw: Vec<usize> = self.colors.iter().map(|&c| c as usize).collect();
        raw[idx] = color;
        Self::from_raw(self.n, &raw)
    }
}

/// The edges of one color class and the `c`-degree of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClassView {
    pub color: ColorId,
    pub edges: Vec<Edge>,
    degrees: Vec<usize>,
}

impl ColorClassView {
    /// `|E_c|`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// `d_c(u)`.
    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u]
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
}

/// Per-copy color statistics; `repeats + distinct_colors = e(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyColorStats {
    pub distinct_colors: usize,
    pub repeats: usize,
}

impl CopyColorStats {
    pub fn new(edge_count: usize, distinct_colors: usize) -> Self {
        debug_assert!(distinct_colors <= edge_count);
        Self {
            distinct_colors,
            repeats: edge_count - distinct_colors,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_preserves_order() {
        let c = EdgeColoring::from_raw(3, &[7u32, 3, 7]).unwrap();
        assert_eq!(c.colors(), &[1, 0, 1]);
        assert_eq!(c.palette_size(), 2);
        assert!(EdgeColoring::from_raw(3, &[0u32, 1]).is_err());
    }

    #[test]
    fn class_sizes_sum_to_edge_count() {
        let c = EdgeColoring::from_fn(6, |i, j| (i + j) % 4).unwrap();
        let classes = c.classes();
        assert_eq!(classes.iter().map(|v| v.size()).sum::<usize>(), 15);
        for view in &classes {
            for u in 0..6 {
                let d = view.edges.iter().filter(|&&(a, b)| a == u || b == u).count();
                assert_eq!(view.degree(u), d);
            }
        }
    }
}
