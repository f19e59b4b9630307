//! Paths built from cherries across two monochromatic matchings.

use serde::Serialize;

use super::{monochromatic_matching, RepeatPathWitness};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeColoring};

/// Minimum overlap `|V(M_i) ∩ V(M_j)|` required before cherries are picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CherryConstants {
    pub min_overlap: usize,
}

impl CherryConstants {
    /// `8v`.
    pub fn strict(v: usize) -> Self {
        Self { min_overlap: 8 * v }
    }

    /// `5⌈v/3⌉`: greedy selection keeps at least one cherry per five
    /// overlap vertices, which is exactly enough.
    pub fn relaxed(v: usize) -> Self {
        Self {
            min_overlap: 5 * v.div_ceil(3),
        }
    }
}

fn mates(matching: &[Edge], n: usize) -> Vec<Option<usize>> {
    let mut mate = vec![None; n];
    for &(a, b) in matching {
        mate[a] = Some(b);
        mate[b] = Some(a);
    }
    mate
}

/// Builds `P_v` from `⌈v/3⌉` vertex-disjoint cherries `a - w - b` with
/// `w ∈ V(M_i) ∩ V(M_j)`, `aw ∈ M_i`, `wb ∈ M_j`, strung together and
/// truncated to `v` vertices. At least `⌊2v/3⌋ - 2` repeats.
///
/// `Ok(None)` when the overlap is below `constants.min_overlap` or too few
/// disjoint cherries exist.
pub fn cherries_to_path(
    m_i: &[Edge],
    m_j: &[Edge],
    v: usize,
    coloring: &EdgeColoring,
    constants: CherryConstants,
) -> Result<Option<RepeatPathWitness>> {
    if v < 3 {
        return Err(Error::invalid("need v >= 3"));
    }
    let n = coloring.n();
    let ci = monochromatic_matching(coloring, m_i)?;
    let cj = monochromatic_matching(coloring, m_j)?;
    if ci == cj {
        return Err(Error::invalid("the two matchings must have different colors"));
    }
    let mate_i = mates(m_i, n);
    let mate_j = mates(m_j, n);
    let overlap: Vec<usize> = (0..n)
        .filter(|&w| mate_i[w].is_some() && mate_j[w].is_some())
        .collect();
    if overlap.len() < constants.min_overlap {
        return Ok(None);
    }

    let wanted = v.div_ceil(3);
    let mut used = vec![false; n];
    let mut path = Vec::with_capacity(3 * wanted);
    for &w in &overlap {
        if path.len() == 3 * wanted {
            break;
        }
        let (a, b) = (mate_i[w].expect("in overlap"), mate_j[w].expect("in overlap"));
        if used[a] || used[w] || used[b] {
            continue;
        }
        used[a] = true;
        used[w] = true;
        used[b] = true;
        path.extend([a, w, b]);
    }
    if path.len() < 3 * wanted {
        return Ok(None);
    }
    path.truncate(v);
    RepeatPathWitness::from_path(coloring, path).map(Some)
}
