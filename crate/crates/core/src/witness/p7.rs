//! Seven-vertex paths with at most three colors, built around a large
//! monochromatic matching.

use serde::Serialize;

use super::{monochromatic_matching, RepeatPathWitness};
use crate::error::{Error, Result};
use crate::graph::{ordered, ColorId, Edge, EdgeColoring};

/// What was found inside `V(M)` for a matching `M` of color `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum P7Structure {
    /// A `c`-colored edge between two different `M`-edges.
    ExtraEdge { edge: Edge },
    /// Edges of one color `c' != c`, all with both ends in `V(M)`.
    FiveEdges { color: ColorId, edges: Vec<Edge> },
}

/// Layout of the resulting path (`c`-edges of `M` drawn vertically).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum P7Template {
    /// `x' x y y' p p' z`: three `M`-edges and the extra `c`-edge.
    ExtraEdge,
    /// `a' a b d d' f f'`: two `c'`-edges sharing `b`.
    SharedEndpoint,
    /// `a' a b b' d f f'`: `c'`-edges `ab` and `b'd`.
    MateLinked,
    /// `a' a b b' d' d e`: two `c'`-edges on four distinct `M`-edges.
    Disjoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P7Witness {
    pub template: P7Template,
    pub witness: RepeatPathWitness,
}

struct MatchingIndex {
    edges: Vec<Edge>,
    /// Index of the `M`-edge containing each vertex.
    owner: Vec<Option<usize>>,
}

impl MatchingIndex {
    fn new(m: &[Edge], n: usize) -> Self {
        let edges: Vec<Edge> = m.iter().map(|&(a, b)| ordered(a, b)).collect();
        let mut owner = vec![None; n];
        for (k, &(a, b)) in edges.iter().enumerate() {
            owner[a] = Some(k);
            owner[b] = Some(k);
        }
        Self { edges, owner }
    }

    fn owner(&self, x: usize) -> usize {
        self.owner[x].expect("vertex of V(M)")
    }

    fn mate(&self, x: usize) -> usize {
        let (a, b) = self.edges[self.owner(x)];
        if a == x {
            b
        } else {
            a
        }
    }

    fn covers(&self, x: usize) -> bool {
        self.owner[x].is_some()
    }

    /// First `M`-edge not in `taken`.
    fn free_edge(&self, taken: &[usize]) -> Option<Edge> {
        (0..self.edges.len())
            .find(|k| !taken.contains(k))
            .map(|k| self.edges[k])
    }
}

fn check_input(coloring: &EdgeColoring, c: ColorId, m: &[Edge]) -> Result<MatchingIndex> {
    if coloring.n() < 7 {
        return Err(Error::invalid("need n >= 7"));
    }
    if m.len() < 3 {
        return Err(Error::invalid(format!("need |M| >= 3, got {}", m.len())));
    }
    if monochromatic_matching(coloring, m)? != c {
        return Err(Error::invalid(format!("M is not colored {c}")));
    }
    Ok(MatchingIndex::new(m, coloring.n()))
}

/// Looks inside `V(M)` for a `c`-edge outside `M` (preferred), else for the
/// smallest color `c' != c` with at least five edges there.
pub fn find_p7_structure(
    coloring: &EdgeColoring,
    c: ColorId,
    m: &[Edge],
) -> Result<Option<P7Structure>> {
    let index = check_input(coloring, c, m)?;
    let covered: Vec<usize> = (0..coloring.n()).filter(|&x| index.covers(x)).collect();
    let mut inside: Vec<(Edge, ColorId)> = Vec::new();
    for (k, &x) in covered.iter().enumerate() {
        for &y in &covered[k + 1..] {
            let col = coloring.color(x, y);
            if col == c && index.mate(x) != y {
                return Ok(Some(P7Structure::ExtraEdge { edge: (x, y) }));
            }
            inside.push(((x, y), col));
        }
    }
    let mut counts = vec![0usize; coloring.palette_size()];
    for &(_, col) in &inside {
        counts[col as usize] += 1;
    }
    let Some(color) = (0..counts.len()).find(|&k| k != c as usize && counts[k] >= 5) else {
        return Ok(None);
    };
    let color = color as ColorId;
    let edges = inside
        .into_iter()
        .filter(|&(_, col)| col == color)
        .map(|(e, _)| e)
        .collect();
    Ok(Some(P7Structure::FiveEdges { color, edges }))
}

/// Builds a `P_7` with at least three repeated colors from `structure`.
/// `Ok(None)` if no template fits the given edges.
pub fn p7_witness(
    coloring: &EdgeColoring,
    c: ColorId,
    m: &[Edge],
    structure: &P7Structure,
) -> Result<Option<P7Witness>> {
    let index = check_input(coloring, c, m)?;
    let found = match structure {
        P7Structure::ExtraEdge { edge: (x, y) } => extra_edge(coloring, c, &index, *x, *y)?,
        P7Structure::FiveEdges { color, edges } => {
            if *color == c {
                return Err(Error::invalid("the second color must differ from the matching color"));
            }
            for &(a, b) in edges {
                if a >= coloring.n() || b >= coloring.n() || a == b {
                    return Err(Error::invalid(format!("edge ({a}, {b}) out of range")));
                }
                if coloring.color(a, b) != *color || !index.covers(a) || !index.covers(b) {
                    return Err(Error::invalid(format!(
                        "edge ({a}, {b}) is not a {color}-edge inside V(M)"
                    )));
                }
            }
            two_color_template(&index, edges)
        }
    };
    let Some((template, vertices)) = found else {
        return Ok(None);
    };
    let witness = RepeatPathWitness::from_path(coloring, vertices)?;
    debug_assert!(witness.repeats >= 3);
    Ok(Some(P7Witness { template, witness }))
}

fn extra_edge(
    coloring: &EdgeColoring,
    c: ColorId,
    index: &MatchingIndex,
    x: usize,
    y: usize,
) -> Result<Option<(P7Template, Vec<usize>)>> {
    let n = coloring.n();
    if x >= n || y >= n || x == y || !index.covers(x) || !index.covers(y) {
        return Err(Error::invalid(format!("({x}, {y}) is not a pair inside V(M)")));
    }
    if coloring.color(x, y) != c || index.mate(x) == y {
        return Err(Error::invalid(format!("({x}, {y}) is not an extra {c}-edge")));
    }
    let Some((p, p2)) = index.free_edge(&[index.owner(x), index.owner(y)]) else {
        return Ok(None);
    };
    let mut path = vec![index.mate(x), x, y, index.mate(y), p, p2];
    let z = (0..n).find(|z| !path.contains(z)).expect("n >= 7");
    path.push(z);
    Ok(Some((P7Template::ExtraEdge, path)))
}

fn two_color_template(index: &MatchingIndex, edges: &[Edge]) -> Option<(P7Template, Vec<usize>)> {
    let distinct = |ks: &[usize]| ks.iter().enumerate().all(|(i, k)| !ks[..i].contains(k));
    for (i, &e1) in edges.iter().enumerate() {
        for (j, &e2) in edges.iter().enumerate() {
            if i == j {
                continue;
            }
            for (a, b) in [e1, (e1.1, e1.0)] {
                for (d1, d2) in [e2, (e2.1, e2.0)] {
                    let (oa, ob, o1, o2) = (
                        index.owner(a),
                        index.owner(b),
                        index.owner(d1),
                        index.owner(d2),
                    );
                    if b == d1 && distinct(&[oa, ob, o2]) {
                        if let Some((f1, f2)) = index.free_edge(&[oa, ob, o2]) {
                            let path = vec![index.mate(a), a, b, d2, index.mate(d2), f1, f2];
                            return Some((P7Template::SharedEndpoint, path));
                        }
                    }
                    if d1 == index.mate(b) && distinct(&[oa, ob, o2]) {
                        if let Some((f1, f2)) = index.free_edge(&[oa, ob, o2]) {
                            let path = vec![index.mate(a), a, b, d1, d2, f1, f2];
                            return Some((P7Template::MateLinked, path));
                        }
                    }
                    if distinct(&[oa, ob, o1, o2]) {
                        let path = vec![index.mate(a), a, b, index.mate(b), index.mate(d1), d1, d2];
                        return Some((P7Template::Disjoint, path));
                    }
                }
            }
        }
    }
    None
}
