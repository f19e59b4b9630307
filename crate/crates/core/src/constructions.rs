//! Explicit colorings of `K_n` and the seeded resampling construction.

use serde::Serialize;

use crate::bounds::lll_exponent;
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_copies, num_edges, CopyColorStats, EdgeColoring, PatternGraph, SubgraphCopy,
};
use crate::rng::SplitMix64;

fn require_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!("need n >= 2, got {n}")));
    }
    Ok(())
}

/// Edge `{i, j}`, `i < j`, gets color `i`; every class is a star.
///
/// With `tweak_last` the edge `{n-2, n-1}` is recolored `n-3`, merging the
/// last singleton class into a triangle and leaving `n-2` colors with no
/// non-rainbow `tK_2`.
pub fn order_coloring(n: usize, tweak_last: bool) -> Result<EdgeColoring> {
    require_n(n)?;
    if tweak_last && n < 3 {
        return Err(Error::invalid("the tweaked order coloring needs n >= 3"));
    }
    EdgeColoring::from_fn(n, |i, j| {
        if tweak_last && i == n - 2 && j == n - 1 {
            n - 3
        } else {
            i
        }
    })
}

/// Round-robin 1-factorization. For even `n` vertex `n-1` is the hub and
/// round `r` pairs it with `r`, plus `(r+i, r-i) mod (n-1)`. Odd `n` runs
/// the even construction on `n+1` vertices and drops the dummy's edges.
/// Uses `2⌈n/2⌉ - 1` colors; every class is a matching.
pub fn one_factorization_coloring(n: usize) -> Result<EdgeColoring> {
    require_n(n)?;
    let m = if n.is_multiple_of(2) { n } else { n + 1 };
    let rounds = m - 1;
    let mut round_of = vec![0usize; num_edges(m)];
    for r in 0..rounds {
        round_of[crate::graph::index_unchecked(m - 1, r, m)] = r;
        for i in 1..m / 2 {
            let a = (r + i) % rounds;
            let b = (r + rounds - i) % rounds;
            round_of[crate::graph::index_unchecked(a, b, m)] = r;
        }
    }
    EdgeColoring::from_fn(n, |i, j| round_of[crate::graph::index_unchecked(i, j, m)])
}

/// Edge `{x, y}` gets color `x XOR y`. Proper; at most `2^⌈log2 n⌉ - 1`
/// colors.
pub fn xor_coloring(n: usize) -> Result<EdgeColoring> {
    require_n(n)?;
    EdgeColoring::from_fn(n, |i, j| i ^ j)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantKind {
    Monochromatic,
    Rainbow,
}

pub fn constant_coloring(n: usize, kind: ConstantKind) -> Result<EdgeColoring> {
    if n < 1 {
        return Err(Error::invalid("n must be positive"));
    }
    match kind {
        ConstantKind::Monochromatic => EdgeColoring::from_fn(n, |_, _| 0usize),
        ConstantKind::Rainbow => {
            EdgeColoring::from_raw(n, &(0..num_edges(n)).collect::<Vec<_>>())
        }
    }
}

/// Parameters of [`lll_coloring`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LllParams {
    /// Palette to sample from; `None` means [`default_lll_palette`].
    pub palette: Option<usize>,
    /// Leading constant `A` of the default palette.
    pub constant: f64,
    pub seed: u64,
    pub max_resamples: usize,
}

impl Default for LllParams {
    fn default() -> Self {
        Self {
            palette: None,
            constant: 4.0,
            seed: 0,
            max_resamples: 100_000,
        }
    }
}

/// `⌈A · n^((v-2)/(e-q+1))⌉`.
pub fn default_lll_palette(n: usize, pattern: &PatternGraph, q: usize, constant: f64) -> Result<usize> {
    let exp = lll_exponent(pattern, q)?;
    let exp = *exp.numer() as f64 / *exp.denom() as f64;
    let value = (constant * (n as f64).powf(exp)).ceil();
    Ok((value as usize).max(1))
}

#[derive(Clone, Debug)]
pub enum LllOutcome {
    Success {
        coloring: EdgeColoring,
        palette: usize,
        resamples: usize,
    },
    /// The budget ran out; carries the last violating copy.
    Exhausted {
        coloring: EdgeColoring,
        palette: usize,
        resamples: usize,
        violation: SubgraphCopy,
        stats: CopyColorStats,
    },
}

impl LllOutcome {
    pub fn coloring(&self) -> &EdgeColoring {
        match self {
            LllOutcome::Success { coloring, .. } | LllOutcome::Exhausted { coloring, .. } => {
                coloring
            }
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, LllOutcome::Success { .. })
    }
}

/// Uniform random coloring from the palette, repaired by resampling: while
/// some copy of `H` has fewer than `q` colors, recolor the edges of the
/// first such copy in enumeration order.
pub fn lll_coloring(n: usize, pattern: &PatternGraph, q: usize, params: &LllParams) -> Result<LllOutcome> {
    require_n(n)?;
    let e = pattern.edge_count();
    if q < 2 || q > e {
        return Err(Error::invalid(format!("need 2 <= q <= e(H) = {e}, got q = {q}")));
    }
    if params.max_resamples == 0 {
        return Err(Error::invalid("max_resamples must be positive"));
    }
    let palette = match params.palette {
        Some(0) => return Err(Error::invalid("palette must be positive")),
        Some(k) => k,
        None => default_lll_palette(n, pattern, q, params.constant)?,
    };

    let copies: Vec<SubgraphCopy> = enumerate_copies(pattern, n).collect();
    let indices: Vec<Vec<usize>> = copies.iter().map(|c| c.edge_indices(n)).collect();

    let mut rng = SplitMix64::new(params.seed);
    let mut colors: Vec<u64> = (0..num_edges(n)).map(|_| rng.below(palette as u64)).collect();
    let mut resamples = 0;

    loop {
        let bad = indices.iter().position(|copy| distinct(&colors, copy) < q);
        let Some(bad) = bad else {
            return Ok(LllOutcome::Success {
                coloring: EdgeColoring::from_raw(n, &colors)?,
                palette,
                resamples,
            });
        };
        if resamples == params.max_resamples {
            let stats = CopyColorStats::new(e, distinct(&colors, &indices[bad]));
            return Ok(LllOutcome::Exhausted {
                coloring: EdgeColoring::from_raw(n, &colors)?,
                palette,
                resamples,
                violation: copies[bad].clone(),
                stats,
            });
        }
        for &idx in &indices[bad] {
            colors[idx] = rng.below(palette as u64);
        }
        resamples += 1;
    }
}

fn distinct(colors: &[u64], copy: &[usize]) -> usize {
    let mut seen: Vec<u64> = Vec::with_capacity(copy.len());
    for &i in copy {
        if !seen.contains(&colors[i]) {
            seen.push(colors[i]);
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::is_matching;

    #[test]
    fn order_small_cases() {
        let c = order_coloring(4, false).unwrap();
        assert_eq!(c.palette_size(), 3);
        let sizes: Vec<usize> = c.classes().iter().map(|v| v.size()).collect();
        assert_eq!(sizes, vec![3, 2, 1]);
        assert_eq!(c.classes()[1].degree(1), 2);
        assert_eq!(order_coloring(4, true).unwrap().palette_size(), 2);
        assert_eq!(order_coloring(2, false).unwrap().palette_size(), 1);
        assert!(order_coloring(2, true).is_err());
        assert!(order_coloring(1, false).is_err());
    }

    #[test]
    fn tweaked_class_is_triangle() {
        for n in 3..=9 {
            let c = order_coloring(n, true).unwrap();
            assert_eq!(c.palette_size(), n - 2);
            let last = c.class_edges((n - 3) as u32);
            assert_eq!(last, vec![(n - 3, n - 2), (n - 3, n - 1), (n - 2, n - 1)]);
        }
    }

    #[test]
    fn factorization_classes_are_matchings() {
        for n in 2..=13 {
            let c = one_factorization_coloring(n).unwrap();
            assert_eq!(c.palette_size(), 2 * n.div_ceil(2) - 1, "n = {n}");
            for class in c.classes() {
                assert!(is_matching(&class.edges));
                assert_eq!(class.size(), n / 2);
            }
        }
    }

    #[test]
    fn xor_small_cases() {
        let c = xor_coloring(4).unwrap();
        assert_eq!(c.palette_size(), 3);
        for class in c.classes() {
            assert_eq!(class.size(), 2);
            assert!(is_matching(&class.edges));
        }
        assert_eq!(xor_coloring(2).unwrap().palette_size(), 1);
    }

    #[test]
    fn constant_fixtures() {
        assert_eq!(constant_coloring(4, ConstantKind::Monochromatic).unwrap().palette_size(), 1);
        assert_eq!(constant_coloring(4, ConstantKind::Rainbow).unwrap().palette_size(), 6);
        assert_eq!(constant_coloring(2, ConstantKind::Monochromatic).unwrap().palette_size(), 1);
    }

    #[test]
    fn lll_large_palette_succeeds() {
        // Any two edges of K_10 lie on a common P_4, so the result is rainbow.
        let p4 = PatternGraph::path(4).unwrap();
        let params = LllParams {
            palette: Some(400),
            seed: 3,
            ..LllParams::default()
        };
        let out = lll_coloring(10, &p4, 3, &params).unwrap();
        assert!(out.is_success());
        assert_eq!(out.coloring().palette_size(), 45);
    }

    #[test]
    fn lll_single_color_fails_with_certificate() {
        let p4 = PatternGraph::path(4).unwrap();
        let params = LllParams {
            palette: Some(1),
            seed: 1,
            max_resamples: 20,
            ..LllParams::default()
        };
        match lll_coloring(8, &p4, 3, &params).unwrap() {
            LllOutcome::Exhausted { stats, violation, resamples, .. } => {
                assert_eq!(stats.distinct_colors, 1);
                assert_eq!(resamples, 20);
                assert_eq!(violation.edge_images.len(), 3);
            }
            LllOutcome::Success { .. } => panic!("one color cannot give 3 colors"),
        }
    }

    #[test]
    fn lll_is_deterministic_per_seed() {
        let p5 = PatternGraph::path(5).unwrap();
        let params = LllParams {
            palette: Some(9),
            seed: 11,
            max_resamples: 5000,
            ..LllParams::default()
        };
        let a = lll_coloring(8, &p5, 3, &params).unwrap();
        let b = lll_coloring(8, &p5, 3, &params).unwrap();
        assert_eq!(a.coloring(), b.coloring());
    }

    #[test]
    fn lll_rejects_bad_q() {
        let p4 = PatternGraph::path(4).unwrap();
        assert!(lll_coloring(6, &p4, 1, &LllParams::default()).is_err());
        assert!(lll_coloring(6, &p4, 4, &LllParams::default()).is_err());
    }
}
