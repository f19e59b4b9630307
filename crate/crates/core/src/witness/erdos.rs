//! Pairs of large sets with a large common part.

use serde::Serialize;

use crate::error::{Error, Result};

/// Sets `A_i`, `A_j` (0-based indices into the input, `i < j`) and their
/// intersection.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErdosPair {
    pub i: usize,
    pub j: usize,
    pub intersection: Vec<usize>,
    /// `|A_i ∩ A_j| >= d²/2`.
    pub meets_bound: bool,
    /// Every `|A_k| >= d√n` and the family has at least `(8/d)√n` sets.
    pub preconditions_met: bool,
    pub warnings: Vec<String>,
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut x, mut y) = (0, 0);
    let mut out = Vec::new();
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[x]);
                x += 1;
                y += 1;
            }
        }
    }
    out
}

/// Scans pairs `i < j` in lexicographic order for `|A_i ∩ A_j| >= d²/2`.
///
/// When every set has at least `d√n` elements of `0..n` and there are at
/// least `(8/d)√n` sets such a pair exists. If the preconditions fail the
/// best pair found is still returned, flagged. `None` for fewer than two
/// sets.
pub fn erdos_pair(sets: &[Vec<usize>], n: usize, d: f64) -> Result<Option<ErdosPair>> {
    if !(d.is_finite() && d > 0.0) {
        return Err(Error::invalid("d must be positive"));
    }
    if sets.iter().flatten().any(|&x| x >= n) {
        return Err(Error::invalid(format!("set element out of range for n = {n}")));
    }
    if sets.len() < 2 {
        return Ok(None);
    }
    let normalized: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();

    let root_n = (n as f64).sqrt();
    let mut warnings = Vec::new();
    let min_size = d * root_n;
    if let Some(k) = normalized.iter().position(|s| (s.len() as f64) < min_size) {
        warnings.push(format!(
            "set {k} has {} elements, fewer than d*sqrt(n) = {min_size:.3}",
            normalized[k].len()
        ));
    }
    let min_count = 8.0 / d * root_n;
    if (normalized.len() as f64) < min_count {
        warnings.push(format!(
            "{} sets, fewer than (8/d)*sqrt(n) = {min_count:.3}",
            normalized.len()
        ));
    }
    let target = d * d / 2.0;

    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for i in 0..normalized.len() {
        for j in (i + 1)..normalized.len() {
            let common = intersect(&normalized[i], &normalized[j]);
            if common.len() as f64 >= target {
                return Ok(Some(ErdosPair {
                    i,
                    j,
                    intersection: common,
                    meets_bound: true,
                    preconditions_met: warnings.is_empty(),
                    warnings,
                }));
            }
            if best.as_ref().is_none_or(|b| common.len() > b.2.len()) {
                best = Some((i, j, common));
            }
        }
    }
    let (i, j, intersection) = best.expect("at least one pair");
    warnings.push(format!("no pair reaches d^2/2 = {target:.3}"));
    Ok(Some(ErdosPair {
        i,
        j,
        intersection,
        meets_bound: false,
        preconditions_met: warnings.len() == 1,
        warnings,
    }))
}
