//! Deciding `(H, q)`-colorings and per-class statistics.

use std::sync::Arc;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    ColorId, CopyColorStats, CopyEnumerator, CopyPlan, Edge, EdgeColoring, PatternGraph,
    SubgraphCopy,
};
use crate::matching::{greedy_maximal_matching, matched_vertices, maximum_matching};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub copy: SubgraphCopy,
    pub stats: CopyColorStats,
}

/// `valid` iff `violation` is `None`. `vacuous` flags that `K_n` has no copy
/// of `H` at all.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOutcome {
    pub valid: bool,
    pub violation: Option<Violation>,
    /// Copies examined in enumeration order, up to and including the
    /// reported violation.
    pub copies_checked: u64,
    pub vacuous: bool,
}

fn check_q(pattern: &PatternGraph, q: usize) -> Result<()> {
    let e = pattern.edge_count();
    if q < 1 || q > e {
        return Err(Error::invalid(format!("need 1 <= q <= e(H) = {e}, got q = {q}")));
    }
    Ok(())
}

/// First copy (in `it`'s order) with fewer than `q` colors, and how many
/// copies were examined.
fn scan(coloring: &EdgeColoring, it: &mut CopyEnumerator, q: usize) -> (Option<SubgraphCopy>, u64) {
    let mut buf = Vec::new();
    let mut checked = 0u64;
    while it.advance() {
        checked += 1;
        it.edge_indices_into(&mut buf);
        if coloring.distinct_among(&buf) < q {
            return (Some(it.current()), checked);
        }
    }
    (None, checked)
}

fn outcome(coloring: &EdgeColoring, found: Option<SubgraphCopy>, checked: u64) -> VerifyOutcome {
    let violation = found.map(|copy| Violation {
        stats: coloring.copy_stats(&copy),
        copy,
    });
    VerifyOutcome {
        valid: violation.is_none(),
        violation,
        copies_checked: checked,
        vacuous: checked == 0,
    }
}

/// Is every copy of `H` in `K_n` colored with at least `q` colors? Stops at
/// the first violation in enumeration order.
pub fn verify(coloring: &EdgeColoring, pattern: &PatternGraph, q: usize) -> Result<VerifyOutcome> {
    check_q(pattern, q)?;
    let mut it = CopyEnumerator::new(Arc::new(CopyPlan::new(pattern)), coloring.n());
    let (found, checked) = scan(coloring, &mut it, q);
    Ok(outcome(coloring, found, checked))
}

/// [`verify`] with the copy stream split by leading vertex over `threads`
/// workers. The result, including the certificate and `copies_checked`, is
/// identical to the sequential run.
pub fn verify_parallel(
    coloring: &EdgeColoring,
    pattern: &PatternGraph,
    q: usize,
    threads: usize,
) -> Result<VerifyOutcome> {
    check_q(pattern, q)?;
    let threads = threads.max(1);
    if threads == 1 {
        return verify(coloring, pattern, q);
    }
    let n = coloring.n();
    let plan = Arc::new(CopyPlan::new(pattern));

    // One slot per leading vertex: (violation, copies scanned in that block).
    let mut blocks: Vec<(Option<SubgraphCopy>, u64)> = vec![(None, 0); n];
    thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let plan = plan.clone();
                s.spawn(move || {
                    (t..n)
                        .step_by(threads)
                        .map(|lead| {
                            let mut it = CopyEnumerator::with_leading(plan.clone(), n, lead);
                            (lead, scan(coloring, &mut it, q))
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (lead, res) in h.join().expect("verifier worker panicked") {
                blocks[lead] = res;
            }
        }
    });

    let mut checked = 0;
    for (found, count) in blocks {
        checked += count;
        if found.is_some() {
            return Ok(outcome(coloring, found, checked));
        }
    }
    Ok(outcome(coloring, None, checked))
}

/// Least number of colors on a copy of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum MinColors {
    Attained(usize),
    /// No copy of `H` exists in `K_n`.
    Vacuous,
}

impl MinColors {
    pub fn value(self) -> Option<usize> {
        match self {
            MinColors::Attained(q) => Some(q),
            MinColors::Vacuous => None,
        }
    }
}

/// Minimum over all copies of the number of distinct colors; the largest `q`
/// for which [`verify`] passes.
pub fn min_q(coloring: &EdgeColoring, pattern: &PatternGraph) -> MinColors {
    let mut it = CopyEnumerator::new(Arc::new(CopyPlan::new(pattern)), coloring.n());
    let mut buf = Vec::new();
    let mut best: Option<usize> = None;
    while it.advance() {
        it.edge_indices_into(&mut buf);
        let d = coloring.distinct_among(&buf);
        if best.is_none_or(|b| d < b) {
            best = Some(d);
            if d == 1 {
                break;
            }
        }
    }
    best.map_or(MinColors::Vacuous, MinColors::Attained)
}

/// Summary of one color class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassStats {
    pub color: ColorId,
    pub size: usize,
    /// Greedy maximal matching in ascending edge order.
    pub maximal_matching: Vec<Edge>,
    pub maximum_matching_size: usize,
    /// Endpoints of `maximal_matching`; covers every edge of the class.
    pub cover: Vec<usize>,
    pub max_degree: usize,
}

pub fn class_stats(coloring: &EdgeColoring) -> Vec<ClassStats> {
    coloring
        .classes()
        .into_iter()
        .map(|view| {
            let maximal = greedy_maximal_matching(&view.edges);
            ClassStats {
                color: view.color,
                size: view.size(),
                maximum_matching_size: maximum_matching(&view.edges).len(),
                cover: matched_vertices(&maximal),
                max_degree: view.max_degree(),
                maximal_matching: maximal,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        constant_coloring, one_factorization_coloring, order_coloring, ConstantKind,
    };

    #[test]
    fn factorization_rainbow_stars() {
        let c = one_factorization_coloring(6).unwrap();
        let s3 = PatternGraph::star(3).unwrap();
        let out = verify(&c, &s3, 3).unwrap();
        assert!(out.valid && !out.vacuous);
        assert_eq!(out.copies_checked, 6 * 10);
    }

    #[test]
    fn order_coloring_certificate() {
        let c = order_coloring(4, false).unwrap();
        let p3 = PatternGraph::path(3).unwrap();
        let out = verify(&c, &p3, 2).unwrap();
        let v = out.violation.unwrap();
        assert_eq!(v.copy.vertex_map, vec![1, 0, 2]);
        assert_eq!(v.stats, CopyColorStats { distinct_colors: 1, repeats: 1 });
    }

    #[test]
    fn rainbow_k5_p5() {
        let c = constant_coloring(5, ConstantKind::Rainbow).unwrap();
        assert!(verify(&c, &PatternGraph::path(5).unwrap(), 4).unwrap().valid);
    }

    #[test]
    fn q_out_of_range() {
        let c = constant_coloring(5, ConstantKind::Rainbow).unwrap();
        let p3 = PatternGraph::path(3).unwrap();
        assert!(verify(&c, &p3, 3).is_err());
        assert!(verify(&c, &p3, 0).is_err());
    }

    #[test]
    fn vacuous_when_pattern_too_big() {
        let c = constant_coloring(3, ConstantKind::Monochromatic).unwrap();
        let p5 = PatternGraph::path(5).unwrap();
        let out = verify(&c, &p5, 4).unwrap();
        assert!(out.valid && out.vacuous);
        assert_eq!(min_q(&c, &p5), MinColors::Vacuous);
    }

    #[test]
    fn min_q_examples() {
        let mono = constant_coloring(5, ConstantKind::Monochromatic).unwrap();
        assert_eq!(min_q(&mono, &PatternGraph::path(4).unwrap()), MinColors::Attained(1));
        let rainbow = constant_coloring(6, ConstantKind::Rainbow).unwrap();
        assert_eq!(min_q(&rainbow, &PatternGraph::clique(4).unwrap()), MinColors::Attained(6));
    }

    #[test]
    fn class_stats_examples() {
        for s in class_stats(&one_factorization_coloring(6).unwrap()) {
            assert_eq!((s.size, s.maximum_matching_size, s.max_degree), (3, 3, 1));
        }
        let order = class_stats(&order_coloring(5, false).unwrap());
        assert_eq!((order[0].size, order[0].maximum_matching_size, order[0].max_degree), (4, 1, 4));
        let mono = class_stats(&constant_coloring(4, ConstantKind::Monochromatic).unwrap());
        assert_eq!(mono.len(), 1);
        assert_eq!((mono[0].size, mono[0].maximum_matching_size), (6, 2));
        assert_eq!(mono[0].cover.len(), 2 * mono[0].maximal_matching.len());
    }

    #[test]
    fn parallel_matches_sequential() {
        let c = order_coloring(9, false).unwrap();
        for (h, q) in [("P5", 3), ("P5", 2), ("S3", 2), ("M2", 2)] {
            let h: PatternGraph = h.parse().unwrap();
            let seq = verify(&c, &h, q).unwrap();
            for t in [2, 3, 8] {
                assert_eq!(verify_parallel(&c, &h, q, t).unwrap(), seq);
            }
        }
    }
}
