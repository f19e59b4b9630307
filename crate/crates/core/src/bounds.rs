//! Closed-form thresholds and exponents, and the growth classification of
//! `f(K_n, P_v, q)`. All exponents are exact rationals.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{PatternGraph, PatternKind};

pub type Rational = Ratio<i64>;

fn r(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

/// `n^exponent · (log n)^log_power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Asymptotic {
    pub exponent: Rational,
    pub log_power: Rational,
}

impl Asymptotic {
    pub fn new(exponent: Rational, log_power: Rational) -> Self {
        Self { exponent, log_power }
    }

    pub fn poly(exponent: Rational) -> Self {
        Self::new(exponent, Rational::zero())
    }
}

impl PartialOrd for Asymptotic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Asymptotic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.exponent, self.log_power).cmp(&(other.exponent, other.log_power))
    }
}

impl fmt::Display for Asymptotic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.exponent;
        if e.is_one() {
            f.write_str("n")?;
        } else if e.is_integer() {
            write!(f, "n^{e}")?;
        } else {
            write!(f, "n^{{{e}}}")?;
        }
        let p = self.log_power;
        if !p.is_zero() {
            let (sep, mag) = if p < Rational::zero() { ("/", -p) } else { ("·", p) };
            if mag.is_one() {
                write!(f, "{sep}log n")?;
            } else {
                write!(f, "{sep}log^{{{mag}}} n")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Asymptotic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Asymptotic", 2)?;
        st.serialize_field("exponent", &self.exponent.to_string())?;
        st.serialize_field("log_power", &self.log_power.to_string())?;
        st.end()
    }
}

/// Growth of `f(K_n, H, q)` in `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum GrowthClass {
    Linear,
    Quadratic,
    /// Strictly between linear and quadratic; `open` marks that the true
    /// order is unknown.
    Intermediate {
        lower: Asymptotic,
        upper: Asymptotic,
        open: bool,
    },
    OutOfRange,
}

impl GrowthClass {
    pub fn lower(&self) -> Option<Asymptotic> {
        match self {
            GrowthClass::Linear => Some(Asymptotic::poly(Rational::one())),
            GrowthClass::Quadratic => Some(Asymptotic::poly(r(2, 1))),
            GrowthClass::Intermediate { lower, .. } => Some(*lower),
            GrowthClass::OutOfRange => None,
        }
    }

    pub fn upper(&self) -> Option<Asymptotic> {
        match self {
            GrowthClass::Linear => Some(Asymptotic::poly(Rational::one())),
            GrowthClass::Quadratic => Some(Asymptotic::poly(r(2, 1))),
            GrowthClass::Intermediate { upper, .. } => Some(*upper),
            GrowthClass::OutOfRange => None,
        }
    }

    /// `Linear < Intermediate < Quadratic`; `None` when out of range.
    pub fn rank(&self) -> Option<u8> {
        match self {
            GrowthClass::Linear => Some(0),
            GrowthClass::Intermediate { .. } => Some(1),
            GrowthClass::Quadratic => Some(2),
            GrowthClass::OutOfRange => None,
        }
    }
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthClass::Linear => f.write_str("Θ(n)"),
            GrowthClass::Quadratic => f.write_str("Θ(n^2)"),
            GrowthClass::Intermediate { lower, upper, .. } => write!(f, "Ω({lower}), O({upper})"),
            GrowthClass::OutOfRange => f.write_str("-"),
        }
    }
}

/// Exponent `(v - 2) / (e - q + 1)` of the local-lemma upper bound
/// `f(K_n, H, q) = O(n^{(v-2)/(e-q+1)})`.
pub fn lll_exponent(pattern: &PatternGraph, q: usize) -> Result<Rational> {
    let (v, e) = (pattern.vertex_count() as i64, pattern.edge_count() as i64);
    if q < 1 || q as i64 > e {
        return Err(Error::invalid(format!("need 1 <= q <= e(H) = {e}, got q = {q}")));
    }
    Ok(r(v - 2, e - q as i64 + 1))
}

/// Least `q` with `f(K_n, H, q) = Ω(n)` from the spanning-forest argument:
/// `e - v + 2 + c`.
pub fn linear_threshold(pattern: &PatternGraph) -> usize {
    pattern.edge_count() + 2 + pattern.components() - pattern.vertex_count()
}

/// Both linear-threshold points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearThreshold {
    /// `e - v + 2 + c`: `f = Ω(n)` from here on.
    pub omega_linear_q: usize,
    /// `e - v + 2`, when at least 1: `f = O(n^{1 - 1/(v-1)})` there.
    pub sublinear_q: Option<usize>,
    pub sublinear_upper: Option<Asymptotic>,
}

pub fn linear_threshold_report(pattern: &PatternGraph) -> LinearThreshold {
    let (v, e) = (pattern.vertex_count() as i64, pattern.edge_count() as i64);
    let sub = e - v + 2;
    let (sublinear_q, sublinear_upper) = if sub >= 1 {
        let q = sub as usize;
        (Some(q), lll_exponent(pattern, q).ok().map(Asymptotic::poly))
    } else {
        (None, None)
    };
    LinearThreshold {
        omega_linear_q: linear_threshold(pattern),
        sublinear_q,
        sublinear_upper,
    }
}

/// Quadratic threshold from the matching / high-degree-vertex argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticThreshold {
    /// `ν(H)`.
    pub matching_number: usize,
    /// `Δ(H)`.
    pub max_degree: usize,
    /// `b = min(ν, Δ)`.
    pub b: usize,
    /// `e - b + 2` when `b >= 2`: `f = Θ(n^2)` from here on.
    pub general_q: Option<usize>,
    /// Whether `ν >= ⌊v/2⌋` and `Δ >= ⌊v/2⌋` (the sharp form, where the
    /// threshold is exactly `e - ⌊v/2⌋ + 2`).
    pub sharp_hypotheses_hold: bool,
    /// Upper bound `O(n^{(v-2)/⌈v/2⌉})` at `q = e - ⌈v/2⌉ + 1` under the
    /// sharp hypotheses.
    pub below_threshold_upper: Option<Asymptotic>,
    /// For paths: the exact threshold `⌈v/2⌉ + 1`.
    pub path_q: Option<usize>,
}

pub fn quadratic_threshold(pattern: &PatternGraph) -> QuadraticThreshold {
    let v = pattern.vertex_count();
    let e = pattern.edge_count();
    let nu = pattern.matching_number();
    let delta = pattern.max_degree();
    let b = nu.min(delta);
    let half = v / 2;
    let sharp = half >= 2 && nu >= half && delta >= half;
    let below_threshold_upper = if sharp {
        let q = e + 1 - v.div_ceil(2);
        lll_exponent(pattern, q).ok().map(Asymptotic::poly)
    } else {
        None
    };
    let path_q = match pattern.kind() {
        PatternKind::Path(v) if v >= 3 => Some(v.div_ceil(2) + 1),
        _ => None,
    };
    QuadraticThreshold {
        matching_number: nu,
        max_degree: delta,
        b,
        general_q: (b >= 2).then(|| e + 2 - b),
        sharp_hypotheses_hold: sharp,
        below_threshold_upper,
        path_q,
    }
}

/// Growth of `f(K_n, H, e(H))` (every copy rainbow): linear exactly for
/// matchings, stars and the triangle, quadratic otherwise.
pub fn rainbow_class(pattern: &PatternGraph) -> GrowthClass {
    let edges = pattern.edges();
    if edges.is_empty() {
        return GrowthClass::OutOfRange;
    }
    let is_matching = pattern.max_degree() <= 1;
    let is_star = (0..pattern.vertex_count()).any(|u| pattern.degree(u) == edges.len());
    let is_triangle = edges.len() == 3 && {
        let mut vs: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == 3
    };
    if is_matching || is_star || is_triangle {
        GrowthClass::Linear
    } else {
        GrowthClass::Quadratic
    }
}

/// Growth class of `f(K_n, P_v, q)` for `v >= 3`, `2 <= q <= v - 1`.
pub fn classify_path(v: usize, q: usize) -> GrowthClass {
    if v < 3 || q < 2 || q > v - 1 {
        return GrowthClass::OutOfRange;
    }
    if q <= v / 2 {
        return GrowthClass::Linear;
    }
    if q > v.div_ceil(2) {
        return GrowthClass::Quadratic;
    }
    // Remaining: odd v, q = (v + 1) / 2.
    match v {
        3 | 5 => GrowthClass::Linear,
        7 => GrowthClass::Intermediate {
            lower: Asymptotic::new(r(4, 3), r(-2, 3)),
            upper: Asymptotic::poly(r(5, 3)),
            open: true,
        },
        _ => GrowthClass::Intermediate {
            lower: Asymptotic::new(r(3, 2), r(-1, 1)),
            upper: Asymptotic::poly(r(2, 1) - r(2, v as i64 - 1)),
            open: true,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub v: usize,
    pub q: usize,
    pub class: GrowthClass,
    pub bounds: String,
}

/// One row per `(v, q)` with `vmin <= v <= vmax`, `2 <= q <= v - 1`.
pub fn figure1_table(vmin: usize, vmax: usize) -> Result<Vec<TableRow>> {
    if vmin < 3 || vmin > vmax {
        return Err(Error::invalid(format!("need 3 <= vmin <= vmax, got {vmin}..{vmax}")));
    }
    Ok((vmin..=vmax)
        .flat_map(|v| (2..v).map(move |q| (v, q)))
        .map(|(v, q)| {
            let class = classify_path(v, q);
            TableRow {
                v,
                q,
                class,
                bounds: class.to_string(),
            }
        })
        .collect())
}

pub fn render_markdown(rows: &[TableRow]) -> String {
    let mut out = String::from("| v | q | class | f(K_n, P_v, q) |\n|---|---|---|---|\n");
    for row in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            row.v,
            row.q,
            class_name(&row.class),
            row.bounds
        ));
    }
    out
}

pub fn render_text(rows: &[TableRow]) -> String {
    let mut out = format!("{:>3} {:>3}  {:<13} {}\n", "v", "q", "class", "bounds");
    for row in rows {
        out.push_str(&format!(
            "{:>3} {:>3}  {:<13} {}\n",
            row.v,
            row.q,
            class_name(&row.class),
            row.bounds
        ));
    }
    out
}

pub fn class_name(class: &GrowthClass) -> &'static str {
    match class {
        GrowthClass::Linear => "linear",
        GrowthClass::Quadratic => "quadratic",
        GrowthClass::Intermediate { .. } => "intermediate",
        GrowthClass::OutOfRange => "out-of-range",
    }
}

/// Everything computable about `H` from its shape alone.
#[derive(Clone, Debug, Serialize)]
pub struct ThresholdReport {
    pub pattern: String,
    pub v: usize,
    pub e: usize,
    pub c: usize,
    /// `(q, exponent)` for `1 <= q <= e`.
    pub lll_exponents: Vec<(usize, String)>,
    pub linear: LinearThreshold,
    pub quadratic: QuadraticThreshold,
    pub rainbow_class: GrowthClass,
    /// Any `n`-vertex graph with at least `turan_tree_factor · n` edges
    /// contains every tree on `v` vertices.
    pub turan_tree_factor: usize,
}

pub fn threshold_report(pattern: &PatternGraph) -> ThresholdReport {
    let e = pattern.edge_count();
    ThresholdReport {
        pattern: pattern.name(),
        v: pattern.vertex_count(),
        e,
        c: pattern.components(),
        lll_exponents: (1..=e)
            .map(|q| (q, lll_exponent(pattern, q).expect("q in range").to_string()))
            .collect(),
        linear: linear_threshold_report(pattern),
        quadratic: quadratic_threshold(pattern),
        rainbow_class: rainbow_class(pattern),
        turan_tree_factor: pattern.vertex_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: usize) -> PatternGraph {
        PatternGraph::path(v).unwrap()
    }

    #[test]
    fn lll_exponent_examples() {
        assert_eq!(lll_exponent(&p(9), 5).unwrap(), r(7, 4));
        assert_eq!(lll_exponent(&p(7), 4).unwrap(), r(5, 3));
        assert_eq!(lll_exponent(&PatternGraph::clique(3).unwrap(), 2).unwrap(), r(1, 2));
        assert!(lll_exponent(&p(4), 0).is_err());
        assert!(lll_exponent(&p(4), 4).is_err());
    }

    #[test]
    fn linear_threshold_examples() {
        let two_triangles =
            PatternGraph::explicit(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(linear_threshold(&two_triangles), 4);
        assert_eq!(linear_threshold(&p(6)), 2);
        assert_eq!(linear_threshold(&PatternGraph::matching(3).unwrap()), 2);
        let rep = linear_threshold_report(&p(6));
        assert_eq!(rep.sublinear_q, Some(1));
        assert_eq!(rep.sublinear_upper, Some(Asymptotic::poly(r(4, 5))));
        assert_eq!(linear_threshold_report(&PatternGraph::matching(3).unwrap()).sublinear_q, None);
    }

    #[test]
    fn quadratic_threshold_examples() {
        let k4 = quadratic_threshold(&PatternGraph::clique(4).unwrap());
        assert!(k4.sharp_hypotheses_hold);
        assert_eq!((k4.matching_number, k4.max_degree, k4.general_q), (2, 3, Some(6)));
        assert_eq!(k4.below_threshold_upper, Some(Asymptotic::poly(r(1, 1))));
        let p6 = quadratic_threshold(&p(6));
        assert!(!p6.sharp_hypotheses_hold);
        assert_eq!((p6.general_q, p6.path_q), (Some(5), Some(4)));
        let s4 = quadratic_threshold(&PatternGraph::star(4).unwrap());
        assert_eq!((s4.matching_number, s4.general_q), (1, None));
    }

    #[test]
    fn rainbow_class_examples() {
        assert_eq!(rainbow_class(&PatternGraph::matching(3).unwrap()), GrowthClass::Linear);
        assert_eq!(rainbow_class(&p(4)), GrowthClass::Quadratic);
        assert_eq!(rainbow_class(&PatternGraph::clique(3).unwrap()), GrowthClass::Linear);
        assert_eq!(rainbow_class(&PatternGraph::star(5).unwrap()), GrowthClass::Linear);
        assert_eq!(rainbow_class(&PatternGraph::clique(4).unwrap()), GrowthClass::Quadratic);
    }

    #[test]
    fn classify_path_examples() {
        assert_eq!(classify_path(6, 4), GrowthClass::Quadratic);
        assert_eq!(classify_path(5, 3), GrowthClass::Linear);
        assert_eq!(classify_path(4, 3), GrowthClass::Quadratic);
        assert_eq!(classify_path(4, 4), GrowthClass::OutOfRange);
        assert_eq!(classify_path(4, 1), GrowthClass::OutOfRange);
        let c7 = classify_path(7, 4);
        assert_eq!(c7.to_string(), "Ω(n^{4/3}/log^{2/3} n), O(n^{5/3})");
        let c9 = classify_path(9, 5);
        assert_eq!(c9.to_string(), "Ω(n^{3/2}/log n), O(n^{7/4})");
    }

    #[test]
    fn table_rows() {
        let rows = figure1_table(3, 6).unwrap();
        assert_eq!(rows.len(), 1 + 2 + 3 + 4);
        assert!(rows.iter().all(|r| matches!(r.class, GrowthClass::Linear | GrowthClass::Quadratic)));
        let v7: Vec<_> = figure1_table(7, 7).unwrap();
        assert_eq!(v7.iter().filter(|r| matches!(r.class, GrowthClass::Intermediate { .. })).count(), 1);
        assert!(figure1_table(2, 5).is_err());
        assert!(figure1_table(6, 5).is_err());
    }
}
