use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ordered, Edge};
use crate::error::{Error, Result};
use crate::matching::maximum_matching;

/// Family tag of a pattern graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "size", rename_all = "lowercase")]
pub enum PatternKind {
    /// `P_v`: path on `v` vertices.
    Path(usize),
    /// `S_t`: star with `t` edges.
    Star(usize),
    /// `tK_2`: `t` disjoint edges.
    Matching(usize),
    /// `K_p`.
    Clique(usize),
    Explicit,
}

/// The target graph `H`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    components: usize,
    kind: PatternKind,
}

impl PatternGraph {
    /// Path `0 - 1 - ... - (v-1)`.
    pub fn path(v: usize) -> Result<Self> {
        if v < 2 {
            return Err(Error::invalid("a path needs at least 2 vertices"));
        }
        let edges = (0..v - 1).map(|i| (i, i + 1)).collect();
        Ok(Self::build(v, edges, PatternKind::Path(v)))
    }

    /// Star centered at vertex 0 with leaves `1..=t`.
    pub fn star(t: usize) -> Result<Self> {
        if t < 1 {
            return Err(Error::invalid("a star needs at least one edge"));
        }
        let edges = (1..=t).map(|i| (0, i)).collect();
        Ok(Self::build(t + 1, edges, PatternKind::Star(t)))
    }

    /// Edges `(2i, 2i + 1)` for `i < t`.
    pub fn matching(t: usize) -> Result<Self> {
        if t < 1 {
            return Err(Error::invalid("a matching needs at least one edge"));
        }
        let edges = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
        Ok(Self::build(2 * t, edges, PatternKind::Matching(t)))
    }

    pub fn clique(p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::invalid("a clique needs at least 2 vertices"));
        }
        let mut edges = Vec::with_capacity(p * (p - 1) / 2);
        for i in 0..p {
            for j in (i + 1)..p {
                edges.push((i, j));
            }
        }
        Ok(Self::build(p, edges, PatternKind::Clique(p)))
    }

    /// Arbitrary simple graph on `0..vertex_count`. Isolated vertices are
    /// allowed and count as components.
    pub fn explicit(vertex_count: usize, edges: &[Edge]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::invalid("pattern must have at least one edge"));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("self-loop at pattern vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::invalid(format!(
                    "pattern edge ({a}, {b}) exceeds vertex count {vertex_count}"
                )));
            }
            let e = ordered(a, b);
            if normalized.contains(&e) {
                return Err(Error::invalid(format!("duplicate pattern edge ({a}, {b})")));
            }
            normalized.push(e);
        }
        Ok(Self::build(vertex_count, normalized, PatternKind::Explicit))
    }

    fn build(vertex_count: usize, edges: Vec<Edge>, kind: PatternKind) -> Self {
        let components = count_components(vertex_count, &edges);
        Self {
            vertex_count,
            edges,
            components,
            kind,
        }
    }

    /// `v(H)`.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `e(H)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, u: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == u || b == u).count()
    }

    /// `Δ(H)`.
    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// `ν(H)`, the maximum matching size.
    pub fn matching_number(&self) -> usize {
        maximum_matching(&self.edges).len()
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components == self.vertex_count
    }

    pub fn is_tree(&self) -> bool {
        self.components == 1 && self.is_forest()
    }

    pub fn is_isolated(&self, u: usize) -> bool {
        self.degree(u) == 0
    }

    /// Neighbors of `u`, ascending.
    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (a == u, b == u) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Short name in the flag mini-language (`P5`, `S3`, `M2`, `K4`), or a
    /// description for explicit patterns.
    pub fn name(&self) -> String {
        match self.kind {
            PatternKind::Path(v) => format!("P{v}"),
            PatternKind::Star(t) => format!("S{t}"),
            PatternKind::Matching(t) => format!("M{t}"),
            PatternKind::Clique(p) => format!("K{p}"),
            PatternKind::Explicit => format!(
                "explicit(v={}, e={})",
                self.vertex_count,
                self.edges.len()
            ),
        }
    }

    /// Parses an explicit pattern from text: the first non-comment line is
    /// the vertex count, every further line is an edge `a b` (0-based).
    /// Lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut vertex_count: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(lineno + 1, format!("expected integer, got `{s}`")))
            };
            match (vertex_count, fields.as_slice()) {
                (None, [v]) => vertex_count = Some(parse(v)?),
                (None, _) => return Err(Error::parse(lineno + 1, "expected vertex count")),
                (Some(_), [a, b]) => edges.push((parse(a)?, parse(b)?)),
                (Some(_), _) => return Err(Error::parse(lineno + 1, "expected `a b`")),
            }
        }
        let v = vertex_count.ok_or_else(|| Error::parse(0, "empty pattern file"))?;
        Self::explicit(v, &edges)
    }
}

impl FromStr for PatternGraph {
    type Err = Error;

    /// `P<v>`, `S<t>`, `M<t>` (= `tK_2`) or `K<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let head = chars
            .next()
            .ok_or_else(|| Error::invalid("empty pattern"))?
            .to_ascii_uppercase();
        let size: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::invalid(format!("bad pattern `{s}`: expected e.g. P5, S3, M2, K4")))?;
        match head {
            'P' => Self::path(size),
            'S' => Self::star(size),
            'M' => Self::matching(size),
            'K' => Self::clique(size),
            _ => Err(Error::invalid(format!("unknown pattern family in `{s}`"))),
        }
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn count_components(v: usize, edges: &[Edge]) -> usize {
    let mut parent: Vec<usize> = (0..v).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut comps = v;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps
}
