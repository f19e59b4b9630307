//! Coloring file formats.
//!
//! Text: a header line `n k` (vertex count, palette size) followed by one
//! `u v c` line per edge of `K_n`, 0-based and whitespace separated, every
//! edge exactly once. Blank lines and lines starting with `#` are skipped.
//! Colors must lie in `0..k`; they are renormalized on load.
//!
//! JSON: `{"n": 4, "palette": 3, "edges": [[0, 1, 0], ...]}` with the same
//! constraints.
//!
//! Writers emit edges in edge-index order, so writing a loaded coloring
//! reproduces the file byte for byte once it is normalized.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{index_unchecked, num_edges, EdgeColoring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringJson {
    pub n: usize,
    pub palette: usize,
    pub edges: Vec<[usize; 3]>,
}

impl From<&EdgeColoring> for ColoringJson {
    fn from(c: &EdgeColoring) -> Self {
        Self {
            n: c.n(),
            palette: c.palette_size(),
            edges: c
                .edges()
                .map(|((u, w), col)| [u, w, col as usize])
                .collect(),
        }
    }
}

impl TryFrom<ColoringJson> for EdgeColoring {
    type Error = Error;

    fn try_from(j: ColoringJson) -> Result<Self> {
        let triples: Vec<(usize, usize, usize, usize)> = j
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (i + 1, e[0], e[1], e[2]))
            .collect();
        assemble(j.n, j.palette, &triples)
    }
}

pub fn to_text(c: &EdgeColoring) -> String {
    let mut out = String::with_capacity(12 * c.num_edges() + 16);
    let _ = writeln!(out, "{} {}", c.n(), c.palette_size());
    for ((u, w), col) in c.edges() {
        let _ = writeln!(out, "{u} {w} {col}");
    }
    out
}

pub fn parse_text(text: &str) -> Result<EdgeColoring> {
    let mut header: Option<(usize, usize)> = None;
    let mut triples = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(lineno + 1, format!("expected integer, got `{s}`")))
            })
            .collect::<Result<Vec<usize>>>()?;
        match (header, nums.as_slice()) {
            (None, &[n, k]) => header = Some((n, k)),
            (None, _) => return Err(Error::parse(lineno + 1, "expected header `n k`")),
            (Some(_), &[u, w, c]) => triples.push((lineno + 1, u, w, c)),
            (Some(_), _) => return Err(Error::parse(lineno + 1, "expected `u v c`")),
        }
    }
    let (n, k) = header.ok_or_else(|| Error::parse(0, "empty coloring file"))?;
    assemble(n, k, &triples)
}

pub fn to_json(c: &EdgeColoring) -> String {
    serde_json::to_string(&ColoringJson::from(c)).expect("plain data serializes")
}

pub fn parse_json(text: &str) -> Result<EdgeColoring> {
    let j: ColoringJson = serde_json::from_str(text)?;
    EdgeColoring::try_from(j)
}

/// Reads a coloring, choosing the format by extension (`.json`) or by a
/// leading `{`.
pub fn read_coloring(path: &Path) -> Result<EdgeColoring> {
    let text = fs::read_to_string(path)?;
    if is_json(path, &text) {
        parse_json(&text)
    } else {
        parse_text(&text)
    }
}

/// Writes a coloring; `.json` paths get the JSON format.
pub fn write_coloring(path: &Path, c: &EdgeColoring) -> Result<()> {
    let body = if path.extension().is_some_and(|e| e == "json") {
        to_json(c)
    } else {
        to_text(c)
    };
    fs::write(path, body)?;
    Ok(())
}

fn is_json(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{')
}

fn assemble(n: usize, k: usize, triples: &[(usize, usize, usize, usize)]) -> Result<EdgeColoring> {
    if n < 1 {
        return Err(Error::parse(1, "n must be positive"));
    }
    let m = num_edges(n);
    let mut colors: Vec<Option<usize>> = vec![None; m];
    for &(line, u, w, c) in triples {
        if u == w || u >= n || w >= n {
            return Err(Error::parse(line, format!("bad edge ({u}, {w}) for n = {n}")));
        }
        if c >= k {
            return Err(Error::parse(line, format!("color {c} outside palette 0..{k}")));
        }
        let idx = index_unchecked(u, w, n);
        if colors[idx].replace(c).is_some() {
            return Err(Error::parse(line, format!("edge ({u}, {w}) listed twice")));
        }
    }
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.ok_or_else(|| {
                let (u, w) = super::edge_pair(i, n).expect("index in range");
                Error::parse(0, format!("edge ({u}, {w}) has no color"))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    EdgeColoring::from_raw(n, &colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let c = EdgeColoring::from_fn(5, |i, j| (i * 3 + j) % 4).unwrap();
        let text = to_text(&c);
        let back = parse_text(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(to_text(&back), text);
    }

    #[test]
    fn json_round_trip() {
        let c = EdgeColoring::from_fn(4, |i, _| i).unwrap();
        let back = parse_json(&to_json(&c)).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_text("3 2\n0 1 0\n0 2 1\n").is_err()); // missing edge
        assert!(parse_text("3 2\n0 1 0\n0 2 1\n1 2 0\n2 1 0\n").is_err()); // duplicate
        assert!(parse_text("3 2\n0 1 0\n0 2 1\n1 2 5\n").is_err()); // color out of range
        assert!(parse_text("3 2\n0 1 0\n0 2 1\n1 1 0\n").is_err()); // loop
        assert!(parse_text("3\n").is_err());
    }

    #[test]
    fn unordered_lines_accepted() {
        let c = parse_text("# comment\n3 3\n1 2 2\n0 2 1\n\n0 1 0\n").unwrap();
        assert_eq!(c.colors(), &[0, 1, 2]);
    }
}
