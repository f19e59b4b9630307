//! Exact computation of `f(K_n, H, q)` at small `n`.
//!
//! Edges are colored in index order; edge `e` may take a color at most one
//! above the largest color used so far (restricted growth), so every
//! partition of the edge set is visited once. After each assignment the
//! copies through the new edge are checked: with `d` colors so far and `u`
//! uncolored edges, a copy can end with at most `d + min(u, k - d)` colors.

mod brute;

pub use brute::brute_force_f;

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use crate::error::{Error, Result};
use crate::graph::{copy_edge_indices, num_edges, EdgeColoring, PatternGraph};

/// Default total node budget of [`exact_f`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest host with one bit per edge in a `u128` color mask.
const MAX_EDGES: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Total search nodes over all palette sizes tried.
    pub budget: u64,
    /// Largest palette tried; `None` means `C(n, 2)`.
    pub k_max: Option<usize>,
    /// Worker threads; `1` runs the plain sequential search.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            k_max: None,
            threads: 1,
        }
    }
}

/// Answer of the decision search for one palette size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Colorability {
    Colorable(EdgeColoring),
    /// The search space was exhausted.
    NotColorable,
    /// The node budget ran out first.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub n: usize,
    pub pattern: PatternGraph,
    pub q: usize,
    /// Every palette below this size was refuted.
    pub lower_bound: usize,
    /// Palette size of `witness`.
    pub upper_bound: usize,
    pub witness: EdgeColoring,
    pub nodes_explored: u64,
    /// `lower_bound == upper_bound`, certified by exhausted searches.
    pub proof_of_optimality: bool,
}

impl SolveResult {
    /// `f(K_n, H, q)` when proven.
    pub fn value(&self) -> Option<usize> {
        self.proof_of_optimality.then_some(self.upper_bound)
    }
}

/// Copy lists shared by every search on one `(n, H, q)`.
struct Instance {
    n: usize,
    q: usize,
    edge_count: usize,
    copy_len: usize,
    /// Copies through each edge, by copy id.
    through: Vec<Vec<usize>>,
    copy_count: usize,
}

impl Instance {
    fn new(n: usize, pattern: &PatternGraph, q: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("need n >= 2"));
        }
        let e = pattern.edge_count();
        if q < 1 || q > e {
            return Err(Error::invalid(format!("need 1 <= q <= e(H) = {e}, got q = {q}")));
        }
        let edge_count = num_edges(n);
        if edge_count > MAX_EDGES {
            return Err(Error::TooLarge(format!(
                "K_{n} has {edge_count} edges; the exact solver handles at most {MAX_EDGES}"
            )));
        }
        let copies = copy_edge_indices(pattern, n);
        let mut through = vec![Vec::new(); edge_count];
        for (id, copy) in copies.iter().enumerate() {
            for &idx in copy {
                through[idx].push(id);
            }
        }
        Ok(Self {
            n,
            q,
            edge_count,
            copy_len: e,
            through,
            copy_count: copies.len(),
        })
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

/// Mutable state of one depth-first search.
struct Search<'a> {
    inst: &'a Instance,
    k: usize,
    colors: Vec<u8>,
    masks: Vec<u128>,
    uncolored: Vec<u8>,
    nodes: &'a AtomicU64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance, k: usize, nodes: &'a AtomicU64, budget: u64) -> Self {
        Self {
            inst,
            k,
            colors: Vec::with_capacity(inst.edge_count),
            masks: vec![0; inst.copy_count],
            uncolored: vec![inst.copy_len as u8; inst.copy_count],
            nodes,
            budget,
        }
    }

    /// Colors the next edge with `c` unless a copy through it is doomed.
    fn assign(&mut self, c: u8) -> bool {
        let edge = self.colors.len();
        let bit = 1u128 << c;
        let ok = self.inst.through[edge].iter().all(|&id| {
            let mask = self.masks[id] | bit;
            let d = mask.count_ones() as usize;
            let u = self.uncolored[id] as usize - 1;
            d + u.min(self.k.saturating_sub(d)) >= self.inst.q
        });
        if !ok {
            return false;
        }
        for &id in &self.inst.through[edge] {
            self.masks[id] |= bit;
            self.uncolored[id] -= 1;
        }
        self.colors.push(c);
        true
    }

    /// Undoes the last assignment. Masks are rebuilt from the colored edges
    /// of each affected copy, which is cheap for small patterns.
    fn unassign(&mut self, copies: &[Vec<usize>]) {
        let edge = self.colors.len() - 1;
        self.colors.pop();
        for &id in &self.inst.through[edge] {
            self.uncolored[id] += 1;
            self.masks[id] = copies[id]
                .iter()
                .filter(|&&x| x < edge)
                .fold(0u128, |m, &x| m | 1u128 << self.colors[x]);
        }
    }

    fn next_allowed(&self) -> u8 {
        let used = self.colors.iter().copied().max().map_or(0, |m| m + 1);
        used.min(self.k as u8 - 1)
    }

    fn run(&mut self, copies: &[Vec<usize>]) -> Step {
        if self.colors.len() == self.inst.edge_count {
            return Step::Found;
        }
        for c in 0..=self.next_allowed() {
            if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
                return Step::OutOfBudget;
            }
            if !self.assign(c) {
                continue;
            }
            match self.run(copies) {
                Step::Exhausted => self.unassign(copies),
                other => return other,
            }
        }
        Step::Exhausted
    }
}

fn coloring_of(inst: &Instance, colors: &[u8]) -> Result<EdgeColoring> {
    EdgeColoring::from_raw(inst.n, colors)
}

/// Restricted-growth prefixes of length `depth` surviving the prune, in
/// depth-first order.
fn prefixes(inst: &Instance, copies: &[Vec<usize>], k: usize, depth: usize) -> Vec<Vec<u8>> {
    let nodes = AtomicU64::new(0);
    let mut search = Search::new(inst, k, &nodes, u64::MAX);
    let mut out = Vec::new();
    fn walk(s: &mut Search, copies: &[Vec<usize>], depth: usize, out: &mut Vec<Vec<u8>>) {
        if s.colors.len() == depth {
            out.push(s.colors.clone());
            return;
        }
        for c in 0..=s.next_allowed() {
            if s.assign(c) {
                walk(s, copies, depth, out);
                s.unassign(copies);
            }
        }
    }
    walk(&mut search, copies, depth, &mut out);
    out
}

fn decide(
    inst: &Instance,
    copies: &[Vec<usize>],
    k: usize,
    nodes: &AtomicU64,
    budget: u64,
    threads: usize,
) -> Result<Colorability> {
    if inst.copy_count == 0 {
        return Ok(Colorability::Colorable(coloring_of(inst, &vec![0; inst.edge_count])?));
    }
    if threads <= 1 {
        let mut search = Search::new(inst, k, nodes, budget);
        return Ok(match search.run(copies) {
            Step::Found => Colorability::Colorable(coloring_of(inst, &search.colors)?),
            Step::Exhausted => Colorability::NotColorable,
            Step::OutOfBudget => Colorability::Unknown,
        });
    }

    // Branches are scanned in depth-first order, so taking the first branch
    // that succeeds reproduces the sequential witness.
    let depth = inst.edge_count.min(6);
    let branches = prefixes(inst, copies, k, depth);
    type Slot = Option<(Step, Vec<u8>)>;
    let results: Mutex<Vec<Slot>> =
        Mutex::new((0..branches.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    let first_found = AtomicUsize::new(usize::MAX);
    thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let b = next.fetch_add(1, Ordering::Relaxed);
                if b >= branches.len() || b > first_found.load(Ordering::Relaxed) {
                    break;
                }
                let mut search = Search::new(inst, k, nodes, budget);
                let replayed = branches[b].iter().all(|&c| search.assign(c));
                debug_assert!(replayed);
                let step = search.run(copies);
                if matches!(step, Step::Found) {
                    first_found.fetch_min(b, Ordering::Relaxed);
                }
                results.lock().expect("solver worker panicked")[b] = Some((step, search.colors));
            });
        }
    });
    for slot in results.into_inner().expect("solver worker panicked") {
        match slot {
            Some((Step::Found, colors)) => {
                return Ok(Colorability::Colorable(coloring_of(inst, &colors)?));
            }
            Some((Step::OutOfBudget, _)) => return Ok(Colorability::Unknown),
            Some((Step::Exhausted, _)) => {}
            // Skipped because an earlier branch already succeeded.
            None => break,
        }
    }
    Ok(Colorability::NotColorable)
}

/// Is there an `(H, q)`-coloring of `K_n` with at most `k` colors?
pub fn is_colorable(
    n: usize,
    pattern: &PatternGraph,
    q: usize,
    k: usize,
    budget: u64,
) -> Result<(Colorability, u64)> {
    if k < 1 {
        return Err(Error::invalid("palette bound must be positive"));
    }
    let inst = Instance::new(n, pattern, q)?;
    let copies = copy_edge_indices(pattern, n);
    let nodes = AtomicU64::new(0);
    let answer = decide(&inst, &copies, k.min(inst.edge_count), &nodes, budget, 1)?;
    Ok((answer, nodes.load(Ordering::Relaxed).min(budget)))
}

/// `f(K_n, H, q)` by trying `k = 1, 2, ...` until a coloring is found.
///
/// If the budget runs out (or `k_max` is reached) the result brackets the
/// value: every `k < lower_bound` was refuted and `witness` uses
/// `upper_bound` colors (the rainbow coloring if nothing better was found).
pub fn exact_f(n: usize, pattern: &PatternGraph, q: usize, options: &SolveOptions) -> Result<SolveResult> {
    let inst = Instance::new(n, pattern, q)?;
    let copies = copy_edge_indices(pattern, n);
    let nodes = AtomicU64::new(0);
    let k_max = options.k_max.unwrap_or(inst.edge_count).clamp(1, inst.edge_count);
    let mut lower = 1;
    for k in 1..=k_max {
        match decide(&inst, &copies, k, &nodes, options.budget, options.threads)? {
            Colorability::Colorable(witness) => {
                return Ok(SolveResult {
                    n,
                    pattern: pattern.clone(),
                    q,
                    lower_bound: k,
                    upper_bound: witness.palette_size(),
                    witness,
                    nodes_explored: nodes.load(Ordering::Relaxed).min(options.budget),
                    proof_of_optimality: true,
                });
            }
            Colorability::NotColorable => lower = k + 1,
            Colorability::Unknown => break,
        }
    }
    let rainbow: Vec<usize> = (0..inst.edge_count).collect();
    let witness = EdgeColoring::from_raw(n, &rainbow)?;
    Ok(SolveResult {
        n,
        pattern: pattern.clone(),
        q,
        lower_bound: lower,
        upper_bound: inst.edge_count,
        witness,
        nodes_explored: nodes.load(Ordering::Relaxed).min(options.budget),
        proof_of_optimality: lower == inst.edge_count,
    })
}
