use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use egcolor::bounds::{
    classify_path, figure1_table, lll_exponent, quadratic_threshold, rainbow_class, render_markdown,
    render_text, threshold_report, Asymptotic, GrowthClass,
};
use egcolor::constructions::{
    constant_coloring, lll_coloring, one_factorization_coloring, order_coloring, xor_coloring,
    ConstantKind, LllOutcome, LllParams,
};
use egcolor::graph::io::{parse_json, parse_text, to_json, to_text, ColoringJson};
use egcolor::matching::maximum_matching;
use egcolor::solver::{exact_f, SolveOptions};
use egcolor::verifier::{class_stats, verify_parallel};
use egcolor::witness::{
    cherries_to_path, embed_tree, erdos_pair, find_p7_structure, p7_witness,
    string_matching_to_path, trichotomy, CherryConstants, RepeatPathWitness, TrichotomyConstants,
    TrichotomyOutcome,
};
use egcolor::{ColorId, Edge, EdgeColoring, PatternGraph, PatternKind};
use serde_json::{json, Value};

use crate::args::{
    ClassifyArgs, Command, ConstructArgs, Family, Format, Mode, Procedure, SolveArgs, StatsArgs,
    TableArgs, VerifyArgs, WitnessArgs,
};
use crate::manifest::Inputs;

/// Anything that ends the run with exit code 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(egcolor::Error),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<egcolor::Error> for CliError {
    fn from(e: egcolor::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Exit 0 on success, 1 on a negative answer.
pub struct Outcome {
    pub success: bool,
    pub text: String,
    pub result: Value,
}

impl Outcome {
    fn new(success: bool, text: String, result: Value) -> Self {
        Self { success, text, result }
    }
}

pub fn run(command: &Command, inputs: &mut Inputs) -> Result<Outcome> {
    match command {
        Command::Construct(a) => construct(a, inputs),
        Command::Verify(a) => verify_cmd(a, inputs),
        Command::Solve(a) => solve(a, inputs),
        Command::Classify(a) => classify(a, inputs),
        Command::Table(a) => table(a),
        Command::Witness(a) => witness(a, inputs),
        Command::Stats(a) => stats(a, inputs),
    }
}

/// `P5`, `S3`, `M2`, `K4`, or `@file` holding an explicit edge list.
fn load_pattern(spec: &str, inputs: &mut Inputs) -> Result<PatternGraph> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let bytes = inputs.read(Path::new(path))?;
            let text = String::from_utf8(bytes).map_err(|_| CliError::Usage(format!("{path} is not UTF-8")))?;
            Ok(PatternGraph::parse_edge_list(&text)?)
        }
        None => Ok(spec.parse()?),
    }
}

fn load_coloring(path: &Path, inputs: &mut Inputs) -> Result<EdgeColoring> {
    let bytes = inputs.read(path)?;
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::Usage(format!("{} is not UTF-8", path.display())))?;
    let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    Ok(if is_json { parse_json(&text)? } else { parse_text(&text)? })
}

fn write_coloring(c: &EdgeColoring, out: &Path, format: Option<Format>) -> Result<()> {
    let format = format.unwrap_or(if out.extension().is_some_and(|e| e == "json") {
        Format::Json
    } else {
        Format::Text
    });
    let body = match format {
        Format::Text => to_text(c),
        Format::Json => to_json(c),
    };
    fs::write(out, body)?;
    Ok(())
}

fn coloring_value(c: &EdgeColoring) -> Value {
    serde_json::to_value(ColoringJson::from(c)).expect("coloring serializes")
}

fn construct(a: &ConstructArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let mut extra = json!({});
    let coloring = match a.family {
        Family::Order => order_coloring(a.n, false)?,
        Family::OrderTweaked => order_coloring(a.n, true)?,
        Family::Factorization => one_factorization_coloring(a.n)?,
        Family::Xor => xor_coloring(a.n)?,
        Family::Mono => constant_coloring(a.n, ConstantKind::Monochromatic)?,
        Family::Rainbow => constant_coloring(a.n, ConstantKind::Rainbow)?,
        Family::Lll => {
            let (Some(spec), Some(q), Some(seed)) = (&a.pattern, a.q, a.seed) else {
                return Err(CliError::Usage("--family lll needs --pattern, --q and --seed".into()));
            };
            let pattern = load_pattern(spec, inputs)?;
            let params = LllParams {
                palette: a.palette,
                constant: a.constant,
                seed,
                max_resamples: a.max_resamples,
            };
            match lll_coloring(a.n, &pattern, q, &params)? {
                LllOutcome::Success { coloring, palette, resamples } => {
                    extra = json!({ "sample_palette": palette, "resamples": resamples });
                    coloring
                }
                LllOutcome::Exhausted { palette, resamples, violation, stats, .. } => {
                    let text = format!(
                        "failed: {resamples} resamples from a palette of {palette}; copy {:?} still has {} colors (< {q})\n",
                        violation.vertex_map, stats.distinct_colors
                    );
                    let result = json!({
                        "family": a.family,
                        "n": a.n,
                        "success": false,
                        "sample_palette": palette,
                        "resamples": resamples,
                        "violation": { "copy": violation, "stats": stats },
                    });
                    return Ok(Outcome::new(false, text, result));
                }
            }
        }
    };
    let mut result = json!({
        "family": a.family,
        "n": a.n,
        "palette_size": coloring.palette_size(),
        "success": true,
    });
    for (k, v) in extra.as_object().expect("object") {
        result[k] = v.clone();
    }
    let text = match &a.out {
        Some(out) => {
            write_coloring(&coloring, out, a.format)?;
            result["out"] = json!(out.display().to_string());
            format!(
                "wrote {} coloring of K_{} with {} colors to {}\n",
                family_name(a.family),
                a.n,
                coloring.palette_size(),
                out.display()
            )
        }
        None => {
            result["coloring"] = coloring_value(&coloring);
            match a.format {
                Some(Format::Json) => to_json(&coloring) + "\n",
                _ => to_text(&coloring),
            }
        }
    };
    Ok(Outcome::new(true, text, result))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Order => "order",
        Family::OrderTweaked => "order-tweaked",
        Family::Factorization => "factorization",
        Family::Xor => "xor",
        Family::Lll => "lll",
        Family::Mono => "mono",
        Family::Rainbow => "rainbow",
    }
}

fn verify_cmd(a: &VerifyArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let coloring = load_coloring(&a.coloring, inputs)?;
    let pattern = load_pattern(&a.pattern, inputs)?;
    let out = verify_parallel(&coloring, &pattern, a.q, a.threads)?;
    let mut text = String::new();
    match &out.violation {
        None if out.vacuous => {
            let _ = writeln!(text, "valid (vacuous): K_{} contains no copy of {pattern}", coloring.n());
        }
        None => {
            let _ = writeln!(
                text,
                "valid: all {} copies of {pattern} have at least {} colors",
                out.copies_checked, a.q
            );
        }
        Some(v) => {
            let colors: Vec<ColorId> = v.copy.edge_images.iter().map(|&(x, y)| coloring.color(x, y)).collect();
            let _ = writeln!(text, "violation: copy of {pattern} with {} colors (< {})", v.stats.distinct_colors, a.q);
            let _ = writeln!(text, "  vertex map: {:?}", v.copy.vertex_map);
            let _ = writeln!(text, "  edges:      {:?}", v.copy.edge_images);
            let _ = writeln!(text, "  colors:     {colors:?}");
            let _ = writeln!(text, "  repeats:    {}", v.stats.repeats);
        }
    }
    let violation = out.violation.as_ref().map(|v| {
        let colors: Vec<ColorId> = v.copy.edge_images.iter().map(|&(x, y)| coloring.color(x, y)).collect();
        json!({
            "vertex_map": v.copy.vertex_map,
            "edge_images": v.copy.edge_images,
            "colors": colors,
            "distinct_colors": v.stats.distinct_colors,
            "repeats": v.stats.repeats,
        })
    });
    let result = json!({
        "pattern": pattern.name(),
        "n": coloring.n(),
        "q": a.q,
        "valid": out.valid,
        "vacuous": out.vacuous,
        "copies_checked": out.copies_checked,
        "violation": violation,
    });
    Ok(Outcome::new(out.valid, text, result))
}

fn solve(a: &SolveArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let pattern = load_pattern(&a.pattern, inputs)?;
    let options = SolveOptions {
        budget: a.budget,
        k_max: a.kmax,
        threads: a.threads.max(1),
    };
    let r = exact_f(a.n, &pattern, a.q, &options)?;
    let mut result = json!({
        "n": a.n,
        "pattern": pattern.name(),
        "q": a.q,
        "value": r.value(),
        "lower_bound": r.lower_bound,
        "upper_bound": r.upper_bound,
        "nodes_explored": r.nodes_explored,
        "proof_of_optimality": r.proof_of_optimality,
    });
    let mut text = match r.value() {
        Some(v) => format!("f(K_{}, {pattern}, {}) = {v}\n", a.n, a.q),
        None => format!(
            "f(K_{}, {pattern}, {}) in [{}, {}] (search stopped)\n",
            a.n, a.q, r.lower_bound, r.upper_bound
        ),
    };
    let _ = writeln!(text, "nodes explored: {}", r.nodes_explored);
    match &a.out {
        Some(out) => {
            write_coloring(&r.witness, out, None)?;
            result["witness_file"] = json!(out.display().to_string());
            let _ = writeln!(text, "witness written to {}", out.display());
        }
        None => result["witness"] = coloring_value(&r.witness),
    }
    Ok(Outcome::new(r.proof_of_optimality, text, result))
}

/// What the thresholds say about `f(K_n, H, q)` at one `q`.
fn classify_at(h: &PatternGraph, q: usize) -> Result<(Option<GrowthClass>, String, String)> {
    let exp = lll_exponent(h, q)?;
    let two = Asymptotic::poly(2.into());
    let upper = Asymptotic::poly(exp).min(two);
    if let PatternKind::Path(v) = h.kind() {
        if v >= 3 && q >= 2 {
            let class = classify_path(v, q);
            let lo = class.lower().map_or("-".into(), |x| x.to_string());
            let up = class.upper().map_or("-".into(), |x| x.to_string());
            return Ok((Some(class), lo, up));
        }
    }
    if q == h.edge_count() {
        let class = rainbow_class(h);
        return Ok((Some(class), class.lower().expect("in range").to_string(), class.upper().expect("in range").to_string()));
    }
    if quadratic_threshold(h).general_q.is_some_and(|t| q >= t) {
        return Ok((Some(GrowthClass::Quadratic), "n^2".into(), "n^2".into()));
    }
    let lower = if q >= egcolor::bounds::linear_threshold(h) { "n" } else { "1" };
    Ok((None, lower.into(), upper.to_string()))
}

fn classify(a: &ClassifyArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let pattern = load_pattern(&a.pattern, inputs)?;
    let report = threshold_report(&pattern);
    let mut text = String::new();
    let _ = writeln!(text, "pattern {} (v={}, e={}, components={})", report.pattern, report.v, report.e, report.c);
    let _ = writeln!(text, "linear threshold: q >= {}", report.linear.omega_linear_q);
    if let (Some(q), Some(up)) = (report.linear.sublinear_q, &report.linear.sublinear_upper) {
        let _ = writeln!(text, "  at q = {q}: O({up})");
    }
    let quad = &report.quadratic;
    let _ = writeln!(text, "matching number {}, max degree {}", quad.matching_number, quad.max_degree);
    match quad.general_q {
        Some(q) => {
            let _ = writeln!(text, "quadratic from q >= {q}");
        }
        None => {
            let _ = writeln!(text, "no quadratic threshold below rainbow (b < 2)");
        }
    }
    if let Some(q) = quad.path_q {
        let _ = writeln!(text, "path threshold: quadratic exactly from q >= {q}");
    }
    let _ = writeln!(text, "rainbow (q = e): {}", report.rainbow_class);
    let _ = writeln!(text, "local-lemma exponents (v-2)/(e-q+1):");
    for (q, e) in &report.lll_exponents {
        let _ = writeln!(text, "  q={q}: {e}");
    }
    let mut result = serde_json::to_value(&report).expect("report serializes");
    if let Some(q) = a.q {
        let (class, lower, upper) = classify_at(&pattern, q)?;
        let label = match &class {
            Some(c) => c.to_string(),
            None => format!("undetermined, Ω({lower}) and O({upper})"),
        };
        let _ = writeln!(text, "at q = {q}: {label}");
        result["at_q"] = json!({ "q": q, "class": class, "lower": lower, "upper": upper });
    }
    Ok(Outcome::new(true, text, result))
}

fn table(a: &TableArgs) -> Result<Outcome> {
    let rows = figure1_table(a.vmin, a.vmax)?;
    let text = if a.markdown { render_markdown(&rows) } else { render_text(&rows) };
    let result = json!({ "vmin": a.vmin, "vmax": a.vmax, "rows": rows });
    Ok(Outcome::new(true, text, result))
}

fn stats(a: &StatsArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let coloring = load_coloring(&a.coloring, inputs)?;
    let stats = class_stats(&coloring);
    let mut text = format!("K_{} with {} colors\n", coloring.n(), coloring.palette_size());
    let _ = writeln!(text, "{:>6} {:>6} {:>9} {:>9} {:>7}", "color", "size", "maximal", "maximum", "max-deg");
    for s in &stats {
        let _ = writeln!(
            text,
            "{:>6} {:>6} {:>9} {:>9} {:>7}",
            s.color,
            s.size,
            s.maximal_matching.len(),
            s.maximum_matching_size,
            s.max_degree
        );
    }
    let result = json!({ "n": coloring.n(), "palette_size": coloring.palette_size(), "classes": stats });
    Ok(Outcome::new(true, text, result))
}

fn path_text(w: &RepeatPathWitness) -> String {
    format!(
        "path {:?}\ncolors {:?}\nrepeats {}\n",
        w.vertices, w.color_pattern, w.repeats
    )
}

fn not_found(procedure: Procedure, reason: String) -> Outcome {
    let text = format!("not found: {reason}\n");
    Outcome::new(false, text, json!({ "procedure": procedure, "found": false, "reason": reason }))
}

/// Maximum matching of every class, largest first (ties by color).
fn class_matchings(c: &EdgeColoring) -> Vec<(ColorId, Vec<Edge>)> {
    let mut out: Vec<(ColorId, Vec<Edge>)> = c
        .classes()
        .into_iter()
        .map(|view| (view.color, maximum_matching(&view.edges)))
        .collect();
    out.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
    out
}

fn witness(a: &WitnessArgs, inputs: &mut Inputs) -> Result<Outcome> {
    let c = load_coloring(&a.coloring, inputs)?;
    let n = c.n();
    let v = a.v;
    if v < 2 || v > n {
        return Err(CliError::Usage(format!("need 2 <= v <= n = {n}, got v = {v}")));
    }
    match a.procedure {
        Procedure::Trichotomy => {
            let constants = match a.mode {
                Mode::Strict => TrichotomyConstants::strict(),
                Mode::Relaxed => TrichotomyConstants::relaxed(),
            };
            let out = trichotomy(&c, v, &constants)?;
            let recheck = out.recheck(&c, v, &constants);
            let text = match &out {
                TrichotomyOutcome::RepeatPath { branch, witness } => {
                    format!("repeat path ({branch:?})\n{}", path_text(witness))
                }
                TrichotomyOutcome::ManyColors { color_count, implied_lower_bound, scanned } => {
                    let ks: Vec<usize> = scanned.iter().map(|s| s.k).collect();
                    format!(
                        "many colors: {color_count} colors, no scanned k {ks:?} has enough large classes; implied at least {implied_lower_bound}\n"
                    )
                }
                TrichotomyOutcome::ManyMatchingClasses { k, classes, required_matching, .. } => format!(
                    "many matching classes: {} classes of size >= {k} with matchings of at least {required_matching} edges\n",
                    classes.len()
                ),
                TrichotomyOutcome::Inconclusive { k, reason } => format!("inconclusive at k = {k}: {reason}\n"),
            };
            let found = !matches!(out, TrichotomyOutcome::Inconclusive { .. });
            let text = format!("{text}recheck: {recheck}\n");
            let result = json!({ "procedure": a.procedure, "found": found, "outcome": out, "recheck": recheck });
            Ok(Outcome::new(found && recheck, text, result))
        }
        Procedure::StringMatching => {
            let (color, m) = class_matchings(&c).into_iter().next().expect("at least one class");
            if m.len() < v / 2 {
                return Ok(not_found(
                    a.procedure,
                    format!("largest monochromatic matching has {} edges, need {}", m.len(), v / 2),
                ));
            }
            let w = string_matching_to_path(&m, &c, v)?;
            Ok(path_outcome(a.procedure, &c, w, json!({ "color": color, "matching": m })))
        }
        Procedure::Cherries => {
            if v < 3 {
                return Err(CliError::Usage("cherries need v >= 3".into()));
            }
            let matchings = class_matchings(&c);
            let sets: Vec<Vec<usize>> = matchings
                .iter()
                .map(|(_, m)| m.iter().flat_map(|&(x, y)| [x, y]).collect())
                .collect();
            let smallest = sets.iter().map(Vec::len).min().unwrap_or(0).max(1);
            let d = smallest as f64 / (n as f64).sqrt();
            let Some(pair) = erdos_pair(&sets, n, d)? else {
                return Ok(not_found(a.procedure, "fewer than two colors".into()));
            };
            let constants = match a.mode {
                Mode::Strict => CherryConstants::strict(v),
                Mode::Relaxed => CherryConstants::relaxed(v),
            };
            let (ci, mi) = &matchings[pair.i];
            let (cj, mj) = &matchings[pair.j];
            match cherries_to_path(mi, mj, v, &c, constants)? {
                Some(w) => Ok(path_outcome(
                    a.procedure,
                    &c,
                    w,
                    json!({ "colors": [ci, cj], "overlap": pair.intersection.len(), "erdos_pair": pair }),
                )),
                None => Ok(not_found(
                    a.procedure,
                    format!(
                        "colors {ci} and {cj} overlap on {} vertices; {} required or too few disjoint cherries",
                        pair.intersection.len(),
                        constants.min_overlap
                    ),
                )),
            }
        }
        Procedure::P7 => {
            if v != 7 || n < 7 {
                return Err(CliError::Usage("p7 needs --v 7 and n >= 7".into()));
            }
            let (color, m) = class_matchings(&c).into_iter().next().expect("at least one class");
            if m.len() < 3 {
                return Ok(not_found(a.procedure, format!("largest monochromatic matching has {} edges, need 3", m.len())));
            }
            let Some(structure) = find_p7_structure(&c, color, &m)? else {
                return Ok(not_found(a.procedure, "no extra edge and no second color with five edges inside V(M)".into()));
            };
            match p7_witness(&c, color, &m, &structure)? {
                Some(w) => Ok(path_outcome(
                    a.procedure,
                    &c,
                    w.witness,
                    json!({ "color": color, "matching": m, "structure": structure, "template": w.template }),
                )),
                None => Ok(not_found(a.procedure, "no template fits".into())),
            }
        }
        Procedure::EmbedTree => {
            let tree = match &a.pattern {
                Some(spec) => load_pattern(spec, inputs)?,
                None => PatternGraph::path(v)?,
            };
            if !tree.is_tree() {
                return Err(CliError::Usage(format!("{tree} is not a tree")));
            }
            let mut classes = c.classes();
            classes.sort_by(|x, y| y.size().cmp(&x.size()).then(x.color.cmp(&y.color)));
            for class in &classes {
                if let Some(map) = embed_tree(&class.edges, n, &tree)? {
                    let ok = tree.edges().iter().all(|&(x, y)| c.color(map[x], map[y]) == class.color);
                    let text = format!("monochromatic {tree} in color {}: vertex map {map:?}\nrecheck: {ok}\n", class.color);
                    let result = json!({
                        "procedure": a.procedure,
                        "found": true,
                        "tree": tree.name(),
                        "color": class.color,
                        "vertex_map": map,
                        "recheck": ok,
                    });
                    return Ok(Outcome::new(ok, text, result));
                }
            }
            Ok(not_found(a.procedure, format!("no color class contains {tree}")))
        }
    }
}

fn path_outcome(procedure: Procedure, c: &EdgeColoring, w: RepeatPathWitness, inputs: Value) -> Outcome {
    let recheck = w.recheck(c);
    let text = format!("{}recheck: {recheck}\n", path_text(&w));
    let result = json!({
        "procedure": procedure,
        "found": true,
        "inputs": inputs,
        "witness": w,
        "recheck": recheck,
    });
    Outcome::new(recheck, text, result)
}
