//! Command implementations. Each returns its standard output and exit code:
//! 0 pass, 1 property failure, 2 bad input, 3 capacity.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use tckit_core::carving::verify_duality;
use tckit_core::census::{canonical_string, CensusOptions};
use tckit_core::decompose::is_xi_nice;
use tckit_core::immersion::{degree_condition_failure, find_immersion, immersion_free_counts};
use tckit_core::smoothing::{smooth_refine, SmoothOptions};
use tckit_core::treecut::{min_tree_cut_width, TreeCutDecomposition};

use crate::battery::{run_battery, BatteryConfig};
use crate::io::{self, parse_graph, read_file, write_decomposition, write_immersion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

pub type Result = std::result::Result<Outcome, io::Error>;

fn load_graph(path: &Path) -> std::result::Result<tckit_core::graph::MultiGraph, io::Error> {
    parse_graph(&read_file(path)?)
}

fn verdict(ok: Option<bool>) -> &'static str {
    match ok {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "SKIP",
    }
}

pub fn width(path: &Path, xi: Option<usize>, format: Format) -> Result {
    let g = load_graph(path)?;
    let r = verify_duality(&g)?;
    let (tcw, _) = min_tree_cut_width(&g)?;
    let mut out = match format {
        Format::Human => format!(
            "tctw={} cw={} tcw={tcw} mu={} duality={}\n",
            r.tctw,
            r.cw,
            r.mu,
            verdict(Some(r.passes()))
        ),
        Format::Machine => format!(
            "{} {} {} {} {} {} {}\n",
            canonical_string(&g),
            r.tctw,
            r.cw,
            r.mu,
            verdict(Some(r.lower_bounds)),
            verdict(r.loopless_bound),
            verdict(Some(r.tangle_bound))
        ),
    };
    if let Some(xi) = xi {
        let nice = is_xi_nice(&g, xi)?.is_some();
        writeln!(out, "nice(xi={xi})={}", if nice { "yes" } else { "no" }).unwrap();
    }
    Ok(Outcome { stdout: out, code: if r.passes() { 0 } else { 1 } })
}

/// Smooths the single-bag decomposition (or `start`, when given). The
/// output is a decomposition file; the summary follows as comments.
pub fn smooth(path: &Path, start: Option<&Path>, theta: usize, prune: bool) -> Result {
    let g = load_graph(path)?;
    let d = match start {
        Some(p) => io::parse_decomposition(&g, &read_file(p)?)?,
        None => TreeCutDecomposition::trivial(g),
    };
    let out = smooth_refine(&d, theta, SmoothOptions { prune_empty: prune })?;
    let mut s = write_decomposition(&out.decomposition);
    writeln!(s, "# iterations {}", out.iterations()).unwrap();
    let last = out.signatures.last().expect("initial signature");
    for (i, row) in last.rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(s, "# a{} {}", theta - i, cells.join(" ")).unwrap();
    }
    Ok(Outcome::ok(s))
}

pub fn immerse(g_path: &Path, h_path: &Path) -> Result {
    let g = load_graph(g_path)?;
    let h = load_graph(h_path)?;
    let out = match find_immersion(&g, &h)? {
        Some(w) => write_immersion(&w),
        None => match degree_condition_failure(&g, &h) {
            Some(k) => format!("NO IMMERSION\ndegree condition fails at k={k}\n"),
            None => "NO IMMERSION\n".into(),
        },
    };
    Ok(Outcome::ok(out))
}

pub fn verify_all(cfg: &BatteryConfig, format: Format) -> Result {
    let start = Instant::now();
    let r = run_battery(cfg)?;
    let mut s = String::new();
    if format == Format::Human {
        writeln!(s, "census: {} graphs (vertices <= {}, edges <= {})", r.graphs, cfg.max_vertices, cfg.max_edges).unwrap();
    }
    for (name, t) in &r.tallies {
        let v = verdict(Some(t.failed == 0));
        match format {
            Format::Human => writeln!(s, "{v} {name}: {} checked, {} failed", t.checked, t.failed).unwrap(),
            Format::Machine => writeln!(s, "{name} {} {} {v}", t.checked, t.failed).unwrap(),
        }
    }
    for c in &r.counterexamples {
        writeln!(s, "counterexample {}: {}", c.property, c.detail).unwrap();
        for l in io::write_graph(&c.graph).lines() {
            writeln!(s, "  {l}").unwrap();
        }
    }
    if format == Format::Human {
        writeln!(s, "runtime {:.2}s", start.elapsed().as_secs_f64()).unwrap();
    }
    Ok(Outcome { stdout: s, code: if r.passes() { 0 } else { 1 } })
}

/// Per edge count `m`: the unlabelled graphs without isolated vertices
/// whose maximal 2-edge-connected subgraphs are `d`-edge-connected (`d`
/// defaults to the largest degree of `H`) and that do not immerse `H`.
pub fn census_count(h_path: &Path, degree: Option<usize>, cfg: &BatteryConfig) -> Result {
    cfg.check()?;
    let h = load_graph(h_path)?;
    let d = degree.unwrap_or(h.max_degree());
    let opts = CensusOptions { loop_cap: cfg.loop_cap, parallel_cap: cfg.parallel_cap, connected: false };
    let counts = immersion_free_counts(&h, d, cfg.max_vertices, cfg.max_edges, opts)?;
    let mut s = String::new();
    for (m, c) in counts.iter().enumerate() {
        writeln!(s, "{m} {c}").unwrap();
    }
    Ok(Outcome::ok(s))
}
