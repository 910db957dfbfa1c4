//! Text formats for graphs, decompositions, certificates and tangles.
//!
//! Graph: a header line `n m` followed by `m` lines `u v` (vertices are
//! `0..n`, edge ids follow line order). Blank lines and text after `#` are
//! ignored in every format.

use std::fmt::Write as _;
use std::path::Path;

use tckit_core::decompose::Certificate;
use tckit_core::graph::{MultiGraph, VertexSet};
use tckit_core::immersion::Immersion;
use tckit_core::tangles::EdgeTangle;
use tckit_core::treecut::TreeCutDecomposition;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] tckit_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl Error {
    /// 3 for capacity errors, 2 for everything else (bad input).
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Core(tckit_core::Error::Capacity { .. }) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number(line: usize, word: &str) -> Result<usize> {
    word.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, found `{word}`")))
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>> {
    words.iter().map(|w| number(line, w)).collect()
}

pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut it = lines(text);
    let (line, header) = it.next().ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let [n, m] = numbers(line, &header)?[..] else {
        return Err(parse_err(line, "header must be `n m`"));
    };
    if n > tckit_core::graph::MAX_VERTICES {
        return Err(tckit_core::Error::Capacity { what: "vertex count", limit: tckit_core::graph::MAX_VERTICES, got: n }.into());
    }
    let mut g = MultiGraph::new(n);
    let mut last = line;
    for (line, words) in it {
        last = line;
        let [u, v] = numbers(line, &words)?[..] else {
            return Err(parse_err(line, "edge lines must be `u v`"));
        };
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range 0..{n}")));
        }
        if g.edge_count() == m {
            return Err(parse_err(line, format!("more than the {m} edges announced")));
        }
        g.add_edge(u, v)?;
    }
    if g.edge_count() != m {
        return Err(parse_err(last, format!("expected {m} edges, found {}", g.edge_count())));
    }
    Ok(g)
}

pub fn write_graph(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}

pub fn write_decomposition(d: &TreeCutDecomposition) -> String {
    let mut out = format!("tree {}\n", d.node_count());
    for (t, bag) in d.bags().iter().enumerate() {
        write!(out, "node {t} bag").unwrap();
        for v in bag.iter() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for &(x, y) in d.tree_edges() {
        writeln!(out, "tedge {x} {y}").unwrap();
    }
    out
}

/// Decomposition lines seen so far; certificate lines are handed back.
struct DecompositionParser {
    size: Option<(usize, usize)>,
    bags: Vec<Option<VertexSet>>,
    edges: Vec<(usize, usize)>,
}

impl DecompositionParser {
    fn new() -> Self {
        DecompositionParser { size: None, bags: Vec::new(), edges: Vec::new() }
    }

    fn p(&self, line: usize) -> Result<usize> {
        self.size.map(|s| s.0).ok_or_else(|| parse_err(line, "`tree p` must come first"))
    }

    fn node(&self, line: usize, word: &str) -> Result<usize> {
        let t = number(line, word)?;
        if t >= self.p(line)? {
            return Err(parse_err(line, format!("node {t} out of range")));
        }
        Ok(t)
    }

    /// Returns false when the line is not a decomposition line.
    fn feed(&mut self, g: &MultiGraph, line: usize, words: &[&str]) -> Result<bool> {
        match words[0] {
            "tree" => {
                if self.size.is_some() {
                    return Err(parse_err(line, "repeated `tree` line"));
                }
                let [p] = numbers(line, &words[1..])?[..] else {
                    return Err(parse_err(line, "expected `tree p`"));
                };
                if p == 0 {
                    return Err(parse_err(line, "a tree needs at least one node"));
                }
                self.size = Some((p, line));
                self.bags = vec![None; p];
            }
            "node" => {
                if words.len() < 3 || words[2] != "bag" {
                    return Err(parse_err(line, "expected `node <id> bag v...`"));
                }
                let t = self.node(line, words[1])?;
                let mut bag = VertexSet::EMPTY;
                for v in numbers(line, &words[3..])? {
                    if v >= g.vertex_count() {
                        return Err(parse_err(line, format!("vertex {v} out of range")));
                    }
                    bag.insert(v);
                }
                if self.bags[t].replace(bag).is_some() {
                    return Err(parse_err(line, format!("node {t} listed twice")));
                }
            }
            "tedge" => {
                if words.len() != 3 {
                    return Err(parse_err(line, "expected `tedge a b`"));
                }
                self.edges.push((self.node(line, words[1])?, self.node(line, words[2])?));
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn finish(self, g: &MultiGraph, last: usize) -> Result<TreeCutDecomposition> {
        let (_, line) = self.size.ok_or_else(|| parse_err(last, "missing `tree p`"))?;
        let bags: Vec<VertexSet> = self.bags.into_iter().map(Option::unwrap_or_default).collect();
        let d = TreeCutDecomposition::from_parts(g.clone(), bags, self.edges);
        if let Some(p) = d.validate().problems.first() {
            return Err(parse_err(line, format!("invalid decomposition: {p:?}")));
        }
        Ok(d)
    }
}

pub fn parse_decomposition(g: &MultiGraph, text: &str) -> Result<TreeCutDecomposition> {
    let mut parser = DecompositionParser::new();
    let mut last = 1;
    for (line, words) in lines(text) {
        last = line;
        if !parser.feed(g, line, &words)? {
            return Err(parse_err(line, format!("unknown directive `{}`", words[0])));
        }
    }
    parser.finish(g, last)
}

/// The decomposition format plus `zset t: ids`, `kt t: k`, `uset t: vs`
/// and `bounds eta xi`.
pub fn parse_certificate(g: &MultiGraph, text: &str) -> Result<Certificate> {
    let mut parser = DecompositionParser::new();
    let mut extra = Vec::new();
    let mut last = 1;
    for (line, words) in lines(text) {
        last = line;
        if !parser.feed(g, line, &words)? {
            extra.push((line, words));
        }
    }
    let d = parser.finish(g, last)?;
    let mut cert = Certificate::plain(d, 0, 0, 0);
    let mut bounds = false;
    let p = cert.decomposition.node_count();
    for (line, words) in extra {
        if words[0] == "bounds" {
            let [eta, xi] = numbers(line, &words[1..])?[..] else {
                return Err(parse_err(line, "expected `bounds eta xi`"));
            };
            (cert.eta, cert.xi, bounds) = (eta, xi, true);
            continue;
        }
        let node = words.get(1).and_then(|w| w.strip_suffix(':')).ok_or_else(|| parse_err(line, "expected `<key> t: ...`"))?;
        let t = number(line, node)?;
        if t >= p {
            return Err(parse_err(line, format!("node {t} out of range")));
        }
        let values = numbers(line, &words[2..])?;
        match words[0] {
            "zset" => cert.z[t] = values.into_iter().map(|x| x as u32).collect(),
            "kt" => {
                let [k] = values[..] else {
                    return Err(parse_err(line, "expected `kt t: k`"));
                };
                cert.k[t] = k;
            }
            "uset" => {
                if values.iter().any(|&v| v >= g.vertex_count()) {
                    return Err(parse_err(line, "vertex out of range"));
                }
                cert.u[t] = Some(values.into_iter().collect());
            }
            other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    if !bounds {
        return Err(parse_err(last, "missing `bounds eta xi`"));
    }
    Ok(cert)
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = write_decomposition(&cert.decomposition);
    for t in 0..cert.decomposition.node_count() {
        let ids: Vec<String> = cert.z[t].iter().map(|x| x.to_string()).collect();
        writeln!(out, "zset {t}: {}", ids.join(" ")).unwrap();
        writeln!(out, "kt {t}: {}", cert.k[t]).unwrap();
        if let Some(u) = cert.u[t] {
            let vs: Vec<String> = u.iter().map(|v| v.to_string()).collect();
            writeln!(out, "uset {t}: {}", vs.join(" ")).unwrap();
        }
    }
    writeln!(out, "bounds {} {}", cert.eta, cert.xi).unwrap();
    out
}

/// One line per member: the sorted A-side, then ` : ` and the cut order.
pub fn write_tangle(g: &MultiGraph, t: &EdgeTangle) -> String {
    let mut out = String::new();
    for a in t.members() {
        let vs: Vec<String> = a.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{} : {}", vs.join(" "), g.cut_order(a)).unwrap();
    }
    out
}

pub fn write_immersion(w: &Immersion) -> String {
    let mut out = String::from("IMMERSION FOUND\n");
    for (x, y) in w.vertex_map.iter().enumerate() {
        writeln!(out, "v {x}->{y}").unwrap();
    }
    for (id, path) in &w.edge_map {
        let ids: Vec<String> = path.iter().map(|x| x.to_string()).collect();
        writeln!(out, "e {id}: {}", ids.join(" ")).unwrap();
    }
    out
}
