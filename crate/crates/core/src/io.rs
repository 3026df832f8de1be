//! Line-oriented text formats.
//!
//! Instance files:
//!
//! ```text
//! # comment
//! p gm <n> <m>
//! e <u> <v>          one per edge, 0-indexed, u != v
//! c <v> <color>      exactly one per vertex
//! m <color> <mult>   one per motif color, mult >= 1
//! ```
//!
//! Colors in a file may be arbitrary non-negative integers; they are
//! re-mapped to dense ids `0..k` in increasing order of the external id.
//! Witness files hold whitespace-separated vertex ids. Clique cover files
//! hold one clique per line. Certificate files hold `map <token> <vertex>`
//! and `claim <parameter> <value>` lines.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{Coloring, Graph, Instance, Motif, Vertex};

/// Strips a trailing `#` comment and surrounding whitespace.
fn content(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("bad {what} '{tok}'")))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut vertex_colors: Vec<(usize, usize, usize)> = Vec::new();
    let mut motif_entries: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let kind = toks.next().unwrap();
        match kind {
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(lineno, "duplicate header"));
                }
                if toks.next() != Some("gm") {
                    return Err(Error::parse(lineno, "expected 'p gm <n> <m>'"));
                }
                let n = num(toks.next(), lineno, "vertex count")?;
                let m = num(toks.next(), lineno, "edge count")?;
                header = Some((n, m));
            }
            "e" | "c" | "m" => {
                if header.is_none() {
                    return Err(Error::parse(lineno, "record before 'p gm' header"));
                }
                let a = num(toks.next(), lineno, "first field")?;
                let b = num(toks.next(), lineno, "second field")?;
                match kind {
                    "e" => edges.push((lineno, a, b)),
                    "c" => vertex_colors.push((lineno, a, b)),
                    _ => motif_entries.push((lineno, a, b)),
                }
            }
            other => return Err(Error::parse(lineno, format!("unknown record '{other}'"))),
        }
        if toks.next().is_some() {
            return Err(Error::parse(lineno, "trailing tokens"));
        }
    }

    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing 'p gm' header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            0,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    let mut seen_edges = BTreeSet::new();
    for &(lineno, u, v) in &edges {
        if u >= n || v >= n {
            return Err(Error::parse(lineno, format!("edge endpoint out of range (n={n})")));
        }
        if u == v {
            return Err(Error::parse(lineno, "self-loop"));
        }
        if !seen_edges.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(lineno, "duplicate edge"));
        }
    }

    // dense color ids, ordered by external id
    let external: BTreeSet<usize> = vertex_colors
        .iter()
        .map(|&(_, _, c)| c)
        .chain(motif_entries.iter().map(|&(_, c, _)| c))
        .collect();
    let dense: BTreeMap<usize, usize> = external.iter().enumerate().map(|(i, &c)| (c, i)).collect();

    let mut colors: Vec<Option<usize>> = vec![None; n];
    for &(lineno, v, c) in &vertex_colors {
        if v >= n {
            return Err(Error::parse(lineno, format!("vertex {v} out of range (n={n})")));
        }
        if colors[v].is_some() {
            return Err(Error::parse(lineno, format!("vertex {v} colored twice")));
        }
        colors[v] = Some(dense[&c]);
    }
    let colors: Vec<usize> = colors
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::parse(0, format!("vertex {v} has no color"))))
        .collect::<Result<_>>()?;

    let mut motif = Motif::new();
    let mut motif_colors = BTreeSet::new();
    for &(lineno, c, k) in &motif_entries {
        if k == 0 {
            return Err(Error::parse(lineno, "motif multiplicity must be at least 1"));
        }
        if !motif_colors.insert(c) {
            return Err(Error::parse(lineno, format!("motif color {c} listed twice")));
        }
        motif.add(dense[&c], k);
    }
    if motif.is_empty() {
        return Err(Error::parse(0, "empty motif"));
    }

    let edge_list: Vec<(usize, usize)> = edges.iter().map(|&(_, u, v)| (u, v)).collect();
    let graph = Graph::from_edges(n, &edge_list)?;
    Instance::new(graph, Coloring::new(colors), motif)
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let edges = inst.graph.edges();
    let _ = writeln!(out, "p gm {} {}", inst.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {u} {v}");
    }
    for v in 0..inst.n() {
        let _ = writeln!(out, "c {v} {}", inst.color(v));
    }
    for (c, k) in inst.motif.iter() {
        let _ = writeln!(out, "m {c} {k}");
    }
    out
}

/// Whitespace-separated vertex ids; `#` comments allowed. A leading `YES`
/// token is skipped, so the output of `solve` is itself a witness file.
pub fn parse_witness(text: &str) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut first = true;
    for (idx, raw) in text.lines().enumerate() {
        for tok in content(raw).split_whitespace() {
            if std::mem::take(&mut first) && tok == "YES" {
                continue;
            }
            out.push(num(Some(tok), idx + 1, "vertex id")?);
        }
    }
    Ok(out)
}

pub fn write_witness(w: &[Vertex]) -> String {
    let ids: Vec<String> = w.iter().map(|v| v.to_string()).collect();
    format!("{}\n", ids.join(" "))
}

/// One clique per non-empty line.
pub fn parse_cliques(text: &str) -> Result<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let clique = line
            .split_whitespace()
            .map(|t| num(Some(t), idx + 1, "vertex id"))
            .collect::<Result<Vec<_>>>()?;
        out.push(clique);
    }
    Ok(out)
}

pub fn write_cliques(cliques: &[Vec<Vertex>]) -> String {
    cliques.iter().map(|c| write_witness(c)).collect()
}

/// Sidecar certificate: token-to-vertex map plus claimed parameter values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub map: Vec<(String, Vertex)>,
    pub claims: Vec<(String, String)>,
}

impl Certificate {
    pub fn vertex(&self, token: &str) -> Option<Vertex> {
        self.map.iter().find(|(t, _)| t == token).map(|&(_, v)| v)
    }

    pub fn claim(&self, name: &str) -> Option<&str> {
        self.claims
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    for (tok, v) in &cert.map {
        let _ = writeln!(out, "map {tok} {v}");
    }
    for (name, value) in &cert.claims {
        let _ = writeln!(out, "claim {name} {value}");
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut cert = Certificate::default();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["map", tok, v] => cert.map.push((tok.to_string(), num(Some(v), lineno, "vertex id")?)),
            ["claim", name, value] => cert.claims.push((name.to_string(), value.to_string())),
            _ => return Err(Error::parse(lineno, "expected 'map <token> <v>' or 'claim <name> <value>'")),
        }
    }
    Ok(cert)
}

/// Splits a source file into non-empty, comment-free token lines, each
/// tagged with its 1-based line number.
pub(crate) fn token_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = content(raw);
            (!line.is_empty()).then(|| (i + 1, line.split_whitespace().collect()))
        })
        .collect()
}

pub(crate) fn parse_num(tok: &str, line: usize, what: &str) -> Result<usize> {
    num(Some(tok), line, what)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "# a triangle\np gm 3 3\ne 0 1\ne 1 2\ne 0 2\nc 0 10\nc 1 20\nc 2 10\nm 10 2 # two of them\n";

    #[test]
    fn parses_and_remaps_colors() {
        let inst = parse_instance(TRIANGLE).unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.graph.m(), 3);
        assert_eq!(inst.coloring.as_slice(), &[0, 1, 0]);
        assert_eq!(inst.motif, Motif::from_colors([0, 0]));
    }

    #[test]
    fn write_then_parse_is_stable() {
        let inst = parse_instance(TRIANGLE).unwrap();
        let again = parse_instance(&write_instance(&inst)).unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn rejects_malformed_files() {
        let cases = [
            "p gm 2 1\ne 0 0\nc 0 1\nc 1 1\nm 1 1\n",
            "p gm 2 1\ne 0 1\nc 0 1\nm 1 1\n",
            "p gm 2 1\ne 0 1\nc 0 1\nc 1 1\nm 1 0\n",
            "p gm 2 1\ne 0 1\nc 0 1\nc 1 1\n",
            "p gm 2 2\ne 0 1\nc 0 1\nc 1 1\nm 1 1\n",
            "p gm 2 2\ne 0 1\ne 1 0\nc 0 1\nc 1 1\nm 1 1\n",
            "e 0 1\n",
            "p gm 2 0\nc 0 1\nc 0 1\nc 1 1\nm 1 1\n",
            "p gm 2 0\nc 0 1\nc 1 1\nm 1 1\nx 1 1\n",
            "p gm 2 0\nc 0 1\nc 1 1\nm 1 1 4\n",
        ];
        for case in cases {
            assert!(matches!(parse_instance(case), Err(Error::Parse { .. })), "{case}");
        }
    }

    #[test]
    fn witness_and_certificate_formats() {
        assert_eq!(parse_witness("3 1\n 2 # c\n").unwrap(), vec![3, 1, 2]);
        assert!(parse_witness("1 x").is_err());
        let cert = Certificate {
            map: vec![("root".into(), 0), ("set:1:a1".into(), 4)],
            claims: vec![("max-leaf".into(), "7".into())],
        };
        let back = parse_certificate(&write_certificate(&cert)).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.vertex("set:1:a1"), Some(4));
        assert_eq!(back.claim("max-leaf"), Some("7"));
    }

    #[test]
    fn clique_files() {
        let c = parse_cliques("0 1 2\n\n3\n").unwrap();
        assert_eq!(c, vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(parse_cliques(&write_cliques(&c)).unwrap(), c);
    }
}
