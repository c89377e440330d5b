//! graph6 (short form, n ≤ 62) and DOT output.

use std::fmt::Write as _;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

/// Fixed palette; color index `c` (1-based) maps to `PALETTE[(c - 1) % 16]`.
pub const PALETTE: [&str; 16] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#fabed4", "#469990", "#dcbeff", "#9a6324", "#800000", "#aaffc3", "#808000", "#000075",
];

fn g6_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    let start = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = bytes.len();
    while end > start && (bytes[end - 1] == b'\n' || bytes[end - 1] == b'\r') {
        end -= 1;
    }
    let body = &bytes[start..end];
    if body.is_empty() {
        return Err(g6_error(start, "missing order byte"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_error(start + i, format!("byte {b:#04x} outside the printable range 63..=126")));
        }
    }
    if body[0] == 126 {
        return Err(g6_error(start, format!("long-form order (n > {GRAPH6_MAX_ORDER}) is not supported")));
    }
    let n = (body[0] - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = (bits + 5) / 6;
    let got = body.len() - 1;
    if got != want {
        return Err(g6_error(
            start + 1 + got.min(want),
            format!("order {n} needs {want} data byte(s), found {got}"),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    g.require_simple("graph6 encoding")?;
    let n = g.vertex_count();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "graph6 short form supports at most {GRAPH6_MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut adj = vec![false; n * n];
    for &(a, b) in g.edges() {
        adj[a * n + b] = true;
        adj[b * n + a] = true;
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adj[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one graph per non-empty line, reporting the line number on failure.
pub fn parse_graph6_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}

pub fn to_dot(g: &Graph, coloring: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        match coloring {
            Some(c) => {
                let color = c.color(e);
                let _ = writeln!(
                    out,
                    "  {a} -- {b} [color=\"{}\", label=\"{color}\"];",
                    PALETTE[(color - 1) % PALETTE.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  {a} -- {b};");
            }
        }
    }
    out.push_str("}\n");
    out
}
