//! Text formats for graphs: graph6 and a plain sorted edge list.
//!
//! graph6 follows the format description shipped with nauty: a size prefix
//! `N(n)` followed by the upper triangle of the adjacency matrix read column
//! by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed into 6-bit groups,
//! each offset by 63. The parser is strict: it rejects non-minimal size
//! prefixes, wrong lengths and nonzero padding, so every accepted string
//! round-trips byte for byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Input formats understood by [`parse_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sixbits(b: u8) -> Result<u64> {
    if (63..=126).contains(&b) {
        Ok(u64::from(b - 63))
    } else {
        Err(Error::parse(format!("byte 0x{b:02x} outside the graph6 range")))
    }
}

/// Parses a single graph6 string. An optional `>>graph6<<` header and
/// trailing line terminator are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_suffix('\n').unwrap_or(s);
    let s = s.strip_suffix('\r').unwrap_or(s);
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse("empty graph6 string"));
    }
    let (n, body) = if bytes[0] != 126 {
        (sixbits(bytes[0])? as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::parse("truncated graph6 size prefix"));
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = (n << 6) | sixbits(b)?;
        }
        if n <= 62 {
            return Err(Error::parse("non-minimal graph6 size prefix"));
        }
        (n as usize, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::parse("truncated graph6 size prefix"));
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = (n << 6) | sixbits(b)?;
        }
        if n <= 258_047 {
            return Err(Error::parse("non-minimal graph6 size prefix"));
        }
        (n.min(usize::MAX as u64) as usize, &bytes[8..])
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(format!(
            "graph6 string declares {n} vertices; the limit is {MAX_VERTICES}"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(format!(
            "graph6 body has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = sixbits(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if let Some(&last) = body.last() {
        let pad = expected * 6 - bits;
        let last = sixbits(last)?;
        if pad > 0 && last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse("nonzero graph6 padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Edge-list text: a header line `n m`, then `m` lines `u v` with `u < v`
/// in ascending lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut field = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::parse(format!("line {lineno}: expected two integers")))?
            .parse::<usize>()
            .map_err(|e| Error::parse(format!("line {lineno}: {e}")))
    };
    let a = field()?;
    let b = field()?;
    if it.next().is_some() {
        return Err(Error::parse(format!("line {lineno}: trailing tokens")));
    }
    Ok((a, b))
}

pub fn from_edge_list(s: &str) -> Result<Graph> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, header) = lines.next().ok_or_else(|| Error::parse("empty edge list"))?;
    let (n, m) = parse_pair(header, lineno)?;
    if n > MAX_VERTICES {
        return Err(Error::parse(format!(
            "edge list declares {n} vertices; the limit is {MAX_VERTICES}"
        )));
    }
    if m > n * n.saturating_sub(1) / 2 {
        return Err(Error::parse(format!("{m} edges cannot fit on {n} vertices")));
    }
    let mut edges = Vec::with_capacity(m);
    let mut prev: Option<(usize, usize)> = None;
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| Error::parse(format!("expected {m} edges, found {}", edges.len())))?;
        let (u, v) = parse_pair(line, lineno)?;
        if u >= v || v >= n {
            return Err(Error::parse(format!("line {lineno}: edge must satisfy u < v < {n}")));
        }
        if prev.is_some_and(|p| p >= (u, v)) {
            return Err(Error::parse(format!(
                "line {lineno}: edges must be in strictly ascending order"
            )));
        }
        prev = Some((u, v));
        edges.push((u, v));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::parse(format!("line {lineno}: more than {m} edges")));
    }
    Graph::from_edges(n, edges)
}

/// Guesses the format from content: a first line made of two integers is an
/// edge-list header, anything else is treated as graph6 (whose alphabet
/// contains neither digits nor spaces).
pub fn detect_format(s: &str) -> GraphFormat {
    let first = s.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let tokens: Vec<&str> = first.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

/// Parses one graph, auto-detecting the format unless `format` is given.
pub fn parse_graph(s: &str, format: Option<GraphFormat>) -> Result<Graph> {
    match format.unwrap_or_else(|| detect_format(s)) {
        GraphFormat::EdgeList => from_edge_list(s),
        GraphFormat::Graph6 => {
            let line = s.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            if s.lines().filter(|l| !l.trim().is_empty()).count() > 1 {
                return Err(Error::parse("expected a single graph6 line"));
            }
            from_graph6(line)
        }
    }
}

/// Parses a file with one graph6 string per non-empty line.
pub fn parse_graph6_lines(s: &str) -> Result<Vec<Graph>> {
    s.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}
