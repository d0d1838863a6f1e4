//! Exact counters for short cycles and three-edge paths.
//!
//! The fast counters work on the packed adjacency rows. Five-cycles are
//! counted per edge: a 5-cycle through `{u, v}` is a path `u a b c v`, and for
//! a fixed middle vertex `b` the admissible pairs `(a, c)` number
//! `|A||C| - |A ∩ C|` with `A = N(u) ∩ N(b) - {v}` and `C = N(v) ∩ N(b) - {u}`.
//! Every 5-cycle is then seen once from each of its five edges.

use serde::{Deserialize, Serialize};

use crate::embedding::Face;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const SCHEMA_VERSION: u32 = 1;

#[inline]
fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
fn checked_mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn check_k(k: usize) -> Result<()> {
    if (3..=5).contains(&k) {
        Ok(())
    } else {
        Err(Error::usage(format!("cycle length must be 3, 4 or 5, got {k}")))
    }
}

#[inline]
fn triple_count(g: &Graph, a: usize, b: usize, c: usize) -> u64 {
    g.row(a)
        .iter()
        .zip(g.row(b))
        .zip(g.row(c))
        .map(|((x, y), z)| u64::from((x & y & z).count_ones()))
        .sum()
}

/// Number of 5-cycles through the edge `{u, v}` (0 if it is not an edge).
pub fn c5_through_edge(g: &Graph, u: usize, v: usize) -> Result<u64> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Ok(0);
    }
    let mut total = 0u64;
    for b in 0..g.n() {
        if b == u || b == v {
            continue;
        }
        let a = g.common_count(u, b) - u64::from(g.has_edge(v, b));
        let c = g.common_count(v, b) - u64::from(g.has_edge(u, b));
        if a == 0 || c == 0 {
            continue;
        }
        let both = triple_count(g, u, v, b);
        total = checked_add(total, checked_mul(a, c)? - both)?;
    }
    Ok(total)
}

fn count_c3(g: &Graph) -> Result<u64> {
    let mut s = 0u64;
    for (u, v) in g.edges() {
        s = checked_add(s, g.common_count(u, v))?;
    }
    Ok(s / 3)
}

fn count_c4(g: &Graph) -> Result<u64> {
    let mut s = 0u64;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let c = g.common_count(u, v);
            if c >= 2 {
                s = checked_add(s, c * (c - 1) / 2)?;
            }
        }
    }
    Ok(s / 2)
}

fn count_c5(g: &Graph) -> Result<u64> {
    let mut s = 0u64;
    for (u, v) in g.edges() {
        s = checked_add(s, c5_through_edge(g, u, v)?)?;
    }
    debug_assert_eq!(s % 5, 0);
    Ok(s / 5)
}

/// Number of subgraphs isomorphic to `C_k`, `k` in `3..=5`.
pub fn count_cycles(g: &Graph, k: usize) -> Result<u64> {
    check_k(k)?;
    match k {
        3 => count_c3(g),
        4 => count_c4(g),
        _ => count_c5(g),
    }
}

/// Reference counter: enumerates every ordered `k`-tuple of distinct
/// vertices, keeps closed walks along edges and divides by `2k`. Only meant
/// for small graphs.
pub fn count_cycles_bruteforce(g: &Graph, k: usize) -> Result<u64> {
    check_k(k)?;
    fn extend(g: &Graph, k: usize, tuple: &mut Vec<usize>, count: &mut u64) {
        if tuple.len() == k {
            let closed = (0..k).all(|i| g.has_edge(tuple[i], tuple[(i + 1) % k]));
            if closed {
                *count += 1;
            }
            return;
        }
        for x in 0..g.n() {
            if !tuple.contains(&x) {
                tuple.push(x);
                extend(g, k, tuple, count);
                tuple.pop();
            }
        }
    }
    let mut count = 0;
    extend(g, k, &mut Vec::with_capacity(k), &mut count);
    debug_assert_eq!(count % (2 * k as u64), 0);
    Ok(count / (2 * k as u64))
}

/// Exact 3-, 4- and 5-cycle counts with per-vertex and per-edge 5-cycle
/// participation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCountReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub c3: u64,
    pub c4: u64,
    pub c5: u64,
    pub per_vertex_c5: Vec<u64>,
    pub per_edge_c5: Vec<(usize, usize, u64)>,
}

impl CycleCountReport {
    pub fn count(&self, k: usize) -> Result<u64> {
        check_k(k)?;
        Ok(match k {
            3 => self.c3,
            4 => self.c4,
            _ => self.c5,
        })
    }

    /// Checks `Σ per-vertex = Σ per-edge = 5 · c5`.
    pub fn handshake_holds(&self) -> bool {
        let five = self.c5.checked_mul(5);
        let pv: Option<u64> = self.per_vertex_c5.iter().try_fold(0u64, |a, &b| a.checked_add(b));
        let pe: Option<u64> = self.per_edge_c5.iter().try_fold(0u64, |a, &(_, _, b)| a.checked_add(b));
        five.is_some() && pv == five && pe == five
    }
}

pub fn cycle_report(g: &Graph) -> Result<CycleCountReport> {
    let mut per_vertex = vec![0u64; g.n()];
    let mut per_edge = Vec::with_capacity(g.m());
    let mut total = 0u64;
    for (u, v) in g.edges() {
        let c = c5_through_edge(g, u, v)?;
        per_vertex[u] = checked_add(per_vertex[u], c)?;
        per_vertex[v] = checked_add(per_vertex[v], c)?;
        total = checked_add(total, c)?;
        per_edge.push((u, v, c));
    }
    // each 5-cycle meets a vertex in two of its edges
    for x in &mut per_vertex {
        *x /= 2;
    }
    Ok(CycleCountReport {
        schema_version: SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        c3: count_c3(g)?,
        c4: count_c4(g)?,
        c5: total / 5,
        per_vertex_c5: per_vertex,
        per_edge_c5: per_edge,
    })
}

/// Number of paths `u x y v` on four distinct vertices.
pub fn count_paths3(g: &Graph, u: usize, v: usize) -> Result<u64> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::usage("count_paths3 needs two distinct endpoints"));
    }
    let uv = u64::from(g.has_edge(u, v));
    let mut total = 0u64;
    for &x in g.neighbors(u) {
        if x == v {
            continue;
        }
        // y ranges over N(x) ∩ N(v) minus u
        let c = g.common_count(x, v) - uv;
        total = checked_add(total, c)?;
    }
    Ok(total)
}

fn check_triangle(g: &Graph, t: &Face) -> Result<[usize; 3]> {
    let [a, b, c] = t
        .triangle()
        .ok_or_else(|| Error::usage(format!("face of length {} is not a triangle", t.len())))?;
    for x in [a, b, c] {
        g.check_vertex(x)?;
    }
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err(Error::usage(format!("{{{a},{b},{c}}} is not a triangle")));
    }
    Ok([a, b, c])
}

/// Number of three-edge paths whose two ends are distinct corners of `t`.
/// Internal vertices may be anywhere, including the third corner.
pub fn count_face_paths3(g: &Graph, t: &Face) -> Result<u64> {
    let [a, b, c] = check_triangle(g, t)?;
    let mut total = 0;
    for (x, y) in [(a, b), (b, c), (a, c)] {
        total = checked_add(total, count_paths3(g, x, y)?)?;
    }
    Ok(total)
}

/// Whether some vertex outside `t` is adjacent to all three corners.
pub fn apex_exists(g: &Graph, t: &Face) -> Result<bool> {
    let [a, b, c] = check_triangle(g, t)?;
    Ok(triple_count(g, a, b, c) > 0)
}

/// `2n² − 10n + 12`, except `41` at `n = 7`. Defined for `n ≥ 5`.
pub fn g_formula(n: usize) -> Result<u64> {
    if n < 5 {
        return Err(Error::usage(format!("g(n) is defined for n >= 5, got {n}")));
    }
    if n == 7 {
        return Ok(41);
    }
    let n = n as u64;
    n.checked_mul(n)
        .and_then(|sq| sq.checked_mul(2))
        .and_then(|x| x.checked_add(12))
        .and_then(|x| x.checked_sub(10 * n))
        .ok_or(Error::Overflow)
}

/// Largest number of 5-cycles in a planar graph on `n ≥ 5` vertices:
/// 6 at `n = 5`, otherwise [`g_formula`].
pub fn max_c5_planar(n: usize) -> Result<u64> {
    if n == 5 {
        Ok(6)
    } else {
        g_formula(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cycle_count_examples() {
        assert_eq!(count_cycles(&complete(5), 5).unwrap(), 12);
        let k5e = complete(5).without_edge(3, 4).unwrap();
        assert_eq!(count_cycles(&k5e, 5).unwrap(), 6);
        assert_eq!(count_cycles(&cycle(5), 5).unwrap(), 1);
        assert_eq!(count_cycles(&complete(4), 3).unwrap(), 4);
        assert_eq!(count_cycles(&complete(4), 4).unwrap(), 3);
        assert!(count_cycles(&complete(4), 6).is_err());
        assert!(count_cycles(&complete(4), 2).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(count_cycles_bruteforce(&complete(4), 3).unwrap(), 4);
        assert_eq!(count_cycles_bruteforce(&complete(4), 4).unwrap(), 3);
        let empty = Graph::empty(6).unwrap();
        for k in 3..=5 {
            assert_eq!(count_cycles_bruteforce(&empty, k).unwrap(), 0);
            assert_eq!(count_cycles(&empty, k).unwrap(), 0);
        }
        assert_eq!(count_cycles_bruteforce(&complete(5), 5).unwrap(), 12);
    }

    #[test]
    fn report_handshake() {
        let r = cycle_report(&complete(6)).unwrap();
        assert!(r.handshake_holds());
        assert_eq!(r.c5, count_cycles_bruteforce(&complete(6), 5).unwrap());
        assert_eq!(r.count(3).unwrap(), 20);
    }

    #[test]
    fn paths3_examples() {
        let k4 = complete(4);
        assert_eq!(count_paths3(&k4, 0, 1).unwrap(), 2);
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(count_paths3(&star, 0, 1).unwrap(), 0);
        assert!(count_paths3(&k4, 2, 2).is_err());
        // P4 endpoints
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(count_paths3(&p4, 0, 3).unwrap(), 1);
        assert_eq!(count_paths3(&p4, 3, 0).unwrap(), 1);
    }

    #[test]
    fn face_paths_examples() {
        let k4 = complete(4);
        assert_eq!(count_face_paths3(&k4, &Face::from([0, 1, 2])).unwrap(), 6);
        assert!(apex_exists(&k4, &Face::from([0, 1, 2])).unwrap());
        let k3 = complete(3);
        assert_eq!(count_face_paths3(&k3, &Face::from([0, 1, 2])).unwrap(), 0);
        let pendant = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(!apex_exists(&pendant, &Face::from([0, 1, 2])).unwrap());
        assert!(count_face_paths3(&pendant, &Face::from([0, 1, 3])).is_err());
        assert!(count_face_paths3(&k4, &Face { boundary: vec![0, 1] }).is_err());
    }

    #[test]
    fn g_values() {
        assert_eq!(g_formula(5).unwrap(), 12);
        assert_eq!(g_formula(6).unwrap(), 24);
        assert_eq!(g_formula(7).unwrap(), 41);
        assert_eq!(g_formula(8).unwrap(), 60);
        assert!(g_formula(4).is_err());
        assert_eq!(max_c5_planar(5).unwrap(), 6);
        assert_eq!(max_c5_planar(8).unwrap(), 60);
    }
}
