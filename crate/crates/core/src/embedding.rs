//! Rotation systems on the sphere, face tracing and triangulation checks.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity;

/// A facial walk, listed as the cyclic sequence of vertices it visits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// The three corners of a triangular face.
    pub fn triangle(&self) -> Option<[usize; 3]> {
        match self.boundary.as_slice() {
            &[a, b, c] => Some([a, b, c]),
            _ => None,
        }
    }
}

impl From<[usize; 3]> for Face {
    fn from(t: [usize; 3]) -> Self {
        Face { boundary: t.to_vec() }
    }
}

/// A graph together with a cyclic order of the neighbors around each
/// vertex. Construction traces the faces and rejects rotation systems that
/// do not describe a sphere embedding of every component.
#[derive(Clone, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    rotations: Vec<Vec<usize>>,
    faces: Vec<Face>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Embedding")
            .field("n", &self.graph.n())
            .field("rotations", &self.rotations)
            .finish()
    }
}

/// Returned by [`planar_embed`] for graphs without a plane embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotPlanar {
    pub reason: &'static str,
}

impl fmt::Display for NotPlanar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not planar: {}", self.reason)
    }
}

/// Finds a planar embedding of `g`, if one exists. Output is deterministic
/// for a given graph.
pub fn planar_embed(g: &Graph) -> std::result::Result<Embedding, NotPlanar> {
    let n = g.n();
    if n > 2 && g.m() > 3 * n - 6 {
        return Err(NotPlanar {
            reason: "more than 3n - 6 edges",
        });
    }
    match planarity::planar_rotations(g) {
        Some(rot) => Ok(Embedding::from_rotations(g.clone(), rot)
            .expect("left-right planarity produced an invalid rotation system")),
        None => Err(NotPlanar {
            reason: "left-right constraints are unsatisfiable",
        }),
    }
}

pub fn is_planar(g: &Graph) -> bool {
    planar_embed(g).is_ok()
}

#[inline]
fn position(list: &[usize], x: usize) -> Option<usize> {
    list.iter().position(|&y| y == x)
}

impl Embedding {
    /// Validates `rotations` against `graph` and traces the faces.
    pub fn from_rotations(graph: Graph, rotations: Vec<Vec<usize>>) -> Result<Self> {
        let n = graph.n();
        if rotations.len() != n {
            return Err(Error::Embedding(format!(
                "{} rotations for {n} vertices",
                rotations.len()
            )));
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::Embedding(format!(
                    "rotation at {v} is not an ordering of its neighborhood"
                )));
            }
        }
        let faces = trace_faces(&rotations);
        let isolated = (0..n).filter(|&v| rotations[v].is_empty()).count();
        let euler = n as i64 - graph.m() as i64 + (faces.len() + isolated) as i64;
        let expected = 2 * graph.components() as i64;
        if euler != expected {
            return Err(Error::Embedding(format!(
                "Euler check failed: n - m + f = {euler}, expected {expected}"
            )));
        }
        Ok(Embedding {
            graph,
            rotations,
            faces,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Every face is a triangle and `m = 3n - 6`.
    pub fn is_triangulation(&self) -> bool {
        let n = self.graph.n();
        n >= 3 && self.graph.m() == 3 * n - 6 && self.faces.iter().all(|f| f.len() == 3)
    }

    pub fn triangular_faces(&self) -> Vec<Face> {
        self.faces.iter().filter(|f| f.len() == 3).cloned().collect()
    }

    /// Cyclic order of `N(v)` when consecutive neighbors are adjacent, which
    /// holds at every vertex of a triangulation.
    pub fn neighborhood_cycle(&self, v: usize) -> Option<Vec<usize>> {
        if v >= self.graph.n() || !self.is_triangulation() {
            return None;
        }
        let rot = &self.rotations[v];
        let closed = (0..rot.len()).all(|i| self.graph.has_edge(rot[i], rot[(i + 1) % rot.len()]));
        closed.then(|| rot.clone())
    }

    /// Rotation system with every cyclic order reversed.
    pub fn mirrored(&self) -> Embedding {
        let rotations: Vec<Vec<usize>> = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        Embedding::from_rotations(self.graph.clone(), rotations).expect("mirror of a valid embedding is valid")
    }

    /// One line `v: w1 w2 ... wd` per vertex, in vertex order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            s.push_str(&format!("{v}:"));
            for w in rot {
                s.push_str(&format!(" {w}"));
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut rotations = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(format!("line {}: missing ':'", lineno + 1)))?;
            let v: usize = head
                .trim()
                .parse()
                .map_err(|e| Error::parse(format!("line {}: {e}", lineno + 1)))?;
            if v != rotations.len() {
                return Err(Error::parse(format!(
                    "line {}: expected vertex {}, found {v}",
                    lineno + 1,
                    rotations.len()
                )));
            }
            let rot = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::parse(format!("line {}: {e}", lineno + 1)))?;
            rotations.push(rot);
            if rotations.len() > crate::graph::MAX_VERTICES {
                return Err(Error::parse("too many vertices"));
            }
        }
        let n = rotations.len();
        let mut edges = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if w >= n {
                    return Err(Error::parse(format!("neighbor {w} of {v} out of range")));
                }
                if position(&rotations[w], v).is_none() {
                    return Err(Error::parse(format!("edge {v}-{w} listed only at {v}")));
                }
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let graph = Graph::from_edges(n, edges)?;
        Embedding::from_rotations(graph, rotations)
    }
}

/// Traces facial walks: the dart after `u -> v` is `v -> w`, with `w` the
/// successor of `u` in the rotation at `v`.
fn trace_faces(rot: &[Vec<usize>]) -> Vec<Face> {
    let n = rot.len();
    let offsets: Vec<usize> = std::iter::once(0)
        .chain(rot.iter().scan(0, |acc, r| {
            *acc += r.len();
            Some(*acc)
        }))
        .collect();
    let mut used = vec![false; offsets[n]];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..rot[u].len() {
            if used[offsets[u] + i] {
                continue;
            }
            let mut boundary = Vec::new();
            let (mut a, mut ai) = (u, i);
            while !used[offsets[a] + ai] {
                used[offsets[a] + ai] = true;
                boundary.push(a);
                let b = rot[a][ai];
                let back = position(&rot[b], a).expect("symmetric rotation system");
                let bi = (back + 1) % rot[b].len();
                a = b;
                ai = bi;
            }
            faces.push(Face { boundary });
        }
    }
    faces
}
