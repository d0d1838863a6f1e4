//! Isomorph-free generation of planar triangulations.
//!
//! Every triangulation on `n >= 5` vertices has an edge whose contraction
//! leaves a triangulation on `n - 1` vertices, so all classes on `n`
//! vertices arise from those on `n - 1` by splitting one vertex. Each level
//! is grown from the previous one in parallel and deduplicated through a
//! canonical code of the plane embedding, which is unique up to mirroring
//! for 3-connected planar graphs.

use dashmap::DashSet;
use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::canon::{canonical_form, canonical_labeling, CanonicalForm};
use crate::embedding::{planar_embed, Embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MIN_ORDER: usize = 4;
pub const MAX_ORDER: usize = 14;

/// Largest order accepted by [`bruteforce_triangulations`].
pub const BRUTEFORCE_MAX_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationCertificate {
    pub n: usize,
    pub count: u64,
    pub digest: String,
}

/// One isomorphism class, canonically labeled: `embedding.graph()` encodes
/// to `form`.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub form: CanonicalForm,
    pub embedding: Embedding,
}

impl Triangulation {
    pub fn graph(&self) -> &Graph {
        self.embedding.graph()
    }
}

fn check_order(n: usize) -> Result<()> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::usage(format!(
            "triangulation order must be in {MIN_ORDER}..={MAX_ORDER}, got {n}"
        )));
    }
    Ok(())
}

pub(crate) fn thread_pool(workers: usize) -> Result<rayon::ThreadPool> {
    if workers == 0 {
        return Err(Error::usage("workers must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::usage(format!("cannot start worker pool: {e}")))
}

type Rotations = Vec<Vec<usize>>;
type PlaneCode = Vec<u8>;

/// BFS code from the dart `v -> w`. Returns `None` as soon as the code is
/// known to exceed `best`.
fn code_from(rot: &[Vec<usize>], v: usize, w: usize, forward: bool, best: &[u8]) -> Option<PlaneCode> {
    let n = rot.len();
    let mut number = vec![0u8; n];
    let mut first = vec![0usize; n];
    let mut queue = Vec::with_capacity(n);
    let mut code = Vec::with_capacity(best.len());
    let mut tied = !best.is_empty();
    number[v] = 1;
    first[v] = w;
    queue.push(v);
    let mut next = 2u8;
    let mut head = 0;
    let mut emit = |c: u8, code: &mut PlaneCode| -> bool {
        if tied {
            let b = best[code.len()];
            if c > b {
                return false;
            }
            if c < b {
                tied = false;
            }
        }
        code.push(c);
        true
    };
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let r = &rot[x];
        let d = r.len();
        let p = r.iter().position(|&y| y == first[x]).expect("reference is a neighbor");
        for t in 0..d {
            let y = if forward { r[(p + t) % d] } else { r[(p + d - t) % d] };
            if number[y] == 0 {
                number[y] = next;
                next += 1;
                first[y] = x;
                queue.push(y);
            }
            if !emit(number[y], &mut code) {
                return None;
            }
        }
        if !emit(0, &mut code) {
            return None;
        }
    }
    Some(code)
}

/// Lexicographically least BFS code over all darts leaving a vertex of
/// minimum degree, in both orientations.
fn plane_code(rot: &[Vec<usize>]) -> PlaneCode {
    let min_deg = rot.iter().map(Vec::len).min().unwrap_or(0);
    let mut best = PlaneCode::new();
    for (v, r) in rot.iter().enumerate() {
        if r.len() != min_deg {
            continue;
        }
        for &w in r {
            for forward in [true, false] {
                if let Some(c) = code_from(rot, v, w, forward, &best) {
                    best = c;
                }
            }
        }
    }
    best
}

/// Rotations of the representative encoded by a plane code: vertex `i` is
/// the `i`-th vertex in BFS order.
fn decode(code: &[u8]) -> Rotations {
    code.split(|&c| c == 0)
        .take_while(|seg| !seg.is_empty())
        .map(|seg| seg.iter().map(|&c| c as usize - 1).collect())
        .collect()
}

/// All vertex splits of `rot`, each encoded canonically.
fn children(rot: &[Vec<usize>], out: &DashSet<PlaneCode>) {
    let n = rot.len();
    let x = n;
    for v in 0..n {
        let r = &rot[v];
        let d = r.len();
        for i in 0..d {
            for j in i + 1..d {
                let mut child: Rotations = rot.to_vec();
                child[v] = r[i..=j].to_vec();
                child[v].push(x);
                let mut rx: Vec<usize> = r[j..].iter().chain(&r[..=i]).copied().collect();
                rx.push(v);
                for &y in &rx[1..rx.len() - 2] {
                    let slot = child[y].iter().position(|&z| z == v).expect("symmetric rotations");
                    child[y][slot] = x;
                }
                let (ri, rj) = (r[i], r[j]);
                let at = child[rj].iter().position(|&z| z == v).expect("symmetric rotations");
                child[rj].insert(at, x);
                let at = child[ri].iter().position(|&z| z == v).expect("symmetric rotations");
                child[ri].insert(at + 1, x);
                child.push(rx);
                out.insert(plane_code(&child));
            }
        }
    }
}

fn k4() -> Rotations {
    let g = Graph::from_edges(4, (0..4).tuple_combinations()).expect("K4");
    planar_embed(&g).expect("K4 is planar").rotations().to_vec()
}

/// Sorted plane codes of every class on `n` vertices.
fn level_codes(n: usize, pool: &rayon::ThreadPool) -> Vec<PlaneCode> {
    let mut level = vec![plane_code(&k4())];
    for _ in MIN_ORDER..n {
        let next = DashSet::new();
        pool.install(|| level.par_iter().for_each(|code| children(&decode(code), &next)));
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    level
}

fn realize(code: &[u8]) -> Triangulation {
    let rot = decode(code);
    let edges = rot
        .iter()
        .enumerate()
        .flat_map(|(u, r)| r.iter().filter(move |&&w| u < w).map(move |&w| (u, w)));
    let g = Graph::from_edges(rot.len(), edges).expect("decoded code is a simple graph");
    let lab = canonical_labeling(&g);
    let pos = lab.position_of();
    let mut canon_rot = vec![Vec::new(); rot.len()];
    for (u, r) in rot.iter().enumerate() {
        canon_rot[pos[u]] = r.iter().map(|&w| pos[w]).collect();
    }
    let embedding = Embedding::from_rotations(lab.graph, canon_rot).expect("split preserves the sphere");
    Triangulation {
        form: lab.form,
        embedding,
    }
}

/// SHA-256 (hex) over the sorted forms, one per line.
pub fn corpus_digest<'a, I>(forms: I) -> String
where
    I: IntoIterator<Item = &'a CanonicalForm>,
{
    let mut sorted: Vec<&CanonicalForm> = forms.into_iter().collect();
    sorted.sort();
    let mut h = Sha256::new();
    for f in sorted {
        h.update(f.as_str().as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

/// Visits every isomorphism class of triangulations on `n` vertices exactly
/// once. The visitor may run concurrently on up to `workers` threads.
pub fn enumerate_triangulations<F>(n: usize, workers: usize, visitor: F) -> Result<EnumerationCertificate>
where
    F: Fn(&Triangulation) + Sync,
{
    check_order(n)?;
    let pool = thread_pool(workers)?;
    let codes = level_codes(n, &pool);
    let forms: Vec<CanonicalForm> = pool.install(|| {
        codes
            .par_iter()
            .map(|code| {
                let t = realize(code);
                visitor(&t);
                t.form
            })
            .collect()
    });
    Ok(EnumerationCertificate {
        n,
        count: forms.len() as u64,
        digest: corpus_digest(&forms),
    })
}

/// Every class on `n` vertices, sorted by canonical form.
pub fn corpus(n: usize, workers: usize) -> Result<Vec<Triangulation>> {
    check_order(n)?;
    let pool = thread_pool(workers)?;
    let codes = level_codes(n, &pool);
    let mut all: Vec<Triangulation> = pool.install(|| codes.par_iter().map(|c| realize(c)).collect());
    all.sort_by(|a, b| a.form.cmp(&b.form));
    Ok(all)
}

/// Sorted graph6 lines of the canonical representatives.
pub fn corpus_dump(corpus: &[Triangulation]) -> String {
    let mut lines: Vec<&str> = corpus.iter().map(|t| t.form.as_str()).collect();
    lines.sort_unstable();
    let mut out = String::new();
    for l in lines {
        out.push_str(l);
        out.push('\n');
    }
    out
}

/// Independent oracle: filters every graph with `3n - 6` edges by
/// planarity and all-triangle faces, deduplicating by canonical form.
pub fn bruteforce_triangulations(n: usize) -> Result<Vec<CanonicalForm>> {
    if !(3..=BRUTEFORCE_MAX_ORDER).contains(&n) {
        return Err(Error::usage(format!(
            "brute-force triangulations need 3 <= n <= {BRUTEFORCE_MAX_ORDER}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut forms: Vec<CanonicalForm> = pairs
        .iter()
        .copied()
        .combinations(3 * n - 6)
        .filter_map(|edges| {
            let g = Graph::from_edges(n, edges).expect("distinct pairs");
            let tri = planar_embed(&g).map(|e| e.is_triangulation()).unwrap_or(false);
            tri.then(|| canonical_form(&g))
        })
        .collect();
    forms.sort();
    forms.dedup();
    Ok(forms)
}
