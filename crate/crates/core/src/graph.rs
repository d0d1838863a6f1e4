//! Immutable simple graphs on dense vertex sets `0..n`.
//!
//! Every graph keeps two views of its adjacency: sorted neighbor lists for
//! iteration and a packed bit matrix for constant-time membership tests and
//! word-parallel neighborhood intersections. Rows are `ceil(n / 64)` words
//! long, so graphs with at most 64 vertices use a single machine word per
//! row.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count accepted by any constructor or parser.
pub const MAX_VERTICES: usize = 4096;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Number of common set bits of two equally long bit rows.
#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| u64::from((x & y).count_ones())).sum()
}

/// Simple undirected graph. Cheap to share, never mutated after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
            adj: vec![Vec::new(); n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::usage(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::usage(format!("repeated edge {{{u},{v}}}")));
            }
            g.set(u, v);
        }
        g.rebuild_lists();
        Ok(g)
    }

    /// Builds a graph from raw bit rows; symmetric closure is taken and the
    /// diagonal cleared, so callers may merge vertices freely.
    pub(crate) fn from_rows(n: usize, mut rows: Vec<u64>) -> Self {
        let words = words_for(n);
        debug_assert_eq!(rows.len(), n * words);
        for v in 0..n {
            rows[v * words + v / 64] &= !(1u64 << (v % 64));
        }
        let mut g = Graph {
            n,
            words,
            rows,
            adj: vec![Vec::new(); n],
            m: 0,
        };
        for u in 0..n {
            for v in 0..n {
                if g.bit(u, v) {
                    g.rows[v * words + u / 64] |= 1u64 << (u % 64);
                }
            }
        }
        g.rebuild_lists();
        g
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    #[inline]
    fn bit(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn rebuild_lists(&mut self) {
        let mut m = 0;
        for u in 0..self.n {
            let list: Vec<usize> = BitIter::new(self.row(u)).collect();
            m += list.len();
            self.adj[u] = list;
        }
        self.m = m / 2;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Constant-time adjacency test; out-of-range vertices are never adjacent.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bit(u, v)
    }

    /// Sorted neighbor list. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Packed adjacency row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    /// `N(u) ∩ N(v)`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::usage("common_neighbors needs two distinct vertices"));
        }
        let words = self.row(u).iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
        Ok(VertexSet { n: self.n, words })
    }

    /// Number of common neighbors of `u` and `v`, without allocating.
    #[inline]
    pub fn common_count(&self, u: usize, v: usize) -> u64 {
        and_count(self.row(u), self.row(v))
    }

    /// Subgraph induced by `set`, relabeled to `0..set.len()` in increasing
    /// order of the original labels.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Induced> {
        if set.universe() != self.n {
            return Err(Error::usage(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe(),
                self.n
            )));
        }
        let original: Vec<usize> = set.iter().collect();
        let k = original.len();
        let mut edges = Vec::new();
        for (i, &a) in original.iter().enumerate() {
            for (j, &b) in original.iter().enumerate().skip(i + 1) {
                if self.bit(a, b) {
                    edges.push((i, j));
                }
            }
        }
        let graph = Graph::from_edges(k, edges)?;
        Ok(Induced { graph, original })
    }

    /// Merges the endpoints of edge `{u, v}`. The merged vertex takes the
    /// smaller label; labels above the larger endpoint shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Contraction> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::usage(format!("{{{u},{v}}} is not an edge")));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let map: Vec<usize> = (0..self.n)
            .map(|x| match x.cmp(&gone) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let n2 = self.n - 1;
        let words = words_for(n2);
        let mut rows = vec![0u64; n2 * words];
        for (a, b) in self.edges() {
            let (x, y) = (map[a], map[b]);
            if x != y {
                rows[x * words + y / 64] |= 1u64 << (y % 64);
                rows[y * words + x / 64] |= 1u64 << (x % 64);
            }
        }
        Ok(Contraction {
            graph: Graph::from_rows(n2, rows),
            map,
        })
    }

    /// Decomposes the graph into maximal paths if it is a path forest
    /// (acyclic with maximum degree at most two).
    pub fn path_forest(&self) -> Option<PathForest> {
        if self.max_degree().unwrap_or(0) > 2 {
            return None;
        }
        let mut seen = vec![false; self.n];
        let mut paths = Vec::new();
        for start in 0..self.n {
            if seen[start] || self.adj[start].len() == 2 {
                continue;
            }
            let mut path = vec![start];
            seen[start] = true;
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(&next) = self.adj[cur].iter().find(|&&w| w != prev) {
                if seen[next] {
                    break;
                }
                seen[next] = true;
                path.push(next);
                prev = cur;
                cur = next;
            }
            paths.push(path);
        }
        // Vertices never reached from an endpoint lie on cycles.
        if seen.iter().any(|s| !s) {
            return None;
        }
        Some(PathForest { paths })
    }

    pub fn is_path_forest(&self) -> bool {
        self.path_forest().is_some()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.components() == 1
    }

    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    /// Copy with edge `{u, v}` added. Returns an identical copy if present.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::usage(format!("self-loop at vertex {u}")));
        }
        let mut g = self.clone();
        if !g.has_edge(u, v) {
            g.set(u, v);
            g.rebuild_lists();
        }
        Ok(g)
    }

    /// Copy with edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::usage(format!("{{{u},{v}}} is not an edge")));
        }
        let mut g = self.clone();
        g.rows[u * g.words + v / 64] &= !(1u64 << (v % 64));
        g.rows[v * g.words + u / 64] &= !(1u64 << (u % 64));
        g.rebuild_lists();
        Ok(g)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::usage("permutation length differs from vertex count"));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::usage("relabeling is not a permutation"));
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::usage(format!(
            "graphs are limited to {MAX_VERTICES} vertices, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Iterator over the set bits of a packed row.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Subset of `0..n` with constant-time membership.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.words[v / 64] |= 1u64 << (v % 64);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut s = VertexSet::new(n);
        for v in vertices {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.words[v / 64] |= 1u64 << (v % 64);
        Ok(())
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Size of the ground set `0..n`.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(&self.words)
    }
}

/// Result of [`Graph::induced_subgraph`]: vertex `i` of `graph` is
/// `original[i]` in the source graph.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub original: Vec<usize>,
}

/// Result of [`Graph::contract_edge`]: source vertex `x` becomes `map[x]`.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    pub map: Vec<usize>,
}

/// Decomposition of a path forest into its maximal paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathForest {
    pub paths: Vec<Vec<usize>>,
}

impl PathForest {
    /// True when the forest is one path (at least one vertex).
    pub fn single_path(&self) -> bool {
        self.paths.len() == 1
    }
}
