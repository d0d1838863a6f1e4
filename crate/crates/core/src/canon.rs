//! Exact canonical labeling by individualization and refinement.
//!
//! The search tree branches on the vertices of the first smallest
//! non-singleton cell of an equitable ordered partition. Each leaf is a
//! discrete partition, i.e. a vertex order, and the canonical labeling is
//! the order whose relabeled adjacency matrix is lexicographically least.
//! Leaves producing the same matrix yield automorphisms, which prune
//! siblings lying in one orbit of the automorphisms found so far that fix
//! the current branch prefix.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::io::to_graph6;

/// Labeling-invariant fingerprint of a graph: graph6 of its canonical
/// relabeling. Equal forms mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(pub String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A canonical labeling: position `i` of the canonical graph holds source
/// vertex `order[i]`.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    pub order: Vec<usize>,
    pub graph: Graph,
    pub form: CanonicalForm,
}

impl CanonicalLabeling {
    /// Map from source vertex to canonical position.
    pub fn position_of(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.n();
    let mut search = Search {
        g,
        best: None,
        autos: Vec::new(),
    };
    let start = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    search.descend(start, &mut Vec::new());
    let order = search.best.map(|(_, lab)| lab).unwrap_or_default();
    let mut perm = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    let graph = g.relabel(&perm).expect("order is a permutation");
    let form = CanonicalForm(to_graph6(&graph));
    CanonicalLabeling { order, graph, form }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

type Cells = Vec<Vec<usize>>;

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

/// Splits cells by neighbor counts into every cell until stable. The split
/// order depends only on the partition structure, so the result commutes
/// with relabeling.
fn refine(g: &Graph, cells: &mut Cells) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let k = cells.len();
        let mut next: Cells = Vec::with_capacity(k);
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut key = vec![0u32; k];
                    for &w in g.neighbors(v) {
                        key[cell_of[w]] += 1;
                    }
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = vec![keyed[0].1];
            for i in 1..keyed.len() {
                if keyed[i].0 != keyed[i - 1].0 {
                    next.push(std::mem::take(&mut group));
                    changed = true;
                }
                group.push(keyed[i].1);
            }
            next.push(group);
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let words = n.div_ceil(64);
        let mut cert = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if self.g.has_edge(order[i], order[j]) {
                    cert[i * words + j / 64] |= 1u64 << (63 - j % 64);
                }
            }
        }
        cert
    }

    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn descend(&mut self, mut cells: Cells, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition");
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        let mut known_autos = usize::MAX;
        let mut orbit = Vec::new();
        for &v in &candidates {
            if !tried.is_empty() {
                if known_autos != self.autos.len() {
                    orbit = self.orbits_fixing(prefix);
                    known_autos = self.autos.len();
                }
                if tried.iter().any(|&t| orbit[t] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&x| x != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = self.certificate(&order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best_cert, best_order)) => match cert.cmp(best_cert) {
                Ordering::Less => self.best = Some((cert, order)),
                Ordering::Equal => {
                    let mut gamma = vec![0; order.len()];
                    for (i, &v) in order.iter().enumerate() {
                        gamma[v] = best_order[i];
                    }
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.autos.push(gamma);
                    }
                }
                Ordering::Greater => {}
            },
        }
    }
}
