//! Exhaustive checks of the extremal theorem and the supporting lemmas over
//! the triangulation corpus.
//!
//! Uniqueness over all planar graphs (not only triangulations) follows from
//! three recorded facts: every planar graph is a spanning subgraph of some
//! triangulation, adding an edge never lowers the five-cycle count, and
//! every edge of every extremal triangulation lies on a five-cycle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::{build_a, build_d};
use crate::counting::{
    apex_exists, c5_through_edge, count_cycles, count_face_paths3, count_paths3, g_formula, max_c5_planar,
    SCHEMA_VERSION,
};
use crate::embedding::{planar_embed, Embedding};
use crate::enumeration::{corpus, thread_pool, EnumerationCertificate, Triangulation, MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::to_graph6;

pub const VERIFY_MIN_ORDER: usize = 5;

/// Largest order checked without an explicit override.
pub const VERIFY_DEFAULT_MAX_ORDER: usize = 12;

/// Aggregate over one lemma. Slack is `bound - observed`; merging is
/// commutative, so parallel reduction is schedule-independent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaStats {
    pub checked: u64,
    pub violations: u64,
    pub min_slack: Option<i64>,
    pub max_slack: Option<i64>,
}

impl LemmaStats {
    fn record(&mut self, ok: bool, slack: Option<i64>) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
        }
        if let Some(s) = slack {
            self.min_slack = Some(self.min_slack.map_or(s, |m| m.min(s)));
            self.max_slack = Some(self.max_slack.map_or(s, |m| m.max(s)));
        }
    }

    fn bound(&mut self, observed: u64, bound: u64) {
        let slack = bound as i64 - observed as i64;
        self.record(slack >= 0, Some(slack));
    }

    pub fn merge(self, other: LemmaStats) -> LemmaStats {
        let pick = |a: Option<i64>, b: Option<i64>, f: fn(i64, i64) -> i64| match (a, b) {
            (Some(x), Some(y)) => Some(f(x, y)),
            (x, y) => x.or(y),
        };
        LemmaStats {
            checked: self.checked + other.checked,
            violations: self.violations + other.violations,
            min_slack: pick(self.min_slack, other.min_slack, i64::min),
            max_slack: pick(self.max_slack, other.max_slack, i64::max),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma1: LemmaStats,
    pub lemma2: LemmaStats,
    pub lemma3: LemmaStats,
    /// The sharper bound for faces without an apex.
    pub lemma3_apex_free: LemmaStats,
}

impl LemmaReport {
    pub fn merge(self, o: LemmaReport) -> LemmaReport {
        LemmaReport {
            lemma1: self.lemma1.merge(o.lemma1),
            lemma2: self.lemma2.merge(o.lemma2),
            lemma3: self.lemma3.merge(o.lemma3),
            lemma3_apex_free: self.lemma3_apex_free.merge(o.lemma3_apex_free),
        }
    }

    pub fn violations(&self) -> u64 {
        self.lemma1.violations + self.lemma2.violations + self.lemma3.violations + self.lemma3_apex_free.violations
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalEntry {
    pub graph6: String,
    /// `D`, `A` or `unknown`.
    pub family: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationCertificate {
    pub schema_version: u32,
    pub n: usize,
    pub corpus: EnumerationCertificate,
    pub max_c5: u64,
    pub g_n: u64,
    pub theorem_match: bool,
    pub extremal: Vec<ExtremalEntry>,
    pub second_best: Option<u64>,
    /// Every edge of every extremal graph lies on a five-cycle.
    pub edge_critical: bool,
    pub lemmas: LemmaReport,
}

impl VerificationCertificate {
    pub fn families(&self) -> Vec<&str> {
        self.extremal.iter().map(|e| e.family.as_str()).collect()
    }
}

fn check_verify_order(n: usize) -> Result<()> {
    if !(VERIFY_MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::usage(format!(
            "verification order must be in {VERIFY_MIN_ORDER}..={MAX_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Expected maximizer families for order `n`.
pub fn expected_families(n: usize) -> Vec<&'static str> {
    if n == 8 || n == 11 {
        vec!["A", "D"]
    } else {
        vec!["D"]
    }
}

fn family_labels(n: usize) -> Result<Vec<(CanonicalForm, &'static str)>> {
    let mut labels = vec![(canonical_form(&build_d(n)?), "D")];
    if n == 8 || n == 11 {
        labels.push((canonical_form(&build_a(n)?), "A"));
    }
    Ok(labels)
}

/// Lemma 1 on one planar graph: for every edge, the induced common
/// neighborhood is a path forest, and `{u, v}` plus it induces a
/// triangulation exactly when that forest is a single path.
fn lemma1_graph(g: &Graph, stats: &mut LemmaStats) -> Result<()> {
    for (u, v) in g.edges() {
        let common = g.common_neighbors(u, v)?;
        let forest = g.induced_subgraph(&common)?.graph.path_forest();
        let single = forest.as_ref().is_some_and(|f| f.single_path());
        let mut closed: VertexSet = common.clone();
        closed.insert(u)?;
        closed.insert(v)?;
        let h = g.induced_subgraph(&closed)?.graph;
        let tri = planar_embed(&h).map(|e| e.is_triangulation()).unwrap_or(false);
        stats.record(forest.is_some() && single == tri, None);
    }
    Ok(())
}

fn lemma2_graph(g: &Graph, stats: &mut LemmaStats) -> Result<()> {
    let k = g.n() as u64;
    if k < 3 {
        return Ok(());
    }
    for (u, v) in g.edges() {
        stats.bound(count_paths3(g, u, v)?, 2 * (k - 3));
    }
    Ok(())
}

fn lemma3_embedding(e: &Embedding, stats: &mut LemmaStats, apex_free: &mut LemmaStats) -> Result<()> {
    let g = e.graph();
    let k = g.n() as u64;
    if k < 4 {
        return Ok(());
    }
    for face in e.triangular_faces() {
        let paths = count_face_paths3(g, &face)?;
        stats.bound(paths, 4 * (k - 1));
        if !apex_exists(g, &face)? {
            apex_free.bound(paths, 4 * k - 9);
        }
    }
    Ok(())
}

fn lemmas_on(g: &Graph, embedding: Option<&Embedding>) -> Result<LemmaReport> {
    let mut r = LemmaReport::default();
    let owned;
    let e = match embedding {
        Some(e) => e,
        None => match planar_embed(g) {
            Ok(e) => {
                owned = e;
                &owned
            }
            // the lemmas only speak about planar graphs
            Err(_) => return Ok(r),
        },
    };
    lemma1_graph(g, &mut r.lemma1)?;
    lemma2_graph(g, &mut r.lemma2)?;
    lemma3_embedding(e, &mut r.lemma3, &mut r.lemma3_apex_free)?;
    Ok(r)
}

fn reduce_reports<I>(it: I) -> Result<LemmaReport>
where
    I: ParallelIterator<Item = Result<LemmaReport>>,
{
    it.try_reduce(LemmaReport::default, |a, b| Ok(a.merge(b)))
}

/// All lemma suites over planar graphs; non-planar inputs are skipped.
pub fn verify_lemmas(graphs: &[Graph]) -> Result<LemmaReport> {
    reduce_reports(graphs.par_iter().map(|g| lemmas_on(g, None)))
}

pub fn verify_lemma1(graphs: &[Graph]) -> Result<LemmaStats> {
    Ok(verify_lemmas(graphs)?.lemma1)
}

pub fn verify_lemma2(graphs: &[Graph]) -> Result<LemmaStats> {
    Ok(verify_lemmas(graphs)?.lemma2)
}

/// Both Lemma 3 bounds, the second only over apex-free faces.
pub fn verify_lemma3(graphs: &[Graph]) -> Result<(LemmaStats, LemmaStats)> {
    let r = verify_lemmas(graphs)?;
    Ok((r.lemma3, r.lemma3_apex_free))
}

fn corpus_lemmas(corpus: &[Triangulation]) -> Result<LemmaReport> {
    reduce_reports(corpus.par_iter().map(|t| lemmas_on(t.graph(), Some(&t.embedding))))
}

/// Lemma suites over the full corpus on `n` vertices.
pub fn verify_lemmas_for_order(n: usize, workers: usize) -> Result<LemmaReport> {
    let c = corpus(n, workers)?;
    thread_pool(workers)?.install(|| corpus_lemmas(&c))
}

/// Seed-pinned planar graphs obtained by deleting between one edge and
/// half the edges of randomly chosen source graphs.
pub fn edge_deleted_variants(sources: &[Graph], count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if sources.is_empty() {
        return out;
    }
    while out.len() < count {
        let g = &sources[rng.gen_range(0..sources.len())];
        if g.m() == 0 {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.shuffle(&mut rng);
        let delete = rng.gen_range(1..=edges.len().div_ceil(2));
        let kept = edges[delete..].to_vec();
        out.push(Graph::from_edges(g.n(), kept).expect("subset of a simple graph"));
    }
    out
}

/// Exhaustive theorem check for one order.
pub fn verify_theorem(n: usize, workers: usize) -> Result<VerificationCertificate> {
    check_verify_order(n)?;
    let pool = thread_pool(workers)?;
    let all = corpus(n, workers)?;
    let counts: Vec<u64> = pool.install(|| {
        all.par_iter()
            .map(|t| count_cycles(t.graph(), 5))
            .collect::<Result<Vec<u64>>>()
    })?;
    let max_c5 = counts.iter().copied().max().unwrap_or(0);
    let second_best = counts.iter().copied().filter(|&c| c < max_c5).max();
    let labels = family_labels(n)?;
    let mut extremal = Vec::new();
    let mut edge_critical = true;
    for (t, &c) in all.iter().zip(&counts) {
        if c != max_c5 {
            continue;
        }
        let family = labels
            .iter()
            .find(|(f, _)| *f == t.form)
            .map_or("unknown", |(_, name)| name);
        extremal.push(ExtremalEntry {
            graph6: to_graph6(t.graph()),
            family: family.to_string(),
        });
        for (u, v) in t.graph().edges() {
            if c5_through_edge(t.graph(), u, v)? == 0 {
                edge_critical = false;
            }
        }
    }
    extremal.sort_by(|a, b| (&a.family, &a.graph6).cmp(&(&b.family, &b.graph6)));
    let lemmas = pool.install(|| corpus_lemmas(&all))?;
    let mut families: Vec<&str> = extremal.iter().map(|e| e.family.as_str()).collect();
    families.sort_unstable();
    let theorem_match = max_c5 == max_c5_planar(n)?
        && families == expected_families(n)
        && second_best.is_none_or(|s| s < max_c5)
        && edge_critical;
    let forms: Vec<CanonicalForm> = all.iter().map(|t| t.form.clone()).collect();
    Ok(VerificationCertificate {
        schema_version: SCHEMA_VERSION,
        n,
        corpus: EnumerationCertificate {
            n,
            count: all.len() as u64,
            digest: crate::enumeration::corpus_digest(&forms),
        },
        max_c5,
        g_n: g_formula(n)?,
        theorem_match,
        extremal,
        second_best,
        edge_critical,
        lemmas,
    })
}

/// A planar graph and an addable edge that lowered the five-cycle count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityCounterexample {
    pub graph6: String,
    pub edge: (usize, usize),
    pub before: u64,
    pub after: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub samples: usize,
    pub seed: u64,
    pub additions_checked: u64,
    pub counterexample: Option<MonotonicityCounterexample>,
}

impl MonotonicityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Random planar graph on 5..=10 vertices built by inserting edges in
/// random order while planarity holds, stopping at a random edge budget.
fn random_planar(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(5..=10);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let budget = rng.gen_range(1..=3 * n - 6);
    let mut g = Graph::empty(n).expect("small order");
    for (u, v) in pairs {
        if g.m() >= budget {
            break;
        }
        let h = g.with_edge(u, v).expect("absent edge");
        if planar_embed(&h).is_ok() {
            g = h;
        }
    }
    g
}

/// Checks that every planarity-preserving edge addition keeps or raises
/// the five-cycle count on seed-pinned random planar graphs.
pub fn verify_monotonicity(samples: usize, seed: u64) -> Result<MonotonicityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut additions_checked = 0;
    for _ in 0..samples {
        let g = random_planar(&mut rng);
        if let Some(cx) = monotonicity_counterexample(&g, &mut additions_checked)? {
            return Ok(MonotonicityReport {
                samples,
                seed,
                additions_checked,
                counterexample: Some(cx),
            });
        }
    }
    Ok(MonotonicityReport {
        samples,
        seed,
        additions_checked,
        counterexample: None,
    })
}

/// First addable edge of `g` that lowers the count, if any.
pub fn monotonicity_counterexample(g: &Graph, checked: &mut u64) -> Result<Option<MonotonicityCounterexample>> {
    let before = count_cycles(g, 5)?;
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let h = g.with_edge(u, v)?;
            if planar_embed(&h).is_err() {
                continue;
            }
            *checked += 1;
            let after = count_cycles(&h, 5)?;
            if after < before {
                return Ok(Some(MonotonicityCounterexample {
                    graph6: to_graph6(g),
                    edge: (u, v),
                    before,
                    after,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_examples_on_small_graphs() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = verify_lemmas(&[k4]).unwrap();
        assert_eq!(r.violations(), 0);
        // every K4 edge has paths3 = 2 = 2(k - 3)
        assert_eq!(r.lemma2.min_slack, Some(0));
        assert_eq!(r.lemma2.checked, 6);
        // K4 faces carry 6 paths against a bound of 12
        assert_eq!(r.lemma3.max_slack, Some(6));
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(verify_lemmas(&[k5]).unwrap(), LemmaReport::default());
    }

    #[test]
    fn d8_apex_edge_is_consistent() {
        let d8 = build_d(8).unwrap();
        let mut s = LemmaStats::default();
        lemma1_graph(&d8, &mut s).unwrap();
        assert_eq!(s.violations, 0);
        let common = d8.common_neighbors(0, 6).unwrap();
        let f = d8.induced_subgraph(&common).unwrap().graph.path_forest().unwrap();
        assert!(!f.single_path());
    }

    #[test]
    fn theorem_small_orders() {
        let c = verify_theorem(5, 1).unwrap();
        assert_eq!((c.max_c5, c.g_n, c.second_best), (6, 12, None));
        assert!(c.theorem_match);
        let c = verify_theorem(7, 1).unwrap();
        assert_eq!(c.max_c5, 41);
        assert_eq!(c.families(), ["D"]);
        let c = verify_theorem(8, 1).unwrap();
        assert_eq!(c.max_c5, 60);
        assert_eq!(c.families(), ["A", "D"]);
        assert!(c.theorem_match && c.edge_critical);
        assert!(verify_theorem(4, 1).is_err());
    }

    #[test]
    fn monotonicity_small_run() {
        let r = verify_monotonicity(20, 42).unwrap();
        assert!(r.passed());
        assert!(r.additions_checked > 0);
    }

    #[test]
    fn variants_are_seed_pinned() {
        let src = vec![build_d(7).unwrap(), build_d(9).unwrap()];
        let a = edge_deleted_variants(&src, 30, 7);
        assert_eq!(a, edge_deleted_variants(&src, 30, 7));
        assert!(a.iter().all(|g| g.m() < 3 * g.n() - 6));
    }

    #[test]
    fn stats_merge_is_commutative() {
        let mut a = LemmaStats::default();
        a.bound(3, 5);
        let mut b = LemmaStats::default();
        b.bound(7, 6);
        assert_eq!(a.merge(b), b.merge(a));
        assert_eq!(a.merge(b).violations, 1);
        assert_eq!(a.merge(b).min_slack, Some(-1));
    }
}
