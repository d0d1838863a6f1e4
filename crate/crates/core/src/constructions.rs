//! Named extremal and near-extremal planar triangulations.
//!
//! Labeling conventions (stable, so golden graph6 strings do not drift):
//!
//! * `D_n`: cycle `0..n-2` in order, apexes `n-2` and `n-1` (not adjacent).
//! * `E_n`: path `0..n-2` in order, apexes `n-2` and `n-1` (adjacent).
//! * Exceptional catalog: `0` is a degree-3 vertex `v` inside the triangle
//!   `1 2 3`; vertex `u` sees all of `1 2 3` from the other side; the
//!   remaining vertices sit in the three regions `u 1 2`, `u 2 3`, `u 3 1`.
//!   `A_8` and `A_11` are catalog entries 1 and 5.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::counting::count_cycles;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    D,
    E,
    A,
    Exceptional,
}

/// Symbolic description of a construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub exc_index: Option<usize>,
}

/// Vertex counts of the exceptional catalog.
pub const EXCEPTIONAL_ORDERS: [usize; 6] = [7, 8, 9, 9, 10, 11];

/// Five-cycle counts of the exceptional catalog.
pub const EXCEPTIONAL_C5: [u64; 6] = [36, 60, 79, 80, 110, 144];

impl FamilySpec {
    pub fn d(n: usize) -> Self {
        FamilySpec {
            family: Family::D,
            n,
            exc_index: None,
        }
    }

    pub fn e(n: usize) -> Self {
        FamilySpec {
            family: Family::E,
            n,
            exc_index: None,
        }
    }

    pub fn a(n: usize) -> Self {
        FamilySpec {
            family: Family::A,
            n,
            exc_index: None,
        }
    }

    pub fn exceptional(index: usize) -> Self {
        FamilySpec {
            family: Family::Exceptional,
            n: EXCEPTIONAL_ORDERS.get(index).copied().unwrap_or(0),
            exc_index: Some(index),
        }
    }

    /// Parses a command-line family name (`dn`, `en`, `a8`, `a11`,
    /// `exc0`..`exc5`). `dn` and `en` need `n`; fixed-size families accept
    /// `n` only if it matches.
    pub fn from_name(name: &str, n: Option<usize>) -> Result<Self> {
        let fixed = |spec: FamilySpec| match n {
            Some(k) if k != spec.n => Err(Error::usage(format!("family {name} has {} vertices, not {k}", spec.n))),
            _ => Ok(spec),
        };
        let need_n = || n.ok_or_else(|| Error::usage(format!("family {name} needs --n")));
        let spec = match name {
            "dn" => FamilySpec::d(need_n()?),
            "en" => FamilySpec::e(need_n()?),
            "a8" => fixed(FamilySpec::a(8))?,
            "a11" => fixed(FamilySpec::a(11))?,
            _ => {
                let idx = name
                    .strip_prefix("exc")
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| i < EXCEPTIONAL_ORDERS.len())
                    .ok_or_else(|| Error::usage(format!("unknown family {name:?}")))?;
                fixed(FamilySpec::exceptional(idx))?
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Command-line name of this family.
    pub fn name(&self) -> String {
        match (self.family, self.exc_index) {
            (Family::D, _) => "dn".into(),
            (Family::E, _) => "en".into(),
            (Family::A, _) => format!("a{}", self.n),
            (Family::Exceptional, Some(i)) => format!("exc{i}"),
            (Family::Exceptional, None) => "exc?".into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            Family::D | Family::E if self.n < 5 => {
                Err(Error::usage(format!("{} needs n >= 5, got {}", self.name(), self.n)))
            }
            Family::A if self.n != 8 && self.n != 11 => Err(Error::usage(format!(
                "A_n exists only for n = 8 and n = 11, got {}",
                self.n
            ))),
            Family::Exceptional => match self.exc_index {
                Some(i) if i < EXCEPTIONAL_ORDERS.len() && EXCEPTIONAL_ORDERS[i] == self.n => Ok(()),
                _ => Err(Error::usage("exceptional index must be in 0..=5")),
            },
            _ => Ok(()),
        }
    }
}

/// Cycle on `n - 2` vertices plus two non-adjacent apexes joined to every
/// cycle vertex.
pub fn build_d(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::usage(format!("D_n needs n >= 5, got {n}")));
    }
    let k = n - 2;
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for apex in [k, k + 1] {
        edges.extend((0..k).map(|i| (i, apex)));
    }
    Graph::from_edges(n, edges)
}

/// Path on `n - 2` vertices plus two adjacent apexes joined to every path
/// vertex.
pub fn build_e(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::usage(format!("E_n needs n >= 5, got {n}")));
    }
    let k = n - 2;
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    for apex in [k, k + 1] {
        edges.extend((0..k).map(|i| (i, apex)));
    }
    edges.push((k, k + 1));
    Graph::from_edges(n, edges)
}

pub fn build_a(n: usize) -> Result<Graph> {
    match n {
        8 => build_exceptional(1),
        11 => build_exceptional(5),
        _ => Err(Error::usage(format!("A_n exists only for n = 8 and n = 11, got {n}"))),
    }
}

// Shared part of the catalog: K4 on v=0 and the triangle 1 2 3, the
// outer vertex u, and the degree-3 vertices in regions u23 (w23) and u31
// (w31) when present.
const K4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn catalog_edges(index: usize) -> Option<(usize, Vec<(usize, usize)>)> {
    let mut e: Vec<(usize, usize)> = K4.to_vec();
    let n = match index {
        // w23 = 4, w31 = 5, u = 6
        0 | 1 | 4 | 5 => {
            let u = 6;
            e.extend([(2, 4), (3, 4), (4, u), (1, 5), (3, 5), (5, u), (1, u), (2, u), (3, u)]);
            match index {
                0 => 7,
                1 => {
                    // x in region u12
                    e.extend([(1, 7), (2, 7), (u, 7)]);
                    8
                }
                4 => {
                    // x in u12, then y in u1x and z in u2x
                    e.extend([(1, 7), (2, 7), (u, 7)]);
                    e.extend([(7, 8), (u, 8), (1, 8)]);
                    e.extend([(7, 9), (u, 9), (2, 9)]);
                    10
                }
                _ => {
                    // as entry 4 plus t in 12x
                    e.extend([(1, 7), (2, 7), (u, 7)]);
                    e.extend([(7, 8), (u, 8), (1, 8)]);
                    e.extend([(7, 9), (u, 9), (2, 9)]);
                    e.extend([(1, 10), (2, 10), (7, 10)]);
                    11
                }
            }
        }
        // region u31 empty: w23 = 4, u = 5, x = 6, t = 8, and one of y/z = 7
        2 | 3 => {
            let u = 5;
            e.extend([(2, 4), (3, 4), (4, u), (1, u), (2, u), (3, u)]);
            e.extend([(1, 6), (2, 6), (u, 6)]);
            e.extend([(1, 8), (2, 8), (6, 8)]);
            let side = if index == 2 { 1 } else { 2 };
            e.extend([(6, 7), (u, 7), (side, 7)]);
            9
        }
        _ => return None,
    };
    Some((n, e))
}

/// Exceptional catalog entry `index` (orders 7, 8, 9, 9, 10, 11).
pub fn build_exceptional(index: usize) -> Result<Graph> {
    let (n, edges) =
        catalog_edges(index).ok_or_else(|| Error::usage(format!("exceptional index must be in 0..=5, got {index}")))?;
    Graph::from_edges(n, edges)
}

pub fn expand(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec.family {
        Family::D => build_d(spec.n),
        Family::E => build_e(spec.n),
        Family::A => build_a(spec.n),
        Family::Exceptional => build_exceptional(spec.exc_index.unwrap_or(usize::MAX)),
    }
}

/// Frozen reference data for one construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub family: String,
    pub n: usize,
    pub graph6: String,
    pub expected_c5: u64,
    pub canonical_form: CanonicalForm,
}

impl GoldenEntry {
    pub fn spec(&self) -> Result<FamilySpec> {
        FamilySpec::from_name(&self.family, Some(self.n))
    }
}

/// The checked-in golden catalog.
pub const GOLDEN_CATALOG_JSON: &str = include_str!("../data/golden_catalog.json");

pub fn golden_catalog() -> Vec<GoldenEntry> {
    serde_json::from_str(GOLDEN_CATALOG_JSON).expect("embedded golden catalog is valid JSON")
}

/// Recomputes a golden entry from the builders.
pub fn golden_entry(spec: &FamilySpec) -> Result<GoldenEntry> {
    let g = expand(spec)?;
    Ok(GoldenEntry {
        family: spec.name(),
        n: spec.n,
        graph6: to_graph6(&g),
        expected_c5: count_cycles(&g, 5)?,
        canonical_form: canonical_form(&g),
    })
}

/// Specs covered by the golden catalog file.
pub fn catalog_specs() -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = (5..=12).map(FamilySpec::d).collect();
    specs.extend((5..=12).map(FamilySpec::e));
    specs.push(FamilySpec::a(8));
    specs.push(FamilySpec::a(11));
    specs.extend((0..6).map(FamilySpec::exceptional));
    specs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_cycles_bruteforce;
    use crate::embedding::planar_embed;

    #[test]
    fn d_examples() {
        assert_eq!(count_cycles(&build_d(6).unwrap(), 5).unwrap(), 24);
        assert_eq!(count_cycles(&build_d(7).unwrap(), 5).unwrap(), 41);
        assert_eq!(count_cycles(&build_d(10).unwrap(), 5).unwrap(), 112);
        assert!(build_d(4).is_err());
        let d10 = build_d(10).unwrap();
        assert_eq!(d10.degree(8).unwrap(), 8);
        assert!(!d10.has_edge(8, 9));
    }

    #[test]
    fn e_examples() {
        // brute-force oracle gives 2n^2 - 10n + 6 for this graph
        for n in 5..=9 {
            let e = build_e(n).unwrap();
            assert_eq!(count_cycles(&e, 5).unwrap(), count_cycles_bruteforce(&e, 5).unwrap());
        }
        assert_eq!(count_cycles(&build_e(6).unwrap(), 5).unwrap(), 18);
        assert_eq!(count_cycles(&build_e(8).unwrap(), 5).unwrap(), 54);
        assert!(build_e(7).unwrap().has_edge(5, 6));
        assert!(build_e(3).is_err());
    }

    #[test]
    fn a_and_catalog_counts() {
        assert_eq!(count_cycles(&build_a(8).unwrap(), 5).unwrap(), 60);
        assert_eq!(count_cycles(&build_a(11).unwrap(), 5).unwrap(), 144);
        assert!(build_a(9).is_err());
        for i in 0..6 {
            let g = build_exceptional(i).unwrap();
            assert_eq!(g.n(), EXCEPTIONAL_ORDERS[i]);
            assert_eq!(count_cycles(&g, 5).unwrap(), EXCEPTIONAL_C5[i], "entry {i}");
        }
        assert!(build_exceptional(6).is_err());
    }

    #[test]
    fn expand_dispatch() {
        let g = expand(&FamilySpec::d(9)).unwrap();
        assert_eq!((g.n(), g.m()), (9, 21));
        let g = expand(&FamilySpec::e(7)).unwrap();
        assert_eq!((g.n(), g.m()), (7, 15));
        assert_eq!(expand(&FamilySpec::a(8)).unwrap(), build_a(8).unwrap());
        assert!(expand(&FamilySpec::a(9)).is_err());
        assert!(expand(&FamilySpec::d(4)).is_err());
    }

    #[test]
    fn every_construction_is_a_triangulation() {
        for spec in catalog_specs() {
            let g = expand(&spec).unwrap();
            assert_eq!(g.m(), 3 * g.n() - 6, "{spec:?}");
            assert!(planar_embed(&g).unwrap().is_triangulation(), "{spec:?}");
        }
    }

    #[test]
    fn names_round_trip() {
        for spec in catalog_specs() {
            assert_eq!(FamilySpec::from_name(&spec.name(), Some(spec.n)).unwrap(), spec);
        }
        assert!(FamilySpec::from_name("a8", Some(9)).is_err());
        assert!(FamilySpec::from_name("dn", None).is_err());
        assert!(FamilySpec::from_name("exc6", None).is_err());
        assert!(FamilySpec::from_name("bogus", Some(5)).is_err());
        assert_eq!(FamilySpec::from_name("a11", None).unwrap().n, 11);
    }
}
