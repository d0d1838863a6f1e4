//! Left-right planarity test with embedding construction.
//!
//! Follows Brandes' presentation of the de Fraysseix–Ossona de Mendez–
//! Rosenstiehl criterion: a DFS orientation computes lowpoints and nesting
//! depths, a second DFS maintains a stack of conflict pairs of return-edge
//! intervals, and a third DFS turns the resulting edge sides into a rotation
//! system. Runs in linear time after the `m <= 3n - 6` precheck.

use std::collections::HashMap;

use crate::graph::Graph;

type EdgeId = usize;

#[derive(Clone, Copy, Default, Debug)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// Cyclic neighbor lists kept as a doubly linked ring per vertex.
struct HalfEdges {
    cw: HashMap<(usize, usize), usize>,
    ccw: HashMap<(usize, usize), usize>,
    first: Vec<Option<usize>>,
}

impl HalfEdges {
    fn new(n: usize) -> Self {
        HalfEdges {
            cw: HashMap::new(),
            ccw: HashMap::new(),
            first: vec![None; n],
        }
    }

    /// Inserts `w` directly after `reference` (clockwise) around `v`.
    fn add_cw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.cw.insert((v, w), w);
                self.ccw.insert((v, w), w);
                self.first[v] = Some(w);
            }
            Some(r) => {
                let after = self.cw[&(v, r)];
                self.cw.insert((v, r), w);
                self.cw.insert((v, w), after);
                self.ccw.insert((v, after), w);
                self.ccw.insert((v, w), r);
            }
        }
    }

    /// Inserts `w` directly before `reference` around `v`.
    fn add_ccw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(v, w, None),
            Some(r) => {
                let before = self.ccw[&(v, r)];
                self.add_cw(v, w, Some(before));
                if self.first[v] == Some(r) {
                    self.first[v] = Some(w);
                }
            }
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        let reference = self.first[v];
        self.add_ccw(v, w, reference);
    }

    fn rotation(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(start) = self.first[v] {
            let mut cur = start;
            loop {
                out.push(cur);
                cur = self.cw[&(v, cur)];
                if cur == start {
                    break;
                }
            }
        }
        out
    }
}

struct LrState<'g> {
    g: &'g Graph,
    height: Vec<Option<i64>>,
    parent_edge: Vec<Option<EdgeId>>,
    // oriented edges
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: HashMap<(usize, usize), EdgeId>,
    out: Vec<Vec<EdgeId>>,
    lowpt: Vec<i64>,
    lowpt2: Vec<i64>,
    nesting: Vec<i64>,
    // testing phase
    refs: Vec<Option<EdgeId>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<EdgeId>,
    roots: Vec<usize>,
}

impl<'g> LrState<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let m = g.m();
        LrState {
            g,
            height: vec![None; n],
            parent_edge: vec![None; n],
            src: Vec::with_capacity(m),
            dst: Vec::with_capacity(m),
            oriented: HashMap::with_capacity(m),
            out: vec![Vec::new(); n],
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting: Vec::with_capacity(m),
            refs: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![0; m],
            roots: Vec::new(),
        }
    }

    fn key(u: usize, v: usize) -> (usize, usize) {
        if u < v {
            (u, v)
        } else {
            (v, u)
        }
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        for &w in self.g.neighbors(v) {
            if self.oriented.contains_key(&Self::key(v, w)) {
                continue;
            }
            let vw = self.src.len();
            self.oriented.insert(Self::key(v, w), vw);
            self.src.push(v);
            self.dst.push(w);
            self.out[v].push(vw);
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            self.nesting[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < hv {
                // chordal
                self.nesting[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: EdgeId) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> Option<i64> {
        let l = p.left.low.map(|e| self.lowpt[e]);
        let r = p.right.low.map(|e| self.lowpt[e]);
        match (l, r) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        let adj = self.out[v].clone();
        for (idx, &ei) in adj.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < hv {
                let e = e.expect("return edges imply a parent edge");
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        loop {
            let Some(mut q) = self.stack.pop() else {
                return false;
            };
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("non-empty interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    self.refs[pl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() <= self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.refs[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.refs[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.src[e];
        let hu = self.height[u].expect("visited");
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != Some(hu) {
                break;
            }
            let p = self.stack.pop().expect("non-empty");
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            // trim right interval
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        // side of e is the side of a highest return edge
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let hl = top.left.high;
                let hr = top.right.high;
                self.refs[e] = match (hl, hr) {
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    (Some(l), None) => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn sign(&mut self, e: EdgeId) -> i64 {
        // iterative walk along the reference chain
        let mut chain = Vec::new();
        let mut cur = e;
        while let Some(r) = self.refs[cur] {
            chain.push(cur);
            cur = r;
        }
        let mut s = self.side[cur];
        for &c in chain.iter().rev() {
            self.side[c] *= s;
            self.refs[c] = None;
            s = self.side[c];
        }
        self.side[e]
    }

    fn embed(&self, v: usize, half: &mut HalfEdges, left_ref: &mut [usize], right_ref: &mut [usize]) {
        for &ei in &self.out[v] {
            let w = self.dst[ei];
            if self.parent_edge[w] == Some(ei) {
                half.add_first(w, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed(w, half, left_ref, right_ref);
            } else if self.side[ei] == 1 {
                half.add_cw(w, v, Some(right_ref[w]));
            } else {
                half.add_ccw(w, v, Some(left_ref[w]));
                left_ref[w] = v;
            }
        }
    }
}

/// Returns a planar rotation system (one cyclic neighbor order per vertex)
/// or `None` if the graph is not planar.
pub(crate) fn planar_rotations(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n > 2 && g.m() > 3 * n - 6 {
        return None;
    }
    let mut st = LrState::new(g);
    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            st.roots.push(v);
            st.orient(v);
        }
    }
    let dfs_order = st.out.clone();
    for v in 0..n {
        let nest = &st.nesting;
        st.out[v].sort_by_key(|&e| nest[e]);
    }
    for r in st.roots.clone() {
        if !st.test(r) {
            return None;
        }
    }
    for e in 0..st.src.len() {
        let s = st.sign(e);
        st.nesting[e] *= s;
    }
    st.out = dfs_order;
    for v in 0..n {
        let nest = &st.nesting;
        st.out[v].sort_by_key(|&e| nest[e]);
    }
    let mut half = HalfEdges::new(n);
    for v in 0..n {
        let mut prev = None;
        for &e in &st.out[v] {
            let w = st.dst[e];
            half.add_cw(v, w, prev);
            prev = Some(w);
        }
    }
    let mut left_ref = vec![0; n];
    let mut right_ref = vec![0; n];
    for &r in &st.roots {
        st.embed(r, &mut half, &mut left_ref, &mut right_ref);
    }
    Some((0..n).map(|v| half.rotation(v)).collect())
}
