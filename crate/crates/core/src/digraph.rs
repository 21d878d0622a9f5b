//! Finite simple loop-free digraphs with two-way distance machinery.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Sentinel distance for an unreachable vertex.
pub const INF: usize = usize::MAX;

/// Ordered pair of shortest-path lengths: x to y and y to x.
///
/// Both components are finite on strongly connected digraphs; `INF`
/// encodes unreachability. The derived ordering is lexicographic by
/// (forward, backward), which puts `(0,0)` first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DistancePair {
    pub forward: usize,
    pub backward: usize,
}

impl DistancePair {
    pub fn new(forward: usize, backward: usize) -> Self {
        Self { forward, backward }
    }

    /// The pair seen from the other endpoint.
    pub fn swap(self) -> Self {
        Self {
            forward: self.backward,
            backward: self.forward,
        }
    }

    pub fn is_finite(self) -> bool {
        self.forward != INF && self.backward != INF
    }
}

impl fmt::Display for DistancePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |v: usize| {
            if v == INF {
                "inf".to_string()
            } else {
                v.to_string()
            }
        };
        write!(f, "({},{})", part(self.forward), part(self.backward))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("vertex count must be positive")]
    Empty,
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("fiber count must be at least 2, got {0}")]
    FiberTooSmall(usize),
    #[error("lexicographic product base must be strongly connected")]
    BaseNotStronglyConnected,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} out of range for {1} vertices")]
    OutOfRange(usize, usize),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
}

/// Which graph sits on each fiber of a lexicographic product.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiberKind {
    Complete,
    Empty,
}

impl FromStr for FiberKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "complete" => Ok(FiberKind::Complete),
            "empty" => Ok(FiberKind::Empty),
            other => Err(format!("expected 'complete' or 'empty', got '{other}'")),
        }
    }
}

/// Finite simple loop-free digraph stored as sorted out-adjacency lists.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
}

/// Summary invariants of a digraph. `None` encodes an infinite value:
/// diameter when not strongly connected, girth when acyclic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub strongly_connected: bool,
    pub undirected: bool,
}

impl Digraph {
    /// Builds a digraph from an explicit arc list, rejecting loops,
    /// duplicates and out-of-range endpoints.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, DigraphError> {
        if n == 0 {
            return Err(DigraphError::Empty);
        }
        let mut out = vec![Vec::new(); n];
        for &(u, v) in arcs {
            if u >= n {
                return Err(DigraphError::OutOfRange(u, n));
            }
            if v >= n {
                return Err(DigraphError::OutOfRange(v, n));
            }
            if u == v {
                return Err(DigraphError::Loop(u));
            }
            out[u].push(v);
        }
        for (u, row) in out.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                return Err(DigraphError::DuplicateArc(u, w[0]));
            }
        }
        Ok(Self { n, out })
    }

    /// The directed cycle on `Z_n` with arcs v -> v+1 (mod n).
    ///
    /// A 2-cycle would be undirected and a 1-cycle a loop, so n >= 3.
    pub fn directed_cycle(n: usize) -> Result<Self, DigraphError> {
        if n < 3 {
            return Err(DigraphError::CycleTooShort(n));
        }
        let arcs: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_arcs(n, &arcs)
    }

    /// Lexicographic product of `self` by a complete or empty graph on
    /// `m` vertices. Vertex (x, a) is encoded as x*m + a. Arcs between
    /// fibers follow the base regardless of fiber index; complete fibers
    /// add all intra-fiber arcs.
    pub fn lex_product(&self, m: usize, fiber: FiberKind) -> Result<Self, DigraphError> {
        if m < 2 {
            return Err(DigraphError::FiberTooSmall(m));
        }
        if !self.is_strongly_connected() {
            return Err(DigraphError::BaseNotStronglyConnected);
        }
        let n = self.n * m;
        let mut arcs = Vec::new();
        for x in 0..self.n {
            for a in 0..m {
                for &y in &self.out[x] {
                    for b in 0..m {
                        arcs.push((x * m + a, y * m + b));
                    }
                }
                if fiber == FiberKind::Complete {
                    for b in 0..m {
                        if b != a {
                            arcs.push((x * m + a, x * m + b));
                        }
                    }
                }
            }
        }
        Self::from_arcs(n, &arcs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// All arcs in (source, target) order, sorted.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    /// Digraph with every arc reversed.
    pub fn transpose(&self) -> Self {
        let mut out = vec![Vec::new(); self.n];
        for (u, v) in self.arcs() {
            out[v].push(u);
        }
        for row in &mut out {
            row.sort_unstable();
        }
        Self { n: self.n, out }
    }

    /// Shortest-path lengths from `source` to every vertex.
    pub fn bfs(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![INF; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.out[u] {
                if dist[v] == INF {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Row-major all-pairs distance matrix, one BFS per source.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.bfs(v)).collect()
    }

    /// Forward and backward shortest-path lengths between x and y.
    pub fn two_way_distance(&self, x: usize, y: usize) -> DistancePair {
        assert!(x < self.n && y < self.n, "vertex index out of range");
        DistancePair::new(self.bfs(x)[y], self.bfs(y)[x])
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs(0).iter().all(|&d| d != INF) && self.transpose().bfs(0).iter().all(|&d| d != INF)
    }

    /// True iff the arc set, as a relation, is symmetric.
    pub fn is_undirected(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// Diameter, girth, strong connectivity and undirectedness in one pass
    /// over the distance matrix.
    pub fn metrics(&self) -> Metrics {
        let dm = self.distance_matrix();
        let mut diameter = Some(0usize);
        for row in &dm {
            for &d in row {
                if d == INF {
                    diameter = None;
                } else if let Some(cur) = diameter {
                    diameter = Some(cur.max(d));
                }
            }
        }
        // Shortest circuit through arc (u, v) has length dist(v, u) + 1.
        let mut girth = None;
        for (u, v) in self.arcs() {
            let back = dm[v][u];
            if back != INF {
                let c = back + 1;
                girth = Some(girth.map_or(c, |g: usize| g.min(c)));
            }
        }
        Metrics {
            diameter,
            girth,
            strongly_connected: diameter.is_some(),
            undirected: self.is_undirected(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn circulant(n: usize, steps: &[usize]) -> Digraph {
        let mut arcs = Vec::new();
        for v in 0..n {
            for &s in steps {
                arcs.push((v, (v + s) % n));
            }
        }
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn cycle_three_has_expected_arcs() {
        let g = Digraph::directed_cycle(3).unwrap();
        let arcs: Vec<_> = g.arcs().collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn cycle_rejects_short_lengths() {
        assert_eq!(Digraph::directed_cycle(2), Err(DigraphError::CycleTooShort(2)));
        assert_eq!(Digraph::directed_cycle(1), Err(DigraphError::CycleTooShort(1)));
    }

    #[test]
    fn cycle_six_girth() {
        let g = Digraph::directed_cycle(6).unwrap();
        assert_eq!(g.metrics().girth, Some(6));
    }

    #[test]
    fn cycle_five_two_way_distances() {
        let g = Digraph::directed_cycle(5).unwrap();
        assert_eq!(g.two_way_distance(0, 0), DistancePair::new(0, 0));
        assert_eq!(g.two_way_distance(0, 2), DistancePair::new(2, 3));
    }

    #[test]
    fn circulant_two_way_distance() {
        // Z_6 with arcs {+1,+2}: the (1,3) class is nonempty.
        let g = circulant(6, &[1, 2]);
        assert_eq!(g.two_way_distance(0, 1), DistancePair::new(1, 3));
    }

    #[test]
    fn cycle_metrics() {
        let m = Digraph::directed_cycle(6).unwrap().metrics();
        assert_eq!(m.diameter, Some(5));
        assert_eq!(m.girth, Some(6));
        assert!(m.strongly_connected);
        assert!(!m.undirected);
    }

    #[test]
    fn circulant_metrics() {
        // Shortest circuit 0 -> 2 -> 4 -> 0.
        let m = circulant(6, &[1, 2]).metrics();
        assert_eq!(m.diameter, Some(3));
        assert_eq!(m.girth, Some(3));
    }

    #[test]
    fn lex_product_empty_fiber_counts() {
        let base = Digraph::directed_cycle(3).unwrap();
        let g = base.lex_product(2, FiberKind::Empty).unwrap();
        assert_eq!(g.n(), 6);
        assert!((0..6).all(|v| g.out_neighbors(v).len() == 2));
        assert_eq!(g.metrics().girth, Some(3));
    }

    #[test]
    fn lex_product_long_type_witness() {
        let base = Digraph::directed_cycle(6).unwrap();
        let g = base.lex_product(2, FiberKind::Empty).unwrap();
        let m = g.metrics();
        assert_eq!(m.diameter, Some(6));
        assert_eq!(m.girth, Some(6));
    }

    #[test]
    fn lex_product_complete_fiber() {
        let base = Digraph::directed_cycle(3).unwrap();
        let g = base.lex_product(2, FiberKind::Complete).unwrap();
        assert!((0..6).all(|v| g.out_neighbors(v).len() == 3));
        // Fiber mates sit at two-way distance (1,1).
        assert_eq!(g.two_way_distance(0, 1), DistancePair::new(1, 1));
    }

    #[test]
    fn lex_product_rejects_small_fiber() {
        let base = Digraph::directed_cycle(3).unwrap();
        assert_eq!(
            base.lex_product(1, FiberKind::Empty),
            Err(DigraphError::FiberTooSmall(1))
        );
    }

    #[test]
    fn transpose_of_cycle() {
        let g = Digraph::directed_cycle(5).unwrap();
        let t = g.transpose();
        for v in 0..5 {
            assert_eq!(t.out_neighbors(v), &[(v + 4) % 5]);
        }
        assert_eq!(t.transpose(), g);
    }

    #[test]
    fn transpose_preserves_girth() {
        let g = circulant(6, &[1, 2]);
        assert_eq!(g.metrics().girth, g.transpose().metrics().girth);
    }

    #[test]
    fn from_arcs_rejects_bad_input() {
        assert_eq!(
            Digraph::from_arcs(3, &[(0, 0)]),
            Err(DigraphError::Loop(0))
        );
        assert_eq!(
            Digraph::from_arcs(3, &[(0, 1), (0, 1)]),
            Err(DigraphError::DuplicateArc(0, 1))
        );
        assert_eq!(
            Digraph::from_arcs(3, &[(0, 3)]),
            Err(DigraphError::OutOfRange(3, 3))
        );
    }

    proptest! {
        #[test]
        fn two_way_distance_swaps(n in 3usize..9, steps in proptest::collection::btree_set(1usize..4, 1..3)) {
            let steps: Vec<usize> = steps.into_iter().filter(|&s| s < n).collect();
            prop_assume!(!steps.is_empty());
            let g = circulant(n, &steps);
            for x in 0..n {
                for y in 0..n {
                    prop_assert_eq!(g.two_way_distance(x, y), g.two_way_distance(y, x).swap());
                    prop_assert_eq!(
                        g.transpose().two_way_distance(x, y),
                        g.two_way_distance(x, y).swap()
                    );
                }
            }
        }

        #[test]
        fn cycle_distance_formula(n in 3usize..12) {
            let g = Digraph::directed_cycle(n).unwrap();
            for x in 0..n {
                for y in 0..n {
                    prop_assert_eq!(g.bfs(x)[y], (y + n - x) % n);
                }
            }
        }

        #[test]
        fn lex_product_degree_counts(n in 3usize..7, m in 2usize..4) {
            let base = Digraph::directed_cycle(n).unwrap();
            let e = base.lex_product(m, FiberKind::Empty).unwrap();
            prop_assert_eq!(e.n(), n * m);
            prop_assert!((0..e.n()).all(|v| e.out_neighbors(v).len() == m));
            let c = base.lex_product(m, FiberKind::Complete).unwrap();
            prop_assert!((0..c.n()).all(|v| c.out_neighbors(v).len() == m + m - 1));
        }
    }
}
