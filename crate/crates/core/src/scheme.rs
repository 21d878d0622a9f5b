//! Association-scheme axioms, exact intersection tensors, valencies and
//! the transpose involution.

use thiserror::Error;

use crate::digraph::Digraph;

/// A labeling of X x X into classes 0..=d with class 0 the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPartition {
    n: usize,
    d: usize,
    label: Vec<usize>, // row-major, length n * n
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("label matrix has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("diagonal entry ({0},{0}) is not class 0")]
    DiagonalNotZero(usize),
    #[error("off-diagonal entry ({0},{1}) uses the diagonal class 0")]
    ZeroOffDiagonal(usize, usize),
    #[error("entry ({x},{y}) has label {label}, beyond class count {d}")]
    LabelOutOfRange { x: usize, y: usize, label: usize, d: usize },
    #[error("class {0} is empty")]
    EmptyClass(usize),
}

impl RelationPartition {
    /// Validates the diagonal and nonemptiness invariants.
    pub fn new(n: usize, d: usize, label: Vec<usize>) -> Result<Self, PartitionError> {
        if label.len() != n * n {
            return Err(PartitionError::WrongLength {
                got: label.len(),
                expected: n * n,
            });
        }
        let mut seen = vec![false; d + 1];
        for x in 0..n {
            for y in 0..n {
                let l = label[x * n + y];
                if x == y && l != 0 {
                    return Err(PartitionError::DiagonalNotZero(x));
                }
                if x != y && l == 0 {
                    return Err(PartitionError::ZeroOffDiagonal(x, y));
                }
                if l > d {
                    return Err(PartitionError::LabelOutOfRange { x, y, label: l, d });
                }
                seen[l] = true;
            }
        }
        if let Some(c) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::EmptyClass(c));
        }
        Ok(Self { n, d, label })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn label(&self, x: usize, y: usize) -> usize {
        self.label[x * self.n + y]
    }

    pub fn labels(&self) -> &[usize] {
        &self.label
    }

    /// The digraph (X, R_class). Loop-free because class 0 is excluded.
    pub fn relation_digraph(&self, class: usize) -> Digraph {
        assert!(class >= 1 && class <= self.d, "class {class} out of range");
        let mut arcs = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.label(x, y) == class {
                    arcs.push((x, y));
                }
            }
        }
        Digraph::from_arcs(self.n, &arcs).expect("relation classes carry no loops")
    }

    /// True iff both labelings induce the same partition of X x X, i.e.
    /// they agree up to a bijection of class indices.
    pub fn same_partition(&self, other: &RelationPartition) -> bool {
        if self.n != other.n || self.d != other.d {
            return false;
        }
        let mut fwd = vec![usize::MAX; self.d + 1];
        let mut bwd = vec![usize::MAX; self.d + 1];
        for (&a, &b) in self.label.iter().zip(&other.label) {
            if fwd[a] == usize::MAX {
                fwd[a] = b;
            } else if fwd[a] != b {
                return false;
            }
            if bwd[b] == usize::MAX {
                bwd[b] = a;
            } else if bwd[b] != a {
                return false;
            }
        }
        true
    }

    /// Class indices in order of first appearance in a row-major scan.
    fn appearance_rank(&self) -> Vec<usize> {
        let mut rank = vec![usize::MAX; self.d + 1];
        let mut next = 0;
        for &l in &self.label {
            if rank[l] == usize::MAX {
                rank[l] = next;
                next += 1;
            }
        }
        rank
    }
}

/// Witness that the triple count for classes (h, i, j) is not constant:
/// `pair_a` (the first pair of R_h) sees `count_a` midpoints, `pair_b`
/// sees `count_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstancyWitness {
    pub h: usize,
    pub i: usize,
    pub j: usize,
    pub pair_a: (usize, usize),
    pub pair_b: (usize, usize),
    pub count_a: usize,
    pub count_b: usize,
}

/// First axiom failure found when validating a partition. A violation is
/// a value, not a fault.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeViolation {
    /// label(y,x) does not depend only on label(x,y).
    Symmetry {
        class: usize,
        pair: (usize, usize),
        expected: usize,
        found: usize,
    },
    Constancy(ConstancyWitness),
}

/// Validated association scheme: partition, dense intersection tensor,
/// valencies and the transpose involution. Exact integers throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociationScheme {
    partition: RelationPartition,
    p: Vec<usize>, // (d+1)^3, indexed [h][i][j]
    k: Vec<usize>,
    star: Vec<usize>,
}

impl AssociationScheme {
    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn d(&self) -> usize {
        self.partition.d()
    }

    /// Intersection number p^h_{i,j}.
    pub fn p(&self, h: usize, i: usize, j: usize) -> usize {
        let d1 = self.d() + 1;
        self.p[(h * d1 + i) * d1 + j]
    }

    pub fn k(&self, i: usize) -> usize {
        self.k[i]
    }

    pub fn star(&self, i: usize) -> usize {
        self.star[i]
    }

    pub fn partition(&self) -> &RelationPartition {
        &self.partition
    }

    /// Assembles a scheme from raw parts without re-validating the axioms.
    /// Intended for synthetic fixtures that exercise downstream checkers.
    pub fn from_parts_unchecked(
        partition: RelationPartition,
        p: Vec<usize>,
        k: Vec<usize>,
        star: Vec<usize>,
    ) -> Self {
        let d1 = partition.d() + 1;
        assert_eq!(p.len(), d1 * d1 * d1);
        assert_eq!(k.len(), d1);
        assert_eq!(star.len(), d1);
        Self { partition, p, k, star }
    }
}

/// Validates the scheme axioms on a partition and computes the full
/// intersection tensor by exhaustive triple counting.
///
/// Witnesses are deterministic: the reported violation minimizes
/// (h, i, j, second pair) where classes are compared in order of first
/// appearance in a row-major scan and pairs in row-major order.
pub fn build_scheme(partition: &RelationPartition) -> Result<AssociationScheme, SchemeViolation> {
    let n = partition.n();
    let d = partition.d();
    let d1 = d + 1;

    // Transpose involution, then the full symmetry check.
    let mut star = vec![usize::MAX; d1];
    for x in 0..n {
        for y in 0..n {
            let c = partition.label(x, y);
            let r = partition.label(y, x);
            if star[c] == usize::MAX {
                star[c] = r;
            } else if star[c] != r {
                return Err(SchemeViolation::Symmetry {
                    class: c,
                    pair: (x, y),
                    expected: star[c],
                    found: r,
                });
            }
        }
    }

    let rank = partition.appearance_rank();
    let mut tensor = vec![0usize; d1 * d1 * d1];
    let mut have_ref = vec![false; d1];
    let mut ref_pair = vec![(0usize, 0usize); d1];
    let mut counts = vec![0usize; d1 * d1];
    let mut touched: Vec<usize> = Vec::new();
    // (rank_h, rank_i, rank_j, pair index, witness)
    let mut best: Option<(usize, usize, usize, usize, ConstancyWitness)> = None;

    for x in 0..n {
        for y in 0..n {
            let h = partition.label(x, y);
            for z in 0..n {
                let idx = partition.label(x, z) * d1 + partition.label(z, y);
                if counts[idx] == 0 {
                    touched.push(idx);
                }
                counts[idx] += 1;
            }
            if !have_ref[h] {
                have_ref[h] = true;
                ref_pair[h] = (x, y);
                for &idx in &touched {
                    tensor[h * d1 * d1 + idx] = counts[idx];
                }
            } else {
                let mut local: Option<(usize, usize, usize, usize)> = None;
                for i in 0..d1 {
                    for j in 0..d1 {
                        let idx = i * d1 + j;
                        if tensor[h * d1 * d1 + idx] != counts[idx] {
                            let key = (rank[i], rank[j]);
                            if local.map_or(true, |l| (l.0, l.1) > key) {
                                local = Some((rank[i], rank[j], i, j));
                            }
                        }
                    }
                }
                if let Some((ri, rj, i, j)) = local {
                    let cand = (rank[h], ri, rj, x * n + y);
                    if best.map_or(true, |b| (b.0, b.1, b.2, b.3) > cand) {
                        best = Some((
                            cand.0,
                            cand.1,
                            cand.2,
                            cand.3,
                            ConstancyWitness {
                                h,
                                i,
                                j,
                                pair_a: ref_pair[h],
                                pair_b: (x, y),
                                count_a: tensor[h * d1 * d1 + i * d1 + j],
                                count_b: counts[i * d1 + j],
                            },
                        ));
                    }
                }
            }
            for &idx in &touched {
                counts[idx] = 0;
            }
            touched.clear();
        }
    }

    if let Some((_, _, _, _, witness)) = best {
        return Err(SchemeViolation::Constancy(witness));
    }

    let k: Vec<usize> = (0..d1).map(|i| tensor[i * d1 + star[i]]).collect();
    debug_assert_eq!(k[0], 1);
    debug_assert_eq!(k.iter().sum::<usize>(), n);
    debug_assert!((0..d1).all(|h| {
        (0..d1).all(|i| (0..d1).map(|j| tensor[(h * d1 + i) * d1 + j]).sum::<usize>() == k[i])
    }));

    Ok(AssociationScheme {
        partition: partition.clone(),
        p: tensor,
        k,
        star,
    })
}

/// Outcome of the intersection-number identity checks. Both identities
/// are theorems for valid schemes, so any failure flags an
/// implementation bug rather than a property of the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    /// First (h, i, j) where p^h_{i,j} k_h = p^i_{h,j*} k_i = p^j_{i*,h} k_j fails.
    pub valency_symmetry_failure: Option<(usize, usize, usize)>,
    /// First (e, l, m, h) where the two tensor contraction orders differ.
    pub associativity_failure: Option<(usize, usize, usize, usize)>,
}

impl ConsistencyReport {
    pub fn ok(&self) -> bool {
        self.valency_symmetry_failure.is_none() && self.associativity_failure.is_none()
    }
}

pub fn check_consistency(s: &AssociationScheme) -> ConsistencyReport {
    let d1 = s.d() + 1;
    let mut valency_symmetry_failure = None;
    'outer: for h in 0..d1 {
        for i in 0..d1 {
            for j in 0..d1 {
                let a = s.p(h, i, j) * s.k(h);
                let b = s.p(i, h, s.star(j)) * s.k(i);
                let c = s.p(j, s.star(i), h) * s.k(j);
                if a != b || b != c {
                    valency_symmetry_failure = Some((h, i, j));
                    break 'outer;
                }
            }
        }
    }
    let mut associativity_failure = None;
    'outer2: for e in 0..d1 {
        for l in 0..d1 {
            for m in 0..d1 {
                for h in 0..d1 {
                    let lhs: usize = (0..d1).map(|r| s.p(r, e, l) * s.p(h, m, r)).sum();
                    let rhs: usize = (0..d1).map(|t| s.p(t, m, e) * s.p(h, t, l)).sum();
                    if lhs != rhs {
                        associativity_failure = Some((e, l, m, h));
                        break 'outer2;
                    }
                }
            }
        }
    }
    ConsistencyReport {
        valency_symmetry_failure,
        associativity_failure,
    }
}

/// True iff the tensor is symmetric in its lower indices.
pub fn is_commutative(s: &AssociationScheme) -> bool {
    let d1 = s.d() + 1;
    (0..d1).all(|h| (0..d1).all(|i| (i..d1).all(|j| s.p(h, i, j) == s.p(h, j, i))))
}
