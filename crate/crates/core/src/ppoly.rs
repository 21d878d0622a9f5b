//! P-polynomiality of an ordering, scheme girth, stability, short/long
//! type, and the long-type quotient structure.
//!
//! Two independent routes decide P-polynomiality: a shape condition on
//! the intersection tensor ([`is_p_polynomial`]) and an exact-rational
//! polynomial reconstruction checked entrywise against the adjacency
//! matrices ([`matrix_oracle`]). They must agree on every input.

use num_traits::{FromPrimitive, Num};
use thiserror::Error;

use crate::matrix::{Polynomial, SquareMatrix};
use crate::scheme::{build_scheme, AssociationScheme, RelationPartition, SchemeViolation};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeType {
    /// diameter = girth - 1
    Short,
    /// diameter = girth
    Long,
}

impl SchemeType {
    pub fn as_str(self) -> &'static str {
        match self {
            SchemeType::Short => "short",
            SchemeType::Long => "long",
        }
    }
}

/// Metadata of an accepted P-polynomial ordering. Positions 1..=d hold
/// class indices; `kg` is 0 for short type by convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPolyProfile {
    pub ordering: Vec<usize>,
    pub girth: usize,
    pub diameter: usize,
    pub scheme_type: SchemeType,
    pub stable: bool,
    pub k1: usize,
    pub kg: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PPolyRejection {
    #[error("ordering is not a permutation of the non-diagonal classes")]
    NotPermutation,
    #[error("p^h_{{1,{i}}} is nonzero for h = {h} > {i}+1")]
    UpperTailNonzero { i: usize, h: usize },
    #[error("p^{{i+1}}_{{1,i}} vanishes at i = {i}")]
    SuccessorZero { i: usize },
    #[error("the first relation carries no circuit; girth undefined")]
    FirstRelationAcyclic,
    #[error("diameter {diameter} is neither girth-1 nor girth ({girth})")]
    TypeUndetermined { girth: usize, diameter: usize },
}

fn validate_ordering(d: usize, ordering: &[usize]) -> bool {
    if ordering.len() != d {
        return false;
    }
    let mut seen = vec![false; d + 1];
    for &c in ordering {
        if c == 0 || c > d || seen[c] {
            return false;
        }
        seen[c] = true;
    }
    true
}

/// Class index occupying position `pos` of the ordering (position 0 is
/// the diagonal class).
fn class_at(ordering: &[usize], pos: usize) -> usize {
    if pos == 0 {
        0
    } else {
        ordering[pos - 1]
    }
}

/// Intersection number read in ordering positions.
fn pp(s: &AssociationScheme, ordering: &[usize], h: usize, i: usize, j: usize) -> usize {
    s.p(
        class_at(ordering, h),
        class_at(ordering, i),
        class_at(ordering, j),
    )
}

fn stability(s: &AssociationScheme, ordering: &[usize], girth: usize) -> bool {
    (1..girth).all(|i| {
        let gi = girth - i;
        gi <= s.d() && s.star(class_at(ordering, i)) == class_at(ordering, gi)
    })
}

/// Accepts iff the tensor is upper-Hessenberg in the first relation:
/// p^h_{1,i} = 0 for h > i+1 and p^{i+1}_{1,i} != 0 for i < d, positions
/// taken with respect to the ordering. On acceptance fills the profile.
pub fn is_p_polynomial(
    s: &AssociationScheme,
    ordering: &[usize],
) -> Result<PPolyProfile, PPolyRejection> {
    let d = s.d();
    if !validate_ordering(d, ordering) {
        return Err(PPolyRejection::NotPermutation);
    }
    for i in 1..=d {
        for h in (i + 2)..=d {
            if pp(s, ordering, h, 1, i) != 0 {
                return Err(PPolyRejection::UpperTailNonzero { i, h });
            }
        }
        if i < d && pp(s, ordering, i + 1, 1, i) == 0 {
            return Err(PPolyRejection::SuccessorZero { i });
        }
    }

    let r1 = s.partition().relation_digraph(ordering[0]);
    let girth = r1.metrics().girth.ok_or(PPolyRejection::FirstRelationAcyclic)?;
    let scheme_type = if d + 1 == girth {
        SchemeType::Short
    } else if d == girth {
        SchemeType::Long
    } else {
        return Err(PPolyRejection::TypeUndetermined { girth, diameter: d });
    };
    let kg = match scheme_type {
        SchemeType::Short => 0,
        SchemeType::Long => s.k(class_at(ordering, girth)),
    };
    Ok(PPolyProfile {
        ordering: ordering.to_vec(),
        girth,
        diameter: d,
        scheme_type,
        stable: stability(s, ordering, girth),
        k1: s.k(ordering[0]),
        kg,
    })
}

/// Re-derives the stability verdict of an accepted profile: for
/// 0 < i < g the transpose of position i must sit at position g - i.
/// False here on an accepted profile indicates a bug.
pub fn check_stability(s: &AssociationScheme, profile: &PPolyProfile) -> bool {
    stability(s, &profile.ordering, profile.girth)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleReject {
    NotPermutation,
    /// p^{i+1}_{1,i} = 0: the recursion divides by zero.
    ZeroPivot { i: usize },
    /// v_pos(A_1) differs from the adjacency matrix at position pos.
    Mismatch { pos: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome<T> {
    Accept(Vec<Polynomial<T>>),
    Reject(OracleReject),
}

impl<T> OracleOutcome<T> {
    pub fn accepted(&self) -> bool {
        matches!(self, OracleOutcome::Accept(_))
    }
}

/// Exact-arithmetic cross-validation oracle over any exact scalar:
/// builds the polynomials v_i from the three-term recursion and verifies
/// A_i = v_i(A_1) entrywise for every position.
pub fn matrix_oracle_in<T: Num + Clone + FromPrimitive>(
    s: &AssociationScheme,
    ordering: &[usize],
) -> OracleOutcome<T> {
    let d = s.d();
    if !validate_ordering(d, ordering) {
        return OracleOutcome::Reject(OracleReject::NotPermutation);
    }
    let n = s.n();
    let from = |v: usize| T::from_usize(v).expect("intersection number fits the scalar");

    let adjacency: Vec<SquareMatrix<T>> = (0..=d)
        .map(|pos| {
            let class = class_at(ordering, pos);
            SquareMatrix::from_fn(n, |x, y| {
                if s.partition().label(x, y) == class {
                    T::one()
                } else {
                    T::zero()
                }
            })
        })
        .collect();

    let mut powers = vec![SquareMatrix::identity(n)];
    for k in 1..=d {
        powers.push(powers[k - 1].mul(&adjacency[1]));
    }

    let mut polys: Vec<Polynomial<T>> = vec![Polynomial::constant(T::one())];
    if d >= 1 {
        polys.push(Polynomial::x());
    }
    for i in 1..d {
        let pivot = pp(s, ordering, i + 1, 1, i);
        if pivot == 0 {
            return OracleOutcome::Reject(OracleReject::ZeroPivot { i });
        }
        let mut numerator = polys[i].shift();
        for h in 0..=i {
            let c = pp(s, ordering, h, 1, i);
            if c != 0 {
                numerator = numerator.sub_scaled(&polys[h], from(c));
            }
        }
        polys.push(numerator.div_scalar(from(pivot)));
    }

    for pos in 0..=d {
        if polys[pos].eval_matrix(&powers) != adjacency[pos] {
            return OracleOutcome::Reject(OracleReject::Mismatch { pos });
        }
    }
    OracleOutcome::Accept(polys)
}

/// The concrete oracle over exact rationals.
pub fn matrix_oracle(s: &AssociationScheme, ordering: &[usize]) -> OracleOutcome<Rational> {
    matrix_oracle_in(s, ordering)
}

/// A greedy extension that found two admissible next classes. The paper
/// never exhibits such a scheme; the search reports it instead of
/// guessing a branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguousExtension {
    pub prefix: Vec<usize>,
    pub candidates: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OrderingSearch {
    pub orderings: Vec<Vec<usize>>,
    pub ambiguous: Vec<AmbiguousExtension>,
}

/// All orderings accepted by [`is_p_polynomial`], found by trying each
/// class as R_1 and extending greedily: the next class is the unique
/// unused h with p^h_{1,last} != 0.
pub fn find_p_poly_orderings(s: &AssociationScheme) -> OrderingSearch {
    let d = s.d();
    let mut result = OrderingSearch::default();
    for c1 in 1..=d {
        let mut ordering = vec![c1];
        let mut used = vec![false; d + 1];
        used[0] = true;
        used[c1] = true;
        let mut dead = false;
        while ordering.len() < d {
            let last = *ordering.last().unwrap();
            let candidates: Vec<usize> = (1..=d)
                .filter(|&h| !used[h] && s.p(h, c1, last) != 0)
                .collect();
            match candidates.len() {
                0 => {
                    dead = true;
                    break;
                }
                1 => {
                    used[candidates[0]] = true;
                    ordering.push(candidates[0]);
                }
                _ => {
                    result.ambiguous.push(AmbiguousExtension {
                        prefix: ordering.clone(),
                        candidates,
                    });
                    dead = true;
                    break;
                }
            }
        }
        if !dead && is_p_polynomial(s, &ordering).is_ok() {
            result.orderings.push(ordering);
        }
    }
    result
}

/// Quotient data of a long-type scheme: R_0 union R_g is an equivalence
/// relation whose blocks collapse to a short-type P-polynomial scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongTypeStructure {
    pub fiber_size: usize,
    pub quotient: RelationPartition,
    pub quotient_profile: PPolyProfile,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LongTypeOutcome {
    NotLong,
    Long(LongTypeStructure),
}

/// Structural failures here contradict the long-type decomposition
/// theorem, so they indicate a bug rather than a property of the input.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LongTypeError {
    #[error("R_0 union R_g is not an equivalence relation (vertices {0} and {1})")]
    NotEquivalence(usize, usize),
    #[error("block of vertex {vertex} has size {got}, expected {expected}")]
    BlockSizeMismatch { vertex: usize, got: usize, expected: usize },
    #[error("blocks {0} and {1} are joined by more than one relation")]
    QuotientIllDefined(usize, usize),
    #[error("quotient partition is not an association scheme: {0:?}")]
    QuotientNotScheme(SchemeViolation),
    #[error("quotient scheme is not short-type P-polynomial: {0:?}")]
    QuotientNotPPoly(PPolyRejection),
}

/// Verifies and returns the fiber/quotient decomposition of a long-type
/// profile; `NotLong` for short type.
pub fn long_type_structure(
    s: &AssociationScheme,
    profile: &PPolyProfile,
) -> Result<LongTypeOutcome, LongTypeError> {
    if profile.scheme_type == SchemeType::Short {
        return Ok(LongTypeOutcome::NotLong);
    }
    let n = s.n();
    let g = profile.girth;
    let ordering = &profile.ordering;
    let cg = class_at(ordering, g);
    let in_block = |x: usize, y: usize| {
        let l = s.partition().label(x, y);
        l == 0 || l == cg
    };

    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if block_of[x] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&y| in_block(x, y)).collect();
        let id = blocks.len();
        for &y in &members {
            if block_of[y] != usize::MAX {
                return Err(LongTypeError::NotEquivalence(x, y));
            }
            block_of[y] = id;
        }
        blocks.push(members);
    }
    for x in 0..n {
        for y in 0..n {
            if (block_of[x] == block_of[y]) != in_block(x, y) {
                return Err(LongTypeError::NotEquivalence(x, y));
            }
        }
    }
    let fiber_size = profile.kg + 1;
    for b in &blocks {
        if b.len() != fiber_size {
            return Err(LongTypeError::BlockSizeMismatch {
                vertex: b[0],
                got: b.len(),
                expected: fiber_size,
            });
        }
    }

    // Position of each class within the ordering.
    let mut pos_of = vec![0usize; s.d() + 1];
    for (idx, &c) in ordering.iter().enumerate() {
        pos_of[c] = idx + 1;
    }

    let nb = blocks.len();
    let mut qlabel = vec![0usize; nb * nb];
    for a in 0..nb {
        for b in 0..nb {
            if a == b {
                continue;
            }
            let mut found: Option<usize> = None;
            for &x in &blocks[a] {
                for &y in &blocks[b] {
                    let pos = pos_of[s.partition().label(x, y)];
                    match found {
                        None => found = Some(pos),
                        Some(p) if p != pos => {
                            return Err(LongTypeError::QuotientIllDefined(a, b))
                        }
                        _ => {}
                    }
                }
            }
            qlabel[a * nb + b] = found.expect("blocks are nonempty");
        }
    }
    let quotient = RelationPartition::new(nb, g - 1, qlabel)
        .map_err(|_| LongTypeError::QuotientIllDefined(0, 0))?;
    let qscheme = build_scheme(&quotient).map_err(LongTypeError::QuotientNotScheme)?;
    let natural: Vec<usize> = (1..g).collect();
    let quotient_profile =
        is_p_polynomial(&qscheme, &natural).map_err(LongTypeError::QuotientNotPPoly)?;
    if quotient_profile.scheme_type != SchemeType::Short {
        return Err(LongTypeError::QuotientNotPPoly(PPolyRejection::TypeUndetermined {
            girth: quotient_profile.girth,
            diameter: quotient_profile.diameter,
        }));
    }
    Ok(LongTypeOutcome::Long(LongTypeStructure {
        fiber_size,
        quotient,
        quotient_profile,
    }))
}
