//! Brute-force enumeration of weakly distance-regular relation unions,
//! comparison against the predicted menu, and intersection-number
//! inequality checkers.

use rayon::prelude::*;
use thiserror::Error;

use crate::attached::two_way_partition;
use crate::families::{build_union, theorem_menu, UnionCandidate};
use crate::ppoly::PPolyProfile;
use crate::scheme::{build_scheme, AssociationScheme};

/// Default cap on the number of non-diagonal classes for 2^d enumeration.
pub const DEFAULT_MAX_CLASSES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RejectReason {
    NotStronglyConnected,
    Undirected,
    NotWeaklyDistanceRegular,
    AttachedSchemeDiffers,
}

impl RejectReason {
    pub fn as_str(self) -> &'static str {
        match self {
            RejectReason::NotStronglyConnected => "not_strongly_connected",
            RejectReason::Undirected => "undirected",
            RejectReason::NotWeaklyDistanceRegular => "not_weakly_distance_regular",
            RejectReason::AttachedSchemeDiffers => "attached_scheme_differs",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOutcome {
    /// Valid unions as sorted position sets, in sorted order.
    pub valid: Vec<Vec<usize>>,
    pub rejections: Vec<(Vec<usize>, RejectReason)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{d} classes exceed the enumeration cap {cap}; raise --max-d to override")]
pub struct EnumerationCapExceeded {
    pub d: usize,
    pub cap: usize,
}

fn check_union(
    scheme: &AssociationScheme,
    ordering: &[usize],
    positions: &[usize],
) -> Result<(), RejectReason> {
    let g = build_union(scheme.partition(), ordering, positions);
    if !g.is_strongly_connected() {
        return Err(RejectReason::NotStronglyConnected);
    }
    if g.is_undirected() {
        return Err(RejectReason::Undirected);
    }
    let tw = two_way_partition(&g).expect("strong connectivity was checked");
    if build_scheme(&tw.partition).is_err() {
        return Err(RejectReason::NotWeaklyDistanceRegular);
    }
    if !tw.partition.same_partition(scheme.partition()) {
        return Err(RejectReason::AttachedSchemeDiffers);
    }
    Ok(())
}

/// Tries all 2^d - 1 nonempty position sets and keeps those whose union
/// digraph is strongly connected, not undirected, weakly
/// distance-regular, and attached to the input partition. Candidates
/// are checked independently; the output order is deterministic.
pub fn enumerate_valid_unions(
    scheme: &AssociationScheme,
    ordering: &[usize],
    max_classes: usize,
) -> Result<EnumerationOutcome, EnumerationCapExceeded> {
    let d = scheme.d();
    if d > max_classes {
        return Err(EnumerationCapExceeded { d, cap: max_classes });
    }
    let results: Vec<(Vec<usize>, Result<(), RejectReason>)> = (1u64..(1u64 << d))
        .into_par_iter()
        .map(|mask| {
            let positions: Vec<usize> = (1..=d).filter(|&p| mask >> (p - 1) & 1 == 1).collect();
            let verdict = check_union(scheme, ordering, &positions);
            (positions, verdict)
        })
        .collect();
    let mut valid = Vec::new();
    let mut rejections = Vec::new();
    for (positions, verdict) in results {
        match verdict {
            Ok(()) => valid.push(positions),
            Err(reason) => rejections.push((positions, reason)),
        }
    }
    valid.sort();
    rejections.sort();
    Ok(EnumerationOutcome { valid, rejections })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch {
        found_not_predicted: Vec<Vec<usize>>,
        predicted_not_found: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub found: Vec<Vec<usize>>,
    pub predicted: Vec<UnionCandidate>,
    pub verdict: Verdict,
    pub rejections: Vec<(Vec<usize>, RejectReason)>,
}

/// Runs the enumeration and compares it with the predicted menu. The
/// found side must always be contained in the predicted side; any
/// mismatch is surfaced, never suppressed.
pub fn verify_theorem(
    scheme: &AssociationScheme,
    profile: &PPolyProfile,
    max_classes: usize,
) -> Result<ClassificationReport, EnumerationCapExceeded> {
    let enumeration = enumerate_valid_unions(scheme, &profile.ordering, max_classes)?;
    let predicted = theorem_menu(profile);
    let predicted_sets: Vec<Vec<usize>> = predicted.iter().map(|c| c.positions.clone()).collect();
    let found_not_predicted: Vec<Vec<usize>> = enumeration
        .valid
        .iter()
        .filter(|u| !predicted_sets.contains(u))
        .cloned()
        .collect();
    let predicted_not_found: Vec<Vec<usize>> = predicted_sets
        .iter()
        .filter(|u| !enumeration.valid.contains(u))
        .cloned()
        .collect();
    let verdict = if found_not_predicted.is_empty() && predicted_not_found.is_empty() {
        Verdict::Match
    } else {
        Verdict::Mismatch {
            found_not_predicted,
            predicted_not_found,
        }
    };
    Ok(ClassificationReport {
        found: enumeration.valid,
        predicted,
        verdict,
        rejections: enumeration.rejections,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaStatus {
    Holds,
    HypothesisNotMet,
    Violated { i: usize },
}

impl LemmaStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaStatus::Holds => "holds",
            LemmaStatus::HypothesisNotMet => "hypothesis_not_met",
            LemmaStatus::Violated { .. } => "violated",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    /// Names the inequality being checked, in ordering positions.
    pub id: &'static str,
    pub status: LemmaStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

fn class_at(ordering: &[usize], pos: usize) -> usize {
    if pos == 0 {
        0
    } else {
        ordering[pos - 1]
    }
}

/// Checks the five intersection-number inequalities that hold for
/// distance-regular digraphs of valency k_1 > k_g + 1. Indices are
/// ordering positions. A violation on a genuine scheme in the stated
/// regime would contradict the classification and is surfaced loudly.
pub fn check_lemmas(scheme: &AssociationScheme, profile: &PPolyProfile) -> LemmaReport {
    let ordering = &profile.ordering;
    let g = profile.girth;
    let pp = |h: usize, i: usize, j: usize| {
        scheme.p(
            class_at(ordering, h),
            class_at(ordering, i),
            class_at(ordering, j),
        )
    };

    let hypothesis = profile.k1 > profile.kg + 1;
    let run = |range: Vec<usize>, fail: &dyn Fn(usize) -> bool| -> LemmaStatus {
        if !hypothesis {
            return LemmaStatus::HypothesisNotMet;
        }
        match range.into_iter().find(|&i| fail(i)) {
            Some(i) => LemmaStatus::Violated { i },
            None => LemmaStatus::Holds,
        }
    };

    let checks = vec![
        LemmaCheck {
            id: "p1_2i_nonzero",
            status: run((1..=g - 1).collect(), &|i| pp(1, 2, i) == 0),
        },
        LemmaCheck {
            id: "pi_1_succ_lt_pi_gm1_succ",
            status: run((0..=3.min(g.saturating_sub(3))).collect(), &|i| {
                pp(i, 1, i + 1) >= pp(i, g - 1, i + 1)
            }),
        },
        LemmaCheck {
            id: "pi_1_i_increasing",
            status: run((0..=2.min(g / 2 - 1)).collect(), &|i| {
                pp(i, 1, i) >= pp(i + 1, 1, i + 1)
            }),
        },
        LemmaCheck {
            id: "p1_ii_nonzero",
            status: run((1..=(g + 1) / 2).collect(), &|i| pp(1, i, i) == 0),
        },
        LemmaCheck {
            id: "pi_22_nonzero",
            status: run((1..=4.min(g - 1)).collect(), &|i| pp(i, 2, 2) == 0),
        },
    ];
    LemmaReport { checks }
}
