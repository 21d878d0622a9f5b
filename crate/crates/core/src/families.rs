//! The predicted menu of relation unions for a P-polynomial profile,
//! and construction of union digraphs.

use std::fmt;

use crate::digraph::Digraph;
use crate::ppoly::{PPolyProfile, SchemeType};
use crate::scheme::RelationPartition;

/// Which menu clause produced a union.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::I => "i",
            CaseTag::II => "ii",
            CaseTag::III => "iii",
            CaseTag::IV => "iv",
            CaseTag::V => "v",
            CaseTag::VI => "vi",
        };
        f.write_str(s)
    }
}

/// A union of ordering positions together with its menu clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionCandidate {
    /// Sorted, nonempty, never containing position 0.
    pub positions: Vec<usize>,
    pub case_tag: CaseTag,
}

/// The unions permitted by the classification, evaluated literally on
/// (g, d, k_1, k_g). Duplicates arising at tiny girth are removed,
/// keeping the earliest clause.
pub fn theorem_menu(profile: &PPolyProfile) -> Vec<UnionCandidate> {
    let g = profile.girth;
    let long = profile.scheme_type == SchemeType::Long;
    let k1 = profile.k1;
    let kg = profile.kg;
    let thick = k1 > kg + 1;
    let even = g % 2 == 0;

    let mut menu: Vec<UnionCandidate> = Vec::new();
    let mut push = |tag: CaseTag, positions: Vec<usize>| {
        if !menu.iter().any(|c| c.positions == positions) {
            menu.push(UnionCandidate {
                positions,
                case_tag: tag,
            });
        }
    };

    push(CaseTag::I, vec![1]);
    push(CaseTag::I, vec![g - 1]);
    if thick && (g == 6 || g == 8) {
        push(CaseTag::II, vec![2]);
        push(CaseTag::II, vec![g - 2]);
    }
    if even {
        push(CaseTag::III, vec![1, 2]);
        push(CaseTag::III, vec![g - 2, g - 1]);
    }
    if long {
        push(CaseTag::IV, vec![1, g]);
        push(CaseTag::IV, vec![g - 1, g]);
    }
    if thick && long && (g == 6 || g == 8) {
        push(CaseTag::V, vec![2, g]);
        push(CaseTag::V, vec![g - 2, g]);
    }
    if long && even && g > 4 {
        push(CaseTag::VI, vec![1, 2, g]);
        push(CaseTag::VI, vec![g - 2, g - 1, g]);
    }

    menu.sort_by(|a, b| a.positions.cmp(&b.positions));
    menu
}

/// The digraph (X, union of R at the given ordering positions).
pub fn build_union(
    partition: &RelationPartition,
    ordering: &[usize],
    positions: &[usize],
) -> Digraph {
    let d = partition.d();
    assert!(!positions.is_empty(), "union must be nonempty");
    assert!(
        positions.iter().all(|&p| p >= 1 && p <= d),
        "positions must lie in 1..=d"
    );
    let mut selected = vec![false; d + 1];
    for &p in positions {
        selected[ordering[p - 1]] = true;
    }
    let n = partition.n();
    let mut arcs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if selected[partition.label(x, y)] {
                arcs.push((x, y));
            }
        }
    }
    Digraph::from_arcs(n, &arcs).expect("non-diagonal classes carry no loops")
}
