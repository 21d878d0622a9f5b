//! Two-way distance partitions and weak distance-regularity.

use thiserror::Error;

use crate::digraph::{Digraph, DistancePair};
use crate::scheme::{
    build_scheme, AssociationScheme, ConstancyWitness, RelationPartition, SchemeViolation,
};

/// The partition of X x X by two-way distance, with classes sorted
/// lexicographically by (forward, backward); class 0 is (0,0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoWayPartition {
    pub classes: Vec<DistancePair>,
    pub partition: RelationPartition,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AttachedError {
    #[error("digraph is not strongly connected; two-way distance is undefined")]
    NotStronglyConnected,
    #[error("digraph is undirected; the attached scheme is only defined for digraphs")]
    Undirected,
}

/// Constancy failure of the two-way partition, with the offending
/// classes spelled out as distance pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WdrdViolation {
    pub h: DistancePair,
    pub i: DistancePair,
    pub j: DistancePair,
    pub witness: ConstancyWitness,
}

/// A validated attached scheme together with the distance pair carried
/// by each class index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachedScheme {
    pub scheme: AssociationScheme,
    pub labels: Vec<DistancePair>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AttachedOutcome {
    Scheme(AttachedScheme),
    Violation(WdrdViolation),
}

impl AttachedOutcome {
    pub fn is_scheme(&self) -> bool {
        matches!(self, AttachedOutcome::Scheme(_))
    }

    pub fn unwrap_scheme(self) -> AttachedScheme {
        match self {
            AttachedOutcome::Scheme(a) => a,
            AttachedOutcome::Violation(v) => panic!("expected attached scheme, got {v:?}"),
        }
    }
}

/// Computes the two-way distance partition of a strongly connected
/// digraph.
pub fn two_way_partition(g: &Digraph) -> Result<TwoWayPartition, AttachedError> {
    let n = g.n();
    let dm = g.distance_matrix();
    let mut pairs = vec![DistancePair::new(0, 0); n * n];
    let mut classes: Vec<DistancePair> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let p = DistancePair::new(dm[x][y], dm[y][x]);
            if !p.is_finite() {
                return Err(AttachedError::NotStronglyConnected);
            }
            pairs[x * n + y] = p;
            classes.push(p);
        }
    }
    classes.sort_unstable();
    classes.dedup();
    let index_of = |p: DistancePair| classes.binary_search(&p).expect("class present");
    let label: Vec<usize> = pairs.iter().map(|&p| index_of(p)).collect();
    let partition = RelationPartition::new(n, classes.len() - 1, label)
        .expect("two-way labels satisfy the partition invariants");
    Ok(TwoWayPartition { classes, partition })
}

/// Builds the attached scheme of `g`, or the first constancy violation.
/// `g` is weakly distance-regular iff the scheme outcome is returned.
pub fn attached_scheme(g: &Digraph) -> Result<AttachedOutcome, AttachedError> {
    let tw = two_way_partition(g)?;
    if g.is_undirected() {
        return Err(AttachedError::Undirected);
    }
    match build_scheme(&tw.partition) {
        Ok(scheme) => Ok(AttachedOutcome::Scheme(AttachedScheme {
            scheme,
            labels: tw.classes,
        })),
        Err(SchemeViolation::Constancy(witness)) => Ok(AttachedOutcome::Violation(WdrdViolation {
            h: tw.classes[witness.h],
            i: tw.classes[witness.i],
            j: tw.classes[witness.j],
            witness,
        })),
        // label(y,x) is the swap of label(x,y), so the transpose axiom
        // cannot fail on a two-way partition.
        Err(SchemeViolation::Symmetry { .. }) => {
            unreachable!("two-way partitions are closed under swap")
        }
    }
}
