//! The category `NT*(X)` presented by canonical generators and relations.
//!
//! Objects are the connected non-empty locally closed subsets. Generating
//! arrows are the extension, restriction and boundary transformations between
//! them; relations are the canonical ones, translated from arbitrary locally
//! closed subsets to their connected components.

mod boundary;
mod phi;
mod presented;
mod relations;
mod type_a;

use serde::Serialize;

use crate::poset::{PointSet, Space};

pub use boundary::{boundary_pair_analysis, pullback_objects, BoundaryPairReport};
pub use phi::{phi_iso, CategoryIso, IsoReport};
pub use presented::{build_presented_category, Morphism, PresentedCategory};
pub use relations::{canonical_relations, Relation};
pub use type_a::{
    hom_group_type_a, indecomposables_type_a, long_chain, singular_subsets, subsequent, successor, TypeA,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ArrowKind {
    Extension,
    Restriction,
    Boundary,
}

/// A canonical transformation between two objects of `NT*(X)`.
///
/// For an extension `i_U^Y` the source is `U`; for a restriction `r_Y^C` the
/// target is `C`; for a boundary `δ_C^U` the source is `C` and the target `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub source: PointSet,
    pub target: PointSet,
}

impl Arrow {
    pub fn extension(u: PointSet, y: PointSet) -> Self {
        Arrow { kind: ArrowKind::Extension, source: u, target: y }
    }

    pub fn restriction(y: PointSet, c: PointSet) -> Self {
        Arrow { kind: ArrowKind::Restriction, source: y, target: c }
    }

    pub fn boundary(c: PointSet, u: PointSet) -> Self {
        Arrow { kind: ArrowKind::Boundary, source: c, target: u }
    }

    /// ℤ/2-degree: 1 for boundary maps, 0 otherwise.
    pub fn degree(&self) -> usize {
        usize::from(self.kind == ArrowKind::Boundary)
    }

    /// The arrow that follows this one in its six-term exact sequence.
    pub fn subsequent(&self) -> Arrow {
        match self.kind {
            ArrowKind::Extension => Arrow::restriction(self.target, self.target.difference(self.source)),
            ArrowKind::Restriction => Arrow::boundary(self.target, self.source.difference(self.target)),
            ArrowKind::Boundary => Arrow::extension(self.target, self.target.union(self.source)),
        }
    }

    /// Whether the arrow is a canonical transformation between objects of `NT*(s)`.
    pub fn is_valid(&self, s: &Space) -> bool {
        let objects_ok = s.is_locally_closed(self.source)
            && s.is_locally_closed(self.target)
            && s.is_connected(self.source)
            && s.is_connected(self.target);
        if !objects_ok || self.source == self.target {
            return false;
        }
        match self.kind {
            ArrowKind::Extension => s.is_relatively_open(self.source, self.target),
            ArrowKind::Restriction => s.is_relatively_closed(self.target, self.source),
            ArrowKind::Boundary => {
                let y = self.source.union(self.target);
                self.source.is_disjoint(self.target)
                    && s.is_locally_closed(y)
                    && s.is_connected(y)
                    && s.is_relatively_open(self.target, y)
            }
        }
    }

    /// Display form `i:U->Y`, `r:Y->C` or `d:C->U`.
    pub fn name(&self, s: &Space) -> String {
        let k = match self.kind {
            ArrowKind::Extension => "i",
            ArrowKind::Restriction => "r",
            ArrowKind::Boundary => "d",
        };
        format!("{k}:{}->{}", s.set_name(self.source), s.set_name(self.target))
    }
}

/// All canonical transformations between connected non-empty locally closed
/// subsets, excluding identities. Sorted by source, target and kind.
pub fn canonical_generators(s: &Space) -> Vec<Arrow> {
    let mut out = Vec::new();
    for &y in s.lc_connected() {
        for u in s.relatively_open_subsets(y) {
            let c = y.difference(u);
            if u.is_empty() || c.is_empty() {
                continue;
            }
            let (uc, cc) = (s.is_connected(u), s.is_connected(c));
            if uc {
                out.push(Arrow::extension(u, y));
            }
            if cc {
                out.push(Arrow::restriction(y, c));
            }
            if uc && cc {
                out.push(Arrow::boundary(c, u));
            }
        }
    }
    out.sort_by_key(|a| (a.source, a.target, a.kind));
    out
}
