use crate::poset::{MonotoneMap, PointSet, Space};

/// Completeness and reducedness of a boundary pair `(U, C)`, each decided by
/// the closure criteria and by search over all other boundary pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPairReport {
    pub is_pair: bool,
    pub complete: bool,
    pub reduced: bool,
    /// Proper extensions `(U', C')`.
    pub extensions: Vec<(PointSet, PointSet)>,
    /// Proper sub-boundary pairs `(U', C')`.
    pub sub_pairs: Vec<(PointSet, PointSet)>,
    /// Whether criteria and search agree on both predicates.
    pub consistent: bool,
}

fn is_pair(s: &Space, u: PointSet, c: PointSet) -> bool {
    let y = u.union(c);
    !u.is_empty()
        && !c.is_empty()
        && u.is_disjoint(c)
        && s.is_locally_closed(y)
        && s.is_relatively_open(u, y)
        && s.is_connected(u)
        && s.is_connected(c)
        && s.is_connected(y)
}

/// All boundary pairs `(U, C)` with `U`, `C` and `U ∪ C` connected.
fn all_pairs(s: &Space) -> Vec<(PointSet, PointSet)> {
    let mut out = Vec::new();
    for &y in s.lc_connected() {
        for u in s.relatively_open_subsets(y) {
            let c = y.difference(u);
            if is_pair(s, u, c) {
                out.push((u, c));
            }
        }
    }
    out.sort();
    out
}

pub fn boundary_pair_analysis(s: &Space, u: PointSet, c: PointSet) -> BoundaryPairReport {
    if !is_pair(s, u, c) {
        return BoundaryPairReport {
            is_pair: false,
            complete: false,
            reduced: false,
            extensions: vec![],
            sub_pairs: vec![],
            consistent: true,
        };
    }
    let y = u.union(c);
    let pairs = all_pairs(s);
    let extensions: Vec<_> = pairs
        .iter()
        .copied()
        .filter(|&(u2, c2)| {
            (u2, c2) != (u, c)
                && u.is_subset(u2)
                && s.is_relatively_closed(u, u2)
                && c.is_subset(c2)
                && s.is_relatively_open(c, c2)
        })
        .collect();
    let sub_pairs: Vec<_> = pairs
        .iter()
        .copied()
        .filter(|&(u2, c2)| {
            (u2, c2) != (u, c)
                && u2.is_subset(u)
                && c2.is_subset(c)
                && s.is_relatively_open(u2.union(c), y)
                && s.is_relatively_closed(u.union(c2), y)
        })
        .collect();
    let complete = s.is_open(u) && s.is_closed(c);
    let reduced = c.is_subset(s.closure(u)) && u.is_subset(s.open_hull(c));
    let consistent = complete == extensions.is_empty() && reduced == sub_pairs.is_empty();
    BoundaryPairReport { is_pair: true, complete, reduced, extensions, sub_pairs, consistent }
}

/// The object map `Z ↦ f⁻¹(Z)` of a continuous map, on all locally closed
/// subsets of its target.
pub fn pullback_objects(f: &MonotoneMap) -> Vec<(PointSet, PointSet)> {
    f.target.lc_subsets().into_iter().map(|z| (z, f.preimage(z))).collect()
}
