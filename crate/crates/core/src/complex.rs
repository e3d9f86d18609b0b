//! Order complexes, the locally closed pieces `S(Y,Z)` and their K-groups.
//!
//! `S(Y,Z)` is the set of points of `|Ch(X)|` lying in open simplices whose
//! minimum is in `Y` and maximum in `Z`. Its K-theory is read off the relative
//! simplicial cohomology of the compact pair
//! `K = Ch(Ỹ∩Z̄)`, `L = Ch(Ỹ∩∂̄Z) ∪ Ch(∂̃Y∩Z̄)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{smith, Matrix};
use crate::poset::{PointSet, Space};

/// A simplicial complex whose simplices are chains of a poset, stored by
/// dimension in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    pub simplices: Vec<Vec<PointSet>>,
}

impl SimplicialComplex {
    pub fn from_simplices(all: impl IntoIterator<Item = PointSet>) -> Self {
        let mut by_dim: Vec<BTreeSet<PointSet>> = Vec::new();
        for s in all {
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, BTreeSet::new);
            }
            by_dim[d].insert(s);
        }
        SimplicialComplex { simplices: by_dim.into_iter().map(|b| b.into_iter().collect()).collect() }
    }

    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, s: PointSet) -> bool {
        s.len() >= 1 && self.simplices.get(s.len() - 1).is_some_and(|v| v.binary_search(&s).is_ok())
    }

    pub fn iter(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.simplices.iter().flatten().copied()
    }

    /// Every face of every simplex is present.
    pub fn is_closed(&self) -> bool {
        self.iter().all(|s| s.len() == 1 || s.iter().all(|x| self.contains(s.difference(PointSet::singleton(x)))))
    }
}

/// Nonempty chains of `s` contained in `a`.
pub fn chains_in(s: &Space, a: PointSet) -> Vec<PointSet> {
    let pts: Vec<usize> = a.iter().collect();
    let mut out = Vec::new();
    // extend chains by points above their maximum, in a fixed linear extension
    fn grow(s: &Space, pts: &[usize], chain: PointSet, top: usize, out: &mut Vec<PointSet>) {
        for &p in pts {
            if s.lt(top, p) {
                let c = chain.union(PointSet::singleton(p));
                out.push(c);
                grow(s, pts, c, p, out);
            }
        }
    }
    for &p in &pts {
        let c = PointSet::singleton(p);
        out.push(c);
        grow(s, &pts, c, p, &mut out);
    }
    out
}

pub fn order_complex(s: &Space) -> SimplicialComplex {
    SimplicialComplex::from_simplices(chains_in(s, s.all()))
}

/// Minimum and maximum of a chain.
pub fn chain_min_max(s: &Space, c: PointSet) -> (usize, usize) {
    let min = c.iter().find(|&x| c.iter().all(|y| s.leq(x, y))).expect("chain has a minimum");
    let max = c.iter().find(|&x| c.iter().all(|y| s.leq(y, x))).expect("chain has a maximum");
    (min, max)
}

/// A compact pair `(K, L)` with `L` a subcomplex of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactPair {
    pub k: SimplicialComplex,
    pub l: SimplicialComplex,
}

impl CompactPair {
    /// Simplices of `K` not in `L`.
    pub fn relative_simplices(&self) -> Vec<PointSet> {
        self.k.iter().filter(|&s| !self.l.contains(s)).collect()
    }
}

pub fn s_pair(s: &Space, y: PointSet, z: PointSet) -> Result<CompactPair> {
    for set in [y, z] {
        if !s.is_locally_closed(set) {
            return Err(Error::NotLocallyClosed(s.set_name(set)));
        }
    }
    let hy = s.hulls(y);
    let hz = s.hulls(z);
    let k = SimplicialComplex::from_simplices(chains_in(s, hy.open_hull.intersection(hz.closure)));
    let mut l: Vec<PointSet> = chains_in(s, hy.open_hull.intersection(hz.closed_boundary));
    l.extend(chains_in(s, hy.open_boundary.intersection(hz.closure)));
    let pair = CompactPair { k, l: SimplicialComplex::from_simplices(l) };
    debug_assert_eq!(
        pair.relative_simplices().into_iter().collect::<BTreeSet<_>>(),
        filtered_chains(s, y, z).into_iter().collect::<BTreeSet<_>>()
    );
    Ok(pair)
}

/// Chains with minimum in `y` and maximum in `z`.
pub fn filtered_chains(s: &Space, y: PointSet, z: PointSet) -> Vec<PointSet> {
    chains_in(s, s.all())
        .into_iter()
        .filter(|&c| {
            let (m, mx) = chain_min_max(s, c);
            y.contains(m) && z.contains(mx)
        })
        .collect()
}

/// One degree of cohomology: free rank and invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub rank: usize,
    pub torsion: Vec<u64>,
}

fn incidence(s: &Space, face: PointSet, simplex: PointSet) -> i64 {
    // vertices of a chain are ordered by ⪯; the sign is (-1)^position
    let removed = simplex.difference(face).min_point().expect("face is a proper subset");
    let pos = simplex.iter().filter(|&x| s.lt(x, removed)).count();
    if pos % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Integral cohomology `H*(K, L)` in degrees `0..=dim K`.
pub fn relative_cohomology(s: &Space, p: &CompactPair) -> Vec<CohomologyGroup> {
    let Some(top) = p.k.dim() else { return Vec::new() };
    let rel: Vec<Vec<PointSet>> =
        (0..=top).map(|d| p.k.simplices[d].iter().copied().filter(|&x| !p.l.contains(x)).collect()).collect();
    // δ^d : C^d → C^{d+1}, rows indexed by (d+1)-simplices
    let mut ranks = vec![0usize; top + 2];
    let mut torsion: Vec<Vec<u64>> = vec![Vec::new(); top + 2];
    for d in 0..top {
        let (lo, hi) = (&rel[d], &rel[d + 1]);
        if lo.is_empty() || hi.is_empty() {
            continue;
        }
        let mut m: Matrix<BigInt> = Matrix::zeros(hi.len(), lo.len());
        for (r, &sigma) in hi.iter().enumerate() {
            for x in sigma.iter() {
                let face = sigma.difference(PointSet::singleton(x));
                if let Ok(c) = lo.binary_search(&face) {
                    m[(r, c)] = BigInt::from(incidence(s, face, sigma));
                }
            }
        }
        let sm = smith(&m);
        ranks[d] = sm.rank;
        torsion[d + 1] = sm
            .invariant_factors()
            .iter()
            .map(|f| f.to_u64().expect("invariant factor fits in u64"))
            .collect();
    }
    (0..=top)
        .map(|d| {
            let prev = if d == 0 { 0 } else { ranks[d - 1] };
            CohomologyGroup { degree: d, rank: rel[d].len() - ranks[d] - prev, torsion: torsion[d].clone() }
        })
        .collect()
}

/// ℤ/2-graded finitely generated abelian group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GradedAbelianGroup {
    pub even_rank: usize,
    pub even_torsion: Vec<u64>,
    pub odd_rank: usize,
    pub odd_torsion: Vec<u64>,
}

impl GradedAbelianGroup {
    pub const ZERO: GradedAbelianGroup =
        GradedAbelianGroup { even_rank: 0, even_torsion: Vec::new(), odd_rank: 0, odd_torsion: Vec::new() };

    pub fn free(even_rank: usize, odd_rank: usize) -> Self {
        GradedAbelianGroup { even_rank, odd_rank, ..Self::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.even_rank == 0 && self.odd_rank == 0 && self.even_torsion.is_empty() && self.odd_torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.even_torsion.is_empty() && self.odd_torsion.is_empty()
    }

    /// Parity-swapped group.
    pub fn shift(&self) -> Self {
        GradedAbelianGroup {
            even_rank: self.odd_rank,
            even_torsion: self.odd_torsion.clone(),
            odd_rank: self.even_rank,
            odd_torsion: self.even_torsion.clone(),
        }
    }

    /// Normalise invariant factors to a divisibility chain.
    pub fn normalized(mut self) -> Self {
        self.even_torsion = invariant_chain(&self.even_torsion);
        self.odd_torsion = invariant_chain(&self.odd_torsion);
        self
    }

    /// Compact notation used in the tables: `Z`, `1`, `1²`, `0`, or a sum.
    pub fn short(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        let sup = |k: usize| if k == 1 { String::new() } else { superscript(k) };
        if self.even_rank > 0 {
            parts.push(format!("Z{}", sup(self.even_rank)));
        }
        if self.odd_rank > 0 {
            parts.push(format!("1{}", sup(self.odd_rank)));
        }
        for t in &self.even_torsion {
            parts.push(format!("Z/{t}"));
        }
        for t in &self.odd_torsion {
            parts.push(format!("Z/{t}[1]"));
        }
        parts.join("+")
    }
}

impl fmt::Display for GradedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        let pow = |k: usize| if k == 1 { String::new() } else { superscript(k) };
        if self.even_rank > 0 {
            parts.push(format!("ℤ[0]{}", pow(self.even_rank)));
        }
        if self.odd_rank > 0 {
            parts.push(format!("ℤ[1]{}", pow(self.odd_rank)));
        }
        for t in &self.even_torsion {
            parts.push(format!("ℤ/{t}[0]"));
        }
        for t in &self.odd_torsion {
            parts.push(format!("ℤ/{t}[1]"));
        }
        write!(f, "{}", parts.join("⊕"))
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Invariant factors `d₁ | d₂ | …` of `⊕ ℤ/tᵢ`.
pub fn invariant_chain(ts: &[u64]) -> Vec<u64> {
    let ts: Vec<u64> = ts.iter().copied().filter(|&t| t > 1).collect();
    if ts.is_empty() {
        return ts;
    }
    let mut m: Matrix<BigInt> = Matrix::zeros(ts.len(), ts.len());
    for (i, &t) in ts.iter().enumerate() {
        m[(i, i)] = BigInt::from(t);
    }
    smith(&m).invariant_factors().iter().filter(|d| !d.is_zero()).map(|d| d.to_u64().unwrap()).collect()
}

/// K-groups of `S(Y,Z)` with the cohomology they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGroups {
    pub group: GradedAbelianGroup,
    pub cohomology: Vec<CohomologyGroup>,
    /// Torsion or a class in degree ≥ 3: the identification with K-theory
    /// may fail.
    pub degenerate: bool,
}

pub fn k_groups(s: &Space, y: PointSet, z: PointSet) -> Result<KGroups> {
    let pair = s_pair(s, y, z)?;
    let cohomology = relative_cohomology(s, &pair);
    let mut g = GradedAbelianGroup::default();
    let mut degenerate = false;
    for h in &cohomology {
        if !h.torsion.is_empty() || (h.degree >= 3 && h.rank > 0) {
            degenerate = true;
        }
        if h.degree % 2 == 0 {
            g.even_rank += h.rank;
            g.even_torsion.extend(&h.torsion);
        } else {
            g.odd_rank += h.rank;
            g.odd_torsion.extend(&h.torsion);
        }
    }
    if degenerate {
        log::warn!(
            "S({}, {}) has torsion or cohomology in degree ≥ 3; K-theory identification unverified",
            s.set_name(y),
            s.set_name(z)
        );
    }
    Ok(KGroups { group: g.normalized(), cohomology, degenerate })
}

/// The full `LC* × LC*` table of K-groups, rows `Y`, columns `Z`.
pub fn k_group_table(s: &Space, objects: &[PointSet]) -> Result<Vec<Vec<KGroups>>> {
    objects.iter().map(|&y| objects.iter().map(|&z| k_groups(s, y, z)).collect()).collect()
}
