//! Finite T₀-spaces as partially ordered sets.
//!
//! A point `x` lies below `y` (`x ⪯ y`) when the closure of `{x}` is contained
//! in the closure of `{y}`. Open sets are the up-sets, closed sets the
//! down-sets, locally closed sets the convex sets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest supported number of points (subsets are stored as `u64` masks).
pub const MAX_POINTS: usize = 64;

/// A subset of the points of a space, as a bit mask.
///
/// The type carries no reference to its space; every operation that needs the
/// order takes the [`Space`] explicitly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn singleton(x: usize) -> Self {
        PointSet(1 << x)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        PointSet(points.into_iter().fold(0, |acc, x| acc | (1 << x)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn union(self, o: Self) -> Self {
        PointSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        PointSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        PointSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn min_point(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    /// All subsets of `self`, including `∅` and `self`.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let full = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some((s.wrapping_sub(full)) & full) };
            Some(PointSet(s))
        })
    }
}

impl Ord for PointSet {
    /// Canonical order: by size, then lexicographically on sorted point indices.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A directed graph on vertices `0..n`, without loops or multiple edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::PointOutOfRange { index: a.max(b), n });
            }
            if a == b {
                return Err(Error::Malformed(format!("loop at vertex {a}")));
            }
            set.insert((a, b));
        }
        Ok(DirectedGraph { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Edges `(from, to)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains(&(from, to))
    }

    /// `reach[v]` is the set of vertices reachable from `v` by a directed
    /// path of length ≥ 0. `None` if the graph has a directed cycle.
    pub fn reachability(&self) -> Option<Vec<u64>> {
        let mut out = vec![Vec::new(); self.n];
        let mut indeg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            out[a].push(b);
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(self.n);
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() < self.n {
            return None;
        }
        let mut reach = vec![0u64; self.n];
        for &v in order.iter().rev() {
            reach[v] |= 1 << v;
            for &w in &out[v] {
                reach[v] |= reach[w];
            }
        }
        Some(reach)
    }

    /// No edge is implied by a directed path of length ≥ 2.
    pub fn is_transitively_reduced(&self) -> bool {
        let Some(reach) = self.reachability() else { return false };
        self.edges.iter().all(|&(a, b)| {
            !self.edges.iter().any(|&(a2, c)| a2 == a && c != b && reach[c] >> b & 1 == 1)
        })
    }
}

/// The degree of a vertex in the Hasse graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degree {
    /// Number of incident edges.
    pub unoriented: usize,
    /// Outgoing minus incoming edges.
    pub oriented: i64,
}

/// Topological status of a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetStatus {
    pub open: bool,
    pub closed: bool,
    pub locally_closed: bool,
    pub connected: bool,
}

/// Closure, open hull and the two boundaries of a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hulls {
    pub closure: PointSet,
    pub open_hull: PointSet,
    pub closed_boundary: PointSet,
    pub open_boundary: PointSet,
}

/// A finite T₀-space.
#[derive(Clone)]
pub struct Space {
    labels: Vec<String>,
    /// `up[x]`: points `y` with `x ⪯ y`.
    up: Vec<u64>,
    /// `down[x]`: points `y` with `y ⪯ x`.
    down: Vec<u64>,
    /// Hasse edges `(y, x)` with `x ≺ y` a covering relation.
    hasse: Vec<(usize, usize)>,
    lc_connected: OnceLock<Vec<PointSet>>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for Space {}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Space").field("labels", &self.labels).field("hasse", &self.hasse).finish()
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl Space {
    fn from_up(labels: Vec<String>, up: Vec<u64>) -> Self {
        let n = labels.len();
        let mut down = vec![0u64; n];
        for (x, &u) in up.iter().enumerate() {
            for y in PointSet(u).iter() {
                down[y] |= 1 << x;
            }
        }
        let mut hasse = Vec::new();
        for y in 0..n {
            let below = down[y] & !(1 << y);
            for x in PointSet(below).iter() {
                // x ≺ y is a cover when no z with x ≺ z ≺ y
                let between = up[x] & below & !(1 << x);
                if between == 0 {
                    hasse.push((y, x));
                }
            }
        }
        hasse.sort_unstable();
        Space { labels, up, down, hasse, lc_connected: OnceLock::new() }
    }

    /// Space on points `0..n` whose order is generated by `(lesser, greater)` pairs.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_relations_labeled(default_labels(n), pairs)
    }

    pub fn from_relations_labeled(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        // edge greater -> lesser, reachability gives the order
        let mut edges = Vec::new();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::PointOutOfRange { index: a.max(b), n });
            }
            if a == b {
                continue;
            }
            edges.push((b, a));
        }
        let g = DirectedGraph::new(n, edges)?;
        let reach = g.reachability().ok_or(Error::CycleDetected)?;
        Ok(Self::from_down(labels, reach))
    }

    /// `down[x]` = points below `x` (reflexive, transitive, antisymmetric).
    fn from_down(labels: Vec<String>, down: Vec<u64>) -> Self {
        let n = labels.len();
        let mut up = vec![0u64; n];
        for (x, &d) in down.iter().enumerate() {
            for y in PointSet(d).iter() {
                up[y] |= 1 << x;
            }
        }
        Self::from_up(labels, up)
    }

    /// `x ⪯ y` iff there is a directed path from `y` to `x`.
    pub fn from_graph(g: &DirectedGraph) -> Result<Self> {
        if g.vertex_count() > MAX_POINTS {
            return Err(Error::TooManyPoints(g.vertex_count()));
        }
        let reach = g.reachability().ok_or(Error::CycleDetected)?;
        Ok(Self::from_down(default_labels(g.vertex_count()), reach))
    }

    /// Space from an explicit `leq` matrix (`leq[x][y]` iff `x ⪯ y`).
    pub fn from_leq(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("leq matrix has the wrong shape".into()));
        }
        for x in 0..n {
            if !leq[x][x] {
                return Err(Error::Malformed(format!("leq is not reflexive at {x}")));
            }
            for y in 0..n {
                if x != y && leq[x][y] && leq[y][x] {
                    return Err(Error::CycleDetected);
                }
                for z in 0..n {
                    if leq[x][y] && leq[y][z] && !leq[x][z] {
                        return Err(Error::Malformed("leq is not transitive".into()));
                    }
                }
            }
        }
        let up = (0..n).map(|x| (0..n).filter(|&y| leq[x][y]).fold(0u64, |a, y| a | 1 << y)).collect();
        Ok(Self::from_up(labels, up))
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len(), "label count mismatch");
        Self::from_up(labels, self.up.clone())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn point_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// `x ⪯ y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    /// `x ≺ y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn up_of(&self, x: usize) -> PointSet {
        PointSet(self.up[x])
    }

    pub fn down_of(&self, x: usize) -> PointSet {
        PointSet(self.down[x])
    }

    /// Hasse edges `(y, x)`, meaning `x ≺ y` is a covering relation.
    pub fn hasse_pairs(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn hasse_edges(&self) -> DirectedGraph {
        DirectedGraph { n: self.len(), edges: self.hasse.iter().copied().collect() }
    }

    pub fn opposite(&self) -> Self {
        Self::from_up(self.labels.clone(), self.down.clone())
    }

    /// Disjoint union; points of later summands are shifted past earlier ones.
    /// Labels are kept when they stay distinct, otherwise prefixed by the
    /// summand index.
    pub fn disjoint_union(parts: &[Space]) -> Result<Self> {
        let n: usize = parts.iter().map(Space::len).sum();
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        let mut labels = Vec::with_capacity(n);
        let mut up = Vec::with_capacity(n);
        let mut offset = 0;
        for p in parts {
            labels.extend(p.labels.iter().cloned());
            up.extend(p.up.iter().map(|&u| u << offset));
            offset += p.len();
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() < labels.len() {
            labels.clear();
            for (i, p) in parts.iter().enumerate() {
                labels.extend(p.labels.iter().map(|l| format!("{i}.{l}")));
            }
        }
        Ok(Self::from_up(labels, up))
    }

    /// Subspace on the points of `y`, in increasing index order.
    pub fn subspace(&self, y: PointSet) -> Self {
        let pts: Vec<usize> = y.iter().collect();
        let labels = pts.iter().map(|&x| self.labels[x].clone()).collect();
        let up = pts
            .iter()
            .map(|&x| pts.iter().enumerate().filter(|&(_, &z)| self.leq(x, z)).fold(0u64, |a, (j, _)| a | 1 << j))
            .collect();
        Self::from_up(labels, up)
    }

    pub fn is_open(&self, y: PointSet) -> bool {
        y.iter().all(|x| self.up_of(x).is_subset(y))
    }

    pub fn is_closed(&self, y: PointSet) -> bool {
        y.iter().all(|x| self.down_of(x).is_subset(y))
    }

    /// Convexity: `y₁ ⪯ x ⪯ y₂` with `y₁, y₂ ∈ Y` forces `x ∈ Y`.
    pub fn is_locally_closed(&self, y: PointSet) -> bool {
        self.lc_hull(y) == y
    }

    pub fn is_relatively_open(&self, u: PointSet, y: PointSet) -> bool {
        u.is_subset(y) && u.iter().all(|x| self.up_of(x).intersection(y).is_subset(u))
    }

    pub fn is_relatively_closed(&self, c: PointSet, y: PointSet) -> bool {
        c.is_subset(y) && c.iter().all(|x| self.down_of(x).intersection(y).is_subset(c))
    }

    /// Connectedness of the subspace `y`. Two points of `y` are adjacent when
    /// comparable; for locally closed `y` this is the Hasse graph restricted
    /// to `y`. The empty set is not connected.
    pub fn is_connected(&self, y: PointSet) -> bool {
        match y.min_point() {
            None => false,
            Some(x) => self.component_of(y, x) == y,
        }
    }

    fn component_of(&self, y: PointSet, x: usize) -> PointSet {
        let mut comp = PointSet::singleton(x);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = PointSet::EMPTY;
            for p in frontier.iter() {
                next = next.union(self.up_of(p).union(self.down_of(p)).intersection(y));
            }
            frontier = next.difference(comp);
            comp = comp.union(next);
        }
        comp
    }

    /// Connected components ordered by least point index.
    pub fn components(&self, y: PointSet) -> Vec<PointSet> {
        let mut rest = y;
        let mut out = Vec::new();
        while let Some(x) = rest.min_point() {
            let c = self.component_of(rest, x);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    pub fn status(&self, y: PointSet) -> SubsetStatus {
        SubsetStatus {
            open: self.is_open(y),
            closed: self.is_closed(y),
            locally_closed: self.is_locally_closed(y),
            connected: self.is_connected(y),
        }
    }

    /// Downward closure `Ȳ`.
    pub fn closure(&self, y: PointSet) -> PointSet {
        y.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.down_of(x)))
    }

    /// Upward closure `Ỹ`, the smallest open superset.
    pub fn open_hull(&self, y: PointSet) -> PointSet {
        y.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.up_of(x)))
    }

    pub fn lc_hull(&self, y: PointSet) -> PointSet {
        self.closure(y).intersection(self.open_hull(y))
    }

    pub fn hulls(&self, y: PointSet) -> Hulls {
        let closure = self.closure(y);
        let open_hull = self.open_hull(y);
        Hulls {
            closure,
            open_hull,
            closed_boundary: closure.difference(y),
            open_boundary: open_hull.difference(y),
        }
    }

    /// Minimal and maximal elements of `y`.
    pub fn minimal(&self, y: PointSet) -> PointSet {
        PointSet::from_points(y.iter().filter(|&x| self.down_of(x).intersection(y) == PointSet::singleton(x)))
    }

    pub fn maximal(&self, y: PointSet) -> PointSet {
        PointSet::from_points(y.iter().filter(|&x| self.up_of(x).intersection(y) == PointSet::singleton(x)))
    }

    /// Open subsets of `y` relative to `y` (including `∅` and `y`), canonical order.
    pub fn relatively_open_subsets(&self, y: PointSet) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = y.subsets().filter(|&u| self.is_relatively_open(u, y)).collect();
        v.sort();
        v
    }

    /// All connected non-empty locally closed subsets, canonical order.
    pub fn lc_connected(&self) -> &[PointSet] {
        self.lc_connected.get_or_init(|| {
            let mut out = Vec::new();
            let mut seen: BTreeSet<u64> = BTreeSet::new();
            let mut stack: Vec<PointSet> = (0..self.len()).map(PointSet::singleton).collect();
            while let Some(y) = stack.pop() {
                if !seen.insert(y.0) {
                    continue;
                }
                out.push(y);
                for p in self.neighbours(y).iter() {
                    let z = self.lc_hull(y.union(PointSet::singleton(p)));
                    if !seen.contains(&z.0) {
                        stack.push(z);
                    }
                }
            }
            out.sort();
            out
        })
    }

    /// Points outside `y` comparable to some point of `y`.
    fn neighbours(&self, y: PointSet) -> PointSet {
        y.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.up_of(x)).union(self.down_of(x))).difference(y)
    }

    /// All locally closed non-empty subsets, canonical order.
    pub fn lc_subsets(&self) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = self.all().subsets().filter(|&y| !y.is_empty() && self.is_locally_closed(y)).collect();
        out.sort();
        out
    }

    pub fn degree(&self, v: usize) -> Degree {
        let out = self.hasse.iter().filter(|e| e.0 == v).count();
        let inc = self.hasse.iter().filter(|e| e.1 == v).count();
        Degree { unoriented: out + inc, oriented: out as i64 - inc as i64 }
    }

    /// Undirected Hasse neighbours of `v`, increasing.
    pub fn hasse_neighbours(&self, v: usize) -> Vec<usize> {
        let mut n: Vec<usize> = self
            .hasse
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect();
        n.sort_unstable();
        n
    }

    /// Whether `y` carries the subspace order whose Hasse graph is the
    /// restriction of the ambient Hasse graph (tight embedding).
    pub fn is_tight(&self, y: PointSet) -> bool {
        let sub = self.subspace(y);
        let pts: Vec<usize> = y.iter().collect();
        let restricted: BTreeSet<(usize, usize)> = self
            .hasse
            .iter()
            .filter(|&&(a, b)| y.contains(a) && y.contains(b))
            .map(|&(a, b)| (pts.iter().position(|&p| p == a).unwrap(), pts.iter().position(|&p| p == b).unwrap()))
            .collect();
        sub.hasse.iter().copied().collect::<BTreeSet<_>>() == restricted
    }

    /// Human-readable name of a subset: concatenated labels when all labels
    /// are single characters, otherwise a braced list.
    pub fn set_name(&self, y: PointSet) -> String {
        if y.is_empty() {
            return "∅".into();
        }
        if self.labels.iter().all(|l| l.chars().count() == 1) {
            y.iter().map(|x| self.labels[x].as_str()).collect()
        } else {
            format!("{{{}}}", y.iter().map(|x| self.labels[x].as_str()).collect::<Vec<_>>().join(","))
        }
    }

    /// Parse a subset name produced by [`Space::set_name`], or a comma list.
    pub fn parse_set(&self, s: &str) -> Result<PointSet> {
        let s = s.trim();
        let inner = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(s);
        let mut out = PointSet::EMPTY;
        if inner.contains(',') || self.labels.iter().any(|l| l.chars().count() != 1) {
            for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let x = self.point_by_label(part).ok_or_else(|| Error::UnknownPoint(part.into()))?;
                out.insert(x);
            }
        } else {
            for ch in inner.chars() {
                let l = ch.to_string();
                let x = self.point_by_label(&l).ok_or(Error::UnknownPoint(l))?;
                out.insert(x);
            }
        }
        Ok(out)
    }

    /// Canonical form under relabelling: the lexicographically least `up`
    /// table over all permutations. Exponential; meant for ≤ 8 points.
    pub fn canonical_form(&self) -> Vec<u64> {
        let n = self.len();
        let mut best: Option<Vec<u64>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            // p[new] = old
            let mut inv = vec![0; n];
            for (new, &old) in p.iter().enumerate() {
                inv[old] = new;
            }
            let table: Vec<u64> =
                p.iter().map(|&old| PointSet(self.up[old]).iter().fold(0u64, |a, y| a | 1 << inv[y])).collect();
            if best.as_ref().is_none_or(|b| table < *b) {
                best = Some(table);
            }
        });
        best.unwrap_or_default()
    }

    pub fn is_isomorphic(&self, other: &Space) -> bool {
        self.len() == other.len()
            && self.hasse.len() == other.hasse.len()
            && self.canonical_form() == other.canonical_form()
    }

    /// Some order isomorphism `self → other`, as a point map.
    pub fn isomorphism_to(&self, other: &Space) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() || self.hasse.len() != other.hasse.len() {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(a: &Space, b: &Space, x: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            if x == a.len() {
                return true;
            }
            for y in 0..b.len() {
                if used[y] || a.degree(x) != b.degree(y) {
                    continue;
                }
                let ok = (0..x).all(|w| a.leq(w, x) == b.leq(map[w], y) && a.leq(x, w) == b.leq(y, map[w]));
                if ok {
                    map[x] = y;
                    used[y] = true;
                    if go(a, b, x + 1, map, used) {
                        return true;
                    }
                    used[y] = false;
                }
            }
            false
        }
        go(self, other, 0, &mut map, &mut used).then_some(map)
    }

    /// Comparability pairs `(lesser, greater)` of the Hasse diagram.
    pub fn generating_pairs(&self) -> Vec<(usize, usize)> {
        self.hasse.iter().map(|&(y, x)| (x, y)).collect()
    }
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// A map of points between two spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    pub source: Space,
    pub target: Space,
    pub assignment: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Space, target: Space, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::Malformed("assignment length differs from source size".into()));
        }
        if let Some(&bad) = assignment.iter().find(|&&y| y >= target.len()) {
            return Err(Error::PointOutOfRange { index: bad, n: target.len() });
        }
        Ok(MonotoneMap { source, target, assignment })
    }

    pub fn identity(s: &Space) -> Self {
        MonotoneMap { source: s.clone(), target: s.clone(), assignment: (0..s.len()).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    /// `x ⪯ y ⇒ f(x) ⪯ f(y)`.
    pub fn is_monotone(&self) -> bool {
        let n = self.source.len();
        (0..n).all(|x| {
            (0..n).all(|y| !self.source.leq(x, y) || self.target.leq(self.assignment[x], self.assignment[y]))
        })
    }

    pub fn preimage(&self, z: PointSet) -> PointSet {
        PointSet::from_points((0..self.source.len()).filter(|&x| z.contains(self.assignment[x])))
    }

    pub fn image(&self, y: PointSet) -> PointSet {
        PointSet::from_points(y.iter().map(|x| self.assignment[x]))
    }

    /// `self ∘ g`.
    pub fn after(&self, g: &MonotoneMap) -> MonotoneMap {
        MonotoneMap {
            source: g.source.clone(),
            target: self.target.clone(),
            assignment: g.assignment.iter().map(|&y| self.assignment[y]).collect(),
        }
    }
}

/// Count of each unoriented degree, used by the classifier and its tests.
pub fn degree_profile(s: &Space, y: PointSet) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for v in y.iter() {
        let d = s.hasse_neighbours(v).into_iter().filter(|&w| y.contains(w)).count();
        *m.entry(d).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_all() {
        let y = PointSet::from_points([1, 3, 4]);
        let subs: Vec<PointSet> = y.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(y)));
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v = vec![PointSet::from_points([1, 2]), PointSet::from_points([0, 3]), PointSet::singleton(2)];
        v.sort();
        assert_eq!(v, vec![PointSet::singleton(2), PointSet::from_points([0, 3]), PointSet::from_points([1, 2])]);
    }

    #[test]
    fn chord_is_not_reduced() {
        let g = DirectedGraph::new(3, [(2, 1), (1, 0), (2, 0)]).unwrap();
        assert!(!g.is_transitively_reduced());
        let h = DirectedGraph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert!(h.is_transitively_reduced());
        assert_eq!(Space::from_graph(&g).unwrap(), Space::from_graph(&h).unwrap());
    }

    #[test]
    fn cycle_rejected() {
        assert!(matches!(Space::from_relations(2, &[(0, 1), (1, 0)]), Err(Error::CycleDetected)));
    }
}
