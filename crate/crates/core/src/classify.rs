//! Deciding UCT(X): a finite T₀-space satisfies the UCT for filtrated
//! K-theory iff each connected component is an accordion, i.e. its Hasse
//! diagram is an undirected path. Otherwise a witness from the list of
//! forbidden configurations is produced.

use serde::Serialize;

use crate::builtin;
use crate::error::{Error, Result};
use crate::poset::{MonotoneMap, PointSet, Space};

/// Shape `O_{n₁} ⋁ O_{n₂} ⋁ … ⋁ O_{n_m}` of an accordion, together with the
/// points in path order.
///
/// Point `path[p]` is the `p`-th point in the total order `≤`: runs alternate
/// ascending (odd `i`) and descending (even `i`), consecutive runs share their
/// endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AccordionForm {
    pub m: usize,
    pub n: Vec<usize>,
    pub path: Vec<usize>,
}

impl AccordionForm {
    pub fn point_count(&self) -> usize {
        self.path.len()
    }

    /// Position of the first point of run `i` (1-based) in path order.
    pub fn run_start(&self, i: usize) -> usize {
        self.n[..i - 1].iter().map(|k| k - 1).sum()
    }

    /// Point `a^i`, 1-based.
    pub fn point(&self, a: usize, i: usize) -> usize {
        let start = self.run_start(i);
        let offset = if i % 2 == 1 { a - 1 } else { self.n[i - 1] - a };
        self.path[start + offset]
    }

    /// Every name `a^i` of the point at path position `pos`.
    pub fn names(&self, pos: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            let start = self.run_start(i);
            let len = self.n[i - 1];
            if pos >= start && pos < start + len {
                let off = pos - start;
                out.push((if i % 2 == 1 { off + 1 } else { len - off }, i));
            }
        }
        out
    }

    /// Path position of a point.
    pub fn position(&self, x: usize) -> usize {
        self.path.iter().position(|&p| p == x).expect("point lies on the accordion")
    }

    /// Points of run `i` (1-based).
    pub fn run_points(&self, i: usize) -> PointSet {
        let start = self.run_start(i);
        PointSet::from_points(self.path[start..start + self.n[i - 1]].iter().copied())
    }
}

/// Walks the Hasse path of a connected space; `None` unless it is a path.
fn hasse_path(s: &Space, y: PointSet) -> Option<Vec<usize>> {
    let nb = |v: usize| -> Vec<usize> { s.hasse_neighbours(v).into_iter().filter(|&w| y.contains(w)).collect() };
    let k = y.len();
    if k == 0 || !s.is_connected(y) {
        return None;
    }
    if k == 1 {
        return Some(vec![y.min_point().unwrap()]);
    }
    let edges: usize = y.iter().map(|v| nb(v).len()).sum::<usize>() / 2;
    if edges != k - 1 || y.iter().any(|v| nb(v).len() > 2) {
        return None;
    }
    let start = y.iter().find(|&v| nb(v).len() == 1)?;
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while path.len() < k {
        let next = nb(cur).into_iter().find(|&w| w != prev)?;
        path.push(next);
        prev = cur;
        cur = next;
    }
    Some(path)
}

fn runs_along(s: &Space, path: &[usize]) -> Vec<usize> {
    if path.len() == 1 {
        return vec![1, 1];
    }
    let dirs: Vec<bool> = path.windows(2).map(|w| s.lt(w[0], w[1])).collect();
    let mut runs = Vec::new();
    if !dirs[0] {
        runs.push(1);
    }
    let mut len = 1;
    for j in 1..dirs.len() {
        if dirs[j] == dirs[j - 1] {
            len += 1;
        } else {
            runs.push(len + 1);
            len = 1;
        }
    }
    runs.push(len + 1);
    if runs.len() % 2 == 1 {
        runs.push(1);
    }
    runs
}

/// Accordion form of the connected locally closed subset `y`, if its Hasse
/// diagram is a path. Of the two orientations the one with the
/// lexicographically greatest run list is reported (ties: the path starting
/// at the smaller point index).
pub fn accordion_form_of(s: &Space, y: PointSet) -> Option<AccordionForm> {
    let path = hasse_path(s, y)?;
    let rev: Vec<usize> = path.iter().rev().copied().collect();
    let a = runs_along(s, &path);
    let b = runs_along(s, &rev);
    let (n, path) = match a.cmp(&b) {
        std::cmp::Ordering::Greater => (a, path),
        std::cmp::Ordering::Less => (b, rev),
        std::cmp::Ordering::Equal => {
            if path[0] <= rev[0] {
                (a, path)
            } else {
                (b, rev)
            }
        }
    };
    Some(AccordionForm { m: n.len(), n, path })
}

/// `Some(form)` iff the Hasse diagram of the connected space `s` is a path.
pub fn is_type_a(s: &Space) -> Result<Option<AccordionForm>> {
    if !s.is_connected(s.all()) {
        return Err(Error::NotConnected);
    }
    Ok(accordion_form_of(s, s.all()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    SubgraphX1,
    SubgraphX2,
    RetractX3,
    RetractX4,
    RetractS,
    RetractCn,
}

/// Certificate that UCT fails.
///
/// `embedding[j]` is the point of the ambient space corresponding to point
/// `j` of `model`. Retraction kinds add a locally closed `domain` containing
/// the image and a monotone `retraction` from `domain` onto the model (listed
/// as `(ambient point, model point)`) with `retraction ∘ embedding = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub model: Space,
    pub embedding: Vec<usize>,
    pub domain: PointSet,
    pub retraction: Option<Vec<(usize, usize)>>,
}

impl Witness {
    pub fn image(&self) -> PointSet {
        PointSet::from_points(self.embedding.iter().copied())
    }

    /// The pair `(f, g)` as maps between the domain subspace and the model.
    pub fn maps(&self, s: &Space) -> Option<(MonotoneMap, MonotoneMap)> {
        let retraction = self.retraction.as_ref()?;
        let dom = s.subspace(self.domain);
        let local: Vec<usize> = self.domain.iter().collect();
        let idx = |x: usize| local.iter().position(|&p| p == x);
        let mut f = vec![usize::MAX; local.len()];
        for &(x, t) in retraction {
            f[idx(x)?] = t;
        }
        if f.contains(&usize::MAX) {
            return None;
        }
        let g = self.embedding.iter().map(|&x| idx(x)).collect::<Option<Vec<_>>>()?;
        let f = MonotoneMap::new(dom.clone(), self.model.clone(), f).ok()?;
        let g = MonotoneMap::new(self.model.clone(), dom, g).ok()?;
        Some((f, g))
    }
}

/// Verdict of the classification.
#[derive(Clone, Debug)]
pub struct UctVerdict {
    pub holds: bool,
    pub components: Vec<(PointSet, AccordionForm)>,
    /// Failing component and its witness when `holds` is false.
    pub witness: Option<(PointSet, Witness)>,
}

pub fn classify_uct(s: &Space) -> Result<UctVerdict> {
    let mut components = Vec::new();
    for c in s.components(s.all()) {
        match accordion_form_of(s, c) {
            Some(form) => components.push((c, form)),
            None => {
                let w = witness_in(s, c)?;
                return Ok(UctVerdict { holds: false, components: Vec::new(), witness: Some((c, w)) });
            }
        }
    }
    Ok(UctVerdict { holds: true, components, witness: None })
}

/// Witness for a connected space that is not an accordion.
pub fn find_witness(s: &Space) -> Result<Witness> {
    if !s.is_connected(s.all()) {
        return Err(Error::NotConnected);
    }
    witness_in(s, s.all())
}

fn witness_in(s: &Space, comp: PointSet) -> Result<Witness> {
    if accordion_form_of(s, comp).is_some() {
        return Err(Error::IsTypeA);
    }
    let nb = |v: usize| -> Vec<usize> { s.hasse_neighbours(v).into_iter().filter(|&w| comp.contains(w)).collect() };
    if comp.iter().any(|v| nb(v).len() >= 3) {
        return star_witness(s, comp);
    }
    cycle_witness(s, comp)
}

/// Points above (`true`) or below `v` adjacent in the Hasse diagram.
fn covers(s: &Space, comp: PointSet, v: usize, above: bool) -> Vec<usize> {
    s.hasse_neighbours(v).into_iter().filter(|&w| comp.contains(w) && s.lt(v, w) == above).collect()
}

fn star_witness(s: &Space, comp: PointSet) -> Result<Witness> {
    // model point order is 1, 2, 3, 4
    for kind in [WitnessKind::SubgraphX1, WitnessKind::SubgraphX2, WitnessKind::RetractX3, WitnessKind::RetractX4] {
        for v in comp.iter() {
            let up = covers(s, comp, v, true);
            let down = covers(s, comp, v, false);
            let w = match kind {
                WitnessKind::SubgraphX1 if up.len() >= 3 => {
                    Witness {
                        kind,
                        model: builtin::x1(),
                        embedding: vec![up[0], up[1], up[2], v],
                        domain: PointSet::EMPTY,
                        retraction: None,
                    }
                }
                WitnessKind::SubgraphX2 if down.len() >= 3 => Witness {
                    kind,
                    model: builtin::x2(),
                    embedding: vec![down[0], down[1], down[2], v],
                    domain: PointSet::EMPTY,
                    retraction: None,
                },
                WitnessKind::RetractX3 if up.len() >= 2 && !down.is_empty() => {
                    retract_star(s, kind, builtin::x3(), vec![up[0], up[1], v, down[0]])
                }
                WitnessKind::RetractX4 if down.len() >= 2 && !up.is_empty() => {
                    retract_star(s, kind, builtin::x4(), vec![down[0], down[1], v, up[0]])
                }
                _ => continue,
            };
            let w = if w.retraction.is_none() { Witness { domain: w.image(), ..w } } else { w };
            if witness_check(s, &w) {
                return Ok(w);
            }
        }
    }
    Err(Error::NoForbiddenSubgraph(comp.iter().find(|&v| s.hasse_neighbours(v).len() >= 3).unwrap_or(0)))
}

/// Retraction of `LC(image)` onto the image, collapsing the rest to the
/// model point `3`.
fn retract_star(s: &Space, kind: WitnessKind, model: Space, embedding: Vec<usize>) -> Witness {
    let image = PointSet::from_points(embedding.iter().copied());
    let domain = s.lc_hull(image);
    let retraction = domain
        .iter()
        .map(|x| (x, embedding.iter().position(|&e| e == x).unwrap_or(2)))
        .collect();
    Witness { kind, model, embedding, domain, retraction: Some(retraction) }
}

/// All degrees are 2: the Hasse diagram is an undirected cycle.
fn cycle_witness(s: &Space, comp: PointSet) -> Result<Witness> {
    let sources: Vec<usize> = comp.iter().filter(|&v| covers(s, comp, v, false).len() == 2).collect();
    let a0 = sources[0];
    // walk the cycle starting at the least source, first towards its
    // larger-index neighbour
    let mut cycle = vec![a0];
    let mut prev = a0;
    let mut cur = *s.hasse_neighbours(a0).iter().filter(|&&w| comp.contains(w)).max().unwrap();
    while cur != a0 {
        cycle.push(cur);
        let next = s.hasse_neighbours(cur).into_iter().find(|&w| comp.contains(w) && w != prev).unwrap();
        prev = cur;
        cur = next;
    }
    if sources.len() == 1 {
        let a = a0;
        let b = comp.iter().find(|&v| covers(s, comp, v, true).len() == 2).unwrap();
        let bpos = cycle.iter().position(|&x| x == b).unwrap();
        let mut rho: Vec<usize> = cycle[1..bpos].to_vec();
        let mut sigma: Vec<usize> = cycle[bpos + 1..].iter().rev().copied().collect();
        if sigma[0] < rho[0] {
            std::mem::swap(&mut rho, &mut sigma);
        }
        let mut retraction = vec![(a, 0), (b, 3)];
        retraction.extend(rho.iter().map(|&x| (x, 1)));
        retraction.extend(sigma.iter().map(|&x| (x, 2)));
        retraction.sort_unstable();
        return Ok(Witness {
            kind: WitnessKind::RetractS,
            model: builtin::pseudo_square(),
            embedding: vec![a, rho[0], sigma[0], b],
            domain: comp,
            retraction: Some(retraction),
        });
    }
    // sources a_k ↦ 2^k, the sink after a_k ↦ 1^{k+1}, path interiors onto
    // the sink they descend to
    let n = sources.len();
    let model = builtin::pseudocircle(n)?;
    let mut embedding = vec![usize::MAX; 2 * n];
    let mut retraction = Vec::with_capacity(cycle.len());
    let mut k = 0usize;
    let mut pending: Vec<usize> = Vec::new();
    let len = cycle.len();
    for (idx, &x) in cycle.iter().enumerate() {
        let is_source = covers(s, comp, x, false).len() == 2;
        let is_sink = covers(s, comp, x, true).len() == 2;
        if is_source {
            if idx > 0 {
                k += 1;
            }
            embedding[2 * k + 1] = x;
            retraction.push((x, 2 * k + 1));
        } else if is_sink {
            let target = 2 * ((k + 1) % n);
            embedding[target] = x;
            retraction.push((x, target));
            for p in pending.drain(..) {
                retraction.push((p, target));
            }
        } else {
            // interior: its sink is the next sink when descending, the
            // previous one when ascending; the next point decides
            let next = cycle[(idx + 1) % len];
            if s.lt(next, x) {
                pending.push(x);
            } else {
                retraction.push((x, 2 * ((k + 1) % n)));
            }
        }
    }
    retraction.sort_unstable();
    Ok(Witness { kind: WitnessKind::RetractCn, model, embedding, domain: comp, retraction: Some(retraction) })
}

/// Independent check of a witness: the domain is locally closed; subgraph
/// witnesses embed the model as a tight locally closed subspace;
/// retraction witnesses consist of monotone maps with `f ∘ g = id`.
pub fn witness_check(s: &Space, w: &Witness) -> bool {
    let k = w.model.len();
    if w.embedding.len() != k || w.embedding.iter().any(|&x| x >= s.len()) {
        return false;
    }
    let image = w.image();
    if image.len() != k {
        return false;
    }
    match w.retraction {
        None => {
            let order_iso = (0..k).all(|i| (0..k).all(|j| w.model.leq(i, j) == s.leq(w.embedding[i], w.embedding[j])));
            order_iso && s.is_locally_closed(image) && s.is_tight(image)
        }
        Some(_) => {
            if !s.is_locally_closed(w.domain) || !image.is_subset(w.domain) {
                return false;
            }
            let Some((f, g)) = w.maps(s) else { return false };
            f.is_monotone() && g.is_monotone() && (0..k).all(|j| f.apply(g.apply(j)) == j)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w4_form() {
        let w = builtin::accordion(&[3, 2]).unwrap();
        let f = is_type_a(&w).unwrap().unwrap();
        assert_eq!((f.m, f.n.clone()), (2, vec![3, 2]));
        assert_eq!(f.point(3, 1), f.point(2, 2));
        assert_eq!(f.point(1, 2), 3);
    }

    #[test]
    fn chain_form() {
        let o = builtin::chain(5).unwrap();
        let f = is_type_a(&o).unwrap().unwrap();
        assert_eq!(f.n, vec![5, 1]);
        assert_eq!(f.path, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn point_form() {
        let p = builtin::chain(1).unwrap();
        assert_eq!(is_type_a(&p).unwrap().unwrap().n, vec![1, 1]);
    }
}
