use std::collections::BTreeSet;

use super::{Arrow, ArrowKind, Morphism, PresentedCategory};
use crate::classify::{is_type_a, AccordionForm};
use crate::complex::GradedAbelianGroup;
use crate::error::{Error, Result};
use crate::poset::{PointSet, Space};

fn form_of(s: &Space) -> Result<AccordionForm> {
    if s.is_empty() {
        return Err(Error::NotTypeA);
    }
    match is_type_a(s) {
        Ok(Some(f)) => Ok(f),
        Ok(None) | Err(Error::NotConnected) => Err(Error::NotTypeA),
        Err(e) => Err(e),
    }
}

/// `NT*(Y, Z)` for a connected space of type (A), read off from the
/// position of `Y ∩ Z` in `Y` and `Z`.
pub fn hom_group_type_a(s: &Space, y: PointSet, z: PointSet) -> Result<GradedAbelianGroup> {
    form_of(s)?;
    for w in [y, z] {
        if !s.is_locally_closed(w) || !s.is_connected(w) {
            return Err(Error::NotLocallyClosed(s.set_name(w)));
        }
    }
    let meet = y.intersection(z);
    if !meet.is_empty() && s.is_relatively_closed(meet, y) && s.is_relatively_open(meet, z) {
        return Ok(GradedAbelianGroup::free(1, 0));
    }
    let two_parts = |w: PointSet| s.components(w).len() == 2;
    let odd = (s.is_locally_closed(y.union(z))
        && s.is_connected(y.union(z))
        && s.is_relatively_closed(y.difference(z), y.union(z))
        && meet != y
        && s.is_relatively_open(meet, y)
        && meet != z
        && s.is_relatively_closed(meet, z))
        || (z != y && z.is_subset(y) && s.is_relatively_open(z, y) && two_parts(y.difference(z)))
        || (y != z && y.is_subset(z) && s.is_relatively_closed(y, z) && two_parts(z.difference(y)));
    Ok(if odd { GradedAbelianGroup::free(0, 1) } else { GradedAbelianGroup::default() })
}

/// Path positions of the points `a^i` of an accordion, including the aliases
/// `1^0 = 1^1` and `1^{m+1} = 1^m`.
struct Names<'a> {
    form: &'a AccordionForm,
}

impl Names<'_> {
    fn m(&self) -> usize {
        self.form.m
    }

    /// Run length, with the virtual one-point runs `0` and `m + 1`.
    fn n(&self, i: usize) -> usize {
        if i == 0 || i > self.m() {
            1
        } else {
            self.form.n[i - 1]
        }
    }

    fn pos(&self, a: usize, i: usize) -> Option<usize> {
        let m = self.m();
        if a == 1 && i == 0 && m > 0 {
            return self.pos(1, 1);
        }
        if a == 1 && i == m + 1 {
            return self.pos(1, m);
        }
        if i == 0 || i > m || a == 0 || a > self.n(i) {
            return None;
        }
        let offset = if i % 2 == 1 { a - 1 } else { self.n(i) - a };
        Some(self.form.run_start(i) + offset)
    }

    fn interval(&self, x: usize, y: usize) -> Option<PointSet> {
        (x <= y).then(|| PointSet::from_points(self.form.path[x..=y].iter().copied()))
    }

    /// All `(b, j)` naming some point, each point once per name.
    fn all_names(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for j in 1..=self.m() {
            for b in 1..=self.n(j) {
                out.push((b, j, self.pos(b, j).unwrap()));
            }
        }
        out
    }
}

/// The indecomposable transformations of a connected space of type (A),
/// listed family by family in the accordion numbering and sorted.
pub fn indecomposables_type_a(s: &Space) -> Result<Vec<Arrow>> {
    let form = form_of(s)?;
    let w = Names { form: &form };
    let m = w.m();
    let names = w.all_names();
    let mut out = BTreeSet::new();
    let mut push = |kind: ArrowKind, from: Option<(usize, usize)>, to: Option<(usize, usize)>| {
        let (Some((a, b)), Some((c, d))) = (from, to) else { return };
        let (Some(src), Some(tgt)) = (w.interval(a, b), w.interval(c, d)) else { return };
        out.insert(match kind {
            ArrowKind::Extension => Arrow::extension(src, tgt),
            ArrowKind::Restriction => Arrow::restriction(src, tgt),
            ArrowKind::Boundary => Arrow::boundary(src, tgt),
        });
    };
    let pair = |x: Option<usize>, y: Option<usize>| x.zip(y);
    for i in 1..=m {
        let ni = w.n(i);
        for a in 1..=ni {
            let pa = w.pos(a, i);
            for &(_, _, pb) in &names {
                let pb = Some(pb);
                // (1), (5): moving the left end inside run i
                if i % 2 == 1 && a != 1 && a != ni && pa != pb {
                    push(ArrowKind::Extension, pair(w.pos(a + 1, i), pb), pair(pa, pb));
                }
                if i % 2 == 0 && a + 1 < ni {
                    push(ArrowKind::Restriction, pair(w.pos(a + 1, i), pb), pair(pa, pb));
                }
                // (3), (7): moving the right end inside run i
                if i % 2 == 0 && a != 1 && a != ni && pa != pb {
                    push(ArrowKind::Extension, pair(pb, w.pos(a + 1, i)), pair(pb, pa));
                }
                if i % 2 == 1 && a + 1 < ni {
                    push(ArrowKind::Restriction, pair(pb, w.pos(a + 1, i)), pair(pb, pa));
                }
            }
        }
        for a in 2..=ni {
            if i % 2 == 1 {
                // (9)
                push(ArrowKind::Boundary, pair(w.pos(1, i), w.pos(a - 1, i)), pair(w.pos(a, i), w.pos(ni, i)));
            } else {
                // (10)
                push(ArrowKind::Boundary, pair(w.pos(a - 1, i), w.pos(1, i)), pair(w.pos(ni, i), w.pos(a, i)));
            }
        }
    }
    for i in 0..=m + 1 {
        let ni = w.n(i);
        for &(_, _, pb) in &names {
            let pb = Some(pb);
            if i % 2 == 0 {
                // (2)
                if pb > w.pos(1, i + 1) {
                    push(ArrowKind::Extension, pair(w.pos(2, i + 1), pb), pair(w.pos(ni, i), pb));
                }
                // (6)
                if i >= 1 {
                    push(ArrowKind::Restriction, pair(w.pos(1, i - 1), pb), pair(w.pos(ni - 1, i), pb));
                }
            } else {
                // (4)
                if i >= 2 && pb < w.pos(1, i - 1) {
                    push(ArrowKind::Extension, pair(pb, w.pos(2, i - 1)), pair(pb, w.pos(ni, i)));
                }
                // (8)
                push(ArrowKind::Restriction, pair(pb, w.pos(1, i + 1)), pair(pb, w.pos(ni - 1, i)));
            }
        }
    }
    let out: Vec<Arrow> = out.into_iter().filter(|a| a.is_valid(s)).collect();
    Ok(out)
}

/// The `n + 1` singular subsets: the singletons `{1¹}`, `{1^m}`, `{a^i}` for
/// `a ∉ {1, n_i}` and the maximal totally ordered subsets. Sorted.
pub fn singular_subsets(s: &Space) -> Result<Vec<PointSet>> {
    let form = form_of(s)?;
    let w = Names { form: &form };
    let m = w.m();
    let mut out = BTreeSet::new();
    let single = |p: usize| PointSet::singleton(form.path[p]);
    out.insert(single(w.pos(1, 1).unwrap()));
    out.insert(single(w.pos(1, m).unwrap()));
    for i in 1..=m {
        for a in 2..w.n(i) {
            out.insert(single(w.pos(a, i).unwrap()));
        }
        out.insert(form.run_points(i));
    }
    Ok(out.into_iter().collect())
}

/// The transformation following `a` in its six-term exact sequence.
pub fn subsequent(a: &Arrow) -> Arrow {
    a.subsequent()
}

/// A connected space of type (A) with its presented category, indecomposable
/// transformations and singular subsets.
#[derive(Clone, Debug)]
pub struct TypeA {
    pub form: AccordionForm,
    pub category: PresentedCategory,
    indecomposables: Vec<Arrow>,
    singular: Vec<PointSet>,
}

impl TypeA {
    pub fn new(s: &Space) -> Result<Self> {
        let form = form_of(s)?;
        let category = PresentedCategory::build_unchecked(s)?;
        let mut indecomposables: Vec<Arrow> =
            category.indecomposables().iter().map(|&g| category.generators()[g]).collect();
        indecomposables.sort();
        let singular = singular_subsets(s)?;
        Ok(TypeA { form, category, indecomposables, singular })
    }

    pub fn space(&self) -> &Space {
        self.category.space()
    }

    pub fn indecomposables(&self) -> &[Arrow] {
        &self.indecomposables
    }

    pub fn singular_subsets(&self) -> &[PointSet] {
        &self.singular
    }

    pub fn is_singular(&self, y: PointSet) -> bool {
        self.singular.binary_search(&y).is_ok()
    }

    pub fn is_indecomposable(&self, a: &Arrow) -> bool {
        self.indecomposables.binary_search(a).is_ok()
    }

    pub fn arrows_out(&self, y: PointSet) -> Vec<Arrow> {
        self.indecomposables.iter().filter(|a| a.source == y).copied().collect()
    }

    pub fn arrows_in(&self, y: PointSet) -> Vec<Arrow> {
        self.indecomposables.iter().filter(|a| a.target == y).copied().collect()
    }

    pub fn morphism(&self, a: &Arrow) -> Morphism {
        let g = self.category.generator_index(a).expect("arrow is a canonical generator");
        self.category.generator_morphism(g)
    }

    /// Position of a point in the total order `≤` of the accordion.
    pub fn position(&self, x: usize) -> usize {
        self.form.position(x)
    }

    /// Whether every point of `a` precedes every point of `b` in `≤`.
    pub fn precedes(&self, a: PointSet, b: PointSet) -> bool {
        a.iter().all(|x| b.iter().all(|y| self.position(x) < self.position(y)))
    }

    /// Whether `η ∘ ν` equals `± β ∘ α` for indecomposables `α, β` through
    /// an object other than the target of `ν`.
    fn factors_otherwise(&self, nu: &Arrow, eta: &Arrow) -> bool {
        let c = &self.category;
        let prod = c.compose(&self.morphism(eta), &self.morphism(nu)).expect("composable");
        if prod.is_zero() {
            return true;
        }
        let neg = c.scale(-1, &prod);
        self.arrows_out(nu.source).iter().filter(|a| a.target != nu.target).any(|alpha| {
            self.arrows_in(eta.target).iter().filter(|b| b.source == alpha.target).any(|beta| {
                let q = c.compose(&self.morphism(beta), &self.morphism(alpha)).expect("composable");
                q == prod || q == neg
            })
        })
    }

    /// The successor `S(ν)` of an indecomposable transformation.
    pub fn successor(&self, nu: &Arrow) -> Result<Arrow> {
        if !self.is_indecomposable(nu) {
            return Err(Error::NotIndecomposable(nu.name(self.space())));
        }
        let out = self.arrows_out(nu.target);
        let candidates: Vec<Arrow> = if self.is_singular(nu.target) {
            out
        } else if self.is_singular(nu.source) {
            let next = nu.subsequent();
            out.into_iter().filter(|a| *a != next).collect()
        } else {
            out.into_iter().filter(|eta| !self.factors_otherwise(nu, eta)).collect()
        };
        match candidates.as_slice() {
            [a] => Ok(*a),
            _ => Err(Error::NotIndecomposable(format!(
                "{} has {} successor candidates",
                nu.name(self.space()),
                candidates.len()
            ))),
        }
    }

    /// The successor orbit starting at the arrow out of `{1¹}`.
    pub fn long_chain(&self) -> Result<Vec<Arrow>> {
        if self.indecomposables.is_empty() {
            return Ok(vec![]);
        }
        let start_set = PointSet::singleton(self.form.point(1, 1));
        let start = match self.arrows_out(start_set).as_slice() {
            [a] => *a,
            _ => return Err(Error::NotTypeA),
        };
        let mut chain = vec![start];
        let mut cur = start;
        loop {
            cur = self.successor(&cur)?;
            if cur == start {
                break;
            }
            if chain.len() > self.indecomposables.len() {
                return Err(Error::NotIndecomposable("successor orbit does not close".into()));
            }
            chain.push(cur);
        }
        Ok(chain)
    }

    /// The singular subsets in the order the long chain visits them.
    pub fn singular_stations(&self) -> Result<Vec<PointSet>> {
        Ok(self.long_chain()?.iter().map(|a| a.source).filter(|&y| self.is_singular(y)).collect())
    }
}

/// The successor of `nu` in the category of `s`.
pub fn successor(t: &TypeA, nu: &Arrow) -> Result<Arrow> {
    t.successor(nu)
}

pub fn long_chain(s: &Space) -> Result<Vec<Arrow>> {
    TypeA::new(s)?.long_chain()
}
