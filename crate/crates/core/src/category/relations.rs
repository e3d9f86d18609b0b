use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use super::Arrow;
use crate::poset::{PointSet, Space};

/// A ℤ-linear combination of generator paths `source → target` that vanishes
/// in `NT*(X)`. Paths list generator indices in order of application.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    pub source: PointSet,
    pub target: PointSet,
    pub terms: Vec<(i64, Vec<usize>)>,
}

type Lin = BTreeMap<Vec<usize>, i64>;

/// A morphism between possibly disconnected locally closed sets, written as a
/// matrix over their connected components.
struct CompMorph {
    src: Vec<PointSet>,
    tgt: Vec<PointSet>,
    /// `entries[t][s]` is the component `src[s] → tgt[t]`.
    entries: Vec<Vec<Lin>>,
}

struct Builder<'a> {
    s: &'a Space,
    index: HashMap<Arrow, usize>,
    components: RefCell<HashMap<PointSet, Rc<Vec<PointSet>>>>,
    opens: RefCell<HashMap<PointSet, Rc<Vec<PointSet>>>>,
}

impl Builder<'_> {
    fn generator(&self, a: Arrow) -> Lin {
        let g = *self
            .index
            .get(&a)
            .unwrap_or_else(|| panic!("missing generator {}", a.name(self.s)));
        BTreeMap::from([(vec![g], 1)])
    }

    fn components(&self, y: PointSet) -> Rc<Vec<PointSet>> {
        self.components.borrow_mut().entry(y).or_insert_with(|| Rc::new(self.s.components(y))).clone()
    }

    fn opens(&self, y: PointSet) -> Rc<Vec<PointSet>> {
        self.opens.borrow_mut().entry(y).or_insert_with(|| Rc::new(self.s.relatively_open_subsets(y))).clone()
    }

    fn matrix(&self, src: PointSet, tgt: PointSet, entry: impl Fn(PointSet, PointSet) -> Lin) -> CompMorph {
        let src = self.components(src).to_vec();
        let tgt = self.components(tgt).to_vec();
        let entries = tgt.iter().map(|&t| src.iter().map(|&a| entry(a, t)).collect()).collect();
        CompMorph { src, tgt, entries }
    }

    fn ext(&self, u: PointSet, y: PointSet) -> CompMorph {
        self.matrix(u, y, |a, t| {
            if a == t {
                identity()
            } else if a.is_subset(t) {
                self.generator(Arrow::extension(a, t))
            } else {
                Lin::new()
            }
        })
    }

    fn res(&self, y: PointSet, c: PointSet) -> CompMorph {
        self.matrix(y, c, |a, t| {
            if a == t {
                identity()
            } else if t.is_subset(a) {
                self.generator(Arrow::restriction(a, t))
            } else {
                Lin::new()
            }
        })
    }

    fn bd(&self, c: PointSet, u: PointSet) -> CompMorph {
        self.matrix(c, u, |a, t| {
            if self.components(a.union(t)).len() == 1 {
                self.generator(Arrow::boundary(a, t))
            } else {
                Lin::new()
            }
        })
    }
}

fn identity() -> Lin {
    BTreeMap::from([(Vec::new(), 1)])
}

/// `g ∘ f`.
fn compose(g: &CompMorph, f: &CompMorph) -> CompMorph {
    debug_assert_eq!(f.tgt, g.src);
    let entries = (0..g.tgt.len())
        .map(|t| {
            (0..f.src.len())
                .map(|a| {
                    let mut out = Lin::new();
                    for b in 0..f.tgt.len() {
                        for (p, x) in &f.entries[b][a] {
                            for (q, y) in &g.entries[t][b] {
                                let mut path = p.clone();
                                path.extend_from_slice(q);
                                *out.entry(path).or_insert(0) += x * y;
                            }
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    CompMorph { src: f.src.clone(), tgt: g.tgt.clone(), entries }
}

struct Collector {
    out: BTreeSet<Relation>,
}

impl Collector {
    /// Record the componentwise relations `lhs = rhs`.
    fn equal(&mut self, lhs: &CompMorph, rhs: &CompMorph) {
        debug_assert_eq!(lhs.src, rhs.src);
        debug_assert_eq!(lhs.tgt, rhs.tgt);
        for (t, &target) in lhs.tgt.iter().enumerate() {
            for (a, &source) in lhs.src.iter().enumerate() {
                let mut sum = lhs.entries[t][a].clone();
                for (p, x) in &rhs.entries[t][a] {
                    *sum.entry(p.clone()).or_insert(0) -= x;
                }
                let mut terms: Vec<(i64, Vec<usize>)> =
                    sum.into_iter().filter(|&(_, c)| c != 0).map(|(p, c)| (c, p)).collect();
                if terms.is_empty() {
                    continue;
                }
                if terms[0].0 < 0 {
                    terms.iter_mut().for_each(|t| t.0 = -t.0);
                }
                self.out.insert(Relation { source, target, terms });
            }
        }
    }
}

/// The canonical relations among `generators`, instantiated for every
/// connected locally closed `Y` playing the role of the ambient set and
/// translated to connected components.
///
/// Families: nested extensions and restrictions, the exchange of a
/// restriction past an extension, the four boundary naturality relations
/// and the extension-morphism relation (which with `∅` or `Y` as one of
/// the open sets gives the vanishing of `i∘δ`, `δ∘r` and the vanishing
/// sums over components). Sorted and free of duplicates.
pub fn canonical_relations(s: &Space, generators: &[Arrow]) -> Vec<Relation> {
    let b = Builder {
        s,
        index: generators.iter().enumerate().map(|(i, &a)| (a, i)).collect(),
        components: RefCell::default(),
        opens: RefCell::default(),
    };
    let mut col = Collector { out: BTreeSet::new() };
    for &y in s.lc_connected() {
        let opens = b.opens(y);
        for &u in opens.iter() {
            let c = y.difference(u);
            // nested extensions and restrictions
            for &v in b.opens(u).iter() {
                col.equal(&compose(&b.ext(u, y), &b.ext(v, u)), &b.ext(v, y));
            }
            for &w in b.opens(c).iter() {
                let d = c.difference(w);
                col.equal(&compose(&b.res(c, d), &b.res(y, c)), &b.res(y, d));
            }
            // restriction past extension
            for &u2 in opens.iter() {
                let c2 = y.difference(u2);
                let k = u.intersection(c2);
                col.equal(&compose(&b.res(y, c2), &b.ext(u, y)), &compose(&b.ext(k, c2), &b.res(u, k)));
            }
            // boundary naturality for the pair (u, c)
            let delta = b.bd(c, u);
            for &c1 in b.opens(c).iter() {
                col.equal(&compose(&delta, &b.ext(c1, c)), &b.bd(c1, u));
            }
            for &o in b.opens(u).iter() {
                let u1 = u.difference(o);
                col.equal(&compose(&b.res(u, u1), &delta), &b.bd(c, u1));
            }
            for &w in opens.iter() {
                if c.is_subset(w) {
                    let u1 = u.intersection(w);
                    col.equal(&compose(&b.ext(u1, u), &b.bd(c, u1)), &delta);
                }
                if w.is_subset(c) {
                    let c1 = c.difference(w);
                    col.equal(&compose(&b.bd(c1, u), &b.res(c, c1)), &delta);
                }
                // morphism of extensions (u, c) → (w, y∖w)
                if u.is_subset(w) {
                    let c1 = y.difference(w);
                    col.equal(&compose(&b.ext(u, w), &delta), &compose(&b.bd(c1, w), &b.res(c, c1)));
                }
            }
        }
    }
    col.out.into_iter().collect()
}
