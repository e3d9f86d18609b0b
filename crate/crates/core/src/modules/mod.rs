//! Finitely generated modules over a presented category `NT*(X)`: additive,
//! grading preserving functors to ℤ/2-graded abelian groups.
//!
//! An entry is stored in normal form as a list of moduli (0 for a free
//! coordinate); each generating arrow acts by an integer matrix between
//! normal-form coordinates, swapping parity for boundary arrows.

mod pipeline;

use crate::category::{Arrow, ArrowKind, PresentedCategory};
use crate::classify::is_type_a;
use crate::complex::GradedAbelianGroup;
use crate::error::{Error, Result};
use crate::matrix::{kernel, span_contains, Matrix, Quotient};
use crate::poset::PointSet;

pub use pipeline::{counterexample_pipeline, verify_properties, PipelineReport, PipelineSummary, PropertyReport};

fn normalize_rows(m: &mut Matrix<i64>, moduli: &[i64]) {
    for (r, &d) in moduli.iter().enumerate() {
        if d != 0 {
            for c in 0..m.cols() {
                m[(r, c)] = m[(r, c)].rem_euclid(d);
            }
        }
    }
}

fn diag_columns(moduli: &[i64]) -> Vec<Vec<i64>> {
    let n = moduli.len();
    moduli
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d != 0)
        .map(|(i, &d)| {
            let mut c = vec![0; n];
            c[i] = d;
            c
        })
        .collect()
}

fn columns(m: &Matrix<i64>) -> Vec<Vec<i64>> {
    (0..m.cols()).map(|c| m.column(c)).collect()
}

/// Whether `v` lies in the subgroup generated by `gens` and the relations
/// `moduli` of the ambient coordinates.
fn in_span(gens: &[Vec<i64>], moduli: &[i64], v: &[i64]) -> bool {
    let n = moduli.len();
    let mut all = gens.to_vec();
    all.extend(diag_columns(moduli));
    span_contains(&Matrix::from_columns(n, &all), &Matrix::from_columns(n, &[v.to_vec()]))
}

/// Generators of `{x ∈ ℤ^a : m x ≡ 0 modulo target moduli}`.
fn kernel_mod(m: &Matrix<i64>, target: &[i64]) -> Vec<Vec<i64>> {
    let a = m.cols();
    let slack = diag_columns(target);
    let big = m.hcat(&Matrix::from_columns(m.rows(), &slack));
    let k = kernel(&big);
    (0..k.cols()).map(|c| k.column(c)[..a].to_vec()).collect()
}

/// Whether the homomorphism `m: ℤ^a/src → ℤ^b/tgt` is injective.
pub fn map_is_injective(m: &Matrix<i64>, src: &[i64], tgt: &[i64]) -> bool {
    kernel_mod(m, tgt).iter().all(|v| in_span(&[], src, v))
}

/// Exactness of `A --p--> B --q--> C` at `B`, for groups in normal form.
pub fn exact_at(p: &Matrix<i64>, q: &Matrix<i64>, mid: &[i64], out: &[i64]) -> bool {
    let qp = q.mul(p);
    if !(0..qp.cols()).all(|c| in_span(&[], out, &qp.column(c))) {
        return false;
    }
    let image = columns(p);
    kernel_mod(q, out).iter().all(|v| in_span(&image, mid, v))
}

/// Subgroup quotient `(ℤ^n / moduli) / ⟨gens⟩` with normal form.
fn quotient_of(moduli: &[i64], gens: &[Vec<i64>]) -> Quotient {
    let n = moduli.len();
    let mut rel = gens.to_vec();
    rel.extend(diag_columns(moduli));
    Quotient::new(n, &Matrix::from_columns(n, &rel))
}

/// A morphism between modules, one matrix per object and parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub components: Vec<[Matrix<i64>; 2]>,
}

impl ModuleMap {
    pub fn zero(a: &NTModule, b: &NTModule) -> Self {
        let components =
            (0..a.object_count()).map(|z| [0, 1].map(|d| Matrix::zeros(b.dim(z, d), a.dim(z, d)))).collect();
        ModuleMap { components }
    }

    pub fn identity(a: &NTModule) -> Self {
        let components = (0..a.object_count()).map(|z| [0, 1].map(|d| Matrix::identity(a.dim(z, d)))).collect();
        ModuleMap { components }
    }

    pub fn component(&self, z: usize, d: usize) -> &Matrix<i64> {
        &self.components[z][d]
    }

    /// `self ∘ other`, reduced modulo the moduli of `target`.
    pub fn after(&self, other: &ModuleMap, target: &NTModule) -> ModuleMap {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .enumerate()
            .map(|(z, (a, b))| {
                [0, 1].map(|d| {
                    let mut m = a[d].mul(&b[d]);
                    normalize_rows(&mut m, target.moduli(z, d));
                    m
                })
            })
            .collect();
        ModuleMap { components }
    }

    pub fn scale(&self, k: i64, target: &NTModule) -> ModuleMap {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(z, a)| {
                [0, 1].map(|d| {
                    let mut m = a[d].scale(&k);
                    normalize_rows(&mut m, target.moduli(z, d));
                    m
                })
            })
            .collect();
        ModuleMap { components }
    }

    pub fn add(&self, other: &ModuleMap, target: &NTModule) -> ModuleMap {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .enumerate()
            .map(|(z, (a, b))| {
                [0, 1].map(|d| {
                    let mut m = a[d].add(&b[d]);
                    normalize_rows(&mut m, target.moduli(z, d));
                    m
                })
            })
            .collect();
        ModuleMap { components }
    }

    /// Whether the map is zero as a homomorphism into `target`.
    pub fn is_zero(&self, target: &NTModule) -> bool {
        self.components.iter().enumerate().all(|(z, a)| {
            (0..2).all(|d| (0..a[d].cols()).all(|c| in_span(&[], target.moduli(z, d), &a[d].column(c))))
        })
    }

    /// Whether the map commutes with every generator action and respects
    /// the relations of the source entries.
    pub fn is_natural(&self, source: &NTModule, target: &NTModule) -> bool {
        let c = source.category();
        for (z, comp) in self.components.iter().enumerate() {
            for d in 0..2 {
                for col in diag_columns(source.moduli(z, d)) {
                    if !in_span(&[], target.moduli(z, d), &comp[d].mul_vec(&col)) {
                        return false;
                    }
                }
            }
        }
        for g in 0..c.generators().len() {
            let (w, z, dg) = source.ends(g);
            for e in 0..2 {
                let e2 = (e + dg) % 2;
                let lhs = target.action(g, e).mul(&self.components[w][e]);
                let rhs = self.components[z][e2].mul(source.action(g, e));
                let diff = lhs.sub(&rhs);
                if !(0..diff.cols()).all(|k| in_span(&[], target.moduli(z, e2), &diff.column(k))) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_injective(&self, source: &NTModule, target: &NTModule) -> bool {
        (0..source.object_count()).all(|z| {
            (0..2).all(|d| map_is_injective(&self.components[z][d], source.moduli(z, d), target.moduli(z, d)))
        })
    }

    pub fn is_surjective(&self, target: &NTModule) -> bool {
        (0..target.object_count()).all(|z| {
            (0..2).all(|d| {
                let img = columns(&self.components[z][d]);
                (0..target.dim(z, d)).all(|j| {
                    let mut v = vec![0; target.dim(z, d)];
                    v[j] = 1;
                    in_span(&img, target.moduli(z, d), &v)
                })
            })
        })
    }
}

/// An entry on a possibly disconnected locally closed set: the direct sum
/// of the entries on its connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedEntry {
    pub components: Vec<PointSet>,
    pub moduli: [Vec<i64>; 2],
    /// Start of each component's block, per parity.
    pub offsets: [Vec<usize>; 2],
}

impl ExtendedEntry {
    pub fn group(&self) -> GradedAbelianGroup {
        group_of(&self.moduli)
    }
}

fn group_of(m: &[Vec<i64>; 2]) -> GradedAbelianGroup {
    let free = |d: usize| m[d].iter().filter(|&&x| x == 0).count();
    let tors = |d: usize| m[d].iter().filter(|&&x| x != 0).map(|&x| x as u64).collect();
    GradedAbelianGroup { even_rank: free(0), even_torsion: tors(0), odd_rank: free(1), odd_torsion: tors(1) }.normalized()
}

/// First failure of exactness: the six-term sequence of `U ⊆ Y` is not
/// exact at `position` (0 = `M₀(U)`, 1 = `M₀(Y)`, 2 = `M₀(Y∖U)`, then the
/// same for degree 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactnessFailure {
    pub u: PointSet,
    pub y: PointSet,
    pub position: usize,
}

/// A module over `NT*(X)` with finitely generated entries.
#[derive(Clone, Debug)]
pub struct NTModule<'c> {
    cat: &'c PresentedCategory,
    moduli: Vec<[Vec<i64>; 2]>,
    act: Vec<[Matrix<i64>; 2]>,
}

impl<'c> NTModule<'c> {
    /// Builds a module from normal-form entries and generator actions. The
    /// actions must satisfy the relations; see [`NTModule::satisfies_relations`].
    pub fn new(cat: &'c PresentedCategory, moduli: Vec<[Vec<i64>; 2]>, act: Vec<[Matrix<i64>; 2]>) -> Result<Self> {
        if moduli.len() != cat.objects().len() || act.len() != cat.generators().len() {
            return Err(Error::Malformed("module data does not match the category".into()));
        }
        let mut m = NTModule { cat, moduli, act };
        for g in 0..m.act.len() {
            let (w, z, dg) = m.ends(g);
            for e in 0..2 {
                let e2 = (e + dg) % 2;
                let a = &m.act[g][e];
                if a.rows() != m.moduli[z][e2].len() || a.cols() != m.moduli[w][e].len() {
                    return Err(Error::Malformed(format!("action of generator {g} has wrong shape")));
                }
                let moduli = m.moduli[z][e2].clone();
                normalize_rows(&mut m.act[g][e], &moduli);
            }
        }
        Ok(m)
    }

    pub fn zero(cat: &'c PresentedCategory) -> Self {
        let n = cat.objects().len();
        let act = (0..cat.generators().len()).map(|_| [Matrix::zeros(0, 0), Matrix::zeros(0, 0)]).collect();
        NTModule { cat, moduli: vec![[vec![], vec![]]; n], act }
    }

    /// The free module `P_Y[s]`, `P_Y[s](Z)_d = NT_{d+s}(Y, Z)`.
    pub fn free(cat: &'c PresentedCategory, y: usize, shift: usize) -> Self {
        let n = cat.objects().len();
        let moduli = (0..n)
            .map(|z| [0, 1].map(|d| cat.hom_moduli(y, z, (d + shift) % 2).to_vec()))
            .collect();
        let act = (0..cat.generators().len()).map(|g| [0, 1].map(|d| cat.action(y, g, (d + shift) % 2).clone())).collect();
        NTModule { cat, moduli, act }
    }

    pub fn category(&self) -> &'c PresentedCategory {
        self.cat
    }

    pub fn object_count(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self, z: usize, d: usize) -> &[i64] {
        &self.moduli[z][d]
    }

    pub fn dim(&self, z: usize, d: usize) -> usize {
        self.moduli[z][d].len()
    }

    pub fn entry(&self, z: usize) -> GradedAbelianGroup {
        group_of(&self.moduli[z])
    }

    pub fn action(&self, g: usize, e: usize) -> &Matrix<i64> {
        &self.act[g][e]
    }

    fn ends(&self, g: usize) -> (usize, usize, usize) {
        let a = self.cat.generators()[g];
        (self.cat.object_index(a.source).unwrap(), self.cat.object_index(a.target).unwrap(), a.degree())
    }

    pub fn is_zero(&self) -> bool {
        self.moduli.iter().all(|m| m[0].is_empty() && m[1].is_empty())
    }

    pub fn is_entry_free(&self) -> bool {
        self.moduli.iter().all(|m| m.iter().flatten().all(|&x| x == 0))
    }

    /// Apply a generator path to an element of degree `e` at the path's start.
    fn apply_path(&self, path: &[usize], e: usize, v: &[i64]) -> (usize, Vec<i64>) {
        let mut e = e;
        let mut v = v.to_vec();
        for &g in path {
            let (_, z, dg) = self.ends(g);
            v = self.act[g][e].mul_vec(&v);
            e = (e + dg) % 2;
            for (x, &m) in v.iter_mut().zip(&self.moduli[z][e]) {
                if m != 0 {
                    *x = x.rem_euclid(m);
                }
            }
        }
        (e, v)
    }

    /// Whether every canonical relation acts by zero.
    pub fn satisfies_relations(&self) -> bool {
        for rel in self.cat.relations() {
            let v = self.cat.object_index(rel.source).unwrap();
            let z = self.cat.object_index(rel.target).unwrap();
            for e in 0..2 {
                let n = self.dim(v, e);
                for j in 0..n {
                    let mut unit = vec![0; n];
                    unit[j] = 1;
                    let mut sum: Option<(usize, Vec<i64>)> = None;
                    for (c, path) in &rel.terms {
                        let (d, w) = self.apply_path(path, e, &unit);
                        let w: Vec<i64> = w.iter().map(|x| c * x).collect();
                        sum = Some(match sum {
                            None => (d, w),
                            Some((d0, s)) => (d0, s.iter().zip(&w).map(|(a, b)| a + b).collect()),
                        });
                    }
                    if let Some((d, s)) = sum {
                        if !in_span(&[], &self.moduli[z][d], &s) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `⊕ parts`, with the injection offsets of each summand.
    pub fn direct_sum(cat: &'c PresentedCategory, parts: &[&NTModule<'c>]) -> (Self, Vec<Vec<[usize; 2]>>) {
        let n = cat.objects().len();
        let mut offsets = vec![vec![[0usize; 2]; n]; parts.len()];
        let mut moduli = vec![[vec![], vec![]]; n];
        for z in 0..n {
            for d in 0..2 {
                for (k, p) in parts.iter().enumerate() {
                    offsets[k][z][d] = moduli[z][d].len();
                    moduli[z][d].extend_from_slice(p.moduli(z, d));
                }
            }
        }
        let act = (0..cat.generators().len())
            .map(|g| {
                [0, 1].map(|e| {
                    let mut m = Matrix::zeros(0, 0);
                    for p in parts {
                        m = m.direct_sum(p.action(g, e));
                    }
                    m
                })
            })
            .collect();
        (NTModule { cat, moduli, act }, offsets)
    }

    /// The cokernel of `f: source → self` with the projection onto it.
    pub fn cokernel(&self, f: &ModuleMap) -> (NTModule<'c>, ModuleMap) {
        let n = self.object_count();
        let qs: Vec<[Quotient; 2]> =
            (0..n).map(|z| [0, 1].map(|d| quotient_of(self.moduli(z, d), &columns(f.component(z, d))))).collect();
        let moduli = qs.iter().map(|q| [q[0].moduli().to_vec(), q[1].moduli().to_vec()]).collect();
        let act = (0..self.cat.generators().len())
            .map(|g| {
                let (w, z, dg) = self.ends(g);
                [0, 1].map(|e| {
                    let e2 = (e + dg) % 2;
                    let mut m = qs[z][e2].reduce_matrix().mul(&self.act[g][e]).mul(qs[w][e].lift_matrix());
                    normalize_rows(&mut m, qs[z][e2].moduli());
                    m
                })
            })
            .collect();
        let proj = ModuleMap {
            components: qs
                .iter()
                .map(|q| {
                    [0, 1].map(|d| {
                        let mut m = q[d].reduce_matrix().clone();
                        normalize_rows(&mut m, q[d].moduli());
                        m
                    })
                })
                .collect(),
        };
        (NTModule { cat: self.cat, moduli, act }, proj)
    }

    /// `M / kM`.
    pub fn quotient_by_multiple(&self, k: i64) -> NTModule<'c> {
        self.cokernel(&ModuleMap::identity(self).scale(k, self)).0
    }

    /// Quotient of every entry by `NT_nil · M`, the sum of the images of all
    /// generator actions, together with that submodule's generators.
    pub fn ss_and_nil(&self) -> (Vec<[Vec<i64>; 2]>, Vec<[Vec<Vec<i64>>; 2]>) {
        let n = self.object_count();
        let mut nil: Vec<[Vec<Vec<i64>>; 2]> = vec![[vec![], vec![]]; n];
        for g in 0..self.cat.generators().len() {
            let (_, z, dg) = self.ends(g);
            for e in 0..2 {
                nil[z][(e + dg) % 2].extend(columns(&self.act[g][e]));
            }
        }
        let ss = (0..n)
            .map(|z| [0, 1].map(|d| quotient_of(self.moduli(z, d), &nil[z][d]).moduli().to_vec()))
            .collect();
        (ss, nil)
    }

    /// Entries of `M / NT_nil · M`.
    pub fn ss_quotient(&self) -> Vec<GradedAbelianGroup> {
        self.ss_and_nil().0.iter().map(group_of).collect()
    }

    pub fn extend_to_nonconnected(&self, z: PointSet) -> ExtendedEntry {
        let s = self.cat.space();
        let components = s.components(z);
        let mut moduli = [vec![], vec![]];
        let mut offsets = [vec![], vec![]];
        for c in &components {
            let i = self.cat.object_index(*c).expect("component of a locally closed set is an object");
            for d in 0..2 {
                offsets[d].push(moduli[d].len());
                moduli[d].extend_from_slice(&self.moduli[i][d]);
            }
        }
        ExtendedEntry { components, moduli, offsets }
    }

    /// The canonical transformation `kind: source → target` between extended
    /// entries in degree `d`, assembled from its components.
    pub fn canonical_map(&self, kind: ArrowKind, source: PointSet, target: PointSet, d: usize) -> Matrix<i64> {
        let s = self.cat.space();
        let a = self.extend_to_nonconnected(source);
        let b = self.extend_to_nonconnected(target);
        let deg = usize::from(kind == ArrowKind::Boundary);
        let d2 = (d + deg) % 2;
        let mut m = Matrix::zeros(b.moduli[d2].len(), a.moduli[d].len());
        for (i, &x) in a.components.iter().enumerate() {
            for (j, &t) in b.components.iter().enumerate() {
                let block = if kind != ArrowKind::Boundary && x == t {
                    Some(Matrix::identity(self.moduli[self.cat.object_index(x).unwrap()][d].len()))
                } else {
                    let arrow = match kind {
                        ArrowKind::Extension if x.is_subset(t) => Some(Arrow::extension(x, t)),
                        ArrowKind::Restriction if t.is_subset(x) => Some(Arrow::restriction(x, t)),
                        ArrowKind::Boundary if s.is_connected(x.union(t)) => Some(Arrow::boundary(x, t)),
                        _ => None,
                    };
                    arrow.map(|ar| {
                        let g = self.cat.generator_index(&ar).expect("canonical transformation is a generator");
                        self.act[g][d].clone()
                    })
                };
                if let Some(block) = block {
                    let (r0, c0) = (b.offsets[d2][j], a.offsets[d][i]);
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m[(r0 + r, c0 + c)] = block[(r, c)];
                        }
                    }
                }
            }
        }
        m
    }

    /// Checks the six-term sequences of all pairs `U ⊆ Y` with `Y` locally
    /// closed and `U` relatively open, returning the first failure in
    /// canonical order.
    pub fn exactness_failure(&self) -> Option<ExactnessFailure> {
        let s = self.cat.space();
        for y in s.lc_subsets() {
            for u in s.relatively_open_subsets(y) {
                let c = y.difference(u);
                if u.is_empty() || c.is_empty() {
                    continue;
                }
                let sets = [u, y, c];
                let moduli: Vec<Vec<i64>> = (0..6)
                    .map(|p| self.extend_to_nonconnected(sets[p % 3]).moduli[p / 3].clone())
                    .collect();
                let maps: Vec<Matrix<i64>> = (0..6)
                    .map(|p| {
                        let d = p / 3;
                        match p % 3 {
                            0 => self.canonical_map(ArrowKind::Extension, u, y, d),
                            1 => self.canonical_map(ArrowKind::Restriction, y, c, d),
                            _ => self.canonical_map(ArrowKind::Boundary, c, u, d),
                        }
                    })
                    .collect();
                for p in 0..6 {
                    let prev = &maps[(p + 5) % 6];
                    let next = &maps[p];
                    if !exact_at(prev, next, &moduli[p], &moduli[(p + 1) % 6]) {
                        return Some(ExactnessFailure { u, y, position: p });
                    }
                }
            }
        }
        None
    }

    pub fn is_exact(&self) -> bool {
        self.exactness_failure().is_none()
    }

    /// Entry-free and exact; over a space of type (A) this characterises
    /// the projective modules.
    pub fn is_projective_type_a(&self) -> Result<bool> {
        let s = self.cat.space();
        for c in s.components(s.all()) {
            if is_type_a(&s.subspace(c))?.is_none() {
                return Err(Error::NotTypeA);
            }
        }
        Ok(self.is_entry_free() && self.is_exact())
    }

    /// The homomorphism `P_Y[d] → M` sending the identity to `x ∈ M(Y)_d`.
    pub fn yoneda_map(&self, y: usize, d: usize, x: &[i64]) -> ModuleMap {
        let c = self.cat;
        let n = self.object_count();
        let mut components: Vec<[Matrix<i64>; 2]> =
            (0..n).map(|z| [0, 1].map(|e| Matrix::zeros(self.dim(z, e), c.hom_dim(y, z, (e + d) % 2)))).collect();
        for z in 0..n {
            for b in c.basis(y, z) {
                // b has a single nonzero coordinate in one parity
                let (p, j) = if let Some(j) = b.even.iter().position(|&v| v != 0) { (0, j) } else { (1, b.odd.iter().position(|&v| v != 0).unwrap()) };
                let mut acc: Option<(usize, Vec<i64>)> = None;
                for (k, path) in c.basis_paths(y, z, p, j) {
                    let (e, v) = self.apply_path(path, d, x);
                    let v: Vec<i64> = v.iter().map(|t| k * t).collect();
                    acc = Some(match acc {
                        None => (e, v),
                        Some((e0, s)) => (e0, s.iter().zip(&v).map(|(a, b)| a + b).collect()),
                    });
                }
                let e = (p + d) % 2;
                let v = acc.map(|(_, v)| v).unwrap_or_else(|| vec![0; self.dim(z, e)]);
                let col = &mut components[z][e];
                for (r, val) in v.iter().enumerate() {
                    let m = self.moduli[z][e][r];
                    col[(r, j)] = if m != 0 { val.rem_euclid(m) } else { *val };
                }
            }
        }
        ModuleMap { components }
    }

    /// Pushforward `f_*(M) = M ∘ f*` along a continuous map `f: X → Y`.
    pub fn pushforward<'d>(&self, f: &crate::poset::MonotoneMap, target: &'d PresentedCategory) -> NTModule<'d> {
        let objs = target.objects();
        let ext: Vec<ExtendedEntry> = objs.iter().map(|&z| self.extend_to_nonconnected(f.preimage(z))).collect();
        let moduli = ext.iter().map(|e| e.moduli.clone()).collect();
        let act = target
            .generators()
            .iter()
            .enumerate()
            .map(|(g, a)| {
                let (w, z) = (target.object_index(a.source).unwrap(), target.object_index(a.target).unwrap());
                [0, 1].map(|e| {
                    let (ps, pt) = (f.preimage(objs[w]), f.preimage(objs[z]));
                    let dg = a.degree();
                    let rows = ext[z].moduli[(e + dg) % 2].len();
                    let cols = ext[w].moduli[e].len();
                    if rows == 0 || cols == 0 {
                        return Matrix::zeros(rows, cols);
                    }
                    let _ = g;
                    self.canonical_map(a.kind, ps, pt, e)
                })
            })
            .collect();
        NTModule::new(target, moduli, act).expect("pushforward has consistent shapes")
    }
}

/// A generating set of `Hom(a, b)` with the structure of the group.
#[derive(Clone, Debug)]
pub struct HomSpace {
    /// Normal-form generators.
    pub maps: Vec<ModuleMap>,
    /// Moduli of the generators (0 = infinite order).
    pub moduli: Vec<i64>,
}

impl HomSpace {
    pub fn rank(&self) -> usize {
        self.moduli.iter().filter(|&&m| m == 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.moduli.is_empty()
    }
}

/// `Hom(a, b)` by solving the commutation constraints for all generators.
pub fn module_hom_space(a: &NTModule, b: &NTModule) -> HomSpace {
    let c = a.category();
    let n = a.object_count();
    // variable layout: F[z][d] row-major
    let mut offset = vec![[0usize; 2]; n];
    let mut nx = 0;
    for z in 0..n {
        for d in 0..2 {
            offset[z][d] = nx;
            nx += b.dim(z, d) * a.dim(z, d);
        }
    }
    let var = |z: usize, d: usize, r: usize, col: usize| offset[z][d] + r * a.dim(z, d) + col;
    let mut rows: Vec<(Vec<(usize, i64)>, i64)> = Vec::new();
    for z in 0..n {
        for d in 0..2 {
            for (col, &am) in a.moduli(z, d).iter().enumerate() {
                if am == 0 {
                    continue;
                }
                for (r, &bm) in b.moduli(z, d).iter().enumerate() {
                    rows.push((vec![(var(z, d, r, col), am)], bm));
                }
            }
        }
    }
    for g in 0..c.generators().len() {
        let (w, z, dg) = a.ends(g);
        for e in 0..2 {
            let e2 = (e + dg) % 2;
            let (ba, aa) = (b.action(g, e), a.action(g, e));
            for r in 0..b.dim(z, e2) {
                for col in 0..a.dim(w, e) {
                    let mut terms = Vec::new();
                    for k in 0..b.dim(w, e) {
                        if ba[(r, k)] != 0 {
                            terms.push((var(w, e, k, col), ba[(r, k)]));
                        }
                    }
                    for k in 0..a.dim(z, e2) {
                        if aa[(k, col)] != 0 {
                            terms.push((var(z, e2, r, k), -aa[(k, col)]));
                        }
                    }
                    rows.push((terms, b.moduli(z, e2)[r]));
                }
            }
        }
    }
    let nslack = rows.iter().filter(|(_, m)| *m != 0).count();
    let mut big = Matrix::zeros(rows.len(), nx + nslack);
    let mut s = nx;
    for (i, (terms, m)) in rows.iter().enumerate() {
        for &(v, x) in terms {
            big[(i, v)] += x;
        }
        if *m != 0 {
            big[(i, s)] = *m;
            s += 1;
        }
    }
    let k = kernel(&big);
    let gens: Vec<Vec<i64>> = (0..k.cols()).map(|j| k.column(j)[..nx].to_vec()).collect();
    // maps that are zero because their values lie in the relations of b
    let mut trivial = Vec::new();
    for z in 0..n {
        for d in 0..2 {
            for (r, &bm) in b.moduli(z, d).iter().enumerate() {
                if bm == 0 {
                    continue;
                }
                for col in 0..a.dim(z, d) {
                    let mut v = vec![0; nx];
                    v[var(z, d, r, col)] = bm;
                    trivial.push(v);
                }
            }
        }
    }
    let p = gens.len();
    let mut cols = gens.clone();
    cols.extend(trivial.iter().cloned());
    let rel = kernel(&Matrix::from_columns(nx, &cols));
    let rel_cols: Vec<Vec<i64>> = (0..rel.cols()).map(|j| rel.column(j)[..p].to_vec()).collect();
    let q = Quotient::new(p, &Matrix::from_columns(p, &rel_cols));
    let gm = Matrix::from_columns(nx, &gens);
    let maps = (0..q.dim())
        .map(|i| {
            let x = gm.mul_vec(&q.lift_matrix().column(i));
            let components = (0..n)
                .map(|z| {
                    [0, 1].map(|d| {
                        let mut m = Matrix::zeros(b.dim(z, d), a.dim(z, d));
                        for r in 0..b.dim(z, d) {
                            for col in 0..a.dim(z, d) {
                                m[(r, col)] = x[var(z, d, r, col)];
                            }
                        }
                        normalize_rows(&mut m, b.moduli(z, d));
                        m
                    })
                })
                .collect();
            ModuleMap { components }
        })
        .collect();
    HomSpace { maps, moduli: q.moduli().to_vec() }
}

/// Certifies that an entry-free module is free by building the map
/// `⊕ P_Y[d] → M` from lifts of a basis of `M_ss` and checking it is an
/// isomorphism. Returns the summands `(Y, d)` on success.
pub fn certify_free(m: &NTModule) -> Option<Vec<(usize, usize)>> {
    let c = m.category();
    let n = m.object_count();
    let (_, nil) = m.ss_and_nil();
    let mut summands = Vec::new();
    let mut maps = Vec::new();
    for z in 0..n {
        for d in 0..2 {
            let q = quotient_of(m.moduli(z, d), &nil[z][d]);
            if q.moduli().iter().any(|&x| x != 0) {
                return None;
            }
            for i in 0..q.dim() {
                let x = q.lift_matrix().column(i);
                summands.push((z, d));
                maps.push(m.yoneda_map(z, d, &x));
            }
        }
    }
    let frees: Vec<NTModule> = summands.iter().map(|&(y, d)| NTModule::free(c, y, d)).collect();
    let refs: Vec<&NTModule> = frees.iter().collect();
    let (sum, _) = NTModule::direct_sum(c, &refs);
    let components: Vec<[Matrix<i64>; 2]> = (0..n)
        .map(|z| {
            [0, 1].map(|d| {
                let mut acc = Matrix::zeros(m.dim(z, d), 0);
                for f in &maps {
                    acc = acc.hcat(f.component(z, d));
                }
                acc
            })
        })
        .collect();
    let phi = ModuleMap { components };
    let iso = phi.is_natural(&sum, m) && phi.is_injective(&sum, m) && phi.is_surjective(m);
    iso.then_some(summands)
}

