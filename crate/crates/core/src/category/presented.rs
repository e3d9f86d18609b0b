use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::{canonical_generators, canonical_relations, Arrow, Relation};
use crate::classify::is_type_a;
use crate::complex::GradedAbelianGroup;
use crate::error::{Error, Result};
use crate::matrix::{solve, span_contains, Matrix, Quotient};
use crate::poset::{PointSet, Space};
use crate::builtin;

/// A morphism `source → target` in coordinates of the fixed hom bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub even: Vec<i64>,
    pub odd: Vec<i64>,
}

impl Morphism {
    pub fn is_zero(&self) -> bool {
        self.even.iter().chain(&self.odd).all(|&x| x == 0)
    }

    pub fn part(&self, d: usize) -> &[i64] {
        if d == 0 {
            &self.even
        } else {
            &self.odd
        }
    }

    fn part_mut(&mut self, d: usize) -> &mut Vec<i64> {
        if d == 0 {
            &mut self.even
        } else {
            &mut self.odd
        }
    }
}

type Combination = Vec<(i64, Vec<usize>)>;

/// The left module `Z ↦ NT*(Y, Z)` for one source `Y`.
#[derive(Clone, Debug)]
struct HomModule {
    /// `moduli[z][d]`: normal-form coordinates of `NT_d(Y, z)` (0 = free).
    moduli: Vec<[Vec<i64>; 2]>,
    /// `act[g][e]`: post-composition with generator `g` on degree-`e` elements.
    act: Vec<[Matrix<i64>; 2]>,
    identity: Vec<i64>,
    /// Path combinations representing each basis element.
    reps: Vec<[Vec<Combination>; 2]>,
    level: usize,
}

/// `NT*(X)` presented by canonical generators and relations, with hom groups
/// and composition computed from the presentation.
#[derive(Clone, Debug)]
pub struct PresentedCategory {
    space: Space,
    objects: Vec<PointSet>,
    index: HashMap<PointSet, usize>,
    generators: Vec<Arrow>,
    gen_index: HashMap<Arrow, usize>,
    /// `(source, target, degree)` of each generator.
    ends: Vec<(usize, usize, usize)>,
    relations: Vec<Relation>,
    homs: Vec<HomModule>,
    indecomposables: Vec<usize>,
}

/// Checks that every component is of type (A) or isomorphic to one of the
/// spaces `X₁, X₂, X₃, X₄, S, C₂`, then builds the presented category.
pub fn build_presented_category(s: &Space) -> Result<PresentedCategory> {
    check_supported(s)?;
    PresentedCategory::build_unchecked(s)
}

fn check_supported(s: &Space) -> Result<()> {
    let named = [
        ("X1", builtin::x1()),
        ("X2", builtin::x2()),
        ("X3", builtin::x3()),
        ("X4", builtin::x4()),
        ("S", builtin::pseudo_square()),
        ("C2", builtin::pseudocircle(2)?),
    ];
    for c in s.components(s.all()) {
        let sub = s.subspace(c);
        if is_type_a(&sub)?.is_some() {
            continue;
        }
        if !named.iter().any(|(_, m)| m.is_isomorphic(&sub)) {
            return Err(Error::UnsupportedSpace(format!(
                "component {} is neither of type (A) nor one of X1, X2, X3, X4, S, C2",
                s.set_name(c)
            )));
        }
    }
    Ok(())
}

/// One stage `P_Y / J^{ℓ+1} P_Y` of the filtration, per object and degree.
struct Cell {
    has_e: bool,
    ngens: usize,
    q: Quotient,
    /// Projection to the previous stage, previous coordinates × current.
    proj: Matrix<i64>,
}

struct Stage {
    cells: Vec<[Cell; 2]>,
    /// `offset[d][g]`: start of the block of generator `g` in the cell
    /// `(target(g), d)`.
    offset: [Vec<usize>; 2],
    act: Vec<[Matrix<i64>; 2]>,
}

impl Stage {
    fn dim(&self, z: usize, d: usize) -> usize {
        self.cells[z][d].q.dim()
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn normalize_columns(m: &mut Matrix<i64>, moduli: &[i64]) {
    for (r, &d) in moduli.iter().enumerate() {
        if d != 0 {
            for c in 0..m.cols() {
                m[(r, c)] = m[(r, c)].rem_euclid(d);
            }
        }
    }
}

fn reduce_vec(v: &mut [i64], moduli: &[i64]) {
    for (x, &d) in v.iter_mut().zip(moduli) {
        if d != 0 {
            *x = x.rem_euclid(d);
        }
    }
}

/// Columns of `[vs | diag(moduli)]`, the lattice a subgroup generated by
/// `vs` spans inside the coordinates.
fn with_torsion(vs: &[Vec<i64>], moduli: &[i64]) -> Matrix<i64> {
    let n = moduli.len();
    let mut cols: Vec<Vec<i64>> = vs.to_vec();
    for (i, &d) in moduli.iter().enumerate() {
        if d != 0 {
            let mut c = vec![0; n];
            c[i] = d;
            cols.push(c);
        }
    }
    Matrix::from_columns(n, &cols)
}

impl PresentedCategory {
    /// Builds the presentation without checking that the canonical relations
    /// are known to generate all relations of `NT*(s)`.
    pub fn build_unchecked(s: &Space) -> Result<Self> {
        let objects = s.lc_connected().to_vec();
        let index = objects.iter().enumerate().map(|(i, &y)| (y, i)).collect();
        let generators = canonical_generators(s);
        let gen_index = generators.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let relations = canonical_relations(s, &generators);
        let idx: &HashMap<PointSet, usize> = &index;
        let ends = generators.iter().map(|a| (idx[&a.source], idx[&a.target], a.degree())).collect();
        let mut c = PresentedCategory {
            space: s.clone(),
            objects,
            index,
            generators,
            gen_index,
            ends,
            relations,
            homs: vec![],
            indecomposables: vec![],
        };
        let cap = c.objects.len() + 2;
        c.homs = (0..c.objects.len()).map(|y| c.hom_module(y, cap)).collect::<Result<Vec<_>>>()?;
        c.indecomposables = c.compute_indecomposables();
        let all: Vec<usize> = (0..c.generators.len()).collect();
        for y in 0..c.objects.len() {
            let reps = c
                .representatives(y, &c.indecomposables)
                .or_else(|| c.representatives(y, &all))
                .ok_or_else(|| Error::Malformed("generator paths do not span a hom group".into()))?;
            c.homs[y].reps = reps;
        }
        log::debug!(
            "presented category: {} objects, {} generators, {} relations, max level {}",
            c.objects.len(),
            c.generators.len(),
            c.relations.len(),
            c.stabilisation_level()
        );
        Ok(c)
    }

    fn src(&self, g: usize) -> usize {
        self.ends[g].0
    }

    fn tgt(&self, g: usize) -> usize {
        self.ends[g].1
    }

    fn deg(&self, g: usize) -> usize {
        self.ends[g].2
    }

    fn first_stage(&self, y: usize) -> Stage {
        let n = self.objects.len();
        let cells = (0..n)
            .map(|z| {
                [0, 1].map(|d| {
                    let has_e = z == y && d == 0;
                    let ngens = usize::from(has_e);
                    Cell { has_e, ngens, q: Quotient::free(ngens), proj: Matrix::zeros(0, ngens) }
                })
            })
            .collect::<Vec<_>>();
        let offset = [vec![usize::from(false); self.generators.len()], vec![0; self.generators.len()]];
        let mut st = Stage { cells, offset, act: vec![] };
        st.act = self.stage_actions(&st);
        st
    }

    /// `act_ℓ(g) = reduce_ℓ(Z) ∘ inject_g ∘ proj_ℓ(W)`.
    fn stage_actions(&self, st: &Stage) -> Vec<[Matrix<i64>; 2]> {
        (0..self.generators.len())
            .map(|g| {
                let (w, z, dg) = (self.src(g), self.tgt(g), self.deg(g));
                [0, 1].map(|e| {
                    let d = (e + dg) % 2;
                    let from = &st.cells[w][e];
                    let to = &st.cells[z][d];
                    let off = st.offset[d][g];
                    let red = to.q.reduce_matrix();
                    let proj = &from.proj;
                    let mut m = Matrix::zeros(red.rows(), proj.cols());
                    for r in 0..red.rows() {
                        for k in 0..proj.rows() {
                            let a = red[(r, off + k)];
                            if a == 0 {
                                continue;
                            }
                            for c in 0..proj.cols() {
                                m[(r, c)] += a * proj[(k, c)];
                            }
                        }
                    }
                    normalize_columns(&mut m, to.q.moduli());
                    m
                })
            })
            .collect()
    }

    fn stage_path(&self, st: &Stage, path: &[usize], start: usize, mut e: usize, mut m: Matrix<i64>) -> Matrix<i64> {
        let mut at = start;
        for &h in path {
            debug_assert_eq!(self.src(h), at);
            m = st.act[h][e].mul(&m);
            e = (e + self.deg(h)) % 2;
            at = self.tgt(h);
            normalize_columns(&mut m, st.cells[at][e].q.moduli());
        }
        m
    }

    /// `by_target[z]` lists `(relation, source object, degree)` for relations ending at `z`.
    fn next_stage(&self, prev: &Stage, by_target: &[Vec<(usize, usize, usize)>], into: &[Vec<usize>]) -> Result<Stage> {
        let n = self.objects.len();
        let mut offset = [vec![0; self.generators.len()], vec![0; self.generators.len()]];
        let mut cells = Vec::with_capacity(n);
        for z in 0..n {
            let mut pair = Vec::with_capacity(2);
            for d in 0..2 {
                let pc = &prev.cells[z][d];
                let has_e = pc.has_e;
                let mut ngens = usize::from(has_e);
                let mut blocks = Vec::new();
                for &g in &into[z] {
                    let w = self.src(g);
                    let e = (d + 2 - self.deg(g)) % 2;
                    offset[d][g] = ngens;
                    blocks.push((g, w, e, ngens));
                    ngens += prev.dim(w, e);
                }
                let mut rels: Vec<Vec<i64>> = Vec::new();
                for &(_, w, e, off) in &blocks {
                    for (i, &m) in prev.cells[w][e].q.moduli().iter().enumerate() {
                        if m != 0 {
                            let mut c = vec![0; ngens];
                            c[off + i] = m;
                            rels.push(c);
                        }
                    }
                }
                for &(ri, v, rdeg) in &by_target[z] {
                    let rel = &self.relations[ri];
                    let p = (d + 2 - rdeg) % 2;
                    let k = prev.dim(v, p);
                    if k == 0 {
                        continue;
                    }
                    let mut block = vec![vec![0i64; ngens]; k];
                    for (coef, path) in &rel.terms {
                        let Some((&last, pre)) = path.split_last() else {
                            return Err(Error::Malformed("relation with an identity term".into()));
                        };
                        let val = match pre.split_first() {
                            None => Matrix::identity(k),
                            Some((&h, rest)) => {
                                let mut m = prev.act[h][p].clone();
                                normalize_columns(&mut m, prev.cells[self.tgt(h)][(p + self.deg(h)) % 2].q.moduli());
                                self.stage_path(prev, rest, self.tgt(h), (p + self.deg(h)) % 2, m)
                            }
                        };
                        let off = offset[d][last];
                        for r in 0..val.rows() {
                            for (c, col) in block.iter_mut().enumerate() {
                                col[off + r] += coef * val[(r, c)];
                            }
                        }
                    }
                    rels.extend(block);
                }
                let q = Quotient::from_relation_columns(ngens, rels);
                // projection to the previous stage
                let mut lower = Matrix::zeros(pc.ngens, ngens);
                if has_e {
                    lower[(0, 0)] = 1;
                }
                for &(g, w, e, off) in &blocks {
                    let pw = &prev.cells[w][e].proj;
                    let poff = prev.offset[d][g];
                    for r in 0..pw.rows() {
                        for c in 0..pw.cols() {
                            lower[(poff + r, off + c)] = pw[(r, c)];
                        }
                    }
                }
                let mut proj = pc.q.reduce_matrix().mul(&lower).mul(q.lift_matrix());
                normalize_columns(&mut proj, pc.q.moduli());
                pair.push(Cell { has_e, ngens, q, proj });
            }
            let odd = pair.pop().unwrap();
            let even = pair.pop().unwrap();
            cells.push([even, odd]);
        }
        let mut st = Stage { cells, offset, act: vec![] };
        st.act = self.stage_actions(&st);
        Ok(st)
    }

    fn hom_module(&self, y: usize, cap: usize) -> Result<HomModule> {
        let mut by_target = vec![Vec::new(); self.objects.len()];
        for (i, r) in self.relations.iter().enumerate() {
            let rdeg = r.terms[0].1.iter().map(|&g| self.deg(g)).sum::<usize>() % 2;
            by_target[self.index[&r.target]].push((i, self.index[&r.source], rdeg));
        }
        let mut into = vec![Vec::new(); self.objects.len()];
        for g in 0..self.generators.len() {
            into[self.tgt(g)].push(g);
        }
        let mut st = self.first_stage(y);
        let mut level = 0;
        let mut stable_since = None;
        loop {
            let next = self.next_stage(&st, &by_target, &into)?;
            level += 1;
            let same = (0..self.objects.len())
                .all(|z| (0..2).all(|d| next.cells[z][d].q.moduli() == st.cells[z][d].q.moduli()));
            st = next;
            match (same, stable_since) {
                (true, None) => stable_since = Some(level),
                (false, _) => stable_since = None,
                _ => {}
            }
            if let Some(l) = stable_since {
                if level >= l {
                    break;
                }
            }
            if level > cap + 2 {
                return Err(Error::NotStabilised(cap));
            }
        }
        let moduli: Vec<[Vec<i64>; 2]> =
            st.cells.iter().map(|c| [c[0].q.moduli().to_vec(), c[1].q.moduli().to_vec()]).collect();
        let identity = st.cells[y][0].q.reduce(&unit(st.cells[y][0].ngens, 0));
        Ok(HomModule { moduli, act: st.act, identity, reps: vec![], level: stable_since.unwrap_or(level) })
    }

    /// Express every basis element of `NT*(y, z)` as a combination of
    /// generator paths, found by a breadth-first search that skips paths
    /// whose value is already in the span of earlier ones.
    fn representatives(&self, y: usize, allowed: &[usize]) -> Option<Vec<[Vec<Combination>; 2]>> {
        let m = &self.homs[y];
        let n = self.objects.len();
        let mut found: Vec<[Vec<(Vec<i64>, Vec<usize>)>; 2]> = vec![[vec![], vec![]]; n];
        let mut queue = std::collections::VecDeque::new();
        if !m.identity.iter().all(|&x| x == 0) {
            found[y][0].push((m.identity.clone(), vec![]));
            queue.push_back((y, 0usize, m.identity.clone(), Vec::<usize>::new()));
        }
        let mut out_of = vec![Vec::new(); n];
        for &g in allowed {
            out_of[self.src(g)].push(g);
        }
        while let Some((w, e, v, path)) = queue.pop_front() {
            for &g in &out_of[w] {
                let z = self.tgt(g);
                let d = (e + self.deg(g)) % 2;
                let mut val = m.act[g][e].mul_vec(&v);
                reduce_vec(&mut val, &m.moduli[z][d]);
                if val.iter().all(|&x| x == 0) {
                    continue;
                }
                let vs: Vec<Vec<i64>> = found[z][d].iter().map(|(v, _)| v.clone()).collect();
                let span = with_torsion(&vs, &m.moduli[z][d]);
                if span.cols() > 0 && span_contains(&span, &Matrix::from_columns(val.len(), &[val.clone()])) {
                    continue;
                }
                let mut p = path.clone();
                p.push(g);
                found[z][d].push((val.clone(), p.clone()));
                queue.push_back((z, d, val, p));
            }
        }
        let mut out = Vec::with_capacity(n);
        for z in 0..n {
            let mut pair: [Vec<Combination>; 2] = [vec![], vec![]];
            for (d, slot) in pair.iter_mut().enumerate() {
                let moduli = &m.moduli[z][d];
                let vs: Vec<Vec<i64>> = found[z][d].iter().map(|(v, _)| v.clone()).collect();
                let span = with_torsion(&vs, moduli);
                for j in 0..moduli.len() {
                    let x = solve(&span, &unit(moduli.len(), j))?;
                    slot.push(
                        found[z][d].iter().zip(&x).filter(|(_, &c)| c != 0).map(|((_, p), &c)| (c, p.clone())).collect(),
                    );
                }
            }
            out.push(pair);
        }
        Some(out)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn objects(&self) -> &[PointSet] {
        &self.objects
    }

    pub fn object_index(&self, y: PointSet) -> Option<usize> {
        self.index.get(&y).copied()
    }

    pub fn object(&self, i: usize) -> PointSet {
        self.objects[i]
    }

    pub fn generators(&self) -> &[Arrow] {
        &self.generators
    }

    pub fn generator_index(&self, a: &Arrow) -> Option<usize> {
        self.gen_index.get(a).copied()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Largest filtration level at which some hom module became stable.
    pub fn stabilisation_level(&self) -> usize {
        self.homs.iter().map(|h| h.level).max().unwrap_or(0)
    }

    /// Normal-form moduli of `NT_d(y, z)`; 0 marks a free coordinate.
    pub fn hom_moduli(&self, y: usize, z: usize, d: usize) -> &[i64] {
        &self.homs[y].moduli[z][d]
    }

    pub fn hom_dim(&self, y: usize, z: usize, d: usize) -> usize {
        self.homs[y].moduli[z][d].len()
    }

    pub fn hom_group(&self, y: usize, z: usize) -> GradedAbelianGroup {
        let m = &self.homs[y].moduli[z];
        let free = |d: usize| m[d].iter().filter(|&&x| x == 0).count();
        let tors = |d: usize| m[d].iter().filter(|&&x| x != 0).map(|&x| x as u64).collect();
        GradedAbelianGroup { even_rank: free(0), even_torsion: tors(0), odd_rank: free(1), odd_torsion: tors(1) }
            .normalized()
    }

    pub fn hom_table(&self) -> Vec<Vec<GradedAbelianGroup>> {
        let n = self.objects.len();
        (0..n).map(|y| (0..n).map(|z| self.hom_group(y, z)).collect()).collect()
    }

    pub fn zero(&self, y: usize, z: usize) -> Morphism {
        Morphism { source: y, target: z, even: vec![0; self.hom_dim(y, z, 0)], odd: vec![0; self.hom_dim(y, z, 1)] }
    }

    pub fn identity(&self, y: usize) -> Morphism {
        let mut m = self.zero(y, y);
        m.even = self.homs[y].identity.clone();
        m
    }

    /// The basis of `NT*(y, z)`: even basis elements first, then odd ones.
    pub fn basis(&self, y: usize, z: usize) -> Vec<Morphism> {
        let mut out = Vec::new();
        for d in 0..2 {
            for j in 0..self.hom_dim(y, z, d) {
                let mut m = self.zero(y, z);
                m.part_mut(d)[j] = 1;
                out.push(m);
            }
        }
        out
    }

    /// Path combination representing basis element `j` of `NT_d(y, z)`.
    pub fn basis_paths(&self, y: usize, z: usize, d: usize, j: usize) -> &[(i64, Vec<usize>)] {
        &self.homs[y].reps[z][d][j]
    }

    /// Matrix of post-composition with generator `g` on `NT_e(y, source(g))`.
    pub fn action(&self, y: usize, g: usize, e: usize) -> &Matrix<i64> {
        &self.homs[y].act[g][e]
    }

    pub fn generator_morphism(&self, g: usize) -> Morphism {
        let y = self.src(g);
        self.apply_generator(g, &self.identity(y))
    }

    /// `g ∘ f` for a generator `g`.
    pub fn apply_generator(&self, g: usize, f: &Morphism) -> Morphism {
        assert_eq!(f.target, self.src(g), "generator not composable");
        let z = self.tgt(g);
        let mut out = self.zero(f.source, z);
        for e in 0..2 {
            if f.part(e).iter().all(|&x| x == 0) {
                continue;
            }
            let d = (e + self.deg(g)) % 2;
            let v = self.homs[f.source].act[g][e].mul_vec(f.part(e));
            for (o, x) in out.part_mut(d).iter_mut().zip(v) {
                *o += x;
            }
        }
        self.normalize(&mut out);
        out
    }

    /// Value of a generator path applied after `f`.
    pub fn apply_path(&self, path: &[usize], f: &Morphism) -> Morphism {
        path.iter().fold(f.clone(), |acc, &g| self.apply_generator(g, &acc))
    }

    fn normalize(&self, m: &mut Morphism) {
        let moduli = &self.homs[m.source].moduli[m.target];
        reduce_vec(&mut m.even, &moduli[0]);
        reduce_vec(&mut m.odd, &moduli[1]);
    }

    pub fn add(&self, a: &Morphism, b: &Morphism) -> Morphism {
        assert_eq!((a.source, a.target), (b.source, b.target));
        let mut out = a.clone();
        out.even.iter_mut().zip(&b.even).for_each(|(x, y)| *x += y);
        out.odd.iter_mut().zip(&b.odd).for_each(|(x, y)| *x += y);
        self.normalize(&mut out);
        out
    }

    pub fn scale(&self, k: i64, a: &Morphism) -> Morphism {
        let mut out = a.clone();
        out.even.iter_mut().chain(out.odd.iter_mut()).for_each(|x| *x *= k);
        self.normalize(&mut out);
        out
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if f.target != g.source {
            return Err(Error::ObjectMismatch(format!(
                "{} → {} then {} → {}",
                self.space.set_name(self.objects[f.source]),
                self.space.set_name(self.objects[f.target]),
                self.space.set_name(self.objects[g.source]),
                self.space.set_name(self.objects[g.target])
            )));
        }
        let mut out = self.zero(f.source, g.target);
        for d in 0..2 {
            for (j, &c) in g.part(d).iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (k, path) in self.basis_paths(g.source, g.target, d, j) {
                    let v = self.apply_path(path, f);
                    out = self.add(&out, &self.scale(c * k, &v));
                }
            }
        }
        Ok(out)
    }

    /// Generators that are indecomposable: a minimal choice, in generator
    /// order, whose classes span `J/J²` for every pair of objects.
    pub fn indecomposables(&self) -> &[usize] {
        &self.indecomposables
    }

    pub fn is_indecomposable(&self, g: usize) -> bool {
        self.indecomposables.binary_search(&g).is_ok()
    }

    fn compute_indecomposables(&self) -> Vec<usize> {
        let n = self.objects.len();
        let mut chosen = Vec::new();
        let mut into: Vec<Vec<usize>> = vec![Vec::new(); n];
        for g in 0..self.generators.len() {
            into[self.tgt(g)].push(g);
        }
        for y in 0..n {
            let h = &self.homs[y];
            // J(y, w): everything for w ≠ y, images of generators for w = y
            let radical = |w: usize, e: usize| -> Vec<Vec<i64>> {
                if w != y {
                    return (0..h.moduli[w][e].len()).map(|j| unit(h.moduli[w][e].len(), j)).collect();
                }
                let mut out = Vec::new();
                for &g in &into[y] {
                    let v = self.src(g);
                    let f = (e + 2 - self.deg(g)) % 2;
                    for j in 0..h.moduli[v][f].len() {
                        out.push(h.act[g][f].mul_vec(&unit(h.moduli[v][f].len(), j)));
                    }
                }
                out
            };
            let mut gens_out: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            for g in 0..self.generators.len() {
                if self.src(g) == y {
                    gens_out.entry((self.tgt(g), self.deg(g))).or_default().push(g);
                }
            }
            for ((z, d), gs) in gens_out {
                let mut span: Vec<Vec<i64>> = Vec::new();
                for &g in &into[z] {
                    let w = self.src(g);
                    let e = (d + 2 - self.deg(g)) % 2;
                    for x in radical(w, e) {
                        span.push(h.act[g][e].mul_vec(&x));
                    }
                }
                for g in gs {
                    let v = self.generator_morphism(g);
                    let col = Matrix::from_columns(v.part(d).len(), &[v.part(d).to_vec()]);
                    let m = with_torsion(&span, &h.moduli[z][d]);
                    if m.cols() > 0 && span_contains(&m, &col) {
                        continue;
                    }
                    if v.part(d).iter().all(|&x| x == 0) {
                        continue;
                    }
                    span.push(v.part(d).to_vec());
                    chosen.push(g);
                }
            }
        }
        chosen.sort_unstable();
        chosen
    }

    /// Name of a morphism's source and target.
    pub fn describe(&self, m: &Morphism) -> String {
        format!(
            "{} -> {} even {:?} odd {:?}",
            self.space.set_name(self.objects[m.source]),
            self.space.set_name(self.objects[m.target]),
            m.even,
            m.odd
        )
    }
}
