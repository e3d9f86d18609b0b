use serde::Serialize;

use super::{Arrow, ArrowKind, Morphism, TypeA};
use crate::builtin;
use crate::error::{Error, Result};
use crate::matrix::{smith, Matrix};
use crate::poset::Space;

/// Outcome of the checks run on [`CategoryIso`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub functorial: bool,
    pub identities: bool,
    pub bijective_on_homs: bool,
    pub nil_and_ss: bool,
    pub six_term: bool,
    pub failures: Vec<String>,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.functorial && self.identities && self.bijective_on_homs && self.nil_and_ss && self.six_term
    }
}

/// The isomorphism `Φ: NT*(W) → NT*(O_n)` obtained by aligning the long
/// chains, not grading-preserving.
#[derive(Clone, Debug)]
pub struct CategoryIso {
    pub source: TypeA,
    pub target: TypeA,
    /// Source object index to target object index.
    pub object_map: Vec<usize>,
    /// Indecomposable of the source, its image and the sign of the image.
    pub generator_map: Vec<(Arrow, Arrow, i64)>,
    /// `images[y][z]`: images of the basis of `NT*(y, z)`, even part first.
    images: Vec<Vec<Vec<Morphism>>>,
    pub report: IsoReport,
}

/// `−1` for a boundary `δ_C^U` with `C` before `U` in the total order.
fn sign(t: &TypeA, a: &Arrow) -> i64 {
    if a.kind == ArrowKind::Boundary && t.precedes(a.source, a.target) {
        -1
    } else {
        1
    }
}

pub fn phi_iso(w: &Space) -> Result<CategoryIso> {
    let source = TypeA::new(w)?;
    let target = TypeA::new(&builtin::chain(w.len())?)?;
    let cw = source.long_chain()?;
    let co = target.long_chain()?;
    if cw.len() != co.len() {
        return Err(Error::Malformed("long chains differ in length".into()));
    }
    let (sc, tc) = (&source.category, &target.category);
    let n_obj = sc.objects().len();
    let mut object_map = vec![usize::MAX; n_obj];
    let mut assign = |a: usize, b: usize| -> Result<()> {
        if object_map[a] != usize::MAX && object_map[a] != b {
            return Err(Error::Malformed("long chains do not induce an object map".into()));
        }
        object_map[a] = b;
        Ok(())
    };
    if cw.is_empty() {
        assign(0, 0)?;
    }
    let mut generator_map = Vec::with_capacity(cw.len());
    for (a, b) in cw.iter().zip(&co) {
        assign(sc.object_index(a.source).unwrap(), tc.object_index(b.source).unwrap())?;
        assign(sc.object_index(a.target).unwrap(), tc.object_index(b.target).unwrap())?;
        generator_map.push((*a, *b, sign(&source, a) * sign(&target, b)));
    }
    let mut seen = object_map.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != n_obj || object_map.contains(&usize::MAX) {
        return Err(Error::Malformed("object map is not a bijection".into()));
    }
    generator_map.sort();
    let mut iso = CategoryIso { source, target, object_map, generator_map, images: vec![], report: IsoReport::default() };
    iso.images = iso.basis_images()?;
    iso.report = iso.verify();
    Ok(iso)
}

impl CategoryIso {
    fn image_of_generator(&self, g: usize) -> Result<Morphism> {
        let (sc, tc) = (&self.source.category, &self.target.category);
        let a = sc.generators()[g];
        let k = self
            .generator_map
            .binary_search_by(|(x, _, _)| x.cmp(&a))
            .map_err(|_| Error::NotIndecomposable(a.name(sc.space())))?;
        let (_, b, s) = self.generator_map[k];
        let h = tc.generator_index(&b).expect("image is a generator");
        Ok(tc.scale(s, &tc.generator_morphism(h)))
    }

    fn basis_images(&self) -> Result<Vec<Vec<Vec<Morphism>>>> {
        let (sc, tc) = (&self.source.category, &self.target.category);
        let n = sc.objects().len();
        let mut out = vec![vec![vec![]; n]; n];
        for y in 0..n {
            for z in 0..n {
                for d in 0..2 {
                    for j in 0..sc.hom_dim(y, z, d) {
                        let mut acc = tc.zero(self.object_map[y], self.object_map[z]);
                        for (c, path) in sc.basis_paths(y, z, d, j) {
                            let mut v = tc.identity(self.object_map[y]);
                            for &g in path {
                                v = tc.compose(&self.image_of_generator(g)?, &v)?;
                            }
                            acc = tc.add(&acc, &tc.scale(*c, &v));
                        }
                        out[y][z].push(acc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Φ(f)`.
    pub fn apply(&self, f: &Morphism) -> Morphism {
        let tc = &self.target.category;
        let mut acc = tc.zero(self.object_map[f.source], self.object_map[f.target]);
        let coords = f.even.iter().chain(&f.odd);
        for (x, img) in coords.zip(&self.images[f.source][f.target]) {
            acc = tc.add(&acc, &tc.scale(*x, img));
        }
        acc
    }

    /// Matrix of `Φ` on `NT*(y, z)` in the concatenated even/odd bases.
    pub fn hom_matrix(&self, y: usize, z: usize) -> Matrix<i64> {
        let cols: Vec<Vec<i64>> =
            self.images[y][z].iter().map(|m| m.even.iter().chain(&m.odd).copied().collect()).collect();
        let tc = &self.target.category;
        let (a, b) = (self.object_map[y], self.object_map[z]);
        Matrix::from_columns(tc.hom_dim(a, b, 0) + tc.hom_dim(a, b, 1), &cols)
    }

    fn verify(&self) -> IsoReport {
        let (sc, tc) = (&self.source.category, &self.target.category);
        let name = |y: usize| sc.space().set_name(sc.object(y));
        let n = sc.objects().len();
        let mut r = IsoReport { functorial: true, identities: true, bijective_on_homs: true, nil_and_ss: true, six_term: true, failures: vec![] };
        for y in 0..n {
            if self.apply(&sc.identity(y)) != tc.identity(self.object_map[y]) {
                r.identities = false;
                r.failures.push(format!("identity of {}", name(y)));
            }
            for z in 0..n {
                let m = self.hom_matrix(y, z);
                let unimodular = m.rows() == m.cols() && smith(&m).diagonal().iter().all(|d| d.abs() == 1);
                if !unimodular {
                    r.bijective_on_homs = false;
                    r.failures.push(format!("hom {} -> {} not mapped bijectively", name(y), name(z)));
                }
                if (y == z) != (self.object_map[y] == self.object_map[z]) {
                    r.nil_and_ss = false;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let fs = sc.basis(x, y);
                if fs.is_empty() {
                    continue;
                }
                for z in 0..n {
                    for g in sc.basis(y, z) {
                        for f in &fs {
                            let lhs = self.apply(&sc.compose(&g, f).expect("composable"));
                            let rhs = tc.compose(&self.apply(&g), &self.apply(f)).expect("composable");
                            if lhs != rhs {
                                r.functorial = false;
                                r.failures.push(format!("composition {} -> {} -> {}", name(x), name(y), name(z)));
                            }
                        }
                    }
                }
            }
        }
        // six-term sequences with connected terms go to six-term sequences
        for &a in sc.generators() {
            if a.kind != ArrowKind::Extension {
                continue;
            }
            let cycle = [a, a.subsequent(), a.subsequent().subsequent()];
            if cycle.iter().any(|b| sc.generator_index(b).is_none()) {
                continue;
            }
            let images: Option<Vec<Arrow>> = cycle.iter().map(|b| self.image_arrow(b)).collect();
            let ok = images.is_some_and(|im| im[1] == im[0].subsequent() && im[2] == im[1].subsequent() && im[0] == im[2].subsequent());
            if !ok {
                r.six_term = false;
                r.failures.push(format!("six-term sequence of {}", a.name(sc.space())));
            }
        }
        r
    }

    /// The canonical generator `b` with `Φ(a) = ±b`, if there is one.
    pub fn image_arrow(&self, a: &Arrow) -> Option<Arrow> {
        let (sc, tc) = (&self.source.category, &self.target.category);
        let img = self.apply(&sc.generator_morphism(sc.generator_index(a)?));
        let neg = tc.scale(-1, &img);
        tc.generators().iter().copied().find(|b| {
            let m = tc.generator_morphism(tc.generator_index(b).unwrap());
            m.source == img.source && m.target == img.target && (m == img || m == neg)
        })
    }
}
