use serde::Serialize;

use super::{exact_at, module_hom_space, quotient_of, ModuleMap, NTModule};
use crate::category::{Morphism, PresentedCategory};
use crate::complex::GradedAbelianGroup;
use crate::error::{Error, Result};
use crate::matrix::{rank, Matrix};

/// Outcome of [`verify_properties`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    /// `NT_nil` is a nilpotent ideal complementing `NT_ss`.
    pub prop1: bool,
    /// All hom groups are torsion-free.
    pub prop2: bool,
    /// Smallest `L` with `NT_nil^L = 0`.
    pub nilpotency_index: usize,
}

fn morphism_vec(m: &Morphism) -> Vec<i64> {
    m.even.iter().chain(&m.odd).copied().collect()
}

fn from_vec(c: &PresentedCategory, y: usize, z: usize, v: &[i64]) -> Morphism {
    let e = c.hom_dim(y, z, 0);
    Morphism { source: y, target: z, even: v[..e].to_vec(), odd: v[e..].to_vec() }
}

/// Columns spanning a finite-index sublattice of the span of `vs`.
fn independent(vs: Vec<Vec<i64>>, dim: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for v in vs {
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let mut cand = out.clone();
        cand.push(v);
        if rank(&Matrix::from_columns(dim, &cand)) == cand.len() {
            out = cand;
        }
    }
    out
}

/// Checks that morphisms between distinct objects form a nilpotent ideal
/// complementing the endomorphisms, and that all hom groups are free.
pub fn verify_properties(c: &PresentedCategory) -> PropertyReport {
    let n = c.objects().len();
    let prop2 = (0..n).all(|y| (0..n).all(|z| (0..2).all(|d| c.hom_moduli(y, z, d).iter().all(|&m| m == 0))));
    let dim = |y: usize, z: usize| c.hom_dim(y, z, 0) + c.hom_dim(y, z, 1);
    // products of L morphisms between distinct objects, as lattices per (y, z)
    let mut layer: Vec<Vec<Vec<Vec<i64>>>> = (0..n)
        .map(|y| (0..n).map(|z| if y == z { vec![] } else { c.basis(y, z).iter().map(morphism_vec).collect() }).collect())
        .collect();
    let mut ideal = true;
    let mut index = 1;
    while layer.iter().flatten().any(|v| !v.is_empty()) {
        if index > n {
            ideal = false;
            break;
        }
        let mut next: Vec<Vec<Vec<Vec<i64>>>> = vec![vec![vec![]; n]; n];
        for y in 0..n {
            for w in 0..n {
                for f in &layer[y][w] {
                    let f = from_vec(c, y, w, f);
                    for z in (0..n).filter(|&z| z != w) {
                        for g in c.basis(w, z) {
                            let h = c.compose(&g, &f).expect("composable");
                            if !h.is_zero() {
                                next[y][z].push(morphism_vec(&h));
                            }
                        }
                    }
                }
            }
        }
        for y in 0..n {
            if !next[y][y].is_empty() {
                ideal = false;
            }
            for z in 0..n {
                let vs = std::mem::take(&mut next[y][z]);
                next[y][z] = independent(vs, dim(y, z));
            }
        }
        layer = next;
        index += 1;
    }
    PropertyReport { prop1: ideal, prop2, nilpotency_index: index }
}

/// The modules and checks of the length-two resolution construction for a
/// chosen object `Y`.
#[derive(Clone, Debug)]
pub struct PipelineReport<'c> {
    pub y: usize,
    pub k: i64,
    /// Summands `(Z, shift)` of `P⁰`, one per indecomposable arrow into `Y`.
    pub p0_summands: Vec<(usize, usize)>,
    pub p_y: NTModule<'c>,
    pub p0: NTModule<'c>,
    pub j: ModuleMap,
    pub m: NTModule<'c>,
    pub m_k: NTModule<'c>,
    pub j_injective: bool,
    pub m_entry_free: bool,
    pub m_exact: bool,
    pub hom_p0_py_rank: usize,
    pub hom_p0_py_zero: bool,
    /// `0 → P_Y → P_Y ⊕ P⁰ → P⁰` is exact with cokernel `M_k`.
    pub resolution_exact: bool,
    pub m_k_exact: bool,
    /// Order of `Ext²(M_k, P_Y)`, 0 if infinite.
    pub ext2_order: u64,
    pub ext2: Vec<i64>,
}

/// Serializable summary of a [`PipelineReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineSummary {
    pub y: String,
    pub k: i64,
    pub p0: Vec<String>,
    pub j_injective: bool,
    #[serde(rename = "M_entries")]
    pub m_entries: Vec<(String, String)>,
    #[serde(rename = "M_entry_free")]
    pub m_entry_free: bool,
    #[serde(rename = "M_exact")]
    pub m_exact: bool,
    #[serde(rename = "hom_P0_PY_rank")]
    pub hom_p0_py_rank: usize,
    pub resolution_exact: bool,
    pub ext2_order: u64,
}

impl PipelineReport<'_> {
    pub fn m_entry(&self, z: usize) -> GradedAbelianGroup {
        self.m.entry(z)
    }

    /// Rows of `j` at `z` in degree `d` belonging to each summand of `P⁰`.
    pub fn j_blocks(&self, z: usize, d: usize) -> Vec<Matrix<i64>> {
        let c = self.p0.category();
        let comp = self.j.component(z, d);
        let mut start = 0;
        self.p0_summands
            .iter()
            .map(|&(w, s)| {
                let len = c.hom_dim(w, z, (d + s) % 2);
                let rows: Vec<usize> = (start..start + len).collect();
                start += len;
                comp.select_rows(&rows)
            })
            .collect()
    }

    pub fn summary(&self) -> PipelineSummary {
        let c = self.m.category();
        let s = c.space();
        let shift = |d: usize| if d == 1 { "[1]" } else { "" };
        PipelineSummary {
            y: s.set_name(c.object(self.y)),
            k: self.k,
            p0: self.p0_summands.iter().map(|&(w, d)| format!("P{}{}", s.set_name(c.object(w)), shift(d))).collect(),
            j_injective: self.j_injective,
            m_entries: (0..c.objects().len()).map(|z| (s.set_name(c.object(z)), self.m.entry(z).to_string())).collect(),
            m_entry_free: self.m_entry_free,
            m_exact: self.m_exact,
            hom_p0_py_rank: self.hom_p0_py_rank,
            resolution_exact: self.resolution_exact,
            ext2_order: self.ext2_order,
        }
    }
}

fn stack(maps: &[ModuleMap], n: usize) -> ModuleMap {
    let components = (0..n)
        .map(|z| {
            [0, 1].map(|d| {
                let cols = maps[0].component(z, d).cols();
                maps.iter().fold(Matrix::zeros(0, cols), |acc, m| acc.vcat(m.component(z, d)))
            })
        })
        .collect();
    ModuleMap { components }
}

fn concat(maps: &[ModuleMap], n: usize) -> ModuleMap {
    let components = (0..n)
        .map(|z| {
            [0, 1].map(|d| {
                let rows = maps[0].component(z, d).rows();
                maps.iter().fold(Matrix::zeros(rows, 0), |acc, m| acc.hcat(m.component(z, d)))
            })
        })
        .collect();
    ModuleMap { components }
}

/// Builds `j: P_Y → P⁰` from the indecomposable arrows into `Y`, its
/// cokernel `M`, the quotient `M_k = M/kM` with its length-two resolution
/// and `Ext²(M_k, P_Y)`.
pub fn counterexample_pipeline(c: &PresentedCategory, y: usize, k: i64) -> Result<PipelineReport<'_>> {
    if k < 2 {
        return Err(Error::Malformed(format!("k must be at least 2, got {k}")));
    }
    if y >= c.objects().len() {
        return Err(Error::Malformed(format!("object index {y} out of range")));
    }
    let n = c.objects().len();
    let fail = |what: &str| Error::PipelinePreconditionFailed(what.to_string());
    let mut p0_summands = Vec::new();
    let mut parts = Vec::new();
    let mut js = Vec::new();
    for &g in c.indecomposables() {
        let a = c.generators()[g];
        if a.target != c.object(y) {
            continue;
        }
        let w = c.object_index(a.source).unwrap();
        let s = a.degree();
        let p = NTModule::free(c, w, s);
        let x = c.generator_morphism(g).part(s).to_vec();
        js.push(p.yoneda_map(y, 0, &x));
        p0_summands.push((w, s));
        parts.push(p);
    }
    if parts.is_empty() {
        return Err(fail("no indecomposable transformation ends at Y"));
    }
    let p_y = NTModule::free(c, y, 0);
    let refs: Vec<&NTModule> = parts.iter().collect();
    let (p0, _) = NTModule::direct_sum(c, &refs);
    let j = stack(&js, n);
    debug_assert!(j.is_natural(&p_y, &p0));
    let j_injective = j.is_injective(&p_y, &p0);
    if !j_injective {
        return Err(fail("the homomorphism j is not injective"));
    }
    let (m, _) = p0.cokernel(&j);
    let m_entry_free = m.is_entry_free();
    let m_exact = m.is_exact();
    if !m_entry_free || !m_exact {
        return Err(fail("the cokernel of j is not exact and entry-free"));
    }
    let hom = module_hom_space(&p0, &p_y);
    if !hom.is_zero() {
        return Err(fail("there is a non-zero homomorphism from P0 to P_Y"));
    }
    let m_k = m.quotient_by_multiple(k);
    let m_k_exact = m_k.is_exact();

    // 0 → P_Y --(−k, j)--> P_Y ⊕ P⁰ --(j, k)--> P⁰
    let (mid, _) = NTModule::direct_sum(c, &[&p_y, &p0]);
    let id_y = ModuleMap::identity(&p_y);
    let first = stack(&[id_y.scale(-k, &p_y), j.clone()], n);
    let second = concat(&[j.clone(), ModuleMap::identity(&p0).scale(k, &p0)], n);
    let mut resolution_exact = first.is_natural(&p_y, &mid)
        && second.is_natural(&mid, &p0)
        && first.is_injective(&p_y, &mid)
        && (0..n).all(|z| {
            (0..2).all(|d| exact_at(first.component(z, d), second.component(z, d), mid.moduli(z, d), p0.moduli(z, d)))
        });
    let (coker, _) = p0.cokernel(&second);
    resolution_exact &= (0..n).all(|z| coker.entry(z) == m_k.entry(z));

    // Ext² = Hom(P_Y, P_Y) / (−k, j)^* Hom(P_Y ⊕ P⁰, P_Y), via Yoneda at id_Y
    let id = c.identity(y).even;
    let mut rel: Vec<Vec<i64>> = (0..id.len()).map(|i| {
        let mut v = vec![0; id.len()];
        v[i] = -k;
        v
    }).collect();
    let j_id = j.component(y, 0).mul_vec(&id);
    for b in &hom.maps {
        rel.push(b.component(y, 0).mul_vec(&j_id));
    }
    let q = quotient_of(c.hom_moduli(y, y, 0), &rel);
    let ext2 = q.moduli().to_vec();
    let ext2_order = if ext2.contains(&0) { 0 } else { ext2.iter().map(|&m| m as u64).product() };
    let hom_p0_py_rank = hom.rank();
    Ok(PipelineReport {
        y,
        k,
        p0_summands,
        p_y,
        p0,
        j,
        m,
        m_k,
        j_injective,
        m_entry_free,
        m_exact,
        hom_p0_py_rank,
        hom_p0_py_zero: hom.is_zero(),
        resolution_exact,
        m_k_exact,
        ext2_order,
        ext2,
    })
}
