#![allow(dead_code)]

use std::collections::BTreeMap;

use accordion_core::category::PresentedCategory;
use accordion_core::modules::{ModuleMap, NTModule};
use accordion_core::Space;
use rand::Rng;

/// Every connected space with `n` points whose Hasse diagram is a path, one
/// per isomorphism class, from the `2^(n-1)` edge orientations of the path.
pub fn accordion_shapes(n: usize) -> Vec<Space> {
    let mut seen = BTreeMap::new();
    for mask in 0u32..(1 << (n - 1)) {
        let pairs: Vec<(usize, usize)> =
            (0..n - 1).map(|i| if mask >> i & 1 == 0 { (i, i + 1) } else { (i + 1, i) }).collect();
        let s = Space::from_relations(n, &pairs).unwrap();
        seen.entry(s.canonical_form()).or_insert(s);
    }
    seen.into_values().collect()
}

/// Random poset on `n` points: each pair `i < j` related with probability `p`.
pub fn random_space(rng: &mut impl Rng, n: usize, p: f64) -> Space {
    let mut pairs = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    Space::from_relations(n, &pairs).unwrap()
}

fn random_vector(rng: &mut impl Rng, moduli: &[i64]) -> Vec<i64> {
    moduli.iter().map(|&m| if m == 0 { rng.gen_range(-2..=2) } else { rng.gen_range(0..m) }).collect()
}

/// A direct sum of `k` shifted free modules, with its summands.
pub fn random_free<'c>(rng: &mut impl Rng, c: &'c PresentedCategory, k: usize) -> (NTModule<'c>, Vec<(usize, usize)>) {
    let n = c.objects().len();
    let summands: Vec<(usize, usize)> = (0..k).map(|_| (rng.gen_range(0..n), rng.gen_range(0..2))).collect();
    let frees: Vec<NTModule> = summands.iter().map(|&(y, d)| NTModule::free(c, y, d)).collect();
    let refs: Vec<&NTModule> = frees.iter().collect();
    (NTModule::direct_sum(c, &refs).0, summands)
}

/// The map `⊕ P_W[e] → f` sending the generator of each summand to the
/// given element.
pub fn map_from_frees(f: &NTModule, gens: &[(usize, usize, Vec<i64>)]) -> ModuleMap {
    let n = f.object_count();
    let maps: Vec<ModuleMap> = gens.iter().map(|(w, e, x)| f.yoneda_map(*w, *e, x)).collect();
    let components = (0..n)
        .map(|z| {
            [0, 1].map(|d| {
                maps.iter().fold(accordion_core::matrix::Matrix::zeros(f.dim(z, d), 0), |acc, m| acc.hcat(m.component(z, d)))
            })
        })
        .collect();
    ModuleMap { components }
}

/// Cokernel of a random map from a sum of `relations` free modules into a sum
/// of `generators` free modules.
pub fn random_module<'c>(rng: &mut impl Rng, c: &'c PresentedCategory, generators: usize, relations: usize) -> NTModule<'c> {
    let (f, _) = random_free(rng, c, generators);
    let n = c.objects().len();
    let gens: Vec<(usize, usize, Vec<i64>)> = (0..relations)
        .map(|_| {
            let (w, e) = (rng.gen_range(0..n), rng.gen_range(0..2));
            let x = random_vector(rng, f.moduli(w, e));
            (w, e, x)
        })
        .collect();
    if gens.is_empty() {
        return f;
    }
    f.cokernel(&map_from_frees(&f, &gens)).0
}
