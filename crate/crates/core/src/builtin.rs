//! Named spaces: the four-point counterexamples, the pseudo-square, the
//! pseudocircles, chains and accordions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poset::Space;

fn labeled(labels: &[&str], pairs: &[(usize, usize)]) -> Space {
    let labels = labels.iter().map(|s| s.to_string()).collect();
    let pairs: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Space::from_relations_labeled(labels, &pairs).expect("built-in space is a partial order")
}

/// `4` below each of `1, 2, 3`.
pub fn x1() -> Space {
    labeled(&["1", "2", "3", "4"], &[(4, 1), (4, 2), (4, 3)])
}

pub fn x2() -> Space {
    x1().opposite()
}

/// `1 ≻ 3`, `2 ≻ 3`, `3 ≻ 4`.
pub fn x3() -> Space {
    labeled(&["1", "2", "3", "4"], &[(3, 1), (3, 2), (4, 3)])
}

pub fn x4() -> Space {
    x3().opposite()
}

/// The pseudo-square with open sets `∅, 1, 12, 13, 123, S`: `1` on top,
/// `4` at the bottom.
pub fn pseudo_square() -> Space {
    labeled(&["1", "2", "3", "4"], &[(2, 1), (3, 1), (4, 2), (4, 3)])
}

/// The pseudocircle `Cₙ`: points `1^k`, `2^k` for `k ∈ ℤ/n` with
/// `1^k ≺ 2^k ≻ 1^{k+1}`. Point `1^k` has index `2k`, `2^k` index `2k+1`.
pub fn pseudocircle(n: usize) -> Result<Space> {
    if n < 2 {
        return Err(Error::Malformed("pseudocircle needs n ≥ 2".into()));
    }
    let mut labels = Vec::with_capacity(2 * n);
    for k in 0..n {
        labels.push(format!("1^{k}"));
        labels.push(format!("2^{k}"));
    }
    let mut pairs = Vec::with_capacity(2 * n);
    for k in 0..n {
        pairs.push((2 * k, 2 * k + 1));
        pairs.push((2 * ((k + 1) % n), 2 * k + 1));
    }
    Space::from_relations_labeled(labels, &pairs)
}

/// The chain `1 ≺ 2 ≺ … ≺ n`.
pub fn chain(n: usize) -> Result<Space> {
    if n == 0 {
        return Err(Error::Malformed("chain needs at least one point".into()));
    }
    let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Space::from_relations(n, &pairs)
}

/// The accordion `O_{n₁} ⋁ O_{n₂} ⋁ …`: points are numbered `1, 2, …` along
/// the path, runs alternate ascending and descending starting with an
/// ascending run of `n₁` points.
pub fn accordion(runs: &[usize]) -> Result<Space> {
    if runs.is_empty() || runs.contains(&0) {
        return Err(Error::Malformed("accordion runs must be positive".into()));
    }
    let m = runs.len();
    if m > 2 && runs[1..m - 1].iter().any(|&r| r < 2) {
        return Err(Error::Malformed("interior accordion runs need at least two points".into()));
    }
    let n = runs.iter().sum::<usize>() + 1 - m;
    let mut pairs = Vec::new();
    let mut pos = 0;
    for (i, &r) in runs.iter().enumerate() {
        for _ in 1..r {
            if i % 2 == 0 {
                pairs.push((pos, pos + 1));
            } else {
                pairs.push((pos + 1, pos));
            }
            pos += 1;
        }
    }
    debug_assert_eq!(pos + 1, n);
    Space::from_relations(n, &pairs)
}

/// All spaces with exactly `n` points up to isomorphism, sorted by canonical
/// form. Each is built by placing a new maximal point over a down-set of a
/// smaller space.
pub fn spaces_up_to_iso(n: usize) -> Vec<Space> {
    let mut level: BTreeMap<Vec<u64>, Space> = BTreeMap::new();
    level.insert(vec![], Space::from_relations(0, &[]).expect("empty space"));
    for k in 0..n {
        let mut next = BTreeMap::new();
        for s in level.values() {
            for d in s.all().subsets().filter(|&d| s.is_closed(d)) {
                let pairs: Vec<(usize, usize)> = s.generating_pairs().into_iter().chain(d.iter().map(|x| (x, k))).collect();
                let t = Space::from_relations(k + 1, &pairs).expect("adding a maximal point keeps a partial order");
                next.entry(t.canonical_form()).or_insert(t);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// Connected spaces with exactly `n ≥ 1` points up to isomorphism.
pub fn connected_spaces_up_to_iso(n: usize) -> Vec<Space> {
    spaces_up_to_iso(n).into_iter().filter(|s| n > 0 && s.is_connected(s.all())).collect()
}

/// Parse `X1|X2|X3|X4|S|Cn:<n>|On:<n>|W:<n1,...>`.
pub fn by_name(name: &str) -> Result<Space> {
    let bad = || Error::Malformed(format!("unknown built-in space `{name}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match name {
        "X1" => Ok(x1()),
        "X2" => Ok(x2()),
        "X3" => Ok(x3()),
        "X4" => Ok(x4()),
        "S" => Ok(pseudo_square()),
        _ => {
            if let Some(n) = name.strip_prefix("Cn:") {
                pseudocircle(num(n)?)
            } else if let Some(n) = name.strip_prefix("On:") {
                chain(num(n)?)
            } else if let Some(list) = name.strip_prefix("W:") {
                let runs = list.split(',').map(num).collect::<Result<Vec<_>>>()?;
                accordion(&runs)
            } else {
                Err(bad())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        let all: Vec<usize> = (1..=5).map(|n| spaces_up_to_iso(n).len()).collect();
        assert_eq!(all, [1, 2, 5, 16, 63]);
        let conn: Vec<usize> = (1..=5).map(|n| connected_spaces_up_to_iso(n).len()).collect();
        assert_eq!(conn, [1, 1, 3, 10, 44]);
    }

    #[test]
    fn accordion_w4() {
        let w = accordion(&[3, 2]).unwrap();
        assert!(w.lt(0, 1) && w.lt(1, 2) && w.lt(3, 2));
        assert!(!w.comparable(0, 3));
    }

    #[test]
    fn pseudocircle_is_height_one() {
        let c = pseudocircle(2).unwrap();
        assert_eq!(c.hasse_pairs().len(), 4);
        for x in 0..4 {
            assert_eq!(c.degree(x).unoriented, 2);
        }
    }
}
