//! Dense integer matrices and Smith normal form.
//!
//! Everything downstream (cohomology, hom groups, module exactness) reduces to
//! kernels, images and cokernels of small integer matrices. The entry type is
//! generic: cohomology runs over [`num_bigint::BigInt`], the category and
//! module code over `i64` (overflow panics, see the workspace profiles).

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Integer-like entry type.
pub trait Int: Clone + fmt::Debug + Integer + Signed {}

impl<T: Clone + fmt::Debug + Integer + Signed> Int for T {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Int> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self[(r, c)])?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Int> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<T>>) -> Self {
        assert_eq!(entries.len(), rows, "row count mismatch");
        let mut data = Vec::with_capacity(rows * cols);
        for row in entries {
            assert_eq!(row.len(), cols, "column count mismatch");
            data.extend(row);
        }
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        let prod = a.clone() * b.clone();
                        out[(r, c)] = out[(r, c)].clone() + prod;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = &self[(r, c)];
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                m[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vcat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vcat");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    pub fn scale(&self, k: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * k.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    /// Sub-matrix of the selected columns.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m[(r, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Sub-matrix of the selected rows.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                m[(i, c)] = self[(r, c)].clone();
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[a] += k * row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &T) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self[(b, c)].clone();
            if !v.is_zero() {
                self[(a, c)] = self[(a, c)].clone() + k.clone() * v;
            }
        }
    }

    /// col[a] += k * col[b]
    fn add_col(&mut self, a: usize, b: usize, k: &T) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self[(r, b)].clone();
            if !v.is_zero() {
                self[(r, a)] = self[(r, a)].clone() + k.clone() * v;
            }
        }
    }

    fn neg_row(&mut self, a: usize) {
        for c in 0..self.cols {
            self[(a, c)] = -self[(a, c)].clone();
        }
    }

    fn neg_col(&mut self, a: usize) {
        for r in 0..self.rows {
            self[(r, a)] = -self[(r, a)].clone();
        }
    }
}

/// Smith normal form `u * a * v = d` with unimodular `u`, `v`.
///
/// `d` is diagonal with non-negative entries `d_0 | d_1 | ... | d_{rank-1}`
/// followed by zeros. Inverses of both transforms are tracked as well.
#[derive(Clone)]
pub struct Smith<T> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
    pub rank: usize,
}

impl<T: Int> Smith<T> {
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Diagonal entries larger than one.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.diagonal().into_iter().filter(|d| !d.is_one()).collect()
    }
}

struct SmithState<T> {
    a: Matrix<T>,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
    track_v: bool,
}

impl<T: Int> SmithState<T> {
    fn row_add(&mut self, a: usize, b: usize, k: &T) {
        self.a.add_row(a, b, k);
        self.u.add_row(a, b, k);
        self.u_inv.add_col(b, a, &-k.clone());
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn row_neg(&mut self, a: usize) {
        self.a.neg_row(a);
        self.u.neg_row(a);
        self.u_inv.neg_col(a);
    }

    fn col_add(&mut self, a: usize, b: usize, k: &T) {
        self.a.add_col(a, b, k);
        if self.track_v {
            self.v.add_col(a, b, k);
            self.v_inv.add_row(b, a, &-k.clone());
        }
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        if self.track_v {
            self.v.swap_cols(a, b);
            self.v_inv.swap_rows(a, b);
        }
    }

    fn min_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for r in t..self.a.rows {
            for c in t..self.a.cols {
                let x = self.a[(r, c)].abs();
                if x.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|b| x < b.2) {
                    let one = x.is_one();
                    best = Some((r, c, x));
                    if one {
                        let (r, c, _) = best.unwrap();
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    fn run(&mut self) -> usize {
        let (rows, cols) = (self.a.rows, self.a.cols);
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pr, pc)) = self.min_nonzero(t) else { break };
            self.row_swap(t, pr);
            self.col_swap(t, pc);
            loop {
                let mut dirty = false;
                for r in t + 1..rows {
                    if self.a[(r, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(r, t)].div_floor(&self.a[(t, t)]);
                    self.row_add(r, t, &-q);
                    if !self.a[(r, t)].is_zero() {
                        self.row_swap(t, r);
                        dirty = true;
                    }
                }
                for c in t + 1..cols {
                    if self.a[(t, c)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, c)].div_floor(&self.a[(t, t)]);
                    self.col_add(c, t, &-q);
                    if !self.a[(t, c)].is_zero() {
                        self.col_swap(t, c);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // Divisibility: the pivot must divide every remaining entry.
                let p = self.a[(t, t)].clone();
                let mut bad = None;
                'outer: for r in t + 1..rows {
                    for c in t + 1..cols {
                        if !self.a[(r, c)].is_multiple_of(&p) {
                            bad = Some(r);
                            break 'outer;
                        }
                    }
                }
                match bad {
                    Some(r) => self.row_add(t, r, &T::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.row_neg(t);
            }
            t += 1;
        }
        t
    }
}

pub fn smith<T: Int>(a: &Matrix<T>) -> Smith<T> {
    smith_tracking(a, true)
}

/// Smith form with only the row transforms; `v` and `v_inv` are left empty.
fn smith_rows<T: Int>(a: &Matrix<T>) -> Smith<T> {
    smith_tracking(a, false)
}

fn smith_tracking<T: Int>(a: &Matrix<T>, track_v: bool) -> Smith<T> {
    let n = if track_v { a.cols } else { 0 };
    let mut st = SmithState {
        a: a.clone(),
        u: Matrix::identity(a.rows),
        u_inv: Matrix::identity(a.rows),
        v: Matrix::identity(n),
        v_inv: Matrix::identity(n),
        track_v,
    };
    let rank = st.run();
    Smith { d: st.a, u: st.u, u_inv: st.u_inv, v: st.v, v_inv: st.v_inv, rank }
}

pub fn rank<T: Int>(a: &Matrix<T>) -> usize {
    smith(a).rank
}

/// Columns form a ℤ-basis of `{x : a x = 0}`.
pub fn kernel<T: Int>(a: &Matrix<T>) -> Matrix<T> {
    let s = smith(a);
    let cols: Vec<usize> = (s.rank..a.cols).collect();
    s.v.select_columns(&cols)
}

/// Integer solution of `a x = b`, if one exists.
pub fn solve<T: Int>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows, b.len(), "dimension mismatch in solve");
    let s = smith(a);
    let c = s.u.mul_vec(b);
    let mut y = vec![T::zero(); a.cols];
    for (i, ci) in c.iter().enumerate() {
        if i < s.rank {
            let (q, r) = ci.div_rem(&s.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Whether every column of `vs` lies in the ℤ-span of the columns of `gens`.
pub fn span_contains<T: Int>(gens: &Matrix<T>, vs: &Matrix<T>) -> bool {
    assert_eq!(gens.rows, vs.rows, "dimension mismatch in span test");
    let s = smith_rows(gens);
    let c = s.u.mul(vs);
    for j in 0..vs.cols {
        for i in 0..c.rows {
            let x = &c[(i, j)];
            let ok = if i < s.rank { x.is_multiple_of(&s.d[(i, i)]) } else { x.is_zero() };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// A finitely generated abelian group `ℤ^gens / span(relations)` together
/// with normal-form coordinates.
///
/// Coordinates of the quotient come first for free summands, then for the
/// cyclic summands `ℤ/d` in increasing order of `d`.
#[derive(Clone, Debug)]
pub struct Quotient {
    gens: usize,
    reduce: Matrix<i64>,
    lift: Matrix<i64>,
    moduli: Vec<i64>,
}

impl Quotient {
    /// The free group `ℤ^n`.
    pub fn free(n: usize) -> Self {
        Quotient { gens: n, reduce: Matrix::identity(n), lift: Matrix::identity(n), moduli: vec![0; n] }
    }

    /// `relations` holds one relation per column.
    pub fn new(gens: usize, relations: &Matrix<i64>) -> Self {
        assert_eq!(relations.rows, gens, "relation length mismatch");
        Self::from_relation_columns(gens, (0..relations.cols).map(|c| relations.column(c)).collect())
    }

    /// Same as [`Quotient::new`] with the relations given as columns.
    pub fn from_relation_columns(gens: usize, mut cols: Vec<Vec<i64>>) -> Self {
        cols.retain(|c| c.iter().any(|&x| x != 0));
        cols.sort_unstable();
        cols.dedup();
        if cols.is_empty() {
            return Self::free(gens);
        }
        let s = smith_rows(&Matrix::from_columns(gens, &cols));
        let mut order: Vec<usize> = (s.rank..gens).collect();
        let mut torsion: Vec<usize> = (0..s.rank).filter(|&i| s.d[(i, i)] > 1).collect();
        torsion.sort_by_key(|&i| (s.d[(i, i)], i));
        order.extend(torsion);
        let moduli = order.iter().map(|&i| if i < s.rank { s.d[(i, i)] } else { 0 }).collect();
        Quotient { gens, reduce: s.u.select_rows(&order), lift: s.u_inv.select_columns(&order), moduli }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    /// Number of normal-form coordinates.
    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|&&d| d == 0).count()
    }

    pub fn torsion(&self) -> Vec<i64> {
        self.moduli.iter().copied().filter(|&d| d != 0).collect()
    }

    pub fn moduli(&self) -> &[i64] {
        &self.moduli
    }

    pub fn is_zero(&self) -> bool {
        self.moduli.is_empty()
    }

    /// Normal form of the class of a generator-coordinate vector.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut c = self.reduce.mul_vec(v);
        self.normalize(&mut c);
        c
    }

    pub fn normalize(&self, c: &mut [i64]) {
        for (x, &d) in c.iter_mut().zip(&self.moduli) {
            if d != 0 {
                *x = x.rem_euclid(d);
            }
        }
    }

    /// Generator-coordinate representative of normal-form coordinates.
    pub fn lift(&self, c: &[i64]) -> Vec<i64> {
        self.lift.mul_vec(c)
    }

    /// Matrix sending generator coordinates to (unreduced) normal-form coordinates.
    pub fn reduce_matrix(&self) -> &Matrix<i64> {
        &self.reduce
    }

    /// Matrix whose columns lift the normal-form basis.
    pub fn lift_matrix(&self) -> &Matrix<i64> {
        &self.lift
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(r, c, rows)
    }

    #[test]
    fn smith_of_small_matrix() {
        let a = m(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith(&a);
        assert_eq!(s.diagonal(), vec![2, 6, 12]);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), Matrix::identity(3));
        assert_eq!(s.v.mul(&s.v_inv), Matrix::identity(3));
    }

    #[test]
    fn quotient_by_diagonal_vector() {
        let q = Quotient::new(3, &m(vec![vec![1], vec![1], vec![1]]));
        assert_eq!(q.dim(), 2);
        assert_eq!(q.free_rank(), 2);
        assert_eq!(q.reduce(&[1, 1, 1]), vec![0, 0]);
    }

    #[test]
    fn quotient_with_torsion() {
        let q = Quotient::new(2, &m(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(q.torsion(), vec![6]);
        assert_eq!(q.free_rank(), 0);
    }

    #[test]
    fn solve_and_span() {
        let a = m(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(solve(&a, &[4, 9]), Some(vec![2, 3]));
        assert_eq!(solve(&a, &[1, 0]), None);
        assert!(span_contains(&a, &m(vec![vec![2], vec![3]])));
        assert!(!span_contains(&a, &m(vec![vec![1], vec![0]])));
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(vec![vec![1, 2, 3]]);
        let k = kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
    }
}
