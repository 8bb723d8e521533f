//! Dense exact matrices, row-major.
//!
//! Rank and echelon forms go through fraction-free (Bareiss) elimination
//! over the integral companion of the scalar field; the reduced row-echelon
//! form is produced from that echelon only when a canonical basis is needed.

use std::fmt;

use super::scalar::{Domain, Field, GaussRat, Rat};
use super::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "entry count must equal rows × cols"
        );
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::new(rows, cols, vec![F::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat::new(rows, cols, data)
    }

    /// Builds a matrix from row vectors; `cols` fixes the width of an empty list.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        Mat::new(n, cols, data)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: Vec<Vec<F>>) -> Self {
        Mat::from_rows(rows, cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn conj(&self) -> Self {
        self.map(F::conj)
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() + o.get(r, c).clone()
        })
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() - o.get(r, c).clone()
        })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        Mat::from_fn(self.rows, o.cols, |r, c| {
            (0..self.cols).fold(F::zero(), |acc, m| {
                let a = self.get(r, m);
                if a.is_zero() {
                    acc
                } else {
                    acc + a.clone() * o.get(m, c).clone()
                }
            })
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch in product");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows, "hstack needs equal row counts");
        Mat::from_fn(self.rows, self.cols + o.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                o.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols, "vstack needs equal column counts");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Mat::new(self.rows + o.rows, self.cols, data)
    }

    pub fn block_diag(&self, o: &Self) -> Self {
        Mat::from_fn(self.rows + o.rows, self.cols + o.cols, |r, c| {
            match (r < self.rows, c < self.cols) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => o.get(r - self.rows, c - self.cols).clone(),
                _ => F::zero(),
            }
        })
    }

    /// Kronecker product. With row-major vectorisation,
    /// `vec(A·X·B) = (A ⊗ Bᵀ)·vec(X)`.
    pub fn kron(&self, o: &Self) -> Self {
        Mat::from_fn(self.rows * o.rows, self.cols * o.cols, |r, c| {
            self.get(r / o.rows, c / o.cols).clone() * o.get(r % o.rows, c % o.cols).clone()
        })
    }

    /// Row-major flattening into a column vector.
    pub fn vectorize(&self) -> Vec<F> {
        self.data.clone()
    }

    /// Rank over the scalar field, via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.integral_rows();
        bareiss_echelon(&mut rows, self.cols).len()
    }

    fn integral_rows(&self) -> Vec<Vec<F::Integral>> {
        (0..self.rows)
            .map(|r| F::clear_denominators(self.row(r)))
            .collect()
    }

    /// Reduced row-echelon form: the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Mat<F>, Vec<usize>) {
        let mut rows = self.integral_rows();
        let pivots = bareiss_echelon(&mut rows, self.cols);
        let mut out: Vec<Vec<F>> = rows
            .iter()
            .take(pivots.len())
            .map(|row| row.iter().map(F::from_integral).collect())
            .collect();
        for (r, &p) in pivots.iter().enumerate().rev() {
            let inv = out[r][p].inv();
            for x in out[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            let pivot_row = out[r].clone();
            for row in out.iter_mut().take(r) {
                let f = row[p].clone();
                if !f.is_zero() {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        if !y.is_zero() {
                            *x = x.clone() - f.clone() * y.clone();
                        }
                    }
                }
            }
        }
        (Mat::from_rows(self.cols, out), pivots)
    }

    /// Right kernel `{v : M·v = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.cols, basis)
    }

    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_vectors(self.cols, self.row_vecs())
    }

    pub fn column_space(&self) -> Subspace<F> {
        self.transpose().row_space()
    }

    /// One solution of `M·x = b`, if the system is consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let aug = self.hstack(&Mat::from_cols(self.rows, vec![b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let (r, pivots) = self.hstack(&Mat::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl Mat<Rat> {
    pub fn complexify(&self) -> Mat<GaussRat> {
        self.map(|x| GaussRat::real(x.clone()))
    }
}

impl Mat<GaussRat> {
    pub fn is_real(&self) -> bool {
        self.data.iter().all(GaussRat::is_real)
    }

    pub fn real_part(&self) -> Mat<Rat> {
        Mat::new(
            self.rows,
            self.cols,
            self.data.iter().map(|x| x.re.clone()).collect(),
        )
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x.clone() * y.clone()
        }
    })
}

/// Fraction-free row echelon form in place. Returns the pivot columns; rows
/// past the rank are left zero.
pub fn bareiss_echelon<D: Domain>(rows: &mut [Vec<D>], ncols: usize) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut prev = D::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = &pivot_row[c];
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                let num = pv.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division must be exact");
            }
            row[c] = D::zero();
        }
        prev = pivot_row[c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::{int, rat};

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::<Rat>::identity(3).rank(), 3);
        assert_eq!(Mat::<Rat>::zeros(2, 2).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn rank_with_skipped_columns() {
        let a = m(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[0, 0, 0, 1], &[0, 3, 6, 11]]);
        assert_eq!(a.rank(), 2);
        let (r, p) = a.rref();
        assert_eq!(p, vec![1, 3]);
        assert_eq!(r, m(&[&[0, 1, 2, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::<Rat>::identity(2).kernel().dim(), 0);
        let k = m(&[&[1, 1]]).kernel();
        assert_eq!(k, Subspace::from_vectors(2, vec![vec![int(1), int(-1)]]));
        assert_eq!(Mat::<Rat>::zeros(2, 3).kernel(), Subspace::full(3));
    }

    #[test]
    fn solve_and_inverse() {
        let a = Mat::from_rows(2, vec![vec![int(2), int(1)], vec![int(1), rat(1, 2)]]);
        assert!(a.inverse().is_none());
        assert!(a.solve(&[int(1), int(1)]).is_none());
        let x = a.solve(&[int(2), int(1)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![int(2), int(1)]);
        let b = m(&[&[1, 2], &[3, 5]]);
        let bi = b.inverse().unwrap();
        assert_eq!(b.mul(&bi), Mat::identity(2));
    }

    #[test]
    fn gaussian_rank() {
        let i = GaussRat::i();
        let one = GaussRat::one();
        let a = Mat::from_rows(
            2,
            vec![vec![one.clone(), i.clone()], vec![i.clone(), -one.clone()]],
        );
        assert_eq!(a.rank(), 1);
        assert_eq!(a.conj().rank(), 1);
    }

    #[test]
    fn kron_vectorisation_identity() {
        let a = m(&[&[1, 2], &[0, -1], &[3, 1]]);
        let x = m(&[&[1, 0, 2], &[4, -1, 1]]);
        let b = m(&[&[2, 1, 0, 1], &[0, 1, 1, 0], &[1, 0, 0, 3]]);
        let lhs = a.mul(&x).mul(&b).vectorize();
        let rhs = a.kron(&b.transpose()).mul_vec(&x.vectorize());
        assert_eq!(lhs, rhs);
    }
}
