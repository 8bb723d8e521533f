//! Matrices over `Q(i)[ζ]` and their Smith normal form.

use crate::arith::{GaussRat, Mat};

use super::univariate::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMat {
    pub fn new(rows: usize, cols: usize, data: Vec<Poly>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        PolyMat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMat::new(rows, cols, vec![Poly::zero(); rows * cols])
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        PolyMat::new(rows, cols, data)
    }

    /// Constant matrix.
    pub fn constant(m: &Mat<GaussRat>) -> Self {
        PolyMat::from_fn(m.rows(), m.cols(), |r, c| {
            Poly::constant(m.get(r, c).clone())
        })
    }

    /// `ζ·A + B`.
    pub fn affine(a: &Mat<GaussRat>, b: &Mat<GaussRat>) -> Self {
        assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()), "shape mismatch");
        PolyMat::from_fn(a.rows(), a.cols(), |r, c| {
            Poly::linear(a.get(r, c).clone(), b.get(r, c).clone())
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.data[r * self.cols + c] = p;
    }

    pub fn transpose(&self) -> Self {
        PolyMat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows, "hstack needs equal row counts");
        PolyMat::from_fn(self.rows, self.cols + o.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                o.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "inner dimensions differ");
        PolyMat::from_fn(self.rows, o.cols, |r, c| {
            (0..self.cols).fold(Poly::zero(), |acc, t| {
                &acc + &(self.get(r, t) * o.get(t, c))
            })
        })
    }

    pub fn eval(&self, z: &GaussRat) -> Mat<GaussRat> {
        Mat::new(
            self.rows,
            self.cols,
            self.data.iter().map(|p| p.eval(z)).collect(),
        )
    }

    /// Coefficient matrix of `ζ^n`.
    pub fn coeff_matrix(&self, n: usize) -> Mat<GaussRat> {
        Mat::new(
            self.rows,
            self.cols,
            self.data.iter().map(|p| p.coeff(n)).collect(),
        )
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.data.iter().filter_map(Poly::degree).max()
    }

    /// Monic invariant factors `d_1 | d_2 | … | d_r`, where `r` is the rank
    /// over the rational function field.
    pub fn smith_form(&self) -> Vec<Poly> {
        let mut a: Vec<Vec<Poly>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let (m, n) = (self.rows, self.cols);
        let mut out = Vec::new();
        for t in 0..m.min(n) {
            let Some((pi, pj)) = min_degree_entry(&a, t..m, t..n) else {
                break;
            };
            swap_into(&mut a, t, pi, pj);
            loop {
                if reduce_cross(&mut a, t) {
                    let (pi, pj) = min_degree_entry(&a, t..m, t..n).expect("pivot vanished");
                    swap_into(&mut a, t, pi, pj);
                    continue;
                }
                // row and column are clear; the pivot must divide the rest
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[t][t].divides(&a[i][j])));
                match bad {
                    Some(i) => {
                        for j in t..n {
                            a[t][j] = &a[t][j] + &a[i][j];
                        }
                    }
                    None => break,
                }
            }
            out.push(a[t][t].monic());
        }
        out
    }
}

fn min_degree_entry(
    a: &[Vec<Poly>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if let Some(d) = a[i][j].degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_into(a: &mut [Vec<Poly>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    if j != t {
        for row in a.iter_mut() {
            row.swap(t, j);
        }
    }
}

/// Clears row `t` and column `t` against the pivot `a[t][t]` by one round of
/// Euclidean steps. Returns true when some remainder survived.
fn reduce_cross(a: &mut [Vec<Poly>], t: usize) -> bool {
    let (m, n) = (a.len(), a[0].len());
    let mut dirty = false;
    for i in t + 1..m {
        if a[i][t].is_zero() {
            continue;
        }
        let (q, r) = a[i][t].divrem(&a[t][t]);
        for j in t..n {
            if !a[t][j].is_zero() {
                a[i][j] = &a[i][j] - &(&q * &a[t][j]);
            }
        }
        dirty |= !r.is_zero();
    }
    for j in t + 1..n {
        if a[t][j].is_zero() {
            continue;
        }
        let (q, r) = a[t][j].divrem(&a[t][t]);
        for row in a.iter_mut().take(m).skip(t) {
            if !row[t].is_zero() {
                row[j] = &row[j] - &(&q * &row[t]);
            }
        }
        dirty |= !r.is_zero();
    }
    dirty
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[(i64, i64)]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn diagonal_is_sorted_by_divisibility() {
        let m = PolyMat::new(
            2,
            2,
            vec![Poly::x(), Poly::zero(), Poly::zero(), Poly::one()],
        );
        assert_eq!(m.smith_form(), vec![Poly::one(), Poly::x()]);
    }

    #[test]
    fn identity_has_unit_factors() {
        let id = PolyMat::constant(&Mat::identity(3));
        assert_eq!(id.smith_form(), vec![Poly::one(); 3]);
    }

    #[test]
    fn coprime_diagonal_mixes() {
        // diag(z, z+1) ~ diag(1, z(z+1))
        let m = PolyMat::new(
            2,
            2,
            vec![Poly::x(), Poly::zero(), Poly::zero(), p(&[(1, 0), (1, 0)])],
        );
        assert_eq!(
            m.smith_form(),
            vec![Poly::one(), p(&[(0, 0), (1, 0), (1, 0)])]
        );
    }

    #[test]
    fn rank_deficient_matrix_has_fewer_factors() {
        let row = vec![Poly::x(), p(&[(1, 0), (0, 1)])];
        let m = PolyMat::new(
            2,
            2,
            [row.clone(), row.iter().map(|q| q * &Poly::x()).collect()].concat(),
        );
        assert_eq!(m.smith_form().len(), 1);
    }
}
