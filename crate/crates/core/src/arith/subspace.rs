//! Subspaces of `F^n` stored as canonical (reduced row-echelon) row bases.
//!
//! Two subspaces are equal as sets exactly when their stored bases are
//! identical, so `PartialEq` is set equality.

use super::mat::{dot, Mat};
use super::scalar::{Field, GaussRat, Rat};
use crate::error::CrqError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Mat<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        let m = Mat::from_rows(ambient, vectors);
        let (basis, pivots) = m.rref();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Span of vectors that must be linearly independent.
    pub fn from_independent(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Self, CrqError> {
        let n = vectors.len();
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(CrqError::Contract(format!(
                "vector of length {} in an ambient space of dimension {ambient}",
                v.len()
            )));
        }
        let s = Subspace::from_vectors(ambient, vectors);
        if s.dim() != n {
            return Err(CrqError::DependentBasis {
                given: n,
                rank: s.dim(),
            });
        }
        Ok(s)
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace::from_vectors(ambient, vec![])
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_vectors(ambient, Mat::<F>::identity(ambient).row_vecs())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_columns(&self) -> Mat<F> {
        self.basis.transpose()
    }

    fn check_ambient(&self, o: &Self) -> Result<(), CrqError> {
        if self.ambient != o.ambient {
            return Err(CrqError::AmbientMismatch {
                left: self.ambient,
                right: o.ambient,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let c: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.from_coordinates(&c);
        (back == v).then_some(c)
    }

    /// The vector with the given canonical coordinates.
    pub fn from_coordinates(&self, c: &[F]) -> Vec<F> {
        assert_eq!(c.len(), self.dim(), "coordinate vector has wrong length");
        let mut v = vec![F::zero(); self.ambient];
        for (r, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (slot, b) in v.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *slot = slot.clone() + x.clone() * b.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, o: &Self) -> bool {
        self.ambient == o.ambient && o.basis.row_vecs().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Self) -> Result<Self, CrqError> {
        self.check_ambient(o)?;
        Ok(Subspace::from_vectors(
            self.ambient,
            self.basis.vstack(&o.basis).row_vecs(),
        ))
    }

    /// Intersection via the Zassenhaus block matrix `[[A, A], [B, 0]]`.
    pub fn intersect(&self, o: &Self) -> Result<Self, CrqError> {
        self.check_ambient(o)?;
        let n = self.ambient;
        let top = self.basis.hstack(&self.basis);
        let bottom = o.basis.hstack(&Mat::zeros(o.dim(), n));
        let (r, pivots) = top.vstack(&bottom).rref();
        let vectors = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| r.row(i)[n..].to_vec())
            .collect();
        Ok(Subspace::from_vectors(n, vectors))
    }

    /// `{α : α(v) = 0 for all v}` in the dual coordinate space, with the pairing
    /// `α(v) = Σ αᵢ vᵢ` (bilinear, no conjugation).
    pub fn annihilator(&self) -> Self {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        self.basis.kernel()
    }

    /// Greedy complement of `self` inside `outer`: walks the canonical basis of
    /// `outer` in pivot-column order and keeps each vector that is independent
    /// of `self` plus the vectors kept so far.
    pub fn complement_in(&self, outer: &Self) -> Result<Self, CrqError> {
        self.check_ambient(outer)?;
        if !outer.contains_subspace(self) {
            return Err(CrqError::NotContained);
        }
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for v in outer.basis.row_vecs() {
            if acc.dim() == outer.dim() {
                break;
            }
            if !acc.contains(&v) {
                acc = acc.sum(&Subspace::from_vectors(self.ambient, vec![v.clone()]))?;
                chosen.push(v);
            }
        }
        Ok(Subspace::from_vectors(self.ambient, chosen))
    }

    /// Image under `m` (an `rows × ambient` matrix acting on columns).
    pub fn image(&self, m: &Mat<F>) -> Self {
        assert_eq!(m.cols(), self.ambient, "map does not act on this space");
        let vectors = self.basis.row_vecs().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(m.rows(), vectors)
    }

    /// Preimage `{v : m·v ∈ self}` of this subspace of the codomain of `m`.
    pub fn preimage(&self, m: &Mat<F>) -> Self {
        assert_eq!(m.rows(), self.ambient, "map does not land in this space");
        let ann = self.annihilator();
        if ann.dim() == 0 {
            return Subspace::full(m.cols());
        }
        ann.basis.mul(m).kernel()
    }

    pub fn conj(&self) -> Self {
        Subspace::from_vectors(self.ambient, self.basis.conj().row_vecs())
    }

    /// A functional evaluated on a vector.
    pub fn pair(alpha: &[F], v: &[F]) -> F {
        dot(alpha, v)
    }
}

impl Subspace<Rat> {
    /// The same basis viewed over `Q(i)`.
    pub fn complexify(&self) -> Subspace<GaussRat> {
        Subspace::from_vectors(self.ambient, self.basis.complexify().row_vecs())
    }
}

impl Subspace<GaussRat> {
    /// Closed under conjugation.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// For a conjugation-closed subspace, its real points. The canonical basis
    /// of a conjugation-closed subspace is real.
    pub fn real_points(&self) -> Option<Subspace<Rat>> {
        self.basis
            .is_real()
            .then(|| Subspace::from_vectors(self.ambient, self.basis.real_part().row_vecs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::int;

    fn e(n: usize, i: usize) -> Vec<Rat> {
        (0..n).map(|j| int((i == j) as i64)).collect()
    }

    fn span(n: usize, idx: &[usize]) -> Subspace<Rat> {
        Subspace::from_vectors(n, idx.iter().map(|&i| e(n, i)).collect())
    }

    #[test]
    fn sum_examples() {
        assert_eq!(span(3, &[0]).sum(&span(3, &[1])).unwrap(), span(3, &[0, 1]));
        let a = Subspace::from_vectors(3, vec![vec![int(1), int(2), int(3)]]);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.sum(&Subspace::zero(3)).unwrap(), a);
        assert!(a.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            span(3, &[0, 1]).intersect(&span(3, &[1, 2])).unwrap(),
            span(3, &[1])
        );
        let a = Subspace::from_vectors(3, vec![vec![int(1), int(2), int(3)], e(3, 2)]);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(span(3, &[0])
            .intersect(&span(3, &[1, 2]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(Subspace::<Rat>::zero(4).annihilator(), Subspace::full(4));
        assert!(Subspace::<Rat>::full(4).annihilator().is_zero());
        assert_eq!(span(2, &[0]).annihilator(), span(2, &[1]));
    }

    #[test]
    fn complement_examples() {
        let x = Subspace::from_vectors(3, vec![vec![int(1), int(1), int(0)], e(3, 2)]);
        assert_eq!(Subspace::zero(3).complement_in(&x).unwrap(), x);
        assert!(x.complement_in(&x).unwrap().is_zero());
        assert_eq!(
            span(2, &[0]).complement_in(&span(2, &[0, 1])).unwrap(),
            span(2, &[1])
        );
        assert!(matches!(
            span(3, &[0]).complement_in(&span(3, &[1])),
            Err(CrqError::NotContained)
        ));
    }

    #[test]
    fn dependent_basis_rejected() {
        let r = Subspace::from_independent(2, vec![e(2, 0), e(2, 0)]);
        assert!(matches!(
            r,
            Err(CrqError::DependentBasis { given: 2, rank: 1 })
        ));
    }

    #[test]
    fn coordinates_roundtrip() {
        let a = Subspace::from_vectors(
            3,
            vec![vec![int(2), int(4), int(1)], vec![int(0), int(1), int(5)]],
        );
        let v = vec![int(2), int(3), int(-4)];
        let c = a.coordinates(&v).unwrap();
        assert_eq!(a.from_coordinates(&c), v);
        assert!(a.coordinates(&e(3, 0)).is_none() || a.contains(&e(3, 0)));
    }

    #[test]
    fn complexified_subspace_is_conjugation_closed() {
        let a = Subspace::from_vectors(3, vec![vec![int(2), int(4), int(1)]]);
        let c = a.complexify();
        assert!(c.is_real());
        assert_eq!(c.real_points().unwrap(), a);
    }
}
