use proptest::prelude::*;

use crq_core::arith::{int, Field, GaussRat, Mat, Quat, Rat, Subspace};
use crq_core::crq::*;
use crq_core::model::*;
use crq_core::poly::{full_rank_everywhere, HomogeneousMat, Poly, PolyMat};

fn small() -> impl Strategy<Value = i64> {
    -3i64..=3
}

fn vectors(n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Rat>>> {
    prop::collection::vec(prop::collection::vec(small().prop_map(int), n), count)
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace<Rat>> {
    (0..=n)
        .prop_flat_map(move |c| vectors(n, c))
        .prop_map(move |v| Subspace::from_vectors(n, v))
}

fn quat() -> impl Strategy<Value = Quat> {
    (small(), small(), small(), small()).prop_map(|(a, b, c, d)| Quat::from_ints(a, b, c, d))
}

fn point() -> impl Strategy<Value = TwistorPoint> {
    prop_oneof![
        1 => Just(TwistorPoint::infinity()),
        6 => (small(), 1i64..=4, small(), 1i64..=4).prop_map(|(a, b, c, d)| {
            TwistorPoint::affine(GaussRat::new(Rat::new(a.into(), b.into()), Rat::new(c.into(), d.into())))
        }),
    ]
}

/// A subspace of `H^k`, `k ∈ {1, 2}`, of dimension at least `min_dim` when
/// the random vectors allow it.
fn cr_input(min_dim: usize) -> impl Strategy<Value = CrInput> {
    (1usize..=2)
        .prop_flat_map(move |k| (Just(k), vectors(4 * k, (min_dim + k).min(4 * k))))
        .prop_map(|(k, v)| CrInput::new(k, Subspace::from_vectors(4 * k, v)).unwrap())
}

/// Rank by plain Gaussian elimination with division.
fn naive_rank(m: &Mat<Rat>) -> usize {
    let mut rows = m.row_vecs();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != int(0)) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != int(0) {
                let f = rows[r][c].clone() / rows[rank][c].clone();
                for j in 0..m.cols() {
                    let d = &f * &rows[rank][j];
                    rows[r][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant over `Q(i)[ζ]` by cofactor expansion.
fn poly_det(m: &[Vec<Poly>]) -> Poly {
    if m.is_empty() {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for c in 0..m.len() {
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &poly_det(&minor);
        acc = if c % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![vec![]];
    }
    if n < t {
        return vec![];
    }
    let mut out = subsets(n - 1, t);
    for mut s in subsets(n - 1, t - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Monic gcd of all `t × t` minors.
fn minor_gcd(m: &PolyMat, t: usize) -> Poly {
    let mut g = Poly::zero();
    for rs in subsets(m.rows(), t) {
        for cs in subsets(m.cols(), t) {
            let sub: Vec<Vec<Poly>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect())
                .collect();
            g = g.gcd(&poly_det(&sub));
        }
    }
    g
}

fn poly_mat(rows: usize, cols: usize) -> impl Strategy<Value = PolyMat> {
    let entry = prop::collection::vec((small(), small()), 0..=2).prop_map(|c| Poly::from_ints(&c));
    prop::collection::vec(entry, rows * cols).prop_map(move |d| PolyMat::new(rows, cols, d))
}

fn rational_rank_matrix() -> impl Strategy<Value = Mat<Rat>> {
    (1usize..=5, 1usize..=6)
        .prop_flat_map(|(r, c)| vectors(c, r).prop_map(move |rows| Mat::from_rows(c, rows)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn annihilator_is_an_involution(u in subspace(6)) {
        let a = u.annihilator();
        prop_assert_eq!(a.dim() + u.dim(), 6);
        prop_assert_eq!(a.annihilator(), u);
    }

    #[test]
    fn sum_and_intersection_dimensions(u in subspace(6), w in subspace(6)) {
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains_subspace(&u) && u.contains_subspace(&i) && w.contains_subspace(&i));
        prop_assert_eq!(s.annihilator(), u.annihilator().intersect(&w.annihilator()).unwrap());
    }

    #[test]
    fn basis_is_canonical(u in subspace(5), mix in vectors(5, 5)) {
        let d = u.dim();
        let mixer = Mat::from_fn(d, d, |r, c| mix[r][c].clone() + if r == c { int(11) } else { int(0) });
        prop_assume!(mixer.rank() == d);
        let rebuilt = Subspace::from_vectors(5, mixer.mul(u.basis()).row_vecs());
        prop_assert_eq!(rebuilt.basis(), u.basis());
    }

    #[test]
    fn bareiss_rank_matches_division_rank(m in rational_rank_matrix()) {
        prop_assert_eq!(m.rank(), naive_rank(&m));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn smith_factors_match_minor_gcds(m in poly_mat(3, 3)) {
        let f = m.smith_form();
        let mut prod = Poly::one();
        for t in 1..=3 {
            let g = minor_gcd(&m, t);
            if t > f.len() {
                prop_assert!(g.is_zero());
            } else {
                prod = &prod * &f[t - 1];
                prop_assert_eq!(&prod, &g);
            }
        }
        for w in f.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
    }

    #[test]
    fn rank_decision_agrees_with_pointwise_ranks(m in poly_mat(2, 3), p in point()) {
        let h = HomogeneousMat::new(m);
        let d = full_rank_everywhere(&h, 2);
        if d.holds {
            prop_assert_eq!(h.rank_at(&p), 2);
        }
        if let Some(w) = &d.witness {
            prop_assert!(h.rank_at(w) != 2);
        }
    }

    #[test]
    fn eigenframe_spans_the_eigenspace(k in 1usize..=2, p in point()) {
        prop_assert_eq!(eigenframe_span(k, &p), eigenspace_at(&p, k));
        prop_assert_eq!(eigenspace_at(&p, k).dim(), 2 * k);
    }

    #[test]
    fn antipode_reverses_the_structure(p in point()) {
        prop_assert_eq!(j_from_zeta(&p.antipode()), j_from_zeta(&p).neg());
        prop_assert_eq!(p.antipode().antipode(), p.clone());
        prop_assert_eq!(eigenspace_at(&p.antipode(), 1), eigenspace_at(&p, 1).conj());
        prop_assert_eq!(j_from_zeta(&p).to_point(), p);
    }

    #[test]
    fn sigma_is_multiplicative(p in quat(), q in quat(), k in 1usize..=2) {
        prop_assert_eq!(left_mult_matrix(&(&p * &q), k), left_mult_matrix(&p, k).mul(&left_mult_matrix(&q, k)));
        prop_assert_eq!(
            right_mult_matrix(&(&p * &q), k),
            right_mult_matrix(&q, k).mul(&right_mult_matrix(&p, k))
        );
        prop_assert_eq!(dual_structure(k).sigma(&q), left_mult_matrix(&q, k));
    }

    #[test]
    fn triple_intersection_is_frame_independent(u in cr_input(3), a in point(), b in point(), c in point()) {
        let qs = [a, b, c].map(|p| j_from_zeta(&p).quat().clone());
        let independent = Mat::from_rows(4, qs.iter().map(|q| q.coords().to_vec()).collect()).rank() == 3;
        prop_assume!(independent);
        let k = u.k();
        prop_assert_eq!(triple_intersection_with(u.u(), &qs, k), triple_intersection(u.u(), k));
    }

    #[test]
    fn duality_round_trip(u in cr_input(2)) {
        let d = u.dual();
        prop_assert_eq!(d.dual(), u.clone());
        prop_assert_eq!(is_cr_quaternionic(&u).map(|r| r.holds).ok(), is_cocr_quaternionic(&d).map(|r| r.holds).ok());
    }

    #[test]
    fn failed_decisions_carry_valid_witnesses(u in cr_input(2)) {
        if let Ok(d) = is_cr_quaternionic(&u) {
            let pencil = cr_pencil(&u);
            if let Some(w) = &d.witness {
                prop_assert!(!d.holds);
                prop_assert!(pencil.rank_at(w) < 4 * u.k());
            }
            if d.holds {
                prop_assert_eq!(pencil.rank_at(&TwistorPoint::from_ints(5, -2)), 4 * u.k());
            }
        }
    }

    #[test]
    fn splitting_type_is_point_independent(u in cr_input(2)) {
        let d = u.dual();
        prop_assume!(is_cocr_quaternionic(&d).map(|r| r.holds).unwrap_or(false));
        let l = d.l();
        let s = splitting_type_cocr_at(&d, &default_points(l)).unwrap();
        prop_assert_eq!(splitting_type_cocr_at(&d, &alternate_points(l)).unwrap(), s.clone());
        prop_assert_eq!(splitting_type_cr(&u).unwrap(), s.negate());
        prop_assert_eq!(s.rank() as i64, 2 * d.k() as i64 - l as i64);
        prop_assert_eq!(s.degree(), 2 * d.k() as i64);
    }

    #[test]
    fn decomposition_bookkeeping(u in cr_input(3)) {
        prop_assume!(is_cr_quaternionic(&u).map(|r| r.holds).unwrap_or(false));
        let dec = decompose_cr(&u).unwrap();
        prop_assert_eq!(dec.dim(), u.u().dim());
        prop_assert_eq!(dec.k(), u.k());
        prop_assert_eq!(dec.w(1), filtration_w1(&u).dim());
        prop_assert_eq!(dec.w(2), filtration_w2(&u).dim());
    }
}

#[test]
fn gaussian_scalars_invert() {
    let z = GaussRat::from_ints(3, -4);
    assert_eq!(z.clone() * z.inv(), GaussRat::one());
    assert_eq!(z.norm(), int(25));
}
