use crq_core::arith::{int, Mat, Quat, Rat};
use crq_core::crq::*;
use crq_core::maps::*;
use crq_core::model::{left_mult_matrix, right_mult_matrix};

fn st(pairs: &[(i64, usize)]) -> SplittingType {
    SplittingType::new(pairs.iter().copied())
}

fn im_h() -> CrInput {
    f_model(1, 1).unwrap()
}

fn h() -> CrInput {
    f_model(0, 1).unwrap()
}

#[test]
fn inclusion_of_im_h_lifts_to_identity() {
    let (src, dst) = (im_h(), h());
    let t = restrict_map(&Mat::identity(4), src.u(), dst.u()).unwrap();
    let lift = lift_cr_map(&t, &src, &dst, &Twist::Identity)
        .unwrap()
        .unwrap();
    assert!(lift.unique);
    assert_eq!(lift.map, Mat::identity(4));
}

#[test]
fn cocr_projection_onto_im_h_lifts_uniquely() {
    let (src, dst) = (h().dual(), im_h().dual());
    let t = LinMap::new(dst.rho().clone());
    let lift = lift_cocr_map(&t, &src, &dst, &Twist::Identity)
        .unwrap()
        .unwrap();
    assert!(lift.unique);
    assert_eq!(lift.map, Mat::identity(4));
}

#[test]
fn cocr_maps_from_im_h_to_h_vanish() {
    let (src, dst) = (im_h().dual(), h().dual());
    assert_eq!(src.target_dim(), 3);
    let t = LinMap::new(Mat::from_fn(4, 3, |r, c| int((r == c + 1) as i64)));
    assert!(lift_cocr_map(&t, &src, &dst, &Twist::Identity)
        .unwrap()
        .is_none());
    let zero = lift_cocr_map(&LinMap::zero(4, 3), &src, &dst, &Twist::Identity)
        .unwrap()
        .unwrap();
    assert!(zero.map.is_zero() && zero.unique);
}

#[test]
fn no_nonzero_f_map_from_im_h_to_h() {
    let (src, dst) = (im_h(), h());
    let (cs, cd) = (
        f_detect(&src).unwrap().unwrap(),
        f_detect(&dst).unwrap().unwrap(),
    );
    let t = restrict_map(&Mat::identity(4), src.u(), dst.u()).unwrap();
    assert!(lift_f_map(&t, &cs, &cd, &Twist::Identity)
        .unwrap()
        .is_none());
    let zero = lift_f_map(&LinMap::zero(4, 3), &cs, &cd, &Twist::Identity)
        .unwrap()
        .unwrap();
    assert!(zero.map.is_zero());
}

#[test]
fn twisted_lift_of_left_multiplication() {
    // x ↦ r·x intertwines q with r q r⁻¹
    let r = Quat::from_ints(1, 2, 0, -1);
    let g = left_mult_matrix(&r, 1);
    let (src, dst) = (h(), h());
    let t = restrict_map(&g, src.u(), dst.u()).unwrap();
    let twist = Twist::conjugation(r).unwrap();
    let lift = lift_cr_map(&t, &src, &dst, &twist).unwrap().unwrap();
    assert_eq!(lift.map, g);
    assert!(lift_cr_map(&t, &src, &dst, &Twist::Identity)
        .unwrap()
        .is_none());
    assert!(Twist::conjugation(Quat::zero()).is_err());
}

#[test]
fn lifts_compose() {
    let a = Quat::from_ints(0, 1, 1, 0);
    let b = Quat::from_ints(2, 0, -1, 3);
    let u = ex351().unwrap();
    let k = u.k();
    let (ga, gb) = (right_mult_matrix(&a, k), right_mult_matrix(&b, k));
    let ua = CrInput::new(k, u.u().image(&ga)).unwrap();
    let uab = CrInput::new(k, ua.u().image(&gb)).unwrap();
    let ta = restrict_map(&ga, u.u(), ua.u()).unwrap();
    let tb = restrict_map(&gb, ua.u(), uab.u()).unwrap();
    let la = lift_cr_map(&ta, &u, &ua, &Twist::Identity)
        .unwrap()
        .unwrap();
    let lb = lift_cr_map(&tb, &ua, &uab, &Twist::Identity)
        .unwrap()
        .unwrap();
    let lab = lift_cr_map(&tb.compose(&ta), &u, &uab, &Twist::Identity)
        .unwrap()
        .unwrap();
    assert!(la.unique && lb.unique && lab.unique);
    assert_eq!(lab.map, lb.map.mul(&la.map));
    assert_eq!(
        splitting_type_cr(&uab).unwrap(),
        splitting_type_cr(&u).unwrap()
    );
}

#[test]
fn push_down_matches_projection() {
    let (src, dst) = (h().dual(), im_h().dual());
    let t = push_down_map(&Mat::identity(4), &src, &dst).unwrap();
    assert_eq!(t.matrix, dst.rho().clone());
    assert!(push_down_map(&Mat::identity(4), &dst, &src).is_none());
}

#[test]
fn direct_sums() {
    let star = ex351().unwrap().dual();
    assert_eq!(splitting_type_cocr(&star).unwrap(), st(&[(4, 1)]));
    let a = direct_sum_cocr(&h().dual(), &star).unwrap();
    assert_eq!(splitting_type_cocr(&a).unwrap(), st(&[(1, 2), (4, 1)]));
    let b = direct_sum_cocr(&im_h().dual(), &star).unwrap();
    assert_eq!(splitting_type_cocr(&b).unwrap(), st(&[(2, 1), (4, 1)]));
}

/// `α(e′) = (0, 0, −x)`, `x` the `i`-coordinate of the first factor of `e′`.
fn twisted_alpha(first: &CocrInput) -> Mat<Rat> {
    Mat::from_fn(3, 4 * first.k(), |r, c| {
        int(if (r, c) == (2, 1) { -1 } else { 0 })
    })
}

#[test]
fn semidirect_product_is_not_direct() {
    let first = ex351().unwrap().dual();
    let second = im_h().dual();
    let alpha = twisted_alpha(&first);
    let data = SemidirectData::new(first, second, alpha).unwrap();
    let prod = semidirect(&data).unwrap();
    assert_eq!(splitting_type_cocr(&prod).unwrap(), st(&[(3, 2)]));
    assert!(!is_direct(&data).unwrap().direct);
    let direct = direct_sum_cocr(&data.first, &data.second).unwrap();
    assert_eq!(splitting_type_cocr(&direct).unwrap(), st(&[(2, 1), (4, 1)]));
}

#[test]
fn semidirect_over_f_factor_splits() {
    let first = h().dual();
    let second = im_h().dual();
    let alpha = twisted_alpha(&first);
    let data = SemidirectData::new(first, second, alpha.clone()).unwrap();
    let d = is_direct(&data).unwrap();
    assert!(d.direct);
    let (phi, psi) = (d.phi.unwrap(), d.psi.unwrap());
    assert_eq!(
        alpha.add(&phi.mul(data.first.rho())),
        data.second.rho().mul(&psi)
    );
    assert_eq!(
        splitting_type_cocr(&semidirect(&data).unwrap()).unwrap(),
        st(&[(1, 2), (2, 1)])
    );
}

#[test]
fn directness_is_invariant_under_coboundaries() {
    let first = ex351().unwrap().dual();
    let second = im_h().dual();
    let alpha = twisted_alpha(&first);
    let phi0 = Mat::from_fn(3, first.target_dim(), |r, c| {
        int((r as i64 + 2 * c as i64) % 3 - 1)
    });
    let psi0 = quaternionic_block(&Quat::from_ints(1, 0, 2, -1), &first);
    let shifted = alpha
        .add(&phi0.mul(first.rho()))
        .sub(&second.rho().mul(&psi0));
    let base = SemidirectData::new(first.clone(), second.clone(), alpha).unwrap();
    let moved = SemidirectData::new(first, second, shifted).unwrap();
    assert_eq!(
        is_direct(&base).unwrap().direct,
        is_direct(&moved).unwrap().direct
    );
    assert_eq!(
        splitting_type_cocr(&semidirect(&base).unwrap()).unwrap(),
        splitting_type_cocr(&semidirect(&moved).unwrap()).unwrap()
    );
}

/// `H² → H`, `(x, y) ↦ x·q`.
fn quaternionic_block(q: &Quat, first: &CocrInput) -> Mat<Rat> {
    let g = right_mult_matrix(q, 1);
    Mat::from_fn(4, 4 * first.k(), |r, c| {
        if c < 4 {
            g.get(r, c).clone()
        } else {
            int(0)
        }
    })
}

#[test]
fn bad_alpha_shape_is_a_contract_error() {
    let first = ex351().unwrap().dual();
    let second = im_h().dual();
    assert!(SemidirectData::new(first, second, Mat::zeros(2, 8)).is_err());
}
