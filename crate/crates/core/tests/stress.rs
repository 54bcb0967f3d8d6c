//! Higher-degree exercises of the exact tower: normalizations at these
//! degrees involve factorial ratios far past machine-integer range.

use ylm_core::harmonics::{closed_form, generate_via_j, generate_via_k};
use ylm_core::inner::inner_exact;
use ylm_core::operators::{casimir_su2, j_op, j_raise_coeff, l_plus, su2_ladder_coeff, LadderSign};
use ylm_core::Scalar;

#[test]
fn ladder_step_at_degree_forty() {
    let lhs = l_plus().apply(&closed_form(40, 24).unwrap()).unwrap();
    let rhs = closed_form(40, 25)
        .unwrap()
        .scale(&su2_ladder_coeff(40, 25).unwrap());
    assert_eq!(lhs, rhs);

    let lhs = j_op(40, LadderSign::Plus)
        .apply(&closed_form(39, -17).unwrap())
        .unwrap();
    let rhs = closed_form(40, -17)
        .unwrap()
        .scale(&j_raise_coeff(40, -17).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn generation_routes_at_degree_twentyfive() {
    let direct = closed_form(25, 10).unwrap();
    assert_eq!(generate_via_j(25, 10).unwrap(), direct);
    // fixed-(l-m) route: d = l - m + 1 = 16
    assert_eq!(generate_via_k(16, 10).unwrap(), direct);
}

#[test]
fn casimir_and_norm_at_degree_thirty() {
    let y = closed_form(30, -7).unwrap();
    assert_eq!(
        casimir_su2(&y).unwrap(),
        y.scale(&Scalar::from_integer(30 * 31))
    );
    assert_eq!(inner_exact(&y, &y).unwrap(), Scalar::one());
}
