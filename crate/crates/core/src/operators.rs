//! Constructors for the named ladder operators on the sphere, their
//! one-step coefficients, and the composite (Casimir, shape-invariance)
//! applications built from them.
//!
//! Every operator is a [`LadderOperator`] acting through the single
//! application engine; second-order expressions are compositions of
//! applications, never expanded symbolically.

use crate::error::AlgebraError;
use crate::poly::Poly;
use crate::scalar::{int, rat, Rational, Scalar};
use crate::sphere::{commutator, LadderOperator, SphereFunction, TrigCoeff};
use crate::theta::ThetaForm;

/// Raising/lowering selector for parameterized families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderSign {
    Plus,
    Minus,
}

/// Index pair of the mixed operators: (degree shift, order shift).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedKind {
    PlusPlus,
    MinusMinus,
    MinusPlus,
    PlusMinus,
}

fn sign_factor(sign: LadderSign) -> i64 {
    match sign {
        LadderSign::Plus => 1,
        LadderSign::Minus => -1,
    }
}

/// `L+- = e^(+-i phi) (+- d/dtheta + i cot(theta) d/dphi)`.
pub fn l_su2(sign: LadderSign) -> LadderOperator {
    let s = sign_factor(sign);
    LadderOperator::new(
        s,
        TrigCoeff::new(ThetaForm::constant(Scalar::from_integer(s)), 0),
        TrigCoeff::new(ThetaForm::cos().neg(), 1),
        TrigCoeff::zero(),
    )
}

pub fn l_plus() -> LadderOperator {
    l_su2(LadderSign::Plus)
}

pub fn l_minus() -> LadderOperator {
    l_su2(LadderSign::Minus)
}

/// `Lz = -i d/dphi`: multiplies mode m by m.
pub fn l_z() -> LadderOperator {
    LadderOperator::new(
        0,
        TrigCoeff::zero(),
        TrigCoeff::new(ThetaForm::one(), 0),
        TrigCoeff::zero(),
    )
}

/// `J+-(l) = +- sin(theta) d/dtheta + l cos(theta)`, no mode shift.
pub fn j_op(l: i64, sign: LadderSign) -> LadderOperator {
    let s = sign_factor(sign);
    LadderOperator::new(
        0,
        TrigCoeff::new(ThetaForm::sin().scale(&Scalar::from_integer(s)), 0),
        TrigCoeff::zero(),
        TrigCoeff::new(ThetaForm::cos().scale(&Scalar::from_integer(l)), 0),
    )
}

/// Shared azimuthal part of the simultaneous-shift families:
/// `i (1/sin + sin) d/dphi` contributes `b = -(2 - x^2)/sin`.
fn k_i_b_coeff() -> TrigCoeff {
    TrigCoeff::new(
        ThetaForm::new(
            Poly::new(vec![
                Scalar::from_integer(-2),
                Scalar::zero(),
                Scalar::one(),
            ]),
            Poly::zero(),
        ),
        1,
    )
}

/// `K+-^d = e^(+-i phi) (+- cos d/dtheta + i (1/sin + sin) d/dphi
///          - (d - 1/2 +- 1/2) sin)`.
pub fn k_op(d: i64, sign: LadderSign) -> LadderOperator {
    let s = sign_factor(sign);
    let c_factor = match sign {
        LadderSign::Plus => -d,
        LadderSign::Minus => -(d - 1),
    };
    LadderOperator::new(
        s,
        TrigCoeff::new(ThetaForm::cos().scale(&Scalar::from_integer(s)), 0),
        k_i_b_coeff(),
        TrigCoeff::new(ThetaForm::sin().scale(&Scalar::from_integer(c_factor)), 0),
    )
}

/// `I+-^s = e^(+-i phi) (+- cos d/dtheta + i (1/sin + sin) d/dphi
///          + (s - 1/2 -+ 1/2) sin)`.
pub fn i_op(s_param: i64, sign: LadderSign) -> LadderOperator {
    let s = sign_factor(sign);
    let c_factor = match sign {
        LadderSign::Plus => s_param - 1,
        LadderSign::Minus => s_param,
    };
    LadderOperator::new(
        s,
        TrigCoeff::new(ThetaForm::cos().scale(&Scalar::from_integer(s)), 0),
        k_i_b_coeff(),
        TrigCoeff::new(ThetaForm::sin().scale(&Scalar::from_integer(c_factor)), 0),
    )
}

/// Mixed simultaneous-shift operators. The same-direction pair is
/// `e^(+-i phi) (+- cos d/dtheta + (i/sin) d/dphi - l sin)`; the
/// opposite-direction pair carries `+ l sin` instead.
pub fn a_op(l: i64, kind: MixedKind) -> LadderOperator {
    let (delta, c_sign) = match kind {
        MixedKind::PlusPlus => (1, -1),
        MixedKind::MinusMinus => (-1, -1),
        MixedKind::MinusPlus => (1, 1),
        MixedKind::PlusMinus => (-1, 1),
    };
    LadderOperator::new(
        delta,
        TrigCoeff::new(ThetaForm::cos().scale(&Scalar::from_integer(delta)), 0),
        TrigCoeff::new(ThetaForm::one().neg(), 1),
        TrigCoeff::new(ThetaForm::sin().scale(&Scalar::from_integer(c_sign * l)), 0),
    )
}

/// Every named operator family, with its integer parameter where one
/// applies. `KZ` and `IZ` are aliases of `LZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorFamily {
    LPlus,
    LMinus,
    LZ,
    JPlus(i64),
    JMinus(i64),
    KPlus(i64),
    KMinus(i64),
    KZ,
    IPlus(i64),
    IMinus(i64),
    IZ,
    APlusPlus(i64),
    AMinusMinus(i64),
    AMinusPlus(i64),
    APlusMinus(i64),
}

impl OperatorFamily {
    pub fn operator(&self) -> LadderOperator {
        match *self {
            Self::LPlus => l_plus(),
            Self::LMinus => l_minus(),
            Self::LZ | Self::KZ | Self::IZ => l_z(),
            Self::JPlus(l) => j_op(l, LadderSign::Plus),
            Self::JMinus(l) => j_op(l, LadderSign::Minus),
            Self::KPlus(d) => k_op(d, LadderSign::Plus),
            Self::KMinus(d) => k_op(d, LadderSign::Minus),
            Self::IPlus(s) => i_op(s, LadderSign::Plus),
            Self::IMinus(s) => i_op(s, LadderSign::Minus),
            Self::APlusPlus(l) => a_op(l, MixedKind::PlusPlus),
            Self::AMinusMinus(l) => a_op(l, MixedKind::MinusMinus),
            Self::AMinusPlus(l) => a_op(l, MixedKind::MinusPlus),
            Self::APlusMinus(l) => a_op(l, MixedKind::PlusMinus),
        }
    }
}

fn sqrt_product(ratio: Rational, f1: i64, f2: i64) -> Result<Scalar, AlgebraError> {
    Scalar::sqrt_rational(&(ratio * int(f1) * int(f2)))
}

/// `L+ Y_l^(m-1) = c Y_l^m` and `L- Y_l^m = c Y_l^(m-1)` share
/// `c = sqrt((l - m + 1)(l + m))`.
pub fn su2_ladder_coeff(l: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(int(1), l - m + 1, l + m)
}

/// `J+(l) Y_(l-1)^m = c Y_l^m`, `c = sqrt((2l-1)/(2l+1) (l-m)(l+m))`.
pub fn j_raise_coeff(l: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(rat(2 * l - 1, 2 * l + 1), l - m, l + m)
}

/// `J-(l) Y_l^m = c Y_(l-1)^m`, `c = sqrt((2l+1)/(2l-1) (l-m)(l+m))`.
pub fn j_lower_coeff(l: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(rat(2 * l + 1, 2 * l - 1), l - m, l + m)
}

/// `K+^d Y_(m+d-2)^(m-1) = c Y_(m+d-1)^m`,
/// `c = sqrt((2m+2d-3)/(2m+2d-1) (2m+d-2)(2m+d-1))`.
pub fn k_raise_coeff(d: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(
        rat(2 * m + 2 * d - 3, 2 * m + 2 * d - 1),
        2 * m + d - 2,
        2 * m + d - 1,
    )
}

/// `K-^d Y_(m+d-1)^m = c Y_(m+d-2)^(m-1)`,
/// `c = sqrt((2m+2d-1)/(2m+2d-3) (2m+d-2)(2m+d-1))`.
pub fn k_lower_coeff(d: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(
        rat(2 * m + 2 * d - 1, 2 * m + 2 * d - 3),
        2 * m + d - 2,
        2 * m + d - 1,
    )
}

/// `I+^s Y_(-m+s)^(m-1) = c Y_(-m+s-1)^m`,
/// `c = sqrt((-2m+2s+1)/(-2m+2s-1) (-2m+s)(-2m+s+1))`.
pub fn i_raise_coeff(s: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(
        rat(-2 * m + 2 * s + 1, -2 * m + 2 * s - 1),
        -2 * m + s,
        -2 * m + s + 1,
    )
}

/// `I-^s Y_(-m+s-1)^m = c Y_(-m+s)^(m-1)`,
/// `c = sqrt((-2m+2s-1)/(-2m+2s+1) (-2m+s)(-2m+s+1))`.
pub fn i_lower_coeff(s: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(
        rat(-2 * m + 2 * s - 1, -2 * m + 2 * s + 1),
        -2 * m + s,
        -2 * m + s + 1,
    )
}

/// `A++(l) Y_(l-1)^(m-1) = c Y_l^m`,
/// `c = sqrt((2l-1)/(2l+1) (l+m-1)(l+m))`.
pub fn a_raise_coeff(l: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(rat(2 * l - 1, 2 * l + 1), l + m - 1, l + m)
}

/// `A--(l) Y_l^m = c Y_(l-1)^(m-1)`,
/// `c = sqrt((2l+1)/(2l-1) (l+m-1)(l+m))`.
pub fn a_lower_coeff(l: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(rat(2 * l + 1, 2 * l - 1), l + m - 1, l + m)
}

/// `A-+(l+1) Y_(l+1)^(m-1) = c Y_l^m`,
/// `c = sqrt((2l+3)/(2l+1) (l-m+1)(l-m+2))`.
pub fn a_inverse_raise_coeff(l: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(rat(2 * l + 3, 2 * l + 1), l - m + 1, l - m + 2)
}

/// `A+-(l+1) Y_l^m = c Y_(l+1)^(m-1)`,
/// `c = sqrt((2l+1)/(2l+3) (l-m+1)(l-m+2))`.
pub fn a_inverse_lower_coeff(l: i64, m: i64) -> Result<Scalar, AlgebraError> {
    sqrt_product(rat(2 * l + 1, 2 * l + 3), l - m + 1, l - m + 2)
}

/// `L+ L- + Lz^2 - Lz`, applied by composition.
pub fn casimir_su2(f: &SphereFunction) -> Result<SphereFunction, AlgebraError> {
    let lz = l_z();
    let raise_lower = l_plus().apply(&l_minus().apply(f)?)?;
    let zz = lz.apply(&lz.apply(f)?)?;
    raise_lower.add(&zz)?.sub(&lz.apply(f)?)
}

/// `K+^d K-^d - 4 Kz^2 - 2(2d-3) Kz`, applied by composition.
pub fn casimir_u11_k(d: i64, f: &SphereFunction) -> Result<SphereFunction, AlgebraError> {
    let lz = l_z();
    let raise_lower = k_op(d, LadderSign::Plus).apply(&k_op(d, LadderSign::Minus).apply(f)?)?;
    let zz = lz.apply(&lz.apply(f)?)?.scale(&Scalar::from_integer(-4));
    let z = lz.apply(f)?.scale(&Scalar::from_integer(-2 * (2 * d - 3)));
    raise_lower.add(&zz)?.add(&z)
}

/// `I+^s I-^s - 4 Iz^2 + 2(2s+1) Iz`, applied by composition.
pub fn casimir_u11_i(s: i64, f: &SphereFunction) -> Result<SphereFunction, AlgebraError> {
    let lz = l_z();
    let raise_lower = i_op(s, LadderSign::Plus).apply(&i_op(s, LadderSign::Minus).apply(f)?)?;
    let zz = lz.apply(&lz.apply(f)?)?.scale(&Scalar::from_integer(-4));
    let z = lz.apply(f)?.scale(&Scalar::from_integer(2 * (2 * s + 1)));
    raise_lower.add(&zz)?.add(&z)
}

/// `J-(l+1) J+(l+1) f - J+(l) J-(l) f - (2l+1) f`; identically zero on
/// every smooth f, for any integer l.
pub fn shape_invariance_residual(
    l: i64,
    f: &SphereFunction,
) -> Result<SphereFunction, AlgebraError> {
    let first = j_op(l + 1, LadderSign::Minus).apply(&j_op(l + 1, LadderSign::Plus).apply(f)?)?;
    let second = j_op(l, LadderSign::Plus).apply(&j_op(l, LadderSign::Minus).apply(f)?)?;
    first
        .sub(&second)?
        .sub(&f.scale(&Scalar::from_integer(2 * l + 1)))
}

/// Residual of the adjoint-derived variant
/// `J-(l-1) J+(l+3) - J+(l+2) J-(l-2) = 2l+1`, tested as stated.
pub fn shape_invariance_adjoint_residual(
    l: i64,
    f: &SphereFunction,
) -> Result<SphereFunction, AlgebraError> {
    let first = j_op(l - 1, LadderSign::Minus).apply(&j_op(l + 3, LadderSign::Plus).apply(f)?)?;
    let second = j_op(l + 2, LadderSign::Plus).apply(&j_op(l - 2, LadderSign::Minus).apply(f)?)?;
    first
        .sub(&second)?
        .sub(&f.scale(&Scalar::from_integer(2 * l + 1)))
}

/// `[A, B] f - rhs(f)` for commutator identity checks.
pub fn commutator_residual(
    op_a: &LadderOperator,
    op_b: &LadderOperator,
    rhs: impl Fn(&SphereFunction) -> Result<SphereFunction, AlgebraError>,
    f: &SphereFunction,
) -> Result<SphereFunction, AlgebraError> {
    commutator(op_a, op_b, f)?.sub(&rhs(f)?)
}
