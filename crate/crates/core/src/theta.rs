//! Functions of the polar angle in the closed algebra
//! `p_even(cos t) + sin t * p_odd(cos t)`.
//!
//! The pair representation is closed under addition, multiplication,
//! multiplication by cos and sin, d/dt, and exact division by sin when
//! the result stays smooth.

use crate::error::AlgebraError;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `even(x) + sin(t) * odd(x)` with `x = cos(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ThetaForm {
    even: Poly,
    odd: Poly,
}

impl ThetaForm {
    pub fn new(even: Poly, odd: Poly) -> Self {
        Self { even, odd }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(Poly::one(), Poly::zero())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(Poly::constant(c), Poly::zero())
    }

    /// cos(t).
    pub fn cos() -> Self {
        Self::new(Poly::x(), Poly::zero())
    }

    /// sin(t).
    pub fn sin() -> Self {
        Self::new(Poly::zero(), Poly::one())
    }

    /// sin^k(t), split between the slots by the parity of k.
    pub fn sin_pow(k: u32) -> Result<Self, AlgebraError> {
        let mut even_part = Poly::one();
        for _ in 0..(k / 2) {
            even_part = even_part.mul(&Poly::one_minus_x2())?;
        }
        Ok(if k.is_multiple_of(2) {
            Self::new(even_part, Poly::zero())
        } else {
            Self::new(Poly::zero(), even_part)
        })
    }

    pub fn even(&self) -> &Poly {
        &self.even
    }

    pub fn odd(&self) -> &Poly {
        &self.odd
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(Self::new(
            self.even.add(&other.even)?,
            self.odd.add(&other.odd)?,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.even.neg(), self.odd.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.even.scale(s), self.odd.scale(s))
    }

    /// Product, using sin^2 = 1 - x^2 to fold the odd*odd part back into
    /// the even slot.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        let ee = self.even.mul(&other.even)?;
        let oo = self.odd.mul(&other.odd)?.mul(&Poly::one_minus_x2())?;
        let eo = self.even.mul(&other.odd)?;
        let oe = self.odd.mul(&other.even)?;
        Ok(Self::new(ee.add(&oo)?, eo.add(&oe)?))
    }

    /// Multiply by cos(t).
    pub fn mul_cos(&self) -> Self {
        Self::new(self.even.mul_x(), self.odd.mul_x())
    }

    /// Multiply by sin(t): `(e + s o) s = (1 - x^2) o + s e`.
    pub fn mul_sin(&self) -> Result<Self, AlgebraError> {
        Ok(Self::new(
            self.odd.mul(&Poly::one_minus_x2())?,
            self.even.clone(),
        ))
    }

    /// Exact d/dt:
    /// `d/dt[e(cos)] = -sin e'(cos)` and
    /// `d/dt[sin o(cos)] = cos o(cos) - (1 - x^2) o'(cos)`.
    pub fn derivative(&self) -> Result<Self, AlgebraError> {
        let even = self
            .odd
            .mul_x()
            .sub(&self.odd.derivative_x().mul(&Poly::one_minus_x2())?)?;
        let odd = self.even.derivative_x().neg();
        Ok(Self::new(even, odd))
    }

    /// Exact division by sin(t). Requires the even slot to be divisible
    /// by `1 - x^2` as a polynomial; otherwise the quotient leaves the
    /// smooth algebra.
    pub fn div_sin(&self) -> Result<Self, AlgebraError> {
        let (quot, rem) = self.even.div_one_minus_x2()?;
        if !rem.is_zero() {
            return Err(AlgebraError::NonSmoothResult(format!(
                "remainder of degree {:?} after dividing the even slot by 1 - x^2",
                rem.degree()
            )));
        }
        Ok(Self::new(self.odd.clone(), quot))
    }

    /// Substitute t -> pi - t: x -> -x, sin fixed.
    pub fn flip_x(&self) -> Self {
        Self::new(self.even.flip_x(), self.odd.flip_x())
    }

    pub fn eval_f64(&self, theta: f64) -> f64 {
        let x = theta.cos();
        self.even.eval_f64(x) + theta.sin() * self.odd.eval_f64(x)
    }

    /// Largest coefficient magnitude in double precision, for deviation
    /// reporting.
    pub fn float_magnitude(&self) -> f64 {
        self.even
            .coeffs()
            .iter()
            .chain(self.odd.coeffs())
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }
}
