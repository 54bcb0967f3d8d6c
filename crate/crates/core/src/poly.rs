//! Dense univariate polynomials over [`Scalar`], used for the even/odd
//! slots of theta-forms (the variable is x = cos(theta)).

use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// Dense polynomial, ascending powers, trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// The polynomial `1 - x^2` (that is, sin^2 in the x variable).
    pub fn one_minus_x2() -> Self {
        Self::new(vec![
            Scalar::one(),
            Scalar::zero(),
            Scalar::from_integer(-1),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.checked_add(b)?,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Ok(Self::new(out))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].checked_add(&a.mul(b))?;
            }
        }
        Ok(Self::new(out))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    /// Multiply by x.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Scalar::zero());
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// d/dx.
    pub fn derivative_x(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&Scalar::from_integer(i as i64)))
            .collect();
        Self::new(out)
    }

    /// Substitute x -> -x: negates odd-degree coefficients.
    pub fn flip_x(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    /// Long division by `1 - x^2`; returns `(quotient, remainder)` with
    /// `deg(remainder) <= 1`.
    pub fn div_one_minus_x2(&self) -> Result<(Self, Self), AlgebraError> {
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(2)];
        let mut k = rem.len();
        while k >= 3 {
            let lead = rem[k - 1].clone();
            if !lead.is_zero() {
                // subtract lead * x^(k-3) * (x^2 - 1)  ==  add lead*x^(k-3)*(1-x^2)
                quot[k - 3] = lead.neg();
                rem[k - 1] = Scalar::zero();
                rem[k - 3] = rem[k - 3].checked_add(&lead)?;
            }
            k -= 1;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn p(values: &[i64]) -> Poly {
        Poly::new(values.iter().map(|&v| Scalar::from_integer(v)).collect())
    }

    #[test]
    fn canonical_trailing_zeros() {
        let a = Poly::new(vec![
            Scalar::from_integer(1),
            Scalar::zero(),
            Scalar::zero(),
        ]);
        assert_eq!(a, p(&[1]));
        assert_eq!(a.degree(), Some(0));
        assert!(Poly::new(vec![Scalar::zero()]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 2]);
        let b = p(&[3, -2, 1]);
        assert_eq!(a.add(&b).unwrap(), p(&[4, 0, 1]));
        assert_eq!(a.mul(&b).unwrap(), p(&[3, 4, -3, 2]));
        assert_eq!(a.sub(&a).unwrap(), Poly::zero());
    }

    #[test]
    fn derivative() {
        // d/dx (1 + 3x^2 - x^4) = 6x - 4x^3
        assert_eq!(p(&[1, 0, 3, 0, -1]).derivative_x(), p(&[0, 6, 0, -4]));
        assert_eq!(p(&[7]).derivative_x(), Poly::zero());
    }

    #[test]
    fn division_by_one_minus_x2() {
        // (1 - x^2)(2 + x) = 2 + x - 2x^2 - x^3
        let prod = Poly::one_minus_x2().mul(&p(&[2, 1])).unwrap();
        let (q, r) = prod.div_one_minus_x2().unwrap();
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());

        let (q, r) = p(&[0, 1]).div_one_minus_x2().unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[0, 1]));

        // x^4 = (1 - x^2)(-x^2 - 1) + 1
        let (q, r) = p(&[0, 0, 0, 0, 1]).div_one_minus_x2().unwrap();
        assert_eq!(q, p(&[-1, 0, -1]));
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn eval_matches_rational_arithmetic() {
        let poly = Poly::new(vec![
            Scalar::from_rational(rat(1, 2)),
            Scalar::from_rational(int(-3)),
            Scalar::from_rational(rat(5, 4)),
        ]);
        let x = 0.37;
        let expected = 0.5 - 3.0 * x + 1.25 * x * x;
        assert!((poly.eval_f64(x) - expected).abs() < 1e-15);
    }
}
