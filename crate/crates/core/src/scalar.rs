//! Exact scalar tower: arbitrary-precision rationals, finite sums of
//! rational multiples of square roots of squarefree integers, and an
//! explicit half-integer power of pi.
//!
//! A [`Scalar`] has the form `(sum_i q_i * sqrt(r_i)) * pi^(e/2)` with the
//! `r_i` distinct squarefree positive integers (radicand 1 is the rational
//! part). Square roots of distinct squarefree integers are linearly
//! independent over the rationals, so a canonical `Scalar` is zero iff its
//! term set is empty; equality is plain structural equality.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (guaranteed by `num_rational`).
pub type Rational = BigRational;

/// Small-integer rational constructor.
pub fn rat(numerator: i64, denominator: i64) -> Rational {
    Rational::new(BigInt::from(numerator), BigInt::from(denominator))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact factorial; stands in for Gamma(n + 1) at integer arguments.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Default trial-division bound for squarefree extraction.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Splits `n` as `root^2 * free` with `free` squarefree, by trial division
/// up to `bound`. Any cofactor left after trial division is certified
/// prime, a square of a prime, or a product of two distinct primes; inputs
/// needing more than that are rejected rather than guessed at.
fn squarefree_split(n: &BigUint, bound: u64) -> Result<(BigUint, BigUint), AlgebraError> {
    let mut rem = n.clone();
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    let one = BigUint::one();

    let mut p: u64 = 2;
    loop {
        if rem == one {
            return Ok((root, free));
        }
        let bp = BigUint::from(p);
        if &bp * &bp > rem {
            // no factor <= sqrt(rem): the cofactor is prime
            free *= rem;
            return Ok((root, free));
        }
        if p > bound {
            break;
        }
        if (&rem % &bp).is_zero() {
            let mut exp: u32 = 0;
            loop {
                let (q, r) = rem.div_rem(&bp);
                if !r.is_zero() {
                    break;
                }
                rem = q;
                exp += 1;
            }
            if exp % 2 == 1 {
                free *= &bp;
            }
            root *= bp.pow(exp / 2);
        }
        p = if p == 2 { 3 } else { p + 2 };
    }

    // rem > 1 has no prime factor <= bound and exceeds bound^2.
    let bound_big = BigUint::from(bound);
    let bound_sq = &bound_big * &bound_big;
    let s = rem.sqrt();
    if &s * &s == rem {
        if s <= bound_sq {
            // s has no factor <= bound and s <= bound^2, hence s is prime
            root *= s;
            return Ok((root, free));
        }
    } else if rem < &bound_sq * &bound_big {
        // not a square, no factor <= bound, below bound^3: a product of
        // two distinct primes, hence squarefree
        free *= rem;
        return Ok((root, free));
    }
    Err(AlgebraError::FactorizationFailure(rem.to_string(), bound))
}

/// Finite sum `sum_i q_i * sqrt(r_i)` over distinct squarefree positive
/// radicands; radicand 1 is the rational part. Canonical: no zero
/// coefficients, map ordering fixes term order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RadicalSum {
    terms: BTreeMap<BigUint, Rational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(BigUint::one(), q);
        }
        Self { terms }
    }

    /// Single term `coefficient * sqrt(radicand)`; the radicand must
    /// already be squarefree (enforced by the `Scalar` constructors).
    fn single(radicand: BigUint, coefficient: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(radicand, coefficient);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate `(radicand, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (rad, coeff) in &other.terms {
            let entry = terms.entry(rad.clone()).or_insert_with(Rational::zero);
            *entry += coeff;
            if entry.is_zero() {
                terms.remove(rad);
            }
        }
        Self { terms }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(r, c)| (r.clone(), -c)).collect(),
        }
    }

    /// Product of two sums. `sqrt(r1) * sqrt(r2) = g * sqrt((r1/g)(r2/g))`
    /// with `g = gcd(r1, r2)`; the product of the cofactors is squarefree
    /// because both inputs are.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<BigUint, Rational> = BTreeMap::new();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &other.terms {
                let g = r1.gcd(r2);
                let rad = (r1 / &g) * (r2 / &g);
                let coeff = c1 * c2 * Rational::from_integer(BigInt::from(g));
                let entry = terms.entry(rad).or_insert_with(Rational::zero);
                *entry += coeff;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, c)| {
                let rad = r.to_f64().unwrap_or(f64::INFINITY).sqrt();
                c.to_f64().unwrap_or(f64::NAN) * rad
            })
            .sum()
    }
}

/// Exact scalar `body * pi^(pi_exponent / 2)`.
///
/// Addition is defined only between equal pi exponents (or when one side
/// is zero); zero is normalized to an empty body with exponent 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    body: RadicalSum,
    pi_exponent: i64,
}

impl Scalar {
    fn normalized(body: RadicalSum, pi_exponent: i64) -> Self {
        if body.is_zero() {
            Self {
                body,
                pi_exponent: 0,
            }
        } else {
            Self { body, pi_exponent }
        }
    }

    pub fn zero() -> Self {
        Self::normalized(RadicalSum::zero(), 0)
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::normalized(RadicalSum::from_rational(q), 0)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// Exact square root of a nonnegative rational, normalized as
    /// `sqrt(p/d) = sqrt(p*d)/d` with the radicand reduced to squarefree
    /// form. Uses the default trial-division bound.
    pub fn sqrt_rational(q: &Rational) -> Result<Self, AlgebraError> {
        Self::sqrt_rational_with_bound(q, TRIAL_DIVISION_BOUND)
    }

    pub fn sqrt_rational_with_bound(q: &Rational, bound: u64) -> Result<Self, AlgebraError> {
        if q.is_negative() {
            return Err(AlgebraError::NegativeRadicand(q.to_string()));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let num = q.numer().to_biguint().expect("nonnegative numerator");
        let den = q.denom().to_biguint().expect("positive denominator");
        let (root, free) = squarefree_split(&(&num * &den), bound)?;
        let coeff = Rational::new(BigInt::from(root), BigInt::from(den));
        Ok(Self::normalized(RadicalSum::single(free, coeff), 0))
    }

    /// Multiply by `pi^(e/2)`.
    pub fn times_pi_half_pow(&self, e: i64) -> Self {
        Self::normalized(self.body.clone(), self.pi_exponent + e)
    }

    pub fn pi_exponent(&self) -> i64 {
        self.pi_exponent
    }

    pub fn body(&self) -> &RadicalSum {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_exponent != other.pi_exponent {
            return Err(AlgebraError::PiExponentMismatch(
                self.pi_exponent,
                other.pi_exponent,
            ));
        }
        Ok(Self::normalized(
            self.body.add(&other.body),
            self.pi_exponent,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::normalized(self.body.neg(), self.pi_exponent)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(
            self.body.mul(&other.body),
            self.pi_exponent + other.pi_exponent,
        )
    }

    /// Multiplicative inverse, defined for single-term scalars only:
    /// `1/(q sqrt(r) pi^(e/2)) = (1/(q r)) sqrt(r) pi^(-e/2)`.
    pub fn invert(&self) -> Option<Self> {
        let mut it = self.body.terms();
        let (rad, coeff) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        let inv_coeff =
            Rational::one() / (coeff * Rational::from_integer(BigInt::from(rad.clone())));
        Some(Self::normalized(
            RadicalSum::single(rad.clone(), inv_coeff),
            -self.pi_exponent,
        ))
    }

    /// If the scalar is a plain rational (radicand 1, no pi), return it.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.pi_exponent != 0 {
            return None;
        }
        let mut it = self.body.terms();
        let (rad, coeff) = it.next()?;
        if it.next().is_some() || !rad.is_one() {
            return None;
        }
        Some(coeff.clone())
    }

    /// Double-precision evaluation; pi from the platform constant.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        self.body.to_f64() * std::f64::consts::PI.powf(self.pi_exponent as f64 / 2.0)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (rad, coeff) in self.body.terms() {
            let neg = coeff.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            if rad.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "\u{221a}{rad}")?;
            } else {
                write!(f, "{abs}\u{b7}\u{221a}{rad}")?;
            }
        }
        match self.pi_exponent {
            0 => {}
            2 => write!(f, "\u{b7}\u{3c0}")?,
            e if e % 2 == 0 => write!(f, "\u{b7}\u{3c0}^({})", e / 2)?,
            e => write!(f, "\u{b7}\u{3c0}^({e}/2)")?,
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt_int(n: i64) -> Scalar {
        Scalar::sqrt_rational(&int(n)).unwrap()
    }

    #[test]
    fn add_like_terms() {
        let half_sqrt3 = Scalar::from_rational(rat(1, 2)).mul(&sqrt_int(3));
        let sum = half_sqrt3.checked_add(&half_sqrt3).unwrap();
        assert_eq!(sum, sqrt_int(3));
    }

    #[test]
    fn add_zero_is_identity() {
        let x = Scalar::from_rational(rat(7, 3))
            .mul(&sqrt_int(5))
            .times_pi_half_pow(-1);
        assert_eq!(x.checked_add(&Scalar::zero()).unwrap(), x);
        assert_eq!(Scalar::zero().checked_add(&x).unwrap(), x);
    }

    #[test]
    fn add_rational_coefficients() {
        let a = Scalar::from_rational(rat(1, 2))
            .mul(&sqrt_int(2))
            .times_pi_half_pow(-1);
        let b = Scalar::from_rational(rat(1, 3))
            .mul(&sqrt_int(2))
            .times_pi_half_pow(-1);
        let expected = Scalar::from_rational(rat(5, 6))
            .mul(&sqrt_int(2))
            .times_pi_half_pow(-1);
        assert_eq!(a.checked_add(&b).unwrap(), expected);
    }

    #[test]
    fn add_mismatched_pi_exponents() {
        let a = Scalar::one();
        let b = Scalar::one().times_pi_half_pow(-1);
        assert_eq!(
            a.checked_add(&b),
            Err(AlgebraError::PiExponentMismatch(0, -1))
        );
    }

    #[test]
    fn mul_collapses_equal_radicals() {
        assert_eq!(sqrt_int(2).mul(&sqrt_int(2)), Scalar::from_integer(2));
    }

    #[test]
    fn mul_extracts_square_part() {
        // oracle: factor 60 by brute force into largest square times cofactor
        let n = 60i64;
        let mut root = 1i64;
        for k in 2..=n {
            if k * k <= n && n % (k * k) == 0 {
                root = k;
            }
        }
        assert_eq!(root, 2);
        let expected = Scalar::from_integer(root).mul(&sqrt_int(n / (root * root)));
        assert_eq!(sqrt_int(6).mul(&sqrt_int(10)), expected);
    }

    #[test]
    fn mul_adds_pi_exponents() {
        let q = Scalar::from_rational(rat(3, 4)).times_pi_half_pow(-1);
        let qp = Scalar::from_rational(rat(2, 5)).times_pi_half_pow(-1);
        let prod = q.mul(&qp);
        assert_eq!(prod.pi_exponent(), -2);
        assert_eq!(
            prod,
            Scalar::from_rational(rat(3, 10)).times_pi_half_pow(-2)
        );
    }

    #[test]
    fn sqrt_perfect_square() {
        assert_eq!(
            Scalar::sqrt_rational(&rat(4, 9)).unwrap(),
            Scalar::from_rational(rat(2, 3))
        );
    }

    #[test]
    fn sqrt_third_squares_back() {
        let s = Scalar::sqrt_rational(&rat(1, 3)).unwrap();
        assert_eq!(s, Scalar::from_rational(rat(1, 3)).mul(&sqrt_int(3)));
        assert_eq!(s.mul(&s), Scalar::from_rational(rat(1, 3)));
    }

    #[test]
    fn sqrt_zero() {
        assert_eq!(Scalar::sqrt_rational(&int(0)).unwrap(), Scalar::zero());
    }

    #[test]
    fn sqrt_negative_rejected() {
        assert!(matches!(
            Scalar::sqrt_rational(&int(-2)),
            Err(AlgebraError::NegativeRadicand(_))
        ));
    }

    #[test]
    fn zero_detection() {
        let diff = sqrt_int(2).checked_sub(&sqrt_int(2)).unwrap();
        assert!(diff.is_zero());

        // sqrt(8) normalizes to 2*sqrt(2)
        let half_sqrt8 = Scalar::from_rational(rat(1, 2)).mul(&sqrt_int(8));
        assert!(sqrt_int(2).checked_sub(&half_sqrt8).unwrap().is_zero());

        assert!(!sqrt_int(2).checked_sub(&sqrt_int(3)).unwrap().is_zero());
    }

    #[test]
    fn float_bridge() {
        let y00 = Scalar::from_rational(rat(1, 2)).times_pi_half_pow(-1);
        assert!((y00.to_f64() - 0.282_094_791_773_878_14).abs() < 1e-15);
        assert_eq!(Scalar::zero().to_f64(), 0.0);
        assert!((sqrt_int(2).to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn invert_single_term() {
        let s = Scalar::from_rational(rat(2, 3))
            .mul(&sqrt_int(5))
            .times_pi_half_pow(-1);
        let inv = s.invert().unwrap();
        assert_eq!(s.mul(&inv), Scalar::one());
        let two_terms = sqrt_int(2).checked_add(&sqrt_int(3)).unwrap();
        assert!(two_terms.invert().is_none());
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(16).to_string(), "20922789888000");
    }

    #[test]
    fn display_format() {
        let s = Scalar::from_rational(rat(1, 2))
            .mul(&sqrt_int(3))
            .times_pi_half_pow(-1);
        assert_eq!(s.to_string(), "1/2\u{b7}\u{221a}3\u{b7}\u{3c0}^(-1/2)");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn trial_division_certification_boundary() {
        // two primes above the bound but below bound^3: certified
        // squarefree without factoring
        let semiprime = int(101 * 103);
        let s = Scalar::sqrt_rational_with_bound(&semiprime, 100).unwrap();
        assert_eq!(s.mul(&s), Scalar::from_rational(semiprime));

        // a hidden square above the certification range is refused, not
        // guessed at: 101^2 * 103 has no factor <= 100 and is not a
        // perfect square
        let ambiguous = int(101 * 101 * 103);
        assert!(matches!(
            Scalar::sqrt_rational_with_bound(&ambiguous, 100),
            Err(AlgebraError::FactorizationFailure(_, 100))
        ));

        // the same input splits fine once the bound covers its factors
        let s = Scalar::sqrt_rational_with_bound(&ambiguous, 103).unwrap();
        assert_eq!(
            s,
            Scalar::from_integer(101).mul(&Scalar::sqrt_rational(&int(103)).unwrap())
        );
    }

    #[test]
    fn large_factorial_radicand() {
        // Gamma ratios overflow i64 well before l = 16; the split must
        // still be exact.
        let n = Rational::from_integer(BigInt::from(factorial(33)));
        let s = Scalar::sqrt_rational(&n).unwrap();
        assert_eq!(s.mul(&s), Scalar::from_rational(n));
    }
}
