//! Exact inner product on the sphere, Gram matrices, adjointness
//! residuals, and an independent floating-point quadrature cross-check.
//!
//! The measure is `sin(theta) dtheta dphi`. The phi integral keeps
//! matching Fourier modes with a factor 2 pi; in `x = cos(theta)` the
//! even-slot integrand reduces to `int x^k dx` (rational) and the
//! odd-slot integrand to `int x^(2n) sqrt(1 - x^2) dx` (rational times
//! pi, computed from a recurrence validated against the quadrature
//! oracle).

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::AlgebraError;
use crate::harmonics::{closed_form, HarmonicIndex};
use crate::scalar::{rat, Rational, Scalar};
use crate::sphere::{LadderOperator, SphereFunction};
use crate::theta::ThetaForm;

/// `int_{-1}^{1} x^k dx` as a rational.
fn monomial_integral(k: usize) -> Rational {
    if k % 2 == 1 {
        Rational::from_integer(0.into())
    } else {
        rat(2, (k + 1) as i64)
    }
}

/// `int_{-1}^{1} x^(2n) sqrt(1 - x^2) dx / pi` from the recurrence
/// `w_0 = 1/2`, `w_n = w_(n-1) (2n - 1) / (2n + 2)`.
fn wallis_ratio(n: usize) -> Rational {
    let mut w = rat(1, 2);
    for k in 1..=n {
        w *= rat(2 * k as i64 - 1, 2 * k as i64 + 2);
    }
    w
}

/// `int_0^pi F(theta) sin(theta) dtheta` for a theta-form F, exact.
fn integrate_theta(form: &ThetaForm) -> Result<Scalar, AlgebraError> {
    let mut even_part = Scalar::zero();
    for (k, c) in form.even().coeffs().iter().enumerate() {
        let w = monomial_integral(k);
        if !w.is_zero() {
            even_part = even_part.checked_add(&c.mul(&Scalar::from_rational(w)))?;
        }
    }
    let mut odd_part = Scalar::zero();
    for (k, c) in form.odd().coeffs().iter().enumerate() {
        if k % 2 == 0 {
            let w = wallis_ratio(k / 2);
            odd_part = odd_part.checked_add(&c.mul(&Scalar::from_rational(w)))?;
        }
    }
    even_part.checked_add(&odd_part.times_pi_half_pow(2))
}

/// Exact `int conj(f) g dOmega`. All stored coefficients are real, so
/// conjugation only pairs equal Fourier modes.
pub fn inner_exact(f: &SphereFunction, g: &SphereFunction) -> Result<Scalar, AlgebraError> {
    let mut acc = Scalar::zero();
    for (m, f_form) in f.modes() {
        if let Some(g_form) = g.mode(*m) {
            let prod = f_form.mul(g_form)?;
            acc = acc.checked_add(&integrate_theta(&prod)?)?;
        }
    }
    Ok(acc.mul(&Scalar::from_integer(2).times_pi_half_pow(2)))
}

/// Pairwise exact inner products of harmonics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramResult {
    pub indices: Vec<HarmonicIndex>,
    pub matrix: Vec<Vec<Scalar>>,
}

pub fn gram(indices: &[HarmonicIndex]) -> Result<GramResult, AlgebraError> {
    let functions = indices
        .iter()
        .map(|idx| closed_form(idx.l, idx.m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut matrix = Vec::with_capacity(indices.len());
    for f in &functions {
        let mut row = Vec::with_capacity(indices.len());
        for g in &functions {
            row.push(inner_exact(f, g)?);
        }
        matrix.push(row);
    }
    Ok(GramResult {
        indices: indices.to_vec(),
        matrix,
    })
}

/// `<A f, g> - <f, B g>`: zero when B is the adjoint of A under the
/// convention that pairs the operator image in the first slot.
pub fn adjoint_check(
    op_a: &LadderOperator,
    op_b: &LadderOperator,
    f: &SphereFunction,
    g: &SphereFunction,
) -> Result<Scalar, AlgebraError> {
    let lhs = inner_exact(&op_a.apply(f)?, g)?;
    let rhs = inner_exact(f, &op_b.apply(g)?)?;
    lhs.checked_sub(&rhs)
}

/// `<f, A g> - <B f, g>`: the transpose pairing convention.
pub fn adjoint_check_transpose(
    op_a: &LadderOperator,
    op_b: &LadderOperator,
    f: &SphereFunction,
    g: &SphereFunction,
) -> Result<Scalar, AlgebraError> {
    let lhs = inner_exact(f, &op_a.apply(g)?)?;
    let rhs = inner_exact(&op_b.apply(f)?, g)?;
    lhs.checked_sub(&rhs)
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..60 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((x, w));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Numeric `int conj(f) g dOmega`: Gauss-Legendre in `x = cos(theta)`
/// crossed with the uniform trapezoid rule in phi. Exact for
/// band-limited integrands once `n_theta` and `n_phi` exceed the joint
/// degree.
pub fn inner_numeric(
    f: &SphereFunction,
    g: &SphereFunction,
    n_theta: usize,
    n_phi: usize,
) -> Complex64 {
    assert!(n_theta >= 2 && n_phi >= 1);
    let nodes = gauss_legendre(n_theta);
    let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for &(x, w) in &nodes {
        let theta = x.acos();
        for j in 0..n_phi {
            let phi = dphi * j as f64;
            acc += w * dphi * f.eval(theta, phi).conj() * g.eval(theta, phi);
        }
    }
    acc
}

/// Quadrature sizes with an exactness margin for products of two
/// functions of degree at most `l_max`.
pub fn default_quadrature_size(l_max: i64) -> usize {
    (2 * l_max.max(1) + 4) as usize
}
