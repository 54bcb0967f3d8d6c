//! Functions on the sphere as finite Fourier sums
//! `sum_m e^(i m phi) * F_m(theta)` with exact theta-form coefficients,
//! plus the first-order differential-operator application engine.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::AlgebraError;
use crate::scalar::Scalar;
use crate::theta::ThetaForm;

/// Finite map from Fourier mode m to a theta-form; no zero forms stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SphereFunction {
    modes: BTreeMap<i64, ThetaForm>,
}

impl SphereFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(m: i64, form: ThetaForm) -> Self {
        let mut modes = BTreeMap::new();
        if !form.is_zero() {
            modes.insert(m, form);
        }
        Self { modes }
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn modes(&self) -> &BTreeMap<i64, ThetaForm> {
        &self.modes
    }

    pub fn mode(&self, m: i64) -> Option<&ThetaForm> {
        self.modes.get(&m)
    }

    fn accumulate(&mut self, m: i64, form: &ThetaForm) -> Result<(), AlgebraError> {
        if form.is_zero() {
            return Ok(());
        }
        match self.modes.remove(&m) {
            None => {
                self.modes.insert(m, form.clone());
            }
            Some(existing) => {
                let sum = existing.add(form)?;
                if !sum.is_zero() {
                    self.modes.insert(m, sum);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        let mut out = self.clone();
        for (m, form) in &other.modes {
            out.accumulate(*m, form)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            modes: self.modes.iter().map(|(m, f)| (*m, f.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            modes: self.modes.iter().map(|(m, f)| (*m, f.scale(s))).collect(),
        }
    }

    /// Pointwise evaluation in double precision, for `theta` in `[0, pi]`.
    pub fn eval(&self, theta: f64, phi: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, form) in &self.modes {
            let phase = Complex64::from_polar(1.0, *m as f64 * phi);
            acc += phase * form.eval_f64(theta);
        }
        acc
    }

    /// Exact pullback under `(theta, phi) -> (pi - theta, phi + pi)`:
    /// mode m picks up `(-1)^m`, x -> -x, sin fixed.
    pub fn parity_reflect(&self) -> Self {
        Self {
            modes: self
                .modes
                .iter()
                .map(|(m, f)| {
                    let flipped = f.flip_x();
                    (
                        *m,
                        if m.rem_euclid(2) == 1 {
                            flipped.neg()
                        } else {
                            flipped
                        },
                    )
                })
                .collect(),
        }
    }

    /// Smoothness parity: mode m must sit in the even slot when m is even
    /// and in the odd slot when m is odd.
    pub fn has_smooth_parity(&self) -> bool {
        self.modes.iter().all(|(m, f)| {
            if m.rem_euclid(2) == 0 {
                f.odd().is_zero()
            } else {
                f.even().is_zero()
            }
        })
    }

    /// Largest mode magnitude, for quadrature sizing.
    pub fn mode_bound(&self) -> i64 {
        self.modes.keys().map(|m| m.abs()).max().unwrap_or(0)
    }

    /// Largest polynomial degree across slots, for quadrature sizing.
    pub fn degree_bound(&self) -> usize {
        self.modes
            .values()
            .map(|f| {
                let e = f.even().degree().map_or(0, |d| d);
                let o = f.odd().degree().map_or(0, |d| d + 1);
                e.max(o)
            })
            .max()
            .unwrap_or(0)
    }

    /// Largest coefficient magnitude in double precision.
    pub fn float_magnitude(&self) -> f64 {
        self.modes
            .values()
            .map(ThetaForm::float_magnitude)
            .fold(0.0, f64::max)
    }
}

/// One trig-Laurent coefficient of a ladder operator: a theta-form
/// divided by `sin^sin_pow`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigCoeff {
    pub num: ThetaForm,
    pub sin_pow: u32,
}

impl TrigCoeff {
    pub fn new(num: ThetaForm, sin_pow: u32) -> Self {
        Self { num, sin_pow }
    }

    pub fn zero() -> Self {
        Self::new(ThetaForm::zero(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

/// First-order differential operator descriptor. Acting on a definite
/// Fourier mode,
///
/// `op (e^(i m phi) f) = e^(i (m + delta_m) phi) (a f' + m b f + c f)`.
///
/// An operator term `i beta(theta) d/dphi` contributes `b = -beta`, since
/// `i (i m) = -m`; this keeps every coefficient real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderOperator {
    pub delta_m: i64,
    pub a_coeff: TrigCoeff,
    pub b_coeff: TrigCoeff,
    pub c_coeff: TrigCoeff,
}

impl LadderOperator {
    pub fn new(delta_m: i64, a_coeff: TrigCoeff, b_coeff: TrigCoeff, c_coeff: TrigCoeff) -> Self {
        debug_assert!(delta_m.abs() <= 1);
        Self {
            delta_m,
            a_coeff,
            b_coeff,
            c_coeff,
        }
    }

    /// Apply the operator exactly. Sin denominators of the three terms
    /// are cleared over a common power before dividing, so cancellations
    /// between terms resolve before the divisibility check.
    pub fn apply(&self, f: &SphereFunction) -> Result<SphereFunction, AlgebraError> {
        let mut out = SphereFunction::zero();
        for (&m, form) in f.modes() {
            let df = form.derivative()?;
            let b_scaled = TrigCoeff::new(
                self.b_coeff.num.scale(&Scalar::from_integer(m)),
                self.b_coeff.sin_pow,
            );
            let terms: [(&TrigCoeff, &ThetaForm); 3] = [
                (&self.a_coeff, &df),
                (&b_scaled, form),
                (&self.c_coeff, form),
            ];
            let common_pow = terms
                .iter()
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, _)| c.sin_pow)
                .max()
                .unwrap_or(0);
            let mut acc = ThetaForm::zero();
            for (coeff, factor) in terms {
                if coeff.is_zero() || factor.is_zero() {
                    continue;
                }
                let mut term = coeff.num.mul(factor)?;
                for _ in coeff.sin_pow..common_pow {
                    term = term.mul_sin()?;
                }
                acc = acc.add(&term)?;
            }
            for _ in 0..common_pow {
                acc = acc.div_sin()?;
            }
            out.accumulate(m + self.delta_m, &acc)?;
        }
        Ok(out)
    }
}

/// `[A, B] f = A(B f) - B(A f)`.
pub fn commutator(
    op_a: &LadderOperator,
    op_b: &LadderOperator,
    f: &SphereFunction,
) -> Result<SphereFunction, AlgebraError> {
    let ab = op_a.apply(&op_b.apply(f)?)?;
    let ba = op_b.apply(&op_a.apply(f)?)?;
    ab.sub(&ba)
}
