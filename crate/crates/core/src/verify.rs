//! Identity verification suites with structured, deterministic reports.
//!
//! Each check runs as an independent task; a suite is a parallel map
//! over its tasks followed by an order-stabilizing sort, so reports are
//! byte-identical for a fixed config and seed. Exact checks pass only on
//! an exactly zero residual; `flagged` marks a reproducible discrepancy
//! between a displayed constant and its independently derived value,
//! with both attached to the record.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::AlgebraError;
use crate::harmonics::{
    closed_form, enumerate_subspace, extremal_i, extremal_j_family, extremal_k, extremal_su2,
    generate_via_i, generate_via_j, generate_via_k, generate_via_l_from, Extremal, HarmonicIndex,
    SubspaceLabel,
};
use crate::inner::{
    adjoint_check, adjoint_check_transpose, default_quadrature_size, inner_exact, inner_numeric,
};
use crate::operators::{
    a_inverse_lower_coeff, a_inverse_raise_coeff, a_lower_coeff, a_op, a_raise_coeff, casimir_su2,
    casimir_u11_i, casimir_u11_k, i_lower_coeff, i_op, i_raise_coeff, j_lower_coeff, j_op,
    j_raise_coeff, k_lower_coeff, k_op, k_raise_coeff, l_minus, l_plus, l_z, su2_ladder_coeff,
    LadderSign, MixedKind,
};
use crate::scalar::{rat, Scalar};
use crate::sphere::{commutator, LadderOperator, SphereFunction};

/// Identity suites runnable by the report driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    #[serde(rename = "su2")]
    Su2,
    #[serde(rename = "ladder-l")]
    LadderL,
    #[serde(rename = "u11-K")]
    U11K,
    #[serde(rename = "u11-I")]
    U11I,
    #[serde(rename = "mixed-A")]
    MixedA,
    #[serde(rename = "adjoint")]
    Adjoint,
    #[serde(rename = "orthonormality")]
    Orthonormality,
    #[serde(rename = "generation")]
    Generation,
    #[serde(rename = "parity")]
    Parity,
    #[serde(rename = "all")]
    All,
}

impl Suite {
    pub const ALL_NAMES: [&'static str; 10] = [
        "su2",
        "ladder-l",
        "u11-K",
        "u11-I",
        "mixed-A",
        "adjoint",
        "orthonormality",
        "generation",
        "parity",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "su2" => Ok(Self::Su2),
            "ladder-l" => Ok(Self::LadderL),
            "u11-K" => Ok(Self::U11K),
            "u11-I" => Ok(Self::U11I),
            "mixed-A" => Ok(Self::MixedA),
            "adjoint" => Ok(Self::Adjoint),
            "orthonormality" => Ok(Self::Orthonormality),
            "generation" => Ok(Self::Generation),
            "parity" => Ok(Self::Parity),
            "all" => Ok(Self::All),
            other => Err(format!(
                "unknown suite '{other}' (expected one of: {})",
                Self::ALL_NAMES.join(", ")
            )),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::Su2 => "su2",
            Self::LadderL => "ladder-l",
            Self::U11K => "u11-K",
            Self::U11I => "u11-I",
            Self::MixedA => "mixed-A",
            Self::Adjoint => "adjoint",
            Self::Orthonormality => "orthonormality",
            Self::Generation => "generation",
            Self::Parity => "parity",
            Self::All => "all",
        };
        f.write_str(name)
    }
}

/// Suite parameters. Defaults: `l_max = 8`, `d_max = s_max = 9`,
/// `random_trials = 20`, `seed = 0`, `numeric_tolerance = 1e-10`.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub l_max: i64,
    pub d_max: i64,
    pub s_max: i64,
    pub random_trials: usize,
    pub seed: u64,
    pub numeric_tolerance: f64,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            l_max: 8,
            d_max: 9,
            s_max: 9,
            random_trials: 20,
            seed: 0,
            numeric_tolerance: 1e-10,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Flagged,
}

/// One verified identity instance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub params: String,
    pub status: CheckStatus,
    pub exact_zero: bool,
    pub float_dev: f64,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

/// Full report of a suite run; serializes to the shipped JSON schema.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub config: SuiteConfig,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn fail_count(&self) -> usize {
        self.summary.fail
    }
}

type CheckTask = Box<dyn Fn() -> CheckRecord + Send + Sync>;

fn record_from_residual(
    id: &str,
    params: String,
    residual: Result<SphereFunction, AlgebraError>,
) -> CheckRecord {
    match residual {
        Ok(res) => {
            let exact_zero = res.is_zero();
            CheckRecord {
                id: id.to_string(),
                params,
                status: if exact_zero {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                exact_zero,
                float_dev: res.float_magnitude(),
                note: String::new(),
            }
        }
        Err(e) => CheckRecord {
            id: id.to_string(),
            params,
            status: CheckStatus::Fail,
            exact_zero: false,
            float_dev: 0.0,
            note: e.to_string(),
        },
    }
}

fn residual_task<F>(id: &'static str, params: String, compute: F) -> CheckTask
where
    F: Fn() -> Result<SphereFunction, AlgebraError> + Send + Sync + 'static,
{
    Box::new(move || record_from_residual(id, params.clone(), compute()))
}

/// Seeded rational-coefficient combination of harmonics with degree at
/// most `l_max`; smooth by construction, so operator application cannot
/// legitimately error on it.
fn random_smooth(rng: &mut ChaCha8Rng, l_max: i64) -> SphereFunction {
    let mut f = SphereFunction::zero();
    for _ in 0..3 {
        let l = rng.gen_range(0..=l_max);
        let m = rng.gen_range(-l..=l);
        let num = loop {
            let n = rng.gen_range(-9..=9i64);
            if n != 0 {
                break n;
            }
        };
        let den = rng.gen_range(1..=9i64);
        let term = closed_form(l, m)
            .expect("valid harmonic index")
            .scale(&Scalar::from_rational(rat(num, den)));
        f = f.add(&term).expect("harmonic combinations share pi^(-1/2)");
    }
    f
}

/// Companion function supported on the modes of `base` shifted by
/// `delta_m`, so adjoint pairings are not vacuously zero.
fn random_smooth_matched(
    rng: &mut ChaCha8Rng,
    l_max: i64,
    delta_m: i64,
    base: &SphereFunction,
) -> SphereFunction {
    let mut g = SphereFunction::zero();
    for &m in base.modes().keys() {
        let target_m = m + delta_m;
        let l_min = target_m.abs();
        let l = rng.gen_range(l_min..=l_max.max(l_min));
        let num = loop {
            let n = rng.gen_range(-9..=9i64);
            if n != 0 {
                break n;
            }
        };
        let den = rng.gen_range(1..=9i64);
        let term = closed_form(l, target_m)
            .expect("valid harmonic index")
            .scale(&Scalar::from_rational(rat(num, den)));
        g = g.add(&term).expect("harmonic combinations share pi^(-1/2)");
    }
    g
}

fn suite_rng(cfg: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        cfg.seed
            .wrapping_add(salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)),
    )
}

fn all_indices(l_max: i64) -> Vec<HarmonicIndex> {
    (0..=l_max)
        .flat_map(|l| (-l..=l).map(move |m| HarmonicIndex { l, m }))
        .collect()
}

/// `op(source) - coeff * target`; `target = None` encodes annihilation.
fn ladder_residual(
    op: &LadderOperator,
    source: (i64, i64),
    coeff: &Scalar,
    target: Option<(i64, i64)>,
) -> Result<SphereFunction, AlgebraError> {
    let lhs = op.apply(&closed_form(source.0, source.1)?)?;
    let rhs = match target {
        Some((l, m)) if !coeff.is_zero() => closed_form(l, m)?.scale(coeff),
        _ => SphereFunction::zero(),
    };
    lhs.sub(&rhs)
}

fn eigenvalue_residual(
    result: Result<SphereFunction, AlgebraError>,
    f: &SphereFunction,
    eigenvalue: i64,
) -> Result<SphereFunction, AlgebraError> {
    result?.sub(&f.scale(&Scalar::from_integer(eigenvalue)))
}

// ---------------------------------------------------------------------
// su(2) suite
// ---------------------------------------------------------------------

fn su2_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for idx in all_indices(cfg.l_max) {
        let (l, m) = (idx.l, idx.m);
        tasks.push(residual_task("eq6c", format!("l={l},m={m}"), move || {
            let y = closed_form(l, m)?;
            eigenvalue_residual(l_z().apply(&y), &y, m)
        }));
        tasks.push(residual_task(
            "eq10-casimir",
            format!("l={l},m={m}"),
            move || {
                let y = closed_form(l, m)?;
                eigenvalue_residual(casimir_su2(&y), &y, l * (l + 1))
            },
        ));
        if m > -l {
            tasks.push(residual_task("eq6a", format!("l={l},m={m}"), move || {
                ladder_residual(
                    &l_plus(),
                    (l, m - 1),
                    &su2_ladder_coeff(l, m)?,
                    Some((l, m)),
                )
            }));
            tasks.push(residual_task("eq6b", format!("l={l},m={m}"), move || {
                ladder_residual(
                    &l_minus(),
                    (l, m),
                    &su2_ladder_coeff(l, m)?,
                    Some((l, m - 1)),
                )
            }));
        }
    }
    for l in 0..=cfg.l_max {
        tasks.push(residual_task(
            "eq7-annihilation-minus",
            format!("l={l}"),
            move || l_minus().apply(&extremal_su2(l, Extremal::Lowest)?),
        ));
        tasks.push(residual_task(
            "eq7-annihilation-plus",
            format!("l={l}"),
            move || l_plus().apply(&extremal_su2(l, Extremal::Highest)?),
        ));
    }
    let mut rng = suite_rng(cfg, 1);
    for trial in 0..cfg.random_trials {
        let f = random_smooth(&mut rng, cfg.l_max);
        let f1 = f.clone();
        tasks.push(residual_task(
            "eq5-pm",
            format!("trial={trial}"),
            move || {
                let rhs = l_z().apply(&f1)?.scale(&Scalar::from_integer(2));
                commutator(&l_plus(), &l_minus(), &f1)?.sub(&rhs)
            },
        ));
        let f2 = f.clone();
        tasks.push(residual_task(
            "eq5-zp",
            format!("trial={trial}"),
            move || commutator(&l_z(), &l_plus(), &f2)?.sub(&l_plus().apply(&f2)?),
        ));
        tasks.push(residual_task(
            "eq5-zm",
            format!("trial={trial}"),
            move || commutator(&l_z(), &l_minus(), &f)?.add(&l_minus().apply(&f)?),
        ));
    }
    tasks
}

// ---------------------------------------------------------------------
// fixed-order ladder suite
// ---------------------------------------------------------------------

fn ladder_l_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for idx in all_indices(cfg.l_max) {
        let (l, m) = (idx.l, idx.m);
        if l > m.abs() {
            tasks.push(residual_task("eq14a", format!("l={l},m={m}"), move || {
                ladder_residual(
                    &j_op(l, LadderSign::Plus),
                    (l - 1, m),
                    &j_raise_coeff(l, m)?,
                    Some((l, m)),
                )
            }));
        }
        tasks.push(residual_task("eq14b", format!("l={l},m={m}"), move || {
            let target = if l > m.abs() { Some((l - 1, m)) } else { None };
            ladder_residual(
                &j_op(l, LadderSign::Minus),
                (l, m),
                &j_lower_coeff(l, m)?,
                target,
            )
        }));
    }

    let harmonic_indices = all_indices(cfg.l_max);
    let mut rng = suite_rng(cfg, 2);
    let random_functions: Vec<SphereFunction> = (0..cfg.random_trials)
        .map(|_| random_smooth(&mut rng, cfg.l_max))
        .collect();
    for l_param in -3..=8i64 {
        for idx in &harmonic_indices {
            let (l, m) = (idx.l, idx.m);
            tasks.push(residual_task(
                "eq13",
                format!("l_param={l_param},l={l},m={m}"),
                move || crate::operators::shape_invariance_residual(l_param, &closed_form(l, m)?),
            ));
            tasks.push(residual_task(
                "eq13-adjoint",
                format!("l_param={l_param},l={l},m={m}"),
                move || {
                    crate::operators::shape_invariance_adjoint_residual(
                        l_param,
                        &closed_form(l, m)?,
                    )
                },
            ));
        }
        for (trial, f) in random_functions.iter().enumerate() {
            let f1 = f.clone();
            tasks.push(residual_task(
                "eq13",
                format!("l_param={l_param},trial={trial}"),
                move || crate::operators::shape_invariance_residual(l_param, &f1),
            ));
            let f2 = f.clone();
            tasks.push(residual_task(
                "eq13-adjoint",
                format!("l_param={l_param},trial={trial}"),
                move || crate::operators::shape_invariance_adjoint_residual(l_param, &f2),
            ));
        }
    }
    for m in -cfg.l_max..=cfg.l_max {
        tasks.push(residual_task(
            "eq15-annihilation",
            format!("m={m}"),
            move || j_op(m.abs(), LadderSign::Minus).apply(&extremal_j_family(m)?),
        ));
    }
    tasks
}

// ---------------------------------------------------------------------
// u(1,1) K suite
// ---------------------------------------------------------------------

/// Exact-or-flagged comparison of a constructed function against the
/// orthonormal closed form: proportionality constants are extracted
/// exactly by projection onto the unit-norm reference.
fn seed_comparison_record(
    id: &'static str,
    params: String,
    built: Result<SphereFunction, AlgebraError>,
    reference: Result<SphereFunction, AlgebraError>,
) -> CheckRecord {
    let inner = || -> Result<CheckRecord, AlgebraError> {
        let built = built?;
        let reference = reference?;
        let diff = built.sub(&reference)?;
        if diff.is_zero() {
            return Ok(CheckRecord {
                id: id.to_string(),
                params: params.clone(),
                status: CheckStatus::Pass,
                exact_zero: true,
                float_dev: 0.0,
                note: String::new(),
            });
        }
        let ratio = inner_exact(&reference, &built)?;
        let proportional = built.sub(&reference.scale(&ratio))?.is_zero();
        if proportional {
            Ok(CheckRecord {
                id: id.to_string(),
                params: params.clone(),
                status: CheckStatus::Flagged,
                exact_zero: false,
                float_dev: diff.float_magnitude(),
                note: format!(
                    "displayed formula = ({ratio}) * orthonormal closed form; derived constant {ratio}"
                ),
            })
        } else {
            Ok(CheckRecord {
                id: id.to_string(),
                params: params.clone(),
                status: CheckStatus::Fail,
                exact_zero: false,
                float_dev: diff.float_magnitude(),
                note: "not proportional to the closed form".to_string(),
            })
        }
    };
    match inner() {
        Ok(rec) => rec,
        Err(e) => CheckRecord {
            id: id.to_string(),
            params,
            status: CheckStatus::Fail,
            exact_zero: false,
            float_dev: 0.0,
            note: e.to_string(),
        },
    }
}

fn u11_k_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for d in 1..=cfg.d_max {
        let members = enumerate_subspace(SubspaceLabel::DPlus(d), cfg.l_max);
        let lowest_l = d / 2;
        for idx in &members {
            let (l, m) = (idx.l, idx.m);
            tasks.push(residual_task("eq20c", format!("d={d},m={m}"), move || {
                let y = closed_form(l, m)?;
                eigenvalue_residual(l_z().apply(&y), &y, m)
            }));
            tasks.push(residual_task(
                "eq22-casimir",
                format!("d={d},m={m}"),
                move || {
                    let y = closed_form(l, m)?;
                    eigenvalue_residual(casimir_u11_k(d, &y), &y, (d - 1) * (d - 2))
                },
            ));
            if l > lowest_l {
                tasks.push(residual_task("eq20a", format!("d={d},m={m}"), move || {
                    ladder_residual(
                        &k_op(d, LadderSign::Plus),
                        (l - 1, m - 1),
                        &k_raise_coeff(d, m)?,
                        Some((l, m)),
                    )
                }));
            }
            let target = if l > lowest_l {
                Some((l - 1, m - 1))
            } else {
                None
            };
            tasks.push(residual_task("eq20b", format!("d={d},m={m}"), move || {
                ladder_residual(
                    &k_op(d, LadderSign::Minus),
                    (l, m),
                    &k_lower_coeff(d, m)?,
                    target,
                )
            }));
        }
        tasks.push(residual_task(
            "eq23-annihilation",
            format!("d={d}"),
            move || k_op(d, LadderSign::Minus).apply(&extremal_k(d)?),
        ));
        tasks.push(Box::new(move || {
            let l = d / 2;
            seed_comparison_record(
                "extremal-K-seed",
                format!("d={d}"),
                extremal_k(d),
                closed_form(l, l - d + 1),
            )
        }));

        let mut rng = suite_rng(cfg, 3 + d as u64);
        for trial in 0..cfg.random_trials {
            let f = random_smooth(&mut rng, cfg.l_max);
            let f1 = f.clone();
            tasks.push(residual_task(
                "eq19-commutator",
                format!("d={d},trial={trial}"),
                move || {
                    let rhs = l_z()
                        .apply(&f1)?
                        .scale(&Scalar::from_integer(-8))
                        .add(&f1.scale(&Scalar::from_integer(-4 * d + 2)))?;
                    commutator(&k_op(d, LadderSign::Plus), &k_op(d, LadderSign::Minus), &f1)?
                        .sub(&rhs)
                },
            ));
            let f2 = f.clone();
            tasks.push(residual_task(
                "eq19-kz-plus",
                format!("d={d},trial={trial}"),
                move || {
                    commutator(&l_z(), &k_op(d, LadderSign::Plus), &f2)?
                        .sub(&k_op(d, LadderSign::Plus).apply(&f2)?)
                },
            ));
            let f3 = f.clone();
            tasks.push(residual_task(
                "eq19-kz-minus",
                format!("d={d},trial={trial}"),
                move || {
                    commutator(&l_z(), &k_op(d, LadderSign::Minus), &f3)?
                        .add(&k_op(d, LadderSign::Minus).apply(&f3)?)
                },
            ));
            let f4 = f.clone();
            tasks.push(residual_task(
                "eq19-adjoint-variant",
                format!("d={d},trial={trial}"),
                move || {
                    let rhs = l_z()
                        .apply(&f4)?
                        .scale(&Scalar::from_integer(-8))
                        .add(&f4.scale(&Scalar::from_integer(-4 * d + 2)))?;
                    commutator(
                        &k_op(d + 2, LadderSign::Plus),
                        &k_op(d - 2, LadderSign::Minus),
                        &f4,
                    )?
                    .sub(&rhs)
                },
            ));
            tasks.push(residual_task(
                "eq21-commutes",
                format!("d={d},trial={trial}"),
                move || {
                    let raise = k_op(d, LadderSign::Plus);
                    casimir_u11_k(d, &raise.apply(&f)?)?.sub(&raise.apply(&casimir_u11_k(d, &f)?)?)
                },
            ));
        }
    }
    tasks
}

// ---------------------------------------------------------------------
// u(1,1) I suite
// ---------------------------------------------------------------------

fn u11_i_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    for s in 1..=cfg.s_max {
        let members = enumerate_subspace(SubspaceLabel::SMinus(s), cfg.l_max);
        for idx in &members {
            let (l, m) = (idx.l, idx.m);
            tasks.push(residual_task(
                "prop4-iz",
                format!("s={s},m={m}"),
                move || {
                    let y = closed_form(l, m)?;
                    eigenvalue_residual(l_z().apply(&y), &y, m)
                },
            ));
            tasks.push(residual_task(
                "prop4-casimir",
                format!("s={s},m={m}"),
                move || {
                    let y = closed_form(l, m)?;
                    eigenvalue_residual(casimir_u11_i(s, &y), &y, s * (s + 1))
                },
            ));
            // raising into this member from the next-lower order
            tasks.push(residual_task(
                "prop4-ladder-plus",
                format!("s={s},m={m}"),
                move || {
                    ladder_residual(
                        &i_op(s, LadderSign::Plus),
                        (l + 1, m - 1),
                        &i_raise_coeff(s, m)?,
                        Some((l, m)),
                    )
                },
            ));
            tasks.push(residual_task(
                "prop4-ladder-minus",
                format!("s={s},m={m}"),
                move || {
                    ladder_residual(
                        &i_op(s, LadderSign::Minus),
                        (l, m),
                        &i_lower_coeff(s, m)?,
                        Some((l + 1, m - 1)),
                    )
                },
            ));
        }
        tasks.push(residual_task(
            "prop4-annihilation",
            format!("s={s}"),
            move || i_op(s, LadderSign::Plus).apply(&extremal_i(s)?),
        ));
        tasks.push(Box::new(move || {
            let l = s / 2;
            seed_comparison_record(
                "extremal-I-seed",
                format!("s={s}"),
                extremal_i(s),
                closed_form(l, s - 1 - l),
            )
        }));

        let mut rng = suite_rng(cfg, 40 + s as u64);
        for trial in 0..cfg.random_trials {
            let f = random_smooth(&mut rng, cfg.l_max);
            let f1 = f.clone();
            tasks.push(residual_task(
                "eq28-commutator",
                format!("s={s},trial={trial}"),
                move || {
                    let rhs = l_z()
                        .apply(&f1)?
                        .scale(&Scalar::from_integer(-8))
                        .add(&f1.scale(&Scalar::from_integer(4 * s - 2)))?;
                    commutator(&i_op(s, LadderSign::Plus), &i_op(s, LadderSign::Minus), &f1)?
                        .sub(&rhs)
                },
            ));
            let f2 = f.clone();
            tasks.push(residual_task(
                "eq28-iz-plus",
                format!("s={s},trial={trial}"),
                move || {
                    commutator(&l_z(), &i_op(s, LadderSign::Plus), &f2)?
                        .sub(&i_op(s, LadderSign::Plus).apply(&f2)?)
                },
            ));
            let f3 = f.clone();
            tasks.push(residual_task(
                "eq28-iz-minus",
                format!("s={s},trial={trial}"),
                move || {
                    commutator(&l_z(), &i_op(s, LadderSign::Minus), &f3)?
                        .add(&i_op(s, LadderSign::Minus).apply(&f3)?)
                },
            ));
            let f4 = f.clone();
            tasks.push(residual_task(
                "eq28-adjoint-variant",
                format!("s={s},trial={trial}"),
                move || {
                    let rhs = l_z()
                        .apply(&f4)?
                        .scale(&Scalar::from_integer(-8))
                        .add(&f4.scale(&Scalar::from_integer(4 * s - 2)))?;
                    commutator(
                        &i_op(s - 2, LadderSign::Plus),
                        &i_op(s + 2, LadderSign::Minus),
                        &f4,
                    )?
                    .sub(&rhs)
                },
            ));
            tasks.push(residual_task(
                "prop4-commutes",
                format!("s={s},trial={trial}"),
                move || {
                    let lower = i_op(s, LadderSign::Minus);
                    casimir_u11_i(s, &lower.apply(&f)?)?.sub(&lower.apply(&casimir_u11_i(s, &f)?)?)
                },
            ));
        }
    }
    tasks
}

// ---------------------------------------------------------------------
// mixed-operator suite
// ---------------------------------------------------------------------

fn mixed_a_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    let def_l_max = cfg.l_max.min(6);
    let def_trials = cfg.random_trials.min(10);
    let mut rng = suite_rng(cfg, 70);
    for l in 1..=def_l_max {
        for trial in 0..def_trials {
            let f = random_smooth(&mut rng, cfg.l_max);
            let f1 = f.clone();
            tasks.push(residual_task(
                "eq25-pp-definition",
                format!("l={l},trial={trial}"),
                move || {
                    a_op(l, MixedKind::PlusPlus).apply(&f1)?.sub(&commutator(
                        &l_plus(),
                        &j_op(l, LadderSign::Plus),
                        &f1,
                    )?)
                },
            ));
            let f2 = f.clone();
            tasks.push(residual_task(
                "eq25-mm-definition",
                format!("l={l},trial={trial}"),
                move || {
                    a_op(l, MixedKind::MinusMinus).apply(&f2)?.add(&commutator(
                        &l_minus(),
                        &j_op(l, LadderSign::Minus),
                        &f2,
                    )?)
                },
            ));
            let f3 = f.clone();
            tasks.push(residual_task(
                "eq31-mp-definition",
                format!("l={l},trial={trial}"),
                move || {
                    a_op(l, MixedKind::MinusPlus).apply(&f3)?.add(&commutator(
                        &l_plus(),
                        &j_op(l, LadderSign::Minus),
                        &f3,
                    )?)
                },
            ));
            tasks.push(residual_task(
                "eq31-pm-definition",
                format!("l={l},trial={trial}"),
                move || {
                    a_op(l, MixedKind::PlusMinus).apply(&f)?.sub(&commutator(
                        &l_minus(),
                        &j_op(l, LadderSign::Plus),
                        &f,
                    )?)
                },
            ));
        }
    }

    for idx in all_indices(cfg.l_max) {
        let (l, m) = (idx.l, idx.m);
        if l >= 1 {
            if (m - 1).abs() < l {
                tasks.push(residual_task("eq26a", format!("l={l},m={m}"), move || {
                    ladder_residual(
                        &a_op(l, MixedKind::PlusPlus),
                        (l - 1, m - 1),
                        &a_raise_coeff(l, m)?,
                        Some((l, m)),
                    )
                }));
            }
            let target = if (m - 1).abs() < l {
                Some((l - 1, m - 1))
            } else {
                None
            };
            tasks.push(residual_task("eq26b", format!("l={l},m={m}"), move || {
                ladder_residual(
                    &a_op(l, MixedKind::MinusMinus),
                    (l, m),
                    &a_lower_coeff(l, m)?,
                    target,
                )
            }));
        }
        tasks.push(residual_task("eq32a", format!("l={l},m={m}"), move || {
            ladder_residual(
                &a_op(l + 1, MixedKind::MinusPlus),
                (l + 1, m - 1),
                &a_inverse_raise_coeff(l, m)?,
                Some((l, m)),
            )
        }));
        tasks.push(residual_task("eq32b", format!("l={l},m={m}"), move || {
            ladder_residual(
                &a_op(l + 1, MixedKind::PlusMinus),
                (l, m),
                &a_inverse_lower_coeff(l, m)?,
                Some((l + 1, m - 1)),
            )
        }));
    }
    tasks
}

// ---------------------------------------------------------------------
// adjointness suite
// ---------------------------------------------------------------------

const FIRST_SLOT_CONVENTION: &str = "<A f, g> = <f, adj(A) g>";
const TRANSPOSE_CONVENTION: &str = "<f, A g> = <adj(A) f, g>";

fn adjoint_pair_task(
    id: &'static str,
    params: String,
    op_a: LadderOperator,
    op_b: LadderOperator,
    f: SphereFunction,
    g: SphereFunction,
) -> CheckTask {
    Box::new(move || {
        let run = || -> Result<CheckRecord, AlgebraError> {
            let first = adjoint_check(&op_a, &op_b, &f, &g)?;
            if first.is_zero() {
                return Ok(CheckRecord {
                    id: id.to_string(),
                    params: params.clone(),
                    status: CheckStatus::Pass,
                    exact_zero: true,
                    float_dev: 0.0,
                    note: format!("convention {FIRST_SLOT_CONVENTION}"),
                });
            }
            let transpose = adjoint_check_transpose(&op_a, &op_b, &f, &g)?;
            if transpose.is_zero() {
                return Ok(CheckRecord {
                    id: id.to_string(),
                    params: params.clone(),
                    status: CheckStatus::Pass,
                    exact_zero: true,
                    float_dev: 0.0,
                    note: format!("convention {TRANSPOSE_CONVENTION}"),
                });
            }
            Ok(CheckRecord {
                id: id.to_string(),
                params: params.clone(),
                status: CheckStatus::Fail,
                exact_zero: false,
                float_dev: first.to_f64().abs().max(transpose.to_f64().abs()),
                note: "neither pairing convention validates".to_string(),
            })
        };
        match run() {
            Ok(rec) => rec,
            Err(e) => CheckRecord {
                id: id.to_string(),
                params: params.clone(),
                status: CheckStatus::Fail,
                exact_zero: false,
                float_dev: 0.0,
                note: e.to_string(),
            },
        }
    })
}

fn adjoint_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    let mut rng = suite_rng(cfg, 90);
    #[allow(clippy::type_complexity)]
    let pairs: Vec<(&'static str, String, LadderOperator, LadderOperator)> = {
        let mut v: Vec<(&'static str, String, LadderOperator, LadderOperator)> = vec![
            ("adjoint-L", "(L+, L-)".to_string(), l_plus(), l_minus()),
            ("adjoint-L", "(L-, L+)".to_string(), l_minus(), l_plus()),
            ("adjoint-Lz", "(Lz, Lz)".to_string(), l_z(), l_z()),
        ];
        for l in 0..=3 {
            v.push((
                "adjoint-J",
                format!("(J-({l}), J+({}))", l + 2),
                j_op(l, LadderSign::Minus),
                j_op(l + 2, LadderSign::Plus),
            ));
            v.push((
                "adjoint-J",
                format!("(J+({l}), J-({}))", l - 2),
                j_op(l, LadderSign::Plus),
                j_op(l - 2, LadderSign::Minus),
            ));
        }
        for d in 1..=cfg.d_max.min(4) {
            v.push((
                "adjoint-K",
                format!("(K-^{d}, K+^{})", d + 2),
                k_op(d, LadderSign::Minus),
                k_op(d + 2, LadderSign::Plus),
            ));
            v.push((
                "adjoint-K",
                format!("(K+^{d}, K-^{})", d - 2),
                k_op(d, LadderSign::Plus),
                k_op(d - 2, LadderSign::Minus),
            ));
        }
        for s in 1..=cfg.s_max.min(4) {
            v.push((
                "adjoint-I",
                format!("(I-^{s}, I+^{})", s - 2),
                i_op(s, LadderSign::Minus),
                i_op(s - 2, LadderSign::Plus),
            ));
            v.push((
                "adjoint-I",
                format!("(I+^{s}, I-^{})", s + 2),
                i_op(s, LadderSign::Plus),
                i_op(s + 2, LadderSign::Minus),
            ));
        }
        v
    };

    for trial in 0..cfg.random_trials {
        let f = random_smooth(&mut rng, cfg.l_max);
        for (id, pair_name, op_a, op_b) in &pairs {
            let g = random_smooth_matched(&mut rng, cfg.l_max, op_a.delta_m, &f);
            tasks.push(adjoint_pair_task(
                id,
                format!("pair={pair_name},trial={trial}"),
                op_a.clone(),
                op_b.clone(),
                f.clone(),
                g,
            ));
        }
    }
    tasks
}

// ---------------------------------------------------------------------
// orthonormality suite
// ---------------------------------------------------------------------

fn orthonormality_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    let indices = all_indices(cfg.l_max);
    let quad = default_quadrature_size(cfg.l_max);
    let tolerance = cfg.numeric_tolerance;
    let mut tasks: Vec<CheckTask> = Vec::new();
    for row in indices.clone() {
        let columns = indices.clone();
        tasks.push(Box::new(move || {
            let run = || -> Result<(bool, f64), AlgebraError> {
                let f = closed_form(row.l, row.m)?;
                let mut exact_ok = true;
                let mut worst = 0.0f64;
                for col in &columns {
                    let g = closed_form(col.l, col.m)?;
                    let exact = inner_exact(&f, &g)?;
                    let expected = if row == *col {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    };
                    let diff = exact.checked_sub(&expected)?;
                    if !diff.is_zero() {
                        exact_ok = false;
                        worst = worst.max(diff.to_f64().abs());
                    }
                }
                Ok((exact_ok, worst))
            };
            match run() {
                Ok((true, _)) => CheckRecord {
                    id: "eq3-gram".to_string(),
                    params: format!("l={},m={}", row.l, row.m),
                    status: CheckStatus::Pass,
                    exact_zero: true,
                    float_dev: 0.0,
                    note: String::new(),
                },
                Ok((false, worst)) => CheckRecord {
                    id: "eq3-gram".to_string(),
                    params: format!("l={},m={}", row.l, row.m),
                    status: CheckStatus::Fail,
                    exact_zero: false,
                    float_dev: worst,
                    note: "gram row deviates from the identity".to_string(),
                },
                Err(e) => CheckRecord {
                    id: "eq3-gram".to_string(),
                    params: format!("l={},m={}", row.l, row.m),
                    status: CheckStatus::Fail,
                    exact_zero: false,
                    float_dev: 0.0,
                    note: e.to_string(),
                },
            }
        }));

        let columns = indices.clone();
        tasks.push(Box::new(move || {
            let run = || -> Result<f64, AlgebraError> {
                let f = closed_form(row.l, row.m)?;
                let mut worst = 0.0f64;
                for col in &columns {
                    let g = closed_form(col.l, col.m)?;
                    let exact = inner_exact(&f, &g)?.to_f64();
                    let numeric = inner_numeric(&f, &g, quad, quad);
                    let dev = (numeric - num_complex::Complex64::new(exact, 0.0)).norm();
                    worst = worst.max(dev);
                }
                Ok(worst)
            };
            match run() {
                Ok(worst) => CheckRecord {
                    id: "eq3-numeric".to_string(),
                    params: format!("l={},m={}", row.l, row.m),
                    status: if worst <= tolerance {
                        CheckStatus::Pass
                    } else {
                        CheckStatus::Fail
                    },
                    exact_zero: false,
                    float_dev: worst,
                    note: format!("quadrature {quad}x{quad}, tolerance {tolerance:e}"),
                },
                Err(e) => CheckRecord {
                    id: "eq3-numeric".to_string(),
                    params: format!("l={},m={}", row.l, row.m),
                    status: CheckStatus::Fail,
                    exact_zero: false,
                    float_dev: 0.0,
                    note: e.to_string(),
                },
            }
        }));
    }
    tasks
}

// ---------------------------------------------------------------------
// generation-route suite
// ---------------------------------------------------------------------

fn generation_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    let mut tasks: Vec<CheckTask> = Vec::new();
    let l_cap = cfg.l_max.min(6);
    for idx in all_indices(l_cap) {
        let (l, m) = (idx.l, idx.m);
        tasks.push(residual_task(
            "gen-eq8-lowest",
            format!("l={l},m={m}"),
            move || generate_via_l_from(l, m, Extremal::Lowest)?.sub(&closed_form(l, m)?),
        ));
        tasks.push(residual_task(
            "gen-eq8-highest",
            format!("l={l},m={m}"),
            move || generate_via_l_from(l, m, Extremal::Highest)?.sub(&closed_form(l, m)?),
        ));
        tasks.push(residual_task(
            "gen-eq16",
            format!("l={l},m={m}"),
            move || generate_via_j(l, m)?.sub(&closed_form(l, m)?),
        ));
    }

    // K route over every family member with l <= cap, exact or flagged
    for d in 1..=(2 * l_cap + 1) {
        let members = enumerate_subspace(SubspaceLabel::DPlus(d), l_cap);
        let lowest_m = (d / 2) - d + 1;
        for idx in &members {
            let (l, m) = (idx.l, idx.m);
            tasks.push(Box::new(move || {
                seed_comparison_record(
                    "gen-route-K",
                    format!("d={d},m={m}"),
                    generate_via_k(d, m),
                    closed_form(l, m),
                )
            }));
            // telescoping-product oracle for the stated normalization
            tasks.push(Box::new(move || {
                let run = || -> Result<CheckRecord, AlgebraError> {
                    let mut product = Scalar::one();
                    for step_m in (lowest_m + 1)..=m {
                        product = product.mul(&k_raise_coeff(d, step_m)?);
                    }
                    let norm = generation_norm_k(d, m)?;
                    let diff = product.checked_sub(&norm)?;
                    let id = if d % 2 == 1 {
                        "gen-24a-normalization"
                    } else {
                        "gen-24b-normalization"
                    };
                    Ok(if diff.is_zero() {
                        CheckRecord {
                            id: id.to_string(),
                            params: format!("d={d},m={m}"),
                            status: CheckStatus::Pass,
                            exact_zero: true,
                            float_dev: 0.0,
                            note: String::new(),
                        }
                    } else {
                        CheckRecord {
                            id: id.to_string(),
                            params: format!("d={d},m={m}"),
                            status: CheckStatus::Flagged,
                            exact_zero: false,
                            float_dev: diff.to_f64().abs(),
                            note: format!(
                                "stated normalization {norm}; telescoping product {product}"
                            ),
                        }
                    })
                };
                run().unwrap_or_else(|e| CheckRecord {
                    id: "gen-24-normalization".to_string(),
                    params: format!("d={d},m={m}"),
                    status: CheckStatus::Fail,
                    exact_zero: false,
                    float_dev: 0.0,
                    note: e.to_string(),
                })
            }));
        }
    }

    // I route
    for s in 1..=(2 * l_cap + 1) {
        let members = enumerate_subspace(SubspaceLabel::SMinus(s), l_cap);
        let highest_m = s - 1 - (s / 2);
        for idx in &members {
            let (l, m) = (idx.l, idx.m);
            tasks.push(Box::new(move || {
                seed_comparison_record(
                    "gen-route-I",
                    format!("s={s},m={m}"),
                    generate_via_i(s, m),
                    closed_form(l, m),
                )
            }));
            tasks.push(Box::new(move || {
                let run = || -> Result<CheckRecord, AlgebraError> {
                    let mut product = Scalar::one();
                    let mut step_m = highest_m;
                    while step_m > m {
                        product = product.mul(&i_lower_coeff(s, step_m)?);
                        step_m -= 1;
                    }
                    let norm = generation_norm_i(s, m)?;
                    let diff = product.checked_sub(&norm)?;
                    let id = if s % 2 == 1 {
                        "prop4-gen-odd-normalization"
                    } else {
                        "prop4-gen-even-normalization"
                    };
                    Ok(if diff.is_zero() {
                        CheckRecord {
                            id: id.to_string(),
                            params: format!("s={s},m={m}"),
                            status: CheckStatus::Pass,
                            exact_zero: true,
                            float_dev: 0.0,
                            note: String::new(),
                        }
                    } else {
                        CheckRecord {
                            id: id.to_string(),
                            params: format!("s={s},m={m}"),
                            status: CheckStatus::Flagged,
                            exact_zero: false,
                            float_dev: diff.to_f64().abs(),
                            note: format!(
                                "stated normalization {norm}; telescoping product {product}"
                            ),
                        }
                    })
                };
                run().unwrap_or_else(|e| CheckRecord {
                    id: "prop4-gen-normalization".to_string(),
                    params: format!("s={s},m={m}"),
                    status: CheckStatus::Fail,
                    exact_zero: false,
                    float_dev: 0.0,
                    note: e.to_string(),
                })
            }));
        }
    }

    // the two semi-infinite splittings tile the index set exactly once
    let l_cap_tiling = cfg.l_max;
    tasks.push(Box::new(move || {
        let mut seen = std::collections::BTreeSet::new();
        for d in 1..=(2 * l_cap_tiling + 1) {
            for idx in enumerate_subspace(SubspaceLabel::DPlus(d), l_cap_tiling) {
                if idx.l - idx.m != d - 1 || !seen.insert((idx.l, idx.m)) {
                    return CheckRecord {
                        id: "tiling-d".to_string(),
                        params: format!("l_max={l_cap_tiling}"),
                        status: CheckStatus::Fail,
                        exact_zero: false,
                        float_dev: 0.0,
                        note: format!("duplicate or mislabeled member {idx}"),
                    };
                }
            }
        }
        let complete = seen.len() as i64 == (l_cap_tiling + 1) * (l_cap_tiling + 1);
        CheckRecord {
            id: "tiling-d".to_string(),
            params: format!("l_max={l_cap_tiling}"),
            status: if complete {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            exact_zero: complete,
            float_dev: 0.0,
            note: String::new(),
        }
    }));
    tasks.push(Box::new(move || {
        let mut seen = std::collections::BTreeSet::new();
        for s in 1..=(2 * l_cap_tiling + 1) {
            for idx in enumerate_subspace(SubspaceLabel::SMinus(s), l_cap_tiling) {
                if idx.l + idx.m != s - 1 || !seen.insert((idx.l, idx.m)) {
                    return CheckRecord {
                        id: "tiling-s".to_string(),
                        params: format!("l_max={l_cap_tiling}"),
                        status: CheckStatus::Fail,
                        exact_zero: false,
                        float_dev: 0.0,
                        note: format!("duplicate or mislabeled member {idx}"),
                    };
                }
            }
        }
        let complete = seen.len() as i64 == (l_cap_tiling + 1) * (l_cap_tiling + 1);
        CheckRecord {
            id: "tiling-s".to_string(),
            params: format!("l_max={l_cap_tiling}"),
            status: if complete {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            exact_zero: complete,
            float_dev: 0.0,
            note: String::new(),
        }
    }));
    tasks
}

/// Stated normalization of the fixed-(l-m) generation formulas.
fn generation_norm_k(d: i64, m: i64) -> Result<Scalar, AlgebraError> {
    use crate::scalar::factorial;
    use num_bigint::{BigInt, BigUint};
    let (num, den) = if d % 2 == 1 {
        let j = (d - 1) / 2;
        (
            BigUint::from((2 * j + 1) as u64) * factorial((2 * m + 2 * j) as u64),
            (2 * m + 4 * j + 1) as u64,
        )
    } else {
        let k = d / 2;
        (
            BigUint::from((2 * k + 1) as u64) * factorial((2 * m + 2 * k - 1) as u64),
            (2 * m + 4 * k - 1) as u64,
        )
    };
    Scalar::sqrt_rational(&crate::scalar::Rational::new(
        BigInt::from(num),
        BigInt::from(den),
    ))
}

/// Stated normalization of the fixed-(l+m) generation formulas.
fn generation_norm_i(s: i64, m: i64) -> Result<Scalar, AlgebraError> {
    use crate::scalar::factorial;
    use num_bigint::{BigInt, BigUint};
    let (num, den) = if s % 2 == 1 {
        let j = (s - 1) / 2;
        (
            BigUint::from((2 * j + 1) as u64) * factorial((2 * j - 2 * m) as u64),
            (4 * j - 2 * m + 1) as u64,
        )
    } else {
        let k = s / 2;
        (
            BigUint::from((2 * k + 1) as u64) * factorial((2 * k - 2 * m - 1) as u64),
            (4 * k - 2 * m - 1) as u64,
        )
    };
    Scalar::sqrt_rational(&crate::scalar::Rational::new(
        BigInt::from(num),
        BigInt::from(den),
    ))
}

// ---------------------------------------------------------------------
// parity suite
// ---------------------------------------------------------------------

fn parity_tasks(cfg: &SuiteConfig) -> Vec<CheckTask> {
    all_indices(cfg.l_max)
        .into_iter()
        .map(|idx| {
            let (l, m) = (idx.l, idx.m);
            residual_task("parity", format!("l={l},m={m}"), move || {
                let y = closed_form(l, m)?;
                let sign = if l % 2 == 0 { 1 } else { -1 };
                y.parity_reflect()
                    .sub(&y.scale(&Scalar::from_integer(sign)))
            })
        })
        .collect()
}

// ---------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------

fn tasks_for(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckTask> {
    match suite {
        Suite::Su2 => su2_tasks(cfg),
        Suite::LadderL => ladder_l_tasks(cfg),
        Suite::U11K => u11_k_tasks(cfg),
        Suite::U11I => u11_i_tasks(cfg),
        Suite::MixedA => mixed_a_tasks(cfg),
        Suite::Adjoint => adjoint_tasks(cfg),
        Suite::Orthonormality => orthonormality_tasks(cfg),
        Suite::Generation => generation_tasks(cfg),
        Suite::Parity => parity_tasks(cfg),
        Suite::All => {
            let mut tasks = su2_tasks(cfg);
            tasks.extend(ladder_l_tasks(cfg));
            tasks.extend(u11_k_tasks(cfg));
            tasks.extend(u11_i_tasks(cfg));
            tasks.extend(mixed_a_tasks(cfg));
            tasks.extend(adjoint_tasks(cfg));
            tasks.extend(orthonormality_tasks(cfg));
            tasks.extend(generation_tasks(cfg));
            tasks.extend(parity_tasks(cfg));
            tasks
        }
    }
}

/// Run the configured suite. Failures are records, not errors; the
/// report is deterministic for a fixed config and seed.
pub fn run_suite(config: &SuiteConfig) -> VerificationReport {
    assert!(config.l_max >= 1, "l_max must be at least 1");
    assert!(
        config.numeric_tolerance > 0.0,
        "numeric tolerance must be positive"
    );
    let tasks = tasks_for(config.suite, config);
    let mut records: Vec<CheckRecord> = tasks.par_iter().map(|t| t()).collect();
    records.sort_by(|a, b| (&a.id, &a.params).cmp(&(&b.id, &b.params)));
    let summary = Summary {
        pass: records
            .iter()
            .filter(|r| r.status == CheckStatus::Pass)
            .count(),
        fail: records
            .iter()
            .filter(|r| r.status == CheckStatus::Fail)
            .count(),
        flagged: records
            .iter()
            .filter(|r| r.status == CheckStatus::Flagged)
            .count(),
    };
    VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        records,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config(suite: Suite) -> SuiteConfig {
        let mut cfg = SuiteConfig::new(suite);
        cfg.l_max = 3;
        cfg.d_max = 3;
        cfg.s_max = 3;
        cfg.random_trials = 3;
        cfg.seed = 7;
        cfg
    }

    #[test]
    fn su2_suite_passes() {
        let report = run_suite(&small_config(Suite::Su2));
        assert_eq!(report.summary.fail, 0);
        assert_eq!(report.summary.flagged, 0);
        assert!(report.summary.pass > 0);
    }

    #[test]
    fn orthonormality_suite_passes() {
        let mut cfg = small_config(Suite::Orthonormality);
        cfg.l_max = 2;
        let report = run_suite(&cfg);
        assert_eq!(report.summary.fail, 0);
        assert_eq!(report.summary.pass, 18); // 9 gram rows + 9 numeric rows
    }

    #[test]
    fn generation_suite_flags_even_family_seeds() {
        let report = run_suite(&small_config(Suite::Generation));
        assert_eq!(report.summary.fail, 0);
        // the even fixed-(l+m) families with k >= 2 carry a known seed
        // offset; every flagged record must name the derived constant
        let flagged: Vec<_> = report
            .records
            .iter()
            .filter(|r| r.status == CheckStatus::Flagged)
            .collect();
        assert!(!flagged.is_empty());
        assert!(flagged.iter().all(|r| r.id == "gen-route-I"));
        assert!(flagged.iter().all(|r| r.note.contains("derived constant")));
        // normalizations themselves telescope exactly
        assert!(report
            .records
            .iter()
            .filter(|r| r.id.contains("normalization"))
            .all(|r| r.status == CheckStatus::Pass));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = small_config(Suite::Adjoint);
        let a = run_suite(&cfg);
        let b = run_suite(&cfg);
        let ser_a = serde_json::to_string(&a).unwrap();
        let ser_b = serde_json::to_string(&b).unwrap();
        assert_eq!(ser_a, ser_b);
    }

    #[test]
    fn adjoint_suite_reports_convention() {
        let report = run_suite(&small_config(Suite::Adjoint));
        assert_eq!(report.summary.fail, 0);
        assert!(report.records.iter().all(|r| r.note.contains("convention")));
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::ALL_NAMES {
            let suite: Suite = name.parse().unwrap();
            assert_eq!(suite.to_string(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
