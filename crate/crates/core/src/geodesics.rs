//! Body-frame geodesic flow of left-invariant metrics, blowup detection, and the sl(2,R)
//! eigenvalue criterion for completeness.
//!
//! Only the body velocity `v(t)` is integrated. A finite-time blowup of `v` certifies
//! incompleteness; reaching the horizon certifies nothing. Reconstruction of the curve in
//! the group is not attempted.

use crate::lie::{self, AlgebraTag, LieAlgebra};
use crate::linalg::{self, Poly, QMatrix, QVector};
use crate::metric::{self, ConnectionCoefficients, InvariantMetric, MetricError};
use crate::rational::{self, Rational};
use crate::sampling;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeodesicError {
    #[error("invalid integration settings: {0}")]
    InvalidConfig(String),
    #[error("initial velocity has {got} components, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("step size fell below h_min at t = {t} without norm growth (|v| = {norm})")]
    ToleranceUnachievable { t: f64, norm: f64 },
    #[error("step limit {0} exhausted")]
    StepLimit(usize),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeodesicConfig {
    pub t_max: f64,
    pub rtol: f64,
    /// Absolute floor of the error scale; 0 means purely relative control.
    pub atol: f64,
    pub escape_norm: f64,
    pub h_min: f64,
    pub h_init: f64,
    pub max_steps: usize,
    /// Keep every accepted step in the trajectory, not only the endpoints.
    pub record: bool,
}

impl Default for GeodesicConfig {
    fn default() -> Self {
        GeodesicConfig {
            t_max: 100.0,
            rtol: 1e-9,
            atol: 0.0,
            escape_norm: 1e6,
            h_min: 1e-12,
            h_init: 1e-3,
            max_steps: 2_000_000,
            record: true,
        }
    }
}

impl GeodesicConfig {
    fn check(&self) -> Result<(), GeodesicError> {
        let bad = |s: &str| Err(GeodesicError::InvalidConfig(s.to_string()));
        if !(self.rtol > 0.0 && self.rtol.is_finite()) {
            return bad("rtol must be positive");
        }
        if !(self.atol >= 0.0) {
            return bad("atol must be nonnegative");
        }
        if !(self.escape_norm > 1.0) {
            return bad("escape_norm must exceed 1");
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return bad("t_max must be positive and finite");
        }
        if !(self.h_min > 0.0 && self.h_init > 0.0) {
            return bad("step sizes must be positive");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Outcome {
    ReachedHorizon,
    /// The true blowup time lies in `[t_low, t_high]`.
    BlowupDetected { t_low: f64, t_high: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub t: f64,
    pub v: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeodesicTrajectory {
    pub samples: Vec<Sample>,
    pub outcome: Outcome,
    pub energy0: f64,
    /// Largest `|g(v,v) − g(v0,v0)|` over accepted steps.
    pub max_energy_drift: f64,
    pub accepted: usize,
    pub rejected: usize,
}

impl GeodesicTrajectory {
    pub fn final_sample(&self) -> &Sample {
        self.samples.last().expect("trajectory has at least the initial sample")
    }
}

/// `−Γ(v, v)` computed exactly.
pub fn euler_arnold_rhs(gamma: &ConnectionCoefficients, v: &[Rational]) -> QVector {
    linalg::vec_scale(&gamma.apply(v, v), &rational::int(-1))
}

/// Floating-point form of the quadratic right-hand side with symmetrized coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerArnold {
    n: usize,
    /// `s[k][i][j] = (Γ^k_ij + Γ^k_ji) / 2`, flattened.
    sym: Vec<f64>,
    gram: Vec<f64>,
}

impl EulerArnold {
    pub fn new(a: &LieAlgebra, m: &InvariantMetric) -> Result<Self, MetricError> {
        let gamma = metric::levi_civita(a, m)?;
        Ok(Self::from_connection(&gamma, m))
    }

    pub fn from_connection(gamma: &ConnectionCoefficients, m: &InvariantMetric) -> Self {
        let n = gamma.dim();
        let mut sym = vec![0.0; n * n * n];
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let s = (gamma.get(k, i, j) + gamma.get(k, j, i)) / rational::int(2);
                    sym[(k * n + i) * n + j] = rational::to_f64(&s);
                }
            }
        }
        let gram = m.gram().entries().iter().map(rational::to_f64).collect();
        EulerArnold { n, sym, gram }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rhs(&self, v: &[f64], out: &mut [f64]) {
        let n = self.n;
        for (k, o) in out.iter_mut().enumerate().take(n) {
            let mut acc = 0.0;
            for i in 0..n {
                if v[i] == 0.0 {
                    continue;
                }
                let row = &self.sym[(k * n + i) * n..(k * n + i + 1) * n];
                let mut inner = 0.0;
                for j in 0..n {
                    inner += row[j] * v[j];
                }
                acc += v[i] * inner;
            }
            *o = -acc;
        }
    }

    pub fn energy(&self, v: &[f64]) -> f64 {
        let n = self.n;
        let mut e = 0.0;
        for i in 0..n {
            for j in 0..n {
                e += self.gram[i * n + j] * v[i] * v[j];
            }
        }
        e
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

// Dormand–Prince 5(4) tableau; the system is autonomous so the nodes are not needed.
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

struct Stepper<'a> {
    sys: &'a EulerArnold,
    k: Vec<Vec<f64>>,
    tmp: Vec<f64>,
}

impl<'a> Stepper<'a> {
    fn new(sys: &'a EulerArnold) -> Self {
        let n = sys.dim();
        Stepper { sys, k: vec![vec![0.0; n]; 7], tmp: vec![0.0; n] }
    }

    /// One trial step; writes the 5th-order solution into `y_new` and returns the scaled error.
    fn step(&mut self, y: &[f64], h: f64, rtol: f64, atol: f64, y_new: &mut [f64]) -> f64 {
        let n = y.len();
        // FSAL: stage 0 is rhs(y), filled by the caller.
        for s in 1..7 {
            for i in 0..n {
                let mut acc = y[i];
                for (r, a) in A[s].iter().enumerate().take(s) {
                    acc += h * a * self.k[r][i];
                }
                self.tmp[i] = acc;
            }
            let (tmp, k) = (&self.tmp, &mut self.k[s]);
            self.sys.rhs(tmp, k);
        }
        let mut err = 0.0;
        for i in 0..n {
            let mut y5 = y[i];
            let mut e = 0.0;
            for s in 0..7 {
                y5 += h * B5[s] * self.k[s][i];
                e += h * (B5[s] - B4[s]) * self.k[s][i];
            }
            y_new[i] = y5;
            let sc = atol + rtol * y[i].abs().max(y5.abs());
            let r = if sc > 0.0 {
                e / sc
            } else if e == 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
            err += r * r;
        }
        (err / n as f64).sqrt()
    }
}

/// Integrates `dv/dt = −Γ(v, v)` from `v0` with adaptive Dormand–Prince 5(4) steps.
pub fn integrate_geodesic(
    a: &LieAlgebra,
    m: &InvariantMetric,
    v0: &[f64],
    config: &GeodesicConfig,
) -> Result<GeodesicTrajectory, GeodesicError> {
    let sys = EulerArnold::new(a, m)?;
    integrate_system(&sys, v0, config)
}

pub fn integrate_system(sys: &EulerArnold, v0: &[f64], config: &GeodesicConfig) -> Result<GeodesicTrajectory, GeodesicError> {
    config.check()?;
    let n = sys.dim();
    if v0.len() != n {
        return Err(GeodesicError::DimensionMismatch { expected: n, got: v0.len() });
    }
    let energy0 = sys.energy(v0);
    let mut y = v0.to_vec();
    let mut y_new = vec![0.0; n];
    let mut t = 0.0;
    let mut h = config.h_init.min(config.t_max);
    let mut stepper = Stepper::new(sys);
    sys.rhs(&y, &mut stepper.k[0]);
    let mut samples = vec![Sample { t, v: y.clone() }];
    let mut drift: f64 = 0.0;
    let (mut accepted, mut rejected) = (0usize, 0usize);
    let mut err_prev: f64 = 1e-4;
    const SAFETY: f64 = 0.9;
    const BETA: f64 = 0.04;
    const ALPHA: f64 = 0.2 - 0.75 * BETA;

    let blowup_or_stall = |t: f64, y: &[f64], dy: &[f64]| {
        let ny = norm(y);
        if ny > config.escape_norm {
            let ndy = norm(dy);
            // A pole of a quadratic system lies within |v|/|dv/dt| ahead; the slack absorbs
            // the global error of the computed time.
            let reach = if ndy > 0.0 { 2.0 * ny / ndy } else { 0.0 };
            let slack = 10.0 * config.rtol * t.max(1.0);
            Ok(Outcome::BlowupDetected { t_low: (t - slack).max(0.0), t_high: t + reach + slack })
        } else {
            Err(GeodesicError::ToleranceUnachievable { t, norm: ny })
        }
    };

    loop {
        if t >= config.t_max {
            break;
        }
        if accepted + rejected >= config.max_steps {
            return Err(GeodesicError::StepLimit(config.max_steps));
        }
        if h < config.h_min {
            let outcome = blowup_or_stall(t, &y, &stepper.k[0])?;
            finish(&mut samples, t, &y, config.record);
            return Ok(GeodesicTrajectory { samples, outcome, energy0, max_energy_drift: drift, accepted, rejected });
        }
        let last = t + h >= config.t_max;
        let h_try = if last { config.t_max - t } else { h };
        let err = stepper.step(&y, h_try, config.rtol, config.atol, &mut y_new);
        if err.is_finite() && err <= 1.0 && y_new.iter().all(|x| x.is_finite()) {
            accepted += 1;
            t = if last { config.t_max } else { t + h_try };
            y.copy_from_slice(&y_new);
            let k6 = stepper.k[6].clone();
            stepper.k[0] = k6;
            drift = drift.max((sys.energy(&y) - energy0).abs());
            if config.record {
                samples.push(Sample { t, v: y.clone() });
            }
            let e = err.max(1e-10);
            let factor = SAFETY * e.powf(-ALPHA) * err_prev.powf(BETA);
            h = h_try * factor.clamp(0.2, 5.0);
            err_prev = e;
        } else {
            rejected += 1;
            let e = if err.is_finite() { err } else { 1e10 };
            h = h_try * (SAFETY * e.powf(-ALPHA)).clamp(0.1, 0.9);
        }
    }
    finish(&mut samples, t, &y, config.record);
    Ok(GeodesicTrajectory {
        samples,
        outcome: Outcome::ReachedHorizon,
        energy0,
        max_energy_drift: drift,
        accepted,
        rejected,
    })
}

fn finish(samples: &mut Vec<Sample>, t: f64, y: &[f64], record: bool) {
    if !record || samples.last().map(|s| s.t) != Some(t) {
        samples.push(Sample { t, v: y.to_vec() });
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeConfig {
    pub samples: usize,
    pub seed: u64,
    pub include_frame: bool,
    pub geodesic: GeodesicConfig,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            samples: 64,
            seed: 0x5eed,
            include_frame: true,
            // Tighter than the single-trajectory default: horizon-length runs on exponentially
            // growing solutions accumulate drift in proportion to the step count.
            geodesic: GeodesicConfig { rtol: 1e-10, record: false, ..GeodesicConfig::default() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum ProbeVerdict {
    NoBlowupFoundWithinHorizon,
    IncompletenessWitness { v0: Vec<f64>, t_low: f64, t_high: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub verdict: ProbeVerdict,
    pub seed: u64,
    pub directions: usize,
    pub horizon: f64,
    pub rtol: f64,
    pub blowups: usize,
    /// Directions whose integration failed (step limit or collapse without growth).
    pub failures: Vec<(usize, String)>,
    pub max_energy_drift: f64,
    pub note: &'static str,
}

pub const PROBE_NOTE: &str = "body-velocity equation only; a blowup certifies incompleteness, \
                              its absence within the horizon certifies nothing";

/// Integrates from unit directions (frame vectors first, then a seeded Fibonacci sphere)
/// and reports the first blowup in sampler order.
pub fn completeness_probe(a: &LieAlgebra, m: &InvariantMetric, config: &ProbeConfig) -> Result<ProbeReport, GeodesicError> {
    let sys = EulerArnold::new(a, m)?;
    let n = sys.dim();
    let mut dirs: Vec<Vec<f64>> = Vec::new();
    if config.include_frame {
        for i in 0..n {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            dirs.push(e);
        }
    }
    dirs.extend(sampling::sphere_directions(n, config.samples, config.seed));
    let run = |v: &Vec<f64>| integrate_system(&sys, v, &config.geodesic);
    #[cfg(feature = "parallel")]
    let results: Vec<_> = {
        use rayon::prelude::*;
        dirs.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = dirs.iter().map(run).collect();

    let mut verdict = ProbeVerdict::NoBlowupFoundWithinHorizon;
    let mut blowups = 0;
    let mut failures = Vec::new();
    let mut drift: f64 = 0.0;
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(tr) => {
                drift = drift.max(tr.max_energy_drift);
                if let Outcome::BlowupDetected { t_low, t_high } = tr.outcome {
                    blowups += 1;
                    if verdict == ProbeVerdict::NoBlowupFoundWithinHorizon {
                        verdict = ProbeVerdict::IncompletenessWitness { v0: dirs[i].clone(), t_low, t_high };
                    }
                }
            }
            Err(GeodesicError::InvalidConfig(s)) => return Err(GeodesicError::InvalidConfig(s)),
            Err(e) => failures.push((i, e.to_string())),
        }
    }
    Ok(ProbeReport {
        verdict,
        seed: config.seed,
        directions: dirs.len(),
        horizon: config.geodesic.t_max,
        rtol: config.geodesic.rtol,
        blowups,
        failures,
        max_energy_drift: drift,
        note: PROBE_NOTE,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GlError {
    #[error("algebra is not sl(2,R)")]
    NotSl2,
    #[error("B·φ is not symmetric")]
    NotSymmetric,
    #[error(transparent)]
    Metric(#[from] MetricError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GlVerdict {
    Complete,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiEndomorphism {
    /// `φ = B⁻¹ G` in the given basis.
    pub phi: QMatrix,
    pub charpoly: Poly,
    /// The repeated eigenvalue, if the characteristic polynomial has one (it is then real).
    pub repeated_eigenvalue: Option<Rational>,
    /// Largest real eigenspace dimension found (1 when all eigenvalues are simple).
    pub max_eigenspace_dim: usize,
    pub verdict: GlVerdict,
}

/// Complete iff `φ = B⁻¹G` has a real eigenspace of dimension at least 2.
pub fn gl_criterion(a: &LieAlgebra, m: &InvariantMetric) -> Result<PhiEndomorphism, GlError> {
    if lie::recognize_algebra3(a).tag != AlgebraTag::Sl2 {
        return Err(GlError::NotSl2);
    }
    m.require_lorentzian()?;
    let b = a.killing_form();
    let phi = b.inverse().ok_or(GlError::NotSl2)?.mul(m.gram());
    if !b.mul(&phi).is_symmetric() {
        return Err(GlError::NotSymmetric);
    }
    let p = phi.charpoly();
    let g = p.gcd(&p.derivative());
    let repeated = match g.degree() {
        Some(1) => Some(-g.coeffs()[0].clone()),
        Some(2) => Some(-g.coeffs()[1].clone() / rational::int(2)),
        _ => None,
    };
    let max_dim = match &repeated {
        Some(r) => 3 - phi.sub(&QMatrix::identity(3).scale(r)).rank(),
        None => 1,
    };
    let verdict = if max_dim >= 2 { GlVerdict::Complete } else { GlVerdict::Inconclusive };
    Ok(PhiEndomorphism { phi, charpoly: p, repeated_eigenvalue: repeated, max_eigenspace_dim: max_dim, verdict })
}
