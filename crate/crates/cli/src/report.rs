//! Output documents. Everything is serialized from ordered structures, so the same input,
//! flags and seed give the same bytes.

use lorhom3_core::catalog::{self, HeisClass, HeisNormalForm, SolClass, SolNormalForm};
use lorhom3_core::classify::ClassificationReport;
use lorhom3_core::geodesics::{GeodesicTrajectory, Outcome, ProbeReport, ProbeVerdict};
use lorhom3_core::lie::AlgebraTag;
use lorhom3_core::metric::ConnectionCoefficients;
use lorhom3_core::rational::{self, Rational};
use lorhom3_core::{InvariantMetric, LieAlgebra, QMatrix};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt::Write;

pub const TOOL: &str = "lorhom3";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct Tolerances {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prolongation_cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rtol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub escape_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_min: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tolerances: Tolerances,
    pub result: T,
}

impl<T: Serialize> ReportDocument<T> {
    pub fn new(command: &'static str, result: T) -> Self {
        ReportDocument { tool: TOOL, version: VERSION, command, input: None, seed: None, tolerances: Tolerances::default(), result }
    }

    pub fn with_result<U: Serialize>(self, result: U) -> ReportDocument<U> {
        ReportDocument {
            tool: self.tool,
            version: self.version,
            command: self.command,
            input: self.input,
            seed: self.seed,
            tolerances: self.tolerances,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "group")]
pub enum NormalFormReport {
    Heis {
        class: HeisClass,
        #[serde(with = "rational::serde_str")]
        center_norm: Rational,
        witness: Option<QMatrix>,
        #[serde(with = "rational::serde_str::option")]
        scale: Option<Rational>,
    },
    Sol {
        class: SolClass,
        derived_degenerate: bool,
        null_eigendirection: bool,
        witness: Option<QMatrix>,
        #[serde(with = "rational::serde_str::option")]
        scale: Option<Rational>,
    },
}

impl From<HeisNormalForm> for NormalFormReport {
    fn from(n: HeisNormalForm) -> Self {
        NormalFormReport::Heis { class: n.class, center_norm: n.center_norm, witness: n.witness, scale: n.scale }
    }
}

impl From<SolNormalForm> for NormalFormReport {
    fn from(n: SolNormalForm) -> Self {
        NormalFormReport::Sol {
            class: n.class,
            derived_degenerate: n.derived_degenerate,
            null_eigendirection: n.null_eigendirection,
            witness: n.witness,
            scale: n.scale,
        }
    }
}

/// Heis or SOL normal form when the algebra is one of those.
pub fn normal_form(a: &LieAlgebra, m: &InvariantMetric, tag: AlgebraTag) -> Option<NormalFormReport> {
    match tag {
        AlgebraTag::Heis => catalog::normalize_heis(a, m).ok().map(Into::into),
        AlgebraTag::Sol => catalog::normalize_sol(a, m).ok().map(Into::into),
        _ => None,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub classification: ClassificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<NormalFormReport>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "mode")]
pub enum GeodesicResult {
    Trajectory { target: String, v0: Vec<f64>, trajectory: GeodesicTrajectory },
    Probe { target: String, probe: ProbeReport },
}

/// `a X + b Y − Z` style rendering of a vector in a named basis.
pub fn format_vector(v: &[Rational], names: &[String]) -> String {
    let mut out = String::new();
    for (q, name) in v.iter().zip(names) {
        if q.is_zero() {
            continue;
        }
        let abs = q.abs();
        if out.is_empty() {
            if q.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if q.is_negative() { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&rational::format(&abs));
            if !abs.is_integer() {
                out.push('*');
            }
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectionLine {
    pub along: String,
    pub of: String,
    pub value: String,
}

/// Table of `∇_{e_i} e_j` for all basis pairs.
pub fn connection_table(gamma: &ConnectionCoefficients, names: &[String]) -> Vec<ConnectionLine> {
    let n = names.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            out.push(ConnectionLine {
                along: names[i].clone(),
                of: names[j].clone(),
                value: format_vector(&gamma.basis(i, j), names),
            });
        }
    }
    out
}

fn matrix_text(m: &QMatrix) -> String {
    let rows: Vec<String> = m.to_strings().into_iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

pub fn classification_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let opt = |q: &Option<Rational>| q.as_ref().map_or("not constant".to_string(), rational::format);
    let _ = writeln!(s, "algebra:             {}", r.algebra.label());
    let _ = writeln!(s, "signature:           {:?}", r.signature);
    let _ = writeln!(s, "flat:                {}", r.curvature.flat);
    let _ = writeln!(s, "sectional curvature: {}", opt(&r.curvature.constant_kappa));
    let _ = writeln!(s, "scalar curvature:    {}", rational::format(&r.curvature.scalar));
    let _ = writeln!(s, "tr(Ric^2):           {}", rational::format(&r.curvature.ricci_squared));
    let _ = writeln!(s, "isotropy:            dim {}{}", r.isotropy_dim, r.isotropy_type.map_or(String::new(), |t| format!(" {t:?}")));
    let _ = writeln!(s, "prolongation dims:   {:?}", r.prolongation_dims);
    let _ = writeln!(s, "killing dim:         {}", r.killing_dim);
    let _ = writeln!(s, "geometry class:      {}", r.geometry_class);
    let _ = writeln!(s, "maximal geometry:    {:?}", r.maximal_geometry);
    let _ = writeln!(s, "completeness:        {:?}", r.completeness_flag);
    let _ = writeln!(s, "compact realization: {}", r.compact_realization.map_or("undetermined".to_string(), |b| b.to_string()));
    if let Some(t) = &r.transverse {
        let shifts: Vec<String> = t.shifts.iter().map(rational::format).collect();
        let _ = writeln!(s, "transverse algebra:  {} (shifts {})", t.tag.label(), shifts.join(", "));
    }
    if let Some(m) = &r.model {
        let _ = writeln!(s, "model:               {} ({:?} isotropy, center dim {})", m.name, m.isotropy_type, m.center_dim);
    }
    if let Some(p) = &r.probe {
        s.push_str(&probe_text(p));
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

pub fn analyze_text(r: &AnalyzeResult) -> String {
    let mut s = String::new();
    if let Some(n) = &r.name {
        let _ = writeln!(s, "name:                {n}");
    }
    s.push_str(&classification_text(&r.classification));
    match &r.normal_form {
        Some(NormalFormReport::Heis { class, center_norm, witness, scale }) => {
            let _ = writeln!(s, "heis normal form:    {class:?}, center norm {}", rational::format(center_norm));
            if let (Some(w), Some(k)) = (witness, scale) {
                let _ = writeln!(s, "  witness {} scale {}", matrix_text(w), rational::format(k));
            }
        }
        Some(NormalFormReport::Sol { class, witness, scale, .. }) => {
            let _ = writeln!(s, "sol normal form:     {class:?}");
            if let (Some(w), Some(k)) = (witness, scale) {
                let _ = writeln!(s, "  witness {} scale {}", matrix_text(w), rational::format(k));
            }
        }
        None => {}
    }
    s
}

pub fn probe_text(p: &ProbeReport) -> String {
    let mut s = String::new();
    match &p.verdict {
        ProbeVerdict::NoBlowupFoundWithinHorizon => {
            let _ = writeln!(s, "probe:               no blowup within t = {} over {} directions", p.horizon, p.directions);
        }
        ProbeVerdict::IncompletenessWitness { v0, t_low, t_high } => {
            let _ = writeln!(s, "probe:               blowup from v0 = {v0:?} in [{t_low}, {t_high}]");
        }
    }
    let _ = writeln!(s, "  blowups {}, failures {}, max energy drift {:e}", p.blowups, p.failures.len(), p.max_energy_drift);
    let _ = writeln!(s, "  note: {}", p.note);
    s
}

pub fn geodesic_text(r: &GeodesicResult) -> String {
    match r {
        GeodesicResult::Probe { target, probe } => format!("target: {target}\n{}", probe_text(probe)),
        GeodesicResult::Trajectory { target, v0, trajectory } => {
            let mut s = String::new();
            let _ = writeln!(s, "target:        {target}");
            let _ = writeln!(s, "v0:            {v0:?}");
            match trajectory.outcome {
                Outcome::ReachedHorizon => {
                    let _ = writeln!(s, "outcome:       reached horizon");
                }
                Outcome::BlowupDetected { t_low, t_high } => {
                    let _ = writeln!(s, "outcome:       blowup in [{t_low}, {t_high}]");
                }
            }
            let last = trajectory.final_sample();
            let _ = writeln!(s, "final sample:  t = {}, v = {:?}", last.t, last.v);
            let _ = writeln!(s, "energy:        {:e}, max drift {:e}", trajectory.energy0, trajectory.max_energy_drift);
            let _ = writeln!(s, "steps:         {} accepted, {} rejected", trajectory.accepted, trajectory.rejected);
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lorhom3_core::rational::{frac, int};

    #[test]
    fn vectors_render_compactly() {
        let names: Vec<String> = ["X'", "Z", "T"].iter().map(|s| s.to_string()).collect();
        assert_eq!(format_vector(&[int(0), int(0), int(0)], &names), "0");
        assert_eq!(format_vector(&[int(-1), int(0), int(0)], &names), "-X'");
        assert_eq!(format_vector(&[int(2), int(-1), frac(1, 2)], &names), "2X' - Z + 1/2*T");
    }
}
