//! Regression suite over the published claims reproduced by the library. Each check carries a
//! short anchor naming the claim it guards, so a failing run says which one broke.

use lorhom3_core::catalog::{self, CatalogEntry, HeisClass, SolClass};
use lorhom3_core::classify::{self, ClassificationReport, ClassifyError, GeometryClass, MaximalGeometry};
use lorhom3_core::geodesics::{self, GeodesicConfig, GlVerdict, Outcome, ProbeConfig, ProbeVerdict};
use lorhom3_core::isotropy::{self, IsoType, PROLONGATION_CAP};
use lorhom3_core::lie::{self, AlgebraTag};
use lorhom3_core::metric::{self, CurvatureData};
use lorhom3_core::rational::{self, frac, int, Rational};
use lorhom3_core::{sampling, InvariantMetric, QMatrix};
use serde::Serialize;
use std::fmt::Write;

/// Every catalog entry the suite expects, with the anchor of the claim it realizes.
pub const ENTRY_ANCHORS: [(&str, &str); 11] = [
    ("minkowski", "minkowski/flat-model"),
    ("de_sitter_note", "de-sitter/no-compact-quotient"),
    ("anti_de_sitter_killing", "anti-de-sitter/killing-form"),
    ("lorentz_heisenberg", "lorentz-heisenberg/definition"),
    ("flat_heis", "heisenberg/null-center-flat"),
    ("heis_elliptic", "heisenberg/timelike-center-elliptic"),
    ("lorentz_sol", "lorentz-sol/definition"),
    ("flat_sol", "sol/flat-metric-exists"),
    ("sl2_right_unipotent", "sl2/right-unipotent-invariant"),
    ("sl2_right_semisimple", "sl2/right-semisimple-invariant"),
    ("product_r_desitter2", "product-r-de-sitter/no-compact-realization"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub prolongation_cap: usize,
    pub sweep_samples: usize,
    pub seed: u64,
    /// Catalog entries treated as missing.
    pub dropped_entries: Vec<String>,
    /// Negates the curvature tensor before the curvature checks.
    pub flip_curvature_sign: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            prolongation_cap: PROLONGATION_CAP,
            sweep_samples: 10_000,
            seed: 0x5eed,
            dropped_entries: Vec::new(),
            flip_curvature_sign: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub anchor: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub checks: Vec<Check>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failed_anchors(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for c in self.checks.iter().filter(|c| c.status == Status::Fail) {
            if !out.contains(&c.anchor) {
                out.push(c.anchor);
            }
        }
        out
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            let _ = writeln!(s, "{tag} {:<46} {}", c.anchor, c.detail);
        }
        let _ = writeln!(s, "{} passed, {} failed, {} skipped", self.passed, self.failed, self.skipped);
        let failed = self.failed_anchors();
        if !failed.is_empty() {
            let _ = writeln!(s, "failed anchors: {}", failed.join(", "));
        }
        s
    }
}

struct Suite<'a> {
    config: &'a VerifyConfig,
    checks: Vec<Check>,
}

impl Suite<'_> {
    fn record(&mut self, anchor: &'static str, result: Result<String, String>) {
        let (status, detail) = match result {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        self.checks.push(Check { anchor, status, detail });
    }

    fn entry(&self, name: &str) -> Result<CatalogEntry, String> {
        if self.config.dropped_entries.iter().any(|d| d == name) {
            return Err(format!("catalog entry {name} is missing"));
        }
        catalog::catalog_get(name).map_err(|e| e.to_string())
    }

    fn curvature(&self, e: &CatalogEntry) -> Result<CurvatureData, String> {
        let (_, mut curv) = metric::geometry(&e.algebra, &e.metric).map_err(|e| e.to_string())?;
        if self.config.flip_curvature_sign {
            curv.riemann = curv.riemann.scaled(&int(-1));
        }
        Ok(curv)
    }

    fn kappa(&self, e: &CatalogEntry) -> Result<Option<Rational>, String> {
        Ok(metric::constant_curvature_of(&e.metric, &self.curvature(e)?))
    }

    fn classify(&self, e: &CatalogEntry) -> Result<ClassificationReport, String> {
        classify::analyze_left_invariant_with_cap(&e.algebra, &e.metric, self.config.prolongation_cap).map_err(|e| e.to_string())
    }
}

fn expect(cond: bool, ok: impl Into<String>, err: impl FnOnce() -> String) -> Result<String, String> {
    if cond {
        Ok(ok.into())
    } else {
        Err(err())
    }
}

pub fn run(config: &VerifyConfig) -> VerifySummary {
    let mut s = Suite { config, checks: Vec::new() };
    catalog_entries(&mut s);
    sol_connection(&mut s);
    sol_curvature(&mut s);
    isotropy_checks(&mut s);
    sweep(&mut s);
    constant_curvature(&mut s);
    geodesic_checks(&mut s);
    gl_checks(&mut s);
    normal_forms(&mut s);
    models(&mut s);
    let count = |st| s.checks.iter().filter(|c| c.status == st).count();
    VerifySummary {
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        checks: s.checks,
    }
}

fn catalog_entries(s: &mut Suite) {
    for (name, anchor) in ENTRY_ANCHORS {
        let result = s.entry(name).and_then(|e| {
            if e.anchor != anchor {
                return Err(format!("{name} is labelled {}", e.anchor));
            }
            let r = s.classify(&e)?;
            let x = &e.expected;
            let kappa_sign = r.curvature.constant_kappa.as_ref().map(|k| rational::sign(k) as i8);
            let got = (r.isotropy_dim, r.geometry_class, r.maximal_geometry, r.completeness_flag, r.compact_realization, kappa_sign);
            let want = (x.isotropy_dim, x.class, x.maximal, x.completeness, x.compact_realization, x.kappa_sign);
            expect(got == want && r.curvature.flat == x.flat, format!("{name}: {}", r.geometry_class), || {
                format!("{name}: got {got:?}, expected {want:?}")
            })
        });
        s.record(anchor, result);
    }
}

fn sol_connection(s: &mut Suite) {
    let result = s.entry("lorentz_sol").and_then(|e| {
        let gamma = metric::levi_civita(&e.algebra, &e.metric).map_err(|e| e.to_string())?;
        // (X′, Z, T) = indices 0, 1, 2; nonzero entries of ∇_{e_i} e_j.
        let mut want = vec![vec![vec![int(0); 3]; 3]; 3];
        want[1][2] = vec![int(0), int(1), int(0)];
        want[2][2] = vec![int(0), int(0), int(-1)];
        want[1][1] = vec![int(-1), int(0), int(0)];
        want[2][0] = vec![int(1), int(0), int(0)];
        let bad: Vec<(usize, usize)> =
            (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| gamma.basis(i, j) != want[i][j]).collect();
        expect(bad.is_empty(), "all 9 entries exact", || format!("entries (along, of) differing: {bad:?}"))
    });
    s.record("lorentz-sol/connection", result);
}

fn sol_curvature(s: &mut Suite) {
    let result = s.entry("lorentz_sol").and_then(|e| {
        let op = s.curvature(&e)?.operator(2, 1);
        let want = QMatrix::from_i64(&[&[0, -2, 0], &[0, 0, 2], &[0, 0, 0]]);
        expect(op == want, "R(T,Z) = [[0,-2,0],[0,0,2],[0,0,0]]", || format!("R(T,Z) = {:?}", op.to_strings()))
    });
    s.record("lorentz-sol/curvature-operator", result);
    let result = s.entry("lorentz_sol").and_then(|e| {
        let c = s.curvature(&e)?;
        expect(
            rational::sign(&c.scalar).is_eq() && rational::sign(&c.ricci_squared).is_eq() && !c.is_flat(),
            "scalar = tr(Ric²) = 0, not flat",
            || format!("scalar {}, tr(Ric²) {}", c.scalar, c.ricci_squared),
        )
    });
    s.record("lorentz-sol/vanishing-scalar-invariants", result);
}

fn isotropy_checks(s: &mut Suite) {
    let cases: [(&str, &'static str, usize, Option<IsoType>); 7] = [
        ("lorentz_sol", "lorentz-sol/unipotent-isotropy", 1, Some(IsoType::Unipotent)),
        ("lorentz_heisenberg", "lorentz-heisenberg/semisimple-isotropy", 1, Some(IsoType::SemiSimple)),
        ("heis_elliptic", "heisenberg/elliptic-isotropy", 1, Some(IsoType::Elliptic)),
        ("minkowski", "flat/full-isotropy", 3, Some(IsoType::Full3)),
        ("flat_heis", "flat/full-isotropy", 3, Some(IsoType::Full3)),
        ("flat_sol", "flat/full-isotropy", 3, Some(IsoType::Full3)),
        ("anti_de_sitter_killing", "anti-de-sitter/full-isotropy", 3, Some(IsoType::Full3)),
    ];
    for (name, anchor, dim, ty) in cases {
        let result = s.entry(name).and_then(|e| {
            let iso = isotropy::prolongation_with_cap(&e.algebra, &e.metric, s.config.prolongation_cap).map_err(|e| e.to_string())?;
            let killing = 3 + iso.dim;
            expect(
                iso.cap_reached.is_none() && iso.dim == dim && iso.type_tag == ty,
                format!("{name}: dim {dim} {}, killing dim {killing}", ty.map_or("-".into(), |t| format!("{t:?}"))),
                || format!("{name}: dims {:?}, type {:?}, cap reached {:?}", iso.dims, iso.type_tag, iso.cap_reached),
            )
        });
        s.record(anchor, result);
    }
}

fn sweep(s: &mut Suite) {
    const ANCHOR: &str = "isotropy/no-dimension-two";
    let n = s.config.sweep_samples;
    if n == 0 {
        s.checks.push(Check { anchor: ANCHOR, status: Status::Skip, detail: "0 samples requested".into() });
        return;
    }
    let mut r = sampling::rng(s.config.seed);
    let mut hist = [0usize; 4];
    let mut problems = Vec::new();
    for i in 0..n {
        let smp = sampling::random_sample(&mut r);
        match isotropy::prolongation_with_cap(&smp.algebra, &smp.metric, s.config.prolongation_cap) {
            Ok(iso) if iso.cap_reached.is_some() => problems.push(format!("sample {i}: cap reached, dims {:?}", iso.dims)),
            Ok(iso) => hist[iso.dim] += 1,
            Err(e) => problems.push(format!("sample {i}: {e}")),
        }
    }
    let detail = format!("{n} samples, dims 0/1/2/3 = {}/{}/{}/{}", hist[0], hist[1], hist[2], hist[3]);
    let result = expect(hist[2] == 0 && problems.is_empty(), detail.clone(), || {
        format!("{detail}; {}", problems.first().cloned().unwrap_or_default())
    });
    s.record(ANCHOR, result);
}

fn constant_curvature(s: &mut Suite) {
    let show = |k: &Option<Rational>| k.as_ref().map_or("not constant".to_string(), rational::format);
    let cases: [(&str, &'static str, Option<Rational>); 4] = [
        ("minkowski", "constant-curvature/minkowski-zero", Some(int(0))),
        ("anti_de_sitter_killing", "constant-curvature/anti-de-sitter-negative", Some(frac(-1, 8))),
        ("lorentz_sol", "constant-curvature/lorentz-sol-not-constant", None),
        ("lorentz_heisenberg", "constant-curvature/lorentz-heisenberg-not-constant", None),
    ];
    for (name, anchor, want) in cases {
        let result = s.entry(name).and_then(|e| {
            let k = s.kappa(&e)?;
            expect(k == want, format!("{name}: {}", show(&k)), || format!("{name}: {}, expected {}", show(&k), show(&want)))
        });
        s.record(anchor, result);
    }
}

fn geodesic_checks(s: &mut Suite) {
    let result = s.entry("lorentz_sol").and_then(|e| {
        let cfg = GeodesicConfig { t_max: 2.0, record: false, ..GeodesicConfig::default() };
        let tr = geodesics::integrate_geodesic(&e.algebra, &e.metric, &[0.0, 0.0, 1.0], &cfg).map_err(|e| e.to_string())?;
        match tr.outcome {
            Outcome::BlowupDetected { t_low, t_high } => expect(
                t_low <= 1.0 && 1.0 <= t_high && (t_high - 1.0).abs() <= 1e-4 && tr.max_energy_drift <= 1e-8,
                format!("blowup in [{t_low:.9}, {t_high:.9}], drift {:.1e}", tr.max_energy_drift),
                || format!("bracket [{t_low}, {t_high}], drift {:e}", tr.max_energy_drift),
            ),
            Outcome::ReachedHorizon => Err("no blowup before t = 2".into()),
        }
    });
    s.record("lorentz-sol/incomplete-geodesic", result);
    let result = s.entry("lorentz_heisenberg").and_then(|e| {
        let cfg = ProbeConfig { seed: s.config.seed, ..ProbeConfig::default() };
        let p = geodesics::completeness_probe(&e.algebra, &e.metric, &cfg).map_err(|e| e.to_string())?;
        expect(
            p.verdict == ProbeVerdict::NoBlowupFoundWithinHorizon && p.failures.is_empty() && p.max_energy_drift <= 1e-8,
            format!("{} directions to t = {}, drift {:.1e}", p.directions, p.horizon, p.max_energy_drift),
            || format!("verdict {:?}, failures {}, drift {:e}", p.verdict, p.failures.len(), p.max_energy_drift),
        )
    });
    s.record("lorentz-heisenberg/complete-geodesics", result);
}

fn gl_checks(s: &mut Suite) {
    let sl2 = catalog::sl2();
    let mut cases: Vec<(String, Result<InvariantMetric, String>, GlVerdict)> = ["anti_de_sitter_killing", "sl2_right_semisimple", "sl2_right_unipotent"]
        .iter()
        .map(|n| (n.to_string(), s.entry(n).map(|e| e.metric), GlVerdict::Complete))
        .collect();
    let distinct = InvariantMetric::from_entries(3, &[(0, 0, int(2)), (1, 1, int(2)), (2, 2, int(2)), (1, 2, int(-10))]);
    cases.push(("three distinct eigenvalues".into(), Ok(distinct), GlVerdict::Inconclusive));
    for (label, m, want) in cases {
        let result = m.and_then(|m| {
            let phi = geodesics::gl_criterion(&sl2, &m).map_err(|e| e.to_string())?;
            expect(phi.verdict == want, format!("{label}: {want:?}"), || format!("{label}: {:?}, expected {want:?}", phi.verdict))
        });
        s.record("sl2/eigenspace-completeness-criterion", result);
    }
}

fn normal_forms(s: &mut Suite) {
    for (name, want) in [
        ("lorentz_heisenberg", HeisClass::LorentzHeisenberg),
        ("flat_heis", HeisClass::FlatNullCenter),
        ("heis_elliptic", HeisClass::EllipticRiemannianType),
    ] {
        let result = s.entry(name).and_then(|e| {
            let nf = catalog::normalize_heis(&e.algebra, &e.metric).map_err(|e| e.to_string())?;
            let witness_ok = match (&nf.witness, &nf.scale) {
                (Some(w), Some(k)) => {
                    lie::is_witness(&e.algebra, AlgebraTag::Heis, w)
                        && e.metric.congruent(w) == catalog::lorentz_heisenberg_metric().scaled(k)
                }
                (None, None) => want != HeisClass::LorentzHeisenberg,
                _ => false,
            };
            expect(nf.class == want && witness_ok, format!("{name}: {want:?}"), || {
                format!("{name}: {:?} (witness valid: {witness_ok})", nf.class)
            })
        });
        s.record("heisenberg/center-norm-trichotomy", result);
    }
    for lambda in [int(1), int(2), int(5), frac(1, 3)] {
        let result = s.entry("lorentz_sol").and_then(|e| {
            let m = e.metric.scaled(&lambda);
            let nf = catalog::normalize_sol(&e.algebra, &m).map_err(|e| e.to_string())?;
            let ok = match (&nf.witness, &nf.scale) {
                (Some(w), Some(k)) => {
                    nf.class == SolClass::LorentzSOL
                        && lie::is_witness(&e.algebra, AlgebraTag::Sol, w)
                        && m.congruent(w) == catalog::lorentz_sol_metric().scaled(k)
                }
                _ => false,
            };
            let l = rational::format(&lambda);
            expect(ok, format!("λ = {l}: canonical with witness"), || format!("λ = {l}: {:?}", nf.class))
        });
        s.record("lorentz-sol/isometric-to-multiples", result);
    }
}

fn model_class(s: &Suite, name: &str) -> Result<ClassificationReport, String> {
    let m = catalog::model_get(name).map_err(|e| e.to_string())?;
    classify::analyze_model_with_cap(&m, s.config.prolongation_cap).map_err(|e| e.to_string())
}

fn models(s: &mut Suite) {
    for (name, anchor, want) in [
        ("lorentz_sol_4d", "models/lorentz-sol", GeometryClass::LorentzSOL),
        ("lorentz_heisenberg_4d", "models/lorentz-heisenberg", GeometryClass::LorentzHeisenberg),
    ] {
        let result = model_class(s, name).and_then(|r| {
            expect(r.geometry_class == want, format!("{name}: {want}"), || format!("{name}: {}", r.geometry_class))
        });
        s.record(anchor, result);
    }
    for m in ["0", "1", "-1", "2", "1/2"] {
        let name = format!("unipotent_family(0,{m},0)");
        let result = model_class(s, &name).and_then(|r| {
            expect(r.curvature.flat && r.maximal_geometry == MaximalGeometry::Minkowski, format!("{name}: {}", r.geometry_class), || {
                format!("{name}: {} (flat {})", r.geometry_class, r.curvature.flat)
            })
        });
        s.record("models/unipotent-null-parameter-flat", result);
    }
    // A compact realization with c ≠ 0 must be Lorentz-SOL: every member either is, or has none.
    for p in ["1,0,0", "1,1,0", "2,0,0", "1,0,1", "1,0,2", "-1,0,2", "1,3,2", "2,0,8"] {
        let name = format!("unipotent_family({p})");
        let m = catalog::model_get(&name).map_err(|e| e.to_string());
        let result = m.and_then(|m| match classify::analyze_model_with_cap(&m, s.config.prolongation_cap) {
            Ok(r) if r.geometry_class == GeometryClass::LorentzSOL => Ok(format!("{name}: LorentzSOL")),
            Ok(r) if r.compact_realization == Some(false) => {
                Ok(format!("{name}: {} without compact realization", r.geometry_class))
            }
            Ok(r) => Err(format!("{name}: {} with compact realization {:?}", r.geometry_class, r.compact_realization)),
            Err(ClassifyError::NoTransverseSubalgebra) => Ok(format!("{name}: no rational transverse subgroup")),
            Err(e) => Err(format!("{name}: {e}")),
        });
        s.record("models/unipotent-compact-is-lorentz-sol", result);
    }
    let result = model_class(s, "r_x_sol_flat").and_then(|r| {
        let want = GeometryClass::FlatSubclass(AlgebraTag::Sol);
        expect(r.geometry_class == want && r.maximal_geometry == MaximalGeometry::Minkowski, format!("{want}, maximal Minkowski"), || {
            format!("{} with maximal {:?}", r.geometry_class, r.maximal_geometry)
        })
    });
    s.record("models/r-times-sol-flat", result);
    let result = model_class(s, "product_r_desitter2_4d").and_then(|r| {
        expect(r.compact_realization == Some(false), format!("{}: no compact realization", r.geometry_class), || {
            format!("{}: compact realization {:?}", r.geometry_class, r.compact_realization)
        })
    });
    s.record("models/product-r-de-sitter", result);
}
