//! Release gate: one line per criterion, nonzero exit if any fails.

use lorhom3_core::catalog::{self, HeisClass, SolClass};
use lorhom3_core::classify::{self, GeometryClass, MaximalGeometry};
use lorhom3_core::geodesics::{self, GeodesicConfig, GlVerdict, Outcome, ProbeConfig, ProbeVerdict};
use lorhom3_core::isotropy::{self, IsoType};
use lorhom3_core::lie::{self, AlgebraTag};
use lorhom3_core::metric;
use lorhom3_core::rational::{self, frac, int, Rational};
use lorhom3_core::{sampling, InvariantMetric, QMatrix};
use std::cmp::Ordering;
use std::process::Command;
use std::time::{Duration, Instant};

type Verdict = Result<String, String>;

fn check(cond: bool, ok: String, err: String) -> Verdict {
    if cond {
        Ok(ok)
    } else {
        Err(err)
    }
}

fn entry(name: &str) -> catalog::CatalogEntry {
    catalog::catalog_get(name).unwrap()
}

fn c1_connection() -> Verdict {
    let e = entry("lorentz_sol");
    let start = Instant::now();
    let gamma = metric::levi_civita(&e.algebra, &e.metric).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let v = |a: i64, b: i64, c: i64| vec![int(a), int(b), int(c)];
    // Basis (X′, Z, T); want[i][j] = ∇_{e_i} e_j.
    let mut want = vec![vec![v(0, 0, 0); 3]; 3];
    want[1][2] = v(0, 1, 0);
    want[2][1] = v(0, 0, 0);
    want[2][2] = v(0, 0, -1);
    want[1][1] = v(-1, 0, 0);
    want[2][0] = v(1, 0, 0);
    let mismatches: Vec<(usize, usize)> =
        (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| gamma.basis(i, j) != want[i][j]).collect();
    check(
        mismatches.is_empty() && elapsed < Duration::from_millis(1),
        format!("9/9 entries exact in {elapsed:?}"),
        format!("mismatched entries {mismatches:?}, runtime {elapsed:?}"),
    )
}

fn c2_curvature_operator() -> Verdict {
    let e = entry("lorentz_sol");
    let (_, curv) = metric::geometry(&e.algebra, &e.metric).map_err(|e| e.to_string())?;
    let op = curv.operator(2, 1);
    let want = QMatrix::from_i64(&[&[0, -2, 0], &[0, 0, 2], &[0, 0, 0]]);
    check(op == want, format!("R(T,Z) = {:?}", op.to_strings()), format!("R(T,Z) = {:?}", op.to_strings()))
}

fn c3_scalar_invariants() -> Verdict {
    let e = entry("lorentz_sol");
    let (_, curv) = metric::geometry(&e.algebra, &e.metric).map_err(|e| e.to_string())?;
    let detail = format!("scalar = {}, tr(Ric²) = {}", curv.scalar, curv.ricci_squared);
    check(rational::sign(&curv.scalar).is_eq() && rational::sign(&curv.ricci_squared).is_eq(), detail.clone(), detail)
}

fn c4_isotropy() -> Verdict {
    let mut cases: Vec<(&str, usize, IsoType, usize)> = vec![
        ("lorentz_sol", 1, IsoType::Unipotent, 4),
        ("lorentz_heisenberg", 1, IsoType::SemiSimple, 4),
        ("heis_elliptic", 1, IsoType::Elliptic, 4),
        ("anti_de_sitter_killing", 3, IsoType::Full3, 6),
    ];
    let flat: Vec<&'static str> = catalog::catalog().into_iter().filter(|e| e.expected.flat).map(|e| e.name).collect();
    cases.extend(flat.iter().map(|n| (*n, 3, IsoType::Full3, 6)));
    let mut bad = Vec::new();
    for (name, dim, ty, killing) in &cases {
        let e = entry(name);
        let iso = isotropy::prolongation(&e.algebra, &e.metric).map_err(|e| e.to_string())?;
        let r = classify::analyze_left_invariant(&e.algebra, &e.metric).map_err(|e| e.to_string())?;
        if iso.dim != *dim || iso.type_tag != Some(*ty) || r.killing_dim != *killing {
            bad.push(format!("{name}: dim {} {:?} killing {}", iso.dim, iso.type_tag, r.killing_dim));
        }
    }
    check(
        bad.is_empty(),
        format!("{} entries (flat: {})", cases.len(), flat.join(", ")),
        bad.join("; "),
    )
}

fn c5_sweep() -> Verdict {
    const SAMPLES: usize = 10_000;
    const SEED: u64 = 20_240_917;
    let start = Instant::now();
    let mut r = sampling::rng(SEED);
    let mut hist = [0usize; 4];
    let mut errors = Vec::new();
    for i in 0..SAMPLES {
        let s = sampling::random_sample(&mut r);
        match isotropy::prolongation(&s.algebra, &s.metric) {
            Ok(iso) if iso.cap_reached.is_none() => hist[iso.dim] += 1,
            Ok(iso) => errors.push(format!("sample {i}: cap reached {:?}", iso.dims)),
            Err(e) => errors.push(format!("sample {i}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let detail = format!(
        "{SAMPLES} samples (seed {SEED}), dims 0/1/2/3 = {}/{}/{}/{} in {:.1}s",
        hist[0],
        hist[1],
        hist[2],
        hist[3],
        elapsed.as_secs_f64()
    );
    check(
        hist[2] == 0 && errors.is_empty() && elapsed < Duration::from_secs(60),
        detail.clone(),
        format!("{detail}; {}", errors.first().cloned().unwrap_or_default()),
    )
}

fn c6_constant_curvature() -> Verdict {
    // Independent oracle for the Killing metric: R(x,y)z = −¼[[x,y],z], so
    // K(X′, Y−Z) = −¼ g([[X′,Y−Z],Y−Z], X′) / (g(X′,X′) g(Y−Z,Y−Z)).
    let ads = entry("anti_de_sitter_killing");
    let (a, g) = (&ads.algebra, &ads.metric);
    let x = vec![int(1), int(0), int(0)];
    let y = vec![int(0), int(1), int(-1)];
    let rxy_y = rational::int(-1) / int(4) * g.apply(&a.bracket(&a.bracket(&x, &y), &y), &x);
    let oracle = rxy_y / (g.norm(&x) * g.norm(&y) - g.apply(&x, &y) * g.apply(&x, &y));
    let k = |n: &str| {
        let e = entry(n);
        metric::constant_curvature_test(&e.algebra, &e.metric).unwrap()
    };
    let got = [k("minkowski"), k("anti_de_sitter_killing"), k("lorentz_sol"), k("lorentz_heisenberg")];
    let want = [Some(int(0)), Some(oracle.clone()), None, None];
    let show = |v: &[Option<Rational>]| {
        v.iter().map(|q| q.as_ref().map_or("none".into(), rational::format)).collect::<Vec<_>>().join(", ")
    };
    check(
        got == want && oracle == frac(-1, 8),
        format!("κ = {} (oracle {})", show(&got), rational::format(&oracle)),
        format!("κ = {}, expected {}", show(&got), show(&want)),
    )
}

fn c7_sol_blowup() -> Verdict {
    let e = entry("lorentz_sol");
    let cfg = GeodesicConfig { t_max: 2.0, record: false, ..GeodesicConfig::default() };
    let start = Instant::now();
    let tr = geodesics::integrate_geodesic(&e.algebra, &e.metric, &[0.0, 0.0, 1.0], &cfg).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    match tr.outcome {
        Outcome::BlowupDetected { t_low, t_high } => check(
            t_low <= 1.0 && 1.0 <= t_high && (t_high - 1.0).abs() <= 1e-4 && tr.max_energy_drift <= 1e-8 && elapsed < Duration::from_secs(1),
            format!("t* in [{t_low:.10}, {t_high:.10}], drift {:.1e}, {elapsed:?}", tr.max_energy_drift),
            format!("bracket [{t_low}, {t_high}], drift {:e}, {elapsed:?}", tr.max_energy_drift),
        ),
        Outcome::ReachedHorizon => Err("reached t = 2 without blowup".into()),
    }
}

fn c8_heisenberg_probe() -> Verdict {
    let e = entry("lorentz_heisenberg");
    let cfg = ProbeConfig { samples: 64, ..ProbeConfig::default() };
    let start = Instant::now();
    let p = geodesics::completeness_probe(&e.algebra, &e.metric, &cfg).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let detail = format!(
        "{} directions to t = {}, blowups {}, failures {}, drift {:.2e}, {:.2}s",
        p.directions,
        p.horizon,
        p.blowups,
        p.failures.len(),
        p.max_energy_drift,
        elapsed.as_secs_f64()
    );
    check(
        p.verdict == ProbeVerdict::NoBlowupFoundWithinHorizon
            && p.failures.is_empty()
            && p.horizon == 100.0
            && p.max_energy_drift <= 1e-8
            && elapsed < Duration::from_secs(30),
        detail.clone(),
        detail,
    )
}

fn c9_gl() -> Verdict {
    let sl2 = catalog::sl2();
    let mut got = Vec::new();
    for n in ["anti_de_sitter_killing", "sl2_right_semisimple", "sl2_right_unipotent"] {
        got.push(geodesics::gl_criterion(&sl2, &entry(n).metric).map_err(|e| e.to_string())?.verdict);
    }
    // Needs φ = B⁻¹G with three simple eigenvalues; `repeated_eigenvalue` confirms it.
    let m = InvariantMetric::from_entries(3, &[(0, 0, int(2)), (1, 1, int(2)), (2, 2, int(2)), (1, 2, int(-10))]);
    let phi = geodesics::gl_criterion(&sl2, &m).map_err(|e| e.to_string())?;
    let distinct = phi.repeated_eigenvalue.is_none();
    got.push(phi.verdict);
    let want = [GlVerdict::Complete, GlVerdict::Complete, GlVerdict::Complete, GlVerdict::Inconclusive];
    check(
        got == want && distinct,
        format!("{got:?}"),
        format!("{got:?} (distinct eigenvalues: {distinct})"),
    )
}

fn c10_normal_forms() -> Verdict {
    let mut bad = Vec::new();
    // Heis: class follows the sign of the center norm, in random bases and random metrics.
    let mut r = sampling::rng(99);
    let heis = catalog::heis();
    let mut counts = [0usize; 3];
    for i in 0..300 {
        let p = sampling::random_invertible(&mut r, 3, 2);
        let a = heis.conjugate(&p).unwrap();
        let m = sampling::random_lorentz_metric(&mut r, 3);
        let center = a.center().remove(0);
        let want = match rational::sign(&m.norm(&center)) {
            Ordering::Greater => HeisClass::LorentzHeisenberg,
            Ordering::Equal => HeisClass::FlatNullCenter,
            Ordering::Less => HeisClass::EllipticRiemannianType,
        };
        counts[want as usize] += 1;
        let nf = catalog::normalize_heis(&a, &m).map_err(|e| e.to_string())?;
        let witness_ok = match (&nf.witness, &nf.scale) {
            (Some(w), Some(k)) => lie::is_witness(&a, AlgebraTag::Heis, w) && m.congruent(w) == catalog::lorentz_heisenberg_metric().scaled(k),
            (None, None) => true,
            _ => false,
        };
        if nf.class != want || !witness_ok {
            bad.push(format!("heis sample {i}: {:?} vs {want:?}, witness ok {witness_ok}", nf.class));
        }
    }
    let sol = entry("lorentz_sol");
    for lambda in [int(1), int(2), int(5), frac(1, 3)] {
        let m = sol.metric.scaled(&lambda);
        let nf = catalog::normalize_sol(&sol.algebra, &m).map_err(|e| e.to_string())?;
        let ok = nf.class == SolClass::LorentzSOL
            && match (&nf.witness, &nf.scale) {
                (Some(w), Some(k)) => {
                    lie::is_witness(&sol.algebra, AlgebraTag::Sol, w) && m.congruent(w) == catalog::lorentz_sol_metric().scaled(k)
                }
                _ => false,
            };
        if !ok {
            bad.push(format!("sol λ = {}: {:?}", rational::format(&lambda), nf.class));
        }
    }
    check(
        bad.is_empty(),
        format!(
            "heis trichotomy on 300 samples ({} spacelike / {} null / {} timelike centers); sol λ ∈ {{1, 2, 5, 1/3}} with witnesses",
            counts[0], counts[1], counts[2]
        ),
        bad.join("; "),
    )
}

fn c11_models() -> Verdict {
    let class = |name: &str| -> Result<classify::ClassificationReport, String> {
        let m = catalog::model_get(name).map_err(|e| e.to_string())?;
        classify::analyze_model(&m).map_err(|e| format!("{name}: {e}"))
    };
    let mut bad = Vec::new();
    let mut expect = |ok: bool, msg: String| {
        if !ok {
            bad.push(msg);
        }
    };
    match class("lorentz_sol_4d") {
        Ok(r) => expect(r.geometry_class == GeometryClass::LorentzSOL, format!("lorentz_sol_4d: {}", r.geometry_class)),
        Err(e) => expect(false, e),
    }
    match class("lorentz_heisenberg_4d") {
        Ok(r) => expect(r.geometry_class == GeometryClass::LorentzHeisenberg, format!("lorentz_heisenberg_4d: {}", r.geometry_class)),
        Err(e) => expect(false, e),
    }
    for m in ["-2", "-1", "0", "1", "2", "1/2"] {
        let name = format!("unipotent_family(0,{m},0)");
        match class(&name) {
            Ok(r) => expect(
                r.curvature.flat && matches!(r.geometry_class, GeometryClass::Minkowski | GeometryClass::FlatSubclass(_)),
                format!("{name}: {}", r.geometry_class),
            ),
            Err(e) => expect(false, e),
        }
    }
    for p in ["1,0,0", "1,1,0", "2,0,0", "1,0,1", "1,0,-1", "1,0,2", "-1,0,2", "1,3,2", "2,0,8"] {
        let name = format!("unipotent_family({p})");
        match class(&name) {
            Ok(r) => expect(r.geometry_class == GeometryClass::LorentzSOL, format!("{name}: {}", r.geometry_class)),
            Err(e) => expect(false, e),
        }
    }
    match class("r_x_sol_flat") {
        Ok(r) => expect(
            r.geometry_class == GeometryClass::FlatSubclass(AlgebraTag::Sol) && r.maximal_geometry == MaximalGeometry::Minkowski,
            format!("r_x_sol_flat: {} / {:?}", r.geometry_class, r.maximal_geometry),
        ),
        Err(e) => expect(false, e),
    }
    match class("product_r_desitter2_4d") {
        Ok(r) => expect(r.compact_realization == Some(false), format!("product_r_desitter2_4d: compact {:?}", r.compact_realization)),
        Err(e) => expect(false, e),
    }
    check(bad.is_empty(), "all model classifications as stated".into(), bad.join("; "))
}

fn c12_verify_paper() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_lorhom3");
    let run = |args: &[&str]| Command::new(bin).env_remove("LORHOM3_SEED").args(args).output().map_err(|e| e.to_string());
    let start = Instant::now();
    let clean = run(&["verify-paper", "--format", "text"])?;
    if !clean.status.success() {
        let text = String::from_utf8_lossy(&clean.stdout);
        let failed: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
        return Err(format!("clean run exited {:?}: {}", clean.status.code(), failed.join(" | ")));
    }
    let clean_time = start.elapsed();
    let mut bad = Vec::new();
    for e in catalog::catalog() {
        let out = run(&["verify-paper", "--sweep-samples", "0", "--drop-entry", e.name])?;
        let stderr = String::from_utf8_lossy(&out.stderr);
        if out.status.success() || !stderr.contains(e.anchor) {
            bad.push(format!("dropping {}: exit {:?}", e.name, out.status.code()));
        }
    }
    check(
        bad.is_empty(),
        format!("clean run exit 0 in {:.1}s; each of 11 dropped entries exits nonzero naming its anchor", clean_time.as_secs_f64()),
        bad.join("; "),
    )
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 12] = [
        ("Lorentz-SOL connection table", c1_connection),
        ("Lorentz-SOL R(T,Z)", c2_curvature_operator),
        ("Lorentz-SOL scalar invariants", c3_scalar_invariants),
        ("isotropy dimensions and types", c4_isotropy),
        ("isotropy dimension sweep", c5_sweep),
        ("constant curvature test", c6_constant_curvature),
        ("Lorentz-SOL incompleteness witness", c7_sol_blowup),
        ("Lorentz-Heisenberg completeness probe", c8_heisenberg_probe),
        ("sl(2) eigenspace criterion", c9_gl),
        ("Heis and SOL normal forms", c10_normal_forms),
        ("4-dimensional models", c11_models),
        ("verify-paper gate", c12_verify_paper),
    ];
    let mut failed = 0;
    for (i, (label, f)) in criteria.iter().enumerate() {
        let (tag, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {tag} {label}: {detail}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
