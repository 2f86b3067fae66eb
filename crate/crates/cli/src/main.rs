use clap::{Args, Parser, Subcommand, ValueEnum};
use lorhom3_cli::exit;
use lorhom3_cli::input::{self, Parsed};
use lorhom3_cli::report::{self, AnalyzeResult, ConnectionLine, GeodesicResult, ReportDocument, Tolerances};
use lorhom3_cli::verify::{self, VerifyConfig};
use lorhom3_core::catalog::{self, CatalogEntry, CatalogError};
use lorhom3_core::classify::{self, ClassificationReport, ClassifyError, CompletenessFlag, GeometryClass, MaximalGeometry};
use lorhom3_core::geodesics::{self, GeodesicConfig, GeodesicError, ProbeConfig};
use lorhom3_core::isotropy::{IsoType, PROLONGATION_CAP};
use lorhom3_core::metric;
use lorhom3_core::rational;
use lorhom3_core::{InvariantMetric, LieAlgebra};
use serde::Serialize;
use std::fmt::Write;
use std::path::{Path, PathBuf};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "lorhom3", version, about = "Exact geometry of left-invariant Lorentz metrics on 3-dimensional Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Seed for sampled directions and sweeps.
    #[arg(long, env = "LORHOM3_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// List or show the named metrics.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Classify the metric or model described by a JSON document.
    Analyze {
        file: PathBuf,
        /// Attach a geodesic completeness probe (3-dimensional documents only).
        #[arg(long)]
        probe: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Show a named 4-dimensional model, or `list` them.
    Model {
        name: String,
        #[arg(long)]
        analyze: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Integrate a geodesic from `--v0`, or probe sampled directions when `--v0` is absent.
    Geodesic {
        /// JSON document or catalog name.
        target: String,
        /// Initial body velocity, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        v0: Option<String>,
        #[arg(long, default_value_t = 100.0)]
        t_max: f64,
        #[arg(long)]
        rtol: Option<f64>,
        #[arg(long, default_value_t = 1e6)]
        escape_norm: f64,
        /// Number of sampled directions for a probe.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Keep every accepted step in the report.
        #[arg(long)]
        record: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run the regression suite; exits nonzero on any failed check.
    VerifyPaper {
        /// Random samples in the isotropy dimension sweep.
        #[arg(long, default_value_t = 10_000)]
        sweep_samples: usize,
        #[arg(long, hide = true, default_value_t = PROLONGATION_CAP)]
        prolongation_cap: usize,
        #[arg(long, hide = true)]
        drop_entry: Vec<String>,
        #[arg(long, hide = true)]
        flip_curvature_sign: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Show {
        name: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn catalog_failure(e: CatalogError) -> Failure {
    match e {
        CatalogError::UnknownName(_) => Failure::new(exit::UNKNOWN_NAME, e.to_string()),
        other => Failure::new(exit::INVALID_INPUT, other.to_string()),
    }
}

fn classify_failure(e: ClassifyError) -> Failure {
    let code = match e {
        ClassifyError::Lie(_) | ClassifyError::Metric(_) | ClassifyError::Isotropy(_) => exit::INVALID_INPUT,
        _ => exit::NUMERICAL,
    };
    Failure::new(code, e.to_string())
}

fn geodesic_failure(e: GeodesicError) -> Failure {
    let code = match e {
        GeodesicError::ToleranceUnachievable { .. } | GeodesicError::StepLimit(_) => exit::NUMERICAL,
        _ => exit::INVALID_INPUT,
    };
    Failure::new(code, e.to_string())
}

fn emit<T: Serialize>(doc: &ReportDocument<T>, format: Format, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => println!("{}", doc.to_json()),
        Format::Text => print!("{}", text(&doc.result)),
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Catalog { action: CatalogAction::List { format } } => catalog_list(format),
        Command::Catalog { action: CatalogAction::Show { name, format } } => catalog_show(&name, format),
        Command::Analyze { file, probe, common } => analyze(&file, probe, &common),
        Command::Model { name, analyze, common } => model(&name, analyze, &common),
        Command::Geodesic { target, v0, t_max, rtol, escape_norm, samples, record, common } => {
            geodesic(&target, v0.as_deref(), t_max, rtol, escape_norm, samples, record, &common)
        }
        Command::VerifyPaper { sweep_samples, prolongation_cap, drop_entry, flip_curvature_sign, common } => {
            let config = VerifyConfig {
                prolongation_cap,
                sweep_samples,
                seed: common.seed,
                dropped_entries: drop_entry,
                flip_curvature_sign,
            };
            verify_paper(&config, common.format)
        }
    }
}

#[derive(Serialize)]
struct ListedEntry {
    name: &'static str,
    anchor: &'static str,
    description: &'static str,
}

fn catalog_list(format: Format) -> Result<i32, Failure> {
    let entries: Vec<ListedEntry> = catalog::catalog()
        .into_iter()
        .map(|e| ListedEntry { name: e.name, anchor: e.anchor, description: e.description })
        .collect();
    emit(&ReportDocument::new("catalog list", entries), format, |entries| {
        entries.iter().fold(String::new(), |mut s, e| {
            let _ = writeln!(s, "{:<24} {}", e.name, e.anchor);
            s
        })
    });
    Ok(exit::OK)
}

#[derive(Serialize)]
struct ExpectedView {
    isotropy_dim: usize,
    isotropy_type: IsoType,
    flat: bool,
    kappa_sign: Option<i8>,
    class: GeometryClass,
    completeness: CompletenessFlag,
    maximal: MaximalGeometry,
    compact_realization: Option<bool>,
}

#[derive(Serialize)]
struct ShownEntry {
    name: &'static str,
    anchor: &'static str,
    description: &'static str,
    document: input::InputDocument,
    expected: ExpectedView,
    connection: Vec<ConnectionLine>,
    #[serde(skip)]
    bracket_lines: Vec<String>,
}

fn shown_entry(e: CatalogEntry) -> Result<ShownEntry, Failure> {
    let gamma = metric::levi_civita(&e.algebra, &e.metric).map_err(|err| Failure::new(exit::NUMERICAL, err.to_string()))?;
    let x = e.expected;
    Ok(ShownEntry {
        name: e.name,
        anchor: e.anchor,
        description: e.description,
        document: input::document_for(Some(e.name), &e.algebra, &e.metric),
        expected: ExpectedView {
            isotropy_dim: x.isotropy_dim,
            isotropy_type: x.isotropy_type,
            flat: x.flat,
            kappa_sign: x.kappa_sign,
            class: x.class,
            completeness: x.completeness,
            maximal: x.maximal,
            compact_realization: x.compact_realization,
        },
        connection: report::connection_table(&gamma, e.algebra.names()),
        bracket_lines: e
            .algebra
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, v)| {
                let names = e.algebra.names();
                format!("[{}, {}] = {}", names[i], names[j], report::format_vector(&v, names))
            })
            .collect(),
    })
}

fn shown_text(e: &ShownEntry) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} [{}]", e.name, e.anchor);
    let _ = writeln!(s, "{}", e.description);
    let d = &e.document;
    let _ = writeln!(s, "basis: {}", d.basis.join(", "));
    let show = |f: &input::RationalField| match f {
        input::RationalField::Int(n) => n.to_string(),
        input::RationalField::Text(t) => t.clone(),
    };
    for b in &e.bracket_lines {
        let _ = writeln!(s, "{b}");
    }
    let metric: Vec<String> = d.metric.iter().map(|(k, v)| format!("g({k}) = {}", show(v))).collect();
    let _ = writeln!(s, "metric: {}", metric.join(", "));
    let x = &e.expected;
    let _ = writeln!(
        s,
        "expected: {}, isotropy {} {:?}, maximal {:?}, {:?}, compact realization {:?}",
        x.class, x.isotropy_dim, x.isotropy_type, x.maximal, x.completeness, x.compact_realization
    );
    let _ = writeln!(s, "connection:");
    for l in e.connection.iter().filter(|l| l.value != "0") {
        let _ = writeln!(s, "  ∇_{} {} = {}", l.along, l.of, l.value);
    }
    let _ = writeln!(s, "  (all other ∇_a b = 0)");
    s
}

fn catalog_show(name: &str, format: Format) -> Result<i32, Failure> {
    let e = catalog::catalog_get(name).map_err(catalog_failure)?;
    let doc = ReportDocument::new("catalog show", shown_entry(e)?);
    emit(&doc, format, shown_text);
    Ok(exit::OK)
}

fn read_document(path: &Path) -> Result<Parsed, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::INVALID_INPUT, format!("{}: {e}", path.display())))?;
    input::parse(&text).map_err(|e| Failure::new(exit::INVALID_INPUT, format!("{}: {e}", path.display())))
}

fn probe_config(seed: u64, samples: usize, t_max: f64, rtol: Option<f64>, escape_norm: f64) -> ProbeConfig {
    let base = ProbeConfig::default();
    ProbeConfig {
        samples,
        seed,
        geodesic: GeodesicConfig {
            t_max,
            escape_norm,
            rtol: rtol.unwrap_or(base.geodesic.rtol),
            ..base.geodesic
        },
        ..base
    }
}

fn tolerances_for(cfg: &GeodesicConfig) -> Tolerances {
    Tolerances {
        rtol: Some(cfg.rtol),
        escape_norm: Some(cfg.escape_norm),
        t_max: Some(cfg.t_max),
        h_min: Some(cfg.h_min),
        ..Tolerances::default()
    }
}

fn analyze(file: &Path, probe: bool, common: &Common) -> Result<i32, Failure> {
    let parsed = read_document(file)?;
    let mut doc = ReportDocument::new("analyze", ());
    doc.input = Some(file.display().to_string());
    doc.tolerances.prolongation_cap = Some(PROLONGATION_CAP);
    let result = match parsed {
        Parsed::LeftInvariant { name, algebra, metric } => {
            let mut classification = classify::analyze_left_invariant(&algebra, &metric).map_err(classify_failure)?;
            if probe {
                let cfg = probe_config(common.seed, 64, 100.0, None, 1e6);
                let p = geodesics::completeness_probe(&algebra, &metric, &cfg).map_err(geodesic_failure)?;
                doc.seed = Some(common.seed);
                let t = tolerances_for(&cfg.geodesic);
                doc.tolerances = Tolerances { prolongation_cap: doc.tolerances.prolongation_cap, ..t };
                classification.probe = Some(p);
            }
            let normal_form = report::normal_form(&algebra, &metric, classification.algebra);
            AnalyzeResult { name, classification, normal_form }
        }
        Parsed::Model(model) => {
            if probe {
                return Err(Failure::new(exit::INVALID_INPUT, "--probe needs a 3-dimensional document"));
            }
            let classification = classify::analyze_model(&model).map_err(classify_failure)?;
            AnalyzeResult { name: Some(model.name), classification, normal_form: None }
        }
    };
    let doc = doc.with_result(result);
    emit(&doc, common.format, report::analyze_text);
    Ok(exit::OK)
}

#[derive(Serialize)]
struct ModelView {
    name: String,
    document: Option<input::InputDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<ClassificationReport>,
}

fn model(name: &str, analyze: bool, common: &Common) -> Result<i32, Failure> {
    if name == "list" {
        let names: Vec<&str> = catalog::MODEL_NAMES.to_vec();
        emit(&ReportDocument::new("model list", names), common.format, |n| n.join("\n") + "\n");
        return Ok(exit::OK);
    }
    let m = catalog::model_get(name).map_err(catalog_failure)?;
    let classification = if analyze { Some(classify::analyze_model(&m).map_err(classify_failure)?) } else { None };
    let mut doc = ReportDocument::new("model", ModelView { name: m.name.clone(), document: input::document_for_model(&m), classification });
    if analyze {
        doc.tolerances.prolongation_cap = Some(PROLONGATION_CAP);
    }
    emit(&doc, common.format, |v| match &v.classification {
        Some(c) => report::classification_text(c),
        None => serde_json::to_string_pretty(&v.document).expect("documents serialize") + "\n",
    });
    Ok(exit::OK)
}

fn resolve_target(target: &str) -> Result<(LieAlgebra, InvariantMetric), Failure> {
    let path = Path::new(target);
    if path.exists() {
        return match read_document(path)? {
            Parsed::LeftInvariant { algebra, metric, .. } => Ok((algebra, metric)),
            Parsed::Model(_) => Err(Failure::new(exit::INVALID_INPUT, "geodesics need a 3-dimensional document")),
        };
    }
    let e = catalog::catalog_get(target).map_err(catalog_failure)?;
    Ok((e.algebra, e.metric))
}

fn parse_v0(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .or_else(|| rational::parse(part).ok().map(|q| rational::to_f64(&q)))
                .ok_or_else(|| Failure::new(exit::INVALID_INPUT, format!("--v0: cannot read component {part:?}")))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn geodesic(
    target: &str,
    v0: Option<&str>,
    t_max: f64,
    rtol: Option<f64>,
    escape_norm: f64,
    samples: usize,
    record: bool,
    common: &Common,
) -> Result<i32, Failure> {
    let (algebra, metric) = resolve_target(target)?;
    let mut doc = ReportDocument::new("geodesic", ());
    doc.input = Some(target.to_string());
    let result = match v0 {
        Some(v0) => {
            let v = parse_v0(v0)?;
            if v.iter().all(|x| *x == 0.0) {
                return Err(Failure::new(exit::INVALID_INPUT, "--v0 must be nonzero"));
            }
            let cfg = GeodesicConfig {
                t_max,
                escape_norm,
                rtol: rtol.unwrap_or(GeodesicConfig::default().rtol),
                record,
                ..GeodesicConfig::default()
            };
            let trajectory = geodesics::integrate_geodesic(&algebra, &metric, &v, &cfg).map_err(geodesic_failure)?;
            doc.tolerances = tolerances_for(&cfg);
            GeodesicResult::Trajectory { target: target.to_string(), v0: v, trajectory }
        }
        None => {
            let cfg = probe_config(common.seed, samples, t_max, rtol, escape_norm);
            let probe = geodesics::completeness_probe(&algebra, &metric, &cfg).map_err(geodesic_failure)?;
            doc.seed = Some(common.seed);
            doc.tolerances = tolerances_for(&cfg.geodesic);
            GeodesicResult::Probe { target: target.to_string(), probe }
        }
    };
    let doc = doc.with_result(result);
    emit(&doc, common.format, report::geodesic_text);
    Ok(exit::OK)
}

fn verify_paper(config: &VerifyConfig, format: Format) -> Result<i32, Failure> {
    let summary = verify::run(config);
    let ok = summary.ok();
    let failed = summary.failed_anchors();
    let mut doc = ReportDocument::new("verify-paper", summary);
    doc.seed = Some(config.seed);
    doc.tolerances.prolongation_cap = Some(config.prolongation_cap);
    emit(&doc, format, verify::VerifySummary::text);
    if ok {
        Ok(exit::OK)
    } else {
        eprintln!("verify-paper: failed anchors: {}", failed.join(", "));
        Ok(exit::CHECK_FAILED)
    }
}
