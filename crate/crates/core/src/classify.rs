//! Geometry class, maximal geometry and completeness verdict for a left-invariant metric or a
//! 4-dimensional homogeneous model.

use crate::catalog::{self, SolClass};
use crate::geodesics::ProbeReport;
use crate::isotropy::{self, HomogeneousModel, IsoType, IsotropyError, PROLONGATION_CAP};
use crate::lie::{self, AlgebraTag, LieAlgebra, LieError};
use crate::linalg::{self, QMatrix};
use crate::metric::{self, InvariantMetric, MetricError};
use crate::rational::{self, Rational};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GeometryClass {
    Minkowski,
    DeSitter,
    AntiDeSitter,
    LorentzHeisenberg,
    LorentzSOL,
    Sl2RightUnipotent,
    Sl2RightSemiSimple,
    ProductRDeSitter2,
    RiemannianType,
    LeftInvariantOnly,
    FlatSubclass(AlgebraTag),
}

impl fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryClass::FlatSubclass(t) => write!(f, "FlatSubclass({})", t.label()),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MaximalGeometry {
    Minkowski,
    AntiDeSitter,
    LorentzHeisenberg,
    LorentzSOL,
    Riemannian,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CompletenessFlag {
    CompleteByTheorem,
    IncompleteByTheorem,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Isotropy(#[from] IsotropyError),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("prolongation did not stabilize within the cap (dimensions {0:?})")]
    CapReached(Vec<usize>),
    #[error("no 3-dimensional subalgebra transverse to the isotropy line was found")]
    NoTransverseSubalgebra,
}

pub const MAXIMAL_NOTE: &str = "maximal_geometry is looked up from the geometry class; \
                                extensions of the isometry group are not computed";
pub const COMPLETENESS_NOTE: &str = "completeness_flag restates the completeness theorem for compact \
                                     quotients; a geodesic probe, when attached, only corroborates it";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvatureSummary {
    /// `None` when the sectional curvature is not constant.
    #[serde(with = "rational::serde_str::option")]
    pub constant_kappa: Option<Rational>,
    pub flat: bool,
    #[serde(with = "rational::serde_str")]
    pub scalar: Rational,
    #[serde(with = "rational::serde_str")]
    pub ricci_squared: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransverseReport {
    pub tag: AlgebraTag,
    #[serde(with = "rational::serde_str::vec")]
    pub shifts: Vec<Rational>,
    /// Columns are the subalgebra basis vectors in the 4-dimensional basis.
    pub basis: QMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelSummary {
    pub name: String,
    pub isotropy_type: IsoType,
    pub center_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub algebra: AlgebraTag,
    pub algebra_witness: Option<QMatrix>,
    pub signature: (usize, usize, usize),
    pub curvature: CurvatureSummary,
    pub isotropy_dim: usize,
    pub isotropy_type: Option<IsoType>,
    pub prolongation_dims: Vec<usize>,
    pub killing_dim: usize,
    pub geometry_class: GeometryClass,
    pub maximal_geometry: MaximalGeometry,
    pub completeness_flag: CompletenessFlag,
    pub compact_realization: Option<bool>,
    pub non_riemannian: bool,
    pub transverse: Option<TransverseReport>,
    pub model: Option<ModelSummary>,
    pub probe: Option<ProbeReport>,
    pub warnings: Vec<String>,
    pub notes: Vec<&'static str>,
}

pub fn maximal_geometry_of(class: GeometryClass) -> MaximalGeometry {
    use GeometryClass as C;
    match class {
        C::Minkowski | C::FlatSubclass(_) => MaximalGeometry::Minkowski,
        C::AntiDeSitter | C::Sl2RightUnipotent | C::Sl2RightSemiSimple => MaximalGeometry::AntiDeSitter,
        C::LorentzHeisenberg => MaximalGeometry::LorentzHeisenberg,
        C::LorentzSOL => MaximalGeometry::LorentzSOL,
        C::RiemannianType => MaximalGeometry::Riemannian,
        C::DeSitter | C::ProductRDeSitter2 | C::LeftInvariantOnly => MaximalGeometry::None,
    }
}

pub fn maximal_geometry(report: &ClassificationReport) -> MaximalGeometry {
    maximal_geometry_of(report.geometry_class)
}

pub fn completeness_flag_of(class: GeometryClass) -> CompletenessFlag {
    use GeometryClass as C;
    match class {
        C::LorentzSOL => CompletenessFlag::IncompleteByTheorem,
        C::Minkowski
        | C::AntiDeSitter
        | C::LorentzHeisenberg
        | C::Sl2RightUnipotent
        | C::Sl2RightSemiSimple
        | C::FlatSubclass(_)
        | C::RiemannianType => CompletenessFlag::CompleteByTheorem,
        C::DeSitter | C::ProductRDeSitter2 | C::LeftInvariantOnly => CompletenessFlag::Unknown,
    }
}

/// Whether the geometry is known to have compact quotients (`None`: not decided here).
pub fn compact_realization_of(class: GeometryClass) -> Option<bool> {
    use GeometryClass as C;
    match class {
        C::DeSitter | C::ProductRDeSitter2 => Some(false),
        C::LeftInvariantOnly => None,
        _ => Some(true),
    }
}

pub fn analyze_left_invariant(a: &LieAlgebra, m: &InvariantMetric) -> Result<ClassificationReport, ClassifyError> {
    analyze_left_invariant_with_cap(a, m, PROLONGATION_CAP)
}

pub fn analyze_left_invariant_with_cap(
    a: &LieAlgebra,
    m: &InvariantMetric,
    cap: usize,
) -> Result<ClassificationReport, ClassifyError> {
    use GeometryClass as C;
    if a.dim() != 3 || m.dim() != 3 {
        return Err(MetricError::DimensionMismatch(a.dim(), m.dim()).into());
    }
    a.validate()?;
    m.require_lorentzian()?;
    let id = lie::recognize_algebra3(a);
    let (gamma, curv) = metric::geometry(a, m)?;
    let kappa = metric::constant_curvature_of(m, &curv);
    let iso = isotropy::prolongation_with_cap(a, m, cap)?;
    if iso.dim == 2 {
        return Err(ClassifyError::InternalInconsistency(format!(
            "isotropy dimension 2 (prolongation dimensions {:?})",
            iso.dims
        )));
    }
    if iso.cap_reached.is_some() {
        return Err(ClassifyError::CapReached(iso.dims));
    }
    let mut warnings = Vec::new();
    let class = match (&kappa, iso.dim, iso.type_tag) {
        (Some(k), _, _) => match rational::sign(k) {
            Ordering::Equal if id.tag == AlgebraTag::Abelian => C::Minkowski,
            Ordering::Equal => C::FlatSubclass(id.tag),
            Ordering::Less => C::AntiDeSitter,
            Ordering::Greater => C::DeSitter,
        },
        (None, 3, _) => {
            return Err(ClassifyError::InternalInconsistency(
                "3-dimensional isotropy with non-constant curvature".into(),
            ))
        }
        (None, 0, _) => C::LeftInvariantOnly,
        (None, 1, Some(IsoType::Elliptic)) => C::RiemannianType,
        (None, 1, Some(IsoType::Unipotent)) => match id.tag {
            AlgebraTag::Sol => {
                if catalog::normalize_sol(a, m).map(|n| n.class).ok() != Some(SolClass::LorentzSOL) {
                    warnings.push("unipotent isotropy on SOL but the normal form test failed".to_string());
                }
                C::LorentzSOL
            }
            AlgebraTag::Sl2 => C::Sl2RightUnipotent,
            t => {
                warnings.push(format!("unipotent isotropy on {}: no named model for this group", t.label()));
                C::LeftInvariantOnly
            }
        },
        (None, 1, Some(IsoType::SemiSimple)) => {
            let generator = &iso.basis[0];
            let parallel = isotropy::fixed_vector(generator)
                .is_some_and(|v| gamma.directions().iter().all(|g| linalg::is_zero_vec(&g.mul_vec(&v))));
            match id.tag {
                AlgebraTag::Heis => C::LorentzHeisenberg,
                _ if parallel => C::ProductRDeSitter2,
                AlgebraTag::Sl2 => C::Sl2RightSemiSimple,
                t => {
                    warnings.push(format!("semi-simple isotropy on {}: no named model for this group", t.label()));
                    C::LeftInvariantOnly
                }
            }
        }
        (None, d, t) => {
            return Err(ClassifyError::InternalInconsistency(format!("isotropy dimension {d} with type {t:?}")))
        }
    };
    let non_riemannian =
        kappa.is_some() || matches!(iso.type_tag, Some(IsoType::Unipotent) | Some(IsoType::SemiSimple));
    Ok(ClassificationReport {
        algebra: id.tag,
        algebra_witness: id.witness,
        signature: m.signature(),
        curvature: CurvatureSummary {
            flat: curv.is_flat(),
            constant_kappa: kappa,
            scalar: curv.scalar.clone(),
            ricci_squared: curv.ricci_squared.clone(),
        },
        isotropy_dim: iso.dim,
        isotropy_type: iso.type_tag,
        prolongation_dims: iso.dims,
        killing_dim: 3 + iso.dim,
        geometry_class: class,
        maximal_geometry: maximal_geometry_of(class),
        completeness_flag: completeness_flag_of(class),
        compact_realization: compact_realization_of(class),
        non_riemannian,
        transverse: None,
        model: None,
        probe: None,
        warnings,
        notes: vec![MAXIMAL_NOTE, COMPLETENESS_NOTE],
    })
}

pub fn analyze_model(model: &HomogeneousModel) -> Result<ClassificationReport, ClassifyError> {
    analyze_model_with_cap(model, PROLONGATION_CAP)
}

/// Classifies a model through a transverse subalgebra acting simply transitively near the base
/// point, then applies two model-level rules: an `sl(2,R)` ideal containing a semi-simple
/// isotropy line gives the product with 2-dimensional de Sitter space, and a non-compact
/// isotropy in an algebra with trivial center has no compact realization unless the geometry
/// is Lorentz-SOL (a lattice must then sit in a unimodular complement of the isotropy).
pub fn analyze_model_with_cap(model: &HomogeneousModel, cap: usize) -> Result<ClassificationReport, ClassifyError> {
    if !model.invariance_residual().is_zero() {
        return Err(IsotropyError::InvalidModel("induced metric is not invariant".into()).into());
    }
    model.induced_metric.require_lorentzian()?;
    let action = model.quotient_action();
    let model_type = isotropy::classify_one_param(&action, &model.induced_metric)?;
    let g = &model.algebra4;
    let center_dim = g.center().len();
    let sub = isotropy::preferred_transverse(model).ok_or(ClassifyError::NoTransverseSubalgebra)?;
    let mut report = analyze_left_invariant_with_cap(&sub.algebra, &model.induced_metric, cap)?;
    if report.isotropy_dim == 1 && report.isotropy_type != Some(model_type) {
        report.warnings.push(format!(
            "isotropy of the model is {model_type:?}, the left-invariant analysis found {:?}",
            report.isotropy_type
        ));
    }
    if model_type == IsoType::SemiSimple && !g.is_solvable() {
        let ideal = g.derived_algebra();
        if ideal.len() == 3 && linalg::in_span(&ideal, &model.isotropy_line) && report.geometry_class != GeometryClass::ProductRDeSitter2 {
            report.warnings.push(format!(
                "isotropy line lies in an sl(2,R) ideal; reclassified from {}",
                report.geometry_class
            ));
            set_class(&mut report, GeometryClass::ProductRDeSitter2);
        }
    }
    if model_type != IsoType::Elliptic
        && center_dim == 0
        && report.geometry_class != GeometryClass::LorentzSOL
        && report.compact_realization != Some(false)
    {
        report.compact_realization = Some(false);
        report.warnings.push(format!("{model_type:?} isotropy and trivial center: no compact realization"));
    }
    report.transverse = Some(TransverseReport {
        tag: sub.tag,
        shifts: sub.shifts,
        basis: QMatrix::from_columns(&sub.basis),
    });
    report.model = Some(ModelSummary { name: model.name.clone(), isotropy_type: model_type, center_dim });
    Ok(report)
}

fn set_class(report: &mut ClassificationReport, class: GeometryClass) {
    report.geometry_class = class;
    report.maximal_geometry = maximal_geometry_of(class);
    report.completeness_flag = completeness_flag_of(class);
    report.compact_realization = compact_realization_of(class);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, model_get};
    use crate::rational::{frac, int};

    #[test]
    fn catalog_round_trip() {
        for e in catalog() {
            let r = analyze_left_invariant(&e.algebra, &e.metric).unwrap();
            let x = &e.expected;
            assert_eq!(r.isotropy_dim, x.isotropy_dim, "{}", e.name);
            assert_eq!(r.isotropy_type, Some(x.isotropy_type), "{}", e.name);
            assert_eq!(r.curvature.flat, x.flat, "{}", e.name);
            assert_eq!(r.curvature.constant_kappa.as_ref().map(|k| rational::sign(k) as i8), x.kappa_sign, "{}", e.name);
            assert_eq!(r.geometry_class, x.class, "{}", e.name);
            assert_eq!(r.completeness_flag, x.completeness, "{}", e.name);
            assert_eq!(r.maximal_geometry, x.maximal, "{}", e.name);
            assert_eq!(r.compact_realization, x.compact_realization, "{}", e.name);
            assert!(r.warnings.is_empty(), "{}: {:?}", e.name, r.warnings);
        }
    }

    #[test]
    fn killing_kappa() {
        let e = catalog::catalog_get("anti_de_sitter_killing").unwrap();
        let r = analyze_left_invariant(&e.algebra, &e.metric).unwrap();
        assert_eq!(r.curvature.constant_kappa, Some(frac(-1, 8)));
        assert_eq!(r.killing_dim, 6);
    }

    #[test]
    fn models() {
        let cls = |n: &str| analyze_model(&model_get(n).unwrap()).unwrap();
        assert_eq!(cls("lorentz_sol_4d").geometry_class, GeometryClass::LorentzSOL);
        assert_eq!(cls("lorentz_heisenberg_4d").geometry_class, GeometryClass::LorentzHeisenberg);
        let flat = cls("r_x_sol_flat");
        assert_eq!(flat.geometry_class, GeometryClass::FlatSubclass(AlgebraTag::Sol));
        assert_eq!(flat.maximal_geometry, MaximalGeometry::Minkowski);
        let p = cls("product_r_desitter2_4d");
        assert_eq!(p.geometry_class, GeometryClass::ProductRDeSitter2);
        assert_eq!(p.compact_realization, Some(false));
        assert_eq!(cls("r2_x_r2").compact_realization, Some(false));
        for m in [-2, 0, 1, 3] {
            let r = analyze_model(&catalog::unipotent_family(&int(0), &int(m), &int(0)).unwrap()).unwrap();
            assert!(r.curvature.flat, "m = {m}");
        }
    }
}
