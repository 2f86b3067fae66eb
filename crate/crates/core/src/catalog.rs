//! Named metrics and homogeneous models, and normal forms for metrics on Heis and SOL.

use crate::classify::{CompletenessFlag, GeometryClass, MaximalGeometry};
use crate::isotropy::{HomogeneousModel, IsoType, IsotropyError};
use crate::lie::{self, AlgebraTag, LieAlgebra};
use crate::linalg::{self, QMatrix, QVector};
use crate::metric::{self, InvariantMetric};
use crate::rational::{self, int, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("metric is not on Heis")]
    NotHeis,
    #[error("metric is not on SOL")]
    NotSol,
    #[error(transparent)]
    Metric(#[from] metric::MetricError),
}

/// What the analysis of an entry must reproduce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedRecord {
    pub isotropy_dim: usize,
    pub isotropy_type: IsoType,
    pub flat: bool,
    /// Sign of the constant curvature, `None` when the curvature is not constant.
    pub kappa_sign: Option<i8>,
    pub class: GeometryClass,
    pub completeness: CompletenessFlag,
    pub maximal: MaximalGeometry,
    pub compact_realization: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub metric: InvariantMetric,
    pub expected: ExpectedRecord,
    /// Short label of the claim this entry realizes; used to name failures.
    pub anchor: &'static str,
    pub description: &'static str,
}

pub const CATALOG_NAMES: [&str; 11] = [
    "minkowski",
    "de_sitter_note",
    "anti_de_sitter_killing",
    "lorentz_heisenberg",
    "flat_heis",
    "heis_elliptic",
    "lorentz_sol",
    "flat_sol",
    "sl2_right_unipotent",
    "sl2_right_semisimple",
    "product_r_desitter2",
];

pub const MODEL_NAMES: [&str; 6] = [
    "lorentz_sol_4d",
    "lorentz_heisenberg_4d",
    "r_x_sol_flat",
    "r2_x_r2",
    "unipotent_family(c,m,n)",
    "product_r_desitter2_4d",
];

pub fn heis() -> LieAlgebra {
    lie::reference_algebra(AlgebraTag::Heis).unwrap()
}

pub fn sol() -> LieAlgebra {
    lie::reference_algebra(AlgebraTag::Sol).unwrap()
}

pub fn sl2() -> LieAlgebra {
    lie::reference_algebra(AlgebraTag::Sl2).unwrap()
}

fn gram(n: usize, entries: &[(usize, usize, i64)]) -> InvariantMetric {
    let e: Vec<(usize, usize, Rational)> = entries.iter().map(|&(i, j, v)| (i, j, int(v))).collect();
    InvariantMetric::from_entries(n, &e)
}

pub fn lorentz_heisenberg_metric() -> InvariantMetric {
    gram(3, &[(0, 0, 1), (1, 2, 1)])
}

pub fn lorentz_sol_metric() -> InvariantMetric {
    gram(3, &[(0, 2, 1), (1, 1, 1)])
}

fn record(
    isotropy_dim: usize,
    isotropy_type: IsoType,
    kappa_sign: Option<i8>,
    class: GeometryClass,
    completeness: CompletenessFlag,
    maximal: MaximalGeometry,
    compact_realization: Option<bool>,
) -> ExpectedRecord {
    ExpectedRecord {
        isotropy_dim,
        isotropy_type,
        flat: kappa_sign == Some(0),
        kappa_sign,
        class,
        completeness,
        maximal,
        compact_realization,
    }
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry, CatalogError> {
    use CompletenessFlag::*;
    use GeometryClass as C;
    use MaximalGeometry as M;
    let entry = match name {
        "minkowski" => CatalogEntry {
            name: "minkowski",
            algebra: LieAlgebra::abelian(&["x", "y", "z"]).unwrap(),
            metric: gram(3, &[(0, 0, 1), (1, 1, 1), (2, 2, -1)]),
            expected: record(3, IsoType::Full3, Some(0), C::Minkowski, CompleteByTheorem, M::Minkowski, Some(true)),
            anchor: "minkowski/flat-model",
            description: "Abelian group R³ with dx² + dy² − dz².",
        },
        "de_sitter_note" => CatalogEntry {
            name: "de_sitter_note",
            algebra: LieAlgebra::from_int_brackets(&["X", "Z", "T"], &[(2, 0, &[1, 0, 0]), (2, 1, &[0, 1, 0])]).unwrap(),
            metric: gram(3, &[(0, 0, 1), (1, 1, 1), (2, 2, -1)]),
            expected: record(3, IsoType::Full3, Some(1), C::DeSitter, Unknown, M::None, Some(false)),
            anchor: "de-sitter/no-compact-quotient",
            description: "Positive constant curvature on the group with ad(T) = id on span{X, Z}, \
                          T timelike; an open piece of de Sitter space, which has no compact quotient.",
        },
        "anti_de_sitter_killing" => CatalogEntry {
            name: "anti_de_sitter_killing",
            algebra: sl2(),
            metric: InvariantMetric::new(sl2().killing_form()).unwrap(),
            expected: record(3, IsoType::Full3, Some(-1), C::AntiDeSitter, CompleteByTheorem, M::AntiDeSitter, Some(true)),
            anchor: "anti-de-sitter/killing-form",
            description: "sl(2,R) with its Killing form; constant curvature −1/8.",
        },
        "lorentz_heisenberg" => CatalogEntry {
            name: "lorentz_heisenberg",
            algebra: heis(),
            metric: lorentz_heisenberg_metric(),
            expected: record(1, IsoType::SemiSimple, None, C::LorentzHeisenberg, CompleteByTheorem, M::LorentzHeisenberg, Some(true)),
            anchor: "lorentz-heisenberg/definition",
            description: "Heis with g(X′,X′) = 1, g(Z,T) = 1: center spacelike, Z and T null.",
        },
        "flat_heis" => CatalogEntry {
            name: "flat_heis",
            algebra: heis(),
            metric: gram(3, &[(0, 2, 1), (1, 1, 1)]),
            expected: record(3, IsoType::Full3, Some(0), C::FlatSubclass(AlgebraTag::Heis), CompleteByTheorem, M::Minkowski, Some(true)),
            anchor: "heisenberg/null-center-flat",
            description: "Heis with null center: g(X′,T) = 1, g(Z,Z) = 1; flat.",
        },
        "heis_elliptic" => CatalogEntry {
            name: "heis_elliptic",
            algebra: heis(),
            metric: gram(3, &[(0, 0, -1), (1, 1, 1), (2, 2, 1)]),
            expected: record(1, IsoType::Elliptic, None, C::RiemannianType, CompleteByTheorem, M::Riemannian, Some(true)),
            anchor: "heisenberg/timelike-center-elliptic",
            description: "Heis with timelike center g(X′,X′) = −1, g(Z,Z) = g(T,T) = 1; compact isotropy.",
        },
        "lorentz_sol" => CatalogEntry {
            name: "lorentz_sol",
            algebra: sol(),
            metric: lorentz_sol_metric(),
            expected: record(1, IsoType::Unipotent, None, C::LorentzSOL, IncompleteByTheorem, M::LorentzSOL, Some(true)),
            anchor: "lorentz-sol/definition",
            description: "SOL with X and T null, g(X,T) = g(Z,Z) = 1, Z orthogonal to span{X, T}.",
        },
        "flat_sol" => CatalogEntry {
            name: "flat_sol",
            algebra: sol(),
            metric: flat_sol_metric(),
            expected: record(3, IsoType::Full3, Some(0), C::FlatSubclass(AlgebraTag::Sol), CompleteByTheorem, M::Minkowski, Some(true)),
            anchor: "sol/flat-metric-exists",
            description: "Flat metric on SOL: g(T,T) = 1, g(X,Z) = 1. Found by bounded search over \
                          small integer Gram matrices with the exact curvature as oracle.",
        },
        "sl2_right_unipotent" => CatalogEntry {
            name: "sl2_right_unipotent",
            algebra: sl2(),
            metric: gram(3, &[(0, 0, 2), (1, 2, -4), (2, 2, 1)]),
            expected: record(1, IsoType::Unipotent, None, C::Sl2RightUnipotent, CompleteByTheorem, M::AntiDeSitter, Some(true)),
            anchor: "sl2/right-unipotent-invariant",
            description: "Killing form plus Z*⊗Z*; invariant under Ad(exp tY), so φ = id + nilpotent.",
        },
        "sl2_right_semisimple" => CatalogEntry {
            name: "sl2_right_semisimple",
            algebra: sl2(),
            metric: gram(3, &[(0, 0, 1), (1, 2, 1)]),
            expected: record(1, IsoType::SemiSimple, None, C::Sl2RightSemiSimple, CompleteByTheorem, M::AntiDeSitter, Some(true)),
            anchor: "sl2/right-semisimple-invariant",
            description: "g(X′,X′) = 1, g(Y,Z) = 1; invariant under Ad(exp tX′), φ has equal eigenvalues on Y and Z.",
        },
        "product_r_desitter2" => CatalogEntry {
            name: "product_r_desitter2",
            algebra: LieAlgebra::from_int_brackets(&["W", "A", "B"], &[(1, 2, &[0, 0, 1])]).unwrap(),
            metric: gram(3, &[(0, 0, 1), (1, 1, -1), (2, 2, 1)]),
            expected: record(1, IsoType::SemiSimple, None, C::ProductRDeSitter2, Unknown, M::None, Some(false)),
            anchor: "product-r-de-sitter/no-compact-realization",
            description: "R × (2-dimensional de Sitter) realized on R ⊕ aff(1): W spacelike and parallel, \
                          span{A, B} a Lorentz plane of nonzero constant curvature.",
        },
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    Ok(entry)
}

fn flat_sol_metric() -> InvariantMetric {
    gram(3, &[(0, 1, 1), (2, 2, 1)])
}

pub fn catalog() -> Vec<CatalogEntry> {
    CATALOG_NAMES.iter().map(|n| catalog_get(n).unwrap()).collect()
}

/// Parses `unipotent_family(c,m,n)` parameters.
fn parse_family(name: &str) -> Option<Result<[Rational; 3], CatalogError>> {
    let inner = name.strip_prefix("unipotent_family(")?.strip_suffix(')')?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 3 {
        return Some(Err(CatalogError::InvalidParameters(format!("expected 3 parameters in {name:?}"))));
    }
    let mut out = Vec::new();
    for p in parts {
        match rational::parse(p) {
            Ok(q) => out.push(q),
            Err(e) => return Some(Err(CatalogError::InvalidParameters(e.to_string()))),
        }
    }
    Some(Ok([out[0].clone(), out[1].clone(), out[2].clone()]))
}

fn model(
    name: &str,
    algebra4: LieAlgebra,
    y: usize,
    quotient: [usize; 3],
    metric: InvariantMetric,
    parameters: Vec<(String, Rational)>,
) -> Result<HomogeneousModel, CatalogError> {
    let q = quotient.iter().map(|&i| linalg::unit(4, i)).collect();
    HomogeneousModel::new(name, algebra4, linalg::unit(4, y), q, metric, parameters).map_err(|e| match e {
        IsotropyError::Lie(l) => CatalogError::InvalidParameters(l.to_string()),
        other => CatalogError::InvalidParameters(other.to_string()),
    })
}

/// The family with `[Y,Z] = X′` and `ad(T) = [[c,m,0],[0,c,1],[0,n,0]]` on `(X′, Z, Y)`.
pub fn unipotent_family(c: &Rational, m: &Rational, n: &Rational) -> Result<HomogeneousModel, CatalogError> {
    let z = Rational::zero();
    let o = Rational::one();
    // basis (X′, Z, Y, T)
    let a = LieAlgebra::from_brackets(
        &["X'", "Z", "Y", "T"],
        &[
            (2, 1, vec![o.clone(), z.clone(), z.clone(), z.clone()]),
            (3, 0, vec![c.clone(), z.clone(), z.clone(), z.clone()]),
            (3, 1, vec![m.clone(), c.clone(), n.clone(), z.clone()]),
            (3, 2, vec![z.clone(), o.clone(), z.clone(), z.clone()]),
        ],
    )
    .map_err(|e| CatalogError::InvalidParameters(e.to_string()))?;
    let name = format!(
        "unipotent_family({},{},{})",
        rational::format(c),
        rational::format(m),
        rational::format(n)
    );
    let params = vec![("c".to_string(), c.clone()), ("m".to_string(), m.clone()), ("n".to_string(), n.clone())];
    model(&name, a, 2, [0, 1, 3], lorentz_sol_metric(), params)
}

pub fn model_get(name: &str) -> Result<HomogeneousModel, CatalogError> {
    if let Some(params) = parse_family(name) {
        let [c, m, n] = params?;
        return unipotent_family(&c, &m, &n);
    }
    let b = |names: &[&str], br: &[(usize, usize, &[i64])]| LieAlgebra::from_int_brackets(names, br).unwrap();
    match name {
        "lorentz_sol_4d" => model(
            name,
            b(
                &["X'", "Z", "Y", "T"],
                &[(2, 1, &[1, 0, 0, 0]), (3, 0, &[1, 0, 0, 0]), (3, 1, &[0, -1, 0, 0]), (3, 2, &[0, 1, 2, 0])],
            ),
            2,
            [0, 1, 3],
            lorentz_sol_metric(),
            Vec::new(),
        ),
        "lorentz_heisenberg_4d" => model(
            name,
            b(&["X'", "Z", "T", "Y"], &[(3, 1, &[0, 1, 0, 0]), (3, 2, &[0, 0, -1, 0]), (2, 1, &[1, 0, 0, 0])]),
            3,
            [0, 1, 2],
            lorentz_heisenberg_metric(),
            Vec::new(),
        ),
        "r_x_sol_flat" => model(
            name,
            b(&["X'", "Z", "T", "Y"], &[(3, 1, &[0, 1, 0, 0]), (3, 2, &[0, 0, -1, 0])]),
            3,
            [0, 1, 2],
            lorentz_heisenberg_metric(),
            Vec::new(),
        ),
        "r2_x_r2" => model(
            name,
            b(&["X'", "Z", "T", "Y"], &[(3, 1, &[0, 1, 0, 0]), (3, 2, &[0, 0, -1, 0]), (2, 0, &[0, 0, 1, 0])]),
            3,
            [0, 1, 2],
            lorentz_heisenberg_metric(),
            Vec::new(),
        ),
        "product_r_desitter2_4d" => model(
            name,
            b(&["W", "X'", "Y", "Z"], &[(1, 2, &[0, 0, 1, 0]), (1, 3, &[0, 0, 0, -1]), (3, 2, &[0, 2, 0, 0])]),
            1,
            [0, 2, 3],
            lorentz_heisenberg_metric(),
            Vec::new(),
        ),
        other => Err(CatalogError::UnknownName(other.to_string())),
    }
}

/// Fixed 4-dimensional models (the unipotent family is parametric and not listed).
pub fn fixed_models() -> Vec<HomogeneousModel> {
    ["lorentz_sol_4d", "lorentz_heisenberg_4d", "r_x_sol_flat", "r2_x_r2", "product_r_desitter2_4d"]
        .iter()
        .map(|n| model_get(n).unwrap())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum HeisClass {
    LorentzHeisenberg,
    FlatNullCenter,
    EllipticRiemannianType,
}

/// `witness` has as columns a basis `(X′, Z, T)` with `[Z,T] = X′` in which the metric equals
/// `scale` times the canonical Lorentz-Heisenberg Gram matrix. Only set for that class, and only
/// when the null directions orthogonal to the center are rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisNormalForm {
    pub class: HeisClass,
    pub center_norm: Rational,
    pub witness: Option<QMatrix>,
    pub scale: Option<Rational>,
}

pub fn normalize_heis(a: &LieAlgebra, m: &InvariantMetric) -> Result<HeisNormalForm, CatalogError> {
    let id = lie::recognize_algebra3(a);
    if id.tag != AlgebraTag::Heis {
        return Err(CatalogError::NotHeis);
    }
    let p = id.witness.expect("Heis witnesses are always rational");
    let gc = m.congruent(&p);
    let nu = gc.gram()[(0, 0)].clone();
    let class = match rational::sign(&nu) {
        std::cmp::Ordering::Greater => HeisClass::LorentzHeisenberg,
        std::cmp::Ordering::Equal => HeisClass::FlatNullCenter,
        std::cmp::Ordering::Less => HeisClass::EllipticRiemannianType,
    };
    let mut out = HeisNormalForm { class, center_norm: nu.clone(), witness: None, scale: None };
    if class != HeisClass::LorentzHeisenberg {
        return Ok(out);
    }
    let perp = QMatrix::from_rows(vec![gc.gram().row(0).to_vec()]).nullspace();
    let Some(lines) = null_lines(&gc, &perp[0], &perp[1]) else {
        return Ok(out);
    };
    let (u, w) = (&lines[0], &lines[1]);
    let delta = &u[1] * &w[2] - &u[2] * &w[1];
    let sigma = gc.apply(u, w);
    let alpha = &sigma / (&delta * &delta * &nu);
    let u = linalg::vec_scale(u, &alpha);
    let delta = &delta * &alpha;
    let x = linalg::vec_scale(&linalg::unit(3, 0), &delta);
    let auto = QMatrix::from_columns(&[x, u, w.clone()]);
    let witness = p.mul(&auto);
    out.scale = Some(&alpha * &sigma);
    out.witness = Some(witness);
    Ok(out)
}

/// Null lines of the plane spanned by `u`, `v` when they are rational.
fn null_lines(m: &InvariantMetric, u: &[Rational], v: &[Rational]) -> Option<[QVector; 2]> {
    let (p, q, r) = (m.norm(u), m.apply(u, v), m.norm(v));
    if p.is_zero() {
        let w = linalg::vec_add(&linalg::vec_scale(u, &-r), &linalg::vec_scale(v, &(int(2) * &q)));
        return Some([rational::primitive(u), rational::primitive(&w)]);
    }
    let root = rational::sqrt(&(&q * &q - &p * &r))?;
    let line = |s: Rational| linalg::vec_add(&linalg::vec_scale(u, &s), v);
    Some([
        rational::primitive(&line((-&q + &root) / &p)),
        rational::primitive(&line((-&q - &root) / &p)),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SolClass {
    LorentzSOL,
    Flat,
    OtherSol,
}

/// For the Lorentz-SOL class, `witness` has as columns a basis `(X, Z, T)` with
/// `[T,X] = X`, `[T,Z] = −Z` in which the metric is `scale` times the canonical one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolNormalForm {
    pub class: SolClass,
    pub derived_degenerate: bool,
    pub null_eigendirection: bool,
    pub witness: Option<QMatrix>,
    pub scale: Option<Rational>,
}

pub fn normalize_sol(a: &LieAlgebra, m: &InvariantMetric) -> Result<SolNormalForm, CatalogError> {
    let id = lie::recognize_algebra3(a);
    if id.tag != AlgebraTag::Sol {
        return Err(CatalogError::NotSol);
    }
    let derived = a.derived_algebra();
    let d = QMatrix::from_columns(&derived);
    let restricted = m.gram().congruence(&d);
    let derived_degenerate = restricted.det().is_zero();
    let mut null_eigendirection = false;
    if derived_degenerate {
        let rad = restricted.nullspace().remove(0);
        let r = d.mul_vec(&rad);
        let basis = complete(&derived);
        let image = a.bracket(&basis, &r);
        null_eigendirection = linalg::in_span(std::slice::from_ref(&r), &image);
    }
    if !(derived_degenerate && null_eigendirection) {
        let (_, curv) = metric::geometry(a, m)?;
        let class = if curv.is_flat() { SolClass::Flat } else { SolClass::OtherSol };
        return Ok(SolNormalForm { class, derived_degenerate, null_eigendirection, witness: id.witness, scale: None });
    }
    let p = id.witness.expect("a rational eigendirection makes the eigenvalues rational");
    let mut w = p.clone();
    let g = |w: &QMatrix| m.congruent(w).gram().clone();
    if !g(&w)[(0, 0)].is_zero() {
        // X ↔ Z, T ↦ −T
        let swap = QMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
        w = w.mul(&swap);
    }
    let gc = g(&w);
    let s = gc[(1, 1)].clone();
    debug_assert!(s.is_positive());
    // T ↦ T + aZ makes T ⟂ Z.
    let a_shift = -&gc[(1, 2)] / &s;
    w = w.mul(&elementary(2, 1, &a_shift));
    // X ↦ bX makes g(X, T) = s.
    let gc = g(&w);
    let b = &s / &gc[(0, 2)];
    w = w.mul(&QMatrix::diagonal(&[b, int(1), int(1)]));
    // T ↦ T + cX makes T null.
    let gc = g(&w);
    let c = -&gc[(2, 2)] / (int(2) * &s);
    w = w.mul(&elementary(2, 0, &c));
    debug_assert_eq!(m.congruent(&w), lorentz_sol_metric().scaled(&s));
    Ok(SolNormalForm {
        class: SolClass::LorentzSOL,
        derived_degenerate,
        null_eigendirection,
        witness: Some(w),
        scale: Some(s),
    })
}

/// Identity plus `f` in position `(row, col)`: column `col` gains `f` times basis vector `row`.
fn elementary(col: usize, row: usize, f: &Rational) -> QMatrix {
    let mut e = QMatrix::identity(3);
    e[(row, col)] = f.clone();
    e
}

/// A standard basis vector outside the span of `derived`.
fn complete(derived: &[QVector]) -> QVector {
    (0..3)
        .map(|i| linalg::unit(3, i))
        .find(|e| !linalg::in_span(derived, e))
        .expect("derived algebra of SOL is 2-dimensional")
}

/// Bounded enumeration of Gram matrices with entries in `-bound..=bound` on `a`, returning the
/// Lorentzian ones with zero curvature in enumeration order.
pub fn search_flat_metrics(a: &LieAlgebra, bound: i64, limit: usize) -> Vec<InvariantMetric> {
    let mut out = Vec::new();
    let vals: Vec<i64> = (-bound..=bound).collect();
    for &g00 in &vals {
        for &g01 in &vals {
            for &g02 in &vals {
                for &g11 in &vals {
                    for &g12 in &vals {
                        for &g22 in &vals {
                            let m = gram(3, &[(0, 0, g00), (0, 1, g01), (0, 2, g02), (1, 1, g11), (1, 2, g12), (2, 2, g22)]);
                            if !m.is_lorentzian() {
                                continue;
                            }
                            if let Ok((_, curv)) = metric::geometry(a, &m) {
                                if curv.is_flat() {
                                    out.push(m);
                                    if out.len() == limit {
                                        return out;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn all_entries_lorentzian_and_valid() {
        for e in catalog() {
            e.algebra.validate().unwrap();
            assert!(e.metric.is_lorentzian(), "{}", e.name);
        }
    }

    #[test]
    fn models_are_invariant() {
        for m in fixed_models() {
            assert!(m.invariance_residual().is_zero(), "{}", m.name);
            assert!(m.induced_metric.is_lorentzian());
        }
        for (c, mm, n) in [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 0, 2), (2, -1, 8)] {
            let f = unipotent_family(&int(c), &int(mm), &int(n)).unwrap();
            assert!(f.invariance_residual().is_zero());
        }
    }

    #[test]
    fn unknown_names() {
        assert_eq!(catalog_get("bogus"), Err(CatalogError::UnknownName("bogus".into())));
        assert!(matches!(model_get("nope"), Err(CatalogError::UnknownName(_))));
        assert!(matches!(model_get("unipotent_family(1,x,0)"), Err(CatalogError::InvalidParameters(_))));
        assert!(model_get("unipotent_family(1, 1/2, 0)").is_ok());
    }

    #[test]
    fn lorentz_sol_4d_quotient_action() {
        let m = model_get("lorentz_sol_4d").unwrap();
        assert_eq!(m.quotient_action(), QMatrix::from_i64(&[&[0, 1, 0], &[0, 0, -1], &[0, 0, 0]]));
        assert!(m.induced_metric.norm(&linalg::unit(3, 0)).is_zero());
    }

    #[test]
    fn heis_trichotomy() {
        let h = heis();
        let n = normalize_heis(&h, &lorentz_heisenberg_metric()).unwrap();
        assert_eq!(n.class, HeisClass::LorentzHeisenberg);
        assert_eq!(n.witness, Some(QMatrix::identity(3)));
        assert_eq!(n.scale, Some(int(1)));
        let flat = catalog_get("flat_heis").unwrap();
        assert_eq!(normalize_heis(&h, &flat.metric).unwrap().class, HeisClass::FlatNullCenter);
        let ell = gram(3, &[(0, 0, -4), (1, 1, 1), (2, 2, 1)]);
        assert_eq!(normalize_heis(&h, &ell).unwrap().class, HeisClass::EllipticRiemannianType);
        assert_eq!(normalize_heis(&sol(), &ell), Err(CatalogError::NotHeis));
    }

    #[test]
    fn sol_normal_forms() {
        let s = sol();
        for lambda in [int(1), int(2), int(5), frac(1, 3)] {
            let n = normalize_sol(&s, &lorentz_sol_metric().scaled(&lambda)).unwrap();
            assert_eq!(n.class, SolClass::LorentzSOL);
            let w = n.witness.unwrap();
            assert!(lie::is_witness(&s, AlgebraTag::Sol, &w));
            assert_eq!(n.scale, Some(lambda.clone()));
            assert_eq!(lorentz_sol_metric().scaled(&lambda).congruent(&w), lorentz_sol_metric().scaled(&lambda));
        }
        assert_eq!(normalize_sol(&s, &flat_sol_metric()).unwrap().class, SolClass::Flat);
        let other = gram(3, &[(0, 0, 1), (1, 1, 1), (2, 2, -1)]);
        let n = normalize_sol(&s, &other).unwrap();
        assert_eq!(n.class, SolClass::OtherSol);
        assert!(!n.derived_degenerate);
    }
}
