//! Infinitesimal isotropy of left-invariant metrics and 4-dimensional homogeneous models.

use crate::lie::{self, AlgebraTag, LieAlgebra};
use crate::linalg::{self, QMatrix, QVector};
use crate::metric::{self, InvariantMetric, MetricError};
use crate::rational::{self, Rational};
use crate::tensor::Tensor;
use num_traits::Zero;
use serde::Serialize;
use std::cmp::Ordering;

/// Default number of covariant-derivative orders examined after `R` itself.
pub const PROLONGATION_CAP: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsotropyError {
    #[error("generator is zero")]
    ZeroGenerator,
    #[error("generator is not skew for the metric")]
    NotSkew,
    #[error("operation needs a 1-dimensional isotropy algebra, got dimension {0}")]
    NeedsOneDimensional(usize),
    #[error("generator has no nonzero fixed vector")]
    NoFixedVector,
    #[error("isotropic lines of the orthogonal plane are irrational (discriminant {0})")]
    IrrationalIsotropicLines(String),
    #[error("isotropy generator is {0:?}, expected Unipotent")]
    NotUnipotent(IsoType),
    #[error("matrix of the covariant derivative of X is not single-corner: {0:?}")]
    ShapeViolation(QMatrix),
    #[error("no 3-dimensional subalgebra transverse to the isotropy line was found")]
    NoTransverseSubalgebra,
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Lie(#[from] lie::LieError),
    #[error("model is inconsistent: {0}")]
    InvalidModel(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IsoType {
    TrivialIso,
    Elliptic,
    Unipotent,
    SemiSimple,
    Full3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyAlgebra {
    /// Integer-normalized generators.
    pub basis: Vec<QMatrix>,
    pub dim: usize,
    /// `None` only for a 2-dimensional result, which signals an internal inconsistency.
    pub type_tag: Option<IsoType>,
    /// Stabilizer dimensions after `R`, `∇R`, `∇²R`, …
    pub dims: Vec<usize>,
    /// Set to the last examined order when the dimensions had not stabilized.
    pub cap_reached: Option<usize>,
}

/// Basis of `{A : g(Ax, y) + g(x, Ay) = 0}`.
pub fn skew_basis(m: &InvariantMetric) -> Vec<QMatrix> {
    let n = m.dim();
    let g = m.gram();
    // Unknown A[(a, b)] sits at a*n + b; equation (Aᵀ G + G A)_{ij} = 0 for i ≤ j.
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut row = vec![Rational::zero(); n * n];
            for a in 0..n {
                row[a * n + i] += &g[(a, j)];
                row[a * n + j] += &g[(i, a)];
            }
            rows.push(row);
        }
    }
    QMatrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| integer_matrix(&vec_to_matrix(&v, n)))
        .collect()
}

fn vec_to_matrix(v: &[Rational], n: usize) -> QMatrix {
    QMatrix::from_rows(v.chunks(n).map(<[Rational]>::to_vec).collect())
}

/// Rescales to coprime integer entries.
pub fn integer_matrix(a: &QMatrix) -> QMatrix {
    let n = a.cols();
    let flat = rational::primitive(a.entries());
    QMatrix::from_rows(flat.chunks(n).map(<[Rational]>::to_vec).collect())
}

pub fn is_skew(a: &QMatrix, m: &InvariantMetric) -> bool {
    let ga = m.gram().mul(a);
    ga.add(&ga.transpose()).is_zero()
}

/// Subspace of `span(basis)` annihilating `t` as a derivation.
/// Rows of the linear system are produced one position at a time and reduced against the
/// rows kept so far, so the scan stops once the system has full rank.
fn stabilizer(basis: &[QMatrix], t: &Tensor) -> Vec<QMatrix> {
    let k = basis.len();
    if k == 0 {
        return Vec::new();
    }
    let mut echelon: Vec<(usize, QVector)> = Vec::new();
    for pos in 0..t.data().len() {
        let mut row: QVector = basis.iter().map(|b| t.derivation_at(b, pos)).collect();
        for (p, e) in &echelon {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                for (r, x) in row.iter_mut().zip(e) {
                    *r -= &f * x;
                }
            }
        }
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = row[p].recip();
        row.iter_mut().for_each(|x| *x *= &inv);
        echelon.push((p, row));
        if echelon.len() == k {
            return Vec::new();
        }
    }
    if echelon.is_empty() {
        return basis.to_vec();
    }
    QMatrix::from_rows(echelon.into_iter().map(|(_, r)| r).collect())
        .nullspace()
        .into_iter()
        .map(|coeffs| {
            let mut acc = QMatrix::zeros(basis[0].rows(), basis[0].cols());
            for (c, b) in coeffs.iter().zip(basis) {
                if !c.is_zero() {
                    acc = acc.add(&b.scale(c));
                }
            }
            integer_matrix(&acc)
        })
        .collect()
}

pub fn prolongation(a: &LieAlgebra, m: &InvariantMetric) -> Result<IsotropyAlgebra, MetricError> {
    prolongation_with_cap(a, m, PROLONGATION_CAP)
}

/// Intersects the skew algebra with the stabilizers of `R, ∇R, …, ∇^cap R`, stopping as soon
/// as two consecutive orders give the same dimension or the dimension reaches 0.
pub fn prolongation_with_cap(a: &LieAlgebra, m: &InvariantMetric, cap: usize) -> Result<IsotropyAlgebra, MetricError> {
    let (gamma, curv) = metric::geometry(a, m)?;
    let mut current = stabilizer(&skew_basis(m), &curv.riemann);
    let mut dims = vec![current.len()];
    let mut tensor = curv.riemann.clone();
    let mut stable = current.is_empty();
    let mut order = 0;
    while !stable && order < cap {
        order += 1;
        tensor = tensor.covariant_derivative(gamma.directions());
        let next = stabilizer(&current, &tensor);
        stable = next.len() == current.len() || next.is_empty();
        current = next;
        dims.push(current.len());
    }
    let dim = current.len();
    let type_tag = match dim {
        0 => Some(IsoType::TrivialIso),
        1 => classify_one_param(&current[0], m).ok(),
        3 => Some(IsoType::Full3),
        _ => None,
    };
    Ok(IsotropyAlgebra {
        basis: current,
        dim,
        type_tag,
        dims,
        cap_reached: (!stable).then_some(order),
    })
}

/// Type of a nonzero skew generator from the sign of `tr(A²)`.
pub fn classify_one_param(a: &QMatrix, m: &InvariantMetric) -> Result<IsoType, IsotropyError> {
    if a.is_zero() {
        return Err(IsotropyError::ZeroGenerator);
    }
    if !is_skew(a, m) {
        return Err(IsotropyError::NotSkew);
    }
    Ok(match rational::sign(&a.mul(a).trace()) {
        Ordering::Greater => IsoType::SemiSimple,
        Ordering::Less => IsoType::Elliptic,
        Ordering::Equal => IsoType::Unipotent,
    })
}

/// A nonzero vector in the kernel of `a`, integer-normalized.
pub fn fixed_vector(a: &QMatrix) -> Option<QVector> {
    a.nullspace().into_iter().next().map(|v| rational::primitive(&v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantForm {
    pub gram: QMatrix,
    pub signature: (usize, usize, usize),
}

/// Basis of the symmetric `S` with `Sᵀ·action + actionᵀ·S = 0`, each annotated with its signature.
pub fn invariant_lorentz_forms(action: &QMatrix) -> Vec<InvariantForm> {
    let n = action.rows();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let col = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            // (S A + Aᵀ S)_{ij} = Σ_k S_ik A_kj + Σ_k A_ki S_kj
            let mut row = vec![Rational::zero(); pairs.len()];
            for k in 0..n {
                row[col(i, k)] += &action[(k, j)];
                row[col(k, j)] += &action[(k, i)];
            }
            rows.push(row);
        }
    }
    QMatrix::from_rows(rows)
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut s = QMatrix::zeros(n, n);
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                s[(i, j)] = v[idx].clone();
                s[(j, i)] = v[idx].clone();
            }
            let s = integer_matrix(&s);
            let signature = linalg::signature(&s);
            InvariantForm { gram: s, signature }
        })
        .collect()
}

/// Degenerate planes preserved by a 1-dimensional isotropy algebra, as pairs of spanning vectors.
pub fn degenerate_invariant_planes(
    iso: &IsotropyAlgebra,
    m: &InvariantMetric,
) -> Result<Vec<[QVector; 2]>, IsotropyError> {
    if iso.dim != 1 {
        return Err(IsotropyError::NeedsOneDimensional(iso.dim));
    }
    let a = &iso.basis[0];
    let kind = classify_one_param(a, m)?;
    let x = fixed_vector(a).ok_or(IsotropyError::NoFixedVector)?;
    let perp = QMatrix::from_rows(vec![m.gram().mul_vec(&x)]).nullspace();
    match kind {
        IsoType::Unipotent => {
            let other = perp
                .into_iter()
                .find(|v| !linalg::in_span(std::slice::from_ref(&x), v))
                .ok_or(IsotropyError::NoFixedVector)?;
            Ok(vec![[x, rational::primitive(&other)]])
        }
        IsoType::SemiSimple => {
            let lines = isotropic_lines(m, &perp[0], &perp[1])?;
            Ok(lines.into_iter().map(|l| [x.clone(), l]).collect())
        }
        _ => Ok(Vec::new()),
    }
}

/// The two null lines of the Lorentzian plane spanned by `u`, `v`.
fn isotropic_lines(m: &InvariantMetric, u: &[Rational], v: &[Rational]) -> Result<Vec<QVector>, IsotropyError> {
    let (p, q, r) = (m.norm(u), m.apply(u, v), m.norm(v));
    // p s² + 2 q s t + r t² = 0
    let disc = &q * &q - &p * &r;
    if p.is_zero() {
        // u is null; the other line is s = −r, t = 2q.
        let w = linalg::vec_add(&linalg::vec_scale(u, &-r), &linalg::vec_scale(v, &(rational::int(2) * &q)));
        return Ok(vec![rational::primitive(u), rational::primitive(&w)]);
    }
    let root = rational::sqrt(&disc).ok_or_else(|| IsotropyError::IrrationalIsotropicLines(rational::format(&disc)))?;
    let lines = [(-&q + &root) / &p, (-&q - &root) / &p]
        .into_iter()
        .map(|s| rational::primitive(&linalg::vec_add(&linalg::vec_scale(u, &s), v)))
        .collect();
    Ok(lines)
}

/// A 4-dimensional algebra with a 1-dimensional isotropy line and an invariant metric on the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousModel {
    pub name: String,
    pub algebra4: LieAlgebra,
    pub isotropy_line: QVector,
    pub quotient_basis: Vec<QVector>,
    pub induced_metric: InvariantMetric,
    pub parameters: Vec<(String, Rational)>,
}

impl HomogeneousModel {
    pub fn new(
        name: &str,
        algebra4: LieAlgebra,
        isotropy_line: QVector,
        quotient_basis: Vec<QVector>,
        induced_metric: InvariantMetric,
        parameters: Vec<(String, Rational)>,
    ) -> Result<Self, IsotropyError> {
        let model = HomogeneousModel {
            name: name.to_string(),
            algebra4,
            isotropy_line,
            quotient_basis,
            induced_metric,
            parameters,
        };
        model.check()?;
        Ok(model)
    }

    fn check(&self) -> Result<(), IsotropyError> {
        if self.algebra4.dim() != 4 {
            return Err(IsotropyError::InvalidModel("algebra must have dimension 4".into()));
        }
        self.algebra4.validate()?;
        if self.quotient_basis.len() != 3 || self.induced_metric.dim() != 3 {
            return Err(IsotropyError::InvalidModel("quotient must have dimension 3".into()));
        }
        if self.frame().rank() != 4 {
            return Err(IsotropyError::InvalidModel("quotient basis and isotropy line do not span".into()));
        }
        if !self.invariance_residual().is_zero() {
            return Err(IsotropyError::InvalidModel("induced metric is not invariant".into()));
        }
        Ok(())
    }

    /// Columns `(q1, q2, q3, Y)`.
    pub fn frame(&self) -> QMatrix {
        let mut cols = self.quotient_basis.clone();
        cols.push(self.isotropy_line.clone());
        QMatrix::from_columns(&cols)
    }

    /// Matrix of `ad(Y)` on the quotient, in the basis `q1, q2, q3`.
    pub fn quotient_action(&self) -> QMatrix {
        let f = self.frame();
        let cols: Vec<QVector> = self
            .quotient_basis
            .iter()
            .map(|q| {
                let c = f.solve(&self.algebra4.bracket(&self.isotropy_line, q)).expect("frame spans");
                c[..3].to_vec()
            })
            .collect();
        QMatrix::from_columns(&cols)
    }

    /// `Sᵀ·ad_q(Y) + ad_q(Y)ᵀ·S`.
    pub fn invariance_residual(&self) -> QMatrix {
        let s = self.induced_metric.gram();
        let a = self.quotient_action();
        s.transpose().mul(&a).add(&a.transpose().mul(s))
    }

    /// Names of the quotient basis vectors: the algebra's own name when `q_i` is a basis
    /// vector, `q<i>` otherwise.
    pub fn quotient_names(&self) -> Vec<String> {
        self.quotient_basis
            .iter()
            .enumerate()
            .map(|(i, q)| {
                (0..4)
                    .find(|&k| *q == linalg::unit(4, k))
                    .map_or_else(|| format!("q{}", i + 1), |k| self.algebra4.names()[k].clone())
            })
            .collect()
    }
}

/// Largest numerator magnitude (over denominators 1 and 2) tried for transverse shifts.
pub const SHIFT_BOUND: i64 = 4;

/// A 3-dimensional subalgebra spanned by `q_i + shift_i · Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransverseSubalgebra {
    pub shifts: QVector,
    pub basis: Vec<QVector>,
    pub algebra: LieAlgebra,
    pub tag: AlgebraTag,
}

fn shift_values(bound: i64) -> Vec<Rational> {
    let mut raw: Vec<(i64, i64)> = Vec::new();
    for d in 1..=2 {
        for n in -bound * d..=bound * d {
            if num_integer::gcd(n, d) == 1 {
                raw.push((n, d));
            }
        }
    }
    raw.sort_by_key(|&(n, d)| (n.abs() + d, n < 0));
    raw.into_iter().map(|(n, d)| rational::frac(n, d)).collect()
}

/// Integer form of the closure test for `span{q_i + s_i Y}`.
/// In the frame `(q_1, q_2, q_3, Y)` write `[q_i, q_j] = B_ij / L` and `[q_i, Y] = C_i / L`
/// with integer `B, C`. For doubled shifts `t = 2s` the bracket of two generators is `W / 2L`
/// with `W = 2B_ij + t_j C_i − t_i C_j`, and it lies in the span iff `2 W_Y = Σ_k W_k t_k`.
struct ClosureScreen {
    b: [[i128; 4]; 3],
    c: [[i128; 4]; 3],
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

impl ClosureScreen {
    fn new(model: &HomogeneousModel) -> Option<Self> {
        let y = &model.isotropy_line;
        let q = &model.quotient_basis;
        let mut cols = q.clone();
        cols.push(y.clone());
        let finv = QMatrix::from_columns(&cols).inverse()?;
        let a = &model.algebra4;
        let bs: Vec<QVector> = PAIRS.iter().map(|&(i, j)| finv.mul_vec(&a.bracket(&q[i], &q[j]))).collect();
        let cs: Vec<QVector> = (0..3).map(|i| finv.mul_vec(&a.bracket(&q[i], y))).collect();
        let l = Rational::from_integer(rational::common_denominator(bs.iter().chain(&cs).flatten()));
        let to_int = |v: &QVector| -> Option<[i128; 4]> {
            let mut out = [0i128; 4];
            for (o, x) in out.iter_mut().zip(v) {
                *o = (x * &l).to_integer().try_into().ok()?;
            }
            Some(out)
        };
        Some(ClosureScreen {
            b: [to_int(&bs[0])?, to_int(&bs[1])?, to_int(&bs[2])?],
            c: [to_int(&cs[0])?, to_int(&cs[1])?, to_int(&cs[2])?],
        })
    }

    fn closes(&self, t: [i128; 3]) -> bool {
        PAIRS.iter().enumerate().all(|(p, &(i, j))| {
            let w: Vec<i128> = (0..4).map(|r| 2 * self.b[p][r] + t[j] * self.c[i][r] - t[i] * self.c[j][r]).collect();
            2 * w[3] == w[0] * t[0] + w[1] * t[1] + w[2] * t[2]
        })
    }
}

/// Exact search for subalgebras `span{q_i + a_i Y}` with the `a_i` in a small rational grid.
/// Returns the first hit per isomorphism tag, in grid order.
pub fn transverse_subalgebras(model: &HomogeneousModel) -> Vec<TransverseSubalgebra> {
    let vals = shift_values(SHIFT_BOUND);
    let names_owned = model.quotient_names();
    let names: Vec<&str> = names_owned.iter().map(String::as_str).collect();
    let mut found: Vec<TransverseSubalgebra> = Vec::new();
    let mut order: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..vals.len() {
        for j in 0..vals.len() {
            for k in 0..vals.len() {
                order.push((i, j, k));
            }
        }
    }
    order.sort_by_key(|&(i, j, k)| (i.max(j).max(k), i + j + k));
    let screen = ClosureScreen::new(model);
    let doubled: Vec<i128> = vals.iter().map(|v| (v * rational::int(2)).to_integer().try_into().unwrap()).collect();
    for (i, j, k) in order {
        if let Some(sc) = &screen {
            if !sc.closes([doubled[i], doubled[j], doubled[k]]) {
                continue;
            }
        }
        let shifts = vec![vals[i].clone(), vals[j].clone(), vals[k].clone()];
        let basis: Vec<QVector> = model
            .quotient_basis
            .iter()
            .zip(&shifts)
            .map(|(q, s)| linalg::vec_add(q, &linalg::vec_scale(&model.isotropy_line, s)))
            .collect();
        let Some(sub) = model.algebra4.subalgebra(&basis, &names) else {
            continue;
        };
        let tag = lie::recognize_algebra3(&sub).tag;
        if found.iter().any(|f| f.tag == tag) {
            continue;
        }
        found.push(TransverseSubalgebra { shifts, basis, algebra: sub, tag });
        if found.len() == 7 {
            break;
        }
    }
    found
}

/// Preferred transverse subalgebra: named groups first, then the rest.
pub fn preferred_transverse(model: &HomogeneousModel) -> Option<TransverseSubalgebra> {
    const PREFERENCE: [AlgebraTag; 7] = [
        AlgebraTag::Heis,
        AlgebraTag::Sol,
        AlgebraTag::Sl2,
        AlgebraTag::Abelian,
        AlgebraTag::Euclid2Cover,
        AlgebraTag::Su2,
        AlgebraTag::Other,
    ];
    let mut all = transverse_subalgebras(model);
    all.sort_by_key(|t| PREFERENCE.iter().position(|p| *p == t.tag));
    all.into_iter().next()
}

/// Matrix of `v ↦ ∇_v X` in an adapted basis built on the isotropy-fixed null vector `X`,
/// checked to have the single-corner shape `[[0,0,α],[0,0,0],[0,0,0]]`; returns it with `α`.
pub fn nabla_x_matrix(model: &HomogeneousModel) -> Result<(QMatrix, Rational), IsotropyError> {
    let m = &model.induced_metric;
    m.require_lorentzian()?;
    let action = model.quotient_action();
    let kind = classify_one_param(&action, m)?;
    if kind != IsoType::Unipotent {
        return Err(IsotropyError::NotUnipotent(kind));
    }
    let x = fixed_vector(&action).ok_or(IsotropyError::NoFixedVector)?;
    let sub = preferred_transverse(model).ok_or(IsotropyError::NoTransverseSubalgebra)?;
    let gamma = metric::levi_civita(&sub.algebra, m)?;
    let cols: Vec<QVector> = (0..3).map(|j| gamma.direction(j).mul_vec(&x)).collect();
    let nabla = QMatrix::from_columns(&cols);
    let adapted = metric::adapted_basis(m, &x)?;
    let local = nabla.similarity(&adapted.matrix()).ok_or(IsotropyError::NoFixedVector)?;
    let alpha = local[(0, 2)].clone();
    let mut corner = QMatrix::zeros(3, 3);
    corner[(0, 2)] = alpha.clone();
    if local != corner {
        return Err(IsotropyError::ShapeViolation(local));
    }
    Ok((local, alpha))
}

pub fn is_single_corner(a: &QMatrix) -> bool {
    (0..3).all(|i| (0..3).all(|j| (i, j) == (0, 2) || a[(i, j)].is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mink() -> InvariantMetric {
        InvariantMetric::from_entries(3, &[(0, 0, int(1)), (1, 1, int(1)), (2, 2, int(-1))])
    }

    #[test]
    fn skew_basis_has_three_elements() {
        let b = skew_basis(&mink());
        assert_eq!(b.len(), 3);
        assert!(b.iter().all(|a| is_skew(a, &mink())));
        let kinds: Vec<IsoType> = b.iter().map(|a| classify_one_param(a, &mink()).unwrap()).collect();
        assert_eq!(kinds.iter().filter(|k| **k == IsoType::Elliptic).count(), 1);
        assert_eq!(kinds.iter().filter(|k| **k == IsoType::SemiSimple).count(), 2);
    }

    #[test]
    fn one_parameter_types() {
        let rot = QMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        assert_eq!(classify_one_param(&rot, &mink()), Ok(IsoType::Elliptic));
        let boost_null = InvariantMetric::from_entries(3, &[(0, 0, int(1)), (1, 2, int(1))]);
        let boost = QMatrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        assert_eq!(classify_one_param(&boost, &boost_null), Ok(IsoType::SemiSimple));
        // Adapted frame: g(e1,e3)=1, g(e2,e2)=1; e1 fixed, e2 ↦ e1, e3 ↦ −e2.
        let adapted = InvariantMetric::from_entries(3, &[(0, 2, int(1)), (1, 1, int(1))]);
        let uni = QMatrix::from_i64(&[&[0, 1, 0], &[0, 0, -1], &[0, 0, 0]]);
        assert_eq!(classify_one_param(&uni, &adapted), Ok(IsoType::Unipotent));
        assert_eq!(classify_one_param(&QMatrix::zeros(3, 3), &adapted), Err(IsotropyError::ZeroGenerator));
    }

    #[test]
    fn invariant_forms() {
        assert_eq!(invariant_lorentz_forms(&QMatrix::zeros(3, 3)).len(), 6);
        let forms = invariant_lorentz_forms(&QMatrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]));
        assert_eq!(forms.len(), 2);
        let uni = QMatrix::from_i64(&[&[0, 1, 0], &[0, 0, -1], &[0, 0, 0]]);
        let forms = invariant_lorentz_forms(&uni);
        assert_eq!(forms.len(), 2);
        for f in &forms {
            assert!(f.gram.congruence(&QMatrix::identity(3)).is_symmetric());
            assert!(f.gram.mul(&uni).add(&uni.transpose().mul(&f.gram)).is_zero());
        }
    }
}
