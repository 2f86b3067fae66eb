//! Levi-Civita connection and curvature of left-invariant metrics.

use crate::lie::LieAlgebra;
use crate::linalg::{self, QMatrix, QVector};
use crate::rational::{self, Rational};
use crate::tensor::Tensor;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("metric matrix is not symmetric")]
    NotSymmetric,
    #[error("metric is {0}x{0}, algebra has dimension {1}")]
    DimensionMismatch(usize, usize),
    #[error("metric is degenerate (determinant 0)")]
    DegenerateMetric,
    #[error("metric has signature {0:?}, expected (2, 1, 0)")]
    NotLorentzian((usize, usize, usize)),
    #[error("vector is not isotropic: g(e1, e1) = {0}")]
    NotIsotropic(String),
    #[error("zero vector")]
    ZeroVector,
    #[error("plane is degenerate")]
    DegeneratePlane,
}

/// Gram matrix `g(e_i, e_j)` at the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantMetric {
    gram: QMatrix,
}

impl InvariantMetric {
    pub fn new(gram: QMatrix) -> Result<Self, MetricError> {
        if !gram.is_symmetric() {
            return Err(MetricError::NotSymmetric);
        }
        Ok(InvariantMetric { gram })
    }

    /// Builds a Gram matrix from upper-triangle entries `(i, j, value)`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, Rational)]) -> Self {
        let mut g = QMatrix::zeros(n, n);
        for (i, j, v) in entries {
            g[(*i, *j)] = v.clone();
            g[(*j, *i)] = v.clone();
        }
        InvariantMetric { gram: g }
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.gram.bilinear(x, y)
    }

    pub fn norm(&self, x: &[Rational]) -> Rational {
        self.apply(x, x)
    }

    pub fn scaled(&self, lambda: &Rational) -> Self {
        InvariantMetric { gram: self.gram.scale(lambda) }
    }

    /// Metric in the basis given by the columns of `p`.
    pub fn congruent(&self, p: &QMatrix) -> Self {
        InvariantMetric { gram: self.gram.congruence(p) }
    }

    pub fn signature(&self) -> (usize, usize, usize) {
        signature(self)
    }

    pub fn is_lorentzian(&self) -> bool {
        self.dim() == 3 && self.signature() == (2, 1, 0)
    }

    pub fn require_lorentzian(&self) -> Result<(), MetricError> {
        let s = self.signature();
        if s == (2, 1, 0) {
            Ok(())
        } else {
            Err(MetricError::NotLorentzian(s))
        }
    }
}

pub fn signature(m: &InvariantMetric) -> (usize, usize, usize) {
    linalg::signature(&m.gram)
}

/// `∇_{e_i} e_j = Σ_k Γ^k_ij e_k`, stored as one matrix per `i` (column `j` = `∇_{e_i} e_j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionCoefficients {
    by_direction: Vec<QMatrix>,
}

impl ConnectionCoefficients {
    pub fn dim(&self) -> usize {
        self.by_direction.len()
    }

    /// `Γ^k_ij`.
    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.by_direction[i][(k, j)]
    }

    /// `∇_{e_i} e_j`.
    pub fn basis(&self, i: usize, j: usize) -> QVector {
        self.by_direction[i].column(j)
    }

    /// Matrix of `v ↦ ∇_{e_i} v`.
    pub fn direction(&self, i: usize) -> &QMatrix {
        &self.by_direction[i]
    }

    pub fn directions(&self) -> &[QMatrix] {
        &self.by_direction
    }

    /// `∇_x y` for left-invariant fields.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> QVector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let v = self.by_direction[i].mul_vec(y);
            for k in 0..n {
                out[k] += xi * &v[k];
            }
        }
        out
    }

    /// Largest absolute torsion residual `Γ^k_ij − Γ^k_ji − c^k_ij` (zero for Levi-Civita).
    pub fn torsion_residual(&self, a: &LieAlgebra) -> Rational {
        let n = self.dim();
        let mut worst = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r = (self.get(k, i, j) - self.get(k, j, i) - a.constant(k, i, j)).abs();
                    worst = worst.max(r);
                }
            }
        }
        worst
    }

    /// Largest absolute residual of `g(∇_i e_j, e_l) + g(e_j, ∇_i e_l)`.
    pub fn compatibility_residual(&self, m: &InvariantMetric) -> Rational {
        let n = self.dim();
        let mut worst = Rational::zero();
        for i in 0..n {
            let lhs = m.gram.mul(&self.by_direction[i]);
            // (G Γ_i)_{lj} = g(e_l, ∇_i e_j); skewness of G Γ_i is compatibility.
            let s = lhs.add(&lhs.transpose());
            for x in s.entries() {
                worst = worst.max(x.abs());
            }
        }
        worst
    }
}

/// Levi-Civita connection by the Koszul formula for left-invariant fields:
/// `2 g(∇_x y, z) = g([x,y],z) − g([y,z],x) + g([z,x],y)`.
pub fn levi_civita(a: &LieAlgebra, m: &InvariantMetric) -> Result<ConnectionCoefficients, MetricError> {
    let n = a.dim();
    if m.dim() != n {
        return Err(MetricError::DimensionMismatch(m.dim(), n));
    }
    let ginv = m.gram.inverse().ok_or(MetricError::DegenerateMetric)?;
    let g = &m.gram;
    // gb[i][j][l] = g([e_i, e_j], e_l)
    let gb: Vec<Vec<QVector>> = (0..n)
        .map(|i| (0..n).map(|j| g.mul_vec(&a.bracket_basis(i, j))).collect())
        .collect();
    let half = rational::frac(1, 2);
    let mut by_direction = Vec::with_capacity(n);
    for i in 0..n {
        let mut gamma = QMatrix::zeros(n, n);
        for j in 0..n {
            let lowered: QVector = (0..n)
                .map(|l| (&gb[i][j][l] - &gb[j][l][i] + &gb[l][i][j]) * &half)
                .collect();
            let v = ginv.mul_vec(&lowered);
            for k in 0..n {
                gamma[(k, j)] = v[k].clone();
            }
        }
        by_direction.push(gamma);
    }
    Ok(ConnectionCoefficients { by_direction })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureData {
    /// `R^a_{bcd}` = component `a` of `R(e_b, e_c) e_d`.
    pub riemann: Tensor,
    /// `Ric(u, v) = tr(w ↦ R(w, u) v)`.
    pub ricci: QMatrix,
    pub scalar: Rational,
    /// `tr((g⁻¹ Ric)²)`.
    pub ricci_squared: Rational,
}

impl CurvatureData {
    /// Matrix of `R(e_x, e_y)`.
    pub fn operator(&self, x: usize, y: usize) -> QMatrix {
        let n = self.riemann.dim();
        let cols: Vec<QVector> = (0..n).map(|z| self.riemann.value(&[x, y, z])).collect();
        QMatrix::from_columns(&cols)
    }

    /// `R(x, y) z` for arbitrary vectors.
    pub fn apply(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> QVector {
        let n = self.riemann.dim();
        let mut out = vec![Rational::zero(); n];
        for b in 0..n {
            if x[b].is_zero() {
                continue;
            }
            for c in 0..n {
                if y[c].is_zero() {
                    continue;
                }
                for d in 0..n {
                    if z[d].is_zero() {
                        continue;
                    }
                    let f = &x[b] * &y[c] * &z[d];
                    for (a, o) in out.iter_mut().enumerate() {
                        let r = self.riemann.get(a, &[b, c, d]);
                        if !r.is_zero() {
                            *o += &f * r;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_flat(&self) -> bool {
        self.riemann.is_zero()
    }

    /// Components of `(∇_w R)(x, y) z`, slot order `(w, x, y, z)`.
    pub fn nabla_riemann(&self, gamma: &ConnectionCoefficients) -> Tensor {
        self.riemann.covariant_derivative(gamma.directions())
    }
}

/// Riemann tensor with `R(x,y)z = ∇_x∇_y z − ∇_y∇_x z − ∇_{[x,y]} z`.
/// Works over integers: with `Γ = G / D` and structure constants `C / E`,
/// `R = (E (G_b G_c − G_c G_b) − D Σ_f C^f_{bc} G_f) / (E D²)`.
pub fn riemann_tensor(a: &LieAlgebra, gamma: &ConnectionCoefficients) -> Tensor {
    let n = a.dim();
    let d = rational::common_denominator(gamma.directions().iter().flat_map(|g| g.entries()));
    let brackets: Vec<Vec<QVector>> = (0..n).map(|b| (0..n).map(|c| a.bracket_basis(b, c)).collect()).collect();
    let e = rational::common_denominator(brackets.iter().flatten().flatten());
    let dq = Rational::from_integer(d.clone());
    let eq = Rational::from_integer(e.clone());
    let g: Vec<Vec<BigInt>> = gamma
        .directions()
        .iter()
        .map(|m| m.entries().iter().map(|x| (x * &dq).to_integer()).collect())
        .collect();
    let denom = Rational::from_integer(&e * &d * &d);
    let mut r = Tensor::zeros(n, 3);
    for b in 0..n {
        for c in (b + 1)..n {
            let cf: Vec<BigInt> = brackets[b][c].iter().map(|x| (x * &eq).to_integer()).collect();
            for row in 0..n {
                for col in 0..n {
                    let mut comm = BigInt::zero();
                    for k in 0..n {
                        comm += &g[b][row * n + k] * &g[c][k * n + col] - &g[c][row * n + k] * &g[b][k * n + col];
                    }
                    let mut acc = &e * comm;
                    for (f, cff) in cf.iter().enumerate() {
                        if !cff.is_zero() {
                            acc -= &d * cff * &g[f][row * n + col];
                        }
                    }
                    if acc.is_zero() {
                        continue;
                    }
                    let v = Rational::from_integer(acc) / &denom;
                    r.set(row, &[c, b, col], -v.clone());
                    r.set(row, &[b, c, col], v);
                }
            }
        }
    }
    r
}

pub fn curvature(a: &LieAlgebra, m: &InvariantMetric, gamma: &ConnectionCoefficients) -> CurvatureData {
    let n = a.dim();
    let riemann = riemann_tensor(a, gamma);
    let mut ricci = QMatrix::zeros(n, n);
    for u in 0..n {
        for v in 0..n {
            let mut t = Rational::zero();
            for w in 0..n {
                t += riemann.get(w, &[w, u, v]);
            }
            ricci[(u, v)] = t;
        }
    }
    let ginv = m.gram.inverse().expect("levi_civita already rejected degenerate metrics");
    let mixed = ginv.mul(&ricci);
    let scalar = mixed.trace();
    let ricci_squared = mixed.mul(&mixed).trace();
    CurvatureData { riemann, ricci, scalar, ricci_squared }
}

/// Connection and curvature in one call.
pub fn geometry(a: &LieAlgebra, m: &InvariantMetric) -> Result<(ConnectionCoefficients, CurvatureData), MetricError> {
    let gamma = levi_civita(a, m)?;
    let curv = curvature(a, m, &gamma);
    Ok((gamma, curv))
}

/// `K = g(R(x,y)y, x) / (g(x,x) g(y,y) − g(x,y)²)`.
pub fn sectional_curvature(
    m: &InvariantMetric,
    curv: &CurvatureData,
    x: &[Rational],
    y: &[Rational],
) -> Result<Rational, MetricError> {
    let q = m.norm(x) * m.norm(y) - m.apply(x, y) * m.apply(x, y);
    if q.is_zero() {
        return Err(MetricError::DegeneratePlane);
    }
    Ok(m.apply(&curv.apply(x, y, y), x) / q)
}

/// `Some(κ)` iff `R(x,y)z = κ (g(y,z) x − g(x,z) y)` on all frame triples.
pub fn constant_curvature_test(a: &LieAlgebra, m: &InvariantMetric) -> Result<Option<Rational>, MetricError> {
    let (_, curv) = geometry(a, m)?;
    Ok(constant_curvature_of(m, &curv))
}

pub fn constant_curvature_of(m: &InvariantMetric, curv: &CurvatureData) -> Option<Rational> {
    let n = m.dim();
    let g = &m.gram;
    // R(x,y)z − κ(g(y,z)x − g(x,z)y) is affine in κ; read κ off the first nonzero model entry.
    let mut kappa: Option<Rational> = None;
    for b in 0..n {
        for c in 0..n {
            for d in 0..n {
                for aa in 0..n {
                    let mut model = Rational::zero();
                    if aa == b {
                        model += &g[(c, d)];
                    }
                    if aa == c {
                        model -= &g[(b, d)];
                    }
                    let r = curv.riemann.get(aa, &[b, c, d]);
                    if model.is_zero() {
                        if !r.is_zero() {
                            return None;
                        }
                        continue;
                    }
                    let k = r / &model;
                    match &kappa {
                        None => kappa = Some(k),
                        Some(k0) if *k0 != k => return None,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    Some(kappa.unwrap_or_else(Rational::zero))
}

/// Frame with `g(e1,e1)=0, g(e1,e2)=0, g(e2,e2)=1, g(e3,e3)=0, g(e2,e3)=0, g(e3,e1)=1`
/// for the metric `scale · g`. `scale` is 1 unless normalizing `e2` would need a square root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedBasis {
    pub e1: QVector,
    pub e2: QVector,
    pub e3: QVector,
    pub scale: Rational,
}

impl AdaptedBasis {
    /// Columns `(e1, e2, e3)`.
    pub fn matrix(&self) -> QMatrix {
        QMatrix::from_columns(&[self.e1.clone(), self.e2.clone(), self.e3.clone()])
    }

    /// Whether the six Gram relations hold for `scale · m`.
    pub fn check(&self, m: &InvariantMetric) -> bool {
        let g = m.scaled(&self.scale);
        let (z, o) = (Rational::zero(), Rational::one());
        g.norm(&self.e1) == z
            && g.apply(&self.e1, &self.e2) == z
            && g.norm(&self.e2) == o
            && g.norm(&self.e3) == z
            && g.apply(&self.e2, &self.e3) == z
            && g.apply(&self.e3, &self.e1) == o
    }
}

pub fn adapted_basis(m: &InvariantMetric, e1: &[Rational]) -> Result<AdaptedBasis, MetricError> {
    m.require_lorentzian()?;
    if linalg::is_zero_vec(e1) {
        return Err(MetricError::ZeroVector);
    }
    let nu = m.norm(e1);
    if !nu.is_zero() {
        return Err(MetricError::NotIsotropic(rational::format(&nu)));
    }
    let n = m.dim();
    let ge1 = m.gram.mul_vec(e1);
    // e1⊥ = span{e1, w}; any w ∈ e1⊥ off the line e1 has positive norm.
    let perp = QMatrix::from_rows(vec![ge1.clone()]).nullspace();
    let e2_raw = perp
        .into_iter()
        .find(|v| m.norm(v).is_positive())
        .ok_or(MetricError::DegeneratePlane)?;
    let nrm = m.norm(&e2_raw);
    let (e2, scale) = match rational::sqrt(&nrm) {
        Some(s) => (linalg::vec_scale(&e2_raw, &s.recip()), Rational::one()),
        None => (e2_raw, nrm.recip()),
    };
    let g = m.scaled(&scale);
    // w with g(w, e1) = 1, g(w, e2) = 0, then e3 = w − ½ g(w,w) e1.
    let system = QMatrix::from_rows(vec![g.gram.mul_vec(e1), g.gram.mul_vec(&e2)]);
    let w = system
        .solve(&[Rational::one(), Rational::zero()])
        .ok_or(MetricError::DegenerateMetric)?;
    let e3 = linalg::vec_sub(&w, &linalg::vec_scale(e1, &(g.norm(&w) * rational::frac(1, 2))));
    debug_assert_eq!(e3.len(), n);
    Ok(AdaptedBasis { e1: e1.to_vec(), e2, e3, scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{reference_algebra, AlgebraTag};
    use crate::rational::{frac, int};

    fn lorentz_sol() -> (LieAlgebra, InvariantMetric) {
        let a = reference_algebra(AlgebraTag::Sol).unwrap();
        let m = InvariantMetric::from_entries(3, &[(0, 2, int(1)), (1, 1, int(1))]);
        (a, m)
    }

    #[test]
    fn abelian_connection_vanishes() {
        let a = LieAlgebra::abelian(&["x", "y", "z"]).unwrap();
        let m = InvariantMetric::from_entries(3, &[(0, 0, int(1)), (1, 1, int(1)), (2, 2, int(-1))]);
        let (gamma, curv) = geometry(&a, &m).unwrap();
        assert!(gamma.directions().iter().all(QMatrix::is_zero));
        assert!(curv.is_flat());
        assert_eq!(constant_curvature_of(&m, &curv), Some(int(0)));
    }

    #[test]
    fn degenerate_metric_rejected() {
        let (a, _) = lorentz_sol();
        let m = InvariantMetric::from_entries(3, &[(0, 0, int(1))]);
        assert_eq!(levi_civita(&a, &m), Err(MetricError::DegenerateMetric));
    }

    #[test]
    fn degenerate_plane_in_derived_algebra() {
        let (a, m) = lorentz_sol();
        let (_, curv) = geometry(&a, &m).unwrap();
        let r = sectional_curvature(&m, &curv, &linalg::unit(3, 0), &linalg::unit(3, 1));
        assert_eq!(r, Err(MetricError::DegeneratePlane));
    }

    #[test]
    fn adapted_basis_examples() {
        let mink = InvariantMetric::from_entries(3, &[(0, 0, int(1)), (1, 1, int(1)), (2, 2, int(-1))]);
        let b = adapted_basis(&mink, &[int(0), int(1), int(1)]).unwrap();
        assert!(b.check(&mink));
        assert_eq!(b.scale, int(1));
        let (_, m) = lorentz_sol();
        let b = adapted_basis(&m, &linalg::unit(3, 0)).unwrap();
        assert!(b.check(&m));
        assert!(b.e2[2].is_zero(), "e2 lies in span{{X, Z}}");
        assert!(matches!(adapted_basis(&m, &linalg::unit(3, 1)), Err(MetricError::NotIsotropic(_))));
    }

    #[test]
    fn adapted_basis_scale_when_norm_is_not_a_square() {
        let m = InvariantMetric::from_entries(3, &[(0, 2, int(1)), (1, 1, int(2))]);
        let b = adapted_basis(&m, &linalg::unit(3, 0)).unwrap();
        assert_eq!(b.scale, frac(1, 2));
        assert!(b.check(&m));
    }
}
