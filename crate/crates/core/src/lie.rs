//! Lie algebras given by exact structure constants.

use crate::linalg::{self, QMatrix, QVector};
use crate::rational::{self, int, Rational};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("unsupported dimension {0} (expected 3 or 4)")]
    UnsupportedDimension(usize),
    #[error("expected {expected} basis names, got {got}")]
    BasisNames { expected: usize, got: usize },
    #[error("bracket [e{i},e{j}] has an index out of range or repeats an index")]
    BadIndex { i: usize, j: usize },
    #[error("bracket result has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("Jacobi identity fails for (i,j,l)=({i},{j},{l}) in component {k}")]
    JacobiViolation { i: usize, j: usize, l: usize, k: usize },
}

/// Structure constants stored for `i < j` only: `[e_i, e_j] = Σ_k c^k_ij e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    upper: Vec<QVector>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Abelian algebra on the given basis names.
    pub fn abelian(names: &[&str]) -> Result<Self, LieError> {
        let n = names.len();
        if !(3..=4).contains(&n) {
            return Err(LieError::UnsupportedDimension(n));
        }
        Ok(LieAlgebra {
            names: names.iter().map(|s| s.to_string()).collect(),
            upper: vec![vec![Rational::zero(); n]; n * (n - 1) / 2],
        })
    }

    /// Builds from nonzero brackets `[e_i, e_j] = v`; `i > j` entries are negated into place.
    /// Later entries for the same pair overwrite earlier ones. Jacobi is not checked here.
    pub fn from_brackets(names: &[&str], brackets: &[(usize, usize, QVector)]) -> Result<Self, LieError> {
        let mut a = Self::abelian(names)?;
        for (i, j, v) in brackets {
            a.set_bracket(*i, *j, v.clone())?;
        }
        Ok(a)
    }

    /// Same as [`from_brackets`](Self::from_brackets) with integer coefficients.
    pub fn from_int_brackets(names: &[&str], brackets: &[(usize, usize, &[i64])]) -> Result<Self, LieError> {
        let b: Vec<(usize, usize, QVector)> = brackets
            .iter()
            .map(|(i, j, v)| (*i, *j, v.iter().map(|&x| int(x)).collect()))
            .collect();
        Self::from_brackets(names, &b)
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: QVector) -> Result<(), LieError> {
        let n = self.dim();
        if i == j || i >= n || j >= n {
            return Err(LieError::BadIndex { i, j });
        }
        if v.len() != n {
            return Err(LieError::BadLength { expected: n, got: v.len() });
        }
        if i < j {
            self.upper[pair_index(n, i, j)] = v;
        } else {
            self.upper[pair_index(n, j, i)] = linalg::vec_scale(&v, &-Rational::one());
        }
        Ok(())
    }

    pub fn with_names(mut self, names: &[&str]) -> Result<Self, LieError> {
        if names.len() != self.dim() {
            return Err(LieError::BasisNames { expected: self.dim(), got: names.len() });
        }
        self.names = names.iter().map(|s| s.to_string()).collect();
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> QVector {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec![Rational::zero(); n],
            std::cmp::Ordering::Less => self.upper[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => {
                linalg::vec_scale(&self.upper[pair_index(n, j, i)], &-Rational::one())
            }
        }
    }

    /// `c^k_ij`.
    pub fn constant(&self, k: usize, i: usize, j: usize) -> Rational {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Rational::zero(),
            std::cmp::Ordering::Less => self.upper[pair_index(n, i, j)][k].clone(),
            std::cmp::Ordering::Greater => -self.upper[pair_index(n, j, i)][k].clone(),
        }
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> QVector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                let b = self.bracket_basis(i, j);
                for k in 0..n {
                    if !b[k].is_zero() {
                        out[k] += &f * &b[k];
                    }
                }
            }
        }
        out
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, QVector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_basis(i, j);
                if !linalg::is_zero_vec(&v) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Checks the Jacobi identity exactly; reports the first failing `(i,j,l,k)`.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let (ei, ej, el) = (linalg::unit(n, i), linalg::unit(n, j), linalg::unit(n, l));
                    let s1 = self.bracket(&ei, &self.bracket_basis(j, l));
                    let s2 = self.bracket(&ej, &self.bracket_basis(l, i));
                    let s3 = self.bracket(&el, &self.bracket_basis(i, j));
                    for k in 0..n {
                        if !(&s1[k] + &s2[k] + &s3[k]).is_zero() {
                            return Err(LieError::JacobiViolation { i, j, l, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> QMatrix {
        let n = self.dim();
        let cols: Vec<QVector> = (0..n).map(|j| self.bracket(x, &linalg::unit(n, j))).collect();
        QMatrix::from_columns(&cols)
    }

    pub fn ad_basis(&self, i: usize) -> QMatrix {
        self.ad(&linalg::unit(self.dim(), i))
    }

    /// `B(x, y) = tr(ad x ∘ ad y)` on the basis.
    pub fn killing_form(&self) -> QMatrix {
        let n = self.dim();
        let ads: Vec<QMatrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut b = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = ads[i].mul(&ads[j]).trace();
                b[(i, j)] = t.clone();
                b[(j, i)] = t;
            }
        }
        b
    }

    fn bracket_span(&self, a: &[QVector], b: &[QVector]) -> Vec<QVector> {
        let mut vs = Vec::new();
        for x in a {
            for y in b {
                let z = self.bracket(x, y);
                if !linalg::is_zero_vec(&z) {
                    vs.push(z);
                }
            }
        }
        linalg::span_basis(&vs, self.dim())
    }

    fn full_basis(&self) -> Vec<QVector> {
        (0..self.dim()).map(|i| linalg::unit(self.dim(), i)).collect()
    }

    /// `g, [g,g], [[g,g],[g,g]], …` until the series stabilizes (last entry repeated once dropped).
    pub fn derived_series(&self) -> Vec<Vec<QVector>> {
        let mut series = vec![self.full_basis()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if next.len() == last.len() {
                break;
            }
            let done = next.is_empty();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    pub fn derived_algebra(&self) -> Vec<QVector> {
        self.bracket_span(&self.full_basis(), &self.full_basis())
    }

    fn lower_central_series(&self) -> Vec<Vec<QVector>> {
        let full = self.full_basis();
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(&full, last);
            if next.len() == last.len() {
                break;
            }
            let done = next.is_empty();
            series.push(next);
            if done {
                break;
            }
        }
        series
    }

    pub fn center(&self) -> Vec<QVector> {
        let n = self.dim();
        // x central iff Σ_i x_i c^k_ij = 0 for all j, k.
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.constant(k, i, j)).collect());
            }
        }
        let ns = QMatrix::from_rows(rows).nullspace();
        linalg::span_basis(&ns, n)
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim()).all(|i| self.ad_basis(i).trace().is_zero())
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(|s| s.is_empty())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(|s| s.is_empty())
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn conjugate(&self, p: &QMatrix) -> Option<Self> {
        let pinv = p.inverse()?;
        let n = self.dim();
        let cols: Vec<QVector> = (0..n).map(|j| p.column(j)).collect();
        let mut out = LieAlgebra { names: self.names.clone(), upper: Vec::new() };
        for i in 0..n {
            for j in i + 1..n {
                out.upper.push(pinv.mul_vec(&self.bracket(&cols[i], &cols[j])));
            }
        }
        Some(out)
    }

    /// Structure constants of the subalgebra spanned by `basis`, or `None` if it is not closed.
    pub fn subalgebra(&self, basis: &[QVector], names: &[&str]) -> Option<Self> {
        let m = QMatrix::from_columns(basis);
        if m.rank() != basis.len() {
            return None;
        }
        let k = basis.len();
        let mut upper = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                upper.push(m.solve(&self.bracket(&basis[i], &basis[j]))?);
            }
        }
        Some(LieAlgebra { names: names.iter().map(|s| s.to_string()).collect(), upper })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AlgebraTag {
    Abelian,
    Heis,
    Sol,
    Sl2,
    Su2,
    Euclid2Cover,
    Other,
}

impl AlgebraTag {
    pub fn label(self) -> &'static str {
        match self {
            AlgebraTag::Abelian => "R3",
            AlgebraTag::Heis => "Heis",
            AlgebraTag::Sol => "SOL",
            AlgebraTag::Sl2 => "SL2",
            AlgebraTag::Su2 => "SU2",
            AlgebraTag::Euclid2Cover => "E2",
            AlgebraTag::Other => "other",
        }
    }
}

/// Result of [`recognize_algebra3`]. `witness` has as columns the reference basis expressed in
/// the input basis; it is `None` when no rational conjugating basis was found (for instance a
/// SOL algebra whose `ad` eigenvalues are irrational).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraIdentity {
    pub tag: AlgebraTag,
    pub witness: Option<QMatrix>,
}

/// Reference presentations.
pub fn reference_algebra(tag: AlgebraTag) -> Option<LieAlgebra> {
    let a = match tag {
        AlgebraTag::Abelian => LieAlgebra::abelian(&["e1", "e2", "e3"]),
        AlgebraTag::Heis => LieAlgebra::from_int_brackets(&["X'", "Z", "T"], &[(1, 2, &[1, 0, 0])]),
        AlgebraTag::Sol => {
            LieAlgebra::from_int_brackets(&["X", "Z", "T"], &[(2, 0, &[1, 0, 0]), (2, 1, &[0, -1, 0])])
        }
        AlgebraTag::Sl2 => LieAlgebra::from_int_brackets(
            &["X'", "Y", "Z"],
            &[(0, 1, &[0, 1, 0]), (0, 2, &[0, 0, -1]), (2, 1, &[2, 0, 0])],
        ),
        AlgebraTag::Su2 => LieAlgebra::from_int_brackets(
            &["e1", "e2", "e3"],
            &[(0, 1, &[0, 0, 1]), (1, 2, &[1, 0, 0]), (2, 0, &[0, 1, 0])],
        ),
        AlgebraTag::Euclid2Cover => {
            LieAlgebra::from_int_brackets(&["X", "Z", "T"], &[(2, 0, &[0, 1, 0]), (2, 1, &[-1, 0, 0])])
        }
        AlgebraTag::Other => return None,
    };
    Some(a.expect("reference presentations are well formed"))
}

/// Whether the columns of `w` carry `a` exactly onto the reference presentation of `tag`.
pub fn is_witness(a: &LieAlgebra, tag: AlgebraTag, w: &QMatrix) -> bool {
    match (reference_algebra(tag), a.conjugate(w)) {
        (Some(r), Some(c)) => c.upper == r.upper,
        _ => false,
    }
}

/// Identifies a 3-dimensional algebra from exact invariants and searches for a witness.
pub fn recognize_algebra3(a: &LieAlgebra) -> AlgebraIdentity {
    assert_eq!(a.dim(), 3, "recognize_algebra3 needs a 3-dimensional algebra");
    let derived = a.derived_algebra();
    let (tag, witness) = match derived.len() {
        0 => (AlgebraTag::Abelian, Some(QMatrix::identity(3))),
        1 => recognize_rank_one(a, &derived[0]),
        2 => recognize_rank_two(a, &derived),
        _ => {
            let (p, n, _) = linalg::signature(&a.killing_form());
            if n == 3 && p == 0 {
                (AlgebraTag::Su2, search_su2(a))
            } else {
                (AlgebraTag::Sl2, search_sl2(a))
            }
        }
    };
    debug_assert!(witness.as_ref().is_none_or(|w| is_witness(a, tag, w)));
    AlgebraIdentity { tag, witness }
}

/// First standard basis vectors completing `fixed` to a basis.
fn complete_basis(fixed: &[QVector], n: usize) -> Vec<QVector> {
    let mut basis: Vec<QVector> = fixed.to_vec();
    for i in 0..n {
        if basis.len() == n {
            break;
        }
        let mut trial = basis.clone();
        trial.push(linalg::unit(n, i));
        if QMatrix::from_rows(trial.clone()).rank() == trial.len() {
            basis = trial;
        }
    }
    basis
}

fn recognize_rank_one(a: &LieAlgebra, w: &QVector) -> (AlgebraTag, Option<QMatrix>) {
    if !a.ad(w).is_zero() {
        return (AlgebraTag::Other, None);
    }
    let basis = complete_basis(std::slice::from_ref(w), 3);
    let (z, t) = (basis[1].clone(), basis[2].clone());
    let x = a.bracket(&z, &t);
    (AlgebraTag::Heis, Some(QMatrix::from_columns(&[x, z, t])))
}

fn recognize_rank_two(a: &LieAlgebra, derived: &[QVector]) -> (AlgebraTag, Option<QMatrix>) {
    let basis = complete_basis(derived, 3);
    let x = basis[2].clone();
    // Restriction of ad x to the derived algebra, in the basis derived[0], derived[1].
    let d = QMatrix::from_columns(derived);
    let cols: Vec<QVector> = derived
        .iter()
        .map(|v| d.solve(&a.bracket(&x, v)).expect("derived algebra is an ideal"))
        .collect();
    let m = QMatrix::from_columns(&cols);
    if !m.trace().is_zero() {
        return (AlgebraTag::Other, None);
    }
    let det = m.det();
    if det.is_negative() {
        let Some(lambda) = rational::sqrt(&-det.clone()) else {
            return (AlgebraTag::Sol, None);
        };
        let t = linalg::vec_scale(&x, &lambda.recip());
        let ad_t = a.ad(&t);
        let eig = |mu: Rational| {
            let shifted = ad_t.sub(&QMatrix::identity(3).scale(&mu));
            shifted
                .nullspace()
                .into_iter()
                .find(|v| !linalg::in_span(std::slice::from_ref(&t), v))
        };
        let (Some(xv), Some(zv)) = (eig(Rational::one()), eig(-Rational::one())) else {
            return (AlgebraTag::Sol, None);
        };
        (AlgebraTag::Sol, Some(QMatrix::from_columns(&[xv, zv, t])))
    } else if det.is_positive() {
        let Some(lambda) = rational::sqrt(&det) else {
            return (AlgebraTag::Euclid2Cover, None);
        };
        // ad T restricted to the derived algebra squares to −1; take X, then Z = [T, X].
        let t = linalg::vec_scale(&x, &lambda.recip());
        let xv = derived[0].clone();
        let zv = a.bracket(&t, &xv);
        (AlgebraTag::Euclid2Cover, Some(QMatrix::from_columns(&[xv, zv, t])))
    } else {
        (AlgebraTag::Other, None)
    }
}

fn small_vectors(bound: i64) -> impl Iterator<Item = QVector> {
    let mut vs: Vec<[i64; 3]> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                if (a, b, c) != (0, 0, 0) {
                    vs.push([a, b, c]);
                }
            }
        }
    }
    vs.sort_by_key(|v| (v.iter().map(|x| x.abs()).max().unwrap(), v.iter().map(|x| x.abs()).sum::<i64>()));
    vs.into_iter().map(|v| v.iter().map(|&x| int(x)).collect())
}

fn search_sl2(a: &LieAlgebra) -> Option<QMatrix> {
    let b = a.killing_form();
    let two = int(2);
    for h in small_vectors(3) {
        let bh = b.bilinear(&h, &h);
        if !bh.is_positive() {
            continue;
        }
        let Some(mu) = rational::sqrt(&(&bh / &two)) else {
            continue;
        };
        let x = linalg::vec_scale(&h, &mu.recip());
        let ad_x = a.ad(&x);
        let eig = |lam: Rational| {
            ad_x.sub(&QMatrix::identity(3).scale(&lam)).nullspace().into_iter().next()
        };
        let (Some(y), Some(z)) = (eig(Rational::one()), eig(-Rational::one())) else {
            continue;
        };
        // [Z, Y] = κ X′; rescale Y so that κ = 2.
        let zy = a.bracket(&z, &y);
        let kappa = zy.iter().zip(&x).find(|(_, xi)| !xi.is_zero()).map(|(v, xi)| v / xi)?;
        if kappa.is_zero() {
            continue;
        }
        let y = linalg::vec_scale(&y, &(&two / &kappa));
        let w = QMatrix::from_columns(&[x, y, z]);
        if is_witness(a, AlgebraTag::Sl2, &w) {
            return Some(w);
        }
    }
    None
}

fn search_su2(a: &LieAlgebra) -> Option<QMatrix> {
    let b = a.killing_form();
    let target = int(-2);
    let candidates: Vec<QVector> = small_vectors(3).filter(|v| b.bilinear(v, v) == target).collect();
    for e1 in &candidates {
        for e2 in &candidates {
            if !b.bilinear(e1, e2).is_zero() {
                continue;
            }
            let e3 = a.bracket(e1, e2);
            let w = QMatrix::from_columns(&[e1.clone(), e2.clone(), e3]);
            if is_witness(a, AlgebraTag::Su2, &w) {
                return Some(w);
            }
        }
    }
    None
}
