//! Frame components of (1,k) tensors on a Lie algebra.

use crate::linalg::QMatrix;
use crate::rational::Rational;
use num_traits::Zero;

/// Components `T^a_{b1…bk}`, stored with `a` most significant and `bk` least.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    n: usize,
    lower: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(n: usize, lower: usize) -> Self {
        Tensor {
            n,
            lower,
            data: vec![Rational::zero(); n.pow(lower as u32 + 1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn scaled(&self, q: &Rational) -> Tensor {
        Tensor { n: self.n, lower: self.lower, data: self.data.iter().map(|x| x * q).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn offset(&self, upper: usize, lows: &[usize]) -> usize {
        debug_assert_eq!(lows.len(), self.lower);
        lows.iter().fold(upper, |acc, &i| acc * self.n + i)
    }

    pub fn get(&self, upper: usize, lows: &[usize]) -> &Rational {
        &self.data[self.offset(upper, lows)]
    }

    pub fn set(&mut self, upper: usize, lows: &[usize], v: Rational) {
        let o = self.offset(upper, lows);
        self.data[o] = v;
    }

    /// Decodes a flat position into `(upper, lower indices)`.
    fn decode(&self, mut pos: usize, lows: &mut [usize]) -> usize {
        for slot in lows.iter_mut().rev() {
            *slot = pos % self.n;
            pos /= self.n;
        }
        pos
    }

    /// Vector `T(e_{b1}, …, e_{bk})`.
    pub fn value(&self, lows: &[usize]) -> Vec<Rational> {
        (0..self.n).map(|a| self.get(a, lows).clone()).collect()
    }

    /// Action of the endomorphism `A` as a derivation:
    /// `(A·T)(x…) = A(T(x…)) − Σ_i T(…, A x_i, …)`.
    pub fn derivation(&self, a: &QMatrix) -> Tensor {
        let mut out = Tensor::zeros(self.n, self.lower);
        for pos in 0..self.data.len() {
            out.data[pos] = self.derivation_at(a, pos);
        }
        out
    }

    /// Single component of [`Tensor::derivation`] at a flat position.
    pub fn derivation_at(&self, a: &QMatrix, pos: usize) -> Rational {
        let n = self.n;
        let mut lows = vec![0; self.lower];
        let up = self.decode(pos, &mut lows);
        let mut acc = Rational::zero();
        for c in 0..n {
            let ac = &a[(up, c)];
            if !ac.is_zero() {
                let t = self.get(c, &lows);
                if !t.is_zero() {
                    acc += ac * t;
                }
            }
        }
        let mut shifted = lows.clone();
        for i in 0..self.lower {
            for c in 0..n {
                let acb = &a[(c, lows[i])];
                if acb.is_zero() {
                    continue;
                }
                shifted[i] = c;
                let t = self.get(up, &shifted);
                if !t.is_zero() {
                    acc -= acb * t;
                }
            }
            shifted[i] = lows[i];
        }
        acc
    }

    /// Covariant derivative along the left-invariant frame; the new slot comes first:
    /// `(∇T)(w, x…) = ∇_w(T(x…)) − Σ_i T(…, ∇_w x_i, …)`.
    /// `gamma[w]` is the matrix of `v ↦ ∇_{e_w} v`.
    pub fn covariant_derivative(&self, gamma: &[QMatrix]) -> Tensor {
        // With constant frame components, ∇_w acts as the derivation by v ↦ ∇_w v.
        let n = self.n;
        let inner = n.pow(self.lower as u32);
        let mut out = Tensor::zeros(n, self.lower + 1);
        for (w, g) in gamma.iter().enumerate() {
            for (idx, v) in self.derivation(g).data.into_iter().enumerate() {
                let (upper, rest) = (idx / inner, idx % inner);
                out.data[(upper * n + w) * inner + rest] = v;
            }
        }
        out
    }
}
