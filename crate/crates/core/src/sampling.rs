//! Seeded generators: probe directions, random algebras, random Lorentzian metrics.

use crate::lie::LieAlgebra;
use crate::linalg::QMatrix;
use crate::metric::InvariantMetric;
use crate::rational::{int, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` unit vectors. In dimension 3 a Fibonacci sphere rotated by a seeded azimuth,
/// otherwise normalized seeded points of the cube.
pub fn sphere_directions(n: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut r = rng(seed);
    if n != 3 {
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let v: Vec<f64> = (0..n).map(|_| r.gen_range(-1.0..1.0)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-3 && norm <= 1.0 {
                out.push(v.into_iter().map(|x| x / norm).collect());
            }
        }
        return out;
    }
    let offset: f64 = r.gen_range(0.0..std::f64::consts::TAU);
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / count as f64;
            let rho = (1.0 - z * z).max(0.0).sqrt();
            let phi = offset + golden * i as f64;
            vec![rho * phi.cos(), rho * phi.sin(), z]
        })
        .collect()
}

const NAMES: [&str; 3] = ["e1", "e2", "e3"];

/// `[e2,e3] = l1 e1`, `[e3,e1] = l2 e2`, `[e1,e2] = l3 e3`: every unimodular 3-algebra up to isomorphism.
pub fn milnor_algebra(l: [i64; 3]) -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        &NAMES,
        &[(1, 2, &[l[0], 0, 0]), (2, 0, &[0, l[1], 0]), (0, 1, &[0, 0, l[2]])],
    )
    .expect("Milnor brackets satisfy Jacobi")
}

/// `R ⋉ R²` with `ad(e3)` acting on `span{e1, e2}` by `d` (row-major).
pub fn semidirect_algebra(d: [i64; 4]) -> LieAlgebra {
    LieAlgebra::from_int_brackets(&NAMES, &[(2, 0, &[d[0], d[2], 0]), (2, 1, &[d[1], d[3], 0])])
        .expect("semidirect products satisfy Jacobi")
}

pub fn random_invertible<R: Rng>(r: &mut R, n: usize, bound: i64) -> QMatrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| int(r.gen_range(-bound..=bound))).collect()).collect();
        let p = QMatrix::from_rows(rows);
        if p.rank() == n {
            return p;
        }
    }
}

pub fn random_unimodular_algebra<R: Rng>(r: &mut R) -> LieAlgebra {
    let l = [r.gen_range(-2..=2), r.gen_range(-2..=2), r.gen_range(-2..=2)];
    let p = random_invertible(r, 3, 2);
    milnor_algebra(l).conjugate(&p).expect("invertible")
}

/// Unimodular (Milnor) or semidirect `R ⋉ R²` algebra, in a random basis.
pub fn random_algebra<R: Rng>(r: &mut R) -> LieAlgebra {
    if r.gen_bool(0.5) {
        return random_unimodular_algebra(r);
    }
    let d = [r.gen_range(-2..=2), r.gen_range(-2..=2), r.gen_range(-2..=2), r.gen_range(-2..=2)];
    let p = random_invertible(r, 3, 2);
    semidirect_algebra(d).conjugate(&p).expect("invertible")
}

/// Random integer Gram matrix with entries in `-bound..=bound` and signature (2,1).
pub fn random_lorentz_metric<R: Rng>(r: &mut R, bound: i64) -> InvariantMetric {
    loop {
        let mut entries = Vec::new();
        for i in 0..3 {
            for j in i..3 {
                entries.push((i, j, int(r.gen_range(-bound..=bound))));
            }
        }
        let m = InvariantMetric::from_entries(3, &entries);
        if m.is_lorentzian() {
            return m;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LorentzSample {
    pub algebra: LieAlgebra,
    pub metric: InvariantMetric,
}

pub fn random_sample<R: Rng>(r: &mut R) -> LorentzSample {
    let algebra = random_algebra(r);
    let metric = random_lorentz_metric(r, 3);
    LorentzSample { algebra, metric }
}
