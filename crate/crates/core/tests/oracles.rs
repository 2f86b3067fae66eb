//! Independent recomputations of derived values.

use lorhom3_core::catalog::{self, catalog_get};
use lorhom3_core::linalg::{self, QMatrix, QVector};
use lorhom3_core::metric::{self, InvariantMetric};
use lorhom3_core::rational::{frac, int};
use lorhom3_core::sampling;
use lorhom3_core::LieAlgebra;

/// `∇_{e_i} e_j` straight from the Koszul formula
/// `2g(∇_x y, z) = g([x,y],z) − g([y,z],x) + g([z,x],y)`, solved with `g⁻¹`.
fn koszul(a: &LieAlgebra, m: &InvariantMetric, i: usize, j: usize) -> QVector {
    let n = a.dim();
    let e = |k| linalg::unit(n, k);
    let rhs: QVector = (0..n)
        .map(|k| {
            let t1 = m.apply(&a.bracket(&e(i), &e(j)), &e(k));
            let t2 = m.apply(&a.bracket(&e(j), &e(k)), &e(i));
            let t3 = m.apply(&a.bracket(&e(k), &e(i)), &e(j));
            (t1 - t2 + t3) / int(2)
        })
        .collect();
    m.gram().solve(&rhs).unwrap()
}

#[test]
fn levi_civita_matches_koszul_on_samples() {
    let mut r = sampling::rng(11);
    for _ in 0..40 {
        let s = sampling::random_sample(&mut r);
        let gamma = metric::levi_civita(&s.algebra, &s.metric).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(gamma.basis(i, j), koszul(&s.algebra, &s.metric, i, j));
            }
        }
    }
}

#[test]
fn bi_invariant_curvature_formula() {
    // For a bi-invariant metric R(x,y)z = −¼[[x,y],z].
    let e = catalog_get("anti_de_sitter_killing").unwrap();
    let (_, curv) = metric::geometry(&e.algebra, &e.metric).unwrap();
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                let u = |k| linalg::unit(3, k);
                let expected = linalg::vec_scale(&e.algebra.bracket(&e.algebra.bracket(&u(x), &u(y)), &u(z)), &frac(-1, 4));
                assert_eq!(curv.riemann.value(&[x, y, z]), expected);
            }
        }
    }
    // Sectional curvature of span{X′, Y − Z}: both vectors have Killing norm 2 and 8.
    let x = linalg::unit(3, 0);
    let y = vec![int(0), int(1), int(-1)];
    let k = metric::sectional_curvature(&e.metric, &curv, &x, &y).unwrap();
    assert_eq!(k, frac(-1, 8));
}

#[test]
fn killing_form_by_traces() {
    let a = catalog::sl2();
    let b = a.killing_form();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(b[(i, j)], a.ad_basis(i).mul(&a.ad_basis(j)).trace());
        }
    }
    assert_eq!(b, QMatrix::from_i64(&[&[2, 0, 0], &[0, 0, -4], &[0, -4, 0]]));
}

#[test]
fn flat_sol_entry_is_found_by_enumeration() {
    let found = catalog::search_flat_metrics(&catalog::sol(), 1, usize::MAX);
    let entry = catalog_get("flat_sol").unwrap();
    assert!(found.contains(&entry.metric));
    for m in &found {
        let (_, curv) = metric::geometry(&catalog::sol(), m).unwrap();
        assert!(curv.is_flat());
    }
}
