use lorhom3_core::catalog::{self, catalog_get, HeisClass, SolClass};
use lorhom3_core::classify::{self, completeness_flag_of, CompletenessFlag, GeometryClass};
use lorhom3_core::geodesics::{self, GeodesicConfig, Outcome};
use lorhom3_core::isotropy;
use lorhom3_core::linalg::{self, QMatrix};
use lorhom3_core::metric;
use lorhom3_core::rational::{frac, int, Rational};
use lorhom3_core::sampling::{self, LorentzSample};
use lorhom3_core::{LieAlgebra, InvariantMetric};
use num_traits::Zero;
use proptest::prelude::*;

fn sample(seed: u64) -> LorentzSample {
    sampling::random_sample(&mut sampling::rng(seed))
}

fn basis_change(seed: u64) -> QMatrix {
    sampling::random_invertible(&mut sampling::rng(seed ^ 0xabcd), 3, 2)
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..20, 1i64..20).prop_map(|(p, q)| frac(p, q))
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` on basis triples.
fn jacobi_holds(a: &LieAlgebra) -> bool {
    let n = a.dim();
    let e = |k| linalg::unit(n, k);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let t1 = a.bracket(&e(i), &a.bracket(&e(j), &e(k)));
                let t2 = a.bracket(&e(j), &a.bracket(&e(k), &e(i)));
                let t3 = a.bracket(&e(k), &a.bracket(&e(i), &e(j)));
                if !linalg::is_zero_vec(&linalg::vec_add(&linalg::vec_add(&t1, &t2), &t3)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Automorphism of heis in the basis (X′, Z, T): `(Z, T) ↦ A(Z, T) + translations`, `X′ ↦ det A · X′`.
fn heis_automorphism(p: i64, q: i64, r: i64, s: i64, u: i64, v: i64) -> QMatrix {
    let det = p * s - q * r;
    QMatrix::from_i64(&[&[det, u, v], &[0, p, q], &[0, r, s]])
}

/// `exp(t ad Y) exp(s ad Z)` on sl(2,R); both are nilpotent so the series stop.
fn sl2_automorphism(t: &Rational, s: &Rational) -> QMatrix {
    let a = catalog::sl2();
    let exp = |n: &QMatrix, x: &Rational| {
        let n2 = n.mul(n);
        QMatrix::identity(3).add(&n.scale(x)).add(&n2.scale(&(x * x / int(2))))
    };
    exp(&a.ad_basis(1), t).mul(&exp(&a.ad_basis(2), s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_fuzz(entries in proptest::collection::vec(-2i64..=2, 9)) {
        let br = [(0usize, 1usize, &entries[0..3]), (0, 2, &entries[3..6]), (1, 2, &entries[6..9])];
        let a = LieAlgebra::from_int_brackets(&["a", "b", "c"], &br).unwrap();
        prop_assert_eq!(a.validate().is_ok(), jacobi_holds(&a));
    }

    #[test]
    fn connection_is_torsion_free_and_metric(seed in any::<u64>()) {
        let s = sample(seed);
        let gamma = metric::levi_civita(&s.algebra, &s.metric).unwrap();
        prop_assert!(gamma.torsion_residual(&s.algebra).is_zero());
        prop_assert!(gamma.compatibility_residual(&s.metric).is_zero());
    }

    #[test]
    fn curvature_symmetries(seed in any::<u64>()) {
        let s = sample(seed);
        let (_, curv) = metric::geometry(&s.algebra, &s.metric).unwrap();
        let e = |k| linalg::unit(3, k);
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    let b1 = curv.apply(&e(x), &e(y), &e(z));
                    let b2 = curv.apply(&e(y), &e(z), &e(x));
                    let b3 = curv.apply(&e(z), &e(x), &e(y));
                    prop_assert!(linalg::is_zero_vec(&linalg::vec_add(&linalg::vec_add(&b1, &b2), &b3)));
                    for w in 0..3 {
                        let lhs = s.metric.apply(&curv.apply(&e(x), &e(y), &e(z)), &e(w));
                        let rhs = s.metric.apply(&curv.apply(&e(x), &e(y), &e(w)), &e(z));
                        prop_assert_eq!(lhs, -rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn killing_form_congruence(seed in any::<u64>()) {
        let s = sample(seed);
        let p = basis_change(seed);
        let b = s.algebra.killing_form();
        prop_assert_eq!(s.algebra.conjugate(&p).unwrap().killing_form(), b.congruence(&p));
    }

    #[test]
    fn invariants_under_basis_change(seed in any::<u64>()) {
        let s = sample(seed);
        let p = basis_change(seed);
        let a2 = s.algebra.conjugate(&p).unwrap();
        let m2 = s.metric.congruent(&p);
        let r1 = classify::analyze_left_invariant(&s.algebra, &s.metric).unwrap();
        let r2 = classify::analyze_left_invariant(&a2, &m2).unwrap();
        prop_assert_eq!(&r1.curvature.scalar, &r2.curvature.scalar);
        prop_assert_eq!(&r1.curvature.ricci_squared, &r2.curvature.ricci_squared);
        prop_assert_eq!(&r1.curvature.constant_kappa, &r2.curvature.constant_kappa);
        prop_assert_eq!(r1.isotropy_dim, r2.isotropy_dim);
        prop_assert_eq!(r1.isotropy_type, r2.isotropy_type);
        prop_assert_eq!(r1.geometry_class, r2.geometry_class);
    }

    #[test]
    fn scaling(seed in any::<u64>(), lambda in positive_rational()) {
        let s = sample(seed);
        let scaled = s.metric.scaled(&lambda);
        let g1 = metric::levi_civita(&s.algebra, &s.metric).unwrap();
        let g2 = metric::levi_civita(&s.algebra, &scaled).unwrap();
        prop_assert_eq!(&g1, &g2);
        let r1 = classify::analyze_left_invariant(&s.algebra, &s.metric).unwrap();
        let r2 = classify::analyze_left_invariant(&s.algebra, &scaled).unwrap();
        prop_assert_eq!(r1.geometry_class, r2.geometry_class);
        prop_assert_eq!(r1.isotropy_dim, r2.isotropy_dim);
        prop_assert_eq!(r1.curvature.constant_kappa.map(|k| k / &lambda), r2.curvature.constant_kappa);
    }

    #[test]
    fn isotropy_dimension_and_flags(seed in any::<u64>()) {
        let s = sample(seed);
        let r = classify::analyze_left_invariant(&s.algebra, &s.metric).unwrap();
        prop_assert!(matches!(r.isotropy_dim, 0 | 1 | 3));
        prop_assert!(matches!(r.killing_dim, 3 | 4 | 6));
        prop_assert_eq!(r.completeness_flag, completeness_flag_of(r.geometry_class));
        prop_assert_eq!(
            r.completeness_flag == CompletenessFlag::IncompleteByTheorem,
            r.geometry_class == GeometryClass::LorentzSOL
        );
    }

    #[test]
    fn unimodular_sweep_never_gives_two(seed in any::<u64>()) {
        let mut r = sampling::rng(seed);
        let a = sampling::random_unimodular_algebra(&mut r);
        let m = sampling::random_lorentz_metric(&mut r, 3);
        let iso = isotropy::prolongation(&a, &m).unwrap();
        prop_assert_ne!(iso.dim, 2);
    }

    #[test]
    fn heis_class_is_automorphism_invariant(
        (p, q, r, s) in (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3).prop_filter("invertible", |(p, q, r, s)| p * s != q * r),
        u in -3i64..=3, v in -3i64..=3, seed in any::<u64>(),
    ) {
        let h = catalog::heis();
        let auto = heis_automorphism(p, q, r, s, u, v);
        prop_assert_eq!(h.conjugate(&auto).unwrap(), h.clone());
        let m = sampling::random_lorentz_metric(&mut sampling::rng(seed), 3);
        let c1 = catalog::normalize_heis(&h, &m).unwrap();
        let c2 = catalog::normalize_heis(&h, &m.congruent(&auto)).unwrap();
        prop_assert_eq!(c1.class, c2.class);
        if let (Some(w), Some(scale)) = (&c1.witness, &c1.scale) {
            prop_assert_eq!(h.conjugate(w).unwrap(), h.clone());
            prop_assert_eq!(m.congruent(w), catalog::lorentz_heisenberg_metric().scaled(scale));
        }
    }

    #[test]
    fn sol_normal_form_for_multiples(lambda in positive_rational()) {
        let n = catalog::normalize_sol(&catalog::sol(), &catalog::lorentz_sol_metric().scaled(&lambda)).unwrap();
        prop_assert_eq!(n.class, SolClass::LorentzSOL);
        prop_assert_eq!(n.scale, Some(lambda));
    }

    #[test]
    fn gl_criterion_invariance(lambda in positive_rational(), t in -3i64..=3, s in -3i64..=3, which in 0usize..4) {
        let sl2 = catalog::sl2();
        let m = match which {
            0 => catalog_get("anti_de_sitter_killing").unwrap().metric,
            1 => catalog_get("sl2_right_semisimple").unwrap().metric,
            2 => catalog_get("sl2_right_unipotent").unwrap().metric,
            _ => InvariantMetric::from_entries(3, &[(0, 0, int(2)), (1, 1, int(2)), (2, 2, int(2)), (1, 2, int(-10))]),
        };
        let auto = sl2_automorphism(&int(t), &int(s));
        prop_assert_eq!(sl2.conjugate(&auto).unwrap(), sl2.clone());
        let v0 = geodesics::gl_criterion(&sl2, &m).unwrap().verdict;
        prop_assert_eq!(geodesics::gl_criterion(&sl2, &m.scaled(&lambda)).unwrap().verdict, v0);
        prop_assert_eq!(geodesics::gl_criterion(&sl2, &m.congruent(&auto)).unwrap().verdict, v0);
    }
}

fn velocity() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-1.0f64..1.0, 3).prop_filter("nonzero", |v| v.iter().any(|x| x.abs() > 0.1))
}

fn entry_for(which: usize) -> (LieAlgebra, InvariantMetric) {
    let name = ["lorentz_heisenberg", "lorentz_sol", "heis_elliptic", "sl2_right_semisimple", "anti_de_sitter_killing"][which];
    let e = catalog_get(name).unwrap();
    (e.algebra, e.metric)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn energy_is_conserved(which in 0usize..5, v0 in velocity()) {
        let (a, m) = entry_for(which);
        let cfg = GeodesicConfig { t_max: 5.0, ..Default::default() };
        if let Ok(tr) = geodesics::integrate_geodesic(&a, &m, &v0, &cfg) {
            prop_assert!(tr.max_energy_drift <= 100.0 * cfg.rtol * (1.0 + tr.energy0.abs()), "{}", tr.max_energy_drift);
        }
    }

    #[test]
    fn time_reversal(which in 0usize..5, v0 in velocity()) {
        let (a, m) = entry_for(which);
        let cfg = GeodesicConfig { t_max: 0.5, ..Default::default() };
        let fwd = geodesics::integrate_geodesic(&a, &m, &v0, &cfg).unwrap();
        prop_assume!(fwd.outcome == Outcome::ReachedHorizon);
        let back: Vec<f64> = fwd.final_sample().v.iter().map(|x| -x).collect();
        let rev = geodesics::integrate_geodesic(&a, &m, &back, &cfg).unwrap();
        let end = &rev.final_sample().v;
        let scale = 1.0 + fwd.final_sample().v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        for i in 0..3 {
            prop_assert!((end[i] + v0[i]).abs() <= 10.0 * cfg.rtol * scale * 10.0, "{:?} vs {:?}", end, v0);
        }
    }

    #[test]
    fn scale_covariance(which in 0usize..5, v0 in velocity(), lambda in 0.5f64..2.0) {
        let (a, m) = entry_for(which);
        let t = 0.5;
        let base = GeodesicConfig { t_max: lambda * t, ..Default::default() };
        let tr = geodesics::integrate_geodesic(&a, &m, &v0, &base).unwrap();
        prop_assume!(tr.outcome == Outcome::ReachedHorizon);
        let scaled: Vec<f64> = v0.iter().map(|x| lambda * x).collect();
        let tr2 = geodesics::integrate_geodesic(&a, &m, &scaled, &GeodesicConfig { t_max: t, ..Default::default() }).unwrap();
        let (u, w) = (&tr.final_sample().v, &tr2.final_sample().v);
        for i in 0..3 {
            prop_assert!((lambda * u[i] - w[i]).abs() <= 1e-6 * (1.0 + w[i].abs()), "{:?} {:?}", u, w);
        }
    }

    #[test]
    fn sol_blowup_time(a0 in -1.0f64..1.0, b0 in -1.0f64..1.0, c0 in 0.2f64..4.0) {
        let e = catalog_get("lorentz_sol").unwrap();
        let cfg = GeodesicConfig { t_max: 2.0 / c0 + 1.0, ..Default::default() };
        let tr = geodesics::integrate_geodesic(&e.algebra, &e.metric, &[a0, b0, c0], &cfg).unwrap();
        match tr.outcome {
            Outcome::BlowupDetected { t_low, t_high } => {
                let t_star = 1.0 / c0;
                prop_assert!(t_low <= t_star * (1.0 + 1e-4) && t_high >= t_star * (1.0 - 1e-4));
                prop_assert!((t_high - t_star).abs() <= 1e-4 * t_star);
            }
            o => prop_assert!(false, "{:?}", o),
        }
    }
}

#[test]
fn heis_normal_form_examples() {
    let h = catalog::heis();
    let m = catalog::lorentz_heisenberg_metric().scaled(&int(3));
    let n = catalog::normalize_heis(&h, &m).unwrap();
    assert_eq!(n.class, HeisClass::LorentzHeisenberg);
    assert_eq!(n.center_norm, int(3));
}
