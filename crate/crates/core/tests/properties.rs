use std::f64::consts::PI;
use std::sync::OnceLock;

use logsine_core::contour::{
    imaginary_part_residual, leg_h, leg_h_imag_coefficient, leg_l, leg_r_term,
    verify_imag_identity_exact, verify_reduction_chain,
};
use logsine_core::fourier::{logsin_series_partial, parseval_logsquared, sawtooth_series_partial};
use logsine_core::quadrature::{integrate_logsine, QuadratureSettings};
use logsine_core::{
    bernoulli_table, logsine_numeric, logsine_symbolic, logsine_via_fourier,
    verify_binomial_identity, verify_recurrence, zeta_numeric, zeta_series_partial, BernoulliTable,
    ExactRational,
};
use proptest::prelude::*;

fn table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_table(210))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn recurrence_holds(n in 2usize..=200) {
        prop_assert!(verify_recurrence(n, table()).unwrap());
    }

    #[test]
    fn binomial_identity_holds(n in 1u64..=150, frac in 0.0f64..=1.0) {
        let k = ((n / 2) as f64 * frac).floor() as u64;
        prop_assert!(verify_binomial_identity(n, k).unwrap());
    }

    #[test]
    fn rational_field_laws(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let x = ExactRational::new(a, b);
        let y = ExactRational::new(c, d);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) - &(&y * &x), ExactRational::zero());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        let shown: ExactRational = x.to_string().parse().unwrap();
        prop_assert_eq!(shown, x);
    }

    #[test]
    fn partial_sums_stay_below_zeta(s in 2u32..=12, terms in 1u64..5000) {
        let z = zeta_numeric(s, 1e-13).unwrap();
        // the float partial sum has its own rounding of a few ulps
        let partial = zeta_series_partial(s as f64, terms).unwrap();
        prop_assert!(partial <= z.upper() + 4.0 * f64::EPSILON);
    }

    #[test]
    fn tighter_requests_stay_inside_looser_ones(s in 2u32..=12, exp in 6i32..=13) {
        let loose = zeta_numeric(s, 10f64.powi(-exp)).unwrap();
        let tight = zeta_numeric(s, 10f64.powi(-exp) / 2.0).unwrap();
        prop_assert!(tight.abs_error <= 10f64.powi(-exp) / 2.0);
        prop_assert!(loose.agrees_with(&tight));
    }

    #[test]
    fn parseval_strictly_increasing(terms in 1u64..20_000) {
        let a = parseval_logsquared(terms).unwrap();
        let b = parseval_logsquared(terms + 1).unwrap();
        prop_assert!(a < b);
        prop_assert!(b <= PI.powi(3) / 24.0 + 4.0 * f64::EPSILON);
    }

    #[test]
    fn sawtooth_is_odd_about_pi(theta in 0.01f64..3.1, terms in 1u64..500) {
        let a = sawtooth_series_partial(PI - theta, terms).unwrap();
        let b = sawtooth_series_partial(PI + theta, terms).unwrap();
        prop_assert!((a + b).abs() < 1e-12);
    }
}

#[test]
fn odd_bernoulli_numbers_vanish() {
    for l in 1..=100 {
        assert!(table()[2 * l + 1].is_zero(), "B_{}", 2 * l + 1);
    }
}

#[test]
fn imaginary_identity_and_chain_sweep() {
    for n in 1..=100u32 {
        assert!(
            verify_imag_identity_exact(n, table()).unwrap(),
            "identity n = {n}"
        );
        assert!(
            imaginary_part_residual(n, table()).unwrap().is_zero(),
            "residual n = {n}"
        );
        let chain = verify_reduction_chain(n, table()).unwrap();
        assert!(chain.holds(), "chain n = {n}: {:?}", chain.first_broken());
        assert_eq!(
            chain.steps[3],
            verify_recurrence(n as usize + 2, table()).unwrap()
        );
    }
}

#[test]
fn left_leg_absorbed_by_top_right_term() {
    for n in 0..=10u32 {
        let l = leg_l(n, 1e-12).unwrap();
        let top = leg_r_term(n, n, 1e-12).unwrap();
        let tol_re = l.re.abs_error + top.re.abs_error;
        let tol_im = l.im.abs_error + top.im.abs_error;
        assert!((l.re.value + top.re.value).abs() <= tol_re, "n = {n}");
        assert!((l.im.value + top.im.value).abs() <= tol_im, "n = {n}");
    }
}

#[test]
fn bottom_leg_imaginary_part() {
    let settings = QuadratureSettings::default();
    for n in 0..=10u32 {
        let n_ = n as i64;
        assert_eq!(
            leg_h_imag_coefficient(n),
            ExactRational::new(n_, 2 * (n_ + 1) * (n_ + 2))
        );
        let h = leg_h(n, &settings).unwrap();
        let want = PI.powi(n as i32 + 2) * n as f64 / (2.0 * (n as f64 + 1.0) * (n as f64 + 2.0));
        assert!(
            (h.im.value - want).abs() <= 1e-13 * want.max(1.0),
            "n = {n}"
        );
    }
}

#[test]
fn routes_and_oracle_agree() {
    let settings = QuadratureSettings::default();
    for n in 0..=12u32 {
        assert_eq!(logsine_via_fourier(n), logsine_symbolic(n));
        let closed = logsine_numeric(n, 1e-10).unwrap();
        let oracle = integrate_logsine(n, &settings).unwrap();
        assert!(
            closed.agrees_with(&oracle),
            "n = {n}: {closed:?} vs {oracle:?}"
        );
    }
}

#[test]
fn log_sin_series_converges_pointwise() {
    let terms = 100_000u64;
    for theta in [PI / 6.0, PI / 4.0, PI / 2.0, PI, 1.5 * PI] {
        let partial = logsin_series_partial(theta, terms).unwrap();
        let limit = (2.0 * (theta / 2.0).sin().abs()).ln();
        assert!(
            (partial - limit).abs() <= 10.0 / terms as f64,
            "theta = {theta}"
        );
    }
}
