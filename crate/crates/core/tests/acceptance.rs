//! Acceptance suite: one test per promised behaviour of the toolkit, each
//! printing a single PASS/FAIL line (run with `-- --nocapture` to see them).
//! Every tolerance and seed is pinned here so runs are reproducible.

mod common;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use depthmod_core::{
    bst_external_sigma, bst_sigma, cgwt_sigma, complex_gamma, derive_seed,
    enumerate_exact_mod_counts, fit_variance_exponent, oscillation_check, rrt_sigma,
    run_replicates, simulate_bst_urn, simulate_rrt_urn, stream_rng, variance_growth_grid,
    z_moments, CirculantCovariance, OffspringDistribution, ScaleNote, Scaling, TreeModel,
    UrnModel, OSCILLATION_TOL,
};
use num_complex::Complex64;
use rand::Rng;

/// Monte Carlo comparisons must land within this many jackknife errors.
const SE_FACTOR: f64 = 3.0;
/// Secondary absolute cap for the small-regime tables, as a fraction of the
/// largest exact entry.
const SMALL_SIM_REL_CAP: f64 = 0.10;
/// Critical window: allowed spread of Var/(n log n) across the size grid,
/// relative to its mean.
const CRITICAL_DRIFT_MAX: f64 = 0.20;
/// Critical window: allowed relative distance of the largest-n point from
/// the exact limit 1/18.
const CRITICAL_LEVEL_RTOL: f64 = 0.30;
/// Allowed absolute error of fitted variance-growth exponents.
const EXPONENT_TOL: f64 = 0.08;
/// Relative tolerance for moment recursion vs closed forms.
const MOMENT_RTOL: f64 = 1e-10;
/// Relative tolerance for the gamma recurrence sweep.
const GAMMA_RTOL: f64 = 1e-10;
/// Smallest acceptable goodness-of-fit p-value.
const GOF_MIN_P: f64 = 1e-3;

fn report(num: u32, label: &str, ok: bool) {
    println!(
        "acceptance {num:02} {label}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn row_strings_match(table: &CirculantCovariance, want: &[&str]) -> bool {
    let got = table.rational_row_strings();
    got.len() == want.len() && got.iter().zip(want).all(|(g, w)| g == w)
}

#[test]
fn a01_exact_covariance_tables() {
    let mut failures: Vec<String> = Vec::new();
    let mut check = |label: &str, table: CirculantCovariance, want: &[&str]| {
        if !row_strings_match(&table, want) {
            failures.push(format!(
                "{label}: got {:?}, want {want:?}",
                table.rational_row_strings()
            ));
        }
    };

    check("rrt m=2", rrt_sigma(2).unwrap(), &["1/12", "-1/12"]);
    check("rrt m=3", rrt_sigma(3).unwrap(), &["2/18", "-1/18", "-1/18"]);
    check("rrt m=4", rrt_sigma(4).unwrap(), &["7/48", "-1/48", "-5/48", "-1/48"]);
    check(
        "rrt m=5",
        rrt_sigma(5).unwrap(),
        &["6/25", "1/25", "-4/25", "-4/25", "1/25"],
    );
    check(
        "rrt m=6",
        rrt_sigma(6).unwrap(),
        &["2/36", "1/36", "-1/36", "-2/36", "-1/36", "1/36"],
    );

    check("bst m=2", bst_sigma(2).unwrap(), &["1/28", "-1/28"]);
    check("bst m=3", bst_sigma(3).unwrap(), &["2/45", "-1/45", "-1/45"]);
    check(
        "bst m=4",
        bst_sigma(4).unwrap(),
        &["17/336", "-3/336", "-11/336", "-3/336"],
    );
    check(
        "bst m=5",
        bst_sigma(5).unwrap(),
        &["16/275", "1/275", "-9/275", "-9/275", "1/275"],
    );
    check(
        "bst m=6",
        bst_sigma(6).unwrap(),
        &["89/1260", "23/1260", "-37/1260", "-61/1260", "-37/1260", "23/1260"],
    );
    check(
        "bst m=7",
        bst_sigma(7).unwrap(),
        &["62/637", "27/637", "-15/637", "-43/637", "-43/637", "-15/637", "27/637"],
    );
    check(
        "bst m=8",
        bst_sigma(8).unwrap(),
        &[
            "269/1344", "165/1344", "-11/1344", "-171/1344", "-235/1344", "-171/1344",
            "-11/1344", "165/1344",
        ],
    );

    check("bst external m=2", bst_external_sigma(2).unwrap(), &["9/28", "-9/28"]);
    check(
        "bst external m=3",
        bst_external_sigma(3).unwrap(),
        &["14/45", "-7/45", "-7/45"],
    );
    check(
        "bst external m=4",
        bst_external_sigma(4).unwrap(),
        &["97/336", "-27/336", "-43/336", "-27/336"],
    );
    check(
        "bst external m=5",
        bst_external_sigma(5).unwrap(),
        &["76/275", "-9/275", "-29/275", "-29/275", "-9/275"],
    );
    check(
        "bst external m=6",
        bst_external_sigma(6).unwrap(),
        &["353/1260", "11/1260", "-109/1260", "-157/1260", "-109/1260", "11/1260"],
    );
    check(
        "bst external m=7",
        bst_external_sigma(7).unwrap(),
        &["202/637", "41/637", "-43/637", "-99/637", "-99/637", "-43/637", "41/637"],
    );
    check(
        "bst external m=8",
        bst_external_sigma(8).unwrap(),
        &[
            "685/1344", "309/1344", "-43/1344", "-363/1344", "-491/1344", "-363/1344",
            "-43/1344", "309/1344",
        ],
    );

    check("cgwt m=2", cgwt_sigma(2, 1.0).unwrap(), &["1/16", "-1/16"]);
    check("cgwt m=3", cgwt_sigma(3, 1.0).unwrap(), &["2/27", "-1/27", "-1/27"]);
    check(
        "cgwt m=4",
        cgwt_sigma(4, 1.0).unwrap(),
        &["5/64", "-1/64", "-3/64", "-1/64"],
    );
    check(
        "cgwt m=5",
        cgwt_sigma(5, 1.0).unwrap(),
        &["2/25", "0/25", "-1/25", "-1/25", "0/25"],
    );
    check(
        "cgwt m=6",
        cgwt_sigma(6, 1.0).unwrap(),
        &["35/432", "5/432", "-13/432", "-19/432", "-13/432", "5/432"],
    );

    // normalization bookkeeping: only the critical table is per n log n
    if rrt_sigma(6).unwrap().scale != ScaleNote::PerNLogN {
        failures.push("rrt m=6 must carry the n log n scale".into());
    }
    for m in 2..=5 {
        if rrt_sigma(m).unwrap().scale != ScaleNote::PerN {
            failures.push(format!("rrt m={m} must carry the per-n scale"));
        }
    }

    let ok = failures.is_empty();
    report(1, "exact-covariance-tables", ok);
    assert!(ok, "{}", failures.join("\n"));
}

/// Compare every covariance entry of a finished run against an exact table:
/// within SE_FACTOR jackknife errors and within SMALL_SIM_REL_CAP of the
/// largest exact entry. Returns failure descriptions.
fn compare_covariance(
    label: &str,
    sim_cov: &[Vec<f64>],
    sim_se: &[Vec<f64>],
    exact: &[Vec<f64>],
) -> Vec<String> {
    let m = exact.len();
    let largest = exact
        .iter()
        .flatten()
        .fold(0.0f64, |acc, &v| acc.max(v.abs()));
    let cap = SMALL_SIM_REL_CAP * largest;
    let mut failures = Vec::new();
    for p in 0..m {
        for q in 0..m {
            let diff = (sim_cov[p][q] - exact[p][q]).abs();
            let se = sim_se[p][q];
            if diff > SE_FACTOR * se {
                failures.push(format!(
                    "{label} entry ({p},{q}): |{:.6} - {:.6}| = {diff:.2e} > {SE_FACTOR} * {se:.2e}",
                    sim_cov[p][q], exact[p][q]
                ));
            }
            if diff > cap {
                failures.push(format!(
                    "{label} entry ({p},{q}): {diff:.2e} above the absolute cap {cap:.2e}"
                ));
            }
        }
    }
    failures
}

#[test]
fn a02_rrt_small_regime_covariance() {
    let mut failures = Vec::new();
    for m in 2..=5usize {
        let s = run_replicates(
            &TreeModel::Rrt,
            m,
            100_000,
            2000,
            derive_seed(2002, m as u64),
            Scaling::SqrtN,
        )
        .unwrap();
        let exact = rrt_sigma(m).unwrap().to_float_matrix();
        failures.extend(compare_covariance(
            &format!("rrt m={m}"),
            &s.sample_cov,
            &s.standard_errors,
            &exact,
        ));
    }
    let ok = failures.is_empty();
    report(2, "rrt-small-regime-covariance", ok);
    assert!(ok, "{}", failures.join("\n"));
}

#[test]
fn a03_rrt_critical_window() {
    let mut failures = Vec::new();
    let configs = [(10_000u64, 2000usize), (100_000, 2000), (1_000_000, 500)];
    let mut per_nlogn = Vec::new();
    for (i, &(n, reps)) in configs.iter().enumerate() {
        let s = run_replicates(
            &TreeModel::Rrt,
            6,
            n,
            reps,
            derive_seed(2003, i as u64),
            Scaling::SqrtNLogN,
        )
        .unwrap();
        per_nlogn.push(s.sample_cov[0][0]);
    }

    let mean = per_nlogn.iter().sum::<f64>() / per_nlogn.len() as f64;
    let spread = per_nlogn.iter().cloned().fold(f64::MIN, f64::max)
        - per_nlogn.iter().cloned().fold(f64::MAX, f64::min);
    if spread > CRITICAL_DRIFT_MAX * mean {
        failures.push(format!(
            "Var(X_0)/(n log n) drifts: {per_nlogn:?}, spread {spread:.4} vs mean {mean:.4}"
        ));
    }

    let limit = 1.0 / 18.0;
    let last = per_nlogn[2];
    if (last - limit).abs() > CRITICAL_LEVEL_RTOL * limit {
        failures.push(format!(
            "n = 10^6 point {last:.5} not within {CRITICAL_LEVEL_RTOL:.0e} of {limit:.5}"
        ));
    }

    // Var/n itself must keep growing: that is what singles this case out
    let per_n: Vec<f64> = configs
        .iter()
        .zip(&per_nlogn)
        .map(|(&(n, _), v)| v * (n as f64).ln())
        .collect();
    if !(per_n[0] < per_n[1] && per_n[1] < per_n[2]) {
        failures.push(format!("Var(X_0)/n not increasing: {per_n:?}"));
    }

    let ok = failures.is_empty();
    report(3, "rrt-critical-window", ok);
    assert!(ok, "{}", failures.join("\n"));
}

const EXPONENT_GRID: [u64; 6] = [1 << 10, 1 << 12, 1 << 14, 1 << 16, 1 << 18, 1 << 20];

#[test]
fn a04_rrt_large_regime_exponent() {
    let grid = variance_growth_grid(&TreeModel::Rrt, 7, &EXPONENT_GRID, 800, 2004).unwrap();
    let fit = fit_variance_exponent(&grid).unwrap();
    let target = 2.0 * (2.0 * PI / 7.0).cos();
    let ok = (fit.gamma_hat - target).abs() <= EXPONENT_TOL;
    report(4, "rrt-large-regime-exponent", ok);
    assert!(
        ok,
        "fitted exponent {:.4} vs {target:.4} (tolerance {EXPONENT_TOL}), r^2 = {:.4}",
        fit.gamma_hat, fit.r_squared
    );
}

#[test]
fn a05_bst_small_regime_covariance() {
    let mut failures = Vec::new();
    for m in [2usize, 3, 8] {
        let n = 100_000u64;
        let s = run_replicates(
            &TreeModel::Bst,
            m,
            n,
            2000,
            derive_seed(2005, m as u64),
            Scaling::SqrtN,
        )
        .unwrap();
        let exact = bst_sigma(m).unwrap().to_float_matrix();
        let bad = compare_covariance(
            &format!("bst m={m}"),
            &s.sample_cov,
            &s.standard_errors,
            &exact,
        );
        let add_note = !bad.is_empty() && m == 8;
        failures.extend(bad);
        if add_note {
            // m = 8 sits at the edge of the Gaussian regime: the dominant
            // nontrivial urn eigenvalue is 2cos(pi/4) - 1 = 0.414, so the
            // finite-n variance approaches its limit only like n^-0.17.
            // Compare against the exact finite-n law to show the distance
            // to the limit row is truth about this n, not sampling error.
            let finite = common::exact_bst_finite_n_row(m, n);
            let z = (s.sample_cov[0][0] - finite[0]) / s.standard_errors[0][0];
            failures.push(format!(
                "note: exact finite-n value of entry (0,0) at n = {n} is {:.5} \
                 ({:.1}% below the limit {:.5}); the simulated {:.5} is {z:+.2} SE \
                 from that exact value, so the gap above is finite-size bias, \
                 not an estimation defect",
                finite[0],
                100.0 * (1.0 - finite[0] / exact[0][0]),
                exact[0][0],
                s.sample_cov[0][0],
            ));
        }
    }
    let ok = failures.is_empty();
    report(5, "bst-small-regime-covariance", ok);
    assert!(ok, "{}", failures.join("\n"));
}

#[test]
fn a06_bst_large_regime_exponent() {
    let grid = variance_growth_grid(&TreeModel::Bst, 12, &EXPONENT_GRID, 500, 2006).unwrap();
    let fit = fit_variance_exponent(&grid).unwrap();
    let target = 2.0 * (2.0 * (2.0 * PI / 12.0).cos() - 1.0);
    let ok = (fit.gamma_hat - target).abs() <= EXPONENT_TOL;
    report(6, "bst-large-regime-exponent", ok);
    assert!(
        ok,
        "fitted exponent {:.4} vs {target:.4} (tolerance {EXPONENT_TOL}), r^2 = {:.4}",
        fit.gamma_hat, fit.r_squared
    );
}

#[test]
fn a07_cgwt_gaussian_covariance() {
    let mut failures = Vec::new();
    // unit offspring variance in both cases, so the tables apply as printed
    let cases = [
        (OffspringDistribution::poisson1(), 10_000u64),
        (OffspringDistribution::two_point_zero_two(), 10_001),
    ];
    for (off, n) in cases {
        for m in [2usize, 3] {
            let model = TreeModel::Cgwt(off.clone());
            let s = run_replicates(
                &model,
                m,
                n,
                5000,
                derive_seed(2007, (n + m as u64) as u64),
                Scaling::SqrtN,
            )
            .unwrap();
            let exact = cgwt_sigma(m, off.variance()).unwrap().to_float_matrix();
            failures.extend(compare_covariance(
                &format!("{} m={m} n={n}", model.name()),
                &s.sample_cov,
                &s.standard_errors,
                &exact,
            ));
        }
    }
    let ok = failures.is_empty();
    report(7, "cgwt-gaussian-covariance", ok);
    assert!(ok, "{}", failures.join("\n"));
}

#[test]
fn a08_moment_recursion_closed_forms() {
    let mut failures = Vec::new();
    let g = |z: Complex64| complex_gamma(z).unwrap();
    let gr = |x: f64| complex_gamma(Complex64::new(x, 0.0)).unwrap();
    let rel = |got: Complex64, want: Complex64| (got - want).norm() / want.norm().max(1.0);

    // degree <= 3 solved by hand from the split at the root
    {
        let m = 7usize;
        let mf = m as f64;
        let t = z_moments(UrnModel::Rrt, m, 3).unwrap();
        let w = Complex64::from_polar(1.0, 2.0 * PI / mf);
        let a = w.re;
        let checks = [
            ("rrt ez-hat", t.hat_entry(1, 0), 2.0 / (mf * g(1.0 + w))),
            ("rrt ez2", t.entry(2, 0), 2.0 / (2.0 - w)),
            (
                "rrt ez2-hat",
                t.hat_entry(2, 0),
                8.0 / (mf * mf * (2.0 - w) * g(1.0 + 2.0 * w)),
            ),
            (
                "rrt eabs2",
                t.entry(1, 1),
                Complex64::new(2.0 * a / (2.0 * a - 1.0), 0.0),
            ),
            (
                "rrt eabs2-hat",
                t.hat_entry(1, 1),
                8.0 * a / (mf * mf * (2.0 * a - 1.0) * gr(1.0 + 2.0 * a)),
            ),
            (
                "rrt ez3",
                t.entry(3, 0),
                6.0 * (1.0 + w) / ((3.0 - w * w) * (2.0 - w)),
            ),
            (
                "rrt ez3-hat",
                t.hat_entry(3, 0),
                48.0 * (1.0 + w) / (mf * mf * mf * (3.0 - w * w) * (2.0 - w) * g(1.0 + 3.0 * w)),
            ),
        ];
        for (label, got, want) in checks {
            let e = rel(got, want);
            if e > MOMENT_RTOL {
                failures.push(format!("{label}: rel err {e:.2e} ({got} vs {want})"));
            }
        }
    }
    {
        let m = 9usize;
        let mf = m as f64;
        let t = z_moments(UrnModel::Bst, m, 3).unwrap();
        let w = Complex64::from_polar(1.0, 2.0 * PI / mf);
        let a = w.re;
        let lam = 2.0 * w - 1.0;
        let ez2 = 2.0 * w * w / (4.0 * w - 1.0 - 2.0 * w * w);
        let ez3 = 6.0 * w.powu(5) / ((3.0 * w - 1.0 - w.powu(3)) * (4.0 * w - 1.0 - 2.0 * w * w));
        let checks = [
            ("bst ez-hat", t.hat_entry(1, 0), 2.0 / (mf * lam * g(2.0 * w))),
            ("bst ez2", t.entry(2, 0), ez2),
            (
                "bst ez2-hat",
                t.hat_entry(2, 0),
                4.0 * ez2 / (mf * mf * lam * lam * g(4.0 * w - 1.0)),
            ),
            (
                "bst eabs2",
                t.entry(1, 1),
                Complex64::new(2.0 / (4.0 * a - 3.0), 0.0),
            ),
            (
                "bst eabs2-hat",
                t.hat_entry(1, 1),
                (2.0 / (4.0 * a - 3.0)) * 4.0
                    / (mf * mf * (5.0 - 4.0 * a) * gr(4.0 * a - 1.0)),
            ),
            ("bst ez3", t.entry(3, 0), ez3),
            (
                "bst ez3-hat",
                t.hat_entry(3, 0),
                8.0 * ez3 / (mf * mf * mf * lam.powu(3) * g(6.0 * w - 2.0)),
            ),
        ];
        for (label, got, want) in checks {
            let e = rel(got, want);
            if e > MOMENT_RTOL {
                failures.push(format!("{label}: rel err {e:.2e} ({got} vs {want})"));
            }
        }
    }

    // gamma recurrence over a 100-point grid straddling the reflection branch
    let mut points = 0;
    for i in 0..10 {
        for j in 0..10 {
            let z = Complex64::new(-0.95 + 0.85 * i as f64, -7.7 + 1.7 * j as f64);
            let lhs = complex_gamma(z + 1.0).unwrap();
            let rhs = z * complex_gamma(z).unwrap();
            let e = (lhs - rhs).norm() / lhs.norm().max(1e-300);
            if e > GAMMA_RTOL {
                failures.push(format!("gamma recurrence at {z}: rel err {e:.2e}"));
            }
            points += 1;
        }
    }
    assert_eq!(points, 100);

    let ok = failures.is_empty();
    report(8, "moment-recursion-closed-forms", ok);
    assert!(ok, "{}", failures.join("\n"));
}

#[test]
fn a09_oscillation_sweep() {
    let mut failures = Vec::new();
    for m in 7..=100usize {
        let r = oscillation_check(UrnModel::Rrt, m, OSCILLATION_TOL).unwrap();
        if !r.oscillates {
            failures.push(format!("rrt m={m}: c2 {}, c11 {}, c3 {}", r.c2, r.c11, r.c3));
        }
    }
    for m in 9..=100usize {
        let r = oscillation_check(UrnModel::Bst, m, OSCILLATION_TOL).unwrap();
        if !r.oscillates {
            failures.push(format!("bst m={m}: c2 {}, c11 {}, c3 {}", r.c2, r.c11, r.c3));
        }
    }
    let ok = failures.is_empty();
    report(9, "oscillation-sweep", ok);
    assert!(ok, "{}", failures.join("\n"));
}

#[test]
fn a10_urn_vs_enumeration_gof() {
    const SAMPLES: u64 = 1_000_000;
    let n = 8u64;
    let mut failures = Vec::new();
    for model in [UrnModel::Rrt, UrnModel::Bst] {
        for m in [2usize, 3] {
            let tree = match model {
                UrnModel::Rrt => TreeModel::Rrt,
                UrnModel::Bst => TreeModel::Bst,
            };
            let exact = enumerate_exact_mod_counts(&tree, n, m).unwrap();
            let base = derive_seed(2010, (m * 100) as u64 + model as u64);
            let mut hist: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
            for i in 0..SAMPLES {
                let counts = match model {
                    UrnModel::Rrt => simulate_rrt_urn(m, n, derive_seed(base, i)).unwrap(),
                    UrnModel::Bst => simulate_bst_urn(m, n, derive_seed(base, i)).unwrap(),
                };
                *hist.entry(counts.counts).or_insert(0) += 1;
            }
            let p = common::chi_square_gof_p(&exact, &hist, SAMPLES);
            if p <= GOF_MIN_P {
                failures.push(format!(
                    "{} m={m}: p = {p:.2e} over {} outcomes",
                    model.name(),
                    exact.len()
                ));
            }
        }
    }
    let ok = failures.is_empty();
    report(10, "urn-vs-enumeration-gof", ok);
    assert!(ok, "{}", failures.join("\n"));
}

#[test]
fn a11_fixed_point_population() {
    // Iterate the distributional identity Z = U^w (Z' + w Z'') for the
    // dominant RRT mode at m = 7, with U uniform and Z', Z'' independent
    // copies. Twenty independent populations give honest spread estimates
    // for the three lowest moments against their exact fixed-point values.
    const POPULATIONS: usize = 20;
    const PARTICLES: usize = 5000;
    const ITERATIONS: usize = 60;

    let m = 7.0f64;
    let w = Complex64::from_polar(1.0, 2.0 * PI / m);
    let a = w.re;

    let mut ez = Vec::with_capacity(POPULATIONS);
    let mut ez2 = Vec::with_capacity(POPULATIONS);
    let mut eabs2 = Vec::with_capacity(POPULATIONS);
    for pop in 0..POPULATIONS {
        let mut rng = stream_rng(2011, pop as u64);
        let mut z = vec![Complex64::new(1.0, 0.0); PARTICLES];
        let mut next = z.clone();
        for _ in 0..ITERATIONS {
            for slot in next.iter_mut() {
                let za = z[rng.gen_range(0..PARTICLES)];
                let zb = z[rng.gen_range(0..PARTICLES)];
                let u: f64 = 1.0 - rng.gen::<f64>(); // in (0, 1]
                let u_pow_w = (w * u.ln()).exp();
                *slot = u_pow_w * (za + w * zb);
            }
            std::mem::swap(&mut z, &mut next);
        }
        let k = PARTICLES as f64;
        ez.push(z.iter().copied().sum::<Complex64>() / k);
        ez2.push(z.iter().map(|v| v * v).sum::<Complex64>() / k);
        eabs2.push(z.iter().map(|v| v.norm_sqr()).sum::<f64>() / k);
    }

    let agg = |vals: &[f64]| {
        let k = vals.len() as f64;
        let mean = vals.iter().sum::<f64>() / k;
        let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (k - 1.0);
        (mean, (var / k).sqrt())
    };

    let mut failures = Vec::new();
    let mut check = |label: &str, vals: Vec<f64>, target: f64| {
        let (mean, se) = agg(&vals);
        if (mean - target).abs() > SE_FACTOR * se {
            failures.push(format!(
                "{label}: {mean:.5} vs {target:.5} (se {se:.2e})"
            ));
        }
    };

    let ez2_target = 2.0 / (2.0 - w);
    let eabs2_target = 2.0 * a / (2.0 * a - 1.0);
    check("Re E Z", ez.iter().map(|v| v.re).collect(), 1.0);
    check("Im E Z", ez.iter().map(|v| v.im).collect(), 0.0);
    check("Re E Z^2", ez2.iter().map(|v| v.re).collect(), ez2_target.re);
    check("Im E Z^2", ez2.iter().map(|v| v.im).collect(), ez2_target.im);
    check("E |Z|^2", eabs2, eabs2_target);

    let ok = failures.is_empty();
    report(11, "fixed-point-population", ok);
    assert!(ok, "{}", failures.join("\n"));
}
