//! Monte Carlo harness: replicated tree simulations, scaled depth-count
//! statistics, exact delete-one jackknife errors, and log-log growth fits.
//!
//! Determinism contract: replicate r always draws from an RNG stream keyed
//! by (seed, r), and reductions run in replicate order, so results are
//! identical regardless of how rayon schedules the work.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rng::{derive_seed, stream_rng};
use crate::treegen::{cgwt_depths_with, reduce_depths, DepthSequence, TreeModel};
use crate::urn::{bst_urn_with, classify_regime, rrt_urn_with, ModDepthCounts, Regime, UrnModel};

/// Smallest n a point must have to enter a growth-exponent fit.
pub const FIT_MIN_N: u64 = 1000;
/// Fewest points a growth-exponent fit accepts.
pub const FIT_MIN_POINTS: usize = 4;
/// Narrowest n-range (in decades) a growth-exponent fit accepts.
pub const FIT_MIN_DECADES: f64 = 2.0;

/// Normalization applied to the centered counts X_j - n/m.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Scaling {
    /// sqrt(n): the diffusive regimes.
    SqrtN,
    /// sqrt(n log n): the single critical case (RRT, m = 6); needs n >= 2.
    SqrtNLogN,
    /// n^alpha: the superdiffusive regimes, alpha the dominant exponent.
    NAlpha(f64),
}

impl Scaling {
    pub fn norm(self, n: u64) -> f64 {
        let x = n as f64;
        match self {
            Scaling::SqrtN => x.sqrt(),
            Scaling::SqrtNLogN => (x * x.ln()).sqrt(),
            Scaling::NAlpha(a) => x.powf(a),
        }
    }
}

impl fmt::Display for Scaling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scaling::SqrtN => f.write_str("sqrt-n"),
            Scaling::SqrtNLogN => f.write_str("sqrt-n-log-n"),
            Scaling::NAlpha(a) => write!(f, "n^{a:.6}"),
        }
    }
}

impl Serialize for Scaling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The scaling under which the centered counts of this model/m pair have a
/// nondegenerate limit.
pub fn auto_scaling(model: &TreeModel, m: usize) -> Result<Scaling> {
    let urn = match model {
        TreeModel::Rrt => UrnModel::Rrt,
        TreeModel::Bst => UrnModel::Bst,
        TreeModel::Cgwt(_) => {
            if m < 2 {
                return Err(Error::InvalidModulus(m));
            }
            return Ok(Scaling::SqrtN);
        }
    };
    let class = classify_regime(urn, m)?;
    Ok(match class.regime {
        Regime::Small => Scaling::SqrtN,
        Regime::Critical => Scaling::SqrtNLogN,
        Regime::Large => Scaling::NAlpha(class.alpha),
    })
}

fn check_scaling(model: &TreeModel, m: usize, n: u64, scaling: Scaling) -> Result<()> {
    let auto = auto_scaling(model, m)?;
    let ok = match (scaling, auto) {
        (Scaling::SqrtN, Scaling::SqrtN) => true,
        (Scaling::SqrtNLogN, Scaling::SqrtNLogN) => true,
        // any exponent in (0, 1) is a legitimate probe of the same regime
        (Scaling::NAlpha(a), Scaling::NAlpha(_)) => a.is_finite() && a > 0.0 && a < 1.0,
        _ => false,
    };
    if !ok {
        return Err(Error::Config(format!(
            "scaling {scaling} does not fit {} with m = {m} (regime scaling is {auto})",
            model.name()
        )));
    }
    if scaling == Scaling::SqrtNLogN && n < 2 {
        return Err(Error::Config(
            "sqrt-n-log-n scaling needs n >= 2 (log 1 = 0)".into(),
        ));
    }
    Ok(())
}

/// Depth counts mod m of one sampled tree. RRT and BST go through their
/// urn embeddings (same law as reducing the grown tree, O(m) memory); CGWT
/// grows the conditioned tree.
fn sample_counts<R: Rng>(model: &TreeModel, m: usize, n: u64, rng: &mut R) -> Result<Vec<u64>> {
    Ok(match model {
        TreeModel::Rrt => rrt_urn_with(m, n, rng),
        TreeModel::Bst => bst_urn_with(m, n, rng).0,
        TreeModel::Cgwt(off) => reduce_depths(&cgwt_depths_with(off, n, rng)?, m),
    })
}

/// Count the depths of one sequence by residue class.
pub fn reduce_mod_m(depths: &DepthSequence, m: usize) -> Result<ModDepthCounts> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    Ok(ModDepthCounts::new(m, reduce_depths(&depths.depths, m)))
}

/// Discrete Fourier transform of the count vector: entry k is
/// sum_j w^{kj} c_j with w = exp(2 pi i / m). Entry 0 is always n.
pub fn dft_mod_m(counts: &ModDepthCounts) -> Vec<Complex64> {
    let m = counts.m;
    (0..m)
        .map(|k| {
            (0..m)
                .map(|j| {
                    Complex64::from_polar(
                        counts.counts[j] as f64,
                        2.0 * std::f64::consts::PI * ((k * j) % m) as f64 / m as f64,
                    )
                })
                .sum()
        })
        .collect()
}

/// Replicated-simulation summary. `mean` and `sample_cov` describe the
/// scaled vector (X - n/m) / norm(n); `raw_mean` is in plain counts.
/// `standard_errors[p][q]` is the delete-one jackknife error of
/// `sample_cov[p][q]` (zeros when replicates < 3, as is `sample_cov` itself
/// when replicates < 2: those estimators need more data to exist).
#[derive(Clone, Debug, Serialize)]
pub struct MonteCarloSummary {
    pub model: String,
    pub m: usize,
    pub n: u64,
    pub replicates: usize,
    pub seed: u64,
    pub scaling: Scaling,
    pub raw_mean: Vec<f64>,
    pub mean: Vec<f64>,
    pub sample_cov: Vec<Vec<f64>>,
    pub standard_errors: Vec<Vec<f64>>,
}

/// Run `replicates` independent simulations and summarize the scaled counts.
pub fn run_replicates(
    model: &TreeModel,
    m: usize,
    n: u64,
    replicates: usize,
    seed: u64,
    scaling: Scaling,
) -> Result<MonteCarloSummary> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if n < 1 {
        return Err(Error::InvalidSize);
    }
    if replicates < 1 {
        return Err(Error::Config("need at least one replicate".into()));
    }
    check_scaling(model, m, n, scaling)?;
    if let TreeModel::Cgwt(off) = model {
        off.check_feasible(n)?;
    }

    let rows: Vec<Vec<u64>> = (0..replicates)
        .into_par_iter()
        .map(|r| sample_counts(model, m, n, &mut stream_rng(seed, r as u64)))
        .collect::<Result<_>>()?;

    // integer bookkeeping first: every tree has exactly n vertices
    let mut class_sums = vec![0u128; m];
    for row in &rows {
        for (s, &c) in class_sums.iter_mut().zip(row) {
            *s += c as u128;
        }
    }
    let total: u128 = class_sums.iter().sum();
    assert_eq!(total, replicates as u128 * n as u128);

    let r = replicates;
    let norm = scaling.norm(n);
    let center = n as f64 / m as f64;
    let scaled: Vec<Vec<f64>> = rows
        .iter()
        .map(|row| row.iter().map(|&c| (c as f64 - center) / norm).collect())
        .collect();

    let raw_mean: Vec<f64> = class_sums.iter().map(|&s| s as f64 / r as f64).collect();
    let mean: Vec<f64> = (0..m)
        .map(|p| scaled.iter().map(|y| y[p]).sum::<f64>() / r as f64)
        .collect();

    let mut sample_cov = vec![vec![0.0; m]; m];
    if r >= 2 {
        for p in 0..m {
            for q in p..m {
                let s: f64 = scaled
                    .iter()
                    .map(|y| (y[p] - mean[p]) * (y[q] - mean[q]))
                    .sum();
                let v = s / (r - 1) as f64;
                sample_cov[p][q] = v;
                sample_cov[q][p] = v;
            }
        }
    }

    let mut standard_errors = vec![vec![0.0; m]; m];
    if r >= 3 {
        // grand-mean-centered rows make the delete-one totals well conditioned
        let centered: Vec<Vec<f64>> = scaled
            .iter()
            .map(|y| (0..m).map(|p| y[p] - mean[p]).collect())
            .collect();
        let z: Vec<f64> = (0..m)
            .map(|p| centered.iter().map(|y| y[p]).sum())
            .collect();
        for p in 0..m {
            for q in p..m {
                let s_pq: f64 = centered.iter().map(|y| y[p] * y[q]).sum();
                let theta = sample_cov[p][q];
                let (mut dsum, mut dsq) = (0.0, 0.0);
                for y in &centered {
                    // sample covariance with row y removed, from totals
                    let zp = z[p] - y[p];
                    let zq = z[q] - y[q];
                    let t = (s_pq - y[p] * y[q] - zp * zq / (r - 1) as f64) / (r - 2) as f64;
                    let d = t - theta;
                    dsum += d;
                    dsq += d * d;
                }
                let var_j = (r - 1) as f64 / r as f64 * (dsq - dsum * dsum / r as f64);
                let se = var_j.max(0.0).sqrt();
                standard_errors[p][q] = se;
                standard_errors[q][p] = se;
            }
        }
    }

    Ok(MonteCarloSummary {
        model: model.name(),
        m,
        n,
        replicates,
        seed,
        scaling,
        raw_mean,
        mean,
        sample_cov,
        standard_errors,
    })
}

/// Monte Carlo estimate of E |X^(k)|^2 / n for one Fourier mode. In the
/// diffusive regimes (and for CGWT at any m, up to the offspring-variance
/// factor) this converges to the mode's limit variance.
#[derive(Clone, Debug, Serialize)]
pub struct ModeVariance {
    pub model: String,
    pub m: usize,
    pub k: usize,
    pub n: u64,
    pub replicates: usize,
    pub estimate: f64,
    pub std_error: f64,
}

pub fn mode_variance_estimate(
    model: &TreeModel,
    m: usize,
    k: usize,
    n: u64,
    replicates: usize,
    seed: u64,
) -> Result<ModeVariance> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if k == 0 || k >= m {
        return Err(Error::InvalidMode { k, m });
    }
    if n < 1 {
        return Err(Error::InvalidSize);
    }
    if replicates < 2 {
        return Err(Error::Config("need at least two replicates".into()));
    }
    match model {
        TreeModel::Rrt => require_small(UrnModel::Rrt, m, "small (m <= 5)")?,
        TreeModel::Bst => require_small(UrnModel::Bst, m, "small (m <= 8)")?,
        TreeModel::Cgwt(off) => off.check_feasible(n)?,
    }
    let vals: Vec<f64> = (0..replicates)
        .into_par_iter()
        .map(|r| {
            let counts = sample_counts(model, m, n, &mut stream_rng(seed, r as u64))?;
            let hat = dft_mod_m(&ModDepthCounts::new(m, counts));
            Ok(hat[k].norm_sqr() / n as f64)
        })
        .collect::<Result<_>>()?;
    let mean = vals.iter().sum::<f64>() / replicates as f64;
    let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>()
        / (replicates - 1) as f64;
    Ok(ModeVariance {
        model: model.name(),
        m,
        k,
        n,
        replicates,
        estimate: mean,
        std_error: (var / replicates as f64).sqrt(),
    })
}

fn require_small(urn: UrnModel, m: usize, required: &'static str) -> Result<()> {
    let class = classify_regime(urn, m)?;
    if class.regime != Regime::Small {
        return Err(Error::WrongRegime {
            model: urn.name(),
            m,
            required,
        });
    }
    Ok(())
}

/// Raw Var(X_0) estimates over a grid of tree sizes, one independent seed
/// stream per size. The per-size simulation runs under the regime scaling
/// and the normalization is then undone, so the outputs grow like the true
/// variance.
pub fn variance_growth_grid(
    model: &TreeModel,
    m: usize,
    sizes: &[u64],
    replicates: usize,
    seed: u64,
) -> Result<Vec<(u64, f64)>> {
    if sizes.is_empty() {
        return Err(Error::Config("need at least one tree size".into()));
    }
    if replicates < 2 {
        return Err(Error::Config("need at least two replicates per size".into()));
    }
    let scaling = auto_scaling(model, m)?;
    sizes
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let s = run_replicates(model, m, n, replicates, derive_seed(seed, i as u64), scaling)?;
            let norm = scaling.norm(n);
            Ok((n, s.sample_cov[0][0] * norm * norm))
        })
        .collect()
}

/// Least-squares slope of log Var against log n.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScalingFit {
    pub gamma_hat: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub points_used: usize,
}

/// Fit Var(n) ~ C n^gamma on the log-log scale. Points with n < FIT_MIN_N
/// or a nonpositive/nonfinite variance are dropped; what remains must have
/// at least FIT_MIN_POINTS points spanning FIT_MIN_DECADES decades.
pub fn fit_variance_exponent(points: &[(u64, f64)]) -> Result<ScalingFit> {
    let kept: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(n, v)| n >= FIT_MIN_N && v.is_finite() && v > 0.0)
        .map(|&(n, v)| ((n as f64).ln(), v.ln()))
        .collect();
    if kept.len() < FIT_MIN_POINTS {
        return Err(Error::Fit(format!(
            "need {FIT_MIN_POINTS}+ points with n >= {FIT_MIN_N} and positive variance (have {})",
            kept.len()
        )));
    }
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, _) in &kept {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
    }
    let decades = (xmax - xmin) / std::f64::consts::LN_10;
    if decades < FIT_MIN_DECADES {
        return Err(Error::Fit(format!(
            "sizes span {decades:.2} decades, need {FIT_MIN_DECADES}"
        )));
    }
    let k = kept.len() as f64;
    let xbar = kept.iter().map(|p| p.0).sum::<f64>() / k;
    let ybar = kept.iter().map(|p| p.1).sum::<f64>() / k;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for &(x, y) in &kept {
        sxx += (x - xbar) * (x - xbar);
        sxy += (x - xbar) * (y - ybar);
        syy += (y - ybar) * (y - ybar);
    }
    let gamma_hat = sxy / sxx;
    let intercept = ybar - gamma_hat * xbar;
    let ss_res = (syy - sxy * sxy / sxx).max(0.0);
    let r_squared = if syy > 0.0 { 1.0 - ss_res / syy } else { 1.0 };
    Ok(ScalingFit {
        gamma_hat,
        intercept,
        r_squared,
        points_used: kept.len(),
    })
}
