//! Pólya-urn views of the two growth models.
//!
//! Vertices (RRT) or external slots (BST) are balls labeled by depth mod m.
//! One growth step draws a ball uniformly and applies the replacement rule:
//!
//! * RRT: the drawn ball (label j) stays, a child with label j+1 is added.
//! * BST: the drawn external slot (label j) becomes an internal vertex and
//!   exposes two new external slots with label j+1.
//!
//! Both replacement matrices are circulant, so the DFT diagonalizes them;
//! eigenvalue gaps against 1/2 decide the regime.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::stream_rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UrnModel {
    Rrt,
    Bst,
}

impl UrnModel {
    pub fn name(self) -> &'static str {
        match self {
            UrnModel::Rrt => "rrt",
            UrnModel::Bst => "bst",
        }
    }
}

impl std::fmt::Display for UrnModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Depth counts reduced mod m: `counts[j]` vertices have depth = j (mod m).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModDepthCounts {
    pub m: usize,
    pub n: u64,
    pub counts: Vec<u64>,
}

impl ModDepthCounts {
    pub fn new(m: usize, counts: Vec<u64>) -> Self {
        assert_eq!(counts.len(), m);
        let n = counts.iter().sum();
        ModDepthCounts { m, n, counts }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Small,
    Critical,
    Large,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::Small => "small",
            Regime::Critical => "critical",
            Regime::Large => "large",
        })
    }
}

/// Where the second-largest eigenvalue real part sits relative to 1/2.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RegimeClassification {
    pub model: UrnModel,
    pub m: usize,
    pub regime: Regime,
    /// Re and Im of the dominant nontrivial eigenvalue: w = exp(2 pi i / m)
    /// for RRT, 2w - 1 for BST.
    pub alpha: f64,
    pub beta: f64,
}

/// Regime boundaries: RRT is Small for m <= 5, Critical at m = 6 (where
/// Re w = 1/2 exactly), Large for m >= 7. BST is Small for m <= 8 and Large
/// for m >= 9; Re(2w - 1) never equals 1/2 at an integer m.
pub fn classify_regime(model: UrnModel, m: usize) -> Result<RegimeClassification> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let theta = 2.0 * std::f64::consts::PI / m as f64;
    let (alpha, beta, regime) = match model {
        UrnModel::Rrt => {
            let regime = match m {
                2..=5 => Regime::Small,
                6 => Regime::Critical,
                _ => Regime::Large,
            };
            (theta.cos(), theta.sin(), regime)
        }
        UrnModel::Bst => {
            let regime = if m <= 8 { Regime::Small } else { Regime::Large };
            (2.0 * theta.cos() - 1.0, 2.0 * theta.sin(), regime)
        }
    };
    Ok(RegimeClassification {
        model,
        m,
        regime,
        alpha,
        beta,
    })
}

/// Replacement matrix A = (a_ij): drawing a ball with label j adds a_ij
/// balls of label i (negative entries remove).
pub fn replacement_matrix(model: UrnModel, m: usize) -> Result<Vec<Vec<i64>>> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let mut a = vec![vec![0i64; m]; m];
    for j in 0..m {
        match model {
            UrnModel::Rrt => a[(j + 1) % m][j] += 1,
            UrnModel::Bst => {
                a[j][j] -= 1;
                a[(j + 1) % m][j] += 2;
            }
        }
    }
    Ok(a)
}

/// Eigenvalues of the replacement matrix, ordered by mode index k:
/// lambda_k = sum_l a_{l,0} w^{lk}. Circulant structure makes the first
/// column determine the full spectrum.
pub fn replacement_spectrum(model: UrnModel, m: usize) -> Result<Vec<Complex64>> {
    let a = replacement_matrix(model, m)?;
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let mut s = Complex64::new(0.0, 0.0);
        for (l, row) in a.iter().enumerate() {
            let phase = 2.0 * std::f64::consts::PI * (k * l % m) as f64 / m as f64;
            s += row[0] as f64 * Complex64::new(phase.cos(), phase.sin());
        }
        out.push(s);
    }
    Ok(out)
}

pub(crate) fn rrt_urn_with<R: Rng>(m: usize, n: u64, rng: &mut R) -> Vec<u64> {
    let mut counts = vec![0u64; m];
    counts[0] = 1;
    for total in 1..n {
        let t = rng.gen_range(0..total);
        let mut cum = 0u64;
        for j in 0..m {
            cum += counts[j];
            if t < cum {
                counts[(j + 1) % m] += 1;
                break;
            }
        }
    }
    counts
}

pub(crate) fn bst_urn_with<R: Rng>(m: usize, n: u64, rng: &mut R) -> (Vec<u64>, Vec<u64>) {
    let mut internal = vec![0u64; m];
    let mut external = vec![0u64; m];
    external[0] = 1;
    let mut ext_total = 1u64;
    for _ in 0..n {
        let t = rng.gen_range(0..ext_total);
        let mut cum = 0u64;
        for j in 0..m {
            cum += external[j];
            if t < cum {
                internal[j] += 1;
                external[j] -= 1;
                external[(j + 1) % m] += 2;
                break;
            }
        }
        ext_total += 1; // net external change per step: -1 + 2
    }
    (internal, external)
}

/// Grow a random recursive tree to n vertices, tracking only depth counts
/// mod m. Ball labels are vertex depths, so the result is the exact law of
/// the depth profile reduced mod m.
pub fn simulate_rrt_urn(m: usize, n: u64, seed: u64) -> Result<ModDepthCounts> {
    check_mn(m, n)?;
    let counts = rrt_urn_with(m, n, &mut stream_rng(seed, 0));
    Ok(ModDepthCounts { m, n, counts })
}

/// Grow a binary search tree to n internal vertices via its external-slot
/// urn (one external slot at depth 0 to start), returning internal depth
/// counts mod m.
pub fn simulate_bst_urn(m: usize, n: u64, seed: u64) -> Result<ModDepthCounts> {
    check_mn(m, n)?;
    let (internal, _) = bst_urn_with(m, n, &mut stream_rng(seed, 0));
    Ok(ModDepthCounts {
        m,
        n,
        counts: internal,
    })
}

fn check_mn(m: usize, n: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if n < 1 {
        return Err(Error::InvalidSize);
    }
    Ok(())
}
