//! Joint moments of the complex martingale limit Z in the large-m regime.
//!
//! For RRT with m >= 7 and BST with m >= 9 the dominant-mode count,
//! normalized by its mean growth, converges to a nondegenerate complex
//! limit Z with E Z = 1. The mixed moments m_{a,b} = E[Z^a conj(Z)^b]
//! satisfy a closed recursion in the total degree a + b obtained from the
//! one-step decomposition of the tree at the root. A second, rescaled
//! family mhat_{a,b} describes the limit observed along n -> infinity
//! through the lens of the mode count itself; its third central moment is
//! what witnesses persistent oscillation (no almost-sure scaled limit).

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::complex_gamma;
use crate::urn::{classify_regime, Regime, UrnModel};

/// Tolerance used by the oscillation verdict unless the caller overrides it.
pub const OSCILLATION_TOL: f64 = 1e-12;

const MAX_DEGREE_CAP: u32 = 16;

/// Mixed moments of Z, plus the rescaled family, keyed by (a, b) with
/// a + b <= max_degree. Entry (a, b) holds E[Z^a conj(Z)^b].
#[derive(Clone, Debug)]
pub struct MomentTable {
    pub model: UrnModel,
    pub m: usize,
    pub max_degree: u32,
    pub entries: BTreeMap<(u32, u32), Complex64>,
    pub hat_entries: BTreeMap<(u32, u32), Complex64>,
}

impl MomentTable {
    pub fn entry(&self, a: u32, b: u32) -> Complex64 {
        self.entries[&(a, b)]
    }

    pub fn hat_entry(&self, a: u32, b: u32) -> Complex64 {
        self.hat_entries[&(a, b)]
    }
}

/// Everything the oscillation verdict looked at: the second and third
/// central moments of the rescaled limit and the comparison tolerance.
#[derive(Clone, Debug)]
pub struct OscillationReport {
    pub model: UrnModel,
    pub m: usize,
    /// E[(W - EW)^2] for the rescaled limit W.
    pub c2: Complex64,
    /// E[|W - EW|^2]; real and positive for a nondegenerate limit.
    pub c11: f64,
    /// E[(W - EW)^3].
    pub c3: Complex64,
    pub tol: f64,
    pub oscillates: bool,
}

fn omega(m: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / m as f64)
}

fn omega_pow(m: usize, k: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / m as f64)
}

fn binom(n: u32, k: u32) -> f64 {
    let mut v = 1.0;
    for i in 0..k.min(n - k) {
        v = v * (n - i) as f64 / (i + 1) as f64;
    }
    v
}

fn require_large(model: UrnModel, m: usize) -> Result<()> {
    let class = classify_regime(model, m)?;
    if class.regime != Regime::Large {
        return Err(Error::WrongRegime {
            model: model.name(),
            m,
            required: match model {
                UrnModel::Rrt => "large (m >= 7)",
                UrnModel::Bst => "large (m >= 9)",
            },
        });
    }
    Ok(())
}

/// Mixed moments of Z up to total degree `max_degree`, by recursion on the
/// degree. Requires the large regime; lower m has no such limit.
pub fn z_moments(model: UrnModel, m: usize, max_degree: u32) -> Result<MomentTable> {
    require_large(model, m)?;
    if max_degree < 1 || max_degree > MAX_DEGREE_CAP {
        return Err(Error::Config(format!(
            "moment degree must be in 1..={MAX_DEGREE_CAP} (got {max_degree})"
        )));
    }
    let w = omega(m);
    let one = Complex64::new(1.0, 0.0);
    let mut entries: BTreeMap<(u32, u32), Complex64> = BTreeMap::new();
    entries.insert((0, 0), one);
    entries.insert((1, 0), one);
    if max_degree >= 1 {
        entries.insert((0, 1), one);
    }

    for d in 2..=max_degree {
        for a in 0..=d {
            let b = d - a;
            let mut s = Complex64::new(0.0, 0.0);
            for i in 0..=a {
                for j in 0..=b {
                    if (i == 0 && j == 0) || (i == a && j == b) {
                        continue;
                    }
                    let mut term = binom(a, i) * binom(b, j) * entries[&(i, j)]
                        * entries[&(a - i, b - j)];
                    if model == UrnModel::Rrt {
                        term *= omega_pow(m, (a - i) as i64 - (b - j) as i64);
                    }
                    s += term;
                }
            }
            let wab = omega_pow(m, a as i64 - b as i64);
            let value = match model {
                UrnModel::Rrt => {
                    let den = a as f64 * w + b as f64 * w.conj() - wab;
                    if den.norm() < 1e-9 {
                        return Err(Error::DegenerateMoment { a, b, m });
                    }
                    s / den
                }
                UrnModel::Bst => {
                    let lam = 2.0 * w - 1.0;
                    let den = 1.0 + a as f64 * lam + b as f64 * lam.conj() - 2.0 * wab;
                    if den.norm() < 1e-9 {
                        return Err(Error::DegenerateMoment { a, b, m });
                    }
                    wab * s / den
                }
            };
            entries.insert((a, b), value);
        }
    }

    let hat_entries = hat_from_entries(model, m, &entries)?;
    Ok(MomentTable {
        model,
        m,
        max_degree,
        entries,
        hat_entries,
    })
}

/// mhat_{a,b} = m_{a,b} / ((m/2)^{a+b} kappa^a conj(kappa)^b
/// Gamma(1 + a lambda + b conj(lambda))), with (kappa, lambda) = (1, w)
/// for RRT and (2w - 1, 2w - 1) for BST. The gamma argument has real part
/// >= 1 in the large regime, far from any pole.
fn hat_from_entries(
    model: UrnModel,
    m: usize,
    entries: &BTreeMap<(u32, u32), Complex64>,
) -> Result<BTreeMap<(u32, u32), Complex64>> {
    let w = omega(m);
    let (kappa, lam) = match model {
        UrnModel::Rrt => (Complex64::new(1.0, 0.0), w),
        UrnModel::Bst => (2.0 * w - 1.0, 2.0 * w - 1.0),
    };
    let mut hat = BTreeMap::new();
    for (&(a, b), &v) in entries {
        let g = complex_gamma(1.0 + a as f64 * lam + b as f64 * lam.conj())?;
        let scale = (m as f64 / 2.0).powi((a + b) as i32)
            * kappa.powu(a)
            * kappa.conj().powu(b)
            * g;
        hat.insert((a, b), v / scale);
    }
    Ok(hat)
}

/// Second/third central moments of the rescaled limit and the verdict:
/// the limit keeps oscillating iff it is not the square of a centered
/// complex Gaussian, witnessed by |c2| < c11 and a nonvanishing third
/// central moment. `tol` guards both comparisons; pass
/// [`OSCILLATION_TOL`] unless there is a reason not to.
pub fn oscillation_check(model: UrnModel, m: usize, tol: f64) -> Result<OscillationReport> {
    if !(tol >= 0.0) || !tol.is_finite() {
        return Err(Error::Config(format!("tolerance must be finite and >= 0 (got {tol})")));
    }
    let table = z_moments(model, m, 3)?;
    let h1 = table.hat_entry(1, 0);
    let h2 = table.hat_entry(2, 0);
    let h11 = table.hat_entry(1, 1);
    let h3 = table.hat_entry(3, 0);
    let c2 = h2 - h1 * h1;
    let c11 = (h11 - Complex64::new(h1.norm_sqr(), 0.0)).re;
    let c3 = h3 - 3.0 * h2 * h1 + 2.0 * h1 * h1 * h1;
    let oscillates = c2.norm() < c11 - tol && c3.norm() > tol * h3.norm().max(1.0);
    Ok(OscillationReport {
        model,
        m,
        c2,
        c11,
        c3,
        tol,
        oscillates,
    })
}
