//! Exact limit covariance tables for depth counts mod m.
//!
//! In the Gaussian regimes the centered, scaled count vector converges to a
//! normal limit whose covariance is circulant: entry (p, q) depends only on
//! (q - p) mod m, so one first row determines the matrix. Each first-row
//! entry is an eigen-sum over the nontrivial Fourier modes,
//!
//!   c_k = m^{-2} * sum_{j=1}^{m-1} w^{jk} / s(w^j),
//!
//! with s the per-mode spectral factor (a small Laurent polynomial in w^j).
//! The sum is a rational number. It is computed exactly by inverting the
//! polynomial s(x) modulo 1 + x + ... + x^{m-1} over Q and reading the
//! answer off the inverse's coefficients; a direct floating-point eigen-sum
//! is kept alongside as an independent cross-check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::{rat, Poly};

/// Families of limit covariances (and Fourier mode variances).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CovarianceKind {
    Rrt,
    BstInternal,
    BstExternal,
    Cgwt,
}

impl CovarianceKind {
    pub fn name(self) -> &'static str {
        match self {
            CovarianceKind::Rrt => "rrt",
            CovarianceKind::BstInternal => "bst",
            CovarianceKind::BstExternal => "bst-external",
            CovarianceKind::Cgwt => "cgwt",
        }
    }
}

/// Normalization the table refers to: Var/n (PerN) or Var/(n log n) at the
/// single critical case (PerNLogN).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScaleNote {
    PerN,
    PerNLogN,
}

impl ScaleNote {
    pub fn name(self) -> &'static str {
        match self {
            ScaleNote::PerN => "per-n",
            ScaleNote::PerNLogN => "per-n-log-n",
        }
    }
}

/// Circulant limit covariance: exact rational first row. For CGWT the
/// rationals are the sigma^2 = 1 table; `sigma_sq` scales the float views.
#[derive(Clone, Debug)]
pub struct CirculantCovariance {
    pub m: usize,
    pub first_row: Vec<BigRational>,
    pub scale: ScaleNote,
    pub sigma_sq: f64,
}

impl CirculantCovariance {
    fn new(m: usize, first_row: Vec<BigRational>, scale: ScaleNote, sigma_sq: f64) -> Self {
        assert_eq!(first_row.len(), m);
        let sum: BigRational = first_row.iter().fold(BigRational::zero(), |a, b| a + b);
        assert!(sum.is_zero(), "row sums vanish: counts are constrained to n");
        for k in 1..m {
            assert_eq!(first_row[k], first_row[m - k], "row is symmetric");
        }
        CirculantCovariance {
            m,
            first_row,
            scale,
            sigma_sq,
        }
    }

    /// Exact entry (i, j) = first_row[(j - i) mod m] (sigma^2 factor not included).
    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.first_row[(j % self.m + self.m - i % self.m) % self.m]
    }

    /// Full matrix as floats, sigma^2 included.
    pub fn to_float_matrix(&self) -> Vec<Vec<f64>> {
        let row = self.first_row_f64();
        (0..self.m)
            .map(|i| (0..self.m).map(|j| row[(j + self.m - i) % self.m]).collect())
            .collect()
    }

    /// First row as floats, sigma^2 included.
    pub fn first_row_f64(&self) -> Vec<f64> {
        self.first_row
            .iter()
            .map(|r| r.to_f64().unwrap() * self.sigma_sq)
            .collect()
    }

    /// First row over the least common denominator, rendered "p/q". Zero
    /// entries render as "0/q" so rows stay visually aligned.
    pub fn rational_row_strings(&self) -> Vec<String> {
        let lcm = self
            .first_row
            .iter()
            .map(|r| r.denom().clone())
            .fold(BigInt::from(1), |a, b| num_bigint_lcm(&a, &b));
        self.first_row
            .iter()
            .map(|r| {
                let num = r.numer() * (&lcm / r.denom());
                format!("{}/{}", num, lcm)
            })
            .collect()
    }

    /// Real eigenvalues of the table (DFT of the first row), mode order.
    /// Mode 0 is always 0; the rest are nonnegative.
    pub fn spectrum(&self) -> Vec<f64> {
        let row = self.first_row_f64();
        (0..self.m)
            .map(|k| {
                (0..self.m)
                    .map(|l| {
                        row[l] * (2.0 * std::f64::consts::PI * (k * l % self.m) as f64
                            / self.m as f64)
                            .cos()
                    })
                    .sum()
            })
            .collect()
    }
}

fn num_bigint_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    let g = num_bigint_gcd(a.clone(), b.clone());
    (a / &g * b).abs()
}

fn num_bigint_gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    a.abs()
}

/// First row via the eigen-sum, exactly: h = p * s^{-1} mod (1 + ... + x^{m-1}),
/// c_k = (m * h_{(-k) mod m} - h(1)) / m^2. The spectral factor s must be a
/// unit mod Psi_m, i.e. nonzero at every nontrivial m-th root of unity.
fn eigen_row(m: usize, s: &Poly, p: &Poly) -> Option<Vec<BigRational>> {
    let psi = Poly::all_ones(m);
    let h = p.mul(&s.invert_mod(&psi)?).rem(&psi);
    let h1 = h.eval_one();
    let mm = rat((m * m) as i64);
    Some(
        (0..m)
            .map(|k| (h.coeff((m - k) % m) * rat(m as i64) - &h1) / &mm)
            .collect(),
    )
}

/// RRT limit covariance of (X - n/m)/sqrt(n), m in 2..=5; for m = 6 the
/// critical table of (X - n/m)/sqrt(n log n), carried entirely by the two
/// boundary modes. m >= 7 has no Gaussian limit of this kind.
pub fn rrt_sigma(m: usize) -> Result<CirculantCovariance> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    match m {
        2..=5 => {
            // mode variance 1/(1 - 2 Re w^j): s(x) = 1 - x - x^{m-1}
            let s = Poly::from_terms(&[(0, 1), (1, -1), (m - 1, -1)]);
            let row = eigen_row(m, &s, &Poly::from_terms(&[(0, 1)])).expect("unit for m <= 5");
            Ok(CirculantCovariance::new(m, row, ScaleNote::PerN, 1.0))
        }
        6 => Ok(CirculantCovariance::new(
            6,
            critical_row_m6(),
            ScaleNote::PerNLogN,
            1.0,
        )),
        _ => Err(Error::WrongRegime {
            model: "rrt",
            m,
            required: "small or critical (m <= 6)",
        }),
    }
}

/// At m = 6 only the modes j = 1, 5 survive the n log n scaling:
/// c_k = (w^k + w^{-k})/36 = 2 cos(pi k / 3)/36, evaluated exactly by
/// reducing x^k + x^{6-k} modulo the sixth cyclotomic polynomial x^2 - x + 1.
fn critical_row_m6() -> Vec<BigRational> {
    (0..6)
        .map(|k| {
            let (a, b) = if k == 0 {
                (2i64, 0i64)
            } else {
                let (a1, b1) = pow_mod_phi6(k);
                let (a2, b2) = pow_mod_phi6(6 - k);
                (a1 + a2, b1 + b2)
            };
            assert_eq!(b, 0, "w^k + w^-k is real, so the reduction is constant");
            BigRational::new(BigInt::from(a), BigInt::from(36))
        })
        .collect()
}

/// x^k mod (x^2 - x + 1) as integer pair (a, b) = a + b x.
fn pow_mod_phi6(k: usize) -> (i64, i64) {
    let (mut a, mut b) = (1i64, 0i64);
    for _ in 0..k {
        // multiply by x: (a + bx) x = ax + b x^2 = -b + (a + b) x
        let (na, nb) = (-b, a + b);
        a = na;
        b = nb;
    }
    (a, b)
}

/// BST internal-vertex limit covariance of (X - n/m)/sqrt(n), m in 2..=8.
pub fn bst_sigma(m: usize) -> Result<CirculantCovariance> {
    bst_row(m, &[(0, 1)])
}

/// BST external-slot limit covariance of (Y - (n+1)/m)/sqrt(n), m in 2..=8.
pub fn bst_external_sigma(m: usize) -> Result<CirculantCovariance> {
    bst_row(m, &[(0, 5), (1, -2), (usize::MAX, -2)])
}

fn bst_row(m: usize, numer_terms: &[(usize, i64)]) -> Result<CirculantCovariance> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if m > 8 {
        return Err(Error::WrongRegime {
            model: "bst",
            m,
            required: "small (m <= 8)",
        });
    }
    // internal mode variance 1/(3 - 4 Re w^j); external multiplies by (5 - 4 Re w^j)
    let s = Poly::from_terms(&[(0, 3), (1, -2), (m - 1, -2)]);
    let terms: Vec<(usize, i64)> = numer_terms
        .iter()
        .map(|&(e, c)| (if e == usize::MAX { m - 1 } else { e }, c))
        .collect();
    let p = Poly::from_terms(&terms);
    let row = eigen_row(m, &s, &p).expect("3 - 4 cos never vanishes at roots of unity");
    Ok(CirculantCovariance::new(m, row, ScaleNote::PerN, 1.0))
}

/// Conditioned Galton-Watson limit covariance of (X - n/m)/sqrt(n), any
/// m >= 2, scaled by the offspring variance sigma^2. Closed form:
/// c_k = sigma^2 (m^2 - 1 - 6k(m-k)) / (12 m^2).
pub fn cgwt_sigma(m: usize, sigma_sq: f64) -> Result<CirculantCovariance> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if !(sigma_sq > 0.0) || !sigma_sq.is_finite() {
        return Err(Error::Config(format!(
            "offspring variance must be positive and finite (got {sigma_sq})"
        )));
    }
    let mm = m as i64;
    let row = (0..mm)
        .map(|k| BigRational::new(BigInt::from(mm * mm - 1 - 6 * k * (mm - k)), BigInt::from(12 * mm * mm)))
        .collect();
    Ok(CirculantCovariance::new(m, row, ScaleNote::PerN, sigma_sq))
}

/// CGWT first row via the eigen-sum (mode variance 1/(2 - 2 Re w^j)) instead
/// of the closed form; exact, used to cross-check `cgwt_sigma`.
pub fn cgwt_sigma_eigen_route(m: usize) -> Result<Vec<BigRational>> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let s = Poly::from_terms(&[(0, 2), (1, -1), (m - 1, -1)]);
    Ok(eigen_row(m, &s, &Poly::from_terms(&[(0, 1)]))
        .expect("2 - 2 cos vanishes only at the trivial mode, excluded by Psi"))
}

/// Limit variance of the k-th Fourier mode, |X^(k)|^2 / n -> this value.
/// CGWT values are for sigma^2 = 1 (scale by sigma^2 otherwise).
pub fn fourier_limit_variance(kind: CovarianceKind, k: usize, m: usize) -> Result<f64> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if k == 0 || k >= m {
        return Err(Error::InvalidMode { k, m });
    }
    // cos(2 pi k / m) via the reflected index, so value(k) == value(m - k) exactly
    let c = (2.0 * std::f64::consts::PI * k.min(m - k) as f64 / m as f64).cos();
    match kind {
        CovarianceKind::Rrt => {
            if m > 5 {
                return Err(Error::WrongRegime {
                    model: "rrt",
                    m,
                    required: "small (m <= 5)",
                });
            }
            Ok(1.0 / (1.0 - 2.0 * c))
        }
        CovarianceKind::BstInternal => {
            if m > 8 {
                return Err(Error::WrongRegime {
                    model: "bst",
                    m,
                    required: "small (m <= 8)",
                });
            }
            Ok(1.0 / (3.0 - 4.0 * c))
        }
        CovarianceKind::BstExternal => {
            if m > 8 {
                return Err(Error::WrongRegime {
                    model: "bst",
                    m,
                    required: "small (m <= 8)",
                });
            }
            Ok((5.0 - 4.0 * c) / (3.0 - 4.0 * c))
        }
        CovarianceKind::Cgwt => Ok(1.0 / (2.0 - 2.0 * c)),
    }
}

/// Floating-point eigen-sum for the first row (sigma^2 = 1): the independent
/// numeric route the exact tables are tested against.
pub fn eigen_sum_row_f64(kind: CovarianceKind, m: usize) -> Result<Vec<f64>> {
    let mut row = vec![0.0; m];
    for j in 1..m {
        let v = fourier_limit_variance(kind, j, m)?;
        for (k, slot) in row.iter_mut().enumerate() {
            let phase = 2.0 * std::f64::consts::PI * (j * k % m) as f64 / m as f64;
            *slot += v * phase.cos() / (m * m) as f64;
        }
    }
    Ok(row)
}
