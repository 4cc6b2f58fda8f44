use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Upper-tail chi-square p-value of an observed histogram of outcome
/// vectors against an exact finite law. Seeing an outcome the law forbids
/// returns 0 outright.
pub fn chi_square_gof_p(
    exact: &BTreeMap<Vec<u64>, BigRational>,
    observed: &BTreeMap<Vec<u64>, u64>,
    samples: u64,
) -> f64 {
    debug_assert_eq!(observed.values().sum::<u64>(), samples);
    if observed.keys().any(|k| !exact.contains_key(k)) {
        return 0.0;
    }
    let mut stat = 0.0;
    for (key, p) in exact {
        let e = p.to_f64().unwrap() * samples as f64;
        let o = observed.get(key).copied().unwrap_or(0) as f64;
        stat += (o - e) * (o - e) / e;
    }
    let df = (exact.len() - 1) as f64;
    ChiSquared::new(df).unwrap().sf(stat)
}

/// Exact Var/n first row for the depth-mod-m counts of a random binary
/// search tree at finite n, via the first and second moment recursion of
/// the external-slot urn. Independent of the library's covariance code.
#[allow(dead_code)]
pub fn exact_bst_finite_n_row(m: usize, n_target: u64) -> Vec<f64> {
    // (A x)_j = 2 x_{j-1} - x_j maps internal counts to external slots
    let mut a = vec![vec![0f64; m]; m];
    for j in 0..m {
        a[j][(j + m - 1) % m] += 2.0;
        a[j][j] -= 1.0;
    }
    let mut mu = vec![0f64; m];
    mu[1 % m] = 2.0;
    let mut mm = vec![vec![0f64; m]; m];
    mm[1 % m][1 % m] = 4.0;
    let mut n = 1u64;
    while n < n_target {
        let t = (n + 1) as f64;
        let mut upd = vec![vec![0f64; m]; m];
        for p in 0..m {
            let pm = (p + m - 1) % m;
            for q in 0..m {
                let qm = (q + m - 1) % m;
                let bm = 2.0 * mm[pm][q] - mm[p][q];
                let mb = 2.0 * mm[p][qm] - mm[p][q];
                let mut d = 0.0;
                if p == q {
                    d += mu[p] + 4.0 * mu[pm];
                }
                if (q + 1) % m == p {
                    d -= 2.0 * mu[q];
                }
                if (p + 1) % m == q {
                    d -= 2.0 * mu[p];
                }
                upd[p][q] = mm[p][q] + (bm + mb + d) / t;
            }
        }
        mm = upd;
        let mut mu2 = vec![0f64; m];
        for p in 0..m {
            mu2[p] = mu[p] + (2.0 * mu[(p + m - 1) % m] - mu[p]) / t;
        }
        mu = mu2;
        n += 1;
    }
    let cov_y: Vec<Vec<f64>> = (0..m)
        .map(|p| (0..m).map(|q| mm[p][q] - mu[p] * mu[q]).collect())
        .collect();
    let z = gauss_solve(&a, &cov_y);
    let w = transpose(&gauss_solve(&a, &transpose(&z)));
    w[0].iter().map(|v| v / n_target as f64).collect()
}

fn gauss_solve(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let cols = b[0].len();
    let mut aug: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(b[i].iter().copied());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| aug[i][col].abs().partial_cmp(&aug[j][col].abs()).unwrap())
            .unwrap();
        aug.swap(col, piv);
        let d = aug[col][col];
        for v in aug[col].iter_mut() {
            *v /= d;
        }
        for r in 0..n {
            if r != col {
                let f = aug[r][col];
                for c in 0..n + cols {
                    aug[r][c] -= f * aug[col][c];
                }
            }
        }
    }
    (0..n).map(|i| aug[i][n..].to_vec()).collect()
}

fn transpose(mt: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let r = mt.len();
    let c = mt[0].len();
    (0..c).map(|j| (0..r).map(|i| mt[i][j]).collect()).collect()
}
