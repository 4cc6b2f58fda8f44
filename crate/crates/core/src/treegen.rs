//! Random tree generators and exact small-n enumeration.
//!
//! Three models, all returning depth sequences (root depth 0):
//!
//! * random recursive trees: vertex k attaches to a uniform earlier vertex;
//! * binary search trees: a uniform random permutation inserted in order;
//! * conditioned Galton-Watson trees: a critical offspring law conditioned
//!   on total progeny n, realized through the rotation (cycle) lemma on the
//!   increment sequence.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Binomial, Distribution, Geometric, Poisson};

use crate::error::{Error, Result};
use crate::rng::stream_rng;

/// Attempt budget for conditioning on total progeny. Acceptance probability
/// is Theta(n^{-1/2}) for the laws here, so the cap is never near-binding at
/// desk scale; it exists to fail loudly on misuse.
pub const CONDITIONING_ATTEMPT_CAP: u64 = 1_000_000;

/// Largest n for which exact enumeration of all histories is supported.
pub const ENUMERATION_MAX_N: u64 = 9;

/// Depths of the n vertices of one sampled tree; `depths[0] = 0` is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthSequence {
    pub depths: Vec<u32>,
}

impl DepthSequence {
    pub fn n(&self) -> u64 {
        self.depths.len() as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OffspringKind {
    Poisson1,
    GeometricHalf,
    BinomialTwoHalf,
    TwoPointZeroTwo,
    Custom,
}

/// A critical offspring law (mean exactly 1) with finite variance. The
/// built-in laws cover the usual suspects; `custom` takes any finite-support
/// pmf on {0, 1, 2, ...} with mean 1.
#[derive(Clone, Debug, PartialEq)]
pub struct OffspringDistribution {
    kind: OffspringKind,
    /// pmf over 0..=max_support (used directly only by Custom sampling)
    pmf: Vec<f64>,
    variance: f64,
    span: u64,
    min_support: u64,
    max_support: u64,
    name: &'static str,
}

impl OffspringDistribution {
    /// Poisson(1): sigma^2 = 1, span 1.
    pub fn poisson1() -> Self {
        OffspringDistribution {
            kind: OffspringKind::Poisson1,
            pmf: vec![],
            variance: 1.0,
            span: 1,
            min_support: 0,
            max_support: u64::MAX,
            name: "poisson1",
        }
    }

    /// P(k) = 2^{-k-1}: sigma^2 = 2, span 1.
    pub fn geometric_half() -> Self {
        OffspringDistribution {
            kind: OffspringKind::GeometricHalf,
            pmf: vec![],
            variance: 2.0,
            span: 1,
            min_support: 0,
            max_support: u64::MAX,
            name: "geometric-half",
        }
    }

    /// Binomial(2, 1/2): sigma^2 = 1/2, span 1.
    pub fn binomial_two_half() -> Self {
        OffspringDistribution {
            kind: OffspringKind::BinomialTwoHalf,
            pmf: vec![0.25, 0.5, 0.25],
            variance: 0.5,
            span: 1,
            min_support: 0,
            max_support: 2,
            name: "binomial2-half",
        }
    }

    /// P(0) = P(2) = 1/2: sigma^2 = 1, span 2 (so trees exist only for odd n).
    pub fn two_point_zero_two() -> Self {
        OffspringDistribution {
            kind: OffspringKind::TwoPointZeroTwo,
            pmf: vec![0.5, 0.0, 0.5],
            variance: 1.0,
            span: 2,
            min_support: 0,
            max_support: 2,
            name: "two-point-0-2",
        }
    }

    /// Finite-support pmf over 0..pmf.len(); must sum to 1 and have mean 1
    /// (both within 1e-12) and positive variance.
    pub fn custom(pmf: &[f64]) -> Result<Self> {
        if pmf.is_empty() || pmf.iter().any(|&p| !(0.0..=1.0).contains(&p) || !p.is_finite()) {
            return Err(Error::InvalidOffspring(
                "pmf entries must be probabilities".into(),
            ));
        }
        let total: f64 = pmf.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidOffspring(format!(
                "pmf sums to {total}, not 1"
            )));
        }
        let mean: f64 = pmf.iter().enumerate().map(|(k, &p)| k as f64 * p).sum();
        if (mean - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidOffspring(format!(
                "mean is {mean}, criticality requires mean 1"
            )));
        }
        let second: f64 = pmf
            .iter()
            .enumerate()
            .map(|(k, &p)| (k as f64) * (k as f64) * p)
            .sum();
        let variance = second - mean * mean;
        if variance <= 0.0 {
            return Err(Error::InvalidOffspring(
                "variance must be positive (law must not be a point mass)".into(),
            ));
        }
        let support: Vec<u64> = pmf
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p > 0.0)
            .map(|(k, _)| k as u64)
            .collect();
        let min_support = support[0];
        let max_support = *support.last().unwrap();
        let span = support[1..]
            .iter()
            .fold(0u64, |g, &s| gcd(g, s - min_support));
        debug_assert!(span >= 1);
        Ok(OffspringDistribution {
            kind: OffspringKind::Custom,
            pmf: pmf.to_vec(),
            variance,
            span,
            min_support,
            max_support,
            name: "custom",
        })
    }

    pub fn mean(&self) -> f64 {
        1.0
    }

    pub fn variance(&self) -> f64 {
        self.variance
    }

    /// gcd of the support offsets; a tree of size n exists only if
    /// n*min_support <= n-1 and n-1 = n*min_support (mod span).
    pub fn span(&self) -> u64 {
        self.span
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    /// Necessary feasibility conditions for a tree of size n. (For custom
    /// laws with sparse support this is necessary but not always sufficient;
    /// an infeasible-but-congruent request exhausts the sampling budget.)
    pub fn check_feasible(&self, n: u64) -> Result<()> {
        let need = n - 1;
        let lo = n.saturating_mul(self.min_support);
        let hi = self.max_support.saturating_mul(n);
        if lo > need || need > hi || (need - lo) % self.span != 0 {
            return Err(Error::InfeasibleSize { n, span: self.span });
        }
        Ok(())
    }

    fn sample_one<R: Rng>(&self, rng: &mut R) -> u64 {
        match self.kind {
            OffspringKind::Poisson1 => Poisson::new(1.0).unwrap().sample(rng) as u64,
            OffspringKind::GeometricHalf => Geometric::new(0.5).unwrap().sample(rng),
            OffspringKind::BinomialTwoHalf => Binomial::new(2, 0.5).unwrap().sample(rng),
            OffspringKind::TwoPointZeroTwo => 2 * rng.gen_range(0..2u64),
            OffspringKind::Custom => {
                let u: f64 = rng.gen();
                let mut cum = 0.0;
                for (k, &p) in self.pmf.iter().enumerate() {
                    cum += p;
                    if u < cum {
                        return k as u64;
                    }
                }
                self.pmf.len() as u64 - 1
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl std::fmt::Display for OffspringDistribution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name)
    }
}

/// Which random tree to grow.
#[derive(Clone, Debug, PartialEq)]
pub enum TreeModel {
    Rrt,
    Bst,
    Cgwt(OffspringDistribution),
}

impl TreeModel {
    pub fn name(&self) -> String {
        match self {
            TreeModel::Rrt => "rrt".into(),
            TreeModel::Bst => "bst".into(),
            TreeModel::Cgwt(off) => format!("cgwt-{}", off.name()),
        }
    }
}

impl std::fmt::Display for TreeModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn rrt_depths_with<R: Rng>(n: u64, rng: &mut R) -> Vec<u32> {
    let n = n as usize;
    let mut depths = vec![0u32; n];
    for k in 1..n {
        let parent = rng.gen_range(0..k);
        depths[k] = depths[parent] + 1;
    }
    depths
}

pub(crate) fn bst_depths_with<R: Rng>(n: u64, rng: &mut R) -> Vec<u32> {
    let n = n as usize;
    let mut keys: Vec<u32> = (0..n as u32).collect();
    keys.shuffle(rng);
    bst_depths_of_insertion_order(&keys)
}

/// Depths produced by inserting `keys` in order into an initially empty BST.
fn bst_depths_of_insertion_order(keys: &[u32]) -> Vec<u32> {
    const NIL: u32 = u32::MAX;
    let n = keys.len();
    let mut depths = vec![0u32; n];
    if n == 0 {
        return depths;
    }
    let mut left = vec![NIL; n];
    let mut right = vec![NIL; n];
    for i in 1..n {
        let key = keys[i];
        let mut node = 0usize;
        let mut depth = 0u32;
        loop {
            depth += 1;
            let slot = if key < keys[node] {
                &mut left[node]
            } else {
                &mut right[node]
            };
            if *slot == NIL {
                *slot = i as u32;
                depths[i] = depth;
                break;
            }
            node = *slot as usize;
        }
    }
    depths
}

/// Sample (xi_1, ..., xi_n) iid from the offspring law conditioned on
/// sum = n - 1, counting rejection attempts against the cap.
///
/// For Poisson(1) and the two-point law the conditioning is factored through
/// the sufficient statistic: the sum S (Poisson(n), resp. 2*Binomial(n,1/2))
/// is rejection-sampled until it hits n-1, and the vector given S is then
/// drawn from its exact conditional law (multinomial spreading, resp. a
/// uniform subset of positions). This is the same distribution as whole-
/// vector rejection at a Theta(n) speedup. The remaining laws use plain
/// whole-vector rejection.
pub(crate) fn conditioned_degrees<R: Rng>(
    offspring: &OffspringDistribution,
    n: u64,
    rng: &mut R,
) -> Result<Vec<u64>> {
    offspring.check_feasible(n)?;
    let target = n - 1;
    match offspring.kind {
        OffspringKind::Poisson1 => {
            let law = Poisson::new(n as f64).unwrap();
            for _ in 0..CONDITIONING_ATTEMPT_CAP {
                if law.sample(rng) as u64 == target {
                    let mut degrees = vec![0u64; n as usize];
                    for _ in 0..target {
                        degrees[rng.gen_range(0..n) as usize] += 1;
                    }
                    return Ok(degrees);
                }
            }
            Err(Error::SamplingBudget {
                attempts: CONDITIONING_ATTEMPT_CAP,
            })
        }
        OffspringKind::TwoPointZeroTwo => {
            let twos = target / 2; // target is even: feasibility forces odd n
            let law = Binomial::new(n, 0.5).unwrap();
            for _ in 0..CONDITIONING_ATTEMPT_CAP {
                if law.sample(rng) == twos {
                    let mut positions: Vec<u32> = (0..n as u32).collect();
                    let mut degrees = vec![0u64; n as usize];
                    for i in 0..twos as usize {
                        let j = rng.gen_range(i..n as usize);
                        positions.swap(i, j);
                        degrees[positions[i] as usize] = 2;
                    }
                    return Ok(degrees);
                }
            }
            Err(Error::SamplingBudget {
                attempts: CONDITIONING_ATTEMPT_CAP,
            })
        }
        _ => {
            let mut degrees = vec![0u64; n as usize];
            for _ in 0..CONDITIONING_ATTEMPT_CAP {
                let mut sum = 0u64;
                let mut ok = true;
                for d in degrees.iter_mut() {
                    *d = offspring.sample_one(rng);
                    sum += *d;
                    if sum > target {
                        ok = false;
                        break;
                    }
                }
                if ok && sum == target {
                    return Ok(degrees);
                }
            }
            Err(Error::SamplingBudget {
                attempts: CONDITIONING_ATTEMPT_CAP,
            })
        }
    }
}

/// Rotate an increment sequence with total -1 so it becomes the unique
/// excursion (partial sums nonnegative before the final step). Returns the
/// rotation offset. Rotation lemma: start right after the first position
/// where the prefix-sum minimum is attained.
pub(crate) fn rotate_to_excursion(degrees: &mut [u64]) -> usize {
    let n = degrees.len();
    let mut prefix = 0i64;
    let mut min = i64::MAX;
    let mut arg = 0usize;
    for (k, &d) in degrees.iter().enumerate() {
        prefix += d as i64 - 1;
        if prefix < min {
            min = prefix;
            arg = k + 1;
        }
    }
    debug_assert_eq!(prefix, -1, "total progeny must be n - 1");
    degrees.rotate_left(arg % n);
    arg % n
}

/// Depths of vertices in preorder, given preorder offspring counts of a
/// valid excursion.
pub(crate) fn depths_from_preorder_degrees(degrees: &[u64]) -> Vec<u32> {
    let mut depths = Vec::with_capacity(degrees.len());
    let mut stack: Vec<u64> = Vec::new(); // children still owed, per ancestor
    for (i, &d) in degrees.iter().enumerate() {
        if i > 0 {
            while *stack.last().expect("excursion keeps an open ancestor") == 0 {
                stack.pop();
            }
            *stack.last_mut().unwrap() -= 1;
        }
        depths.push(stack.len() as u32);
        stack.push(d);
    }
    depths
}

pub(crate) fn cgwt_depths_with<R: Rng>(
    offspring: &OffspringDistribution,
    n: u64,
    rng: &mut R,
) -> Result<Vec<u32>> {
    let mut degrees = conditioned_degrees(offspring, n, rng)?;
    rotate_to_excursion(&mut degrees);
    Ok(depths_from_preorder_degrees(&degrees))
}

/// Random recursive tree on n vertices.
pub fn gen_rrt_depths(n: u64, seed: u64) -> Result<DepthSequence> {
    check_n(n)?;
    Ok(DepthSequence {
        depths: rrt_depths_with(n, &mut stream_rng(seed, 0)),
    })
}

/// Binary search tree built from a uniform random permutation of n keys.
pub fn gen_bst_depths(n: u64, seed: u64) -> Result<DepthSequence> {
    check_n(n)?;
    Ok(DepthSequence {
        depths: bst_depths_with(n, &mut stream_rng(seed, 0)),
    })
}

/// Galton-Watson tree with the given critical offspring law, conditioned on
/// total progeny n.
pub fn gen_cgwt_depths(n: u64, offspring: &OffspringDistribution, seed: u64) -> Result<DepthSequence> {
    check_n(n)?;
    Ok(DepthSequence {
        depths: cgwt_depths_with(offspring, n, &mut stream_rng(seed, 0))?,
    })
}

fn check_n(n: u64) -> Result<()> {
    if n < 1 {
        Err(Error::InvalidSize)
    } else {
        Ok(())
    }
}

/// Exact law of the depth counts mod m, by enumerating every equally likely
/// growth history: (n-1)! attachment sequences for RRT, n! insertion orders
/// for BST. Probabilities are exact rationals summing to one.
pub fn enumerate_exact_mod_counts(
    model: &TreeModel,
    n: u64,
    m: usize,
) -> Result<BTreeMap<Vec<u64>, BigRational>> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    check_n(n)?;
    if n > ENUMERATION_MAX_N {
        return Err(Error::EnumerationBudget {
            n,
            max: ENUMERATION_MAX_N,
        });
    }
    let mut hist: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    let total = match model {
        TreeModel::Rrt => {
            let mut depths = vec![0u32; n as usize];
            enumerate_rrt(&mut depths, 1, m, &mut hist);
            factorial(n - 1)
        }
        TreeModel::Bst => {
            let mut keys: Vec<u32> = (0..n as u32).collect();
            enumerate_permutations(&mut keys, n as usize, m, &mut hist);
            factorial(n)
        }
        TreeModel::Cgwt(_) => {
            return Err(Error::UnsupportedModel(
                "exact enumeration covers uniform-history models only (rrt, bst)".into(),
            ))
        }
    };
    let denom = BigInt::from(total);
    let map: BTreeMap<Vec<u64>, BigRational> = hist
        .into_iter()
        .map(|(k, c)| (k, BigRational::new(BigInt::from(c), denom.clone())))
        .collect();
    let sum: BigRational = map.values().fold(BigRational::zero(), |a, b| a + b);
    assert!(sum.is_one(), "enumeration probabilities must sum to 1");
    Ok(map)
}

pub(crate) fn reduce_depths(depths: &[u32], m: usize) -> Vec<u64> {
    let mut counts = vec![0u64; m];
    for &d in depths {
        counts[d as usize % m] += 1;
    }
    counts
}

fn enumerate_rrt(depths: &mut Vec<u32>, k: usize, m: usize, hist: &mut BTreeMap<Vec<u64>, u64>) {
    if k == depths.len() {
        *hist.entry(reduce_depths(depths, m)).or_insert(0) += 1;
        return;
    }
    for parent in 0..k {
        depths[k] = depths[parent] + 1;
        enumerate_rrt(depths, k + 1, m, hist);
    }
}

// Heap's algorithm; every permutation of keys feeds one BST insertion order.
fn enumerate_permutations(
    keys: &mut Vec<u32>,
    k: usize,
    m: usize,
    hist: &mut BTreeMap<Vec<u64>, u64>,
) {
    if k <= 1 {
        let depths = bst_depths_of_insertion_order(keys);
        *hist.entry(reduce_depths(&depths, m)).or_insert(0) += 1;
        return;
    }
    for i in 0..k - 1 {
        enumerate_permutations(keys, k - 1, m, hist);
        if k % 2 == 0 {
            keys.swap(i, k - 1);
        } else {
            keys.swap(0, k - 1);
        }
    }
    enumerate_permutations(keys, k - 1, m, hist);
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}
