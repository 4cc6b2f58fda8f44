//! Dense polynomials over arbitrary-precision rationals, just enough for
//! inverting a unit modulo `1 + x + ... + x^{m-1}` with the extended
//! Euclidean algorithm. Degrees stay below ~100, so no care is taken to be
//! fast, only to be exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    /// Polynomial from sparse (exponent, coefficient) terms; exponents may repeat.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|&(e, _)| e).max().unwrap_or(0);
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for &(e, c) in terms {
            coeffs[e] += rat(c);
        }
        Poly::from_coeffs(coeffs)
    }

    /// 1 + x + ... + x^{m-1}, whose roots are the nontrivial m-th roots of unity.
    pub fn all_ones(m: usize) -> Self {
        Poly(vec![Rat::one(); m])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Evaluation at x = 1 (sum of coefficients).
    pub fn eval_one(&self) -> Rat {
        self.0.iter().fold(Rat::zero(), |a, c| a + c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(vec![]);
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|a| a * c).collect())
    }

    /// Remainder of self divided by divisor (divisor nonzero).
    pub fn rem(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero());
        let mut r = self.clone();
        let dlead = divisor.0.last().unwrap().clone();
        while !r.is_zero() && r.degree() >= divisor.degree() {
            let shift = r.degree() - divisor.degree();
            let factor = r.0.last().unwrap() / &dlead;
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(divisor.0.iter().map(|c| c * &factor));
            r = r.sub(&Poly::from_coeffs(sub));
        }
        r
    }

    /// Inverse of self modulo `modulus`, when gcd(self, modulus) is constant.
    pub fn invert_mod(&self, modulus: &Poly) -> Option<Poly> {
        // extended Euclid: maintain r = u * self (mod modulus)
        let mut r0 = modulus.clone();
        let mut r1 = self.rem(modulus);
        let mut u0 = Poly(vec![]);
        let mut u1 = Poly(vec![Rat::one()]);
        while !r1.is_zero() && r1.degree() > 0 {
            let (q, r2) = div_rem(&r0, &r1);
            let u2 = u0.sub(&q.mul(&u1));
            r0 = r1;
            r1 = r2;
            u0 = u1;
            u1 = u2;
        }
        if r1.is_zero() {
            return None; // gcd has positive degree: not a unit
        }
        let c = r1.coeff(0);
        debug_assert!(c.abs() > Rat::zero());
        Some(u1.scale(&(Rat::one() / c)).rem(modulus))
    }
}

fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_zero());
    let mut r = a.clone();
    let mut q = vec![Rat::zero(); a.0.len().saturating_sub(b.0.len()) + 1];
    let blead = b.0.last().unwrap().clone();
    while !r.is_zero() && r.degree() >= b.degree() {
        let shift = r.degree() - b.degree();
        let factor = r.0.last().unwrap() / &blead;
        q[shift] = factor.clone();
        let mut sub = vec![Rat::zero(); shift];
        sub.extend(b.0.iter().map(|c| c * &factor));
        r = r.sub(&Poly::from_coeffs(sub));
    }
    (Poly::from_coeffs(q), r)
}
