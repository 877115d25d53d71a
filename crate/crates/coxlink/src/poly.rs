//! Integer-coefficient polynomials, cyclotomic factorization, and the
//! canonical form used to compare characteristic polynomials.
//!
//! Characteristic polynomials are compared up to the equivalence
//! `p(t) ~ ±p(±t)`: Mahler measure, reciprocality and root moduli are
//! all invariant under it, and the literature freely mixes the two sign
//! conventions for the Alexander polynomial.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Polynomial with integer coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Constant-first coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::from_i64(&[0])
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// Lehmer's polynomial, the degree-10 reciprocal polynomial with the
    /// smallest known Mahler measure above 1.
    pub fn lehmer() -> Self {
        Self::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeffs_i64(&self) -> Vec<i64> {
        use num::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_i64().expect("coefficient fits i64")).collect()
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division by a monic (up to sign) divisor.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        if divisor.is_zero() {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        }
        let lc = divisor.leading().clone();
        if !lc.is_one() && lc != -BigInt::one() {
            return Err(Error::InvalidArgument("divisor must be monic up to sign".into()));
        }
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        if self.degree() < dd || self.is_zero() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lc;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[k + i] -= t;
            }
            quot[k] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// True iff `t^d p(1/t) = ±p(t)` coefficientwise.
    pub fn is_reciprocal(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("zero polynomial".into()));
        }
        let rev: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        let neg: Vec<BigInt> = rev.iter().map(|c| -c.clone()).collect();
        Ok(rev == self.coeffs || neg == self.coeffs)
    }

    /// Substitutes `t -> -t`.
    pub fn compose_neg(&self) -> IntPolynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn negate(&self) -> IntPolynomial {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    /// Representative of the class `{±p(±t)}`: among the variants with a
    /// positive leading coefficient, the lexicographically least
    /// coefficient vector (constant term first).
    pub fn canonical(&self) -> IntPolynomial {
        let mut variants = vec![self.clone(), self.compose_neg()];
        for v in variants.iter_mut() {
            if v.leading().is_negative() {
                *v = v.negate();
            }
        }
        variants.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        variants.into_iter().next().unwrap()
    }

    /// Equality up to `p(t) ~ ±p(±t)`.
    pub fn equivalent(&self, other: &IntPolynomial) -> bool {
        self.canonical() == other.canonical()
    }

    /// The `d`-th cyclotomic polynomial, by dividing `x^d - 1` by the
    /// cyclotomic polynomials of the proper divisors of `d`.
    pub fn cyclotomic(d: u32) -> IntPolynomial {
        assert!(d >= 1);
        let mut coeffs = vec![BigInt::zero(); d as usize + 1];
        coeffs[0] = -BigInt::one();
        coeffs[d as usize] = BigInt::one();
        let mut p = IntPolynomial::new(coeffs);
        for e in 1..d {
            if d % e == 0 {
                let (q, r) = p.div_rem(&Self::cyclotomic(e)).unwrap();
                debug_assert!(r.is_zero());
                p = q;
            }
        }
        p
    }

    /// Divides out every cyclotomic factor (with multiplicity). Returns
    /// the factors as `(d, multiplicity)` pairs together with the
    /// cyclotomic-free remainder. Since Euler's totient satisfies
    /// `phi(d) >= sqrt(d/2)`, factors of a degree-`m` polynomial have
    /// `d <= 2 m^2`.
    pub fn peel_cyclotomic(&self) -> (Vec<(u32, u32)>, IntPolynomial) {
        let mut rem = self.clone();
        let mut factors = Vec::new();
        if rem.is_zero() {
            return (factors, rem);
        }
        let bound = 2 * (self.degree() as u32).pow(2) + 1;
        for d in 1..=bound {
            if totient(d) as usize > rem.degree() {
                continue;
            }
            let phi = Self::cyclotomic(d);
            let mut mult = 0u32;
            loop {
                let (q, r) = rem.div_rem(&phi).unwrap();
                if r.is_zero() && q.degree() + phi.degree() == rem.degree() {
                    rem = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                factors.push((d, mult));
            }
            if rem.degree() == 0 {
                break;
            }
        }
        (factors, rem)
    }

    /// True iff the polynomial is `±` a product of cyclotomic
    /// polynomials, i.e. all roots are roots of unity (Kronecker).
    pub fn is_cyclotomic_product(&self) -> bool {
        if self.is_zero() || self.degree() == 0 {
            return false;
        }
        let (_, rem) = self.peel_cyclotomic();
        rem.degree() == 0
    }
}

fn totient(mut d: u32) -> u32 {
    let mut result = d;
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            while d % p == 0 {
                d /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(self.degree() == 0 && i == 0) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
