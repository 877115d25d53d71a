//! Numerics on integer polynomials: simultaneous root finding, Mahler
//! measure, spectral radius, Coxeter-system classification and the
//! Lehmer gate.
//!
//! Roots-of-unity questions are decided exactly by cyclotomic
//! factorization, never by floating point alone: a modulus tolerance
//! cannot separate Salem-like roots from the unit circle.

use std::sync::OnceLock;

use num::ToPrimitive;
use num_complex::Complex64;

use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::poly::IntPolynomial;
use crate::Result;

/// Default root-finder tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Iteration cap for the simultaneous iteration.
const MAX_ITERATIONS: usize = 200;
/// Cluster radius used to merge numerically coincident roots.
const CLUSTER_RADIUS: f64 = 1e-5;

/// Approximate complex roots with multiplicities.
#[derive(Debug, Clone)]
pub struct ComplexRootSet {
    /// `(root, multiplicity)`; multiplicities sum to the degree.
    pub roots: Vec<(Complex64, usize)>,
    /// `max |p(root)|` over the returned roots.
    pub residual_bound: f64,
}

/// Howlett/Coxeter classification of a Coxeter element's spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Spherical,
    Affine,
    Higher,
}

/// Outcome of comparing a Mahler measure against Lehmer's polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GateVerdict {
    /// Measure is exactly 1 (confirmed cyclotomic).
    Trivial,
    /// Measure is at least the Lehmer measure (within tolerance).
    Pass,
    /// Below the Lehmer bound; on a genuine monodromy polynomial this
    /// signals an implementation bug.
    Fail,
}

/// All complex roots of `p` by Aberth-Ehrlich simultaneous iteration.
///
/// Deterministic: initial guesses sit on a circle whose radius comes
/// from the Cauchy coefficient bound. Near-coincident converged roots
/// are clustered into multiple roots.
pub fn roots(p: &IntPolynomial, tol: f64) -> Result<ComplexRootSet> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::InvalidArgument("roots need degree >= 1".into()));
    }
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().ok_or_else(|| Error::InvalidArgument("coefficient overflow".into())))
        .collect::<Result<_>>()?;
    let deg = p.degree();
    let lead = coeffs[deg];
    // Cauchy bound: all roots lie within 1 + max |a_i / a_n|
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let eval = |z: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            v = v * z + c;
        }
        v
    };
    let eval_deriv = |z: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        for (i, &c) in coeffs.iter().enumerate().skip(1).rev() {
            v = v * z + c * i as f64;
        }
        v
    };
    // deterministic spread; the 0.4 offset avoids real-axis symmetry traps
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.4) / deg as f64;
            Complex64::from_polar(radius * 0.8, theta)
        })
        .collect();
    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for k in 0..deg {
            let pk = eval(z[k]);
            let dk = eval_deriv(z[k]);
            let newton = if dk.norm() > 0.0 { pk / dk } else { pk };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff.norm() > 1e-300 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
            z[k] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }
    // Newton polishing for well-separated roots
    for k in 0..deg {
        let isolated = (0..deg).all(|j| j == k || (z[k] - z[j]).norm() > 10.0 * CLUSTER_RADIUS);
        if isolated {
            for _ in 0..3 {
                let d = eval_deriv(z[k]);
                if d.norm() > 1e-300 {
                    let step = eval(z[k]) / d;
                    z[k] -= step;
                }
            }
        }
    }
    let residual_bound = z.iter().map(|&r| eval(r).norm()).fold(0.0, f64::max);
    if !converged && residual_bound > tol.max(1e-8) * (1.0 + radius.powi(deg as i32)) {
        return Err(Error::RootFinder { residual: residual_bound });
    }
    // cluster coincident roots into multiplicities
    let mut used = vec![false; deg];
    let mut clustered = Vec::new();
    for k in 0..deg {
        if used[k] {
            continue;
        }
        let mut members = vec![z[k]];
        used[k] = true;
        for j in k + 1..deg {
            if !used[j] && (z[j] - z[k]).norm() < CLUSTER_RADIUS {
                members.push(z[j]);
                used[j] = true;
            }
        }
        let center = members.iter().sum::<Complex64>() / members.len() as f64;
        clustered.push((center, members.len()));
    }
    Ok(ComplexRootSet { roots: clustered, residual_bound })
}

/// Mahler measure `|lc| * prod max(1, |root|)`.
///
/// Cyclotomic factors are divided out exactly first, so roots of unity
/// contribute exactly 1; only the cyclotomic-free part is measured
/// numerically.
pub fn mahler_measure(p: &IntPolynomial, tol: f64) -> Result<f64> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::InvalidArgument("mahler measure needs degree >= 1".into()));
    }
    let (_, rem) = p.peel_cyclotomic();
    let lead = p
        .leading()
        .to_f64()
        .ok_or_else(|| Error::InvalidArgument("leading coefficient overflow".into()))?
        .abs();
    if rem.degree() == 0 {
        // fully cyclotomic up to the leading constant
        return Ok(lead.max(1.0));
    }
    let rs = roots(&rem, tol)?;
    let mut mu = lead;
    for &(r, mult) in &rs.roots {
        mu *= r.norm().max(1.0).powi(mult as i32);
    }
    Ok(mu)
}

/// Largest root modulus of the characteristic polynomial.
pub fn spectral_radius(x: &IntMatrix, tol: f64) -> Result<f64> {
    let p = x.char_poly();
    if p.degree() == 0 {
        return Err(Error::InvalidArgument("empty matrix".into()));
    }
    let (cyclo, rem) = p.peel_cyclotomic();
    let mut radius: f64 = if cyclo.is_empty() { 0.0 } else { 1.0 };
    if rem.degree() >= 1 {
        let rs = roots(&rem, tol)?;
        for &(r, _) in &rs.roots {
            radius = radius.max(r.norm());
        }
    }
    Ok(radius)
}

/// Classifies a Coxeter element's characteristic polynomial: spherical
/// iff all eigenvalues are roots of unity other than 1; affine iff 1 is
/// an eigenvalue and all moduli are 1; higher otherwise. Both
/// roots-of-unity tests are exact cyclotomic factorizations.
pub fn classify(q_c: &IntPolynomial) -> Result<Classification> {
    if q_c.is_zero() || q_c.degree() == 0 {
        return Err(Error::InvalidArgument("classification needs degree >= 1".into()));
    }
    if !q_c.is_cyclotomic_product() {
        return Ok(Classification::Higher);
    }
    let one = num::BigInt::from(1);
    Ok(if q_c.eval(&one) == num::BigInt::from(0) {
        Classification::Affine
    } else {
        Classification::Spherical
    })
}

/// Mahler measure of Lehmer's polynomial, computed once by the resident
/// root finder (about 1.17628).
pub fn lehmer_measure() -> f64 {
    static MEASURE: OnceLock<f64> = OnceLock::new();
    *MEASURE.get_or_init(|| {
        mahler_measure(&IntPolynomial::lehmer(), DEFAULT_TOL).expect("Lehmer measure computes")
    })
}

/// Checks a monodromy characteristic polynomial against the Lehmer
/// bound: `trivial` if the measure is exactly 1 (cyclotomic), `pass` if
/// it is at least the Lehmer measure minus `tol`, `fail` otherwise.
pub fn lehmer_gate(p: &IntPolynomial, tol: f64) -> Result<GateVerdict> {
    if p.is_cyclotomic_product() {
        return Ok(GateVerdict::Trivial);
    }
    let mu = mahler_measure(p, DEFAULT_TOL.min(tol))?;
    if mu >= lehmer_measure() - tol {
        Ok(GateVerdict::Pass)
    } else {
        Ok(GateVerdict::Fail)
    }
}
