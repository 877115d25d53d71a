//! Dense exact matrices over the integers and rationals.
//!
//! Everything on the exact path runs in arbitrary precision: the
//! Faddeev-LeVerrier intermediates and unitriangular inverses grow
//! quickly even at modest dimensions.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::IntPolynomial;
use crate::Result;

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

/// Definiteness verdict for a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    PositiveDefinite,
    /// Positive semidefinite and singular.
    PositiveSemidefinite,
    Indefinite,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, data: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = BigInt::from(f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must be square");
        Self::from_fn(n, |i, j| rows[i][j])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Entries with `i < j` kept, all others zeroed.
    pub fn strict_upper(&self) -> IntMatrix {
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.n).all(|i| {
            self[(i, i)].is_one() && (0..i).all(|j| self[(i, j)].is_zero())
        })
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let t = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self[(i, i)]).sum()
    }

    /// Inverse of an upper unitriangular matrix by back substitution;
    /// stays in the integers.
    pub fn unitriangular_inverse(&self) -> Result<IntMatrix> {
        if !self.is_upper_unitriangular() {
            return Err(Error::NotUnitriangular);
        }
        let n = self.n;
        let mut inv = Self::identity(n);
        // column by column: solve U x = e_j
        for j in 0..n {
            for i in (0..n).rev() {
                let mut acc = if i == j { BigInt::one() } else { BigInt::zero() };
                for k in i + 1..n {
                    acc -= &self[(i, k)] * &inv[(k, j)];
                }
                inv[(i, j)] = acc;
            }
        }
        Ok(inv)
    }

    /// Monic characteristic polynomial `det(tI - X)` with exact integer
    /// coefficients, by the Faddeev-LeVerrier recurrence.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n;
        // p(t) = t^n + c_1 t^{n-1} + ... + c_n
        let mut coeffs_desc = vec![BigInt::one()];
        let mut aux = Self::identity(n);
        for k in 1..=n {
            let m = self.mul(&aux);
            let ck = -m.trace() / BigInt::from(k as i64); // exact
            aux = m;
            for i in 0..n {
                aux[(i, i)] += &ck;
            }
            coeffs_desc.push(ck);
        }
        coeffs_desc.reverse();
        IntPolynomial::new(coeffs_desc)
    }

    /// Exact definiteness of a symmetric matrix via rational symmetric
    /// elimination. A zero pivot whose whole residual row vanishes marks
    /// the matrix singular; a zero pivot with a nonzero residual row, or
    /// a negative pivot, makes it indefinite.
    pub fn definiteness(&self) -> Result<Definiteness> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.n;
        let mut a: Vec<BigRational> = self
            .data
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        let at = |a: &[BigRational], i: usize, j: usize| a[i * n + j].clone();
        let mut singular = false;
        for k in 0..n {
            let pivot = at(&a, k, k);
            if pivot.is_negative() {
                return Ok(Definiteness::Indefinite);
            }
            if pivot.is_zero() {
                if (k + 1..n).any(|j| !at(&a, k, j).is_zero()) {
                    return Ok(Definiteness::Indefinite);
                }
                singular = true;
                continue;
            }
            for i in k + 1..n {
                let factor = at(&a, i, k) / pivot.clone();
                for j in k..n {
                    let sub = &factor * at(&a, k, j);
                    a[i * n + j] -= sub;
                }
            }
        }
        Ok(if singular {
            Definiteness::PositiveSemidefinite
        } else {
            Definiteness::PositiveDefinite
        })
    }

    /// Lossy view for display and serialization; errors if an entry
    /// does not fit in an `i64`.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        use num::ToPrimitive;
        self.data
            .chunks(self.n)
            .map(|row| {
                row.iter()
                    .map(|x| {
                        x.to_i64().ok_or_else(|| {
                            Error::InvalidArgument(format!("entry {x} exceeds i64"))
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.n + j]
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self[(i, j)].to_string())?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
