//! The exact matrix data attached to a chord system: adjacency and
//! bilinear forms, Seifert matrix, monodromy, and the Coxeter element
//! computed along two independent routes.

use num::bigint::BigInt;
use num::One;

use crate::chord::{ChordSystem, SimpleGraph};
use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::Result;

/// 0/1 adjacency matrix of a graph in its vertex order.
pub fn adjacency(g: &SimpleGraph) -> IntMatrix {
    IntMatrix::from_fn(g.vertex_count(), |i, j| g.is_adjacent(i, j) as i64)
}

/// Symmetric form with diagonal 2 and linking numbers off the diagonal.
/// For Coxeter-type systems this equals `2I - A` with `A` the incidence
/// adjacency matrix.
pub fn bilinear_form(s: &ChordSystem) -> IntMatrix {
    let n = s.n();
    IntMatrix::from_fn(n, |i, j| {
        if i == j {
            2
        } else {
            s.linking_number(i, j).expect("valid indices")
        }
    })
}

/// Upper unitriangular Seifert matrix: diagonal 1, `M[i][j]` the linking
/// number for `i < j`, zero below. Equals `I - A+` for Coxeter-type
/// systems.
pub fn seifert_matrix(s: &ChordSystem) -> IntMatrix {
    let n = s.n();
    IntMatrix::from_fn(n, |i, j| {
        if i == j {
            1
        } else if i < j {
            s.linking_number(i, j).expect("valid indices")
        } else {
            0
        }
    })
}

/// `M + M^t`; for a Seifert matrix this is the symmetrized Seifert form.
pub fn symmetrize(m: &IntMatrix) -> IntMatrix {
    m.add(&m.transpose())
}

/// Homological monodromy `h* = M^{-1} M^t` of the fibered link with
/// Seifert matrix `M`. The inverse is taken by back substitution against
/// the unitriangular `M`, so everything stays in the integers.
pub fn monodromy(m: &IntMatrix) -> Result<IntMatrix> {
    Ok(m.unitriangular_inverse()?.mul(&m.transpose()))
}

/// Reflection matrix of the `i`-th simple generator acting on the basis:
/// `s_i(e_j) = e_j - <e_i, e_j> e_i`.
pub fn coxeter_generator(b: &IntMatrix, i: usize) -> Result<IntMatrix> {
    check_form(b)?;
    if i >= b.dim() {
        return Err(Error::IndexOutOfRange { index: i, count: b.dim() });
    }
    let n = b.dim();
    let mut s = IntMatrix::identity(n);
    for j in 0..n {
        s[(i, j)] -= b[(i, j)].clone();
    }
    Ok(s)
}

/// Coxeter element of the form `B`, computed two ways with equality
/// asserted: the product `s_1 ... s_n` of the simple reflections, and
/// `-U^{-1} U^t` with `U = I + B+`. Disagreement signals a bug.
pub fn coxeter_element(b: &IntMatrix) -> Result<IntMatrix> {
    check_form(b)?;
    let n = b.dim();
    let mut product = IntMatrix::identity(n);
    for i in 0..n {
        product = product.mul(&coxeter_generator(b, i)?);
    }
    let u = IntMatrix::identity(n).add(&b.strict_upper());
    let howlett = u.unitriangular_inverse()?.mul(&u.transpose()).neg();
    if product != howlett {
        return Err(Error::TheoremViolation(
            "generator product and -U^{-1}U^t disagree".into(),
        ));
    }
    Ok(product)
}

fn check_form(b: &IntMatrix) -> Result<()> {
    if !b.is_symmetric() {
        return Err(Error::MalformedForm("matrix is not symmetric".into()));
    }
    let two = BigInt::one() + BigInt::one();
    if (0..b.dim()).any(|i| b[(i, i)] != two) {
        return Err(Error::MalformedForm("diagonal must be 2".into()));
    }
    Ok(())
}
