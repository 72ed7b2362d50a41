//! Lattice points strictly inside the open parallelepiped spanned by an
//! independent set, with their exact coefficient vectors.

use crate::config::Config;
use crate::matrix::IntMatrix;
use crate::matroid::IndepSet;
use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational};

/// A lattice point `w` of the open box of `F`, together with the unique
/// rational coefficients `0 < a_j < 1` expressing `w` over the vectors
/// of `F` (in index order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxPoint {
    w: Vec<BigInt>,
    coefficients: Vec<BigRational>,
}

impl BoxPoint {
    pub fn point(&self) -> &[BigInt] {
        &self.w
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }
}

/// Iterate integer points of the axis box `[lo_k, hi_k]` in lexicographic
/// order, calling `visit` with each point.
pub(crate) fn enumerate_box<FN: FnMut(&[BigInt])>(lo: &[BigInt], hi: &[BigInt], mut visit: FN) {
    let dim = lo.len();
    if dim == 0 {
        visit(&[]);
        return;
    }
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut current: Vec<BigInt> = lo.to_vec();
    loop {
        visit(&current);
        let mut k = dim;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if current[k] < hi[k] {
                current[k] += BigInt::one();
                for j in k + 1..dim {
                    current[j] = lo[j].clone();
                }
                break;
            }
        }
    }
}

/// All lattice points strictly inside the open parallelepiped spanned by
/// `F`, each with its coefficient vector. `F = {}` yields exactly the
/// origin with no coefficients. Candidates are drawn from the integer
/// bounding box of the closed parallelepiped and kept by exact rational
/// comparison against the open interval (0, 1).
pub fn box_points(c: &Config, f: &IndepSet) -> Vec<BoxPoint> {
    let d = c.rank();
    if f.dim() == 0 {
        return vec![BoxPoint {
            w: vec![BigInt::zero(); d],
            coefficients: Vec::new(),
        }];
    }
    let cols: Vec<Vec<BigInt>> = f.indices().iter().map(|&i| c.vector(i).to_vec()).collect();
    let mat = IntMatrix::from_cols(&cols, d);
    let mut lo = vec![BigInt::zero(); d];
    let mut hi = vec![BigInt::zero(); d];
    for col in &cols {
        for (k, e) in col.iter().enumerate() {
            if e.is_negative() {
                lo[k] += e;
            } else {
                hi[k] += e;
            }
        }
    }
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut out = Vec::new();
    enumerate_box(&lo, &hi, |w| {
        let rhs: Vec<BigRational> = w.iter().map(|e| BigRational::from(e.clone())).collect();
        if let Some(alpha) = mat.solve_rational(&rhs) {
            if alpha.iter().all(|a| *a > zero && *a < one) {
                out.push(BoxPoint {
                    w: w.to_vec(),
                    coefficients: alpha,
                });
            }
        }
    });
    out
}

/// Number of lattice points of the open box of `F`.
pub fn box_count(c: &Config, f: &IndepSet) -> usize {
    box_points(c, f).len()
}
