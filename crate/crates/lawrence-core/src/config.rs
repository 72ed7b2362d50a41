//! Vector configurations: an indexed multiset of nonzero integer vectors
//! that generate the ambient lattice, with primitive decompositions.

use crate::error::Error;
use crate::matrix::IntMatrix;
use num::integer::Integer;
use num::traits::{One, Zero};
use num::BigInt;

/// An indexed configuration of `n` nonzero vectors in a rank-`d` lattice.
/// Duplicates are permitted and distinguished by index. Each vector is
/// stored with its primitive decomposition `b_i = a_i * v_i` where `v_i`
/// is primitive and `a_i` is a positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    rank: usize,
    vectors: Vec<Vec<BigInt>>,
    mults: Vec<BigInt>,
    prims: Vec<Vec<BigInt>>,
}

impl Config {
    /// Validate raw input: rejects empty configurations, zero vectors, and
    /// configurations whose vectors do not generate the lattice as an
    /// abelian group (checked by Smith normal form divisors).
    pub fn validate(rank: usize, vectors: Vec<Vec<BigInt>>) -> Result<Config, Error> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if vectors.is_empty() {
            return Err(Error::EmptyConfig);
        }
        for (i, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), rank, "vector b_{} has wrong dimension", i + 1);
            if v.iter().all(|e| e.is_zero()) {
                return Err(Error::ZeroVector { index: i + 1 });
            }
        }
        let m = IntMatrix::from_cols(&vectors, rank);
        let divisors = m.elementary_divisors();
        if divisors.len() != rank || divisors.iter().any(|d| !d.is_one()) {
            return Err(Error::NotGenerating);
        }
        Ok(Config::new_unchecked(rank, vectors))
    }

    pub fn validate_i64(rank: usize, vectors: &[Vec<i64>]) -> Result<Config, Error> {
        let converted = vectors
            .iter()
            .map(|v| v.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        Config::validate(rank, converted)
    }

    /// Construct without the generation check. Used for quotient
    /// configurations, which generate their lattice by construction; also
    /// admits the rank-0 empty configuration arising from maximal flats.
    pub(crate) fn new_unchecked(rank: usize, vectors: Vec<Vec<BigInt>>) -> Config {
        let mut mults = Vec::with_capacity(vectors.len());
        let mut prims = Vec::with_capacity(vectors.len());
        for v in &vectors {
            let mut g = BigInt::zero();
            for e in v {
                g = g.gcd(e);
            }
            debug_assert!(!g.is_zero(), "zero vector in configuration");
            let prim: Vec<BigInt> = v.iter().map(|e| e / &g).collect();
            mults.push(g);
            prims.push(prim);
        }
        Config {
            rank,
            vectors,
            mults,
            prims,
        }
    }

    /// Lattice rank d.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of vectors n.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, i: usize) -> &[BigInt] {
        &self.vectors[i]
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    /// Multiplier a_i of the primitive decomposition b_i = a_i v_i.
    pub fn mult(&self, i: usize) -> &BigInt {
        &self.mults[i]
    }

    /// Primitive vector v_i of the decomposition b_i = a_i v_i.
    pub fn prim(&self, i: usize) -> &[BigInt] {
        &self.prims[i]
    }

    /// Sum of the multipliers a_i.
    pub fn mult_sum(&self) -> BigInt {
        self.mults.iter().sum()
    }

    /// The d x n matrix whose columns are the b_i.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_cols(&self.vectors, self.rank)
    }

    /// Replace b_i by -b_i wherever `flips[i]` is set. Negation preserves
    /// the generated group, so the result is valid whenever `self` is.
    pub fn flip_orientations(&self, flips: &[bool]) -> Config {
        assert_eq!(flips.len(), self.len(), "flip mask length mismatch");
        let vectors = self
            .vectors
            .iter()
            .zip(flips)
            .map(|(v, &f)| {
                if f {
                    v.iter().map(|e| -e).collect()
                } else {
                    v.clone()
                }
            })
            .collect();
        Config::new_unchecked(self.rank, vectors)
    }
}
