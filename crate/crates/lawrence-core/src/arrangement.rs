//! Simple weighted co-oriented hyperplane arrangements: cell enumeration by
//! sign vectors, bounded-cell h-vectors, restriction to flats, and
//! region-count identities.

use crate::config::Config;
use crate::error::Error;
use crate::feas::{LinearSystem, RatVector};
use crate::matrix::IntMatrix;
use crate::matroid::{quotient_config, IndepSet};
use crate::poly::IntPolynomial;
use crate::Guards;
use num::traits::{One, Zero};
use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Position of a cell relative to one hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

/// A realizable sign vector of the arrangement, with its dimension,
/// boundedness flag, and an interior witness point.
#[derive(Clone, Debug)]
pub struct Cell {
    sign: Vec<Sign>,
    dim: usize,
    bounded: bool,
    witness: RatVector,
}

impl Cell {
    pub fn sign(&self) -> &[Sign] {
        &self.sign
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bounded(&self) -> bool {
        self.bounded
    }

    pub fn witness(&self) -> &RatVector {
        &self.witness
    }

    pub fn sign_string(&self) -> String {
        self.sign.iter().map(|s| s.as_char()).collect()
    }
}

/// A weighted co-oriented hyperplane arrangement: hyperplanes
/// `<u, b_i> = r_i` with the configuration vectors as co-normals.
/// Constructed only in verified-simple form.
#[derive(Clone, Debug)]
pub struct Arrangement {
    config: Config,
    offsets: Vec<BigRational>,
}

impl Arrangement {
    /// Wrap explicit offsets, verifying simplicity.
    pub fn new(config: Config, offsets: Vec<BigRational>) -> Result<Arrangement, Error> {
        if offsets.len() != config.len() {
            return Err(Error::OffsetCount {
                expected: config.len(),
                got: offsets.len(),
            });
        }
        if !is_simple(&config, &offsets) {
            return Err(Error::NotSimple);
        }
        Ok(Arrangement { config, offsets })
    }

    pub fn from_integer_offsets(config: Config, offsets: &[i64]) -> Result<Arrangement, Error> {
        let rats = offsets
            .iter()
            .map(|&r| BigRational::from(BigInt::from(r)))
            .collect();
        Arrangement::new(config, rats)
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn offsets(&self) -> &[BigRational] {
        &self.offsets
    }

    /// Sign of `<u, b_i> - r_i` at a point of the ambient dual space.
    pub fn sign_at(&self, u: &RatVector, i: usize) -> Sign {
        let v = u.dot_int(self.config.vector(i));
        match v.cmp(&self.offsets[i]) {
            std::cmp::Ordering::Less => Sign::Neg,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Pos,
        }
    }
}

/// Draw integer offsets from a seeded generator, widening the range each
/// round, until the arrangement is simple. Reproducible for a fixed
/// `(config, seed)` pair.
pub fn choose_offsets(c: &Config, seed: u64) -> Result<Arrangement, Error> {
    const ROUNDS: u32 = 64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = c.len();
    let mut k: i64 = (2 * n.max(1)) as i64;
    for _ in 0..ROUNDS {
        let offsets: Vec<BigRational> = (0..n)
            .map(|_| BigRational::from(BigInt::from(rng.random_range(-k..=k))))
            .collect();
        if is_simple(c, &offsets) {
            return Ok(Arrangement {
                config: c.clone(),
                offsets,
            });
        }
        k = k.saturating_mul(2);
    }
    Err(Error::RetryExhausted { rounds: ROUNDS })
}

/// Simplicity: any `l` hyperplanes meet in the empty set or in codimension
/// `l`. Equivalently, every dependent index subset must give an
/// inconsistent equation system; it suffices to check subsets of size up
/// to rank + 1, since every dependent set contains a circuit.
pub fn is_simple(c: &Config, offsets: &[BigRational]) -> bool {
    fn check(
        c: &Config,
        offsets: &[BigRational],
        subset: &mut Vec<usize>,
        start: usize,
        left: usize,
    ) -> bool {
        if subset.len() >= 2 {
            let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| c.vector(i).to_vec()).collect();
            let coeff_rank = IntMatrix::from_rows(&rows, c.rank()).rank();
            if coeff_rank < subset.len() {
                // dependent: the system must be inconsistent
                let aug: Vec<Vec<BigInt>> = subset
                    .iter()
                    .map(|&i| {
                        let den = offsets[i].denom();
                        let mut row: Vec<BigInt> = c.vector(i).iter().map(|e| e * den).collect();
                        row.push(offsets[i].numer().clone());
                        row
                    })
                    .collect();
                let aug_rank = IntMatrix::from_rows(&aug, c.rank() + 1).rank();
                // inconsistent subsystems stay inconsistent in supersets
                return aug_rank > coeff_rank;
            }
        }
        if left == 0 {
            return true;
        }
        for i in start..c.len() {
            subset.push(i);
            let ok = check(c, offsets, subset, i + 1, left - 1);
            subset.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    let max_size = (c.rank() + 1).min(c.len());
    check(c, offsets, &mut Vec::new(), 0, max_size)
}

fn decode_sign_vector(mut index: u64, n: usize) -> Vec<Sign> {
    let mut sign = vec![Sign::Neg; n];
    for slot in sign.iter_mut().rev() {
        *slot = match index % 3 {
            0 => Sign::Neg,
            1 => Sign::Zero,
            _ => Sign::Pos,
        };
        index /= 3;
    }
    sign
}

fn cell_system(arr: &Arrangement, sign: &[Sign]) -> LinearSystem {
    let d = arr.config.rank();
    let mut sys = LinearSystem::new(d);
    for (i, s) in sign.iter().enumerate() {
        let row = arr.config.vector(i).to_vec();
        let rhs = arr.offsets[i].clone();
        match s {
            Sign::Zero => sys.push_eq(row, rhs),
            Sign::Pos => sys.push_gt(row, rhs),
            Sign::Neg => sys.push_lt(row, rhs),
        }
    }
    sys
}

/// The recession cone of a cell is trivial iff no nonzero direction
/// satisfies the relaxed sign conditions; nonzero is enforced through a
/// normalization `sum of (+-1) y_k = 1` over all sign patterns.
fn cell_is_bounded(arr: &Arrangement, sign: &[Sign]) -> bool {
    let d = arr.config.rank();
    if d == 0 {
        return true;
    }
    let mut recession = LinearSystem::new(d);
    for (i, s) in sign.iter().enumerate() {
        let row = arr.config.vector(i).to_vec();
        match s {
            Sign::Zero => recession.push_eq(row, BigRational::zero()),
            Sign::Pos => recession.push_ge(row, BigRational::zero()),
            Sign::Neg => recession.push_le(row, BigRational::zero()),
        }
    }
    for pattern in 0u64..(1 << d) {
        let mut sys = recession.clone();
        let coeffs: Vec<BigInt> = (0..d)
            .map(|k| {
                if pattern >> k & 1 == 1 {
                    BigInt::from(-1)
                } else {
                    BigInt::one()
                }
            })
            .collect();
        sys.push_eq(coeffs, BigRational::one());
        if sys.feasible().is_some() {
            return false;
        }
    }
    true
}

/// All realizable sign vectors with dimension, boundedness, and witness,
/// sorted by sign vector. Sign vectors with more zeros than the rank are
/// skipped: under verified simplicity their equality subsystems are
/// inconsistent.
pub fn enumerate_cells(arr: &Arrangement, guards: &Guards) -> Result<Vec<Cell>, Error> {
    let n = arr.config.len();
    let d = arr.config.rank();
    if n > guards.max_signvectors {
        return Err(Error::SizeGuard {
            what: "sign-vector enumeration",
            limit: guards.max_signvectors as u64,
            requested: n as u64,
        });
    }
    let total = 3u64.pow(n as u32);
    let mut cells: Vec<Cell> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let sign = decode_sign_vector(idx, n);
            let zeros = sign.iter().filter(|&&s| s == Sign::Zero).count();
            if zeros > d {
                return None;
            }
            let witness = cell_system(arr, &sign).feasible()?;
            let dim = d - zeros;
            debug_assert_eq!(
                {
                    let rows: Vec<Vec<BigInt>> = sign
                        .iter()
                        .enumerate()
                        .filter(|&(_, &s)| s == Sign::Zero)
                        .map(|(i, _)| arr.config.vector(i).to_vec())
                        .collect();
                    IntMatrix::from_rows(&rows, d).rank()
                },
                zeros,
                "simplicity: zero sets of nonempty cells are independent"
            );
            let bounded = cell_is_bounded(arr, &sign);
            Some(Cell {
                sign,
                dim,
                bounded,
                witness,
            })
        })
        .collect();
    cells.sort_by(|a, b| a.sign.cmp(&b.sign));
    Ok(cells)
}

/// Bounded-cell dimension census `f^bd_i`, padded to `codim + 1`.
pub fn f_bd_vector(cells: &[Cell], codim: usize) -> Vec<usize> {
    let mut f = vec![0usize; codim + 1];
    for cell in cells.iter().filter(|c| c.bounded) {
        f[cell.dim] += 1;
    }
    f
}

/// The bounded-cell h-vector: sum of `f^bd_i (t - 1)^i`.
pub fn h_bd_polynomial(cells: &[Cell], codim: usize) -> IntPolynomial {
    let f = f_bd_vector(cells, codim);
    let mut acc = IntPolynomial::zero();
    for (i, &fi) in f.iter().enumerate() {
        if fi == 0 {
            continue;
        }
        let term = IntPolynomial::t_minus_one_pow(i).scale(&BigInt::from(fi));
        acc = acc.add(&term);
    }
    acc
}

/// Number of bounded cells of full dimension.
pub fn bounded_regions_count(cells: &[Cell], rank: usize) -> usize {
    cells.iter().filter(|c| c.bounded && c.dim == rank).count()
}

/// Number of cells of full dimension (bounded or not).
pub fn regions_count(cells: &[Cell], rank: usize) -> usize {
    cells.iter().filter(|c| c.dim == rank).count()
}

/// The arrangement induced on the flat of an independent set,
/// re-coordinatized to the quotient configuration's dual space with the
/// same basis choice as [`quotient_config`], so hyperplane indices align.
#[derive(Clone, Debug)]
pub struct Restriction {
    arrangement: Arrangement,
    index_map: Vec<usize>,
    base_point: RatVector,
    embed_cols: Vec<Vec<BigInt>>,
}

impl Restriction {
    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    /// Original hyperplane index for each restricted hyperplane.
    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    /// Lift a point of the flat's quotient coordinates back to the ambient
    /// dual space: `u_0 + sum w_k e_k` over the embedding columns.
    pub fn lift(&self, w: &RatVector) -> RatVector {
        let mut out: Vec<BigRational> = self.base_point.coords().to_vec();
        for (k, col) in self.embed_cols.iter().enumerate() {
            let wk = &w.coords()[k];
            if wk.is_zero() {
                continue;
            }
            for (slot, e) in out.iter_mut().zip(col) {
                *slot += wk * BigRational::from(e.clone());
            }
        }
        RatVector::new(out)
    }
}

/// Restrict the arrangement to the flat of `f`, keeping the hyperplanes of
/// the vectors outside `span F`. `F = {}` returns the arrangement itself.
pub fn restrict(arr: &Arrangement, f: &IndepSet) -> Result<Restriction, Error> {
    restrict_filtered(arr, f, None)
}

/// Restriction keeping only hyperplanes whose original index lies in
/// `keep` (in addition to the span condition).
pub fn restrict_filtered(
    arr: &Arrangement,
    f: &IndepSet,
    keep: Option<&BTreeSet<usize>>,
) -> Result<Restriction, Error> {
    let c = arr.config();
    let d = c.rank();
    let r = f.dim();
    let q = quotient_config(c, f);

    // a point of the flat: solve <u0, b_i> = r_i over i in F
    let base_point = if r == 0 {
        RatVector::zero(d)
    } else {
        let rows: Vec<Vec<BigInt>> = f.indices().iter().map(|&i| c.vector(i).to_vec()).collect();
        let rhs: Vec<BigRational> = f
            .indices()
            .iter()
            .map(|&i| arr.offsets()[i].clone())
            .collect();
        let sol = IntMatrix::from_rows(&rows, d)
            .solve_rational(&rhs)
            .ok_or(Error::EmptyFlat)?;
        RatVector::new(sol)
    };

    // embedding of the quotient dual space: columns are the trailing rows
    // of the quotient transform, so that <embed(w), b_j> = <w, phi(b_j)>
    let u = q.transform();
    let embed_cols: Vec<Vec<BigInt>> = (r..d).map(|i| u.row(i).to_vec()).collect();

    let mut vectors = Vec::new();
    let mut offsets = Vec::new();
    let mut index_map = Vec::new();
    for (pos, &orig) in q.index_map().iter().enumerate() {
        if let Some(filter) = keep {
            if !filter.contains(&orig) {
                continue;
            }
        }
        vectors.push(q.config().vector(pos).to_vec());
        let induced = arr.offsets()[orig].clone() - base_point.dot_int(c.vector(orig));
        offsets.push(induced);
        index_map.push(orig);
    }
    let restricted_config = Config::new_unchecked(d - r, vectors);
    let arrangement = Arrangement::new(restricted_config, offsets)?;
    Ok(Restriction {
        arrangement,
        index_map,
        base_point,
        embed_cols,
    })
}

/// Outcome of the region-count identity for a pair `(G, I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZaslavskyOutcome {
    Checked { regions: usize, matroid_count: usize },
    NotSimple,
}

/// Count the regions of the arrangement `{phi_G(H_i) | i in I}` in the
/// quotient by `span G`, against the number of matroid elements `G'` with
/// `G ⊆ G' ⊆ G ∪ I`. The two counts agree for simple arrangements; a
/// non-simple projection is reported rather than counted.
pub fn zaslavsky_region_identity(
    arr: &Arrangement,
    sets: &[IndepSet],
    g: &IndepSet,
    i_set: &[usize],
    guards: &Guards,
) -> Result<ZaslavskyOutcome, Error> {
    let keep: BTreeSet<usize> = i_set.iter().copied().collect();
    let restriction = match restrict_filtered(arr, g, Some(&keep)) {
        Ok(res) => res,
        Err(Error::NotSimple) => return Ok(ZaslavskyOutcome::NotSimple),
        Err(e) => return Err(e),
    };
    let quotient_rank = restriction.arrangement().config().rank();
    let cells = enumerate_cells(restriction.arrangement(), guards)?;
    let regions = regions_count(&cells, quotient_rank);

    let g_indices: BTreeSet<usize> = g.indices().iter().copied().collect();
    let mut allowed = g_indices.clone();
    allowed.extend(keep.iter().copied());
    let matroid_count = sets
        .iter()
        .filter(|s| {
            let si: BTreeSet<usize> = s.indices().iter().copied().collect();
            g_indices.is_subset(&si) && si.is_subset(&allowed)
        })
        .count();
    Ok(ZaslavskyOutcome::Checked {
        regions,
        matroid_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{f_vector, h_polynomial, independent_sets};

    fn example3() -> Config {
        Config::validate_i64(2, &[vec![1, 0], vec![0, 1], vec![-2, 0], vec![2, -1]]).unwrap()
    }

    fn example3_arrangement() -> Arrangement {
        Arrangement::from_integer_offsets(example3(), &[0, 0, 2, -1]).unwrap()
    }

    #[test]
    fn example_offsets_are_simple() {
        let arr = example3_arrangement();
        assert_eq!(arr.offsets().len(), 4);
    }

    #[test]
    fn coincident_hyperplanes_rejected() {
        // b1 = (1,0), b3 = (-2,0) with offsets 0, 0 give the same line
        let c = Config::validate_i64(2, &[vec![1, 0], vec![0, 1], vec![-2, 0]]).unwrap();
        assert!(matches!(
            Arrangement::from_integer_offsets(c, &[0, 1, 0]),
            Err(Error::NotSimple)
        ));
    }

    #[test]
    fn single_hyperplane_simple() {
        let c = Config::validate_i64(1, &[vec![1]]).unwrap();
        assert!(Arrangement::from_integer_offsets(c, &[0]).is_ok());
    }

    #[test]
    fn choose_offsets_deterministic() {
        let c = Config::validate_i64(1, &[vec![1], vec![1]]).unwrap();
        let a1 = choose_offsets(&c, 7).unwrap();
        let a2 = choose_offsets(&c, 7).unwrap();
        assert_eq!(a1.offsets(), a2.offsets());
        // distinct offsets are forced: coincident points are not simple
        assert_ne!(a1.offsets()[0], a1.offsets()[1]);
    }

    #[test]
    fn example_cell_census() {
        let arr = example3_arrangement();
        let cells = enumerate_cells(&arr, &Guards::default()).unwrap();
        assert_eq!(f_bd_vector(&cells, 2), vec![5, 6, 2]);
        assert_eq!(h_bd_polynomial(&cells, 2), IntPolynomial::from_i64(&[1, 2, 2]));
        assert_eq!(bounded_regions_count(&cells, 2), 2);
        // a simple arrangement has one region per matroid element
        assert_eq!(regions_count(&cells, 2), 10);
        // five vertices
        assert_eq!(cells.iter().filter(|c| c.dim() == 0).count(), 5);
        // witnesses realize their sign vectors
        for cell in &cells {
            for i in 0..4 {
                assert_eq!(arr.sign_at(cell.witness(), i), cell.sign()[i]);
            }
        }
    }

    #[test]
    fn single_hyperplane_cells() {
        let c = Config::validate_i64(1, &[vec![1]]).unwrap();
        let arr = Arrangement::from_integer_offsets(c, &[0]).unwrap();
        let cells = enumerate_cells(&arr, &Guards::default()).unwrap();
        assert_eq!(cells.len(), 3);
        let zero_cell = cells
            .iter()
            .find(|c| c.sign() == [Sign::Zero])
            .expect("0-cell");
        assert!(zero_cell.bounded());
        assert_eq!(cells.iter().filter(|c| c.bounded()).count(), 1);
    }

    #[test]
    fn h_bd_negative_shape() {
        // f^bd = (1,1) in codim 1 expands to t, which cannot happen for
        // arrangements of generating configurations (constant term 1)
        let p = IntPolynomial::from_i64(&[1]).add(&IntPolynomial::t_minus_one_pow(1));
        assert_eq!(p, IntPolynomial::from_i64(&[0, 1]));
    }

    #[test]
    fn restrict_to_b3() {
        let arr = example3_arrangement();
        let sets = independent_sets(arr.config(), &Guards::default()).unwrap();
        let b3 = sets.iter().find(|s| s.indices() == [2]).unwrap();
        let res = restrict(&arr, b3).unwrap();
        assert_eq!(res.arrangement().config().rank(), 1);
        assert_eq!(res.index_map(), &[1, 3]);
        let cells = enumerate_cells(res.arrangement(), &Guards::default()).unwrap();
        assert_eq!(cells.iter().filter(|c| c.dim() == 0).count(), 2);
        assert_eq!(h_bd_polynomial(&cells, 1), IntPolynomial::from_i64(&[1, 1]));
    }

    #[test]
    fn restrict_empty_is_identity() {
        let arr = example3_arrangement();
        let res = restrict(&arr, &IndepSet::empty()).unwrap();
        assert_eq!(res.arrangement().config(), arr.config());
        assert_eq!(res.arrangement().offsets(), arr.offsets());
    }

    #[test]
    fn restrict_maximal_is_point() {
        let arr = example3_arrangement();
        let sets = independent_sets(arr.config(), &Guards::default()).unwrap();
        let max = sets.iter().find(|s| s.indices() == [1, 3]).unwrap();
        let res = restrict(&arr, max).unwrap();
        assert_eq!(res.arrangement().config().rank(), 0);
        let cells = enumerate_cells(res.arrangement(), &Guards::default()).unwrap();
        assert_eq!(cells.len(), 1);
        assert!(cells[0].bounded());
        assert_eq!(h_bd_polynomial(&cells, 0), IntPolynomial::one());
    }

    #[test]
    fn zaslavsky_equality_all_flats() {
        let arr = example3_arrangement();
        let sets = independent_sets(arr.config(), &Guards::default()).unwrap();
        for f in &sets {
            let codim = arr.config().rank() - f.dim();
            let res = restrict(&arr, f).unwrap();
            let cells = enumerate_cells(res.arrangement(), &Guards::default()).unwrap();
            let qsets = independent_sets(res.arrangement().config(), &Guards::default()).unwrap();
            let h = h_polynomial(&f_vector(&qsets, codim), codim);
            let h_bd = h_bd_polynomial(&cells, codim);
            assert_eq!(h, h_bd, "Zaslavsky equality at F = {}", f.label());
        }
    }

    #[test]
    fn region_identity_cases() {
        let arr = example3_arrangement();
        let sets = independent_sets(arr.config(), &Guards::default()).unwrap();
        let empty = IndepSet::empty();

        let full =
            zaslavsky_region_identity(&arr, &sets, &empty, &[0, 1, 2, 3], &Guards::default())
                .unwrap();
        assert_eq!(
            full,
            ZaslavskyOutcome::Checked {
                regions: 10,
                matroid_count: 10
            }
        );

        let none = zaslavsky_region_identity(&arr, &sets, &empty, &[], &Guards::default()).unwrap();
        assert_eq!(
            none,
            ZaslavskyOutcome::Checked {
                regions: 1,
                matroid_count: 1
            }
        );

        let single =
            zaslavsky_region_identity(&arr, &sets, &empty, &[0], &Guards::default()).unwrap();
        assert_eq!(
            single,
            ZaslavskyOutcome::Checked {
                regions: 2,
                matroid_count: 2
            }
        );
    }

    #[test]
    fn offsets_independence() {
        let c = example3();
        let a1 = choose_offsets(&c, 1).unwrap();
        let a2 = choose_offsets(&c, 2).unwrap();
        let c1 = enumerate_cells(&a1, &Guards::default()).unwrap();
        let c2 = enumerate_cells(&a2, &Guards::default()).unwrap();
        assert_eq!(f_bd_vector(&c1, 2), f_bd_vector(&c2, 2));
        assert_eq!(h_bd_polynomial(&c1, 2), h_bd_polynomial(&c2, 2));
    }
}
