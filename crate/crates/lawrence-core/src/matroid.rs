//! The matroid of a configuration: independent index subsets, quotient
//! configurations, dimension censuses (f-vectors), h-vectors, coloops.

use crate::config::Config;
use crate::error::Error;
use crate::matrix::{quotient_transform, saturate_span, IntMatrix};
use crate::poly::IntPolynomial;
use crate::Guards;
use num::traits::Zero;
use num::BigInt;

/// A linearly independent subset of configuration indices (0-based,
/// sorted). The empty set represents the matroid's rank-0 element. Carries
/// the saturated basis of `N ∩ span F` as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndepSet {
    indices: Vec<usize>,
    span_basis: Vec<Vec<BigInt>>,
}

impl IndepSet {
    pub fn empty() -> IndepSet {
        IndepSet {
            indices: Vec::new(),
            span_basis: Vec::new(),
        }
    }

    pub fn new(c: &Config, indices: Vec<usize>) -> IndepSet {
        let vectors: Vec<Vec<BigInt>> = indices.iter().map(|&i| c.vector(i).to_vec()).collect();
        debug_assert_eq!(
            IntMatrix::from_cols(&vectors, c.rank()).rank(),
            indices.len(),
            "independent set must have rank equal to its cardinality"
        );
        let span_basis = saturate_span(&vectors, c.rank());
        IndepSet {
            indices,
            span_basis,
        }
    }

    /// Dimension of the element, |indices|.
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Saturated basis of the lattice points in the rational span.
    pub fn span_basis(&self) -> &[Vec<BigInt>] {
        &self.span_basis
    }

    /// 1-based index display, `{}` for the empty element.
    pub fn label(&self) -> String {
        if self.indices.is_empty() {
            "{}".to_string()
        } else {
            let parts: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", parts.join(","))
        }
    }
}

/// All elements of the matroid M_B: every index subset whose vectors are
/// linearly independent, the empty set included, ordered by dimension and
/// then lexicographically.
pub fn independent_sets(c: &Config, guards: &Guards) -> Result<Vec<IndepSet>, Error> {
    if c.len() > guards.max_subsets {
        return Err(Error::SizeGuard {
            what: "matroid subset enumeration",
            limit: guards.max_subsets as u64,
            requested: c.len() as u64,
        });
    }
    let n = c.len();
    let mut all: Vec<IndepSet> = vec![IndepSet::empty()];
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    while !level.is_empty() {
        let mut next = Vec::new();
        for set in &level {
            let start = set.last().map_or(0, |&m| m + 1);
            for j in start..n {
                let mut candidate = set.clone();
                candidate.push(j);
                let cols: Vec<Vec<BigInt>> =
                    candidate.iter().map(|&i| c.vector(i).to_vec()).collect();
                if IntMatrix::from_cols(&cols, c.rank()).rank() == candidate.len() {
                    next.push(candidate);
                }
            }
        }
        for set in &next {
            all.push(IndepSet::new(c, set.clone()));
        }
        level = next;
    }
    Ok(all)
}

/// The configuration induced in the quotient lattice `N / (N ∩ span F)`:
/// images of precisely those vectors outside `span F`, expressed in the
/// complementary coordinates of a unimodular change of basis, with a map
/// back to original indices.
#[derive(Clone, Debug)]
pub struct QuotientConfig {
    config: Config,
    index_map: Vec<usize>,
    transform: IntMatrix,
    span_dim: usize,
}

impl QuotientConfig {
    /// The quotient configuration as a plain configuration (possibly empty,
    /// possibly of rank 0 when F is maximal).
    pub fn config(&self) -> &Config {
        &self.config
    }

    /// Original index of the quotient vector at `pos`.
    pub fn original_index(&self, pos: usize) -> usize {
        self.index_map[pos]
    }

    pub fn index_map(&self) -> &[usize] {
        &self.index_map
    }

    /// The unimodular transform `u`; the quotient projection of `x` is the
    /// last `rank` coordinates of `u * x`.
    pub fn transform(&self) -> &IntMatrix {
        &self.transform
    }

    /// Apply the quotient projection to a lattice vector.
    pub fn project(&self, x: &[BigInt]) -> Vec<BigInt> {
        let full = self.transform.mul_vec(x);
        full[self.span_dim..].to_vec()
    }

    /// Whether a vector of the ambient lattice lies in `span F`.
    pub fn in_span(&self, x: &[BigInt]) -> bool {
        self.project(x).iter().all(|e| e.is_zero())
    }
}

/// Build the quotient configuration B_F. For `F = {}` this is the original
/// configuration with the identity transform.
pub fn quotient_config(c: &Config, f: &IndepSet) -> QuotientConfig {
    let d = c.rank();
    let r = f.dim();
    let basis: Vec<Vec<BigInt>> = f.span_basis().to_vec();
    let transform = quotient_transform(&basis, d);
    let mut vectors = Vec::new();
    let mut index_map = Vec::new();
    for i in 0..c.len() {
        let full = transform.mul_vec(c.vector(i));
        let image = full[r..].to_vec();
        if image.iter().all(|e| e.is_zero()) {
            continue; // b_i lies in span F
        }
        vectors.push(image);
        index_map.push(i);
    }
    QuotientConfig {
        config: Config::new_unchecked(d - r, vectors),
        index_map,
        transform,
        span_dim: r,
    }
}

/// Dimension census: `f[i]` = number of elements of dimension `i`, padded
/// to length `codim + 1`.
pub fn f_vector(sets: &[IndepSet], codim: usize) -> Vec<usize> {
    let mut f = vec![0usize; codim + 1];
    for s in sets {
        assert!(s.dim() <= codim, "element dimension exceeds ambient codim");
        f[s.dim()] += 1;
    }
    f
}

/// The matroid h-vector: sum of `f_i t^i (1 - t)^(codim - i)`.
pub fn h_polynomial(f: &[usize], codim: usize) -> IntPolynomial {
    assert!(f.len() <= codim + 1, "f-vector longer than codim + 1");
    let mut acc = IntPolynomial::zero();
    for (i, &fi) in f.iter().enumerate() {
        if fi == 0 {
            continue;
        }
        let term = IntPolynomial::one_minus_t_pow(codim - i)
            .shift_by_t_power(i)
            .scale(&BigInt::from(fi));
        acc = acc.add(&term);
    }
    acc
}

/// Number of elements of the given maximal dimension (the vertex count
/// V_F of the restricted arrangement). The rank-0 matroid counts its
/// single element.
pub fn bases_count(sets: &[IndepSet], dim_matroid: usize) -> usize {
    sets.iter().filter(|s| s.dim() == dim_matroid).count()
}

/// True iff no vector lies in every maximal independent subset, i.e.
/// removing any single vector leaves a spanning configuration.
pub fn is_coloop_free(c: &Config) -> bool {
    let d = c.rank();
    (0..c.len()).all(|skip| {
        let cols: Vec<Vec<BigInt>> = (0..c.len())
            .filter(|&i| i != skip)
            .map(|i| c.vector(i).to_vec())
            .collect();
        IntMatrix::from_cols(&cols, d).rank() == d
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::One;

    fn example3() -> Config {
        Config::validate_i64(2, &[vec![1, 0], vec![0, 1], vec![-2, 0], vec![2, -1]]).unwrap()
    }

    fn sets_of(c: &Config) -> Vec<IndepSet> {
        independent_sets(c, &Guards::default()).unwrap()
    }

    #[test]
    fn example_matroid_elements() {
        let c = example3();
        let sets = sets_of(&c);
        let labels: Vec<String> = sets.iter().map(|s| s.label()).collect();
        assert_eq!(
            labels,
            vec![
                "{}", "{1}", "{2}", "{3}", "{4}", "{1,2}", "{1,4}", "{2,3}", "{2,4}", "{3,4}",
            ]
        );
    }

    #[test]
    fn standard_basis_all_subsets() {
        let c = Config::validate_i64(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(sets_of(&c).len(), 8);
    }

    #[test]
    fn collinear_pair() {
        let c = Config::validate_i64(1, &[vec![1], vec![1]]).unwrap();
        let sets = sets_of(&c);
        let labels: Vec<String> = sets.iter().map(|s| s.label()).collect();
        assert_eq!(labels, vec!["{}", "{1}", "{2}"]);
    }

    #[test]
    fn size_guard_enforced() {
        let c = Config::validate_i64(1, &[vec![1], vec![1]]).unwrap();
        let tight = Guards {
            max_subsets: 1,
            ..Guards::default()
        };
        assert!(matches!(
            independent_sets(&c, &tight),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn quotient_by_b3() {
        let c = example3();
        let sets = sets_of(&c);
        let f_b3 = sets.iter().find(|s| s.indices() == [2]).unwrap();
        let q = quotient_config(&c, f_b3);
        assert_eq!(q.config().rank(), 1);
        // b1 lies in span{b3}; only b2 and b4 survive
        assert_eq!(q.index_map(), &[1, 3]);
        let qsets = sets_of(q.config());
        assert_eq!(qsets.len(), 3); // {0, b2, b4}
        assert_eq!(f_vector(&qsets, 1), vec![1, 2]);
    }

    #[test]
    fn quotient_by_maximal_is_trivial() {
        let c = example3();
        let sets = sets_of(&c);
        let f_24 = sets.iter().find(|s| s.indices() == [1, 3]).unwrap();
        let q = quotient_config(&c, f_24);
        assert_eq!(q.config().rank(), 0);
        assert!(q.config().is_empty());
        let qsets = sets_of(q.config());
        assert_eq!(qsets.len(), 1);
        assert_eq!(f_vector(&qsets, 0), vec![1]);
    }

    #[test]
    fn quotient_by_empty_is_original() {
        let c = example3();
        let q = quotient_config(&c, &IndepSet::empty());
        assert_eq!(q.config(), &c);
        assert_eq!(q.index_map(), &[0, 1, 2, 3]);
    }

    #[test]
    fn example_f_and_h() {
        let c = example3();
        let sets = sets_of(&c);
        assert_eq!(f_vector(&sets, 2), vec![1, 4, 5]);
        assert_eq!(
            h_polynomial(&[1, 4, 5], 2),
            IntPolynomial::from_i64(&[1, 2, 2])
        );
        assert_eq!(h_polynomial(&[1, 2], 1), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(h_polynomial(&[1], 0), IntPolynomial::one());
    }

    #[test]
    fn h_at_one_counts_bases() {
        let c = example3();
        let sets = sets_of(&c);
        let h = h_polynomial(&f_vector(&sets, 2), 2);
        let v = bases_count(&sets, 2);
        assert_eq!(v, 5);
        assert_eq!(
            h.evaluate_at_integer(&BigInt::one()),
            BigInt::from(v as i64)
        );
    }

    #[test]
    fn coloop_detection() {
        assert!(is_coloop_free(&example3()));
        let single = Config::validate_i64(1, &[vec![1]]).unwrap();
        assert!(!is_coloop_free(&single));
        let pair = Config::validate_i64(1, &[vec![1], vec![1]]).unwrap();
        assert!(is_coloop_free(&pair));
    }

    #[test]
    fn f_vector_sums_to_matroid_size() {
        let c = example3();
        let sets = sets_of(&c);
        let f = f_vector(&sets, 2);
        assert_eq!(f.iter().sum::<usize>(), sets.len());
        assert!(f.iter().all(|&x| x > 0));
    }

    #[test]
    fn relabeling_invariance() {
        // permuting the input indices permutes the matroid but preserves
        // the dimension census
        let c1 = Config::validate_i64(2, &[vec![1, 0], vec![0, 1], vec![-2, 0], vec![2, -1]])
            .unwrap();
        let c2 = Config::validate_i64(2, &[vec![2, -1], vec![-2, 0], vec![0, 1], vec![1, 0]])
            .unwrap();
        let f1 = f_vector(&sets_of(&c1), 2);
        let f2 = f_vector(&sets_of(&c2), 2);
        assert_eq!(f1, f2);
    }
}
