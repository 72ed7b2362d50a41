//! Exact integer matrices: Hermite and Smith normal forms, rank, kernels,
//! span saturation, and rational linear solves. No floating point.

use num::integer::Integer;
use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational};

/// A dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Build from a list of rows; `cols` disambiguates the empty list.
    pub fn from_rows(rows: &[Vec<BigInt>], cols: usize) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            entries.extend(r.iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Build from a list of columns; `rows` disambiguates the empty list.
    pub fn from_cols(cols: &[Vec<BigInt>], rows: usize) -> Self {
        let mut m = IntMatrix::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let converted: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        IntMatrix::from_rows(&converted, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in multiply");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum::<BigInt>()
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    /// row[dst] += q * row[src]
    fn add_multiple_of_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * &self[(src, j)];
            self[(dst, j)] += add;
        }
    }

    /// Replace rows (a, b) with (x*row_a + y*row_b, u*row_a + w*row_b).
    fn combine_rows(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, u: &BigInt, w: &BigInt) {
        for j in 0..self.cols {
            let va = self[(a, j)].clone();
            let vb = self[(b, j)].clone();
            self[(a, j)] = x * &va + y * &vb;
            self[(b, j)] = u * &va + w * &vb;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// col[dst] += q * col[src]
    fn add_multiple_of_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * &self[(i, src)];
            self[(i, dst)] += add;
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, x: &BigInt, y: &BigInt, u: &BigInt, w: &BigInt) {
        for i in 0..self.rows {
            let va = self[(i, a)].clone();
            let vb = self[(i, b)].clone();
            self[(i, a)] = x * &va + y * &vb;
            self[(i, b)] = u * &va + w * &vb;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[(i, k)].is_zero());
                match swap {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = &num / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Row Hermite normal form with positive pivots.
    ///
    /// Returns `(h, u)` with `u` unimodular, `u * self == h`, pivot columns
    /// strictly increasing, entries above each pivot reduced into
    /// `[0, pivot)`, and zero rows at the bottom.
    pub fn hermite_normal_form(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            // clear everything below position r in this column
            let pivot_row = (r..self.rows).find(|&i| !h[(i, col)].is_zero());
            let Some(p) = pivot_row else { continue };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            for i in r + 1..self.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let a = h[(r, col)].clone();
                let b = h[(i, col)].clone();
                let eg = a.extended_gcd(&b);
                let (g, x, y) = (eg.gcd, eg.x, eg.y);
                let u2 = -(&b / &g);
                let w2 = &a / &g;
                h.combine_rows(r, i, &x, &y, &u2, &w2);
                u.combine_rows(r, i, &x, &y, &u2, &w2);
            }
            if h[(r, col)].is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            // reduce entries above the pivot into [0, pivot)
            let pivot = h[(r, col)].clone();
            for i in 0..r {
                let q = h[(i, col)].div_floor(&pivot);
                if !q.is_zero() {
                    let neg_q = -q;
                    h.add_multiple_of_row(i, r, &neg_q);
                    u.add_multiple_of_row(i, r, &neg_q);
                }
            }
            r += 1;
        }
        (h, u)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let (h, _) = self.hermite_normal_form();
        (0..h.rows)
            .filter(|&i| h.row(i).iter().any(|e| !e.is_zero()))
            .count()
    }

    /// Smith normal form. Returns `(s, u, v)` with `u * self * v == s`,
    /// `s` diagonal with positive divisors d_1 | d_2 | ..., and `u`, `v`
    /// unimodular.
    pub fn smith_normal_form(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let dim = self.rows.min(self.cols);
        let mut t = 0;
        while t < dim {
            // position of a minimal-magnitude nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..self.rows {
                for j in t..self.cols {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    match best {
                        None => best = Some((i, j)),
                        Some((bi, bj)) => {
                            if s[(i, j)].abs() < s[(bi, bj)].abs() {
                                best = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            v.swap_cols(t, bj);

            loop {
                // clear column t: plain elimination when the pivot divides
                // the entry (leaves the pivot row untouched), gcd
                // combination otherwise (strictly shrinks the pivot)
                for i in t + 1..self.rows {
                    if s[(i, t)].is_zero() {
                        continue;
                    }
                    let a = s[(t, t)].clone();
                    let b = s[(i, t)].clone();
                    if (&b % &a).is_zero() {
                        let q = -(&b / &a);
                        s.add_multiple_of_row(i, t, &q);
                        u.add_multiple_of_row(i, t, &q);
                    } else {
                        let eg = a.extended_gcd(&b);
                        let (g, x, y) = (eg.gcd, eg.x, eg.y);
                        let u2 = -(&b / &g);
                        let w2 = &a / &g;
                        s.combine_rows(t, i, &x, &y, &u2, &w2);
                        u.combine_rows(t, i, &x, &y, &u2, &w2);
                    }
                }
                // clear row t with column operations, same scheme
                for j in t + 1..self.cols {
                    if s[(t, j)].is_zero() {
                        continue;
                    }
                    let a = s[(t, t)].clone();
                    let b = s[(t, j)].clone();
                    if (&b % &a).is_zero() {
                        let q = -(&b / &a);
                        s.add_multiple_of_col(j, t, &q);
                        v.add_multiple_of_col(j, t, &q);
                    } else {
                        let eg = a.extended_gcd(&b);
                        let (g, x, y) = (eg.gcd, eg.x, eg.y);
                        let u2 = -(&b / &g);
                        let w2 = &a / &g;
                        s.combine_cols(t, j, &x, &y, &u2, &w2);
                        v.combine_cols(t, j, &x, &y, &u2, &w2);
                    }
                }
                let col_clear = (t + 1..self.rows).all(|i| s[(i, t)].is_zero());
                let row_clear = (t + 1..self.cols).all(|j| s[(t, j)].is_zero());
                if !(col_clear && row_clear) {
                    continue;
                }
                // enforce divisibility of the trailing block by the pivot
                let pivot = s[(t, t)].clone();
                let offender = (t + 1..self.rows)
                    .flat_map(|i| (t + 1..self.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&s[(i, j)] % &pivot).is_zero());
                match offender {
                    Some((i, _)) => {
                        let one = BigInt::one();
                        s.add_multiple_of_row(t, i, &one);
                        u.add_multiple_of_row(t, i, &one);
                    }
                    None => break,
                }
            }
            if s[(t, t)].is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        (s, u, v)
    }

    /// Diagonal entries of the Smith normal form, zeros excluded.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let (s, _, _) = self.smith_normal_form();
        let dim = s.rows.min(s.cols);
        (0..dim)
            .map(|i| s[(i, i)].clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    /// Basis of the integer kernel {x : self * x = 0}, one vector per row
    /// of the result. The kernel of an integer matrix is saturated.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let (h, u) = self.transpose().hermite_normal_form();
        let mut basis = Vec::new();
        for i in 0..h.rows() {
            if h.row(i).iter().all(|e| e.is_zero()) {
                basis.push(u.row(i).to_vec());
            }
        }
        basis
    }

    /// Solve `self * x = b` exactly over the rationals. Returns one solution
    /// (free variables set to zero) or `None` when the system is
    /// inconsistent. The solution is unique when the columns are independent.
    pub fn solve_rational(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut a: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| BigRational::from(e.clone()))
                    .chain(std::iter::once(b[i].clone()))
                    .collect()
            })
            .collect();
        let ncols = self.cols;
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][col].clone();
            for x in a[r].iter_mut() {
                *x /= inv.clone();
            }
            for i in 0..a.len() {
                if i != r && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in 0..=ncols {
                        let sub = &f * &a[r][j];
                        a[i][j] -= sub;
                    }
                }
            }
            pivot_cols.push(col);
            r += 1;
            if r == a.len() {
                break;
            }
        }
        // inconsistent when a zero row has nonzero rhs
        for row in a.iter().skip(r) {
            if row[..ncols].iter().all(|x| x.is_zero()) && !row[ncols].is_zero() {
                return None;
            }
        }
        let mut x = vec![BigRational::zero(); ncols];
        for (k, &col) in pivot_cols.iter().enumerate() {
            x[col] = a[k][ncols].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// Basis of the saturation `Z^dim ∩ span(vectors)`, canonicalized to row
/// Hermite normal form. The quotient of the lattice by this sublattice is
/// torsion-free.
pub fn saturate_span(vectors: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let a = IntMatrix::from_rows(vectors, dim);
    // orthogonal complement, then its orthogonal complement; integer kernels
    // are saturated, so the double complement is the saturation of the span
    let complement = a.kernel_basis();
    let k = IntMatrix::from_rows(&complement, dim);
    let saturation = k.kernel_basis();
    let (h, _) = IntMatrix::from_rows(&saturation, dim).hermite_normal_form();
    (0..h.rows())
        .filter(|&i| h.row(i).iter().any(|e| !e.is_zero()))
        .map(|i| h.row(i).to_vec())
        .collect()
}

/// A unimodular change of basis `u` of `Z^dim` such that the saturated
/// sublattice spanned by `basis` maps onto the first `basis.len()`
/// coordinates. The quotient projection reads off the complementary
/// coordinates of `u * x`.
///
/// Requires `basis` to be a basis of a saturated sublattice (all elementary
/// divisors 1), which is what [`saturate_span`] produces.
pub fn quotient_transform(basis: &[Vec<BigInt>], dim: usize) -> IntMatrix {
    let r = basis.len();
    if r == 0 {
        return IntMatrix::identity(dim);
    }
    let cols: Vec<Vec<BigInt>> = basis.to_vec();
    let m = IntMatrix::from_cols(&cols, dim);
    let (s, u, _) = m.smith_normal_form();
    for i in 0..r {
        assert!(
            s[(i, i)].is_one(),
            "quotient_transform requires a saturated basis"
        );
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
        IntMatrix::from_i64_rows(rows, cols)
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(2);
        let (h, u) = id.hermite_normal_form();
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_2x2_pivots() {
        let a = m(&[vec![2, 4], vec![1, 3]], 2);
        let (h, u) = a.hermite_normal_form();
        // oracle: reconstruction and determinant preservation
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.determinant().abs(), BigInt::one());
        assert_eq!(h.determinant().abs(), a.determinant().abs());
        assert_eq!(a.determinant().abs(), BigInt::from(2));
        // staircase with positive pivots, reduced above
        assert_eq!(h[(0, 0)], BigInt::from(1));
        assert_eq!(h[(1, 0)], BigInt::zero());
        assert_eq!(h[(1, 1)], BigInt::from(2));
        assert!(h[(0, 1)] >= BigInt::zero() && h[(0, 1)] < BigInt::from(2));
    }

    #[test]
    fn hnf_zero_matrix() {
        let z = IntMatrix::zero(3, 2);
        let (h, u) = z.hermite_normal_form();
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(3));
    }

    #[test]
    fn snf_identity() {
        let id = IntMatrix::identity(3);
        let (s, _, _) = id.smith_normal_form();
        assert_eq!(s, id);
        assert_eq!(id.elementary_divisors(), vec![BigInt::one(); 3]);
    }

    #[test]
    fn snf_example_configuration_generates() {
        // columns (1,0),(0,1),(-2,0),(2,-1)
        let a = m(&[vec![1, 0, -2, 2], vec![0, 1, 0, -1]], 4);
        assert_eq!(a.elementary_divisors(), vec![BigInt::one(), BigInt::one()]);
        let (s, u, v) = a.smith_normal_form();
        assert_eq!(u.mul(&a).mul(&v), s);
        assert_eq!(u.determinant().abs(), BigInt::one());
        assert_eq!(v.determinant().abs(), BigInt::one());
    }

    #[test]
    fn snf_single_column_two() {
        let a = m(&[vec![2]], 1);
        assert_eq!(a.elementary_divisors(), vec![BigInt::from(2)]);
    }

    #[test]
    fn rank_cases() {
        assert_eq!(IntMatrix::zero(2, 3).rank(), 0);
        // columns (1,0) and (-2,0) are collinear
        let a = m(&[vec![1, -2], vec![0, 0]], 2);
        assert_eq!(a.rank(), 1);
        let ex3 = m(&[vec![1, 0, -2, 2], vec![0, 1, 0, -1]], 4);
        assert_eq!(ex3.rank(), 2);
    }

    #[test]
    fn saturate_span_cases() {
        let two_zero = vec![vec![BigInt::from(2), BigInt::zero()]];
        let basis = saturate_span(&two_zero, 2);
        assert_eq!(basis, vec![vec![BigInt::one(), BigInt::zero()]]);

        assert!(saturate_span(&[], 2).is_empty());

        let full = vec![
            vec![BigInt::one(), BigInt::zero()],
            vec![BigInt::zero(), BigInt::one()],
        ];
        assert_eq!(saturate_span(&full, 2), full);
    }

    #[test]
    fn saturate_span_integer_coordinates() {
        // lattice points in the span must have integer coordinates over the basis
        let vectors = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::zero()],
            vec![BigInt::from(0), BigInt::from(6), BigInt::zero()],
        ];
        let basis = saturate_span(&vectors, 3);
        assert_eq!(basis.len(), 2);
        let bmat = IntMatrix::from_cols(&basis, 3);
        for v in &vectors {
            let rhs: Vec<BigRational> = v.iter().map(|e| BigRational::from(e.clone())).collect();
            let sol = bmat.solve_rational(&rhs).expect("in span");
            assert!(sol.iter().all(|c| c.is_integer()));
        }
    }

    #[test]
    fn solve_rational_cases() {
        let id = IntMatrix::identity(2);
        let b = vec![BigRational::from(BigInt::from(3)), BigRational::from(BigInt::from(-5))];
        assert_eq!(id.solve_rational(&b).unwrap(), b);

        // (-2,0) over columns (0,1),(2,-1) -> (-1,-1)
        let a = m(&[vec![0, 2], vec![1, -1]], 2);
        let rhs = vec![
            BigRational::from(BigInt::from(-2)),
            BigRational::from(BigInt::zero()),
        ];
        let sol = a.solve_rational(&rhs).unwrap();
        let minus_one = BigRational::from(BigInt::from(-1));
        assert_eq!(sol, vec![minus_one.clone(), minus_one]);

        // 0*x = 1 inconsistent
        let z = m(&[vec![0]], 1);
        assert!(z
            .solve_rational(&[BigRational::from(BigInt::one())])
            .is_none());
    }

    #[test]
    fn quotient_transform_kills_span() {
        let basis = vec![vec![BigInt::one(), BigInt::from(2)]];
        let u = quotient_transform(&basis, 2);
        assert_eq!(u.determinant().abs(), BigInt::one());
        let image = u.mul_vec(&basis[0]);
        assert!(image[1].is_zero(), "span must map into leading coordinates");
    }

    proptest! {
        #[test]
        fn hnf_reconstructs(entries in proptest::collection::vec(-9i64..=9, 12)) {
            let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let a = m(&rows, 4);
            let (h, u) = a.hermite_normal_form();
            prop_assert_eq!(u.mul(&a), h);
            prop_assert_eq!(u.determinant().abs(), BigInt::one());
        }

        #[test]
        fn snf_reconstructs(entries in proptest::collection::vec(-9i64..=9, 12)) {
            let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
            let a = m(&rows, 4);
            let (s, u, v) = a.smith_normal_form();
            prop_assert_eq!(u.mul(&a).mul(&v), s.clone());
            prop_assert_eq!(u.determinant().abs(), BigInt::one());
            prop_assert_eq!(v.determinant().abs(), BigInt::one());
            // diagonal, positive, divisibility chain
            let dim = s.rows().min(s.cols());
            for i in 0..s.rows() {
                for j in 0..s.cols() {
                    if i != j {
                        prop_assert!(s[(i, j)].is_zero());
                    }
                }
            }
            for i in 0..dim.saturating_sub(1) {
                let d0 = s[(i, i)].clone();
                let d1 = s[(i + 1, i + 1)].clone();
                prop_assert!(!d0.is_negative() && !d1.is_negative());
                if !d0.is_zero() {
                    if d1.is_zero() {
                        continue;
                    }
                    prop_assert!((&d1 % &d0).is_zero());
                } else {
                    prop_assert!(d1.is_zero());
                }
            }
        }

        #[test]
        fn saturation_contains_inputs(entries in proptest::collection::vec(-6i64..=6, 9)) {
            let rows: Vec<Vec<BigInt>> = entries
                .chunks(3)
                .map(|c| c.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            let basis = saturate_span(&rows, 3);
            if basis.is_empty() {
                for r in &rows {
                    prop_assert!(r.iter().all(|e| e.is_zero()));
                }
            } else {
                let bmat = IntMatrix::from_cols(&basis, 3);
                for r in &rows {
                    let rhs: Vec<BigRational> =
                        r.iter().map(|e| BigRational::from(e.clone())).collect();
                    let sol = bmat.solve_rational(&rhs);
                    prop_assert!(sol.is_some());
                    prop_assert!(sol.unwrap().iter().all(|c| c.is_integer()));
                }
            }
        }
    }
}
