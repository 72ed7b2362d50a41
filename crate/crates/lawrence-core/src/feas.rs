//! Exact rational linear feasibility via Fourier–Motzkin elimination.
//!
//! Systems mix equalities with weak and strict inequalities. Equalities are
//! removed first by exact Gaussian substitution; the remaining variables are
//! eliminated one at a time, with duplicate and implied rows pruned after
//! each step. Every produced witness is re-checked against the original
//! system before it is returned.

use num::integer::Integer;
use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational};
use std::collections::BTreeMap;

/// A vector of arbitrary-precision rationals (kept in lowest terms with
/// positive denominators by the underlying representation).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RatVector {
    coords: Vec<BigRational>,
}

impl RatVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RatVector { coords }
    }

    pub fn zero(n: usize) -> Self {
        RatVector {
            coords: vec![BigRational::zero(); n],
        }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        RatVector {
            coords: values
                .iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn from_bigints(values: &[BigInt]) -> Self {
        RatVector {
            coords: values.iter().map(|v| BigRational::from(v.clone())).collect(),
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Exact dot product against an integer row.
    pub fn dot_int(&self, row: &[BigInt]) -> BigRational {
        assert_eq!(row.len(), self.coords.len());
        let mut acc = BigRational::zero();
        for (c, x) in row.iter().zip(&self.coords) {
            if !c.is_zero() {
                acc += BigRational::from(c.clone()) * x;
            }
        }
        acc
    }
}

/// One constraint in `row . x (= | <= | <) rhs` normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinRow {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigRational,
    pub strict: bool,
}

/// A mixed system of equalities and (weak or strict) inequalities over a
/// fixed number of unknowns. Inequalities are stored in `<=` / `<` form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    unknowns: usize,
    eqs: Vec<LinRow>,
    ineqs: Vec<LinRow>,
}

impl LinearSystem {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            unknowns,
            eqs: Vec::new(),
            ineqs: Vec::new(),
        }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equalities(&self) -> &[LinRow] {
        &self.eqs
    }

    pub fn inequalities(&self) -> &[LinRow] {
        &self.ineqs
    }

    fn check_len(&self, coeffs: &[BigInt]) {
        assert_eq!(coeffs.len(), self.unknowns, "row length mismatch");
    }

    pub fn push_eq(&mut self, coeffs: Vec<BigInt>, rhs: BigRational) {
        self.check_len(&coeffs);
        self.eqs.push(LinRow {
            coeffs,
            rhs,
            strict: false,
        });
    }

    pub fn push_le(&mut self, coeffs: Vec<BigInt>, rhs: BigRational) {
        self.check_len(&coeffs);
        self.ineqs.push(LinRow {
            coeffs,
            rhs,
            strict: false,
        });
    }

    pub fn push_lt(&mut self, coeffs: Vec<BigInt>, rhs: BigRational) {
        self.check_len(&coeffs);
        self.ineqs.push(LinRow {
            coeffs,
            rhs,
            strict: true,
        });
    }

    pub fn push_ge(&mut self, coeffs: Vec<BigInt>, rhs: BigRational) {
        let neg: Vec<BigInt> = coeffs.iter().map(|c| -c).collect();
        self.push_le(neg, -rhs);
    }

    pub fn push_gt(&mut self, coeffs: Vec<BigInt>, rhs: BigRational) {
        let neg: Vec<BigInt> = coeffs.iter().map(|c| -c).collect();
        self.push_lt(neg, -rhs);
    }

    /// Exact membership test.
    pub fn satisfied_by(&self, x: &RatVector) -> bool {
        assert_eq!(x.len(), self.unknowns, "point dimension mismatch");
        for row in &self.eqs {
            if x.dot_int(&row.coeffs) != row.rhs {
                return false;
            }
        }
        for row in &self.ineqs {
            let v = x.dot_int(&row.coeffs);
            let ok = if row.strict { v < row.rhs } else { v <= row.rhs };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Decide feasibility; on success return a witness that has been
    /// re-checked against every constraint of this system.
    pub fn feasible(&self) -> Option<RatVector> {
        let n = self.unknowns;
        let mut eq_rows: Vec<Row> = self.eqs.iter().map(Row::from_lin).collect();
        let mut ineq_rows: Vec<Row> = self.ineqs.iter().map(Row::from_lin).collect();

        // Gaussian substitution of equalities: full reduction so each pivot
        // variable is expressed in free variables only.
        let mut pivots: Vec<(usize, Row)> = Vec::new();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..eq_rows.len()).find(|&i| !eq_rows[i].coeffs[col].is_zero()) else {
                continue;
            };
            eq_rows.swap(r, p);
            let scale = eq_rows[r].coeffs[col].clone();
            eq_rows[r].div_assign(&scale);
            let pivot_row = eq_rows[r].clone();
            for (i, row) in eq_rows.iter_mut().enumerate() {
                if i != r {
                    row.sub_scaled(&pivot_row, col);
                }
            }
            r += 1;
        }
        for row in eq_rows.iter().skip(r) {
            if !row.rhs.is_zero() {
                return None; // 0 = c with c nonzero
            }
        }
        eq_rows.truncate(r);
        for row in &eq_rows {
            let col = row
                .coeffs
                .iter()
                .position(|c| c.is_one())
                .expect("reduced equality row has a unit pivot");
            for ineq in ineq_rows.iter_mut() {
                ineq.sub_scaled(row, col);
            }
            pivots.push((col, row.clone()));
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(c, _)| c).collect();

        // Fourier–Motzkin on the free variables.
        ineq_rows = match prune(ineq_rows) {
            Ok(rows) => rows,
            Err(()) => return None,
        };
        let mut remaining: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        let mut stack: Vec<(usize, Vec<Row>)> = Vec::new();
        while !remaining.is_empty() {
            // classic heuristic: eliminate the variable with the fewest
            // lower-upper combinations first
            let (idx, &var) = remaining
                .iter()
                .enumerate()
                .min_by_key(|&(_, &v)| {
                    let lo = ineq_rows.iter().filter(|r| r.coeffs[v].is_negative()).count();
                    let hi = ineq_rows.iter().filter(|r| r.coeffs[v].is_positive()).count();
                    lo * hi
                })
                .expect("nonempty");
            remaining.remove(idx);
            let (rest, bounds) = eliminate(&ineq_rows, var);
            stack.push((var, bounds));
            ineq_rows = match prune(rest) {
                Ok(rows) => rows,
                Err(()) => return None,
            };
        }
        for row in &ineq_rows {
            // only constant rows remain
            let ok = if row.strict {
                BigRational::zero() < row.rhs
            } else {
                BigRational::zero() <= row.rhs
            };
            if !ok {
                return None;
            }
        }

        // back-substitute the free variables in reverse elimination order
        let mut x = vec![BigRational::zero(); n];
        for (var, bounds) in stack.iter().rev() {
            x[*var] = pick_value(bounds, *var, &x);
        }
        for (col, row) in &pivots {
            let mut v = row.rhs.clone();
            for (j, c) in row.coeffs.iter().enumerate() {
                if j != *col && !c.is_zero() {
                    v -= c * &x[j];
                }
            }
            x[*col] = v;
        }
        let witness = RatVector::new(x);
        assert!(
            self.satisfied_by(&witness),
            "internal error: witness failed re-check"
        );
        Some(witness)
    }

    /// Project onto the variables with `keep[j] == true`, eliminating the
    /// others exactly (equalities by substitution, the rest by
    /// Fourier–Motzkin). The result is a system over the kept variables in
    /// their original order; an infeasible input yields a system containing
    /// an unsatisfiable constant row.
    pub fn project(&self, keep: &[bool]) -> LinearSystem {
        assert_eq!(keep.len(), self.unknowns, "keep mask length mismatch");
        let mut eq_rows: Vec<Row> = self.eqs.iter().map(Row::from_lin).collect();
        let mut ineq_rows: Vec<Row> = self.ineqs.iter().map(Row::from_lin).collect();
        let mut eliminated = vec![false; self.unknowns];

        // substitute equalities pivoting on eliminated variables only
        loop {
            let mut target = None;
            'search: for (i, row) in eq_rows.iter().enumerate() {
                for v in 0..self.unknowns {
                    if !keep[v] && !eliminated[v] && !row.coeffs[v].is_zero() {
                        target = Some((i, v));
                        break 'search;
                    }
                }
            }
            let Some((i, v)) = target else { break };
            let mut pivot_row = eq_rows.remove(i);
            let scale = pivot_row.coeffs[v].clone();
            pivot_row.div_assign(&scale);
            for row in eq_rows.iter_mut() {
                row.sub_scaled(&pivot_row, v);
            }
            for row in ineq_rows.iter_mut() {
                row.sub_scaled(&pivot_row, v);
            }
            eliminated[v] = true;
        }

        let mut infeasible = false;
        eq_rows.retain(|row| {
            if row.coeffs.iter().all(|c| c.is_zero()) {
                if !row.rhs.is_zero() {
                    infeasible = true;
                }
                false
            } else {
                true
            }
        });

        // Fourier–Motzkin for eliminated variables not removed above
        for v in 0..self.unknowns {
            if keep[v] || eliminated[v] {
                continue;
            }
            let (rest, _) = eliminate(&ineq_rows, v);
            match prune(rest) {
                Ok(rows) => ineq_rows = rows,
                Err(()) => {
                    infeasible = true;
                    ineq_rows.clear();
                    break;
                }
            }
        }

        // re-index onto kept variables
        let kept: Vec<usize> = (0..self.unknowns).filter(|&v| keep[v]).collect();
        let mut out = LinearSystem::new(kept.len());
        if infeasible {
            out.push_le(vec![BigInt::zero(); kept.len()], BigRational::from(BigInt::from(-1)));
            return out;
        }
        for row in &eq_rows {
            let (coeffs, rhs) = row.to_integer_row(&kept);
            out.push_eq(coeffs, rhs);
        }
        for row in &ineq_rows {
            let (coeffs, rhs) = row.to_integer_row(&kept);
            if coeffs.iter().all(|c| c.is_zero()) {
                let ok = if row.strict {
                    BigRational::zero() < rhs
                } else {
                    BigRational::zero() <= rhs
                };
                if ok {
                    continue;
                }
            }
            if row.strict {
                out.push_lt(coeffs, rhs);
            } else {
                out.push_le(coeffs, rhs);
            }
        }
        out
    }
}

/// Internal working row with rational coefficients: `coeffs . x <= rhs`
/// (or `<` when strict; equality rows reuse the same storage).
#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<BigRational>,
    rhs: BigRational,
    strict: bool,
}

impl Row {
    fn from_lin(l: &LinRow) -> Row {
        Row {
            coeffs: l.coeffs.iter().map(|c| BigRational::from(c.clone())).collect(),
            rhs: l.rhs.clone(),
            strict: l.strict,
        }
    }

    fn div_assign(&mut self, by: &BigRational) {
        for c in self.coeffs.iter_mut() {
            *c /= by.clone();
        }
        self.rhs /= by.clone();
    }

    /// self -= self.coeffs[col] * pivot  (pivot has coefficient 1 at col)
    fn sub_scaled(&mut self, pivot: &Row, col: usize) {
        let f = self.coeffs[col].clone();
        if f.is_zero() {
            return;
        }
        for (c, p) in self.coeffs.iter_mut().zip(&pivot.coeffs) {
            *c -= &f * p;
        }
        self.rhs -= &f * &pivot.rhs;
    }

    /// Canonical integer form: positive scaling making all coefficients
    /// integers with gcd 1. Constant rows are scaled to rhs in {-1, 0, 1}
    /// magnitude-preserving sign only.
    fn canonical(&self) -> (Vec<BigInt>, BigRational) {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return (ints, self.rhs.clone());
        }
        let scale = BigRational::new(lcm, g.clone());
        (
            ints.iter().map(|c| c / &g).collect(),
            &self.rhs * scale,
        )
    }

    /// Integer-coefficient row restricted to the kept columns.
    fn to_integer_row(&self, kept: &[usize]) -> (Vec<BigInt>, BigRational) {
        let restricted = Row {
            coeffs: kept.iter().map(|&v| self.coeffs[v].clone()).collect(),
            rhs: self.rhs.clone(),
            strict: self.strict,
        };
        restricted.canonical()
    }
}

/// One Fourier–Motzkin step: eliminate `var`, returning the new row set and
/// the rows that bounded `var` (needed for witness reconstruction).
fn eliminate(rows: &[Row], var: usize) -> (Vec<Row>, Vec<Row>) {
    let mut rest = Vec::new();
    let mut lowers = Vec::new();
    let mut uppers = Vec::new();
    for row in rows {
        if row.coeffs[var].is_zero() {
            rest.push(row.clone());
        } else if row.coeffs[var].is_negative() {
            lowers.push(row.clone());
        } else {
            uppers.push(row.clone());
        }
    }
    for lo in &lowers {
        for up in &uppers {
            // positive multipliers cancel the variable
            let a = -lo.coeffs[var].clone();
            let b = up.coeffs[var].clone();
            let coeffs: Vec<BigRational> = lo
                .coeffs
                .iter()
                .zip(&up.coeffs)
                .map(|(l, u)| &b * l + &a * u)
                .collect();
            let rhs = &b * &lo.rhs + &a * &up.rhs;
            rest.push(Row {
                coeffs,
                rhs,
                strict: lo.strict || up.strict,
            });
        }
    }
    let mut bounds = lowers;
    bounds.extend(uppers);
    (rest, bounds)
}

/// Drop satisfied constant rows, detect violated ones, and keep only the
/// tightest row per coefficient direction.
fn prune(rows: Vec<Row>) -> Result<Vec<Row>, ()> {
    let mut best: BTreeMap<Vec<BigInt>, Row> = BTreeMap::new();
    for row in rows {
        let (ints, rhs) = row.canonical();
        if ints.iter().all(|c| c.is_zero()) {
            let ok = if row.strict {
                BigRational::zero() < rhs
            } else {
                BigRational::zero() <= rhs
            };
            if ok {
                continue;
            }
            return Err(());
        }
        let norm = Row {
            coeffs: ints.iter().map(|c| BigRational::from(c.clone())).collect(),
            rhs,
            strict: row.strict,
        };
        match best.get(&ints) {
            None => {
                best.insert(ints, norm);
            }
            Some(prev) => {
                let tighter = norm.rhs < prev.rhs
                    || (norm.rhs == prev.rhs && norm.strict && !prev.strict);
                if tighter {
                    best.insert(ints, norm);
                }
            }
        }
    }
    Ok(best.into_values().collect())
}

/// Choose a value for `var` inside the interval its bound rows allow, given
/// that all variables eliminated after `var` are already assigned in `x`.
fn pick_value(bounds: &[Row], var: usize, x: &[BigRational]) -> BigRational {
    let mut lower: Option<(BigRational, bool)> = None;
    let mut upper: Option<(BigRational, bool)> = None;
    for row in bounds {
        let c = &row.coeffs[var];
        let mut rest = row.rhs.clone();
        for (j, cj) in row.coeffs.iter().enumerate() {
            if j != var && !cj.is_zero() {
                rest -= cj * &x[j];
            }
        }
        let bound = &rest / c;
        if c.is_negative() {
            // lower bound
            let better = match &lower {
                None => true,
                Some((b, s)) => bound > *b || (bound == *b && row.strict && !*s),
            };
            if better {
                lower = Some((bound, row.strict));
            }
        } else {
            let better = match &upper {
                None => true,
                Some((b, s)) => bound < *b || (bound == *b && row.strict && !*s),
            };
            if better {
                upper = Some((bound, row.strict));
            }
        }
    }
    let one = BigRational::from(BigInt::one());
    match (lower, upper) {
        (None, None) => BigRational::zero(),
        (Some((l, _)), None) => l + one,
        (None, Some((u, _))) => u - one,
        (Some((l, _)), Some((u, _))) => {
            if l == u {
                l
            } else {
                (l + u) / BigRational::from(BigInt::from(2))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn interval_feasible() {
        let mut sys = LinearSystem::new(1);
        sys.push_ge(ints(&[1]), rat(0));
        sys.push_le(ints(&[1]), rat(1));
        let w = sys.feasible().expect("feasible");
        let v = &w.coords()[0];
        assert!(*v >= rat(0) && *v <= rat(1));
    }

    #[test]
    fn contradictory_strict() {
        let mut sys = LinearSystem::new(1);
        sys.push_gt(ints(&[1]), rat(0));
        sys.push_lt(ints(&[1]), rat(0));
        assert!(sys.feasible().is_none());
    }

    #[test]
    fn zonotope_membership_interval() {
        // s1 + s2 = target with 0 <= s_i <= 1
        let build = |target: i64| {
            let mut sys = LinearSystem::new(2);
            sys.push_eq(ints(&[1, 1]), rat(target));
            for i in 0..2 {
                let mut row = vec![BigInt::zero(); 2];
                row[i] = BigInt::one();
                sys.push_ge(row.clone(), rat(0));
                sys.push_le(row, rat(1));
            }
            sys
        };
        assert!(build(3).feasible().is_none());
        assert!(build(2).feasible().is_some());
    }

    #[test]
    fn zero_unknowns() {
        let mut sys = LinearSystem::new(0);
        assert!(sys.feasible().is_some());
        sys.push_le(vec![], rat(-1));
        assert!(sys.feasible().is_none());
    }

    #[test]
    fn equality_only_inconsistent() {
        let mut sys = LinearSystem::new(1);
        sys.push_eq(ints(&[0]), rat(1));
        assert!(sys.feasible().is_none());
    }

    #[test]
    fn strict_point_squeeze() {
        // x >= 1, x <= 1 feasible at the single point; adding strictness kills it
        let mut sys = LinearSystem::new(1);
        sys.push_ge(ints(&[1]), rat(1));
        sys.push_le(ints(&[1]), rat(1));
        let w = sys.feasible().expect("point feasible");
        assert_eq!(w.coords()[0], rat(1));
        sys.push_lt(ints(&[1]), rat(1));
        assert!(sys.feasible().is_none());
    }

    #[test]
    fn project_segment_scaling() {
        // 2s = x with 0 <= s <= 1 projects to 0 <= x <= 2
        let mut sys = LinearSystem::new(2);
        sys.push_eq(ints(&[2, -1]), rat(0));
        sys.push_ge(ints(&[1, 0]), rat(0));
        sys.push_le(ints(&[1, 0]), rat(1));
        let proj = sys.project(&[false, true]);
        assert_eq!(proj.unknowns(), 1);
        for (x, expect) in [(-1, false), (0, true), (1, true), (2, true), (3, false)] {
            assert_eq!(proj.satisfied_by(&RatVector::from_i64(&[x])), expect, "x={x}");
        }
    }

    #[test]
    fn project_infeasible_marks() {
        let mut sys = LinearSystem::new(2);
        sys.push_gt(ints(&[1, 0]), rat(0));
        sys.push_lt(ints(&[1, 0]), rat(0));
        let proj = sys.project(&[false, true]);
        assert!(proj.feasible().is_none());
    }

    proptest! {
        #[test]
        fn permutation_and_scaling_invariance(
            rows in proptest::collection::vec(
                (proptest::collection::vec(-4i64..=4, 3), -5i64..=5, proptest::bool::ANY),
                1..6,
            ),
            scale in 1i64..=4,
        ) {
            let mut sys = LinearSystem::new(3);
            for (coeffs, rhs, strict) in &rows {
                if *strict {
                    sys.push_lt(ints(coeffs), rat(*rhs));
                } else {
                    sys.push_le(ints(coeffs), rat(*rhs));
                }
            }
            let mut permuted = LinearSystem::new(3);
            for (coeffs, rhs, strict) in rows.iter().rev() {
                let scaled: Vec<i64> = coeffs.iter().map(|c| c * scale).collect();
                if *strict {
                    permuted.push_lt(ints(&scaled), rat(rhs * scale));
                } else {
                    permuted.push_le(ints(&scaled), rat(rhs * scale));
                }
            }
            prop_assert_eq!(sys.feasible().is_some(), permuted.feasible().is_some());
        }

        #[test]
        fn witness_satisfies_original(
            eqs in proptest::collection::vec(
                (proptest::collection::vec(-3i64..=3, 3), -4i64..=4), 0..3),
            les in proptest::collection::vec(
                (proptest::collection::vec(-3i64..=3, 3), -4i64..=4), 0..5),
        ) {
            let mut sys = LinearSystem::new(3);
            for (coeffs, rhs) in &eqs {
                sys.push_eq(ints(coeffs), rat(*rhs));
            }
            for (coeffs, rhs) in &les {
                sys.push_le(ints(coeffs), rat(*rhs));
            }
            // feasible() internally asserts the witness against the system
            let _ = sys.feasible();
        }

        #[test]
        fn projection_preserves_membership(
            les in proptest::collection::vec(
                (proptest::collection::vec(-3i64..=3, 3), -4i64..=4), 1..6),
            point in proptest::collection::vec(-3i64..=3, 2),
        ) {
            // a point is in the projection iff the fiber over it is feasible
            let mut sys = LinearSystem::new(3);
            for (coeffs, rhs) in &les {
                sys.push_le(ints(coeffs), rat(*rhs));
            }
            let proj = sys.project(&[false, true, true]);
            let p = RatVector::from_i64(&point);
            let mut fiber = sys.clone();
            let mut row = vec![BigInt::zero(); 3];
            row[1] = BigInt::one();
            fiber.push_eq(row, p.coords()[0].clone());
            let mut row = vec![BigInt::zero(); 3];
            row[2] = BigInt::one();
            fiber.push_eq(row, p.coords()[1].clone());
            prop_assert_eq!(proj.satisfied_by(&p), fiber.feasible().is_some());
        }
    }
}
