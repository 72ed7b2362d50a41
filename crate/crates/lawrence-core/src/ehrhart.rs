//! The Ehrhart δ-polynomial of the Lawrence polytope of a configuration,
//! computed three independent ways: the matroid h-vector formula, the
//! bounded-cell h-vector formula, and brute-force dilate counting; plus the
//! interior-point parameterization, reciprocity, and closed-form identities.

use crate::arrangement::{
    enumerate_cells, h_bd_polynomial, restrict, Arrangement, Sign,
};
use crate::boxlattice::{box_count, box_points, enumerate_box};
use crate::config::Config;
use crate::error::Error;
use crate::feas::LinearSystem;
use crate::matrix::IntMatrix;
use crate::matroid::{
    bases_count, f_vector, h_polynomial, independent_sets, is_coloop_free, quotient_config,
};
use crate::poly::{binomial, IntPolynomial};
use crate::report::CheckEntry;
use crate::Guards;
use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// A lattice point of `N x Z^n`, stored as the concatenation `(x | mu)`.
pub type LatticePoint = Vec<BigInt>;

/// The Lawrence polytope of a configuration: the polytope in `N x Z^n`
/// with the 2n vertices `(b_i, e_i)` and `(0, e_i)`.
#[derive(Clone, Debug)]
pub struct LawrencePolytope {
    config: Config,
    vertices: Vec<LatticePoint>,
}

impl LawrencePolytope {
    pub fn new(config: Config) -> LawrencePolytope {
        let d = config.rank();
        let n = config.len();
        let mut vertices = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut top = vec![BigInt::zero(); d + n];
            top[..d].clone_from_slice(config.vector(i));
            top[d + i] = BigInt::one();
            let mut bottom = vec![BigInt::zero(); d + n];
            bottom[d + i] = BigInt::one();
            vertices.push(top);
            vertices.push(bottom);
        }
        // every vertex lies in the slab psi = 1
        debug_assert!(vertices
            .iter()
            .all(|v| v[d..].iter().sum::<BigInt>() == BigInt::one()));
        // the polytope has dimension d + n - 1
        let differences: Vec<Vec<BigInt>> = vertices[1..]
            .iter()
            .map(|v| v.iter().zip(&vertices[0]).map(|(a, b)| a - b).collect())
            .collect();
        assert_eq!(
            IntMatrix::from_rows(&differences, d + n).rank(),
            d + n - 1,
            "Lawrence polytope must have dimension d + n - 1"
        );
        LawrencePolytope { config, vertices }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    /// Ambient lattice rank d + n.
    pub fn ambient_rank(&self) -> usize {
        self.config.rank() + self.config.len()
    }

    /// Polytope dimension d + n - 1.
    pub fn dim(&self) -> usize {
        self.ambient_rank() - 1
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }
}

/// Which route produced a δ-polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaMethod {
    FormulaH,
    FormulaHbd,
    BruteForce,
}

impl DeltaMethod {
    pub fn tag(self) -> &'static str {
        match self {
            DeltaMethod::FormulaH => "formula-h",
            DeltaMethod::FormulaHbd => "formula-hbd",
            DeltaMethod::BruteForce => "bruteforce",
        }
    }
}

/// A δ-polynomial with its provenance.
#[derive(Clone, Debug)]
pub struct DeltaResult {
    pub delta: IntPolynomial,
    pub method: DeltaMethod,
    pub seed: Option<u64>,
    pub offsets: Option<Vec<BigRational>>,
}

impl DeltaResult {
    /// Coefficient sanity: nonnegative integers, constant term 1, degree
    /// at most the configuration rank.
    pub fn shape_ok(&self, rank: usize) -> bool {
        self.delta.is_nonnegative()
            && self.delta.coeff(0).is_one()
            && self.delta.degree().map_or(false, |deg| deg <= rank)
    }
}

/// Lattice-point counts of one dilate.
#[derive(Clone, Debug)]
pub struct GradedCount {
    pub dilate: u64,
    pub count: BigInt,
    pub interior: Option<BigInt>,
}

/// Compositions of `total` into `parts` nonnegative integers.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn rec(total: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for v in 0..=total {
            prefix.push(v);
            rec(total - v, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Integerized constraint rows in `x`, used to test zonotope membership of
/// many candidate points cheaply.
struct FiberSystem {
    eqs: Vec<(Vec<BigInt>, BigInt)>,
    les: Vec<(Vec<BigInt>, BigInt)>,
    lo: Vec<BigInt>,
    hi: Vec<BigInt>,
}

impl FiberSystem {
    /// The fiber zonotope over `mu`: project `exists s, 0 <= s_i <= mu_i,
    /// sum s_i b_i = x` onto the `x` block by exact Fourier–Motzkin
    /// elimination of the `s` block.
    fn new(c: &Config, mu: &[u64]) -> FiberSystem {
        let d = c.rank();
        let n = c.len();
        let mut sys = LinearSystem::new(n + d);
        for k in 0..d {
            let mut row = vec![BigInt::zero(); n + d];
            for i in 0..n {
                row[i] = c.vector(i)[k].clone();
            }
            row[n + k] = BigInt::from(-1);
            sys.push_eq(row, BigRational::zero());
        }
        for (i, &m) in mu.iter().enumerate() {
            let mut row = vec![BigInt::zero(); n + d];
            row[i] = BigInt::one();
            sys.push_ge(row.clone(), BigRational::zero());
            sys.push_le(row, BigRational::from(BigInt::from(m)));
        }
        let mut keep = vec![false; n + d];
        for flag in keep.iter_mut().skip(n) {
            *flag = true;
        }
        let projected = sys.project(&keep);

        let integerize = |coeffs: &[BigInt], rhs: &BigRational| {
            let den = rhs.denom();
            let row: Vec<BigInt> = coeffs.iter().map(|c| c * den).collect();
            (row, rhs.numer().clone())
        };
        let eqs = projected
            .equalities()
            .iter()
            .map(|r| integerize(&r.coeffs, &r.rhs))
            .collect();
        let les = projected
            .inequalities()
            .iter()
            .map(|r| {
                debug_assert!(!r.strict, "zonotope projections are weak systems");
                integerize(&r.coeffs, &r.rhs)
            })
            .collect();

        let mut lo = vec![BigInt::zero(); d];
        let mut hi = vec![BigInt::zero(); d];
        for (i, &m) in mu.iter().enumerate() {
            let scale = BigInt::from(m);
            for (k, e) in c.vector(i).iter().enumerate() {
                let reach = e * &scale;
                if reach.is_negative() {
                    lo[k] += reach;
                } else {
                    hi[k] += reach;
                }
            }
        }
        FiberSystem { eqs, les, lo, hi }
    }

    fn contains(&self, x: &[BigInt]) -> bool {
        let dot = |row: &[BigInt]| -> BigInt {
            row.iter()
                .zip(x)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, v)| c * v)
                .sum()
        };
        self.eqs.iter().all(|(row, rhs)| dot(row) == *rhs)
            && self.les.iter().all(|(row, rhs)| dot(row) <= *rhs)
    }

    fn count_points(&self) -> BigInt {
        let mut count = BigInt::zero();
        enumerate_box(&self.lo, &self.hi, |x| {
            if self.contains(x) {
                count += 1;
            }
        });
        count
    }

    fn collect_points(&self, mu: &[u64], out: &mut Vec<LatticePoint>) {
        enumerate_box(&self.lo, &self.hi, |x| {
            if self.contains(x) {
                let mut p = x.to_vec();
                p.extend(mu.iter().map(|&m| BigInt::from(m)));
                out.push(p);
            }
        });
    }
}

fn fiber_guard(c: &Config, m: u64, guards: &Guards) -> Result<(), Error> {
    let requested = (m + 1)
        .checked_pow(c.len() as u32)
        .unwrap_or(u64::MAX);
    if requested > guards.max_dilate_fibers {
        return Err(Error::SizeGuard {
            what: "dilate fiber enumeration",
            limit: guards.max_dilate_fibers,
            requested,
        });
    }
    Ok(())
}

/// Exact number of lattice points of the m-th dilate of the Lawrence
/// polytope: pairs `(x, mu)` with `mu >= 0`, `sum mu_i = m`, and `x` in the
/// fiber zonotope `sum [0, mu_i] b_i`.
pub fn count_lattice_points(c: &Config, m: u64, guards: &Guards) -> Result<BigInt, Error> {
    fiber_guard(c, m, guards)?;
    let fibers = compositions(m, c.len());
    let total = fibers
        .par_iter()
        .map(|mu| FiberSystem::new(c, mu).count_points())
        .reduce(BigInt::zero, |a, b| a + b);
    Ok(total)
}

/// The lattice points themselves, sorted lexicographically as `(x | mu)`.
pub fn dilate_points(c: &Config, m: u64, guards: &Guards) -> Result<Vec<LatticePoint>, Error> {
    fiber_guard(c, m, guards)?;
    let fibers = compositions(m, c.len());
    let mut points: Vec<LatticePoint> = fibers
        .par_iter()
        .map(|mu| {
            let mut out = Vec::new();
            FiberSystem::new(c, mu).collect_points(mu, &mut out);
            out
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    points.sort();
    Ok(points)
}

/// Extract the δ-polynomial from dilate counts for m = 0 .. n+d. The count
/// at m = n+d is consumed as a polynomiality witness: the same convolution
/// must produce a zero coefficient there.
pub fn delta_from_counts(counts: &[BigInt]) -> Result<IntPolynomial, Error> {
    assert!(counts.len() >= 2, "need counts for m = 0 .. n+d");
    let top = counts.len() - 1; // n + d
    let mut coeffs = Vec::with_capacity(top);
    for k in 0..=top {
        let mut delta_k = BigInt::zero();
        for j in 0..=k.min(top) {
            let term = binomial(top, j) * &counts[k - j];
            if j % 2 == 0 {
                delta_k += term;
            } else {
                delta_k -= term;
            }
        }
        if k == top {
            if !delta_k.is_zero() {
                return Err(Error::PolynomialityViolation);
            }
        } else {
            if delta_k.is_negative() {
                return Err(Error::NegativeDelta { index: k });
            }
            coeffs.push(delta_k);
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Brute-force route: count dilates m = 0 .. n+d and convolve.
pub fn delta_bruteforce(c: &Config, guards: &Guards) -> Result<IntPolynomial, Error> {
    let top = (c.rank() + c.len()) as u64;
    let counts = (0..=top)
        .map(|m| count_lattice_points(c, m, guards))
        .collect::<Result<Vec<_>, _>>()?;
    delta_from_counts(&counts)
}

/// Formula route: sum over all matroid elements F of
/// `#BOX(F) * t^(dim F) * h_F(t)`. Needs no arrangement offsets.
pub fn delta_from_formula(c: &Config, guards: &Guards) -> Result<IntPolynomial, Error> {
    let sets = independent_sets(c, guards)?;
    let d = c.rank();
    let mut acc = IntPolynomial::zero();
    for f in &sets {
        let boxes = box_count(c, f);
        if boxes == 0 {
            continue;
        }
        let codim = d - f.dim();
        let q = quotient_config(c, f);
        let qsets = independent_sets(q.config(), guards)?;
        let h = h_polynomial(&f_vector(&qsets, codim), codim);
        let term = h.shift_by_t_power(f.dim()).scale(&BigInt::from(boxes));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Bounded-cell route: the same sum with the bounded-cell h-vector of the
/// restricted arrangement in place of the matroid h-vector.
pub fn delta_from_formula_bd(
    c: &Config,
    arr: &Arrangement,
    guards: &Guards,
) -> Result<IntPolynomial, Error> {
    let sets = independent_sets(c, guards)?;
    let d = c.rank();
    let mut acc = IntPolynomial::zero();
    for f in &sets {
        let boxes = box_count(c, f);
        if boxes == 0 {
            continue;
        }
        let codim = d - f.dim();
        let res = restrict(arr, f)?;
        let cells = enumerate_cells(res.arrangement(), guards)?;
        let h_bd = h_bd_polynomial(&cells, codim);
        let term = h_bd.shift_by_t_power(f.dim()).scale(&BigInt::from(boxes));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Compute a δ-polynomial by the requested route, with provenance.
pub fn compute_delta(
    c: &Config,
    method: DeltaMethod,
    arr: Option<&Arrangement>,
    seed: Option<u64>,
    guards: &Guards,
) -> Result<DeltaResult, Error> {
    let delta = match method {
        DeltaMethod::FormulaH => delta_from_formula(c, guards)?,
        DeltaMethod::BruteForce => delta_bruteforce(c, guards)?,
        DeltaMethod::FormulaHbd => {
            let arr = arr.expect("bounded-cell route needs an arrangement");
            delta_from_formula_bd(c, arr, guards)?
        }
    };
    Ok(DeltaResult {
        delta,
        method,
        seed,
        offsets: arr.map(|a| a.offsets().to_vec()),
    })
}

/// The closed forms of the δ-coefficients: δ_0 = 1, δ_1 = sum a_i - d,
/// δ_k = 0 for k > d, and δ_d = sum over F of `#BOX(F) * R^bd_F`.
pub fn closed_form_checks(
    c: &Config,
    delta: &IntPolynomial,
    arr: &Arrangement,
    guards: &Guards,
) -> Result<Vec<CheckEntry>, Error> {
    let d = c.rank();
    let mut out = Vec::new();
    out.push(CheckEntry::compare(
        "delta_0 = 1",
        &BigInt::one(),
        &delta.coeff(0),
    ));
    let expect_d1 = c.mult_sum() - BigInt::from(d);
    out.push(CheckEntry::compare(
        "delta_1 = sum(a_i) - d",
        &expect_d1,
        &delta.coeff(1),
    ));
    let tail_ok = delta.degree().map_or(true, |deg| deg <= d);
    out.push(CheckEntry::boolean(
        "delta_k = 0 for k > d",
        tail_ok,
        "zero tail",
        if tail_ok { "zero tail" } else { "nonzero tail" },
    ));

    let sets = independent_sets(c, guards)?;
    let mut cross = BigInt::zero();
    for f in &sets {
        let boxes = box_count(c, f);
        if boxes == 0 {
            continue;
        }
        let res = restrict(arr, f)?;
        let cells = enumerate_cells(res.arrangement(), guards)?;
        let rank = res.arrangement().config().rank();
        let regions = crate::arrangement::bounded_regions_count(&cells, rank);
        cross += BigInt::from(boxes) * BigInt::from(regions);
    }
    out.push(CheckEntry::compare(
        "delta_d = sum(box * bounded regions)",
        &cross,
        &delta.coeff(d),
    ));
    Ok(out)
}

/// δ(1), the normalized volume of the Lawrence polytope.
pub fn normalized_volume(delta: &IntPolynomial) -> BigInt {
    delta.evaluate_at_integer(&BigInt::one())
}

/// The cross-check sum `sum over F of #BOX(F) * V_F` with `V_F` the number
/// of maximal elements of the quotient matroid.
pub fn volume_cross_sum(c: &Config, guards: &Guards) -> Result<BigInt, Error> {
    let sets = independent_sets(c, guards)?;
    let d = c.rank();
    let mut acc = BigInt::zero();
    for f in &sets {
        let boxes = box_count(c, f);
        if boxes == 0 {
            continue;
        }
        let q = quotient_config(c, f);
        let qsets = independent_sets(q.config(), guards)?;
        let v = bases_count(&qsets, d - f.dim());
        acc += BigInt::from(boxes) * BigInt::from(v);
    }
    Ok(acc)
}

/// Interior lattice points of grade `m`, produced by the bounded-cell
/// parameterization, deduplicated and grade-verified.
#[derive(Clone, Debug)]
pub struct InteriorCensus {
    pub points: Vec<LatticePoint>,
    /// Number of tuple emissions that collided with an earlier point. The
    /// parameterization is expected to be a bijection; collisions are
    /// surfaced so the reciprocity check can arbitrate.
    pub duplicate_emissions: usize,
}

/// Enumerate the lattice points in the interior of the cone over the
/// Lawrence polytope at grade `m`, by iterating over matroid elements F,
/// box points w of F, bounded cells C of the restricted arrangement, and
/// nonnegative integer weights on the rays compatible with C.
pub fn interior_points(
    c: &Config,
    arr: &Arrangement,
    m: u64,
    guards: &Guards,
) -> Result<InteriorCensus, Error> {
    assert!(m >= 1, "interior enumeration needs m >= 1");
    let d = c.rank();
    let n = c.len();
    let sets = independent_sets(c, guards)?;
    let mut seen: BTreeSet<LatticePoint> = BTreeSet::new();
    let mut duplicates = 0usize;

    for f in &sets {
        let boxf = box_points(c, f);
        if boxf.is_empty() {
            continue;
        }
        let res = restrict(arr, f)?;
        let cells = enumerate_cells(res.arrangement(), guards)?;
        for cell in cells.iter().filter(|cell| cell.bounded()) {
            // full sign pattern of the cell against the original
            // hyperplanes, read off a lifted witness point
            let lifted = res.lift(cell.witness());
            let mut base = vec![BigInt::zero(); d + n];
            let mut rays: Vec<LatticePoint> = Vec::new();
            let mut base_grade = 0u64;
            for i in 0..n {
                let top = |out: &mut Vec<BigInt>| {
                    for (k, e) in c.vector(i).iter().enumerate() {
                        out[k] += e;
                    }
                    out[d + i] += BigInt::one();
                };
                let mut ray_top = vec![BigInt::zero(); d + n];
                top(&mut ray_top);
                let mut ray_bottom = vec![BigInt::zero(); d + n];
                ray_bottom[d + i] = BigInt::one();
                if f.contains(i) {
                    // handled by the box lift; both rays stay free
                    rays.push(ray_top);
                    rays.push(ray_bottom);
                    continue;
                }
                match arr.sign_at(&lifted, i) {
                    Sign::Neg => {
                        top(&mut base);
                        base_grade += 1;
                        rays.push(ray_top);
                    }
                    Sign::Pos => {
                        base[d + i] += BigInt::one();
                        base_grade += 1;
                        rays.push(ray_bottom);
                    }
                    Sign::Zero => {
                        top(&mut base);
                        base[d + i] += BigInt::one();
                        base_grade += 2;
                        rays.push(ray_top);
                        rays.push(ray_bottom);
                    }
                }
            }
            let lift_grade = f.dim() as u64;
            if base_grade + lift_grade > m {
                continue;
            }
            let budget = m - base_grade - lift_grade;
            let tuple_count = binomial((budget as usize) + rays.len() - 1, rays.len() - 1);
            if tuple_count > BigInt::from(guards.max_dilate_fibers) {
                return Err(Error::SizeGuard {
                    what: "interior-point weight enumeration",
                    limit: guards.max_dilate_fibers,
                    requested: u64::MAX,
                });
            }
            for w in &boxf {
                // l(w) = (w, sum of e_i over F)
                let mut start = base.clone();
                for (k, e) in w.point().iter().enumerate() {
                    start[k] += e;
                }
                for &i in f.indices() {
                    start[d + i] += BigInt::one();
                }
                distribute_budget(&start, &rays, budget, &mut |point| {
                    debug_assert_eq!(
                        point[d..].iter().sum::<BigInt>(),
                        BigInt::from(m),
                        "emitted point has wrong grade"
                    );
                    if !seen.insert(point.to_vec()) {
                        duplicates += 1;
                    }
                });
            }
        }
    }
    // re-verify the grade of every accepted point
    let points: Vec<LatticePoint> = seen.into_iter().collect();
    for p in &points {
        assert_eq!(
            p[d..].iter().sum::<BigInt>(),
            BigInt::from(m),
            "interior point failed grade re-verification"
        );
    }
    Ok(InteriorCensus {
        points,
        duplicate_emissions: duplicates,
    })
}

/// Add every distribution of `budget` among the rays to `start`, calling
/// `emit` once per distribution.
fn distribute_budget<FN: FnMut(&[BigInt])>(
    start: &[BigInt],
    rays: &[LatticePoint],
    budget: u64,
    emit: &mut FN,
) {
    if rays.is_empty() {
        if budget == 0 {
            emit(start);
        }
        return;
    }
    fn rec<FN: FnMut(&[BigInt])>(
        point: &mut Vec<BigInt>,
        rays: &[LatticePoint],
        idx: usize,
        budget: u64,
        emit: &mut FN,
    ) {
        if idx == rays.len() - 1 {
            // dump the rest on the final ray
            let mut p = point.clone();
            if budget > 0 {
                let scale = BigInt::from(budget);
                for (slot, e) in p.iter_mut().zip(&rays[idx]) {
                    *slot += e * &scale;
                }
            }
            emit(&p);
            return;
        }
        let saved = point.clone();
        for q in 0..=budget {
            rec(point, rays, idx + 1, budget - q, emit);
            if q < budget {
                for (slot, e) in point.iter_mut().zip(&rays[idx]) {
                    *slot += e;
                }
            }
        }
        *point = saved;
    }
    let mut point = start.to_vec();
    rec(&mut point, rays, 0, budget, emit);
}

/// Power-series coefficients of `t^(d+n) δ(1/t) / (1-t)^(d+n)` up to
/// `m_max`; coefficient `m` is the predicted interior count of the m-th
/// dilate.
pub fn reciprocity_series(
    delta: &IntPolynomial,
    ambient: usize,
    m_max: u64,
) -> Result<Vec<BigInt>, Error> {
    let numerator = delta.substitute_reciprocal(ambient)?;
    Ok(numerator.series_over_one_minus_t_pow(ambient, m_max as usize + 1))
}

/// Compare interior counts against the reciprocity series coefficient by
/// coefficient for 1 <= m <= m_max.
pub fn reciprocity_check(
    c: &Config,
    delta: &IntPolynomial,
    arr: &Arrangement,
    m_max: u64,
    guards: &Guards,
) -> Result<Vec<CheckEntry>, Error> {
    let ambient = c.rank() + c.len();
    let series = reciprocity_series(delta, ambient, m_max)?;
    let mut out = Vec::new();
    for m in 1..=m_max {
        let census = interior_points(c, arr, m, guards)?;
        let got = BigInt::from(census.points.len());
        out.push(CheckEntry::compare(
            format!("reciprocity coefficient m={m}"),
            &series[m as usize],
            &got,
        ));
        if census.duplicate_emissions > 0 {
            out.push(CheckEntry::fail(
                format!("interior parameterization uniqueness m={m}"),
                "0 duplicate emissions",
                format!("{} duplicate emissions", census.duplicate_emissions),
            ));
        }
    }
    Ok(out)
}

/// The explicit lattice points of the Lawrence polytope itself:
/// `(lambda v_i, e_i)` for `0 <= lambda <= a_i`, sorted.
pub fn lattice_points_of_p(c: &Config) -> Vec<LatticePoint> {
    let d = c.rank();
    let n = c.len();
    let mut out = Vec::new();
    for i in 0..n {
        let mut lambda = BigInt::zero();
        while lambda <= *c.mult(i) {
            let mut p = vec![BigInt::zero(); d + n];
            for (k, e) in c.prim(i).iter().enumerate() {
                p[k] = e * &lambda;
            }
            p[d + i] = BigInt::one();
            out.push(p);
            lambda += 1;
        }
    }
    out.sort();
    out
}

/// Set equality of the explicit lattice points of P against the m = 1
/// brute-force enumeration, plus the cardinality identity sum(a_i + 1).
pub fn lattice_points_check(c: &Config, guards: &Guards) -> Result<Vec<CheckEntry>, Error> {
    let explicit = lattice_points_of_p(c);
    let brute = dilate_points(c, 1, guards)?;
    let mut out = Vec::new();
    out.push(CheckEntry::boolean(
        "lattice points of P match m=1 enumeration",
        explicit == brute,
        "set equality",
        if explicit == brute { "set equality" } else { "sets differ" },
    ));
    let expect: BigInt = c.mult_sum() + BigInt::from(c.len());
    out.push(CheckEntry::compare(
        "lattice point count = sum(a_i + 1)",
        &expect,
        &BigInt::from(explicit.len()),
    ));
    Ok(out)
}

/// Coefficient monotonicity δ_i <= δ_j for i <= j <= d - i, applicable
/// only to coloop-free configurations; otherwise reports "not applicable".
pub fn inequality_check(c: &Config, delta: &IntPolynomial) -> Vec<CheckEntry> {
    let d = c.rank();
    if !is_coloop_free(c) {
        return vec![CheckEntry::skipped(
            "delta monotonicity",
            "not applicable: configuration has a coloop",
        )];
    }
    let mut out = Vec::new();
    let mut all_ok = true;
    for i in 0..=d {
        for j in i..=d.saturating_sub(i) {
            if j < i {
                continue;
            }
            let (a, b) = (delta.coeff(i), delta.coeff(j));
            if a > b {
                all_ok = false;
                out.push(CheckEntry::fail(
                    format!("delta_{i} <= delta_{j}"),
                    format!("delta_{i} <= delta_{j}"),
                    format!("{a} > {b}"),
                ));
            }
        }
    }
    if all_ok {
        out.push(CheckEntry::pass(
            "delta monotonicity",
            "delta_i <= delta_j for i <= j <= d-i",
        ));
    }
    out
}

/// Degree bound: deg δ <= d.
pub fn degree_bound_check(delta: &IntPolynomial, rank: usize) -> bool {
    delta.degree().map_or(true, |deg| deg <= rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::choose_offsets;

    fn example3() -> Config {
        Config::validate_i64(2, &[vec![1, 0], vec![0, 1], vec![-2, 0], vec![2, -1]]).unwrap()
    }

    fn example3_arrangement() -> Arrangement {
        Arrangement::from_integer_offsets(example3(), &[0, 0, 2, -1]).unwrap()
    }

    fn guards() -> Guards {
        Guards::default()
    }

    #[test]
    fn lawrence_polytope_shape() {
        let p = LawrencePolytope::new(example3());
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.dim(), 5);
        assert_eq!(p.ambient_rank(), 6);
    }

    #[test]
    fn count_small_dilates() {
        let c = example3();
        assert_eq!(count_lattice_points(&c, 0, &guards()).unwrap(), BigInt::one());
        // f(1) = sum(a_i + 1) = 2 + 2 + 3 + 2
        assert_eq!(
            count_lattice_points(&c, 1, &guards()).unwrap(),
            BigInt::from(9)
        );
    }

    #[test]
    fn unit_square_counts() {
        // d=1, B={1,1}: the polytope is a unit square, f(m) = (m+1)^2
        let c = Config::validate_i64(1, &[vec![1], vec![1]]).unwrap();
        for m in 0..=4u64 {
            assert_eq!(
                count_lattice_points(&c, m, &guards()).unwrap(),
                BigInt::from((m + 1) * (m + 1)),
                "m={m}"
            );
        }
        let delta = delta_bruteforce(&c, &guards()).unwrap();
        assert_eq!(delta, IntPolynomial::from_i64(&[1, 1]));
    }

    #[test]
    fn delta_from_counts_witness() {
        // (m+1)^2 with n+d = 3 gives 1 + t
        let counts: Vec<BigInt> = (0..=3u64).map(|m| BigInt::from((m + 1) * (m + 1))).collect();
        assert_eq!(
            delta_from_counts(&counts).unwrap(),
            IntPolynomial::from_i64(&[1, 1])
        );
        // unimodular simplex counts C(m + D, D) expand over (1-t)^(D+1)
        // and give delta = 1
        let simplex: Vec<BigInt> = (0..=4usize).map(|m| binomial(m + 3, 3)).collect();
        assert_eq!(delta_from_counts(&simplex).unwrap(), IntPolynomial::one());
        // corrupting a count breaks polynomiality
        let mut bad = counts;
        bad[3] += 1;
        assert!(matches!(
            delta_from_counts(&bad),
            Err(Error::PolynomialityViolation)
        ));
    }

    #[test]
    fn example_delta_three_routes() {
        let c = example3();
        let expect = IntPolynomial::from_i64(&[1, 3, 4]);
        assert_eq!(delta_from_formula(&c, &guards()).unwrap(), expect);
        let arr = example3_arrangement();
        assert_eq!(delta_from_formula_bd(&c, &arr, &guards()).unwrap(), expect);
        assert_eq!(delta_bruteforce(&c, &guards()).unwrap(), expect);
    }

    #[test]
    fn formula_standard_basis() {
        let c = Config::validate_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(delta_from_formula(&c, &guards()).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn formula_single_doubled_vector() {
        // {2} alone does not generate Z, so this goes through the internal
        // constructor; the formula is still well-defined and the dilate
        // counts 2m + 1 give the same answer
        let c = Config::new_unchecked(1, vec![vec![BigInt::from(2)]]);
        assert_eq!(
            delta_from_formula(&c, &guards()).unwrap(),
            IntPolynomial::from_i64(&[1, 1])
        );
        assert_eq!(
            delta_bruteforce(&c, &guards()).unwrap(),
            IntPolynomial::from_i64(&[1, 1])
        );
    }

    #[test]
    fn formula_bd_single_coloop() {
        // d=1, B={1}: no bounded region; the single bounded vertex carries
        // h^bd = 1 and the box is empty, so delta = 1
        let c = Config::validate_i64(1, &[vec![1]]).unwrap();
        let arr = choose_offsets(&c, 0).unwrap();
        assert_eq!(
            delta_from_formula_bd(&c, &arr, &guards()).unwrap(),
            IntPolynomial::one()
        );
        assert_eq!(delta_from_formula(&c, &guards()).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn closed_forms_example() {
        let c = example3();
        let arr = example3_arrangement();
        let delta = delta_from_formula(&c, &guards()).unwrap();
        let checks = closed_form_checks(&c, &delta, &arr, &guards()).unwrap();
        assert!(checks.iter().all(|e| e.passed()), "{checks:?}");
    }

    #[test]
    fn volume_identity_example() {
        let c = example3();
        let delta = delta_from_formula(&c, &guards()).unwrap();
        assert_eq!(normalized_volume(&delta), BigInt::from(8));
        assert_eq!(volume_cross_sum(&c, &guards()).unwrap(), BigInt::from(8));
    }

    #[test]
    fn interior_points_example() {
        let c = example3();
        let arr = example3_arrangement();
        for m in 1..=3u64 {
            let census = interior_points(&c, &arr, m, &guards()).unwrap();
            assert!(census.points.is_empty(), "no interior points below m = n");
            assert_eq!(census.duplicate_emissions, 0);
        }
        let census = interior_points(&c, &arr, 4, &guards()).unwrap();
        assert_eq!(census.points.len(), 4);
        assert_eq!(census.duplicate_emissions, 0);
    }

    #[test]
    fn reciprocity_example() {
        let c = example3();
        let arr = example3_arrangement();
        let delta = delta_from_formula(&c, &guards()).unwrap();
        // frozen prefix of the series of t^6 (4/t^2 + 3/t + 1) / (1-t)^6
        let series = reciprocity_series(&delta, 6, 6).unwrap();
        let expect: Vec<BigInt> = [0, 0, 0, 0, 4, 27, 103]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(series, expect);
        let checks = reciprocity_check(&c, &delta, &arr, 6, &guards()).unwrap();
        assert!(checks.iter().all(|e| e.passed()), "{checks:?}");
    }

    #[test]
    fn reciprocity_standard_basis_d2() {
        // delta = 1, n = d = 2: first interior point at m = 4
        let c = Config::validate_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let arr = choose_offsets(&c, 0).unwrap();
        let delta = delta_from_formula(&c, &guards()).unwrap();
        let series = reciprocity_series(&delta, 4, 5).unwrap();
        let expect: Vec<BigInt> = [0, 0, 0, 0, 1, 4]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(series, expect);
        let checks = reciprocity_check(&c, &delta, &arr, 5, &guards()).unwrap();
        assert!(checks.iter().all(|e| e.passed()), "{checks:?}");
    }

    #[test]
    fn lattice_points_of_p_cases() {
        let c = example3();
        let pts = lattice_points_of_p(&c);
        assert_eq!(pts.len(), 9);
        let checks = lattice_points_check(&c, &guards()).unwrap();
        assert!(checks.iter().all(|e| e.passed()), "{checks:?}");

        let c = Config::new_unchecked(1, vec![vec![BigInt::from(2)]]);
        let pts = lattice_points_of_p(&c);
        let expect: Vec<LatticePoint> = vec![
            vec![BigInt::from(0), BigInt::one()],
            vec![BigInt::from(1), BigInt::one()],
            vec![BigInt::from(2), BigInt::one()],
        ];
        assert_eq!(pts, expect);

        // standard basis: the 2n lattice points are exactly the vertices
        let c = Config::validate_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(lattice_points_of_p(&c).len(), 4);
    }

    #[test]
    fn inequality_checks() {
        let c = example3();
        let delta = delta_from_formula(&c, &guards()).unwrap();
        let entries = inequality_check(&c, &delta);
        assert!(entries.iter().all(|e| e.passed()));

        // the known coloop counterexample is flagged, not asserted
        let c = Config::validate_i64(1, &[vec![1]]).unwrap();
        let delta = delta_from_formula(&c, &guards()).unwrap();
        let entries = inequality_check(&c, &delta);
        assert_eq!(entries.len(), 1);
        assert!(entries[0].is_skipped());
        // and indeed delta_0 > delta_1 there
        assert!(delta.coeff(0) > delta.coeff(1));
    }

    #[test]
    fn orientation_flip_invariance() {
        let c = example3();
        let expect = delta_from_formula(&c, &guards()).unwrap();
        let flipped = c.flip_orientations(&[false, false, true, false]);
        assert_eq!(flipped.vector(2), &[BigInt::from(2), BigInt::zero()]);
        assert_eq!(delta_from_formula(&flipped, &guards()).unwrap(), expect);
        let all = c.flip_orientations(&[true, true, true, true]);
        assert_eq!(delta_from_formula(&all, &guards()).unwrap(), expect);
        let none = c.flip_orientations(&[false, false, false, false]);
        assert_eq!(none, c);
    }

    #[test]
    fn degree_bound_cases() {
        let delta = IntPolynomial::from_i64(&[1, 3, 4]);
        assert!(degree_bound_check(&delta, 2));
        assert!(degree_bound_check(&IntPolynomial::one(), 1));
        assert!(!degree_bound_check(&delta, 1));
    }

    #[test]
    fn fiber_guard_trips() {
        let c = example3();
        let tight = Guards {
            max_dilate_fibers: 3,
            ..Guards::default()
        };
        assert!(matches!(
            count_lattice_points(&c, 1, &tight),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn graded_counts_are_monotone() {
        let c = example3();
        let mut prev = BigInt::zero();
        for m in 0..=4u64 {
            let count = count_lattice_points(&c, m, &guards()).unwrap();
            assert!(count >= prev);
            prev = count;
        }
    }
}
