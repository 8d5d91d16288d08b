//! Exact linear programming over rationals.
//!
//! A dense two-phase simplex. Every number in the tableau is an exact
//! rational, so feasibility and optimality answers are exact decisions,
//! never subject to tolerances. Entering columns are chosen by steepest-edge
//! pricing and ties in the ratio test are broken lexicographically, which
//! rules out cycling. For speed the solver first runs with machine-word
//! rationals (`i128` numerator and denominator) and all arithmetic checked;
//! on any overflow it transparently redoes the solve with
//! arbitrary-precision rationals. Both paths pivot identically, so the
//! result is deterministic either way.

use std::cmp::Ordering;

use num_rational::Ratio;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    LessEq,
    Equal,
    GreaterEq,
}

/// One linear constraint `coeffs . x REL rhs` over implicitly nonnegative
/// variables.
#[derive(Clone, Debug)]
pub struct Constraint {
    coeffs: Vec<Rational>,
    relation: Relation,
    rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn less_eq(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self::new(coeffs, Relation::LessEq, rhs)
    }

    pub fn equal(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self::new(coeffs, Relation::Equal, rhs)
    }

    pub fn greater_eq(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self::new(coeffs, Relation::GreaterEq, rhs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn rhs(&self) -> &Rational {
        &self.rhs
    }

    /// Whether `point` satisfies this constraint exactly.
    pub fn satisfied_by(&self, point: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(point).map(|(c, x)| c * x).sum();
        match self.relation {
            Relation::LessEq => lhs <= self.rhs,
            Relation::Equal => lhs == self.rhs,
            Relation::GreaterEq => lhs >= self.rhs,
        }
    }
}

/// `min`/`max` of a linear objective subject to [`Constraint`]s, all
/// variables nonnegative.
#[derive(Clone, Debug)]
pub struct LpProblem {
    sense: Sense,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LpProblem {
    /// Validates that there is at least one variable and that every
    /// constraint has one coefficient per variable.
    pub fn new(
        sense: Sense,
        objective: Vec<Rational>,
        constraints: Vec<Constraint>,
    ) -> Result<Self> {
        if objective.is_empty() {
            return Err(Error::InvalidParameter(
                "LP needs at least one variable".into(),
            ));
        }
        for (i, c) in constraints.iter().enumerate() {
            if c.coeffs.len() != objective.len() {
                return Err(Error::DimensionMismatch(format!(
                    "constraint {i} has {} coefficients for {} variables",
                    c.coeffs.len(),
                    objective.len()
                )));
            }
        }
        Ok(LpProblem {
            sense,
            objective,
            constraints,
        })
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// An exact optimum, attained at the returned basic feasible solution.
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

/// Solves the program exactly. Deterministic: the same problem always yields
/// the same outcome, value, and solution vector.
pub fn solve(problem: &LpProblem) -> LpOutcome {
    let minimize = match problem.sense {
        Sense::Minimize => problem.objective.clone(),
        Sense::Maximize => problem.objective.iter().map(|c| -c).collect(),
    };
    match run_both_paths(&minimize, &problem.constraints) {
        RawOutcome::Optimal { value, solution } => LpOutcome::Optimal {
            value: match problem.sense {
                Sense::Minimize => value,
                Sense::Maximize => -value,
            },
            solution,
        },
        RawOutcome::Infeasible => LpOutcome::Infeasible,
        RawOutcome::Unbounded => LpOutcome::Unbounded,
    }
}

/// A point satisfying all `constraints` with every coordinate nonnegative,
/// if one exists. Phase 1 only in effect; the returned point is a basic
/// feasible solution of the system.
pub fn feasible(num_vars: usize, constraints: &[Constraint]) -> Result<Option<Vec<Rational>>> {
    if num_vars == 0 {
        return Err(Error::InvalidParameter(
            "feasibility needs at least one variable".into(),
        ));
    }
    for (i, c) in constraints.iter().enumerate() {
        if c.coeffs.len() != num_vars {
            return Err(Error::DimensionMismatch(format!(
                "constraint {i} has {} coefficients for {num_vars} variables",
                c.coeffs.len()
            )));
        }
    }
    let zero_objective = vec![Rational::zero(); num_vars];
    Ok(match run_both_paths(&zero_objective, constraints) {
        RawOutcome::Optimal { solution, .. } => Some(solution),
        RawOutcome::Infeasible => None,
        RawOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    })
}

/// Checks that `problem` attains exactly `claimed_dual_value`, the optimum of
/// its dual. True only when the primal has an optimum equal to the claim;
/// an infeasible or unbounded primal fails the check.
pub fn verify_duality(problem: &LpProblem, claimed_dual_value: &Rational) -> bool {
    match solve(problem) {
        LpOutcome::Optimal { value, .. } => value == *claimed_dual_value,
        _ => false,
    }
}

enum RawOutcome {
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

fn run_both_paths(minimize: &[Rational], constraints: &[Constraint]) -> RawOutcome {
    if let Some(out) = simplex::<Ratio<i128>>(minimize, constraints) {
        return out;
    }
    simplex::<Rational>(minimize, constraints).expect("bignum path cannot overflow")
}

/// Tableau arithmetic, fallible so the machine-word path can bail out on
/// overflow. The bignum implementation never fails.
trait Scalar: Clone + PartialOrd + Zero + One + Signed {
    fn from_rational(r: &Rational) -> Option<Self>;
    fn into_rational(self) -> Rational;
    fn checked_neg(&self) -> Option<Self>;
    /// `self - f * x`
    fn checked_sub_mul(&self, f: &Self, x: &Self) -> Option<Self>;
    fn checked_div(&self, d: &Self) -> Option<Self>;
    /// Approximate value, used only to rank pivot candidates.
    fn to_f64(&self) -> f64;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }

    fn into_rational(self) -> Rational {
        self
    }

    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }

    fn checked_sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        Some(self - f * x)
    }

    fn checked_div(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(0.0)
    }
}

impl Scalar for Ratio<i128> {
    fn from_rational(r: &Rational) -> Option<Self> {
        let numer = r.numer().to_i128()?;
        let denom = r.denom().to_i128()?;
        Some(Ratio::new(numer, denom))
    }

    fn into_rational(self) -> Rational {
        Rational::new((*self.numer()).into(), (*self.denom()).into())
    }

    fn checked_neg(&self) -> Option<Self> {
        <Self as Zero>::zero().checked_sub(self)
    }

    fn checked_sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(&f.checked_mul(x)?)
    }

    fn checked_div(&self, d: &Self) -> Option<Self> {
        CheckedDiv::checked_div(self, d)
    }

    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

struct Tableau<S> {
    /// Data rows, each `ncols + 1` long with the rhs in the last slot.
    rows: Vec<Vec<S>>,
    /// Phase-1 and phase-2 reduced-cost rows, same layout as data rows.
    cost: [Vec<S>; 2],
    /// Basic variable of each data row.
    basis: Vec<usize>,
    /// Columns still eligible to enter; only artificials ever get retired.
    eligible: Vec<bool>,
    num_structural: usize,
    artificial_start: usize,
    ncols: usize,
}

/// The relation after normalizing the row to a nonnegative rhs.
fn effective_relation(c: &Constraint) -> Relation {
    match (c.relation, Signed::is_negative(&c.rhs)) {
        (Relation::Equal, _) => Relation::Equal,
        (Relation::LessEq, false) | (Relation::GreaterEq, true) => Relation::LessEq,
        (Relation::LessEq, true) | (Relation::GreaterEq, false) => Relation::GreaterEq,
    }
}

fn simplex<S: Scalar>(minimize: &[Rational], constraints: &[Constraint]) -> Option<RawOutcome> {
    let mut t = build_tableau::<S>(minimize, constraints)?;
    crash_zero_rows(&mut t)?;

    // Phase 1: minimize the sum of artificials.
    run_phase(&mut t, 0)?;
    let phase1_value = t.cost[0][t.ncols].checked_neg()?;
    if phase1_value.is_positive() {
        return Some(RawOutcome::Infeasible);
    }
    drive_out_artificials(&mut t)?;

    // Phase 2: minimize the real objective from the feasible basis reached.
    if let PhaseEnd::Unbounded = run_phase(&mut t, 1)? {
        return Some(RawOutcome::Unbounded);
    }

    let mut solution = vec![S::zero(); t.num_structural];
    for (r, &var) in t.basis.iter().enumerate() {
        if var < t.num_structural {
            solution[var] = t.rows[r][t.ncols].clone();
        }
    }
    let value = t.cost[1][t.ncols].checked_neg()?;
    Some(RawOutcome::Optimal {
        value: value.into_rational(),
        solution: solution.into_iter().map(Scalar::into_rational).collect(),
    })
}

fn build_tableau<S: Scalar>(
    minimize: &[Rational],
    constraints: &[Constraint],
) -> Option<Tableau<S>> {
    let nv = minimize.len();
    let num_slack = constraints
        .iter()
        .filter(|c| effective_relation(c) != Relation::Equal)
        .count();
    let num_artificial = constraints
        .iter()
        .filter(|c| effective_relation(c) != Relation::LessEq)
        .count();
    let artificial_start = nv + num_slack;
    let ncols = artificial_start + num_artificial;

    let mut rows = Vec::with_capacity(constraints.len());
    let mut basis = Vec::with_capacity(constraints.len());
    let mut next_slack = nv;
    let mut next_artificial = artificial_start;
    for c in constraints {
        // Flip rows with a negative rhs so the starting basis is feasible.
        let flip = Signed::is_negative(&c.rhs);
        let mut row = vec![S::zero(); ncols + 1];
        for (j, coeff) in c.coeffs.iter().enumerate() {
            let v = S::from_rational(coeff)?;
            row[j] = if flip { v.checked_neg()? } else { v };
        }
        let rhs = S::from_rational(&c.rhs)?;
        row[ncols] = if flip { rhs.checked_neg()? } else { rhs };
        match effective_relation(c) {
            Relation::LessEq => {
                row[next_slack] = S::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::GreaterEq => {
                row[next_slack] = S::one().checked_neg()?;
                next_slack += 1;
                row[next_artificial] = S::one();
                basis.push(next_artificial);
                next_artificial += 1;
            }
            Relation::Equal => {
                row[next_artificial] = S::one();
                basis.push(next_artificial);
                next_artificial += 1;
            }
        }
        rows.push(row);
    }
    debug_assert_eq!(next_slack, artificial_start);
    debug_assert_eq!(next_artificial, ncols);

    // Phase-1 cost row: ones on artificials, priced out over the starting
    // basis by subtracting every artificial-basic row.
    let one = S::one();
    let mut cost1 = vec![S::zero(); ncols + 1];
    for j in artificial_start..ncols {
        cost1[j] = S::one();
    }
    for (r, row) in rows.iter().enumerate() {
        if basis[r] >= artificial_start {
            for j in 0..=ncols {
                if !row[j].is_zero() {
                    cost1[j] = cost1[j].checked_sub_mul(&one, &row[j])?;
                }
            }
        }
    }

    let mut cost2 = vec![S::zero(); ncols + 1];
    for (j, coeff) in minimize.iter().enumerate() {
        cost2[j] = S::from_rational(coeff)?;
    }

    Some(Tableau {
        rows,
        cost: [cost1, cost2],
        basis,
        eligible: vec![true; ncols],
        num_structural: nv,
        artificial_start,
        ncols,
    })
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

fn run_phase<S: Scalar>(t: &mut Tableau<S>, phase: usize) -> Option<PhaseEnd> {
    // Entering columns are scored by a steepest-edge measure: reduced cost
    // squared over the squared length of the updated column. The score only
    // ranks candidates, so hardware floats suffice; whether a column is
    // eligible at all is decided on the exact reduced cost.
    //
    // The leaving row is the lexicographic minimum among the tied minimum
    // ratios. Under that rule the cost row decreases strictly in the
    // lexicographic order at every pivot, so no basis repeats and the phase
    // terminates no matter which eligible column enters.
    let lex_order = lex_column_order(t);
    loop {
        // Phase 2 never considers artificials.
        let scan_end = if phase == 0 { t.ncols } else { t.artificial_start };
        let mut entering: Option<(usize, f64)> = None;
        for j in 0..scan_end {
            if !t.eligible[j] || !t.cost[phase][j].is_negative() {
                continue;
            }
            let c = t.cost[phase][j].to_f64();
            let mut norm = 1.0f64;
            for row in &t.rows {
                let a = row[j].to_f64();
                norm += a * a;
            }
            let score = if norm.is_finite() { c * c / norm } else { 0.0 };
            if entering.as_ref().is_none_or(|&(_, best)| score > best) {
                entering = Some((j, score));
            }
        }
        let Some((entering, _)) = entering else {
            return Some(PhaseEnd::Optimal);
        };

        let mut tied: Vec<usize> = Vec::new();
        let mut best_ratio: Option<S> = None;
        for r in 0..t.rows.len() {
            let a = &t.rows[r][entering];
            if !a.is_positive() {
                continue;
            }
            let ratio = t.rows[r][t.ncols].checked_div(a)?;
            match &best_ratio {
                None => {
                    best_ratio = Some(ratio);
                    tied.push(r);
                }
                Some(best) => match ratio.partial_cmp(best)? {
                    Ordering::Less => {
                        best_ratio = Some(ratio);
                        tied.clear();
                        tied.push(r);
                    }
                    Ordering::Equal => tied.push(r),
                    Ordering::Greater => {}
                },
            }
        }
        if tied.is_empty() {
            // No positive entry: the entering direction is unbounded. Cannot
            // happen in phase 1, whose objective is bounded below by zero.
            debug_assert_eq!(phase, 1);
            return Some(PhaseEnd::Unbounded);
        }
        let leaving = lex_leaving(t, tied, entering, &lex_order)?;
        pivot(t, leaving, entering)?;
    }
}

/// Column order for lexicographic comparisons: the current basis columns
/// first, then the rest. Every data row then starts lexicographically
/// positive, its first nonzero entry being the one in its own basis column.
fn lex_column_order<S: Scalar>(t: &Tableau<S>) -> Vec<usize> {
    let mut in_basis = vec![false; t.ncols];
    for &b in &t.basis {
        in_basis[b] = true;
    }
    let mut order = t.basis.clone();
    order.extend((0..t.ncols).filter(|&j| !in_basis[j]));
    order
}

/// Resolves a ratio-test tie: of the `tied` rows, the one whose row scaled
/// by its entry in the entering column is lexicographically smallest.
fn lex_leaving<S: Scalar>(
    t: &Tableau<S>,
    mut tied: Vec<usize>,
    entering: usize,
    order: &[usize],
) -> Option<usize> {
    for &j in order {
        if tied.len() == 1 {
            break;
        }
        if j == entering {
            continue;
        }
        let mut keep: Vec<usize> = Vec::with_capacity(tied.len());
        let mut min_q: Option<S> = None;
        for &r in &tied {
            let q = t.rows[r][j].checked_div(&t.rows[r][entering])?;
            match &min_q {
                None => {
                    min_q = Some(q);
                    keep.push(r);
                }
                Some(m) => match q.partial_cmp(m)? {
                    Ordering::Less => {
                        min_q = Some(q);
                        keep.clear();
                        keep.push(r);
                    }
                    Ordering::Equal => keep.push(r),
                    Ordering::Greater => {}
                },
            }
        }
        tied = keep;
    }
    Some(tied[0])
}

/// Pivots the artificial of every zero-rhs row out of the basis before
/// phase 1. Each pivot is degenerate, so feasibility and the phase-1
/// objective are untouched, but afterwards the reduced costs price real
/// columns against the rows that actually carry infeasibility instead of a
/// thicket of artificials basic at zero.
fn crash_zero_rows<S: Scalar>(t: &mut Tableau<S>) -> Option<()> {
    let mut col_count = vec![0usize; t.artificial_start];
    for row in &t.rows {
        for (j, count) in col_count.iter_mut().enumerate() {
            if !row[j].is_zero() {
                *count += 1;
            }
        }
    }
    for r in 0..t.rows.len() {
        if t.basis[r] < t.artificial_start || !t.rows[r][t.ncols].is_zero() {
            continue;
        }
        let pick = (0..t.artificial_start)
            .filter(|&j| !t.rows[r][j].is_zero())
            .min_by_key(|&j| col_count[j]);
        if let Some(c) = pick {
            pivot(t, r, c)?;
        }
    }
    Some(())
}

/// After phase 1 every artificial sits at value zero; pivot each one out of
/// the basis if its row touches any real column. A row that does not is a
/// redundant constraint and keeps its artificial, harmlessly basic at zero.
fn drive_out_artificials<S: Scalar>(t: &mut Tableau<S>) -> Option<()> {
    for r in 0..t.rows.len() {
        if t.basis[r] < t.artificial_start {
            continue;
        }
        let replacement = (0..t.artificial_start).find(|&j| !t.rows[r][j].is_zero());
        if let Some(c) = replacement {
            pivot(t, r, c)?;
        }
    }
    Some(())
}

fn pivot<S: Scalar>(t: &mut Tableau<S>, r: usize, c: usize) -> Option<()> {
    let pivot_value = t.rows[r][c].clone();
    debug_assert!(!pivot_value.is_zero());
    for x in &mut t.rows[r] {
        if !x.is_zero() {
            *x = x.checked_div(&pivot_value)?;
        }
    }
    let pivot_row = std::mem::take(&mut t.rows[r]);
    let touched: Vec<usize> = (0..=t.ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
    for (i, row) in t.rows.iter_mut().enumerate() {
        if i != r {
            eliminate(row, c, &pivot_row, &touched)?;
        }
    }
    for cost_row in &mut t.cost {
        eliminate(cost_row, c, &pivot_row, &touched)?;
    }
    t.rows[r] = pivot_row;

    let outgoing = t.basis[r];
    if outgoing >= t.artificial_start {
        // An artificial that has left the basis never needs to come back.
        t.eligible[outgoing] = false;
    }
    t.basis[r] = c;
    Some(())
}

/// Subtracts `row[c] * pivot_row` from `row`, visiting only the nonzero
/// positions of the pivot row.
fn eliminate<S: Scalar>(row: &mut [S], c: usize, pivot_row: &[S], touched: &[usize]) -> Option<()> {
    let factor = row[c].clone();
    if factor.is_zero() {
        return Some(());
    }
    for &j in touched {
        row[j] = row[j].checked_sub_mul(&factor, &pivot_row[j])?;
    }
    Some(())
}
