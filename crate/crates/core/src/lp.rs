//! Exact linear and integer programming on small dense problems.
//!
//! Two-phase primal simplex over `Q` with Bland's rule, plus a
//! depth-first branch and bound for integer optima. All variables are
//! non-negative.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }

    /// Builds a constraint from integer data.
    pub fn int(coeffs: &[i64], relation: Relation, rhs: i64) -> Self {
        Constraint::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
            relation,
            Rational::from_integer(rhs.into()),
        )
    }

    fn satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `obj` (indexed by column, length `width`) over the current
    /// basis restricted to columns `< allowed`. Returns `false` when
    /// unbounded.
    fn optimize(&mut self, obj: &[Rational], allowed: usize) -> bool {
        loop {
            // reduced costs: obj_j - sum_i obj_{basis_i} * row_i[j]
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut rc = obj[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[j].is_zero() {
                        rc -= &obj[self.basis[i]] * &row[j];
                    }
                }
                rc.is_positive()
            });
            let Some(c) = entering else {
                return true;
            };
            let rhs = self.width;
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c);
        }
    }

    fn value(&self, obj: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rows)
            .map(|(&b, row)| &obj[b] * &row[self.width])
            .sum()
    }
}

/// Maximizes `objective . x` subject to the constraints and `x >= 0`.
pub fn maximize(objective: &[Rational], constraints: &[Constraint]) -> LpOutcome {
    let n = objective.len();
    let m = constraints.len();
    // columns: structural | one slack per inequality | one artificial per row
    let slack_of: Vec<Option<usize>> = {
        let mut next = n;
        constraints
            .iter()
            .map(|c| {
                (c.relation != Relation::Eq).then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    };
    let nslack = slack_of.iter().flatten().count();
    let art0 = n + nslack;
    let width = art0 + m;
    let mut rows = Vec::with_capacity(m);
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), n, "constraint width");
        let mut row = vec![Rational::zero(); width + 1];
        for (j, v) in c.coeffs.iter().enumerate() {
            row[j] = v.clone();
        }
        if let Some(s) = slack_of[i] {
            row[s] = match c.relation {
                Relation::Le => Rational::one(),
                _ => -Rational::one(),
            };
        }
        row[width] = c.rhs.clone();
        if row[width].is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
        row[art0 + i] = Rational::one();
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (art0..art0 + m).collect(),
        width,
    };

    let mut phase1 = vec![Rational::zero(); width];
    for v in &mut phase1[art0..] {
        *v = -Rational::one();
    }
    t.optimize(&phase1, width);
    if t.value(&phase1).is_negative() {
        return LpOutcome::Infeasible;
    }
    // drive zero-valued artificials out of the basis where possible
    for r in 0..m {
        if t.basis[r] >= art0 {
            if let Some(c) = (0..art0).find(|&c| !t.rows[r][c].is_zero()) {
                t.pivot(r, c);
            }
        }
    }
    // rows still holding an artificial are redundant; drop them
    let keep: Vec<usize> = (0..m).filter(|&r| t.basis[r] < art0).collect();
    t.rows = keep.iter().map(|&r| t.rows[r].clone()).collect();
    t.basis = keep.iter().map(|&r| t.basis[r]).collect();

    let mut obj = vec![Rational::zero(); width];
    obj[..n].clone_from_slice(objective);
    if !t.optimize(&obj, art0) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (&b, row) in t.basis.iter().zip(&t.rows) {
        if b < n {
            x[b] = row[width].clone();
        }
    }
    let value = objective.iter().zip(&x).map(|(a, b)| a * b).sum();
    LpOutcome::Optimal { value, x }
}

/// Minimizes `objective . x`; see [`maximize`].
pub fn minimize(objective: &[Rational], constraints: &[Constraint]) -> LpOutcome {
    let neg: Vec<Rational> = objective.iter().map(|v| -v).collect();
    match maximize(&neg, constraints) {
        LpOutcome::Optimal { value, x } => LpOutcome::Optimal { value: -value, x },
        other => other,
    }
}

/// Default node budget for [`integer_maximize`].
pub const DEFAULT_NODE_BUDGET: usize = 100_000;

/// Maximizes `objective . x` over non-negative integer points. Returns
/// `Ok(None)` when no integer point is feasible. The LP relaxation must be
/// bounded; an unbounded relaxation or an exhausted node budget is a
/// resource error.
pub fn integer_maximize(
    objective: &[Rational],
    constraints: &[Constraint],
    node_budget: usize,
) -> Result<Option<(Rational, Vec<Rational>)>> {
    let mut best: Option<(Rational, Vec<Rational>)> = None;
    let mut stack = vec![constraints.to_vec()];
    let mut nodes = 0;
    while let Some(cs) = stack.pop() {
        nodes += 1;
        if nodes > node_budget {
            return Err(Error::Resource(format!(
                "branch and bound exceeded {node_budget} nodes"
            )));
        }
        let (value, x) = match maximize(objective, &cs) {
            LpOutcome::Infeasible => continue,
            LpOutcome::Unbounded => {
                return Err(Error::Resource("unbounded integer program".into()))
            }
            LpOutcome::Optimal { value, x } => (value, x),
        };
        if let Some((bv, _)) = &best {
            if value <= *bv {
                continue;
            }
        }
        match x.iter().position(|v| !v.is_integer()) {
            None => {
                debug_assert!(cs.iter().all(|c| c.satisfied_by(&x)));
                best = Some((value, x));
            }
            Some(i) => {
                let mut unit = vec![Rational::zero(); objective.len()];
                unit[i] = Rational::one();
                let mut down = cs.clone();
                down.push(Constraint::new(unit.clone(), Relation::Le, x[i].floor()));
                let mut up = cs;
                up.push(Constraint::new(unit, Relation::Ge, x[i].ceil()));
                stack.push(down);
                stack.push(up);
            }
        }
    }
    Ok(best)
}

/// Minimizes over non-negative integer points; see [`integer_maximize`].
pub fn integer_minimize(
    objective: &[Rational],
    constraints: &[Constraint],
    node_budget: usize,
) -> Result<Option<(Rational, Vec<Rational>)>> {
    let neg: Vec<Rational> = objective.iter().map(|v| -v).collect();
    Ok(integer_maximize(&neg, constraints, node_budget)?.map(|(v, x)| (-v, x)))
}
