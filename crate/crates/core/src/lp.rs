//! Exact two-phase simplex over the rationals.
//!
//! Problems are `maximize c.x subject to rows, x >= 0`. Bland's rule keeps
//! the method finite on degenerate instances, which the Newton-polyhedron
//! programs produce routinely.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Q, solution: Vec<Q> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Q> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Q>,
    rows: Vec<(Vec<Q>, Relation, Q)>,
}

impl LinearProgram {
    pub fn maximize(objective: Vec<Q>) -> Self {
        LinearProgram { num_vars: objective.len(), objective, rows: Vec::new() }
    }

    pub fn feasibility(num_vars: usize) -> Self {
        Self::maximize(vec![Q::zero(); num_vars])
    }

    pub fn constraint(&mut self, coeffs: Vec<Q>, relation: Relation, rhs: Q) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "constraint arity");
        self.rows.push((coeffs, relation, rhs));
        self
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run()
    }
}

struct Tableau {
    // rows[i] has `cols + 1` entries; the last is the right-hand side.
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    cols: usize,
    num_structural: usize,
    artificial_start: usize,
    objective: Vec<Q>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let n = lp.num_vars;
        let m = lp.rows.len();
        let num_slack = lp.rows.iter().filter(|(_, r, _)| *r != Relation::Eq).count();
        let artificial_start = n + num_slack;
        let cols = artificial_start + m;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut slack = n;
        for (i, (coeffs, rel, rhs)) in lp.rows.iter().enumerate() {
            let mut row = vec![Q::zero(); cols + 1];
            row[..n].clone_from_slice(coeffs);
            match rel {
                Relation::Le => {
                    row[slack] = Q::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Q::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            row[cols] = rhs.clone();
            if rhs.is_negative() {
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
            }
            row[artificial_start + i] = Q::one();
            rows.push(row);
            basis.push(artificial_start + i);
        }
        let mut objective = vec![Q::zero(); cols];
        objective[..n].clone_from_slice(&lp.objective);
        Tableau { rows, basis, cols, num_structural: n, artificial_start, objective }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost` over columns `< allowed`. Returns false when unbounded.
    fn optimize(&mut self, cost: &[Q], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !row[j].is_zero() && !cost[b].is_zero() {
                        reduced -= &cost[b] * &row[j];
                    }
                }
                reduced.is_positive()
            });
            let Some(j) = entering else { return true };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[j].is_positive() {
                    let ratio = &row[self.cols] / &row[j];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((i, _)) => self.pivot(i, j),
            }
        }
    }

    fn objective_value(&self, cost: &[Q]) -> Q {
        self.rows
            .iter()
            .zip(&self.basis)
            .fold(Q::zero(), |acc, (row, &b)| acc + &cost[b] * &row[self.cols])
    }

    fn run(mut self) -> LpOutcome {
        let mut phase1 = vec![Q::zero(); self.cols];
        for v in phase1.iter_mut().skip(self.artificial_start) {
            *v = -Q::one();
        }
        self.optimize(&phase1, self.cols);
        if self.objective_value(&phase1).is_negative() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.artificial_start {
                match (0..self.artificial_start).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => {
                        self.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
        let objective = self.objective.clone();
        if !self.optimize(&objective, self.artificial_start) {
            return LpOutcome::Unbounded;
        }
        let mut solution = vec![Q::zero(); self.num_structural];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.num_structural {
                solution[b] = row[self.cols].clone();
            }
        }
        LpOutcome::Optimal { value: self.objective_value(&objective), solution }
    }
}
