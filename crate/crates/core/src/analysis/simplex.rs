//! Dense two-phase simplex for small linear programs.
//!
//! Problems are stated as `maximize c·x subject to rows, x ≥ 0`. Entering
//! columns follow Dantzig's rule; the leaving row is chosen by the
//! lexicographic ratio test over the columns of the initial basis, which
//! rules out cycling.

use serde::Serialize;
use thiserror::Error;

const EPS: f64 = 1e-11;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LpError {
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("row {row} has {got} coefficients, expected {expected}")]
    Shape {
        row: usize,
        got: usize,
        expected: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    /// One multiplier per constraint; a certificate of optimality.
    pub duals: Vec<f64>,
    pub pivots: usize,
}

impl LpProblem {
    pub fn new(objective: Vec<f64>) -> Self {
        LpProblem {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) -> &mut Self {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    /// Largest violation of any constraint or nonnegativity bound at `x`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst = x.iter().map(|&v| (-v).max(0.0)).fold(0.0, f64::max);
        for c in &self.constraints {
            let lhs: f64 = c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
            let v = match c.relation {
                Relation::Le => lhs - c.rhs,
                Relation::Ge => c.rhs - lhs,
                Relation::Eq => (lhs - c.rhs).abs(),
            };
            worst = worst.max(v);
        }
        worst
    }

    /// Largest violation of dual feasibility and of strong duality for the
    /// multipliers `y` against the primal value `objective`.
    pub fn dual_gap(&self, y: &[f64], objective: f64) -> f64 {
        let mut worst: f64 = 0.0;
        for (c, &yi) in self.constraints.iter().zip(y) {
            let bad = match c.relation {
                Relation::Le => -yi,
                Relation::Ge => yi,
                Relation::Eq => 0.0,
            };
            worst = worst.max(bad);
        }
        for j in 0..self.num_vars() {
            let col: f64 = self
                .constraints
                .iter()
                .zip(y)
                .map(|(c, yi)| c.coeffs[j] * yi)
                .sum();
            worst = worst.max(self.objective[j] - col);
        }
        let dual_obj: f64 = self.constraints.iter().zip(y).map(|(c, yi)| c.rhs * yi).sum();
        worst.max((dual_obj - objective).abs())
    }
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    /// Columns forming the initial identity, used for the lexicographic test.
    identity: Vec<usize>,
    pivots: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> f64 {
        *self.rows[r].last().expect("rhs column")
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[col];
            if f.abs() > 0.0 {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
                row[col] = 0.0;
            }
        }
        self.basis[r] = col;
        self.pivots += 1;
    }

    /// Lexicographically smallest `(rhs, identity columns) / a_rc` among rows
    /// with positive entry in `col`.
    fn leaving_row(&self, col: usize) -> Option<usize> {
        let m = self.basis.len();
        let key = |r: usize| -> Vec<f64> {
            let a = self.rows[r][col];
            std::iter::once(self.rhs(r) / a)
                .chain(self.identity.iter().map(|&j| self.rows[r][j] / a))
                .collect()
        };
        let mut best: Option<(usize, Vec<f64>)> = None;
        for r in 0..m {
            if self.rows[r][col] <= EPS {
                continue;
            }
            let k = key(r);
            let better = match &best {
                None => true,
                Some((_, bk)) => {
                    let mut ord = std::cmp::Ordering::Equal;
                    for (a, b) in k.iter().zip(bk) {
                        if (a - b).abs() > 1e-12 {
                            ord = a.partial_cmp(b).expect("finite");
                            break;
                        }
                    }
                    ord == std::cmp::Ordering::Less
                }
            };
            if better {
                best = Some((r, k));
            }
        }
        best.map(|(r, _)| r)
    }

    /// Maximizes `cost·x` over the allowed columns.
    fn optimize(&mut self, cost: &[f64], allowed: &dyn Fn(usize) -> bool) -> Result<(), LpError> {
        let ncols = cost.len();
        loop {
            let mut entering = None;
            let mut best = EPS;
            for j in (0..ncols).filter(|&j| allowed(j)) {
                let reduced = cost[j]
                    - self
                        .basis
                        .iter()
                        .enumerate()
                        .map(|(r, &b)| cost[b] * self.rows[r][j])
                        .sum::<f64>();
                if reduced > best {
                    best = reduced;
                    entering = Some(j);
                }
            }
            let Some(col) = entering else {
                return Ok(());
            };
            let Some(r) = self.leaving_row(col) else {
                return Err(LpError::Unbounded);
            };
            self.pivot(r, col);
        }
    }
}

/// Solves `p` to an optimal vertex.
pub fn simplex_solve(p: &LpProblem) -> Result<LpSolution, LpError> {
    let n = p.num_vars();
    let m = p.constraints.len();
    for (row, c) in p.constraints.iter().enumerate() {
        if c.coeffs.len() != n {
            return Err(LpError::Shape {
                row,
                got: c.coeffs.len(),
                expected: n,
            });
        }
    }
    // Normalize to nonnegative right-hand sides.
    let mut sign = vec![1.0; m];
    let rows: Vec<(Vec<f64>, Relation, f64)> = p
        .constraints
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.rhs < 0.0 {
                sign[i] = -1.0;
                let rel = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (c.coeffs.iter().map(|v| -v).collect(), rel, -c.rhs)
            } else {
                (c.coeffs.clone(), c.relation, c.rhs)
            }
        })
        .collect();

    let slacks = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let artificials = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let ncols = n + slacks + artificials;
    let mut t = Tableau {
        rows: vec![vec![0.0; ncols + 1]; m],
        basis: vec![0; m],
        identity: vec![0; m],
        pivots: 0,
    };
    let (mut s, mut a) = (n, n + slacks);
    let mut is_artificial = vec![false; ncols];
    for (i, (coeffs, rel, rhs)) in rows.iter().enumerate() {
        t.rows[i][..n].copy_from_slice(coeffs);
        t.rows[i][ncols] = *rhs;
        match rel {
            Relation::Le => {
                t.rows[i][s] = 1.0;
                t.basis[i] = s;
                s += 1;
            }
            Relation::Ge => {
                t.rows[i][s] = -1.0;
                s += 1;
                t.rows[i][a] = 1.0;
                t.basis[i] = a;
                is_artificial[a] = true;
                a += 1;
            }
            Relation::Eq => {
                t.rows[i][a] = 1.0;
                t.basis[i] = a;
                is_artificial[a] = true;
                a += 1;
            }
        }
        t.identity[i] = t.basis[i];
    }

    if artificials > 0 {
        let phase1: Vec<f64> = (0..ncols)
            .map(|j| if is_artificial[j] { -1.0 } else { 0.0 })
            .collect();
        t.optimize(&phase1, &|_| true)?;
        let infeasibility: f64 = t
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| is_artificial[b])
            .map(|(r, _)| t.rhs(r))
            .sum();
        if infeasibility > 1e-9 {
            return Err(LpError::Infeasible);
        }
        // Drive zero-level artificials out of the basis where possible.
        for r in 0..m {
            if is_artificial[t.basis[r]] {
                if let Some(col) = (0..ncols).find(|&j| !is_artificial[j] && t.rows[r][j].abs() > 1e-9) {
                    t.pivot(r, col);
                }
            }
        }
    }

    let mut cost = vec![0.0; ncols];
    cost[..n].copy_from_slice(&p.objective);
    t.optimize(&cost, &|j| !is_artificial[j])?;

    let mut x = vec![0.0; n];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rhs(r);
        }
    }
    let objective = p.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    // y_i = c_B · (column of the initial identity for row i).
    let duals = (0..m)
        .map(|i| {
            let col = t.identity[i];
            let y: f64 = t
                .basis
                .iter()
                .enumerate()
                .map(|(r, &b)| cost[b] * t.rows[r][col])
                .sum();
            y * sign[i]
        })
        .collect();
    Ok(LpSolution {
        x,
        objective,
        duals,
        pivots: t.pivots,
    })
}
