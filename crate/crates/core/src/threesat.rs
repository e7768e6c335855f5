//! Randomized 3-SAT: rejection against enumeration over a maximal disjoint
//! clause set, and Schöning's restart walk.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cnf::{Clause, CnfFormula, PartialAssignment};
use crate::families::max_disjoint_clauses;
use crate::race::{Race, Step};
use crate::twosat::solve_2sat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Arm {
    Rejection,
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropReport {
    #[serde(skip)]
    pub solution: Option<PartialAssignment>,
    pub winner: Arm,
    pub disjoint_clauses: usize,
    pub draws: u64,
    pub branches: u64,
    pub work: u64,
}

/// Uniform draw among assignments satisfying every clause of `s`.
fn sample_satisfying_s<R: Rng + ?Sized>(
    n: u32,
    s: &[Clause],
    locals: &[Vec<Vec<bool>>],
    rng: &mut R,
) -> PartialAssignment {
    let mut a = PartialAssignment::new(n);
    for v in 1..=n {
        a.set(v, rng.gen());
    }
    for (c, sols) in s.iter().zip(locals) {
        let pick = sols.choose(rng).expect("clause has local solutions");
        for (l, &b) in c.literals().iter().zip(pick) {
            a.set(l.var(), b);
        }
    }
    a
}

/// Local assignments to the clause's variables (in literal order) that
/// satisfy it.
fn local_solutions(c: &Clause) -> Vec<Vec<bool>> {
    let w = c.len();
    (0..1u32 << w)
        .map(|mask| (0..w).map(|i| mask >> (w - 1 - i) & 1 == 1).collect::<Vec<_>>())
        .filter(|bits| c.literals().iter().zip(bits).any(|(l, &b)| l.eval(b)))
        .collect()
}

/// Rejection arm state.
struct Rejection<'a> {
    f: &'a CnfFormula,
    s: &'a [Clause],
    locals: &'a [Vec<Vec<bool>>],
    rng: ChaCha8Rng,
    draws: u64,
}

/// Enumeration arm state: odometer over the local solutions of `S`.
struct Enumeration<'a> {
    f: &'a CnfFormula,
    s: &'a [Clause],
    locals: &'a [Vec<Vec<bool>>],
    odometer: Vec<usize>,
    done: bool,
    branches: u64,
}

impl Enumeration<'_> {
    /// Checks the current partial assignment; returns a solution if its
    /// residual is satisfiable, then advances.
    fn step(&mut self) -> Option<PartialAssignment> {
        self.branches += 1;
        let mut alpha = PartialAssignment::new(self.f.num_vars());
        for ((c, sols), &i) in self.s.iter().zip(self.locals).zip(&self.odometer) {
            for (l, &b) in c.literals().iter().zip(&sols[i]) {
                alpha.set(l.var(), b);
            }
        }
        let residual = self.f.restrict(&alpha);
        let found = match solve_2sat(&residual) {
            Ok(Some(beta)) => {
                let mut full = alpha.clone();
                for v in 1..=self.f.num_vars() {
                    if full.get(v).is_none() {
                        full.set(v, beta.get(v).unwrap_or(false));
                    }
                }
                Some(full)
            }
            Ok(None) => None,
            Err(_) => unreachable!("S is maximal, so every residual clause has width ≤ 2"),
        };
        // advance odometer, last position fastest
        let mut j = self.odometer.len();
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            self.odometer[j] += 1;
            if self.odometer[j] < self.locals[j].len() {
                break;
            }
            self.odometer[j] = 0;
        }
        found
    }
}

/// Races rejection sampling over assignments satisfying a maximal disjoint
/// clause set `S` against enumeration of the `7^{|S|}` satisfying partial
/// assignments of `vbl(S)` with a 2-SAT check of each residual. Returns
/// `solution = None` only when enumeration exhausts every branch.
pub fn solve3_prop<R: Rng + ?Sized>(f: &CnfFormula, rng: &mut R) -> PropReport {
    let s = max_disjoint_clauses(f);
    let locals: Vec<Vec<Vec<bool>>> = s.iter().map(local_solutions).collect();
    let n = f.num_vars();
    let mut rej = Rejection {
        f,
        s: &s,
        locals: &locals,
        rng: ChaCha8Rng::seed_from_u64(rng.gen()),
        draws: 0,
    };
    let mut en = Enumeration {
        f,
        s: &s,
        locals: &locals,
        odometer: vec![0; s.len()],
        done: f.has_empty_clause(),
        branches: 0,
    };
    let mut race = Race::new(2);
    let (winner, solution) = race.run(|arm| match arm {
        0 => {
            if en.done {
                // Unreachable when F is satisfiable; keeps rejection from
                // looping on unsatisfiable input.
                return Step::Finished(1, (Arm::Rejection, None));
            }
            rej.draws += 1;
            let a = sample_satisfying_s(n, rej.s, rej.locals, &mut rej.rng);
            if rej.f.is_satisfied_by(&a) {
                Step::Finished(1, (Arm::Rejection, Some(a)))
            } else {
                Step::Continue(1)
            }
        }
        _ => {
            if en.done {
                return Step::Finished(1, (Arm::Enumeration, None));
            }
            match en.step() {
                Some(a) => Step::Finished(1, (Arm::Enumeration, Some(a))),
                None if en.done => Step::Finished(1, (Arm::Enumeration, None)),
                None => Step::Continue(1),
            }
        }
    });
    if let Some(a) = &solution {
        assert!(f.is_satisfied_by(a));
    }
    PropReport {
        solution,
        winner,
        disjoint_clauses: s.len(),
        draws: rej.draws,
        branches: en.branches,
        work: race.total_work(),
    }
}

#[derive(Debug, Clone)]
pub struct WalkConfig {
    /// Flips per restart; `None` means `3n`.
    pub flips_per_restart: Option<u64>,
    pub max_restarts: Option<u64>,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig {
            flips_per_restart: None,
            max_restarts: Some(1_000_000),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WalkReport {
    #[serde(skip)]
    pub solution: Option<PartialAssignment>,
    pub restarts: u64,
    /// Flips made by the successful walk.
    pub flips: u64,
    pub total_flips: u64,
}

/// One walk from a uniform start: returns the satisfying assignment and the
/// flips used, or `None` after `flips` unsuccessful flips.
pub fn schoening_walk<R: Rng + ?Sized>(
    f: &CnfFormula,
    flips: u64,
    rng: &mut R,
) -> (Option<PartialAssignment>, u64) {
    let n = f.num_vars();
    let mut a = PartialAssignment::new(n);
    for v in 1..=n {
        a.set(v, rng.gen());
    }
    for used in 0..=flips {
        let Some(c) = f.clauses().iter().find(|c| !c.is_satisfied_by(&a)) else {
            return (Some(a), used);
        };
        if used == flips || c.is_empty() {
            break;
        }
        let lit = c.literals().choose(rng).expect("nonempty clause");
        let v = lit.var();
        a.set(v, !a.get(v).expect("full assignment"));
    }
    (None, flips)
}

/// Schöning's algorithm with restarts.
pub fn schoening<R: Rng + ?Sized>(f: &CnfFormula, cfg: &WalkConfig, rng: &mut R) -> WalkReport {
    let flips = cfg
        .flips_per_restart
        .unwrap_or(3 * u64::from(f.num_vars()))
        .max(1);
    let mut total = 0;
    let mut restarts = 0;
    loop {
        if cfg.max_restarts.is_some_and(|m| restarts >= m) {
            return WalkReport {
                solution: None,
                restarts,
                flips: 0,
                total_flips: total,
            };
        }
        restarts += 1;
        let (sol, used) = schoening_walk(f, flips, rng);
        total += used;
        if let Some(a) = sol {
            assert!(f.is_satisfied_by(&a));
            return WalkReport {
                solution: Some(a),
                restarts,
                flips: used,
                total_flips: total,
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cnf(n: u32, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(n, clauses).unwrap()
    }

    #[test]
    fn single_clause_pool() {
        let c = Clause::from_dimacs(&[1, 2, 3]).unwrap();
        assert_eq!(local_solutions(&c).len(), 7);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = solve3_prop(&cnf(3, &[&[1, 2, 3]]), &mut rng);
        assert!(r.solution.is_some());
        assert_eq!(r.disjoint_clauses, 1);
    }

    #[test]
    fn both_polarities() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = solve3_prop(&cnf(3, &[&[1, 2, 3], &[-1, -2, -3]]), &mut rng);
        assert!(r.solution.is_some());
    }

    #[test]
    fn unsat_is_certified() {
        // all 8 clauses on 3 variables
        let clauses: Vec<Vec<i32>> = (0..8)
            .map(|m| (0..3).map(|i| if m >> i & 1 == 1 { i + 1 } else { -(i + 1) }).collect())
            .collect();
        let refs: Vec<&[i32]> = clauses.iter().map(Vec::as_slice).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = solve3_prop(&cnf(3, &refs), &mut rng);
        assert!(r.solution.is_none());
        assert_eq!(r.winner, Arm::Enumeration);
        assert_eq!(r.branches, 7);
    }

    #[test]
    fn walk_returns_immediately_when_satisfied() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let r = schoening(&CnfFormula::new(4), &WalkConfig::default(), &mut rng);
        assert_eq!((r.restarts, r.flips), (1, 0));
    }

    #[test]
    fn walk_gives_up_on_unsat() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let cfg = WalkConfig {
            flips_per_restart: None,
            max_restarts: Some(100),
        };
        let r = schoening(&cnf(1, &[&[1], &[-1]]), &cfg, &mut rng);
        assert!(r.solution.is_none());
        assert_eq!(r.restarts, 100);
    }
}
