//! Breadth-first branching search for k-SAT.
//!
//! Nodes of the search tree are grouped into floors by the number of fixed
//! variables. Floors are processed in increasing order; the first node whose
//! residual formula is empty yields a solution. Since every node on floor `ℓ`
//! fixes `ℓ` variables, a node's chance of being a solution prefix grows with
//! the density of solutions, which bounds the floor at which the search
//! stops.

use log::debug;
use serde::Serialize;
use thiserror::Error;

use crate::analysis;
use crate::cnf::{CnfFormula, Literal, PartialAssignment};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("branching requested on a formula containing the empty clause")]
    EmptyClausePresent,
    #[error("branching requested on the empty formula")]
    EmptyFormula,
    #[error("node cap of {0} stored nodes exceeded")]
    NodeCapExceeded(usize),
}

/// A rule mapping a formula to partial assignments `β_1, …, β_t` whose
/// extensions cover every solution.
pub trait BranchingRule {
    fn name(&self) -> &'static str;

    fn branch(&self, f: &CnfFormula) -> Result<Vec<PartialAssignment>, SearchError>;

    /// Worst-case branching number of the floors this rule produces on a
    /// formula of maximum clause width `width`.
    fn branching_number(&self, width: usize) -> f64;
}

/// Picks a shortest clause, lowest index on ties.
fn shortest_clause(f: &CnfFormula) -> Result<Vec<Literal>, SearchError> {
    if f.has_empty_clause() {
        return Err(SearchError::EmptyClausePresent);
    }
    f.clauses()
        .iter()
        .min_by_key(|c| c.len())
        .map(|c| c.literals().to_vec())
        .ok_or(SearchError::EmptyFormula)
}

/// `β_i`: `l_1, …, l_{i−1} = 0` and `l_i = 1`.
fn ms_candidates(f: &CnfFormula, lits: &[Literal]) -> Vec<PartialAssignment> {
    (0..lits.len())
        .map(|i| {
            let mut b = PartialAssignment::new(f.num_vars());
            for l in &lits[..i] {
                b.assign_literal(l.negate());
            }
            b.assign_literal(lits[i]);
            b
        })
        .collect()
}

/// Every clause touched by `beta` is satisfied by it.
pub fn is_autark(f: &CnfFormula, beta: &PartialAssignment) -> bool {
    f.clauses().iter().all(|c| {
        let touched = c.vars().any(|v| beta.get(v).is_some());
        !touched || c.is_satisfied_by(beta)
    })
}

/// Monien–Speckenmeyer branching with autarky detection.
#[derive(Debug, Clone, Copy, Default)]
pub struct MsAutarky;

/// Plain Monien–Speckenmeyer branching on a shortest clause.
#[derive(Debug, Clone, Copy, Default)]
pub struct MsBasic;

impl BranchingRule for MsAutarky {
    fn name(&self) -> &'static str {
        "ms-autarky"
    }

    fn branch(&self, f: &CnfFormula) -> Result<Vec<PartialAssignment>, SearchError> {
        let lits = shortest_clause(f)?;
        let cands = ms_candidates(f, &lits);
        match cands.iter().find(|b| is_autark(f, b)) {
            Some(b) => Ok(vec![b.clone()]),
            None => Ok(cands),
        }
    }

    fn branching_number(&self, width: usize) -> f64 {
        // Every vector (1..j) with j ≤ width is dominated by (1..width).
        analysis::branching_number(&analysis::ms_vector(width.max(1))).expect("valid vector")
    }
}

impl BranchingRule for MsBasic {
    fn name(&self) -> &'static str {
        "ms-basic"
    }

    fn branch(&self, f: &CnfFormula) -> Result<Vec<PartialAssignment>, SearchError> {
        let lits = shortest_clause(f)?;
        Ok(ms_candidates(f, &lits))
    }

    fn branching_number(&self, width: usize) -> f64 {
        analysis::branching_number(&analysis::ms_vector(width.max(1))).expect("valid vector")
    }
}

/// `ms_branch` with autarkies.
pub fn ms_branch(f: &CnfFormula) -> Result<Vec<PartialAssignment>, SearchError> {
    MsAutarky.branch(f)
}

#[derive(Debug, Clone)]
struct Node {
    formula: CnfFormula,
    fixed: PartialAssignment,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Abort after storing this many nodes in total.
    pub node_cap: usize,
    /// Fraction of solutions promised, for the stopping-floor diagnostic.
    pub epsilon: Option<f64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_cap: 5_000_000,
            epsilon: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    /// A full satisfying assignment, or `None` for UNSAT.
    #[serde(skip)]
    pub solution: Option<PartialAssignment>,
    pub rule: &'static str,
    /// `|Φ_ℓ|` for every processed floor.
    pub census: Vec<usize>,
    /// The floor at which a solution was found.
    pub solution_floor: Option<usize>,
    /// Branching number bounding the census.
    pub lambda: f64,
    pub nodes: usize,
    /// `log_{λ/2}(ε/c_λ)`, when `ε` was supplied and `λ < 2`.
    pub floor_limit: Option<f64>,
    /// Set when the solution floor exceeds `floor_limit`.
    pub promise_violation: bool,
}

impl SearchReport {
    pub fn is_sat(&self) -> bool {
        self.solution.is_some()
    }
}

pub fn bfs_solve(
    f: &CnfFormula,
    rule: &dyn BranchingRule,
    cfg: &SearchConfig,
) -> Result<SearchReport, SearchError> {
    let n = f.num_vars() as usize;
    let lambda = rule.branching_number(f.max_width());
    let floor_limit = cfg
        .epsilon
        .filter(|_| lambda < 2.0)
        .map(|e| analysis::floor_limit(lambda, e));
    let mut floors: Vec<Vec<Node>> = vec![Vec::new(); n + 1];
    floors[0].push(Node {
        formula: f.clone(),
        fixed: PartialAssignment::new(f.num_vars()),
    });
    let mut census = Vec::new();
    let mut stored = 1usize;
    let mut report = SearchReport {
        solution: None,
        rule: rule.name(),
        census: Vec::new(),
        solution_floor: None,
        lambda,
        nodes: 0,
        floor_limit,
        promise_violation: false,
    };
    for l in 0..=n {
        let floor = std::mem::take(&mut floors[l]);
        census.push(floor.len());
        assert!(
            floor.len() as f64 <= lambda.powi(l as i32) * (1.0 + 1e-9),
            "floor {l} holds {} nodes, bound {lambda}^{l}",
            floor.len()
        );
        if let Some(node) = floor.iter().find(|nd| nd.formula.is_empty()) {
            let mut sol = node.fixed.clone();
            sol.fill(false);
            assert!(f.is_satisfied_by(&sol));
            report.solution = Some(sol);
            report.solution_floor = Some(l);
            report.promise_violation = floor_limit.is_some_and(|lim| l as f64 > lim + 1e-9);
            if report.promise_violation {
                debug!("solution floor {l} exceeds the promised limit {floor_limit:?}");
            }
            break;
        }
        for node in floor {
            if node.formula.has_empty_clause() {
                continue;
            }
            for beta in rule.branch(&node.formula)? {
                let formula = node.formula.restrict(&beta);
                if formula.has_empty_clause() {
                    continue;
                }
                let mut fixed = node.fixed.clone();
                fixed.merge(&beta);
                let depth = fixed.len();
                stored += 1;
                if stored > cfg.node_cap {
                    return Err(SearchError::NodeCapExceeded(cfg.node_cap));
                }
                floors[depth].push(Node { formula, fixed });
            }
        }
    }
    report.nodes = stored;
    report.census = census;
    Ok(report)
}
