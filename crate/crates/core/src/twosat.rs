//! 2-SAT: linear-time decision through the implication graph, an exact
//! #2-SAT branching counter, and exact uniform samplers for (≤1)- and
//! (≤2)-CNF.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::cnf::{CnfFormula, Literal, PartialAssignment};
use crate::util::{pow2, uniform_below};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwoSatError {
    #[error("formula has a clause of width {0} > 2")]
    NotTwoCnf(usize),
    #[error("formula has a clause of width {0} > 1")]
    NotUnitCnf(usize),
    #[error("formula is unsatisfiable")]
    Unsatisfiable,
}

fn check_two_cnf(f: &CnfFormula) -> Result<(), TwoSatError> {
    match f.max_width() {
        w if w > 2 => Err(TwoSatError::NotTwoCnf(w)),
        _ => Ok(()),
    }
}

#[inline]
fn node(l: Literal) -> usize {
    // 2·(var−1) + negated
    2 * (l.var() as usize - 1) + usize::from(!l.is_positive())
}

/// Implication graph on `2n` literal nodes: clause `{u, v}` contributes
/// `ū → v` and `v̄ → u`; a unit clause `{u}` contributes `ū → u`.
#[derive(Debug, Clone)]
pub struct ImplicationGraph {
    num_vars: u32,
    adj: Vec<Vec<usize>>,
}

impl ImplicationGraph {
    pub fn new(f: &CnfFormula) -> Result<Self, TwoSatError> {
        check_two_cnf(f)?;
        let mut adj = vec![Vec::new(); 2 * f.num_vars() as usize];
        for c in f.clauses() {
            match *c.literals() {
                [u] => adj[node(u.negate())].push(node(u)),
                [u, v] => {
                    adj[node(u.negate())].push(node(v));
                    adj[node(v.negate())].push(node(u));
                }
                _ => {}
            }
        }
        Ok(ImplicationGraph {
            num_vars: f.num_vars(),
            adj,
        })
    }

    pub fn num_nodes(&self) -> usize {
        self.adj.len()
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    /// Arc `a → b` exists iff `b̄ → ā` exists (with multiplicity).
    pub fn is_skew_symmetric(&self) -> bool {
        let mut arcs: HashMap<(usize, usize), i64> = HashMap::new();
        for (a, succ) in self.adj.iter().enumerate() {
            for &b in succ {
                *arcs.entry((a, b)).or_default() += 1;
            }
        }
        arcs.iter()
            .all(|(&(a, b), &k)| arcs.get(&(b ^ 1, a ^ 1)) == Some(&k))
    }

    /// Tarjan's SCC, iterative. Component ids come out in reverse
    /// topological order (sinks first).
    pub fn strongly_connected_components(&self) -> Vec<usize> {
        const UNSET: usize = usize::MAX;
        let n = self.adj.len();
        let mut index = vec![UNSET; n];
        let mut low = vec![0usize; n];
        let mut comp = vec![UNSET; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut next_index = 0;
        let mut next_comp = 0;

        for root in 0..n {
            if index[root] != UNSET {
                continue;
            }
            call.push((root, 0));
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut edge)) = call.last_mut() {
                if let Some(&w) = self.adj[v].get(*edge) {
                    *edge += 1;
                    if index[w] == UNSET {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
        comp
    }

    /// A satisfying full assignment, or `None` iff some variable shares an
    /// SCC with its negation.
    pub fn solve(&self) -> Option<PartialAssignment> {
        let comp = self.strongly_connected_components();
        let mut a = PartialAssignment::new(self.num_vars);
        for v in 1..=self.num_vars {
            let pos = node(Literal::positive(v));
            let neg = pos + 1;
            if comp[pos] == comp[neg] {
                return None;
            }
            // the literal whose component is closer to the sinks is true
            a.set(v, comp[pos] < comp[neg]);
        }
        Some(a)
    }
}

/// Decides a (≤2)-CNF in time linear in `m + n`. `Ok(None)` means UNSAT.
pub fn solve_2sat(f: &CnfFormula) -> Result<Option<PartialAssignment>, TwoSatError> {
    check_two_cnf(f)?;
    if f.has_empty_clause() {
        return Ok(None);
    }
    Ok(ImplicationGraph::new(f)?.solve())
}

/// Model count together with the number of branching nodes the counter
/// expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub count: BigUint,
    pub nodes_expanded: u64,
}

/// Exact `|sat(F)|` over all `n` declared variables.
pub fn count_2sat(f: &CnfFormula) -> Result<CountResult, TwoSatError> {
    check_two_cnf(f)?;
    if f.has_empty_clause() {
        return Ok(CountResult {
            count: BigUint::zero(),
            nodes_expanded: 0,
        });
    }
    let pairs: Vec<Pair> = f
        .clauses()
        .iter()
        .map(|c| match *c.literals() {
            [u] => (u, u),
            [u, v] => (u, v),
            _ => unreachable!("checked width"),
        })
        .collect();
    let mut counter = Counter::default();
    let count = counter.count(pairs, f.num_vars() as usize);
    Ok(CountResult {
        count,
        nodes_expanded: counter.nodes,
    })
}

/// `(u, v)`; a unit clause is stored as `(u, u)`.
type Pair = (Literal, Literal);

#[derive(Default)]
struct Counter {
    memo: HashMap<Vec<(u32, u32)>, BigUint>,
    nodes: u64,
}

enum Reduced {
    Conflict,
    Clauses { clauses: Vec<Pair>, assigned: usize },
}

impl Counter {
    /// Count over a scope of `scope` variables containing every variable of
    /// `clauses`.
    fn count(&mut self, clauses: Vec<Pair>, scope: usize) -> BigUint {
        let (clauses, assigned) = match propagate(clauses) {
            Reduced::Conflict => return BigUint::zero(),
            Reduced::Clauses { clauses, assigned } => (clauses, assigned),
        };
        let components = components(&clauses);
        let touched: usize = components.iter().map(|c| c.1).sum();
        let free = scope - assigned - touched;
        let mut total = pow2(free as u64);
        for (comp, nvars) in components {
            let c = self.count_component(comp, nvars);
            if c.is_zero() {
                return c;
            }
            total *= c;
        }
        total
    }

    /// Connected, unit-free component over exactly `nvars` variables.
    fn count_component(&mut self, comp: Vec<Pair>, nvars: usize) -> BigUint {
        let key = canonical_key(&comp);
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }
        self.nodes += 1;
        let var = branch_variable(&comp);
        let mut total = BigUint::zero();
        for value in [false, true] {
            let sub = assign(&comp, var, value);
            total += self.count(sub, nvars - 1);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

fn lit_value(l: Literal, values: &HashMap<u32, bool>) -> Option<bool> {
    values.get(&l.var()).map(|&v| l.eval(v))
}

/// Unit propagation on pairs. Clauses left are width-2 and unassigned.
fn propagate(mut clauses: Vec<Pair>) -> Reduced {
    let mut values: HashMap<u32, bool> = HashMap::new();
    loop {
        let mut changed = false;
        for &(u, v) in &clauses {
            if u == v {
                match values.get(&u.var()) {
                    Some(&b) if b != u.satisfying_value() => return Reduced::Conflict,
                    Some(_) => {}
                    None => {
                        values.insert(u.var(), u.satisfying_value());
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Reduced::Clauses {
                clauses,
                assigned: values.len(),
            };
        }
        let mut next = Vec::with_capacity(clauses.len());
        for (u, v) in clauses {
            match (lit_value(u, &values), lit_value(v, &values)) {
                (Some(true), _) | (_, Some(true)) => {}
                (Some(false), Some(false)) => return Reduced::Conflict,
                (Some(false), None) => next.push((v, v)),
                (None, Some(false)) => next.push((u, u)),
                (None, None) => next.push((u, v)),
            }
        }
        clauses = next;
    }
}

fn assign(clauses: &[Pair], var: u32, value: bool) -> Vec<Pair> {
    let mut out = Vec::with_capacity(clauses.len());
    for &(u, v) in clauses {
        let eu = (u.var() == var).then(|| u.eval(value));
        let ev = (v.var() == var).then(|| v.eval(value));
        match (eu, ev) {
            (Some(true), _) | (_, Some(true)) => {}
            (Some(false), _) => out.push((v, v)),
            (_, Some(false)) => out.push((u, u)),
            (None, None) => out.push((u, v)),
        }
    }
    out
}

/// Splits width-2 clauses into variable-connected components, returning each
/// with its variable count.
fn components(clauses: &[Pair]) -> Vec<(Vec<Pair>, usize)> {
    let mut ids: HashMap<u32, usize> = HashMap::new();
    for &(u, v) in clauses {
        for var in [u.var(), v.var()] {
            let next = ids.len();
            ids.entry(var).or_insert(next);
        }
    }
    let mut parent: Vec<usize> = (0..ids.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in clauses {
        let a = find(&mut parent, ids[&u.var()]);
        let b = find(&mut parent, ids[&v.var()]);
        if a != b {
            parent[a] = b;
        }
    }
    let mut groups: HashMap<usize, usize> = HashMap::new();
    let mut out: Vec<(Vec<Pair>, usize)> = Vec::new();
    for &(u, v) in clauses {
        let root = find(&mut parent, ids[&u.var()]);
        let next = out.len();
        let slot = *groups.entry(root).or_insert(next);
        if slot == out.len() {
            out.push((Vec::new(), 0));
        }
        out[slot].0.push((u, v));
    }
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for (&_, &id) in &ids {
        let root = find(&mut parent, id);
        *sizes.entry(groups[&root]).or_default() += 1;
    }
    for (slot, comp) in out.iter_mut().enumerate() {
        comp.1 = sizes[&slot];
    }
    out
}

/// Most frequent variable, ties to the lowest index.
fn branch_variable(clauses: &[Pair]) -> u32 {
    let mut occ: HashMap<u32, usize> = HashMap::new();
    for &(u, v) in clauses {
        *occ.entry(u.var()).or_default() += 1;
        *occ.entry(v.var()).or_default() += 1;
    }
    occ.into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .map(|(v, _)| v)
        .expect("nonempty component")
}

/// Sorted clause list after renaming variables by first occurrence in the
/// sorted original. Equal keys imply isomorphic components.
fn canonical_key(clauses: &[Pair]) -> Vec<(u32, u32)> {
    let mut sorted: Vec<Pair> = clauses
        .iter()
        .map(|&(u, v)| if u <= v { (u, v) } else { (v, u) })
        .collect();
    sorted.sort_unstable();
    let mut rename: HashMap<u32, u32> = HashMap::new();
    let mut map = |l: Literal| {
        let next = rename.len() as u32 + 1;
        let v = *rename.entry(l.var()).or_insert(next);
        Literal::new(v, l.is_positive())
    };
    let mut key: Vec<(u32, u32)> = sorted
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (map(u), map(v));
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            (a.to_dimacs() as u32, b.to_dimacs() as u32)
        })
        .collect();
    key.sort_unstable();
    key.dedup();
    key
}

fn check_unit_cnf(f: &CnfFormula) -> Result<(), TwoSatError> {
    match f.max_width() {
        w if w > 1 => Err(TwoSatError::NotUnitCnf(w)),
        _ => Ok(()),
    }
}

/// Forced bindings of a (≤1)-CNF, or `None` when it contains `□` or a
/// complementary pair of units.
fn unit_bindings(f: &CnfFormula) -> Option<PartialAssignment> {
    let mut forced = PartialAssignment::new(f.num_vars());
    for c in f.clauses() {
        let &[l] = c.literals() else { return None };
        match forced.get(l.var()) {
            Some(b) if b != l.satisfying_value() => return None,
            _ => forced.assign_literal(l),
        }
    }
    Some(forced)
}

/// `|sat(F)|` of a (≤1)-CNF: 0 if `□` or a conflict is present, otherwise
/// `2^(free variables)`.
pub fn count_leq1(f: &CnfFormula) -> Result<BigUint, TwoSatError> {
    check_unit_cnf(f)?;
    Ok(match unit_bindings(f) {
        None => BigUint::zero(),
        Some(forced) => pow2(u64::from(f.num_vars()) - forced.len() as u64),
    })
}

/// Uniform satisfying assignment of a (≤1)-CNF in linear time.
pub fn sample_leq1<R: Rng + ?Sized>(
    f: &CnfFormula,
    rng: &mut R,
) -> Result<PartialAssignment, TwoSatError> {
    check_unit_cnf(f)?;
    let mut a = unit_bindings(f).ok_or(TwoSatError::Unsatisfiable)?;
    for v in 1..=f.num_vars() {
        if a.get(v).is_none() {
            a.set(v, rng.gen());
        }
    }
    Ok(a)
}

/// Exact uniform sampler for a (≤2)-CNF by self-reduction: variables are
/// branched in index order and each branch is taken with probability
/// proportional to its model count.
///
/// Counts of visited prefixes are cached, so repeated draws from the same
/// sampler reuse earlier counting work.
#[derive(Debug, Clone)]
pub struct ExactSampler {
    formula: CnfFormula,
    base: PartialAssignment,
    order: Vec<u32>,
    total: BigUint,
    cache: HashMap<Vec<bool>, BigUint>,
    nodes_expanded: u64,
}

impl ExactSampler {
    pub fn new(f: &CnfFormula) -> Result<Self, TwoSatError> {
        Self::with_base(f, PartialAssignment::new(f.num_vars()))
    }

    /// Samples uniformly from the solutions of `F^[base]` over the variables
    /// outside `domain(base)`, returning them merged with `base`.
    pub fn with_base(f: &CnfFormula, base: PartialAssignment) -> Result<Self, TwoSatError> {
        check_two_cnf(f)?;
        let formula = f.restrict(&base);
        let order: Vec<u32> = (1..=f.num_vars())
            .filter(|&v| base.get(v).is_none())
            .collect();
        let r = count_2sat(&formula)?;
        let total = r.count >> base.len();
        Ok(ExactSampler {
            formula,
            base,
            order,
            total,
            cache: HashMap::new(),
            nodes_expanded: r.nodes_expanded,
        })
    }

    /// Number of solutions this sampler draws from.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// Counter nodes expanded so far, including the initial count.
    pub fn nodes_expanded(&self) -> u64 {
        self.nodes_expanded
    }

    fn prefix_count(&mut self, prefix: &[bool]) -> BigUint {
        if let Some(c) = self.cache.get(prefix) {
            return c.clone();
        }
        let mut beta = PartialAssignment::new(self.formula.num_vars());
        for (&v, &b) in self.order.iter().zip(prefix) {
            beta.set(v, b);
        }
        let r = count_2sat(&self.formula.restrict(&beta)).expect("restriction of a 2-CNF");
        self.nodes_expanded += r.nodes_expanded;
        let c = r.count >> (self.base.len() + prefix.len());
        self.cache.insert(prefix.to_vec(), c.clone());
        c
    }

    pub fn sample<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Result<PartialAssignment, TwoSatError> {
        self.sample_traced(rng).map(|(a, _)| a)
    }

    /// Draws a sample and returns, per branched variable, the chosen
    /// branch's count and its parent's count. The product of the ratios is
    /// `1 / total`.
    pub fn sample_traced<R: Rng + ?Sized>(
        &mut self,
        rng: &mut R,
    ) -> Result<(PartialAssignment, Vec<(BigUint, BigUint)>), TwoSatError> {
        if self.total.is_zero() {
            return Err(TwoSatError::Unsatisfiable);
        }
        let mut current = self.total.clone();
        let mut prefix = Vec::with_capacity(self.order.len());
        let mut trace = Vec::with_capacity(self.order.len());
        for _ in 0..self.order.len() {
            prefix.push(true);
            let ones = self.prefix_count(&prefix);
            let zeros = &current - &ones;
            let pick_one = uniform_below(rng, &current) < ones;
            let chosen = if pick_one {
                ones
            } else {
                *prefix.last_mut().unwrap() = false;
                zeros
            };
            trace.push((chosen.clone(), current));
            current = chosen;
        }
        debug_assert!(current.is_one());
        let mut a = self.base.clone();
        for (&v, &b) in self.order.iter().zip(&prefix) {
            a.set(v, b);
        }
        Ok((a, trace))
    }
}

/// One exactly uniform sample from `sat(F)` for a (≤2)-CNF.
pub fn sample_2sat_exact<R: Rng + ?Sized>(
    f: &CnfFormula,
    rng: &mut R,
) -> Result<PartialAssignment, TwoSatError> {
    ExactSampler::new(f)?.sample(rng)
}
