//! Exactly uniform sampling of 2-CNF solutions.
//!
//! Three strategies are available, each exactly uniform on its own:
//!
//! * **warm-up**: for a maximal disjoint clause set `S`, rejection over
//!   assignments satisfying `S`, raced against enumerating the satisfying
//!   assignments of `vbl(S)`, whose residuals are (≤1)-CNF.
//! * **family rejection**: draw from the pool of assignments satisfying
//!   every member of `M_k` until one satisfies `F`.
//! * **family enumeration at level ℓ**: for every `α : W′ → {0,1}` count
//!   `A_α = |sat(F^[α])|`, pick `α*` with probability `A_α / A`, and finish
//!   with an exact self-reducing sampler on `F^[α*]`.
//!
//! The racer dovetails rejection and enumeration for `ℓ = 1..k` and returns
//! the first finisher's sample. Each strategy owns an independent RNG
//! stream, so conditioned on which strategy wins its output is still
//! uniform.
//!
//! Work units: one pool draw is 1 unit; counting one `A_α` costs the number
//! of branch nodes the counter expanded, at least 1.

use std::collections::HashMap;

use log::debug;
use num_bigint::BigUint;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cnf::{Clause, CnfFormula, PartialAssignment};
use crate::families::{
    boundary_sets, build_family_sequence, max_disjoint_clauses, BoundarySets, FamilyError,
    FamilyPool, IndependentFamily, DEFAULT_DEPTH,
};
use crate::race::{Race, Step};
use crate::twosat::{count_2sat, count_leq1, sample_leq1, solve_2sat, ExactSampler, TwoSatError};
use crate::util::uniform_below;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SampleError {
    #[error(transparent)]
    TwoSat(#[from] TwoSatError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("formula is unsatisfiable")]
    Unsatisfiable,
    #[error("work budget of {budget} units exhausted")]
    WorkBudgetExceeded { budget: u64 },
    #[error("enumeration level {level} outside 1..={k}")]
    InvalidLevel { level: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    Auto,
    Rejection,
    Enumeration(usize),
    Warmup,
}

#[derive(Debug, Clone)]
pub struct SamplerConfig {
    pub k: usize,
    pub strategy: Strategy,
    pub max_work: Option<u64>,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            k: DEFAULT_DEPTH,
            strategy: Strategy::Auto,
            max_work: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    #[serde(serialize_with = "bits")]
    pub assignment: PartialAssignment,
    pub strategy: String,
    pub rejections: u64,
    pub counter_nodes: u64,
    /// Work charged by the strategy (or the whole race).
    pub work: u64,
}

fn bits<S: serde::Serializer>(a: &PartialAssignment, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&a.to_bit_string())
}

/// Counts `A_α` for one boundary set, filled lazily in lexicographic order
/// of `α` over ascending `W′` (first variable most significant).
#[derive(Debug, Clone)]
struct AlphaTable {
    w_prime: Vec<u32>,
    counts: Vec<BigUint>,
    work: Vec<u64>,
    samplers: HashMap<usize, ExactSampler>,
}

impl AlphaTable {
    fn new(w_prime: Vec<u32>) -> Self {
        AlphaTable {
            w_prime,
            counts: Vec::new(),
            work: Vec::new(),
            samplers: HashMap::new(),
        }
    }

    fn size(&self) -> u128 {
        1u128 << self.w_prime.len()
    }

    fn complete(&self) -> bool {
        self.counts.len() as u128 == self.size()
    }

    /// Ensures entry `i` exists and returns its work cost.
    fn entry(&mut self, f: &CnfFormula, i: usize) -> u64 {
        while self.counts.len() <= i {
            let j = self.counts.len();
            let (a, w) = count_alpha(f, &self.w_prime, j as u128);
            self.counts.push(a);
            self.work.push(w);
        }
        self.work[i]
    }

    fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

fn alpha_assignment(n: u32, w_prime: &[u32], index: u128) -> PartialAssignment {
    let mut a = PartialAssignment::new(n);
    let len = w_prime.len();
    for (pos, &v) in w_prime.iter().enumerate() {
        a.set(v, index >> (len - 1 - pos) & 1 == 1);
    }
    a
}

/// `A_α` over `V ∖ W′` and the counter's work.
fn count_alpha(f: &CnfFormula, w_prime: &[u32], index: u128) -> (BigUint, u64) {
    let alpha = alpha_assignment(f.num_vars(), w_prime, index);
    let r = count_2sat(&f.restrict(&alpha)).expect("restriction of a 2-CNF");
    (r.count >> w_prime.len(), r.nodes_expanded.max(1))
}

/// Satisfying assignments of a maximal disjoint clause set, enumerated as an
/// odometer over per-clause local solutions.
#[derive(Debug, Clone)]
struct WarmupTable {
    s: Vec<Clause>,
    locals: Vec<Vec<Vec<bool>>>,
    covered: usize,
    counts: Vec<BigUint>,
}

fn clause_local_solutions(c: &Clause) -> Vec<Vec<bool>> {
    let w = c.len();
    (0..1u32 << w)
        .map(|m| (0..w).map(|i| m >> (w - 1 - i) & 1 == 1).collect::<Vec<_>>())
        .filter(|b| c.literals().iter().zip(b).any(|(l, &x)| l.eval(x)))
        .collect()
}

impl WarmupTable {
    fn new(f: &CnfFormula) -> Self {
        let s = max_disjoint_clauses(f);
        let locals = s.iter().map(clause_local_solutions).collect();
        let covered = s.iter().map(Clause::len).sum();
        WarmupTable {
            s,
            locals,
            covered,
            counts: Vec::new(),
        }
    }

    fn size(&self) -> u128 {
        self.locals.iter().map(|l| l.len() as u128).product()
    }

    fn alpha(&self, n: u32, mut index: u128) -> PartialAssignment {
        let mut a = PartialAssignment::new(n);
        for (c, sols) in self.s.iter().zip(&self.locals).rev() {
            let k = sols.len() as u128;
            let pick = &sols[(index % k) as usize];
            index /= k;
            for (l, &b) in c.literals().iter().zip(pick) {
                a.set(l.var(), b);
            }
        }
        a
    }

    fn entry(&mut self, f: &CnfFormula, i: usize) {
        while self.counts.len() <= i {
            let alpha = self.alpha(f.num_vars(), self.counts.len() as u128);
            let c = count_leq1(&f.restrict(&alpha)).expect("maximality leaves (≤1)-CNF");
            self.counts.push(c >> self.covered);
        }
    }

    fn pool_draw<R: Rng + ?Sized>(&self, n: u32, rng: &mut R) -> PartialAssignment {
        let mut a = PartialAssignment::new(n);
        for v in 1..=n {
            a.set(v, rng.gen());
        }
        for (c, sols) in self.s.iter().zip(&self.locals) {
            let pick = sols.choose(rng).expect("satisfiable clause");
            for (l, &b) in c.literals().iter().zip(pick) {
                a.set(l.var(), b);
            }
        }
        a
    }
}

/// Picks the index whose cumulative count first exceeds `r`.
fn select_index(counts: &[BigUint], r: &BigUint) -> usize {
    let mut acc = BigUint::zero();
    for (i, c) in counts.iter().enumerate() {
        acc += c;
        if &acc > r {
            return i;
        }
    }
    unreachable!("r below the total")
}

/// A formula prepared for repeated sampling: families, pools and the
/// counting tables are built once and reused across draws.
#[derive(Debug, Clone)]
pub struct Sampler2 {
    f: CnfFormula,
    k: usize,
    families: Vec<IndependentFamily>,
    pool: FamilyPool,
    boundaries: Vec<Option<BoundarySets>>,
    tables: Vec<Option<AlphaTable>>,
    warmup: Option<WarmupTable>,
}

impl Sampler2 {
    pub fn new(f: &CnfFormula, k: usize) -> Result<Self, SampleError> {
        let families = build_family_sequence(f, k)?;
        let pool = FamilyPool::new(&families[k], f.num_vars());
        Ok(Sampler2 {
            f: f.clone(),
            k,
            families,
            pool,
            boundaries: vec![None; k + 1],
            tables: vec![None; k + 1],
            warmup: None,
        })
    }

    pub fn formula(&self) -> &CnfFormula {
        &self.f
    }

    pub fn depth(&self) -> usize {
        self.k
    }

    pub fn family(&self, level: usize) -> &IndependentFamily {
        &self.families[level]
    }

    pub fn pool(&self) -> &FamilyPool {
        &self.pool
    }

    fn check_level(&self, level: usize) -> Result<(), SampleError> {
        if (1..=self.k).contains(&level) {
            Ok(())
        } else {
            Err(SampleError::InvalidLevel { level, k: self.k })
        }
    }

    pub fn boundary(&mut self, level: usize) -> Result<&BoundarySets, SampleError> {
        if self.boundaries[level].is_none() {
            self.boundaries[level] = Some(boundary_sets(&self.f, &self.families[level])?);
        }
        Ok(self.boundaries[level].as_ref().expect("just set"))
    }

    fn table(&mut self, level: usize) -> Result<&mut AlphaTable, SampleError> {
        self.check_level(level)?;
        if self.tables[level].is_none() {
            let w_prime = self.boundary(level)?.w_prime.clone();
            self.tables[level] = Some(AlphaTable::new(w_prime));
        }
        Ok(self.tables[level].as_mut().expect("just set"))
    }

    /// All `A_α` for level `ℓ` and the total counting work.
    pub fn alpha_counts(&mut self, level: usize) -> Result<(Vec<BigUint>, u64), SampleError> {
        let f = self.f.clone();
        let t = self.table(level)?;
        let size = usize::try_from(t.size()).expect("boundary fits in memory");
        let mut work = 0;
        for i in 0..size {
            work += t.entry(&f, i);
        }
        Ok((t.counts.clone(), work))
    }

    /// Rejection over the pool of `M_k`, optionally capped in draws.
    pub fn sample_rejection<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        max_work: Option<u64>,
    ) -> Result<SampleReport, SampleError> {
        if solve_2sat(&self.f)?.is_none() {
            return Err(SampleError::Unsatisfiable);
        }
        let mut draws = 0u64;
        loop {
            if let Some(b) = max_work.filter(|&b| draws >= b) {
                return Err(SampleError::WorkBudgetExceeded { budget: b });
            }
            draws += 1;
            let a = self.pool.sample(rng);
            if self.f.is_satisfied_by(&a) {
                return Ok(SampleReport {
                    assignment: a,
                    strategy: "rejection".into(),
                    rejections: draws - 1,
                    counter_nodes: 0,
                    work: draws,
                });
            }
        }
    }

    /// `α*` from the complete table and `β*` from a cached exact sampler.
    fn finish_enumeration<R: Rng + ?Sized>(
        &mut self,
        level: usize,
        rng: &mut R,
    ) -> Result<(PartialAssignment, u64), SampleError> {
        let f = self.f.clone();
        let t = self.tables[level].as_mut().expect("table built");
        debug_assert!(t.complete());
        let total = t.total();
        if total.is_zero() {
            return Err(SampleError::Unsatisfiable);
        }
        let r = uniform_below(rng, &total);
        let idx = select_index(&t.counts, &r);
        let w_prime = t.w_prime.clone();
        let sampler = match t.samplers.entry(idx) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(e) => {
                let alpha = alpha_assignment(f.num_vars(), &w_prime, idx as u128);
                e.insert(ExactSampler::with_base(&f, alpha)?)
            }
        };
        let before = sampler.nodes_expanded();
        let a = sampler.sample(rng)?;
        Ok((a, sampler.nodes_expanded() - before))
    }

    /// Enumeration at level `ℓ`.
    pub fn sample_enumeration<R: Rng + ?Sized>(
        &mut self,
        level: usize,
        rng: &mut R,
    ) -> Result<SampleReport, SampleError> {
        let (_, work) = self.alpha_counts(level)?;
        let (a, extra) = self.finish_enumeration(level, rng)?;
        Ok(SampleReport {
            assignment: a,
            strategy: format!("enumeration({level})"),
            rejections: 0,
            counter_nodes: work + extra,
            work: work + extra,
        })
    }

    /// The warm-up algorithm: rejection over `S`-satisfying assignments raced
    /// against enumeration with (≤1)-CNF counting.
    pub fn sample_warmup<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Result<SampleReport, SampleError> {
        let f = self.f.clone();
        let n = f.num_vars();
        let table = self.warmup.get_or_insert_with(|| WarmupTable::new(&f));
        let size = table.size();
        let mut rej_rng = ChaCha8Rng::seed_from_u64(rng.gen());
        let mut enum_rng = ChaCha8Rng::seed_from_u64(rng.gen());
        let mut pos = 0usize;
        let mut draws = 0u64;
        let mut race = Race::new(2);
        let rejection_done = race.run(|arm| {
            if arm == 0 {
                draws += 1;
                let a = table.pool_draw(n, &mut rej_rng);
                if f.is_satisfied_by(&a) {
                    Step::Finished(1, Some(a))
                } else {
                    Step::Continue(1)
                }
            } else {
                table.entry(&f, pos);
                pos += 1;
                if pos as u128 == size {
                    Step::Finished(1, None)
                } else {
                    Step::Continue(1)
                }
            }
        });
        let work = race.total_work();
        if let Some(a) = rejection_done {
            return Ok(SampleReport {
                assignment: a,
                strategy: "warmup-rejection".into(),
                rejections: draws - 1,
                counter_nodes: 0,
                work,
            });
        }
        let total: BigUint = table.counts.iter().sum();
        if total.is_zero() {
            return Err(SampleError::Unsatisfiable);
        }
        let idx = select_index(&table.counts, &uniform_below(&mut enum_rng, &total));
        let alpha = table.alpha(n, idx as u128);
        let mut a = sample_leq1(&f.restrict(&alpha), &mut enum_rng)?;
        a.merge(&alpha);
        Ok(SampleReport {
            assignment: a,
            strategy: "warmup-enumeration".into(),
            rejections: 0,
            counter_nodes: 0,
            work,
        })
    }

    /// `A` as computed by the warm-up enumeration.
    pub fn warmup_total(&mut self) -> BigUint {
        let f = self.f.clone();
        let t = self.warmup.get_or_insert_with(|| WarmupTable::new(&f));
        let size = usize::try_from(t.size()).expect("fits");
        if size > 0 {
            t.entry(&f, size - 1);
        }
        t.counts.iter().sum()
    }

    /// Per-strategy seeds for the racer: rejection first, then `ℓ = 1..k`.
    pub fn race_seeds<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..=self.k).map(|_| rng.gen()).collect()
    }

    /// Dovetails rejection and enumeration for `ℓ = 1..k`.
    pub fn sample_auto<R: Rng + ?Sized>(
        &mut self,
        rng: &mut R,
        max_work: Option<u64>,
    ) -> Result<RaceOutcome, SampleError> {
        let seeds = self.race_seeds(rng);
        self.race_with_seeds(&seeds, max_work)
    }

    pub fn race_with_seeds(
        &mut self,
        seeds: &[u64],
        max_work: Option<u64>,
    ) -> Result<RaceOutcome, SampleError> {
        assert_eq!(seeds.len(), self.k + 1);
        for l in 1..=self.k {
            self.table(l)?;
        }
        let f = self.f.clone();
        let pool = &self.pool;
        let tables = &mut self.tables;
        let mut rej_rng = ChaCha8Rng::seed_from_u64(seeds[0]);
        let mut pos = vec![0usize; self.k + 1];
        let mut draws = 0u64;
        let mut nodes = 0u64;
        let mut race = Race::new(self.k + 1).with_budget(max_work);
        let result = race.try_run(|s| {
            if s == 0 {
                draws += 1;
                let a = pool.sample(&mut rej_rng);
                return if f.is_satisfied_by(&a) {
                    Step::Finished(1, Some(a))
                } else {
                    Step::Continue(1)
                };
            }
            let t = tables[s].as_mut().expect("tables built");
            let w = t.entry(&f, pos[s]);
            nodes += w;
            pos[s] += 1;
            if pos[s] as u128 == t.size() {
                Step::Finished(w, None)
            } else {
                Step::Continue(w)
            }
        });
        let race_work = race.total_work();
        let winner = race.winner();
        let per_strategy = race.work().to_vec();
        let max_step = race.max_step();
        let sample = match result {
            Err(_) => {
                return Err(SampleError::WorkBudgetExceeded {
                    budget: max_work.expect("budget set"),
                })
            }
            Ok(Some(a)) => SampleReport {
                assignment: a,
                strategy: "rejection".into(),
                rejections: draws - 1,
                counter_nodes: nodes,
                work: race_work,
            },
            Ok(None) => {
                let level = winner.expect("finished");
                let mut rng = ChaCha8Rng::seed_from_u64(seeds[level]);
                let (a, extra) = self.finish_enumeration(level, &mut rng)?;
                SampleReport {
                    assignment: a,
                    strategy: format!("enumeration({level})"),
                    rejections: draws,
                    counter_nodes: nodes + extra,
                    work: race_work + extra,
                }
            }
        };
        debug!("race won by {} after {race_work} units", sample.strategy);
        Ok(RaceOutcome {
            report: sample,
            per_strategy,
            max_step,
        })
    }

    /// Draws one sample with the given strategy.
    pub fn sample<R: Rng + ?Sized>(
        &mut self,
        strategy: Strategy,
        rng: &mut R,
        max_work: Option<u64>,
    ) -> Result<SampleReport, SampleError> {
        let report = match strategy {
            Strategy::Auto => self.sample_auto(rng, max_work)?.report,
            Strategy::Rejection => self.sample_rejection(rng, max_work)?,
            Strategy::Enumeration(l) => self.sample_enumeration(l, rng)?,
            Strategy::Warmup => self.sample_warmup(rng)?,
        };
        assert!(self.f.is_satisfied_by(&report.assignment));
        Ok(report)
    }

    /// Work a single strategy would need on its own with the given stream
    /// seed: pool draws for rejection, counting work for enumeration.
    pub fn single_work(&mut self, strategy: Strategy, seed: u64) -> Result<u64, SampleError> {
        match strategy {
            Strategy::Rejection => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                Ok(self.sample_rejection(&mut rng, None)?.work)
            }
            Strategy::Enumeration(l) => Ok(self.alpha_counts(l)?.1),
            _ => unimplemented!("only racer strategies have a single work figure"),
        }
    }
}

/// The racer's sample with its per-strategy accounting.
#[derive(Debug, Clone)]
pub struct RaceOutcome {
    pub report: SampleReport,
    pub per_strategy: Vec<u64>,
    pub max_step: u64,
}

fn require_two_cnf(f: &CnfFormula) -> Result<(), SampleError> {
    match f.max_width() {
        w if w > 2 => Err(TwoSatError::NotTwoCnf(w).into()),
        _ => Ok(()),
    }
}

/// The warm-up sampler.
pub fn warmup_sample<R: Rng + ?Sized>(f: &CnfFormula, rng: &mut R) -> Result<SampleReport, SampleError> {
    require_two_cnf(f)?;
    Sampler2::new(f, DEFAULT_DEPTH)?.sample(Strategy::Warmup, rng, None)
}

/// Rejection from the pool of `M`, which must be a family of `F`.
pub fn family_rejection_sample<R: Rng + ?Sized>(
    f: &CnfFormula,
    family: &IndependentFamily,
    rng: &mut R,
    max_work: Option<u64>,
) -> Result<SampleReport, SampleError> {
    require_two_cnf(f)?;
    if solve_2sat(f)?.is_none() {
        return Err(SampleError::Unsatisfiable);
    }
    let pool = FamilyPool::new(family, f.num_vars());
    let mut draws = 0u64;
    loop {
        if let Some(b) = max_work.filter(|&b| draws >= b) {
            return Err(SampleError::WorkBudgetExceeded { budget: b });
        }
        draws += 1;
        let a = pool.sample(rng);
        if f.is_satisfied_by(&a) {
            return Ok(SampleReport {
                assignment: a,
                strategy: "rejection".into(),
                rejections: draws - 1,
                counter_nodes: 0,
                work: draws,
            });
        }
    }
}

/// Enumeration over the boundary of `M_ℓ` in linear space: a first pass
/// sums `A = Σ A_α`, a second pass recomputes the counts in the same order
/// until the cumulative sum exceeds a uniform `r < A`.
pub fn family_enumeration_sample<R: Rng + ?Sized>(
    f: &CnfFormula,
    family: &IndependentFamily,
    rng: &mut R,
) -> Result<(SampleReport, BigUint), SampleError> {
    require_two_cnf(f)?;
    let w_prime = boundary_sets(f, family)?.w_prime;
    let size = 1u128 << w_prime.len();
    let mut total = BigUint::zero();
    let mut work = 0;
    for i in 0..size {
        let (a, w) = count_alpha(f, &w_prime, i);
        total += a;
        work += w;
    }
    if total.is_zero() {
        return Err(SampleError::Unsatisfiable);
    }
    let r = uniform_below(rng, &total);
    let mut acc = BigUint::zero();
    let mut chosen = None;
    for i in 0..size {
        let (a, w) = count_alpha(f, &w_prime, i);
        work += w;
        acc += a;
        if acc > r {
            chosen = Some(i);
            break;
        }
    }
    let alpha = alpha_assignment(f.num_vars(), &w_prime, chosen.expect("r < A"));
    let mut sampler = ExactSampler::with_base(f, alpha)?;
    let a = sampler.sample(rng)?;
    work += sampler.nodes_expanded();
    assert!(f.is_satisfied_by(&a));
    Ok((
        SampleReport {
            assignment: a,
            strategy: format!("enumeration({})", family.level()),
            rejections: 0,
            counter_nodes: work,
            work,
        },
        total,
    ))
}

/// One sample according to `cfg`.
pub fn sample_solution<R: Rng + ?Sized>(
    f: &CnfFormula,
    cfg: &SamplerConfig,
    rng: &mut R,
) -> Result<SampleReport, SampleError> {
    require_two_cnf(f)?;
    Sampler2::new(f, cfg.k)?.sample(cfg.strategy, rng, cfg.max_work)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(n: u32, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(n, clauses).unwrap()
    }

    #[test]
    fn one_star_never_rejects() {
        let f = cnf(2, &[&[1, 2]]);
        let mut s = Sampler2::new(&f, 7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert_eq!(s.sample(Strategy::Rejection, &mut rng, None).unwrap().rejections, 0);
        }
    }

    #[test]
    fn unique_solution_everywhere() {
        let f = cnf(2, &[&[1], &[2], &[1, 2]]);
        let mut s = Sampler2::new(&f, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for strat in [
            Strategy::Auto,
            Strategy::Rejection,
            Strategy::Enumeration(1),
            Strategy::Enumeration(3),
            Strategy::Warmup,
        ] {
            let r = s.sample(strat, &mut rng, None).unwrap();
            assert_eq!(r.assignment.to_bit_string(), "11");
        }
    }

    #[test]
    fn unsatisfiable_detected() {
        let f = cnf(2, &[&[1], &[-1]]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for strat in [
            Strategy::Auto,
            Strategy::Rejection,
            Strategy::Enumeration(2),
            Strategy::Warmup,
        ] {
            let cfg = SamplerConfig {
                k: 3,
                strategy: strat,
                max_work: None,
            };
            assert_eq!(sample_solution(&f, &cfg, &mut rng), Err(SampleError::Unsatisfiable));
        }
    }

    #[test]
    fn empty_boundary_counts_whole_formula() {
        let f = cnf(3, &[&[1, 2], &[2, 3], &[3, 1]]);
        let mut s = Sampler2::new(&f, 2).unwrap();
        let (counts, _) = s.alpha_counts(1).unwrap();
        assert_eq!(counts, vec![BigUint::from(4u32)]);
    }

    #[test]
    fn budget_is_enforced() {
        let f = cnf(4, &[&[1, 2], &[-1, -2], &[3, 4], &[-3, -4], &[1, 3]]);
        let mut s = Sampler2::new(&f, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(matches!(
            s.sample(Strategy::Auto, &mut rng, Some(0)),
            Err(SampleError::WorkBudgetExceeded { budget: 0 })
        ));
        assert!(matches!(
            s.sample(Strategy::Rejection, &mut rng, Some(0)),
            Err(SampleError::WorkBudgetExceeded { budget: 0 })
        ));
        assert!(s.sample(Strategy::Auto, &mut rng, Some(1 << 20)).is_ok());
    }

    #[test]
    fn deterministic_racer() {
        let f = cnf(5, &[&[1, 2], &[-2, 3], &[4, -5]]);
        let run = || {
            let mut rng = ChaCha8Rng::seed_from_u64(9);
            let mut s = Sampler2::new(&f, 7).unwrap();
            (0..20)
                .map(|_| s.sample(Strategy::Auto, &mut rng, None).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn invalid_level() {
        let f = cnf(2, &[&[1, 2]]);
        let mut s = Sampler2::new(&f, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert_eq!(
            s.sample(Strategy::Enumeration(3), &mut rng, None),
            Err(SampleError::InvalidLevel { level: 3, k: 2 })
        );
        assert!(s.sample(Strategy::Enumeration(0), &mut rng, None).is_err());
    }
}
