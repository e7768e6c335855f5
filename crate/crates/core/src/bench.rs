//! Work counters against oracle-measured solution density on a generated
//! corpus of planted 2-CNF formulas.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cnf::CnfFormula;
use crate::oracle::{brute_count_u64, gen_random_ksat, InstanceSpec, OracleError};
use crate::sampler2::{SampleError, Sampler2, Strategy};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Sample(#[from] SampleError),
}

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub n: u32,
    /// Clause counts, one density level each.
    pub clause_counts: Vec<usize>,
    pub instances_per_level: usize,
    pub k: usize,
    /// Rejection samples averaged per instance.
    pub draws: u64,
    pub seed: u64,
}

impl Default for BenchSpec {
    fn default() -> Self {
        BenchSpec {
            n: 14,
            clause_counts: vec![4, 8, 12, 16, 20, 24],
            instances_per_level: 8,
            k: 7,
            draws: 64,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: u32,
    pub m: usize,
    pub instance_seed: u64,
    pub solutions: u64,
    pub epsilon: f64,
    pub pool: f64,
    /// `pool / |sat(F)|`, the expected number of rejection draws.
    pub expected_rejection: f64,
    /// Mean pool draws per rejection sample.
    pub rejection_work: f64,
    /// Counting work of each enumeration level `1..=k`.
    pub enumeration_work: Vec<u64>,
    pub racer_work: u64,
    pub racer_winner: String,
    /// Smallest single-strategy work with the racer's stream seeds.
    pub min_single: u64,
    pub max_step: u64,
    /// Every racing strategy stayed within `2·min_single + max_step`.
    pub racer_within_bound: bool,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "n,m,instance_seed,solutions,epsilon,pool,expected_rejection,rejection_work,best_enumeration_level,best_enumeration_work,racer_work,racer_winner,min_single,max_step,racer_within_bound";

    pub fn best_enumeration(&self) -> (usize, u64) {
        self.enumeration_work
            .iter()
            .enumerate()
            .min_by_key(|&(_, &w)| w)
            .map(|(i, &w)| (i + 1, w))
            .unwrap_or((0, 0))
    }

    pub fn to_csv(&self) -> String {
        let (level, work) = self.best_enumeration();
        format!(
            "{},{},{},{},{:.6e},{:.6e},{:.4},{:.4},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.instance_seed,
            self.solutions,
            self.epsilon,
            self.pool,
            self.expected_rejection,
            self.rejection_work,
            level,
            work,
            self.racer_work,
            self.racer_winner,
            self.min_single,
            self.max_step,
            self.racer_within_bound
        )
    }
}

/// Measures one instance. Racer seeds and rejection streams derive from
/// `seed`.
pub fn bench_instance(f: &CnfFormula, k: usize, draws: u64, seed: u64) -> Result<BenchRow, BenchError> {
    let solutions = brute_count_u64(f)?;
    let mut sampler = Sampler2::new(f, k)?;
    let pool = sampler.pool().count().to_f64().unwrap_or(f64::INFINITY);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut rejection_total = 0u64;
    for _ in 0..draws {
        let mut stream = ChaCha8Rng::seed_from_u64(rng.gen());
        rejection_total += sampler.sample_rejection(&mut stream, None)?.work;
    }
    let enumeration_work = (1..=k)
        .map(|l| sampler.alpha_counts(l).map(|(_, w)| w))
        .collect::<Result<Vec<_>, _>>()?;

    let seeds = sampler.race_seeds(&mut rng);
    let outcome = sampler.race_with_seeds(&seeds, None)?;
    let mut min_single = sampler.single_work(Strategy::Rejection, seeds[0])?;
    for l in 1..=k {
        min_single = min_single.min(sampler.single_work(Strategy::Enumeration(l), seeds[l])?);
    }
    let bound = 2 * min_single + outcome.max_step;
    Ok(BenchRow {
        n: f.num_vars(),
        m: f.num_clauses(),
        instance_seed: seed,
        solutions,
        epsilon: solutions as f64 / 2f64.powi(f.num_vars() as i32),
        pool,
        expected_rejection: pool / solutions as f64,
        rejection_work: rejection_total as f64 / draws.max(1) as f64,
        enumeration_work,
        racer_work: outcome.per_strategy.iter().sum(),
        racer_winner: outcome.report.strategy,
        min_single,
        max_step: outcome.max_step,
        racer_within_bound: outcome.per_strategy.iter().all(|&w| w <= bound),
    })
}

/// Runs [`bench_instance`] over planted random 2-CNF formulas, level by
/// level.
pub fn bench_corpus(spec: &BenchSpec) -> Result<Vec<BenchRow>, BenchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut rows = Vec::new();
    for &m in &spec.clause_counts {
        for _ in 0..spec.instances_per_level {
            let inst = gen_random_ksat(&InstanceSpec {
                n: spec.n,
                m,
                k: 2,
                seed: rng.gen(),
                planted: true,
            })?;
            rows.push(bench_instance(&inst.formula, spec.k, spec.draws, rng.gen())?);
        }
    }
    Ok(rows)
}

/// Mean `log2 ε` and mean rejection work per density level, in the order of
/// `clause_counts`.
pub fn level_summary(spec: &BenchSpec, rows: &[BenchRow]) -> Vec<(usize, f64, f64)> {
    spec.clause_counts
        .iter()
        .map(|&m| {
            let level: Vec<&BenchRow> = rows.iter().filter(|r| r.m == m).collect();
            let count = level.len().max(1) as f64;
            let log_eps = level.iter().map(|r| r.epsilon.log2()).sum::<f64>() / count;
            let work = level.iter().map(|r| r.rejection_work).sum::<f64>() / count;
            (m, log_eps, work)
        })
        .collect()
}
