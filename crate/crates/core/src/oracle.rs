//! Brute-force ground truth and seeded instance generators.
//!
//! Enumeration walks the hypercube in lexicographic order with `x1` as the
//! most significant bit, so `brute_sample` is reproducible given a seed.

use num_bigint::BigUint;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cnf::{Clause, CnfFormula, Literal, PartialAssignment};
use crate::vcover::Graph;

/// Default enumeration guard.
pub const DEFAULT_MAX_VARS: u32 = 30;
/// Hard ceiling: assignments are enumerated as `u64` indices.
const HARD_MAX_VARS: u32 = 63;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{num_vars} variables exceed the enumeration limit of {limit}")]
    TooLarge { num_vars: u32, limit: u32 },
    #[error("formula is unsatisfiable")]
    Unsatisfiable,
    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),
}

/// Clause as a pair of bitmasks over assignment indices.
#[derive(Clone, Copy)]
struct MaskClause {
    pos: u64,
    neg: u64,
}

fn masks(f: &CnfFormula) -> Vec<MaskClause> {
    let n = f.num_vars();
    let mut out: Vec<MaskClause> = f
        .clauses()
        .iter()
        .map(|c| {
            let mut m = MaskClause { pos: 0, neg: 0 };
            for l in c.literals() {
                let bit = 1u64 << (n - l.var());
                if l.is_positive() {
                    m.pos |= bit;
                } else {
                    m.neg |= bit;
                }
            }
            m
        })
        .collect();
    // short clauses first: they fail fastest
    out.sort_by_key(|m| (m.pos | m.neg).count_ones());
    out
}

fn check_size(f: &CnfFormula, limit: u32) -> Result<(), OracleError> {
    let limit = limit.min(HARD_MAX_VARS);
    if f.num_vars() > limit {
        return Err(OracleError::TooLarge {
            num_vars: f.num_vars(),
            limit,
        });
    }
    Ok(())
}

#[inline]
fn satisfies(clauses: &[MaskClause], a: u64) -> bool {
    clauses.iter().all(|c| (a & c.pos) | (!a & c.neg) != 0)
}

/// Lexicographic indices of all satisfying assignments.
pub fn enumerate_solutions(f: &CnfFormula) -> Result<Vec<u64>, OracleError> {
    enumerate_solutions_with_limit(f, DEFAULT_MAX_VARS)
}

pub fn enumerate_solutions_with_limit(f: &CnfFormula, limit: u32) -> Result<Vec<u64>, OracleError> {
    check_size(f, limit)?;
    let clauses = masks(f);
    Ok((0..1u64 << f.num_vars())
        .filter(|&a| satisfies(&clauses, a))
        .collect())
}

/// `|sat(F)|` as a machine integer.
pub fn brute_count_u64(f: &CnfFormula) -> Result<u64, OracleError> {
    brute_count_u64_with_limit(f, DEFAULT_MAX_VARS)
}

pub fn brute_count_u64_with_limit(f: &CnfFormula, limit: u32) -> Result<u64, OracleError> {
    check_size(f, limit)?;
    let clauses = masks(f);
    Ok((0..1u64 << f.num_vars())
        .filter(|&a| satisfies(&clauses, a))
        .count() as u64)
}

/// Exact `|sat(F)|` by enumerating all `2^n` assignments.
pub fn brute_count(f: &CnfFormula) -> Result<BigUint, OracleError> {
    brute_count_u64(f).map(BigUint::from)
}

pub fn brute_count_with_limit(f: &CnfFormula, limit: u32) -> Result<BigUint, OracleError> {
    brute_count_u64_with_limit(f, limit).map(BigUint::from)
}

/// Exactly uniform sample from `sat(F)`: enumerate, then index uniformly.
pub fn brute_sample<R: Rng + ?Sized>(
    f: &CnfFormula,
    rng: &mut R,
) -> Result<PartialAssignment, OracleError> {
    let sols = enumerate_solutions(f)?;
    if sols.is_empty() {
        return Err(OracleError::Unsatisfiable);
    }
    let pick = sols[rng.gen_range(0..sols.len())];
    Ok(PartialAssignment::from_index(f.num_vars(), pick))
}

/// Seeded random k-CNF description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceSpec {
    pub n: u32,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    pub planted: bool,
}

#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub formula: CnfFormula,
    /// The hidden assignment every clause was biased towards, when planted.
    pub planted: Option<PartialAssignment>,
}

/// `m` distinct clauses of exactly `k` distinct variables with random
/// polarities. With `planted`, a hidden assignment is drawn first and any
/// clause it falsifies gets one random literal flipped.
pub fn gen_random_ksat(spec: &InstanceSpec) -> Result<GeneratedInstance, OracleError> {
    gen_clauses(spec, |_| spec.k)
}

/// Like [`gen_random_ksat`] but each clause width is uniform in `1..=k`.
pub fn gen_random_leq_ksat(spec: &InstanceSpec) -> Result<GeneratedInstance, OracleError> {
    gen_clauses(spec, |rng| rng.gen_range(1..=spec.k))
}

fn gen_clauses(
    spec: &InstanceSpec,
    mut width: impl FnMut(&mut ChaCha8Rng) -> usize,
) -> Result<GeneratedInstance, OracleError> {
    if spec.m > 0 && (spec.k == 0 || spec.k > spec.n as usize) {
        return Err(OracleError::InvalidSpec(format!(
            "clause width {} with {} variables",
            spec.k, spec.n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let planted = spec.planted.then(|| {
        let bits: Vec<bool> = (0..spec.n).map(|_| rng.gen()).collect();
        PartialAssignment::from_bits(&bits)
    });
    let mut clauses: Vec<Clause> = Vec::with_capacity(spec.m);
    let mut seen = std::collections::HashSet::new();
    let max_attempts = 20 * spec.m + 100;
    let mut attempts = 0;
    while clauses.len() < spec.m && attempts < max_attempts {
        attempts += 1;
        let w = width(&mut rng);
        let vars = index::sample(&mut rng, spec.n as usize, w);
        let mut lits: Vec<Literal> = vars
            .iter()
            .map(|i| Literal::new(i as u32 + 1, rng.gen()))
            .collect();
        if let Some(hidden) = &planted {
            if !lits.iter().any(|l| l.eval(hidden.get(l.var()).unwrap())) {
                let j = rng.gen_range(0..lits.len());
                lits[j] = lits[j].negate();
            }
        }
        let clause = Clause::new(lits).expect("distinct variables");
        if seen.insert(clause.clone()) {
            clauses.push(clause);
        }
    }
    if clauses.len() < spec.m {
        return Err(OracleError::InvalidSpec(format!(
            "could not draw {} distinct clauses",
            spec.m
        )));
    }
    let formula = CnfFormula::from_clauses(spec.n, clauses).expect("variables in range");
    Ok(GeneratedInstance { formula, planted })
}

/// Erdős–Rényi `G(n, p)`, deterministic in `seed`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// Size of a minimum vertex cover by enumerating vertex subsets.
pub fn brute_min_cover(g: &Graph) -> Result<usize, OracleError> {
    let n = g.num_vertices();
    if n > 24 {
        return Err(OracleError::TooLarge {
            num_vars: n as u32,
            limit: 24,
        });
    }
    let edges = edge_masks(g);
    Ok((0..1u32 << n)
        .filter(|&s| edges.iter().all(|&e| s & e != 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0))
}

/// Number of vertex covers of size exactly `k`.
pub fn brute_count_covers(g: &Graph, k: usize) -> Result<u64, OracleError> {
    let n = g.num_vertices();
    if n > 24 {
        return Err(OracleError::TooLarge {
            num_vars: n as u32,
            limit: 24,
        });
    }
    let edges = edge_masks(g);
    Ok((0..1u32 << n)
        .filter(|&s| s.count_ones() as usize == k && edges.iter().all(|&e| s & e != 0))
        .count() as u64)
}

fn edge_masks(g: &Graph) -> Vec<u32> {
    g.edges()
        .into_iter()
        .map(|(u, v)| (1u32 << u) | (1u32 << v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(n: u32, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(n, clauses).unwrap()
    }

    #[test]
    fn brute_count_examples() {
        assert_eq!(brute_count(&cnf(2, &[&[1, 2]])).unwrap(), BigUint::from(3u32));
        assert_eq!(brute_count(&CnfFormula::new(3)).unwrap(), BigUint::from(8u32));
        assert_eq!(brute_count(&cnf(1, &[&[1], &[-1]])).unwrap(), BigUint::from(0u32));
    }

    #[test]
    fn guard_is_overridable() {
        let big = CnfFormula::new(31);
        assert!(matches!(brute_count(&big), Err(OracleError::TooLarge { .. })));
        let mut f = CnfFormula::new(0);
        f = f.with_num_vars(4).unwrap();
        assert_eq!(brute_count_with_limit(&f, 4).unwrap(), BigUint::from(16u32));
    }

    #[test]
    fn brute_sample_unique_solution() {
        let f = cnf(1, &[&[1]]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert_eq!(brute_sample(&f, &mut rng).unwrap().to_bit_string(), "1");
        }
        assert_eq!(
            brute_sample(&cnf(1, &[&[1], &[-1]]), &mut rng),
            Err(OracleError::Unsatisfiable)
        );
    }

    #[test]
    fn brute_sample_is_uniform() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let empty = CnfFormula::new(1);
        let ones = (0..20_000)
            .filter(|_| brute_sample(&empty, &mut rng).unwrap().get(1) == Some(true))
            .count();
        assert!((ones as f64 / 20_000.0 - 0.5).abs() < 0.02);

        let f = cnf(2, &[&[1, 2]]);
        let draws = 300_000;
        let mut freq = [0usize; 4];
        for _ in 0..draws {
            freq[brute_sample(&f, &mut rng).unwrap().to_index() as usize] += 1;
        }
        assert_eq!(freq[0], 0);
        for &c in &freq[1..] {
            assert!((c as f64 / draws as f64 - 1.0 / 3.0).abs() < 0.01);
        }
    }

    #[test]
    fn generator_examples() {
        let spec = InstanceSpec {
            n: 5,
            m: 0,
            k: 3,
            seed: 1,
            planted: false,
        };
        let g = gen_random_ksat(&spec).unwrap();
        assert!(g.formula.is_empty());
        assert_eq!(g.formula.num_vars(), 5);

        let spec = InstanceSpec {
            n: 12,
            m: 40,
            k: 3,
            seed: 9,
            planted: true,
        };
        let a = gen_random_ksat(&spec).unwrap();
        let b = gen_random_ksat(&spec).unwrap();
        assert_eq!(
            crate::cnf::write_dimacs(&a.formula),
            crate::cnf::write_dimacs(&b.formula)
        );
        assert_eq!(a.formula.num_clauses(), 40);
        assert!(a.formula.clauses().iter().all(|c| c.len() == 3));
        assert_eq!(a.formula.evaluate(a.planted.as_ref().unwrap()), Ok(true));
    }

    #[test]
    fn generator_rejects_bad_width() {
        let spec = InstanceSpec {
            n: 2,
            m: 1,
            k: 3,
            seed: 0,
            planted: false,
        };
        assert!(matches!(
            gen_random_ksat(&spec),
            Err(OracleError::InvalidSpec(_))
        ));
    }

    #[test]
    fn cover_oracles() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(brute_min_cover(&tri).unwrap(), 2);
        assert_eq!(brute_count_covers(&tri, 2).unwrap(), 3);
        assert_eq!(brute_count_covers(&tri, 1).unwrap(), 0);
    }
}
