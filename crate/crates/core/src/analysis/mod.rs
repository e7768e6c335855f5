//! Runtime exponents: branching numbers, the breadth-first exponent `B`,
//! the sampling linear program, the vertex cover exponent and the
//! entropy-based bound for Schöning's walk.
//!
//! All logarithms in exponents are base 2 unless stated otherwise; the
//! linear program's optimum is invariant under the choice of base.

mod simplex;

pub use simplex::{simplex_solve, Constraint, LpError, LpProblem, LpSolution, Relation};

use serde::Serialize;
use thiserror::Error;

/// Wahlström's #2-SAT base, the default for [`delta_lp`].
pub const WAHLSTROM_C: f64 = 1.2377;
pub const DEFAULT_LP_DEPTH: usize = 7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("branching number {0} must lie strictly between 1 and 2")]
    LambdaOutOfRange(f64),
    #[error("k/n ratio {ratio} must lie in (0, 1/ρ) = (0, {limit})")]
    RatioOutOfRange { ratio: f64, limit: f64 },
    #[error("argument {0} outside the function's domain")]
    DomainError(f64),
    #[error("empty or non-positive branching vector")]
    InvalidVector,
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// `τ(b_1, …, b_t)`: the unique root `x ≥ 1` of `Σ x^{−b_i} = 1`.
pub fn branching_number(v: &[f64]) -> Result<f64, AnalysisError> {
    if v.is_empty() || v.iter().any(|&b| !(b > 0.0)) {
        return Err(AnalysisError::InvalidVector);
    }
    let f = |x: f64| v.iter().map(|&b| x.powf(-b)).sum::<f64>() - 1.0;
    let df = |x: f64| v.iter().map(|&b| -b * x.powf(-b - 1.0)).sum::<f64>();
    if v.len() == 1 {
        return Ok(1.0);
    }
    // f(1) = t − 1 > 0, and f decreases; double the upper end until negative.
    let (mut lo, mut hi) = (1.0, 2.0);
    while f(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > 1e-4 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..50 {
        let step = f(x) / df(x);
        x -= step;
        if step.abs() < 1e-15 * x {
            break;
        }
    }
    Ok(x)
}

/// `|Σ τ^{−b_i} − 1|`.
pub fn branching_residual(v: &[f64], tau: f64) -> f64 {
    (v.iter().map(|&b| tau.powf(-b)).sum::<f64>() - 1.0).abs()
}

/// The vector `(1, 2, …, j)`.
pub fn ms_vector(j: usize) -> Vec<f64> {
    (1..=j).map(|b| b as f64).collect()
}

/// `B = 1/(log_λ 2 − 1)` for `1 < λ < 2`.
pub fn hirsch_exponent(lambda: f64) -> Result<f64, AnalysisError> {
    if !(lambda > 1.0 && lambda < 2.0) {
        return Err(AnalysisError::LambdaOutOfRange(lambda));
    }
    Ok(1.0 / (2f64.ln() / lambda.ln() - 1.0))
}

/// `c_λ = 2/(2 − λ)`, the constant in the geometric floor sum.
pub fn floor_constant(lambda: f64) -> f64 {
    2.0 / (2.0 - lambda)
}

/// Largest floor a breadth-first search can reach before the promise forces
/// a solution: `log_{λ/2}(ε / c_λ)`.
pub fn floor_limit(lambda: f64, epsilon: f64) -> f64 {
    (epsilon / floor_constant(lambda)).ln() / (lambda / 2.0).ln()
}

pub fn warmup_exponent() -> f64 {
    3f64.log(4.0)
}

pub fn threesat_exponent() -> f64 {
    7f64.log(8.0)
}

/// Balances rejection over a pool of `(a/b)^s` against enumerating `a^s`
/// local solutions of `s` disjoint clauses with `b` local assignments each,
/// and returns the resulting exponent of `1/ε`. Solved by bisection on
/// `s·log a = 1 + s·log(a/b)` (time units of `log(1/ε)`).
pub fn balanced_exponent(a: f64, b: f64) -> f64 {
    let g = |s: f64| s * a.ln() - (1.0 + s * (a / b).ln());
    let (mut lo, mut hi) = (0.0, 1.0);
    while g(hi) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi) * a.ln()
}

/// `ln ρ / ln(1/(ρ·k/n))`: the exponent of `1/ε` for the promise search.
pub fn vc_exponent(rho: f64, kn_ratio: f64) -> Result<f64, AnalysisError> {
    if !(kn_ratio > 0.0 && kn_ratio < 1.0 / rho) {
        return Err(AnalysisError::RatioOutOfRange {
            ratio: kn_ratio,
            limit: 1.0 / rho,
        });
    }
    Ok(rho.ln() / (1.0 / (rho * kn_ratio)).ln())
}

/// Binary entropy `H(x)` in bits.
pub fn entropy(x: f64) -> Result<f64, AnalysisError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(AnalysisError::DomainError(x));
    }
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    Ok(term(x) + term(1.0 - x))
}

/// Inverse of `H` restricted to `[0, 1/2]`.
pub fn entropy_inv(y: f64) -> Result<f64, AnalysisError> {
    if !(0.0..=1.0).contains(&y) {
        return Err(AnalysisError::DomainError(y));
    }
    if y == 1.0 {
        return Ok(0.5);
    }
    let (mut lo, mut hi) = (0.0f64, 0.5f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if entropy(mid)? < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Per-variable base-2 exponent of Schöning's expected running time when
/// `|sat(F)| ≥ 2^{δn}`.
pub fn schoening_exponent(k: usize, delta: f64) -> Result<f64, AnalysisError> {
    if k < 2 {
        return Err(AnalysisError::DomainError(k as f64));
    }
    if !(0.0..=1.0).contains(&delta) {
        return Err(AnalysisError::DomainError(delta));
    }
    let kf = k as f64;
    let h = entropy(1.0 / kf)?;
    if delta <= h {
        Ok((1.0 - h) + (1.0 / kf - entropy_inv(delta)?) * (kf - 1.0).log2())
    } else {
        Ok(1.0 - delta)
    }
}

/// Per-restart success probability lower bound `(k/(2(k−1)))^n`.
pub fn schoening_restart_bound(k: usize, n: usize) -> f64 {
    let kf = k as f64;
    (kf / (2.0 * (kf - 1.0))).powi(n as i32)
}

/// The `ε`-base `2^{δ*−1}` below which Schöning's walk beats the
/// rejection/enumeration 3-SAT algorithm, with `δ*` the crossing point of
/// the two per-variable exponents.
pub fn schoening_crossover() -> f64 {
    let prop = threesat_exponent();
    let diff = |d: f64| schoening_exponent(3, d).expect("domain") - (1.0 - d) * prop;
    // diff(0) < 0 (Schöning wins at ε = 2^{−n}), diff(1) = 0 from above.
    let (mut lo, mut hi) = (0.0, 0.99);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if diff(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    2f64.powf(0.5 * (lo + hi) - 1.0)
}

/// Solution of the sampling linear program.
#[derive(Debug, Clone, Serialize)]
pub struct DeltaLp {
    pub c: f64,
    pub k: usize,
    pub delta: f64,
    pub sigma: Vec<f64>,
    pub lp_tau: f64,
    pub lp_rho: f64,
    pub duals: Vec<f64>,
    /// Largest constraint violation of the returned point.
    pub primal_residual: f64,
    /// Largest violation of dual feasibility or strong duality.
    pub dual_residual: f64,
}

/// Variables are ordered `(δ, τ, ρ, σ_1, …, σ_k)`.
pub fn delta_lp_problem(c: f64, k: usize) -> LpProblem {
    let nv = 3 + k;
    let mut obj = vec![0.0; nv];
    obj[0] = 1.0;
    let mut p = LpProblem::new(obj);
    // δ + τ + ρ − Σ σ_i log((2^i+1)/2^{i+1}) ≤ 1
    let mut pool = vec![0.0; nv];
    pool[0] = 1.0;
    pool[1] = 1.0;
    pool[2] = 1.0;
    for i in 1..=k {
        let two_i = 2f64.powi(i as i32);
        pool[2 + i] = -((two_i + 1.0) / (2.0 * two_i)).log2();
    }
    p.add(pool, Relation::Le, 1.0);
    // δ − 3τ log c − ρ log 2c − Σ_{i<ℓ} σ_i (i+1) log c − Σ_{i≥ℓ} σ_i log(1+c^ℓ) ≤ 0
    let lc = c.log2();
    for l in 1..=k {
        let mut row = vec![0.0; nv];
        row[0] = 1.0;
        row[1] = -3.0 * lc;
        row[2] = -(2.0 * c).log2();
        for i in 1..=k {
            row[2 + i] = if i < l {
                -((i + 1) as f64) * lc
            } else {
                -(1.0 + c.powi(l as i32)).log2()
            };
        }
        p.add(row, Relation::Le, 0.0);
    }
    p
}

/// Maximizes `δ` for the #2-SAT base `c` and family depth `k`.
pub fn delta_lp(c: f64, k: usize) -> Result<DeltaLp, AnalysisError> {
    if !(c > 1.0) {
        return Err(AnalysisError::DomainError(c));
    }
    if k < 2 {
        return Err(AnalysisError::DomainError(k as f64));
    }
    let p = delta_lp_problem(c, k);
    let s = simplex_solve(&p)?;
    Ok(DeltaLp {
        c,
        k,
        delta: s.x[0],
        lp_tau: s.x[1],
        lp_rho: s.x[2],
        sigma: s.x[3..].to_vec(),
        primal_residual: p.max_violation(&s.x),
        dual_residual: p.dual_gap(&s.duals, s.objective),
        duals: s.duals,
    })
}

/// A named exponent with its inputs and a residual-style certificate.
#[derive(Debug, Clone, Serialize)]
pub struct ExponentReport {
    pub name: String,
    pub value: f64,
    pub inputs: serde_json::Value,
    pub certificate: serde_json::Value,
}

impl ExponentReport {
    pub fn new(
        name: &str,
        value: f64,
        inputs: serde_json::Value,
        certificate: serde_json::Value,
    ) -> Self {
        ExponentReport {
            name: name.to_string(),
            value,
            inputs,
            certificate,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_values() {
        assert!((branching_number(&[1.0, 1.0]).unwrap() - 2.0).abs() < 1e-12);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((branching_number(&[1.0, 2.0]).unwrap() - phi).abs() < 1e-12);
        assert!((branching_number(&[1.0, 3.0]).unwrap() - 1.465571).abs() < 1e-6);
        assert_eq!(branching_number(&[1.0]).unwrap(), 1.0);
        assert_eq!(branching_number(&[]), Err(AnalysisError::InvalidVector));
        for j in 1..10 {
            let v = ms_vector(j);
            let t = branching_number(&v).unwrap();
            assert!(branching_residual(&v, t) < 1e-9);
        }
    }

    #[test]
    fn hirsch_b() {
        let l = branching_number(&[1.0, 2.0]).unwrap();
        assert!((hirsch_exponent(l).unwrap() - 2.2707).abs() < 1e-3);
        let mut prev = 0.0;
        for j in 2..8 {
            let b = hirsch_exponent(branching_number(&ms_vector(j)).unwrap()).unwrap();
            assert!(b > prev);
            prev = b;
        }
        assert!(hirsch_exponent(2.0 - 1e-9).unwrap() > 1e6);
        assert!(hirsch_exponent(2.0).is_err());
        assert!(hirsch_exponent(1.0).is_err());
    }

    #[test]
    fn floor_limit_identity() {
        for &l in &[1.1f64, 1.3, 1.618, 1.839, 1.95] {
            for &e in &[1e-6, 1e-3, 0.1, 0.5] {
                let lhs = l.powf(floor_limit(l, e));
                let rhs = (floor_constant(l) / e).powf(hirsch_exponent(l).unwrap());
                assert!((lhs / rhs - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn rejection_enumeration_balance() {
        assert!((warmup_exponent() - 0.79248).abs() < 1e-5);
        assert!((threesat_exponent() - 0.935785).abs() < 1e-6);
        assert!((balanced_exponent(3.0, 4.0) - warmup_exponent()).abs() < 1e-9);
        assert!((balanced_exponent(7.0, 8.0) - threesat_exponent()).abs() < 1e-9);
    }

    #[test]
    fn vc_exponent_values() {
        assert!((vc_exponent(1.4656, 0.1).unwrap() - 0.1990).abs() < 1e-3);
        let rho = 1.4656f64;
        for &r in &[0.05, 0.2, 0.4, 0.46, 0.47, 0.6] {
            let e = vc_exponent(rho, r).unwrap();
            assert_eq!(e < 1.0, r < 1.0 / (rho * rho));
        }
        assert!(vc_exponent(rho, 1e-12).unwrap() < 0.02);
        assert!(vc_exponent(rho, 0.7).is_err());
    }

    #[test]
    fn entropy_basics() {
        assert_eq!(entropy(0.5).unwrap(), 1.0);
        assert_eq!(entropy(0.0).unwrap(), 0.0);
        assert_eq!(entropy(1.0).unwrap(), 0.0);
        assert!((entropy_inv(1.0).unwrap() - 0.5).abs() < 1e-12);
        for i in 0..=50 {
            let x = i as f64 / 100.0;
            assert!((entropy_inv(entropy(x).unwrap()).unwrap() - x).abs() < 1e-9);
        }
        assert!(entropy(1.5).is_err());
    }

    #[test]
    fn schoening_values() {
        assert!((schoening_exponent(3, 0.0).unwrap() - (4.0f64 / 3.0).log2()).abs() < 1e-6);
        // 2^{(1−H(1/k))}(k−1)^{1/k} = 2(k−1)/k
        for k in 3..7 {
            let e = schoening_exponent(k, 0.0).unwrap();
            let kf = k as f64;
            assert!((2f64.powf(e) - 2.0 * (kf - 1.0) / kf).abs() < 1e-9);
        }
        assert!((schoening_exponent(3, 0.99).unwrap() - 0.01).abs() < 1e-12);
        // At the crossover both per-variable exponents agree.
        let x = schoening_crossover();
        let d = 1.0 + x.log2();
        let gap = schoening_exponent(3, d).unwrap() - (1.0 - d) * threesat_exponent();
        assert!(gap.abs() < 1e-9);
        assert!((x - 0.90538).abs() < 1e-4, "crossover {x}");
    }

    #[test]
    fn delta_lp_optimum() {
        let s = delta_lp(1.238, 7).unwrap();
        assert!((s.delta - 0.61618).abs() < 1e-4, "{}", s.delta);
        assert!(s.primal_residual < 1e-9 && s.dual_residual < 1e-9);
        assert!(s.lp_tau.abs() < 1e-12 && s.lp_rho.abs() < 1e-12);
        let k8 = delta_lp(WAHLSTROM_C, 8).unwrap();
        let k7 = delta_lp(WAHLSTROM_C, 7).unwrap();
        assert!((k8.delta - k7.delta).abs() < 1e-6);
    }
}
