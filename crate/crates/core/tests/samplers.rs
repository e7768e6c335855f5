use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use epsat::families::build_family_sequence;
use epsat::oracle::{brute_count_u64, gen_random_ksat, InstanceSpec};
use epsat::sampler2::{
    family_rejection_sample, sample_solution, warmup_sample, SampleError, Sampler2, SamplerConfig,
    Strategy,
};
use epsat::twosat::TwoSatError;
use epsat::CnfFormula;

fn planted_2cnf(n: u32, m: usize, seed: u64) -> CnfFormula {
    gen_random_ksat(&InstanceSpec {
        n,
        m,
        k: 2,
        seed,
        planted: true,
    })
    .unwrap()
    .formula
}

#[test]
fn rejections_concentrate_near_pool_ratio() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut checked = 0;
    while checked < 5 {
        let f = planted_2cnf(12, 20, rng.gen());
        let sampler = Sampler2::new(&f, 7).unwrap();
        let pool = sampler.pool().count().to_f64().unwrap();
        let p = brute_count_u64(&f).unwrap() as f64 / pool;
        if p > 0.5 {
            continue;
        }
        checked += 1;
        let runs = 1000;
        let mean = (0..runs)
            .map(|_| sampler.sample_rejection(&mut rng, None).unwrap().rejections as f64)
            .sum::<f64>()
            / runs as f64;
        // geometric number of failures before the first success
        let expected = 1.0 / p - 1.0;
        let sd = ((1.0 - p) / (p * p)).sqrt() / (runs as f64).sqrt();
        assert!((mean - expected).abs() <= 3.0 * sd, "mean {mean}, expected {expected} ± {sd}");
    }
}

#[test]
fn samples_are_seed_deterministic() {
    let f = planted_2cnf(14, 22, 5);
    for strategy in [
        Strategy::Auto,
        Strategy::Rejection,
        Strategy::Enumeration(2),
        Strategy::Warmup,
    ] {
        let cfg = SamplerConfig {
            strategy,
            ..SamplerConfig::default()
        };
        let a = sample_solution(&f, &cfg, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = sample_solution(&f, &cfg, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b, "{strategy:?}");
        assert!(f.is_satisfied_by(&a.assignment));
    }
}

#[test]
fn error_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let wide = CnfFormula::from_dimacs_clauses(3, &[&[1, 2, 3]]).unwrap();
    assert_eq!(
        warmup_sample(&wide, &mut rng).unwrap_err(),
        SampleError::TwoSat(TwoSatError::NotTwoCnf(3))
    );

    let unsat = CnfFormula::from_dimacs_clauses(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]).unwrap();
    let fam = build_family_sequence(&unsat, 3).unwrap().pop().unwrap();
    assert_eq!(
        family_rejection_sample(&unsat, &fam, &mut rng, None).unwrap_err(),
        SampleError::Unsatisfiable
    );
    for strategy in [Strategy::Auto, Strategy::Enumeration(1), Strategy::Warmup] {
        let cfg = SamplerConfig {
            strategy,
            ..SamplerConfig::default()
        };
        assert_eq!(
            sample_solution(&unsat, &cfg, &mut rng).unwrap_err(),
            SampleError::Unsatisfiable,
            "{strategy:?}"
        );
    }

    let f = planted_2cnf(10, 14, 2);
    let cfg = SamplerConfig {
        k: 3,
        strategy: Strategy::Enumeration(4),
        max_work: None,
    };
    assert_eq!(
        sample_solution(&f, &cfg, &mut rng).unwrap_err(),
        SampleError::InvalidLevel { level: 4, k: 3 }
    );
}

#[test]
fn racer_accounting() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..30 {
        let f = planted_2cnf(14, rng.gen_range(6..30), rng.gen());
        let mut sampler = Sampler2::new(&f, 7).unwrap();
        let out = sampler.sample_auto(&mut rng, None).unwrap();
        assert_eq!(out.per_strategy.len(), 8);
        assert!(out.report.work >= out.per_strategy.iter().sum::<u64>());
        assert!(f.is_satisfied_by(&out.report.assignment));
    }
}
