use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use epsat::{parse_dimacs, PartialAssignment};

fn epsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epsat"))
        .args(args)
        .env_remove("EPSAT_SEED")
        .output()
        .expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

fn generate(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["gen"];
    full.extend(args);
    full.extend(["--output", &path]);
    assert!(epsat(&full).status.success());
    path
}

fn bits_to_assignment(bits: &str) -> PartialAssignment {
    PartialAssignment::from_bits(&bits.chars().map(|c| c == '1').collect::<Vec<_>>())
}

#[test]
fn sample_is_deterministic_and_satisfying() {
    let dir = TempDir::new().unwrap();
    let f = generate(dir.path(), "f.cnf", &["cnf", "--n", "16", "--m", "24", "--planted", "--seed", "4"]);
    let formula = parse_dimacs(&std::fs::read_to_string(&f).unwrap()).unwrap();
    for strategy in ["auto", "rejection", "warmup", "family-enum=2"] {
        let args = ["sample", "--input", &f, "--n-samples", "3", "--seed", "7", "--strategy", strategy];
        let (a, b) = (epsat(&args), epsat(&args));
        assert_eq!(a.status.code(), Some(0), "{strategy}");
        assert_eq!(a.stdout, b.stdout, "{strategy}");
        let lines = json_lines(&a);
        assert_eq!(lines.len(), 3);
        for line in lines {
            assert_eq!(line["seed"], 7);
            let bits = line["assignment"].as_str().unwrap();
            assert!(formula.is_satisfied_by(&bits_to_assignment(bits)), "{strategy}");
        }
    }
}

#[test]
fn seed_comes_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let f = generate(dir.path(), "f.cnf", &["cnf", "--n", "12", "--m", "10", "--seed", "1"]);
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_epsat"))
            .args(["sample", "--input", &f, "--n-samples", "2"])
            .env("EPSAT_SEED", seed)
            .output()
            .unwrap()
    };
    let out = run("99");
    assert_eq!(json_lines(&out)[0]["seed"], 99);
    assert_eq!(out.stdout, run("99").stdout);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let unsat = dir.path().join("u.cnf");
    std::fs::write(&unsat, "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n").unwrap();
    let unsat = unsat.to_string_lossy();
    let out = epsat(&["sample", "--input", &unsat]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_lines(&out)[0]["verdict"], "unsatisfiable");

    for method in ["bfs-ms", "bfs-basic", "prop33", "aspvall"] {
        assert_eq!(epsat(&["solve", "--input", &unsat, "--method", method]).status.code(), Some(1), "{method}");
    }
    let out = epsat(&["solve", "--input", &unsat, "--method", "schoening", "--max-restarts", "20"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json_lines(&out)[0]["verdict"], "unknown");

    let garbage = dir.path().join("bad.cnf");
    std::fs::write(&garbage, "p cnf 2 1\n1 x 0\n").unwrap();
    assert_eq!(epsat(&["count", "--input", &garbage.to_string_lossy()]).status.code(), Some(3));
    assert_eq!(epsat(&["sample", "--input", "/nonexistent.cnf"]).status.code(), Some(3));

    let wide = generate(dir.path(), "w.cnf", &["cnf", "--n", "8", "--m", "6", "--k", "3", "--seed", "2"]);
    assert_eq!(epsat(&["sample", "--input", &wide]).status.code(), Some(3));
    assert_eq!(epsat(&["sample", "--input", &wide, "--warn-width"]).status.code(), Some(0));

    let big = generate(dir.path(), "big.cnf", &["cnf", "--n", "40", "--m", "30", "--seed", "2"]);
    let out = epsat(&["sample", "--input", &big, "--strategy", "rejection", "--max-work", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(epsat(&["count", "--input", &big, "--method", "brute"]).status.code(), Some(3));
}

#[test]
fn analyze_values() {
    let out = epsat(&["analyze", "tau", "1", "2"]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["name"], "tau");
    assert!((v["value"].as_f64().unwrap() - 1.618034).abs() < 1e-6);

    let v = &json_lines(&epsat(&["analyze", "hirschB"]))[0];
    assert!((v["value"].as_f64().unwrap() - 2.2707).abs() < 1e-3);

    let v = &json_lines(&epsat(&["analyze", "delta", "--c", "1.2377", "--k", "7"]))[0];
    assert_eq!(v["certificate"]["sigma"].as_array().unwrap().len(), 7);
    assert_eq!(v["certificate"]["lp_tau"], 0.0);

    let v = &json_lines(&epsat(&["analyze", "schoening-exp", "--k", "3", "--delta", "0"]))[0];
    assert!((v["value"].as_f64().unwrap() - (4.0f64 / 3.0).log2()).abs() < 1e-6);

    assert_eq!(epsat(&["analyze", "vcexp", "--ratio", "0.9"]).status.code(), Some(3));
}

#[test]
fn branch_counter_matches_brute_force() {
    let dir = TempDir::new().unwrap();
    for seed in 0..15u64 {
        let m = (4 + 2 * seed).to_string();
        let seed = seed.to_string();
        let f = generate(dir.path(), "f.cnf", &["cnf", "--n", "14", "--m", &m, "--leq", "--seed", &seed]);
        let count = |method: &str| json_lines(&epsat(&["count", "--input", &f, "--method", method]))[0]["count"].clone();
        assert_eq!(count("brute"), count("branch2sat"), "seed {seed}");
    }
}

#[test]
fn vertex_cover_modes() {
    let dir = TempDir::new().unwrap();
    let g = generate(dir.path(), "g.txt", &["graph", "--n", "12", "--p", "0.3", "--seed", "5"]);
    let min = &json_lines(&epsat(&["vc", "--input", &g]))[0];
    let opt = min["size"].as_u64().unwrap() as usize;
    let k = opt.to_string();
    let below = (opt - 1).to_string();
    assert_eq!(epsat(&["vc", "--input", &g, "--k", &k]).status.code(), Some(0));
    assert_eq!(epsat(&["vc", "--input", &g, "--k", &below]).status.code(), Some(1));
    let out = epsat(&["vc", "--input", &g, "--k", &k, "--epsilon", "1e-9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json_lines(&out)[0]["cover"].as_array().unwrap().len() <= opt);
    assert_eq!(epsat(&["vc", "--input", &g, "--epsilon", "0.5"]).status.code(), Some(3));
}

#[test]
fn gen_and_bench_are_deterministic() {
    let a = epsat(&["gen", "cnf", "--n", "10", "--m", "20", "--k", "3", "--seed", "8"]);
    assert_eq!(a.stdout, epsat(&["gen", "cnf", "--n", "10", "--m", "20", "--k", "3", "--seed", "8"]).stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("c seed 8"));

    let args = ["bench", "--n", "8", "--clause-counts", "4,8", "--instances", "2", "--draws", "4", "--seed", "3"];
    let out = epsat(&args);
    assert!(out.status.success());
    assert_eq!(out.stdout, epsat(&args).stdout);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().next(), Some("# seed 3"));
    assert_eq!(text.lines().count(), 2 + 4);
}
