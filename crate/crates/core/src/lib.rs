//! Solution-density parameterized algorithms for satisfiability and vertex
//! cover.
//!
//! The crate is organized bottom-up:
//!
//! * [`cnf`]: formulas, partial assignments, DIMACS I/O, restriction and
//!   unit propagation;
//! * [`oracle`]: brute-force counting and sampling, instance generators;
//! * [`twosat`]: 2-SAT decision, an exact #2-SAT counter and exact samplers;
//! * [`families`]: independent families of stars and triangles;
//! * [`sampler2`]: exactly uniform 2-CNF samplers and the racer;
//! * [`detsearch`]: breadth-first branching search for k-SAT;
//! * [`vcover`]: vertex cover under a density promise;
//! * [`threesat`]: randomized 3-SAT algorithms;
//! * [`analysis`]: the runtime exponents, including a small simplex solver;
//! * [`bench`]: work counters against measured density on a generated corpus.

pub mod analysis;
pub mod bench;
pub mod cnf;
pub mod detsearch;
pub mod families;
pub mod oracle;
pub mod race;
pub mod sampler2;
pub mod threesat;
pub mod twosat;
pub mod util;
pub mod vcover;

pub use cnf::{parse_dimacs, write_dimacs, Clause, CnfError, CnfFormula, Literal, PartialAssignment};
