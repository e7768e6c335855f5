//! CNF data model: literals, clauses, formulas and partial assignments,
//! together with DIMACS I/O, restriction `F^[β]`, evaluation and unit clause
//! reduction.
//!
//! Clauses are sets: literals are kept sorted and deduplicated. Formulas are
//! sets of clauses, but the first-occurrence order of clauses is preserved
//! because the greedy constructions downstream break ties by input order.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("malformed DIMACS header: {0}")]
    MalformedHeader(String),
    #[error("literal {literal} out of range for {num_vars} variables")]
    LiteralOutOfRange { literal: i64, num_vars: u32 },
    #[error("clause contains both x{0} and its negation")]
    TautologicalClause(u32),
    #[error("malformed DIMACS body: {0}")]
    MalformedBody(String),
    #[error("assignment leaves variable x{0} unassigned")]
    IncompleteAssignment(u32),
}

/// A literal `x` or `x̄`, packed as `2·var + negated`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(u32);

impl Literal {
    pub fn new(var: u32, positive: bool) -> Self {
        assert!(var >= 1, "variables are 1-indexed");
        Literal(2 * var + u32::from(!positive))
    }

    pub fn positive(var: u32) -> Self {
        Self::new(var, true)
    }

    pub fn negative(var: u32) -> Self {
        Self::new(var, false)
    }

    /// Parses a nonzero DIMACS integer.
    pub fn from_dimacs(lit: i32) -> Self {
        assert!(lit != 0, "0 is the DIMACS clause terminator, not a literal");
        Self::new(lit.unsigned_abs(), lit > 0)
    }

    pub fn to_dimacs(self) -> i32 {
        let v = self.var() as i32;
        if self.is_positive() {
            v
        } else {
            -v
        }
    }

    #[inline]
    pub fn var(self) -> u32 {
        self.0 >> 1
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    #[inline]
    pub fn negate(self) -> Self {
        Literal(self.0 ^ 1)
    }

    /// Value of the literal when its variable is set to `value`.
    #[inline]
    pub fn eval(self, value: bool) -> bool {
        value == self.is_positive()
    }

    /// The bit its variable must take for this literal to be true.
    #[inline]
    pub fn satisfying_value(self) -> bool {
        self.is_positive()
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.var())
        } else {
            write!(f, "¬x{}", self.var())
        }
    }
}

/// A set of literals without complementary pairs. The empty clause `□` is
/// representable and unsatisfiable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Clause {
    lits: Vec<Literal>,
}

impl Clause {
    pub fn new(lits: impl IntoIterator<Item = Literal>) -> Result<Self, CnfError> {
        let mut lits: Vec<Literal> = lits.into_iter().collect();
        lits.sort_unstable();
        lits.dedup();
        if let Some(w) = lits.windows(2).find(|w| w[0].var() == w[1].var()) {
            return Err(CnfError::TautologicalClause(w[0].var()));
        }
        Ok(Clause { lits })
    }

    pub fn from_dimacs(lits: &[i32]) -> Result<Self, CnfError> {
        Self::new(lits.iter().map(|&l| Literal::from_dimacs(l)))
    }

    /// Builds a clause from literals already known to be sorted, distinct and
    /// non-complementary.
    pub(crate) fn from_sorted_unchecked(lits: Vec<Literal>) -> Self {
        debug_assert!(lits.windows(2).all(|w| w[0].var() < w[1].var()));
        Clause { lits }
    }

    pub fn empty() -> Self {
        Clause { lits: Vec::new() }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.lits.len() == 1
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.lits.iter().map(|l| l.var())
    }

    pub fn contains_var(&self, var: u32) -> bool {
        self.lits.iter().any(|l| l.var() == var)
    }

    /// The literal of `var` in this clause, if any.
    pub fn literal_of(&self, var: u32) -> Option<Literal> {
        self.lits.iter().copied().find(|l| l.var() == var)
    }

    pub fn contains(&self, lit: Literal) -> bool {
        self.lits.binary_search(&lit).is_ok()
    }

    /// Satisfaction status under a partial assignment: `Some(true)` if some
    /// literal is true, `Some(false)` if every literal is false, `None` otherwise.
    pub fn status(&self, a: &PartialAssignment) -> Option<bool> {
        let mut undecided = false;
        for &l in &self.lits {
            match a.get(l.var()) {
                Some(v) if l.eval(v) => return Some(true),
                Some(_) => {}
                None => undecided = true,
            }
        }
        if undecided {
            None
        } else {
            Some(false)
        }
    }

    pub fn is_satisfied_by(&self, a: &PartialAssignment) -> bool {
        self.status(a) == Some(true)
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.lits.iter()).finish()
    }
}

/// A CNF formula over variables `1..=num_vars`.
///
/// Equality is set equality of the clause sets (clause order is ignored).
#[derive(Clone, Default)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: u32) -> Self {
        CnfFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    /// Collects clauses, collapsing duplicates and keeping first occurrences
    /// in order.
    pub fn from_clauses(
        num_vars: u32,
        clauses: impl IntoIterator<Item = Clause>,
    ) -> Result<Self, CnfError> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for c in clauses {
            if let Some(l) = c.lits.iter().find(|l| l.var() > num_vars) {
                return Err(CnfError::LiteralOutOfRange {
                    literal: i64::from(l.to_dimacs()),
                    num_vars,
                });
            }
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        Ok(CnfFormula {
            num_vars,
            clauses: out,
        })
    }

    /// Convenience constructor from DIMACS-style integer clauses.
    pub fn from_dimacs_clauses(num_vars: u32, clauses: &[&[i32]]) -> Result<Self, CnfError> {
        let parsed = clauses
            .iter()
            .map(|c| Clause::from_dimacs(c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_clauses(num_vars, parsed)
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// `true` for the empty formula `{}`.
    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn has_empty_clause(&self) -> bool {
        self.clauses.iter().any(Clause::is_empty)
    }

    pub fn max_width(&self) -> usize {
        self.clauses.iter().map(Clause::len).max().unwrap_or(0)
    }

    pub fn min_width(&self) -> usize {
        self.clauses.iter().map(Clause::len).min().unwrap_or(0)
    }

    /// `vbl(F)`, sorted ascending.
    pub fn vbl(&self) -> Vec<u32> {
        let mut seen = vec![false; self.num_vars as usize + 1];
        for c in &self.clauses {
            for v in c.vars() {
                seen[v as usize] = true;
            }
        }
        (1..=self.num_vars).filter(|&v| seen[v as usize]).collect()
    }

    /// For each variable, the indices of the clauses containing it, ascending.
    pub fn occurrence_lists(&self) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); self.num_vars as usize + 1];
        for (i, c) in self.clauses.iter().enumerate() {
            for v in c.vars() {
                occ[v as usize].push(i);
            }
        }
        occ
    }

    /// The same clauses over a (larger) variable range.
    pub fn with_num_vars(&self, num_vars: u32) -> Result<Self, CnfError> {
        Self::from_clauses(num_vars, self.clauses.iter().cloned())
    }

    /// Clauses sorted, for order-insensitive comparison and hashing.
    pub fn canonical_clauses(&self) -> Vec<Clause> {
        let mut v = self.clauses.clone();
        v.sort();
        v
    }

    /// `F^[β]`: removes every clause satisfied by `β` and deletes the
    /// literals `β` sets to 0 from the rest. The result keeps the variable
    /// numbering; the assigned variables simply no longer occur.
    pub fn restrict(&self, beta: &PartialAssignment) -> CnfFormula {
        let mut seen = HashSet::with_capacity(self.clauses.len());
        let mut out = Vec::with_capacity(self.clauses.len());
        'clauses: for c in &self.clauses {
            let mut kept = Vec::with_capacity(c.len());
            for &l in &c.lits {
                match beta.get(l.var()) {
                    Some(v) if l.eval(v) => continue 'clauses,
                    Some(_) => {}
                    None => kept.push(l),
                }
            }
            let clause = Clause::from_sorted_unchecked(kept);
            if seen.insert(clause.clone()) {
                out.push(clause);
            }
        }
        CnfFormula {
            num_vars: self.num_vars,
            clauses: out,
        }
    }

    /// Unit clause reduction. On success the residual formula contains
    /// neither unit clauses nor `□`, and the returned assignment records every
    /// forced variable.
    pub fn unit_propagate(&self) -> Result<(CnfFormula, PartialAssignment), Conflict> {
        let mut forced = PartialAssignment::new(self.num_vars);
        let mut current = self.clone();
        loop {
            if current.has_empty_clause() {
                return Err(Conflict);
            }
            let mut progressed = false;
            for c in &current.clauses {
                if let [l] = c.lits[..] {
                    match forced.get(l.var()) {
                        Some(v) if v != l.satisfying_value() => return Err(Conflict),
                        Some(_) => {}
                        None => {
                            forced.set(l.var(), l.satisfying_value());
                            progressed = true;
                        }
                    }
                }
            }
            if !progressed {
                return Ok((current, forced));
            }
            current = current.restrict(&forced);
        }
    }

    /// Evaluates the formula under a full assignment.
    pub fn evaluate(&self, alpha: &PartialAssignment) -> Result<bool, CnfError> {
        if let Some(v) = (1..=self.num_vars).find(|&v| alpha.get(v).is_none()) {
            return Err(CnfError::IncompleteAssignment(v));
        }
        Ok(self.is_satisfied_by(alpha))
    }

    /// `true` iff every clause has a true literal under `alpha`.
    pub fn is_satisfied_by(&self, alpha: &PartialAssignment) -> bool {
        self.clauses.iter().all(|c| c.is_satisfied_by(alpha))
    }
}

impl PartialEq for CnfFormula {
    fn eq(&self, other: &Self) -> bool {
        self.num_vars == other.num_vars && self.canonical_clauses() == other.canonical_clauses()
    }
}

impl Eq for CnfFormula {}

impl fmt::Debug for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CnfFormula(n={}, ", self.num_vars)?;
        f.debug_list().entries(self.clauses.iter()).finish()?;
        write!(f, ")")
    }
}

/// Unit propagation derived the empty clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("unit propagation derived the empty clause")]
pub struct Conflict;

/// `β : W → {0,1}` for some `W ⊆ {1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PartialAssignment {
    values: Vec<Option<bool>>,
}

impl PartialAssignment {
    pub fn new(num_vars: u32) -> Self {
        PartialAssignment {
            values: vec![None; num_vars as usize],
        }
    }

    /// A full assignment from bits; `bits[i]` is the value of `x_{i+1}`.
    pub fn from_bits(bits: &[bool]) -> Self {
        PartialAssignment {
            values: bits.iter().map(|&b| Some(b)).collect(),
        }
    }

    /// Full assignment with `x1` as the most significant of `num_vars` bits.
    pub fn from_index(num_vars: u32, index: u64) -> Self {
        let n = num_vars as usize;
        PartialAssignment {
            values: (0..n).map(|i| Some(index >> (n - 1 - i) & 1 == 1)).collect(),
        }
    }

    pub fn num_vars(&self) -> u32 {
        self.values.len() as u32
    }

    #[inline]
    pub fn get(&self, var: u32) -> Option<bool> {
        self.values.get(var as usize - 1).copied().flatten()
    }

    #[inline]
    pub fn set(&mut self, var: u32, value: bool) {
        self.values[var as usize - 1] = Some(value);
    }

    pub fn unset(&mut self, var: u32) {
        self.values[var as usize - 1] = None;
    }

    pub fn with(mut self, var: u32, value: bool) -> Self {
        self.set(var, value);
        self
    }

    /// Sets `lit` true.
    pub fn assign_literal(&mut self, lit: Literal) {
        self.set(lit.var(), lit.satisfying_value());
    }

    /// Assigned variables, ascending.
    pub fn domain(&self) -> impl Iterator<Item = u32> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_some())
            .map(|(i, _)| i as u32 + 1)
    }

    pub fn len(&self) -> usize {
        self.values.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    pub fn is_full(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|b| (i as u32 + 1, b)))
    }

    /// Copies every binding of `other` into `self` (other wins on overlap).
    pub fn merge(&mut self, other: &PartialAssignment) {
        for (v, b) in other.iter() {
            self.set(v, b);
        }
    }

    /// Assigns `value` to every unassigned variable.
    pub fn fill(&mut self, value: bool) {
        for v in &mut self.values {
            v.get_or_insert(value);
        }
    }

    /// Bits of a full assignment; panics on unassigned variables.
    pub fn to_bits(&self) -> Vec<bool> {
        self.values
            .iter()
            .map(|v| v.expect("full assignment"))
            .collect()
    }

    /// `0`/`1` per variable in order, `-` for unassigned ones.
    pub fn to_bit_string(&self) -> String {
        self.values
            .iter()
            .map(|v| match v {
                Some(true) => '1',
                Some(false) => '0',
                None => '-',
            })
            .collect()
    }

    /// Index of a full assignment with `x1` as the most significant bit.
    pub fn to_index(&self) -> u64 {
        self.values
            .iter()
            .fold(0u64, |acc, v| (acc << 1) | u64::from(v.expect("full assignment")))
    }
}

impl fmt::Debug for PartialAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "β[{}]", self.to_bit_string())
    }
}

/// Options for [`parse_dimacs_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Drop tautological clauses with a warning instead of failing.
    pub lenient_tautologies: bool,
}

/// Parses DIMACS CNF. Clause-count mismatches are logged, not rejected.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    parse_dimacs_with(text, ParseOptions::default()).map(|(f, _)| f)
}

/// Parses DIMACS CNF and returns the non-fatal warnings alongside the formula.
pub fn parse_dimacs_with(
    text: &str,
    opts: ParseOptions,
) -> Result<(CnfFormula, Vec<String>), CnfError> {
    let mut warnings = Vec::new();
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(CnfError::MalformedHeader(format!(
                    "second header on line {}",
                    lineno + 1
                )));
            }
            header = Some(parse_header(line)?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(CnfError::MalformedHeader(format!(
                "clause data before header on line {}",
                lineno + 1
            )));
        };
        for tok in line.split_whitespace() {
            let lit: i64 = tok.parse().map_err(|_| {
                CnfError::MalformedBody(format!("bad token {tok:?} on line {}", lineno + 1))
            })?;
            if lit == 0 {
                push_clause(&mut clauses, &mut current, opts, &mut warnings)?;
                continue;
            }
            if lit.unsigned_abs() > u64::from(num_vars) {
                return Err(CnfError::LiteralOutOfRange {
                    literal: lit,
                    num_vars,
                });
            }
            current.push(lit as i32);
        }
    }

    let Some((num_vars, declared)) = header else {
        return Err(CnfError::MalformedHeader("missing 'p cnf' header".into()));
    };
    if !current.is_empty() {
        warnings.push("last clause is not terminated by 0".into());
        push_clause(&mut clauses, &mut current, opts, &mut warnings)?;
    }
    if clauses.len() != declared {
        warnings.push(format!(
            "header declares {declared} clauses, found {}",
            clauses.len()
        ));
    }
    for w in &warnings {
        log::warn!("{w}");
    }
    Ok((CnfFormula::from_clauses(num_vars, clauses)?, warnings))
}

fn parse_header(line: &str) -> Result<(u32, usize), CnfError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
        return Err(CnfError::MalformedHeader(line.to_string()));
    }
    let n = parts[2]
        .parse()
        .map_err(|_| CnfError::MalformedHeader(line.to_string()))?;
    let m = parts[3]
        .parse()
        .map_err(|_| CnfError::MalformedHeader(line.to_string()))?;
    Ok((n, m))
}

fn push_clause(
    clauses: &mut Vec<Clause>,
    current: &mut Vec<i32>,
    opts: ParseOptions,
    warnings: &mut Vec<String>,
) -> Result<(), CnfError> {
    match Clause::from_dimacs(current) {
        Ok(c) => clauses.push(c),
        Err(CnfError::TautologicalClause(v)) if opts.lenient_tautologies => {
            warnings.push(format!("dropped tautological clause on x{v}"));
        }
        Err(e) => return Err(e),
    }
    current.clear();
    Ok(())
}

/// Writes DIMACS CNF, one clause per line.
pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for c in f.clauses() {
        for l in c.literals() {
            out.push_str(&l.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(n: u32, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(n, clauses).unwrap()
    }

    #[test]
    fn literal_negation_is_involution() {
        for lit in [1, -1, 7, -42] {
            let l = Literal::from_dimacs(lit);
            assert_eq!(l.negate().negate(), l);
            assert_eq!(l.negate().to_dimacs(), -lit);
        }
    }

    #[test]
    fn parse_simple() {
        let f = parse_dimacs("p cnf 2 1\n1 -2 0").unwrap();
        assert_eq!(f, cnf(2, &[&[1, -2]]));
    }

    #[test]
    fn parse_empty_formula() {
        let f = parse_dimacs("p cnf 3 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert!(f.is_empty());
    }

    #[test]
    fn parse_rejects_tautology() {
        assert_eq!(
            parse_dimacs("p cnf 1 1\n1 -1 0"),
            Err(CnfError::TautologicalClause(1))
        );
        let (f, warnings) = parse_dimacs_with(
            "p cnf 2 2\n1 -1 0\n2 0\n",
            ParseOptions {
                lenient_tautologies: true,
            },
        )
        .unwrap();
        assert_eq!(f, cnf(2, &[&[2]]));
        assert!(!warnings.is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_dimacs("1 2 0\n"),
            Err(CnfError::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_dimacs("p dnf 2 1\n1 2 0\n"),
            Err(CnfError::MalformedHeader(_))
        ));
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 3 0\n"),
            Err(CnfError::LiteralOutOfRange {
                literal: 3,
                num_vars: 2
            })
        );
    }

    #[test]
    fn parse_count_mismatch_is_warning() {
        let (f, w) = parse_dimacs_with("c hi\np cnf 3 5\n1 2 0 -3\n 1 0\n", ParseOptions::default())
            .unwrap();
        assert_eq!(f, cnf(3, &[&[1, 2], &[-3, 1]]));
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn duplicates_collapse() {
        let f = cnf(2, &[&[1, 2], &[2, 1, 1], &[1, 2]]);
        assert_eq!(f.num_clauses(), 1);
        assert_eq!(f.clauses()[0].len(), 2);
    }

    #[test]
    fn write_format() {
        assert_eq!(write_dimacs(&CnfFormula::new(0)), "p cnf 0 0\n");
        let f = cnf(2, &[&[-2]]);
        assert!(write_dimacs(&f).lines().any(|l| l == "-2 0"));
    }

    #[test]
    fn restrict_examples() {
        let f = cnf(2, &[&[1, 2]]);
        assert!(f
            .restrict(&PartialAssignment::new(2).with(1, true))
            .is_empty());
        assert_eq!(
            f.restrict(&PartialAssignment::new(2).with(1, false)),
            cnf(2, &[&[2]])
        );
        let g = cnf(3, &[&[1, 2], &[-1, 3]]);
        assert_eq!(
            g.restrict(&PartialAssignment::new(3).with(1, false)),
            cnf(3, &[&[2]])
        );
    }

    #[test]
    fn restrict_can_produce_empty_clause() {
        let f = cnf(1, &[&[1]]);
        let r = f.restrict(&PartialAssignment::new(1).with(1, false));
        assert!(r.has_empty_clause());
    }

    #[test]
    fn unit_propagation_examples() {
        let (res, forced) = cnf(2, &[&[1], &[-1, 2]]).unit_propagate().unwrap();
        assert!(res.is_empty());
        assert_eq!(forced.get(1), Some(true));
        assert_eq!(forced.get(2), Some(true));

        assert_eq!(cnf(1, &[&[1], &[-1]]).unit_propagate(), Err(Conflict));

        let f = cnf(2, &[&[1, 2]]);
        let (res, forced) = f.unit_propagate().unwrap();
        assert_eq!(res, f);
        assert!(forced.is_empty());
    }

    #[test]
    fn evaluate_examples() {
        let f = cnf(2, &[&[1, 2]]);
        assert_eq!(f.evaluate(&PartialAssignment::from_bits(&[false, true])), Ok(true));
        assert_eq!(f.evaluate(&PartialAssignment::from_bits(&[false, false])), Ok(false));
        assert_eq!(
            f.evaluate(&PartialAssignment::new(2).with(1, true)),
            Err(CnfError::IncompleteAssignment(2))
        );
        let empty = CnfFormula::new(3);
        assert_eq!(
            empty.evaluate(&PartialAssignment::from_bits(&[true, false, true])),
            Ok(true)
        );
    }

    #[test]
    fn index_round_trip() {
        let a = PartialAssignment::from_index(5, 0b10110);
        assert_eq!(a.to_bit_string(), "10110");
        assert_eq!(a.to_index(), 0b10110);
    }
}
