//! Independent families of stars and triangles over a (≤2)-CNF.
//!
//! `M_0` is a 1-maximal set of variable-disjoint clauses. `M_1` upgrades its
//! 1-stars into non-monotone 2-stars or triangles, and each `M_i` for
//! `i ≥ 2` grows the monotone `(i−1)`-stars of `M_{i−1}` into monotone
//! `i`-stars. Every greedy scan follows input clause order, and members keep
//! their position across levels, so member `j` of `M_i` extends member `j`
//! of `M_{i−1}`.
//!
//! Unit clauses are admitted as frozen one-variable 1-stars ("unit members")
//! whose local pool is 1 of 2 assignments. They are never upgraded.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cnf::{Clause, CnfFormula, Literal, PartialAssignment};
use crate::util::pow2;

pub const DEFAULT_DEPTH: usize = 7;
pub const MAX_DEPTH: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("formula has a clause of width {0} > 2")]
    NotTwoCnf(usize),
    #[error("family depth {0} outside 2..={MAX_DEPTH}")]
    InvalidDepth(usize),
    #[error("construction invariant violated: {0}")]
    ConstructionViolation(String),
}

/// `i` clauses pairwise meeting exactly in the center variable. A two-variable
/// 1-star records both of its variables as centers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    clauses: Vec<Clause>,
    centers: Vec<u32>,
}

impl Star {
    fn one(clause: Clause) -> Self {
        let centers = clause.vars().collect();
        Star {
            clauses: vec![clause],
            centers,
        }
    }

    fn two(existing: Clause, added: Clause, center: u32) -> Self {
        Star {
            clauses: vec![existing, added],
            centers: vec![center],
        }
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn centers(&self) -> &[u32] {
        &self.centers
    }

    pub fn arity(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_unit(&self) -> bool {
        self.clauses.len() == 1 && self.clauses[0].is_unit()
    }

    /// The center appears with a single polarity in every clause.
    pub fn is_monotone(&self) -> bool {
        if self.arity() == 1 {
            return true;
        }
        let c = self.centers[0];
        let first = self.clauses[0].literal_of(c);
        self.clauses.iter().all(|cl| cl.literal_of(c) == first)
    }

    /// The center literal of a star with a unique center.
    pub fn center_literal(&self) -> Option<Literal> {
        match self.centers[..] {
            [c] => self.clauses[0].literal_of(c),
            _ => None,
        }
    }

    pub fn leaves(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .clauses
            .iter()
            .flat_map(Clause::vars)
            .filter(|v| !self.centers.contains(v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Three clauses over three variables, each pair a 2-star, the whole not a star.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    clauses: [Clause; 3],
}

impl Triangle {
    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Member {
    Star(Star),
    Triangle(Triangle),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MemberKind {
    /// Monotone star of the given arity (1-stars included).
    MonotoneStar(usize),
    NonMonotoneTwoStar,
    Triangle,
    /// A width-1 clause.
    Unit,
}

impl Member {
    pub fn clauses(&self) -> &[Clause] {
        match self {
            Member::Star(s) => &s.clauses,
            Member::Triangle(t) => &t.clauses,
        }
    }

    pub fn kind(&self) -> MemberKind {
        match self {
            Member::Triangle(_) => MemberKind::Triangle,
            Member::Star(s) if s.is_unit() => MemberKind::Unit,
            Member::Star(s) if s.is_monotone() => MemberKind::MonotoneStar(s.arity()),
            Member::Star(_) => MemberKind::NonMonotoneTwoStar,
        }
    }

    pub fn vars(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.clauses().iter().flat_map(Clause::vars).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn centers(&self) -> &[u32] {
        match self {
            Member::Star(s) => &s.centers,
            Member::Triangle(_) => &[],
        }
    }

    /// All local assignments to `vars()` satisfying the member, as bit
    /// vectors aligned with `vars()`, in lexicographic order.
    pub fn local_solutions(&self) -> Vec<Vec<bool>> {
        let vars = self.vars();
        let k = vars.len();
        (0..1u32 << k)
            .map(|mask| {
                (0..k)
                    .map(|i| mask >> (k - 1 - i) & 1 == 1)
                    .collect::<Vec<bool>>()
            })
            .filter(|bits| {
                self.clauses().iter().all(|c| {
                    c.literals().iter().any(|l| {
                        let i = vars.binary_search(&l.var()).expect("member var");
                        l.eval(bits[i])
                    })
                })
            })
            .collect()
    }
}

/// Statistics of one family. `monotone_stars[i]` counts monotone `i`-stars
/// (index 0 unused).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct FamilyStats {
    pub monotone_stars: Vec<usize>,
    pub triangles: usize,
    pub nonmonotone: usize,
    pub units: usize,
}

impl FamilyStats {
    fn of(members: &[Member], depth: usize) -> Self {
        let mut s = FamilyStats {
            monotone_stars: vec![0; depth + 1],
            ..Default::default()
        };
        for m in members {
            match m.kind() {
                MemberKind::MonotoneStar(i) => {
                    if s.monotone_stars.len() <= i {
                        s.monotone_stars.resize(i + 1, 0);
                    }
                    s.monotone_stars[i] += 1;
                }
                MemberKind::NonMonotoneTwoStar => s.nonmonotone += 1,
                MemberKind::Triangle => s.triangles += 1,
                MemberKind::Unit => s.units += 1,
            }
        }
        s
    }

    /// `s_i`: monotone `i`-stars.
    pub fn s(&self, i: usize) -> usize {
        self.monotone_stars.get(i).copied().unwrap_or(0)
    }

    /// `r_i = Σ_{j ≥ i} s_j`.
    pub fn r(&self, i: usize) -> usize {
        self.monotone_stars.iter().skip(i).sum()
    }
}

/// A variable-disjoint family `M_level`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentFamily {
    members: Vec<Member>,
    level: usize,
    stats: FamilyStats,
}

impl IndependentFamily {
    fn new(members: Vec<Member>, level: usize) -> Self {
        let stats = FamilyStats::of(&members, level.max(1));
        IndependentFamily {
            members,
            level,
            stats,
        }
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn stats(&self) -> &FamilyStats {
        &self.stats
    }

    /// `vbl(M)`, ascending.
    pub fn vars(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.members.iter().flat_map(Member::vars).collect();
        v.sort_unstable();
        v
    }

    /// The family as a formula over `num_vars` variables.
    pub fn to_formula(&self, num_vars: u32) -> CnfFormula {
        CnfFormula::from_clauses(
            num_vars,
            self.members.iter().flat_map(|m| m.clauses().iter().cloned()),
        )
        .expect("member clauses come from the formula")
    }

    /// Members are pairwise variable-disjoint.
    pub fn is_independent(&self) -> bool {
        let all = self.vars();
        all.windows(2).all(|w| w[0] != w[1])
    }
}

fn check_two_cnf(f: &CnfFormula) -> Result<(), FamilyError> {
    match f.max_width() {
        w if w > 2 => Err(FamilyError::NotTwoCnf(w)),
        _ => Ok(()),
    }
}

/// A greedily chosen maximal set of variable-disjoint clauses, in input order.
/// `□` is never selected.
pub fn max_disjoint_clauses(f: &CnfFormula) -> Vec<Clause> {
    let mut used = vec![false; f.num_vars() as usize + 1];
    let mut out = Vec::new();
    for c in f.clauses() {
        if !c.is_empty() && c.vars().all(|v| !used[v as usize]) {
            c.vars().for_each(|v| used[v as usize] = true);
            out.push(c.clone());
        }
    }
    out
}

struct Builder<'a> {
    f: &'a CnfFormula,
    occ: Vec<Vec<usize>>,
    used: Vec<bool>,
}

impl<'a> Builder<'a> {
    fn new(f: &'a CnfFormula) -> Self {
        Builder {
            f,
            occ: f.occurrence_lists(),
            used: vec![false; f.num_vars() as usize + 1],
        }
    }

    fn clause(&self, i: usize) -> &'a Clause {
        &self.f.clauses()[i]
    }

    fn mark(&mut self, c: &Clause) {
        for v in c.vars() {
            self.used[v as usize] = true;
        }
    }

    /// Clause indices containing any of `vars`, ascending, deduplicated.
    fn occurrences(&self, vars: &[u32]) -> Vec<usize> {
        let mut idx: Vec<usize> = vars
            .iter()
            .flat_map(|&v| self.occ[v as usize].iter().copied())
            .collect();
        idx.sort_unstable();
        idx.dedup();
        idx
    }

    /// For clause `d` meeting `anchor` in exactly one variable, the shared
    /// variable and `d`'s other variable when that one is unused. Units in `d`
    /// are reported with `None` as the other variable.
    fn attach_point(&self, d: &Clause, anchor: &[u32]) -> Option<(u32, Option<u32>)> {
        let shared: Vec<u32> = d.vars().filter(|v| anchor.contains(v)).collect();
        if shared.len() != 1 {
            return None;
        }
        let other: Vec<u32> = d.vars().filter(|v| !anchor.contains(v)).collect();
        match other[..] {
            [] => Some((shared[0], None)),
            [o] if !self.used[o as usize] => Some((shared[0], Some(o))),
            _ => None,
        }
    }

    /// Greedy maximal matching, then one pass of length-3 augmentations.
    fn one_maximal(&mut self) -> Vec<Member> {
        let mut chosen: Vec<usize> = Vec::new();
        for (i, c) in self.f.clauses().iter().enumerate() {
            if !c.is_empty() && c.vars().all(|v| !self.used[v as usize]) {
                self.mark(c);
                chosen.push(i);
            }
        }
        let mut j = 0;
        while j < chosen.len() {
            if let Some((a, b)) = self.augmenting_pair(chosen[j]) {
                self.mark(&self.clause(a).clone());
                self.mark(&self.clause(b).clone());
                chosen[j] = a;
                chosen.push(b);
            }
            j += 1;
        }
        chosen
            .into_iter()
            .map(|i| Member::Star(Star::one(self.clause(i).clone())))
            .collect()
    }

    /// Two clauses that can replace matched clause `e = {u, v}`: `a` meets
    /// `e` only in `u`, `b` only in `v`, and their other variables are free
    /// and distinct.
    fn augmenting_pair(&self, e: usize) -> Option<(usize, usize)> {
        let ec = self.clause(e);
        let [u, v] = ec.vars().collect::<Vec<_>>()[..] else {
            return None;
        };
        let anchor = [u, v];
        for &a in &self.occ[u as usize] {
            if a == e {
                continue;
            }
            let Some((su, xa)) = self.attach_point(self.clause(a), &anchor) else {
                continue;
            };
            if su != u {
                continue;
            }
            for &b in &self.occ[v as usize] {
                if b == e || b == a {
                    continue;
                }
                let Some((sv, yb)) = self.attach_point(self.clause(b), &anchor) else {
                    continue;
                };
                if sv == v && (xa.is_none() || xa != yb) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `M_0 → M_1`: 1-stars become non-monotone 2-stars or triangles.
    fn upgrade_level_one(&mut self, members: &mut [Member]) {
        for m in members.iter_mut() {
            let Member::Star(star) = m else { continue };
            if star.arity() != 1 || star.is_unit() {
                continue;
            }
            let base = star.clauses[0].clone();
            let anchor: Vec<u32> = base.vars().collect();
            let mut upgraded = None;
            for d in self.occurrences(&anchor) {
                let dc = self.clause(d);
                let Some((shared, Some(c))) = self.attach_point(dc, &anchor) else {
                    continue;
                };
                if dc.literal_of(shared) != base.literal_of(shared) {
                    upgraded = Some(Member::Star(Star::two(base.clone(), dc.clone(), shared)));
                    break;
                }
                let opposite = if anchor[0] == shared {
                    anchor[1]
                } else {
                    anchor[0]
                };
                let closing = self.occ[opposite as usize].iter().copied().find(|&e| {
                    let ec = self.clause(e);
                    ec.len() == 2 && ec.contains_var(c)
                });
                if let Some(e) = closing {
                    upgraded = Some(Member::Triangle(Triangle {
                        clauses: [base.clone(), dc.clone(), self.clause(e).clone()],
                    }));
                    break;
                }
            }
            if let Some(new) = upgraded {
                for c in new.clauses() {
                    self.mark(c);
                }
                *m = new;
            }
        }
    }

    /// `M_{i−1} → M_i` for `i ≥ 2`: monotone `(i−1)`-stars gain a clause.
    fn upgrade_monotone(&mut self, members: &mut [Member], i: usize) {
        for m in members.iter_mut() {
            let Member::Star(star) = m else { continue };
            if star.is_unit() || star.arity() != i - 1 || !star.is_monotone() {
                continue;
            }
            let grown = if i == 2 {
                let base = star.clauses[0].clone();
                let anchor: Vec<u32> = base.vars().collect();
                self.occurrences(&anchor).into_iter().find_map(|d| {
                    let dc = self.clause(d);
                    match self.attach_point(dc, &anchor) {
                        Some((shared, Some(_)))
                            if dc.literal_of(shared) == base.literal_of(shared) =>
                        {
                            Some(Star::two(base.clone(), dc.clone(), shared))
                        }
                        _ => None,
                    }
                })
            } else {
                let center = star.center_literal().expect("star with one center");
                let anchor: Vec<u32> = star.clauses.iter().flat_map(Clause::vars).collect();
                self.occ[center.var() as usize].iter().find_map(|&d| {
                    let dc = self.clause(d);
                    if !dc.contains(center) || star.clauses.contains(dc) {
                        return None;
                    }
                    match self.attach_point(dc, &anchor) {
                        Some((_, Some(_))) => {
                            let mut s = star.clone();
                            s.clauses.push(dc.clone());
                            Some(s)
                        }
                        _ => None,
                    }
                })
            };
            if let Some(s) = grown {
                for c in &s.clauses {
                    self.mark(c);
                }
                *star = s;
            }
        }
    }
}

/// `M_0`: an independent 1-maximal family of 1-stars.
pub fn one_maximal_matching(f: &CnfFormula) -> Result<IndependentFamily, FamilyError> {
    check_two_cnf(f)?;
    let members = Builder::new(f).one_maximal();
    Ok(IndependentFamily::new(members, 0))
}

/// `M_0, …, M_k`.
pub fn build_family_sequence(
    f: &CnfFormula,
    k: usize,
) -> Result<Vec<IndependentFamily>, FamilyError> {
    check_two_cnf(f)?;
    if !(2..=MAX_DEPTH).contains(&k) {
        return Err(FamilyError::InvalidDepth(k));
    }
    let mut b = Builder::new(f);
    let mut members = b.one_maximal();
    let mut out = vec![IndependentFamily::new(members.clone(), 0)];
    b.upgrade_level_one(&mut members);
    out.push(IndependentFamily::new(members.clone(), 1));
    for i in 2..=k {
        b.upgrade_monotone(&mut members, i);
        out.push(IndependentFamily::new(members.clone(), i));
    }
    Ok(out)
}

/// `W = vbl(M_ℓ)` and the enumeration boundary `W′ ⊆ W`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundarySets {
    pub w: Vec<u32>,
    pub w_prime: Vec<u32>,
    /// Members of `W′` witnessed by a width-2 clause (the rest only by unit
    /// clauses of `F`).
    pub pair_witnessed: Vec<u32>,
}

/// Computes `W` and `W′` for `M_ℓ` and checks that every member meets `W′`
/// in at most one variable, which must be a center of a monotone `ℓ`-star or
/// of a non-monotone 2-star.
pub fn boundary_sets(
    f: &CnfFormula,
    family: &IndependentFamily,
) -> Result<BoundarySets, FamilyError> {
    let w = family.vars();
    let in_w = |v: u32| w.binary_search(&v).is_ok();
    let mut w_prime = BTreeSet::new();
    let mut pair = BTreeSet::new();
    for c in f.clauses() {
        let inside: Vec<u32> = c.vars().filter(|&v| in_w(v)).collect();
        if let [x] = inside[..] {
            w_prime.insert(x);
            if c.len() == 2 {
                pair.insert(x);
            }
        }
    }
    let sets = BoundarySets {
        w,
        w_prime: w_prime.into_iter().collect(),
        pair_witnessed: pair.into_iter().collect(),
    };
    validate_boundary(family, &sets)?;
    Ok(sets)
}

fn validate_boundary(family: &IndependentFamily, sets: &BoundarySets) -> Result<(), FamilyError> {
    let level = family.level();
    for (j, m) in family.members().iter().enumerate() {
        let hits: Vec<u32> = m
            .vars()
            .into_iter()
            .filter(|v| sets.pair_witnessed.binary_search(v).is_ok())
            .collect();
        if hits.is_empty() || m.kind() == MemberKind::Unit {
            continue;
        }
        if hits.len() > 1 {
            return Err(FamilyError::ConstructionViolation(format!(
                "member {j} meets W′ in {hits:?}"
            )));
        }
        let x = hits[0];
        let ok = match m.kind() {
            MemberKind::MonotoneStar(i) => i == level && m.centers().contains(&x),
            MemberKind::NonMonotoneTwoStar => m.centers().contains(&x),
            _ => false,
        };
        if !ok {
            return Err(FamilyError::ConstructionViolation(format!(
                "x{x} of member {j} ({:?}) is in W′ at level {level}",
                m.kind()
            )));
        }
    }
    Ok(())
}

/// Upper bounds on `|W_α|`, the variable count left after unit clause
/// reduction of `F^[α]` for `α : W′ → {0,1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidualBound {
    /// Monotone `ℓ`-star center literals that `α` sets to 0.
    pub zeroed_centers: usize,
    /// Per-member bound; valid for every `α`.
    pub member_bound: usize,
    /// `q + 3t + ℓ(r_ℓ − i) + Σ_{j<ℓ} (j+1)s_j`. It coincides with
    /// `member_bound` when every monotone `ℓ`-star and non-monotone 2-star
    /// has its center in `W′` and there are no unit members.
    pub closed_form: usize,
    /// Whether the closed form's premise holds for this family.
    pub closed_form_applies: bool,
}

pub fn residual_bound(
    family: &IndependentFamily,
    sets: &BoundarySets,
    alpha: &PartialAssignment,
) -> ResidualBound {
    let level = family.level();
    let stats = family.stats();
    let in_wp = |v: u32| sets.w_prime.binary_search(&v).is_ok();
    let mut zeroed = 0;
    let mut bound = 0;
    let mut all_centers_in = stats.units == 0;
    for m in family.members() {
        let boundary_center = m.centers().iter().copied().find(|&c| in_wp(c));
        let center_value = |c: u32| {
            let lit = m.clauses()[0].literal_of(c).expect("center in every clause");
            alpha.get(c).map(|b| lit.eval(b))
        };
        bound += match m.kind() {
            MemberKind::Unit => usize::from(boundary_center.is_none()),
            MemberKind::Triangle => 3,
            MemberKind::MonotoneStar(i) if i < level => i + 1,
            MemberKind::MonotoneStar(i) => match boundary_center {
                Some(c) if center_value(c) == Some(false) => {
                    zeroed += 1;
                    0
                }
                Some(_) => i,
                None => {
                    all_centers_in = false;
                    i + 1
                }
            },
            MemberKind::NonMonotoneTwoStar => match boundary_center {
                Some(_) => 1,
                None => {
                    all_centers_in = false;
                    3
                }
            },
        };
    }
    let lower: usize = (1..level).map(|j| (j + 1) * stats.s(j)).sum();
    let closed_form = stats.nonmonotone
        + 3 * stats.triangles
        + level * (stats.r(level).saturating_sub(zeroed))
        + lower;
    ResidualBound {
        zeroed_centers: zeroed,
        member_bound: bound,
        closed_form,
        closed_form_applies: all_centers_in,
    }
}

/// Per-member satisfying local assignments, precomputed for pool sampling.
#[derive(Debug, Clone)]
pub struct FamilyPool {
    num_vars: u32,
    locals: Vec<(Vec<u32>, Vec<Vec<bool>>)>,
    free: Vec<u32>,
}

impl FamilyPool {
    pub fn new(family: &IndependentFamily, num_vars: u32) -> Self {
        let locals: Vec<(Vec<u32>, Vec<Vec<bool>>)> = family
            .members()
            .iter()
            .map(|m| (m.vars(), m.local_solutions()))
            .collect();
        let covered = family.vars();
        let free = (1..=num_vars)
            .filter(|v| covered.binary_search(v).is_err())
            .collect();
        FamilyPool {
            num_vars,
            locals,
            free,
        }
    }

    /// Number of full assignments satisfying every member.
    pub fn count(&self) -> BigUint {
        let mut total = pow2(self.free.len() as u64);
        for (_, sols) in &self.locals {
            total *= BigUint::from(sols.len());
        }
        total
    }

    /// Uniform draw from the pool.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> PartialAssignment {
        let mut a = PartialAssignment::new(self.num_vars);
        for (vars, sols) in &self.locals {
            let pick = &sols[rng.gen_range(0..sols.len())];
            for (&v, &b) in vars.iter().zip(pick) {
                a.set(v, b);
            }
        }
        for &v in &self.free {
            a.set(v, rng.gen());
        }
        a
    }
}

/// Exact number of full assignments over `n` variables satisfying every
/// member of `M`.
pub fn family_pool_count(family: &IndependentFamily, n: u32) -> BigUint {
    FamilyPool::new(family, n).count()
}

/// The closed-form pool size `2^{−t−q}·Π_i ((2^i+1)/2^{i+1})^{s_i}·2^n`,
/// scaled to an integer (unit members contribute 1/2). It is an upper bound
/// on [`family_pool_count`]; they differ only through triangles with fewer
/// than 4 local solutions.
pub fn family_pool_bound(family: &IndependentFamily, n: u32) -> BigUint {
    let s = family.stats();
    let covered = family.vars().len() as u64;
    let mut total = pow2(u64::from(n) - covered) * pow2(2 * (s.triangles + s.nonmonotone) as u64);
    for (i, &si) in s.monotone_stars.iter().enumerate().skip(1) {
        total *= num_traits::pow(pow2(i as u64) + 1u32, si);
    }
    total
}

/// One uniform draw from the pool of `M`.
pub fn sample_family_pool<R: Rng + ?Sized>(
    family: &IndependentFamily,
    n: u32,
    rng: &mut R,
) -> PartialAssignment {
    FamilyPool::new(family, n).sample(rng)
}

/// Key/value diagnostics for one level.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub level: usize,
    pub s: Vec<usize>,
    pub r: Vec<usize>,
    pub t: usize,
    pub q: usize,
    pub units: usize,
    pub w: usize,
    pub w_prime: usize,
}

pub fn family_report(f: &CnfFormula, family: &IndependentFamily) -> Result<FamilyReport, FamilyError> {
    let sets = boundary_sets(f, family)?;
    let st = family.stats();
    let depth = st.monotone_stars.len().saturating_sub(1);
    Ok(FamilyReport {
        level: family.level(),
        s: (1..=depth).map(|i| st.s(i)).collect(),
        r: (1..=depth).map(|i| st.r(i)).collect(),
        t: st.triangles,
        q: st.nonmonotone,
        units: st.units,
        w: sets.w.len(),
        w_prime: sets.w_prime.len(),
    })
}
