use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use super::closed_form::{closed_form_with, Pairing};
use super::inductive::Inductive;
use super::table::{self, StarTable};
use super::FaceContext;
use crate::element::CoxeterGroup;
use crate::error::{Error, Result};
use crate::properties;
use crate::subset::SubsetJ;

/// Associativity is checked on all `8^rank` triples up to this many.
pub const ASSOCIATIVITY_BUDGET: u64 = 1 << 24;
/// Sampled triples when the exhaustive check is over budget.
pub const ASSOCIATIVITY_SAMPLES: usize = 4096;
/// Samples per lemma when the lemma suite runs on a large group.
pub const LEMMA_SAMPLES: usize = 1000;
pub const SEED: u64 = 0x5eed_c0de;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum CheckKind {
    Closure,
    Commutativity,
    Containment,
    StarForm,
    Monotonicity,
    Associativity,
    ClosedForm,
    Inductive,
    Lemma,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CheckKind::Closure => "closure",
            CheckKind::Commutativity => "commutativity",
            CheckKind::Containment => "containment",
            CheckKind::StarForm => "star-form",
            CheckKind::Monotonicity => "monotonicity",
            CheckKind::Associativity => "associativity",
            CheckKind::ClosedForm => "closed-form",
            CheckKind::Inductive => "inductive",
            CheckKind::Lemma => "lemma",
        };
        f.write_str(name)
    }
}

/// Which groups of checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Checks {
    /// Closure, commutativity, containment, the star-form bridge,
    /// monotonicity and associativity.
    pub theorem: bool,
    pub closed_form: bool,
    pub inductive: bool,
    /// Element-level property suites.
    pub lemmas: bool,
}

impl Checks {
    pub const ALL: Checks = Checks { theorem: true, closed_form: true, inductive: true, lemmas: true };
    pub const NONE: Checks = Checks { theorem: false, closed_form: false, inductive: false, lemmas: false };
}

impl Default for Checks {
    fn default() -> Self {
        Checks::ALL
    }
}

impl FromStr for Checks {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "all" => Ok(Checks::ALL),
            "theorem" => Ok(Checks { theorem: true, ..Checks::NONE }),
            "closedform" => Ok(Checks { closed_form: true, ..Checks::NONE }),
            "inductive" => Ok(Checks { inductive: true, ..Checks::NONE }),
            "lemmas" => Ok(Checks { lemmas: true, ..Checks::NONE }),
            other => Err(Error::Syntax {
                what: "check selection",
                input: other.to_string(),
                reason: "expected all, theorem, lemmas, closedform or inductive".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Failure {
    pub kind: CheckKind,
    pub j1: Option<SubsetJ>,
    pub j2: Option<SubsetJ>,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let (Some(j1), Some(j2)) = (self.j1, self.j2) {
            write!(f, " [{j1}] [{j2}]")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct VerificationReport {
    pub diagram: String,
    pub rank: usize,
    pub checks: Checks,
    /// Ordered subset pairs covered by the pair checks.
    pub pairs: u64,
    /// Triples covered by the associativity check.
    pub triples: u64,
    pub associativity_exhaustive: bool,
    /// Proper-subset pairs with a nonempty product.
    pub nonempty_proper_pairs: u64,
    /// Pairs where the index-matched reading of the component rule differs
    /// from the all-pairs one (informational).
    pub diagonal_reading_differs: u64,
    /// Property suites run, with the number of cases each.
    pub lemma_cases: Vec<(String, u64)>,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// True when the inductive route disagreed with the direct one.
    pub fn has_internal_mismatch(&self) -> bool {
        self.failures.iter().any(|f| f.kind == CheckKind::Inductive)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "diagram: {} (rank {})", self.diagram, self.rank)?;
        let c = self.checks;
        let on = |b: bool| if b { "on" } else { "off" };
        writeln!(
            f,
            "checks: theorem {}, closedform {}, inductive {}, lemmas {}",
            on(c.theorem),
            on(c.closed_form),
            on(c.inductive),
            on(c.lemmas)
        )?;
        writeln!(f, "pairs: {}", self.pairs)?;
        writeln!(f, "nonempty proper pairs: {}", self.nonempty_proper_pairs)?;
        if c.closed_form {
            writeln!(f, "pairs where index-matched component pairing differs: {}", self.diagonal_reading_differs)?;
        }
        if c.theorem {
            let mode = if self.associativity_exhaustive { "exhaustive" } else { "sampled" };
            writeln!(f, "associativity triples: {} ({mode})", self.triples)?;
        }
        for (name, cases) in &self.lemma_cases {
            writeln!(f, "{name}: {cases} cases")?;
        }
        writeln!(f, "failures: {}", self.failures.len())?;
        for failure in &self.failures {
            writeln!(f, "  {failure}")?;
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Runs the selected checks on every subset pair of `group`.
pub fn verify(group: &Arc<CoxeterGroup>, checks: Checks) -> Result<VerificationReport> {
    verify_with_bound(group, checks, table::rank_bound_from_env())
}

pub fn verify_with_bound(group: &Arc<CoxeterGroup>, checks: Checks, bound: usize) -> Result<VerificationReport> {
    let ctx = FaceContext::new(group)?;
    let table = table::build(&ctx, bound, checks.closed_form)?;
    verify_table(&ctx, &table, checks)
}

/// Runs the selected checks against an already computed table.
pub fn verify_table(ctx: &FaceContext, table: &StarTable, checks: Checks) -> Result<VerificationReport> {
    let rank = table.rank();
    let full = ctx.full();
    let mut report = VerificationReport {
        diagram: table.diagram().to_string(),
        rank,
        checks,
        pairs: 1 << (2 * rank),
        triples: 0,
        associativity_exhaustive: false,
        nonempty_proper_pairs: 0,
        diagonal_reading_differs: 0,
        lemma_cases: Vec::new(),
        failures: Vec::new(),
    };
    let fail = |kind, j1, j2, detail: String| Failure { kind, j1: Some(j1), j2: Some(j2), detail };

    for (j1, j2, j3) in table.entries() {
        if j1 != full && j2 != full && !j3.is_empty() {
            report.nonempty_proper_pairs += 1;
        }
        let st = table.status(j1, j2);
        if checks.theorem {
            if !st.closure {
                report.failures.push(fail(CheckKind::Closure, j1, j2, format!("left descents {j3}")));
            }
            if !st.commutative {
                let back = table.entry(j2, j1);
                report.failures.push(fail(CheckKind::Commutativity, j1, j2, format!("{j3} vs {back}")));
            }
            if !st.containment {
                report.failures.push(fail(CheckKind::Containment, j1, j2, format!("{j3}")));
            }
            if !st.star_form {
                report.failures.push(fail(CheckKind::StarForm, j1, j2, "Demazure-product form differs".into()));
            }
            // Single-step growth of J1 suffices; J2 follows by commutativity.
            for k in full.difference(j1).iter() {
                let bigger = table.entry(j1.with(k), j2);
                if !j3.is_subset(bigger) {
                    report.failures.push(fail(
                        CheckKind::Monotonicity,
                        j1,
                        j2,
                        format!("adding {k} to J1 gives {bigger}, not a superset of {j3}"),
                    ));
                }
            }
        }
        if checks.closed_form {
            let d = table.diagram();
            if closed_form_with(d, j1, j2, Pairing::Diagonal) != closed_form_with(d, j1, j2, Pairing::AllPairs) {
                report.diagonal_reading_differs += 1;
            }
        }
        if st.closed_form == Some(false) {
            let expected = super::closed_form(table.diagram(), j1, j2);
            report.failures.push(fail(CheckKind::ClosedForm, j1, j2, format!("computed {j3}, formula {expected}")));
        }
    }

    if checks.theorem {
        check_associativity(table, &mut report);
    }
    if checks.inductive {
        check_inductive(ctx, table, &mut report)?;
    }
    if checks.lemmas {
        for result in properties::suite(ctx.group(), LEMMA_SAMPLES, SEED)? {
            report.lemma_cases.push((result.name.to_string(), result.cases));
            for v in result.violations {
                report.failures.push(Failure { kind: CheckKind::Lemma, j1: None, j2: None, detail: format!("{}: {v}", result.name) });
            }
        }
    }
    Ok(report)
}

fn check_associativity(table: &StarTable, report: &mut VerificationReport) {
    let rank = table.rank();
    let n = 1u64 << rank;
    let triple_ok = |a: u64, b: u64, c: u64| {
        let (a, b, c) = (SubsetJ::from_bits(a), SubsetJ::from_bits(b), SubsetJ::from_bits(c));
        table.entry(table.entry(a, b), c) == table.entry(a, table.entry(b, c))
    };
    let describe = |(a, b, c): (u64, u64, u64)| Failure {
        kind: CheckKind::Associativity,
        j1: None,
        j2: None,
        detail: format!("[{}] [{}] [{}]", SubsetJ::from_bits(a), SubsetJ::from_bits(b), SubsetJ::from_bits(c)),
    };

    let total = n * n * n;
    let bad: Vec<(u64, u64, u64)> = if total <= ASSOCIATIVITY_BUDGET {
        report.associativity_exhaustive = true;
        report.triples = total;
        let row = |a: u64| -> Vec<(u64, u64, u64)> {
            let mut out = Vec::new();
            for b in 0..n {
                for c in 0..n {
                    if !triple_ok(a, b, c) {
                        out.push((a, b, c));
                    }
                }
            }
            out
        };
        #[cfg(feature = "parallel")]
        let rows: Vec<_> = (0..n).into_par_iter().map(row).collect();
        #[cfg(not(feature = "parallel"))]
        let rows: Vec<_> = (0..n).map(row).collect();
        rows.into_iter().flatten().collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        report.triples = ASSOCIATIVITY_SAMPLES as u64;
        (0..ASSOCIATIVITY_SAMPLES)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
            .filter(|&(a, b, c)| !triple_ok(a, b, c))
            .collect()
    };
    report.failures.extend(bad.into_iter().map(describe));
}

fn check_inductive(ctx: &FaceContext, table: &StarTable, report: &mut VerificationReport) -> Result<()> {
    let n = 1u64 << table.rank();
    let row = |ind: &mut Inductive, a: u64| -> Result<Vec<Failure>> {
        let j1 = SubsetJ::from_bits(a);
        let mut out = Vec::new();
        for b in 0..n {
            let j2 = SubsetJ::from_bits(b);
            let inductive = ind.star_sets(j1, j2)?;
            let direct = table.entry(j1, j2);
            if inductive != direct {
                out.push(Failure {
                    kind: CheckKind::Inductive,
                    j1: Some(j1),
                    j2: Some(j2),
                    detail: format!("inductive {inductive}, direct {direct}"),
                });
            }
        }
        Ok(out)
    };
    #[cfg(feature = "parallel")]
    let rows: Vec<Result<Vec<Failure>>> =
        (0..n).into_par_iter().map_init(|| Inductive::new(ctx), |ind, a| row(ind, a)).collect();
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Result<Vec<Failure>>> = {
        let mut ind = Inductive::new(ctx);
        (0..n).map(|a| row(&mut ind, a)).collect()
    };
    for r in rows {
        report.failures.extend(r?);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(t: &str, checks: Checks) -> VerificationReport {
        verify_with_bound(&CoxeterGroup::parse(t).unwrap(), checks, table::DEFAULT_RANK_BOUND).unwrap()
    }

    #[test]
    fn check_selection_parses() {
        assert_eq!("all".parse::<Checks>().unwrap(), Checks::ALL);
        assert!("theorem".parse::<Checks>().unwrap().theorem);
        assert!(!"theorem".parse::<Checks>().unwrap().lemmas);
        assert!("everything".parse::<Checks>().is_err());
    }

    #[test]
    fn a4_passes_everything() {
        let r = run("A4", Checks::ALL);
        assert!(r.passed(), "{r}");
        assert!(r.associativity_exhaustive);
        assert_eq!(r.triples, 1 << 12);
    }

    #[test]
    fn dihedral_has_no_nonempty_proper_pairs() {
        let r = run("I2(5)", Checks::ALL);
        assert!(r.passed(), "{r}");
        assert_eq!(r.nonempty_proper_pairs, 0);
    }
}
