//! The fixture battery and its report.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use wreath_core::{uncolored_hypergraph_representable, ClosureKind, Error, Limits, Result};

use crate::constructions::{build_parallel_lift, build_wreath_lift};
use crate::imprimitive::{
    verify_digraph_classification, verify_directed_factorization,
    verify_imprimitive_classification, verify_orbital_factorization, verify_parallel_multiple_law,
    verify_transitive_decomposition,
};
use crate::oracle::Oracle;
use crate::outcome::{timed, Named, VerificationOutcome};
use crate::product_action::product_action_report;

pub const REFERENCE: &str = "reference-membership";

/// Groups combined pairwise into imprimitive wreath products.
pub const GRID_GROUPS: &[&str] = &[
    "I2",
    "S2",
    "I3",
    "C3",
    "S3",
    "I4",
    "C4",
    "K4",
    "D4",
    "A4",
    "S4",
    "par(S2,2)",
    "I5",
    "C5",
    "D5",
    "A5",
    "S5",
    "I6",
    "C6",
    "D6",
    "A6",
    "S6",
    "par(C3,2)",
];

/// Largest point count of a grid product.
pub const GRID_MAX_DEGREE: usize = 12;

pub const PARALLEL_BASES: &[&str] = &[
    "I2",
    "S2",
    "I3",
    "C3",
    "S3",
    "I4",
    "C4",
    "K4",
    "D4",
    "A4",
    "S4",
    "par(S2,2)",
    "I5",
    "C5",
    "D5",
    "A5",
    "S5",
];

pub const PARALLEL_LIFT_PAIRS: &[(&str, &str)] = &[
    ("I2", "C3"),
    ("I3", "S2"),
    ("par(S2,2)", "C3"),
    ("S3", "S3"),
];

pub const WREATH_LIFT_PAIRS: &[(&str, &str)] = &[
    ("I3", "S2"),
    ("par(S2,2)", "C3"),
    ("I3", "C3"),
    ("par(S2,2)", "S2"),
];

pub const TRANSITIVE_PAIRS: &[(&str, &str)] = &[
    ("S3", "S2"),
    ("S2", "S3"),
    ("K4", "S2"),
    ("D4", "S3"),
    ("S2", "D4"),
    ("D5", "S2"),
];

pub const PRODUCT_ACTION_PAIRS: &[(&str, &str)] = &[
    ("S2", "C3"),
    ("S2", "S3"),
    ("I2", "A3"),
    ("I2", "A4"),
    ("S2", "C4"),
    ("S2", "C5"),
    ("C2", "C3"),
    ("C3", "S2"),
    ("A4", "S2"),
    ("C4", "S2"),
    ("I3", "S2"),
    ("S3", "C3"),
    ("K4", "S2"),
    ("I2", "S4"),
    ("I2", "C4"),
    ("I2", "K4"),
    ("S2", "K4"),
    ("S2", "A4"),
];

/// Class named by a reference fact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReferenceClass {
    Closure(ClosureKind),
    UncoloredHypergraph,
}

impl ReferenceClass {
    pub fn name(self) -> &'static str {
        match self {
            Self::Closure(k) => k.name(),
            Self::UncoloredHypergraph => "uncolored-hypergraph",
        }
    }
}

/// A published membership fact: `spec` lies in `class` iff `expected`.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceFact {
    pub spec: &'static str,
    pub class: ReferenceClass,
    pub expected: bool,
}

const fn fact(spec: &'static str, kind: ClosureKind, expected: bool) -> ReferenceFact {
    ReferenceFact {
        spec,
        class: ReferenceClass::Closure(kind),
        expected,
    }
}

pub const REFERENCE_FACTS: &[ReferenceFact] = &[
    fact("C3", ClosureKind::Bgr, false),
    fact("C4", ClosureKind::Bgr, false),
    fact("C5", ClosureKind::Bgr, false),
    fact("A4", ClosureKind::Bgr, false),
    fact("C3", ClosureKind::Dgr, true),
    fact("C4", ClosureKind::Dgr, true),
    fact("C5", ClosureKind::Dgr, true),
    fact("K4", ClosureKind::Bgr, true),
    ReferenceFact {
        spec: "K4",
        class: ReferenceClass::UncoloredHypergraph,
        expected: false,
    },
    fact("C2", ClosureKind::Dgr, true),
    fact("wrp(C2,C3)", ClosureKind::Dgr, false),
    fact("wrp(C2,C3)", ClosureKind::Bgr, false),
    fact("wrp(S2,C3)", ClosureKind::Gr, false),
    fact("wrp(S2,C3)", ClosureKind::Dgr, false),
    fact("wrp(S2,C4)", ClosureKind::Dgr, false),
    fact("wrp(S2,C5)", ClosureKind::Dgr, false),
    fact("wrp(S2,S3)", ClosureKind::Gr, true),
    fact("wrp(I2,A3)", ClosureKind::Gr, true),
    fact("wrp(I2,A4)", ClosureKind::Gr, false),
];

/// Compares a reference fact with the closure computation; a negative
/// answer must come with a permutation of the closure outside the group.
pub fn verify_reference_fact(oracle: &Oracle, f: &ReferenceFact) -> Result<VerificationOutcome> {
    let g = Named::parse_with(f.spec, oracle.limits())?;
    let inputs = [f.spec, f.class.name()];
    match f.class {
        ReferenceClass::Closure(kind) => {
            let (observed, witness) = oracle.membership(&g.group, kind)?;
            let mut o = VerificationOutcome::new(REFERENCE, &inputs, f.expected, observed);
            if let Some(w) = witness {
                let certified =
                    oracle.closure(&g.group, kind)?.contains(&w)? && !g.group.contains(&w)?;
                o = o.with_witness(&w);
                if !certified {
                    o = o.reject("witness does not certify");
                }
            } else if !observed {
                o = o.reject("negative verdict without witness");
            }
            Ok(o)
        }
        ReferenceClass::UncoloredHypergraph => {
            let family = uncolored_hypergraph_representable(&g.group)?;
            let o = VerificationOutcome::new(REFERENCE, &inputs, f.expected, family.is_some());
            Ok(match family {
                Some(sets) => o.with_note(format!("family of {} subsets", sets.len())),
                None => o,
            })
        }
    }
}

/// Grid pairs `(A, B)` with `|V| |W| <= 12` whose wreath order fits the cap.
pub fn grid_pairs(limits: Limits) -> Result<Vec<(Named, Named)>> {
    let groups = GRID_GROUPS
        .iter()
        .map(|s| Named::parse_with(s, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for a in &groups {
        for b in &groups {
            if a.group.degree() * b.group.degree() > GRID_MAX_DEGREE {
                continue;
            }
            let order = a.group.order()?.pow(b.group.degree() as u32) * b.group.order()?;
            if order > BigUint::from(limits.order_cap) {
                continue;
            }
            pairs.push((a.clone(), b.clone()));
        }
    }
    Ok(pairs)
}

/// Per-claim tally.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClaimCount {
    pub total: usize,
    pub agree: usize,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub outcomes: Vec<VerificationOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.agree)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &VerificationOutcome> {
        self.outcomes.iter().filter(|o| !o.agree)
    }

    pub fn of_claim(&self, claim: &str) -> impl Iterator<Item = &VerificationOutcome> {
        let claim = claim.to_string();
        self.outcomes.iter().filter(move |o| o.claim == claim)
    }

    pub fn counts(&self) -> BTreeMap<String, ClaimCount> {
        let mut counts: BTreeMap<String, ClaimCount> = BTreeMap::new();
        for o in &self.outcomes {
            let c = counts.entry(o.claim.clone()).or_default();
            c.total += 1;
            c.agree += usize::from(o.agree);
        }
        counts
    }

    /// Machine-readable report; timings are included only on request so
    /// that the default output is reproducible.
    pub fn to_json(&self, timings: bool) -> serde_json::Value {
        let outcomes: Vec<serde_json::Value> = self
            .outcomes
            .iter()
            .map(|o| {
                let mut v = serde_json::to_value(o).expect("outcome serializes");
                if timings {
                    v["ms"] = o.ms.into();
                }
                v
            })
            .collect();
        serde_json::json!({
            "suite": self.name,
            "passed": self.passed(),
            "counts": self.counts(),
            "outcomes": outcomes,
        })
    }

    pub fn table(&self, timings: bool) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let status = if o.agree { "ok  " } else { "FAIL" };
            let _ = write!(
                out,
                "{status} {:<38} {:<24} predicted={:<5} observed={:<5}",
                o.claim,
                o.inputs.join(" "),
                o.predicted,
                o.observed
            );
            if timings {
                let _ = write!(out, " {}ms", o.ms);
            }
            if !o.note.is_empty() && !o.agree {
                let _ = write!(out, "  [{}]", o.note);
            }
            out.push('\n');
        }
        out.push('\n');
        for (claim, c) in self.counts() {
            let _ = writeln!(out, "{claim:<40} {:>4}/{:<4} agree", c.agree, c.total);
        }
        let total = self.outcomes.len();
        let agree = self.outcomes.iter().filter(|o| o.agree).count();
        let _ = writeln!(
            out,
            "{}: {agree}/{total} outcomes agree",
            if self.passed() { "PASSED" } else { "FAILED" }
        );
        out
    }
}

type Job<'a> = Box<dyn Fn() -> Vec<VerificationOutcome> + Send + Sync + 'a>;

fn single<'a>(
    claim: &'static str,
    inputs: Vec<String>,
    f: impl Fn() -> Result<VerificationOutcome> + Send + Sync + 'a,
) -> Job<'a> {
    Box::new(move || {
        let refs: Vec<&str> = inputs.iter().map(String::as_str).collect();
        timed(claim, &refs, || Ok(vec![f()?]))
    })
}

fn pair_job<'a>(
    oracle: &'a Oracle,
    claim: &'static str,
    (a, b): (&'static str, &'static str),
    f: impl Fn(&Named, &Named) -> Result<Vec<VerificationOutcome>> + Send + Sync + 'a,
) -> Job<'a> {
    Box::new(move || {
        timed(claim, &[a, b], || {
            let limits = oracle.limits();
            let (a, b) = (Named::parse_with(a, limits)?, Named::parse_with(b, limits)?);
            f(&a, &b)
        })
    })
}

fn grid_jobs(oracle: &Oracle) -> Result<Vec<Job<'_>>> {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    for f in REFERENCE_FACTS {
        jobs.push(single(
            REFERENCE,
            vec![f.spec.to_string(), f.class.name().to_string()],
            move || verify_reference_fact(oracle, f),
        ));
    }
    for (a, b) in grid_pairs(oracle.limits())? {
        let inputs = [a.spec.clone(), b.spec.clone()];
        jobs.push(Box::new(move || {
            let refs = [inputs[0].as_str(), inputs[1].as_str()];
            let mut out = Vec::new();
            out.extend(timed(crate::imprimitive::GR_CLASSIFICATION, &refs, || {
                Ok(vec![verify_imprimitive_classification(oracle, &a, &b)?])
            }));
            out.extend(timed(crate::imprimitive::DGR_CLASSIFICATION, &refs, || {
                Ok(vec![verify_digraph_classification(oracle, &a, &b)?])
            }));
            out.extend(timed(
                crate::imprimitive::GRAPH_FACTORIZATION,
                &refs,
                || Ok(vec![verify_orbital_factorization(oracle, &a, &b)?]),
            ));
            out.extend(timed(
                crate::imprimitive::DIGRAPH_FACTORIZATION,
                &refs,
                || Ok(vec![verify_directed_factorization(&a, &b)?]),
            ));
            out
        }));
    }
    for &spec in PARALLEL_BASES {
        for t in [2, 3] {
            jobs.push(single(
                crate::imprimitive::PARALLEL_MULTIPLE,
                vec![spec.to_string(), t.to_string()],
                move || {
                    verify_parallel_multiple_law(
                        oracle,
                        &Named::parse_with(spec, oracle.limits())?,
                        t,
                    )
                },
            ));
        }
    }
    for &pair in PARALLEL_LIFT_PAIRS {
        jobs.push(pair_job(
            oracle,
            crate::constructions::PARALLEL_LIFT,
            pair,
            move |a, b| Ok(vec![build_parallel_lift(oracle, a, b)?.1]),
        ));
    }
    for &pair in WREATH_LIFT_PAIRS {
        jobs.push(pair_job(
            oracle,
            crate::constructions::WREATH_LIFT,
            pair,
            move |a, b| Ok(vec![build_wreath_lift(oracle, a, b)?.1]),
        ));
    }
    for &pair in TRANSITIVE_PAIRS {
        jobs.push(pair_job(
            oracle,
            crate::imprimitive::TRANSITIVE_DECOMPOSITION,
            pair,
            move |a, b| Ok(vec![verify_transitive_decomposition(oracle, a, b)?]),
        ));
    }
    for &pair in PRODUCT_ACTION_PAIRS {
        jobs.push(pair_job(
            oracle,
            crate::product_action::INCLUSION,
            pair,
            move |a, b| Ok(product_action_report(oracle, a, b)?.outcomes),
        ));
    }
    Ok(jobs)
}

/// Runs a named suite; fixtures run concurrently and are reported in a
/// fixed order.
pub fn run_suite(name: &str, oracle: &Oracle) -> Result<SuiteReport> {
    let jobs = match name {
        "paper" => grid_jobs(oracle)?,
        other => return Err(Error::Invalid(format!("unknown suite '{other}'"))),
    };
    let outcomes = jobs.par_iter().flat_map_iter(|job| job()).collect();
    Ok(SuiteReport {
        name: name.to_string(),
        outcomes,
    })
}
