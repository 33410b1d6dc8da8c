//! Named structural checks over rings, each producing a [`VerificationReport`].
//!
//! | claim id                        | what is checked |
//! |---------------------------------|-----------------|
//! | `clique-formula`                | for a product of `n >= 2` fields, ω = χ = C(n, ⌊n/2⌋) |
//! | `perfection`                    | no odd hole and no odd antihole (regular rings) |
//! | `null-graph`                    | edgeless iff local with principal maximal ideal |
//! | `quotient-reduction`            | collapsing associates keeps ω and χ and gives Γ′(Z2ⁿ) |
//! | `adjacency-properties`          | adjacency characterisations, associate twins, zero-count cliques |
//! | `noetherian-from-finite-clique` | infinite-ring statement, always reported out of scope |
//! | `regular-ring-decomposition`    | decomposition into fields, always reported out of scope |

mod checks;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{factorize, RingSpec};
use crate::solvers::OddCycleCertificate;
use crate::Limits;

pub use checks::{
    binomial, check_adjacency_properties, check_formula, check_null_graph, check_perfection,
    check_perfection_on, check_reduction, is_local, principal_maximal_ideal,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    CliqueFormula,
    Perfection,
    NullGraph,
    QuotientReduction,
    AdjacencyProperties,
    NoetherianFromFiniteClique,
    RegularRingDecomposition,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::CliqueFormula,
        Claim::Perfection,
        Claim::NullGraph,
        Claim::QuotientReduction,
        Claim::AdjacencyProperties,
        Claim::NoetherianFromFiniteClique,
        Claim::RegularRingDecomposition,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::CliqueFormula => "clique-formula",
            Claim::Perfection => "perfection",
            Claim::NullGraph => "null-graph",
            Claim::QuotientReduction => "quotient-reduction",
            Claim::AdjacencyProperties => "adjacency-properties",
            Claim::NoetherianFromFiniteClique => "noetherian-from-finite-clique",
            Claim::RegularRingDecomposition => "regular-ring-decomposition",
        }
    }

    pub fn check(self, spec: &RingSpec, limits: &Limits) -> Result<VerificationReport> {
        match self {
            Claim::CliqueFormula => check_formula(spec, limits),
            Claim::Perfection => check_perfection(spec, limits),
            Claim::NullGraph => check_null_graph(spec, limits),
            Claim::QuotientReduction => check_reduction(spec, limits),
            Claim::AdjacencyProperties => check_adjacency_properties(spec, limits),
            Claim::NoetherianFromFiniteClique | Claim::RegularRingDecomposition => {
                Ok(VerificationReport::skipped(
                    self,
                    spec,
                    SkipReason::OutOfScope,
                    "concerns infinite rings; not finitely checkable",
                ))
            }
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SkipReason {
    #[serde(rename = "not-VNR")]
    NotVonNeumannRegular,
    #[serde(rename = "cap-exceeded")]
    CapExceeded,
    #[serde(rename = "is-domain")]
    IsDomain,
    #[serde(rename = "too-few-fields")]
    TooFewFields,
    #[serde(rename = "out-of-scope")]
    OutOfScope,
}

/// Structured evidence attached to a report. Vertex references are indices
/// into the ring's vertex list in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    CliqueAndColoring {
        clique: Vec<usize>,
        coloring: Vec<usize>,
    },
    OddCycle(OddCycleCertificate),
    Reduction {
        /// Graph index of each quotient vertex.
        representatives: Vec<usize>,
        /// Quotient vertex `i` maps to vertex `mapping[i]` of Γ′(Z2ⁿ).
        mapping: Vec<usize>,
    },
    Generator {
        /// Index of the element generating the maximal ideal, in ring order.
        element: usize,
        label: String,
    },
    Edge {
        vertices: [usize; 2],
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub spec: RingSpec,
    pub outcome: Outcome,
    pub pass: bool,
    pub expected: String,
    pub observed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<SkipReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Wall time; left out of JSON so reports stay byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub(crate) fn new(
        claim: Claim,
        spec: &RingSpec,
        pass: bool,
        expected: impl Into<String>,
        observed: impl Into<String>,
    ) -> Self {
        VerificationReport {
            claim_id: claim.id().to_string(),
            spec: spec.clone(),
            outcome: if pass { Outcome::Pass } else { Outcome::Fail },
            pass,
            expected: expected.into(),
            observed: observed.into(),
            skip_reason: None,
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn skipped(claim: Claim, spec: &RingSpec, reason: SkipReason, detail: &str) -> Self {
        VerificationReport {
            claim_id: claim.id().to_string(),
            spec: spec.clone(),
            outcome: Outcome::Skipped,
            pass: false,
            expected: "applicable ring".to_string(),
            observed: detail.to_string(),
            skip_reason: Some(reason),
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub(crate) fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_failure(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "SKIP",
        };
        write!(f, "{tag} {} {}: ", self.claim_id, self.spec)?;
        match self.skip_reason {
            Some(reason) => {
                let reason = serde_json::to_value(reason).expect("skip reason serializes");
                write!(
                    f,
                    "{} ({})",
                    reason.as_str().unwrap_or_default(),
                    self.observed
                )?
            }
            None => write!(f, "expected {}; observed {}", self.expected, self.observed)?,
        }
        write!(f, " [{:.1?}]", self.elapsed)
    }
}

/// Turns an inapplicable-input error into a skip; other errors become failures.
fn report_from_error(claim: Claim, spec: &RingSpec, err: Error) -> VerificationReport {
    let reason = match &err {
        Error::NotVonNeumannRegular(_) => Some(SkipReason::NotVonNeumannRegular),
        Error::IsDomain(_) => Some(SkipReason::IsDomain),
        Error::TooFewFields { .. } => Some(SkipReason::TooFewFields),
        e if e.is_cap() => Some(SkipReason::CapExceeded),
        _ => None,
    };
    match reason {
        Some(reason) => VerificationReport::skipped(claim, spec, reason, &err.to_string()),
        None => VerificationReport::new(claim, spec, false, "check completes", err.to_string()),
    }
}

/// Runs one claim on one ring, never failing: errors become skips or failures.
pub fn run_check(claim: Claim, spec: &RingSpec, limits: &Limits) -> VerificationReport {
    let start = std::time::Instant::now();
    let mut report = claim
        .check(spec, limits)
        .unwrap_or_else(|err| report_from_error(claim, spec, err));
    report.elapsed = start.elapsed();
    report
}

/// Parses claim ids, rejecting unknown ones.
pub fn parse_claims<S: AsRef<str>>(ids: &[S]) -> Result<Vec<Claim>> {
    ids.iter().map(|id| id.as_ref().parse()).collect()
}

/// Every (claim, ring) pair, sorted by claim id then ring text.
///
/// Pairs run on a small thread pool; the output order does not depend on
/// scheduling.
pub fn run_suite(claims: &[Claim], specs: &[RingSpec], limits: &Limits) -> Vec<VerificationReport> {
    let jobs: Vec<(Claim, &RingSpec)> = claims
        .iter()
        .flat_map(|&c| specs.iter().map(move |s| (c, s)))
        .collect();
    let results: Mutex<Vec<Option<VerificationReport>>> = Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(jobs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(claim, spec)) = jobs.get(i) else {
                    break;
                };
                let report = run_check(claim, spec, limits);
                results.lock().unwrap()[i] = Some(report);
            });
        }
    });
    let mut reports: Vec<VerificationReport> = results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every job reports"))
        .collect();
    reports.sort_by(|a, b| {
        (a.claim_id.as_str(), a.spec.to_string()).cmp(&(b.claim_id.as_str(), b.spec.to_string()))
    });
    reports
}

/// All products of prime fields with at most 256 elements (one per multiset
/// of primes, factors ascending), then `Z4, Z8, Z9, Z25, Z27, Z2xZ4`.
pub fn default_rings() -> Vec<RingSpec> {
    let mut rings: Vec<RingSpec> = (2u64..=256)
        .map(|m| {
            let moduli = factorize(m)
                .into_iter()
                .flat_map(|(p, e)| std::iter::repeat_n(p, e as usize))
                .collect();
            RingSpec::new(moduli).expect("prime moduli are valid")
        })
        .collect();
    for extra in [vec![4], vec![8], vec![9], vec![25], vec![27], vec![2, 4]] {
        rings.push(RingSpec::new(extra).expect("valid modulus"));
    }
    rings
}

/// The report array as pretty JSON with a trailing newline.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize");
    out.push('\n');
    out
}
