//! Instance generation, theorem suites and separation searches.
//!
//! Tier A suites assert; a failure is a bug or a counterexample. Tier B
//! suites assert only the directions that hold without extra hypotheses
//! on the ring and record everything else as findings.

mod family;
mod search;
mod suites;

pub use family::{generate_instances, modules_over, Instance, InstanceFamily, InstanceId};
pub use search::{search_separating, SearchOutcome, SearchReport, SearchWitness};

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::WitnessJson;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SuiteId {
    #[serde(rename = "T-MAIN")]
    Main,
    #[serde(rename = "T-MAIN-COR")]
    MainCor,
    #[serde(rename = "T-HOM")]
    Hom,
    #[serde(rename = "T-MEET")]
    Meet,
    #[serde(rename = "T-SEP")]
    Sep,
    #[serde(rename = "T-MIN")]
    Min,
    #[serde(rename = "T-RAD")]
    Rad,
    #[serde(rename = "T-MULT")]
    Mult,
    #[serde(rename = "T-MAIN2")]
    Main2,
    #[serde(rename = "T-MCLOSED")]
    MClosed,
    #[serde(rename = "T-FLAT")]
    Flat,
    #[serde(rename = "T-LOC")]
    Loc,
    #[serde(rename = "T-PROD")]
    Prod,
}

impl SuiteId {
    pub const ALL: [SuiteId; 13] = [
        SuiteId::Main,
        SuiteId::MainCor,
        SuiteId::Hom,
        SuiteId::Meet,
        SuiteId::Sep,
        SuiteId::Min,
        SuiteId::Rad,
        SuiteId::Mult,
        SuiteId::Main2,
        SuiteId::MClosed,
        SuiteId::Flat,
        SuiteId::Loc,
        SuiteId::Prod,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Main => "T-MAIN",
            SuiteId::MainCor => "T-MAIN-COR",
            SuiteId::Hom => "T-HOM",
            SuiteId::Meet => "T-MEET",
            SuiteId::Sep => "T-SEP",
            SuiteId::Min => "T-MIN",
            SuiteId::Rad => "T-RAD",
            SuiteId::Mult => "T-MULT",
            SuiteId::Main2 => "T-MAIN2",
            SuiteId::MClosed => "T-MCLOSED",
            SuiteId::Flat => "T-FLAT",
            SuiteId::Loc => "T-LOC",
            SuiteId::Prod => "T-PROD",
        }
    }

    pub fn tier(self) -> Tier {
        match self {
            SuiteId::Main2 | SuiteId::Flat => Tier::B,
            _ => Tier::A,
        }
    }

    /// Parses a comma-separated list; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<SuiteId>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(SuiteId::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownSuite(s.to_string()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Tier {
    A,
    B,
}

/// A failed assertion.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub instance: Option<InstanceId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub submodule: Option<String>,
    pub check: String,
    pub detail: String,
    /// A violation of the class the failing submodule should have been in.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

/// Recorded data that does not affect the verdict.
#[derive(Debug, Clone, Serialize)]
pub struct Finding {
    pub instance: Option<InstanceId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub submodule: Option<String>,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions: Option<[bool; 10]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub tier: Tier,
    pub instances: usize,
    pub checks: u64,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub findings: Vec<Finding>,
    /// Not serialized so that reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

/// Per-instance accumulator, merged in instance order.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub checks: u64,
    pub failures: Vec<Failure>,
    pub findings: Vec<Finding>,
    instance: Option<InstanceId>,
}

impl Tally {
    pub fn for_instance(id: Option<InstanceId>) -> Tally {
        Tally { instance: id, ..Tally::default() }
    }

    /// Records one assertion.
    pub fn check(&mut self, ok: bool, check: &str, submodule: Option<String>, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                instance: self.instance.clone(),
                submodule,
                check: check.to_string(),
                detail: detail(),
                witness: None,
            });
        }
    }

    pub fn fail_with(&mut self, check: &str, submodule: Option<String>, detail: String, witness: Option<WitnessJson>) {
        self.failures.push(Failure {
            instance: self.instance.clone(),
            submodule,
            check: check.to_string(),
            detail,
            witness,
        });
    }

    pub fn note(&mut self, submodule: Option<String>, note: impl Into<String>, conditions: Option<[bool; 10]>) {
        self.findings.push(Finding {
            instance: self.instance.clone(),
            submodule,
            note: note.into(),
            conditions,
        });
    }

    pub fn error(&mut self, e: Error) {
        self.checks += 1;
        self.fail_with("no-error", None, e.to_string(), None);
    }

    pub fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.findings.extend(other.findings);
    }
}

/// Runs `f` on every item in parallel and merges the tallies in order.
pub(crate) fn per_item<T: Sync>(
    items: &[T],
    id: impl Fn(&T) -> Option<InstanceId> + Sync,
    f: impl Fn(&T, &mut Tally) -> Result<()> + Sync,
) -> Tally {
    let parts: Vec<Tally> = items
        .par_iter()
        .map(|item| {
            let mut t = Tally::for_instance(id(item));
            if let Err(e) = f(item, &mut t) {
                t.error(e);
            }
            t
        })
        .collect();
    let mut all = Tally::default();
    for p in parts {
        all.absorb(p);
    }
    all
}

/// Runs one suite over the family.
pub fn run_suite(id: SuiteId, family: &InstanceFamily) -> SuiteReport {
    let start = Instant::now();
    let (instances, tally) = suites::run(id, family);
    SuiteReport {
        suite: id,
        tier: id.tier(),
        instances,
        checks: tally.checks,
        passed: tally.failures.is_empty(),
        failures: tally.failures,
        findings: tally.findings,
        wall_time: start.elapsed(),
    }
}

/// Full verification report as written by `verify`.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub bounds: InstanceFamily,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

pub fn verify(ids: &[SuiteId], family: &InstanceFamily) -> VerifyReport {
    let suites: Vec<SuiteReport> = ids.iter().map(|&id| run_suite(id, family)).collect();
    VerifyReport {
        schema: 1,
        bounds: family.clone(),
        passed: suites.iter().all(|s| s.passed),
        suites,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(id.name().parse::<SuiteId>().unwrap(), id);
        }
        assert_eq!(SuiteId::parse_list("all").unwrap().len(), 13);
        assert_eq!(SuiteId::parse_list("T-MAIN, t-prod").unwrap(), vec![SuiteId::Main, SuiteId::Prod]);
        assert!(matches!("NOPE".parse::<SuiteId>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn empty_family_passes() {
        let fam = InstanceFamily { max_module: 0, ..Default::default() };
        let r = run_suite(SuiteId::Main, &fam);
        assert_eq!(r.instances, 0);
        assert!(r.passed);
    }
}
