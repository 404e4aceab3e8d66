//! JSON, DOT and plain-text renderings of classifications and reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{hasse_covers, ClassificationRecord, MinimalSet, RecordJson};
use crate::error::Result;
use crate::harness::{SuiteReport, VerifyReport};
use crate::module::{Component, Module};
use crate::ring::Ring;

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub schema: u32,
    pub ring: Ring,
    pub module: String,
    pub components: Option<Vec<Component>>,
    pub cardinality: usize,
    pub submodules: Vec<RecordJson>,
    pub minimal_c2a: Vec<String>,
    pub no_c2a_submodule: bool,
}

pub fn classification_report(m: &Module, records: &[ClassificationRecord], minimal: &MinimalSet) -> ClassificationReport {
    ClassificationReport {
        schema: 1,
        ring: m.ring().clone(),
        module: m.name().to_string(),
        components: m.components().map(<[Component]>::to_vec),
        cardinality: m.cardinality(),
        submodules: records.iter().map(ClassificationRecord::to_json).collect(),
        minimal_c2a: minimal.members.iter().map(ToString::to_string).collect(),
        no_c2a_submodule: minimal.none_found,
    }
}

fn fill(r: &ClassificationRecord) -> Option<&'static str> {
    if r.classical_prime.holds {
        Some("#2e7d32")
    } else if r.two_absorbing.holds {
        Some("#81c784")
    } else if r.classical_2_absorbing.holds {
        Some("#c8e6c9")
    } else {
        None
    }
}

/// Hasse diagram of the whole submodule lattice, bottom to top. Fill
/// encodes the strongest class: classical prime, then 2-absorbing, then
/// classical 2-absorbing; other submodules stay white.
pub fn to_dot(m: &Module, records: &[ClassificationRecord]) -> Result<String> {
    let subs = m.enumerate_submodules()?;
    let covers = hasse_covers(&subs);
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", m.name());
    out.push_str("  rankdir=BT;\n  node [shape=box, style=filled, fillcolor=white, fontname=\"Helvetica\"];\n");
    for (i, n) in subs.iter().enumerate() {
        let rec = records.iter().find(|r| r.index == i);
        let mut attrs = format!("label=\"{}\"", n.to_string().replace('"', "'"));
        match rec {
            Some(r) => {
                if let Some(c) = fill(r) {
                    let _ = write!(attrs, ", fillcolor=\"{c}\"");
                }
                let _ = write!(
                    attrs,
                    ", tooltip=\"prime={} classical_prime={} 2abs={} c2a={}\"",
                    r.prime.holds, r.classical_prime.holds, r.two_absorbing.holds, r.classical_2_absorbing.holds
                );
            }
            None => attrs.push_str(", style=\"filled,dashed\", fillcolor=\"#eeeeee\""),
        }
        let _ = writeln!(out, "  n{i} [{attrs}];");
    }
    for (i, ups) in covers.iter().enumerate() {
        for j in ups {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn classification_text(report: &ClassificationReport) -> String {
    let mut out = format!("{} over {} ({} elements)\n", report.module, report.ring, report.cardinality);
    for r in &report.submodules {
        let mark = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            out,
            "  #{:<3} {:<16} prime={:<3} classical-prime={:<3} 2abs={:<3} c2a={}",
            r.index,
            r.submodule,
            mark(r.prime.holds),
            mark(r.classical_prime.holds),
            mark(r.two_absorbing.holds),
            mark(r.classical_2_absorbing.holds)
        );
    }
    if report.no_c2a_submodule {
        out.push_str("  no classical 2-absorbing submodule\n");
    } else {
        let _ = writeln!(out, "  minimal classical 2-absorbing: {}", report.minimal_c2a.join(", "));
    }
    out
}

pub fn suite_line(s: &SuiteReport) -> String {
    format!(
        "{:<10} tier {:?}  {}  instances={} checks={} failures={} findings={} ({:.1}s)",
        s.suite.name(),
        s.tier,
        if s.passed { "PASS" } else { "FAIL" },
        s.instances,
        s.checks,
        s.failures.len(),
        s.findings.len(),
        s.wall_time.as_secs_f64()
    )
}

pub fn verify_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for s in &report.suites {
        out.push_str(&suite_line(s));
        out.push('\n');
        for f in s.failures.iter().take(10) {
            let inst = f.instance.as_ref().map(ToString::to_string).unwrap_or_default();
            let _ = writeln!(
                out,
                "    failure {} {} {}: {}",
                f.check,
                inst,
                f.submodule.as_deref().unwrap_or(""),
                f.detail
            );
        }
        for f in &s.findings {
            let inst = f.instance.as_ref().map(ToString::to_string).unwrap_or_default();
            let _ = writeln!(out, "    finding {} {}: {}", inst, f.submodule.as_deref().unwrap_or(""), f.note);
        }
    }
    let _ = writeln!(out, "{}", if report.passed { "all tier A assertions passed" } else { "assertion failures" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify_all, minimal_classical_2_absorbing};

    #[test]
    fn z8_dot() {
        let m = Module::regular(&Ring::new(&[8]).unwrap());
        let recs = classify_all(&m).unwrap();
        let dot = to_dot(&m, &recs).unwrap();
        assert_eq!(dot.matches("label=").count(), 4);
        assert_eq!(dot.matches(" -> ").count(), 3);
        let zero_line = dot.lines().find(|l| l.contains("label=\"(0)\"")).unwrap();
        assert!(!zero_line.contains("fillcolor"));
        assert!(dot.starts_with("digraph"));
    }

    #[test]
    fn report_serializes() {
        let m = Module::regular(&Ring::new(&[6]).unwrap());
        let recs = classify_all(&m).unwrap();
        let min = minimal_classical_2_absorbing(&m).unwrap();
        let rep = classification_report(&m, &recs, &min);
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["ring"]["moduli"][0], 6);
        assert_eq!(v["submodules"].as_array().unwrap().len(), 3);
        assert!(classification_text(&rep).contains("minimal classical 2-absorbing: (0)"));
    }
}
