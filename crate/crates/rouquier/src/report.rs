//! Deterministic reports for the CLI: one JSON schema for all commands,
//! with sections omitted when a command does not produce them. Identical
//! inputs serialise to byte-identical output, and parsing an emitted report
//! and re-serialising it reproduces the bytes.

use serde::{Deserialize, Serialize};

use crate::descent::{ContainedHyperplanes, GroupBlocks};
use crate::verify::Check;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyperplanes: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aa: Option<Vec<AaRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifySummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupDesc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub de: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WeightsEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<i64>>,
}

/// One character with its invariants; values are exact rationals rendered
/// as `p/q` or a plain integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AaRow {
    pub label: String,
    pub a: String,
    #[serde(rename = "A")]
    pub big_a: String,
    pub a_plus_a: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifySummary {
    pub seed: u64,
    pub max_d: usize,
    pub max_r: u32,
    pub passed: usize,
    pub total: usize,
    pub checks: Vec<CheckRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            group: None,
            weights: None,
            route: None,
            hyperplanes: None,
            blocks: None,
            aa: None,
            verify: None,
        }
    }

    /// Fill the block/route/hyperplane/aa sections from a pipeline result.
    pub fn with_group_blocks(mut self, g: &GroupBlocks) -> Self {
        self.route = Some(g.route.to_string());
        self.hyperplanes = Some(g.hyperplanes.rendered());
        let mut blocks: Vec<Vec<String>> = g
            .blocks
            .blocks()
            .iter()
            .map(|b| {
                let mut rendered: Vec<String> = b.iter().map(|l| l.to_string()).collect();
                rendered.sort();
                rendered
            })
            .collect();
        blocks.sort();
        self.blocks = Some(blocks);
        self.aa = g.aa.as_ref().map(|rows| {
            rows.iter()
                .map(|entry| AaRow {
                    label: entry.label.to_string(),
                    a: entry.a.to_string(),
                    big_a: entry.big_a.to_string(),
                    a_plus_a: (entry.a + entry.big_a).to_string(),
                })
                .collect()
        });
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// Plain-text rendering, same information as the JSON.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("command: {}", self.command));
        if let Some(g) = &self.group {
            let desc = match (&g.family, g.de, g.e, g.r, g.d) {
                (Some(fam), _, _, _, Some(d)) => format!("{fam} family, d = {d}"),
                (_, Some(de), Some(e), Some(r), _) => format!("G({de},{e},{r})"),
                (_, Some(de), None, Some(r), _) => format!("G({de},1,{r})"),
                _ => "unspecified".into(),
            };
            push(&mut out, format!("group: {desc}"));
        }
        if let Some(w) = &self.weights {
            let mut parts = Vec::new();
            if let Some(m) = &w.m {
                parts.push(format!("m = {m:?}"));
            }
            if let Some(n) = w.n {
                parts.push(format!("n = {n}"));
            }
            if let Some(a) = &w.a {
                parts.push(format!("a = {a:?}"));
            }
            if let Some(b) = &w.b {
                parts.push(format!("b = {b:?}"));
            }
            if let Some(c) = &w.c {
                parts.push(format!("c = {c:?}"));
            }
            push(&mut out, format!("weights: {}", parts.join(", ")));
        }
        if let Some(route) = &self.route {
            push(&mut out, format!("route: {route}"));
        }
        if let Some(hs) = &self.hyperplanes {
            push(&mut out, format!("hyperplanes ({}):", hs.len()));
            for h in hs {
                push(&mut out, format!("  {h}"));
            }
        }
        if let Some(blocks) = &self.blocks {
            push(&mut out, format!("blocks ({}):", blocks.len()));
            for b in blocks {
                push(&mut out, format!("  {{ {} }}", b.join(", ")));
            }
        }
        if let Some(aa) = &self.aa {
            push(&mut out, "a/A table:".into());
            for row in aa {
                push(
                    &mut out,
                    format!(
                        "  {}: a = {}, A = {}, a+A = {}",
                        row.label, row.a, row.big_a, row.a_plus_a
                    ),
                );
            }
        }
        if let Some(v) = &self.verify {
            for check in &v.checks {
                let status = if check.passed { "PASS" } else { "FAIL" };
                push(&mut out, format!("{status} {} ({})", check.name, check.detail));
            }
            push(
                &mut out,
                format!(
                    "passed {}/{} checks (seed {}, max-d {}, max-r {})",
                    v.passed, v.total, v.seed, v.max_d, v.max_r
                ),
            );
        }
        out
    }
}

impl VerifySummary {
    pub fn from_checks(seed: u64, max_d: usize, max_r: u32, checks: &[Check]) -> Self {
        VerifySummary {
            seed,
            max_d,
            max_r,
            passed: checks.iter().filter(|c| c.passed).count(),
            total: checks.len(),
            checks: checks
                .iter()
                .map(|c| CheckRow {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

/// Echo helper for the `G(de,e,r)` commands.
pub fn group_desc(de: usize, e: usize, r: u32) -> GroupDesc {
    GroupDesc {
        de: Some(de),
        e: Some(e),
        r: Some(r),
        family: None,
        d: None,
    }
}

/// Echo helper for rank-2 direct mode.
pub fn rank2_desc(d: usize) -> GroupDesc {
    GroupDesc {
        de: None,
        e: None,
        r: None,
        family: Some("rank2".into()),
        d: Some(d),
    }
}

pub fn hyperplanes_of(contained: &ContainedHyperplanes) -> Vec<String> {
    contained.rendered()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::{blocks_for_group, GroupParams};

    #[test]
    fn json_round_trip_is_byte_identical() {
        let g = blocks_for_group(GroupParams::new(2, 2, 2).unwrap(), &[0], 1).unwrap();
        let mut report = Report::new("blocks").with_group_blocks(&g);
        report.group = Some(group_desc(2, 2, 2));
        report.weights = Some(WeightsEcho {
            m: Some(vec![0]),
            n: Some(1),
            a: None,
            b: None,
            c: None,
        });
        let json = report.to_json();
        let parsed: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn blocks_render_sorted_by_least_label() {
        let g = blocks_for_group(GroupParams::new(2, 1, 2).unwrap(), &[0, 0], 1).unwrap();
        let report = Report::new("blocks").with_group_blocks(&g);
        let blocks = report.blocks.unwrap();
        assert!(!blocks.is_empty());
        let firsts: Vec<&String> = blocks.iter().map(|b| &b[0]).collect();
        let mut sorted = firsts.clone();
        sorted.sort();
        assert_eq!(firsts, sorted);
    }
}
