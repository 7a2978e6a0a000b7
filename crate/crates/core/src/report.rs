//! Serializable reports for the command-line and language bindings.
//!
//! The explanation report carries, per class: the cause in concrete syntax,
//! its AST, the order-condition flag, the member traces, and the full
//! actual-cause report with witnesses. Output is deterministic: identical
//! inputs serialize byte-identically.

use serde::Serialize;

use crate::causality::{AcReport, CausalityAnalysis};
use crate::eol::InfiniteEol;
use crate::model::{LassoExecution, TransitionSystem};
use crate::search::TraceUniverse;

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LassoJson {
    pub init: String,
    /// Steps as `[action, state]` pairs.
    pub stem: Vec<[String; 2]>,
    #[serde(rename = "loop")]
    pub cycle: Vec<[String; 2]>,
}

impl LassoJson {
    pub fn of(ts: &TransitionSystem, lasso: &LassoExecution) -> LassoJson {
        let step = |s: &crate::model::Step| {
            [
                ts.action_name(s.action).to_string(),
                ts.state_name(s.target).to_string(),
            ]
        };
        LassoJson {
            init: ts.state_name(lasso.init()).to_string(),
            stem: lasso.stem().iter().map(step).collect(),
            cycle: lasso.cycle().iter().map(step).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AcReportJson {
    pub ac1: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ac1_witness: Option<LassoJson>,
    pub ac21: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ac21_witness: Option<LassoJson>,
    pub ac22: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ac22_counterwitness: Option<LassoJson>,
    pub ac3: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ac3_smaller: Option<String>,
    pub oc: bool,
}

impl AcReportJson {
    fn of(ts: &TransitionSystem, universe: &TraceUniverse, report: &AcReport) -> AcReportJson {
        AcReportJson {
            ac1: report.ac1,
            ac1_witness: report
                .ac1_witness
                .map(|i| LassoJson::of(ts, &universe.bad[i])),
            ac21: report.ac21,
            ac21_witness: report
                .ac21_witness
                .map(|i| LassoJson::of(ts, &universe.good[i])),
            ac22: report.ac22,
            ac22_counterwitness: report
                .ac22_counterwitness
                .map(|i| LassoJson::of(ts, &universe.good[i])),
            ac3: report.ac3,
            ac3_smaller: report.ac3_smaller.as_ref().map(|f| f.to_string()),
            oc: report.oc,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassJson {
    pub cause: String,
    pub cause_ast: InfiniteEol,
    pub oc: bool,
    /// The ordered form, present when order was found non-causal and the
    /// unordered variant is emitted instead.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordered_cause: Option<String>,
    pub overlapping: bool,
    pub members: Vec<LassoJson>,
    pub ac_report: AcReportJson,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StatsJson {
    pub lassos: usize,
    pub bad: usize,
    pub good: usize,
    pub refinements: usize,
    pub generalizations: usize,
    pub escalations: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MetaJson {
    /// Some emitted formula carries negations or guards, so existential
    /// searches were decided within the default unfold budget.
    pub budget_bounded_semantics: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExplainReport {
    pub property: String,
    pub verdict: String,
    pub classes: Vec<ClassJson>,
    pub stats: StatsJson,
    pub meta: MetaJson,
}

impl ExplainReport {
    pub fn new(
        ts: &TransitionSystem,
        universe: &TraceUniverse,
        analysis: &CausalityAnalysis,
        property_text: &str,
    ) -> ExplainReport {
        let classes: Vec<ClassJson> = analysis
            .classes
            .iter()
            .map(|c| ClassJson {
                cause: c.cause.to_string(),
                cause_ast: c.cause.clone(),
                oc: c.oc,
                ordered_cause: c.ordered_cause.as_ref().map(|f| f.to_string()),
                overlapping: c.overlapping,
                members: c
                    .members
                    .iter()
                    .map(|i| LassoJson::of(ts, &universe.bad[*i]))
                    .collect(),
                ac_report: AcReportJson::of(ts, universe, &c.report),
            })
            .collect();
        let budget_bounded = analysis.classes.iter().any(|c| c.cause.budget_sensitive());
        ExplainReport {
            property: property_text.to_string(),
            verdict: if universe.bad.is_empty() {
                "holds".to_string()
            } else {
                "violated".to_string()
            },
            classes,
            stats: StatsJson {
                lassos: analysis.stats.lassos,
                bad: analysis.stats.bad,
                good: analysis.stats.good,
                refinements: analysis.stats.refinements,
                generalizations: analysis.stats.generalizations,
                escalations: analysis.stats.escalations,
            },
            meta: MetaJson {
                budget_bounded_semantics: budget_bounded,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One block per class: cause, order flag, member count, and up to
    /// three sample members.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("property: {}\n", self.property));
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out.push_str(&format!(
            "traces: {} ({} bad, {} good)\n",
            self.stats.lassos, self.stats.bad, self.stats.good
        ));
        for (i, class) in self.classes.iter().enumerate() {
            out.push_str(&format!("\ncause {}: {}\n", i + 1, class.cause));
            if let Some(ordered) = &class.ordered_cause {
                out.push_str(&format!("  ordered form: {ordered}\n"));
            }
            out.push_str(&format!("  order causal: {}\n", class.oc));
            if class.overlapping {
                out.push_str("  note: shares its member set with another cause\n");
            }
            out.push_str(&format!("  members: {}\n", class.members.len()));
            for member in class.members.iter().take(3) {
                out.push_str(&format!("    {}\n", render_lasso(member)));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub property: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LassoJson>,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        match &self.witness {
            None => format!("property: {}\nverdict: {}\n", self.property, self.verdict),
            Some(w) => format!(
                "property: {}\nverdict: {}\nwitness: {}\n",
                self.property,
                self.verdict,
                render_lasso(w)
            ),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyCheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub property: String,
    pub passed: bool,
    pub checks: Vec<VerifyCheckJson>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("property: {}\n", self.property);
        for check in &self.checks {
            out.push_str(&format!(
                "{}: {} ({})\n",
                check.name,
                if check.passed { "ok" } else { "FAILED" },
                check.detail
            ));
        }
        out.push_str(&format!(
            "verification: {}\n",
            if self.passed { "passed" } else { "FAILED" }
        ));
        out
    }
}

fn render_lasso(l: &LassoJson) -> String {
    let stem: Vec<&str> = l.stem.iter().map(|s| s[0].as_str()).collect();
    let cycle: Vec<&str> = l.cycle.iter().map(|s| s[0].as_str()).collect();
    format!("{} ({})^w", stem.join(" "), cycle.join(" "))
}
