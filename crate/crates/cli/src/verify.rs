use std::fmt::Write as _;

use kecrit_core::generate::all_graphs;
use kecrit_core::suite::{theorem_suite, CheckRecord, Status, SuiteConfig, TheoremReport, Witness, CHECK_NAMES};
use kecrit_core::Graph;
use rayon::prelude::*;
use serde::Serialize;

use crate::CliError;

const CHUNK: usize = 8192;

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckSummary {
    pub check: &'static str,
    /// Graph counts by status.
    pub holds: u64,
    pub premise_not_met: u64,
    pub violation: u64,
    /// Instance counts summed over graphs.
    pub evaluated_instances: u64,
    pub premise_not_met_instances: u64,
    pub violation_instances: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationDump {
    pub index: usize,
    pub graph6: String,
    pub check: &'static str,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub graphs: usize,
    pub graphs_with_violations: usize,
    pub seed: u64,
    pub checks: Vec<CheckSummary>,
    pub violations: Vec<ViolationDump>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reports: Option<Vec<TheoremReport>>,
}

impl VerifySummary {
    fn new(seed: u64, keep_reports: bool) -> Self {
        Self {
            graphs: 0,
            graphs_with_violations: 0,
            seed,
            checks: CHECK_NAMES.iter().map(|&check| CheckSummary { check, ..Default::default() }).collect(),
            violations: Vec::new(),
            reports: keep_reports.then(Vec::new),
        }
    }

    fn absorb(&mut self, report: TheoremReport) {
        let index = self.graphs;
        self.graphs += 1;
        if report.has_violation() {
            self.graphs_with_violations += 1;
        }
        for (summary, record) in self.checks.iter_mut().zip(&report.checks) {
            debug_assert_eq!(summary.check, record.check);
            match record.status {
                Status::Holds => summary.holds += 1,
                Status::PremiseNotMet => summary.premise_not_met += 1,
                Status::Violation => summary.violation += 1,
            }
            summary.evaluated_instances += record.evaluated;
            summary.premise_not_met_instances += record.premise_not_met;
            summary.violation_instances += record.violations;
        }
        self.violations.extend(report.violations().map(|r: &CheckRecord| ViolationDump {
            index,
            graph6: report.graph6.clone(),
            check: r.check,
            witness: r.witness.clone(),
        }));
        if let Some(reports) = &mut self.reports {
            reports.push(report);
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = CHECK_NAMES.iter().map(|n| n.len()).max().unwrap_or(0);
        writeln!(out, "{:width$}  {:>8} {:>16} {:>9} {:>12}", "check", "holds", "premise-not-met", "VIOLATION", "instances").unwrap();
        for c in &self.checks {
            writeln!(
                out,
                "{:width$}  {:>8} {:>16} {:>9} {:>12}",
                c.check, c.holds, c.premise_not_met, c.violation, c.evaluated_instances
            )
            .unwrap();
        }
        for v in &self.violations {
            writeln!(out, "\nVIOLATION {} on graph #{} graph6 {}", v.check, v.index, v.graph6).unwrap();
            if let Some(w) = &v.witness {
                writeln!(out, "detail: {}", w.detail).unwrap();
                for (name, set) in &w.sets {
                    let names: Vec<String> = set.iter().map(|x| x.to_string()).collect();
                    writeln!(out, "{name} = {{{}}}", names.join(", ")).unwrap();
                }
                out.push_str(&w.edge_list);
            }
        }
        writeln!(
            out,
            "\ngraphs: {}, graphs with violations: {}, seed: {}",
            self.graphs, self.graphs_with_violations, self.seed
        )
        .unwrap();
        out
    }
}

pub enum Corpus {
    AllGraphs(usize),
    Graphs(Vec<Graph>),
}

fn run_chunk(graphs: &[Graph], cfg: &SuiteConfig) -> Result<Vec<TheoremReport>, CliError> {
    graphs
        .par_iter()
        .map(|g| theorem_suite(g, cfg).map_err(CliError::from_core))
        .collect()
}

/// Runs the suite over the corpus, keeping results in input order.
pub fn verify(corpus: Corpus, cfg: &SuiteConfig, keep_reports: bool) -> Result<VerifySummary, CliError> {
    let mut summary = VerifySummary::new(cfg.seed, keep_reports);
    match corpus {
        Corpus::Graphs(graphs) => {
            for chunk in graphs.chunks(CHUNK) {
                run_chunk(chunk, cfg)?.into_iter().for_each(|r| summary.absorb(r));
            }
        }
        Corpus::AllGraphs(n) => {
            let mut it = all_graphs(n).map_err(CliError::from_core)?;
            loop {
                let chunk: Vec<Graph> = it.by_ref().take(CHUNK).collect();
                if chunk.is_empty() {
                    break;
                }
                run_chunk(&chunk, cfg)?.into_iter().for_each(|r| summary.absorb(r));
            }
        }
    }
    Ok(summary)
}
