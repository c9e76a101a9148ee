//! Structured (JSON) reports and their text rendering.
//!
//! Indices are 1-based throughout. Numbers are stored at full precision; the
//! text form rounds them to `display_precision` decimals.

use std::fmt::Write as _;

use lukfri::{Candidate, IndexSets, Objective, Selector, SolveReport, StageTimings};
use serde::{Deserialize, Serialize};

pub const DISPLAY_PRECISION: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateEntry {
    /// `e(i)` per row, 1-based; `null` for vacuous rows.
    pub selector: Vec<Option<usize>>,
    pub point: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellEntry {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

/// Stage durations in seconds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingsEntry {
    pub feasibility: f64,
    pub enumeration: f64,
    pub pruning: f64,
    pub selection: f64,
    pub total: f64,
}

impl From<&StageTimings> for TimingsEntry {
    fn from(t: &StageTimings) -> Self {
        TimingsEntry {
            feasibility: t.feasibility.as_secs_f64(),
            enumeration: t.enumeration.as_secs_f64(),
            pruning: t.pruning.as_secs_f64(),
            selection: t.selection.as_secs_f64(),
            total: t.total().as_secs_f64(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReportFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub feasible: bool,
    pub empty_rows: Vec<usize>,
    pub vacuous_rows: Vec<usize>,
    #[serde(rename = "J")]
    pub index_sets: Vec<Vec<usize>>,
    #[serde(rename = "E_size")]
    pub e_size: u64,
    pub objective: String,
    pub pruned: bool,
    pub maximum_solution: Option<Vec<f64>>,
    pub minimal_solutions: Option<Vec<CandidateEntry>>,
    pub optimizer: Option<CandidateEntry>,
    pub optimal_value: Option<f64>,
    pub cells: Option<Vec<CellEntry>>,
    pub display_precision: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<TimingsEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReportFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub feasible: bool,
    pub empty_rows: Vec<usize>,
    pub vacuous_rows: Vec<usize>,
    #[serde(rename = "J")]
    pub index_sets: Vec<Vec<usize>>,
    /// `|E|`, or `null` beyond `u64`.
    #[serde(rename = "E_size")]
    pub e_size: Option<u64>,
    pub maximum_solution: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerateReportFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "E_size")]
    pub e_size: u64,
    pub candidates: Vec<CandidateEntry>,
    pub display_precision: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReportFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub feasible: bool,
    pub grid_points: u64,
    pub objective: String,
    pub minimal_set_agrees: bool,
    pub optimum_agrees: bool,
    pub solver_minimal: Vec<Vec<f64>>,
    pub oracle_minimal: Vec<Vec<f64>>,
    pub solver_value: Option<f64>,
    pub oracle_value: Option<f64>,
    pub display_precision: usize,
}

impl VerifyReportFile {
    pub fn agrees(&self) -> bool {
        self.minimal_set_agrees && self.optimum_agrees
    }
}

pub fn selector_entry(s: &Selector) -> Vec<Option<usize>> {
    s.choices().iter().map(|c| c.map(|j| j + 1)).collect()
}

pub fn candidate_entry(c: &Candidate, value: Option<f64>) -> CandidateEntry {
    CandidateEntry {
        selector: selector_entry(&c.selector),
        point: c.point.coords().to_vec(),
        value,
    }
}

pub fn index_sets_entry(idx: &IndexSets) -> Vec<Vec<usize>> {
    idx.sets()
        .iter()
        .map(|s| s.iter().map(|j| j + 1).collect())
        .collect()
}

pub fn vacuous_entry(idx: &IndexSets) -> Vec<usize> {
    (0..idx.rows())
        .filter(|&i| idx.is_vacuous(i))
        .map(|i| i + 1)
        .collect()
}

impl SolveReportFile {
    pub fn new(
        name: Option<String>,
        report: &SolveReport,
        objective: &dyn Objective,
        with_timings: bool,
    ) -> Self {
        let pruned = report.pruned && report.verdict.feasible;
        SolveReportFile {
            name,
            feasible: report.verdict.feasible,
            empty_rows: report.verdict.empty_rows.iter().map(|i| i + 1).collect(),
            vacuous_rows: vacuous_entry(&report.index_sets),
            index_sets: index_sets_entry(&report.index_sets),
            e_size: report.candidates_enumerated,
            objective: objective.name().to_string(),
            pruned: report.pruned,
            maximum_solution: report
                .verdict
                .maximum_solution
                .as_ref()
                .map(|p| p.coords().to_vec()),
            minimal_solutions: pruned.then(|| {
                report
                    .minimal_solutions
                    .iter()
                    .map(|c| candidate_entry(c, Some(objective.evaluate(c.point.coords()))))
                    .collect()
            }),
            optimizer: report.optimizer.as_ref().map(|c| candidate_entry(c, None)),
            optimal_value: report.optimal_value.map(|v| v.value()),
            cells: pruned.then(|| {
                report
                    .cells
                    .iter()
                    .map(|c| CellEntry {
                        lower: c.lower.coords().to_vec(),
                        upper: c.upper.coords().to_vec(),
                    })
                    .collect()
            }),
            display_precision: DISPLAY_PRECISION,
            timings: with_timings.then(|| TimingsEntry::from(&report.timings)),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

pub fn num(v: f64) -> String {
    format!("{v:.DISPLAY_PRECISION$}")
}

pub fn vector(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|&v| num(v)).collect();
    format!("[{}]", parts.join(", "))
}

pub fn selector_text(s: &[Option<usize>]) -> String {
    let parts: Vec<String> = s
        .iter()
        .map(|c| c.map_or_else(|| "-".to_string(), |j| j.to_string()))
        .collect();
    format!("[{}]", parts.join(", "))
}

fn write_index_sets(out: &mut String, sets: &[Vec<usize>], vacuous: &[usize]) {
    for (k, set) in sets.iter().enumerate() {
        let items: Vec<String> = set.iter().map(usize::to_string).collect();
        let tag = if vacuous.contains(&(k + 1)) {
            "  (vacuous)"
        } else {
            ""
        };
        let _ = writeln!(out, "J({}) = {{{}}}{tag}", k + 1, items.join(", "));
    }
}

fn write_header(out: &mut String, name: &Option<String>) {
    if let Some(n) = name {
        let _ = writeln!(out, "instance: {n}");
    }
}

fn rows_text(rows: &[usize]) -> String {
    rows.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn check_text(r: &CheckReportFile) -> String {
    let mut out = String::new();
    write_header(&mut out, &r.name);
    write_index_sets(&mut out, &r.index_sets, &r.vacuous_rows);
    if r.feasible {
        let _ = writeln!(
            out,
            "feasible: yes (the all-ones vector is the maximum solution)"
        );
        match r.e_size {
            Some(e) => {
                let _ = writeln!(out, "|E| = {e}");
            }
            None => {
                let _ = writeln!(out, "|E| exceeds 2^64");
            }
        }
    } else {
        let _ = writeln!(
            out,
            "feasible: no (J(i) is empty for rows {})",
            rows_text(&r.empty_rows)
        );
    }
    out
}

pub fn solve_text(r: &SolveReportFile) -> String {
    let mut out = String::new();
    write_header(&mut out, &r.name);
    write_index_sets(&mut out, &r.index_sets, &r.vacuous_rows);
    if !r.feasible {
        let _ = writeln!(
            out,
            "feasible: no (J(i) is empty for rows {})",
            rows_text(&r.empty_rows)
        );
        return out;
    }
    let _ = writeln!(out, "feasible: yes");
    let _ = writeln!(out, "|E| = {}", r.e_size);
    if let Some(minimal) = &r.minimal_solutions {
        let _ = writeln!(out, "minimal solutions: {}", minimal.len());
        for c in minimal {
            let value = c
                .value
                .map(|v| format!("  f = {}", num(v)))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "  e = {}  x = {}{value}",
                selector_text(&c.selector),
                vector(&c.point)
            );
        }
    }
    if let Some(cells) = &r.cells {
        let _ = writeln!(out, "cells: {}", cells.len());
        for c in cells {
            let _ = writeln!(out, "  [{}, {}]", vector(&c.lower), vector(&c.upper));
        }
    }
    if let Some(opt) = &r.optimizer {
        let _ = writeln!(out, "optimizer: e* = {}", selector_text(&opt.selector));
        let _ = writeln!(out, "  x* = {}", vector(&opt.point));
    }
    if let Some(v) = r.optimal_value {
        let _ = writeln!(out, "optimal value ({}): {}", r.objective, num(v));
    }
    if let Some(t) = &r.timings {
        let _ = writeln!(
            out,
            "timings (s): feasibility {:.6}, enumeration {:.6}, pruning {:.6}, selection {:.6}, total {:.6}",
            t.feasibility, t.enumeration, t.pruning, t.selection, t.total
        );
    }
    out
}

pub fn enumerate_text(r: &EnumerateReportFile) -> String {
    let mut out = String::new();
    write_header(&mut out, &r.name);
    for c in &r.candidates {
        let _ = writeln!(
            out,
            "e = {}  x(e) = {}",
            selector_text(&c.selector),
            vector(&c.point)
        );
    }
    let _ = writeln!(out, "|E| = {}", r.e_size);
    out
}

pub fn verify_text(r: &VerifyReportFile) -> String {
    let mut out = String::new();
    write_header(&mut out, &r.name);
    let verdict = |ok: bool| if ok { "agree" } else { "DISAGREE" };
    let _ = writeln!(out, "feasible: {}", if r.feasible { "yes" } else { "no" });
    let _ = writeln!(out, "lattice grid points: {}", r.grid_points);
    let _ = writeln!(
        out,
        "minimal set: {} (solver {}, oracle {})",
        verdict(r.minimal_set_agrees),
        r.solver_minimal.len(),
        r.oracle_minimal.len()
    );
    let value = |v: Option<f64>| v.map_or_else(|| "none".to_string(), num);
    let _ = writeln!(
        out,
        "optimum ({}): {} (solver {}, oracle {})",
        r.objective,
        verdict(r.optimum_agrees),
        value(r.solver_value),
        value(r.oracle_value)
    );
    out
}
