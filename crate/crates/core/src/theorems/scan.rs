//! Batch scan of a graph corpus against the λ⁺ + 1 upper bound and the results that imply it.

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::is_overfull;
use crate::connectivity::upper_edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::rainbow::{rd_at_most, rd_exact, Bracket, RdBudget, WitnessSearch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// Compute rd exactly, falling back to a λ⁺ + 1 witness search past the budget.
    Exact,
    /// Only look for a coloring with λ⁺ + 1 colors.
    Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub mode: ScanMode,
    pub budget: RdBudget,
    /// Worker threads; 0 uses rayon's default.
    pub workers: usize,
    pub corpus: String,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { mode: ScanMode::Exact, budget: RdBudget::default(), workers: 0, corpus: String::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// λ⁺ ≤ rd.
    LowerBound,
    /// rd ≤ λ⁺ + 1.
    Conjecture,
    /// Δ ≤ 3 ⇒ rd ≤ λ⁺ + 1.
    SubcubicBound,
    /// Δ ≥ n − 3 ⇒ rd ≤ λ⁺ + 1.
    HighDegreeBound,
    /// n ≤ 7 ⇒ rd ≤ λ⁺ + 1.
    SmallOrderBound,
    /// λ⁺ = Δ ⇒ rd ≤ λ⁺ + 1.
    FullConnectivityBound,
    /// Overfull ⇒ λ⁺ = Δ and rd ≤ λ⁺ + 1.
    OverfullBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub applies: bool,
    /// `None` when the record is unresolved.
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanStatus {
    Exact,
    Witness,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub lambda_plus: usize,
    pub max_degree: usize,
    pub overfull: bool,
    pub status: ScanStatus,
    pub rd: Bracket,
    pub claims: Vec<ClaimOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub claim: Claim,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub corpus: String,
    pub graphs: usize,
    pub exact: usize,
    pub witness: usize,
    pub unresolved: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub violations: Vec<Violation>,
    pub summary: ScanSummary,
}

impl ScanReport {
    /// One JSON object per record, then the summary object with its violations.
    pub fn to_json_lines(&self) -> String {
        #[derive(Serialize)]
        struct Tail<'a> {
            summary: &'a ScanSummary,
            violations: &'a [Violation],
        }
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&Tail { summary: &self.summary, violations: &self.violations }).expect("summary serializes"));
        out.push('\n');
        out
    }
}

fn scan_one(index: usize, g: &Graph, options: &ScanOptions) -> Result<ScanRecord> {
    g.require_simple("conjecture_scan")?;
    g.require_connected("conjecture_scan")?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let lambda_plus = if n < 2 { 0 } else { upper_edge_connectivity(g)?.value };
    let delta = g.max_degree();
    let target = lambda_plus + 1;

    let (status, rd) = match options.mode {
        ScanMode::Exact => {
            let value = rd_exact(g, &options.budget)?;
            match value.bracket() {
                (lo, hi) if lo == hi => (ScanStatus::Exact, (lo, hi)),
                (lo, hi) if hi <= target => (ScanStatus::Witness, (lo, hi)),
                (lo, hi) => witness_step(g, target, lo.max(lambda_plus), hi, &options.budget)?,
            }
        }
        ScanMode::Witness => witness_step(g, target, lambda_plus, usize::MAX, &options.budget)?,
    };

    let upper_ok = match status {
        ScanStatus::Unresolved => None,
        _ if rd.1 <= target => Some(true),
        _ if rd.0 > target => Some(false),
        _ => None,
    };
    let exact = status == ScanStatus::Exact;
    let overfull = is_overfull(g)?;
    let implication = |claim, applies: bool| ClaimOutcome { claim, applies, holds: if applies { upper_ok } else { Some(true) } };
    let claims = vec![
        ClaimOutcome { claim: Claim::LowerBound, applies: exact, holds: Some(!exact || lambda_plus <= rd.0) },
        ClaimOutcome { claim: Claim::Conjecture, applies: true, holds: upper_ok },
        implication(Claim::SubcubicBound, delta <= 3),
        implication(Claim::HighDegreeBound, delta + 3 >= n),
        implication(Claim::SmallOrderBound, n <= 7),
        implication(Claim::FullConnectivityBound, lambda_plus == delta),
        ClaimOutcome {
            claim: Claim::OverfullBound,
            applies: overfull,
            holds: if overfull { upper_ok.map(|ok| ok && lambda_plus == delta) } else { Some(true) },
        },
    ];
    Ok(ScanRecord {
        index,
        graph6: to_graph6(g)?,
        n,
        m,
        lambda_plus,
        max_degree: delta,
        overfull,
        status,
        rd: Bracket::from(rd),
        claims,
    })
}

/// Looks for a `target`-coloring; an infeasible search lifts the lower end past `target`.
fn witness_step(g: &Graph, target: usize, lower: usize, upper: usize, budget: &RdBudget) -> Result<(ScanStatus, (usize, usize))> {
    Ok(match rd_at_most(g, target, budget.max_nodes)? {
        WitnessSearch::Found(_) => (ScanStatus::Witness, (lower, upper.min(target))),
        WitnessSearch::Infeasible => (ScanStatus::Witness, (lower.max(target + 1), upper)),
        WitnessSearch::OutOfBudget => (ScanStatus::Unresolved, (lower, upper)),
    })
}

/// Scans every graph in parallel; records come back in input order.
pub fn conjecture_scan(graphs: &[Graph], options: &ScanOptions) -> Result<ScanReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start scan workers: {e}")))?;
    let records: Vec<ScanRecord> =
        pool.install(|| graphs.par_iter().enumerate().map(|(i, g)| scan_one(i, g, options)).collect::<Result<_>>())?;

    let mut violations = Vec::new();
    for r in &records {
        for c in r.claims.iter().filter(|c| c.holds == Some(false)) {
            violations.push(Violation {
                graph6: r.graph6.clone(),
                claim: c.claim,
                observed: format!("lambda_plus = {}, max_degree = {}, rd in {:?}", r.lambda_plus, r.max_degree, r.rd),
            });
        }
    }
    let count = |s: ScanStatus| records.iter().filter(|r| r.status == s).count();
    let summary = ScanSummary {
        corpus: options.corpus.clone(),
        graphs: records.len(),
        exact: count(ScanStatus::Exact),
        witness: count(ScanStatus::Witness),
        unresolved: count(ScanStatus::Unresolved),
        violations: violations.len(),
    };
    Ok(ScanReport { records, violations, summary })
}
