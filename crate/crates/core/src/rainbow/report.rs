use serde::Serialize;

use super::construct::{min_bound_value, rd_upper_min_bound, rd_upper_three_halves};
use super::exact::{rd_exact, Bracket, RdBudget};
use crate::coloring::{chromatic_index_exact, shannon_proper_coloring, vizing_proper_coloring, EdgeColoringJson, SearchBudget};
use crate::connectivity::{edge_connectivity, upper_edge_connectivity};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReportBudget {
    pub chromatic: SearchBudget,
    pub rd: RdBudget,
}

/// One upper bound on rd(G) with the coloring that realises it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub label: &'static str,
    /// The value of the bound's formula.
    pub value: usize,
    /// Colors used by the verified witness; never more than `value`.
    pub witness_colors: usize,
    pub witness: EdgeColoringJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub lambda: usize,
    pub lambda_plus: usize,
    pub max_degree: usize,
    pub chromatic_index: Bracket,
    pub upper_bounds: Vec<UpperBound>,
    pub rd: Bracket,
}

impl BoundReport {
    /// The smallest bound value in the report.
    pub fn best_upper(&self) -> usize {
        self.upper_bounds.iter().map(|b| b.value).min().unwrap_or(0)
    }
}

/// λ, λ⁺, Δ, χ′ and every constructive upper bound, each with a verified witness, plus rd.
pub fn bound_report(g: &Graph, budget: &ReportBudget) -> Result<BoundReport> {
    g.require_connected("bound_report")?;
    let lambda_plus = if g.vertex_count() < 2 { 0 } else { upper_edge_connectivity(g)?.value };
    let delta = g.max_degree();
    let mut upper_bounds = Vec::new();
    let mut push = |label, value, witness: crate::coloring::EdgeColoring| {
        upper_bounds.push(UpperBound { label, value, witness_colors: witness.num_colors(), witness: witness.to_json(g) });
    };

    let chi = chromatic_index_exact(g, budget.chromatic);
    if g.is_simple() {
        push("delta_plus_one", delta + 1, vizing_proper_coloring(g)?);
    }
    let (_, chi_upper) = chi.bracket();
    let chi_witness = match chi.witness() {
        Some(w) => w.clone(),
        None if g.is_simple() => vizing_proper_coloring(g)?,
        None => shannon_proper_coloring(g)?,
    };
    push("chromatic_index", chi_upper, chi_witness);
    if g.edge_count() > 0 {
        push("three_halves_lambda_plus", 3 * lambda_plus / 2, rd_upper_three_halves(g)?);
    }
    if g.is_simple() && g.vertex_count() >= 2 {
        push("min_bound", min_bound_value(g)?, rd_upper_min_bound(g)?);
    }

    let rd = rd_exact(g, &budget.rd)?;
    Ok(BoundReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        lambda: edge_connectivity(g),
        lambda_plus,
        max_degree: delta,
        chromatic_index: chi.bracket().into(),
        upper_bounds,
        rd: rd.bracket().into(),
    })
}
