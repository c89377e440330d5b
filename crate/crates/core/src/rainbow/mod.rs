//! Rainbow disconnection: cut search, certificates, exact values, constructions and bounds.

mod construct;
mod cuts;
mod exact;
mod report;
mod rvd;

pub use construct::{min_bound_value, rd_upper_min_bound, rd_upper_three_halves, rd_upper_vertex_removal};
pub use cuts::{exists_rainbow_cut, verify_rd_coloring, RdCertificate, RdCertificateJson, Verification};
pub use exact::{find_rd_coloring, rd_at_most, rd_exact, Bracket, RdBudget, RdValue, WitnessSearch};
pub use report::{bound_report, BoundReport, ReportBudget, UpperBound};
pub use rvd::{
    exists_rainbow_vertex_cut, rd_vs_rvd_line_check, rvd_exact, verify_rvd_coloring, LineCheck, RvdBudget, RvdValue,
    VertexColoring,
};
