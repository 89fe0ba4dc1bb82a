//! Fibers, fiber walks, minimal Markov bases, indispensable binomials and
//! the strong-robustness verdict.

mod markov;
mod report;
mod walk;

pub use markov::{
    indispensable, indispensable_from, indispensable_oracle, is_minimal_generating, minimal_markov_basis, Minimality,
};
pub use report::{analyze_graph, moves_json, strongly_robust, RobustnessReport, Status, REPORT_VERSION};
pub use walk::{fiber, in_ideal, Fiber};
