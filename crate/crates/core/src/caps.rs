use serde::{Deserialize, Serialize};

/// Resource limits shared by every enumeration in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Simple cycles enumerated per graph.
    pub cycles: usize,
    /// Candidate connecting paths examined by the structural checker.
    pub paths: usize,
    /// Points per fiber (or per fiber walk).
    pub fiber: usize,
    /// Working-set size of the Graver completion.
    pub graver: usize,
    /// Column subsets examined while computing circuits.
    pub circuit_subsets: usize,
    /// Box points enumerated by the brute-force Graver oracle.
    pub brute_force_points: usize,
    /// Spanning choices enumerated by the indispensable-binomial oracle.
    pub oracle_choices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cycles: 10_000,
            paths: 100_000,
            fiber: 200_000,
            graver: 1_000_000,
            circuit_subsets: 1_000_000,
            brute_force_points: 10_000_000,
            oracle_choices: 100_000,
        }
    }
}
