use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use super::markov::{indispensable_from, is_minimal_generating};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{main_theorem_hypothesis, StructureReport, WeightedOrientedGraph};
use crate::graver::{graver_basis_with_cap, GraverSet};
use crate::lattice::{null_dim, render_binomial, Move, ToricMatrix};
use crate::monomial::{theorem_hypothesis, MonomialHypothesis};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verdict,
    /// A cap was hit before the verdict could be decided.
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verdict => "verdict",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RobustnessReport {
    pub status: Status,
    pub inconclusive_reason: Option<String>,
    pub rows: usize,
    pub cols: usize,
    pub fingerprint: String,
    pub kernel_rank: usize,
    pub graver: Option<GraverSet>,
    pub indispensable: Option<GraverSet>,
    /// `None` when inconclusive.
    pub strongly_robust: Option<bool>,
    /// Graver elements that are not indispensable.
    pub dispensable_witnesses: Vec<Move>,
    /// Graver elements lying in the ideal of the other Graver elements.
    pub redundant_generators: Vec<Move>,
    pub hypothesis_results: Option<StructureReport>,
    pub monomial_hypothesis: Option<MonomialHypothesis>,
    /// Diagnostics that do not affect the verdict, such as a capped
    /// structural check.
    pub notes: Vec<String>,
    pub caps: Caps,
    pub elapsed: Duration,
}

impl RobustnessReport {
    fn inconclusive(a: &ToricMatrix, caps: &Caps, reason: &Error) -> Self {
        RobustnessReport {
            status: Status::Inconclusive,
            inconclusive_reason: Some(reason.to_string()),
            rows: a.rows(),
            cols: a.cols(),
            fingerprint: a.fingerprint(),
            kernel_rank: null_dim(a),
            graver: None,
            indispensable: None,
            strongly_robust: None,
            dispensable_witnesses: Vec::new(),
            redundant_generators: Vec::new(),
            hypothesis_results: None,
            monomial_hypothesis: None,
            notes: Vec::new(),
            caps: *caps,
            elapsed: Duration::ZERO,
        }
    }

    pub fn graver_size(&self) -> Option<usize> {
        self.graver.as_ref().map(GraverSet::len)
    }

    pub fn indispensable_size(&self) -> Option<usize> {
        self.indispensable.as_ref().map(GraverSet::len)
    }

    /// Machine-readable report. Keys are sorted; timings are left out so the
    /// document is identical across runs.
    pub fn to_json(&self, names: &[String]) -> Value {
        let moves = |set: &[Move]| moves_json(set, names);
        json!({
            "report_version": REPORT_VERSION,
            "status": self.status.as_str(),
            "inconclusive_reason": self.inconclusive_reason,
            "matrix": { "rows": self.rows, "cols": self.cols, "fingerprint": self.fingerprint },
            "kernel_rank": self.kernel_rank,
            "graver_size": self.graver_size(),
            "indispensable_size": self.indispensable_size(),
            "strongly_robust": self.strongly_robust,
            "graver": self.graver.as_ref().map(|g| moves(g.moves())),
            "indispensable": self.indispensable.as_ref().map(|g| moves(g.moves())),
            "dispensable_witnesses": moves(&self.dispensable_witnesses),
            "redundant_generators": moves(&self.redundant_generators),
            "hypothesis_results": self.hypothesis_results,
            "monomial_hypothesis": self.monomial_hypothesis,
            "notes": self.notes,
            "caps": self.caps,
        })
    }

    pub fn to_human(&self, names: &[String]) -> String {
        let mut out = String::new();
        let verdict = match self.strongly_robust {
            Some(true) => "yes",
            Some(false) => "no",
            None => "INCONCLUSIVE",
        };
        let size = |s: Option<usize>| s.map_or("-".to_string(), |n| n.to_string());
        let _ = writeln!(out, "matrix            {} x {}  ({})", self.rows, self.cols, self.fingerprint);
        let _ = writeln!(out, "kernel rank       {}", self.kernel_rank);
        let _ = writeln!(out, "graver size       {}", size(self.graver_size()));
        let _ = writeln!(out, "indispensable     {}", size(self.indispensable_size()));
        let _ = writeln!(out, "strongly robust   {verdict}");
        if let Some(reason) = &self.inconclusive_reason {
            let _ = writeln!(out, "reason            {reason}");
        }
        if let Some(h) = &self.hypothesis_results {
            let _ = writeln!(out, "every edge meets a degree-2 vertex   {}", h.every_edge_meets_degree2);
            let _ = writeln!(out, "cycles share a single vertex         {}", h.cycles_share_single_vertex);
            let _ = writeln!(out, "no two cycles share a path           {}", h.no_two_cycles_share_path);
            let _ = writeln!(out, "main theorem hypothesis              {}", h.main_theorem_hypothesis);
            for w in &h.witnesses {
                let edges: Vec<String> = w.edges.iter().map(|&e| names.get(e).cloned().unwrap_or_default()).collect();
                let _ = writeln!(out, "  witness {}: edges [{}] cycles {:?}", w.condition, edges.join(", "), w.cycles);
            }
        }
        if let Some(m) = &self.monomial_hypothesis {
            let _ = writeln!(out, "monomial hypothesis                  {}", m.holds);
        }
        let mut section = |title: &str, list: &[Move]| {
            if !list.is_empty() {
                let _ = writeln!(out, "{title}:");
                for m in list {
                    let text = render_binomial(m, names).unwrap_or_else(|_| m.to_string());
                    let _ = writeln!(out, "  {text}");
                }
            }
        };
        if let Some(g) = &self.graver {
            section("graver basis", g.moves());
        }
        section("dispensable", &self.dispensable_witnesses);
        section("redundant", &self.redundant_generators);
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(out, "elapsed           {:.3} s", self.elapsed.as_secs_f64());
        out
    }
}

/// Moves as `{"vector": [...], "binomial": "..."}` objects. Entries that do
/// not fit in an `i64` are written as strings.
pub fn moves_json(moves: &[Move], names: &[String]) -> Value {
    moves.iter().map(|m| move_json(m, names)).collect()
}

fn move_json(m: &Move, names: &[String]) -> Value {
    let entries: Value = match m.to_i64s() {
        Some(small) => small.into(),
        None => m.entries().iter().map(|x| Value::String(x.to_string())).collect(),
    };
    let binomial = render_binomial(m, names).unwrap_or_else(|_| m.to_string());
    json!({ "vector": entries, "binomial": binomial })
}

/// Decides whether the Graver basis of `a` equals its set of indispensable
/// binomials, cross-checking against the minimal-generation test.
///
/// Hitting a cap yields an inconclusive report rather than an error.
pub fn strongly_robust(a: &ToricMatrix, caps: &Caps) -> Result<RobustnessReport> {
    let started = Instant::now();
    let mut report = match decide(a, caps) {
        Ok(report) => report,
        Err(e) if e.is_cap() => RobustnessReport::inconclusive(a, caps, &e),
        Err(e) => return Err(e),
    };
    report.elapsed = started.elapsed();
    Ok(report)
}

fn decide(a: &ToricMatrix, caps: &Caps) -> Result<RobustnessReport> {
    let graver = graver_basis_with_cap(a, caps.graver)?;
    let indispensable = indispensable_from(a, &graver, caps)?;
    let minimality = is_minimal_generating(a, &graver, caps)?;
    if !indispensable.is_subset_of(&graver) {
        return Err(Error::EquivalenceViolation("an indispensable binomial is not primitive".into()));
    }
    let robust = indispensable.len() == graver.len();
    if robust != minimality.minimal {
        return Err(Error::EquivalenceViolation(format!(
            "graver = indispensable is {robust} but minimal generation is {}",
            minimality.minimal
        )));
    }
    Ok(RobustnessReport {
        status: Status::Verdict,
        inconclusive_reason: None,
        rows: a.rows(),
        cols: a.cols(),
        fingerprint: a.fingerprint(),
        kernel_rank: null_dim(a),
        dispensable_witnesses: graver.difference(&indispensable),
        redundant_generators: minimality.redundant,
        graver: Some(graver),
        indispensable: Some(indispensable),
        strongly_robust: Some(robust),
        hypothesis_results: None,
        monomial_hypothesis: None,
        notes: Vec::new(),
        caps: *caps,
        elapsed: Duration::ZERO,
    })
}

/// [`strongly_robust`] on the incidence matrix of `g`, together with the
/// structural and monomial hypothesis checks.
pub fn analyze_graph(g: &WeightedOrientedGraph, caps: &Caps) -> Result<RobustnessReport> {
    let started = Instant::now();
    let mut report = strongly_robust(&g.incidence_matrix(), caps)?;
    match main_theorem_hypothesis(g, caps) {
        Ok(h) => report.hypothesis_results = Some(h),
        Err(e) if e.is_cap() => report.notes.push(format!("structural checks skipped: {e}")),
        Err(e) => return Err(e),
    }
    if let Ok(ideal) = g.edge_ideal() {
        report.monomial_hypothesis = Some(theorem_hypothesis(&ideal));
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::edge_names;

    #[test]
    fn two_triangles_are_robust() {
        let g = WeightedOrientedGraph::new(vec![1; 5], vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let report = analyze_graph(&g, &Caps::default()).unwrap();
        assert_eq!(report.status, Status::Verdict);
        assert_eq!(report.strongly_robust, Some(true));
        assert_eq!(report.graver_size(), Some(1));
        assert!(report.dispensable_witnesses.is_empty());
        assert!(report.hypothesis_results.as_ref().unwrap().main_theorem_hypothesis);
        let names = edge_names(6);
        let json = report.to_json(&names);
        assert_eq!(json["report_version"], 1);
        assert_eq!(json["graver"][0]["binomial"], "e1*e3*e5 - e2*e4*e6");
        assert!(report.to_human(&names).contains("strongly robust   yes"));
    }

    #[test]
    fn one_row_is_not_robust() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 1, 2]]).unwrap();
        let report = strongly_robust(&a, &Caps::default()).unwrap();
        assert_eq!(report.strongly_robust, Some(false));
        assert_eq!(report.dispensable_witnesses.len(), 3);
        assert!(!report.redundant_generators.is_empty());
    }

    #[test]
    fn caps_give_inconclusive() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 1, 2]]).unwrap();
        let caps = Caps { fiber: 1, ..Caps::default() };
        let report = strongly_robust(&a, &caps).unwrap();
        assert_eq!(report.status, Status::Inconclusive);
        assert_eq!(report.strongly_robust, None);
        assert!(report.inconclusive_reason.is_some());
        assert_eq!(report.to_json(&edge_names(3))["status"], "inconclusive");
    }

    #[test]
    fn json_is_deterministic() {
        let a = ToricMatrix::from_rows(&[vec![1i64, 2, 3]]).unwrap();
        let names = edge_names(3);
        let first = serde_json::to_string(&strongly_robust(&a, &Caps::default()).unwrap().to_json(&names)).unwrap();
        let second = serde_json::to_string(&strongly_robust(&a, &Caps::default()).unwrap().to_json(&names)).unwrap();
        assert_eq!(first, second);
    }
}
