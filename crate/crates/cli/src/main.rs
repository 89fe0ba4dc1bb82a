use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wog_toric::caps::Caps;
use wog_toric::error::Error;
use wog_toric::fiber::{
    analyze_graph, indispensable_from, indispensable_oracle, moves_json, strongly_robust, RobustnessReport, Status,
    REPORT_VERSION,
};
use wog_toric::graph::{every_edge_meets_degree_two, main_theorem_hypothesis, WeightedOrientedGraph};
use wog_toric::graver::{
    brute_force_graver_with_cap, certificate_check, circuits_with_cap, graver_basis_with_cap, GraverSet,
};
use wog_toric::lattice::{edge_names, render_binomial, ToricMatrix};
use wog_toric::monomial::{theorem_hypothesis, MonomialIdealPresentation};
use wog_toric::random::{random_matrix, seeded};
use wog_toric::search::{search_counterexample, SearchFamily, SearchOutcome, SearchParams};

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_NOT_FOUND: u8 = 4;

/// Toric ideals of weighted oriented graphs: Graver bases, indispensable
/// binomials and strong robustness.
#[derive(Debug, Parser)]
#[command(name = "wogtoric", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Maximum number of points in a single fiber.
    #[arg(long, global = true, value_name = "N", value_parser = positive)]
    cap_fiber: Option<usize>,
    /// Maximum number of simple cycles enumerated per graph.
    #[arg(long, global = true, value_name = "N", value_parser = positive)]
    cap_cycles: Option<usize>,
    /// Write the machine-readable report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Format of the report printed on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: Graver basis, indispensable binomials, verdict and
    /// structural checks.
    Analyze { input: PathBuf },
    /// Graver basis.
    Graver { input: PathBuf },
    /// Circuits.
    Circuits { input: PathBuf },
    /// Indispensable binomials.
    Indispensable { input: PathBuf },
    /// Strong-robustness verdict.
    CheckRobust { input: PathBuf },
    /// Structural hypotheses of a graph or monomial ideal.
    CheckHypotheses { input: PathBuf },
    /// Compare the fast algorithms with the brute-force oracles, on a file or
    /// on seeded random matrices (`random`).
    OracleVerify {
        /// Input file, or `random`.
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random matrices.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 5, value_parser = positive)]
        max_rows: usize,
        #[arg(long, default_value_t = 6, value_parser = positive)]
        max_cols: usize,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_entry: u64,
    },
    /// Seeded search for a graph whose toric ideal is not strongly robust.
    SearchCounterexample {
        /// cycle-with-chord-path, bouquet or single-cycle.
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_weight: u64,
        #[arg(long, default_value_t = 13)]
        max_edges: usize,
        #[arg(long, default_value_t = 0)]
        min_edges: usize,
        /// Random weightings and orientations tried per shape.
        #[arg(long, default_value_t = 12, value_parser = positive)]
        trials: usize,
        /// Write the instance found to this file.
        #[arg(long, value_name = "PATH")]
        instance: Option<PathBuf>,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Inconclusive(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            e if e.is_cap() => Failure::Inconclusive(e.to_string()),
            Error::EquivalenceViolation(_) => Failure::Internal(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

enum Input {
    Graph(WeightedOrientedGraph),
    Monomials(MonomialIdealPresentation),
    Matrix(ToricMatrix),
}

impl Input {
    fn read(path: &Path) -> Result<Input, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        let header = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .and_then(|l| l.split_whitespace().next())
            .unwrap_or("");
        let context = |e: Error| Failure::Input(format!("{}: {e}", path.display()));
        match header {
            "wog" => WeightedOrientedGraph::parse_text(&text).map(Input::Graph).map_err(context),
            "monomials" => MonomialIdealPresentation::parse_text(&text).map(Input::Monomials).map_err(context),
            "matrix" => ToricMatrix::parse_text(&text).map(Input::Matrix).map_err(context),
            other => Err(Failure::Input(format!(
                "{}: unrecognized header `{other}` (expected wog, monomials or matrix)",
                path.display()
            ))),
        }
    }

    fn matrix(&self) -> ToricMatrix {
        match self {
            Input::Graph(g) => g.incidence_matrix(),
            Input::Monomials(m) => m.toric_matrix(),
            Input::Matrix(a) => a.clone(),
        }
    }
}

/// What a command prints and writes.
struct Output {
    human: String,
    machine: Value,
    code: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    let started = Instant::now();
    let result = run(&cli);
    match result {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            let _ = match cli.global.format {
                Format::Human => {
                    writeln!(stdout, "{}elapsed           {:.3} s", output.human, started.elapsed().as_secs_f64())
                }
                Format::Machine => writeln!(stdout, "{}", pretty(&output.machine)),
            };
            if let Some(path) = &cli.global.out {
                if let Err(e) = std::fs::write(path, pretty(&output.machine) + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_INPUT);
                }
            }
            ExitCode::from(output.code)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Inconclusive(message)) => {
            eprintln!("INCONCLUSIVE: {message}");
            ExitCode::from(EXIT_INCONCLUSIVE)
        }
        Err(Failure::Internal(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_else(|_| v.to_string())
}

fn caps(global: &GlobalArgs) -> Caps {
    let mut caps = Caps::default();
    if let Some(n) = global.cap_fiber {
        caps.fiber = n;
    }
    if let Some(n) = global.cap_cycles {
        caps.cycles = n;
    }
    caps
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let caps = caps(&cli.global);
    match &cli.command {
        Command::Analyze { input } => analyze(&Input::read(input)?, &caps),
        Command::CheckRobust { input } => {
            let a = Input::read(input)?.matrix();
            Ok(report_output(strongly_robust(&a, &caps)?, a.cols()))
        }
        Command::Graver { input } => {
            let a = Input::read(input)?.matrix();
            let set = graver_basis_with_cap(&a, caps.graver)?;
            Ok(move_list("graver basis", &a, &set))
        }
        Command::Circuits { input } => {
            let a = Input::read(input)?.matrix();
            let set = circuits_with_cap(&a, caps.circuit_subsets)?;
            Ok(move_list("circuits", &a, &set))
        }
        Command::Indispensable { input } => {
            let a = Input::read(input)?.matrix();
            let graver = graver_basis_with_cap(&a, caps.graver)?;
            let set = indispensable_from(&a, &graver, &caps)?;
            Ok(move_list("indispensable binomials", &a, &set))
        }
        Command::CheckHypotheses { input } => check_hypotheses(&Input::read(input)?, &caps),
        Command::OracleVerify { input, seed, count, max_rows, max_cols, max_entry } => {
            if input == "random" {
                oracle_random(*seed, *count, *max_rows, *max_cols, *max_entry, &caps)
            } else {
                oracle_file(&Input::read(Path::new(input))?, &caps)
            }
        }
        Command::SearchCounterexample { family, seed, max_weight, max_edges, min_edges, trials, instance } => {
            let family: SearchFamily = family.parse().map_err(|e: Error| Failure::Input(e.to_string()))?;
            let params = SearchParams {
                max_weight: *max_weight,
                min_edges: *min_edges,
                max_edges: *max_edges,
                trials_per_shape: *trials,
                caps,
            };
            search(family, &params, *seed, instance.as_deref())
        }
    }
}

fn report_output(report: RobustnessReport, cols: usize) -> Output {
    let names = edge_names(cols);
    let code = match report.status {
        Status::Verdict => EXIT_OK,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    };
    let mut human = report.to_human(&names);
    if let Some(pos) = human.rfind("elapsed") {
        human.truncate(pos);
    }
    Output { human, machine: report.to_json(&names), code }
}

fn analyze(input: &Input, caps: &Caps) -> Result<Output, Failure> {
    let a = input.matrix();
    let report = match input {
        Input::Graph(g) => analyze_graph(g, caps)?,
        Input::Monomials(m) => {
            let mut report = strongly_robust(&a, caps)?;
            report.monomial_hypothesis = Some(theorem_hypothesis(m));
            report
        }
        Input::Matrix(_) => strongly_robust(&a, caps)?,
    };
    Ok(report_output(report, a.cols()))
}

fn move_list(title: &str, a: &ToricMatrix, set: &GraverSet) -> Output {
    let names = edge_names(a.cols());
    let mut human =
        format!("matrix            {} x {}  ({})\n{title}: {}\n", a.rows(), a.cols(), a.fingerprint(), set.len());
    for m in set {
        let text = render_binomial(m, &names).unwrap_or_else(|_| m.to_string());
        let _ = writeln!(human, "  {text}");
    }
    let machine = json!({
        "report_version": REPORT_VERSION,
        "matrix": { "rows": a.rows(), "cols": a.cols(), "fingerprint": a.fingerprint() },
        "size": set.len(),
        "moves": moves_json(set.moves(), &names),
    });
    Output { human, machine, code: EXIT_OK }
}

fn check_hypotheses(input: &Input, caps: &Caps) -> Result<Output, Failure> {
    match input {
        Input::Graph(g) => {
            let degree_two = every_edge_meets_degree_two(g);
            let report = main_theorem_hypothesis(g, caps)?;
            let names = edge_names(g.edge_count());
            let mut human = String::new();
            let _ = writeln!(human, "graph             {} vertices, {} edges", g.vertex_count(), g.edge_count());
            let _ = writeln!(human, "cycles            {}", report.cycles.len());
            let _ = writeln!(human, "every edge meets a degree-2 vertex   {}", report.every_edge_meets_degree2);
            if let Some(&e) = degree_two.witness() {
                let _ = writeln!(human, "  edge without a degree-2 endpoint: {}", names[e]);
            }
            let _ = writeln!(human, "cycles share a single vertex         {}", report.cycles_share_single_vertex);
            let _ = writeln!(human, "no two cycles share a path           {}", report.no_two_cycles_share_path);
            let _ = writeln!(human, "main theorem hypothesis              {}", report.main_theorem_hypothesis);
            for w in &report.witnesses {
                let edges: Vec<&str> = w.edges.iter().map(|&e| names[e].as_str()).collect();
                let _ =
                    writeln!(human, "  witness {}: edges [{}] cycles {:?}", w.condition, edges.join(", "), w.cycles);
            }
            let machine = json!({
                "report_version": REPORT_VERSION,
                "hypothesis_results": report,
            });
            Ok(Output { human, machine, code: EXIT_OK })
        }
        Input::Monomials(m) => {
            let h = theorem_hypothesis(m);
            let mut human = format!("generators        {}\nmonomial hypothesis  {}\n", m.len(), h.holds);
            for (i, w) in h.witnesses.iter().enumerate() {
                if w.is_none() {
                    let _ = writeln!(
                        human,
                        "  generator {} has no variable shared with exactly one other generator",
                        i + 1
                    );
                }
            }
            let machine = json!({ "report_version": REPORT_VERSION, "monomial_hypothesis": h });
            Ok(Output { human, machine, code: EXIT_OK })
        }
        Input::Matrix(_) => Err(Failure::Input("structural hypotheses need a graph or monomial ideal".into())),
    }
}

fn oracle_random(
    seed: u64,
    count: usize,
    max_rows: usize,
    max_cols: usize,
    max_entry: u64,
    caps: &Caps,
) -> Result<Output, Failure> {
    use rand::Rng;
    let mut rng = seeded(seed);
    let mut mismatches = Vec::new();
    for i in 0..count {
        let rows = rng.gen_range(1..=max_rows);
        let cols = rng.gen_range(1..=max_cols);
        let a = random_matrix(&mut rng, rows, cols, max_entry)?;
        if let Some(problem) = compare_with_oracles(&a, caps, false)? {
            mismatches.push(json!({ "instance": i, "matrix": a.to_text(), "problem": problem }));
        }
    }
    let agree = count - mismatches.len();
    let human = format!("oracle-verify random (seed {seed}): {agree}/{count} matrices agree\n");
    let code = if mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    let machine = json!({
        "report_version": REPORT_VERSION,
        "seed": seed,
        "count": count,
        "agree": agree,
        "mismatches": mismatches,
    });
    Ok(Output { human, machine, code })
}

fn oracle_file(input: &Input, caps: &Caps) -> Result<Output, Failure> {
    let a = input.matrix();
    let problem = compare_with_oracles(&a, caps, true)?;
    let human = match &problem {
        None => "oracle-verify: Graver basis and indispensable binomials agree with the oracles\n".to_string(),
        Some(p) => format!("oracle-verify: MISMATCH: {p}\n"),
    };
    let machine = json!({
        "report_version": REPORT_VERSION,
        "matrix": { "rows": a.rows(), "cols": a.cols(), "fingerprint": a.fingerprint() },
        "agree": problem.is_none(),
        "problem": problem,
    });
    Ok(Output { human, machine, code: if problem.is_none() { EXIT_OK } else { EXIT_MISMATCH } })
}

/// Graver completion against the brute-force box search and the certificate,
/// and optionally the indispensable criterion against the spanning-tree
/// oracle.
fn compare_with_oracles(a: &ToricMatrix, caps: &Caps, indispensable: bool) -> Result<Option<String>, Failure> {
    let graver = graver_basis_with_cap(a, caps.graver)?;
    if !certificate_check(a, &graver).is_valid() {
        return Ok(Some("Graver certificate rejected".into()));
    }
    let bound = u64::try_from(&graver.max_inf_norm())
        .map_err(|_| Failure::Inconclusive("Graver entries too large for the brute-force oracle".into()))?;
    if brute_force_graver_with_cap(a, bound + 2, caps.brute_force_points)? != graver {
        return Ok(Some("completion and brute-force Graver bases differ".into()));
    }
    if indispensable && indispensable_from(a, &graver, caps)? != indispensable_oracle(a, caps)? {
        return Ok(Some("indispensable criterion and spanning-tree oracle differ".into()));
    }
    Ok(None)
}

fn search(family: SearchFamily, params: &SearchParams, seed: u64, instance: Option<&Path>) -> Result<Output, Failure> {
    match search_counterexample(family, params, seed)? {
        SearchOutcome::Found(found) => {
            let text = found.graph.to_text();
            if let Some(path) = instance {
                std::fs::write(path, &text)
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            let cols = found.graph.edge_count();
            let report = report_output(found.report, cols);
            let human = format!(
                "found a graph that is not strongly robust after {} attempts ({family}, seed {seed})\n{text}\n{}",
                found.attempts, report.human
            );
            let machine = json!({
                "report_version": REPORT_VERSION,
                "family": family.name(),
                "seed": seed,
                "attempts": found.attempts,
                "instance": text,
                "report": report.machine,
            });
            Ok(Output { human, machine, code: EXIT_OK })
        }
        SearchOutcome::NotFound { attempts, inconclusive } => {
            let human = format!(
                "no counterexample in family {family} (seed {seed}): {attempts} instances examined, {inconclusive} inconclusive\n"
            );
            let machine = json!({
                "report_version": REPORT_VERSION,
                "family": family.name(),
                "seed": seed,
                "attempts": attempts,
                "inconclusive": inconclusive,
                "found": false,
            });
            Ok(Output { human, machine, code: EXIT_NOT_FOUND })
        }
    }
}
