//! Command-line surface for the spectral k-extendability toolkit.
//!
//! Batch commands read graph6 lines from a file, stdin ("-"), or a literal
//! argument. JSON output is the stable machine format; text is for humans.
//! Exit codes: 0 success, 1 input error, 2 precondition error, 3 budget
//! exceeded.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qextend::extendability::ExtendabilityConfig;
use qextend::graph::Graph;
use qextend::spectral::{q_spectral_radius_with, SolverConfig};
use qextend::random::connected_corpus;
use qextend::theorem::{
    certify_with, extremal_graph, is_k_extendable_exact, sweep, threshold, CertifyConfig,
    SharpnessConfig, SweepConfig,
};

const EXIT_INPUT: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "qextend",
    about = "Signless Laplacian spectral radii and k-extendability certification",
    version
)]
struct Cli {
    /// Output format: json is the stable machine format.
    #[arg(long, global = true, value_enum, default_value = "text", env = "QEXTEND_FORMAT")]
    format: Format,
    /// Worker threads for batch commands (default: all cores).
    #[arg(long, global = true, env = "QEXTEND_WORKERS")]
    workers: Option<usize>,
    /// Margin required to certify the strict inequality q > theta.
    #[arg(long, global = true, default_value_t = 1e-8, env = "QEXTEND_EPSILON")]
    epsilon: f64,
    /// Eigensolver residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-12, env = "QEXTEND_TOLERANCE")]
    tolerance: f64,
    /// Largest graph order accepted by the graph6 parser.
    #[arg(long, global = true, default_value_t = 4096, env = "QEXTEND_MAX_N")]
    max_n: usize,
    /// Largest order for the exhaustive subset scan of the exact checker.
    #[arg(long, global = true, default_value_t = 24, env = "QEXTEND_SCAN_CAP")]
    scan_cap: usize,
    /// Cap on matchings enumerated by the direct exact checker.
    #[arg(long, global = true, default_value_t = 100_000_000, env = "QEXTEND_ENUM_BUDGET")]
    enum_budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Signless Laplacian spectral radius q(G) per input graph.
    Q(InputArgs),
    /// The threshold theta(k, n) with its case and defining polynomial.
    Theta { k: usize, n: usize },
    /// Apply the threshold test to each input graph.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        /// Matching-size parameter.
        #[arg(short, long)]
        k: usize,
        /// Also run the exact checkers and report agreement.
        #[arg(long)]
        exact: bool,
    },
    /// Emit the extremal graph attaining theta(k, n), as graph6.
    Extremal {
        k: usize,
        n: usize,
        /// Verify sharpness: eigenvalue at the threshold, exact checkers
        /// reject, witness is the join core.
        #[arg(long)]
        verify: bool,
    },
    /// Full sharpness report for (k, n).
    Sharpness { k: usize, n: usize },
    /// Certify a corpus and hunt for counterexamples.
    Sweep {
        #[arg(short, long)]
        k: usize,
        #[arg(short, long)]
        n: usize,
        /// Every labeled connected graph of order n (small n only).
        #[arg(long, conflicts_with = "random")]
        exhaustive: bool,
        /// Number of seeded random connected graphs.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 1, env = "QEXTEND_SEED")]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Path to a graph6 file, "-" for stdin, or a literal graph6 line.
    input: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn precondition(message: String) -> Self {
        Failure {
            code: EXIT_PRECONDITION,
            message,
        }
    }

    fn budget(message: String) -> Self {
        Failure {
            code: EXIT_BUDGET,
            message,
        }
    }

    fn input(message: String) -> Self {
        Failure {
            code: EXIT_INPUT,
            message,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn solver_config(cli: &Cli) -> SolverConfig {
    SolverConfig {
        residual_tol: cli.tolerance,
        ..Default::default()
    }
}

fn certify_config(cli: &Cli) -> CertifyConfig {
    CertifyConfig {
        decision_epsilon: cli.epsilon,
        solver: solver_config(cli),
    }
}

fn exact_config(cli: &Cli) -> ExtendabilityConfig {
    ExtendabilityConfig {
        subset_scan_max_n: cli.scan_cap,
        enumeration_budget: cli.enum_budget,
    }
}

/// Largest order the sharpness verifier will scan; past this the exact
/// witness search is refused as a budget error.
const SHARPNESS_ORDER_CAP: usize = 32;

fn validate_config(cli: &Cli) -> Result<(), Failure> {
    if cli.epsilon <= 0.0 || cli.tolerance <= 0.0 {
        return Err(Failure::precondition(
            "tolerances must be positive".into(),
        ));
    }
    if cli.max_n == 0 || cli.scan_cap == 0 || cli.enum_budget == 0 {
        return Err(Failure::precondition("budget caps must be at least 1".into()));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    validate_config(cli)?;
    match &cli.command {
        Command::Q(input) => cmd_q(cli, input),
        Command::Theta { k, n } => cmd_theta(cli, *k, *n),
        Command::Certify { input, k, exact } => cmd_certify(cli, input, *k, *exact),
        Command::Extremal { k, n, verify } => cmd_extremal(cli, *k, *n, *verify),
        Command::Sharpness { k, n } => cmd_sharpness(cli, *k, *n),
        Command::Sweep {
            k,
            n,
            exhaustive,
            random,
            seed,
        } => cmd_sweep(cli, *k, *n, *exhaustive, *random, *seed),
    }
}

/// Input lines with 1-based line numbers; a literal graph6 argument counts as
/// line 1.
fn read_lines(input: &str) -> Result<Vec<(usize, String)>, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        buf
    } else if std::path::Path::new(input).exists() {
        std::fs::read_to_string(input)
            .map_err(|e| Failure::input(format!("reading {input}: {e}")))?
    } else {
        input.to_string()
    };
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect())
}

#[derive(Serialize)]
struct QRecord {
    graph6: String,
    n: usize,
    edges: usize,
    q: f64,
    residual: f64,
    iterations: u64,
}

#[derive(Serialize)]
struct LineError {
    graph6: String,
    line: usize,
    error: String,
}

fn cmd_q(cli: &Cli, input: &InputArgs) -> Result<u8, Failure> {
    let lines = read_lines(&input.input)?;
    if lines.is_empty() {
        return Err(Failure::input("no graphs in input".into()));
    }
    let solver = solver_config(cli);
    let mut had_error = false;
    if cli.format == Format::Csv {
        println!("graph6,n,edges,q,residual,iterations");
    }
    for (line_no, line) in lines {
        match Graph::from_graph6_bounded(&line, cli.max_n) {
            Ok(g) => match q_spectral_radius_with(&g, &solver) {
                Ok(r) => {
                    let record = QRecord {
                        graph6: line,
                        n: g.vertex_count(),
                        edges: g.edge_count(),
                        q: r.value,
                        residual: r.residual,
                        iterations: r.iterations,
                    };
                    match cli.format {
                        Format::Json => println!("{}", serde_json::to_string(&record).unwrap()),
                        Format::Csv => println!(
                            "{},{},{},{:.12},{:.3e},{}",
                            record.graph6,
                            record.n,
                            record.edges,
                            record.q,
                            record.residual,
                            record.iterations
                        ),
                        Format::Text => println!(
                            "{}  n={} m={} q={:.12}",
                            record.graph6, record.n, record.edges, record.q
                        ),
                    }
                }
                Err(e) => {
                    had_error = true;
                    emit_line_error(cli, &line, line_no, &e.to_string());
                }
            },
            Err(e) => {
                had_error = true;
                emit_line_error(cli, &line, line_no, &e.to_string());
            }
        }
    }
    Ok(if had_error { EXIT_INPUT } else { 0 })
}

fn emit_line_error(cli: &Cli, line: &str, line_no: usize, error: &str) {
    let record = LineError {
        graph6: line.to_string(),
        line: line_no,
        error: error.to_string(),
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string(&record).unwrap()),
        Format::Csv => println!("{},,,error: {},,", record.graph6, record.error),
        Format::Text => eprintln!("line {line_no}: {error}"),
    }
}

fn cmd_theta(cli: &Cli, k: usize, n: usize) -> Result<u8, Failure> {
    let spec = threshold(k, n).map_err(|e| Failure::precondition(e.to_string()))?;
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string(&spec).unwrap()),
        Format::Csv => {
            println!("k,n,case,value");
            println!("{},{},{},{:.12}", spec.k, spec.n, spec.case, spec.value);
        }
        Format::Text => {
            println!("theta({k}, {n}) = {:.12}  [case {}]", spec.value, spec.case);
            if spec.case == qextend::theorem::ThresholdCase::General {
                println!("cubic coefficients (ascending): {:?}", spec.polynomial.coefficients());
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct ExactOutcome {
    direct: Option<bool>,
    lemma: Option<bool>,
    agree: Option<bool>,
    error: Option<String>,
}

#[derive(Serialize)]
struct CertifyRecord {
    graph6: String,
    #[serde(flatten)]
    certificate: qextend::theorem::Certificate,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<ExactOutcome>,
}

fn cmd_certify(cli: &Cli, input: &InputArgs, k: usize, exact: bool) -> Result<u8, Failure> {
    let lines = read_lines(&input.input)?;
    if lines.is_empty() {
        return Err(Failure::input("no graphs in input".into()));
    }
    let certify_cfg = certify_config(cli);
    let exact_cfg = exact_config(cli);
    let mut had_error = false;
    if cli.format == Format::Csv {
        println!("graph6,n,k,verdict,q,theta,margin,exact_direct,exact_lemma");
    }
    for (line_no, line) in lines {
        let g = match Graph::from_graph6_bounded(&line, cli.max_n) {
            Ok(g) => g,
            Err(e) => {
                had_error = true;
                emit_line_error(cli, &line, line_no, &e.to_string());
                continue;
            }
        };
        let certificate = certify_with(&g, k, &certify_cfg);
        let exact_outcome = if exact {
            Some(run_exact(&g, k, &exact_cfg))
        } else {
            None
        };
        let record = CertifyRecord {
            graph6: line,
            certificate,
            exact: exact_outcome,
        };
        match cli.format {
            Format::Json => println!("{}", serde_json::to_string(&record).unwrap()),
            Format::Csv => println!(
                "{},{},{},{:?},{},{},{},{},{}",
                record.graph6,
                record.certificate.n,
                record.certificate.k,
                record.certificate.verdict,
                record
                    .certificate
                    .q_value
                    .map(|v| format!("{v:.12}"))
                    .unwrap_or_default(),
                record
                    .certificate
                    .threshold
                    .map(|v| format!("{v:.12}"))
                    .unwrap_or_default(),
                record
                    .certificate
                    .margin
                    .map(|v| format!("{v:.12}"))
                    .unwrap_or_default(),
                record
                    .exact
                    .as_ref()
                    .and_then(|e| e.direct)
                    .map(|b| b.to_string())
                    .unwrap_or_default(),
                record
                    .exact
                    .as_ref()
                    .and_then(|e| e.lemma)
                    .map(|b| b.to_string())
                    .unwrap_or_default(),
            ),
            Format::Text => {
                let extra = match &record.exact {
                    Some(e) => format!(
                        "  exact: direct={:?} lemma={:?}",
                        e.direct, e.lemma
                    ),
                    None => String::new(),
                };
                println!(
                    "{}  {:?}  {}{}",
                    record.graph6,
                    record.certificate.verdict,
                    record.certificate.reasons.join("; "),
                    extra
                );
            }
        }
    }
    Ok(if had_error { EXIT_INPUT } else { 0 })
}

fn run_exact(g: &Graph, k: usize, cfg: &ExtendabilityConfig) -> ExactOutcome {
    let direct = is_k_extendable_exact(g, k, cfg);
    let lemma = if k >= 1 {
        match qextend::extendability::is_k_extendable_lemma_with(g, k, cfg) {
            Ok(outcome) => Ok(Some(outcome.is_extendable())),
            Err(e) => Err(e),
        }
    } else {
        Ok(None)
    };
    match (direct, lemma) {
        (Ok(d), Ok(l)) => ExactOutcome {
            direct: Some(d),
            lemma: l,
            agree: l.map(|l| l == d),
            error: None,
        },
        (d, l) => {
            let error = d
                .as_ref()
                .err()
                .map(|e| e.to_string())
                .or_else(|| l.as_ref().err().map(|e| e.to_string()));
            ExactOutcome {
                direct: d.ok(),
                lemma: l.ok().flatten(),
                agree: None,
                error,
            }
        }
    }
}

#[derive(Serialize)]
struct ExtremalRecord {
    k: usize,
    n: usize,
    case: qextend::theorem::ThresholdCase,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    sharpness: Option<qextend::theorem::SharpnessReport>,
}

fn cmd_extremal(cli: &Cli, k: usize, n: usize, verify: bool) -> Result<u8, Failure> {
    let fam = extremal_graph(k, n).map_err(|e| Failure::precondition(e.to_string()))?;
    let case = threshold(k, n)
        .map_err(|e| Failure::precondition(e.to_string()))?
        .case;
    let sharpness = if verify {
        let cfg = sharpness_cfg(cli, k, n)?;
        Some(
            qextend::theorem::verify_sharpness_with(k, n, &cfg)
                .map_err(|e| Failure::precondition(e.to_string()))?,
        )
    } else {
        None
    };
    let record = ExtremalRecord {
        k,
        n,
        case,
        graph6: fam.graph.to_graph6(),
        sharpness,
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string(&record).unwrap()),
        Format::Csv => {
            println!("k,n,case,graph6,sharp");
            println!(
                "{},{},{},{},{}",
                k,
                n,
                record.case,
                record.graph6,
                record
                    .sharpness
                    .as_ref()
                    .map(|s| s.pass.to_string())
                    .unwrap_or_default()
            );
        }
        Format::Text => {
            println!("{}", record.graph6);
            if let Some(s) = &record.sharpness {
                println!(
                    "sharpness: {}  q={:.12} theta={:.12} gap={:.3e}",
                    if s.pass { "PASS" } else { "FAIL" },
                    s.q,
                    s.threshold,
                    s.gap
                );
                if !s.pass {
                    for f in &s.failures {
                        println!("  failure: {f}");
                    }
                }
            }
        }
    }
    if record.sharpness.as_ref().is_some_and(|s| !s.pass) {
        return Ok(EXIT_PRECONDITION);
    }
    Ok(0)
}

fn sharpness_cfg(cli: &Cli, k: usize, n: usize) -> Result<SharpnessConfig, Failure> {
    if n > SHARPNESS_ORDER_CAP {
        return Err(Failure::budget(format!(
            "sharpness verification at k = {k} needs an exact witness scan over {n} vertices; cap is {SHARPNESS_ORDER_CAP}"
        )));
    }
    let mut exact = exact_config(cli);
    // The witness search caps at the graph order; commands that construct
    // the graph themselves raise the cap to match.
    exact.subset_scan_max_n = exact.subset_scan_max_n.max(n);
    Ok(SharpnessConfig {
        certify: certify_config(cli),
        exact,
    })
}

fn cmd_sharpness(cli: &Cli, k: usize, n: usize) -> Result<u8, Failure> {
    let cfg = sharpness_cfg(cli, k, n)?;
    let report = qextend::theorem::verify_sharpness_with(k, n, &cfg)
        .map_err(|e| Failure::precondition(e.to_string()))?;
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
        Format::Csv => {
            println!("k,n,case,graph6,q,theta,gap,pass");
            println!(
                "{},{},{},{},{:.12},{:.12},{:.3e},{}",
                report.k,
                report.n,
                report.case,
                report.graph6,
                report.q,
                report.threshold,
                report.gap,
                report.pass
            );
        }
        Format::Text => {
            println!(
                "sharpness(k={}, n={}): {}",
                k,
                n,
                if report.pass { "PASS" } else { "FAIL" }
            );
            println!(
                "  graph {}  q={:.12}  theta={:.12}  gap={:.3e}",
                report.graph6, report.q, report.threshold, report.gap
            );
            println!(
                "  witness S={:?}  o(G-S)={}  |S|={}",
                report.witness.s.to_sorted_vec(),
                report.witness.odd_components,
                report.witness.size
            );
            for f in &report.failures {
                println!("  failure: {f}");
            }
        }
    }
    Ok(if report.pass { 0 } else { EXIT_PRECONDITION })
}

fn cmd_sweep(
    cli: &Cli,
    k: usize,
    n: usize,
    exhaustive: bool,
    random: Option<usize>,
    seed: u64,
) -> Result<u8, Failure> {
    let corpus: Vec<Graph> = if exhaustive {
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs > 22 {
            return Err(Failure::budget(format!(
                "exhaustive sweep over {n} vertices needs 2^{pairs} graphs; cap is 2^22"
            )));
        }
        qextend::random::exhaustive_connected(n)
    } else {
        let count = random.ok_or_else(|| {
            Failure::input("sweep needs --exhaustive or --random COUNT".into())
        })?;
        connected_corpus(n, count, seed)
    };
    let cfg = SweepConfig {
        certify: certify_config(cli),
        exact: exact_config(cli),
        check_exact: true,
    };
    let report = sweep(&corpus, k, &cfg);
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Text => {
            println!(
                "sweep k={k} n={n}: {} graphs, {} certified extendable, {} exceptions, {} inconclusive, {} precondition-failed",
                report.total,
                report.extendable_by_theorem,
                report.exception,
                report.inconclusive,
                report.precondition_failed
            );
            println!(
                "counterexamples: {}  budget errors: {}",
                report.counterexamples, report.budget_errors
            );
        }
    }
    Ok(0)
}
