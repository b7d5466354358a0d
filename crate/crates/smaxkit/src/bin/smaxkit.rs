use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use smaxkit::bagen::{self, BAConfig, SweepRow};
use smaxkit::degseq::{build_phi, revcdf, tripathi_vijay, GraphicalityVerdict};
use smaxkit::error::Error;
use smaxkit::evolution::{
    self, SlidingConfig, TemporalEdgeList, TREND_CSV_HEADER, VARIANCE_CSV_HEADER,
};
use smaxkit::extremal::bcd;
use smaxkit::graph::Graph;
use smaxkit::metrics::{s_report, SMetricReport};
use smaxkit::{erdos_gallai_verdict, DegreeSequence};

#[derive(Parser, Debug)]
#[command(name = "smaxkit", version, about = "s-metric toolkit", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test a degree sequence for graphicality (three independent tests).
    Check(CheckArgs),
    /// Construct the near-s-maximal realization of a degree sequence.
    Build(BuildArgs),
    /// Score an edge-list graph: s, bounds, ratios, CV, assortativity.
    Score(ScoreArgs),
    /// Generate one preferential-attachment tree.
    Simulate(SimulateArgs),
    /// Sweep tree generation over sizes and attachment exponents.
    Sweep(SweepArgs),
    /// Sliding-window attachment estimation on a temporal edge list.
    Pa(PaArgs),
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Whitespace-separated degree sequence file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct BuildArgs {
    /// Whitespace-separated degree sequence file.
    #[arg(long)]
    input: PathBuf,
    /// Edge CSV destination; stdout when omitted (report then goes to stderr).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ScoreArgs {
    /// Edge CSV file (1-based `u,v` rows).
    #[arg(long)]
    input: PathBuf,
    /// Reject disconnected graphs.
    #[arg(long)]
    connected_only: bool,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    /// Number of nodes.
    #[arg(long)]
    n: usize,
    /// Attachment exponent.
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    seed: u64,
    /// Edge CSV destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Comma-separated tree sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Comma-separated attachment exponents.
    #[arg(long, value_delimiter = ',', required = true)]
    gamma: Vec<f64>,
    /// Trees per (size, gamma) cell.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long)]
    seed: u64,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PaArgs {
    /// Temporal edge CSV (`t,u,v` rows).
    #[arg(long)]
    input: PathBuf,
    /// Existing-interval length in time units.
    #[arg(long, default_value_t = 5)]
    window: i64,
    /// Advance per position; also the new-interval length.
    #[arg(long, default_value_t = 1)]
    step: i64,
    /// Degree cutoffs for the external variance series ("none" allowed);
    /// the internal series uses their squares.
    #[arg(long, value_delimiter = ',', default_value = "none,64,16")]
    cutoffs: Vec<String>,
    /// Restrict each existing graph to its largest connected component.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    largest_component: bool,
    /// CSV destination (variance series, blank line, trend table);
    /// stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("SMAXKIT_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n >= 1 {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .ok();
            }
        }
    }
    let cli = Cli::parse();
    eprintln!("config: {:?}", cli.command);
    let result = match cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Build(a) => cmd_build(a),
        Command::Score(a) => cmd_score(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Pa(a) => cmd_pa(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::Io(_) | Error::EmptySequence => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn read_degseq(path: &PathBuf) -> Result<DegreeSequence, Error> {
    let text = fs::read_to_string(path)?;
    DegreeSequence::parse(&text)
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, content)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn cmd_check(a: CheckArgs) -> Result<ExitCode, Error> {
    let d = read_degseq(&a.input)?;
    if d.max_degree() == 0 {
        // the empty graph realizes the all-zero sequence
        println!("erdos_gallai: graphical");
        println!("tripathi_vijay: graphical");
        println!("phi: graphical");
        println!("graphical");
        return Ok(ExitCode::SUCCESS);
    }
    let eg = erdos_gallai_verdict(&d);
    let sigma = revcdf(&d)?;
    let tv = tripathi_vijay(&sigma, d.total());
    let phi = build_phi(&sigma);
    let phi_ok = smaxkit::is_graphical_phi(&phi, d.total());
    let verdict = |ok: bool| if ok { "graphical" } else { "not graphical" };
    println!(
        "erdos_gallai: {}",
        verdict(matches!(eg, GraphicalityVerdict::Graphical))
    );
    println!("tripathi_vijay: {}", verdict(tv));
    println!("phi: {}", verdict(phi_ok));
    match eg {
        GraphicalityVerdict::Graphical => {
            println!("graphical");
            Ok(ExitCode::SUCCESS)
        }
        GraphicalityVerdict::OddSum => {
            println!("not graphical (odd sum)");
            Ok(ExitCode::from(1))
        }
        GraphicalityVerdict::Violation { k } => {
            println!("not graphical (inequality violated at k={k})");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_build(a: BuildArgs) -> Result<ExitCode, Error> {
    let d = read_degseq(&a.input)?;
    let g = bcd(&d)?;
    let report = s_report(&g)?;
    let row = format!("{}\n{}\n", SMetricReport::CSV_HEADER, report.to_csv_row());
    emit(&a.output, &g.to_edge_csv())?;
    if a.output.is_some() {
        print!("{row}");
    } else {
        eprint!("{row}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_score(a: ScoreArgs) -> Result<ExitCode, Error> {
    let text = fs::read_to_string(&a.input)?;
    let g = Graph::parse_edge_csv(&text)?;
    if a.connected_only && !g.is_connected() {
        return Err(Error::Domain("graph is not connected".into()));
    }
    let report = s_report(&g)?;
    println!("{}", SMetricReport::CSV_HEADER);
    println!("{}", report.to_csv_row());
    Ok(ExitCode::SUCCESS)
}

fn cmd_simulate(a: SimulateArgs) -> Result<ExitCode, Error> {
    if a.n < 2 {
        return Err(Error::Domain("simulate needs n >= 2".into()));
    }
    if !a.gamma.is_finite() {
        return Err(Error::Domain("gamma must be finite".into()));
    }
    let tree = bagen::generate_ba_tree(&BAConfig {
        n: a.n,
        gamma: a.gamma,
        seed: a.seed,
    });
    emit(&a.output, &tree.to_edge_csv())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(a: SweepArgs) -> Result<ExitCode, Error> {
    if a.samples == 0 {
        return Err(Error::Domain("samples must be positive".into()));
    }
    if a.sizes.iter().any(|&n| n < 2) {
        return Err(Error::Domain("all sizes must be >= 2".into()));
    }
    let rows = bagen::sweep(&a.sizes, &a.gamma, a.samples, a.seed)?;
    let mut csv = String::from(SweepRow::CSV_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.to_csv_row());
        csv.push('\n');
    }
    emit(&a.output, &csv)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_cutoff(s: &str) -> Result<Option<u64>, Error> {
    if s.eq_ignore_ascii_case("none") {
        Ok(None)
    } else {
        s.parse::<u64>().map(Some).map_err(|_| Error::Parse {
            line: 0,
            msg: format!("invalid cutoff {s:?}"),
        })
    }
}

fn cmd_pa(a: PaArgs) -> Result<ExitCode, Error> {
    let text = fs::read_to_string(&a.input)?;
    let tel = TemporalEdgeList::parse_csv(&text)?;
    let external: Vec<Option<u64>> = a
        .cutoffs
        .iter()
        .map(|s| parse_cutoff(s))
        .collect::<Result<_, _>>()?;
    let internal = external
        .iter()
        .map(|c| c.map(|v| v.saturating_mul(v)))
        .collect();
    let cfg = SlidingConfig {
        window_len: a.window,
        step: a.step,
        external_cutoffs: external,
        internal_cutoffs: internal,
        largest_component: a.largest_component,
    };
    let report = evolution::sliding_analysis(&tel, &cfg)?;
    let mut csv = String::from(VARIANCE_CSV_HEADER);
    csv.push('\n');
    for row in &report.variances {
        csv.push_str(&row.to_csv_row());
        csv.push('\n');
    }
    csv.push('\n');
    csv.push_str(TREND_CSV_HEADER);
    csv.push('\n');
    for row in &report.trends {
        csv.push_str(&row.to_csv_row());
        csv.push('\n');
    }
    emit(&a.output, &csv)?;
    eprintln!(
        "pa: {} window positions, {} variance rows, {} trends",
        report.window_positions,
        report.variances.len(),
        report.trends.len()
    );
    Ok(ExitCode::SUCCESS)
}
