//! `pla`: command-line front-end over the `spectral_pla` library.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use spectral_pla::life::{self, Boundary, CellGrid, LifeEngine};
use spectral_pla::sim::report::{self, fmt_db, fmt_mw};
use spectral_pla::sim::{confusion_matrix, run_waveform, waveforms_to_csv};
use spectral_pla::synthesis::{self, NamedTable, StdFunction, TruthTable};
use spectral_pla::{Error, InputVector, PlaConfig, PlaSimulator};

#[derive(Parser)]
#[command(name = "pla", version, about = "Wavelength-parallel optical PLA compiler and simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile an expression or table to a truth-table file.
    Compile(CompileArgs),
    /// Evaluate a function on the simulated device chain.
    Simulate(SimulateArgs),
    /// Write the decoder confusion matrix as CSV.
    Matrix(MatrixArgs),
    /// Drive the operands with NRZ bit streams and write output waveforms.
    Waveform(WaveformArgs),
    /// Run Conway's Game of Life on the nine-input array.
    Life(LifeArgs),
    /// Estimate channel count and operand capacity of an optical band.
    Estimate(EstimateArgs),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["expr", "table"]))]
struct CompileArgs {
    /// Boolean expression, e.g. "A & ~B | C".
    #[arg(long)]
    expr: Option<String>,
    /// Existing truth-table file to validate and normalise.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Ordered variable names; the first drives stage 1.
    #[arg(long, value_delimiter = ',', requires = "expr")]
    vars: Vec<String>,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConfigArg {
    /// Device-chain JSON; falls back to $PLA_CONFIG, then the built-in layout.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["input", "all"]))]
struct SimulateArgs {
    #[command(flatten)]
    config: ConfigArg,
    /// Stdlib name (decoder, decoder(N), comparator4, adder4, multiplier4),
    /// a truth-table file or a JSON bundle. Defaults to the config's outputs.
    #[arg(long)]
    function: Option<String>,
    /// Operand bits, x_1 first.
    #[arg(long)]
    input: Option<String>,
    /// Sweep every input.
    #[arg(long)]
    all: bool,
    /// CSV destination for --all (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    config: ConfigArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WaveformArgs {
    #[command(flatten)]
    config: ConfigArg,
    #[arg(long)]
    function: Option<String>,
    /// One bit string per operand, comma separated; a single bit is held constant.
    #[arg(long, value_delimiter = ',', required = true)]
    streams: Vec<String>,
    /// Bit rate, b/s.
    #[arg(long, default_value_t = 10e9)]
    rate: f64,
    #[arg(long, default_value_t = 16)]
    samples_per_bit: usize,
    /// Edge duration as a fraction of the bit period.
    #[arg(long, default_value_t = 0.2)]
    rise: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LifeArgs {
    #[command(flatten)]
    config: ConfigArg,
    /// Pattern file ('.' dead, 'O' live, '#' comments).
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long, default_value_t = 1)]
    steps: usize,
    /// Centre the pattern on a field this wide.
    #[arg(long)]
    width: Option<usize>,
    #[arg(long)]
    height: Option<usize>,
    /// Wrap around the edges instead of treating them as dead.
    #[arg(long)]
    toroidal: bool,
    /// Trace file: one pattern block per step.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory receiving step_<k>.pgm images.
    #[arg(long)]
    pgm_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    pgm_scale: usize,
}

#[derive(Args)]
struct EstimateArgs {
    /// Short band edge, nm.
    #[arg(long)]
    lambda1: f64,
    /// Long band edge, nm.
    #[arg(long)]
    lambda2: f64,
    /// Per-channel bandwidth, GHz.
    #[arg(long)]
    bw: f64,
}

enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(e.into())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Compile(a) => compile(a),
        Command::Simulate(a) => simulate(a),
        Command::Matrix(a) => matrix(a),
        Command::Waveform(a) => waveform(a),
        Command::Life(a) => run_life(a),
        Command::Estimate(a) => estimate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn compile(a: CompileArgs) -> CliResult<()> {
    let table = match (a.expr, a.table) {
        (Some(expr), None) => {
            let e = synthesis::parse_expr(&expr, &a.vars).map_err(|e| {
                if e.is_syntax() {
                    CliError::Usage(format!("{e}\n  {expr}\n  {}^", " ".repeat(e.position)))
                } else {
                    CliError::Domain(e.into())
                }
            })?;
            synthesis::truth_table(&e, &a.vars)?
        }
        (None, Some(path)) => TruthTable::from_file_str(&fs::read_to_string(path)?)?,
        _ => return Err(CliError::Usage("exactly one of --expr or --table is required".into())),
    };
    let summary = format!("N={} minterms={}", table.input_count(), table.popcount());
    match &a.out {
        Some(path) => {
            fs::write(path, table.to_file_string())?;
            println!("{summary}");
        }
        None => {
            print!("{}", table.to_file_string());
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn load_config(arg: &ConfigArg) -> CliResult<PlaConfig> {
    let path = arg
        .config
        .clone()
        .or_else(|| std::env::var_os("PLA_CONFIG").map(PathBuf::from));
    match path {
        Some(path) => Ok(PlaConfig::from_json(&fs::read_to_string(path)?)?),
        None => Ok(PlaConfig::default_layout()),
    }
}

fn load_function(name: &str) -> CliResult<Vec<NamedTable>> {
    if let Ok(f) = name.parse::<StdFunction>() {
        return Ok(f.tables()?);
    }
    let path = Path::new(name);
    if !path.exists() {
        return Err(CliError::Domain(Error::UnknownFunction(name.to_string())));
    }
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with("N=") {
        let stem = path.file_stem().map_or("f".into(), |s| s.to_string_lossy().into_owned());
        Ok(vec![NamedTable::new(stem, TruthTable::from_file_str(&text)?)])
    } else {
        Ok(synthesis::bundle_from_json(&text, None)?)
    }
}

/// Config with outputs replaced by `function`, when given.
fn configure(config: &ConfigArg, function: Option<&str>) -> CliResult<PlaConfig> {
    let base = load_config(config)?;
    let cfg = match function {
        Some(name) => PlaConfig::for_tables(base.grid(), base.params().clone(), &load_function(name)?)?,
        None => base,
    };
    if cfg.outputs().is_empty() {
        return Err(CliError::Usage("no outputs: pass --function or a config with outputs".into()));
    }
    Ok(cfg)
}

fn simulate(a: SimulateArgs) -> CliResult<()> {
    let cfg = configure(&a.config, a.function.as_deref())?;
    let sim = PlaSimulator::calibrated(cfg)?;
    if let Some(bits) = &a.input {
        let x = InputVector::parse(bits).map_err(|e| CliError::Usage(e.to_string()))?;
        if x.len() != sim.config().operand_count() {
            return Err(CliError::Usage(format!(
                "--input has {} bits, function takes {}",
                x.len(),
                sim.config().operand_count()
            )));
        }
        let r = sim.evaluate(&x)?;
        println!("output,power_mw,power_dbm,threshold_mw,decision");
        for (k, name) in r.names.iter().enumerate() {
            println!(
                "{name},{},{},{},{}",
                fmt_mw(r.powers_mw[k]),
                fmt_db(r.powers_dbm()[k]),
                fmt_mw(r.thresholds[k]),
                u8::from(r.decisions[k])
            );
        }
        return Ok(());
    }
    let sweep = report::sweep(&sim)?;
    emit(a.out.as_deref(), &sweep.to_csv(&sim))?;
    println!("{}", report::margin_summary(&sim));
    let mismatches = sweep.mismatches(sim.config());
    if !mismatches.is_empty() {
        return Err(CliError::Domain(Error::Format(format!(
            "{} inputs decode incorrectly, first at {}",
            mismatches.len(),
            mismatches[0]
        ))));
    }
    Ok(())
}

fn matrix(a: MatrixArgs) -> CliResult<()> {
    let cfg = load_config(&a.config)?;
    let m = confusion_matrix(&cfg)?;
    emit(a.out.as_deref(), &m.to_csv())?;
    if a.out.is_some() {
        println!("min_margin_db={}", fmt_db(m.min_margin_db()));
    }
    Ok(())
}

fn waveform(a: WaveformArgs) -> CliResult<()> {
    let cfg = configure(&a.config, a.function.as_deref())?;
    let parsed = a
        .streams
        .iter()
        .map(|s| InputVector::parse(s).map(|v| v.bits().to_vec()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let len = parsed.iter().map(Vec::len).max().unwrap_or(0);
    let streams = parsed
        .into_iter()
        .map(|s| if s.len() == 1 { vec![s[0]; len] } else { s })
        .collect::<Vec<_>>();
    let sim = PlaSimulator::calibrated(cfg)?;
    let waves = run_waveform(&sim, &streams, a.rate, a.samples_per_bit, a.rise)?;
    emit(a.out.as_deref(), &waveforms_to_csv(&waves))?;
    if a.out.is_some() {
        println!("bit_period_ps={:.3} bits={len}", 1e12 / a.rate);
        for w in &waves {
            let bits: String = w.decisions().iter().map(|&d| if d { '1' } else { '0' }).collect();
            println!("{}={bits}", w.name);
        }
    }
    Ok(())
}

fn run_life(a: LifeArgs) -> CliResult<()> {
    let boundary = if a.toroidal { Boundary::Toroidal } else { Boundary::Dead };
    let mut grid = CellGrid::parse_pattern(&fs::read_to_string(&a.pattern)?, boundary)?;
    if a.width.is_some() || a.height.is_some() {
        grid = grid.centered_in(a.width.unwrap_or(grid.width()), a.height.unwrap_or(grid.height()))?;
    }
    let params = load_config(&a.config)?.params().clone();
    let engine = LifeEngine::new(life::conway_pla(params)?)?;
    let trace = engine.run(&grid, a.steps);
    if let Some(path) = &a.out {
        fs::write(path, life::trace_to_text(&trace))?;
    }
    if let Some(dir) = &a.pgm_dir {
        fs::create_dir_all(dir)?;
        for (k, g) in trace.iter().enumerate() {
            fs::write(dir.join(format!("step_{k:04}.pgm")), g.to_pgm(a.pgm_scale))?;
        }
    }
    let last = trace.last().expect("trace holds the initial grid");
    print!("{}", last.to_pattern());
    eprintln!(
        "steps={} population={} margin_db={}",
        a.steps,
        last.population(),
        fmt_db(engine.calibration().margin_db)
    );
    Ok(())
}

fn estimate(a: EstimateArgs) -> CliResult<()> {
    let est = synthesis::estimate_capacity(a.lambda1, a.lambda2, a.bw)?;
    println!(
        "delta_f={} GHz, W={}, N={}",
        est.delta_f_display(),
        est.max_channels,
        est.max_operands
    );
    println!(
        "modulators: proposed={} eo={}",
        est.modulators_proposed, est.modulators_eo
    );
    Ok(())
}
