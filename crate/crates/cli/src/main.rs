//! `hexmatch`: noise sweeps, calibration statistics and circuit export for
//! hexagonal matching codes on heavy-hexagon devices.
//!
//! Exit codes: 0 success, 2 bad arguments or input schema, 3 I/O failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hexmatch::analysis::{self, CalibrationData, ExperimentStats};
use hexmatch::circuit::{self, CircuitProgram};
use hexmatch::lattice::{CodeSpec, LatticeError};
use hexmatch::noise::{self, NoiseModel};
use hexmatch::{render, simulator};

#[derive(Parser)]
#[command(
    name = "hexmatch",
    version,
    about = "Hexagonal matching code benchmarks on heavy-hexagon layouts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep noise strengths and write ⟨p_W⟩/⟨p_Z⟩ as CSV (and optionally SVG).
    Run(RunArgs),
    /// Mean and standard deviation of a device calibration file.
    Calib {
        #[arg(long, value_name = "PATH")]
        calib: PathBuf,
    },
    /// Write the ideal experiment circuit as OpenQASM 2.0.
    Export(ExportArgs),
    /// Sample raw shots at one noise strength.
    Shots(ShotsArgs),
    /// Describe a layout's code: JSON summary or SVG diagram.
    Layout(LayoutArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Built-in name (falcon-27, hummingbird-65), generator hex-RxC, or layout JSON path.
    #[arg(long, default_value = "falcon-27")]
    layout: String,
    /// Measurement rounds.
    #[arg(long = "rounds", short = 'T', default_value_t = 3)]
    rounds: usize,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long, default_value_t = 8192)]
    shots: usize,
    /// Comma-separated noise strengths.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "0.005,0.01,0.015,0.02,0.03"
    )]
    noise: Vec<f64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Stats CSV destination; stdout when absent.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// OpenQASM destination; stdout when absent.
    #[arg(long, value_name = "PATH")]
    qasm: Option<PathBuf>,
    /// Also write the plain-text instruction listing.
    #[arg(long, value_name = "PATH")]
    ir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShotFormat {
    Binary,
    Csv,
}

#[derive(Args)]
struct ShotsArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long, default_value_t = 8192)]
    shots: usize,
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "binary")]
    format: ShotFormat,
}

#[derive(Args)]
struct LayoutArgs {
    #[arg(long, default_value = "falcon-27")]
    layout: String,
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Code summary as JSON; stdout when neither output is given.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

/// An error with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl ToString) -> Self {
        Self {
            code: 2,
            msg: msg.to_string(),
        }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Self {
            code: 3,
            msg: format!("{}: {e}", path.display()),
        }
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        let code = if matches!(e, LatticeError::Io { .. }) {
            3
        } else {
            2
        };
        Self {
            code,
            msg: e.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn write_to(path: Option<&Path>, f: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Outcome {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| Failure::io(p, e))?;
            let mut w = BufWriter::new(file);
            f(&mut w)
                .and_then(|_| w.flush())
                .map_err(|e| Failure::io(p, e))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock).map_err(|e| Failure::io(Path::new("<stdout>"), e))
        }
    }
}

fn build(args: &CodeArgs) -> Result<(CodeSpec, CircuitProgram), Failure> {
    let code = CodeSpec::from_descriptor(&args.layout)?;
    let program = circuit::build_experiment(&code, args.rounds).map_err(Failure::usage)?;
    Ok((code, program))
}

fn cmd_run(args: RunArgs) -> Outcome {
    if args.shots == 0 {
        return Err(Failure::usage("--shots must be at least 1"));
    }
    if args.code.rounds < 2 {
        return Err(Failure::usage(
            "--rounds must be at least 2 to measure plaquette changes",
        ));
    }
    let mut noise_levels = args.noise.clone();
    for &p in &noise_levels {
        NoiseModel::new(p).map_err(Failure::usage)?;
    }
    noise_levels.sort_by(f64::total_cmp);
    noise_levels.dedup();
    let (code, program) = build(&args.code)?;
    let mut points: Vec<(f64, ExperimentStats)> = Vec::new();
    for &p in &noise_levels {
        let noisy = noise::apply_noise_model(&program, NoiseModel::new(p).map_err(Failure::usage)?)
            .map_err(Failure::usage)?;
        let shots = simulator::run_shots(&noisy, args.shots, args.seed).map_err(Failure::usage)?;
        let stats = analysis::experiment_stats(&shots, &noisy, &code).map_err(Failure::usage)?;
        points.push((p, stats));
    }
    let rows: Vec<(String, ExperimentStats)> = points
        .iter()
        .map(|(p, s)| (p.to_string(), s.clone()))
        .collect();
    write_to(args.csv.as_deref(), |w| analysis::write_stats_csv(w, &rows))?;
    if let Some(svg) = &args.svg {
        let text = render::sweep_svg(&points);
        write_to(Some(svg), |w| w.write_all(text.as_bytes()))?;
    }
    Ok(())
}

fn cmd_calib(path: &Path) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    let calib = CalibrationData::from_json(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let s = analysis::calibration_stats(&calib)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let qv = s
        .quantum_volume
        .map_or_else(|| "-".to_string(), |v| v.to_string());
    println!("device: {}", s.device);
    println!("mean_p: {:.6}", s.mean);
    println!("stddev_p: {:.6}", s.stddev);
    println!("quantum_volume: {qv}");
    println!("probabilities: {}", s.count);
    Ok(())
}

fn cmd_export(args: ExportArgs) -> Outcome {
    let (_, program) = build(&args.code)?;
    let text = circuit::export_openqasm(&program).map_err(Failure::usage)?;
    write_to(args.qasm.as_deref(), |w| w.write_all(text.as_bytes()))?;
    if let Some(ir) = &args.ir {
        let listing = program.ir_text();
        write_to(Some(ir), |w| w.write_all(listing.as_bytes()))?;
    }
    Ok(())
}

fn cmd_shots(args: ShotsArgs) -> Outcome {
    let model = NoiseModel::new(args.noise).map_err(Failure::usage)?;
    let (_, program) = build(&args.code)?;
    let noisy = noise::apply_noise_model(&program, model).map_err(Failure::usage)?;
    let table = simulator::run_shots(&noisy, args.shots, args.seed).map_err(Failure::usage)?;
    write_to(Some(&args.out), |w| match args.format {
        ShotFormat::Binary => table.write_binary(w),
        ShotFormat::Csv => table.write_csv(w),
    })
}

fn cmd_layout(args: LayoutArgs) -> Outcome {
    let code = CodeSpec::from_descriptor(&args.layout)?;
    if let Some(svg) = &args.svg {
        let text = render::layout_svg(&code);
        write_to(Some(svg), |w| w.write_all(text.as_bytes()))?;
    }
    if args.json.is_some() || args.svg.is_none() {
        let text =
            serde_json::to_string_pretty(&code).map_err(|e| Failure::usage(e.to_string()))?;
        write_to(args.json.as_deref(), |w| writeln!(w, "{text}"))?;
    }
    for d in &code.diagnostics {
        eprintln!("note: {d}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Calib { calib } => cmd_calib(&calib),
        Command::Export(a) => cmd_export(a),
        Command::Shots(a) => cmd_shots(a),
        Command::Layout(a) => cmd_layout(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("hexmatch: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
