use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fieldpos::cli::{run_sim, run_verify, Outcome, RunConfig, SimKind, Status};

#[derive(Parser)]
#[command(
    name = "fieldpos",
    version,
    about = "Field position operator checks and wavepacket simulators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full invariant suite and print one row per check.
    Verify(Flags),
    /// Dirac vs field position trajectories of a wavepacket.
    Zbw(Flags),
    /// Overlaps of displaced localized states on a momentum grid.
    Locality(Flags),
    /// Covariance residuals for one Lorentz word at random momenta.
    Covariance(Flags),
    /// Exponential tail fit of the nonlocal position remainder.
    Yukawa(Flags),
}

#[derive(Args)]
struct Flags {
    /// Plain-text `key = value` file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Particle mass [default: 1]
    #[arg(long)]
    mass: Option<String>,
    /// Sampling seed for verify and covariance
    #[arg(long)]
    seed: Option<String>,
    /// Tolerance for closed-form checks [default: 1e-12]
    #[arg(long)]
    tol_exact: Option<String>,
    /// Tolerance for finite-difference checks [default: 1e-6]
    #[arg(long)]
    tol_fd: Option<String>,
    /// Random samples per check [default: 100]
    #[arg(long)]
    samples: Option<String>,
    /// Momentum grid size, a power of two
    #[arg(long)]
    grid_n: Option<String>,
    /// Momentum grid half-width
    #[arg(long)]
    p_max: Option<String>,
    /// Packet centre momentum [default: 0]
    #[arg(long, allow_hyphen_values = true)]
    p0: Option<String>,
    /// Packet momentum width
    #[arg(long)]
    sigma_p: Option<String>,
    /// Particle fraction of the packet, in [0, 1] [default: 0.5]
    #[arg(long)]
    mix: Option<String>,
    /// Trajectory length [default: 40]
    #[arg(long)]
    t_max: Option<String>,
    /// Trajectory sampling step [default: 0.05]
    #[arg(long)]
    dt: Option<String>,
    /// CSV destination; without it the CSV goes to stdout and the summary to stderr.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Lorentz word such as `boost:x:0.5,rot:y:0.3`.
    #[arg(long)]
    word: Option<String>,
}

impl Flags {
    fn pairs(&self) -> Vec<(&'static str, &str)> {
        let fields = [
            ("mass", &self.mass),
            ("seed", &self.seed),
            ("tol_exact", &self.tol_exact),
            ("tol_fd", &self.tol_fd),
            ("samples", &self.samples),
            ("grid_n", &self.grid_n),
            ("p_max", &self.p_max),
            ("p0", &self.p0),
            ("sigma_p", &self.sigma_p),
            ("mix", &self.mix),
            ("t_max", &self.t_max),
            ("dt", &self.dt),
            ("word", &self.word),
        ];
        fields
            .into_iter()
            .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
            .collect()
    }
}

fn load_config(flags: &Flags) -> Result<RunConfig, (Status, String)> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &flags.config {
        let text = RunConfig::from_file(path)
            .map_err(|e| (Status::Io, format!("error: cannot read {}: {e}", path.display())))?;
        cfg.apply_text(&text)
            .map_err(|e| (Status::Usage, format!("error: {}: {e}", path.display())))?;
    }
    for (k, v) in flags.pairs() {
        cfg.set(k, v)
            .map_err(|e| (Status::Usage, format!("error: {e}")))?;
    }
    cfg.out = flags.out.clone();
    Ok(cfg)
}

fn emit(outcome: &Outcome, out: Option<&PathBuf>) -> Status {
    let stdout = std::io::stdout();
    let mut stdout = stdout.lock();
    match (&outcome.csv, out) {
        (Some(csv), Some(path)) => {
            if let Err(e) = fs::write(path, csv) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Status::Io;
            }
            let _ = stdout.write_all(outcome.summary.as_bytes());
        }
        (Some(csv), None) => {
            let _ = stdout.write_all(csv.as_bytes());
            eprint!("{}", outcome.summary);
        }
        (None, Some(path)) => {
            if let Err(e) = fs::write(path, &outcome.summary) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return Status::Io;
            }
            let _ = stdout.write_all(outcome.summary.as_bytes());
        }
        (None, None) => {
            if outcome.status == Status::Usage {
                eprint!("{}", outcome.summary);
            } else {
                let _ = stdout.write_all(outcome.summary.as_bytes());
            }
        }
    }
    outcome.status
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Status::Usage.code() as u8
            } else {
                0
            });
        }
    };
    let (flags, kind) = match &cli.command {
        Command::Verify(f) => (f, None),
        Command::Zbw(f) => (f, Some(SimKind::Zbw)),
        Command::Locality(f) => (f, Some(SimKind::Locality)),
        Command::Covariance(f) => (f, Some(SimKind::Covariance)),
        Command::Yukawa(f) => (f, Some(SimKind::Yukawa)),
    };
    let cfg = match load_config(flags) {
        Ok(c) => c,
        Err((status, msg)) => {
            eprintln!("{msg}");
            return ExitCode::from(status.code() as u8);
        }
    };
    let outcome = match kind {
        None => run_verify(&cfg),
        Some(k) => run_sim(k, &cfg),
    };
    let status = emit(&outcome, cfg.out.as_ref());
    ExitCode::from(status.code() as u8)
}
