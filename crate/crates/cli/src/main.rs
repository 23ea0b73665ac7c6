use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use uwca::analysis::{check_claim, population_csv, write_reports, Claim, SuiteOptions};
use uwca::engine::snapshot::write_snapshot;
use uwca::render::{render_bitmap, render_state};
use uwca::{AutomatonState, LatticeKind, RenderMode, RenderStyle, DEFAULT_CELL_BUDGET};

/// Largest generation the engine can record.
const MAX_GENERATIONS: u32 = (1 << 28) - 1;

#[derive(Parser)]
#[command(
    name = "uwca",
    version,
    about = "Ulam-Warburton cellular automaton toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grow the automaton and write a state snapshot.
    Run(Common),
    /// Check structural claims and write a report.
    Verify(VerifyArgs),
    /// Draw the automaton as SVG or plain PBM.
    Render(RenderArgs),
    /// Write the per-generation population table as CSV.
    Seq(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Lattice::Square)]
    lattice: Lattice,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=MAX_GENERATIONS as i64))]
    generations: u32,
    /// Output file; a name derived from the flags is used when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum number of live cells before the run is refused.
    #[arg(long, env = "UWCA_CELL_BUDGET", default_value_t = DEFAULT_CELL_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    cell_budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Comma-separated claim names, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_claims)]
    claims: ClaimSet,
    /// Restrict the pioneer-gasket check to one slice.
    #[arg(long)]
    slice: Option<usize>,
    /// Radius for the 2-adic check (default: half the generation).
    #[arg(long)]
    radius: Option<u32>,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value = "plain", value_parser = parse_style)]
    style: RenderMode,
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
    /// Outline every cell within reach, live or not.
    #[arg(long)]
    grid: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lattice {
    Square,
    Hex,
}

impl From<Lattice> for LatticeKind {
    fn from(l: Lattice) -> LatticeKind {
        match l {
            Lattice::Square => LatticeKind::Square,
            Lattice::Hex => LatticeKind::Hex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Pbm,
}

/// `None` selects every claim that applies to the state.
#[derive(Clone)]
struct ClaimSet(Option<Vec<Claim>>);

fn parse_claims(s: &str) -> std::result::Result<ClaimSet, String> {
    if s == "all" {
        return Ok(ClaimSet(None));
    }
    let mut claims: Vec<Claim> = Vec::new();
    for name in s.split(',') {
        let claim = name.trim().parse()?;
        if !claims.contains(&claim) {
            claims.push(claim);
        }
    }
    if claims.is_empty() {
        return Err("no claims given".into());
    }
    Ok(ClaimSet(Some(claims)))
}

fn parse_style(s: &str) -> std::result::Result<RenderMode, String> {
    s.parse()
}

impl Common {
    fn kind(&self) -> LatticeKind {
        self.lattice.into()
    }

    fn grow(&self) -> Result<AutomatonState> {
        let mut state = AutomatonState::with_budget(self.kind(), self.cell_budget);
        state.run_to(self.generations)?;
        Ok(state)
    }

    fn out_path(&self, suffix: &str) -> PathBuf {
        self.out.clone().unwrap_or_else(|| {
            PathBuf::from(format!("{}-{}{suffix}", self.kind(), self.generations))
        })
    }
}

/// Writes through a temporary file in the target directory so a failed run
/// never leaves a partial artifact behind.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot write in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    Ok(())
}

fn cmd_run(args: &Common) -> Result<bool> {
    let state = args.grow()?;
    let path = args.out_path(".snapshot");
    write_atomic(&path, &write_snapshot(&state))?;
    println!(
        "{} lattice, generation {}: {} live cells -> {}",
        state.kind(),
        state.generation(),
        state.live_count(),
        path.display()
    );
    Ok(true)
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let state = args.common.grow()?;
    let claims = match &args.claims.0 {
        Some(list) => list.clone(),
        None => Claim::ALL
            .into_iter()
            .filter(|c| c.applies_to(&state))
            .collect(),
    };
    let opts = SuiteOptions {
        slice: args.slice,
        radius: args.radius,
        ..SuiteOptions::default()
    };
    let mut reports = Vec::new();
    for claim in claims {
        let r =
            check_claim(&state, claim, &opts).with_context(|| format!("claim {}", claim.name()))?;
        reports.extend(r);
    }
    let path = args.common.out_path(".report");
    write_atomic(&path, &write_reports(&reports))?;
    for r in &reports {
        println!("{}", r.summary());
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} passed -> {}", reports.len(), path.display());
    Ok(passed == reports.len())
}

fn cmd_render(args: &RenderArgs) -> Result<bool> {
    if matches!(args.format, Format::Pbm) && args.style != RenderMode::Plain {
        bail!("the pbm format only supports the plain style");
    }
    let state = args.common.grow()?;
    let (doc, suffix) = match args.format {
        Format::Svg => {
            let style = RenderStyle {
                show_grid: args.grid,
                ..RenderStyle::new(args.style)
            };
            (
                render_state(&state, style)?,
                format!("-{}.svg", args.style.name()),
            )
        }
        Format::Pbm => (render_bitmap(&state)?, ".pbm".to_string()),
    };
    let path = args.common.out_path(&suffix);
    write_atomic(&path, &doc)?;
    println!(
        "{} live cells drawn -> {}",
        state.live_count(),
        path.display()
    );
    Ok(true)
}

fn cmd_seq(args: &Common) -> Result<bool> {
    let state = args.grow()?;
    let path = args.out_path(".csv");
    write_atomic(&path, &population_csv(&state))?;
    println!(
        "{} generations, {} live cells -> {}",
        state.generation() + 1,
        state.live_count(),
        path.display()
    );
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run(a) => cmd_run(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Render(a) => cmd_render(a),
        Command::Seq(a) => cmd_seq(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
