//! `scldpc`: build, verify, lift and simulate 4-cycle-free spatially coupled
//! LDPC codes from the command line.
//!
//! Exit status: 0 on success, 1 when a construction or verification fails
//! (for example a 4-cycle is found), 2 on usage errors.

mod args;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use scldpc::alist::{from_alist, to_alist};
use scldpc::coupling::{design_rate, format_rate};
use scldpc::girth::{girth, has_four_cycle};
use scldpc::sim::{ber_sweep, records_to_csv, BlockLayout, DecoderKind, SimConfig};
use scldpc::{
    find_min_moe, generate_good_sequence, h_is_four_cycle_free, random_apm_assignment,
    CoupledCode, ExponentMatrix, IndexSet, SparseBinaryMatrix,
};

#[derive(Debug, Parser)]
#[command(name = "scldpc", version, about = "4-cycle-free spatially coupled LDPC codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search for a good sequence.
    GenSeq(GenSeqArgs),
    /// Build and verify a terminated coupled parity-check matrix.
    Build(BuildArgs),
    /// Girth and 4-cycle check of an alist matrix.
    Check(CheckArgs),
    /// Pattern verdict for an exponent matrix and index set, cross-checked by brute force.
    CheckE(CheckEArgs),
    /// Random 4-cycle-free affine permutation lifting of an alist matrix.
    Lift(LiftArgs),
    /// BER sweep over an AWGN channel.
    Simulate(SimulateArgs),
}

#[derive(Debug, Args)]
struct GenSeqArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    /// Largest allowed element.
    #[arg(long, conflicts_with = "min_w", required_unless_present = "min_w")]
    w: Option<u32>,
    /// Search for the smallest maximum element instead.
    #[arg(long, requires = "w_cap")]
    min_w: bool,
    #[arg(long)]
    w_cap: Option<u32>,
}

#[derive(Debug, Args)]
struct BuildArgs {
    #[arg(long, requires_all = ["q", "seq"])]
    p: Option<usize>,
    #[arg(long, requires = "p")]
    q: Option<usize>,
    /// Comma-separated sequence placed on the diagonals of E.
    #[arg(long, requires = "p", conflicts_with = "matrix")]
    seq: Option<String>,
    /// Exponent matrix text file, as an alternative to --seq.
    #[arg(long, required_unless_present = "seq")]
    matrix: Option<PathBuf>,
    /// Comma-separated index set; defaults to the least interval covering E.
    #[arg(long)]
    index_set: Option<String>,
    #[arg(long = "L")]
    l: usize,
    #[arg(long)]
    out: PathBuf,
    /// Write the matrix even when verification fails.
    #[arg(long)]
    force: bool,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long)]
    alist: PathBuf,
    #[arg(long, default_value_t = scldpc::girth::DEFAULT_GIRTH_BOUND)]
    girth_bound: usize,
}

#[derive(Debug, Args)]
struct CheckEArgs {
    #[arg(long)]
    matrix: PathBuf,
    #[arg(long)]
    index_set: Option<String>,
}

#[derive(Debug, Args)]
struct LiftArgs {
    #[arg(long)]
    alist: PathBuf,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    max_tries: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DecoderArg {
    /// Flooding schedule on the whole matrix.
    Fs,
    /// Sliding window over block columns.
    Sw,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// Parity-check matrix in alist format.
    #[arg(long)]
    code: PathBuf,
    /// Eb/N0 grid in dB as LO:STEP:HI, or a single value.
    #[arg(long)]
    ebn0: String,
    #[arg(long, value_enum)]
    decoder: DecoderArg,
    /// Window size in block columns (sliding window only).
    #[arg(long, required_if_eq("decoder", "sw"))]
    window: Option<usize>,
    /// Coupling length of the code (sliding window only).
    #[arg(long = "L", required_if_eq("decoder", "sw"))]
    l: Option<usize>,
    /// Coupling width of the code (sliding window only).
    #[arg(long = "w", required_if_eq("decoder", "sw"))]
    w: Option<usize>,
    #[arg(long, default_value_t = 100)]
    max_iter: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    max_frames: u64,
    #[arg(long)]
    target_errors: u64,
    #[arg(long)]
    out: PathBuf,
}

enum Exit {
    Usage(anyhow::Error),
    Failure(anyhow::Error),
}

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        Exit::Failure(e)
    }
}

type CmdResult = Result<(), Exit>;

fn usage(e: impl Into<anyhow::Error>) -> Exit {
    Exit::Usage(e.into())
}

fn failure(msg: impl std::fmt::Display) -> Exit {
    Exit::Failure(anyhow!("{msg}"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn read_alist(path: &Path) -> anyhow::Result<SparseBinaryMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_alist(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_matrix(path: &Path) -> anyhow::Result<ExponentMatrix> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    ExponentMatrix::from_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn index_set_for(e: &ExponentMatrix, flag: Option<&str>) -> Result<IndexSet, Exit> {
    match flag {
        Some(s) => IndexSet::new(args::parse_list(s).map_err(usage)?).map_err(usage),
        None => IndexSet::covering(&e.soe()).map_err(usage),
    }
}

fn gen_seq(a: GenSeqArgs) -> CmdResult {
    if a.min_w {
        let cap = a.w_cap.expect("clap enforces --w-cap");
        match find_min_moe(a.p, a.q, cap).map_err(usage)? {
            Some((w, seq)) => {
                println!("w={w}");
                println!("sequence={}", args::join(&seq));
                println!("moe={}", scldpc::moe(&seq).map_err(usage)?);
                Ok(())
            }
            None => Err(failure(format!(
                "no good sequence for (p, q) = ({}, {}) with maximum element <= {cap}",
                a.p, a.q
            ))),
        }
    } else {
        let w = a.w.expect("clap enforces --w");
        match generate_good_sequence(a.p, a.q, w).map_err(usage)? {
            Some(seq) => {
                println!("sequence={}", args::join(&seq));
                println!("moe={}", scldpc::moe(&seq).map_err(usage)?);
                Ok(())
            }
            None => Err(failure(format!(
                "no good sequence for (p, q) = ({}, {}) with maximum element <= {w}",
                a.p, a.q
            ))),
        }
    }
}

fn build(a: BuildArgs) -> CmdResult {
    let e = match (&a.seq, &a.matrix) {
        (Some(seq), _) => {
            let values = args::parse_list(seq).map_err(usage)?;
            let (p, q) = (a.p.expect("clap enforces --p"), a.q.expect("clap enforces --q"));
            ExponentMatrix::from_diagonals(&values, p, q).map_err(usage)?
        }
        (None, Some(path)) => read_matrix(path)?,
        (None, None) => unreachable!("clap requires --seq or --matrix"),
    };
    let index_set = index_set_for(&e, a.index_set.as_deref())?;
    let code = CoupledCode::new(e, index_set).map_err(usage)?;
    let h = code.terminated_pcm(a.l).map_err(usage)?;

    let h_free = code.is_four_cycle_free();
    println!("E 4-cycle free: {}", yes_no(code.exponents().is_four_cycle_free()));
    println!("H 4-cycle free: {}", yes_no(h_free));
    println!("coupling width: {}", code.w());
    println!("dimensions: {} x {}", h.n_rows(), h.n_cols());
    if code.p() < code.q() {
        let rate = design_rate(code.p(), code.q(), a.l, code.w()).map_err(usage)?;
        println!("design rate: {}", format_rate(rate));
    }
    if !h_free && !a.force {
        return Err(failure("the coupled matrix has 4-cycles; nothing written (use --force)"));
    }
    write_atomic(&a.out, &to_alist(&h))?;
    if !h_free {
        eprintln!("warning: wrote {} although it contains 4-cycles", a.out.display());
    }
    println!("wrote {}", a.out.display());
    Ok(())
}

fn check(a: CheckArgs) -> CmdResult {
    let h = read_alist(&a.alist)?;
    let four = has_four_cycle(&h);
    println!("dimensions: {} x {}", h.n_rows(), h.n_cols());
    println!("girth: {}", girth(&h, a.girth_bound));
    println!("4-cycle free: {}", yes_no(!four));
    if four {
        return Err(failure("4-cycle found"));
    }
    Ok(())
}

fn check_e(a: CheckEArgs) -> CmdResult {
    let e = read_matrix(&a.matrix)?;
    let index_set = index_set_for(&e, a.index_set.as_deref())?;
    let verdict = h_is_four_cycle_free(&e, &index_set).map_err(usage)?;
    println!(
        "H 4-cycle free: {}; E 4-cycle free: {}",
        yes_no(verdict),
        yes_no(e.is_four_cycle_free())
    );
    let w = index_set.w();
    let code = CoupledCode::new(e, index_set).map_err(usage)?;
    let oracle = !has_four_cycle(&code.terminated_pcm(2 * (w + 1)).map_err(usage)?);
    println!(
        "brute force (L = {}): {} ({})",
        2 * (w + 1),
        yes_no(oracle),
        if oracle == verdict { "agrees" } else { "DISAGREES" }
    );
    if oracle != verdict {
        return Err(failure("pattern verdict disagrees with brute force"));
    }
    if !verdict {
        return Err(failure("the coupled matrix has 4-cycles"));
    }
    Ok(())
}

fn lift(a: LiftArgs) -> CmdResult {
    let base = read_alist(&a.alist)?;
    let code = random_apm_assignment(&base, a.m, a.seed, a.max_tries)
        .map_err(usage)?
        .ok_or_else(|| failure(format!("no 4-cycle-free lifting in {} tries", a.max_tries)))?;
    let lifted = code.lift();
    println!("dimensions: {} x {}", lifted.n_rows(), lifted.n_cols());
    write_atomic(&a.out, &to_alist(&lifted))?;
    println!("wrote {}", a.out.display());
    Ok(())
}

fn simulate(a: SimulateArgs) -> CmdResult {
    let code = read_alist(&a.code)?;
    let grid = args::parse_range(&a.ebn0).map_err(usage)?;
    let (decoder, layout) = match a.decoder {
        DecoderArg::Fs => (DecoderKind::Flooding, None),
        DecoderArg::Sw => {
            let (window, l, w) = (
                a.window.expect("clap enforces --window"),
                a.l.expect("clap enforces --L"),
                a.w.expect("clap enforces --w"),
            );
            let layout = BlockLayout::infer(&code, l, w).map_err(usage)?;
            (DecoderKind::SlidingWindow { window }, Some(layout))
        }
    };
    let config = SimConfig {
        code,
        layout,
        ebn0_grid: grid,
        decoder,
        max_iter: a.max_iter,
        seed: a.seed,
        max_frames: a.max_frames,
        target_bit_errors: a.target_errors,
    };
    config.validate().map_err(usage)?;
    let records = ber_sweep(&config).map_err(|e| Exit::Failure(e.into()))?;
    let csv = records_to_csv(&records);
    write_atomic(&a.out, &csv)?;
    print!("{csv}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::GenSeq(a) => gen_seq(a),
        Command::Build(a) => build(a),
        Command::Check(a) => check(a),
        Command::CheckE(a) => check_e(a),
        Command::Lift(a) => lift(a),
        Command::Simulate(a) => simulate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Exit::Failure(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
