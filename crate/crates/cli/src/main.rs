//! Command-line frontend for the entanglement-witness toolkit.
//!
//! Exit codes: 0 for an affirmative outcome (entanglement detected, state is
//! PPT, property certified, all identities hold), 1 for a negative or
//! inconclusive outcome, and 2 for usage, input, or numerical errors.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use entwit_cli::io;
use entwit_core::linalg::{min_eigenvalue, partial_transpose, BipartiteDims};
use entwit_core::maps::{
    cho_kye_t, choi_c1, choi_c2, generalized_choi, inner_automorphism, positivity_seesaw,
    transpose_map, unitary_u, MapSpec, SeesawOptions,
};
use entwit_core::upb::{
    complete_product_basis, pyramid, tiles, unextendability_seesaw, upb_complement_state,
    DensityOperator, ProductBasisSet,
};
use entwit_core::verify::identity_suite;
use entwit_core::witness::{detect, sweep_with_report, SweepConfig, SweepCurve};

type BoxError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "entwit",
    version,
    about = "Detect entanglement with positive-but-not-completely-positive maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a built-in bound entangled benchmark state as a matrix file.
    State(StateArgs),
    /// Check whether a state's partial transpose stays positive.
    PptCheck(PptCheckArgs),
    /// Apply one (optionally rotated) map to a state and report the verdict.
    Detect(DetectArgs),
    /// Scan the rotation family over an angle grid and report detection
    /// intervals.
    Sweep(SweepArgs),
    /// Compare two sweep-curve files after shifting the first by an angle.
    Shift(ShiftArgs),
    /// Check the built-in algebraic identities between the map families.
    VerifyIdentities,
    /// Search for negativity of a map over product vectors (seesaw
    /// minimization); a non-negative minimum supports positivity.
    Positivity(PositivityArgs),
    /// Certify that no product vector is orthogonal to a product basis
    /// (seesaw minimization).
    Unextendability(UnextendabilityArgs),
}

/// Built-in bound entangled states (complements of unextendable bases).
#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Tiles,
    Pyramid,
}

impl Family {
    fn complement_state(self) -> Result<DensityOperator, BoxError> {
        let basis = match self {
            Family::Tiles => tiles(),
            Family::Pyramid => pyramid(),
        };
        Ok(upb_complement_state(&basis)?)
    }
}

/// Product bases accepted by the unextendability search.
#[derive(Clone, Copy, ValueEnum)]
enum BasisChoice {
    Tiles,
    Pyramid,
    /// A full orthonormal product basis, for which the minimum overlap is
    /// exactly 1.
    Complete,
}

impl BasisChoice {
    fn basis(self) -> Result<ProductBasisSet, BoxError> {
        Ok(match self {
            BasisChoice::Tiles => tiles(),
            BasisChoice::Pyramid => pyramid(),
            BasisChoice::Complete => complete_product_basis(BipartiteDims::new(3, 3)?),
        })
    }
}

/// Where a subject state comes from: a built-in family or a matrix file.
#[derive(Args)]
struct StateSelection {
    /// Built-in state (complement of the named unextendable basis).
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Matrix file holding a density operator.
    #[arg(long, value_name = "FILE")]
    state: Option<PathBuf>,
    /// Tensor factor dimensions of a loaded state, e.g. 3x3 (defaults to the
    /// square split when the total dimension is a perfect square).
    #[arg(long, value_parser = io::parse_dims)]
    dims: Option<BipartiteDims>,
}

impl StateSelection {
    fn resolve(&self) -> Result<DensityOperator, BoxError> {
        match (self.family, &self.state) {
            (Some(family), None) => family.complement_state(),
            (None, Some(path)) => {
                let matrix = io::read_matrix(&fs::read_to_string(path)?)?;
                let dims = match self.dims {
                    Some(dims) => dims,
                    None => square_split(matrix.rows())?,
                };
                Ok(DensityOperator::new(matrix, dims)?.with_label(path.display().to_string()))
            }
            _ => Err("choose exactly one state source: --family or --state".into()),
        }
    }
}

fn square_split(total: usize) -> Result<BipartiteDims, BoxError> {
    let side = (total as f64).sqrt().round() as usize;
    if side * side != total {
        return Err(
            format!("total dimension {total} is not a perfect square; pass --dims AxB").into(),
        );
    }
    Ok(BipartiteDims::new(side, side)?)
}

/// Names a positive map: choi1, choi2, transpose, or a curve point cho-kye:T.
fn parse_map(s: &str) -> Result<MapSpec, String> {
    let lower = s.trim().to_ascii_lowercase();
    match lower.as_str() {
        "choi1" => Ok(choi_c1()),
        "choi2" => Ok(choi_c2()),
        "transpose" => Ok(transpose_map(3)),
        other => match other.strip_prefix("cho-kye:") {
            Some(t) => {
                let t: f64 = t
                    .parse()
                    .map_err(|_| format!("'{s}': bad curve parameter '{t}'"))?;
                Ok(generalized_choi(cho_kye_t(t).map_err(|e| e.to_string())?))
            }
            None => Err(format!(
                "unknown map '{s}' (expected choi1, choi2, transpose, or cho-kye:T)"
            )),
        },
    }
}

#[derive(Args)]
struct StateArgs {
    /// Which built-in state to write.
    #[arg(long, value_enum)]
    family: Family,
    /// Destination file (stdout when omitted).
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PptCheckArgs {
    #[command(flatten)]
    selection: StateSelection,
    /// Tolerance below zero still counted as positive.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args)]
struct DetectArgs {
    /// Map to apply to the second tensor factor.
    #[arg(long, value_parser = parse_map)]
    map: MapSpec,
    #[command(flatten)]
    selection: StateSelection,
    /// Rotation angle of the map (a number or a pi literal like 3pi/4).
    #[arg(long, value_parser = io::parse_angle, allow_hyphen_values = true, default_value = "0")]
    theta: f64,
    /// An eigenvalue below -tol counts as detection.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Map whose rotation family to sweep.
    #[arg(long, value_parser = parse_map)]
    map: MapSpec,
    #[command(flatten)]
    selection: StateSelection,
    /// First grid angle.
    #[arg(long, value_parser = io::parse_angle, allow_hyphen_values = true, default_value = "0")]
    start: f64,
    /// Last grid angle (inclusive).
    #[arg(long, value_parser = io::parse_angle, allow_hyphen_values = true, default_value = "2pi")]
    end: f64,
    /// Number of grid samples, endpoints included.
    #[arg(long, default_value_t = 721)]
    samples: usize,
    /// An eigenvalue below -tol counts as detection.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Write the sampled curve to this CSV file.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ShiftArgs {
    /// Curve file whose angles are shifted.
    #[arg(long, value_name = "FILE")]
    first: PathBuf,
    /// Curve file compared against.
    #[arg(long, value_name = "FILE")]
    second: PathBuf,
    /// Shift applied to the first curve (a number or a pi literal).
    #[arg(long, value_parser = io::parse_angle, allow_hyphen_values = true)]
    shift: f64,
    /// Largest pointwise distance still counted as a match.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct SeesawArgs {
    /// Independent random restarts.
    #[arg(long, default_value_t = 50)]
    restarts: usize,
    /// Alternation steps per restart.
    #[arg(long, default_value_t = 200)]
    iterations: usize,
    /// Seed for the restart starting points.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SeesawArgs {
    fn options(&self) -> SeesawOptions {
        SeesawOptions {
            restarts: self.restarts,
            iterations: self.iterations,
            seed: self.seed,
            ..SeesawOptions::default()
        }
    }
}

#[derive(Args)]
struct PositivityArgs {
    /// Map whose positivity to probe.
    #[arg(long, value_parser = parse_map)]
    map: MapSpec,
    #[command(flatten)]
    seesaw: SeesawArgs,
    /// A minimum above -tol counts as positive.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct UnextendabilityArgs {
    /// Product basis to search.
    #[arg(long, value_enum)]
    family: BasisChoice,
    #[command(flatten)]
    seesaw: SeesawArgs,
    /// A minimum overlap above this threshold certifies unextendability.
    #[arg(long, default_value_t = 0.01)]
    threshold: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, BoxError> {
    match command {
        Command::State(args) => run_state(&args),
        Command::PptCheck(args) => run_ppt_check(&args),
        Command::Detect(args) => run_detect(&args),
        Command::Sweep(args) => run_sweep(&args),
        Command::Shift(args) => run_shift(&args),
        Command::VerifyIdentities => run_verify_identities(),
        Command::Positivity(args) => run_positivity(&args),
        Command::Unextendability(args) => run_unextendability(&args),
    }
}

fn verdict(affirmative: bool) -> ExitCode {
    if affirmative {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_state(args: &StateArgs) -> Result<ExitCode, BoxError> {
    let rho = args.family.complement_state()?;
    let mut buffer = Vec::new();
    io::write_matrix(&mut buffer, rho.matrix())?;
    match &args.output {
        Some(path) => {
            fs::write(path, &buffer)?;
            println!(
                "wrote {} ({}x{}) to {}",
                rho.label(),
                rho.matrix().rows(),
                rho.matrix().cols(),
                path.display()
            );
        }
        None => std::io::stdout().lock().write_all(&buffer)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn run_ppt_check(args: &PptCheckArgs) -> Result<ExitCode, BoxError> {
    let rho = args.selection.resolve()?;
    let pt = partial_transpose(rho.matrix(), rho.dims())?;
    let min = min_eigenvalue(&pt.hermitian_part())?;
    let ppt = min >= -args.tol;
    println!("state: {} on {}", rho.label(), rho.dims());
    println!("smallest partial-transpose eigenvalue: {min:.6e}");
    println!(
        "{}",
        if ppt {
            "PPT: the transpose criterion sees no entanglement"
        } else {
            "NPT: entangled"
        }
    );
    Ok(verdict(ppt))
}

fn run_detect(args: &DetectArgs) -> Result<ExitCode, BoxError> {
    let rho = args.selection.resolve()?;
    let map = if args.theta == 0.0 {
        args.map.clone()
    } else {
        inner_automorphism(&args.map, &unitary_u(args.theta))?
    };
    let outcome = detect(&map, &rho, args.tol)?;
    println!("map: {}", map.label());
    println!("state: {}", rho.label());
    println!("smallest extended eigenvalue: {:.6e}", outcome.lambda_min);
    println!(
        "{}",
        if outcome.detected {
            "entanglement detected"
        } else {
            "inconclusive at this angle"
        }
    );
    Ok(verdict(outcome.detected))
}

fn run_sweep(args: &SweepArgs) -> Result<ExitCode, BoxError> {
    let rho = args.selection.resolve()?;
    let config = SweepConfig::new(args.start, args.end, args.samples, args.tol)?;
    let (curve, report) = sweep_with_report(&args.map, &rho, &config)?;

    if let Some(path) = &args.output {
        let mut buffer = Vec::new();
        io::write_curve(&mut buffer, &curve)?;
        fs::write(path, &buffer)?;
        println!("wrote {} samples to {}", curve.len(), path.display());
    }

    println!("map family: {}", curve.map_label());
    println!("state: {}", curve.state_label());
    println!(
        "global minimum {:.6e} at theta = {:.6}",
        report.global_min_lambda, report.global_min_theta
    );
    if report.detected() {
        for (k, (left, right)) in report.intervals.iter().enumerate() {
            println!("detection interval {k}: [{left:.6}, {right:.6}]");
        }
    } else {
        println!("no detection anywhere on the grid");
    }
    Ok(verdict(report.detected()))
}

fn run_shift(args: &ShiftArgs) -> Result<ExitCode, BoxError> {
    let first = load_curve(&args.first)?;
    let second = load_curve(&args.second)?;
    let distance = entwit_core::witness::curve_shift_distance(&first, &second, args.shift)?;
    println!(
        "largest pointwise difference after shifting {} by {}: {distance:.3e}",
        args.first.display(),
        args.shift
    );
    let matched = distance <= args.tol;
    println!(
        "{}",
        if matched {
            "curves match under this shift"
        } else {
            "curves do not match under this shift"
        }
    );
    Ok(verdict(matched))
}

fn load_curve(path: &Path) -> Result<SweepCurve, BoxError> {
    let points = io::read_curve(&fs::read_to_string(path)?)?;
    Ok(SweepCurve::new(points, "file", path.display().to_string())?)
}

fn run_verify_identities() -> Result<ExitCode, BoxError> {
    let checks = identity_suite();
    let mut all_passed = true;
    for check in &checks {
        let status = if check.passed() { "ok     " } else { "FAILED " };
        println!(
            "{status} residual {:.3e} (tol {:.0e})  {}",
            check.residual, check.tol, check.name
        );
        all_passed &= check.passed();
    }
    println!(
        "{} of {} identities hold",
        checks.iter().filter(|c| c.passed()).count(),
        checks.len()
    );
    Ok(verdict(all_passed))
}

fn run_positivity(args: &PositivityArgs) -> Result<ExitCode, BoxError> {
    let outcome = positivity_seesaw(&args.map, &args.seesaw.options())?;
    println!("map: {}", args.map.label());
    println!(
        "smallest product-vector expectation found: {:.6e}",
        outcome.min_value
    );
    let positive = outcome.min_value >= -args.tol;
    println!(
        "{}",
        if positive {
            "no negativity found: consistent with a positive map"
        } else {
            "negative expectation found: the map is not positive"
        }
    );
    Ok(verdict(positive))
}

fn run_unextendability(args: &UnextendabilityArgs) -> Result<ExitCode, BoxError> {
    let basis = args.family.basis()?;
    let outcome = unextendability_seesaw(&basis, &args.seesaw.options())?;
    println!("basis: {} ({} vectors)", basis.label(), basis.len());
    println!(
        "smallest product-vector overlap with the span: {:.6e}",
        outcome.min_value
    );
    let unextendable = outcome.min_value > args.threshold;
    println!(
        "{}",
        if unextendable {
            "unextendable: every product vector meets the span"
        } else {
            "not certified: found a product vector nearly orthogonal to the span"
        }
    );
    Ok(verdict(unextendable))
}
