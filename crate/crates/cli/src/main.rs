//! `charnum`: characteristic numbers of complete intersections from the
//! command line.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use charnum_core::{AlphaTuple, VarietyDescriptor};
use commands::{CmdResult, Failure, Family, Outcome, Preset, TargetT};

#[derive(Parser)]
#[command(name = "charnum", version, about = "Exact characteristic numbers of complete intersections")]
struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct DescriptorArgs {
    /// Projective factors, e.g. `2,1` for P^2 x P^1.
    #[arg(long)]
    ambient: Option<String>,
    /// Hypersurface multidegrees: entries comma-separated, equations
    /// semicolon-separated, e.g. `1,1;2,0`.
    #[arg(long, requires = "ambient")]
    degrees: Option<String>,
    /// Descriptor JSON, or any report carrying one under "descriptor".
    #[arg(long, conflicts_with_all = ["ambient", "degrees"])]
    file: Option<PathBuf>,
}

impl DescriptorArgs {
    fn given(&self) -> bool {
        self.ambient.is_some() || self.file.is_some()
    }

    fn resolve(&self) -> Result<VarietyDescriptor, Failure> {
        match (&self.file, &self.ambient) {
            (Some(path), _) => input::descriptor_from_file(path),
            (None, Some(a)) => input::descriptor_from_flags(a, self.degrees.as_deref()),
            (None, None) => Err("a variety is required: use --ambient/--degrees or --file".into()),
        }
        .map_err(Failure::Input)
    }
}

#[derive(Args, Clone)]
struct PointArgs {
    /// Degrees of known closed points of the target.
    #[arg(long)]
    points: Option<String>,
    /// Canned closed-point data instead of --points.
    #[arg(long, value_enum, conflicts_with = "points")]
    preset: Option<Preset>,
}

impl PointArgs {
    fn ideal(&self, q: u64) -> Result<charnum_core::ObstructionIdeal, Failure> {
        let points = self
            .points
            .as_deref()
            .map(|p| input::parse_list::<u64>(p, "point degree"))
            .transpose()
            .map_err(Failure::Input)?;
        commands::ideal(points, self.preset, q)
    }
}

#[derive(Subcommand)]
enum Command {
    /// deg s_alpha(T_X) for alpha of weighted degree dim X.
    Snumber {
        #[command(flatten)]
        variety: DescriptorArgs,
        /// Multiplicity counts, e.g. `0,1` for s_2 in two roots.
        #[arg(long)]
        alpha: String,
    },
    /// deg s_alpha(-T_X) for every alpha of weighted degree dim X.
    Hurewicz {
        #[command(flatten)]
        variety: DescriptorArgs,
    },
    /// The mod-q invariant t_{q^t - 1}(X).
    Tnumber {
        #[command(flatten)]
        variety: DescriptorArgs,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
    },
    /// The surface combination -(1/3 - l/2) S + (l/4) C over a set of l.
    LambdaFamily {
        #[command(flatten)]
        variety: DescriptorArgs,
        /// Comma-separated values of lambda.
        #[arg(long, allow_hyphen_values = true, default_value = "-4,-3,-2,-1,0,1,2,3,4")]
        lambda: String,
    },
    /// q | deg s_{q^t - 1}(T_X) for one variety or a whole family.
    CheckDivisibility {
        #[command(flatten)]
        variety: DescriptorArgs,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
        /// Family swept when no variety is given.
        #[arg(long, value_enum, default_value = "default")]
        family: Family,
    },
    /// Tests t(Y) = deg f * t(X) modulo the obstruction ideal of X.
    DegreeFormula {
        #[command(flatten)]
        variety: DescriptorArgs,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
        /// Degree of the rational map Y -> X.
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        deg_f: String,
        /// t(X) as a residue.
        #[arg(long, conflicts_with_all = ["target_ambient", "target_degrees"])]
        target_t: Option<u64>,
        /// Target X given inline; its t-number is computed.
        #[arg(long)]
        target_ambient: Option<String>,
        #[arg(long, requires = "target_ambient")]
        target_degrees: Option<String>,
        #[command(flatten)]
        points: PointArgs,
    },
    /// t of the quadric of dimension 2^m - 1, optionally against a target X.
    Quadric {
        #[arg(long)]
        m: u32,
        /// Dimension of a target X for the quadric verdict.
        #[arg(long)]
        dim_x: Option<u64>,
        #[command(flatten)]
        points: PointArgs,
    },
    /// Compares split-bundle evaluation with the Chern-class pipeline.
    Oracle {
        /// Dimension of the projective space.
        #[arg(long, default_value_t = 8)]
        ambient: u32,
        /// Root multiples of h.
        #[arg(long, allow_hyphen_values = true, default_value = "1,2,3,-1")]
        palette: String,
        #[arg(long, default_value_t = 3)]
        max_roots: usize,
        /// Defaults to the ambient dimension.
        #[arg(long)]
        max_weight: Option<u32>,
    },
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Snumber { variety, alpha } => {
            let alpha: AlphaTuple = alpha.parse().map_err(|e: charnum_core::Error| Failure::Input(e.to_string()))?;
            commands::snumber(&variety.resolve()?, &alpha)
        }
        Command::Hurewicz { variety } => commands::hurewicz(&variety.resolve()?),
        Command::Tnumber { variety, q, t } => commands::tnumber(&variety.resolve()?, q, t),
        Command::LambdaFamily { variety, lambda } => {
            let lambdas = input::parse_list::<i64>(&lambda, "lambda").map_err(Failure::Input)?;
            commands::lambda_family(&variety.resolve()?, &lambdas)
        }
        Command::CheckDivisibility { variety, q, t, family } => {
            let members = if variety.given() { Some(vec![variety.resolve()?]) } else { None };
            commands::check_divisibility(members, family, q, t)
        }
        Command::DegreeFormula { variety, q, t, deg_f, target_t, target_ambient, target_degrees, points } => {
            let y = variety.resolve()?;
            let deg_f: BigInt = deg_f.trim().parse().map_err(|_| Failure::Input(format!("bad degree {deg_f:?}")))?;
            let target = match (target_t, target_ambient) {
                (Some(r), _) => TargetT::Given(r),
                (None, Some(a)) => TargetT::Of(
                    input::descriptor_from_flags(&a, target_degrees.as_deref()).map_err(Failure::Input)?,
                ),
                (None, None) => {
                    return Err(Failure::Input("give --target-t or --target-ambient/--target-degrees".into()))
                }
            };
            let ideal = points.ideal(q)?;
            commands::degree_formula(&y, target, &deg_f, ideal, q, t)
        }
        Command::Quadric { m, dim_x, points } => {
            let target = match dim_x {
                Some(d) => Some((d, points.ideal(2)?)),
                None => None,
            };
            commands::quadric(m, target)
        }
        Command::Oracle { ambient, palette, max_roots, max_weight } => {
            let palette = input::parse_list::<i64>(&palette, "palette").map_err(Failure::Input)?;
            if palette.is_empty() || max_roots == 0 {
                return Err(Failure::Input("the palette and root count must be nonempty".into()));
            }
            commands::oracle(ambient, &palette, max_roots, max_weight.unwrap_or(ambient))
        }
    }
}

fn emit(outcome: &Outcome, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&outcome.json).expect("valid JSON"));
    } else {
        print!("{}", outcome.table);
    }
}

/// 0 on success, 1 when a checked property fails, 2 on bad input.
fn exit_status(result: &CmdResult) -> u8 {
    match result {
        Ok(o) if o.pass => 0,
        Ok(_) | Err(Failure::Property(_)) => 1,
        Err(Failure::Input(_)) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command);
    match &result {
        Ok(outcome) => {
            emit(outcome, cli.json);
            if !outcome.pass {
                eprintln!("charnum: property check failed");
            }
        }
        Err(Failure::Property(msg) | Failure::Input(msg)) => eprintln!("charnum: {msg}"),
    }
    ExitCode::from(exit_status(&result))
}
