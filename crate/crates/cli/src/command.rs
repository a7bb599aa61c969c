//! Argument parsing and dispatch.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand};
use ivhs_core::canonical::{ci_mu, hyperelliptic_mu, plane_mu, plane_mu_declared};
use ivhs_core::degeneration::{equisingular_rank, mhs_dims, rank_defect, DegenerationSpec, SmoothingStep};
use ivhs_core::invariants::{
    brill_noether_rho, ci_genus, class_mu_report, curve_invariants, h0_omega_sq, plane_pa, sym2_dim, PetriClass,
    SingularityRecord,
};
use ivhs_core::jacobian::{ivhs_matrix, ivhs_max_rank, JacobianContext};
use ivhs_core::{Polynomial, VariableSet};

use crate::fixtures;
use crate::report::{
    render_json, render_text, BrillNoetherPayload, ClassPayload, DegenerationPayload, InvariantsPayload, IvhsPayload,
    JacobianPayload, MuPayload, Provenance, Report, ReportBody, SearchPayload,
};
use crate::spec_file::load_degeneration_spec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Default candidate budget for `jacobian` when no direction is given.
pub const DEFAULT_BUDGET: usize = 200;

#[derive(Debug, Parser)]
#[command(
    name = "ivhs",
    version,
    about = "Exact IVHS and canonical multiplication computations for curves"
)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical multiplication map Sym² H⁰(ω) → H⁰(ω²).
    Mu {
        #[command(subcommand)]
        model: MuModel,
    },
    /// Jacobian-ring IVHS matrices of a smooth plane curve.
    Jacobian(JacobianArgs),
    /// Dimension counts for a class of curves.
    Class(ClassArgs),
    /// Genus, δ and mixed Hodge numbers of a curve with declared singularities.
    Invariants(InvariantsArgs),
    /// Rank defect of a degenerating family.
    Degenerate(DegenerateArgs),
    /// Run the golden fixture suite.
    Fixtures(FixturesArgs),
}

#[derive(Debug, Subcommand)]
enum MuModel {
    /// Plane curve F(x, y, z) = 0.
    Plane {
        #[arg(long)]
        poly: String,
        /// Declared singularities, e.g. `node,cusp`.
        #[arg(long, value_delimiter = ',')]
        sing: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        vars: Vec<String>,
    },
    /// Complete intersection Q = C = 0 in P³.
    Ci {
        #[arg(long)]
        q: String,
        #[arg(long)]
        c: String,
        #[arg(long, value_delimiter = ',', default_value = "x0,x1,x2,x3")]
        vars: Vec<String>,
    },
    /// Hyperelliptic curve y² = f(x) of genus g.
    Hyperelliptic {
        #[arg(long)]
        genus: u64,
    },
}

#[derive(Debug, Args)]
struct JacobianArgs {
    #[arg(long)]
    poly: String,
    /// Deformation direction ξ of the same degree.
    #[arg(long)]
    xi: Option<String>,
    /// Candidate budget for the maximal-rank search (runs by default when
    /// `--xi` is absent).
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Debug, Args)]
struct ClassArgs {
    #[arg(long)]
    genus: u64,
    #[arg(long)]
    class: String,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("genus_source").required(true)))]
struct InvariantsArgs {
    #[arg(long, group = "genus_source")]
    pa: Option<u64>,
    /// Degree of a plane curve.
    #[arg(long, group = "genus_source")]
    degree: Option<u64>,
    /// Bidegree `a,b` of a complete intersection in P³.
    #[arg(long, group = "genus_source", value_delimiter = ',', num_args = 1)]
    ci: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',')]
    sing: Vec<String>,
    /// Brill–Noether data `r,d`.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    rho: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("degeneration_source").required(true)))]
struct DegenerateArgs {
    #[arg(long, requires = "step")]
    pa: Option<u64>,
    /// `initial:target`, repeatable.
    #[arg(long, group = "degeneration_source")]
    step: Vec<String>,
    /// JSON spec file.
    #[arg(long, group = "degeneration_source")]
    spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FixturesArgs {
    /// Directory of fixture files; defaults to the built-in suite.
    #[arg(long)]
    dir: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Validation { .. } => EXIT_VALIDATION,
            Self::Usage(_) => EXIT_USAGE,
        }
    }

    fn field(field: &str) -> impl Fn(ivhs_core::Error) -> Self + '_ {
        move |e| Self::Validation {
            field: field.to_string(),
            message: e.to_string(),
        }
    }
}

/// Runs one invocation and returns `(exit code, output)`. The first element
/// of `argv` is the program name.
pub fn run_command<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => EXIT_USAGE,
                ErrorKind::ValueValidation | ErrorKind::InvalidValue => EXIT_VALIDATION,
                _ => EXIT_USAGE,
            };
            return (code, e.render().to_string());
        }
    };
    let provenance = Provenance {
        args: argv.iter().skip(1).filter(|a| *a != "--json").cloned().collect(),
    };
    if let Command::Fixtures(args) = &cli.command {
        return run_fixtures(args, cli.json);
    }
    match execute(cli.command) {
        Ok(body) => {
            let report = Report { body, provenance };
            let out = if cli.json {
                render_json(&report)
            } else {
                render_text(&report)
            };
            (EXIT_OK, out)
        }
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}

/// Computes a report without rendering it.
pub fn build_report<I, T>(argv: I) -> Result<Report, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(&argv).map_err(|e| CliError::Usage(e.to_string()))?;
    if matches!(cli.command, Command::Fixtures(_)) {
        return Err(CliError::Usage("fixtures does not produce a report".to_string()));
    }
    let provenance = Provenance {
        args: argv.iter().skip(1).filter(|a| *a != "--json").cloned().collect(),
    };
    Ok(Report {
        body: execute(cli.command)?,
        provenance,
    })
}

fn run_fixtures(args: &FixturesArgs, json: bool) -> (i32, String) {
    let suite = match &args.dir {
        Some(dir) => fixtures::load_dir(dir),
        None => fixtures::builtin(),
    };
    match suite {
        Ok(suite) => {
            let summary = fixtures::run_fixture_suite(&suite);
            let out = if json {
                summary.render_json_lines()
            } else {
                summary.render_text()
            };
            (summary.exit_code(), out)
        }
        Err(e) => (EXIT_VALIDATION, format!("error: {e}\n")),
    }
}

fn execute(command: Command) -> Result<ReportBody, CliError> {
    match command {
        Command::Mu { model } => mu(model),
        Command::Jacobian(args) => jacobian(args),
        Command::Class(args) => class(args),
        Command::Invariants(args) => invariants(args),
        Command::Degenerate(args) => degenerate(args),
        Command::Fixtures(_) => unreachable!("handled by run_command"),
    }
}

fn variables(names: &[String]) -> Result<VariableSet, CliError> {
    VariableSet::new(names).map_err(CliError::field("--vars"))
}

fn parse(text: &str, vars: &VariableSet, field: &str) -> Result<Polynomial, CliError> {
    Polynomial::parse(text, vars).map_err(CliError::field(field))
}

fn singularities(kinds: &[String]) -> Result<Vec<SingularityRecord>, CliError> {
    kinds
        .iter()
        .map(|k| k.parse().map_err(CliError::field("--sing")))
        .collect()
}

fn mu(model: MuModel) -> Result<ReportBody, CliError> {
    match model {
        MuModel::Plane { poly, sing, vars } => {
            let vars = variables(&vars)?;
            let f = parse(&poly, &vars, "--poly")?;
            let sings = singularities(&sing)?;
            let report = if sings.is_empty() {
                plane_mu(&f)
            } else {
                plane_mu_declared(&f, &sings)
            };
            let report = report.map_err(CliError::field(if sings.is_empty() { "--poly" } else { "--sing" }))?;
            Ok(ReportBody::PlaneMu(MuPayload::from(&report)))
        }
        MuModel::Ci { q, c, vars } => {
            let vars = variables(&vars)?;
            let q = parse(&q, &vars, "--q")?;
            let c = parse(&c, &vars, "--c")?;
            let report = ci_mu(&q, &c).map_err(CliError::field("--q/--c"))?;
            Ok(ReportBody::CiMu(MuPayload::from(&report)))
        }
        MuModel::Hyperelliptic { genus } => {
            let report = hyperelliptic_mu(genus).map_err(CliError::field("--genus"))?;
            Ok(ReportBody::HyperellipticMu(MuPayload::from(&report)))
        }
    }
}

fn jacobian(args: JacobianArgs) -> Result<ReportBody, CliError> {
    let vars = VariableSet::xyz();
    let f = parse(&args.poly, &vars, "--poly")?;
    let ctx = JacobianContext::new(&f).map_err(CliError::field("--poly"))?;
    let direction = match &args.xi {
        Some(text) => {
            let xi = parse(text, &vars, "--xi")?;
            Some(IvhsPayload::from(
                &ivhs_matrix(&ctx, &xi).map_err(CliError::field("--xi"))?,
            ))
        }
        None => None,
    };
    let budget = args.budget.or(args.xi.is_none().then_some(DEFAULT_BUDGET));
    let search = match budget {
        Some(0) => {
            return Err(CliError::Validation {
                field: "--budget".to_string(),
                message: "budget must be at least 1".to_string(),
            })
        }
        Some(budget) => {
            let s = ivhs_max_rank(&ctx, budget).map_err(CliError::field("--budget"))?;
            Some(SearchPayload::new(budget, &s))
        }
        None => None,
    };
    Ok(ReportBody::JacobianIvhs(JacobianPayload::new(&ctx, direction, search)))
}

fn class(args: ClassArgs) -> Result<ReportBody, CliError> {
    let class: PetriClass = args.class.parse().map_err(CliError::field("--class"))?;
    let report = class_mu_report(args.genus, class).map_err(CliError::field("--genus"))?;
    Ok(ReportBody::ClassReport(ClassPayload::from(&report)))
}

fn pair(values: &[u64], field: &str) -> Result<(u64, u64), CliError> {
    match values {
        [a, b] => Ok((*a, *b)),
        _ => Err(CliError::Validation {
            field: field.to_string(),
            message: format!("expected two comma-separated values, found {}", values.len()),
        }),
    }
}

fn invariants(args: InvariantsArgs) -> Result<ReportBody, CliError> {
    let (pa, source) = if let Some(pa) = args.pa {
        (pa, format!("arithmetic genus {pa}"))
    } else if let Some(d) = args.degree {
        (plane_pa(d), format!("plane degree {d}"))
    } else if let Some(ci) = &args.ci {
        let (a, b) = pair(ci, "--ci")?;
        (
            ci_genus(a, b).map_err(CliError::field("--ci"))?,
            format!("complete intersection ({a},{b})"),
        )
    } else {
        unreachable!("clap requires one genus source")
    };
    let sings = singularities(&args.sing)?;
    let inv = curve_invariants(pa, &sings).map_err(CliError::field("--sing"))?;
    let mhs = mhs_dims(pa, &sings).map_err(CliError::field("--sing"))?;
    let equisingular = equisingular_rank(pa, &sings).map_err(CliError::field("--sing"))?;
    let brill_noether = match &args.rho {
        Some(rd) => {
            let (r, d) = pair(rd, "--rho")?;
            Some(BrillNoetherPayload {
                r,
                d,
                rho: brill_noether_rho(pa, r, d),
            })
        }
        None => None,
    };
    Ok(ReportBody::Invariants(InvariantsPayload::new(
        source,
        &inv,
        mhs,
        equisingular,
        sym2_dim(pa),
        h0_omega_sq(pa).ok(),
        brill_noether,
    )))
}

fn degenerate(args: DegenerateArgs) -> Result<ReportBody, CliError> {
    let spec = match &args.spec {
        Some(path) => load_degeneration_spec(path).map_err(|e| CliError::Validation {
            field: "--spec".to_string(),
            message: e.to_string(),
        })?,
        None => {
            let pa = args
                .pa
                .ok_or_else(|| CliError::Usage("--step requires --pa".to_string()))?;
            let steps = args
                .step
                .iter()
                .map(|s| s.parse::<SmoothingStep>().map_err(CliError::field("--step")))
                .collect::<Result<_, _>>()?;
            DegenerationSpec { pa, steps }
        }
    };
    let report = rank_defect(&spec).map_err(CliError::field("--step"))?;
    let steps = spec.steps.iter().map(ToString::to_string).collect();
    Ok(ReportBody::Degeneration(DegenerationPayload::new(steps, &report)))
}
