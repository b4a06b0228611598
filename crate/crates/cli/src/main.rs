use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use braidwork_core::error::{Error, ErrorKind};
use braidwork_core::fpgroups::DEFAULT_COSET_BUDGET;
use braidwork_core::invariants::DEFAULT_MONOMIAL_BUDGET;
use braidwork_core::matgroup::DEFAULT_ELEMENT_BUDGET;
use braidwork_core::suite::SuiteConfig;

mod commands;

#[derive(Parser)]
#[command(name = "braidwork")]
#[command(about = "Exact computations with complex reflection groups, braid groups and their quotients")]
#[command(version)]
struct Cli {
    /// Maximum number of cosets in any coset enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_COSET_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    budget_cosets: u64,

    /// Maximum number of elements when closing matrix generators
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    budget_elements: u64,

    /// Maximum number of monomials in one graded piece of the polynomial ring
    #[arg(long, global = true, default_value_t = DEFAULT_MONOMIAL_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    budget_degrees: u64,

    /// Write the JSON result to this file instead of stdout
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Seed for randomized property sweeps
    #[arg(long, global = true, default_value_t = SuiteConfig::default().seed)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

/// Budgets and seed shared by every subcommand.
pub struct RunConfig {
    pub cosets: usize,
    pub elements: usize,
    pub degrees: u128,
    pub seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Finite matrix groups
    #[command(subcommand)]
    Group(GroupCmd),
    /// Polynomial invariants
    #[command(subcommand)]
    Invariants(InvariantsCmd),
    /// Reflection arrangements
    #[command(subcommand)]
    Arrangement(ArrangementCmd),
    /// Finitely presented groups
    #[command(subcommand)]
    Present(PresentCmd),
    /// Garside normal forms in spherical Artin groups
    #[command(subcommand)]
    Garside(GarsideCmd),
    /// Actions of (λ, f) pairs on braid generators
    #[command(subcommand)]
    Gt(GtCmd),
    /// Monodromy of covers of the thrice-punctured line
    #[command(subcommand)]
    Monodromy(MonodromyCmd),
    /// Run every acceptance criterion and print a verdict table
    #[command(alias = "acceptance")]
    PaperSuite {
        /// Only run these criteria
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u32>,
        /// Include wall times in the JSON output
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
pub struct GroupArgs {
    /// Catalog group: G4, G4_paper, S3_paper or G(m,p,n)
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    pub catalog: Option<String>,
    /// Group spec JSON, or the output of `group info`
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Args)]
pub struct PresArgs {
    /// Catalog presentation, e.g. Br4, ArtD4, G12, CP(3,4), I2(6)
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    pub catalog: Option<String>,
    /// Presentation JSON: {"generators": [...], "relators": [...]}
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Args)]
pub struct PairArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: i64,
    /// Word in x, y with both exponent sums zero
    #[arg(long, default_value = "")]
    pub f: String,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Order, reflections, hyperplanes, degrees and field of definition
    Info(GroupArgs),
}

#[derive(Subcommand)]
enum InvariantsCmd {
    /// Basic invariants in the Molien degrees
    Compute(GroupArgs),
    /// Test polynomials for invariance
    Check {
        #[command(flatten)]
        group: GroupArgs,
        /// Polynomial text such as "z1^4 - z1*z2^3", or a named form (g1, g2, f1, f2, alpha, beta)
        #[arg(long = "poly")]
        polys: Vec<String>,
        /// Polynomial JSON, or the output of `invariants compute`
        #[arg(long)]
        poly_file: Option<PathBuf>,
    },
    /// Square root, squarefree and Jacobian checks on beta^3 - 27 alpha^4
    G12Check {
        #[arg(long, default_value = "alpha")]
        alpha: String,
        #[arg(long, default_value = "beta")]
        beta: String,
    },
}

#[derive(Subcommand)]
enum ArrangementCmd {
    /// Search for a maximal chain of modular flats
    Supersolvable {
        #[command(flatten)]
        group: GroupArgs,
        /// Cross-check with the all-chains search
        #[arg(long)]
        brute_force: bool,
    },
    /// Product of the hyperplane forms raised to e_H
    Discriminant(GroupArgs),
}

#[derive(Subcommand)]
enum PresentCmd {
    /// Coset enumeration for a subgroup
    Tc {
        #[command(flatten)]
        pres: PresArgs,
        /// Comma-separated subgroup generators (empty: trivial subgroup)
        #[arg(long, default_value = "")]
        subgroup: String,
    },
    /// Finite quotient by generator orders
    Quotient {
        #[command(flatten)]
        pres: PresArgs,
        /// Orders of the generators; a single value applies to all
        #[arg(long, value_delimiter = ',')]
        torsion: Vec<u32>,
    },
    /// Check a map on generators against backends
    VerifyMap {
        /// Catalog map name, e.g. g12-conjugation, cp-conjugation(3,4)
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        map: Option<String>,
        /// {"source": ..., "target": ..., "images": {"gen": "word"}}
        #[arg(long)]
        input: Option<PathBuf>,
        /// torsion:k[,k..], coxeter:n,k, garside:<type> or table:<file>
        #[arg(long = "backend", required = true)]
        backends: Vec<String>,
    },
}

#[derive(Subcommand)]
enum GarsideCmd {
    /// Left-greedy normal form
    Nf {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
    },
    /// Whether two words are equal in the Artin group
    Equal {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// The Garside element and, in type D, conjugation by it
    Delta {
        #[arg(long = "type")]
        ty: String,
    },
}

#[derive(Subcommand)]
enum GtCmd {
    /// Evaluate the Drinfeld images on a backend
    Act {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pair: PairArgs,
        /// garside, coxeter:n,k or torsion:k[,k..]
        #[arg(long, default_value = "garside")]
        backend: String,
    },
    /// Generator images as words
    Images {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pair: PairArgs,
        /// Matsumoto's type D images with exact commutation checks
        #[arg(long)]
        matsumoto: bool,
    },
    /// Whether the images preserve the Art(B_n) subgroup of Br_{n+1}
    Stabilize {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Conditions on a dihedral pair (λ, g)
    GdCheck {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_negative_numbers = true)]
        lambda: i64,
        /// Word in a, b
        #[arg(long, default_value = "")]
        g: String,
    },
}

#[derive(Subcommand)]
enum MonodromyCmd {
    /// Ramification profile of a cover
    Profile {
        /// Named cover, e.g. G4_paper
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        catalog: Option<String>,
        /// Cover spec JSON
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Riemann-Hurwitz genus of a profile
    Genus {
        /// Profile JSON, e.g. the output of `monodromy profile`
        #[arg(long)]
        input: PathBuf,
    },
}

/// Exit status of a successful computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Violated,
    Budget,
}

pub struct Outcome {
    pub value: Value,
    pub status: Status,
}

impl Outcome {
    pub fn ok(value: Value) -> Self {
        Outcome {
            value,
            status: Status::Holds,
        }
    }

    pub fn verdict(value: Value, holds: bool) -> Self {
        Outcome {
            value,
            status: if holds { Status::Holds } else { Status::Violated },
        }
    }
}

fn dispatch(cmd: Command, cfg: &RunConfig) -> Result<Outcome, Error> {
    use commands::*;
    match cmd {
        Command::Group(GroupCmd::Info(g)) => group_info(&g, cfg),
        Command::Invariants(c) => match c {
            InvariantsCmd::Compute(g) => invariants_compute(&g, cfg),
            InvariantsCmd::Check { group, polys, poly_file } => invariants_check(&group, &polys, poly_file.as_deref(), cfg),
            InvariantsCmd::G12Check { alpha, beta } => invariants_g12(&alpha, &beta),
        },
        Command::Arrangement(c) => match c {
            ArrangementCmd::Supersolvable { group, brute_force } => arrangement_supersolvable(&group, brute_force, cfg),
            ArrangementCmd::Discriminant(g) => arrangement_discriminant(&g, cfg),
        },
        Command::Present(c) => match c {
            PresentCmd::Tc { pres, subgroup } => present_tc(&pres, &subgroup, cfg),
            PresentCmd::Quotient { pres, torsion } => present_quotient(&pres, &torsion, cfg),
            PresentCmd::VerifyMap { map, input, backends } => present_verify_map(map.as_deref(), input.as_deref(), &backends, cfg),
        },
        Command::Garside(c) => match c {
            GarsideCmd::Nf { ty, word } => garside_nf(&ty, &word),
            GarsideCmd::Equal { ty, u, v } => garside_equal(&ty, &u, &v),
            GarsideCmd::Delta { ty } => garside_delta(&ty),
        },
        Command::Gt(c) => match c {
            GtCmd::Act { n, pair, backend } => gt_act(n, &pair, &backend, cfg),
            GtCmd::Images { n, pair, matsumoto } => gt_images(n, &pair, matsumoto),
            GtCmd::Stabilize { n, pair } => gt_stabilize(n, &pair, cfg),
            GtCmd::GdCheck { m, lambda, g } => gt_gd_check(m, lambda, &g, cfg),
        },
        Command::Monodromy(c) => match c {
            MonodromyCmd::Profile { catalog, input } => monodromy_profile(catalog.as_deref(), input.as_deref(), cfg),
            MonodromyCmd::Genus { input } => monodromy_genus(&input),
        },
        Command::PaperSuite { criteria, timings } => suite_command(&criteria, timings, cfg),
    }
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Falsified => 1,
        ErrorKind::Budget => 2,
        ErrorKind::Input => 3,
    }
}

fn emit(value: &Value, path: Option<&PathBuf>) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn error_json(kind: ErrorKind, tag: &str, message: &str) -> Value {
    json!({"error": {"kind": kind.to_string(), "type": tag, "message": message}})
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{}", e.render());
            let msg = e.kind().to_string();
            println!("{}", serde_json::to_string_pretty(&error_json(ErrorKind::Input, "usage", &msg)).expect("json"));
            return ExitCode::from(3);
        }
    };
    let cfg = RunConfig {
        cosets: cli.budget_cosets as usize,
        elements: cli.budget_elements as usize,
        degrees: cli.budget_degrees as u128,
        seed: cli.seed,
    };
    let (value, code) = match dispatch(cli.command, &cfg) {
        Ok(o) => {
            let code = match o.status {
                Status::Holds => 0,
                Status::Violated => 1,
                Status::Budget => 2,
            };
            (o.value, code)
        }
        Err(e) => {
            eprintln!("braidwork: {e}");
            (error_json(e.kind(), e.tag(), &e.to_string()), exit_code(e.kind()))
        }
    };
    if let Err(e) = emit(&value, cli.json.as_ref()) {
        eprintln!("braidwork: {e}");
        return ExitCode::from(3);
    }
    ExitCode::from(code)
}
