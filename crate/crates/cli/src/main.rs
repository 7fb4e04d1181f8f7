use std::io::Write;
use std::process::ExitCode;

use atlas_cli::{commands, parse_algebra, parse_hurwitz, CliError, JacobiPolicy, Options, Outcome, Perturbation};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "atlas", version, about = "Exact checks on the exceptional Lie algebras")]
struct Cli {
    /// Print JSON instead of text where supported.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = atlas_cli::DEFAULT_SEED)]
    seed: u64,
    /// Samples per randomized identity suite.
    #[arg(long, global = true, default_value_t = atlas_cli::DEFAULT_SAMPLES)]
    samples: usize,
    /// Jacobi policy: standard, exhaustive or sampled.
    #[arg(long, global = true)]
    mode: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the roots of g2, f4, e6, e7 or e8.
    Roots {
        name: String,
        #[arg(long)]
        count: bool,
    },
    /// Check the root-system axioms on every pair of roots.
    Verify { name: String },
    /// Split the roots into the a2 part, three Jordan pairs and g0.
    Decompose {
        name: String,
        #[arg(long)]
        nested: bool,
    },
    /// Containment, distance and orthogonality checks for the parallel spaces.
    Planes { name: String },
    /// Quantum numbers of the nine h.w. e6 Jordan roots.
    Table3,
    /// The eta embedding `a5-in-e6` or `d6-in-e7`.
    Embed { target: String },
    /// Particle labels of the 240 e8 roots.
    LabelE8,
    /// Write a projection diagram as SVG.
    Figure {
        name: String,
        #[arg(long)]
        svg: String,
    },
    /// Zorn bridge, composition law, alternativity and idempotent identities.
    OctonionCheck,
    /// Jordan algebra, triple and pair axioms plus dimensions, for n = 1, 2, 4, 8.
    JordanCheck { n: usize },
    /// Grading, Jacobi and normalization of TKK(J3^n).
    Tkk { n: usize },
    /// The Tits algebra T(H, J3^n); `--json` dumps the structure constants.
    Tits {
        #[arg(value_name = "H")]
        h: String,
        #[arg(value_name = "J")]
        n: String,
    },
    /// All sixteen Tits algebras.
    MagicSquare {
        #[arg(long)]
        verify: Option<String>,
    },
    /// Every claim, or those whose id starts with PREFIX.
    RunAll {
        prefix: Option<String>,
        /// Inject one change, e.g. `root:g2:0:1:1/2` or `const:4:1:0:1:2:1`.
        #[arg(long)]
        perturb: Option<String>,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let mut opts = Options { seed: cli.seed, samples: cli.samples, json: cli.json, ..Options::default() };
    if let Some(m) = &cli.mode {
        opts.policy = m.parse()?;
    }
    match cli.command {
        Command::Roots { name, count } => commands::roots(parse_algebra(&name)?, count, &opts),
        Command::Verify { name } => commands::verify(parse_algebra(&name)?, &opts),
        Command::Decompose { name, nested } => commands::decompose(parse_algebra(&name)?, nested, &opts),
        Command::Planes { name } => commands::planes(parse_algebra(&name)?),
        Command::Table3 => commands::table3(),
        Command::Embed { target } => commands::embed(&target),
        Command::LabelE8 => commands::label_e8(&opts),
        Command::Figure { name, svg } => commands::figure(&name, &svg),
        Command::OctonionCheck => commands::octonion_check(&opts),
        Command::JordanCheck { n } => commands::jordan_check(n, &opts),
        Command::Tkk { n } => commands::tkk_report(n, &opts),
        Command::Tits { h, n } => commands::tits(parse_hurwitz(&h)?, parse_hurwitz(&n)?, &opts),
        Command::MagicSquare { verify } => {
            if let Some(v) = verify {
                opts.policy = v.parse::<JacobiPolicy>()?;
            }
            commands::magic(&opts)
        }
        Command::RunAll { prefix, perturb } => {
            opts.perturbation = perturb.as_deref().map(str::parse::<Perturbation>).transpose()?;
            commands::run_all(prefix.as_deref(), &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
