use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use h2orbits::cli::{parse_exponents, run, Command, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(name = "h2orbits", version, about = "Orbits of Aut(G) x F_p^* on H^2(G; F_p) for finite abelian p-groups")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the invariant vector of one class
    Classify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        class: Class,
    },
    /// Print the orbit table and check it against the closed form
    Orbits {
        #[command(flatten)]
        common: Common,
    },
    /// Compare the invariant partition with brute-force orbits
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the closed-form orbit sizes (all cases when --type is omitted)
    Tables {
        #[arg(long)]
        p: u64,
        #[arg(long = "type")]
        type_spec: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        output: Format,
    },
    /// Build the extension of a class and print its multiplication table
    Extension {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        class: Class,
        /// Dual-element lift of the abelian part, one residue per summand
        #[arg(long)]
        lift: Option<String>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    p: u64,
    /// Comma-separated exponents, e.g. 1,2,2
    #[arg(long = "type")]
    type_spec: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    output: Format,
    /// Largest pair space (and endomorphism count) the oracle will enumerate
    #[arg(long, env = "H2ORBITS_CAP")]
    cap: Option<u128>,
}

#[derive(Args)]
struct Class {
    /// Functional coefficients a1,...,ad
    #[arg(long, allow_hyphen_values = true)]
    hab: Option<String>,
    /// Sparse wedge entries i<j:coef,...
    #[arg(long)]
    wedge: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => OutputFormat::Table,
            Format::Json => OutputFormat::Json,
        }
    }
}

fn config(command: Command, common: Common) -> Result<RunConfig, String> {
    let exponents = parse_exponents(&common.type_spec).map_err(|e| e.to_string())?;
    let mut c = RunConfig::new(command, common.p, &exponents);
    c.output = common.output.into();
    c.cap = common.cap;
    Ok(c)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.command {
        Cmd::Classify { common, class } => config(Command::Classify, common).map(|mut c| {
            c.hab = class.hab;
            c.wedge = class.wedge;
            c
        }),
        Cmd::Orbits { common } => config(Command::Orbits, common),
        Cmd::Verify { common } => config(Command::Verify, common),
        Cmd::Tables { p, type_spec, output } => {
            let exponents = match type_spec.as_deref().map(parse_exponents).transpose() {
                Ok(e) => e.unwrap_or_default(),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let mut c = RunConfig::new(Command::Tables, p, &exponents);
            c.output = output.into();
            Ok(c)
        }
        Cmd::Extension { common, class, lift } => config(Command::Extension, common).map(|mut c| {
            c.hab = class.hab;
            c.wedge = class.wedge;
            c.lift = lift;
            c
        }),
    };
    let cfg = match cfg {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = run(&cfg);
    if outcome.status == 2 {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    ExitCode::from(outcome.status as u8)
}
