use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "deristab",
    version,
    about = "Exact computations with polynomial derivations over Q"
)]
struct Cli {
    /// Emit JSON (`"schema": 1`) instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// A derivation given as comma-separated coefficients `p1,...,pn`.
#[derive(Args, Debug, Clone)]
pub struct DerivationArgs {
    /// Number of variables; defaults to the number of coefficients.
    #[arg(short = 'n')]
    pub n: Option<usize>,

    /// Coefficients of D, comma-separated, e.g. "1-x1*x2,x1^3,x2".
    #[arg(short = 'D', allow_hyphen_values = true)]
    pub derivation: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether the map f commutes with D.
    Commutes {
        #[command(flatten)]
        d: DerivationArgs,
        /// Components of f, comma-separated.
        #[arg(short = 'f', allow_hyphen_values = true)]
        map: String,
    },
    /// Basis of the translations fixing every coefficient of D.
    InvariantTranslations {
        #[command(flatten)]
        d: DerivationArgs,
    },
    /// Build a proper D-stable ideal when one of the constructions applies.
    Witness {
        #[command(flatten)]
        d: DerivationArgs,
        /// Invariant translation to use, comma-separated rationals.
        #[arg(short = 'c', allow_hyphen_values = true)]
        translation: Option<String>,
    },
    /// Classify a commuting map by whether f - f(0) still commutes.
    Classify {
        #[command(flatten)]
        d: DerivationArgs,
        #[arg(short = 'f', allow_hyphen_values = true)]
        map: String,
    },
    /// Simplicity of d1 + (a(x1) x2 + b(x1)) d2.
    Shamsuddin {
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: String,
        #[arg(short = 'b', allow_hyphen_values = true)]
        b: String,
    },
    /// Isotropy of d1 + b(x1) d2: build an element from (p, ctilde, cbar),
    /// or decompose a map given with -f.
    IsotropyB {
        #[arg(short = 'b', allow_hyphen_values = true)]
        b: String,
        /// p(w) as a polynomial in w.
        #[arg(short = 'p', allow_hyphen_values = true, default_value = "0")]
        p: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        ctilde: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        cbar: String,
        /// Map (f, g) to decompose instead of building one.
        #[arg(short = 'f', allow_hyphen_values = true, conflicts_with_all = ["p", "ctilde", "cbar"])]
        map: Option<String>,
    },
    /// All maps with small integer coefficients that commute with D and have
    /// an inverse of the same kind.
    Enumerate {
        #[command(flatten)]
        d: DerivationArgs,
        #[arg(long, default_value_t = 2)]
        deg: u32,
        #[arg(long, default_value_t = 2)]
        coeff: i64,
    },
    /// List the named example derivations.
    Corpus,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Commutes { d, map } => commands::commutes(&d, &map),
        Command::InvariantTranslations { d } => commands::invariant_translations(&d),
        Command::Witness { d, translation } => commands::witness(&d, translation.as_deref()),
        Command::Classify { d, map } => commands::classify(&d, &map),
        Command::Shamsuddin { a, b } => commands::shamsuddin(&a, &b),
        Command::IsotropyB {
            b,
            p,
            ctilde,
            cbar,
            map,
        } => match map {
            Some(map) => commands::isotropy_decompose(&b, &map),
            None => commands::isotropy_build(&b, &p, &ctilde, &cbar),
        },
        Command::Enumerate { d, deg, coeff } => commands::enumerate(&d, deg, coeff),
        Command::Corpus => Ok(commands::corpus()),
    };
    match result {
        Ok(report) => {
            if cli.json {
                let mut value = report.json;
                value
                    .as_object_mut()
                    .expect("reports are JSON objects")
                    .insert("schema".into(), 1.into());
                println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
            } else {
                println!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
