mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::Format;

/// Exact computations in the Grothendieck ring of the Verlinde category Ver_p.
#[derive(Parser, Debug)]
#[command(name = "verlinde-kit", version, about)]
struct Cli {
    /// The prime p (required by every command except `verify`).
    #[arg(long, global = true)]
    p: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Show intermediate quantities (trace terms, q-dimensions, ...).
    #[arg(long, global = true)]
    explain: bool,

    /// Largest module dimension handed to the Jordan-block oracle.
    #[arg(long, global = true, default_value_t = 3000)]
    max_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The (p-1)×(p-1) fusion table L_r ⊗ L_s.
    FusionTable,
    /// Symmetric powers S^i L_m, for one i or all i = 0..p-m.
    Sympow { m: usize, i: Option<usize> },
    /// Exterior powers Λ^i L_r, for one i or all i = 0..r.
    Extpow { r: usize, i: Option<usize> },
    /// Recover an object from Laurent representatives of FPdim and SFPdim.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        fpdim: String,
        #[arg(allow_hyphen_values = true)]
        sfpdim: String,
    },
    /// Decompose the image of an SL_m Weyl module with highest weight PARTS.
    Weyl { m: usize, parts: String },
    /// p-adic dimensions of an object given as "a1,a2,...".
    Padic {
        #[arg(allow_hyphen_values = true)]
        mults: String,
    },
    /// Invariants of S^i L_m against the classical Cayley–Sylvester count.
    Invariants { m: usize, i: Option<usize> },
    /// Run the oracle-equivalence and property sweep over the given primes.
    Verify {
        /// Comma-separated primes; defaults to --p, else 3,5,7,11.
        primes: Option<String>,
        /// Random objects per prime for the round-trip checks.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Also run the slow oracle on full tensor powers.
        #[arg(long)]
        tensor_oracle: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.report.render(cli.format));
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
