//! Workbench for three exact star products: constant coefficient matrices on
//! polynomial elements, linear structures through the symmetrization map,
//! and the reduced normal-ordered product on the unit disc of C^{n+1}.
//!
//! Every subcommand prints an aligned plain-text table on stdout and can
//! mirror the same result as JSON into a file with `--output`. Failures leave
//! one JSON object on stderr and set the exit code: 1 for unusable input,
//! 2 for a check that ran and failed. All randomness flows through a seeded
//! splitmix generator, so equal seeds reproduce equal bytes.

mod commands;
mod support;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use commands::{DemoKind, GenKind, Precision, StarKind};
use support::CliError;

#[derive(Parser)]
#[command(name = "starprod", version, about = "Exact star-product workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two polynomial elements with a constant coefficient matrix.
    WeylStar {
        /// Coefficient matrix file (JSON bilinear form).
        #[arg(long)]
        lambda: PathBuf,
        /// Left factor (JSON element).
        #[arg(long)]
        a: PathBuf,
        /// Right factor (JSON element).
        #[arg(long)]
        b: PathBuf,
        /// Expected dimension, checked against the matrix when given.
        #[arg(long)]
        dim: Option<usize>,
        /// Element the product must equal; a mismatch exits with code 2.
        #[arg(long)]
        expect: Option<PathBuf>,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Multiply two polynomial elements over a linear (Lie) structure.
    GuttStar {
        /// Catalog name (heisenberg, so3, solvable2, abelian) or JSON file.
        #[arg(long, default_value = "heisenberg")]
        lie: String,
        /// Left factor (JSON element).
        #[arg(long)]
        a: PathBuf,
        /// Right factor (JSON element).
        #[arg(long)]
        b: PathBuf,
        /// Element the product must equal; a mismatch exits with code 2.
        #[arg(long)]
        expect: Option<PathBuf>,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Multiply two reduced elements on the disc.
    DiscStar {
        /// Left factor (JSON element).
        #[arg(long)]
        a: PathBuf,
        /// Right factor (JSON element).
        #[arg(long)]
        b: PathBuf,
        /// Expected parameter count, checked against the elements when given.
        #[arg(long)]
        n: Option<usize>,
        /// Element the product must equal; a mismatch exits with code 2.
        #[arg(long)]
        expect: Option<PathBuf>,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Weighted factorial seminorm of a polynomial element.
    Seminorm {
        /// Element file to measure.
        #[arg(short, long)]
        input: PathBuf,
        /// Factorial exponent as a fraction.
        #[arg(long = "R", value_name = "FRACTION", default_value = "1")]
        r: String,
        /// Comma-separated positive weights, one per variable; default all 1.
        #[arg(long)]
        weights: Option<String>,
        /// Substitute this value for the deformation parameter first.
        #[arg(long)]
        param: Option<String>,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Split an element by powers of the deformation parameter.
    Orders {
        /// Element file to expand.
        #[arg(short, long)]
        input: PathBuf,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify associativity on random triples; any failure exits with 2.
    AssocCheck {
        /// Which product to exercise.
        #[arg(long, value_enum)]
        kind: StarKind,
        /// Number of random triples.
        #[arg(long, default_value_t = 10)]
        triples: u32,
        /// Generator seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Degree cap for the random factors.
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        /// Dimension for the constant-matrix product (and abelian).
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Lie structure (catalog name or JSON file) for kind gutt.
        #[arg(long, default_value = "heisenberg")]
        lie: String,
        /// Disc parameter count for kind disc.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Combined-exponent series of the free Lie algebra on two letters.
    Bch {
        /// Largest word length to keep.
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Per-degree coefficient mass of the series against the 2/n bound.
    Goldberg {
        /// Largest word length to check.
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check exp(xi) * exp(eta) = exp(combined exponent) on a nilpotent
    /// structure, exactly, through a total-weight cutoff.
    ExpBchCheck {
        /// Catalog name (nilpotent) or JSON file.
        #[arg(long, default_value = "heisenberg")]
        lie: String,
        /// First vector as comma-separated fractions, one per dimension.
        #[arg(long)]
        xi: String,
        /// Second vector as comma-separated fractions, one per dimension.
        #[arg(long)]
        eta: String,
        /// Compare components with total weight up to this cutoff.
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify that one-sided products with (g - 1) restrict to zero.
    KernelCheck {
        /// Disc parameter count (required for a sweep).
        #[arg(long)]
        n: Option<usize>,
        /// Sweep all monomials up to this degree.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Check a single invariant polynomial from this file instead.
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report coefficient poles of basis products; any pole outside the
    /// family -1/(2m) exits with 2.
    Poles {
        /// Disc parameter count.
        #[arg(long)]
        n: usize,
        /// Largest index total on either side.
        #[arg(long, default_value_t = 2)]
        max_degree: u32,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Parameter-zero limit of a reduced product and its first commutator
    /// coefficient, compared against the classical geometry.
    Limit {
        /// Left factor (JSON element).
        #[arg(long)]
        a: PathBuf,
        /// Right factor (JSON element).
        #[arg(long)]
        b: PathBuf,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover coefficients of a reduced element by contour integration and
    /// compare against their exact values.
    Cauchy {
        /// Element file to sample.
        #[arg(short, long)]
        input: PathBuf,
        /// Holomorphic exponents of one target index (with --q).
        #[arg(long)]
        p: Option<String>,
        /// Antiholomorphic exponents of one target index (with --p).
        #[arg(long)]
        q: Option<String>,
        /// Parameter value at which coefficients are taken.
        #[arg(long, default_value_t = 0.0)]
        hbar: f64,
        /// Common radius of the sampling circles, strictly inside (0, 1).
        #[arg(long, default_value_t = 0.3)]
        rho: f64,
        /// Floating-point width for the contour sums.
        #[arg(long, value_enum, default_value_t = Precision::Double)]
        precision: Precision,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Seminorm convergence demonstrations; a broken trajectory exits with 2.
    ConvergenceDemo {
        /// Which demonstration to run.
        #[arg(long, value_enum)]
        kind: DemoKind,
        /// Last step to compute (default 40 for weyl, 30 for gutt).
        #[arg(long)]
        max_n: Option<u32>,
        /// Mirror the result as JSON into this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Deterministically generate a random instance as JSON.
    Generate {
        /// What to produce.
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Generator seed; equal seeds give identical bytes.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Variable count for sym-element (and the abelian structure).
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Disc parameter count for cn-invariant and disc-element.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Degree cap per term.
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// Number of terms to draw.
        #[arg(long, default_value_t = 3)]
        terms: u32,
        /// Catalog name for lie-structure.
        #[arg(long)]
        name: Option<String>,
        /// Write the instance here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::WeylStar {
            lambda,
            a,
            b,
            dim,
            expect,
            output,
        } => commands::products::weyl_star_cmd(
            &lambda,
            &a,
            &b,
            dim,
            expect.as_deref(),
            output.as_deref(),
        ),
        Command::GuttStar {
            lie,
            a,
            b,
            expect,
            output,
        } => commands::products::gutt_star_cmd(&lie, &a, &b, expect.as_deref(), output.as_deref()),
        Command::DiscStar {
            a,
            b,
            n,
            expect,
            output,
        } => commands::products::disc_star_cmd(&a, &b, n, expect.as_deref(), output.as_deref()),
        Command::Seminorm {
            input,
            r,
            weights,
            param,
            output,
        } => commands::products::seminorm_cmd(
            &input,
            &r,
            weights.as_deref(),
            param.as_deref(),
            output.as_deref(),
        ),
        Command::Orders { input, output } => {
            commands::products::orders_cmd(&input, output.as_deref())
        }
        Command::AssocCheck {
            kind,
            triples,
            seed,
            max_degree,
            dim,
            lie,
            n,
            output,
        } => commands::products::assoc_check_cmd(
            kind,
            dim,
            &lie,
            n,
            triples,
            seed,
            max_degree,
            output.as_deref(),
        ),
        Command::Bch { max_n, output } => commands::series::bch_cmd(max_n, output.as_deref()),
        Command::Goldberg { max_n, output } => {
            commands::series::goldberg_cmd(max_n, output.as_deref())
        }
        Command::ExpBchCheck {
            lie,
            xi,
            eta,
            max_degree,
            output,
        } => commands::series::exp_bch_check_cmd(&lie, &xi, &eta, max_degree, output.as_deref()),
        Command::KernelCheck {
            n,
            max_degree,
            input,
            output,
        } => commands::reduction::kernel_check_cmd(
            n,
            max_degree,
            input.as_deref(),
            output.as_deref(),
        ),
        Command::Poles {
            n,
            max_degree,
            output,
        } => commands::reduction::poles_cmd(n, max_degree, output.as_deref()),
        Command::Limit { a, b, output } => {
            commands::reduction::limit_cmd(&a, &b, output.as_deref())
        }
        Command::Cauchy {
            input,
            p,
            q,
            hbar,
            rho,
            precision,
            output,
        } => commands::reduction::cauchy_cmd(
            &input,
            p.as_deref(),
            q.as_deref(),
            hbar,
            rho,
            precision,
            output.as_deref(),
        ),
        Command::ConvergenceDemo {
            kind,
            max_n,
            output,
        } => commands::experiments::convergence_demo_cmd(kind, max_n, output.as_deref()),
        Command::Generate {
            kind,
            seed,
            dim,
            n,
            max_degree,
            terms,
            name,
            output,
        } => commands::experiments::generate_cmd(
            kind,
            seed,
            dim,
            n,
            max_degree,
            terms,
            name.as_deref(),
            output.as_deref(),
        ),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            let err = CliError::Input(e.to_string());
            eprintln!("{}", err.stderr_json());
            std::process::exit(err.exit_code());
        }
    };
    if let Err(err) = run(cli.command) {
        eprintln!("{}", err.stderr_json());
        std::process::exit(err.exit_code());
    }
}
