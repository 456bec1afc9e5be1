//! `symweight`: sizes, bounds, searches and constructions for symbol-weight codes.
//!
//! Exit codes: 0 success, 1 verification or bound-audit failure, 2 usage or
//! inapplicable parameters, 3 enumeration cap exceeded.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symweight::{Config, Exec};

use output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "symweight",
    version,
    about = "Symbol-weight spaces, bounds and constructions"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Output format; defaults to csv for `curves`, json for `conjecture`, text otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result here (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Run every loop on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    /// Largest family, scan or polynomial set that may be enumerated.
    #[arg(long, global = true, env = "SYMWEIGHT_ENUM_CAP")]
    pub enum_cap: Option<u64>,
    /// Node budget for each clique search; unlimited when absent.
    #[arg(long, global = true)]
    pub node_budget: Option<u64>,
}

impl Global {
    pub fn config(&self) -> Config {
        let mut cfg = Config::default().with_node_budget(self.node_budget);
        if let Some(cap) = self.enum_cap {
            cfg = cfg.with_enumeration_cap(cap);
        }
        if self.sequential {
            cfg = cfg.with_exec(Exec::Sequential);
        }
        cfg
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Bounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Greedy,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Full Reed-Solomon code RS[q-1, k] (needs --q --k).
    Rs,
    /// Constant symbol-weight subcode of RS[q-1, k] (needs --q --k --r).
    RsCsw,
    /// (u|v) with an FPA (needs --first --second).
    Uv,
    /// Concatenation with an FPA inner code (needs --outer --inner).
    Concat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveBound {
    GvExact,
    GvBounded,
    Lp,
    LargeR,
    Singleton,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact size and rate of SW(n,q,r) or SW(n,q,<=r); all admissible r when --r is omitted.
    ///
    /// CSV columns: n, q, r, mode, size, rate.
    Size {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
    },
    /// Every applicable bound on the largest code with minimum distance d.
    ///
    /// CSV columns: provenance, direction, kind, value, n, q, d, r, mode, note.
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Constant-composition code value `composition:count[@d]`, e.g. "1^4 5^4:4096"; repeatable.
        #[arg(long = "ccc-oracle")]
        ccc_oracle: Vec<String>,
        /// JSON array of oracle values, each a `composition:count[@d]` string or an
        /// object {composition, value, distance?, source?}.
        #[arg(long)]
        ccc_oracle_file: Option<PathBuf>,
        /// Also search small constant-composition classes exhaustively.
        #[arg(long)]
        exhaustive_ccc: bool,
        /// Require a completed clique search and check every bound against it.
        #[arg(long)]
        audit_exhaustive: bool,
    },
    /// Rate bound curves along one axis.
    ///
    /// CSV columns: rho, delta, then one column per selected bound
    /// (gv_exact, gv_bounded, lp, large_r, singleton); empty where a bound does not apply.
    Curves {
        /// Constant alphabet size.
        #[arg(long, conflicts_with = "growing", required_unless_present = "growing")]
        q: Option<u32>,
        /// Alphabet growing with the length.
        #[arg(long)]
        growing: bool,
        /// Fix delta and sweep rho.
        #[arg(long, conflicts_with = "rho", required_unless_present = "rho")]
        delta: Option<f64>,
        /// Fix rho and sweep delta.
        #[arg(long)]
        rho: Option<f64>,
        /// Number of grid points.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(2..))]
        grid: u32,
        #[arg(long, default_value_t = 0.0)]
        from: f64,
        #[arg(long, default_value_t = 1.0)]
        to: f64,
        /// Bounds to emit; all when omitted.
        #[arg(long, value_enum, value_delimiter = ',')]
        bounds: Vec<CurveBound>,
    },
    /// Anticode of weight-r compositions with pairwise d+ >= d.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value = "greedy")]
        strategy: Strategy,
    },
    /// Builds a code, audits it, and writes it as a code file; the audit goes to stderr.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        first: Option<PathBuf>,
        #[arg(long)]
        second: Option<PathBuf>,
        #[arg(long)]
        outer: Option<PathBuf>,
        #[arg(long)]
        inner: Option<PathBuf>,
    },
    /// Checks a code file's distance and symbol weight against its header and the expectations.
    Verify {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        expect_d: Option<u32>,
        #[arg(long)]
        expect_r: Option<u32>,
    },
    /// Searches for root subsets giving symbol weight exactly r.
    Conjecture {
        #[arg(long, required_unless_present = "sweep_max_q", conflicts_with = "sweep_max_q")]
        q: Option<u32>,
        #[arg(long, requires = "q")]
        k: Option<usize>,
        #[arg(long, requires = "q")]
        r: Option<usize>,
        /// Every field of order 4..=Q over its full (k, r) range.
        #[arg(long)]
        sweep_max_q: Option<u32>,
        /// Skip sweep pairs whose factor degree k-1-r exceeds this.
        #[arg(long, requires = "sweep_max_q")]
        max_degree: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
