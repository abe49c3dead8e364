use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qtnok", version, about = "Exact verification of q,t hook-length identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Report cache directory.
    #[arg(long, global = true, env = "QTNOK_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// key=value file with defaults for the flags above and the verify flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build both sides of registry identities and compare them.
    Verify(VerifyArgs),
    /// Print one exact object.
    #[command(subcommand)]
    Compute(Object),
    /// Print the identity registry.
    List,
    /// Inspect or empty the report cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Args, Debug, Default)]
pub struct VerifyArgs {
    /// Identity id; repeat or separate with commas.
    #[arg(long = "id", value_delimiter = ',')]
    pub ids: Vec<String>,
    /// Every registry entry.
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub tmax: Option<u32>,
    #[arg(long)]
    pub qt_deg: Option<i32>,
    #[arg(long)]
    pub u_window: Option<i32>,
    #[arg(long)]
    pub p_max: Option<u32>,
    #[arg(long)]
    pub extra_deg: Option<i32>,
    #[arg(long)]
    pub size: Option<u32>,
    /// Named window set; `desk` is the registry default.
    #[arg(long)]
    pub profile: Option<String>,
    /// Worker threads (0 picks the number of cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Add 1 to the first right-hand side of every entry; a sound verifier
    /// must then report failures.
    #[arg(long)]
    pub perturb: bool,
}

#[derive(Subcommand, Debug)]
pub enum Object {
    /// f_{n,m}(u,T;q,t).
    Fnm {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 6)]
        qt_deg: i32,
        /// def, single_sum or hook_form.
        #[arg(long, default_value = "hook_form")]
        provenance: String,
    },
    /// H̄_n(z,w) of genus g.
    Hbar {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        /// Cap on Z and W; chosen from the expected degree if absent.
        #[arg(long)]
        cap: Option<i32>,
    },
    /// U_n(Z,W) of genus g, with q = Z^2, t = W^2.
    Un {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        cap: Option<i32>,
    },
    /// Sorted table of C(m, l, n1, n2).
    #[command(name = "C-table")]
    CTable {
        #[arg(long, default_value_t = 1)]
        max_m: u32,
        /// Print D instead of C.
        #[arg(long)]
        d: bool,
    },
    /// q,t-binomial coefficient [λ, μ].
    Binomial {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 8)]
        qt_deg: i32,
    },
    /// P_λ(1, t, ..., t^{n-1}; q, t), or at the infinite alphabet without --n.
    Principal {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 8)]
        qt_deg: i32,
    },
    /// Refined vertex C_{λμν} in Z = q^{1/2} and t.
    Vertex {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long, default_value_t = 12)]
        deg: i32,
    },
}

#[derive(Subcommand, Debug)]
pub enum CacheAction {
    Stat,
    Clear,
}
