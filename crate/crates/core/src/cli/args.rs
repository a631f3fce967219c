use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::linalg::FieldDescriptor;

use super::{CommandKind, ConventionChoice, Format, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "qschur-hh",
    version,
    about = "Hochschild cohomology of the q-Schur block algebras A_e"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Args)]
pub struct Common {
    /// `rational` or a prime such as `3`
    #[arg(long, default_value = "rational")]
    pub field: FieldDescriptor,
    #[arg(long, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Basis, centre, radical layers and heredity data of A_e
    Algebra {
        #[arg(long)]
        e: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Minimal bimodule resolution of A_e and the repair search over the closed-form differentials
    Resolution {
        #[arg(long)]
        e: usize,
        /// Re-run d∘d, exactness and minimality checks
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Dimensions of HH^n(A_e)
    Hh {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Checks the presentation of the ring HH*(A_e)
    Ring {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Graded dimensions of HH* of the wreath product A_e^(⊗w) ⋊ kS_w
    Wreath {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        w: usize,
        #[arg(long, default_value = "both")]
        convention: ConventionChoice,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Kernel of Λ_w -> (k[y]/<y_i^e>)^S_w compared with <p_{e+1}, ..., p_{e+w+1}>
    KernelPi {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        max_degree: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert function of Λ_w modulo power sums or elementary polynomials
    Quotient {
        #[arg(long)]
        w: usize,
        #[arg(long)]
        max_degree: usize,
        /// Comma-separated generators such as `p3,p4,e2`; defaults to p_{e+1}..p_{e+w+1} when --e is given
        #[arg(long, value_delimiter = ',')]
        generators: Option<Vec<String>>,
        #[arg(long)]
        e: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// e-cores, e-weights and block labels
    Blocks {
        #[arg(long)]
        e: usize,
        /// Group all partitions of n by block
        #[arg(long)]
        n: Option<usize>,
        /// A single partition, written `3,2,1`
        #[arg(long)]
        partition: Option<String>,
        /// Weight for the Rouquier test of the partition's core
        #[arg(long)]
        w: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

impl CommandArgs {
    pub fn into_config(self) -> RunConfig {
        let set = |kind: CommandKind, common: Common| {
            let mut c = RunConfig::new(kind);
            c.field = common.field;
            c.format = common.format;
            c
        };
        match self {
            CommandArgs::Algebra { e, common } => RunConfig {
                e: Some(e),
                ..set(CommandKind::Algebra, common)
            },
            CommandArgs::Resolution {
                e,
                verify,
                cache,
                common,
            } => RunConfig {
                e: Some(e),
                verify,
                cache_path: cache,
                ..set(CommandKind::Resolution, common)
            },
            CommandArgs::Hh { e, cache, common } => RunConfig {
                e: Some(e),
                cache_path: cache,
                ..set(CommandKind::Hh, common)
            },
            CommandArgs::Ring { e, cache, common } => RunConfig {
                e: Some(e),
                cache_path: cache,
                ..set(CommandKind::Ring, common)
            },
            CommandArgs::Wreath {
                e,
                w,
                convention,
                cache,
                common,
            } => RunConfig {
                e: Some(e),
                w: Some(w),
                convention: Some(convention),
                cache_path: cache,
                ..set(CommandKind::Wreath, common)
            },
            CommandArgs::KernelPi {
                e,
                w,
                max_degree,
                common,
            } => RunConfig {
                e: Some(e),
                w: Some(w),
                max_degree: Some(max_degree),
                ..set(CommandKind::KernelPi, common)
            },
            CommandArgs::Quotient {
                w,
                max_degree,
                generators,
                e,
                common,
            } => RunConfig {
                e,
                w: Some(w),
                max_degree: Some(max_degree),
                generators,
                ..set(CommandKind::Quotient, common)
            },
            CommandArgs::Blocks {
                e,
                n,
                partition,
                w,
                common,
            } => RunConfig {
                e: Some(e),
                n,
                w,
                partition,
                ..set(CommandKind::Blocks, common)
            },
        }
    }
}
