use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::FieldChoice;

#[derive(Parser, Debug, Clone)]
#[command(name = "infmod", version, about = "Structure at infinity of polynomial matrices, exactly")]
pub struct Cli {
    /// Base field: Q or GF:<p>. Defaults to the field declared by the first input.
    #[arg(long, global = true)]
    pub field: Option<FieldChoice>,

    /// Seed for the corpus generator.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Report every verification flag as failed.
    #[arg(long, global = true, hide = true)]
    pub fail_verification: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Infinite elementary divisors and dim U^L.
    Structure { l: PathBuf },
    /// Factor W = P Σ Q with P, Q bicausal.
    SmithInf {
        w: PathBuf,
        /// Also write P.json, Sigma.json and Q.json here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Pivot::RowMajor)]
        pivot: Pivot,
    },
    /// Basis of U^L with preimages, shift matrix and Gram matrix.
    Basis { l: PathBuf },
    /// Canonical representative ρ^L x.
    Rho {
        l: PathBuf,
        x: PathBuf,
        /// Apply L π₊ L⁻¹ to an arbitrary rational column.
        #[arg(long)]
        extended: bool,
    },
    /// Homomorphisms U^L → U^(L1).
    Hom {
        #[command(subcommand)]
        op: HomCommand,
    },
    /// Decide whether a surjection or injection U^L → U^(L1) exists.
    ExistsHom {
        l: PathBuf,
        l1: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Realize the polynomial part of G on U^(D2).
    Realize { g: PathBuf },
    /// Emit a random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 2)]
        size: usize,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum HomCommand {
    /// Intertwining, π₊ and kernel-inclusion conditions.
    Check(PairArgs),
    /// Matrix of the induced map in the canonical bases.
    Build(HomArgs),
    /// Find Ψ and Θ1 making (Θ + L1 Ψ, Θ1) intertwine.
    Complete(ThetaArgs),
    /// The dual intertwiner (Θ1ᵀ, Θᵀ).
    Dual(HomArgs),
    Surjective(HomArgs),
    Injective(HomArgs),
}

#[derive(Args, Debug, Clone)]
pub struct ThetaArgs {
    pub l: PathBuf,
    pub l1: PathBuf,
    pub theta: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    pub l: PathBuf,
    pub l1: PathBuf,
    pub theta: PathBuf,
    pub theta1: PathBuf,
}

/// `Θ1` may be omitted; it is then completed from `Θ`.
#[derive(Args, Debug, Clone)]
pub struct HomArgs {
    pub l: PathBuf,
    pub l1: PathBuf,
    pub theta: PathBuf,
    pub theta1: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    RowMajor,
    ColumnMajor,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Surj,
    Inj,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    L,
    Pencil,
    Intertwiner,
    Transfer,
}

impl Command {
    /// Input files in the order the command consumes them.
    pub fn inputs(&self) -> Vec<PathBuf> {
        match self {
            Command::Structure { l } | Command::Basis { l } => vec![l.clone()],
            Command::SmithInf { w, .. } => vec![w.clone()],
            Command::Rho { l, x, .. } => vec![l.clone(), x.clone()],
            Command::ExistsHom { l, l1, .. } => vec![l.clone(), l1.clone()],
            Command::Realize { g } => vec![g.clone()],
            Command::Gen { .. } => vec![],
            Command::Hom { op } => match op {
                HomCommand::Check(a) => vec![a.l.clone(), a.l1.clone(), a.theta.clone(), a.theta1.clone()],
                HomCommand::Complete(a) => vec![a.l.clone(), a.l1.clone(), a.theta.clone()],
                HomCommand::Build(a) | HomCommand::Dual(a) | HomCommand::Surjective(a) | HomCommand::Injective(a) => {
                    let mut v = vec![a.l.clone(), a.l1.clone(), a.theta.clone()];
                    v.extend(a.theta1.clone());
                    v
                }
            },
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Structure { .. } => "structure",
            Command::SmithInf { .. } => "smith-inf",
            Command::Basis { .. } => "basis",
            Command::Rho { .. } => "rho",
            Command::ExistsHom { .. } => "exists-hom",
            Command::Realize { .. } => "realize",
            Command::Gen { .. } => "gen",
            Command::Hom { op } => match op {
                HomCommand::Check(_) => "hom check",
                HomCommand::Build(_) => "hom build",
                HomCommand::Complete(_) => "hom complete",
                HomCommand::Dual(_) => "hom dual",
                HomCommand::Surjective(_) => "hom surjective",
                HomCommand::Injective(_) => "hom injective",
            },
        }
    }
}
