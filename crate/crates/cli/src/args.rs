use clap::{Args, Parser, Subcommand, ValueEnum};
use vndim_core::{FuchsianSignature, PadicField, RepLabel};

#[derive(Debug, Parser)]
#[command(
    name = "vndim",
    version,
    about = "Exact von Neumann dimensions of discrete series on lattices in PSL(2,R) and PGL(2,F)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fuchsian group and holomorphic discrete series D_k.
    Real(RealArgs),
    /// Free lattice in PGL(2,F) and a discrete series of GL(2,F).
    Padic(PadicArgs),
    /// Formal dimensions of the discrete series of GL(2,F).
    Table(TableArgs),
    /// Von Neumann dimensions of all discrete series on a free lattice.
    Spectrum(SpectrumArgs),
    /// Check every closed form against brute-force enumeration.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct RealArgs {
    /// Signature as g=G;m=M1,M2,...;h=H (the m list may be empty).
    #[arg(long, value_parser = parse_signature)]
    pub sig: FuchsianSignature,

    /// Weight k >= 2.
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,

    /// Assert that the second cohomology of the group is trivial (needed for odd k).
    #[arg(long, conflicts_with = "h2_auto")]
    pub h2_trivial: bool,

    /// Guess the second cohomology flag: trivial when the group has a cusp.
    #[arg(long)]
    pub h2_auto: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("lattice").required(true).args(["rank", "vertices"])))]
pub struct PadicArgs {
    /// Residue field order, an odd prime power.
    #[arg(long, value_parser = parse_field)]
    pub q: PadicField,

    /// Free rank n >= 2 of the lattice.
    #[arg(long)]
    pub rank: Option<u64>,

    /// Vertex count of the quotient graph; the rank is (q-1)c/2 + 1.
    #[arg(long)]
    pub vertices: Option<u64>,

    /// steinberg, sc-depth0, sc-unram:<level> or sc-ram:<level>.
    #[arg(long, value_parser = parse_label)]
    pub rep: RepLabel,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_field)]
    pub q: PadicField,

    /// Largest filtration index i = floor((n+1)/2) to list.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_i: u32,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_parser = parse_field)]
    pub q: PadicField,

    #[arg(long)]
    pub rank: u64,

    #[arg(long, default_value_t = 3)]
    pub max_k: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Odd prime residue characteristic to enumerate over.
    #[arg(long, default_value_t = 3)]
    pub p: u64,

    /// Largest filtration level i (matrices are enumerated mod p^i).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_i: u32,

    /// Random graphs sampled per vertex count.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Shift the expected value of the named check by one.
    #[arg(long, hide = true)]
    pub perturb: Vec<String>,
}

fn parse_signature(s: &str) -> Result<FuchsianSignature, String> {
    s.parse().map_err(|e: vndim_core::VnDimError| e.to_string())
}

fn parse_field(s: &str) -> Result<PadicField, String> {
    let q: u64 = s
        .parse()
        .map_err(|_| format!("q must be an odd prime power (got {s:?})"))?;
    PadicField::new(q).map_err(|e| e.to_string())
}

fn parse_label(s: &str) -> Result<RepLabel, String> {
    s.parse().map_err(|e: vndim_core::VnDimError| e.to_string())
}
