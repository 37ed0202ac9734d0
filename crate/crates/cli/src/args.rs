use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quotbwb_core::complex::{Convention, Side};
use quotbwb_core::{Partition, Weight};

#[derive(Parser, Debug)]
#[command(name = "quotbwb", version, about = "Cohomology of tautological bundles on Quot schemes of P^1")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// LR coefficient cache file.
    #[arg(long, global = true, env = "QUOTBWB_CACHE")]
    pub cache: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// Plain text for single values, JSON otherwise.
    Auto,
    Json,
    Table,
}

#[derive(Args, Debug, Clone)]
pub struct SetupArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub d: usize,
    /// Splitting degrees b₁,…,b_n of V = ⊕ O(−b_i); a single 0 means trivial.
    #[arg(long, default_value = "0")]
    pub b: String,
    /// Twist m (default b + d).
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InsertionArgs {
    /// Weight applied to A₁ (repeatable).
    #[arg(long, value_parser = parse_weight)]
    pub a1: Vec<Weight>,
    /// Weight applied to B₁ = L_{m−1}^{[d]} (repeatable).
    #[arg(long, value_parser = parse_weight)]
    pub b1: Vec<Weight>,
    /// Weight applied to A₂ (repeatable).
    #[arg(long, value_parser = parse_weight)]
    pub a2: Vec<Weight>,
    /// Weight applied to B₂ = L_m^{[d]} (repeatable).
    #[arg(long, value_parser = parse_weight)]
    pub b2: Vec<Weight>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// LR coefficient, or the full product expansion without --gamma.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_parser = parse_partition)]
        beta: Partition,
        #[arg(long, value_parser = parse_partition)]
        gamma: Option<Partition>,
    },
    /// Dimension of S^λ(ℂⁿ) for a weight λ.
    Dim {
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        lambda: Weight,
        #[arg(long)]
        n: usize,
    },
    /// The k-index of χ and the resulting cohomological degree.
    Index {
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        chi: Weight,
        #[arg(long)]
        k: usize,
    },
    /// Borel–Weil–Bott on Gr(k, N).
    Bwb {
        #[arg(long)]
        k: usize,
        #[arg(long = "big-n")]
        big_n: usize,
        /// Weight of A^∨ (with --chi).
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        rho: Option<Weight>,
        /// Weight of B^∨ (with --rho).
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        chi: Option<Weight>,
        /// Schur functor weights on A (repeatable).
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        sub: Vec<Weight>,
        /// Schur functor weights on B (repeatable).
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        quot: Vec<Weight>,
    },
    /// Grassmannian and Koszul parameters of the embedding.
    Stromme {
        #[command(flatten)]
        setup: SetupArgs,
    },
    /// Summands of the t-th exterior power of the Koszul bundle.
    Koszul {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long)]
        t: usize,
    },
    /// First page of the Koszul spectral sequence and the assembled report.
    Scan {
        #[command(flatten)]
        setup: SetupArgs,
        #[command(flatten)]
        insertion: InsertionArgs,
        /// Exterior powers to scan, as lo:hi.
        #[arg(long, value_parser = parse_range)]
        t_range: Option<(usize, usize)>,
        /// Include contributing (μ, σ) terms.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Euler characteristic of an insertion.
    Euler {
        #[command(flatten)]
        setup: SetupArgs,
        #[command(flatten)]
        insertion: InsertionArgs,
    },
    /// Ext(S^ν L, S^λ L) for L = L_{m−1}^{[d]}.
    Ext {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Predicted cohomology of ⊗ S^λ M^{[d]} for line bundles M.
    ClosedForm {
        #[command(flatten)]
        setup: SetupArgs,
        /// e:λ for S^λ O(e)^{[d]} (repeatable).
        #[arg(long = "insert", value_parser = parse_closed_insert, allow_hyphen_values = true)]
        inserts: Vec<(i64, Partition)>,
    },
    /// Hypercohomology through two-term resolutions.
    Hyper {
        #[command(flatten)]
        setup: SetupArgs,
        /// q:e:λ (quotient), s:e:λ (sub) or x:λ (point restriction); repeatable.
        #[arg(long = "insert", value_parser = parse_hyper_insert, allow_hyphen_values = true)]
        inserts: Vec<quotbwb_core::complex::HyperInsert>,
        /// Raise m up to this value until the answer is exact.
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Check a statement on one instance; exit 0 when it holds, 2 otherwise.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Reproduce the two reference computations.
    Examples {
        #[arg(value_enum)]
        which: Example,
    },
    /// Two-term representation of O(e)^{[d]} or O(e)^{{d}} under either twist convention.
    #[command(hide = true)]
    Bracket {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long, allow_hyphen_values = true)]
        e: i64,
        #[arg(long, value_enum, default_value_t = SideArg::Quotient)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = ConventionArg::Corrected)]
        convention: ConventionArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SideArg {
    Quotient,
    Sub,
}

impl From<&SideArg> for Side {
    fn from(s: &SideArg) -> Side {
        match s {
            SideArg::Quotient => Side::Quotient,
            SideArg::Sub => Side::Sub,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ConventionArg {
    Corrected,
    Printed,
}

impl From<&ConventionArg> for Convention {
    fn from(c: &ConventionArg) -> Convention {
        match c {
            ConventionArg::Corrected => Convention::Corrected,
            ConventionArg::Printed => Convention::Printed,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Vanishing or closed form for S^η L_{m−1}^{[d]} ⊗ S^ρ L_m^{[d]}.
    Thm41 {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        eta: Weight,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        rho: Weight,
    },
    /// No cohomology above degree |δ| + |ν|.
    Prop47 {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        eta: Weight,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        rho: Weight,
    },
    /// Ext groups agree with the Grassmannian ones.
    Ext {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Hypercohomology equals the closed form.
    Cor14 {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long = "insert", value_parser = parse_closed_insert, allow_hyphen_values = true)]
        inserts: Vec<(i64, Partition)>,
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Degrees at least d + b give cohomology in degree 0 only.
    Thm57 {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long = "insert", value_parser = parse_closed_insert, allow_hyphen_values = true)]
        inserts: Vec<(i64, Partition)>,
        #[arg(long)]
        m_max: Option<usize>,
    },
    /// Schur functors of the point restriction have no cohomology.
    Sx {
        #[command(flatten)]
        setup: SetupArgs,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        m_max: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Example {
    /// ∧⁶ L₄^{[2]} on the (2,1,2) Quot scheme.
    Sharp,
    /// S²(L₂^{[3]})^∨ on the (3,1,3) Quot scheme.
    Sym2,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: quotbwb_core::Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse().map_err(|e: quotbwb_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad range start `{lo}`"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad range end `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn parse_closed_insert(s: &str) -> Result<(i64, Partition), String> {
    let (e, l) = s.split_once(':').ok_or("expected e:λ")?;
    let e: i64 = e.trim().parse().map_err(|_| format!("bad degree `{e}`"))?;
    Ok((e, parse_partition(l)?))
}

fn parse_hyper_insert(s: &str) -> Result<quotbwb_core::complex::HyperInsert, String> {
    use quotbwb_core::complex::HyperInsert;
    let (kind, rest) = s.split_once(':').ok_or("expected q:e:λ, s:e:λ or x:λ")?;
    match kind {
        "x" => Ok(HyperInsert::point_sub(parse_partition(rest)?)),
        "q" | "s" => {
            let (e, l) = parse_closed_insert(rest)?;
            Ok(if kind == "q" { HyperInsert::quotient(e, l) } else { HyperInsert::sub(e, l) })
        }
        _ => Err(format!("unknown insert kind `{kind}`")),
    }
}
