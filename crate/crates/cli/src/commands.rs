use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;
use spectral_moments::ensembles::{Ensemble, EntryDistribution};
use spectral_moments::experiments::{norm_scan, simulate, NormRow, SimulationConfig, SimulationResult};
use spectral_moments::limits::{limit_moment_table, word_stream_seed, Family, Method, MomentOptions, MomentValue};
use spectral_moments::spectra::Scale;
use spectral_moments::volumes::{build_system, volume_exact_capped, volume_mc, SlabKind, VolumeEstimate, DEFAULT_MAX_DIMENSION};
use spectral_moments::words::{enumerate_words_capped, height, is_irreducible, is_noncrossing, DEFAULT_MAX_HALF_LENGTH};
use spectral_moments::Error;

use crate::output::{csv_line, f64_field, opt_f64, sink, write_json, ExactValue};
use crate::{Cli, Command, Format};

pub enum CliError {
    Core(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Words(a) => words(cli, a),
        Command::Moments(a) => moments(cli, a),
        Command::Simulate(a) => simulate_cmd(cli, a),
        Command::NormScan(a) => norm_scan_cmd(cli, a),
    }
}

#[derive(Args, Debug)]
pub struct WordsArgs {
    /// Half-length: words have 2k letters
    #[arg(long)]
    pub k: usize,
    /// Monte Carlo samples per word when the exact volume is out of reach
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    /// Largest free dimension solved exactly
    #[arg(long, default_value_t = DEFAULT_MAX_DIMENSION)]
    pub max_dimension: usize,
    /// Largest accepted k
    #[arg(long, default_value_t = DEFAULT_MAX_HALF_LENGTH)]
    pub max_k: usize,
}

#[derive(Serialize)]
struct VolumeOut {
    method: &'static str,
    value: f64,
    exact: Option<ExactValue>,
    stderr: Option<f64>,
    samples: Option<u64>,
}

impl VolumeOut {
    fn of(v: &VolumeEstimate) -> Self {
        Self {
            method: v.method.as_str(),
            value: v.as_f64(),
            exact: v.exact_value().map(ExactValue::of),
            stderr: v.stderr,
            samples: v.samples,
        }
    }
}

#[derive(Serialize)]
struct WordRow {
    word: String,
    height: usize,
    irreducible: bool,
    noncrossing: bool,
    p_t: VolumeOut,
    p_h: VolumeOut,
}

#[derive(Serialize)]
struct WordsDoc {
    command: &'static str,
    k: usize,
    seed: u64,
    samples: u64,
    max_dimension: usize,
    rows: Vec<WordRow>,
}

fn word_volume(
    kind: SlabKind,
    w: &spectral_moments::words::PartitionWord,
    k: usize,
    index: usize,
    args: &WordsArgs,
    seed: u64,
) -> CliResult<VolumeEstimate> {
    let s = build_system(w, kind)?;
    match volume_exact_capped(&s, args.max_dimension) {
        Err(Error::Capacity(_)) => Ok(volume_mc(&s, args.samples, word_stream_seed(seed, k, index))?),
        other => Ok(other?),
    }
}

fn words(cli: &Cli, args: &WordsArgs) -> CliResult<()> {
    let seed = cli.global.seed;
    let list = enumerate_words_capped(args.k, args.max_k)?;
    let mut rows = Vec::with_capacity(list.len());
    for (i, w) in list.iter().enumerate() {
        let p_t = word_volume(SlabKind::Toeplitz, w, args.k, i, args, seed)?;
        let p_h = word_volume(SlabKind::Hankel, w, args.k, i, args, seed)?;
        rows.push(WordRow {
            word: w.to_string(),
            height: height(w),
            irreducible: is_irreducible(w),
            noncrossing: is_noncrossing(w),
            p_t: VolumeOut::of(&p_t),
            p_h: VolumeOut::of(&p_h),
        });
    }
    let mut out = sink(cli.global.output.as_deref())?;
    match cli.global.format {
        Format::Json => {
            let doc = WordsDoc {
                command: "words",
                k: args.k,
                seed,
                samples: args.samples,
                max_dimension: args.max_dimension,
                rows,
            };
            write_json(&mut out, &doc)?;
        }
        Format::Csv => {
            writeln!(out, "{}", WORDS_HEADER)?;
            for r in &rows {
                let vol = |v: &VolumeOut| {
                    [
                        f64_field(v.value),
                        v.exact.as_ref().map(ExactValue::fraction).unwrap_or_default(),
                        opt_f64(v.stderr),
                        v.method.to_string(),
                    ]
                };
                let mut fields = vec![r.word.clone(), r.height.to_string(), r.irreducible.to_string(), r.noncrossing.to_string()];
                fields.extend(vol(&r.p_t));
                fields.extend(vol(&r.p_h));
                csv_line(&mut out, &fields)?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

pub const WORDS_HEADER: &str =
    "word,height,irreducible,noncrossing,p_t,p_t_exact,p_t_stderr,p_t_method,p_h,p_h_exact,p_h_stderr,p_h_method";

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum FamilyArg {
    Toeplitz,
    Hankel,
    Markov,
    Semicircle,
    Gaussian,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Toeplitz => Family::Toeplitz,
            FamilyArg::Hankel => Family::Hankel,
            FamilyArg::Markov => Family::Markov,
            FamilyArg::Semicircle => Family::Semicircle,
            FamilyArg::Gaussian => Family::Gaussian,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum MethodArg {
    Exact,
    Mc,
    Formula,
}

#[derive(Args, Debug)]
pub struct MomentsArgs {
    /// Limit law
    #[arg(value_enum)]
    pub family: FamilyArg,
    /// Highest moment order reported (orders 0 through this one)
    #[arg(long)]
    pub order: usize,
    /// Volume method for toeplitz and hankel; markov is always exact and
    /// semicircle and gaussian use closed forms
    #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
    pub method: MethodArg,
    /// Monte Carlo samples per word
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    /// Largest free dimension solved exactly
    #[arg(long, default_value_t = DEFAULT_MAX_DIMENSION)]
    pub max_dimension: usize,
    /// Largest accepted half-length k = order / 2
    #[arg(long, default_value_t = DEFAULT_MAX_HALF_LENGTH)]
    pub max_k: usize,
}

#[derive(Serialize)]
struct MomentRow {
    order: usize,
    method: &'static str,
    value: f64,
    exact: Option<ExactValue>,
    stderr: Option<f64>,
}

#[derive(Serialize)]
struct MomentsDoc {
    command: &'static str,
    family: &'static str,
    max_order: usize,
    method: &'static str,
    seed: u64,
    samples: Option<u64>,
    rows: Vec<MomentRow>,
}

pub const MOMENTS_HEADER: &str = "family,order,method,value,numerator,denominator,stderr";

fn moments(cli: &Cli, args: &MomentsArgs) -> CliResult<()> {
    let family: Family = args.family.into();
    let method = match args.method {
        MethodArg::Exact => Method::Exact,
        MethodArg::Mc => Method::Mc,
        MethodArg::Formula => Method::Formula,
    };
    let opts = MomentOptions {
        method,
        mc_samples: args.samples,
        seed: cli.global.seed,
        max_half_length: args.max_k,
        max_dimension: args.max_dimension,
    };
    let table = limit_moment_table(family, args.order, &opts)?;
    let rows: Vec<MomentRow> = (0..=args.order)
        .map(|order| {
            let v = table.get(order).expect("table covers every order");
            match v {
                MomentValue::Exact(q) => MomentRow {
                    order,
                    method: if order % 2 == 1 || order == 0 { "exact" } else { table.method.as_str() },
                    value: q.to_f64().unwrap_or(f64::NAN),
                    exact: Some(ExactValue::of(&q)),
                    stderr: None,
                },
                MomentValue::Estimate { value, stderr } => {
                    MomentRow { order, method: "mc", value, exact: None, stderr: Some(stderr) }
                }
            }
        })
        .collect();
    let mut out = sink(cli.global.output.as_deref())?;
    match cli.global.format {
        Format::Json => {
            let doc = MomentsDoc {
                command: "moments",
                family: family.as_str(),
                max_order: args.order,
                method: table.method.as_str(),
                seed: cli.global.seed,
                samples: (table.method == Method::Mc).then_some(args.samples),
                rows,
            };
            write_json(&mut out, &doc)?;
        }
        Format::Csv => {
            writeln!(out, "{MOMENTS_HEADER}")?;
            for r in &rows {
                let (num, den) = r.exact.as_ref().map(|e| (e.numerator.clone(), e.denominator.clone())).unwrap_or_default();
                csv_line(
                    &mut out,
                    &[family.as_str().to_string(), r.order.to_string(), r.method.to_string(), f64_field(r.value), num, den, opt_f64(r.stderr)],
                )?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum EnsembleArg {
    Hankel,
    Toeplitz,
    Markov,
    Wigner,
    WignerPlusDiag,
}

impl From<EnsembleArg> for Ensemble {
    fn from(e: EnsembleArg) -> Self {
        match e {
            EnsembleArg::Hankel => Ensemble::Hankel,
            EnsembleArg::Toeplitz => Ensemble::Toeplitz,
            EnsembleArg::Markov => Ensemble::Markov,
            EnsembleArg::Wigner => Ensemble::Wigner,
            EnsembleArg::WignerPlusDiag => Ensemble::WignerPlusDiag,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum DistArg {
    Rademacher,
    Gaussian,
    Triangular,
    ShiftedGaussian,
}

impl DistArg {
    fn build(self, mean: f64) -> spectral_moments::Result<EntryDistribution> {
        let tag = match self {
            DistArg::Rademacher => "rademacher",
            DistArg::Gaussian => "gaussian",
            DistArg::Triangular => "triangular",
            DistArg::ShiftedGaussian => "shifted_gaussian",
        };
        EntryDistribution::parse(tag, mean)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum ScaleArg {
    /// Divide eigenvalues by sqrt(n)
    SqrtN,
    /// Divide eigenvalues by n
    N,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(value_enum)]
    pub ensemble: EnsembleArg,
    /// Matrix size
    #[arg(long, default_value_t = 1024)]
    pub n: usize,
    /// Independent replicates
    #[arg(long, default_value_t = 20)]
    pub replicates: usize,
    /// Entry distribution
    #[arg(long, value_enum, default_value_t = DistArg::Gaussian)]
    pub dist: DistArg,
    /// Mean of shifted-gaussian entries
    #[arg(long, default_value_t = 1.0)]
    pub mean: f64,
    /// Eigenvalue scaling
    #[arg(long, value_enum, default_value_t = ScaleArg::SqrtN)]
    pub scale: ScaleArg,
    /// Histogram bins
    #[arg(long, default_value_t = 50)]
    pub bins: usize,
    /// Histogram range lower end (default: smallest eigenvalue)
    #[arg(long, requires = "range_max", allow_hyphen_values = true)]
    pub range_min: Option<f64>,
    /// Histogram range upper end (default: largest eigenvalue)
    #[arg(long, requires = "range_min", allow_hyphen_values = true)]
    pub range_max: Option<f64>,
    /// Report empirical moments of orders 1 through this one
    #[arg(long, default_value_t = 8)]
    pub max_order: u32,
    /// Write the histogram CSV here
    #[arg(long)]
    pub histogram: Option<PathBuf>,
    /// Write the pooled scaled eigenvalues CSV here
    #[arg(long)]
    pub eigenvalues: Option<PathBuf>,
}

#[derive(Serialize)]
struct MomentSummaryOut {
    order: u32,
    mean: f64,
    stderr: Option<f64>,
}

#[derive(Serialize)]
struct BinOut {
    bin_left: f64,
    bin_right: f64,
    count: u64,
    density: f64,
}

#[derive(Serialize)]
struct SimulateDoc {
    command: &'static str,
    ensemble: &'static str,
    n: usize,
    replicates: usize,
    dist: &'static str,
    mean: f64,
    scale: &'static str,
    seed: u64,
    eigenvalue_count: usize,
    mode_count: usize,
    moments: Vec<MomentSummaryOut>,
    histogram: Vec<BinOut>,
}

pub const SIMULATE_HEADER: &str = "ensemble,n,replicates,scale,order,mean,stderr";

fn simulate_cmd(cli: &Cli, args: &SimulateArgs) -> CliResult<()> {
    let dist = args.dist.build(args.mean)?;
    let mut cfg = SimulationConfig::new(args.ensemble.into(), args.n, args.replicates, dist, cli.global.seed);
    cfg.scale = match args.scale {
        ScaleArg::SqrtN => Scale::SqrtN,
        ScaleArg::N => Scale::N,
    };
    cfg.bins = args.bins;
    cfg.max_order = args.max_order;
    cfg.range = args.range_min.zip(args.range_max);
    let r: SimulationResult = simulate(&cfg)?;
    if let Some(path) = &args.histogram {
        let mut w = sink(Some(path))?;
        r.histogram.write_csv(&mut w)?;
        w.flush()?;
    }
    if let Some(path) = &args.eigenvalues {
        let mut w = sink(Some(path))?;
        writeln!(w, "eigenvalue")?;
        for x in r.pooled.eigenvalues() {
            writeln!(w, "{}", f64_field(*x))?;
        }
        w.flush()?;
    }
    let mut out = sink(cli.global.output.as_deref())?;
    match cli.global.format {
        Format::Json => {
            let doc = SimulateDoc {
                command: "simulate",
                ensemble: cfg.ensemble.as_str(),
                n: cfg.n,
                replicates: cfg.replicates,
                dist: dist.tag(),
                mean: dist.mean(),
                scale: cfg.scale.as_str(),
                seed: cfg.seed,
                eigenvalue_count: r.pooled.len(),
                mode_count: r.histogram.mode_count(),
                moments: r.moments.iter().map(|m| MomentSummaryOut { order: m.order, mean: m.mean, stderr: m.stderr }).collect(),
                histogram: r
                    .histogram
                    .bins
                    .iter()
                    .map(|b| BinOut { bin_left: b.left, bin_right: b.right, count: b.count, density: b.density })
                    .collect(),
            };
            write_json(&mut out, &doc)?;
        }
        Format::Csv => {
            writeln!(out, "{SIMULATE_HEADER}")?;
            for m in &r.moments {
                csv_line(
                    &mut out,
                    &[
                        cfg.ensemble.as_str().to_string(),
                        cfg.n.to_string(),
                        cfg.replicates.to_string(),
                        cfg.scale.as_str().to_string(),
                        m.order.to_string(),
                        f64_field(m.mean),
                        opt_f64(m.stderr),
                    ],
                )?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct NormScanArgs {
    /// Comma-separated matrix sizes
    #[arg(long, value_delimiter = ',', default_value = "256,1024,4096")]
    pub ns: Vec<usize>,
    /// Entry distribution
    #[arg(long, value_enum, default_value_t = DistArg::Gaussian)]
    pub dist: DistArg,
    /// Mean of shifted-gaussian entries
    #[arg(long, default_value_t = 1.0)]
    pub mean: f64,
    /// Replicates per size
    #[arg(long, default_value_t = 5)]
    pub replicates: usize,
}

#[derive(Serialize)]
struct NormRowOut {
    n: usize,
    replicates: usize,
    norm_over_sqrt_2n_log_n: Option<f64>,
    norm_over_sqrt_2n_log_n_stderr: Option<f64>,
    norm_over_n: f64,
    norm_over_n_stderr: Option<f64>,
}

impl From<&NormRow> for NormRowOut {
    fn from(r: &NormRow) -> Self {
        Self {
            n: r.n,
            replicates: r.replicates,
            norm_over_sqrt_2n_log_n: r.log_ratio,
            norm_over_sqrt_2n_log_n_stderr: r.log_ratio_stderr,
            norm_over_n: r.linear_ratio,
            norm_over_n_stderr: r.linear_ratio_stderr,
        }
    }
}

#[derive(Serialize)]
struct NormScanDoc {
    command: &'static str,
    dist: &'static str,
    mean: f64,
    seed: u64,
    rows: Vec<NormRowOut>,
}

pub const NORM_SCAN_HEADER: &str =
    "n,replicates,norm_over_sqrt_2n_log_n,norm_over_sqrt_2n_log_n_stderr,norm_over_n,norm_over_n_stderr";

fn norm_scan_cmd(cli: &Cli, args: &NormScanArgs) -> CliResult<()> {
    let dist = args.dist.build(args.mean)?;
    let rows = norm_scan(&args.ns, dist, args.replicates, cli.global.seed)?;
    let mut out = sink(cli.global.output.as_deref())?;
    match cli.global.format {
        Format::Json => {
            let doc = NormScanDoc {
                command: "norm-scan",
                dist: dist.tag(),
                mean: dist.mean(),
                seed: cli.global.seed,
                rows: rows.iter().map(NormRowOut::from).collect(),
            };
            write_json(&mut out, &doc)?;
        }
        Format::Csv => {
            writeln!(out, "{NORM_SCAN_HEADER}")?;
            for r in &rows {
                csv_line(
                    &mut out,
                    &[
                        r.n.to_string(),
                        r.replicates.to_string(),
                        opt_f64(r.log_ratio),
                        opt_f64(r.log_ratio_stderr),
                        f64_field(r.linear_ratio),
                        opt_f64(r.linear_ratio_stderr),
                    ],
                )?;
            }
            out.flush()?;
        }
    }
    Ok(())
}
