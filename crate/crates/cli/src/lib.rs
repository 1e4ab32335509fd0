//! Command-line front end: job files in, deterministic text out.

pub mod config;
pub mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use kummer_core::agcode::DEFAULT_BUDGET;
use kummer_core::{
    brute_force_distance, build_cl, build_comega, Divisor, EvaluationSet, KummerCurve, LinearCode,
    OnePoint, RationalPlace,
};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use config::{ConfigError, JobConfig};

#[derive(Debug, Parser)]
#[command(
    name = "kummer",
    about = "Multi-point AG codes over Kummer extensions y^m = f(x)^lambda"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Job file with [field], [curve] and [job] sections.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Where to write the generator matrix (build-code).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Maximum number of codewords to enumerate.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    /// Seed for choosing which places to drop when n is below the maximum.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Side of the search rectangle [1, bound]^l.
    #[arg(long, global = true)]
    pub bound: Option<i64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Genus, place count, Bezout data and one-point gap sequences.
    CurveInfo,
    /// All rational places as CSV.
    Places,
    /// The lattice-point basis of L(G).
    RrBasis,
    /// l(G).
    Dim,
    /// Weierstrass semigroup membership or listing.
    Semigroup,
    /// Pure gaps in [1, bound]^l as CSV.
    PureGaps,
    /// Maximal boxes of pure gaps and the codes they induce.
    BoxSearch,
    /// The floor of a divisor.
    Floor,
    /// Generator matrix of C_L or C_Omega with its designed distances.
    BuildCode,
    /// Exact minimum distance by enumeration, checked against the bounds.
    CheckDistance,
    /// Canned checks for one of the worked examples.
    VerifyExample {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        example: u8,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Math(#[from] kummer_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Math(_) | CliError::Io(_) => 1,
        }
    }
}

/// What a successful run printed and whether every check in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub success: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            success: true,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    if let Command::VerifyExample { example } = cli.command {
        return Ok(verify::run_example(example));
    }
    let path = cli.config.as_ref().ok_or_else(|| ConfigError {
        location: "--config".into(),
        message: "a job file is required for this command".into(),
    })?;
    let cfg = JobConfig::load(path)?;
    run_with_config(cli, &cfg)
}

pub fn run_with_config(cli: &Cli, cfg: &JobConfig) -> Result<Output, CliError> {
    let curve = cfg.build_curve()?;
    let mut out = String::new();
    match &cli.command {
        Command::CurveInfo => curve_info(&curve, &mut out),
        Command::Places => places_csv(&curve, &mut out),
        Command::RrBasis => {
            let g = cfg.divisor(curve.r())?;
            for p in curve.omega_enumerate(&g)? {
                let orders = curve.shape().pole_orders(&p);
                let mut left = vec![p.i.to_string()];
                left.extend(p.j.iter().map(i64::to_string));
                let _ = writeln!(out, "{} | {orders}", left.join(" "));
            }
        }
        Command::Dim => {
            let g = cfg.divisor(curve.r())?;
            let _ = writeln!(out, "{}", curve.dimension(&g)?);
        }
        Command::Semigroup => semigroup(cli, cfg, &curve, &mut out)?,
        Command::PureGaps => {
            let places = cfg.place_tuple(&curve)?;
            let bound = search_bound(cli, cfg, &curve)?;
            for point in grid(places.len(), 1, bound) {
                if curve.shape().pure_gap(&places, &point)? {
                    let _ = writeln!(out, "{}", join(&point, ","));
                }
            }
        }
        Command::BoxSearch => {
            let places = cfg.place_tuple(&curve)?;
            let bound = search_bound(cli, cfg, &curve)?;
            for c in curve.shape().box_search(&places, bound)? {
                let _ = writeln!(
                    out,
                    "gain={} designed_distance={} base={} widths={} divisor={}",
                    c.gain,
                    c.designed_distance,
                    join(c.gap_box.base(), ","),
                    join(c.gap_box.widths(), ","),
                    divisor_token(&c.divisor)
                );
            }
        }
        Command::Floor => {
            let g = cfg.divisor(curve.r())?;
            let _ = writeln!(out, "{}", curve.shape().floor_divisor(&g)?);
        }
        Command::BuildCode => {
            let (code, header) = build_code(cli, cfg, &curve)?;
            out.push_str(&header);
            match &cli.out {
                Some(path) => std::fs::write(path, code.export())?,
                None => out.push_str(&code.export()),
            }
        }
        Command::CheckDistance => return check_distance(cli, cfg, &curve),
        Command::VerifyExample { example } => return Ok(verify::run_example(*example)),
    }
    Ok(Output::ok(out))
}

fn curve_info(curve: &KummerCurve, out: &mut String) {
    let field = curve.field();
    let (a, b) = curve.r_bezout();
    let (big_a, big_b) = curve.lambda_bezout();
    let _ = writeln!(
        out,
        "field p={} e={} q={} modulus={}",
        field.p(),
        field.e(),
        field.order(),
        join(field.modulus(), ",")
    );
    let _ = writeln!(
        out,
        "curve m={} lambda={} r={}",
        curve.m(),
        curve.lambda(),
        curve.r()
    );
    let _ = writeln!(out, "roots={}", join(curve.roots(), ","));
    let _ = writeln!(out, "genus={}", curve.genus());
    let _ = writeln!(out, "places={}", curve.enumerate_places().len());
    let _ = writeln!(out, "bezout_r a={a} b={b}");
    let _ = writeln!(out, "bezout_lambda A={big_a} B={big_b}");
    let limit = 2 * curve.genus();
    let gaps_p1 = curve.shape().one_point_gaps(OnePoint::P1, limit);
    let gaps_inf = curve.shape().one_point_gaps(OnePoint::Infinity, limit);
    let _ = writeln!(out, "gaps_P1={}", join(&gaps_p1, ","));
    let _ = writeln!(out, "gaps_Pinf={}", join(&gaps_inf, ","));
}

fn places_csv(curve: &KummerCurve, out: &mut String) {
    let _ = writeln!(out, "index,place,x,y");
    for (idx, place) in curve.enumerate_places().iter().enumerate() {
        let _ = match *place {
            RationalPlace::Infinity => writeln!(out, "{idx},Pinf,,"),
            RationalPlace::Ramified(mu) => writeln!(out, "{idx},P{mu},{},0", curve.roots()[mu - 1]),
            RationalPlace::Affine { x, y } => writeln!(out, "{idx},affine,{x},{y}"),
        };
    }
}

fn semigroup(
    cli: &Cli,
    cfg: &JobConfig,
    curve: &KummerCurve,
    out: &mut String,
) -> Result<(), CliError> {
    let places = cfg.place_tuple(curve)?;
    if let Some(coords) = cfg.job_list("coords")? {
        let member = curve.shape().semigroup_member(&places, &coords)?;
        let _ = writeln!(out, "{},member={member}", join(&coords, ","));
        return Ok(());
    }
    let bound = search_bound(cli, cfg, curve)?;
    for point in grid(places.len(), 0, bound) {
        if curve.shape().semigroup_member(&places, &point)? {
            let _ = writeln!(out, "{}", join(&point, ","));
        }
    }
    Ok(())
}

/// `--bound`, else `bound=` in the job, else `2g - 1` (every pure gap fits).
fn search_bound(cli: &Cli, cfg: &JobConfig, curve: &KummerCurve) -> Result<i64, CliError> {
    let bound = match cli.bound {
        Some(b) => b,
        None => cfg
            .job_value("bound")?
            .unwrap_or((2 * curve.genus() - 1).max(1)),
    };
    let cells = (bound.max(0) as u128 + 1).saturating_pow(cfg.place_tuple(curve)?.len() as u32);
    if cells > 1 << 24 {
        return Err(kummer_core::Error::SearchTooLarge(cells).into());
    }
    Ok(bound)
}

fn grid(dims: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if hi < lo {
        return out;
    }
    let mut point = vec![lo; dims];
    loop {
        out.push(point.clone());
        let mut d = dims;
        loop {
            if d == 0 {
                return out;
            }
            d -= 1;
            if point[d] < hi {
                point[d] += 1;
                break;
            }
            point[d] = lo;
        }
    }
}

/// Evaluation places for `G`: every place outside `supp(G)`, thinned to
/// `n` by dropping the last ones in enumeration order, or a seeded
/// random subset when a seed is given. Returns the places and the dropped ones.
pub fn select_places(
    curve: &KummerCurve,
    g: &Divisor,
    n: Option<usize>,
    seed: Option<u64>,
) -> Result<(EvaluationSet, Vec<RationalPlace>), kummer_core::Error> {
    let all = EvaluationSet::complement_of_support(curve, g)
        .places()
        .to_vec();
    let n = n.unwrap_or(all.len());
    if n > all.len() {
        return Err(kummer_core::Error::InconsistentDivisor(format!(
            "n = {n} exceeds the {} places outside supp(G)",
            all.len()
        )));
    }
    let keep: Vec<bool> = match seed {
        None => (0..all.len()).map(|k| k < n).collect(),
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut keep = vec![false; all.len()];
            for k in sample(&mut rng, all.len(), n) {
                keep[k] = true;
            }
            keep
        }
    };
    let mut chosen = Vec::with_capacity(n);
    let mut dropped = Vec::new();
    for (place, k) in all.into_iter().zip(keep) {
        if k {
            chosen.push(place);
        } else {
            dropped.push(place);
        }
    }
    Ok((EvaluationSet::new(curve, g, chosen)?, dropped))
}

fn build_code(
    cli: &Cli,
    cfg: &JobConfig,
    curve: &KummerCurve,
) -> Result<(LinearCode, String), CliError> {
    let g = cfg.divisor(curve.r())?;
    let n: Option<usize> = cfg.job_value("n")?;
    let seed = match cli.seed {
        Some(s) => Some(s),
        None => cfg.job_value("seed")?,
    };
    let (d, dropped) = select_places(curve, &g, n, seed)?;
    let kind = cfg.job_str("code").unwrap_or("omega");
    let code = match kind {
        "omega" => build_comega(curve, &g, &d)?,
        "l" => build_cl(curve, &g, &d)?,
        other => {
            return Err(ConfigError {
                location: "key `code`".into(),
                message: format!("expected omega or l, got `{other}`"),
            }
            .into())
        }
    };
    let mut header = String::new();
    let _ = writeln!(
        header,
        "# code={kind} n={} k={} q={} divisor={}",
        code.n(),
        code.k(),
        curve.field().order(),
        divisor_token(&g)
    );
    let selection = match seed {
        Some(s) => format!("seed={s}"),
        None => "last".to_string(),
    };
    let dropped: Vec<String> = dropped.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        header,
        "# selection={selection} dropped={}",
        if dropped.is_empty() {
            "none".to_string()
        } else {
            dropped.join(";")
        }
    );
    for b in code.bounds() {
        let _ = writeln!(header, "# bound {b}");
    }
    Ok((code, header))
}

fn check_distance(cli: &Cli, cfg: &JobConfig, curve: &KummerCurve) -> Result<Output, CliError> {
    let (code, header) = build_code(cli, cfg, curve)?;
    let budget = match cli.budget {
        Some(b) => b,
        None => cfg.job_value("budget")?.unwrap_or(DEFAULT_BUDGET),
    };
    let mut out = header;
    let mut success = true;
    match brute_force_distance(&code, budget)? {
        None => {
            let _ = writeln!(out, "d=none");
        }
        Some(d) => {
            let _ = writeln!(out, "d={d}");
            for b in code.bounds() {
                let ok = d as i64 >= b.value;
                success &= ok;
                let _ = writeln!(out, "{} {b}", if ok { "OK" } else { "VIOLATED" });
            }
        }
    }
    Ok(Output {
        stdout: out,
        success,
    })
}

/// `s1,...,sr;t`, the job-file divisor syntax.
pub fn divisor_token(g: &Divisor) -> String {
    format!("{};{}", join(g.s(), ","), g.t())
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}
