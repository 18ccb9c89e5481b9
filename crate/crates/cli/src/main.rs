//! `relaxchar`: exact characters, string functions and Shapovalov data of
//! relaxed modules over affine sl(2) and osp(1|2), as batch commands with
//! JSON/CSV output.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use relaxchar_core::affine::{relaxed_dim, shapovalov_matrix};
use relaxchar_core::characters::{
    relaxed_string_function, spectrum_params, AdmissibleLevel, MinimalLabel,
};
use relaxchar_core::exact::Rational;
use relaxchar_core::finite::{AlgebraKind, CasimirParam, DynkinLabel, GroundFamily, Sector};
use relaxchar_core::qseries::QSeries;
use relaxchar_core::verifier::{
    verify_character_theorem, verify_counterexample_k_minus1, verify_exact_sequence,
    verify_rank_stabilization, verify_verma_stabilization, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "relaxchar",
    about = "Exact characters and string functions of relaxed modules over affine sl(2) and osp(1|2)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Sl2,
    Osp12,
}

impl From<AlgebraArg> for AlgebraKind {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Sl2 => AlgebraKind::Sl2,
            AlgebraArg::Osp12 => AlgebraKind::Osp12,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SectorArg {
    Ns,
    R,
}

impl From<SectorArg> for Sector {
    fn from(s: SectorArg) -> Self {
        match s {
            SectorArg::Ns => Sector::Ns,
            SectorArg::R => Sector::R,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityCoset {
    Even,
    Odd,
}

#[derive(Args)]
struct LabelArgs {
    /// Algebra the module lives over.
    #[arg(long)]
    algebra: AlgebraArg,
    /// Admissibility numerator u.
    #[arg(long)]
    u: i64,
    /// Admissibility denominator data v.
    #[arg(long)]
    v: i64,
    /// Spectrum label r in 1..=u-1.
    #[arg(long)]
    r: i64,
    /// Spectrum label s in 1..=v-1.
    #[arg(long)]
    s: i64,
    /// Sector override; osp(1|2) derives the sector from the parity of r-s,
    /// so this may only confirm it.
    #[arg(long)]
    sector: Option<SectorArg>,
    /// Weight-coset parity, meaningful for Ramond string functions only.
    #[arg(long, value_enum, default_value_t = ParityCoset::Even)]
    parity_coset: ParityCoset,
    /// Truncation: number of integer powers of q past the leading exponent.
    #[arg(long, default_value_t = 8)]
    orders: u32,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Drop the q^(-c/24) normalization.
    #[arg(long, default_value_t = false)]
    raw: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Algebra the module lives over.
    #[arg(long)]
    algebra: AlgebraArg,
    /// Sector (ns or r).
    #[arg(long)]
    sector: SectorArg,
    /// Level k as an exact rational `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    level: String,
    /// Casimir parameter: q for sl2 and Ramond, sigma for Neveu-Schwarz.
    #[arg(long, allow_hyphen_values = true)]
    param: String,
    /// Coset representative of the ground weight support, `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    coset: String,
    /// Weight nu to probe, `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// Twice the conformal grade above the ground states.
    #[arg(long)]
    grade2: u64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Character data of a relaxed module: weight-lattice header plus the
    /// per-weight string-function series.
    Character(LabelArgs),
    /// The string-function series alone.
    StringFunction(LabelArgs),
    /// All (r,s) labels of an admissible level with their parameters.
    Spectrum {
        #[arg(long)]
        algebra: AlgebraArg,
        #[arg(long)]
        u: i64,
        #[arg(long)]
        v: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact weight-space dimension of the preferred relaxed quotient.
    Dims(FamilyArgs),
    /// The Shapovalov matrix, its basis and its rank.
    Shapovalov(FamilyArgs),
    /// Run a named verification suite (exit status 1 on failure).
    Verify {
        /// One of: sl2-32, sl2-52, osp-kminus54, verma-stabilization,
        /// counterexample-kminus1, exact-sequences, rank-stabilization, all.
        #[arg(long)]
        suite: String,
        /// Maximal doubled grade for the dimension comparisons.
        #[arg(long, default_value_t = 4)]
        max_grade2: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Character(args) => emit_series(args, true),
        Command::StringFunction(args) => emit_series(args, false),
        Command::Spectrum {
            algebra,
            u,
            v,
            format,
        } => spectrum(algebra.into(), u, v, format),
        Command::Dims(args) => dims(args),
        Command::Shapovalov(args) => shapovalov(args),
        Command::Verify {
            suite,
            max_grade2,
            format,
        } => verify(&suite, max_grade2, format),
    }
}

fn parse_rat(s: &str) -> Result<Rational, Box<dyn std::error::Error>> {
    Ok(Rational::from_str(s)?)
}

fn label_data(
    args: &LabelArgs,
) -> Result<(AdmissibleLevel, MinimalLabel), Box<dyn std::error::Error>> {
    let lvl = AdmissibleLevel::new(args.algebra.into(), args.u, args.v)?;
    let lab = MinimalLabel::new(&lvl, args.r, args.s)?;
    if let Some(sector) = args.sector {
        let declared: Sector = sector.into();
        if declared != lab.sector(lvl.kind) {
            return Err(format!(
                "label ({},{}) lies in the {} sector; --sector {} contradicts it",
                args.r,
                args.s,
                lab.sector(lvl.kind),
                declared
            )
            .into());
        }
    }
    Ok((lvl, lab))
}

fn series_csv(series: &QSeries) -> String {
    let mut out = String::from("exponent,coefficient\n");
    for (e, c) in series.terms() {
        out.push_str(&format!("{e},{c}\n"));
    }
    out
}

fn emit_series(args: LabelArgs, with_header: bool) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let (lvl, lab) = label_data(&args)?;
    let data = spectrum_params(&lvl, &lab)?;
    let pair = relaxed_string_function(&lvl, &lab, args.orders, args.raw)?;
    let odd = matches!(args.parity_coset, ParityCoset::Odd);
    let series = pair.by_parity(odd);
    match args.format {
        Format::Csv => print!("{}", series_csv(series)),
        Format::Json => {
            let doc = if with_header {
                let weight_support = match (lvl.kind, data.sector) {
                    (AlgebraKind::Sl2, _) => {
                        format!("{} + 2Z (one copy of the series per weight)", data.mu_rs.0)
                    }
                    (_, Sector::Ns) => {
                        format!("{} + Z (one copy of the series per weight)", data.mu_rs.0)
                    }
                    (_, Sector::R) => format!(
                        "{} + {} + 2Z (this parity coset only)",
                        data.mu_rs.0,
                        if odd { 1 } else { 0 }
                    ),
                };
                json!({
                    "algebra": lvl.kind.to_string(),
                    "sector": data.sector.to_string(),
                    "u": lvl.u,
                    "v": lvl.v,
                    "r": lab.r,
                    "s": lab.s,
                    "c": lvl.c.to_string(),
                    "delta": data.delta.to_string(),
                    "param_kind": data.param.kind_str(),
                    "param": data.param.value().to_string(),
                    "mu_rs": data.mu_rs.0.to_string(),
                    "parity_coset": if odd { "odd" } else { "even" },
                    "weight_support": weight_support,
                    "series": series.to_json(),
                })
            } else {
                json!({ "series": series.to_json() })
            };
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn spectrum(
    kind: AlgebraKind,
    u: i64,
    v: i64,
    format: Format,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let lvl = AdmissibleLevel::new(kind, u, v)?;
    let mut rows = Vec::new();
    for r in 1..u {
        for s in 1..v {
            let lab = MinimalLabel::new(&lvl, r, s)?;
            let data = spectrum_params(&lvl, &lab)?;
            rows.push(json!({
                "r": r,
                "s": s,
                "sector": data.sector.to_string(),
                "param_kind": data.param.kind_str(),
                "param": data.param.value().to_string(),
                "mu": data.mu_rs.0.to_string(),
                "delta": data.delta.to_string(),
            }));
        }
    }
    match format {
        Format::Json => {
            let doc = json!({
                "level": lvl.to_json(),
                "labels": rows,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => {
            println!("r,s,sector,param_kind,param,mu,delta");
            for row in rows {
                println!(
                    "{},{},{},{},{},{},{}",
                    row["r"],
                    row["s"],
                    row["sector"].as_str().unwrap(),
                    row["param_kind"].as_str().unwrap(),
                    row["param"].as_str().unwrap(),
                    row["mu"].as_str().unwrap(),
                    row["delta"].as_str().unwrap(),
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn family_from(args: &FamilyArgs) -> Result<GroundFamily, Box<dyn std::error::Error>> {
    let kind: AlgebraKind = args.algebra.into();
    let sector: Sector = args.sector.into();
    let value = parse_rat(&args.param)?;
    let param = match (kind, sector) {
        (AlgebraKind::Osp12, Sector::Ns) => CasimirParam::Sigma(value),
        _ => CasimirParam::Q(value),
    };
    Ok(GroundFamily::new(
        kind,
        sector,
        DynkinLabel(parse_rat(&args.coset)?),
        param,
        parse_rat(&args.level)?,
    )?)
}

fn dims(args: FamilyArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let fam = family_from(&args)?;
    let weight = parse_rat(&args.weight)?;
    let dim = relaxed_dim(&fam, &weight, args.grade2)?;
    match args.format {
        Format::Json => {
            let doc = json!({
                "family": fam.to_json(),
                "weight": weight.to_string(),
                "grade2": args.grade2,
                "dim": dim,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => {
            println!("weight,grade2,dim");
            println!("{},{},{}", weight, args.grade2, dim);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn shapovalov(args: FamilyArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let fam = family_from(&args)?;
    let weight = parse_rat(&args.weight)?;
    let res = shapovalov_matrix(&fam, &weight, args.grade2)?;
    match args.format {
        Format::Json => {
            let doc = json!({
                "family": fam.to_json(),
                "result": res.to_json(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => {
            println!(
                "# basis: {}",
                res.basis
                    .iter()
                    .map(|m| m.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for i in 0..res.matrix.rows() {
                let row: Vec<String> = (0..res.matrix.cols())
                    .map(|j| res.matrix.get(i, j).to_string())
                    .collect();
                println!("{}", row.join(","));
            }
            println!("# rank: {}", res.rank);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os("RELAXCHAR_CACHE_DIR").map(PathBuf::from)
}

type SuiteResult = Result<(), Box<dyn std::error::Error>>;

fn verify(
    suite: &str,
    max_grade2: u64,
    format: Format,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let mut reports: Vec<VerificationReport> = Vec::new();
    let run_sl2_32 = |reports: &mut Vec<VerificationReport>| -> SuiteResult {
        let lvl = AdmissibleLevel::sl2(3, 2)?;
        let lab = MinimalLabel::new(&lvl, 1, 1)?;
        reports.push(verify_character_theorem(&lvl, &lab, max_grade2.min(6))?);
        Ok(())
    };
    let run_sl2_52 = |reports: &mut Vec<VerificationReport>| -> SuiteResult {
        let lvl = AdmissibleLevel::sl2(5, 2)?;
        for r in 1..5 {
            let lab = MinimalLabel::new(&lvl, r, 1)?;
            reports.push(verify_character_theorem(&lvl, &lab, max_grade2.min(4))?);
        }
        Ok(())
    };
    let run_osp = |reports: &mut Vec<VerificationReport>| -> SuiteResult {
        let lvl = AdmissibleLevel::osp12(2, 4)?;
        let ns = MinimalLabel::new(&lvl, 1, 2)?;
        reports.push(verify_character_theorem(&lvl, &ns, max_grade2.min(2))?);
        let rr = MinimalLabel::new(&lvl, 1, 1)?;
        reports.push(verify_character_theorem(&lvl, &rr, max_grade2.min(3))?);
        Ok(())
    };
    let run_sequences = |reports: &mut Vec<VerificationReport>| -> SuiteResult {
        let lvl = AdmissibleLevel::sl2(3, 2)?;
        let lab = MinimalLabel::new(&lvl, 1, 1)?;
        reports.push(verify_exact_sequence(&lvl, &lab, max_grade2.min(4))?);
        let lvl = AdmissibleLevel::osp12(2, 4)?;
        let lab = MinimalLabel::new(&lvl, 1, 2)?;
        reports.push(verify_exact_sequence(&lvl, &lab, max_grade2.min(4))?);
        Ok(())
    };
    let run_stab = |reports: &mut Vec<VerificationReport>| -> SuiteResult {
        let fams: Vec<(GroundFamily, u64)> = vec![
            (
                GroundFamily::new(
                    AlgebraKind::Sl2,
                    Sector::Ns,
                    DynkinLabel(Rational::new(-3, 2)),
                    CasimirParam::Q(Rational::new(-3, 8)),
                    Rational::new(-1, 2),
                )?,
                2,
            ),
            (
                GroundFamily::new(
                    AlgebraKind::Sl2,
                    Sector::Ns,
                    DynkinLabel(Rational::new(-5, 2)),
                    CasimirParam::Q(Rational::new(5, 8)),
                    Rational::new(1, 2),
                )?,
                2,
            ),
            (
                GroundFamily::new(
                    AlgebraKind::Osp12,
                    Sector::Ns,
                    DynkinLabel(Rational::new(-1, 2)),
                    CasimirParam::Sigma(Rational::zero()),
                    Rational::new(-5, 4),
                )?,
                2,
            ),
            (
                GroundFamily::new(
                    AlgebraKind::Osp12,
                    Sector::R,
                    DynkinLabel(Rational::new(-3, 4)),
                    CasimirParam::Q(Rational::new(-15, 32)),
                    Rational::new(-5, 4),
                )?,
                1,
            ),
        ];
        for (fam, grade2) in fams {
            reports.push(verify_rank_stabilization(&fam, grade2, 1..=6, 3)?);
        }
        Ok(())
    };

    match suite {
        "sl2-32" => run_sl2_32(&mut reports)?,
        "sl2-52" => run_sl2_52(&mut reports)?,
        "osp-kminus54" => run_osp(&mut reports)?,
        "verma-stabilization" => reports.push(verify_verma_stabilization(4)?),
        "counterexample-kminus1" => {
            reports.push(verify_counterexample_k_minus1(cache_dir_from_env())?)
        }
        "exact-sequences" => run_sequences(&mut reports)?,
        "rank-stabilization" => run_stab(&mut reports)?,
        "all" => {
            run_sl2_32(&mut reports)?;
            run_sl2_52(&mut reports)?;
            run_osp(&mut reports)?;
            reports.push(verify_verma_stabilization(4)?);
            reports.push(verify_counterexample_k_minus1(cache_dir_from_env())?);
            run_sequences(&mut reports)?;
            run_stab(&mut reports)?;
        }
        other => return Err(format!("unknown suite `{other}`").into()),
    }

    let all_passed = reports.iter().all(|r| r.passed);
    match format {
        Format::Json => {
            let doc = json!({
                "suite": suite,
                "passed": all_passed,
                "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => {
            for r in &reports {
                print!("{}", r.render_table());
            }
            println!("overall: {}", if all_passed { "PASS" } else { "FAIL" });
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
