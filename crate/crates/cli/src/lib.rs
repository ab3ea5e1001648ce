//! Driver behind the `wgroup` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use wgroup_core::cohom::{cohomology_report, CohomologyReport};
use wgroup_core::graded::{compare_field, CompareReport};
use wgroup_core::milnor::{symbol_algebra, FieldDescriptor, SymbolAlgebra};
use wgroup_core::qcentral::{quotient_at_level, third_quotient, to_table, GroupRecord};
use wgroup_core::realizability::{
    h1_dimension, h1_vs_cd_check, principle_check, relators_in_third_series, wreath_construct, CdDescriptor, Side,
    Verdict, VerdictKind, WreathReport, WreathSpec,
};
use wgroup_core::{parse_file, Error, Presentation, SeriesParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INAPPLICABLE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "wgroup", version, about = "Third q-central quotients, their cohomology, and mod-q Milnor K-theory")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Coefficient modulus, a prime power.
    #[arg(long, global = true, default_value_t = 2)]
    pub q: u64,
    #[arg(long, global = true, default_value_t = 512, value_parser = clap::value_parser!(u64).range(1..))]
    pub order_bound: u64,
    /// Largest group order for which full H^2 is computed.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub h2_bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Seed for randomized commands; current commands are deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, exponent, class and abelian invariants of G^[level].
    Quotient {
        file: PathBuf,
        #[arg(long)]
        group: Option<String>,
        #[arg(long, default_value_t = 3)]
        level: u32,
    },
    /// H^1, H^2 and decomposable H^2 of G^[3], with the cup-product tensor.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        group: Option<String>,
    },
    /// k1 and k2 of a field: "Fq:<size>", "Qp:<l>" or "R".
    Milnor { field: String },
    /// Compare the Galois side and the Milnor side in degrees 1 and 2.
    Compare { field: String },
    /// Run the realizability criteria.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Presentation file, or a JSON wreath spec with --wreath.
    pub file: PathBuf,
    #[arg(long)]
    pub group: Option<String>,
    /// Compare against this presentation file (default: free group of the same rank).
    #[arg(long)]
    pub against: Option<PathBuf>,
    #[arg(long)]
    pub against_group: Option<String>,
    /// Side asserted to be realizable in the comparison.
    #[arg(long, value_enum)]
    pub assume_realizable: Option<SideArg>,
    /// Cohomological dimension of the group, for the H^1 test.
    #[arg(long, conflicts_with = "cd_infinite")]
    pub cd: Option<u64>,
    #[arg(long)]
    pub cd_infinite: bool,
    #[arg(long)]
    pub torsion_free: bool,
    /// Treat the input as a wreath spec.
    #[arg(long)]
    pub wreath: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideArg {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientOutput {
    pub group: String,
    pub level: u32,
    pub q: u64,
    pub record: GroupRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyOutput {
    pub group: String,
    pub q: u64,
    pub report: CohomologyReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutput {
    pub verdicts: Vec<Verdict>,
    pub wreath: Option<WreathReport>,
}

/// Text or JSON report plus exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome, Error> {
    let cfg = &cli.config;
    let params = SeriesParams::from_q(cfg.q)?;
    let json = cfg.output == Output::Json;
    match &cli.command {
        Command::Quotient { file, group, level } => {
            let pres = load(file, group.as_deref())?;
            let (_, record) = quotient_at_level(&pres, *level, params, cfg.order_bound)?;
            let out = QuotientOutput {
                group: pres.name.clone(),
                level: *level,
                q: cfg.q,
                record,
            };
            let text = if json {
                to_json(&out)
            } else {
                let r = &out.record;
                format!(
                    "group {} level {} q {}\norder: {}\nexponent: {}\nclass: {}\nabelian invariants: {:?}\n",
                    out.group,
                    out.level,
                    out.q,
                    r.order,
                    r.exponent,
                    r.class.map_or("-".into(), |c| c.to_string()),
                    r.abelian_invariants
                )
            };
            Ok(ok(text))
        }
        Command::Cohomology { file, group } => {
            let pres = load(file, group.as_deref())?;
            let g = to_table(&third_quotient(&pres, params, cfg.order_bound)?)?;
            let out = CohomologyOutput {
                group: pres.name.clone(),
                q: cfg.q,
                report: cohomology_report(&g, params, cfg.order_bound, cfg.h2_bound)?,
            };
            let text = if json {
                to_json(&out)
            } else {
                let r = &out.report;
                let mut s = format!("group {} q {} order of G^[3]: {}\n", out.group, out.q, r.group_order);
                let _ = writeln!(s, "dim H^1: {} {:?}", r.h1.dimension, r.h1.invariants);
                match &r.h2 {
                    Some(h) => {
                        let _ = writeln!(s, "dim H^2: {} {:?}", h.dimension, h.invariants);
                    }
                    None => {
                        let _ = writeln!(s, "dim H^2: skipped (order above --h2-bound {})", cfg.h2_bound);
                    }
                }
                let _ = writeln!(s, "dim decomposable H^2: {} {:?}", r.decomposable_dimension, r.decomposable_invariants);
                s.push_str(&tensor_text(&r.pairing.values));
                s
            };
            Ok(ok(text))
        }
        Command::Milnor { field } => {
            let a: SymbolAlgebra = symbol_algebra(&FieldDescriptor::parse(field, params)?)?;
            let text = if json {
                to_json(&a)
            } else {
                let mut s = format!("field {} q {}\n", a.field, a.modulus);
                let _ = writeln!(s, "k1: rank {} basis {:?} orders {:?}", a.k1_basis.len(), a.k1_basis, a.k1_orders);
                let order: u64 = a.k2_invariants.iter().map(|&o| o as u64).product();
                let _ = writeln!(s, "k2: order {} invariants {:?}", order, a.k2_invariants);
                s.push_str(&tensor_text(&a.pairing));
                s
            };
            Ok(ok(text))
        }
        Command::Compare { field } => {
            let r: CompareReport = compare_field(&FieldDescriptor::parse(field, params)?, cfg.order_bound)?;
            let text = if json {
                to_json(&r)
            } else if r.consistent {
                format!(
                    "THEOREM-A-CONSISTENT\nfield {} q {}: (H^1, dec H^2) = ({}, {}), G^[3] of order {}\n",
                    r.field, r.q, r.galois.dim1, r.galois.dim2, r.group_order
                )
            } else {
                let mut s = format!("INCONSISTENT field {} q {}\n", r.field, r.q);
                for d in &r.diff {
                    let _ = writeln!(s, "  {d}");
                }
                s
            };
            Ok(Outcome {
                stdout: text,
                code: if r.consistent { EXIT_OK } else { EXIT_INAPPLICABLE },
            })
        }
        Command::Check(args) => {
            let out = check(args, cfg, params)?;
            let finding = out
                .verdicts
                .iter()
                .any(|v| matches!(v.verdict, VerdictKind::NotRealizable | VerdictKind::AtMostOneRealizable));
            let text = if json {
                to_json(&out)
            } else {
                let mut s = String::new();
                for v in &out.verdicts {
                    let _ = writeln!(s, "{}: {}", v.criterion, v.verdict.as_str());
                    let _ = writeln!(s, "  witness: {}", v.witness);
                }
                if let Some(w) = &out.wreath {
                    let _ = writeln!(
                        s,
                        "wreath: dim H^1 = {} + {} = {}, cd = {}, model dim H^1 = {}",
                        w.dim_h1_k,
                        w.dim_h1_l,
                        w.dim_h1,
                        w.cd.value.map_or("inf".into(), |c| c.to_string()),
                        w.model_dim_h1
                    );
                }
                s
            };
            Ok(Outcome {
                stdout: text,
                code: if finding { EXIT_OK } else { EXIT_INAPPLICABLE },
            })
        }
    }
}

fn check(args: &CheckArgs, cfg: &RunConfig, params: SeriesParams) -> Result<CheckOutput, Error> {
    if args.wreath {
        let text = read(&args.file)?;
        let spec: WreathSpec = serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))?;
        let report = wreath_construct(&spec, params, cfg.order_bound)?;
        return Ok(CheckOutput {
            verdicts: vec![report.verdict.clone()],
            wreath: Some(report),
        });
    }
    let pres = load(&args.file, args.group.as_deref())?;
    let mut verdicts = vec![relators_in_third_series(&pres, params)?];
    let other = match &args.against {
        Some(path) => load(path, args.against_group.as_deref())?,
        None => Presentation::free("Free", pres.rank()),
    };
    let side = args.assume_realizable.map(|s| match s {
        SideArg::First => Side::First,
        SideArg::Second => Side::Second,
    });
    verdicts.push(principle_check(&pres, &other, params, cfg.order_bound, side)?);
    let cd = match (args.cd, args.cd_infinite) {
        (_, true) => Some(CdDescriptor::infinite()),
        (Some(c), _) => Some(CdDescriptor::user(c)),
        _ => None,
    };
    if let Some(cd) = cd {
        let dim = h1_dimension(&pres, params.p)? as u64;
        verdicts.push(h1_vs_cd_check(dim, cd, params.p, args.torsion_free));
    }
    Ok(CheckOutput { verdicts, wreath: None })
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

/// Load a group from a presentation file; the first group unless named.
pub fn load(path: &PathBuf, group: Option<&str>) -> Result<Presentation, Error> {
    let groups = parse_file(&read(path)?)?;
    match group {
        None => Ok(groups.into_iter().next().expect("parser yields at least one group")),
        Some(name) => groups
            .into_iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::Malformed(format!("no group named {name}"))),
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome { stdout, code: EXIT_OK }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn tensor_text(values: &[Vec<Vec<u32>>]) -> String {
    let mut s = String::from("pairing:\n");
    for (i, row) in values.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(s, "  e{i}.e{j} = {v:?}");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn flags() {
        Cli::command().debug_assert();
        let cli = Cli::try_parse_from(["wgroup", "compare", "Qp:7", "--q", "3"]).unwrap();
        assert_eq!((cli.config.q, cli.config.order_bound, cli.config.h2_bound), (3, 512, 64));
        assert_eq!(cli.config.output, Output::Text);
        assert!(Cli::try_parse_from(["wgroup", "--h2-bound", "0", "milnor", "R"]).is_err());
        assert!(Cli::try_parse_from(["wgroup", "check", "f", "--cd", "2", "--cd-infinite"]).is_err());
    }

    #[test]
    fn compare_outcome() {
        let cli = Cli::try_parse_from(["wgroup", "compare", "Fq:5"]).unwrap();
        let out = run(&cli).unwrap();
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.starts_with("THEOREM-A-CONSISTENT"));
        let cli = Cli::try_parse_from(["wgroup", "--q", "6", "milnor", "R"]).unwrap();
        assert!(run(&cli).is_err());
    }
}
