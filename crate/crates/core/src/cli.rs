//! Command-line front end. `run` parses arguments, executes one subcommand,
//! and returns the process exit code: 0 when every requested check passes,
//! 1 when some claim does not match, 2 on usage or configuration errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::code::{EnumOptions, LinearCode, WeightDistribution, DEFAULT_BUDGET_LOG2};
use crate::error::{Error, Result};
use crate::field::ExtField;
use crate::geometry::{elliptic_quadric, is_cap, tits_ovoid, PointSet};
use crate::predict::{ParamPoint, Table};
use crate::report::{self, ASelector, LemmaRecord, TableClaim};
use crate::subfield::SubfieldContext;

pub const DEFAULT_SEED: u64 = 20_190_601;

#[derive(Debug, Parser)]
#[command(name = "ovoid", version, about = "Ovoid codes, their subfield codes, and exhaustive checks of their weight distributions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Enumeration budget as log2 of the codeword count.
    #[arg(long, global = true, env = "OVOID_BUDGET_LOG2", default_value_t = DEFAULT_BUDGET_LOG2)]
    budget: u32,
    /// Worker threads for enumeration (defaults to available cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Elliptic,
    Tits,
}

#[derive(Debug, Args)]
struct CodeArgs {
    #[arg(long, value_enum, default_value_t = Family::Elliptic)]
    family: Family,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long)]
    m: Option<u32>,
    /// Tits parameter: q = 2^(2e+1).
    #[arg(long)]
    e: Option<u32>,
    #[arg(long, value_enum)]
    a_class: Option<ASelector>,
    /// Coefficient vector of a, low degree first, e.g. `[0,1]`.
    #[arg(long)]
    a: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Describe GF(p^m).
    Field {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Build an ovoid point set.
    Construct(CodeArgs),
    /// Enumerate the weight distribution of an ovoid code or its subfield code.
    Weights {
        #[command(flatten)]
        args: CodeArgs,
        /// Use the subfield code over GF(p).
        #[arg(long)]
        subfield: bool,
    },
    /// Expand an ovoid code over a subfield GF(p^s).
    Subfield {
        #[command(flatten)]
        args: CodeArgs,
        #[arg(long, default_value_t = 1)]
        s: u32,
    },
    /// Dual-code parameters by dependent-column search.
    Dual {
        #[command(flatten)]
        args: CodeArgs,
        #[arg(long)]
        subfield: bool,
        #[arg(long, default_value_t = 5)]
        t_max: usize,
    },
    /// Compare predicted and enumerated weight tables.
    VerifyTables {
        #[arg(long, value_parser = parse_table)]
        table: Option<Table>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long)]
        a: Option<String>,
    },
    /// Check the character-sum and parity lemmas.
    VerifyLemmas {
        #[arg(long)]
        lemma: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Run the full sweep and write one JSON document.
    Report,
}

fn parse_table(s: &str) -> Result<Table> {
    s.parse()
}

/// Parses `[1,0,2]`, `1,0,2` or `1 0 2`.
fn parse_coeffs(s: &str) -> Result<Vec<u32>> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::InvalidParameters(format!("bad coefficient {t:?} in {s:?}")))
        })
        .collect()
}

/// Outcome of a subcommand: rendered output and whether every check passed.
struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, pass: true }
    }
}

/// Parses `argv` (program name first), runs it, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.body),
                None => std::io::stdout().write_all(outcome.body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return 2;
            }
            if outcome.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn options(cli: &Cli) -> EnumOptions {
    let mut opts = EnumOptions::default().with_budget(cli.budget);
    if let Some(w) = cli.workers {
        opts = opts.with_workers(w);
    }
    opts
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let opts = options(cli);
    match &cli.command {
        Command::Field { p, m } => field_cmd(cli.format, *p, *m),
        Command::Construct(args) => construct_cmd(cli.format, args),
        Command::Weights { args, subfield } => weights_cmd(cli.format, args, *subfield, &opts),
        Command::Subfield { args, s } => subfield_cmd(cli.format, args, *s),
        Command::Dual { args, subfield, t_max } => dual_cmd(cli.format, args, *subfield, *t_max),
        Command::VerifyTables { table, p, m, e, a } => {
            verify_tables_cmd(cli.format, *table, *p, *m, *e, a.as_deref(), &opts)
        }
        Command::VerifyLemmas { lemma, p, m } => verify_lemmas_cmd(cli.format, *lemma, *p, *m, cli.seed),
        Command::Report => {
            let r = report::full_report(&opts, cli.seed);
            let body = match cli.format {
                Format::Json => to_json(&r),
                Format::Csv | Format::Text => report_summary(&r, cli.format),
            };
            Ok(Outcome { body, pass: r.pass })
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records serialize");
    s.push('\n');
    s
}

fn field_cmd(format: Format, p: u32, m: u32) -> Result<Outcome> {
    let f = ExtField::new(p, m)?;
    let desc = f.descriptor();
    let prim = f.coeffs(f.primitive_value());
    let body = match format {
        Format::Json => to_json(&json!({
            "p": desc.p,
            "n": desc.n,
            "modulus": desc.modulus,
            "size": f.size(),
            "primitive": prim,
        })),
        Format::Csv => format!("p,n,size,modulus,primitive\n{p},{m},{},{:?},{:?}\n", f.size(), desc.modulus, prim)
            .replace(", ", " "),
        Format::Text => format!(
            "GF({p}^{m}), {} elements\nmodulus (low to high): {:?}\nprimitive element: {:?}\n",
            f.size(),
            desc.modulus,
            prim
        ),
    };
    Ok(Outcome::ok(body))
}

/// The point set selected by the code arguments, with a's coefficients.
fn point_set(args: &CodeArgs) -> Result<(PointSet, Option<Vec<u32>>)> {
    match args.family {
        Family::Tits => {
            let e = match (args.e, args.m) {
                (Some(e), _) => e,
                (None, Some(m)) if m % 2 == 1 => (m - 1) / 2,
                _ => return Err(Error::InvalidParameters("Tits family needs --e".into())),
            };
            if args.p != 2 {
                return Err(Error::InvalidParameters("Tits family needs p = 2".into()));
            }
            let field = ExtField::new(2, 2 * e + 1)?;
            Ok((tits_ovoid(&field)?, None))
        }
        Family::Elliptic => {
            let m = args.m.ok_or_else(|| Error::InvalidParameters("elliptic family needs --m".into()))?;
            let field = ExtField::new(args.p, m)?;
            let a = match (&args.a, args.a_class) {
                (Some(s), None) => field.from_coeffs(&parse_coeffs(s)?)?.value(),
                (None, sel) => report::select_a(&field, sel.unwrap_or(ASelector::Irreducible))?,
                (Some(_), Some(_)) => {
                    return Err(Error::InvalidParameters("give either --a or --a-class".into()))
                }
            };
            Ok((elliptic_quadric(&field, a)?, Some(field.coeffs(a))))
        }
    }
}

fn construct_cmd(format: Format, args: &CodeArgs) -> Result<Outcome> {
    let (set, a) = point_set(args)?;
    let cap = is_cap(&set);
    let body = match format {
        Format::Text => set.export_lines(),
        Format::Json => {
            let points: Vec<Value> = set
                .export_lines()
                .lines()
                .map(|l| serde_json::from_str(l).expect("export lines are JSON"))
                .collect();
            to_json(&json!({
                "field": set.field().descriptor(),
                "a": a,
                "size": set.len(),
                "is_cap": cap.is_cap(),
                "witness": cap.witness,
                "points": points,
            }))
        }
        Format::Csv => {
            let mut s = String::from("x,y,z,w\n");
            for pt in set.points() {
                let c: Vec<String> = pt.coords().iter().map(|&v| coeff_label(set.field(), v)).collect();
                let _ = writeln!(s, "{}", c.join(","));
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn coeff_label(f: &ExtField, v: u32) -> String {
    f.coeffs(v).iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn code_for(args: &CodeArgs, subfield: bool) -> Result<(LinearCode, Option<Vec<u32>>)> {
    let (set, a) = point_set(args)?;
    let code = LinearCode::from_point_set(&set);
    if subfield {
        Ok((report::prime_subfield_code(&code)?, a))
    } else {
        Ok((code, a))
    }
}

fn distribution_csv(header: &[(&str, String)], dist: &WeightDistribution) -> String {
    let mut s = String::new();
    for (k, v) in header {
        let _ = writeln!(s, "# {k}={v}");
    }
    s.push_str("w,count\n");
    for (w, c) in dist.iter() {
        let _ = writeln!(s, "{w},{c}");
    }
    s
}

fn weights_cmd(format: Format, args: &CodeArgs, subfield: bool, opts: &EnumOptions) -> Result<Outcome> {
    let (code, a) = code_for(args, subfield)?;
    let dist = code.weight_distribution(opts)?;
    let (n, k, d) = (code.length(), code.dimension(), dist.min_nonzero_weight());
    let body = match format {
        Format::Json => to_json(&json!({
            "field": code.field().descriptor(),
            "a": a,
            "n": n,
            "k": k,
            "d": d,
            "distribution": dist,
        })),
        Format::Csv => distribution_csv(
            &[
                ("q", code.field().size().to_string()),
                ("n", n.to_string()),
                ("k", k.to_string()),
                ("d", d.map_or("-".into(), |d| d.to_string())),
            ],
            &dist,
        ),
        Format::Text => {
            let mut s = format!(
                "[{n}, {k}, {}] code over GF({})\n",
                d.map_or("-".into(), |d| d.to_string()),
                code.field().size()
            );
            for (w, c) in dist.iter() {
                let _ = writeln!(s, "{w:>8} {c}");
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn subfield_cmd(format: Format, args: &CodeArgs, s: u32) -> Result<Outcome> {
    let (code, _) = code_for(args, false)?;
    let ctx = SubfieldContext::new(code.field(), s)?;
    let expanded = ctx.expand(&code)?;
    let bound = code.dimension() * ctx.degree();
    let body = match format {
        Format::Json => to_json(&json!({
            "big": code.field().descriptor(),
            "small": ctx.small().descriptor(),
            "n": expanded.length(),
            "rows": expanded.generator().rows(),
            "dimension": expanded.dimension(),
            "bound": bound,
            "generator": expanded.generator().to_coeff_rows(),
        })),
        Format::Csv => format!(
            "n,rows,dimension,bound\n{},{},{},{bound}\n",
            expanded.length(),
            expanded.generator().rows(),
            expanded.dimension()
        ),
        Format::Text => format!(
            "subfield code over GF({}): length {}, {} generator rows, dimension {} (at most {bound})\n",
            ctx.small().size(),
            expanded.length(),
            expanded.generator().rows(),
            expanded.dimension()
        ),
    };
    Ok(Outcome::ok(body))
}

fn dual_cmd(format: Format, args: &CodeArgs, subfield: bool, t_max: usize) -> Result<Outcome> {
    let (code, _) = code_for(args, subfield)?;
    let dd = code.dual_min_distance_upto(t_max)?;
    let (n, k) = (code.length(), code.length() - code.dimension());
    let body = match format {
        Format::Json => to_json(&json!({ "n": n, "k": k, "d": dd.to_string() })),
        Format::Csv => format!("n,k,d\n{n},{k},{dd}\n"),
        Format::Text => format!("dual code: [{n}, {k}, {dd}]\n"),
    };
    Ok(Outcome::ok(body))
}

fn verify_tables_cmd(
    format: Format,
    table: Option<Table>,
    p: Option<u32>,
    m: Option<u32>,
    e: Option<u32>,
    a: Option<&str>,
    opts: &EnumOptions,
) -> Result<Outcome> {
    let points: Vec<(Table, ParamPoint)> = match table {
        Some(t) if m.is_some() || e.is_some() => {
            let at = match (t, e, m) {
                (Table::T6, Some(e), _) => ParamPoint::tits(e),
                (Table::T1 | Table::T6, _, Some(m)) => ParamPoint::new(2, m),
                (_, _, Some(m)) => ParamPoint::new(
                    p.ok_or_else(|| Error::InvalidParameters("this table needs --p".into()))?,
                    m,
                ),
                _ => return Err(Error::InvalidParameters("this table needs --m".into())),
            };
            vec![(t, at)]
        }
        Some(t) => report::table_points().into_iter().filter(|&(x, _)| x == t).collect(),
        None => report::table_points(),
    };
    let mut claims: Vec<TableClaim> = Vec::with_capacity(points.len());
    for (t, at) in points {
        let a_value = match a {
            Some(s) => Some(ExtField::new(at.p, at.m)?.from_coeffs(&parse_coeffs(s)?)?.value()),
            None => None,
        };
        claims.push(report::check_table(t, at, a_value, opts));
    }
    let pass = claims.iter().all(|c| c.matches);
    let body = match format {
        Format::Json if claims.len() == 1 => to_json(&claims[0]),
        Format::Json => to_json(&claims),
        Format::Csv => {
            let mut s = String::new();
            for c in &claims {
                let _ = writeln!(s, "# table={}", c.table);
                let _ = writeln!(s, "# params={}", serde_json::to_string(&c.params).unwrap());
                let _ = writeln!(s, "# match={}", c.matches);
                s.push_str("w,predicted,enumerated\n");
                let empty = WeightDistribution::default();
                let pr = c.predicted.as_ref().unwrap_or(&empty);
                let en = c.enumerated.as_ref().unwrap_or(&empty);
                let mut ws: Vec<usize> = pr.iter().chain(en.iter()).map(|(w, _)| w).collect();
                ws.sort_unstable();
                ws.dedup();
                for w in ws {
                    let _ = writeln!(s, "{w},{},{}", pr.count(w), en.count(w));
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &claims {
                let _ = writeln!(
                    s,
                    "{} {} {}{}",
                    c.table,
                    serde_json::to_string(&c.params).unwrap(),
                    if c.matches { "match" } else { "MISMATCH" },
                    c.error.as_ref().map_or(String::new(), |e| format!(" ({e})"))
                );
            }
            s
        }
    };
    Ok(Outcome { body, pass })
}

fn verify_lemmas_cmd(format: Format, lemma: Option<u32>, p: Option<u32>, m: Option<u32>, seed: u64) -> Result<Outcome> {
    if let Some(l) = lemma {
        if !report::LEMMAS.contains(&l) {
            return Err(Error::InvalidParameters(format!(
                "lemma must be one of {:?}",
                report::LEMMAS
            )));
        }
    }
    let records: Vec<LemmaRecord> = match (lemma, p, m) {
        (Some(l), Some(p), Some(m)) => vec![report::check_lemma(l, p, m, seed)],
        (_, Some(_), None) | (_, None, Some(_)) => {
            return Err(Error::InvalidParameters("give both --p and --m, or neither".into()))
        }
        (None, Some(p), Some(m)) => report::LEMMAS.iter().map(|&l| report::check_lemma(l, p, m, seed)).collect(),
        (l, None, None) => report::lemma_sweep(seed)
            .into_iter()
            .filter(|r| l.is_none_or(|l| r.lemma == l))
            .collect(),
    };
    let pass = records.iter().all(|r| r.pass);
    let body = match format {
        Format::Json => {
            let mut s = String::new();
            for r in &records {
                s.push_str(&serde_json::to_string(r).unwrap());
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("lemma,p,m,pass\n");
            for r in &records {
                let _ = writeln!(s, "{},{},{},{}", r.lemma, r.p, r.m, r.pass);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &records {
                let _ = writeln!(s, "lemma {} at p={}, m={}: {}", r.lemma, r.p, r.m, if r.pass { "pass" } else { "FAIL" });
            }
            s
        }
    };
    Ok(Outcome { body, pass })
}

fn report_summary(r: &report::Report, format: Format) -> String {
    let rows: Vec<(&str, String, bool)> = r
        .ovoid_codes
        .iter()
        .chain(&r.tables)
        .map(|c| ("weights", format!("{} {}", c.table, serde_json::to_string(&c.params).unwrap()), c.matches))
        .chain(r.examples.iter().map(|c| ("parameters", serde_json::to_string(&c.params).unwrap(), c.matches)))
        .chain(r.dual_distances.iter().map(|c| ("dual_distance", format!("{:?}", c.a_class), c.matches)))
        .chain(r.geometry.iter().map(|c| ("geometry", format!("q={} a={:?}", c.q, c.a), c.matches)))
        .chain(r.lemmas.iter().map(|c| ("lemma", format!("{} p={} m={}", c.lemma, c.p, c.m), c.pass)))
        .chain(r.structure.iter().map(|c| ("structure", format!("{} {}", c.check, c.field), c.pass)))
        .chain(r.bounds.iter().map(|c| ("bound", format!("{} q={} n={} k={}", c.check, c.q, c.n, c.k), c.pass)))
        .collect();
    let mut s = String::new();
    if format == Format::Csv {
        s.push_str("section,item,pass\n");
        for (sec, item, pass) in &rows {
            let _ = writeln!(s, "{sec},\"{}\",{pass}", item.replace('"', "'"));
        }
    } else {
        for (sec, item, pass) in &rows {
            let _ = writeln!(s, "{:<5} {sec:<14} {item}", if *pass { "ok" } else { "FAIL" });
        }
        let _ = writeln!(s, "overall: {}", if r.pass { "pass" } else { "FAIL" });
    }
    s
}
