//! The `widthk` command-line interface.
//!
//! Exit codes: 0 on success, 1 when an identity or method comparison fails,
//! 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::genfun::suites::{Runner, Suite};
use crate::genfun::table::{factor_shape, Shape};
use crate::genfun::verify::{Status, VerificationReport};
use crate::genfun::{
    brute_distribution, closed_des_k, closed_inv_132_312, closed_inv_k, g_polynomial, product_132_231,
    product_132_312, recursions, t_polynomial, Family, RecursionCache, StatSpec,
};
use crate::limits::Limits;
use crate::perm::{avoidance_class, AvoidanceSpec, Permutation};
use crate::poly::{LaurentPoly, MultiPoly};
use crate::stats::{stat_record, Statistic, WidthSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "widthk", version, about = "Width-k permutation statistics and their distributions")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Directory for the persistent recursion cache.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Closed,
    Recursion,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Width-k statistics of one permutation.
    Stat {
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        widths: Vec<usize>,
        /// Restrict output to one statistic.
        #[arg(long, value_parser = parse_stat)]
        stat: Option<Statistic>,
    },
    /// Distribution of a statistic over S_n or an avoidance class.
    Gf {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_stat, default_value = "des")]
        stat: Statistic,
        #[arg(long, alias = "width", value_delimiter = ',', required = true)]
        widths: Vec<usize>,
        /// Comma-separated patterns to avoid.
        #[arg(long, value_parser = parse_spec, default_value = "")]
        avoid: AvoidanceSpec,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// The multivariate descent polynomial T_n.
    Tpoly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_spec, default_value = "")]
        avoid: AvoidanceSpec,
    },
    /// The polynomials G_{n,k}(q) for k = 1..n-1.
    Gtable {
        #[arg(long, value_delimiter = ',', default_values_t = [6, 8, 9])]
        n: Vec<usize>,
    },
    /// Run verification suites.
    Verify {
        /// `all` or a comma-separated list of suite names.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Count (and optionally list) an avoidance class.
    Avoid {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_spec, default_value = "")]
        patterns: AvoidanceSpec,
        #[arg(long)]
        list: bool,
    },
}

fn parse_perm(s: &str) -> std::result::Result<Permutation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_stat(s: &str) -> std::result::Result<Statistic, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_spec(s: &str) -> std::result::Result<AvoidanceSpec, String> {
    AvoidanceSpec::parse(s).map_err(|e| e.to_string())
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs a parsed command, returning its output and exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let limits = Limits::from_env()?;
    let cache = match &cli.cache_dir {
        Some(dir) => RecursionCache::load(dir)?,
        None => RecursionCache::new(),
    };
    let result = match &cli.command {
        Command::Stat { perm, widths, stat } => cmd_stat(cli.format, perm, widths, *stat).map(|s| (s, EXIT_OK)),
        Command::Gf {
            n,
            stat,
            widths,
            avoid,
            method,
        } => {
            let spec = StatSpec::new(*stat, widths.iter().copied(), avoid.clone());
            cmd_gf(cli.format, *n, &spec, *method, &limits, &cache)
        }
        Command::Tpoly { n, avoid } => cmd_tpoly(cli.format, *n, avoid, &limits).map(|s| (s, EXIT_OK)),
        Command::Gtable { n } => cmd_gtable(cli.format, n, &limits).map(|s| (s, EXIT_OK)),
        Command::Verify { suite, nmax } => cmd_verify(cli.format, suite, *nmax, &limits, &cache),
        Command::Avoid { n, patterns, list } => {
            cmd_avoid(cli.format, *n, patterns, *list, &limits).map(|s| (s, EXIT_OK))
        }
    }?;
    if let Some(dir) = &cli.cache_dir {
        cache.save(dir)?;
    }
    Ok(result)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable value");
    s.push('\n');
    s
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn poly_csv(out: &mut String, prefix: &str, p: &LaurentPoly) {
    for (e, c) in p.terms() {
        let _ = writeln!(out, "{prefix}{e},{c}");
    }
}

pub fn cmd_stat(format: Format, perm: &Permutation, widths: &[usize], only: Option<Statistic>) -> Result<String> {
    let ws = WidthSet::new(perm.len(), widths.iter().copied())?;
    let rec = stat_record(perm, &ws, only)?;
    let mut out = String::new();
    match format {
        Format::Json => out = to_json(&rec),
        Format::Csv => {
            out.push_str("statistic,count\n");
            for stat in Statistic::ALL {
                if let Some(c) = rec.counts.get(stat.name()) {
                    let _ = writeln!(out, "{stat},{c}");
                }
            }
        }
        Format::Plain => {
            let _ = writeln!(out, "perm {}  K = {ws}", rec.perm);
            if let (Some(per_width), Some(multiset)) = (&rec.des, &rec.des_multiset) {
                let _ = writeln!(out, "des {}  Des = {}", rec.counts["des"], list(multiset));
                for (k, set) in per_width {
                    let _ = writeln!(out, "  Des_{k} = {}", list(set));
                }
            }
            if let Some(pairs) = &rec.inv {
                let pairs = pairs.iter().map(|[i, j]| format!("({i},{j})"));
                let _ = writeln!(out, "inv {}  Inv = {}", rec.counts["inv"], list(pairs));
            }
            if let Some(positions) = &rec.exc_positions {
                let _ = writeln!(out, "exc {}  blocks = [{}]", rec.counts["exc"], positions.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","));
            }
            if let Some(maj) = rec.counts.get("maj") {
                let _ = writeln!(out, "maj {maj}");
            }
        }
    }
    Ok(out)
}

fn family_of(avoid: &AvoidanceSpec) -> Option<Family> {
    Family::ALL.into_iter().find(|f| avoid.is(&f.patterns().split(',').collect::<Vec<_>>()))
}

/// The closed form for `spec` at `n`, if one is implemented.
pub fn closed_route(n: usize, spec: &StatSpec) -> Result<Option<LaurentPoly>> {
    let ws = spec.width_set(n)?;
    let single = (ws.len() == 1).then(|| ws.as_slice()[0]);
    let both_132 = spec.avoid.is(&["132", "231"]) || spec.avoid.is(&["132", "312"]);
    Ok(match (spec.statistic, single) {
        (Statistic::Des | Statistic::Exc, Some(k)) if spec.avoid.is_empty() => Some(closed_des_k(n, k)?),
        (Statistic::Inv | Statistic::Maj, Some(k)) if spec.avoid.is_empty() => Some(closed_inv_k(n, k)?),
        (Statistic::Des, _) if spec.avoid.is(&["132", "231"]) => Some(product_132_231(&ws)),
        (Statistic::Des, _) if spec.avoid.is(&["132", "312"]) => Some(product_132_312(&ws)),
        (Statistic::Inv, Some(k)) if both_132 => Some(closed_inv_132_312(n, k)?),
        _ => None,
    })
}

/// The recursion for `spec` at `n`, if one is implemented.
pub fn recursion_route(n: usize, spec: &StatSpec, cache: &RecursionCache) -> Result<Option<LaurentPoly>> {
    let ws = spec.width_set(n)?;
    if spec.statistic != Statistic::Des || ws.len() != 1 {
        return Ok(None);
    }
    match family_of(&spec.avoid) {
        Some(family) => Ok(Some(recursions::evaluate(family, n, ws.as_slice()[0], cache)?)),
        None => Ok(None),
    }
}

pub fn cmd_gf(
    format: Format,
    n: usize,
    spec: &StatSpec,
    method: Method,
    limits: &Limits,
    cache: &RecursionCache,
) -> Result<(String, i32)> {
    spec.width_set(n)?;
    let mut results: Vec<(Method, LaurentPoly)> = Vec::new();
    if matches!(method, Method::Brute | Method::All) {
        results.push((Method::Brute, brute_distribution(n, spec, limits)?));
    }
    if matches!(method, Method::Closed | Method::All) {
        match closed_route(n, spec)? {
            Some(p) => results.push((Method::Closed, p)),
            None if method == Method::Closed => {
                return Err(Error::NotApplicable(format!("no closed form for {spec}")));
            }
            None => {}
        }
    }
    if matches!(method, Method::Recursion | Method::All) {
        match recursion_route(n, spec, cache)? {
            Some(p) => results.push((Method::Recursion, p)),
            None if method == Method::Recursion => {
                return Err(Error::NotApplicable(format!("no recursion for {spec}")));
            }
            None => {}
        }
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let mut out = String::new();
    match format {
        Format::Json => {
            let items: Vec<_> = results.iter().map(|(m, p)| json!({ "method": m, "poly": p })).collect();
            out = to_json(&json!({
                "n": n,
                "stat": spec.statistic,
                "widths": spec.width_set(n)?.as_slice(),
                "avoid": spec.avoid,
                "results": items,
                "agree": agree,
            }));
        }
        Format::Csv => {
            out.push_str("method,exponent,coefficient\n");
            for (m, p) in &results {
                poly_csv(&mut out, &format!("{}," , method_name(*m)), p);
            }
        }
        Format::Plain => {
            for (m, p) in &results {
                let _ = writeln!(out, "{}: {p}", method_name(*m));
            }
            if method == Method::All {
                let _ = writeln!(out, "agreement: {}", if agree { "yes" } else { "NO" });
            }
        }
    }
    Ok((out, if agree { EXIT_OK } else { EXIT_MISMATCH }))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Closed => "closed",
        Method::Recursion => "recursion",
        Method::All => "all",
    }
}

pub fn cmd_tpoly(format: Format, n: usize, avoid: &AvoidanceSpec, limits: &Limits) -> Result<String> {
    let t: MultiPoly = t_polynomial(n, avoid, limits)?;
    let mut out = String::new();
    match format {
        Format::Json => out = to_json(&json!({ "n": n, "avoid": avoid, "poly": t })),
        Format::Csv => {
            let header: Vec<String> = (1..=t.vars()).map(|i| format!("t{i}")).collect();
            let _ = writeln!(out, "{}coefficient", header.iter().map(|h| format!("{h},")).collect::<String>());
            for (exps, c) in t.terms() {
                let row: String = exps.iter().map(|e| format!("{e},")).collect();
                let _ = writeln!(out, "{row}{c}");
            }
        }
        Format::Plain => {
            let _ = writeln!(out, "{t}");
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct GRow {
    n: usize,
    k: usize,
    poly: LaurentPoly,
    shape: Option<Shape>,
}

pub fn cmd_gtable(format: Format, ns: &[usize], limits: &Limits) -> Result<String> {
    for &n in ns {
        limits.check_univariate(n)?;
        if n < 2 {
            return Err(Error::InvalidInput(format!("G_{{n,k}} needs n >= 2, got {n}")));
        }
    }
    let mut rows = Vec::new();
    for &n in ns {
        for k in 1..n {
            let poly = g_polynomial(n, k, limits)?;
            let shape = factor_shape(&poly, n);
            rows.push(GRow { n, k, poly, shape });
        }
    }
    let mut out = String::new();
    match format {
        Format::Json => {
            for row in &rows {
                out.push_str(&to_json(row));
            }
        }
        Format::Csv => {
            out.push_str("n,k,exponent,coefficient\n");
            for row in &rows {
                poly_csv(&mut out, &format!("{},{},", row.n, row.k), &row.poly);
            }
        }
        Format::Plain => {
            for row in &rows {
                let tag = if row.n.gcd(&row.k) == 1 { "" } else { "  (gcd > 1)" };
                match &row.shape {
                    Some(shape) => {
                        let _ = writeln!(out, "G_{{{},{}}} = {shape} = {}{tag}", row.n, row.k, row.poly);
                    }
                    None => {
                        let _ = writeln!(out, "G_{{{},{}}} = {}{tag}", row.n, row.k, row.poly);
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct SuiteLine<'a> {
    suite: &'static str,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

pub fn cmd_verify(
    format: Format,
    suite: &str,
    nmax: Option<usize>,
    limits: &Limits,
    cache: &RecursionCache,
) -> Result<(String, i32)> {
    let suites = Suite::parse_list(suite)?;
    let runner = Runner::new(limits, cache);
    let mut reports = Vec::new();
    for s in suites {
        for r in runner.run(s, nmax)? {
            reports.push((s, r));
        }
    }
    let failed = reports.iter().any(|(_, r)| r.is_failure());
    let mut out = String::new();
    match format {
        Format::Json => {
            for (s, r) in &reports {
                out.push_str(&to_json(&SuiteLine {
                    suite: s.name(),
                    report: r,
                }));
            }
        }
        Format::Csv => {
            out.push_str("suite,status,checked,identity,range\n");
            for (s, r) in &reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    s,
                    r.status,
                    r.checked,
                    csv_field(&r.identity),
                    csv_field(&r.range)
                );
            }
        }
        Format::Plain => {
            for (s, r) in &reports {
                let _ = writeln!(out, "[{}] {s}: {}  ({}; {} cases)", r.status, r.identity, r.range, r.checked);
                if let Some(ce) = &r.counterexample {
                    let _ = writeln!(out, "    counterexample {}", serde_json::to_string(&ce.params).unwrap_or_default());
                    let _ = writeln!(out, "      left:  {}", ce.left);
                    let _ = writeln!(out, "      right: {}", ce.right);
                }
                for note in &r.notes {
                    let _ = writeln!(out, "    note: {note}");
                }
            }
            let count = |st: Status| reports.iter().filter(|(_, r)| r.status == st).count();
            let _ = writeln!(
                out,
                "{} verified, {} mismatched, {} informational, {} not applicable",
                count(Status::Verified),
                count(Status::Mismatch),
                count(Status::Informational),
                count(Status::NotApplicable)
            );
        }
    }
    Ok((out, if failed { EXIT_MISMATCH } else { EXIT_OK }))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn cmd_avoid(format: Format, n: usize, patterns: &AvoidanceSpec, list_all: bool, limits: &Limits) -> Result<String> {
    let perms: Vec<Permutation> = avoidance_class(n, patterns, limits)?.collect();
    let mut out = String::new();
    match format {
        Format::Json => {
            let mut value = json!({ "n": n, "patterns": patterns, "count": perms.len() });
            if list_all {
                value["perms"] = json!(perms);
            }
            out = to_json(&value);
        }
        Format::Csv => {
            if list_all {
                out.push_str("perm\n");
                for p in &perms {
                    let _ = writeln!(out, "{}", csv_field(&p.to_string()));
                }
            } else {
                let _ = writeln!(out, "count\n{}", perms.len());
            }
        }
        Format::Plain => {
            let _ = writeln!(out, "{}", perms.len());
            if list_all {
                for p in &perms {
                    let _ = writeln!(out, "{p}");
                }
            }
        }
    }
    Ok(out)
}
