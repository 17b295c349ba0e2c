//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 mismatch against the reference
//! table.

use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{genus_bound, k_bound_cases, CaseBound, KBoundSummary};
use crate::enumerator::{
    conditions_check, enumerate_cell, feasible_models, max_chi_table, CellResult, ChiTable,
    Condition, SearchCaps, SearchMode,
};
use crate::error::Error;
use crate::invariants::{
    canres_invariants, plane_to_ruled, rito_gh, rito_identity_check, thm2_b_residual,
    BranchConfig, SingularitySpectrum, SurfaceInvariants,
};
use crate::reference::{Comparison, ReferenceTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "hyperpencil", version)]
#[command(about = "Invariants, genus bounds and branch-curve enumeration for hyperelliptic surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Genus bound for given chi and K^2 (requires K^2 < 4 chi - 6)
    Bound {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long, allow_hyphen_values = true)]
        k2: i64,
        /// Also list the fibre-degree bound of every case
        #[arg(long)]
        cases: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Invariant report for one branch datum
    Check {
        #[arg(long)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, default_value_t = 0)]
        t: i64,
        #[arg(long, conflicts_with = "rlist")]
        n4: Option<u32>,
        #[arg(long, conflicts_with = "rlist")]
        n6: Option<u32>,
        #[arg(long, conflicts_with = "rlist")]
        n8: Option<u32>,
        /// Comma-separated canonical-resolution multiplicities, e.g. 2,4
        #[arg(long, value_delimiter = ',')]
        rlist: Option<Vec<i64>>,
        /// Hirzebruch index
        #[arg(long)]
        e: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Enumerate candidates for one (g, K^2 - 3 chi) cell
    Enumerate {
        #[arg(long)]
        g: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long, value_enum, default_value_t = ModeArg::Max)]
        mode: ModeArg,
        #[arg(long)]
        t_max: Option<i64>,
        #[arg(long)]
        n4_max: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Maximal chi over a block of cells
    Table {
        /// Genus range, e.g. 5..10
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        g_range: RangeInclusive<i64>,
        /// Range of K^2 - 3 chi, e.g. -16..-7
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        delta_range: RangeInclusive<i64>,
        /// Compare against the reference table; exit 2 on any difference
        #[arg(long)]
        compare_reference: bool,
        /// Reference CSV to use instead of the built-in one
        #[arg(long)]
        reference: Option<PathBuf>,
        #[arg(long)]
        t_max: Option<i64>,
        #[arg(long)]
        n4_max: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Move a plane branch curve to F_1 by blowing up a point
    Convert {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        mult: i64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Max,
    All,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Max => SearchMode::Max,
            ModeArg::All => SearchMode::All,
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let hi: i64 = hi
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| format!("bad range end in {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn caps_from(t_max: Option<i64>, n4_max: Option<i64>, k_max: Option<i64>) -> SearchCaps {
    let d = SearchCaps::default();
    SearchCaps {
        t_max: t_max.unwrap_or(d.t_max),
        n4_max: n4_max.unwrap_or(d.n4_max),
        k_max: k_max.unwrap_or(d.k_max),
    }
}

/// Outcome of one invocation: exit code plus what goes to stdout and stderr.
#[derive(Debug, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Self { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

impl From<Error> for Output {
    fn from(e: Error) -> Self {
        Output::input_error(e)
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Output::ok(rendered),
                _ => Output { code: EXIT_INPUT, stdout: String::new(), stderr: rendered },
            };
        }
    };
    let result = match cli.command {
        Command::Bound { chi, k2, cases, format } => cmd_bound(chi, k2, cases, format),
        Command::Check { k, l, t, n4, n6, n8, rlist, e, format } => {
            cmd_check(k, l, t, (n4, n6, n8), rlist, e, format)
        }
        Command::Enumerate { g, delta, mode, t_max, n4_max, k_max, format } => {
            cmd_enumerate(g, delta, mode.into(), caps_from(t_max, n4_max, k_max), format)
        }
        Command::Table {
            g_range,
            delta_range,
            compare_reference,
            reference,
            t_max,
            n4_max,
            k_max,
            format,
        } => cmd_table(
            g_range,
            delta_range,
            compare_reference.then_some(reference),
            caps_from(t_max, n4_max, k_max),
            format,
        ),
        Command::Convert { degree, mult, format } => cmd_convert(degree, mult, format),
    };
    result.unwrap_or_else(Output::from)
}

/// Run with the process arguments, print, and return the exit code.
pub fn main_with_args() -> i32 {
    let out = run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn render_case(c: &CaseBound) -> String {
    let exact = c.bound.to_string();
    if c.bound.q.is_none() && c.bound.p.is_integer() {
        exact
    } else {
        format!("{exact} ~{:.2}", c.bound.approx())
    }
}

#[derive(Serialize)]
struct BoundReport {
    chi: i64,
    k2: i64,
    genus_bound: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    cases: Option<Vec<CaseBound>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_even_k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus_cap: Option<i64>,
}

fn cmd_bound(chi: i64, k2: i64, cases: bool, format: OutputFormat) -> Result<Output, Error> {
    let g = genus_bound(chi, k2)?;
    let summary: Option<KBoundSummary> = if cases { Some(k_bound_cases(chi, k2)?) } else { None };
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            writeln!(out, "g <= {g}").unwrap();
            if let Some(s) = &summary {
                for c in &s.cases {
                    writeln!(out, "  {:<3} k <= {}  (t >= {})", c.label.as_str(), render_case(c), c.assumed_t)
                        .unwrap();
                }
                writeln!(
                    out,
                    "max case: {}; max even k = {}; genus cap = {}",
                    s.max_label, s.max_even_k, s.genus_cap
                )
                .unwrap();
            }
        }
        OutputFormat::Json => {
            out = to_json(&BoundReport {
                chi,
                k2,
                genus_bound: g,
                max_label: summary.as_ref().map(|s| s.max_label.to_string()),
                max_even_k: summary.as_ref().map(|s| s.max_even_k),
                genus_cap: summary.as_ref().map(|s| s.genus_cap),
                cases: summary.map(|s| s.cases),
            });
        }
        OutputFormat::Csv => match &summary {
            None => {
                writeln!(out, "chi,k2,genus_bound").unwrap();
                writeln!(out, "{chi},{k2},{g}").unwrap();
            }
            Some(s) => {
                writeln!(out, "label,bound_p,bound_q_or_null,assumed_t").unwrap();
                for c in &s.cases {
                    let q = c.bound.q.map(|q| q.to_string()).unwrap_or_default();
                    writeln!(out, "{},{},{},{}", c.label, c.bound.p, q, c.assumed_t).unwrap();
                }
            }
        },
    }
    Ok(Output::ok(out))
}

#[derive(Serialize)]
struct RitoSection {
    #[serde(rename = "G")]
    g: i64,
    #[serde(rename = "H")]
    h: i64,
    identity_ok: bool,
}

#[derive(Serialize)]
struct Thm2Section {
    residual: Option<i64>,
    conditions_violated: Option<Vec<Condition>>,
}

#[derive(Serialize)]
struct CheckReport {
    config: BranchConfig,
    invariants: SurfaceInvariants,
    rito: RitoSection,
    thm2: Thm2Section,
    feasible_e: Vec<i64>,
    warnings: Vec<String>,
}

fn check_report(config: BranchConfig) -> Result<CheckReport, Error> {
    let inv = canres_invariants(&config)?;
    let (g, h) = rito_gh(config.k(), inv.chi, inv.k2_min, config.t());
    let sp = config.spectrum();
    let residual = if sp.within_deep_regime() {
        Some(thm2_b_residual(&config, &inv)?)
    } else {
        None
    };
    let conditions_violated = (sp.within_deep_regime() && config.k() >= 12).then(|| {
        conditions_check(
            config.k(),
            config.l(),
            config.t(),
            i64::from(sp.n4()),
            i64::from(sp.n6()),
            i64::from(sp.n8()),
        )
    });
    let mut warnings = Vec::new();
    if inv.chi < 1 {
        warnings.push(format!("chi = {} < 1", inv.chi));
    }
    if inv.k2_min < 1 {
        warnings.push(format!("K^2 = {} < 1", inv.k2_min));
    }
    if !sp.within_deep_regime() {
        warnings.push(format!("r_max = {} > 8: thm2 checks not applicable", sp.r_max()));
    } else if config.k() < 12 {
        warnings.push(format!("k = {} < 12: conditions not applicable", config.k()));
    }
    Ok(CheckReport {
        rito: RitoSection { g, h, identity_ok: rito_identity_check(&config, &inv) },
        thm2: Thm2Section { residual, conditions_violated },
        feasible_e: feasible_models(config.k(), config.l()),
        invariants: inv,
        config,
        warnings,
    })
}

fn cmd_check(
    k: i64,
    l: i64,
    t: i64,
    counts: (Option<u32>, Option<u32>, Option<u32>),
    rlist: Option<Vec<i64>>,
    e: Option<i64>,
    format: OutputFormat,
) -> Result<Output, Error> {
    let spectrum = match rlist {
        Some(r) => SingularitySpectrum::new(r)?,
        None => SingularitySpectrum::from_counts(
            counts.0.unwrap_or(0),
            counts.1.unwrap_or(0),
            counts.2.unwrap_or(0),
        ),
    };
    let config = BranchConfig::new(k, l, e, spectrum, t)?;
    let report = check_report(config)?;
    let inv = &report.invariants;
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let c = &report.config;
            let e = c.e().map_or_else(|| "-".to_string(), |e| e.to_string());
            writeln!(
                out,
                "k={} l={} e={} t={} r_list=[{}]",
                c.k(),
                c.l(),
                e,
                c.t(),
                join(c.spectrum().r_list(), ",")
            )
            .unwrap();
            writeln!(out, "chi={}", inv.chi).unwrap();
            writeln!(out, "k2={}", inv.k2_min).unwrap();
            writeln!(out, "k2_canres={}", inv.k2_canres).unwrap();
            writeln!(out, "delta={}", inv.delta).unwrap();
            writeln!(out, "g={}", inv.genus).unwrap();
            writeln!(out, "G={} H={}", report.rito.g, report.rito.h).unwrap();
            let status = if report.rito.identity_ok { "PASS" } else { "FAIL" };
            writeln!(out, "rito identities: {status}").unwrap();
            match report.thm2.residual {
                Some(r) => writeln!(out, "thm2 b) residual: {r}").unwrap(),
                None => writeln!(out, "thm2 b) residual: n/a").unwrap(),
            }
            match &report.thm2.conditions_violated {
                Some(v) if v.is_empty() => writeln!(out, "conditions OK").unwrap(),
                Some(v) => writeln!(out, "conditions violated: {}", join(v, ",")).unwrap(),
                None => writeln!(out, "conditions: n/a").unwrap(),
            }
            writeln!(out, "feasible_e=[{}]", join(&report.feasible_e, ",")).unwrap();
            for w in &report.warnings {
                writeln!(out, "warning: {w}").unwrap();
            }
        }
        OutputFormat::Json => out = to_json(&report),
        OutputFormat::Csv => {
            writeln!(
                out,
                "k,l,e,t,r_list,chi,k2_canres,k2_min,genus,delta,G,H,identity_ok,residual,conditions_violated,feasible_e"
            )
            .unwrap();
            let c = &report.config;
            let opt = |v: Option<i64>| v.map(|v| v.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                c.k(),
                c.l(),
                opt(c.e()),
                c.t(),
                join(c.spectrum().r_list(), ";"),
                inv.chi,
                inv.k2_canres,
                inv.k2_min,
                inv.genus,
                inv.delta,
                report.rito.g,
                report.rito.h,
                report.rito.identity_ok,
                opt(report.thm2.residual),
                report
                    .thm2
                    .conditions_violated
                    .as_ref()
                    .map(|v| join(v, ";"))
                    .unwrap_or_default(),
                join(&report.feasible_e, ";"),
            )
            .unwrap();
        }
    }
    Ok(Output::ok(out))
}

#[derive(Serialize)]
struct QueryJson {
    g: i64,
    delta: i64,
    mode: SearchMode,
}

#[derive(Serialize)]
struct WitnessJson {
    k: i64,
    l: i64,
    t: i64,
    n4: i64,
    n6: i64,
    n8: i64,
    chi: i64,
    k2_min: i64,
    feasible_e: Vec<i64>,
}

#[derive(Serialize)]
struct EnumerateJson {
    query: QueryJson,
    max_chi: Option<i64>,
    witnesses: Vec<WitnessJson>,
}

fn render_enumeration(result: &CellResult, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Text => match (result.max_chi, result.query.mode) {
            (None, _) => writeln!(out, "EMPTY").unwrap(),
            (Some(chi), SearchMode::Max) => {
                writeln!(out, "max chi = {chi}; {}", join(&result.witnesses, "; ")).unwrap()
            }
            (Some(chi), SearchMode::All) => {
                writeln!(out, "max chi = {chi}; {} candidates", result.witnesses.len()).unwrap();
                for c in &result.witnesses {
                    writeln!(
                        out,
                        "{} chi={} k2={} e=[{}]",
                        c,
                        c.chi,
                        c.k2_min,
                        join(&c.feasible_e, ",")
                    )
                    .unwrap();
                }
            }
        },
        OutputFormat::Json => {
            out = to_json(&EnumerateJson {
                query: QueryJson {
                    g: result.query.genus,
                    delta: result.query.delta,
                    mode: result.query.mode,
                },
                max_chi: result.max_chi,
                witnesses: result
                    .witnesses
                    .iter()
                    .map(|c| WitnessJson {
                        k: c.k,
                        l: c.l,
                        t: c.t,
                        n4: c.n4,
                        n6: c.n6,
                        n8: c.n8,
                        chi: c.chi,
                        k2_min: c.k2_min,
                        feasible_e: c.feasible_e.clone(),
                    })
                    .collect(),
            })
        }
        OutputFormat::Csv => {
            writeln!(out, "k,l,t,n4,n6,n8,chi,k2_min,feasible_e").unwrap();
            for c in &result.witnesses {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    c.k,
                    c.l,
                    c.t,
                    c.n4,
                    c.n6,
                    c.n8,
                    c.chi,
                    c.k2_min,
                    join(&c.feasible_e, ";")
                )
                .unwrap();
            }
        }
    }
    out
}

fn cmd_enumerate(
    g: i64,
    delta: i64,
    mode: SearchMode,
    caps: SearchCaps,
    format: OutputFormat,
) -> Result<Output, Error> {
    let query = crate::enumerator::CellQuery::new(g, delta).mode(mode).caps(caps);
    let result = enumerate_cell(&query)?;
    Ok(Output::ok(render_enumeration(&result, format)))
}

fn render_table_text(table: &ChiTable) -> String {
    let mut out = String::new();
    write!(out, "{:>4} |", "g").unwrap();
    for d in &table.deltas {
        write!(out, "{d:>5}").unwrap();
    }
    out.push('\n');
    writeln!(out, "{}", "-".repeat(6 + 5 * table.deltas.len())).unwrap();
    for (g, row) in table.genera.iter().zip(&table.cells) {
        write!(out, "{g:>4} |").unwrap();
        for cell in row {
            match cell {
                Some(v) => write!(out, "{v:>5}").unwrap(),
                None => write!(out, "{:>5}", ".").unwrap(),
            }
        }
        out.push('\n');
    }
    out
}

fn render_table_csv(table: &ChiTable) -> String {
    let mut out = String::new();
    writeln!(out, "g,{}", join(&table.deltas, ",")).unwrap();
    for (g, row) in table.genera.iter().zip(&table.cells) {
        let cells: Vec<String> =
            row.iter().map(|c| c.map(|v| v.to_string()).unwrap_or_default()).collect();
        writeln!(out, "{g},{}", cells.join(",")).unwrap();
    }
    out
}

#[derive(Serialize)]
struct DiffJson {
    g: i64,
    delta: i64,
    computed: Option<i64>,
    reference: Option<i64>,
}

#[derive(Serialize)]
struct ComparisonJson {
    cells_compared: usize,
    differences: Vec<DiffJson>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    #[serde(flatten)]
    table: &'a ChiTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    comparison: Option<ComparisonJson>,
}

fn comparison_summary(cmp: &Comparison) -> String {
    let mut s = format!("{} cells, {} differences\n", cmp.cells_compared, cmp.diffs.len());
    for d in &cmp.diffs {
        writeln!(s, "{d}").unwrap();
    }
    s
}

fn cmd_table(
    genera: RangeInclusive<i64>,
    deltas: RangeInclusive<i64>,
    reference: Option<Option<PathBuf>>,
    caps: SearchCaps,
    format: OutputFormat,
) -> Result<Output, Error> {
    let table = max_chi_table(genera, deltas, caps)?;
    let comparison = match reference {
        None => None,
        Some(None) => Some(ReferenceTable::embedded().compare(&table)),
        Some(Some(path)) => Some(ReferenceTable::from_path(path)?.compare(&table)),
    };
    let mut stderr = String::new();
    let stdout = match format {
        OutputFormat::Text => {
            let mut s = render_table_text(&table);
            if let Some(c) = &comparison {
                s.push_str(&comparison_summary(c));
            }
            s
        }
        OutputFormat::Csv => {
            if let Some(c) = &comparison {
                stderr.push_str(&comparison_summary(c));
            }
            render_table_csv(&table)
        }
        OutputFormat::Json => to_json(&TableJson {
                table: &table,
                comparison: comparison.as_ref().map(|c| ComparisonJson {
                    cells_compared: c.cells_compared,
                    differences: c
                        .diffs
                        .iter()
                        .map(|d| DiffJson {
                            g: d.genus,
                            delta: d.delta,
                            computed: d.computed,
                            reference: d.reference,
                        })
                        .collect(),
                }),
            }),
    };
    let code = match &comparison {
        Some(c) if !c.diffs.is_empty() => EXIT_MISMATCH,
        _ => EXIT_OK,
    };
    Ok(Output { code, stdout, stderr })
}

#[derive(Serialize)]
struct ConvertJson {
    k: i64,
    l: i64,
    e: i64,
    g: i64,
}

fn cmd_convert(degree: i64, mult: i64, format: OutputFormat) -> Result<Output, Error> {
    let m = plane_to_ruled(degree, mult)?;
    let out = match format {
        OutputFormat::Text => format!("k={}, l={}, e={}, g={}\n", m.k, m.l, m.e, m.genus()),
        OutputFormat::Json => to_json(&ConvertJson { k: m.k, l: m.l, e: m.e, g: m.genus() }),
        OutputFormat::Csv => format!("k,l,e,g\n{},{},{},{}\n", m.k, m.l, m.e, m.genus()),
    };
    Ok(Output::ok(out))
}
