//! The `cil` command line: construct ideals, print invariants, run the
//! cross-validation suites, and reproduce the closed-form tables.
//!
//! Exit codes: 0 success, 1 property-check failure, 2 usage error,
//! 3 resource guard.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complex::{stanley_reisner_complex, ComplexJson};
use crate::graph::{Graph, GraphJson, GraphSpec};
use crate::homology::{hochster_betti, reisner_cm_check, BettiJson, BettiTable, Subject};
use crate::ideal::{clique_ideal, independence_ideal, IdealJson, MonomialIdeal};
use crate::linalg::FieldSpec;
use crate::resolution::{
    chordal_vertex_split, find_linear_quotients, path_betti_recursion, LinearQuotientCertificate,
    LinearQuotientOrder,
};
use crate::shelling::{
    cycle_shelling, find_shelling, path_shelling, shelling_to_linear_quotients, verify_shelling,
    ShellingCertificate, ShellingOrder,
};
use crate::suites::{run_reproduce, run_suite, SuiteBounds};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "cil",
    version,
    about = "Clique and independence ideals of graphs: Betti tables, shellings, duality"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the clique or independence ideal of a graph
    Ideal(IdealCmd),
    /// Betti table of the ideal (oracle, linear quotients, recursion)
    Betti(BettiCmd),
    /// Stanley-Reisner complex of the ideal
    Complex(ComplexCmd),
    /// Shelling order for the ideal's complex
    Shelling(ShellingCmd),
    /// Reisner Cohen-Macaulay check for the ideal's complex
    Cm(CmCmd),
    /// Alexander dual of the ideal
    Dual(DualCmd),
    /// Run a cross-validation suite
    Check(CheckCmd),
    /// Closed-form statements against oracle values
    Reproduce(ReproduceCmd),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Clique,
    Independence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    LinearQuotients,
    Recursion,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Path,
    Cycle,
    Chordal,
    Duality,
}

#[derive(Args, Debug, Clone)]
pub struct Selector {
    /// Graph spec: path:N, cycle:N, complete:N, complement:<spec>, file:g.json
    #[arg(long)]
    pub graph: String,
    /// Size parameter t (cliques / independent sets of this size)
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub t: u64,
    /// Which ideal of the graph
    #[arg(long, value_enum, default_value = "clique")]
    pub kind: Kind,
}

#[derive(Args, Debug)]
pub struct IdealCmd {
    #[command(flatten)]
    pub sel: Selector,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct BettiCmd {
    #[command(flatten)]
    pub sel: Selector,
    /// oracle | linear-quotients | recursion | all
    #[arg(long, value_enum, default_value = "oracle")]
    pub method: Method,
    /// Coefficient field for the oracle: 2, p:<prime>, or 0
    #[arg(long, default_value = "2")]
    pub field: String,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct ComplexCmd {
    #[command(flatten)]
    pub sel: Selector,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct ShellingCmd {
    #[command(flatten)]
    pub sel: Selector,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct CmCmd {
    #[command(flatten)]
    pub sel: Selector,
    /// Coefficient field: 2, p:<prime>, or 0
    #[arg(long, default_value = "2")]
    pub field: String,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct DualCmd {
    #[command(flatten)]
    pub sel: Selector,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct CheckCmd {
    /// path | cycle | chordal | duality
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, default_value_t = 3)]
    pub t_max: usize,
    /// Number of random chordal instances (chordal suite)
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Args, Debug)]
pub struct ReproduceCmd {
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, default_value_t = 3)]
    pub t_max: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub output: OutputFormat,
}

/// Rendered output plus exit code.
#[derive(Debug)]
pub struct CmdOutput {
    pub stdout: String,
    pub code: i32,
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: i32,
}

type CmdResult = std::result::Result<CmdOutput, Failure>;

fn guard_code(e: &Error) -> i32 {
    match e {
        Error::SizeGuard { .. }
        | Error::FacetCap(..)
        | Error::LinearQuotientBudget(..)
        | Error::TaylorCap(..) => 3,
        _ => 2,
    }
}

fn lib(e: Error) -> Failure {
    Failure {
        code: guard_code(&e),
        message: e.to_string(),
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 2,
    }
}

/// Entry point used by the `cil` binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn dispatch(command: &Command) -> CmdResult {
    match command {
        Command::Ideal(a) => cmd_ideal(a),
        Command::Betti(a) => cmd_betti(a),
        Command::Complex(a) => cmd_complex(a),
        Command::Shelling(a) => cmd_shelling(a),
        Command::Cm(a) => cmd_cm(a),
        Command::Dual(a) => cmd_dual(a),
        Command::Check(a) => cmd_check(a),
        Command::Reproduce(a) => cmd_reproduce(a),
    }
}

fn load_graph_file(path: &str) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadGraphSpec(format!("file:{path}: {e}")))?;
    let parsed: GraphJson = serde_json::from_str(&text)
        .map_err(|e| Error::BadGraphSpec(format!("file:{path}: {e}")))?;
    Graph::try_from(parsed)
}

fn resolve(sel: &Selector) -> std::result::Result<(GraphSpec, Graph, MonomialIdeal), Failure> {
    let spec: GraphSpec = sel.graph.parse().map_err(lib)?;
    let graph = spec.build_with(&mut load_graph_file).map_err(lib)?;
    let t = sel.t as usize;
    let ideal = match sel.kind {
        Kind::Clique => clique_ideal(&graph, t),
        Kind::Independence => independence_ideal(&graph, t),
    };
    Ok((spec, graph, ideal))
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

fn cmd_ideal(a: &IdealCmd) -> CmdResult {
    let (_, _, ideal) = resolve(&a.sel)?;
    let stdout = match a.output {
        OutputFormat::Text => format!("{ideal}\n"),
        OutputFormat::Json => json_line(&IdealJson::from(&ideal)),
    };
    Ok(CmdOutput { stdout, code: 0 })
}

/// Constructive shelling of `Δ_{K_t(G^c)}` for literal path/cycle specs.
fn constructive_shelling(spec: &GraphSpec, t: usize) -> Result<Option<ShellingOrder>> {
    Ok(match spec {
        GraphSpec::Path(n) => Some(path_shelling(*n, t)?),
        GraphSpec::Cycle(n) => Some(cycle_shelling(*n, t)?),
        _ => None,
    })
}

/// Best route to an order of linear quotients for the selected ideal:
/// the chordal vertex splitting for clique ideals with chordal complement,
/// the constructive shelling for path/cycle independence ideals, and the
/// backtracking search otherwise.
fn linear_quotient_route(
    spec: &GraphSpec,
    graph: &Graph,
    t: usize,
    kind: Kind,
    ideal: &MonomialIdeal,
) -> Result<Option<LinearQuotientOrder>> {
    match kind {
        Kind::Clique => {
            let host = graph.complement();
            if host.is_chordal() {
                return Ok(Some(chordal_vertex_split(&host, t)?.linear_quotients()?));
            }
        }
        Kind::Independence => {
            if let Some(order) = constructive_shelling(spec, t)? {
                let complex = order.complex()?;
                return Ok(Some(shelling_to_linear_quotients(&complex, &order)?));
            }
        }
    }
    find_linear_quotients(ideal)
}

#[derive(Serialize)]
struct BettiMethodJson {
    method: &'static str,
    table: BettiJson,
    reg_ideal: i64,
    pd_ideal: usize,
    reg_quotient: i64,
    pd_quotient: usize,
    /// Re-verifiable witness, present for the linear-quotients method.
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<LinearQuotientCertificate>,
}

#[derive(Serialize)]
struct BettiAllJson {
    methods: Vec<BettiMethodJson>,
    verdict: Option<&'static str>,
}

fn cmd_betti(a: &BettiCmd) -> CmdResult {
    let (spec, graph, ideal) = resolve(&a.sel)?;
    if ideal.is_zero() {
        return Err(usage("the ideal is (0); Betti numbers are undefined"));
    }
    let field: FieldSpec = a.field.parse().map_err(lib)?;
    let t = a.sel.t as usize;

    let mut tables: Vec<(&'static str, BettiTable, Option<LinearQuotientOrder>)> = Vec::new();
    match a.method {
        Method::Oracle => {
            tables.push(("oracle", hochster_betti(&ideal, field).map_err(lib)?, None));
        }
        Method::LinearQuotients => {
            let lq = linear_quotient_route(&spec, &graph, t, a.sel.kind, &ideal).map_err(lib)?;
            match lq {
                Some(lq) => tables.push(("linear-quotients", lq.betti_table(), Some(lq))),
                None => {
                    return Err(usage(
                        "the ideal has no linear quotients; this method is inapplicable",
                    ))
                }
            }
        }
        Method::Recursion => {
            tables.push(("recursion", recursion_table(&spec, t, a.sel.kind)?, None));
        }
        Method::All => {
            tables.push(("oracle", hochster_betti(&ideal, field).map_err(lib)?, None));
            if let Some(lq) =
                linear_quotient_route(&spec, &graph, t, a.sel.kind, &ideal).map_err(lib)?
            {
                tables.push(("linear-quotients", lq.betti_table(), Some(lq)));
            }
            if matches!((a.sel.kind, &spec), (Kind::Independence, GraphSpec::Path(_))) {
                tables.push(("recursion", recursion_table(&spec, t, a.sel.kind)?, None));
            }
        }
    }

    let verdict = if tables.len() > 1 {
        Some(if tables.windows(2).all(|w| w[0].1 == w[1].1) {
            "MATCH"
        } else {
            "MISMATCH"
        })
    } else {
        None
    };
    let code = i32::from(verdict == Some("MISMATCH"));

    let stdout = match a.output {
        OutputFormat::Text => {
            let mut out = String::new();
            for (name, table, _) in &tables {
                let ip = table.reg_pd().map_err(lib)?;
                let qp = table.reg_pd_as(Subject::Quotient).map_err(lib)?;
                out.push_str(&format!("method: {name} [{field}]\n"));
                out.push_str(&table.render_text());
                out.push_str(&format!(
                    "reg(I) = {}  pd(I) = {}\nreg(R/I) = {}  pd(R/I) = {}\n",
                    ip.reg, ip.pd, qp.reg, qp.pd
                ));
            }
            if let Some(v) = verdict {
                out.push_str(&format!("verdict: {v}\n"));
            }
            out
        }
        OutputFormat::Json => {
            let methods = tables
                .iter()
                .map(|(name, table, lq)| {
                    let ip = table.reg_pd().map_err(lib)?;
                    let qp = table.reg_pd_as(Subject::Quotient).map_err(lib)?;
                    Ok(BettiMethodJson {
                        method: name,
                        table: BettiJson::from(table),
                        reg_ideal: ip.reg,
                        pd_ideal: ip.pd,
                        reg_quotient: qp.reg,
                        pd_quotient: qp.pd,
                        certificate: lq.as_ref().map(LinearQuotientCertificate::from),
                    })
                })
                .collect::<std::result::Result<Vec<_>, Failure>>()?;
            match (&methods[..], verdict) {
                ([single], None) if single.certificate.is_none() => json_line(&single.table),
                _ => json_line(&BettiAllJson { methods, verdict }),
            }
        }
    };
    Ok(CmdOutput { stdout, code })
}

fn recursion_table(spec: &GraphSpec, t: usize, kind: Kind) -> std::result::Result<BettiTable, Failure> {
    match (kind, spec) {
        (Kind::Independence, GraphSpec::Path(n)) => path_betti_recursion(*n, t).map_err(lib),
        _ => Err(usage(
            "--method recursion applies only to --kind independence --graph path:N",
        )),
    }
}

fn cmd_complex(a: &ComplexCmd) -> CmdResult {
    let (_, _, ideal) = resolve(&a.sel)?;
    let complex = stanley_reisner_complex(&ideal).map_err(lib)?;
    let stdout = match a.output {
        OutputFormat::Text => {
            let dp = complex.dimension_and_purity().map_err(lib)?;
            let mut out = format!(
                "n = {}  facets = {}  dim = {}  pure = {}\n",
                complex.n(),
                complex.facets().len(),
                dp.dim,
                dp.pure
            );
            for f in complex.facets() {
                out.push_str(&format!("  {f}\n"));
            }
            out
        }
        OutputFormat::Json => json_line(&ComplexJson::from(&complex)),
    };
    Ok(CmdOutput { stdout, code: 0 })
}

fn cmd_shelling(a: &ShellingCmd) -> CmdResult {
    let (spec, _, ideal) = resolve(&a.sel)?;
    let t = a.sel.t as usize;
    let constructive = match (&a.sel.kind, &spec) {
        (Kind::Clique, GraphSpec::Complement(inner)) => constructive_shelling(inner, t).map_err(lib)?,
        _ => None,
    };
    let (complex, order) = match constructive {
        Some(order) => (order.complex().map_err(lib)?, Some(order)),
        None => {
            let complex = stanley_reisner_complex(&ideal).map_err(lib)?;
            let order = find_shelling(&complex).map_err(lib)?;
            (complex, order)
        }
    };
    let Some(order) = order else {
        let stdout = match a.output {
            OutputFormat::Text => format!(
                "no shelling exists ({} facets, searched exhaustively)\n",
                complex.facets().len()
            ),
            OutputFormat::Json => json_line(&serde_json::json!({ "shellable": false })),
        };
        return Ok(CmdOutput { stdout, code: 0 });
    };
    let verified = verify_shelling(&complex, &order).map_err(lib)?;
    let stdout = match a.output {
        OutputFormat::Text => {
            let mut out = format!(
                "shelling with {} facets, verified: {verified}\n",
                order.len()
            );
            for (k, f) in order.facets().iter().enumerate() {
                out.push_str(&format!("  {:>3}. {f}\n", k + 1));
            }
            out
        }
        OutputFormat::Json => json_line(&ShellingCertificate::new(&complex, &order)),
    };
    Ok(CmdOutput {
        stdout,
        code: i32::from(!verified),
    })
}

fn cmd_cm(a: &CmCmd) -> CmdResult {
    let (_, _, ideal) = resolve(&a.sel)?;
    let field: FieldSpec = a.field.parse().map_err(lib)?;
    let complex = stanley_reisner_complex(&ideal).map_err(lib)?;
    let cm = reisner_cm_check(&complex, field).map_err(lib)?;
    let stdout = match a.output {
        OutputFormat::Text => format!("Cohen-Macaulay over {field}: {cm}\n"),
        OutputFormat::Json => json_line(&serde_json::json!({
            "field": field.to_string(),
            "cohen_macaulay": cm,
        })),
    };
    Ok(CmdOutput { stdout, code: 0 })
}

fn cmd_dual(a: &DualCmd) -> CmdResult {
    let (_, _, ideal) = resolve(&a.sel)?;
    let dual = ideal.alexander_dual().map_err(lib)?;
    let stdout = match a.output {
        OutputFormat::Text => format!("{dual}\n"),
        OutputFormat::Json => json_line(&IdealJson::from(&dual)),
    };
    Ok(CmdOutput { stdout, code: 0 })
}

fn cmd_check(a: &CheckCmd) -> CmdResult {
    let bounds = SuiteBounds {
        n_max: a.n_max,
        t_max: a.t_max,
        count: a.count,
        seed: a.seed,
    };
    let name = match a.suite {
        Suite::Path => "path",
        Suite::Cycle => "cycle",
        Suite::Chordal => "chordal",
        Suite::Duality => "duality",
    };
    let report = run_suite(name, bounds).map_err(lib)?;
    let stdout = match a.output {
        OutputFormat::Text => report.render_text(),
        OutputFormat::Json => json_line(&report),
    };
    Ok(CmdOutput {
        stdout,
        code: i32::from(!report.all_passed()),
    })
}

fn cmd_reproduce(a: &ReproduceCmd) -> CmdResult {
    let bounds = SuiteBounds {
        n_max: a.n_max,
        t_max: a.t_max,
        ..Default::default()
    };
    let rows = run_reproduce(bounds).map_err(lib)?;
    let mismatches = rows.iter().filter(|r| !r.ok).count();
    let stdout = match a.output {
        OutputFormat::Text => {
            let mut out = String::new();
            for row in &rows {
                out.push_str(&row.render());
                out.push('\n');
            }
            out.push_str(&format!(
                "REPRODUCE: {} ({} rows, {} mismatches)\n",
                if mismatches == 0 { "OK" } else { "FAIL" },
                rows.len(),
                mismatches
            ));
            out
        }
        OutputFormat::Json => json_line(&rows),
    };
    Ok(CmdOutput {
        stdout,
        code: i32::from(mismatches > 0),
    })
}
