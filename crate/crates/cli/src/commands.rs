use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde_json::{json, Value};
use toi_core::certificate::{parse_certificate, serialize_certificate, verify, ClaimLevel};
use toi_core::constructions::{
    cartesian_32, cartesian_33, cartesian_large, direct_kts, direct_lift, direct_lift_host,
    FactorImmersion,
};
use toi_core::graph::{
    cartesian_product, complete_graph, cycle_graph, direct_product, parse_graph, path_graph,
    petersen_graph, product, write_graph,
};
use toi_core::solver::{
    check_conjecture, exact_toi, exact_toi_up_to, toi_upper_bound, SearchBudget, SolveResult,
    Status,
};
use toi_core::{Certificate, Error, Graph, ProductKind};

use crate::{BudgetArgs, Cli, Command, Construct, Factors, Output};

/// What a command prints and how it exits.
pub struct Report {
    pub code: u8,
    text: String,
    json: Value,
}

impl Report {
    fn new(code: u8, text: String, mut json: Value) -> Self {
        json["exit_code"] = json!(code);
        Report { code, text, json }
    }

    pub fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", self.json);
        } else {
            print!("{}", self.text);
        }
    }
}

pub struct Failure {
    pub code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn print(&self, as_json: bool) {
        eprintln!("error: {}", self.message);
        if as_json {
            println!(
                "{}",
                json!({ "error": self.message, "exit_code": self.code })
            );
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::SelfCheck(_)) {
            1
        } else {
            2
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<Report, Failure>;

pub fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("TOI_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::usage(format!(
            "TOI_THREADS must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::usage(format!("cannot configure threads: {e}")))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read_text(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_cert(path: &Path) -> Result<Certificate, Failure> {
    parse_certificate(&read_text(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn path_value(p: &Option<PathBuf>) -> Value {
    p.as_ref()
        .map_or(Value::Null, |p| json!(p.display().to_string()))
}

fn cert_value(cert: &Certificate) -> Value {
    serde_json::from_str(&serialize_certificate(cert)).expect("canonical certificates are JSON")
}

fn budget(args: &BudgetArgs) -> Result<SearchBudget, Failure> {
    let mut b = SearchBudget::unlimited();
    if let Some(secs) = args.time_limit {
        if !(secs.is_finite() && secs > 0.0) {
            return Err(Failure::usage(
                "--time-limit must be a positive number of seconds",
            ));
        }
        b = b.with_time_limit(Duration::from_secs_f64(secs));
    }
    if let Some(n) = args.nodes {
        b = b.with_nodes(n);
    }
    if let Some(l) = args.max_route_length {
        b = b.with_max_route_length(l);
    }
    Ok(b)
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gen { family, n, output } => gen(family, *n, output),
        Command::Product { op, g, h, output } => cmd_product(op, g, h, output),
        Command::Verify {
            graph,
            cert,
            require,
        } => cmd_verify(graph, cert, require),
        Command::Construct(c) => cmd_construct(c, cli.json),
        Command::Solve {
            graph,
            max_t,
            budget: b,
            output,
        } => cmd_solve(graph, *max_t, b, output),
        Command::CheckConjecture { graph, budget: b } => cmd_check(graph, b),
    }
}

fn emit_graph(g: &Graph, output: &Option<PathBuf>, what: &str) -> Outcome {
    let text = write_graph(g);
    let mut json = json!({
        "command": what,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "output": path_value(output),
    });
    let human = match output {
        Some(p) => {
            write_text(p, &text)?;
            format!(
                "wrote {} ({} vertices, {} edges)\n",
                p.display(),
                g.vertex_count(),
                g.edge_count()
            )
        }
        None => {
            json["graph"] = json!(text);
            text
        }
    };
    Ok(Report::new(0, human, json))
}

fn gen(family: &str, n: Option<usize>, output: &Option<PathBuf>) -> Outcome {
    let need = || n.ok_or_else(|| Failure::usage(format!("`{family}` needs an order n")));
    let g = match family {
        "complete" => complete_graph(need()?)?,
        "cycle" => cycle_graph(need()?)?,
        "path" => path_graph(need()?)?,
        "petersen" => petersen_graph(),
        other => {
            return Err(Failure::usage(format!(
                "unknown family `{other}` (expected complete, cycle, path or petersen)"
            )))
        }
    };
    emit_graph(&g, output, "gen")
}

fn cmd_product(op: &str, g: &Path, h: &Path, output: &Option<PathBuf>) -> Outcome {
    let kind: ProductKind = op.parse()?;
    let (g, h) = (read_graph(g)?, read_graph(h)?);
    emit_graph(&product(kind, &g, &h)?, output, "product")
}

fn cmd_verify(graph: &Path, cert: &Path, require: &str) -> Outcome {
    let level: ClaimLevel = require.parse()?;
    let host = read_graph(graph)?;
    let cert = read_cert(cert)?;
    let report = verify(&host, &cert)?;
    let ok = report.satisfies(level);
    let text = format!(
        "{report}\nrequired: {} ({})\n",
        level.name(),
        if ok { "holds" } else { "fails" }
    );
    let json = json!({
        "command": "verify",
        "report": report,
        "claim": report.claim_level().name(),
        "required": level.name(),
        "holds": ok,
    });
    Ok(Report::new(if ok { 0 } else { 1 }, text, json))
}

fn factor(graph: &Path, cert: &Option<PathBuf>) -> Result<FactorImmersion, Failure> {
    let g = read_graph(graph)?;
    let cert = match cert {
        Some(p) => read_cert(p)?,
        None => exact_toi(&g, &SearchBudget::unlimited())?
            .witness
            .expect("the solver always returns a witness"),
    };
    Ok(FactorImmersion::new(g, cert)?)
}

fn factors(f: &Factors) -> Result<(FactorImmersion, FactorImmersion), Failure> {
    Ok((factor(&f.g, &f.g_cert)?, factor(&f.h, &f.h_cert)?))
}

fn cmd_construct(c: &Construct, as_json: bool) -> Outcome {
    let (name, host, cert, level, out) = match c {
        Construct::DirectLift {
            factors: f,
            base,
            out,
        } => {
            let (fg, fh) = factors(f)?;
            let base = match base {
                Some(p) => read_cert(p)?,
                None => {
                    let kk = direct_product(
                        &complete_graph(fg.clique_size())?,
                        &complete_graph(fh.clique_size())?,
                    )?;
                    exact_toi(&kk, &SearchBudget::unlimited())?.witness.unwrap()
                }
            };
            let cert = direct_lift(&fg, &fh, &base)?;
            let host = direct_lift_host(&fg, &fh)?;
            ("direct-lift", host, cert, ClaimLevel::TotallyOdd, out)
        }
        Construct::DirectKts { t, s, out } => {
            let cert = direct_kts(*t, *s)?;
            let host = direct_product(&complete_graph(2 * t)?, &complete_graph(*s)?)?;
            ("direct-kts", host, cert, ClaimLevel::TotallyOddStrong, out)
        }
        Construct::CartLarge { factors: f, out } => {
            let (fg, fh) = factors(f)?;
            let cert = cartesian_large(&fg, &fh)?;
            let host = cartesian_product(fg.host(), fh.host())?;
            ("cart-large", host, cert, ClaimLevel::TotallyOddStrong, out)
        }
        Construct::Cart33 { factors: f, out } => {
            let (fg, fh) = factors(f)?;
            let cert = cartesian_33(&fg, &fh)?;
            let host = cartesian_product(fg.host(), fh.host())?;
            ("cart-33", host, cert, ClaimLevel::TotallyOddStrong, out)
        }
        Construct::Cart32 { g, h, out } => {
            let (g, h) = (read_graph(g)?, read_graph(h)?);
            let cert = cartesian_32(&g, &h)?;
            let host = cartesian_product(&g, &h)?;
            ("cart-32", host, cert, ClaimLevel::TotallyOddStrong, out)
        }
    };
    finish_construct(name, &host, &cert, level, out, as_json)
}

fn finish_construct(
    name: &str,
    host: &Graph,
    cert: &Certificate,
    level: ClaimLevel,
    out: &Output,
    as_json: bool,
) -> Outcome {
    // checked again here so that nothing unverified is ever written
    let report = verify(host, cert)?;
    if !report.satisfies(level) {
        return Err(Failure {
            code: 1,
            message: format!("{name}: self-verification failed\n{report}"),
        });
    }
    let cert_text = serialize_certificate(cert);
    if let Some(p) = &out.emit_graph {
        write_text(p, &write_graph(host))?;
    }
    let mut json = json!({
        "command": "construct",
        "construction": name,
        "clique_size": cert.clique_size(),
        "host": { "vertices": host.vertex_count(), "edges": host.edge_count() },
        "report": report,
        "claim": report.claim_level().name(),
        "output": path_value(&out.output),
        "graph_output": path_value(&out.emit_graph),
    });
    let mut summary = format!(
        "{name}: K{} in a host with {} vertices and {} edges\n{report}\n",
        cert.clique_size(),
        host.vertex_count(),
        host.edge_count()
    );
    let text = match &out.output {
        Some(p) => {
            write_text(p, &cert_text)?;
            let _ = writeln!(summary, "wrote {}", p.display());
            summary
        }
        None => {
            json["certificate"] = cert_value(cert);
            if !as_json {
                eprint!("{summary}");
            }
            cert_text
        }
    };
    Ok(Report::new(0, text, json))
}

fn solve_json<W>(r: &SolveResult<W>) -> Value {
    json!({
        "value": r.value,
        "status": r.status.name(),
        "lower": r.lower,
        "upper": r.upper,
        "nodes_explored": r.nodes_explored,
    })
}

const UPPER_RULE: &str =
    "at least t vertices of degree >= t-1, and at most 2 for bipartite graphs; artifact-invented";

fn cmd_solve(
    graph: &Path,
    max_t: Option<usize>,
    args: &BudgetArgs,
    output: &Option<PathBuf>,
) -> Outcome {
    let g = read_graph(graph)?;
    let b = budget(args)?;
    let r = exact_toi_up_to(&g, max_t, &b)?;
    let witness = r
        .witness
        .as_ref()
        .expect("the solver always returns a witness");
    if let Some(p) = output {
        write_text(p, &serialize_certificate(witness))?;
    }
    let ub = toi_upper_bound(&g);
    let mut json = solve_json(&r);
    json["command"] = json!("solve");
    json["upper_bound"] = json!(ub);
    json["upper_bound_rule"] = json!(UPPER_RULE);
    json["output"] = path_value(output);
    json["witness"] = cert_value(witness);
    let mut text = format!(
        "toi: {} ({})\nrange: {}..={}\nnodes explored: {}\nupper bound: {ub} ({UPPER_RULE})\nterminals: {:?}\n",
        r.value,
        r.status,
        r.lower,
        r.upper,
        r.nodes_explored,
        witness.terminals()
    );
    if let Some(p) = output {
        let _ = writeln!(text, "wrote {}", p.display());
    }
    let code = if r.status == Status::Timeout { 1 } else { 0 };
    Ok(Report::new(code, text, json))
}

fn cmd_check(graph: &Path, args: &BudgetArgs) -> Outcome {
    let g = read_graph(graph)?;
    let b = budget(args)?;
    let r = check_conjecture(&g, &b)?;
    let verdict = match r.satisfied {
        Some(true) => "satisfied",
        Some(false) => "violated",
        None => "indeterminate",
    };
    let text = format!(
        "chi: {} ({}, range {}..={})\ntoi: {} ({}, range {}..={})\nchi <= toi: {verdict}\n",
        r.chi.value,
        r.chi.status,
        r.chi.lower,
        r.chi.upper,
        r.toi.value,
        r.toi.status,
        r.toi.lower,
        r.toi.upper,
    );
    let json = json!({
        "command": "check-conjecture",
        "chi": solve_json(&r.chi),
        "toi": solve_json(&r.toi),
        "satisfied": r.satisfied,
        "verdict": verdict,
    });
    let code = if r.satisfied == Some(true) { 0 } else { 1 };
    Ok(Report::new(code, text, json))
}
