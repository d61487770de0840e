use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::time::Duration;

use planar_turan::constructions::{build_with_cache, FamilyId};
use planar_turan::formulas::{
    classify_pattern, formula_value, reference_bounds, verify_verdict, FormulaError, ReferenceGraph,
};
use planar_turan::oracle::{
    enumerate_triangulations_with, exact_planar_turan_with_witness, CensusCache, CensusOptions, OracleError,
    SearchBudget,
};
use planar_turan::patterns::find_pattern;
use planar_turan::{Graph, TuranValue};
use serde_json::{json, Value};

use crate::{Cli, Command, GraphFormat};

pub struct Report {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or arguments: exit 2.
    Usage(String),
    /// The work itself failed: exit 1.
    Failure(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m),
            CliError::Failure(m) => ("failure", m),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Io(_) => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Settings shared by every command.
pub struct Context {
    pub cache: CensusCache,
    pub expensive: bool,
}

impl Context {
    pub fn census_options(&self) -> CensusOptions {
        CensusOptions {
            allow_expensive: self.expensive,
            cache: Some(self.cache.clone()),
        }
    }

    /// Loads or builds the census at `n` so later oracle calls find it in memory.
    pub fn warm(&self, n: usize) -> Result<usize, CliError> {
        Ok(enumerate_triangulations_with(n, &self.census_options())?.len())
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let ctx = Context {
        cache: cli.cache.clone().map(CensusCache::new).unwrap_or_else(CensusCache::default_location),
        expensive: cli.expensive,
    };
    match &cli.command {
        Command::Construct { family, params, out } => construct(&ctx, family, params, *out),
        Command::Check { pattern, graph } => {
            let g = read_graph(graph)?;
            let m = find_pattern(&g, pattern);
            let text = match &m {
                None => "free\n".to_string(),
                Some(m) => format!("not free\nmatch: {}\n", join(&m.map)),
            };
            let json = json!({
                "pattern": pattern.to_string(),
                "graph": g.to_graph6(),
                "free": m.is_none(),
                "match": m.as_ref().map(|m| m.map.clone()),
            });
            Ok(Report {
                text,
                json,
                code: if m.is_none() { 0 } else { 1 },
            })
        }
        Command::Enumerate { n, output } => {
            let census = enumerate_triangulations_with(*n, &ctx.census_options())?;
            let mut text = format!("n={n}: {} triangulations\n", census.len());
            if let Some(path) = output {
                let lines: String = census.graphs().map(|g| g.to_graph6() + "\n").collect();
                fs::write(path, lines).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
                text += &format!("wrote {}\n", path.display());
            }
            let json = json!({
                "n": n,
                "count": census.len(),
                "cache": ctx.cache.root().display().to_string(),
                "output": output.as_ref().map(|p| p.display().to_string()),
            });
            Ok(Report::ok(text, json))
        }
        Command::Exact {
            n,
            pattern,
            budget,
            time_limit,
            witness,
        } => {
            let mut b = SearchBudget::default();
            if let Some(d) = budget {
                b.max_deletions = *d;
            }
            if let Some(secs) = time_limit {
                b.time_limit = Some(
                    Duration::try_from_secs_f64(*secs)
                        .map_err(|_| CliError::Usage(format!("bad time limit {secs}")))?,
                );
            }
            ctx.warm(*n)?;
            let (value, extremal) = exact_planar_turan_with_witness(*n, pattern, &b)?;
            let mut text = format!("{value}\n");
            if *witness {
                if let Some(g) = &extremal {
                    text += &format!("witness: {}\n", g.to_graph6());
                }
            }
            let mut json = value_json(&value, *n);
            json["pattern"] = json!(pattern.to_string());
            if *witness {
                json["witness"] = json!(extremal.map(|g| g.to_graph6()));
            }
            Ok(Report {
                text,
                json,
                code: if value.exact { 0 } else { 3 },
            })
        }
        Command::Formula { pattern, n } => {
            let value = formula_value(pattern, *n).map_err(formula_error)?;
            let mut json = value_json(&value, *n);
            json["pattern"] = json!(pattern.to_string());
            Ok(Report::ok(format!("{}\n", labelled(&value, *n)), json))
        }
        Command::Reference { graph, n } => {
            let g: ReferenceGraph = graph.parse().map_err(CliError::Usage)?;
            let value = reference_bounds(g, *n).map_err(formula_error)?;
            let mut json = value_json(&value, *n);
            json["graph"] = json!(g.to_string());
            Ok(Report::ok(format!("<= {}\n", value.hi), json))
        }
        Command::Classify { graph, n, verify } => {
            let h = read_graph(graph)?;
            let verdict = classify_pattern(&h, *n).map_err(formula_error)?;
            let verified = match (*verify, verdict.is_covered()) {
                (true, true) => Some(verify_verdict(&verdict, &h, *n).map_err(formula_error)?),
                _ => None,
            };
            let mut text = format!("condition: {}\n", verdict.condition);
            if let (Some(f), Some(min)) = (verdict.family, verdict.min_n) {
                text += &format!("family: {f}\nmin-n: {min}\n");
            }
            if let Some(ok) = verified {
                text += &format!("verified: {ok}\n");
            }
            let mut json = serde_json::to_value(&verdict).expect("serializable");
            json["graph"] = json!(h.to_graph6());
            json["n"] = json!(n);
            json["verified"] = json!(verified);
            let code = if verdict.is_covered() && verified != Some(false) { 0 } else { 1 };
            Ok(Report { text, json, code })
        }
        Command::VerifyTheorem { id, max_n } => {
            let rows = crate::verify::run(*id, *max_n, &ctx)?;
            let all = rows.iter().all(|r| r.pass);
            let text = crate::verify::table(&rows);
            let json = json!({
                "id": id.name(),
                "max_n": max_n,
                "pass": all,
                "rows": rows.iter().map(crate::verify::Row::to_json).collect::<Vec<_>>(),
            });
            Ok(Report {
                text,
                json,
                code: if all { 0 } else { 1 },
            })
        }
    }
}

fn construct(ctx: &Context, family: &str, params: &[usize], out: GraphFormat) -> Result<Report, CliError> {
    let id = FamilyId::parse(family, params).map_err(|e| CliError::Usage(e.to_string()))?;
    let g = build_with_cache(&id, Some(&ctx.cache)).map_err(|e| CliError::Failure(e.to_string()))?;
    let text = match out {
        GraphFormat::G6 => format!("{}\n", g.to_graph6()),
        GraphFormat::Dot => g.to_dot(&id.to_string().replace([':', ',', '-'], "_")),
    };
    let json = json!({
        "family": id.to_string(),
        "n": g.n(),
        "edges": g.edge_count(),
        "graph6": g.to_graph6(),
        "degree_profile": profile_json(&g.degree_profile()),
    });
    Ok(Report::ok(text, json))
}

fn profile_json(p: &BTreeMap<usize, usize>) -> Value {
    Value::Object(p.iter().map(|(d, c)| (d.to_string(), json!(c))).collect())
}

pub fn read_graph(arg: &str) -> Result<Graph, CliError> {
    let code = match arg.strip_prefix('@') {
        Some(path) => {
            let s = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
            s.lines().next().unwrap_or("").trim().to_string()
        }
        None => arg.trim().to_string(),
    };
    Graph::from_graph6(&code).map_err(|e| CliError::Usage(format!("bad graph6 '{code}': {e}")))
}

pub fn formula_error(e: FormulaError) -> CliError {
    match e {
        FormulaError::NoTheorem { .. } | FormulaError::NotCovered | FormulaError::Construction(_) => {
            CliError::Failure(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    }
}

/// `31 (=3n-8)` when the value sits just under `3n − 6`.
pub fn labelled(v: &TuranValue, n: usize) -> String {
    match v.offset_label(n) {
        Some(l) => format!("{v} (={l})"),
        None => v.to_string(),
    }
}

fn value_json(v: &TuranValue, n: usize) -> Value {
    let mut j = serde_json::to_value(v).expect("serializable");
    j["n"] = json!(n);
    j["label"] = json!(v.offset_label(n));
    j
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
