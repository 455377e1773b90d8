// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Command-line front end. [`run`] is the whole program minus process
//! exit, so tests drive it directly.
//!
//! Exit codes: 0 success or claim holds, 1 mathematically negative result
//! (no team, counterexample found, given set not comfortable), 2 usage or
//! input error.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::domination::{min_connected_dominating_set_with, min_dominating_set_with};
use crate::generators::{gen_family, random_connected, Family, FamilySpec};
use crate::products::{product, serialize_product, ProductKind};
use crate::verify::{explore_one_sided, find_failure_modes, run_check, CheckId, CorpusSpec};
use crate::{
    is_comfortable_team, min_comfortable_team, parse_graph, serialize_graph, Error, Graph, SearchLimits,
    VertexSet,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutcome {
    fn ok(stdout: String) -> CliOutcome {
        CliOutcome { exit_code: 0, stdout, stderr: String::new() }
    }

    fn negative(stdout: String) -> CliOutcome {
        CliOutcome { exit_code: 1, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> CliOutcome {
        CliOutcome { exit_code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }

    fn with_code(exit_code: i32, stdout: String) -> CliOutcome {
        CliOutcome { exit_code, stdout, stderr: String::new() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MinKind {
    Comfortable,
    #[value(alias = "connected")]
    Cds,
    #[value(alias = "plain")]
    Dominating,
}

#[derive(Debug, Parser)]
#[command(name = "comfort-team", version, about = "Comfortable teams, graph products and product identities")]
struct Cli {
    /// Output style; `records` prints one JSON object per line.
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CorpusArgs {
    /// All connected labeled graphs up to this order.
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    exhaustive: Option<usize>,
    /// This many seeded random graphs or factor pairs.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 4)]
    nmin: usize,
    #[arg(long, default_value_t = 6)]
    nmax: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        match (self.exhaustive, self.random) {
            (Some(max_n), _) => CorpusSpec::Exhaustive { max_n },
            (None, Some(count)) => CorpusSpec::Random {
                count,
                n_min: self.nmin,
                n_max: self.nmax,
                edge_prob: self.p,
                seed: self.seed,
            },
            (None, None) => unreachable!("clap group is required"),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-vertex eccentricities, radius and diameter.
    Ecc { file: PathBuf },
    /// Diagnose a given team or search for a minimum one.
    Team {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, conflicts_with = "min")]
        set: Option<String>,
        #[arg(long, value_enum)]
        min: Option<MinKind>,
        /// Largest graph order the exact searches accept.
        #[arg(long, default_value_t = SearchLimits::default().max_vertices)]
        cap: usize,
    },
    /// Build a strong or lexicographic product.
    Product {
        kind: String,
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one claim over a corpus of factor pairs.
    Verify {
        check: String,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// List corpus graphs without a comfortable team and why.
    Modes {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Products where a factor has no comfortable team (findings only).
    Explore {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Generate a named family or a seeded random connected graph.
    Gen {
        /// path, cycle, complete, star or random
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutcome::ok(text)
            } else {
                CliOutcome { exit_code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let records = cli.format == OutputFormat::Records;
    let result = match cli.command {
        Command::Ecc { file } => cmd_ecc(&file, records),
        Command::Team { file, set, min, cap } => cmd_team(&file, set.as_deref(), min, cap, records),
        Command::Product { kind, g, h, out } => cmd_product(&kind, &g, &h, out.as_deref(), records),
        Command::Verify { check, corpus } => cmd_verify(&check, &corpus.spec(), records),
        Command::Modes { corpus } => cmd_modes(&corpus.spec(), records),
        Command::Explore { corpus } => cmd_explore(&corpus.spec(), records),
        Command::Gen { family, n, p, seed, out } => cmd_gen(&family, n, p, seed, out.as_deref(), records),
    };
    result.unwrap_or_else(CliOutcome::usage)
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_connected(path: &Path) -> Result<Graph, String> {
    let g = read_graph(path)?;
    if g.is_connected() {
        Ok(g)
    } else {
        Err(format!("{}: {}", path.display(), Error::Disconnected))
    }
}

fn line(out: &mut String, value: serde_json::Value) {
    out.push_str(&value.to_string());
    out.push('\n');
}

fn cmd_ecc(file: &Path, records: bool) -> Result<CliOutcome, String> {
    let g = read_connected(file)?;
    let prof = g.eccentricity_profile();
    let mut out = String::new();
    if records {
        for (v, e) in prof.ecc.iter().enumerate() {
            line(&mut out, json!({"record": "ecc", "vertex": v, "ecc": e}));
        }
        line(
            &mut out,
            json!({"record": "profile", "radius": prof.radius, "diameter": prof.diameter, "self_centered": prof.self_centered}),
        );
    } else {
        for (v, e) in prof.ecc.iter().enumerate() {
            writeln!(out, "vertex {v} ecc {e}").unwrap();
        }
        writeln!(out, "radius {}", prof.radius).unwrap();
        writeln!(out, "diameter {}", prof.diameter).unwrap();
        writeln!(out, "self-centered {}", prof.self_centered).unwrap();
    }
    Ok(CliOutcome::ok(out))
}

fn cmd_team(
    file: &Path,
    set: Option<&str>,
    min: Option<MinKind>,
    cap: usize,
    records: bool,
) -> Result<CliOutcome, String> {
    let g = read_connected(file)?;
    let mut out = String::new();
    if let Some(text) = set {
        let s = VertexSet::parse_list(text)?;
        let d = is_comfortable_team(&g, &s).map_err(|e| e.to_string())?;
        if records {
            let mut v = serde_json::to_value(&d).unwrap();
            v["record"] = "diagnosis".into();
            v["team"] = serde_json::to_value(&s).unwrap();
            line(&mut out, v);
        } else {
            writeln!(out, "team {s}").unwrap();
            writeln!(out, "dominating {}", d.dominating).unwrap();
            writeln!(out, "connected {}", d.connected).unwrap();
            writeln!(out, "less-dispersive {}", d.less_dispersive).unwrap();
            writeln!(out, "comfortable {}", d.comfortable).unwrap();
            for m in &d.per_member {
                let rel = if m.reduced() { "<" } else { ">=" };
                writeln!(out, "member {}: {} {rel} {}", m.vertex, m.in_team, m.in_graph).unwrap();
            }
        }
        return Ok(CliOutcome::with_code(if d.comfortable { 0 } else { 1 }, out));
    }

    let limits = SearchLimits::with_max_vertices(cap);
    match min {
        None => Err("team needs --set or --min".into()),
        Some(MinKind::Comfortable) => {
            let v = if cap == SearchLimits::default().max_vertices {
                min_comfortable_team(&g)
            } else {
                crate::comfort::min_comfortable_team_with(&g, &limits)
            }
            .map_err(|e| e.to_string())?;
            if records {
                let mut r = serde_json::to_value(&v).unwrap();
                r["record"] = "comfort_verdict".into();
                line(&mut out, r);
            } else if let Some(team) = &v.team {
                writeln!(out, "comfortable team size {}: {team}", team.len()).unwrap();
                writeln!(out, "searched through size {}", v.searched_through).unwrap();
            } else {
                writeln!(out, "no comfortable team (exhausted n={})", v.searched_through).unwrap();
            }
            Ok(if v.exists { CliOutcome::ok(out) } else { CliOutcome::negative(out) })
        }
        Some(kind) => {
            let w = if kind == MinKind::Cds {
                min_connected_dominating_set_with(&g, &limits)
            } else {
                min_dominating_set_with(&g, &limits)
            }
            .map_err(|e| e.to_string())?
            .expect("unbounded search always succeeds");
            if records {
                let mut r = serde_json::to_value(&w).unwrap();
                r["record"] = "domination".into();
                line(&mut out, r);
            } else {
                let name = if w.connected_required { "connected dominating set" } else { "dominating set" };
                writeln!(out, "{name} size {}: {}", w.size, w.witness).unwrap();
            }
            Ok(CliOutcome::ok(out))
        }
    }
}

fn emit_graph(
    document: String,
    summary: serde_json::Value,
    summary_text: String,
    out_path: Option<&Path>,
    records: bool,
) -> Result<CliOutcome, String> {
    let mut out = String::new();
    match out_path {
        Some(path) => {
            std::fs::write(path, &document).map_err(|e| format!("{}: {e}", path.display()))?;
            if records {
                line(&mut out, summary);
            } else {
                writeln!(out, "{summary_text}").unwrap();
            }
            Ok(CliOutcome::ok(out))
        }
        None if records => {
            let mut s = summary;
            s["document"] = document.into();
            line(&mut out, s);
            Ok(CliOutcome::ok(out))
        }
        None => Ok(CliOutcome { exit_code: 0, stdout: document, stderr: format!("{summary_text}\n") }),
    }
}

fn cmd_product(kind: &str, gp: &Path, hp: &Path, out: Option<&Path>, records: bool) -> Result<CliOutcome, String> {
    let kind: ProductKind = kind.parse()?;
    let g = read_graph(gp)?;
    let h = read_graph(hp)?;
    let (p, idx) = product(kind, &g, &h);
    let summary = json!({
        "record": "product", "kind": kind, "n": idx.n, "m": idx.m,
        "vertices": p.vertex_count(), "edges": p.edge_count(),
    });
    let text = format!(
        "product {kind} n={} m={} vertices={} edges={}",
        idx.n,
        idx.m,
        p.vertex_count(),
        p.edge_count()
    );
    emit_graph(serialize_product(kind, &idx, &p), summary, text, out, records)
}

fn cmd_verify(check: &str, corpus: &CorpusSpec, records: bool) -> Result<CliOutcome, String> {
    let check: CheckId = check.parse().map_err(|e: Error| e.to_string())?;
    let report = run_check(check, corpus).map_err(|e| e.to_string())?;
    let text = if records { report.render_records() } else { report.render_text() };
    Ok(if report.passed { CliOutcome::ok(text) } else { CliOutcome::negative(text) })
}

fn cmd_modes(corpus: &CorpusSpec, records: bool) -> Result<CliOutcome, String> {
    let report = find_failure_modes(corpus).map_err(|e| e.to_string())?;
    Ok(CliOutcome::ok(if records { report.render_records() } else { report.render_text() }))
}

fn cmd_explore(corpus: &CorpusSpec, records: bool) -> Result<CliOutcome, String> {
    let found = explore_one_sided(corpus).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for f in &found {
        if records {
            let mut v = serde_json::to_value(f).unwrap();
            v["record"] = "open_finding".into();
            line(&mut out, v);
        } else {
            let fmt_team = |t: Option<usize>| t.map_or("none".to_string(), |k| k.to_string());
            writeln!(
                out,
                "OPEN {} G[{}] H[{}] team(G)={} team(H)={} product team={}",
                f.kind,
                f.g.lines().collect::<Vec<_>>().join("; "),
                f.h.lines().collect::<Vec<_>>().join("; "),
                fmt_team(f.g_team),
                fmt_team(f.h_team),
                f.product_team.as_ref().map_or("none".to_string(), |t| format!("{{{t}}}")),
            )
            .unwrap();
        }
    }
    if !records {
        writeln!(out, "findings {}", found.len()).unwrap();
    }
    Ok(CliOutcome::ok(out))
}

fn cmd_gen(family: &str, n: usize, p: f64, seed: u64, out: Option<&Path>, records: bool) -> Result<CliOutcome, String> {
    let family_kind = match family {
        "path" => Some(Family::Path),
        "cycle" => Some(Family::Cycle),
        "complete" => Some(Family::Complete),
        "star" => Some(Family::Star),
        "random" => None,
        other => return Err(format!("unknown family {other:?}")),
    };
    let g = match family_kind {
        Some(family) => gen_family(FamilySpec { family, n }),
        None if !(0.0..=1.0).contains(&p) => return Err("edge probability must be in [0, 1]".into()),
        None => random_connected(n, p, seed),
    }
    .map_err(|e| e.to_string())?;
    let summary = json!({"record": "graph", "family": family, "n": g.vertex_count(), "edges": g.edge_count()});
    let text = format!("graph {family} n={} edges={}", g.vertex_count(), g.edge_count());
    emit_graph(serialize_graph(&g), summary, text, out, records)
}
