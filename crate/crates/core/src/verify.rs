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

//! Corpus-driven checks of the product identities for eccentricity,
//! domination and comfortable teams.
//!
//! Each check runs over ordered factor pairs `(G, H)` drawn from a
//! [`CorpusSpec`], filters pairs by the check's hypothesis, and records
//! every violation as a self-contained [`Counterexample`] embedding both
//! factors in the edge-list format.

use std::fmt::{self, Write};
use std::str::FromStr;

use rand_core::RngCore;
use rand_pcg::Pcg32;
use rayon::prelude::*;
use serde::Serialize;

use crate::comfort::min_comfortable_team_with;
use crate::domination::{
    for_each_connected_rooted, min_connected_dominating_set_with, min_dominating_set_with, SearchLimits,
    MASK_LIMIT,
};
use crate::format::serialize_graph;
use crate::generators::{enumerate_connected_labeled, random_connected, MAX_ENUMERATION_ORDER};
use crate::graph::{closed_neighborhood, masked_eccentricity};
use crate::products::{lex_product, strong_product, ProductKind};
use crate::{
    is_comfortable_team, lex_radius_fast_paths, lex_team_construction, min_connected_dominating_set,
    parse_graph, strong_team_construction, ComfortVerdict, Distance, Error, Graph, Result, VertexSet,
};

/// Identifies one of the verified claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CheckId {
    T1,
    T2,
    T3,
    T4,
    T5,
    P1,
    P2,
    P3,
    P4,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::T1,
        CheckId::T2,
        CheckId::T3,
        CheckId::T4,
        CheckId::T5,
        CheckId::P1,
        CheckId::P2,
        CheckId::P3,
        CheckId::P4,
    ];

    pub fn claim(self) -> &'static str {
        match self {
            CheckId::T1 => "ecc of (u,v) in G strong H equals max(e_G(u), e_H(v))",
            CheckId::T2 => "gamma(G strong H) <= gamma(G) * gamma(H)",
            CheckId::T3 => "comfortable teams of G and H lift to one of G strong H, gamma_comf(G strong H) <= gamma_comf(G) * gamma_comf(H)",
            CheckId::T4 => "gamma_c(G lex H) = gamma_c(G) for |V(G)| >= 2",
            CheckId::T5 => "r(G) >= 2: gamma_comf(G lex H) = gamma_comf(G) and every fiber copy of a minimum team is comfortable",
            CheckId::P1 => "(u_k, v_j) ~ (u_a, v_j) in G lex H whenever u_a ~ u_k in G",
            CheckId::P2 => "r(G) = 1 and r(H) <= 1: r(G lex H) = 1 and gamma_comf(G lex H) = 1",
            CheckId::P3 => "r(G) = 1 and r(H) >= 2: G lex H is 2-self-centered and gamma_comf(G lex H) = 2",
            CheckId::P4 => "r(G) >= 2: ecc of (u,v) in G lex H equals e_G(u)",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Stream selector for corpus-level draws; distinct from the per-graph
/// stream used inside [`random_connected`].
pub const CORPUS_STREAM: u64 = 0x5851_f42d_4c95_7f2d;

/// Products must fit the 64-bit subset masks.
pub const MAX_RANDOM_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum CorpusSpec {
    /// All connected labeled graphs on `1..=max_n` vertices.
    Exhaustive { max_n: usize },
    /// `count` seeded random connected graphs (or factor pairs) with order
    /// drawn uniformly from `n_min..=n_max`.
    Random { count: usize, n_min: usize, n_max: usize, edge_prob: f64, seed: u64 },
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CorpusSpec::Exhaustive { max_n } => write!(f, "exhaustive(max_n={max_n})"),
            CorpusSpec::Random { count, n_min, n_max, edge_prob, seed } => {
                write!(f, "random(count={count}, n={n_min}..={n_max}, p={edge_prob}, seed={seed})")
            }
        }
    }
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CorpusSpec::Exhaustive { max_n } if max_n == 0 || max_n > MAX_ENUMERATION_ORDER => Err(
                Error::InvalidCorpus(format!("exhaustive max_n must be in 1..={MAX_ENUMERATION_ORDER}")),
            ),
            CorpusSpec::Random { n_min, n_max, edge_prob, .. } => {
                if n_min == 0 || n_min > n_max || n_max > MAX_RANDOM_ORDER {
                    Err(Error::InvalidCorpus(format!(
                        "random orders must satisfy 1 <= nmin <= nmax <= {MAX_RANDOM_ORDER}"
                    )))
                } else if !(0.0..=1.0).contains(&edge_prob) {
                    Err(Error::InvalidCorpus("edge probability must be in [0, 1]".into()))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    fn random_graphs(count: usize, n_min: usize, n_max: usize, p: f64, seed: u64) -> Result<Vec<Graph>> {
        let mut rng = Pcg32::new(seed, CORPUS_STREAM);
        let span = (n_max - n_min + 1) as u32;
        (0..count)
            .map(|_| {
                let n = n_min + (rng.next_u32() % span) as usize;
                random_connected(n, p, rng.next_u64())
            })
            .collect()
    }

    /// The graphs of a single-graph corpus, in corpus order.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        self.validate()?;
        match *self {
            CorpusSpec::Exhaustive { max_n } => {
                let mut out = Vec::new();
                for n in 1..=max_n {
                    out.extend(enumerate_connected_labeled(n)?);
                }
                Ok(out)
            }
            CorpusSpec::Random { count, n_min, n_max, edge_prob, seed } => {
                Self::random_graphs(count, n_min, n_max, edge_prob, seed)
            }
        }
    }

    /// Factor pairs: every ordered pair of an exhaustive corpus, or
    /// `count` independently drawn `(G, H)` pairs of a random one.
    pub fn pairs(&self) -> Result<FactorPairs> {
        self.validate()?;
        Ok(match *self {
            CorpusSpec::Exhaustive { .. } => {
                let graphs = self.graphs()?;
                let k = graphs.len();
                FactorPairs { graphs, pairs: (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect() }
            }
            CorpusSpec::Random { count, n_min, n_max, edge_prob, seed } => {
                let graphs = Self::random_graphs(2 * count, n_min, n_max, edge_prob, seed)?;
                FactorPairs { graphs, pairs: (0..count).map(|i| (2 * i, 2 * i + 1)).collect() }
            }
        })
    }
}

/// Ordered factor pairs as indices into a shared graph list.
pub struct FactorPairs {
    pub graphs: Vec<Graph>,
    pub pairs: Vec<(usize, usize)>,
}

impl FactorPairs {
    pub fn iter(&self) -> impl Iterator<Item = (&Graph, &Graph)> + '_ {
        self.pairs.iter().map(|&(a, b)| (&self.graphs[a], &self.graphs[b]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: CheckId,
    pub g: String,
    pub h: String,
    /// Offending product vertex or vertex set.
    pub subject: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    NotApplicable,
    Holds,
    Violated(Vec<Counterexample>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: CheckId,
    pub corpus: CorpusSpec,
    /// Factor pairs visited.
    pub instances_checked: usize,
    /// Pairs meeting the check's hypothesis.
    pub applicable: usize,
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn is_vacuous(&self) -> bool {
        self.applicable == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "check {}: {}", self.check, self.check.claim()).unwrap();
        writeln!(out, "corpus {}", self.corpus).unwrap();
        writeln!(
            out,
            "pairs {} applicable {} skipped {}",
            self.instances_checked, self.applicable, self.skipped
        )
        .unwrap();
        writeln!(out, "counterexamples {}", self.counterexamples.len()).unwrap();
        for (i, ce) in self.counterexamples.iter().enumerate() {
            writeln!(
                out,
                "counterexample {i}: {} expected {} actual {}",
                ce.subject, ce.expected, ce.actual
            )
            .unwrap();
            for (name, text) in [("G", &ce.g), ("H", &ce.h)] {
                for line in text.lines() {
                    writeln!(out, "  {name}| {line}").unwrap();
                }
            }
        }
        let verdict = match (self.passed, self.is_vacuous()) {
            (true, true) => "result PASSED (vacuous: 0 applicable instances)".to_string(),
            (true, false) => format!("result PASSED ({} applicable instances)", self.applicable),
            (false, _) => format!("result FAILED ({} counterexamples)", self.counterexamples.len()),
        };
        writeln!(out, "{verdict}").unwrap();
        out
    }

    /// One JSON object per line: each counterexample, then a summary.
    pub fn render_records(&self) -> String {
        #[derive(Serialize)]
        struct Summary<'a> {
            record: &'static str,
            check: CheckId,
            corpus: &'a CorpusSpec,
            instances_checked: usize,
            applicable: usize,
            skipped: usize,
            counterexamples: usize,
            passed: bool,
            vacuous: bool,
        }
        #[derive(Serialize)]
        struct Record<'a> {
            record: &'static str,
            #[serde(flatten)]
            ce: &'a Counterexample,
        }
        let mut out = String::new();
        for ce in &self.counterexamples {
            out.push_str(&serde_json::to_string(&Record { record: "counterexample", ce }).unwrap());
            out.push('\n');
        }
        let summary = Summary {
            record: "report",
            check: self.check,
            corpus: &self.corpus,
            instances_checked: self.instances_checked,
            applicable: self.applicable,
            skipped: self.skipped,
            counterexamples: self.counterexamples.len(),
            passed: self.passed,
            vacuous: self.is_vacuous(),
        };
        out.push_str(&serde_json::to_string(&summary).unwrap());
        out.push('\n');
        out
    }
}

fn product_limits() -> SearchLimits {
    SearchLimits::with_max_vertices(MASK_LIMIT)
}

fn radius(g: &Graph) -> Option<usize> {
    g.eccentricity_profile().radius_value()
}

/// Radius-1 side: `n >= 2` with a universal vertex.
fn radius_one(g: &Graph) -> bool {
    g.vertex_count() >= 2 && !g.universal_vertices().is_empty()
}

fn comfort_size(g: &Graph) -> Result<Option<(usize, VertexSet)>> {
    if g.vertex_count() < 2 {
        return Ok(None);
    }
    let v = min_comfortable_team_with(g, &product_limits())?;
    Ok(v.team.map(|t| (t.len(), t)))
}

struct Ctx<'a> {
    check: CheckId,
    g: &'a Graph,
    h: &'a Graph,
    found: Vec<Counterexample>,
}

impl Ctx<'_> {
    fn violation(&mut self, subject: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        self.found.push(Counterexample {
            check: self.check,
            g: serialize_graph(self.g),
            h: serialize_graph(self.h),
            subject: subject.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn finish(self) -> PairOutcome {
        if self.found.is_empty() {
            PairOutcome::Holds
        } else {
            PairOutcome::Violated(self.found)
        }
    }
}

fn min_comfort_in(p: &Graph, bound: usize) -> Result<ComfortVerdict> {
    min_comfortable_team_with(p, &product_limits().up_to_size(bound))
}

fn verdict_text(v: &ComfortVerdict) -> String {
    match &v.team {
        Some(t) => format!("{} {{{t}}}", t.len()),
        None => format!("none through size {}", v.searched_through),
    }
}

/// Evaluates one claim on one ordered factor pair.
pub fn check_pair(check: CheckId, g: &Graph, h: &Graph) -> Result<PairOutcome> {
    if !g.is_connected() || !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut cx = Ctx { check, g, h, found: Vec::new() };
    match check {
        CheckId::T1 => {
            let (p, idx) = strong_product(g, h);
            let (eg, eh, ep) = (g.eccentricity_profile(), h.eccentricity_profile(), p.eccentricity_profile());
            for (x, &actual) in ep.ecc.iter().enumerate() {
                let (i, j) = idx.unflatten(x);
                let expected = eg.ecc[i].max(eh.ecc[j]);
                if actual != expected {
                    cx.violation(format!("vertex {x}=({i},{j})"), expected, actual);
                }
            }
        }
        CheckId::T2 => {
            let limits = product_limits();
            let dg = min_dominating_set_with(g, &limits)?.expect("unbounded").size;
            let dh = min_dominating_set_with(h, &limits)?.expect("unbounded").size;
            let bound = dg * dh;
            let (p, _) = strong_product(g, h);
            if min_dominating_set_with(&p, &limits.up_to_size(bound))?.is_none() {
                cx.violation("gamma(G strong H)", format!("<= {dg}*{dh}={bound}"), format!("> {bound}"));
            }
        }
        CheckId::T3 => {
            let (Some((kg, sg)), Some((kh, sh))) = (comfort_size(g)?, comfort_size(h)?) else {
                return Ok(PairOutcome::NotApplicable);
            };
            match strong_team_construction(g, h, &sg, &sh) {
                Ok(_) => {}
                Err(Error::ConstructionFailed(msg)) => cx.violation(format!("{{{sg}}} x {{{sh}}}"), "comfortable", msg),
                Err(e) => return Err(e),
            }
            let (p, _) = strong_product(g, h);
            let bound = kg * kh;
            let v = min_comfort_in(&p, bound)?;
            if !v.exists {
                cx.violation("gamma_comf(G strong H)", format!("<= {kg}*{kh}={bound}"), verdict_text(&v));
            }
        }
        CheckId::T4 => {
            if g.vertex_count() < 2 {
                return Ok(PairOutcome::NotApplicable);
            }
            let limits = product_limits();
            let cg = min_connected_dominating_set_with(g, &limits)?.expect("unbounded");
            let (p, _) = lex_product(g, h);
            match min_connected_dominating_set_with(&p, &limits.up_to_size(cg.size))? {
                Some(w) if w.size == cg.size => {}
                found => {
                    let actual = match found {
                        Some(w) => w,
                        None => min_connected_dominating_set_with(&p, &limits)?.expect("unbounded"),
                    };
                    cx.violation(
                        "gamma_c(G lex H)",
                        format!("{} (G witness {{{}}})", cg.size, cg.witness),
                        format!("{} {{{}}}", actual.size, actual.witness),
                    );
                }
            }
        }
        CheckId::T5 => {
            if radius(g).is_none_or(|r| r < 2) {
                return Ok(PairOutcome::NotApplicable);
            }
            let Some((kg, sg)) = comfort_size(g)? else {
                return Ok(PairOutcome::NotApplicable);
            };
            for j in 0..h.vertex_count() {
                match lex_team_construction(g, h, &sg, j) {
                    Ok(_) => {}
                    Err(Error::ConstructionFailed(msg)) => cx.violation(format!("fiber {j} of {{{sg}}}"), "comfortable", msg),
                    Err(e) => return Err(e),
                }
            }
            let (p, _) = lex_product(g, h);
            let v = min_comfort_in(&p, kg)?;
            if v.size != Some(kg) {
                cx.violation("gamma_comf(G lex H)", kg, verdict_text(&v));
            }
        }
        CheckId::P1 => {
            let (p, idx) = lex_product(g, h);
            for k in 0..g.vertex_count() {
                for &a in g.neighbors(k) {
                    for j in 0..h.vertex_count() {
                        let (x, y) = (idx.flatten(k, j), idx.flatten(a, j));
                        if !p.has_edge(x, y) {
                            cx.violation(format!("edge {x}=({k},{j}) {y}=({a},{j})"), "adjacent", "not adjacent");
                        }
                    }
                }
            }
        }
        CheckId::P2 | CheckId::P3 => {
            if !radius_one(g) {
                return Ok(PairOutcome::NotApplicable);
            }
            let h_universal = !h.universal_vertices().is_empty();
            if h_universal != (check == CheckId::P2) {
                return Ok(PairOutcome::NotApplicable);
            }
            let (p, _) = lex_product(g, h);
            let prof = p.eccentricity_profile();
            let want = if check == CheckId::P2 { 1 } else { 2 };
            if check == CheckId::P2 && prof.radius != Distance::Finite(1) {
                cx.violation("r(G lex H)", 1, prof.radius);
            }
            if check == CheckId::P3 && !(prof.self_centered && prof.radius == Distance::Finite(2)) {
                cx.violation(
                    "eccentricities of G lex H",
                    "2-self-centered",
                    format!("radius {} diameter {}", prof.radius, prof.diameter),
                );
            }
            let v = min_comfort_in(&p, want)?;
            if v.size != Some(want) {
                cx.violation("gamma_comf(G lex H)", want, verdict_text(&v));
            }
            let fast = lex_radius_fast_paths(g, h)?;
            if fast.as_ref().and_then(|f| f.size) != Some(want) {
                cx.violation(
                    "radius fast path",
                    want,
                    fast.map_or("no fast path".to_string(), |f| verdict_text(&f)),
                );
            }
        }
        CheckId::P4 => {
            if radius(g).is_none_or(|r| r < 2) {
                return Ok(PairOutcome::NotApplicable);
            }
            let (p, idx) = lex_product(g, h);
            let (eg, ep) = (g.eccentricity_profile(), p.eccentricity_profile());
            for (x, &actual) in ep.ecc.iter().enumerate() {
                let (i, j) = idx.unflatten(x);
                if actual != eg.ecc[i] {
                    cx.violation(format!("vertex {x}=({i},{j})"), eg.ecc[i], actual);
                }
            }
        }
    }
    Ok(cx.finish())
}

pub fn run_check(check: CheckId, corpus: &CorpusSpec) -> Result<VerificationReport> {
    let pairs = corpus.pairs()?;
    let outcomes: Vec<PairOutcome> = pairs
        .pairs
        .par_iter()
        .map(|&(a, b)| check_pair(check, &pairs.graphs[a], &pairs.graphs[b]))
        .collect::<Result<_>>()?;

    let mut report = VerificationReport {
        check,
        corpus: *corpus,
        instances_checked: outcomes.len(),
        applicable: 0,
        skipped: 0,
        counterexamples: Vec::new(),
        passed: true,
    };
    for outcome in outcomes {
        match outcome {
            PairOutcome::NotApplicable => report.skipped += 1,
            PairOutcome::Holds => report.applicable += 1,
            PairOutcome::Violated(ces) => {
                report.applicable += 1;
                report.counterexamples.extend(ces);
            }
        }
    }
    report.passed = report.counterexamples.is_empty();
    Ok(report)
}

/// Re-parses the embedded factors and re-runs the claim; `true` when the
/// pair still violates it.
pub fn recheck(ce: &Counterexample) -> Result<bool> {
    let g = parse_graph(&ce.g)?;
    let h = parse_graph(&ce.h)?;
    Ok(matches!(check_pair(ce.check, &g, &h)?, PairOutcome::Violated(_)))
}

/// A graph without a comfortable team and the reasons it has none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureMode {
    pub graph: String,
    pub n: usize,
    /// Number of inclusion-maximal connected less-dispersive sets.
    pub maximal_less_dispersive: usize,
    /// A few of them, in lexicographic order.
    pub maximal_examples: Vec<VertexSet>,
    /// A vertex left undominated by the first maximal example.
    pub undominated: Option<usize>,
    pub min_cds: VertexSet,
    /// Members of `min_cds` whose eccentricity does not drop.
    pub min_cds_stuck: Vec<usize>,
    /// Less-dispersive sets exist but none dominates.
    pub less_dispersive_not_dominating: bool,
    /// Connected dominating sets exist but none is less dispersive.
    pub dominating_not_less_dispersive: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailureModeReport {
    pub corpus: CorpusSpec,
    pub graphs_checked: usize,
    pub without_team: Vec<FailureMode>,
}

impl FailureModeReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "corpus {}", self.corpus).unwrap();
        writeln!(out, "graphs {} without-team {}", self.graphs_checked, self.without_team.len()).unwrap();
        for fm in &self.without_team {
            let examples: Vec<String> = fm.maximal_examples.iter().map(|s| format!("{{{s}}}")).collect();
            writeln!(
                out,
                "no team: n={} edges={} | maximal less-dispersive sets {} e.g. {} (misses {}) | min cds {{{}}} stuck {:?} | modes{}{}",
                fm.n,
                fm.graph.lines().skip(1).collect::<Vec<_>>().join(","),
                fm.maximal_less_dispersive,
                examples.join(" "),
                fm.undominated.map_or("-".into(), |v| v.to_string()),
                fm.min_cds,
                fm.min_cds_stuck,
                if fm.less_dispersive_not_dominating { " not-dominating" } else { "" },
                if fm.dominating_not_less_dispersive { " not-less-dispersive" } else { "" },
            )
            .unwrap();
        }
        out
    }

    pub fn render_records(&self) -> String {
        let mut out = String::new();
        for fm in &self.without_team {
            let mut v = serde_json::to_value(fm).unwrap();
            v["record"] = "failure_mode".into();
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out.push_str(
            &serde_json::json!({
                "record": "failure_mode_report",
                "corpus": self.corpus,
                "graphs_checked": self.graphs_checked,
                "without_team": self.without_team.len(),
            })
            .to_string(),
        );
        out.push('\n');
        out
    }
}

/// Largest graph order [`find_failure_modes`] analyses.
pub const FAILURE_MODE_CAP: usize = 12;

fn analyse_no_team(g: &Graph) -> Result<Option<FailureMode>> {
    let n = g.vertex_count();
    if n < 2 {
        return Ok(None);
    }
    let limits = SearchLimits::with_max_vertices(FAILURE_MODE_CAP);
    if min_comfortable_team_with(g, &limits)?.exists {
        return Ok(None);
    }
    let nbrs = g.neighbor_masks().expect("n <= 12");
    let full = g.full_mask();
    let ecc: Vec<usize> = g.eccentricity_profile().ecc.iter().map(|e| e.finite().expect("connected")).collect();
    let spread_ok = |s: u64| {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if masked_eccentricity(nbrs, s, v).is_none_or(|e| e >= ecc[v]) {
                return false;
            }
            rest &= rest - 1;
        }
        true
    };

    let mut less_dispersive = Vec::new();
    let mut any_ld_dominates = false;
    let mut any_cds_spreads = false;
    for k in 1..=n {
        for root in 0..n {
            for_each_connected_rooted(nbrs, root, k, &mut |s| {
                let ld = spread_ok(s);
                let dom = closed_neighborhood(nbrs, s) == full;
                if ld {
                    less_dispersive.push(s);
                    any_ld_dominates |= dom;
                }
                any_cds_spreads |= dom && ld;
            });
        }
    }
    let mut maximal: Vec<VertexSet> = less_dispersive
        .iter()
        .filter(|&&s| !less_dispersive.iter().any(|&t| t != s && t & s == s))
        .map(|&s| VertexSet::from_mask(s))
        .collect();
    maximal.sort();
    let undominated = maximal.first().and_then(|s| {
        let covered = closed_neighborhood(nbrs, s.to_mask().expect("n <= 12"));
        (0..n).find(|&v| covered >> v & 1 == 0)
    });

    let cds = min_connected_dominating_set(g)?;
    let diag = is_comfortable_team(g, &cds.witness)?;
    let stuck = diag.per_member.iter().filter(|m| !m.reduced()).map(|m| m.vertex).collect();

    Ok(Some(FailureMode {
        graph: serialize_graph(g),
        n,
        maximal_less_dispersive: maximal.len(),
        maximal_examples: maximal.iter().take(4).cloned().collect(),
        undominated,
        min_cds: cds.witness,
        min_cds_stuck: stuck,
        less_dispersive_not_dominating: !less_dispersive.is_empty() && !any_ld_dominates,
        dominating_not_less_dispersive: !any_cds_spreads,
    }))
}

/// Lists the corpus graphs with no comfortable team and classifies why.
pub fn find_failure_modes(corpus: &CorpusSpec) -> Result<FailureModeReport> {
    let graphs = corpus.graphs()?;
    if let Some(g) = graphs.iter().find(|g| g.vertex_count() > FAILURE_MODE_CAP) {
        return Err(Error::SearchCapExceeded { n: g.vertex_count(), cap: FAILURE_MODE_CAP });
    }
    let found: Vec<Option<FailureMode>> = graphs.par_iter().map(analyse_no_team).collect::<Result<_>>()?;
    Ok(FailureModeReport {
        corpus: *corpus,
        graphs_checked: graphs.len(),
        without_team: found.into_iter().flatten().collect(),
    })
}

/// Outcome for a product where at least one factor has no comfortable
/// team. These pairs are outside the proven statements and are reported
/// as findings only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenFinding {
    pub kind: ProductKind,
    pub g: String,
    pub h: String,
    pub g_team: Option<usize>,
    pub h_team: Option<usize>,
    pub product_team: Option<VertexSet>,
}

/// Largest product order [`explore_one_sided`] searches exhaustively.
pub const EXPLORE_PRODUCT_CAP: usize = 20;

/// Scans pairs where one or both factors (each with at least two vertices)
/// lack a comfortable team and records whether each product has one.
pub fn explore_one_sided(corpus: &CorpusSpec) -> Result<Vec<OpenFinding>> {
    let pairs = corpus.pairs()?;
    let found: Vec<Vec<OpenFinding>> = pairs
        .pairs
        .par_iter()
        .map(|&(a, b)| {
            let (g, h) = (&pairs.graphs[a], &pairs.graphs[b]);
            let mut out = Vec::new();
            if g.vertex_count() < 2
                || h.vertex_count() < 2
                || g.vertex_count() * h.vertex_count() > EXPLORE_PRODUCT_CAP
            {
                return Ok(out);
            }
            let (tg, th) = (comfort_size(g)?, comfort_size(h)?);
            if tg.is_some() && th.is_some() {
                return Ok(out);
            }
            for kind in [ProductKind::Strong, ProductKind::Lex] {
                let (p, _) = crate::products::product(kind, g, h);
                let v = min_comfortable_team_with(&p, &product_limits())?;
                out.push(OpenFinding {
                    kind,
                    g: serialize_graph(g),
                    h: serialize_graph(h),
                    g_team: tg.as_ref().map(|t| t.0),
                    h_team: th.as_ref().map(|t| t.0),
                    product_team: v.team,
                });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}
