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

//! Acceptance criteria. Each criterion prints one `[PASS]` or `[FAIL]`
//! line; the process exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use comfort_team::cli::run;
use comfort_team::generators::{cycle, enumerate_connected_labeled, path, random_connected};
use comfort_team::verify::{find_failure_modes, recheck, run_check, CheckId, CorpusSpec, VerificationReport};
use comfort_team::{
    brute_force_gamma_comf, is_comfortable_team, min_comfortable_team, serialize_graph, Distance, Error,
    Graph, VertexSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))
}

const EXHAUSTIVE_4: CorpusSpec = CorpusSpec::Exhaustive { max_n: 4 };

fn clean(report: &VerificationReport, need_applicable: bool) -> Result<String, String> {
    let first = report.counterexamples.first().map(|ce| {
        format!(
            "; first: {} expected {} actual {} with G [{}] H [{}]",
            ce.subject,
            ce.expected,
            ce.actual,
            ce.g.trim().replace('\n', "; "),
            ce.h.trim().replace('\n', "; ")
        )
    });
    for ce in &report.counterexamples {
        ensure(recheck(ce).map_err(|e| e.to_string())?, || format!("phantom counterexample {ce:?}"))?;
    }
    let line = format!(
        "{} pairs {} applicable {} counterexamples {}",
        report.check,
        report.instances_checked,
        report.applicable,
        report.counterexamples.len()
    );
    ensure(report.passed, || format!("{line}{}", first.unwrap_or_default()))?;
    ensure(!need_applicable || report.applicable > 0, || format!("{line}: vacuous"))?;
    Ok(line)
}

fn check(id: CheckId, corpus: &CorpusSpec) -> Result<VerificationReport, String> {
    run_check(id, corpus).map_err(|e| e.to_string())
}

fn ac1_example_path() -> Outcome {
    let start = Instant::now();
    let g = path(6);
    let v = min_comfortable_team(&g).map_err(|e| e.to_string())?;
    let team = VertexSet::new([1, 2, 3, 4]);
    ensure(v.size == Some(4) && v.team.as_ref() == Some(&team), || format!("{v:?}"))?;
    let d = is_comfortable_team(&g, &team).map_err(|e| e.to_string())?;
    let pairs: Vec<(Distance, Distance)> = d.per_member.iter().map(|m| (m.in_team, m.in_graph)).collect();
    let f = Distance::Finite;
    ensure(pairs == vec![(f(3), f(4)), (f(2), f(3)), (f(2), f(3)), (f(3), f(4))], || format!("{pairs:?}"))?;

    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let file = dir.path().join("p6.txt");
    std::fs::write(&file, serialize_graph(&g)).map_err(|e| e.to_string())?;
    let out = run(["comfort-team", "team", file.to_str().unwrap(), "--set", "1,2,3,4"]);
    let expected = "member 1: 3 < 4\nmember 2: 2 < 3\nmember 3: 2 < 3\nmember 4: 3 < 4\n";
    ensure(out.exit_code == 0 && out.stdout.ends_with(expected), || out.stdout.clone())?;
    within(start, Duration::from_secs(1))?;
    Ok("gamma_comf(P6) = 4 with {1,2,3,4}; 3<4 2<3 2<3 3<4".into())
}

fn ac2_nonexistence() -> Outcome {
    let start = Instant::now();
    for g in [cycle(5), cycle(6)] {
        let n = g.vertex_count();
        let fast = min_comfortable_team(&g).map_err(|e| e.to_string())?;
        let slow = brute_force_gamma_comf(&g).map_err(|e| e.to_string())?;
        ensure(!fast.exists && fast.searched_through == n, || format!("C{n}: {fast:?}"))?;
        ensure(fast == slow, || format!("C{n}: oracle {slow:?}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("C5 and C6 exhausted through n with no team; oracle agrees".into())
}

fn ac3_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut disagreements = Vec::new();
    for n in 1..=6 {
        let mut count = 0;
        for g in enumerate_connected_labeled(n).map_err(|e| e.to_string())? {
            count += 1;
            let fast = min_comfortable_team(&g);
            let slow = brute_force_gamma_comf(&g);
            let same = match (&fast, &slow) {
                (Ok(a), Ok(b)) => a.exists == b.exists && a.size == b.size,
                (Err(Error::TrivialGraph), Err(Error::TrivialGraph)) => n == 1,
                _ => false,
            };
            if !same {
                disagreements.push(serialize_graph(&g));
            }
        }
        counts.push(count);
    }
    ensure(counts == [1, 1, 4, 38, 728, 26704], || format!("corpus counts {counts:?}"))?;
    ensure(disagreements.is_empty(), || format!("{} disagreements, first {:?}", disagreements.len(), disagreements[0]))?;
    within(start, Duration::from_secs(300))?;
    Ok(format!("{} graphs, 0 disagreements", counts.iter().sum::<usize>()))
}

fn ac4_theorem1() -> Outcome {
    let start = Instant::now();
    let r = check(CheckId::T1, &EXHAUSTIVE_4)?;
    ensure(r.instances_checked == 44 * 44, || format!("{} pairs", r.instances_checked))?;
    let line = clean(&r, true)?;
    within(start, Duration::from_secs(60))?;
    Ok(line)
}

fn ac5_theorems_2_and_4() -> Outcome {
    let start = Instant::now();
    let t2 = check(CheckId::T2, &EXHAUSTIVE_4)?;
    let t4 = check(CheckId::T4, &EXHAUSTIVE_4)?;
    let t2_line = clean(&t2, true);
    let t4_line = clean(&t4, true);
    within(start, Duration::from_secs(600))?;
    match (t2_line, t4_line) {
        (Ok(a), Ok(b)) => Ok(format!("{a}; {b}")),
        (a, b) => Err(format!("{}; {}", a.unwrap_or_else(|e| e), b.unwrap_or_else(|e| e))),
    }
}

fn ac6_theorem3() -> Outcome {
    let start = Instant::now();
    let corpus = CorpusSpec::Random { count: 200, n_min: 4, n_max: 6, edge_prob: 0.5, seed: 42 };
    let line = clean(&check(CheckId::T3, &corpus)?, true)?;
    within(start, Duration::from_secs(600))?;
    Ok(line)
}

fn ac7_theorem5_property4() -> Outcome {
    let start = Instant::now();
    let random = CorpusSpec::Random { count: 100, n_min: 2, n_max: 5, edge_prob: 0.5, seed: 42 };
    let mut lines = Vec::new();
    for corpus in [EXHAUSTIVE_4, random] {
        for id in [CheckId::T5, CheckId::P4] {
            lines.push(format!("{corpus}: {}", clean(&check(id, &corpus)?, true)?));
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(lines.join("; "))
}

fn ac8_properties_2_3() -> Outcome {
    let start = Instant::now();
    let p2 = clean(&check(CheckId::P2, &EXHAUSTIVE_4)?, true)?;
    let p3 = clean(&check(CheckId::P3, &EXHAUSTIVE_4)?, true)?;
    within(start, Duration::from_secs(300))?;
    Ok(format!("{p2}; {p3}"))
}

fn ac9_radius_one_law() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        for g in enumerate_connected_labeled(n).map_err(|e| e.to_string())? {
            if g.universal_vertices().is_empty() {
                continue;
            }
            checked += 1;
            let v = min_comfortable_team(&g).map_err(|e| e.to_string())?;
            ensure(v.size == Some(1), || format!("{} -> {v:?}", serialize_graph(&g)))?;
        }
    }
    Ok(format!("{checked} graphs with a universal vertex, all gamma_comf = 1"))
}

fn ac10_determinism() -> Outcome {
    let corpora = [
        CorpusSpec::Exhaustive { max_n: 3 },
        CorpusSpec::Random { count: 40, n_min: 2, n_max: 5, edge_prob: 0.5, seed: 7 },
    ];
    for corpus in &corpora {
        for id in CheckId::ALL {
            let a = check(id, corpus)?;
            let b = check(id, corpus)?;
            ensure(a.render_text() == b.render_text() && a.render_records() == b.render_records(), || {
                format!("{id} on {corpus} differs between runs")
            })?;
        }
    }
    let t4a = check(CheckId::T4, &EXHAUSTIVE_4)?.render_records();
    let t4b = check(CheckId::T4, &EXHAUSTIVE_4)?.render_records();
    ensure(t4a == t4b, || "T4 counterexample records differ".into())?;

    let modes = |c: &CorpusSpec| find_failure_modes(c).map(|r| r.render_records()).map_err(|e| e.to_string());
    ensure(modes(&corpora[0])? == modes(&corpora[0])?, || "failure modes differ".into())?;

    let graphs: Vec<Graph> = (0..2).map(|_| random_connected(10, 0.3, 123).unwrap()).collect();
    ensure(graphs[0] == graphs[1], || "random_connected differs".into())?;
    let gen = || run(["comfort-team", "--format", "records", "gen", "random", "--n", "7", "--seed", "9"]).stdout;
    ensure(gen() == gen(), || "gen output differs".into())?;
    let witness = || {
        let g = random_connected(9, 0.35, 77).unwrap();
        min_comfortable_team(&g).map(|v| format!("{v:?}")).map_err(|e| e.to_string())
    };
    ensure(witness()? == witness()?, || "witness differs".into())?;
    Ok("reports, records, witnesses and generated graphs byte-identical across runs".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 P6 example", ac1_example_path),
        ("AC2 non-existence certificates", ac2_nonexistence),
        ("AC3 oracle equivalence n<=6", ac3_oracle_equivalence),
        ("AC4 strong product eccentricity (T1)", ac4_theorem1),
        ("AC5 domination bounds (T2, T4)", ac5_theorems_2_and_4),
        ("AC6 strong product teams (T3)", ac6_theorem3),
        ("AC7 lexicographic teams and eccentricity (T5, P4)", ac7_theorem5_property4),
        ("AC8 radius-1 lexicographic products (P2, P3)", ac8_properties_2_3),
        ("AC9 radius-1 law", ac9_radius_one_law),
        ("AC10 determinism", ac10_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!("[PASS] {name} ({:.2?}): {detail}", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name} ({:.2?}): {detail}", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
