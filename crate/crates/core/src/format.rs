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

//! Line-oriented edge-list format.
//!
//! ```text
//! # comment lines start with '#'
//! graph <n> <m>
//! <u> <v>      (exactly m lines, 0 <= u, v < n, u != v)
//! ```
//!
//! Blank lines are ignored. Serialization writes edges sorted by
//! `(min, max)`.

use std::fmt::Write;

use crate::{Error, Graph, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match toks.as_slice() {
        ["graph", n, m] => (
            parse_usize(n, hline, "vertex count")?,
            parse_usize(m, hline, "edge count")?,
        ),
        _ => return Err(parse_err(hline, "header must be `graph <n> <m>`")),
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(parse_err(lineno, format!("more than {m} edge lines")));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = toks.as_slice() else {
            return Err(parse_err(lineno, "edge line must be `<u> <v>`"));
        };
        edges.push((parse_usize(u, lineno, "vertex id")?, parse_usize(v, lineno, "vertex id")?));
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
