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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("the trivial graph K1 has no comfortable team under the strict eccentricity rule")]
    TrivialGraph,
    #[error("graph has {n} vertices, search cap is {cap}")]
    SearchCapExceeded { n: usize, cap: usize },
    #[error("subset size {k} out of range 1..={n}")]
    SizeOutOfRange { k: usize, n: usize },
    #[error("invalid {family} order {n}")]
    InvalidFamily { family: &'static str, n: usize },
    #[error("not a comfortable team: {0}")]
    NotComfortable(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("construction failed its own check: {0}")]
    ConstructionFailed(String),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),
}
