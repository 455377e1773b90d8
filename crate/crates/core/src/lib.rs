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

//! Exact analysis of comfortable teams in small social networks.
//!
//! A comfortable team of a connected graph `G` is a vertex set `D` that
//! dominates `G`, induces a connected subgraph, and in which every member
//! has strictly smaller eccentricity inside `<D>` than inside `G`. This
//! crate decides existence of such teams, finds minimum ones, builds strong
//! and lexicographic products, and checks the known product identities for
//! eccentricity and (connected) domination over exhaustive and seeded
//! random corpora.

pub mod cli;
pub mod comfort;
pub mod domination;
mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod products;
pub mod verify;

pub use comfort::{
    brute_force_gamma_comf, is_comfortable_team, is_less_dispersive, lex_radius_fast_paths,
    lex_team_construction, min_comfortable_team, strong_team_construction, ComfortVerdict,
    LessDispersion, MemberEccentricity, TeamDiagnosis,
};
pub use domination::{
    enumerate_connected_subsets, is_dominating, min_connected_dominating_set, min_dominating_set,
    DominationWitness, SearchLimits,
};
pub use error::{Error, Result};
pub use format::{parse_graph, serialize_graph};
pub use graph::{Distance, EccentricityProfile, Graph, VertexSet};
pub use products::{lex_product, lift_set, strong_product, ProductIndexing, ProductKind};
