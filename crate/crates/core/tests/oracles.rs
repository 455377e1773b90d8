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

//! Exact solvers against plain powerset enumeration on every connected
//! labeled graph with at most six vertices.

use comfort_team::generators::enumerate_connected_labeled;
use comfort_team::{
    enumerate_connected_subsets, is_dominating, min_connected_dominating_set, min_dominating_set, Graph,
    VertexSet,
};

fn powerset(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Smallest size, then lexicographically smallest members.
fn best(sets: impl Iterator<Item = VertexSet>) -> Option<VertexSet> {
    sets.min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.as_slice().cmp(b.as_slice())))
}

fn corpus() -> impl Iterator<Item = Graph> {
    (1..=6).flat_map(|n| enumerate_connected_labeled(n).unwrap())
}

#[test]
fn domination_matches_powerset() {
    for g in corpus() {
        let n = g.vertex_count();
        let plain = best(powerset(n).filter(|s| is_dominating(&g, s).unwrap())).unwrap();
        let connected = best(
            powerset(n).filter(|s| is_dominating(&g, s).unwrap() && g.is_connected_set(s).unwrap()),
        )
        .unwrap();

        let got = min_dominating_set(&g).unwrap();
        assert_eq!(got.witness, plain, "{g:?}");
        let got_c = min_connected_dominating_set(&g).unwrap();
        assert_eq!(got_c.witness, connected, "{g:?}");
        assert!(got.size <= got_c.size);
    }
}

#[test]
fn connected_subsets_match_powerset_filter() {
    for g in corpus() {
        let n = g.vertex_count();
        for k in 1..=n {
            let mut expected: Vec<Vec<usize>> = powerset(n)
                .filter(|s| s.len() == k && g.is_connected_set(s).unwrap())
                .map(|s| s.as_slice().to_vec())
                .collect();
            expected.sort();
            let got: Vec<Vec<usize>> = enumerate_connected_subsets(&g, k)
                .unwrap()
                .map(|s| s.as_slice().to_vec())
                .collect();
            assert_eq!(got, expected, "k={k} {g:?}");
        }
    }
}
