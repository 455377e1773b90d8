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

//! Simple undirected graphs on dense vertex ids, BFS distances and
//! eccentricities.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// Shortest-path length, or `Infinite` when no path exists.
///
/// `Infinite` orders above every finite value so `max` over a distance row
/// is the eccentricity without a special case for disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Finite simple undirected graph with vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    // Neighbor masks, present when n <= 64.
    bits: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and ids `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph::from_sorted_adjacency(adj))
    }

    /// Adjacency rows must already be sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let n = adj.len();
        debug_assert!(n >= 1);
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let bits = (n <= 64).then(|| {
            adj.iter()
                .map(|row| row.iter().fold(0u64, |acc, &v| acc | (1u64 << v)))
                .collect()
        });
        Graph { n, m, adj, bits }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
        Ok(Graph::from_sorted_adjacency(adj))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    pub(crate) fn neighbor_masks(&self) -> Option<&[u64]> {
        self.bits.as_deref()
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.as_slice().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) + 1 == self.n).collect()
    }

    /// BFS distance from `v` to every vertex.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Distance>> {
        self.check_vertex(v)?;
        let mut dist = vec![Distance::Infinite; self.n];
        dist[v] = Distance::Finite(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let next = match dist[u] {
                Distance::Finite(d) => Distance::Finite(d + 1),
                Distance::Infinite => unreachable!(),
            };
            for &w in &self.adj[u] {
                if dist[w] == Distance::Infinite {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn eccentricity_profile(&self) -> EccentricityProfile {
        let ecc: Vec<Distance> = (0..self.n)
            .map(|v| {
                let row = self.distances_from(v).expect("vertex in range");
                row.into_iter().max().unwrap_or(Distance::Finite(0))
            })
            .collect();
        EccentricityProfile::from_eccentricities(ecc)
    }

    pub fn is_connected(&self) -> bool {
        let row = self.distances_from(0).expect("n >= 1");
        row.iter().all(|d| d.is_finite())
    }

    /// Whether `<s>` is connected.
    pub fn is_connected_set(&self, s: &VertexSet) -> Result<bool> {
        let &start = s.as_slice().first().ok_or(Error::EmptySet)?;
        self.check_set(s)?;
        let mut seen = vec![false; self.n];
        let mut inside = vec![false; self.n];
        for &v in s.iter() {
            inside[v] = true;
        }
        seen[start] = true;
        let mut reached = 1;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        Ok(reached == s.len())
    }

    /// Subgraph induced by `s`, with vertices renumbered in sorted order.
    ///
    /// The returned map sends an old id to its new id (`None` outside `s`).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        self.check_set(s)?;
        let mut map = vec![None; self.n];
        for (new, &old) in s.iter().enumerate() {
            map[old] = Some(new);
        }
        let adj = s
            .iter()
            .map(|&old| self.adj[old].iter().filter_map(|&w| map[w]).collect())
            .collect();
        Ok((Graph::from_sorted_adjacency(adj), map))
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> VertexSet {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(vec![v])
    }

    pub(crate) fn from_mask(mut mask: u64) -> VertexSet {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            v.push(mask.trailing_zeros() as usize);
            mask &= mask - 1;
        }
        VertexSet(v)
    }

    /// Bitmask form; `None` when a member is `>= 64`.
    pub(crate) fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &v| (v < 64).then(|| acc | (1u64 << v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Parses a comma-separated id list such as `1,2,3`.
    pub fn parse_list(text: &str) -> std::result::Result<VertexSet, String> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(VertexSet::default());
        }
        text.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad vertex id {t:?}")))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(VertexSet::new)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Per-vertex eccentricities with radius and diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub ecc: Vec<Distance>,
    pub radius: Distance,
    pub diameter: Distance,
    pub self_centered: bool,
}

impl EccentricityProfile {
    pub(crate) fn from_eccentricities(ecc: Vec<Distance>) -> EccentricityProfile {
        let radius = ecc.iter().copied().min().unwrap_or(Distance::Finite(0));
        let diameter = ecc.iter().copied().max().unwrap_or(Distance::Finite(0));
        let self_centered = radius.is_finite() && radius == diameter;
        EccentricityProfile { ecc, radius, diameter, self_centered }
    }

    /// Finite radius, `None` for a disconnected graph.
    pub fn radius_value(&self) -> Option<usize> {
        self.radius.finite()
    }
}

// Mask-based helpers for the exhaustive searches. All require n <= 64.

#[inline]
pub(crate) fn lowest_bit(mask: u64) -> u64 {
    mask & mask.wrapping_neg()
}

/// Closed neighborhood of a vertex mask.
#[inline]
pub(crate) fn closed_neighborhood(nbrs: &[u64], mut mask: u64) -> u64 {
    let mut out = mask;
    while mask != 0 {
        out |= nbrs[mask.trailing_zeros() as usize];
        mask &= mask - 1;
    }
    out
}

/// Eccentricity of `v` inside `<within>`, or `None` if `<within>` does not
/// reach every member from `v`.
pub(crate) fn masked_eccentricity(nbrs: &[u64], within: u64, v: usize) -> Option<usize> {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    let mut depth = 0;
    while seen != within {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            next |= nbrs[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        next &= within & !seen;
        if next == 0 {
            return None;
        }
        seen |= next;
        frontier = next;
        depth += 1;
    }
    Some(depth)
}

/// Among two equal-size masks, whether `a` precedes `b` in lexicographic
/// order of sorted member lists.
#[inline]
pub(crate) fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && (a & lowest_bit(diff)) != 0
}
