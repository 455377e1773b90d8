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

//! Named graph families, seeded random connected graphs and exhaustive
//! labeled connected-graph enumeration.
//!
//! # Random graphs
//!
//! [`random_connected`] is bit-reproducible. The generator is PCG32
//! (PCG-XSH-RR, 64-bit state, 32-bit output) constructed as
//! `Pcg32::new(seed, RANDOM_GRAPH_STREAM)`. Draws:
//!
//! * edge coin for pair `(u, v)`, `u < v`, pairs visited in edge-mask bit
//!   order: `next_u32() as f64 / 2^32 < p`;
//! * up to [`RANDOM_GRAPH_ATTEMPTS`] full coin rounds; the first connected
//!   draw is returned;
//! * otherwise a spanning path is laid through a Fisher–Yates permutation
//!   (`for i in (1..n).rev() { swap(i, next_u32() % (i + 1)) }`) and one
//!   more coin round is added on top of it.

use rand_core::RngCore;
use rand_pcg::Pcg32;
use serde::Serialize;

use crate::{Error, Graph, Result};

pub const RANDOM_GRAPH_STREAM: u64 = 0x0a02_bdbf_7bb3_c0a7;
pub const RANDOM_GRAPH_ATTEMPTS: usize = 32;
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

/// Paths and cycles are numbered along the walk; a star's center is 0.
pub fn gen_family(spec: FamilySpec) -> Result<Graph> {
    let FamilySpec { family, n } = spec;
    let min = match family {
        Family::Path | Family::Complete => 1,
        Family::Cycle => 3,
        Family::Star => 2,
    };
    if n < min {
        return Err(Error::InvalidFamily { family: family.name(), n });
    }
    match family {
        Family::Path => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
        Family::Cycle => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
        Family::Complete => Graph::complete(n),
        Family::Star => Graph::from_edges(n, (1..n).map(|i| (0, i))),
    }
}

pub fn path(n: usize) -> Graph {
    gen_family(FamilySpec { family: Family::Path, n }).expect("n >= 1")
}

pub fn cycle(n: usize) -> Graph {
    gen_family(FamilySpec { family: Family::Cycle, n }).expect("n >= 3")
}

pub fn complete(n: usize) -> Graph {
    gen_family(FamilySpec { family: Family::Complete, n }).expect("n >= 1")
}

/// `K_{1, n-1}`.
pub fn star(n: usize) -> Graph {
    gen_family(FamilySpec { family: Family::Star, n }).expect("n >= 2")
}

/// Position of pair `(u, v)`, `u < v`, in an edge mask over `n` vertices.
#[inline]
pub fn edge_bit(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn coin(rng: &mut Pcg32, p: f64) -> bool {
    (rng.next_u32() as f64) / 4_294_967_296.0 < p
}

fn adjacency_from_pairs(n: usize, chosen: &[bool]) -> Graph {
    let edges = pairs(n).zip(chosen).filter(|(_, &c)| c).map(|(e, _)| e);
    Graph::from_edges(n, edges).expect("distinct pairs")
}

pub fn random_connected(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let p = edge_prob.clamp(0.0, 1.0);
    let mut rng = Pcg32::new(seed, RANDOM_GRAPH_STREAM);
    let total = n * (n - 1) / 2;
    for _ in 0..RANDOM_GRAPH_ATTEMPTS {
        let chosen: Vec<bool> = (0..total).map(|_| coin(&mut rng, p)).collect();
        let g = adjacency_from_pairs(n, &chosen);
        if g.is_connected() {
            return Ok(g);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.next_u32() as usize % (i + 1);
        order.swap(i, j);
    }
    let mut chosen = vec![false; total];
    for w in order.windows(2) {
        let (u, v) = (w[0].min(w[1]), w[0].max(w[1]));
        chosen[edge_bit(n, u, v)] = true;
    }
    for c in chosen.iter_mut() {
        *c |= coin(&mut rng, p);
    }
    Ok(adjacency_from_pairs(n, &chosen))
}

/// Graph whose edges are the set bits of `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n).enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(n, edges).expect("distinct pairs")
}

/// All connected labeled graphs on `n` vertices, by ascending edge mask.
pub fn enumerate_connected_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidCorpus(format!(
            "labeled enumeration supports 1..={MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    let masks = 1u64 << (n * (n - 1) / 2);
    Ok((0..masks).map(move |m| graph_from_mask(n, m)).filter(Graph::is_connected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Distance;

    #[test]
    fn families() {
        let p6 = path(6);
        let ecc: Vec<_> = p6.eccentricity_profile().ecc.iter().map(|e| e.finite().unwrap()).collect();
        assert_eq!(ecc, vec![5, 4, 3, 3, 4, 5]);
        assert_eq!(cycle(5).edge_count(), 5);
        let s = star(5);
        assert_eq!(s.edge_count(), 4);
        assert_eq!(s.eccentricity_profile().radius, Distance::Finite(1));
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(path(1).vertex_count(), 1);
    }

    #[test]
    fn family_bounds() {
        for (family, n) in [(Family::Cycle, 2), (Family::Star, 1), (Family::Path, 0), (Family::Complete, 0)] {
            assert!(matches!(gen_family(FamilySpec { family, n }), Err(Error::InvalidFamily { .. })));
        }
    }

    #[test]
    fn edge_bits_are_dense() {
        for n in 2..8 {
            let bits: Vec<usize> = pairs(n).map(|(u, v)| edge_bit(n, u, v)).collect();
            assert_eq!(bits, (0..n * (n - 1) / 2).collect::<Vec<_>>());
        }
    }

    #[test]
    fn random_edge_cases() {
        for seed in 0..5 {
            assert_eq!(random_connected(1, 0.5, seed).unwrap(), complete(1));
            assert_eq!(random_connected(7, 1.0, seed).unwrap(), complete(7));
            let sparse = random_connected(9, 0.0, seed).unwrap();
            assert!(sparse.is_connected());
            assert_eq!(sparse.edge_count(), 8);
        }
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_connected(10, 0.3, 99).unwrap();
        let b = random_connected(10, 0.3, 99).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
    }

    #[test]
    fn labeled_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected_labeled(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(enumerate_connected_labeled(8).is_err());
        assert!(enumerate_connected_labeled(0).is_err());
        assert_eq!(enumerate_connected_labeled(2).unwrap().next().unwrap(), complete(2));
    }
}
