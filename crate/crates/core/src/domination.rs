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

//! Domination predicates, exact minimum (connected) dominating sets and
//! connected-subset enumeration.
//!
//! All searches run over subset sizes `k = 1, 2, ...`, so the first size
//! with a hit is the minimum. Within a size, the reported witness is the
//! lexicographically smallest sorted member list.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{closed_neighborhood, lex_less};
use crate::{Error, Graph, Result, VertexSet};

/// Hard ceiling imposed by the 64-bit subset masks.
pub const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest graph order the exhaustive searches accept.
    pub max_vertices: usize,
    /// Stop after this subset size; `None` searches up to `n`.
    pub max_size: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_vertices: 16, max_size: None }
    }
}

impl SearchLimits {
    pub fn with_max_vertices(max_vertices: usize) -> SearchLimits {
        SearchLimits { max_vertices, max_size: None }
    }

    pub fn up_to_size(self, k: usize) -> SearchLimits {
        SearchLimits { max_size: Some(k), ..self }
    }

    pub(crate) fn check<'g>(&self, g: &'g Graph) -> Result<&'g [u64]> {
        let cap = self.max_vertices.min(MASK_LIMIT);
        let n = g.vertex_count();
        if n > cap {
            return Err(Error::SearchCapExceeded { n, cap });
        }
        Ok(g.neighbor_masks().expect("n <= 64 has masks"))
    }

    pub(crate) fn last_size(&self, n: usize) -> usize {
        self.max_size.map_or(n, |k| k.min(n))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationWitness {
    pub size: usize,
    pub witness: VertexSet,
    pub connected_required: bool,
}

/// Whether every vertex is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    let mut covered = vec![false; g.vertex_count()];
    for &v in s {
        covered[v] = true;
        for &w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    Ok(covered.into_iter().all(|c| c))
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

pub fn min_dominating_set(g: &Graph) -> Result<DominationWitness> {
    let found = min_dominating_set_with(g, &SearchLimits::default())?;
    Ok(found.expect("V(G) always dominates"))
}

/// Minimum dominating set, or `None` if none exists within `limits.max_size`.
pub fn min_dominating_set_with(g: &Graph, limits: &SearchLimits) -> Result<Option<DominationWitness>> {
    require_connected(g)?;
    let nbrs = limits.check(g)?;
    let full = g.full_mask();
    let n = g.vertex_count();
    for k in 1..=limits.last_size(n) {
        if let Some(mask) = first_combination(n, k, |s| closed_neighborhood(nbrs, s) == full) {
            return Ok(Some(DominationWitness {
                size: k,
                witness: VertexSet::from_mask(mask),
                connected_required: false,
            }));
        }
    }
    Ok(None)
}

pub fn min_connected_dominating_set(g: &Graph) -> Result<DominationWitness> {
    let found = min_connected_dominating_set_with(g, &SearchLimits::default())?;
    Ok(found.expect("V(G) is a connected dominating set"))
}

pub fn min_connected_dominating_set_with(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<Option<DominationWitness>> {
    require_connected(g)?;
    let nbrs = limits.check(g)?;
    let full = g.full_mask();
    let n = g.vertex_count();
    for k in 1..=limits.last_size(n) {
        if let Some(mask) = first_connected(nbrs, n, k, |s| closed_neighborhood(nbrs, s) == full) {
            return Ok(Some(DominationWitness {
                size: k,
                witness: VertexSet::from_mask(mask),
                connected_required: true,
            }));
        }
    }
    Ok(None)
}

/// Lexicographically first `k`-subset of `0..n` accepted by `accept`.
fn first_combination(n: usize, k: usize, mut accept: impl FnMut(u64) -> bool) -> Option<u64> {
    fn rec(start: usize, n: usize, left: usize, acc: u64, accept: &mut dyn FnMut(u64) -> bool) -> Option<u64> {
        if left == 0 {
            return accept(acc).then_some(acc);
        }
        (start..=n - left).find_map(|v| rec(v + 1, n, left - 1, acc | (1u64 << v), accept))
    }
    if k > n {
        return None;
    }
    rec(0, n, k, 0, &mut accept)
}

/// Calls `visit` once for every connected `k`-subset whose smallest member
/// is `root`.
///
/// Binary include/exclude branching over the frontier: `chosen` is the
/// current connected set, `frontier` its neighbors not yet decided, and
/// `banned` the vertices excluded on this branch (plus everything below
/// `root`). Each connected set is reached along exactly one branch.
pub(crate) fn for_each_connected_rooted(
    nbrs: &[u64],
    root: usize,
    k: usize,
    visit: &mut dyn FnMut(u64),
) {
    fn rec(nbrs: &[u64], chosen: u64, mut frontier: u64, mut banned: u64, left: usize, visit: &mut dyn FnMut(u64)) {
        if left == 0 {
            visit(chosen);
            return;
        }
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            let bit = 1u64 << u;
            frontier &= !bit;
            let grown = chosen | bit;
            rec(nbrs, grown, (frontier | nbrs[u]) & !grown & !banned, banned, left - 1, visit);
            banned |= bit;
        }
    }
    let below = (1u64 << root) - 1;
    let chosen = 1u64 << root;
    rec(nbrs, chosen, nbrs[root] & !below & !chosen, below, k - 1, visit);
}

/// Lexicographically first connected `k`-subset accepted by `accept`.
///
/// Sets are grouped by smallest member; groups are already in
/// lexicographic order, so only the first group with a hit is scanned for
/// its minimum.
pub(crate) fn first_connected(
    nbrs: &[u64],
    n: usize,
    k: usize,
    mut accept: impl FnMut(u64) -> bool,
) -> Option<u64> {
    for root in 0..n {
        if n - root < k {
            break;
        }
        let mut best: Option<u64> = None;
        for_each_connected_rooted(nbrs, root, k, &mut |s| {
            if best.is_none_or(|b| lex_less(s, b)) && accept(s) {
                best = Some(s);
            }
        });
        if best.is_some() {
            return best;
        }
    }
    None
}

/// Every connected `k`-subset in lexicographic order of sorted members.
pub fn enumerate_connected_subsets(g: &Graph, k: usize) -> Result<ConnectedSubsets<'_>> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::SizeOutOfRange { k, n });
    }
    let nbrs = SearchLimits::with_max_vertices(MASK_LIMIT).check(g)?;
    Ok(ConnectedSubsets { nbrs, n, k, next_root: 0, buffer: VecDeque::new() })
}

pub struct ConnectedSubsets<'g> {
    nbrs: &'g [u64],
    n: usize,
    k: usize,
    next_root: usize,
    buffer: VecDeque<u64>,
}

impl Iterator for ConnectedSubsets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while self.buffer.is_empty() && self.next_root < self.n {
            let mut group = Vec::new();
            for_each_connected_rooted(self.nbrs, self.next_root, self.k, &mut |s| group.push(s));
            group.sort_unstable_by(|&a, &b| {
                if a == b {
                    std::cmp::Ordering::Equal
                } else if lex_less(a, b) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            });
            self.buffer.extend(group);
            self.next_root += 1;
        }
        self.buffer.pop_front().map(VertexSet::from_mask)
    }
}
