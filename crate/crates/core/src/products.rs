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

//! Strong and lexicographic graph products.
//!
//! Product vertex `(i, j)` with `i` in `G` and `j` in `H` is stored at the
//! row-major index `i * |V(H)| + j`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::format::serialize_graph;
use crate::{Error, Graph, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Strong,
    Lex,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Strong => "strong",
            ProductKind::Lex => "lex",
        })
    }
}

impl FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "strong" => Ok(ProductKind::Strong),
            "lex" | "lexicographic" => Ok(ProductKind::Lex),
            other => Err(format!("unknown product kind {other:?} (expected strong or lex)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductIndexing {
    /// Order of the left factor.
    pub n: usize,
    /// Order of the right factor.
    pub m: usize,
}

impl ProductIndexing {
    pub fn new(n: usize, m: usize) -> ProductIndexing {
        ProductIndexing { n, m }
    }

    #[inline]
    pub fn flatten(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n && j < self.m);
        i * self.m + j
    }

    #[inline]
    pub fn unflatten(&self, x: usize) -> (usize, usize) {
        (x / self.m, x % self.m)
    }

    pub fn len(&self) -> usize {
        self.n * self.m
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The fiber `{(i, j) : i in G}` for a fixed `j`.
    pub fn fiber(&self, j: usize) -> VertexSet {
        (0..self.n).map(|i| self.flatten(i, j)).collect()
    }
}

fn build(g: &Graph, h: &Graph, adjacent: impl Fn(usize, usize, usize, usize) -> bool) -> (Graph, ProductIndexing) {
    let idx = ProductIndexing::new(g.vertex_count(), h.vertex_count());
    let adj = (0..idx.len())
        .map(|x| {
            let (i, j) = idx.unflatten(x);
            (0..idx.len())
                .filter(|&y| {
                    let (k, l) = idx.unflatten(y);
                    (i, j) != (k, l) && adjacent(i, j, k, l)
                })
                .collect()
        })
        .collect();
    (Graph::from_sorted_adjacency(adj), idx)
}

/// `G ⊠ H`: each coordinate equal or adjacent, not both equal.
pub fn strong_product(g: &Graph, h: &Graph) -> (Graph, ProductIndexing) {
    build(g, h, |i, j, k, l| (i == k || g.has_edge(i, k)) && (j == l || h.has_edge(j, l)))
}

/// `G ∘ H`: adjacent in `G`, or same `G` vertex and adjacent in `H`.
pub fn lex_product(g: &Graph, h: &Graph) -> (Graph, ProductIndexing) {
    build(g, h, |i, j, k, l| g.has_edge(i, k) || (i == k && h.has_edge(j, l)))
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> (Graph, ProductIndexing) {
    match kind {
        ProductKind::Strong => strong_product(g, h),
        ProductKind::Lex => lex_product(g, h),
    }
}

/// `a × b` as product vertex ids.
pub fn lift_set(idx: &ProductIndexing, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    for (set, bound) in [(a, idx.n), (b, idx.m)] {
        if let Some(&v) = set.as_slice().last().filter(|&&v| v >= bound) {
            return Err(Error::VertexOutOfRange { vertex: v, n: bound });
        }
    }
    Ok(a.iter()
        .flat_map(|&i| b.iter().map(move |&j| idx.flatten(i, j)))
        .collect())
}

/// Edge-list document preceded by the `# product` indexing comment.
pub fn serialize_product(kind: ProductKind, idx: &ProductIndexing, p: &Graph) -> String {
    format!("# product {kind} n={} m={}\n{}", idx.n, idx.m, serialize_graph(p))
}
