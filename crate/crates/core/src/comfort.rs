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

//! Less-dispersive sets and comfortable teams.
//!
//! A set `D` is less dispersive when every member is strictly closer to
//! the rest of `<D>` than it is to the rest of `G`:
//! `e_<D>(v) < e_G(v)` for all `v` in `D`. A comfortable team is a
//! dominating, connected, less-dispersive set. Because a disconnected `<D>`
//! gives its members infinite eccentricity, less dispersive already implies
//! connected.

use serde::Serialize;

use crate::domination::{first_connected, SearchLimits};
use crate::graph::{closed_neighborhood, masked_eccentricity};
use crate::products::{lex_product, lift_set, strong_product, ProductIndexing};
use crate::{is_dominating, Distance, Error, Graph, Result, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MemberEccentricity {
    pub vertex: usize,
    /// `e_G(v)`.
    pub in_graph: Distance,
    /// `e_<D>(v)`.
    pub in_team: Distance,
}

impl MemberEccentricity {
    pub fn reduced(&self) -> bool {
        self.in_team < self.in_graph
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LessDispersion {
    pub holds: bool,
    pub members: Vec<MemberEccentricity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TeamDiagnosis {
    pub dominating: bool,
    pub connected: bool,
    pub less_dispersive: bool,
    pub comfortable: bool,
    pub per_member: Vec<MemberEccentricity>,
}

/// Outcome of a minimum comfortable team search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComfortVerdict {
    pub exists: bool,
    pub size: Option<usize>,
    pub team: Option<VertexSet>,
    /// Largest subset size at which every candidate was ruled out.
    pub searched_through: usize,
}

impl ComfortVerdict {
    pub(crate) fn found(team: VertexSet) -> ComfortVerdict {
        let k = team.len();
        ComfortVerdict { exists: true, size: Some(k), team: Some(team), searched_through: k - 1 }
    }

    pub(crate) fn absent(searched_through: usize) -> ComfortVerdict {
        ComfortVerdict { exists: false, size: None, team: None, searched_through }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

pub fn is_less_dispersive(g: &Graph, s: &VertexSet) -> Result<LessDispersion> {
    let (team, _) = g.induced_subgraph(s)?;
    require_connected(g)?;
    let whole = g.eccentricity_profile();
    let inner = team.eccentricity_profile();
    let members: Vec<MemberEccentricity> = s
        .iter()
        .zip(inner.ecc)
        .map(|(&v, in_team)| MemberEccentricity { vertex: v, in_graph: whole.ecc[v], in_team })
        .collect();
    let holds = members.iter().all(MemberEccentricity::reduced);
    Ok(LessDispersion { holds, members })
}

/// Evaluates the three team conditions independently.
pub fn is_comfortable_team(g: &Graph, s: &VertexSet) -> Result<TeamDiagnosis> {
    let spread = is_less_dispersive(g, s)?;
    let dominating = is_dominating(g, s)?;
    let connected = g.is_connected_set(s)?;
    Ok(TeamDiagnosis {
        dominating,
        connected,
        less_dispersive: spread.holds,
        comfortable: dominating && connected && spread.holds,
        per_member: spread.members,
    })
}

/// Exact minimum comfortable team, with default search limits.
pub fn min_comfortable_team(g: &Graph) -> Result<ComfortVerdict> {
    min_comfortable_team_with(g, &SearchLimits::default())
}

/// Minimum comfortable team over connected subsets of size `1..=max_size`.
///
/// With `max_size` below `n`, `exists == false` only rules out sizes up to
/// `searched_through`; it is a non-existence certificate only when
/// `searched_through == n`.
pub fn min_comfortable_team_with(g: &Graph, limits: &SearchLimits) -> Result<ComfortVerdict> {
    require_connected(g)?;
    let n = g.vertex_count();
    if n == 1 {
        return Err(Error::TrivialGraph);
    }
    let nbrs = limits.check(g)?;
    let full = g.full_mask();
    let ecc: Vec<usize> = g
        .eccentricity_profile()
        .ecc
        .iter()
        .map(|e| e.finite().expect("connected"))
        .collect();

    let last = limits.last_size(n);
    for k in 1..=last {
        let hit = first_connected(nbrs, n, k, |s| {
            closed_neighborhood(nbrs, s) == full && reduces_every_member(nbrs, &ecc, s)
        });
        if let Some(mask) = hit {
            return Ok(ComfortVerdict::found(VertexSet::from_mask(mask)));
        }
    }
    Ok(ComfortVerdict::absent(last))
}

fn reduces_every_member(nbrs: &[u64], ecc: &[usize], s: u64) -> bool {
    let mut rest = s;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        match masked_eccentricity(nbrs, s, v) {
            Some(e) if e < ecc[v] => {}
            _ => return false,
        }
        rest &= rest - 1;
    }
    true
}

/// Reference answer from plain powerset enumeration, for cross-checking
/// [`min_comfortable_team`] on graphs with at most 12 vertices.
pub fn brute_force_gamma_comf(g: &Graph) -> Result<ComfortVerdict> {
    const CAP: usize = 12;
    let n = g.vertex_count();
    if n > CAP {
        return Err(Error::SearchCapExceeded { n, cap: CAP });
    }
    require_connected(g)?;
    if n == 1 {
        return Err(Error::TrivialGraph);
    }
    let mut best: Option<VertexSet> = None;
    for mask in 1u32..(1u32 << n) {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if best.as_ref().is_some_and(|b| s.len() > b.len()) {
            continue;
        }
        let ok = is_dominating(g, &s)?
            && g.is_connected_set(&s)?
            && is_less_dispersive(g, &s)?.holds;
        if !ok {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => s.len() < b.len() || (s.len() == b.len() && s.as_slice() < b.as_slice()),
        };
        if better {
            best = Some(s);
        }
    }
    Ok(match best {
        Some(team) => ComfortVerdict::found(team),
        None => ComfortVerdict::absent(n),
    })
}

fn require_team(g: &Graph, s: &VertexSet, which: &str) -> Result<()> {
    require_connected(g)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if is_comfortable_team(g, s)?.comfortable {
        Ok(())
    } else {
        Err(Error::NotComfortable(format!("{which} {{{s}}}")))
    }
}

/// Lifts comfortable teams of both factors to `s1 × s2` in `G ⊠ H` and
/// checks that the lift is a comfortable team there.
pub fn strong_team_construction(
    g: &Graph,
    h: &Graph,
    s1: &VertexSet,
    s2: &VertexSet,
) -> Result<(VertexSet, ProductIndexing)> {
    require_team(g, s1, "left team")?;
    require_team(h, s2, "right team")?;
    let (p, idx) = strong_product(g, h);
    let lifted = lift_set(&idx, s1, s2)?;
    if !is_comfortable_team(&p, &lifted)?.comfortable {
        return Err(Error::ConstructionFailed(format!(
            "{{{s1}}} x {{{s2}}} is not comfortable in the strong product"
        )));
    }
    Ok((lifted, idx))
}

/// Copies a comfortable team of `G` into the fiber over `j` in `G ∘ H`.
/// Requires `r(G) >= 2`.
pub fn lex_team_construction(
    g: &Graph,
    h: &Graph,
    s: &VertexSet,
    j: usize,
) -> Result<(VertexSet, ProductIndexing)> {
    require_connected(g)?;
    require_connected(h)?;
    h.check_vertex(j)?;
    let r = g.eccentricity_profile().radius_value();
    if r.is_none_or(|r| r < 2) {
        return Err(Error::Hypothesis(format!(
            "left factor radius is {}, fiber construction needs radius >= 2",
            r.map_or("inf".to_string(), |r| r.to_string())
        )));
    }
    require_team(g, s, "team")?;
    let (p, idx) = lex_product(g, h);
    let fiber: VertexSet = s.iter().map(|&i| idx.flatten(i, j)).collect();
    if !is_comfortable_team(&p, &fiber)?.comfortable {
        return Err(Error::ConstructionFailed(format!(
            "fiber {j} copy of {{{s}}} is not comfortable in the lexicographic product"
        )));
    }
    Ok((fiber, idx))
}

/// Closed-form answers for `G ∘ H` when `G` has a universal vertex.
///
/// * `H` has a universal vertex too (this includes `H = K1`): a product of
///   two universal vertices is universal, so the answer is one vertex.
/// * otherwise `G ∘ H` is 2-self-centered and any edge `(c, 0)(w, 0)` with
///   `c` universal in `G` is a minimum team.
///
/// Returns `Ok(None)` when `G` has no universal vertex. Every witness is
/// re-checked against the product before it is returned.
pub fn lex_radius_fast_paths(g: &Graph, h: &Graph) -> Result<Option<ComfortVerdict>> {
    require_connected(g)?;
    require_connected(h)?;
    if g.vertex_count() < 2 {
        return Ok(None);
    }
    let Some(&c) = g.universal_vertices().first() else {
        return Ok(None);
    };
    let (p, idx) = lex_product(g, h);
    let team = match h.universal_vertices().first() {
        Some(&x) => VertexSet::singleton(idx.flatten(c, x)),
        None => {
            let w = if c == 0 { 1 } else { 0 };
            VertexSet::new([idx.flatten(c, 0), idx.flatten(w, 0)])
        }
    };
    if !is_comfortable_team(&p, &team)?.comfortable {
        return Err(Error::ConstructionFailed(format!(
            "radius-1 witness {{{team}}} is not comfortable in the lexicographic product"
        )));
    }
    Ok(Some(ComfortVerdict::found(team)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
    }

    fn pairs(d: &LessDispersion) -> Vec<(Distance, Distance)> {
        d.members.iter().map(|m| (m.in_team, m.in_graph)).collect()
    }

    #[test]
    fn less_dispersive_examples() {
        let f = Distance::Finite;
        let d = is_less_dispersive(&path(6), &VertexSet::new([1, 2, 3, 4])).unwrap();
        assert!(d.holds);
        assert_eq!(pairs(&d), vec![(f(3), f(4)), (f(2), f(3)), (f(2), f(3)), (f(3), f(4))]);

        let d = is_less_dispersive(&cycle(5), &VertexSet::new([0, 1, 2])).unwrap();
        assert!(!d.holds);
        assert!(!d.members[0].reduced());
        assert!(d.members[1].reduced());

        assert!(is_less_dispersive(&star(5), &VertexSet::singleton(0)).unwrap().holds);

        let gap = is_less_dispersive(&cycle(5), &VertexSet::new([0, 2])).unwrap();
        assert!(!gap.holds);
        assert_eq!(gap.members[0].in_team, Distance::Infinite);
    }

    #[test]
    fn less_dispersive_errors() {
        assert_eq!(is_less_dispersive(&path(3), &VertexSet::default()), Err(Error::EmptySet));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_less_dispersive(&split, &VertexSet::singleton(0)), Err(Error::Disconnected));
    }

    #[test]
    fn diagnosis_examples() {
        assert!(is_comfortable_team(&path(6), &VertexSet::new([1, 2, 3, 4])).unwrap().comfortable);

        let d = is_comfortable_team(&cycle(5), &VertexSet::new([0, 1])).unwrap();
        assert_eq!((d.dominating, d.connected, d.less_dispersive, d.comfortable), (false, true, true, false));

        let g = cycle(5);
        let d = is_comfortable_team(&g, &g.vertices()).unwrap();
        assert_eq!((d.dominating, d.less_dispersive, d.comfortable), (true, false, false));
    }

    #[test]
    fn minimum_teams() {
        let v = min_comfortable_team(&path(6)).unwrap();
        assert_eq!(v, ComfortVerdict::found(VertexSet::new([1, 2, 3, 4])));
        assert_eq!(v.searched_through, 3);

        assert_eq!(min_comfortable_team(&cycle(5)).unwrap(), ComfortVerdict::absent(5));
        assert_eq!(min_comfortable_team(&cycle(6)).unwrap(), ComfortVerdict::absent(6));

        let v = min_comfortable_team(&star(5)).unwrap();
        assert_eq!(v.team, Some(VertexSet::singleton(0)));
        assert_eq!(min_comfortable_team(&path(4)).unwrap().team, Some(VertexSet::new([1, 2])));
    }

    #[test]
    fn minimum_team_errors() {
        assert_eq!(min_comfortable_team(&Graph::complete(1).unwrap()), Err(Error::TrivialGraph));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_comfortable_team(&split), Err(Error::Disconnected));
        assert!(matches!(min_comfortable_team(&path(17)), Err(Error::SearchCapExceeded { .. })));
        assert!(matches!(brute_force_gamma_comf(&path(13)), Err(Error::SearchCapExceeded { .. })));
        assert_eq!(brute_force_gamma_comf(&Graph::complete(1).unwrap()), Err(Error::TrivialGraph));
    }

    #[test]
    fn bounded_search_reports_depth() {
        let limits = SearchLimits::default().up_to_size(3);
        assert_eq!(min_comfortable_team_with(&path(6), &limits).unwrap(), ComfortVerdict::absent(3));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_gamma_comf(&path(4)).unwrap().team, Some(VertexSet::new([1, 2])));
        assert_eq!(brute_force_gamma_comf(&path(6)).unwrap().size, Some(4));
        assert_eq!(brute_force_gamma_comf(&cycle(5)).unwrap(), ComfortVerdict::absent(5));
    }

    #[test]
    fn strong_construction() {
        let s = VertexSet::new([1, 2, 3, 4]);
        let (team, _) = strong_team_construction(&path(6), &path(6), &s, &s).unwrap();
        assert_eq!(team.len(), 16);

        let k2 = Graph::complete(2).unwrap();
        let zero = VertexSet::singleton(0);
        let (team, idx) = strong_team_construction(&k2, &k2, &zero, &zero).unwrap();
        assert_eq!(team, VertexSet::singleton(idx.flatten(0, 0)));

        let (team, _) = strong_team_construction(&path(4), &path(6), &VertexSet::new([1, 2]), &s).unwrap();
        assert_eq!(team.len(), 8);

        let bad = strong_team_construction(&path(6), &path(6), &VertexSet::new([1, 2]), &s);
        assert!(matches!(bad, Err(Error::NotComfortable(_))));
    }

    #[test]
    fn lex_construction() {
        let k2 = Graph::complete(2).unwrap();
        let s = VertexSet::new([1, 2]);
        let (t0, _) = lex_team_construction(&path(4), &k2, &s, 0).unwrap();
        assert_eq!(t0, VertexSet::new([2, 4]));
        let (t1, _) = lex_team_construction(&path(4), &k2, &s, 1).unwrap();
        assert_eq!(t1, VertexSet::new([3, 5]));

        let c5 = cycle(5);
        assert!(matches!(
            lex_team_construction(&c5, &k2, &VertexSet::new([0, 1, 2]), 0),
            Err(Error::NotComfortable(_))
        ));
        assert!(matches!(
            lex_team_construction(&star(4), &k2, &VertexSet::singleton(0), 0),
            Err(Error::Hypothesis(_))
        ));
        assert!(lex_team_construction(&path(4), &k2, &s, 2).is_err());
    }

    #[test]
    fn fast_paths() {
        let k3 = Graph::complete(3).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(lex_radius_fast_paths(&k3, &k2).unwrap().unwrap().size, Some(1));

        let v = lex_radius_fast_paths(&star(4), &path(3)).unwrap().unwrap();
        assert_eq!(v.size, Some(1));
        let v = lex_radius_fast_paths(&star(4), &path(4)).unwrap().unwrap();
        assert_eq!(v.size, Some(2));
        assert_eq!(v.team, Some(VertexSet::new([0, 4])));

        assert_eq!(lex_radius_fast_paths(&path(4), &k2).unwrap(), None);
        assert_eq!(lex_radius_fast_paths(&star(3), &Graph::complete(1).unwrap()).unwrap().unwrap().size, Some(1));
    }
}
