//! Vertex-disjoint paths, fans and linkages via unit vertex-capacity max flow.
//!
//! Vertex-disjointness only depends on the underlying simple graph, so parallel
//! edges collapse to a single arc here.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexSet};
use crate::VertexId;

const SOURCE: usize = 0;
const SINK: usize = 1;

struct Arc {
    to: usize,
    cap: u32,
}

/// Split network: vertex `v` with index `i` becomes `in = 2 + 2i`, `out = 3 + 2i`.
struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    index: BTreeMap<VertexId, usize>,
    ids: Vec<VertexId>,
}

impl Network {
    fn build(g: &MultiGraph, allowed: &VertexSet, from: &VertexSet, to: &VertexSet) -> Self {
        let ids: Vec<VertexId> = allowed.iter().copied().collect();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut net = Network {
            arcs: Vec::new(),
            out: vec![Vec::new(); 2 + 2 * ids.len()],
            index,
            ids,
        };
        let big = net.ids.len() as u32 + 1;
        for i in 0..net.ids.len() {
            net.add(2 + 2 * i, 3 + 2 * i, 1);
        }
        for &v in from.iter().filter(|v| allowed.contains(v)) {
            let i = net.index[&v];
            net.add(SOURCE, 2 + 2 * i, big);
        }
        for &v in to.iter().filter(|v| allowed.contains(v)) {
            let i = net.index[&v];
            net.add(3 + 2 * i, SINK, big);
        }
        for (i, &v) in net.ids.clone().iter().enumerate() {
            for w in g.neighbor_set(v) {
                if let Some(&j) = net.index.get(&w) {
                    net.add(3 + 2 * i, 2 + 2 * j, big);
                }
            }
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// One shortest augmenting path; returns false when none exists.
    fn augment(&mut self) -> bool {
        let mut via: Vec<Option<usize>> = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[SOURCE] = true;
        let mut queue = VecDeque::from([SOURCE]);
        while let Some(x) = queue.pop_front() {
            if x == SINK {
                break;
            }
            for &a in &self.out[x] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    via[arc.to] = Some(a);
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[SINK] {
            return false;
        }
        let mut x = SINK;
        while let Some(a) = via[x] {
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            x = self.arcs[a ^ 1].to;
        }
        true
    }

    fn residual_reach(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[SOURCE] = true;
        let mut queue = VecDeque::from([SOURCE]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }

    /// Flow on a forward arc (even index) is the capacity of its reverse.
    fn flow(&self, a: usize) -> u32 {
        self.arcs[a ^ 1].cap
    }

    fn paths(&self) -> Vec<Vec<VertexId>> {
        let mut used = vec![0u32; self.arcs.len()];
        let mut paths = Vec::new();
        for &a in &self.out[SOURCE] {
            if a % 2 != 0 {
                continue;
            }
            while used[a] < self.flow(a) {
                used[a] += 1;
                let mut node = self.arcs[a].to;
                let mut path = Vec::new();
                loop {
                    if node == SINK {
                        break;
                    }
                    if node.is_multiple_of(2) {
                        path.push(self.ids[(node - 2) / 2]);
                    }
                    let next = self.out[node]
                        .iter()
                        .copied()
                        .find(|&b| b % 2 == 0 && used[b] < self.flow(b))
                        .expect("flow conservation");
                    used[next] += 1;
                    node = self.arcs[next].to;
                }
                paths.push(path);
            }
        }
        paths
    }
}

/// A maximum family of disjoint `X`–`Y` paths with a separator of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointPaths {
    pub paths: Vec<Vec<VertexId>>,
    /// Meets every `X`–`Y` path avoiding the forbidden set; `None` when the search
    /// stopped at a requested limit before reaching the maximum.
    pub separator: Option<VertexSet>,
}

fn trim(path: Vec<VertexId>, from: &VertexSet, to: &VertexSet) -> Vec<VertexId> {
    let start = path.iter().rposition(|v| from.contains(v)).unwrap_or(0);
    let path = &path[start..];
    let end = path
        .iter()
        .position(|v| to.contains(v))
        .unwrap_or(path.len() - 1);
    path[..=end].to_vec()
}

fn disjoint_paths_limited(
    g: &MultiGraph,
    from: &VertexSet,
    to: &VertexSet,
    forbidden: &VertexSet,
    limit: Option<usize>,
) -> DisjointPaths {
    let allowed: VertexSet = g.vertices().difference(forbidden).copied().collect();
    let mut net = Network::build(g, &allowed, from, to);
    let mut count = 0;
    let mut exhausted = false;
    while limit.is_none_or(|l| count < l) {
        if !net.augment() {
            exhausted = true;
            break;
        }
        count += 1;
    }
    let paths: Vec<_> = net.paths().into_iter().map(|p| trim(p, from, to)).collect();
    let separator = exhausted.then(|| {
        let reach = net.residual_reach();
        net.ids
            .iter()
            .enumerate()
            .filter(|(i, _)| reach[2 + 2 * i] && !reach[3 + 2 * i])
            .map(|(_, &v)| v)
            .collect()
    });
    DisjointPaths { paths, separator }
}

/// Maximum family of pairwise vertex-disjoint `X`–`Y` paths avoiding `forbidden`,
/// certified by a minimum separator.
pub fn vertex_disjoint_paths(
    g: &MultiGraph,
    from: &VertexSet,
    to: &VertexSet,
    forbidden: &VertexSet,
) -> Result<DisjointPaths> {
    if from.is_empty() {
        return Err(Error::EmptyEndpoints("source"));
    }
    if to.is_empty() {
        return Err(Error::EmptyEndpoints("target"));
    }
    if let Some(&v) = forbidden
        .iter()
        .find(|v| from.contains(v) || to.contains(v))
    {
        return Err(Error::ForbiddenEndpoint(v));
    }
    Ok(disjoint_paths_limited(g, from, to, forbidden, None))
}

/// A subdivided star: paths from `center` to a target set, disjoint except at the center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fan {
    pub center: VertexId,
    pub paths: Vec<Vec<VertexId>>,
}

impl Fan {
    pub fn size(&self) -> usize {
        self.paths.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.paths.iter().flatten().copied().collect()
    }

    /// Leaves, one per path.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.paths.iter().map(|p| *p.last().unwrap()).collect()
    }

    /// Re-checks the fan against `g` and the target set.
    pub fn is_valid(&self, g: &MultiGraph, targets: &VertexSet) -> bool {
        if targets.contains(&self.center) {
            return false;
        }
        let mut seen = VertexSet::new();
        for p in &self.paths {
            if p.len() < 2 || p[0] != self.center || !is_walk(g, p) {
                return false;
            }
            let (last, inner) = (p[p.len() - 1], &p[1..p.len() - 1]);
            if !targets.contains(&last) || inner.iter().any(|v| targets.contains(v)) {
                return false;
            }
            if !p[1..].iter().all(|&v| seen.insert(v)) {
                return false;
            }
        }
        true
    }
}

/// `k` internally disjoint paths between two vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Linkage {
    pub endpoints: (VertexId, VertexId),
    pub paths: Vec<Vec<VertexId>>,
}

impl Linkage {
    pub fn vertices(&self) -> VertexSet {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn is_valid(&self, g: &MultiGraph) -> bool {
        let (x, y) = self.endpoints;
        let mut inner_seen = VertexSet::new();
        let mut direct = 0;
        for p in &self.paths {
            if p.len() < 2 || p[0] != x || p[p.len() - 1] != y || !is_walk(g, p) {
                return false;
            }
            if p.len() == 2 {
                direct += 1;
            }
            let inner = &p[1..p.len() - 1];
            if inner
                .iter()
                .any(|&v| v == x || v == y || !inner_seen.insert(v))
            {
                return false;
            }
        }
        direct <= 1
    }
}

fn is_walk(g: &MultiGraph, p: &[VertexId]) -> bool {
    p.windows(2)
        .all(|w| g.neighbors(w[0]).iter().any(|&(_, v)| v == w[1]))
}

/// Result of a fan or linkage search: the object, or a separator certifying that
/// at most `max` paths exist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Search<T> {
    Found(T),
    Blocked { max: usize, separator: VertexSet },
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            Search::Blocked { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }
}

/// A `k`-fan from `u` to `targets` in `g - forbidden`.
///
/// Fans from `u` are disjoint `N(u)`–`targets` paths in `g - u`, so when none of
/// size `k` exists the separator has fewer than `k` vertices; it is a subset of
/// `N(u)` whenever `k` exceeds the degree of `u`.
pub fn k_fan_avoiding(
    g: &MultiGraph,
    u: VertexId,
    targets: &VertexSet,
    k: usize,
    forbidden: &VertexSet,
) -> Result<Search<Fan>> {
    if targets.contains(&u) {
        return Err(Error::InvalidParameter(format!(
            "fan center {u} lies in the target set"
        )));
    }
    if !g.has_vertex(u) {
        return Err(Error::UnknownVertex(u));
    }
    let mut blocked = forbidden.clone();
    blocked.insert(u);
    let neighbours: VertexSet = g.neighbor_set(u).difference(&blocked).copied().collect();
    let targets: VertexSet = targets.difference(&blocked).copied().collect();
    if neighbours.is_empty() || targets.is_empty() {
        return Ok(if k == 0 {
            Search::Found(Fan {
                center: u,
                paths: vec![],
            })
        } else {
            Search::Blocked {
                max: 0,
                separator: VertexSet::new(),
            }
        });
    }
    let found = disjoint_paths_limited(g, &neighbours, &targets, &blocked, Some(k));
    if found.paths.len() >= k {
        let paths = found
            .paths
            .into_iter()
            .map(|p| std::iter::once(u).chain(p).collect())
            .collect();
        return Ok(Search::Found(Fan { center: u, paths }));
    }
    Ok(Search::Blocked {
        max: found.paths.len(),
        separator: found.separator.expect("search ran to exhaustion"),
    })
}

pub fn k_fan(g: &MultiGraph, u: VertexId, targets: &VertexSet, k: usize) -> Result<Search<Fan>> {
    k_fan_avoiding(g, u, targets, k, &VertexSet::new())
}

/// A `k`-linkage between `x` and `y` in `g - forbidden`.
pub fn k_linkage_avoiding(
    g: &MultiGraph,
    x: VertexId,
    y: VertexId,
    k: usize,
    forbidden: &VertexSet,
) -> Result<Search<Linkage>> {
    if x == y {
        return Err(Error::InvalidParameter("linkage endpoints coincide".into()));
    }
    for v in [x, y] {
        if !g.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        if forbidden.contains(&v) {
            return Err(Error::ForbiddenEndpoint(v));
        }
    }
    let mut paths: Vec<Vec<VertexId>> = Vec::new();
    let adjacent = g.neighbor_set(x).contains(&y);
    if adjacent && k > 0 {
        paths.push(vec![x, y]);
    }
    let mut blocked = forbidden.clone();
    blocked.extend([x, y]);
    let from: VertexSet = g.neighbor_set(x).difference(&blocked).copied().collect();
    let to: VertexSet = g.neighbor_set(y).difference(&blocked).copied().collect();
    let mut separator = VertexSet::new();
    if paths.len() < k && !from.is_empty() && !to.is_empty() {
        let found = disjoint_paths_limited(g, &from, &to, &blocked, Some(k - paths.len()));
        separator = found.separator.unwrap_or_default();
        for p in found.paths {
            paths.push(
                std::iter::once(x)
                    .chain(p)
                    .chain(std::iter::once(y))
                    .collect(),
            );
        }
    }
    if paths.len() >= k {
        Ok(Search::Found(Linkage {
            endpoints: (x, y),
            paths,
        }))
    } else {
        Ok(Search::Blocked {
            max: paths.len(),
            separator,
        })
    }
}

pub fn k_linkage(g: &MultiGraph, x: VertexId, y: VertexId, k: usize) -> Result<Search<Linkage>> {
    k_linkage_avoiding(g, x, y, k, &VertexSet::new())
}

/// Greedy family of pairwise disjoint `k`-fans, one attempt per source in order.
/// Each fan is searched in the graph minus the vertices of earlier fans.
pub fn max_disjoint_fans(
    g: &MultiGraph,
    sources: &[VertexId],
    targets: &VertexSet,
    k: usize,
) -> Result<Vec<Fan>> {
    let mut used = VertexSet::new();
    let mut fans = Vec::new();
    for &s in sources {
        if used.contains(&s) || targets.contains(&s) || !g.has_vertex(s) {
            continue;
        }
        if let Search::Found(fan) = k_fan_avoiding(g, s, targets, k, &used)? {
            used.extend(fan.vertices());
            fans.push(fan);
        }
    }
    Ok(fans)
}

/// Greedy family of pairwise disjoint `k`-linkages over the given endpoint pairs.
pub fn max_disjoint_linkages(
    g: &MultiGraph,
    pairs: &[(VertexId, VertexId)],
    k: usize,
) -> Result<Vec<Linkage>> {
    let mut used = VertexSet::new();
    let mut out = Vec::new();
    for &(x, y) in pairs {
        if used.contains(&x) || used.contains(&y) || !g.has_vertex(x) || !g.has_vertex(y) {
            continue;
        }
        if let Search::Found(l) = k_linkage_avoiding(g, x, y, k, &used)? {
            used.extend(l.vertices());
            out.push(l);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    fn vs<const N: usize>(v: [VertexId; N]) -> VertexSet {
        v.into_iter().collect()
    }

    /// All simple paths from a vertex of `from` to `to` meeting `from`/`to` only at
    /// their ends, avoiding `forbidden`.
    fn all_xy_paths(
        g: &MultiGraph,
        from: &VertexSet,
        to: &VertexSet,
        forbidden: &VertexSet,
    ) -> Vec<Vec<VertexId>> {
        fn go(
            g: &MultiGraph,
            p: &mut Vec<VertexId>,
            from: &VertexSet,
            to: &VertexSet,
            forbidden: &VertexSet,
            out: &mut Vec<Vec<VertexId>>,
        ) {
            let last = *p.last().unwrap();
            if to.contains(&last) {
                out.push(p.clone());
                return;
            }
            for w in g.neighbor_set(last) {
                if forbidden.contains(&w) || from.contains(&w) || p.contains(&w) {
                    continue;
                }
                p.push(w);
                go(g, p, from, to, forbidden, out);
                p.pop();
            }
        }
        let mut out = Vec::new();
        for &x in from.iter().filter(|x| !forbidden.contains(x)) {
            go(g, &mut vec![x], from, to, forbidden, &mut out);
        }
        out
    }

    /// Brute-force maximum number of pairwise vertex-disjoint paths from a list.
    fn max_packing(paths: &[Vec<VertexId>]) -> usize {
        fn go(paths: &[Vec<VertexId>], i: usize, used: &mut VertexSet) -> usize {
            if i == paths.len() {
                return 0;
            }
            let skip = go(paths, i + 1, used);
            if paths[i].iter().any(|v| used.contains(v)) {
                return skip;
            }
            used.extend(paths[i].iter().copied());
            let take = 1 + go(paths, i + 1, used);
            for v in &paths[i] {
                used.remove(v);
            }
            skip.max(take)
        }
        go(paths, 0, &mut VertexSet::new())
    }

    #[test]
    fn trivial_path_when_sets_coincide() {
        let g = path(3);
        let r = vertex_disjoint_paths(&g, &vs([2]), &vs([2]), &VertexSet::new()).unwrap();
        assert_eq!(r.paths, vec![vec![2]]);
        assert_eq!(r.separator, Some(vs([2])));
    }

    #[test]
    fn empty_endpoint_sets_are_errors() {
        let g = path(3);
        assert!(vertex_disjoint_paths(&g, &VertexSet::new(), &vs([1]), &VertexSet::new()).is_err());
        assert!(vertex_disjoint_paths(&g, &vs([1]), &VertexSet::new(), &VertexSet::new()).is_err());
        assert!(vertex_disjoint_paths(&g, &vs([1]), &vs([3]), &vs([1])).is_err());
    }

    #[test]
    fn k4_has_three_internally_disjoint_paths() {
        let k4 = complete(4);
        let all = all_xy_paths(&k4, &vs([1]), &vs([4]), &VertexSet::new());
        // paths sharing endpoints 1 and 4: pack on internal vertices only
        let inner: Vec<Vec<VertexId>> = all.iter().map(|p| p[1..p.len() - 1].to_vec()).collect();
        let direct = inner.iter().filter(|p| p.is_empty()).count();
        let oracle = direct
            + max_packing(
                &inner
                    .into_iter()
                    .filter(|p| !p.is_empty())
                    .collect::<Vec<_>>(),
            );
        assert_eq!(oracle, 3);
        let l = k_linkage(&k4, 1, 4, 3).unwrap().found().unwrap();
        assert!(l.is_valid(&k4));
        assert_eq!(l.paths.len(), 3);
        assert!(!k_linkage(&k4, 1, 4, 4).unwrap().is_found());
    }

    #[test]
    fn fan_examples() {
        let k4 = complete(4);
        let fan = k_fan(&k4, 1, &vs([2, 3, 4]), 3).unwrap().found().unwrap();
        assert!(fan.is_valid(&k4, &vs([2, 3, 4])));
        let p = path(4);
        assert!(k_fan(&p, 1, &vs([4]), 1).unwrap().is_found());
        match k_fan(&p, 2, &vs([4]), 2).unwrap() {
            Search::Blocked { max, separator } => {
                assert_eq!(max, 1);
                assert_eq!(separator.len(), 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(k_fan(&p, 2, &vs([2]), 1).is_err());
    }

    #[test]
    fn linkage_examples() {
        let p = path(3);
        let l = k_linkage(&p, 1, 2, 1).unwrap().found().unwrap();
        assert_eq!(l.paths, vec![vec![1, 2]]);
        assert!(!k_linkage(&p, 1, 3, 2).unwrap().is_found());
    }

    #[test]
    fn greedy_fans_are_disjoint() {
        let g = complete(6);
        let targets = vs([5, 6]);
        let fans = max_disjoint_fans(&g, &[1, 2, 3, 4], &targets, 1).unwrap();
        assert_eq!(fans.len(), 2);
        let mut seen = VertexSet::new();
        for f in &fans {
            assert!(f.is_valid(&g, &targets));
            assert!(f.vertices().iter().all(|&v| seen.insert(v)));
        }
        assert!(max_disjoint_fans(&g, &[1], &targets, 3).unwrap().is_empty());
    }

    fn arb_graph() -> impl Strategy<Value = MultiGraph> {
        (2u64..=7).prop_flat_map(|n| {
            let pairs: Vec<(u64, u64)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            let m = pairs.len();
            prop::collection::vec(any::<bool>(), m).prop_map(move |mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&mask)
                    .enumerate()
                    .filter(|(_, (_, &b))| b)
                    .map(|(i, (&(u, v), _))| (i as u64, u, v))
                    .collect();
                MultiGraph::new(0..n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn menger_equality(g in arb_graph(), xs in prop::collection::btree_set(0u64..7, 1..3), ys in prop::collection::btree_set(0u64..7, 1..3)) {
            let xs: VertexSet = xs.into_iter().filter(|v| g.has_vertex(*v)).collect();
            let ys: VertexSet = ys.into_iter().filter(|v| g.has_vertex(*v)).collect();
            prop_assume!(!xs.is_empty() && !ys.is_empty());
            let none = VertexSet::new();
            let r = vertex_disjoint_paths(&g, &xs, &ys, &none).unwrap();
            let sep = r.separator.clone().unwrap();
            prop_assert_eq!(r.paths.len(), sep.len());
            let all = all_xy_paths(&g, &xs, &ys, &none);
            prop_assert_eq!(max_packing(&all), r.paths.len());
            for p in &all {
                prop_assert!(p.iter().any(|v| sep.contains(v)));
            }
            let mut seen = VertexSet::new();
            for p in &r.paths {
                prop_assert!(xs.contains(&p[0]) && ys.contains(p.last().unwrap()));
                prop_assert!(is_walk(&g, p));
                prop_assert!(p.iter().all(|&v| seen.insert(v)));
            }
        }

        #[test]
        fn fans_and_linkages_revalidate(g in arb_graph(), k in 1usize..4) {
            let v: Vec<_> = g.vertices().iter().copied().collect();
            let (u, rest) = v.split_first().unwrap();
            let targets: VertexSet = rest.iter().copied().rev().take(2).collect();
            if let Search::Found(f) = k_fan(&g, *u, &targets, k).unwrap() {
                prop_assert!(f.is_valid(&g, &targets));
                prop_assert_eq!(f.size(), k);
            }
            if let Search::Found(l) = k_linkage(&g, v[0], *v.last().unwrap(), k).unwrap() {
                prop_assert!(l.is_valid(&g));
                prop_assert_eq!(l.paths.len(), k);
            }
        }
    }
}
