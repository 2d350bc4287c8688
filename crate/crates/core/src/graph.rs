//! Finite undirected multigraphs with stable vertex and edge identities.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::{EdgeId, VertexId};

pub type VertexSet = BTreeSet<VertexId>;

/// A finite multigraph. Parallel edges are allowed, loops are not.
///
/// An optional boundary marks vertices whose neighbourhood in some larger graph
/// was truncated (see windows of generator graphs).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MultiGraph {
    vertices: VertexSet,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    #[serde(skip)]
    adjacency: BTreeMap<VertexId, Vec<(EdgeId, VertexId)>>,
    boundary: VertexSet,
}

impl MultiGraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (EdgeId, VertexId, VertexId)>,
    {
        let vertices: VertexSet = vertices.into_iter().collect();
        let mut g = MultiGraph {
            adjacency: vertices.iter().map(|&v| (v, Vec::new())).collect(),
            vertices,
            ..Default::default()
        };
        for (id, u, v) in edges {
            g.insert_edge(id, u, v)?;
        }
        for list in g.adjacency.values_mut() {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn insert_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::Loop {
                edge: id,
                vertex: u,
            });
        }
        for w in [u, v] {
            if !self.vertices.contains(&w) {
                return Err(Error::UnknownEndpoint {
                    edge: id,
                    vertex: w,
                });
            }
        }
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        self.edges.insert(id, (u.min(v), u.max(v)));
        self.adjacency.get_mut(&u).unwrap().push((id, v));
        self.adjacency.get_mut(&v).unwrap().push((id, u));
        Ok(())
    }

    /// Marks boundary vertices; every one must be a vertex of the graph.
    pub fn with_boundary<B: IntoIterator<Item = VertexId>>(mut self, boundary: B) -> Result<Self> {
        let boundary: VertexSet = boundary.into_iter().collect();
        if let Some(&v) = boundary.iter().find(|v| !self.vertices.contains(v)) {
            return Err(Error::UnknownVertex(v));
        }
        self.boundary = boundary;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    /// Edges as `(id, lo, hi)` in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(u, v))| (e, u, v))
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(&e).copied()
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.keys().copied().collect()
    }

    /// Incident `(edge, neighbour)` pairs in ascending edge order.
    pub fn neighbors(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        self.adjacency.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Distinct neighbours, ascending.
    pub fn neighbor_set(&self, v: VertexId) -> VertexSet {
        self.neighbors(v).iter().map(|&(_, w)| w).collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Number of edges of `d` at `v`.
    pub fn degree_in(&self, v: VertexId, d: &EdgeSet) -> usize {
        self.neighbors(v)
            .iter()
            .filter(|(e, _)| d.contains(*e))
            .count()
    }

    /// Vertices with odd degree in `d`, ascending.
    pub fn odd_vertices(&self, d: &EdgeSet) -> Vec<VertexId> {
        let mut parity: BTreeMap<VertexId, bool> = BTreeMap::new();
        for e in d.iter() {
            if let Some((u, v)) = self.endpoints(e) {
                for w in [u, v] {
                    *parity.entry(w).or_default() ^= true;
                }
            }
        }
        parity
            .into_iter()
            .filter(|&(_, odd)| odd)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn boundary(&self) -> &VertexSet {
        &self.boundary
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.boundary.contains(&v)
    }

    pub fn interior(&self) -> VertexSet {
        self.vertices.difference(&self.boundary).copied().collect()
    }

    /// Checks that every edge of `d` belongs to the graph.
    pub fn check_edges(&self, d: &EdgeSet) -> Result<()> {
        match d.iter().find(|e| !self.has_edge(*e)) {
            Some(e) => Err(Error::UnknownEdge(e)),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `keep`; boundary marks are restricted to it.
    pub fn induced(&self, keep: &VertexSet) -> MultiGraph {
        let edges = self
            .edges()
            .filter(|(_, u, v)| keep.contains(u) && keep.contains(v))
            .collect::<Vec<_>>();
        let vertices = self.vertices.intersection(keep).copied();
        let g = MultiGraph::new(vertices, edges).expect("induced subgraph of a valid graph");
        let boundary = self
            .boundary
            .intersection(keep)
            .copied()
            .collect::<Vec<_>>();
        g.with_boundary(boundary)
            .expect("boundary inside induced subgraph")
    }

    /// Vertices reachable from `start` without entering `removed` or crossing `cut`.
    pub fn reach(&self, start: VertexId, removed: &VertexSet, cut: &EdgeSet) -> VertexSet {
        let mut seen = VertexSet::new();
        if removed.contains(&start) || !self.has_vertex(start) {
            return seen;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(u) = queue.pop_front() {
            for &(e, w) in self.neighbors(u) {
                if cut.contains(e) || removed.contains(&w) {
                    continue;
                }
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected components of `G - removed - cut`, ordered by least vertex.
    pub fn components_avoiding(&self, removed: &VertexSet, cut: &EdgeSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for &v in &self.vertices {
            if removed.contains(&v) || seen.contains(&v) {
                continue;
            }
            let comp = self.reach(v, removed, cut);
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new(), &EdgeSet::new())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Fails with the least unreachable vertex when the graph is disconnected.
    pub fn require_connected(&self) -> Result<()> {
        let comps = self.components();
        match comps.get(1) {
            Some(c) => Err(Error::Disconnected(*c.first().unwrap())),
            None => Ok(()),
        }
    }

    /// Whether the subgraph induced by `vs` is connected (the empty set is not).
    pub fn induces_connected(&self, vs: &VertexSet) -> bool {
        let Some(&start) = vs.first() else {
            return false;
        };
        let outside: VertexSet = self.vertices.difference(vs).copied().collect();
        self.reach(start, &outside, &EdgeSet::new()).len() == vs.len()
    }

    /// All edges with exactly one endpoint in `side`.
    pub fn cut_from_bipartition(&self, side: &VertexSet) -> EdgeSet {
        self.edges()
            .filter(|(_, u, v)| side.contains(u) != side.contains(v))
            .map(|(e, _, _)| e)
            .collect()
    }

    /// A side `A` with `E(A, V∖A) = f`, or `None` if `f` is not a cut.
    ///
    /// Components of `G - f` are two-coloured along the edges of `f`; within each
    /// component of `G` the colour class of its least vertex goes into `A`.
    pub fn cut_side(&self, f: &EdgeSet) -> Option<VertexSet> {
        if f.iter().any(|e| !self.has_edge(e)) {
            return None;
        }
        let pieces = self.components_avoiding(&VertexSet::new(), f);
        let mut label: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (i, p) in pieces.iter().enumerate() {
            for &v in p {
                label.insert(v, i);
            }
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); pieces.len()];
        for e in f.iter() {
            let (u, v) = self.endpoints(e).unwrap();
            let (a, b) = (label[&u], label[&v]);
            if a == b {
                return None;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut colour: Vec<Option<bool>> = vec![None; pieces.len()];
        for s in 0..pieces.len() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(true);
            let mut queue = VecDeque::from([s]);
            while let Some(a) = queue.pop_front() {
                let c = colour[a].unwrap();
                for &b in &adj[a] {
                    match colour[b] {
                        None => {
                            colour[b] = Some(!c);
                            queue.push_back(b);
                        }
                        Some(cb) if cb == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side = pieces
            .iter()
            .zip(&colour)
            .filter(|(_, c)| **c == Some(true))
            .flat_map(|(p, _)| p.iter().copied())
            .collect();
        Some(side)
    }

    pub fn is_cut(&self, f: &EdgeSet) -> bool {
        self.cut_side(f).is_some()
    }

    /// Whether `f` is a bond, a minimal nonempty cut.
    ///
    /// Equivalently: every edge of `f` joins two components of `G - f`, and deleting
    /// `f` splits exactly one component of `G` into two.
    pub fn is_bond(&self, f: &EdgeSet) -> bool {
        if f.is_empty() || f.iter().any(|e| !self.has_edge(e)) {
            return false;
        }
        let pieces = self.components_avoiding(&VertexSet::new(), f);
        if pieces.len() != self.components().len() + 1 {
            return false;
        }
        f.iter().all(|e| {
            let (u, v) = self.endpoints(e).unwrap();
            !pieces.iter().any(|p| p.contains(&u) && p.contains(&v))
        })
    }

    /// Whether `f` is the edge set of a cycle: nonempty, connected, every vertex
    /// it touches has degree two in it.
    pub fn is_circuit(&self, f: &EdgeSet) -> bool {
        if f.is_empty() || f.iter().any(|e| !self.has_edge(e)) {
            return false;
        }
        let mut touched = VertexSet::new();
        for e in f.iter() {
            let (u, v) = self.endpoints(e).unwrap();
            touched.insert(u);
            touched.insert(v);
        }
        if touched.iter().any(|&v| self.degree_in(v, f) != 2) {
            return false;
        }
        let outside: EdgeSet = self.edge_set().difference(f);
        let start = *touched.first().unwrap();
        self.reach(start, &VertexSet::new(), &outside).len() == touched.len()
    }

    /// Breadth-first spanning tree from the least vertex, scanning edges in
    /// ascending identity order.
    pub fn spanning_tree(&self) -> Result<SpanningTree> {
        self.require_connected()?;
        let mut edges = EdgeSet::new();
        if let Some(&root) = self.vertices.first() {
            let mut seen = VertexSet::from([root]);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(e, w) in self.neighbors(u) {
                    if seen.insert(w) {
                        edges.insert(e);
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(SpanningTree { edges })
    }

    /// The unique circuit in `tree + chord`.
    pub fn fundamental_circuit(&self, tree: &SpanningTree, chord: EdgeId) -> Result<EdgeSet> {
        let (u, v) = self.endpoints(chord).ok_or(Error::UnknownEdge(chord))?;
        if tree.edges.contains(chord) {
            return Err(Error::InvalidParameter(format!(
                "edge {chord} is a tree edge"
            )));
        }
        let mut circuit = self.tree_path(tree, u, v).ok_or(Error::InvalidParameter(
            "tree does not span the chord".into(),
        ))?;
        circuit.insert(chord);
        Ok(circuit)
    }

    /// The cut between the two components of `tree - edge`.
    pub fn fundamental_cut(&self, tree: &SpanningTree, edge: EdgeId) -> Result<EdgeSet> {
        let (u, _) = self.endpoints(edge).ok_or(Error::UnknownEdge(edge))?;
        if !tree.edges.contains(edge) {
            return Err(Error::InvalidParameter(format!(
                "edge {edge} is not a tree edge"
            )));
        }
        let mut non_tree = self.edge_set().difference(&tree.edges);
        non_tree.insert(edge);
        let side = self.reach(u, &VertexSet::new(), &non_tree);
        Ok(self.cut_from_bipartition(&side))
    }

    fn tree_path(&self, tree: &SpanningTree, from: VertexId, to: VertexId) -> Option<EdgeSet> {
        let mut back: BTreeMap<VertexId, (EdgeId, VertexId)> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        let mut seen = VertexSet::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &(e, w) in self.neighbors(x) {
                if tree.edges.contains(e) && seen.insert(w) {
                    back.insert(w, (e, x));
                    queue.push_back(w);
                }
            }
        }
        if !seen.contains(&to) {
            return None;
        }
        let mut path = EdgeSet::new();
        let mut cur = to;
        while cur != from {
            let (e, prev) = back[&cur];
            path.insert(e);
            cur = prev;
        }
        Some(path)
    }
}

/// Edge set of a spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub edges: EdgeSet,
}

impl SpanningTree {
    /// Edges outside the tree, ascending.
    pub fn chords<'a>(&'a self, g: &'a MultiGraph) -> impl Iterator<Item = EdgeId> + 'a {
        g.edges()
            .map(|(e, _, _)| e)
            .filter(|e| !self.edges.contains(*e))
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn vs<const N: usize>(v: [VertexId; N]) -> VertexSet {
        v.into_iter().collect()
    }

    #[test]
    fn rejects_loops_and_unknown_endpoints() {
        assert_eq!(
            MultiGraph::new([1], [(5, 1, 1)]).unwrap_err(),
            Error::Loop { edge: 5, vertex: 1 }
        );
        assert_eq!(
            MultiGraph::new([1], [(5, 1, 2)]).unwrap_err(),
            Error::UnknownEndpoint { edge: 5, vertex: 2 }
        );
        assert_eq!(
            MultiGraph::new([1, 2], [(5, 1, 2), (5, 2, 1)]).unwrap_err(),
            Error::DuplicateEdge(5)
        );
    }

    #[test]
    fn components_examples() {
        assert!(MultiGraph::default().components().is_empty());
        let two = MultiGraph::new(
            1..=6,
            [
                (1, 1, 2),
                (2, 2, 3),
                (3, 1, 3),
                (4, 4, 5),
                (5, 5, 6),
                (6, 4, 6),
            ],
        )
        .unwrap();
        assert_eq!(two.components(), vec![vs([1, 2, 3]), vs([4, 5, 6])]);
    }

    #[test]
    fn cut_examples() {
        let c4 = cycle(4);
        assert!(c4.cut_from_bipartition(&VertexSet::new()).is_empty());
        assert_eq!(c4.cut_from_bipartition(&vs([1, 3])), c4.edge_set());
        let k3 = complete(3);
        assert_eq!(k3.cut_from_bipartition(&vs([1])), EdgeSet::from([12, 13]));
    }

    #[test]
    fn bond_examples() {
        let c4 = cycle(4);
        assert!(!c4.is_bond(&c4.edge_set()));
        assert!(c4.is_bond(&EdgeSet::from([12, 41])));
        assert!(!c4.is_bond(&EdgeSet::new()));
        assert!(c4.is_cut(&c4.edge_set()));
        assert!(!c4.is_cut(&EdgeSet::from([12])));
    }

    #[test]
    fn cut_side_recovers_bipartition() {
        let k4 = complete(4);
        let f = k4.cut_from_bipartition(&vs([2, 3]));
        let side = k4.cut_side(&f).unwrap();
        assert_eq!(k4.cut_from_bipartition(&side), f);
    }

    #[test]
    fn circuit_recognition() {
        let k4 = complete(4);
        assert!(k4.is_circuit(&EdgeSet::from([12, 23, 34, 14])));
        assert!(!k4.is_circuit(&EdgeSet::from([12, 23, 13, 14])));
        // two disjoint-ish triangles sharing a vertex are not one circuit
        let tp = triangle_pair();
        assert!(!tp.is_circuit(&tp.edge_set()));
        assert!(parallel_pair().is_circuit(&EdgeSet::from([1, 2])));
    }

    #[test]
    fn fundamental_circuit_of_c4() {
        let c4 = cycle(4);
        let tree = c4.spanning_tree().unwrap();
        let chords: Vec<_> = tree.chords(&c4).collect();
        assert_eq!(chords.len(), 1);
        assert_eq!(
            c4.fundamental_circuit(&tree, chords[0]).unwrap(),
            c4.edge_set()
        );
    }

    #[test]
    fn fundamental_cut_of_k4_star() {
        let k4 = complete(4);
        // BFS from vertex 1 gives the star at 1
        let tree = k4.spanning_tree().unwrap();
        assert_eq!(tree.edges, EdgeSet::from([12, 13, 14]));
        // oracle: components {2} and {1,3,4} of tree - 12
        let expected = k4.cut_from_bipartition(&vs([2]));
        assert_eq!(expected, EdgeSet::from([12, 23, 24]));
        assert_eq!(k4.fundamental_cut(&tree, 12).unwrap(), expected);
    }

    #[test]
    fn path_has_no_chords() {
        let p = path(5);
        let tree = p.spanning_tree().unwrap();
        assert_eq!(tree.chords(&p).count(), 0);
    }

    #[test]
    fn spanning_tree_needs_connectivity() {
        let g = MultiGraph::new([1, 2, 3], [(1, 1, 2)]).unwrap();
        assert_eq!(g.spanning_tree().unwrap_err(), Error::Disconnected(3));
    }

    #[test]
    fn fundamental_circuits_meet_fundamental_cuts_evenly() {
        let g = complete(5);
        let tree = g.spanning_tree().unwrap();
        for chord in tree.chords(&g) {
            let c = g.fundamental_circuit(&tree, chord).unwrap();
            for t in tree.edges.iter() {
                let f = g.fundamental_cut(&tree, t).unwrap();
                assert!(crate::is_orthogonal(&c, &f));
            }
        }
    }
}
