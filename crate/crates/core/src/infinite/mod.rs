//! Locally finite infinite graphs given by neighbour oracles, and their finite
//! windows: induced balls around a root with the outer sphere marked as boundary.
//!
//! Ends are generator metadata. Vertex and edge identities are closed-form
//! functions of each generator's coordinates, so windows of different radii agree
//! on their overlap.

mod catalog;

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexSet};
use crate::{EdgeId, VertexId};

pub use catalog::{
    catalog, generator, CliqueChain, DoubledGrid, Grid, Ladder, SubdividedLadder, GENERATOR_NAMES,
};

/// Combinatorial vertex-degree of an end: the maximum number of disjoint rays in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EndDegree {
    Finite(usize),
    Infinite,
}

impl EndDegree {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            EndDegree::Finite(d) => d >= k,
            EndDegree::Infinite => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndInfo {
    pub name: &'static str,
    pub vertex_degree: EndDegree,
}

/// A finitely presented locally finite graph.
pub trait Generator: Send + Sync {
    fn name(&self) -> &'static str;

    /// One-line description of the construction.
    fn description(&self) -> &'static str;

    fn root(&self) -> VertexId;

    /// Incident `(edge, neighbour)` pairs sorted by edge identity. Must be
    /// symmetric: `u` lists `(e, v)` iff `v` lists `(e, u)`.
    fn neighbors(&self, v: VertexId) -> Vec<(EdgeId, VertexId)>;

    /// Human-readable coordinates of a vertex.
    fn label(&self, v: VertexId) -> String;

    fn ends(&self) -> Vec<EndInfo>;

    /// How many pairwise disjoint canonical rays the end supplies (`None`: unboundedly many).
    fn ray_family_size(&self, end: usize) -> Option<usize>;

    /// Vertex at `position` along canonical ray `index` of `end`. Rays with distinct
    /// indices are vertex-disjoint.
    fn ray_vertex(&self, end: usize, index: usize, position: usize) -> Option<VertexId>;

    /// Membership of an edge in the distinguished set `D`, if the generator has one.
    fn distinguished(&self, _e: EdgeId) -> Option<bool> {
        None
    }

    fn has_distinguished(&self) -> bool {
        false
    }

    /// A sequence of vertices converging to the end, used as fan sources.
    fn fan_sources(&self, _count: usize) -> Vec<VertexId> {
        Vec::new()
    }

    /// Pairs `(v_i, w_i)` converging to the end, used for linkage studies.
    fn linkage_pairs(&self, _count: usize) -> Vec<(VertexId, VertexId)> {
        Vec::new()
    }
}

/// The induced ball of radius `radius` around the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub graph: MultiGraph,
    pub radius: usize,
    /// Distance from the root, for every window vertex.
    pub distance: BTreeMap<VertexId, usize>,
}

impl Window {
    /// Vertices at exactly distance `d`.
    pub fn layer(&self, d: usize) -> VertexSet {
        self.distance
            .iter()
            .filter(|(_, &x)| x == d)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Vertices at distance at most `d`.
    pub fn ball(&self, d: usize) -> VertexSet {
        self.distance
            .iter()
            .filter(|(_, &x)| x <= d)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.distance.contains_key(&v)
    }

    /// The distinguished set of `gen` restricted to the window's edges.
    pub fn distinguished(&self, gen: &dyn Generator) -> EdgeSet {
        self.graph
            .edges()
            .map(|(e, _, _)| e)
            .filter(|&e| gen.distinguished(e) == Some(true))
            .collect()
    }
}

/// Breadth-first ball of radius `r` around the root, boundary at distance exactly `r`.
pub fn window(gen: &dyn Generator, r: usize) -> Window {
    let root = gen.root();
    let mut distance = BTreeMap::from([(root, 0usize)]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let d = distance[&v];
        if d == r {
            continue;
        }
        for (_, w) in gen.neighbors(v) {
            if let std::collections::btree_map::Entry::Vacant(slot) = distance.entry(w) {
                slot.insert(d + 1);
                queue.push_back(w);
            }
        }
    }
    let mut edges = BTreeMap::new();
    for &v in distance.keys() {
        for (e, w) in gen.neighbors(v) {
            if distance.contains_key(&w) {
                edges.insert(e, (v.min(w), v.max(w)));
            }
        }
    }
    let graph = MultiGraph::new(
        distance.keys().copied(),
        edges.into_iter().map(|(e, (u, v))| (e, u, v)),
    )
    .expect("oracle produces a valid graph")
    .with_boundary(distance.iter().filter(|(_, &d)| d == r).map(|(&v, _)| v))
    .expect("boundary inside window");
    Window {
        graph,
        radius: r,
        distance,
    }
}

/// A canonical ray truncated to a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RayPath {
    pub end: usize,
    pub index: usize,
    pub vertices: Vec<VertexId>,
}

impl RayPath {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("ray paths are nonempty")
    }
}

fn check_end(gen: &dyn Generator, end: usize) -> Result<()> {
    if end >= gen.ends().len() {
        return Err(Error::Generator(format!("{} has no end {end}", gen.name())));
    }
    Ok(())
}

/// The longest initial segment of a canonical ray inside `window(r)`.
pub fn truncate_ray(gen: &dyn Generator, end: usize, index: usize, r: usize) -> Result<RayPath> {
    truncate_ray_in(gen, &window(gen, r), end, index)
}

pub fn truncate_ray_in(
    gen: &dyn Generator,
    w: &Window,
    end: usize,
    index: usize,
) -> Result<RayPath> {
    check_end(gen, end)?;
    if gen.ray_family_size(end).is_some_and(|n| index >= n) {
        return Err(Error::Generator(format!(
            "{} supplies only {} disjoint rays for end {end}",
            gen.name(),
            gen.ray_family_size(end).unwrap()
        )));
    }
    let mut vertices = Vec::new();
    for position in 0.. {
        match gen.ray_vertex(end, index, position) {
            Some(v) if w.contains(v) => vertices.push(v),
            _ => break,
        }
    }
    if vertices.is_empty() {
        return Err(Error::Generator(format!(
            "ray {index} of {} starts outside the radius-{} window; increase r",
            gen.name(),
            w.radius
        )));
    }
    Ok(RayPath {
        end,
        index,
        vertices,
    })
}

/// `count` pairwise disjoint canonical ray truncations, each reaching the boundary.
pub fn disjoint_rays(
    gen: &dyn Generator,
    end: usize,
    count: usize,
    r: usize,
) -> Result<Vec<RayPath>> {
    check_end(gen, end)?;
    if let Some(n) = gen.ray_family_size(end) {
        if count > n {
            return Err(Error::Generator(format!(
                "{} cannot supply {count} disjoint rays: end vertex-degree is {n}",
                gen.name()
            )));
        }
    }
    let w = window(gen, r);
    let mut rays = Vec::with_capacity(count);
    for index in 0..count {
        let ray = truncate_ray_in(gen, &w, end, index)?;
        if !w.graph.is_boundary(ray.last()) {
            return Err(Error::Generator(format!(
                "ray {index} of {} does not reach the boundary of the radius-{r} window; increase r",
                gen.name()
            )));
        }
        rays.push(ray);
    }
    Ok(rays)
}

/// The part inside `window(r)` of `C(S, ω)`: the component of the window minus `S`
/// that contains the last window vertex of the canonical ray of `end`.
pub fn component_cs(gen: &dyn Generator, r: usize, s: &VertexSet, end: usize) -> Result<VertexSet> {
    component_cs_in(gen, &window(gen, r), s, end)
}

pub fn component_cs_in(
    gen: &dyn Generator,
    w: &Window,
    s: &VertexSet,
    end: usize,
) -> Result<VertexSet> {
    if let Some(&v) = s.iter().find(|v| !w.contains(**v)) {
        return Err(Error::UnknownVertex(v));
    }
    let ray = truncate_ray_in(gen, w, end, 0)?;
    let tail = ray.last();
    if s.contains(&tail) {
        return Err(Error::Generator(format!(
            "the canonical ray leaves the radius-{} window inside S; increase r",
            w.radius
        )));
    }
    Ok(w.graph.reach(tail, s, &EdgeSet::new()))
}
