//! The generator catalog.

use super::{EndDegree, EndInfo, Generator};
use crate::{EdgeId, VertexId};

pub const GENERATOR_NAMES: [&str; 5] = [
    "ladder",
    "subdivided_ladder",
    "grid_NZ",
    "doubled_grid",
    "clique_chain",
];

/// Every catalogued generator, in `GENERATOR_NAMES` order.
pub fn catalog() -> Vec<Box<dyn Generator>> {
    GENERATOR_NAMES
        .iter()
        .map(|n| generator(n).unwrap())
        .collect()
}

pub fn generator(name: &str) -> Option<Box<dyn Generator>> {
    Some(match name {
        "ladder" => Box::new(Ladder),
        "subdivided_ladder" => Box::new(SubdividedLadder),
        "grid_NZ" => Box::new(Grid),
        "doubled_grid" => Box::new(DoubledGrid),
        "clique_chain" => Box::new(CliqueChain),
        _ => return None,
    })
}

fn sorted(mut v: Vec<(EdgeId, VertexId)>) -> Vec<(EdgeId, VertexId)> {
    v.sort_unstable();
    v
}

fn one_end(vertex_degree: EndDegree) -> Vec<EndInfo> {
    vec![EndInfo {
        name: "omega",
        vertex_degree,
    }]
}

/// Cantor pairing of two naturals.
fn pair(a: u64, b: u64) -> u64 {
    (a + b) * (a + b + 1) / 2 + b
}

fn unpair(z: u64) -> (u64, u64) {
    let w = (((8 * z + 1) as f64).sqrt() as u64 - 1) / 2;
    // correct float rounding
    let w = (w.saturating_sub(1)..=w + 1)
        .rev()
        .find(|&w| w * (w + 1) / 2 <= z)
        .unwrap();
    let b = z - w * (w + 1) / 2;
    (w - b, b)
}

fn zigzag(z: i64) -> u64 {
    if z >= 0 {
        2 * z as u64
    } else {
        (-2 * z - 1) as u64
    }
}

fn unzigzag(u: u64) -> i64 {
    if u.is_multiple_of(2) {
        (u / 2) as i64
    } else {
        -(u.div_ceil(2) as i64)
    }
}

/// The one-way infinite ladder `N × K2`.
///
/// Vertex `(i, s)` is `2i + s`; rung `i` is edge `3i`, the rail edge from `(i, s)`
/// to `(i + 1, s)` is `3i + 1 + s`. Rail `s` is canonical ray `s`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ladder;

impl Ladder {
    pub fn vertex(i: u64, side: u64) -> VertexId {
        2 * i + side
    }

    pub fn rung(i: u64) -> EdgeId {
        3 * i
    }

    pub fn rail(i: u64, side: u64) -> EdgeId {
        3 * i + 1 + side
    }
}

impl Generator for Ladder {
    fn name(&self) -> &'static str {
        "ladder"
    }

    fn description(&self) -> &'static str {
        "the one-way infinite ladder; one end of vertex-degree 2"
    }

    fn root(&self) -> VertexId {
        0
    }

    fn neighbors(&self, v: VertexId) -> Vec<(EdgeId, VertexId)> {
        let (i, s) = (v / 2, v % 2);
        let mut out = vec![
            (Ladder::rung(i), Ladder::vertex(i, 1 - s)),
            (Ladder::rail(i, s), Ladder::vertex(i + 1, s)),
        ];
        if i > 0 {
            out.push((Ladder::rail(i - 1, s), Ladder::vertex(i - 1, s)));
        }
        sorted(out)
    }

    fn label(&self, v: VertexId) -> String {
        format!("({},{})", v / 2, v % 2)
    }

    fn ends(&self) -> Vec<EndInfo> {
        one_end(EndDegree::Finite(2))
    }

    fn ray_family_size(&self, _end: usize) -> Option<usize> {
        Some(2)
    }

    fn ray_vertex(&self, _end: usize, index: usize, position: usize) -> Option<VertexId> {
        (index < 2).then(|| Ladder::vertex(position as u64, index as u64))
    }

    /// Rail-1 vertices, heading along the ladder.
    fn fan_sources(&self, count: usize) -> Vec<VertexId> {
        (0..count as u64).map(|i| Ladder::vertex(i, 1)).collect()
    }

    fn linkage_pairs(&self, count: usize) -> Vec<(VertexId, VertexId)> {
        (0..count as u64)
            .map(|i| (Ladder::vertex(i, 0), Ladder::vertex(i, 1)))
            .collect()
    }
}

/// The ladder with every rung subdivided; the rungs form the infinite bond that
/// is subdivided. `D` is the set of edges at subdivision vertices.
///
/// Vertices: `(i, 0) = 3i`, `(i, 1) = 3i + 1`, rung midpoint `m_i = 3i + 2`.
/// Edges: `(i,0)m_i = 4i`, `m_i(i,1) = 4i + 1`, rails `4i + 2 + s`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SubdividedLadder;

impl SubdividedLadder {
    pub fn vertex(i: u64, side: u64) -> VertexId {
        3 * i + side
    }

    pub fn midpoint(i: u64) -> VertexId {
        3 * i + 2
    }

    pub fn half_rung(i: u64, side: u64) -> EdgeId {
        4 * i + side
    }

    pub fn rail(i: u64, side: u64) -> EdgeId {
        4 * i + 2 + side
    }

    /// Vertex at `position` along the zigzag ray that crosses every rung:
    /// `(0,0) m_0 (0,1) (1,1) m_1 (1,0) (2,0) m_2 (2,1) ...`.
    pub fn zigzag(position: usize) -> VertexId {
        let (i, step) = ((position / 3) as u64, position % 3);
        let start = i % 2; // side on which rung i is entered
        match step {
            0 => Self::vertex(i, start),
            1 => Self::midpoint(i),
            _ => Self::vertex(i, 1 - start),
        }
    }
}

impl Generator for SubdividedLadder {
    fn name(&self) -> &'static str {
        "subdivided_ladder"
    }

    fn description(&self) -> &'static str {
        "the ladder with its rung bond subdivided; D = edges at subdivision vertices"
    }

    fn root(&self) -> VertexId {
        0
    }

    fn neighbors(&self, v: VertexId) -> Vec<(EdgeId, VertexId)> {
        let (i, t) = (v / 3, v % 3);
        if t == 2 {
            return vec![
                (Self::half_rung(i, 0), Self::vertex(i, 0)),
                (Self::half_rung(i, 1), Self::vertex(i, 1)),
            ];
        }
        let mut out = vec![
            (Self::half_rung(i, t), Self::midpoint(i)),
            (Self::rail(i, t), Self::vertex(i + 1, t)),
        ];
        if i > 0 {
            out.push((Self::rail(i - 1, t), Self::vertex(i - 1, t)));
        }
        sorted(out)
    }

    fn label(&self, v: VertexId) -> String {
        match v % 3 {
            2 => format!("m{}", v / 3),
            s => format!("({},{})", v / 3, s),
        }
    }

    fn ends(&self) -> Vec<EndInfo> {
        one_end(EndDegree::Finite(2))
    }

    fn ray_family_size(&self, _end: usize) -> Option<usize> {
        Some(2)
    }

    fn ray_vertex(&self, _end: usize, index: usize, position: usize) -> Option<VertexId> {
        (index < 2).then(|| Self::vertex(position as u64, index as u64))
    }

    fn distinguished(&self, e: EdgeId) -> Option<bool> {
        Some(e % 4 < 2)
    }

    fn has_distinguished(&self) -> bool {
        true
    }

    fn fan_sources(&self, count: usize) -> Vec<VertexId> {
        (0..count as u64).map(|i| Self::vertex(i, 1)).collect()
    }
}

/// The `N × Z` grid. Vertex `(n, z)` is `pair(n, zigzag(z))`; the edge to
/// `(n + 1, z)` is `2·id`, the edge to `(n, z + 1)` is `2·id + 1`.
/// Canonical ray `i` is column `i` going up from `(i, 0)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Grid;

impl Grid {
    pub fn vertex(n: u64, z: i64) -> VertexId {
        pair(n, zigzag(z))
    }

    pub fn coords(v: VertexId) -> (u64, i64) {
        let (n, zz) = unpair(v);
        (n, unzigzag(zz))
    }

    fn grid_neighbors(
        v: VertexId,
        edge: impl Fn(VertexId, u64) -> EdgeId,
    ) -> Vec<(EdgeId, VertexId)> {
        let (n, z) = Grid::coords(v);
        let mut out = vec![
            (edge(v, 0), Grid::vertex(n + 1, z)),
            (edge(v, 1), Grid::vertex(n, z + 1)),
        ];
        let below = Grid::vertex(n, z - 1);
        out.push((edge(below, 1), below));
        if n > 0 {
            let left = Grid::vertex(n - 1, z);
            out.push((edge(left, 0), left));
        }
        out
    }
}

impl Generator for Grid {
    fn name(&self) -> &'static str {
        "grid_NZ"
    }

    fn description(&self) -> &'static str {
        "the N x Z grid; one end of infinite vertex-degree"
    }

    fn root(&self) -> VertexId {
        Grid::vertex(0, 0)
    }

    fn neighbors(&self, v: VertexId) -> Vec<(EdgeId, VertexId)> {
        sorted(Grid::grid_neighbors(v, |u, dir| 2 * u + dir))
    }

    fn label(&self, v: VertexId) -> String {
        let (n, z) = Grid::coords(v);
        format!("({n},{z})")
    }

    fn ends(&self) -> Vec<EndInfo> {
        one_end(EndDegree::Infinite)
    }

    fn ray_family_size(&self, _end: usize) -> Option<usize> {
        None
    }

    fn ray_vertex(&self, _end: usize, index: usize, position: usize) -> Option<VertexId> {
        Some(Grid::vertex(index as u64, position as i64))
    }

    /// Column-2 vertices going up; fans are aimed at ray 0 (column 0).
    fn fan_sources(&self, count: usize) -> Vec<VertexId> {
        (0..count as i64).map(|z| Grid::vertex(2, z)).collect()
    }

    /// `v_i = (0, 2i)` and `w_i = (1, 2i)`, across the first two columns.
    fn linkage_pairs(&self, count: usize) -> Vec<(VertexId, VertexId)> {
        (0..count as i64)
            .map(|i| (Grid::vertex(0, 2 * i), Grid::vertex(1, 2 * i)))
            .collect()
    }
}

/// The `N × Z` grid with every edge between two degree-3 vertices (the column-0
/// edges) doubled and the new copy subdivided. `D` is the set of edges lying in a
/// triangle: each column-0 edge together with its subdivided twin.
///
/// Grid vertices are `2·pair(n, zigzag(z))`; the midpoint of the twin of
/// `(0,z)(0,z+1)` is `2·zigzag(z) + 1`. With `g = pair(n, zigzag(z))` the edge to
/// `(n+1, z)` is `4g`, to `(n, z+1)` is `4g + 1`; for `n = 0` the twin halves are
/// `4g + 2` (lower) and `4g + 3` (upper).
#[derive(Debug, Clone, Copy, Default)]
pub struct DoubledGrid;

impl DoubledGrid {
    pub fn vertex(n: u64, z: i64) -> VertexId {
        2 * Grid::vertex(n, z)
    }

    pub fn midpoint(z: i64) -> VertexId {
        2 * zigzag(z) + 1
    }

    /// Column-0 vertical edge `(0,z)(0,z+1)` and its two twin halves.
    pub fn triangle(z: i64) -> [EdgeId; 3] {
        let g = Grid::vertex(0, z);
        [4 * g + 1, 4 * g + 2, 4 * g + 3]
    }
}

impl Generator for DoubledGrid {
    fn name(&self) -> &'static str {
        "doubled_grid"
    }

    fn description(&self) -> &'static str {
        "the N x Z grid with its degree-3 edges doubled and the copies subdivided; D = edges in a triangle"
    }

    fn root(&self) -> VertexId {
        DoubledGrid::vertex(0, 0)
    }

    fn neighbors(&self, v: VertexId) -> Vec<(EdgeId, VertexId)> {
        if v % 2 == 1 {
            let z = unzigzag(v / 2);
            let g = Grid::vertex(0, z);
            return sorted(vec![
                (4 * g + 2, DoubledGrid::vertex(0, z)),
                (4 * g + 3, DoubledGrid::vertex(0, z + 1)),
            ]);
        }
        let g = v / 2;
        let mut out: Vec<(EdgeId, VertexId)> = Grid::grid_neighbors(g, |u, dir| 4 * u + dir)
            .into_iter()
            .map(|(e, w)| (e, 2 * w))
            .collect();
        let (n, z) = Grid::coords(g);
        if n == 0 {
            out.push((4 * g + 2, DoubledGrid::midpoint(z)));
            out.push((4 * Grid::vertex(0, z - 1) + 3, DoubledGrid::midpoint(z - 1)));
        }
        sorted(out)
    }

    fn label(&self, v: VertexId) -> String {
        if v % 2 == 1 {
            format!("s{}", unzigzag(v / 2))
        } else {
            let (n, z) = Grid::coords(v / 2);
            format!("({n},{z})")
        }
    }

    fn ends(&self) -> Vec<EndInfo> {
        one_end(EndDegree::Infinite)
    }

    fn ray_family_size(&self, _end: usize) -> Option<usize> {
        None
    }

    fn ray_vertex(&self, _end: usize, index: usize, position: usize) -> Option<VertexId> {
        Some(DoubledGrid::vertex(index as u64, position as i64))
    }

    fn distinguished(&self, e: EdgeId) -> Option<bool> {
        Some(match e % 4 {
            2 | 3 => true,
            1 => Grid::coords(e / 4).0 == 0,
            _ => false,
        })
    }

    fn has_distinguished(&self) -> bool {
        true
    }

    fn fan_sources(&self, count: usize) -> Vec<VertexId> {
        (0..count as i64)
            .map(|z| DoubledGrid::vertex(2, z))
            .collect()
    }
}

/// Complete graphs `K_1, K_2, ...` with `|K_i| = i`, each sharing one vertex with
/// the next.
///
/// `K_i` (for `i ≥ 2`) is the id range `T(i) ..= T(i) + i - 1` with
/// `T(i) = (i-2)(i-1)/2`; its last vertex is the first vertex of `K_{i+1}`, the
/// cut vertex `c_{i+1}`. `K_1` is the root `c_2 = 0`. The edge `ab` (`a < b`) is
/// `b(b-1)/2 + a`. The canonical ray runs through every vertex except the
/// second-to-last slot `T(i) + i - 2` of each `K_i` (`i ≥ 3`); those skipped vertices
/// are the fan sources.
#[derive(Debug, Clone, Copy, Default)]
pub struct CliqueChain;

impl CliqueChain {
    pub fn offset(i: u64) -> u64 {
        (i - 2) * (i - 1) / 2
    }

    /// `(i, slot)` with `slot < i - 1`, the unique clique in which `v` is not the last vertex.
    pub fn coords(v: VertexId) -> (u64, u64) {
        let mut i = 2;
        while Self::offset(i + 1) <= v {
            i += 1;
        }
        (i, v - Self::offset(i))
    }

    pub fn member(i: u64, slot: u64) -> VertexId {
        Self::offset(i) + slot
    }

    pub fn edge(a: VertexId, b: VertexId) -> EdgeId {
        let (a, b) = (a.min(b), a.max(b));
        b * (b - 1) / 2 + a
    }

    pub fn source(i: u64) -> VertexId {
        Self::member(i, i - 2)
    }

    fn on_ray(v: VertexId) -> bool {
        let (i, slot) = Self::coords(v);
        !(i >= 3 && slot == i - 2)
    }

    fn clique(i: u64) -> impl Iterator<Item = VertexId> {
        (0..i).map(move |s| Self::member(i, s))
    }
}

impl Generator for CliqueChain {
    fn name(&self) -> &'static str {
        "clique_chain"
    }

    fn description(&self) -> &'static str {
        "complete graphs K_1, K_2, ... with |K_i| = i, each meeting the next in one vertex"
    }

    fn root(&self) -> VertexId {
        0
    }

    fn neighbors(&self, v: VertexId) -> Vec<(EdgeId, VertexId)> {
        let (i, slot) = Self::coords(v);
        let mut cliques = vec![i];
        if slot == 0 && i >= 3 {
            cliques.push(i - 1);
        }
        let out = cliques
            .into_iter()
            .flat_map(Self::clique)
            .filter(|&w| w != v)
            .map(|w| (Self::edge(v, w), w))
            .collect();
        sorted(out)
    }

    fn label(&self, v: VertexId) -> String {
        let (i, slot) = Self::coords(v);
        format!("K{i}[{slot}]")
    }

    fn ends(&self) -> Vec<EndInfo> {
        // every ray passes all cut vertices
        one_end(EndDegree::Finite(1))
    }

    fn ray_family_size(&self, _end: usize) -> Option<usize> {
        Some(1)
    }

    fn ray_vertex(&self, _end: usize, index: usize, position: usize) -> Option<VertexId> {
        if index != 0 {
            return None;
        }
        (0..).filter(|&v| Self::on_ray(v)).nth(position)
    }

    fn fan_sources(&self, count: usize) -> Vec<VertexId> {
        (3..3 + count as u64).map(Self::source).collect()
    }

    fn linkage_pairs(&self, count: usize) -> Vec<(VertexId, VertexId)> {
        (3..3 + count as u64)
            .map(|i| (Self::member(i, 0), Self::source(i)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_round_trips() {
        for a in 0..40 {
            for b in 0..40 {
                assert_eq!(unpair(pair(a, b)), (a, b));
            }
        }
        for z in -30..30 {
            assert_eq!(unzigzag(zigzag(z)), z);
        }
    }

    #[test]
    fn clique_chain_coordinates() {
        assert_eq!(CliqueChain::coords(0), (2, 0));
        assert_eq!(CliqueChain::coords(1), (3, 0));
        assert_eq!(CliqueChain::coords(2), (3, 1));
        assert_eq!(CliqueChain::coords(3), (4, 0));
        // K_4 = {3, 4, 5, 6}, last vertex shared with K_5
        assert_eq!(CliqueChain.neighbors(4).len(), 3);
        assert_eq!(CliqueChain.neighbors(6).len(), 3 + 4);
    }

    #[test]
    fn zigzag_walk_is_a_path() {
        let g = SubdividedLadder;
        for p in 0..30 {
            let (a, b) = (SubdividedLadder::zigzag(p), SubdividedLadder::zigzag(p + 1));
            assert!(g.neighbors(a).iter().any(|&(_, w)| w == b), "{p}");
        }
    }
}
