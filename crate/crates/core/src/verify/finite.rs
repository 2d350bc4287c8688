use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::report::{Report, Verdict};
use crate::basis::Basis;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::spaces::{
    cut_space_basis, cycle_space_basis, enumerate_bonds, enumerate_circuits,
    peel_minimal_decomposition, PartKind, SpaceTag,
};
use crate::{Bounds, EdgeId};

/// Largest edge count the bitmask context supports.
pub const MAX_MASK_EDGES: usize = 128;

/// Default number of sampled span elements when a space is too large to sweep.
pub const DEFAULT_SAMPLES: usize = 1000;

/// Exhaustive sweeps are used up to this many edges.
pub const EXHAUSTIVE_EDGES: usize = 12;

/// Precomputed bonds, circuits and bases of a small connected graph, with edge
/// sets packed into `u128` masks so that many candidate sets can be audited fast.
#[derive(Debug, Clone)]
pub struct FiniteContext {
    pub graph: MultiGraph,
    index: BTreeMap<EdgeId, u32>,
    order: Vec<EdgeId>,
    pub bonds: Vec<EdgeSet>,
    pub circuits: Vec<EdgeSet>,
    pub cycle_basis: Basis,
    pub cut_basis: Basis,
    bond_masks: Vec<u128>,
    circuit_masks: Vec<u128>,
    cycle_masks: Vec<u128>,
    cut_masks: Vec<u128>,
}

/// Orthogonality audit of one set against one space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audit {
    /// First minimal element (bond or circuit) meeting the set oddly.
    pub odd_minimal: Option<EdgeSet>,
    /// First basis vector of the space meeting the set oddly.
    pub odd_basis: Option<EdgeSet>,
}

impl Audit {
    /// Whether "orthogonal to every minimal element" agrees with "orthogonal to the space".
    pub fn consistent(&self) -> bool {
        self.odd_minimal.is_none() == self.odd_basis.is_none()
    }
}

impl FiniteContext {
    pub fn new(g: &MultiGraph, bounds: &Bounds) -> Result<Self> {
        g.require_connected()?;
        if g.edge_count() > MAX_MASK_EDGES {
            return Err(Error::BoundExceeded {
                what: "edge count",
                actual: g.edge_count(),
                bound: MAX_MASK_EDGES,
            });
        }
        let bonds = enumerate_bonds(g, bounds)?;
        let circuits = enumerate_circuits(g, bounds)?;
        let cycle_basis = cycle_space_basis(g)?;
        let cut_basis = cut_space_basis(g)?;
        let order: Vec<EdgeId> = g.edge_set().iter().collect();
        let index = order
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect();
        let mut ctx = FiniteContext {
            graph: g.clone(),
            index,
            order,
            bonds,
            circuits,
            cycle_basis,
            cut_basis,
            bond_masks: Vec::new(),
            circuit_masks: Vec::new(),
            cycle_masks: Vec::new(),
            cut_masks: Vec::new(),
        };
        ctx.bond_masks = ctx.bonds.iter().map(|s| ctx.mask(s)).collect();
        ctx.circuit_masks = ctx.circuits.iter().map(|s| ctx.mask(s)).collect();
        ctx.cycle_masks = ctx
            .cycle_basis
            .vectors()
            .iter()
            .map(|s| ctx.mask(s))
            .collect();
        ctx.cut_masks = ctx
            .cut_basis
            .vectors()
            .iter()
            .map(|s| ctx.mask(s))
            .collect();
        Ok(ctx)
    }

    pub fn edge_count(&self) -> usize {
        self.order.len()
    }

    /// Packs `d` into a mask. Edges outside the graph are ignored.
    pub fn mask(&self, d: &EdgeSet) -> u128 {
        d.iter()
            .filter_map(|e| self.index.get(&e))
            .fold(0, |m, &i| m | 1u128 << i)
    }

    pub fn unmask(&self, m: u128) -> EdgeSet {
        self.order
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    }

    fn first_odd(masks: &[u128], sets: &[EdgeSet], d: u128) -> Option<EdgeSet> {
        masks
            .iter()
            .position(|m| (m & d).count_ones() % 2 == 1)
            .map(|i| sets[i].clone())
    }

    /// `d` against the bonds and against the cut space basis.
    pub fn audit_cuts(&self, d: u128) -> Audit {
        Audit {
            odd_minimal: Self::first_odd(&self.bond_masks, &self.bonds, d),
            odd_basis: Self::first_odd(&self.cut_masks, self.cut_basis.vectors(), d),
        }
    }

    /// `d` against the circuits and against the cycle space basis.
    pub fn audit_cycles(&self, d: u128) -> Audit {
        Audit {
            odd_minimal: Self::first_odd(&self.circuit_masks, &self.circuits, d),
            odd_basis: Self::first_odd(&self.cycle_masks, self.cycle_basis.vectors(), d),
        }
    }
}

fn set_json(s: &EdgeSet) -> serde_json::Value {
    json!(s.to_vec())
}

fn graph_params(r: &mut Report, g: &MultiGraph) {
    r.param("vertices", g.vertex_count())
        .param("edges", g.edge_count());
}

/// Checks `C_fin = B^perp`, `B = C_fin^perp`, the dimension count and the pairwise
/// orthogonality of all circuits with all bonds.
pub fn verify_duality_finite(g: &MultiGraph, bounds: &Bounds) -> Result<Report> {
    let ctx = FiniteContext::new(g, bounds)?;
    let mut r = Report::new("duality_finite");
    graph_params(&mut r, g);
    r.param("bounds", bounds);

    let cycle_perp = ctx.cycle_basis.orthogonal_complement();
    let cut_perp = ctx.cut_basis.orthogonal_complement();
    let mismatch = |a: &Basis, b: &Basis| -> serde_json::Value {
        let v = a
            .vectors()
            .iter()
            .find(|v| !b.contains(v))
            .or_else(|| b.vectors().iter().find(|v| !a.contains(v)))
            .cloned()
            .unwrap_or_default();
        json!({ "edge_set": v.to_vec() })
    };
    r.check(
        "C_fin = B^perp",
        Verdict::from_bool(ctx.cycle_basis.same_span(&cut_perp), || {
            mismatch(&ctx.cycle_basis, &cut_perp)
        }),
    );
    r.check(
        "B = C_fin^perp",
        Verdict::from_bool(ctx.cut_basis.same_span(&cycle_perp), || {
            mismatch(&ctx.cut_basis, &cycle_perp)
        }),
    );
    let (dc, db, m) = (ctx.cycle_basis.dim(), ctx.cut_basis.dim(), g.edge_count());
    r.check_with(
        "dim C + dim B = |E|",
        Verdict::from_bool(
            dc + db == m,
            || json!({ "dim_c": dc, "dim_b": db, "edges": m }),
        ),
        json!({ "dim_c": dc, "dim_b": db, "edges": m }),
    );
    let mut odd_pair = None;
    'outer: for (ci, c) in ctx.circuit_masks.iter().enumerate() {
        for (bi, b) in ctx.bond_masks.iter().enumerate() {
            if (c & b).count_ones() % 2 == 1 {
                odd_pair = Some((ci, bi));
                break 'outer;
            }
        }
    }
    r.check_with(
        "circuits orthogonal to bonds",
        Verdict::from_bool(odd_pair.is_none(), || {
            let (ci, bi) = odd_pair.unwrap();
            json!({ "circuit": ctx.circuits[ci].to_vec(), "bond": ctx.bonds[bi].to_vec() })
        }),
        json!({ "circuits": ctx.circuits.len(), "bonds": ctx.bonds.len() }),
    );
    Ok(r)
}

fn biconditional_checks(r: &mut Report, ctx: &FiniteContext, d: &EdgeSet, suffix: &str) {
    let m = ctx.mask(d);
    for (name, audit, minimal, space) in [
        (
            "D perp every bond <=> D perp B",
            ctx.audit_cuts(m),
            "bond",
            "B",
        ),
        (
            "D perp every circuit <=> D perp C_fin",
            ctx.audit_cycles(m),
            "circuit",
            "C_fin",
        ),
    ] {
        let detail = json!({
            format!("odd_{minimal}"): audit.odd_minimal.as_ref().map(set_json),
            format!("odd_{space}_element"): audit.odd_basis.as_ref().map(set_json),
            "orthogonal": audit.odd_basis.is_none(),
        });
        let verdict = Verdict::from_bool(
            audit.consistent(),
            || json!({ "d": d.to_vec(), "audit": detail.clone() }),
        );
        r.check_with(format!("{name}{suffix}"), verdict, detail);
    }
}

/// Both directions of "orthogonal to every minimal element iff orthogonal to the
/// space", for bonds against `B` and circuits against `C_fin`.
pub fn verify_minimal_orthogonality_finite(
    g: &MultiGraph,
    d: &EdgeSet,
    bounds: &Bounds,
) -> Result<Report> {
    g.check_edges(d)?;
    let ctx = FiniteContext::new(g, bounds)?;
    let mut r = Report::new("cor_finite");
    graph_params(&mut r, g);
    r.param("d", d.to_vec()).param("bounds", bounds);
    biconditional_checks(&mut r, &ctx, d, "");
    Ok(r)
}

/// Candidate sets: every subset of `E` when `|E| <= EXHAUSTIVE_EDGES`, otherwise
/// `samples` seeded uniform subsets.
fn candidate_masks(m: usize, samples: usize, seed: u64) -> (Vec<u128>, bool) {
    if m <= EXHAUSTIVE_EDGES {
        ((0..1u128 << m).collect(), true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = if m == 128 {
            u128::MAX
        } else {
            (1u128 << m) - 1
        };
        (
            (0..samples).map(|_| rng.gen::<u128>() & full).collect(),
            false,
        )
    }
}

/// The biconditional over all edge sets of `g` (or a seeded sample), counting
/// counterexamples.
pub fn orthogonality_sweep(
    g: &MultiGraph,
    bounds: &Bounds,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    let ctx = FiniteContext::new(g, bounds)?;
    let (cands, exhaustive) = candidate_masks(ctx.edge_count(), samples, seed);
    let mut r = Report::new("cor_finite");
    graph_params(&mut r, g);
    r.param("exhaustive", exhaustive)
        .param("candidates", cands.len())
        .param("seed", seed);
    let mut bad_bond = None;
    let mut bad_circuit = None;
    for &m in &cands {
        if bad_bond.is_none() && !ctx.audit_cuts(m).consistent() {
            bad_bond = Some(ctx.unmask(m));
        }
        if bad_circuit.is_none() && !ctx.audit_cycles(m).consistent() {
            bad_circuit = Some(ctx.unmask(m));
        }
    }
    r.check(
        "D perp every bond <=> D perp B",
        Verdict::from_bool(
            bad_bond.is_none(),
            || json!({ "d": bad_bond.as_ref().unwrap().to_vec() }),
        ),
    );
    r.check(
        "D perp every circuit <=> D perp C_fin",
        Verdict::from_bool(
            bad_circuit.is_none(),
            || json!({ "d": bad_circuit.as_ref().unwrap().to_vec() }),
        ),
    );
    Ok(r)
}

/// Span elements of `basis`: all of them when the space has at most
/// `2^EXHAUSTIVE_EDGES` elements, otherwise `samples` seeded random combinations.
fn span_elements(basis: &Basis, samples: usize, seed: u64) -> (Vec<EdgeSet>, bool) {
    let dim = basis.dim();
    if dim <= EXHAUSTIVE_EDGES {
        ((0..1u64 << dim).map(|m| basis.element(m)).collect(), true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let out = (0..samples)
            .map(|_| {
                let coords: Vec<usize> = (0..dim).filter(|_| rng.gen_bool(0.5)).collect();
                basis.combine(&coords)
            })
            .collect();
        (out, false)
    }
}

/// Peels every element of `C_fin` and `B` (or a seeded sample) into minimal
/// parts and re-certifies each part and the resummation.
pub fn peel_sweep(g: &MultiGraph, bounds: &Bounds, samples: usize, seed: u64) -> Result<Report> {
    let ctx = FiniteContext::new(g, bounds)?;
    let mut r = Report::new("peel_finite");
    graph_params(&mut r, g);
    r.param("seed", seed);
    for (space, basis, label) in [
        (SpaceTag::CFin, &ctx.cycle_basis, "circuit"),
        (SpaceTag::B, &ctx.cut_basis, "bond"),
    ] {
        let (elements, exhaustive) = span_elements(basis, samples, seed);
        r.param(&format!("{space}_exhaustive"), exhaustive);
        r.param(&format!("{space}_elements"), elements.len());
        let mut witness = None;
        for f in &elements {
            let dec = peel_minimal_decomposition(space, g, f)?;
            let certified = dec.parts.iter().all(|p| match p.kind {
                PartKind::Circuit => g.is_circuit(&p.edges),
                PartKind::Bond => g.is_bond(&p.edges),
                PartKind::DoubleRayTruncation => false,
            });
            if !certified || dec.sum() != *f {
                witness = Some(f.clone());
                break;
            }
        }
        r.check(
            format!("{space} elements peel into certified {label}s"),
            Verdict::from_bool(
                witness.is_none(),
                || json!({ "f": witness.as_ref().unwrap().to_vec() }),
            ),
        );
    }
    Ok(r)
}

/// `verify_minimal_orthogonality_finite` plus the sweep, in one report; used when
/// a distinguished set is supplied alongside a graph.
pub fn orthogonality_report(
    g: &MultiGraph,
    d: Option<&EdgeSet>,
    bounds: &Bounds,
    seed: u64,
) -> Result<Report> {
    let mut r = orthogonality_sweep(g, bounds, DEFAULT_SAMPLES, seed)?;
    if let Some(d) = d {
        g.check_edges(d)?;
        let ctx = FiniteContext::new(g, bounds)?;
        r.param("d", d.to_vec());
        biconditional_checks(&mut r, &ctx, d, " (given D)");
    }
    Ok(r)
}
