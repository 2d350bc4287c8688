use super::*;
use crate::graph::VertexSet;
use crate::infinite::{generator, window, CliqueChain, Grid, Ladder};
use crate::menger::{k_fan, Search};
use crate::Bounds;

fn gen(name: &str) -> Box<dyn crate::infinite::Generator> {
    generator(name).unwrap()
}

/// Edges at subdivision vertices inside window(r), from coordinates: `s_z` lies in
/// the window iff `min(|z|, |z+1|) < r`, and then both its edges do.
fn nonbond_oracle(r: i64) -> i64 {
    (-2 * r..2 * r)
        .filter(|&z| z.abs().min((z + 1).abs()) < r)
        .count() as i64
        * 2
}

#[test]
fn ce_bond_series_match_oracle() {
    let radii = [3, 4, 5];
    let rep = verify_counterexample_bond(&radii, &Bounds::default()).unwrap();
    assert!(rep.all_hold(), "{}", rep.summary());
    let oracle: Vec<i64> = radii.iter().map(|&r| nonbond_oracle(r as i64)).collect();
    assert_eq!(rep.series("nonbond_cut_d_intersection"), oracle.as_slice());
    assert_eq!(oracle, vec![12, 16, 20]);
    assert_eq!(rep.series("odd_interior_bonds"), &[0, 0, 0]);
    assert!(rep.malformed_series().is_empty());
}

#[test]
fn ce_bond_single_vertex_stars_are_even() {
    let w = window(&crate::infinite::DoubledGrid, 4);
    let d = w.distinguished(&crate::infinite::DoubledGrid);
    for v in w.graph.interior() {
        assert_eq!(w.graph.degree_in(v, &d) % 2, 0, "vertex {v}");
    }
}

#[test]
fn ce_ctop_series_match_oracle() {
    let radii = [3, 4, 5, 6, 7, 8];
    let rep = verify_counterexample_ctop(&radii, &Bounds::default()).unwrap();
    assert!(rep.all_hold(), "{}", rep.summary());
    // rungs i with i + 2 <= r lie in the window; circuits are pairs of rungs
    let circuits: Vec<i64> = radii
        .iter()
        .map(|&r| ((r - 1) * (r - 2) / 2) as i64)
        .collect();
    assert_eq!(rep.series("finite_circuits"), circuits.as_slice());
    let rungs: Vec<i64> = radii.iter().map(|&r| r as i64 - 1).collect();
    assert_eq!(rep.series("zigzag_rungs"), rungs.as_slice());
    let twice: Vec<i64> = rungs.iter().map(|k| 2 * k).collect();
    assert_eq!(rep.series("zigzag_d_intersection"), twice.as_slice());
}

#[test]
fn ce_calg_reuses_ctop_verdicts() {
    let radii = [3, 4, 5];
    let top = verify_counterexample_ctop(&radii, &Bounds::default()).unwrap();
    let alg = verify_counterexample_calg(&radii, &Bounds::default()).unwrap();
    for c in &top.checks {
        assert_eq!(alg.find(&c.name).unwrap().verdict, c.verdict);
    }
    assert!(alg.all_hold(), "{}", alg.summary());
    assert_eq!(
        alg.series("odd_d_interior_subdivision_vertices"),
        &[0, 0, 0]
    );
    let audit = alg
        .find("D is not in C_alg of the window")
        .unwrap()
        .detail
        .clone()
        .unwrap();
    assert_eq!(audit["d_degree"], serde_json::json!(1));
}

#[test]
fn fan_growth_on_clique_chain_increases() {
    let rep = fan_growth_study(
        &*gen("clique_chain"),
        3,
        &[3, 4, 5, 6, 7, 8],
        StudyMode::Fans,
    )
    .unwrap();
    assert!(rep.all_hold(), "{}", rep.summary());
    assert_eq!(rep.series("disjoint_families"), &[1, 2, 3, 4, 5, 6]);
}

#[test]
fn grid_linkages_increase() {
    let rep = fan_growth_study(&*gen("grid_NZ"), 2, &[3, 5, 7, 9], StudyMode::Linkages).unwrap();
    assert!(rep.all_hold(), "{}", rep.summary());
}

#[test]
fn ladder_rail_vertices_send_three_fans_to_the_other_rail() {
    // (i,1) reaches rail 0 directly and through both rail neighbours.
    let w = window(&Ladder, 8);
    let rail0: VertexSet = (0..=8)
        .map(|i| Ladder::vertex(i, 0))
        .filter(|v| w.contains(*v))
        .collect();
    for i in 1..5 {
        match k_fan(&w.graph, Ladder::vertex(i, 1), &rail0, 3).unwrap() {
            Search::Found(f) => assert!(f.is_valid(&w.graph, &rail0)),
            Search::Blocked { .. } => panic!("no 3-fan from ({i},1)"),
        }
    }
}

#[test]
fn padded_with_k1_is_next_radius() {
    for name in ["ladder", "grid_NZ", "clique_chain"] {
        let rep = padded_study(&*gen(name), 0, 1, &[1, 2, 3], PADDED_SEARCH_DEPTH).unwrap();
        assert_eq!(rep.series("witness_radius"), &[2, 3, 4], "{name}");
    }
}

#[test]
fn padded_on_clique_chain_is_found() {
    let rep = padded_study(&CliqueChain, 0, 3, &[1, 2, 3], PADDED_SEARCH_DEPTH).unwrap();
    assert!(rep.all_hold(), "{}", rep.summary());
    assert_eq!(rep.series("witness_radius"), &[4, 4, 5]);
}

#[test]
fn padded_fails_where_degree_two_vertices_recur() {
    let rep = padded_study(&*gen("subdivided_ladder"), 0, 3, &[1], 6).unwrap();
    assert!(rep.has_failures());
}

#[test]
fn end_degree_oracles() {
    let radii: Vec<usize> = (2..=8).collect();
    let ladder = end_degree_estimate(&Ladder, 0, &radii).unwrap();
    assert!(ladder.all_hold());
    assert_eq!(ladder.series("estimate"), &[2; 7]);
    // layer 1 has three vertices; beyond it the diamond rows give 2*floor(r/2) + 1
    let grid = end_degree_estimate(&Grid, 0, &radii).unwrap();
    assert!(grid.all_hold());
    let oracle: Vec<i64> = radii.iter().map(|&r| 2 * (r / 2) as i64 + 1).collect();
    assert_eq!(grid.series("estimate"), oracle.as_slice());
}

#[test]
fn theorem_window_on_grid_with_a_face() {
    let g = gen("grid_NZ");
    let face = default_probe_set(&*g);
    assert_eq!(face.len(), 4);
    let rep = verify_theorem_window(&*g, Some(&face), &[3, 4], &Bounds::default()).unwrap();
    assert!(rep.all_hold(), "{}", rep.summary());
    assert_eq!(rep.series("odd_bonds"), &[0, 0]);
}

#[test]
fn theorem_window_on_ladder_is_inconclusive_for_cycle_spaces() {
    let rep = verify_theorem_window(
        &Ladder,
        Some(&default_probe_set(&Ladder)),
        &[3, 4],
        &Bounds::default(),
    )
    .unwrap();
    assert!(rep
        .find("premise for C_top, C_alg: end vertex-degree >= 3")
        .unwrap()
        .verdict
        .is_fail());
    let (i, _) = rep
        .checks
        .iter()
        .enumerate()
        .find(|(_, c)| c.name.starts_with("C_top: "))
        .unwrap();
    assert!(matches!(
        rep.checks[i].verdict,
        Verdict::Inconclusive { .. }
    ));
}

#[test]
fn theorem_window_on_doubled_grid_audits_degree() {
    let rep =
        verify_theorem_window(&*gen("doubled_grid"), None, &[3, 4], &Bounds::default()).unwrap();
    assert_eq!(
        rep.find("premise for C_top, C_alg: end vertex-degree >= 3")
            .unwrap()
            .verdict,
        Verdict::Holds
    );
}

#[test]
fn double_ray_truncations_run_rim_to_rim() {
    let w = window(&Grid, 4);
    let all = double_ray_truncations(&Grid, &w);
    assert!(!all.is_empty());
    for p in &all {
        let odd = w.graph.odd_vertices(p);
        assert_eq!(odd.len(), 2);
        assert!(odd.iter().all(|v| w.graph.is_boundary(*v)));
        assert!(w.graph.induces_connected(&touched(&w.graph, p)));
    }
}

fn touched(g: &crate::MultiGraph, p: &crate::EdgeSet) -> VertexSet {
    p.iter()
        .flat_map(|e| {
            let (a, b) = g.endpoints(e).unwrap();
            [a, b]
        })
        .collect()
}

#[test]
fn failing_witnesses_reproduce() {
    let rep = padded_study(&*gen("subdivided_ladder"), 0, 3, &[1], 6).unwrap();
    let Verdict::Fails { witness } = &rep.checks[0].verdict else {
        panic!()
    };
    let v = witness["blocking"]["vertex"].as_u64().unwrap();
    let w = window(&*gen("subdivided_ladder"), 9);
    // a subdivision vertex has two neighbours, so no 3-fan from it exists anywhere
    assert_eq!(w.graph.degree(v), 2);
}
