//! Acceptance criteria. One PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_BLOCKED` are expected to fail; their analysis is
//! kept in the project's decisions ledger. The run exits non-zero when any other
//! criterion fails, or when a blocked one starts passing.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use edgespace_core::infinite::{CliqueChain, DoubledGrid, Grid, Ladder};
use edgespace_core::spaces::{
    cycle_space_basis, decompose_cut_into_bonds, decompose_even_set_into_circuits,
};
use edgespace_core::verify::{self, StudyMode, DEFAULT_SAMPLES, PADDED_SEARCH_DEPTH};
use edgespace_core::{Bounds, Decomposition, EdgeSet, MultiGraph, VertexSet};

/// Ladder parts of the fan and padding criteria: the ladder sends 3-fans to a rail.
const KNOWN_BLOCKED: [&str; 2] = ["AC5", "AC6"];

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

/// All connected simple graphs on `1..=6` vertices up to isomorphism, as edge
/// bitmasks over the pairs of `0..n`, keyed by the least relabelled mask.
fn simple_corpus() -> Vec<MultiGraph> {
    let mut out = Vec::new();
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let index = |a: usize, b: usize| {
            pairs
                .iter()
                .position(|&p| p == (a.min(b), a.max(b)))
                .unwrap()
        };
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let relabel: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect())
            .collect();
        let mut seen = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(u64, u64, u64)> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| (i as u64 + 1, pairs[i].0 as u64 + 1, pairs[i].1 as u64 + 1))
                .collect();
            let g = MultiGraph::new(1..=n as u64, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let canon = relabel
                .iter()
                .map(|r| {
                    (0..pairs.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| 1u32 << r[i])
                        .sum::<u32>()
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push(g);
            }
        }
    }
    out
}

/// Seeded random connected multigraph: a random tree plus `extra` random edges
/// (parallel edges allowed), with distinct random edge ids.
fn random_multigraph(rng: &mut ChaCha8Rng, max_vertices: u64, max_extra: usize) -> MultiGraph {
    let n = rng.gen_range(1..=max_vertices);
    let mut ends: Vec<(u64, u64)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    if n > 1 {
        for _ in 0..rng.gen_range(0..=max_extra) {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            ends.push((a, b));
        }
    }
    let ids = sample(rng, 1000, ends.len());
    MultiGraph::new(
        0..n,
        ids.iter().zip(ends).map(|(id, (a, b))| (id as u64, a, b)),
    )
    .unwrap()
}

fn corpus() -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut graphs = simple_corpus();
    graphs.extend((0..200).map(|_| random_multigraph(&mut rng, 8, 7)));
    graphs
}

fn first_failure(reports: impl IntoIterator<Item = verify::Report>) -> Option<String> {
    reports
        .into_iter()
        .find(|r| !r.all_hold())
        .map(|r| format!("{}: {}", r.experiment, r.summary().trim()))
}

fn ac1(graphs: &[MultiGraph], bounds: &Bounds) -> Outcome {
    let t = Instant::now();
    let fail = first_failure(
        graphs
            .iter()
            .map(|g| verify::verify_duality_finite(g, bounds).unwrap()),
    );
    let secs = t.elapsed().as_secs_f64();
    Outcome {
        id: "AC1",
        title: "finite duality suite",
        pass: fail.is_none() && secs < 120.0,
        detail: fail.unwrap_or_else(|| format!("{} graphs all-holds in {secs:.2}s", graphs.len())),
    }
}

fn ac2(graphs: &[MultiGraph], bounds: &Bounds) -> Outcome {
    let mut fail = None;
    for (i, g) in graphs.iter().enumerate() {
        let peel = verify::peel_sweep(g, bounds, DEFAULT_SAMPLES, i as u64).unwrap();
        let cor = verify::orthogonality_sweep(g, bounds, DEFAULT_SAMPLES, i as u64).unwrap();
        if let Some(f) = first_failure([peel, cor]) {
            fail = Some(format!("graph {i}: {f}"));
            break;
        }
    }
    Outcome {
        id: "AC2",
        title: "peeling and minimal-orthogonality suite",
        pass: fail.is_none(),
        detail: fail.unwrap_or_else(|| format!("{} graphs, zero counterexamples", graphs.len())),
    }
}

fn strictly_increasing(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

fn ac3(bounds: &Bounds) -> Outcome {
    let r = verify::verify_counterexample_bond(&[3, 4, 5, 6, 7], bounds).unwrap();
    let odd = r.series("odd_interior_bonds");
    let family = r.series("nonbond_cut_d_intersection");
    let pass = r.all_hold()
        && odd.iter().all(|&x| x == 0)
        && family.len() == 5
        && strictly_increasing(family);
    Outcome {
        id: "AC3",
        title: "doubled grid bond counterexample",
        pass,
        detail: format!(
            "bonds {:?}, odd {odd:?}, non-bond family {family:?}",
            r.series("interior_bonds")
        ),
    }
}

fn ac4(bounds: &Bounds) -> Outcome {
    let b = Bounds {
        circuit_length: 16,
        ..*bounds
    };
    let radii = [3, 4, 5, 6, 7, 8];
    let top = verify::verify_counterexample_ctop(&radii, &b).unwrap();
    let alg = verify::verify_counterexample_calg(&radii, &b).unwrap();
    let k = top.series("zigzag_rungs");
    let hits = top.series("zigzag_d_intersection");
    let twice = k.iter().zip(hits).all(|(k, h)| *h == 2 * k);
    let odd = top
        .series("odd_finite_circuits")
        .iter()
        .chain(alg.series("odd_finite_circuits"))
        .all(|&x| x == 0);
    Outcome {
        id: "AC4",
        title: "subdivided ladder C_top / C_alg counterexample",
        pass: top.all_hold() && alg.all_hold() && twice && odd && strictly_increasing(hits),
        detail: format!(
            "circuits {:?}, k {k:?}, |D∩path| {hits:?}",
            top.series("finite_circuits")
        ),
    }
}

fn ac5() -> Outcome {
    let radii = [3, 4, 5, 6, 7, 8];
    let cc = verify::fan_growth_study(&CliqueChain, 3, &radii, StudyMode::Fans).unwrap();
    let counts = cc.series("disjoint_families");
    let cc_ok = counts.windows(2).all(|w| w[0] <= w[1]) && counts.last().is_some_and(|&c| c >= 4);
    let lad = verify::fan_growth_study(&Ladder, 3, &radii, StudyMode::Fans).unwrap();
    let lc = lad.series("disjoint_families");
    let ls = lad.series("blocking_separator_size");
    let lad_ok = lc.iter().all(|&c| c == 0) && ls.iter().all(|&s| s == 2);
    Outcome {
        id: "AC5",
        title: "fan growth (clique chain grows, ladder stuck at 0)",
        pass: cc_ok && lad_ok,
        detail: format!("clique_chain {counts:?}; ladder counts {lc:?}, separators {ls:?}"),
    }
}

fn ac6() -> Outcome {
    let cc = verify::padded_study(&CliqueChain, 0, 3, &[1, 2, 3], PADDED_SEARCH_DEPTH).unwrap();
    let cw = cc.series("witness_radius");
    let lad = verify::padded_study(&Ladder, 0, 3, &[1, 2, 3], PADDED_SEARCH_DEPTH).unwrap();
    let lw = lad.series("witness_radius");
    Outcome {
        id: "AC6",
        title: "padded witness radius (clique chain found, ladder not found)",
        pass: cw.iter().all(|&r| r > 0) && lw.iter().all(|&r| r < 0),
        detail: format!("clique_chain {cw:?}; ladder {lw:?} (-1 = not found)"),
    }
}

fn ac7() -> Outcome {
    let ladder = verify::end_degree_estimate(&Ladder, 0, &(2..=8).collect::<Vec<_>>()).unwrap();
    let radii: Vec<usize> = (3..=8).collect();
    let grid = verify::end_degree_estimate(&Grid, 0, &radii).unwrap();
    let dgrid = verify::end_degree_estimate(&DoubledGrid, 0, &radii).unwrap();
    let l = ladder.series("estimate");
    let (g, d) = (grid.series("estimate"), dgrid.series("estimate"));
    Outcome {
        id: "AC7",
        title: "end-degree audit",
        pass: l.iter().all(|&x| x == 2) && g.iter().chain(d).all(|&x| x >= 3),
        detail: format!("ladder {l:?}; grid_NZ {g:?}; doubled_grid {d:?}"),
    }
}

fn check_parts(dec: &Decomposition, input: &EdgeSet, certify: impl Fn(&EdgeSet) -> bool) -> bool {
    dec.is_pairwise_disjoint()
        && dec.union() == *input
        && dec.parts.iter().all(|p| certify(&p.edges))
}

fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    let mut bad = None;
    let mut even_done = 0;
    while even_done < 500 {
        let g = random_multigraph(&mut rng, 10, 10);
        let basis = cycle_space_basis(&g).unwrap();
        if basis.dim() == 0 {
            continue;
        }
        let coords: Vec<usize> = (0..basis.dim()).filter(|_| rng.gen_bool(0.5)).collect();
        let d = basis.combine(&coords);
        let dec = decompose_even_set_into_circuits(&g, &d).unwrap();
        if !check_parts(&dec, &d, |p| g.is_circuit(p)) {
            bad.get_or_insert(format!("even set {:?}", d.to_vec()));
        }
        even_done += 1;
    }
    let mut cut_done = 0;
    while cut_done < 500 {
        let g = random_multigraph(&mut rng, 10, 10);
        if g.vertex_count() < 2 {
            continue;
        }
        let side: VertexSet = g
            .vertices()
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let f = g.cut_from_bipartition(&side);
        let dec = decompose_cut_into_bonds(&g, &f).unwrap();
        if !check_parts(&dec, &f, |p| g.is_bond(p)) {
            bad.get_or_insert(format!("cut {:?}", f.to_vec()));
        }
        cut_done += 1;
    }
    Outcome {
        id: "AC8",
        title: "decomposition suite",
        pass: bad.is_none(),
        detail: bad
            .unwrap_or_else(|| "500 even sets and 500 cuts decomposed and re-certified".into()),
    }
}

fn ac9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_edgespace");
    let dir = tempfile::tempdir().unwrap();
    let put = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let k4: String = std::iter::once("graph k4\n".to_string())
        .chain((1..=4).map(|v| format!("v {v}\n")))
        .chain(
            (1..=4)
                .tuple_combinations()
                .map(|(i, j)| format!("e {i}{j} {i} {j}\n")),
        )
        .collect();
    let k4 = put("k4.graph", &k4);
    let tree = put("tree.graph", "graph t\nv 1\nv 2\nv 3\ne 1 1 2\ne 2 2 3\n");
    let c4 = put(
        "c4.graph",
        "graph c4\nv 1\nv 2\nv 3\nv 4\ne 1 1 2\ne 2 2 3\ne 3 3 4\ne 4 4 1\n",
    );
    let bad = put("bad.graph", "graph b\nv 1\ne 1 1\n");
    let json = dir.path().join("r.json").display().to_string();
    let invocations: Vec<Vec<String>> = [
        vec!["generate", "--generator", "ladder", "--radius", "2"],
        vec!["generate", "--generator", "doubled_grid", "--radius", "3"],
        vec!["generate", "--generator", "grid_NZ", "--radius", "0"],
        vec!["generate", "--generator", "torus", "--radius", "1"],
        vec!["spaces", &k4, "--space", "C_fin"],
        vec!["spaces", &tree, "--space", "C_fin"],
        vec!["spaces", &bad],
        vec!["check", &c4, "--set", "1,2,3,4", "--space", "C_fin"],
        vec!["check", &c4, "--set", "1"],
        vec![
            "verify",
            "--experiment",
            "ce_ctop",
            "--radii",
            "3..6",
            "--json",
            &json,
        ],
        vec![
            "verify",
            "--experiment",
            "duality_finite",
            "--input",
            &k4,
            "--json",
            &json,
        ],
        vec!["verify", "--experiment", "unknown"],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    let mut bad_run = None;
    for args in &invocations {
        let once = || {
            let _ = std::fs::remove_file(&json);
            let o = Command::new(bin)
                .args(args)
                .env_remove("EDGESPACE_BOUND")
                .output()
                .unwrap();
            (
                o.stdout,
                o.stderr,
                o.status.code(),
                std::fs::read(&json).ok(),
            )
        };
        if once() != once() {
            bad_run.get_or_insert(args.join(" "));
        }
    }
    let golden = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for g in [
        "ladder",
        "subdivided_ladder",
        "grid_NZ",
        "doubled_grid",
        "clique_chain",
    ] {
        let o = Command::new(bin)
            .args(["generate", "--generator", g, "--radius", "3"])
            .output()
            .unwrap();
        if std::fs::read(golden.join(format!("{g}_r3.graph"))).ok() != Some(o.stdout) {
            bad_run.get_or_insert(format!("golden {g}_r3"));
        }
    }
    Outcome {
        id: "AC9",
        title: "CLI determinism and golden files",
        pass: bad_run.is_none(),
        detail: bad_run.map_or_else(
            || {
                format!(
                    "{} invocations byte-identical; 5 golden files match",
                    invocations.len()
                )
            },
            |a| format!("differs: {a}"),
        ),
    }
}

fn main() {
    // libtest-style flags (e.g. --nocapture, filters) are accepted and ignored.
    let bounds = Bounds::default();
    let graphs = corpus();
    assert_eq!(
        graphs.len(),
        343,
        "143 simple graphs plus 200 random multigraphs"
    );
    let runs: Vec<Box<dyn Fn() -> Outcome>> = vec![
        Box::new(|| ac1(&graphs, &bounds)),
        Box::new(|| ac2(&graphs, &bounds)),
        Box::new(|| ac3(&bounds)),
        Box::new(|| ac4(&bounds)),
        Box::new(ac5),
        Box::new(ac6),
        Box::new(ac7),
        Box::new(ac8),
        Box::new(ac9),
    ];
    let mut unexpected = Vec::new();
    for run in runs {
        let t = Instant::now();
        let o = run();
        let blocked = KNOWN_BLOCKED.contains(&o.id);
        let tag = match (o.pass, blocked) {
            (true, _) => "PASS",
            (false, _) => "FAIL",
        };
        let suffix = if blocked && !o.pass {
            "  [known blocked, see decisions ledger]"
        } else {
            ""
        };
        println!(
            "{tag} {} {} ({:.2}s): {}{suffix}",
            o.id,
            o.title,
            t.elapsed().as_secs_f64(),
            o.detail
        );
        if o.pass == blocked {
            unexpected.push(o.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for {unexpected:?}");
        std::process::exit(1);
    }
}
