use serde::{Deserialize, Serialize};
use serde_json::json;

use super::report::{non_decreasing, Report, Verdict};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::infinite::{component_cs_in, truncate_ray_in, window, EndDegree, Generator, Window};
use crate::menger::{
    k_fan_avoiding, k_linkage, max_disjoint_fans, max_disjoint_linkages, vertex_disjoint_paths,
    Search,
};
use crate::VertexId;

/// What `fan_growth_study` packs: fans to the canonical ray, or linkages between
/// the generator's endpoint pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StudyMode {
    Fans,
    Linkages,
}

impl std::str::FromStr for StudyMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fans" | "fan" => Ok(StudyMode::Fans),
            "linkages" | "linkage" => Ok(StudyMode::Linkages),
            _ => Err(format!("unknown mode '{s}', expected fans or linkages")),
        }
    }
}

fn in_window(w: &Window, vs: Vec<VertexId>) -> Vec<VertexId> {
    vs.into_iter().filter(|v| w.contains(*v)).collect()
}

/// Size of the greedy family of disjoint `k`-fans (or `k`-linkages) per radius.
///
/// When nothing is found at a radius, the separator blocking the first source
/// is recorded as a certificate.
pub fn fan_growth_study(
    gen: &dyn Generator,
    k: usize,
    radii: &[usize],
    mode: StudyMode,
) -> Result<Report> {
    let mut r = Report::new("fan_growth");
    r.radii = radii.to_vec();
    r.param("generator", gen.name())
        .param("k", k)
        .param("mode", mode)
        .param("radii", radii);
    let mut invalid = None;
    let mut certificates = Vec::new();
    for &rad in radii {
        let w = window(gen, rad);
        let n = w.graph.vertex_count();
        let (count, blocked) = match mode {
            StudyMode::Fans => {
                let targets = truncate_ray_in(gen, &w, 0, 0)?.vertex_set();
                let sources = in_window(&w, gen.fan_sources(n));
                let fans = max_disjoint_fans(&w.graph, &sources, &targets, k)?;
                if let Some(f) = fans.iter().find(|f| !f.is_valid(&w.graph, &targets)) {
                    invalid.get_or_insert(json!({ "radius": rad, "fan": f }));
                }
                let first = sources.iter().find(|s| !targets.contains(s));
                let blocked = match (fans.is_empty(), first) {
                    (true, Some(&s)) => {
                        match k_fan_avoiding(&w.graph, s, &targets, k, &VertexSet::new())? {
                            Search::Blocked { separator, .. } => Some((s, separator)),
                            Search::Found(_) => None,
                        }
                    }
                    _ => None,
                };
                (fans.len(), blocked)
            }
            StudyMode::Linkages => {
                let pairs: Vec<_> = gen
                    .linkage_pairs(n)
                    .into_iter()
                    .filter(|(x, y)| w.contains(*x) && w.contains(*y))
                    .collect();
                let links = max_disjoint_linkages(&w.graph, &pairs, k)?;
                if let Some(l) = links.iter().find(|l| !l.is_valid(&w.graph)) {
                    invalid.get_or_insert(json!({ "radius": rad, "linkage": l }));
                }
                let blocked = match (links.is_empty(), pairs.first()) {
                    (true, Some(&(x, y))) => match k_linkage(&w.graph, x, y, k)? {
                        Search::Blocked { separator, .. } => Some((x, separator)),
                        Search::Found(_) => None,
                    },
                    _ => None,
                };
                (links.len(), blocked)
            }
        };
        r.push_series("disjoint_families", count as i64);
        r.push_series(
            "blocking_separator_size",
            blocked.as_ref().map_or(-1, |(_, s)| s.len() as i64),
        );
        if let Some((source, separator)) = blocked {
            certificates.push(json!({ "radius": rad, "source": source, "separator": separator }));
        }
    }
    let series = r.series("disjoint_families").to_vec();
    r.check(
        "families revalidate",
        Verdict::from_bool(invalid.is_none(), || invalid.clone().unwrap()),
    );
    r.check(
        "counts non-decreasing",
        Verdict::from_bool(non_decreasing(&series), || json!({ "series": series })),
    );
    let grows = non_decreasing(&series) && series.len() >= 2 && series.last() > series.first();
    r.check_with(
        "counts unbounded over tested radii",
        Verdict::from_bool(
            grows,
            || json!({ "series": series, "separators": certificates }),
        ),
        json!({ "separators": certificates }),
    );
    Ok(r)
}

/// Default search bound of `padded_witness_radius`: this many radii past `S`.
pub const PADDED_SEARCH_DEPTH: usize = 8;

/// Least `r' > s_radius` such that every vertex at distance `r'` lying in
/// `C(S, end)` sends a `k`-fan inside `C(S, end)` to the canonical ray, for
/// `S = ball(s_radius)`. Searched up to `s_radius + depth`.
///
/// Fans are searched in the window of radius `s_radius + depth + 2`, so a found
/// fan is a fan of the infinite graph; a missing one may exist further out.
pub fn padded_witness_radius(
    gen: &dyn Generator,
    end: usize,
    k: usize,
    s_radius: usize,
    depth: usize,
) -> Result<Report> {
    let bound = s_radius + depth;
    let mut r = Report::new("padded");
    r.radii = vec![s_radius];
    r.param("generator", gen.name())
        .param("end", end)
        .param("k", k)
        .param("s_radius", s_radius)
        .param("search_bound", bound);
    let w = window(gen, bound + 2);
    let s = w.ball(s_radius);
    let comp = component_cs_in(gen, &w, &s, end)?;
    let ray: VertexSet = truncate_ray_in(gen, &w, end, 0)?
        .vertex_set()
        .intersection(&comp)
        .copied()
        .collect();
    let outside: VertexSet = w.graph.vertices().difference(&comp).copied().collect();
    let mut found = None;
    let mut last_block = None;
    for rp in s_radius + 1..=bound {
        let layer: Vec<VertexId> = w
            .layer(rp)
            .into_iter()
            .filter(|v| comp.contains(v))
            .collect();
        let mut blocked = None;
        for &u in &layer {
            let mut targets = ray.clone();
            targets.remove(&u);
            if let Search::Blocked { max, separator } =
                k_fan_avoiding(&w.graph, u, &targets, k, &outside)?
            {
                blocked = Some(
                    json!({ "radius": rp, "vertex": u, "label": gen.label(u), "max": max, "separator": separator }),
                );
                break;
            }
        }
        match blocked {
            None if !layer.is_empty() => {
                found = Some(rp);
                break;
            }
            None => {}
            Some(b) => last_block = Some(b),
        }
    }
    r.push_series("witness_radius", found.map_or(-1, |x| x as i64));
    let detail = json!({ "witness_radius": found, "last_blocking_vertex": last_block });
    r.check_with(
        "padded witness radius found",
        Verdict::from_bool(
            found.is_some(),
            || json!({ "not_found_up_to": bound, "blocking": last_block }),
        ),
        detail,
    );
    Ok(r)
}

/// `padded_witness_radius` for several sizes of `S`, one entry per `s_radius`.
pub fn padded_study(
    gen: &dyn Generator,
    end: usize,
    k: usize,
    s_radii: &[usize],
    depth: usize,
) -> Result<Report> {
    let mut out = Report::new("padded");
    out.radii = s_radii.to_vec();
    out.param("generator", gen.name())
        .param("end", end)
        .param("k", k)
        .param("s_radii", s_radii)
        .param("search_depth", depth);
    for &s in s_radii {
        let one = padded_witness_radius(gen, end, k, s, depth)?;
        out.push_series("witness_radius", one.series("witness_radius")[0]);
        let c = one.checks.into_iter().next().expect("one check");
        let mut c = c;
        c.name = format!("{} (S = ball({s}))", c.name);
        out.checks.push(c);
    }
    Ok(out)
}

/// Lower bound on the vertex-degree of `end` per radius: the number of disjoint
/// paths from `ball(r/2)` to the sphere of radius `r`, certified by a separator.
pub fn end_degree_estimate(gen: &dyn Generator, end: usize, radii: &[usize]) -> Result<Report> {
    let ends = gen.ends();
    let info = ends
        .get(end)
        .ok_or_else(|| Error::Generator(format!("{} has no end {end}", gen.name())))?;
    let mut r = Report::new("end_degree");
    r.radii = radii.to_vec();
    r.param("generator", gen.name())
        .param("end", end)
        .param("radii", radii)
        .param("metadata", info.vertex_degree);
    let mut separators = Vec::new();
    for &rad in radii {
        let w = window(gen, rad);
        let (x, y) = (w.ball(rad / 2), w.layer(rad));
        let found = vertex_disjoint_paths(&w.graph, &x, &y, &VertexSet::new())?;
        r.push_series("estimate", found.paths.len() as i64);
        separators.push(json!({ "radius": rad, "separator": found.separator }));
    }
    let series = r.series("estimate").to_vec();
    r.check_with(
        "estimate non-decreasing",
        Verdict::from_bool(non_decreasing(&series), || json!({ "series": series })),
        json!({ "separators": separators }),
    );
    let last = series.last().copied().unwrap_or(0);
    let (name, ok) = match info.vertex_degree {
        EndDegree::Finite(d) => (
            format!("plateau equals metadata vertex-degree {d}"),
            last == d as i64,
        ),
        EndDegree::Infinite => (
            "estimate grows (metadata: infinite vertex-degree)".to_string(),
            series.len() >= 2 && series.last() > series.first(),
        ),
    };
    r.check(
        name,
        Verdict::from_bool(
            ok,
            || json!({ "series": series, "metadata": info.vertex_degree }),
        ),
    );
    Ok(r)
}
