//! Benchmark fixtures.

use edgespace_core::MultiGraph;

/// `K_n` on `1..=n`, edge `ij` numbered `n·i + j`.
pub fn complete(n: u64) -> MultiGraph {
    let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (n * i + j, i, j)));
    MultiGraph::new(1..=n, edges).expect("simple graph")
}

/// The `w × h` grid, vertex `(x, y)` numbered `w·y + x`.
pub fn grid(w: u64, h: u64) -> MultiGraph {
    let v = |x: u64, y: u64| w * y + x;
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                edges.push((2 * v(x, y), v(x, y), v(x + 1, y)));
            }
            if y + 1 < h {
                edges.push((2 * v(x, y) + 1, v(x, y), v(x, y + 1)));
            }
        }
    }
    MultiGraph::new(0..w * h, edges).expect("simple graph")
}
