use polyvis::gen::generate_polygon;
use polyvis::geom::SimplePolygon;

/// Deterministic corpus: one polygon per (size, seed) pair.
pub fn corpus(sizes: std::ops::RangeInclusive<usize>, seeds_per_size: u64) -> Vec<SimplePolygon> {
    let mut out = Vec::new();
    for n in sizes {
        for seed in 1..=seeds_per_size {
            let seed = seed + 1000 * n as u64;
            out.push(generate_polygon(n, seed).expect("generator succeeds"));
        }
    }
    out
}
