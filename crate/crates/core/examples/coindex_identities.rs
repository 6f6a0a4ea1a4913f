// Co-indices two ways (enumerating non-adjacent pairs, and from the Wiener
// index) on seeded random graphs, plus the diameter-2 formulas.

use status_indices::compute_indices;
use status_indices::indices::{diam2_coindex_formulas, status_coindices_identity};
use status_indices::verify::random_connected_graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for seed in 0..6 {
        let g = random_connected_graph(8, 0.45, seed)?;
        let (tp, b) = compute_indices(&g)?;
        let (s1_co, s2_co) = status_coindices_identity(&tp, &b.s1, &b.s2)?;
        assert_eq!((&s1_co, &s2_co), (&b.s1_co, &b.s2_co));
        print!(
            "seed {seed}: m={:<2} W={:<3} diam={} S̄1={:<5} S̄2={:<7}",
            g.m(),
            tp.wiener,
            tp.diameter,
            b.s1_co,
            b.s2_co
        );
        if tp.diameter <= 2 {
            let f = diam2_coindex_formulas(&g)?;
            assert_eq!(f.s1_co_from_zagreb, b.s1_co);
            assert_eq!(f.s2_co_from_cozagreb, b.s2_co);
            print!(" (diameter-2 formulas agree)");
        }
        println!();
    }
    Ok(())
}
