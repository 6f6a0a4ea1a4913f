// S1 and its co-index from per-orbit degree and transmission, on a graph
// with three vertex orbits (the path on five vertices).

use status_indices::indices::{orbit_indices, OrbitPartition};
use status_indices::{compute_indices, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = FamilySpec::Path { n: 5 }.generate()?;
    let (tp, b) = compute_indices(&g)?;
    let orbits = OrbitPartition::new(vec![vec![0, 4], vec![1, 3], vec![2]], &g, &tp)?;
    for block in orbits.summary(&g, &tp) {
        println!(
            "|V_i|={} d_i={} k_i={}",
            block.size, block.degree, block.transmission
        );
    }
    let (s1, s1_co) = orbit_indices(&g, &tp, &orbits)?;
    println!(
        "orbit formula: S1={s1} S̄1={s1_co}; edge sums: S1={} S̄1={}",
        b.s1, b.s1_co
    );
    assert_eq!((s1, s1_co), (b.s1, b.s1_co));

    // blocks must share degree and transmission
    let rejected = OrbitPartition::new(vec![vec![0, 1], vec![2, 3, 4]], &g, &tp);
    println!("mixed block rejected: {}", rejected.unwrap_err());
    Ok(())
}
