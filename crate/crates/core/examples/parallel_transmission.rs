// All-pairs BFS on the 10-cube with different worker counts; the profile
// is identical regardless of the schedule.

use std::time::Instant;

use status_indices::graph::transmission_profile_with_threads;
use status_indices::FamilySpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = FamilySpec::Hypercube { n: 10 }.generate()?;
    let mut reference = None;
    for threads in [1, 2, 4, 8] {
        let start = Instant::now();
        let tp = transmission_profile_with_threads(&g, threads)?;
        println!(
            "threads={threads}: W={} k={:?} in {:?}",
            tp.wiener,
            tp.regular_k,
            start.elapsed()
        );
        match &reference {
            None => reference = Some(tp),
            Some(r) => assert_eq!(r, &tp),
        }
    }
    Ok(())
}
