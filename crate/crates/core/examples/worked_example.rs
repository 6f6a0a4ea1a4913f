// Every index of the five-vertex worked example, and the identity checks
// that expose its misprinted first co-index.

use status_indices::compute_indices;
use status_indices::verify::{verify_identities, worked_example_graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = worked_example_graph();
    let (tp, b) = compute_indices(&g)?;

    println!("transmissions: {:?}", tp.sigma);
    println!("W = {}, diameter = {}", tp.wiener, tp.diameter);
    println!(
        "S1 = {}, S2 = {}, S̄1 = {}, S̄2 = {}",
        b.s1, b.s2, b.s1_co, b.s2_co
    );
    println!(
        "M1 = {}, M2 = {}, M̄1 = {}, M̄2 = {}",
        b.m1, b.m2, b.m1_co, b.m2_co
    );

    let report = verify_identities("worked-example", &g)?;
    for case in report.mismatches() {
        println!(
            "{}: computed {}, printed {} ({})",
            case.check,
            case.oracle,
            case.claimed,
            case.erratum.unwrap_or("unregistered")
        );
    }
    assert!(report.is_clean());
    Ok(())
}
