// Generates one member of each family and prints its order, size, degree
// and common transmission.

use status_indices::{transmission_profile, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        FamilySpec::Hypercube { n: 4 },
        FamilySpec::Kneser { p: 5, k: 2 },
        FamilySpec::Kneser { p: 7, k: 3 },
        FamilySpec::Intersection { p: 6, t: 2 },
        FamilySpec::Intersection { p: 5, t: 3 },
        FamilySpec::Nanotorus { p: 6, q: 4 },
        FamilySpec::Cycle { n: 9 },
    ];
    for spec in specs {
        let g = spec.generate()?;
        let tp = transmission_profile(&g)?;
        println!(
            "{spec:<26} n={:<4} m={:<5} degree={:?} k={:?} diameter={}",
            g.n(),
            g.m(),
            g.is_regular(),
            tp.regular_k,
            tp.diameter
        );
    }

    let petersen = FamilySpec::Kneser { p: 5, k: 2 }.generate()?;
    print!("\nKG(5,2) edge list:\n{}", petersen.to_edge_list());
    Ok(())
}
