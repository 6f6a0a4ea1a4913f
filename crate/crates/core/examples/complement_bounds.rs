// Lower bounds on the status indices of the complement, tight exactly when
// the complement has diameter at most 2.

use status_indices::indices::complement_bounds;
use status_indices::{FamilySpec, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("C5", FamilySpec::Cycle { n: 5 }.generate()?),
        ("P4", FamilySpec::Path { n: 4 }.generate()?),
        ("P6", FamilySpec::Path { n: 6 }.generate()?),
        ("KG(5,2)", FamilySpec::Kneser { p: 5, k: 2 }.generate()?),
    ];
    for (name, g) in graphs {
        let b = complement_bounds(&g)?;
        println!(
            "{name:<8} S1(co) {} >= {}  S2(co) {} >= {}  diam(co)={} equality={}",
            b.s1_actual, b.s1_lower, b.s2_actual, b.s2_lower, b.complement_diameter, b.equality
        );
    }
    Ok(())
}
