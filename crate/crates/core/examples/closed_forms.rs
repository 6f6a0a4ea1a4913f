// Corrected and as-printed closed forms side by side.

use status_indices::closed_forms::{closed_forms, IndexName};
use status_indices::{transmission_profile, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        FamilySpec::Hypercube { n: 2 },
        FamilySpec::Hypercube { n: 5 },
        FamilySpec::Kneser { p: 5, k: 2 },
        FamilySpec::Intersection { p: 4, t: 2 },
        FamilySpec::Nanotorus { p: 4, q: 2 },
        FamilySpec::Nanotorus { p: 2, q: 4 },
    ];
    for spec in specs {
        // Kneser graphs need their Wiener index, taken from BFS
        let wiener = match spec {
            FamilySpec::Kneser { .. } => {
                Some(transmission_profile(&spec.generate()?)?.wiener.into())
            }
            _ => None,
        };
        let r = closed_forms(&spec, wiener.as_ref())?;
        println!("{spec}: n={} m={} degree={}", r.n, r.m, r.degree);
        for index in IndexName::ALL {
            let v = r.get(index);
            let printed = v
                .as_printed
                .as_ref()
                .map_or("-".to_string(), |p| p.to_string());
            let flag = if v.erratum { "  <- erratum" } else { "" };
            println!(
                "  {:<7} corrected {:>12}  printed {:>12}{flag}",
                index.as_str(),
                v.corrected,
                printed
            );
        }
    }
    Ok(())
}
