//! Family generators checked against the published counts and transmission
//! formulas, evaluated here independently of the closed-form module.

use status_indices::arith::binomial;
use status_indices::families::FamilySpec;
use status_indices::graph::transmission_profile;
use status_indices::verify::default_grid;

fn c(n: u32, k: u32) -> u64 {
    u64::try_from(&binomial(n.into(), k.into())).unwrap()
}

/// (vertices, degree, transmission) expected for a family member.
fn expected(spec: &FamilySpec) -> (u64, u64, u64) {
    match *spec {
        FamilySpec::Hypercube { n } => (1 << n, n.into(), u64::from(n) << (n - 1)),
        FamilySpec::Kneser { p, k } => (c(p, k), c(p - k, k), 0),
        FamilySpec::Intersection { p, t } => {
            let n = c(p, t);
            if p >= 2 * t {
                let b = c(p - t, t);
                (n, n - b - 1, n + b - 1)
            } else {
                (n, n - 1, n - 1)
            }
        }
        FamilySpec::Nanotorus { p, q } => {
            let (p, q) = (u64::from(p), u64::from(q));
            let k = if q < p {
                q * (6 * p * p + q * q - 4) / 12
            } else {
                p * (3 * q * q + 3 * p * q + p * p - 4) / 12
            };
            (p * q, 3, k)
        }
        _ => unreachable!(),
    }
}

#[test]
fn grid_counts_and_transmissions() {
    for spec in default_grid() {
        let Ok(g) = spec.generate() else {
            // T[4,2] cannot be generated as a simple graph
            assert_eq!(spec, FamilySpec::Nanotorus { p: 4, q: 2 });
            continue;
        };
        let (n, d, k) = expected(&spec);
        assert_eq!(g.n() as u64, n, "{spec}");
        assert_eq!(g.is_regular(), Some(d as usize), "{spec}");
        assert_eq!(2 * g.m() as u64, n * d, "{spec}");
        let tp = transmission_profile(&g).unwrap();
        let got = tp
            .regular_k
            .unwrap_or_else(|| panic!("{spec} not transmission-regular"));
        if !matches!(spec, FamilySpec::Kneser { .. }) {
            assert_eq!(got, k, "{spec}");
        }
    }
}

#[test]
fn intersection_below_half_is_complete() {
    for (p, t) in [(3, 2), (5, 3), (7, 4), (7, 5)] {
        let g = FamilySpec::Intersection { p, t }.generate().unwrap();
        let n = g.n();
        assert_eq!(g.m(), n * (n - 1) / 2, "p={p} t={t}");
    }
}

#[test]
fn intersection_is_kneser_complement() {
    for (p, t) in [(5, 2), (7, 3), (8, 3)] {
        let inter = FamilySpec::Intersection { p, t }.generate().unwrap();
        let kneser = FamilySpec::Kneser { p, k: t }.generate().unwrap();
        assert_eq!(inter, kneser.complement());
    }
}

#[test]
fn odd_graph_o4() {
    // KG(7,3): 35 vertices, 4-regular, diameter 3
    let g = FamilySpec::Kneser { p: 7, k: 3 }.generate().unwrap();
    assert_eq!((g.n(), g.is_regular()), (35, Some(4)));
    assert_eq!(transmission_profile(&g).unwrap().diameter, 3);
}

#[test]
fn generation_is_deterministic_across_pools() {
    for spec in default_grid().into_iter().filter(|s| s.validate().is_ok()) {
        let a = spec.generate().unwrap().to_edge_list();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(3)
            .build()
            .unwrap();
        let b = pool.install(|| spec.generate().unwrap().to_edge_list());
        assert_eq!(a, b, "{spec}");
    }
}
