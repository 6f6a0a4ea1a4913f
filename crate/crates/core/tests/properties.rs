//! Property tests against an independent Floyd–Warshall distance oracle.

use num_bigint::BigInt;
use proptest::prelude::*;

use status_indices::graph::{transmission_profile, transmission_profile_with_threads, Graph};
use status_indices::indices::{
    complement_bounds, diam2_coindex_formulas, index_bundle, orbit_indices,
    status_coindices_identity, transmission_regular_indices, OrbitPartition,
};
use status_indices::verify::random_connected_graph;

const INF: u64 = u64::MAX / 4;

fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Index sums straight from the matrix, looping over all ordered pairs.
fn oracle_indices(g: &Graph, d: &[Vec<u64>]) -> [BigInt; 5] {
    let n = g.n();
    let sigma: Vec<u64> = d.iter().map(|row| row.iter().sum()).collect();
    let (mut s1, mut s2, mut c1, mut c2, mut w) = (0u128, 0u128, 0u128, 0u128, 0u128);
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (sigma[u] as u128, sigma[v] as u128);
            w += d[u][v] as u128;
            if d[u][v] == 1 {
                s1 += a + b;
                s2 += a * b;
            } else {
                c1 += a + b;
                c2 += a * b;
            }
        }
    }
    [s1, s2, c1, c2, w].map(BigInt::from)
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=10, 1u32..=9, any::<u64>()).prop_map(|(n, tenths, seed)| {
        random_connected_graph(n, f64::from(tenths) / 10.0, seed).unwrap()
    })
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn profile_matches_floyd_warshall(g in connected_graph()) {
        let d = floyd_warshall(&g);
        let tp = transmission_profile(&g).unwrap();
        let sigma: Vec<u64> = d.iter().map(|row| row.iter().sum()).collect();
        prop_assert_eq!(&tp.sigma, &sigma);
        prop_assert_eq!(tp.diameter as u64, d.iter().flatten().copied().max().unwrap());
        prop_assert_eq!(tp.sigma.iter().sum::<u64>(), 2 * tp.wiener);
        prop_assert!(tp.sigma.iter().all(|&s| s >= g.n() as u64 - 1));
        prop_assert_eq!(tp.regular_k.is_some(), sigma.iter().all(|&s| s == sigma[0]));
    }

    #[test]
    fn bfs_is_symmetric(g in connected_graph()) {
        let rows: Vec<Vec<u32>> = (0..g.n()).map(|s| g.bfs_distances(s).unwrap()).collect();
        for (u, row) in rows.iter().enumerate() {
            for (v, &d) in row.iter().enumerate() {
                prop_assert_eq!(d, rows[v][u]);
            }
        }
    }

    #[test]
    fn bundle_matches_matrix_oracle(g in connected_graph()) {
        let d = floyd_warshall(&g);
        let tp = transmission_profile(&g).unwrap();
        let b = index_bundle(&g, &tp).unwrap();
        let [s1, s2, c1, c2, w] = oracle_indices(&g, &d);
        prop_assert_eq!((b.s1, b.s2, b.s1_co, b.s2_co, b.wiener), (s1, s2, c1, c2, w));
    }

    #[test]
    fn identity_path_equals_definition_path(g in connected_graph()) {
        let tp = transmission_profile(&g).unwrap();
        let b = index_bundle(&g, &tp).unwrap();
        let (c1, c2) = status_coindices_identity(&tp, &b.s1, &b.s2).unwrap();
        prop_assert_eq!((c1, c2), (b.s1_co, b.s2_co));
    }

    #[test]
    fn complement_is_an_involution(g in any_graph()) {
        let co = g.complement();
        prop_assert_eq!(co.m() + g.m(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(co.complement(), g);
    }

    #[test]
    fn diameter_two_transmission_and_formulas(g in connected_graph()) {
        let tp = transmission_profile(&g).unwrap();
        if tp.diameter <= 2 {
            let n = g.n() as u64;
            for u in 0..g.n() {
                prop_assert_eq!(tp.sigma[u], 2 * n - 2 - g.degree(u) as u64);
            }
            let b = index_bundle(&g, &tp).unwrap();
            let f = diam2_coindex_formulas(&g).unwrap();
            prop_assert_eq!(&f.s1_co_from_zagreb, &b.s1_co);
            prop_assert_eq!(&f.s1_co_from_cozagreb, &b.s1_co);
            prop_assert_eq!(&f.s2_co_from_zagreb, &b.s2_co);
            prop_assert_eq!(&f.s2_co_from_cozagreb, &b.s2_co);
        } else {
            prop_assert!(diam2_coindex_formulas(&g).is_err());
        }
    }

    #[test]
    fn complement_bounds_hold(g in any_graph()) {
        if g.n() >= 2 && g.complement().is_connected() {
            let r = complement_bounds(&g).unwrap();
            prop_assert!(r.s1_actual >= r.s1_lower);
            prop_assert!(r.s2_actual >= r.s2_lower);
            prop_assert_eq!(r.equality, r.complement_diameter <= 2);
            // either bound alone is tight exactly at diameter ≤ 2
            prop_assert_eq!(r.s1_actual == r.s1_lower, r.complement_diameter <= 2);
        }
    }

    #[test]
    fn orbit_formula_under_refinement(g in connected_graph()) {
        let tp = transmission_profile(&g).unwrap();
        let b = index_bundle(&g, &tp).unwrap();
        // coarsest valid partition: group by (degree, transmission)
        let mut keys: Vec<(usize, u64)> = (0..g.n()).map(|u| (g.degree(u), tp.sigma[u])).collect();
        keys.sort();
        keys.dedup();
        let coarse: Vec<Vec<usize>> = keys
            .iter()
            .map(|&k| (0..g.n()).filter(|&u| (g.degree(u), tp.sigma[u]) == k).collect())
            .collect();
        let fine: Vec<Vec<usize>> = (0..g.n()).map(|u| vec![u]).collect();
        for blocks in [coarse, fine] {
            let op = OrbitPartition::new(blocks, &g, &tp).unwrap();
            let (s1, s1_co) = orbit_indices(&g, &tp, &op).unwrap();
            prop_assert_eq!((s1, s1_co), (b.s1.clone(), b.s1_co.clone()));
        }
    }

    #[test]
    fn transmission_regular_consistency(n in 3u32..=30) {
        let g = Graph::from_edges(n as usize, (0..n as usize).map(|i| (i, (i + 1) % n as usize))).unwrap();
        let tp = transmission_profile(&g).unwrap();
        let k = tp.regular_k.unwrap();
        let b = index_bundle(&g, &tp).unwrap();
        let v = transmission_regular_indices(n.into(), g.m() as u64, k).unwrap();
        prop_assert_eq!(v, b.status());
    }

    #[test]
    fn thread_count_is_invisible(g in connected_graph(), threads in 1usize..=4) {
        prop_assert_eq!(transmission_profile_with_threads(&g, threads).unwrap(), transmission_profile(&g).unwrap());
    }
}
