// Runs every program in examples/ as a test.

macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));

            #[test]
            fn runs() {
                main().unwrap();
            }
        }
    };
}

example!(worked_example, "worked_example.rs");
example!(family_generators, "family_generators.rs");
example!(closed_forms, "closed_forms.rs");
example!(coindex_identities, "coindex_identities.rs");
example!(complement_bounds, "complement_bounds.rs");
example!(orbit_partition, "orbit_partition.rs");
example!(verify_grid, "verify_grid.rs");
example!(parallel_transmission, "parallel_transmission.rs");
