macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().expect("example runs");
        }
    };
}

example!(field_arithmetic);
example!(ovoid_geometry);
example!(weight_distribution);
example!(subfield_code);
example!(dual_distance);
example!(character_sums);
example!(predicted_tables);
example!(bounds);
example!(full_report);
