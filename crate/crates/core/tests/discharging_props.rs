mod common;

use capcol::discharging::{audit, detect_reducible, initial_charges, transfers, Charge, Element};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn charge_is_conserved(seed in 0u64..100_000, splits in 0usize..40, extra in 0usize..6) {
        let g = common::with_parallel_edges(&common::random_connected(seed, splits), seed, extra);
        let r = audit(&g).unwrap();
        prop_assert_eq!(r.initial_total, Charge(-48));
        prop_assert_eq!(r.final_total, Charge(-48));
        prop_assert!(r.conserved);
    }

    #[test]
    fn some_configuration_is_always_present(seed in 0u64..100_000, splits in 0usize..40, extra in 0usize..6) {
        let g = common::with_parallel_edges(&common::random_connected(seed, splits), seed, extra);
        let r = audit(&g).unwrap();
        prop_assert!(!r.hits.is_empty());
        prop_assert!(r.alarm.is_none());
    }

    #[test]
    fn transfers_only_feed_triangles(seed in 0u64..100_000, splits in 0usize..40) {
        let g = common::random_connected(seed, splits);
        let table = g.face_table();
        let start = initial_charges(&g).unwrap();
        for t in transfers(&g) {
            prop_assert!(t.amount.0 > 0);
            match t.to {
                Element::Face(f) => prop_assert_eq!(table.faces[f].degree(), 3),
                Element::Vertex(_) => prop_assert!(false, "vertex receives charge"),
            }
            if let Element::Face(f) = t.from {
                prop_assert!(table.faces[f].degree() >= 5);
            }
        }
        prop_assert_eq!(start.face_charge.len(), table.faces.len());
    }
}

#[test]
fn witnesses_name_real_elements() {
    for e in capcol::corpus::corpus() {
        let g = e.graph().unwrap();
        let faces = g.faces().len();
        for hit in detect_reducible(&g) {
            assert!(!hit.witnesses.is_empty());
            for w in &hit.witnesses {
                match w.element {
                    Element::Vertex(v) => assert!(v < g.vertex_count()),
                    Element::Face(f) => assert!(f < faces),
                }
            }
        }
    }
}
