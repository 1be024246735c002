//! Charge audit of a few triangulations and a grid.

use capcol::discharging::audit;
use capcol::generators::generate;

fn main() {
    for (family, params) in [("icosahedron", vec![]), ("apollonian", vec![25, 3]), ("antiprism", vec![8]), ("grid", vec![4, 5])] {
        let g = generate(family, &params).unwrap();
        let r = audit(&g).unwrap();
        println!(
            "{family}{params:?}: total {} -> {}, {} transfers, {} hits, ok {}",
            r.initial_total,
            r.final_total,
            r.transfers.len(),
            r.hits.len(),
            r.ok()
        );
        if let Some(hit) = r.hits.first() {
            println!("  first hit {:?} {:?}", hit.kind, hit.witnesses);
        }
    }
}
