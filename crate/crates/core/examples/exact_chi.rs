//! Exact capital chromatic numbers of a few small plane graphs.

use capcol::exact::{chi_capital_with_colouring, SolveBudget};
use capcol::generators::generate;

fn main() {
    let cases: &[(&str, &[u64])] = &[
        ("grid", &[1, 2]),
        ("cycle", &[4]),
        ("cycle", &[5]),
        ("wheel", &[3]),
        ("grid", &[3, 3]),
        ("octahedron", &[]),
        ("icosahedron", &[]),
    ];
    for (family, params) in cases {
        let g = generate(family, params).unwrap();
        match chi_capital_with_colouring(&g, SolveBudget::default()) {
            Ok((k, col)) => println!("{family}{params:?}: chi = {k}, e.g. {col:?}"),
            Err(e) => println!("{family}{params:?}: {e}"),
        }
    }
}
