//! Random 7-lists from 1..=10 on the icosahedron, solved exactly.

use capcol::exact::{capital_list_colouring, random_lists, SolveBudget};
use capcol::generators::icosahedron;

fn main() {
    let g = icosahedron().unwrap();
    let seed = 7;
    for trial in 0..5 {
        let lists = random_lists(g.vertex_count(), 7, 10, seed + trial).unwrap();
        let col = capital_list_colouring(&g, &lists, SolveBudget::default()).unwrap();
        println!("trial {trial}: {:?}", col.expect("7 colours per list suffice"));
    }
}
