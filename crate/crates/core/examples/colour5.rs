//! Five-colour every graph in the built-in corpus and check each result.

use capcol::capital::{colour5, validate_capital};
use capcol::corpus::corpus;

fn main() {
    for entry in corpus() {
        let g = entry.graph().expect("corpus graphs build");
        let col = colour5(&g).expect("every plane graph has one");
        let max = col.iter().max().copied().unwrap_or(0);
        let ok = validate_capital(&g, &col).is_valid();
        println!("{:<28} n={:<3} max colour {max}  valid {ok}", entry.name, g.vertex_count());
    }
}
