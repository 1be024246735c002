//! Red/blue/black colourings of graphs full of separating cycles.

use capcol::generators::{nested_2gon, stellated_triangles};
use capcol::plane_graph::PlaneGraph;
use capcol::rbb::{check_conditions, lemma3_rbb_traced, Rbb, RbbRequest};

fn show(name: &str, g: &PlaneGraph) {
    let d = g.outer_darts()[0];
    let (x, y) = (g.origin(d), g.head(d));
    for c in [Rbb::Blue, Rbb::Black] {
        let req = RbbRequest::strong(x, y, c);
        let (col, trace) = lemma3_rbb_traced(g, &req).unwrap();
        assert!(check_conditions(g, &col, &req).is_empty());
        let line: Vec<String> = col.iter().map(|c| c.to_string()).collect();
        println!("{name} x={x} y={y} c={c}: {}", line.join(" "));
        println!("  {trace:?}");
    }
}

fn main() {
    show("stellated(2)", &stellated_triangles(2).unwrap());
    // 2-faces must be collapsed first
    show("nested_2gon(3)", &nested_2gon(3).unwrap().collapse_two_faces());
}
