use capcol::capital::validate_capital;
use capcol::generators::cycle;

fn main() {
    let c4 = cycle(4).unwrap();
    // 2-colouring a square gives both faces two maxima
    let report = validate_capital(&c4, &[1, 2, 1, 2]);
    println!("(1,2,1,2): valid {}", report.is_valid());
    for f in &report.faces {
        println!("  face {:?}: max {} held by {:?}", f.vertices, f.max, f.holders);
    }
    println!("(1,2,1,3): valid {}", validate_capital(&c4, &[1, 2, 1, 3]).is_valid());
}
