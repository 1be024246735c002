use capcol::exact::{probe_choosability, ProbeOutcome, SolveBudget};
use capcol::generators::{cycle, grid};

fn main() {
    let k2 = grid(1, 2).unwrap();
    println!("K2, 2-lists from 1..=3: {:?}", probe_choosability(&k2, 2, 3, SolveBudget::default()).unwrap());

    let c4 = cycle(4).unwrap();
    for k in 2..=3 {
        match probe_choosability(&c4, k, 4, SolveBudget::default()).unwrap() {
            ProbeOutcome::AllSatisfied { assignments } => println!("C4, {k}-lists: all {assignments} colourable"),
            ProbeOutcome::Counterexample { lists } => println!("C4, {k}-lists: stuck on {lists:?}"),
        }
    }
}
