//! A diagram, its oscillating tableau and its lattice walk.
//!
//! `cargo run --example bijection_roundtrip -- '6;1-4,2-5,3-6'`

use pseudoknot::bijection::{crossing_number, diagram_to_walk, diagram_trace, walk_to_diagram};
use pseudoknot::Diagram;

fn main() -> pseudoknot::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "8;1-5,2-7,3-6,4-8".to_string());
    let d: Diagram = text.parse()?;
    let crossing = crossing_number(&d);
    let k = (crossing + 1).max(2);
    println!("diagram   {d}");
    println!("crossing  {crossing} (so the smallest k admitting it is {k})");

    let trace = diagram_trace(&d);
    println!("tableaux  {}", trace.shape_sequence_string());
    for (i, t) in trace.tableaux().iter().enumerate() {
        println!("  {i:>2}: {:?}", t.rows());
    }

    let walk = diagram_to_walk(k, &d)?;
    println!("walk      {walk}");
    for (i, p) in walk.positions().iter().enumerate() {
        println!("  {i:>2}: {p:?}");
    }

    let back = walk_to_diagram(&walk)?;
    assert_eq!(back, d);
    println!("round trip ok");

    if crossing >= 2 {
        match diagram_to_walk(crossing, &d) {
            Err(e) => println!("with k = {crossing}: {e}"),
            Ok(w) => unreachable!("{w}"),
        }
    }
    Ok(())
}
