//! Structures without 1-arcs and 2-arcs, and structures on a circle, next to
//! the unrestricted counts.

use pseudoknot::transforms::{self, lambda_circular, lambda_restricted};

fn main() -> pseudoknot::Result<()> {
    let k = 3;
    println!("{:>3} {:>12} {:>12} {:>12}", "n", "plain", "circular", "restricted");
    for n in 1..=20 {
        println!(
            "{n:>3} {:>12} {:>12} {:>12}",
            transforms::s_total(k, n)?,
            transforms::s_circular_total(k, n)?,
            transforms::s_restricted_total(k, n)?,
        );
    }

    println!("\nselections of b disjoint 1-arcs on a 10-cycle");
    for b in 0..=5 {
        println!("  b = {b}: {}", lambda_circular(10, b));
    }
    println!("\nselections of b1 1-arcs and b2 2-arcs on 10 vertices");
    for b1 in 0..=3 {
        let row: Vec<String> = (0..=3).map(|b2| lambda_restricted(10, b1, b2).to_string()).collect();
        println!("  b1 = {b1}: {}", row.join(" "));
    }
    Ok(())
}
