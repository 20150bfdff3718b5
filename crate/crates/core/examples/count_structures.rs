//! Totals and per-isolated-vertex counts of k-noncrossing structures.
//!
//! `cargo run --example count_structures -- 4 20`

use pseudoknot::transforms;

fn main() -> pseudoknot::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: usize = args.next().map_or(3, |a| a.parse().expect("k"));
    let n_max: usize = args.next().map_or(15, |a| a.parse().expect("n"));

    println!("{k}-noncrossing structures");
    for n in 1..=n_max {
        println!("{n:>4} {:>30}", transforms::s_total(k, n)?);
    }

    let n = n_max.min(12);
    println!("\nn = {n}, split by number of unpaired vertices");
    for l in (n % 2..=n).step_by(2) {
        println!("  l = {l:>2}: {}", transforms::s(k, n, l)?);
    }
    Ok(())
}
