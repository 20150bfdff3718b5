//! The same closed-walk counts from three independent computations:
//! direct dynamic programming inside the chamber, the signed reflection sum,
//! and the coefficients of the Bessel determinant.

use pseudoknot::walk::ChamberPoint;
use pseudoknot::walks::{chamber_walk_counts, coefficient_counts, reflection_counts, walk_generating_function};

fn main() -> pseudoknot::Result<()> {
    let n_max = 12;
    for k in 2..=4 {
        for stays in [false, true] {
            let base = ChamberPoint::base(k);
            let chamber = chamber_walk_counts(k, n_max, stays);
            let reflection = reflection_counts(k, n_max, &base, &base, stays)?;
            let series = coefficient_counts(k, n_max, stays)?;
            assert_eq!(chamber, reflection);
            assert_eq!(chamber, series);
            let shown: Vec<String> = chamber.iter().map(ToString::to_string).collect();
            println!("k={k} stays={stays:<5} {}", shown.join(" "));
        }
    }
    println!("\nexponential generating function for k = 3, no stays:");
    println!("{}", walk_generating_function(3, 8, false)?);
    Ok(())
}
