//! Exhaustive enumeration of diagrams against the formulas.

use pseudoknot::oracle::OracleProfile;
use pseudoknot::transforms::cached_table;
use pseudoknot::Variant;

fn main() -> pseudoknot::Result<()> {
    let n_max: usize = std::env::args().nth(1).map_or(10, |a| a.parse().expect("n"));
    for n in 0..=n_max {
        let profile = OracleProfile::build(n)?;
        let mut line = format!("n={n:>2}");
        for k in 2..=4 {
            let table = cached_table(k, n)?;
            for variant in Variant::ALL {
                if variant == Variant::Restricted && k == 2 {
                    continue;
                }
                let brute = profile.count(k, variant, None);
                assert_eq!(brute, table.structures(variant, n, None)?);
                line.push_str(&format!("  {}{k}={brute}", &variant.name()[..1]));
            }
        }
        println!("{line}");
    }
    println!("all enumerated counts agree");
    Ok(())
}
