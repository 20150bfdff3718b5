//! Closed forms and recursions for k = 2 and k = 3 checked against the
//! inclusion-exclusion values.

use pseudoknot::closedforms::{
    s2_recursion_check, s2_waterman, s3_closed, s3_recursion_check, s3_recursion_coefficients,
};
use pseudoknot::transforms;

fn main() -> pseudoknot::Result<()> {
    let n = 12;
    println!("k = 2, n = {n}");
    for l in (0..=n).step_by(2) {
        let ie = transforms::s(2, n as usize, l as usize)?;
        assert_eq!(ie, s2_waterman(n, l));
        println!(
            "  l = {l:>2}: {ie:>6}  recursion holds: {}",
            l + 2 > n || s2_recursion_check(n, l)
        );
    }

    let n = 14;
    println!("\nk = 3, n = {n}");
    for l in (0..=n).step_by(2) {
        let ie = transforms::s(3, n as usize, l as usize)?;
        assert_eq!(ie, s3_closed(n, l));
        let [p1, p2, p3, p4] = s3_recursion_coefficients(n, l);
        println!(
            "  l = {l:>2}: {ie:>8}  2p = ({p1}, {p2}, {p3}, {p4})  holds: {}",
            s3_recursion_check(n, l)
        );
    }
    Ok(())
}
