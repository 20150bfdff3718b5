//! `verify` suites. Each check prints `PASS name` or `FAIL name: detail`.

use std::io::Write;

use super::cache::TableCache;
use super::{io_failure, table_keys, table_rows, Failure, Suite, VerifyArgs, EXIT_FAILURE, EXIT_OK};
use crate::bijection::{crossing_number, diagram_to_walk, max_shape_rows, walk_to_diagram};
use crate::closedforms::{s2_recursion_check, s2_waterman, s3_closed, s3_recursion_check};
use crate::numbers::Count;
use crate::oracle::{enumerate_diagrams, OracleProfile, Variant, ORACLE_MAX_N};
use crate::transforms::cached_table;
use crate::walk::ChamberPoint;
use crate::walks::{chamber_walk_counts, coefficient_counts, reflection_counts};

/// Published totals for `k = 3`, `n = 1..=15`.
pub const PLAIN_K3: [u64; 15] = [
    1, 1, 2, 5, 13, 36, 105, 321, 1018, 3334, 11216, 38635, 135835, 486337, 1769500,
];
pub const RESTRICTED_K3: [u64; 15] = [
    1, 1, 1, 2, 5, 14, 40, 119, 364, 1145, 3688, 12139, 40734, 139071, 482214,
];

struct Report<'a> {
    out: &'a mut dyn Write,
    passed: usize,
    failed: usize,
}

impl Report<'_> {
    fn check(&mut self, name: &str, outcome: Result<(), String>) -> Result<(), Failure> {
        match outcome {
            Ok(()) => {
                self.passed += 1;
                writeln!(self.out, "PASS {name}")
            }
            Err(detail) => {
                self.failed += 1;
                writeln!(self.out, "FAIL {name}: {detail}")
            }
        }
        .map_err(io_failure)
    }
}

fn expect_eq(got: &Count, want: &Count) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got}, expected {want}"))
    }
}

pub(super) fn cmd_verify(
    args: &VerifyArgs,
    cache: Option<&TableCache>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8, Failure> {
    let suites: &[Suite] = match args.suite {
        Suite::All => &[
            Suite::PaperTables,
            Suite::Routes,
            Suite::Recursions,
            Suite::Bijection,
            Suite::Oracle,
        ],
        ref one => std::slice::from_ref(one),
    };
    let mut report = Report {
        out: stdout,
        passed: 0,
        failed: 0,
    };
    for suite in suites {
        match suite {
            Suite::PaperTables => paper_tables(&mut report, cache, stderr)?,
            Suite::Routes => routes(&mut report, args.n_max.unwrap_or(12))?,
            Suite::Recursions => recursions(&mut report, args.n_max.unwrap_or(30))?,
            Suite::Bijection => bijection(&mut report, args.n_max.unwrap_or(8))?,
            Suite::Oracle => oracle(&mut report, args.n_max.unwrap_or(9))?,
            Suite::All => unreachable!(),
        }
    }
    writeln!(report.out, "{} passed, {} failed", report.passed, report.failed).map_err(io_failure)?;
    Ok(if report.failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn paper_tables(report: &mut Report, cache: Option<&TableCache>, stderr: &mut dyn Write) -> Result<(), Failure> {
    for (variant, expected) in [(Variant::Plain, PLAIN_K3), (Variant::Restricted, RESTRICTED_K3)] {
        let rows = table_rows(3, variant, &table_keys(15, false), cache, stderr)?;
        for (n, want) in (1..=15).zip(expected) {
            let got = &rows[n].count;
            report.check(
                &format!("paper-tables {variant} k=3 n={n}"),
                expect_eq(got, &Count::from(want)),
            )?;
        }
    }
    Ok(())
}

fn routes(report: &mut Report, n_max: usize) -> Result<(), Failure> {
    for k in 2..=5 {
        for zero in [false, true] {
            let base = ChamberPoint::base(k);
            let chamber = chamber_walk_counts(k, n_max, zero);
            let outcome = reflection_counts(k, n_max, &base, &base, zero)
                .and_then(|refl| Ok((refl, coefficient_counts(k, n_max, zero)?)))
                .map_err(|e| e.to_string())
                .and_then(|(refl, series)| {
                    match (0..=n_max).find(|&n| chamber[n] != refl[n] || chamber[n] != series[n]) {
                        None => Ok(()),
                        Some(n) => Err(format!(
                            "n={n}: chamber {} reflection {} series {}",
                            chamber[n], refl[n], series[n]
                        )),
                    }
                });
            let steps = if zero { "with-stay" } else { "no-stay" };
            report.check(&format!("routes k={k} {steps} n<={n_max}"), outcome)?;
        }
    }
    Ok(())
}

fn recursions(report: &mut Report, n_max: usize) -> Result<(), Failure> {
    let n_max = n_max as i64;
    for n in 0..=n_max {
        let outcome = (n % 2..=n).step_by(2).try_for_each(|l| {
            let ie = crate::transforms::s(2, n as usize, l as usize).map_err(|e| e.to_string())?;
            expect_eq(&ie, &s2_waterman(n, l)).map_err(|e| format!("closed form l={l}: {e}"))?;
            if n >= 2 && l <= n - 2 && !s2_recursion_check(n, l) {
                return Err(format!("two-term recursion fails at l={l}"));
            }
            Ok(())
        });
        report.check(&format!("recursions k=2 n={n}"), outcome)?;
    }
    for n in 0..=n_max {
        let outcome = (0..=n).try_for_each(|l| {
            let ie = crate::transforms::s(3, n as usize, l as usize).map_err(|e| e.to_string())?;
            expect_eq(&ie, &s3_closed(n, l)).map_err(|e| format!("closed form l={l}: {e}"))?;
            if n >= 7 && !s3_recursion_check(n, l) {
                return Err(format!("four-term recursion fails at l={l}"));
            }
            Ok(())
        });
        report.check(&format!("recursions k=3 n={n}"), outcome)?;
    }
    Ok(())
}

fn bijection(report: &mut Report, n_max: usize) -> Result<(), Failure> {
    if n_max > ORACLE_MAX_N {
        return Err(Failure::usage(format!(
            "bijection suite supports --n-max <= {ORACLE_MAX_N}"
        )));
    }
    for n in 0..=n_max {
        let k = n.max(2);
        let mut outcome = Ok(());
        for d in enumerate_diagrams(n)? {
            let rows = max_shape_rows(&d);
            let crossing = crossing_number(&d);
            let round = diagram_to_walk(k, &d).and_then(|w| walk_to_diagram(&w));
            let problem = if rows != crossing {
                Some(format!("{d}: tableau rows {rows} but crossing number {crossing}"))
            } else {
                match round {
                    Ok(back) if back == d => None,
                    Ok(back) => Some(format!("{d} came back as {back}")),
                    Err(e) => Some(format!("{d}: {e}")),
                }
            };
            if let Some(p) = problem {
                outcome = Err(p);
                break;
            }
        }
        report.check(&format!("bijection n={n}"), outcome)?;
    }
    Ok(())
}

fn oracle(report: &mut Report, n_max: usize) -> Result<(), Failure> {
    if n_max > ORACLE_MAX_N {
        return Err(Failure::usage(format!(
            "oracle suite supports --n-max <= {ORACLE_MAX_N}"
        )));
    }
    for n in 0..=n_max {
        let profile = OracleProfile::build(n)?;
        for k in 2..=4 {
            let table = cached_table(k, n)?;
            for variant in Variant::ALL {
                if variant == Variant::Restricted && k == 2 {
                    continue;
                }
                let mut outcome = Ok(());
                for isolated in std::iter::once(None).chain((0..=n).map(Some)) {
                    let formula = table.structures(variant, n, isolated)?;
                    let brute = profile.count(k, variant, isolated);
                    if formula != brute {
                        outcome = Err(format!("l={isolated:?}: formula {formula}, enumeration {brute}"));
                        break;
                    }
                }
                report.check(&format!("oracle {variant} k={k} n={n}"), outcome)?;
            }
        }
    }
    Ok(())
}
