//! A count table through the command-line front end, with an on-disk cache.

use std::io;

fn main() {
    let dir = std::env::temp_dir().join("pseudoknot-example-cache");
    let dir = dir.to_str().expect("utf-8 temp path");
    let args = [
        "pseudoknot",
        "--cache-dir",
        dir,
        "table",
        "--k",
        "4",
        "--n-max",
        "30",
        "--format",
        "json",
    ];
    let mut out = Vec::new();
    let code = pseudoknot::cli::run(args, &mut io::empty(), &mut out, &mut io::stderr());
    assert_eq!(code, 0);
    print!("{}", String::from_utf8(out).expect("utf-8"));
    eprintln!("cached under {dir}");
}
