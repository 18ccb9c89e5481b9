//! Cross-checks the Shapovalov rank oracle against the closed string-function
//! formulas for an admissible osp(1|2) level given on the command line.
//!
//!     cargo run -p relaxchar-core --example cross_check -- 5 3

use relaxchar_core::characters::{AdmissibleLevel, MinimalLabel};
use relaxchar_core::verifier::verify_character_theorem;

fn main() {
    let mut args = std::env::args().skip(1);
    let u: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let v: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let lvl = AdmissibleLevel::osp12(u, v).expect("admissible (u,v)");
    println!("level k = {} (c = {})", lvl.level, lvl.c);
    let mut all = true;
    for r in 1..u {
        for s in 1..v {
            let lab = MinimalLabel::new(&lvl, r, s).unwrap();
            let report = verify_character_theorem(&lvl, &lab, 2).unwrap();
            println!(
                "  ({r},{s}) [{}]",
                if report.passed { "PASS" } else { "FAIL" }
            );
            if !report.passed {
                print!("{}", report.render_table());
                all = false;
            }
        }
    }
    std::process::exit(if all { 0 } else { 1 });
}
