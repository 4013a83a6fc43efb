//! The session language: parse, format and run a small file.

use semidual::cli::{format_session, parse_session, run_session, session_exit_code};

const SRC: &str = r#"
ring R { char 101; vars x y; ideal { x^2; } }
module k over R = residue();
module Ry over R = quot(R, y);
run verify-ab(R, Ry) { expect ab_identity = true trivial "1 = 1 - 0"; }
run verify-ab(R, k) { expect error = "truncated" trivial "pd k is infinite"; }
"#;

fn main() -> semidual::Result<()> {
    let s = parse_session(SRC)?;
    print!("{}", format_session(&s));
    let runs = run_session(&s)?;
    for r in &runs {
        let ok = r.expectations.iter().all(|e| e.passed);
        println!("{} -> exit {}, expectations {}", r.command, r.exit_code, if ok { "pass" } else { "FAIL" });
    }
    println!("session exit code: {}", session_exit_code(&runs));

    if let Err(e) = parse_session("ring { char 7; vars x y; }\nmodule M over R { gens 0 0; rels { [x, y; } }") {
        println!("error: {e}");
    }
    Ok(())
}
