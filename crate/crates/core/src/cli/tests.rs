use proptest::prelude::*;

use super::*;
use crate::error::Error;

fn parse_err(src: &str) -> (usize, usize, String) {
    match parse_session(src) {
        Err(Error::Parse { line, column, message }) => (line, column, message),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn minimal_session() {
    let s = parse_session("ring { char 7; vars x y; }\nrun depth(R);").unwrap();
    assert_eq!(s.items.len(), 2);
    let runs = run_session(&s).unwrap();
    assert_eq!(runs[0].report["depth"], 2);
    assert_eq!(session_exit_code(&runs), 0);
}

#[test]
fn unclosed_relation_points_at_semicolon() {
    let src = "ring R { char 7; vars x y; }\nmodule M over R {\n  gens 0 0;\n  rels { [x, y; }\n}\n";
    let (line, column, message) = parse_err(src);
    assert_eq!((line, column), (4, 15));
    assert!(message.contains("found `;`"), "{message}");
}

#[test]
fn parse_errors_carry_positions() {
    assert_eq!(parse_err("ring R { char 7; vars x; }\nmodul").0, 2);
    let (l, c, m) = parse_err("ring R { char 7; vars x; colour 3; }");
    assert_eq!((l, c), (1, 26));
    assert!(m.contains("`colour`"));
    assert_eq!(parse_err("run verify - ab(R, R);").1, 12);
    assert!(parse_err("ring { vars x; }").2.contains("missing `char`"));
}

#[test]
fn semantic_errors_exit_with_two() {
    let bad = [
        "ring { char 7; vars x; }\nrun depth(M);",
        "ring { char 7; vars x; }\nmodule M over S = residue();",
        "ring { char 7; vars x y; }\nmodule M over R { gens 0 1; rels { [x, x]; } }",
        "ring { char 7; vars x; }\nmodule M over R { gens 0; rels { [x, x]; } }",
        "ring { char 7; vars x; order lex; }",
        "ring { char 7; vars x; }\nrun frobnicate(R);",
        "ring { char 7; vars x; }\nrun depth(R) { colour 3; }",
    ];
    for src in bad {
        let err = parse_session(src).and_then(|s| run_session(&s)).map(|runs| runs[0].exit_code);
        match err {
            Err(e) => assert_eq!(e.exit_code(), 2, "{src}: {e}"),
            Ok(code) => assert_eq!(code, 2, "{src}"),
        }
    }
}

#[test]
fn weighted_ring_and_module_constructors() {
    let src = r#"
ring R { char 101; vars x:3 y:4 z:5; ideal { y^2 - x*z; x^3 - y*z; x^2*y - z^2; } }
module omega over R { gens -1 -2; rels { [x, y]; [y, z]; [z, x^2]; } }
module e over R = hom(omega, omega);
module q over R = quot(omega, x);
module s over R = sum(R, shift(R, 3));
module t over R = tensor(omega, q);
run mingens(e) { expect mingens = 1 trivial; }
run mingens(s) { expect gen_degrees = [0, 3] trivial; }
run dim(q) { expect dim = 0 trivial; }
run nf(R, y^2) { expect normal_form = "x*z" trivial; }
"#;
    let s = parse_session(src);
    // `shift(R, 3)` is not a module name: nested calls are rejected.
    assert!(s.is_ok());
    let err = run_session(&s.unwrap()).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    let fixed = src.replace("sum(R, shift(R, 3))", "free(0, 3)");
    let runs = run_session(&parse_session(&fixed).unwrap()).unwrap();
    for r in &runs {
        assert!(r.clean(), "{}: {:?} {}", r.command, r.expectations, r.report);
    }
}

#[test]
fn commands_report_examples() {
    let src = r#"
ring R { char 101; vars x:3 y:4 z:5; ideal { y^2 - x*z; x^3 - y*z; x^2*y - z^2; } }
module omega over R { gens -1 -2; rels { [x, y]; [y, z]; [z, x^2]; } }
module k over R = residue();
run depth(k);
run verify-ab(omega, omega) { ext_bound 6; }
"#;
    let runs = run_session(&parse_session(src).unwrap()).unwrap();
    assert_eq!(runs[0].report["depth"], 0);
    let ab = &runs[1].report;
    assert_eq!(ab["ab_identity"], true);
    assert_eq!((ab["c_dim"].as_u64(), ab["depth_C"].as_u64(), ab["depth_Y"].as_u64()), (Some(0), Some(1), Some(1)));
    assert_eq!(ab["certificate"]["ext_bound"], 6);
}

#[test]
fn errors_become_reports() {
    let src = "ring { char 101; vars x y; ideal { x^2; } }\nmodule k over R = residue();\nrun verify-ab(R, k) { ext_bound 2; expect error = \"truncated\" trivial; }";
    let runs = run_session(&parse_session(src).unwrap()).unwrap();
    assert_eq!(runs[0].exit_code, 3);
    assert!(runs[0].clean());
    assert_eq!(session_exit_code(&runs), 3);
}

#[test]
fn failed_expectation_exits_with_one() {
    let src = "ring { char 7; vars x; }\nrun depth(R) { expect depth = 3 trivial; expect koszul = 1 trivial; }";
    let runs = run_session(&parse_session(src).unwrap()).unwrap();
    assert!(!runs[0].expectations[0].passed);
    assert!(runs[0].expectations[1].passed);
    assert_eq!(session_exit_code(&runs), 1);
}

#[test]
fn corpus_entries_need_provenance() {
    let e = CorpusEntry::new("bare", "ring { char 7; vars x; }\nrun depth(R) { expect depth = 1; }");
    assert_eq!(e.parse().unwrap_err().exit_code(), 2);
}

#[test]
fn empty_filter_gives_empty_summary() {
    let s = run_corpus(&shipped_corpus(), Some("no-such-entry")).unwrap();
    assert!(s.entries.is_empty());
    assert_eq!(s.exit_code(), 0);
}

#[test]
fn shipped_corpus_formats_stably() {
    for e in shipped_corpus() {
        let a = e.parse().unwrap();
        let text = format_session(&a);
        let b = parse_session(&text).unwrap();
        assert_eq!(a, b, "{}", e.name);
        assert_eq!(format_session(&b), text);
    }
}

fn poly_text() -> impl Strategy<Value = String> {
    let term = (0u32..20, prop::sample::select(vec!["x", "y", "x^2", "x*y", "(x + y)", "y^3"]))
        .prop_map(|(c, m)| if c == 0 { m.to_string() } else { format!("{c} {m}") });
    (prop::collection::vec(term, 1..4), prop::collection::vec(any::<bool>(), 4)).prop_map(|(ts, signs)| {
        let mut s = String::new();
        for (i, t) in ts.iter().enumerate() {
            if i > 0 || signs[3] {
                s.push_str(if signs[i] { " -" } else { "+" });
            }
            s.push_str(t);
        }
        s
    })
}

fn session_text() -> impl Strategy<Value = String> {
    (
        prop::collection::vec(poly_text(), 0..3),
        prop::collection::vec(-3i64..4, 1..3),
        poly_text(),
        prop::collection::vec((0i64..9, prop::sample::select(vec!["trivial", "derived \"by hand\"", "paper", ""])), 0..3),
        any::<bool>(),
    )
        .prop_map(|(ideal, gens, entry, expects, named)| {
            let ideal: Vec<String> = ideal.iter().map(|g| format!("{g};")).collect();
            let row: Vec<String> = gens.iter().map(|_| entry.clone()).collect();
            let gs: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            let ex: Vec<String> = expects.iter().map(|(v, t)| format!("expect a.b.{v} = [{v}, -{v}] {t};")).collect();
            format!(
                "ring {} {{ char 7; vars x y; ideal {{ {} }} }}\nmodule M over R {{ gens {}; rels {{ [{}]; }} }}\nmodule N over R=quot(M,{entry});\nrun verify-ab(M, N) {{ seed 3; {} }}\nrun nf(R,{entry});",
                if named { "R" } else { "" },
                ideal.join(" "),
                gs.join(" "),
                row.join(","),
                ex.join(" ")
            )
        })
}

proptest! {
    #[test]
    fn parse_print_parse_is_parse(src in session_text()) {
        let a = parse_session(&src).unwrap();
        let b = parse_session(&format_session(&a)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(format_session(&a), format_session(&b));
    }
}
