use qudit_ns::cli::{run_cli, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qudit-ns").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

const COMMANDS: [&[&str]; 7] = [
    &["decompose", "--d", "3", "--n", "9"],
    &["maximize", "--d", "3", "--n", "46"],
    &["maximize", "--d", "4", "--n", "14"],
    &["rate", "--d", "3", "--parts", "21,16,12"],
    &["rate-series", "--d", "3", "--kmax", "12"],
    &["qubit-table", "--nmax", "30"],
    &["verify", "--check", "dimension-sum"],
];

#[test]
fn output_is_identical_across_runs_and_worker_counts() {
    for cmd in COMMANDS {
        for format in ["table", "csv", "json"] {
            let args = |jobs: &'static str| {
                let mut v = cmd.to_vec();
                v.extend(["--format", format, "--jobs", jobs]);
                v
            };
            let first = stdout(&args("1"));
            assert_eq!(first, stdout(&args("1")), "{cmd:?} {format}");
            assert_eq!(first, stdout(&args("4")), "{cmd:?} {format}");
        }
    }
}

#[test]
fn json_output_round_trips_byte_for_byte() {
    for cmd in COMMANDS {
        let mut args = cmd.to_vec();
        args.extend(["--format", "json"]);
        let text = stdout(&args);
        let value: Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(text, again, "{cmd:?}");
    }
}

#[test]
fn big_multiplicities_are_exact_decimal_strings() {
    let text = stdout(&["maximize", "--d", "3", "--n", "50", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["max_multiplicity"], "127480234646071440000");
    assert_eq!(v["argmax"], serde_json::json!([[21, 16, 13]]));
}

#[test]
fn decompose_csv_ends_with_the_dimension_total() {
    let text = stdout(&["decompose", "--d", "2", "--n", "2", "--format", "csv"]);
    assert_eq!(text, "partition,multiplicity,dimension\n(2;0),1,3\n(1;1),1,1\ntotal,4,consistent\n");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["maximize", "--d", "1", "--n", "3"][..],
        &["maximize", "--d", "3", "--n", "0"],
        &["verify", "--check", "no-such-check"],
        &["rate", "--d", "3", "--parts", "1,2,3"],
        &["decompose", "--d", "9", "--n", "200"],
        &["frobnicate"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(err.starts_with("error"), "{args:?}: {err}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("qubit-table"));
}

#[test]
fn passing_verify_exits_zero() {
    let (code, out, _) = run(&["verify", "--check", "tie-families", "--nmax", "60"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "tie-families: pass over d = 3, 3 <= n <= 60 (0 counterexamples)\n");
    assert_ne!(EXIT_VERIFY_FAILED, EXIT_OK);
}
