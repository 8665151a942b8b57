//! End-to-end tests of the `bn` binary: frozen outputs, exit codes, and the
//! serialization invariants (JSON round-trip, `--jobs` independence).

use std::process::{Command, Output};

fn bn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bn"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn rho_prints_the_bare_number() {
    let out = bn(&["rho", "-g", "10", "-r", "2", "-d", "8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-2\n");
}

#[test]
fn rho_adjusted_with_a_sequence() {
    let out = bn(&["rho", "-g", "8", "-r", "2", "-d", "8", "-a", "0,2,4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-1\n");
}

#[test]
fn codim2_single_surface_prints_the_bare_value() {
    let out = bn(&["codim2", "-g", "10", "-r", "2", "-d", "8", "-i", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "23184\n");
}

#[test]
fn codim2_accepts_a_comma_list() {
    let out = bn(&["codim2", "-g", "10", "-r", "2", "-d", "8", "-i", "2,3", "--format", "tsv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "i\tvalue\n2\t23184\n3\t48384\n");
}

#[test]
fn codim2_compare_reports_the_non_proportional_verdict() {
    let out = bn(&[
        "codim2", "-g", "10", "-r", "2", "-d", "8", "-i", "2,3", "--compare", "10,1,5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("verdict: not proportional"), "got: {text}");
    assert!(text.contains("182891520"), "got: {text}");
}

#[test]
fn pointed_method_all_prints_three_equal_integers() {
    let out = bn(&[
        "pointed", "-g", "8", "-r", "2", "-d", "8", "-a", "0,2,4", "--method", "all",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "compact: 3864\ndet: 3864\nsym: 3864\n");
}

#[test]
fn castelnuovo_requires_rho_zero() {
    let out = bn(&["castelnuovo", "-g", "5", "-r", "1", "-d", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let diag = stderr(&out);
    assert_eq!(diag.lines().count(), 1, "diagnostic must be one line: {diag}");
    assert!(diag.contains("precondition violated"), "got: {diag}");
    assert!(diag.contains("rho = 0"), "got: {diag}");
}

#[test]
fn pointed_outside_its_domain_exits_2() {
    let out = bn(&["pointed", "-g", "10", "-r", "2", "-d", "8", "-a", "0,2,4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rho_adjusted = -1"));
}

#[test]
fn invalid_sequences_echo_the_offending_pair() {
    let out = bn(&["exists", "-g", "3", "-r", "1", "-d", "2", "-a", "2,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("got 2 before 1"));
}

#[test]
fn unknown_suites_exit_2_listing_the_names() {
    let out = bn(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let diag = stderr(&out);
    for name in ["formulas", "identities", "divisors", "paper-numbers"] {
        assert!(diag.contains(name), "missing {name} in: {diag}");
    }
}

#[test]
fn verify_passes_and_keeps_timings_off_stdout() {
    let out = bn(&["verify", "--suite", "paper-numbers"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0 failures — pass"), "got: {text}");
    assert!(!text.contains("elapsed"), "timing leaked to stdout: {text}");
    assert!(stderr(&out).contains("elapsed"));
}

#[test]
fn divisor_class_prints_mu_nu_and_the_coefficient_vector() {
    let out = bn(&["divisor-class", "-g", "3", "-r", "1", "-d", "2", "-a", "0,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mu = 3/2"), "got: {text}");
    assert!(text.contains("nu = 0"), "got: {text}");
    assert!(
        text.contains("class = 9*lambda - delta_irr - 3*delta_1 - 3*delta_2"),
        "got: {text}"
    );
    assert!(text.contains("psi = 0"), "got: {text}");
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        &["codim2", "-g", "10", "-r", "2", "-d", "8", "-i", "2,3", "--terms"][..],
        &["divisor-class", "-g", "4", "-r", "1", "-d", "3", "-a", "0,2"][..],
        &["verify", "--suite", "divisors", "--gmax", "5"][..],
        &["table", "--kind", "catalan", "--range", "1..5"][..],
    ] {
        let mut full = args.to_vec();
        full.extend_from_slice(&["--format", "json"]);
        let out = bn(&full);
        assert!(out.status.success(), "{args:?} failed");
        let text = stdout(&out);
        let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
        let re = format!("{}\n", serde_json::to_string_pretty(&value).unwrap());
        assert_eq!(re, text, "round-trip changed bytes for {args:?}");
    }
}

#[test]
fn reports_are_byte_identical_across_jobs() {
    let base = &[
        "verify", "--suite", "formulas", "--gmax", "8", "--format", "json",
    ];
    let one = bn(&[&base[..], &["--jobs", "1"]].concat());
    let four = bn(&[&base[..], &["--jobs", "4"]].concat());
    assert!(one.status.success() && four.status.success());
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn tables_are_tab_separated_with_a_header() {
    let out = bn(&["table", "--kind", "catalan", "--range", "1..5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m\tcount");
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[5], "5\t42");
}

#[test]
fn pointed_table_lists_sequences_per_instance() {
    let out = bn(&["table", "--kind", "pointed", "--range", "2..2", "--rmax", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text, "g\tr\td\ta\tcount\n2\t1\t2\t0,2\t6\n2\t1\t3\t1,3\t6\n");
}

#[test]
fn a_consumer_closing_the_pipe_is_not_an_error() {
    // The table is ~140 KB, far past the pipe buffer, so the binary is
    // guaranteed to hit a closed pipe once `head` exits. It must stop
    // quietly rather than panic.
    let out = Command::new("sh")
        .arg("-c")
        .arg(format!(
            "{} table --kind pointed --range 2..24 --rmax 3 | head -n 2",
            env!("CARGO_BIN_EXE_bn")
        ))
        .output()
        .expect("pipeline should run");
    assert!(out.status.success());
    assert!(
        !stderr(&out).contains("panicked"),
        "broken pipe panicked: {}",
        stderr(&out)
    );
    assert_eq!(stdout(&out), "g\tr\td\ta\tcount\n2\t1\t2\t0,2\t6\n");
}

#[test]
fn weierstrass_instance_counts_and_class() {
    let out = bn(&["pointed", "-g", "3", "-r", "2", "-d", "4", "-a", "0,1,3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "24\n");
    let out = bn(&["divisor-class", "-g", "3", "-r", "2", "-d", "4", "-a", "0,1,3", "--format", "tsv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("coefficient\tvalue\nmu\t0\nnu\t1\n"), "got: {text}");
}
