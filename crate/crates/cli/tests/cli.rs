//! End-to-end tests of the binary: exit codes, envelope shape, and the
//! text/JSON agreement and JSON fixed-point invariants.

use std::process::{Command, Output};

fn pentact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_str(out)).expect("valid JSON on stdout")
}

#[test]
fn classify_envelope_and_fields() {
    let out = pentact(&["classify", "4", "6", "5", "--format", "json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["inputs"], serde_json::json!([4, 6, 5]));
    assert_eq!(v["result"]["effective_group"], "SO3");
    assert_eq!(v["result"]["pi1_order"], 1);
    assert_eq!(v["result"]["slice"]["k"], 0);
    assert!(v["version"].is_string());
}

#[test]
fn classify_json_is_a_fixed_point() {
    let first = pentact(&["classify", "6", "4", "-5", "--format", "json"]);
    assert!(first.status.success());
    let v = json(&first);
    // Re-classify from the normalized record; the output must be
    // byte-identical.
    let m = v["result"]["m"].to_string();
    let n = v["result"]["n"].to_string();
    let l = v["result"]["l"].to_string();
    let second = pentact(&["classify", &m, &n, &l, "--format", "json"]);
    let v2 = json(&second);
    assert_eq!(v["result"], v2["result"]);
}

#[test]
fn text_and_json_agree_on_numbers() {
    let text = stdout_str(&pentact(&["slice", "4", "6", "5"]));
    let v = json(&pentact(&["slice", "4", "6", "5", "--format", "json"]));
    for (field, value) in [
        ("d", &v["result"]["d"]),
        ("q1", &v["result"]["q1"]),
        ("b1", &v["result"]["b1"]),
        ("k", &v["result"]["k"]),
    ] {
        assert!(
            text.contains(&value.to_string()),
            "text output must carry {field} = {value}: {text}"
        );
    }
}

#[test]
fn equiv_examples() {
    let out = pentact(&["equiv", "1", "1", "3", "1", "1", "7", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["result"]["equivalent"], true);
    let out = pentact(&["equiv", "3", "3", "1", "3", "3", "2", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["result"]["equivalent"], false);
}

#[test]
fn enumerate_counts() {
    let v = json(&pentact(&[
        "enum", "1", "1", "--lmax", "10", "--format", "json",
    ]));
    assert_eq!(v["result"].as_array().unwrap().len(), 1);
    let v = json(&pentact(&[
        "enum", "3", "3", "--lmax", "10", "--format", "json",
    ]));
    assert_eq!(v["result"].as_array().unwrap().len(), 7);
}

#[test]
fn pi1_coset_certificate() {
    let v = json(&pentact(&[
        "pi1", "3", "3", "0", "0", "3", "--method", "coset", "--format", "json",
    ]));
    assert_eq!(v["result"]["order"], 3);
    assert_eq!(v["result"]["coset"]["status"], "completed");
    assert_eq!(v["result"]["coset"]["order"], 3);
    assert_eq!(v["result"]["coset"]["agrees_with_formula"], true);
}

#[test]
fn subgroup_export() {
    let v = json(&pentact(&["subgroup", "dicyclic", "6", "--format", "json"]));
    assert_eq!(v["result"]["order"], 24);
    assert_eq!(v["result"]["iso_type"], "Dic6");
    assert_eq!(v["result"]["element_order_multiset"]["12"], 4);
    let v = json(&pentact(&["subgroup", "tet", "--format", "json"]));
    assert_eq!(v["result"]["ambient"], "SO3");
    assert_eq!(v["result"]["order"], 12);
}

#[test]
fn tables_dump() {
    let v = json(&pentact(&["tables", "--format", "json"]));
    assert_eq!(
        v["result"]["normalizer_table"].as_array().unwrap().len(),
        20
    );
    assert_eq!(
        v["result"]["two_orbit_type_table"]
            .as_array()
            .unwrap()
            .len(),
        10
    );
}

#[test]
fn exit_codes() {
    // Usage error: 64.
    assert_eq!(pentact(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(pentact(&["classify", "1"]).status.code(), Some(64));
    // Invalid parameters: 65.
    assert_eq!(
        pentact(&["classify", "2", "4", "2"]).status.code(),
        Some(65)
    );
    assert_eq!(
        pentact(&["subgroup", "nosuchgroup"]).status.code(),
        Some(65)
    );
    assert_eq!(
        pentact(&["curvature", "--named", "nonsense"]).status.code(),
        Some(65)
    );
    // Verification pass: 0; fail: 1.
    assert_eq!(pentact(&["verify", "gauss-bonnet"]).status.code(), Some(0));
    assert_eq!(
        pentact(&["verify", "exceptional-pairs", "--mmax", "6"])
            .status
            .code(),
        Some(1),
        "the dicyclic counterexamples to the stated pair list must surface as Fail"
    );
    assert_eq!(
        pentact(&["verify", "noncyclic", "--format", "json"])
            .status
            .code(),
        Some(0)
    );
    // The full-bound fundamental-group sweep passes in well under a second.
    assert_eq!(pentact(&["verify", "pi1", "--nmax", "10"]).status.code(), Some(0));
    // Slice data does not exist without exceptional orbits.
    assert_eq!(pentact(&["slice", "0", "3", "1"]).status.code(), Some(65));
}

#[test]
fn curvature_named_targets() {
    let v = json(&pentact(&["curvature", "--named", "s3xs2-sum:3", "--format", "json"]));
    assert_eq!(v["result"]["nonnegative"], false);
    assert_eq!(v["result"]["reason"], "SoulTwoBoundary");
    let v = json(&pentact(&["curvature", "--named", "s3xs2-sum:1", "--format", "json"]));
    assert_eq!(v["result"]["nonnegative"], true);
    let v = json(&pentact(&["curvature", "--named", "wu-sum:2:1", "--format", "json"]));
    assert_eq!(v["result"]["nonnegative"], false);
    assert_eq!(v["result"]["positive"], "Excluded");
    let v = json(&pentact(&["curvature", "--named", "s5", "--format", "json"]));
    assert_eq!(v["result"]["positive"], "LinearSphere");
}

#[test]
fn fixedset_output() {
    let v = json(&pentact(&["fixedset", "3", "3", "4", "--format", "json"]));
    assert_eq!(v["result"]["TwoLensSpaces"]["order"], 4);
    let v = json(&pentact(&["fixedset", "0", "0", "1", "--format", "json"]));
    assert_eq!(v["result"], "TwoSpheres3");
}

#[test]
fn verify_report_envelope() {
    let out = pentact(&[
        "verify",
        "bijection",
        "--q1",
        "2",
        "--q2",
        "3",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["result"]["lemma"], "bijection");
    assert_eq!(v["result"]["status"], "Pass");
    assert!(v["result"]["cases"].as_u64().unwrap() > 0);
    assert_eq!(v["result"]["failures"].as_array().unwrap().len(), 0);
}
