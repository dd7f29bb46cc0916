use coeff_ring::{CoeffPoly, GroundRingElem, TruncSeries};
use homology::{homology, khovanov_complex, PdLink};
use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};
use webs::MovieBuilder;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.display().to_string()
}

fn foamcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foamcalc")).args(args).env_remove("FOAMCALC_TRUNC").output().expect("run foamcalc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_out(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn empty_foam_is_one() {
    let o = foamcalc(&["eval", "--foam", &data("empty.json"), "--trunc", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + O(7)\n");
    let header = String::from_utf8(o.stderr).unwrap();
    assert!(header.starts_with("# foamcalc eval foam="), "{header}");
    assert!(header.contains("p=generic trunc=6 jobs="), "{header}");
}

#[test]
fn theta_with_multiplicative_p() {
    // two dots on the preferred disk: (x1 + x2) p12 p21 with p = 1 + b0_1 y
    let o = foamcalc(&["eval", "--foam", &data("theta.json"), "--p", "multiplicative", "--trunc", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let d = 12;
    let b = CoeffPoly::var(0, 1);
    let x = |i| TruncSeries::var(2, d, i);
    let p12 = TruncSeries::one(2, d).add(&x(1).scale(&b)).unwrap();
    let p21 = TruncSeries::one(2, d).add(&x(0).scale(&b)).unwrap();
    let want = x(0).add(&x(1)).unwrap().mul(&p12).unwrap().mul(&p21).unwrap();
    let got = json_out(&o);
    assert_eq!(got["terms"], want.to_json()["terms"]);
    assert_eq!(got["valid"], 12);
}

#[test]
fn trunc_defaults_to_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_foamcalc"))
        .args(["eval", "--foam", &data("empty.json")])
        .env("FOAMCALC_TRUNC", "5")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "1 + O(6)\n");
}

#[test]
fn exact_theta_and_presets() {
    let o = foamcalc(&["eval-exact", "--foam", &data("theta.json")]);
    // -E2^0 h_1 rho
    let want = GroundRingElem::parse("-E1*rho").unwrap();
    assert_eq!(stdout(&o).trim(), want.to_string());
    // rho = -1 under khovanov and E1 = 0
    let o = foamcalc(&["eval-exact", "--foam", &data("theta.json"), "--preset", "khovanov"]);
    assert_eq!(stdout(&o), "0\n");
    let o = foamcalc(&["eval-exact", "--foam", &data("empty.json"), "--preset", &data("khovanov.json")]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn gln_and_undeformed() {
    let o = foamcalc(&["eval-gln", "--foam", &data("theta.json"), "--undeformed", "trivial"]);
    assert_eq!(o.status.code(), Some(0));
    // (x1^2 - x2^2) / (x1 - x2) up to the global sign
    let s = stdout(&o);
    assert!(s == "x1 + x2 + O(2)\n" || s == "-x1 - x2 + O(2)\n", "{s}");
    let rw = foamcalc(&["eval-gln", "--foam", &data("theta.json"), "--undeformed", "rw"]);
    assert_eq!(rw.status.code(), Some(0));
}

#[test]
fn trefoil_matches_golden_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trefoil.tsv");
    let o = foamcalc(&["homology", "--pd", &data("trefoil.pd"), "--preset", "khovanov", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let golden = std::fs::read_to_string(data("trefoil.tsv")).unwrap();
    assert_eq!(std::fs::read_to_string(&out).unwrap(), golden);
    // the golden table is the circle-based Khovanov complex's homology
    let pd = PdLink::parse(&std::fs::read_to_string(data("trefoil.pd")).unwrap()).unwrap();
    assert_eq!(homology(&khovanov_complex(&pd)).unwrap().to_tsv(), golden);
}

#[test]
fn homology_accepts_inline_codes_and_mult() {
    let a = foamcalc(&["homology", "--pd", "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]", "--preset", "mult"]);
    assert_eq!(stdout(&a), std::fs::read_to_string(data("trefoil.tsv")).unwrap());
    let o = foamcalc(&["homology", "--pd", "O,O", "--format", "json"]);
    let v = json_out(&o);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic() {
    let run = || {
        let o = foamcalc(&["--jobs", "2", "homology", "--pd", "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"]);
        (o.stdout, o.stderr)
    };
    assert_eq!(run(), run());
    let fgl = || foamcalc(&["fgl", "--law", "lorentz", "--trunc", "8"]).stdout;
    assert_eq!(fgl(), fgl());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(foamcalc(&["eval", "--foam", "x.json", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(foamcalc(&["bogus"]).status.code(), Some(2));
    assert_eq!(foamcalc(&["fgl", "--law", "jacobi"]).status.code(), Some(2));
    assert_eq!(foamcalc(&["web", "rank"]).status.code(), Some(2));
    assert_eq!(foamcalc(&["selftest", "--only", "11"]).status.code(), Some(2));
    assert_eq!(foamcalc(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_one_with_json() {
    let kind = |o: &Output| json_out(o)["error"]["kind"].as_str().unwrap().to_string();
    let o = foamcalc(&["homology", "--pd", "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]", "--preset", &data("rho_two.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(kind(&o), "NonUnitRho");
    let o = foamcalc(&["eval-exact", "--foam", &data("odd_cycle.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(kind(&o), "NotBipartite");
    let o = foamcalc(&["eval", "--foam", &data("missing.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(kind(&o), "Io");
    let o = foamcalc(&["homology", "--pd", "X[1,2,3]"]);
    assert_eq!(kind(&o), "InvalidPd");
}

#[test]
fn formal_group_tables() {
    let o = foamcalc(&["fgl", "--law", "multiplicative", "--trunc", "6", "--format", "tsv"]);
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows[0], "i\tj\tcoeff");
    assert!(rows.contains(&"1\t1\t-b1_0"), "{s}");
    let o = foamcalc(&["fgl", "--law", "additive", "--trunc", "6", "--checks"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert_eq!(v["log"][0], serde_json::json!([1, "1", "1"]));
}

#[test]
fn web_commands() {
    let v = json_out(&foamcalc(&["web", "rank", "--named", "figure"]));
    assert_eq!(v["rank"], 8);
    assert_eq!(v["thin_components"], 3);
    let v = json_out(&foamcalc(&["web", "gram", "--named", "circle"]));
    assert_eq!(v["det"], GroundRingElem::rho().to_string());
    // a cup: the empty web to one circle
    let mut b = MovieBuilder::empty();
    b.birth().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cup.json");
    std::fs::write(&path, b.finish().to_json().to_string()).unwrap();
    let v = json_out(&foamcalc(&["web", "map", "--movie", path.to_str().unwrap()]));
    assert_eq!((v["rows"].clone(), v["cols"].clone(), v["degree"].clone()), (2.into(), 1.into(), (-1).into()));
}

#[test]
fn skein_single_relation() {
    let o = foamcalc(&["skein", "--suite", "disk-flip"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert_eq!(v["passed"], true);
    assert!(v["relations"][0]["cases"].as_u64().unwrap() >= 3);
    assert_eq!(json_out(&foamcalc(&["skein", "--suite", "nope"]))["error"]["kind"], "UnknownRelation");
}

#[test]
fn selftest_runs_selected_criteria() {
    let o = foamcalc(&["selftest", "--only", "5,8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 2);
    assert!(s.lines().all(|l| l.contains(" PASS ")), "{s}");
}
