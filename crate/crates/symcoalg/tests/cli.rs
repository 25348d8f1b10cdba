//! End-to-end tests of the `symcoalg` binary: exchange files in,
//! key-value reports out, verdict on the last line, stable exit codes,
//! byte-identical output under a fixed seed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use symcoalg::coalgebra::{Coalgebra, Comodule};
use symcoalg::corpus;
use symcoalg::exchange::{
    emit_document, from_coalgebra, from_comodule, from_hopf, from_subspace, Document,
};
use symcoalg::field::{rat, Rational};
use symcoalg::subspace::Subspace;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_symcoalg")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn write_doc(dir: &Path, name: &str, doc: &Document) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, emit_document(doc).expect("valid document")).expect("write");
    path
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("symcoalg-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn validate_and_verdicts() {
    let dir = tmpdir("validate");
    let mc2 = write_doc(
        &dir,
        "mc2.json",
        &Document::Coalgebra(from_coalgebra(&Coalgebra::matrix_coalgebra(2))),
    );
    let out = run(&["validate", mc2.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().last().unwrap(), "valid: yes");

    let out = run(&["is-symmetric", mc2.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().last().unwrap(), "symmetric: yes");
    assert!(text.contains("balanced-space-dim: 4"));
    assert!(text.contains("symmetric-space-dim: 1"));

    // negative verdicts still exit zero
    let ext = write_doc(
        &dir,
        "ext.json",
        &Document::Coalgebra(from_coalgebra(&corpus::exterior_dual())),
    );
    let out = run(&["is-symmetric", ext.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().last().unwrap(), "symmetric: no");
}

#[test]
fn invalid_inputs_exit_two() {
    let dir = tmpdir("invalid");
    let garbled = dir.join("garbled.json");
    fs::write(&garbled, "{ this is not json").unwrap();
    let out = run(&["validate", garbled.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("line"),
        "syntax errors carry a location: {err}"
    );

    // parseable but axiom-violating
    let broken = dir.join("broken.json");
    fs::write(
        &broken,
        r#"{"kind":"coalgebra","name":"bad","dim":1,"basis":["g"],
           "delta":[[0,0,0,"1"]],"counit":["0"]}"#,
    )
    .unwrap();
    let out = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("violation: "));
    assert!(text.contains("counit"));

    // decision commands refuse the same file
    let out = run(&["is-cofrobenius", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.join("nope.json");
    let out = run(&["info", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let dir = tmpdir("seed");
    for (name, c) in [
        ("ext", corpus::exterior_dual()),
        ("mc2", Coalgebra::matrix_coalgebra(2)),
    ] {
        let path = write_doc(
            &dir,
            &format!("{name}.json"),
            &Document::Coalgebra(from_coalgebra(&c)),
        );
        for cmd in ["is-cofrobenius", "is-symmetric", "nakayama"] {
            let a = run(&[cmd, path.to_str().unwrap(), "--seed", "5"]);
            let b = run(&[cmd, path.to_str().unwrap(), "--seed", "5"]);
            assert!(a.status.success());
            assert_eq!(a.stdout, b.stdout, "{cmd} differs between runs");
        }
    }
    let h4 = write_doc(
        &dir,
        "h4.json",
        &Document::Hopf(from_hopf(&corpus::sweedler_h4())),
    );
    let a = run(&["hopf", h4.to_str().unwrap(), "--seed", "9"]);
    let b = run(&["hopf", h4.to_str().unwrap(), "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn hopf_report_shape() {
    let dir = tmpdir("hopf");
    let h4 = write_doc(
        &dir,
        "h4.json",
        &Document::Hopf(from_hopf(&corpus::sweedler_h4())),
    );
    let out = run(&["hopf", h4.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("unimodular-on-H: no"));
    assert!(text.contains("unimodular-in-H: no"));
    assert!(text.contains("h-infinity-dim: 1"));
    assert!(!text.contains("s2-inner-in-dual: absent"));
    assert!(!text.contains("s2-inner-in-H: absent"));
    assert_eq!(text.lines().last().unwrap(), "symmetric-as-coalgebra: no");
}

#[test]
fn coextend_roundtrips_through_a_file() {
    let dir = tmpdir("coextend");
    let g = write_doc(
        &dir,
        "kg.json",
        &Document::Coalgebra(from_coalgebra(&Coalgebra::grouplike("kG", &["g", "h"]))),
    );
    let out_path = dir.join("d.json");
    let out = run(&[
        "coextend",
        g.to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().last().unwrap(), "symmetric: yes");
    assert!(text.contains("search-path-agrees: yes"));

    // the emitted file is a valid symmetric coalgebra of doubled dimension
    let emitted = run(&["is-symmetric", out_path.to_str().unwrap()]);
    assert!(emitted.status.success());
    let text = stdout(&emitted);
    assert!(text.contains("dim: 4"));
    assert_eq!(text.lines().last().unwrap(), "symmetric: yes");
}

#[test]
fn ring_and_brauer_and_wedge() {
    let dir = tmpdir("misc");
    let mc2 = Coalgebra::matrix_coalgebra(2);
    let cpath = write_doc(&dir, "mc2.json", &Document::Coalgebra(from_coalgebra(&mc2)));

    let out = run(&["ring", cpath.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("identity: "));
    assert!(text.contains("cayley: "));
    assert_eq!(text.lines().last().unwrap(), "bimodule-law: ok");

    let m = Comodule::regular(&mc2);
    let mpath = write_doc(
        &dir,
        "reg.json",
        &Document::Comodule(from_comodule("regular", Some("Mc2".into()), 4, &m)),
    );
    let out = run(&[
        "brauer",
        cpath.to_str().unwrap(),
        "--comodule",
        mpath.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim-f: 4"));
    assert_eq!(text.lines().last().unwrap(), "fg-roundtrip: ok");

    // parent mismatch is invalid input
    let bad = write_doc(
        &dir,
        "bad.json",
        &Document::Comodule(from_comodule("regular", Some("Other".into()), 4, &m)),
    );
    let out = run(&[
        "brauer",
        cpath.to_str().unwrap(),
        "--comodule",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    // wedge trace on kC2 with the span of 1+g oscillates; with the unit
    // line (a subcoalgebra) it stabilizes immediately
    let kc2 = corpus::cyclic_group_algebra(2);
    let kc2_path = write_doc(
        &dir,
        "kc2.json",
        &Document::Coalgebra(from_coalgebra(kc2.coalgebra())),
    );
    let sub = Subspace::<Rational>::line(vec![rat(1), rat(0)]);
    let spath = write_doc(
        &dir,
        "unitline.json",
        &Document::Subspace(from_subspace("k1", None, &sub)),
    );
    let out = run(&[
        "wedge",
        kc2_path.to_str().unwrap(),
        "--sub",
        spath.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("step 1: dim 1"));
    assert_eq!(text.lines().last().unwrap(), "stabilized: yes");
}

#[test]
fn emitted_corpus_files_are_canonical() {
    let dir = tmpdir("canon");
    for c in corpus::coalgebras().into_iter().take(4) {
        let doc = Document::Coalgebra(from_coalgebra(&c));
        let text = emit_document(&doc).unwrap();
        let reparsed = symcoalg::exchange::parse_document(&text).unwrap();
        assert_eq!(
            emit_document(&reparsed).unwrap(),
            text,
            "emit∘parse not idempotent"
        );
    }
    let _ = fs::remove_dir_all(dir);
}
