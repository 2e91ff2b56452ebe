//! End-to-end runs of the `bilex` binary.

mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use common::{fixture, golden, read_fixture, row};

fn bilex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bilex")).args(args).output().unwrap()
}

fn files_in(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
}

#[test]
fn generate_both_directions_plain() {
    let out = tempfile::tempdir().unwrap();
    let input = fixture("phrase_one_to_many.tsv");
    let result = bilex(&[
        "--tool",
        "generate",
        "--direction",
        "both",
        "--format",
        "plain",
        "--out",
        out.path().to_str().unwrap(),
        input.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(0), "{}", String::from_utf8_lossy(&result.stderr));
    assert_eq!(files_in(out.path()), ["phrase_one_to_many.index.grsl.txt", "phrase_one_to_many.index.slgr.txt"]);
    for name in files_in(out.path()) {
        assert_eq!(fs::read_to_string(out.path().join(&name)).unwrap(), golden(&name));
    }
}

#[test]
fn strict_rejects_unlemmatised_word() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = read_fixture("phrase_one_to_many.tsv");
    text.push_str(&row(&[('E', "10/59a14"), ('F', "слово"), ('L', "λόγος"), ('M', "λόγος")], ""));
    text.push('\n');
    let input = dir.path().join("bad.tsv");
    fs::write(&input, text).unwrap();
    let out = dir.path().join("out");
    let result = bilex(&["--strict", "--out", out.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(1));
    assert!(!out.exists() || files_in(&out).is_empty());
    let stderr = String::from_utf8(result.stderr).unwrap();
    assert_eq!(stderr, "error\t3\tH\tword `слово` has no lemma\n");
}

#[test]
fn warnings_fail_only_when_strict() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("warn.tsv");
    fs::write(
        &input,
        row(&[('E', "1/1a1"), ('F', "слово"), ('H', "слово"), ('L', "λόγος"), ('M', "λόγος")], "sg") + "\n",
    )
    .unwrap();
    let out = dir.path().join("out");
    let lenient = bilex(&["--out", out.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(lenient.status.code(), Some(0));
    assert!(String::from_utf8(lenient.stderr).unwrap().starts_with("warning\t1\tU\t"));
    assert_eq!(files_in(&out).len(), 4);

    let out = dir.path().join("strict");
    let strict = bilex(&["--strict", "--out", out.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(strict.status.code(), Some(1));
    assert!(!out.exists());
}

#[test]
fn all_tools_directions_formats() {
    let out = tempfile::tempdir().unwrap();
    let input = fixture("multi_witness.tsv");
    let result = bilex(&[
        "--tool",
        "both",
        "--direction",
        "both",
        "--format",
        "plain,wordxml",
        "--out",
        out.path().to_str().unwrap(),
        input.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(0));
    assert_eq!(
        files_in(out.path()),
        [
            "multi_witness.index.grsl.txt",
            "multi_witness.index.grsl.xml",
            "multi_witness.index.slgr.txt",
            "multi_witness.index.slgr.xml",
            "multi_witness.list.grsl.txt",
            "multi_witness.list.grsl.xml",
            "multi_witness.list.slgr.txt",
            "multi_witness.list.slgr.xml",
        ]
    );
}

#[test]
fn both_directions_equal_union_of_single_runs() {
    let input = fixture("variant_omission.tsv");
    let both = tempfile::tempdir().unwrap();
    bilex(&["--out", both.path().to_str().unwrap(), input.to_str().unwrap()]);
    let single = tempfile::tempdir().unwrap();
    for direction in ["slgr", "grsl"] {
        let status = bilex(&[
            "--direction",
            direction,
            "--out",
            single.path().to_str().unwrap(),
            input.to_str().unwrap(),
        ])
        .status;
        assert!(status.success());
    }
    assert_eq!(files_in(both.path()), files_in(single.path()));
    for name in files_in(both.path()) {
        assert_eq!(
            fs::read(both.path().join(&name)).unwrap(),
            fs::read(single.path().join(&name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn missing_input_exits_with_io_status() {
    let out = tempfile::tempdir().unwrap();
    let result = bilex(&["--out", out.path().to_str().unwrap(), "/nonexistent/table.tsv"]);
    assert_eq!(result.status.code(), Some(2));
    assert!(String::from_utf8(result.stderr).unwrap().starts_with("error\t-\t-\t"));
}

#[test]
fn custom_sigla_and_collation_files() {
    let dir = tempfile::tempdir().unwrap();
    let sigla = dir.path().join("sigla.txt");
    fs::write(&sigla, "# witnesses\nslavonic S X\ngreek Cr C\n").unwrap();
    let input = dir.path().join("t.tsv");
    fs::write(
        &input,
        [
            row(&[('A', "ино X"), ('B', "ино"), ('E', "1/1a1"), ('F', "аꙁъ"), ('H', "аꙁъ"), ('L', "ἐγώ"), ('M', "ἐγώ")], ""),
            row(&[('E', "1/1a2"), ('F', "бꙑти"), ('H', "бꙑти"), ('L', "εἶναι"), ('M', "εἰμί")], ""),
        ]
        .join("\n")
            + "\n",
    )
    .unwrap();
    // reverse alphabet: б before а
    let collation = dir.path().join("slav.txt");
    fs::write(&collation, "б\nа\nи\n").unwrap();
    let out = dir.path().join("out");
    let result = bilex(&[
        "--tool",
        "generate",
        "--direction",
        "slgr",
        "--sigla",
        sigla.to_str().unwrap(),
        "--collation-slav",
        collation.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        input.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(0), "{}", String::from_utf8_lossy(&result.stderr));
    let text = fs::read_to_string(out.join("t.index.slgr.txt")).unwrap();
    assert_eq!(
        text,
        "бꙑти (1)\n\t• εἰμί (1): 1/1a2\nаꙁъ (1)\n\t• ἐγώ (1): 1/1a1 » [ино^{X}]\nино (1^{var})\n\t• ἐγώ (1): 1/1a1^{X} » аꙁъ S\n"
    );

    fs::write(&collation, "strip zz\n").unwrap();
    let bad = bilex(&["--collation-slav", collation.to_str().unwrap(), "--out", out.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}
