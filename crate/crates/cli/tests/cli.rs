use std::path::PathBuf;
use std::process::{Command, Output};

use downsets::boolean::{boolean, Trim};
use downsets::dedekind::Coefficients;
use downsets::format::write_poset;
use downsets::tables::{parse_csv, parse_json, TableKind};

fn downsets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_downsets"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_file(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const DIAMOND: &str = "poset v1\npoints 4\ncover 0 1\ncover 0 2\ncover 1 3\ncover 2 3\n";

#[test]
fn counts_the_diamond() {
    let path = write_file("diamond.poset", DIAMOND);
    let out = downsets(&["count", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "d(P) = 6\n");

    let out = downsets(&["count", path.to_str().unwrap(), "--pivot", ""]);
    assert!(stdout(&out).starts_with("d(P) = 6\nterms = 1\n"));

    let out = downsets(&[
        "--format",
        "csv",
        "count",
        path.to_str().unwrap(),
        "--pivot",
        "1,2",
    ]);
    assert_eq!(stdout(&out), "d,terms\n6,4\n");
}

#[test]
fn pivot_over_the_middle_layer_of_bmm5() {
    let q = boolean(5).unwrap().sub_poset(Trim::Both).unwrap();
    let path = write_file("bmm5.poset", &write_poset(&q));
    let middle: Vec<String> = (0..q.len())
        .filter(|&i| q.origin()[i].count_ones() == 3)
        .map(|i| i.to_string())
        .collect();
    let out = downsets(&[
        "count",
        path.to_str().unwrap(),
        "--pivot",
        &middle.join(","),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("d(P) = 6212\nterms = 1024\n"), "{text}");

    let out = downsets(&[
        "count",
        path.to_str().unwrap(),
        "--pivot",
        &middle.join(","),
        "--limit",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dot_output_lists_covers() {
    let path = write_file("dot.poset", DIAMOND);
    let out = downsets(&["count", path.to_str().unwrap(), "--dot"]);
    let text = stdout(&out);
    assert!(text.starts_with("digraph poset {"));
    assert_eq!(text.matches("->").count(), 4);
}

#[test]
fn exit_codes() {
    let bad = write_file("bad.poset", "poset v1\npoints 2\ncover 0 7\n");
    assert_eq!(
        downsets(&["count", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let cyclic = write_file("cyclic.poset", "poset v1\npoints 2\ncover 0 1\ncover 1 0\n");
    assert_eq!(
        downsets(&["count", cyclic.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let huge = write_file("huge.poset", "poset v1\npoints 129\n");
    assert_eq!(
        downsets(&["count", huge.to_str().unwrap()]).status.code(),
        Some(3)
    );
    let wide = write_file("wide.poset", "poset v1\npoints 128\n");
    assert_eq!(
        downsets(&["count", wide.to_str().unwrap()]).status.code(),
        Some(3)
    );
    assert_eq!(downsets(&["dedekind", "8"]).status.code(), Some(4));
    assert_eq!(
        downsets(&["dedekind", "6", "--method", "nu"]).status.code(),
        Some(4)
    );
    assert_eq!(
        downsets(&["dedekind", "8", "--method", "standard"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn dedekind_methods() {
    let out = downsets(&["dedekind", "5", "--method", "theorem2"]);
    assert!(stdout(&out).starts_with("b(5) = 7581\n"));
    let out = downsets(&["dedekind", "2", "--method", "standard"]);
    assert!(stdout(&out).starts_with("b(2) = 6\n"));
    for method in ["nu", "gamma", "iso"] {
        let out = downsets(&["dedekind", "5", "--method", method]);
        assert!(stdout(&out).starts_with("b(5) = 7581\n"), "{method}");
    }
    for method in ["theorem2", "mu", "lemma2", "iso"] {
        let out = downsets(&["dedekind", "6", "--method", method]);
        assert!(stdout(&out).starts_with("b(6) = 7828354\n"), "{method}");
    }
    let out = downsets(&["--format", "csv", "dedekind", "5", "--method", "gamma"]);
    assert_eq!(
        stdout(&out),
        "n,method,value,bmm,evaluations\n5,gamma,7581,6212,80\n"
    );
    let out = downsets(&["dedekind", "6", "--method", "iso"]);
    assert!(stdout(&out).contains("evaluations = 272\n"));
}

#[test]
fn tables_round_trip() {
    let out = downsets(&["--format", "csv", "tables", "nu"]);
    assert_eq!(stdout(&out), "388,290,195,70,40,30,0,10,0,0,1\n");

    let mu = stdout(&downsets(&["--format", "csv", "tables", "mu"]));
    assert!(mu.starts_with("165980,"));
    let Coefficients::Mu(grid) = parse_csv(TableKind::Mu, &mu).unwrap() else {
        panic!("not a grid");
    };
    assert_eq!(grid.len(), 16);

    let iso = stdout(&downsets(&["--format", "csv", "tables", "iso"]));
    assert_eq!(iso.lines().count(), 35);
    let Coefficients::Classes(rows) = parse_csv(TableKind::Iso, &iso).unwrap() else {
        panic!("not a class table");
    };
    assert_eq!(rows.len(), 34);

    for (which, kind) in [
        ("nu", TableKind::Nu),
        ("gamma", TableKind::Gamma),
        ("mu", TableKind::Mu),
        ("iso", TableKind::Iso),
    ] {
        let json = parse_json(&stdout(&downsets(&["--format", "json", "tables", which]))).unwrap();
        let csv = parse_csv(
            kind,
            &stdout(&downsets(&["--format", "csv", "tables", which])),
        )
        .unwrap();
        assert_eq!(json, csv, "{which}");
    }
}

#[test]
fn verify_passes_on_a_fresh_build() {
    let out = downsets(&["verify"]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("PASS nu")));
    assert_eq!(out.status.code(), Some(0), "{text}");
}

#[test]
fn output_does_not_depend_on_jobs() {
    let one = downsets(&["--jobs", "1", "verify", "--strict"]);
    let many = downsets(&["--jobs", "4", "verify", "--strict"]);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.status.code(), many.status.code());
    for args in [
        ["tables", "iso"].as_slice(),
        ["dedekind", "6", "--method", "mu"].as_slice(),
    ] {
        let mut a = vec!["--jobs", "1"];
        a.extend_from_slice(args);
        let mut b = vec!["--jobs", "3"];
        b.extend_from_slice(args);
        assert_eq!(downsets(&a).stdout, downsets(&b).stdout);
    }
}
