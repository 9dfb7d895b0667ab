use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_p7c4c5"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is json")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn cycle(n: usize) -> String {
    let mut s = format!("p edge {n} {n}\n");
    for i in 0..n {
        s += &format!("e {} {}\n", i + 1, (i + 1) % n + 1);
    }
    s
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_c7() {
    let d = tempfile::tempdir().unwrap();
    let g = write(d.path(), "c7.dimacs", &cycle(7));
    let o = run(&["check", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["free"]["c7"], false);
    for k in ["p7", "c4", "c5", "theta33"] {
        assert_eq!(v["free"][k], true, "{k}");
    }
}

#[test]
fn color_glued_c7() {
    let d = tempfile::tempdir().unwrap();
    let mut text = String::from("p edge 13 14\n");
    for (u, v) in [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1), (7, 8), (8, 9), (9, 10), (10, 11), (11, 12), (12, 13), (13, 7)] {
        text += &format!("e {u} {v}\n");
    }
    let g = write(d.path(), "glued.dimacs", &text);
    let o = run(&["color", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["colors"], 3);
    assert_eq!(v["verification"]["proper"], true);
    let rep = write(d.path(), "color.json", &String::from_utf8(o.stdout).unwrap());
    let o = run(&["verify", s(&g), s(&rep)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verified"], true);
}

#[test]
fn mwis_diamond_and_weights() {
    let d = tempfile::tempdir().unwrap();
    let g = write(d.path(), "diamond.dimacs", "p edge 4 5\ne 1 2\ne 1 3\ne 2 3\ne 2 4\ne 3 4\n");
    let o = run(&["mwis", s(&g)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["value"], "2");
    let w = write(d.path(), "w.txt", "1\n5/2\n1\n1\n");
    let o = run(&["mwis", s(&g), "--weights", s(&w)]);
    let v = json(&o);
    assert_eq!(v["value"], "5/2");
    assert_eq!(v["vertices"], serde_json::json!([1]));
    let o = run(&["clique", s(&g), "--weights", s(&w)]);
    assert_eq!(json(&o)["value"], "9/2");
    // a tampered report is rejected
    let mut bad = json(&o);
    bad["value"] = "5".into();
    let rep = write(d.path(), "bad.json", &bad.to_string());
    let o = run(&["verify", s(&g), s(&rep), "--weights", s(&w)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let d = tempfile::tempdir().unwrap();
    let c4 = write(d.path(), "c4.dimacs", &cycle(4));
    let o = run(&["color", s(&c4)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["witness"]["kind"], "C4");
    let bad = write(d.path(), "bad.dimacs", "p edge 3 1\ne 1 9\n");
    let o = run(&["color", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(json(&o)["error"].as_str().unwrap().contains("line 2"));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["color"]).status.code(), Some(2));
}

#[test]
fn gen_recognize_verify() {
    let d = tempfile::tempdir().unwrap();
    for family in ["wreath", "crown", "lantern", "bracelet", "emerald"] {
        let out = d.path().join(format!("{family}.dimacs"));
        let o = run(&["gen", "--family", family, "--max-n", "16", "--shuffle", "--seed", "9", "-o", s(&out)]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let cert = PathBuf::from(format!("{}.cert.json", out.display()));
        let o = run(&["verify", s(&out), s(&cert)]);
        assert_eq!(o.status.code(), Some(0), "{family}");
        let o = run(&["recognize", s(&out)]);
        assert_eq!(o.status.code(), Some(0), "{family}");
        assert_eq!(json(&o)["class"], family);
    }
    let spec = write(d.path(), "spec.json", r#"{"class":"emerald","sizes":[1,1,1,1,1,1,1,1,1,1,1]}"#);
    let out = d.path().join("em.dimacs");
    let o = run(&["gen", "--spec", s(&spec), "-o", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["n"], 11);
}

#[test]
fn reports_are_byte_identical() {
    let d = tempfile::tempdir().unwrap();
    let out = d.path().join("b.dimacs");
    let a = run(&["gen", "--family", "bracelet", "--max-n", "30", "--seed", "4", "-o", s(&out)]);
    let first = std::fs::read(&out).unwrap();
    let b = run(&["gen", "--family", "bracelet", "--max-n", "30", "--seed", "4", "-o", s(&out)]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(first, std::fs::read(&out).unwrap());
    for cmd in ["check", "decompose", "recognize", "color", "mwis", "clique"] {
        let x = run(&[cmd, s(&out), "--seed", "4", "--jobs", "2"]);
        let y = run(&[cmd, s(&out), "--seed", "4", "--jobs", "3"]);
        assert_eq!(x.status.code(), Some(0), "{cmd}");
        assert_eq!(x.stdout, y.stdout, "{cmd}");
    }
}
