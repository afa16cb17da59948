use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tperfect"))
}

fn write(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tperfect-cli-it-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn exit_codes_follow_verdicts() {
    let c5 = write("c5.el", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let k4 = write("k4.g6", "C~\n");
    let claw = write("claw.el", "4 3\n0 1\n0 2\n0 3\n");
    let code = |args: &[&std::ffi::OsStr]| bin().args(args).output().unwrap().status.code();
    assert_eq!(code(&["recognize".as_ref(), c5.as_os_str()]), Some(0));
    assert_eq!(code(&["recognize".as_ref(), k4.as_os_str()]), Some(1));
    assert_eq!(code(&["recognize".as_ref(), claw.as_os_str()]), Some(2));
    assert_eq!(code(&["no-such-command".as_ref()]), Some(64));
    assert_eq!(code(&["recognize".as_ref(), c5.as_os_str(), "--nope".as_ref()]), Some(64));
}

#[test]
fn reports_are_json_lines() {
    let k4 = write("k4b.g6", "C~\n");
    let out = bin().args(["recognize", "--trace"]).arg(&k4).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["verdict"], "not-t-perfect");
    assert_eq!(v["input"]["vertices"], 4);
    assert!(v["certificate"].is_array());
    assert!(v["timing"]["elapsed_micros"].is_u64());
}

#[test]
fn gen_output_parses_back() {
    let out = bin()
        .args(["gen", "--kind", "random-subcubic", "--count", "5", "--seed", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    for line in text.lines() {
        tperfect::io::parse_graph(line, None).unwrap();
    }
}
