use std::io::Write;
use std::process::{Command, Output, Stdio};

fn zreduce(args: &[&str], stdin: &[u8], envs: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zreduce"))
        .args(args)
        .envs(envs.iter().copied())
        .env_remove("Z_DEBUG_VALIDATE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn reduce_file_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("walks.txt");
    let output = dir.path().join("forms.txt");
    std::fs::write(&input, "cbaaaabccbaabba\n\nabcaacbbbaabccbbca\n").unwrap();
    let o = zreduce(&["reduce", input.to_str().unwrap(), "-o", output.to_str().unwrap()], b"", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&output).unwrap(), "cba\n\nabca\n");
}

#[test]
fn stream_from_stdin() {
    let o = zreduce(&["reduce", "--stream"], b"abccbaabbccbbaaaabccbaabbc\naaa", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "abccbaabbc\na\n");
}

#[test]
fn detect_and_graph() {
    let o = zreduce(&["detect", "-"], b"ababccbaabcc\nabc\n", &[]);
    assert_eq!(stdout(&o), "Z 5 8\nIRREDUCIBLE\n");
    let o = zreduce(&["graph", "--format", "json"], b"\n", &[]);
    assert_eq!(stdout(&o), "{\"vertices\":1,\"edges\":[]}\n");
    let o = zreduce(&["graph", "--format", "dot"], b"abcaacbbbaabccbbca\n", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(" -- ")).count(), 4);
}

#[test]
fn debug_validation_by_flag_and_env() {
    let input = b"cbaaaabccbaabba\nabcaacbbbaabccbbca\n";
    let plain = zreduce(&["reduce"], input, &[]);
    let flag = zreduce(&["--debug-validate", "reduce"], input, &[]);
    let env = zreduce(&["reduce", "--stream"], input, &[("Z_DEBUG_VALIDATE", "1")]);
    assert_eq!(flag.status.code(), Some(0));
    assert_eq!(env.status.code(), Some(0));
    assert_eq!(plain.stdout, flag.stdout);
    assert_eq!(plain.stdout, env.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(zreduce(&[], b"", &[]).status.code(), Some(1));
    assert_eq!(zreduce(&["graph", "--format", "svg"], b"", &[]).status.code(), Some(1));
    assert_eq!(zreduce(&["--version"], b"", &[]).status.code(), Some(0));
    let bad = zreduce(&["detect"], b"ok\nfine\n\xc3\x28\n", &[]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 3"));
    let bad = zreduce(&["reduce", "--stream"], b"ab\n\xff", &[]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(zreduce(&["reduce", "/no/such/file"], b"", &[]).status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let o = zreduce(&["verify", "--max-len", "12", "--alphabet", "ab"], b"", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
    let o = zreduce(&["verify", "--random", "1000", "--seed", "1"], b"", &[]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn byte_deterministic() {
    let input = b"abcaacbbbaabccbbca\nx y x x y x\n";
    for args in [&["graph", "--format", "dot"][..], &["graph", "--format", "json"], &["detect"]] {
        assert_eq!(zreduce(args, input, &[]).stdout, zreduce(args, input, &[]).stdout);
    }
}

#[test]
fn bench_csv_rows() {
    let o = zreduce(
        &["bench", "--algo", "reducer,naive_oracle", "--sizes", "64", "--sigmas", "2", "--adversarial", "2", "--naive-cap", "40"],
        b"",
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<&str> = stdout(&o).lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[3].starts_with("naive_oracle,64,2,0,,"));
    assert!(lines[4].starts_with("naive_oracle,24,adversarial,2,"));
}
