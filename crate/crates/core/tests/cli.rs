use std::io::Write;
use std::process::{Command, Output, Stdio};

use tridet::bench::CSV_HEADER;
use tridet::{gen_example, Family, TridiagonalMatrix};

fn tridet(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tridet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_then_det_round_trips() {
    for (family, n) in [
        (Family::Ex31, 4),
        (Family::Ex32, 17),
        (Family::Ex34, 9),
        (Family::Ex35, 40),
    ] {
        let n_arg = n.to_string();
        let out = tridet(&["gen", "--family", family.name(), "--n", &n_arg], "");
        assert!(out.status.success());
        let text = stdout(&out);
        let parsed = TridiagonalMatrix::parse(&text).unwrap();
        let want = gen_example(family, n).unwrap();
        for (x, y) in [
            (parsed.diag(), want.diag()),
            (parsed.upper(), want.upper()),
            (parsed.lower(), want.lower()),
        ] {
            assert!(x.iter().zip(y).all(|(p, q)| p.to_bits() == q.to_bits()));
        }

        let via_file = tridet(&["det", "--alg", "three_term"], &text);
        let via_gen = tridet(
            &[
                "det",
                "--alg",
                "three_term",
                "--family",
                family.name(),
                "--n",
                &n_arg,
            ],
            "",
        );
        assert_eq!(stdout(&via_file), stdout(&via_gen));
    }
}

#[test]
fn non_integer_entries_survive_text_format() {
    let m = TridiagonalMatrix::new(
        vec![0.1, -1.0 / 3.0, 1e-300, 6.02e23],
        vec![std::f64::consts::PI, -0.0, 5e-324],
        vec![1.0 + f64::EPSILON, 2.5, -7.75],
    )
    .unwrap();
    let mut text = Vec::new();
    m.write_text(&mut text).unwrap();
    let text = String::from_utf8(text).unwrap();
    let back = TridiagonalMatrix::parse(&text).unwrap();
    let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
    assert_eq!(bits(back.diag()), bits(m.diag()));
    assert_eq!(bits(back.upper()), bits(m.upper()));
    assert_eq!(bits(back.lower()), bits(m.lower()));
}

#[test]
fn det_reports_break_and_modes() {
    let out = tridet(&["det", "--family", "ex33", "--n", "7"], "");
    assert_eq!(stdout(&out), "1\nalgorithm=hybrid pivot_break=2\n");

    let out = tridet(&["det", "--family", "ex35", "--n", "3000"], "");
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--mode scaled"));

    let out = tridet(
        &["det", "--family", "ex35", "--n", "3000", "--mode", "scaled"],
        "",
    );
    assert!(out.status.success());
    let first = stdout(&out).lines().next().unwrap().to_string();
    let (sign, logmag) = first.split_once(' ').unwrap();
    assert_eq!(sign.parse::<i8>().unwrap().abs(), 1);
    assert!(logmag.parse::<f64>().unwrap() > 709.0);

    let out = tridet(
        &["det", "--family", "ex31", "--n", "4", "--alg", "two_term"],
        "",
    );
    assert_eq!(out.status.code(), Some(4));

    let out = tridet(&["det", "--alg", "detgtri"], "3\n1 2 1\n1 1\n2 2\n");
    assert_eq!(stdout(&out), "-2\nalgorithm=detgtri\n");
}

#[test]
fn relative_zero_test_flag() {
    // c_2 = 0.3 - 0.1 * 3 rounds to a tiny nonzero value
    let input = "3\n1 0.3 1\n0.1 1\n3 1\n";
    let exact = tridet(&["det"], input);
    assert_eq!(stdout(&exact).lines().nth(1), Some("algorithm=hybrid"));
    let rel = tridet(&["det", "--relative"], input);
    assert_eq!(stdout(&rel), "-1\nalgorithm=hybrid pivot_break=2\n");
}

#[test]
fn lu_and_check_pd() {
    let out = tridet(&["lu", "--family", "ex32", "--n", "3"], "");
    assert_eq!(
        stdout(&out),
        "convention doolittle\n3\n1 1 1\n0 0\n-0.5 -0.6666666666666666\n3\n2 1.5 1.3333333333333335\n-1 -1\n0 0\n"
    );
    let out = tridet(&["lu"], "4\n1 1 2 -1\n1 -1 1\n1 1 -3\n");
    assert_eq!(out.status.code(), Some(4));

    let out = tridet(&["check-pd", "--family", "ex32", "--n", "3"], "");
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("positive-definite\n"));
}

#[test]
fn malformed_inputs_exit_2() {
    for bad in [
        "",
        "x\n",
        "2\n1 2\n1\n",
        "2\n1 nan\n1\n1\n",
        "2\n1 2\n1 2\n1\n",
        "1\n5\n\n\n7\n",
    ] {
        let out = tridet(&["det"], bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
    }
    let out = tridet(&["det", "--input", "/nonexistent/matrix.txt"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let out = tridet(
        &[
            "bench",
            "--family",
            "ex33",
            "--n",
            "100,200,300",
            "--algs",
            "hybrid,three_term,detgtri",
            "--trials",
            "3",
            "--warmup",
            "1",
            "--csv",
            csv.to_str().unwrap(),
        ],
        "",
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines.len(), 10);
    assert!(lines[1].starts_with("ex33,100,detgtri,3,"));

    let out = tridet(
        &["bench", "--family", "ex33", "--n", "10", "--trials", "2"],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_command() {
    let out = tridet(&["oracle", "--exact", "--family", "ex33", "--n", "9"], "");
    assert_eq!(stdout(&out), "-1\n");
    let out = tridet(&["oracle", "--family", "ex31", "--n", "4"], "");
    assert_eq!(stdout(&out).trim().parse::<f64>().unwrap(), -1.0);
}
