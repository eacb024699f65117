//! Acceptance checks for the command-line contract: byte-identical
//! reports for identical configurations, and the exit-code convention
//! (0 = pass, 1 = invariant failure, 2 = configuration error).

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_kafourier")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "kafourier-acceptance-{tag}-{}",
        std::process::id()
    ));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_config(dir: &std::path::Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

const PASSING_CONFIG: &str = r#"{
    "root_system": "A1",
    "k": "1/2",
    "a": "2",
    "sectors": [0, 1],
    "truncation": 8,
    "nodes": 96
}"#;

// Spectral parameters far outside the double-precision gamma range: the
// normalizations underflow to zero and the Gram check fails honestly.
const OVERFLOW_CONFIG: &str = r#"{
    "root_system": "A1",
    "k": "45",
    "a": "1/2",
    "sectors": [0],
    "truncation": 8
}"#;

const ZERO_A_CONFIG: &str = r#"{
    "root_system": "A1",
    "k": "1/2",
    "a": "0",
    "sectors": [0]
}"#;

const BOUNDARY_LAMBDA_CONFIG: &str = r#"{
    "root_system": "A1",
    "k": "0",
    "a": "1",
    "sectors": [0]
}"#;

#[test]
fn acceptance_09_cli_determinism_and_exit_codes() {
    let dir = scratch_dir("contract");
    let config = write_config(&dir, "pass.json", PASSING_CONFIG);

    // Two runs with the same configuration: byte-identical reports.
    let mut reports = Vec::new();
    for run in 0..2 {
        let out = dir.join(format!("out{run}"));
        let status = Command::new(binary())
            .args(["verify", "--config"])
            .arg(&config)
            .arg("--out")
            .arg(&out)
            .output()
            .unwrap();
        assert_eq!(status.status.code(), Some(0), "passing config must exit 0");
        reports.push(fs::read(out.join("report.txt")).unwrap());
    }
    assert_eq!(
        reports[0], reports[1],
        "verification reports must be byte-identical across runs"
    );

    // Invariant failure: parameters outside the floating-point range make
    // the orthonormality check fail, not error out.
    let overflow = write_config(&dir, "overflow.json", OVERFLOW_CONFIG);
    let status = Command::new(binary())
        .args(["verify", "--config"])
        .arg(&overflow)
        .arg("--out")
        .arg(dir.join("out-overflow"))
        .output()
        .unwrap();
    assert_eq!(
        status.status.code(),
        Some(1),
        "invariant failure must exit 1: {}",
        String::from_utf8_lossy(&status.stdout)
    );
    let report = fs::read_to_string(dir.join("out-overflow/report.txt")).unwrap();
    assert!(report.contains("[FAIL]"));
    assert!(report.contains("verdict: FAIL"));

    // Configuration errors: zero deformation parameter, and a spectral
    // parameter exactly on the excluded boundary.
    for (name, contents) in [
        ("zero-a.json", ZERO_A_CONFIG),
        ("boundary.json", BOUNDARY_LAMBDA_CONFIG),
    ] {
        let bad = write_config(&dir, name, contents);
        let status = Command::new(binary())
            .args(["verify", "--config"])
            .arg(&bad)
            .arg("--out")
            .arg(dir.join("out-bad"))
            .output()
            .unwrap();
        assert_eq!(
            status.status.code(),
            Some(2),
            "config error must exit 2 for {name}: {}",
            String::from_utf8_lossy(&status.stderr)
        );
    }

    println!("[PASS] command-line contract: deterministic reports; exit codes 0/1/2 honored");
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn spectrum_and_tables_are_deterministic() {
    let dir = scratch_dir("tables");
    let config = write_config(&dir, "pass.json", PASSING_CONFIG);
    for command in ["spectrum", "basis-table"] {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let out = dir.join(format!("{command}-{run}"));
            let status = Command::new(binary())
                .args([command, "--config"])
                .arg(&config)
                .arg("--out")
                .arg(&out)
                .output()
                .unwrap();
            assert_eq!(status.status.code(), Some(0));
            let mut files: Vec<_> = fs::read_dir(&out)
                .unwrap()
                .map(|e| e.unwrap().path())
                .collect();
            files.sort();
            let blob: Vec<u8> = files
                .iter()
                .flat_map(|f| fs::read(f).unwrap())
                .collect();
            outputs.push(blob);
        }
        assert_eq!(outputs[0], outputs[1], "{command} output must be stable");
    }
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn basis_tables_reflect_the_branch_structure() {
    let dir = scratch_dir("basis");
    let config = write_config(&dir, "pass.json", PASSING_CONFIG);
    let out = dir.join("out");
    let status = Command::new(binary())
        .args(["basis-table", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    let table = fs::read_to_string(out.join("basis_positive_m0.csv")).unwrap();
    let mut rows: Vec<(u32, f64, f64)> = Vec::new();
    for line in table.lines().skip(1) {
        let mut parts = line.split(',');
        rows.push((
            parts.next().unwrap().parse().unwrap(),
            parts.next().unwrap().parse().unwrap(),
            parts.next().unwrap().parse().unwrap(),
        ));
    }
    // The l = 0 column has no polynomial zeros: strictly positive values.
    for (l, r, value) in &rows {
        if *l == 0 {
            assert!(*value > 0.0, "l=0 value {value} at r={r}");
        }
    }
    // The mirrored table is the power-twisted reciprocal of the positive
    // one: f_-(r) = r^{-(N-2+2<k>)} f_+(1/r); here N=1, <k>=1/2, so the
    // twist exponent is zero.
    let mirrored = fs::read_to_string(out.join("basis_negative_m0.csv")).unwrap();
    let mirrored_rows: Vec<(u32, f64, f64)> = mirrored
        .lines()
        .skip(1)
        .map(|line| {
            let mut parts = line.split(',');
            (
                parts.next().unwrap().parse().unwrap(),
                parts.next().unwrap().parse().unwrap(),
                parts.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    for ((l, r, plus), (l2, r2, minus)) in rows.iter().zip(mirrored_rows.iter()) {
        assert_eq!(l, l2);
        assert_eq!(r, r2);
        // Evaluate the positive table's function at 1/r by rebuilding the
        // identity on grid points whose reciprocals also lie on the grid.
        let reciprocal = 1.0 / r;
        if let Some((_, _, plus_at_reciprocal)) = rows
            .iter()
            .find(|(ll, rr, _)| ll == l && (rr - reciprocal).abs() < 1e-12)
        {
            assert!(
                (minus - plus_at_reciprocal).abs() <= 1e-12 * plus_at_reciprocal.abs().max(1.0),
                "l={l} r={r}: {minus} vs {plus_at_reciprocal}"
            );
        }
        let _ = plus;
    }
    let _ = fs::remove_dir_all(&dir);
}

#[test]
fn transform_round_trip_identity() {
    // z = 0 semigroup: output coefficients equal the input coefficients.
    let dir = scratch_dir("transform");
    let config = write_config(
        &dir,
        "transform.json",
        r#"{
            "root_system": "A1",
            "k": "0",
            "a": "2",
            "sectors": [0],
            "truncation": 6,
            "transform": {"kind": "semigroup", "z_re": 0.0, "z_im": 0.0},
            "input": {"terms": [{"re": "1", "power": "0", "decay_rate": "1/2", "decay_exponent": "2"}]}
        }"#,
    );
    let out = dir.join("out");
    let status = Command::new(binary())
        .args(["transform", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    let before = fs::read_to_string(out.join("coefficients_in.csv")).unwrap();
    let after = fs::read_to_string(out.join("coefficients_out.csv")).unwrap();
    assert_eq!(before, after, "identity transform must copy coefficients");
    // The Gaussian profile is the l = 0 basis vector up to scale.
    let first_data_line = before.lines().nth(1).unwrap();
    assert!(first_data_line.starts_with("0,0,"));
    let c0: f64 = first_data_line.split(',').nth(2).unwrap().parse().unwrap();
    let want = (std::f64::consts::PI.sqrt() / 2.0).sqrt();
    assert!((c0 - want).abs() <= 1e-10);
    for line in before.lines().skip(2) {
        let re: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert!(re.abs() <= 1e-10, "tail coefficient {re}");
    }
    let _ = fs::remove_dir_all(&dir);
}
