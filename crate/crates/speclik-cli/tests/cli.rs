use std::path::Path;
use std::process::{Command, Output};

fn speclik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_speclik"))
        .args(args)
        .env_remove("SPECLIK_SEED")
        .output()
        .expect("run speclik")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn simulate(dir: &Path, name: &str, extra: &[&str]) -> std::path::PathBuf {
    let out = dir.join(name);
    let mut args = vec!["simulate", "--model", "ar:1", "--params", "0.7", "--n", "50", "--reps", "3", "--out", path(&out)];
    args.extend_from_slice(extra);
    let o = speclik(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn simulate_schema_and_byte_identical_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let a = simulate(dir.path(), "a.csv", &["--seed", "42", "--deterministic"]);
    let b = simulate(dir.path(), "b.csv", &["--seed", "42", "--deterministic"]);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "rep,t,value,seed,spec");
    assert_eq!(lines.count(), 150);

    let stamped = simulate(dir.path(), "c.csv", &["--seed", "42"]);
    let stamped = std::fs::read_to_string(stamped).unwrap();
    assert!(stamped.starts_with("# generated_unix="));
    assert_eq!(stamped.split_once('\n').unwrap().1, text);
}

#[test]
fn seed_env_fallback() {
    let dir = tempfile::tempdir().unwrap();
    let flag = simulate(dir.path(), "flag.csv", &["--seed", "7", "--deterministic"]);
    let env_out = dir.path().join("env.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_speclik"))
        .args(["simulate", "--model", "ar:1", "--params", "0.7", "--n", "50", "--reps", "3", "--deterministic"])
        .args(["--out", path(&env_out)])
        .env("SPECLIK_SEED", "7")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(std::fs::read(flag).unwrap(), std::fs::read(env_out).unwrap());
}

#[test]
fn fit_writes_one_row() {
    let dir = tempfile::tempdir().unwrap();
    let sims = simulate(dir.path(), "s.csv", &["--seed", "1"]);
    let o = speclik(&["fit", "--model", "arma:1,1", "--criterion", "hybrid", "--input", path(&sims), "--rep", "2", "--deterministic"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("theta_1,theta_2,objective,prefit_order,converged"));
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert!(fields[0].parse::<f64>().unwrap().abs() < 1.0);
    assert_eq!(fields[4], "true");
}

#[test]
fn fit_reads_single_unnamed_column() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("x.csv");
    let values: Vec<String> = (0..60).map(|t| ((t as f64 * 1.3).sin() + 0.1 * t as f64 % 1.0).to_string()).collect();
    std::fs::write(&input, values.join("\n")).unwrap();
    let o = speclik(&["fit", "--model", "ar:1", "--criterion", "whittle", "--input", path(&input), "--deterministic"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn lw_estimate() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.csv");
    let o = speclik(&["simulate", "--model", "arfima", "--params", "0.2", "--n", "300", "--seed", "3", "--out", path(&out)]);
    assert!(o.status.success());
    let o = speclik(&["lw", "--variant", "hybrid", "--input", path(&out), "--deterministic"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let d: f64 = row[0].parse().unwrap();
    assert!(d.abs() < 0.49);
    assert_eq!(row[2], "40");
}

#[test]
fn exit_codes() {
    let o = speclik(&["identity-check", "--cases", "30", "--max-p", "3", "--max-n", "32"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 7);

    assert_eq!(speclik(&["simulate", "--model", "garch:1", "--n", "10"]).status.code(), Some(2));
    assert_eq!(speclik(&["reproduce", "nonsense"]).status.code(), Some(2));
    assert_eq!(speclik(&["simulate", "--model", "ar:1", "--params", "1.2", "--n", "10"]).status.code(), Some(2));

    // a constant series has c(0) = 0 after demeaning
    let dir = tempfile::tempdir().unwrap();
    let flat = dir.path().join("flat.csv");
    std::fs::write(&flat, "1\n".repeat(20)).unwrap();
    let o = speclik(&["fit", "--model", "ar:1", "--input", path(&flat)]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn reproduce_writes_both_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = speclik(&[
        "reproduce", "ar1", "--theta", "0.7", "--n", "50", "--reps", "20", "--deterministic", "--out-dir",
        path(dir.path()),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.contains("-0.045 (0.11)"), "{stdout}");
    let summary = std::fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    assert!(summary.starts_with("criterion,param,best_fit,bias,sd,rmse,"));
    assert_eq!(summary.lines().count(), 7);
    assert!(summary.lines().skip(1).all(|l| l.contains("seed=") && l.contains(",20240601,")));
    let reps = std::fs::read_to_string(dir.path().join("replications.csv")).unwrap();
    assert_eq!(reps.lines().count(), 1 + 20 * 6);
}

#[test]
fn benchmark_identical_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str, sub: &str| {
        let out = dir.path().join(sub);
        let o = speclik(&[
            "benchmark", "--scenario", "arma32-misspec", "--reps", "16", "--seed", "5", "--jobs", jobs, "--replications",
            "--deterministic", "--out-dir", path(&out),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        (
            std::fs::read(out.join("summary.csv")).unwrap(),
            std::fs::read(out.join("replications.csv")).unwrap(),
        )
    };
    assert_eq!(run("1", "one"), run("4", "four"));
}
