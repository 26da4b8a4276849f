use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn walkop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkop"))
        .args(args)
        .output()
        .expect("walkop runs")
}

fn out_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("walkop-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    dir
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn rows(path: PathBuf) -> Vec<Vec<String>> {
    fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn qwalk_run_iiib_fig2() {
    let dir = out_dir("iiib");
    let out = walkop(&[
        "qwalk-run", "--case", "IIIB", "--q", "7", "--steps", "400", "--snapshot-at", "400",
        "--out", dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let obs = rows(dir.join("observables.csv"));
    assert_eq!(obs[0], ["t", "sigma", "mean_x", "p0"]);
    assert_eq!(obs.len(), 402);
    let dist = rows(dir.join("dist_t400.csv"));
    assert_eq!(dist[0], ["t", "x", "prob_coin0", "prob_coin1", "prob"]);
    assert_eq!(dist.len(), 1 + 801);
    let mut names: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert_eq!(names, ["dist_t400.csv", "observables.csv"]);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn qwalk_run_hadamard_sigma() {
    let dir = out_dir("had");
    let out = walkop(&["qwalk-run", "--case", "HADAMARD", "--N", "1", "--steps", "2", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let obs = rows(dir.join("observables.csv"));
    assert_eq!(obs.len(), 4);
    assert_eq!(obs[3][0], "2");
    let sigma: f64 = obs[3][1].parse().unwrap();
    assert!((sigma - std::f64::consts::SQRT_2).abs() <= 1e-12);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn qwalk_run_rejects_bad_sizes() {
    let out = walkop(&["qwalk-run", "--case", "IA", "--N", "1"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("case IA requires N >= 2"), "{}", stderr(&out));

    let out = walkop(&["qwalk-run", "--case", "IIA", "--N", "7"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("case IIA requires even N"));

    let out = walkop(&["qwalk-run", "--case", "IIIB", "--q", "4"]);
    assert!(stderr(&out).contains("requires odd q"));

    let out = walkop(&["qwalk-run", "--case", "IIIB", "--N", "14"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("--q"));

    let out = walkop(&["qwalk-run", "--case", "IV", "--N", "4"]);
    assert!(stderr(&out).contains("unknown case"));

    let out = walkop(&["qwalk-run", "--case", "IA", "--N", "4", "--steps", "5", "--snapshot-at", "6"]);
    assert!(stderr(&out).contains("exceeds --steps"));
}

#[test]
fn qwalk_cases_fig1() {
    let dir = out_dir("cases");
    let out = walkop(&["qwalk-cases", "--N", "14", "--q", "7", "--steps", "400", "--out", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let table = rows(dir.join("sigma_by_case.csv"));
    assert_eq!(table[0], ["case", "t", "sigma"]);
    assert_eq!(table.len(), 1 + 7 * 401);
    let finals: Vec<(String, f64)> = table[1..]
        .iter()
        .filter(|r| r[1] == "400")
        .map(|r| (r[0].clone(), r[2].parse().unwrap()))
        .collect();
    assert_eq!(finals.len(), 7);
    let (slowest, _) = finals
        .iter()
        .filter(|(c, _)| c != "HADAMARD")
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    assert_eq!(slowest, "IIIB");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn qwalk_cases_validates_every_size_first() {
    let dir = out_dir("cases-bad");
    let out = walkop(&["qwalk-cases", "--N", "13", "--q", "7", "--out", dir.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("case IIA requires even N"));
    assert!(!dir.exists());
}

#[test]
fn opinion_run_fig4() {
    let dir = out_dir("run");
    let args = ["opinion-run", "--alpha", "0.5", "--mu", "1", "--agents", "25", "--seed", "1", "--out", dir.to_str().unwrap()];
    let out = walkop(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("consensus "), "{stdout}");
    let traj = rows(dir.join("trajectory.csv"));
    assert_eq!(traj[0], ["t", "p_sA"]);
    let last: f64 = traj.last().unwrap()[1].parse().unwrap();
    assert!(last == 0.0 || last == 1.0);
    let first = fs::read(dir.join("trajectory.csv")).unwrap();
    assert!(walkop(&args).status.success());
    assert_eq!(fs::read(dir.join("trajectory.csv")).unwrap(), first);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn opinion_run_rejects_out_of_range() {
    let out = walkop(&["opinion-run", "--alpha", "1.5", "--mu", "0.5", "--agents", "10"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("alpha = 1.5 must lie in [0, 1]"));
    let out = walkop(&["opinion-run", "--alpha", "0.5", "--mu", "0.5", "--agents", "1"]);
    assert!(!out.status.success());
}

#[test]
fn opinion_sweep_grid_rows() {
    let dir = out_dir("sweep");
    let out = walkop(&[
        "opinion-sweep", "--alpha-grid", "0:1:0.1", "--mu-grid", "0:1:0.1", "--agents", "6",
        "--ensemble", "2", "--max-steps", "20000", "--out", dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let table = rows(dir.join("sweep.csv"));
    assert_eq!(
        table[0],
        ["alpha", "mu", "n_agents", "mean_T", "std_T", "consensus_rate", "consensus_A_fraction"]
    );
    assert_eq!(table.len(), 1 + 121);
    assert_eq!(&table[4][..3], ["0", "0.3", "6"]);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn opinion_sweep_is_reproducible() {
    let dir = out_dir("sweep-det");
    let args = |t: &'static str| {
        vec![
            "opinion-sweep", "--alpha-grid", "0.5", "--mu-grid", "0.5,1", "--agents", "10",
            "--ensemble", "1", "--seed", "7", "--threads", t, "--out",
        ]
    };
    let mut outputs = Vec::new();
    for t in ["1", "2"] {
        let mut a = args(t);
        a.push(dir.to_str().unwrap());
        assert!(walkop(&a).status.success());
        outputs.push(fs::read(dir.join("sweep.csv")).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn opinion_sweep_rejects_malformed_grids() {
    for grid in ["0:1", "a:b:c", "0:2:0.5", "1:0:0.1"] {
        let out = walkop(&["opinion-sweep", "--alpha-grid", grid, "--mu-grid", "0.5"]);
        assert!(!out.status.success(), "{grid}");
        assert!(stderr(&out).contains("alpha-grid"), "{grid}: {}", stderr(&out));
    }
    let out = walkop(&["opinion-sweep", "--alpha-grid", "0.5", "--mu-grid", "0.5", "--ensemble", "0"]);
    assert!(stderr(&out).contains("ensemble size"));
    let out = walkop(&["opinion-sweep", "--alpha-grid", "0.5", "--mu-grid", "0.5", "--threads", "0"]);
    assert!(!out.status.success());
}

#[test]
fn larger_rings_take_longer() {
    let dir = out_dir("sweep-n");
    let out = walkop(&[
        "opinion-sweep", "--alpha-grid", "0.25:0.75:0.25", "--mu-grid", "0.5,1", "--agents", "25,100",
        "--ensemble", "20", "--out", dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let table = rows(dir.join("sweep.csv"));
    let mean_for = |n: &str| {
        let v: Vec<f64> = table[1..].iter().filter(|r| r[2] == n).map(|r| r[3].parse().unwrap()).collect();
        v.iter().sum::<f64>() / v.len() as f64
    };
    assert!(mean_for("100") > mean_for("25"));
    fs::remove_dir_all(dir).unwrap();
}
