mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nodecover::graph::load_edge_list;
use nodecover::report::{increase_pct, RunReport};
use tempfile::TempDir;

use common::TOY_EDGES;

fn nodecover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nodecover"))
        .args(args)
        .output()
        .unwrap()
}

fn fixture(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn load_report(path: &Path) -> RunReport {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn brute_force_on_toy() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture(&dir, "toy.tsv", TOY_EDGES);
    let report = dir.path().join("r.json");
    let out = nodecover(&[
        "run",
        "--graph",
        s(&graph),
        "--method",
        "brute-force",
        "--budget",
        "2",
        "--seed",
        "1",
        "--report",
        s(&report),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("individual: {4, 7}"), "{stdout}");
    let r = load_report(&report);
    assert_eq!(r.results[0].fitness, 4.0);
    assert_eq!(r.results[0].individual, vec![4, 7]);
    assert_eq!(r.seed_source, "flag");
    assert_eq!(r.inputs[0].role, "graph");
    assert_eq!(r.inputs[0].sha256.len(), 64);
}

#[test]
fn ga_never_exceeds_optimum_on_toy() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture(&dir, "toy.tsv", TOY_EDGES);
    for seed in ["1", "2", "3"] {
        let report = dir.path().join(format!("ga{seed}.json"));
        let out = nodecover(&[
            "run",
            "--graph",
            s(&graph),
            "--method",
            "ga",
            "--budget",
            "2",
            "--seed",
            seed,
            "--report",
            s(&report),
        ]);
        assert!(out.status.success());
        let r = load_report(&report);
        assert!(r.results[0].fitness <= 4.0);
        assert!(r.results[0].individual.len() <= 2);
        let ga = r.results[0].ga.as_ref().unwrap();
        assert_eq!(ga.history.len(), 60);
        assert!(
            ga.history.windows(2).all(|w| w[0].best <= w[1].best),
            "elitist best must not decrease"
        );
    }
}

#[test]
fn compare_reports_percentages_against_first_method() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture(&dir, "toy.tsv", TOY_EDGES);
    let report = dir.path().join("cmp.json");
    let out = nodecover(&[
        "run",
        "--graph",
        s(&graph),
        "--compare",
        "brute-force,degree-greedy,random",
        "--budget",
        "2",
        "--seed",
        "5",
        "--trials",
        "300",
        "--report",
        s(&report),
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.matches("increased by").count(), 2, "{stdout}");
    let r = load_report(&report);
    assert_eq!(r.comparisons.len(), 2);
    for c in &r.comparisons {
        assert_eq!(c.method, "brute-force");
        let lead = r
            .results
            .iter()
            .find(|x| x.method == c.method)
            .unwrap()
            .comparison_value;
        let other = r
            .results
            .iter()
            .find(|x| x.method == c.reference)
            .unwrap()
            .comparison_value;
        assert_eq!(c.increased_by_pct, increase_pct(lead, other));
        let recomputed = (lead - other) / other * 100.0;
        assert!((c.increased_by_pct.unwrap() - recomputed).abs() < 1e-12);
    }
    // degree greedy picks {1,4} = 3 on ties; brute force reaches 4
    let degree = &r.comparisons[0];
    assert_eq!(degree.reference, "degree-greedy");
    assert!((degree.increased_by_pct.unwrap() - 100.0 / 3.0).abs() < 1e-9);
    let random = r.results.iter().find(|x| x.method == "random").unwrap();
    assert_eq!(random.random.as_ref().unwrap().trials, 300);
}

#[test]
fn weighted_run_uses_weight_file() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture(&dir, "toy.tsv", TOY_EDGES);
    let weights = fixture(&dir, "w.tsv", common::TOY_WEIGHTS);
    let report = dir.path().join("w.json");
    let out = nodecover(&[
        "run",
        "--graph",
        s(&graph),
        "--weights",
        s(&weights),
        "--method",
        "brute-force",
        "--budget",
        "2",
        "--seed",
        "1",
        "--report",
        s(&report),
    ]);
    assert!(out.status.success());
    let r = load_report(&report);
    assert!(r.weighted);
    assert_eq!(r.results[0].individual, vec![4, 7]);
    assert!((r.results[0].fitness - 3.0).abs() < 1e-12);
    assert_eq!(r.inputs.len(), 2);
}

#[test]
fn generate_is_reproducible_and_sized() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.tsv");
    let b = dir.path().join("b.tsv");
    let args = |o: &Path| {
        vec![
            "generate".to_string(),
            "--active".into(),
            "2000".into(),
            "--churn".into(),
            "8000".into(),
            "--mean-degree".into(),
            "10".into(),
            "--dist".into(),
            "powerlaw:2.5".into(),
            "--seed".into(),
            "9".into(),
            "-o".into(),
            s(o).into(),
        ]
    };
    for path in [&a, &b] {
        let argv = args(path);
        assert!(nodecover(&argv.iter().map(String::as_str).collect::<Vec<_>>())
            .status
            .success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let g = load_edge_list(std::io::BufReader::new(std::fs::File::open(&a).unwrap())).unwrap();
    assert_eq!(g.active_count(), 2000);
    let expected = 2000.0 * 10.0;
    assert!(
        (g.edge_count() as f64 - expected).abs() <= 0.05 * expected,
        "{} edges",
        g.edge_count()
    );
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture(&dir, "toy.tsv", TOY_EDGES);
    let config = fixture(
        &dir,
        "ga.conf",
        "budget = 2\niterations = 7\ngroup_size = 6\nseed = 44\n",
    );
    let report = dir.path().join("c.json");
    let out = nodecover(&[
        "run",
        "--graph",
        s(&graph),
        "--config",
        s(&config),
        "--iterations",
        "9",
        "--report",
        s(&report),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = load_report(&report);
    assert_eq!(r.seed, 44);
    assert_eq!(r.seed_source, "config");
    assert_eq!(r.config["iterations"], "9");
    assert_eq!(r.config["group_size"], "6");
    assert_eq!(
        r.inputs.iter().map(|i| i.role.as_str()).collect::<Vec<_>>(),
        ["graph", "config"]
    );
}

#[test]
fn missing_seed_falls_back_to_clock() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture(&dir, "toy.tsv", TOY_EDGES);
    let report = dir.path().join("clock.json");
    let out = nodecover(&[
        "run",
        "--graph",
        s(&graph),
        "--method",
        "random",
        "--budget",
        "1",
        "--report",
        s(&report),
    ]);
    assert!(out.status.success());
    assert_eq!(load_report(&report).seed_source, "clock");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture(&dir, "toy.tsv", TOY_EDGES);
    let bad = fixture(&dir, "bad.tsv", "1\t2\nnot an edge\n");
    let stray = fixture(&dir, "stray.tsv", "1\t2\t0.5\n9\t9\t0.1\n");
    let code = |args: &[&str]| nodecover(args).status.code().unwrap();

    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(
        code(&["run", "--graph", s(&graph), "--budget", "2", "--method", "nope"]),
        1
    );
    assert_eq!(
        code(&["run", "--graph", s(&graph), "--budget", "2", "--mutation", "1.5"]),
        1
    );
    assert_eq!(code(&["run", "--graph", s(&graph)]), 1);
    assert_eq!(code(&["bench"]), 1);
    assert_eq!(
        code(&[
            "generate",
            "--active",
            "3",
            "--churn",
            "2",
            "--mean-degree",
            "5",
            "-o",
            s(&dir.path().join("x"))
        ]),
        1
    );

    let missing = dir.path().join("missing.tsv");
    assert_eq!(code(&["run", "--graph", s(&missing), "--budget", "2"]), 2);
    let out = nodecover(&["run", "--graph", s(&bad), "--budget", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(
        code(&[
            "run",
            "--graph",
            s(&graph),
            "--weights",
            s(&stray),
            "--budget",
            "1",
            "--seed",
            "1"
        ]),
        2
    );

    let failing = fixture(&dir, "fail.spec", "active = 30\nchurn = 60\nmean_degree = 3\ndist = uniform\nbudget = 3\nmethods = random,coverage-greedy\nassert = random >= 2 * coverage-greedy\n");
    let out = nodecover(&["bench", "--spec", s(&failing), "--seed", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[FAIL]"));
}

#[test]
fn bench_single_method_table() {
    let dir = tempfile::tempdir().unwrap();
    let spec = fixture(
        &dir,
        "one.spec",
        "active = 50\nchurn = 120\nmean_degree = 3\ndist = uniform\nbudget = 4\nmethods = ga\nga.iterations = 10\n",
    );
    let out = nodecover(&["bench", "--spec", s(&spec), "--seed", "2"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 1, "{stdout}");
    assert!(rows[0].contains("ga"));
}
