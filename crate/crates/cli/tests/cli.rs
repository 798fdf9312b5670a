use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use aaso_cli::report::{summarize_runs, ResultsDocument};

fn aaso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aaso")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const SMALL_COVER: &str = "\
# small scenario
kind = cover
area_length_m = 100
area_width_m = 80
grid_interval_m = 5
node_count = 12
radius_m = 20
view_angle_deg = 90
population = 8
iterations = 10
seeds = 1..2
";

fn write_config(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn names(dir: &Path) -> Vec<String> {
    let mut v: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    v.sort();
    v
}

#[test]
fn version_and_help() {
    let v = aaso(&["--version"]);
    assert!(v.status.success());
    assert!(stdout(&v).contains(env!("CARGO_PKG_VERSION")));
    let h = aaso(&["--help"]);
    assert!(h.status.success());
    for sub in ["cover", "bench", "analyze"] {
        assert!(stdout(&h).contains(sub));
    }
}

#[test]
fn analyze_headline_scenario() {
    let o = aaso(&[
        "analyze", "--area", "500x500", "--nodes", "110", "--radius", "60", "--fov", "90", "--target", "0.8752",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("0.7138"), "{text}");
    assert!(text.contains("nodes required for coverage 0.8752: 183"), "{text}");
    assert!(text.contains("saving versus 110 deployed: 73"), "{text}");
}

#[test]
fn analyze_reads_a_config_and_reports_domain_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "a.cfg",
        "kind = analyze\nnode_count = 110\ntarget = 0.8752\n",
    );
    let o = aaso(&["analyze", "--config", cfg.to_str().unwrap()]);
    assert!(stdout(&o).contains(": 183"), "{}", stderr(&o));
    let bad = aaso(&[
        "analyze", "--area", "1x1", "--nodes", "3", "--radius", "60", "--fov", "90",
    ]);
    assert!(!bad.status.success());
    assert!(stderr(&bad).contains("sector area exceeds"));
}

#[test]
fn cover_writes_every_artifact_reproducibly() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "c.cfg", SMALL_COVER);
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let o = aaso(&[
            "cover",
            "run",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    }

    let files = names(&a);
    let count = |prefix: &str| files.iter().filter(|f| f.starts_with(prefix)).count();
    assert_eq!(count("layout_initial_"), 2);
    assert_eq!(count("layout_final_"), 6);
    assert_eq!(count("curve_"), 6);
    assert_eq!(count("deployment_"), 2);
    for f in ["results.json", "summary.csv", "timings.txt"] {
        assert!(files.contains(&f.to_string()), "{f} missing");
    }
    for f in files.iter().filter(|f| !f.starts_with("timings")) {
        assert_eq!(
            fs::read(a.join(f)).unwrap(),
            fs::read(b.join(f)).unwrap(),
            "{f} differs between reruns"
        );
    }

    let doc: ResultsDocument = serde_json::from_str(&fs::read_to_string(a.join("results.json")).unwrap()).unwrap();
    assert_eq!(doc.runs.len(), 6);
    for r in &doc.runs {
        assert_eq!(r.angles_deg.len(), 12);
        assert_eq!(r.iterations, 10);
        assert!(r.final_rate >= r.initial_rate);
        let curve = fs::read_to_string(a.join(format!("curve_{}_{}.csv", r.algorithm, r.seed))).unwrap();
        let last: f64 = curve
            .lines()
            .last()
            .unwrap()
            .split(',')
            .nth(1)
            .unwrap()
            .parse()
            .unwrap();
        assert_eq!(last, r.final_rate);
        assert!(curve.starts_with("iter,covr\n0,"));
        assert_eq!(curve.lines().count(), 12);
    }

    // summary.csv is recomputable from results.json
    let mut expected =
        String::from("algorithm,runs,mean_final_rate,std_final_rate,min_final_rate,max_final_rate,mean_initial_rate\n");
    for row in summarize_runs(&doc.runs) {
        expected.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.algorithm,
            row.runs,
            row.mean_final_rate,
            row.std_final_rate,
            row.min_final_rate,
            row.max_final_rate,
            row.mean_initial_rate
        ));
    }
    assert_eq!(fs::read_to_string(a.join("summary.csv")).unwrap(), expected);
}

#[test]
fn seeds_flag_overrides_the_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "c.cfg",
        &SMALL_COVER.replace("seeds = 1..2", "algorithms = vfa"),
    );
    let out = dir.path().join("o");
    let o = aaso(&[
        "cover",
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--seeds",
        "7,9",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let files = names(&out);
    assert!(files.contains(&"curve_vfa_7.csv".to_string()));
    assert!(files.contains(&"curve_vfa_9.csv".to_string()));
    assert_eq!(files.iter().filter(|f| f.starts_with("curve_")).count(), 2);
}

#[test]
fn svg_sectors_match_the_exported_deployment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "c.cfg",
        &SMALL_COVER.replace("seeds = 1..2", "seeds = 3\nalgorithms = aaso"),
    );
    let out = dir.path().join("o");
    assert!(aaso(&[
        "cover",
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap()
    ])
    .status
    .success());
    let svg = fs::read_to_string(out.join("layout_initial_3.svg")).unwrap();
    assert!(svg.contains("scale(1 -1)"));
    let sensors = aaso_cli::deployment_io::read_deployment(&out.join("deployment_3.csv")).unwrap();
    let paths: Vec<&str> = svg.lines().filter(|l| l.starts_with("<path")).collect();
    assert_eq!(paths.len(), sensors.len());
    for (line, s) in paths.iter().zip(&sensors) {
        let d = line.split('"').nth(1).unwrap();
        let n: Vec<f64> = d.split_whitespace().filter_map(|t| t.parse().ok()).collect();
        let half = s.view_angle / 2.0;
        let (a, b) = (s.deviation() - half, s.deviation() + half);
        let want = [
            s.x + s.radius * a.cos(),
            s.y + s.radius * a.sin(),
            s.x + s.radius * b.cos(),
            s.y + s.radius * b.sin(),
        ];
        let got = [n[2], n[3], n[9], n[10]];
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-6, "{d}");
        }
    }
}

#[test]
fn imported_deployment_is_used_for_every_seed() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("nodes.csv"),
        "x_m,y_m,radius_m,view_angle_deg,deviation_deg\n20,20,25,90,0\n20,20,25,90,0\n70,50,25,60,180\n",
    )
    .unwrap();
    let cfg = write_config(
        dir.path(),
        "c.cfg",
        &SMALL_COVER.replace("node_count = 12", "deployment_path = nodes.csv\nalgorithms = aaso, pso"),
    );
    let out = dir.path().join("o");
    let o = aaso(&[
        "cover",
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let doc: ResultsDocument = serde_json::from_str(&fs::read_to_string(out.join("results.json")).unwrap()).unwrap();
    assert_eq!(doc.runs.len(), 4);
    assert!(doc.runs.iter().all(|r| r.angles_deg.len() == 3));
    let first = doc.runs[0].initial_rate;
    assert!(doc.runs.iter().all(|r| r.initial_rate == first));
}

#[test]
fn unwritable_output_aborts_before_running() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "c.cfg", SMALL_COVER);
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let out = blocker.join("sub");
    let o = aaso(&[
        "cover",
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cannot create output directory"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn partial_failure_lists_seeds_and_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "c.cfg", SMALL_COVER);
    let out = dir.path().join("o");
    // a directory where a curve file should go makes exactly one run fail
    fs::create_dir_all(out.join("curve_pso_2.csv")).unwrap();
    let o = aaso(&[
        "cover",
        "run",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("failing seeds: [2]"), "{}", stderr(&o));
    let doc: ResultsDocument = serde_json::from_str(&fs::read_to_string(out.join("results.json")).unwrap()).unwrap();
    assert_eq!(doc.runs.len(), 5);
}

#[test]
fn config_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "c.cfg",
        "kind = cover\nradius_m = 60\ngrid_interval_m = 0\n",
    );
    let o = aaso(&["cover", "run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let wrong_kind = write_config(dir.path(), "b.cfg", "kind = bench\n");
    assert!(!aaso(&["cover", "run", "--config", wrong_kind.to_str().unwrap()])
        .status
        .success());
}

#[test]
fn bench_writes_traces_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(
        dir.path(),
        "b.cfg",
        "kind = bench\nfunctions = rastrigin\nalgorithms = aaso, random\nruns = 2\ndimension = 4\npopulation = 10\niterations = 20\nbase_seed = 5\n",
    );
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let o = aaso(&[
            "bench",
            "run",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let files = names(&a);
    assert_eq!(
        files,
        [
            "bench_stats.csv",
            "trace_aaso_rastrigin_5.csv",
            "trace_aaso_rastrigin_6.csv",
            "trace_random_rastrigin_5.csv",
            "trace_random_rastrigin_6.csv",
        ]
    );
    for f in &files {
        assert_eq!(fs::read(a.join(f)).unwrap(), fs::read(b.join(f)).unwrap());
    }
    let stats = fs::read_to_string(a.join("bench_stats.csv")).unwrap();
    assert_eq!(stats.lines().count(), 3);
    assert!(stats.starts_with("algorithm,function,dimension,runs,best,mean,std\naaso,rastrigin,4,2,"));
}
