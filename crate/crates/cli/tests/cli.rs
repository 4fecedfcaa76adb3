use std::process::{Command, Output};

use mordellkit::identities::{list_identities, verify, ParamMap, Status};
use mordellkit_cli::{run, Report, RunConfig, SweepRange};

fn mordellkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mordellkit"))
        .args(args)
        .env_remove("MORDELLKIT_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn without_timestamp(json: &str) -> String {
    json.lines().filter(|l| !l.trim_start().starts_with("\"timestamp\"")).collect::<Vec<_>>().join("\n")
}

#[test]
fn list_has_header_and_sorted_ids() {
    let o = mordellkit(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), list_identities().len() + 1);
    assert!(lines[0].starts_with("id "));
    let ids: Vec<&str> = lines[1..].iter().map(|l| l.split_whitespace().next().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let fact1 = lines.iter().find(|l| l.starts_with("FACT1 ")).unwrap();
    assert!(fact1.contains("alpha*beta=2*pi"));
}

#[test]
fn exit_codes() {
    let o = mordellkit(&["verify", "EX1", "--tol", "1e-6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("pass") && text.contains("1.494292"), "{text}");

    assert_eq!(mordellkit(&["verify", "HR-1", "--param", "alpha=1.2", "--tol", "1e-9"]).status.code(), Some(0));

    // The regularized limit cannot certify 1e-13, so the outcome is inconclusive.
    let o = mordellkit(&["verify", "ZERO", "--tol", "1e-13"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("inconclusive"));

    for bad in [
        &["verify", "NOSUCH"][..],
        &["verify", "EX1", "NOSUCH"],
        &["verify", "HR-1", "--param", "gamma=1"],
        &["verify", "HR-1", "--param", "alpha=1", "--param", "beta=2"],
        &["verify", "HR-1", "--tol", "-1"],
        &["verify", "HR-1", "--format", "yaml"],
        &["sweep", "HR-1", "--range", "beta:1:2:3"],
        &["sweep", "HR-1", "--range", "alpha:1:2:0"],
        &["frobnicate"],
    ] {
        let o = mordellkit(bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(o.stdout.is_empty(), "{bad:?} evaluated something");
    }
}

#[test]
fn exploratory_entries_do_not_fail_the_run() {
    let o = mordellkit(&["sweep", "ELL2", "--param", "alpha=2", "--range", "beta:0.2:2:4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rep: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep.outcomes.len(), 4);
    assert!(rep.outcomes.iter().all(|o| !o.asserted && o.status == Status::Exploratory));
    assert!(stdout(&o).contains("\"asserted\": false"));
    assert_eq!(rep.summary.exploratory, 4);
}

#[test]
fn report_round_trips_and_tallies() {
    let mut cfg = RunConfig::verify(vec!["HR-2".into(), "EX1".into(), "LAT-BESSEL".into()]);
    cfg.params.insert("alpha".into(), 1.7);
    let rep = run(cfg).unwrap();
    let back: Report = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
    // Ordered by id.
    let ids: Vec<_> = rep.outcomes.iter().map(|o| o.identity_id.as_str()).collect();
    assert_eq!(ids, ["EX1", "HR-2", "LAT-BESSEL"]);
    let s = &rep.summary;
    assert_eq!((s.total, s.pass, s.fail, s.inconclusive, s.exploratory), (3, 2, 0, 0, 1));
    assert_eq!(rep.exit_code(), 0);
    assert!(rep.outcomes.iter().all(|o| o.elapsed_ms.is_none()));
}

#[test]
fn identical_configs_give_identical_json() {
    let args = ["verify", "HR-3", "GAUSS-COS", "SR-C2", "--samples", "3", "--seed", "11", "--format", "json"];
    let a = mordellkit(&args);
    let b = mordellkit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(without_timestamp(&stdout(&a)), without_timestamp(&stdout(&b)));

    // Scheduling does not change outcomes or their order.
    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "4"]);
    let c: Report = serde_json::from_str(&stdout(&mordellkit(&parallel))).unwrap();
    let a: Report = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(a.outcomes, c.outcomes);
    assert_eq!(a.outcomes.len(), 9);

    // A different seed moves the sampled points.
    let mut reseeded = args.to_vec();
    reseeded[7] = "12";
    let d: Report = serde_json::from_str(&stdout(&mordellkit(&reseeded))).unwrap();
    assert_ne!(a.outcomes[0].params, d.outcomes[0].params);
}

#[test]
fn single_point_sweep_equals_verify() {
    let mut cfg = RunConfig::verify(vec!["RAM".into()]);
    cfg.command = mordellkit_cli::Command::Sweep;
    cfg.ranges.push("alpha:1.3:2:1".parse::<SweepRange>().unwrap());
    let rep = run(cfg).unwrap();
    assert_eq!(rep.outcomes.len(), 1);
    let params: ParamMap = [("alpha".to_string(), 1.3)].into();
    let mut direct = verify("RAM", &params, None).unwrap();
    direct.elapsed_ms = None;
    assert_eq!(rep.outcomes[0], direct);
}

#[test]
fn zero_sweep_stays_below_threshold() {
    let o = mordellkit(&["sweep", "ZERO", "--range", "alpha:0.5:4:7:log", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rep: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep.outcomes.len(), 7);
    for o in &rep.outcomes {
        assert!(o.lhs.unwrap().abs() < 1e-7, "{o:?}");
    }
}

#[test]
fn out_path_receives_the_report() {
    let dir = std::env::temp_dir().join(format!("mordellkit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = mordellkit(&["verify", "SQRT2-COS", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let rep: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rep.summary.pass, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn timings_are_opt_in() {
    let o = mordellkit(&["verify", "EX2", "--format", "json", "--timings"]);
    let rep: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rep.outcomes[0].elapsed_ms.is_some());
}
