use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_oscfield");

fn manifest(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn run(args: &[&str], out: &Path) -> i32 {
    let status = Command::new(BIN).args(args).arg("--out").arg(out).output().expect("spawn oscfield");
    status.status.code().expect("exit code")
}

fn config(name: &str) -> String {
    manifest(&format!("examples/configs/{name}")).display().to_string()
}

fn files(dir: &Path) -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    v.sort();
    v
}

#[test]
fn verify_algebra_default_config_passes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["verify-algebra"], dir.path()), 0);
    let csv = fs::read_to_string(dir.path().join("algebra.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 3 * 4 * 4);
    let boundary = fs::read_to_string(dir.path().join("boundary.csv")).unwrap();
    assert_eq!(boundary.lines().count(), 1 + 4);
}

#[test]
fn injected_fault_fails_the_check() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["verify-algebra", "--inject-fault"], dir.path()), 1);
    assert_eq!(run(&["field-sweep", "--inject-fault", "--config", &config("coherent.json")], dir.path()), 1);
    assert_eq!(run(&["compare-standard", "--inject-fault", "--config", &config("compare.json")], dir.path()), 1);
    assert_eq!(run(&["verify-algebra", "--tolerance", "1e-20"], dir.path()), 1);
}

#[test]
fn bad_configs_exit_with_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let malformed = write("malformed.json", "{\"nmax\": 3,");
    let unknown = write("unknown.json", r#"{"modes": [{"omega": 1.0}], "nmax": 2, "colour": "red"}"#);
    let both = write("both.json", r#"{"modes": [{"omega": 1.0}], "box": {"edge": 1.0, "max": [1, 0, 0]}, "nmax": 2}"#);
    let no_atom = write("no_atom.json", r#"{"modes": [{"s": 1, "kappa": [0, 0, 1]}], "nmax": 2}"#);
    let too_big = write("too_big.json", r#"{"modes": [{"omega": 1.0}], "nmax": 4}"#);
    let out = dir.path().join("out");
    assert_eq!(run(&["verify-algebra", "--config", &malformed], &out), 2);
    assert_eq!(run(&["verify-algebra", "--config", &unknown], &out), 2);
    assert_eq!(run(&["verify-algebra", "--config", &both], &out), 2);
    assert_eq!(run(&["verify-algebra", "--config", "/nonexistent/config.json"], &out), 2);
    assert_eq!(run(&["emission", "--config", &no_atom], &out), 2);
    assert_eq!(run(&["compare-standard", "--config", &too_big], &out), 2);
    assert_eq!(run(&["no-such-command"], &out), 2);
}

#[test]
fn empty_grid_gives_header_only_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("empty.json");
    let text = fs::read_to_string(config("coherent.json")).unwrap().replace(
        r#""times": {"start": 0.0, "stop": 2.0, "count": 5}"#,
        r#""times": []"#,
    );
    assert!(text.contains(r#""times": []"#));
    fs::write(&cfg, text).unwrap();
    let out = dir.path().join("out");
    assert_eq!(run(&["field-sweep", "--config", cfg.to_str().unwrap()], &out), 0);
    assert_eq!(fs::read_to_string(out.join("field_sweep.csv")).unwrap(), "t,x,y,z,Ax,Ay,Az,Ex,Ey,Ez,Bx,By,Bz\n");

    let states = dir.path().join("states.json");
    fs::write(&states, r#"{"modes": [{"omega": 1.0}], "nmax": 2, "states": []}"#).unwrap();
    assert_eq!(run(&["vacuum-energy", "--config", states.to_str().unwrap()], &out), 0);
    assert_eq!(fs::read_to_string(out.join("vacuum.csv")).unwrap().lines().count(), 1);
}

#[test]
fn single_mode_emission_matches_jaynes_cummings() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(&["emission", "--config", &config("jaynes_cummings.json")], dir.path()), 0);
    let summary: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("summary.json")).unwrap()).unwrap();
    assert!(summary["jaynes_cummings_deviation"].as_f64().unwrap() < 1e-10);
    assert_eq!(fs::read_to_string(dir.path().join("jaynes_cummings.csv")).unwrap().lines().count(), 22);
}

#[test]
fn seed_controls_sample_points() {
    let dir = tempfile::tempdir().unwrap();
    let read = |sub: &str, seed: &str| {
        let out = dir.path().join(sub);
        assert_eq!(run(&["field-identities", "--seed", seed, "--config", &config("box.json")], &out), 0);
        fs::read(out.join("identities.csv")).unwrap()
    };
    assert_eq!(read("a", "5"), read("b", "5"));
    assert_ne!(read("a", "5"), read("c", "6"));
}

fn golden_runs() -> Vec<(&'static str, Vec<String>)> {
    vec![
        ("verify-algebra", vec!["verify-algebra".into()]),
        ("vacuum-energy", vec!["vacuum-energy".into()]),
        ("field-sweep", vec!["field-sweep".into(), "--config".into(), config("coherent.json")]),
        ("field-identities", vec!["field-identities".into(), "--config".into(), config("box.json")]),
        ("emission", vec!["emission".into(), "--config".into(), config("emission.json")]),
        ("jaynes-cummings", vec!["emission".into(), "--config".into(), config("jaynes_cummings.json")]),
        ("compare-standard", vec!["compare-standard".into(), "--config".into(), config("compare.json")]),
    ]
}

#[test]
fn outputs_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in golden_runs() {
        let out = dir.path().join(name);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&args, &out), 0, "{name}");
        let golden = manifest(&format!("tests/golden/{name}"));
        let names = |d: &Path| files(d).iter().map(|p| p.file_name().unwrap().to_owned()).collect::<Vec<_>>();
        assert_eq!(names(&out), names(&golden), "{name}");
        for g in files(&golden) {
            let produced = fs::read_to_string(out.join(g.file_name().unwrap())).unwrap();
            assert_eq!(produced, fs::read_to_string(&g).unwrap(), "{}", g.display());
        }
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in golden_runs() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (dir.path().join(format!("{name}-1")), dir.path().join(format!("{name}-2")));
        run(&args, &a);
        run(&args, &b);
        for f in files(&a) {
            assert_eq!(fs::read(&f).unwrap(), fs::read(b.join(f.file_name().unwrap())).unwrap(), "{}", f.display());
        }
    }
}
