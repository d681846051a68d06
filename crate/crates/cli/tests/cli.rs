use std::path::Path;
use std::process::{Command, Output};

fn qls(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qls"))
        .args(args)
        .env_remove("QLS_SUBSTANCES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn table1_csv_has_six_rows() {
    let o = qls(&["table1", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert_eq!(text, golden("table1.csv"));
    let published = [3.09, 2.68, 0.59, 1.73, 1.41, 1.22];
    for (line, want) in text.lines().skip(1).zip(published) {
        let lambda: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!((lambda - want).abs() <= 0.01, "{line}");
    }
}

#[test]
fn classify_prints_label() {
    let o = qls(&["classify", "--density", "1e9", "--temperature", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "classical Coulomb liquid\n");
}

#[test]
fn unknown_substance_exits_2_and_lists_names() {
    let o = qls(&["table2", "--substance", "unknownium"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    for name in ["3He", "4He", "Ne", "H2", "HD", "D2"] {
        assert!(err.contains(name), "{err}");
    }
}

#[test]
fn malformed_number_exits_2() {
    let o = qls(&["classify", "--density", "lots", "--temperature", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resonance_is_an_argument_error() {
    let o = qls(&[
        "couple",
        "gs",
        "--g-charge",
        "20",
        "--omega-x",
        "6",
        "--omega-l",
        "6",
        "--grad-bz",
        "800",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unwritable_output_is_reported() {
    let o = qls(&["table1", "--output", "/nonexistent-dir/x/table1.csv"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("nonexistent-dir"));
}

#[test]
fn substance_file_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("subs.json");
    std::fs::write(
        &path,
        r#"{"species": [{"name": "Xe", "mass": 131.29, "sigma": 4.0, "epsilon": 230.0}]}"#,
    )
    .unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_qls"))
        .arg("table1")
        .env("QLS_SUBSTANCES", &path)
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("Xe,"));

    std::fs::write(&path, "{\"species\": [{\"name\": \"Xe\"}]}").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_qls"))
        .arg("table1")
        .env("QLS_SUBSTANCES", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_and_csv_carry_the_same_numbers() {
    let csv = stdout(&qls(&["phase-diagram", "--points", "12", "--format", "csv"]));
    let json: serde_json::Value = serde_json::from_str(&stdout(&qls(&[
        "phase-diagram",
        "--points",
        "12",
        "--format",
        "json",
    ])))
    .unwrap();
    let rows = json["rows"].as_array().unwrap();
    let csv_rows: Vec<&str> = csv.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), csv_rows.len());
    for (line, obj) in csv_rows.iter().zip(rows) {
        let nums: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(nums[0], obj["T_K"].as_f64().unwrap());
        assert_eq!(nums[1], obj["n_c1_cm2"].as_f64().unwrap());
        assert_eq!(nums[2], obj["n_c2_cm2"].as_f64().unwrap());
    }
    let summary = csv.lines().last().unwrap();
    let t_c: f64 = summary
        .split("T_c_K=")
        .nth(1)
        .unwrap()
        .split(' ')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(t_c, json["summary"]["T_c_K"].as_f64().unwrap());
}

#[test]
fn progress_goes_to_stderr() {
    let o = qls(&["phase-diagram", "--points", "5"]);
    let out = stdout(&o);
    assert!(out.starts_with("T_K,n_c1_cm2,n_c2_cm2\n"));
    assert!(!String::from_utf8(o.stderr).unwrap().is_empty());
    assert!(!out.contains('\r'));
}

#[test]
fn states_dump_writes_one_file_per_level() {
    let dir = tempfile::tempdir().unwrap();
    let o = qls(&[
        "states",
        "--substance",
        "ne",
        "--levels",
        "3",
        "--dump-psi",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 4);
    for k in 1..=3 {
        let text = std::fs::read_to_string(dir.path().join(format!("Ne_level{k}.dat"))).unwrap();
        assert!(text.starts_with("# z_nm psi_nm^-1/2"));
    }
}

#[test]
fn table2_residuals_leave_reference_untouched() {
    let plain = stdout(&qls(&["table2", "--substance", "4He", "--format", "json"]));
    let with = stdout(&qls(&[
        "table2",
        "--substance",
        "4He",
        "--residuals",
        "--format",
        "json",
    ]));
    let a: serde_json::Value = serde_json::from_str(&plain).unwrap();
    let b: serde_json::Value = serde_json::from_str(&with).unwrap();
    assert_eq!(a["rows"][0]["ref_E_z1_meV"], b["rows"][0]["ref_E_z1_meV"]);
    assert_eq!(b["rows"][0]["ref_E_z1_meV"].as_f64().unwrap(), -0.676);
    assert!(b["rows"][0]["res_E_z1_meV"].as_f64().unwrap().abs() < 0.1);
}

#[test]
fn couple_commands() {
    assert_eq!(
        stdout(&qls(&["couple", "imagecharge", "--dz", "10", "--d", "2e6"])),
        "5.000000e-6 e\n"
    );
    assert!(stdout(&qls(&["couple", "strong", "--g", "5", "--gamma", "80"])).starts_with("not strong"));
    let larmor = stdout(&qls(&["couple", "larmor", "--b", "0.2", "--format", "csv"]));
    assert_eq!(larmor, "f_L_GHz\n5.59850e0\n");
}
