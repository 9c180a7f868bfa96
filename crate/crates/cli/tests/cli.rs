use std::collections::HashMap;
use std::process::{Command, Output};

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .env_remove("CASIMIR_FORMAT")
        .env_remove("CASIMIR_CONFIG")
        .output()
        .expect("binary runs")
}

struct Csv {
    meta: HashMap<String, String>,
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    fn parse(text: &str) -> Csv {
        let mut meta = HashMap::new();
        let mut lines = text.lines().peekable();
        while let Some(line) = lines.next_if(|l| l.starts_with('#')) {
            if let Some((k, v)) = line[1..].split_once(" = ") {
                meta.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        let columns = lines.next().unwrap().split(',').map(String::from).collect();
        let rows = lines.map(|l| l.split(',').map(String::from).collect()).collect();
        Csv { meta, columns, rows }
    }

    fn get(&self, row: usize, col: &str) -> &str {
        let i = self
            .columns
            .iter()
            .position(|c| c == col)
            .unwrap_or_else(|| panic!("no column {col}"));
        &self.rows[row][i]
    }

    fn num(&self, row: usize, col: &str) -> f64 {
        self.get(row, col).parse().unwrap()
    }
}

fn ok_csv(args: &[&str]) -> Csv {
    let out = casimir(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    Csv::parse(&String::from_utf8(out.stdout).unwrap())
}

#[test]
fn eval_at_zero_temperature() {
    let csv = ok_csv(&["eval", "--v", "0"]);
    assert_eq!(csv.num(0, "f"), -1.0 / 720.0);
    assert_eq!(csv.num(0, "p"), -1.0 / 240.0);
    assert_eq!(csv.num(0, "s"), 0.0);
}

#[test]
fn eval_physical_point() {
    let csv = ok_csv(&["eval", "--a", "1um", "--T", "291.15K"]);
    assert!((csv.num(0, "v") - 0.0405).abs() < 5e-4);
    let same = ok_csv(&["eval", "--a", "1e-6m", "--T", "18", "--celsius"]);
    assert_eq!(csv.rows, same.rows);
    let p_pa = csv.num(0, "P_Pa");
    assert!((csv.num(0, "P_N_cm2") - p_pa / 1e4).abs() <= 1e-15 * p_pa.abs());
}

#[test]
fn eval_forms_and_approximations() {
    let a = ok_csv(&["eval", "--v", "0.3", "--form", "a"]);
    let b = ok_csv(&["eval", "--v", "0.3", "--form", "b"]);
    assert_eq!((a.get(0, "form"), b.get(0, "form")), ("A", "B"));
    assert!((a.num(0, "p") - b.num(0, "p")).abs() < 1e-10);
    let high = ok_csv(&["eval", "--v", "0.3", "--approx", "hight"]);
    assert_eq!(high.get(0, "form"), "HighT");
    assert!(((high.num(0, "p") - b.num(0, "p")) / b.num(0, "p")).abs() < 0.01);
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["eval", "--v", "-1"][..],
        &["eval", "--a", "1parsec", "--T", "300"],
        &["eval", "--a", "-1um", "--T", "300"],
        &["equilibrium", "--isothermal", "--kappa", "1.2"],
        &["sweep", "v", "--from", "1", "--to", "0.5", "--steps", "3"],
        &["sweep", "v", "--from", "0.1", "--to", "0.5", "--steps", "1"],
        &["--hbar-c", "-1", "eval", "--v", "1"],
    ] {
        assert_eq!(casimir(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn isothermal_equilibrium() {
    let csv = ok_csv(&["equilibrium", "--isothermal", "--kappa", "0.6", "--T", "291.15"]);
    assert!((csv.num(0, "v") - 0.2532).abs() < 5e-4);
    assert!(((csv.num(0, "a_um") - 6.260) / 6.260).abs() < 3e-3);
    assert_eq!(csv.get(0, "stability"), "unstable");
}

#[test]
fn adiabatic_equilibrium() {
    let csv = ok_csv(&[
        "equilibrium",
        "--adiabatic",
        "--kappa0",
        "0.2",
        "--T0",
        "291.15",
        "--mass",
        "1",
    ]);
    assert_eq!(csv.rows.len(), 2);
    assert!(((csv.num(0, "root") - 0.2767) / 0.2767).abs() < 2e-3);
    assert!(((csv.num(1, "root") - 26.03) / 26.03).abs() < 2e-3);
    assert_eq!(
        (csv.get(0, "stability"), csv.get(1, "stability")),
        ("unstable", "stable")
    );
    assert!(csv.num(0, "force_coeff_pN_cm2").is_nan());
    assert!(((csv.num(1, "force_coeff_pN_cm2") - 0.39) / 0.39).abs() < 0.05);
}

#[test]
fn no_adiabatic_solution_exits_3() {
    let out = casimir(&["equilibrium", "--adiabatic", "--kappa0", "0.9"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("kappa_M"));
    assert!(out.stdout.is_empty());
}

#[test]
fn reproduce_tables() {
    let t3 = ok_csv(&["reproduce", "table3"]);
    assert_eq!(t3.rows.len(), 18);
    let t4 = ok_csv(&["reproduce", "table4"]);
    assert_eq!(t4.rows.len(), 4 * 2 * 4);
    for i in 0..t4.rows.len() {
        if t4.get(i, "quantity") != "at_as" {
            assert!(t4.num(i, "rel_dev").abs() < 3e-3, "row {i}");
        }
    }
    let c = ok_csv(&["reproduce", "constants"]);
    let names: Vec<&str> = (0..c.rows.len()).map(|i| c.get(i, "quantity")).collect();
    assert_eq!(
        names,
        ["zeta3", "casimir_pressure_1um_N_cm2", "R_zero_at", "at_M", "kappa_M"]
    );
}

#[test]
fn sweep_figure_data() {
    let csv = ok_csv(&["sweep", "at", "--from", "0.25", "--to", "2", "--steps", "50"]);
    assert_eq!(csv.rows.len(), 50);
    let r: Vec<f64> = (0..50).map(|i| csv.num(i, "R")).collect();
    let sign_change = r.windows(2).position(|w| w[0] < 0.0 && w[1] >= 0.0).unwrap();
    assert!(csv.num(sign_change, "at") < 0.2763 && 0.2763 < csv.num(sign_change + 1, "at"));
    let top = (0..50).max_by(|&i, &j| r[i].total_cmp(&r[j])).unwrap();
    assert!((csv.num(top, "at") - 0.4391).abs() < 0.04);

    let csv = ok_csv(&["sweep", "v", "--from", "0.01", "--to", "1", "--steps", "20", "--log"]);
    assert_eq!(csv.columns.len(), 14);
    assert!(csv.rows.iter().all(|r| r.len() == 14));
    assert_eq!(csv.meta["grid"], "log");
}

#[test]
fn csv_round_trips_bit_for_bit() {
    let text =
        String::from_utf8(casimir(&["sweep", "v", "--from", "0.05", "--to", "3", "--steps", "40"]).stdout).unwrap();
    let csv = Csv::parse(&text);
    let json = casimir(&[
        "--format", "json", "sweep", "v", "--from", "0.05", "--to", "3", "--steps", "40",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    for (i, row) in doc["rows"].as_array().unwrap().iter().enumerate() {
        for col in ["v", "f", "s", "p", "e", "f_hight", "p_lowt"] {
            let from_json = row[col].as_f64().unwrap();
            assert_eq!(csv.num(i, col).to_bits(), from_json.to_bits(), "row {i} {col}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["sweep", "at", "--from", "0.1", "--to", "3", "--steps", "64"];
    let first = casimir(&args).stdout;
    for _ in 0..3 {
        assert_eq!(casimir(&args).stdout, first);
    }
}

#[test]
fn format_from_environment_and_out_file() {
    let out = Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(["eval", "--v", "1"])
        .env("CASIMIR_FORMAT", "json")
        .env_remove("CASIMIR_CONFIG")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rows"][0]["form"], "B");

    let dir = std::env::temp_dir().join(format!("casimir-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("eval.csv");
    let out = casimir(&["eval", "--v", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let csv = Csv::parse(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(csv.get(0, "form"), "B");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn constants_from_config_and_flags() {
    let dir = std::env::temp_dir().join(format!("casimir-cli-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("constants.toml");
    std::fs::write(&path, "hbar_c = 3.0e-26\n").unwrap();
    let cfg = path.to_str().unwrap();

    let csv = ok_csv(&["--config", cfg, "eval", "--a", "1um", "--T", "300K"]);
    assert_eq!(csv.meta["hbar_c_J_m"], "3e-26");
    assert_eq!(csv.meta["k_b_J_per_K"], "1.380649e-23");
    let v = 1e-6 * 1.380649e-23 * 300.0 / (std::f64::consts::PI * 3.0e-26);
    assert!((csv.num(0, "v") - v).abs() < 1e-15);

    let csv = ok_csv(&["--config", cfg, "--hbar-c", "3.1e-26", "eval", "--v", "1"]);
    assert_eq!(csv.meta["hbar_c_J_m"], "3.1e-26");

    std::fs::write(&path, "hbar = 1\n").unwrap();
    assert_eq!(casimir(&["--config", cfg, "eval", "--v", "1"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
