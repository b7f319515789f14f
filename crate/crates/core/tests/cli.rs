use std::path::Path;
use std::process::{Command, Output};

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .env("RUST_LOG", "error")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Data rows of a CSV emitted by the tool, split into fields.
fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn header_value(text: &str, key: &str) -> Option<String> {
    text.lines()
        .filter_map(|l| l.strip_prefix("# "))
        .find_map(|l| l.strip_prefix(&format!("{key} = ")).map(str::to_string))
}

#[test]
fn sensitivity_default_cantilever() {
    let o = casimir(&["sensitivity"]);
    assert_eq!(o.status.code(), Some(0));
    let r = rows(&stdout(&o));
    let f: f64 = r[0][5].parse().unwrap();
    assert!((f - 0.96e-15).abs() / 0.96e-15 < 0.01, "{f}");
}

#[test]
fn sweep_csv_is_self_describing_and_deterministic() {
    let args = ["sweep", "--points", "4", "--zmin", "120 nm", "--zmax", "0.25um"];
    let a = casimir(&args);
    let b = casimir(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(header_value(&text, "schema").as_deref(), Some("casimir-curve/1"));
    assert_eq!(header_value(&text, "points").as_deref(), Some("4"));
    assert_eq!(header_value(&text, "z_min").as_deref(), Some("1.20000000000e-7 m"));
    assert_eq!(header_value(&text, "high").as_deref(), Some("si-doped-n1"));
    assert!(text.contains("\nz_m,value,magnitude,terms,last_ratio,converged\n"));
    let r = rows(&text);
    assert_eq!(r.len(), 4);
    for row in &r {
        let value: f64 = row[1].parse().unwrap();
        let magnitude: f64 = row[2].parse().unwrap();
        assert!(value < 0.0 && magnitude == -value);
        assert_eq!(row[5], "true");
        // twelve significant digits
        assert_eq!(row[1].split('e').next().unwrap().trim_start_matches('-').len(), 13);
    }
}

#[test]
fn identical_sections_give_zero_column() {
    let o = casimir(&["sweep", "--points", "3", "--high", "si-doped-n2", "--low", "si-doped-n2"]);
    assert_eq!(o.status.code(), Some(0));
    for row in rows(&stdout(&o)) {
        assert_eq!(row[1].parse::<f64>().unwrap(), 0.0);
    }
}

#[test]
fn json_output_parses() {
    let o = casimir(&["sweep", "--points", "3", "--quantity", "pressure", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "casimir-curve/1");
    assert_eq!(v["unit"], "Pa");
    assert_eq!(v["config"]["quantity"], "pressure");
    assert_eq!(v["points"].as_array().unwrap().len(), 3);
    let p = v["points"][0]["value"].as_f64().unwrap();
    assert!((p.abs() - 0.2466).abs() < 1e-3, "{p}");
}

#[test]
fn compare_report_matches_analytic_gap() {
    let o = casimir(&["compare", "--points", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(header_value(&text, "schema").as_deref(), Some("casimir-compare/1"));
    let r = rows(&text);
    assert_eq!(r.len(), 5);
    for row in &r {
        assert!(row[6].parse::<f64>().unwrap() < 1e-4);
    }
    let gap100: f64 = r[0][5].parse().unwrap();
    assert!((gap100 - 1.2127e-12).abs() < 1e-15, "{gap100}");
    let max: f64 = header_value(&text, "max_relative_deviation").unwrap().parse().unwrap();
    assert!(max < 1e-4);
}

#[test]
fn compare_vo2_pressure_json() {
    let o = casimir(&[
        "compare", "--points", "3", "--high", "vo2-metal", "--low", "vo2-insulator",
        "--temperature", "340 K", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let gap = v["rows"][0]["gap_magnitude"].as_f64().unwrap();
    assert!((gap - 1.578e-12).abs() < 2e-15, "{gap}");
    assert!(v["summary"]["max_relative_deviation"].as_f64().unwrap() < 1e-4);
}

#[test]
fn compare_needs_a_dielectric_low_section() {
    let o = casimir(&["compare", "--points", "3", "--low", "si-doped-n"]);
    assert_eq!(o.status.code(), Some(1));
    let o = casimir(&["compare", "--points", "3", "--low", "none"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn permittivity_tables() {
    let o = casimir(&["permittivity", "--material", "vo2-insulator"]);
    assert_eq!(o.status.code(), Some(0));
    let r = rows(&stdout(&o));
    assert_eq!(r[0][0].parse::<f64>().unwrap(), 0.0);
    assert!((r[0][2].parse::<f64>().unwrap() - 9.909).abs() < 1e-10);

    let o = casimir(&[
        "permittivity", "--material", "si-dielectric", "--xi-min", "1e17 rad/s", "--xi-max", "1e19 rad/s",
        "--points", "5",
    ]);
    let eps: Vec<f64> = rows(&stdout(&o)).iter().skip(1).map(|r| r[2].parse().unwrap()).collect();
    assert!(eps.iter().all(|&e| e < 2.0));
    assert!(eps.windows(2).all(|w| w[1] < w[0]));

    for m in ["gold-drude", "si-doped-n1", "vo2-metal"] {
        let o = casimir(&["permittivity", "--material", m, "--xi-min", "1e24 rad/s", "--xi-max", "1e25 rad/s", "--points", "2"]);
        let r = rows(&stdout(&o));
        // Drude models have no static row
        assert_eq!(r.len(), 2);
        assert!((r[1][2].parse::<f64>().unwrap() - 1.0).abs() < 1e-6);
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(casimir(&["sweep", "--bogus"]).status.code(), Some(1));
    assert_eq!(casimir(&["sweep", "--temperature", "300"]).status.code(), Some(1));
    assert_eq!(casimir(&["sweep", "--material", "unobtainium"]).status.code(), Some(1));
    assert_eq!(casimir(&["sweep", "--zmin", "300 nm", "--zmax", "100 nm"]).status.code(), Some(1));
    assert_eq!(casimir(&["sweep", "--model", "c"]).status.code(), Some(1));
    assert_eq!(casimir(&[]).status.code(), Some(1));
    let o = casimir(&["sweep", "--points", "2", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot write"));
}

#[test]
fn non_convergence_exits_two_with_diagnostics() {
    let o = casimir(&["sweep", "--points", "3", "--l-max-cap", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert_eq!(header_value(&text, "all_converged").as_deref(), Some("false"));
    assert!(rows(&text).iter().any(|r| r[5] == "false"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("vo2.toml");
    std::fs::write(
        &cfg,
        r#"
high = "vo2-metal"
low = "vo2-insulator"
temperature = "300 K"
points = 2
"#,
    )
    .unwrap();
    let out = dir.path().join("out.csv");
    let o = casimir(&[
        "sweep", "--config", cfg.to_str().unwrap(), "--temperature", "340 K", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(header_value(&text, "temperature").as_deref(), Some("3.40000000000e2 K"));
    let f: f64 = rows(&text)[0][2].parse().unwrap();
    assert!((f - 1.7468e-11).abs() < 1e-14, "{f}");
}

fn write_table(path: &Path) {
    // a single broad absorption band near 5 eV
    let mut s = String::from("# omega_eV  im_eps\n");
    for i in 0..400 {
        let w = 0.05 + 0.05 * i as f64;
        let x = w / 5.0;
        let im = 8.0 * 0.5 * x / ((1.0 - x * x).powi(2) + (0.5 * x).powi(2));
        s.push_str(&format!("{w} {im}\n"));
    }
    std::fs::write(path, s).unwrap();
}

#[test]
fn optical_table_material() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("band.dat");
    write_table(&table);
    let o = casimir(&[
        "sweep", "--points", "3", "--low", "tabulated", "--optical-table", table.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert_eq!(header_value(&text, "low_label").as_deref(), Some("tabulated"));
    assert!(rows(&text).iter().all(|r| r[1].parse::<f64>().unwrap() < 0.0));

    let o = casimir(&["permittivity", "--material", "tabulated", "--optical-table", table.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = rows(&stdout(&o));
    assert!(r[0][2].parse::<f64>().unwrap() > 1.0);

    assert_eq!(casimir(&["sweep", "--low", "tabulated"]).status.code(), Some(1));
}

#[test]
fn custom_material_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("custom.toml");
    std::fs::write(
        &cfg,
        r#"
high = "my-si"
points = 2

[materials.my-si]
base = "si-dielectric"
omega_p = "2e15 rad/s"
gamma = "2.4e14 rad/s"
"#,
    )
    .unwrap();
    let custom = casimir(&["sweep", "--config", cfg.to_str().unwrap()]);
    let stock = casimir(&["sweep", "--points", "2"]);
    assert_eq!(custom.status.code(), Some(0));
    assert_eq!(rows(&stdout(&custom)), rows(&stdout(&stock)));
}

#[test]
fn shift_reports_consistent_pressures() {
    let o = casimir(&["shift", "--z", "150 nm"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    let keys: Vec<&str> = lines.next().unwrap().split(',').collect();
    let vals: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    let get = |k: &str| vals[keys.iter().position(|&x| x == k).unwrap()];
    assert!((get("frequency_shift_hz") + 0.891).abs() < 1e-3);
    assert!(get("relative_deviation") < 1e-3);
}

#[test]
fn te_zero_option_leaves_differences_unchanged() {
    let a = casimir(&["sweep", "--points", "3"]);
    let b = casimir(&["sweep", "--points", "3", "--te-zero", "plasma"]);
    assert_eq!(rows(&stdout(&a)), rows(&stdout(&b)));
}

#[test]
fn materials_lists_catalog() {
    let o = casimir(&["materials"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "vo2-insulator"));
}
