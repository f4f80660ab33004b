use hexmatch::analysis::{calibration_stats, idle_error_probability, CalibrationData};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!(
        "{}/tests/fixtures/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap()
}

fn rel_err(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn idle_error_examples() {
    assert_eq!(idle_error_probability(0.0, 3.0, 4.0, 2.0).unwrap(), 0.0);
    for p in [1e-6, 0.001, 0.01, 0.2, 0.5] {
        let got = idle_error_probability(p, 40.0, 60.0, 100.0).unwrap();
        assert!(rel_err(got, 2.0 * p) < 1e-12, "p={p}: {got}");
    }
    // 1 - 0.998^10 = (1000^10 - 998^10) / 1000^10, exactly in integers
    let num = 1000u128.pow(10) - 998u128.pow(10);
    let exact = num as f64 / 1e30;
    let got = idle_error_probability(0.001, 700.0, 300.0, 100.0).unwrap();
    assert!(rel_err(got, exact) < 1e-12, "{got} vs {exact}");
}

/// Plain two-pass mean and population deviation over the list a
/// spreadsheet would build from the file.
fn spreadsheet(c: &CalibrationData) -> (f64, f64) {
    let k = (c.t_meas_ns + c.t_reset_ns) / c.t_id_ns;
    let mut all: Vec<f64> = Vec::new();
    all.extend(c.qubits.iter().map(|q| q.prep_error));
    all.extend(c.qubits.iter().map(|q| q.meas_error));
    all.extend(c.cx.iter().map(|x| x.error));
    all.extend(
        c.qubits
            .iter()
            .map(|q| 1.0 - (1.0 - 2.0 * q.id_error).powf(k)),
    );
    let n = all.len() as f64;
    let mean = all.iter().sum::<f64>() / n;
    let var = all.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

#[test]
fn calibration_matches_spreadsheet() {
    let c = CalibrationData::from_json(&fixture("calib_mixed.json")).unwrap();
    let s = calibration_stats(&c).unwrap();
    let (mean, sd) = spreadsheet(&c);
    assert!(rel_err(s.mean, mean) < 1e-12 && rel_err(s.stddev, sd) < 1e-12);
    assert_eq!(s.quantum_volume, Some(64));
    assert_eq!(s.count, 4 * 3 + 3);
}

#[test]
fn uniform_calibration() {
    let s = calibration_stats(&CalibrationData::from_json(&fixture("calib_uniform.json")).unwrap())
        .unwrap();
    assert!((s.mean - 0.01).abs() < 1e-15);
    assert!(s.stddev < 1e-15);
}

#[test]
fn two_value_list() {
    let mut c = CalibrationData::from_json(&fixture("calib_uniform.json")).unwrap();
    c.qubits.truncate(1);
    c.qubits[0].prep_error = 0.0;
    c.qubits[0].meas_error = 0.02;
    c.qubits[0].id_error = 0.0;
    c.cx = vec![hexmatch::analysis::CxCalibration {
        pair: [0, 1],
        error: 0.02,
    }];
    // list {0, 0.02, 0.02, 0}
    let s = calibration_stats(&c).unwrap();
    assert!((s.mean - 0.01).abs() < 1e-15 && (s.stddev - 0.01).abs() < 1e-15);
}

#[test]
fn empty_qubit_list_is_rejected() {
    let c = CalibrationData::from_json(&fixture("calib_empty.json")).unwrap();
    assert!(calibration_stats(&c).is_err());
}

#[test]
fn reference_table_parses() {
    let rows: Vec<serde_json::Value> =
        serde_json::from_str(&fixture("device_reference.json")).unwrap();
    assert_eq!(rows.len(), 6);
    for r in rows {
        let (m, s) = (r["mean"].as_f64().unwrap(), r["stddev"].as_f64().unwrap());
        assert!(s / m > 0.5 && s / m < 2.0, "{r}");
    }
}
