use serde::{Deserialize, Serialize};

use super::AnalysisError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QubitCalibration {
    pub index: usize,
    /// Probability of reading 1 right after preparing 0.
    pub prep_error: f64,
    pub meas_error: f64,
    /// Error of one identity gate of duration `t_id_ns`.
    pub id_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CxCalibration {
    pub pair: [usize; 2],
    pub error: f64,
}

/// Per-device benchmark snapshot.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CalibrationData {
    pub device: String,
    /// Carried through unchanged.
    #[serde(default)]
    pub quantum_volume: Option<u64>,
    pub t_id_ns: f64,
    pub t_meas_ns: f64,
    pub t_reset_ns: f64,
    pub qubits: Vec<QubitCalibration>,
    pub cx: Vec<CxCalibration>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CalibrationStats {
    pub device: String,
    pub quantum_volume: Option<u64>,
    pub mean: f64,
    /// Population standard deviation.
    pub stddev: f64,
    pub count: usize,
}

fn probability(name: &str, v: f64) -> Result<f64, AnalysisError> {
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(AnalysisError::InvalidCalibration(format!(
            "{name} must lie in [0, 1], got {v}"
        )))
    }
}

/// Odd-parity probability of identity errors over `t_meas + t_reset`:
/// `1 - (1 - 2 p_id)^((t_meas + t_reset) / t_id)`.
pub fn idle_error_probability(
    p_id: f64,
    t_meas: f64,
    t_reset: f64,
    t_id: f64,
) -> Result<f64, AnalysisError> {
    if !(0.0..=0.5).contains(&p_id) {
        return Err(AnalysisError::InvalidIdleError(p_id));
    }
    if !(t_id > 0.0 && t_id.is_finite()) {
        return Err(AnalysisError::InvalidDuration("t_id", t_id));
    }
    for (name, t) in [("t_meas", t_meas), ("t_reset", t_reset)] {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(AnalysisError::InvalidDuration(name, t));
        }
    }
    let k = (t_meas + t_reset) / t_id;
    if k == 0.0 {
        return Ok(0.0);
    }
    // expm1/ln_1p keep full precision for small p_id
    Ok(-(k * (-2.0 * p_id).ln_1p()).exp_m1())
}

impl CalibrationData {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Prep, measurement, CX and idle probabilities as one flat list.
    pub fn combined_probabilities(&self) -> Result<Vec<f64>, AnalysisError> {
        if self.qubits.is_empty() {
            return Err(AnalysisError::InvalidCalibration(
                "has an empty qubit list".into(),
            ));
        }
        if self.cx.is_empty() {
            return Err(AnalysisError::InvalidCalibration(
                "has an empty cx list".into(),
            ));
        }
        let mut out = Vec::with_capacity(3 * self.qubits.len() + self.cx.len());
        for q in &self.qubits {
            out.push(probability("prep_error", q.prep_error)?);
        }
        for q in &self.qubits {
            out.push(probability("meas_error", q.meas_error)?);
        }
        for c in &self.cx {
            out.push(probability("cx error", c.error)?);
        }
        for q in &self.qubits {
            out.push(idle_error_probability(
                q.id_error,
                self.t_meas_ns,
                self.t_reset_ns,
                self.t_id_ns,
            )?);
        }
        Ok(out)
    }
}

pub fn calibration_stats(calib: &CalibrationData) -> Result<CalibrationStats, AnalysisError> {
    let all = calib.combined_probabilities()?;
    let n = all.len() as f64;
    let mean = all.iter().sum::<f64>() / n;
    let var = all.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    Ok(CalibrationStats {
        device: calib.device.clone(),
        quantum_volume: calib.quantum_volume,
        mean,
        stddev: var.sqrt(),
        count: all.len(),
    })
}
