//! Browser bindings: draw a layout, simulate one noise strength, plot a sweep.
//!
//! Every function takes a layout descriptor (`falcon-27`, `hummingbird-65` or
//! `hex-RxC`) and reports failures as a thrown JS `Error`.

use hexmatch::analysis::{experiment_stats, ExperimentStats};
use hexmatch::circuit::build_experiment;
use hexmatch::lattice::CodeSpec;
use hexmatch::noise::{apply_noise_model, NoiseModel};
use hexmatch::render;
use hexmatch::simulator::run_shots;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Upper bound on shots per point, so one click cannot freeze the tab.
pub const MAX_SHOTS: usize = 200_000;

fn err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn point(
    code: &CodeSpec,
    rounds: usize,
    p: f64,
    shots: usize,
    seed: u64,
) -> Result<ExperimentStats, JsError> {
    if shots == 0 || shots > MAX_SHOTS {
        return Err(err(format!(
            "shots must lie in 1..={MAX_SHOTS}, got {shots}"
        )));
    }
    let ideal = build_experiment(code, rounds).map_err(err)?;
    let noisy = apply_noise_model(&ideal, NoiseModel::new(p).map_err(err)?).map_err(err)?;
    let table = run_shots(&noisy, shots, seed).map_err(err)?;
    experiment_stats(&table, &noisy, code).map_err(err)
}

/// SVG diagram of the layout with link types and shift labels.
#[wasm_bindgen(js_name = layoutSvg)]
pub fn layout_svg(layout: &str) -> Result<String, JsError> {
    let code = CodeSpec::from_descriptor(layout).map_err(err)?;
    Ok(render::layout_svg(&code))
}

/// Short JSON summary: qubit, plaquette and link counts plus diagnostics.
#[wasm_bindgen(js_name = codeSummary)]
pub fn code_summary(layout: &str) -> Result<String, JsError> {
    let code = CodeSpec::from_descriptor(layout).map_err(err)?;
    let shifts = code
        .plaquettes
        .iter()
        .map(|p| p.shift + 1)
        .max()
        .unwrap_or(0);
    Ok(json!({
        "layout": code.layout.name,
        "qubits": code.num_qubits(),
        "plaquettes": code.plaquettes.len(),
        "links": code.links.len(),
        "shifts": shifts,
        "diagnostics": code.diagnostics,
    })
    .to_string())
}

/// Both figures of merit at one noise strength, as JSON.
#[wasm_bindgen(js_name = simulatePoint)]
pub fn simulate_point(
    layout: &str,
    rounds: usize,
    p: f64,
    shots: usize,
    seed: u64,
) -> Result<String, JsError> {
    let code = CodeSpec::from_descriptor(layout).map_err(err)?;
    let s = point(&code, rounds, p, shots, seed)?;
    Ok(json!({
        "p": p,
        "mean_pW": s.mean_pw,
        "stderr_pW": s.stderr_pw,
        "mean_pZ": s.mean_pz,
        "stderr_pZ": s.stderr_pz,
        "per_plaquette_pW": s.per_plaquette_pw,
        "per_plaquette_pZ": s.per_plaquette_pz,
        "num_shots": s.num_shots,
    })
    .to_string())
}

/// Sweep over noise strengths, sorted ascending, drawn as an SVG scatter.
#[wasm_bindgen(js_name = sweepSvg)]
pub fn sweep_svg(
    layout: &str,
    rounds: usize,
    noise: Vec<f64>,
    shots: usize,
    seed: u64,
) -> Result<String, JsError> {
    let code = CodeSpec::from_descriptor(layout).map_err(err)?;
    let mut noise = noise;
    noise.sort_by(f64::total_cmp);
    noise.dedup();
    let points = noise
        .into_iter()
        .map(|p| point(&code, rounds, p, shots, seed).map(|s| (p, s)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(render::sweep_svg(&points))
}
