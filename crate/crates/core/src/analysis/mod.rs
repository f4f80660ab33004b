//! Reductions from shot tables to `⟨p_W⟩` and `⟨p_Z⟩`, and device
//! calibration statistics.
//!
//! Both rates are change frequencies: `p_W` counts plaquette values that
//! differ from the previous round, `p_Z` counts incident `z` products that
//! differ across the plaquette's own measurement window.

mod calibration;
mod rates;

use std::io::{self, Write};

use serde::Serialize;

use crate::circuit::CircuitProgram;
use crate::lattice::CodeSpec;
use crate::simulator::ShotTable;

pub use calibration::{
    calibration_stats, idle_error_probability, CalibrationData, CalibrationStats, CxCalibration,
    QubitCalibration,
};
pub use rates::{compute_pw, compute_pz, plaquette_outcomes, PlaquetteBits, RateStats};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("no measurement of link {link} for plaquette {plaquette} in round {round}")]
    MissingPlaquetteBit {
        round: usize,
        plaquette: usize,
        link: usize,
    },
    #[error("no measurement of z link {link} in the block closing shift {shift} of round {round}")]
    MissingZBit {
        round: usize,
        shift: usize,
        link: usize,
    },
    #[error("plaquette change rates need at least 2 rounds, got {0}")]
    TooFewRounds(usize),
    #[error("shot table has {table} bits but the program records {program}")]
    BitCountMismatch { table: usize, program: usize },
    #[error("identity error must lie in [0, 0.5], got {0}")]
    InvalidIdleError(f64),
    #[error("{0} must be a positive duration, got {1}")]
    InvalidDuration(&'static str, f64),
    #[error("calibration {0}")]
    InvalidCalibration(String),
}

/// Summary of one simulated or measured experiment.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentStats {
    /// Indexed by plaquette id.
    pub per_plaquette_pw: Vec<f64>,
    pub per_plaquette_pz: Vec<f64>,
    pub mean_pw: f64,
    pub stderr_pw: f64,
    pub mean_pz: f64,
    pub stderr_pz: f64,
    pub num_shots: usize,
    pub rounds: usize,
}

/// Both rates for a program built by [`crate::circuit::build_experiment`].
pub fn experiment_stats(
    shots: &ShotTable,
    program: &CircuitProgram,
    code: &CodeSpec,
) -> Result<ExperimentStats, AnalysisError> {
    let bits = plaquette_outcomes(shots, program, code)?;
    let pw = compute_pw(&bits)?;
    let pz = compute_pz(shots, program, code)?;
    Ok(ExperimentStats {
        per_plaquette_pw: pw.per_plaquette,
        per_plaquette_pz: pz.per_plaquette,
        mean_pw: pw.mean,
        stderr_pw: pw.stderr,
        mean_pz: pz.mean,
        stderr_pz: pz.stderr,
        num_shots: shots.num_shots(),
        rounds: program.rounds,
    })
}

pub const STATS_CSV_HEADER: &str = "device_or_p,mean_pW,stderr_pW,mean_pZ,stderr_pZ,num_shots,T";

/// Header plus one row per `(label, stats)` pair, in the given order.
pub fn write_stats_csv<W: Write>(mut w: W, rows: &[(String, ExperimentStats)]) -> io::Result<()> {
    writeln!(w, "{STATS_CSV_HEADER}")?;
    for (label, s) in rows {
        writeln!(
            w,
            "{label},{:.6},{:.6},{:.6},{:.6},{},{}",
            s.mean_pw, s.stderr_pw, s.mean_pz, s.stderr_pz, s.num_shots, s.rounds
        )?;
    }
    Ok(())
}
