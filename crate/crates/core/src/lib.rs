//! Hexagonal matching codes on heavy-hexagon devices.
//!
//! The crate covers the whole pipeline for benchmarking these codes:
//!
//! - [`lattice`]: device layouts, typed link operators, plaquettes and the
//!   shift schedule.
//! - [`circuit`]: compilation of repeated stabilizer measurement into
//!   circuits made only of 2-body parity measurements, plus OpenQASM export.
//! - [`noise`]: the uniform error model (bit flips around resets and
//!   measurements, two-qubit depolarizing after each CX).
//! - [`simulator`]: bit-packed stabilizer tableau sampler and a dense
//!   state-vector oracle.
//! - [`analysis`]: plaquette and `z`-link change rates `⟨p_W⟩`, `⟨p_Z⟩`,
//!   and device calibration statistics.
//!
//! ```
//! use hexmatch::{analysis, circuit, lattice::CodeSpec, noise, simulator};
//!
//! let code = CodeSpec::from_descriptor("falcon-27").unwrap();
//! let program = circuit::build_experiment(&code, 3).unwrap();
//! let noisy = noise::apply_noise_model(&program, noise::NoiseModel::new(0.01).unwrap()).unwrap();
//! let shots = simulator::run_shots(&noisy, 200, 7).unwrap();
//! let stats = analysis::experiment_stats(&shots, &noisy, &code).unwrap();
//! assert!(stats.mean_pw > stats.mean_pz);
//! ```

pub mod analysis;
pub mod circuit;
pub mod lattice;
pub mod noise;
pub mod pauli;
pub mod render;
pub mod simulator;
