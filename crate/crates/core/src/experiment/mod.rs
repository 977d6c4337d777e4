//! Figure archetypes, fringe readout, sensitivity sweeps and the seeded
//! verification suite.

pub mod figures;
pub mod fringe;
pub mod sweep;
pub mod verify;

pub use figures::{build_config, Figure, DEFAULT_ARM_LENGTH};
pub use fringe::{fringe_reading, fringe_scan, FringeReading};
pub use sweep::{sensitivity_sweep, LinearFit, SweepResult, SweepRow};
pub use verify::{verify_suite, PropertyOutcome, VerifyReport, DEFAULT_SEED};
