//! Library surface of the sweep CLI, so integration tests can drive the
//! sweep, rendering and audit paths directly. The binary in `main.rs` is a
//! thin dispatcher over these modules.

pub mod check;
pub mod config;
pub mod output;
pub mod plot;
pub mod sweep;
