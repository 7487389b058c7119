//! File formats, seeded fixtures, and command drivers for the `tsys`
//! binary. Everything here is deterministic: a fixed command line and seed
//! produce byte-identical output.

pub mod accept;
pub mod drive;
pub mod io;
pub mod sample;
