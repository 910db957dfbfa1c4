//! File formats, the census property battery and command implementations
//! for `tckit-core`.

pub mod battery;
pub mod commands;
pub mod io;
