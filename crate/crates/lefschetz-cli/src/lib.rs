//! Support library for the `lefschetz` command-line tool: text/JSON formats
//! and the built-in reproduction suite. Split out of the binary so the
//! integration tests can drive the same code paths directly.

pub mod fmt;
pub mod verify;
