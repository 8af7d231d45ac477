//! Command-line front end: query commands, the verify suite and its emitters.

pub mod commands;
pub mod outcome;
pub mod verify;
