//! The `vfilt` command-line front end: scale limits, a seeded corpus of
//! random ideals, and the harness that checks closed forms against
//! computed values.

pub mod cli;
pub mod corpus;
pub mod limits;
pub mod verify;
