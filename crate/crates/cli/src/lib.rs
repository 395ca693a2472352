//! Library surface of the verification harness; the `o3sym` binary is a
//! thin argument-parsing shell over these modules.

pub mod exec;
pub mod report;
pub mod suites;
