//! Overpartitions with separated overlined and non-overlined parts:
//! truncated q-series, enumeration, class membership, counting, explicit
//! bijections and an identity verifier.

pub mod bijections;
pub mod classes;
pub mod cli;
pub mod counting;
pub mod partitions;
pub mod qseries;
pub mod verifier;
