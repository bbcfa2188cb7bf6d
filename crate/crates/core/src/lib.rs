pub mod arith;
pub mod catalog;
pub mod cli;
pub mod config;
pub mod identities;
pub mod parallel;
pub mod sequences;
pub mod telescope;
pub mod verifier;
