//! Colored quasisymmetric, noncommutative symmetric and symmetric functions.

pub mod classical;
pub mod cli;
pub mod engine;
pub mod exec;
pub mod expr;
pub mod formal;
pub mod hopf;
pub mod linear;
pub mod poly;
pub mod sentence;
pub mod tableaux;
pub mod triangular;
pub mod verify;
