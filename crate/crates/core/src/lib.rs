pub mod bench;
pub mod cli;
pub mod error;
pub mod ext_real;
pub mod pof;
pub mod problems;
pub mod solver;
pub mod tables;
