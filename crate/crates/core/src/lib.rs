pub mod alia;
pub mod cli;
pub mod error;
pub mod liealg;
pub mod loopext;
pub mod modforms;
pub mod qseries;
pub mod quasimodular;
pub mod ring;
pub mod suite;
pub mod vvmf;

pub use error::{Error, Result};
