pub mod benchmark;
pub mod dft;
pub mod error;
pub mod estimate;
pub mod grid;
pub mod likelihoods;
pub mod local_whittle;
pub mod models;
pub mod optim;
pub mod prefit;
pub mod series;
pub mod simulate;
pub mod taper;
pub mod toeplitz;
pub mod verify;

pub use error::{Error, Result};
