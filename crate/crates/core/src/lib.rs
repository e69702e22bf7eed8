//! Poisson geometry of `SU(1,1)`: the linear structure on the dual Lie
//! algebra, the dual Poisson-Lie group `AN` and its symmetric-space model
//! `Q`, the maps between them, an explicit Ginzburg-Weinstein flow, and
//! Thompson-type spectral inequalities.

pub mod algebra;
pub mod error;
pub mod gwflow;
pub mod maps;
pub mod sampling;
pub mod spaces;
pub mod special;
pub mod tensors;
pub mod thompson;
pub mod verify;

pub use error::{Error, Result};
