//! Finite element assembly and solution of a nonlocal Poisson problem with
//! Neumann-type volume data on polygonal domains, using a discontinuous
//! piecewise-linear basis and closed-form kernel integrals over triangles.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod assembly;
pub mod error;
pub mod exact_integrate;
pub mod geometry;
pub mod kernel;
mod kinks;
pub mod mesh;
pub mod oracle;
pub mod quadrature;
pub mod solver;
pub mod sparse;
pub mod study;
pub mod verify;

pub use assembly::{assemble_diffusion, assemble_rhs, assemble_system, assemble_zero_order, interpolate, Assembler, QuadConfig, System};
pub use error::{Error, Result};
pub use geometry::{Point, Triangle};
pub use kernel::{KernelFamily, KernelPreset, Polynomial, Tier};
pub use mesh::{load_mesh, save_mesh, Mesh};
pub use solver::{conjugate_gradient, CgOptions, CgResult};
pub use sparse::{CsrMatrix, DofVector};

