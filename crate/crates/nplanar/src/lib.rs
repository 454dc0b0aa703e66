//! Commutative planar n-complex numbers in even dimension n.
//!
//! A number is an n-tuple (x_0, .., x_{n-1}) written over the basis
//! 1, h_1, .., h_{n-1} with the product rule h_j h_k = ±h_{(j+k) mod n},
//! the sign flipping whenever j + k wraps past n.  Equivalently this is the
//! quotient ring R[t]/(t^n + 1), so multiplication is negacyclic convolution
//! of the coefficient tuples.
//!
//! For even n an orthogonal change of variables splits the algebra into n/2
//! independent complex planes, and everything downstream rides on that split:
//!
//! * [`algebra`] — tuple arithmetic, determinant, amplitude, inverse
//! * [`canonical`] — the plane decomposition, idempotent bases, polar,
//!   exponential and trigonometric forms
//! * [`cosexp`] — the cosexponential function family f_nk / g_nk that plays
//!   the role cos/sin play for ordinary complex numbers
//! * [`functions`] — exp, ln, powers and trigonometric/hyperbolic functions
//! * [`analysis`] — power series, convergence cylinders, Taylor shifts and
//!   the Riemann-type derivative relations
//! * [`integration`] — path integrals, winding numbers, poles and residues
//! * [`polynomial`] — root finding and the multiple factorizations a monic
//!   polynomial admits over the algebra
//! * [`matrixrep`] — the faithful n x n matrix representation and its block
//!   diagonalization

pub mod algebra;
pub mod analysis;
pub mod canonical;
pub mod cosexp;
pub mod error;
pub mod functions;
pub mod integration;
pub mod matrixrep;
pub mod polynomial;

pub use algebra::{basis_product, PlanarNC, DEFAULT_NODAL_TOL};
pub use error::{Error, Result};
