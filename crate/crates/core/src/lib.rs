//! Geodesics, shortest arcs, cut times and the cut locus of the left-invariant
//! sub-Riemannian metric on the Lorentz group `SO₀(2,1)` that is
//! right-invariant under the stabiliser `SO(2)`.
//!
//! The horizontal distribution is spanned at the identity by the boosts `a`,
//! `b`; the rotation generator `c` is vertical. Projecting a group element to
//! its first column maps the group onto the hyperbolic plane, realised as the
//! upper sheet of `-t² + x² + y² = -1`.
//!
//! - [`lie`]: Minkowski form, algebras, closed-form exponentials, the double
//!   cover by `SL(2)`.
//! - [`geodesic`]: geodesics from the identity in product and explicit matrix
//!   form, controls, projections and the parallel frame.
//! - [`hyperbolic`]: distance, semigeodesic chart, circles, digons and discrete
//!   geodesic curvature on the hyperboloid.
//! - [`cut_locus`]: cut times `t1(β)`, cut points and conjugate points.
//! - [`boundary`]: the inverse problem, recovering a shortest geodesic and the
//!   distance from a target element.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
// `!(x <= tol)` is used on purpose so that NaN fails every check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod boundary;
pub mod cut_locus;
mod error;
pub mod geodesic;
pub mod hyperbolic;
pub mod lie;
pub mod math;
pub mod roots;

pub use error::{Error, Result};
pub use lie::{MinkVector, SO21Element, So21Vector};
