//! Linear-algebraic substrate: Minkowski space `Mink³`, the Lie algebras
//! `so(2,1)` and `sl(2)`, the group `SO₀(2,1)` and its closed-form
//! exponential, and the double cover `SL(2) → SO₀(2,1)`.
//!
//! The group acts on column vectors from the left throughout. Time is the
//! first coordinate: a vector is `(t, x, y)`.

mod algebra;
mod group;
mod matrix;

pub use algebra::{algebra_iso, bracket, bracket_sl2, char_invariant, Sl2Vector, So21Vector};
pub use group::{
    covering_on_exponentials, exp_sl2, exp_so21, is_in_so2, so2_rotation, GroupInvariant,
    InvariantReport, SO21Element, DEFAULT_TOL_GROUP,
};
pub use matrix::{Mat2, Mat3};

use core::ops::{Add, Mul, Sub};

/// A vector `(t, x, y)` of Minkowski space with time coordinate `t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinkVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl MinkVector {
    /// `w₀ = (1, 0, 0)`, the base point of the hyperboloid.
    pub const W0: MinkVector = MinkVector {
        t: 1.0,
        x: 0.0,
        y: 0.0,
    };
    /// `v₀ = (0, 1, 0)`, the unit tangent vector at `w₀` fixed by `SO(2)` lifts.
    pub const V0: MinkVector = MinkVector {
        t: 0.0,
        x: 1.0,
        y: 0.0,
    };

    pub const fn new(t: f64, x: f64, y: f64) -> Self {
        MinkVector { t, x, y }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.t, self.x, self.y]
    }

    /// Euclidean cross product of coordinate triples.
    pub fn cross(self, o: MinkVector) -> MinkVector {
        MinkVector::new(
            self.x * o.y - self.y * o.x,
            self.y * o.t - self.t * o.y,
            self.t * o.x - self.x * o.t,
        )
    }

    /// Euclidean dot product of coordinate triples.
    pub fn dot(self, o: MinkVector) -> f64 {
        self.t * o.t + self.x * o.x + self.y * o.y
    }

    pub fn scale(self, s: f64) -> Self {
        MinkVector::new(self.t * s, self.x * s, self.y * s)
    }

    /// Largest absolute coordinate.
    pub fn max_abs(self) -> f64 {
        crate::math::abs(self.t)
            .max(crate::math::abs(self.x))
            .max(crate::math::abs(self.y))
    }
}

impl Add for MinkVector {
    type Output = MinkVector;
    fn add(self, o: MinkVector) -> MinkVector {
        MinkVector::new(self.t + o.t, self.x + o.x, self.y + o.y)
    }
}

impl Sub for MinkVector {
    type Output = MinkVector;
    fn sub(self, o: MinkVector) -> MinkVector {
        MinkVector::new(self.t - o.t, self.x - o.x, self.y - o.y)
    }
}

impl Mul<MinkVector> for f64 {
    type Output = MinkVector;
    fn mul(self, v: MinkVector) -> MinkVector {
        v.scale(self)
    }
}

/// The pseudoscalar product `{u, v} = -u.t v.t + u.x v.x + u.y v.y`.
pub fn pseudo_product(u: MinkVector, v: MinkVector) -> f64 {
    -u.t * v.t + u.x * v.x + u.y * v.y
}

/// The time-reversal operator `I = diag(-1, 1, 1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TimeReversal;

impl TimeReversal {
    pub const MATRIX: Mat3 = Mat3([[-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn matrix(self) -> Mat3 {
        Self::MATRIX
    }

    pub fn apply(self, v: MinkVector) -> MinkVector {
        MinkVector::new(-v.t, v.x, v.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pseudo_product_examples() {
        assert_eq!(pseudo_product(MinkVector::W0, MinkVector::W0), -1.0);
        let iso = MinkVector::new(1.0, 1.0, 0.0);
        assert_eq!(pseudo_product(iso, iso), 0.0);
        assert_eq!(
            pseudo_product(MinkVector::V0, MinkVector::new(0.0, 0.0, 1.0)),
            0.0
        );
    }

    #[test]
    fn time_reversal_is_involution() {
        let i = TimeReversal.matrix();
        assert_eq!(i * i, Mat3::IDENTITY);
        let v = MinkVector::new(2.0, -1.0, 3.0);
        assert_eq!(TimeReversal.apply(v), i.mul_vec(v));
    }
}
