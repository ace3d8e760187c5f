use core::ops::{Add, Neg, Sub};

use super::{Mat2, Mat3};

/// Element `ca·a + cb·b + cc·c` of `so(2,1)`, with
/// `a = e₁₂ + e₂₁`, `b = e₁₃ + e₃₁`, `c = e₃₂ - e₂₃`.
///
/// `a` and `b` span the horizontal plane `D(e)`; `c` generates the `SO(2)`
/// stabiliser of `w₀`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct So21Vector {
    pub ca: f64,
    pub cb: f64,
    pub cc: f64,
}

impl So21Vector {
    pub const ZERO: So21Vector = So21Vector::new(0.0, 0.0, 0.0);
    pub const A: So21Vector = So21Vector::new(1.0, 0.0, 0.0);
    pub const B: So21Vector = So21Vector::new(0.0, 1.0, 0.0);
    pub const C: So21Vector = So21Vector::new(0.0, 0.0, 1.0);

    pub const fn new(ca: f64, cb: f64, cc: f64) -> Self {
        So21Vector { ca, cb, cc }
    }

    pub fn scale(self, s: f64) -> Self {
        So21Vector::new(self.ca * s, self.cb * s, self.cc * s)
    }

    /// Matrix form. `I·x` is antisymmetric for every coordinate triple.
    pub fn to_matrix(self) -> Mat3 {
        Mat3([
            [0.0, self.ca, self.cb],
            [self.ca, 0.0, -self.cc],
            [self.cb, self.cc, 0.0],
        ])
    }

    /// Frobenius product `(x, y) = tr(xᵀy)` of the matrix forms.
    ///
    /// Half of it is the sub-Riemannian scalar product on `D(e)`, for which
    /// `a`, `b` are orthonormal.
    pub fn frobenius_dot(self, o: So21Vector) -> f64 {
        2.0 * (self.ca * o.ca + self.cb * o.cb + self.cc * o.cc)
    }

    /// `½ (u, v)`, the metric on the horizontal plane.
    pub fn horizontal_dot(self, o: So21Vector) -> f64 {
        0.5 * self.frobenius_dot(o)
    }
}

impl Add for So21Vector {
    type Output = So21Vector;
    fn add(self, o: So21Vector) -> So21Vector {
        So21Vector::new(self.ca + o.ca, self.cb + o.cb, self.cc + o.cc)
    }
}

impl Sub for So21Vector {
    type Output = So21Vector;
    fn sub(self, o: So21Vector) -> So21Vector {
        So21Vector::new(self.ca - o.ca, self.cb - o.cb, self.cc - o.cc)
    }
}

impl Neg for So21Vector {
    type Output = So21Vector;
    fn neg(self) -> So21Vector {
        self.scale(-1.0)
    }
}

/// Element `pa·a′ + pb·b′ + pc·c′` of `sl(2)`, with
/// `a′ = ½(e₁₂ + e₂₁)`, `b′ = ½(e₁₁ - e₂₂)`, `c′ = ½(e₁₂ - e₂₁)`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Sl2Vector {
    pub pa: f64,
    pub pb: f64,
    pub pc: f64,
}

impl Sl2Vector {
    pub const ZERO: Sl2Vector = Sl2Vector::new(0.0, 0.0, 0.0);
    pub const A: Sl2Vector = Sl2Vector::new(1.0, 0.0, 0.0);
    pub const B: Sl2Vector = Sl2Vector::new(0.0, 1.0, 0.0);
    pub const C: Sl2Vector = Sl2Vector::new(0.0, 0.0, 1.0);

    pub const fn new(pa: f64, pb: f64, pc: f64) -> Self {
        Sl2Vector { pa, pb, pc }
    }

    pub fn scale(self, s: f64) -> Self {
        Sl2Vector::new(self.pa * s, self.pb * s, self.pc * s)
    }

    /// Trace-free 2×2 matrix form.
    pub fn to_matrix(self) -> Mat2 {
        Mat2([
            [0.5 * self.pb, 0.5 * (self.pa + self.pc)],
            [0.5 * (self.pa - self.pc), -0.5 * self.pb],
        ])
    }

    /// Coordinates of a trace-free 2×2 matrix.
    pub fn from_matrix(m: &Mat2) -> Self {
        let w = &m.0;
        Sl2Vector::new(w[0][1] + w[1][0], w[0][0] - w[1][1], w[0][1] - w[1][0])
    }
}

/// Shared structure constants: `[a,b] = -c`, `[b,c] = a`, `[c,a] = b`.
fn structure(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        -(u[0] * v[1] - u[1] * v[0]),
    ]
}

/// Lie bracket `[u, v] = uv - vu` in the basis `a, b, c`.
pub fn bracket(u: So21Vector, v: So21Vector) -> So21Vector {
    let [ca, cb, cc] = structure([u.ca, u.cb, u.cc], [v.ca, v.cb, v.cc]);
    So21Vector::new(ca, cb, cc)
}

/// Lie bracket in `sl(2)`; same structure constants in `a′, b′, c′`.
pub fn bracket_sl2(u: Sl2Vector, v: Sl2Vector) -> Sl2Vector {
    let [pa, pb, pc] = structure([u.pa, u.pb, u.pc], [v.pa, v.pb, v.pc]);
    Sl2Vector::new(pa, pb, pc)
}

/// The invariant `q = x₂₁² + x₃₁² - x₃₂²` and `α = √|q|`.
///
/// `x³ = q·x` for every `x` in `so(2,1)`.
pub fn char_invariant(x: So21Vector) -> (f64, f64) {
    let m = x.to_matrix();
    let q = m[(1, 0)] * m[(1, 0)] + m[(2, 0)] * m[(2, 0)] - m[(2, 1)] * m[(2, 1)];
    (q, crate::math::sqrt(crate::math::abs(q)))
}

/// The Lie algebra isomorphism `l: sl(2) → so(2,1)`, `a′ ↦ a`, `b′ ↦ b`, `c′ ↦ c`.
pub fn algebra_iso(w: Sl2Vector) -> So21Vector {
    So21Vector::new(w.pa, w.pb, w.pc)
}
