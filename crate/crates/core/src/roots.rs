//! Bracketed bisection for scalar equations.

/// Outcome of a bisection run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bisection {
    pub root: f64,
    /// `f(root)`.
    pub value: f64,
    pub iterations: u32,
}

/// Finds a root of `f` in `[lo, hi]` by bisection.
///
/// `f(lo)` and `f(hi)` must have opposite signs (or one of them vanish);
/// otherwise `None`. Stops once the bracket is narrower than `xtol` or stops
/// shrinking in floating point.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, xtol: f64) -> Option<Bisection>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(Bisection {
            root: lo,
            value: 0.0,
            iterations: 0,
        });
    }
    if f_hi == 0.0 {
        return Some(Bisection {
            root: hi,
            value: 0.0,
            iterations: 0,
        });
    }
    if !(f_lo.signum() != f_hi.signum()) || f_lo.is_nan() || f_hi.is_nan() {
        return None;
    }
    let mut iterations = 0;
    while iterations < 2000 {
        let mid = lo + 0.5 * (hi - lo);
        if hi - lo <= xtol || mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        iterations += 1;
        if f_mid == 0.0 {
            return Some(Bisection {
                root: mid,
                value: 0.0,
                iterations,
            });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let root = lo + 0.5 * (hi - lo);
    Some(Bisection {
        root,
        value: f(root),
        iterations,
    })
}
