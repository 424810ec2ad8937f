//! Scalar abstraction for the linear-algebra kernel and the concurrence engine.
//!
//! Everything numeric in [`crate::matkernel`] and [`crate::croof`] is generic over
//! [`Real`]; the model layer and the command-line tools fix `f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign};

/// Real floating-point scalar usable by the kernel.
pub trait Real:
    Float + FloatConst + NumAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Tolerance used for structural checks (Hermiticity, symmetry, unitarity,
    /// reconstruction) when the caller does not supply one.
    fn structural_tol() -> Self;

    /// Machine-level convergence threshold for the iterative factorizations.
    fn sweep_eps() -> Self;

    /// Converts an `f64` literal into this scalar type.
    fn lit(x: f64) -> Self;

    /// Lossy conversion to `f64`, used for diagnostics and error payloads.
    fn as_f64(self) -> f64;
}

impl Real for f64 {
    #[inline]
    fn structural_tol() -> Self {
        1e-10
    }
    #[inline]
    fn sweep_eps() -> Self {
        f64::EPSILON
    }
    #[inline]
    fn lit(x: f64) -> Self {
        x
    }
    #[inline]
    fn as_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    #[inline]
    fn structural_tol() -> Self {
        1e-4
    }
    #[inline]
    fn sweep_eps() -> Self {
        f32::EPSILON
    }
    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }
    #[inline]
    fn as_f64(self) -> f64 {
        self as f64
    }
}

/// Shorthand constructors for complex scalars.
#[inline]
pub fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

#[inline]
pub fn cr<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// Unit-modulus phase `z/|z|`, or `1` when `z` vanishes.
#[inline]
pub fn unit_phase<T: Real>(z: Complex<T>) -> Complex<T> {
    let r = z.norm();
    if r == T::zero() {
        Complex::new(T::one(), T::zero())
    } else if z.im == T::zero() {
        Complex::new(z.re.signum(), T::zero())
    } else {
        z / r
    }
}
