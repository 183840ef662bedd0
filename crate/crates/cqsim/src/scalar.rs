//! Scalar abstraction for the whole crate.
//!
//! All physics code is generic over a floating-point type implementing
//! [`Real`]; `f32` and `f64` are provided. Concrete type aliases live at the
//! crate root.

use std::fmt;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar used throughout the crate: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + fmt::Debug
    + fmt::Display
    + fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// Conversion from an `f64` literal or tabulated constant. Lossy for `f32`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to any Real")
    }

    /// Widening conversion used when delegating to f64-only special functions.
    fn as_f64(self) -> f64 {
        num_traits::NumCast::from(self).expect("Real converts to f64")
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }

    /// 2π.
    fn tau() -> Self {
        Self::PI() + Self::PI()
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over a generic scalar.
pub type C<T> = Complex<T>;

/// `i` as a complex constant.
pub fn im<T: Real>() -> C<T> {
    C::new(T::zero(), T::one())
}

/// Real number lifted to a complex one.
pub fn re<T: Real>(x: T) -> C<T> {
    C::new(x, T::zero())
}

/// e^{iθ} for a real phase θ.
pub fn cis<T: Real>(theta: T) -> C<T> {
    C::new(theta.cos(), theta.sin())
}

/// Physical constants in SI units, exposed as the generic scalar.
pub mod constants {
    use super::Real;

    /// Planck constant h (J·s), 2019 SI exact value.
    pub fn planck<T: Real>() -> T {
        T::of(6.626_070_15e-34)
    }

    /// Reduced Planck constant ħ (J·s).
    pub fn hbar<T: Real>() -> T {
        T::of(6.626_070_15e-34 / (2.0 * std::f64::consts::PI))
    }

    /// Boltzmann constant k_B (J/K), 2019 SI exact value.
    pub fn boltzmann<T: Real>() -> T {
        T::of(1.380_649e-23)
    }

    /// ħ/k_B in K·s; handy for ħω/k_B T factors.
    pub fn hbar_over_kb<T: Real>() -> T {
        T::of(6.626_070_15e-34 / (2.0 * std::f64::consts::PI) / 1.380_649e-23)
    }
}

/// Complementary error function, evaluated in f64 precision.
pub fn erfc<T: Real>(x: T) -> T {
    T::of(libm::erfc(x.as_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erfc_reference_points() {
        assert!((erfc(0.0f64) - 1.0).abs() < 1e-15);
        // A&S table: erfc(1) = 0.157299207...
        assert!((erfc(1.0f64) - 0.157_299_207_050_285).abs() < 1e-12);
        assert!(erfc(10.0f64) < 1e-40);
    }

    #[test]
    fn hbar_over_kb_at_5ghz_is_0p24_kelvin() {
        let t: f64 = constants::hbar_over_kb::<f64>() * 2.0 * std::f64::consts::PI * 5e9;
        assert!((t - 0.2399).abs() < 1e-3, "got {t}");
    }
}
