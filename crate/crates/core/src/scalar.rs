//! Scalar abstraction for the geometry kernels.
//!
//! Distance computation and isometry matching are written once, generically;
//! the exact instantiation ([`crate::Rat`]) compares distance keys with true
//! equality, the float instantiation with an absolute tolerance.

use std::fmt::{Debug, Display};

use num_traits::{Num, Signed, ToPrimitive};

use crate::FLOAT_TOL;

/// Numeric type usable as a coordinate scalar.
pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + Display {
    /// Equality of distance keys. Exact types compare exactly; float types
    /// use an absolute tolerance.
    fn key_eq(a: &Self, b: &Self) -> bool;

    /// Float view, used for display and for Euclidean square roots.
    fn to_f64_lossy(&self) -> f64;

    fn from_i64(v: i64) -> Self;
}

impl Scalar for crate::Rat {
    fn key_eq(a: &Self, b: &Self) -> bool {
        a == b
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(v: i64) -> Self {
        crate::Rat::from_integer(v.into())
    }
}

impl Scalar for f64 {
    fn key_eq(a: &Self, b: &Self) -> bool {
        (a - b).abs() <= FLOAT_TOL
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn rational_keys_are_exact() {
        let a = Rat::new(1.into(), 3.into());
        let b = Rat::new(333333.into(), 1000000.into());
        assert!(!<Rat as Scalar>::key_eq(&a, &b));
        assert!(<Rat as Scalar>::key_eq(&a, &a.clone()));
    }

    #[test]
    fn float_keys_tolerate_roundoff() {
        assert!(<f64 as Scalar>::key_eq(&1.0, &(1.0 + 1e-12)));
        assert!(!<f64 as Scalar>::key_eq(&1.0, &1.001));
    }
}
