//! Floating-point scalar abstraction shared by the index, formula and bound code.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Real type the index sums are accumulated in.
///
/// Implemented for `f32` and `f64`. Every quantity in this crate is a finite
/// sum of square roots of small rationals, so only floating types qualify.
pub trait Scalar: Float + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static {
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable in scalar type")
    }

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `sqrt((a + b - 2) / (a * b))`, the per-edge radical shared by ABC and ABC_GG.
///
/// The `a = b = 1` case is exactly zero (numerator vanishes before the division).
/// Panics if either argument is zero.
pub fn radical<T: Scalar>(a: usize, b: usize) -> T {
    assert!(a > 0 && b > 0, "radical of a zero count ({a}, {b})");
    let num = a + b - 2;
    if num == 0 {
        return T::zero();
    }
    (T::from_count(num) / (T::from_count(a) * T::from_count(b))).sqrt()
}

/// `max{ sqrt(2a - 2) / b, sqrt(2b - 2) / a }`, the per-edge slack term of the
/// deletion and peeling bounds.
pub fn max_term<T: Scalar>(a: usize, b: usize) -> T {
    assert!(a > 0 && b > 0, "max-term of a zero count ({a}, {b})");
    let left = T::from_count(2 * a - 2).sqrt() / T::from_count(b);
    let right = T::from_count(2 * b - 2).sqrt() / T::from_count(a);
    left.max(right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radical_small_values() {
        assert_eq!(radical::<f64>(1, 1), 0.0);
        assert!((radical::<f64>(1, 2) - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((radical::<f64>(2, 2) - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((radical::<f64>(4, 4) - 6f64.sqrt() / 4.0).abs() < 1e-15);
        assert!((radical::<f32>(3, 3) - 2.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn radical_is_symmetric() {
        for a in 1..20 {
            for b in 1..20 {
                assert_eq!(radical::<f64>(a, b), radical::<f64>(b, a));
            }
        }
    }

    #[test]
    fn max_term_dominates_radical() {
        for a in 1..60 {
            for b in 1..60 {
                assert!(max_term::<f64>(a, b) + 1e-15 >= radical::<f64>(a, b), "{a} {b}");
            }
        }
    }

    #[test]
    #[should_panic]
    fn radical_rejects_zero() {
        let _ = radical::<f64>(0, 3);
    }
}
