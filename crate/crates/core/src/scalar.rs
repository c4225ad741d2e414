//! Scalar backends and midpoint–radius balls.
//!
//! Rotation arithmetic is written once against [`Scalar`] and runs on `f32`,
//! `f64` or exact [`BigRational`]. A [`Ball`] carries a value together with
//! a bound on how far the true real can be from it; comparisons on balls
//! either return a certified answer or `None`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// A number type the rotation arithmetic can run on.
pub trait Scalar:
    Clone + fmt::Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive
{
    /// Significand bits of a native floating type; `None` for exact types.
    const NATIVE_BITS: Option<u32>;

    /// Largest integer not exceeding `self`.
    fn floor_value(&self) -> Self;

    /// An upper bound on the error of rounding a real of magnitude `|self|`
    /// into this type. At least two units in the last place for floats and
    /// zero for exact types.
    fn rounding_error(&self) -> Self;

    /// Nearest value to `r`, with a bound on the conversion error.
    fn from_rational(r: &BigRational) -> (Self, Self);

    /// The exact rational value of `self`.
    fn to_rational(&self) -> BigRational;

    fn half(&self) -> Self;
}

macro_rules! impl_float_scalar {
    ($t:ty, $bits:expr, $to:ident) => {
        impl Scalar for $t {
            const NATIVE_BITS: Option<u32> = Some($bits);

            fn floor_value(&self) -> Self {
                self.floor()
            }

            fn rounding_error(&self) -> Self {
                self.abs() * (2.0 * <$t>::EPSILON) + <$t>::MIN_POSITIVE
            }

            fn from_rational(r: &BigRational) -> (Self, Self) {
                let v = r.$to().unwrap_or(<$t>::NAN);
                let back = BigRational::from_float(v).unwrap_or_else(BigRational::zero);
                let diff = (r - back).abs().$to().unwrap_or(<$t>::INFINITY);
                (v, diff + diff.rounding_error())
            }

            fn to_rational(&self) -> BigRational {
                BigRational::from_float(*self).expect("finite float")
            }

            fn half(&self) -> Self {
                self * 0.5
            }
        }
    };
}

impl_float_scalar!(f32, 24, to_f32);
impl_float_scalar!(f64, 53, to_f64);

impl Scalar for BigRational {
    const NATIVE_BITS: Option<u32> = None;

    fn floor_value(&self) -> Self {
        self.floor()
    }

    fn rounding_error(&self) -> Self {
        BigRational::zero()
    }

    fn from_rational(r: &BigRational) -> (Self, Self) {
        (r.clone(), BigRational::zero())
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn half(&self) -> Self {
        self / BigInt::from(2)
    }
}

/// Rounds a nonnegative bound upward so the stored value is not below the
/// real one.
fn up<S: Scalar>(x: S) -> S {
    let slack = x.rounding_error();
    x + slack
}

/// The closed interval `[mid − rad, mid + rad]`, known to contain a real.
#[derive(Clone, PartialEq)]
pub struct Ball<S> {
    mid: S,
    rad: S,
}

impl<S: Scalar> Ball<S> {
    pub fn new(mid: S, rad: S) -> Ball<S> {
        debug_assert!(rad >= S::zero());
        Ball { mid, rad }
    }

    pub fn exact(mid: S) -> Ball<S> {
        Ball {
            mid,
            rad: S::zero(),
        }
    }

    pub fn from_integer(i: i64) -> Ball<S> {
        Ball::exact(S::from_i64(i).expect("integer fits the scalar"))
    }

    /// Encloses a rational, accounting for conversion error.
    pub fn from_rational(value: &BigRational, error: &BigRational) -> Ball<S> {
        let (mid, e1) = S::from_rational(value);
        let (rad, e2) = S::from_rational(error);
        Ball::new(mid, up(up(rad + e2) + e1))
    }

    pub fn mid(&self) -> &S {
        &self.mid
    }

    pub fn rad(&self) -> &S {
        &self.rad
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// A lower bound on the enclosed real.
    pub fn lo(&self) -> S {
        let lo = self.mid.clone() - self.rad.clone();
        let slack = (self.mid.abs() + self.rad.clone()).rounding_error();
        lo - slack
    }

    /// An upper bound on the enclosed real.
    pub fn hi(&self) -> S {
        let hi = self.mid.clone() + self.rad.clone();
        let slack = (self.mid.abs() + self.rad.clone()).rounding_error();
        hi + slack
    }

    pub fn add(&self, other: &Ball<S>) -> Ball<S> {
        let mid = self.mid.clone() + other.mid.clone();
        let err = mid.rounding_error();
        Ball::new(mid, up(up(self.rad.clone() + other.rad.clone()) + err))
    }

    pub fn sub(&self, other: &Ball<S>) -> Ball<S> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Ball<S> {
        Ball::new(-self.mid.clone(), self.rad.clone())
    }

    /// `j · self` for an integer `j`.
    pub fn mul_int(&self, j: i64) -> Ball<S> {
        if j == 0 {
            return Ball::exact(S::zero());
        }
        let factor = S::from_i64(j).expect("integer fits the scalar");
        let mid = self.mid.clone() * factor.clone();
        let err = mid.rounding_error();
        Ball::new(mid, up(up(self.rad.clone() * factor.abs()) + err))
    }

    /// Midpoint of two balls.
    pub fn midpoint(&self, other: &Ball<S>) -> Ball<S> {
        let sum = self.add(other);
        Ball::new(sum.mid.half(), up(sum.rad.half()))
    }

    /// `⌊x⌋` when every real in the ball has the same floor.
    pub fn certified_floor(&self) -> Option<i64> {
        if self.is_exact() {
            return self.mid.floor_value().to_i64();
        }
        let lo = self.lo().floor_value();
        let hi = self.hi().floor_value();
        if lo == hi {
            lo.to_i64()
        } else {
            None
        }
    }

    /// Certified order of the enclosed reals. `Equal` is only reported for
    /// two exact balls with the same value.
    pub fn certified_cmp(&self, other: &Ball<S>) -> Option<Ordering> {
        if self.is_exact() && other.is_exact() {
            return self.mid.partial_cmp(&other.mid);
        }
        if self.hi() < other.lo() {
            Some(Ordering::Less)
        } else if self.lo() > other.hi() {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// True when the two balls could enclose the same real.
    pub fn overlaps(&self, other: &Ball<S>) -> bool {
        !(self.hi() < other.lo() || other.hi() < self.lo())
    }

    /// Re-encloses the ball in another scalar type.
    pub fn convert<T: Scalar>(&self) -> Ball<T> {
        Ball::from_rational(&self.mid.to_rational(), &self.rad.to_rational())
    }
}

impl<S: fmt::Debug> fmt::Debug for Ball<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} ± {:?}", self.mid, self.rad)
    }
}

impl Ball<f64> {
    pub fn value(&self) -> f64 {
        self.mid
    }

    pub fn error(&self) -> f64 {
        self.rad
    }
}

/// `2^-bits` as an exact rational.
pub(crate) fn pow2_neg(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn float_conversion_is_enclosing() {
        let third = rat(1, 3);
        let b: Ball<f64> = Ball::from_rational(&third, &BigRational::zero());
        assert!(b.lo().to_rational() <= third && third <= b.hi().to_rational());
        assert!(*b.rad() < 1e-16);
        let b: Ball<f32> = Ball::from_rational(&third, &BigRational::zero());
        assert!(b.lo().to_rational() <= third && third <= b.hi().to_rational());
    }

    #[test]
    fn exact_balls_compare_exactly() {
        let a: Ball<BigRational> = Ball::exact(rat(2, 7));
        let b: Ball<BigRational> = Ball::exact(rat(4, 14));
        assert_eq!(a.certified_cmp(&b), Some(Ordering::Equal));
        assert_eq!(a.mul_int(7).certified_floor(), Some(2));
        assert_eq!(a.mul_int(-1).certified_floor(), Some(-1));
    }

    #[test]
    fn uncertain_floor_is_refused() {
        let b = Ball::new(1.0f64, 1e-9);
        assert_eq!(b.certified_floor(), None);
        let b = Ball::new(1.5f64, 1e-9);
        assert_eq!(b.certified_floor(), Some(1));
        assert_eq!(b.certified_cmp(&Ball::new(1.5 + 1e-10, 0.0)), None);
        assert_eq!(b.certified_cmp(&Ball::exact(2.0)), Some(Ordering::Less));
    }

    #[test]
    fn arithmetic_encloses_rational_truth() {
        let theta = rat(5_849_625, 10_000_000);
        let b: Ball<f64> = Ball::from_rational(&theta, &BigRational::zero());
        for j in [-1000i64, -17, 3, 999_999] {
            let prod = b.mul_int(j);
            let truth = &theta * BigRational::from_integer(j.into());
            assert!(prod.lo().to_rational() <= truth && truth <= prod.hi().to_rational());
            let sum = prod.add(&b);
            let truth = truth + &theta;
            assert!(sum.lo().to_rational() <= truth && truth <= sum.hi().to_rational());
        }
    }
}
