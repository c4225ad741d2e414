//! Slopes `0 < θ < 1`, exact or approximated to any requested precision.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{pow2_neg, Ball, Scalar};

/// Irrational constants that can be computed to arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedConstant {
    /// `log₂(3/2)`
    Log2ThreeHalves,
    /// `(√5 − 1)/2`
    Golden,
    /// `√2 − 1`
    Sqrt2Minus1,
}

impl NamedConstant {
    pub const ALL: [NamedConstant; 3] = [
        NamedConstant::Log2ThreeHalves,
        NamedConstant::Golden,
        NamedConstant::Sqrt2Minus1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedConstant::Log2ThreeHalves => "log2_3_2",
            NamedConstant::Golden => "golden",
            NamedConstant::Sqrt2Minus1 => "sqrt2m1",
        }
    }

    fn approx(self, bits: u32) -> Approximation {
        match self {
            NamedConstant::Log2ThreeHalves => log2_three_halves(bits),
            NamedConstant::Golden => {
                // (√5 − 1)/2
                let s = sqrt_approx(5, bits + 1);
                Approximation {
                    value: (s.value - BigRational::one()) / BigInt::from(2),
                    error: s.error / BigInt::from(2),
                }
            }
            NamedConstant::Sqrt2Minus1 => {
                let s = sqrt_approx(2, bits);
                Approximation {
                    value: s.value - BigRational::one(),
                    error: s.error,
                }
            }
        }
    }
}

/// A rational approximation and a bound on its distance to the true value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximation {
    pub value: BigRational,
    pub error: BigRational,
}

/// `√k` to within `2^-bits`.
fn sqrt_approx(k: u32, bits: u32) -> Approximation {
    // s = ⌊√k · 2^P⌋, so √k lies in [s, s+1) / 2^P
    let p = bits + 1;
    let scaled = BigInt::from(k) << (2 * p);
    let s = scaled.sqrt();
    Approximation {
        value: BigRational::new(2 * s + 1, BigInt::one() << (p + 1)),
        error: pow2_neg(p + 1),
    }
}

/// `2^w · atanh(1/d)` from below, with the number of units it may fall short.
fn atanh_inv_fixed(d: u32, w: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << w;
    let d = BigInt::from(d);
    let d2 = &d * &d;
    let mut power = d.clone();
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut k = 0u64;
    loop {
        let term = &one / (&power * BigInt::from(2 * k + 1));
        if term.is_zero() {
            break;
        }
        sum += term;
        terms += 1;
        power *= &d2;
        k += 1;
    }
    // each truncated term loses < 1 unit; the geometric tail is below 9/8
    (sum, BigInt::from(terms + 2))
}

/// `log₂(3/2) = atanh(1/5) / atanh(1/3)` to within `2^-bits`.
fn log2_three_halves(bits: u32) -> Approximation {
    let w = bits + 24;
    let (num, num_slack) = atanh_inv_fixed(5, w);
    let (den, den_slack) = atanh_inv_fixed(3, w);
    let lo = BigRational::new(num.clone(), &den + den_slack);
    let hi = BigRational::new(num + num_slack, den);
    let mid = (&lo + &hi) / BigInt::from(2);
    let half_width = (&hi - &lo) / BigInt::from(2);
    // round the midpoint to a dyadic to keep later arithmetic cheap
    let scale = BigInt::one() << (bits + 2);
    let rounded = BigRational::new(
        (&mid * BigRational::from_integer(scale.clone()))
            .round()
            .to_integer(),
        scale,
    );
    let error = half_width + (&rounded - &mid).abs();
    Approximation {
        value: rounded,
        error,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Rational(BigRational),
    Constant(NamedConstant),
    Decimal {
        value: BigRational,
        error: BigRational,
    },
}

/// A slope `0 < θ < 1`.
///
/// Exact rationals carry no error. Named constants can be approximated as
/// tightly as requested. A decimal carries the error bound it was given and
/// cannot be refined beyond it. `irrational` is an assertion by whoever built
/// the value; it is never derived from an approximation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeValue {
    repr: Repr,
    irrational: bool,
}

fn in_unit_interval(x: &BigRational) -> bool {
    x.is_positive() && *x < BigRational::one()
}

impl SlopeValue {
    pub fn rational(num: u64, den: u64) -> Result<SlopeValue> {
        if den == 0 {
            return Err(Error::InvalidSlope(format!("{num}/{den}")));
        }
        SlopeValue::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(value: BigRational) -> Result<SlopeValue> {
        if !in_unit_interval(&value) {
            return Err(Error::InvalidSlope(format!("{value} is not in (0, 1)")));
        }
        Ok(SlopeValue {
            repr: Repr::Rational(value),
            irrational: false,
        })
    }

    pub fn named(c: NamedConstant) -> SlopeValue {
        SlopeValue {
            repr: Repr::Constant(c),
            irrational: true,
        }
    }

    /// A real known only to within `error` of `value`.
    pub fn decimal(value: BigRational, error: BigRational, irrational: bool) -> Result<SlopeValue> {
        if !error.is_positive() {
            return Err(Error::InvalidSlope("error bound must be positive".into()));
        }
        if !in_unit_interval(&(&value - &error)) || !in_unit_interval(&(&value + &error)) {
            return Err(Error::InvalidSlope(format!(
                "{value} ± {error} is not inside (0, 1)"
            )));
        }
        Ok(SlopeValue {
            repr: Repr::Decimal { value, error },
            irrational,
        })
    }

    pub fn is_irrational(&self) -> bool {
        self.irrational
    }

    /// The exact value, for rational slopes.
    pub fn exact_value(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Whether [`approx`](Self::approx) improves as `bits` grows.
    pub fn is_refinable(&self) -> bool {
        matches!(self.repr, Repr::Constant(_))
    }

    /// A rational approximation; the error is at most `2^-bits` for named
    /// constants, zero for rationals, and the declared bound for decimals.
    pub fn approx(&self, bits: u32) -> Approximation {
        match &self.repr {
            Repr::Rational(r) => Approximation {
                value: r.clone(),
                error: BigRational::zero(),
            },
            Repr::Constant(c) => c.approx(bits),
            Repr::Decimal { value, error } => Approximation {
                value: value.clone(),
                error: error.clone(),
            },
        }
    }

    /// Encloses θ in a ball of scalar type `S`.
    pub fn ball<S: Scalar>(&self, bits: u32) -> Ball<S> {
        let a = self.approx(bits);
        Ball::from_rational(&a.value, &a.error)
    }

    pub fn to_f64(&self) -> f64 {
        self.approx(64).value.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Constant(c) => f.write_str(c.name()),
            Repr::Decimal { value, error } => {
                write!(
                    f,
                    "{}@{:e}",
                    value.to_f64().unwrap_or(f64::NAN),
                    error.to_f64().unwrap_or(f64::NAN)
                )
            }
        }
    }
}

/// Parses a plain or scientific decimal exactly, e.g. `0.5849`, `1e-18`.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, scale.unsigned_abs() as usize))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

impl FromStr for SlopeValue {
    type Err = Error;

    /// Accepts `num/den`, a constant name (`log2_3_2`, `golden`, `sqrt2m1`),
    /// `value@error` (asserted irrational), or a bare decimal (exact
    /// rational).
    fn from_str(s: &str) -> Result<SlopeValue> {
        let s = s.trim();
        if let Some(c) = NamedConstant::ALL.iter().find(|c| c.name() == s) {
            return Ok(SlopeValue::named(*c));
        }
        let bad = || Error::InvalidSlope(s.to_string());
        if let Some((num, den)) = s.split_once('/') {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            return SlopeValue::from_rational(BigRational::new(num, den));
        }
        if let Some((value, error)) = s.split_once('@') {
            let value = parse_decimal(value).ok_or_else(bad)?;
            let error = parse_decimal(error).ok_or_else(bad)?;
            return SlopeValue::decimal(value, error, true);
        }
        let value = parse_decimal(s).ok_or_else(bad)?;
        SlopeValue::from_rational(value)
    }
}

/// Reduced `p/q` pair for exact rationals that fit in machine words.
pub fn as_small_fraction(r: &BigRational) -> Option<(u64, u64)> {
    let g = r.numer().gcd(r.denom());
    Some(((r.numer() / &g).to_u64()?, (r.denom() / &g).to_u64()?))
}
