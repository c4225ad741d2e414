//! Fixed-precision float formatting for reports.
//!
//! Every float a report carries has been rounded to nine significant
//! digits, so it prints identically through `Display` and through JSON.

/// `x` rounded half-to-even to nine significant digits.
pub fn sig9(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

/// The least nine-digit value not below `x`, for error bounds.
pub fn sig9_up(x: f64) -> f64 {
    let r = sig9(x);
    if r >= x || !x.is_finite() {
        return r;
    }
    let unit = 10f64.powi(x.abs().log10().floor() as i32 - 8);
    let bumped = sig9(x + unit);
    if bumped >= x {
        bumped
    } else {
        sig9(x + 2.0 * unit)
    }
}

/// Rounds a value and widens its bound by the rounding step.
pub fn rounded_with_bound(value: f64, bound: f64) -> (f64, f64) {
    let shown = sig9(value);
    let slack = (shown - value).abs();
    (shown, sig9_up(bound + slack + slack * f64::EPSILON))
}

/// Text form of a rounded value: positional, or scientific below `1e-4`.
pub fn show(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-4 {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_digits() {
        assert_eq!(sig9(0.4150374992788438).to_string(), "0.415037499");
        assert_eq!(sig9(0.5849625007211562).to_string(), "0.584962501");
        assert_eq!(sig9(1.0).to_string(), "1");
        assert_eq!(sig9(-2.5e-17).to_string(), "-0.000000000000000025");
        assert_eq!(sig9(0.0), 0.0);
        assert_eq!(show(sig9(1.2345678912e-16)), "1.23456789e-16");
        assert_eq!(show(0.25), "0.25");
    }

    #[test]
    fn bounds_round_up() {
        for x in [1.234567891e-16, 0.99999999999, 3.3333333333e-5, 7.0] {
            assert!(sig9_up(x) >= x);
            assert!(sig9_up(x) <= x * (1.0 + 2e-8));
        }
        let (v, b) = rounded_with_bound(0.4150374992788438, 1e-16);
        assert!((v - 0.4150374992788438).abs() <= b);
    }

    #[test]
    fn json_round_trips_rounded_values() {
        for x in [
            0.4150374992788438,
            1.0 / 3.0,
            2.0f64.sqrt() * 1e-9,
            123456.789012,
        ] {
            let r = sig9(x);
            let text = serde_json::to_string(&r).unwrap();
            let back: f64 = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_bits(), r.to_bits());
            assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }
    }
}
