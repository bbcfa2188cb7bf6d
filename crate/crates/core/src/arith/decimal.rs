use super::{ArithError, QuadRat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Upper bound on the digit count accepted by [`quad_to_decimal`].
pub const MAX_DIGITS: usize = 10_000;

/// Floor square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative number");
    n.sqrt()
}

/// `floor(k * B * √5)` for `k` in {1, 2}, exact for any sign of `B`.
fn floor_times_sqrt5(b: &BigInt, k: u32) -> BigInt {
    if b.is_zero() {
        return BigInt::zero();
    }
    let kb = b * k;
    let r = isqrt(&(&kb * &kb * 5u32));
    // B√5 is irrational for B ≠ 0, so the negative floor is one below -isqrt.
    if b.is_negative() {
        -r - 1u32
    } else {
        r
    }
}

fn pow10(n: usize) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n)
}

/// Scaled value `round(x * 10^digits)` with ties to even.
fn rounded_scaled(x: &QuadRat, digits: usize) -> BigInt {
    let (a, b, d) = x.parts();
    let scale = pow10(digits);
    let big_a = a * &scale;
    let big_b = b * &scale;
    let z = (&big_a + floor_times_sqrt5(&big_b, 1)).div_floor(d);
    let round_up = if b.is_zero() {
        let twice_rem = (&big_a - &z * d) * 2u32;
        match twice_rem.cmp(d) {
            Ordering::Greater => true,
            Ordering::Equal => z.is_odd(),
            Ordering::Less => false,
        }
    } else {
        // Irrational: no ties. Round up iff floor(2y) is odd relative to 2z.
        let two_y = (&big_a * 2u32 + floor_times_sqrt5(&big_b, 2)).div_floor(d);
        two_y != &z * 2u32
    };
    if round_up {
        z + 1u32
    } else {
        z
    }
}

fn render_scaled(z: &BigInt, digits: usize) -> String {
    let mag = z.abs().to_string();
    let padded = if mag.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - mag.len()), mag) } else { mag };
    let (int, frac) = padded.split_at(padded.len() - digits);
    let sign = if z.is_negative() { "-" } else { "" };
    format!("{sign}{int}.{frac}")
}

/// Correctly rounded decimal expansion with exactly `digits` places after the
/// point. Ties round to even; a value that rounds to zero prints unsigned.
pub fn quad_to_decimal(x: &QuadRat, digits: usize) -> Result<String, ArithError> {
    if digits == 0 || digits > MAX_DIGITS {
        return Err(ArithError::DigitsOutOfRange(digits));
    }
    Ok(render_scaled(&rounded_scaled(x, digits), digits))
}

fn ten_pow(e: i64) -> QuadRat {
    let p = QuadRat::from_bigint(pow10(e.unsigned_abs() as usize));
    if e >= 0 {
        p
    } else {
        p.inv().expect("nonzero power of ten")
    }
}

/// Rough `log10 |x|` from bit lengths; corrected exactly by the caller.
fn estimate_exponent(x: &QuadRat) -> i64 {
    let (a, b, d) = x.parts();
    let bits = |n: &BigInt| n.bits() as f64;
    let mixed = a.is_positive() != b.is_positive() && !a.is_zero() && !b.is_zero();
    let log2 = if mixed {
        // Cancellation: |a + b√5| = |a² - 5b²| / |a - b√5|.
        let norm = (a * a - b * b * 5u32).abs();
        bits(&norm) - bits(a).max(bits(b) + 1.2) - bits(d)
    } else {
        bits(a).max(bits(b) + 1.2) - bits(d)
    };
    (log2 * std::f64::consts::LOG10_2).floor() as i64
}

/// Scientific notation with `sig` significant digits, e.g. `2.09695e-27`.
/// Zero prints as `0`.
pub fn quad_to_scientific(x: &QuadRat, sig: usize) -> Result<String, ArithError> {
    if !(2..=MAX_DIGITS).contains(&sig) {
        return Err(ArithError::DigitsOutOfRange(sig));
    }
    if x.is_zero() {
        return Ok("0".to_string());
    }
    let mag = x.abs();
    let mut e = estimate_exponent(&mag);
    while mag < ten_pow(e) {
        e -= 1;
    }
    while mag >= ten_pow(e + 1) {
        e += 1;
    }
    let mut scaled = rounded_scaled(&(&mag * &ten_pow(-e)), sig - 1);
    if scaled >= pow10(sig) {
        e += 1;
        scaled = rounded_scaled(&(&mag * &ten_pow(-e)), sig - 1);
    }
    let sign = if x.signum() < 0 { "-" } else { "" };
    Ok(format!("{sign}{}e{e}", render_scaled(&scaled, sig - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadRat {
        s.parse().unwrap()
    }

    #[test]
    fn phi_to_ten_places() {
        assert_eq!(quad_to_decimal(&QuadRat::phi(), 10).unwrap(), "1.6180339887");
    }

    #[test]
    fn sqrt5_rounds_up() {
        assert_eq!(quad_to_decimal(&QuadRat::sqrt5(), 5).unwrap(), "2.23607");
    }

    #[test]
    fn negative_irrational() {
        assert_eq!(quad_to_decimal(&-QuadRat::sqrt5(), 3).unwrap(), "-2.236");
        // 2 - √5 = -0.2360679...
        assert_eq!(quad_to_decimal(&q("(2-1*sqrt5)/1"), 4).unwrap(), "-0.2361");
    }

    #[test]
    fn ties_go_to_even() {
        assert_eq!(quad_to_decimal(&q("1/8"), 2).unwrap(), "0.12");
        assert_eq!(quad_to_decimal(&q("3/8"), 2).unwrap(), "0.38");
        assert_eq!(quad_to_decimal(&q("-1/8"), 2).unwrap(), "-0.12");
    }

    #[test]
    fn negative_zero_is_unsigned() {
        assert_eq!(quad_to_decimal(&q("-1/1000"), 2).unwrap(), "0.00");
    }

    #[test]
    fn digit_bounds() {
        assert!(quad_to_decimal(&QuadRat::one(), 0).is_err());
        assert!(quad_to_decimal(&QuadRat::one(), MAX_DIGITS + 1).is_err());
        assert_eq!(quad_to_decimal(&QuadRat::one(), 1).unwrap(), "1.0");
    }

    #[test]
    fn scientific() {
        assert_eq!(quad_to_scientific(&q("1/3"), 6).unwrap(), "3.33333e-1");
        assert_eq!(quad_to_scientific(&q("-12345/1"), 3).unwrap(), "-1.23e4");
        assert_eq!(quad_to_scientific(&q("999999/1"), 3).unwrap(), "1.00e6");
        assert_eq!(quad_to_scientific(&QuadRat::zero(), 3).unwrap(), "0");
        // φ^-100 = (L - F√5)/2 cancels to ~21 leading digits.
        let tiny = QuadRat::phi().powi(-100).unwrap();
        assert_eq!(quad_to_scientific(&tiny, 6).unwrap(), "1.26251e-21");
    }
}
