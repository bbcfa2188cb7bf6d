use super::{ArithError, QuadRat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Builds `num/den` in canonical form. Panics only if `den == 0`, which is a
/// programming error for the literal constants this is used with.
pub fn rat_from_ints(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact division that reports a zero divisor instead of panicking.
pub fn rat_div(x: &BigRational, y: &BigRational) -> Result<BigRational, ArithError> {
    if y.is_zero() {
        return Err(ArithError::DivisionByZero(format!("{} / {}", format_rational(x), format_rational(y))));
    }
    Ok(x / y)
}

/// Renders as `p/q`; integers keep the explicit `/1`.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses the `p/q` grammar: optional leading `-`, decimal digits, `/`, a
/// positive decimal denominator. The result is reduced.
pub fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let err = |reason: &str| ArithError::Parse { kind: "rational", input: s.to_string(), reason: reason.to_string() };
    let (num, den) = s.split_once('/').ok_or_else(|| err("expected p/q"))?;
    let num = parse_signed_int(num).ok_or_else(|| err("bad numerator"))?;
    if den.is_empty() || !den.bytes().all(|c| c.is_ascii_digit()) {
        return Err(err("bad denominator"));
    }
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn parse_signed_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Embeds a rational into Q(√5) with zero irrational part.
pub fn quad_from_rational(x: &BigRational) -> QuadRat {
    QuadRat::from(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    #[test]
    fn addition_is_reduced() {
        assert_eq!(rat_from_ints(1, 2) + rat_from_ints(1, 3), rat_from_ints(5, 6));
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let x = rat_from_ints(143, 960);
        let y = rat_from_ints(960, 143);
        assert_eq!(format_rational(&(x * y)), "1/1");
    }

    #[test]
    fn compares_small_constant() {
        let big = parse_rational("1288981/35850395750400").unwrap();
        assert_eq!(rat_from_ints(1, 3).cmp(&big), Ordering::Greater);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let e = rat_div(&rat_from_ints(1, 2), &rat_from_ints(0, 1)).unwrap_err();
        assert!(matches!(e, ArithError::DivisionByZero(_)));
        assert_eq!(rat_div(&rat_from_ints(1, 2), &rat_from_ints(1, 4)).unwrap(), rat_from_ints(2, 1));
    }

    #[test]
    fn zero_is_unique() {
        let z = rat_from_ints(0, -7);
        assert_eq!(format_rational(&z), "0/1");
        assert_eq!(format_rational(&(rat_from_ints(3, 4) - rat_from_ints(6, 8))), "0/1");
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(parse_rational("-10/4").unwrap(), rat_from_ints(-5, 2));
        for bad in ["", "1", "1/", "/2", "1/0", "1/-2", "+1/2", "1 /2", "1/2/3", "a/b"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }
}
