//! Exact arithmetic: arbitrary-precision rationals and the quadratic field Q(√5).
//!
//! Rationals are `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator. [`QuadRat`] adds the `(a + b√5)/d`
//! representation used for every closed form, power of φ and power of √5.

mod decimal;
mod quad;
mod rational;

pub use decimal::{isqrt, quad_to_decimal, quad_to_scientific, MAX_DIGITS};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use quad::QuadRat;
pub use rational::{format_rational, parse_rational, quad_from_rational, rat_div, rat_from_ints};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("cannot parse {kind} from {input:?}: {reason}")]
    Parse { kind: &'static str, input: String, reason: String },
    #[error("decimal digit count {0} outside 1..={MAX_DIGITS}")]
    DigitsOutOfRange(usize),
}
