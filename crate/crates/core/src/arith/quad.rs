use super::rational::parse_signed_int;
use super::ArithError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// An element `(a + b√5)/d` of Q(√5).
///
/// Always canonical: `d > 0` and `gcd(|a|, |b|, d) = 1`, so zero is `0/1` and
/// structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadRat {
    a: BigInt,
    b: BigInt,
    d: BigInt,
}

impl QuadRat {
    pub fn new(a: BigInt, b: BigInt, d: BigInt) -> Result<Self, ArithError> {
        if d.is_zero() {
            return Err(ArithError::DivisionByZero(format!("({a}+{b}*sqrt5)/0")));
        }
        Ok(Self::canon(a, b, d))
    }

    fn canon(mut a: BigInt, mut b: BigInt, mut d: BigInt) -> Self {
        debug_assert!(!d.is_zero());
        if d.is_negative() {
            a = -a;
            b = -b;
            d = -d;
        }
        if a.is_zero() && b.is_zero() {
            return Self::zero();
        }
        let g = a.gcd(&b).gcd(&d);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            d /= &g;
        }
        QuadRat { a, b, d }
    }

    pub fn zero() -> Self {
        QuadRat { a: BigInt::zero(), b: BigInt::zero(), d: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt5() -> Self {
        QuadRat { a: BigInt::zero(), b: BigInt::one(), d: BigInt::one() }
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn phi() -> Self {
        QuadRat { a: BigInt::one(), b: BigInt::one(), d: BigInt::from(2) }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::canon(n, BigInt::zero(), BigInt::one())
    }

    pub fn from_ratio(num: BigInt, den: BigInt) -> Result<Self, ArithError> {
        Self::new(num, BigInt::zero(), den)
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| BigRational::new(self.a.clone(), self.d.clone()))
    }

    /// Rational part `a/d`.
    pub fn rational_part(&self) -> BigRational {
        BigRational::new(self.a.clone(), self.d.clone())
    }

    /// Coefficient of √5, i.e. `b/d`.
    pub fn sqrt5_part(&self) -> BigRational {
        BigRational::new(self.b.clone(), self.d.clone())
    }

    /// Galois conjugate `(a - b√5)/d`.
    pub fn conj(&self) -> Self {
        QuadRat { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// Field norm `(a² - 5b²)/d²`.
    pub fn norm(&self) -> BigRational {
        let n = &self.a * &self.a - BigInt::from(5) * &self.b * &self.b;
        BigRational::new(n, &self.d * &self.d)
    }

    /// Exact sign of the real number represented.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // Mixed signs: |a| vs |b|√5 decides.
        let a2 = &self.a * &self.a;
        let b2 = BigInt::from(5) * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse via the conjugate: `1/x = d·conj / (a² - 5b²)`.
    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero(format!("1 / {self}")));
        }
        let n = &self.a * &self.a - BigInt::from(5) * &self.b * &self.b;
        Ok(Self::canon(&self.d * &self.a, -(&self.d * &self.b), n))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero(format!("{self} / {rhs}")));
        }
        Ok(self * &rhs.inv()?)
    }

    /// `self^e` by repeated squaring; `x^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power allowing negative exponents.
    pub fn powi(&self, e: i64) -> Result<Self, ArithError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::canon(&self.a * r.numer(), &self.b * r.numer(), &self.d * r.denom())
    }
}

fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl Default for QuadRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<&BigRational> for QuadRat {
    fn from(r: &BigRational) -> Self {
        Self::canon(r.numer().clone(), BigInt::zero(), r.denom().clone())
    }
}

impl From<BigRational> for QuadRat {
    fn from(r: BigRational) -> Self {
        Self::from(&r)
    }
}

impl From<i64> for QuadRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for QuadRat {
    fn from(n: BigInt) -> Self {
        Self::from_bigint(n)
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn add(self, rhs: &QuadRat) -> QuadRat {
        if self.d == rhs.d {
            return QuadRat::canon(&self.a + &rhs.a, &self.b + &rhs.b, self.d.clone());
        }
        QuadRat::canon(&self.a * &rhs.d + &rhs.a * &self.d, &self.b * &rhs.d + &rhs.b * &self.d, &self.d * &rhs.d)
    }
}

impl<'a> Sub<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn sub(self, rhs: &QuadRat) -> QuadRat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a QuadRat> for &'a QuadRat {
    type Output = QuadRat;
    fn mul(self, rhs: &QuadRat) -> QuadRat {
        let a = &self.a * &rhs.a + BigInt::from(5) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadRat::canon(a, b, &self.d * &rhs.d)
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat { a: -self.a, b: -self.b, d: self.d }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: QuadRat) -> QuadRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: &QuadRat) -> QuadRat {
                (&self).$m(rhs)
            }
        }
        impl $tr<QuadRat> for &QuadRat {
            type Output = QuadRat;
            fn $m(self, rhs: QuadRat) -> QuadRat {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for QuadRat {
    fn sum<I: Iterator<Item = QuadRat>>(iter: I) -> Self {
        iter.fold(QuadRat::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for QuadRat {
    fn product<I: Iterator<Item = QuadRat>>(iter: I) -> Self {
        iter.fold(QuadRat::one(), |acc, x| acc * x)
    }
}

/// `a/d` when rational, otherwise `(a+b*sqrt5)/d` or `(a-b*sqrt5)/d`.
impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}/{}", self.a, self.d);
        }
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}*sqrt5)/{}", self.a, op, self.b.abs(), self.d)
    }
}

impl fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadRat({self})")
    }
}

impl FromStr for QuadRat {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ArithError::Parse {
            kind: "quadratic rational",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let Some(rest) = s.strip_prefix('(') else {
            return super::parse_rational(s).map(QuadRat::from);
        };
        let (inner, den) = rest.split_once(")/").ok_or_else(|| err("expected (..)/d"))?;
        let body = inner.strip_suffix("*sqrt5").ok_or_else(|| err("missing *sqrt5"))?;
        // The separator is the first sign after the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .ok_or_else(|| err("missing sign between parts"))?;
        let a = parse_signed_int(&body[..split]).ok_or_else(|| err("bad rational part"))?;
        let (neg, b_str) = (body.as_bytes()[split] == b'-', &body[split + 1..]);
        if b_str.starts_with('-') {
            return Err(err("bad sqrt5 coefficient"));
        }
        let mut b = parse_signed_int(b_str).ok_or_else(|| err("bad sqrt5 coefficient"))?;
        if neg {
            b = -b;
        }
        if den.is_empty() || !den.bytes().all(|c| c.is_ascii_digit()) {
            return Err(err("bad denominator"));
        }
        let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        QuadRat::new(a, b, d).map_err(|_| err("zero denominator"))
    }
}

impl serde::Serialize for QuadRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
