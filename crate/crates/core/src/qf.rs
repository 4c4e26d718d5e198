//! Exact arithmetic in the real quadratic field Q(√5).
//!
//! Every scalar that touches a projection operator or a character inner
//! product is a [`QfElem`], a pair of arbitrary-precision rationals `a + b√5`.
//! The golden ratio τ = (1+√5)/2 is the element (1/2, 1/2); it satisfies
//! τ² = τ + 1 exactly, which the unit tests pin down.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// An element `a + b√5` of Q(√5) with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QfElem {
    a: BigRational,
    b: BigRational,
}

impl QfElem {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QfElem { a, b }
    }

    pub fn zero() -> Self {
        QfElem::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        QfElem::new(BigRational::one(), BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        QfElem::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// The rational `num/den` as a field element.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        QfElem::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `(num/den)·√5`.
    pub fn sqrt5_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        QfElem::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    /// √5 itself.
    pub fn sqrt5() -> Self {
        QfElem::sqrt5_ratio(1, 1)
    }

    /// The golden ratio τ = (1+√5)/2.
    pub fn tau() -> Self {
        QfElem::new(
            BigRational::new(BigInt::one(), BigInt::from(2)),
            BigRational::new(BigInt::one(), BigInt::from(2)),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The integer value, if the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.b.is_zero() && self.a.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }

    /// Galois conjugate `a - b√5`.
    pub fn conjugate(&self) -> Self {
        QfElem::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 5b²`; zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(\u{221a}5)");
        let n = self.norm();
        QfElem::new(&self.a / &n, -(&self.b / &n))
    }

    /// Exact sign of the real number `a + b√5`: -1, 0, or +1.
    ///
    /// Decided rationally: when `a` and `b` disagree in sign the comparison
    /// reduces to `a²` versus `5b²`.
    pub fn signum(&self) -> i32 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (s, t) if s == t => s,
            (s, _) => {
                let a2 = &self.a * &self.a;
                let b2_5 = BigRational::from_integer(BigInt::from(5)) * &self.b * &self.b;
                match a2.cmp(&b2_5) {
                    std::cmp::Ordering::Greater => s,
                    std::cmp::Ordering::Less => -s,
                    std::cmp::Ordering::Equal => 0, // impossible: 5 is not a rational square
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    /// Non-authoritative float view (display and geometry export only).
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * 5f64.sqrt()
    }

    /// The four-integer wire form `{a_num, a_den, b_num, b_den}`.
    pub fn to_wire(&self) -> QfWire {
        QfWire {
            a_num: self.a.numer().to_string(),
            a_den: self.a.denom().to_string(),
            b_num: self.b.numer().to_string(),
            b_den: self.b.denom().to_string(),
        }
    }
}

/// Serialized form of a [`QfElem`]: `a_num/a_den + (b_num/b_den)·√5`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QfWire {
    pub a_num: String,
    pub a_den: String,
    pub b_num: String,
    pub b_den: String,
}

fn rational_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

impl fmt::Display for QfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}\u{221a}5", self.b);
        }
        write!(f, "{} + {}\u{221a}5", self.a, self.b)
    }
}

impl Add for &QfElem {
    type Output = QfElem;
    fn add(self, rhs: &QfElem) -> QfElem {
        QfElem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QfElem {
    type Output = QfElem;
    fn sub(self, rhs: &QfElem) -> QfElem {
        QfElem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QfElem {
    type Output = QfElem;
    fn mul(self, rhs: &QfElem) -> QfElem {
        let five = BigRational::from_integer(BigInt::from(5));
        QfElem::new(
            &self.a * &rhs.a + five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Div for &QfElem {
    type Output = QfElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QfElem) -> QfElem {
        self * &rhs.inverse()
    }
}

impl Neg for &QfElem {
    type Output = QfElem;
    fn neg(self) -> QfElem {
        QfElem::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QfElem {
            type Output = QfElem;
            fn $method(self, rhs: QfElem) -> QfElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for QfElem {
    type Output = QfElem;
    fn neg(self) -> QfElem {
        -&self
    }
}

impl AddAssign<&QfElem> for QfElem {
    fn add_assign(&mut self, rhs: &QfElem) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&QfElem> for QfElem {
    fn sub_assign(&mut self, rhs: &QfElem) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&QfElem> for QfElem {
    fn mul_assign(&mut self, rhs: &QfElem) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qf(an: i64, ad: i64, bn: i64, bd: i64) -> QfElem {
        &QfElem::from_ratio(an, ad) + &QfElem::sqrt5_ratio(bn, bd)
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let s = QfElem::sqrt5();
        assert_eq!(&s * &s, QfElem::from_int(5));
    }

    #[test]
    fn tau_satisfies_its_minimal_polynomial() {
        let tau = QfElem::tau();
        assert_eq!(&tau * &tau, &tau + &QfElem::one());
    }

    #[test]
    fn tau_conjugate_is_one_minus_tau() {
        // τ' = (1-√5)/2 = 1 - τ, so τ + τ' = 1 and τ·τ' = -1.
        let tau = QfElem::tau();
        let conj = &QfElem::from_int(1) - &tau;
        assert_eq!(&tau + &conj, QfElem::one());
        assert_eq!(&tau * &conj, QfElem::from_int(-1));
    }

    #[test]
    fn exact_sign_of_mixed_terms() {
        // 9/4 - √5 > 0 because 81/16 > 5; 2 - √5 < 0 because 4 < 5.
        assert_eq!(qf(9, 4, -1, 1).signum(), 1);
        assert_eq!(qf(2, 1, -1, 1).signum(), -1);
        assert_eq!(qf(-2, 1, 1, 1).signum(), 1);
        assert_eq!(qf(-9, 4, 1, 1).signum(), -1);
        assert_eq!(QfElem::zero().signum(), 0);
    }

    #[test]
    fn inverse_of_tau_is_tau_minus_one() {
        let tau = QfElem::tau();
        assert_eq!(tau.inverse(), &tau - &QfElem::one());
        assert_eq!(&tau * &tau.inverse(), QfElem::one());
    }

    fn small_qf() -> impl Strategy<Value = QfElem> {
        (-40i64..40, 1i64..8, -40i64..40, 1i64..8).prop_map(|(an, ad, bn, bd)| qf(an, ad, bn, bd))
    }

    proptest! {
        #[test]
        fn field_axioms(x in small_qf(), y in small_qf(), z in small_qf()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &QfElem::zero(), x.clone());
            prop_assert_eq!(&x * &QfElem::one(), x.clone());
        }

        #[test]
        fn inverses_cancel(x in small_qf()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inverse(), QfElem::one());
        }

        #[test]
        fn conjugation_is_multiplicative(x in small_qf(), y in small_qf()) {
            prop_assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
        }

        #[test]
        fn sign_matches_float_view(x in small_qf()) {
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }
    }
}
