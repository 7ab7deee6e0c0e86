//! Exact arithmetic in the rational function field `Q(v)`.
//!
//! Every quantum scalar lives here. The formal variable is `v = q^(1/2d)`
//! where `d` is fixed by the realization session, so `q = v^(2d)` and
//! `q_i = v^(2d d_i)`.
//!
//! An element is stored as `v^shift * num(v) / den(v)` with
//! * `num(0) != 0` and `den(0) != 0` (all powers of `v` live in `shift`),
//! * `gcd(num, den) = 1` over `Q[v]`,
//! * `den` has positive leading coefficient and the integer contents of
//!   `num` and `den` are coprime.
//!
//! This form is unique, so structural equality is field equality.

mod parse;
mod poly;

pub use parse::ParseCoeffError;
pub use poly::IntPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("pole at v = {0}: reduced denominator vanishes")]
    Pole(BigRational),
    #[error("specialization point must be nonzero")]
    ZeroPoint,
    #[error("q-binomial index out of range: [{m} choose {n}]")]
    BinomialRange { m: i64, n: i64 },
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coeff {
    shift: i64,
    num: IntPoly,
    den: IntPoly,
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff { shift: 0, num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Coeff::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Coeff::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Coeff { shift: 0, num: IntPoly::constant(c), den: IntPoly::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Coeff::from_parts(0, IntPoly::constant(r.numer().clone()), IntPoly::constant(r.denom().clone()))
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Coeff { shift: k, num: IntPoly::one(), den: IntPoly::one() }
    }

    /// `c * v^k`.
    pub fn term(c: i64, k: i64) -> Self {
        if c == 0 {
            return Coeff::zero();
        }
        Coeff { shift: k, num: IntPoly::constant(BigInt::from(c)), den: IntPoly::one() }
    }

    /// Builds the Laurent polynomial `sum c_k v^k` from `(k, c_k)` pairs.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Coeff::zero(), |acc, &(k, c)| acc + Coeff::term(c, k))
    }

    /// Normalizes `v^shift * num / den`.
    pub fn from_parts(shift: i64, num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Coeff::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        Self::finish(shift, num, den)
    }

    /// Final normalization once `num` and `den` are known to be coprime.
    fn finish(mut shift: i64, mut num: IntPoly, mut den: IntPoly) -> Self {
        let ln = num.low_order();
        if ln > 0 {
            num = num.shift_down(ln);
            shift += ln as i64;
        }
        let ld = den.low_order();
        if ld > 0 {
            den = den.shift_down(ld);
            shift -= ld as i64;
        }
        let cn = num.content();
        let mut cd = den.content();
        if den.lead().unwrap().is_negative() {
            cd = -cd;
        }
        let g = cn.gcd(&cd);
        let g = if cd.is_negative() { -g } else { g };
        if !g.is_one() {
            num = num.div_scalar(&g);
            den = den.div_scalar(&g);
        }
        Coeff { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the element is a Laurent polynomial in `v` with integer coefficients.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// If the element is `c * v^k` with integer `c`, returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        if self.den.is_one() && self.num.coeffs().len() == 1 {
            Some((self.num.coeffs()[0].clone(), self.shift))
        } else {
            None
        }
    }

    /// If the element is a rational constant, returns it.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.shift == 0 && self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.constant_term(), self.den.constant_term()))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::finish(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> Self {
        if n < 0 {
            return self.inv().expect("negative power of zero").pow(-n);
        }
        let mut acc = Coeff::one();
        let mut base = self.clone();
        let mut e = n as u64;
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

    /// Evaluates at `v = value` after cancellation, so removable singularities
    /// evaluate to their limit.
    pub fn specialize(&self, value: &BigRational) -> Result<BigRational, CoeffError> {
        if value.is_zero() {
            return Err(CoeffError::ZeroPoint);
        }
        let d = self.den.eval_rational(value);
        if d.is_zero() {
            return Err(CoeffError::Pole(value.clone()));
        }
        let n = self.num.eval_rational(value);
        let vp = if self.shift >= 0 {
            num_traits::pow(value.clone(), self.shift as usize)
        } else {
            num_traits::pow(value.recip(), (-self.shift) as usize)
        };
        Ok(n / d * vp)
    }

    /// Specialization at `v = 1`.
    pub fn at_one(&self) -> Result<BigRational, CoeffError> {
        self.specialize(&BigRational::one())
    }

    /// Formal substitution `v -> v^m`, `m >= 1`.
    pub fn subs_pow(&self, m: i64) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        if m == 1 {
            return self.clone();
        }
        let m = m as usize;
        Coeff::from_parts(self.shift * m as i64, self.num.spread(m), self.den.spread(m))
    }

    /// Formal substitution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0) as i64;
        let dd = self.den.degree().unwrap_or(0) as i64;
        let rev = |p: &IntPoly| IntPoly::from_coeffs(p.coeffs().iter().rev().cloned().collect());
        Coeff::from_parts(-self.shift - dn + dd, rev(&self.num), rev(&self.den))
    }

    /// Aligns two Laurent numerators to a common shift.
    fn aligned(a: &Coeff, b: &Coeff) -> (i64, IntPoly, IntPoly) {
        let s = a.shift.min(b.shift);
        (s, a.num.shift_up((a.shift - s) as usize), b.num.shift_up((b.shift - s) as usize))
    }

    fn add_ref(&self, other: &Coeff) -> Coeff {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (s, a, b) = Self::aligned(self, other);
        if self.den == other.den {
            let num = a.add(&b);
            if self.den.is_constant() {
                return Self::finish_int_den(s, num, self.den.clone());
            }
            return Coeff::from_parts(s, num, self.den.clone());
        }
        if self.den.is_constant() && other.den.is_constant() {
            let da = self.den.constant_term();
            let db = other.den.constant_term();
            let num = a.scale(&db).add(&b.scale(&da));
            return Self::finish_int_den(s, num, IntPoly::constant(da * db));
        }
        let g = self.den.gcd(&other.den);
        let (ra, rb) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (self.den.div_exact(&g).unwrap(), other.den.div_exact(&g).unwrap())
        };
        let num = a.mul(&rb).add(&b.mul(&ra));
        let den = self.den.mul(&rb);
        if g.is_one() {
            // num is coprime to ra*rb; only content needs fixing
            if num.is_zero() {
                return Coeff::zero();
            }
            return Self::finish(s, num, den);
        }
        Coeff::from_parts(s, num, den)
    }

    fn finish_int_den(s: i64, num: IntPoly, den: IntPoly) -> Coeff {
        if num.is_zero() {
            return Coeff::zero();
        }
        Self::finish(s, num, den)
    }

    fn mul_ref(&self, other: &Coeff) -> Coeff {
        if self.is_zero() || other.is_zero() {
            return Coeff::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_constant() && other.den.is_constant() {
            let num = self.num.mul(&other.num);
            let den = IntPoly::constant(self.den.constant_term() * other.den.constant_term());
            return Self::finish(shift, num, den);
        }
        // cross-cancel before multiplying
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::finish(shift, n1.mul(&n2), d1.mul(&d2))
    }
}

fn cancel(n: &IntPoly, d: &IntPoly) -> (IntPoly, IntPoly) {
    if d.is_constant() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = n.gcd(d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Coeff> for &Coeff {
            type Output = Coeff;
            fn $m(self, rhs: &Coeff) -> Coeff {
                let f: fn(&Coeff, &Coeff) -> Coeff = $body;
                f(self, rhs)
            }
        }
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: &Coeff) -> Coeff {
                (&self).$m(rhs)
            }
        }
        impl $tr<Coeff> for &Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.mul_ref(&b.inv().expect("division by zero in Q(v)")));

impl std::iter::Sum for Coeff {
    fn sum<I: Iterator<Item = Coeff>>(iter: I) -> Coeff {
        iter.fold(Coeff::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Coeff {
    fn product<I: Iterator<Item = Coeff>>(iter: I) -> Coeff {
        iter.fold(Coeff::one(), |a, b| a * b)
    }
}

fn fmt_laurent(f: &mut fmt::Formatter<'_>, shift: i64, p: &IntPoly) -> fmt::Result {
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = k as i64 + shift;
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if e == 0 {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "v^{e}")?;
        } else {
            write!(f, "{a}*v^{e}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Canonical text form `(P(v))/(Q(v))`, or just `P(v)` when the denominator is 1.
impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return fmt_laurent(f, self.shift, &self.num);
        }
        write!(f, "(")?;
        fmt_laurent(f, self.shift, &self.num)?;
        write!(f, ")/(")?;
        fmt_laurent(f, 0, &self.den)?;
        write!(f, ")")
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Coeff {
    type Err = ParseCoeffError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_coeff(s)
    }
}

impl serde::Serialize for Coeff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The subscripted quantum parameter `q_i = q^(d_i) = v^(2 d d_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubscriptedQ {
    /// The session exponent `d` with `v = q^(1/2d)`.
    pub d: i64,
    /// Root length index `d_i`.
    pub root_length: i64,
}

impl SubscriptedQ {
    pub fn new(d: i64, root_length: i64) -> Self {
        assert!(d > 0 && root_length > 0);
        SubscriptedQ { d, root_length }
    }

    /// Exponent of `v` in `q_i`.
    pub fn v_exponent(&self) -> i64 {
        2 * self.d * self.root_length
    }

    pub fn q(&self) -> Coeff {
        Coeff::v_pow(self.v_exponent())
    }
}

/// `q = v^(2d)` raised to a rational power; `None` unless the result is an integer power of `v`.
pub fn q_power(d: i64, exponent: &BigRational) -> Option<Coeff> {
    let e = exponent * BigRational::from_integer(BigInt::from(2 * d));
    if e.is_integer() {
        let k: i64 = e.to_integer().try_into().ok()?;
        Some(Coeff::v_pow(k))
    } else {
        None
    }
}

/// Quantum integer `[n]_{q_i}`; odd in `n`.
pub fn qint(n: i64, sub: SubscriptedQ) -> Coeff {
    if n == 0 {
        return Coeff::zero();
    }
    if n < 0 {
        return -qint(-n, sub);
    }
    let e = sub.v_exponent();
    (0..n).map(|k| Coeff::v_pow(e * (n - 1 - 2 * k))).sum()
}

pub fn qfactorial(n: i64, sub: SubscriptedQ) -> Result<Coeff, CoeffError> {
    if n < 0 {
        return Err(CoeffError::BinomialRange { m: n, n });
    }
    Ok((1..=n).map(|k| qint(k, sub)).product())
}

/// Gaussian binomial `[m choose n]_{q_i}`, always a Laurent polynomial.
pub fn qbinom(m: i64, n: i64, sub: SubscriptedQ) -> Result<Coeff, CoeffError> {
    if n < 0 || n > m {
        return Err(CoeffError::BinomialRange { m, n });
    }
    let top: Coeff = ((m - n + 1)..=m).map(|k| qint(k, sub)).product();
    Ok(top / qfactorial(n, sub)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn substitution_of_powers() {
        let x = Coeff::laurent(&[(1, 1), (-1, 1)]) / Coeff::laurent(&[(0, 1), (2, -1)]);
        let y = x.subs_pow(3);
        let expect = Coeff::laurent(&[(3, 1), (-3, 1)]) / Coeff::laurent(&[(0, 1), (6, -1)]);
        assert_eq!(y, expect);
    }

    #[test]
    fn qint_two_is_q_plus_q_inverse() {
        let s = SubscriptedQ::new(1, 1);
        assert_eq!(qint(2, s), Coeff::v_pow(2) + Coeff::v_pow(-2));
        assert_eq!(qint(1, SubscriptedQ::new(3, 2)), Coeff::one());
        assert_eq!(qint(3, s).at_one().unwrap(), rat(3, 1));
    }

    #[test]
    fn qint_is_ratio_definition() {
        let s = SubscriptedQ::new(2, 1);
        let q = s.q();
        for n in -5..=5 {
            let def = (q.pow(n) - q.pow(-n)) / (&q - q.inv().unwrap());
            assert_eq!(qint(n, s), def, "n = {n}");
        }
    }

    #[test]
    fn small_binomials() {
        let s = SubscriptedQ::new(1, 1);
        assert_eq!(qbinom(2, 1, s).unwrap(), qint(2, s));
        assert_eq!(qfactorial(0, s).unwrap(), Coeff::one());
        assert_eq!(qbinom(4, 2, s).unwrap().at_one().unwrap(), rat(6, 1));
        assert!(qbinom(2, 3, s).is_err());
        assert!(qbinom(2, 2, s).unwrap().is_laurent());
    }

    #[test]
    fn cancellation_before_evaluation() {
        let q = Coeff::v_pow(2);
        let x = &q - q.inv().unwrap();
        assert_eq!((&x / &x).at_one().unwrap(), rat(1, 1));
        // (1 - v)/(1 - q^-2) with d = 1: limit at v = 1 is -1/4
        let y = (Coeff::one() - Coeff::v_pow(1)) / (Coeff::one() - Coeff::v_pow(-4));
        assert_eq!(y.at_one().unwrap(), rat(-1, 4));
    }

    #[test]
    fn pole_is_reported() {
        let x = Coeff::one() / (Coeff::v_pow(1) - Coeff::one());
        assert!(matches!(x.at_one(), Err(CoeffError::Pole(_))));
        assert_eq!(Coeff::one().specialize(&rat(0, 1)), Err(CoeffError::ZeroPoint));
    }

    #[test]
    fn display_round_trip() {
        let x = (Coeff::laurent(&[(3, 2), (-1, -1)])) / Coeff::laurent(&[(0, 1), (4, 1)]);
        let s = x.to_string();
        assert_eq!(s.parse::<Coeff>().unwrap(), x);
        assert_eq!(Coeff::from_int(-3).to_string(), "-3");
    }

    fn small_coeff() -> impl Strategy<Value = Coeff> {
        (prop::collection::vec((-3i64..=3, -4i64..=4), 1..4), prop::collection::vec((-2i64..=2, 0i64..=3), 1..3))
            .prop_map(|(n, d)| {
                let num = Coeff::laurent(&n);
                let den = Coeff::laurent(&d);
                if den.is_zero() {
                    num
                } else {
                    num / den
                }
            })
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_coeff(), b in small_coeff(), c in small_coeff()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn qbinom_symmetry(m in 0i64..=8, n in 0i64..=8) {
            prop_assume!(n <= m);
            let s = SubscriptedQ::new(1, 1);
            prop_assert_eq!(qbinom(m, n, s).unwrap(), qbinom(m, m - n, s).unwrap());
        }

        #[test]
        fn qint_classical_limit(n in -12i64..=12, d in 1i64..=3, di in 1i64..=3) {
            let r = qint(n, SubscriptedQ::new(d, di)).at_one().unwrap();
            prop_assert_eq!(r, BigRational::from_integer(n.into()));
        }

        #[test]
        fn cross_multiplication_equality(a in small_coeff(), b in small_coeff()) {
            prop_assume!(!b.is_zero());
            let x = &a / &b;
            prop_assert_eq!(&x * &b, a);
        }
    }
}
