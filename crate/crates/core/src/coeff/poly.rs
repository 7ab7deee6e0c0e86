//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored from degree 0 upwards with no trailing zeros; the
//! zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// `c * v^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Number of factors of `v` dividing the polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `v^k`; the caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(k <= self.low_order() || self.is_zero());
        if self.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs[k..].to_vec() }
    }

    /// Substitution `v -> v^m` for `m >= 1`.
    pub fn spread(&self, m: usize) -> Self {
        if m == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * m] = c.clone();
        }
        IntPoly { coeffs }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact quotient `self / divisor`, assuming the division leaves no remainder
    /// in `Z[v]`. Returns `None` when it does not.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.lead().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().unwrap();
        let lead = divisor.lead().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &top * c;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            // keep coefficient growth in check
            let p = Self::from_coeffs(rem);
            let c = p.content();
            rem = if c.is_zero() || c.is_one() { p.coeffs } else { p.div_scalar(&c).coeffs };
        }
        Self::from_coeffs(rem)
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            self.clone()
        } else {
            self.div_scalar(&c)
        }
    }

    /// Primitive gcd over `Q[v]`, normalized to positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().normalized_sign();
        }
        if other.is_zero() {
            return self.primitive_part().normalized_sign();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            if b.is_constant() {
                return Self::one();
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.normalized_sign()
    }

    fn normalized_sign(self) -> Self {
        if self.lead().is_some_and(|c| c.is_negative()) {
            self.neg()
        } else {
            self
        }
    }

    pub fn eval_rational(&self, x: &num_rational::BigRational) -> num_rational::BigRational {
        let mut acc = num_rational::BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + num_rational::BigRational::from_integer(c.clone());
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (v-1)(v+2) and (v-1)(v+3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), IntPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
    }

    #[test]
    fn non_monic_gcd() {
        // (2v+1)(v+1) and (2v+1)(v-1)
        let a = p(&[1, 3, 2]);
        let b = p(&[-1, -1, 2]);
        assert_eq!(a.gcd(&b), p(&[1, 2]));
    }
}
