//! Twisted Hopf structure: coproduct, antipode, counit, right adjoint action.

pub mod checks;
mod tensor;

pub use tensor::Tensor;

use crate::coeff::Coeff;
use crate::linalg::rat;
use crate::pbw::{Algebra, Elem, Form, Letter, Mono, PbwError, RootLetter};
use crate::realization::{QMatrix, Realization};
use num_rational::BigRational;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error("the gammas of the first involution are not simple roots")]
    NotSimple,
}

pub struct Hopf {
    pub alg: Algebra,
    /// `exp(h d_i (2/(1-s) P + P^perp) H_i)` per simple root.
    twist: Vec<Vec<i64>>,
    /// `exp(h d_i C H_i)` per simple root.
    cay: Vec<Vec<i64>>,
    /// `exp(h (2/(1-s) P + P^perp) beta^vee)` per root position.
    twist_root: Vec<Vec<i64>>,
    segment: Option<(usize, usize)>,
    simple_flag: bool,
    expansions: HashMap<RootLetter, Vec<(Vec<usize>, Coeff)>>,
    delta_memo: HashMap<RootLetter, Tensor>,
}

fn column(m: &QMatrix, j: usize) -> Vec<BigRational> {
    (0..m.rows).map(|r| m.get(r, j).clone()).collect()
}

impl Hopf {
    fn build(alg: Algebra, twist_m: &QMatrix, cay_m: &QMatrix, segment: Option<(usize, usize)>, simple_flag: bool) -> Result<Self, PbwError> {
        let l = alg.rank();
        let mut twist = Vec::new();
        let mut cay = Vec::new();
        for i in 0..l {
            twist.push(alg.texp_of_hstar("Delta(e_i) torus", &column(twist_m, i))?);
            cay.push(alg.texp_of_hstar("Delta(f_i) torus", &column(cay_m, i))?);
        }
        let mut twist_root = Vec::new();
        for b in &alg.ordering {
            let br: Vec<BigRational> = b.iter().map(|&x| rat(x, 1)).collect();
            twist_root.push(alg.texp_of_hstar("root torus", &twist_m.apply(&br))?);
        }
        Ok(Hopf {
            alg,
            twist,
            cay,
            twist_root,
            segment,
            simple_flag,
            expansions: HashMap::new(),
            delta_memo: HashMap::new(),
        })
    }

    pub fn for_realization(r: &Realization) -> Result<Self, PbwError> {
        let alg = Algebra::for_realization(r)?;
        Self::build(alg, &r.consts.e_twist(), &r.consts.cayley, r.segment, r.simple_flag)
    }

    /// The standard Hopf structure (`s = 1`).
    pub fn standard(alg: Algebra) -> Result<Self, PbwError> {
        let l = alg.rank();
        Self::build(alg, &QMatrix::identity(l), &QMatrix::zeros(l, l), None, true)
    }

    pub fn twist_exp(&self, i: usize) -> &[i64] {
        &self.twist[i]
    }

    /// `exp(h (2/(1-s) P + P^perp) beta^vee)` for the root at position `k`.
    pub fn twist_root_exp(&self, k: usize) -> &[i64] {
        &self.twist_root[k]
    }

    pub fn cayley_exp(&self, i: usize) -> &[i64] {
        &self.cay[i]
    }

    fn expansion(&mut self, x: RootLetter) -> Result<Vec<(Vec<usize>, Coeff)>, PbwError> {
        if let Some(e) = self.expansions.get(&x) {
            return Ok(e.clone());
        }
        let e = self.alg.simple_expansion(x.index(), matches!(x, RootLetter::E(_)))?;
        self.expansions.insert(x, e.clone());
        Ok(e)
    }

    fn neg_exp(t: &[i64]) -> Vec<i64> {
        t.iter().map(|x| -x).collect()
    }

    fn delta_simple(&self, i: usize, plus: bool) -> Tensor {
        let a = &self.alg;
        if plus {
            let e = a.e_simple(i);
            let mut out = Tensor::pure(&[&e, &a.torus(self.twist[i].clone())]);
            out = out.add(&Tensor::pure(&[&a.unit(), &e]));
            out
        } else {
            let f = a.f_simple(i);
            let mut out = Tensor::pure(&[&f, &a.torus(Self::neg_exp(&self.cay[i]))]);
            out = out.add(&Tensor::pure(&[&a.k(i, -1), &f]));
            out
        }
    }

    fn delta_letter(&mut self, x: RootLetter) -> Result<Tensor, PbwError> {
        if let Some(t) = self.delta_memo.get(&x) {
            return Ok(t.clone());
        }
        let plus = matches!(x, RootLetter::E(_));
        let mut out = Tensor::zero();
        for (w, c) in self.expansion(x)? {
            let mut acc = Tensor::pure(&[&self.alg.unit(), &self.alg.unit()]);
            for i in w {
                let d = self.delta_simple(i, plus);
                acc = acc.mul(&d, &mut self.alg)?;
            }
            out.add_scaled(&acc, &c);
        }
        self.delta_memo.insert(x, out.clone());
        Ok(out)
    }

    pub fn coproduct_mono(&mut self, m: &Mono) -> Result<Tensor, PbwError> {
        let mut acc = Tensor::pure(&[&self.alg.unit(), &self.alg.unit()]);
        for l in m.letters(Form::Standard) {
            let d = match l {
                Letter::Root(r) => self.delta_letter(r)?,
                Letter::Torus(t) => {
                    let tt = self.alg.torus(t);
                    Tensor::pure(&[&tt, &tt])
                }
            };
            acc = acc.mul(&d, &mut self.alg)?;
        }
        Ok(acc)
    }

    pub fn coproduct(&mut self, x: &Elem) -> Result<Tensor, PbwError> {
        let mut out = Tensor::zero();
        for (m, c) in &x.terms {
            let d = self.coproduct_mono(m)?;
            out.add_scaled(&d, c);
        }
        Ok(out)
    }

    pub fn counit(&self, x: &Elem) -> Coeff {
        let mut out = Coeff::zero();
        for (m, c) in &x.terms {
            if m.e.iter().chain(&m.f).all(|&r| r == 0) {
                out = &out + c;
            }
        }
        out
    }

    fn antipode_simple(&mut self, i: usize, plus: bool, inverse: bool) -> Result<Elem, PbwError> {
        let a = &mut self.alg;
        let r = if plus {
            let e = a.e_simple(i);
            let t = a.torus(Self::neg_exp(&self.twist[i]));
            if inverse { a.mul(&t, &e)? } else { a.mul(&e, &t)? }
        } else {
            let f = a.f_simple(i);
            let k = a.k(i, 1);
            let c = a.torus(self.cay[i].clone());
            if inverse { a.mul_all(&[&c, &f, &k])? } else { a.mul_all(&[&k, &f, &c])? }
        };
        Ok(r.neg())
    }

    fn antipode_letter(&mut self, x: RootLetter, inverse: bool) -> Result<Elem, PbwError> {
        let plus = matches!(x, RootLetter::E(_));
        let mut out = Elem::zero();
        for (w, c) in self.expansion(x)? {
            let mut acc = self.alg.unit();
            for &i in w.iter().rev() {
                let s = self.antipode_simple(i, plus, inverse)?;
                acc = self.alg.mul(&acc, &s)?;
            }
            out.add_scaled(&acc, &c);
        }
        Ok(out)
    }

    fn antipode_impl(&mut self, x: &Elem, inverse: bool) -> Result<Elem, PbwError> {
        let mut out = Elem::zero();
        for (m, c) in &x.terms {
            let mut acc = self.alg.unit();
            for l in m.letters(Form::Standard).into_iter().rev() {
                let s = match l {
                    Letter::Root(r) => self.antipode_letter(r, inverse)?,
                    Letter::Torus(t) => self.alg.torus(Self::neg_exp(&t)),
                };
                acc = self.alg.mul(&acc, &s)?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    pub fn antipode(&mut self, x: &Elem) -> Result<Elem, PbwError> {
        self.antipode_impl(x, false)
    }

    pub fn antipode_inverse(&mut self, x: &Elem) -> Result<Elem, PbwError> {
        self.antipode_impl(x, true)
    }

    /// `Ad x(w) = S^-1(x_2) w x_1`.
    pub fn adjoint(&mut self, x: &Elem, w: &Elem) -> Result<Elem, PbwError> {
        let d = self.coproduct(x)?;
        let mut out = Elem::zero();
        for (k, c) in &d.terms {
            let x1 = Elem::from_mono(k[0].clone());
            let x2 = Elem::from_mono(k[1].clone());
            let s = self.antipode_inverse(&x2)?;
            let p = self.alg.mul_all(&[&s, w, &x1])?;
            out.add_scaled(&p, c);
        }
        Ok(out)
    }

    fn in_segment(&self, k: usize) -> bool {
        matches!(self.segment, Some((lo, hi)) if k >= lo && k <= hi)
    }

    /// `Delta(x)` lies in `U(m_+) (x) U(b_+)`.
    pub fn coideal_membership(&mut self, x: &Elem) -> Result<bool, HopfError> {
        if !self.simple_flag {
            return Err(HopfError::NotSimple);
        }
        let d = self.coproduct(x)?;
        let n = self.alg.nroots();
        Ok(d.terms.keys().all(|k| self.left_in_m(&k[0], 0..n) && k[1].f.iter().all(|&r| r == 0)))
    }

    /// Left factor in `U(m_+)`, using only roots at positions in `range`.
    fn left_in_m(&self, m: &Mono, range: std::ops::Range<usize>) -> bool {
        !m.has_torus()
            && m.f.iter().all(|&r| r == 0)
            && m.e.iter().enumerate().all(|(k, &r)| r == 0 || (self.in_segment(k) && range.contains(&k)))
    }

    /// Splits `Delta(e_beta_k) = e_beta_k (x) exp(h(..) beta^vee) + 1 (x) e_beta_k + x`.
    /// Reports whether the left factors of `x` use only segment roots before
    /// `beta_k`, only segment roots after it, and whether right factors lie in `U(b_+)`.
    pub fn cm1_check(&mut self, k: usize) -> Result<Cm1, HopfError> {
        if !self.simple_flag {
            return Err(HopfError::NotSimple);
        }
        let e = self.alg.e(k);
        let d = self.coproduct(&e)?;
        let named = Tensor::pure(&[&e, &self.alg.torus(self.twist_root[k].clone())])
            .add(&Tensor::pure(&[&self.alg.unit(), &e]));
        let rest = d.sub(&named);
        let n = self.alg.nroots();
        let before = rest.terms.keys().all(|key| self.left_in_m(&key[0], 0..k));
        let after = rest.terms.keys().all(|key| self.left_in_m(&key[0], k + 1..n));
        let right_b = rest.terms.keys().all(|key| key[1].f.iter().all(|&r| r == 0));
        Ok(Cm1 { before, after, right_b, rest })
    }
}

#[derive(Clone, Debug)]
pub struct Cm1 {
    pub before: bool,
    pub after: bool,
    pub right_b: bool,
    pub rest: Tensor,
}

#[cfg(test)]
mod tests;
