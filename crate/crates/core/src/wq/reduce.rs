use super::character::WhittakerCharacter;
use super::WqError;
use crate::coeff::Coeff;
use crate::hopf::Hopf;
use crate::pbw::{Algebra, Elem};

/// Canonical coset representatives modulo the left ideal `I_q` generated by
/// `e~_beta - chi(e~_beta)`, `beta` in the segment.
///
/// In the `f t e` normal form the segment root vectors are the rightmost
/// factors (the segment starts the ordering), so `x e_beta = chi(e_beta) x`
/// modulo `I_q` peels them off one at a time without any straightening.
pub struct IdealReducer {
    pub chi: WhittakerCharacter,
    /// `chi(e_beta)` per ordering position, zero off the segment.
    values: Vec<Coeff>,
}

impl IdealReducer {
    pub fn new(alg: &Algebra, chi: WhittakerCharacter) -> Self {
        let values = (0..alg.nroots()).map(|k| if chi.in_segment(k) { chi.value(alg, k) } else { Coeff::zero() }).collect();
        IdealReducer { chi, values }
    }

    /// Representative of `x + I_q`, `x` in standard form; the result is in
    /// the `f t e` form with no segment `e`-factors.
    pub fn reduce(&self, alg: &mut Algebra, x: &Elem) -> Result<Elem, WqError> {
        let y = alg.to_e_right(x);
        self.reduce_e_right(&y)
    }

    pub fn reduce_e_right(&self, y: &Elem) -> Result<Elem, WqError> {
        let (lo, _) = self.chi.segment;
        let mut out = Elem::zero();
        for (m, c) in &y.terms {
            if m.e[..lo].iter().any(|&r| r != 0) {
                return Err(WqError::Unsupported("e-factors right of the segment".into()));
            }
            let mut coeff = c.clone();
            let mut rest = m.clone();
            for k in 0..m.e.len() {
                if self.chi.in_segment(k) && m.e[k] > 0 {
                    coeff = &coeff * &self.values[k].pow(m.e[k] as i64);
                    rest.e[k] = 0;
                }
            }
            if !coeff.is_zero() {
                out.add_term(rest, coeff);
            }
        }
        Ok(out)
    }

    /// `e~_beta - chi(e~_beta)` in standard form.
    pub fn generator(&self, alg: &Algebra, pos: usize) -> Elem {
        let scale = &Coeff::one() - &alg.q_beta(pos).pow(-2);
        let mut g = alg.e(pos).scale(&scale);
        g = g.sub(&alg.scalar(self.chi.tilde_value(pos)));
        g
    }

    fn segment(&self) -> std::ops::RangeInclusive<usize> {
        self.chi.segment.0..=self.chi.segment.1
    }

    /// `(e~_beta - chi(e~_beta)) x` lies in `I_q` for every segment root.
    /// `x` is a representative in the `f t e` form.
    pub fn whittaker_test(&self, alg: &mut Algebra, x: &Elem) -> Result<bool, WqError> {
        let xs = alg.from_e_right(x);
        for pos in self.segment() {
            let g = self.generator(alg, pos);
            let p = alg.mul(&g, &xs)?;
            if !self.reduce(alg, &p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Ad e_beta (x)` lies in `I_q` for every segment root (`epsilon(e_beta) = 0`).
    pub fn ad_invariance_test(&self, h: &mut Hopf, x: &Elem) -> Result<bool, WqError> {
        let xs = h.alg.from_e_right(x);
        for pos in self.segment() {
            let e = h.alg.e(pos);
            let a = h.adjoint(&e, &xs)?;
            if !self.reduce(&mut h.alg, &a)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
