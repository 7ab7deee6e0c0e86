use super::WqError;
use crate::coeff::{q_power, Coeff};
use crate::lie::root_label;
use crate::pbw::checks::{scomm_ee, CheckLine};
use crate::pbw::{Algebra, Elem, Mono};
use crate::realization::Realization;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in the parameters `k_1 .. k_l'` with coefficients in `Q(v)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KPoly {
    pub terms: BTreeMap<Vec<u32>, Coeff>,
}

impl KPoly {
    pub fn zero() -> Self {
        KPoly::default()
    }

    pub fn monomial(exps: Vec<u32>, c: Coeff) -> Self {
        let mut p = KPoly::zero();
        p.add_term(exps, c);
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Coeff) {
        let slot = self.terms.entry(exps.clone()).or_insert_with(Coeff::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add_scaled(&mut self, o: &KPoly, c: &Coeff) {
        for (e, x) in &o.terms {
            self.add_term(e.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ks: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(i, &p)| if p == 1 { format!("k{}", i + 1) } else { format!("k{}^{}", i + 1, p) })
                    .collect();
                if ks.is_empty() {
                    format!("({})", c)
                } else {
                    format!("({})*{}", c, ks.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `chi(e~_gamma_i) = k_i`, zero on the other segment roots.
#[derive(Clone, Debug)]
pub struct WhittakerCharacter {
    /// Positions `[lo, hi]` of `Delta_(m_+)` in the ordering.
    pub segment: (usize, usize),
    /// Ordering position of each `gamma_i`.
    pub gamma_pos: Vec<usize>,
    pub k: Vec<Coeff>,
}

impl WhittakerCharacter {
    pub fn new(r: &Realization, k: Vec<Coeff>) -> Result<Self, WqError> {
        if !r.simple_flag {
            return Err(WqError::NotSimple);
        }
        let segment = r.segment.ok_or(WqError::EmptySegment)?;
        if k.len() != r.gammas.len() {
            return Err(WqError::BadParameters(format!("{} values for {} gammas", k.len(), r.gammas.len())));
        }
        let gamma_pos = r
            .gammas
            .iter()
            .map(|g| r.ordering.iter().position(|b| b == g).expect("gamma in ordering"))
            .collect();
        Ok(WhittakerCharacter { segment, gamma_pos, k })
    }

    pub fn ones(r: &Realization) -> Result<Self, WqError> {
        Self::new(r, vec![Coeff::one(); r.gammas.len()])
    }

    pub fn in_segment(&self, pos: usize) -> bool {
        pos >= self.segment.0 && pos <= self.segment.1
    }

    /// `chi(e~_beta)` for the root at position `pos`.
    pub fn tilde_value(&self, pos: usize) -> Coeff {
        match self.gamma_pos.iter().position(|&p| p == pos) {
            Some(i) => self.k[i].clone(),
            None => Coeff::zero(),
        }
    }

    /// `chi(e_beta) = chi(e~_beta) / (1 - q_beta^-2)`.
    pub fn value(&self, alg: &Algebra, pos: usize) -> Coeff {
        let t = self.tilde_value(pos);
        if t.is_zero() {
            return t;
        }
        let den = &Coeff::one() - &alg.q_beta(pos).pow(-2);
        &t / &den
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifiedRelation {
    pub alpha: String,
    pub beta: String,
    pub q_exponent: String,
    pub rhs: String,
    pub chi_lhs: String,
    pub chi_rhs: String,
}

/// `chi` with symbolic `k_i` on an `e`-only monomial, in `e~` generators.
fn chi_symbolic(alg: &Algebra, ch: &WhittakerCharacter, m: &Mono) -> Option<KPoly> {
    if m.has_torus() || m.f.iter().any(|&r| r != 0) {
        return None;
    }
    let mut exps = vec![0u32; ch.gamma_pos.len()];
    // e^r = e~^r / prod (1 - q_beta^-2)^r
    let mut scale = Coeff::one();
    for (pos, &r) in m.e.iter().enumerate() {
        if r == 0 {
            continue;
        }
        match ch.gamma_pos.iter().position(|&p| p == pos) {
            Some(i) => exps[i] += r,
            None => return Some(KPoly::zero()),
        }
        let den = &Coeff::one() - &alg.q_beta(pos).pow(-2);
        scale = &scale / &den.pow(r as i64);
    }
    Some(KPoly::monomial(exps, scale))
}

/// Applies `chi` with symbolic `k_i` to both sides of every relation
/// `e~_a e~_b - q^x e~_b e~_a = rhs` between segment roots `a < b`.
pub fn certify(alg: &mut Algebra, r: &Realization) -> Result<(Vec<CertifiedRelation>, CheckLine), WqError> {
    let ch = WhittakerCharacter::ones(r)?;
    let (lo, hi) = ch.segment;
    let mut out = Vec::new();
    let mut ok = true;
    let mut outside = 0;
    for a in lo..=hi {
        for b in (a + 1)..=hi {
            let x = scomm_ee(alg, Some(&r.consts.cayley), a, b);
            let qx = q_power(alg.d, &x).ok_or_else(|| WqError::BadParameters("relation exponent".into()))?;
            let scale = &(&Coeff::one() - &alg.q_beta(a).pow(-2)) * &(&Coeff::one() - &alg.q_beta(b).pow(-2));
            let (ea, eb) = (alg.e(a), alg.e(b));
            let ab = alg.mul(&ea, &eb)?;
            let ba = alg.mul(&eb, &ea)?;
            let rhs: Elem = ab.sub(&ba.scale(&qx)).scale(&scale);
            let mut chi_rhs = KPoly::zero();
            for (m, c) in &rhs.terms {
                match chi_symbolic(alg, &ch, m) {
                    Some(p) => chi_rhs.add_scaled(&p, c),
                    None => outside += 1,
                }
            }
            // chi(e~_a) chi(e~_b) (1 - q^x)
            let mut chi_lhs = KPoly::zero();
            let (ia, ib) = (ch.gamma_pos.iter().position(|&p| p == a), ch.gamma_pos.iter().position(|&p| p == b));
            if let (Some(ia), Some(ib)) = (ia, ib) {
                let mut e = vec![0u32; ch.gamma_pos.len()];
                e[ia] += 1;
                e[ib] += 1;
                chi_lhs.add_term(e, &Coeff::one() - &qx);
            }
            ok &= chi_lhs.is_zero() && chi_rhs.is_zero();
            out.push(CertifiedRelation {
                alpha: root_label(&alg.ordering[a]),
                beta: root_label(&alg.ordering[b]),
                q_exponent: x.to_string(),
                rhs: rhs.render(crate::pbw::Form::Standard),
                chi_lhs: chi_lhs.to_string(),
                chi_rhs: chi_rhs.to_string(),
            });
        }
    }
    ok &= outside == 0;
    let line = CheckLine::new(
        format!("character vanishes on segment relations ({})", r.rs.label()),
        ok,
        format!("{} relations, {} terms outside the segment subalgebra", out.len(), outside),
    );
    Ok((out, line))
}
