//! Structure attached to a Weyl group element: Carter decomposition,
//! associated normal ordering, the segment `Delta_{m_+}` and the twist
//! constants.

mod carter;
mod constants;

pub use carter::{
    associate, carter_decompositions, dimm_value, fixed_positive_count, moved_dimension, Association,
    CarterDecomposition, ReducedFlags,
};
pub use constants::{form_q, qmatrix_strings, Constants, QMatrix, RealizationError};

use crate::lie::{Root, RootSystem, WeylElement};

/// A Weyl element placed in its associated positive system. After the
/// search, `s` is rewritten as `w^-1 s w` so that the associated system is
/// the standard one and all downstream algebra uses standard simple roots.
#[derive(Clone, Debug)]
pub struct Realization {
    pub rs: RootSystem,
    /// The element as given by the user.
    pub s_input: WeylElement,
    pub assoc: Association,
    /// The conjugated element the algebra is built from.
    pub s: WeylElement,
    pub consts: Constants,
    pub ordering: Vec<Root>,
    pub w0_word: Vec<usize>,
    pub gammas: Vec<Root>,
    /// Number of gammas in the first involution.
    pub n_first: usize,
    /// Positions `[lo, hi]` of the segment in the ordering.
    pub segment: Option<(usize, usize)>,
    pub d0: usize,
    pub length: usize,
    /// `gamma_1 .. gamma_n` are simple roots (or `n = 0`).
    pub simple_flag: bool,
    /// Simple roots fixed by `s` (0-based indices).
    pub gamma0: Vec<usize>,
}

impl Realization {
    pub fn new(rs: &RootSystem, s_word: &[usize], w0_word: Option<&[usize]>) -> Result<Self, RealizationError> {
        let s_input = WeylElement::from_word(rs, s_word).map_err(|_| RealizationError::NoCarter(s_word.to_vec()))?;
        let assoc = associate(rs, &s_input, w0_word)?;
        let conj = WeylElement::from_word(rs, &assoc.conjugator_word).expect("valid word");
        let s = s_input.conjugate_by(rs, &conj);
        let consts = Constants::compute(rs, &s)?;
        let gammas = assoc.decomposition.gammas();
        let n_first = assoc.decomposition.first.len();
        let simple_flag = assoc.decomposition.first.iter().all(|g| g.iter().sum::<i64>() == 1);
        let gamma0 = (0..rs.rank).filter(|&i| s.apply(&rs.simple(i)) == rs.simple(i)).collect();
        Ok(Realization {
            rs: rs.clone(),
            s_input,
            segment: assoc.segment_bounds(),
            ordering: assoc.ordering.clone(),
            w0_word: assoc.w0_word.clone(),
            d0: fixed_positive_count(rs, &s),
            length: s.length(rs),
            s,
            consts,
            gammas,
            n_first,
            simple_flag,
            gamma0,
            assoc,
        })
    }

    pub fn lprime(&self) -> usize {
        self.gammas.len()
    }

    pub fn segment_roots(&self) -> Vec<Root> {
        match self.segment {
            Some((lo, hi)) => self.ordering[lo..=hi].to_vec(),
            None => Vec::new(),
        }
    }

    pub fn segment_len(&self) -> usize {
        self.segment.map_or(0, |(lo, hi)| hi - lo + 1)
    }

    pub fn dimm(&self) -> i64 {
        dimm_value(&self.rs, &self.s, self.lprime())
    }

    /// Positive roots in the span of `Gamma_0` (roots of the Levi factor).
    pub fn levi_positive(&self) -> Vec<Root> {
        self.rs
            .positive
            .iter()
            .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || self.gamma0.contains(&i)))
            .cloned()
            .collect()
    }

    /// Positive roots of the nilradical `n`.
    pub fn nil_positive(&self) -> Vec<Root> {
        let levi = self.levi_positive();
        self.rs.positive.iter().filter(|r| !levi.contains(r)).cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CartanType;

    #[test]
    fn a2_coxeter_segment() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let r = Realization::new(&rs, &[0, 1], None).unwrap();
        assert_eq!(r.segment_len(), 3);
        assert_eq!(r.dimm(), 3);
        assert!(r.simple_flag);
        assert_eq!(r.d0, 0);
    }
}
