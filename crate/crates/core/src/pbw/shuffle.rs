//! Quantum shuffle model of `U_q(n_+)`.
//!
//! Words are sequences of simple-root indices. The braiding is diagonal with
//! `q^(alpha_a, alpha_b)` per crossing, and the map sending `X_i` to the
//! one-letter word `[i]` identifies `U_q(n_+)` with the subalgebra of the
//! shuffle algebra generated by letters, so equality in `U_q(n_+)` is
//! equality of shuffle images. Coefficients use the variable `u = q^(1/2)`.

use crate::coeff::Coeff;
use std::collections::{BTreeMap, HashMap};

pub type Word = Vec<u8>;
pub type ShVec = BTreeMap<Word, Coeff>;

/// Accumulates a sparse vector.
pub fn add_into<K: Ord + Clone>(acc: &mut BTreeMap<K, Coeff>, k: &K, c: &Coeff) {
    if c.is_zero() {
        return;
    }
    if let Some(x) = acc.get_mut(k) {
        *x = &*x + c;
        if x.is_zero() {
            acc.remove(k);
        }
    } else {
        acc.insert(k.clone(), c.clone());
    }
}

pub struct Shuffler {
    /// Symmetric form `(alpha_i, alpha_j)`.
    form: Vec<Vec<i64>>,
    phi_memo: HashMap<Word, ShVec>,
    pair_memo: HashMap<(Word, Word), Vec<(Word, i64)>>,
}

impl Shuffler {
    pub fn new(form: Vec<Vec<i64>>) -> Self {
        Shuffler { form, phi_memo: HashMap::new(), pair_memo: HashMap::new() }
    }

    fn pair_letter_word(&self, a: u8, w: &[u8]) -> i64 {
        w.iter().map(|&b| self.form[a as usize][b as usize]).sum()
    }

    /// Shuffles of two words with their `u`-exponents (one entry per path).
    fn shuffle_words(&mut self, x: &[u8], y: &[u8]) -> Vec<(Word, i64)> {
        if x.is_empty() {
            return vec![(y.to_vec(), 0)];
        }
        if y.is_empty() {
            return vec![(x.to_vec(), 0)];
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(r) = self.pair_memo.get(&key) {
            return r.clone();
        }
        let (xa, a) = (&x[..x.len() - 1], x[x.len() - 1]);
        let (yb, b) = (&y[..y.len() - 1], y[y.len() - 1]);
        let mut out = Vec::new();
        // last letter from x: every letter of y crossed it
        let e = 2 * self.pair_letter_word(a, y);
        for (mut w, k) in self.shuffle_words(xa, y) {
            w.push(a);
            out.push((w, k + e));
        }
        for (mut w, k) in self.shuffle_words(x, yb) {
            w.push(b);
            out.push((w, k));
        }
        self.pair_memo.insert(key, out.clone());
        out
    }

    pub fn product(&mut self, x: &ShVec, y: &ShVec) -> ShVec {
        let mut acc: BTreeMap<Word, BTreeMap<i64, i64>> = BTreeMap::new();
        let mut out = ShVec::new();
        for (wx, cx) in x {
            for (wy, cy) in y {
                let c = cx * cy;
                if c.as_monomial().is_some_and(|(n, _)| n == 1.into()) {
                    let (_, k0) = c.as_monomial().unwrap();
                    for (w, k) in self.shuffle_words(wx, wy) {
                        *acc.entry(w).or_default().entry(k + k0).or_insert(0) += 1;
                    }
                } else {
                    for (w, k) in self.shuffle_words(wx, wy) {
                        add_into(&mut out, &w, &(&c * &Coeff::v_pow(k)));
                    }
                }
            }
        }
        for (w, exps) in acc {
            let terms: Vec<(i64, i64)> = exps.into_iter().filter(|&(_, n)| n != 0).collect();
            add_into(&mut out, &w, &Coeff::laurent(&terms));
        }
        out
    }

    /// Image of a word of generators.
    pub fn phi(&mut self, w: &[u8]) -> ShVec {
        if let Some(r) = self.phi_memo.get(w) {
            return r.clone();
        }
        let r = if w.is_empty() {
            let mut v = ShVec::new();
            v.insert(Vec::new(), Coeff::one());
            v
        } else {
            let head = self.phi(&w[..w.len() - 1]);
            let mut one = ShVec::new();
            one.insert(vec![w[w.len() - 1]], Coeff::one());
            self.product(&head, &one)
        };
        self.phi_memo.insert(w.to_vec(), r.clone());
        r
    }

    /// Image of a linear combination of words.
    pub fn phi_sum<'a>(&mut self, terms: impl IntoIterator<Item = (&'a Word, &'a Coeff)>) -> ShVec {
        let mut out = ShVec::new();
        for (w, c) in terms {
            for (x, cx) in self.phi(w) {
                add_into(&mut out, &x, &(&cx * c));
            }
        }
        out
    }
}

/// Incremental row echelon form over sparse vectors, remembering how each
/// reduced row is expressed in the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<(K, BTreeMap<K, Coeff>, Vec<Coeff>)>,
    count: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), count: 0 }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    fn reduce(&self, v: &BTreeMap<K, Coeff>, combo: &mut Vec<Coeff>) -> BTreeMap<K, Coeff> {
        let mut v = v.clone();
        for (p, row, rc) in &self.rows {
            if let Some(c) = v.get(p).cloned() {
                for (k, x) in row {
                    add_into(&mut v, k, &-(&c * x));
                }
                for (i, x) in rc.iter().enumerate() {
                    combo[i] = &combo[i] - &(&c * x);
                }
            }
        }
        v
    }

    /// Inserts a vector; returns false (and does not record it) if it is
    /// dependent on the previous ones.
    pub fn insert(&mut self, v: &BTreeMap<K, Coeff>) -> bool {
        let n = self.count;
        let mut combo = vec![Coeff::zero(); n + 1];
        combo[n] = Coeff::one();
        let r = self.reduce(v, &mut combo);
        let Some((p, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let row: BTreeMap<K, Coeff> = r.iter().map(|(k, c)| (k.clone(), c * &inv)).collect();
        let combo: Vec<Coeff> = combo.iter().map(|c| c * &inv).collect();
        // keep earlier rows reduced against the new pivot
        for (_, orow, oc) in self.rows.iter_mut() {
            if let Some(c) = orow.get(&p).cloned() {
                for (k, x) in &row {
                    add_into(orow, k, &-(&c * x));
                }
                oc.resize(n + 1, Coeff::zero());
                for (i, x) in combo.iter().enumerate() {
                    oc[i] = &oc[i] - &(&c * x);
                }
            }
        }
        for (_, _, oc) in self.rows.iter_mut() {
            oc.resize(n + 1, Coeff::zero());
        }
        self.rows.push((p, row, combo));
        self.count += 1;
        true
    }

    /// Coordinates of `v` in the inserted vectors, or `None` if outside the span.
    pub fn decode(&self, v: &BTreeMap<K, Coeff>) -> Option<Vec<Coeff>> {
        let n = self.count;
        let mut combo = vec![Coeff::zero(); n];
        let r = self.reduce(v, &mut combo);
        if !r.is_empty() {
            return None;
        }
        Some(combo.into_iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Shuffler {
        Shuffler::new(vec![vec![2, -1], vec![-1, 2]])
    }

    #[test]
    fn serre_element_vanishes() {
        // x1^2 x2 - [2] x1 x2 x1 + x2 x1^2 with [2] = u^2 + u^-2
        let mut s = a2();
        let two = Coeff::laurent(&[(2, 1), (-2, 1)]);
        let mut v = s.phi(&[0, 0, 1]);
        for (w, c) in s.phi(&[0, 1, 0]) {
            add_into(&mut v, &w, &-(&c * &two));
        }
        for (w, c) in s.phi(&[1, 0, 0]) {
            add_into(&mut v, &w, &c);
        }
        assert!(v.is_empty());
    }

    #[test]
    fn distinct_words_are_independent_in_degree_two() {
        let mut s = a2();
        let mut e = Echelon::new();
        assert!(e.insert(&s.phi(&[0, 1])));
        assert!(e.insert(&s.phi(&[1, 0])));
        let target = s.phi(&[0, 1]);
        let c = e.decode(&target).unwrap();
        assert!(c[0].is_one() && c[1].is_zero());
    }

    #[test]
    fn echelon_detects_dependence() {
        let mut e: Echelon<u8> = Echelon::new();
        let v1: BTreeMap<u8, Coeff> = [(0, Coeff::one()), (1, Coeff::from_int(2))].into();
        let v2: BTreeMap<u8, Coeff> = [(1, Coeff::one())].into();
        assert!(e.insert(&v1));
        assert!(e.insert(&v2));
        assert!(!e.insert(&[(0, Coeff::from_int(3))].into()));
        let c = e.decode(&[(0, Coeff::one())].into()).unwrap();
        assert_eq!(c, vec![Coeff::one(), Coeff::from_int(-2)]);
    }
}
