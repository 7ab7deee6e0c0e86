//! Word model of the standard quantum group.
//!
//! Elements are combinations of `x t^lambda y` with `x` a word in the
//! `X_i^+`, `y` a word in the `X_i^-` and `t^lambda` a torus monomial. Products
//! are straightened with `[X_i^+, X_j^-] = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)`
//! only; the Serre relations are imposed afterwards by passing each side
//! through the shuffle model. The variable is `u = q^(1/2)` and the torus is
//! `t_i = exp(h H_i / 2)`, so `K_i = t_i^(2 d_i)`.

use super::shuffle::{Echelon, ShVec, Shuffler, Word};
use crate::coeff::{qfactorial, Coeff, SubscriptedQ};
use crate::lie::RootSystem;
use std::collections::{BTreeMap, HashMap};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WKey {
    pub x: Word,
    pub t: Vec<i64>,
    pub y: Word,
}

pub type WElem = BTreeMap<WKey, Coeff>;

fn add_term(e: &mut WElem, k: WKey, c: Coeff) {
    super::shuffle::add_into(e, &k, &c);
}

pub struct WordModel {
    pub rank: usize,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
    d: Vec<i64>,
    cross_memo: HashMap<(Word, Word), Vec<(WKey, Coeff)>>,
    pub shuffler: Shuffler,
    bases: HashMap<Vec<i64>, Echelon<Word>>,
    basis_words: HashMap<Vec<i64>, Vec<Word>>,
    decode_memo: HashMap<Word, Vec<(Word, Coeff)>>,
}

impl WordModel {
    pub fn new(rs: &RootSystem) -> Self {
        WordModel {
            rank: rs.rank,
            cartan: rs.cartan.clone(),
            form: rs.form.clone(),
            d: rs.d.clone(),
            cross_memo: HashMap::new(),
            shuffler: Shuffler::new(rs.form.clone()),
            bases: HashMap::new(),
            basis_words: HashMap::new(),
            decode_memo: HashMap::new(),
        }
    }

    pub fn weight(&self, w: &[u8]) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for &a in w {
            out[a as usize] += 1;
        }
        out
    }

    /// `<lambda, alpha>` so that `t^lambda X_alpha t^-lambda = u^<lambda,alpha> X_alpha`.
    pub fn pairing(&self, t: &[i64], wt: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if t[i] != 0 {
                s += t[i] * (0..self.rank).map(|j| self.cartan[i][j] * wt[j]).sum::<i64>();
            }
        }
        s
    }

    fn zero_t(&self) -> Vec<i64> {
        vec![0; self.rank]
    }

    pub fn scalar(&self, c: Coeff) -> WElem {
        let mut e = WElem::new();
        add_term(&mut e, WKey { x: vec![], t: self.zero_t(), y: vec![] }, c);
        e
    }

    pub fn xp(&self, i: usize) -> WElem {
        let mut e = WElem::new();
        add_term(&mut e, WKey { x: vec![i as u8], t: self.zero_t(), y: vec![] }, Coeff::one());
        e
    }

    pub fn xm(&self, i: usize) -> WElem {
        let mut e = WElem::new();
        add_term(&mut e, WKey { x: vec![], t: self.zero_t(), y: vec![i as u8] }, Coeff::one());
        e
    }

    pub fn torus(&self, t: Vec<i64>) -> WElem {
        let mut e = WElem::new();
        add_term(&mut e, WKey { x: vec![], t, y: vec![] }, Coeff::one());
        e
    }

    /// `K_i^sign`.
    pub fn k(&self, i: usize, sign: i64) -> WElem {
        let mut t = self.zero_t();
        t[i] = 2 * self.d[i] * sign;
        self.torus(t)
    }

    fn q_i(&self, i: usize) -> Coeff {
        Coeff::v_pow(2 * self.d[i])
    }

    /// `Y C = sum C' t^lambda Y'` for words `Y` (lowering) and `C` (raising).
    fn cross(&mut self, y: &[u8], c: &[u8]) -> Vec<(WKey, Coeff)> {
        if y.is_empty() || c.is_empty() {
            return vec![(WKey { x: c.to_vec(), t: self.zero_t(), y: y.to_vec() }, Coeff::one())];
        }
        let key = (y.to_vec(), c.to_vec());
        if let Some(r) = self.cross_memo.get(&key) {
            return r.clone();
        }
        let a = y[y.len() - 1] as usize;
        let y0 = &y[..y.len() - 1];
        // single letter: Y_a C
        let mut single: Vec<(WKey, Coeff)> = vec![(WKey { x: c.to_vec(), t: self.zero_t(), y: vec![a as u8] }, Coeff::one())];
        let denom = (self.q_i(a) - self.q_i(a).inv().unwrap()).inv().unwrap();
        for k in 0..c.len() {
            if c[k] as usize != a {
                continue;
            }
            let rest = self.weight(&c[k + 1..]);
            let e: i64 = (0..self.rank).map(|j| self.form[a][j] * rest[j]).sum::<i64>() * 2;
            let mut cw = c[..k].to_vec();
            cw.extend_from_slice(&c[k + 1..]);
            let mut tp = self.zero_t();
            tp[a] = 2 * self.d[a];
            let tm: Vec<i64> = tp.iter().map(|x| -x).collect();
            single.push((WKey { x: cw.clone(), t: tp, y: vec![] }, -(&denom * &Coeff::v_pow(e))));
            single.push((WKey { x: cw, t: tm, y: vec![] }, &denom * &Coeff::v_pow(-e)));
        }
        let mut acc = WElem::new();
        for (k1, c1) in single {
            for (k2, c2) in self.cross(y0, &k1.x) {
                let wy2 = self.weight(&k2.y);
                let ph = Coeff::v_pow(self.pairing(&k1.t, &wy2));
                let t: Vec<i64> = k2.t.iter().zip(&k1.t).map(|(a, b)| a + b).collect();
                let mut yy = k2.y.clone();
                yy.extend_from_slice(&k1.y);
                add_term(&mut acc, WKey { x: k2.x, t, y: yy }, &(&c1 * &c2) * &ph);
            }
        }
        let out: Vec<(WKey, Coeff)> = acc.into_iter().collect();
        self.cross_memo.insert(key, out.clone());
        out
    }

    pub fn mul(&mut self, a: &WElem, b: &WElem) -> WElem {
        let mut out = WElem::new();
        for (k1, c1) in a {
            for (k2, c2) in b {
                let c12 = c1 * c2;
                for (kc, cc) in self.cross(&k1.y, &k2.x) {
                    let ph = self.pairing(&k1.t, &self.weight(&kc.x)) + self.pairing(&k2.t, &self.weight(&kc.y));
                    let mut x = k1.x.clone();
                    x.extend_from_slice(&kc.x);
                    let mut y = kc.y.clone();
                    y.extend_from_slice(&k2.y);
                    let t: Vec<i64> = (0..self.rank).map(|i| k1.t[i] + kc.t[i] + k2.t[i]).collect();
                    add_term(&mut out, WKey { x, t, y }, &(&c12 * &cc) * &Coeff::v_pow(ph));
                }
            }
        }
        out
    }

    pub fn add(&self, a: &WElem, b: &WElem, cb: &Coeff) -> WElem {
        let mut out = a.clone();
        for (k, c) in b {
            add_term(&mut out, k.clone(), c * cb);
        }
        out
    }

    fn divided_power(&mut self, g: &WElem, i: usize, n: i64) -> WElem {
        let mut acc = self.scalar(Coeff::one());
        for _ in 0..n {
            acc = self.mul(&acc, g);
        }
        let f = qfactorial(n, SubscriptedQ::new(1, self.d[i])).expect("n >= 0");
        acc.into_iter().map(|(k, c)| (k, c / &f)).collect()
    }

    /// Image of a generator under the braid automorphism `T_i`.
    pub fn braid_generator(&mut self, i: usize, plus: bool, j: usize) -> WElem {
        if i == j {
            return if plus {
                let m = self.mul(&self.xm(i), &self.k(i, 1));
                m.into_iter().map(|(k, c)| (k, -c)).collect()
            } else {
                let m = self.mul(&self.k(i, -1), &self.xp(i));
                m.into_iter().map(|(k, c)| (k, -c)).collect()
            };
        }
        let a = -self.cartan[i][j];
        let qi = self.q_i(i);
        let gi = if plus { self.xp(i) } else { self.xm(i) };
        let gj = if plus { self.xp(j) } else { self.xm(j) };
        let mut out = WElem::new();
        for r in 0..=a {
            let sign = if (r + a) % 2 == 0 { 1 } else { -1 };
            let (left, right, qe) = if plus { (a - r, r, -r) } else { (r, a - r, r) };
            let c = &Coeff::from_int(sign) * &qi.pow(qe);
            let l = self.divided_power(&gi, i, left);
            let rr = self.divided_power(&gi, i, right);
            let m = self.mul(&l, &gj);
            let m = self.mul(&m, &rr);
            out = self.add(&out, &m, &c);
        }
        out
    }

    /// `T_i` on a torus exponent: `H_j -> H_j - a_ji H_i`.
    pub fn braid_torus(&self, i: usize, t: &[i64]) -> Vec<i64> {
        let mut out = t.to_vec();
        out[i] -= (0..self.rank).map(|j| t[j] * self.cartan[j][i]).sum::<i64>();
        out
    }

    /// Applies `T_i` letter by letter and multiplies out.
    pub fn braid(&mut self, i: usize, x: &WElem) -> WElem {
        let plus_img: Vec<WElem> = (0..self.rank).map(|j| self.braid_generator(i, true, j)).collect();
        let minus_img: Vec<WElem> = (0..self.rank).map(|j| self.braid_generator(i, false, j)).collect();
        let mut out = WElem::new();
        for (k, c) in x {
            let mut acc = self.scalar(c.clone());
            for &a in &k.x {
                acc = self.mul(&acc, &plus_img[a as usize]);
            }
            acc = self.mul(&acc, &self.torus(self.braid_torus(i, &k.t)));
            for &a in &k.y {
                acc = self.mul(&acc, &minus_img[a as usize]);
            }
            out = self.add(&out, &acc, &Coeff::one());
        }
        out
    }

    /// Dimension of the weight space `U_q(n_+)_mu` (Kostant partition count).
    fn kostant(positive: &[Vec<i64>], mu: &[i64]) -> usize {
        fn go(pos: &[Vec<i64>], k: usize, mu: &mut Vec<i64>) -> usize {
            if mu.iter().all(|&c| c == 0) {
                return 1;
            }
            if k == pos.len() {
                return 0;
            }
            let mut total = go(pos, k + 1, mu);
            let mut taken = 0;
            loop {
                if !mu.iter().zip(&pos[k]).all(|(m, b)| m >= b) {
                    break;
                }
                for (m, b) in mu.iter_mut().zip(&pos[k]) {
                    *m -= b;
                }
                taken += 1;
                total += go(pos, k + 1, mu);
            }
            for (m, b) in mu.iter_mut().zip(&pos[k]) {
                *m += b * taken;
            }
            total
        }
        go(positive, 0, &mut mu.to_vec())
    }

    /// Greedy basis of words for a weight space, chosen in lexicographic order.
    fn ensure_basis(&mut self, mu: &[i64], positive: &[Vec<i64>]) {
        if self.bases.contains_key(mu) {
            return;
        }
        let target = Self::kostant(positive, mu);
        let mut words = Vec::new();
        let mut cur = Vec::new();
        let mut left = mu.to_vec();
        fn all_words(left: &mut Vec<i64>, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
            if left.iter().all(|&c| c == 0) {
                out.push(cur.clone());
                return;
            }
            for i in 0..left.len() {
                if left[i] > 0 {
                    left[i] -= 1;
                    cur.push(i as u8);
                    all_words(left, cur, out);
                    cur.pop();
                    left[i] += 1;
                }
            }
        }
        all_words(&mut left, &mut cur, &mut words);
        let mut ech = Echelon::new();
        let mut chosen = Vec::new();
        for w in words {
            if ech.len() == target {
                break;
            }
            let img = self.shuffler.phi(&w);
            if ech.insert(&img) {
                chosen.push(w);
            }
        }
        assert_eq!(ech.len(), target, "word basis does not reach the PBW dimension");
        self.bases.insert(mu.to_vec(), ech);
        self.basis_words.insert(mu.to_vec(), chosen);
    }

    /// Rewrites a word in the chosen word basis of its weight space.
    fn decode_word(&mut self, w: &[u8], positive: &[Vec<i64>]) -> Vec<(Word, Coeff)> {
        if let Some(r) = self.decode_memo.get(w) {
            return r.clone();
        }
        let mu = self.weight(w);
        self.ensure_basis(&mu, positive);
        let img = self.shuffler.phi(w);
        let coords = self.bases[&mu].decode(&img).expect("word lies in its weight space");
        let out: Vec<(Word, Coeff)> = self.basis_words[&mu]
            .iter()
            .cloned()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        self.decode_memo.insert(w.to_vec(), out.clone());
        out
    }

    /// Canonical form: both word sides rewritten in fixed word bases, which
    /// imposes the Serre relations.
    pub fn reduce(&mut self, x: &WElem, positive: &[Vec<i64>]) -> WElem {
        let mut out = WElem::new();
        for (k, c) in x {
            let dx = self.decode_word(&k.x, positive);
            let dy = self.decode_word(&k.y, positive);
            for (wx, cx) in &dx {
                for (wy, cy) in &dy {
                    add_term(&mut out, WKey { x: wx.clone(), t: k.t.clone(), y: wy.clone() }, &(c * cx) * cy);
                }
            }
        }
        out
    }

    /// Shuffle image of the raising side of an element with no torus or lowering part.
    pub fn phi_plus(&mut self, x: &WElem) -> ShVec {
        let items: Vec<(Word, Coeff)> = x.iter().map(|(k, c)| (k.x.clone(), c.clone())).collect();
        self.shuffler.phi_sum(items.iter().map(|(w, c)| (w, c)))
    }

    pub fn phi_minus(&mut self, x: &WElem) -> ShVec {
        let items: Vec<(Word, Coeff)> = x.iter().map(|(k, c)| (k.y.clone(), c.clone())).collect();
        self.shuffler.phi_sum(items.iter().map(|(w, c)| (w, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CartanType;

    #[test]
    fn a1_commutator() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        let mut m = WordModel::new(&rs);
        let ef = m.mul(&m.xp(0), &m.xm(0));
        let fe = m.mul(&m.xm(0), &m.xp(0));
        let comm = m.add(&ef, &fe, &-Coeff::one());
        let denom = (Coeff::v_pow(2) - Coeff::v_pow(-2)).inv().unwrap();
        let expect = m.add(&m.k(0, 1), &m.k(0, -1), &-Coeff::one());
        let expect: WElem = expect.into_iter().map(|(k, c)| (k, c * &denom)).collect();
        assert_eq!(comm, expect);
    }

    #[test]
    fn a2_braid_on_x2() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let mut m = WordModel::new(&rs);
        let t = m.braid_generator(0, true, 1);
        // -X1 X2 + q^-1 X2 X1, q = u^2
        let mut expect = WElem::new();
        add_term(&mut expect, WKey { x: vec![0, 1], t: vec![0, 0], y: vec![] }, -Coeff::one());
        add_term(&mut expect, WKey { x: vec![1, 0], t: vec![0, 0], y: vec![] }, Coeff::v_pow(-2));
        assert_eq!(t, expect);
    }

    #[test]
    fn braid_inverse_pair_on_simple_root() {
        // T_1 T_2 X_1 = X_2 in A2
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let mut m = WordModel::new(&rs);
        let x = m.xp(0);
        let y = m.braid(1, &x);
        let z = m.braid(0, &y);
        let z = m.reduce(&z, &rs.positive);
        assert_eq!(z, m.xp(1));
    }
}
