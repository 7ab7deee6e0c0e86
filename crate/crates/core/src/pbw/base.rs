//! Root vectors and straightening rules of the standard quantum group for a
//! fixed reduced word of `w0`, computed once in the word model.
//!
//! Rules are stored in the units of the word model (`u = q^(1/2)`, torus
//! exponents of `t_i = exp(h H_i/2)`); an engine for a session exponent `d`
//! substitutes `u -> v^d` and scales torus exponents by `d`.

use super::mono::{Elem, Mono, RootLetter};
use super::shuffle::{Echelon, ShVec, Word};
use super::word::{WElem, WordModel};
use crate::coeff::Coeff;
use crate::lie::{ordering_from_word, LieError, Root, RootSystem};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

pub struct BaseTable {
    pub rank: usize,
    pub word: Vec<usize>,
    pub ordering: Vec<Root>,
    /// Word forms of `X_beta^+` and `X_beta^-`.
    pub xplus: Vec<WElem>,
    pub xminus: Vec<WElem>,
    /// Straightening rules for out-of-order pairs in the standard form.
    pub rules: BTreeMap<(RootLetter, RootLetter), Elem>,
}

struct Decoder {
    model: WordModel,
    ordering: Vec<Root>,
    phi_plus: Vec<ShVec>,
    phi_minus: Vec<ShVec>,
    plus: HashMap<Root, (Echelon<Word>, Vec<Vec<u32>>)>,
    minus: HashMap<Root, (Echelon<Word>, Vec<Vec<u32>>)>,
    word_memo: HashMap<(bool, Word), Vec<(Vec<u32>, Coeff)>>,
}

/// Exponent vectors `r` with `sum r_k beta_k = mu`.
fn compositions(ordering: &[Root], mu: &[i64]) -> Vec<Vec<u32>> {
    fn go(ord: &[Root], k: usize, mu: &mut Vec<i64>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if mu.iter().all(|&c| c == 0) {
            let mut r = cur.clone();
            r.resize(ord.len(), 0);
            out.push(r);
            return;
        }
        if k == ord.len() {
            return;
        }
        let mut taken = 0u32;
        loop {
            cur.push(taken);
            go(ord, k + 1, mu, cur, out);
            cur.pop();
            if !mu.iter().zip(&ord[k]).all(|(m, b)| m >= b) {
                break;
            }
            for (m, b) in mu.iter_mut().zip(&ord[k]) {
                *m -= b;
            }
            taken += 1;
        }
        for (m, b) in mu.iter_mut().zip(&ord[k]) {
            *m += b * taken as i64;
        }
    }
    let mut out = Vec::new();
    go(ordering, 0, &mut mu.to_vec(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl Decoder {
    fn basis(&mut self, plus: bool, mu: &[i64]) {
        let table = if plus { &self.plus } else { &self.minus };
        if table.contains_key(mu) {
            return;
        }
        let comps = compositions(&self.ordering, mu);
        let n = self.ordering.len();
        let mut ech = Echelon::new();
        for r in &comps {
            let mut img: ShVec = [(Vec::new(), Coeff::one())].into();
            // e increasing, f decreasing
            let order: Vec<usize> = if plus { (0..n).collect() } else { (0..n).rev().collect() };
            for k in order {
                for _ in 0..r[k] {
                    let g = if plus { &self.phi_plus[k] } else { &self.phi_minus[k] };
                    img = self.model.shuffler.product(&img, g);
                }
            }
            assert!(ech.insert(&img), "PBW monomials are dependent at weight {:?}", mu);
        }
        let table = if plus { &mut self.plus } else { &mut self.minus };
        table.insert(mu.to_vec(), (ech, comps));
    }

    fn decode_vec(&mut self, plus: bool, mu: &[i64], v: &ShVec) -> Vec<(Vec<u32>, Coeff)> {
        self.basis(plus, mu);
        let (ech, comps) = if plus { &self.plus[mu] } else { &self.minus[mu] };
        let coords = ech.decode(v).expect("element lies in the PBW span");
        comps.iter().cloned().zip(coords).filter(|(_, c)| !c.is_zero()).collect()
    }

    fn decode_word(&mut self, plus: bool, w: &[u8]) -> Vec<(Vec<u32>, Coeff)> {
        let key = (plus, w.to_vec());
        if let Some(r) = self.word_memo.get(&key) {
            return r.clone();
        }
        let mu = self.model.weight(w);
        let img = self.model.shuffler.phi(w);
        let out = self.decode_vec(plus, &mu, &img);
        self.word_memo.insert(key, out.clone());
        out
    }

    /// Standard-form element of a word-model element.
    fn decode(&mut self, x: &WElem) -> Elem {
        let rank = self.model.rank;
        let mut out = Elem::zero();
        for (k, c) in x {
            let dx = self.decode_word(true, &k.x);
            let dy = self.decode_word(false, &k.y);
            for (e, ce) in &dx {
                for (f, cf) in &dy {
                    let m = Mono { e: e.clone(), t: k.t.clone(), f: f.clone() };
                    debug_assert_eq!(m.t.len(), rank);
                    out.add_term(m, &(c * ce) * cf);
                }
            }
        }
        out
    }
}

impl BaseTable {
    pub fn build(rs: &RootSystem, word: &[usize]) -> Result<Self, LieError> {
        let ordering = ordering_from_word(rs, word)?;
        let n = ordering.len();
        let mut model = WordModel::new(rs);
        let mut xplus = Vec::with_capacity(n);
        let mut xminus = Vec::with_capacity(n);
        for k in 0..n {
            let mut p = model.xp(word[k]);
            let mut m = model.xm(word[k]);
            for j in (0..k).rev() {
                p = model.braid(word[j], &p);
                p = model.reduce(&p, &rs.positive);
                m = model.braid(word[j], &m);
                m = model.reduce(&m, &rs.positive);
            }
            assert!(
                p.keys().all(|key| key.y.is_empty() && key.t.iter().all(|&c| c == 0)),
                "root vector leaves U(n+)"
            );
            assert!(
                m.keys().all(|key| key.x.is_empty() && key.t.iter().all(|&c| c == 0)),
                "root vector leaves U(n-)"
            );
            xplus.push(p);
            xminus.push(m);
        }
        let phi_plus: Vec<ShVec> = xplus.iter().map(|p| model.phi_plus(p)).collect();
        let phi_minus: Vec<ShVec> = xminus.iter().map(|m| model.phi_minus(m)).collect();
        let mut dec = Decoder {
            model,
            ordering: ordering.clone(),
            phi_plus,
            phi_minus,
            plus: HashMap::new(),
            minus: HashMap::new(),
            word_memo: HashMap::new(),
        };
        let rank = rs.rank;
        let wrap = |terms: Vec<(Vec<u32>, Coeff)>, plus: bool| -> Elem {
            let mut out = Elem::zero();
            for (r, c) in terms {
                let mut m = Mono::unit(n, rank);
                if plus {
                    m.e = r;
                } else {
                    m.f = r;
                }
                out.add_term(m, c);
            }
            out
        };
        let mut rules = BTreeMap::new();
        for j in 0..n {
            for k in 0..n {
                let mu: Root = ordering[j].iter().zip(&ordering[k]).map(|(a, b)| a + b).collect();
                if j > k {
                    let v = dec.model.shuffler.product(&dec.phi_plus[j], &dec.phi_plus[k]);
                    let terms = dec.decode_vec(true, &mu, &v);
                    rules.insert((RootLetter::E(j), RootLetter::E(k)), wrap(terms, true));
                }
                if j < k {
                    let v = dec.model.shuffler.product(&dec.phi_minus[j], &dec.phi_minus[k]);
                    let terms = dec.decode_vec(false, &mu, &v);
                    rules.insert((RootLetter::F(j), RootLetter::F(k)), wrap(terms, false));
                }
                let fe = dec.model.mul(&xminus[j], &xplus[k]);
                rules.insert((RootLetter::F(j), RootLetter::E(k)), dec.decode(&fe));
            }
        }
        Ok(BaseTable { rank, word: word.to_vec(), ordering, xplus, xminus, rules })
    }
}

type CacheKey = (char, usize, Vec<usize>);

/// Shared, lazily built tables keyed by root system and reduced word.
pub fn base_table(rs: &RootSystem, word: &[usize]) -> Result<Arc<BaseTable>, LieError> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<BaseTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (rs.ty.letter(), rs.rank, word.to_vec());
    if let Some(t) = cache.lock().expect("cache lock").get(&key) {
        return Ok(t.clone());
    }
    let t = Arc::new(BaseTable::build(rs, word)?);
    cache.lock().expect("cache lock").insert(key, t.clone());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CartanType;

    #[test]
    fn compositions_count_partitions() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let ord = ordering_from_word(&rs, &[0, 1, 0]).unwrap();
        assert_eq!(compositions(&ord, &[1, 1]).len(), 2);
        assert_eq!(compositions(&ord, &[2, 1]).len(), 2);
    }

    #[test]
    fn a2_rule_e2_e1() {
        // ordering a1 < a1+a2 < a2; X_{a2} X_{a1} is out of order
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let t = BaseTable::build(&rs, &[0, 1, 0]).unwrap();
        let r = &t.rules[&(RootLetter::E(2), RootLetter::E(0))];
        assert_eq!(r.len(), 2);
    }
}
