//! Weyl group elements as integer matrices on the root lattice.

use super::{LieError, Root, RootSystem};
use std::collections::{HashMap, HashSet, VecDeque};

/// A Weyl group element, canonicalized by its action matrix on simple-root
/// coordinates. Column `j` is the image of `alpha_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    m: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement { rank, m }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        let n = rs.rank;
        let mut m = vec![0; n * n];
        for j in 0..n {
            let col = rs.simple_reflect(i, &rs.simple(j));
            for (r, c) in col.into_iter().enumerate() {
                m[r * n + j] = c;
            }
        }
        WeylElement { rank: n, m }
    }

    /// Reflection `s_beta` in an arbitrary root.
    pub fn reflection(rs: &RootSystem, beta: &[i64]) -> Self {
        let n = rs.rank;
        let mut m = vec![0; n * n];
        for j in 0..n {
            let col = rs.reflect(beta, &rs.simple(j));
            for (r, c) in col.into_iter().enumerate() {
                m[r * n + j] = c;
            }
        }
        WeylElement { rank: n, m }
    }

    /// `s_{i_1} ... s_{i_k}` for a word of 0-based indices.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self, LieError> {
        let mut w = WeylElement::identity(rs.rank);
        for &i in word {
            if i >= rs.rank {
                return Err(LieError::BadIndex(i));
            }
            w = w.mul(&WeylElement::simple(rs, i));
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.m[r * self.rank + c]
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|r| (0..self.rank).map(|c| self.entry(r, c)).collect()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.rank;
        let mut m = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.m[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    m[r * n + c] += a * other.m[k * n + c];
                }
            }
        }
        WeylElement { rank: n, m }
    }

    pub fn apply(&self, x: &[i64]) -> Root {
        let n = self.rank;
        (0..n).map(|r| (0..n).map(|c| self.m[r * n + c] * x[c]).sum()).collect()
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let mut w = self.reduced_word(rs);
        w.reverse();
        WeylElement::from_word(rs, &w).expect("valid indices")
    }

    pub fn conjugate_by(&self, rs: &RootSystem, w: &WeylElement) -> Self {
        // w^-1 s w
        w.inverse(rs).mul(self).mul(w)
    }

    /// `Delta_w`: positive roots sent to negative roots.
    pub fn delta(&self, rs: &RootSystem) -> Vec<Root> {
        rs.positive.iter().filter(|b| !rs.is_positive_root(&self.apply(b))).cloned().collect()
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        self.delta(rs).len()
    }

    /// Reduced word built by peeling the smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        loop {
            let descent = (0..rs.rank).find(|&i| !rs.is_positive_root(&w.apply(&rs.simple(i))));
            match descent {
                Some(i) => {
                    word.push(i);
                    w = w.mul(&WeylElement::simple(rs, i));
                }
                None => break,
            }
        }
        word.reverse();
        word
    }

    /// Every element of `W`, sorted by length and then by reduced word.
    pub fn all(rs: &RootSystem) -> Vec<WeylElement> {
        let id = WeylElement::identity(rs.rank);
        let gens: Vec<WeylElement> = (0..rs.rank).map(|i| WeylElement::simple(rs, i)).collect();
        let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let x = w.mul(g);
                if seen.insert(x.clone()) {
                    queue.push_back(x);
                }
            }
        }
        let mut v: Vec<(usize, Vec<usize>, WeylElement)> =
            seen.into_iter().map(|w| (w.length(rs), w.reduced_word(rs), w)).collect();
        v.sort();
        v.into_iter().map(|t| t.2).collect()
    }

    pub fn longest(rs: &RootSystem) -> WeylElement {
        // -1 is not always in W; build w0 by walking down descents
        let mut w = WeylElement::identity(rs.rank);
        loop {
            let ext = (0..rs.rank).find(|&i| rs.is_positive_root(&w.apply(&rs.simple(i))));
            match ext {
                Some(i) => w = w.mul(&WeylElement::simple(rs, i)),
                None => return w,
            }
        }
    }

    /// All reduced words of this element, in lexicographic order.
    pub fn reduced_words(&self, rs: &RootSystem) -> Vec<Vec<usize>> {
        let mut memo: HashMap<WeylElement, Vec<Vec<usize>>> = HashMap::new();
        let mut out = words_rec(rs, self, &mut memo);
        out.sort();
        out
    }
}

fn words_rec(rs: &RootSystem, w: &WeylElement, memo: &mut HashMap<WeylElement, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let mut out = Vec::new();
    for i in 0..rs.rank {
        // right descent: w(alpha_i) < 0, so w = (w s_i) s_i with shorter w s_i
        if !rs.is_positive_root(&w.apply(&rs.simple(i))) {
            let shorter = w.mul(&WeylElement::simple(rs, i));
            for mut p in words_rec(rs, &shorter, memo) {
                p.push(i);
                out.push(p);
            }
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// `beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}` for a reduced word of `w0`.
pub fn ordering_from_word(rs: &RootSystem, word: &[usize]) -> Result<Vec<Root>, LieError> {
    if word.len() != rs.num_positive() {
        return Err(LieError::NotLongestWord(word.to_vec()));
    }
    let mut w = WeylElement::identity(rs.rank);
    let mut out: Vec<Root> = Vec::with_capacity(word.len());
    for &i in word {
        if i >= rs.rank {
            return Err(LieError::BadIndex(i));
        }
        let b = w.apply(&rs.simple(i));
        if !rs.is_positive_root(&b) || out.contains(&b) {
            return Err(LieError::NotLongestWord(word.to_vec()));
        }
        out.push(b);
        w = w.mul(&WeylElement::simple(rs, i));
    }
    Ok(out)
}

/// Every sum `alpha + beta` of two roots in the list lies strictly between them.
pub fn is_normal_ordering(rs: &RootSystem, order: &[Root]) -> bool {
    let pos: HashMap<&Root, usize> = order.iter().enumerate().map(|(k, r)| (r, k)).collect();
    if pos.len() != rs.num_positive() || order.iter().any(|r| !rs.is_positive_root(r)) {
        return false;
    }
    for (a, &pa) in &pos {
        for (b, &pb) in &pos {
            if pa >= pb {
                continue;
            }
            let g = super::add_roots(a, b);
            if let Some(&pg) = pos.get(&g) {
                if !(pa < pg && pg < pb) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CartanType;

    fn a2() -> RootSystem {
        RootSystem::new(CartanType::A, 2).unwrap()
    }

    #[test]
    fn a2_orderings_from_words() {
        let rs = a2();
        assert_eq!(ordering_from_word(&rs, &[0, 1, 0]).unwrap(), vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(ordering_from_word(&rs, &[1, 0, 1]).unwrap(), vec![vec![0, 1], vec![1, 1], vec![1, 0]]);
        assert!(ordering_from_word(&rs, &[0, 0, 1]).is_err());
    }

    #[test]
    fn delta_of_s1s2() {
        let rs = a2();
        let w = WeylElement::from_word(&rs, &[0, 1]).unwrap();
        let mut d = w.delta(&rs);
        d.sort();
        assert_eq!(d, vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(WeylElement::identity(2).length(&rs), 0);
    }

    #[test]
    fn group_orders_and_w0_words() {
        for (t, n, order, nwords) in [
            (CartanType::A, 2, 6, 2),
            (CartanType::A, 3, 24, 16),
            (CartanType::B, 2, 8, 2),
            (CartanType::G, 2, 12, 2),
            (CartanType::B, 3, 48, 42),
        ] {
            let rs = RootSystem::new(t, n).unwrap();
            assert_eq!(WeylElement::all(&rs).len(), order);
            let w0 = WeylElement::longest(&rs);
            assert_eq!(w0.length(&rs), rs.num_positive());
            let words = w0.reduced_words(&rs);
            assert_eq!(words.len(), nwords, "{}", rs.label());
            for w in &words {
                let o = ordering_from_word(&rs, w).unwrap();
                assert!(is_normal_ordering(&rs, &o));
            }
        }
    }

    #[test]
    fn length_equals_reduced_word_length() {
        for (t, n) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::A, 3)] {
            let rs = RootSystem::new(t, n).unwrap();
            for w in WeylElement::all(&rs) {
                let word = w.reduced_word(&rs);
                assert_eq!(word.len(), w.length(&rs));
                assert_eq!(WeylElement::from_word(&rs, &word).unwrap(), w);
                assert!(w.mul(&w.inverse(&rs)).is_identity());
            }
        }
    }

    #[test]
    fn weyl_action_preserves_form() {
        let rs = RootSystem::new(CartanType::B, 2).unwrap();
        let roots = rs.all_roots();
        for w in WeylElement::all(&rs) {
            for x in &roots {
                for y in &roots {
                    assert_eq!(rs.pair(&w.apply(x), &w.apply(y)), rs.pair(x, y));
                }
            }
        }
    }

    #[test]
    fn reversed_order_is_not_normal_if_broken() {
        let rs = a2();
        assert!(!is_normal_ordering(&rs, &[vec![1, 0], vec![0, 1], vec![1, 1]]));
    }
}
