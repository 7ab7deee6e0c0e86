//! Carter decompositions `s = s^1 s^2` and the search for an associated
//! positive system and normal ordering.

use super::RealizationError;
use crate::lie::{Root, RootSystem, WeylElement};
use crate::linalg::int_matrix;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CarterDecomposition {
    /// `gamma_1 .. gamma_n`; `s^1` is the product of their reflections.
    pub first: Vec<Root>,
    /// `gamma_{n+1} .. gamma_{l'}`.
    pub second: Vec<Root>,
}

impl CarterDecomposition {
    pub fn gammas(&self) -> Vec<Root> {
        self.first.iter().chain(&self.second).cloned().collect()
    }

    pub fn involution(rs: &RootSystem, roots: &[Root]) -> WeylElement {
        roots.iter().fold(WeylElement::identity(rs.rank), |w, g| w.mul(&WeylElement::reflection(rs, g)))
    }

    pub fn s1(&self, rs: &RootSystem) -> WeylElement {
        Self::involution(rs, &self.first)
    }

    pub fn s2(&self, rs: &RootSystem) -> WeylElement {
        Self::involution(rs, &self.second)
    }
}

fn orthogonal_sets(rs: &RootSystem, max: usize) -> Vec<Vec<usize>> {
    let n = rs.num_positive();
    let mut out = vec![Vec::new()];
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(set) = stack.pop() {
        if set.len() == max {
            continue;
        }
        let start = set.last().map_or(0, |&k| k + 1);
        for k in start..n {
            if set.iter().all(|&j| rs.pair(&rs.positive[j], &rs.positive[k]) == 0) {
                let mut next = set.clone();
                next.push(k);
                out.push(next.clone());
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// All decompositions with `|first| + |second| = rank(1 - s)` and linearly
/// independent `gamma`s. Larger first sets come first, then the positions
/// of the roots in the standard root list decide.
pub fn carter_decompositions(rs: &RootSystem, s: &WeylElement) -> Vec<CarterDecomposition> {
    let lp = moved_dimension(s);
    let sets = orthogonal_sets(rs, lp);
    let mut by_product: HashMap<WeylElement, Vec<usize>> = HashMap::new();
    let products: Vec<WeylElement> = sets
        .iter()
        .map(|set| {
            let roots: Vec<Root> = set.iter().map(|&k| rs.positive[k].clone()).collect();
            CarterDecomposition::involution(rs, &roots)
        })
        .collect();
    for (idx, p) in products.iter().enumerate() {
        by_product.entry(p.clone()).or_default().push(idx);
    }
    let mut out = Vec::new();
    for (ia, a) in sets.iter().enumerate() {
        let s2 = products[ia].mul(s);
        let Some(cands) = by_product.get(&s2) else { continue };
        for &ib in cands {
            let b = &sets[ib];
            if a.len() + b.len() != lp {
                continue;
            }
            let all: Vec<Vec<i64>> = a.iter().chain(b).map(|&k| rs.positive[k].clone()).collect();
            if !all.is_empty() && int_matrix(&all).rank() != lp {
                continue;
            }
            out.push((a.clone(), b.clone()));
        }
    }
    out.sort_by(|x, y| (x.1.len(), &x.0, &x.1).cmp(&(y.1.len(), &y.0, &y.1)));
    out.into_iter()
        .map(|(a, b)| CarterDecomposition {
            first: a.iter().map(|&k| rs.positive[k].clone()).collect(),
            second: b.iter().map(|&k| rs.positive[k].clone()).collect(),
        })
        .collect()
}

pub fn moved_dimension(s: &WeylElement) -> usize {
    let n = s.rank();
    let m: Vec<Vec<i64>> =
        (0..n).map(|r| (0..n).map(|c| if r == c { 1 - s.entry(r, c) } else { -s.entry(r, c) }).collect()).collect();
    int_matrix(&m).rank()
}

/// Conditions of the associated-ordering statement that do not depend on
/// the normal ordering: lengths add and the inversion sets split.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct ReducedFlags {
    pub lengths_add: bool,
    pub delta_s_splits: bool,
    pub delta_s_inv_splits: bool,
}

impl ReducedFlags {
    pub fn all(&self) -> bool {
        self.lengths_add && self.delta_s_splits && self.delta_s_inv_splits
    }
}

fn splits(rs: &RootSystem, whole: &[Root], part: &[Root], moved: &WeylElement, other: &[Root]) -> bool {
    let mut a: BTreeSet<Root> = part.iter().cloned().collect();
    for r in other {
        let x = moved.apply(r);
        if !rs.is_positive_root(&x) || !a.insert(x) {
            return false;
        }
    }
    a == whole.iter().cloned().collect::<BTreeSet<Root>>()
}

pub fn reduced_flags(rs: &RootSystem, s: &WeylElement, dec: &CarterDecomposition) -> ReducedFlags {
    let s1 = dec.s1(rs);
    let s2 = dec.s2(rs);
    let sinv = s.inverse(rs);
    ReducedFlags {
        lengths_add: s.length(rs) == s1.length(rs) + s2.length(rs),
        delta_s_splits: splits(rs, &s.delta(rs), &s2.delta(rs), &s2, &s1.delta(rs)),
        delta_s_inv_splits: splits(rs, &sinv.delta(rs), &s1.delta(rs), &s1, &s2.delta(rs)),
    }
}

/// Outcome of the search: a conjugate `s' = w^-1 s w` expressed in standard
/// coordinates, its decomposition and a compatible reduced word of `w0`.
#[derive(Clone, Debug, Serialize)]
pub struct Association {
    /// Reduced word of the conjugating element `w`; the associated positive
    /// system is `w(Delta_+)`.
    pub conjugator_word: Vec<usize>,
    pub s_word: Vec<usize>,
    pub decomposition: CarterDecomposition,
    pub w0_word: Vec<usize>,
    pub ordering: Vec<Root>,
    pub flags: ReducedFlags,
    /// `gamma_1 < ... < gamma_l'` in the ordering.
    pub gamma_order: bool,
    /// The segment size equals `D - ((l(s) - l')/2 + D_0)`.
    pub dimm_holds: bool,
    /// `gamma_1` is the first root of the ordering.
    pub initial_segment: bool,
}

impl Association {
    pub fn fully_valid(&self) -> bool {
        self.flags.all() && self.gamma_order && self.dimm_holds && self.initial_segment
    }

    /// Positions of `gamma_1` and `gamma_l'` in the ordering.
    pub fn segment_bounds(&self) -> Option<(usize, usize)> {
        let g = self.decomposition.gammas();
        if g.is_empty() {
            return None;
        }
        let pos = |r: &Root| self.ordering.iter().position(|x| x == r).expect("gamma in ordering");
        Some((pos(&g[0]), pos(&g[g.len() - 1])))
    }
}

pub fn fixed_positive_count(rs: &RootSystem, s: &WeylElement) -> usize {
    rs.positive.iter().filter(|r| s.apply(r) == **r).count()
}

pub fn dimm_value(rs: &RootSystem, s: &WeylElement, lprime: usize) -> i64 {
    let ls = s.length(rs) as i64;
    rs.num_positive() as i64 - ((ls - lprime as i64) / 2 + fixed_positive_count(rs, s) as i64)
}

/// Enumerates reduced words of `w0` in lexicographic order whose orderings
/// place every root of `first` before every root of `second`.
struct WordSearch<'a> {
    rs: &'a RootSystem,
    first: &'a [Root],
    second: &'a [Root],
    budget: usize,
    found: Vec<(Vec<usize>, Vec<Root>)>,
    limit: usize,
}

impl WordSearch<'_> {
    fn run(&mut self, w: &WeylElement, word: &mut Vec<usize>, order: &mut Vec<Root>, first_left: usize) {
        if self.found.len() >= self.limit || self.budget == 0 {
            return;
        }
        self.budget -= 1;
        if order.len() == self.rs.num_positive() {
            self.found.push((word.clone(), order.clone()));
            return;
        }
        for i in 0..self.rs.rank {
            let b = w.apply(&self.rs.simple(i));
            if !self.rs.is_positive_root(&b) {
                continue;
            }
            let in_first = self.first.contains(&b);
            if first_left > 0 && self.second.contains(&b) {
                continue;
            }
            word.push(i);
            order.push(b);
            let next = w.mul(&WeylElement::simple(self.rs, i));
            self.run(&next, word, order, first_left - usize::from(in_first));
            word.pop();
            order.pop();
        }
    }
}

fn words_for(
    rs: &RootSystem,
    dec: &CarterDecomposition,
    fixed: Option<&[usize]>,
    limit: usize,
) -> Vec<(Vec<usize>, Vec<Root>)> {
    if let Some(word) = fixed {
        return match crate::lie::ordering_from_word(rs, word) {
            Ok(o) => vec![(word.to_vec(), o)],
            Err(_) => Vec::new(),
        };
    }
    let mut search =
        WordSearch { rs, first: &dec.first, second: &dec.second, budget: 2_000_000, found: Vec::new(), limit };
    search.run(&WeylElement::identity(rs.rank), &mut Vec::new(), &mut Vec::new(), dec.first.len());
    search.found
}

fn evaluate(
    rs: &RootSystem,
    s: &WeylElement,
    w: &WeylElement,
    dec: &CarterDecomposition,
    flags: &ReducedFlags,
    word: Vec<usize>,
    order: Vec<Root>,
) -> Association {
    let pos = |r: &Root| order.iter().position(|x| x == r).unwrap();
    let mut first = dec.first.clone();
    let mut second = dec.second.clone();
    first.sort_by_key(&pos);
    second.sort_by_key(&pos);
    let gamma_order = match (first.last(), second.first()) {
        (Some(a), Some(b)) => pos(a) < pos(b),
        _ => true,
    };
    let lp = first.len() + second.len();
    let all: Vec<Root> = first.iter().chain(&second).cloned().collect();
    let (seg_len, initial) = if all.is_empty() {
        (0, true)
    } else {
        let lo = all.iter().map(&pos).min().unwrap();
        let hi = all.iter().map(&pos).max().unwrap();
        (hi - lo + 1, pos(&all[0]) == 0)
    };
    let dimm_holds = seg_len as i64 == dimm_value(rs, s, lp);
    Association {
        conjugator_word: w.reduced_word(rs),
        s_word: s.reduced_word(rs),
        decomposition: CarterDecomposition { first, second },
        w0_word: word,
        ordering: order,
        flags: flags.clone(),
        gamma_order,
        dimm_holds,
        initial_segment: initial,
    }
}

/// Searches conjugates `w^-1 s w` (shortest `w` first), their Carter
/// decompositions and reduced words of `w0` for a fully valid association.
/// If none exists, returns the first candidate satisfying the
/// ordering-independent conditions together with its failing flags.
pub fn associate(rs: &RootSystem, s: &WeylElement, fixed_word: Option<&[usize]>) -> Result<Association, RealizationError> {
    let mut fallback: Option<Association> = None;
    for w in WeylElement::all(rs) {
        let sp = s.conjugate_by(rs, &w);
        for dec in carter_decompositions(rs, &sp) {
            let flags = reduced_flags(rs, &sp, &dec);
            if !flags.all() {
                continue;
            }
            for (word, order) in words_for(rs, &dec, fixed_word, 100_000) {
                let a = evaluate(rs, &sp, &w, &dec, &flags, word, order);
                if a.fully_valid() {
                    return Ok(a);
                }
                if fallback.is_none() && a.gamma_order {
                    fallback = Some(a);
                }
            }
        }
    }
    fallback.ok_or_else(|| {
        RealizationError::SearchExhausted(format!(
            "no positive system, Carter decomposition and reduced word of w0 satisfy the conditions for s = {:?}",
            s.reduced_word(rs)
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CartanType;

    #[test]
    fn a2_coxeter_decomposition() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let s = WeylElement::from_word(&rs, &[0, 1]).unwrap();
        let decs = carter_decompositions(&rs, &s);
        assert!(decs.contains(&CarterDecomposition { first: vec![vec![1, 0]], second: vec![vec![0, 1]] }));
        let a = associate(&rs, &s, None).unwrap();
        assert!(a.fully_valid());
        assert!(a.conjugator_word.is_empty());
        assert_eq!(a.ordering, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn identity_and_a1() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let decs = carter_decompositions(&rs, &WeylElement::identity(2));
        assert_eq!(decs, vec![CarterDecomposition { first: vec![], second: vec![] }]);
        let a1 = RootSystem::new(CartanType::A, 1).unwrap();
        let s = WeylElement::from_word(&a1, &[0]).unwrap();
        let decs = carter_decompositions(&a1, &s);
        assert_eq!(decs[0], CarterDecomposition { first: vec![vec![1]], second: vec![] });
        assert!(associate(&a1, &s, None).unwrap().fully_valid());
    }

    #[test]
    fn every_decomposition_multiplies_back() {
        for (t, n) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::A, 3)] {
            let rs = RootSystem::new(t, n).unwrap();
            for s in WeylElement::all(&rs) {
                let decs = carter_decompositions(&rs, &s);
                assert!(!decs.is_empty(), "{:?}", s.reduced_word(&rs));
                for d in decs {
                    assert_eq!(d.s1(&rs).mul(&d.s2(&rs)), s);
                }
            }
        }
    }
}
