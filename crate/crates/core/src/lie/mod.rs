//! Root systems of simple Lie algebras, small rank.
//!
//! Roots are integer vectors in the basis of simple roots. The Cartan matrix
//! follows `a_ij = alpha_j(H_i) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`
//! and the form is normalized so that `(alpha_i, alpha_j) = d_i a_ij` with
//! the smallest `d_i` equal to 1.

mod weyl;

pub use weyl::{is_normal_ordering, ordering_from_word, WeylElement};

use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

pub type Root = Vec<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported root system {0}{1}")]
    Unsupported(char, usize),
    #[error("word {0:?} is not a reduced word of the longest element")]
    NotLongestWord(Vec<usize>),
    #[error("simple reflection index {0} out of range")]
    BadIndex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(CartanType::A),
            'B' => Some(CartanType::B),
            'C' => Some(CartanType::C),
            'D' => Some(CartanType::D),
            'G' => Some(CartanType::G),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: CartanType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizers `d_i`.
    pub d: Vec<i64>,
    /// Symmetric form `b_ij = d_i a_ij = (alpha_i, alpha_j)`.
    pub form: Vec<Vec<i64>>,
    /// Positive roots sorted by height, then by decreasing coordinates, so the
    /// simple roots come first in index order.
    pub positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: CartanType, rank: usize) -> Result<Self, LieError> {
        let unsupported = || LieError::Unsupported(ty.letter(), rank);
        if rank == 0 || rank > 4 {
            return Err(unsupported());
        }
        let mut a = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            a[i][i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
            for i in 0..upto.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        };
        let d: Vec<i64> = match ty {
            CartanType::A => {
                chain(&mut a, rank);
                vec![1; rank]
            }
            CartanType::B => {
                if rank < 2 {
                    return Err(unsupported());
                }
                chain(&mut a, rank);
                // alpha_n short
                a[rank - 1][rank - 2] = -2;
                let mut d = vec![2; rank];
                d[rank - 1] = 1;
                d
            }
            CartanType::C => {
                if rank < 2 {
                    return Err(unsupported());
                }
                chain(&mut a, rank);
                // alpha_n long
                a[rank - 2][rank - 1] = -2;
                let mut d = vec![1; rank];
                d[rank - 1] = 2;
                d
            }
            CartanType::D => {
                if rank < 3 {
                    return Err(unsupported());
                }
                chain(&mut a, rank - 1);
                a[rank - 3][rank - 1] = -1;
                a[rank - 1][rank - 3] = -1;
                vec![1; rank]
            }
            CartanType::G => {
                if rank != 2 {
                    return Err(unsupported());
                }
                // alpha_1 short, alpha_2 long
                a[0][1] = -3;
                a[1][0] = -1;
                vec![1, 3]
            }
        };
        let form: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| d[i] * a[i][j]).collect()).collect();
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(form[i][j], form[j][i], "symmetrizer table inconsistent");
            }
        }
        let mut rs = RootSystem { ty, rank, cartan: a, d, form, positive: Vec::new(), index: HashMap::new() };
        rs.positive = rs.generate_positive();
        rs.index = rs.positive.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        Ok(rs)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.ty.letter(), self.rank)
    }

    fn generate_positive(&self) -> Vec<Root> {
        let mut seen: Vec<Root> = (0..self.rank).map(|i| self.simple(i)).collect();
        let mut frontier = seen.clone();
        while let Some(r) = frontier.pop() {
            for i in 0..self.rank {
                let x = self.simple_reflect(i, &r);
                if x.iter().all(|&c| c >= 0) && !seen.contains(&x) {
                    seen.push(x.clone());
                    frontier.push(x);
                }
            }
        }
        seen.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| y.cmp(x)));
        seen
    }

    pub fn simple(&self, i: usize) -> Root {
        let mut r = vec![0; self.rank];
        r[i] = 1;
        r
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * self.form[i][j] * y[j];
            }
        }
        s
    }

    /// `<x, beta^vee> = 2 (x, beta) / (beta, beta)`, integral for roots `x`.
    pub fn coroot_pairing(&self, x: &[i64], beta: &[i64]) -> i64 {
        let n = 2 * self.pair(x, beta);
        let b = self.pair(beta, beta);
        debug_assert_eq!(n % b, 0);
        n / b
    }

    /// `d_beta = (beta, beta) / 2`, so that `q_beta = q^(d_beta)`.
    pub fn root_length(&self, beta: &[i64]) -> i64 {
        self.pair(beta, beta) / 2
    }

    pub fn simple_reflect(&self, i: usize, x: &[i64]) -> Root {
        let c: i64 = (0..self.rank).map(|j| self.cartan[i][j] * x[j]).sum();
        let mut y = x.to_vec();
        y[i] -= c;
        y
    }

    pub fn reflect(&self, beta: &[i64], x: &[i64]) -> Root {
        let c = self.coroot_pairing(x, beta);
        x.iter().zip(beta).map(|(a, b)| a - c * b).collect()
    }

    pub fn positive_index(&self, beta: &[i64]) -> Option<usize> {
        self.index.get(beta).copied()
    }

    pub fn is_positive_root(&self, x: &[i64]) -> bool {
        self.index.contains_key(x)
    }

    pub fn is_root(&self, x: &[i64]) -> bool {
        if self.is_positive_root(x) {
            return true;
        }
        let neg: Root = x.iter().map(|c| -c).collect();
        self.is_positive_root(&neg)
    }

    /// All roots, positive first.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut v = self.positive.clone();
        v.extend(self.positive.iter().map(|r| r.iter().map(|c| -c).collect::<Root>()));
        v
    }

    /// `dim g = 2D + l`.
    pub fn dimension(&self) -> usize {
        2 * self.num_positive() + self.rank
    }
}

pub fn height(x: &[i64]) -> i64 {
    x.iter().sum()
}

pub fn negate(x: &[i64]) -> Root {
    x.iter().map(|c| -c).collect()
}

pub fn add_roots(x: &[i64], y: &[i64]) -> Root {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Renders a root as `a1+2a2` style text.
pub fn root_label(x: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in x.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&c.abs().to_string());
        }
        s.push_str(&format!("a{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "type {}", self.label())?;
        writeln!(f, "cartan {:?}", self.cartan)?;
        writeln!(f, "d {:?}", self.d)?;
        write!(f, "positive")?;
        for r in &self.positive {
            write!(f, " {}", root_label(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        for (t, n, expect) in [
            (CartanType::A, 1, 1),
            (CartanType::A, 2, 3),
            (CartanType::A, 3, 6),
            (CartanType::A, 4, 10),
            (CartanType::B, 2, 4),
            (CartanType::B, 3, 9),
            (CartanType::C, 3, 9),
            (CartanType::D, 4, 12),
            (CartanType::G, 2, 6),
        ] {
            let rs = RootSystem::new(t, n).unwrap();
            assert_eq!(rs.num_positive(), expect, "{}", rs.label());
        }
    }

    #[test]
    fn b2_conventions() {
        let rs = RootSystem::new(CartanType::B, 2).unwrap();
        assert_eq!(rs.cartan, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs.d, vec![2, 1]);
        assert_eq!(rs.form[0][1], rs.form[1][0]);
        assert!(rs.is_positive_root(&[1, 2]));
    }

    #[test]
    fn a1_and_a2_cartan() {
        assert_eq!(RootSystem::new(CartanType::A, 1).unwrap().cartan, vec![vec![2]]);
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(a2.cartan, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.positive, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn unsupported_is_error() {
        assert!(RootSystem::new(CartanType::G, 3).is_err());
        assert!(RootSystem::new(CartanType::A, 5).is_err());
        assert!(RootSystem::new(CartanType::B, 1).is_err());
    }

    #[test]
    fn g2_long_and_short() {
        let rs = RootSystem::new(CartanType::G, 2).unwrap();
        let lengths: Vec<i64> = rs.positive.iter().map(|r| rs.root_length(r)).collect();
        assert_eq!(lengths.iter().filter(|&&l| l == 1).count(), 3);
        assert_eq!(lengths.iter().filter(|&&l| l == 3).count(), 3);
    }
}
