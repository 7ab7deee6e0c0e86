//! PBW monomials and finite linear combinations of them.
//!
//! A monomial stores exponent vectors only; the order in which the factors
//! are multiplied is fixed by the [`Form`] of the engine that owns it.

use crate::coeff::Coeff;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Normal-form conventions. `Standard` is `e^r t^s f^t` with the `e` in the
/// ordering and the `f` in the reverse ordering. `ERight` is `f^t t^s e^r`
/// with both root parts in the reverse ordering, so `e_{beta_1}` is rightmost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Form {
    Standard,
    ERight,
}

/// A root-vector factor, indexed by position in the normal ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootLetter {
    E(usize),
    F(usize),
}

impl RootLetter {
    pub fn index(self) -> usize {
        match self {
            RootLetter::E(k) | RootLetter::F(k) => k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Root(RootLetter),
    Torus(Vec<i64>),
}

/// Sort key of a letter within a normal monomial.
pub fn letter_key(form: Form, nroots: usize, x: RootLetter) -> (u8, usize) {
    match (form, x) {
        (Form::Standard, RootLetter::E(k)) => (0, k),
        (Form::Standard, RootLetter::F(k)) => (2, nroots - 1 - k),
        (Form::ERight, RootLetter::F(k)) => (0, nroots - 1 - k),
        (Form::ERight, RootLetter::E(k)) => (2, nroots - 1 - k),
    }
}

pub const TORUS_KEY: (u8, usize) = (1, 0);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Mono {
    pub e: Vec<u32>,
    pub t: Vec<i64>,
    pub f: Vec<u32>,
}

impl Mono {
    pub fn unit(nroots: usize, rank: usize) -> Self {
        Mono { e: vec![0; nroots], t: vec![0; rank], f: vec![0; nroots] }
    }

    pub fn letter(nroots: usize, rank: usize, x: RootLetter) -> Self {
        let mut m = Mono::unit(nroots, rank);
        m.bump(x, 1);
        m
    }

    pub fn torus(nroots: usize, t: Vec<i64>) -> Self {
        Mono { e: vec![0; nroots], f: vec![0; nroots], t }
    }

    pub fn exponent(&self, x: RootLetter) -> u32 {
        match x {
            RootLetter::E(k) => self.e[k],
            RootLetter::F(k) => self.f[k],
        }
    }

    pub fn bump(&mut self, x: RootLetter, by: i32) {
        let slot = match x {
            RootLetter::E(k) => &mut self.e[k],
            RootLetter::F(k) => &mut self.f[k],
        };
        *slot = (*slot as i64 + by as i64) as u32;
    }

    pub fn degree(&self) -> u32 {
        self.e.iter().sum::<u32>() + self.f.iter().sum::<u32>()
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0 && self.t.iter().all(|&x| x == 0)
    }

    pub fn has_torus(&self) -> bool {
        self.t.iter().any(|&x| x != 0)
    }

    pub fn nroots(&self) -> usize {
        self.e.len()
    }

    /// Root factors in multiplication order, without the torus.
    pub fn root_letters(&self, form: Form) -> (Vec<RootLetter>, Vec<RootLetter>) {
        let n = self.nroots();
        let inc = |v: &Vec<u32>, mk: fn(usize) -> RootLetter| -> Vec<RootLetter> {
            (0..n).flat_map(|k| std::iter::repeat_n(mk(k), v[k] as usize)).collect()
        };
        let dec = |v: &Vec<u32>, mk: fn(usize) -> RootLetter| -> Vec<RootLetter> {
            (0..n).rev().flat_map(|k| std::iter::repeat_n(mk(k), v[k] as usize)).collect()
        };
        match form {
            Form::Standard => (inc(&self.e, RootLetter::E), dec(&self.f, RootLetter::F)),
            Form::ERight => (dec(&self.f, RootLetter::F), dec(&self.e, RootLetter::E)),
        }
    }

    /// All factors in multiplication order.
    pub fn letters(&self, form: Form) -> Vec<Letter> {
        let (before, after) = self.root_letters(form);
        let mut out: Vec<Letter> = before.into_iter().map(Letter::Root).collect();
        if self.has_torus() {
            out.push(Letter::Torus(self.t.clone()));
        }
        out.extend(after.into_iter().map(Letter::Root));
        out
    }

    /// Weight in simple-root coordinates, given the ordered positive roots.
    pub fn weight(&self, ordering: &[Vec<i64>]) -> Vec<i64> {
        let rank = self.t.len();
        let mut w = vec![0i64; rank];
        for (k, beta) in ordering.iter().enumerate() {
            let c = self.e[k] as i64 - self.f[k] as i64;
            if c != 0 {
                for i in 0..rank {
                    w[i] += c * beta[i];
                }
            }
        }
        w
    }

    pub fn label(&self, form: Form) -> String {
        let mut parts = Vec::new();
        let (before, after) = self.root_letters(form);
        let push_run = |parts: &mut Vec<String>, run: &[RootLetter]| {
            let mut i = 0;
            while i < run.len() {
                let mut j = i;
                while j < run.len() && run[j] == run[i] {
                    j += 1;
                }
                let (c, k) = match run[i] {
                    RootLetter::E(k) => ('e', k),
                    RootLetter::F(k) => ('f', k),
                };
                let p = j - i;
                parts.push(if p == 1 { format!("{}{}", c, k + 1) } else { format!("{}{}^{}", c, k + 1, p) });
                i = j;
            }
        };
        push_run(&mut parts, &before);
        if self.has_torus() {
            let t: Vec<String> = self.t.iter().map(|x| x.to_string()).collect();
            parts.push(format!("t({})", t.join(",")));
        }
        push_run(&mut parts, &after);
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Finite linear combination of monomials; zero coefficients are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem {
    pub terms: BTreeMap<Mono, Coeff>,
}

impl Elem {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    pub fn from_mono(m: Mono) -> Self {
        Elem::term(m, Coeff::one())
    }

    pub fn term(m: Mono, c: Coeff) -> Self {
        let mut e = Elem::zero();
        e.add_term(m, c);
        e
    }

    pub fn unit(nroots: usize, rank: usize) -> Self {
        Elem::from_mono(Mono::unit(nroots, rank))
    }

    pub fn scalar(nroots: usize, rank: usize, c: Coeff) -> Self {
        Elem::term(Mono::unit(nroots, rank), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Elem, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one());
        out
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one());
        out
    }

    pub fn scale(&self, c: &Coeff) -> Elem {
        let mut out = Elem::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Elem {
        self.scale(&-Coeff::one())
    }

    pub fn coefficient(&self, m: &Mono) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coeff) -> Coeff) -> Elem {
        let mut out = Elem::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Canonical text: monomials in sorted order.
    pub fn render(&self, form: Form) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({})*{}", c, m.label(form))).collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(Form::Standard))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_follow_the_form() {
        let mut m = Mono::unit(3, 2);
        m.e = vec![1, 0, 2];
        m.f = vec![1, 1, 0];
        m.t = vec![0, -1];
        assert_eq!(m.label(Form::Standard), "e1 e3^2 t(0,-1) f2 f1");
        assert_eq!(m.label(Form::ERight), "f2 f1 t(0,-1) e3^2 e1");
        assert_eq!(m.degree(), 5);
    }

    #[test]
    fn cancellation_drops_terms() {
        let m = Mono::letter(1, 1, RootLetter::E(0));
        let mut x = Elem::from_mono(m.clone());
        x.add_term(m, -Coeff::one());
        assert!(x.is_zero());
    }
}
