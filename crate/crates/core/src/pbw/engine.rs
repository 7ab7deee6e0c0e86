//! Straightening engine for the standard quantum group at a session exponent `d`.
//!
//! Products are computed by right multiplication of a normal monomial by one
//! letter at a time. An out-of-order adjacent pair is replaced by its rule,
//! which is itself in normal form, and the remaining letters are multiplied
//! back in. Results are memoized per (monomial, letter).

use super::base::BaseTable;
use super::mono::{letter_key, Elem, Form, Letter, Mono, RootLetter, TORUS_KEY};
use super::PbwError;
use crate::coeff::Coeff;
use crate::lie::{Root, RootSystem};
use std::collections::HashMap;

pub const DEFAULT_DEGREE_BOUND: u32 = 12;

enum Last {
    Empty,
    Torus,
    Root(RootLetter),
}

pub struct Engine {
    pub form: Form,
    pub rank: usize,
    pub nroots: usize,
    pub d: i64,
    pub ordering: Vec<Root>,
    pub degree_bound: u32,
    /// `pw[k][i] = beta_k(H_i)`.
    pw: Vec<Vec<i64>>,
    rules: HashMap<(RootLetter, RootLetter), Elem>,
    memo: HashMap<(Mono, RootLetter), Elem>,
    parent: Option<Box<Engine>>,
}

impl Engine {
    pub fn standard(rs: &RootSystem, base: &BaseTable, d: i64) -> Self {
        let nroots = base.ordering.len();
        let rules = base
            .rules
            .iter()
            .map(|(k, v)| {
                let mut e = Elem::zero();
                for (m, c) in &v.terms {
                    let mut m = m.clone();
                    m.t.iter_mut().for_each(|x| *x *= d);
                    e.add_term(m, c.subs_pow(d));
                }
                (*k, e)
            })
            .collect();
        let pw = base
            .ordering
            .iter()
            .map(|b| (0..rs.rank).map(|i| (0..rs.rank).map(|j| rs.cartan[i][j] * b[j]).sum()).collect())
            .collect();
        Engine {
            form: Form::Standard,
            rank: rs.rank,
            nroots,
            d,
            ordering: base.ordering.clone(),
            degree_bound: DEFAULT_DEGREE_BOUND,
            pw,
            rules,
            memo: HashMap::new(),
            parent: None,
        }
    }

    /// Engine for the `e`-right form; its rules are derived on demand from a
    /// standard engine.
    pub fn e_right(rs: &RootSystem, base: &BaseTable, d: i64) -> Self {
        let std = Engine::standard(rs, base, d);
        Engine {
            form: Form::ERight,
            rank: std.rank,
            nroots: std.nroots,
            d,
            ordering: std.ordering.clone(),
            degree_bound: std.degree_bound,
            pw: std.pw.clone(),
            rules: HashMap::new(),
            memo: HashMap::new(),
            parent: Some(Box::new(std)),
        }
    }

    pub fn set_degree_bound(&mut self, b: u32) {
        self.degree_bound = b;
        if let Some(p) = self.parent.as_mut() {
            p.degree_bound = b;
        }
    }

    /// `<lambda, beta_k>`: `t^lambda e_k t^-lambda = v^<lambda,beta_k> e_k`.
    pub fn pairing(&self, t: &[i64], k: usize) -> i64 {
        t.iter().zip(&self.pw[k]).map(|(a, b)| a * b).sum()
    }

    fn key(&self, x: RootLetter) -> (u8, usize) {
        letter_key(self.form, self.nroots, x)
    }

    fn last(&self, m: &Mono) -> Last {
        let n = self.nroots;
        let smallest = |v: &Vec<u32>| (0..n).find(|&k| v[k] > 0);
        let largest = |v: &Vec<u32>| (0..n).rev().find(|&k| v[k] > 0);
        match self.form {
            Form::Standard => {
                if let Some(k) = smallest(&m.f) {
                    Last::Root(RootLetter::F(k))
                } else if m.has_torus() {
                    Last::Torus
                } else if let Some(k) = largest(&m.e) {
                    Last::Root(RootLetter::E(k))
                } else {
                    Last::Empty
                }
            }
            Form::ERight => {
                if let Some(k) = smallest(&m.e) {
                    Last::Root(RootLetter::E(k))
                } else if m.has_torus() {
                    Last::Torus
                } else if let Some(k) = smallest(&m.f) {
                    Last::Root(RootLetter::F(k))
                } else {
                    Last::Empty
                }
            }
        }
    }

    pub fn unit(&self) -> Elem {
        Elem::unit(self.nroots, self.rank)
    }

    pub fn scalar(&self, c: Coeff) -> Elem {
        Elem::scalar(self.nroots, self.rank, c)
    }

    pub fn letter(&self, x: RootLetter) -> Elem {
        Elem::from_mono(Mono::letter(self.nroots, self.rank, x))
    }

    pub fn torus(&self, t: Vec<i64>) -> Elem {
        Elem::from_mono(Mono::torus(self.nroots, t))
    }

    /// `m * t^lambda` as a phase times a monomial.
    pub fn right_mul_torus(&self, m: &Mono, t: &[i64]) -> (Coeff, Mono) {
        // letters to the right of the torus slot move left past t^lambda
        let mut e = 0;
        for k in 0..self.nroots {
            match self.form {
                Form::Standard => e += m.f[k] as i64 * self.pairing(t, k),
                Form::ERight => e -= m.e[k] as i64 * self.pairing(t, k),
            }
        }
        let mut out = m.clone();
        for (a, b) in out.t.iter_mut().zip(t) {
            *a += b;
        }
        (Coeff::v_pow(e), out)
    }

    fn weight_pairing(&self, t: &[i64], x: RootLetter) -> i64 {
        match x {
            RootLetter::E(k) => self.pairing(t, k),
            RootLetter::F(k) => -self.pairing(t, k),
        }
    }

    pub fn right_mul_root(&mut self, m: &Mono, y: RootLetter) -> Elem {
        let memo_key = (m.clone(), y);
        if let Some(r) = self.memo.get(&memo_key) {
            return r.clone();
        }
        let ky = self.key(y);
        let out = match self.last(m) {
            Last::Empty => {
                let mut m2 = m.clone();
                m2.bump(y, 1);
                Elem::from_mono(m2)
            }
            Last::Root(x) if x == y || self.key(x) < ky => {
                let mut m2 = m.clone();
                m2.bump(y, 1);
                Elem::from_mono(m2)
            }
            Last::Torus if ky > TORUS_KEY => {
                let mut m2 = m.clone();
                m2.bump(y, 1);
                Elem::from_mono(m2)
            }
            Last::Torus => {
                // t^lambda y = v^<lambda, wt y> y t^lambda
                let t = m.t.clone();
                let mut m0 = m.clone();
                m0.t.iter_mut().for_each(|x| *x = 0);
                let ph = Coeff::v_pow(self.weight_pairing(&t, y));
                let inner = self.right_mul_root(&m0, y);
                let mut out = Elem::zero();
                for (mm, c) in &inner.terms {
                    let (p2, m2) = self.right_mul_torus(mm, &t);
                    out.add_term(m2, &(c * &ph) * &p2);
                }
                out
            }
            Last::Root(x) => {
                let mut m0 = m.clone();
                m0.bump(x, -1);
                let rule = self.rule(x, y);
                let mut out = Elem::zero();
                for (n, c) in &rule.terms {
                    let prod = self.mul_mono(&m0, n);
                    out.add_scaled(&prod, c);
                }
                out
            }
        };
        self.memo.insert(memo_key, out.clone());
        out
    }

    fn rule(&mut self, x: RootLetter, y: RootLetter) -> Elem {
        if let Some(r) = self.rules.get(&(x, y)) {
            return r.clone();
        }
        let parent = self.parent.as_mut().expect("standard rules are complete");
        let r = match (x, y) {
            (RootLetter::F(_), RootLetter::F(_)) => parent.rule(x, y),
            _ => {
                // standard form of y x = a (x y) + P; both orders share one exponent vector
                let mut both = Mono::letter(self.nroots, self.rank, x);
                both.bump(y, 1);
                let s = parent.rule(y, x);
                let a = s.coefficient(&both);
                assert!(!a.is_zero(), "leading coefficient of a straightening rule vanishes");
                let mut p = s.clone();
                p.add_term(both.clone(), -a.clone());
                let conv = self.from_form(&p, Form::Standard);
                let ainv = a.inv().expect("nonzero");
                let mut out = Elem::from_mono(both);
                out.add_scaled(&conv, &-Coeff::one());
                out.scale(&ainv)
            }
        };
        self.rules.insert((x, y), r.clone());
        r
    }

    pub fn mul_letters(&mut self, m: &Mono, letters: &[Letter]) -> Elem {
        let mut acc = Elem::from_mono(m.clone());
        for l in letters {
            let mut next = Elem::zero();
            for (mm, c) in &acc.terms {
                match l {
                    Letter::Root(y) => {
                        let r = self.right_mul_root(mm, *y);
                        next.add_scaled(&r, c);
                    }
                    Letter::Torus(t) => {
                        let (p, m2) = self.right_mul_torus(mm, t);
                        next.add_term(m2, c * &p);
                    }
                }
            }
            acc = next;
        }
        acc
    }

    pub fn mul_mono(&mut self, m: &Mono, n: &Mono) -> Elem {
        let letters = n.letters(self.form);
        self.mul_letters(m, &letters)
    }

    /// Product without the degree check.
    pub fn mul_unchecked(&mut self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (mb, cb) in &b.terms {
            let letters = mb.letters(self.form);
            for (ma, ca) in &a.terms {
                let p = self.mul_letters(ma, &letters);
                out.add_scaled(&p, &(ca * cb));
            }
        }
        out
    }

    pub fn mul(&mut self, a: &Elem, b: &Elem) -> Result<Elem, PbwError> {
        let bound = a.max_degree() + b.max_degree();
        if bound > self.degree_bound {
            return Err(PbwError::DegreeBound { bound: self.degree_bound, found: bound });
        }
        let out = self.mul_unchecked(a, b);
        let found = out.max_degree();
        if found > self.degree_bound {
            return Err(PbwError::DegreeBound { bound: self.degree_bound, found });
        }
        Ok(out)
    }

    pub fn mul_all(&mut self, xs: &[&Elem]) -> Result<Elem, PbwError> {
        let mut acc = self.unit();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn pow(&mut self, x: &Elem, n: u32) -> Result<Elem, PbwError> {
        let mut acc = self.unit();
        for _ in 0..n {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Re-expresses an element written in another form.
    pub fn from_form(&mut self, x: &Elem, form: Form) -> Elem {
        if form == self.form {
            return x.clone();
        }
        let unit = Mono::unit(self.nroots, self.rank);
        let mut out = Elem::zero();
        for (m, c) in &x.terms {
            let letters = m.letters(form);
            let p = self.mul_letters(&unit, &letters);
            out.add_scaled(&p, c);
        }
        out
    }

    pub fn commutator(&mut self, a: &Elem, b: &Elem) -> Result<Elem, PbwError> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        Ok(ab.sub(&ba))
    }

    /// Standard-form rule table (for the standard engine) as text, sorted.
    pub fn rule_dump(&mut self) -> Vec<(String, String)> {
        let mut keys: Vec<(RootLetter, RootLetter)> = Vec::new();
        for j in 0..self.nroots {
            for k in 0..self.nroots {
                for (x, y) in [
                    (RootLetter::E(j), RootLetter::E(k)),
                    (RootLetter::F(j), RootLetter::F(k)),
                    (RootLetter::F(j), RootLetter::E(k)),
                    (RootLetter::E(j), RootLetter::F(k)),
                ] {
                    if self.key(x) > self.key(y) {
                        keys.push((x, y));
                    }
                }
            }
        }
        keys.sort();
        keys.into_iter()
            .map(|(x, y)| {
                let r = self.rule(x, y);
                let name = |l: RootLetter| match l {
                    RootLetter::E(k) => format!("e{}", k + 1),
                    RootLetter::F(k) => format!("f{}", k + 1),
                };
                (format!("{} {}", name(x), name(y)), r.render(self.form))
            })
            .collect()
    }
}
