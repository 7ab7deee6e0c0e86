//! The realization `U_q^s(g)` on top of the standard engine.
//!
//! The isomorphism `psi` sends the twisted root vector `e_beta` to
//! `X_beta^+ exp(h K beta^vee)` and `f_beta` to `exp(-h K beta^vee) X_beta^-`,
//! so it is monomial on PBW bases up to a power of `v`. Twisted products are
//! computed as `psi^-1(psi(a) psi(b))`.
//!
//! Here `beta^vee` is the image of `beta` under `h* = h`, `alpha_i -> d_i H_i`;
//! with that reading `exp(h alpha_i^vee) = K_i` and `e_{alpha_i} = e_i`.

use super::base::{base_table, BaseTable};
use super::engine::Engine;
use super::mono::{Elem, Form, Letter, Mono, RootLetter};
use super::PbwError;
use crate::coeff::{qfactorial, Coeff, SubscriptedQ};
use crate::lie::{Root, RootSystem};
use crate::linalg::{int_matrix, rat};
use crate::realization::{Constants, Realization};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::Arc;

pub struct Algebra {
    pub rs: RootSystem,
    pub d: i64,
    pub word: Vec<usize>,
    pub ordering: Vec<Root>,
    pub base: Arc<BaseTable>,
    pub std: Engine,
    pub er: Engine,
    /// Torus exponent of `exp(h K beta^vee)` for each root in the ordering.
    pub kappa: Vec<Vec<i64>>,
    /// Position of `alpha_i` in the ordering.
    pub simple_pos: Vec<usize>,
    pub twisted: bool,
    braid_memo: HashMap<(usize, RootLetter), Elem>,
}

fn to_texp(d: i64, what: &str, x: &[BigRational]) -> Result<Vec<i64>, PbwError> {
    x.iter()
        .map(|c| {
            let v = c * rat(2 * d, 1);
            if v.is_integer() {
                Ok(v.to_integer().to_i64().expect("small exponent"))
            } else {
                Err(PbwError::NonIntegral(what.to_string()))
            }
        })
        .collect()
}

impl Algebra {
    fn build(rs: &RootSystem, word: &[usize], d: i64, kappa: Option<Vec<Vec<i64>>>) -> Result<Self, PbwError> {
        let base = base_table(rs, word)?;
        let std = Engine::standard(rs, &base, d);
        let er = Engine::e_right(rs, &base, d);
        let ordering = base.ordering.clone();
        let simple_pos = (0..rs.rank)
            .map(|i| ordering.iter().position(|r| *r == rs.simple(i)).expect("simple root in ordering"))
            .collect();
        let twisted = kappa.is_some();
        let kappa = kappa.unwrap_or_else(|| vec![vec![0; rs.rank]; ordering.len()]);
        Ok(Algebra {
            rs: rs.clone(),
            d,
            word: word.to_vec(),
            ordering,
            base,
            std,
            er,
            kappa,
            simple_pos,
            twisted,
            braid_memo: HashMap::new(),
        })
    }

    /// The standard quantum group `U_q(g)` with `v = q^(1/2d)`.
    pub fn standard(rs: &RootSystem, word: &[usize], d: i64) -> Result<Self, PbwError> {
        Self::build(rs, word, d, None)
    }

    pub fn for_realization(r: &Realization) -> Result<Self, PbwError> {
        let ordering = crate::lie::ordering_from_word(&r.rs, &r.w0_word)?;
        let kappa = ordering
            .iter()
            .enumerate()
            .map(|(k, b)| kappa_of(&r.rs, &r.consts, b).and_then(|x| to_texp(r.consts.d, &format!("K beta_{}", k + 1), &x)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::build(&r.rs, &r.w0_word, r.consts.d, Some(kappa))
    }

    pub fn nroots(&self) -> usize {
        self.ordering.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn set_degree_bound(&mut self, b: u32) {
        self.std.set_degree_bound(b);
        self.er.set_degree_bound(b);
    }

    pub fn degree_bound(&self) -> u32 {
        self.std.degree_bound
    }

    /// `q^k`.
    pub fn q(&self, k: i64) -> Coeff {
        Coeff::v_pow(2 * self.d * k)
    }

    pub fn sub(&self, root_length: i64) -> SubscriptedQ {
        SubscriptedQ::new(self.d, root_length)
    }

    pub fn root_length(&self, k: usize) -> i64 {
        self.rs.root_length(&self.ordering[k])
    }

    /// `q_beta` for the root at position `k`.
    pub fn q_beta(&self, k: usize) -> Coeff {
        self.q(self.root_length(k))
    }

    pub fn unit(&self) -> Elem {
        self.std.unit()
    }

    pub fn scalar(&self, c: Coeff) -> Elem {
        self.std.scalar(c)
    }

    pub fn e(&self, k: usize) -> Elem {
        self.std.letter(RootLetter::E(k))
    }

    pub fn f(&self, k: usize) -> Elem {
        self.std.letter(RootLetter::F(k))
    }

    pub fn e_simple(&self, i: usize) -> Elem {
        self.e(self.simple_pos[i])
    }

    pub fn f_simple(&self, i: usize) -> Elem {
        self.f(self.simple_pos[i])
    }

    pub fn torus(&self, t: Vec<i64>) -> Elem {
        self.std.torus(t)
    }

    /// `t_i`.
    pub fn t(&self, i: usize, p: i64) -> Elem {
        let mut t = vec![0; self.rank()];
        t[i] = p;
        self.torus(t)
    }

    /// Torus exponent of `K_i^p = exp(p h d_i H_i)`.
    pub fn k_exp(&self, i: usize, p: i64) -> Vec<i64> {
        let mut t = vec![0; self.rank()];
        t[i] = 2 * self.d * self.rs.d[i] * p;
        t
    }

    pub fn k(&self, i: usize, p: i64) -> Elem {
        self.torus(self.k_exp(i, p))
    }

    /// Torus exponent of `exp(h x)` for `x` in `H`-coordinates.
    pub fn texp_of_h(&self, what: &str, x: &[BigRational]) -> Result<Vec<i64>, PbwError> {
        to_texp(self.d, what, x)
    }

    /// `H`-coordinates of `Y_i`.
    pub fn y_coords(&self, i: usize) -> Vec<BigRational> {
        let ainv = int_matrix(&self.rs.cartan).inverse().expect("Cartan matrix invertible");
        (0..self.rank()).map(|j| ainv.get(i, j) * rat(self.rs.d[i], 1)).collect()
    }

    /// Torus exponent of `L_i^p = exp(p h Y_i)`.
    pub fn l_exp(&self, i: usize, p: i64) -> Result<Vec<i64>, PbwError> {
        let y: Vec<BigRational> = self.y_coords(i).iter().map(|c| c * rat(p, 1)).collect();
        self.texp_of_h(&format!("L_{}", i + 1), &y)
    }

    /// Torus exponent of `exp(h beta^vee)`.
    pub fn coroot_exp(&self, k: usize) -> Vec<i64> {
        let b = &self.ordering[k];
        (0..self.rank()).map(|i| 2 * self.d * b[i] * self.rs.d[i]).collect()
    }

    /// Torus exponent of `exp(h u^vee)` for `u` in `h*` (root coordinates).
    pub fn texp_of_hstar(&self, what: &str, u: &[BigRational]) -> Result<Vec<i64>, PbwError> {
        let x: Vec<BigRational> = u.iter().zip(&self.rs.d).map(|(c, &di)| c * rat(di, 1)).collect();
        self.texp_of_h(what, &x)
    }

    /// `e_beta` (or `f_beta`) as a combination of words in the simple
    /// generators of this algebra: pairs `(simple indices, coefficient)`.
    pub fn simple_expansion(&mut self, k: usize, plus: bool) -> Result<Vec<(Vec<usize>, Coeff)>, PbwError> {
        let mut out = Vec::new();
        for (w, c) in self.root_vector_words(k, plus) {
            let idx: Vec<usize> = w.iter().map(|&a| a as usize).collect();
            let gens: Vec<Elem> =
                idx.iter().map(|&i| if plus { self.e_simple(i) } else { self.f_simple(i) }).collect();
            let mut prod = self.unit();
            for g in &gens {
                prod = self.mul(&prod, g)?;
            }
            // psi(prod) = phase * X_w1 .. X_wm t^(+-kappa)
            let img = self.psi(&prod, Form::Standard);
            let mut sp = self.unit();
            for g in &gens {
                sp = self.std.mul(&sp, g)?;
            }
            let kap = self.kappa[k].clone();
            let tor = self.torus(if plus { kap } else { kap.iter().map(|x| -x).collect() });
            let target = if plus { self.std.mul(&sp, &tor)? } else { self.std.mul(&tor, &sp)? };
            let (m0, c0) = img.terms.iter().next().expect("nonzero word");
            let phase = c0 / &target.coefficient(m0);
            out.push((idx, &c / &phase));
        }
        Ok(out)
    }

    pub fn engine(&mut self, form: Form) -> &mut Engine {
        match form {
            Form::Standard => &mut self.std,
            Form::ERight => &mut self.er,
        }
    }

    fn transport(&mut self, x: &Elem, form: Form, sign: i64) -> Elem {
        let kappa = self.kappa.clone();
        let eng = self.engine(form);
        let unit = Mono::unit(eng.nroots, eng.rank);
        let mut out = Elem::zero();
        for (m, c) in &x.terms {
            let mut letters = Vec::new();
            for l in m.letters(form) {
                match l {
                    Letter::Root(RootLetter::E(k)) => {
                        letters.push(l.clone());
                        letters.push(Letter::Torus(kappa[k].iter().map(|x| sign * x).collect()));
                    }
                    Letter::Root(RootLetter::F(k)) => {
                        letters.push(Letter::Torus(kappa[k].iter().map(|x| -sign * x).collect()));
                        letters.push(l.clone());
                    }
                    Letter::Torus(_) => letters.push(l.clone()),
                }
            }
            let p = eng.mul_letters(&unit, &letters);
            out.add_scaled(&p, c);
        }
        out
    }

    /// `psi`: twisted PBW element to the standard algebra, in the given form.
    pub fn psi(&mut self, x: &Elem, form: Form) -> Elem {
        if !self.twisted {
            return x.clone();
        }
        self.transport(x, form, 1)
    }

    pub fn psi_inv(&mut self, x: &Elem, form: Form) -> Elem {
        if !self.twisted {
            return x.clone();
        }
        self.transport(x, form, -1)
    }

    /// Product in `U_q^s(g)`, standard form.
    pub fn mul(&mut self, a: &Elem, b: &Elem) -> Result<Elem, PbwError> {
        self.mul_in(Form::Standard, a, b)
    }

    /// Product in `U_q^s(g)` in the requested form.
    pub fn mul_in(&mut self, form: Form, a: &Elem, b: &Elem) -> Result<Elem, PbwError> {
        let pa = self.psi(a, form);
        let pb = self.psi(b, form);
        let p = self.engine(form).mul(&pa, &pb)?;
        Ok(self.psi_inv(&p, form))
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

    pub fn commutator(&mut self, a: &Elem, b: &Elem) -> Result<Elem, PbwError> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        Ok(ab.sub(&ba))
    }

    /// Twisted element from standard form to the `e`-right form.
    pub fn to_e_right(&mut self, x: &Elem) -> Elem {
        let p = self.psi(x, Form::Standard);
        let r = self.er.from_form(&p, Form::Standard);
        self.psi_inv(&r, Form::ERight)
    }

    pub fn from_e_right(&mut self, x: &Elem) -> Elem {
        let p = self.psi(x, Form::ERight);
        let r = self.std.from_form(&p, Form::ERight);
        self.psi_inv(&r, Form::Standard)
    }

    /// Standard-side product (no twist), standard form.
    pub fn std_mul(&mut self, a: &Elem, b: &Elem) -> Result<Elem, PbwError> {
        self.std.mul(a, b)
    }

    /// Word form of `X_beta^+` (or `X_beta^-`) in the simple generators, with
    /// coefficients in `v`.
    pub fn root_vector_words(&self, k: usize, plus: bool) -> Vec<(Vec<u8>, Coeff)> {
        let src = if plus { &self.base.xplus[k] } else { &self.base.xminus[k] };
        src.iter()
            .map(|(key, c)| (if plus { key.x.clone() } else { key.y.clone() }, c.subs_pow(self.d)))
            .collect()
    }

    fn divided_power(&mut self, g: &Elem, i: usize, n: i64) -> Result<Elem, PbwError> {
        let p = self.std_pow(g, n as u32)?;
        let f = qfactorial(n, self.sub(self.rs.d[i]))?;
        Ok(p.scale(&f.inv()?))
    }

    fn std_pow(&mut self, g: &Elem, n: u32) -> Result<Elem, PbwError> {
        let mut acc = self.unit();
        for _ in 0..n {
            acc = self.std.mul(&acc, g)?;
        }
        Ok(acc)
    }

    /// `T_i` on a simple generator of the standard algebra.
    pub fn braid_generator(&mut self, i: usize, plus: bool, j: usize) -> Result<Elem, PbwError> {
        if i == j {
            let r = if plus {
                let (f, k) = (self.f_simple(i), self.k(i, 1));
                self.std.mul(&f, &k)?
            } else {
                let (k, e) = (self.k(i, -1), self.e_simple(i));
                self.std.mul(&k, &e)?
            };
            return Ok(r.neg());
        }
        let a = -self.rs.cartan[i][j];
        let qi = self.q(self.rs.d[i]);
        let gi = if plus { self.e_simple(i) } else { self.f_simple(i) };
        let gj = if plus { self.e_simple(j) } else { self.f_simple(j) };
        let mut out = Elem::zero();
        for r in 0..=a {
            let sign = if (r + a) % 2 == 0 { 1 } else { -1 };
            let (left, right, qe) = if plus { (a - r, r, -r) } else { (r, a - r, r) };
            let c = &Coeff::from_int(sign) * &qi.pow(qe);
            let l = self.divided_power(&gi, i, left)?;
            let rr = self.divided_power(&gi, i, right)?;
            let m = self.std.mul(&l, &gj)?;
            let m = self.std.mul(&m, &rr)?;
            out.add_scaled(&m, &c);
        }
        Ok(out)
    }

    /// `T_i` on a torus exponent: `H_j -> H_j - a_ji H_i`.
    pub fn braid_torus(&self, i: usize, t: &[i64]) -> Vec<i64> {
        let mut out = t.to_vec();
        out[i] -= (0..self.rank()).map(|j| t[j] * self.rs.cartan[j][i]).sum::<i64>();
        out
    }

    fn braid_letter(&mut self, i: usize, x: RootLetter) -> Result<Elem, PbwError> {
        if let Some(r) = self.braid_memo.get(&(i, x)) {
            return Ok(r.clone());
        }
        let plus = matches!(x, RootLetter::E(_));
        let words = self.root_vector_words(x.index(), plus);
        let gens: Vec<Elem> =
            (0..self.rank()).map(|j| self.braid_generator(i, plus, j)).collect::<Result<_, _>>()?;
        let mut out = Elem::zero();
        for (w, c) in words {
            let mut acc = self.unit();
            for &a in &w {
                acc = self.std.mul(&acc, &gens[a as usize])?;
            }
            out.add_scaled(&acc, &c);
        }
        self.braid_memo.insert((i, x), out.clone());
        Ok(out)
    }

    /// `T_i` on an element of the standard algebra (standard form).
    pub fn braid_apply(&mut self, i: usize, x: &Elem) -> Result<Elem, PbwError> {
        let mut out = Elem::zero();
        for (m, c) in &x.terms {
            let mut acc = self.unit();
            for l in m.letters(Form::Standard) {
                let img = match l {
                    Letter::Root(r) => self.braid_letter(i, r)?,
                    Letter::Torus(t) => self.torus(self.braid_torus(i, &t)),
                };
                acc = self.std.mul(&acc, &img)?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }
}

/// `H`-coordinates of `K beta^vee` with `beta^vee = sum m_i d_i H_i`.
pub fn kappa_of(rs: &RootSystem, consts: &Constants, beta: &[i64]) -> Result<Vec<BigRational>, PbwError> {
    let l = rs.rank;
    let mut x = vec![BigRational::zero(); l];
    for i in 0..l {
        if beta[i] == 0 {
            continue;
        }
        let w = rat(beta[i] * rs.d[i], 1);
        for (r, xr) in x.iter_mut().enumerate() {
            *xr += consts.k_op.get(r, i) * &w;
        }
    }
    Ok(x)
}
