//! `v -> 1` limits: the enveloping algebra `U(g)` (torus expanded through
//! `t_i = v^(H_i)`) and the Poisson algebra generated by `e~`, `f~`, `t`.

use super::algebra::Algebra;
use super::checks::CheckLine;
use super::mono::{Elem, Form, Mono};
use super::PbwError;
use crate::coeff::{Coeff, IntPoly};
use crate::linalg::rat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};

/// Polynomial in `H_1..H_l`.
pub type HPoly = BTreeMap<Vec<u32>, BigRational>;

fn hp_add_scaled(a: &mut HPoly, b: &HPoly, c: &BigRational) {
    for (k, x) in b {
        let e = a.entry(k.clone()).or_insert_with(BigRational::zero);
        *e += x * c;
        if e.is_zero() {
            a.remove(k);
        }
    }
}

fn hp_mul(a: &HPoly, b: &HPoly) -> HPoly {
    let mut out = HPoly::new();
    for (ka, xa) in a {
        for (kb, xb) in b {
            let k: Vec<u32> = ka.iter().zip(kb).map(|(p, q)| p + q).collect();
            hp_add_scaled(&mut out, &[(k, xa * xb)].into(), &BigRational::one());
        }
    }
    out
}

fn hp_const(l: usize, c: BigRational) -> HPoly {
    if c.is_zero() {
        HPoly::new()
    } else {
        [(vec![0; l], c)].into()
    }
}

/// The linear form `sum s_i H_i`.
fn hp_linear(s: &[i64]) -> HPoly {
    let l = s.len();
    let mut out = HPoly::new();
    for (i, &c) in s.iter().enumerate() {
        if c != 0 {
            let mut k = vec![0; l];
            k[i] = 1;
            out.insert(k, rat(c, 1));
        }
    }
    out
}

pub fn hp_render(p: &HPoly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = p
        .iter()
        .map(|(k, c)| {
            let vars: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("H{}", i + 1) } else { format!("H{}^{}", i + 1, e) })
                .collect();
            if vars.is_empty() {
                c.to_string()
            } else {
                format!("{}*{}", c, vars.join("*"))
            }
        })
        .collect();
    parts.join(" + ")
}

/// Taylor coefficients of `p(1 + eps)`.
fn shift_to_one(p: &IntPoly) -> Vec<BigRational> {
    let c = p.coeffs();
    let n = c.len();
    let mut out = vec![BigRational::zero(); n];
    for (j, pj) in c.iter().enumerate() {
        let mut b = BigInt::one();
        for (k, slot) in out.iter_mut().enumerate().take(j + 1) {
            *slot += BigRational::from_integer(pj * &b);
            b = b * BigInt::from(j - k) / BigInt::from(k + 1);
        }
    }
    out
}

/// Generalized binomial series of `(1 + eps)^a` up to `eps^n`.
fn binom_series(a: i64, n: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut b = BigRational::one();
    for k in 0..=n {
        out.push(b.clone());
        b = b * rat(a - k as i64, k as i64 + 1);
    }
    out
}

fn valuation(v: &[BigRational]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Laurent expansion of `c(1 + eps)`: `(valuation, coefficients)` covering
/// orders `valuation..=upto`.
fn laurent_at_one(c: &Coeff, upto: i64) -> Option<(i64, Vec<BigRational>)> {
    if c.is_zero() {
        return None;
    }
    let num = shift_to_one(c.numerator());
    let den = shift_to_one(c.denominator());
    let nv = valuation(&num)?;
    let dv = valuation(&den).expect("nonzero denominator");
    let val = nv as i64 - dv as i64;
    if val > upto {
        return Some((val, Vec::new()));
    }
    let len = (upto - val + 1) as usize;
    let n: Vec<BigRational> = (0..len).map(|k| num.get(nv + k).cloned().unwrap_or_else(BigRational::zero)).collect();
    let d: Vec<BigRational> = (0..len).map(|k| den.get(dv + k).cloned().unwrap_or_else(BigRational::zero)).collect();
    let mut q: Vec<BigRational> = Vec::with_capacity(len);
    for k in 0..len {
        let mut x = n[k].clone();
        for j in 1..=k {
            x -= &d[j] * &q[k - j];
        }
        q.push(x / &d[0]);
    }
    let sh = binom_series(c.shift(), len);
    let mut out = vec![BigRational::zero(); len];
    for a in 0..len {
        for b in 0..(len - a) {
            out[a + b] += &q[a] * &sh[b];
        }
    }
    Some((val, out))
}

/// Element of `U(g)` in the PBW basis `e^r P(H) f^t`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UgElem {
    pub terms: BTreeMap<(Vec<u32>, Vec<u32>), HPoly>,
}

impl UgElem {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((e, f), p)| {
                let l = p.keys().next().map(|k| k.len()).unwrap_or(0);
                let m = Mono { e: e.clone(), t: vec![0; l], f: f.clone() };
                format!("({})*{}", hp_render(p), m.label(Form::Standard))
            })
            .collect();
        parts.join(" + ")
    }
}

/// Limit at `v = 1` in `U(g)`. Errors if a pole survives.
pub fn ug_limit(x: &Elem) -> Result<UgElem, PbwError> {
    let mut groups: BTreeMap<(Vec<u32>, Vec<u32>), Vec<(&Vec<i64>, &Coeff)>> = BTreeMap::new();
    for (m, c) in &x.terms {
        groups.entry((m.e.clone(), m.f.clone())).or_default().push((&m.t, c));
    }
    let mut out = UgElem::default();
    for (key, items) in groups {
        let l = items[0].0.len();
        let mut series: BTreeMap<i64, HPoly> = BTreeMap::new();
        let expansions: Vec<(i64, Vec<BigRational>, &Vec<i64>)> = items
            .iter()
            .filter_map(|(t, c)| laurent_at_one(c, 0).map(|(v, s)| (v, s, *t)))
            .collect();
        let minval = expansions.iter().map(|e| e.0).min().unwrap_or(0).min(0);
        let depth = (-minval) as usize;
        for (val, coeffs, t) in &expansions {
            // (1 + eps)^(s.H) = sum binom(s.H, m) eps^m
            let lin = hp_linear(t);
            let mut binom = hp_const(l, BigRational::one());
            let mut binoms = vec![binom.clone()];
            for m in 0..depth {
                let mut shifted = lin.clone();
                hp_add_scaled(&mut shifted, &hp_const(l, rat(-(m as i64), 1)), &BigRational::one());
                binom = hp_mul(&binom, &shifted);
                binom = binom.into_iter().map(|(k, c)| (k, c / rat(m as i64 + 1, 1))).collect();
                binoms.push(binom.clone());
            }
            for (a, ca) in coeffs.iter().enumerate() {
                let oa = val + a as i64;
                for (m, bm) in binoms.iter().enumerate() {
                    let o = oa + m as i64;
                    if o > 0 {
                        break;
                    }
                    hp_add_scaled(series.entry(o).or_default(), bm, ca);
                }
            }
        }
        for (o, p) in &series {
            if *o < 0 && !p.is_empty() {
                return Err(PbwError::NotClassical);
            }
        }
        if let Some(p) = series.remove(&0) {
            if !p.is_empty() {
                out.terms.insert(key, p);
            }
        }
    }
    Ok(out)
}

fn ug_single(n: usize, l: usize, e: Option<usize>, f: Option<usize>, p: HPoly) -> UgElem {
    let mut ev = vec![0; n];
    let mut fv = vec![0; n];
    if let Some(k) = e {
        ev[k] = 1;
    }
    if let Some(k) = f {
        fv[k] = 1;
    }
    let _ = l;
    let mut out = UgElem::default();
    if !p.is_empty() {
        out.terms.insert((ev, fv), p);
    }
    out
}

/// Chevalley relations of `U(g)` recovered from the structure constants at `v = 1`.
pub fn chevalley_check(alg: &mut Algebra) -> Result<Vec<CheckLine>, PbwError> {
    let l = alg.rank();
    let n = alg.nroots();
    let cartan = alg.rs.cartan.clone();
    let mut lines = Vec::new();
    let h: Vec<Elem> = (0..l)
        .map(|i| {
            let (e, f) = (alg.e_simple(i), alg.f_simple(i));
            alg.commutator(&e, &f)
        })
        .collect::<Result<_, _>>()?;
    let mut ok = true;
    for i in 0..l {
        for j in 0..l {
            let (e, f) = (alg.e_simple(i), alg.f_simple(j));
            let c = ug_limit(&alg.commutator(&e, &f)?)?;
            let expect = if i == j { ug_single(n, l, None, None, hp_linear(&unit(l, i))) } else { UgElem::default() };
            ok &= c == expect;
        }
    }
    lines.push(CheckLine::new("[e_i, f_j] = delta_ij H_i", ok, format!("{} pairs", l * l)));
    let mut ok = true;
    for i in 0..l {
        for j in 0..l {
            let a = cartan[i][j];
            let (pe, pf) = (alg.simple_pos[j], alg.simple_pos[j]);
            let e = alg.e_simple(j);
            let f = alg.f_simple(j);
            let ce = ug_limit(&alg.commutator(&h[i], &e)?)?;
            let cf = ug_limit(&alg.commutator(&h[i], &f)?)?;
            ok &= ce == ug_single(n, l, Some(pe), None, hp_const(l, rat(a, 1)));
            ok &= cf == ug_single(n, l, None, Some(pf), hp_const(l, rat(-a, 1)));
            ok &= ug_limit(&alg.commutator(&h[i], &h[j])?)?.is_zero();
        }
    }
    lines.push(CheckLine::new("[H_i, e_j] = a_ij e_j, [H_i, f_j] = -a_ij f_j", ok, format!("{} pairs", l * l)));
    let mut ok = true;
    for i in 0..l {
        for j in 0..l {
            if i == j {
                continue;
            }
            for plus in [true, false] {
                let (gi, gj) = if plus { (alg.e_simple(i), alg.e_simple(j)) } else { (alg.f_simple(i), alg.f_simple(j)) };
                let mut x = gj;
                for _ in 0..(1 - cartan[i][j]) {
                    x = alg.commutator(&gi, &x)?;
                }
                ok &= ug_limit(&x)?.is_zero();
            }
        }
    }
    lines.push(CheckLine::new("classical Serre", ok, format!("rank {}", l)));
    let mut ok = true;
    for k in 0..n {
        let beta = alg.ordering[k].clone();
        for (i, hi) in h.iter().enumerate() {
            let w: i64 = (0..l).map(|j| cartan[i][j] * beta[j]).sum();
            let e = alg.e(k);
            let c = ug_limit(&alg.commutator(hi, &e)?)?;
            ok &= c == ug_single(n, l, Some(k), None, hp_const(l, rat(w, 1)));
        }
    }
    lines.push(CheckLine::new("root vectors have weight beta at v = 1", ok, format!("{} roots", n)));
    Ok(lines)
}

fn unit(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

/// Commutative polynomial in `e~_beta`, `t_i`, `f~_beta` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ClElem {
    pub terms: BTreeMap<Mono, BigRational>,
}

impl ClElem {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, o: &ClElem, c: &BigRational) {
        for (m, x) in &o.terms {
            let e = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *e += x * c;
            if e.is_zero() {
                self.terms.remove(m);
            }
        }
    }

    pub fn mul(&self, o: &ClElem) -> ClElem {
        let mut out = ClElem::default();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let m = Mono {
                    e: a.e.iter().zip(&b.e).map(|(p, q)| p + q).collect(),
                    t: a.t.iter().zip(&b.t).map(|(p, q)| p + q).collect(),
                    f: a.f.iter().zip(&b.f).map(|(p, q)| p + q).collect(),
                };
                out.add_scaled(&ClElem { terms: [(m, BigRational::one())].into() }, &(x * y));
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({})*{}", c, m.label(Form::Standard).replace('e', "e~").replace('f', "f~")))
            .collect();
        parts.join(" + ")
    }
}

/// Passage between the PBW basis and ordered monomials in `e~`, `t`, `f~`,
/// where `e~ = (1 - q_beta^-2) e_beta` and `f~ = (1 - q_beta^-2) e^(h beta^vee) f_beta`.
pub struct Tilde {
    cache: HashMap<Mono, Elem>,
}

impl Default for Tilde {
    fn default() -> Self {
        Self::new()
    }
}

impl Tilde {
    pub fn new() -> Self {
        Tilde { cache: HashMap::new() }
    }

    fn gens(alg: &Algebra, k: usize) -> (Elem, Elem) {
        let c = &Coeff::one() - &alg.q_beta(k).pow(-2);
        let et = alg.e(k).scale(&c);
        let tor = alg.torus(alg.coroot_exp(k));
        let ft = Elem::from_mono(tor.terms.keys().next().unwrap().clone());
        (et, ft.scale(&c))
    }

    /// The ordered product `e~^r t^s f~^t` in the algebra.
    pub fn lift_mono(&mut self, alg: &mut Algebra, m: &Mono) -> Result<Elem, PbwError> {
        if let Some(x) = self.cache.get(m) {
            return Ok(x.clone());
        }
        let n = alg.nroots();
        let mut acc = alg.unit();
        for k in 0..n {
            for _ in 0..m.e[k] {
                let (et, _) = Self::gens(alg, k);
                acc = alg.mul(&acc, &et)?;
            }
        }
        acc = alg.mul(&acc, &alg.torus(m.t.clone()))?;
        for k in (0..n).rev() {
            for _ in 0..m.f[k] {
                let (_, ft) = Self::gens(alg, k);
                let fk = alg.f(k);
                let f_tilde = alg.mul(&ft, &fk)?;
                acc = alg.mul(&acc, &f_tilde)?;
            }
        }
        self.cache.insert(m.clone(), acc.clone());
        Ok(acc)
    }

    pub fn lift(&mut self, alg: &mut Algebra, x: &ClElem) -> Result<Elem, PbwError> {
        let mut out = Elem::zero();
        for (m, c) in &x.terms {
            let l = self.lift_mono(alg, m)?;
            out.add_scaled(&l, &Coeff::from_rational(c));
        }
        Ok(out)
    }

    /// Coordinates of `x` against the ordered tilde monomials (coefficients in `Q(v)`).
    pub fn coords(&mut self, alg: &mut Algebra, x: &Elem) -> Result<BTreeMap<Mono, Coeff>, PbwError> {
        let mut out = BTreeMap::new();
        for (m, c) in &x.terms {
            let mut tm = m.clone();
            for k in 0..m.f.len() {
                let chi = alg.coroot_exp(k);
                for (ti, ci) in tm.t.iter_mut().zip(&chi) {
                    *ti -= ci * m.f[k] as i64;
                }
            }
            let l = self.lift_mono(alg, &tm)?;
            debug_assert_eq!(l.len(), 1);
            let kappa = l.coefficient(m);
            out.insert(tm, c / &kappa);
        }
        Ok(out)
    }
}

/// `{x, y} = (1/2d) [x, y] / (v - 1)` at `v = 1`, in tilde coordinates.
pub fn poisson_bracket(alg: &mut Algebra, tl: &mut Tilde, x: &Elem, y: &Elem) -> Result<ClElem, PbwError> {
    let c = alg.commutator(x, y)?;
    let coords = tl.coords(alg, &c)?;
    let den = &Coeff::v_pow(1) - &Coeff::one();
    let scale = rat(1, 2 * alg.d);
    let mut out = ClElem::default();
    for (m, k) in coords {
        let q = &k / &den;
        let val = q.at_one().map_err(|_| PbwError::NotClassical)?;
        if !val.is_zero() {
            out.terms.insert(m, val * &scale);
        }
    }
    Ok(out)
}

/// Classical image of an element of the tilde subalgebra.
pub fn classical(alg: &mut Algebra, tl: &mut Tilde, x: &Elem) -> Result<ClElem, PbwError> {
    let mut out = ClElem::default();
    for (m, k) in tl.coords(alg, x)? {
        let val = k.at_one().map_err(|_| PbwError::NotClassical)?;
        if !val.is_zero() {
            out.terms.insert(m, val);
        }
    }
    Ok(out)
}

/// Skew symmetry, Leibniz and Jacobi on sampled triples of tilde generators.
pub fn poisson_check(alg: &mut Algebra, triples: usize, seed: u64) -> Result<Vec<CheckLine>, PbwError> {
    let n = alg.nroots();
    let l = alg.rank();
    let mut tl = Tilde::new();
    let mut gens: Vec<ClElem> = Vec::new();
    for k in 0..n {
        for plus in [true, false] {
            let mut m = Mono::unit(n, l);
            if plus {
                m.e[k] = 1;
            } else {
                m.f[k] = 1;
            }
            gens.push(ClElem { terms: [(m, BigRational::one())].into() });
        }
    }
    for i in 0..l {
        let mut m = Mono::unit(n, l);
        m.t[i] = 1;
        gens.push(ClElem { terms: [(m, BigRational::one())].into() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut skew, mut jac, mut leib) = (0, 0, 0);
    for _ in 0..triples {
        let pick: Vec<ClElem> = (0..3).map(|_| gens[rng.gen_range(0..gens.len())].clone()).collect();
        let lifts: Vec<Elem> = pick.iter().map(|g| tl.lift(alg, g)).collect::<Result<_, _>>()?;
        let xy = poisson_bracket(alg, &mut tl, &lifts[0], &lifts[1])?;
        let yx = poisson_bracket(alg, &mut tl, &lifts[1], &lifts[0])?;
        let mut s = xy.clone();
        s.add_scaled(&yx, &BigRational::one());
        if !s.is_zero() {
            skew += 1;
        }
        let mut total = ClElem::default();
        for r in 0..3 {
            let (a, b, c) = (&lifts[r], &lifts[(r + 1) % 3], &lifts[(r + 2) % 3]);
            let bc = poisson_bracket(alg, &mut tl, b, c)?;
            let bc_l = tl.lift(alg, &bc)?;
            let j = poisson_bracket(alg, &mut tl, a, &bc_l)?;
            total.add_scaled(&j, &BigRational::one());
        }
        if !total.is_zero() {
            jac += 1;
        }
        // {x, yz} = {x, y} z + y {x, z}
        let yz = alg.mul(&lifts[1], &lifts[2])?;
        let lhs = poisson_bracket(alg, &mut tl, &lifts[0], &yz)?;
        let xz = poisson_bracket(alg, &mut tl, &lifts[0], &lifts[2])?;
        let mut rhs = xy.mul(&pick[2]);
        rhs.add_scaled(&pick[1].mul(&xz), &BigRational::one());
        rhs.add_scaled(&lhs, &rat(-1, 1));
        if !rhs.is_zero() {
            leib += 1;
        }
    }
    Ok(vec![
        CheckLine::new("Poisson skew", skew == 0, format!("{} triples, {} failures", triples, skew)),
        CheckLine::new("Poisson Leibniz", leib == 0, format!("{} triples, {} failures", triples, leib)),
        CheckLine::new("Poisson Jacobi", jac == 0, format!("{} triples, {} failures", triples, jac)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_expansion_of_quantum_two() {
        // v + v^-1 = 2 + eps^2 - eps^3 + ...
        let c = Coeff::laurent(&[(1, 1), (-1, 1)]);
        let (val, s) = laurent_at_one(&c, 3).unwrap();
        assert_eq!(val, 0);
        assert_eq!(s, vec![rat(2, 1), rat(0, 1), rat(1, 1), rat(-1, 1)]);
    }

    #[test]
    fn pole_of_inverse() {
        let c = (&Coeff::v_pow(1) - &Coeff::one()).inv().unwrap();
        let (val, s) = laurent_at_one(&c, 0).unwrap();
        assert_eq!(val, -1);
        assert_eq!(s, vec![rat(1, 1), rat(0, 1)]);
    }
}
