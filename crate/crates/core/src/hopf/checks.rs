use super::{Hopf, Tensor};
use crate::pbw::checks::{random_elem, CheckLine};
use crate::pbw::{Elem, PbwError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generators `e_i, f_i, t_i^{+-1}` plus `count` random elements of degree at most 3.
pub fn sample_set(h: &Hopf, count: usize, seed: u64) -> Vec<Elem> {
    let a = &h.alg;
    let mut out = Vec::new();
    for i in 0..a.rank() {
        out.push(a.e_simple(i));
        out.push(a.f_simple(i));
        out.push(a.t(i, 1));
        out.push(a.t(i, -1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        out.push(random_elem(a, &mut rng, 3, 2));
    }
    out
}

fn mult(h: &mut Hopf, t: &Tensor) -> Result<Elem, PbwError> {
    let mut out = Elem::zero();
    for (k, c) in &t.terms {
        let p = h.alg.mul(&Elem::from_mono(k[0].clone()), &Elem::from_mono(k[1].clone()))?;
        out.add_scaled(&p, c);
    }
    Ok(out)
}

fn counted(name: &str, total: usize, bad: usize) -> CheckLine {
    CheckLine::new(name, bad == 0, format!("{} elements, {} failures", total, bad))
}

/// Coassociativity, counit, antipode, `S S^-1 = 1`, multiplicativity of `Delta`.
pub fn hopf_axioms(h: &mut Hopf, samples: &[Elem]) -> Result<Vec<CheckLine>, PbwError> {
    let n = samples.len();
    let (mut coassoc, mut counit, mut anti, mut inv) = (0, 0, 0, 0);
    for x in samples {
        let d = h.coproduct(x)?;
        let left = d.expand_factor(0, |m| h.coproduct_mono(m))?;
        let right = d.expand_factor(1, |m| h.coproduct_mono(m))?;
        if left != right {
            coassoc += 1;
        }
        let unit = h.alg.unit();
        let mut l = Elem::zero();
        let mut r = Elem::zero();
        for (k, c) in &d.terms {
            let a = Elem::from_mono(k[0].clone());
            let b = Elem::from_mono(k[1].clone());
            l.add_scaled(&b, &(c * &h.counit(&a)));
            r.add_scaled(&a, &(c * &h.counit(&b)));
        }
        if &l != x || &r != x {
            counit += 1;
        }
        let eps = unit.scale(&h.counit(x));
        let sl = d.map_factor(0, |m| h.antipode(&Elem::from_mono(m.clone())))?;
        let sr = d.map_factor(1, |m| h.antipode(&Elem::from_mono(m.clone())))?;
        if mult(h, &sl)? != eps || mult(h, &sr)? != eps {
            anti += 1;
        }
        let s = h.antipode(x)?;
        let si = h.antipode_inverse(x)?;
        if &h.antipode_inverse(&s)? != x || &h.antipode(&si)? != x {
            inv += 1;
        }
    }
    let mut hom = 0;
    for w in samples.windows(2) {
        let p = h.alg.mul(&w[0], &w[1])?;
        let lhs = h.coproduct(&p)?;
        let a = h.coproduct(&w[0])?;
        let b = h.coproduct(&w[1])?;
        if lhs != a.mul(&b, &mut h.alg)? {
            hom += 1;
        }
    }
    Ok(vec![
        counted("coassociativity", n, coassoc),
        counted("counit", n, counit),
        counted("antipode", n, anti),
        counted("antipode inverse", n, inv),
        CheckLine::new("coproduct multiplicative", hom == 0, format!("{} pairs, {} failures", n.saturating_sub(1), hom)),
    ])
}

/// `Ad x(wz) = Ad x_2(w) Ad x_1(z)` and `Ad t(w) = t^-1 w t`.
pub fn adjoint_checks(h: &mut Hopf, xs: &[Elem], ws: &[Elem]) -> Result<Vec<CheckLine>, PbwError> {
    let mut bad = 0;
    let mut total = 0;
    for x in xs {
        let d = h.coproduct(x)?;
        for pair in ws.windows(2) {
            let (w, z) = (&pair[0], &pair[1]);
            total += 1;
            let wz = h.alg.mul(w, z)?;
            let lhs = h.adjoint(x, &wz)?;
            let mut rhs = Elem::zero();
            for (k, c) in &d.terms {
                let x1 = Elem::from_mono(k[0].clone());
                let x2 = Elem::from_mono(k[1].clone());
                let a = h.adjoint(&x2, w)?;
                let b = h.adjoint(&x1, z)?;
                rhs.add_scaled(&h.alg.mul(&a, &b)?, c);
            }
            if lhs != rhs {
                bad += 1;
            }
        }
    }
    let mut tbad = 0;
    for i in 0..h.alg.rank() {
        let (t, ti) = (h.alg.t(i, 1), h.alg.t(i, -1));
        for w in ws {
            let lhs = h.adjoint(&t, w)?;
            let rhs = h.alg.mul_all(&[&ti, w, &t])?;
            if lhs != rhs {
                tbad += 1;
            }
        }
    }
    Ok(vec![
        CheckLine::new("Ad multiplicative", bad == 0, format!("{} triples, {} failures", total, bad)),
        CheckLine::new("Ad t = conjugation", tbad == 0, format!("{} elements, {} failures", ws.len(), tbad)),
    ])
}

/// `S^2(e_i)` is `e_i` up to a power of `v`.
pub fn antipode_square(h: &mut Hopf) -> Result<CheckLine, PbwError> {
    let mut ok = true;
    let mut detail = Vec::new();
    for i in 0..h.alg.rank() {
        for g in [h.alg.e_simple(i), h.alg.f_simple(i)] {
            let s2 = {
                let s = h.antipode(&g)?;
                h.antipode(&s)?
            };
            let m = g.terms.keys().next().expect("generator").clone();
            let c = s2.coefficient(&m);
            ok &= s2.len() == 1 && c.as_monomial().is_some();
            detail.push(format!("{}", c));
        }
    }
    Ok(CheckLine::new("S^2 on generators is torus conjugation", ok, detail.join(", ")))
}
