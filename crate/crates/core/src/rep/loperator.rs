use super::action::Action;
use super::rmatrix::RData;
use super::RepError;
use crate::coeff::{qfactorial, Coeff};
use crate::hopf::Hopf;
use crate::linalg::{rat, Matrix};
use crate::pbw::checks::CheckLine;
use crate::pbw::{Algebra, Elem, Mono};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeSet;

/// Square matrix with entries in the algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct ElemMatrix {
    pub n: usize,
    pub entries: Vec<Vec<Elem>>,
}

impl ElemMatrix {
    pub fn identity(alg: &Algebra, n: usize) -> Self {
        let entries = (0..n)
            .map(|r| (0..n).map(|c| if r == c { alg.unit() } else { Elem::zero() }).collect())
            .collect();
        ElemMatrix { n, entries }
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r][c]
    }

    pub fn mul(&self, o: &Self, alg: &mut Algebra) -> Result<Self, RepError> {
        let n = self.n;
        let mut entries = vec![vec![Elem::zero(); n]; n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = Elem::zero();
                for k in 0..n {
                    let (a, b) = (&self.entries[r][k], &o.entries[k][c]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc.add_scaled(&alg.mul(a, b)?, &Coeff::one());
                }
                entries[r][c] = acc;
            }
        }
        Ok(ElemMatrix { n, entries })
    }
}

fn hcoords_dot(x: &[BigRational], w: &[i64]) -> BigRational {
    x.iter().zip(w).fold(BigRational::zero(), |acc, (a, &b)| acc + a * rat(b, 1))
}

/// H-coordinates of `C H_i`.
fn cayley_h(alg: &Algebra, data: &RData, i: usize) -> Vec<BigRational> {
    (0..alg.rank()).map(|j| data.cayley.get(j, i) * rat(alg.rs.d[j], alg.rs.d[i])).collect()
}

/// `(id (x) pi_V)` of the Cartan factor: diagonal of torus elements. With
/// `flip` the factor of `R_21` is taken.
fn cartan_column(alg: &Algebra, data: &RData, v: &Action, flip: bool) -> Result<ElemMatrix, RepError> {
    let l = alg.rank();
    let mut out = ElemMatrix::identity(alg, v.dim());
    for (a, nu) in v.module.weights.iter().enumerate() {
        let mut x = vec![BigRational::zero(); l];
        for i in 0..l {
            let y = alg.y_coords(i);
            let ch = cayley_h(alg, data, i);
            // R: Y_i (x) H_i + C H_i (x) Y_i ; R_21: H_i (x) Y_i + Y_i (x) C H_i
            let (c1, e1, c2, e2) = if flip {
                (hcoords_dot(&y, nu), unit_h(l, i), hcoords_dot(&ch, nu), y.clone())
            } else {
                (rat(nu[i], 1), y.clone(), hcoords_dot(&y, nu), ch)
            };
            for j in 0..l {
                x[j] += &c1 * &e1[j] + &c2 * &e2[j];
            }
        }
        out.entries[a][a] = alg.torus(alg.texp_of_h("L-operator torus", &x)?);
    }
    Ok(out)
}

fn unit_h(l: usize, i: usize) -> Vec<BigRational> {
    (0..l).map(|j| rat((i == j) as i64, 1)).collect()
}

/// `(id (x) pi_V) exp_q[(1 - q^-2) a (x) b]` for an element `a` and a nilpotent matrix `b`.
fn exp_column(alg: &mut Algebra, k: usize, a: &Elem, b: &super::CMat) -> Result<ElemMatrix, RepError> {
    let n = b.rows;
    let sub = alg.sub(alg.root_length(k));
    let qb = sub.q();
    let s = &Coeff::one() - &qb.pow(-2);
    let mut out = ElemMatrix::identity(alg, n);
    let mut apow = alg.unit();
    let mut bpow = super::CMat::identity(n);
    for j in 1..=n as i64 {
        bpow = bpow.mul(b);
        if bpow.is_zero() {
            break;
        }
        apow = alg.mul(&apow, a)?;
        let c = &(&qb.pow(j * (j + 1) / 2) / &qfactorial(j, sub)?) * &s.pow(j);
        for r in 0..n {
            for col in 0..n {
                let m = bpow.get(r, col);
                if !m.is_zero() {
                    out.entries[r][col].add_scaled(&apow, &(&c * m));
                }
            }
        }
    }
    Ok(out)
}

/// `L^V = (id (x) pi_V)(R R_21)` as a matrix of algebra elements. Entry
/// `(a, b)` is `(id (x) v_a^*)(R R_21)(id (x) v_b)`.
pub fn l_operator(alg: &mut Algebra, data: &RData, v: &Action) -> Result<ElemMatrix, RepError> {
    let nr = alg.nroots();
    let mut r = cartan_column(alg, data, v, false)?;
    for k in (0..nr).rev() {
        let e = alg.e(k);
        let tf = alg.mul(&alg.torus(data.f_torus(alg, k)?), &alg.f(k))?;
        let b = v.act(alg, &tf);
        let f = exp_column(alg, k, &e, &b)?;
        r = r.mul(&f, alg)?;
    }
    let mut r21 = cartan_column(alg, data, v, true)?;
    for k in (0..nr).rev() {
        let e = alg.e(k);
        let tf = alg.mul(&alg.torus(data.f_torus(alg, k)?), &alg.f(k))?;
        let b = v.act(alg, &e);
        let f = exp_column(alg, k, &tf, &b)?;
        r21 = r21.mul(&f, alg)?;
    }
    r.mul(&r21, alg)
}

/// Index of a highest weight vector: no `X_i^+` maps into it from above.
pub fn highest_index(v: &Action) -> Option<usize> {
    let m = v.module;
    (0..m.dim()).find(|&c| m.xp.iter().all(|x| (0..m.dim()).all(|r| x.get(r, c).is_zero())))
}

/// The highest weight entry of `L^V` on the fundamental module `V` of
/// highest weight `Y_i` against the torus monomial of `L_i^2`.
pub fn l_square_check(alg: &mut Algebra, data: &RData, v: &Action, i: usize) -> Result<CheckLine, RepError> {
    let lv = l_operator(alg, data, v)?;
    let top = highest_index(v).ok_or_else(|| RepError::Mismatch("no highest weight vector".into()))?;
    let expect = alg.torus(alg.l_exp(i, 2)?);
    let got = lv.get(top, top);
    Ok(CheckLine::new(
        format!("L^V highest weight entry = L_{}^2 on {}", i + 1, v.module.name),
        got == &expect,
        format!("{}", got),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub start: String,
    pub bound: usize,
    pub dims: Vec<usize>,
    pub stabilized: bool,
}

fn span_rank(elems: &[Elem]) -> usize {
    let monos: BTreeSet<&Mono> = elems.iter().flat_map(|e| e.terms.keys()).collect();
    let monos: Vec<&Mono> = monos.into_iter().collect();
    let rows: Vec<Vec<Coeff>> = elems.iter().map(|e| monos.iter().map(|m| e.coefficient(m)).collect()).collect();
    if rows.is_empty() || monos.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows).rank()
}

/// Applies `Ad e_i`, `Ad f_i`, `Ad t_i` to the span of `x` up to `bound`
/// times. Stabilized means some step added nothing new.
pub fn ad_orbit_probe(h: &mut Hopf, x: &Elem, bound: usize) -> Result<OrbitReport, RepError> {
    let mut gens = Vec::new();
    for i in 0..h.alg.rank() {
        gens.push(h.alg.e_simple(i));
        gens.push(h.alg.f_simple(i));
        gens.push(h.alg.t(i, 1));
    }
    let mut basis = vec![x.clone()];
    let mut frontier = vec![x.clone()];
    let mut dims = vec![span_rank(&basis)];
    let mut stabilized = false;
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let y = h.adjoint(g, w)?;
                if y.is_zero() {
                    continue;
                }
                let mut trial = basis.clone();
                trial.push(y.clone());
                if span_rank(&trial) > basis.len() {
                    basis.push(y.clone());
                    next.push(y);
                }
            }
        }
        dims.push(basis.len());
        if next.is_empty() {
            stabilized = true;
            break;
        }
        frontier = next;
    }
    Ok(OrbitReport { start: format!("{}", x), bound, dims, stabilized })
}
