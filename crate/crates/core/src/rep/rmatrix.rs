use super::action::{act_tensor, Action};
use super::{CMat, RepError};
use crate::coeff::{qfactorial, Coeff};
use crate::hopf::{Hopf, Tensor};
use crate::linalg::rat;
use crate::pbw::checks::CheckLine;
use crate::pbw::{Algebra, Elem};
use crate::realization::QMatrix;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Data of the universal R-matrix that is not in the algebra itself:
/// the Cayley operator `(1+s)/(1-s) P` on `h*` (zero for the standard one).
#[derive(Clone, Debug)]
pub struct RData {
    pub cayley: QMatrix,
}

impl RData {
    pub fn standard(rank: usize) -> Self {
        RData { cayley: QMatrix::zeros(rank, rank) }
    }

    pub fn twisted(cayley: &QMatrix) -> Self {
        RData { cayley: cayley.clone() }
    }

    /// Torus exponent of `exp(h C beta^vee)` for the root at position `k`.
    pub fn f_torus(&self, alg: &Algebra, k: usize) -> Result<Vec<i64>, RepError> {
        let b: Vec<BigRational> = alg.ordering[k].iter().map(|&x| rat(x, 1)).collect();
        Ok(alg.texp_of_hstar("R-matrix torus", &self.cayley.apply(&b))?)
    }

    /// `sum_i mu(Y_i) nu(H_i) + sum_i mu(C H_i) nu(Y_i)` in units of `h`.
    fn cartan_pairing(&self, alg: &Algebra, mu: &[i64], nu: &[i64]) -> BigRational {
        let l = alg.rank();
        let y: Vec<Vec<BigRational>> = (0..l).map(|i| alg.y_coords(i)).collect();
        let eval = |x: &[BigRational], w: &[i64]| -> BigRational {
            x.iter().zip(w).fold(BigRational::zero(), |acc, (a, &b)| acc + a * rat(b, 1))
        };
        let mut total = BigRational::zero();
        for i in 0..l {
            total += eval(&y[i], mu) * rat(nu[i], 1);
            // C H_i = h_(C alpha_i) / d_i in H-coordinates
            let ca: Vec<BigRational> = (0..l).map(|j| self.cayley.get(j, i).clone()).collect();
            let ch: Vec<BigRational> =
                ca.iter().zip(&alg.rs.d).map(|(c, &dj)| c * rat(dj, alg.rs.d[i])).collect();
            total += eval(&ch, mu) * eval(&y[i], nu);
        }
        total
    }

    pub fn cartan_factor(&self, alg: &Algebra, v: &Action, w: &Action) -> Result<CMat, RepError> {
        let (n, m) = (v.dim(), w.dim());
        let mut out = CMat::zeros(n * m, n * m);
        for (a, mu) in v.module.weights.iter().enumerate() {
            for (b, nu) in w.module.weights.iter().enumerate() {
                let x = self.cartan_pairing(alg, mu, nu) * rat(2 * alg.d, 1);
                if !x.is_integer() {
                    return Err(RepError::NonIntegral(format!("Cartan pairing {:?} {:?}", mu, nu)));
                }
                let e = x.to_integer().to_i64().expect("small exponent");
                out.set(a * m + b, a * m + b, Coeff::v_pow(e));
            }
        }
        Ok(out)
    }

    /// `exp_(q_beta)[(1 - q_beta^-2) x]` for a nilpotent `x`.
    fn exp_q(alg: &Algebra, k: usize, x: &CMat) -> Result<CMat, RepError> {
        let sub = alg.sub(alg.root_length(k));
        let qb = sub.q();
        let scaled = x.scale(&(&Coeff::one() - &qb.pow(-2)));
        let n = x.rows;
        let mut out = CMat::identity(n);
        let mut power = CMat::identity(n);
        for j in 1..=n as i64 {
            power = power.mul(&scaled);
            if power.is_zero() {
                break;
            }
            let c = &qb.pow(j * (j + 1) / 2) / &qfactorial(j, sub)?;
            out = out.add(&power.scale(&c));
        }
        Ok(out)
    }

    /// Factor `exp_(q_beta)[(1 - q_beta^-2) e_beta (x) exp(h C beta^vee) f_beta]` at position `k`.
    pub fn root_factor(&self, alg: &mut Algebra, v: &Action, w: &Action, k: usize) -> Result<CMat, RepError> {
        let e = alg.e(k);
        let tf = alg.mul(&alg.torus(self.f_torus(alg, k)?), &alg.f(k))?;
        let x = v.act(alg, &e).kron(&w.act(alg, &tf));
        Self::exp_q(alg, k, &x)
    }

    /// Cartan factor times the root factors, later roots to the left.
    pub fn r_matrix(&self, alg: &mut Algebra, v: &Action, w: &Action) -> Result<CMat, RepError> {
        let mut out = self.cartan_factor(alg, v, w)?;
        for k in (0..alg.nroots()).rev() {
            out = out.mul(&self.root_factor(alg, v, w, k)?);
        }
        Ok(out)
    }
}

fn swap_tensor(t: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for (k, c) in &t.terms {
        out.add_term(vec![k[1].clone(), k[0].clone()], c.clone());
    }
    out
}

/// First differing entry of two matrices.
pub fn witness(a: &CMat, b: &CMat) -> Option<String> {
    for r in 0..a.rows {
        for c in 0..a.cols {
            if a.get(r, c) != b.get(r, c) {
                return Some(format!("entry ({},{}): {} vs {}", r, c, a.get(r, c), b.get(r, c)));
            }
        }
    }
    None
}

fn generators(alg: &Algebra) -> Vec<(String, Elem)> {
    let mut out = Vec::new();
    for i in 0..alg.rank() {
        out.push((format!("e{}", i + 1), alg.e_simple(i)));
        out.push((format!("f{}", i + 1), alg.f_simple(i)));
        out.push((format!("t{}", i + 1), alg.t(i, 1)));
    }
    out
}

/// `R Delta(a) = Delta^op(a) R` for all generators `a`.
pub fn check_quasitriangular(h: &mut Hopf, data: &RData, v: &Action, w: &Action) -> Result<CheckLine, RepError> {
    let r = data.r_matrix(&mut h.alg, v, w)?;
    let mut bad = Vec::new();
    let gens = generators(&h.alg);
    for (name, a) in &gens {
        let d = h.coproduct(a)?;
        let lhs = r.mul(&act_tensor(&mut h.alg, v, w, &d));
        let rhs = act_tensor(&mut h.alg, v, w, &swap_tensor(&d)).mul(&r);
        if let Some(wit) = witness(&lhs, &rhs) {
            bad.push(format!("{}: {}", name, wit));
        }
    }
    let label = format!("quasitriangular on {} (x) {}", v.module.name, w.module.name);
    Ok(CheckLine::new(label, bad.is_empty(), if bad.is_empty() { format!("{} generators", gens.len()) } else { bad.join("; ") }))
}

/// `R12 R13 R23 = R23 R13 R12` on `V (x) V (x) V`.
pub fn check_ybe(h: &mut Hopf, data: &RData, v: &Action) -> Result<CheckLine, RepError> {
    let r = data.r_matrix(&mut h.alg, v, v)?;
    let n = v.dim();
    let id = CMat::identity(n);
    let r12 = r.kron(&id);
    let r23 = id.kron(&r);
    // P23 swaps the last two factors
    let mut p23 = CMat::zeros(n * n * n, n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                p23.set(a * n * n + c * n + b, a * n * n + b * n + c, Coeff::one());
            }
        }
    }
    let r13 = p23.mul(&r12).mul(&p23);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    let wit = witness(&lhs, &rhs);
    Ok(CheckLine::new(
        format!("Yang-Baxter on {}^3", v.module.name),
        wit.is_none(),
        wit.unwrap_or_else(|| format!("dimension {}", n * n * n)),
    ))
}

/// Which root factors conjugate `e_beta (x) exp(h(..) beta^vee) + 1 (x) e_beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugator {
    /// `R~_(beta_(k-1)) .. R~_(beta_1)`.
    Before,
    /// `R~_(beta_(k+1)) .. R~_(beta_D)`.
    After,
    /// `R~_(beta_(k-1)) .. R~_(beta_1)` with the inverse on the right.
    BeforeInverted,
}

/// `Delta(e_beta_k) = R~^-1 (e_beta_k (x) exp(h(..) beta^vee) + 1 (x) e_beta_k) R~` on `V (x) W`.
pub fn check_comult(h: &mut Hopf, data: &RData, v: &Action, w: &Action, k: usize, which: Conjugator) -> Result<CheckLine, RepError> {
    let e = h.alg.e(k);
    let d = h.coproduct(&e)?;
    let lhs = act_tensor(&mut h.alg, v, w, &d);
    let ev = v.act(&mut h.alg, &e);
    let ew = w.act(&mut h.alg, &e);
    let tor = h.alg.torus(h.twist_root_exp(k).to_vec());
    let tw = w.act(&mut h.alg, &tor);
    let middle = ev.kron(&tw).add(&CMat::identity(v.dim()).kron(&ew));
    let n = h.alg.nroots();
    let order: Vec<usize> = match which {
        Conjugator::Before | Conjugator::BeforeInverted => (0..k).rev().collect(),
        Conjugator::After => ((k + 1)..n).collect(),
    };
    let mut rt = CMat::identity(v.dim() * w.dim());
    for r in order {
        rt = rt.mul(&data.root_factor(&mut h.alg, v, w, r)?);
    }
    let inv = rt.inverse().ok_or_else(|| RepError::Mismatch("R factor not invertible".into()))?;
    let rhs = if which == Conjugator::BeforeInverted { rt.mul(&middle).mul(&inv) } else { inv.mul(&middle).mul(&rt) };
    let wit = witness(&lhs, &rhs);
    Ok(CheckLine::new(
        format!("coproduct of e_{} by conjugation ({:?})", crate::lie::root_label(&h.alg.ordering[k]), which),
        wit.is_none(),
        wit.unwrap_or_else(|| format!("on {} (x) {}", v.module.name, w.module.name)),
    ))
}
