//! Matrix models in `SL_n`: root subgroups, Weyl representatives, the
//! element `u`, and the dimension ledger of the slice `s Z N_s`.

use crate::lie::{CartanType, Root, RootSystem};
use crate::linalg::{rat, Matrix};
use crate::pbw::checks::CheckLine;
use crate::realization::{QMatrix, Realization};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SliceError {
    #[error("matrix models exist for type A only, got {0}")]
    NotTypeA(String),
    #[error("parameter t must be nonzero")]
    ZeroParameter,
    #[error("{0} is not a root")]
    NotARoot(String),
}

/// `(i, j)` with `beta = e_i - e_j` for a root of `A_(n-1)` in simple root coordinates.
pub fn root_indices(beta: &[i64]) -> Result<(usize, usize), SliceError> {
    let nz: Vec<usize> = (0..beta.len()).filter(|&k| beta[k] != 0).collect();
    let bad = || SliceError::NotARoot(format!("{:?}", beta));
    let (first, last) = (*nz.first().ok_or_else(bad)?, *nz.last().ok_or_else(bad)?);
    let sign = beta[first];
    if (sign != 1 && sign != -1) || (first..=last).any(|k| beta[k] != sign) {
        return Err(bad());
    }
    Ok(if sign == 1 { (first, last + 1) } else { (last + 1, first) })
}

fn unit(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m.set(i, j, BigRational::one());
    m
}

/// `X_alpha(t) = exp(t X_alpha) = 1 + t E_ij` in `SL_n`.
pub fn root_subgroup_element(n: usize, alpha: &[i64], t: &BigRational) -> Result<QMatrix, SliceError> {
    let (i, j) = root_indices(alpha)?;
    Ok(QMatrix::identity(n).add(&unit(n, i, j).scale(t)))
}

/// `s_gamma(t) = X_(-gamma)(t) X_gamma(-1/t) X_(-gamma)(t)`.
pub fn weyl_representative(n: usize, gamma: &[i64], t: &BigRational) -> Result<QMatrix, SliceError> {
    if t.is_zero() {
        return Err(SliceError::ZeroParameter);
    }
    let neg: Vec<i64> = gamma.iter().map(|x| -x).collect();
    let a = root_subgroup_element(n, &neg, t)?;
    let b = root_subgroup_element(n, gamma, &(-t.recip()))?;
    Ok(a.mul(&b).mul(&a))
}

/// `u = prod_i exp(t_i X_(-gamma_i))` in segment order.
pub fn u_element(n: usize, gammas: &[Root], t: &[BigRational]) -> Result<QMatrix, SliceError> {
    let mut out = QMatrix::identity(n);
    for (g, ti) in gammas.iter().zip(t) {
        let neg: Vec<i64> = g.iter().map(|x| -x).collect();
        out = out.mul(&root_subgroup_element(n, &neg, ti)?);
    }
    Ok(out)
}

/// Representative `s_gamma_1(t_1) .. s_gamma_l'(t_l')`.
pub fn s_representative(n: usize, gammas: &[Root], t: &[BigRational]) -> Result<QMatrix, SliceError> {
    let mut out = QMatrix::identity(n);
    for (g, ti) in gammas.iter().zip(t) {
        out = out.mul(&weyl_representative(n, g, ti)?);
    }
    Ok(out)
}

fn diag(xs: &[BigRational]) -> QMatrix {
    let mut m = QMatrix::zeros(xs.len(), xs.len());
    for (i, x) in xs.iter().enumerate() {
        m.set(i, i, x.clone());
    }
    m
}

fn is_strictly_lower_unipotent(m: &QMatrix) -> bool {
    (0..m.rows).all(|r| {
        (0..m.cols).all(|c| {
            let x = m.get(r, c);
            if r == c { x.is_one() } else if c > r { x.is_zero() } else { true }
        })
    })
}

fn flatten(m: &QMatrix) -> Vec<BigRational> {
    m.to_rows().into_iter().flatten().collect()
}

fn span_dim(ms: &[QMatrix]) -> usize {
    if ms.is_empty() {
        return 0;
    }
    Matrix::from_rows(ms.iter().map(flatten).collect()).rank()
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceData {
    pub group: String,
    pub s_word: Vec<usize>,
    pub dim_g: usize,
    pub length: usize,
    pub d0: usize,
    pub rank: usize,
    pub lprime: usize,
    pub segment: usize,
    pub dim_z: usize,
    pub dim_n_s: usize,
    /// `dim G - 2 |Delta_(m_+)|`.
    pub reduced_dim: i64,
    /// `l(s) + 2 D_0 + l - l'`.
    pub slice_dim: i64,
    /// Same two numbers from `SL_n` matrices, when available.
    pub matrix_dim_z: Option<usize>,
    pub matrix_dim_n_s: Option<usize>,
    pub injective_samples: Option<usize>,
    pub lines: Vec<CheckLine>,
}

impl SliceData {
    pub fn pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }
}

/// Root-level counts, plus the `SL_n` audit for type A.
pub fn slice_audit(r: &Realization, samples: usize, seed: u64) -> Result<SliceData, SliceError> {
    let rs = &r.rs;
    let l = rs.rank;
    let dim_g = rs.dimension();
    let lprime = r.lprime();
    let fixed: Vec<&Root> = rs.positive.iter().filter(|b| r.s.apply(b) == **b).collect();
    let levi = r.levi_positive();
    // z = m + h^s, with h^s of dimension l - l'
    let dim_z = 2 * levi.len() + (l - lprime);
    let dim_n_s = rs
        .positive
        .iter()
        .filter(|b| !levi.contains(b) && !rs.is_positive_root(&r.s.apply(b)))
        .count();
    let reduced_dim = dim_g as i64 - 2 * r.segment_len() as i64;
    let slice_dim = (r.length + 2 * r.d0 + l - lprime) as i64;
    let mut lines = vec![
        CheckLine::new(
            "dim G - 2|Delta_m+| = l(s) + 2 D_0 + l - l'",
            reduced_dim == slice_dim,
            format!("{} - 2*{} = {} vs {} + 2*{} + {} - {} = {}", dim_g, r.segment_len(), reduced_dim, r.length, r.d0, l, lprime, slice_dim),
        ),
        CheckLine::new(
            "l(s) + 2 D_0 + l - l' = dim Z + dim N_s",
            slice_dim == (dim_z + dim_n_s) as i64,
            format!("{} vs {} + {}", slice_dim, dim_z, dim_n_s),
        ),
        CheckLine::new(
            "fixed positive roots lie in the Levi factor",
            fixed.len() == levi.len() && fixed.iter().all(|b| levi.contains(b)),
            format!("D_0 = {}, Levi positive roots {}", fixed.len(), levi.len()),
        ),
    ];
    let (mut mz, mut mn, mut inj) = (None, None, None);
    if rs.ty == CartanType::A {
        let audit = matrix_audit(r, samples, seed)?;
        lines.push(CheckLine::new(
            "SL_n dimensions of Z and N_s",
            audit.0 == dim_z && audit.1 == dim_n_s,
            format!("dim z = {}, dim N_s = {}", audit.0, audit.1),
        ));
        lines.push(CheckLine::new(
            "conjugation N x sZN_s -> NsZN injective on samples",
            audit.2 == samples,
            format!("{} distinct images of {} samples", audit.2, samples),
        ));
        mz = Some(audit.0);
        mn = Some(audit.1);
        inj = Some(audit.2);
    }
    Ok(SliceData {
        group: format!("{}", rs.label()),
        s_word: r.s_input.reduced_word(rs),
        dim_g,
        length: r.length,
        d0: r.d0,
        rank: l,
        lprime,
        segment: r.segment_len(),
        dim_z,
        dim_n_s,
        reduced_dim,
        slice_dim,
        matrix_dim_z: mz,
        matrix_dim_n_s: mn,
        injective_samples: inj,
        lines,
    })
}

fn random_rat(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=5);
    rat(num, den)
}

/// `(dim z, dim N_s, distinct conjugation images)` from `SL_n` matrices with all `t_i = 1`.
fn matrix_audit(r: &Realization, samples: usize, seed: u64) -> Result<(usize, usize, usize), SliceError> {
    let rs = &r.rs;
    let n = rs.rank + 1;
    let ones = vec![BigRational::one(); r.gammas.len()];
    let s = s_representative(n, &r.gammas, &ones)?;
    let sinv = s.inverse().expect("invertible");
    let levi = r.levi_positive();
    // h^s: traceless diagonal matrices commuting with s
    let mut hs = Vec::new();
    for k in 0..rs.rank {
        let mut xs = vec![BigRational::zero(); n];
        xs[k] = BigRational::one();
        xs[k + 1] = -BigRational::one();
        hs.push(diag(&xs));
    }
    let comm: Vec<Vec<BigRational>> = hs.iter().map(|h| flatten(&s.mul(h).sub(&h.mul(&s)))).collect();
    let kernel = Matrix::from_rows(comm).transpose().kernel();
    let mut z_basis: Vec<QMatrix> = kernel
        .iter()
        .map(|c| c.iter().zip(&hs).fold(QMatrix::zeros(n, n), |acc, (x, h)| acc.add(&h.scale(x))))
        .collect();
    for b in &levi {
        let (i, j) = root_indices(b)?;
        z_basis.push(unit(n, i, j));
        z_basis.push(unit(n, j, i));
    }
    let dim_z = span_dim(&z_basis);
    // N_s: root subgroups of n moved into the opposite unipotent radical
    let n_roots: Vec<&Root> = rs.positive.iter().filter(|b| !levi.contains(b)).collect();
    let mut ns_roots = Vec::new();
    for b in &n_roots {
        let x = root_subgroup_element(n, b, &BigRational::one())?;
        if is_strictly_lower_unipotent(&s.mul(&x).mul(&sinv)) {
            ns_roots.push((*b).clone());
        }
    }
    // injectivity of (v, y) -> v y v^-1 on random samples
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycles = monomial_cycles(&s);
    let mut images = BTreeSet::new();
    let mut inputs = BTreeSet::new();
    for _ in 0..samples {
        let mut v = QMatrix::identity(n);
        for b in &n_roots {
            v = v.mul(&root_subgroup_element(n, b, &random_rat(&mut rng))?);
        }
        let mut z = QMatrix::identity(n);
        for b in &levi {
            let neg: Vec<i64> = b.iter().map(|x| -x).collect();
            z = z.mul(&root_subgroup_element(n, b, &random_rat(&mut rng))?);
            z = z.mul(&root_subgroup_element(n, &neg, &random_rat(&mut rng))?);
        }
        // centralizer torus: y^|c_k| on the first cycle, y^-|c_0| on cycle k
        for k in 1..cycles.len() {
            let y = rat(rng.gen_range(1..=4), rng.gen_range(1..=4));
            let mut ds = vec![BigRational::one(); n];
            for &i in &cycles[0] {
                ds[i] = num_traits::pow(y.clone(), cycles[k].len());
            }
            for &i in &cycles[k] {
                ds[i] = num_traits::pow(y.recip(), cycles[0].len());
            }
            z = z.mul(&diag(&ds));
        }
        let mut w = QMatrix::identity(n);
        for b in &ns_roots {
            w = w.mul(&root_subgroup_element(n, b, &random_rat(&mut rng))?);
        }
        let x = s.mul(&z).mul(&w);
        if !inputs.insert((flatten(&v), flatten(&x))) {
            continue;
        }
        let img = v.mul(&x).mul(&v.inverse().expect("unipotent"));
        images.insert(flatten(&img));
    }
    let distinct = if images.len() == inputs.len() { samples } else { images.len() };
    Ok((dim_z, ns_roots.len(), distinct))
}

/// Cycles of the permutation underlying a monomial matrix.
fn monomial_cycles(m: &QMatrix) -> Vec<Vec<usize>> {
    let n = m.rows;
    let image = |c: usize| (0..n).find(|&r| !m.get(r, c).is_zero()).expect("monomial matrix");
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            cyc.push(k);
            k = image(k);
        }
        out.push(cyc);
    }
    out
}

/// `s_gamma(t)` induces the reflection `s_gamma` on diagonal matrices.
pub fn reflection_check(n: usize, rs: &RootSystem) -> Result<CheckLine, SliceError> {
    let mut bad = Vec::new();
    let d: Vec<BigRational> = (0..n).map(|k| rat(k as i64 + 2, 1)).collect();
    let dm = diag(&d);
    for g in &rs.positive {
        let (i, j) = root_indices(g)?;
        for t in [rat(1, 1), rat(-3, 2)] {
            let w = weyl_representative(n, g, &t)?;
            let conj = w.mul(&dm).mul(&w.inverse().expect("invertible"));
            let mut swapped = d.clone();
            swapped.swap(i, j);
            if conj != diag(&swapped) {
                bad.push(format!("{:?} t = {}", g, t));
            }
        }
    }
    Ok(CheckLine::new(
        format!("s_gamma(t) acts as the reflection on the torus of SL{}", n),
        bad.is_empty(),
        if bad.is_empty() { format!("{} roots", rs.positive.len()) } else { bad.join(", ") },
    ))
}

#[cfg(test)]
mod tests;
