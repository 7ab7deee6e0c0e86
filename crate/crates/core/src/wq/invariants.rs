use super::reduce::IdealReducer;
use super::WqError;
use crate::coeff::Coeff;
use crate::hopf::Hopf;
use crate::linalg::{rat, Matrix};
use crate::pbw::checks::CheckLine;
use crate::pbw::{Algebra, Elem, Form, Mono};
use crate::realization::Realization;
use crate::rep::{Action, WeightModule};
use serde::Serialize;
use std::collections::BTreeSet;

/// Torus exponents of `prod_j t_j^(2 d p_ij)`, one per `i`.
pub fn torus_generators(alg: &Algebra, r: &Realization) -> Result<Vec<Vec<i64>>, WqError> {
    let l = alg.rank();
    let mut out = Vec::new();
    for i in 0..l {
        let mut row = Vec::new();
        for j in 0..l {
            let x = r.consts.p.get(i, j) * rat(2 * alg.d, 1);
            if !x.is_integer() {
                return Err(WqError::BadParameters(format!("2 d p_{}{} = {}", i + 1, j + 1, x)));
            }
            row.push(i64::try_from(x.to_integer()).map_err(|_| WqError::BadParameters("exponent overflow".into()))?);
        }
        out.push(row);
    }
    Ok(out)
}

/// Coset basis: `f t e` monomials without segment `e`-factors, `t` a sum of
/// at most `m` signed torus generators, root degree plus `m` at most `max_degree`.
pub fn coset_basis(alg: &Algebra, red: &IdealReducer, gens: &[Vec<i64>], max_degree: u32) -> Vec<Mono> {
    let n = alg.nroots();
    let l = alg.rank();
    let mut tori: Vec<BTreeSet<Vec<i64>>> = vec![BTreeSet::from([vec![0; l]])];
    for m in 1..=max_degree as usize {
        let mut next = BTreeSet::new();
        for t in &tori[m - 1] {
            for g in gens {
                for sign in [1, -1] {
                    next.insert(t.iter().zip(g).map(|(a, b)| a + sign * b).collect::<Vec<i64>>());
                }
            }
        }
        tori.push(next);
    }
    let mut roots: Vec<(u32, Mono)> = Vec::new();
    let letters: Vec<(bool, usize)> = (0..n)
        .filter(|&k| !red.chi.in_segment(k))
        .map(|k| (true, k))
        .chain((0..n).map(|k| (false, k)))
        .collect();
    enumerate(&letters, 0, max_degree, &mut Mono::unit(n, l), &mut roots);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (deg, m) in roots {
        let mut used = BTreeSet::new();
        for budget in 0..=(max_degree - deg) as usize {
            for t in &tori[budget] {
                if !used.insert(t.clone()) {
                    continue;
                }
                let mut mm = m.clone();
                mm.t = t.clone();
                if seen.insert(mm.clone()) {
                    out.push(mm);
                }
            }
        }
    }
    out
}

fn enumerate(letters: &[(bool, usize)], i: usize, budget: u32, cur: &mut Mono, out: &mut Vec<(u32, Mono)>) {
    if i == letters.len() {
        out.push((cur.degree(), cur.clone()));
        return;
    }
    let (plus, k) = letters[i];
    for r in 0..=budget {
        if plus { cur.e[k] = r } else { cur.f[k] = r }
        enumerate(letters, i + 1, budget - r, cur, out);
    }
    if plus { cur.e[k] = 0 } else { cur.f[k] = 0 }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub cosets: usize,
    pub whittaker_true: usize,
    pub disagreements: Vec<String>,
}

/// `whittaker_test` against `ad_invariance_test` on every basis coset.
pub fn equivalence_on_basis(h: &mut Hopf, red: &IdealReducer, basis: &[Mono]) -> Result<EquivalenceReport, WqError> {
    let mut disagreements = Vec::new();
    let mut yes = 0;
    for m in basis {
        let x = Elem::from_mono(m.clone());
        let w = red.whittaker_test(&mut h.alg, &x)?;
        let a = red.ad_invariance_test(h, &x)?;
        yes += w as usize;
        if w != a {
            disagreements.push(format!("{}: whittaker {} ad {}", m.label(Form::ERight), w, a));
        }
    }
    Ok(EquivalenceReport { cosets: basis.len(), whittaker_true: yes, disagreements })
}

fn coefficient_rows(elems: &[Elem]) -> (Vec<Mono>, Matrix<Coeff>) {
    let monos: BTreeSet<Mono> = elems.iter().flat_map(|e| e.terms.keys().cloned()).collect();
    let monos: Vec<Mono> = monos.into_iter().collect();
    let mut m = Matrix::zeros(monos.len(), elems.len());
    for (c, e) in elems.iter().enumerate() {
        for (r, mono) in monos.iter().enumerate() {
            m.set(r, c, e.coefficient(mono));
        }
    }
    (monos, m)
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub max_degree: u32,
    pub cosets: usize,
    /// Invariants as elements in the `f t e` form.
    pub invariants: Vec<String>,
    pub ad_agrees: bool,
    pub products_invariant: bool,
    /// Degree-bounded proxy for the algebra generated by the L-operator entries.
    pub caveat: String,
}

/// Kernel of `x -> ((e~_beta - chi) x mod I_q)_beta` on the coset basis.
pub fn w_elements(h: &mut Hopf, red: &IdealReducer, basis: &[Mono]) -> Result<(Vec<Elem>, InvariantReport), WqError> {
    let segment: Vec<usize> = (red.chi.segment.0..=red.chi.segment.1).collect();
    let mut images: Vec<Vec<Elem>> = vec![Vec::new(); segment.len()];
    for m in basis {
        let xs = h.alg.from_e_right(&Elem::from_mono(m.clone()));
        for (slot, &pos) in segment.iter().enumerate() {
            let g = red.generator(&h.alg, pos);
            let p = h.alg.mul(&g, &xs)?;
            images[slot].push(red.reduce(&mut h.alg, &p)?);
        }
    }
    let mut rows = Vec::new();
    for per in &images {
        let (_, m) = coefficient_rows(per);
        rows.extend(m.to_rows());
    }
    let kernel = if rows.is_empty() {
        (0..basis.len())
            .map(|i| (0..basis.len()).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }).collect())
            .collect()
    } else {
        Matrix::from_rows(rows).kernel()
    };
    let mut invariants = Vec::new();
    for vec in kernel {
        let mut e = Elem::zero();
        for (c, m) in vec.iter().zip(basis) {
            if !c.is_zero() {
                e.add_term(m.clone(), c.clone());
            }
        }
        invariants.push(e);
    }
    let mut ad_agrees = true;
    for x in &invariants {
        ad_agrees &= red.ad_invariance_test(h, x)?;
    }
    let mut products_invariant = true;
    let nonscalar: Vec<&Elem> = invariants.iter().filter(|e| e.max_degree() > 0 || e.len() > 1).take(3).collect();
    for a in &nonscalar {
        for b in &nonscalar {
            let (sa, sb) = (h.alg.from_e_right(a), h.alg.from_e_right(b));
            let p = h.alg.mul(&sa, &sb)?;
            let rp = red.reduce(&mut h.alg, &p)?;
            products_invariant &= red.whittaker_test(&mut h.alg, &rp)?;
        }
    }
    let report = InvariantReport {
        max_degree: basis.iter().map(|m| m.degree()).max().unwrap_or(0),
        cosets: basis.len(),
        invariants: invariants.iter().map(|e| e.render(Form::ERight)).collect(),
        ad_agrees,
        products_invariant,
        caveat: "degree-bounded span of f t e monomials; does not separate C[G*] from its locally finite part".into(),
    };
    Ok((invariants, report))
}

/// Whittaker vectors of a module: joint kernel of `e_beta - chi(e_beta)`.
pub fn wh_of_module(alg: &mut Algebra, red: &IdealReducer, module: &WeightModule) -> Result<Vec<Vec<Coeff>>, WqError> {
    let act = Action::new(alg, module)?;
    let n = module.dim();
    let mut rows = Vec::new();
    for pos in red.chi.segment.0..=red.chi.segment.1 {
        let e = alg.e(pos);
        let m = act.act(alg, &e).sub(&Matrix::identity(n).scale(&red.chi.value(alg, pos)));
        rows.extend(m.to_rows());
    }
    Ok(Matrix::from_rows(rows).kernel())
}

pub fn equivalence_line(label: &str, rep: &EquivalenceReport) -> CheckLine {
    CheckLine::new(
        format!("Whittaker test <=> Ad invariance ({})", label),
        rep.disagreements.is_empty(),
        if rep.disagreements.is_empty() {
            format!("{} cosets, {} invariant", rep.cosets, rep.whittaker_true)
        } else {
            rep.disagreements.join("; ")
        },
    )
}
