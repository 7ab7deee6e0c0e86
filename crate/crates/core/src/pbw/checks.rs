//! Certificates for the rewriting system: Serre and braid relations,
//! associativity, LS support, DK leading terms, root-vector containment.

use super::algebra::Algebra;
use super::mono::{Elem, Form, Mono, RootLetter};
use super::PbwError;
use crate::coeff::{q_power, qbinom, qfactorial, Coeff};
use crate::lie::{height, root_label};
use crate::realization::{form_q, QMatrix};
use crate::linalg::rat;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::cmp::Ordering;

/// `(r_1..r_D, t_D..t_1, ht)`.
pub fn dk_degree(ordering: &[Vec<i64>], m: &Mono) -> Vec<u64> {
    let n = ordering.len();
    let mut out: Vec<u64> = m.e.iter().map(|&x| x as u64).collect();
    out.extend((0..n).rev().map(|k| m.f[k] as u64));
    let ht: i64 = (0..n).map(|k| (m.e[k] + m.f[k]) as i64 * height(&ordering[k])).sum();
    out.push(ht as u64);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckLine { name: name.into(), pass, detail: detail.into() }
    }
}

/// Exponent of `q` in the leading coefficient of `e_alpha e_beta = q^x e_beta e_alpha + ...`
/// for `alpha < beta`: `x = (alpha, beta) + (C alpha, beta)`.
pub fn scomm_ee(alg: &Algebra, cayley: Option<&QMatrix>, a: usize, b: usize) -> BigRational {
    let rs = &alg.rs;
    let al: Vec<BigRational> = alg.ordering[a].iter().map(|&x| rat(x, 1)).collect();
    let be: Vec<BigRational> = alg.ordering[b].iter().map(|&x| rat(x, 1)).collect();
    let mut x = form_q(rs, &al, &be);
    if let Some(c) = cayley {
        x += form_q(rs, &c.apply(&al), &be);
    }
    x
}

/// `(C alpha, beta)`.
pub fn cayley_pair(alg: &Algebra, cayley: Option<&QMatrix>, a: usize, b: usize) -> BigRational {
    match cayley {
        None => rat(0, 1),
        Some(c) => {
            let al: Vec<BigRational> = alg.ordering[a].iter().map(|&x| rat(x, 1)).collect();
            let be: Vec<BigRational> = alg.ordering[b].iter().map(|&x| rat(x, 1)).collect();
            form_q(&alg.rs, &c.apply(&al), &be)
        }
    }
}

/// All q-Serre combinations of the twisted generators reduce to zero.
pub fn serre_check(alg: &mut Algebra, c: &QMatrix) -> Result<Vec<CheckLine>, PbwError> {
    let l = alg.rank();
    let mut out = Vec::new();
    for i in 0..l {
        for j in 0..l {
            if i == j {
                continue;
            }
            let n = 1 - alg.rs.cartan[i][j];
            let qc = q_power(alg.d, c.get(i, j)).ok_or_else(|| PbwError::NonIntegral("q^c".into()))?;
            for plus in [true, false] {
                let (gi, gj) = if plus { (alg.e_simple(i), alg.e_simple(j)) } else { (alg.f_simple(i), alg.f_simple(j)) };
                let mut total = Elem::zero();
                for r in 0..=n {
                    let left = alg.pow(&gi, (n - r) as u32)?;
                    let right = alg.pow(&gi, r as u32)?;
                    let w = alg.mul_all(&[&left, &gj, &right])?;
                    let sign = Coeff::from_int(if r % 2 == 0 { 1 } else { -1 });
                    let coef = &(&sign * &qc.pow(r)) * &qbinom(n, r, alg.sub(alg.rs.d[i]))?;
                    total.add_scaled(&w, &coef);
                }
                let name = format!("serre {}{}{}", if plus { "e" } else { "f" }, i + 1, j + 1);
                out.push(CheckLine::new(name, total.is_zero(), format!("{} terms left", total.len())));
            }
        }
    }
    Ok(out)
}

/// Braid relations `T_i T_j ... = T_j T_i ...` on all generators.
pub fn braid_check(alg: &mut Algebra) -> Result<Vec<CheckLine>, PbwError> {
    let l = alg.rank();
    let mut out = Vec::new();
    for i in 0..l {
        for j in (i + 1)..l {
            let p = alg.rs.cartan[i][j] * alg.rs.cartan[j][i];
            let m = [2, 3, 4, 6][p as usize];
            let mut gens = Vec::new();
            for k in 0..l {
                gens.push(alg.e_simple(k));
                gens.push(alg.f_simple(k));
                gens.push(alg.t(k, 1));
            }
            let mut ok = true;
            for g in &gens {
                let mut lhs = g.clone();
                let mut rhs = g.clone();
                for step in 0..m {
                    let odd = (m - 1 - step) % 2 == 1;
                    lhs = alg.braid_apply(if odd { j } else { i }, &lhs)?;
                    rhs = alg.braid_apply(if odd { i } else { j }, &rhs)?;
                }
                ok &= lhs == rhs;
            }
            out.push(CheckLine::new(format!("braid T{}T{} m={}", i + 1, j + 1, m), ok, format!("{} generators", gens.len())));
        }
    }
    Ok(out)
}

/// Random element with monomials of degree at most `max_deg`.
pub fn random_elem(alg: &Algebra, rng: &mut ChaCha8Rng, max_deg: u32, terms: usize) -> Elem {
    let n = alg.nroots();
    let l = alg.rank();
    let mut out = Elem::zero();
    for _ in 0..terms {
        let mut m = Mono::unit(n, l);
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            let k = rng.gen_range(0..n);
            if rng.gen_bool(0.5) {
                m.e[k] += 1;
            } else {
                m.f[k] += 1;
            }
        }
        for t in m.t.iter_mut() {
            *t = rng.gen_range(-1..=1);
        }
        let c = Coeff::term(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(-2..=2));
        out.add_term(m, c);
    }
    out
}

/// `(ab)c = a(bc)` on random triples whose total degree is at most `max_total`.
pub fn associativity_check(alg: &mut Algebra, triples: usize, seed: u64, max_total: u32) -> Result<CheckLine, PbwError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let per = (max_total / 3).max(1);
    let mut bad = 0;
    for _ in 0..triples {
        let a = random_elem(alg, &mut rng, per, 2);
        let b = random_elem(alg, &mut rng, per, 2);
        let c = random_elem(alg, &mut rng, per, 2);
        let ab = alg.mul(&a, &b)?;
        let l = alg.mul(&ab, &c)?;
        let bc = alg.mul(&b, &c)?;
        let r = alg.mul(&a, &bc)?;
        if l != r {
            bad += 1;
        }
    }
    Ok(CheckLine::new(
        "associativity",
        bad == 0,
        format!("{} triples, total degree <= {}, {} failures", triples, max_total, bad),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct LsRelation {
    pub alpha: String,
    pub beta: String,
    /// Exponent `x` with `e_alpha e_beta - q^x e_beta e_alpha = rhs`.
    pub q_exponent: String,
    pub rhs: String,
    pub support_ok: bool,
    /// Coefficients against divided powers lie in `Z[v, v^-1]`.
    pub laurent_ok: bool,
}

/// LS relation for the twisted (or standard) root vectors at positions `a < b`.
pub fn ls_relation(alg: &mut Algebra, cayley: Option<&QMatrix>, a: usize, b: usize) -> Result<LsRelation, PbwError> {
    assert!(a < b);
    let x = scomm_ee(alg, cayley, a, b);
    let qx = q_power(alg.d, &x).ok_or_else(|| PbwError::NonIntegral("LS exponent".into()))?;
    let (ea, eb) = (alg.e(a), alg.e(b));
    let ab = alg.mul(&ea, &eb)?;
    let ba = alg.mul(&eb, &ea)?;
    let rhs = ab.sub(&ba.scale(&qx));
    let mut support_ok = true;
    let mut laurent_ok = true;
    for (m, c) in &rhs.terms {
        let inside = m.f.iter().all(|&x| x == 0)
            && !m.has_torus()
            && m.e.iter().enumerate().all(|(k, &r)| r == 0 || (k > a && k < b));
        support_ok &= inside;
        let mut div = c.clone();
        for (k, &r) in m.e.iter().enumerate() {
            if r > 1 {
                div = &div * &qfactorial(r as i64, alg.sub(alg.root_length(k)))?;
            }
        }
        laurent_ok &= div.is_laurent();
    }
    Ok(LsRelation {
        alpha: root_label(&alg.ordering[a]),
        beta: root_label(&alg.ordering[b]),
        q_exponent: x.to_string(),
        rhs: rhs.render(Form::Standard),
        support_ok,
        laurent_ok,
    })
}

pub fn ls_check(alg: &mut Algebra, cayley: Option<&QMatrix>) -> Result<(Vec<LsRelation>, CheckLine), PbwError> {
    let n = alg.nroots();
    let mut rels = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            rels.push(ls_relation(alg, cayley, a, b)?);
        }
    }
    let bad = rels.iter().filter(|r| !r.support_ok || !r.laurent_ok).count();
    let line = CheckLine::new(
        format!("LS support {}", alg.rs.label()),
        bad == 0,
        format!("{} pairs, {} violations", rels.len(), bad),
    );
    Ok((rels, line))
}

/// The same degree with the height moved to the front.
pub fn height_first(d: &[u64]) -> Vec<u64> {
    let mut out = vec![*d.last().unwrap_or(&0)];
    out.extend_from_slice(&d[..d.len().saturating_sub(1)]);
    out
}

fn lex(a: &[u64], b: &[u64]) -> Ordering {
    a.cmp(b)
}

/// Leading terms of the twisted straightening rules match the
/// semi-commutative relations, and all other terms have smaller DK degree.
/// For the `e f` pairs the expected exponent is the one the algebra
/// actually satisfies, `-(C alpha, beta)`. Lower terms of `f e` rules can
/// beat the leading term in the plain lexicographic order (e.g. `e_a1 t` in
/// `f_a2 e_(a1+a2)`), so the order with height first is reported too.
pub fn graded_check(alg: &mut Algebra, cayley: Option<&QMatrix>) -> Result<Vec<CheckLine>, PbwError> {
    let n = alg.nroots();
    let mut lead_bad = Vec::new();
    let mut order_bad = Vec::new();
    let mut ht_bad = Vec::new();
    let mut count = 0;
    for j in 0..n {
        for k in 0..n {
            let mut cases: Vec<(RootLetter, RootLetter, BigRational)> = Vec::new();
            if j > k {
                // e_j e_k = q^-x e_k e_j, x for (beta_k < beta_j)
                cases.push((RootLetter::E(j), RootLetter::E(k), -scomm_ee(alg, cayley, k, j)));
            }
            if j < k {
                cases.push((RootLetter::F(j), RootLetter::F(k), scomm_ee(alg, cayley, j, k)));
            }
            // f_beta e_alpha = q^(-y) e_alpha f_beta with e_alpha f_beta = q^y f_beta e_alpha
            cases.push((RootLetter::F(j), RootLetter::E(k), cayley_pair(alg, cayley, k, j)));
            for (x, y, expo) in cases {
                count += 1;
                let lx = alg.std.letter(x);
                let ly = alg.std.letter(y);
                let p = alg.mul(&lx, &ly)?;
                let mut lead = Mono::letter(n, alg.rank(), x);
                lead.bump(y, 1);
                let c = p.coefficient(&lead);
                let expect = q_power(alg.d, &expo).ok_or_else(|| PbwError::NonIntegral("graded exponent".into()))?;
                if c != expect {
                    lead_bad.push(format!("{:?}{:?}", x, y));
                }
                let dl = dk_degree(&alg.ordering, &lead);
                let hl = height_first(&dl);
                let lower: Vec<Vec<u64>> =
                    p.terms.keys().filter(|m| *m != &lead).map(|m| dk_degree(&alg.ordering, m)).collect();
                if lower.iter().any(|d| lex(d, &dl) != Ordering::Less) {
                    order_bad.push(format!("{:?}{:?}", x, y));
                }
                if lower.iter().any(|d| lex(&height_first(d), &hl) != Ordering::Less) {
                    ht_bad.push(format!("{:?}{:?}", x, y));
                }
            }
        }
    }
    Ok(vec![
        CheckLine::new("graded leading coefficients", lead_bad.is_empty(), format!("{} rules, mismatches {:?}", count, lead_bad)),
        CheckLine::new("DK lower terms", order_bad.is_empty(), format!("{} rules, violations {:?}", count, order_bad)),
        CheckLine::new("DK lower terms, height first", ht_bad.is_empty(), format!("{} rules, violations {:?}", count, ht_bad)),
    ])
}

/// `e_beta` is recovered from its expansion in the simple generators.
pub fn containment_check(alg: &mut Algebra) -> Result<CheckLine, PbwError> {
    let n = alg.nroots();
    let mut bad = Vec::new();
    for k in 0..n {
        for plus in [true, false] {
            let mut total = Elem::zero();
            for (w, c) in alg.simple_expansion(k, plus)? {
                let mut prod = alg.unit();
                for i in w {
                    let g = if plus { alg.e_simple(i) } else { alg.f_simple(i) };
                    prod = alg.mul(&prod, &g)?;
                }
                total.add_scaled(&prod, &c);
            }
            let letter = if plus { alg.e(k) } else { alg.f(k) };
            if total != letter {
                bad.push(format!("{}{}", if plus { "e_" } else { "f_" }, root_label(&alg.ordering[k])));
            }
        }
    }
    Ok(CheckLine::new("root vectors in U(n+-)", bad.is_empty(), format!("{} roots, failures {:?}", n, bad)))
}
