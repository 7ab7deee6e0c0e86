use super::{CMat, RepError};
use crate::coeff::{qint, Coeff, SubscriptedQ};
use crate::lie::{height, RootSystem};
use crate::pbw::{Algebra, Elem, Form, Mono};
use serde::Serialize;

/// Finite weight module of the standard quantum group, given by the
/// matrices of `X_i^+`, `X_i^-` and the weights `mu(H_i)` of the basis.
#[derive(Clone, Debug)]
pub struct WeightModule {
    pub name: String,
    pub rs: RootSystem,
    /// Session exponent: `t_i` acts on weight `mu` by `v^mu(H_i)`, `q = v^(2d)`.
    pub d: i64,
    pub labels: Vec<String>,
    pub weights: Vec<Vec<i64>>,
    pub xp: Vec<CMat>,
    pub xm: Vec<CMat>,
    /// Basis vectors whose `X^-` images were cut off (truncated Verma modules).
    pub boundary: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub module: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

fn unit_matrix(n: usize, entries: &[(usize, usize, Coeff)]) -> CMat {
    let mut m = CMat::zeros(n, n);
    for (r, c, x) in entries {
        m.set(*r, *c, x.clone());
    }
    m
}

impl WeightModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    fn sub(&self, i: usize) -> SubscriptedQ {
        SubscriptedQ::new(self.d, self.rs.d[i])
    }

    pub fn trivial(rs: &RootSystem, d: i64) -> Self {
        let l = rs.rank;
        WeightModule {
            name: "trivial".into(),
            rs: rs.clone(),
            d,
            labels: vec!["v0".into()],
            weights: vec![vec![0; l]],
            xp: vec![CMat::zeros(1, 1); l],
            xm: vec![CMat::zeros(1, 1); l],
            boundary: vec![false],
        }
    }

    /// Spin `n/2` module of `A1`, basis `v_0 .. v_n` of weights `n - 2k`.
    pub fn a1_spin(rs: &RootSystem, d: i64, n: usize) -> Result<Self, RepError> {
        if rs.ty.letter() != 'A' || rs.rank != 1 || n > 4 {
            return Err(RepError::Unsupported(format!("spin {}/2 of {}", n, rs.label())));
        }
        let sub = SubscriptedQ::new(d, 1);
        let dim = n + 1;
        let mut ep = Vec::new();
        let mut em = Vec::new();
        for k in 0..dim {
            if k > 0 {
                ep.push((k - 1, k, qint((n - k + 1) as i64, sub)));
            }
            if k < n {
                em.push((k + 1, k, qint((k + 1) as i64, sub)));
            }
        }
        Ok(WeightModule {
            name: format!("A1 spin {}/2", n),
            rs: rs.clone(),
            d,
            labels: (0..dim).map(|k| format!("v{}", k)).collect(),
            weights: (0..dim).map(|k| vec![n as i64 - 2 * k as i64]).collect(),
            xp: vec![unit_matrix(dim, &ep)],
            xm: vec![unit_matrix(dim, &em)],
            boundary: vec![false; dim],
        })
    }

    /// Vector module of `A2` (highest weight `omega_1`) or its dual.
    pub fn a2_vector(rs: &RootSystem, d: i64, dual: bool) -> Result<Self, RepError> {
        if rs.ty.letter() != 'A' || rs.rank != 2 {
            return Err(RepError::Unsupported(format!("vector module of {}", rs.label())));
        }
        let one = Coeff::one();
        let (weights, ch): (Vec<Vec<i64>>, [usize; 2]) = if dual {
            // w1 -(f2)-> w2 -(f1)-> w3
            (vec![vec![0, 1], vec![1, -1], vec![-1, 0]], [1, 0])
        } else {
            // v1 -(f1)-> v2 -(f2)-> v3
            (vec![vec![1, 0], vec![-1, 1], vec![0, -1]], [0, 1])
        };
        let mut xp = vec![CMat::zeros(3, 3), CMat::zeros(3, 3)];
        let mut xm = vec![CMat::zeros(3, 3), CMat::zeros(3, 3)];
        for (step, &i) in ch.iter().enumerate() {
            xm[i].set(step + 1, step, one.clone());
            xp[i].set(step, step + 1, one.clone());
        }
        Ok(WeightModule {
            name: if dual { "A2 dual vector".into() } else { "A2 vector".into() },
            rs: rs.clone(),
            d,
            labels: (1..=3).map(|k| format!("{}{}", if dual { "w" } else { "v" }, k)).collect(),
            weights,
            xp,
            xm,
            boundary: vec![false; 3],
        })
    }

    /// Verma module with highest weight `lambda(H_i)`, truncated to
    /// `f`-monomials of height at most `depth`.
    pub fn verma(alg: &mut Algebra, lambda: &[i64], depth: i64) -> Result<Self, RepError> {
        let n = alg.nroots();
        let l = alg.rank();
        let mut basis: Vec<Vec<u32>> = Vec::new();
        enumerate_f(&alg.ordering, depth, 0, &mut vec![0; n], &mut basis);
        basis.sort_by_key(|f| (f_height(&alg.ordering, f), f.clone()));
        let index = |f: &Vec<u32>| basis.iter().position(|b| b == f);
        let dim = basis.len();
        let weight_of = |f: &Vec<u32>| -> Vec<i64> {
            let mut w = lambda.to_vec();
            for (k, &c) in f.iter().enumerate() {
                for i in 0..l {
                    let pair: i64 = (0..l).map(|j| alg.rs.cartan[i][j] * alg.ordering[k][j]).sum();
                    w[i] -= c as i64 * pair;
                }
            }
            w
        };
        let weights: Vec<Vec<i64>> = basis.iter().map(weight_of).collect();
        let mut xp = vec![CMat::zeros(dim, dim); l];
        let mut xm = vec![CMat::zeros(dim, dim); l];
        let mut boundary = vec![false; dim];
        for (col, f) in basis.iter().enumerate() {
            let mut m = Mono::unit(n, l);
            m.f = f.clone();
            let fv = Elem::from_mono(m);
            for i in 0..l {
                for (plus, target) in [(true, &mut xp[i]), (false, &mut xm[i])] {
                    let g = if plus { alg.e_simple(i) } else { alg.f_simple(i) };
                    let p = alg.engine(Form::ERight).mul(&g, &fv)?;
                    for (mm, c) in &p.terms {
                        if mm.e.iter().any(|&r| r != 0) {
                            continue;
                        }
                        // f^t t^s e^r: t^s acts on the highest weight vector
                        let ex: i64 = mm.t.iter().zip(lambda).map(|(a, b)| a * b).sum();
                        let val = c * &Coeff::v_pow(ex);
                        match index(&mm.f) {
                            Some(row) => target.set(row, col, &target.get(row, col).clone() + &val),
                            None => boundary[col] = true,
                        }
                    }
                }
            }
        }
        Ok(WeightModule {
            name: format!("Verma {:?} depth {}", lambda, depth),
            rs: alg.rs.clone(),
            d: alg.d,
            labels: basis.iter().map(|f| format!("f{:?}", f)).collect(),
            weights,
            xp,
            xm,
            boundary,
        })
    }

    /// `K_i^p` as a diagonal matrix.
    pub fn k(&self, i: usize, p: i64) -> CMat {
        let e = 2 * self.d * self.rs.d[i] * p;
        self.torus(&{
            let mut t = vec![0; self.rank()];
            t[i] = e;
            t
        })
    }

    /// `t^s` as a diagonal matrix.
    pub fn torus(&self, s: &[i64]) -> CMat {
        let n = self.dim();
        let mut m = CMat::zeros(n, n);
        for (a, w) in self.weights.iter().enumerate() {
            let ex: i64 = s.iter().zip(w).map(|(x, y)| x * y).sum();
            m.set(a, a, Coeff::v_pow(ex));
        }
        m
    }

    /// Defining relations of the standard algebra as matrix identities,
    /// skipping columns flagged as boundary.
    pub fn check_relations(&self) -> RelationReport {
        let l = self.rank();
        let n = self.dim();
        let mut failures = Vec::new();
        let mut checked = 0;
        let keep = |m: &CMat| -> CMat {
            let mut out = m.clone();
            for c in 0..n {
                if self.boundary[c] {
                    for r in 0..n {
                        out.set(r, c, Coeff::zero());
                    }
                }
            }
            out
        };
        for i in 0..l {
            let sub = self.sub(i);
            let (k, ki) = (self.k(i, 1), self.k(i, -1));
            for j in 0..l {
                checked += 3;
                let a = self.rs.cartan[i][j];
                let qa = sub.q().pow(a);
                let lhs = k.mul(&self.xp[j]).mul(&ki);
                if lhs != self.xp[j].scale(&qa) {
                    failures.push(format!("K{} X{}+ K{}^-1", i + 1, j + 1, i + 1));
                }
                let lhs = k.mul(&self.xm[j]).mul(&ki);
                if lhs != self.xm[j].scale(&qa.inv().expect("nonzero")) {
                    failures.push(format!("K{} X{}- K{}^-1", i + 1, j + 1, i + 1));
                }
                let comm = self.xp[i].mul(&self.xm[j]).sub(&self.xm[j].mul(&self.xp[i]));
                let expect = if i == j {
                    let den = (&sub.q() - &sub.q().pow(-1)).inv().expect("nonzero");
                    k.sub(&ki).scale(&den)
                } else {
                    CMat::zeros(n, n)
                };
                if keep(&comm) != keep(&expect) {
                    failures.push(format!("[X{}+, X{}-]", i + 1, j + 1));
                }
                if i != j {
                    checked += 2;
                    let m = (1 - a) as usize;
                    for (plus, gens) in [(true, &self.xp), (false, &self.xm)] {
                        let mut total = CMat::zeros(n, n);
                        for r in 0..=m {
                            let c = &crate::coeff::qbinom(m as i64, r as i64, sub).expect("q-binomial")
                                * &Coeff::from_int(if r % 2 == 0 { 1 } else { -1 });
                            let mut p = CMat::identity(n);
                            for _ in 0..(m - r) {
                                p = p.mul(&gens[i]);
                            }
                            p = p.mul(&gens[j]);
                            for _ in 0..r {
                                p = p.mul(&gens[i]);
                            }
                            total = total.add(&p.scale(&c));
                        }
                        if !keep(&total).is_zero() {
                            failures.push(format!("Serre {} ({},{})", if plus { "+" } else { "-" }, i + 1, j + 1));
                        }
                    }
                }
            }
        }
        RelationReport { module: self.name.clone(), checked, failures }
    }
}

fn f_height(ordering: &[Vec<i64>], f: &[u32]) -> i64 {
    f.iter().zip(ordering).map(|(&c, b)| c as i64 * height(b)).sum()
}

fn enumerate_f(ordering: &[Vec<i64>], budget: i64, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k == ordering.len() {
        out.push(cur.clone());
        return;
    }
    let h = height(&ordering[k]);
    let mut c = 0;
    while c as i64 * h <= budget {
        cur[k] = c;
        enumerate_f(ordering, budget - c as i64 * h, k + 1, cur, out);
        c += 1;
    }
    cur[k] = 0;
}
