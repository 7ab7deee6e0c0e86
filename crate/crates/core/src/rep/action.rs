use super::module::WeightModule;
use super::{CMat, RepError};
use crate::hopf::Tensor;
use crate::pbw::{Algebra, Elem, Form, Mono};

/// Matrices of algebra elements on a module. Elements of the twisted
/// algebra act through `psi`.
pub struct Action<'m> {
    pub module: &'m WeightModule,
    xp: Vec<CMat>,
    xm: Vec<CMat>,
}

impl<'m> Action<'m> {
    pub fn new(alg: &Algebra, module: &'m WeightModule) -> Result<Self, RepError> {
        if alg.d != module.d || alg.rank() != module.rank() {
            return Err(RepError::Mismatch(format!("algebra d = {} vs module d = {}", alg.d, module.d)));
        }
        let n = module.dim();
        let mut xp = Vec::new();
        let mut xm = Vec::new();
        for k in 0..alg.nroots() {
            for plus in [true, false] {
                let mut total = CMat::zeros(n, n);
                for (w, c) in alg.root_vector_words(k, plus) {
                    let mut p = CMat::identity(n);
                    for &a in &w {
                        p = p.mul(if plus { &module.xp[a as usize] } else { &module.xm[a as usize] });
                    }
                    total = total.add(&p.scale(&c));
                }
                if plus { xp.push(total) } else { xm.push(total) }
            }
        }
        Ok(Action { module, xp, xm })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// `X_beta^+` at position `k` of the ordering.
    pub fn root_plus(&self, k: usize) -> &CMat {
        &self.xp[k]
    }

    pub fn root_minus(&self, k: usize) -> &CMat {
        &self.xm[k]
    }

    /// Standard monomial `X^+ ... t^s X^- ...` (e increasing, f decreasing).
    pub fn std_mono(&self, m: &Mono) -> CMat {
        let n = self.dim();
        let mut out = CMat::identity(n);
        for (k, &r) in m.e.iter().enumerate() {
            for _ in 0..r {
                out = out.mul(&self.xp[k]);
            }
        }
        out = out.mul(&self.module.torus(&m.t));
        for k in (0..m.f.len()).rev() {
            for _ in 0..m.f[k] {
                out = out.mul(&self.xm[k]);
            }
        }
        out
    }

    /// Matrix of an element of `alg` (standard form).
    pub fn act(&self, alg: &mut Algebra, x: &Elem) -> CMat {
        let img = alg.psi(x, Form::Standard);
        let n = self.dim();
        let mut out = CMat::zeros(n, n);
        for (m, c) in &img.terms {
            out = out.add(&self.std_mono(m).scale(c));
        }
        out
    }

    pub fn act_mono(&self, alg: &mut Algebra, m: &Mono) -> CMat {
        self.act(alg, &Elem::from_mono(m.clone()))
    }
}

/// Matrix of a two-fold tensor on `V (x) W`.
pub fn act_tensor(alg: &mut Algebra, v: &Action, w: &Action, t: &Tensor) -> CMat {
    let n = v.dim() * w.dim();
    let mut out = CMat::zeros(n, n);
    for (k, c) in &t.terms {
        let a = v.act_mono(alg, &k[0]);
        let b = w.act_mono(alg, &k[1]);
        out = out.add(&a.kron(&b).scale(c));
    }
    out
}
