use crate::coeff::Coeff;
use crate::pbw::{Algebra, Elem, Form, Mono, PbwError};
use std::collections::BTreeMap;
use std::fmt;

/// Element of `U^(tensor n)`, each factor a PBW monomial in standard form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor {
    pub terms: BTreeMap<Vec<Mono>, Coeff>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn pure(factors: &[&Elem]) -> Self {
        let mut out = Tensor::zero();
        let mut acc: Vec<(Vec<Mono>, Coeff)> = vec![(Vec::new(), Coeff::one())];
        for f in factors {
            let mut next = Vec::new();
            for (ms, c) in &acc {
                for (m, d) in &f.terms {
                    let mut k = ms.clone();
                    k.push(m.clone());
                    next.push((k, c * d));
                }
            }
            acc = next;
        }
        for (k, c) in acc {
            out.add_term(k, c);
        }
        out
    }

    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| k.len())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: Vec<Mono>, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Tensor, c: &Coeff) {
        for (k, x) in &o.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(o, &Coeff::one());
        out
    }

    pub fn sub(&self, o: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(o, &Coeff::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Coeff) -> Tensor {
        let mut out = Tensor::zero();
        out.add_scaled(self, c);
        out
    }

    /// Factorwise product in the twisted algebra.
    pub fn mul(&self, o: &Tensor, alg: &mut Algebra) -> Result<Tensor, PbwError> {
        let mut out = Tensor::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let prods: Vec<Elem> = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| alg.mul(&Elem::from_mono(x.clone()), &Elem::from_mono(y.clone())))
                    .collect::<Result<_, _>>()?;
                let refs: Vec<&Elem> = prods.iter().collect();
                out.add_scaled(&Tensor::pure(&refs), &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Applies a linear map to factor `pos`.
    pub fn map_factor<F>(&self, pos: usize, mut f: F) -> Result<Tensor, PbwError>
    where
        F: FnMut(&Mono) -> Result<Elem, PbwError>,
    {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            let img = f(&k[pos])?;
            for (m, d) in &img.terms {
                let mut nk = k.clone();
                nk[pos] = m.clone();
                out.add_term(nk, c * d);
            }
        }
        Ok(out)
    }

    /// Replaces factor `pos` by a tensor of higher arity.
    pub fn expand_factor<F>(&self, pos: usize, mut f: F) -> Result<Tensor, PbwError>
    where
        F: FnMut(&Mono) -> Result<Tensor, PbwError>,
    {
        let mut out = Tensor::zero();
        for (k, c) in &self.terms {
            let img = f(&k[pos])?;
            for (ms, d) in &img.terms {
                let mut nk: Vec<Mono> = k[..pos].to_vec();
                nk.extend(ms.iter().cloned());
                nk.extend(k[pos + 1..].iter().cloned());
                out.add_term(nk, c * d);
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let f: Vec<String> = k.iter().map(|m| m.label(Form::Standard)).collect();
                format!("({})*[{}]", c, f.join(" | "))
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
