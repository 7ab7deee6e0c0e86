//! Cayley transform of a Weyl element and the derived structure constants.
//!
//! Everything is computed on `h*` in simple-root coordinates. An element
//! `u = sum u_j alpha_j` of `h*` corresponds to `sum u_j d_j H_j` in `h`, and
//! `exp(h x)` for `x = sum x_j H_j` is the torus monomial `prod t_j^(2d x_j)`.

use crate::lie::{RootSystem, WeylElement};
use crate::linalg::{int_matrix, rat, Matrix};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub type QMatrix = Matrix<BigRational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizationError {
    #[error("1 - s is singular on the moved subspace")]
    SingularCayley,
    #[error("exponent {what} is not integral after clearing with d = {d}: {value}")]
    NonIntegral { what: String, d: i64, value: String },
    #[error("no Carter decomposition found for s with word {0:?}")]
    NoCarter(Vec<usize>),
    #[error("associated ordering search exhausted: {0}")]
    SearchExhausted(String),
}

#[derive(Clone, Debug)]
pub struct Constants {
    /// Action of `s` on `h*` (columns are images of simple roots).
    pub s: QMatrix,
    /// Orthogonal projection onto `h'*`.
    pub proj: QMatrix,
    /// `(1+s)/(1-s) P` on `h*`.
    pub cayley: QMatrix,
    pub c: QMatrix,
    pub n: QMatrix,
    pub p: QMatrix,
    pub d: i64,
    /// `K` on `h`, in `H`-coordinates (column `i` is `K H_i`).
    pub k_op: QMatrix,
    /// Fundamental weights `Y_i` in root coordinates (row `i`).
    pub y: QMatrix,
    /// `dim h'* = rank(1 - s)`.
    pub moved_dim: usize,
}

fn col(m: &QMatrix, j: usize) -> Vec<BigRational> {
    (0..m.rows).map(|r| m.get(r, j).clone()).collect()
}

/// `(x, y)` for `h*` vectors in root coordinates.
pub fn form_q(rs: &RootSystem, x: &[BigRational], y: &[BigRational]) -> BigRational {
    let mut s = BigRational::zero();
    for i in 0..rs.rank {
        for j in 0..rs.rank {
            if rs.form[i][j] != 0 {
                s += &x[i] * &y[j] * rat(rs.form[i][j], 1);
            }
        }
    }
    s
}

impl Constants {
    pub fn compute(rs: &RootSystem, w: &WeylElement) -> Result<Self, RealizationError> {
        let l = rs.rank;
        let s = int_matrix(&w.matrix());
        let b = int_matrix(&rs.form);
        let id = QMatrix::identity(l);
        let one_minus = id.sub(&s);
        // basis of h'* = image(1 - s)
        let mut t = one_minus.transpose();
        let piv = t.rref();
        let moved_dim = piv.len();
        let basis = QMatrix::from_rows((0..moved_dim).map(|r| t.row(r).to_vec()).collect()).transpose();
        let (proj, cayley) = if moved_dim == 0 {
            (QMatrix::zeros(l, l), QMatrix::zeros(l, l))
        } else {
            let vt = basis.transpose();
            let gram = vt.mul(&b).mul(&basis);
            let gi = gram.inverse().ok_or(RealizationError::SingularCayley)?;
            // coordinates in the basis of a vector of h*, after projection
            let coords = gi.mul(&vt).mul(&b);
            let proj = basis.mul(&coords);
            // (1-s) restricted: (1-s) V = V M
            let m = coords.mul(&one_minus).mul(&basis);
            let im = QMatrix::identity(moved_dim);
            let inv = m.inverse().ok_or(RealizationError::SingularCayley)?;
            // s = 1 - M on h'*, so (1+s)/(1-s) = (2 - M) M^-1
            let cay_small = im.scale(&rat(2, 1)).sub(&m).mul(&inv);
            (proj, basis.mul(&cay_small).mul(&coords))
        };
        let bc = b.mul(&cayley);
        // c_ij = (C alpha_i, alpha_j) = (B C)_{ji}
        let c = bc.transpose();
        let n = QMatrix::from_rows(
            (0..l).map(|i| (0..l).map(|j| c.get(i, j) / rat(2 * rs.d[j], 1)).collect()).collect(),
        );
        let binv = b.inverse().expect("form is nondegenerate");
        // Y_i = omega_i with B omega_i = d_i e_i
        let y = QMatrix::from_rows(
            (0..l)
                .map(|i| {
                    let mut e = vec![BigRational::zero(); l];
                    e[i] = rat(rs.d[i], 1);
                    binv.apply(&e)
                })
                .collect(),
        );
        let p = QMatrix::from_rows(
            (0..l)
                .map(|i| {
                    let yi = y.row(i).to_vec();
                    let cyi = cayley.apply(&yi);
                    (0..l).map(|j| form_q(rs, &cyi, y.row(j)) + form_q(rs, &yi, y.row(j))).collect()
                })
                .collect(),
        );
        let mut d = BigRational::one().to_integer();
        for i in 0..l {
            for j in 0..l {
                let half = p.get(i, j) / rat(2, 1);
                d = d.lcm(half.denom());
            }
        }
        let d = d.to_i64().expect("small d");
        let ainv = int_matrix(&rs.cartan).inverse().expect("Cartan matrix invertible");
        // K H_i = sum_j n_ij/d_i Y_j, Y_j = sum_k d_j ainv_jk H_k
        let mut k_op = QMatrix::zeros(l, l);
        for i in 0..l {
            for k in 0..l {
                let mut v = BigRational::zero();
                for j in 0..l {
                    v += n.get(i, j) / rat(rs.d[i], 1) * rat(rs.d[j], 1) * ainv.get(j, k);
                }
                k_op.set(k, i, v);
            }
        }
        Ok(Constants { s, proj, cayley, c, n, p, d, k_op, y, moved_dim })
    }

    /// Torus exponent of `exp(h x)` for `x` in `h` given in `H`-coordinates.
    pub fn texp_of_h(&self, what: &str, x: &[BigRational]) -> Result<Vec<i64>, RealizationError> {
        x.iter()
            .map(|c| {
                let v = c * rat(2 * self.d, 1);
                if v.is_integer() {
                    Ok(v.to_integer().to_i64().expect("small exponent"))
                } else {
                    Err(RealizationError::NonIntegral { what: what.to_string(), d: self.d, value: c.to_string() })
                }
            })
            .collect()
    }

    /// Torus exponent of `exp(h u^vee)` for `u` in `h*` (root coordinates).
    pub fn texp_of_hstar(&self, rs: &RootSystem, what: &str, u: &[BigRational]) -> Result<Vec<i64>, RealizationError> {
        let x: Vec<BigRational> = u.iter().zip(&rs.d).map(|(c, &di)| c * rat(di, 1)).collect();
        self.texp_of_h(what, &x)
    }

    /// Exponent of `v` in `q^x`.
    pub fn v_exponent(&self, what: &str, x: &BigRational) -> Result<i64, RealizationError> {
        let v = x * rat(2 * self.d, 1);
        if v.is_integer() {
            Ok(v.to_integer().to_i64().expect("small exponent"))
        } else {
            Err(RealizationError::NonIntegral { what: what.to_string(), d: self.d, value: x.to_string() })
        }
    }

    /// `P^perp = 1 - P`.
    pub fn proj_perp(&self) -> QMatrix {
        QMatrix::identity(self.s.rows).sub(&self.proj)
    }

    /// `2/(1-s) P + P^perp`, which equals `(1 + Cayley) P + P^perp`.
    pub fn e_twist(&self) -> QMatrix {
        self.proj.add(&self.cayley).add(&self.proj_perp())
    }

    pub fn c_entry(&self, i: usize, j: usize) -> BigRational {
        self.c.get(i, j).clone()
    }

    /// Checks skewness of `c` and `d_j n_ij - d_i n_ji = c_ij`.
    pub fn check_identities(&self, rs: &RootSystem) -> Vec<String> {
        let l = rs.rank;
        let mut bad = Vec::new();
        for i in 0..l {
            for j in 0..l {
                if self.c.get(i, j) != &-self.c.get(j, i) {
                    bad.push(format!("c_{}{} != -c_{}{}", i + 1, j + 1, j + 1, i + 1));
                }
                let lhs = self.n.get(i, j) * rat(rs.d[j], 1) - self.n.get(j, i) * rat(rs.d[i], 1);
                if &lhs != self.c.get(i, j) {
                    bad.push(format!("eqpi fails at ({},{})", i + 1, j + 1));
                }
            }
        }
        if self.d <= 0 {
            bad.push("d not positive".into());
        }
        for i in 0..l {
            for j in 0..l {
                if self.v_exponent("c", self.c.get(i, j)).is_err() {
                    bad.push(format!("q^c_{}{} not a power of v", i + 1, j + 1));
                }
            }
        }
        bad
    }

    pub fn column(&self, m: &QMatrix, j: usize) -> Vec<BigRational> {
        col(m, j)
    }
}

pub fn qmatrix_strings(m: &QMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CartanType;

    #[test]
    fn a2_coxeter_constants() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let s = WeylElement::from_word(&rs, &[0, 1]).unwrap();
        let k = Constants::compute(&rs, &s).unwrap();
        assert_eq!(qmatrix_strings(&k.c), vec![vec!["0", "1"], vec!["-1", "0"]]);
        assert_eq!(qmatrix_strings(&k.n), vec![vec!["0", "1/2"], vec!["-1/2", "0"]]);
        assert!(k.check_identities(&rs).is_empty());
    }

    #[test]
    fn a1_reflection() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        let s = WeylElement::from_word(&rs, &[0]).unwrap();
        let k = Constants::compute(&rs, &s).unwrap();
        assert!(k.c.get(0, 0).is_zero());
        assert_eq!(k.p.get(0, 0), &rat(1, 2));
        assert_eq!(k.d, 4);
        assert_eq!(k.moved_dim, 1);
    }

    #[test]
    fn identity_has_no_twist() {
        let rs = RootSystem::new(CartanType::B, 2).unwrap();
        let k = Constants::compute(&rs, &WeylElement::identity(2)).unwrap();
        assert!(k.c.is_zero());
        assert_eq!(k.moved_dim, 0);
    }
}
