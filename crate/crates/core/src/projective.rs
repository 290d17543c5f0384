//! Finitely generated projective modules over `A = K[x_1..x_m]`, presented
//! as images of idempotent matrices, with their Grassmann connections
//! `∇(e) = Σ d(q_i(e)) ⊗ e_i` valued in the free module `Ω` on
//! `dx_1..dx_m`.

use thiserror::Error;

use crate::matrix::Matrix;
use crate::multipoly::{MultiPoly, PolyRing};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProjectiveError {
    #[error("not idempotent: (P^2 - P)[{row}][{col}] = {entry}")]
    NotIdempotent { row: usize, col: usize, entry: String },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector is not in the image of P")]
    NotInImage,
}

/// `P` with `P^2 = P`; the module is `im(P) ⊆ A^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Idempotent {
    p: Matrix<MultiPoly>,
}

impl Idempotent {
    pub fn new(p: Matrix<MultiPoly>) -> Result<Self, ProjectiveError> {
        if !p.is_square() {
            return Err(ProjectiveError::NotSquare {
                rows: p.rows(),
                cols: p.cols(),
            });
        }
        let defect = p.mul(&p).sub(&p);
        for i in 0..p.rows() {
            for j in 0..p.cols() {
                if !defect.get(i, j).is_zero() {
                    return Err(ProjectiveError::NotIdempotent {
                        row: i,
                        col: j,
                        entry: defect.get(i, j).to_string(),
                    });
                }
            }
        }
        Ok(Idempotent { p })
    }

    pub fn matrix(&self) -> &Matrix<MultiPoly> {
        &self.p
    }

    pub fn ring(&self) -> PolyRing {
        *self.p.ctx()
    }

    pub fn size(&self) -> usize {
        self.p.rows()
    }

    pub fn project(&self, w: &[MultiPoly]) -> Result<Vec<MultiPoly>, ProjectiveError> {
        self.check_len(w)?;
        Ok(self.p.mul_vec(w))
    }

    pub fn contains(&self, e: &[MultiPoly]) -> bool {
        e.len() == self.size() && self.p.mul_vec(e).as_slice() == e
    }

    fn check_len(&self, v: &[MultiPoly]) -> Result<(), ProjectiveError> {
        if v.len() != self.size() {
            return Err(ProjectiveError::DimensionMismatch {
                expected: self.size(),
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// Generators `e_i = P std_i` and functionals `q_i` = `i`-th coordinate,
/// so that `Σ q_i(a) e_i = P a = a` on `im(P)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualBasis {
    pub generators: Vec<Vec<MultiPoly>>,
}

impl DualBasis {
    pub fn functional(&self, i: usize, a: &[MultiPoly]) -> MultiPoly {
        a[i].clone()
    }

    /// `Σ q_i(a) e_i`.
    pub fn reproduce(&self, a: &[MultiPoly]) -> Vec<MultiPoly> {
        let n = a.len();
        let ring = match a.first() {
            Some(x) => x.ring(),
            None => return Vec::new(),
        };
        let mut out = vec![ring.zero(); n];
        for (i, e) in self.generators.iter().enumerate() {
            let q = self.functional(i, a);
            for (o, x) in out.iter_mut().zip(e) {
                *o = o.add(&q.mul(x));
            }
        }
        out
    }
}

pub fn dual_basis(p: &Idempotent) -> DualBasis {
    let n = p.size();
    DualBasis {
        generators: (0..n)
            .map(|i| (0..n).map(|j| p.matrix().get(j, i).clone()).collect())
            .collect(),
    }
}

/// `∇(e)` as an `m x n` array: row `k` is the `dx_k` component, a vector
/// in `im(P)`.
pub type OmegaTensor = Vec<Vec<MultiPoly>>;

#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannConnection {
    idempotent: Idempotent,
    basis: DualBasis,
}

impl GrassmannConnection {
    pub fn idempotent(&self) -> &Idempotent {
        &self.idempotent
    }

    /// `∇(e) = Σ_i d(q_i(e)) ⊗ e_i`, i.e. `dx_k`-component `P ∂_k e`.
    pub fn apply(&self, e: &[MultiPoly]) -> Result<OmegaTensor, ProjectiveError> {
        self.idempotent.check_len(e)?;
        if !self.idempotent.contains(e) {
            return Err(ProjectiveError::NotInImage);
        }
        let ring = self.idempotent.ring();
        let n = e.len();
        let mut out = vec![vec![ring.zero(); n]; ring.nvars];
        for (i, gen) in self.basis.generators.iter().enumerate() {
            let dq = self.basis.functional(i, e).differential();
            for (row, dqk) in out.iter_mut().zip(&dq) {
                for (o, g) in row.iter_mut().zip(gen) {
                    *o = o.add(&dqk.mul(g));
                }
            }
        }
        Ok(out)
    }

    /// `∇(a e) - a ∇(e) - da ⊗ e`.
    pub fn leibniz_defect(&self, a: &MultiPoly, e: &[MultiPoly]) -> Result<OmegaTensor, ProjectiveError> {
        let ae: Vec<MultiPoly> = e.iter().map(|x| a.mul(x)).collect();
        let lhs = self.apply(&ae)?;
        let ne = self.apply(e)?;
        let da = a.differential();
        Ok(lhs
            .iter()
            .zip(&ne)
            .zip(&da)
            .map(|((l, n), dak)| {
                l.iter()
                    .zip(n)
                    .zip(e)
                    .map(|((l, n), x)| l.sub(&a.mul(n)).sub(&dak.mul(x)))
                    .collect()
            })
            .collect())
    }
}

pub fn grassmann_connection(p: &Idempotent) -> GrassmannConnection {
    GrassmannConnection {
        idempotent: p.clone(),
        basis: dual_basis(p),
    }
}

pub fn tensor_is_zero(t: &OmegaTensor) -> bool {
    t.iter().flatten().all(MultiPoly::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn ring1() -> PolyRing {
        PolyRing::new(Field::Rational, 1)
    }

    fn example() -> Idempotent {
        let r = ring1();
        let p = Matrix::from_rows(&r, vec![vec![r.one(), r.var(0)], vec![r.zero(), r.zero()]]).unwrap();
        Idempotent::new(p).unwrap()
    }

    #[test]
    fn dual_basis_examples() {
        let r = ring1();
        let id = Idempotent::new(Matrix::identity(&r, 2)).unwrap();
        let b = dual_basis(&id);
        assert_eq!(b.generators, vec![vec![r.one(), r.zero()], vec![r.zero(), r.one()]]);

        let p = example();
        let b = dual_basis(&p);
        assert_eq!(b.generators, vec![vec![r.one(), r.zero()], vec![r.var(0), r.zero()]]);
        let x = r.var(0);
        let a = p.project(&[x.mul(&x), r.one().add(&x)]).unwrap();
        assert_eq!(b.reproduce(&a), a);

        let zero = Idempotent::new(Matrix::zeros(&r, 2, 2)).unwrap();
        let a = zero.project(&[x.clone(), x.clone()]).unwrap();
        assert_eq!(dual_basis(&zero).reproduce(&a), a);
    }

    #[test]
    fn not_idempotent() {
        let r = ring1();
        let two = r.from_int_terms(&[(vec![0], 2)]);
        let m = Matrix::from_rows(&r, vec![vec![two, r.zero()], vec![r.zero(), r.one()]]).unwrap();
        match Idempotent::new(m) {
            Err(ProjectiveError::NotIdempotent { row: 0, col: 0, entry }) => assert_eq!(entry, "2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn connection_examples() {
        let r = ring1();
        let x = r.var(0);
        let free = grassmann_connection(&Idempotent::new(Matrix::identity(&r, 1)).unwrap());
        let f = r.from_int_terms(&[(vec![3], 1), (vec![1], 2)]);
        assert_eq!(free.apply(std::slice::from_ref(&f)).unwrap(), vec![vec![f.partial(0)]]);

        let p = example();
        let nabla = grassmann_connection(&p);
        let e = p.project(&[r.zero(), r.one()]).unwrap();
        assert_eq!(e, vec![x.clone(), r.zero()]);
        assert_eq!(nabla.apply(&e).unwrap(), vec![vec![r.one(), r.zero()]]);
        assert!(tensor_is_zero(&nabla.leibniz_defect(&x, &e).unwrap()));
        assert_eq!(nabla.apply(&[r.zero(), r.one()]), Err(ProjectiveError::NotInImage));
    }
}
