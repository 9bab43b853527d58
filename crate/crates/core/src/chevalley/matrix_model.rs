//! The orthogonal Lie algebra of type D_n as `2n x 2n` matrices preserving
//! the antidiagonal symmetric form `J`.

use num_traits::One;

use super::{ChevalleyAlgebra, LieElement, LieTarget};
use crate::error::{Error, Result};
use crate::ratmat::{RatMatrix, Rational};
use crate::roots::{DynkinType, Family};

/// Matrix Lie algebra under the commutator bracket.
#[derive(Clone, Copy, Debug)]
pub struct MatrixAlgebra {
    pub size: usize,
}

impl LieTarget for MatrixAlgebra {
    type Elem = RatMatrix;

    fn bracket(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        a.mul(b)
            .and_then(|ab| b.mul(a).and_then(|ba| ab.sub(&ba)))
            .expect("square matrices of equal size")
    }

    fn scale(&self, a: &RatMatrix, s: &Rational) -> RatMatrix {
        a.scale(s)
    }

    fn combine(&self, terms: &[(Rational, &RatMatrix)], _like: &RatMatrix) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.size, self.size);
        for (c, m) in terms {
            out = out.add(&m.scale(c)).expect("equal sizes");
        }
        out
    }
}

pub struct DnMatrixModel {
    algebra: ChevalleyAlgebra,
    images: Vec<RatMatrix>,
    form: RatMatrix,
}

impl DnMatrixModel {
    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.algebra
    }

    pub fn n(&self) -> usize {
        self.algebra.rank()
    }

    /// Antidiagonal unit matrix, `J[i][2n-1-i] = 1`.
    pub fn form(&self) -> &RatMatrix {
        &self.form
    }

    pub fn basis_image(&self, i: usize) -> &RatMatrix {
        &self.images[i]
    }

    pub fn to_matrix(&self, x: &LieElement) -> Result<RatMatrix> {
        if x.dim() != self.algebra.dim() {
            return Err(Error::AlgebraMismatch);
        }
        let size = 2 * self.n();
        let mut out = RatMatrix::zeros(size, size);
        for i in x.support() {
            out = out.add(&self.images[i].scale(x.coeff(i)))?;
        }
        Ok(out)
    }

    /// `M^T J + J M = 0`.
    pub fn preserves_form(&self, m: &RatMatrix) -> bool {
        let lhs = m.transpose().mul(&self.form).expect("square");
        let rhs = self.form.mul(m).expect("square");
        lhs.add(&rhs).expect("square").is_zero()
    }
}

fn unit(size: usize, i: usize, j: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(size, size);
    m[(i, j)] = Rational::one();
    m
}

/// Builds D_n together with its defining representation on `C^{2n}`.
///
/// Coordinates `0..2n`, with `i' = 2n-1-i` carrying the weight opposite to
/// `i`. The simple root vectors are `E(i,i+1) - E((i+1)',i')` for nodes
/// `1..n-1` and `E(n-2,(n-1)') - E(n-1,(n-2)')` for node `n`.
pub fn dn_matrix_model(n: usize) -> Result<DnMatrixModel> {
    if n < 4 {
        return Err(Error::InvalidDynkinType {
            family: 'D',
            rank: n,
        });
    }
    let algebra = ChevalleyAlgebra::from_type(DynkinType::new(Family::D, n)?)?;
    let size = 2 * n;
    let bar = |i: usize| size - 1 - i;
    let pair = |i: usize, j: usize| {
        unit(size, i, j)
            .sub(&unit(size, bar(j), bar(i)))
            .expect("same size")
    };
    let mut e = Vec::with_capacity(n);
    for node in 1..n {
        e.push(pair(node - 1, node));
    }
    e.push(pair(n - 2, bar(n - 1)));
    let f: Vec<RatMatrix> = e.iter().map(RatMatrix::transpose).collect();

    let target = MatrixAlgebra { size };
    let images = algebra.extend_generators(&target, &e, &f)?;
    algebra.verify_homomorphism(&target, &images)?;

    let mut form = RatMatrix::zeros(size, size);
    for i in 0..size {
        form[(i, bar(i))] = Rational::one();
    }
    Ok(DnMatrixModel {
        algebra,
        images,
        form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::{rat, Subspace};
    use num_traits::Zero;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cartan_is_diagonal_with_opposite_halves() {
        let m = dn_matrix_model(4).unwrap();
        for node in 1..=4 {
            let h = m.to_matrix(&m.algebra().h(node)).unwrap();
            for i in 0..8 {
                for j in 0..8 {
                    if i != j {
                        assert!(h[(i, j)].is_zero());
                    }
                }
                assert_eq!(h[(i, i)], -h[(7 - i, 7 - i)].clone());
            }
        }
    }

    #[test]
    fn highest_root_vector_is_e1_wedge_e2() {
        for n in 4..=6 {
            let m = dn_matrix_model(n).unwrap();
            let x = m.to_matrix(&m.algebra().highest_root_vector()).unwrap();
            assert_eq!(x.rank(), 2);
            let cols: Vec<_> = (0..2 * n).map(|j| x.column(j)).collect();
            let colspace = Subspace::span(2 * n, &cols);
            let mut e1 = vec![rat(0); 2 * n];
            e1[0] = rat(1);
            let mut e2 = vec![rat(0); 2 * n];
            e2[1] = rat(1);
            assert_eq!(colspace, Subspace::span(2 * n, &[e1, e2]));
        }
    }

    #[test]
    fn images_preserve_the_form() {
        let m = dn_matrix_model(4).unwrap();
        let g = m.algebra();
        let all: Vec<usize> = (0..g.dim()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..20 {
            let x = g.random_element(&mut rng, &all);
            assert!(m.preserves_form(&m.to_matrix(&x).unwrap()));
        }
    }

    #[test]
    fn small_rank_rejected() {
        assert!(dn_matrix_model(3).is_err());
    }
}
