//! Minimal-orbit membership, orbit dimensions and conjugation by exponentials.

use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::embed::LieEmbedding;
use crate::error::{Error, Result};
use crate::ratmat::{is_multiple_of, RatMatrix, Subspace};

#[derive(Clone, Debug, Serialize)]
pub struct OrbitCertificate {
    pub support: Vec<String>,
    pub member: bool,
    pub orbit_dim: usize,
    pub witness: String,
}

/// First basis index `j` with `[x, [x, b_j]]` outside the line through `x`.
fn oracle_witness(alg: &ChevalleyAlgebra, x: &LieElement) -> Result<Option<usize>> {
    if x.dim() != alg.dim() {
        return Err(Error::AlgebraMismatch);
    }
    if x.is_zero() {
        return Ok(None);
    }
    for j in 0..alg.dim() {
        let b = alg.bracket(x, &alg.basis_element(j))?;
        if b.is_zero() {
            continue;
        }
        let bb = alg.bracket(x, &b)?;
        if !is_multiple_of(bb.coeffs(), x.coeffs()) {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// `x` lies in the closure of the minimal nilpotent orbit iff
/// `(ad x)^2 g` is contained in the line through `x`.
pub fn min_orbit_member(alg: &ChevalleyAlgebra, x: &LieElement) -> bool {
    matches!(oracle_witness(alg, x), Ok(None))
}

pub fn orbit_dim(alg: &ChevalleyAlgebra, x: &LieElement) -> Result<usize> {
    Ok(alg.ad_matrix(x)?.rank())
}

pub fn certify(alg: &ChevalleyAlgebra, x: &LieElement) -> Result<OrbitCertificate> {
    let w = oracle_witness(alg, x)?;
    let orbit_dim = orbit_dim(alg, x)?;
    let witness = match w {
        None if x.is_zero() => "zero element".to_string(),
        None => "(ad x)^2 maps every basis vector into the line through x".to_string(),
        Some(j) => format!("[x, [x, {}]] is not a multiple of x", alg.basis_label(j)),
    };
    Ok(OrbitCertificate {
        support: x.support().into_iter().map(|i| alg.basis_label(i)).collect(),
        member: w.is_none(),
        orbit_dim,
        witness,
    })
}

/// Matrix of `y -> [e(y), x]` from source coordinates to target coordinates.
fn action_matrix(e: &LieEmbedding, x: &LieElement) -> Result<RatMatrix> {
    let tgt = e.target();
    let cols = (0..e.source().dim())
        .map(|i| tgt.bracket(e.image(i), x).map(LieElement::into_coeffs))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatMatrix::from_columns(&cols, tgt.dim()))
}

/// Dimension of the orbit of `x` under the group of the embedded subalgebra.
pub fn suborbit_dim(e: &LieEmbedding, x: &LieElement) -> Result<usize> {
    Ok(action_matrix(e, x)?.rank())
}

/// Source elements whose image commutes with `x`.
pub fn stabilizer_subalgebra(e: &LieEmbedding, x: &LieElement) -> Result<Subspace> {
    Ok(action_matrix(e, x)?.kernel_basis())
}

/// `exp(ad y_1) exp(ad y_2) ... exp(ad y_k) x`.
pub fn conjugate_by_exp(
    alg: &ChevalleyAlgebra,
    ys: &[LieElement],
    x: &LieElement,
) -> Result<LieElement> {
    ys.iter()
        .rev()
        .try_fold(x.clone(), |acc, y| alg.exp_ad_apply(y, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::ratio;
    use crate::roots::{DynkinType, Root};
    use std::sync::Arc;

    fn alg(t: DynkinType) -> ChevalleyAlgebra {
        ChevalleyAlgebra::from_type(t).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let g = alg(DynkinType::e(6).unwrap());
        assert!(min_orbit_member(&g, &g.zero()));
        assert!(min_orbit_member(&g, &g.highest_root_vector()));
        assert!(!min_orbit_member(&g, &g.h(1)));
        assert!(min_orbit_member(&g, &g.x(&g.rootsys().simple_root(3)).scale(&ratio(-2, 7))));
        let c = certify(&g, &g.h(1)).unwrap();
        assert!(!c.member);
        assert_eq!(c.orbit_dim, g.ad_matrix(&g.h(1)).unwrap().rank());
    }

    #[test]
    fn orbit_dims() {
        let e6 = alg(DynkinType::e(6).unwrap());
        assert_eq!(orbit_dim(&e6, &e6.highest_root_vector()).unwrap(), 22);
        let d4 = alg(DynkinType::d(4).unwrap());
        assert_eq!(orbit_dim(&d4, &d4.highest_root_vector()).unwrap(), 10);
        assert_eq!(orbit_dim(&d4, &d4.zero()).unwrap(), 0);
    }

    #[test]
    fn sum_of_orthogonal_roots_leaves_the_minimal_orbit() {
        // theta = e1+e2 and alpha_3 = e3-e4 are orthogonal with no root sum
        let d4 = alg(DynkinType::d(4).unwrap());
        let theta = d4.rootsys().highest_root();
        let far = Root(vec![0, 0, 1, 0]);
        assert_eq!(d4.rootsys().inner(&theta, &far), 0);
        assert!(!d4.rootsys().is_root(&theta.add(&far)));
        let x = d4.highest_root_vector().add(&d4.x(&far));
        assert!(!min_orbit_member(&d4, &x));
        assert!(orbit_dim(&d4, &x).unwrap() > 10);
    }

    #[test]
    fn conjugation() {
        let d5 = alg(DynkinType::d(5).unwrap());
        let x = d5.highest_root_vector();
        assert_eq!(conjugate_by_exp(&d5, &[], &x).unwrap(), x);
        let y1 = d5.x(&Root(vec![0, -1, 0, 0, 0]));
        let y2 = d5.x(&Root(vec![0, 0, -1, -1, 0]));
        let z = conjugate_by_exp(&d5, &[y1.clone(), y2.clone()], &x).unwrap();
        let manual = d5
            .exp_ad_apply(&y1, &d5.exp_ad_apply(&y2, &x).unwrap())
            .unwrap();
        assert_eq!(z, manual);
        assert!(min_orbit_member(&d5, &z));
        assert_eq!(orbit_dim(&d5, &z).unwrap(), 14);
        assert_eq!(
            conjugate_by_exp(&d5, &[d5.h(1)], &x).unwrap_err(),
            Error::NotNilpotent
        );
    }

    #[test]
    fn suborbit_and_stabilizer() {
        let e7 = Arc::new(alg(DynkinType::e(7).unwrap()));
        let e6 = Arc::new(alg(DynkinType::e(6).unwrap()));
        let nodes: Vec<Root> = (1..=6).map(|i| e7.rootsys().simple_root(i)).collect();
        let phi = crate::embed::subsystem_embedding(e6, e7.clone(), &nodes).unwrap();
        let x = e7.highest_root_vector();
        assert_eq!(orbit_dim(&e7, &x).unwrap(), 34);
        let s = suborbit_dim(&phi, &x).unwrap();
        assert_eq!(s, 17);
        assert_eq!(stabilizer_subalgebra(&phi, &x).unwrap().dim(), 78 - 17);
        assert_eq!(stabilizer_subalgebra(&phi, &e7.zero()).unwrap().dim(), 78);
    }
}
