//! Coordinate models: bivectors for D_n, the `sl_k`-modules that model the
//! abelian nilradicals, the maps `iota`, and equivariant identifications of
//! a model with a nilradical.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, DnMatrixModel, LieElement, MatrixAlgebra};
use crate::error::{Error, Result};
use crate::levi::{Decomposition, GradedSubspace, Representation};
use crate::ratmat::{rat, to_i64, zero_vec, RatMatrix, Rational, Subspace};
use crate::roots::{DynkinType, RootSystem};

/// Element of `wedge^2 C^m` stored as a skew-symmetric `m x m` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bivector {
    pub skew: RatMatrix,
}

impl Bivector {
    pub fn zero(m: usize) -> Self {
        Self {
            skew: RatMatrix::zeros(m, m),
        }
    }

    /// `u ^ v`, i.e. `u v^T - v u^T`.
    pub fn wedge(u: &[Rational], v: &[Rational]) -> Self {
        let m = u.len();
        let mut skew = RatMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                skew[(i, j)] = &u[i] * &v[j] - &u[j] * &v[i];
            }
        }
        Self { skew }
    }

    pub fn from_skew(skew: RatMatrix) -> Result<Self> {
        if skew.transpose() != skew.scale(&rat(-1)) {
            return Err(Error::Construction("matrix is not skew-symmetric".into()));
        }
        Ok(Self { skew })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            skew: self.skew.add(&other.skew)?,
        })
    }
}

pub fn decomposable(b: &Bivector) -> bool {
    b.skew.rank() <= 2
}

/// Whether the plane spanned by a decomposable bivector is isotropic for the
/// symmetric form with Gram matrix `form`.
pub fn isotropic(b: &Bivector, form: &RatMatrix) -> Result<bool> {
    let r = b.skew.rank();
    if r > 2 {
        return Err(Error::NotDecomposable(r));
    }
    let m = b.skew.rows();
    let cols: Vec<Vec<Rational>> = (0..m).map(|j| b.skew.column(j)).collect();
    let plane = Subspace::span(m, &cols);
    for u in plane.basis() {
        let ju = form.mul_vec(u)?;
        for v in plane.basis() {
            let s: Rational = ju.iter().zip(v).map(|(a, b)| a * b).sum();
            if !s.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bivector of a D_n element: its matrix `M` satisfies `M = S J` for the
/// skew matrix `S` of the bivector, and `J^2 = 1`.
pub fn bivector_transport(model: &DnMatrixModel, x: &LieElement) -> Result<Bivector> {
    let m = model.to_matrix(x)?;
    Bivector::from_skew(m.mul(model.form())?)
}

/// Integer matrix of determinant one with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialLinearSample {
    pub g: RatMatrix,
    pub inverse: RatMatrix,
}

impl SpecialLinearSample {
    pub fn identity(k: usize) -> Self {
        Self {
            g: RatMatrix::identity(k),
            inverse: RatMatrix::identity(k),
        }
    }

    /// `g = 1 + t E(i, j)`, `i != j`.
    pub fn elementary(k: usize, i: usize, j: usize, t: i64) -> Self {
        let mut g = RatMatrix::identity(k);
        let mut inverse = RatMatrix::identity(k);
        g[(i, j)] = rat(t);
        inverse[(i, j)] = rat(-t);
        Self { g, inverse }
    }

    pub fn size(&self) -> usize {
        self.g.rows()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            g: self.g.mul(&other.g)?,
            inverse: other.inverse.mul(&self.inverse)?,
        })
    }

    pub fn entries(&self) -> Vec<Vec<i64>> {
        (0..self.size())
            .map(|i| self.g.row(i).iter().map(|x| to_i64(x).expect("integral")).collect())
            .collect()
    }
}

/// Product of `steps` elementary matrices `1 + t E(i, j)` with `t` drawn
/// from `{-2, -1, 1, 2}`.
pub fn random_special_linear(k: usize, seed: u64, steps: usize) -> SpecialLinearSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = SpecialLinearSample::identity(k);
    for _ in 0..steps {
        let i = rng.gen_range(0..k);
        let mut j = rng.gen_range(0..k - 1);
        if j >= i {
            j += 1;
        }
        let t = [-2, -1, 1, 2][rng.gen_range(0..4)];
        s = s
            .mul(&SpecialLinearSample::elementary(k, i, j, t))
            .expect("same size");
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartKind {
    Vector,
    Covector,
    Wedge2,
}

/// Direct sum of copies of `C^k`, its dual and `wedge^2 C^k`, as a module
/// for `sl_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelSignature {
    pub k: usize,
    pub parts: Vec<PartKind>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelPoint {
    /// Coordinates per part; a `Wedge2` part uses `e_i ^ e_j`, `i < j`, in
    /// lexicographic order.
    pub parts: Vec<Vec<Rational>>,
}

impl ModelPoint {
    pub fn flat(&self) -> Vec<Rational> {
        self.parts.iter().flatten().cloned().collect()
    }
}

fn pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect()
}

fn wedge_coords(k: usize, b: &Bivector) -> Vec<Rational> {
    pairs(k).into_iter().map(|(i, j)| b.skew[(i, j)].clone()).collect()
}

fn coords_to_bivector(k: usize, c: &[Rational]) -> Bivector {
    let mut skew = RatMatrix::zeros(k, k);
    for ((i, j), x) in pairs(k).into_iter().zip(c) {
        skew[(i, j)] = x.clone();
        skew[(j, i)] = -x.clone();
    }
    Bivector { skew }
}

fn unit(k: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(k);
    v[i] = rat(1);
    v
}

impl ModelSignature {
    /// `wedge^2 C^{n-1} + C^{n-1}`.
    pub fn dn(n: usize) -> Self {
        Self {
            k: n - 1,
            parts: vec![PartKind::Wedge2, PartKind::Vector],
        }
    }

    /// `C^4 + (C^4)* + (C^4)* + C^4`.
    pub fn e6() -> Self {
        use PartKind::*;
        Self {
            k: 4,
            parts: vec![Vector, Covector, Covector, Vector],
        }
    }

    pub fn part_dim(&self, kind: PartKind) -> usize {
        match kind {
            PartKind::Vector | PartKind::Covector => self.k,
            PartKind::Wedge2 => self.k * (self.k - 1) / 2,
        }
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(|&p| self.part_dim(p)).sum()
    }

    pub fn check(&self, p: &ModelPoint) -> Result<()> {
        let ok = p.parts.len() == self.parts.len()
            && p.parts
                .iter()
                .zip(&self.parts)
                .all(|(v, &kind)| v.len() == self.part_dim(kind));
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch("model point does not fit the signature".into()))
        }
    }

    pub fn from_flat(&self, v: &[Rational]) -> Result<ModelPoint> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a model of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        let mut parts = Vec::with_capacity(self.parts.len());
        let mut off = 0;
        for &kind in &self.parts {
            let d = self.part_dim(kind);
            parts.push(v[off..off + d].to_vec());
            off += d;
        }
        Ok(ModelPoint { parts })
    }

    /// Matrix of the action of `x` in `gl_k` on the model.
    pub fn action(&self, x: &RatMatrix) -> RatMatrix {
        let k = self.k;
        let blocks: Vec<RatMatrix> = self
            .parts
            .iter()
            .map(|&kind| match kind {
                PartKind::Vector => x.clone(),
                PartKind::Covector => x.transpose().scale(&rat(-1)),
                PartKind::Wedge2 => {
                    let cols: Vec<Vec<Rational>> = pairs(k)
                        .into_iter()
                        .map(|(i, j)| {
                            let (ei, ej) = (unit(k, i), unit(k, j));
                            let a = Bivector::wedge(&x.column(i), &ej);
                            let b = Bivector::wedge(&ei, &x.column(j));
                            wedge_coords(k, &a.add(&b).expect("same size"))
                        })
                        .collect();
                    RatMatrix::from_columns(&cols, k * (k - 1) / 2)
                }
            })
            .collect();
        let d = self.dim();
        let mut out = RatMatrix::zeros(d, d);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    out[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows();
        }
        out
    }

    /// Group action: `g v`, `g^{-T} xi`, `g S g^T`.
    pub fn act(&self, g: &SpecialLinearSample, p: &ModelPoint) -> Result<ModelPoint> {
        self.check(p)?;
        let k = self.k;
        let inv_t = g.inverse.transpose();
        let parts = p
            .parts
            .iter()
            .zip(&self.parts)
            .map(|(v, &kind)| match kind {
                PartKind::Vector => g.g.mul_vec(v),
                PartKind::Covector => inv_t.mul_vec(v),
                PartKind::Wedge2 => {
                    let s = coords_to_bivector(k, v).skew;
                    let t = g.g.mul(&s)?.mul(&g.g.transpose())?;
                    Ok(wedge_coords(k, &Bivector { skew: t }))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModelPoint { parts })
    }

    /// The model as a module for the Chevalley algebra of type `A_{k-1}`,
    /// with `e_i = E(i, i+1)` and `f_i = E(i+1, i)`.
    pub fn representation(&self) -> Result<Representation> {
        let k = self.k;
        let source = RootSystem::new(DynkinType::a(k - 1)?);
        let mut e = Vec::with_capacity(k - 1);
        let mut f = Vec::with_capacity(k - 1);
        let mut h = Vec::with_capacity(k - 1);
        for i in 0..k - 1 {
            let (ei, fi) = sl_generators(k, i);
            let hi = ei.mul(&fi)?.sub(&fi.mul(&ei)?)?;
            e.push(self.action(&ei));
            f.push(self.action(&fi));
            h.push(self.action(&hi));
        }
        Ok(Representation {
            source,
            dim: self.dim(),
            e,
            f,
            h,
        })
    }
}

fn sl_generators(k: usize, i: usize) -> (RatMatrix, RatMatrix) {
    let mut e = RatMatrix::zeros(k, k);
    e[(i, i + 1)] = Rational::one();
    (e.clone(), e.transpose())
}

/// The Chevalley algebra of type `A_{k-1}` realized as `k x k` matrices.
pub struct SlModel {
    algebra: Arc<ChevalleyAlgebra>,
    images: Vec<RatMatrix>,
}

impl SlModel {
    pub fn new(algebra: Arc<ChevalleyAlgebra>) -> Result<Self> {
        let t = algebra.rootsys().dynkin();
        if t != DynkinType::a(t.rank)? {
            return Err(Error::AlgebraMismatch);
        }
        let k = t.rank + 1;
        let (e, f): (Vec<_>, Vec<_>) = (0..k - 1).map(|i| sl_generators(k, i)).unzip();
        let target = MatrixAlgebra { size: k };
        let images = algebra.extend_generators(&target, &e, &f)?;
        algebra.verify_homomorphism(&target, &images)?;
        Ok(Self { algebra, images })
    }

    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.algebra
    }

    pub fn to_matrix(&self, x: &LieElement) -> Result<RatMatrix> {
        if x.dim() != self.algebra.dim() {
            return Err(Error::AlgebraMismatch);
        }
        let k = self.algebra.rank() + 1;
        let mut out = RatMatrix::zeros(k, k);
        for i in x.support() {
            out = out.add(&self.images[i].scale(x.coeff(i)))?;
        }
        Ok(out)
    }

    /// Matrices of the source elements fixing `p`.
    pub fn stabilizer(&self, sig: &ModelSignature, p: &ModelPoint) -> Result<Vec<RatMatrix>> {
        let flat = p.flat();
        let cols = self
            .images
            .iter()
            .map(|m| sig.action(m).mul_vec(&flat))
            .collect::<Result<Vec<_>>>()?;
        let ker = RatMatrix::from_columns(&cols, sig.dim()).kernel_basis();
        ker.basis()
            .iter()
            .map(|c| self.to_matrix(&LieElement::from_coeffs(c.clone())))
            .collect()
    }
}

/// `(g e_1 ^ g e_2, g e_1)` in `wedge^2 C^{n-1} + C^{n-1}`.
pub fn iota_d(g: &SpecialLinearSample) -> ModelPoint {
    let k = g.size();
    let (u, v) = (g.g.column(0), g.g.column(1));
    ModelPoint {
        parts: vec![wedge_coords(k, &Bivector::wedge(&u, &v)), u],
    }
}

/// `(g e_1, e_4^* g^{-1}, e_3^* g^{-1}, g e_2)`; covectors are stored by
/// their coefficients on the dual basis.
pub fn iota_e6(g: &SpecialLinearSample) -> ModelPoint {
    ModelPoint {
        parts: vec![
            g.g.column(0),
            g.inverse.row(3).to_vec(),
            g.inverse.row(2).to_vec(),
            g.g.column(1),
        ],
    }
}

/// Equivariant linear isomorphism from a model onto a graded subspace.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    /// Model coordinates to local coordinates of the subspace.
    pub map: RatMatrix,
    pub base_point: ModelPoint,
    pub base_image: LieElement,
    /// Dimension of the solution space left after calibration.
    pub free_parameters: usize,
    subspace: GradedSubspace,
    signature: ModelSignature,
}

impl Intertwiner {
    pub fn apply(&self, p: &ModelPoint) -> Result<LieElement> {
        self.signature.check(p)?;
        Ok(self.subspace.lift(&self.map.mul_vec(&p.flat())?))
    }

    /// Whether `map * rho(y) = ad(y) * map` for every generator.
    pub fn is_equivariant(&self, model: &Representation, target: &Representation) -> Result<bool> {
        for (a, b) in model.generators().zip(target.generators()) {
            if self.map.mul(a)? != b.mul(&self.map)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Solves for an equivariant map from the model to `s` sending `base.0` to
/// `base.1`. Equivariant maps are parametrized by Schur's lemma: a model
/// summand may only map to a target summand of the same highest weight,
/// and such a map is fixed by the image of the highest-weight vector.
pub fn calibrated_intertwiner(
    s: &GradedSubspace,
    target: &Representation,
    target_dec: &Decomposition,
    sig: &ModelSignature,
    base: (&ModelPoint, &LieElement),
) -> Result<Intertwiner> {
    sig.check(base.0)?;
    let model = sig.representation()?;
    if model.source.dynkin() != target.source.dynkin() {
        return Err(Error::AlgebraMismatch);
    }
    let model_dec = crate::levi::decompose_module(&model)?;
    let md = model.dim;
    let td = target.dim;
    if md != td {
        return Err(Error::Intertwiner(format!(
            "model has dimension {md}, subspace has dimension {td}"
        )));
    }

    let p = base.0.flat();
    let z = s.restrict(base.1)?;
    for (name, dec, v) in [("model", &model_dec, &p), ("target", target_dec, &z)] {
        if let Some(i) = dec.project(v)?.iter().position(|c| c.iter().all(Zero::is_zero)) {
            return Err(Error::Intertwiner(format!(
                "{name} base point has no component in summand {i}"
            )));
        }
    }

    let b_inv = model_dec
        .basis_matrix(md)
        .inverse()
        .ok_or_else(|| Error::Intertwiner("model summands are dependent".into()))?;
    let mut blocks = Vec::new();
    let mut offset = 0;
    for ms in &model_dec.summands {
        for ts in target_dec.summands.iter().filter(|t| t.hw_weight == ms.hw_weight) {
            let mut images: Vec<Vec<Rational>> = vec![ts.hw_vector.clone()];
            for w in &ms.words[1..] {
                let (parent, node) = w.expect("lowering word");
                images.push(target.f[node - 1].mul_vec(&images[parent])?);
            }
            let coords = b_inv.select(
                &(offset..offset + ms.dim).collect::<Vec<_>>(),
                &(0..md).collect::<Vec<_>>(),
            );
            blocks.push(RatMatrix::from_columns(&images, td).mul(&coords)?);
        }
        offset += ms.dim;
    }

    let cols = blocks
        .iter()
        .map(|t| t.mul_vec(&p))
        .collect::<Result<Vec<_>>>()?;
    let system = RatMatrix::from_columns(&cols, td);
    let rank = system.rank();
    let c = system.solve_linear(&z)?.ok_or_else(|| {
        Error::Intertwiner(format!(
            "calibration has no solution: rank {rank} for {} unknowns",
            blocks.len()
        ))
    })?;
    let mut map = RatMatrix::zeros(td, md);
    for (ci, t) in c.iter().zip(&blocks) {
        if !ci.is_zero() {
            map = map.add(&t.scale(ci))?;
        }
    }
    let r = map.rank();
    if r != md {
        return Err(Error::Intertwiner(format!(
            "calibrated map has rank {r}, expected {md}"
        )));
    }
    let out = Intertwiner {
        map,
        base_point: base.0.clone(),
        base_image: base.1.clone(),
        free_parameters: blocks.len() - rank,
        subspace: s.clone(),
        signature: sig.clone(),
    };
    if !out.is_equivariant(&model, target)? {
        return Err(Error::Intertwiner("map is not equivariant".into()));
    }
    Ok(out)
}
