//! Simply-laced Lie algebras in a Chevalley basis.
//!
//! Basis order: `h_1..h_l`, then `x_beta` for the positive roots in canonical
//! order, then `x_{-beta}` in the same order. Structure constants come from
//! the bimultiplicative sign cocycle on the root lattice and are then
//! renormalized so that every extraspecial pair has `N = +1`.

mod matrix_model;

pub use matrix_model::{dn_matrix_model, DnMatrixModel, MatrixAlgebra};

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;
use crate::ratmat::{rat, zero_vec, RatMatrix, Rational};
use crate::roots::{DynkinType, Root, RootSystem};

/// Exact element of a Chevalley algebra: rational coefficients over the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    coeffs: Vec<Rational>,
}

impl LieElement {
    pub fn zero(dim: usize) -> Self {
        Self {
            coeffs: zero_vec(dim),
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = Rational::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Indices of nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }
}

/// Sparse bracket of two basis vectors.
type SparseTerm = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    rootsys: RootSystem,
    dim: usize,
    table: Vec<Vec<SparseTerm>>,
    /// `N_{alpha,beta}` keyed by canonical root indices.
    constants: HashMap<(usize, usize), i64>,
}

/// Target of a homomorphism out of a Chevalley algebra.
pub trait LieTarget {
    type Elem: Clone + PartialEq;
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, s: &Rational) -> Self::Elem;
    fn combine(&self, terms: &[(Rational, &Self::Elem)], like: &Self::Elem) -> Self::Elem;
}

impl ChevalleyAlgebra {
    /// Builds the algebra and checks the Jacobi identity on every basis triple
    /// when `dim <= 78`, otherwise on 10^4 seeded triples.
    pub fn build(rootsys: RootSystem) -> Result<Self> {
        let alg = Self::build_unchecked(rootsys);
        let mode = if alg.dim <= 78 {
            JacobiMode::Exhaustive
        } else {
            JacobiMode::Sampled {
                triples: 10_000,
                seed: 0,
            }
        };
        let report = alg.verify_jacobi(mode);
        if let Some((i, j, k)) = report.first_failure {
            return Err(Error::JacobiViolation(i, j, k));
        }
        Ok(alg)
    }

    pub fn from_type(t: DynkinType) -> Result<Self> {
        Self::build(RootSystem::new(t))
    }

    pub(crate) fn build_unchecked(rootsys: RootSystem) -> Self {
        let l = rootsys.rank();
        let np = rootsys.num_positive();
        let nr = rootsys.num_roots();
        let dim = l + nr;
        let edges: Vec<(usize, usize)> = rootsys
            .dynkin()
            .edges()
            .into_iter()
            .map(|(i, j)| (i.min(j) - 1, i.max(j) - 1))
            .collect();
        let eps = |a: &Root, b: &Root| -> i64 {
            let mut e: i64 = a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum();
            for &(i, j) in &edges {
                e += a.0[i] * b.0[j];
            }
            if e.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        };

        // Signs s_beta rescaling the cocycle basis; s_{-beta} = -s_beta.
        let mut sign = vec![0i64; nr];
        for k in 0..np {
            let xi = rootsys.root(k);
            if xi.height() == 1 {
                sign[k] = 1;
                continue;
            }
            let (a, b) = extraspecial_pair(&rootsys, &xi);
            let ia = rootsys.root_index(&a).unwrap();
            let ib = rootsys.root_index(&b).unwrap();
            sign[k] = sign[ia] * sign[ib] * eps(&a, &b);
        }
        for k in 0..np {
            sign[np + k] = -sign[k];
        }

        let mut constants = HashMap::new();
        for i in 0..nr {
            let a = rootsys.root(i);
            for j in 0..nr {
                let b = rootsys.root(j);
                if let Some(k) = rootsys.root_index(&a.add(&b)) {
                    constants.insert((i, j), sign[i] * sign[j] * sign[k] * eps(&a, &b));
                }
            }
        }

        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..l {
            let hi = rootsys.simple_root(i + 1);
            for k in 0..nr {
                let c = rootsys.coroot_pairing(&rootsys.root(k), &hi);
                if c != 0 {
                    table[i][l + k] = vec![(l + k, c)];
                    table[l + k][i] = vec![(l + k, -c)];
                }
            }
        }
        for i in 0..nr {
            let a = rootsys.root(i);
            for j in 0..nr {
                let b = rootsys.root(j);
                let s = a.add(&b);
                if s.0.iter().all(|&c| c == 0) {
                    table[l + i][l + j] = a
                        .0
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(m, &c)| (m, c))
                        .collect();
                } else if let Some(k) = rootsys.root_index(&s) {
                    table[l + i][l + j] = vec![(l + k, constants[&(i, j)])];
                }
            }
        }
        Self {
            rootsys,
            dim,
            table,
            constants,
        }
    }

    pub fn rootsys(&self) -> &RootSystem {
        &self.rootsys
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rootsys.rank()
    }

    /// Basis index of `h_node` (1-based node).
    pub fn h_index(&self, node: usize) -> usize {
        node - 1
    }

    pub fn root_vector_index(&self, r: &Root) -> Option<usize> {
        self.rootsys.root_index(r).map(|k| self.rank() + k)
    }

    /// Root of a basis vector, or `None` for Cartan basis vectors.
    pub fn basis_root(&self, idx: usize) -> Option<Root> {
        (idx >= self.rank()).then(|| self.rootsys.root(idx - self.rank()))
    }

    pub fn is_cartan_index(&self, idx: usize) -> bool {
        idx < self.rank()
    }

    pub fn basis_label(&self, idx: usize) -> String {
        match self.basis_root(idx) {
            None => format!("h{}", idx + 1),
            Some(r) => format!("x{r}"),
        }
    }

    pub fn zero(&self) -> LieElement {
        LieElement::zero(self.dim)
    }

    pub fn basis_element(&self, i: usize) -> LieElement {
        LieElement::basis(self.dim, i)
    }

    pub fn h(&self, node: usize) -> LieElement {
        self.basis_element(self.h_index(node))
    }

    /// Root vector `x_r`. Panics when `r` is not a root.
    pub fn x(&self, r: &Root) -> LieElement {
        let idx = self
            .root_vector_index(r)
            .unwrap_or_else(|| panic!("{r} is not a root of {}", self.rootsys.dynkin()));
        self.basis_element(idx)
    }

    /// Coroot `h_r = sum c_i h_i` for a root with coefficients `c`.
    pub fn coroot(&self, r: &Root) -> LieElement {
        let mut e = self.zero();
        for (i, &c) in r.0.iter().enumerate() {
            e.coeffs[i] = rat(c);
        }
        e
    }

    pub fn highest_root_vector(&self) -> LieElement {
        self.x(&self.rootsys.highest_root())
    }

    /// `N_{alpha,beta}`, zero when `alpha + beta` is not a root.
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> i64 {
        match (self.rootsys.root_index(alpha), self.rootsys.root_index(beta)) {
            (Some(i), Some(j)) => self.constants.get(&(i, j)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i][j]
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> Result<LieElement> {
        if a.dim() != self.dim || b.dim() != self.dim {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.bracket_unchecked(a, b))
    }

    fn bracket_unchecked(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let mut out = self.zero();
        let bs = b.support();
        for i in a.support() {
            let ai = &a.coeffs[i];
            for &j in &bs {
                let terms = &self.table[i][j];
                if terms.is_empty() {
                    continue;
                }
                let p = ai * &b.coeffs[j];
                for &(k, c) in terms {
                    out.coeffs[k] += &p * rat(c);
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]` in the canonical basis.
    pub fn ad_matrix(&self, x: &LieElement) -> Result<RatMatrix> {
        if x.dim() != self.dim {
            return Err(Error::AlgebraMismatch);
        }
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for i in x.support() {
            let xi = &x.coeffs[i];
            for j in 0..self.dim {
                for &(k, c) in &self.table[i][j] {
                    m[(k, j)] += xi * rat(c);
                }
            }
        }
        Ok(m)
    }

    /// `true` if `ad(y)^dim = 0`.
    pub fn is_ad_nilpotent(&self, y: &LieElement) -> Result<bool> {
        let ad = self.ad_matrix(y)?;
        let mut p = ad.clone();
        for _ in 0..self.dim {
            if p.is_zero() {
                return Ok(true);
            }
            p = ad.mul(&p)?;
        }
        Ok(p.is_zero())
    }

    /// `exp(ad y) = sum_k ad(y)^k / k!` as a matrix.
    pub fn exp_ad(&self, y: &LieElement) -> Result<RatMatrix> {
        let ad = self.ad_matrix(y)?;
        let mut out = RatMatrix::identity(self.dim);
        let mut term = RatMatrix::identity(self.dim);
        for k in 1..=self.dim {
            term = ad.mul(&term)?.scale(&Rational::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                return Ok(out);
            }
            out = out.add(&term)?;
        }
        Err(Error::NotNilpotent)
    }

    /// `exp(ad y) x`, computed term by term after checking nilpotency.
    pub fn exp_ad_apply(&self, y: &LieElement, x: &LieElement) -> Result<LieElement> {
        if !self.is_ad_nilpotent(y)? {
            return Err(Error::NotNilpotent);
        }
        let mut out = x.clone();
        let mut term = x.clone();
        for k in 1..=self.dim {
            term = self
                .bracket_unchecked(y, &term)
                .scale(&Rational::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    pub fn verify_jacobi(&self, mode: JacobiMode) -> JacobiReport {
        self.verify_jacobi_with(par::Exec::default(), mode)
    }

    pub fn verify_jacobi_with(&self, exec: par::Exec, mode: JacobiMode) -> JacobiReport {
        match mode {
            JacobiMode::Exhaustive => {
                let d = self.dim;
                let failures: Vec<Option<(usize, usize, usize)>> = par::map_range_with(exec, d, |i| {
                    for j in i + 1..d {
                        for k in j + 1..d {
                            if !self.jacobi_holds(i, j, k) {
                                return Some((i, j, k));
                            }
                        }
                    }
                    None
                });
                let n = d * d.saturating_sub(1) * d.saturating_sub(2) / 6;
                JacobiReport {
                    mode,
                    triples_checked: n,
                    first_failure: failures.into_iter().flatten().next(),
                }
            }
            JacobiMode::Sampled { triples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let picks: Vec<(usize, usize, usize)> = (0..triples)
                    .map(|_| {
                        (
                            rng.gen_range(0..self.dim),
                            rng.gen_range(0..self.dim),
                            rng.gen_range(0..self.dim),
                        )
                    })
                    .collect();
                let results = par::map_slice_with(exec, &picks, |&(i, j, k)| self.jacobi_holds(i, j, k));
                let first_failure = picks
                    .iter()
                    .zip(&results)
                    .find(|(_, ok)| !**ok)
                    .map(|(t, _)| *t);
                JacobiReport {
                    mode,
                    triples_checked: triples,
                    first_failure,
                }
            }
        }
    }

    fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for &(m, x) in &self.table[b][c] {
                for &(p, y) in &self.table[a][m] {
                    *acc.entry(p).or_insert(0) += x * y;
                }
            }
        }
        acc.values().all(|&v| v == 0)
    }

    /// Checks `|N_{a,b}| = p + 1` and `N_{a,b} = -N_{b,a}` over all root pairs.
    pub fn verify_structure_constants(&self) -> std::result::Result<usize, (Root, Root)> {
        let rs = &self.rootsys;
        let mut checked = 0;
        for (&(i, j), &n) in &self.constants {
            let (a, b) = (rs.root(i), rs.root(j));
            let p = rs.string_depth(&a, &b);
            let back = self.constants.get(&(j, i)).copied().unwrap_or(0);
            if n.abs() != p + 1 || back != -n {
                return Err((a, b));
            }
            checked += 1;
        }
        Ok(checked)
    }

    /// Table of `(alpha index, beta index, N)` in canonical root order.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let mut out: Vec<StructureConstant> = self
            .constants
            .iter()
            .map(|(&(a, b), &n)| StructureConstant {
                alpha: a,
                beta: b,
                n,
            })
            .collect();
        out.sort_by_key(|s| (s.alpha, s.beta));
        out
    }

    pub fn structure_constants_json(&self) -> serde_json::Value {
        serde_json::to_value(self.structure_constants()).expect("serializable")
    }

    /// Random element with coefficients uniform in `-3..=3` on the given
    /// basis indices.
    pub fn random_element(&self, rng: &mut impl Rng, support: &[usize]) -> LieElement {
        let mut e = self.zero();
        for &i in support {
            e.coeffs[i] = rat(rng.gen_range(-3..=3));
        }
        e
    }

    /// Images of every basis element under the homomorphism fixed by the
    /// images of the Chevalley generators `e_i`, `f_i`. Non-simple root
    /// vectors are produced by bracketing along extraspecial pairs.
    pub fn extend_generators<T: LieTarget>(
        &self,
        target: &T,
        e: &[T::Elem],
        f: &[T::Elem],
    ) -> Result<Vec<T::Elem>> {
        let l = self.rank();
        if e.len() != l || f.len() != l {
            return Err(Error::Construction(format!(
                "expected {l} generator images, got {} and {}",
                e.len(),
                f.len()
            )));
        }
        let rs = &self.rootsys;
        let np = rs.num_positive();
        let mut images: Vec<Option<T::Elem>> = vec![None; self.dim];
        for i in 0..l {
            images[i] = Some(target.bracket(&e[i], &f[i]));
            images[l + i] = Some(e[i].clone());
            images[l + np + i] = Some(f[i].clone());
        }
        for k in l..np {
            let xi = rs.root(k);
            let (a, b) = extraspecial_pair(rs, &xi);
            let (ia, ib) = (rs.root_index(&a).unwrap(), rs.root_index(&b).unwrap());
            let n = self.constants[&(ia, ib)];
            let img = target.bracket(
                images[l + ia].as_ref().unwrap(),
                images[l + ib].as_ref().unwrap(),
            );
            images[l + k] = Some(target.scale(&img, &Rational::new(1.into(), n.into())));
            let nn = self.constants[&(np + ia, np + ib)];
            let img = target.bracket(
                images[l + np + ia].as_ref().unwrap(),
                images[l + np + ib].as_ref().unwrap(),
            );
            images[l + np + k] = Some(target.scale(&img, &Rational::new(1.into(), nn.into())));
        }
        Ok(images.into_iter().map(Option::unwrap).collect())
    }

    /// Checks `[img a, img b] = img [a, b]` on every basis pair.
    pub fn verify_homomorphism<T: LieTarget + Sync>(
        &self,
        target: &T,
        images: &[T::Elem],
    ) -> Result<()>
    where
        T::Elem: Sync,
    {
        let d = self.dim;
        let failures = par::map_range(d, |i| {
            for j in i + 1..d {
                let lhs = target.bracket(&images[i], &images[j]);
                let terms: Vec<(Rational, &T::Elem)> = self.table[i][j]
                    .iter()
                    .map(|&(k, c)| (rat(c), &images[k]))
                    .collect();
                let rhs = target.combine(&terms, &lhs);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
            None
        });
        match failures.into_iter().flatten().next() {
            Some((i, j)) => Err(Error::NotHomomorphism(i, j)),
            None => Ok(()),
        }
    }
}

impl LieTarget for ChevalleyAlgebra {
    type Elem = LieElement;

    fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        self.bracket_unchecked(a, b)
    }

    fn scale(&self, a: &LieElement, s: &Rational) -> LieElement {
        a.scale(s)
    }

    fn combine(&self, terms: &[(Rational, &LieElement)], _like: &LieElement) -> LieElement {
        let mut out = self.zero();
        for (c, e) in terms {
            out = out.add(&e.scale(c));
        }
        out
    }
}

/// Extraspecial pair of a positive non-simple root: the first simple root
/// (in node order) whose difference with `xi` is again a root.
pub fn extraspecial_pair(rs: &RootSystem, xi: &Root) -> (Root, Root) {
    for node in 1..=rs.rank() {
        let a = rs.simple_root(node);
        let b = xi.sub(&a);
        if rs.is_root(&b) && b.is_positive() {
            return (a, b);
        }
    }
    panic!("{xi} has no extraspecial pair")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum JacobiMode {
    Exhaustive,
    Sampled { triples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub mode: JacobiMode,
    pub triples_checked: usize,
    pub first_failure: Option<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureConstant {
    pub alpha: usize,
    pub beta: usize,
    pub n: i64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Family;

    fn alg(f: Family, n: usize) -> ChevalleyAlgebra {
        ChevalleyAlgebra::from_type(DynkinType::new(f, n).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(alg(Family::A, 3).dim(), 15);
        assert_eq!(alg(Family::D, 5).dim(), 45);
        assert_eq!(alg(Family::E, 6).dim(), 78);
    }

    #[test]
    fn defining_relations() {
        let g = alg(Family::E, 6);
        let rs = g.rootsys();
        let x = g.x(&rs.root(10));
        assert!(g.bracket(&x, &x).unwrap().is_zero());
        for node in 1..=6 {
            for k in 0..rs.num_roots() {
                let beta = rs.root(k);
                let got = g.bracket(&g.h(node), &g.x(&beta)).unwrap();
                let c = rs.coroot_pairing(&beta, &rs.simple_root(node));
                assert_eq!(got, g.x(&beta).scale(&rat(c)));
            }
        }
        let theta = rs.highest_root();
        let h = g.bracket(&g.x(&theta), &g.x(&theta.neg())).unwrap();
        assert_eq!(h, g.coroot(&Root(vec![1, 2, 2, 3, 2, 1])));
    }

    #[test]
    fn extraspecial_pairs_are_positive() {
        let g = alg(Family::D, 6);
        let rs = g.rootsys();
        for xi in rs.positive_roots().iter().filter(|r| r.height() > 1) {
            let (a, b) = extraspecial_pair(rs, xi);
            assert_eq!(g.structure_constant(&a, &b), 1, "{xi}");
        }
    }

    #[test]
    fn structure_constants_are_unit_and_antisymmetric() {
        for (f, n) in [(Family::A, 4), (Family::D, 5), (Family::E, 6)] {
            assert!(alg(f, n).verify_structure_constants().is_ok());
        }
    }

    #[test]
    fn mismatched_elements_rejected() {
        let g = alg(Family::A, 2);
        let a = LieElement::zero(3);
        assert_eq!(g.bracket(&a, &g.zero()), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn ad_ranks_of_highest_root_vector() {
        let e6 = alg(Family::E, 6);
        assert_eq!(e6.ad_matrix(&e6.highest_root_vector()).unwrap().rank(), 22);
        for n in 4..=6 {
            let d = alg(Family::D, n);
            let r = d.ad_matrix(&d.highest_root_vector()).unwrap().rank();
            assert_eq!(r, 4 * n - 6);
        }
        let a3 = alg(Family::A, 3);
        assert!(a3.ad_matrix(&a3.zero()).unwrap().is_zero());
    }

    #[test]
    fn exponentials() {
        let g = alg(Family::A, 3);
        assert_eq!(g.exp_ad(&g.zero()).unwrap(), RatMatrix::identity(15));
        let y = g.x(&Root(vec![1, 1, 0])).scale(&rat(2));
        let p = g.exp_ad(&y).unwrap().mul(&g.exp_ad(&y.neg()).unwrap()).unwrap();
        assert_eq!(p, RatMatrix::identity(15));
        assert_eq!(g.exp_ad(&g.h(1)), Err(Error::NotNilpotent));
        assert_eq!(
            g.exp_ad_apply(&g.h(1), &g.h(2)),
            Err(Error::NotNilpotent)
        );
    }

    #[test]
    fn dn_exponential_identity() {
        for n in 4..=6 {
            let g = alg(Family::D, n);
            let rs = g.rootsys();
            let theta = rs.highest_root();
            let mut gamma = vec![0; n];
            for c in gamma.iter_mut().take(n - 1).skip(1) {
                *c = 1;
            }
            let gamma = Root(gamma);
            let z = g.exp_ad_apply(&g.x(&gamma.neg()), &g.x(&theta)).unwrap();
            let other = theta.sub(&gamma);
            let mut expect = vec![1; n];
            expect[n - 2] = 0;
            assert_eq!(other, Root(expect));
            let i_t = g.root_vector_index(&theta).unwrap();
            let i_o = g.root_vector_index(&other).unwrap();
            assert_eq!(z.support(), {
                let mut s = vec![i_t, i_o];
                s.sort();
                s
            });
            assert_eq!(z.coeff(i_t), &rat(1));
            assert!(z.coeff(i_o) == &rat(1) || z.coeff(i_o) == &rat(-1));
        }
    }

    #[test]
    fn jacobi_modes() {
        let a3 = alg(Family::A, 3);
        let r = a3.verify_jacobi(JacobiMode::Exhaustive);
        assert!(r.passed());
        assert_eq!(r.triples_checked, 455);
        let r = a3.verify_jacobi(JacobiMode::Sampled {
            triples: 500,
            seed: 7,
        });
        assert!(r.passed());
    }

    #[test]
    fn corrupted_table_fails_jacobi() {
        let mut g = alg(Family::A, 3);
        let a = g.rootsys().simple_root(1);
        let b = g.rootsys().simple_root(2);
        let (i, j) = (
            g.root_vector_index(&a).unwrap(),
            g.root_vector_index(&b).unwrap(),
        );
        for t in g.table[i][j].iter_mut() {
            t.1 = -t.1;
        }
        for t in g.table[j][i].iter_mut() {
            t.1 = -t.1;
        }
        assert!(!g.verify_jacobi(JacobiMode::Exhaustive).passed());
    }

    #[test]
    fn structure_constant_dump_shape() {
        let g = alg(Family::A, 2);
        let v = g.structure_constants_json();
        let arr = v.as_array().unwrap();
        // six ordered pairs summing to a positive root, six to a negative one
        assert_eq!(arr.len(), 12);
        assert!(arr[0].get("alpha").is_some() && arr[0].get("n").is_some());
    }
}
