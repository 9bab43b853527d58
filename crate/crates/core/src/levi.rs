//! Abelian nilradicals of maximal parabolics and their decomposition into
//! irreducible summands under an embedded subalgebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::embed::LieEmbedding;
use crate::error::{Error, Result};
use crate::ratmat::{is_zero_vec, rat, to_i64, zero_vec, RatMatrix, Rational, Subspace};
use crate::roots::{DynkinType, Family, Root, RootSystem, Weight};

/// Span of a set of root vectors of an algebra.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    algebra: Arc<ChevalleyAlgebra>,
    members: Vec<Root>,
    indices: Vec<usize>,
}

impl GradedSubspace {
    pub fn new(algebra: Arc<ChevalleyAlgebra>, members: Vec<Root>) -> Result<Self> {
        let indices = members
            .iter()
            .map(|r| {
                algebra
                    .root_vector_index(r)
                    .ok_or_else(|| Error::Construction(format!("{r} is not a root")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            algebra,
            members,
            indices,
        })
    }

    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.algebra
    }

    pub fn members(&self) -> &[Root] {
        &self.members
    }

    /// Basis indices of the member root vectors in the ambient algebra.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn span(&self) -> Subspace {
        let vs: Vec<Vec<Rational>> = self
            .indices
            .iter()
            .map(|&i| self.algebra.basis_element(i).into_coeffs())
            .collect();
        Subspace::span(self.algebra.dim(), &vs)
    }

    /// Local coordinates of an ambient element lying in the span.
    pub fn restrict(&self, x: &LieElement) -> Result<Vec<Rational>> {
        let mut rest = x.clone().into_coeffs();
        let local: Vec<Rational> = self
            .indices
            .iter()
            .map(|&i| std::mem::take(&mut rest[i]))
            .collect();
        if is_zero_vec(&rest) {
            Ok(local)
        } else {
            Err(Error::NotInSubspace)
        }
    }

    /// Ambient element from local coordinates.
    pub fn lift(&self, local: &[Rational]) -> LieElement {
        let mut c = zero_vec(self.algebra.dim());
        for (&i, x) in self.indices.iter().zip(local) {
            c[i] = x.clone();
        }
        LieElement::from_coeffs(c)
    }

    pub fn is_abelian(&self) -> bool {
        self.indices.iter().enumerate().all(|(a, &i)| {
            self.indices[a + 1..]
                .iter()
                .all(|&j| self.algebra.bracket_basis(i, j).is_empty())
        })
    }

    /// Whether `[y, s]` stays in `s` for every given element `y`.
    pub fn is_invariant_under(&self, ys: &[LieElement]) -> Result<bool> {
        for y in ys {
            for &i in &self.indices {
                let b = self.algebra.bracket(y, &self.algebra.basis_element(i))?;
                if self.restrict(&b).is_err() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Matrix of `ad(y)` restricted to the subspace, in local coordinates.
    pub fn restricted_ad(&self, y: &LieElement) -> Result<RatMatrix> {
        let mut cols = Vec::with_capacity(self.dim());
        for &i in &self.indices {
            let b = self.algebra.bracket(y, &self.algebra.basis_element(i))?;
            cols.push(self.restrict(&b).map_err(|_| {
                Error::NotInvariant(format!(
                    "bracket with {} leaves the subspace",
                    self.algebra.basis_label(i)
                ))
            })?);
        }
        Ok(RatMatrix::from_columns(&cols, self.dim()))
    }
}

/// Span of the root vectors whose coefficient at `node` is positive. The node
/// must have coefficient 1 in the highest root, which makes the span abelian.
pub fn abelian_nilradical(alg: Arc<ChevalleyAlgebra>, node: usize) -> Result<GradedSubspace> {
    let theta = alg.rootsys().highest_root();
    let c = theta.coeff(node);
    if c != 1 {
        return Err(Error::NonAbelianParabolic { node, coeff: c });
    }
    let members: Vec<Root> = alg
        .rootsys()
        .positive_roots()
        .iter()
        .filter(|r| r.coeff(node) >= 1)
        .cloned()
        .collect();
    GradedSubspace::new(alg, members)
}

/// Generators of the maximal parabolic for `node`: the Cartan subalgebra,
/// every `x_{alpha_i}`, and `x_{-alpha_i}` for `i != node`.
pub fn parabolic_generators(alg: &ChevalleyAlgebra, node: usize) -> Vec<LieElement> {
    let rs = alg.rootsys();
    let mut out: Vec<LieElement> = (1..=rs.rank()).map(|i| alg.h(i)).collect();
    for i in 1..=rs.rank() {
        out.push(alg.x(&rs.simple_root(i)));
        if i != node {
            out.push(alg.x(&rs.simple_root(i).neg()));
        }
    }
    out
}

/// A finite-dimensional module of a Chevalley algebra, given by the action
/// matrices of the generators in a weight basis.
#[derive(Clone, Debug)]
pub struct Representation {
    pub source: RootSystem,
    pub dim: usize,
    pub e: Vec<RatMatrix>,
    pub f: Vec<RatMatrix>,
    pub h: Vec<RatMatrix>,
}

impl Representation {
    /// Restriction of the adjoint action of `emb`'s image to `s`.
    pub fn on_subspace(s: &GradedSubspace, emb: &LieEmbedding) -> Result<Self> {
        if !Arc::ptr_eq(s.algebra(), emb.target())
            && s.algebra().rootsys().dynkin() != emb.target().rootsys().dynkin()
        {
            return Err(Error::AlgebraMismatch);
        }
        let l = emb.source().rank();
        let build = |img: &dyn Fn(usize) -> LieElement| -> Result<Vec<RatMatrix>> {
            (1..=l).map(|k| s.restricted_ad(&img(k))).collect()
        };
        Ok(Self {
            source: emb.source().rootsys().clone(),
            dim: s.dim(),
            e: build(&|k| emb.e_image(k).clone())?,
            f: build(&|k| emb.f_image(k).clone())?,
            h: build(&|k| emb.h_image(k).clone())?,
        })
    }

    pub fn generators(&self) -> impl Iterator<Item = &RatMatrix> {
        self.e.iter().chain(&self.f).chain(&self.h)
    }

    /// Weights of the basis vectors; fails unless every `h` is diagonal with
    /// integer entries.
    pub fn basis_weights(&self) -> Result<Vec<Weight>> {
        let mut ws = vec![Vec::with_capacity(self.h.len()); self.dim];
        for h in &self.h {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    if i != j && !h[(i, j)].is_zero() {
                        return Err(Error::Decomposition(
                            "Cartan action is not diagonal in the given basis".into(),
                        ));
                    }
                }
                let w = to_i64(&h[(i, i)]).ok_or_else(|| {
                    Error::Decomposition("non-integral weight".into())
                })?;
                ws[i].push(w);
            }
        }
        Ok(ws.into_iter().map(Weight).collect())
    }

    fn weight_of(&self, v: &[Rational]) -> Result<Weight> {
        let mut w = Vec::with_capacity(self.h.len());
        for h in &self.h {
            let hv = h.mul_vec(v)?;
            let p = v.iter().position(|x| !x.is_zero()).expect("nonzero vector");
            let c = &hv[p] / &v[p];
            if hv.iter().zip(v).any(|(a, b)| *a != &c * b) {
                return Err(Error::Decomposition("vector is not a weight vector".into()));
            }
            w.push(to_i64(&c).ok_or_else(|| Error::Decomposition("non-integral weight".into()))?);
        }
        Ok(Weight(w))
    }
}

#[derive(Clone, Debug)]
pub struct Summand {
    /// Highest-weight vector, in the module's coordinates.
    pub hw_vector: Vec<Rational>,
    pub hw_weight: Weight,
    pub dim: usize,
    /// Basis generated from the highest-weight vector by lowering operators.
    pub basis: Vec<Vec<Rational>>,
    /// `words[i] = (parent, node)`: `basis[i] = f_node basis[parent]`; the
    /// first entry (the highest-weight vector) has no word.
    pub words: Vec<Option<(usize, usize)>>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// True when a repeated highest weight forced a non-coordinate basis of
    /// the highest-weight space.
    pub arbitrary_hw_basis: bool,
}

impl Decomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.dim).collect()
    }

    pub fn hw_weights(&self) -> Vec<Weight> {
        self.summands.iter().map(|s| s.hw_weight.clone()).collect()
    }

    /// Columns are the summand bases, concatenated in order.
    pub fn basis_matrix(&self, dim: usize) -> RatMatrix {
        let cols: Vec<Vec<Rational>> = self
            .summands
            .iter()
            .flat_map(|s| s.basis.iter().cloned())
            .collect();
        RatMatrix::from_columns(&cols, dim)
    }

    /// Components of `v` in each summand.
    pub fn project(&self, v: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        let dim = v.len();
        let b = self.basis_matrix(dim);
        let c = b.solve_linear(v)?.ok_or(Error::NotInSubspace)?;
        let mut out = Vec::with_capacity(self.summands.len());
        let mut offset = 0;
        for s in &self.summands {
            let mut comp = zero_vec(dim);
            for (k, bv) in s.basis.iter().enumerate() {
                let coef = &c[offset + k];
                if coef.is_zero() {
                    continue;
                }
                for (x, y) in comp.iter_mut().zip(bv) {
                    *x += coef * y;
                }
            }
            offset += s.basis.len();
            out.push(comp);
        }
        Ok(out)
    }
}

/// Decomposes a completely reducible module into irreducible summands.
///
/// Highest-weight vectors are the joint kernel of the raising operators,
/// computed weight space by weight space; each is expanded by lowering
/// operators and its dimension certified by the Weyl dimension formula.
pub fn decompose_module(rep: &Representation) -> Result<Decomposition> {
    let weights = rep.basis_weights()?;
    let mut groups: BTreeMap<usize, (Weight, Vec<usize>)> = BTreeMap::new();
    let mut first_of: BTreeMap<Weight, usize> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        let key = *first_of.entry(w.clone()).or_insert(i);
        groups.entry(key).or_insert_with(|| (w.clone(), Vec::new())).1.push(i);
    }

    let raising = rep
        .e
        .iter()
        .try_fold(RatMatrix::zeros(0, rep.dim), |acc, e| acc.vstack(e))?;

    let mut hw_vectors = Vec::new();
    let mut arbitrary = false;
    for (_, (_, members)) in groups {
        let sub = raising.select(&(0..raising.rows()).collect::<Vec<_>>(), &members);
        let kernel = sub.kernel_basis();
        if kernel.dim() == 0 {
            continue;
        }
        let pure: Vec<usize> = (0..members.len())
            .filter(|&c| (0..sub.rows()).all(|r| sub[(r, c)].is_zero()))
            .collect();
        let local: Vec<Vec<Rational>> = if pure.len() == kernel.dim() {
            pure.iter()
                .map(|&c| {
                    let mut v = zero_vec(members.len());
                    v[c] = rat(1);
                    v
                })
                .collect()
        } else {
            arbitrary = true;
            kernel.basis().to_vec()
        };
        for lv in local {
            let mut v = zero_vec(rep.dim);
            for (x, &m) in lv.into_iter().zip(&members) {
                v[m] = x;
            }
            hw_vectors.push(v);
        }
    }

    let mut summands = Vec::with_capacity(hw_vectors.len());
    for v in hw_vectors {
        let lambda = rep.weight_of(&v)?;
        if !lambda.is_dominant() {
            return Err(Error::Decomposition(format!(
                "highest weight {:?} is not dominant",
                lambda.0
            )));
        }
        let expected = rep.source.weyl_dim(&lambda)? as usize;
        let (basis, words) = lower_closure(rep, &v, expected)?;
        if basis.len() != expected {
            return Err(Error::Decomposition(format!(
                "summand with highest weight {:?} has dimension {}, Weyl dimension {expected}",
                lambda.0,
                basis.len()
            )));
        }
        summands.push(Summand {
            hw_vector: v,
            hw_weight: lambda,
            dim: expected,
            basis,
            words,
        });
    }

    let d = Decomposition {
        summands,
        arbitrary_hw_basis: arbitrary,
    };
    let total = d.basis_matrix(rep.dim).rank();
    if total != rep.dim {
        return Err(Error::Decomposition(format!(
            "summands span dimension {total} of {}",
            rep.dim
        )));
    }
    for s in &d.summands {
        let span = Subspace::span(rep.dim, &s.basis);
        for g in rep.generators() {
            for b in &s.basis {
                if !span.contains(&g.mul_vec(b)?)? {
                    return Err(Error::NotInvariant(format!(
                        "summand with highest weight {:?}",
                        s.hw_weight.0
                    )));
                }
            }
        }
    }
    Ok(d)
}

type Words = Vec<Option<(usize, usize)>>;

fn lower_closure(
    rep: &Representation,
    v: &[Rational],
    limit: usize,
) -> Result<(Vec<Vec<Rational>>, Words)> {
    let mut basis = vec![v.to_vec()];
    let mut words = vec![None];
    let mut span = Subspace::span(rep.dim, &basis);
    let mut next = 0;
    while next < basis.len() && basis.len() < limit {
        for (k, f) in rep.f.iter().enumerate() {
            let w = f.mul_vec(&basis[next])?;
            if is_zero_vec(&w) || span.contains(&w)? {
                continue;
            }
            basis.push(w);
            words.push(Some((next, k + 1)));
            span = Subspace::span(rep.dim, &basis);
            if basis.len() >= limit {
                break;
            }
        }
        next += 1;
    }
    Ok((basis, words))
}

/// Decomposes `s` under the adjoint action of `emb`'s image.
pub fn decompose(s: &GradedSubspace, emb: &LieEmbedding) -> Result<Decomposition> {
    let rep = Representation::on_subspace(s, emb)?;
    decompose_module(&rep)
}

/// Per-summand components of an ambient element of `s`.
pub fn summand_projection(
    s: &GradedSubspace,
    d: &Decomposition,
    x: &LieElement,
) -> Result<Vec<LieElement>> {
    let local = s.restrict(x)?;
    Ok(d.project(&local)?
        .into_iter()
        .map(|c| s.lift(&c))
        .collect())
}

/// Roots of the highest-weight vectors; each must be a single root vector.
pub fn hw_roots(s: &GradedSubspace, d: &Decomposition) -> Result<Vec<Root>> {
    d.summands
        .iter()
        .map(|sm| {
            let nz: Vec<usize> = sm
                .hw_vector
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, _)| i)
                .collect();
            match nz.as_slice() {
                [i] => Ok(s.members()[*i].clone()),
                _ => Err(Error::Decomposition(
                    "highest-weight vector is not a root vector".into(),
                )),
            }
        })
        .collect()
}

/// Node permutation of the diagram automorphism (identity when there is none
/// that acts nontrivially on weights). 1-based in, 1-based out.
pub fn diagram_involution(t: DynkinType) -> Vec<usize> {
    let n = t.rank;
    match t.family {
        Family::A => (1..=n).rev().collect(),
        Family::D if n % 2 == 1 => {
            let mut p: Vec<usize> = (1..=n).collect();
            p.swap(n - 2, n - 1);
            p
        }
        Family::D => (1..=n).collect(),
        Family::E if n == 6 => vec![6, 2, 5, 4, 3, 1],
        Family::E => (1..=n).collect(),
    }
}

/// Dual of a weight under the diagram involution `-w_0`.
pub fn dual_weight(t: DynkinType, w: &Weight) -> Weight {
    let p = diagram_involution(t);
    Weight(p.iter().map(|&j| w.0[j - 1]).collect())
}

/// Summary of a decomposition for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionSummary {
    pub dims: Vec<usize>,
    pub hw_weights: Vec<Vec<i64>>,
    pub hw_roots: Option<Vec<Vec<i64>>>,
}

pub fn summarize(s: &GradedSubspace, d: &Decomposition) -> DecompositionSummary {
    DecompositionSummary {
        dims: d.dims(),
        hw_weights: d.hw_weights().into_iter().map(|w| w.0).collect(),
        hw_roots: hw_roots(s, d).ok().map(|rs| rs.into_iter().map(|r| r.0).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{block_embedding_sl, subsystem_embedding};

    fn alg(f: Family, n: usize) -> Arc<ChevalleyAlgebra> {
        Arc::new(ChevalleyAlgebra::from_type(DynkinType::new(f, n).unwrap()).unwrap())
    }

    fn simples(g: &ChevalleyAlgebra, nodes: &[usize]) -> Vec<Root> {
        nodes.iter().map(|&i| g.rootsys().simple_root(i)).collect()
    }

    #[test]
    fn nilradical_dimensions_and_abelianness() {
        for n in 4..=6 {
            let r = abelian_nilradical(alg(Family::D, n), n).unwrap();
            assert_eq!(r.dim(), n * (n - 1) / 2);
            assert!(r.is_abelian());
        }
        let i = abelian_nilradical(alg(Family::E, 6), 1).unwrap();
        assert_eq!(i.dim(), 16);
        assert!(i.is_abelian());
        let e7 = abelian_nilradical(alg(Family::E, 7), 7).unwrap();
        assert_eq!(e7.dim(), 27);
        assert!(e7.is_abelian());
    }

    #[test]
    fn non_abelian_node_rejected() {
        assert_eq!(
            abelian_nilradical(alg(Family::E, 6), 4).unwrap_err(),
            Error::NonAbelianParabolic { node: 4, coeff: 3 }
        );
    }

    #[test]
    fn positive_nilpotent_part_of_a3_is_not_abelian() {
        let a3 = alg(Family::A, 3);
        let n = GradedSubspace::new(a3.clone(), a3.rootsys().positive_roots().to_vec()).unwrap();
        assert!(!n.is_abelian());
    }

    #[test]
    fn nilradical_is_parabolic_invariant() {
        let e6 = alg(Family::E, 6);
        let i = abelian_nilradical(e6.clone(), 1).unwrap();
        assert!(i.is_invariant_under(&parabolic_generators(&e6, 1)).unwrap());
        assert!(!i
            .is_invariant_under(&[e6.x(&e6.rootsys().simple_root(1).neg())])
            .unwrap());
    }

    #[test]
    fn dn_nilradical_under_sl_n_minus_1() {
        for n in 4..=6 {
            let d = alg(Family::D, n);
            let nodes: Vec<usize> = (1..n).collect();
            let phi2 = subsystem_embedding(alg(Family::A, n - 1), d.clone(), &simples(&d, &nodes))
                .unwrap();
            let phi1 = block_embedding_sl(n - 1, n, phi2.source().clone()).unwrap();
            let comp = LieEmbedding::compose(&phi2, &phi1).unwrap();
            let r = abelian_nilradical(d.clone(), n).unwrap();
            let dec = decompose(&r, &comp).unwrap();
            let mut dims = dec.dims();
            dims.sort();
            let mut expect = vec![n - 1, (n - 1) * (n - 2) / 2];
            expect.sort();
            assert_eq!(dims, expect);
            let roots = hw_roots(&r, &dec).unwrap();
            assert!(roots.contains(&d.rootsys().highest_root()));

            // under sl_n itself the nilradical is irreducible
            let dec = decompose(&r, &phi2).unwrap();
            assert_eq!(dec.dims(), vec![n * (n - 1) / 2]);
            assert_eq!(dec.hw_weights()[0], Weight::fundamental(n - 1, 2));
        }
    }

    #[test]
    fn e6_nilradical_is_the_spin_module() {
        let e6 = alg(Family::E, 6);
        let phi2 =
            subsystem_embedding(alg(Family::D, 5), e6.clone(), &simples(&e6, &[6, 5, 4, 3, 2]))
                .unwrap();
        let i = abelian_nilradical(e6.clone(), 1).unwrap();
        let dec = decompose(&i, &phi2).unwrap();
        assert_eq!(dec.dims(), vec![16]);
        let w = &dec.hw_weights()[0];
        assert!(*w == Weight::fundamental(5, 5) || *w == Weight::fundamental(5, 4));
        let theta = e6.rootsys().highest_root();
        assert_eq!(phi2.induced_restriction().unwrap().restrict_root(&theta), *w);
    }

    #[test]
    fn projections() {
        let e6 = alg(Family::E, 6);
        let phi2 =
            subsystem_embedding(alg(Family::D, 5), e6.clone(), &simples(&e6, &[6, 5, 4, 3, 2]))
                .unwrap();
        let phi1 = subsystem_embedding(
            alg(Family::A, 3),
            phi2.source().clone(),
            &simples(phi2.source(), &[4, 3, 5]),
        )
        .unwrap();
        let comp = LieEmbedding::compose(&phi2, &phi1).unwrap();
        let i = abelian_nilradical(e6.clone(), 1).unwrap();
        let dec = decompose(&i, &comp).unwrap();
        assert_eq!(dec.dims(), vec![4, 4, 4, 4]);
        let a3 = DynkinType::a(3).unwrap();
        let mut ws = dec.hw_weights();
        let mut duals: Vec<Weight> = ws.iter().map(|w| dual_weight(a3, w)).collect();
        ws.sort();
        duals.sort();
        assert_eq!(ws, duals);
        assert!(ws.iter().all(|w| *w == Weight::fundamental(3, 1) || *w == Weight::fundamental(3, 3)));

        let x = e6.highest_root_vector();
        let parts = summand_projection(&i, &dec, &x).unwrap();
        assert_eq!(parts.iter().filter(|p| !p.is_zero()).count(), 1);
        for (k, sm) in dec.summands.iter().enumerate() {
            let parts = summand_projection(&i, &dec, &i.lift(&sm.hw_vector)).unwrap();
            for (j, p) in parts.iter().enumerate() {
                assert_eq!(p.is_zero(), j != k);
            }
        }
        assert_eq!(
            summand_projection(&i, &dec, &e6.h(1)).unwrap_err(),
            Error::NotInSubspace
        );
    }

    #[test]
    fn involutions() {
        assert_eq!(diagram_involution(DynkinType::a(3).unwrap()), vec![3, 2, 1]);
        assert_eq!(
            dual_weight(DynkinType::a(3).unwrap(), &Weight(vec![1, 0, 0])),
            Weight(vec![0, 0, 1])
        );
        assert_eq!(
            diagram_involution(DynkinType::d(5).unwrap()),
            vec![1, 2, 3, 5, 4]
        );
    }
}
