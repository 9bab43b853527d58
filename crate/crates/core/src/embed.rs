//! Lie algebra embeddings between Chevalley algebras.
//!
//! Every embedding is built from generator images, extended along
//! extraspecial pairs and then checked against the full structure-constant
//! table. Weight statements are made through the embedded coroots.

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::ratmat::{rat, to_i64, RatMatrix, Rational};
use crate::roots::{DynkinType, Root, RootSystem, Weight};

#[derive(Clone, Debug)]
pub struct LieEmbedding {
    source: Arc<ChevalleyAlgebra>,
    target: Arc<ChevalleyAlgebra>,
    /// Image of every source basis vector.
    images: Vec<LieElement>,
}

impl LieEmbedding {
    /// Extends generator images `e_i -> e[i]`, `f_i -> f[i]` to a full map and
    /// verifies it is an injective homomorphism.
    pub fn from_generators(
        source: Arc<ChevalleyAlgebra>,
        target: Arc<ChevalleyAlgebra>,
        e: &[LieElement],
        f: &[LieElement],
    ) -> Result<Self> {
        let images = source.extend_generators(target.as_ref(), e, f)?;
        let emb = Self {
            source,
            target,
            images,
        };
        emb.verify()?;
        Ok(emb)
    }

    /// Homomorphism on all source basis pairs, plus injectivity.
    pub fn verify(&self) -> Result<()> {
        self.source
            .verify_homomorphism(self.target.as_ref(), &self.images)?;
        let rank = self.full_map().rank();
        if rank != self.source.dim() {
            return Err(Error::Construction(format!(
                "full map has rank {rank}, source dimension {}",
                self.source.dim()
            )));
        }
        Ok(())
    }

    pub fn identity(alg: Arc<ChevalleyAlgebra>) -> Self {
        let images = (0..alg.dim()).map(|i| alg.basis_element(i)).collect();
        Self {
            source: alg.clone(),
            target: alg,
            images,
        }
    }

    pub fn source(&self) -> &Arc<ChevalleyAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ChevalleyAlgebra> {
        &self.target
    }

    pub fn image(&self, i: usize) -> &LieElement {
        &self.images[i]
    }

    pub fn e_image(&self, node: usize) -> &LieElement {
        &self.images[self.source.rank() + node - 1]
    }

    pub fn f_image(&self, node: usize) -> &LieElement {
        &self.images[self.source.rank() + self.source.rootsys().num_positive() + node - 1]
    }

    pub fn h_image(&self, node: usize) -> &LieElement {
        &self.images[node - 1]
    }

    /// Matrix from source coordinates to target coordinates.
    pub fn full_map(&self) -> RatMatrix {
        let cols: Vec<Vec<Rational>> = self.images.iter().map(|e| e.coeffs().to_vec()).collect();
        RatMatrix::from_columns(&cols, self.target.dim())
    }

    pub fn apply(&self, x: &LieElement) -> Result<LieElement> {
        if x.dim() != self.source.dim() {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.target.zero();
        for i in x.support() {
            out = out.add(&self.images[i].scale(x.coeff(i)));
        }
        Ok(out)
    }

    /// Coefficients of the embedded coroots `phi(h_k)` over the target `h_m`.
    pub fn coroot_images(&self) -> Result<Vec<Vec<Rational>>> {
        let l = self.target.rank();
        (1..=self.source.rank())
            .map(|k| {
                let h = self.h_image(k);
                if h.support().iter().any(|&i| i >= l) {
                    return Err(Error::Construction(format!(
                        "image of h{k} leaves the target Cartan subalgebra"
                    )));
                }
                Ok(h.coeffs()[..l].to_vec())
            })
            .collect()
    }

    /// For every target simple root, its pairings with the embedded coroots.
    pub fn induced_restriction(&self) -> Result<WeightRestriction> {
        let coroots = self.coroot_images()?;
        WeightRestriction::from_coroot_images(self.target.rootsys(), coroots)
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &LieEmbedding, inner: &LieEmbedding) -> Result<LieEmbedding> {
        if inner.target.rootsys().dynkin() != outer.source.rootsys().dynkin()
            || inner.target.dim() != outer.source.dim()
        {
            return Err(Error::AlgebraMismatch);
        }
        let images = inner
            .images
            .iter()
            .map(|x| outer.apply(x))
            .collect::<Result<Vec<_>>>()?;
        let emb = LieEmbedding {
            source: inner.source.clone(),
            target: outer.target.clone(),
            images,
        };
        emb.verify()?;
        Ok(emb)
    }

    #[cfg(test)]
    pub(crate) fn with_images(&self, images: Vec<LieElement>) -> Self {
        Self {
            source: self.source.clone(),
            target: self.target.clone(),
            images,
        }
    }
}

/// Embeds `source` onto the subsystem spanned by `node_map` (source node
/// `i` goes to the target root `node_map[i-1]`).
pub fn subsystem_embedding(
    source: Arc<ChevalleyAlgebra>,
    target: Arc<ChevalleyAlgebra>,
    node_map: &[Root],
) -> Result<LieEmbedding> {
    let src_rs = source.rootsys();
    let tgt_rs = target.rootsys();
    if node_map.len() != src_rs.rank() {
        return Err(Error::CartanMismatch(format!(
            "{} images for a rank {} source",
            node_map.len(),
            src_rs.rank()
        )));
    }
    for r in node_map {
        if !tgt_rs.is_root(r) {
            return Err(Error::CartanMismatch(format!("{r} is not a target root")));
        }
    }
    for (i, a) in node_map.iter().enumerate() {
        for (j, b) in node_map.iter().enumerate() {
            let got = tgt_rs.coroot_pairing(b, a);
            if got != src_rs.cartan()[i][j] {
                return Err(Error::CartanMismatch(format!(
                    "<{b}, {a}^vee> = {got}, source Cartan entry ({}, {}) is {}",
                    i + 1,
                    j + 1,
                    src_rs.cartan()[i][j]
                )));
            }
            if i != j && tgt_rs.is_root(&a.sub(b)) {
                return Err(Error::CartanMismatch(format!(
                    "{a} - {b} is a root; images are not a simple system"
                )));
            }
        }
    }
    let e: Vec<LieElement> = node_map.iter().map(|r| target.x(r)).collect();
    let f: Vec<LieElement> = node_map.iter().map(|r| target.x(&r.neg())).collect();
    LieEmbedding::from_generators(source, target, &e, &f)
}

/// Upper-left block embedding `sl_k -> sl_n` on the nodes `1..k-1`.
pub fn block_embedding_sl(
    k: usize,
    n: usize,
    target: Arc<ChevalleyAlgebra>,
) -> Result<LieEmbedding> {
    let expected = DynkinType::a(n.saturating_sub(1))?;
    if target.rootsys().dynkin() != expected {
        return Err(Error::Construction(format!(
            "target must be of type {expected}, got {}",
            target.rootsys().dynkin()
        )));
    }
    if k < 2 || k >= n {
        return Err(Error::Construction(format!("cannot embed sl{k} in sl{n}")));
    }
    let source = Arc::new(ChevalleyAlgebra::from_type(DynkinType::a(k - 1)?)?);
    let node_map: Vec<Root> = (1..k).map(|i| target.rootsys().simple_root(i)).collect();
    subsystem_embedding(source, target, &node_map)
}

/// Restriction of target simple roots to the embedded Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightRestriction {
    /// `table[j]`: pairings of target simple root `j+1` with the source coroots.
    pub table: Vec<Weight>,
    /// `coroot_images[k]`: coefficients of `phi(h_{k+1})` over the target `h_m`.
    #[serde(skip)]
    pub coroot_images: Vec<Vec<Rational>>,
}

impl WeightRestriction {
    fn from_coroot_images(target: &RootSystem, coroot_images: Vec<Vec<Rational>>) -> Result<Self> {
        let a = target.cartan();
        let l = target.rank();
        let mut table = Vec::with_capacity(l);
        for j in 0..l {
            let mut w = Vec::with_capacity(coroot_images.len());
            for c in &coroot_images {
                let s: Rational = (0..l).map(|m| &c[m] * rat(a[m][j])).sum();
                w.push(to_i64(&s).ok_or_else(|| {
                    Error::Construction("non-integral restriction of a simple root".into())
                })?);
            }
            table.push(Weight(w));
        }
        Ok(Self {
            table,
            coroot_images,
        })
    }

    /// Restriction of a target root.
    pub fn restrict_root(&self, beta: &Root) -> Weight {
        let k = self.coroot_images.len();
        let mut w = vec![0; k];
        for (j, &b) in beta.0.iter().enumerate() {
            for (slot, t) in w.iter_mut().zip(&self.table[j].0) {
                *slot += b * t;
            }
        }
        Weight(w)
    }

    /// Restriction of a target weight given by its simple-coroot pairings.
    pub fn restrict_weight(&self, lambda: &Weight) -> Option<Weight> {
        self.coroot_images
            .iter()
            .map(|c| {
                let s: Rational = c
                    .iter()
                    .zip(&lambda.0)
                    .map(|(x, &l)| x * rat(l))
                    .sum();
                to_i64(&s)
            })
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    FeasibleCartanMap,
    InfeasibleIntegrality,
    InfeasibleInjectivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub verdict: Verdict,
    /// First obstruction found, if any.
    pub violation: Option<String>,
    /// Candidate embedded coroots over the target simple coroots, as strings.
    pub coroot_images: Vec<Vec<String>>,
}

/// Checks whether a prescription `target simple root -> source weight` can be
/// the pullback along an embedding of Cartan subalgebras. The prescription
/// fixes the candidate coroot images linearly; they must be independent and
/// every target weight must restrict integrally, i.e. the images must lie in
/// the target coroot lattice.
pub fn restriction_feasibility(
    source: DynkinType,
    target: &RootSystem,
    prescription: &[Weight],
) -> Result<Feasibility> {
    let l = target.rank();
    let k = source.rank;
    if prescription.len() != l || prescription.iter().any(|w| w.0.len() != k) {
        return Err(Error::DimensionMismatch(
            "prescription must give a source weight for every target simple root".into(),
        ));
    }
    let a = RatMatrix::from_i64_rows(target.cartan());
    let a_inv = a.inverse().expect("Cartan matrices are invertible");
    // coroots[kk][m]: coefficient of h_m in phi(h_{kk+1}); A * c_kk = column kk of P.
    let mut coroots = Vec::with_capacity(k);
    for kk in 0..k {
        let col: Vec<Rational> = prescription.iter().map(|w| rat(w.0[kk])).collect();
        coroots.push(a_inv.mul_vec(&col)?);
    }
    let shown: Vec<Vec<String>> = coroots
        .iter()
        .map(|c| c.iter().map(|x| x.to_string()).collect())
        .collect();

    let rank = RatMatrix::from_rows(&coroots, l).rank();
    if rank < k {
        return Ok(Feasibility {
            verdict: Verdict::InfeasibleInjectivity,
            violation: Some(format!(
                "candidate coroot images span dimension {rank} < {k}"
            )),
            coroot_images: shown,
        });
    }

    for beta in target.positive_roots() {
        for (kk, c) in coroots.iter().enumerate() {
            let s: Rational = c
                .iter()
                .enumerate()
                .map(|(m, x)| x * rat(target.coroot_pairing(beta, &target.simple_root(m + 1))))
                .sum();
            if !s.is_integer() {
                return Ok(Feasibility {
                    verdict: Verdict::InfeasibleIntegrality,
                    violation: Some(format!(
                        "root {beta} pairs to {s} with source coroot h{}",
                        kk + 1
                    )),
                    coroot_images: shown,
                });
            }
        }
    }
    // Fundamental weight m pairs with phi(h_k) to coroots[k][m].
    for m in 0..l {
        for (kk, c) in coroots.iter().enumerate() {
            if !c[m].is_integer() {
                return Ok(Feasibility {
                    verdict: Verdict::InfeasibleIntegrality,
                    violation: Some(format!(
                        "fundamental weight {} pairs to {} with source coroot h{}",
                        m + 1,
                        c[m],
                        kk + 1
                    )),
                    coroot_images: shown,
                });
            }
        }
    }
    Ok(Feasibility {
        verdict: Verdict::FeasibleCartanMap,
        violation: None,
        coroot_images: shown,
    })
}

/// Prescription `target node j -> source simple root` (or zero), as weights.
pub fn prescription_from_roots(source: &RootSystem, map: &[Option<usize>]) -> Vec<Weight> {
    map.iter()
        .map(|m| match m {
            Some(node) => source.root_weight(&source.simple_root(*node)),
            None => Weight(vec![0; source.rank()]),
        })
        .collect()
}

/// Whether an element of the target lies in the Cartan subalgebra.
pub fn in_cartan(alg: &ChevalleyAlgebra, x: &LieElement) -> bool {
    x.support().iter().all(|&i| alg.is_cartan_index(i))
}

/// Whether all coefficients vanish on the given target basis indices.
pub fn vanishes_on(x: &LieElement, indices: &[usize]) -> bool {
    indices.iter().all(|&i| x.coeff(i).is_zero())
}
