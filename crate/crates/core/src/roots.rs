//! Simply-laced root systems in Bourbaki labeling.
//!
//! Roots live exclusively in simple-root coordinates. Node indices in the
//! public API are 1-based, matching the Dynkin labels; vector positions are
//! 0-based.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratmat::{to_i64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 3,
            Family::E => rank == 6 || rank == 7,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            let c = match family {
                Family::A => 'A',
                Family::D => 'D',
                Family::E => 'E',
            };
            Err(Error::InvalidDynkinType { family: c, rank })
        }
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn d(rank: usize) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn e(rank: usize) -> Result<Self> {
        Self::new(Family::E, rank)
    }

    /// Diagram edges as 1-based node pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            Family::E => {
                let mut e = vec![(1, 3), (3, 4), (2, 4), (4, 5), (5, 6)];
                if n == 7 {
                    e.push((6, 7));
                }
                e
            }
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

pub fn cartan_matrix(t: DynkinType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in t.edges() {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    a
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// Coefficient at a 1-based node.
    pub fn coeff(&self, node: usize) -> i64 {
        self.0[node - 1]
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn simple(rank: usize, node: usize) -> Root {
        let mut c = vec![0; rank];
        c[node - 1] = 1;
        Root(c)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An integral weight, stored as its pairings with the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn pairings(&self) -> &[i64] {
        &self.0
    }

    pub fn fundamental(rank: usize, node: usize) -> Weight {
        let mut c = vec![0; rank];
        c[node - 1] = 1;
        Weight(c)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i64>>,
    positives: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(dynkin: DynkinType) -> Self {
        let cartan = cartan_matrix(dynkin);
        let positives = generate_positive_roots(&cartan);
        let np = positives.len();
        let mut index = HashMap::with_capacity(2 * np);
        for (i, r) in positives.iter().enumerate() {
            index.insert(r.clone(), i);
            index.insert(r.neg(), np + i);
        }
        Self {
            dynkin,
            cartan,
            positives,
            index,
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height, then by descending coefficient vector
    /// (so the simple roots come first, in node order).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positives
    }

    pub fn num_positive(&self) -> usize {
        self.positives.len()
    }

    /// Root at a canonical index: positives first, then their negatives.
    pub fn root(&self, idx: usize) -> Root {
        let np = self.positives.len();
        if idx < np {
            self.positives[idx].clone()
        } else {
            self.positives[idx - np].neg()
        }
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positives.len()
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn simple_root(&self, node: usize) -> Root {
        Root::simple(self.rank(), node)
    }

    pub fn highest_root(&self) -> Root {
        self.positives
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("nonempty root system")
    }

    pub fn roots_with_coefficient(&self, node: usize, c: i64) -> Vec<Root> {
        self.positives
            .iter()
            .filter(|r| r.coeff(node) == c)
            .cloned()
            .collect()
    }

    /// Symmetric bilinear form on the root lattice, `(α_i, α_j) = A_ij`.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let mut s = 0;
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                s += x * self.cartan[i][j] * y;
            }
        }
        s
    }

    /// `<beta, alpha^vee>` for roots; all roots have squared length 2.
    pub fn coroot_pairing(&self, beta: &Root, alpha: &Root) -> i64 {
        self.inner(beta, alpha)
    }

    /// `<lambda, alpha^vee>` for a weight given by simple-coroot pairings.
    pub fn weight_pairing(&self, lambda: &Weight, alpha: &Root) -> i64 {
        lambda.0.iter().zip(&alpha.0).map(|(l, a)| l * a).sum()
    }

    pub fn root_weight(&self, r: &Root) -> Weight {
        Weight(
            (1..=self.rank())
                .map(|i| self.coroot_pairing(r, &self.simple_root(i)))
                .collect(),
        )
    }

    pub fn reflect(&self, node: usize, beta: &Root) -> Root {
        let k = self.coroot_pairing(beta, &self.simple_root(node));
        let mut c = beta.0.clone();
        c[node - 1] -= k;
        Root(c)
    }

    /// Largest `k >= 0` with `beta - k alpha` a root (the alpha-string start).
    pub fn string_depth(&self, alpha: &Root, beta: &Root) -> i64 {
        let mut k = 0;
        let mut cur = beta.sub(alpha);
        while self.is_root(&cur) {
            k += 1;
            cur = cur.sub(alpha);
        }
        k
    }

    /// Dimension of the irreducible module with dominant highest weight `lambda`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u64> {
        if lambda.0.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "weight of length {} for rank {}",
                lambda.0.len(),
                self.rank()
            )));
        }
        if !lambda.is_dominant() {
            return Err(Error::NonDominantWeight(lambda.0.clone()));
        }
        let mut d = Rational::one();
        for alpha in &self.positives {
            let num: i64 = lambda
                .0
                .iter()
                .zip(&alpha.0)
                .map(|(l, a)| (l + 1) * a)
                .sum();
            d *= Rational::new(num.into(), alpha.height().into());
        }
        assert!(d.is_integer(), "Weyl dimension must be integral");
        let d = to_i64(&d).expect("dimension fits in i64");
        Ok(d as u64)
    }

    pub fn dim_algebra(&self) -> usize {
        self.rank() + 2 * self.positives.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.positives.iter().map(|r| r.0.clone()).collect::<Vec<_>>())
    }
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let pairing = |beta: &[i64], i: usize| -> i64 { (0..n).map(|j| beta[j] * cartan[j][i]).sum() };
    let mut all: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    let mut seen: std::collections::HashSet<Root> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut cur = beta.0.clone();
                loop {
                    cur[i] -= 1;
                    if seen.contains(&Root(cur.clone())) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(&beta.0, i);
                if q > 0 {
                    let mut up = beta.0.clone();
                    up[i] += 1;
                    let up = Root(up);
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    all
}
