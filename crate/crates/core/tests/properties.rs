use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lieverify::chevalley::{ChevalleyAlgebra, LieElement};
use lieverify::embed::LieEmbedding;
use lieverify::orbits::{conjugate_by_exp, min_orbit_member, orbit_dim, stabilizer_subalgebra, suborbit_dim};
use lieverify::ratmat::{rat, RatMatrix};
use lieverify::roots::DynkinType;

fn d4() -> &'static Arc<ChevalleyAlgebra> {
    static G: OnceLock<Arc<ChevalleyAlgebra>> = OnceLock::new();
    G.get_or_init(|| Arc::new(ChevalleyAlgebra::from_type(DynkinType::d(4).unwrap()).unwrap()))
}

fn small_matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(|ch| ch.to_vec()).collect();
            RatMatrix::from_i64_rows(&rows)
        })
    })
}

/// A root vector pushed around by a few nilpotent exponentials.
fn orbit_point(g: &ChevalleyAlgebra, seed: u64) -> LieElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let roots = g.rootsys().positive_roots().to_vec();
    let ys: Vec<LieElement> = (0..3)
        .map(|k| {
            let r = &roots[(seed as usize + 5 * k) % roots.len()];
            let r = if k % 2 == 0 { r.clone() } else { r.neg() };
            let idx = g.root_vector_index(&r).unwrap();
            g.random_element(&mut rng, &[idx])
        })
        .collect();
    conjugate_by_exp(g, &ys, &g.highest_root_vector()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_survives_transpose(m in small_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_plus_nullity(m in small_matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|q| *q == rat(0)));
        }
    }

    #[test]
    fn oracle_accepts_conjugates_and_scalings(seed in 0u64..1000, s in prop_oneof![-3i64..=-1, 1i64..=3]) {
        let g = d4();
        let x = orbit_point(g, seed);
        prop_assert!(min_orbit_member(g, &x));
        prop_assert!(min_orbit_member(g, &x.scale(&rat(s))));
        prop_assert_eq!(orbit_dim(g, &x).unwrap(), 10);
    }

    #[test]
    fn suborbit_and_stabilizer_fill_the_source(seed in 0u64..1000) {
        let g = d4();
        let id = LieEmbedding::identity(g.clone());
        let x = orbit_point(g, seed);
        let orbit = suborbit_dim(&id, &x).unwrap();
        let stab = stabilizer_subalgebra(&id, &x).unwrap();
        prop_assert_eq!(orbit + stab.dim(), g.dim());
    }
}
