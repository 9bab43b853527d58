//! Exact-arithmetic Lie theory for minimal nilpotent orbits of simply-laced
//! algebras: root systems, Chevalley bases, embeddings, abelian nilradicals,
//! orbit computations and the coordinate models used to check them.

pub mod chevalley;
pub mod embed;
pub mod error;
pub mod levi;
pub mod models;
pub mod orbits;
pub mod par;
pub mod ratmat;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
