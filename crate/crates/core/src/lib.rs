//! Exact arithmetic on monomial ideals: decompositions, associated primes,
//! local and global v-numbers, power filtrations, graph ideals and the
//! asymptotic behaviour of v-numbers along filtrations.

pub mod asymptotics;
pub mod closure;
pub mod decomp;
pub mod error;
pub mod filtration;
pub mod graph;
pub mod ideal;
pub mod lp;
pub mod monomial;
pub mod parse;
pub mod polarize;
pub mod vnumber;

pub use decomp::{associated_primes, bight, minimal_primes, MonomialPrime};
pub use error::{Error, Result};
pub use filtration::{FiltrationKind, FiltrationSpec};
pub use graph::{cover_ideal, edge_ideal, FamilyTag, Graph};
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, RingContext};
pub use parse::parse_ideal;
pub use vnumber::{local_v, v_number, VResult};
