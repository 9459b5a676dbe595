//! Exact intersection theory for the resolved standard Cremona
//! transformations of P^3 and P^4, and the Weyl group action on classes
//! through up to eight general points of P^4.
//!
//! * [`chow`] is the graded-ring substrate.
//! * [`p3`] and [`p4`] instantiate the two Chow rings and the Cremona
//!   involution on classes and on coefficient records.
//! * [`weyl`] acts with permutations and five-point Cremona maps on
//!   multiplicity records, enumerates orbits and pairs Weyl planes.
//! * [`linsys`] computes Euler characteristics and base-locus diagnostics
//!   for fat-point linear systems.

pub mod chow;
pub mod error;
pub mod linsys;
pub mod p3;
pub mod p4;
pub mod weyl;

pub use chow::{BasisElement, ChowClass, GradedRing, IndexSet, Kind, RingId};
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/chow-rings.md")]
    mod chow_rings {}
    #[doc = include_str!("../../../book/src/cremona.md")]
    mod cremona {}
    #[doc = include_str!("../../../book/src/weyl-orbits.md")]
    mod weyl_orbits {}
    #[doc = include_str!("../../../book/src/pairing.md")]
    mod pairing {}
    #[doc = include_str!("../../../book/src/linear-systems.md")]
    mod linear_systems {}
}
