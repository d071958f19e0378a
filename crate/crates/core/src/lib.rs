//! Class numbers of imaginary quadratic fields `Q(sqrt(-p))` from counts of
//! supersingular j-invariants in `F_p`.
//!
//! The main entry point is [`algorithm3`]. [`algorithm2`] differs only in
//! how shared roots are found, and [`algorithm1`] computes the supersingular
//! set explicitly from class polynomials. The [`oracles`] module holds
//! brute-force references used by the tests and by [`selftest`].
//!
//! ```
//! let r = classnum::algorithm3(29).unwrap();
//! assert_eq!(r.h, 6);
//! assert_eq!((r.witnesses[0].d1, r.witnesses[0].d2, r.witnesses[0].x), (-11, -12, 4));
//! ```

pub mod arith;
pub mod bench;
pub mod classpoly;
pub mod cli;
pub mod error;
pub mod genus;
pub mod oracles;
pub mod pairing;
pub mod pipeline;
pub mod report;
pub mod selftest;

pub use error::{Error, Result};
pub use pairing::PairWitness;
pub use pipeline::{
    algorithm1, algorithm2, algorithm3, qualifying_discriminants, Algorithm1Report,
    ClassNumberReport, PipelineOptions,
};
