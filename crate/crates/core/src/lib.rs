//! Antiprimitive BCH codes of length q+1 over GF(q), their duals and
//! automorphisms, PGL(2,q)-invariant code classification, and the Witt
//! spherical geometry designs carried by minimum-weight supports.

pub mod classify;
pub mod code;
pub mod cyclotomy;
pub mod design;
pub mod error;
pub mod field;
pub mod linalg;
pub mod moebius;
pub mod poly;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
