//! Checks for algebraic weak factorisation systems on finite categories,
//! with lax orthogonality, lax idempotent (co)monads and simple reflections.

pub mod error;
pub mod fincat;
pub mod lifting;
pub mod report;
pub mod awfs;
pub mod coropf;
pub mod kz;
pub mod corpus;
pub mod simple;

pub use error::{Error, Result};
