//! Finite categories, functors, natural transformations and the searches
//! over them.

mod adjunction;
mod category;
pub mod construct;
mod functor;
mod nat;
mod search;
pub mod text;
mod twocat;

pub use adjunction::{
    all_right_adjoint_coretracts, compose_adjunctions, counits_for_identity_unit, find_right_adjoint_coretract, right_adjoint_coretract,
    units_for_identity_counit, verify_adjunction, Adjunction, AdjunctionReport,
};
pub use category::{ArrId, ArrowSig, FinCategory, ObjId};
pub use construct::{arrow_category, comma, pullback, CommaCone, PullbackCone};
pub use functor::{CatRef, Functor};
pub use nat::NatTrans;
pub use search::{
    count_functors, enumerate_functors, enumerate_nat_trans, find_isomorphism, nat_trans_with, search_functors, search_nat_trans,
    SearchLimit,
};
pub use twocat::{Cat, Local, TwoCategory};
