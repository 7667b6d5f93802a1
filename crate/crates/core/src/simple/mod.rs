//! Simple reflections and simple 2-monads: ordinary reflections on a finite
//! category, and the initial-object completion of finite categories with the
//! factorisation it transfers.

pub mod counterexample;
pub mod monad;
pub mod reflection;
pub mod transferred;

pub use counterexample::{bundled_instance, delta_empty_counterexample, CounterexampleReport};
pub use monad::{
    check_cat_monad_laws, init_completion, monad_algebras, CatMonad, CorruptedMultiplication, InitCompletion,
    TruncatedDeltaEmpty,
};
pub use reflection::{
    check_simplicity_agreement, find_pullback, is_simple_reflection, labelled_posets, poset_reflections, pullback_factor, simple_reflection_factor, split_product_category, split_product_reflection,
    t_iso_coreflective, PullbackFactor, ReflectionHandle, ReflectionMonad, SimplicityReport,
};
pub use transferred::{
    check_algebra_bundles, check_fibres, check_simplicity_witness, check_terminal_case, coalgebras_match_embeddings,
    f_embedding_check, f_embeddings, fibre, opfib_colim_to_ralg, ralg_to_opfib_colim, OpfibBundle, Transferred,
};
