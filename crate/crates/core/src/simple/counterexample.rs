//! The comparison `T(A_*) -> (Kg)_*` for the truncated completion, which
//! fails to be surjective on objects as soon as `A_dot` is non-empty.

use serde::{Deserialize, Serialize};

use crate::awfs::FactorizationSystem;
use crate::error::{Error, Result};
use crate::fincat::construct::{coproduct, free};
use crate::fincat::{enumerate_nat_trans, CatRef, Functor, SearchLimit};

use super::monad::{CatMonad, TruncatedDeltaEmpty};
use super::transferred::{q, Transferred};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub depth: usize,
    pub truncated_at: usize,
    pub surjective: bool,
    /// Objects of the fibre of `Rg` over `*`.
    pub fibre: Vec<String>,
    /// Images of the objects of `T(A_*)`.
    pub image: Vec<String>,
    /// Fibre objects missed by the comparison.
    pub witnesses: Vec<String>,
    /// Whether every witness is `((a,n), xi)` with `a` in `A_dot` and `n >= 1`.
    pub witnesses_well_formed: bool,
}

/// The bundled instance `A_* = {a_star}`, `A_dot = {a_dot}`.
pub fn bundled_instance() -> (CatRef, CatRef) {
    (
        free("A*", &["a_star"], &[]).unwrap(),
        free("A.", &["a_dot"], &[]).unwrap(),
    )
}

pub fn delta_empty_counterexample(depth: usize, a_star: &CatRef, a_dot: &CatRef, limit: SearchLimit) -> Result<CounterexampleReport> {
    let t = TruncatedDeltaEmpty::new(depth)?;
    if a_star.num_objects() == 0 {
        return Err(Error::Unsupported("A_* must be non-empty".into()));
    }
    let base = free("1+1", &["∗", "•"], &[])?;
    let (a, ia, _) = coproduct("A", a_star, a_dot)?;
    let ns = a_star.num_objects();
    let obj = a.objects().map(|x| usize::from(x >= ns)).collect();
    let arr = a.arrows().map(|u| usize::from(a.dom(u) >= ns)).collect();
    let g = Functor::new(a.clone(), base.clone(), obj, arr)?.named("g");
    let h = Transferred::new(t, limit);
    let fg = h.factor(&g)?;
    let cone = &fg.data;
    // h_*: T(A_*) -> Kg, mediating T(i_*) and the constant at *
    let p = t.map(&ia)?;
    let tas = p.source().clone();
    let c = Functor::constant(&tas, &base, 0);
    let thetas = enumerate_nat_trans(&cone.f.after(&p)?, &cone.g.after(&c)?, limit)?;
    if thetas.len() != 1 {
        return Err(Error::WitnessNotFound(format!("{} comparison cells", thetas.len())));
    }
    let hs = cone.mediate(&p, &c, &thetas[0])?;
    let k = &fg.middle;
    let fibre: Vec<usize> = k.objects().filter(|&y| fg.right.obj(y) == 0).collect();
    let image: Vec<usize> = tas.objects().map(|x| hs.obj(x)).collect();
    let missed: Vec<usize> = fibre.iter().copied().filter(|y| !image.contains(y)).collect();
    let ta = t.apply(&a)?;
    let well_formed = missed.iter().all(|&y| {
        let x = q(&fg).obj(y);
        let (src, level) = (x % a.num_objects(), x / a.num_objects());
        src >= ns && level >= 1 && ta.num_objects() > x
    });
    let names = |v: &[usize]| v.iter().map(|&y| k.object_name(y).to_string()).collect::<Vec<_>>();
    Ok(CounterexampleReport {
        depth,
        truncated_at: depth,
        surjective: missed.is_empty(),
        fibre: names(&fibre),
        image: names(&image),
        witnesses: names(&missed),
        witnesses_well_formed: well_formed,
    })
}
