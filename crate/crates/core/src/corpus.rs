//! Small test categories and the functor corpus drawn from them.

use std::sync::Arc;

use crate::error::Result;
use crate::fincat::construct::{chain, discrete, empty, free, interval, poset, terminal};
use crate::fincat::{enumerate_functors, ArrowSig, CatRef, FinCategory, Functor, SearchLimit};

fn sig(name: &str, dom: usize, cod: usize) -> ArrowSig {
    ArrowSig {
        name: name.into(),
        dom,
        cod,
    }
}

/// One object with an idempotent `e`.
pub fn idempotent() -> CatRef {
    let c = FinCategory::from_parts("E", vec!["*".into()], vec![sig("id_*", 0, 0), sig("e", 0, 0)], vec![0], |g, f| {
        Some(if g == 0 { f } else if f == 0 { g } else { 1 })
    })
    .unwrap();
    Arc::new(c)
}

/// One object with an involution `t`.
pub fn involution() -> CatRef {
    let c = FinCategory::from_parts("Z2", vec!["*".into()], vec![sig("id_*", 0, 0), sig("t", 0, 0)], vec![0], |g, f| {
        Some(g ^ f)
    })
    .unwrap();
    Arc::new(c)
}

/// Two objects and an isomorphism `u: 0 -> 1` with inverse `v`.
pub fn walking_iso() -> CatRef {
    let arrows = vec![sig("id_0", 0, 0), sig("id_1", 1, 1), sig("u", 0, 1), sig("v", 1, 0)];
    let c = FinCategory::from_parts("Iso", vec!["0".into(), "1".into()], arrows, vec![0, 1], |g, f| match (g, f) {
        (0 | 1, f) => Some(f),
        (g, 0 | 1) => Some(g),
        (3, 2) => Some(0),
        (2, 3) => Some(1),
        _ => None,
    })
    .unwrap();
    Arc::new(c)
}

/// The test shapes: every listed category has at most 3 objects and at most
/// 6 arrows.
pub fn shapes() -> Vec<CatRef> {
    let span = free("V", &["o", "a", "b"], &[("l", "o", "a"), ("r", "o", "b")]).unwrap();
    let cospan = free("W", &["a", "b", "t"], &[("l", "a", "t"), ("r", "b", "t")]).unwrap();
    let parallel = free("P", &["0", "1"], &[("s", "0", "1"), ("t", "0", "1")]).unwrap();
    let two_plus_one = poset("2+1", 3, |i, j| i == j || (i == 0 && j == 1)).unwrap();
    vec![
        empty(),
        terminal(),
        interval(),
        discrete("1+1", 2),
        idempotent(),
        involution(),
        walking_iso(),
        two_plus_one,
        parallel,
        span,
        cospan,
        chain(3),
        discrete("1+1+1", 3),
    ]
}

/// Functors between the given shapes, taken round-robin over ordered pairs
/// (one functor per pair per round) until `cap` functors are collected.
pub fn functors_round_robin(shapes: &[CatRef], cap: usize, limit: SearchLimit) -> Result<Vec<Functor>> {
    let mut per_pair = Vec::new();
    for a in shapes {
        for b in shapes {
            per_pair.push(enumerate_functors(a, b, limit)?);
        }
    }
    let mut out = Vec::new();
    let longest = per_pair.iter().map(|v| v.len()).max().unwrap_or(0);
    'outer: for round in 0..longest {
        for fs in &per_pair {
            if let Some(f) = fs.get(round) {
                if out.len() == cap {
                    break 'outer;
                }
                let n = out.len();
                out.push(f.clone().named(format!("f{n}:{}->{}", f.source().name(), f.target().name())));
            }
        }
    }
    Ok(out)
}

/// The default corpus: 200 functors between the test shapes.
pub fn default_corpus(limit: SearchLimit) -> Result<Vec<Functor>> {
    functors_round_robin(&shapes(), 200, limit)
}

/// A smaller corpus for the search-heavy checks: shapes with at most 2
/// objects and 4 arrows.
pub fn small_corpus(cap: usize, limit: SearchLimit) -> Result<Vec<Functor>> {
    let small: Vec<CatRef> = shapes()
        .into_iter()
        .filter(|c| c.num_objects() <= 2 && c.num_arrows() <= 4)
        .collect();
    functors_round_robin(&small, cap, limit)
}

/// Categories with at most 3 objects from the shape list.
pub fn small_bases() -> Vec<CatRef> {
    shapes().into_iter().filter(|c| c.num_objects() <= 3).collect()
}
