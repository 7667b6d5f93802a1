//! Lifting problems, diagonal fillers and their orthogonality properties,
//! over any [`TwoCategory`] base.

use crate::error::{Error, Result};
use crate::fincat::TwoCategory;

/// A commuting square `g o h = k o f` from `f` to `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square<M> {
    pub f: M,
    pub g: M,
    pub h: M,
    pub k: M,
}

impl<M: Clone + PartialEq> Square<M> {
    pub fn new<B: TwoCategory<Mor = M>>(base: &B, f: M, g: M, h: M, k: M) -> Result<Self> {
        if base.compose(&g, &h)? != base.compose(&k, &f)? {
            return Err(Error::ShapeMismatch("square does not commute".into()));
        }
        Ok(Square { f, g, h, k })
    }
}

/// Every square from `f` to `g`.
pub fn squares<B: TwoCategory>(base: &B, f: &B::Mor, g: &B::Mor) -> Result<Vec<Square<B::Mor>>> {
    Ok(base
        .squares(f, g)?
        .into_iter()
        .map(|(h, k)| Square {
            f: f.clone(),
            g: g.clone(),
            h,
            k,
        })
        .collect())
}

pub fn is_filler<B: TwoCategory>(base: &B, sq: &Square<B::Mor>, d: &B::Mor) -> Result<bool> {
    Ok(base.compose(d, &sq.f)? == sq.h && base.compose(&sq.g, d)? == sq.k)
}

/// All diagonal fillers of the square, in search order.
pub fn all_fillers<B: TwoCategory>(base: &B, sq: &Square<B::Mor>) -> Result<Vec<B::Mor>> {
    base.fillers(&sq.f, &sq.g, &sq.h, &sq.k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub orthogonal: bool,
    pub squares: usize,
    pub failure: Option<String>,
}

/// Every square from `f` to `g` has exactly one filler, and every cell
/// between squares lifts to exactly one cell between the fillers.
pub fn is_orthogonal<B: TwoCategory>(base: &B, f: &B::Mor, g: &B::Mor) -> Result<OrthogonalityReport> {
    let sqs = squares(base, f, g)?;
    let mut fillers = Vec::with_capacity(sqs.len());
    for sq in &sqs {
        let ds = all_fillers(base, sq)?;
        if ds.len() != 1 {
            return Ok(OrthogonalityReport {
                orthogonal: false,
                squares: sqs.len(),
                failure: Some(format!(
                    "square (h = {}, k = {}) has {} fillers",
                    base.describe(&sq.h),
                    base.describe(&sq.k),
                    ds.len()
                )),
            });
        }
        fillers.push(ds.into_iter().next().unwrap());
    }
    for (i, s1) in sqs.iter().enumerate() {
        for (j, s2) in sqs.iter().enumerate() {
            let pairs = base.square_cells(f, g, &(s1.h.clone(), s1.k.clone()), &(s2.h.clone(), s2.k.clone()))?;
            for (alpha, beta) in pairs {
                let n = base.cells_with(&fillers[i], &fillers[j], f, g, &alpha, &beta)?.len();
                if n != 1 {
                    return Ok(OrthogonalityReport {
                        orthogonal: false,
                        squares: sqs.len(),
                        failure: Some(format!("a cell between squares {i} and {j} has {n} lifts")),
                    });
                }
            }
        }
    }
    Ok(OrthogonalityReport {
        orthogonal: true,
        squares: sqs.len(),
        failure: None,
    })
}

/// Every square from `f` to `g` has at least one filler.
pub fn is_weakly_orthogonal<B: TwoCategory>(base: &B, f: &B::Mor, g: &B::Mor) -> Result<bool> {
    for sq in squares(base, f, g)? {
        if all_fillers(base, &sq)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KzReport {
    pub is_kz: bool,
    pub failure: Option<String>,
}

/// Whether `d` is a KZ filler: for every `d'` and every compatible pair
/// `alpha: h => d' f`, `beta: k => g d'`, there is exactly one cell
/// `gamma: d => d'` with `gamma . f = alpha` and `g . gamma = beta`.
pub fn check_kz_filler<B: TwoCategory>(base: &B, sq: &Square<B::Mor>, d: &B::Mor) -> Result<KzReport> {
    if !is_filler(base, sq, d)? {
        return Err(Error::ShapeMismatch(format!("{} is not a filler", base.describe(d))));
    }
    let (f, g) = (&sq.f, &sq.g);
    for e in base.kz_candidates(f, g, &sq.h, &sq.k)? {
        let ef = base.compose(&e, f)?;
        let ge = base.compose(g, &e)?;
        let alphas = base.cells(&sq.h, &ef)?;
        if alphas.is_empty() {
            continue;
        }
        let betas = base.cells(&sq.k, &ge)?;
        for alpha in &alphas {
            let ga = base.whisker_left(g, alpha)?;
            for beta in &betas {
                if base.whisker_right(beta, f)? != ga {
                    continue;
                }
                let n = base.cells_with(d, &e, f, g, alpha, beta)?.len();
                if n != 1 {
                    return Ok(KzReport {
                        is_kz: false,
                        failure: Some(format!("{} cells towards {}", n, base.describe(&e))),
                    });
                }
            }
        }
    }
    Ok(KzReport {
        is_kz: true,
        failure: None,
    })
}

/// The unique cell `d1 => d2` whiskering to identities on both sides, which
/// must be invertible when both are KZ fillers of the same square.
pub fn kz_uniqueness_iso<B: TwoCategory>(base: &B, sq: &Square<B::Mor>, d1: &B::Mor, d2: &B::Mor) -> Result<B::Cell> {
    let alpha = base.identity_cell(&sq.h);
    let beta = base.identity_cell(&sq.k);
    let mut cells = base.cells_with(d1, d2, &sq.f, &sq.g, &alpha, &beta)?;
    if cells.len() != 1 {
        return Err(Error::WitnessNotFound(format!("{} comparison cells between the fillers", cells.len())));
    }
    let c = cells.pop().unwrap();
    if !base.is_invertible_cell(&c) {
        return Err(Error::WitnessNotFound("comparison cell is not invertible".into()));
    }
    Ok(c)
}

/// The first KZ filler of the square in search order.
pub fn kz_filler_choice<B: TwoCategory>(base: &B, sq: &Square<B::Mor>) -> Result<Option<B::Mor>> {
    for d in all_fillers(base, sq)? {
        if check_kz_filler(base, sq, &d)?.is_kz {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// A KZ filler chosen for every square from `f` to `g`.
#[derive(Clone, Debug)]
pub struct LaxAssignment<M> {
    pub f: M,
    pub g: M,
    pub squares: Vec<Square<M>>,
    pub fillers: Vec<M>,
}

impl<M: PartialEq> LaxAssignment<M> {
    pub fn filler_for(&self, h: &M, k: &M) -> Option<&M> {
        self.squares.iter().position(|s| s.h == *h && s.k == *k).map(|i| &self.fillers[i])
    }
}

/// Chooses the first KZ filler of every square; `None` when some square has
/// none. The action on cells between squares is then forced by the KZ
/// property, see [`lax_cell_action`].
pub fn is_lax_orthogonal<B: TwoCategory>(base: &B, f: &B::Mor, g: &B::Mor) -> Result<Option<LaxAssignment<B::Mor>>> {
    let sqs = squares(base, f, g)?;
    let mut fillers = Vec::with_capacity(sqs.len());
    for sq in &sqs {
        match kz_filler_choice(base, sq)? {
            Some(d) => fillers.push(d),
            None => return Ok(None),
        }
    }
    Ok(Some(LaxAssignment {
        f: f.clone(),
        g: g.clone(),
        squares: sqs,
        fillers,
    }))
}

/// The cell between chosen fillers induced by a cell `(alpha, beta)` from
/// square `i` to square `j`.
pub fn lax_cell_action<B: TwoCategory>(
    base: &B,
    a: &LaxAssignment<B::Mor>,
    i: usize,
    j: usize,
    alpha: &B::Cell,
    beta: &B::Cell,
) -> Result<B::Cell> {
    let mut cells = base.cells_with(&a.fillers[i], &a.fillers[j], &a.f, &a.g, alpha, beta)?;
    if cells.len() != 1 {
        return Err(Error::WitnessNotFound(format!("{} induced cells", cells.len())));
    }
    Ok(cells.pop().unwrap())
}

/// A morphism between two members of a lifting family: a square
/// `(dom, cod)` from member `from` to member `to`.
#[derive(Clone, Debug)]
pub struct FamilyMorphism<M> {
    pub from: usize,
    pub to: usize,
    pub dom: M,
    pub cod: M,
}

#[derive(Clone, Debug)]
pub struct LiftingFamily<M> {
    pub members: Vec<M>,
    pub morphisms: Vec<FamilyMorphism<M>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PitchforkReport {
    pub member: bool,
    pub violation: Option<String>,
}

/// Whether `phi` (a filler for each member and each square into `g`) is a
/// lifting operation compatible with the family's morphisms:
/// `phi(a, h, k) o cod(m) = phi(a', h o dom(m), k o cod(m))` for `m: a' -> a`.
pub fn pitchfork_membership<B, P>(base: &B, family: &LiftingFamily<B::Mor>, g: &B::Mor, phi: P) -> Result<PitchforkReport>
where
    B: TwoCategory,
    P: Fn(usize, &B::Mor, &B::Mor) -> Result<B::Mor>,
{
    let mut per_member = Vec::new();
    for (i, u) in family.members.iter().enumerate() {
        let sqs = squares(base, u, g)?;
        for sq in &sqs {
            let d = phi(i, &sq.h, &sq.k)?;
            if !is_filler(base, sq, &d)? {
                return Ok(PitchforkReport {
                    member: false,
                    violation: Some(format!(
                        "member {i}: not a filler for (h = {}, k = {})",
                        base.describe(&sq.h),
                        base.describe(&sq.k)
                    )),
                });
            }
        }
        per_member.push(sqs);
    }
    for m in &family.morphisms {
        for sq in &per_member[m.to] {
            let lhs = base.compose(&phi(m.to, &sq.h, &sq.k)?, &m.cod)?;
            let h2 = base.compose(&sq.h, &m.dom)?;
            let k2 = base.compose(&sq.k, &m.cod)?;
            let rhs = phi(m.from, &h2, &k2)?;
            if lhs != rhs {
                return Ok(PitchforkReport {
                    member: false,
                    violation: Some(format!(
                        "morphism {} -> {}: incompatible at (h = {}, k = {})",
                        m.from,
                        m.to,
                        base.describe(&sq.h),
                        base.describe(&sq.k)
                    )),
                });
            }
        }
    }
    Ok(PitchforkReport {
        member: true,
        violation: None,
    })
}
