//! Lax idempotence: the coretract and retract adjunctions that make a
//! comonad, a monad or a monad algebra KZ, and lax orthogonality structures
//! on a pair of functors.

use crate::awfs::{canonical_filler, cofree_coalgebra, free_algebra, AlgOf, Algebra, FactorizationSystem};
use crate::error::{Error, Result};
use crate::fincat::{
    counits_for_identity_unit, enumerate_nat_trans, search_nat_trans, units_for_identity_counit, verify_adjunction, Adjunction, Cat,
    CatRef, Functor, NatTrans, TwoCategory,
};
use crate::lifting::{self, check_kz_filler, kz_filler_choice, kz_uniqueness_iso, Square};
use crate::report::CheckReport;
use crate::simple::CatMonad;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjunctionKind {
    /// Identity unit.
    Coretract,
    /// Identity counit.
    Retract,
}

#[derive(Clone, Debug)]
pub struct KzWitness {
    pub subject: String,
    pub kind: AdjunctionKind,
    pub adjunction: Adjunction,
    pub modification: Option<NatTrans>,
}

impl KzWitness {
    /// Re-checks the triangle identities and the flagged identity cell.
    pub fn verify(&self) -> bool {
        let r = verify_adjunction(&self.adjunction);
        match self.kind {
            AdjunctionKind::Coretract => r.is_coretract(),
            AdjunctionKind::Retract => r.is_retract(),
        }
    }
}

fn at_most_one<T>(mut v: Vec<T>, what: &str, subject: &str) -> Result<Option<T>> {
    match v.len() {
        0 | 1 => Ok(v.pop()),
        n => Err(Error::NotUnique(format!("{n} {what} for {subject}"))),
    }
}

fn identity_cell_on(f: &Functor) -> NatTrans {
    NatTrans::identity(f)
}

/// The coretract adjunction `sigma_f -| K(1, Rf)` whose counit also
/// restricts to the identity along `L(Lf)`.
pub fn check_comonad_kz_at<S>(s: &S, f: &Functor) -> Result<Option<KzWitness>>
where
    S: FactorizationSystem<Base = Cat>,
{
    let b = s.base();
    let ff = s.factor(f)?;
    let flf = s.factor(&ff.left)?;
    let sigma = s.comultiplication(&ff, &flf)?;
    let k1r = s.on_square(&flf, &ff, &Functor::identity(f.source()), &ff.right)?;
    let mut eps = Vec::new();
    for e in counits_for_identity_unit(&sigma, &k1r, b.limit)? {
        if e.whisker_right(&flf.left)?.is_identity() {
            eps.push(e);
        }
    }
    let subject = format!("{} at {}", s.name(), f.display_name());
    let Some(counit) = at_most_one(eps, "comonad KZ counits", &subject)? else {
        return Ok(None);
    };
    let unit = identity_cell_on(&k1r.after(&sigma)?);
    Ok(Some(KzWitness {
        subject,
        kind: AdjunctionKind::Coretract,
        adjunction: Adjunction {
            left: sigma,
            right: k1r,
            unit,
            counit,
        },
        modification: None,
    }))
}

/// The retract adjunction `p -| Lg` of an algebra whose unit also
/// restricts to the identity along `Rg`.
pub fn check_monad_kz_at<S>(s: &S, alg: &AlgOf<S>) -> Result<Option<KzWitness>>
where
    S: FactorizationSystem<Base = Cat>,
{
    let b = s.base();
    let (p, lg, rg) = (&alg.p, &alg.fac.left, &alg.fac.right);
    let mut etas = Vec::new();
    for eta in units_for_identity_counit(p, lg, b.limit)? {
        if eta.whisker_left(rg)?.is_identity() {
            etas.push(eta);
        }
    }
    let subject = format!("{} at algebra on {}", s.name(), alg.fac.f.display_name());
    let Some(unit) = at_most_one(etas, "monad KZ units", &subject)? else {
        return Ok(None);
    };
    let counit = identity_cell_on(&p.after(lg)?);
    Ok(Some(KzWitness {
        subject,
        kind: AdjunctionKind::Retract,
        adjunction: Adjunction {
            left: p.clone(),
            right: lg.clone(),
            unit,
            counit,
        },
        modification: None,
    }))
}

/// [`check_monad_kz_at`] at the free algebra `(Rf, pi_f)`.
pub fn check_monad_kz_free<S>(s: &S, f: &Functor) -> Result<Option<KzWitness>>
where
    S: FactorizationSystem<Base = Cat>,
{
    check_monad_kz_at(s, &free_algebra(s, f)?)
}

/// The retract adjunction `a -| i_A` for an algebra `a: TA -> A`.
pub fn check_algebra_kz(t: &dyn CatMonad, a: &CatRef, alg: &Functor, limit: crate::fincat::SearchLimit) -> Result<Option<KzWitness>> {
    let i = t.unit(a)?;
    let subject = format!("{} algebra {} on {}", t.name(), alg.display_name(), a.name());
    let etas = units_for_identity_counit(alg, &i, limit)?;
    let Some(unit) = at_most_one(etas, "algebra KZ units", &subject)? else {
        return Ok(None);
    };
    let counit = identity_cell_on(&alg.after(&i)?);
    Ok(Some(KzWitness {
        subject,
        kind: AdjunctionKind::Retract,
        adjunction: Adjunction {
            left: alg.clone(),
            right: i,
            unit,
            counit,
        },
        modification: None,
    }))
}

/// The monad-level KZ data at `A`: `T i_A -| m_A` with identity unit,
/// `m_A -| i_TA` with identity counit, and the cell `delta: T i_A => i_TA`
/// with `delta . i_A = 1` and `m_A . delta = 1`. Each is unique.
pub fn check_monad_kz_conditions(t: &dyn CatMonad, a: &CatRef, limit: crate::fincat::SearchLimit) -> Result<(CheckReport, Option<KzWitness>)> {
    let mut r = CheckReport::new();
    let subj = format!("{} at {}", t.name(), a.name());
    let ia = t.unit(a)?;
    let ta = t.apply(a)?;
    let tia = t.map(&ia)?;
    let ita = t.unit(&ta)?;
    let m = t.mult(a)?;

    let counits = counits_for_identity_unit(&tia, &m, limit)?;
    r.record("T i -| m with identity unit", &subj, counits.len() == 1, || format!("{} counits", counits.len()));
    let units = units_for_identity_counit(&m, &ita, limit)?;
    r.record("m -| i T with identity counit", &subj, units.len() == 1, || format!("{} units", units.len()));

    let mut deltas = Vec::new();
    let pinned: Vec<Option<usize>> = {
        let mut v = vec![None; ta.num_objects()];
        for x in a.objects() {
            v[ia.obj(x)] = Some(tia.target().identity(tia.obj(ia.obj(x))));
        }
        v
    };
    search_nat_trans(
        &tia,
        &ita,
        limit,
        |x, u| pinned[x].map_or(true, |id| id == u) && m.arr(u) == ta.identity(x),
        |d| {
            deltas.push(d);
            true
        },
    )?;
    r.record("modification T i => i T", &subj, deltas.len() == 1, || format!("{} candidates", deltas.len()));
    if !r.all_pass() {
        return Ok((r, None));
    }
    let counit = counits.into_iter().next().unwrap();
    let unit = identity_cell_on(&m.after(&tia)?);
    let w = KzWitness {
        subject: subj,
        kind: AdjunctionKind::Coretract,
        adjunction: Adjunction {
            left: tia,
            right: m,
            unit,
            counit,
        },
        modification: deltas.pop(),
    };
    Ok((r, Some(w)))
}

/// How much of the corpus the filler comparison in
/// [`check_awfs_lax_orthogonal`] visits.
#[derive(Clone, Copy, Debug)]
pub struct FillerCaps {
    /// Ordered pairs `(f, g)` of corpus functors.
    pub pairs: usize,
    /// Squares from `Lf` to `Rg` per pair.
    pub squares: usize,
}

impl Default for FillerCaps {
    fn default() -> Self {
        FillerCaps { pairs: 400, squares: 6 }
    }
}

/// Comonad and monad KZ at every corpus functor, then for squares from
/// cofree coalgebras to free algebras: the canonical filler is a KZ filler
/// and agrees with the first KZ filler up to the comparison iso.
pub fn check_awfs_lax_orthogonal<S>(s: &S, corpus: &[Functor], caps: FillerCaps) -> Result<CheckReport>
where
    S: FactorizationSystem<Base = Cat>,
{
    let b = s.base();
    let mut r = CheckReport::new();
    for f in corpus {
        let subj = f.display_name();
        let w = check_comonad_kz_at(s, f)?;
        r.record("comonad is KZ", &subj, w.as_ref().is_some_and(KzWitness::verify), || "no counit".into());
        let w = check_monad_kz_free(s, f)?;
        r.record("monad is KZ", &subj, w.as_ref().is_some_and(KzWitness::verify), || "no unit".into());
    }
    let mut pairs = 0;
    'outer: for f in corpus {
        let cof = cofree_coalgebra(s, f)?;
        for g in corpus {
            if pairs == caps.pairs {
                break 'outer;
            }
            pairs += 1;
            let alg = free_algebra(s, g)?;
            let subj = format!("L({}) vs R({})", f.display_name(), g.display_name());
            for sq in lifting::squares(b, &cof.fac.f, &alg.fac.f)?.into_iter().take(caps.squares) {
                let d = canonical_filler(s, &cof, &alg, &sq.h, &sq.k)?;
                let kz = check_kz_filler(b, &sq, &d)?;
                r.record("canonical filler is KZ", &subj, kz.is_kz, || kz.failure.clone().unwrap_or_default());
                let agrees = match kz_filler_choice(b, &sq)? {
                    Some(c) => kz_uniqueness_iso(b, &sq, &d, &c).is_ok(),
                    None => false,
                };
                r.record("canonical filler matches the chosen KZ filler", &subj, agrees, || "no comparison iso".into());
            }
        }
    }
    Ok(r)
}

/// Over a corpus, monad KZ everywhere must imply comonad KZ everywhere.
/// Returns `(monad KZ everywhere, comonad KZ everywhere)`.
pub fn kz_instance_law<S>(s: &S, corpus: &[Functor]) -> Result<(bool, bool)>
where
    S: FactorizationSystem<Base = Cat>,
{
    let mut monad = true;
    let mut comonad = true;
    for f in corpus {
        monad &= check_monad_kz_free(s, f)?.is_some();
        comonad &= check_comonad_kz_at(s, f)?.is_some();
    }
    Ok((monad, comonad))
}

/// A chosen filler `D(h, k)` for each square from `f` to `g`, and for each
/// filler `e` of that square a cell `theta(e): D(h, k) => e`.
///
/// `D` acts on a cell between squares by the unique cell between the chosen
/// fillers with that boundary, and on identity cells by identities.
#[derive(Clone, Debug)]
pub struct LaxOrthStructure {
    pub f: Functor,
    pub g: Functor,
    pub squares: Vec<Square<Functor>>,
    pub section: Vec<Functor>,
    pub theta: Vec<Vec<(Functor, NatTrans)>>,
}

impl LaxOrthStructure {
    pub fn square_index(&self, h: &Functor, k: &Functor) -> Option<usize> {
        self.squares.iter().position(|s| s.h == *h && s.k == *k)
    }

    pub fn theta_at(&self, i: usize, e: &Functor) -> Option<&NatTrans> {
        self.theta[i].iter().find(|(x, _)| x == e).map(|(_, t)| t)
    }

    /// `D(alpha, beta)` for a cell from square `i` to square `j`.
    pub fn on_cell(&self, base: &Cat, i: usize, j: usize, alpha: &NatTrans, beta: &NatTrans) -> Result<NatTrans> {
        if i == j && alpha.is_identity() && beta.is_identity() {
            return Ok(NatTrans::identity(&self.section[i]));
        }
        let mut cells = base.cells_with(&self.section[i], &self.section[j], &self.f, &self.g, alpha, beta)?;
        if cells.len() != 1 {
            return Err(Error::NotUnique(format!("{} cells between chosen fillers {i} and {j}", cells.len())));
        }
        Ok(cells.pop().unwrap())
    }
}

/// A cell `eps: e => ebar` between fillers of squares `from` and `to`.
#[derive(Clone, Debug)]
pub struct CellProbe {
    pub from: usize,
    pub e: Functor,
    pub to: usize,
    pub ebar: Functor,
    pub eps: NatTrans,
}

/// Squares `alpha = (a0, a1): f' -> f` and `beta = (b0, b1): g -> g'`
/// into the structure `target` on `(f', g')`.
#[derive(Clone, Debug)]
pub struct ModificationProbe<'a> {
    pub target: &'a LaxOrthStructure,
    pub alpha: (Functor, Functor),
    pub beta: (Functor, Functor),
}

#[derive(Clone, Debug, Default)]
pub struct Probes<'a> {
    pub cells: Vec<CellProbe>,
    pub morphisms: Vec<ModificationProbe<'a>>,
}

/// Every cell between fillers of the structure's squares.
pub fn all_cell_probes(st: &LaxOrthStructure, base: &Cat) -> Result<Vec<CellProbe>> {
    let mut out = Vec::new();
    for (i, ti) in st.theta.iter().enumerate() {
        for (j, tj) in st.theta.iter().enumerate() {
            for (e, _) in ti {
                for (ebar, _) in tj {
                    for eps in enumerate_nat_trans(e, ebar, base.limit)? {
                        out.push(CellProbe {
                            from: i,
                            e: e.clone(),
                            to: j,
                            ebar: ebar.clone(),
                            eps,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks that the section picks fillers, that every filler has a `theta`
/// with `g . theta = 1` and `theta . f = 1`, naturality of `theta` at each
/// cell probe and the modification condition at each morphism probe.
pub fn validate_lax_orth_structure(st: &LaxOrthStructure, base: &Cat, probes: &Probes) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    for (i, sq) in st.squares.iter().enumerate() {
        let subj = format!("square {i}");
        let d = &st.section[i];
        r.record("section is a filler", &subj, lifting::is_filler(base, sq, d)?, || base.describe(d));
        let fillers = lifting::all_fillers(base, sq)?;
        let covered = fillers.iter().all(|e| st.theta_at(i, e).is_some()) && st.theta[i].len() == fillers.len();
        r.record("theta defined on every filler", &subj, covered, || format!("{} fillers, {} cells", fillers.len(), st.theta[i].len()));
        for (e, th) in &st.theta[i] {
            let typed = th.source() == d && th.target() == e;
            let ok = typed && th.whisker_left(&st.g)?.is_identity() && th.whisker_right(&st.f)?.is_identity();
            r.record("g . theta = 1 and theta . f = 1", &subj, ok, || format!("at filler {}", base.describe(e)));
        }
    }
    for (n, p) in probes.cells.iter().enumerate() {
        let subj = format!("cell probe {n}");
        let (Some(t_e), Some(t_ebar)) = (st.theta_at(p.from, &p.e), st.theta_at(p.to, &p.ebar)) else {
            r.fail("naturality of theta", &subj, "probe filler outside the structure");
            continue;
        };
        let alpha = p.eps.whisker_right(&st.f)?;
        let beta = p.eps.whisker_left(&st.g)?;
        match st.on_cell(base, p.from, p.to, &alpha, &beta) {
            Ok(dcell) => {
                let lhs = dcell.then(t_ebar)?;
                let rhs = t_e.then(&p.eps)?;
                r.record("naturality of theta", &subj, lhs == rhs, || format!("{lhs:?} vs {rhs:?}"));
            }
            Err(e) => r.fail("naturality of theta", &subj, e.to_string()),
        }
    }
    for (n, m) in probes.morphisms.iter().enumerate() {
        let subj = format!("morphism probe {n}");
        let (a0, a1) = &m.alpha;
        let (b0, b1) = &m.beta;
        for (i, sq) in st.squares.iter().enumerate() {
            let h2 = b0.after(&sq.h)?.after(a0)?;
            let k2 = b1.after(&sq.k)?.after(a1)?;
            let Some(j) = m.target.square_index(&h2, &k2) else {
                r.fail("theta is a modification", &subj, "translated square missing from the target");
                continue;
            };
            for (e, th) in &st.theta[i] {
                let e2 = b0.after(e)?.after(a1)?;
                let lhs = th.whisker_right(a1)?.whisker_left(b0)?;
                let ok = m.target.theta_at(j, &e2).is_some_and(|rhs| *rhs == lhs);
                r.record("theta is a modification", &subj, ok, || format!("square {i}, filler {}", base.describe(e)));
            }
        }
    }
    Ok(r)
}

/// The structure whose section is `choose` and whose `theta(e)` is the
/// unique cell `D(h, k) => e` restricting to identities along `f` and `g`.
pub fn extract_lax_orth_structure<C>(base: &Cat, f: &Functor, g: &Functor, mut choose: C) -> Result<LaxOrthStructure>
where
    C: FnMut(&Square<Functor>) -> Result<Functor>,
{
    let squares = lifting::squares(base, f, g)?;
    let mut section = Vec::with_capacity(squares.len());
    let mut theta = Vec::with_capacity(squares.len());
    for sq in &squares {
        let d = choose(sq)?;
        let (ih, ik) = (NatTrans::identity(&sq.h), NatTrans::identity(&sq.k));
        let mut row = Vec::new();
        for e in lifting::all_fillers(base, sq)? {
            let mut cells = base.cells_with(&d, &e, f, g, &ih, &ik)?;
            if cells.len() != 1 {
                return Err(Error::WitnessNotFound(format!("{} cells from the chosen filler to {}", cells.len(), base.describe(&e))));
            }
            row.push((e, cells.pop().unwrap()));
        }
        section.push(d);
        theta.push(row);
    }
    Ok(LaxOrthStructure {
        f: f.clone(),
        g: g.clone(),
        squares,
        section,
        theta,
    })
}

/// The structure on `(Lf, Rg)` given by canonical fillers of the cofree
/// coalgebra and the free algebra.
pub fn awfs_lax_orth_structure<S>(s: &S, f: &Functor, g: &Functor) -> Result<LaxOrthStructure>
where
    S: FactorizationSystem<Base = Cat>,
{
    let cof = cofree_coalgebra(s, f)?;
    let alg = free_algebra(s, g)?;
    extract_lax_orth_structure(s.base(), &cof.fac.f, &alg.fac.f, |sq| canonical_filler(s, &cof, &alg, &sq.h, &sq.k))
}

/// Whether `d: Kg -> dom g` satisfies `d o Lg = 1` and `g o d = Rg`.
pub fn pitchfork_kz_object_check<S>(s: &S, g: &Functor, d: &Functor) -> Result<bool>
where
    S: FactorizationSystem<Base = Cat>,
{
    let fg = s.factor(g)?;
    if d.source() != &fg.middle || d.target() != g.source() {
        return Ok(false);
    }
    Ok(d.after(&fg.left)?.is_identity() && g.after(d)? == fg.right)
}

/// For `d` passing [`pitchfork_kz_object_check`], the unit of the retract
/// adjunction `d -| Lg` over the codomain, when there is one.
pub fn pitchfork_retract_unit<S>(s: &S, g: &Functor, d: &Functor) -> Result<Option<NatTrans>>
where
    S: FactorizationSystem<Base = Cat>,
{
    if !pitchfork_kz_object_check(s, g, d)? {
        return Ok(None);
    }
    let alg = Algebra {
        fac: s.factor(g)?,
        p: d.clone(),
    };
    Ok(check_monad_kz_at(s, &alg)?.map(|w| w.adjunction.unit))
}
