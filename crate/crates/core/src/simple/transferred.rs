//! The factorisation transferred from a 2-monad `T` on finite categories:
//! `Kf` is the comma of `T(f)` over the unit `i_B`.

use std::sync::Arc;

use crate::awfs::{search_algebras, search_coalgebras, validate_algebra, AlgOf, Fac, Factorization, FactorizationSystem};
use crate::coropf::is_cocartesian;
use crate::error::{Error, Result};
use crate::fincat::construct::terminal;
use crate::fincat::{
    all_right_adjoint_coretracts, comma, counits_for_identity_unit, find_isomorphism, pullback, verify_adjunction,
    Adjunction, ArrId, Cat, CatRef, CommaCone, Functor, NatTrans, ObjId, SearchLimit,
};
use crate::report::CheckReport;

use super::monad::{init_completion, CatMonad, InitCompletion};

#[derive(Clone, Debug, Default)]
pub struct Transferred<M> {
    pub monad: M,
    pub base: Cat,
}

impl<M: CatMonad> Transferred<M> {
    pub fn new(monad: M, limit: SearchLimit) -> Self {
        Transferred {
            monad,
            base: Cat::new(limit),
        }
    }

    /// All counits making `T(Lf) -| m_A o T(q_f)` a coretract adjunction.
    pub fn simplicity_witnesses(&self, ff: &TransFac<M>) -> Result<Vec<Adjunction>> {
        let t = &self.monad;
        let a = ff.f.source();
        let left = t.map(&ff.left)?;
        let right = t.mult(a)?.after(&t.map(q(ff))?)?;
        let counits = counits_for_identity_unit(&left, &right, self.base.limit)?;
        Ok(counits
            .into_iter()
            .map(|counit| Adjunction {
                left: left.clone(),
                right: right.clone(),
                unit: NatTrans::identity(&Functor::identity(left.source())),
                counit,
            })
            .collect())
    }
}

pub type TransFac<M> = Fac<Transferred<M>>;

pub fn q(ff: &Factorization<Cat, Arc<CommaCone>>) -> &Functor {
    &ff.data.proj_left
}

pub fn nu(ff: &Factorization<Cat, Arc<CommaCone>>) -> &NatTrans {
    &ff.data.cell
}

impl<M: CatMonad> FactorizationSystem for Transferred<M> {
    type Base = Cat;
    type Data = Arc<CommaCone>;

    fn name(&self) -> String {
        format!("transferred:{}", self.monad.name())
    }

    fn base(&self) -> &Cat {
        &self.base
    }

    fn factor(&self, f: &Functor) -> Result<TransFac<M>> {
        let t = &self.monad;
        let (a, b) = (f.source(), f.target());
        let cone = comma(&t.map(f)?, &t.unit(b)?)?;
        let ia = t.unit(a)?;
        let theta = NatTrans::identity(&t.map(f)?.after(&ia)?);
        let left = cone.mediate(&ia, f, &theta)?.named(format!("L({})", f.display_name()));
        let right = cone.proj_right.clone().named(format!("R({})", f.display_name()));
        Ok(Factorization::new(f.clone(), left, cone.apex.clone(), right, Arc::new(cone)))
    }

    fn on_square(&self, ff: &TransFac<M>, fg: &TransFac<M>, h: &Functor, k: &Functor) -> Result<Functor> {
        let p = self.monad.map(h)?.after(q(ff))?;
        let r = k.after(&ff.right)?;
        let theta = nu(ff).whisker_left(&self.monad.map(k)?)?;
        let theta = NatTrans::new_unchecked(fg.data.f.after(&p)?, fg.data.g.after(&r)?, theta.components().to_vec());
        fg.data.mediate(&p, &r, &theta)
    }

    fn on_cell(&self, ff: &TransFac<M>, fg: &TransFac<M>, alpha: &NatTrans, beta: &NatTrans) -> Result<NatTrans> {
        let m1 = self.on_square(ff, fg, alpha.source(), beta.source())?;
        let m2 = self.on_square(ff, fg, alpha.target(), beta.target())?;
        let ta = self.monad.map_cell(alpha)?.whisker_right(q(ff))?;
        fg.data.mediate_cell(&m1, &m2, &ta, &beta.whisker_right(&ff.right)?)
    }

    fn comultiplication(&self, ff: &TransFac<M>, flf: &TransFac<M>) -> Result<Functor> {
        let adj = self
            .simplicity_witnesses(ff)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::WitnessNotFound(format!("no simplicity witness at {}", ff.f.display_name())))?;
        let ik = self.monad.unit(&ff.middle)?;
        let theta = adj.counit.whisker_right(&ik)?;
        let theta = NatTrans::new_unchecked(flf.data.f.after(q(ff))?, ik.clone(), theta.components().to_vec());
        flf.data
            .mediate(q(ff), &Functor::identity(&ff.middle), &theta)
            .map(|s| s.named(format!("sigma({})", ff.f.display_name())))
    }

    fn multiplication(&self, ff: &TransFac<M>, frf: &TransFac<M>) -> Result<Functor> {
        let t = &self.monad;
        let (a, b) = (ff.f.source(), ff.f.target());
        let p = t.mult(a)?.after(&t.map(q(ff))?)?.after(q(frf))?;
        let first = t.map_cell(nu(ff))?.whisker_left(&t.mult(b)?)?.whisker_right(q(frf))?;
        let mid = t.map(&ff.right)?.after(q(frf))?;
        let first = NatTrans::new_unchecked(ff.data.f.after(&p)?, mid, first.components().to_vec());
        let theta = first.then(nu(frf))?;
        ff.data
            .mediate(&p, &frf.right, &theta)
            .map(|s| s.named(format!("pi({})", ff.f.display_name())))
    }
}

/// The coretract adjunction `T(Lf) -| m_A o T(q_f)`, if any, after
/// checking that it is unique and passes [`verify_adjunction`].
pub fn check_simplicity_witness<M: CatMonad>(h: &Transferred<M>, f: &Functor) -> Result<Option<Adjunction>> {
    let ff = h.factor(f)?;
    let mut ws = h.simplicity_witnesses(&ff)?;
    if ws.len() > 1 {
        return Err(Error::WitnessNotFound(format!("{} simplicity witnesses at {}", ws.len(), f.display_name())));
    }
    match ws.pop() {
        Some(adj) if verify_adjunction(&adj).is_coretract() => Ok(Some(adj)),
        Some(_) => Err(Error::WitnessNotFound("simplicity witness fails the triangle identities".into())),
        None => Ok(None),
    }
}

/// Right adjoints `r` of `T(f)` with identity unit that are maps of free
/// algebras (`r o m_B = m_A o T(r)`), with their counits.
pub fn f_embedding_check<M: CatMonad>(h: &Transferred<M>, f: &Functor) -> Result<Option<Adjunction>> {
    Ok(f_embeddings(h, f)?.into_iter().next())
}

pub fn f_embeddings<M: CatMonad>(h: &Transferred<M>, f: &Functor) -> Result<Vec<Adjunction>> {
    let t = &h.monad;
    let tf = t.map(f)?;
    let (ma, mb) = (t.mult(f.source())?, t.mult(f.target())?);
    let mut out = Vec::new();
    for adj in all_right_adjoint_coretracts(&tf, h.base.limit)? {
        if adj.right.after(&mb)? == ma.after(&t.map(&adj.right)?)? {
            out.push(adj);
        }
    }
    Ok(out)
}

/// Whether `f` carries a coalgebra structure exactly when it is an
/// embedding in the sense of [`f_embedding_check`].
pub fn coalgebras_match_embeddings<M: CatMonad>(h: &Transferred<M>, f: &Functor) -> Result<(usize, usize)> {
    Ok((search_coalgebras(h, f)?.len(), f_embeddings(h, f)?.len()))
}

/// The fibre of `r: K -> B` over `b`.
pub fn fibre(r: &Functor, b: ObjId) -> Result<CatRef> {
    let one = terminal();
    let pt = Functor::new_unchecked(one.clone(), r.target().clone(), vec![b], vec![r.target().identity(b)]);
    Ok(pullback(r, &pt)?.apex)
}

/// Checks that the fibre of `Rf` over every `b` is isomorphic to the
/// initial-object completion of `f / b`.
pub fn check_fibres(h: &Transferred<InitCompletion>, f: &Functor) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    let ff = h.factor(f)?;
    let b = f.target();
    let one = terminal();
    for y in b.objects() {
        let pt = Functor::new_unchecked(one.clone(), b.clone(), vec![y], vec![b.identity(y)]);
        let slice = comma(f, &pt)?.apex;
        let expected = init_completion(&slice);
        let got = fibre(&ff.right, y)?;
        let iso = find_isomorphism(&got, &expected, h.base.limit)?.is_some();
        r.record("fibre is T(f / b)", &format!("{} over {}", f.display_name(), b.object_name(y)), iso, || {
            format!("{} objects vs {}", got.num_objects(), expected.num_objects())
        });
    }
    Ok(r)
}

/// For `!: A -> 1`, the projection `q: K(!) -> T(A)` is an isomorphism
/// compatible with the units and multiplications.
pub fn check_terminal_case(h: &Transferred<InitCompletion>, a: &CatRef) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    let one = terminal();
    let bang = Functor::constant(a, &one, 0).named(format!("!{}", a.name()));
    let ff = h.factor(&bang)?;
    let subj = a.name().to_string();
    let t = &h.monad;
    r.record("q is an isomorphism", &subj, q(&ff).is_iso(), || "q is not invertible".into());
    r.record("q o L = i", &subj, q(&ff).after(&ff.left)? == t.unit(a)?, || "unit mismatch".into());
    let frf = h.factor(&ff.right)?;
    let pi = h.multiplication(&ff, &frf)?;
    let lhs = q(&ff).after(&pi)?;
    let rhs = t.mult(a)?.after(&t.map(q(&ff))?)?.after(q(&frf))?;
    r.record("q o pi = m o T(q) o q", &subj, lhs == rhs, || "multiplication mismatch".into());
    Ok(r)
}

/// A split opfibration with a chosen initial object in every fibre.
#[derive(Clone, Debug)]
pub struct OpfibBundle {
    pub g: Functor,
    /// The comma `g / D`, whose objects index the lifts.
    pub cone: Arc<CommaCone>,
    /// The chosen lift of each `(c | beta | d)`.
    pub lifts: Vec<ArrId>,
    /// The chosen initial object of each fibre.
    pub initials: Vec<ObjId>,
}

impl PartialEq for OpfibBundle {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.lifts == other.lifts && self.initials == other.initials
    }
}

fn is_initial_in_fibre(g: &Functor, x: ObjId) -> bool {
    let (c, d) = (g.source(), g.target());
    let y = g.obj(x);
    c.objects()
        .filter(|&z| g.obj(z) == y)
        .all(|z| c.hom(x, z).iter().filter(|&&m| g.arr(m) == d.identity(y)).count() == 1)
}

/// The bundle of an algebra for the transferred initial-object AWFS, with
/// verdicts for cocartesian lifts, splitting, fibrewise initiality and
/// strict preservation by pushforward.
pub fn ralg_to_opfib_colim(h: &Transferred<InitCompletion>, alg: &AlgOf<Transferred<InitCompletion>>) -> Result<(OpfibBundle, CheckReport)> {
    validate_algebra(h, alg, true)?;
    let g = &alg.fac.f;
    let (c, d) = (g.source(), g.target());
    let cone = Arc::new(comma(g, &Functor::identity(d))?);
    let kg = &alg.fac.data;
    let mut lifts = Vec::with_capacity(cone.apex.num_objects());
    for y in cone.apex.objects() {
        let (x, beta, t) = (cone.proj_left.obj(y), cone.cell.component(y), cone.proj_right.obj(y));
        let src = kg.object(x + 1, 1 + d.identity(g.obj(x)), g.obj(x)).unwrap();
        let dst = kg.object(x + 1, 1 + beta, t).unwrap();
        let w = kg.arrow(src, dst, 1 + c.identity(x), beta).unwrap();
        lifts.push(alg.p.arr(w));
    }
    let initials: Vec<ObjId> = d
        .objects()
        .map(|y| alg.p.obj(kg.object(0, InitCompletion::bang(d, y), y).unwrap()))
        .collect();
    let bundle = OpfibBundle {
        g: g.clone(),
        cone,
        lifts,
        initials,
    };
    let report = check_bundle(&bundle);
    Ok((bundle, report))
}

fn check_bundle(b: &OpfibBundle) -> CheckReport {
    let mut r = CheckReport::new();
    let g = &b.g;
    let (c, d) = (g.source(), g.target());
    let subj = g.display_name();
    let cone = &b.cone;
    let lift_of = |x: ObjId, beta: ArrId| b.lifts[cone.object(x, beta, d.cod(beta)).unwrap()];
    let mut ok = true;
    for y in cone.apex.objects() {
        let (x, beta) = (cone.proj_left.obj(y), cone.cell.component(y));
        let l = b.lifts[y];
        ok &= c.dom(l) == x && g.arr(l) == beta && is_cocartesian(g, l);
    }
    r.record("lifts are cocartesian", &subj, ok, || "a lift is not cocartesian over its arrow".into());
    let mut split = true;
    for x in c.objects() {
        split &= lift_of(x, d.identity(g.obj(x))) == c.identity(x);
        for &b1 in d.outgoing(g.obj(x)) {
            let l1 = lift_of(x, b1);
            for &b2 in d.outgoing(d.cod(b1)) {
                split &= lift_of(x, d.compose(b2, b1)) == c.compose(lift_of(c.cod(l1), b2), l1);
            }
        }
    }
    r.record("cleavage is split", &subj, split, || "lifts are not closed under composition".into());
    let init = d.objects().all(|y| g.obj(b.initials[y]) == y && is_initial_in_fibre(g, b.initials[y]));
    r.record("fibres have the chosen initial objects", &subj, init, || "a chosen object is not initial in its fibre".into());
    let kept = d
        .arrows()
        .all(|v| c.cod(lift_of(b.initials[d.dom(v)], v)) == b.initials[d.cod(v)]);
    r.record("pushforwards preserve the chosen initials", &subj, kept, || "a pushforward moves a chosen initial".into());
    r
}

/// The algebra of a valid bundle.
pub fn opfib_colim_to_ralg(h: &Transferred<InitCompletion>, bundle: &OpfibBundle) -> Result<AlgOf<Transferred<InitCompletion>>> {
    let rep = check_bundle(bundle);
    if let Some(f) = rep.first_failure() {
        return Err(Error::BundleInvalid(format!("{}: {}", f.check, f.detail.clone().unwrap_or_default())));
    }
    let g = &bundle.g;
    let (c, d) = (g.source(), g.target());
    let ff = h.factor(g)?;
    let kg = &ff.data;
    let k = &ff.middle;
    let cone = &bundle.cone;
    let lift_of = |x: ObjId, beta: ArrId| bundle.lifts[cone.object(x, beta, d.cod(beta)).unwrap()];
    let nd = d.num_arrows();
    let obj: Vec<ObjId> = k
        .objects()
        .map(|y| {
            let (x, xi, t) = (kg.proj_left.obj(y), kg.cell.component(y), kg.proj_right.obj(y));
            if x == 0 {
                bundle.initials[t]
            } else {
                debug_assert!(xi >= 1 && xi <= nd);
                c.cod(lift_of(x - 1, xi - 1))
            }
        })
        .collect();
    let mut arr = Vec::with_capacity(k.num_arrows());
    for w in k.arrows() {
        let (y1, y2) = (k.dom(w), k.cod(w));
        let (x1, x2) = (kg.proj_left.obj(y1), kg.proj_left.obj(y2));
        let v = kg.proj_right.arr(w);
        let cands: Vec<ArrId> = if x1 == 0 {
            c.hom(obj[y1], obj[y2]).iter().copied().filter(|&m| g.arr(m) == v).collect()
        } else {
            let u = kg.proj_left.arr(w) - 1;
            let (b1, b2) = (kg.cell.component(y1) - 1, kg.cell.component(y2) - 1);
            let (l1, l2) = (lift_of(x1 - 1, b1), lift_of(x2 - 1, b2));
            let target = c.compose(l2, u);
            c.hom(obj[y1], obj[y2])
                .iter()
                .copied()
                .filter(|&m| g.arr(m) == v && c.compose(m, l1) == target)
                .collect()
        };
        if cands.len() != 1 {
            return Err(Error::BundleInvalid(format!("{} candidate images for `{}`", cands.len(), k.arrow_name(w))));
        }
        arr.push(cands[0]);
    }
    let p = Functor::new(k.clone(), c.clone(), obj, arr)?;
    let alg = crate::awfs::Algebra { fac: ff, p };
    validate_algebra(h, &alg, true)?;
    Ok(alg)
}

/// Round trips between algebras on `g` and bundles, and per cleavage the
/// number of algebras against the number of fibrewise initial choices that
/// pushforwards preserve.
pub fn check_algebra_bundles(h: &Transferred<InitCompletion>, g: &Functor) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    let subj = g.display_name();
    let algs = search_algebras(h, g)?;
    let mut bundles: Vec<OpfibBundle> = Vec::new();
    for alg in &algs {
        let (b, rep) = ralg_to_opfib_colim(h, alg)?;
        r.extend(rep);
        let back = opfib_colim_to_ralg(h, &b)?;
        r.record("algebra round trip", &subj, back.p == alg.p, || "algebra changed".into());
        let (b2, _) = ralg_to_opfib_colim(h, &back)?;
        r.record("bundle round trip", &subj, b2 == b, || "bundle changed".into());
        bundles.push(b);
    }
    let mut seen: Vec<&Vec<ArrId>> = Vec::new();
    for b in &bundles {
        if seen.contains(&&b.lifts) {
            continue;
        }
        seen.push(&b.lifts);
        let n_alg = bundles.iter().filter(|o| o.lifts == b.lifts).count();
        let n_choice = preserved_initial_choices(b);
        r.record("chosen initials are determined by the algebra", &subj, n_alg == n_choice, || {
            format!("{n_alg} algebras vs {n_choice} preserved choices")
        });
    }
    Ok(r)
}

/// Number of choices of one initial object per fibre preserved by every
/// pushforward of the bundle's cleavage.
fn preserved_initial_choices(b: &OpfibBundle) -> usize {
    let g = &b.g;
    let (c, d) = (g.source(), g.target());
    let per_fibre: Vec<Vec<ObjId>> = d
        .objects()
        .map(|y| c.objects().filter(|&x| g.obj(x) == y && is_initial_in_fibre(g, x)).collect())
        .collect();
    let mut count = 0;
    let mut choice = vec![0; d.num_objects()];
    fn go(i: usize, per: &[Vec<ObjId>], choice: &mut Vec<ObjId>, b: &OpfibBundle, count: &mut usize) {
        let d = b.g.target();
        if i == per.len() {
            let c = b.g.source();
            let ok = d.arrows().all(|v| {
                let l = b.lifts[b.cone.object(choice[d.dom(v)], v, d.cod(v)).unwrap()];
                c.cod(l) == choice[d.cod(v)]
            });
            if ok {
                *count += 1;
            }
            return;
        }
        for &x in &per[i] {
            choice[i] = x;
            go(i + 1, per, choice, b, count);
        }
    }
    go(0, &per_fibre, &mut choice, b, &mut count);
    count
}
