//! The factorisation of a functor `f: A -> B` through the comma category
//! `f / B`, whose coalgebras are left-adjoint right inverses and whose
//! algebras are split opfibrations.

use std::sync::Arc;

use crate::awfs::{
    search_algebras, search_coalgebras, validate_algebra, validate_coalgebra, AlgOf, Algebra, CoalgOf, Coalgebra, Fac,
    Factorization, FactorizationSystem,
};
use crate::error::{Error, Result};
use crate::fincat::{
    all_right_adjoint_coretracts, comma, compose_adjunctions, verify_adjunction, Adjunction, ArrId, Cat,
    CatRef, CommaCone, Functor, NatTrans, ObjId, SearchLimit,
};

#[derive(Clone, Debug, Default)]
pub struct Coropf {
    pub base: Cat,
}

impl Coropf {
    pub fn new(limit: SearchLimit) -> Self {
        Coropf { base: Cat::new(limit) }
    }

    fn limit(&self) -> SearchLimit {
        self.base.limit
    }
}

pub type CoropfFac = Fac<Coropf>;

/// `q_f: Kf -> A`.
pub fn q(ff: &CoropfFac) -> &Functor {
    &ff.data.proj_left
}

/// `nu_f: f o q_f => Rf`.
pub fn nu(ff: &CoropfFac) -> &NatTrans {
    &ff.data.cell
}

impl FactorizationSystem for Coropf {
    type Base = Cat;
    type Data = Arc<CommaCone>;

    fn name(&self) -> String {
        "coropf".into()
    }

    fn base(&self) -> &Cat {
        &self.base
    }

    fn factor(&self, f: &Functor) -> Result<CoropfFac> {
        let cone = comma(f, &Functor::identity(f.target()))?;
        let left = cone
            .mediate(&Functor::identity(f.source()), f, &NatTrans::identity(f))?
            .named(format!("L({})", f.display_name()));
        let right = cone.proj_right.clone().named(format!("R({})", f.display_name()));
        Ok(Factorization::new(f.clone(), left, cone.apex.clone(), right, Arc::new(cone)))
    }

    fn on_square(&self, ff: &CoropfFac, fg: &CoropfFac, h: &Functor, k: &Functor) -> Result<Functor> {
        let p = h.after(q(ff))?;
        let r = k.after(&ff.right)?;
        let theta = nu(ff).whisker_left(k)?;
        fg.data.mediate(&p, &r, &theta)
    }

    fn on_cell(&self, ff: &CoropfFac, fg: &CoropfFac, alpha: &NatTrans, beta: &NatTrans) -> Result<NatTrans> {
        let m1 = self.on_square(ff, fg, alpha.source(), beta.source())?;
        let m2 = self.on_square(ff, fg, alpha.target(), beta.target())?;
        fg.data.mediate_cell(&m1, &m2, &alpha.whisker_right(q(ff))?, &beta.whisker_right(&ff.right)?)
    }

    fn comultiplication(&self, ff: &CoropfFac, flf: &CoropfFac) -> Result<Functor> {
        let omega = counit_of_left(ff)?;
        flf.data
            .mediate(q(ff), &Functor::identity(&ff.middle), &omega)
            .map(|s| s.named(format!("sigma({})", ff.f.display_name())))
    }

    fn multiplication(&self, ff: &CoropfFac, frf: &CoropfFac) -> Result<Functor> {
        let p = q(ff).after(q(frf))?;
        let theta = nu(ff).whisker_right(q(frf))?.then(nu(frf))?;
        let theta = NatTrans::new_unchecked(ff.f.after(&p)?, frf.right.clone(), theta.components().to_vec());
        ff.data
            .mediate(&p, &frf.right, &theta)
            .map(|s| s.named(format!("pi({})", ff.f.display_name())))
    }
}

/// The counit `omega: Lf o q_f => 1` of `Lf -| q_f`, determined by
/// `q_f . omega = 1` and `Rf . omega = nu_f`.
pub fn counit_of_left(ff: &CoropfFac) -> Result<NatTrans> {
    let lq = ff.left.after(q(ff))?;
    let id = Functor::identity(&ff.middle);
    let alpha = NatTrans::identity(q(ff));
    let alpha = NatTrans::new_unchecked(q(ff).after(&lq)?, q(ff).clone(), alpha.components().to_vec());
    let beta = NatTrans::new_unchecked(ff.right.after(&lq)?, ff.right.clone(), nu(ff).components().to_vec());
    ff.data.mediate_cell(&lq, &id, &alpha, &beta)
}

/// `Lf -| q_f` with identity unit.
pub fn left_adjunction(ff: &CoropfFac) -> Result<Adjunction> {
    Ok(Adjunction {
        left: ff.left.clone(),
        right: q(ff).clone(),
        unit: NatTrans::identity(&Functor::identity(ff.f.source())),
        counit: counit_of_left(ff)?,
    })
}

/// `s |-> (q_f o s, nu_f . s)`.
pub fn coalgebra_to_lari(c: &CoalgOf<Coropf>) -> Result<Adjunction> {
    let ff = &c.fac;
    let v = q(ff).after(&c.s)?;
    let xi = nu(ff).whisker_right(&c.s)?;
    let id_b = Functor::identity(ff.f.target());
    if xi.target() != &id_b {
        return Err(Error::CoalgebraInvalid("R o s is not the identity".into()));
    }
    let adj = Adjunction {
        left: ff.f.clone(),
        right: v.clone(),
        unit: NatTrans::identity(&Functor::identity(ff.f.source())),
        counit: NatTrans::new_unchecked(ff.f.after(&v)?, id_b, xi.components().to_vec()),
    };
    Ok(adj)
}

/// The coalgebra `s` with `q_f o s = v` and `nu_f . s = xi`.
pub fn lari_to_coalgebra(s: &Coropf, f: &Functor, adj: &Adjunction) -> Result<CoalgOf<Coropf>> {
    if adj.left != *f {
        return Err(Error::ShapeMismatch("adjunction is not on f".into()));
    }
    let rep = verify_adjunction(adj);
    if !rep.is_coretract() {
        return Err(Error::CoalgebraInvalid(
            rep.failure.unwrap_or_else(|| "unit is not the identity".into()),
        ));
    }
    let ff = s.factor(f)?;
    let id_b = Functor::identity(f.target());
    let theta = NatTrans::new_unchecked(f.after(&adj.right)?, id_b.clone(), adj.counit.components().to_vec());
    let sec = ff.data.mediate(&adj.right, &id_b, &theta)?;
    Ok(Coalgebra { fac: ff, s: sec })
}

/// Every coalgebra structure on `f`, in search order.
pub fn all_coalgebras(s: &Coropf, f: &Functor) -> Result<Vec<CoalgOf<Coropf>>> {
    search_coalgebras(s, f)
}

/// Every algebra structure on `f`, in search order.
pub fn all_algebras(s: &Coropf, f: &Functor) -> Result<Vec<AlgOf<Coropf>>> {
    search_algebras(s, f)
}

/// Whether `l: a -> a1` is cocartesian for `f`.
pub fn is_cocartesian(f: &Functor, l: ArrId) -> bool {
    let (a, b) = (f.source(), f.target());
    let (x, x1) = (a.dom(l), a.cod(l));
    let beta = f.arr(l);
    for z in a.objects() {
        for &g in a.hom(x, z) {
            for &w in b.hom(b.cod(beta), f.obj(z)) {
                if b.compose(w, beta) != f.arr(g) {
                    continue;
                }
                let n = a
                    .hom(x1, z)
                    .iter()
                    .filter(|&&m| a.compose(m, l) == g && f.arr(m) == w)
                    .count();
                if n != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// A split cleavage: one chosen cocartesian lift per object `(a|beta|b)` of
/// `f / B`, identities on identities and closed under composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cleavage {
    pub lifts: Vec<ArrId>,
}

/// Every split cleavage of `f`.
pub fn split_cleavages(ff: &CoropfFac, limit: SearchLimit) -> Result<Vec<Cleavage>> {
    let f = &ff.f;
    let (a, b) = (f.source(), f.target());
    let cone = &ff.data;
    let k = &ff.middle;
    let objs: Vec<(ObjId, ArrId, ObjId)> = k
        .objects()
        .map(|y| (cone.proj_left.obj(y), cone.cell.component(y), cone.proj_right.obj(y)))
        .collect();
    let candidates: Vec<Vec<ArrId>> = objs
        .iter()
        .map(|&(x, beta, _)| {
            if b.is_identity(beta) {
                vec![a.identity(x)]
            } else {
                a.outgoing(x).iter().copied().filter(|&l| f.arr(l) == beta && is_cocartesian(f, l)).collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut lifts = vec![0; objs.len()];
    let mut used = 0u64;
    // splitting constraint: lift(a, b2 o b1) = lift(cod lift(a, b1), b2) o lift(a, b1)
    fn go(
        i: usize,
        objs: &[(ObjId, ArrId, ObjId)],
        cand: &[Vec<ArrId>],
        lifts: &mut Vec<ArrId>,
        out: &mut Vec<Cleavage>,
        ff: &CoropfFac,
        used: &mut u64,
        limit: u64,
    ) -> Result<()> {
        if i == objs.len() {
            if split_ok(objs, lifts, ff, objs.len()) {
                out.push(Cleavage { lifts: lifts.clone() });
            }
            return Ok(());
        }
        for &l in &cand[i] {
            *used += 1;
            if *used > limit {
                return Err(Error::SizeLimitExceeded(limit));
            }
            lifts[i] = l;
            if split_ok(objs, lifts, ff, i + 1) {
                go(i + 1, objs, cand, lifts, out, ff, used, limit)?;
            }
        }
        Ok(())
    }
    go(0, &objs, &candidates, &mut lifts, &mut out, ff, &mut used, limit.0)?;
    Ok(out)
}

fn split_ok(objs: &[(ObjId, ArrId, ObjId)], lifts: &[ArrId], ff: &CoropfFac, assigned: usize) -> bool {
    let f = &ff.f;
    let (a, b) = (f.source(), f.target());
    let cone = &ff.data;
    for i in 0..assigned {
        let (x, beta1, b1) = objs[i];
        let l1 = lifts[i];
        let x1 = a.cod(l1);
        for &beta2 in b.outgoing(b1) {
            let j = match cone.object(x1, beta2, b.cod(beta2)) {
                Some(j) => j,
                None => return false,
            };
            let c = cone.object(x, b.compose(beta2, beta1), b.cod(beta2)).unwrap();
            if j < assigned && c < assigned && lifts[c] != a.compose(lifts[j], l1) {
                return false;
            }
        }
    }
    true
}

/// The algebra `p` induced by a split cleavage.
pub fn cleavage_to_algebra(s: &Coropf, ff: &CoropfFac, cl: &Cleavage) -> Result<AlgOf<Coropf>> {
    let f = &ff.f;
    let a = f.source();
    let k = &ff.middle;
    let obj_map: Vec<ObjId> = cl.lifts.iter().map(|&l| a.cod(l)).collect();
    let mut arr_map = Vec::with_capacity(k.num_arrows());
    for w in k.arrows() {
        let (y, y2) = (k.dom(w), k.cod(w));
        let u = ff.data.proj_left.arr(w);
        let v = ff.data.proj_right.arr(w);
        let target = a.compose(cl.lifts[y2], u);
        let m = a
            .hom(obj_map[y], obj_map[y2])
            .iter()
            .copied()
            .find(|&m| a.compose(m, cl.lifts[y]) == target && f.arr(m) == v)
            .ok_or_else(|| Error::AlgebraInvalid("cleavage lift is not cocartesian".into()))?;
        arr_map.push(m);
    }
    let p = Functor::new(k.clone(), a.clone(), obj_map, arr_map)?;
    let alg = Algebra { fac: ff.clone(), p };
    validate_algebra(s, &alg, true)?;
    Ok(alg)
}

/// The algebra structure on `f` as a split opfibration, if one exists. The
/// cleavage route and the direct search must produce the same set of
/// structures; the first cleavage-induced one is returned.
pub fn split_opfib_structure(s: &Coropf, f: &Functor) -> Result<Option<AlgOf<Coropf>>> {
    let ff = s.factor(f)?;
    let via_search = all_algebras(s, f)?;
    let mut via_cleavage = Vec::new();
    for cl in split_cleavages(&ff, s.limit())? {
        via_cleavage.push(cleavage_to_algebra(s, &ff, &cl)?);
    }
    let same = via_search.len() == via_cleavage.len() && via_cleavage.iter().all(|c| via_search.iter().any(|a| a.p == c.p));
    if !same {
        return Err(Error::AlgebraInvalid(format!(
            "cleavages and algebras disagree on {} ({} vs {})",
            f.display_name(),
            via_cleavage.len(),
            via_search.len()
        )));
    }
    Ok(via_cleavage.into_iter().next())
}

/// Transports a coalgebra on `f` along a retraction `(r0, r1): f -> g` with
/// section `(s0, s1): g -> f`, as `K(r0, r1) o s o s1`; the result agrees
/// with transporting the adjoint `(r0 o v o s1, r1 . xi . s1)`.
pub fn retract_coalgebra(
    s: &Coropf,
    c: &CoalgOf<Coropf>,
    g: &Functor,
    retraction: (&Functor, &Functor),
    section: (&Functor, &Functor),
) -> Result<CoalgOf<Coropf>> {
    let f = &c.fac.f;
    let (r0, r1) = retraction;
    let (s0, s1) = section;
    let commutes = g.after(r0)? == r1.after(f)? && f.after(s0)? == s1.after(g)?;
    if !commutes || !r0.after(s0)?.is_identity() || !r1.after(s1)?.is_identity() {
        return Err(Error::NotARetraction(format!("{} is not a retract of {}", g.display_name(), f.display_name())));
    }
    let fg = s.factor(g)?;
    let k = s.on_square(&c.fac, &fg, r0, r1)?;
    let sec = k.after(&c.s)?.after(s1)?;
    let out = Coalgebra { fac: fg, s: sec };
    validate_coalgebra(s, &out, true)?;
    let adj = coalgebra_to_lari(c)?;
    let v = r0.after(&adj.right)?.after(s1)?;
    let xi = adj.counit.whisker_right(s1)?.whisker_left(r1)?;
    let xi = NatTrans::new_unchecked(g.after(&v)?, Functor::identity(g.target()), xi.components().to_vec());
    let moved = Adjunction {
        left: g.clone(),
        right: v,
        unit: NatTrans::identity(&Functor::identity(g.source())),
        counit: xi,
    };
    let other = lari_to_coalgebra(s, g, &moved)?;
    if other.s != out.s {
        return Err(Error::CoalgebraInvalid("transported structures disagree".into()));
    }
    Ok(out)
}

/// The retract adjunction `p -| s` induced on a comma `l / t` by an
/// adjunction `l -| r`: `s` sends `x` to `(r t x | counit | x)`.
pub fn comma_retract_adjunction(cone: &CommaCone, adj: &Adjunction) -> Result<Adjunction> {
    let (l, t) = (&cone.f, &cone.g);
    if adj.left != *l {
        return Err(Error::ShapeMismatch("adjunction is not on the comma's left leg".into()));
    }
    let r = &adj.right;
    let rt = r.after(t)?;
    let theta = adj.counit.whisker_right(t)?;
    let theta = NatTrans::new_unchecked(l.after(&rt)?, t.clone(), theta.components().to_vec());
    let x = t.source();
    let sec = cone.mediate(&rt, &Functor::identity(x), &theta)?;
    let p = cone.proj_right.clone();
    let k = &cone.apex;
    let a = l.source();
    let sp = sec.after(&p)?;
    let comps: Vec<ArrId> = k
        .objects()
        .map(|y| {
            let beta = cone.cell.component(y);
            let ai = cone.proj_left.obj(y);
            a.compose(r.arr(beta), adj.unit.component(ai))
        })
        .collect();
    let alpha = NatTrans::new_unchecked(cone.proj_left.clone(), cone.proj_left.after(&sp)?, comps);
    let beta = NatTrans::identity(&p);
    let beta = NatTrans::new_unchecked(p.clone(), p.after(&sp)?, beta.components().to_vec());
    let unit = cone.mediate_cell(&Functor::identity(k), &sp, &alpha, &beta)?;
    let unit = NatTrans::new_unchecked(Functor::identity(k), sp, unit.components().to_vec());
    Ok(Adjunction {
        left: p,
        right: sec,
        unit,
        counit: NatTrans::identity(&Functor::identity(x)),
    })
}

/// The composite of the adjunctions `Lf -| q_f` and `L(Rf) -| q_{Rf}`, whose
/// right adjoint must equal `q_f o pi_f`.
pub fn check_multiplication_via_laris(s: &Coropf, f: &Functor) -> Result<bool> {
    let ff = s.factor(f)?;
    let frf = s.factor(&ff.right)?;
    let pi = s.multiplication(&ff, &frf)?;
    let comp = compose_adjunctions(&left_adjunction(&ff)?, &left_adjunction(&frf)?)?;
    if !verify_adjunction(&comp).is_coretract() {
        return Ok(false);
    }
    Ok(q(&ff).after(&pi)? == comp.right && pi.after(&comp.left)? == ff.left && ff.right.after(&pi)? == frf.right)
}

/// Number of coalgebra structures and of left-adjoint right inverses of `f`,
/// after checking that the two translations are mutually inverse.
pub fn coalgebra_lari_counts(s: &Coropf, f: &Functor) -> Result<(usize, usize)> {
    let coalgs = all_coalgebras(s, f)?;
    let laris = all_right_adjoint_coretracts(f, s.limit())?;
    for c in &coalgs {
        let adj = coalgebra_to_lari(c)?;
        if !verify_adjunction(&adj).is_coretract() {
            return Err(Error::CoalgebraInvalid("image is not a coretract adjunction".into()));
        }
        if lari_to_coalgebra(s, f, &adj)?.s != c.s {
            return Err(Error::CoalgebraInvalid("round trip through the adjoint fails".into()));
        }
    }
    for adj in &laris {
        let c = lari_to_coalgebra(s, f, adj)?;
        validate_coalgebra(s, &c, true)?;
        let back = coalgebra_to_lari(&c)?;
        if back.right != adj.right || back.counit.components() != adj.counit.components() {
            return Err(Error::CoalgebraInvalid("round trip through the coalgebra fails".into()));
        }
    }
    Ok((coalgs.len(), laris.len()))
}

/// The category `Kf` for display.
pub fn middle(ff: &CoropfFac) -> &CatRef {
    &ff.middle
}
