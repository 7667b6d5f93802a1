use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::functor::Functor;
use super::nat::NatTrans;
use super::search::{search_functors, search_nat_trans, SearchLimit};

/// `left -| right` with `left: C -> D`, `right: D -> C`,
/// `unit: 1_C => right o left` and `counit: left o right => 1_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    pub left: Functor,
    pub right: Functor,
    pub unit: NatTrans,
    pub counit: NatTrans,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    pub well_typed: bool,
    pub unit_natural: bool,
    pub counit_natural: bool,
    pub left_triangle: bool,
    pub right_triangle: bool,
    pub unit_identity: bool,
    pub counit_identity: bool,
    pub failure: Option<String>,
}

impl AdjunctionReport {
    pub fn is_adjunction(&self) -> bool {
        self.well_typed && self.unit_natural && self.counit_natural && self.left_triangle && self.right_triangle
    }

    /// Adjunction with identity counit.
    pub fn is_retract(&self) -> bool {
        self.is_adjunction() && self.counit_identity
    }

    /// Adjunction with identity unit.
    pub fn is_coretract(&self) -> bool {
        self.is_adjunction() && self.unit_identity
    }
}

/// Checks typing, naturality of unit and counit, and both triangle identities.
pub fn verify_adjunction(adj: &Adjunction) -> AdjunctionReport {
    let mut r = AdjunctionReport::default();
    let (f, g) = (&adj.left, &adj.right);
    let typed = (|| -> Result<bool> {
        let gf = g.after(f)?;
        let fg = f.after(g)?;
        Ok(adj.unit.source() == &Functor::identity(f.source())
            && adj.unit.target() == &gf
            && adj.counit.source() == &fg
            && adj.counit.target() == &Functor::identity(f.target())
            && adj.unit.check_shape().is_ok()
            && adj.counit.check_shape().is_ok())
    })();
    r.well_typed = matches!(typed, Ok(true));
    if !r.well_typed {
        r.failure = Some("unit or counit has the wrong type".into());
        return r;
    }
    r.unit_natural = adj.unit.check_naturality().is_ok();
    r.counit_natural = adj.counit.check_naturality().is_ok();
    if !(r.unit_natural && r.counit_natural) {
        r.failure = Some("naturality precheck failed".into());
        return r;
    }
    let (c, d) = (f.source(), f.target());
    // (counit . F) o (F . unit) = 1_F
    r.left_triangle = c
        .objects()
        .all(|x| d.compose(adj.counit.component(f.obj(x)), f.arr(adj.unit.component(x))) == d.identity(f.obj(x)));
    // (G . counit) o (unit . G) = 1_G
    r.right_triangle = d
        .objects()
        .all(|y| c.compose(g.arr(adj.counit.component(y)), adj.unit.component(g.obj(y))) == c.identity(g.obj(y)));
    if !r.left_triangle {
        r.failure = Some("left triangle identity fails".into());
    } else if !r.right_triangle {
        r.failure = Some("right triangle identity fails".into());
    }
    r.unit_identity = adj.unit.is_identity();
    r.counit_identity = adj.counit.is_identity();
    r
}

/// Counits making `left -| right` an adjunction with identity unit. Requires
/// `right o left = 1`.
pub fn counits_for_identity_unit(left: &Functor, right: &Functor, limit: SearchLimit) -> Result<Vec<NatTrans>> {
    if !right.after(left)?.is_identity() {
        return Ok(Vec::new());
    }
    let d = left.target();
    let fg = left.after(right)?;
    let id = Functor::identity(d);
    let mut pinned = vec![None; d.num_objects()];
    for x in left.source().objects() {
        pinned[left.obj(x)] = Some(d.identity(left.obj(x)));
    }
    let c = left.source();
    let mut out = Vec::new();
    search_nat_trans(
        &fg,
        &id,
        limit,
        |y, a| pinned[y].map_or(true, |b| a == b) && c.is_identity(right.arr(a)),
        |t| {
            out.push(t);
            true
        },
    )?;
    Ok(out)
}

/// Units making `left -| right` an adjunction with identity counit. Requires
/// `left o right = 1`.
pub fn units_for_identity_counit(left: &Functor, right: &Functor, limit: SearchLimit) -> Result<Vec<NatTrans>> {
    if !left.after(right)?.is_identity() {
        return Ok(Vec::new());
    }
    let c = left.source();
    let d = left.target();
    let gf = right.after(left)?;
    let id = Functor::identity(c);
    let mut pinned = vec![None; c.num_objects()];
    for y in right.source().objects() {
        pinned[right.obj(y)] = Some(c.identity(right.obj(y)));
    }
    let mut out = Vec::new();
    search_nat_trans(
        &id,
        &gf,
        limit,
        |x, a| pinned[x].map_or(true, |b| a == b) && d.is_identity(left.arr(a)),
        |t| {
            out.push(t);
            true
        },
    )?;
    Ok(out)
}

/// Every right adjoint `v` of `f` with identity unit (`v o f = 1`), paired
/// with its counit, in search order.
pub fn all_right_adjoint_coretracts(f: &Functor, limit: SearchLimit) -> Result<Vec<Adjunction>> {
    let (a, b) = (f.source(), f.target());
    let mut pre_obj = vec![None; b.num_objects()];
    for x in a.objects() {
        match pre_obj[f.obj(x)] {
            None => pre_obj[f.obj(x)] = Some(x),
            Some(_) => return Ok(Vec::new()),
        }
    }
    let mut pre_arr = vec![None; b.num_arrows()];
    for u in a.arrows() {
        match pre_arr[f.arr(u)] {
            None => pre_arr[f.arr(u)] = Some(u),
            Some(_) => return Ok(Vec::new()),
        }
    }
    let mut candidates = Vec::new();
    search_functors(
        b,
        a,
        limit,
        |y, x| pre_obj[y].map_or(true, |z| z == x),
        |v, u| pre_arr[v].map_or(true, |w| w == u),
        |v| {
            candidates.push(v);
            true
        },
    )?;
    let mut out = Vec::new();
    for v in candidates {
        for counit in counits_for_identity_unit(f, &v, limit)? {
            out.push(Adjunction {
                left: f.clone(),
                right: v.clone(),
                unit: NatTrans::identity(&Functor::identity(a)),
                counit,
            });
        }
    }
    Ok(out)
}

/// The first right adjoint of `f` with identity unit, if any.
pub fn find_right_adjoint_coretract(f: &Functor, limit: SearchLimit) -> Result<Option<Adjunction>> {
    Ok(all_right_adjoint_coretracts(f, limit)?.into_iter().next())
}

/// Like [`find_right_adjoint_coretract`] but an error when none exists.
pub fn right_adjoint_coretract(f: &Functor, limit: SearchLimit) -> Result<Adjunction> {
    find_right_adjoint_coretract(f, limit)?
        .ok_or_else(|| Error::WitnessNotFound(format!("no right adjoint coretract of {}", f.display_name())))
}

/// The composite adjunction `second.left o first.left -| first.right o second.right`.
pub fn compose_adjunctions(first: &Adjunction, second: &Adjunction) -> Result<Adjunction> {
    let left = second.left.after(&first.left)?;
    let right = first.right.after(&second.right)?;
    // unit: (v . unit' . f) o unit
    let inner = second.unit.whisker_right(&first.left)?.whisker_left(&first.right)?;
    let unit = first.unit.then(&retarget_source(&inner, first.unit.target())?)?;
    let unit = NatTrans::new_unchecked(unit.source().clone(), right.after(&left)?, unit.components().to_vec());
    // counit: counit' o (f' . counit . v')
    let inner = first.counit.whisker_right(&second.right)?.whisker_left(&second.left)?;
    let counit = NatTrans::new_unchecked(left.after(&right)?, second.counit.source().clone(), inner.components().to_vec())
        .then(&second.counit)?;
    Ok(Adjunction {
        left,
        right,
        unit,
        counit,
    })
}

fn retarget_source(t: &NatTrans, source: &Functor) -> Result<NatTrans> {
    if t.source() != source {
        return Err(Error::ShapeMismatch("transformations do not compose".into()));
    }
    Ok(t.clone())
}
