//! The two bases the factorisation machinery runs over: the 2-category of
//! finite categories, and a single finite category viewed as a locally
//! discrete 2-category.

use std::fmt::Debug;

use crate::error::{Error, Result};

use super::category::{ArrId, ObjId};
use super::functor::{CatRef, Functor};
use super::nat::NatTrans;
use super::search::{enumerate_functors, enumerate_nat_trans, search_functors, search_nat_trans, SearchLimit};

pub trait TwoCategory {
    type Obj: Clone + PartialEq + Debug;
    type Mor: Clone + PartialEq + Debug;
    type Cell: Clone + PartialEq + Debug;

    fn dom(&self, m: &Self::Mor) -> Self::Obj;
    fn cod(&self, m: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// `g o f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn is_iso(&self, m: &Self::Mor) -> bool;
    fn describe(&self, m: &Self::Mor) -> String;
    fn homs(&self, x: &Self::Obj, y: &Self::Obj) -> Result<Vec<Self::Mor>>;

    fn cells(&self, m: &Self::Mor, n: &Self::Mor) -> Result<Vec<Self::Cell>>;
    fn identity_cell(&self, m: &Self::Mor) -> Self::Cell;
    fn is_identity_cell(&self, c: &Self::Cell) -> bool;
    fn is_invertible_cell(&self, c: &Self::Cell) -> bool;
    /// Vertical composite `d o c`.
    fn vcompose(&self, d: &Self::Cell, c: &Self::Cell) -> Result<Self::Cell>;
    /// `m . c`.
    fn whisker_left(&self, m: &Self::Mor, c: &Self::Cell) -> Result<Self::Cell>;
    /// `c . m`.
    fn whisker_right(&self, c: &Self::Cell, m: &Self::Mor) -> Result<Self::Cell>;

    /// Pairs `(h, k)` with `g o h = k o f`.
    fn squares(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Vec<(Self::Mor, Self::Mor)>> {
        let mut out = Vec::new();
        for k in self.homs(&self.cod(f), &self.cod(g))? {
            let kf = self.compose(&k, f)?;
            for h in self.homs(&self.dom(f), &self.dom(g))? {
                if self.compose(g, &h)? == kf {
                    out.push((h, k.clone()));
                }
            }
        }
        Ok(out)
    }

    /// Diagonals `d` with `d o f = h` and `g o d = k`.
    fn fillers(&self, f: &Self::Mor, g: &Self::Mor, h: &Self::Mor, k: &Self::Mor) -> Result<Vec<Self::Mor>> {
        let mut out = Vec::new();
        for d in self.homs(&self.cod(f), &self.dom(g))? {
            if self.compose(&d, f)? == *h && self.compose(g, &d)? == *k {
                out.push(d);
            }
        }
        Ok(out)
    }

    /// Morphisms `d': cod f -> dom g` that admit some pair of cells
    /// `h => d' f`, `k => g d'`. Every other `d'` is irrelevant to the KZ
    /// condition. The default returns all of them.
    fn kz_candidates(&self, f: &Self::Mor, g: &Self::Mor, _h: &Self::Mor, _k: &Self::Mor) -> Result<Vec<Self::Mor>> {
        self.homs(&self.cod(f), &self.dom(g))
    }

    /// Cells `c: d => e` with `c . f = alpha` and `g . c = beta`.
    fn cells_with(
        &self,
        d: &Self::Mor,
        e: &Self::Mor,
        f: &Self::Mor,
        g: &Self::Mor,
        alpha: &Self::Cell,
        beta: &Self::Cell,
    ) -> Result<Vec<Self::Cell>> {
        let mut out = Vec::new();
        for c in self.cells(d, e)? {
            if self.whisker_right(&c, f)? == *alpha && self.whisker_left(g, &c)? == *beta {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Cells `(alpha: h => h2, beta: k => k2)` between two squares from `f`
    /// to `g`, i.e. with `g . alpha = beta . f`.
    fn square_cells(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
        s1: &(Self::Mor, Self::Mor),
        s2: &(Self::Mor, Self::Mor),
    ) -> Result<Vec<(Self::Cell, Self::Cell)>> {
        let betas = self.cells(&s1.1, &s2.1)?;
        let mut out = Vec::new();
        for a in self.cells(&s1.0, &s2.0)? {
            let ga = self.whisker_left(g, &a)?;
            for b in &betas {
                if self.whisker_right(b, f)? == ga {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
        Ok(out)
    }
}

/// Finite categories, functors and natural transformations.
#[derive(Clone, Copy, Debug, Default)]
pub struct Cat {
    pub limit: SearchLimit,
}

impl Cat {
    pub fn new(limit: SearchLimit) -> Self {
        Cat { limit }
    }
}

impl TwoCategory for Cat {
    type Obj = CatRef;
    type Mor = Functor;
    type Cell = NatTrans;

    fn dom(&self, m: &Functor) -> CatRef {
        m.source().clone()
    }

    fn cod(&self, m: &Functor) -> CatRef {
        m.target().clone()
    }

    fn identity(&self, x: &CatRef) -> Functor {
        Functor::identity(x)
    }

    fn compose(&self, g: &Functor, f: &Functor) -> Result<Functor> {
        g.after(f)
    }

    fn is_iso(&self, m: &Functor) -> bool {
        m.is_iso()
    }

    fn describe(&self, m: &Functor) -> String {
        m.describe()
    }

    fn homs(&self, x: &CatRef, y: &CatRef) -> Result<Vec<Functor>> {
        enumerate_functors(x, y, self.limit)
    }

    fn cells(&self, m: &Functor, n: &Functor) -> Result<Vec<NatTrans>> {
        enumerate_nat_trans(m, n, self.limit)
    }

    fn identity_cell(&self, m: &Functor) -> NatTrans {
        NatTrans::identity(m)
    }

    fn is_identity_cell(&self, c: &NatTrans) -> bool {
        c.is_identity()
    }

    fn is_invertible_cell(&self, c: &NatTrans) -> bool {
        c.is_iso()
    }

    fn vcompose(&self, d: &NatTrans, c: &NatTrans) -> Result<NatTrans> {
        c.then(d)
    }

    fn whisker_left(&self, m: &Functor, c: &NatTrans) -> Result<NatTrans> {
        c.whisker_left(m)
    }

    fn whisker_right(&self, c: &NatTrans, m: &Functor) -> Result<NatTrans> {
        c.whisker_right(m)
    }

    fn squares(&self, f: &Functor, g: &Functor) -> Result<Vec<(Functor, Functor)>> {
        let mut out = Vec::new();
        for k in self.homs(f.target(), g.target())? {
            let kf = k.after(f)?;
            search_functors(
                f.source(),
                g.source(),
                self.limit,
                |a, c| g.obj(c) == kf.obj(a),
                |u, v| g.arr(v) == kf.arr(u),
                |h| {
                    out.push((h, k.clone()));
                    true
                },
            )?;
        }
        Ok(out)
    }

    fn fillers(&self, f: &Functor, g: &Functor, h: &Functor, k: &Functor) -> Result<Vec<Functor>> {
        let (b, c) = (f.target(), g.source());
        let mut obj_pin: Vec<Option<ObjId>> = vec![None; b.num_objects()];
        let mut arr_pin: Vec<Option<ArrId>> = vec![None; b.num_arrows()];
        for a in f.source().objects() {
            match obj_pin[f.obj(a)] {
                Some(x) if x != h.obj(a) => return Ok(Vec::new()),
                _ => obj_pin[f.obj(a)] = Some(h.obj(a)),
            }
        }
        for u in f.source().arrows() {
            match arr_pin[f.arr(u)] {
                Some(x) if x != h.arr(u) => return Ok(Vec::new()),
                _ => arr_pin[f.arr(u)] = Some(h.arr(u)),
            }
        }
        let mut out = Vec::new();
        search_functors(
            b,
            c,
            self.limit,
            |x, y| g.obj(y) == k.obj(x) && obj_pin[x].map_or(true, |z| z == y),
            |u, v| g.arr(v) == k.arr(u) && arr_pin[u].map_or(true, |z| z == v),
            |d| {
                out.push(d);
                true
            },
        )?;
        Ok(out)
    }

    fn kz_candidates(&self, f: &Functor, g: &Functor, h: &Functor, k: &Functor) -> Result<Vec<Functor>> {
        let (a, b, c, d) = (f.source(), f.target(), g.source(), g.target());
        let mut pre: Vec<Vec<ObjId>> = vec![Vec::new(); b.num_objects()];
        for x in a.objects() {
            pre[f.obj(x)].push(x);
        }
        let mut out = Vec::new();
        search_functors(
            b,
            c,
            self.limit,
            |x, y| !d.hom(k.obj(x), g.obj(y)).is_empty() && pre[x].iter().all(|&z| !c.hom(h.obj(z), y).is_empty()),
            |_, _| true,
            |e| {
                out.push(e);
                true
            },
        )?;
        Ok(out)
    }

    fn cells_with(
        &self,
        d: &Functor,
        e: &Functor,
        f: &Functor,
        g: &Functor,
        alpha: &NatTrans,
        beta: &NatTrans,
    ) -> Result<Vec<NatTrans>> {
        let b = f.target();
        let mut pin: Vec<Option<ArrId>> = vec![None; b.num_objects()];
        for x in f.source().objects() {
            match pin[f.obj(x)] {
                Some(z) if z != alpha.component(x) => return Ok(Vec::new()),
                _ => pin[f.obj(x)] = Some(alpha.component(x)),
            }
        }
        let mut out = Vec::new();
        search_nat_trans(
            d,
            e,
            self.limit,
            |x, a| g.arr(a) == beta.component(x) && pin[x].map_or(true, |z| z == a),
            |t| {
                out.push(t);
                true
            },
        )?;
        Ok(out)
    }

    fn square_cells(
        &self,
        f: &Functor,
        g: &Functor,
        s1: &(Functor, Functor),
        s2: &(Functor, Functor),
    ) -> Result<Vec<(NatTrans, NatTrans)>> {
        let mut out = Vec::new();
        for beta in self.cells(&s1.1, &s2.1)? {
            let bf = beta.whisker_right(f)?;
            search_nat_trans(
                &s1.0,
                &s2.0,
                self.limit,
                |x, a| g.arr(a) == bf.component(x),
                |alpha| {
                    out.push((alpha, beta.clone()));
                    true
                },
            )?;
        }
        Ok(out)
    }
}

/// One finite category as a 2-category with only identity cells. A cell is
/// represented by the morphism it sits on.
#[derive(Clone, Debug)]
pub struct Local {
    pub cat: CatRef,
}

impl Local {
    pub fn new(cat: CatRef) -> Self {
        Local { cat }
    }
}

impl TwoCategory for Local {
    type Obj = ObjId;
    type Mor = ArrId;
    type Cell = ArrId;

    fn dom(&self, m: &ArrId) -> ObjId {
        self.cat.dom(*m)
    }

    fn cod(&self, m: &ArrId) -> ObjId {
        self.cat.cod(*m)
    }

    fn identity(&self, x: &ObjId) -> ArrId {
        self.cat.identity(*x)
    }

    fn compose(&self, g: &ArrId, f: &ArrId) -> Result<ArrId> {
        self.cat.try_compose(*g, *f)
    }

    fn is_iso(&self, m: &ArrId) -> bool {
        self.cat.is_iso(*m)
    }

    fn describe(&self, m: &ArrId) -> String {
        self.cat.arrow_name(*m).to_string()
    }

    fn homs(&self, x: &ObjId, y: &ObjId) -> Result<Vec<ArrId>> {
        Ok(self.cat.hom(*x, *y).to_vec())
    }

    fn cells(&self, m: &ArrId, n: &ArrId) -> Result<Vec<ArrId>> {
        Ok(if m == n { vec![*m] } else { Vec::new() })
    }

    fn identity_cell(&self, m: &ArrId) -> ArrId {
        *m
    }

    fn is_identity_cell(&self, _c: &ArrId) -> bool {
        true
    }

    fn is_invertible_cell(&self, _c: &ArrId) -> bool {
        true
    }

    fn vcompose(&self, d: &ArrId, c: &ArrId) -> Result<ArrId> {
        if d != c {
            return Err(Error::ShapeMismatch("cells in a locally discrete base".into()));
        }
        Ok(*c)
    }

    fn whisker_left(&self, m: &ArrId, c: &ArrId) -> Result<ArrId> {
        self.compose(m, c)
    }

    fn whisker_right(&self, c: &ArrId, m: &ArrId) -> Result<ArrId> {
        self.compose(c, m)
    }
}
