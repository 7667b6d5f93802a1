//! Backtracking enumeration of functors and natural transformations.
//!
//! Results come out in lexicographic order of the object map, then the arrow
//! map (resp. the component list), with candidates tried in id order.

use crate::error::{Error, Result};

use super::category::{ArrId, ObjId};
use super::functor::{CatRef, Functor};
use super::nat::NatTrans;

/// Upper bound on the number of search nodes an enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimit(pub u64);

impl Default for SearchLimit {
    fn default() -> Self {
        SearchLimit(1_000_000)
    }
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::SizeLimitExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

struct FunctorSearch<'a, O, A, V> {
    s: &'a CatRef,
    t: &'a CatRef,
    obj_ok: O,
    arr_ok: A,
    visit: V,
    budget: Budget,
    obj_map: Vec<ObjId>,
    arr_map: Vec<ArrId>,
    // non-identity arrows closing at each object (both endpoints assigned)
    closing: Vec<Vec<ArrId>>,
    order: Vec<ArrId>,
    // composite constraints (g, f, h) checkable once order[p] is assigned
    triples: Vec<Vec<(ArrId, ArrId, ArrId)>>,
    stop: bool,
}

impl<'a, O, A, V> FunctorSearch<'a, O, A, V>
where
    O: FnMut(ObjId, ObjId) -> bool,
    A: FnMut(ArrId, ArrId) -> bool,
    V: FnMut(Functor) -> bool,
{
    fn objects(&mut self, x: ObjId) -> Result<()> {
        if x == self.s.num_objects() {
            return self.start_arrows();
        }
        for y in self.t.objects() {
            if self.stop {
                return Ok(());
            }
            if !(self.obj_ok)(x, y) {
                continue;
            }
            self.budget.tick()?;
            self.obj_map[x] = y;
            if !(self.arr_ok)(self.s.identity(x), self.t.identity(y)) {
                continue;
            }
            let mut feasible = true;
            for i in 0..self.closing[x].len() {
                let u = self.closing[x][i];
                let (a, b) = (self.obj_map[self.s.dom(u)], self.obj_map[self.s.cod(u)]);
                let mut any = false;
                for &v in self.t.hom(a, b) {
                    if (self.arr_ok)(u, v) {
                        any = true;
                        break;
                    }
                }
                if !any {
                    feasible = false;
                    break;
                }
            }
            if feasible {
                self.objects(x + 1)?;
            }
        }
        Ok(())
    }

    fn start_arrows(&mut self) -> Result<()> {
        for x in self.s.objects() {
            self.arr_map[self.s.identity(x)] = self.t.identity(self.obj_map[x]);
        }
        self.arrows(0)
    }

    fn arrows(&mut self, p: usize) -> Result<()> {
        if p == self.order.len() {
            let f = Functor::new_unchecked(self.s.clone(), self.t.clone(), self.obj_map.clone(), self.arr_map.clone());
            if !(self.visit)(f) {
                self.stop = true;
            }
            return Ok(());
        }
        let u = self.order[p];
        let (a, b) = (self.obj_map[self.s.dom(u)], self.obj_map[self.s.cod(u)]);
        let t = self.t.clone();
        for &v in t.hom(a, b) {
            if self.stop {
                return Ok(());
            }
            if !(self.arr_ok)(u, v) {
                continue;
            }
            self.budget.tick()?;
            self.arr_map[u] = v;
            let ok = self.triples[p]
                .iter()
                .all(|&(g, f, h)| t.compose(self.arr_map[g], self.arr_map[f]) == self.arr_map[h]);
            if ok {
                self.arrows(p + 1)?;
            }
        }
        Ok(())
    }
}

/// Visits every functor `source -> target` whose object and arrow maps pass
/// the filters. `visit` returns `false` to stop early.
pub fn search_functors<O, A, V>(
    source: &CatRef,
    target: &CatRef,
    limit: SearchLimit,
    obj_ok: O,
    arr_ok: A,
    visit: V,
) -> Result<()>
where
    O: FnMut(ObjId, ObjId) -> bool,
    A: FnMut(ArrId, ArrId) -> bool,
    V: FnMut(Functor) -> bool,
{
    let s = source;
    let mut closing = vec![Vec::new(); s.num_objects()];
    let mut order = Vec::new();
    let mut pos = vec![usize::MAX; s.num_arrows()];
    for u in s.arrows() {
        if s.is_identity(u) {
            continue;
        }
        closing[s.dom(u).max(s.cod(u))].push(u);
        pos[u] = order.len();
        order.push(u);
    }
    let mut triples = vec![Vec::new(); order.len()];
    for (g, f, h) in s.composites() {
        if s.is_identity(g) || s.is_identity(f) {
            continue;
        }
        let mut at = pos[g].max(pos[f]);
        if !s.is_identity(h) {
            at = at.max(pos[h]);
        }
        triples[at].push((g, f, h));
    }
    let mut search = FunctorSearch {
        s: source,
        t: target,
        obj_ok,
        arr_ok,
        visit,
        budget: Budget {
            limit: limit.0,
            used: 0,
        },
        obj_map: vec![0; s.num_objects()],
        arr_map: vec![0; s.num_arrows()],
        closing,
        order,
        triples,
        stop: false,
    };
    search.objects(0)
}

pub fn enumerate_functors(source: &CatRef, target: &CatRef, limit: SearchLimit) -> Result<Vec<Functor>> {
    let mut out = Vec::new();
    search_functors(source, target, limit, |_, _| true, |_, _| true, |f| {
        out.push(f);
        true
    })?;
    Ok(out)
}

pub fn count_functors(source: &CatRef, target: &CatRef, limit: SearchLimit) -> Result<usize> {
    let mut n = 0;
    search_functors(source, target, limit, |_, _| true, |_, _| true, |_| {
        n += 1;
        true
    })?;
    Ok(n)
}

struct NatSearch<'a, C, V> {
    f: &'a Functor,
    g: &'a Functor,
    comp_ok: C,
    visit: V,
    budget: Budget,
    comps: Vec<ArrId>,
    closing: Vec<Vec<ArrId>>,
    stop: bool,
}

impl<C, V> NatSearch<'_, C, V>
where
    C: FnMut(ObjId, ArrId) -> bool,
    V: FnMut(NatTrans) -> bool,
{
    fn go(&mut self, x: ObjId) -> Result<()> {
        let c = self.f.source().clone();
        let d = self.f.target().clone();
        if x == c.num_objects() {
            let t = NatTrans::new_unchecked(self.f.clone(), self.g.clone(), self.comps.clone());
            if !(self.visit)(t) {
                self.stop = true;
            }
            return Ok(());
        }
        for &a in d.hom(self.f.obj(x), self.g.obj(x)) {
            if self.stop {
                return Ok(());
            }
            if !(self.comp_ok)(x, a) {
                continue;
            }
            self.budget.tick()?;
            self.comps[x] = a;
            let natural = self.closing[x].iter().all(|&u| {
                let (p, q) = (c.dom(u), c.cod(u));
                d.compose(self.g.arr(u), self.comps[p]) == d.compose(self.comps[q], self.f.arr(u))
            });
            if natural {
                self.go(x + 1)?;
            }
        }
        Ok(())
    }
}

/// Visits every natural transformation `f => g` whose components pass
/// `comp_ok`. `visit` returns `false` to stop early.
pub fn search_nat_trans<C, V>(f: &Functor, g: &Functor, limit: SearchLimit, comp_ok: C, visit: V) -> Result<()>
where
    C: FnMut(ObjId, ArrId) -> bool,
    V: FnMut(NatTrans) -> bool,
{
    if *f.source() != *g.source() || *f.target() != *g.target() {
        return Err(Error::ShapeMismatch("transformations between non-parallel functors".into()));
    }
    let c = f.source();
    let mut closing = vec![Vec::new(); c.num_objects()];
    for u in c.arrows() {
        if !c.is_identity(u) {
            closing[c.dom(u).max(c.cod(u))].push(u);
        }
    }
    let mut search = NatSearch {
        f,
        g,
        comp_ok,
        visit,
        budget: Budget {
            limit: limit.0,
            used: 0,
        },
        comps: vec![0; c.num_objects()],
        closing,
        stop: false,
    };
    search.go(0)
}

pub fn enumerate_nat_trans(f: &Functor, g: &Functor, limit: SearchLimit) -> Result<Vec<NatTrans>> {
    let mut out = Vec::new();
    search_nat_trans(f, g, limit, |_, _| true, |t| {
        out.push(t);
        true
    })?;
    Ok(out)
}

/// All transformations `f => g` with the given components forced.
/// `fixed[x] = Some(a)` pins the component at `x`.
pub fn nat_trans_with(f: &Functor, g: &Functor, limit: SearchLimit, fixed: &[Option<ArrId>]) -> Result<Vec<NatTrans>> {
    let mut out = Vec::new();
    search_nat_trans(
        f,
        g,
        limit,
        |x, a| fixed.get(x).copied().flatten().map_or(true, |b| a == b),
        |t| {
            out.push(t);
            true
        },
    )?;
    Ok(out)
}

/// An isomorphism `c -> d`, if one exists.
pub fn find_isomorphism(c: &CatRef, d: &CatRef, limit: SearchLimit) -> Result<Option<Functor>> {
    if c.num_objects() != d.num_objects() || c.num_arrows() != d.num_arrows() {
        return Ok(None);
    }
    let mut found = None;
    search_functors(
        c,
        d,
        limit,
        |x, y| c.hom(x, x).len() == d.hom(y, y).len() && c.outgoing(x).len() == d.outgoing(y).len(),
        |u, v| c.is_identity(u) == d.is_identity(v),
        |f| {
            if f.is_iso() {
                found = Some(f);
                false
            } else {
                true
            }
        },
    )?;
    Ok(found)
}
