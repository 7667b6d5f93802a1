//! Standard shapes and universal constructions on finite categories.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::category::{ArrId, ArrowSig, FinCategory, ObjId};
use super::functor::{CatRef, Functor};
use super::nat::NatTrans;

fn id_name(x: &str) -> String {
    format!("id_{x}")
}

/// A category with no objects.
pub fn empty() -> CatRef {
    discrete("0", 0)
}

/// The terminal category `1` with a single object `*`.
pub fn terminal() -> CatRef {
    Arc::new(
        FinCategory::from_parts("1", vec!["*".into()], vec![sig("id_*", 0, 0)], vec![0], |_, _| Some(0)).unwrap(),
    )
}

fn sig(name: &str, dom: ObjId, cod: ObjId) -> ArrowSig {
    ArrowSig {
        name: name.into(),
        dom,
        cod,
    }
}

/// Discrete category on objects `0..n`.
pub fn discrete(name: &str, n: usize) -> CatRef {
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let arrows = objects.iter().enumerate().map(|(i, o)| sig(&id_name(o), i, i)).collect();
    Arc::new(FinCategory::from_parts(name, objects, arrows, (0..n).collect(), |g, f| (g == f).then_some(g)).unwrap())
}

/// A poset (or preorder) on `0..n` given by `leq(i, j)`. The relation must be
/// reflexive and transitive. The arrow `i <= j` is named `i<=j`.
pub fn poset(name: &str, n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<CatRef> {
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    let mut index = HashMap::new();
    let mut identity = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            if leq(i, j) {
                index.insert((i, j), arrows.len());
                if i == j {
                    identity[i] = arrows.len();
                    arrows.push(sig(&id_name(&objects[i]), i, i));
                } else {
                    arrows.push(sig(&format!("{i}<={j}"), i, j));
                }
            }
        }
    }
    for i in 0..n {
        if !index.contains_key(&(i, i)) {
            return Err(Error::BadIdentity(format!("relation is not reflexive at {i}")));
        }
    }
    let doms: Vec<(usize, usize)> = arrows.iter().map(|a| (a.dom, a.cod)).collect();
    let c = FinCategory::from_parts(name, objects, arrows, identity, |g, f| index.get(&(doms[f].0, doms[g].1)).copied())?;
    Ok(Arc::new(c))
}

/// The chain `0 -> 1 -> ... -> n-1` as a poset.
pub fn chain(n: usize) -> CatRef {
    poset(&format!("[{n}]"), n, |i, j| i <= j).unwrap()
}

/// The arrow category `2 = {0 -> 1}` with non-identity arrow `u`.
pub fn interval() -> CatRef {
    free("2", &["0", "1"], &[("u", "0", "1")]).unwrap()
}

/// The free category on a finite acyclic graph. Non-identity arrows are the
/// non-empty paths, named by joining edge names with `.` (last edge first).
pub fn free(name: &str, objects: &[&str], edges: &[(&str, &str, &str)]) -> Result<CatRef> {
    let obj_names: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
    let oid = |s: &str| -> Result<ObjId> {
        objects
            .iter()
            .position(|o| *o == s)
            .ok_or_else(|| Error::UnknownObject(s.into()))
    };
    let mut out_edges = vec![Vec::new(); objects.len()];
    for (i, (_, d, c)) in edges.iter().enumerate() {
        out_edges[oid(d)?].push((i, oid(c)?));
    }
    // paths as edge sequences, by depth-first search from each object
    let mut paths: Vec<(ObjId, ObjId, Vec<usize>)> = Vec::new();
    let bound = edges.len();
    for start in 0..objects.len() {
        let mut stack: Vec<(ObjId, Vec<usize>)> = vec![(start, Vec::new())];
        while let Some((at, path)) = stack.pop() {
            if path.len() > bound {
                return Err(Error::CyclicGraph(objects[start].into()));
            }
            if !path.is_empty() {
                paths.push((start, at, path.clone()));
            }
            for &(e, to) in out_edges[at].iter().rev() {
                let mut p = path.clone();
                p.push(e);
                stack.push((to, p));
            }
        }
    }
    let mut arrows: Vec<ArrowSig> = (0..objects.len()).map(|i| sig(&id_name(objects[i]), i, i)).collect();
    let mut by_path: HashMap<Vec<usize>, ArrId> = HashMap::new();
    for (d, c, p) in &paths {
        let label: Vec<&str> = p.iter().rev().map(|&e| edges[e].0).collect();
        by_path.insert(p.clone(), arrows.len());
        arrows.push(sig(&label.join("."), *d, *c));
    }
    let mut path_of: Vec<Vec<usize>> = vec![Vec::new(); objects.len()];
    path_of.extend(paths.iter().map(|(_, _, p)| p.clone()));
    let n = objects.len();
    let c = FinCategory::from_parts(name, obj_names, arrows, (0..n).collect(), |g, f| {
        if g < n {
            return Some(f);
        }
        if f < n {
            return Some(g);
        }
        let mut p = path_of[f].clone();
        p.extend_from_slice(&path_of[g]);
        by_path.get(&p).copied()
    })?;
    Ok(Arc::new(c))
}

/// Coproduct of two categories. Objects and arrows keep their names, which
/// must therefore be disjoint.
pub fn coproduct(name: &str, a: &CatRef, b: &CatRef) -> Result<(CatRef, Functor, Functor)> {
    let no = a.num_objects();
    let na = a.num_arrows();
    let mut objects: Vec<String> = a.object_names().to_vec();
    objects.extend(b.object_names().iter().cloned());
    let mut arrows: Vec<ArrowSig> = a.arrow_sigs().to_vec();
    arrows.extend(b.arrow_sigs().iter().map(|s| ArrowSig {
        name: s.name.clone(),
        dom: s.dom + no,
        cod: s.cod + no,
    }));
    let identity: Vec<ArrId> = a.objects().map(|x| a.identity(x)).chain(b.objects().map(|x| b.identity(x) + na)).collect();
    let c = Arc::new(FinCategory::from_parts(name, objects, arrows, identity, |g, f| {
        if g < na && f < na {
            Some(a.compose(g, f))
        } else if g >= na && f >= na {
            Some(b.compose(g - na, f - na) + na)
        } else {
            None
        }
    })?);
    let ia = Functor::new_unchecked(a.clone(), c.clone(), a.objects().collect(), a.arrows().collect());
    let ib = Functor::new_unchecked(
        b.clone(),
        c.clone(),
        b.objects().map(|x| x + no).collect(),
        b.arrows().map(|f| f + na).collect(),
    );
    Ok((c, ia, ib))
}

/// Product category with objects `(a,b)` and arrows `(u,v)`.
pub fn product(a: &CatRef, b: &CatRef) -> (CatRef, Functor, Functor) {
    let nb = b.num_objects();
    let mb = b.num_arrows();
    let mut objects = Vec::new();
    for x in a.objects() {
        for y in b.objects() {
            objects.push(format!("({},{})", a.object_name(x), b.object_name(y)));
        }
    }
    let mut arrows = Vec::new();
    for u in a.arrows() {
        for v in b.arrows() {
            arrows.push(ArrowSig {
                name: format!("({},{})", a.arrow_name(u), b.arrow_name(v)),
                dom: a.dom(u) * nb + b.dom(v),
                cod: a.cod(u) * nb + b.cod(v),
            });
        }
    }
    let identity = a
        .objects()
        .flat_map(|x| b.objects().map(move |y| (x, y)))
        .map(|(x, y)| a.identity(x) * mb + b.identity(y))
        .collect();
    let name = format!("{}x{}", a.name(), b.name());
    let c = Arc::new(
        FinCategory::from_parts(name, objects, arrows, identity, |g, f| {
            Some(a.compose(g / mb, f / mb) * mb + b.compose(g % mb, f % mb))
        })
        .expect("product of valid categories"),
    );
    let p1 = Functor::new_unchecked(
        c.clone(),
        a.clone(),
        c.objects().map(|x| x / nb).collect(),
        c.arrows().map(|f| f / mb).collect(),
    );
    let p2 = Functor::new_unchecked(
        c.clone(),
        b.clone(),
        c.objects().map(|x| x % nb).collect(),
        c.arrows().map(|f| f % mb).collect(),
    );
    (c, p1, p2)
}

/// The opposite category; names are unchanged.
pub fn opposite(c: &CatRef) -> CatRef {
    let arrows = c
        .arrow_sigs()
        .iter()
        .map(|s| ArrowSig {
            name: s.name.clone(),
            dom: s.cod,
            cod: s.dom,
        })
        .collect();
    let identity = c.objects().map(|x| c.identity(x)).collect();
    Arc::new(
        FinCategory::from_parts(format!("{}^op", c.name()), c.object_names().to_vec(), arrows, identity, |g, f| {
            Some(c.compose(f, g))
        })
        .expect("opposite of a valid category"),
    )
}

/// The comma category `f / g` for `f: A -> C`, `g: B -> C`, with its two
/// projections and the canonical transformation `f o p => g o q`.
#[derive(Clone, Debug)]
pub struct CommaCone {
    pub apex: CatRef,
    pub proj_left: Functor,
    pub proj_right: Functor,
    pub cell: NatTrans,
    pub f: Functor,
    pub g: Functor,
    obj_index: HashMap<(ObjId, ArrId, ObjId), ObjId>,
    arr_index: HashMap<(ObjId, ObjId, ArrId, ArrId), ArrId>,
}

/// Objects are named `(a|γ|b)`, arrows `[u|v]:dom->cod`.
pub fn comma(f: &Functor, g: &Functor) -> Result<CommaCone> {
    comma_named(f, g, |a, gamma, b| format!("({a}|{gamma}|{b})"))
}

fn comma_named(f: &Functor, g: &Functor, obj_name: impl Fn(&str, &str, &str) -> String) -> Result<CommaCone> {
    if *f.target() != *g.target() {
        return Err(Error::ShapeMismatch("comma of functors with different codomains".into()));
    }
    let (a, b, c) = (f.source(), g.source(), f.target());
    let mut objs: Vec<(ObjId, ArrId, ObjId)> = Vec::new();
    let mut obj_index = HashMap::new();
    for x in a.objects() {
        for y in b.objects() {
            for &gamma in c.hom(f.obj(x), g.obj(y)) {
                obj_index.insert((x, gamma, y), objs.len());
                objs.push((x, gamma, y));
            }
        }
    }
    let names: Vec<String> = objs
        .iter()
        .map(|&(x, gamma, y)| obj_name(a.object_name(x), c.arrow_name(gamma), b.object_name(y)))
        .collect();
    let mut arrows = Vec::new();
    let mut parts: Vec<(ArrId, ArrId)> = Vec::new();
    let mut arr_index = HashMap::new();
    let mut identity = vec![0; objs.len()];
    for (i, &(x, gamma, y)) in objs.iter().enumerate() {
        for (j, &(x2, gamma2, y2)) in objs.iter().enumerate() {
            for &u in a.hom(x, x2) {
                for &v in b.hom(y, y2) {
                    if c.compose(g.arr(v), gamma) != c.compose(gamma2, f.arr(u)) {
                        continue;
                    }
                    let id = arrows.len();
                    if i == j && a.is_identity(u) && b.is_identity(v) {
                        identity[i] = id;
                    }
                    arr_index.insert((i, j, u, v), id);
                    parts.push((u, v));
                    arrows.push(ArrowSig {
                        name: format!("[{}|{}]:{}->{}", a.arrow_name(u), b.arrow_name(v), names[i], names[j]),
                        dom: i,
                        cod: j,
                    });
                }
            }
        }
    }
    let doms: Vec<(ObjId, ObjId)> = arrows.iter().map(|s| (s.dom, s.cod)).collect();
    let apex = Arc::new(FinCategory::from_parts(
        format!("({}/{})", f.display_name(), g.display_name()),
        names,
        arrows,
        identity,
        |h, k| {
            let (u, v) = (a.compose(parts[h].0, parts[k].0), b.compose(parts[h].1, parts[k].1));
            arr_index.get(&(doms[k].0, doms[h].1, u, v)).copied()
        },
    )?);
    let proj_left = Functor::new_unchecked(
        apex.clone(),
        a.clone(),
        objs.iter().map(|o| o.0).collect(),
        parts.iter().map(|p| p.0).collect(),
    );
    let proj_right = Functor::new_unchecked(
        apex.clone(),
        b.clone(),
        objs.iter().map(|o| o.2).collect(),
        parts.iter().map(|p| p.1).collect(),
    );
    let cell = NatTrans::new_unchecked(
        f.after(&proj_left)?,
        g.after(&proj_right)?,
        objs.iter().map(|o| o.1).collect(),
    );
    Ok(CommaCone {
        apex,
        proj_left,
        proj_right,
        cell,
        f: f.clone(),
        g: g.clone(),
        obj_index,
        arr_index,
    })
}

impl CommaCone {
    pub fn object(&self, a: ObjId, gamma: ArrId, b: ObjId) -> Option<ObjId> {
        self.obj_index.get(&(a, gamma, b)).copied()
    }

    pub fn arrow(&self, dom: ObjId, cod: ObjId, u: ArrId, v: ArrId) -> Option<ArrId> {
        self.arr_index.get(&(dom, cod, u, v)).copied()
    }

    /// The unique functor `m: X -> apex` with `proj_left o m = p`,
    /// `proj_right o m = q` and `cell . m = theta`.
    pub fn mediate(&self, p: &Functor, q: &Functor, theta: &NatTrans) -> Result<Functor> {
        if *p.source() != *q.source() || *p.target() != *self.f.source() || *q.target() != *self.g.source() {
            return Err(Error::ShapeMismatch("mediating data does not match the comma".into()));
        }
        if theta.source() != &self.f.after(p)? || theta.target() != &self.g.after(q)? {
            return Err(Error::ShapeMismatch("mediating transformation has the wrong type".into()));
        }
        let x = p.source();
        let mut obj_map = Vec::with_capacity(x.num_objects());
        for o in x.objects() {
            obj_map.push(
                self.object(p.obj(o), theta.component(o), q.obj(o))
                    .ok_or_else(|| Error::ShapeMismatch("mediating object missing".into()))?,
            );
        }
        let mut arr_map = Vec::with_capacity(x.num_arrows());
        for u in x.arrows() {
            arr_map.push(
                self.arrow(obj_map[x.dom(u)], obj_map[x.cod(u)], p.arr(u), q.arr(u))
                    .ok_or_else(|| Error::InvalidNatTrans("mediating transformation is not natural".into()))?,
            );
        }
        Ok(Functor::new_unchecked(x.clone(), self.apex.clone(), obj_map, arr_map))
    }

    /// Two-dimensional part of the universal property: the transformation
    /// `m1 => m2` whose projections are `alpha` and `beta`.
    pub fn mediate_cell(&self, m1: &Functor, m2: &Functor, alpha: &NatTrans, beta: &NatTrans) -> Result<NatTrans> {
        if alpha.source() != &self.proj_left.after(m1)?
            || alpha.target() != &self.proj_left.after(m2)?
            || beta.source() != &self.proj_right.after(m1)?
            || beta.target() != &self.proj_right.after(m2)?
        {
            return Err(Error::ShapeMismatch("cells do not lie over the given functors".into()));
        }
        let x = m1.source();
        let mut comps = Vec::with_capacity(x.num_objects());
        for o in x.objects() {
            comps.push(
                self.arrow(m1.obj(o), m2.obj(o), alpha.component(o), beta.component(o))
                    .ok_or_else(|| Error::InvalidNatTrans("cells are not compatible with the comma".into()))?,
            );
        }
        Ok(NatTrans::new_unchecked(m1.clone(), m2.clone(), comps))
    }
}

/// The arrow category `C^2`: objects are the arrows of `C` (named by arrow
/// id), arrows are commuting squares. Projections are domain and codomain.
pub fn arrow_category(c: &CatRef) -> Result<CommaCone> {
    let id = Functor::identity(c);
    comma_named(&id, &id, |_, gamma, _| gamma.to_string())
}

/// Strict pullback of `f: A -> C` and `g: B -> C`.
#[derive(Clone, Debug)]
pub struct PullbackCone {
    pub apex: CatRef,
    pub proj_left: Functor,
    pub proj_right: Functor,
    pub f: Functor,
    pub g: Functor,
    obj_index: HashMap<(ObjId, ObjId), ObjId>,
    arr_index: HashMap<(ArrId, ArrId), ArrId>,
}

pub fn pullback(f: &Functor, g: &Functor) -> Result<PullbackCone> {
    if *f.target() != *g.target() {
        return Err(Error::ShapeMismatch("pullback of functors with different codomains".into()));
    }
    let (a, b) = (f.source(), g.source());
    let mut objs = Vec::new();
    let mut obj_index = HashMap::new();
    for x in a.objects() {
        for y in b.objects() {
            if f.obj(x) == g.obj(y) {
                obj_index.insert((x, y), objs.len());
                objs.push((x, y));
            }
        }
    }
    let mut parts = Vec::new();
    let mut arrows = Vec::new();
    let mut arr_index = HashMap::new();
    for u in a.arrows() {
        for v in b.arrows() {
            if f.arr(u) != g.arr(v) {
                continue;
            }
            arr_index.insert((u, v), parts.len());
            parts.push((u, v));
            arrows.push(ArrowSig {
                name: format!("({},{})", a.arrow_name(u), b.arrow_name(v)),
                dom: obj_index[&(a.dom(u), b.dom(v))],
                cod: obj_index[&(a.cod(u), b.cod(v))],
            });
        }
    }
    let names = objs
        .iter()
        .map(|&(x, y)| format!("({},{})", a.object_name(x), b.object_name(y)))
        .collect();
    let identity = objs.iter().map(|&(x, y)| arr_index[&(a.identity(x), b.identity(y))]).collect();
    let apex = Arc::new(FinCategory::from_parts(
        format!("({} x {})", f.display_name(), g.display_name()),
        names,
        arrows,
        identity,
        |h, k| {
            arr_index
                .get(&(a.compose(parts[h].0, parts[k].0), b.compose(parts[h].1, parts[k].1)))
                .copied()
        },
    )?);
    let proj_left = Functor::new_unchecked(
        apex.clone(),
        a.clone(),
        objs.iter().map(|o| o.0).collect(),
        parts.iter().map(|p| p.0).collect(),
    );
    let proj_right = Functor::new_unchecked(
        apex.clone(),
        b.clone(),
        objs.iter().map(|o| o.1).collect(),
        parts.iter().map(|p| p.1).collect(),
    );
    Ok(PullbackCone {
        apex,
        proj_left,
        proj_right,
        f: f.clone(),
        g: g.clone(),
        obj_index,
        arr_index,
    })
}

impl PullbackCone {
    /// The unique `m` with `proj_left o m = p` and `proj_right o m = q`.
    pub fn mediate(&self, p: &Functor, q: &Functor) -> Result<Functor> {
        if self.f.after(p)? != self.g.after(q)? {
            return Err(Error::NotAPullback("cone does not commute".into()));
        }
        let x = p.source();
        let obj_map = x.objects().map(|o| self.obj_index[&(p.obj(o), q.obj(o))]).collect();
        let arr_map = x.arrows().map(|u| self.arr_index[&(p.arr(u), q.arr(u))]).collect();
        Ok(Functor::new_unchecked(x.clone(), self.apex.clone(), obj_map, arr_map))
    }

    /// Whether the commuting square `g o h = f o k` (with `h: X -> B`,
    /// `k: X -> A`) exhibits `X` as this pullback.
    pub fn is_pullback_of(&self, k: &Functor, h: &Functor) -> Result<bool> {
        Ok(self.mediate(k, h)?.is_iso())
    }
}
