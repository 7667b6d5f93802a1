//! 2-monads on finite categories given pointwise: completion under an
//! initial object, its truncated iterate, and a broken variant for tests.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{search_functors, ArrId, ArrowSig, CatRef, FinCategory, Functor, NatTrans, ObjId, SearchLimit};
use crate::report::CheckReport;

pub trait CatMonad: Send + Sync {
    fn name(&self) -> String;
    /// `T(A)`.
    fn apply(&self, a: &CatRef) -> Result<CatRef>;
    /// `i_A: A -> T(A)`.
    fn unit(&self, a: &CatRef) -> Result<Functor>;
    /// `m_A: T(T(A)) -> T(A)`.
    fn mult(&self, a: &CatRef) -> Result<Functor>;
    /// `T(f)`.
    fn map(&self, f: &Functor) -> Result<Functor>;
    /// `T(alpha)`.
    fn map_cell(&self, t: &NatTrans) -> Result<NatTrans>;
}

fn sig(name: String, dom: ObjId, cod: ObjId) -> ArrowSig {
    ArrowSig { name, dom, cod }
}

/// Adds a strict initial object to a category. The new object is listed
/// first and named `⊥` (with primes appended if that name is taken); its
/// arrows are `id_⊥` and `⊥→x`.
#[derive(Clone, Copy, Debug, Default)]
pub struct InitCompletion;

impl InitCompletion {
    fn bottom_name(a: &FinCategory) -> String {
        let mut b = "⊥".to_string();
        loop {
            let clash = a.object_id(&b).is_some()
                || a.arrow_id(&format!("id_{b}")).is_some()
                || a.objects().any(|x| a.arrow_id(&format!("{b}→{}", a.object_name(x))).is_some());
            if !clash {
                return b;
            }
            b.push('\'');
        }
    }

    /// The adjoined object of `T(A)`.
    pub fn bottom(_a: &CatRef) -> ObjId {
        0
    }

    /// The arrow `⊥→x` of `T(A)` for `x` an object of `A`.
    pub fn bang(a: &FinCategory, x: ObjId) -> ArrId {
        1 + a.num_arrows() + x
    }
}

/// `init_completion(A)`.
pub fn init_completion(a: &CatRef) -> CatRef {
    InitCompletion.apply(a).expect("completion of a valid category")
}

impl CatMonad for InitCompletion {
    fn name(&self) -> String {
        "init-completion".into()
    }

    fn apply(&self, a: &CatRef) -> Result<CatRef> {
        let b = Self::bottom_name(a);
        let na = a.num_arrows();
        let mut objects = vec![b.clone()];
        objects.extend(a.object_names().iter().cloned());
        let mut arrows = vec![sig(format!("id_{b}"), 0, 0)];
        arrows.extend(a.arrow_sigs().iter().map(|s| sig(s.name.clone(), s.dom + 1, s.cod + 1)));
        arrows.extend(a.objects().map(|x| sig(format!("{b}→{}", a.object_name(x)), 0, x + 1)));
        let mut identity = vec![0];
        identity.extend(a.objects().map(|x| 1 + a.identity(x)));
        let name = format!("T({})", a.name());
        let c = FinCategory::from_parts(name, objects, arrows, identity, |g, f| {
            if f == 0 {
                return Some(g);
            }
            if g == 0 {
                return None;
            }
            match (g <= na, f <= na) {
                (true, true) => Some(1 + a.compose(g - 1, f - 1)),
                (true, false) => Some(1 + na + a.cod(g - 1)),
                _ => None,
            }
        })?;
        Ok(Arc::new(c))
    }

    fn unit(&self, a: &CatRef) -> Result<Functor> {
        let ta = self.apply(a)?;
        Ok(Functor::new_unchecked(
            a.clone(),
            ta,
            a.objects().map(|x| x + 1).collect(),
            a.arrows().map(|u| u + 1).collect(),
        )
        .named(format!("i_{}", a.name())))
    }

    fn mult(&self, a: &CatRef) -> Result<Functor> {
        let ta = self.apply(a)?;
        let tta = self.apply(&ta)?;
        let nta = ta.num_arrows();
        let na = a.num_arrows();
        let obj = tta.objects().map(|y| y.saturating_sub(1)).collect();
        let arr = tta
            .arrows()
            .map(|w| {
                if w == 0 {
                    0
                } else if w <= nta {
                    w - 1
                } else {
                    let y = w - 1 - nta;
                    if y == 0 {
                        0
                    } else {
                        1 + na + (y - 1)
                    }
                }
            })
            .collect();
        Ok(Functor::new_unchecked(tta, ta, obj, arr).named(format!("m_{}", a.name())))
    }

    fn map(&self, f: &Functor) -> Result<Functor> {
        let (a, b) = (f.source(), f.target());
        let (ta, tb) = (self.apply(a)?, self.apply(b)?);
        let (na, nb) = (a.num_arrows(), b.num_arrows());
        let mut obj = vec![0];
        obj.extend(a.objects().map(|x| f.obj(x) + 1));
        let mut arr = vec![0];
        arr.extend(a.arrows().map(|u| f.arr(u) + 1));
        arr.extend(a.objects().map(|x| 1 + nb + f.obj(x)));
        debug_assert_eq!(arr.len(), 1 + na + a.num_objects());
        Ok(Functor::new_unchecked(ta, tb, obj, arr).named(format!("T({})", f.display_name())))
    }

    fn map_cell(&self, t: &NatTrans) -> Result<NatTrans> {
        let (src, tgt) = (self.map(t.source())?, self.map(t.target())?);
        let mut comps = vec![0];
        comps.extend(t.components().iter().map(|&c| c + 1));
        Ok(NatTrans::new_unchecked(src, tgt, comps))
    }
}

/// Completion under a chain of `depth` initial levels: objects `(a,n)` for
/// `0 <= n <= depth`, where every `(a,n)` with `n > 0` is initial and has no
/// arrows into it from level 0. The multiplication adds levels and caps at
/// `depth`.
#[derive(Clone, Copy, Debug)]
pub struct TruncatedDeltaEmpty {
    pub depth: usize,
}

impl TruncatedDeltaEmpty {
    pub fn new(depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::Unsupported("depth must be at least 1".into()));
        }
        Ok(TruncatedDeltaEmpty { depth })
    }

    /// Object `(a, n)` of `T(A)`.
    pub fn level(&self, a: &FinCategory, x: ObjId, n: usize) -> ObjId {
        n * a.num_objects() + x
    }

    fn size(&self, a: &FinCategory) -> usize {
        a.num_objects() * (self.depth + 1)
    }

    /// The unique arrow of `T(A)` out of the initial object `s` into `t`.
    pub fn bang(&self, a: &FinCategory, s: ObjId, t: ObjId) -> ArrId {
        let no = a.num_objects();
        debug_assert!(s >= no);
        a.num_arrows() + (s - no) * self.size(a) + t
    }
}

impl CatMonad for TruncatedDeltaEmpty {
    fn name(&self) -> String {
        format!("delta-empty/{}", self.depth)
    }

    fn apply(&self, a: &CatRef) -> Result<CatRef> {
        let no = a.num_objects();
        let na = a.num_arrows();
        let size = self.size(a);
        let objects: Vec<String> = (0..size)
            .map(|i| format!("({},{})", a.object_name(i % no), i / no))
            .collect();
        let mut arrows: Vec<ArrowSig> = a.arrow_sigs().to_vec();
        for s in no..size {
            for t in 0..size {
                let name = if s == t {
                    format!("id_{}", objects[s])
                } else {
                    format!("!{}→{}", objects[s], objects[t])
                };
                arrows.push(sig(name, s, t));
            }
        }
        let mut identity: Vec<ArrId> = a.objects().map(|x| a.identity(x)).collect();
        identity.extend((no..size).map(|s| na + (s - no) * size + s));
        let this = *self;
        let c = FinCategory::from_parts(format!("T{}({})", self.depth, a.name()), objects, arrows.clone(), identity, |g, f| {
            let cod = arrows[g].cod;
            if f < na {
                (g < na).then(|| a.compose(g, f))
            } else {
                Some(this.bang(a, arrows[f].dom, cod))
            }
        })?;
        Ok(Arc::new(c))
    }

    fn unit(&self, a: &CatRef) -> Result<Functor> {
        let ta = self.apply(a)?;
        Ok(Functor::new_unchecked(a.clone(), ta, a.objects().collect(), a.arrows().collect()).named(format!("i_{}", a.name())))
    }

    fn mult(&self, a: &CatRef) -> Result<Functor> {
        let ta = self.apply(a)?;
        let tta = self.apply(&ta)?;
        let no = a.num_objects();
        let nt = ta.num_objects();
        let m = |y: ObjId| -> ObjId {
            let (x, k) = (y % nt, y / nt);
            if k == 0 {
                x
            } else {
                let (b, n) = (x % no, x / no);
                (n + k).min(self.depth) * no + b
            }
        };
        let obj: Vec<ObjId> = tta.objects().map(m).collect();
        let arr = tta
            .arrows()
            .map(|w| {
                if w < ta.num_arrows() {
                    w
                } else {
                    self.bang(a, obj[tta.dom(w)], obj[tta.cod(w)])
                }
            })
            .collect();
        Ok(Functor::new_unchecked(tta, ta, obj, arr).named(format!("m_{}", a.name())))
    }

    fn map(&self, f: &Functor) -> Result<Functor> {
        let (a, b) = (f.source(), f.target());
        let (ta, tb) = (self.apply(a)?, self.apply(b)?);
        let (no, nbo) = (a.num_objects(), b.num_objects());
        let obj: Vec<ObjId> = ta.objects().map(|y| (y / no) * nbo + f.obj(y % no)).collect();
        let arr = ta
            .arrows()
            .map(|w| {
                if w < a.num_arrows() {
                    f.arr(w)
                } else {
                    self.bang(b, obj[ta.dom(w)], obj[ta.cod(w)])
                }
            })
            .collect();
        Ok(Functor::new_unchecked(ta, tb, obj, arr).named(format!("T({})", f.display_name())))
    }

    fn map_cell(&self, t: &NatTrans) -> Result<NatTrans> {
        let (src, tgt) = (self.map(t.source())?, self.map(t.target())?);
        let b = t.source().target();
        let no = t.source().source().num_objects();
        let comps = src
            .source()
            .objects()
            .map(|y| {
                if y < no {
                    t.component(y)
                } else {
                    self.bang(b, src.obj(y), tgt.obj(y))
                }
            })
            .collect();
        Ok(NatTrans::new_unchecked(src, tgt, comps))
    }
}

/// The initial-object completion with its multiplication replaced by the
/// constant functor at the adjoined object.
#[derive(Clone, Copy, Debug, Default)]
pub struct CorruptedMultiplication;

impl CatMonad for CorruptedMultiplication {
    fn name(&self) -> String {
        "init-completion/corrupt-m".into()
    }

    fn apply(&self, a: &CatRef) -> Result<CatRef> {
        InitCompletion.apply(a)
    }

    fn unit(&self, a: &CatRef) -> Result<Functor> {
        InitCompletion.unit(a)
    }

    fn mult(&self, a: &CatRef) -> Result<Functor> {
        let m = InitCompletion.mult(a)?;
        Ok(Functor::constant(m.source(), m.target(), 0).named(format!("m'_{}", a.name())))
    }

    fn map(&self, f: &Functor) -> Result<Functor> {
        InitCompletion.map(f)
    }

    fn map_cell(&self, t: &NatTrans) -> Result<NatTrans> {
        InitCompletion.map_cell(t)
    }
}

/// Unit, associativity and naturality of `T` at `A`, naturality tested along
/// the supplied functors out of `A`.
pub fn check_cat_monad_laws(t: &dyn CatMonad, a: &CatRef, along: &[Functor]) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    let subj = format!("{} at {}", t.name(), a.name());
    let ta = t.apply(a)?;
    ta.check_laws()?;
    let i = t.unit(a)?;
    let m = t.mult(a)?;
    let id = Functor::identity(&ta);
    r.record("m o T(i) = 1", &subj, m.after(&t.map(&i)?)? == id, || "left unit fails".into());
    r.record("m o i_T = 1", &subj, m.after(&t.unit(&ta)?)? == id, || "right unit fails".into());
    let mt = t.mult(&ta)?;
    r.record("m o T(m) = m o m_T", &subj, m.after(&t.map(&m)?)? == m.after(&mt)?, || "associativity fails".into());
    for f in along {
        let b = f.target();
        let ok = t.map(f)?.after(&i)? == t.unit(b)?.after(f)?;
        r.record("i natural", &subj, ok, || format!("along {}", f.display_name()));
        let tf = t.map(f)?;
        let ok = tf.after(&m)? == t.mult(b)?.after(&t.map(&tf)?)?;
        r.record("m natural", &subj, ok, || format!("along {}", f.display_name()));
    }
    Ok(r)
}

/// Every `T`-algebra structure `a: T(A) -> A`.
pub fn monad_algebras(t: &dyn CatMonad, a: &CatRef, limit: SearchLimit) -> Result<Vec<Functor>> {
    let i = t.unit(a)?;
    let ta = t.apply(a)?;
    let mut pin_o = vec![None; ta.num_objects()];
    let mut pin_a = vec![None; ta.num_arrows()];
    for x in a.objects() {
        pin_o[i.obj(x)] = Some(x);
    }
    for u in a.arrows() {
        pin_a[i.arr(u)] = Some(u);
    }
    let mut cands = Vec::new();
    search_functors(
        &ta,
        a,
        limit,
        |y, x| pin_o[y].map_or(true, |z| z == x),
        |w, u| pin_a[w].map_or(true, |z| z == u),
        |s| {
            cands.push(s);
            true
        },
    )?;
    let m = t.mult(a)?;
    let mut out = Vec::new();
    for s in cands {
        if s.after(&m)? == s.after(&t.map(&s)?)? {
            out.push(s);
        }
    }
    Ok(out)
}
