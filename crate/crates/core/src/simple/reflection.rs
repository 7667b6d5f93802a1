//! Idempotent monads on one finite category and the factorisation they
//! induce through pullbacks of units.

use crate::awfs::{Fac, Factorization, FactorizationSystem};
use crate::error::{Error, Result};
use crate::fincat::construct::poset;
use crate::fincat::{ArrId, ArrowSig, CatRef, FinCategory, Local, ObjId};
use crate::report::{CheckReport, Verdict};

/// A monad `(T, i, m)` on a finite category `C`, stored as maps on objects
/// and arrows plus the unit and multiplication components.
#[derive(Clone, Debug)]
pub struct ReflectionMonad {
    pub name: String,
    pub base: CatRef,
    pub obj: Vec<ObjId>,
    pub arr: Vec<ArrId>,
    pub unit: Vec<ArrId>,
    pub mult: Vec<ArrId>,
}

impl ReflectionMonad {
    pub fn identity(name: &str, c: &CatRef) -> Self {
        ReflectionMonad {
            name: name.into(),
            base: c.clone(),
            obj: c.objects().collect(),
            arr: c.arrows().collect(),
            unit: c.objects().map(|x| c.identity(x)).collect(),
            mult: c.objects().map(|x| c.identity(x)).collect(),
        }
    }

    /// The reflection onto the full subcategory on `subset`, if every object
    /// has a reflection. Objects of the subcategory reflect to themselves.
    pub fn onto(name: &str, c: &CatRef, subset: &[bool]) -> Option<Self> {
        let mut obj = vec![0; c.num_objects()];
        let mut unit = vec![0; c.num_objects()];
        for x in c.objects() {
            if subset[x] {
                obj[x] = x;
                unit[x] = c.identity(x);
                continue;
            }
            let (r, eta) = c.objects().filter(|&s| subset[s]).find_map(|r| {
                c.hom(x, r)
                    .iter()
                    .copied()
                    .find(|&eta| is_reflection_arrow(c, subset, eta))
                    .map(|eta| (r, eta))
            })?;
            obj[x] = r;
            unit[x] = eta;
        }
        let mut arr = Vec::with_capacity(c.num_arrows());
        for u in c.arrows() {
            let (x, y) = (c.dom(u), c.cod(u));
            let target = c.compose(unit[y], u);
            let m = c.hom(obj[x], obj[y]).iter().copied().find(|&m| c.compose(m, unit[x]) == target)?;
            arr.push(m);
        }
        let mult = obj.iter().map(|&r| c.identity(r)).collect();
        Some(ReflectionMonad {
            name: name.into(),
            base: c.clone(),
            obj,
            arr,
            unit,
            mult,
        })
    }

    /// Functoriality, naturality of unit and multiplication, the monad laws
    /// and invertibility of the multiplication.
    pub fn validate(&self) -> Result<()> {
        let c = &self.base;
        let bad = |s: &str| Err(Error::InvalidFunctor(format!("{}: {s}", self.name)));
        for x in c.objects() {
            if self.arr[c.identity(x)] != c.identity(self.obj[x]) {
                return bad("identity not preserved");
            }
            let (tx, ttx) = (self.obj[x], self.obj[self.obj[x]]);
            if c.dom(self.unit[x]) != x || c.cod(self.unit[x]) != tx || c.dom(self.mult[x]) != ttx || c.cod(self.mult[x]) != tx {
                return bad("components have the wrong type");
            }
            if c.compose(self.mult[x], self.unit[tx]) != c.identity(tx)
                || c.compose(self.mult[x], self.arr[self.unit[x]]) != c.identity(tx)
            {
                return bad("unit law fails");
            }
            if c.compose(self.mult[x], self.arr[self.mult[x]]) != c.compose(self.mult[x], self.mult[tx]) {
                return bad("associativity fails");
            }
            if !c.is_iso(self.mult[x]) {
                return bad("multiplication is not invertible");
            }
        }
        for (g, f, h) in c.composites() {
            if self.arr[h] != c.compose(self.arr[g], self.arr[f]) {
                return bad("composite not preserved");
            }
        }
        for u in c.arrows() {
            let (x, y) = (c.dom(u), c.cod(u));
            if c.compose(self.arr[u], self.unit[x]) != c.compose(self.unit[y], u) {
                return bad("unit not natural");
            }
            if c.compose(self.arr[u], self.mult[x]) != c.compose(self.mult[y], self.arr[self.arr[u]]) {
                return bad("multiplication not natural");
            }
        }
        Ok(())
    }

    pub fn inverts(&self, u: ArrId) -> bool {
        self.base.is_iso(self.arr[u])
    }
}

fn is_reflection_arrow(c: &CatRef, subset: &[bool], eta: ArrId) -> bool {
    let (x, r) = (c.dom(eta), c.cod(eta));
    c.objects().filter(|&s| subset[s]).all(|s| {
        c.hom(x, s)
            .iter()
            .all(|&u| c.hom(r, s).iter().filter(|&&m| c.compose(m, eta) == u).count() == 1)
    })
}

/// A pullback `(P, p1: P -> dom f, p2: P -> dom g)` of `f` and `g`, the first
/// in search order, if one exists.
pub fn find_pullback(c: &CatRef, f: ArrId, g: ArrId) -> Option<(ObjId, ArrId, ArrId)> {
    let (a, b) = (c.dom(f), c.dom(g));
    debug_assert_eq!(c.cod(f), c.cod(g));
    let cones = |p: ObjId| -> Vec<(ArrId, ArrId)> {
        let mut v = Vec::new();
        for &p1 in c.hom(p, a) {
            for &p2 in c.hom(p, b) {
                if c.compose(f, p1) == c.compose(g, p2) {
                    v.push((p1, p2));
                }
            }
        }
        v
    };
    let all: Vec<(ObjId, Vec<(ArrId, ArrId)>)> = c.objects().map(|q| (q, cones(q))).collect();
    for (p, ps) in &all {
        for &(p1, p2) in ps {
            let universal = all.iter().all(|(q, qs)| {
                qs.iter().all(|&(q1, q2)| {
                    c.hom(*q, *p)
                        .iter()
                        .filter(|&&m| c.compose(p1, m) == q1 && c.compose(p2, m) == q2)
                        .count()
                        == 1
                })
            });
            if universal {
                return Some((*p, p1, p2));
            }
        }
    }
    None
}

/// The factorisation `f = p1 o l` through the pullback `Kf` of the unit
/// `i_y` along `T(f)`, with `p2: Kf -> T(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackFactor {
    pub middle: ObjId,
    pub left: ArrId,
    pub right: ArrId,
    pub to_tx: ArrId,
}

pub fn pullback_factor(t: &ReflectionMonad, f: ArrId) -> Result<PullbackFactor> {
    let c = &t.base;
    let (x, y) = (c.dom(f), c.cod(f));
    let (p, p1, p2) = find_pullback(c, t.unit[y], t.arr[f])
        .ok_or_else(|| Error::MissingPullback(c.arrow_name(f).to_string()))?;
    let l = c
        .hom(x, p)
        .iter()
        .copied()
        .find(|&l| c.compose(p1, l) == f && c.compose(p2, l) == t.unit[x])
        .expect("pullback mediates");
    Ok(PullbackFactor {
        middle: p,
        left: l,
        right: p1,
        to_tx: p2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub verdict: Verdict,
    pub arrows: CheckReport,
    pub witness: Option<String>,
}

fn overall(r: &CheckReport) -> Verdict {
    if r.count(Verdict::Fail) > 0 {
        Verdict::Fail
    } else if r.count(Verdict::Unsupported) > 0 {
        Verdict::Unsupported
    } else {
        Verdict::Pass
    }
}

/// Whether `T(l)` is invertible for the comparison `l` of every arrow.
/// Arrows whose pullback is missing are reported as unsupported.
pub fn is_simple_reflection(t: &ReflectionMonad) -> SimplicityReport {
    let c = &t.base;
    let mut r = CheckReport::new();
    let mut witness = None;
    for f in c.arrows() {
        let subj = c.arrow_name(f);
        match pullback_factor(t, f) {
            Ok(pf) => {
                let ok = t.inverts(pf.left);
                if !ok && witness.is_none() {
                    witness = Some(subj.to_string());
                }
                r.record("T inverts the comparison", subj, ok, || format!("T({}) is not invertible", c.arrow_name(pf.left)));
            }
            Err(e) => r.unsupported("T inverts the comparison", subj, e.to_string()),
        }
    }
    SimplicityReport {
        verdict: overall(&r),
        arrows: r,
        witness,
    }
}

/// Whether every arrow `f` has a coreflection into the arrows inverted by
/// `T`: an inverted `g` with a square `(h, k): g -> f` through which every
/// square from an inverted arrow factors uniquely.
pub fn t_iso_coreflective(t: &ReflectionMonad) -> SimplicityReport {
    let c = &t.base;
    let inverted: Vec<ArrId> = c.arrows().filter(|&u| t.inverts(u)).collect();
    let squares = |g: ArrId, f: ArrId| -> Vec<(ArrId, ArrId)> {
        let mut v = Vec::new();
        for &h in c.hom(c.dom(g), c.dom(f)) {
            for &k in c.hom(c.cod(g), c.cod(f)) {
                if c.compose(f, h) == c.compose(k, g) {
                    v.push((h, k));
                }
            }
        }
        v
    };
    let mut r = CheckReport::new();
    let mut witness = None;
    for f in c.arrows() {
        let found = inverted.iter().any(|&g| {
            squares(g, f).into_iter().any(|(h, k)| {
                inverted.iter().all(|&g2| {
                    squares(g2, f).into_iter().all(|(h2, k2)| {
                        squares(g2, g)
                            .into_iter()
                            .filter(|&(m, n)| c.compose(h, m) == h2 && c.compose(k, n) == k2)
                            .count()
                            == 1
                    })
                })
            })
        });
        if !found && witness.is_none() {
            witness = Some(c.arrow_name(f).to_string());
        }
        r.record("coreflection into T-inverted arrows", c.arrow_name(f), found, || "no coreflection".into());
    }
    SimplicityReport {
        verdict: overall(&r),
        arrows: r,
        witness,
    }
}

/// Whether the simplicity verdict matches the coreflectivity verdict. When
/// some pullback is missing the comparison is reported as unsupported.
pub fn check_simplicity_agreement(t: &ReflectionMonad) -> CheckReport {
    let mut r = CheckReport::new();
    let simple = is_simple_reflection(t);
    let missing = simple.arrows.count(Verdict::Unsupported);
    if missing > 0 {
        let seen = match &simple.witness {
            Some(w) => format!("; not simple at {w}"),
            None => String::new(),
        };
        r.unsupported("simplicity matches T-Iso coreflectivity", &t.name, format!("{missing} pullbacks missing{seen}"));
        return r;
    }
    let cor = t_iso_coreflective(t);
    r.record("simplicity matches T-Iso coreflectivity", &t.name, simple.verdict == cor.verdict, || {
        format!("simple: {:?} ({:?}), coreflective: {:?} ({:?})", simple.verdict, simple.witness, cor.verdict, cor.witness)
    });
    r
}

/// The orthogonal factorisation of a simple reflection.
#[derive(Clone, Debug)]
pub struct ReflectionHandle {
    pub monad: ReflectionMonad,
    pub base: Local,
}

impl ReflectionHandle {
    pub fn new(monad: ReflectionMonad) -> Result<Self> {
        monad.validate()?;
        let rep = is_simple_reflection(&monad);
        if rep.verdict != Verdict::Pass {
            return Err(Error::NotSimple(format!(
                "{}: {}",
                monad.name,
                rep.witness.unwrap_or_else(|| "pullbacks missing".into())
            )));
        }
        let base = Local::new(monad.base.clone());
        Ok(ReflectionHandle { monad, base })
    }
}

pub fn simple_reflection_factor(t: &ReflectionMonad, f: ArrId) -> Result<PullbackFactor> {
    let pf = pullback_factor(t, f)?;
    if !t.inverts(pf.left) {
        return Err(Error::NotSimple(format!("T does not invert the comparison of {}", t.base.arrow_name(f))));
    }
    Ok(pf)
}

impl FactorizationSystem for ReflectionHandle {
    type Base = Local;
    type Data = ArrId;

    fn name(&self) -> String {
        format!("reflection:{}", self.monad.name)
    }

    fn base(&self) -> &Local {
        &self.base
    }

    fn factor(&self, f: &ArrId) -> Result<Fac<Self>> {
        let pf = simple_reflection_factor(&self.monad, *f)?;
        Ok(Factorization::new(*f, pf.left, pf.middle, pf.right, pf.to_tx))
    }

    fn on_square(&self, ff: &Fac<Self>, fg: &Fac<Self>, h: &ArrId, k: &ArrId) -> Result<ArrId> {
        let c = &self.monad.base;
        let a = c.compose(*k, ff.right);
        let b = c.compose(self.monad.arr[*h], ff.data);
        let ms: Vec<ArrId> = c
            .hom(ff.middle, fg.middle)
            .iter()
            .copied()
            .filter(|&m| c.compose(fg.right, m) == a && c.compose(fg.data, m) == b)
            .collect();
        match ms.as_slice() {
            [m] => Ok(*m),
            _ => Err(Error::NotAPullback(format!("{} mediating arrows", ms.len()))),
        }
    }

    fn on_cell(&self, ff: &Fac<Self>, fg: &Fac<Self>, alpha: &ArrId, beta: &ArrId) -> Result<ArrId> {
        self.on_square(ff, fg, alpha, beta)
    }

    fn comultiplication(&self, _ff: &Fac<Self>, flf: &Fac<Self>) -> Result<ArrId> {
        self.monad
            .base
            .inverse(flf.right)
            .ok_or_else(|| Error::NotSimple("R(Lf) is not invertible".into()))
    }

    fn multiplication(&self, ff: &Fac<Self>, frf: &Fac<Self>) -> Result<ArrId> {
        let _ = ff;
        self.monad
            .base
            .inverse(frf.left)
            .ok_or_else(|| Error::NotSimple("L(Rf) is not invertible".into()))
    }
}

/// Every partial order on `0..n`, as `leq[i][j]`, in a fixed order.
pub fn labelled_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                leq[i][j] = true;
            }
        }
        let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(leq[i][j] && leq[j][i])));
        let trans = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq[i][j] && leq[j][k]) || leq[i][k])));
        if antisym && trans {
            out.push(leq);
        }
    }
    out
}

/// Every reflection onto a full subcategory of every poset with at most
/// `max` elements.
pub fn poset_reflections(max: usize) -> Vec<ReflectionMonad> {
    let mut out = Vec::new();
    for n in 1..=max {
        for (pi, leq) in labelled_posets(n).into_iter().enumerate() {
            let c = poset(&format!("P{n}.{pi}"), n, |i, j| leq[i][j]).unwrap();
            for mask in 1u32..(1 << n) {
                let subset: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
                if let Some(t) = ReflectionMonad::onto(&format!("P{n}.{pi}/{mask:b}"), &c, &subset) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// A category where `r` splits an idempotent onto `s`, `1` is terminal and
/// `r` is the product of `y` and `s` (projections `p1` and `p`).
pub fn split_product_category() -> CatRef {
    let sig = |name: &str, dom: usize, cod: usize| ArrowSig {
        name: name.into(),
        dom,
        cod,
    };
    let arrows = vec![
        sig("id_s", 0, 0),
        sig("id_r", 1, 1),
        sig("id_y", 2, 2),
        sig("id_1", 3, 3),
        sig("i", 0, 1),
        sig("p", 1, 0),
        sig("e", 1, 1),
        sig("!s", 0, 3),
        sig("!r", 1, 3),
        sig("!y", 2, 3),
        sig("f", 0, 2),
        sig("p1", 1, 2),
        sig("fp", 1, 2),
    ];
    let dom = [0, 1, 2, 3, 0, 1, 1, 0, 1, 2, 0, 1, 1];
    let c = FinCategory::from_parts(
        "SplitProduct",
        ["s", "r", "y", "1"].iter().map(|x| x.to_string()).collect(),
        arrows,
        vec![0, 1, 2, 3],
        |g, f| match (g, f) {
            (0..=3, f) => Some(f),
            (g, 0..=3) => Some(g),
            (7..=9, f) => Some(7 + dom[f]),
            (5, 4) => Some(0),
            (4, 5) | (6, 6) => Some(6),
            (6, 4) => Some(4),
            (5, 6) => Some(5),
            (10, 5) | (11, 6) | (12, 6) => Some(12),
            (11, 4) | (12, 4) => Some(10),
            _ => None,
        },
    )
    .expect("composition table is a category");
    std::sync::Arc::new(c)
}

/// The reflection of [`split_product_category`] onto `{s, r, 1}`. The
/// comparison for `f: s -> y` is `i`, which is not inverted.
pub fn split_product_reflection() -> ReflectionMonad {
    let c = split_product_category();
    ReflectionMonad::onto("SplitProduct/{s,r,1}", &c, &[true, true, false, true]).expect("{s, r, 1} is reflective")
}
