use std::sync::Arc;

use laxorth::awfs::{Fac, FactorizationSystem, IdentityFactorization};
use laxorth::coropf::Coropf;
use laxorth::fincat::text::Document;
use laxorth::fincat::{construct, Cat, CatRef, CommaCone, Functor, SearchLimit, TwoCategory};
use laxorth::simple::{simple_reflection_factor, split_product_reflection, InitCompletion, ReflectionMonad, Transferred};

use crate::report::Report;
use crate::Failure;

pub enum Handle {
    Coropf(Coropf),
    Init(Transferred<InitCompletion>),
    Identity(IdentityFactorization),
    Reflection(ReflectionMonad),
    /// Every reflection onto a full subcategory of a poset with at most this
    /// many elements; only meaningful for the `prop3` suite.
    AllPosets(usize),
}

fn reflection(desc: &str, doc: &Document) -> Result<Handle, Failure> {
    match desc {
        "chain" => {
            let c = construct::chain(3);
            let t = ReflectionMonad::onto("chain", &c, &[false, false, true]).expect("the top element is reflective");
            Ok(Handle::Reflection(t))
        }
        "split-product" => Ok(Handle::Reflection(split_product_reflection())),
        "all-posets" => Ok(Handle::AllPosets(4)),
        _ => {
            let (cat, objs) = desc
                .split_once(':')
                .ok_or_else(|| Failure(format!("unknown reflection `{desc}`; use chain, split-product, all-posets or <category>:<objects>")))?;
            let c = doc.category(cat).ok_or_else(|| Failure(format!("unknown category `{cat}`")))?;
            let mut subset = vec![false; c.num_objects()];
            for o in objs.split(',').filter(|s| !s.is_empty()) {
                let x = c.object_id(o).ok_or_else(|| Failure(format!("unknown object `{o}` of {cat}")))?;
                subset[x] = true;
            }
            let t = ReflectionMonad::onto(desc, c, &subset).ok_or_else(|| Failure(format!("{objs} is not reflective in {cat}")))?;
            t.validate()?;
            Ok(Handle::Reflection(t))
        }
    }
}

impl Handle {
    pub fn parse(name: &str, doc: &Document, limit: SearchLimit) -> Result<Handle, Failure> {
        match name {
            "coropf" => Ok(Handle::Coropf(Coropf::new(limit))),
            "init-completion" => Ok(Handle::Init(Transferred::new(InitCompletion, limit))),
            "identity" => Ok(Handle::Identity(IdentityFactorization { base: Cat::new(limit) })),
            _ => match name.strip_prefix("reflection:") {
                Some(desc) => reflection(desc, doc),
                None => Err(Failure(format!(
                    "unknown handle `{name}`; use coropf, init-completion, identity or reflection:<name>"
                ))),
            },
        }
    }

    pub fn factor(&self, morphism: &str, doc: &Document, rep: &mut Report) -> Result<(), Failure> {
        let functor = || doc.functor(morphism).cloned().ok_or_else(|| Failure(format!("unknown functor `{morphism}`")));
        match self {
            Handle::Coropf(s) => {
                let ff = list_factor(s, &functor()?, rep)?;
                list_cone(&ff.data, rep);
            }
            Handle::Init(s) => {
                let ff = list_factor(s, &functor()?, rep)?;
                list_cone(&ff.data, rep);
            }
            Handle::Identity(s) => {
                list_factor(s, &functor()?, rep)?;
            }
            Handle::Reflection(t) => {
                let c = &t.base;
                let f = c.arrow_id(morphism).ok_or_else(|| Failure(format!("unknown arrow `{morphism}` of {}", c.name())))?;
                let pf = simple_reflection_factor(t, f)?;
                rep.line(format!("Lf = {}", c.arrow_name(pf.left)));
                rep.line(format!("Kf = {}", c.object_name(pf.middle)));
                rep.line(format!("Rf = {}", c.arrow_name(pf.right)));
                rep.add("R o L = f", morphism, c.compose(pf.right, pf.left) == f, String::new);
                rep.add("T inverts L", morphism, t.inverts(pf.left), String::new);
            }
            Handle::AllPosets(_) => return Err(Failure("reflection:all-posets has no single factorisation".into())),
        }
        Ok(())
    }
}

fn list_category(c: &CatRef, rep: &mut Report) {
    rep.line(format!("Kf: {} objects, {} arrows", c.num_objects(), c.num_arrows()));
    for x in c.objects() {
        rep.line(format!("  object {}", c.object_name(x)));
    }
    for u in c.arrows().filter(|&u| !c.is_identity(u)) {
        rep.line(format!("  arrow {} : {} -> {}", c.arrow_name(u), c.object_name(c.dom(u)), c.object_name(c.cod(u))));
    }
}

fn list_factor<S>(s: &S, f: &Functor, rep: &mut Report) -> Result<Fac<S>, Failure>
where
    S: FactorizationSystem<Base = Cat>,
{
    let ff = s.factor(f)?;
    rep.line(format!("Lf = {}", ff.left.describe()));
    list_category(&ff.middle, rep);
    rep.line(format!("Rf = {}", ff.right.describe()));
    let ok = s.base().compose(&ff.right, &ff.left)? == *f;
    rep.add("R o L = f", &f.display_name(), ok, String::new);
    Ok(ff)
}

fn list_cone(cone: &Arc<CommaCone>, rep: &mut Report) {
    rep.line(format!("comma cone over {} and {}", cone.f.display_name(), cone.g.display_name()));
    rep.line(format!("  q = {}", cone.proj_left.describe()));
    let k = &cone.apex;
    let d = cone.cell.source().target();
    for x in k.objects() {
        rep.line(format!("  nu at {} = {}", k.object_name(x), d.arrow_name(cone.cell.component(x))));
    }
}
