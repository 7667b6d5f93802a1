use std::fmt;

use crate::error::{Error, Result};

use super::category::{ArrId, ObjId};
use super::functor::Functor;

/// A natural transformation `source => target` given by one component per
/// object of the common domain.
#[derive(Clone, PartialEq, Eq)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    components: Vec<ArrId>,
}

impl NatTrans {
    pub fn new(source: Functor, target: Functor, components: Vec<ArrId>) -> Result<Self> {
        let t = NatTrans::new_unchecked(source, target, components);
        t.check_shape()?;
        t.check_naturality()?;
        Ok(t)
    }

    /// No validation at all, not even in debug builds. Callers that accept
    /// user data run [`NatTrans::check_naturality`] themselves.
    pub fn new_unchecked(source: Functor, target: Functor, components: Vec<ArrId>) -> Self {
        NatTrans {
            source,
            target,
            components,
        }
    }

    pub fn identity(f: &Functor) -> Self {
        let t = f.target();
        let components = f.source().objects().map(|x| t.identity(f.obj(x))).collect();
        NatTrans::new_unchecked(f.clone(), f.clone(), components)
    }

    pub fn check_shape(&self) -> Result<()> {
        let (f, g) = (&self.source, &self.target);
        if *f.source() != *g.source() || *f.target() != *g.target() {
            return Err(Error::ShapeMismatch("transformation between non-parallel functors".into()));
        }
        let c = f.source();
        let d = f.target();
        if self.components.len() != c.num_objects() {
            return Err(Error::InvalidNatTrans("one component per object required".into()));
        }
        for x in c.objects() {
            let a = self.components[x];
            if a >= d.num_arrows() || d.dom(a) != f.obj(x) || d.cod(a) != g.obj(x) {
                return Err(Error::InvalidNatTrans(format!(
                    "component at `{}` has the wrong endpoints",
                    c.object_name(x)
                )));
            }
        }
        Ok(())
    }

    pub fn check_naturality(&self) -> Result<()> {
        let (f, g) = (&self.source, &self.target);
        let c = f.source();
        let d = f.target();
        for u in c.arrows() {
            let (x, y) = (c.dom(u), c.cod(u));
            if d.compose(g.arr(u), self.components[x]) != d.compose(self.components[y], f.arr(u)) {
                return Err(Error::InvalidNatTrans(format!("not natural at arrow `{}`", c.arrow_name(u))));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn component(&self, x: ObjId) -> ArrId {
        self.components[x]
    }

    pub fn components(&self) -> &[ArrId] {
        &self.components
    }

    pub fn is_identity(&self) -> bool {
        let d = self.source.target();
        self.source == self.target && self.components.iter().all(|&a| d.is_identity(a))
    }

    pub fn is_iso(&self) -> bool {
        let d = self.source.target();
        self.components.iter().all(|&a| d.is_iso(a))
    }

    pub fn inverse(&self) -> Option<NatTrans> {
        let d = self.source.target();
        let comps: Option<Vec<ArrId>> = self.components.iter().map(|&a| d.inverse(a)).collect();
        Some(NatTrans::new_unchecked(self.target.clone(), self.source.clone(), comps?))
    }

    /// Vertical composite `other o self`.
    pub fn then(&self, other: &NatTrans) -> Result<NatTrans> {
        if self.target != other.source {
            return Err(Error::ShapeMismatch("vertical composite of non-matching transformations".into()));
        }
        let d = self.source.target();
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| d.compose(b, a))
            .collect();
        Ok(NatTrans::new_unchecked(self.source.clone(), other.target.clone(), components))
    }

    /// Whiskering `h . self`, a transformation `h o F => h o G`.
    pub fn whisker_left(&self, h: &Functor) -> Result<NatTrans> {
        let source = h.after(&self.source)?;
        let target = h.after(&self.target)?;
        let components = self.components.iter().map(|&a| h.arr(a)).collect();
        Ok(NatTrans::new_unchecked(source, target, components))
    }

    /// Whiskering `self . k`, a transformation `F o k => G o k`.
    pub fn whisker_right(&self, k: &Functor) -> Result<NatTrans> {
        let source = self.source.after(k)?;
        let target = self.target.after(k)?;
        let components = k.obj_map().iter().map(|&x| self.components[x]).collect();
        Ok(NatTrans::new_unchecked(source, target, components))
    }
}

impl fmt::Debug for NatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.source.target();
        let names: Vec<&str> = self.components.iter().map(|&a| d.arrow_name(a)).collect();
        write!(
            f,
            "NatTrans({} => {}: {:?})",
            self.source.display_name(),
            self.target.display_name(),
            names
        )
    }
}
