use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::category::{ArrId, FinCategory, ObjId};

pub type CatRef = Arc<FinCategory>;

/// A functor between finite categories, stored as its object and arrow maps.
///
/// Equality compares the source, target and both maps; the label is only
/// used for display.
#[derive(Clone)]
pub struct Functor {
    label: String,
    source: CatRef,
    target: CatRef,
    obj_map: Vec<ObjId>,
    arr_map: Vec<ArrId>,
}

impl Functor {
    pub fn new(source: CatRef, target: CatRef, obj_map: Vec<ObjId>, arr_map: Vec<ArrId>) -> Result<Self> {
        let f = Functor::new_unchecked(source, target, obj_map, arr_map);
        f.check()?;
        Ok(f)
    }

    /// Skips validation. Used by constructions that are correct by design;
    /// debug builds still validate.
    pub fn new_unchecked(source: CatRef, target: CatRef, obj_map: Vec<ObjId>, arr_map: Vec<ArrId>) -> Self {
        let f = Functor {
            label: String::new(),
            source,
            target,
            obj_map,
            arr_map,
        };
        debug_assert!(f.check().is_ok(), "invalid functor: {:?}", f.check());
        f
    }

    /// Builds a functor from name pairs. Identity arrows map to identities
    /// unless listed.
    pub fn from_names(source: CatRef, target: CatRef, objects: &[(&str, &str)], arrows: &[(&str, &str)]) -> Result<Self> {
        let mut obj_map = vec![usize::MAX; source.num_objects()];
        for (a, b) in objects {
            let x = source.object_id(a).ok_or_else(|| Error::UnknownObject(a.to_string()))?;
            let y = target.object_id(b).ok_or_else(|| Error::UnknownObject(b.to_string()))?;
            obj_map[x] = y;
        }
        if let Some(x) = obj_map.iter().position(|&y| y == usize::MAX) {
            return Err(Error::InvalidFunctor(format!("object `{}` is not mapped", source.object_name(x))));
        }
        let mut arr_map = vec![usize::MAX; source.num_arrows()];
        for x in source.objects() {
            arr_map[source.identity(x)] = target.identity(obj_map[x]);
        }
        for (u, v) in arrows {
            let f = source.arrow_id(u).ok_or_else(|| Error::UnknownArrow(u.to_string()))?;
            let g = target.arrow_id(v).ok_or_else(|| Error::UnknownArrow(v.to_string()))?;
            arr_map[f] = g;
        }
        if let Some(f) = arr_map.iter().position(|&g| g == usize::MAX) {
            return Err(Error::InvalidFunctor(format!("arrow `{}` is not mapped", source.arrow_name(f))));
        }
        Functor::new(source, target, obj_map, arr_map)
    }

    pub fn identity(c: &CatRef) -> Self {
        Functor::new_unchecked(c.clone(), c.clone(), c.objects().collect(), c.arrows().collect())
    }

    /// The functor sending everything to `y` and its identity.
    pub fn constant(source: &CatRef, target: &CatRef, y: ObjId) -> Self {
        let id = target.identity(y);
        Functor::new_unchecked(
            source.clone(),
            target.clone(),
            vec![y; source.num_objects()],
            vec![id; source.num_arrows()],
        )
    }

    pub fn check(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.obj_map.len() != s.num_objects() || self.arr_map.len() != s.num_arrows() {
            return Err(Error::InvalidFunctor("map sizes do not match the source".into()));
        }
        if self.obj_map.iter().any(|&y| y >= t.num_objects()) || self.arr_map.iter().any(|&g| g >= t.num_arrows()) {
            return Err(Error::InvalidFunctor("map leaves the target".into()));
        }
        for f in s.arrows() {
            let g = self.arr_map[f];
            if t.dom(g) != self.obj_map[s.dom(f)] || t.cod(g) != self.obj_map[s.cod(f)] {
                return Err(Error::InvalidFunctor(format!("arrow `{}` lands on the wrong endpoints", s.arrow_name(f))));
            }
        }
        for x in s.objects() {
            if self.arr_map[s.identity(x)] != t.identity(self.obj_map[x]) {
                return Err(Error::InvalidFunctor(format!("identity of `{}` is not preserved", s.object_name(x))));
            }
        }
        for (g, f, h) in s.composites() {
            if t.compose(self.arr_map[g], self.arr_map[f]) != self.arr_map[h] {
                return Err(Error::InvalidFunctor(format!(
                    "composite `{}` o `{}` is not preserved",
                    s.arrow_name(g),
                    s.arrow_name(f)
                )));
            }
        }
        Ok(())
    }

    pub fn named(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> &CatRef {
        &self.source
    }

    pub fn target(&self) -> &CatRef {
        &self.target
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x]
    }

    pub fn arr(&self, f: ArrId) -> ArrId {
        self.arr_map[f]
    }

    pub fn obj_map(&self) -> &[ObjId] {
        &self.obj_map
    }

    pub fn arr_map(&self) -> &[ArrId] {
        &self.arr_map
    }

    /// `self o f`.
    pub fn after(&self, f: &Functor) -> Result<Functor> {
        if *f.target != *self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} after {}: `{}` vs `{}`",
                self.display_name(),
                f.display_name(),
                f.target.name(),
                self.source.name()
            )));
        }
        Ok(Functor {
            label: String::new(),
            source: f.source.clone(),
            target: self.target.clone(),
            obj_map: f.obj_map.iter().map(|&x| self.obj_map[x]).collect(),
            arr_map: f.arr_map.iter().map(|&a| self.arr_map[a]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        *self.source == *self.target
            && self.obj_map.iter().enumerate().all(|(i, &x)| i == x)
            && self.arr_map.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Bijective on objects and arrows, hence an isomorphism of categories.
    pub fn is_iso(&self) -> bool {
        self.inverse().is_some()
    }

    pub fn inverse(&self) -> Option<Functor> {
        let (s, t) = (&self.source, &self.target);
        if s.num_objects() != t.num_objects() || s.num_arrows() != t.num_arrows() {
            return None;
        }
        let mut obj_inv = vec![usize::MAX; t.num_objects()];
        for (x, &y) in self.obj_map.iter().enumerate() {
            if obj_inv[y] != usize::MAX {
                return None;
            }
            obj_inv[y] = x;
        }
        let mut arr_inv = vec![usize::MAX; t.num_arrows()];
        for (f, &g) in self.arr_map.iter().enumerate() {
            if arr_inv[g] != usize::MAX {
                return None;
            }
            arr_inv[g] = f;
        }
        Some(Functor::new_unchecked(t.clone(), s.clone(), obj_inv, arr_inv))
    }

    pub fn display_name(&self) -> String {
        if self.label.is_empty() {
            format!("<{} -> {}>", self.source.name(), self.target.name())
        } else {
            self.label.clone()
        }
    }

    /// Object map as name pairs, for reports.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .source
            .objects()
            .map(|x| format!("{}|->{}", self.source.object_name(x), self.target.object_name(self.obj_map[x])))
            .collect();
        format!("{}: {{{}}}", self.display_name(), parts.join(", "))
    }
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.arr_map == other.arr_map
            && *self.source == *other.source
            && *self.target == *other.target
    }
}

impl Eq for Functor {}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functor({}: {:?})", self.display_name(), self.obj_map)
    }
}
