use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ObjId = usize;
pub type ArrId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArrowSig {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A finite category with an explicit, total composition table.
///
/// Composition is stored per arrow `g`, indexed by the position of `f` among
/// the arrows into `dom g`, so only composable pairs take space.
#[derive(Clone)]
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    arrows: Vec<ArrowSig>,
    identity: Vec<ArrId>,
    hom: Vec<Vec<ArrId>>,
    incoming: Vec<Vec<ArrId>>,
    outgoing: Vec<Vec<ArrId>>,
    in_pos: Vec<usize>,
    comp: Vec<Vec<ArrId>>,
    obj_index: HashMap<String, ObjId>,
    arr_index: HashMap<String, ArrId>,
    fingerprint: u64,
}

impl FinCategory {
    /// Builds a category from its parts. `compose(g, f)` is queried for every
    /// composable pair and must return `g o f`.
    ///
    /// Names must be unique and every composite must exist with the right
    /// endpoints. Unit and associativity laws are not checked here, see
    /// [`FinCategory::check_laws`].
    pub fn from_parts<F>(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<ArrowSig>,
        identity: Vec<ArrId>,
        mut compose: F,
    ) -> Result<Self>
    where
        F: FnMut(ArrId, ArrId) -> Option<ArrId>,
    {
        let n = objects.len();
        let mut obj_index = HashMap::with_capacity(n);
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(Error::DuplicateId(o.clone()));
            }
        }
        let mut arr_index = HashMap::with_capacity(arrows.len());
        for (i, a) in arrows.iter().enumerate() {
            if a.dom >= n || a.cod >= n {
                return Err(Error::UnknownObject(format!("endpoint of `{}`", a.name)));
            }
            if arr_index.insert(a.name.clone(), i).is_some() {
                return Err(Error::DuplicateId(a.name.clone()));
            }
        }
        if identity.len() != n {
            return Err(Error::BadIdentity("one identity per object required".into()));
        }
        for (x, &i) in identity.iter().enumerate() {
            match arrows.get(i) {
                Some(a) if a.dom == x && a.cod == x => {}
                _ => return Err(Error::BadIdentity(format!("identity of `{}`", objects[x]))),
            }
        }
        let mut hom = vec![Vec::new(); n * n];
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        let mut in_pos = vec![0; arrows.len()];
        for (i, a) in arrows.iter().enumerate() {
            hom[a.dom * n + a.cod].push(i);
            in_pos[i] = incoming[a.cod].len();
            incoming[a.cod].push(i);
            outgoing[a.dom].push(i);
        }
        let mut comp = Vec::with_capacity(arrows.len());
        for g in 0..arrows.len() {
            let ins = &incoming[arrows[g].dom];
            let mut row = Vec::with_capacity(ins.len());
            for &f in ins {
                let h = compose(g, f).ok_or_else(|| Error::MissingComposite {
                    g: arrows[g].name.clone(),
                    f: arrows[f].name.clone(),
                })?;
                if h >= arrows.len() || arrows[h].dom != arrows[f].dom || arrows[h].cod != arrows[g].cod {
                    return Err(Error::IllTypedComposite {
                        g: arrows[g].name.clone(),
                        f: arrows[f].name.clone(),
                        h: arrows.get(h).map(|a| a.name.clone()).unwrap_or_else(|| h.to_string()),
                    });
                }
                row.push(h);
            }
            comp.push(row);
        }
        let mut hasher = DefaultHasher::new();
        objects.hash(&mut hasher);
        arrows.hash(&mut hasher);
        identity.hash(&mut hasher);
        comp.hash(&mut hasher);
        Ok(FinCategory {
            name: name.into(),
            objects,
            arrows,
            identity,
            hom,
            incoming,
            outgoing,
            in_pos,
            comp,
            obj_index,
            arr_index,
            fingerprint: hasher.finish(),
        })
    }

    /// Checks the unit and associativity laws.
    pub fn check_laws(&self) -> Result<()> {
        for (f, a) in self.arrows.iter().enumerate() {
            if self.compose(self.identity[a.cod], f) != f || self.compose(f, self.identity[a.dom]) != f {
                return Err(Error::BadIdentity(format!("unit law fails at `{}`", a.name)));
            }
        }
        for f in 0..self.arrows.len() {
            for &g in &self.outgoing[self.arrows[f].cod] {
                let gf = self.compose(g, f);
                for &h in &self.outgoing[self.arrows[g].cod] {
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                        return Err(Error::NonAssociative {
                            h: self.arrows[h].name.clone(),
                            g: self.arrows[g].name.clone(),
                            f: self.arrows[f].name.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.objects.len()
    }

    pub fn arrows(&self) -> std::ops::Range<ArrId> {
        0..self.arrows.len()
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    pub fn arrow_name(&self, f: ArrId) -> &str {
        &self.arrows[f].name
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn arrow_sigs(&self) -> &[ArrowSig] {
        &self.arrows
    }

    pub fn object_id(&self, name: &str) -> Option<ObjId> {
        self.obj_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrId> {
        self.arr_index.get(name).copied()
    }

    pub fn dom(&self, f: ArrId) -> ObjId {
        self.arrows[f].dom
    }

    pub fn cod(&self, f: ArrId) -> ObjId {
        self.arrows[f].cod
    }

    pub fn identity(&self, x: ObjId) -> ArrId {
        self.identity[x]
    }

    pub fn is_identity(&self, f: ArrId) -> bool {
        self.identity[self.arrows[f].dom] == f
    }

    /// `g o f`. Panics when the arrows are not composable.
    pub fn compose(&self, g: ArrId, f: ArrId) -> ArrId {
        assert_eq!(
            self.arrows[f].cod, self.arrows[g].dom,
            "compose: `{}` o `{}` not composable in `{}`",
            self.arrows[g].name, self.arrows[f].name, self.name
        );
        self.comp[g][self.in_pos[f]]
    }

    pub fn try_compose(&self, g: ArrId, f: ArrId) -> Result<ArrId> {
        if self.arrows[f].cod != self.arrows[g].dom {
            return Err(Error::NotComposable {
                g: self.arrows[g].name.clone(),
                f: self.arrows[f].name.clone(),
            });
        }
        Ok(self.comp[g][self.in_pos[f]])
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[ArrId] {
        &self.hom[x * self.objects.len() + y]
    }

    pub fn incoming(&self, x: ObjId) -> &[ArrId] {
        &self.incoming[x]
    }

    pub fn outgoing(&self, x: ObjId) -> &[ArrId] {
        &self.outgoing[x]
    }

    /// Returns the two-sided inverse of `f`, if any.
    pub fn inverse(&self, f: ArrId) -> Option<ArrId> {
        let (a, b) = (self.dom(f), self.cod(f));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&g| self.compose(g, f) == self.identity[a] && self.compose(f, g) == self.identity[b])
    }

    pub fn is_iso(&self, f: ArrId) -> bool {
        self.inverse(f).is_some()
    }

    /// At most one arrow between any two objects.
    pub fn is_thin(&self) -> bool {
        self.hom.iter().all(|h| h.len() <= 1)
    }

    pub fn is_initial(&self, x: ObjId) -> bool {
        self.objects().all(|y| self.hom(x, y).len() == 1)
    }

    pub fn is_terminal(&self, x: ObjId) -> bool {
        self.objects().all(|y| self.hom(y, x).len() == 1)
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Every composite `g o f` as a triple, in table order.
    pub fn composites(&self) -> impl Iterator<Item = (ArrId, ArrId, ArrId)> + '_ {
        self.arrows().flat_map(move |g| {
            self.incoming[self.arrows[g].dom]
                .iter()
                .enumerate()
                .map(move |(i, &f)| (g, f, self.comp[g][i]))
        })
    }
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.fingerprint == other.fingerprint
                && self.objects == other.objects
                && self.arrows == other.arrows
                && self.identity == other.identity
                && self.comp == other.comp)
    }
}

impl Eq for FinCategory {}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinCategory({}: {} objects, {} arrows)",
            self.name,
            self.objects.len(),
            self.arrows.len()
        )
    }
}
