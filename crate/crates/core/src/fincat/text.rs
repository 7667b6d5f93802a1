//! Line-oriented text format for categories, functors and transformations.
//!
//! ```text
//! # comment
//! category C
//!   object a
//!   object b
//!   arrow u : a -> b
//!   compose g f = h
//! end
//! graph G            # free category on an acyclic graph
//!   object a
//!   arrow u : a -> b
//! end
//! functor F : C -> D
//!   object a |-> x
//!   arrow u |-> v
//! end
//! nattrans t : F => G
//!   at a = v
//! end
//! ```
//!
//! Identities are implicit and named `id_<object>`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::category::{ArrowSig, FinCategory};
use super::construct;
use super::functor::{CatRef, Functor};
use super::nat::NatTrans;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {error}")]
pub struct ParseError {
    pub line: usize,
    pub error: Error,
}

/// A category as written, before validation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub composes: Vec<(String, String, String)>,
}

/// Builds a category from raw data. Identities are added as `id_<x>`;
/// composites with identities may be omitted.
pub fn validate_category(raw: &RawCategory) -> Result<FinCategory> {
    let n = raw.objects.len();
    let mut objects = raw.objects.clone();
    let oid: HashMap<&str, usize> = raw.objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
    if oid.len() != n {
        let mut seen = std::collections::HashSet::new();
        let dup = raw.objects.iter().find(|o| !seen.insert(o.as_str())).unwrap();
        return Err(Error::DuplicateId(dup.clone()));
    }
    let mut arrows: Vec<ArrowSig> = raw
        .objects
        .iter()
        .enumerate()
        .map(|(i, o)| ArrowSig {
            name: format!("id_{o}"),
            dom: i,
            cod: i,
        })
        .collect();
    for (name, d, c) in &raw.arrows {
        let dom = *oid.get(d.as_str()).ok_or_else(|| Error::UnknownObject(d.clone()))?;
        let cod = *oid.get(c.as_str()).ok_or_else(|| Error::UnknownObject(c.clone()))?;
        arrows.push(ArrowSig {
            name: name.clone(),
            dom,
            cod,
        });
    }
    let aid: HashMap<String, usize> = {
        let mut m = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if m.insert(a.name.clone(), i).is_some() {
                return Err(Error::DuplicateId(a.name.clone()));
            }
        }
        m
    };
    let look = |s: &str| aid.get(s).copied().ok_or_else(|| Error::UnknownArrow(s.into()));
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for (g, f, h) in &raw.composes {
        let (gi, fi, hi) = (look(g)?, look(f)?, look(h)?);
        if arrows[fi].cod != arrows[gi].dom || arrows[hi].dom != arrows[fi].dom || arrows[hi].cod != arrows[gi].cod {
            return Err(Error::IllTypedComposite {
                g: g.clone(),
                f: f.clone(),
                h: h.clone(),
            });
        }
        if (gi < n && hi != fi) || (fi < n && hi != gi) {
            return Err(Error::BadIdentity(format!("{g} o {f} = {h} contradicts the unit law")));
        }
        if let Some(prev) = table.insert((gi, fi), hi) {
            if prev != hi {
                return Err(Error::DuplicateId(format!("compose {g} {f}")));
            }
        }
    }
    objects.shrink_to_fit();
    let c = FinCategory::from_parts(raw.name.clone(), objects, arrows, (0..n).collect(), |g, f| {
        if g < n {
            Some(f)
        } else if f < n {
            Some(g)
        } else {
            table.get(&(g, f)).copied()
        }
    })?;
    c.check_laws()?;
    Ok(c)
}

#[derive(Debug, Clone)]
pub enum Item {
    Category(CatRef),
    Functor(Functor),
    NatTrans(NatTrans),
}

/// A parsed input file, in declaration order.
#[derive(Debug, Clone, Default)]
pub struct Document {
    pub items: Vec<(String, Item)>,
    index: HashMap<String, usize>,
}

impl Document {
    pub fn category(&self, name: &str) -> Option<&CatRef> {
        match self.index.get(name).map(|&i| &self.items[i].1) {
            Some(Item::Category(c)) => Some(c),
            _ => None,
        }
    }

    pub fn functor(&self, name: &str) -> Option<&Functor> {
        match self.index.get(name).map(|&i| &self.items[i].1) {
            Some(Item::Functor(f)) => Some(f),
            _ => None,
        }
    }

    pub fn nattrans(&self, name: &str) -> Option<&NatTrans> {
        match self.index.get(name).map(|&i| &self.items[i].1) {
            Some(Item::NatTrans(t)) => Some(t),
            _ => None,
        }
    }

    pub fn categories(&self) -> impl Iterator<Item = (&str, &CatRef)> {
        self.items.iter().filter_map(|(n, i)| match i {
            Item::Category(c) => Some((n.as_str(), c)),
            _ => None,
        })
    }

    pub fn functors(&self) -> impl Iterator<Item = (&str, &Functor)> {
        self.items.iter().filter_map(|(n, i)| match i {
            Item::Functor(f) => Some((n.as_str(), f)),
            _ => None,
        })
    }

    pub fn nattranses(&self) -> impl Iterator<Item = (&str, &NatTrans)> {
        self.items.iter().filter_map(|(n, i)| match i {
            Item::NatTrans(t) => Some((n.as_str(), t)),
            _ => None,
        })
    }

    /// Appends the items of `other`, rejecting names already present.
    pub fn merge(&mut self, other: Document) -> Result<()> {
        for (name, item) in other.items {
            self.push(name, item)?;
        }
        Ok(())
    }

    fn push(&mut self, name: String, item: Item) -> Result<()> {
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateId(name));
        }
        self.index.insert(name.clone(), self.items.len());
        self.items.push((name, item));
        Ok(())
    }
}

struct Block {
    head_line: usize,
    head: Vec<String>,
    body: Vec<(usize, Vec<String>)>,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        error: Error::Syntax(msg.into()),
    }
}

fn at(line: usize) -> impl Fn(Error) -> ParseError {
    move |error| ParseError { line, error }
}

pub fn parse_document(src: &str) -> std::result::Result<Document, ParseError> {
    let mut blocks = Vec::new();
    let mut current: Option<Block> = None;
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let words: Vec<String> = text.split_whitespace().map(String::from).collect();
        match (&mut current, words[0].as_str()) {
            (None, "category" | "graph" | "functor" | "nattrans") => {
                current = Some(Block {
                    head_line: line,
                    head: words,
                    body: Vec::new(),
                })
            }
            (None, other) => return Err(syntax(line, format!("unexpected `{other}` outside a block"))),
            (Some(_), "end") => {
                if words.len() != 1 {
                    return Err(syntax(line, "`end` takes no arguments"));
                }
                blocks.push(current.take().unwrap())
            }
            (Some(b), _) => b.body.push((line, words)),
        }
    }
    if let Some(b) = current {
        return Err(syntax(b.head_line, "block is not closed with `end`"));
    }
    let mut doc = Document::default();
    for b in blocks {
        let line = b.head_line;
        let (name, item) = match b.head[0].as_str() {
            "category" | "graph" => parse_category(&b)?,
            "functor" => parse_functor(&b, &doc)?,
            _ => parse_nattrans(&b, &doc)?,
        };
        doc.push(name, item).map_err(at(line))?;
    }
    Ok(doc)
}

fn parse_category(b: &Block) -> std::result::Result<(String, Item), ParseError> {
    if b.head.len() != 2 {
        return Err(syntax(b.head_line, format!("expected `{} <name>`", b.head[0])));
    }
    let free = b.head[0] == "graph";
    let mut raw = RawCategory {
        name: b.head[1].clone(),
        ..Default::default()
    };
    for (line, w) in &b.body {
        match (w[0].as_str(), w.len()) {
            ("object", 2) => raw.objects.push(w[1].clone()),
            ("arrow", 6) if w[2] == ":" && w[4] == "->" => raw.arrows.push((w[1].clone(), w[3].clone(), w[5].clone())),
            ("compose", 5) if !free && w[3] == "=" => raw.composes.push((w[1].clone(), w[2].clone(), w[4].clone())),
            (key, _) => return Err(syntax(*line, format!("unknown or malformed entry `{key}`"))),
        }
        if let Some(dup) = duplicate_in(&raw) {
            return Err(ParseError {
                line: *line,
                error: Error::DuplicateId(dup),
            });
        }
    }
    let cat = if free {
        let objs: Vec<&str> = raw.objects.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str, &str)> = raw.arrows.iter().map(|(a, d, c)| (a.as_str(), d.as_str(), c.as_str())).collect();
        construct::free(&raw.name, &objs, &edges).map_err(at(b.head_line))?
    } else {
        Arc::new(validate_category(&raw).map_err(at(b.head_line))?)
    };
    Ok((raw.name, Item::Category(cat)))
}

fn duplicate_in(raw: &RawCategory) -> Option<String> {
    let mut seen = std::collections::HashSet::new();
    for o in &raw.objects {
        if !seen.insert(o.clone()) {
            return Some(o.clone());
        }
    }
    let mut seen = std::collections::HashSet::new();
    for o in &raw.objects {
        seen.insert(format!("id_{o}"));
    }
    for (a, _, _) in &raw.arrows {
        if !seen.insert(a.clone()) {
            return Some(a.clone());
        }
    }
    None
}

fn parse_functor(b: &Block, doc: &Document) -> std::result::Result<(String, Item), ParseError> {
    let h = &b.head;
    if h.len() != 6 || h[2] != ":" || h[4] != "->" {
        return Err(syntax(b.head_line, "expected `functor <name> : <cat> -> <cat>`"));
    }
    let src = doc.category(&h[3]).ok_or_else(|| at(b.head_line)(Error::UnknownName(h[3].clone())))?;
    let tgt = doc.category(&h[5]).ok_or_else(|| at(b.head_line)(Error::UnknownName(h[5].clone())))?;
    let mut objs = Vec::new();
    let mut arrs = Vec::new();
    for (line, w) in &b.body {
        match (w[0].as_str(), w.len()) {
            ("object", 4) if w[2] == "|->" => objs.push((*line, w[1].as_str(), w[3].as_str())),
            ("arrow", 4) if w[2] == "|->" => arrs.push((*line, w[1].as_str(), w[3].as_str())),
            (key, _) => return Err(syntax(*line, format!("unknown or malformed entry `{key}`"))),
        }
    }
    for &(line, a, x) in &objs {
        src.object_id(a).ok_or_else(|| at(line)(Error::UnknownObject(a.into())))?;
        tgt.object_id(x).ok_or_else(|| at(line)(Error::UnknownObject(x.into())))?;
    }
    for &(line, u, v) in &arrs {
        src.arrow_id(u).ok_or_else(|| at(line)(Error::UnknownArrow(u.into())))?;
        tgt.arrow_id(v).ok_or_else(|| at(line)(Error::UnknownArrow(v.into())))?;
    }
    let o: Vec<(&str, &str)> = objs.iter().map(|&(_, a, x)| (a, x)).collect();
    let a: Vec<(&str, &str)> = arrs.iter().map(|&(_, u, v)| (u, v)).collect();
    let f = Functor::from_names(src.clone(), tgt.clone(), &o, &a)
        .map_err(at(b.head_line))?
        .named(h[1].clone());
    Ok((h[1].clone(), Item::Functor(f)))
}

fn parse_nattrans(b: &Block, doc: &Document) -> std::result::Result<(String, Item), ParseError> {
    let h = &b.head;
    if h.len() != 6 || h[2] != ":" || h[4] != "=>" {
        return Err(syntax(b.head_line, "expected `nattrans <name> : <functor> => <functor>`"));
    }
    let f = doc.functor(&h[3]).ok_or_else(|| at(b.head_line)(Error::UnknownName(h[3].clone())))?;
    let g = doc.functor(&h[5]).ok_or_else(|| at(b.head_line)(Error::UnknownName(h[5].clone())))?;
    let c = f.source();
    let d = f.target();
    let mut comps = vec![usize::MAX; c.num_objects()];
    for (line, w) in &b.body {
        if w.len() != 4 || w[0] != "at" || w[2] != "=" {
            return Err(syntax(*line, format!("unknown or malformed entry `{}`", w[0])));
        }
        let x = c.object_id(&w[1]).ok_or_else(|| at(*line)(Error::UnknownObject(w[1].clone())))?;
        let a = d.arrow_id(&w[3]).ok_or_else(|| at(*line)(Error::UnknownArrow(w[3].clone())))?;
        comps[x] = a;
    }
    if let Some(x) = comps.iter().position(|&a| a == usize::MAX) {
        return Err(at(b.head_line)(Error::InvalidNatTrans(format!(
            "no component at `{}`",
            c.object_name(x)
        ))));
    }
    let t = NatTrans::new(f.clone(), g.clone(), comps).map_err(at(b.head_line))?;
    Ok((h[1].clone(), Item::NatTrans(t)))
}
