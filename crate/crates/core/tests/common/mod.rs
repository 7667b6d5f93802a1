#![allow(dead_code)]

use laxorth::fincat::construct::{self, free, poset};
use laxorth::fincat::{ArrId, CatRef, Functor, NatTrans, ObjId, SearchLimit};

pub const LIMIT: SearchLimit = SearchLimit(1_000_000);

pub fn two() -> CatRef {
    construct::interval()
}

pub fn one() -> CatRef {
    construct::terminal()
}

pub fn pick(target: &CatRef, name: &str) -> Functor {
    Functor::from_names(one(), target.clone(), &[("*", name)], &[]).unwrap()
}

pub fn bang(source: &CatRef) -> Functor {
    Functor::constant(source, &one(), 0)
}

/// Every pair of maps on objects and arrows, kept when it is a functor.
pub fn brute_functors(a: &CatRef, b: &CatRef) -> Vec<(Vec<ObjId>, Vec<ArrId>)> {
    let mut out = Vec::new();
    let n = a.num_objects();
    let mut om = vec![0; n];
    loop {
        if n > 0 && b.num_objects() == 0 {
            break;
        }
        let mut choices: Vec<Vec<ArrId>> = Vec::new();
        for u in a.arrows() {
            choices.push(b.hom(om[a.dom(u)], om[a.cod(u)]).to_vec());
        }
        let mut idx = vec![0; choices.len()];
        if choices.iter().all(|c| !c.is_empty()) {
            loop {
                let am: Vec<ArrId> = idx.iter().enumerate().map(|(i, &j)| choices[i][j]).collect();
                let ids = a.objects().all(|x| am[a.identity(x)] == b.identity(om[x]));
                let comp = a.composites().all(|(g, f, h)| b.compose(am[g], am[f]) == am[h]);
                if ids && comp {
                    out.push((om.clone(), am));
                }
                if !bump(&mut idx, |i| choices[i].len()) {
                    break;
                }
            }
        }
        if !bump(&mut om, |_| b.num_objects()) {
            break;
        }
    }
    out
}

/// Odometer increment; false once every digit has wrapped.
pub fn bump(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in 0..digits.len() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// Every family of components, kept when natural.
pub fn brute_nat(f: &Functor, g: &Functor) -> Vec<Vec<ArrId>> {
    let (a, b) = (f.source(), f.target());
    let choices: Vec<Vec<ArrId>> = a.objects().map(|x| b.hom(f.obj(x), g.obj(x)).to_vec()).collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0; choices.len()];
    loop {
        let c: Vec<ArrId> = idx.iter().enumerate().map(|(i, &j)| choices[i][j]).collect();
        if a.arrows().all(|u| b.compose(g.arr(u), c[a.dom(u)]) == b.compose(c[a.cod(u)], f.arr(u))) {
            out.push(c);
        }
        if !bump(&mut idx, |i| choices[i].len()) {
            break;
        }
    }
    out
}

pub fn brute_isomorphic(a: &CatRef, b: &CatRef) -> bool {
    a.num_objects() == b.num_objects()
        && a.num_arrows() == b.num_arrows()
        && brute_functors(a, b).iter().any(|(om, am)| {
            let mut seen_o = om.clone();
            seen_o.sort();
            seen_o.dedup();
            let mut seen_a = am.clone();
            seen_a.sort();
            seen_a.dedup();
            seen_o.len() == om.len() && seen_a.len() == am.len()
        })
}

pub fn functor_of(a: &CatRef, b: &CatRef, maps: &(Vec<ObjId>, Vec<ArrId>)) -> Functor {
    Functor::new(a.clone(), b.clone(), maps.0.clone(), maps.1.clone()).unwrap()
}

pub fn nat_of(f: &Functor, g: &Functor, comps: &[ArrId]) -> NatTrans {
    NatTrans::new(f.clone(), g.clone(), comps.to_vec()).unwrap()
}

/// The reflexive transitive closure of `rel` on `0..n`, as a poset.
pub fn preorder_from(n: usize, rel: &[(usize, usize)]) -> CatRef {
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        m[i][i] = true;
    }
    for &(i, j) in rel {
        m[i % n][j % n] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i][k] && m[k][j] {
                    m[i][j] = true;
                }
            }
        }
    }
    poset("P", n, |i, j| m[i][j]).unwrap()
}

/// A free category on forward edges `i -> j` with `i < j`.
pub fn dag_from(n: usize, edges: &[(usize, usize)]) -> CatRef {
    let names: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let objs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut es: Vec<(String, String, String)> = Vec::new();
    for (k, &(i, j)) in edges.iter().enumerate() {
        let (i, j) = (i % n, j % n);
        if i < j {
            es.push((format!("e{k}"), names[i].clone(), names[j].clone()));
        }
    }
    let refs: Vec<(&str, &str, &str)> = es.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
    free("G", &objs, &refs).unwrap()
}
