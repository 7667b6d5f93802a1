mod common;

use common::*;
use laxorth::awfs::{
    canonical_filler, check_comonad_laws, check_distributive_law, check_functorial_factorization, check_monad_laws,
    cofree_coalgebra, compose_algebras, free_algebra, is_idempotent_pair, pullback_algebra, unique_lifting_counterexample,
    validate_algebra, validate_coalgebra, Fac, FactorizationSystem, IdentityFactorization,
};
use laxorth::coropf::{q, split_opfib_structure, Coropf};
use laxorth::corpus::{small_corpus, walking_iso};
use laxorth::fincat::construct::{chain, empty};
use laxorth::fincat::{find_right_adjoint_coretract, pullback, Cat, Functor, NatTrans, TwoCategory};
use laxorth::lifting::{all_fillers, is_orthogonal, squares, Square};
use laxorth::report::CheckReport;
use laxorth::simple::{InitCompletion, ReflectionHandle, ReflectionMonad, Transferred};
use laxorth::Error;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Break {
    ConstantK,
    Sigma,
    Pi,
}

/// The coreflection-opfibration system with one piece of structure replaced.
struct Mutant {
    inner: Coropf,
    how: Break,
}

impl FactorizationSystem for Mutant {
    type Base = Cat;
    type Data = <Coropf as FactorizationSystem>::Data;

    fn name(&self) -> String {
        "mutant".into()
    }
    fn base(&self) -> &Cat {
        self.inner.base()
    }
    fn factor(&self, f: &Functor) -> laxorth::Result<Fac<Self>> {
        self.inner.factor(f)
    }
    fn on_square(&self, ff: &Fac<Self>, fg: &Fac<Self>, h: &Functor, k: &Functor) -> laxorth::Result<Functor> {
        let real = self.inner.on_square(ff, fg, h, k)?;
        if self.how == Break::ConstantK && fg.middle.num_objects() > 0 && ff.middle.num_objects() > 0 {
            return Ok(Functor::constant(&ff.middle, &fg.middle, 0));
        }
        Ok(real)
    }
    fn on_cell(&self, ff: &Fac<Self>, fg: &Fac<Self>, a: &NatTrans, b: &NatTrans) -> laxorth::Result<NatTrans> {
        self.inner.on_cell(ff, fg, a, b)
    }
    fn comultiplication(&self, ff: &Fac<Self>, flf: &Fac<Self>) -> laxorth::Result<Functor> {
        if self.how == Break::Sigma {
            // L(Lf) o q_f instead of the comparison
            return flf.left.after(q(ff));
        }
        self.inner.comultiplication(ff, flf)
    }
    fn multiplication(&self, ff: &Fac<Self>, frf: &Fac<Self>) -> laxorth::Result<Functor> {
        if self.how == Break::Pi {
            return ff.left.after(q(ff))?.after(q(frf));
        }
        self.inner.multiplication(ff, frf)
    }
}

fn coropf() -> Coropf {
    Coropf::new(LIMIT)
}

fn failed(r: &CheckReport) -> Vec<String> {
    r.records.iter().filter(|x| x.verdict != laxorth::report::Verdict::Pass).map(|x| x.check.clone()).collect()
}

fn five() -> Vec<Functor> {
    let c = two();
    vec![pick(&c, "0"), pick(&c, "1"), bang(&c), Functor::identity(&c), Functor::constant(&c, &c, 1)]
}

#[test]
fn functorial_factorisation_examples() {
    assert!(check_functorial_factorization(&coropf(), &five(), 2).unwrap().all_pass());
    let id = IdentityFactorization { base: Cat::new(LIMIT) };
    assert!(check_functorial_factorization(&id, &five(), 2).unwrap().all_pass());
    let m = Mutant { inner: coropf(), how: Break::ConstantK };
    let r = check_functorial_factorization(&m, &five(), 2).unwrap();
    assert!(!r.all_pass());
    assert!(failed(&r).iter().any(|c| c == "K preserves identities" || c == "K preserves composites"));
}

#[test]
fn comonad_law_examples() {
    let c = two();
    assert!(check_comonad_laws(&coropf(), &pick(&c, "0")).unwrap().all_pass());
    assert!(check_comonad_laws(&coropf(), &Functor::identity(&c)).unwrap().all_pass());
    let m = Mutant { inner: coropf(), how: Break::Sigma };
    let r = check_comonad_laws(&m, &pick(&c, "0")).unwrap();
    assert!(failed(&r).contains(&"K(1, Rf) o sigma = 1".to_string()));
    // at an identity the replacement coincides with the genuine sigma
    let r = check_comonad_laws(&m, &Functor::identity(&one())).unwrap();
    assert!(r.all_pass());
}

#[test]
fn monad_law_examples() {
    let c = two();
    assert!(check_monad_laws(&coropf(), &bang(&c)).unwrap().all_pass());
    let init = Transferred::new(InitCompletion, LIMIT);
    let from_empty = Functor::new(empty(), one(), vec![], vec![]).unwrap();
    assert!(check_monad_laws(&init, &from_empty).unwrap().all_pass());
    let m = Mutant { inner: coropf(), how: Break::Pi };
    let r = check_monad_laws(&m, &pick(&c, "0")).unwrap();
    assert!(failed(&r).contains(&"pi o L(Rf) = 1".to_string()));
}

#[test]
fn distributive_law_examples() {
    let init = Transferred::new(InitCompletion, LIMIT);
    for f in five() {
        assert!(check_distributive_law(&coropf(), &f).unwrap().all_pass());
        assert!(check_distributive_law(&init, &f).unwrap().all_pass());
    }
    let m = Mutant { inner: coropf(), how: Break::Pi };
    let r = check_distributive_law(&m, &pick(&two(), "0")).unwrap();
    assert!(failed(&r).contains(&"delta is a square".to_string()));
}

#[test]
fn canonical_filler_examples() {
    let s = coropf();
    let c = two();
    let f = pick(&c, "0");
    let g = bang(&c);
    // the coalgebra of the LARI of f, and the split opfibration g
    let adj = find_right_adjoint_coretract(&f, LIMIT).unwrap().unwrap();
    let coalg = laxorth::coropf::lari_to_coalgebra(&s, &f, &adj).unwrap();
    let alg = split_opfib_structure(&s, &g).unwrap().unwrap();
    let (h, k) = (pick(&c, "0"), bang(&c));
    let d = canonical_filler(&s, &coalg, &alg, &h, &k).unwrap();
    assert_eq!(d, Functor::constant(&c, &c, 0));
    let sq = Square::new(s.base(), f.clone(), g.clone(), h, k).unwrap();
    assert!(all_fillers(s.base(), &sq).unwrap().contains(&d));
    // identity square on a cofree coalgebra and free algebra
    let cof = cofree_coalgebra(&s, &f).unwrap();
    let lf = cof.fac.f.clone();
    let fr = free_algebra(&s, &lf).unwrap();
    let sqs = squares(s.base(), &lf, &fr.fac.f).unwrap();
    for sq in sqs.iter().take(4) {
        let d = canonical_filler(&s, &cof, &fr, &sq.h, &sq.k).unwrap();
        assert_eq!(d.after(&sq.f).unwrap(), sq.h);
        assert_eq!(sq.g.after(&d).unwrap(), sq.k);
    }
    // into an isomorphism the filler is forced
    let iso = walking_iso();
    let t = laxorth::fincat::enumerate_functors(&iso, &iso, LIMIT)
        .unwrap()
        .into_iter()
        .find(|x| x.is_iso() && !x.is_identity())
        .unwrap();
    let ag = split_opfib_structure(&s, &t).unwrap().unwrap();
    let cf = split_opfib_structure(&s, &Functor::identity(&one())).unwrap();
    assert!(cf.is_some());
    let cof = cofree_coalgebra(&s, &pick(&iso, "0")).unwrap();
    for sq in squares(s.base(), &cof.fac.f, &t).unwrap() {
        let d = canonical_filler(&s, &cof, &ag, &sq.h, &sq.k).unwrap();
        assert_eq!(d, t.inverse().unwrap().after(&sq.k).unwrap());
    }
}

#[test]
fn canonical_filler_rejects_non_squares() {
    let s = coropf();
    let c = two();
    let cof = cofree_coalgebra(&s, &pick(&c, "0")).unwrap();
    let alg = split_opfib_structure(&s, &Functor::identity(&c)).unwrap().unwrap();
    let bad = Functor::constant(cof.fac.f.target(), &c, 1);
    let e = canonical_filler(&s, &cof, &alg, &pick(&c, "0"), &bad).unwrap_err();
    assert!(matches!(e, Error::ShapeMismatch(_)));
}

#[test]
fn algebra_composition_examples() {
    let s = coropf();
    let c = two();
    let f = free_algebra(&s, &pick(&c, "0")).unwrap();
    let id_b = split_opfib_structure(&s, &Functor::identity(f.fac.f.target())).unwrap().unwrap();
    let out = compose_algebras(&s, &f, &id_b).unwrap();
    assert_eq!(out.p, f.p);
    let g = split_opfib_structure(&s, &bang(&c)).unwrap().unwrap();
    let gf = compose_algebras(&s, &f, &g).unwrap();
    validate_algebra(&s, &gf, true).unwrap();
    assert_eq!(gf.fac.f, bang(&c).after(&f.fac.f).unwrap());
    let id_a = split_opfib_structure(&s, &Functor::identity(&c)).unwrap().unwrap();
    let twice = compose_algebras(&s, &id_a, &id_a).unwrap();
    assert_eq!(twice.p, id_a.p);
}

#[test]
fn pullback_algebra_examples() {
    let s = coropf();
    let c = two();
    let ag = free_algebra(&s, &pick(&c, "0")).unwrap();
    let g = ag.fac.f.clone();
    let (a, b) = (g.source().clone(), g.target().clone());
    let same = pullback_algebra(&s, &ag, &g, &Functor::identity(&a), &Functor::identity(&b)).unwrap();
    assert_eq!(same.p, ag.p);
    for y in b.objects() {
        let at = Functor::new(one(), b.clone(), vec![y], vec![b.identity(y)]).unwrap();
        let pb = pullback(&at, &g).unwrap();
        let fib = pullback_algebra(&s, &ag, &pb.proj_left, &pb.proj_right, &at).unwrap();
        validate_algebra(&s, &fib, true).unwrap();
    }
    let unit = free_algebra(&s, &Functor::identity(&one())).unwrap();
    let k = unit.fac.f.target().clone();
    let h = Functor::constant(&c, unit.fac.f.source(), 0);
    let e = pullback_algebra(&s, &unit, &bang(&c), &h, &Functor::identity(&k)).unwrap_err();
    assert!(matches!(e, Error::NotAPullback(_)));
}

#[test]
fn idempotent_pair_examples() {
    let corpus = small_corpus(30, LIMIT).unwrap();
    let id = IdentityFactorization { base: Cat::new(LIMIT) };
    let r = is_idempotent_pair(&id, &corpus).unwrap();
    assert!(r.comonad_idempotent && r.monad_idempotent);
    assert_eq!(unique_lifting_counterexample(&id, &corpus[..8]).unwrap(), None);
    let sub = [pick(&two(), "0"), bang(&two())];
    let r = is_idempotent_pair(&coropf(), &sub).unwrap();
    assert!(!r.comonad_idempotent && !r.monad_idempotent);
    assert!(r.sigma_witness.is_some());
    assert!(unique_lifting_counterexample(&coropf(), &sub).unwrap().is_some());
    let t = ReflectionMonad::onto("chain", &chain(3), &[false, false, true]).unwrap();
    let h = ReflectionHandle::new(t).unwrap();
    let arrows: Vec<usize> = h.monad.base.arrows().collect();
    let r = is_idempotent_pair(&h, &arrows).unwrap();
    assert!(r.comonad_idempotent && r.monad_idempotent);
    assert_eq!(unique_lifting_counterexample(&h, &arrows).unwrap(), None);
    for &f in &arrows {
        for &g in &arrows {
            let (ff, fg) = (h.factor(&f).unwrap(), h.factor(&g).unwrap());
            assert!(is_orthogonal(h.base(), &ff.left, &fg.right).unwrap().orthogonal);
        }
    }
}

#[test]
fn cofree_and_free_structures_validate() {
    let init = Transferred::new(InitCompletion, LIMIT);
    for f in small_corpus(40, LIMIT).unwrap() {
        let s = coropf();
        validate_coalgebra(&s, &cofree_coalgebra(&s, &f).unwrap(), true).unwrap();
        validate_algebra(&s, &free_algebra(&s, &f).unwrap(), true).unwrap();
        validate_coalgebra(&init, &cofree_coalgebra(&init, &f).unwrap(), true).unwrap();
        validate_algebra(&init, &free_algebra(&init, &f).unwrap(), true).unwrap();
    }
}

/// Free maps `(K(c, d), d)` are algebra morphisms, so canonical fillers
/// commute with them.
#[test]
fn canonical_filler_is_natural_in_the_algebra() {
    let s = coropf();
    let corpus = small_corpus(12, LIMIT).unwrap();
    let b = s.base();
    for f in &corpus[..6] {
        let cof = cofree_coalgebra(&s, f).unwrap();
        for g in &corpus[..6] {
            let fg = s.factor(g).unwrap();
            let alg = free_algebra(&s, g).unwrap();
            for g2 in &corpus[..6] {
                let fg2 = s.factor(g2).unwrap();
                let alg2 = free_algebra(&s, g2).unwrap();
                for (c, d) in b.squares(g, g2).unwrap().into_iter().take(2) {
                    let kcd = s.on_square(&fg, &fg2, &c, &d).unwrap();
                    for (h, k) in b.squares(&cof.fac.f, &alg.fac.f).unwrap().into_iter().take(2) {
                        let lhs = kcd.after(&canonical_filler(&s, &cof, &alg, &h, &k).unwrap()).unwrap();
                        let rhs = canonical_filler(&s, &cof, &alg2, &kcd.after(&h).unwrap(), &d.after(&k).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
