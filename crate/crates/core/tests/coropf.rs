mod common;

use common::*;
use laxorth::awfs::{cofree_coalgebra, validate_algebra, validate_coalgebra, Algebra, Coalgebra, FactorizationSystem};
use laxorth::coropf::{
    all_algebras, all_coalgebras, check_multiplication_via_laris, coalgebra_lari_counts, coalgebra_to_lari,
    comma_retract_adjunction, lari_to_coalgebra, left_adjunction, nu, q, retract_coalgebra, split_opfib_structure, Coropf,
};
use laxorth::corpus::{shapes, small_corpus, walking_iso};
use laxorth::fincat::construct::empty;
use laxorth::fincat::{
    arrow_category, comma, enumerate_functors, find_isomorphism, find_right_adjoint_coretract, verify_adjunction,
    Adjunction, Functor, NatTrans,
};
use laxorth::Error;

fn s() -> Coropf {
    Coropf::new(LIMIT)
}

#[test]
fn factor_examples() {
    let c = two();
    let ff = s().factor(&pick(&c, "0")).unwrap();
    let names: Vec<&str> = ff.middle.objects().map(|x| ff.middle.object_name(x)).collect();
    assert_eq!(names, ["(*|id_0|0)", "(*|u|1)"]);
    assert!(ff.right.is_iso());
    assert!(brute_isomorphic(&ff.middle, &c));
    assert!(q(&ff).after(&ff.left).unwrap().is_identity());
    assert!(nu(&ff).whisker_right(&ff.left).unwrap().is_identity());
    assert_eq!(ff.right.after(&ff.left).unwrap(), pick(&c, "0"));

    for b in [two(), walking_iso(), laxorth::corpus::idempotent()] {
        let ff = s().factor(&Functor::identity(&b)).unwrap();
        assert!(find_isomorphism(&ff.middle, &arrow_category(&b).unwrap().apex, LIMIT).unwrap().is_some());
    }
    let ff = s().factor(&Functor::new(empty(), c.clone(), vec![], vec![]).unwrap()).unwrap();
    assert_eq!(ff.middle.num_objects(), 0);
    assert_eq!(ff.right.source().num_objects(), 0);
}

#[test]
fn comultiplication_examples() {
    let c = two();
    let sys = s();
    let iso = walking_iso();
    let swap = enumerate_functors(&iso, &iso, LIMIT).unwrap().into_iter().find(|x| x.is_iso() && !x.is_identity()).unwrap();
    for (f, invertible) in [(pick(&c, "0"), true), (swap, false), (Functor::identity(&c), false)] {
        let ff = sys.factor(&f).unwrap();
        let flf = sys.factor(&ff.left).unwrap();
        let sigma = sys.comultiplication(&ff, &flf).unwrap();
        let id_a = Functor::identity(f.source());
        let k1r = sys.on_square(&flf, &ff, &id_a, &ff.right).unwrap();
        assert!(k1r.after(&sigma).unwrap().is_identity());
        assert!(flf.right.after(&sigma).unwrap().is_identity());
        assert_eq!(sigma.is_iso(), invertible);
    }
    // sigma is a section; it is invertible for isomorphisms onto discrete
    // categories, where every comma object is an identity
    let d = laxorth::fincat::construct::discrete("D", 2);
    let ff = sys.factor(&Functor::identity(&d)).unwrap();
    let flf = sys.factor(&ff.left).unwrap();
    assert!(sys.comultiplication(&ff, &flf).unwrap().is_iso());
    let ff = sys.factor(&Functor::identity(&c)).unwrap();
    let flf = sys.factor(&ff.left).unwrap();
    assert_eq!((ff.middle.num_objects(), flf.middle.num_objects()), (3, 4));
}

#[test]
fn multiplication_satisfies_its_three_equalities() {
    let sys = s();
    for f in [bang(&two()), pick(&two(), "0"), Functor::identity(&two()), bang(&walking_iso())] {
        let ff = sys.factor(&f).unwrap();
        let frf = sys.factor(&ff.right).unwrap();
        let pi = sys.multiplication(&ff, &frf).unwrap();
        assert_eq!(q(&ff).after(&pi).unwrap(), q(&ff).after(q(&frf)).unwrap());
        assert_eq!(ff.right.after(&pi).unwrap(), frf.right);
        let lhs = nu(&ff).whisker_right(&pi).unwrap();
        let inner = nu(&ff).whisker_right(q(&frf)).unwrap();
        let b = f.target();
        for x in frf.middle.objects() {
            assert_eq!(lhs.component(x), b.compose(nu(&frf).component(x), inner.component(x)));
        }
        let frrf = sys.factor(&frf.right).unwrap();
        let pi_r = sys.multiplication(&frf, &frrf).unwrap();
        let kp1 = sys.on_square(&frrf, &frf, &pi, &Functor::identity(b)).unwrap();
        assert_eq!(pi.after(&pi_r).unwrap(), pi.after(&kp1).unwrap());
        assert!(check_multiplication_via_laris(&sys, &f).unwrap());
    }
}

#[test]
fn coalgebra_to_lari_examples() {
    let sys = s();
    let c = two();
    let f = pick(&c, "0");
    // the cofree coalgebra on Lf gives Lf -| q_f
    let cof = cofree_coalgebra(&sys, &f).unwrap();
    let ff = sys.factor(&f).unwrap();
    let adj = coalgebra_to_lari(&cof).unwrap();
    let expected = left_adjunction(&ff).unwrap();
    assert_eq!(adj.right, expected.right);
    assert_eq!(adj.counit.components(), expected.counit.components());
    let only = all_coalgebras(&sys, &f).unwrap();
    assert_eq!(only.len(), 1);
    let found = find_right_adjoint_coretract(&f, LIMIT).unwrap().unwrap();
    let adj = coalgebra_to_lari(&only[0]).unwrap();
    assert_eq!(adj.right, found.right);
    assert_eq!(adj.counit.components(), found.counit.components());
    let back = lari_to_coalgebra(&sys, &f, &adj).unwrap();
    assert_eq!(back.s, only[0].s);
    let id = Functor::identity(&c);
    let cs = all_coalgebras(&sys, &id).unwrap();
    assert_eq!(cs.len(), 1);
    let adj = coalgebra_to_lari(&cs[0]).unwrap();
    assert!(adj.right.is_identity() && adj.counit.is_identity());
}

#[test]
fn lari_to_coalgebra_rejects_non_coretracts() {
    let c = two();
    let f = bang(&c);
    let adj = Adjunction {
        left: f.clone(),
        right: pick(&c, "0"),
        unit: NatTrans::identity(&Functor::identity(&c)),
        counit: NatTrans::identity(&Functor::identity(&one())),
    };
    assert!(lari_to_coalgebra(&s(), &f, &adj).is_err());
}

/// Coalgebra structures and coretract adjunctions counted independently of
/// the library searches.
fn brute_counts(f: &Functor) -> (usize, usize) {
    let sys = s();
    let ff = sys.factor(f).unwrap();
    let (a, b) = (f.source(), f.target());
    let coalgs = brute_functors(b, &ff.middle)
        .iter()
        .map(|m| functor_of(b, &ff.middle, m))
        .filter(|sec| {
            let c = Coalgebra { fac: ff.clone(), s: sec.clone() };
            validate_coalgebra(&sys, &c, true).is_ok()
        })
        .count();
    let mut laris = 0;
    for m in brute_functors(b, a) {
        let v = functor_of(b, a, &m);
        if !v.after(f).unwrap().is_identity() {
            continue;
        }
        let fv = f.after(&v).unwrap();
        for comps in brute_nat(&fv, &Functor::identity(b)) {
            let adj = Adjunction {
                left: f.clone(),
                right: v.clone(),
                unit: NatTrans::identity(&Functor::identity(a)),
                counit: nat_of(&fv, &Functor::identity(b), &comps),
            };
            laris += usize::from(verify_adjunction(&adj).is_coretract());
        }
    }
    (coalgs, laris)
}

#[test]
fn coalgebra_and_lari_counts_agree() {
    let sys = s();
    for f in small_corpus(80, LIMIT).unwrap() {
        let (c, l) = coalgebra_lari_counts(&sys, &f).unwrap();
        assert_eq!(c, l, "{}", f.display_name());
        assert_eq!(brute_counts(&f), (c, l), "{}", f.display_name());
    }
}

fn brute_algebra_count(f: &Functor) -> usize {
    let sys = s();
    let ff = sys.factor(f).unwrap();
    let a = f.source();
    brute_functors(&ff.middle, a)
        .iter()
        .filter(|m| {
            let alg = Algebra { fac: ff.clone(), p: functor_of(&ff.middle, a, m) };
            validate_algebra(&sys, &alg, true).is_ok()
        })
        .count()
}

#[test]
fn split_opfibration_examples() {
    let sys = s();
    for c in shapes().into_iter().take(8) {
        assert!(split_opfib_structure(&sys, &bang(&c)).unwrap().is_some(), "{}", c.name());
    }
    assert!(split_opfib_structure(&sys, &pick(&two(), "0")).unwrap().is_none());
    assert_eq!(brute_algebra_count(&pick(&two(), "0")), 0);
    for f in small_corpus(20, LIMIT).unwrap() {
        let rf = sys.factor(&f).unwrap().right;
        let alg = split_opfib_structure(&sys, &rf).unwrap().unwrap();
        validate_algebra(&sys, &alg, true).unwrap();
    }
}

#[test]
fn algebra_search_matches_brute_force() {
    let sys = s();
    for f in small_corpus(40, LIMIT).unwrap() {
        let n = all_algebras(&sys, &f).unwrap().len();
        assert_eq!(n, brute_algebra_count(&f), "{}", f.display_name());
        assert_eq!(split_opfib_structure(&sys, &f).unwrap().is_some(), n > 0);
    }
}

#[test]
fn retract_coalgebra_examples() {
    let sys = s();
    let c = two();
    let f = pick(&c, "0");
    let coalg = &all_coalgebras(&sys, &f).unwrap()[0];
    let (i1, i2) = (Functor::identity(&one()), Functor::identity(&c));
    let same = retract_coalgebra(&sys, coalg, &f, (&i1, &i2), (&i1, &i2)).unwrap();
    assert_eq!(same.s, coalg.s);

    let iso = walking_iso();
    let t = enumerate_functors(&iso, &iso, LIMIT).unwrap().into_iter().find(|x| x.is_iso() && !x.is_identity()).unwrap();
    let f0 = pick(&iso, "0");
    let f1 = pick(&iso, "1");
    let c0 = &all_coalgebras(&sys, &f0).unwrap()[0];
    let moved = retract_coalgebra(&sys, c0, &f1, (&i1, &t), (&i1, &t)).unwrap();
    validate_coalgebra(&sys, &moved, true).unwrap();

    let k0 = Functor::constant(&c, &c, 0);
    let e = retract_coalgebra(&sys, coalg, &f, (&i1, &k0), (&i1, &i2)).unwrap_err();
    assert!(matches!(e, Error::NotARetraction(_)));
}

#[test]
fn comma_of_a_left_adjoint_has_a_retract_adjunction() {
    let shapes: Vec<_> = shapes().into_iter().filter(|c| c.num_objects() <= 2).collect();
    for l in small_corpus(40, LIMIT).unwrap() {
        let Some(adj) = find_right_adjoint_coretract(&l, LIMIT).unwrap() else { continue };
        for x in &shapes {
            for t in enumerate_functors(x, l.target(), LIMIT).unwrap().into_iter().take(3) {
                let cone = comma(&l, &t).unwrap();
                let out = comma_retract_adjunction(&cone, &adj).unwrap();
                let r = verify_adjunction(&out);
                assert!(r.is_retract(), "{} / {}: {:?}", l.display_name(), t.display_name(), r.failure);
            }
        }
    }
}
