mod common;

use common::*;
use laxorth::awfs::{check_comonad_laws, check_monad_laws, search_algebras, FactorizationSystem};
use laxorth::corpus::{idempotent, small_bases, small_corpus, walking_iso};
use laxorth::fincat::construct::{chain, discrete, empty, free};
use laxorth::fincat::{comma, Functor};
use laxorth::report::Verdict;
use laxorth::simple::{
    bundled_instance, check_algebra_bundles, check_cat_monad_laws, check_fibres, check_simplicity_agreement,
    check_simplicity_witness, check_terminal_case, coalgebras_match_embeddings, delta_empty_counterexample, fibre,
    init_completion, is_simple_reflection, monad_algebras, opfib_colim_to_ralg, poset_reflections, ralg_to_opfib_colim,
    simple_reflection_factor, split_product_reflection, t_iso_coreflective, CatMonad, CorruptedMultiplication,
    InitCompletion, ReflectionHandle, ReflectionMonad, Transferred, TruncatedDeltaEmpty,
};
use laxorth::Error;
use proptest::prelude::*;

fn h() -> Transferred<InitCompletion> {
    Transferred::new(InitCompletion, LIMIT)
}

fn from_empty(b: &laxorth::fincat::CatRef) -> Functor {
    Functor::new(empty(), b.clone(), vec![], vec![]).unwrap()
}

#[test]
fn completion_examples() {
    assert!(brute_isomorphic(&init_completion(&empty()), &one()));
    assert!(brute_isomorphic(&init_completion(&one()), &two()));
    let t2 = init_completion(&two());
    assert_eq!(t2.num_objects(), 3);
    assert_eq!(t2.num_arrows(), 6);
    let (bot, b0, b1) = (0, t2.object_id("0").unwrap(), t2.object_id("1").unwrap());
    let u = t2.arrow_id("u").unwrap();
    assert_eq!(t2.compose(u, t2.hom(bot, b0)[0]), t2.hom(bot, b1)[0]);
    assert!(t2.hom(b0, bot).is_empty());
    assert_eq!(t2.object_name(0), "⊥");

    // a clashing name gets a prime
    let c = free("C", &["⊥"], &[]).unwrap();
    assert_eq!(init_completion(&c).object_name(0), "⊥'");
}

#[test]
fn monad_laws_hold() {
    for a in small_bases() {
        let along: Vec<Functor> = small_corpus(40, LIMIT).unwrap().into_iter().filter(|f| f.source() == &a).take(3).collect();
        let r = check_cat_monad_laws(&InitCompletion, &a, &along).unwrap();
        assert!(r.all_pass(), "{}: {:?}", a.name(), r.first_failure());
        for depth in 1..=2 {
            let t = TruncatedDeltaEmpty::new(depth).unwrap();
            let r = check_cat_monad_laws(&t, &a, &along).unwrap();
            assert!(r.all_pass(), "depth {depth} at {}: {:?}", a.name(), r.first_failure());
        }
    }
    assert!(TruncatedDeltaEmpty::new(0).is_err());
    let r = check_cat_monad_laws(&CorruptedMultiplication, &two(), &[]).unwrap();
    assert!(!r.all_pass());
    // T(empty) is terminal, so the corrupted multiplication is correct there
    let r = check_cat_monad_laws(&CorruptedMultiplication, &empty(), &[]).unwrap();
    assert!(r.all_pass());
}

/// Normalised algebras of the completion are cones `c: z => 1_A` with
/// `c_z = 1`.
fn brute_algebra_count(a: &laxorth::fincat::CatRef) -> usize {
    let mut n = 0;
    for z in a.objects() {
        let homs: Vec<&[usize]> = a.objects().map(|x| a.hom(z, x)).collect();
        if homs.iter().any(|h| h.is_empty()) {
            continue;
        }
        let mut digits = vec![0; a.num_objects()];
        let radix: Vec<usize> = homs.iter().map(|h| h.len()).collect();
        loop {
            let c: Vec<usize> = digits.iter().enumerate().map(|(x, &i)| homs[x][i]).collect();
            let natural = a.arrows().all(|u| a.compose(u, c[a.dom(u)]) == c[a.cod(u)]);
            if natural && c[z] == a.identity(z) {
                n += 1;
            }
            if !bump(&mut digits, |i| radix[i]) {
                break;
            }
        }
    }
    n
}

#[test]
fn completion_algebras_match_oracle() {
    for a in small_bases().into_iter().chain([walking_iso(), idempotent(), discrete("D3", 3)]) {
        let algs = monad_algebras(&InitCompletion, &a, LIMIT).unwrap();
        assert_eq!(algs.len(), brute_algebra_count(&a), "{}", a.name());
    }
    assert_eq!(monad_algebras(&InitCompletion, &two(), LIMIT).unwrap().len(), 1);
    assert_eq!(monad_algebras(&InitCompletion, &walking_iso(), LIMIT).unwrap().len(), 2);
    assert_eq!(monad_algebras(&InitCompletion, &discrete("D2", 2), LIMIT).unwrap().len(), 0);
    assert_eq!(monad_algebras(&InitCompletion, &idempotent(), LIMIT).unwrap().len(), 0);
}

#[test]
fn reflection_examples() {
    let c = chain(3);
    let id = ReflectionMonad::identity("id", &c);
    id.validate().unwrap();
    assert_eq!(is_simple_reflection(&id).verdict, Verdict::Pass);
    assert_eq!(t_iso_coreflective(&id).verdict, Verdict::Pass);
    ReflectionHandle::new(id).unwrap();

    let top = ReflectionMonad::onto("top", &c, &[false, false, true]).unwrap();
    top.validate().unwrap();
    assert_eq!(is_simple_reflection(&top).verdict, Verdict::Pass);
    assert_eq!(t_iso_coreflective(&top).verdict, Verdict::Pass);
    assert!(check_simplicity_agreement(&top).all_pass());
    for f in c.arrows() {
        let pf = simple_reflection_factor(&top, f).unwrap();
        assert_eq!(pf.left, f);
        assert_eq!(pf.right, c.identity(c.cod(f)));
    }
    // no reflection onto the bottom of a chain
    assert!(ReflectionMonad::onto("bot", &c, &[true, false, false]).is_none());

    let h = ReflectionHandle::new(top).unwrap();
    for f in c.arrows() {
        assert!(check_comonad_laws(&h, &f).unwrap().all_pass());
        assert!(check_monad_laws(&h, &f).unwrap().all_pass());
    }
}

#[test]
fn split_product_is_not_simple() {
    let t = split_product_reflection();
    t.validate().unwrap();
    let rep = is_simple_reflection(&t);
    assert_ne!(rep.verdict, Verdict::Pass);
    assert_eq!(rep.witness.as_deref(), Some("f"));
    let f = t.base.arrow_id("f").unwrap();
    assert!(matches!(simple_reflection_factor(&t, f), Err(Error::NotSimple(_))));
    assert!(matches!(ReflectionHandle::new(t.clone()), Err(Error::NotSimple(_))));
    assert!(!check_simplicity_agreement(&t).all_pass());
}

#[test]
fn poset_reflections_agree() {
    let all = poset_reflections(3);
    assert!(!all.is_empty());
    for t in &all {
        t.validate().unwrap();
        let r = check_simplicity_agreement(t);
        assert!(r.all_pass(), "{}: {:?}", t.name, r.first_failure());
    }
}

#[test]
fn transferred_factor_examples() {
    let h = h();
    let ff = h.factor(&from_empty(&one())).unwrap();
    assert!(brute_isomorphic(&ff.middle, &one()));
    let ff = h.factor(&Functor::identity(&one())).unwrap();
    assert!(brute_isomorphic(&ff.middle, &two()));
    for a in small_bases() {
        let r = check_terminal_case(&h, &a).unwrap();
        assert!(r.all_pass(), "{}: {:?}", a.name(), r.first_failure());
    }
}

#[test]
fn fibres_are_completed_slices() {
    let h = h();
    for f in small_corpus(30, LIMIT).unwrap() {
        let r = check_fibres(&h, &f).unwrap();
        assert!(r.all_pass(), "{}: {:?}", f.display_name(), r.first_failure());
    }
    // the fibre of Rf over 1 for pick0 is T(0/1) = T(1)
    let c = two();
    let ff = h.factor(&pick(&c, "0")).unwrap();
    assert!(brute_isomorphic(&fibre(&ff.right, 1).unwrap(), &two()));
    let slice = comma(&pick(&c, "0"), &pick(&c, "0")).unwrap().apex;
    assert!(brute_isomorphic(&fibre(&ff.right, 0).unwrap(), &init_completion(&slice)));
}

#[test]
fn simplicity_witnesses() {
    let h = h();
    let c = two();
    for f in [from_empty(&one()), pick(&c, "0"), pick(&c, "1"), bang(&c), Functor::identity(&c)] {
        let adj = check_simplicity_witness(&h, &f).unwrap();
        assert!(adj.is_some(), "{}", f.display_name());
    }
    let bad = Transferred::new(CorruptedMultiplication, LIMIT);
    for f in [pick(&c, "0"), bang(&c), Functor::identity(&c)] {
        assert!(check_simplicity_witness(&bad, &f).unwrap().is_none(), "{}", f.display_name());
    }
    assert!(check_simplicity_witness(&bad, &from_empty(&one())).unwrap().is_some());
}

#[test]
fn coalgebras_are_embeddings() {
    let h = h();
    let two_pts = discrete("D2", 2);
    let fold = bang(&two_pts);
    let (nc, ne) = coalgebras_match_embeddings(&h, &fold).unwrap();
    assert_eq!((nc, ne), (0, 0));
    let c = two();
    assert_eq!(coalgebras_match_embeddings(&h, &pick(&c, "0")).unwrap(), (1, 1));
    assert_eq!(coalgebras_match_embeddings(&h, &from_empty(&c)).unwrap(), (1, 1));
    for f in small_corpus(30, LIMIT).unwrap() {
        let (nc, ne) = coalgebras_match_embeddings(&h, &f).unwrap();
        assert_eq!(nc, ne, "{}", f.display_name());
    }
}

#[test]
fn algebra_bundles() {
    let h = h();
    let c = two();
    let algs = search_algebras(&h, &bang(&c)).unwrap();
    assert_eq!(algs.len(), 1);
    let (b, rep) = ralg_to_opfib_colim(&h, &algs[0]).unwrap();
    assert!(rep.all_pass());
    assert_eq!(b.initials, [0]);
    let back = opfib_colim_to_ralg(&h, &b).unwrap();
    assert_eq!(back.p, algs[0].p);

    let mut broken = b.clone();
    broken.initials = vec![1];
    assert!(matches!(opfib_colim_to_ralg(&h, &broken), Err(Error::BundleInvalid(_))));

    // pick0 has no algebra: its fibre over 1 is empty
    assert!(search_algebras(&h, &pick(&c, "0")).unwrap().is_empty());

    for f in small_corpus(30, LIMIT).unwrap() {
        let r = check_algebra_bundles(&h, &f).unwrap();
        assert!(r.all_pass(), "{}: {:?}", f.display_name(), r.first_failure());
    }
}

#[test]
fn counterexample_depths() {
    let (a_star, a_dot) = bundled_instance();
    let r = delta_empty_counterexample(1, &a_star, &a_dot, LIMIT).unwrap();
    assert!(!r.surjective);
    assert!(r.witnesses_well_formed);
    assert_eq!(r.witnesses.len(), 1);
    assert!(r.witnesses[0].contains("a_dot"), "{:?}", r.witnesses);
    for w in &r.witnesses {
        assert!(r.fibre.contains(w) && !r.image.contains(w));
    }

    let r2 = delta_empty_counterexample(2, &a_star, &a_dot, LIMIT).unwrap();
    assert!(!r2.surjective && r2.witnesses_well_formed);
    assert_eq!(r2.witnesses.len(), 2);
    assert!(r2.fibre.len() > r.fibre.len());

    let none = free("A.", &[], &[]).unwrap();
    let r = delta_empty_counterexample(1, &a_star, &none, LIMIT).unwrap();
    assert!(r.surjective);
    assert!(r.witnesses.is_empty());

    assert!(delta_empty_counterexample(1, &empty(), &a_dot, LIMIT).is_err());
}

#[test]
fn truncation_names_levels() {
    let t = TruncatedDeltaEmpty::new(2).unwrap();
    let a = one();
    let ta = t.apply(&a).unwrap();
    assert_eq!(ta.num_objects(), 3);
    let n = t.mult(&a).unwrap();
    assert!(n.after(&t.unit(&ta).unwrap()).unwrap().is_identity());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn poset_reflections_up_to_four(i in 0usize..1000) {
        let all = poset_reflections(4);
        let t = &all[i % all.len()];
        prop_assert!(t.validate().is_ok());
        prop_assert_eq!(is_simple_reflection(t).verdict, t_iso_coreflective(t).verdict);
    }

    #[test]
    fn witnesses_exist_for_corpus(i in 0usize..40) {
        let fs = small_corpus(40, LIMIT).unwrap();
        let f = &fs[i % fs.len()];
        prop_assert!(check_simplicity_witness(&h(), f).unwrap().is_some());
        let bad = Transferred::new(CorruptedMultiplication, LIMIT);
        if f.source().num_objects() > 0 {
            prop_assert!(check_simplicity_witness(&bad, f).unwrap().is_none());
        }
    }
}
