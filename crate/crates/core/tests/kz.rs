mod common;

use common::*;
use laxorth::awfs::{free_algebra, search_algebras, Fac, FactorizationSystem, IdentityFactorization};
use laxorth::coropf::{q, Coropf};
use laxorth::corpus::{idempotent, small_bases, small_corpus};
use laxorth::fincat::construct::empty;
use laxorth::fincat::{Cat, Functor, NatTrans};
use laxorth::kz::{
    all_cell_probes, awfs_lax_orth_structure, check_algebra_kz, check_awfs_lax_orthogonal, check_comonad_kz_at,
    check_monad_kz_at, check_monad_kz_conditions, check_monad_kz_free, extract_lax_orth_structure, kz_instance_law,
    pitchfork_kz_object_check, pitchfork_retract_unit, validate_lax_orth_structure, AdjunctionKind, FillerCaps, Probes,
};
use laxorth::lifting::{all_fillers, kz_filler_choice};
use laxorth::report::Verdict;
use laxorth::simple::{monad_algebras, CorruptedMultiplication, InitCompletion, Transferred};
use laxorth::Error;
use proptest::prelude::*;

fn coropf() -> Coropf {
    Coropf::new(LIMIT)
}

fn init() -> Transferred<InitCompletion> {
    Transferred::new(InitCompletion, LIMIT)
}

/// Coropf with `sigma_f` replaced by `L(Lf) o q_f`.
struct BadSigma(Coropf);

impl FactorizationSystem for BadSigma {
    type Base = Cat;
    type Data = <Coropf as FactorizationSystem>::Data;

    fn name(&self) -> String {
        "bad-sigma".into()
    }
    fn base(&self) -> &Cat {
        self.0.base()
    }
    fn factor(&self, f: &Functor) -> laxorth::Result<Fac<Self>> {
        self.0.factor(f)
    }
    fn on_square(&self, ff: &Fac<Self>, fg: &Fac<Self>, h: &Functor, k: &Functor) -> laxorth::Result<Functor> {
        self.0.on_square(ff, fg, h, k)
    }
    fn on_cell(&self, ff: &Fac<Self>, fg: &Fac<Self>, a: &NatTrans, b: &NatTrans) -> laxorth::Result<NatTrans> {
        self.0.on_cell(ff, fg, a, b)
    }
    fn comultiplication(&self, ff: &Fac<Self>, flf: &Fac<Self>) -> laxorth::Result<Functor> {
        flf.left.after(q(ff))
    }
    fn multiplication(&self, ff: &Fac<Self>, frf: &Fac<Self>) -> laxorth::Result<Functor> {
        self.0.multiplication(ff, frf)
    }
}

fn corpus() -> Vec<Functor> {
    small_corpus(30, LIMIT).unwrap()
}

#[test]
fn comonad_and_monad_kz_on_corpus() {
    for f in corpus() {
        for w in [check_comonad_kz_at(&coropf(), &f).unwrap(), check_comonad_kz_at(&init(), &f).unwrap()] {
            let w = w.unwrap_or_else(|| panic!("no comonad witness at {}", f.display_name()));
            assert_eq!(w.kind, AdjunctionKind::Coretract);
            assert!(w.verify());
        }
        for w in [check_monad_kz_free(&coropf(), &f).unwrap(), check_monad_kz_free(&init(), &f).unwrap()] {
            let w = w.unwrap_or_else(|| panic!("no monad witness at {}", f.display_name()));
            assert_eq!(w.kind, AdjunctionKind::Retract);
            assert!(w.verify());
        }
    }
}

#[test]
fn monad_kz_at_split_opfibration() {
    let c = two();
    let algs = search_algebras(&coropf(), &bang(&c)).unwrap();
    assert_eq!(algs.len(), 1);
    let w = check_monad_kz_at(&coropf(), &algs[0]).unwrap().unwrap();
    assert!(w.verify());
    assert!(w.adjunction.unit.whisker_left(&algs[0].fac.right).unwrap().is_identity());

    let id = IdentityFactorization { base: Cat::new(LIMIT) };
    let w = check_monad_kz_free(&id, &Functor::identity(&c)).unwrap().unwrap();
    assert!(w.adjunction.unit.is_identity());
}

#[test]
fn broken_sigma_has_no_witness() {
    let c = two();
    let bad = BadSigma(coropf());
    assert!(check_comonad_kz_at(&bad, &pick(&c, "0")).unwrap().is_none());
    assert!(check_comonad_kz_at(&coropf(), &pick(&c, "0")).unwrap().is_some());
}

#[test]
fn lax_orthogonal_handles() {
    let fs: Vec<Functor> = corpus().into_iter().step_by(3).collect();
    let caps = FillerCaps { pairs: 40, squares: 3 };
    for r in [
        check_awfs_lax_orthogonal(&coropf(), &fs, caps).unwrap(),
        check_awfs_lax_orthogonal(&init(), &fs, caps).unwrap(),
        check_awfs_lax_orthogonal(&IdentityFactorization { base: Cat::new(LIMIT) }, &fs, caps).unwrap(),
    ] {
        assert!(r.all_pass(), "{:?}", r.first_failure());
        assert!(r.records.iter().any(|x| x.check == "canonical filler is KZ"));
    }
    assert_eq!(kz_instance_law(&coropf(), &fs).unwrap(), (true, true));
    assert_eq!(kz_instance_law(&init(), &fs).unwrap(), (true, true));
}

#[test]
fn monad_level_conditions() {
    for a in small_bases() {
        let (r, w) = check_monad_kz_conditions(&InitCompletion, &a, LIMIT).unwrap();
        assert!(r.all_pass(), "{}: {:?}", a.name(), r.first_failure());
        assert!(w.unwrap().modification.is_some());
        for alg in monad_algebras(&InitCompletion, &a, LIMIT).unwrap() {
            let w = check_algebra_kz(&InitCompletion, &a, &alg, LIMIT).unwrap();
            assert!(w.is_some_and(|w| w.verify()), "{}", a.name());
        }
    }
    let (r, w) = check_monad_kz_conditions(&CorruptedMultiplication, &two(), LIMIT).unwrap();
    assert!(!r.all_pass());
    assert!(w.is_none());
}

/// `f: 0 -> 1` against `g: E -> 1` for the idempotent `e` on one object.
fn e_pair() -> (Functor, Functor) {
    let e = idempotent();
    (Functor::new(empty(), one(), vec![], vec![]).unwrap(), bang(&e))
}

#[test]
fn endo_cell_theta() {
    let base = Cat::new(LIMIT);
    let (f, g) = e_pair();
    let e = g.source().clone();
    let err = extract_lax_orth_structure(&base, &f, &g, |sq| Ok(all_fillers(&base, sq)?.remove(0))).unwrap_err();
    assert!(matches!(err, Error::WitnessNotFound(ref m) if m.starts_with("2 cells")), "{err}");

    let d = Functor::constant(&one(), &e, 0);
    let sq_h = Functor::new(empty(), e.clone(), vec![], vec![]).unwrap();
    let squares = laxorth::lifting::squares(&base, &f, &g).unwrap();
    assert_eq!(squares.len(), 1);
    assert_eq!(squares[0].h, sq_h);
    let cell = |name: &str| nat_of(&d, &d, &[e.arrow_id(name).unwrap()]);
    let mk = |theta: NatTrans| laxorth::kz::LaxOrthStructure {
        f: f.clone(),
        g: g.clone(),
        squares: squares.clone(),
        section: vec![d.clone()],
        theta: vec![vec![(d.clone(), theta)]],
    };

    let st = mk(cell("e"));
    let probes = Probes {
        cells: all_cell_probes(&st, &base).unwrap(),
        morphisms: vec![],
    };
    assert_eq!(probes.cells.len(), 2);
    let r = validate_lax_orth_structure(&st, &base, &probes).unwrap();
    assert!(r.all_pass(), "{:?}", r.first_failure());

    let st = mk(cell("id_*"));
    let r = validate_lax_orth_structure(&st, &base, &probes).unwrap();
    let bad: Vec<&str> = r.records.iter().filter(|x| x.verdict == Verdict::Fail).map(|x| x.check.as_str()).collect();
    assert_eq!(bad, ["naturality of theta"]);
}

#[test]
fn perturbed_theta_fails_boundary() {
    let base = Cat::new(LIMIT);
    let e = idempotent();
    let f = Functor::new(empty(), one(), vec![], vec![]).unwrap();
    let g = Functor::identity(&e);
    let mut st = extract_lax_orth_structure(&base, &f, &g, |sq| Ok(sq.k.clone())).unwrap();
    let r = validate_lax_orth_structure(&st, &base, &Probes::default()).unwrap();
    assert!(r.all_pass());
    for (d, th) in st.theta.iter_mut().flat_map(|row| row.iter_mut()) {
        *th = nat_of(d, d, &[e.arrow_id("e").unwrap()]);
    }
    let r = validate_lax_orth_structure(&st, &base, &Probes::default()).unwrap();
    assert_eq!(r.first_failure().unwrap().check, "g . theta = 1 and theta . f = 1");
}

#[test]
fn awfs_structures_validate() {
    let c = two();
    let base = Cat::new(LIMIT);
    for (f, g) in [(pick(&c, "0"), bang(&c)), (bang(&c), pick(&c, "1")), (Functor::identity(&c), bang(&c))] {
        for st in [awfs_lax_orth_structure(&coropf(), &f, &g).unwrap(), awfs_lax_orth_structure(&init(), &f, &g).unwrap()] {
            let probes = Probes {
                cells: all_cell_probes(&st, &base).unwrap(),
                morphisms: vec![],
            };
            let r = validate_lax_orth_structure(&st, &base, &probes).unwrap();
            assert!(r.all_pass(), "{} / {}: {:?}", f.display_name(), g.display_name(), r.first_failure());
            for (i, sq) in st.squares.iter().enumerate() {
                assert!(kz_filler_choice(&base, sq).unwrap().is_some());
                assert!(st.theta_at(i, &st.section[i]).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn pitchfork_examples() {
    let c = two();
    let s = coropf();
    let g = bang(&c);
    let alg = &search_algebras(&s, &g).unwrap()[0];
    assert!(pitchfork_kz_object_check(&s, &g, &alg.p).unwrap());
    assert!(pitchfork_retract_unit(&s, &g, &alg.p).unwrap().is_some());

    let fg = s.factor(&g).unwrap();
    let wrong = Functor::constant(&fg.middle, &c, 1);
    assert!(!pitchfork_kz_object_check(&s, &g, &wrong).unwrap());
    assert!(pitchfork_retract_unit(&s, &g, &wrong).unwrap().is_none());
    // shapes that do not match are rejected
    assert!(!pitchfork_kz_object_check(&s, &g, &Functor::identity(&c)).unwrap());

    for f in [pick(&c, "0"), Functor::identity(&c), g.clone()] {
        let free = free_algebra(&s, &f).unwrap();
        assert!(pitchfork_kz_object_check(&s, &free.fac.f, &free.p).unwrap());
        assert!(pitchfork_retract_unit(&s, &free.fac.f, &free.p).unwrap().is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn witnesses_are_unique_and_valid(i in 0usize..60) {
        let fs = small_corpus(60, LIMIT).unwrap();
        let f = &fs[i % fs.len()];
        // NotUnique would surface as an error
        let w = check_comonad_kz_at(&coropf(), f).unwrap();
        prop_assert!(w.is_some_and(|w| w.verify()));
        for alg in search_algebras(&coropf(), f).unwrap() {
            let w = check_monad_kz_at(&coropf(), &alg).unwrap();
            prop_assert!(w.is_some_and(|w| w.verify()));
        }
    }
}
