use laxorth::awfs::{
    check_comonad_laws, check_distributive_law, check_functorial_factorization, check_monad_laws, is_idempotent_pair,
    unique_lifting_counterexample, FactorizationSystem, MorOf,
};
use laxorth::coropf::{coalgebra_lari_counts, split_opfib_structure, Coropf};
use laxorth::corpus::default_corpus;
use laxorth::fincat::text::Document;
use laxorth::fincat::{Cat, Functor, SearchLimit, TwoCategory};
use laxorth::kz::{check_awfs_lax_orthogonal, kz_instance_law, FillerCaps};
use laxorth::report::{CheckReport, Verdict};
use laxorth::simple::{
    check_algebra_bundles, check_fibres, check_simplicity_agreement, check_simplicity_witness, check_terminal_case,
    coalgebras_match_embeddings, poset_reflections, InitCompletion, ReflectionHandle, ReflectionMonad, Transferred,
};

use crate::handles::Handle;
use crate::report::Report;
use crate::Failure;

pub const SUITES: &[&str] = &["laws", "distributive", "kz", "orthogonality", "prop19", "thm7", "prop3", "fibres", "simplicity"];

/// Functors visited by the orthogonality suite, which solves every lifting
/// problem between every pair.
const ORTHOGONALITY_CAP: usize = 12;

fn guard<T>(rep: &mut Report, check: &str, subject: &str, r: laxorth::Result<T>) -> Option<T> {
    match r {
        Ok(x) => Some(x),
        Err(e) => {
            rep.add(check, subject, false, || e.to_string());
            None
        }
    }
}

fn corpus_from(doc: Option<&Document>, limit: SearchLimit, rep: &mut Report) -> Result<Vec<Functor>, Failure> {
    match doc {
        Some(d) => Ok(d.functors().map(|(n, f)| f.clone().named(n)).collect()),
        None => {
            let c = default_corpus(limit)?;
            rep.truncated.push(format!("built-in corpus capped at {} functors", c.len()));
            Ok(c)
        }
    }
}

fn general_suite<S>(s: &S, suite: &str, corpus: &[MorOf<S>], rep: &mut Report) -> bool
where
    S: FactorizationSystem,
{
    let b = s.base();
    match suite {
        "laws" => {
            for f in corpus {
                let subj = b.describe(f);
                if let Some(r) = guard(rep, "comonad laws", &subj, check_comonad_laws(s, f)) {
                    rep.absorb(r);
                }
                if let Some(r) = guard(rep, "monad laws", &subj, check_monad_laws(s, f)) {
                    rep.absorb(r);
                }
            }
            for chunk in corpus.chunks(4) {
                if let Some(r) = guard(rep, "functorial factorisation", "corpus chunk", check_functorial_factorization(s, chunk, 2)) {
                    rep.absorb(r);
                }
            }
        }
        "distributive" => {
            for f in corpus {
                if let Some(r) = guard(rep, "distributive law", &b.describe(f), check_distributive_law(s, f)) {
                    rep.absorb(r);
                }
            }
        }
        "orthogonality" => {
            let stride = corpus.len().div_ceil(ORTHOGONALITY_CAP).max(1);
            let sub: Vec<MorOf<S>> = corpus.iter().step_by(stride).cloned().collect();
            if sub.len() < corpus.len() {
                rep.truncated.push(format!("orthogonality suite uses every {stride}th functor ({} in all)", sub.len()));
            }
            let Some(idem) = guard(rep, "idempotent pair", s.name().as_str(), is_idempotent_pair(s, &sub)) else {
                return true;
            };
            let mut counterexample = None;
            for f in &sub {
                match unique_lifting_counterexample(s, std::slice::from_ref(f)) {
                    Ok(Some(c)) => {
                        counterexample = Some(c);
                        break;
                    }
                    Ok(None) => {}
                    Err(e) => rep.unsupported("unique lifting", &b.describe(f), e.to_string()),
                }
            }
            rep.line(format!(
                "idempotent pair: comonad {}, monad {}",
                idem.comonad_idempotent, idem.monad_idempotent
            ));
            if let Some(w) = &idem.sigma_witness {
                rep.line(format!("sigma not invertible at {w}"));
            }
            if let Some(w) = &idem.pi_witness {
                rep.line(format!("pi not invertible at {w}"));
            }
            if let Some(c) = &counterexample {
                rep.line(format!("non-unique lifting: {c}"));
            }
            let both = idem.comonad_idempotent && idem.monad_idempotent;
            rep.add("idempotent pair iff unique lifting", &s.name(), both == counterexample.is_none(), || {
                format!("flags ({}, {}), counterexample {:?}", idem.comonad_idempotent, idem.monad_idempotent, counterexample)
            });
        }
        _ => return false,
    }
    true
}

fn cat_suite<S>(s: &S, suite: &str, corpus: &[Functor], rep: &mut Report) -> bool
where
    S: FactorizationSystem<Base = Cat>,
{
    if general_suite(s, suite, corpus, rep) {
        return true;
    }
    if suite != "kz" {
        return false;
    }
    if let Some(r) = guard(rep, "lax orthogonality", &s.name(), check_awfs_lax_orthogonal(s, corpus, FillerCaps::default())) {
        rep.absorb(r);
    }
    if let Some((monad, comonad)) = guard(rep, "monad KZ implies comonad KZ", &s.name(), kz_instance_law(s, corpus)) {
        rep.add("monad KZ implies comonad KZ", &s.name(), !monad || comonad, || "comonad fails where the monad is KZ".into());
    }
    true
}

fn coropf_suite(s: &Coropf, suite: &str, corpus: &[Functor], rep: &mut Report) -> bool {
    match suite {
        "prop19" => {
            for f in corpus {
                let subj = f.display_name();
                if let Some((c, l)) = guard(rep, "coalgebras match LARIs", &subj, coalgebra_lari_counts(s, f)) {
                    rep.add("coalgebras match LARIs", &subj, c == l, || format!("{c} coalgebras, {l} LARIs"));
                }
            }
        }
        "thm7" => {
            let mut n = 0;
            for f in corpus {
                let subj = f.display_name();
                if let Some(a) = guard(rep, "split cleavages match algebras", &subj, split_opfib_structure(s, f)) {
                    n += usize::from(a.is_some());
                    rep.add("split cleavages match algebras", &subj, true, String::new);
                }
            }
            rep.line(format!("{n} corpus functors are split opfibrations"));
        }
        _ => return cat_suite(s, suite, corpus, rep),
    }
    true
}

fn init_suite(h: &Transferred<InitCompletion>, suite: &str, corpus: &[Functor], rep: &mut Report) -> bool {
    match suite {
        "prop19" => {
            for f in corpus {
                let subj = f.display_name();
                if let Some((c, e)) = guard(rep, "coalgebras match F-embeddings", &subj, coalgebras_match_embeddings(h, f)) {
                    rep.add("coalgebras match F-embeddings", &subj, c == e, || format!("{c} coalgebras, {e} embeddings"));
                }
            }
        }
        "thm7" => {
            for f in corpus {
                if let Some(r) = guard(rep, "algebra bundles", &f.display_name(), check_algebra_bundles(h, f)) {
                    rep.absorb(r);
                }
            }
        }
        "fibres" => {
            for f in corpus {
                if let Some(r) = guard(rep, "fibres", &f.display_name(), check_fibres(h, f)) {
                    rep.absorb(r);
                }
            }
            let mut seen: Vec<String> = Vec::new();
            for f in corpus {
                let a = f.source();
                if seen.iter().any(|n| n == a.name()) {
                    continue;
                }
                seen.push(a.name().to_string());
                if let Some(r) = guard(rep, "terminal case", a.name(), check_terminal_case(h, a)) {
                    rep.absorb(r);
                }
            }
        }
        "simplicity" => {
            for f in corpus {
                let subj = f.display_name();
                if let Some(w) = guard(rep, "simplicity witness", &subj, check_simplicity_witness(h, f)) {
                    rep.add("simplicity witness", &subj, w.is_some(), || "no coretract adjunction".into());
                }
            }
        }
        _ => return cat_suite(h, suite, corpus, rep),
    }
    true
}

fn all_poset_reflections(reflections: &[ReflectionMonad], rep: &mut Report) {
    let mut agg = CheckReport::new();
    for t in reflections {
        agg.extend(check_simplicity_agreement(t));
    }
    let (pass, unsupported) = (agg.count(Verdict::Pass), agg.count(Verdict::Unsupported));
    rep.line(format!("{} reflections: {pass} agree, {unsupported} lack pullbacks", reflections.len()));
    let first = agg.records.iter().find(|r| r.verdict == Verdict::Fail);
    rep.add("simplicity matches T-Iso coreflectivity", &format!("{} reflections", reflections.len()), first.is_none(), || {
        first.map(|r| format!("{}: {}", r.subject, r.detail.clone().unwrap_or_default())).unwrap_or_default()
    });
}

fn reflection_suites(t: &ReflectionMonad, suites: &[String], rep: &mut Report) -> Result<(), Failure> {
    let needs_handle = suites.iter().any(|s| s != "prop3");
    let handle = if needs_handle { Some(ReflectionHandle::new(t.clone())?) } else { None };
    for suite in suites {
        if suite == "prop3" {
            rep.absorb(check_simplicity_agreement(t));
            continue;
        }
        let h = handle.as_ref().expect("built above");
        let arrows: Vec<usize> = t.base.arrows().collect();
        if !general_suite(h, suite, &arrows, rep) {
            rep.unsupported(suite, &h.name(), "suite needs a 2-categorical base");
        }
    }
    Ok(())
}

pub fn run(h: &Handle, suites: &[String], corpus: Option<&Document>, limit: SearchLimit, rep: &mut Report) -> Result<(), Failure> {
    if let Some(bad) = suites.iter().find(|s| !SUITES.contains(&s.as_str())) {
        return Err(Failure(format!("unknown suite `{bad}`; use {}", SUITES.join(", "))));
    }
    match h {
        Handle::Reflection(t) => return reflection_suites(t, suites, rep),
        Handle::AllPosets(n) => {
            for suite in suites {
                if suite == "prop3" {
                    all_poset_reflections(&poset_reflections(*n), rep);
                } else {
                    rep.unsupported(suite, "reflection:all-posets", "only prop3 runs over all reflections");
                }
            }
            return Ok(());
        }
        _ => {}
    }
    let corpus = corpus_from(corpus, limit, rep)?;
    for suite in suites {
        let handled = match h {
            Handle::Coropf(s) => coropf_suite(s, suite, &corpus, rep),
            Handle::Init(s) => init_suite(s, suite, &corpus, rep),
            Handle::Identity(s) => cat_suite(s, suite, &corpus, rep),
            Handle::Reflection(_) | Handle::AllPosets(_) => unreachable!(),
        };
        if !handled {
            rep.unsupported(suite, &handle_name(h), "suite does not apply to this handle");
        }
    }
    Ok(())
}

fn handle_name(h: &Handle) -> String {
    match h {
        Handle::Coropf(s) => s.name(),
        Handle::Init(s) => s.name(),
        Handle::Identity(s) => s.name(),
        Handle::Reflection(t) => format!("reflection:{}", t.name),
        Handle::AllPosets(_) => "reflection:all-posets".into(),
    }
}
