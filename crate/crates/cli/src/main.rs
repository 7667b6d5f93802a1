mod handles;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use laxorth::fincat::text::{parse_document, Document, Item};
use laxorth::fincat::{construct, CatRef, SearchLimit};
use laxorth::simple::{bundled_instance, delta_empty_counterexample};

use handles::Handle;
use report::Report;

#[derive(Parser, Debug)]
#[command(name = "laxorth", version, about = "Checks factorisation systems on finite categories")]
struct Cli {
    /// Maximum number of candidates any single search may visit.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    limit: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate input files, listing what they define.
    Validate {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Factor one morphism with a handle.
    Factor {
        #[arg(long)]
        handle: String,
        /// A functor name from the inputs, or an arrow name for reflection handles.
        #[arg(long)]
        morphism: String,
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
    },
    /// Run check suites over a corpus.
    Check {
        #[arg(long)]
        handle: String,
        /// Comma-separated: laws, distributive, kz, orthogonality, prop19, thm7, prop3, fibres, simplicity.
        #[arg(long, value_delimiter = ',', required = true)]
        suite: Vec<String>,
        /// Files whose functors form the corpus; the built-in corpus otherwise.
        #[arg(long)]
        corpus: Vec<PathBuf>,
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
    },
    /// The comparison for the truncated empty-completion monad.
    Counterexample {
        #[arg(long)]
        depth: usize,
        /// Use an empty second component.
        #[arg(long)]
        empty_dot: bool,
        /// Category names from the inputs for the two components.
        #[arg(long, requires = "a_dot")]
        a_star: Option<String>,
        #[arg(long)]
        a_dot: Option<String>,
        #[arg(long = "input")]
        inputs: Vec<PathBuf>,
    },
}

#[derive(Debug)]
pub(crate) struct Failure(pub(crate) String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn load(paths: &[PathBuf]) -> Result<Document, Failure> {
    let mut doc = Document::default();
    for p in paths {
        let src = std::fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
        let d = parse_document(&src).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
        doc.merge(d).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
    }
    Ok(doc)
}

fn validate(paths: &[PathBuf], rep: &mut Report) {
    for p in paths {
        let subject = p.display().to_string();
        let src = match std::fs::read_to_string(p) {
            Ok(s) => s,
            Err(e) => {
                rep.add("read", &subject, false, || e.to_string());
                continue;
            }
        };
        match parse_document(&src) {
            Ok(doc) => {
                rep.add("parse and validate", &subject, true, String::new);
                for (name, item) in &doc.items {
                    rep.line(match item {
                        Item::Category(c) => {
                            let n = c.arrows().filter(|&u| !c.is_identity(u)).count();
                            let s = if n == 1 { "" } else { "s" };
                            format!("category {name}: {} objects, {n} non-identity arrow{s}", c.num_objects())
                        }
                        Item::Functor(f) => format!("functor {name}: {} -> {}", f.source().name(), f.target().name()),
                        Item::NatTrans(t) => format!(
                            "nattrans {name}: {} => {}",
                            t.source().display_name(),
                            t.target().display_name()
                        ),
                    });
                }
            }
            Err(e) => rep.add("parse and validate", &subject, false, || e.to_string()),
        }
    }
}

fn counterexample(
    depth: usize,
    empty_dot: bool,
    names: Option<(String, String)>,
    doc: &Document,
    limit: SearchLimit,
    rep: &mut Report,
) -> Result<(), Failure> {
    let (a_star, a_dot): (CatRef, CatRef) = match names {
        Some((s, d)) => {
            let get = |n: &str| doc.category(n).cloned().ok_or_else(|| Failure(format!("unknown category `{n}`")));
            (get(&s)?, get(&d)?)
        }
        None => {
            let (s, d) = bundled_instance();
            (s, if empty_dot { construct::empty() } else { d })
        }
    };
    let cx = delta_empty_counterexample(depth, &a_star, &a_dot, limit)?;
    rep.line(if cx.surjective { "SURJECTIVE" } else { "NONSURJECTIVE" });
    rep.line(format!("depth {depth}: fibre over * has {} objects, image has {}", cx.fibre.len(), cx.image.len()));
    for w in &cx.witnesses {
        rep.line(format!("witness {w}"));
    }
    rep.add("witnesses are ((a,n),xi) with a in A_dot and n >= 1", &format!("depth {depth}"), cx.witnesses_well_formed, || {
        cx.witnesses.join(", ")
    });
    rep.counterexample = Some(cx);
    Ok(())
}

fn run(cli: &Cli, rep: &mut Report) -> Result<(), Failure> {
    let limit = SearchLimit(cli.limit);
    if cli.limit == 0 {
        return Err(Failure("--limit must be positive".into()));
    }
    match &cli.command {
        Command::Validate { paths } => validate(paths, rep),
        Command::Factor { handle, morphism, inputs } => {
            let doc = load(inputs)?;
            let h = Handle::parse(handle, &doc, limit)?;
            h.factor(morphism, &doc, rep)?;
        }
        Command::Check {
            handle,
            suite,
            corpus,
            inputs,
        } => {
            let doc = load(inputs)?;
            let h = Handle::parse(handle, &doc, limit)?;
            let corpus_doc = if corpus.is_empty() { None } else { Some(load(corpus)?) };
            suites::run(&h, suite, corpus_doc.as_ref(), limit, rep)?;
        }
        Command::Counterexample {
            depth,
            empty_dot,
            a_star,
            a_dot,
            inputs,
        } => {
            if *depth == 0 {
                return Err(Failure("--depth must be at least 1".into()));
            }
            let doc = load(inputs)?;
            let names = a_star.clone().zip(a_dot.clone());
            counterexample(*depth, *empty_dot, names, &doc, limit, rep)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut rep = Report::new(std::env::args().skip(1).collect());
    let start = Instant::now();
    let outcome = run(&cli, &mut rep);
    rep.elapsed_ms = start.elapsed().as_millis() as u64;
    if let Err(Failure(msg)) = &outcome {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match cli.format {
        Format::Text => print!("{}", rep.render_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&rep).expect("report serialises")),
    }
    if rep.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
