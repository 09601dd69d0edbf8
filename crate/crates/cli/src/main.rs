//! `fincat`: command-line access to the category tools and the verification
//! suite.
//!
//! Exit codes: 0 on success, 1 on a negative result, a validation failure or
//! (with `--strict`) a not-applicable verdict, 2 on usage and parse errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fincat::harness::corpus::{default_corpus, load_manifest, CorpusSpec, FAMILIES};
use fincat::harness::suite::{run_full_suite, search_budget_from_env};
use fincat::harness::verifiers::{verify, Analysis};
use fincat::limits::{
    delta_functors, is_distributive, is_semi_additive, plus_times_functors, LimitCache, PropertyReport, Scope,
};
use fincat::search::{search_natural_transformations, SearchLimits};
use fincat::serial::{category_to_string, load_category, load_category_unchecked, SerialError};
use fincat::{FinCategory, TheoremId, Verdict};

#[derive(Parser)]
#[command(name = "fincat", version, about = "Finite categories, limits and the distributivity checks")]
struct Cli {
    /// Print exact structures as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Treat not-applicable verdicts and incomplete coverage as failures.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lhs {
    Delta,
    PlusTimes,
}

#[derive(Subcommand)]
enum Command {
    /// Check the category axioms of a document.
    Validate { file: PathBuf },
    /// Print terminal and initial objects and the binary product and
    /// coproduct tables.
    Limits { file: PathBuf },
    /// Decide whether every canonical δ is invertible.
    CheckDistributive {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        scope: Scope,
    },
    /// Decide whether the category is pointed and every canonical α is
    /// invertible.
    CheckSemiadditive {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        scope: Scope,
    },
    /// Search for natural isomorphisms between the δ or plus/times functors.
    SearchNatiso {
        file: PathBuf,
        #[arg(long, value_enum)]
        lhs: Lhs,
        /// Stop after this many isomorphisms.
        #[arg(long, default_value_t = 1)]
        limit: usize,
    },
    /// Run one theorem verifier.
    Verify {
        file: PathBuf,
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
    },
    /// Generate a category from a family and write it as a document.
    Gen {
        family: String,
        params: Vec<String>,
        /// Output file; standard output when absent.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Run every verifier over a corpus.
    Suite {
        /// `default` or the path of a JSON manifest.
        #[arg(long, default_value = "default")]
        corpus: String,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::parse(s).ok_or_else(|| {
        let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
        format!("unknown theorem (expected one of {})", names.join(", "))
    })
}

/// An error with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn negative(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("fincat: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let budget = search_budget_from_env().map_err(Failure::usage)?;
    match &cli.command {
        Command::Validate { file } => validate(cli, file),
        Command::Limits { file } => limits(cli, file),
        Command::CheckDistributive { file, scope } => property(cli, file, *scope, true),
        Command::CheckSemiadditive { file, scope } => property(cli, file, *scope, false),
        Command::SearchNatiso { file, lhs, limit } => search(cli, file, *lhs, *limit, budget),
        Command::Verify { file, theorem } => verify_file(cli, file, *theorem, budget),
        Command::Gen { family, params, output } => generate(family, params, output.as_deref()),
        Command::Suite { corpus } => suite(cli, corpus, budget),
    }
}

fn emit(cli: &Cli, value: Value, text: impl FnOnce() -> String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&value).expect("JSON value"));
    } else {
        print!("{}", text());
    }
}

fn serial_failure(e: SerialError) -> Failure {
    match e {
        SerialError::Invalid(report) => Failure::negative(format!("category axioms violated: {report}")),
        other => Failure::usage(other.to_string()),
    }
}

/// The stored name, or `src→dst` when that already identifies the morphism.
fn morphism_label(c: &FinCategory, f: usize) -> String {
    let (a, b) = c.ends(f);
    match &c.morphism_names()[f] {
        Some(n) => n.clone(),
        None if c.hom_size(a, b) == 1 => format!("{}→{}", c.object_name(a), c.object_name(b)),
        None => c.morphism_name(f),
    }
}

fn load(file: &Path) -> Result<FinCategory, Failure> {
    load_category(file).map_err(serial_failure)
}

fn validate(cli: &Cli, file: &Path) -> Outcome {
    let c = load_category_unchecked(file).map_err(serial_failure)?;
    let report = c.validate();
    emit(cli, json!({ "file": file, "validation": report }), || {
        if report.ok {
            format!("ok: {} objects, {} morphisms\n", c.object_count(), c.morphism_count())
        } else {
            format!("invalid: {report}")
        }
    });
    Ok(if report.ok { 0 } else { 1 })
}

fn limits(cli: &Cli, file: &Path) -> Outcome {
    let c = load(file)?;
    let cache = LimitCache::build(&c);
    let name = |x| c.object_name(x);
    let mor = |f| morphism_label(&c, f);
    let mut products = Vec::new();
    let mut coproducts = Vec::new();
    let mut text = String::new();
    text.push_str(&format!(
        "terminal: {}\ninitial: {}\n",
        cache.terminal.map_or("none".into(), name),
        cache.initial.map_or("none".into(), name)
    ));
    text.push_str("products:\n");
    for x in c.objects() {
        for y in c.objects() {
            match cache.product(x, y) {
                Some(w) => {
                    products.push(json!({
                        "factors": [x, y], "apex": w.apex,
                        "projections": [w.projections.0, w.projections.1],
                    }));
                    text.push_str(&format!(
                        "  {} × {} = {}  (pr1 {}, pr2 {})\n",
                        name(x),
                        name(y),
                        name(w.apex),
                        mor(w.projections.0),
                        mor(w.projections.1)
                    ));
                }
                None => {
                    products.push(json!({ "factors": [x, y], "apex": null }));
                    text.push_str(&format!("  {} × {} missing\n", name(x), name(y)));
                }
            }
        }
    }
    text.push_str("coproducts:\n");
    for x in c.objects() {
        for y in c.objects() {
            match cache.coproduct(x, y) {
                Some(w) => {
                    coproducts.push(json!({
                        "summands": [x, y], "apex": w.apex,
                        "injections": [w.injections.0, w.injections.1],
                    }));
                    text.push_str(&format!(
                        "  {} + {} = {}  (in1 {}, in2 {})\n",
                        name(x),
                        name(y),
                        name(w.apex),
                        mor(w.injections.0),
                        mor(w.injections.1)
                    ));
                }
                None => {
                    coproducts.push(json!({ "summands": [x, y], "apex": null }));
                    text.push_str(&format!("  {} + {} missing\n", name(x), name(y)));
                }
            }
        }
    }
    let value = json!({
        "terminal": cache.terminal,
        "initial": cache.initial,
        "products": products,
        "coproducts": coproducts,
    });
    emit(cli, value, || text);
    Ok(0)
}

fn property(cli: &Cli, file: &Path, scope: Scope, distributive: bool) -> Outcome {
    let c = load(file)?;
    let cache = LimitCache::build(&c);
    let report: PropertyReport = if distributive {
        is_distributive(&c, &cache, scope)
    } else {
        is_semi_additive(&c, &cache, scope)
    }
    .map_err(|e| Failure::negative(format!("{e} (use --scope existing to check the covered instances)")))?;
    emit(cli, json!(report), || {
        let mut s = report.to_string();
        if let Some(w) = &report.first_failure {
            let names: Vec<String> = w.iter().map(|&x| c.object_name(x)).collect();
            s.push_str(&format!("  failing objects: {}\n", names.join(", ")));
        }
        s
    });
    let incomplete = cli.strict && !report.complete();
    Ok(if report.holds && !incomplete { 0 } else { 1 })
}

fn search(cli: &Cli, file: &Path, lhs: Lhs, limit: usize, budget: u64) -> Outcome {
    let c = Arc::new(load(file)?);
    let cache = LimitCache::build(&c);
    let (source, target, label) = match lhs {
        Lhs::Delta => {
            let d = delta_functors(&c, &cache).map_err(|e| Failure::negative(e.to_string()))?;
            (d.lhs, d.rhs, "X×Y + X×Z ⇒ X×(Y+Z)")
        }
        Lhs::PlusTimes => {
            let p = plus_times_functors(&c, &cache).map_err(|e| Failure::negative(e.to_string()))?;
            (p.plus, p.times, "Y+Z ⇒ Y×Z")
        }
    };
    let limits = SearchLimits {
        max_results: Some(limit.max(1)),
        node_budget: budget,
    };
    let out = search_natural_transformations(&source, &target, true, limits)
        .map_err(|e| Failure::negative(e.to_string()))?;
    let found: Vec<Vec<usize>> = out.found.iter().map(|t| t.components.clone()).collect();
    let value = json!({
        "functors": label,
        "found": found,
        "nodes": out.stats.nodes,
        "budget_exhausted": out.stats.budget_exhausted,
        "result_limited": out.stats.result_limited,
    });
    emit(cli, value, || {
        let mut s = format!(
            "{label}: {} natural isomorphism(s) found, {} node(s){}\n",
            found.len(),
            out.stats.nodes,
            if out.stats.budget_exhausted {
                ", budget exhausted: nonexistence not established"
            } else if out.stats.result_limited {
                ", stopped at the limit"
            } else {
                ", search complete"
            }
        );
        for (i, comps) in found.iter().enumerate() {
            let names: Vec<String> = comps.iter().map(|&m| morphism_label(&c, m)).collect();
            s.push_str(&format!("  #{i}: [{}]\n", names.join(", ")));
        }
        s
    });
    Ok(match (found.is_empty(), out.stats.budget_exhausted) {
        (false, _) => 0,
        (true, true) if !cli.strict => 0,
        _ => 1,
    })
}

fn verdict_code(cli: &Cli, reports: &[fincat::TheoremReport]) -> u8 {
    let bad = reports
        .iter()
        .any(|r| r.verdict == Verdict::Inconsistent || !r.anomalies.is_empty());
    let vacuous = reports.iter().any(|r| r.verdict == Verdict::NotApplicable);
    u8::from(bad || (cli.strict && vacuous))
}

fn verify_file(cli: &Cli, file: &Path, theorem: TheoremId, budget: u64) -> Outcome {
    let c = load(file)?;
    let name = file.file_stem().map_or("category".into(), |s| s.to_string_lossy().into_owned());
    let analysis = Analysis::new(name, Arc::new(c), budget);
    let reports = verify(&analysis, theorem).map_err(|e| Failure::negative(e.to_string()))?;
    emit(cli, json!(reports), || reports.iter().map(|r| r.to_string()).collect());
    Ok(verdict_code(cli, &reports))
}

fn generate(family: &str, params: &[String], output: Option<&Path>) -> Outcome {
    let spec = CorpusSpec::from_args(family, params)
        .map_err(|e| Failure::usage(format!("{e}; families: {}", FAMILIES.join(", "))))?;
    let c = spec.build().map_err(|e| Failure::usage(e.to_string()))?;
    let text = category_to_string(&c);
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::negative(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn suite(cli: &Cli, corpus: &str, budget: u64) -> Outcome {
    let specs = if corpus == "default" {
        default_corpus()
    } else {
        load_manifest(corpus).map_err(|e| Failure::usage(e.to_string()))?
    };
    let report = run_full_suite(&specs, budget);
    emit(cli, json!(report), || report.to_string());
    let vacuous = report.reports().any(|r| r.verdict == Verdict::NotApplicable);
    Ok(u8::from(!report.is_clean() || (cli.strict && vacuous)))
}
