//! The command surface: argument parsing, dispatch and report rendering.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use homhopf::admissible::{canonical_system, check_admissible, check_canonical_structures, check_lemma41, theorem411_iso, IsoError};
use homhopf::constructions::{
    biproduct_antipode, build_biproduct, check_crossed_cocycle_conditions, check_radford_conditions,
    check_twisted_comodule_cocycle, crossed_product, AntipodeError, BiproductError, Precondition,
};
use homhopf::convact::{
    check_cocycle_inverse, check_comodule_coalgebra, check_hom_module, check_weak_module_algebra, convolution_inverse, Cocycle,
};
use homhopf::corpus::{entries, entry, run_check};
use homhopf::exactlin::{check_all, maps_equal, CheckReport, LinearMap};
use homhopf::homcore::{
    antipode_identities, check_antipode, check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hom_hopf, HomBialgebra,
    HomHopf,
};

use crate::export::{export_entry, Exporter};
use crate::format::{parse, serialize, Object, ParseError, StructureFile};

/// Exit status: every check passed.
pub const EXIT_PASS: i32 = 0;
/// Exit status: some check failed; its witness was printed.
pub const EXIT_FAIL: i32 = 1;
/// Exit status: bad arguments or unreadable input.
pub const EXIT_INPUT: i32 = 2;

/// Shipped example files, by file name.
pub const SHIPPED: [(&str, &str); 2] = [
    ("h4.struct", include_str!("../data/h4.struct")),
    ("radford.struct", include_str!("../data/radford.struct")),
];

/// The corpus entry each shipped file is an export of.
pub const SHIPPED_SOURCES: [(&str, &str); 2] = [("h4.struct", "sweedler-h4-hom"), ("radford.struct", "classical-radford")];

#[derive(Parser, Debug)]
#[command(name = "homhopf", version, about = "Exact checks and constructions for monoidal Hom-Hopf algebras")]
struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of the bundles in a file.
    Check {
        file: PathBuf,
        /// Axiom set to check, or `all` for every set that applies.
        #[arg(long, default_value = "all")]
        what: String,
        /// Restrict to one bundle.
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Build a crossed product, smash product or biproduct.
    #[command(allow_negative_numbers = true)]
    Build {
        kind: BuildKind,
        file: PathBuf,
        #[arg(short)]
        m: i64,
        #[arg(short)]
        k: i64,
        /// Write the result here instead of printing it.
        #[arg(short)]
        o: Option<PathBuf>,
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Verify or compute antipodes.
    Antipode {
        file: PathBuf,
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Check the canonical mapping system of a biproduct.
    Admissible {
        file: PathBuf,
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Build and verify the isomorphism between a biproduct and its mapping system.
    Iso {
        file: PathBuf,
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Re-run the built-in corpus against its recorded verdicts.
    Selftest,
    /// Print a corpus entry as a `.struct` file, or list the entries.
    Export {
        entry: Option<String>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BuildKind {
    Crossed,
    /// The crossed product with the trivial cocycle.
    Smash,
    Biproduct,
}

/// One report in a command's output.
#[derive(Serialize, Debug)]
pub struct Outcome {
    pub subject: String,
    pub check: String,
    pub report: CheckReport,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    passed: bool,
    results: &'a [Outcome],
}

#[derive(Serialize)]
struct JsonError<'a> {
    command: &'a str,
    error: ErrorBody,
}

#[derive(Serialize)]
struct ErrorBody {
    kind: String,
    message: String,
}

/// An input problem: the command exits with [`EXIT_INPUT`].
#[derive(Debug)]
struct InputError {
    kind: String,
    message: String,
}

impl From<ParseError> for InputError {
    fn from(e: ParseError) -> InputError {
        InputError {
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> InputError {
    InputError {
        kind: "UsageError".into(),
        message: message.into(),
    }
}

fn io_error(path: &Path, e: std::io::Error) -> InputError {
    InputError {
        kind: "IoError".into(),
        message: format!("{}: {e}", path.display()),
    }
}

/// What a command produced: reports, plus text printed instead of them.
struct Produced {
    results: Vec<Outcome>,
    text: Option<String>,
}

impl Produced {
    fn reports(results: Vec<Outcome>) -> Produced {
        Produced { results, text: None }
    }
}

/// Runs the command line `argv` (program name first), writing the report
/// stream to `out`. Returns the exit status.
pub fn run(argv: &[String], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(&cli.command) {
        Ok(p) => {
            let passed = p.results.iter().all(|o| o.report.passed);
            if let Some(text) = &p.text {
                let _ = write!(out, "{text}");
            } else if cli.json {
                let body = JsonReport {
                    command: name,
                    passed,
                    results: &p.results,
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("reports serialize"));
            } else {
                let _ = write!(out, "{}", render(&p.results));
            }
            if passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            if cli.json {
                let body = JsonError {
                    command: name,
                    error: ErrorBody {
                        kind: e.kind,
                        message: e.message,
                    },
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("errors serialize"));
            } else {
                let _ = writeln!(out, "error ({}): {}", e.kind, e.message);
            }
            EXIT_INPUT
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Build { .. } => "build",
        Command::Antipode { .. } => "antipode",
        Command::Admissible { .. } => "admissible",
        Command::Iso { .. } => "iso",
        Command::Selftest => "selftest",
        Command::Export { .. } => "export",
    }
}

/// Plain-text rendering of a list of reports.
pub fn render(results: &[Outcome]) -> String {
    let mut s = String::new();
    for o in results {
        s.push_str(&format!("== {} / {}\n{}\n", o.subject, o.check, o.report));
    }
    let failed = results.iter().filter(|o| !o.report.passed).count();
    if failed == 0 {
        s.push_str(&format!("all {} checks passed\n", results.len()));
    } else {
        s.push_str(&format!("{failed} of {} checks failed\n", results.len()));
    }
    s
}

fn load(path: &Path) -> Result<StructureFile, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Ok(parse(&text)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|e| io_error(path, e))
}

fn dispatch(c: &Command) -> Result<Produced, InputError> {
    match c {
        Command::Check { file, what, bundle } => check(&load(file)?, what, bundle.as_deref()).map(Produced::reports),
        Command::Build {
            kind,
            file,
            m,
            k,
            o,
            bundle,
        } => build(&load(file)?, *kind, *m, *k, o.as_deref(), bundle.as_deref()),
        Command::Antipode { file, bundle } => antipode(&load(file)?, bundle.as_deref()).map(Produced::reports),
        Command::Admissible { file, bundle } => {
            let f = load(file)?;
            let mut out = Vec::new();
            for (name, obj) in select(&f, bundle.as_deref(), &["biproduct"])? {
                let Object::Biproduct { spec, .. } = obj else { unreachable!() };
                let report = match build_biproduct(spec, Precondition::Enforce) {
                    Ok(b) => {
                        let cs = canonical_system(spec, &b);
                        let lemma = check_lemma41(spec.crossed()).unwrap_or_else(|e| failure("cocycle-action-identities", e));
                        CheckReport::group(
                            "admissible",
                            vec![lemma, check_canonical_structures(&cs), check_admissible(&cs.system)],
                        )
                    }
                    Err(e) => build_failure(e),
                };
                out.push(outcome(name, "admissible", report));
            }
            Ok(Produced::reports(out))
        }
        Command::Iso { file, bundle } => {
            let f = load(file)?;
            let mut out = Vec::new();
            for (name, obj) in select(&f, bundle.as_deref(), &["biproduct"])? {
                let Object::Biproduct { spec, .. } = obj else { unreachable!() };
                let report = match build_biproduct(spec, Precondition::Enforce) {
                    Ok(b) => match theorem411_iso(&canonical_system(spec, &b).system, Precondition::Enforce) {
                        Ok(iso) => iso.report,
                        Err(IsoError::NotAdmissible(r)) | Err(IsoError::IsoCheckFail(r)) => r,
                    },
                    Err(e) => build_failure(e),
                };
                out.push(outcome(name, "isomorphism", report));
            }
            Ok(Produced::reports(out))
        }
        Command::Selftest => Ok(Produced::reports(selftest())),
        Command::Export { entry: None, .. } => {
            let names: Vec<String> = entries().into_iter().map(|e| e.name).collect();
            Ok(Produced {
                results: Vec::new(),
                text: Some(names.join("\n") + "\n"),
            })
        }
        Command::Export { entry: Some(name), o } => {
            let e = entry(name).ok_or_else(|| usage(format!("no corpus entry named {name:?}")))?;
            let text = serialize(&export_entry(&e));
            match o {
                Some(path) => {
                    write_file(path, &text)?;
                    Ok(Produced {
                        results: Vec::new(),
                        text: Some(format!("wrote {}\n", path.display())),
                    })
                }
                None => Ok(Produced {
                    results: Vec::new(),
                    text: Some(text),
                }),
            }
        }
    }
}

fn outcome(subject: &str, check: &str, report: CheckReport) -> Outcome {
    Outcome {
        subject: subject.to_string(),
        check: check.to_string(),
        report,
    }
}

/// A failing report with an explanation instead of a witness.
fn failure(axiom_id: &str, why: impl ToString) -> CheckReport {
    CheckReport {
        axiom_id: axiom_id.to_string(),
        passed: false,
        witness: None,
        parts: Vec::new(),
        advisory: false,
        note: Some(why.to_string()),
    }
}

fn build_failure(e: BiproductError) -> CheckReport {
    match e {
        BiproductError::ConditionsFail(r) => r,
        BiproductError::Structure(e) => failure("biproduct", e),
    }
}

fn kind_of(o: &Object) -> &'static str {
    match o {
        Object::Algebra(_) => "algebra",
        Object::Coalgebra(_) => "coalgebra",
        Object::Bialgebra(_) => "bialgebra",
        Object::Hopf(_) => "hopf",
        Object::Action(_) => "action",
        Object::Coaction(_) => "coaction",
        Object::Cocycle(_) => "cocycle",
        Object::Crossed(_) => "crossed",
        Object::Biproduct { .. } => "biproduct",
    }
}

/// Bundles of the given kinds, or the named one if it has such a kind.
fn select<'f>(f: &'f StructureFile, bundle: Option<&str>, kinds: &[&str]) -> Result<Vec<(&'f str, &'f Object)>, InputError> {
    let found: Vec<(&str, &Object)> = match bundle {
        Some(name) => {
            let o = f.object(name).ok_or_else(|| usage(format!("no bundle named {name:?}")))?;
            vec![(f.objects().get_key_value(name).expect("present").0.as_str(), o)]
        }
        None => f.objects().iter().map(|(n, o)| (n.as_str(), o)).collect(),
    };
    let found: Vec<_> = found.into_iter().filter(|(_, o)| kinds.contains(&kind_of(o))).collect();
    if found.is_empty() {
        return Err(usage(format!("no bundle of kind {} to work on", kinds.join(" or "))));
    }
    Ok(found)
}

/// The single bundle of one of the given kinds.
fn select_one<'f>(f: &'f StructureFile, bundle: Option<&str>, kinds: &[&str]) -> Result<(&'f str, &'f Object), InputError> {
    let found = select(f, bundle, kinds)?;
    if found.len() > 1 {
        let names: Vec<&str> = found.iter().map(|(n, _)| *n).collect();
        return Err(usage(format!("several candidate bundles ({}); pick one with --bundle", names.join(", "))));
    }
    Ok(found[0])
}

/// Axiom sets, with the bundle kind each applies to.
pub const AXIOM_SETS: [(&str, &str); 16] = [
    ("hom-algebra", "algebra"),
    ("hom-coalgebra", "coalgebra"),
    ("hom-bialgebra", "bialgebra"),
    ("antipode", "hopf"),
    ("hom-hopf", "hopf"),
    ("weak-module-algebra", "action"),
    ("hom-module", "action"),
    ("comodule-coalgebra", "coaction"),
    ("cocycle-inverse", "cocycle"),
    ("crossed-product-conditions", "crossed"),
    ("crossed-product-algebra", "crossed"),
    ("cocycle-action-identities", "crossed"),
    ("biproduct-conditions", "biproduct"),
    ("twisted-comodule-cocycle", "biproduct"),
    ("biproduct-bialgebra", "biproduct"),
    ("biproduct-antipode", "biproduct"),
];

fn check(f: &StructureFile, what: &str, bundle: Option<&str>) -> Result<Vec<Outcome>, InputError> {
    let sets: Vec<(&str, &str)> = if what == "all" {
        AXIOM_SETS.to_vec()
    } else {
        let set = AXIOM_SETS
            .iter()
            .find(|(s, _)| *s == what)
            .ok_or_else(|| {
                let known: Vec<&str> = AXIOM_SETS.iter().map(|(s, _)| *s).collect();
                usage(format!("unknown axiom set {what:?}; known: all, {}", known.join(", ")))
            })?;
        vec![*set]
    };
    let kinds: Vec<&str> = sets.iter().map(|(_, k)| *k).collect();
    let mut out = Vec::new();
    for (name, obj) in select(f, bundle, &kinds)? {
        for (set, kind) in &sets {
            if *kind != kind_of(obj) {
                continue;
            }
            if let Some(report) = run_axiom_set(obj, set) {
                out.push(outcome(name, set, report));
            }
        }
    }
    if out.is_empty() {
        return Err(usage(format!("axiom set {what:?} applies to no bundle here")));
    }
    Ok(out)
}

/// `None` when the set needs data the bundle does not carry.
fn run_axiom_set(obj: &Object, set: &str) -> Option<CheckReport> {
    Some(match (obj, set) {
        (Object::Algebra(a), _) => check_hom_algebra(a),
        (Object::Coalgebra(c), _) => check_hom_coalgebra(c),
        (Object::Bialgebra(b), _) => check_hom_bialgebra(b),
        (Object::Hopf(h), "antipode") => check_antipode(h),
        (Object::Hopf(h), _) => check_hom_hopf(h),
        (Object::Action(a), "weak-module-algebra") => check_weak_module_algebra(a),
        (Object::Action(a), _) => check_hom_module(a),
        (Object::Coaction(c), _) => check_comodule_coalgebra(c),
        (Object::Cocycle(c), _) => check_cocycle_inverse(c),
        (Object::Crossed(s), "crossed-product-conditions") => check_crossed_cocycle_conditions(s),
        (Object::Crossed(s), "crossed-product-algebra") => check_hom_algebra(&crossed_product(s)),
        (Object::Crossed(s), _) => check_lemma41(s).unwrap_or_else(|e| failure(set, e)),
        (Object::Biproduct { spec, .. }, "biproduct-conditions") => check_radford_conditions(spec),
        (Object::Biproduct { spec, .. }, "twisted-comodule-cocycle") => check_twisted_comodule_cocycle(spec),
        (Object::Biproduct { spec, .. }, "biproduct-bialgebra") => match build_biproduct(spec, Precondition::Bypass) {
            Ok(b) => b.axioms,
            Err(e) => build_failure(e),
        },
        (Object::Biproduct { spec, antipodes }, _) => {
            let (sh, sa) = antipodes.as_ref()?;
            match build_biproduct(spec, Precondition::Bypass) {
                Ok(b) => match biproduct_antipode(spec, sh, sa) {
                    Ok(s) => check_all(set, &antipode_identities(&b.bialgebra, &s)),
                    Err(AntipodeError::PreconditionFail(r)) => r,
                },
                Err(e) => build_failure(e),
            }
        }
    })
}

fn build(
    f: &StructureFile,
    kind: BuildKind,
    m: i64,
    k: i64,
    o: Option<&Path>,
    bundle: Option<&str>,
) -> Result<Produced, InputError> {
    let mut x = Exporter::new(f.field());
    let (subject, check, report) = match kind {
        BuildKind::Crossed | BuildKind::Smash => {
            let (name, obj) = select_one(f, bundle, &["crossed"])?;
            let Object::Crossed(spec) = obj else { unreachable!() };
            let mut spec = spec.with_params(m, k);
            if kind == BuildKind::Smash {
                let trivial = Cocycle::trivial(spec.bialgebra(), spec.algebra());
                spec = spec.with_sigma(trivial).expect("trivial cocycle fits its own spec");
            }
            let product = crossed_product(&spec);
            x.algebra("product", "P", &product);
            (name, "hom-algebra", check_hom_algebra(&product))
        }
        BuildKind::Biproduct => {
            let (name, obj) = select_one(f, bundle, &["biproduct"])?;
            let Object::Biproduct { spec, antipodes } = obj else { unreachable!() };
            let crossed = spec.crossed().with_params(m, k);
            let spec = spec.with_crossed(crossed).expect("same data, new exponents");
            match build_biproduct(&spec, Precondition::Enforce) {
                Err(e) => {
                    return Ok(Produced::reports(vec![outcome(name, "biproduct-conditions", build_failure(e))]));
                }
                Ok(b) => {
                    let s = antipodes.as_ref().and_then(|(sh, sa)| biproduct_antipode(&spec, sh, sa).ok());
                    match s.and_then(|s| HomHopf::new(b.bialgebra.clone(), s).ok()) {
                        Some(h) => {
                            x.hopf("product", "P", &h);
                            (name, "hom-hopf", check_hom_hopf(&h))
                        }
                        None => {
                            x.bialgebra("product", "P", &b.bialgebra);
                            (name, "hom-bialgebra", b.axioms)
                        }
                    }
                }
            }
        }
    };
    let text = serialize(&x.finish()?);
    let results = vec![outcome(subject, check, report)];
    match o {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Produced::reports(results))
        }
        None => Ok(Produced {
            results,
            text: Some(text),
        }),
    }
}

/// Antipode of a bialgebra by solving for the convolution inverse of the
/// identity.
fn solved_antipode(b: &HomBialgebra) -> Result<LinearMap, String> {
    let id = LinearMap::identity(b.field(), b.space());
    convolution_inverse(&id, b.coalgebra(), b.algebra()).map_err(|e| e.to_string())
}

fn images(s: &LinearMap) -> String {
    let names: Vec<String> = s.codomain().names().to_vec();
    let lines: Vec<String> = (0..s.cols())
        .map(|c| {
            format!(
                "S({}) = {}",
                s.domain().name(c),
                homhopf::exactlin::Witness::render_vector(&names, &s.column(c))
            )
        })
        .collect();
    lines.join("; ")
}

/// Compares a given antipode with the solved one and checks the antipode
/// law and commutation with the structure map.
fn antipode_report(b: &HomBialgebra, s: &LinearMap) -> CheckReport {
    let law = check_all("antipode", &antipode_identities(b, s));
    let solved = match solved_antipode(b) {
        Ok(t) => maps_equal(s, &t).expect("same shape").with_note(images(&t)),
        Err(e) => failure("maps-equal", e),
    };
    let solved = CheckReport::group("equals-convolution-inverse-of-id", vec![solved]);
    let sa = s.compose(b.alpha()).expect("endomorphisms");
    let as_ = b.alpha().compose(s).expect("endomorphisms");
    let commutes = CheckReport::group("commutes-with-structure-map", vec![maps_equal(&sa, &as_).expect("same shape")]);
    CheckReport::group("antipode", vec![law, solved, commutes])
}

fn antipode(f: &StructureFile, bundle: Option<&str>) -> Result<Vec<Outcome>, InputError> {
    let mut out = Vec::new();
    for (name, obj) in select(f, bundle, &["bialgebra", "hopf", "biproduct"])? {
        let report = match obj {
            Object::Hopf(h) => antipode_report(h.bialgebra(), h.antipode()),
            Object::Bialgebra(b) => match solved_antipode(b) {
                Ok(s) => antipode_report(b, &s),
                Err(e) => failure("antipode", e),
            },
            Object::Biproduct { spec, antipodes } => match (build_biproduct(spec, Precondition::Enforce), antipodes) {
                (Err(e), _) => build_failure(e),
                (Ok(b), Some((sh, sa))) => match biproduct_antipode(spec, sh, sa) {
                    Ok(s) => antipode_report(&b.bialgebra, &s),
                    Err(AntipodeError::PreconditionFail(r)) => r,
                },
                (Ok(b), None) => match solved_antipode(&b.bialgebra) {
                    Ok(s) => antipode_report(&b.bialgebra, &s),
                    Err(e) => failure("antipode", e),
                },
            },
            _ => unreachable!("selected by kind"),
        };
        out.push(outcome(name, "antipode", report));
    }
    Ok(out)
}

/// Goldens of every corpus entry, export round trips, and the shipped
/// files' canonical form.
pub fn selftest() -> Vec<Outcome> {
    let mut out = Vec::new();
    for e in entries() {
        let parts = e
            .expected
            .iter()
            .map(|(check, want)| {
                let id = format!("{check} is {}", if *want { "satisfied" } else { "violated" });
                match run_check(&e, check) {
                    Ok(r) if r.passed == *want => CheckReport::pass(id),
                    Ok(r) => failure(&id, format!("verdict changed:\n{r}")),
                    Err(err) => failure(&id, err),
                }
            })
            .collect();
        out.push(outcome(&e.name, "goldens", CheckReport::group("goldens", parts)));

        let file = export_entry(&e);
        let text = serialize(&file);
        let report = match parse(&text) {
            Ok(back) if back == file && serialize(&back) == text => CheckReport::pass("round-trip"),
            Ok(_) => failure("round-trip", "re-parsed file differs"),
            Err(err) => failure("round-trip", err),
        };
        out.push(outcome(&e.name, "round-trip", report));
    }
    for ((file, text), (_, source)) in SHIPPED.iter().zip(SHIPPED_SOURCES) {
        let report = match parse(text) {
            Ok(parsed) => {
                let canonical = serialize(&parsed) == *text;
                let matches = entry(source).map(|e| export_entry(&e)) == Some(parsed);
                match (canonical, matches) {
                    (true, true) => CheckReport::pass("shipped-file"),
                    (false, _) => failure("shipped-file", "not in canonical form"),
                    (_, false) => failure("shipped-file", format!("differs from the export of {source}")),
                }
            }
            Err(err) => failure("shipped-file", err),
        };
        out.push(outcome(file, "shipped-file", report));
    }
    out
}
