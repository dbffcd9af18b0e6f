//! `hombimod`: check, construct and serialize Hom-algebras and Hom-bimodules.
//!
//! Exit codes: 0 when the checked property holds, 1 when it fails (including
//! failed hypotheses of a construction), 2 for usage, parse and invariant
//! errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hombimod::construct::{self, ModuleClass, PlusConvention};
use hombimod::corpus::{self, CORPUS};
use hombimod::dsl::{parse_identity, verify_identity_with};
use hombimod::io::{self, Object};
use hombimod::{
    check_algebra_with, check_module_with, AlgebraClass, Bimodule, CheckOptions, Error, HomAlgebra, Matrix, ModuleKind,
    Report, Scalar,
};

#[derive(Parser)]
#[command(name = "hombimod", version, about = "Exact checks and constructions for Hom-algebras and Hom-bimodules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an algebra class or a module kind by exhaustive basis evaluation
    #[command(subcommand)]
    Check(CheckCmd),
    /// Build a new object from an input object
    Construct(ConstructCmd),
    /// Work with identities written in the identity language
    #[command(subcommand)]
    Identity(IdentityCmd),
    /// List or export the built-in examples
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Search for structure maps
    #[command(subcommand)]
    Search(SearchCmd),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Read the object from a JSON file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Use a built-in object (see `hombimod corpus list`)
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
struct Output {
    /// Print a machine-readable JSON report
    #[arg(long)]
    json: bool,
    /// Report every witness instead of the first ten
    #[arg(long)]
    all_witnesses: bool,
}

#[derive(Subcommand)]
enum CheckCmd {
    Algebra {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        class: AlgebraClassArg,
        #[command(flatten)]
        output: Output,
    },
    Bimodule {
        #[command(flatten)]
        source: Source,
        /// One of: assoc-left, assoc-right, assoc-bimodule, alt-left, alt-right, alt-bimodule,
        /// jordan-left, jordan-right, jordan-bimodule, special-left, special-right, operator-commutativity
        #[arg(long)]
        kind: ModuleKind,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraClassArg {
    Associative,
    Alternative,
    Commutative,
    Jordan,
}

impl From<AlgebraClassArg> for AlgebraClass {
    fn from(c: AlgebraClassArg) -> Self {
        match c {
            AlgebraClassArg::Associative => AlgebraClass::Associative,
            AlgebraClassArg::Alternative => AlgebraClass::Alternative,
            AlgebraClassArg::Commutative => AlgebraClass::Commutative,
            AlgebraClassArg::Jordan => AlgebraClass::Jordan,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleClassArg {
    Alternative,
    Jordan,
}

impl From<ModuleClassArg> for ModuleClass {
    fn from(c: ModuleClassArg) -> Self {
        match c {
            ModuleClassArg::Alternative => ModuleClass::Alternative,
            ModuleClassArg::Jordan => ModuleClass::Jordan,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Algebra: the product xy + yx
    Plus,
    /// Algebra: Yau twist by --map; bimodule: twist by --map and --vmap
    Twist,
    /// Bimodule: the --n-th shift for --class
    Shift,
    /// Bimodule: algebra plus module with the module as a square-zero ideal
    SplitNull,
    /// Bimodule read as a left special action and a right special action
    SpecialToBimodule,
    /// Associative bimodule: Jordan bimodule over the plus algebra
    PlusBimodule,
    /// Algebra: the algebra as a bimodule over itself
    Regular,
}

#[derive(Args)]
struct ConstructCmd {
    construction: Construction,
    #[command(flatten)]
    source: Source,
    /// Where to write the result
    #[arg(long)]
    out: PathBuf,
    /// Shift exponent
    #[arg(long)]
    n: Option<u32>,
    /// Algebra twisting map: a map file or a built-in map name
    #[arg(long)]
    map: Option<String>,
    /// Module twisting map: a map file or a built-in map name
    #[arg(long)]
    vmap: Option<String>,
    /// Class of the result for shift and split-null
    #[arg(long)]
    class: Option<ModuleClassArg>,
    /// Use (xy + yx)/2 for the plus product
    #[arg(long)]
    half: bool,
}

#[derive(Subcommand)]
enum IdentityCmd {
    /// Verify an identity, e.g. "alg x y; as(x,x,y) = 0"
    Verify {
        text: String,
        #[command(flatten)]
        source: Source,
        /// Bimodule for identities with module variables: a file or a built-in name
        #[arg(long)]
        module: Option<String>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// List the built-in objects
    List,
    /// Write a built-in object to a file
    Emit {
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Diagonal endomorphisms commuting with the twist
    Endos {
        #[command(flatten)]
        source: Source,
        /// Allowed diagonal entries, comma separated
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        entries: String,
        #[arg(long)]
        json: bool,
    },
}

/// Error type of the front end: kernel errors plus usage problems.
enum Failure {
    Kernel(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Kernel(e)
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

fn load_source(source: &Source) -> CliResult<Object> {
    match (&source.file, &source.builtin) {
        (Some(path), _) => Ok(io::load(path)?),
        (None, Some(name)) => Ok(corpus::builtin(name)?),
        (None, None) => usage("one of --file or --builtin is required"),
    }
}

/// A file path if it exists, otherwise a built-in name.
fn load_named(source: &str) -> CliResult<Object> {
    let path = Path::new(source);
    if path.exists() {
        Ok(io::load(path)?)
    } else {
        Ok(corpus::builtin(source)?)
    }
}

fn expect_algebra(obj: Object, what: &str) -> CliResult<HomAlgebra> {
    match obj {
        Object::Algebra(a) => Ok(a),
        other => usage(format!("{what} must be a hom-algebra, got a {}", other.kind())),
    }
}

fn expect_bimodule(obj: Object, what: &str) -> CliResult<Bimodule> {
    match obj {
        Object::Bimodule(v) => Ok(v),
        other => usage(format!("{what} must be a hom-bimodule, got a {}", other.kind())),
    }
}

fn expect_map(obj: Object, what: &str) -> CliResult<Matrix> {
    match obj {
        Object::Map(m) => Ok(m),
        other => usage(format!("{what} must be a linear-map, got a {}", other.kind())),
    }
}

fn options(output: &Output) -> CheckOptions {
    if output.all_witnesses {
        CheckOptions::all_witnesses()
    } else {
        CheckOptions::default()
    }
}

fn report_json(report: &Report, alg_labels: Option<&[String]>) -> Value {
    let witnesses: Vec<Value> = report
        .witnesses()
        .iter()
        .map(|w| {
            json!({
                "identity": w.identity,
                "tuple": w.tuple.iter().map(|b| b.index).collect::<Vec<_>>(),
                "sorts": w.tuple.iter().map(|b| b.sort.keyword()).collect::<Vec<_>>(),
                "labels": w.tuple.iter().map(|b| b.label(alg_labels, None)).collect::<Vec<_>>(),
                "defect": w.defect.iter().map(Scalar::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "ok": report.ok(), "witnesses": witnesses })
}

/// Prints a report and returns the exit code for it.
fn emit_report(title: &str, report: &Report, alg_labels: Option<&[String]>, json: bool) -> u8 {
    if json {
        println!("{}", serde_json::to_string_pretty(&report_json(report, alg_labels)).expect("json values serialize"));
    } else if report.ok() {
        println!("PASS {title}");
    } else {
        println!("FAIL {title}");
        for w in report.witnesses() {
            let labels: Vec<String> = w.tuple.iter().map(|b| b.label(alg_labels, None)).collect();
            println!("  {} at ({}): defect {}", w.identity, labels.join(", "), w.defect);
        }
    }
    if report.ok() {
        0
    } else {
        1
    }
}

fn run_check(cmd: CheckCmd) -> CliResult<u8> {
    match cmd {
        CheckCmd::Algebra { source, class, output } => {
            let a = match load_source(&source)? {
                Object::Algebra(a) => a,
                // a bimodule is checked through its algebra
                Object::Bimodule(v) => v.parent().clone(),
                Object::Map(_) => return usage("check algebra needs a hom-algebra"),
            };
            let class = AlgebraClass::from(class);
            let report = check_algebra_with(&a, class, options(&output));
            Ok(emit_report(&format!("{class}"), &report, a.labels(), output.json))
        }
        CheckCmd::Bimodule { source, kind, output } => {
            let v = expect_bimodule(load_source(&source)?, "check bimodule input")?;
            let report = check_module_with(&v, kind, options(&output));
            Ok(emit_report(&format!("{kind}"), &report, v.parent().labels(), output.json))
        }
    }
}

fn require<T>(value: Option<T>, flag: &str, construction: &str) -> CliResult<T> {
    match value {
        Some(v) => Ok(v),
        None => usage(format!("{construction} requires {flag}")),
    }
}

fn run_construct(cmd: ConstructCmd) -> CliResult<u8> {
    let input = load_source(&cmd.source)?;
    let result = match cmd.construction {
        Construction::Plus => {
            let a = expect_algebra(input, "plus input")?;
            let convention = if cmd.half { PlusConvention::Half } else { PlusConvention::Sum };
            Object::Algebra(construct::plus_algebra_with(&a, convention)?)
        }
        Construction::Twist => {
            let map = expect_map(load_named(require(cmd.map.as_deref(), "--map", "twist")?)?, "--map")?;
            match input {
                Object::Algebra(a) => Object::Algebra(construct::yau_twist(&a, &map)?),
                Object::Bimodule(v) => {
                    let vmap = expect_map(load_named(require(cmd.vmap.as_deref(), "--vmap", "bimodule twist")?)?, "--vmap")?;
                    Object::Bimodule(construct::twist_bimodule(v.parent(), &v, &map, &vmap)?)
                }
                Object::Map(_) => return usage("twist needs a hom-algebra or a hom-bimodule"),
            }
        }
        Construction::Shift => {
            let v = expect_bimodule(input, "shift input")?;
            let n = require(cmd.n, "--n", "shift")?;
            let class = require(cmd.class, "--class", "shift")?;
            Object::Bimodule(construct::nth_shift_bimodule(&v, n, class.into())?)
        }
        Construction::SplitNull => {
            let v = expect_bimodule(input, "split-null input")?;
            let class = require(cmd.class, "--class", "split-null")?;
            Object::Algebra(construct::split_null_extension(v.parent(), &v, class.into())?)
        }
        Construction::SpecialToBimodule => {
            let v = expect_bimodule(input, "special-to-bimodule input")?;
            Object::Bimodule(construct::special_to_bimodule(v.parent(), v.rho_l(), v.rho_r(), v.alpha_v())?)
        }
        Construction::PlusBimodule => {
            let v = expect_bimodule(input, "plus-bimodule input")?;
            Object::Bimodule(construct::plus_bimodule(v.parent(), &v)?)
        }
        Construction::Regular => {
            let a = expect_algebra(input, "regular input")?;
            Object::Bimodule(construct::regular_bimodule(&a))
        }
    };
    io::save(&result, &cmd.out)?;
    println!("wrote {} to {}", result.kind(), cmd.out.display());
    Ok(0)
}

fn run_identity(cmd: IdentityCmd) -> CliResult<u8> {
    let IdentityCmd::Verify { text, source, module, output } = cmd;
    let id = parse_identity(&text)?;
    let (a, mut v) = match load_source(&source)? {
        Object::Algebra(a) => (a, None),
        Object::Bimodule(v) => (v.parent().clone(), Some(v)),
        Object::Map(_) => return usage("identity verify needs a hom-algebra or a hom-bimodule"),
    };
    if let Some(source_name) = module {
        v = Some(expect_bimodule(load_named(&source_name)?, "--module")?);
    }
    let report = verify_identity_with(&id, &a, v.as_ref(), options(&output))?;
    Ok(emit_report(&id.to_string(), &report, a.labels(), output.json))
}

fn run_corpus(cmd: CorpusCmd) -> CliResult<u8> {
    match cmd {
        CorpusCmd::List => {
            for entry in CORPUS {
                println!("{:<16} {}", entry.name, entry.description);
            }
            println!("{:<16} regular bimodule of any algebra above, e.g. regular:octonion", "regular:NAME");
        }
        CorpusCmd::Emit { name, out } => {
            let obj = corpus::builtin(&name)?;
            io::save(&obj, &out)?;
            println!("wrote {} to {}", obj.kind(), out.display());
        }
    }
    Ok(0)
}

fn run_search(cmd: SearchCmd) -> CliResult<u8> {
    let SearchCmd::Endos { source, entries, json } = cmd;
    let a = match load_source(&source)? {
        Object::Algebra(a) => a,
        Object::Bimodule(v) => v.parent().clone(),
        Object::Map(_) => return usage("search endos needs a hom-algebra"),
    };
    let entries: Vec<Scalar> = entries.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>()?;
    let found = corpus::search_diagonal_endomorphisms(&a, &entries)?;
    let diagonals: Vec<Vec<String>> =
        found.iter().map(|m| (0..m.rows()).map(|i| m[(i, i)].to_string()).collect()).collect();
    if json {
        println!("{}", serde_json::to_string_pretty(&json!({ "diagonals": diagonals })).expect("json values serialize"));
    } else {
        println!("{} diagonal endomorphisms", diagonals.len());
        for d in diagonals {
            println!("  diag({})", d.join(", "));
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(c) => run_check(c),
        Command::Construct(c) => run_construct(c),
        Command::Identity(c) => run_identity(c),
        Command::Corpus(c) => run_corpus(c),
        Command::Search(c) => run_search(c),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Kernel(Error::Precondition(msg))) => {
            eprintln!("hypothesis not satisfied: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Kernel(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
