//! The `steiner` command-line tool.
//!
//! Exit codes: 0 success, 1 a property fails or a witness was found, 2 usage
//! or precondition error, 3 time budget exhausted. Diagnostics go to stderr,
//! data to stdout or the `-o` file.

mod export;
mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::compose::{compose_dm, compose_oa, compose_odd_prime, compose_sts, ComposeOptions};
use crate::construct::{ag_packing, bose, dm_product, oa_odd_prime, oa_prime_power, singer_pg, vandermonde_dm};
use crate::design::CyclicDesign;
use crate::search::{search_difference_family, SearchSpec, SearchStatus};
use crate::verify::{
    brute_force_even_minimum, check_difference_coverage, check_dm, check_oa, check_steiner, even_freeness,
    find_generalized_pasch, two_orbit_witness, Budget, CoverageReport, DmReport, SteinerReport,
};
use crate::Error;

pub use export::{export_blocks, export_ooc, export_orbits, max_correlation, OocExport};
pub use format::{
    design_digest, dm_digest, oa_digest, BaseBlockEntry, Certificate, DesignDocument, DmDocument, Document,
    IngredientRef, OaDocument, Provenance, DESIGN_FORMAT, DM_FORMAT, OA_FORMAT, TOOL_VERSION,
};

/// Environment variable holding the worker-thread count.
pub const THREADS_ENV: &str = "EVENFREE_THREADS";
pub const DEFAULT_BUDGET_SECS: f64 = 60.0;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "steiner", version, about = "Cyclic even-free Steiner 2-designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a design, difference matrix or orthogonal array.
    Construct(ConstructArgs),
    /// Build a larger design from two smaller ones.
    Compose(ComposeArgs),
    /// Check a property of a document.
    Verify(VerifyArgs),
    /// Search for cyclic r-even-free designs.
    Search(SearchArgs),
    /// Write a design in a plain-text format.
    Export(ExportArgs),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(subcommand)]
    what: ConstructCmd,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// Cyclic STS(3x) from Z_x × Z_3.
    Bose {
        #[arg(long)]
        x: u32,
    },
    /// Lines of PG(m, q) under a Singer cycle.
    Pg {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        q: u32,
    },
    /// Cyclic packing from AG(m, q) minus the origin.
    Ag {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        q: u32,
    },
    /// Vandermonde difference matrix.
    Dm {
        #[arg(long)]
        v: u32,
        #[arg(long)]
        k: usize,
    },
    /// Product of two difference-matrix documents.
    DmProduct { a: PathBuf, b: PathBuf },
    /// OA(k, k) for odd prime k, or OA(q, q) for a prime power q.
    Oa {
        #[arg(long, conflicts_with = "q", required_unless_present = "q")]
        k: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
    },
}

#[derive(Args, Debug)]
struct ComposeArgs {
    #[command(subcommand)]
    how: ComposeCmd,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Skip re-verifying the design ingredients.
    #[arg(long, global = true)]
    trust: bool,
}

#[derive(Subcommand, Debug)]
enum ComposeCmd {
    /// Product through a (w, k) difference matrix.
    Dm {
        bv: PathBuf,
        cw: PathBuf,
        #[arg(long = "dm")]
        matrix: PathBuf,
    },
    /// Product through an OA(k, k) with a parallel class.
    Oa {
        bv: PathBuf,
        cw: PathBuf,
        #[arg(long = "oa")]
        array: PathBuf,
    },
    /// Product for odd prime k.
    OddPrime { bv: PathBuf, cw: PathBuf },
    /// Product of two triple systems of orders 3 (mod 6).
    Sts3 { b3v: PathBuf, c3w: PathBuf },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(subcommand)]
    property: VerifyCmd,
    /// Time budget in seconds.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET_SECS)]
    budget: f64,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Every pair in exactly one block (at most one for a packing).
    Steiner { file: PathBuf },
    /// Base-block differences cover each residue exactly once.
    Cyclic { file: PathBuf },
    /// Difference-matrix property.
    Dm { file: PathBuf },
    /// Orthogonal-array property and parallel classes.
    Oa { file: PathBuf },
    /// No even configuration of at most r blocks.
    EvenFree {
        #[arg(long)]
        r: usize,
        /// Cross-check against exhaustive enumeration of all sub-collections.
        #[arg(long)]
        oracle: bool,
        file: PathBuf,
    },
    /// No generalized Pasch configuration.
    Pasch { file: PathBuf },
    /// The 2k-block even configuration spanned by two orbits.
    #[command(name = "witness-2k")]
    Witness2k { file: PathBuf },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    v: u32,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BUDGET_SECS)]
    budget: f64,
    /// Keep one design per multiplier class.
    #[arg(long)]
    reduce: bool,
    /// Write the first design found.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExportArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    format: ExportFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExportFormat {
    Blocks,
    Orbits,
    Ooc,
}

/// Runs the tool on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    configure_threads();
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Compose(a) => compose(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a),
        Command::Export(a) => export(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted => EXIT_BUDGET,
        Error::InvalidIngredient(_) => EXIT_PROPERTY_FAILS,
        _ => EXIT_USAGE,
    }
}

fn configure_threads() {
    let Ok(raw) = std::env::var(THREADS_ENV) else { return };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("warning: ignoring {THREADS_ENV}={raw:?}"),
    }
}

type CliResult = crate::Result<i32>;

fn emit(doc: &Document, output: Option<&Path>) -> CliResult {
    match output {
        Some(path) => doc.write(path)?,
        None => print!("{}", doc.to_json()),
    }
    Ok(EXIT_OK)
}

fn print_json(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn load_design(path: &Path) -> crate::Result<(CyclicDesign, DesignDocument)> {
    Document::read(path)?.into_design()
}

fn construct(a: ConstructArgs) -> CliResult {
    let design = |d: CyclicDesign, p: Provenance| Document::Design(DesignDocument::new(&d, p));
    let doc = match a.what {
        ConstructCmd::Bose { x } => design(bose(x)?, Provenance::new("bose").param("x", x)),
        ConstructCmd::Pg { m, q } => {
            let g = singer_pg(m, q)?;
            if g.low_even_freeness_expected {
                eprintln!("warning: q = {q} is even; PG({m},{q}) contains even configurations of {} blocks", q + 2);
            }
            design(g.design, Provenance::new("singer_pg").param("m", m).param("q", q))
        }
        ConstructCmd::Ag { m, q } => {
            let g = ag_packing(m, q)?;
            if g.low_even_freeness_expected {
                eprintln!("warning: q = {q} is even; AG({m},{q}) contains even configurations of {} blocks", q + 2);
            }
            design(g.design, Provenance::new("ag_packing").param("m", m).param("q", q))
        }
        ConstructCmd::Dm { v, k } => Document::Dm(DmDocument::new(
            &vandermonde_dm(v, k)?,
            Provenance::new("vandermonde_dm").param("v", v).param("k", k),
        )),
        ConstructCmd::DmProduct { a: pa, b: pb } => {
            let (ma, da) = Document::read(&pa)?.into_dm()?;
            let (mb, db) = Document::read(&pb)?.into_dm()?;
            for (m, name) in [(&ma, &pa), (&mb, &pb)] {
                if let DmReport::Fail { rows, residue, count } = check_dm(m) {
                    return Err(Error::InvalidIngredient(format!(
                        "{}: rows {rows:?} hit residue {residue} {count} times",
                        name.display()
                    )));
                }
            }
            Document::Dm(DmDocument::new(
                &dm_product(&ma, &mb)?,
                Provenance::new("dm_product").ingredient("a", &da.digest).ingredient("b", &db.digest),
            ))
        }
        ConstructCmd::Oa { k: Some(k), .. } => {
            Document::Oa(OaDocument::new(&oa_odd_prime(k)?, Provenance::new("oa_odd_prime").param("k", k)))
        }
        ConstructCmd::Oa { q: Some(q), .. } => {
            Document::Oa(OaDocument::new(&oa_prime_power(q)?, Provenance::new("oa_prime_power").param("q", q)))
        }
        ConstructCmd::Oa { .. } => return Err(Error::Precondition("give --k or --q".into())),
    };
    emit(&doc, a.output.as_deref())
}

fn compose(a: ComposeArgs) -> CliResult {
    let opts = ComposeOptions { trust_ingredients: a.trust };
    let (d, prov) = match &a.how {
        ComposeCmd::Dm { bv, cw, matrix } => {
            let (b, bd) = load_design(bv)?;
            let (c, cd) = load_design(cw)?;
            let (m, md) = Document::read(matrix)?.into_dm()?;
            let d = compose_dm(&b, &c, &m, opts)?;
            let p = Provenance::new("compose_dm")
                .ingredient("bv", &bd.digest)
                .ingredient("cw", &cd.digest)
                .ingredient("dm", &md.digest);
            (d, p)
        }
        ComposeCmd::Oa { bv, cw, array } => {
            let (b, bd) = load_design(bv)?;
            let (c, cd) = load_design(cw)?;
            let (oa, od) = Document::read(array)?.into_oa()?;
            let d = compose_oa(&b, &c, &oa, opts)?;
            let p = Provenance::new("compose_oa")
                .ingredient("bv", &bd.digest)
                .ingredient("cw", &cd.digest)
                .ingredient("oa", &od.digest);
            (d, p)
        }
        ComposeCmd::OddPrime { bv, cw } => {
            let (b, bd) = load_design(bv)?;
            let (c, cd) = load_design(cw)?;
            let d = compose_odd_prime(&b, &c, opts)?;
            (d, Provenance::new("compose_odd_prime").ingredient("bv", &bd.digest).ingredient("cw", &cd.digest))
        }
        ComposeCmd::Sts3 { b3v, c3w } => {
            let (b, bd) = load_design(b3v)?;
            let (c, cd) = load_design(c3w)?;
            let d = compose_sts(&b, &c, opts)?;
            (d, Provenance::new("compose_sts").ingredient("b3v", &bd.digest).ingredient("c3w", &cd.digest))
        }
    };
    let prov = if a.trust { prov.param("trusted", true) } else { prov };
    emit(&Document::Design(DesignDocument::new(&d, prov)), a.output.as_deref())
}

/// Warns when a cached certificate for `property` disagrees with `verdict`.
fn note_certificate(doc: &DesignDocument, property: &str, bound: Option<u64>, verdict: bool) {
    for c in doc.certificates.iter().filter(|c| c.property == property && c.bound == bound) {
        if c.verdict != verdict {
            eprintln!(
                "warning: cached {property} certificate (tool {}) says {}, recomputed {}; cached value ignored",
                c.tool_version, c.verdict, verdict
            );
        }
    }
}

fn verdict_code(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILS
    }
}

fn verdict_str(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn parse_budget(secs: f64) -> crate::Result<Budget> {
    if secs.is_nan() || secs < 0.0 {
        return Err(Error::Precondition(format!("invalid budget {secs}")));
    }
    Ok(Budget::seconds(secs))
}

fn verify(a: VerifyArgs) -> CliResult {
    let budget = parse_budget(a.budget)?;
    match a.property {
        VerifyCmd::Dm { file } => {
            let (m, _) = Document::read(&file)?.into_dm()?;
            let report = check_dm(&m);
            let pass = report == DmReport::Pass;
            let mut out = json!({ "property": "dm", "v": m.modulus(), "k": m.row_count(), "verdict": verdict_str(pass) });
            if let DmReport::Fail { rows, residue, count } = report {
                out["rows"] = json!([rows.0, rows.1]);
                out["residue"] = json!(residue);
                out["count"] = json!(count);
            }
            print_json(&out);
            Ok(verdict_code(pass))
        }
        VerifyCmd::Oa { file } => {
            let (oa, _) = Document::read(&file)?.into_oa()?;
            let report = check_oa(&oa);
            let pass = report.failure.is_none();
            let mut out = json!({
                "property": "oa",
                "s": oa.symbols(),
                "rows": oa.row_count(),
                "verdict": verdict_str(pass),
                "parallel_classes": report.parallel_classes,
                "classes_exhaustive": report.exhaustive,
            });
            if let Some(f) = report.failure {
                out["failure"] = json!({ "rows": [f.rows.0, f.rows.1], "symbols": [f.symbols.0, f.symbols.1], "count": f.count });
            }
            print_json(&out);
            Ok(verdict_code(pass))
        }
        VerifyCmd::Steiner { file } => {
            let (d, doc) = load_design(&file)?;
            let report = check_steiner(&d.develop());
            let pass = report == SteinerReport::Pass;
            note_certificate(&doc, "steiner", None, pass);
            let mut out = json!({ "property": "steiner", "kind": d.kind(), "verdict": verdict_str(pass) });
            if let SteinerReport::Fail { pair, multiplicity } = report {
                out["pair"] = json!([pair.0, pair.1]);
                out["multiplicity"] = json!(multiplicity);
            }
            print_json(&out);
            Ok(verdict_code(pass))
        }
        VerifyCmd::Cyclic { file } => {
            let (d, doc) = load_design(&file)?;
            let report = check_difference_coverage(&d);
            let pass = report == CoverageReport::Pass;
            note_certificate(&doc, "cyclic", None, pass);
            let mut out = json!({ "property": "cyclic", "verdict": verdict_str(pass) });
            if let CoverageReport::Fail { difference, covered_k_units, expected_k_units } = report {
                out["difference"] = json!(difference);
                out["covered_k_units"] = json!(covered_k_units);
                out["expected_k_units"] = json!(expected_k_units);
            }
            print_json(&out);
            Ok(verdict_code(pass))
        }
        VerifyCmd::EvenFree { r, oracle, file } => {
            let (d, doc) = load_design(&file)?;
            if r == 0 {
                return Err(Error::Precondition("r must be at least 1".into()));
            }
            let s = d.develop();
            let report = even_freeness(&s, r, budget)?;
            let witness = report.minimal_witness.as_ref().map(|w| w.blocks().to_vec());
            let pass = witness.is_none();
            let mut out = json!({ "property": "even-free", "r": r, "verdict": verdict_str(pass), "witness": witness });
            if oracle {
                let brute = brute_force_even_minimum(&s)?;
                let brute = brute.filter(|w| w.len() <= r).map(|w| w.blocks().to_vec());
                if brute != witness {
                    return Err(Error::Internal(format!(
                        "bounded search gave {witness:?} but exhaustive enumeration gave {brute:?}"
                    )));
                }
                out["oracle"] = json!("agrees");
            }
            note_certificate(&doc, "even-free", Some(r as u64), pass);
            print_json(&out);
            Ok(verdict_code(pass))
        }
        VerifyCmd::Pasch { file } => {
            let (d, doc) = load_design(&file)?;
            let witness = find_generalized_pasch(&d.develop())?.map(|w| w.blocks().to_vec());
            let pass = witness.is_none();
            note_certificate(&doc, "pasch-free", None, pass);
            print_json(&json!({ "property": "pasch-free", "verdict": verdict_str(pass), "witness": witness }));
            Ok(verdict_code(pass))
        }
        VerifyCmd::Witness2k { file } => {
            let (d, _) = load_design(&file)?;
            let w = two_orbit_witness(&d)?;
            print_json(&json!({ "property": "witness-2k", "size": w.len(), "witness": w.blocks() }));
            Ok(EXIT_PROPERTY_FAILS)
        }
    }
}

fn search(a: SearchArgs) -> CliResult {
    let mut spec = SearchSpec::new(a.v, a.k, a.r);
    spec.budget = parse_budget(a.budget)?;
    spec.reduce_multipliers = a.reduce;
    if let Some(limit) = a.limit {
        spec.limit = limit;
    }
    let outcome = search_difference_family(spec)?;
    let designs: Vec<Vec<Vec<u32>>> = outcome
        .designs
        .iter()
        .map(|d| d.base_blocks().iter().map(|b| b.block.points().to_vec()).collect())
        .collect();
    print_json(&json!({
        "status": outcome.status.as_str(),
        "v": a.v,
        "k": a.k,
        "r": a.r,
        "multiplier_reduced": a.reduce,
        "count": designs.len(),
        "nodes": outcome.nodes,
        "designs": designs,
    }));
    if let (Some(path), Some(d)) = (a.output.as_deref(), outcome.designs.first()) {
        let p = Provenance::new("search").param("v", a.v).param("k", a.k).param("r", a.r);
        Document::Design(DesignDocument::new(d, p)).write(path)?;
    }
    Ok(match outcome.status {
        SearchStatus::BudgetExhausted => {
            eprintln!("search budget exhausted after {} nodes", outcome.nodes);
            EXIT_BUDGET
        }
        _ => EXIT_OK,
    })
}

fn export(a: ExportArgs) -> CliResult {
    let (d, _) = load_design(&a.file)?;
    let text = match a.format {
        ExportFormat::Blocks => export_blocks(&d),
        ExportFormat::Orbits => export_orbits(&d),
        ExportFormat::Ooc => {
            let code = export_ooc(&d)?;
            if code.dropped_short_orbits > 0 {
                eprintln!(
                    "warning: {} short orbit(s) dropped; codewords correspond to full orbits only",
                    code.dropped_short_orbits
                );
            }
            code.to_text()
        }
    };
    print!("{text}");
    Ok(EXIT_OK)
}
