//! Command-line front end. Exit codes: 0 when every requested check passes,
//! 1 on a failed check, 2 on unreadable or inconsistent input.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{self, Payload, ENTRIES};
use crate::error::{Error, Result};
use crate::galois;
use crate::io;
use crate::linalg::FieldSpec;
use crate::report::CheckReport;
use crate::suite::{run_suite, SuiteConfig};
use crate::twist;
use crate::yd;

/// Writes to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

/// Version tag of single-command reports.
pub const REPORT_SCHEMA: &str = "hopflab-report/1";

#[derive(Parser, Debug)]
#[command(name = "hopflab", version, about = "Exact checks for Hopf algebra deformations and braided Galois objects")]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Field for `catalog:` arguments and the suite (`Q` or `Fp:<p>`).
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the verifier matching the document's kind.
    Validate { input: String },
    /// Emit the deformed Hopf algebra H^σ or H_θ.
    Deform {
        hopf: String,
        #[arg(long, conflicts_with = "dual_cocycle", required_unless_present = "dual_cocycle")]
        cocycle: Option<String>,
        #[arg(long)]
        dual_cocycle: Option<String>,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a 2-cocycle, dual 2-cocycle or central 1-cocycle.
    CheckCocycle { input: String },
    /// Check a coquasitriangular form.
    CheckCqt { input: String },
    /// Check a quasitriangular element.
    CheckQt { input: String },
    /// Check a YD module or YD module algebra.
    CheckYd { input: String },
    /// Decide whether a YD module algebra is Azumaya.
    Azumaya { algebra: String },
    /// Compute M∧N over the braided Hopf algebra of a CQT form.
    Wedge {
        m: String,
        n: String,
        #[arg(long)]
        cqt: String,
    },
    /// Decide the Galois properties of a YD module algebra.
    Galois {
        algebra: String,
        #[arg(long)]
        cqt: String,
    },
    /// Run the acceptance criteria.
    Suite {
        /// Comma-separated parameters, e.g. `-2,-1,0,1,2,3`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        t_values: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated criterion numbers to run.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<usize>>,
    },
    /// List or export catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Export {
        name: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        param: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct Report<'a> {
    schema: &'static str,
    command: &'a str,
    kind: &'a str,
    passed: bool,
    #[serde(flatten)]
    report: &'a CheckReport,
}

struct Ctx {
    json: bool,
    field: FieldSpec,
}

/// Parses `argv` and runs the command, returning the exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let ctx = Ctx { json: cli.json, field: cli.field.parse()? };
    match cli.command {
        Command::Validate { input } => {
            let p = match input.strip_prefix("catalog:") {
                Some(_) => ctx.load(&input)?,
                None => io::load_for_validation(std::path::Path::new(&input))?,
            };
            Ok(ctx.emit("validate", p.kind(), &p.verify()))
        }
        Command::Deform { hopf, cocycle, dual_cocycle, output } => {
            let host = ctx.load_hopf(&hopf)?;
            let deformed = match (cocycle, dual_cocycle) {
                (Some(c), _) => match ctx.load(&c)? {
                    Payload::Cocycle(s) if **s.host() == host => twist::deform(&s)?,
                    Payload::Cocycle(_) => return Err(Error::HostMismatch),
                    other => return Err(wrong_kind(&c, "cocycle", &other)),
                },
                (None, Some(d)) => match ctx.load(&d)? {
                    Payload::DualCocycle(t) if **t.host() == host => twist::deform_dual(&t)?,
                    Payload::DualCocycle(_) => return Err(Error::HostMismatch),
                    other => return Err(wrong_kind(&d, "dual_cocycle", &other)),
                },
                (None, None) => return Err(Error::Invalid("pass --cocycle or --dual-cocycle".into())),
            };
            write_out(output, &io::to_string(&Payload::Hopf(deformed)))?;
            Ok(0)
        }
        Command::CheckCocycle { input } => {
            let p = ctx.load(&input)?;
            let mut rep = p.verify();
            match &p {
                Payload::Cocycle(s) => {
                    let lazy = twist::is_lazy(s);
                    rep.run("lazy", || Ok(format!("{lazy}")));
                }
                Payload::DualCocycle(d) => {
                    let lazy = twist::is_lazy_dual(d);
                    rep.run("lazy", || Ok(format!("{lazy}")));
                }
                Payload::OneCocycle(_) => {}
                other => return Err(wrong_kind(&input, "cocycle", other)),
            }
            Ok(ctx.emit("check-cocycle", p.kind(), &rep))
        }
        Command::CheckCqt { input } => ctx.check_kind(&input, "check-cqt", &["cqt"]),
        Command::CheckQt { input } => ctx.check_kind(&input, "check-qt", &["qt"]),
        Command::CheckYd { input } => ctx.check_kind(&input, "check-yd", &["yd_module", "yd_algebra"]),
        Command::Azumaya { algebra } => {
            let a = ctx.load_algebra(&algebra)?;
            Ok(ctx.emit("azumaya", "yd_algebra", &yd::azumaya_check(&a)))
        }
        Command::Wedge { m, n, cqt } => {
            let bh = galois::build_hr(&ctx.load_cqt(&cqt)?)?;
            let (m, n) = (ctx.load_module(&m)?, ctx.load_module(&n)?);
            Ok(ctx.emit("wedge", "yd_module", &galois::verify_wedge(&bh, &m, &n)))
        }
        Command::Galois { algebra, cqt } => {
            let bh = galois::build_hr(&ctx.load_cqt(&cqt)?)?;
            let a = ctx.load_algebra(&algebra)?;
            let mut rep = galois::galois_report(&galois::galois_maps(&bh, &a)?);
            let c = galois::comodule_galois(&a)?;
            // Informational: the H-comodule Galois property is not requested.
            rep.run("comodule_galois", || {
                Ok(format!("{}: A₀ dim {}, rank {} of {}", c.galois, c.coinvariant_dim, c.rank, c.target_dim))
            });
            Ok(ctx.emit("galois", "yd_algebra", &rep))
        }
        Command::Suite { t_values, seed, only } => {
            let mut cfg = SuiteConfig::new(ctx.field);
            if let Some(ts) = t_values {
                cfg.t_values = ts.iter().map(|t| ctx.field.parse(t)).collect::<Result<_>>()?;
            }
            cfg.seed = seed;
            if let Some(o) = only {
                if let Some(bad) = o.iter().find(|&&i| !(1..=15).contains(&i)) {
                    return Err(Error::Invalid(format!("no criterion {bad}")));
                }
                cfg.only = o;
            }
            let rep = run_suite(&cfg);
            if ctx.json {
                outln!("{}", rep.to_json());
            } else {
                out!("{rep}");
            }
            Ok(if rep.passed() { 0 } else { 1 })
        }
        Command::Catalog { action: CatalogAction::List } => {
            if ctx.json {
                let rows: Vec<_> = ENTRIES
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "name": e.name, "kind": e.kind, "parametric": e.parametric,
                            "provenance": e.provenance, "source": e.source,
                        })
                    })
                    .collect();
                outln!("{}", serde_json::to_string_pretty(&rows).expect("JSON values always serialize"));
            } else {
                for e in ENTRIES {
                    let p = if e.parametric { "(t)" } else { "" };
                    outln!("{:<24} {:<13} {:<10} {}", format!("{}{p}", e.name), e.kind, format!("{:?}", e.provenance).to_lowercase(), e.source);
                }
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::Export { name, param, output } } => {
            let t = ctx.field.parse(&param)?;
            let e = catalog::entry(&name, ctx.field, &t)?;
            write_out(output, &io::to_string(&e.payload))?;
            Ok(0)
        }
    }
}

fn wrong_kind(arg: &str, want: &str, got: &Payload) -> Error {
    Error::Invalid(format!("{arg}: expected {want}, found {}", got.kind()))
}

fn write_out(path: Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        None => {
            outln!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(&p, format!("{text}\n")).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
    }
}

impl Ctx {
    /// A file path, or `catalog:<name>` / `catalog:<name>:<t>`.
    fn load(&self, arg: &str) -> Result<Payload> {
        match arg.strip_prefix("catalog:") {
            Some(rest) => {
                let (name, t) = match rest.split_once(':') {
                    Some((n, t)) => (n, self.field.parse(t)?),
                    None => (rest, self.field.one()),
                };
                Ok(catalog::entry(name, self.field, &t)?.payload)
            }
            None => io::load(std::path::Path::new(arg)),
        }
    }

    fn load_hopf(&self, arg: &str) -> Result<crate::hopf::HopfAlgebra> {
        if matches!(arg.to_ascii_lowercase().as_str(), "h4" | "kc2") {
            return Ok((*io::load_hopf(arg, self.field)?).clone());
        }
        match self.load(arg)? {
            Payload::Hopf(h) => Ok(h),
            other => Err(wrong_kind(arg, "hopf", &other)),
        }
    }

    fn load_cqt(&self, arg: &str) -> Result<crate::quasitriangular::CqtStructure> {
        match self.load(arg)? {
            Payload::Cqt(c) => Ok(c),
            other => Err(wrong_kind(arg, "cqt", &other)),
        }
    }

    fn load_module(&self, arg: &str) -> Result<yd::YdModule> {
        match self.load(arg)? {
            Payload::Module(m) => Ok(m),
            Payload::Algebra(a) => Ok(a.module().clone()),
            other => Err(wrong_kind(arg, "yd_module", &other)),
        }
    }

    fn load_algebra(&self, arg: &str) -> Result<yd::YdAlgebra> {
        match self.load(arg)? {
            Payload::Algebra(a) => Ok(a),
            other => Err(wrong_kind(arg, "yd_algebra", &other)),
        }
    }

    fn check_kind(&self, arg: &str, command: &str, kinds: &[&str]) -> Result<i32> {
        let p = self.load(arg)?;
        if !kinds.contains(&p.kind()) {
            return Err(wrong_kind(arg, &kinds.join(" or "), &p));
        }
        Ok(self.emit(command, p.kind(), &p.verify()))
    }

    fn emit(&self, command: &str, kind: &str, rep: &CheckReport) -> i32 {
        let passed = rep.passed();
        if self.json {
            let r = Report { schema: REPORT_SCHEMA, command, kind, passed, report: rep };
            outln!("{}", serde_json::to_string_pretty(&r).expect("reports always serialize"));
        } else {
            out!("{rep}");
            outln!("{}", if passed { "all checks passed" } else { "some checks failed" });
        }
        if passed {
            0
        } else {
            1
        }
    }
}

