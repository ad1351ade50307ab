//! The `ldend` command line.
//!
//! Exit status: 0 when every check passes or the construction succeeds,
//! 1 when a mathematical check fails, 2 on usage or I/O errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Op};
use crate::axioms::{self, Class};
use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture};
use crate::functors::{self, QuadriDerived};
use crate::io::{self, ModuleFile};
use crate::linear::LinearMap;
use crate::operators;
use crate::report::CheckReport;
use crate::representations;
use crate::scalar::{self, Scalar};
use crate::tensor::Tensor3;
use crate::ybe::{self, Equation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ldend",
    version,
    about = "Exact checks and constructions for pre-Lie and L-dendriform algebras"
)]
pub struct Cli {
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify class axioms, a module, or a form.
    Check(CheckArgs),
    /// Apply a functor to an algebra file.
    Derive(DeriveArgs),
    /// Verify that a map is an O-operator.
    OopCheck(OopArgs),
    /// Verify that a map is a Rota-Baxter operator of weight zero.
    RbCheck(RbArgs),
    /// Compatible L-dendriform structure of a symmetric 2-cocycle.
    Lift(LiftArgs),
    /// L-dendriform or pre-Lie structure induced by an operator.
    Induce(InduceArgs),
    /// Exhaustive search for Rota-Baxter operators over a finite entry set.
    SearchRb(SearchArgs),
    /// Residual of a tensor equation.
    VerifyEq(VerifyArgs),
    /// Solution of the S- or LD-equation from an O-operator.
    BuildSolution(BuildArgs),
    /// Write shipped fixtures.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_parser = parse_class)]
    pub class: Option<Class>,
    /// Check this table instead of the one the class normally reads.
    #[arg(long, value_parser = parse_op)]
    pub op: Option<Op>,
    /// Also check a bilinear form: a 2-cocycle for pre_lie, an
    /// L-dendriform 2-cocycle for l_dendriform.
    #[arg(long)]
    pub form: Option<PathBuf>,
    /// Check a module file instead of an algebra.
    #[arg(long)]
    pub module: Option<PathBuf>,
    pub algebra: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DeriveArgs {
    #[arg(long, value_parser = parse_functor)]
    pub functor: Functor,
    /// Skip verifying the input class.
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    pub algebra: PathBuf,
}

#[derive(Debug, Args)]
pub struct OopArgs {
    #[arg(long)]
    pub map: PathBuf,
    #[arg(long)]
    pub module: Option<PathBuf>,
    /// A Lie algebra (checked against its adjoint representation) or a
    /// pre-Lie algebra (checked against its regular module).
    pub algebra: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RbArgs {
    #[arg(long)]
    pub map: PathBuf,
    pub algebra: PathBuf,
}

#[derive(Debug, Args)]
pub struct LiftArgs {
    #[arg(long)]
    pub form: PathBuf,
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    pub algebra: PathBuf,
}

#[derive(Debug, Args)]
pub struct InduceArgs {
    /// One map, or two commuting maps on a Lie algebra.
    #[arg(long = "map", required = true)]
    pub maps: Vec<PathBuf>,
    #[arg(long)]
    pub module: Option<PathBuf>,
    /// With an invertible O-operator of a pre-Lie module, build the
    /// compatible structure on the base instead of the module space.
    #[arg(long)]
    pub compatible: bool,
    #[arg(long)]
    pub force: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    pub algebra: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_parser = parse_entry_set, allow_hyphen_values = true)]
    pub entry_set: EntrySet,
    #[arg(long, default_value_t = operators::DEFAULT_SEARCH_CAP)]
    pub cap: u128,
    pub algebra: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_equation)]
    pub equation: Equation,
    /// Also write the residual tensor.
    #[arg(long)]
    pub out: Option<PathBuf>,
    pub algebra: PathBuf,
    pub tensor: PathBuf,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub module: PathBuf,
    #[arg(long)]
    pub map: PathBuf,
    /// Build even if the map is not an O-operator.
    #[arg(long)]
    pub force: bool,
    /// Write `<out>.alg.json` and `<out>.tensor.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// A fixture name or `all`; lists the names when omitted.
    pub name: Option<String>,
    /// Directory for `all`, file for a single fixture.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functor {
    SubAdjacentLie,
    LdendBracket,
    Horizontal,
    Vertical,
    Transpose,
    DendriformToLdend,
    Quadri(QuadriDerived),
}

impl Functor {
    /// The class the input must belong to for the output to be meaningful.
    pub fn input_class(self) -> Class {
        match self {
            Functor::SubAdjacentLie => Class::PreLie,
            Functor::DendriformToLdend => Class::Dendriform,
            Functor::Quadri(_) => Class::Quadri,
            _ => Class::LDendriform,
        }
    }

    pub fn apply(self, alg: &Algebra) -> Result<Algebra> {
        match self {
            Functor::SubAdjacentLie => functors::sub_adjacent_lie(alg),
            Functor::LdendBracket => {
                let v = functors::vertical_prelie(alg)?;
                functors::sub_adjacent_lie(&v)
            }
            Functor::Horizontal => functors::horizontal_prelie(alg),
            Functor::Vertical => functors::vertical_prelie(alg),
            Functor::Transpose => functors::transpose(alg),
            Functor::DendriformToLdend => functors::dendriform_to_ldend(alg),
            Functor::Quadri(q) => functors::quadri_derive(alg, q),
        }
    }
}

impl std::str::FromStr for Functor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_functor(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntrySet(pub Vec<Scalar>);

fn parse_class(s: &str) -> std::result::Result<Class, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_op(s: &str) -> std::result::Result<Op, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_equation(s: &str) -> std::result::Result<Equation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_functor(s: &str) -> std::result::Result<Functor, String> {
    Ok(match s {
        "sub_adjacent_lie" => Functor::SubAdjacentLie,
        "ldend_bracket" => Functor::LdendBracket,
        "horizontal" | "horizontal_prelie" => Functor::Horizontal,
        "vertical" | "vertical_prelie" => Functor::Vertical,
        "transpose" => Functor::Transpose,
        "dendriform_to_ldend" => Functor::DendriformToLdend,
        _ => match s.strip_prefix("quadri:") {
            Some(q) => Functor::Quadri(q.parse().map_err(|e: Error| e.to_string())?),
            None => {
                return Err(format!(
                    "unknown functor `{s}`; expected sub_adjacent_lie, ldend_bracket, horizontal, \
                     vertical, transpose, dendriform_to_ldend or quadri:<succ_prec|vee_wedge|star|\
                     tri_r_tri_l|circ|bullet|bracket>"
                ))
            }
        },
    })
}

fn parse_entry_set(s: &str) -> std::result::Result<EntrySet, String> {
    let vals = s
        .split(',')
        .map(scalar::parse)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    if vals.is_empty() {
        return Err("entry set is empty".into());
    }
    Ok(EntrySet(vals))
}

/// Outcome of a verb that did not hit an error.
enum Status {
    Ok,
    Failed,
}

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn json_line(&mut self, v: &Value) -> Result<()> {
        write!(self.out, "{}", io::to_canonical_string(v))?;
        Ok(())
    }

    /// Print a check report under `subject`; returns whether it passed.
    fn report(&mut self, verb: &str, subject: &str, report: &CheckReport) -> Result<bool> {
        if self.json {
            let mut v = report.to_json();
            v["verb"] = json!(verb);
            v["subject"] = json!(subject);
            self.json_line(&v)?;
        } else if report.passed() {
            self.line(&format!("{subject}: PASS"))?;
        } else {
            let n = report.failures.len();
            self.line(&format!(
                "{subject}: FAIL ({n} failure{})",
                if n == 1 { "" } else { "s" }
            ))?;
            for f in &report.failures {
                self.line(&format!(
                    "  {} at {}: residual {}",
                    f.identity,
                    tuple(&f.indices),
                    vector(&f.residual)
                ))?;
            }
        }
        Ok(report.passed())
    }

    /// Emit a document: to `out` as a file, or on stdout.
    fn emit(&mut self, verb: &str, doc: &Value, out: Option<&Path>) -> Result<()> {
        match out {
            Some(path) => {
                io::write_json(path, doc)?;
                if self.json {
                    self.json_line(&json!({ "verb": verb, "wrote": path.display().to_string() }))
                } else {
                    self.line(&format!("wrote {}", path.display()))
                }
            }
            None => {
                write!(self.out, "{}", io::to_canonical_string(doc))?;
                Ok(())
            }
        }
    }
}

fn tuple(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(scalar::format).collect();
    format!("[{}]", parts.join(", "))
}

fn load_algebra(path: &Path) -> Result<Algebra> {
    io::algebra_from_json(&io::read_json(path)?).map_err(|e| in_file(path, e))
}

fn load_map(path: &Path) -> Result<LinearMap> {
    io::map_from_json(&io::read_json(path)?).map_err(|e| in_file(path, e))
}

fn load_module(path: &Path) -> Result<ModuleFile> {
    io::module_from_json(&io::read_json(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Format { field, message } => Error::Format {
            field: format!("{}: {field}", path.display()),
            message,
        },
        other => other,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::format("arguments", msg)
}

/// Parse `args` (including the program name) and run; returns the exit
/// status. Text goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        out,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(Status::Ok) => EXIT_OK,
        Ok(Status::Failed) => EXIT_CHECK_FAILED,
        Err(e) => {
            let code = match &e {
                Error::Precondition { report, what } => {
                    let _ = writeln!(err, "ldend: {e}");
                    if let Some(r) = report {
                        let _ = ctx.report("precondition", what, r);
                    }
                    return EXIT_CHECK_FAILED;
                }
                Error::Singular | Error::Symmetry(_) => EXIT_CHECK_FAILED,
                _ => EXIT_USAGE,
            };
            let _ = writeln!(err, "ldend: {e}");
            code
        }
    }
}

fn dispatch(ctx: &mut Ctx, cmd: Command) -> Result<Status> {
    match cmd {
        Command::Check(a) => check(ctx, a),
        Command::Derive(a) => derive(ctx, a),
        Command::OopCheck(a) => oop_check(ctx, a),
        Command::RbCheck(a) => rb_check(ctx, a),
        Command::Lift(a) => lift(ctx, a),
        Command::Induce(a) => induce(ctx, a),
        Command::SearchRb(a) => search_rb(ctx, a),
        Command::VerifyEq(a) => verify_eq(ctx, a),
        Command::BuildSolution(a) => build_solution(ctx, a),
        Command::Catalog(a) => catalog(ctx, a),
    }
}

fn status(passed: bool) -> Status {
    if passed {
        Status::Ok
    } else {
        Status::Failed
    }
}

fn check(ctx: &mut Ctx, a: CheckArgs) -> Result<Status> {
    if let Some(path) = &a.module {
        if a.algebra.is_some() || a.class.is_some() {
            return Err(usage("--module takes no algebra or --class"));
        }
        let (subject, report) = match load_module(path)? {
            ModuleFile::PreLie(m) => ("pre_lie module", representations::check_prelie_module(&m)?),
            ModuleFile::LDend(m) => (
                "l_dendriform module",
                representations::check_ldend_module(&m)?,
            ),
        };
        return Ok(status(ctx.report("check", subject, &report)?));
    }
    let class = a.class.ok_or_else(|| usage("--class is required"))?;
    let path = a
        .algebra
        .as_deref()
        .ok_or_else(|| usage("an algebra file is required"))?;
    let mut alg = load_algebra(path)?;
    if let Some(op) = a.op {
        let required = class.required_ops();
        if required.len() != 1 {
            return Err(usage(format!(
                "--op only applies to single-product classes, not {class}"
            )));
        }
        alg = functors::rename(&alg, op, required[0])?;
    }
    let mut passed = ctx.report("check", class.name(), &axioms::check_class(&alg, class)?)?;
    if let Some(form_path) = &a.form {
        let form =
            io::form_from_json(&io::read_json(form_path)?).map_err(|e| in_file(form_path, e))?;
        let (subject, report) = match class {
            Class::PreLie => ("2-cocycle", axioms::check_prelie_cocycle(&alg, &form)?),
            Class::LDendriform => (
                "l_dendriform 2-cocycle",
                axioms::check_ldend_cocycle(&alg, &form)?,
            ),
            other => return Err(usage(format!("--form is not defined for class {other}"))),
        };
        passed &= ctx.report("check", subject, &report)?;
    }
    Ok(status(passed))
}

fn derive(ctx: &mut Ctx, a: DeriveArgs) -> Result<Status> {
    let alg = load_algebra(&a.algebra)?;
    if !a.force {
        let class = a.functor.input_class();
        let report = axioms::check_class(&alg, class)?;
        if !report.passed() {
            return Err(Error::precondition(
                format!("input is not {class}"),
                Some(report),
            ));
        }
    }
    let derived = a.functor.apply(&alg)?;
    ctx.emit("derive", &io::algebra_to_json(&derived), a.out.as_deref())?;
    Ok(Status::Ok)
}

fn oop_check(ctx: &mut Ctx, a: OopArgs) -> Result<Status> {
    let t = load_map(&a.map)?;
    let (subject, report) = match (&a.module, &a.algebra) {
        (Some(m), None) => match load_module(m)? {
            ModuleFile::PreLie(m) => ("O-operator (pre_lie)", operators::check_o_prelie(&t, &m)?),
            ModuleFile::LDend(m) => (
                "O-operator (l_dendriform)",
                operators::check_o_ldend(&t, &m)?,
            ),
        },
        (None, Some(path)) => {
            let alg = load_algebra(path)?;
            if alg.has(Op::Bracket) {
                (
                    "O-operator (lie, adjoint)",
                    operators::check_o_lie(&t, &alg, &operators::adjoint(&alg)?)?,
                )
            } else {
                let m = representations::PreLieModule::regular(&alg)?;
                (
                    "O-operator (pre_lie, regular)",
                    operators::check_o_prelie(&t, &m)?,
                )
            }
        }
        _ => return Err(usage("give exactly one of --module or an algebra file")),
    };
    Ok(status(ctx.report("oop-check", subject, &report)?))
}

fn rb_check(ctx: &mut Ctx, a: RbArgs) -> Result<Status> {
    let r = load_map(&a.map)?;
    let alg = load_algebra(&a.algebra)?;
    let report = operators::check_rota_baxter_prelie(&r, &alg)?;
    Ok(status(ctx.report("rb-check", "rota_baxter", &report)?))
}

fn lift(ctx: &mut Ctx, a: LiftArgs) -> Result<Status> {
    let alg = load_algebra(&a.algebra)?;
    let form = io::form_from_json(&io::read_json(&a.form)?).map_err(|e| in_file(&a.form, e))?;
    let out = if a.force {
        operators::ldend_from_2cocycle_unchecked(&alg, &form)?
    } else {
        operators::ldend_from_2cocycle(&alg, &form)?
    };
    ctx.emit("lift", &io::algebra_to_json(&out), a.out.as_deref())?;
    Ok(Status::Ok)
}

fn induce(ctx: &mut Ctx, a: InduceArgs) -> Result<Status> {
    let maps: Vec<LinearMap> = a.maps.iter().map(|p| load_map(p)).collect::<Result<_>>()?;
    let f = a.force;
    let out = match (&a.module, &a.algebra, maps.as_slice()) {
        (Some(path), None, [t]) => {
            let m = match load_module(path)? {
                ModuleFile::PreLie(m) => m,
                ModuleFile::LDend(_) => return Err(usage("induce needs a pre-Lie module")),
            };
            match (a.compatible, f) {
                (true, true) => operators::compatible_ldend_from_invertible_o_unchecked(t, &m)?,
                (true, false) => operators::compatible_ldend_from_invertible_o(t, &m)?,
                (false, true) => operators::ldend_from_o_prelie_unchecked(t, &m)?.on_module,
                (false, false) => operators::ldend_from_o_prelie(t, &m)?.on_module,
            }
        }
        (None, Some(path), maps) if !a.compatible => {
            let alg = load_algebra(path)?;
            match (alg.has(Op::Bracket), maps) {
                (true, [r]) if f => operators::prelie_from_o_lie_unchecked(r, &alg)?,
                (true, [r]) => operators::prelie_from_o_lie(r, &alg)?,
                (true, [r1, r2]) if f => {
                    operators::ldend_from_commuting_pair_unchecked(r1, r2, &alg)?
                }
                (true, [r1, r2]) => operators::ldend_from_commuting_pair(r1, r2, &alg)?,
                (false, [r]) if f => operators::ldend_from_rb_unchecked(r, &alg)?,
                (false, [r]) => operators::ldend_from_rb(r, &alg)?,
                _ => return Err(usage("expected one --map, or two on a Lie algebra")),
            }
        }
        _ => {
            return Err(usage(
                "give one --map with --module, or --map(s) with an algebra file",
            ))
        }
    };
    ctx.emit("induce", &io::algebra_to_json(&out), a.out.as_deref())?;
    Ok(Status::Ok)
}

fn search_rb(ctx: &mut Ctx, a: SearchArgs) -> Result<Status> {
    let alg = load_algebra(&a.algebra)?;
    let found = operators::search_rb(&alg, &a.entry_set.0, a.cap)?;
    if ctx.json {
        for (i, m) in found.iter().enumerate() {
            ctx.json_line(
                &json!({ "verb": "search-rb", "index": i + 1, "map": io::map_to_json(m) }),
            )?;
        }
        ctx.json_line(&json!({ "verb": "search-rb", "count": found.len() }))?;
    } else {
        ctx.line(&format!("{} Rota-Baxter operator(s)", found.len()))?;
        for (i, m) in found.iter().enumerate() {
            let rows: Vec<String> = (0..m.rows())
                .map(|r| {
                    vector(
                        &(0..m.cols())
                            .map(|c| m.get(r, c).clone())
                            .collect::<Vec<_>>(),
                    )
                })
                .collect();
            ctx.line(&format!("  #{}: [{}]", i + 1, rows.join(", ")))?;
        }
    }
    Ok(Status::Ok)
}

fn verify_eq(ctx: &mut Ctx, a: VerifyArgs) -> Result<Status> {
    let alg = load_algebra(&a.algebra)?;
    let r = io::tensor2_from_json(&io::read_json(&a.tensor)?).map_err(|e| in_file(&a.tensor, e))?;
    let res: Tensor3 = ybe::residual(&alg, &r, a.equation)?;
    let norm0 = res.support_size();
    let first = res.first_nonzero();
    if ctx.json {
        let first = first.as_ref().map(
            |((i, j, k), v)| json!({ "index": [i + 1, j + 1, k + 1], "value": scalar::format(v) }),
        );
        ctx.json_line(&json!({
            "verb": "verify-eq",
            "equation": a.equation.id(),
            "zero": norm0 == 0,
            "norm0": norm0,
            "first_nonzero": first,
        }))?;
    } else {
        match &first {
            None => ctx.line(&format!("{}: zero residual (norm0 = 0)", a.equation))?,
            Some(((i, j, k), v)) => ctx.line(&format!(
                "{}: norm0 = {norm0}, first nonzero at ({},{},{}) = {}",
                a.equation,
                i + 1,
                j + 1,
                k + 1,
                scalar::format(v)
            ))?,
        }
    }
    if let Some(path) = &a.out {
        io::write_json(path, &io::tensor3_to_json(&res))?;
    }
    Ok(status(norm0 == 0))
}

fn build_solution(ctx: &mut Ctx, a: BuildArgs) -> Result<Status> {
    let t = load_map(&a.map)?;
    let (alg, r) = match load_module(&a.module)? {
        ModuleFile::PreLie(m) => {
            if !a.force {
                let report = operators::check_o_prelie(&t, &m)?;
                if !report.passed() {
                    return Err(Error::precondition(
                        "the map is not an O-operator",
                        Some(report),
                    ));
                }
            }
            ybe::build_s_solution(&m, &t)?
        }
        ModuleFile::LDend(m) => {
            if !a.force {
                let report = operators::check_o_ldend(&t, &m)?;
                if !report.passed() {
                    return Err(Error::precondition(
                        "the map is not an O-operator",
                        Some(report),
                    ));
                }
            }
            ybe::build_ld_solution(&m, &t)?
        }
    };
    let alg_doc = io::algebra_to_json(&alg);
    let tensor_doc = io::tensor2_to_json(&r);
    match &a.out {
        Some(prefix) => {
            let alg_path = with_suffix(prefix, "alg.json");
            let tensor_path = with_suffix(prefix, "tensor.json");
            ctx.emit("build-solution", &alg_doc, Some(&alg_path))?;
            ctx.emit("build-solution", &tensor_doc, Some(&tensor_path))?;
        }
        None => {
            ctx.emit("build-solution", &alg_doc, None)?;
            ctx.emit("build-solution", &tensor_doc, None)?;
        }
    }
    Ok(Status::Ok)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

/// The class a catalog entry must pass before it is written.
fn verify_fixture(name: &str, f: &Fixture) -> Result<()> {
    let report = match f {
        Fixture::Algebra(alg) => match alg.class_tag().map(str::parse::<Class>) {
            Some(Ok(class)) => axioms::check_class(alg, class)?,
            Some(Err(e)) => return Err(e),
            None => CheckReport::default(),
        },
        // the only shipped map is a Rota-Baxter operator of P2, the only
        // shipped form a cocycle of the extension of P2
        Fixture::Map(m) => operators::check_rota_baxter_prelie(m, &fixtures::p2())?,
        Fixture::Form(b) => {
            if !b.is_symmetric() || !b.is_nondegenerate() {
                return Err(Error::precondition(
                    format!("fixture {name} is not a nondegenerate symmetric form"),
                    None,
                ));
            }
            axioms::check_prelie_cocycle(&fixtures::p2_ext(), b)?
        }
        Fixture::PreLieModule(m) => representations::check_prelie_module(m)?,
        Fixture::LDendModule(m) => representations::check_ldend_module(m)?,
    };
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(
            format!("fixture {name} fails its declared check"),
            Some(report),
        ))
    }
}

fn catalog(ctx: &mut Ctx, a: CatalogArgs) -> Result<Status> {
    match a.name.as_deref() {
        None => {
            if ctx.json {
                ctx.json_line(&json!({ "verb": "catalog", "names": fixtures::NAMES }))?;
            } else {
                for name in fixtures::NAMES {
                    ctx.line(name)?;
                }
            }
        }
        Some("all") => {
            let dir = a
                .out
                .ok_or_else(|| usage("`catalog all` needs --out <dir>"))?;
            fs::create_dir_all(&dir)?;
            for name in fixtures::NAMES {
                let f = fixtures::lookup(name)?;
                verify_fixture(name, &f)?;
                let path = dir.join(format!("{name}.{}", io::fixture_suffix(&f)));
                ctx.emit("catalog", &io::fixture_to_json(&f), Some(&path))?;
            }
        }
        Some(name) => {
            let f = fixtures::lookup(name)?;
            verify_fixture(name, &f)?;
            ctx.emit("catalog", &io::fixture_to_json(&f), a.out.as_deref())?;
        }
    }
    Ok(Status::Ok)
}
