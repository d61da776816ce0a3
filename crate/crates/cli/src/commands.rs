use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use aqjl_core::catalog::{enumerate_coh, Catalog, CatalogRow};
use aqjl_core::cyclotomic::{compositum, CyclotomicSubfield};
use aqjl_core::global::{
    archimedean_parameters, global_jl, global_poincare, global_purity, global_rationality_field,
    jl_field_equality_check, GlobalRepDescriptor,
};
use aqjl_core::hecke::{hecke_eigenvalues, local_rationality_field, sigma_twist_satake, SatakeParams};
use aqjl_core::jl::{fiber, transfer};
use aqjl_core::params::{is_algebraic, is_regular, parameter_of, purity_weight, Normalization, WeilParameter};
use aqjl_core::roots::GroupKind;
use aqjl_core::weights::{selfdual_data, SelfDualData};
use aqjl_core::AqModule;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::descriptor::{descriptor_json, parse_descriptor};
use crate::format::{
    cyclotomic_from_json, cyclotomic_json, module_from_json, module_json, parameter_from_json, parameter_json,
    parse_list, parse_partition, parse_rational, parse_weight, poincare_json, row_json, subfield_from_json,
    subfield_json,
};
use crate::render;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "aqjl", version, about = "Cohomological duals of GL_n(R) and GL_k(H) and their Jacquet-Langlands transfer")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List Coh_mu for one real form.
    Catalog(CatalogArgs),
    /// Render the split and quaternionic tables side by side.
    Tables(TablesArgs),
    /// Transfer split-side modules to the quaternionic side.
    JlTransfer(TransferArgs),
    /// All split-side modules over a quaternionic module.
    JlFiber(FiberArgs),
    /// Poincaré polynomial of one module.
    Poincare(PoincareArgs),
    /// Langlands parameter of a split module, or of raw exponents.
    Param(ParamArgs),
    /// Run a predicate on a descriptor file; exits 1 when it fails.
    Check(CheckArgs),
    /// Hecke eigenvalues, rationality fields and composita.
    Rationality(RationalityArgs),
    /// Global operations on a descriptor file.
    Global(GlobalArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    /// GL_k(H)
    H,
    /// GL_2k(R)
    R,
}

impl Kind {
    fn group(self, k: u32) -> GroupKind {
        match self {
            Kind::H => GroupKind::Quaternionic(k),
            Kind::R => GroupKind::SplitReal(2 * k),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum, PartialEq, Eq)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Norm {
    #[default]
    Unitary,
    Arithmetic,
}

impl From<Norm> for Normalization {
    fn from(n: Norm) -> Self {
        match n {
            Norm::Unitary => Normalization::Unitary,
            Norm::Arithmetic => Normalization::Arithmetic,
        }
    }
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Quaternionic rank; the split group is GL_2k(R).
    #[arg(long)]
    k: u32,
    /// Highest weight, comma-separated; `0` for the zero weight.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// One line per isomorphism class instead of per listed partition.
    #[arg(long)]
    distinct: bool,
    /// Worker threads for per-row work; output order does not depend on it.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Debug, Args)]
struct TablesArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Debug, Args)]
struct ModuleArgs {
    /// Comma-separated parts `k_0,k_1,…` (or `n_0,n_1,…` on the split side).
    #[arg(long)]
    partition: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// `λ` directly, with `--w`; alternative to `--mu`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "mu")]
    lambda: Option<String>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    w: i64,
    #[arg(long, default_value_t = 0)]
    eps: u8,
}

impl ModuleArgs {
    fn lambda_data(&self, n: usize) -> Result<SelfDualData, CliError> {
        match (&self.mu, &self.lambda) {
            (Some(mu), _) => selfdual_data(&parse_weight(mu, n)?).map_err(|e| CliError::input("--mu", e)),
            (None, Some(l)) => {
                let lambda = parse_list::<i64>(l, "--lambda")?;
                if lambda.len() * 2 != n {
                    return Err(CliError::Input(format!("--lambda: expected {} entries", n / 2)));
                }
                SelfDualData::new(self.w, lambda).map_err(|e| CliError::input("--lambda", e))
            }
            (None, None) => Err(CliError::Input("one of --mu or --lambda is required".into())),
        }
    }

    fn module(&self, kind_of: impl Fn(u32) -> GroupKind) -> Result<AqModule, CliError> {
        let partition = parse_partition(self.partition.as_deref().ok_or_else(|| {
            CliError::Input("--partition is required".into())
        })?)?;
        let kind = kind_of(partition.total());
        let lambda = self.lambda_data(kind.n() as usize)?;
        AqModule::new(kind, partition, lambda, self.eps).map_err(|e| CliError::input("--partition", e))
    }
}

#[derive(Debug, Args)]
struct TransferArgs {
    #[command(flatten)]
    module: ModuleArgs,
    /// JSON-lines file of split catalog rows (`-` for stdin) instead of flags.
    #[arg(long, conflicts_with = "partition")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct FiberArgs {
    /// Quaternionic partition `k_0,k_1,…`.
    #[arg(long)]
    partition: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Args)]
struct PoincareArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[command(flatten)]
    module: ModuleArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[command(flatten)]
    module: ModuleArgs,
    /// Extra `|det|^s` twist added to every exponent.
    #[arg(long, allow_hyphen_values = true)]
    twist: Option<String>,
    /// Raw parameter as JSON `[[p_num,p_den,q_num,q_den],…]` instead of a module.
    #[arg(long, conflicts_with = "partition")]
    exponents: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    normalization: Norm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckKind {
    RegularAlgebraic,
    Purity,
    FieldEquality,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(value_enum)]
    check: CheckKind,
    /// Descriptor file, `-` for stdin.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    normalization: Norm,
}

#[derive(Debug, Args)]
struct RationalityArgs {
    /// JSON array of cyclotomic numbers `{"N":…,"coords":{…}}`.
    #[arg(long)]
    satake: Option<String>,
    /// Apply `σ_a: ζ ↦ ζ^a` to the Satake parameters first.
    #[arg(long, requires = "satake")]
    sigma: Option<u32>,
    /// Global rationality field of a descriptor file.
    #[arg(long, conflicts_with = "satake")]
    descriptor: Option<PathBuf>,
    /// JSON array of subfields `{"N":…,"gens":[…]}` to combine.
    #[arg(long, conflicts_with_all = ["satake", "descriptor"])]
    compositum: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GlobalOp {
    /// The transferred descriptor.
    Jl,
    Purity,
    /// Künneth product of the archimedean Poincaré polynomials.
    Poincare,
    /// Global rationality field, before and after transfer.
    Field,
    /// Archimedean parameters on the split side.
    Params,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    #[arg(value_enum)]
    op: GlobalOp,
    file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    normalization: Norm,
}

/// Parses `argv` and runs one command; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            e.report(err);
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Catalog(a) => catalog(a, out),
        Command::Tables(a) => tables(a, out),
        Command::JlTransfer(a) => jl_transfer(a, out),
        Command::JlFiber(a) => jl_fiber(a, out),
        Command::Poincare(a) => poincare(a, out),
        Command::Param(a) => param(a, out),
        Command::Check(a) => check(a, out),
        Command::Rationality(a) => rationality(a, out),
        Command::Global(a) => global(a, out),
    }
}

/// Maps `f` over `items` on up to `threads` scoped threads, keeping order.
pub fn par_map<T: Sync, U: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| {
                let f = &f;
                s.spawn(move || c.iter().map(f).collect::<Vec<U>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn load_catalog(kind: GroupKind, mu: &str) -> Result<Catalog, CliError> {
    let mu = parse_weight(mu, kind.n() as usize)?;
    enumerate_coh(kind, &mu).map_err(|e| CliError::input("--k", e))
}

fn check_rank(k: u32) -> Result<(), CliError> {
    if k == 0 {
        return Err(CliError::Input("--k: must be positive".into()));
    }
    Ok(())
}

fn catalog(a: CatalogArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_rank(a.k)?;
    let cat = load_catalog(a.kind.group(a.k), &a.mu)?;
    if a.format == Format::Text {
        write!(out, "{}", render::table(&cat))?;
        return Ok(());
    }
    if let Some(diag) = &cat.diagnostic {
        writeln!(out, "{}", json!({"diagnostic": diag.to_string()}))?;
        return Ok(());
    }
    let lines: Vec<String> = if a.distinct {
        par_map(&cat.modules(), a.threads, |m| module_json(m).to_string())
    } else {
        par_map(&cat.rows, a.threads, |r: &CatalogRow| row_json(r).to_string())
    };
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn tables(a: TablesArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_rank(a.k)?;
    let kinds = [GroupKind::SplitReal(2 * a.k), GroupKind::Quaternionic(a.k)];
    let catalogs = kinds.iter().map(|&k| load_catalog(k, &a.mu)).collect::<Result<Vec<_>, _>>()?;
    let rendered = par_map(&catalogs, a.threads, render::table);
    write!(out, "{}", rendered.join("\n"))?;
    Ok(())
}

fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn emit_module(m: &AqModule, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => writeln!(out, "{}", module_json(m))?,
        Format::Text => writeln!(out, "{}  {}", m.partition(), m.langlands_data().label())?,
    }
    Ok(())
}

fn jl_transfer(a: TransferArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let modules = match &a.input {
        Some(path) => read_source(path)?
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let v: Value = serde_json::from_str(l).map_err(|e| CliError::Input(format!("--input: {e}")))?;
                module_from_json(&v)
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => vec![a.module.module(GroupKind::SplitReal)?],
    };
    for m in modules {
        let t = transfer(&m).map_err(|e| CliError::input("jl-transfer", e))?;
        emit_module(&t, a.format, out)?;
    }
    Ok(())
}

fn jl_fiber(a: FiberArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let partition = parse_partition(&a.partition)?;
    let kind = GroupKind::Quaternionic(partition.total());
    let mu = parse_weight(&a.mu, kind.n() as usize)?;
    let lambda = selfdual_data(&mu).map_err(|e| CliError::input("--mu", e))?;
    let m = AqModule::new(kind, partition, lambda, 0).map_err(|e| CliError::input("--partition", e))?;
    for s in fiber(&m, &mu).map_err(|e| CliError::input("jl-fiber", e))? {
        emit_module(&s, a.format, out)?;
    }
    Ok(())
}

fn poincare(a: PoincareArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let kind = a.kind;
    let m = a.module.module(|total| match kind {
        Kind::H => GroupKind::Quaternionic(total),
        Kind::R => GroupKind::SplitReal(total),
    })?;
    let p = m.poincare().map_err(|e| CliError::input("poincare", e))?;
    match a.format {
        Format::Text => writeln!(out, "{p}")?,
        Format::Json => writeln!(out, "{}", poincare_json(&p))?,
    }
    Ok(())
}

fn parameter_report(t: &WeilParameter, norm: Normalization) -> Value {
    let algebraic = is_algebraic(t);
    json!({
        "n": t.n(),
        "parameter": parameter_json(t),
        "algebraic": algebraic,
        "regular": is_regular(t).ok(),
        "purity": purity_weight(std::slice::from_ref(t), norm).ok().flatten(),
    })
}

fn param(a: ParamArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let t = match &a.exponents {
        Some(text) => {
            let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("--exponents: {e}")))?;
            parameter_from_json(&v)?
        }
        None => {
            let m = a.module.module(GroupKind::SplitReal)?;
            let twist = a.twist.as_deref().map(|s| parse_rational(s, "--twist")).transpose()?.unwrap_or_default();
            parameter_of(&m, twist).map_err(|e| CliError::input("param", e))?
        }
    };
    writeln!(out, "{}", parameter_report(&t, a.normalization.into()))?;
    Ok(())
}

fn load_descriptor(path: &Path) -> Result<GlobalRepDescriptor, CliError> {
    parse_descriptor(&read_source(path)?)
}

fn core_input(e: aqjl_core::Error) -> CliError {
    CliError::input("descriptor", e)
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let desc = load_descriptor(&a.file)?;
    let (name, result) = match a.check {
        CheckKind::RegularAlgebraic => {
            let params = archimedean_parameters(&desc).map_err(core_input)?;
            let failing: Vec<Value> = desc
                .places()
                .archimedean()
                .iter()
                .zip(&params)
                .filter_map(|(p, t)| {
                    if !is_algebraic(t) {
                        Some(json!({"place": p.label, "reason": "not algebraic"}))
                    } else if !is_regular(t).unwrap_or(false) {
                        Some(json!({"place": p.label, "reason": "repeated p-values"}))
                    } else {
                        None
                    }
                })
                .collect();
            let ok = failing.is_empty();
            ("regular-algebraic", json!({"ok": ok, "failures": failing}))
        }
        CheckKind::Purity => match global_purity(&desc, a.normalization.into()) {
            Ok(Some(w)) => ("purity", json!({"ok": true, "weight": w})),
            Ok(None) => ("purity", json!({"ok": false, "reason": "no common weight p+q"})),
            Err(aqjl_core::Error::NotAlgebraic) => {
                ("purity", json!({"ok": false, "reason": "a parameter is not algebraic"}))
            }
            Err(e) => return Err(core_input(e)),
        },
        CheckKind::FieldEquality => {
            let ok = jl_field_equality_check(&desc).map_err(core_input)?;
            let field = global_rationality_field(&desc).map_err(core_input)?;
            ("field-equality", json!({"ok": ok, "field": subfield_json(&field)}))
        }
    };
    let mut report = json!({"check": name});
    for (k, v) in result.as_object().expect("object") {
        report[k] = v.clone();
    }
    writeln!(out, "{report}")?;
    if report["ok"] == json!(true) {
        Ok(())
    } else {
        Err(CliError::CheckFailed(report))
    }
}

fn rationality(a: RationalityArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(text) = &a.satake {
        let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("--satake: {e}")))?;
        let items = v.as_array().ok_or_else(|| CliError::Input("--satake: expected a JSON array".into()))?;
        let alphas = items.iter().map(cyclotomic_from_json).collect::<Result<Vec<_>, _>>()?;
        let mut s = SatakeParams::new(alphas).map_err(|e| CliError::input("--satake", e))?;
        if let Some(a) = a.sigma {
            s = sigma_twist_satake(&s, a).map_err(|e| CliError::input("--sigma", e))?;
        }
        let report = json!({
            "satake": s.alphas().iter().map(cyclotomic_json).collect::<Vec<_>>(),
            "eigenvalues": hecke_eigenvalues(&s).iter().map(cyclotomic_json).collect::<Vec<_>>(),
            "field": subfield_json(&local_rationality_field(&s)),
        });
        writeln!(out, "{report}")?;
    } else if let Some(path) = &a.descriptor {
        let desc = load_descriptor(path)?;
        let field = global_rationality_field(&desc).map_err(core_input)?;
        writeln!(out, "{}", json!({"field": subfield_json(&field)}))?;
    } else if let Some(text) = &a.compositum {
        let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("--compositum: {e}")))?;
        let items = v.as_array().ok_or_else(|| CliError::Input("--compositum: expected a JSON array".into()))?;
        let fields = items.iter().map(subfield_from_json).collect::<Result<Vec<CyclotomicSubfield>, _>>()?;
        writeln!(out, "{}", json!({"field": subfield_json(&compositum(&fields))}))?;
    } else {
        return Err(CliError::Input("one of --satake, --descriptor or --compositum is required".into()));
    }
    Ok(())
}

fn global(a: GlobalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let desc = load_descriptor(&a.file)?;
    let report = match a.op {
        GlobalOp::Jl => descriptor_json(&global_jl(&desc).map_err(core_input)?),
        GlobalOp::Purity => json!({"weight": global_purity(&desc, a.normalization.into()).map_err(core_input)?}),
        GlobalOp::Poincare => {
            let p = global_poincare(&desc).map_err(core_input)?;
            json!({"poincare": poincare_json(&p), "text": p.to_string()})
        }
        GlobalOp::Field => {
            let before = global_rationality_field(&desc).map_err(core_input)?;
            let equal = jl_field_equality_check(&desc).map_err(core_input)?;
            json!({"field": subfield_json(&before), "equal_after_transfer": equal})
        }
        GlobalOp::Params => {
            let params = archimedean_parameters(&desc).map_err(core_input)?;
            let map: serde_json::Map<String, Value> = desc
                .places()
                .archimedean()
                .iter()
                .zip(&params)
                .map(|(p, t)| (p.label.clone(), parameter_report(t, a.normalization.into())))
                .collect();
            Value::Object(map)
        }
    };
    writeln!(out, "{report}")?;
    Ok(())
}
