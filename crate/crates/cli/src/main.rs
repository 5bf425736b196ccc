use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gmatrix::algebra::Algebra;
use gmatrix::catalog::{self, parse_indices, parse_module, AlgebraSpec};
use gmatrix::claims::{self, Params, DEFAULT_SEED};
use gmatrix::ideals::{g_matrix_of_ideal, ideal_for_word, nakayama_permutation};
use gmatrix::linalg::IntMatrix;
use gmatrix::module::{nakayama, tau, Module};
use gmatrix::mutation::{mutate, s_matrix};
use gmatrix::report::{int_json, rat_json, Report};
use gmatrix::silting::{is_silting, phi_inverse, verify_theorem_7_3};
use gmatrix::theory::{cartan_matrix, coxeter_matrix, g_matrix_of_injectives, is_self_injective, TauTiltingPair};
use gmatrix::weyl::{inverse_word, CartanGcm};

/// Exact G-matrix computations over finite-dimensional algebras.
#[derive(Parser)]
#[command(name = "gmat", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized batches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArg {
    /// Built-in algebra, e.g. `auslander:n=3`, `hereditary:A3`, `preprojective:B2:d=2,1`.
    #[arg(long = "type", value_name = "NAME")]
    name: Option<String>,
    /// Algebra description in the JSON input format.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its basis or invariants.
    Algebra {
        #[arg(value_enum)]
        action: AlgebraAction,
        #[command(flatten)]
        alg: AlgebraArg,
    },
    /// Dimension vector, g-vector, τ or ν of a module.
    Module {
        #[arg(value_enum)]
        action: ModuleAction,
        #[command(flatten)]
        alg: AlgebraArg,
        /// Module, e.g. `P1+S1`, `radP2`, `tau(S1)`.
        #[arg(long)]
        module: String,
    },
    /// G-, C- and D-matrices of a τ-tilting pair.
    Gmatrix {
        #[command(flatten)]
        alg: AlgebraArg,
        /// Summands separated by `,`.
        #[arg(long, default_value = "")]
        modules: String,
        /// One-based vertices of the projective part.
        #[arg(long, default_value = "")]
        projectives: String,
    },
    /// Matrix mutation in direction k.
    Mutate {
        /// Row-major integer matrix as JSON.
        #[arg(long)]
        matrix: Option<String>,
        /// File holding the matrix as JSON.
        #[arg(long)]
        file: Option<PathBuf>,
        /// One-based direction.
        #[arg(long)]
        k: usize,
        /// Also print S(B, k) and S(-B, k).
        #[arg(long)]
        s: bool,
    },
    /// Weyl group computations.
    Weyl {
        #[arg(value_enum)]
        action: WeylAction,
        /// Cartan type such as A3, B2, D4.
        #[arg(long = "type")]
        ty: Option<String>,
        /// Cartan matrix as JSON, instead of a type.
        #[arg(long)]
        cartan: Option<String>,
        /// One-based word, e.g. `1,2,1`.
        #[arg(long, default_value = "")]
        word: String,
    },
    /// The ideal I_w of a word over an Auslander or preprojective algebra.
    Ideal {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// The 2-term complex of a τ-tilting pair and its silting checks.
    Silting {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, default_value = "")]
        modules: String,
        #[arg(long, default_value = "")]
        projectives: String,
    },
    /// Run a claim group, or `all`.
    Verify {
        claim: String,
        #[arg(long)]
        n: Option<usize>,
        /// Algebra for claims that take one.
        #[arg(long = "type")]
        ty: Option<String>,
        /// Only `desk` is supported.
        #[arg(long, default_value = "desk")]
        scale: String,
        /// Include group timings in the output.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraAction {
    Build,
    Info,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleAction {
    Gvec,
    Dimvec,
    Tau,
    Nu,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeylAction {
    Rw,
    Sigma,
    Reduce,
    Longest,
}

/// Errors in input are reported with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<bool, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_algebra(arg: &AlgebraArg) -> Result<(Arc<Algebra>, Option<CartanGcm>), InputError> {
    match (&arg.name, &arg.file) {
        (Some(name), None) => {
            let named = catalog::build(name)?;
            Ok((named.algebra, named.gcm))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            let alg = AlgebraSpec::parse(&text)?.build()?;
            Ok((Arc::new(alg), None))
        }
        _ => Err(InputError("give exactly one of --type and --file".into())),
    }
}

fn parse_modules(alg: &Arc<Algebra>, list: &str) -> Result<Vec<Module>, InputError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_module(alg, s).map_err(InputError::from))
        .collect()
}

fn parse_matrix(text: &str) -> Result<IntMatrix, InputError> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text).map_err(|e| InputError(format!("matrix: {e}")))?;
    Ok(IntMatrix::from_i64_rows(&rows)?)
}

fn show(cli: &Cli, value: &Value, text: impl FnOnce() -> String) {
    if cli.json {
        println!("{value}");
    } else {
        println!("{}", text());
    }
}

fn rows(m: &IntMatrix) -> String {
    format!("{:?}", m.to_i64_rows())
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn module_json(m: &Module) -> Value {
    let alg = m.algebra();
    let blocks: Vec<Value> = alg
        .generators()
        .iter()
        .zip(m.generator_blocks())
        .map(|(&g, b)| json!({"arrow": alg.label(g), "matrix": rat_json(b)}))
        .collect();
    json!({
        "algebra": alg.name(),
        "dim_vector": m.dim_vector(),
        "grading": one_based(m.grading()),
        "blocks": blocks,
    })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Algebra { action, alg } => algebra_cmd(cli, *action, alg),
        Command::Module { action, alg, module } => module_cmd(cli, *action, alg, module),
        Command::Gmatrix { alg, modules, projectives } => gmatrix_cmd(cli, alg, modules, projectives),
        Command::Mutate { matrix, file, k, s } => mutate_cmd(cli, matrix.as_deref(), file.as_ref(), *k, *s),
        Command::Weyl { action, ty, cartan, word } => weyl_cmd(cli, *action, ty.as_deref(), cartan.as_deref(), word),
        Command::Ideal { alg, word } => ideal_cmd(cli, alg, word),
        Command::Silting { alg, modules, projectives } => silting_cmd(cli, alg, modules, projectives),
        Command::Verify { claim, n, ty, scale, timings } => verify_cmd(cli, claim, *n, ty.clone(), scale, *timings),
    }
}

fn algebra_cmd(cli: &Cli, action: AlgebraAction, arg: &AlgebraArg) -> Outcome {
    let (alg, _) = load_algebra(arg)?;
    alg.verify()?;
    let labels: Vec<&str> = (0..alg.dim()).map(|b| alg.label(b)).collect();
    let c = cartan_matrix(&alg);
    match action {
        AlgebraAction::Build => {
            let v = json!({"name": alg.name(), "vertices": alg.vertices(), "dim": alg.dim(), "basis": labels});
            show(cli, &v, || {
                format!("{}: {} vertices, dimension {}\nbasis: {}", alg.name(), alg.vertices(), alg.dim(), labels.join(" "))
            });
        }
        AlgebraAction::Info => {
            let det = c.det()?;
            let coxeter = coxeter_matrix(&alg).ok();
            let g_da = g_matrix_of_injectives(&alg);
            let v = json!({
                "name": alg.name(),
                "vertices": alg.vertices(),
                "dim": alg.dim(),
                "cartan": int_json(&c),
                "det_cartan": det.to_string(),
                "coxeter": coxeter.as_ref().map(rat_json),
                "g_da": int_json(&g_da),
                "self_injective": is_self_injective(&alg),
                "radical_layers": alg.radical_power_dims(),
            });
            show(cli, &v, || {
                let mut s = format!("{}: {} vertices, dimension {}\n", alg.name(), alg.vertices(), alg.dim());
                s += &format!("cartan: {}  det {det}\n", rows(&c));
                if let Some(phi) = &coxeter {
                    s += &format!("coxeter: {}\n", rat_json(phi));
                }
                s += &format!("g_da: {}\nself-injective: {}", rows(&g_da), is_self_injective(&alg));
                s
            });
        }
    }
    Ok(true)
}

fn module_cmd(cli: &Cli, action: ModuleAction, arg: &AlgebraArg, spec: &str) -> Outcome {
    let (alg, _) = load_algebra(arg)?;
    let m = parse_module(&alg, spec)?;
    match action {
        ModuleAction::Gvec => {
            let g = m.g_vector();
            show(cli, &json!({"module": spec, "g_vector": g}), || format!("{g:?}"));
        }
        ModuleAction::Dimvec => {
            let d = m.dim_vector();
            let mut v = module_json(&m);
            v["module"] = json!(spec);
            show(cli, &v, || format!("{d:?}"));
        }
        ModuleAction::Tau | ModuleAction::Nu => {
            let (label, image) = match action {
                ModuleAction::Tau => ("tau", tau(&m)),
                _ => ("nu", nakayama(&m)),
            };
            let mut v = module_json(&image);
            v["module"] = json!(format!("{label}({spec})"));
            show(cli, &v, || format!("{:?}", image.dim_vector()));
        }
    }
    Ok(true)
}

fn pair(alg: &Arc<Algebra>, modules: &str, projectives: &str) -> Result<TauTiltingPair, InputError> {
    let ms = parse_modules(alg, modules)?;
    let ps = parse_indices(projectives)?;
    Ok(TauTiltingPair::new(alg, ms, ps)?)
}

fn gmatrix_cmd(cli: &Cli, arg: &AlgebraArg, modules: &str, projectives: &str) -> Outcome {
    let (alg, _) = load_algebra(arg)?;
    let p = pair(&alg, modules, projectives)?;
    let v = json!({
        "pair": p.describe(),
        "g": int_json(p.g()),
        "c": p.c().map(int_json),
        "d": int_json(p.d()),
        "tilting": p.is_tilting(),
    });
    show(cli, &v, || {
        let mut s = format!("G = {}\nD = {}", rows(p.g()), rows(p.d()));
        if let Some(c) = p.c() {
            s += &format!("\nC = {}", rows(c));
        }
        s + &format!("\ntilting: {}", p.is_tilting())
    });
    Ok(true)
}

fn mutate_cmd(cli: &Cli, matrix: Option<&str>, file: Option<&PathBuf>, k: usize, with_s: bool) -> Outcome {
    let text = match (matrix, file) {
        (Some(m), None) => m.to_string(),
        (None, Some(f)) => fs::read_to_string(f).map_err(|e| InputError(format!("{}: {e}", f.display())))?,
        _ => return Err(InputError("give exactly one of --matrix and --file".into())),
    };
    let b = parse_matrix(&text)?;
    if k == 0 {
        return Err(InputError("directions are one-based".into()));
    }
    let mu = mutate(&b, k - 1)?;
    let mut v = json!({"k": k, "b": int_json(&b), "mutated": int_json(&mu)});
    let mut extra = String::new();
    if with_s {
        let plus = s_matrix(&b, k - 1)?;
        let minus = s_matrix(&b.neg(), k - 1)?;
        v["s_plus"] = int_json(&plus);
        v["s_minus"] = int_json(&minus);
        extra = format!("\nS(B,k) = {}\nS(-B,k) = {}", rows(&plus), rows(&minus));
    }
    show(cli, &v, || format!("{}{extra}", rows(&mu)));
    Ok(true)
}

fn weyl_cmd(cli: &Cli, action: WeylAction, ty: Option<&str>, cartan: Option<&str>, word: &str) -> Outcome {
    let gcm = match (ty, cartan) {
        (Some(t), None) => CartanGcm::of_type(t)?,
        (None, Some(c)) => {
            let rows: Vec<Vec<i64>> = serde_json::from_str(c).map_err(|e| InputError(format!("cartan: {e}")))?;
            CartanGcm::new(rows)?
        }
        _ => return Err(InputError("give exactly one of --type and --cartan".into())),
    };
    let w = parse_indices(word)?;
    match action {
        WeylAction::Rw | WeylAction::Sigma => {
            let m = match action {
                WeylAction::Rw => gcm.word_matrix(&w)?,
                _ => gcm.sigma_word(&w)?,
            };
            show(cli, &json!({"word": one_based(&w), "matrix": int_json(&m)}), || rows(&m));
        }
        WeylAction::Reduce => {
            let r = gcm.reduce(&w)?;
            show(cli, &json!({"word": one_based(&w), "reduced": one_based(&r)}), || format!("{:?}", one_based(&r)));
        }
        WeylAction::Longest => {
            let l = gcm.longest_element()?;
            let r = gcm.word_matrix(&l)?;
            show(cli, &json!({"word": one_based(&l), "matrix": int_json(&r)}), || {
                format!("{:?}\nR = {}", one_based(&l), rows(&r))
            });
        }
    }
    Ok(true)
}

fn ideal_cmd(cli: &Cli, arg: &AlgebraArg, word: &str) -> Outcome {
    let (alg, gcm) = load_algebra(arg)?;
    let gcm = gcm.ok_or_else(|| InputError("ideals need a built-in Auslander or preprojective algebra".into()))?;
    let w = parse_indices(word)?;
    let ideal = ideal_for_word(&alg, &gcm, &w)?;
    let sigma = nakayama_permutation(&alg).ok();
    let g = g_matrix_of_ideal(&ideal, sigma.as_deref())?;
    let r = gcm.word_matrix(ideal.word())?;
    let sigma_inv = gcm.sigma_word(&inverse_word(ideal.word()))?;
    let agree = g == r.transpose();
    let summands: Vec<_> = ideal.summands().iter().map(Module::dim_vector).collect();
    let v = json!({
        "word": one_based(&w),
        "reduced": one_based(ideal.word()),
        "dim": ideal.dim(),
        "summands": summands,
        "g": int_json(&g),
        "r_transpose": int_json(&r.transpose()),
        "sigma_inverse": int_json(&sigma_inv),
        "g_equals_r_transpose": agree,
    });
    show(cli, &v, || {
        format!(
            "reduced word {:?}, dim I_w = {}\nsummands {:?}\nG = {}\nR_w^t = {}\nG = R_w^t: {agree}",
            one_based(ideal.word()),
            ideal.dim(),
            summands,
            rows(&g),
            rows(&r.transpose())
        )
    });
    Ok(agree)
}

fn silting_cmd(cli: &Cli, arg: &AlgebraArg, modules: &str, projectives: &str) -> Outcome {
    let (alg, _) = load_algebra(arg)?;
    let ms = parse_modules(&alg, modules)?;
    let ps = parse_indices(projectives)?;
    let p = phi_inverse(&alg, &ms, &ps)?;
    let silting = is_silting(&p)?;
    let summands: Vec<Value> = p
        .summands()
        .iter()
        .map(|s| json!({"p1": one_based(&s.p1), "p0": one_based(&s.p0)}))
        .collect();
    let mut reports = Vec::new();
    for v in 0..alg.vertices() {
        reports.push(verify_theorem_7_3(&p, &Module::simple(alg.clone(), v))?);
    }
    let ok = silting && reports.iter().all(|r| r.pass);
    let v = json!({"summands": summands, "g": int_json(&p.g_matrix()), "silting": silting, "reports": reports});
    show(cli, &v, || {
        let mut s = String::new();
        for (i, x) in summands.iter().enumerate() {
            s += &format!("summand {}: P1 {} -> P0 {}\n", i + 1, x["p1"], x["p0"]);
        }
        s += &format!("G = {}\nsilting: {silting}", rows(&p.g_matrix()));
        for r in &reports {
            s += &format!("\n{}", report_line(r));
        }
        s
    });
    Ok(ok)
}

fn report_line(r: &Report) -> String {
    let status = if r.pass { "PASS" } else { "FAIL" };
    let mut s = format!("{status} {} [{}] {} lhs={} rhs={}", r.claim, r.algebra, r.inputs, r.lhs, r.rhs);
    if let Some(note) = &r.note {
        s += &format!(" ({note})");
    }
    s
}

fn verify_cmd(cli: &Cli, claim: &str, n: Option<usize>, ty: Option<String>, scale: &str, timings: bool) -> Outcome {
    if scale != "desk" {
        return Err(InputError(format!("unsupported scale {scale}")));
    }
    if claim == "all" {
        let (runs, reports) = claims::verify_all(cli.seed);
        let mut ok = true;
        for run in &runs {
            if let Some(e) = &run.error {
                eprintln!("group {} failed to run: {e}", run.group);
                ok = false;
            }
        }
        ok &= reports.iter().all(|r| r.pass);
        if cli.json {
            for r in &reports {
                println!("{}", serde_json::to_string(r)?);
            }
        } else {
            for (id, (pass, fail)) in claims::summarize(&reports) {
                println!("{} {id}: {pass} passed, {fail} failed", if fail == 0 { "PASS" } else { "FAIL" });
            }
            for r in reports.iter().filter(|r| !r.pass) {
                println!("{}", report_line(r));
            }
        }
        if timings {
            for run in &runs {
                eprintln!("{}: {:.3}s", run.group, run.seconds);
            }
        }
        return Ok(ok);
    }
    let group = claims::canonical_group(claim).ok_or_else(|| InputError(format!("unknown claim {claim}")))?;
    let params = Params {
        n,
        algebra: ty,
        seed: cli.seed,
    };
    let run = claims::run_timed(group, &params);
    if let Some(e) = run.error {
        return Err(InputError(e));
    }
    let mut reports = run.reports;
    if timings {
        for r in &mut reports {
            r.elapsed = Some(run.seconds);
        }
    }
    for r in &reports {
        if cli.json {
            println!("{}", serde_json::to_string(r)?);
        } else {
            println!("{}", report_line(r));
        }
    }
    Ok(reports.iter().all(|r| r.pass))
}
