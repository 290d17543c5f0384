//! Argument definitions and dispatch.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{Map, Value};

use jetline::matrix::Matrix;
use jetline::multipoly::{MultiPoly, PolyRing};
use jetline::p1::{
    atiyah_class_with, c_i_class, cech_window, h0, h0_degree_bound, h0_stabilized, h1, h1_stabilized, jet_bundle_of,
    k0_class, splitting_type, splitting_type_via_h1, structure_matrix, JetDerivationSpec, Side, SplittingType,
    TransitionBundle,
};
use jetline::projective::{dual_basis, grassmann_connection, Idempotent, OmegaTensor};
use jetline::Field;

use crate::document::ResultDocument;
use crate::error::CliError;
use crate::json::{
    k0_to_json, matrix_from_json, matrix_to_json, multipoly_vec_to_json, poly_vec_to_json, splitting_to_json,
};
use crate::parse::{
    eval_matrix, multipoly_vars, parse_bundle, parse_matrix_exprs, parse_vector_exprs, BundleExpr, Multi, Target,
};

/// Largest number of grid points `sweep` accepts.
pub const MAX_SWEEP: usize = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "jetline",
    version,
    about = "Splitting types, cohomology, jet bundles and Atiyah classes of bundles on the projective line"
)]
pub struct Cli {
    /// Coefficient field: `q` for the rationals or `fp:<p>` for a prime p
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: Field,
    /// Print the JSON result document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// A matrix given inline or in a file.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct MatrixArgs {
    /// Matrix literal such as "[[t^-1, 0], [0, t^-3]]", or a sum of O(d)
    #[arg(long, alias = "bundle", alias = "idempotent", value_name = "EXPR")]
    pub matrix: Option<String>,
    /// File holding the matrix literal or its JSON form
    #[arg(long, value_name = "PATH")]
    pub matrix_file: Option<PathBuf>,
}

/// `O(d)` or an explicit bundle.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct JetSource {
    /// Degree of the line bundle O(d)
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// Transition matrix literal or O(d) shorthand
    #[arg(long, alias = "bundle", value_name = "EXPR")]
    pub matrix: Option<String>,
    #[arg(long, value_name = "PATH")]
    pub matrix_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    /// I = Ω with the exterior derivative
    Classical,
    /// The rank-3 ideal with derivation (a', t^i a')
    Rank3,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum, default_value_t = ModelKind::Classical)]
    pub model: ModelKind,
    /// Exponent i in 0..2 of the rank-3 model
    #[arg(long, required_if_eq("model", "rank3"))]
    pub i: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Jumps of h0 along twists
    H0,
    /// h1 and Riemann-Roch
    H1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting type of a bundle
    Splitting {
        #[command(flatten)]
        bundle: MatrixArgs,
        #[arg(long, value_enum, default_value_t = Method::H0)]
        method: Method,
    },
    /// Dimension of H^0(E(n))
    H0 {
        #[command(flatten)]
        bundle: MatrixArgs,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
    },
    /// Dimension of H^1(E(n))
    H1 {
        #[command(flatten)]
        bundle: MatrixArgs,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
    },
    /// Left or right jet bundle and its splitting type
    Jet {
        #[command(flatten)]
        source: JetSource,
        #[arg(long, value_enum)]
        side: SideArg,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Structure matrix of the rank-3 model
    StructureMatrix {
        #[arg(long, allow_hyphen_values = true)]
        l: i64,
        #[arg(long)]
        i: i64,
    },
    /// Whether the Atiyah class vanishes, with a witness when it does
    Atiyah {
        #[command(flatten)]
        bundle: MatrixArgs,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Class (degree, rank) in K_0
    K0 {
        #[command(flatten)]
        bundle: MatrixArgs,
    },
    /// The class [left jet] - [right jet] in K_0
    CClass {
        #[command(flatten)]
        source: JetSource,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Grassmann connection of the module im(P) for an idempotent P over K[x1..xn]
    Connection {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// A vector to project into im(P) and differentiate
        #[arg(long, value_name = "VECTOR")]
        element: Option<String>,
        /// Number of variables, when larger than the highest index used
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Jet splittings, Atiyah classes and c-classes over a parameter grid
    Sweep {
        #[arg(long, value_enum, default_value_t = ModelKind::Classical)]
        model: ModelKind,
        /// Degrees d for the classical model, e.g. "1..6" or "1,3,5"
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        /// Degrees l for the rank-3 model
        #[arg(long, allow_hyphen_values = true)]
        l: Option<String>,
        /// Exponents i for the rank-3 model
        #[arg(long)]
        i: Option<String>,
        /// Characteristics, 0 for Q; defaults to the --field value
        #[arg(long)]
        p: Option<String>,
    },
}

pub fn parse_field(s: &str) -> Result<Field, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let p = s.strip_prefix("fp:").ok_or_else(|| format!("expected q or fp:<p>, found {s:?}"))?;
    let p: u64 = p.parse().map_err(|_| format!("{p:?} is not a positive integer"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

/// A finished command: the JSON document and its text rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub document: ResultDocument,
    pub text: String,
}

impl Outcome {
    pub fn render(&self, json: bool) -> String {
        if json {
            self.document.to_json()
        } else {
            self.text.clone()
        }
    }
}

fn read_source(inline: &Option<String>, file: &Option<PathBuf>) -> Result<(String, String, bool), CliError> {
    match (inline, file) {
        (Some(s), _) => Ok(("--matrix".into(), s.clone(), false)),
        (None, Some(path)) => {
            let arg = format!("--matrix-file {}", path.display());
            let text = fs::read_to_string(path).map_err(|e| CliError::Input {
                arg: arg.clone(),
                message: e.to_string(),
            })?;
            Ok((arg, text, true))
        }
        (None, None) => Err(CliError::Usage("a matrix is required".into())),
    }
}

fn bundle_from_text(field: Field, arg: &str, text: &str, from_file: bool) -> Result<TransitionBundle, CliError> {
    let json = if from_file { serde_json::from_str::<Value>(text).ok() } else { None };
    let expr = match json {
        Some(Value::String(s)) => parse_bundle(field, &s).map_err(|e| CliError::parse(arg, e))?,
        Some(v) => BundleExpr::Transition(matrix_from_json(field, &v).map_err(|e| CliError::input(arg, e))?),
        None => parse_bundle(field, text).map_err(|e| CliError::parse(arg, e))?,
    };
    Ok(match expr {
        BundleExpr::Lines(d) => TransitionBundle::split(field, &d),
        BundleExpr::Transition(m) => TransitionBundle::new(m)?,
    })
}

fn load_bundle(field: Field, m: &MatrixArgs) -> Result<TransitionBundle, CliError> {
    let (arg, text, from_file) = read_source(&m.matrix, &m.matrix_file)?;
    bundle_from_text(field, &arg, &text, from_file)
}

fn load_jet_source(field: Field, s: &JetSource, doc: &mut ResultDocument) -> Result<TransitionBundle, CliError> {
    if let Some(d) = s.d {
        doc.input("d", d);
        return Ok(TransitionBundle::line(field, d));
    }
    let (arg, text, from_file) = read_source(&s.matrix, &s.matrix_file)?;
    let e = bundle_from_text(field, &arg, &text, from_file)?;
    doc.input("bundle", matrix_to_json(e.transition()));
    Ok(e)
}

fn model_spec(m: &ModelArgs, doc: &mut ResultDocument) -> Result<JetDerivationSpec, CliError> {
    match (m.model, m.i) {
        (ModelKind::Classical, None) => {
            doc.input("model", "classical");
            Ok(JetDerivationSpec::Classical)
        }
        (ModelKind::Classical, Some(_)) => Err(CliError::Usage("--i applies only to --model rank3".into())),
        (ModelKind::Rank3, Some(i)) => {
            doc.input("model", "rank3").input("i", i);
            Ok(JetDerivationSpec::rank3(i)?)
        }
        (ModelKind::Rank3, None) => Err(CliError::Usage("--model rank3 needs --i".into())),
    }
}

fn side(s: SideArg) -> Side {
    match s {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    }
}

fn matrix_text(m: &Matrix<jetline::LaurentPoly>) -> String {
    m.row_slices()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
        .map(|r| format!("[{r}]"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn tensor_to_json(t: &OmegaTensor) -> Value {
    Value::Array(t.iter().map(|row| multipoly_vec_to_json(row)).collect())
}

fn multipoly_vec_text(v: &[MultiPoly]) -> String {
    format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let field = cli.field;
    let tag = field.tag();
    match &cli.command {
        Command::Splitting { bundle, method } => {
            let mut doc = ResultDocument::new("splitting", &tag);
            let e = load_bundle(field, bundle)?;
            let s = match method {
                Method::H0 => splitting_type(&e)?,
                Method::H1 => splitting_type_via_h1(&e)?,
            };
            let method = match method {
                Method::H0 => "h0",
                Method::H1 => "h1",
            };
            doc.input("bundle", matrix_to_json(e.transition())).input("method", method);
            splitting_outputs(&mut doc, &s);
            let text = format!("{s}\ndegree {}, rank {}", s.degree(), s.rank());
            Ok(Outcome { document: doc, text })
        }
        Command::H0 { bundle, twist } => {
            let mut doc = ResultDocument::new("h0", &tag);
            let e = load_bundle(field, bundle)?;
            let value = h0(&e, *twist);
            doc.input("bundle", matrix_to_json(e.transition())).input("twist", *twist);
            doc.output("h0", value)
                .output("degree_bound", h0_degree_bound(&e, *twist))
                .output("stable", h0_stabilized(&e, *twist));
            let text = format!("h0(E({twist})) = {value}");
            Ok(Outcome { document: doc, text })
        }
        Command::H1 { bundle, twist } => {
            let mut doc = ResultDocument::new("h1", &tag);
            let e = load_bundle(field, bundle)?;
            let value = h1(&e, *twist);
            doc.input("bundle", matrix_to_json(e.transition())).input("twist", *twist);
            doc.output("h1", value)
                .output("window", cech_window(&e))
                .output("stable", h1_stabilized(&e, *twist));
            let text = format!("h1(E({twist})) = {value}");
            Ok(Outcome { document: doc, text })
        }
        Command::Jet { source, side: s, model } => {
            let mut doc = ResultDocument::new("jet", &tag);
            let e = load_jet_source(field, source, &mut doc)?;
            let label = match s {
                SideArg::Left => "left",
                SideArg::Right => "right",
            };
            doc.input("side", label);
            let spec = model_spec(model, &mut doc)?;
            let j = jet_bundle_of(&e, side(*s), spec);
            let split = splitting_type(&j)?;
            splitting_outputs(&mut doc, &split);
            doc.output("transition", matrix_to_json(j.transition()));
            let text = format!("{label} {spec} jet bundle: {split}\ntransition:\n{}", matrix_text(j.transition()));
            Ok(Outcome { document: doc, text })
        }
        Command::StructureMatrix { l, i } => {
            let mut doc = ResultDocument::new("structure-matrix", &tag);
            doc.input("l", *l).input("i", *i);
            let m = structure_matrix(field, *l, *i)?;
            doc.output("matrix", matrix_to_json(&m));
            Ok(Outcome {
                document: doc,
                text: matrix_text(&m),
            })
        }
        Command::Atiyah { bundle, model } => {
            let mut doc = ResultDocument::new("atiyah", &tag);
            let e = load_bundle(field, bundle)?;
            doc.input("bundle", matrix_to_json(e.transition()));
            let spec = model_spec(model, &mut doc)?;
            let class = atiyah_class_with(&e, spec);
            doc.output("vanishes", class.vanishes)
                .output("cocycle", poly_vec_to_json(&class.representative));
            let witness = match &class.witness {
                Some((eta0, eta1)) => {
                    let mut w = Map::new();
                    w.insert("eta0".into(), poly_vec_to_json(eta0));
                    w.insert("eta1".into(), poly_vec_to_json(eta1));
                    Value::Object(w)
                }
                None => Value::Null,
            };
            doc.output("witness", witness)
                .output("witness_verified", class.verify_witness());
            let text = if class.vanishes {
                "the Atiyah class vanishes".to_string()
            } else {
                "the Atiyah class does not vanish".to_string()
            };
            Ok(Outcome { document: doc, text })
        }
        Command::K0 { bundle } => {
            let mut doc = ResultDocument::new("k0", &tag);
            let e = load_bundle(field, bundle)?;
            doc.input("bundle", matrix_to_json(e.transition()));
            let c = k0_class(&e);
            doc.output("degree", c.degree).output("rank", c.rank);
            let text = format!("[E] = (degree {}, rank {})", c.degree, c.rank);
            Ok(Outcome { document: doc, text })
        }
        Command::CClass { source, model } => {
            let mut doc = ResultDocument::new("c-class", &tag);
            let e = load_jet_source(field, source, &mut doc)?;
            let spec = model_spec(model, &mut doc)?;
            let left = jet_bundle_of(&e, Side::Left, spec);
            let right = jet_bundle_of(&e, Side::Right, spec);
            let (sl, sr) = (splitting_type(&left)?, splitting_type(&right)?);
            let c = c_i_class(&left, &right)?;
            doc.output("left", splitting_to_json(&sl))
                .output("right", splitting_to_json(&sr))
                .output("c_class", k0_to_json(&c));
            let text = format!(
                "left {sl}\nright {sr}\nc = (degree {}, rank {})",
                c.degree, c.rank
            );
            Ok(Outcome { document: doc, text })
        }
        Command::Connection { matrix, element, vars } => run_connection(field, matrix, element.as_deref(), *vars),
        Command::Sweep { model, d, l, i, p } => run_sweep(field, *model, d, l, i, p),
    }
}

fn splitting_outputs(doc: &mut ResultDocument, s: &SplittingType) {
    doc.output("splitting", splitting_to_json(s))
        .output("degree", s.degree())
        .output("rank", s.rank());
}

/// The JSON form of a matrix of expression strings as literal syntax.
fn json_matrix_literal(v: &Value) -> Option<String> {
    let rows = v.as_array()?;
    let rows: Option<Vec<String>> = rows
        .iter()
        .map(|r| {
            let entries: Option<Vec<String>> = r
                .as_array()?
                .iter()
                .map(|x| match x {
                    Value::String(s) => Some(format!("({s})")),
                    Value::Number(n) => Some(n.to_string()),
                    _ => None,
                })
                .collect();
            Some(format!("[{}]", entries?.join(", ")))
        })
        .collect();
    Some(format!("[{}]", rows?.join(", ")))
}

fn run_connection(
    field: Field,
    m: &MatrixArgs,
    element: Option<&str>,
    vars: Option<usize>,
) -> Result<Outcome, CliError> {
    let mut doc = ResultDocument::new("connection", &field.tag());
    let (arg, text, from_file) = read_source(&m.matrix, &m.matrix_file)?;
    let text = match from_file.then(|| serde_json::from_str::<Value>(&text).ok()).flatten() {
        Some(v) => json_matrix_literal(&v).ok_or_else(|| CliError::Input {
            arg: arg.clone(),
            message: "expected an array of rows of expression strings".into(),
        })?,
        None => text,
    };
    let rows = parse_matrix_exprs(&text).map_err(|e| CliError::parse(&arg, e))?;
    let elem = element
        .map(|s| parse_vector_exprs(s).map_err(|e| CliError::parse("--element", e)))
        .transpose()?;
    let used = multipoly_vars(rows.iter().flatten())
        .map_err(|e| CliError::parse(&arg, e))?
        .max(elem.iter().flatten().try_fold(0, |n, e| multipoly_vars([e]).map(|k| n.max(k))).map_err(|e| CliError::parse("--element", e))?);
    let nvars = used.max(vars.unwrap_or(0)).max(1);
    let ring = PolyRing::new(field, nvars);
    let target = Multi(ring);
    let entries = eval_matrix(&target, &rows).map_err(|e| CliError::parse(&arg, e))?;
    let p = Matrix::from_rows(&ring, entries).expect("rows checked rectangular");
    let p = Idempotent::new(p)?;
    let conn = grassmann_connection(&p);
    let generators = dual_basis(&p).generators;
    let mut nablas = Vec::with_capacity(generators.len());
    for g in &generators {
        nablas.push(conn.apply(g)?);
    }
    doc.input(
        "idempotent",
        Value::Array(p.matrix().row_slices().map(multipoly_vec_to_json).collect()),
    )
    .input("variables", nvars);
    let mut lines = vec![format!("im(P) in K[x1..x{nvars}]^{}", p.size())];
    for (k, (g, t)) in generators.iter().zip(&nablas).enumerate() {
        lines.push(format!("e{} = {}", k + 1, multipoly_vec_text(g)));
        for (v, row) in t.iter().enumerate() {
            lines.push(format!("  dx{} component of ∇e{}: {}", v + 1, k + 1, multipoly_vec_text(row)));
        }
    }
    doc.output("generators", Value::Array(generators.iter().map(|g| multipoly_vec_to_json(g)).collect()))
        .output("connection", Value::Array(nablas.iter().map(tensor_to_json).collect()));
    if let Some(elem) = elem {
        let w = elem
            .iter()
            .map(|e| target.eval(e))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::parse("--element", e))?;
        let e = p.project(&w)?;
        let t = conn.apply(&e)?;
        doc.input("element", multipoly_vec_to_json(&w));
        doc.output("projected", multipoly_vec_to_json(&e))
            .output("nabla", tensor_to_json(&t));
        lines.push(format!("P w = {}", multipoly_vec_text(&e)));
        for (v, row) in t.iter().enumerate() {
            lines.push(format!("  dx{} component of ∇(P w): {}", v + 1, multipoly_vec_text(row)));
        }
    }
    Ok(Outcome {
        document: doc,
        text: lines.join("\n"),
    })
}

/// `"a..b"` (inclusive), single integers and comma-separated mixtures.
pub fn parse_int_list(arg: &str, s: &str) -> Result<Vec<i64>, CliError> {
    let bad = || CliError::Usage(format!("{arg}: expected integers or ranges a..b, found {s:?}"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                if a > b || b - a >= MAX_SWEEP as i64 {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

fn parse_fields(s: &str) -> Result<Vec<Field>, CliError> {
    s.split(',')
        .map(str::trim)
        .map(|p| match p {
            "0" | "q" | "Q" => Ok(Field::Rational),
            _ => parse_field(&format!("fp:{p}")).map_err(|e| CliError::Usage(format!("--p: {e}"))),
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
struct SweepJob {
    field: Field,
    degree: i64,
    spec: JetDerivationSpec,
}

fn sweep_row(job: SweepJob) -> Result<Value, CliError> {
    let e = TransitionBundle::line(job.field, job.degree);
    let left = jet_bundle_of(&e, Side::Left, job.spec);
    let right = jet_bundle_of(&e, Side::Right, job.spec);
    let (sl, sr) = (splitting_type(&left)?, splitting_type(&right)?);
    let vanishes = atiyah_class_with(&e, job.spec).vanishes;
    let c = c_i_class(&left, &right)?;
    let mut row = Map::new();
    row.insert("field".into(), job.field.tag().into());
    match job.spec {
        JetDerivationSpec::Classical => {
            row.insert("d".into(), job.degree.into());
        }
        JetDerivationSpec::Rank3 { i } => {
            row.insert("l".into(), job.degree.into());
            row.insert("i".into(), i.into());
        }
    }
    row.insert("left".into(), splitting_to_json(&sl));
    row.insert("right".into(), splitting_to_json(&sr));
    row.insert("atiyah_vanishes".into(), vanishes.into());
    row.insert("c_class".into(), k0_to_json(&c));
    Ok(Value::Object(row))
}

fn run_sweep(
    field: Field,
    model: ModelKind,
    d: &Option<String>,
    l: &Option<String>,
    i: &Option<String>,
    p: &Option<String>,
) -> Result<Outcome, CliError> {
    let mut doc = ResultDocument::new("sweep", &field.tag());
    let fields = match p {
        Some(p) => parse_fields(p)?,
        None => vec![field],
    };
    let mut jobs = Vec::new();
    match model {
        ModelKind::Classical => {
            if l.is_some() || i.is_some() {
                return Err(CliError::Usage("--l and --i apply only to --model rank3".into()));
            }
            let ds = parse_int_list("--d", d.as_deref().unwrap_or("1..6"))?;
            doc.input("model", "classical").input("d", ds.clone());
            for &f in &fields {
                for &d in &ds {
                    jobs.push(SweepJob {
                        field: f,
                        degree: d,
                        spec: JetDerivationSpec::Classical,
                    });
                }
            }
        }
        ModelKind::Rank3 => {
            if d.is_some() {
                return Err(CliError::Usage("--d applies only to --model classical".into()));
            }
            let ls = parse_int_list("--l", l.as_deref().unwrap_or("0..4"))?;
            let is = parse_int_list("--i", i.as_deref().unwrap_or("0..2"))?;
            doc.input("model", "rank3").input("l", ls.clone()).input("i", is.clone());
            let specs = is
                .iter()
                .map(|&i| JetDerivationSpec::rank3(i))
                .collect::<Result<Vec<_>, _>>()?;
            for &f in &fields {
                for &l in &ls {
                    for &spec in &specs {
                        jobs.push(SweepJob {
                            field: f,
                            degree: l,
                            spec,
                        });
                    }
                }
            }
        }
    }
    if jobs.len() > MAX_SWEEP {
        return Err(CliError::Usage(format!("the grid has {} points, more than {MAX_SWEEP}", jobs.len())));
    }
    doc.input("fields", fields.iter().map(Field::tag).collect::<Vec<_>>());
    let rows = jobs
        .par_iter()
        .map(|&job| sweep_row(job))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let text = rows.iter().map(sweep_text).collect::<Vec<_>>().join("\n");
    doc.output("rows", rows);
    Ok(Outcome { document: doc, text })
}

fn sweep_text(row: &Value) -> String {
    let get = |k: &str| row.get(k).map(Value::to_string).unwrap_or_default();
    let params = match row.get("d") {
        Some(d) => format!("d={d}"),
        None => format!("l={} i={}", get("l"), get("i")),
    };
    format!(
        "{} {params}: left {} right {} atiyah_vanishes {} c {}",
        row["field"].as_str().unwrap_or_default(),
        get("left"),
        get("right"),
        get("atiyah_vanishes"),
        get("c_class"),
    )
}
