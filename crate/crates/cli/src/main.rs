//! `realtrop`: command-line front end. Every command prints one JSON document
//! on stdout. Library errors exit with status 1 and print
//! `{"error": {"kind": …, "message": …}}`; usage errors exit with status 2.

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use realtrop::hyperfield::{sgn, RealTropVal};
use realtrop::matroid::{
    check_covector_axioms, circuits_from_matrix, cocircuits_from_chirotope, covector_closure,
    gp_from_matrix, AnyGp,
};
use realtrop::puiseux::{parse_puiseux, Matrix, PuiseuxPoly};
use realtrop::seminorm::{
    diagonalize, nondiag_fixture, phi_abs, phi_fiber, project_pi, reconstruct_from_family, CompatibleFamily,
    SeminormExpr, SignedFlag, UnsignedFlag,
};
use realtrop::tropical::{bergman_fan, linear_space_member, parse_point_literal, LinearEmbedding, RealTropProjPoint};
use realtrop::{Error, Limits, Result};

#[derive(Parser)]
#[command(name = "realtrop", version, about = "Exact real tropical geometry from the command line")]
struct Cli {
    /// How signed values are displayed: exact valuation pairs only, or with
    /// the multiplicative form alongside.
    #[arg(long, value_enum, default_value_t = Convention::Val, global = true)]
    convention: Convention,

    /// Bound on exhaustive enumerations (tuples, relations, covectors).
    #[arg(long, global = true)]
    cap: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    Mult,
    Val,
}

/// Inputs are `-` for stdin, a file path, or an inline literal.
#[derive(Subcommand)]
enum Command {
    /// Signed valuated circuits of the row space of a matrix.
    #[command(allow_hyphen_values = true)]
    Circuits { matrix: String },
    /// Grassmann–Plücker relations of a GP function or of a matrix.
    #[command(allow_hyphen_values = true)]
    GpCheck { input: String },
    /// Real tropicalization of a comma-separated list of Puiseux coordinates.
    #[command(allow_hyphen_values = true)]
    Tropicalize { point: String },
    /// Membership of a point in the real tropical linear space of a matrix.
    #[command(allow_hyphen_values = true)]
    Member { point: String, matrix: String },
    /// Cocircuits, covector closure and covector axiom report.
    #[command(allow_hyphen_values = true)]
    Covectors { matrix: String },
    /// Real Bergman fan of the oriented matroid of a matrix.
    #[command(allow_hyphen_values = true)]
    Bergman { matrix: String },
    /// Signed seminorms.
    #[command(subcommand)]
    Seminorm(SeminormCommand),
    /// Compatible families of projections.
    #[command(subcommand)]
    Limit(LimitCommand),
    /// Fixed examples.
    #[command(subcommand)]
    Fixture(FixtureCommand),
}

#[derive(Subcommand)]
enum SeminormCommand {
    /// Value of a seminorm at a vector.
    #[command(allow_hyphen_values = true)]
    Eval { expr: String, vector: String },
    /// Composition, the left operand winning ties.
    #[command(allow_hyphen_values = true)]
    Compose { left: String, right: String },
    /// Diagonal form of a trivially valued seminorm.
    #[command(allow_hyphen_values = true)]
    Diagonalize { expr: String },
    /// Signed flag of a trivially valued seminorm.
    #[command(allow_hyphen_values = true)]
    Flags { expr: String },
    /// Unsigned flag forgetting signs, optionally with its fiber.
    #[command(allow_hyphen_values = true)]
    Phi {
        expr: String,
        #[arg(long)]
        fiber: bool,
    },
    /// Projection to the real tropical linear space of a matrix.
    #[command(allow_hyphen_values = true)]
    Project { expr: String, matrix: String },
}

#[derive(Subcommand)]
enum LimitCommand {
    /// Validates a family and optionally reconstructs values at probes.
    #[command(allow_hyphen_values = true)]
    Check {
        family: String,
        /// JSON array of vectors.
        #[arg(long)]
        probes: Option<String>,
    },
}

#[derive(Subcommand)]
enum FixtureCommand {
    /// The sign-valued seminorm on the plane that is not diagonalizable.
    #[command(allow_hyphen_values = true)]
    Nondiag { x: String, y: String },
}

struct Render {
    convention: Convention,
}

impl Render {
    fn value(&self, x: &RealTropVal) -> Value {
        let mut v = json!({"sign": x.sign().to_string(), "val": x.val().to_string()});
        if self.convention == Convention::Mult {
            v["mult"] = Value::String(x.multiplicative());
        }
        v
    }

    fn values(&self, xs: &[RealTropVal]) -> Value {
        Value::Array(xs.iter().map(|x| self.value(x)).collect())
    }

    fn point(&self, y: &RealTropProjPoint) -> Value {
        json!({"point": y.to_string(), "coords": self.values(y.coords())})
    }
}

fn read_input(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Invalid(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn read_json(arg: &str) -> Result<Value> {
    let text = read_input(arg)?;
    serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("malformed JSON: {e}")))
}

fn poly_of(v: &Value) -> Result<PuiseuxPoly> {
    match v {
        Value::String(s) => parse_puiseux(s),
        Value::Number(n) => parse_puiseux(&n.to_string()),
        _ => Err(Error::Invalid(format!("expected a Puiseux literal, got {v}"))),
    }
}

fn vector_of(v: &Value) -> Result<Vec<PuiseuxPoly>> {
    v.as_array()
        .ok_or_else(|| Error::Invalid(format!("expected an array, got {v}")))?
        .iter()
        .map(poly_of)
        .collect()
}

/// A JSON array of Puiseux literals, or a comma-separated list of them.
fn read_vector(arg: &str) -> Result<Vec<PuiseuxPoly>> {
    let text = read_input(arg)?;
    if text.trim_start().starts_with('[') {
        let v = serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("malformed JSON: {e}")))?;
        vector_of(&v)
    } else {
        text.split(',').map(parse_puiseux).collect()
    }
}

/// A JSON array of rows, or an object with a `matrix` field.
fn matrix_of(v: &Value) -> Result<Matrix<PuiseuxPoly>> {
    let rows = v.get("matrix").unwrap_or(v);
    let rows = rows
        .as_array()
        .ok_or_else(|| Error::Invalid("a matrix is an array of rows".into()))?
        .iter()
        .map(vector_of)
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

fn read_matrix(arg: &str) -> Result<Matrix<PuiseuxPoly>> {
    matrix_of(&read_json(arg)?)
}

fn read_embedding(arg: &str, limits: &Limits) -> Result<LinearEmbedding> {
    let m = read_matrix(arg)?;
    if m.rows() == 0 {
        return Err(Error::Invalid("empty matrix".into()));
    }
    LinearEmbedding::new(m, limits)
}

fn read_expr(arg: &str) -> Result<SeminormExpr> {
    SeminormExpr::from_json(&read_json(arg)?)
}

fn run(cli: &Cli) -> Result<Value> {
    let mut limits = Limits::default();
    if let Some(cap) = cli.cap {
        limits.enumeration_cap = cap.into();
        limits.closure_cap = usize::try_from(cap).unwrap_or(usize::MAX);
    }
    let render = Render { convention: cli.convention };
    match &cli.command {
        Command::Circuits { matrix } => {
            let circuits = circuits_from_matrix(&read_matrix(matrix)?, &limits)?;
            Ok(Value::Array(
                circuits
                    .iter()
                    .map(|c| {
                        let entries = c.entries().iter().map(|x| {
                            let mut pair = vec![json!(x.sign().to_string()), json!(x.val().to_string())];
                            if cli.convention == Convention::Mult {
                                pair.push(json!(x.multiplicative()));
                            }
                            Value::Array(pair)
                        });
                        Value::Array(entries.collect())
                    })
                    .collect(),
            ))
        }
        Command::GpCheck { input } => {
            let doc = read_json(input)?;
            let gp = if doc.get("rank").is_some() {
                AnyGp::from_json(&doc)?
            } else {
                AnyGp::RealTropical(gp_from_matrix(&matrix_of(&doc)?, None, &limits)?)
            };
            let report = gp.check_relations(limits.enumeration_cap)?;
            Ok(json!({
                "hyperfield": gp.tag(),
                "ok": report.ok,
                "relations_checked": report.relations_checked.to_string(),
                "violation": report.violation,
            }))
        }
        Command::Tropicalize { point } => {
            let coords = read_vector(point)?;
            Ok(render.point(&realtrop::tropical::trop_r_point(&coords)?))
        }
        Command::Member { point, matrix } => {
            let y = parse_point_literal(read_input(point)?.trim())?;
            let emb = read_embedding(matrix, &limits)?;
            Ok(json!({"member": linear_space_member(&y, &emb)?}))
        }
        Command::Covectors { matrix } => {
            let m = read_matrix(matrix)?;
            let chirotope = gp_from_matrix(&m, None, &limits)?.map(sgn);
            let cocircuits = cocircuits_from_chirotope(&chirotope, limits.enumeration_cap)?;
            let poset = covector_closure(&cocircuits, m.cols(), limits.closure_cap)?;
            let report = check_covector_axioms(&poset);
            Ok(json!({
                "cocircuits": cocircuits,
                "vectors": poset.vectors,
                "covers": poset.covers,
                "axioms": report,
            }))
        }
        Command::Bergman { matrix } => {
            let m = read_matrix(matrix)?;
            let chirotope = gp_from_matrix(&m, None, &limits)?.map(sgn);
            let cocircuits = cocircuits_from_chirotope(&chirotope, limits.enumeration_cap)?;
            let poset = covector_closure(&cocircuits, m.cols(), limits.closure_cap)?;
            let fan = bergman_fan(&poset, limits.closure_cap)?;
            serde_json::to_value(&fan).map_err(|e| Error::Invalid(e.to_string()))
        }
        Command::Seminorm(cmd) => run_seminorm(cmd, &render, &limits),
        Command::Limit(LimitCommand::Check { family, probes }) => {
            let family = CompatibleFamily::from_json(&read_json(family)?, &limits)?;
            family.validate()?;
            let mut out = json!({"consistent": true, "members": family.members.len()});
            if let Some(probes) = probes {
                let doc = read_json(probes)?;
                let probes = doc
                    .as_array()
                    .ok_or_else(|| Error::Invalid("probes must be an array of vectors".into()))?
                    .iter()
                    .map(vector_of)
                    .collect::<Result<Vec<_>>>()?;
                out["values"] = render.values(&reconstruct_from_family(&family, &probes)?);
            }
            Ok(out)
        }
        Command::Fixture(FixtureCommand::Nondiag { x, y }) => {
            let (x, y) = (parse_puiseux(&read_input(x)?)?, parse_puiseux(&read_input(y)?)?);
            Ok(json!({"sign": nondiag_fixture(&x, &y).to_string()}))
        }
    }
}

fn run_seminorm(cmd: &SeminormCommand, render: &Render, limits: &Limits) -> Result<Value> {
    match cmd {
        SeminormCommand::Eval { expr, vector } => {
            let s = read_expr(expr)?;
            Ok(render.value(&s.eval(&read_vector(vector)?)?))
        }
        SeminormCommand::Compose { left, right } => {
            Ok(SeminormExpr::compose(read_expr(left)?, read_expr(right)?)?.to_json())
        }
        SeminormCommand::Diagonalize { expr } => {
            Ok(SeminormExpr::from(diagonalize(&read_expr(expr)?)?).to_json())
        }
        SeminormCommand::Flags { expr } => {
            let d = diagonalize(&read_expr(expr)?)?;
            Ok(json!({
                "signed": SignedFlag::from_diagonal(&d)?.to_json(),
                "unsigned": UnsignedFlag::from_diagonal(&d)?.to_json(),
            }))
        }
        SeminormCommand::Phi { expr, fiber } => {
            let flag = phi_abs(&read_expr(expr)?).flag()?;
            let mut out = json!({"flag": flag.to_json(), "complete": flag.is_complete()});
            if *fiber {
                let classes = phi_fiber(&flag)?;
                out["fiber"] = Value::Array(classes.iter().map(SignedFlag::to_json).collect());
            }
            Ok(out)
        }
        SeminormCommand::Project { expr, matrix } => {
            let s = read_expr(expr)?;
            Ok(render.point(&project_pi(&s, &read_embedding(matrix, limits)?)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", serde_json::to_string_pretty(&out).expect("JSON values serialize"));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let doc = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
            println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
            ExitCode::from(1)
        }
    }
}
