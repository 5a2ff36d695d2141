//! Command-line driver. [`run`] does all the work and returns the exit status
//! together with the text for standard output, so it can be tested in-process.
//!
//! Exit statuses: 0 success, 2 rejected input, 3 numerical breakdown. Failures
//! print `{"error": code, "detail": text}`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, ColorChoice, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::contfrac::{
    eval_caratheodory_fraction, eval_h0_fraction, eval_j_fraction, eval_nevanlinna_fraction,
    eval_wall_fraction, Tail,
};
use crate::error::Error;
use crate::pencil::{
    chain_minimal_params, decaying_pencil, denisov_rakhmanov_tail, pencil_eigenvalues,
    pencil_from_wall, DecaySpec, PencilDiagonals,
};
use crate::ratfun::{pj_orthogonality, pj_wall_params, PseudoJacobiSpec};
use crate::table::{emit_table, Cell, Format, Table};
use crate::wall::{cayley, cayley_inverse, wall_forward, wall_inverse, WallParams};
use crate::wire::{BsqWire, JacobiInput, SchurWire, WallWire};

const EXIT_OK: i32 = 0;
const EXIT_INPUT: i32 = 2;
const EXIT_NUMERICAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "wall-cf", version, color = ColorChoice::Never)]
#[command(about = "Schur parameters, Wall continued fractions and Jacobi pencils")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Csv,
}

impl From<Emit> for Format {
    fn from(e: Emit) -> Self {
        match e {
            Emit::Json => Format::Json,
            Emit::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Schur,
    Caratheodory,
    H0,
    Nevanlinna,
    Jfrac,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schur parameters to Wall parameters.
    Forward {
        #[arg(long)]
        gamma: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Wall parameters to Schur parameters.
    Inverse {
        #[arg(long)]
        gr: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Evaluate a continued fraction at one point.
    Eval(EvalArgs),
    /// Pencil diagonals of a finite section.
    Pencil {
        #[arg(long)]
        gr: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Generalized eigenvalues of a finite section.
    Zeros {
        #[arg(long)]
        gr: PathBuf,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Chain-sequence test with minimal parameters.
    Chain {
        #[arg(long)]
        bsq: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Pseudo-Jacobi example: Wall parameters and pencil, or orthogonality integrals.
    Pj {
        #[arg(long = "s", allow_hyphen_values = true)]
        s: f64,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        verify_orthogonality: bool,
        #[arg(long, default_value_t = 400, requires = "verify_orthogonality")]
        quad_nodes: usize,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Pencil tail for geometrically decaying Schur parameters with seeded phases.
    Dr {
        #[arg(long)]
        decay: f64,
        #[arg(long, allow_hyphen_values = true)]
        amplitude: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'N')]
        n: usize,
        #[arg(long, value_parser = parse_window)]
        window: (usize, usize),
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["gr", "gamma"])))]
#[command(group(ArgGroup::new("point").required(true).args(["lambda", "z"])))]
struct EvalArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    gr: Option<PathBuf>,
    #[arg(long)]
    gamma: Option<PathBuf>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    lambda: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z: Option<Complex64>,
    #[arg(long)]
    depth: usize,
    /// Value below the last level; zero when absent.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    tail: Option<Complex64>,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"re,im\", got {s:?}"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|e| format!("real part {re:?}: {e}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|e| format!("imaginary part {im:?}: {e}"))?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(format!("non-finite complex number {s:?}"));
    }
    Ok(Complex64::new(re, im))
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"k0,k1\", got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|e| format!("k0 {a:?}: {e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("k1 {b:?}: {e}"))?;
    if a > b {
        return Err(format!("window start {a} exceeds end {b}"));
    }
    Ok((a, b))
}

/// A failure ready to be reported.
struct Failure {
    status: i32,
    code: &'static str,
    detail: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_numerical() {
            EXIT_NUMERICAL
        } else {
            EXIT_INPUT
        };
        Failure {
            status,
            code: e.code(),
            detail: e.to_string(),
        }
    }
}

impl Failure {
    fn input(code: &'static str, detail: String) -> Self {
        Failure {
            status: EXIT_INPUT,
            code,
            detail,
        }
    }

    fn render(&self) -> String {
        let mut s = json!({ "error": self.code, "detail": self.detail }).to_string();
        s.push('\n');
        s
    }
}

type CliResult = std::result::Result<String, Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> std::result::Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input("io_error", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::input("malformed_input", format!("{}: {e}", path.display())))
}

fn read_wall(path: &Path) -> std::result::Result<WallParams<f64>, Failure> {
    Ok(read_json::<WallWire>(path)?.into_params()?)
}

/// Rewrites -0.0 as 0.0 throughout a JSON value.
fn unsign_zeros(v: &mut Value) {
    match v {
        Value::Number(n) if n.as_f64() == Some(0.0) && n.is_f64() => *v = json!(0.0),
        Value::Array(items) => items.iter_mut().for_each(unsign_zeros),
        Value::Object(map) => map.values_mut().for_each(unsign_zeros),
        _ => {}
    }
}

fn json_line(v: &Value) -> String {
    let mut v = v.clone();
    unsign_zeros(&mut v);
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, A>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    (EXIT_OK, e.render().to_string())
                }
                _ => {
                    let detail = e.render().to_string().trim_end().to_string();
                    let f = Failure::input("invalid_arguments", detail);
                    (f.status, f.render())
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => (EXIT_OK, out),
        Err(f) => (f.status, f.render()),
    }
}

fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Forward { gamma, emit } => forward(&gamma, emit),
        Command::Inverse { gr, emit } => inverse(&gr, emit),
        Command::Eval(args) => eval(&args),
        Command::Pencil { gr, n, emit } => pencil(&gr, n, emit),
        Command::Zeros { gr, n, emit } => zeros(&gr, n, emit),
        Command::Chain { bsq, emit } => chain(&bsq, emit),
        Command::Pj {
            s,
            n,
            verify_orthogonality,
            quad_nodes,
            emit,
        } => {
            if verify_orthogonality {
                pj_verify(s, n, quad_nodes, emit)
            } else {
                pj(s, n, emit)
            }
        }
        Command::Dr {
            decay,
            amplitude,
            seed,
            n,
            window,
            emit,
        } => dr(
            &DecaySpec {
                decay,
                amplitude,
                seed,
                n,
            },
            window,
            emit,
        ),
    }
}

fn forward(path: &Path, emit: Emit) -> CliResult {
    let w = wall_forward(&read_json::<SchurWire>(path)?.into_params()?)?;
    Ok(match emit {
        Emit::Json => {
            json_line(&serde_json::to_value(WallWire::from_params(&w)).expect("serializable"))
        }
        Emit::Csv => {
            let mut t = Table::new(&["k", "g_k", "r_k"]);
            for (k, (&g, &r)) in w.g().iter().zip(w.r()).enumerate() {
                t.push(vec![(k + 1).into(), g.into(), r.into()]);
            }
            emit_table(&t, Format::Csv)
        }
    })
}

fn inverse(path: &Path, emit: Emit) -> CliResult {
    let p = wall_inverse(&read_wall(path)?)?;
    Ok(match emit {
        Emit::Json => {
            json_line(&serde_json::to_value(SchurWire::from_params(&p)).expect("serializable"))
        }
        Emit::Csv => {
            let mut t = Table::new(&["k", "re", "im"]);
            for (k, g) in p.gamma().iter().enumerate() {
                t.push(vec![k.into(), g.re.into(), g.im.into()]);
            }
            emit_table(&t, Format::Csv)
        }
    })
}

fn eval(args: &EvalArgs) -> CliResult {
    let disc = matches!(args.kind, Kind::Schur | Kind::Caratheodory | Kind::H0);
    let point = match (args.lambda, args.z) {
        (Some(l), _) if disc => cayley(l)?,
        (_, Some(z)) if !disc => cayley_inverse(z)?,
        (Some(v), _) | (_, Some(v)) => v,
        (None, None) => unreachable!("clap requires a point"),
    };
    let tail = args.tail.map_or(Tail::Zero, Tail::Given);
    let wall = |args: &EvalArgs| -> std::result::Result<WallParams<f64>, Failure> {
        match (&args.gr, &args.gamma) {
            (Some(gr), _) => read_wall(gr),
            (_, Some(g)) => Ok(wall_forward(&read_json::<SchurWire>(g)?.into_params()?)?),
            _ => unreachable!("clap requires an input"),
        }
    };
    let value = match args.kind {
        Kind::Schur => {
            let p = match (&args.gamma, &args.gr) {
                (Some(g), _) => read_json::<SchurWire>(g)?.into_params()?,
                (_, Some(gr)) => wall_inverse(&read_wall(gr)?)?,
                _ => unreachable!("clap requires an input"),
            };
            eval_wall_fraction(&p, point, args.depth, tail)?.value
        }
        Kind::H0 => eval_h0_fraction(&wall(args)?, point, args.depth, tail)?.value,
        Kind::Caratheodory => {
            eval_caratheodory_fraction(&wall(args)?, point, args.depth, tail)?.value
        }
        Kind::Nevanlinna => eval_nevanlinna_fraction(&wall(args)?, point, args.depth, tail)?.value,
        Kind::Jfrac => {
            if args.tail.is_some() {
                return Err(Failure::input(
                    "invalid_arguments",
                    "jfrac takes no tail".into(),
                ));
            }
            let diag = match (&args.gr, &args.gamma) {
                (Some(gr), _) => match read_json::<JacobiInput>(gr)? {
                    JacobiInput::Wall(w) => pencil_from_wall(&w.into_params()?),
                    JacobiInput::Diagonals(d) => PencilDiagonals::new(d.a, d.b)?,
                },
                _ => pencil_from_wall(&wall(args)?),
            };
            eval_j_fraction(diag.a(), diag.b(), point, args.depth)?
        }
    };
    let kind = args
        .kind
        .to_possible_value()
        .expect("named kind")
        .get_name()
        .to_string();
    Ok(json_line(&json!({
        "kind": kind,
        "depth": args.depth,
        "point": pair(point),
        "value": pair(value),
    })))
}

fn pencil(path: &Path, m: usize, emit: Emit) -> CliResult {
    let p = pencil_from_wall(&read_wall(path)?);
    if m > p.max_section() {
        return Err(Error::SectionTooLarge {
            requested: m,
            available: p.max_section(),
        }
        .into());
    }
    let mut t = Table::new(&["k", "a_k", "b_k"]);
    for k in 0..m {
        let b = if k + 1 < m {
            Cell::Float(p.b()[k])
        } else {
            Cell::Empty
        };
        t.push(vec![k.into(), p.a()[k].into(), b]);
    }
    Ok(emit_table(&t, emit.into()))
}

fn zeros(path: &Path, m: usize, emit: Emit) -> CliResult {
    let p = pencil_from_wall(&read_wall(path)?);
    let eig = pencil_eigenvalues(&p, m)?;
    let mut t = Table::new(&["m", "index", "lambda"]);
    for (i, &l) in eig.iter().enumerate() {
        t.push(vec![m.into(), i.into(), l.into()]);
    }
    Ok(emit_table(&t, emit.into()))
}

fn chain(path: &Path, emit: Emit) -> CliResult {
    let bsq = read_json::<BsqWire>(path)?.bsq;
    let c = chain_minimal_params(&bsq);
    Ok(match emit {
        Emit::Json => json_line(&json!({
            "is_chain": c.is_chain,
            "minimal_params": c.minimal_params,
            "failure_index": c.failure_index,
        })),
        Emit::Csv => {
            let mut t = Table::new(&["k", "m_k"]);
            for (k, &m) in c.minimal_params.iter().enumerate() {
                t.push(vec![k.into(), m.into()]);
            }
            emit_table(&t, Format::Csv)
        }
    })
}

fn pj(s: f64, n: usize, emit: Emit) -> CliResult {
    let w = pj_wall_params(&PseudoJacobiSpec::new(s, n))?;
    let p = pencil_from_wall(&w);
    let mut t = Table::new(&["k", "g_k", "b_k"]);
    for k in 0..=n {
        t.push(vec![
            k.into(),
            w.g_at(k).into(),
            p.b().get(k).copied().into(),
        ]);
    }
    Ok(emit_table(&t, emit.into()))
}

fn pj_verify(s: f64, n: usize, nodes: usize, emit: Emit) -> CliResult {
    let spec = PseudoJacobiSpec::new(s, n);
    let mut t = Table::new(&["n", "k", "re", "im", "relative_magnitude"]);
    for deg in 1..=n {
        for e in pj_orthogonality(&spec, deg, deg, nodes)? {
            t.push(vec![
                e.n.into(),
                e.k.into(),
                e.value.re.into(),
                e.value.im.into(),
                e.relative.into(),
            ]);
        }
    }
    Ok(emit_table(&t, emit.into()))
}

fn dr(spec: &DecaySpec, window: (usize, usize), emit: Emit) -> CliResult {
    let stats = denisov_rakhmanov_tail::<f64>(spec, window)?;
    let p = decaying_pencil::<f64>(spec)?;
    let mut t = Table::new(&["k", "a_k", "b_k"]);
    for k in window.0..=window.1 {
        t.push(vec![
            k.into(),
            p.a()[k].into(),
            p.b().get(k).copied().into(),
        ]);
    }
    Ok(match emit {
        Emit::Json => json_line(&json!({
            "max_a": stats.max_a,
            "max_b_dev": stats.max_b_dev,
            "rows": t.to_json(),
        })),
        Emit::Csv => emit_table(&t, Format::Csv),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_and_window_arguments() {
        assert_eq!(parse_complex("0,2"), Ok(Complex64::new(0.0, 2.0)));
        assert_eq!(parse_complex("-0.5, 0.3"), Ok(Complex64::new(-0.5, 0.3)));
        assert!(parse_complex("1").is_err());
        assert!(parse_complex("nan,0").is_err());
        assert_eq!(parse_window("100,120"), Ok((100, 120)));
        assert!(parse_window("5,1").is_err());
    }

    #[test]
    fn argument_errors_exit_two() {
        let (code, out) = run(["wall-cf", "eval", "--kind", "nope"]);
        assert_eq!(code, 2);
        assert!(out.starts_with("{\"error\":\"invalid_arguments\""));
        let (code, _) = run(["wall-cf", "forward"]);
        assert_eq!(code, 2);
        let (code, out) = run(["wall-cf", "forward", "--gamma", "/nonexistent/file.json"]);
        assert_eq!(code, 2);
        assert!(out.contains("io_error"));
    }

    #[test]
    fn dr_without_amplitude_is_flat() {
        let (code, out) = run([
            "wall-cf",
            "dr",
            "--decay",
            "0.9",
            "--amplitude",
            "0",
            "--seed",
            "7",
            "-N",
            "20",
            "--window",
            "1,3",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["max_a"], json!(0.0));
        assert_eq!(v["max_b_dev"], json!(0.0));
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn pj_table() {
        let (code, out) = run(["wall-cf", "pj", "--s", "1", "-n", "3", "--emit", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "k,g_k,b_k");
        assert_eq!(lines.len(), 5);
        assert!(lines[4].ends_with(','));
        let (code, out) = run(["wall-cf", "pj", "--s", "-1", "-n", "3"]);
        assert_eq!(code, 2);
        assert!(out.contains("invalid_wall_params"));
    }
}
