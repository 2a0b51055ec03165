//! `mvpoly`: command-line access to MV polytopes and the crystal `B(−∞)`.
//!
//! Exit codes: 0 success, 1 a check or verification failed, 2 bad input or
//! usage, 3 internal invariant breach.

use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mvpoly::document::{self, AnyDoc};
use mvpoly::render::{self, Format};
use mvpoly::verify::{self, Report};
use mvpoly::{
    AlgebraKind, Crystal, CrystalElement, DecoratedPolytope, Error, LusztigDatum, Op, RootVector,
    Side, Solver,
};

#[derive(Parser)]
#[command(
    name = "mvpoly",
    version,
    about = "Rank-2 affine MV polytopes and the crystal B(-infinity)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "sl2hat")]
    Sl2Hat,
    #[value(name = "a2(2)", alias = "a22")]
    A22,
}

impl From<Kind> for AlgebraKind {
    fn from(k: Kind) -> AlgebraKind {
        match k {
            Kind::Sl2Hat => AlgebraKind::Sl2Hat,
            Kind::A22 => AlgebraKind::A22,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum DrawFormat {
    Svg,
    Tikz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Uniqueness,
    Solver,
    Polytopes,
    Axioms,
    Star,
    Saito,
    Crystal,
    Imaginary,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Complete a datum document to its MV polytope.
    Complete {
        /// Datum document, or `-` for stdin.
        input: String,
        /// Which side the given datum sits on.
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Check the MV conditions on a polytope document.
    Check {
        input: String,
        /// Print the full polytope document instead of a verdict line.
        #[arg(long)]
        json: bool,
    },
    /// Apply an operator word, left to right, and print the result.
    ///
    /// Tokens: e0 e1 f0 f1 e0* e1* f0* f1* s0 s1 s0* s1* star tau.
    Op {
        /// Whitespace-separated operator word; empty means the start element.
        #[arg(default_value = "")]
        word: String,
        /// Start element: a polytope document, or a datum document with --side.
        #[arg(long)]
        start: Option<String>,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// Algebra when starting from the lowest element.
        #[arg(long, value_enum, default_value = "sl2hat")]
        algebra: Kind,
    },
    /// Export the crystal graph up to a depth.
    Graph {
        #[arg(long, value_enum, default_value = "sl2hat")]
        algebra: Kind,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Draw a polytope (or the completion of a datum with --side).
    Render {
        input: String,
        #[arg(long, value_enum, default_value = "svg")]
        format: DrawFormat,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        /// Restrict to one algebra; both by default.
        #[arg(long, value_enum)]
        algebra: Option<Kind>,
        /// Weight box `a,b` for the sweeps.
        #[arg(long = "box", value_parser = parse_box)]
        weight_box: Option<RootVector>,
        /// Graph depth for the crystal suites.
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, default_value_t = 2)]
        slack: u32,
        #[arg(long, default_value_t = 6)]
        max_imaginary: u32,
        #[arg(long)]
        json: bool,
    },
}

fn parse_box(s: &str) -> Result<RootVector, String> {
    let (a, b) = s.split_once(',').ok_or("expected a,b")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a < 0 || b < 0 {
        return Err("box coordinates must be nonnegative".into());
    }
    Ok(RootVector::new(a, b))
}

enum Failure {
    Check(String),
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CmdResult = Result<String, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn complete(side: Side, datum: &LusztigDatum) -> Result<DecoratedPolytope, Failure> {
    Ok(Solver::fast().complete(side, datum)?)
}

fn polytope_from(text: &str, side: Option<SideArg>) -> Result<DecoratedPolytope, Failure> {
    match document::parse_any(text)? {
        AnyDoc::Polytope(p) => Ok(p),
        AnyDoc::Datum(d) => match side {
            Some(s) => complete(s.into(), &d),
            None => Err(Failure::Usage("a datum document needs --side".into())),
        },
    }
}

fn cmd_complete(input: &str, side: SideArg) -> CmdResult {
    let datum = document::parse_datum(&read_input(input)?)?;
    let p = complete(side.into(), &datum)?;
    if !p.is_mv().passes() {
        return Err(Failure::Internal(format!("completion {p} is not MV")));
    }
    Ok(document::polytope_to_json(&p))
}

fn cmd_check(input: &str, json: bool) -> CmdResult {
    let p = document::parse_polytope(&read_input(input)?)?;
    let verdict = p.is_mv();
    let text = if json {
        document::polytope_to_json(&p)
    } else if verdict.passes() {
        "MV".to_string()
    } else {
        let list: Vec<String> = verdict.violations.iter().map(ToString::to_string).collect();
        format!("not MV: {}", list.join(", "))
    };
    if verdict.passes() {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}

fn cmd_op(word: &str, start: Option<&str>, side: Option<SideArg>, algebra: Kind) -> CmdResult {
    let ops = word
        .split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            Op::parse(tok)
                .ok_or_else(|| Failure::Usage(format!("token {i}: unknown operator {tok:?}")))
        })
        .collect::<Result<Vec<Op>, Failure>>()?;
    let (crystal, b) = match start {
        None => {
            let c = Crystal::new(algebra.into());
            let b = c.lowest();
            (c, b)
        }
        Some(path) => {
            let p = polytope_from(&read_input(path)?, side)?;
            let c = Crystal::new(p.kind());
            (c, CrystalElement::from_polytope(p)?)
        }
    };
    match crystal.apply_word(&ops, &b) {
        Ok(out) => Ok(document::polytope_to_json(out.polytope())),
        Err(e) if e.error.as_ref().is_some_and(Error::is_internal) => {
            Err(Failure::Internal(e.to_string()))
        }
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn cmd_graph(algebra: Kind, depth: u32, _format: GraphFormat) -> CmdResult {
    let g = Crystal::new(algebra.into()).graph(depth)?;
    Ok(document::graph_to_dot(&g).trim_end().to_string())
}

fn cmd_render(input: &str, format: DrawFormat, side: Option<SideArg>) -> CmdResult {
    let p = polytope_from(&read_input(input)?, side)?;
    let format = match format {
        DrawFormat::Svg => Format::Svg,
        DrawFormat::Tikz => Format::Tikz,
    };
    Ok(render::render(&p, format).trim_end().to_string())
}

struct Bounds {
    weight_box: Option<RootVector>,
    depth: Option<u32>,
    slack: u32,
    max_imaginary: u32,
}

fn run_suite(suite: Suite, kind: AlgebraKind, b: &Bounds) -> Result<Vec<Report>, Failure> {
    let default_box = match kind {
        AlgebraKind::Sl2Hat => RootVector::new(6, 6),
        AlgebraKind::A22 => RootVector::new(4, 8),
    };
    let bx = b.weight_box.unwrap_or(default_box);
    let depth = |sl2: u32, a22: u32| {
        b.depth.unwrap_or(match kind {
            AlgebraKind::Sl2Hat => sl2,
            AlgebraKind::A22 => a22,
        })
    };
    let report = match suite {
        Suite::Uniqueness => verify::check_uniqueness(kind, bx),
        Suite::Solver => verify::check_solver_equivalence(kind, bx),
        Suite::Polytopes => verify::check_polytope_properties(kind, bx),
        Suite::Axioms => verify::check_axioms(kind, depth(8, 6), b.max_imaginary)?,
        Suite::Star => verify::check_star_negation(kind, depth(8, 6))?,
        Suite::Saito => verify::check_saito_formulas(kind, depth(6, 6), b.slack)?,
        Suite::Crystal => verify::check_crystal_axioms(kind, depth(8, 8))?,
        Suite::Imaginary => verify::check_imaginary_family(kind, b.max_imaginary)?,
        Suite::All => {
            let all = [
                Suite::Uniqueness,
                Suite::Solver,
                Suite::Polytopes,
                Suite::Axioms,
                Suite::Star,
                Suite::Saito,
                Suite::Crystal,
                Suite::Imaginary,
            ];
            let mut out = Vec::new();
            for s in all {
                out.extend(run_suite(s, kind, b)?);
            }
            return Ok(out);
        }
    };
    Ok(vec![report])
}

fn cmd_verify(suite: Suite, algebra: Option<Kind>, bounds: Bounds, json: bool) -> CmdResult {
    let kinds: Vec<AlgebraKind> = match algebra {
        Some(k) => vec![k.into()],
        None => AlgebraKind::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for kind in kinds {
        reports.extend(run_suite(suite, kind, &bounds)?);
    }
    let text = if json {
        let items: Vec<String> = reports.iter().map(Report::to_json).collect();
        format!("[\n{}\n]", items.join(",\n"))
    } else {
        reports
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n")
            .trim_end()
            .to_string()
    };
    if reports.iter().all(Report::passed) {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Complete { input, side } => cmd_complete(&input, side),
        Command::Check { input, json } => cmd_check(&input, json),
        Command::Op {
            word,
            start,
            side,
            algebra,
        } => cmd_op(&word, start.as_deref(), side, algebra),
        Command::Graph {
            algebra,
            depth,
            format,
        } => cmd_graph(algebra, depth, format),
        Command::Render {
            input,
            format,
            side,
        } => cmd_render(&input, format, side),
        Command::Verify {
            suite,
            algebra,
            weight_box,
            depth,
            slack,
            max_imaginary,
            json,
        } => cmd_verify(
            suite,
            algebra,
            Bounds {
                weight_box,
                depth,
                slack,
                max_imaginary,
            },
            json,
        ),
    };
    match result {
        Ok(text) => {
            let _ = writeln!(io::stdout(), "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(text)) => {
            let _ = writeln!(io::stdout(), "{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("mvpoly: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("mvpoly: internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
