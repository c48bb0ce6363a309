mod bench;
mod render;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use omframe::document::{vector_to_coeffs, OutputDocument, Timing};
use omframe::reference::{brute_min_bezout, brute_mu_type, gen_witness, WitnessSpec};
use omframe::{
    coefficient_section, eomf, omf, parse_vector, vec_gcd, verify_frame, verify_matrix, Error, Field,
    FieldSpec, PolyVec,
};

/// Degree-optimal moving frames of polynomial vectors.
#[derive(Parser, Debug)]
#[command(name = "omframe", version, about)]
struct Cli {
    /// Coefficient field: `q` (rationals) or `gf:<p>` for a prime p.
    #[arg(long, global = true, default_value = "q")]
    field: FieldSpec,
    /// Emit a JSON document instead of a human-readable summary.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for commands that draw random numbers.
    #[arg(long, global = true, env = "OMFRAME_SEED", default_value_t = 0)]
    seed: u64,
    /// Leave wall-clock timings out of the output.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree-optimal moving frame.
    Frame(VectorArg),
    /// Equivariant degree-optimal moving frame.
    Eframe(VectorArg),
    /// Minimal-degree Bézout vector.
    Bezout(VectorArg),
    /// μ-basis sorted by degree.
    Mubasis(VectorArg),
    /// Check a frame against an input vector.
    Verify {
        /// JSON file holding a frame document or a bare list of rows (`-` for stdin).
        #[arg(long)]
        frame: PathBuf,
        /// Input vector; defaults to the `input` of the frame document.
        vector: Option<String>,
    },
    /// Print an extremal example vector.
    Gen(GenArgs),
    /// Cross-check the frame degrees against brute-force linear algebra.
    Oracle(VectorArg),
    /// Time frame computation on random inputs over a grid of sizes.
    Bench(bench::BenchArgs),
}

#[derive(Args, Debug)]
struct VectorArg {
    /// Comma-separated polynomials in `s`, e.g. "2+s+s^4, 3+s^2+s^4" (`-` for stdin).
    vector: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WitnessKind {
    BetaMu,
    LowerBound,
    UpperBound,
    #[value(name = "detC", alias = "det-c")]
    DetC,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: WitnessKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// μ-type for `beta-mu`, e.g. `1,2`.
    #[arg(long, value_delimiter = ',')]
    mu: Vec<usize>,
    /// Bézout degree for `beta-mu`.
    #[arg(long, default_value_t = 0)]
    j: usize,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.field {
        FieldSpec::Rationals => run(&omframe::Rationals, &cli),
        FieldSpec::Prime(gf) => run(&gf, &cli),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
    }
}

fn read_arg(text: &str) -> Result<String, Failure> {
    if text == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        Ok(text.to_string())
    }
}

fn read_vector<F: Field>(field: &F, text: &str) -> Result<PolyVec<F::Elem>, Failure> {
    Ok(parse_vector(field, &read_arg(text)?)?)
}

fn emit(cli: &Cli, doc: &OutputDocument, human: impl FnOnce() -> String) {
    if cli.json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", human());
    }
}

fn timing(cli: &Cli, start: Instant) -> Option<Timing> {
    (!cli.no_timing).then(|| Timing {
        total_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn status(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run<F: Field>(field: &F, cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Frame(v) | Command::Eframe(v) => {
            let a = read_vector(field, &v.vector)?;
            let equivariant = matches!(cli.command, Command::Eframe(_));
            let start = Instant::now();
            let frame = if equivariant { eomf(field, &a)? } else { omf(field, &a)? };
            let elapsed = timing(cli, start);
            let report = verify_frame(field, &a, &frame)?;
            let mut doc = OutputDocument::new(if equivariant { "eframe" } else { "frame" }, field, &a)
                .with_frame(field, &frame)
                .with_report(&report);
            if equivariant {
                doc.coefficient_section = Some(coefficient_section(field, &a)?.indices);
            }
            doc.timing = elapsed;
            emit(cli, &doc, || render::frame(field, &a, &frame, &report, doc.coefficient_section.as_deref()));
            Ok(status(report.all_passed()))
        }
        Command::Bezout(v) => {
            let a = read_vector(field, &v.vector)?;
            let start = Instant::now();
            let frame = omf(field, &a)?;
            let mut doc = OutputDocument::new("bezout", field, &a);
            doc.gcd = Some(omframe::document::poly_to_coeffs(field, &frame.gcd));
            doc.beta = Some(frame.beta);
            doc.bezout = Some(vector_to_coeffs(field, &frame.bezout()));
            doc.timing = timing(cli, start);
            emit(cli, &doc, || render::bezout(field, &frame));
            Ok(ExitCode::SUCCESS)
        }
        Command::Mubasis(v) => {
            let a = read_vector(field, &v.vector)?;
            let start = Instant::now();
            let frame = omf(field, &a)?;
            let mut doc = OutputDocument::new("mubasis", field, &a);
            doc.mu = Some(frame.mu.clone());
            doc.mu_basis = Some(frame.mu_basis().iter().map(|c| vector_to_coeffs(field, c)).collect());
            doc.timing = timing(cli, start);
            emit(cli, &doc, || render::mu_basis(field, &frame));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { frame, vector } => {
            if frame.as_os_str() == "-" && vector.as_deref() == Some("-") {
                return Err(Failure::Usage("frame and vector cannot both come from stdin".into()));
            }
            let text = if frame.as_os_str() == "-" {
                read_arg("-")?
            } else {
                std::fs::read_to_string(frame)
                    .map_err(|e| Failure::Usage(format!("reading {}: {e}", frame.display())))?
            };
            let (p, doc) = omframe::document::read_frame_json(field, &text)?;
            let a = match (vector, &doc) {
                (Some(v), _) => read_vector(field, v)?,
                (None, Some(d)) => d.input_vector(field)?,
                (None, None) => {
                    return Err(Failure::Usage("a bare frame needs the input vector as an argument".into()))
                }
            };
            let report = verify_matrix(field, &a, &p)?;
            let out = OutputDocument::new("verify", field, &a).with_report(&report);
            emit(cli, &out, || render::report(&report));
            Ok(status(report.all_passed()))
        }
        Command::Gen(g) => {
            let spec = witness_spec(g)?;
            let a = gen_witness(field, &spec)?;
            let doc = OutputDocument::new("gen", field, &a);
            emit(cli, &doc, || format!("{}\n", omframe::format_vector(field, &a)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle(v) => {
            let a = read_vector(field, &v.vector)?;
            let frame = omf(field, &a)?;
            let g = vec_gcd(field, &a)?;
            let reduced = a.exact_div(&g, field).expect("gcd divides");
            let (beta, _) = brute_min_bezout(field, &reduced)?;
            let mu = brute_mu_type(field, &reduced)?;
            let agree = beta == frame.beta && mu == frame.mu;
            let mut doc = OutputDocument::new("oracle", field, &a);
            doc.beta = Some(frame.beta);
            doc.mu = Some(frame.mu.clone());
            doc.verification = Some(vec![omframe::document::CheckRecord {
                name: "oracle".into(),
                passed: agree,
                detail: format!("brute force: beta = {beta}, mu = {mu:?}"),
            }]);
            emit(cli, &doc, || render::oracle(&frame, beta, &mu, agree));
            Ok(status(agree))
        }
        Command::Bench(args) => bench::run(field, cli.seed, cli.json, args).map_err(Failure::Usage),
    }
}

fn witness_spec(g: &GenArgs) -> Result<WitnessSpec, Failure> {
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| Failure::Usage(format!("--{name} is required for this kind")))
    };
    Ok(match g.kind {
        WitnessKind::BetaMu => {
            if g.mu.is_empty() {
                return Err(Failure::Usage("--mu is required for beta-mu".into()));
            }
            if let Some(n) = g.n {
                if n != g.mu.len() + 1 {
                    return Err(Failure::Usage(format!("--n {n} does not match {} mu entries", g.mu.len())));
                }
            }
            WitnessSpec::BetaMu {
                mu: g.mu.clone(),
                j: g.j,
            }
        }
        WitnessKind::LowerBound => WitnessSpec::LowerBound {
            n: need(g.n, "n")?,
            d: need(g.d, "d")?,
        },
        WitnessKind::UpperBound => WitnessSpec::UpperBound {
            n: need(g.n, "n")?,
            d: need(g.d, "d")?,
        },
        WitnessKind::DetC => WitnessSpec::DetC {
            n: need(g.n, "n")?,
            d: need(g.d, "d")?,
        },
    })
}
