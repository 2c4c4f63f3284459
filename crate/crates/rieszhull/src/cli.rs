//! Command-line front end. Every subcommand prints one fact per line in
//! `key=value` form with canonical rationals, so output is
//! byte-deterministic for identical inputs.

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freepwl;
use crate::hull::{adjunction_check, extend_hom, hull_functor, riesz_hull};
use crate::mvcore::hom_check;
use crate::rat::QVector;
use crate::specfile::{load_algebra, load_point_map};
use crate::term::{parse_term, term_to_pwl};

#[derive(Parser)]
#[command(name = "rieszhull", version, about = "Exact Riesz hulls of finite semisimple MV-algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArg {
    /// Algebra spec file (TOML: points, den, generators)
    #[arg(long)]
    spec: String,
}

#[derive(Args)]
struct SpecVectorArgs {
    #[arg(long)]
    spec: String,
    /// Vector as comma-separated rationals "p/q,p/q,..."
    #[arg(long)]
    vector: String,
}

#[derive(Args)]
struct TwoSpecMapArgs {
    /// Source algebra spec file
    #[arg(long)]
    spec_a: String,
    /// Target algebra spec file
    #[arg(long)]
    spec_b: String,
    /// Point map file: one `target_point=source_point` line each
    #[arg(long)]
    map: String,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the algebra and print its elements and chain decomposition
    Generate(SpecArg),
    /// Print the point classes and maximal ideals
    Spectrum(SpecArg),
    /// Print the hull lattice, span basis, and unit
    Hull(SpecArg),
    /// Decide skeleton membership and print span coordinates
    Member(SpecVectorArgs),
    /// Decompose a vector as an n-fold average in the divisible hull
    Divhull(SpecVectorArgs),
    /// Produce an essentiality witness (a, n) for a nonzero vector
    Essential(SpecVectorArgs),
    /// Extend a base homomorphism to the hull skeleton
    Extend(TwoSpecMapArgs),
    /// Lift a base homomorphism through the hull functor
    Functor(TwoSpecMapArgs),
    /// Check the adjunction triangle identities on the hull
    Adjoint {
        #[arg(long)]
        spec: String,
        /// Seed for the random skeleton samples
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Piecewise-linear term operations
    Pwl {
        #[command(subcommand)]
        command: PwlCommand,
    },
}

#[derive(Subcommand)]
enum PwlCommand {
    /// Compile a one-variable term to its exact piecewise-linear form
    Eval { term: String },
    /// Schauder decomposition of a one-variable term over a regular subdivision
    Decompose { term: String },
    /// Report whether a one-variable term denotes a McNaughton function
    Mcnaughton { term: String },
}

fn parse_vector(s: &str, dim: usize) -> Result<QVector> {
    let v = QVector::parse(s)?;
    v.check_len(dim)?;
    Ok(v)
}

fn run_command(cmd: &Command, out: &mut String) -> Result<()> {
    use std::fmt::Write;
    macro_rules! line {
        ($($a:tt)*) => { writeln!(out, $($a)*).expect("write to string") };
    }
    match cmd {
        Command::Generate(args) => {
            let a = load_algebra(&args.spec)?;
            line!("points={}", a.points().labels().join(","));
            line!("den={}", a.den());
            line!("size={}", a.size());
            for n in a.chain_decomposition()? {
                line!("chain={n}");
            }
            for e in a.elements() {
                line!("element={e}");
            }
        }
        Command::Spectrum(args) => {
            let a = load_algebra(&args.spec)?;
            let labels = a.points().labels();
            let (ideals, classes) = a.max_spectrum();
            line!("points={}", labels.join(","));
            line!("classes={}", classes.len());
            for c in &classes {
                let names: Vec<&str> = c.iter().map(|&i| labels[i].as_str()).collect();
                line!("class={}", names.join(","));
            }
            for (ideal, c) in ideals.iter().zip(&classes) {
                let names: Vec<&str> = c.iter().map(|&i| labels[i].as_str()).collect();
                line!(
                    "maxideal=vanishing_at:{} size={}",
                    names.join(","),
                    a.ideal_elements(ideal).len()
                );
            }
            line!("radical_size={}", a.radical().len());
            line!("semisimple={}", a.radical().len() == 1);
        }
        Command::Hull(args) => {
            let a = load_algebra(&args.spec)?;
            let h = riesz_hull(&a)?;
            line!("points={}", a.points().labels().join(","));
            let lat = h.lgroup().lattice();
            line!("lattice_den={}", lat.den());
            line!("lattice_rank={}", lat.rank());
            for row in lat.integer_rows() {
                let entries: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                line!("lattice_row={}", entries.join(","));
            }
            line!("span_dim={}", h.span_dim());
            for b in h.span_basis() {
                line!("span_basis={b}");
            }
            line!("unit={}", h.unit());
        }
        Command::Member(args) => {
            let a = load_algebra(&args.spec)?;
            let h = riesz_hull(&a)?;
            let v = parse_vector(&args.vector, h.dim())?;
            match h.member(&v)? {
                Some(coords) => {
                    line!("member=true");
                    for c in coords {
                        line!("coord={c}");
                    }
                }
                None => line!("not-in-hull"),
            }
        }
        Command::Divhull(args) => {
            let a = load_algebra(&args.spec)?;
            let h = riesz_hull(&a)?;
            let v = parse_vector(&args.vector, h.dim())?;
            let cert = h.divisible_hull().decompose_average(&v)?;
            line!("n={}", cert.n);
            for p in &cert.parts {
                line!("part={p}");
            }
        }
        Command::Essential(args) => {
            let a = load_algebra(&args.spec)?;
            let h = riesz_hull(&a)?;
            let v = parse_vector(&args.vector, h.dim())?;
            let (witness, n) = h.essential_witness(&v)?;
            line!("a=({witness}) n={n}");
        }
        Command::Extend(args) => {
            let a = load_algebra(&args.spec_a)?;
            let b = load_algebra(&args.spec_b)?;
            let f = load_point_map(&args.map, &a, &b)?;
            let ha = riesz_hull(&a)?;
            let hb = riesz_hull(&b)?;
            let ext = extend_hom(&f, &ha, &hb)?;
            for g in a.generators() {
                line!("gen={} image={}", g, ext.apply(g));
            }
            for s in ha.span_basis() {
                line!("basis={} image={}", s, ext.apply(s));
            }
            line!("unique=true");
        }
        Command::Functor(args) => {
            let a = load_algebra(&args.spec_a)?;
            let b = load_algebra(&args.spec_b)?;
            let f = load_point_map(&args.map, &a, &b)?;
            let flags = hom_check(&f, &a, &b)?;
            let ha = riesz_hull(&a)?;
            let hb = riesz_hull(&b)?;
            let report = hull_functor(&f, &ha, &hb)?;
            let a_labels = a.points().labels();
            let classes = a.point_classes();
            for (t, &c) in b.points().labels().iter().zip(&report.hom.point_map) {
                line!("pointmap={}:{}", t, a_labels[classes[c][0]]);
            }
            line!("embedding={}", flags.is_embedding);
            line!("essential={}", flags.is_essential);
            line!("square_commutes={}", report.square_commutes);
            match report.embedding_propagated {
                Some(v) => line!("embedding_propagated={v}"),
                None => line!("embedding_propagated=n/a"),
            }
        }
        Command::Adjoint { spec, seed } => {
            let a = load_algebra(spec)?;
            let h = riesz_hull(&a)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let report = adjunction_check(&a, &h, 25, &mut rng)?;
            line!("idempotent_span={}", report.idempotent_span);
            line!("triangle_unit={}", report.triangle_unit);
            line!("triangle_counit={}", report.triangle_counit);
        }
        Command::Pwl { command } => match command {
            PwlCommand::Eval { term } => {
                let f = term_to_pwl(&parse_term(term)?)?;
                line!("pwl={f}");
            }
            PwlCommand::Decompose { term } => {
                let f = term_to_pwl(&parse_term(term)?)?;
                let d = freepwl::schauder_decompose(&f)?;
                let nodes: Vec<String> =
                    d.subdivision.nodes().iter().map(|x| x.to_string()).collect();
                line!("subdivision={}", nodes.join(","));
                for c in &d.coefficients {
                    line!("coefficient={c}");
                }
                let hats_ok = (0..d.subdivision.nodes().len())
                    .map(|i| freepwl::hat(&d.subdivision, i))
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .all(|hfn| hfn.is_mcnaughton());
                line!("mcnaughton_hats={hats_ok}");
            }
            PwlCommand::Mcnaughton { term } => {
                let f = term_to_pwl(&parse_term(term)?)?;
                line!("mcnaughton={}", f.is_mcnaughton());
            }
        },
    }
    Ok(())
}

/// Runs the CLI; used both by `main` and by in-process tests.
pub fn run<I, T>(argv: I) -> (String, Option<Error>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            // Help and version are answers, not errors.
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (e.to_string(), None);
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("bad arguments").to_string();
            return (String::new(), Some(Error::Parse(first)));
        }
    };
    let mut out = String::new();
    match run_command(&cli.command, &mut out) {
        Ok(()) => (out, None),
        Err(e) => (out, Some(e)),
    }
}

pub fn main_entry() -> std::process::ExitCode {
    let (out, err) = run(std::env::args_os());
    print!("{out}");
    match err {
        None => std::process::ExitCode::SUCCESS,
        Some(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("ERROR {}", msg.trim());
            std::process::ExitCode::FAILURE
        }
    }
}
