mod input;
mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linkcx::complex::skeleton_to_dot;
use linkcx::families::FamilyId;
use linkcx::links::{all_links, links_to_dot};
use linkcx::wordproblem::checks::{agreement, check_center, check_iso, check_subword_property, check_syllable_bound};
use linkcx::wordproblem::{
    bs_normal_form_is_identity, is_identity, rewrite_is_identity, Verdict,
};
use linkcx::words::parse_word;
use serde::Serialize;

use input::{load_description, load_family, load_presentation, parse_family, InputError, Loaded};
use report::{analyze, build_complex, split, BuildReport, Cells, LinkReport, LinksReport, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "linkcx", version, about = "Link-connected 2-complexes, wedge splittings, and word problems in torus knot, Baumslag-Solitar and Artin groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Combinatorial description file.
    #[arg(long, value_name = "FILE")]
    desc: Option<PathBuf>,
    /// Presentation file with a `gens:` header.
    #[arg(long, value_name = "FILE")]
    pres: Option<PathBuf>,
    /// tor:M,N | bs:K | bsgen:M,N | art:M
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Args)]
struct InputArgs {
    #[command(flatten)]
    source: Source,
    /// With --family, use the one-vertex presentation instead of the
    /// two-vertex description.
    #[arg(long)]
    presentation: bool,
}

impl InputArgs {
    fn load(&self) -> Result<Loaded, InputError> {
        match (&self.source.desc, &self.source.pres, &self.source.family) {
            (Some(p), _, _) => load_description(p),
            (_, Some(p), _) => load_presentation(p),
            (_, _, Some(spec)) => load_family(spec, self.presentation),
            _ => unreachable!("clap enforces one input"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct the 2-complex and print its cells.
    Build {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
        /// Write the 1-skeleton as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Cell counts, Euler characteristic, links and surface test.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Vertex links and their components.
    Links {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
        /// Write every link as one clustered DOT graph.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Wedge decomposition into circles and link-connected pieces.
    Split {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a word is the identity. Prints JSON.
    Wp {
        #[arg(long, value_name = "SPEC")]
        family: String,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = WpMethod::NormalForm)]
        method: WpMethod,
    },
    /// Exhaustive theorem checks up to a word length. Prints JSON; exits 1
    /// on any counterexample.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, value_name = "SPEC")]
        family: String,
        #[arg(long, value_name = "N", default_value_t = 10)]
        max_len: usize,
    },
    /// Write DOT for the 1-skeleton or the vertex links.
    ExportDot {
        #[command(flatten)]
        input: InputArgs,
        /// Output path; standard output when absent.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = DotKind::Skeleton)]
        what: DotKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WpMethod {
    /// Normal form, Britton reduction or the Artin isomorphism.
    NormalForm,
    /// Relator-half rewriting (torus knot and Artin groups).
    Rewrite,
    All,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Property {
    Subword,
    Syllables,
    Center,
    Agreement,
    Iso,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotKind {
    Skeleton,
    Links,
}

/// Failures that map to exit status 2.
enum Failure {
    Input(InputError),
    Core(linkcx::Error),
    Io(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<linkcx::Error> for Failure {
    fn from(e: linkcx::Error) -> Self {
        Failure::Core(e)
    }
}

/// Wrapper for `wp` and `verify`: the timing sits outside `report` so the
/// report itself is byte-stable.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Timed<T> {
    schema_version: u32,
    command: &'static str,
    counterexamples: usize,
    report: T,
    elapsed_ms: u128,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct WpReport {
    family: FamilyId,
    word: String,
    verdicts: Vec<Verdict>,
    agree: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Build { input, json, dot } => {
            let loaded = input.load()?;
            let x = build_complex(&loaded.input);
            if let Some(path) = dot {
                write_file(&path, &skeleton_to_dot(&x))?;
            }
            if json {
                let r = BuildReport { schema_version: SCHEMA_VERSION, source: loaded.source, cells: Cells::of(&x), complex: x };
                println!("{}", to_json(&r));
            } else {
                let mut out = format!("{} {}\n", loaded.source.kind, loaded.source.text);
                writeln!(out, "V={} E={} F={}", x.vertex_count(), x.edges().len(), x.faces().len()).unwrap();
                for e in x.edges() {
                    writeln!(out, "  edge {}: v{} -> v{}", e.label, e.tail, e.head).unwrap();
                }
                for f in 0..x.faces().len() {
                    writeln!(out, "  face {f}: {}", x.face_word(f)).unwrap();
                }
                print!("{out}");
            }
            Ok(0)
        }
        Command::Analyze { input, json } => {
            let r = analyze(&input.load()?)?;
            if json {
                println!("{}", to_json(&r));
            } else {
                println!("{} {} ({})", r.source.kind, r.source.text, r.source.origin);
                println!("V={} E={} F={} chi={}", r.cells.vertices, r.cells.edges, r.cells.faces, r.cells.euler_characteristic);
                println!("link components per vertex: {:?}", r.link_components);
                println!("link-connected: {}", yes(r.link_connected));
                println!("closed surface: {}", yes(r.closed_surface));
                if let Some(a) = &r.abelianization {
                    println!("H1: Z^{} torsion {:?}", a.rank, a.torsion);
                }
                if let Some(w) = &r.wedge {
                    println!("wedge: {} circles, {} pieces", w.circles, w.pieces);
                }
            }
            Ok(0)
        }
        Command::Links { input, json, dot } => {
            let loaded = input.load()?;
            let x = build_complex(&loaded.input);
            let links = all_links(&x)?;
            if let Some(path) = dot {
                write_file(&path, &links_to_dot(&links))?;
            }
            let r = LinksReport {
                schema_version: SCHEMA_VERSION,
                source: loaded.source,
                link_connected: links.iter().all(|l| l.is_connected()),
                links: links.iter().map(LinkReport::of).collect(),
            };
            if json {
                println!("{}", to_json(&r));
            } else {
                println!("link-connected: {}", yes(r.link_connected));
                for l in &r.links {
                    println!("v{}: {} components", l.vertex, l.components.len());
                    for c in &l.components {
                        println!("  {{{}}}", c.join(", "));
                    }
                }
            }
            Ok(0)
        }
        Command::Split { input, json } => {
            let (r, _) = split(&input.load()?)?;
            if json {
                println!("{}", to_json(&r));
            } else {
                println!("|I|={} |J|={} circles={} pieces={}", r.link_components, r.minus_vertex_components, r.circles, r.pieces.len());
                for (i, p) in r.pieces.iter().enumerate() {
                    let d = p.description.as_deref().unwrap_or("-");
                    println!(
                        "  piece {i}: V={} E={} F={} chi={} {d}",
                        p.cells.vertices, p.cells.edges, p.cells.faces, p.cells.euler_characteristic
                    );
                }
            }
            Ok(0)
        }
        Command::Wp { family, word, method } => {
            let start = Instant::now();
            let family = parse_family(&family)?;
            let w = parse_word(&word).map_err(|e| InputError {
                origin: "--word".into(),
                line: 0,
                column: 0,
                message: e.to_string(),
            })?;
            let mut verdicts = Vec::new();
            if matches!(method, WpMethod::NormalForm | WpMethod::All) {
                verdicts.push(is_identity(&w, family)?);
                if let (WpMethod::All, FamilyId::Bs { m, .. }) = (method, family) {
                    verdicts.push(bs_normal_form_is_identity(&w, m)?);
                }
            }
            if matches!(method, WpMethod::Rewrite)
                || matches!((method, family), (WpMethod::All, FamilyId::Tor { .. } | FamilyId::Art { .. }))
            {
                verdicts.push(rewrite_is_identity(&w, family)?);
            }
            let agree = verdicts.windows(2).all(|p| p[0].is_identity == p[1].is_identity);
            let report = WpReport { family, word: w.to_string(), verdicts, agree };
            let timed = Timed {
                schema_version: SCHEMA_VERSION,
                command: "wp",
                counterexamples: usize::from(!agree),
                report,
                elapsed_ms: start.elapsed().as_millis(),
            };
            println!("{}", to_json(&timed));
            Ok(u8::from(!agree))
        }
        Command::Verify { property, family, max_len } => {
            let start = Instant::now();
            let family = parse_family(&family)?;
            let (json, counterexamples) = verify(property, family, max_len)?;
            let timed = Timed {
                schema_version: SCHEMA_VERSION,
                command: "verify",
                counterexamples,
                report: json,
                elapsed_ms: start.elapsed().as_millis(),
            };
            println!("{}", to_json(&timed));
            Ok(u8::from(counterexamples > 0))
        }
        Command::ExportDot { input, dot, what } => {
            let x = build_complex(&input.load()?.input);
            let text = match what {
                DotKind::Skeleton => skeleton_to_dot(&x),
                DotKind::Links => links_to_dot(&all_links(&x)?),
            };
            match dot {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn artin_parameter(family: FamilyId, property: &str) -> Result<u32, Failure> {
    match family {
        FamilyId::Art { m } => Ok(m),
        _ => Err(Failure::Core(linkcx::Error::InvalidParameter(format!("{property} needs --family art:M, got {family}")))),
    }
}

/// Runs one property check; returns the report as JSON and its
/// counterexample count.
fn verify(property: Property, family: FamilyId, max_len: usize) -> Result<(serde_json::Value, usize), Failure> {
    let value = |r: &dyn erased::Report| r.to_value();
    Ok(match property {
        Property::Subword => {
            let r = check_subword_property(family, max_len)?;
            (value(&r), r.counterexamples.len() + r.strong_counterexamples.len())
        }
        Property::Syllables => {
            let r = check_syllable_bound(artin_parameter(family, "syllables")?, max_len)?;
            (value(&r), r.counterexamples.len())
        }
        Property::Center => {
            let r = check_center(family, max_len)?;
            let failed_generators = r.designated_commutators.iter().filter(|c| !c.is_identity).count();
            // z itself must fail to be central for odd Artin groups.
            let plain_central =
                !r.plain_z_commutators.is_empty() && r.plain_z_commutators.iter().all(|c| c.is_identity);
            (value(&r), failed_generators + r.violations.len() + usize::from(plain_central))
        }
        Property::Agreement => {
            let r = agreement(family, max_len)?;
            (value(&r), r.disagreements.len() + r.soundness_violations.len() + r.trace_failures.len())
        }
        Property::Iso => {
            let r = check_iso(artin_parameter(family, "iso")?)?;
            let failed = r.checks.iter().filter(|c| !c.is_identity || !c.finite_image_identity).count();
            (value(&r), failed)
        }
    })
}

mod erased {
    use serde::Serialize;

    /// Object-safe serialization into a JSON value.
    pub trait Report {
        fn to_value(&self) -> serde_json::Value;
    }

    impl<T: Serialize> Report for T {
        fn to_value(&self) -> serde_json::Value {
            serde_json::to_value(self).expect("reports serialize")
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            match failure {
                Failure::Input(e) => eprintln!("error: {e}"),
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(2)
        }
    }
}
