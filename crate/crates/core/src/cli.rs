//! The `quotlat` command line: argument model, pipeline and rendering.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::atoms::{decompose, quotient_atom_matrix, verify_quotient_atom_identities, LanguageDecomposition};
use crate::automata::io::{from_json, to_dot, to_json};
use crate::automata::{minimize, parse_regex, Alphabet, Automaton, Nfa, RESERVED};
use crate::complexity::complexity_report;
use crate::error::{Error, Result};
use crate::lattice::{build_lattice, verify_duality, DualityPart, DualityReport, LatticeKind};
use crate::pairing::{matrix_via_pairing, PairingContext};
use crate::render;

pub const DEFAULT_WORD_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Regex(String),
    AutomatonFile(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Quotients,
    Atoms,
    Atomaton,
    Matrix,
    Lattice { kind: LatticeKind, distributive: bool },
    Duality { which: Option<Which> },
    Pairing,
    Complexity,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliRequest {
    pub input: Input,
    /// `None` infers the alphabet from the input.
    pub alphabet: Option<String>,
    pub command: Command,
    pub format: OutputFormat,
    /// Number of sample words shown for infinite languages.
    pub word_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CliOutput {
    /// 0 success, 1 input error, 2 verification failure.
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "quotlat",
    version,
    about = "Quotients, atoms and quotient lattices of a regular language"
)]
pub struct Cli {
    #[command(flatten)]
    input: InputArgs,

    /// Alphabet symbols in order, e.g. `ab`; inferred when omitted.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputFormat,

    /// Sample words shown for infinite languages.
    #[arg(long = "word-bound", default_value_t = DEFAULT_WORD_BOUND, global = true)]
    word_bound: usize,

    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Regular expression: `_` is ε, `@` is ∅, `|` union, `*` star.
    #[arg(long)]
    regex: Option<String>,

    /// Automaton in JSON form.
    #[arg(long)]
    automaton: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Left and right quotients.
    Quotients,
    /// Left and right atoms with their subsets.
    Atoms,
    /// The átomaton.
    Atomaton,
    /// The quotient-atom matrix.
    Matrix,
    /// One of the four quotient lattices.
    Lattice {
        /// union-left, union-right, intersection-left or intersection-right.
        #[arg(long, value_parser = parse_kind)]
        kind: LatticeKind,
        /// Also report whether the lattice is distributive.
        #[arg(long)]
        distributive: bool,
    },
    /// Verify the dual isomorphisms between left and right lattices.
    Duality {
        #[arg(long, value_enum)]
        which: Option<Which>,
    },
    /// The pairing matrix and orthogonal complements.
    Pairing,
    /// Union and intersection complexity of the left quotients.
    Complexity,
    /// Everything, including all verifications.
    All,
}

fn parse_kind(text: &str) -> std::result::Result<LatticeKind, String> {
    LatticeKind::parse(text)
        .ok_or_else(|| "expected one of union-left, union-right, intersection-left, intersection-right".to_string())
}

impl From<Cli> for CliRequest {
    fn from(cli: Cli) -> Self {
        let input = match (cli.input.regex, cli.input.automaton) {
            (Some(r), _) => Input::Regex(r),
            (None, Some(p)) => Input::AutomatonFile(p),
            (None, None) => unreachable!("clap requires one input"),
        };
        let command = match cli.command {
            CliCommand::Quotients => Command::Quotients,
            CliCommand::Atoms => Command::Atoms,
            CliCommand::Atomaton => Command::Atomaton,
            CliCommand::Matrix => Command::Matrix,
            CliCommand::Lattice { kind, distributive } => Command::Lattice { kind, distributive },
            CliCommand::Duality { which } => Command::Duality { which },
            CliCommand::Pairing => Command::Pairing,
            CliCommand::Complexity => Command::Complexity,
            CliCommand::All => Command::All,
        };
        CliRequest {
            input,
            alphabet: cli.alphabet,
            command,
            format: cli.format,
            word_bound: cli.word_bound,
        }
    }
}

/// Parses command-line arguments (including the program name).
pub fn parse_args<I, T>(args: I) -> std::result::Result<CliRequest, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args).map(CliRequest::from)
}

/// Symbols of a regex in order of first appearance; `a` if there are none.
fn infer_alphabet(regex: &str) -> Result<Alphabet> {
    let mut symbols: Vec<char> = Vec::new();
    for c in regex.chars() {
        if !c.is_whitespace() && !RESERVED.contains(&c) && !symbols.contains(&c) {
            symbols.push(c);
        }
    }
    if symbols.is_empty() {
        symbols.push('a');
    }
    Alphabet::from_chars(symbols)
}

fn load(req: &CliRequest) -> Result<Nfa> {
    match &req.input {
        Input::Regex(text) => {
            let sigma = match &req.alphabet {
                Some(a) => Alphabet::new(a)?,
                None => infer_alphabet(text)?,
            };
            parse_regex(text, &sigma)
        }
        Input::AutomatonFile(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidAutomaton(format!("{}: {e}", path.display())))?;
            let n = from_json(&text)?;
            if let Some(a) = &req.alphabet {
                let sigma = Alphabet::new(a)?;
                if &sigma != n.alphabet() {
                    return Err(Error::AlphabetMismatch(format!(
                        "--alphabet \"{sigma}\" but the automaton uses \"{}\"",
                        n.alphabet()
                    )));
                }
            }
            Ok(n)
        }
    }
}

fn duality_parts(which: Option<Which>) -> Vec<DualityPart> {
    match which {
        Some(Which::A) => vec![DualityPart::A],
        Some(Which::B) => vec![DualityPart::B],
        None => vec![DualityPart::A, DualityPart::B],
    }
}

fn duality_text(report: &DualityReport) -> String {
    let mut out = String::new();
    let part = match report.part {
        DualityPart::A => "a",
        DualityPart::B => "b",
    };
    if report.success() {
        let _ = writeln!(out, "({part}) dual isomorphism verified: {} elements", report.left_size);
    } else {
        let _ = writeln!(
            out,
            "({part}) dual isomorphism FAILED: left {} elements, right {} elements",
            report.left_size, report.right_size
        );
        for w in &report.witnesses {
            let _ = writeln!(out, "  {:?}: {:?} {:?}", w.kind, w.first, w.second);
        }
    }
    out
}

struct Rendered {
    body: String,
    failed: bool,
}

fn ok(body: String) -> Result<Rendered> {
    Ok(Rendered { body, failed: false })
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn no_dot(command: &str) -> Error {
    Error::InvalidAutomaton(format!("dot output is not available for `{command}`"))
}

fn execute(req: &CliRequest) -> Result<Rendered> {
    let source = load(req)?;
    let minimal = minimize(&source);
    let d = decompose(&minimal)?;
    let wb = req.word_bound;
    let format = req.format;
    match &req.command {
        Command::Quotients => match format {
            OutputFormat::Text => ok(render::render_quotients_text(&d, wb)),
            OutputFormat::Json => ok(json_text(&render::quotients_json(&d, wb))),
            OutputFormat::Dot => Err(no_dot("quotients")),
        },
        Command::Atoms => match format {
            OutputFormat::Text => ok(render::render_atoms_text(&d, wb)),
            OutputFormat::Json => ok(json_text(&render::atoms_json(&d, wb))),
            OutputFormat::Dot => Err(no_dot("atoms")),
        },
        Command::Atomaton => match format {
            OutputFormat::Text => ok(atomaton_text(&d)),
            OutputFormat::Json => ok(to_json(d.atomaton()) + "\n"),
            OutputFormat::Dot => ok(to_dot(d.atomaton(), "atomaton")),
        },
        Command::Matrix => {
            let m = quotient_atom_matrix(&d);
            match format {
                OutputFormat::Text => ok(render::render_matrix_text(&m)),
                OutputFormat::Json => ok(json_text(&render::matrix_json(&m))),
                OutputFormat::Dot => Err(no_dot("matrix")),
            }
        }
        Command::Lattice { kind, distributive } => {
            let l = build_lattice(&d, *kind);
            let labels = render::lattice_labels(&d, &l, wb);
            match format {
                OutputFormat::Text => {
                    let mut body = render::render_lattice_text(&l, &labels);
                    if *distributive {
                        let _ = writeln!(body, "distributive: {}", l.is_distributive());
                    }
                    ok(body)
                }
                OutputFormat::Json => {
                    let mut v = render::lattice_json(&l, &labels);
                    if *distributive {
                        v["distributive"] = json!(l.is_distributive());
                    }
                    ok(json_text(&v))
                }
                OutputFormat::Dot => {
                    let mut body = String::new();
                    if *distributive {
                        let _ = writeln!(body, "// distributive: {}", l.is_distributive());
                    }
                    body.push_str(&render::render_lattice_dot(&l, &labels));
                    ok(body)
                }
            }
        }
        Command::Duality { which } => {
            let reports: Vec<DualityReport> = duality_parts(*which)
                .into_iter()
                .map(|p| verify_duality(&d, p))
                .collect();
            let failed = reports.iter().any(|r| !r.success());
            let body = match format {
                OutputFormat::Text => reports.iter().map(duality_text).collect(),
                OutputFormat::Json => json_text(&json!(reports)),
                OutputFormat::Dot => return Err(no_dot("duality")),
            };
            Ok(Rendered { body, failed })
        }
        Command::Pairing => {
            let ctx = PairingContext::new(&d);
            let m = matrix_via_pairing(&ctx);
            match format {
                OutputFormat::Text => ok(render::render_pairing_text(&ctx, &m)),
                OutputFormat::Json => ok(json_text(&render::pairing_json(&ctx, &m))),
                OutputFormat::Dot => Err(no_dot("pairing")),
            }
        }
        Command::Complexity => {
            let r = complexity_report(&d);
            match format {
                OutputFormat::Text => ok(r.to_string()),
                OutputFormat::Json => ok(json_text(&json!(r))),
                OutputFormat::Dot => Err(no_dot("complexity")),
            }
        }
        Command::All => all(&d, wb, format),
    }
}

fn atomaton_text(d: &LanguageDecomposition) -> String {
    let a = d.atomaton();
    let sigma = a.alphabet();
    let mut out = String::new();
    let _ = writeln!(out, "states: {}", a.state_count());
    let _ = writeln!(out, "initial: {:?}", a.initial_states());
    let _ = writeln!(out, "final: {:?}", a.final_states());
    for (p, s, q) in a.transitions() {
        let _ = writeln!(out, "  s{p} -{}-> s{q}", sigma.symbol(s));
    }
    out
}

fn all(d: &LanguageDecomposition, wb: usize, format: OutputFormat) -> Result<Rendered> {
    let identities = verify_quotient_atom_identities(d);
    let duality: Vec<DualityReport> = duality_parts(None).into_iter().map(|p| verify_duality(d, p)).collect();
    let failed = !identities.holds() || duality.iter().any(|r| !r.success());
    let matrix = quotient_atom_matrix(d);
    let ctx = PairingContext::new(d);
    let lattices: Vec<_> = LatticeKind::ALL.iter().map(|&k| build_lattice(d, k)).collect();
    let body = match format {
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&render::render_quotients_text(d, wb));
            out.push_str(&render::render_atoms_text(d, wb));
            let _ = writeln!(out, "atomaton:");
            out.push_str(&atomaton_text(d));
            let _ = writeln!(out, "quotient-atom matrix:");
            out.push_str(&render::render_matrix_text(&matrix));
            for l in &lattices {
                out.push_str(&render::render_lattice_text(l, &render::lattice_labels(d, l, wb)));
            }
            out.extend(duality.iter().map(duality_text));
            let _ = writeln!(
                out,
                "quotient-atom identities: {} ({} instances, {})",
                if identities.holds() { "hold" } else { "VIOLATED" },
                identities.instances,
                if identities.exhaustive { "exhaustive" } else { "sampled" }
            );
            out.push_str(&render::render_pairing_text(&ctx, &matrix_via_pairing(&ctx)));
            out.push_str(&complexity_report(d).to_string());
            out
        }
        OutputFormat::Json => json_text(&json!({
            "quotients": render::quotients_json(d, wb),
            "atoms": render::atoms_json(d, wb),
            "atomaton": serde_json::from_str::<Value>(&to_json(d.atomaton())).expect("valid json"),
            "matrix": render::matrix_json(&matrix),
            "lattices": lattices.iter().map(|l| render::lattice_json(l, &render::lattice_labels(d, l, wb))).collect::<Vec<_>>(),
            "duality": duality,
            "identities": identities,
            "pairing": render::pairing_json(&ctx, &matrix_via_pairing(&ctx)),
            "complexity": complexity_report(d),
        })),
        OutputFormat::Dot => return Err(no_dot("all")),
    };
    Ok(Rendered { body, failed })
}

/// Runs a request to completion, never panicking on bad input.
pub fn run(req: &CliRequest) -> CliOutput {
    match execute(req) {
        Ok(r) => CliOutput {
            status: if r.failed { 2 } else { 0 },
            stdout: r.body,
            stderr: if r.failed {
                "verification failed\n".into()
            } else {
                String::new()
            },
        },
        Err(e) => CliOutput {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
