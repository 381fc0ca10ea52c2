//! Command-line front end: reads a complex or ideal document from a file or
//! standard input, runs the classification, power, cohomology, or screening
//! pipeline, and writes a structured report to standard output.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 when a precondition of
//! the requested computation fails (for example screening a complex of
//! codimension below 2).

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use reisner::classify::{classify, ClassificationReport};
use reisner::cohomology::{cohomology, CohomologyReport, FieldSpec};
use reisner::complex::SimplicialComplex;
use reisner::ideal::{complex_from_ideal, stanley_reisner_ideal, Monomial, MonomialIdeal};
use reisner::multiplicity::{
    screen_buchsbaum_powers, MultiplicityError, ScreenVerdict, ScreeningReport,
};

#[derive(Parser)]
#[command(
    name = "reisner",
    about = "Stanley-Reisner toolkit: classification, ideal powers, Buchsbaum screening, local cohomology",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a complex: per-component structure, CI/LCI/S2 flags,
    /// Cohen-Macaulay and Buchsbaum verdicts.
    Classify(CommonArgs),
    /// List the minimal generators of a power of the ideal.
    Power {
        #[command(flatten)]
        common: CommonArgs,
        /// Exponent of the ideal power.
        #[arg(long, short = 'p')]
        power: u32,
    },
    /// Graded local cohomology of a power: finiteness, dimensions,
    /// contributing degrees, depth.
    Cohomology {
        #[command(flatten)]
        common: CommonArgs,
        /// Exponent of the ideal power.
        #[arg(long, short = 'p')]
        power: u32,
        /// Coefficient field: `q` for the rationals or `p:<prime>`.
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Screen powers against the exact Buchsbaum multiplicity bound.
    Screen {
        #[command(flatten)]
        common: CommonArgs,
        /// Largest power to screen.
        #[arg(long, short = 'L')]
        max_power: u32,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Input file with a JSON document; `-` or absent reads standard input.
    input: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Input document: either a complex (`vertices` + `facets`, 1-based) or an
/// ideal (`vars` + `generators`, each a monomial string like `x1^2*x3` or
/// an exponent vector).
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InputDocument {
    vertices: Option<usize>,
    facets: Option<Vec<Vec<usize>>>,
    vars: Option<usize>,
    generators: Option<Vec<GeneratorSpec>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GeneratorSpec {
    Text(String),
    Exponents(Vec<u32>),
}

enum CliError {
    Input(String),
    Precondition(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Precondition(m) => m,
        }
    }
}

fn input_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

enum ParsedInput {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
}

fn read_document(path: &Option<String>) -> Result<ParsedInput, CliError> {
    let text = match path.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(input_err)?;
            buf
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| input_err(format!("{p}: {e}")))?,
    };
    let doc: InputDocument = serde_json::from_str(&text).map_err(input_err)?;
    match (doc.vertices, doc.facets, doc.vars, doc.generators) {
        (Some(n), Some(facets), None, None) => {
            let complex = SimplicialComplex::from_facets(n, &facets).map_err(input_err)?;
            Ok(ParsedInput::Complex(complex))
        }
        (None, None, Some(n), Some(generators)) => {
            if n == 0 || n > 64 {
                return Err(CliError::Input(format!("vars must be in 1..=64, got {n}")));
            }
            let mut gens = Vec::with_capacity(generators.len());
            for (k, g) in generators.iter().enumerate() {
                let m = match g {
                    GeneratorSpec::Text(s) => Monomial::parse(s, n)
                        .map_err(|e| input_err(format!("generator {}: {e}", k + 1)))?,
                    GeneratorSpec::Exponents(exps) => {
                        if exps.len() != n {
                            return Err(CliError::Input(format!(
                                "generator {}: expected {n} exponents, got {}",
                                k + 1,
                                exps.len()
                            )));
                        }
                        Monomial::new(exps.clone())
                    }
                };
                if m.is_one() {
                    return Err(CliError::Input(format!("generator {} is constant", k + 1)));
                }
                gens.push(m);
            }
            Ok(ParsedInput::Ideal(MonomialIdeal::new(n, gens)))
        }
        _ => Err(CliError::Input(
            "document must contain either `vertices` with `facets` or `vars` with `generators`"
                .to_string(),
        )),
    }
}

impl ParsedInput {
    fn into_complex(self) -> Result<SimplicialComplex, CliError> {
        match self {
            ParsedInput::Complex(c) => Ok(c),
            ParsedInput::Ideal(ideal) => complex_from_ideal(&ideal).map_err(input_err),
        }
    }
}

/// The complex echoed back into reports, re-ingestible as an input document.
#[derive(Serialize)]
struct ComplexEcho {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl ComplexEcho {
    fn new(complex: &SimplicialComplex) -> Self {
        let mut facets: Vec<Vec<usize>> = complex.facets().iter().map(|f| f.labels()).collect();
        facets.sort();
        ComplexEcho {
            vertices: complex.n_vertices(),
            facets,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify(common) => run_classify(&common),
        Command::Power { common, power } => run_power(&common, power),
        Command::Cohomology {
            common,
            power,
            field,
        } => run_cohomology(&common, power, &field),
        Command::Screen { common, max_power } => run_screen(&common, max_power),
    };
    match result {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

#[derive(Serialize)]
struct ClassifyOutput {
    complex: ComplexEcho,
    #[serde(flatten)]
    report: ClassificationReport,
}

fn run_classify(common: &CommonArgs) -> Result<String, CliError> {
    let complex = read_document(&common.input)?.into_complex()?;
    let report = classify(&complex);
    let output = ClassifyOutput {
        complex: ComplexEcho::new(&complex),
        report,
    };
    Ok(match common.format {
        Format::Json => to_json(&output)?,
        Format::Text => classify_text(&output),
    })
}

fn classify_text(out: &ClassifyOutput) -> String {
    let r = &out.report;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "complex on {} vertices, dim {}",
        out.complex.vertices, r.dim
    );
    let _ = writeln!(s, "components:");
    for c in &r.components {
        let kind = match &c.kind {
            reisner::classify::ComponentKind::CiDimGe2 => {
                "complete intersection (dim >= 2)".to_string()
            }
            reisner::classify::ComponentKind::MGon(m) => format!("{m}-gon"),
            reisner::classify::ComponentKind::PointedPath(m) => format!("{m}-pointed path"),
            reisner::classify::ComponentKind::Point => "point".to_string(),
            reisner::classify::ComponentKind::NotLci => {
                "not locally complete intersection".to_string()
            }
        };
        let verts: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "  {kind} on {{{}}}", verts.join(","));
    }
    let _ = writeln!(
        s,
        "connected {}  pure {}  ci {}  lci {}  gci {}  s2 {}",
        yn(r.is_connected),
        yn(r.is_pure),
        yn(r.is_ci),
        yn(r.is_lci),
        yn(r.is_gci),
        yn(r.is_s2)
    );
    if let Some(v) = r.lci_witness {
        let _ = writeln!(s, "lci fails at vertex {v}");
    }
    let _ = write!(
        s,
        "cohen-macaulay {}  buchsbaum {}",
        verdict(r.cm),
        verdict(r.buchsbaum)
    );
    s
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(v: reisner::classify::Verdict) -> &'static str {
    match v {
        reisner::classify::Verdict::Yes => "yes",
        reisner::classify::Verdict::No => "no",
        reisner::classify::Verdict::UnknownByThisCriterion => "unknown by this criterion",
    }
}

#[derive(Serialize)]
struct PowerOutput {
    vars: usize,
    power: u32,
    count: usize,
    generators: Vec<GeneratorEntry>,
}

#[derive(Serialize)]
struct GeneratorEntry {
    monomial: String,
    degree: u64,
    exponents: Vec<u32>,
}

fn run_power(common: &CommonArgs, power: u32) -> Result<String, CliError> {
    if power < 1 {
        return Err(CliError::Input("power must be at least 1".to_string()));
    }
    let ideal = match read_document(&common.input)? {
        ParsedInput::Complex(c) => stanley_reisner_ideal(&c),
        ParsedInput::Ideal(ideal) => ideal,
    };
    let powered = ideal.power(power);
    let generators: Vec<GeneratorEntry> = powered
        .gens()
        .iter()
        .map(|g| GeneratorEntry {
            monomial: g.to_string(),
            degree: g.degree(),
            exponents: g.exponents().to_vec(),
        })
        .collect();
    let output = PowerOutput {
        vars: powered.n_vars(),
        power,
        count: generators.len(),
        generators,
    };
    Ok(match common.format {
        Format::Json => to_json(&output)?,
        Format::Text => {
            let mut s = format!(
                "{} minimal generators of the power {}:\n",
                output.count, output.power
            );
            for g in &output.generators {
                let _ = writeln!(s, "  {}  (degree {})", g.monomial, g.degree);
            }
            s.pop();
            s
        }
    })
}

#[derive(Serialize)]
struct CohomologyOutput {
    complex: ComplexEcho,
    #[serde(flatten)]
    report: CohomologyReport,
}

fn run_cohomology(common: &CommonArgs, power: u32, field: &str) -> Result<String, CliError> {
    if power < 1 {
        return Err(CliError::Input("power must be at least 1".to_string()));
    }
    let field = FieldSpec::parse(field).map_err(CliError::Input)?;
    let complex = read_document(&common.input)?.into_complex()?;
    let report = cohomology(&complex, power, &field);
    let output = CohomologyOutput {
        complex: ComplexEcho::new(&complex),
        report,
    };
    Ok(match common.format {
        Format::Json => to_json(&output)?,
        Format::Text => cohomology_text(&output),
    })
}

fn cohomology_text(out: &CohomologyOutput) -> String {
    let r = &out.report;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "power {}  field {}  dim {}  depth {}  cohen-macaulay {}",
        r.power,
        r.field,
        r.dim,
        r.depth,
        yn(r.is_cm)
    );
    for m in &r.modules {
        if m.is_zero() {
            let _ = writeln!(s, "H^{}: zero", m.index);
            continue;
        }
        match m.total_dim {
            Some(d) => {
                let _ = writeln!(s, "H^{}: finite, total dim {d}", m.index);
            }
            None => {
                let _ = writeln!(s, "H^{}: infinite length", m.index);
            }
        }
        for c in &m.contributions {
            let _ = writeln!(
                s,
                "  degree {}  homology index {}  dim {}",
                c.degree, c.homology_index, c.dim
            );
        }
    }
    s.pop();
    s
}

#[derive(Serialize)]
struct ScreenOutput {
    complex: ComplexEcho,
    max_power: u32,
    #[serde(flatten)]
    report: ScreeningReport,
}

fn run_screen(common: &CommonArgs, max_power: u32) -> Result<String, CliError> {
    if max_power < 1 {
        return Err(CliError::Input("max power must be at least 1".to_string()));
    }
    let complex = read_document(&common.input)?.into_complex()?;
    let report = screen_buchsbaum_powers(&complex, max_power).map_err(|e| match e {
        MultiplicityError::CodimensionTooSmall(_) => CliError::Precondition(e.to_string()),
        other => CliError::Precondition(other.to_string()),
    })?;
    let output = ScreenOutput {
        complex: ComplexEcho::new(&complex),
        max_power,
        report,
    };
    Ok(match common.format {
        Format::Json => to_json(&output)?,
        Format::Text => {
            let n = &output.report.numerics;
            let mut s = format!(
                "n {}  d {}  c {}  q {}  e {}\n",
                n.n_vars,
                n.krull_dim,
                n.codim,
                n.indeg.map(|q| q.to_string()).unwrap_or_else(|| "-".into()),
                n.multiplicity
            );
            for row in &output.report.rows {
                let verdict = match row.verdict {
                    ScreenVerdict::RuledOut => "ruled out",
                    ScreenVerdict::Inconclusive => "inconclusive",
                };
                let _ = writeln!(
                    s,
                    "power {:>3}: bound {}  {}",
                    row.power, row.bound, verdict
                );
            }
            s.pop();
            s
        }
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))
}
