//! birat: classify polynomial curve parametrizations from the command line.
//!
//! Exit codes: 0 when a verdict was produced, 2 on parse or usage errors,
//! 3 when the image degenerates to a point. In batch mode the process exit
//! code is the maximum per-instance code and a failing instance does not
//! abort the rest.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use birat_core::{
    classify, divided_difference, format_bipoly, format_unipoly, integer_primitive,
    make_prime_field, parse_poly, reduced_groebner_basis, substitute_diagonal, AmCheck, BiPoly,
    Classification, DecideError, Field, FieldSpec, GroebnerBasis, IdealSpec, ProblemInstance,
    Rationals, Staircase, TermOrder, UniPoly,
};

mod report;
use report::ClassifyReport;

const EXIT_OK: i32 = 0;
const EXIT_PARSE: i32 = 2;
const EXIT_DEGENERATE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "birat",
    version,
    about = "Decide whether t -> (f1(t), ..., fn(t)) maps the affine line birationally or isomorphically onto its image curve"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a parametrization: not birational, birational but not an
    /// isomorphism, or isomorphism
    Classify(CommonOpts),
    /// Print the divided differences and the reduced Groebner basis of the
    /// ideal they generate
    Gb(CommonOpts),
    /// Print each divided difference g(s,t) and the diagonal check
    /// g(s,s) = f'(s)
    Divdiff(CommonOpts),
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Coefficient field: Q, or F<p> for a prime p < 2^31
    #[arg(long, default_value = "Q")]
    field: String,

    /// Term order on k[s,t], with s below t
    #[arg(long, default_value = "degrevlex", value_parser = ["degrevlex", "lex"])]
    order: String,

    /// Emit one JSON object per instance instead of text
    #[arg(long)]
    json: bool,

    /// Include divided differences and both basis renderings in classify text
    #[arg(long)]
    show_basis: bool,

    /// Batch file: one instance per line, polynomials separated by ';',
    /// '#' starts a comment
    #[arg(long, conflicts_with = "polys")]
    file: Option<PathBuf>,

    /// Input polynomials in t, e.g. "t^3" "t^2 + t"
    #[arg(value_name = "POLY")]
    polys: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Classify,
    Gb,
    Divdiff,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_PARSE
            } else {
                EXIT_OK
            };
            let _ = err.print();
            return code;
        }
    };
    let (kind, opts) = match cli.command {
        Command::Classify(opts) => (Kind::Classify, opts),
        Command::Gb(opts) => (Kind::Gb, opts),
        Command::Divdiff(opts) => (Kind::Divdiff, opts),
    };

    let stanzas = match gather_stanzas(&opts) {
        Ok(stanzas) => stanzas,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_PARSE;
        }
    };

    let order = match opts.order.as_str() {
        "lex" => TermOrder::lex(),
        _ => TermOrder::degrevlex(),
    };

    let batch = opts.file.is_some();
    let mut worst = EXIT_OK;
    for (index, texts) in stanzas.iter().enumerate() {
        let code = run_stanza(kind, &opts, order, texts, batch.then_some(index + 1));
        worst = worst.max(code);
    }
    worst
}

/// Input stanzas: the positional polynomials (one instance) or the lines of
/// the batch file.
fn gather_stanzas(opts: &CommonOpts) -> Result<Vec<Vec<String>>, String> {
    match &opts.file {
        None => {
            if opts.polys.is_empty() {
                return Err("no input: pass polynomials or --file <path>".to_string());
            }
            Ok(vec![opts.polys.clone()])
        }
        Some(path) => {
            let content = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let mut stanzas = Vec::new();
            for line in content.lines() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let texts: Vec<String> = line
                    .split(';')
                    .map(|p| p.trim().to_string())
                    .filter(|p| !p.is_empty())
                    .collect();
                if !texts.is_empty() {
                    stanzas.push(texts);
                }
            }
            if stanzas.is_empty() {
                return Err(format!("{}: no instances found", path.display()));
            }
            Ok(stanzas)
        }
    }
}

fn run_stanza(
    kind: Kind,
    opts: &CommonOpts,
    order: TermOrder,
    texts: &[String],
    stanza: Option<usize>,
) -> i32 {
    let label = |message: &str| match stanza {
        Some(n) => format!("instance {n}: {message}"),
        None => message.to_string(),
    };
    let spec = match FieldSpec::parse(&opts.field) {
        Ok(spec) => spec,
        Err(err) => {
            eprintln!("error: {}", label(&err.to_string()));
            return EXIT_PARSE;
        }
    };
    let outcome = match spec {
        FieldSpec::Q => execute(Rationals, kind, opts, order, texts),
        FieldSpec::Fp(p) => match make_prime_field(p) {
            Ok(field) => execute(field, kind, opts, order, texts),
            Err(err) => Err((err.to_string(), EXIT_PARSE)),
        },
    };
    match outcome {
        Ok(body) => {
            if let (Some(n), false) = (stanza, opts.json) {
                println!("# instance {n}: {}", texts.join("; "));
            }
            println!("{body}");
            EXIT_OK
        }
        Err((message, code)) => {
            eprintln!("error: {}", label(&message));
            code
        }
    }
}

fn execute<F: Field>(
    field: F,
    kind: Kind,
    opts: &CommonOpts,
    order: TermOrder,
    texts: &[String],
) -> Result<String, (String, i32)> {
    let started = Instant::now();
    let mut polys: Vec<UniPoly<F>> = Vec::with_capacity(texts.len());
    for text in texts {
        let poly = parse_poly(text, field).map_err(|e| (e.to_string(), EXIT_PARSE))?;
        polys.push(poly);
    }
    match kind {
        Kind::Classify => classify_output(field, opts, order, polys, started),
        Kind::Gb => gb_output(field, opts, order, polys, started),
        Kind::Divdiff => divdiff_output(field, opts, order, polys, started),
    }
}

fn decide_error(err: DecideError) -> (String, i32) {
    let code = match err {
        DecideError::DegenerateImage => EXIT_DEGENERATE,
        _ => EXIT_PARSE,
    };
    (err.to_string(), code)
}

fn classification_text(c: Classification) -> &'static str {
    match c {
        Classification::NotBirational => "NOT BIRATIONAL",
        Classification::BirationalNotIsomorphism => "BIRATIONAL, NOT ISOMORPHISM",
        Classification::Isomorphism => "ISOMORPHISM",
    }
}

fn classification_key(c: Classification) -> &'static str {
    match c {
        Classification::NotBirational => "not_birational",
        Classification::BirationalNotIsomorphism => "birational_not_isomorphism",
        Classification::Isomorphism => "isomorphism",
    }
}

fn am_key(check: AmCheck) -> &'static str {
    match check {
        AmCheck::Satisfied => "satisfied",
        AmCheck::Violated => "violated",
        AmCheck::Inapplicable => "inapplicable",
    }
}

fn staircase_text(s: Staircase) -> String {
    match s {
        Staircase::Finite(n) => n.to_string(),
        Staircase::Infinite => "infinite".to_string(),
    }
}

/// Monic and integer-primitive renderings of the basis elements. Over a
/// prime field the residues are already canonical and the two coincide.
fn basis_strings<F: Field>(
    basis: &GroebnerBasis<F>,
    order: &TermOrder,
) -> (Vec<String>, Vec<String>) {
    let monic = basis
        .elements()
        .iter()
        .map(|h| format_bipoly(h, order))
        .collect();
    let primitive = basis
        .elements()
        .iter()
        .map(|h| format_bipoly(&integer_primitive(h, order), order))
        .collect();
    (monic, primitive)
}

fn classify_output<F: Field>(
    field: F,
    opts: &CommonOpts,
    order: TermOrder,
    polys: Vec<UniPoly<F>>,
    started: Instant,
) -> Result<String, (String, i32)> {
    let inst = ProblemInstance::new(polys, order).map_err(decide_error)?;
    let verdict = classify(&inst).map_err(decide_error)?;
    let (basis_monic, basis_primitive) = basis_strings(&verdict.basis, &order);
    let inputs: Vec<String> = inst
        .polys()
        .iter()
        .map(|f| format_unipoly(f, "t"))
        .collect();
    let elapsed_ms = started.elapsed().as_millis();

    if opts.json {
        let report = ClassifyReport {
            classification: classification_key(verdict.classification).to_string(),
            basis_monic,
            basis_primitive,
            staircase: match verdict.staircase {
                Staircase::Finite(n) => serde_json::Value::from(n),
                Staircase::Infinite => serde_json::Value::from("infinite"),
            },
            am_check: verdict.am_check.map(|c| am_key(c).to_string()),
            inputs,
            order: order.name().to_string(),
            field: field.name(),
            reasons: verdict.reason_codes.iter().map(|r| r.to_string()).collect(),
            elapsed_ms,
            version: env!("CARGO_PKG_VERSION").to_string(),
        };
        return Ok(serde_json::to_string(&report).expect("report serializes"));
    }

    let mut out = String::new();
    out.push_str(&format!(
        "classification: {}\n",
        classification_text(verdict.classification)
    ));
    out.push_str(&format!(
        "staircase: {}\n",
        staircase_text(verdict.staircase)
    ));
    if let Some(check) = verdict.am_check {
        out.push_str(&format!("am check: {}\n", am_key(check)));
    }
    out.push_str(&format!("reasons: {}", verdict.reason_codes.join(", ")));
    if opts.show_basis {
        out.push('\n');
        for (i, g) in inst.divided_differences().iter().enumerate() {
            out.push_str(&format!("g{} = {}\n", i + 1, format_bipoly(g, &order)));
        }
        push_basis(&mut out, &order, &basis_monic, &basis_primitive);
    }
    Ok(out)
}

fn push_basis(out: &mut String, order: &TermOrder, monic: &[String], primitive: &[String]) {
    out.push_str(&format!("reduced basis ({}, monic):\n", order.name()));
    for h in monic {
        out.push_str(&format!("  {h}\n"));
    }
    out.push_str("reduced basis (integer primitive):");
    for h in primitive {
        out.push_str(&format!("\n  {h}"));
    }
}

fn gb_output<F: Field>(
    field: F,
    opts: &CommonOpts,
    order: TermOrder,
    polys: Vec<UniPoly<F>>,
    started: Instant,
) -> Result<String, (String, i32)> {
    let gens: Vec<BiPoly<F>> = polys.iter().map(divided_difference).collect();
    let nonzero: Vec<BiPoly<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err((
            "degenerate image (point): every divided difference is zero".to_string(),
            EXIT_DEGENERATE,
        ));
    }
    let ideal = IdealSpec::new(nonzero, order).map_err(|e| (e.to_string(), EXIT_PARSE))?;
    let basis = reduced_groebner_basis(&ideal).map_err(|e| (e.to_string(), EXIT_PARSE))?;
    let (monic, primitive) = basis_strings(&basis, &order);
    let gi: Vec<String> = gens.iter().map(|g| format_bipoly(g, &order)).collect();
    let inputs: Vec<String> = polys.iter().map(|f| format_unipoly(f, "t")).collect();

    if opts.json {
        let value = serde_json::json!({
            "inputs": inputs,
            "gi": gi,
            "basis_monic": monic,
            "basis_primitive": primitive,
            "order": order.name(),
            "field": field.name(),
            "elapsed_ms": started.elapsed().as_millis() as u64,
            "version": env!("CARGO_PKG_VERSION"),
        });
        return Ok(serde_json::to_string(&value).expect("report serializes"));
    }

    let mut out = String::new();
    for (i, g) in gi.iter().enumerate() {
        out.push_str(&format!("g{} = {}\n", i + 1, g));
    }
    push_basis(&mut out, &order, &monic, &primitive);
    Ok(out)
}

fn divdiff_output<F: Field>(
    field: F,
    opts: &CommonOpts,
    order: TermOrder,
    polys: Vec<UniPoly<F>>,
    started: Instant,
) -> Result<String, (String, i32)> {
    let mut rows = Vec::new();
    for f in &polys {
        let g = divided_difference(f);
        let diagonal = substitute_diagonal(&g);
        rows.push((
            format_unipoly(f, "t"),
            format_bipoly(&g, &order),
            format_unipoly(&diagonal, "s"),
            format_unipoly(&f.derivative(), "s"),
        ));
    }

    if opts.json {
        let value = serde_json::json!({
            "inputs": rows.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
            "gi": rows.iter().map(|r| r.1.clone()).collect::<Vec<_>>(),
            "diagonals": rows.iter().map(|r| r.2.clone()).collect::<Vec<_>>(),
            "derivatives": rows.iter().map(|r| r.3.clone()).collect::<Vec<_>>(),
            "order": order.name(),
            "field": field.name(),
            "elapsed_ms": started.elapsed().as_millis() as u64,
            "version": env!("CARGO_PKG_VERSION"),
        });
        return Ok(serde_json::to_string(&value).expect("report serializes"));
    }

    let mut out = String::new();
    for (i, (f, g, diag, deriv)) in rows.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("f{} = {f}\n", i + 1));
        out.push_str(&format!("g{} = {g}\n", i + 1));
        out.push_str(&format!("g{}(s,s) = {diag}\n", i + 1));
        out.push_str(&format!("f{}'(s) = {deriv}", i + 1));
    }
    Ok(out)
}
