//! Command-line front-end: parse polynomials and complexes, dispatch to
//! the library, emit text or JSON reports.
//!
//! Exit codes: 0 success, 1 contract violation, 2 parse error.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use apolar::lefschetz::{check_slp, check_wlp, hessian_matrix, hessian_vanishes, Strategy};
use apolar::nagata::{build_nagata, sample_line_family, NagataForm};
use apolar::simplicial::{complex_from_json, predict_generators, predict_hilbert, verify_prediction};
use apolar::{
    annihilator, hilbert, parse_polynomial, Certainty, Error, LefschetzConfig, Polynomial,
    VariableSplit,
};

#[derive(Parser)]
#[command(name = "apolar", version, about = "Macaulay inverse systems for bigraded Artinian Gorenstein algebras", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Shared flags declaring the ambient ring.
#[derive(Args)]
struct RingArgs {
    /// number of x-variables (x0..x{n})
    #[arg(long, value_name = "N")]
    xvars: usize,
    /// number of u-variables (u1..u{m})
    #[arg(long, value_name = "M", default_value_t = 0)]
    uvars: usize,
}

#[derive(Args)]
struct SeedArgs {
    /// RNG seed; falls back to APOLAR_SEED, then 0
    #[arg(long)]
    seed: Option<u64>,
}

impl SeedArgs {
    fn resolve(&self) -> u64 {
        self.seed
            .or_else(|| std::env::var("APOLAR_SEED").ok()?.parse().ok())
            .unwrap_or(0)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert vector and bigraded dimension table of A = Q/Ann(f)
    Hilbert {
        #[command(flatten)]
        ring: RingArgs,
        /// polynomial (inline text or a file path)
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Annihilator ideal of f with minimal generators
    Ann {
        #[command(flatten)]
        ring: RingArgs,
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Hessian of order k: size and exact zero test of its determinant
    Hessian {
        #[command(flatten)]
        ring: RingArgs,
        /// Hessian order k (0 <= k <= d/2)
        #[arg(long)]
        order: u32,
        input: String,
        #[command(flatten)]
        seed: SeedArgs,
        /// symbolic determinant expansion up to this matrix size
        #[arg(long, default_value_t = 8)]
        symbolic_threshold: usize,
        #[arg(long)]
        json: bool,
    },
    /// Weak Lefschetz property check
    Wlp {
        #[command(flatten)]
        ring: RingArgs,
        input: String,
        #[command(flatten)]
        seed: SeedArgs,
        /// random witness candidates tried after the canonical one
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 8)]
        symbolic_threshold: usize,
        #[arg(long)]
        json: bool,
    },
    /// Strong Lefschetz property check via higher Hessians
    Slp {
        #[command(flatten)]
        ring: RingArgs,
        input: String,
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 8)]
        symbolic_threshold: usize,
        #[arg(long)]
        json: bool,
    },
    /// Assemble a Nagata polynomial f = sum x_i^{d1} g_i
    NagataBuild {
        #[command(flatten)]
        ring: RingArgs,
        /// the order d1
        #[arg(long)]
        order: u32,
        /// the g_i, separated by ';' (inline) or one per line (file)
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form Hilbert and generator predictions for a complex
    SimplicialPredict {
        /// complex as JSON: {"vertices": m, "facets": [[1,2,3], ...]}
        input: String,
        /// the order k (complex must be pure of dimension k)
        #[arg(long)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Cross-validate the predictions against the exact computation
    SimplicialVerify {
        input: String,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Line geometry of the Nagata hypersurface: exact incidence sampling
    Geometry {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        order: u32,
        /// the g_i, separated by ';' (inline) or one per line (file)
        input: String,
        #[command(flatten)]
        seed: SeedArgs,
        /// number of line pencils to sample
        #[arg(long, default_value_t = 25)]
        trials: u32,
        #[arg(long)]
        json: bool,
    },
}

/// Inline text, or file contents when the argument names a file.
fn read_input(arg: &str) -> std::io::Result<String> {
    if Path::new(arg).is_file() {
        fs::read_to_string(arg)
    } else {
        Ok(arg.to_string())
    }
}

fn parse_form(ring: &RingArgs, input: &str) -> Result<Polynomial, Error> {
    let split = VariableSplit::new(ring.xvars, ring.uvars)?;
    let text = read_input(input).map_err(|e| Error::contract(e.to_string()))?;
    parse_polynomial(&text, &split)
}

fn parse_g_list(ring: &RingArgs, input: &str) -> Result<Vec<Polynomial>, Error> {
    let split = VariableSplit::new(ring.xvars, ring.uvars)?;
    let text = read_input(input).map_err(|e| Error::contract(e.to_string()))?;
    text.split(|c| c == ';' || c == '\n')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_polynomial(s, &split))
        .collect()
}

fn build_form(ring: &RingArgs, order: u32, input: &str) -> Result<NagataForm, Error> {
    build_nagata(order, parse_g_list(ring, input)?)
}

fn read_complex(input: &str) -> Result<apolar::SimplicialComplex, Error> {
    let text = read_input(input).map_err(|e| Error::contract(e.to_string()))?;
    complex_from_json(&text)
}

fn certainty_str(c: Certainty) -> &'static str {
    match c {
        Certainty::Certain => "certain",
        Certainty::Probabilistic => "probabilistic",
    }
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("{text}");
    }
}

#[allow(clippy::too_many_arguments)]
fn lefschetz_cmd(
    slp: bool,
    ring: &RingArgs,
    input: &str,
    seed: &SeedArgs,
    trials: u32,
    symbolic_threshold: usize,
    json: bool,
) -> Result<(), Error> {
    let f = parse_form(ring, input)?;
    let cfg = LefschetzConfig {
        symbolic_threshold,
        seed: seed.resolve(),
        witness_trials: trials,
        ..LefschetzConfig::default()
    };
    let strategy = if trials == 0 {
        Strategy::Canonical
    } else {
        Strategy::Search(trials)
    };
    let report = if slp {
        check_slp(&f, strategy, &cfg)?
    } else {
        check_wlp(&f, strategy, &cfg)?
    };
    let mut text = format!("{}: {:?}", report.property, report.verdict);
    if let Some(w) = &report.witness {
        text.push_str(&format!("\nwitness: {w}"));
    }
    text.push_str(&format!("\nevidence entries: {}", report.evidence.len()));
    emit(json, serde_json::to_value(&report).unwrap(), text);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Hilbert { ring, input, json } => {
            let f = parse_form(&ring, &input)?;
            let hd = hilbert(&f)?;
            let mut text = format!("socle degree: {}\nh: {:?}", hd.socle_degree, hd.h);
            if let Some(table) = &hd.bigraded {
                text.push_str("\nbigraded dimensions:");
                for (i, j, dim) in table {
                    text.push_str(&format!("\n  ({i},{j}): {dim}"));
                }
            }
            emit(json, serde_json::to_value(&hd).unwrap(), text);
        }
        Command::Ann { ring, input, json } => {
            let f = parse_form(&ring, &input)?;
            let ideal = annihilator(&f)?;
            let gens = ideal.generators_report();
            let dims: Vec<(u32, usize)> = (1..=ideal.socle_degree() + 1)
                .map(|k| (k, ideal.dimension(k)))
                .collect();
            let mut text = format!("minimal generators ({}):", gens.len());
            for g in &gens {
                text.push_str(&format!("\n  {g}"));
            }
            text.push_str("\nideal dimensions by degree:");
            for (k, dim) in &dims {
                text.push_str(&format!("\n  {k}: {dim}"));
            }
            emit(
                json,
                json!({
                    "socle_degree": ideal.socle_degree(),
                    "minimal_generators": gens,
                    "dimensions": dims,
                }),
                text,
            );
        }
        Command::Hessian {
            ring,
            order,
            input,
            seed,
            symbolic_threshold,
            json,
        } => {
            let f = parse_form(&ring, &input)?;
            let cfg = LefschetzConfig {
                symbolic_threshold,
                seed: seed.resolve(),
                ..LefschetzConfig::default()
            };
            let hm = hessian_matrix(&f, order)?;
            let (vanishes, certainty) = hessian_vanishes(&f, order, &cfg)?;
            let det = if hm.size() <= symbolic_threshold {
                Some(hm.symbolic_determinant().render(false))
            } else {
                None
            };
            let mut text = format!(
                "hess^{} has size {}x{}\nvanishes identically: {} ({})",
                order,
                hm.size(),
                hm.size(),
                vanishes,
                certainty_str(certainty),
            );
            if let Some(d) = &det {
                text.push_str(&format!("\ndeterminant: {d}"));
            }
            emit(
                json,
                json!({
                    "order": order,
                    "size": hm.size(),
                    "vanishes": vanishes,
                    "certainty": certainty_str(certainty),
                    "determinant": det,
                }),
                text,
            );
        }
        Command::Wlp {
            ring,
            input,
            seed,
            trials,
            symbolic_threshold,
            json,
        } => lefschetz_cmd(false, &ring, &input, &seed, trials, symbolic_threshold, json)?,
        Command::Slp {
            ring,
            input,
            seed,
            trials,
            symbolic_threshold,
            json,
        } => lefschetz_cmd(true, &ring, &input, &seed, trials, symbolic_threshold, json)?,
        Command::NagataBuild {
            ring,
            order,
            input,
            json,
        } => {
            let form = build_form(&ring, order, &input)?;
            let bd = form.form().bidegree().expect("validated bihomogeneous");
            let mut text = format!("f = {}\nbidegree: ({}, {})", form.form(), bd.0, bd.1);
            for w in form.warnings() {
                text.push_str(&format!("\nwarning: {w}"));
            }
            emit(
                json,
                json!({
                    "order": order,
                    "form": form.form().render(false),
                    "bidegree": [bd.0, bd.1],
                    "warnings": form.warnings(),
                }),
                text,
            );
        }
        Command::SimplicialPredict { input, order, json } => {
            let cx = read_complex(&input)?;
            let p = predict_hilbert(&cx, order)?;
            let fam = predict_generators(&cx, order)?;
            let render = |v: &[Polynomial]| -> Vec<String> {
                v.iter().map(|g| g.render(true)).collect()
            };
            let mut text = format!(
                "f-vector: {:?}\npredicted h: {:?}\ngenerator families: power {}, nonface {}, mixed {}, binomial {}, cross {}",
                cx.f_vector(),
                p.h,
                fam.power.len(),
                fam.nonfaces.len(),
                fam.mixed.len(),
                fam.binomials.len(),
                fam.cross.len(),
            );
            for w in cx.warnings() {
                text.push_str(&format!("\nwarning: {w}"));
            }
            emit(
                json,
                json!({
                    "order": order,
                    "f_vector": cx.f_vector(),
                    "h": p.h,
                    "bigraded": p.bigraded,
                    "generators": {
                        "power": render(&fam.power),
                        "nonface": render(&fam.nonfaces),
                        "mixed": render(&fam.mixed),
                        "binomial": render(&fam.binomials),
                        "cross": render(&fam.cross),
                    },
                    "warnings": cx.warnings(),
                }),
                text,
            );
        }
        Command::SimplicialVerify { input, order, json } => {
            let cx = read_complex(&input)?;
            let report = verify_prediction(&cx, order)?;
            let mut text = String::new();
            let dim_fail = report.dimension_checks.iter().filter(|c| !c.pass).count();
            text.push_str(&format!(
                "dimension checks: {} entries, {} mismatches",
                report.dimension_checks.len(),
                dim_fail
            ));
            for c in report.dimension_checks.iter().filter(|c| !c.pass) {
                text.push_str(&format!(
                    "\n  ({},{}): predicted {} computed {}",
                    c.i, c.j, c.predicted, c.computed
                ));
            }
            let gen_fail = report
                .generator_checks
                .iter()
                .filter(|c| !c.annihilates)
                .count();
            text.push_str(&format!(
                "\ngenerator checks: {} generators, {} fail to annihilate",
                report.generator_checks.len(),
                gen_fail
            ));
            for c in report.generator_checks.iter().filter(|c| !c.annihilates) {
                text.push_str(&format!("\n  {} ({})", c.generator, c.family));
            }
            text.push_str("\nideal dimensions by degree:");
            for c in &report.ideal_checks {
                text.push_str(&format!(
                    "\n  {}: ideal {} vs annihilator {} -> {}",
                    c.degree,
                    c.ideal_dim,
                    c.annihilator_dim,
                    if c.pass { "ok" } else { "MISMATCH" }
                ));
            }
            if let Some(n) = &report.note {
                text.push_str(&format!("\nnote: {n}"));
            }
            text.push_str(&format!(
                "\noverall: {}",
                if report.pass { "pass" } else { "fail" }
            ));
            emit(json, serde_json::to_value(&report).unwrap(), text);
        }
        Command::Geometry {
            ring,
            order,
            input,
            seed,
            trials,
            json,
        } => {
            let form = build_form(&ring, order, &input)?;
            let summary = sample_line_family(&form, trials, seed.resolve())?;
            let text = format!(
                "lines sampled: {} (of {} requested, {} attempts)\non hypersurface: {}\nsingular locus contains the alpha-space: {}\nline family parameters: {} (alpha {}, point {})\nconclusive: {}",
                summary.trials,
                trials,
                summary.attempts,
                summary.on_hypersurface,
                summary.singular_locus_check,
                summary.line_family_dimension,
                summary.alpha_parameters,
                summary.point_parameters,
                summary.conclusive,
            );
            emit(json, serde_json::to_value(&summary).unwrap(), text);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let kind = if e.is_parse() { "parse" } else { "contract" };
            eprintln!("error ({kind}): {e}");
            if e.is_parse() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
