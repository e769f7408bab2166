use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use coregular::diffr::{different, dsp_check, transfer_image_profile};
use coregular::harness::{
    analyze, degree_bound, different_view, dsp_view, paper_example_spec, parse_spec,
    render_census_text, render_json, render_text, transfer_view, verify_theorem, AnalysisOptions,
    CensusConfig, EnumerationMode, GroupSpec,
};
use coregular::invar::{algebra_generators, InvariantTable};
use coregular::matrixgroup::DEFAULT_ELEMENT_CAP;
use coregular::Error;

#[derive(Parser)]
#[command(name = "coregular", version, about = "Coregularity of abelian reflection groups over GF(p)")]
struct Cli {
    /// Degree bound for invariant, ideal and transfer computations.
    #[arg(long, global = true)]
    degree_bound: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Largest group order accepted during closure.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    element_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for a group given as JSON.
    Analyze { file: PathBuf },
    /// Hyperplane exponents and the different.
    Different { file: PathBuf },
    /// Direct summand property test.
    Dsp { file: PathBuf },
    /// Invariant dimensions and algebra generators.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Ideal of k[V]^G generated by the image of the transfer.
    TransferImage { file: PathBuf },
    /// Checks the coregularity criterion over a census of abelian groups.
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        sampled: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Random non-reflection cyclic groups added to the census.
        #[arg(long, default_value_t = 8)]
        extra: usize,
    },
    /// Report for the shipped worked example.
    PaperExample,
}

enum Failure {
    Input(String),
    Violation,
    Fault(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_fault() {
            Failure::Fault(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn load(path: &PathBuf) -> Result<GroupSpec, Failure> {
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_spec(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(output: Output, value: &T, text: impl FnOnce() -> String) {
    match output {
        Output::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializes")),
        Output::Text => print!("{}", text()),
    }
}

fn abelian_group(spec: &GroupSpec, cap: usize) -> Result<coregular::matrixgroup::Group, Failure> {
    let g = spec.to_group(cap)?;
    if !g.is_abelian() {
        return Err(Failure::Input(format!("{}: {}", spec.name, Error::NotAbelian)));
    }
    Ok(g)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let opts = AnalysisOptions {
        degree_bound: cli.degree_bound,
        element_cap: cli.element_cap,
        ..AnalysisOptions::default()
    };
    let out = cli.output;
    match cli.command {
        Command::Analyze { file } => report(&load(&file)?, &opts, out),
        Command::PaperExample => report(&paper_example_spec(), &opts, out),
        Command::Different { file } => {
            let g = abelian_group(&load(&file)?, opts.element_cap)?;
            let v = different_view(&different(&g, None)?);
            emit(out, &v, || {
                let mut s = String::new();
                for h in &v.hyperplanes {
                    s.push_str(&format!(
                        "{}: {:?}, |G_H| = {}, a_H = {}\n",
                        h.form, h.kind, h.stabilizer_order, h.exponent
                    ));
                }
                s.push_str(&format!("theta = {} (degree {})\n", v.theta, v.degree));
                s
            });
            Ok(())
        }
        Command::Dsp { file } => {
            let g = abelian_group(&load(&file)?, opts.element_cap)?;
            let d = different(&g, None)?;
            let v = dsp_view(&g, &d, &dsp_check(&g, &d)?)?;
            emit(out, &v, || {
                let mut s = format!("direct summand property: {}\n", if v.holds { "yes" } else { "no" });
                if let Some(w) = &v.witness {
                    s.push_str(&format!("witness {w}\n"));
                }
                s
            });
            Ok(())
        }
        Command::Invariants { file, max_degree } => {
            let g = load(&file)?.to_group(opts.element_cap)?;
            let table = InvariantTable::compute(&g, max_degree);
            let algebra = algebra_generators(&table, max_degree);
            #[derive(Serialize)]
            struct View {
                max_degree: usize,
                hilbert_series: Vec<usize>,
                generator_degrees: Vec<usize>,
                generators: Vec<String>,
            }
            let v = View {
                max_degree,
                hilbert_series: table.hilbert_series(),
                generator_degrees: algebra.degrees(),
                generators: algebra.polynomials().iter().map(|p| p.to_string()).collect(),
            };
            emit(out, &v, || {
                let mut s = format!("dims through degree {}: {:?}\n", v.max_degree, v.hilbert_series);
                for (d, p) in v.generator_degrees.iter().zip(&v.generators) {
                    s.push_str(&format!("degree {d}: {p}\n"));
                }
                s
            });
            Ok(())
        }
        Command::TransferImage { file } => {
            let g = abelian_group(&load(&file)?, opts.element_cap)?;
            let b = degree_bound(&g, &opts).generation;
            let table = InvariantTable::compute(&g, b);
            let algebra = algebra_generators(&table, b);
            let v = transfer_view(&transfer_image_profile(&g, &table, &algebra, b));
            emit(out, &v, || {
                format!(
                    "generators: {}\ndegrees: {:?}\nprincipal: {}\n",
                    v.ideal.generators.join(", "),
                    v.ideal.generator_degrees,
                    if v.principal { "yes" } else { "no" }
                )
            });
            Ok(())
        }
        Command::VerifyTheorem {
            n,
            p,
            max_order,
            sampled,
            seed,
            count,
            extra,
        } => {
            let cfg = CensusConfig {
                n,
                p,
                max_order,
                mode: if sampled {
                    EnumerationMode::Sampled { seed, count }
                } else {
                    EnumerationMode::Exhaustive
                },
                extra_groups: extra,
                analysis: opts,
            };
            let census = verify_theorem(&cfg)?;
            emit(out, &census, || render_census_text(&census));
            if census.violations.is_empty() {
                Ok(())
            } else {
                Err(Failure::Violation)
            }
        }
    }
}

fn report(spec: &GroupSpec, opts: &AnalysisOptions, out: Output) -> Result<(), Failure> {
    let r = analyze(spec, opts)?;
    for (stage, t) in &r.timings {
        eprintln!("{stage}: {:.3}s", t.as_secs_f64());
    }
    match out {
        Output::Json => print!("{}", render_json(&r)),
        Output::Text => print!("{}", render_text(&r)),
    }
    match &r.coregularity {
        Some(c) if !c.criterion_consistent => Err(Failure::Violation),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violation) => {
            eprintln!("criterion violated");
            ExitCode::from(2)
        }
        Err(Failure::Fault(msg)) => {
            eprintln!("internal fault: {msg}");
            ExitCode::from(3)
        }
    }
}
