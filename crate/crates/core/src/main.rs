use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ohgraph::builders::{adjacency_matrix, degree_matrix, dual_laplacian, incidence_matrix, laplacian};
use ohgraph::io::{parse_instance, parse_theta, serialize_instance, serialize_matrix, MatrixFormat};
use ohgraph::random::{random_instance, RandomParams};
use ohgraph::verify::{family_instance, run_check, verify_family, verify_instance, Check, FamilyOptions, VerificationReport, VerifyOptions};
use ohgraph::walk::{walk_sign, AnchorKind, WalkEngine, WalkLimits};
use ohgraph::{OrientedHypergraph, OrientedSignedGraph};

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "ohg", version, about = "Matrices and signed walks of oriented hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an instance file against the hypergraph invariants.
    Validate { instance: PathBuf },
    /// Print one of the standard matrices.
    Matrix {
        kind: MatrixKind,
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the incidence dual as an instance file.
    Dual { instance: PathBuf },
    /// Apply a vertex switching function read from a JSON file.
    Switch {
        instance: PathBuf,
        #[arg(long)]
        theta: PathBuf,
    },
    /// List the walks between two anchors with exactly `n` incidences.
    Walks {
        instance: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Number of incidences; the walk length is n/2.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weak: bool,
        #[arg(long, default_value_t = WalkLimits::default().max_walks)]
        max_walks: u64,
    },
    /// Print a (weak) walk matrix of net signed walk counts.
    WalkMatrix {
        instance: PathBuf,
        #[arg(long, value_enum)]
        rows: AnchorSet,
        #[arg(long, value_enum)]
        cols: AnchorSet,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weak: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the line graph of a simple 2-uniform instance as an instance file.
    Linegraph { instance: PathBuf },
    /// Generate a seeded random instance.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        vertices: usize,
        #[arg(long, default_value_t = 4)]
        edges: usize,
        #[arg(long, default_value_t = 3)]
        max_edge_size: usize,
        /// Probability that an incidence repeats a vertex already in its edge;
        /// a positive value produces non-simple instances.
        #[arg(long, default_value_t = 0.0)]
        non_simple_rate: f64,
    },
    /// Run the identity checks on an instance or on a seeded random family.
    Verify {
        /// Instance file; omit to verify a seeded random family.
        instance: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Re-run a single trial of the family.
        #[arg(long)]
        trial: Option<usize>,
        /// Run only the named check.
        #[arg(long)]
        check: Option<String>,
        /// Largest incidence count for walk enumeration.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        switch_trials: usize,
        #[arg(long, default_value_t = WalkLimits::default().max_walks)]
        max_walks: u64,
        /// Perturb the Laplacian to confirm the harness reports failures.
        #[arg(long)]
        self_test: bool,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Print only failures and the summary line.
        #[arg(long)]
        quiet: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Incidence,
    Adjacency,
    Degree,
    Laplacian,
    DualLaplacian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for MatrixFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => MatrixFormat::Csv,
            Format::Json => MatrixFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AnchorSet {
    #[value(name = "V")]
    V,
    #[value(name = "E")]
    E,
}

impl From<AnchorSet> for AnchorKind {
    fn from(a: AnchorSet) -> Self {
        match a {
            AnchorSet::V => AnchorKind::Vertex,
            AnchorSet::E => AnchorKind::Edge,
        }
    }
}

enum Failure {
    Input(String),
    Failed,
}

fn input<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(input("stdin"))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(input(&path.display().to_string()))
}

fn load(path: &Path) -> Result<OrientedHypergraph, Failure> {
    let text = read_text(path)?;
    parse_instance(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { instance } => {
            let text = read_text(&instance)?;
            match parse_instance(&text) {
                Ok(g) => {
                    println!("valid: {}", g.summary());
                    Ok(())
                }
                Err(ohgraph::io::ParseError::Invalid(report)) => {
                    for v in &report.violations {
                        println!("{v}");
                    }
                    Err(Failure::Failed)
                }
                Err(e) => Err(Failure::Input(format!("{}: {e}", instance.display()))),
            }
        }
        Command::Matrix { kind, instance, format } => {
            let g = load(&instance)?;
            let m = match kind {
                MatrixKind::Incidence => incidence_matrix(&g),
                MatrixKind::Adjacency => adjacency_matrix(&g),
                MatrixKind::Degree => degree_matrix(&g),
                MatrixKind::Laplacian => laplacian(&g),
                MatrixKind::DualLaplacian => dual_laplacian(&g),
            };
            print!("{}", serialize_matrix(&m, format.into()));
            Ok(())
        }
        Command::Dual { instance } => {
            print!("{}", serialize_instance(&load(&instance)?.incidence_dual()));
            Ok(())
        }
        Command::Switch { instance, theta } => {
            let g = load(&instance)?;
            let theta = parse_theta(&read_text(&theta)?).map_err(input("theta"))?;
            let switched = g.switch(&theta).map_err(input("theta"))?;
            print!("{}", serialize_instance(&switched));
            Ok(())
        }
        Command::Walks {
            instance,
            from,
            to,
            n,
            weak,
            max_walks,
        } => {
            let g = load(&instance)?;
            let limits = WalkLimits {
                max_walks,
                ..WalkLimits::default()
            };
            let engine = WalkEngine::with_limits(&g, limits);
            let walks = engine.enumerate_walks(&from, &to, n, weak).map_err(input("walks"))?;
            for w in &walks {
                let sign = walk_sign(&g, w).expect("enumerated walks are well formed");
                println!("{sign}  {}", w.display(&g));
            }
            let counts = engine.walk_counts(&from, &to, n, weak).map_err(input("walks"))?;
            println!(
                "total={} positive={} negative={} net={}",
                counts.total, counts.positive, counts.negative, counts.signed_net
            );
            Ok(())
        }
        Command::WalkMatrix {
            instance,
            rows,
            cols,
            n,
            weak,
            format,
        } => {
            let g = load(&instance)?;
            let engine = WalkEngine::new(&g);
            let m = if weak {
                engine.weak_walk_matrix(rows.into(), cols.into(), n)
            } else {
                engine.walk_matrix(rows.into(), cols.into(), n)
            }
            .map_err(input("walk-matrix"))?;
            print!("{}", serialize_matrix(&m, format.into()));
            Ok(())
        }
        Command::Linegraph { instance } => {
            let g = load(&instance)?;
            let s = OrientedSignedGraph::from_hypergraph(&g).map_err(input("linegraph"))?;
            let line = s.line_graph().map_err(input("linegraph"))?;
            print!("{}", serialize_instance(&line.to_hypergraph()));
            Ok(())
        }
        Command::Random {
            seed,
            vertices,
            edges,
            max_edge_size,
            non_simple_rate,
        } => {
            let params = RandomParams {
                n_vertices: vertices,
                n_edges: edges,
                max_edge_size,
                simple: non_simple_rate == 0.0,
                non_simple_rate,
            };
            let g = random_instance(seed, &params).map_err(input("random"))?;
            print!("{}", serialize_instance(&g));
            Ok(())
        }
        Command::Verify {
            instance,
            seed,
            trials,
            trial,
            check,
            max_n,
            switch_trials,
            max_walks,
            self_test,
            json,
            quiet,
        } => {
            let options = VerifyOptions {
                max_n,
                switch_trials,
                theta_seed: seed,
                limits: WalkLimits {
                    max_incidences: max_n.max(WalkLimits::default().max_incidences),
                    max_walks,
                },
                corrupt_laplacian: self_test,
            };
            let only = match check.as_deref() {
                Some(name) => Some(Check::from_name(name).ok_or_else(|| {
                    let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                    Failure::Input(format!("unknown check {name:?}; expected one of {}", names.join(", ")))
                })?),
                None => None,
            };
            let family = FamilyOptions {
                seed,
                trials,
                ..FamilyOptions::default()
            };
            let mut report = match (&instance, trial) {
                (Some(path), _) => {
                    let g = load(path)?;
                    match only {
                        Some(c) => single(run_check(c, &g, &options, 0, None)),
                        None => verify_instance(&g, &options),
                    }
                }
                (None, Some(t)) => {
                    let (g, s) = family_instance(&family, t);
                    match only {
                        Some(c) => single(run_check(c, &g, &options, t, Some(s))),
                        None => {
                            let mut r = verify_instance(&g, &options);
                            for entry in &mut r.results {
                                entry.trial = t;
                                entry.instance_seed = Some(s);
                            }
                            r
                        }
                    }
                }
                (None, None) => verify_family(&family, &options),
            };
            if let Some(c) = only {
                report.results.retain(|r| r.check == c.name());
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else if quiet {
                for r in report.failures() {
                    println!("{r}");
                }
                println!("{}", report.summary());
            } else {
                println!("{report}");
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Failed)
            }
        }
    }
}

fn single(result: ohgraph::verify::CheckResult) -> VerificationReport {
    let incomplete = matches!(result.status, ohgraph::verify::CheckStatus::Incomplete(_));
    VerificationReport {
        results: vec![result],
        incomplete,
    }
}
