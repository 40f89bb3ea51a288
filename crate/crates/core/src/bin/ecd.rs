use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ecdual::ecgraph::{emit_dot, parse_graph, serialize_graph};
use ecdual::families::{
    make_dual, make_path, signed_label, DualId, DualVariant, PathId, PathVariant,
};
use ecdual::harness::{self, CampaignReport};
use ecdual::homsolver::{categorical_product, find_homomorphism, hom_equivalent};
use ecdual::peel::{solve, Certificate, SolveResult};
use ecdual::EdgeColouredGraph;

const EXIT_NO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ecd",
    about = "Alternating-path duality for 2-edge-coloured graphs"
)]
struct Cli {
    /// Emit campaign reports as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a path or dual in the text graph format
    #[command(subcommand)]
    Family(Family),
    /// Map a graph to its least dual, or find a closed alternating walk
    Solve { graph: PathBuf },
    /// Search for a homomorphism G -> H
    Hom { g: PathBuf, h: PathBuf },
    /// Categorical product of two graphs
    Product { g: PathBuf, h: PathBuf },
    /// Test homomorphic equivalence
    Equiv { g: PathBuf, h: PathBuf },
    /// Render a graph as DOT, optionally annotated with its map to the least dual
    Dot {
        graph: PathBuf,
        #[arg(long)]
        solved: bool,
    },
    /// Verification campaigns
    #[command(subcommand)]
    Check(Check),
    /// Time the solver on long alternating paths
    Bench {
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "1000,10000,100000,1000000"
        )]
        sizes: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum Family {
    Path {
        k: usize,
        variant: PathVariant,
    },
    Dual {
        k: usize,
        variant: Option<PathVariant>,
    },
}

#[derive(Subcommand)]
enum Check {
    Exhaustive {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        k: usize,
    },
    Random {
        #[arg(long, default_value_t = 10000)]
        count: usize,
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value_t = 0.02)]
        pb: f64,
        #[arg(long, default_value_t = 0.02)]
        pr: f64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    Corollary5 {
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

type BoxError = Box<dyn std::error::Error>;

fn read_graph(path: &PathBuf) -> Result<EdgeColouredGraph, BoxError> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn print_map(domain: &EdgeColouredGraph, codomain: &EdgeColouredGraph, image: &[usize]) {
    for (v, &w) in image.iter().enumerate() {
        println!(
            "{} -> {}",
            domain.display_label(v),
            codomain.display_label(w)
        );
    }
}

fn print_report(report: &CampaignReport, json: bool) -> ExitCode {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn run(cli: Cli) -> Result<ExitCode, BoxError> {
    let code = match cli.command {
        Command::Family(Family::Path { k, variant }) => {
            print!("{}", serialize_graph(&make_path(PathId::new(k, variant)?)));
            ExitCode::SUCCESS
        }
        Command::Family(Family::Dual { k, variant }) => {
            let variant = match variant {
                None => DualVariant::Plain,
                Some(PathVariant::B) => DualVariant::B,
                Some(PathVariant::R) => DualVariant::R,
            };
            print!("{}", serialize_graph(&make_dual(DualId::new(k, variant)?)));
            ExitCode::SUCCESS
        }
        Command::Solve { graph } => {
            let g = read_graph(&graph)?;
            match solve(&g) {
                SolveResult::Mapped {
                    dual,
                    map,
                    certificate,
                } => {
                    println!("MAP {dual}");
                    for (v, &w) in map.as_slice().iter().enumerate() {
                        println!("{} -> {}", g.display_label(v), signed_label(dual.k(), w));
                    }
                    for m in certificate.maps() {
                        let name = m
                            .path_id()
                            .map_or_else(|| "F_0".to_owned(), |p| p.to_string());
                        println!("CERT {name}");
                        print_map(&m.path(), &g, m.map.as_slice());
                    }
                    if certificate == Certificate::Empty {
                        println!("CERT none");
                    }
                    ExitCode::SUCCESS
                }
                SolveResult::NoMap(walk) => {
                    println!("NOMAP");
                    for &(u, v, c) in &walk.edges {
                        println!("{} {} {c}", g.display_label(u), g.display_label(v));
                    }
                    ExitCode::from(EXIT_NO)
                }
            }
        }
        Command::Hom { g, h } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            match find_homomorphism(&g, &h).0 {
                Some(f) => {
                    println!("HOM");
                    print_map(&g, &h, f.as_slice());
                    ExitCode::SUCCESS
                }
                None => {
                    println!("NOHOM");
                    ExitCode::from(EXIT_NO)
                }
            }
        }
        Command::Product { g, h } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            print!("{}", serialize_graph(&categorical_product(&g, &h)));
            ExitCode::SUCCESS
        }
        Command::Equiv { g, h } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            if hom_equivalent(&g, &h) {
                println!("EQUIVALENT");
                ExitCode::SUCCESS
            } else {
                println!("NOT EQUIVALENT");
                ExitCode::from(EXIT_NO)
            }
        }
        Command::Dot { graph, solved } => {
            let g = read_graph(&graph)?;
            let target = match (solved, solve(&g)) {
                (true, SolveResult::Mapped { dual, map, .. }) => Some((map, make_dual(dual))),
                _ => None,
            };
            let annotation = target.as_ref().map(|(m, d)| (m, d));
            print!("{}", emit_dot(&g, annotation)?);
            ExitCode::SUCCESS
        }
        Command::Check(Check::Exhaustive { n, k }) => {
            print_report(&harness::check_duality_exhaustive(n, k)?, cli.json)
        }
        Command::Check(Check::Random {
            count,
            n,
            pb,
            pr,
            seed,
        }) => print_report(&harness::audit_random(count, n, pb, pr, seed)?, cli.json),
        Command::Check(Check::Corollary5 { k }) => {
            print_report(&harness::check_corollary5(k)?, cli.json)
        }
        Command::Bench { sizes } => print_report(&harness::bench_linear(&sizes)?, cli.json),
    };
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
