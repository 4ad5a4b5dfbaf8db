use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rk4::atlas::atlas;
use rk4::document::{CertificateDocument, OracleDocument};
use rk4::dot::to_dot;
use rk4::io::{parse_instance, print_instance, InstanceFile};
use rk4::sweep::{random_graphs, sweep};
use rk4::CliError;
use rooted_k4::decider::Verdict;
use rooted_k4::enumerate::{connected_graphs, three_connected_planar, triangulations};
use rooted_k4::graph6::{decode_stream, encode};
use rooted_k4::obstructions::Class;
use rooted_k4::{decide, oracle_rooted_minor, Graph};

#[derive(Parser)]
#[command(name = "rk4", version, about = "Rooted K4-minors with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Connected,
    Triangulations,
    Planar3,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance: exit 0 for a minor, 1 for an obstruction.
    Decide {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Check a certificate document against an instance.
    Verify { instance: PathBuf, certificate: PathBuf },
    /// Run the exhaustive search.
    Oracle { path: PathBuf },
    /// Compare decide with the oracle on many graphs.
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random mode: number of graphs.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Exhaustive mode: graph6 file, or `-` for standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Sample obstructions of one class as instances with certificates.
    Atlas {
        #[arg(long)]
        class: Class,
        #[arg(long, default_value_t = 10)]
        size_budget: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write NNN.txt and NNN.json files here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a graph family as graph6, one graph per line.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn load(path: &Path) -> Result<InstanceFile, CliError> {
    Ok(parse_instance(&read(path)?)?)
}

fn summary(file: &InstanceFile, doc: &CertificateDocument) -> String {
    let names = |s: &rooted_k4::VertexSet| s.iter().map(|&v| file.name(v)).collect::<Vec<_>>().join(" ");
    match &doc.verdict {
        Verdict::Yes { witness } => {
            let mut out = String::from("YES\n");
            for (r, s) in &witness.branch_sets {
                out.push_str(&format!("{}: {}\n", file.name(*r), names(s)));
            }
            out
        }
        Verdict::No { obstruction } => {
            let mut out = format!("NO class {}\n", obstruction.class());
            for (t, xs) in &obstruction.plus.cliques {
                out.push_str(&format!("clique on {}: {}\n", names(&t.vertices()), names(xs)));
            }
            out
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Decide { path, json, dot, trace } => {
            let file = load(&path)?;
            let decision = decide(&file.instance)?;
            let yes = decision.is_yes();
            let doc = CertificateDocument::new(&file, decision);
            if json {
                println!("{}", doc.to_json());
            } else if dot {
                print!("{}", to_dot(&file, &doc.verdict));
            } else {
                print!("{}", summary(&file, &doc));
            }
            if trace {
                for l in &doc.trace {
                    eprintln!("trace {l}");
                }
            }
            Ok(if yes { 0 } else { 1 })
        }
        Command::Verify { instance, certificate } => {
            let file = load(&instance)?;
            let doc = CertificateDocument::from_json(&read(&certificate)?)?;
            match doc.verify(&file)? {
                Ok(()) => {
                    println!("verified");
                    Ok(0)
                }
                Err(fault) => {
                    println!("rejected: {fault}");
                    Ok(1)
                }
            }
        }
        Command::Oracle { path } => {
            let file = load(&path)?;
            let g = file.instance.graph();
            let w = oracle_rooted_minor(g, &file.instance.roots())?;
            let present = w.is_some();
            println!("{}", serde_json::to_string_pretty(&OracleDocument::new(&file, w)).expect("serialises"));
            Ok(if present { 0 } else { 1 })
        }
        Command::Sweep { max_n, mode, seed, count, input } => {
            let graphs: Vec<Graph> = match (mode, input) {
                (Mode::Exhaustive, Some(p)) => decode_stream(&read(&p)?)?
                    .into_iter()
                    .filter(|g| g.vertex_count() <= max_n)
                    .collect(),
                (Mode::Exhaustive, None) => {
                    let mut all = Vec::new();
                    for n in 4..=max_n {
                        all.extend(connected_graphs(n)?);
                    }
                    all
                }
                (Mode::Random, _) => random_graphs(max_n, count, seed)?,
            };
            let report = sweep(&graphs)?;
            print!("{}", report.render());
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Atlas { class, size_budget, count, seed, out } => {
            let entries = atlas(class, size_budget, count, seed)?;
            match out {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    for (i, e) in entries.iter().enumerate() {
                        fs::write(dir.join(format!("{class}-{i:03}.txt")), print_instance(&e.instance))?;
                        fs::write(dir.join(format!("{class}-{i:03}.json")), e.certificate.to_json() + "\n")?;
                    }
                }
                None => {
                    for e in &entries {
                        let line = serde_json::json!({
                            "instance": print_instance(&e.instance),
                            "certificate": e.certificate,
                        });
                        println!("{line}");
                    }
                }
            }
            Ok(0)
        }
        Command::Generate { family, n } => {
            let graphs = match family {
                Family::Connected => connected_graphs(n)?,
                Family::Triangulations => triangulations(n)?,
                Family::Planar3 => three_connected_planar(n)?,
            };
            for g in graphs {
                println!("{}", encode(&g));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("rk4: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
