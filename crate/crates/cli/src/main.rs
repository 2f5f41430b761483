//! Command-line front end: polygon generation, visibility graphs, angle
//! measurements, reconstruction, embedding, labeled-graph analysis, agent
//! simulation, ambiguity checks, and SVG rendering.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad input data), 2 on
//! usage errors.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use polyvis::agent::{
    ambiguity_report, boundary_tour_observations, simulate_moves, AgentEnv, EquivalenceMode,
    Observation, SensorConfig, SizeInfo,
};
use polyvis::gen::generate_polygon;
use polyvis::geom::{SimplePolygon, VisibilityGraph};
use polyvis::graph::{angle_type_labeling, basic_labeling, lookback_labeling, minimum_base};
use polyvis::io;
use polyvis::recon::{embed, reconstruct_from_angles, reconstruct_unknown_n};
use polyvis::structure::{
    ear_by_label_pattern, find_clique_class, infer_n_from_base, pentagon_property,
    resolve_clique_vertex_arcs, ClassStructure,
};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "polyvis", version, about = "Visibility graphs of simple polygons: compute, reconstruct from angle data, explore with labeled graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Labeling {
    Basic,
    Lookback,
    AngleType,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random simple polygon in general position.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Output polygon file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the visibility graph of a polygon.
    Visgraph {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the ordered list of angle measurements of a polygon.
    Measure {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild the visibility graph from a measurements file.
    Reconstruct {
        #[arg(long)]
        measurements: PathBuf,
        /// Vertex count, when known a priori.
        #[arg(long, conflicts_with = "infer_n")]
        n: Option<usize>,
        /// Infer the vertex count from the measurement stream.
        #[arg(long)]
        infer_n: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Embed a reconstructed graph in the plane (v0 at the origin, v1 at
    /// (1,0)); emits one "x y" line per vertex after a count header.
    Embed {
        #[arg(long)]
        visgraph: PathBuf,
        #[arg(long)]
        measurements: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the minimum base graph of a sensor labeling.
    Minbase {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, value_enum)]
        labeling: Labeling,
        /// Where to write the base graph (stdout when omitted); the class
        /// summary goes to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Step an agent through a fixed move sequence and log the trace.
    Simulate {
        #[arg(long)]
        polygon: PathBuf,
        /// Comma-separated sensor list: angles, angle-types, inner-angle,
        /// compass, cvv, distances, lookback.
        #[arg(long, default_value = "")]
        sensors: String,
        /// Comma-separated 1-based move slots, e.g. "1,3,2".
        #[arg(long, conflicts_with = "tour")]
        moves: Option<String>,
        /// Flag one vertex as recognizable.
        #[arg(long)]
        marked: Option<usize>,
        /// Take a full boundary tour instead of explicit moves.
        #[arg(long)]
        tour: bool,
    },
    /// Analyze the class structure of a labeled polygon.
    Structure {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, value_enum, default_value = "lookback")]
        labeling: Labeling,
    },
    /// Compare two polygons for observation equivalence and report the
    /// ambiguity verdict.
    CheckAmbiguity {
        #[arg(long)]
        p1: PathBuf,
        #[arg(long)]
        p2: PathBuf,
        /// Sensor bundle: a comma-separated sensor list, or one of the
        /// special bundles "unordered-angles" / "angles-missing-two".
        #[arg(long, default_value = "")]
        sensors: String,
        /// Compare under free movement instead of a boundary tour.
        #[arg(long)]
        free_movement: bool,
        /// Move budget for free-movement comparison.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Render a polygon (and optionally its graph and class colors) as SVG.
    Render {
        #[arg(long)]
        polygon: PathBuf,
        /// Draw the visibility chords.
        #[arg(long)]
        visgraph: bool,
        /// Color vertices by minimum-base class of this labeling.
        #[arg(long, value_enum)]
        classes: Option<Labeling>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn domain(e: impl std::fmt::Display) -> CliError {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Domain(format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_polygon(path: &Path) -> Result<SimplePolygon, CliError> {
    io::read_polygon(&read_file(path)?).map_err(CliError::domain)
}

fn parse_sensors(spec: &str) -> Result<SensorConfig, CliError> {
    let mut config = SensorConfig::basic();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token {
            "basic" => {}
            "angles" => config.angles = true,
            "angle-types" | "angletypes" => config.angle_types = true,
            "inner-angle" | "inner" => config.inner_angle = true,
            "compass" => config.compass = true,
            "cvv" => config.cvv = true,
            "distances" => config.distances = true,
            "lookback" | "look-back" => config.look_back = true,
            other => {
                return Err(CliError::Usage(format!("unknown sensor {other:?}")));
            }
        }
    }
    Ok(config)
}

fn labeled_graph_of(
    polygon: &SimplePolygon,
    visgraph: &VisibilityGraph,
    labeling: Labeling,
) -> polyvis::graph::LabeledDigraph {
    match labeling {
        Labeling::Basic => basic_labeling(visgraph),
        Labeling::Lookback => lookback_labeling(visgraph),
        Labeling::AngleType => angle_type_labeling(visgraph, polygon),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen { n, seed, out } => {
            let polygon = generate_polygon(n, seed).map_err(CliError::domain)?;
            emit(out.as_deref(), &io::write_polygon(&polygon))
        }
        Command::Visgraph { polygon, out } => {
            let p = load_polygon(&polygon)?;
            let g = VisibilityGraph::build(&p).map_err(CliError::domain)?;
            emit(out.as_deref(), &io::write_visibility_graph(&g))
        }
        Command::Measure { polygon, out } => {
            let p = load_polygon(&polygon)?;
            let g = VisibilityGraph::build(&p).map_err(CliError::domain)?;
            emit(out.as_deref(), &io::write_measurements(&polyvis::geom::measure(&p, &g)))
        }
        Command::Reconstruct {
            measurements,
            n,
            infer_n,
            out,
        } => {
            let m = io::read_measurements(&read_file(&measurements)?).map_err(CliError::domain)?;
            let graph = match (n, infer_n) {
                (Some(n), false) => reconstruct_from_angles(&m, n).map_err(CliError::domain)?,
                (None, true) => {
                    let mut feed = m.iter().cloned().collect::<Vec<_>>().into_iter();
                    let (inferred, graph) =
                        reconstruct_unknown_n(&mut || feed.next()).map_err(CliError::domain)?;
                    if feed.next().is_some() {
                        return Err(CliError::Domain(format!(
                            "measurements continue past the inferred size {inferred}"
                        )));
                    }
                    eprintln!("inferred n = {inferred}");
                    graph
                }
                _ => {
                    return Err(CliError::Usage(
                        "exactly one of --n and --infer-n is required".into(),
                    ))
                }
            };
            emit(out.as_deref(), &io::write_visibility_graph(&graph))
        }
        Command::Embed {
            visgraph,
            measurements,
            out,
        } => {
            let g = io::read_visibility_graph(&read_file(&visgraph)?).map_err(CliError::domain)?;
            let m = io::read_measurements(&read_file(&measurements)?).map_err(CliError::domain)?;
            let e = embed(&g, &m).map_err(CliError::domain)?;
            let mut text = format!("{}\n", e.len());
            for (x, y) in e.coords() {
                let _ = writeln!(text, "{x} {y}");
            }
            emit(out.as_deref(), &text)
        }
        Command::Minbase {
            polygon,
            labeling,
            out,
        } => {
            let p = load_polygon(&polygon)?;
            let g = VisibilityGraph::build(&p).map_err(CliError::domain)?;
            let labeled = labeled_graph_of(&p, &g, labeling);
            let mb = minimum_base(&labeled).map_err(CliError::domain)?;
            let classes: Vec<String> = mb.class_of.iter().map(|c| c.to_string()).collect();
            eprintln!("k = {}", mb.k);
            eprintln!("class_of = {}", classes.join(" "));
            emit(out.as_deref(), &io::write_labeled_digraph(&mb.base))
        }
        Command::Simulate {
            polygon,
            sensors,
            moves,
            marked,
            tour,
        } => {
            let p = load_polygon(&polygon)?;
            let config = SensorConfig {
                knowledge: SizeInfo::Exact(p.len()),
                ..parse_sensors(&sensors)?
            };
            let mut env = AgentEnv::new(p, config).map_err(CliError::domain)?;
            if let Some(v) = marked {
                env = env.with_marked_vertex(v);
            }
            if tour {
                for obs in boundary_tour_observations(&mut env) {
                    println!("{}", observation_line(&obs));
                }
                return Ok(());
            }
            let Some(moves) = moves else {
                return Err(CliError::Usage("one of --moves and --tour is required".into()));
            };
            let moves: Vec<usize> = moves
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("bad move slot {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            let (trace, last) = simulate_moves(&mut env, &moves).map_err(CliError::domain)?;
            for (obs, slot) in &trace {
                println!("{}", observation_line(obs));
                println!("move {slot}");
            }
            println!("{}", observation_line(&last));
            Ok(())
        }
        Command::Structure { polygon, labeling } => {
            let p = load_polygon(&polygon)?;
            let n = p.len();
            let g = VisibilityGraph::build(&p).map_err(CliError::domain)?;
            let labeled = labeled_graph_of(&p, &g, labeling);
            let mb = minimum_base(&labeled).map_err(CliError::domain)?;
            let st = ClassStructure::from_base(&mb).map_err(CliError::domain)?;
            println!("k {}", mb.k);
            println!(
                "class sizes {}",
                st.members
                    .iter()
                    .map(|m| m.len().to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!(
                "pentagon {}",
                if pentagon_property(&g, &mb) { "holds" } else { "fails" }
            );
            if matches!(labeling, Labeling::Lookback) {
                let ears: Vec<String> = (0..n)
                    .filter(|&i| ear_by_label_pattern(&labeled, i))
                    .map(|i| i.to_string())
                    .collect();
                println!("ears by label pattern {}", ears.join(" "));
            }
            let clique = find_clique_class(&mb, n).map_err(CliError::domain)?;
            println!("clique class {clique} members {:?}", st.members[clique]);
            println!("inferred n {}", infer_n_from_base(&mb));
            let member = st.members[clique][0];
            let res =
                resolve_clique_vertex_arcs(&mb, &st, n, member).map_err(CliError::domain)?;
            for (slot, target) in res.targets.iter().enumerate() {
                println!("resolve v{member} slot {} -> v{target}", slot + 1);
            }
            Ok(())
        }
        Command::CheckAmbiguity {
            p1,
            p2,
            sensors,
            free_movement,
            depth,
        } => {
            let a = load_polygon(&p1)?;
            let b = load_polygon(&p2)?;
            let mode = match sensors.trim() {
                "unordered-angles" => EquivalenceMode::UnorderedAngles,
                "angles-missing-two" => EquivalenceMode::AnglesMissingTwo,
                list => {
                    let config = parse_sensors(list)?;
                    if free_movement {
                        let budget = depth.unwrap_or(2 * a.len() * b.len());
                        EquivalenceMode::FreeMovement(config, budget)
                    } else {
                        EquivalenceMode::BoundaryTour(config)
                    }
                }
            };
            let report = ambiguity_report(&a, &b, mode);
            println!("observationally equivalent: {}", report.equivalent);
            println!("graphs isomorphic: {}", report.graphs_isomorphic);
            println!("geometry congruent: {}", report.geometry_congruent);
            println!(
                "verdict: {}",
                if report.ambiguous { "AMBIGUOUS" } else { "UNAMBIGUOUS" }
            );
            Ok(())
        }
        Command::Render {
            polygon,
            visgraph,
            classes,
            out,
        } => {
            let p = load_polygon(&polygon)?;
            let g = VisibilityGraph::build(&p).map_err(CliError::domain)?;
            let class_of = match classes {
                Some(labeling) => {
                    let labeled = labeled_graph_of(&p, &g, labeling);
                    Some(minimum_base(&labeled).map_err(CliError::domain)?.class_of)
                }
                None => None,
            };
            let svg = render::render_svg(&p, visgraph.then_some(&g), class_of.as_deref());
            emit(out.as_deref(), &svg)
        }
    }
}

fn observation_line(obs: &Observation) -> String {
    let mut line = format!("at d={}", obs.degree);
    if let Some(angles) = &obs.angles {
        let _ = write!(line, " angles={}", join_floats(angles));
    }
    if let Some(types) = &obs.angle_types {
        let rows: Vec<String> = types.iter().map(|bits| join_bits(bits)).collect();
        let _ = write!(line, " types={}", rows.join("|"));
    }
    if let Some(inner) = obs.inner_angle {
        let _ = write!(line, " inner={inner}");
    }
    if let Some(compass) = &obs.compass {
        let _ = write!(line, " compass={}", join_floats(compass));
    }
    if let Some(cvv) = &obs.cvv {
        let _ = write!(line, " cvv={}", join_bits(cvv));
    }
    if let Some(distances) = &obs.distances {
        let _ = write!(line, " distances={}", join_floats(distances));
    }
    if let Some(back) = obs.look_back {
        let _ = write!(line, " lookback={back}");
    }
    if let Some(marked) = obs.at_marked {
        let _ = write!(line, " marked={}", u8::from(marked));
    }
    line
}

fn join_floats(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn join_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}
