//! mpm: multi-path matroid computations from the command line.
//!
//! Exit status: 0 on success, 1 for input errors, 2 for operations that are
//! well-formed but infeasible, 3 when a brute-force size guard is exceeded.

mod input;

use std::fmt;
use std::time::Instant;

use clap::{Arg, ArgAction, ArgMatches, Command};
use num_bigint::BigInt;

use mpm::activities::{
    activities_of_basis, basis_activities, tutte_of_diagram_via_activities, tutte_via_activities,
};
use mpm::oracle::{tutte_from_bases, ENUMERATION_GUARD};
use mpm::polynomial::{parse_eval_point, render_tutte};
use mpm::tutte::{tutte, tutte_of_diagram, ComputationGraph};
use mpm::{fixtures, BivariatePolynomial, Diagram, Element, Error, SigmaIntervalSystem};

use input::{emit_presentation, parse_input, InputDocument};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Infeasible(String),
    Guard(String),
}

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    fn infeasible(msg: impl Into<String>) -> Self {
        CliError::Infeasible(msg.into())
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Infeasible(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Infeasible(m) | CliError::Guard(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceGuard { .. } => CliError::Guard(e.to_string()),
            Error::NotABasis(_) => CliError::Infeasible(e.to_string()),
            Error::EmptyGroundSet => {
                CliError::Infeasible("operation would empty the ground set".into())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

fn cli() -> Command {
    let file = Arg::new("file").required(true).value_name("FILE");
    Command::new("mpm")
        .about("multi-path matroids: interval presentations, diagrams, Tutte polynomials")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .subcommand(
            Command::new("check")
                .about("validate an input file and report its structural flags")
                .arg(file.clone()),
        )
        .subcommand(
            Command::new("tutte")
                .about("compute the Tutte polynomial")
                .arg(file.clone())
                .arg(
                    Arg::new("algo")
                        .long("algo")
                        .value_parser(["dp", "activities", "bruteforce"])
                        .default_value("dp"),
                )
                .arg(
                    Arg::new("eval")
                        .long("eval")
                        .num_args(2)
                        .value_names(["X", "Y"])
                        .allow_hyphen_values(true)
                        .help("print the exact integer evaluation at (X, Y)"),
                ),
        )
        .subcommand(
            Command::new("bases")
                .about("list the bases, or count them without enumeration")
                .arg(file.clone())
                .arg(Arg::new("count").long("count").action(ArgAction::SetTrue)),
        )
        .subcommand(
            Command::new("dual")
                .about("emit the reflected diagram, which presents the dual matroid")
                .arg(file.clone()),
        )
        .subcommand(
            Command::new("minor")
                .about("apply deletions and contractions left to right")
                .arg(file.clone())
                .arg(
                    Arg::new("delete")
                        .long("delete")
                        .value_name("E")
                        .action(ArgAction::Append)
                        .value_parser(clap::value_parser!(u32)),
                )
                .arg(
                    Arg::new("contract")
                        .long("contract")
                        .value_name("E")
                        .action(ArgAction::Append)
                        .value_parser(clap::value_parser!(u32)),
                ),
        )
        .subcommand(
            Command::new("activities")
                .about("internal and external activity of one basis")
                .arg(file.clone())
                .arg(
                    Arg::new("basis")
                        .long("basis")
                        .required(true)
                        .value_name("LIST")
                        .help("comma-separated elements, e.g. 1,3,5"),
                ),
        )
        .subcommand(
            Command::new("bench")
                .about("time an engine on a parametric family, CSV output")
                .arg(
                    Arg::new("family")
                        .long("family")
                        .value_parser(["whirl"])
                        .default_value("whirl"),
                )
                .arg(
                    Arg::new("sizes")
                        .long("sizes")
                        .required(true)
                        .value_name("LIST")
                        .help("comma-separated ground set sizes, e.g. 20,40,80"),
                )
                .arg(
                    Arg::new("algo")
                        .long("algo")
                        .value_parser(["dp", "activities"])
                        .default_value("dp"),
                ),
        )
}

fn main() {
    let matches = cli().get_matches();
    match run(&matches) {
        Ok(output) => {
            print!("{output}");
            std::process::exit(0);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn read_document(matches: &ArgMatches) -> Result<InputDocument, CliError> {
    let path = matches.get_one::<String>("file").unwrap();
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {path}: {e}")))?;
    parse_input(&text)
}

/// A presentation as the diagram of its normalized antichain, anchored at
/// element 1.  Loops stay in the diagram as all-East columns, so labels are
/// exactly the original elements.
fn diagram_of(doc: &InputDocument) -> Result<Diagram, CliError> {
    match doc {
        InputDocument::Diagram(d) => Ok(d.clone()),
        InputDocument::Presentation(sys) => {
            let antichain = normalized(sys)?;
            if antichain.rank() == 0 {
                return Err(CliError::infeasible(
                    "a rank-0 presentation has no diagram; every element is a loop",
                ));
            }
            Ok(Diagram::from_presentation(&antichain, 1)?)
        }
    }
}

fn normalized(sys: &SigmaIntervalSystem) -> Result<SigmaIntervalSystem, CliError> {
    let report = sys.validate();
    if report.is_antichain {
        Ok(sys.clone())
    } else if report.satisfies_c {
        Ok(sys.normalize_to_antichain()?)
    } else {
        Err(CliError::input(
            "presentation is neither an antichain nor a condition-(C) multiset",
        ))
    }
}

fn run(matches: &ArgMatches) -> Result<String, CliError> {
    match matches.subcommand() {
        Some(("check", sub)) => cmd_check(sub),
        Some(("tutte", sub)) => cmd_tutte(sub),
        Some(("bases", sub)) => cmd_bases(sub),
        Some(("dual", sub)) => cmd_dual(sub),
        Some(("minor", sub)) => cmd_minor(sub),
        Some(("activities", sub)) => cmd_activities(sub),
        Some(("bench", sub)) => cmd_bench(sub),
        _ => unreachable!("subcommand is required"),
    }
}

fn cmd_check(matches: &ArgMatches) -> Result<String, CliError> {
    match read_document(matches)? {
        InputDocument::Presentation(sys) => {
            let report = sys.validate();
            let mut out = String::from("kind presentation\n");
            out.push_str(&format!("elements {}\n", sys.ground_size()));
            out.push_str(&format!("intervals {}\n", sys.intervals().len()));
            out.push_str(&format!("antichain {}\n", report.is_antichain));
            out.push_str(&format!("condition_c {}\n", report.satisfies_c));
            if report.loops.is_empty() {
                out.push_str("loops -\n");
            } else {
                let list: Vec<String> = report.loops.iter().map(ToString::to_string).collect();
                out.push_str(&format!("loops {}\n", list.join(" ")));
            }
            out.push_str(&format!("lattice_path {}\n", report.is_lattice_path));
            if report.is_antichain {
                out.push_str(&format!("rank {}\n", sys.rank()));
                out.push_str(&format!("nullity {}\n", sys.nullity()));
            }
            Ok(out)
        }
        InputDocument::Diagram(d) => {
            let mut out = String::from("kind diagram\n");
            out.push_str(&format!("k {}\n", d.k()));
            out.push_str(&format!("m {}\n", d.nullity()));
            out.push_str(&format!("r {}\n", d.rank()));
            out.push_str(&format!("elements {}\n", d.ground_size()));
            out.push_str("valid true\n");
            Ok(out)
        }
    }
}

fn cmd_tutte(matches: &ArgMatches) -> Result<String, CliError> {
    let doc = read_document(matches)?;
    let algo = matches.get_one::<String>("algo").unwrap().as_str();
    let (poly, rank, nullity) = match &doc {
        InputDocument::Presentation(sys) => {
            let rank = normalized(sys)?.rank();
            let nullity = sys.ground_size() - rank;
            let poly = match algo {
                "dp" => tutte(sys)?,
                "activities" => tutte_via_activities(sys)?,
                _ => sys.to_set_system().tutte_subset_expansion()?,
            };
            (poly, rank, nullity)
        }
        InputDocument::Diagram(d) => {
            let poly = match algo {
                "dp" => tutte_of_diagram(d)?,
                "activities" => tutte_of_diagram_via_activities(d),
                _ => {
                    let n = d.ground_size();
                    if n > ENUMERATION_GUARD {
                        return Err(CliError::Guard(
                            Error::ResourceGuard {
                                n,
                                guard: ENUMERATION_GUARD,
                            }
                            .to_string(),
                        ));
                    }
                    tutte_from_bases(n, &d.label_sets())?
                }
            };
            (poly, d.rank(), d.nullity())
        }
    };
    if let Some(point) = matches.get_many::<String>("eval") {
        let point: Vec<&String> = point.collect();
        let x = parse_eval_point(point[0])?;
        let y = parse_eval_point(point[1])?;
        return Ok(format!("{}\n", poly.eval(&x, &y)));
    }
    Ok(render_tutte(&poly, rank, nullity))
}

fn cmd_bases(matches: &ArgMatches) -> Result<String, CliError> {
    let doc = read_document(matches)?;
    // a rank-0 presentation has the empty set as its only basis
    if let InputDocument::Presentation(sys) = &doc {
        if normalized(sys)?.rank() == 0 {
            return Ok(if matches.get_flag("count") {
                "1\n".into()
            } else {
                "\n".into()
            });
        }
    }
    let d = diagram_of(&doc)?;
    if matches.get_flag("count") {
        return Ok(format!("{}\n", d.count_bases()));
    }
    let mut out = String::new();
    for basis in d.label_sets() {
        let words: Vec<String> = basis.iter().map(ToString::to_string).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    Ok(out)
}

fn cmd_dual(matches: &ArgMatches) -> Result<String, CliError> {
    let d = diagram_of(&read_document(matches)?)?;
    Ok(d.reflect_dual().to_text())
}

fn cmd_minor(matches: &ArgMatches) -> Result<String, CliError> {
    // recover the left-to-right operation order from argument indices
    let mut ops: Vec<(usize, bool, Element)> = Vec::new();
    for (key, is_delete) in [("delete", true), ("contract", false)] {
        if let (Some(indices), Some(values)) =
            (matches.indices_of(key), matches.get_many::<u32>(key))
        {
            for (idx, &value) in indices.zip(values) {
                ops.push((idx, is_delete, value));
            }
        }
    }
    ops.sort_unstable();
    match read_document(matches)? {
        InputDocument::Presentation(mut sys) => {
            for &(_, is_delete, e) in &ops {
                sys = if is_delete {
                    sys.delete_element(e)?
                } else {
                    sys.contract_element(e)?
                };
            }
            Ok(emit_presentation(&sys))
        }
        InputDocument::Diagram(mut d) => {
            for &(_, is_delete, e) in &ops {
                let greatest = d.ground_size();
                if e != greatest {
                    return Err(CliError::input(format!(
                        "diagram minors remove the greatest element; expected {greatest}, got {e}"
                    )));
                }
                let minor = if is_delete {
                    d.initial_minor_diagram(&[e], &[])?
                } else {
                    d.initial_minor_diagram(&[], &[e])?
                };
                d = minor.ok_or_else(|| {
                    CliError::infeasible(format!(
                        "element {e} cannot be {} at diagram level",
                        if is_delete {
                            "deleted (it is an isthmus)"
                        } else {
                            "contracted (it is a loop)"
                        }
                    ))
                })?;
            }
            Ok(d.to_text())
        }
    }
}

fn cmd_activities(matches: &ArgMatches) -> Result<String, CliError> {
    let list = matches.get_one::<String>("basis").unwrap();
    let basis: Vec<Element> = if list.trim().is_empty() {
        Vec::new()
    } else {
        list.split(',')
            .map(|piece| {
                piece.trim().parse::<Element>().map_err(|_| {
                    CliError::input(format!("invalid element {piece:?} in basis list"))
                })
            })
            .collect::<Result<_, _>>()?
    };
    let (i, e) = match read_document(matches)? {
        InputDocument::Presentation(sys) => activities_of_basis(&sys, &basis)?,
        InputDocument::Diagram(d) => basis_activities(&d, &basis)?,
    };
    Ok(format!("i={i} e={e}\n"))
}

fn cmd_bench(matches: &ArgMatches) -> Result<String, CliError> {
    let algo = matches.get_one::<String>("algo").unwrap().as_str();
    let sizes: Vec<u32> = matches
        .get_one::<String>("sizes")
        .unwrap()
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<u32>()
                .map_err(|_| CliError::input(format!("invalid size {piece:?}")))
        })
        .collect::<Result<_, _>>()?;
    let mut out = String::from("n,algo,millis,nu\n");
    for n in sizes {
        if n < 4 || n % 2 != 0 {
            return Err(CliError::input(format!(
                "whirl sizes must be even and at least 4, got {n}"
            )));
        }
        let sys = fixtures::whirl(n / 2);
        let (elapsed, nu) = match algo {
            "dp" => {
                let start = Instant::now();
                let d = Diagram::from_presentation(&sys, 1)?;
                let graph = ComputationGraph::build(&d)?;
                let poly = graph.tutte()?;
                let elapsed = start.elapsed();
                consume(&poly);
                (elapsed, graph.vertex_count())
            }
            _ => {
                let start = Instant::now();
                let poly = tutte_via_activities(&sys)?;
                let elapsed = start.elapsed();
                consume(&poly);
                (elapsed, 0)
            }
        };
        out.push_str(&format!("{n},{algo},{},{nu}\n", elapsed.as_millis()));
    }
    Ok(out)
}

fn consume(poly: &BivariatePolynomial) {
    // keep the optimizer from discarding the computation
    assert!(poly.eval_i64(1, 1) > BigInt::ZERO || poly.is_zero());
}
