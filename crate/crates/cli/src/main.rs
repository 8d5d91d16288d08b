//! Command line front end: generate hypergraphs, print their structure,
//! decide fractional isomorphism, verify witness pairs, and compute
//! fractional invariants, all exactly over the rationals.
//!
//! Exit codes follow one contract everywhere: 0 for a positive answer or a
//! clean run, 1 for a negative answer or a failed check, 2 for errors,
//! including the case where the two decision routes of `--method both`
//! contradict each other.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fractiso::invariants::{
    chromatic_f, clique_cover_f, clique_f, clique_independence_f, covering_f, domination_f,
    has_perfect_fractional_matching, independence_f, matching_f, packing_f, total_domination_f,
    transversal_f,
};
use fractiso::iso::{self, IsoMethod};
use fractiso::{generators, io, partition};
use fractiso::{Error, Hypergraph, DEFAULT_ENUM_LIMIT, DEFAULT_LP_ISO_LIMIT};

/// Fractional isomorphism and fractional invariants of graphs and
/// hypergraphs, decided exactly.
#[derive(Parser)]
#[command(name = "fractiso", version, max_term_width = 100)]
struct Cli {
    /// Cap on instance size for the linear programming and set enumeration
    /// routes; the FRACTISO_LIMIT environment variable changes the default
    #[arg(long, global = true, value_name = "N")]
    limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a hypergraph from a named family
    Gen {
        /// One of cycle, complete, gem, union, fixture-H4u, fixture-G4u,
        /// random-regular
        family: String,
        /// Family parameters: a vertex count for cycle and complete, member
        /// specs like cycle:3 for union, vertex count and degree for
        /// random-regular
        params: Vec<String>,
        /// Seed for random-regular
        #[arg(long, value_name = "N", default_value_t = 0)]
        seed: u64,
        /// Write to this path instead of stdout
        #[arg(short, long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print the basic shape of a hypergraph
    Info {
        file: PathBuf,
    },
    /// Print the coarsest equitable partition and its parameters
    Partition {
        file: PathBuf,
    },
    /// Decide whether two hypergraphs are fractionally isomorphic
    Iso {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Decision route; both runs the two routes and demands agreement
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Write the witness matrices here on a positive answer
        #[arg(long, value_name = "PATH")]
        witness: Option<PathBuf>,
    },
    /// Check a stored witness pair against two hypergraphs
    VerifyWitness {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long, value_name = "PATH")]
        witness: PathBuf,
    },
    /// Compute one fractional invariant
    Invariant {
        file: PathBuf,
        /// One of kf, pf, muf, tauf, alphaf, chif, omegaf, alphacf, thetaf,
        /// gammaf, tgammaf
        #[arg(long, value_name = "NAME")]
        param: String,
    },
    /// Write the dual hypergraph
    Dual {
        file: PathBuf,
        #[arg(short, long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Write the 2-section graph
    TwoSection {
        file: PathBuf,
        #[arg(short, long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Write the bipartite incidence graph
    Bipartite {
        file: PathBuf,
        #[arg(short, long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run the bundled reference checks and print an expected/computed table
    PaperSuite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Partition,
    Lp,
    Both,
}

impl From<MethodArg> for IsoMethod {
    fn from(m: MethodArg) -> IsoMethod {
        match m {
            MethodArg::Partition => IsoMethod::Partition,
            MethodArg::Lp => IsoMethod::Lp,
            MethodArg::Both => IsoMethod::Both,
        }
    }
}

enum CliError {
    Io(PathBuf, std::io::Error),
    In(PathBuf, Error),
    Lib(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, err) => write!(f, "{}: {err}", path.display()),
            CliError::In(path, err) => write!(f, "{}: {err}", path.display()),
            CliError::Lib(err) => err.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Lib(err)
    }
}

fn main() -> ExitCode {
    // Die quietly when the reader of a pipe goes away, the way any text
    // filter does, instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen {
            family,
            params,
            seed,
            out,
        } => cmd_gen(&family, &params, seed, out.as_deref()),
        Command::Info { file } => cmd_info(&file),
        Command::Partition { file } => cmd_partition(&file),
        Command::Iso {
            file_a,
            file_b,
            method,
            witness,
        } => cmd_iso(&file_a, &file_b, method, witness.as_deref(), cli.limit),
        Command::VerifyWitness {
            file_a,
            file_b,
            witness,
        } => cmd_verify_witness(&file_a, &file_b, &witness),
        Command::Invariant { file, param } => cmd_invariant(&file, &param, cli.limit),
        Command::Dual { file, out } => {
            let h = read_hypergraph(&file)?;
            write_output(out.as_deref(), &io::emit_hypergraph(&h.dual()?))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::TwoSection { file, out } => {
            let h = read_hypergraph(&file)?;
            write_output(out.as_deref(), &io::emit_hypergraph(&h.two_section()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bipartite { file, out } => {
            let h = read_hypergraph(&file)?;
            write_output(
                out.as_deref(),
                &io::emit_hypergraph(&h.bipartite_representation()),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::PaperSuite => cmd_paper_suite(),
    }
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))?;
    io::parse_hypergraph(&text).map_err(|e| CliError::In(path.into(), e))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(path.into(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Flag beats environment beats the built-in default.
fn effective_limit(flag: Option<usize>, default: usize) -> Result<usize, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("FRACTISO_LIMIT") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            CliError::Lib(Error::InvalidParameter(format!(
                "FRACTISO_LIMIT must be a count, got {raw:?}"
            )))
        }),
        Err(_) => Ok(default),
    }
}

fn bad_params(msg: String) -> CliError {
    CliError::Lib(Error::InvalidParameter(msg))
}

fn parse_count(s: &str) -> Result<usize, CliError> {
    s.parse()
        .map_err(|_| bad_params(format!("expected a count, got {s:?}")))
}

fn cmd_gen(
    family: &str,
    params: &[String],
    seed: u64,
    out: Option<&Path>,
) -> Result<ExitCode, CliError> {
    let h = build_family(family, params, seed)?;
    write_output(out, &io::emit_hypergraph(&h))?;
    Ok(ExitCode::SUCCESS)
}

fn build_family(family: &str, params: &[String], seed: u64) -> Result<Hypergraph, CliError> {
    let fixed = |count: usize| -> Result<(), CliError> {
        if params.len() == count {
            Ok(())
        } else {
            Err(bad_params(format!(
                "family {family:?} takes {count} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match family {
        "cycle" => {
            fixed(1)?;
            Ok(generators::cycle(parse_count(&params[0])?)?)
        }
        "complete" => {
            fixed(1)?;
            Ok(generators::complete(parse_count(&params[0])?)?)
        }
        "gem" => {
            fixed(0)?;
            Ok(generators::gem())
        }
        "fixture-H4u" | "fixture-h4u" => {
            fixed(0)?;
            Ok(generators::fixture_h4u())
        }
        "fixture-G4u" | "fixture-g4u" => {
            fixed(0)?;
            Ok(generators::fixture_g4u())
        }
        "random-regular" => {
            fixed(2)?;
            let n = parse_count(&params[0])?;
            let r = parse_count(&params[1])?;
            Ok(generators::random_regular(n, r, seed)?)
        }
        "union" => {
            let mut members = params.iter().map(|spec| union_member(spec));
            let first = members
                .next()
                .ok_or_else(|| bad_params("union needs at least one member spec".into()))??;
            members.try_fold(first, |acc, next| {
                Ok(generators::disjoint_union(&acc, &next?))
            })
        }
        other => Err(bad_params(format!(
            "unknown family {other:?}; expected cycle, complete, gem, union, \
             fixture-H4u, fixture-G4u, or random-regular"
        ))),
    }
}

/// A union member spec: `gem`, or `cycle:N`/`complete:N`.
fn union_member(spec: &str) -> Result<Hypergraph, CliError> {
    match spec.split_once(':') {
        Some(("cycle", n)) => Ok(generators::cycle(parse_count(n)?)?),
        Some(("complete", n)) => Ok(generators::complete(parse_count(n)?)?),
        None if spec == "gem" => Ok(generators::gem()),
        _ => Err(bad_params(format!(
            "bad union member {spec:?}; expected gem, cycle:N, or complete:N"
        ))),
    }
}

fn cmd_info(file: &Path) -> Result<ExitCode, CliError> {
    let h = read_hypergraph(file)?;
    println!("vertices: {}", h.vertex_count());
    println!("hyperedges: {}", h.edge_count());
    println!("degrees: {}", h.degree_sequence());
    println!("hyperedge sizes: {}", h.hyperedge_sizes());
    println!("graph: {}", h.is_graph());
    match h.uniformity() {
        Some(k) => println!("uniformity: {k}"),
        None => println!("uniformity: mixed"),
    }
    match h.regularity() {
        Some(k) => println!("regularity: {k}"),
        None => println!("regularity: mixed"),
    }
    println!("exposed vertices: {}", h.has_exposed_vertex());
    Ok(ExitCode::SUCCESS)
}

fn cmd_partition(file: &Path) -> Result<ExitCode, CliError> {
    let h = read_hypergraph(file)?;
    let part = partition::coarsest_partition(&h);
    let params = partition::parameters(&h, &part)?;
    println!("vertex classes: {}", part.vertex_classes.len());
    println!("hyperedge classes: {}", part.edge_classes.len());
    print!("{}", io::emit_partition(&part, Some(&params)));
    Ok(ExitCode::SUCCESS)
}

fn cmd_iso(
    file_a: &Path,
    file_b: &Path,
    method: MethodArg,
    witness_out: Option<&Path>,
    limit_flag: Option<usize>,
) -> Result<ExitCode, CliError> {
    let g = read_hypergraph(file_a)?;
    let h = read_hypergraph(file_b)?;
    let limit = effective_limit(limit_flag, DEFAULT_LP_ISO_LIMIT)?;
    let verdict = iso::decide(&g, &h, method.into(), limit)?;
    println!("iso: {}", verdict.isomorphic);
    if let (Some(path), Some(witness)) = (witness_out, &verdict.witness) {
        fs::write(path, io::emit_witness(witness)).map_err(|e| CliError::Io(path.into(), e))?;
    }
    Ok(if verdict.isomorphic {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify_witness(
    file_a: &Path,
    file_b: &Path,
    witness_path: &Path,
) -> Result<ExitCode, CliError> {
    let g = read_hypergraph(file_a)?;
    let h = read_hypergraph(file_b)?;
    let text = fs::read_to_string(witness_path).map_err(|e| CliError::Io(witness_path.into(), e))?;
    let witness = io::parse_witness(&text).map_err(|e| CliError::In(witness_path.into(), e))?;
    let report = iso::verify_witness(&g, &h, &witness)?;
    println!(
        "vertex coupling doubly stochastic: {}",
        report.vertex_coupling_doubly_stochastic
    );
    println!(
        "edge coupling doubly stochastic: {}",
        report.edge_coupling_doubly_stochastic
    );
    println!("left incidence equation: {}", report.left_incidence_equation);
    println!(
        "right incidence equation: {}",
        report.right_incidence_equation
    );
    println!("witness: {}", if report.ok() { "ok" } else { "failed" });
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_invariant(file: &Path, param: &str, limit_flag: Option<usize>) -> Result<ExitCode, CliError> {
    let h = read_hypergraph(file)?;
    let value = match param {
        "kf" => covering_f(&h),
        "pf" => packing_f(&h),
        "muf" => matching_f(&h)?,
        "tauf" => transversal_f(&h)?,
        "alphaf" => independence_f(&h)?,
        "chif" => chromatic_f(&h, effective_limit(limit_flag, DEFAULT_ENUM_LIMIT)?)?,
        "omegaf" => clique_f(&h, effective_limit(limit_flag, DEFAULT_ENUM_LIMIT)?)?,
        "alphacf" => clique_independence_f(&h, effective_limit(limit_flag, DEFAULT_ENUM_LIMIT)?)?,
        "thetaf" => clique_cover_f(&h, effective_limit(limit_flag, DEFAULT_ENUM_LIMIT)?)?,
        "gammaf" => domination_f(&h)?,
        "tgammaf" => total_domination_f(&h)?,
        other => {
            return Err(bad_params(format!(
                "unknown parameter {other:?}; expected one of kf, pf, muf, tauf, alphaf, \
                 chif, omegaf, alphacf, thetaf, gammaf, tgammaf"
            )))
        }
    };
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

const SUITE_ISO_LIMIT: usize = 30;
const SUITE_ENUM_LIMIT: usize = 20;

struct SuiteRow {
    name: &'static str,
    expected: &'static str,
    computed: String,
}

/// The reference table: every row states a value or verdict this tool must
/// reproduce on its bundled fixtures.
fn cmd_paper_suite() -> Result<ExitCode, CliError> {
    let rows = suite_rows()?;
    let name_width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let value_width = rows
        .iter()
        .map(|r| r.expected.len().max(r.computed.len()))
        .max()
        .unwrap_or(0);
    let mut failures = 0;
    for row in &rows {
        let ok = row.expected == row.computed;
        if !ok {
            failures += 1;
        }
        println!(
            "{:<name_width$}  expected {:<value_width$}  computed {:<value_width$}  {}",
            row.name,
            row.expected,
            row.computed,
            if ok { "pass" } else { "FAIL" }
        );
    }
    println!("{} checks, {failures} failed", rows.len());
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn suite_rows() -> Result<Vec<SuiteRow>, CliError> {
    let c3 = generators::cycle(3)?;
    let c5 = generators::cycle(5)?;
    let c6 = generators::cycle(6)?;
    let c12 = generators::cycle(12)?;
    let k2 = generators::complete(2)?;
    let k4 = generators::complete(4)?;
    let gem = generators::gem();
    let two_c3 = generators::disjoint_union(&c3, &c3);
    let c5_c7 = generators::disjoint_union(&c5, &generators::cycle(7)?);
    let h4u = generators::fixture_h4u();
    let g4u = generators::fixture_g4u();
    let k4_c7 = generators::disjoint_union(&k4, &generators::cycle(7)?);
    let gem_c6 = generators::disjoint_union(&gem, &c6);
    let petersen = petersen();
    let star3 = Hypergraph::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]])?;
    let exposed = Hypergraph::new(3, vec![vec![0, 1]])?;

    let iso_verdict = |g: &Hypergraph, h: &Hypergraph, method: IsoMethod| -> Result<String, Error> {
        Ok(iso::decide(g, h, method, SUITE_ISO_LIMIT)?.isomorphic.to_string())
    };

    let mut rows = Vec::new();
    let mut push = |name: &'static str, expected: &'static str, computed: String| {
        rows.push(SuiteRow {
            name,
            expected,
            computed,
        });
    };

    push(
        "2C3 ~ C6 by refinement",
        "true",
        iso_verdict(&two_c3, &c6, IsoMethod::Partition)?,
    );
    push(
        "2C3 ~ C6 by the linear program",
        "true",
        iso_verdict(&two_c3, &c6, IsoMethod::Lp)?,
    );
    push(
        "H4u ~ G4u by refinement",
        "true",
        iso_verdict(&h4u, &g4u, IsoMethod::Partition)?,
    );
    push(
        "H4u ~ G4u by the linear program",
        "true",
        iso_verdict(&h4u, &g4u, IsoMethod::Lp)?,
    );
    push(
        "C5+C7 ~ C12, both routes",
        "true",
        iso_verdict(&c5_c7, &c12, IsoMethod::Both)?,
    );
    push(
        "2-sections of H4u and G4u",
        "false",
        iso_verdict(&h4u.two_section(), &g4u.two_section(), IsoMethod::Both)?,
    );
    push(
        "K4+C7 ~ gem+C6",
        "false",
        iso_verdict(&k4_c7, &gem_c6, IsoMethod::Both)?,
    );
    push(
        "degrees of K4+C7",
        "{2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3}",
        k4_c7.degree_sequence().to_string(),
    );
    push(
        "degrees of gem+C6",
        "{2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 4}",
        gem_c6.degree_sequence().to_string(),
    );
    let swapped_a = generators::disjoint_union(&k4, &gem.dual()?);
    let swapped_b = generators::disjoint_union(&k4.dual()?, &gem);
    push(
        "K4+gem* ~ K4*+gem",
        "false",
        iso_verdict(&swapped_a, &swapped_b, IsoMethod::Both)?,
    );
    push(
        "bipartite representations of the swapped dual unions",
        "true",
        iso_verdict(
            &swapped_a.bipartite_representation(),
            &swapped_b.bipartite_representation(),
            IsoMethod::Partition,
        )?,
    );

    push("k_f(C3)", "3/2", covering_f(&c3).to_string());
    push("k_f(C5)", "5/2", covering_f(&c5).to_string());
    push("k_f(2C3)", "3", covering_f(&two_c3).to_string());
    push("k_f(C6)", "3", covering_f(&c6).to_string());
    push(
        "p_f equals k_f on the gem",
        "true",
        (packing_f(&gem) == covering_f(&gem)).to_string(),
    );
    push("k_f with an exposed vertex", "infinity", covering_f(&exposed).to_string());
    push("mu_f(K2)", "1", matching_f(&k2)?.to_string());
    push(
        "mu_f equals tau_f on C6",
        "true",
        (matching_f(&c6)? == transversal_f(&c6)?).to_string(),
    );

    push("chi_f(2C3)", "3", chromatic_f(&two_c3, SUITE_ENUM_LIMIT)?.to_string());
    push("chi_f(C6)", "2", chromatic_f(&c6, SUITE_ENUM_LIMIT)?.to_string());
    push("omega_f(2C3)", "3", clique_f(&two_c3, SUITE_ENUM_LIMIT)?.to_string());
    push("omega_f(C6)", "2", clique_f(&c6, SUITE_ENUM_LIMIT)?.to_string());
    push(
        "alpha_c_f(2C3)",
        "2",
        clique_independence_f(&two_c3, SUITE_ENUM_LIMIT)?.to_string(),
    );
    push(
        "theta_f(2C3)",
        "2",
        clique_cover_f(&two_c3, SUITE_ENUM_LIMIT)?.to_string(),
    );
    push(
        "alpha_c_f(C6)",
        "3",
        clique_independence_f(&c6, SUITE_ENUM_LIMIT)?.to_string(),
    );
    push("theta_f(C6)", "3", clique_cover_f(&c6, SUITE_ENUM_LIMIT)?.to_string());
    push("chi_f(C5)", "5/2", chromatic_f(&c5, SUITE_ENUM_LIMIT)?.to_string());
    push(
        "chi_f(Petersen)",
        "5/2",
        chromatic_f(&petersen, SUITE_ENUM_LIMIT)?.to_string(),
    );
    push(
        "alpha_c_f(K4)",
        "1",
        clique_independence_f(&k4, SUITE_ENUM_LIMIT)?.to_string(),
    );

    push("gamma_f(K4)", "1", domination_f(&k4)?.to_string());
    push("Gamma_f(K4)", "4/3", total_domination_f(&k4)?.to_string());
    push("gamma_f(Petersen)", "5/2", domination_f(&petersen)?.to_string());
    push(
        "Gamma_f(Petersen)",
        "10/3",
        total_domination_f(&petersen)?.to_string(),
    );
    push("gamma_f(C12)", "4", domination_f(&c12)?.to_string());
    push("Gamma_f(C12)", "6", total_domination_f(&c12)?.to_string());
    push("gamma_f(C5+C7)", "4", domination_f(&c5_c7)?.to_string());
    push("Gamma_f(C5+C7)", "6", total_domination_f(&c5_c7)?.to_string());

    push(
        "C6 has a saturating fractional matching",
        "true",
        has_perfect_fractional_matching(&c6)?.to_string(),
    );
    push(
        "the 3-star has a saturating fractional matching",
        "false",
        has_perfect_fractional_matching(&star3)?.to_string(),
    );
    push(
        "alpha_f(C5)",
        "5/2",
        independence_f(&c5)?.to_string(),
    );

    Ok(rows)
}

/// The Petersen graph: an outer 5-cycle, an inner pentagram, five spokes.
fn petersen() -> Hypergraph {
    let edges = vec![
        vec![0, 1],
        vec![1, 2],
        vec![2, 3],
        vec![3, 4],
        vec![0, 4],
        vec![0, 5],
        vec![1, 6],
        vec![2, 7],
        vec![3, 8],
        vec![4, 9],
        vec![5, 7],
        vec![6, 8],
        vec![7, 9],
        vec![5, 8],
        vec![6, 9],
    ];
    Hypergraph::new(10, edges).expect("a fixed edge list")
}
