use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wonder_systems::enumerate::{canonical_form, enumerate_partition, enumerate_systems, partition_count, EnumFilter};
use wonder_systems::format::{emit_system, parse_system};
use wonder_systems::quotient::{classify_quotient, enumerate_distinguished, quotient, DEFAULT_MAX_COLORS};
use wonder_systems::reduction::{
    find_decomposition, find_tails, is_cuspidal, is_primitive, is_reductive_system, is_spherically_closed, is_strict,
    localize, positive_combs, primitive_1combs,
};
use wonder_systems::render::render;
use wonder_systems::system::{ColorSet, SphericalSystem};
use wonder_systems::{Error, RankOneTable, RootSystem};

/// Spherical systems: validation, quotients, reductions and enumeration.
#[derive(Parser)]
#[command(name = "wonder-systems", version)]
struct Cli {
    /// Rank-one table file loaded on top of the built-in entries.
    #[arg(long, global = true, value_name = "FILE")]
    table: Option<PathBuf>,

    /// Largest number of colors for which subsets of colors are searched.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_COLORS)]
    max_colors: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom and report witnesses of failure.
    Validate { file: PathBuf },
    /// Report the reduction-relevant properties of a valid system.
    Classify { file: PathBuf },
    /// List the distinguished subsets of colors with their quotients, or
    /// print the quotient by one subset.
    Quotients {
        file: PathBuf,
        /// Comma-separated color names.
        #[arg(long, value_delimiter = ',')]
        by: Option<Vec<String>>,
    },
    /// Localize at a set of simple roots.
    Localize {
        file: PathBuf,
        /// Comma-separated 1-based simple root indices.
        #[arg(long, value_delimiter = ',', required = true)]
        roots: Vec<usize>,
    },
    /// Print every spherical system on a group, one per isomorphism class.
    Enumerate(EnumerateArgs),
    /// Annotated text rendering of a system.
    Render { file: PathBuf },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    group: String,
    #[arg(long, value_name = "BOOL")]
    cuspidal: Option<bool>,
    #[arg(long, value_name = "BOOL")]
    primitive: Option<bool>,
    #[arg(long, value_name = "BOOL")]
    reductive: Option<bool>,
    #[arg(long, value_name = "BOOL")]
    strict: Option<bool>,
    #[arg(long, value_name = "BOOL")]
    spherically_closed: Option<bool>,
    #[arg(long, value_name = "BOOL")]
    has_primitive_1comb: Option<bool>,
    /// Largest coefficient sum of a spherical root.
    #[arg(long, value_name = "H")]
    max_height: Option<i64>,
    #[arg(long, value_name = "N", default_value_t = 5)]
    max_rank: usize,
    /// Only the systems whose `Sp` has this bitmask.
    #[arg(long, value_name = "INDEX")]
    partition: Option<u64>,
    /// Worker threads; all cores by default.
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

/// A message and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn negative(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Invalid(_) | Error::NotDistinguished(_) | Error::NotFree(_) | Error::Consistency(_) => {
                Failure::negative(e.to_string())
            }
            _ => Failure::input(e.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let table = load_table(cli.table.as_deref())?;
    match &cli.command {
        Command::Validate { file } => validate(&read_system(file)?, &table),
        Command::Classify { file } => classify(&read_system(file)?, &table, cli.max_colors),
        Command::Quotients { file, by } => quotients(&read_system(file)?, &table, cli.max_colors, by.as_deref()),
        Command::Localize { file, roots } => localize_at(&read_system(file)?, &table, roots),
        Command::Enumerate(args) => enumerate(args, &table, cli.max_colors),
        Command::Render { file } => {
            print!("{}", render(&read_system(file)?, &table));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::input(format!("stdin: {e}")));
    }
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_table(path: Option<&Path>) -> Result<RankOneTable, Failure> {
    match path {
        None => Ok(RankOneTable::builtin()),
        Some(p) => RankOneTable::load(&read_text(p)?).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
    }
}

fn read_system(path: &Path) -> Result<SphericalSystem, Failure> {
    parse_system(&read_text(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// The colors of a system that passes every axiom.
fn checked_colors(sys: &SphericalSystem, table: &RankOneTable) -> Result<ColorSet, Failure> {
    let report = sys.validate(table);
    if !report.is_valid() {
        return Err(Failure::negative(format!("not a spherical system: {}", report.summary())));
    }
    Ok(sys.colors()?)
}

fn braced(names: &[&str]) -> String {
    format!("{{{}}}", names.join(","))
}

fn validate(sys: &SphericalSystem, table: &RankOneTable) -> Outcome {
    let report = sys.validate(table);
    for (axiom, witnesses) in report.verdicts() {
        if witnesses.is_empty() {
            println!("AXIOM {axiom}: PASS");
        } else {
            let list: Vec<String> = witnesses.iter().map(ToString::to_string).collect();
            println!("AXIOM {axiom}: FAIL {}", list.join("; "));
        }
    }
    Ok(if report.is_valid() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn classify(sys: &SphericalSystem, table: &RankOneTable, max_colors: usize) -> Outcome {
    let colors = checked_colors(sys, table)?;
    let mut out = String::new();
    let yes_no = |b: bool| if b { "true" } else { "false" };

    writeln!(out, "cuspidal: {}", yes_no(is_cuspidal(sys))).unwrap();
    match find_decomposition(sys, &colors, table, max_colors)? {
        Some(d) => writeln!(
            out,
            "decomposable: true {} {}",
            braced(&colors.names(&d.first)),
            braced(&colors.names(&d.second))
        )
        .unwrap(),
        None => writeln!(out, "decomposable: false").unwrap(),
    }
    let combs: Vec<String> = positive_combs(sys)
        .iter()
        .map(|c| format!("{}(n={})", sys.a_rows()[c.row].name, c.n))
        .collect();
    writeln!(out, "combs: {}", list_or_none(&combs)).unwrap();
    let tails: Vec<String> = find_tails(sys, &colors, max_colors)?
        .iter()
        .map(|t| format!("{t} witness {}", braced(&colors.names(&t.witness.subset))))
        .collect();
    writeln!(out, "tails: {}", list_or_none(&tails)).unwrap();
    writeln!(out, "primitive: {}", yes_no(is_primitive(sys, table, max_colors)?)).unwrap();
    let ones: Vec<String> = primitive_1combs(sys, table, max_colors)?
        .iter()
        .map(|&r| sys.a_rows()[r].name.clone())
        .collect();
    writeln!(out, "primitive-1-combs: {}", list_or_none(&ones)).unwrap();
    writeln!(out, "defect: {}", sys.defect()?).unwrap();
    match is_reductive_system(&colors) {
        Some(n) => {
            let n: Vec<String> = n.iter().map(ToString::to_string).collect();
            writeln!(out, "reductive: true n=({})", n.join(", ")).unwrap();
        }
        None => writeln!(out, "reductive: false").unwrap(),
    }
    writeln!(out, "strict: {}", yes_no(is_strict(sys, table))).unwrap();
    writeln!(out, "spherically-closed: {}", yes_no(is_spherically_closed(sys, table))).unwrap();
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(", ")
    }
}

fn quotients(sys: &SphericalSystem, table: &RankOneTable, max_colors: usize, by: Option<&[String]>) -> Outcome {
    let colors = checked_colors(sys, table)?;
    if let Some(names) = by {
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        let subset = colors.select(&names)?;
        let result = quotient(sys, &colors, &subset, table)?;
        print!("{}", emit_system(&result.quotient));
        return Ok(ExitCode::SUCCESS);
    }
    for found in enumerate_distinguished(&colors, max_colors)? {
        let rank = quotient(sys, &colors, &found.subset, table)?.quotient.rank();
        let mut line = format!("{} rank {rank}", braced(&colors.names(&found.subset)));
        if !found.subset.is_empty() {
            let class = classify_quotient(sys, &colors, &found.subset, table)?;
            let mut tags = Vec::new();
            if class.minimal {
                tags.push("minimal");
            }
            if class.essential {
                tags.push("essential");
            }
            let defect = format!("defect-{:?}", class.defect).to_lowercase();
            tags.push(&defect);
            write!(line, " {}", tags.join(" ")).unwrap();
        }
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn localize_at(sys: &SphericalSystem, table: &RankOneTable, roots: &[usize]) -> Outcome {
    let n = sys.root_system().rank();
    let mut set = BTreeSet::new();
    for &r in roots {
        if r == 0 || r > n {
            return Err(Failure::input(format!("simple root index {r} out of range 1..={n}")));
        }
        set.insert(r - 1);
    }
    let local = localize(sys, &set, table)?;
    print!("{}", emit_system(&local));
    Ok(ExitCode::SUCCESS)
}

fn enumerate(args: &EnumerateArgs, table: &RankOneTable, max_colors: usize) -> Outcome {
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Failure::input(e.to_string()))?;
    }
    let rs = RootSystem::parse(&args.group)?;
    let filter = EnumFilter {
        cuspidal: args.cuspidal,
        primitive: args.primitive,
        reductive: args.reductive,
        strict: args.strict,
        spherically_closed: args.spherically_closed,
        has_primitive_1comb: args.has_primitive_1comb,
        max_sigma_height: args.max_height,
        max_rank: args.max_rank,
        max_colors,
    };
    let systems = match args.partition {
        Some(index) if index >= partition_count(&rs) => {
            return Err(Failure::input(format!(
                "partition {index} out of range, {} has {} partitions",
                rs.name(),
                partition_count(&rs)
            )))
        }
        Some(index) => enumerate_partition(&rs, &filter, table, index)?,
        None => enumerate_systems(&rs, &filter, table)?,
    };
    for (k, sys) in systems.iter().enumerate() {
        if k > 0 {
            println!();
        }
        let key = canonical_form(sys);
        let sigma: Vec<String> = key.sigma.iter().map(ToString::to_string).collect();
        let sp: Vec<String> = key.sp.iter().map(|i| (i + 1).to_string()).collect();
        println!("# key sp={{{}}} sigma=[{}] rows={:?}", sp.join(","), sigma.join(", "), key.rows);
        print!("{}", emit_system(sys));
    }
    eprintln!("{} systems", systems.len());
    Ok(ExitCode::SUCCESS)
}
