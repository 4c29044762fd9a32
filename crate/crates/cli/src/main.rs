//! `prehom`: decompositions, (co)homology tables and spliced complexes of
//! finite topological spaces.
//!
//! Exit codes: 0 on success (closed-form mismatches included), 2 when the
//! input cannot be read or validated, 3 on usage errors.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use prehom::fixtures;
use prehom::pipeline::Pipeline;
use prehom::random::{random_space, DEFAULT_DENSITY};
use prehom::report::{ComplexChoice, PipelineReport, Theory};
use prehom::spacefile::{parse_space, space_to_json};
use prehom::FiniteSpace;

#[derive(Parser)]
#[command(
    name = "prehom",
    version,
    about = "Spliced (co)homology of finite topological spaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Equivalence classes, poset part and complementary part.
    Decompose(InputArgs),
    /// Per-degree groups of one of the three complexes.
    Homology {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = ComplexArg::Poset)]
        complex: ComplexArg,
        #[arg(long, value_enum, default_value_t = TheoryArg::Homology)]
        theory: TheoryArg,
    },
    /// Cohomology of the spliced complex, optionally checked against the closed form.
    Spliced {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        splice: SpliceArgs,
        /// Compare each degree with the closed-form list (length 3 only; other
        /// lengths are reported as uncovered).
        #[arg(long)]
        verify_theorem: bool,
    },
    /// Every section at once: decomposition, complex sizes, tables, spliced
    /// groups and the comparison.
    Report {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        splice: SpliceArgs,
    },
    /// Bundled example spaces.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    /// Names and descriptions.
    List,
    /// Print a fixture as a space file.
    Show { name: String },
    /// Write a fixture to a space file.
    Export { name: String, path: PathBuf },
}

#[derive(Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
struct InputArgs {
    /// Bundled fixture name (see `prehom fixtures list`).
    #[arg(long, group = "source")]
    fixture: Option<String>,
    /// Space file (JSON).
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    /// Random space on this many points (needs --seed).
    #[arg(long, group = "source", requires = "seed")]
    random: Option<usize>,
    /// Seed for --random.
    #[arg(long)]
    seed: Option<u64>,
    /// Relation density for --random.
    #[arg(long, default_value_t = DEFAULT_DENSITY)]
    density: f64,
}

#[derive(Args)]
struct SpliceArgs {
    /// Block length; negative values put the relative complex first.
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    length: i64,
    /// Last spliced degree to compute.
    #[arg(long, default_value_t = 11)]
    max_degree: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexArg {
    Poset,
    Ambient,
    Relative,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    Homology,
    Cohomology,
}

enum Failure {
    Input(String),
    Usage(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Usage(m) => f.write_str(m),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Usage(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let render = |r: PipelineReport| match cli.format {
        Format::Text => r.to_text(),
        Format::Json => r.to_json(),
    };
    match cli.command {
        Command::Decompose(input) => Ok(render(PipelineReport::decompose(&load(&input)?))),
        Command::Homology { input, complex, theory } => {
            let complex = match complex {
                ComplexArg::Poset => ComplexChoice::Poset,
                ComplexArg::Ambient => ComplexChoice::Ambient,
                ComplexArg::Relative => ComplexChoice::Relative,
            };
            let theory = match theory {
                TheoryArg::Homology => Theory::Homology,
                TheoryArg::Cohomology => Theory::Cohomology,
            };
            Ok(render(PipelineReport::homology(&load(&input)?, complex, theory)))
        }
        Command::Spliced {
            input,
            splice,
            verify_theorem,
        } => {
            check_length(splice.length)?;
            let p = load(&input)?;
            let r = PipelineReport::spliced(&p, splice.length, splice.max_degree, verify_theorem)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(render(r))
        }
        Command::Report { input, splice } => {
            check_length(splice.length)?;
            let p = load(&input)?;
            let r = PipelineReport::full(&p, splice.length, splice.max_degree)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(render(r))
        }
        Command::Fixtures { action } => fixtures_command(action, cli.format),
    }
}

fn check_length(length: i64) -> Result<(), Failure> {
    if length == 0 {
        return Err(Failure::Usage("--length must be nonzero".into()));
    }
    Ok(())
}

fn load(input: &InputArgs) -> Result<Pipeline, Failure> {
    Ok(Pipeline::new(&load_space(input)?))
}

fn load_space(input: &InputArgs) -> Result<FiniteSpace, Failure> {
    if let Some(name) = &input.fixture {
        return Ok(find_fixture(name)?.space());
    }
    if let Some(path) = &input.input {
        let text =
            fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        return parse_space(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())));
    }
    let points = input.random.expect("clap requires one input source");
    let seed = input.seed.expect("clap requires --seed with --random");
    if points == 0 {
        return Err(Failure::Usage("--random needs at least one point".into()));
    }
    if !(0.0..=1.0).contains(&input.density) {
        return Err(Failure::Usage("--density must lie in [0, 1]".into()));
    }
    Ok(random_space(seed, points, input.density))
}

fn find_fixture(name: &str) -> Result<&'static fixtures::Fixture, Failure> {
    fixtures::find(name).ok_or_else(|| {
        let known: Vec<&str> = fixtures::all().iter().map(|f| f.name).collect();
        Failure::Usage(format!("unknown fixture {name:?} (known: {})", known.join(", ")))
    })
}

fn fixtures_command(action: FixtureAction, format: Format) -> Result<String, Failure> {
    match action {
        FixtureAction::List => Ok(match format {
            Format::Text => fixtures::all()
                .iter()
                .map(|f| format!("{:<15}{}\n", f.name, f.description))
                .collect(),
            Format::Json => {
                let list: Vec<serde_json::Value> = fixtures::all()
                    .iter()
                    .map(|f| serde_json::json!({ "name": f.name, "description": f.description }))
                    .collect();
                let mut s = serde_json::to_string_pretty(&list).expect("fixture list serializes");
                s.push('\n');
                s
            }
        }),
        FixtureAction::Show { name } => Ok(space_to_json(&find_fixture(&name)?.space())),
        FixtureAction::Export { name, path } => {
            let text = space_to_json(&find_fixture(&name)?.space());
            fs::write(&path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
    }
}
