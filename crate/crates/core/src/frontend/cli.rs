use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::automaton::{automaton_to_dot, AutomatonError};
use crate::game::{GameError, Objective};
use crate::solver::{separator_for, solve_with_stats, winning_region, Algorithm, SolveError};
use crate::stats::automaton_stats;

use super::bench::{run_suite, write_tsv, Suite};
use super::format::{parse_game, print_game};
use super::generate::{generate_game, GenerateParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "sepgame", version, about = "Solve games with separating automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether Eve wins from a vertex.
    Solve {
        /// Game file, or `-` for standard input.
        #[arg(long)]
        input: String,
        #[arg(long)]
        from: usize,
        #[arg(long, value_enum, default_value_t = AlgoArg::Separating)]
        algo: AlgoArg,
        /// Also print every vertex from which Eve wins.
        #[arg(long)]
        region: bool,
        /// Also print automaton and product sizes.
        #[arg(long)]
        stats: bool,
    },
    /// Build the separating automaton for an objective and size.
    Automaton {
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_enum)]
        emit: Emit,
        /// Refuse to print DOT graphs with more edges than this.
        #[arg(long, default_value_t = 100_000)]
        max_edges: usize,
    },
    /// Write a random game in the text format.
    Generate {
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 1)]
        min_degree: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        output: Option<String>,
    },
    /// Validate a game file.
    Check {
        #[arg(long)]
        input: String,
    },
    /// Time the separating solver on generated games and print a TSV table.
    Bench {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Args, Debug)]
struct ObjectiveArgs {
    #[arg(long, value_enum)]
    objective: ObjectiveKind,
    /// Priority bound, or the dimension for disj-mp.
    #[arg(long = "d")]
    d: Option<u32>,
    /// Weight bound.
    #[arg(long = "N")]
    max_weight: Option<i64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ObjectiveKind {
    Safety,
    Parity,
    Mp,
    ParityMp,
    DisjMp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Separating,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    Dot,
    Stats,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Small,
    Scaling,
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Failure {
        Failure { code: EXIT_INPUT, message: message.to_string() }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Failure {
        let code = match &e {
            SolveError::Oracle(o) if o.is_guard() => EXIT_GUARD,
            SolveError::Automaton(AutomatonError::TooLarge(_)) => EXIT_GUARD,
            SolveError::Game(GameError::VertexOutOfRange(_)) => EXIT_INPUT,
            _ => EXIT_INVARIANT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<AutomatonError> for Failure {
    fn from(e: AutomatonError) -> Failure {
        SolveError::from(e).into()
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::input(e)
    }
}

impl ObjectiveArgs {
    fn objective(&self) -> Result<Objective, Failure> {
        let d = || self.d.ok_or_else(|| Failure::input("this objective needs --d"));
        let big_n = || {
            let n = self.max_weight.ok_or_else(|| Failure::input("this objective needs --N"))?;
            if n < 0 {
                return Err(Failure::input("--N must be nonnegative"));
            }
            Ok(n)
        };
        Ok(match self.objective {
            ObjectiveKind::Safety => Objective::Safety,
            ObjectiveKind::Parity => Objective::Parity { d: d()? },
            ObjectiveKind::Mp => Objective::MeanPayoff { max_weight: big_n()? },
            ObjectiveKind::ParityMp => Objective::ParityOrMp { d: d()?, max_weight: big_n()? },
            ObjectiveKind::DisjMp => {
                let dim = d()? as usize;
                if dim == 0 {
                    return Err(Failure::input("disj-mp needs --d at least 1"));
                }
                Objective::DisjMp { dim, max_weight: big_n()? }
            }
        })
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<crate::game::Game, Failure> {
    let text = read_input(path)?;
    parse_game(&text).map_err(|e| Failure::input(format!("{path}: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Solve { input, from, algo, region, stats } => {
            let game = load(&input)?;
            if from >= game.vertex_count() {
                return Err(Failure::input(format!(
                    "--from {from} out of range, the game has {} vertices",
                    game.vertex_count()
                )));
            }
            let algorithm = match algo {
                AlgoArg::Separating => Algorithm::Separating,
                AlgoArg::Oracle => Algorithm::Oracle,
            };
            let (win, sizes) = solve_with_stats(&game, from, algorithm)?;
            writeln!(out, "{}", if win { "WIN" } else { "LOSE" })?;
            if region {
                let vertices: Vec<String> =
                    winning_region(&game, algorithm)?.iter().map(|v| v.to_string()).collect();
                writeln!(out, "region\t{}", vertices.join(" "))?;
            }
            if stats {
                if let Some(s) = sizes {
                    writeln!(out, "automaton_states\t{}", s.automaton_states)?;
                    writeln!(out, "product_vertices\t{}", s.product_vertices)?;
                    writeln!(out, "product_edges\t{}", s.product_edges)?;
                } else {
                    writeln!(out, "strategies\t{}", crate::oracle::strategy_count(&game))?;
                }
            }
        }
        Command::Automaton { objective, n, emit, max_edges } => {
            let objective = objective.objective()?;
            match emit {
                Emit::Dot => {
                    let aut = separator_for(objective, n)?;
                    out.write_all(automaton_to_dot(&*aut, max_edges)?.as_bytes())?;
                }
                Emit::Stats => write!(out, "{}", automaton_stats(objective, n, 10_000_000)?)?,
            }
        }
        Command::Generate { objective, vertices, min_degree, max_degree, seed, output } => {
            let objective = objective.objective()?;
            if vertices == 0 {
                return Err(Failure::input("--vertices must be positive"));
            }
            if min_degree > max_degree {
                return Err(Failure::input("--min-degree exceeds --max-degree"));
            }
            let params = GenerateParams { vertices, min_degree, max_degree, objective, seed };
            let game = generate_game(&params).map_err(SolveError::from)?;
            let text = print_game(&game);
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| Failure::input(format!("{path}: {e}")))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Check { input } => {
            let game = load(&input)?;
            writeln!(
                out,
                "ok: objective {}, {} vertices, {} edges",
                game.objective(),
                game.vertex_count(),
                game.graph().edge_count()
            )?;
        }
        Command::Bench { suite } => {
            let suite = match suite {
                SuiteArg::Small => Suite::Small,
                SuiteArg::Scaling => Suite::Scaling,
            };
            write_tsv(&run_suite(suite)?, out)?;
        }
    }
    Ok(())
}

/// Runs the command line `args` (program name first) and returns the exit
/// code: 0 on success, 2 for unreadable or malformed input, 3 when a
/// construction fails, 4 when a size guard refuses the input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_INPUT
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("sepgame").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn automaton_stats_command() {
        let (code, out, _) = call(&["automaton", "--objective", "mp", "--n", "3", "--N", "2", "--emit", "stats"]);
        assert_eq!(code, 0);
        assert!(out.contains("states\t5\n"));
    }

    #[test]
    fn automaton_dot_command() {
        let (code, out, _) = call(&["automaton", "--objective", "parity", "--n", "2", "--d", "2", "--emit", "dot"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("digraph automaton {"));
    }

    #[test]
    fn missing_parameter() {
        let (code, _, err) = call(&["automaton", "--objective", "parity", "--n", "2", "--emit", "stats"]);
        assert_eq!(code, 2);
        assert!(err.contains("--d"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn generate_to_stdout() {
        let (code, out, _) = call(&[
            "generate", "--objective", "disj-mp", "--d", "2", "--N", "1", "--vertices", "3", "--seed", "5",
        ]);
        assert_eq!(code, 0);
        let game = parse_game(&out).unwrap();
        assert_eq!(game.vertex_count(), 3);
        assert_eq!(game.objective(), Objective::DisjMp { dim: 2, max_weight: 1 });
    }
}
