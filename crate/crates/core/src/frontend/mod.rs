//! Text format, random games, command line and benchmarks.

pub mod bench;
pub mod cli;
pub mod format;
pub mod generate;

pub use format::{parse_game, parse_objective, print_game, ParseError};
pub use generate::{generate_game, GenerateParams};
