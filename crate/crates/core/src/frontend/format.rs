//! The `sepgame 1` text format.
//!
//! ```text
//! sepgame 1
//! objective parity-mp 4 10
//! vertices 2
//! vertex 0 E
//! vertex 1 A
//! edge 0 1 2 -7    # priority 2, weight -7
//! edge 1 0 1 3
//! ```
//!
//! Tokens are separated by whitespace and `#` starts a comment. Blank lines
//! are ignored. Edge lines carry as many color values as the objective
//! needs: none for `safety`, a priority for `parity`, a weight for `mp`, a
//! priority and a weight for `parity-mp`, and `d` weights for `disj-mp`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::color::{Color, WeightVector};
use crate::game::{Game, Objective, Player};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }

    fn int<T: std::str::FromStr>(&self, what: &str) -> Result<T, ParseError> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected {what}, found `{}`", self.text)))
    }

    fn keyword(&self, word: &str) -> Result<(), ParseError> {
        if self.text == word {
            Ok(())
        } else {
            Err(self.error(format!("expected `{word}`, found `{}`", self.text)))
        }
    }
}

fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, (byte, ch)) in content.char_indices().chain([(content.len(), ' ')]).enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((from, column))) => {
                    tokens.push(Token { text: &content[from..byte], line: i + 1, column: column + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

/// Reads the tokens of one line in order, with positioned errors for
/// missing or extra tokens.
struct Cursor<'t, 'a> {
    tokens: &'t [Token<'a>],
    next: usize,
}

impl<'t, 'a> Cursor<'t, 'a> {
    fn new(tokens: &'t [Token<'a>]) -> Self {
        Cursor { tokens, next: 0 }
    }

    fn take(&mut self, what: &str) -> Result<Token<'a>, ParseError> {
        match self.tokens.get(self.next) {
            Some(t) => {
                self.next += 1;
                Ok(*t)
            }
            None => {
                let last = self.tokens.last().expect("lines are nonempty");
                Err(ParseError {
                    line: last.line,
                    column: last.column + last.text.chars().count() + 1,
                    message: format!("expected {what} before end of line"),
                })
            }
        }
    }

    fn remaining(&self) -> &'t [Token<'a>] {
        &self.tokens[self.next..]
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.tokens.get(self.next) {
            Some(t) => Err(t.error(format!("unexpected token `{}`", t.text))),
            None => Ok(()),
        }
    }
}

/// Parses an objective descriptor such as `parity 4` or `disj-mp 2 3`.
pub fn parse_objective(text: &str) -> Result<Objective, ParseError> {
    let lines = tokenize(text);
    match lines.as_slice() {
        [tokens] => {
            let mut cursor = Cursor::new(tokens);
            let objective = objective_from(&mut cursor)?;
            cursor.finish()?;
            Ok(objective)
        }
        _ => Err(ParseError { line: 1, column: 1, message: "expected one objective line".into() }),
    }
}

fn objective_from(cursor: &mut Cursor<'_, '_>) -> Result<Objective, ParseError> {
    let kind = cursor.take("an objective")?;
    let weight = |cursor: &mut Cursor<'_, '_>| -> Result<i64, ParseError> {
        let t = cursor.take("a weight bound N")?;
        let n: i64 = t.int("a weight bound N")?;
        if n < 0 {
            return Err(t.error(format!("weight bound {n} is negative")));
        }
        Ok(n)
    };
    Ok(match kind.text {
        "safety" => Objective::Safety,
        "parity" => Objective::Parity { d: cursor.take("a priority bound d")?.int("a priority bound d")? },
        "mp" => Objective::MeanPayoff { max_weight: weight(cursor)? },
        "parity-mp" => {
            let d = cursor.take("a priority bound d")?.int("a priority bound d")?;
            Objective::ParityOrMp { d, max_weight: weight(cursor)? }
        }
        "disj-mp" => {
            let t = cursor.take("a dimension d")?;
            let dim: usize = t.int("a dimension d")?;
            if dim == 0 {
                return Err(t.error("dimension must be at least 1"));
            }
            Objective::DisjMp { dim, max_weight: weight(cursor)? }
        }
        other => {
            return Err(kind.error(format!(
                "unknown objective `{other}`, expected safety, parity, mp, parity-mp or disj-mp"
            )))
        }
    })
}

fn priority(t: &Token<'_>, d: u32) -> Result<u32, ParseError> {
    let p: u32 = t.int("a priority")?;
    if p > d {
        return Err(t.error(format!("priority {p} exceeds d={d}")));
    }
    Ok(p)
}

fn weight(t: &Token<'_>, max_weight: i64) -> Result<i64, ParseError> {
    let w: i64 = t.int("a weight")?;
    if w.checked_abs().is_none_or(|a| a > max_weight) {
        return Err(t.error(format!("weight {w} outside [-{max_weight},{max_weight}]")));
    }
    Ok(w)
}

fn color(objective: Objective, values: &[Token<'_>]) -> Result<Color, ParseError> {
    Ok(match objective {
        Objective::Safety => Color::Unit,
        Objective::Parity { d } => Color::Priority(priority(&values[0], d)?),
        Objective::MeanPayoff { max_weight } => Color::Weight(weight(&values[0], max_weight)?),
        Objective::ParityOrMp { d, max_weight } => {
            Color::Pair(priority(&values[0], d)?, weight(&values[1], max_weight)?)
        }
        Objective::DisjMp { max_weight, .. } => Color::Vector(
            values
                .iter()
                .map(|t| weight(t, max_weight))
                .collect::<Result<WeightVector, _>>()?,
        ),
    })
}

/// Parses a game file.
pub fn parse_game(text: &str) -> Result<Game, ParseError> {
    let lines = tokenize(text);
    let end_of_input = ParseError {
        line: text.lines().count() + 1,
        column: 1,
        message: String::new(),
    };
    let mut lines = lines.iter();
    let mut next_line = |what: &str| {
        lines.next().ok_or_else(|| ParseError {
            message: format!("unexpected end of input, expected {what}"),
            ..end_of_input.clone()
        })
    };

    let mut header = Cursor::new(next_line("the `sepgame 1` header")?);
    header.take("`sepgame`")?.keyword("sepgame")?;
    let version = header.take("a format version")?;
    if version.text != "1" {
        return Err(version.error(format!("unsupported format version `{}`", version.text)));
    }
    header.finish()?;

    let mut line = Cursor::new(next_line("the objective line")?);
    line.take("`objective`")?.keyword("objective")?;
    let objective = objective_from(&mut line)?;
    line.finish()?;

    let mut line = Cursor::new(next_line("the vertex count")?);
    line.take("`vertices`")?.keyword("vertices")?;
    let n: usize = line.take("a vertex count")?.int("a vertex count")?;
    line.finish()?;

    let mut owners = Vec::with_capacity(n.min(1 << 20));
    for expected in 0..n {
        let mut line = Cursor::new(next_line(&format!("the declaration of vertex {expected}"))?);
        line.take("`vertex`")?.keyword("vertex")?;
        let id_token = line.take("a vertex id")?;
        let id: usize = id_token.int("a vertex id")?;
        if id != expected {
            return Err(id_token.error(format!("expected vertex {expected}, found {id}")));
        }
        let owner = line.take("an owner")?;
        owners.push(match owner.text {
            "E" => Player::Eve,
            "A" => Player::Adam,
            other => return Err(owner.error(format!("owner must be E or A, found `{other}`"))),
        });
        line.finish()?;
    }

    let arity = objective.color_arity();
    let mut edges = Vec::new();
    let mut seen: HashMap<(usize, Color, usize), usize> = HashMap::new();
    for tokens in lines {
        let mut line = Cursor::new(tokens);
        let keyword = line.take("`edge`")?;
        keyword.keyword("edge")?;
        let mut endpoint = |what: &str| -> Result<usize, ParseError> {
            let t = line.take(what)?;
            let v: usize = t.int(what)?;
            if v >= n {
                return Err(t.error(format!("vertex {v} out of range, the game has {n} vertices")));
            }
            Ok(v)
        };
        let source = endpoint("a source vertex")?;
        let target = endpoint("a target vertex")?;
        let values = line.remaining();
        if values.len() != arity {
            return Err(keyword.error(format!(
                "objective `{objective}` needs {arity} color value(s) per edge, found {}",
                values.len()
            )));
        }
        let color = color(objective, values)?;
        if let Some(first) = seen.insert((source, color.clone(), target), keyword.line) {
            return Err(keyword.error(format!(
                "duplicate edge {source} -> {target} with color {color}, first declared on line {first}"
            )));
        }
        edges.push((source, color, target));
    }

    let graph = Graph::new(n, objective.color_kind(), edges).map_err(|e| ParseError {
        message: e.to_string(),
        ..end_of_input.clone()
    })?;
    Game::new(graph, owners, objective).map_err(|e| ParseError { message: e.to_string(), ..end_of_input })
}

fn write_color_values(out: &mut String, color: &Color) {
    match color {
        Color::Unit => {}
        Color::Priority(p) => write!(out, " {p}").unwrap(),
        Color::Weight(w) => write!(out, " {w}").unwrap(),
        Color::Pair(p, w) => write!(out, " {p} {w}").unwrap(),
        Color::Vector(ws) => ws.iter().for_each(|w| write!(out, " {w}").unwrap()),
    }
}

/// Prints `game` in canonical form: no comments, one declaration per line,
/// edges grouped by source.
pub fn print_game(game: &Game) -> String {
    let mut out = String::new();
    writeln!(out, "sepgame 1").unwrap();
    writeln!(out, "objective {}", game.objective()).unwrap();
    writeln!(out, "vertices {}", game.vertex_count()).unwrap();
    for (v, owner) in game.owners().iter().enumerate() {
        let tag = match owner {
            Player::Eve => "E",
            Player::Adam => "A",
        };
        writeln!(out, "vertex {v} {tag}").unwrap();
    }
    for e in game.graph().edges() {
        write!(out, "edge {} {}", e.source, e.target).unwrap();
        write_color_values(&mut out, &e.color.to_owned());
        out.push('\n');
    }
    out
}
