use std::io::{self, Write};
use std::time::Instant;

use crate::combos::DISJMP_SIZE_CONSTANT;
use crate::game::Objective;
use crate::solver::{solve_with_stats, Algorithm, SolveError};

use super::generate::{generate_game, GenerateParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// A few games per objective at the sizes the oracle can also handle.
    Small,
    /// Growing `n` with `m = 4n`, for parity, mean payoff and disj-mp.
    Scaling,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub objective: Objective,
    pub n: usize,
    pub edges: usize,
    pub states: usize,
    pub product_states: usize,
    pub ms: f64,
}

impl BenchRow {
    /// The `d` column: the priority bound, or the dimension for disj-mp.
    pub fn d(&self) -> Option<u64> {
        match self.objective {
            Objective::Parity { d } | Objective::ParityOrMp { d, .. } => Some(d as u64),
            Objective::DisjMp { dim, .. } => Some(dim as u64),
            _ => None,
        }
    }

    pub fn max_weight(&self) -> Option<i64> {
        match self.objective {
            Objective::MeanPayoff { max_weight }
            | Objective::ParityOrMp { max_weight, .. }
            | Objective::DisjMp { max_weight, .. } => Some(max_weight),
            _ => None,
        }
    }
}

fn suite_points(suite: Suite) -> Vec<(Objective, usize, usize, usize)> {
    match suite {
        Suite::Small => {
            let mut points = Vec::new();
            for n in [4, 6, 8] {
                points.push((Objective::Parity { d: 4 }, n, 1, 3));
                points.push((Objective::MeanPayoff { max_weight: 3 }, n, 1, 3));
                points.push((Objective::ParityOrMp { d: 4, max_weight: 3 }, n, 1, 3));
                points.push((Objective::DisjMp { dim: 3, max_weight: 2 }, n, 1, 3));
            }
            points
        }
        Suite::Scaling => {
            let mut points = Vec::new();
            for objective in [
                Objective::Parity { d: 4 },
                Objective::MeanPayoff { max_weight: 2 },
                Objective::DisjMp { dim: 2, max_weight: 2 },
            ] {
                for n in [50, 100, 200, 400] {
                    points.push((objective, n, 4, 4));
                }
            }
            points
        }
    }
}

/// Generates one seeded game per point and times the separating solver from
/// vertex 0.
pub fn bench_point(objective: Objective, n: usize, min_degree: usize, max_degree: usize) -> Result<BenchRow, SolveError> {
    let game = generate_game(&GenerateParams { vertices: n, min_degree, max_degree, objective, seed: n as u64 })?;
    let started = Instant::now();
    let (_, stats) = solve_with_stats(&game, 0, Algorithm::Separating)?;
    let ms = started.elapsed().as_secs_f64() * 1e3;
    let stats = stats.expect("separating solver reports sizes");
    Ok(BenchRow {
        objective,
        n,
        edges: game.graph().edge_count(),
        states: stats.automaton_states,
        product_states: stats.product_vertices,
        ms,
    })
}

pub fn run_suite(suite: Suite) -> Result<Vec<BenchRow>, SolveError> {
    suite_points(suite)
        .into_iter()
        .map(|(objective, n, lo, hi)| bench_point(objective, n, lo, hi))
        .collect()
}

pub fn write_tsv(rows: &[BenchRow], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "# disj-mp size constant c = {DISJMP_SIZE_CONSTANT}")?;
    writeln!(out, "objective\tn\tm\td\tN\tstates\tproduct_states\tms")?;
    let dash = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    for row in rows {
        let kind = row.objective.to_string();
        let kind = kind.split(' ').next().unwrap_or_default();
        writeln!(
            out,
            "{kind}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.3}",
            row.n,
            row.edges,
            dash(row.d().map(|d| d.to_string())),
            dash(row.max_weight().map(|w| w.to_string())),
            row.states,
            row.product_states,
            row.ms
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_table() {
        let rows = run_suite(Suite::Small).unwrap();
        assert_eq!(rows.len(), 12);
        let mut out = Vec::new();
        write_tsv(&rows, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# disj-mp size constant c = 1");
        assert_eq!(lines.len(), 14);
        assert!(lines[2].starts_with("parity\t4\t"));
        assert!(lines[3].starts_with("mp\t4\t"));
        assert!(lines.iter().skip(1).all(|l| l.split('\t').count() == 8));
    }
}
