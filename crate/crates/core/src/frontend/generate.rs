use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::color::{Color, WeightVector};
use crate::game::{Game, GameError, Objective, Player};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenerateParams {
    pub vertices: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub objective: Objective,
    pub seed: u64,
}

fn random_color(rng: &mut impl Rng, objective: Objective) -> Color {
    match objective {
        Objective::Safety => Color::Unit,
        Objective::Parity { d } => Color::Priority(rng.gen_range(0..=d)),
        Objective::MeanPayoff { max_weight } => Color::Weight(rng.gen_range(-max_weight..=max_weight)),
        Objective::ParityOrMp { d, max_weight } => {
            Color::Pair(rng.gen_range(0..=d), rng.gen_range(-max_weight..=max_weight))
        }
        Objective::DisjMp { dim, max_weight } => Color::Vector(
            (0..dim)
                .map(|_| rng.gen_range(-max_weight..=max_weight))
                .collect::<WeightVector>(),
        ),
    }
}

/// A random game, fully determined by `params`.
///
/// Owners are uniform. Each vertex draws its out-degree uniformly from
/// `[min_degree, max_degree]`, capped by the number of distinct
/// `(color, target)` pairs, and then draws that many distinct edges with
/// uniform targets and colors.
pub fn generate_game(params: &GenerateParams) -> Result<Game, GameError> {
    let n = params.vertices;
    let (lo, hi) = (params.min_degree, params.max_degree.max(params.min_degree));
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let owners: Vec<Player> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { Player::Eve } else { Player::Adam })
        .collect();
    let distinct = params.objective.alphabet().size().saturating_mul(n as u64);
    let mut edges = Vec::new();
    for v in 0..n {
        let degree = (rng.gen_range(lo..=hi) as u64).min(distinct) as usize;
        let mut chosen = HashSet::with_capacity(degree);
        while chosen.len() < degree {
            let edge = (random_color(&mut rng, params.objective), rng.gen_range(0..n));
            if chosen.insert(edge.clone()) {
                edges.push((v, edge.0, edge.1));
            }
        }
    }
    Game::from_edges(owners, params.objective, edges)
}
