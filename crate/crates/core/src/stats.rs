use std::fmt;

use crate::automaton::{reachable_state_count, AutomatonError, SafetyAutomaton};
use crate::combos::disjmp_size_bound;
use crate::game::Objective;
use crate::separators::parity_size_bound;
use crate::solver::separator_for;

/// Size report for the separating automaton of an objective and size.
#[derive(Clone, Debug, PartialEq)]
pub struct AutomatonStats {
    pub objective: Objective,
    pub n: usize,
    pub states: usize,
    /// States reachable from the initial one, when exploring them was within
    /// the requested budget.
    pub reachable_states: Option<usize>,
    pub alphabet_size: u64,
    pub bound: f64,
    pub bound_formula: &'static str,
}

/// The size bound on the separator for `objective` and `n`, with the
/// formula it evaluates.
pub fn size_bound(objective: Objective, n: usize) -> (f64, &'static str) {
    let n = n.max(1);
    match objective {
        Objective::Safety => (1.0, "1"),
        Objective::Parity { d } => (parity_size_bound(n, d) as f64, "n*binom(ceil(log2 n)+d/2-1, ceil(log2 n))"),
        Objective::MeanPayoff { max_weight } => (((n - 1) as f64) * max_weight as f64 + 1.0, "(n-1)*N+1"),
        Objective::ParityOrMp { d, max_weight } => (
            (d as f64 + 1.0) * parity_size_bound(n, d) as f64 * (((n - 1) as f64) * max_weight as f64 + 1.0),
            "(d+1)*|A_P|*|A_MP|",
        ),
        Objective::DisjMp { dim, max_weight } => {
            (disjmp_size_bound(n, dim, max_weight), "c*n*log2(n+1)*d*N")
        }
    }
}

/// Builds the separator and reports its size. Reachable states are counted
/// only when `states × alphabet` is at most `explore_budget`.
pub fn automaton_stats(objective: Objective, n: usize, explore_budget: u64) -> Result<AutomatonStats, AutomatonError> {
    let aut = separator_for(objective, n)?;
    let alphabet_size = aut.alphabet().size();
    let work = (aut.state_count() as u64).saturating_mul(alphabet_size);
    let reachable_states = (work <= explore_budget).then(|| reachable_state_count(&*aut));
    let (bound, bound_formula) = size_bound(objective, n);
    Ok(AutomatonStats {
        objective,
        n,
        states: aut.state_count(),
        reachable_states,
        alphabet_size,
        bound,
        bound_formula,
    })
}

impl fmt::Display for AutomatonStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "objective\t{}", self.objective)?;
        writeln!(f, "n\t{}", self.n)?;
        writeln!(f, "states\t{}", self.states)?;
        match self.reachable_states {
            Some(r) => writeln!(f, "reachable_states\t{r}")?,
            None => writeln!(f, "reachable_states\t-")?,
        }
        writeln!(f, "alphabet_size\t{}", self.alphabet_size)?;
        writeln!(f, "bound\t{}", self.bound)?;
        writeln!(f, "bound_formula\t{}", self.bound_formula)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mp_stats() {
        let s = automaton_stats(Objective::MeanPayoff { max_weight: 2 }, 4, 1 << 20).unwrap();
        assert_eq!(s.states, 7);
        assert_eq!(s.reachable_states, Some(7));
        assert_eq!(s.alphabet_size, 5);
        assert_eq!(s.bound, 7.0);
    }

    #[test]
    fn states_within_bounds() {
        for objective in [
            Objective::Parity { d: 4 },
            Objective::ParityOrMp { d: 2, max_weight: 1 },
            Objective::DisjMp { dim: 2, max_weight: 2 },
        ] {
            for n in 1..10 {
                let s = automaton_stats(objective, n, 1 << 16).unwrap();
                assert!(s.states as f64 <= s.bound, "{objective} n={n}");
                if let Some(r) = s.reachable_states {
                    assert!(r <= s.states);
                }
            }
        }
    }

    #[test]
    fn display_is_tab_separated() {
        let s = automaton_stats(Objective::Safety, 3, 0).unwrap();
        assert_eq!(
            s.to_string(),
            "objective\tsafety\nn\t3\nstates\t1\nreachable_states\t-\nalphabet_size\t1\nbound\t1\nbound_formula\t1\n"
        );
    }
}
