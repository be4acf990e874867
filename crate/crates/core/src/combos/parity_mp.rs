use crate::automaton::{AutomatonError, SafetyAutomaton, SharedAutomaton, StateId};
use crate::color::{Alphabet, ColorRef};

/// A state of [`ParityMpSeparator`]: the largest priority read since the
/// last reset, a parity-automaton state and a mean-payoff-automaton state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ComboState {
    pub priority: u32,
    pub parity: StateId,
    pub mp: StateId,
}

/// Separating automaton for `Parity_d ∨ MP_N`, built from a parity separator
/// `A_P` and a mean-payoff separator `A_MP`.
///
/// It runs `A_MP` on the weights while remembering the largest priority seen
/// since the last reset. When `A_MP` gets stuck, the letter's weight is
/// dropped, `A_P` reads the remembered priority (maxed with the current
/// one), the memory goes back to 0 and `A_MP` restarts from its initial
/// state. The automaton rejects only when `A_P` gets stuck on a reset.
#[derive(Clone)]
pub struct ParityMpSeparator {
    parity: SharedAutomaton,
    mp: SharedAutomaton,
    d: u32,
    max_weight: i64,
    initial_priority: u32,
    state_count: usize,
}

pub fn parity_mp_separator(
    parity: SharedAutomaton,
    mp: SharedAutomaton,
    d: u32,
) -> Result<ParityMpSeparator, AutomatonError> {
    let expected = Alphabet::Priorities { d };
    if parity.alphabet() != expected {
        return Err(AutomatonError::AlphabetMismatch { left: expected, right: parity.alphabet() });
    }
    let Alphabet::Weights { max_weight } = mp.alphabet() else {
        return Err(AutomatonError::AlphabetMismatch {
            left: Alphabet::Weights { max_weight: 0 },
            right: mp.alphabet(),
        });
    };
    let state_count = (d as usize + 1)
        .checked_mul(parity.state_count())
        .and_then(|s| s.checked_mul(mp.state_count()))
        .ok_or_else(|| AutomatonError::TooLarge("parity-mp state space".into()))?;
    Ok(ParityMpSeparator { parity, mp, d, max_weight, initial_priority: 0, state_count })
}

impl ParityMpSeparator {
    /// Replaces the initial priority memory, which defaults to 0.
    pub fn with_initial_priority(mut self, priority: u32) -> Result<ParityMpSeparator, AutomatonError> {
        if priority > self.d {
            return Err(AutomatonError::InvalidParameter(format!(
                "initial priority {priority} exceeds d={}",
                self.d
            )));
        }
        self.initial_priority = priority;
        Ok(self)
    }

    pub fn encode(&self, state: ComboState) -> StateId {
        (state.priority as usize * self.parity.state_count() + state.parity) * self.mp.state_count() + state.mp
    }

    pub fn decode(&self, id: StateId) -> ComboState {
        let mp = id % self.mp.state_count();
        let rest = id / self.mp.state_count();
        ComboState {
            priority: (rest / self.parity.state_count()) as u32,
            parity: rest % self.parity.state_count(),
            mp,
        }
    }

    pub fn step(&self, state: ComboState, priority: u32, weight: i64) -> Option<ComboState> {
        let seen = state.priority.max(priority);
        match self.mp.delta(state.mp, ColorRef::Weight(weight)) {
            Some(mp) => Some(ComboState { priority: seen, parity: state.parity, mp }),
            None => self.parity.delta(state.parity, ColorRef::Priority(seen)).map(|parity| ComboState {
                priority: 0,
                parity,
                mp: self.mp.initial(),
            }),
        }
    }
}

impl SafetyAutomaton for ParityMpSeparator {
    fn alphabet(&self) -> Alphabet {
        Alphabet::Pairs { d: self.d, max_weight: self.max_weight }
    }

    fn state_count(&self) -> usize {
        self.state_count
    }

    fn initial(&self) -> StateId {
        self.encode(ComboState {
            priority: self.initial_priority,
            parity: self.parity.initial(),
            mp: self.mp.initial(),
        })
    }

    fn delta(&self, state: StateId, letter: ColorRef<'_>) -> Option<StateId> {
        let ColorRef::Pair(p, w) = letter else { return None };
        if p > self.d {
            return None;
        }
        self.step(self.decode(state), p, w).map(|s| self.encode(s))
    }

    fn describe_state(&self, state: StateId) -> String {
        let s = self.decode(state);
        format!(
            "({},{},{})",
            s.priority,
            self.parity.describe_state(s.parity),
            self.mp.describe_state(s.mp)
        )
    }
}
