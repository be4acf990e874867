use crate::color::{Alphabet, Color, ColorRef};

use super::{AutomatonError, SafetyAutomaton, StateId};

const UNDEFINED: u32 = u32::MAX;

/// An automaton whose transition function is a stored table indexed by
/// state and letter position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableAutomaton {
    alphabet: Alphabet,
    state_count: usize,
    initial: StateId,
    letters: usize,
    table: Vec<u32>,
}

impl TableAutomaton {
    /// Builds an automaton from explicit transitions; missing entries are
    /// undefined. Two transitions for the same state and letter are an error.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: StateId,
        transitions: impl IntoIterator<Item = (StateId, Color, StateId)>,
    ) -> Result<TableAutomaton, AutomatonError> {
        let mut aut = TableAutomaton::undefined(alphabet, state_count, initial)?;
        for (from, letter, to) in transitions {
            if from >= state_count || to >= state_count {
                return Err(AutomatonError::InvalidParameter(format!(
                    "transition {from} -{letter}-> {to} leaves the {state_count} states"
                )));
            }
            let Some(i) = alphabet.index_of(letter.as_ref()) else {
                return Err(AutomatonError::LetterOutsideAlphabet { letter, alphabet });
            };
            let slot = &mut aut.table[from * aut.letters + i];
            if *slot != UNDEFINED && *slot as usize != to {
                return Err(AutomatonError::InvalidParameter(format!(
                    "two transitions from {from} on {letter}"
                )));
            }
            *slot = to as u32;
        }
        Ok(aut)
    }

    /// Stores the whole transition function of `aut`. Fails if the table
    /// would have more than `max_entries` cells.
    pub fn tabulate<A: SafetyAutomaton + ?Sized>(aut: &A, max_entries: usize) -> Result<TableAutomaton, AutomatonError> {
        let alphabet = aut.alphabet();
        let cells = (aut.state_count() as u64).saturating_mul(alphabet.size());
        if cells > max_entries as u64 {
            return Err(AutomatonError::TooLarge(format!("{cells} table cells")));
        }
        let mut table = TableAutomaton::undefined(alphabet, aut.state_count(), aut.initial())?;
        let letters = alphabet.letters();
        for q in 0..aut.state_count() {
            for (i, letter) in letters.iter().enumerate() {
                if let Some(t) = aut.delta(q, letter.as_ref()) {
                    table.table[q * table.letters + i] = t as u32;
                }
            }
        }
        Ok(table)
    }

    fn undefined(alphabet: Alphabet, state_count: usize, initial: StateId) -> Result<TableAutomaton, AutomatonError> {
        if initial >= state_count {
            return Err(AutomatonError::InvalidParameter(format!(
                "initial state {initial} out of {state_count}"
            )));
        }
        if state_count >= UNDEFINED as usize {
            return Err(AutomatonError::TooLarge(format!("{state_count} states")));
        }
        let letters = alphabet.size() as usize;
        Ok(TableAutomaton {
            alphabet,
            state_count,
            initial,
            letters,
            table: vec![UNDEFINED; state_count * letters],
        })
    }
}

impl SafetyAutomaton for TableAutomaton {
    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn state_count(&self) -> usize {
        self.state_count
    }

    fn initial(&self) -> StateId {
        self.initial
    }

    fn delta(&self, state: StateId, letter: ColorRef<'_>) -> Option<StateId> {
        let i = self.alphabet.index_of(letter)?;
        match self.table[state * self.letters + i] {
            UNDEFINED => None,
            t => Some(t as usize),
        }
    }
}
