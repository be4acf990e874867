use crate::color::{Alphabet, ColorRef};

use super::{AutomatonError, SafetyAutomaton, SharedAutomaton, StateId};

/// The sequential product `⟨A1, ..., Ap⟩`.
///
/// States are the disjoint union of the parts' states, numbered part by
/// part. A run starts in the first part; when the current part has no
/// transition, the letter is consumed and the run moves to the initial
/// state of the next part. An undefined transition in the last part is
/// undefined in the product.
///
/// The left-nested product `⟨⟨A1, A2⟩, A3⟩` behaves exactly like the flat
/// `⟨A1, A2, A3⟩`, so folds are stored flat.
pub struct SequentialProduct {
    alphabet: Alphabet,
    parts: Vec<SharedAutomaton>,
    offsets: Vec<usize>,
}

/// `⟨a1, a2⟩`.
pub fn sequential_product(a1: SharedAutomaton, a2: SharedAutomaton) -> Result<SequentialProduct, AutomatonError> {
    sequential_fold(vec![a1, a2])
}

/// `⟨A1, ..., Ap⟩ = ⟨⟨A1, ..., Ap-1⟩, Ap⟩`. State count is the sum of the
/// parts' state counts.
pub fn sequential_fold(parts: Vec<SharedAutomaton>) -> Result<SequentialProduct, AutomatonError> {
    let first = parts.first().ok_or(AutomatonError::EmptyFold)?;
    let alphabet = first.alphabet();
    if let Some(other) = parts.iter().find(|a| a.alphabet() != alphabet) {
        return Err(AutomatonError::AlphabetMismatch { left: alphabet, right: other.alphabet() });
    }
    let mut offsets = Vec::with_capacity(parts.len() + 1);
    let mut total = 0usize;
    offsets.push(0);
    for part in &parts {
        total = total
            .checked_add(part.state_count())
            .ok_or_else(|| AutomatonError::TooLarge("state count overflow".into()))?;
        offsets.push(total);
    }
    Ok(SequentialProduct { alphabet, parts, offsets })
}

impl SequentialProduct {
    pub fn parts(&self) -> &[SharedAutomaton] {
        &self.parts
    }

    /// The part a product state belongs to and its local state there.
    pub fn locate(&self, state: StateId) -> (usize, StateId) {
        let part = self.offsets.partition_point(|&o| o <= state) - 1;
        (part, state - self.offsets[part])
    }

    /// The product state for `local` in part `part`.
    pub fn state_of(&self, part: usize, local: StateId) -> StateId {
        self.offsets[part] + local
    }
}

impl SafetyAutomaton for SequentialProduct {
    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    fn state_count(&self) -> usize {
        *self.offsets.last().expect("offsets start with 0")
    }

    fn initial(&self) -> StateId {
        self.parts[0].initial()
    }

    fn delta(&self, state: StateId, letter: ColorRef<'_>) -> Option<StateId> {
        let (part, local) = self.locate(state);
        match self.parts[part].delta(local, letter) {
            Some(next) => Some(self.offsets[part] + next),
            None => self
                .parts
                .get(part + 1)
                .map(|following| self.offsets[part + 1] + following.initial()),
        }
    }

    fn describe_state(&self, state: StateId) -> String {
        let (part, local) = self.locate(state);
        format!("{part}:{}", self.parts[part].describe_state(local))
    }
}
